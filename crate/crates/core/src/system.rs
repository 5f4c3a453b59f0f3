//! Edgepath systems: one edgepath per tangle with a common endpoint line.
//!
//! Type I endpoints are found by solving an exact linear system per
//! combination of skeletons. For a moving path whose open last edge runs
//! from `<r/s>` (right) to `<p/q>` (left), stopping at weight `t` on the left
//! vertex puts the endpoint at
//!
//! ```text
//! u = 1 - 1/c,   v = (t p + (1 - t) r) / c,   c = t q + (1 - t) s.
//! ```
//!
//! All moving paths share `c`, a constant path on `P/Q` sits at `v = P/Q`,
//! and the `v`-coordinates must sum to zero. With `M` moving paths that is
//! `M + 1` linear equations in `t_1, ..., t_M, c`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::diagram::{is_farey_edge, EdgeKind, DiagramEdge, Vertex};
use crate::edgepath::{enumerate_skeletons, Edgepath, PathType, Skeleton};
use crate::linalg::{self, LinearSolution};
use crate::{Error, Fraction};

pub const DEFAULT_COMBINATION_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MontesinosKnot {
    tangles: Vec<Fraction>,
}

impl MontesinosKnot {
    pub fn new(tangles: Vec<Fraction>) -> Result<Self, Error> {
        if tangles.len() < 3 {
            return Err(Error::TooFewTangles(tangles.len()));
        }
        if let Some(r) = tangles.iter().find(|r| r.is_infinite() || r.is_integer()) {
            return Err(Error::IntegerTangle(r.clone()));
        }
        let even = tangles.iter().filter(|r| r.denom().is_even()).count();
        if even > 1 {
            return Err(Error::NotAKnot(even));
        }
        Ok(MontesinosKnot { tangles })
    }

    pub fn tangles(&self) -> &[Fraction] {
        &self.tangles
    }

    pub fn len(&self) -> usize {
        self.tangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tangles.is_empty()
    }
}

impl FromStr for MontesinosKnot {
    type Err = Error;

    /// Comma-separated fractions, e.g. `-1/2,2/5,1/11`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let tangles = s.split(',').map(str::parse).collect::<Result<Vec<Fraction>, _>>()?;
        MontesinosKnot::new(tangles)
    }
}

impl fmt::Display for MontesinosKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.tangles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgepathSystem {
    knot: MontesinosKnot,
    paths: Vec<Edgepath>,
    common_u: Fraction,
    system_type: PathType,
}

impl EdgepathSystem {
    /// Assembles a system, taking the endpoint line from the first path. The
    /// result is not validated; see [`validate_system`].
    pub fn from_paths(knot: MontesinosKnot, paths: Vec<Edgepath>) -> Result<Self, Error> {
        if paths.len() != knot.len() {
            return Err(Error::BadChoice(format!("{} paths for {} tangles", paths.len(), knot.len())));
        }
        let first = paths.first().ok_or_else(|| Error::BadChoice("no paths".into()))?;
        let common_u = first.end_uv()?.0;
        let system_type = PathType::of_u(&common_u);
        Ok(EdgepathSystem { knot, paths, common_u, system_type })
    }

    pub fn knot(&self) -> &MontesinosKnot {
        &self.knot
    }

    pub fn paths(&self) -> &[Edgepath] {
        &self.paths
    }

    pub fn common_u(&self) -> &Fraction {
        &self.common_u
    }

    pub fn system_type(&self) -> PathType {
        self.system_type
    }

    pub fn constant_count(&self) -> usize {
        self.paths.iter().filter(|p| p.is_constant()).count()
    }
}

impl fmt::Display for EdgepathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Weights on the left vertex of each moving path's open edge, in tangle
/// order, and the common effective denominator `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndpointSolution {
    pub t: Vec<Fraction>,
    pub c: Fraction,
}

impl EndpointSolution {
    pub fn u(&self) -> Fraction {
        Fraction::one() - self.c.recip()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoints {
    Solved(EndpointSolution),
    /// No solution, or a solution outside the admissible ranges.
    Infeasible,
    /// The linear system is rank deficient and consistent.
    Degenerate,
}

struct OpenEdge {
    left: Fraction,
    right: Fraction,
}

fn open_edge(walk: &[Vertex]) -> Result<OpenEdge, Error> {
    if walk.len() < 2 {
        return Err(Error::BadChoice("a moving path needs at least one edge".into()));
    }
    let (left, right) = (&walk[walk.len() - 1], &walk[walk.len() - 2]);
    let edge = DiagramEdge::new(left.clone(), right.clone())?;
    if edge.kind() != EdgeKind::Farey {
        return Err(Error::BadChoice(format!("open edge {edge} does not lie in u > 0")));
    }
    Ok(OpenEdge { left: left.label(), right: right.label() })
}

/// Solves the endpoint equations for one skeleton per tangle.
pub fn solve_endpoints(knot: &MontesinosKnot, choices: &[Skeleton]) -> Result<Endpoints, Error> {
    if choices.len() != knot.len() {
        return Err(Error::BadChoice(format!("{} choices for {} tangles", choices.len(), knot.len())));
    }
    let mut moving = Vec::new();
    let mut constant_sum = Fraction::zero();
    let mut constant_dens = Vec::new();
    for (choice, r) in choices.iter().zip(knot.tangles()) {
        match choice {
            Skeleton::Constant => {
                constant_sum = constant_sum + r;
                constant_dens.push(Fraction::integer(r.denom().clone()));
            }
            Skeleton::Walk(w) => {
                if w.first() != Some(&Vertex::Angle(r.clone())) {
                    return Err(Error::BadChoice(format!("walk for tangle {r} does not start at <{r}>")));
                }
                moving.push(open_edge(w)?);
            }
        }
    }
    let m = moving.len();
    if m == 0 {
        return Err(Error::BadChoice("at least one moving path is required".into()));
    }

    let width = m + 1;
    let mut a = Vec::with_capacity(width);
    let mut b = Vec::with_capacity(width);
    // t_i (q_i - s_i) - c = -s_i
    for (i, e) in moving.iter().enumerate() {
        let mut row = vec![Fraction::zero(); width];
        row[i] = Fraction::integer(e.left.denom() - e.right.denom());
        row[m] = Fraction::integer(-1);
        a.push(row);
        b.push(Fraction::integer(-e.right.denom().clone()));
    }
    // sum_i t_i (p_i - r_i) + c * sum_const R_j = -sum_i r_i
    let mut row = vec![Fraction::zero(); width];
    for (i, e) in moving.iter().enumerate() {
        row[i] = Fraction::integer(e.left.numer() - e.right.numer());
    }
    row[m] = constant_sum;
    a.push(row);
    b.push(-moving.iter().map(|e| Fraction::integer(e.right.numer().clone())).sum::<Fraction>());

    let x = match linalg::solve(&a, &b, width) {
        LinearSolution::Unique(x) => x,
        LinearSolution::Underdetermined { .. } => return Ok(Endpoints::Degenerate),
        LinearSolution::Inconsistent => return Ok(Endpoints::Infeasible),
    };
    let c = x[m].clone();
    let t = x[..m].to_vec();
    let in_range = t.iter().all(|t| t.is_positive() && t <= &Fraction::one());
    let type_one = c > Fraction::one();
    let constants_fit = constant_dens.iter().all(|q| &c >= q);
    if in_range && type_one && constants_fit {
        Ok(Endpoints::Solved(EndpointSolution { t, c }))
    } else {
        Ok(Endpoints::Infeasible)
    }
}

/// Turns solved skeletons into a type I system.
pub fn build_type_one(knot: &MontesinosKnot, choices: &[Skeleton], sol: &EndpointSolution) -> Result<EdgepathSystem, Error> {
    let mut ts = sol.t.iter();
    let mut paths = Vec::with_capacity(choices.len());
    for (choice, r) in choices.iter().zip(knot.tangles()) {
        paths.push(match choice {
            Skeleton::Constant => Edgepath::Constant {
                tangle: r.clone(),
                weight: Fraction::integer(r.denom().clone()) / &sol.c,
            },
            Skeleton::Walk(w) => {
                let t = ts.next().ok_or_else(|| Error::BadChoice("solution too short".into()))?;
                Edgepath::Walk {
                    tangle: r.clone(),
                    vertices: w.clone(),
                    final_weight: if t.is_one() { None } else { Some(t.clone()) },
                }
            }
        });
    }
    Ok(EdgepathSystem { knot: knot.clone(), paths, common_u: sol.u(), system_type: PathType::I })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Enumeration {
    pub systems: Vec<EdgepathSystem>,
    /// Skeleton combinations whose endpoint equations have a continuum of
    /// solutions. They are listed, not resolved.
    pub degenerate: Vec<Vec<Skeleton>>,
}

struct Options {
    type_one: Vec<Vec<Skeleton>>,
    type_two: Vec<Vec<Skeleton>>,
    type_three: Vec<Vec<Skeleton>>,
}

fn skeleton_options(knot: &MontesinosKnot) -> Result<Options, Error> {
    let mut o = Options { type_one: Vec::new(), type_two: Vec::new(), type_three: Vec::new() };
    for r in knot.tangles() {
        let all = enumerate_skeletons(r)?;
        let mut one = Vec::new();
        let mut two = Vec::new();
        let mut three = Vec::new();
        for s in all {
            match s.last() {
                None => one.push(s),
                Some(Vertex::Infinity) => three.push(s),
                Some(_) if s.edges() == 0 => {}
                Some(v) => {
                    if v.is_integer() {
                        two.push(s.clone());
                    }
                    one.push(s);
                }
            }
        }
        o.type_one.push(one);
        o.type_two.push(two);
        o.type_three.push(three);
    }
    Ok(o)
}

fn combinations(options: &[Vec<Skeleton>]) -> u128 {
    options.iter().fold(1u128, |acc, o| acc.saturating_mul(o.len() as u128))
}

/// Odometer over the cartesian product, last factor fastest.
fn for_each_combination(options: &[Vec<Skeleton>], mut f: impl FnMut(Vec<Skeleton>) -> Result<(), Error>) -> Result<(), Error> {
    if options.iter().any(Vec::is_empty) {
        return Ok(());
    }
    let mut idx = vec![0usize; options.len()];
    loop {
        f(idx.iter().zip(options).map(|(&i, o)| o[i].clone()).collect())?;
        let mut k = options.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn check_cap(required: u128, cap: u64) -> Result<(), Error> {
    if required > cap as u128 {
        Err(Error::CapExceeded { cap, required })
    } else {
        Ok(())
    }
}

/// Every skeleton combination considered for type I systems, in enumeration
/// order. Combinations made only of constant markers are left out.
pub fn type_one_choices(knot: &MontesinosKnot, cap: u64) -> Result<Vec<Vec<Skeleton>>, Error> {
    let o = skeleton_options(knot)?;
    check_cap(combinations(&o.type_one), cap)?;
    let mut out = Vec::new();
    for_each_combination(&o.type_one, |c| {
        if c.iter().any(|s| s != &Skeleton::Constant) {
            out.push(c);
        }
        Ok(())
    })?;
    Ok(out)
}

pub fn enumerate_systems(knot: &MontesinosKnot) -> Result<Enumeration, Error> {
    enumerate_systems_capped(knot, DEFAULT_COMBINATION_CAP)
}

/// All type I, II and III systems of `knot`, in that order.
pub fn enumerate_systems_capped(knot: &MontesinosKnot, cap: u64) -> Result<Enumeration, Error> {
    let o = skeleton_options(knot)?;
    let required = combinations(&o.type_one)
        .saturating_add(combinations(&o.type_two))
        .saturating_add(combinations(&o.type_three));
    check_cap(required, cap)?;

    let mut out = Enumeration::default();
    for_each_combination(&o.type_one, |choices| {
        if choices.iter().all(|s| s == &Skeleton::Constant) {
            // Every u in the common range works when the tangles sum to zero.
            if knot.tangles().iter().cloned().sum::<Fraction>().is_zero() {
                out.degenerate.push(choices);
            }
            return Ok(());
        }
        match solve_endpoints(knot, &choices)? {
            Endpoints::Solved(sol) => out.systems.push(build_type_one(knot, &choices, &sol)?),
            Endpoints::Degenerate => out.degenerate.push(choices),
            Endpoints::Infeasible => {}
        }
        Ok(())
    })?;
    for_each_combination(&o.type_two, |choices| {
        let sum: Fraction = choices.iter().filter_map(|s| s.last()).map(Vertex::label).sum();
        if sum.is_zero() {
            out.systems.push(full_walks(knot, &choices, Fraction::zero(), PathType::II));
        }
        Ok(())
    })?;
    out.systems.extend(type_three_systems_from(knot, &o.type_three)?);
    Ok(out)
}

fn full_walks(knot: &MontesinosKnot, choices: &[Skeleton], common_u: Fraction, system_type: PathType) -> EdgepathSystem {
    let paths = choices
        .iter()
        .zip(knot.tangles())
        .map(|(s, r)| match s {
            Skeleton::Walk(w) => Edgepath::Walk { tangle: r.clone(), vertices: w.clone(), final_weight: None },
            Skeleton::Constant => unreachable!("constant markers only occur in type I choices"),
        })
        .collect();
    EdgepathSystem { knot: knot.clone(), paths, common_u, system_type }
}

fn type_three_systems_from(knot: &MontesinosKnot, options: &[Vec<Skeleton>]) -> Result<Vec<EdgepathSystem>, Error> {
    let mut out = Vec::new();
    for_each_combination(options, |choices| {
        out.push(full_walks(knot, &choices, Fraction::integer(-1), PathType::III));
        Ok(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    E1,
    E2,
    E3,
    E4,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub path: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.path {
            Some(i) => write!(f, "({}) violated by path {}: {}", self.condition, i + 1, self.detail),
            None => write!(f, "({}) violated: {}", self.condition, self.detail),
        }
    }
}

fn violation(condition: Condition, path: Option<usize>, detail: String) -> Result<(), Violation> {
    Err(Violation { condition, path, detail })
}

/// Checks the four edgepath conditions directly from the path data,
/// independently of how the system was produced.
pub fn validate_system(sys: &EdgepathSystem) -> Result<(), Violation> {
    let tangles = sys.knot.tangles();
    if sys.paths.len() != tangles.len() {
        return violation(Condition::E1, None, format!("{} paths for {} tangles", sys.paths.len(), tangles.len()));
    }

    // (E1) start on <R_i> - <R_i>o; anything not starting at <R_i> is constant.
    for (i, (path, r)) in sys.paths.iter().zip(tangles).enumerate() {
        if path.tangle() != r {
            return violation(Condition::E1, Some(i), format!("path serves {} instead of {r}", path.tangle()));
        }
        match path {
            Edgepath::Constant { weight, .. } => {
                if !weight.is_positive() || weight > &Fraction::one() {
                    return violation(Condition::E1, Some(i), format!("constant weight {weight} outside (0, 1]"));
                }
            }
            Edgepath::Walk { vertices, final_weight, .. } => {
                if vertices.first() != Some(&Vertex::Angle(r.clone())) {
                    return violation(Condition::E1, Some(i), format!("walk does not start at <{r}>"));
                }
                if let Some(t) = final_weight {
                    if vertices.len() < 2 || !t.is_positive() || t > &Fraction::one() {
                        return violation(Condition::E1, Some(i), format!("final weight {t} is not a point of the last edge"));
                    }
                }
            }
        }
    }

    // (E2) minimality.
    for (i, path) in sys.paths.iter().enumerate() {
        let Edgepath::Walk { vertices, .. } = path else { continue };
        if vertices.iter().any(|v| matches!(v, Vertex::Circle(_))) {
            return violation(Condition::E2, Some(i), "walk visits a circle vertex".into());
        }
        for (j, pair) in vertices.windows(2).enumerate() {
            if !is_farey_edge(&pair[0].label(), &pair[1].label()) {
                return violation(Condition::E2, Some(i), format!("step {} from {} to {} is not an edge", j + 1, pair[0], pair[1]));
            }
        }
        for (j, w) in vertices.windows(3).enumerate() {
            if w[0] == w[2] {
                return violation(Condition::E2, Some(i), format!("step {} retraces {}", j + 2, w[1]));
            }
            if is_farey_edge(&w[0].label(), &w[2].label()) {
                return violation(
                    Condition::E2,
                    Some(i),
                    format!("steps {} and {} are two sides of the triangle {}, {}, {}", j + 1, j + 2, w[0], w[1], w[2]),
                );
            }
        }
    }

    // (E4) weakly decreasing u; checked before (E3) needs oriented edges.
    let mut monotone = Ok(());
    'paths: for (i, path) in sys.paths.iter().enumerate() {
        let Edgepath::Walk { vertices, .. } = path else { continue };
        for pair in vertices.windows(2) {
            if pair[1].u() > pair[0].u() {
                monotone = violation(Condition::E4, Some(i), format!("u increases from {} to {}", pair[0], pair[1]));
                break 'paths;
            }
        }
    }

    // (E3) common vertical line, v summing to zero.
    let mut ends = Vec::with_capacity(sys.paths.len());
    for (i, path) in sys.paths.iter().enumerate() {
        match path.end_uv() {
            Ok(uv) => ends.push(uv),
            Err(e) => {
                monotone?;
                return violation(Condition::E3, Some(i), format!("endpoint undefined: {e}"));
            }
        }
    }
    let u0 = ends[0].0.clone();
    if let Some(i) = ends.iter().position(|(u, _)| u != &u0) {
        return violation(Condition::E3, Some(i), format!("endpoint u = {} differs from {u0}", ends[i].0));
    }
    if u0 != sys.common_u || PathType::of_u(&u0) != sys.system_type {
        return violation(Condition::E3, None, format!("recorded line u = {} ({}) but endpoints lie on u = {u0}", sys.common_u, sys.system_type));
    }
    let v_sum: Fraction = ends.into_iter().map(|(_, v)| v).sum();
    if !v_sum.is_zero() {
        return violation(Condition::E3, None, format!("endpoint v-coordinates sum to {v_sum}"));
    }
    monotone
}

/// `(p mod 2, q mod 2)`, with `inf = 1/0`.
fn parity(f: &Fraction) -> (bool, bool) {
    (f.numer().is_odd(), f.denom().is_odd())
}

/// The two parity conditions a Seifert surface's type III system satisfies:
/// each path uses edges of a single mod-2 type, and an even number of paths
/// pass through an odd integer just before `<inf>`.
pub fn is_seifert_candidate(sys: &EdgepathSystem) -> bool {
    if sys.system_type != PathType::III {
        return false;
    }
    let mut odd_penultimate = 0;
    for path in &sys.paths {
        let Edgepath::Walk { vertices, .. } = path else { return false };
        let kinds: BTreeSet<_> = vertices
            .windows(2)
            .map(|w| {
                let (a, b) = (parity(&w[0].label()), parity(&w[1].label()));
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        if kinds.len() > 1 {
            return false;
        }
        if vertices.len() >= 2 && vertices[vertices.len() - 2].label().numer().is_odd() {
            odd_penultimate += 1;
        }
    }
    odd_penultimate % 2 == 0
}

/// Finds the edgepath system of a Seifert surface among the type III systems.
/// All parity-passing systems must agree on their twist.
pub fn find_seifert_system(knot: &MontesinosKnot) -> Result<EdgepathSystem, Error> {
    let o = skeleton_options(knot)?;
    check_cap(combinations(&o.type_three), DEFAULT_COMBINATION_CAP)?;
    let mut passing = type_three_systems_from(knot, &o.type_three)?.into_iter().filter(is_seifert_candidate);
    let first = passing.next().ok_or(Error::NoSeifertReference)?;
    let twist = system_twist_raw(&first)?;
    let mut twists = vec![twist.clone()];
    for other in passing {
        let t = system_twist_raw(&other)?;
        if !twists.contains(&t) {
            twists.push(t);
        }
    }
    if twists.len() > 1 {
        twists.sort();
        return Err(Error::AmbiguousReference(twists));
    }
    Ok(first)
}

fn system_twist_raw(sys: &EdgepathSystem) -> Result<Fraction, Error> {
    sys.paths.iter().map(Edgepath::twist).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn walk(labels: &[&str]) -> Skeleton {
        Skeleton::Walk(labels.iter().map(|s| Vertex::angle(fr(s))).collect())
    }

    fn k11() -> MontesinosKnot {
        "-1/2,2/5,1/11".parse().unwrap()
    }

    #[test]
    fn knot_parsing() {
        assert_eq!(k11().to_string(), "-1/2,2/5,1/11");
        assert_eq!("-1/2,2/5".parse::<MontesinosKnot>(), Err(Error::TooFewTangles(2)));
        assert_eq!("1/2,3,1/5".parse::<MontesinosKnot>(), Err(Error::IntegerTangle(fr("3"))));
        assert_eq!("1/2,1/4,1/5".parse::<MontesinosKnot>(), Err(Error::NotAKnot(2)));
        assert!("1/2, x, 1/3".parse::<MontesinosKnot>().is_err());
    }

    #[test]
    fn endpoints_of_first_pair_system() {
        let choices = [walk(&["-1/2", "-1"]), walk(&["2/5", "1/2", "0"]), walk(&["1/11", "0"])];
        let Endpoints::Solved(sol) = solve_endpoints(&k11(), &choices).unwrap() else { panic!() };
        assert_eq!(sol.t, [fr("1/11"), fr("1/11"), fr("10/11")]);
        assert_eq!(sol.c, fr("21/11"));
        assert_eq!(sol.u(), fr("10/21"));
        let sys = build_type_one(&k11(), &choices, &sol).unwrap();
        let vs: Vec<_> = sys.paths().iter().map(|p| p.end_uv().unwrap().1).collect();
        assert_eq!(vs, [fr("-11/21"), fr("10/21"), fr("1/21")]);
        assert_eq!(validate_system(&sys), Ok(()));
    }

    #[test]
    fn endpoints_with_a_constant_path() {
        let choices = [Skeleton::Constant, walk(&["2/5", "1/2"]), walk(&["1/11", "0"])];
        let Endpoints::Solved(sol) = solve_endpoints(&k11(), &choices).unwrap() else { panic!() };
        assert_eq!(sol.t, [fr("1/2"), fr("3/4")]);
        assert_eq!(sol.c, fr("7/2"));
        assert_eq!(sol.u(), fr("5/7"));
        let sys = build_type_one(&k11(), &choices, &sol).unwrap();
        let vs: Vec<_> = sys.paths().iter().map(|p| p.end_uv().unwrap().1).collect();
        assert_eq!(vs, [fr("-1/2"), fr("3/7"), fr("1/14")]);
        assert_eq!(sys.paths()[0], Edgepath::Constant { tangle: fr("-1/2"), weight: fr("4/7") });
    }

    #[test]
    fn symmetric_tangles_give_a_continuum() {
        // Paths toward <0> from +-1/3 and +-1/5: equal c forces equal weights in
        // each pair, and then the v-sum vanishes for every c.
        let knot: MontesinosKnot = "1/3,-1/3,1/5,-1/5".parse().unwrap();
        let choices = [walk(&["1/3", "0"]), walk(&["-1/3", "0"]), walk(&["1/5", "0"]), walk(&["-1/5", "0"])];
        assert_eq!(solve_endpoints(&knot, &choices).unwrap(), Endpoints::Degenerate);
        // Breaking the symmetry with a third moving path pins the endpoint to u = 0.
        let knot: MontesinosKnot = "1/3,-1/3,1/5".parse().unwrap();
        let choices = [walk(&["1/3", "0"]), walk(&["-1/3", "0"]), walk(&["1/5", "0"])];
        assert_eq!(solve_endpoints(&knot, &choices).unwrap(), Endpoints::Infeasible);
    }

    #[test]
    fn bad_choices_are_errors() {
        assert!(solve_endpoints(&k11(), &[Skeleton::Constant, Skeleton::Constant]).is_err());
        assert!(solve_endpoints(&k11(), &[Skeleton::Constant, Skeleton::Constant, Skeleton::Constant]).is_err());
        let inf = [walk(&["-1/2", "-1", "inf"]), walk(&["2/5", "1/2"]), walk(&["1/11", "0"])];
        assert!(solve_endpoints(&k11(), &inf).is_err());
    }

    #[test]
    fn validation_catches_violations() {
        let choices = [walk(&["-1/2", "-1"]), walk(&["2/5", "1/2", "0"]), walk(&["1/11", "0"])];
        let Endpoints::Solved(sol) = solve_endpoints(&k11(), &choices).unwrap() else { panic!() };
        let good = build_type_one(&k11(), &choices, &sol).unwrap();

        let mut paths = good.paths().to_vec();
        paths[2] = Edgepath::Walk { tangle: fr("1/11"), vertices: vec![Vertex::angle(fr("1/11")), Vertex::angle(fr("0"))], final_weight: Some(fr("9/11")) };
        let bad = EdgepathSystem::from_paths(k11(), paths).unwrap();
        let v = validate_system(&bad).unwrap_err();
        assert_eq!((v.condition, v.path), (Condition::E3, Some(2)));

        let mut paths = good.paths().to_vec();
        paths[1] = Edgepath::Walk {
            tangle: fr("2/5"),
            vertices: ["2/5", "1/2", "2/5", "1/2"].iter().map(|s| Vertex::angle(fr(s))).collect(),
            final_weight: Some(fr("1/2")),
        };
        let v = validate_system(&EdgepathSystem::from_paths(k11(), paths).unwrap()).unwrap_err();
        assert_eq!((v.condition, v.path), (Condition::E2, Some(1)));

        let mut paths = good.paths().to_vec();
        paths[0] = Edgepath::Walk { tangle: fr("-1/2"), vertices: vec![Vertex::angle(fr("-1"))], final_weight: None };
        let v = validate_system(&EdgepathSystem::from_paths(k11(), paths).unwrap()).unwrap_err();
        assert_eq!((v.condition, v.path), (Condition::E1, Some(0)));
    }

    #[test]
    fn seifert_reference_for_k11() {
        let s = find_seifert_system(&k11()).unwrap();
        let penultimate: Vec<_> = s
            .paths()
            .iter()
            .map(|p| match p {
                Edgepath::Walk { vertices, .. } => vertices[vertices.len() - 2].label(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(penultimate, [fr("-1"), fr("0"), fr("1")]);
        assert_eq!(system_twist_raw(&s).unwrap(), fr("-18"));
    }

    #[test]
    fn odd_count_of_odd_penultimate_vertices_fails() {
        let paths = vec![
            Edgepath::Walk { tangle: fr("-1/2"), vertices: ["-1/2", "-1", "inf"].iter().map(|s| Vertex::angle(fr(s))).collect(), final_weight: None },
            Edgepath::Walk { tangle: fr("2/5"), vertices: ["2/5", "1/2", "0", "inf"].iter().map(|s| Vertex::angle(fr(s))).collect(), final_weight: None },
            Edgepath::Walk { tangle: fr("1/11"), vertices: ["1/11", "0", "inf"].iter().map(|s| Vertex::angle(fr(s))).collect(), final_weight: None },
        ];
        let sys = EdgepathSystem::from_paths(k11(), paths).unwrap();
        assert_eq!(validate_system(&sys), Ok(()));
        assert!(!is_seifert_candidate(&sys));
    }

    #[test]
    fn cap_is_a_hard_error() {
        assert!(matches!(enumerate_systems_capped(&k11(), 10), Err(Error::CapExceeded { cap: 10, .. })));
    }
}
