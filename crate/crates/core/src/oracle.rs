//! Brute-force cross-checks for the endpoint solver and the skeleton
//! generator. Nothing here calls into [`crate::system::solve_endpoints`] or
//! [`crate::edgepath::enumerate_skeletons`]; both are re-derived from the
//! diagram primitives with plain integer search.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{is_farey_edge, Vertex};
use crate::edgepath::Skeleton;
use crate::system::{self, EndpointSolution, Endpoints, MontesinosKnot};
use crate::{Error, Fraction};

/// Integer weights `(k_i, m - k_i)` on the open edge of each moving path,
/// with the common value `D = k_i q_i + (m - k_i) s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub m: i64,
    pub k: Vec<i64>,
    pub common: i128,
}

impl WeightVector {
    /// `t_i = k_i / m`, `c = D / m`.
    pub fn normalize(&self) -> EndpointSolution {
        EndpointSolution {
            t: self.k.iter().map(|&k| Fraction::ratio(k, self.m)).collect(),
            c: Fraction::new(self.common, self.m).expect("m >= 1"),
        }
    }
}

fn small(x: &num_bigint::BigInt) -> Result<i128, Error> {
    i128::try_from(x).map_err(|_| Error::BadChoice(format!("{x} is too large for the brute-force oracle")))
}

struct Open {
    p: i128,
    q: i128,
    r: i128,
    s: i128,
}

/// Every admissible integer weight vector with `m <= m_max`: weights
/// `1 <= k_i <= m`, common endpoint with `D > m` (so `u > 0`), `D >= q_j m`
/// for every constant path on `P_j/q_j`, and
/// `sum_i (k_i p_i + (m - k_i) r_i) + D sum_j P_j/q_j = 0`.
pub fn brute_force_endpoints(knot: &MontesinosKnot, choices: &[Skeleton], m_max: i64) -> Result<Vec<WeightVector>, Error> {
    if choices.len() != knot.len() {
        return Err(Error::BadChoice(format!("{} choices for {} tangles", choices.len(), knot.len())));
    }
    let mut open = Vec::new();
    // Constant tangles as (P, q).
    let mut constants = Vec::new();
    for (choice, r) in choices.iter().zip(knot.tangles()) {
        match choice {
            Skeleton::Constant => constants.push((small(r.numer())?, small(r.denom())?)),
            Skeleton::Walk(w) if w.len() >= 2 => {
                let (left, right) = (w[w.len() - 1].label(), w[w.len() - 2].label());
                if left.is_infinite() || right.is_infinite() {
                    return Err(Error::BadChoice("open edge touches <inf>".into()));
                }
                open.push(Open { p: small(left.numer())?, q: small(left.denom())?, r: small(right.numer())?, s: small(right.denom())? });
            }
            Skeleton::Walk(_) => return Err(Error::BadChoice("a moving path needs at least one edge".into())),
        }
    }
    if open.is_empty() {
        return Err(Error::BadChoice("at least one moving path is required".into()));
    }

    let mut found = Vec::new();
    let mut k = vec![0i64; open.len()];
    for m in 1..=m_max {
        scan(&open, &constants, m, 0, None, &mut k, &mut found);
    }
    Ok(found)
}

fn scan(open: &[Open], constants: &[(i128, i128)], m: i64, i: usize, common: Option<i128>, k: &mut Vec<i64>, found: &mut Vec<WeightVector>) {
    if i == open.len() {
        let d = common.unwrap();
        let mm = m as i128;
        let admissible = k.iter().all(|&k| k >= 1) && d > mm && constants.iter().all(|&(_, q)| d >= q * mm);
        if !admissible {
            return;
        }
        // v-sum times the common denominator D * prod(q_j).
        let prod: i128 = constants.iter().map(|&(_, q)| q).product();
        let moving: i128 = open.iter().zip(k.iter()).map(|(e, &k)| k as i128 * e.p + (mm - k as i128) * e.r).sum();
        let fixed: i128 = constants.iter().map(|&(p, q)| p * (prod / q)).sum();
        if moving * prod + d * fixed == 0 {
            found.push(WeightVector { m, k: k.clone(), common: d });
        }
        return;
    }
    let e = &open[i];
    for ki in 0..=m {
        let d = ki as i128 * e.q + (m - ki) as i128 * e.s;
        if common.is_some_and(|c| c != d) {
            continue;
        }
        k[i] = ki;
        scan(open, constants, m, i + 1, Some(d), k, found);
    }
}

/// Candidate neighbors of `v` found by scanning all `r/s` with `s <= q`
/// (and `inf`) for the determinant rule.
fn neighbors_by_search(v: &Vertex) -> Vec<Vertex> {
    let label = v.label();
    if label.is_infinite() {
        // Every neighbor of <inf> is an integer with larger u.
        return Vec::new();
    }
    let p = i128::try_from(label.numer()).expect("small tangle");
    let q = i128::try_from(label.denom()).expect("small tangle");
    let mut out = Vec::new();
    if q == 1 {
        out.push(Vertex::Infinity);
    }
    for s in 1..=q {
        let centre = (p * s).div_euclid(q);
        for r in centre - 2..=centre + 2 {
            let f = Fraction::new(r as i64, s as i64).unwrap();
            if f.denom() == &num_bigint::BigInt::from(s) && is_farey_edge(&label, &f) {
                out.push(Vertex::angle(f));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Every walk from `<tangle>` with at most `max_edges` edges obeying the
/// edgepath rules, found by unpruned search: steps go to any diagram
/// neighbor, and each extension is then checked for weakly decreasing `u`,
/// no retracing, no two sides of one triangle, and no step along the
/// `v`-axis. The constant marker is included.
pub fn exhaustive_paths(tangle: &Fraction, max_edges: usize) -> Vec<Skeleton> {
    let mut out = BTreeSet::new();
    out.insert(Skeleton::Constant);
    let mut frontier = vec![vec![Vertex::angle(tangle.clone())]];
    while let Some(walk) = frontier.pop() {
        if walk.len() <= max_edges {
            let here = walk.last().unwrap();
            for next in neighbors_by_search(here) {
                if next.u() > here.u() || (next.is_integer() && here.is_integer()) {
                    continue;
                }
                if walk.len() >= 2 {
                    let back = &walk[walk.len() - 2];
                    if &next == back || is_farey_edge(&back.label(), &next.label()) {
                        continue;
                    }
                }
                let mut longer = walk.clone();
                longer.push(next);
                frontier.push(longer);
            }
        }
        out.insert(Skeleton::Walk(walk));
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheck {
    pub combinations: usize,
    pub solved: usize,
    pub degenerate: usize,
    pub mismatches: Vec<String>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn smallest_scale(sol: &EndpointSolution) -> num_bigint::BigInt {
    use num_integer::Integer;
    sol.t.iter().chain(core::iter::once(&sol.c)).fold(num_bigint::BigInt::from(1), |acc, f| acc.lcm(f.denom()))
}

/// Runs the solver and the brute-force search on every type I skeleton
/// combination of `knot`, comparing after normalization. Rank-deficient
/// combinations are counted but not compared.
pub fn cross_check(knot: &MontesinosKnot, m_max: i64) -> Result<CrossCheck, Error> {
    let mut report = CrossCheck::default();
    for choices in system::type_one_choices(knot, system::DEFAULT_COMBINATION_CAP)? {
        report.combinations += 1;
        let solver = system::solve_endpoints(knot, &choices)?;
        if solver == Endpoints::Degenerate {
            report.degenerate += 1;
            continue;
        }
        let brute: BTreeSet<_> = brute_force_endpoints(knot, &choices, m_max)?
            .iter()
            .map(|w| {
                let n = w.normalize();
                (n.t, n.c)
            })
            .collect();
        let expected: BTreeSet<_> = match solver {
            Endpoints::Solved(sol) => {
                report.solved += 1;
                if smallest_scale(&sol) <= num_bigint::BigInt::from(m_max) {
                    [(sol.t, sol.c)].into_iter().collect()
                } else {
                    BTreeSet::new()
                }
            }
            _ => BTreeSet::new(),
        };
        if brute != expected {
            let describe = |set: &BTreeSet<(Vec<Fraction>, Fraction)>| format!("{set:?}");
            let shown: Vec<String> = choices.iter().map(|c| format!("{c}")).collect();
            report.mismatches.push(format!("[{}]: solver {} vs brute force {}", shown.join("; "), describe(&expected), describe(&brute)));
        }
    }
    Ok(report)
}
