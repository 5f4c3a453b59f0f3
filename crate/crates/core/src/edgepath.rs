//! Edgepaths for one tangle.
//!
//! Edgepaths run from right to left: a non-constant edgepath starts at the
//! tangle's vertex `<R>` and moves toward smaller `u`. Each step goes from a
//! fraction to one of its two Farey parents, from an integer vertex to
//! `<inf>`, or stops. Moves along the `v`-axis are not part of the model:
//! a path that reaches `<z>` either stops there or leaves for `<inf>`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{farey_parents, same_triangle, DiagramEdge, DiagramPoint, EdgeKind, PartialPoint, Vertex};
use crate::{Error, Fraction};

/// A path shape before the endpoint is fixed: either the constant marker for
/// the horizontal edge `<R> - <R>o`, or a walk of vertices starting at `<R>`.
///
/// When a walk is used for a type I system its last edge is "open": the
/// endpoint solver decides how far along it the path stops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Skeleton {
    Constant,
    Walk(Vec<Vertex>),
}

impl Skeleton {
    pub fn edges(&self) -> usize {
        match self {
            Skeleton::Constant => 0,
            Skeleton::Walk(v) => v.len().saturating_sub(1),
        }
    }

    pub fn last(&self) -> Option<&Vertex> {
        match self {
            Skeleton::Constant => None,
            Skeleton::Walk(v) => v.last(),
        }
    }
}

impl fmt::Display for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Skeleton::Constant => f.write_str("const"),
            Skeleton::Walk(v) => write_walk(f, v),
        }
    }
}

fn write_walk(f: &mut fmt::Formatter<'_>, vertices: &[Vertex]) -> fmt::Result {
    for (i, v) in vertices.iter().rev().enumerate() {
        if i > 0 {
            f.write_str(" - ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// All skeletons for `tangle`: the constant marker, then every walk obeying
/// minimality and monotonicity (every prefix of every maximal walk, the
/// zero-edge walk `<R>` included), sorted lexicographically.
pub fn enumerate_skeletons(tangle: &Fraction) -> Result<Vec<Skeleton>, Error> {
    if tangle.is_infinite() || tangle.is_integer() {
        return Err(Error::IntegerTangle(tangle.clone()));
    }
    let mut out = vec![Skeleton::Constant];
    let mut stack = vec![vec![Vertex::Angle(tangle.clone())]];
    while let Some(walk) = stack.pop() {
        for next in leftward_moves(walk.last().unwrap())? {
            if walk.len() >= 2 {
                let prev = DiagramEdge::new(walk[walk.len() - 1].clone(), walk[walk.len() - 2].clone())?;
                let step = DiagramEdge::new(next.clone(), walk[walk.len() - 1].clone())?;
                if next == walk[walk.len() - 2] || same_triangle(&prev, &step)? {
                    continue;
                }
            }
            let mut longer = walk.clone();
            longer.push(next);
            stack.push(longer);
        }
        out.push(Skeleton::Walk(walk));
    }
    out.sort();
    Ok(out)
}

fn leftward_moves(v: &Vertex) -> Result<Vec<Vertex>, Error> {
    Ok(match v {
        Vertex::Infinity | Vertex::Circle(_) => Vec::new(),
        Vertex::Angle(f) if f.is_integer() => vec![Vertex::Infinity],
        Vertex::Angle(f) => {
            let (a, b) = farey_parents(f)?;
            vec![Vertex::Angle(a), Vertex::Angle(b)]
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Increasing,
    Decreasing,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Increasing => 1,
            Sign::Decreasing => -1,
        }
    }
}

/// `+1` if `v` grows while moving right to left along the edge, `-1` if it
/// shrinks; no sign for horizontal, vertical and `<inf>` edges.
pub fn edge_sign(edge: &DiagramEdge) -> Option<Sign> {
    if edge.kind() != EdgeKind::Farey {
        return None;
    }
    let (from, to) = (edge.right().uv().1, edge.left().uv().1);
    Some(if to > from { Sign::Increasing } else { Sign::Decreasing })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedEdge {
    pub edge: DiagramEdge,
    pub sign: Option<Sign>,
    /// Fraction of the edge traversed, starting from its right end.
    pub length: Fraction,
}

impl SignedEdge {
    pub fn new(edge: DiagramEdge, length: Fraction) -> Self {
        SignedEdge { sign: edge_sign(&edge), edge, length }
    }
}

/// `-2 sign |e|` on Farey edges in `u > 0`, zero elsewhere.
pub fn edge_twist(edge: &SignedEdge) -> Fraction {
    match edge.sign {
        Some(s) if edge.edge.kind() == EdgeKind::Farey => Fraction::integer(-2 * s.value()) * &edge.length,
        _ => Fraction::zero(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathType {
    I,
    II,
    III,
}

impl PathType {
    pub fn of_u(u: &Fraction) -> PathType {
        if u.is_positive() {
            PathType::I
        } else if u.is_zero() {
            PathType::II
        } else {
            PathType::III
        }
    }
}

impl fmt::Display for PathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathType::I => "I",
            PathType::II => "II",
            PathType::III => "III",
        })
    }
}

/// An edgepath with its endpoint fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Edgepath {
    /// The point `w<R> + (1-w)<R>o` on the horizontal edge.
    Constant { tangle: Fraction, weight: Fraction },
    /// A walk from `<R>` through `vertices`. With `final_weight = Some(t)` the
    /// last edge is only partially traversed and the path ends at
    /// `t<last> + (1-t)<second to last>`; otherwise it ends at the last vertex.
    Walk { tangle: Fraction, vertices: Vec<Vertex>, final_weight: Option<Fraction> },
}

impl Edgepath {
    pub fn tangle(&self) -> &Fraction {
        match self {
            Edgepath::Constant { tangle, .. } | Edgepath::Walk { tangle, .. } => tangle,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Edgepath::Constant { .. })
    }

    /// The edges traversed, right to left, with signs and lengths. Constant
    /// edgepaths have none.
    pub fn steps(&self) -> Result<Vec<SignedEdge>, Error> {
        let Edgepath::Walk { vertices, final_weight, .. } = self else {
            return Ok(Vec::new());
        };
        let n = vertices.len();
        let mut out = Vec::with_capacity(n.saturating_sub(1));
        for (i, pair) in vertices.windows(2).enumerate() {
            let edge = DiagramEdge::new(pair[1].clone(), pair[0].clone())?;
            let length = match final_weight {
                Some(t) if i + 2 == n => t.clone(),
                _ => Fraction::one(),
            };
            out.push(SignedEdge::new(edge, length));
        }
        Ok(out)
    }

    /// The last traversed edge, `None` for constant and zero-edge paths.
    pub fn last_step(&self) -> Result<Option<SignedEdge>, Error> {
        Ok(self.steps()?.pop())
    }

    pub fn endpoint(&self) -> Result<DiagramPoint, Error> {
        match self {
            Edgepath::Constant { tangle, weight } => {
                let edge = DiagramEdge::new(Vertex::Angle(tangle.clone()), Vertex::Circle(tangle.clone()))?;
                Ok(DiagramPoint::Partial(PartialPoint::new(edge, weight.clone())?))
            }
            Edgepath::Walk { vertices, final_weight, .. } => {
                let n = vertices.len();
                match final_weight {
                    Some(t) if n >= 2 => {
                        let edge = DiagramEdge::new(vertices[n - 1].clone(), vertices[n - 2].clone())?;
                        Ok(DiagramPoint::Partial(PartialPoint::new(edge, t.clone())?))
                    }
                    Some(_) => Err(Error::InvalidPoint("final weight on a path with no edges".into())),
                    None => vertices
                        .last()
                        .cloned()
                        .map(DiagramPoint::Vertex)
                        .ok_or_else(|| Error::InvalidPoint("empty walk".into())),
                }
            }
        }
    }

    pub fn end_uv(&self) -> Result<(Fraction, Fraction), Error> {
        Ok(self.endpoint()?.uv())
    }

    /// Total length `|gamma|`; zero for constant paths.
    pub fn length(&self) -> Result<Fraction, Error> {
        Ok(self.steps()?.into_iter().map(|s| s.length).sum())
    }

    pub fn twist(&self) -> Result<Fraction, Error> {
        Ok(self.steps()?.iter().map(edge_twist).sum())
    }
}

pub fn classify_type(path: &Edgepath) -> Result<PathType, Error> {
    Ok(PathType::of_u(&path.end_uv()?.0))
}

impl fmt::Display for Edgepath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edgepath::Constant { tangle, weight } => {
                if weight.is_one() {
                    write!(f, "<{tangle}>")
                } else {
                    write!(f, "({weight})<{tangle}> + ({})<{tangle}>o", Fraction::one() - weight)
                }
            }
            Edgepath::Walk { vertices, final_weight: None, .. } => write_walk(f, vertices),
            Edgepath::Walk { vertices, final_weight: Some(t), .. } => {
                let n = vertices.len();
                if n < 2 {
                    return write_walk(f, vertices);
                }
                write!(f, "({t}){} + ({}){}", vertices[n - 1], Fraction::one() - t, vertices[n - 2])?;
                for v in vertices[..n - 1].iter().rev() {
                    write!(f, " - {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn walk(labels: &[&str]) -> Vec<Vertex> {
        labels.iter().map(|s| Vertex::angle(fr(s))).collect()
    }

    fn maximal(skeletons: &[Skeleton]) -> Vec<Vec<Vertex>> {
        skeletons
            .iter()
            .filter_map(|s| match s {
                Skeleton::Walk(v) if v.last() == Some(&Vertex::Infinity) => Some(v.clone()),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn skeletons_of_one_third() {
        let sk = enumerate_skeletons(&fr("1/3")).unwrap();
        let max = maximal(&sk);
        assert_eq!(max.len(), 2);
        assert!(max.contains(&walk(&["1/3", "1/2", "1", "inf"])));
        assert!(max.contains(&walk(&["1/3", "0", "inf"])));
        assert_eq!(sk[0], Skeleton::Constant);
        assert!(sk.contains(&Skeleton::Walk(walk(&["1/3"]))));
        assert!(sk.contains(&Skeleton::Walk(walk(&["1/3", "1/2"]))));
    }

    #[test]
    fn skeletons_of_two_fifths() {
        let max = maximal(&enumerate_skeletons(&fr("2/5")).unwrap());
        assert!(max.contains(&walk(&["2/5", "1/2", "0", "inf"])));
        assert!(max.contains(&walk(&["2/5", "1/2", "1", "inf"])));
        assert!(max.contains(&walk(&["2/5", "1/3", "0", "inf"])));
        // 2/5 -> 1/3 -> 1/2 runs along two sides of one triangle.
        assert_eq!(max.len(), 3);
    }

    #[test]
    fn skeletons_of_one_over_n() {
        for n in [3i64, 7, 11, 13] {
            let max = maximal(&enumerate_skeletons(&Fraction::ratio(1, n)).unwrap());
            let mut long: Vec<Vertex> = (1..=n).rev().map(|d| Vertex::angle(Fraction::ratio(1, d))).collect();
            long.push(Vertex::Infinity);
            assert_eq!(long.len() as i64, n + 1);
            assert!(max.contains(&long));
            assert!(max.contains(&vec![Vertex::angle(Fraction::ratio(1, n)), Vertex::angle(fr("0")), Vertex::Infinity]));
            assert_eq!(max.len(), 2);
        }
    }

    #[test]
    fn integer_tangles_rejected() {
        assert!(enumerate_skeletons(&fr("3")).is_err());
        assert!(enumerate_skeletons(&fr("inf")).is_err());
    }

    #[test]
    fn signs() {
        let e = |l: &str, r: &str| DiagramEdge::new(Vertex::angle(fr(l)), Vertex::angle(fr(r))).unwrap();
        assert_eq!(edge_sign(&e("1/2", "2/5")), Some(Sign::Increasing));
        assert_eq!(edge_sign(&e("-1", "-1/2")), Some(Sign::Decreasing));
        assert_eq!(edge_sign(&e("inf", "0")), None);
        assert_eq!(edge_sign(&e("1", "0")), None);
    }

    #[test]
    fn twists() {
        let e = |l: &str, r: &str| DiagramEdge::new(Vertex::angle(fr(l)), Vertex::angle(fr(r))).unwrap();
        assert_eq!(edge_twist(&SignedEdge::new(e("1/2", "2/5"), Fraction::one())), fr("-2"));
        assert_eq!(edge_twist(&SignedEdge::new(e("0", "1/2"), fr("1/11"))), fr("2/11"));
        assert_eq!(edge_twist(&SignedEdge::new(e("1", "0"), Fraction::one())), fr("0"));
        assert_eq!(edge_twist(&SignedEdge::new(e("inf", "0"), Fraction::one())), fr("0"));
    }

    #[test]
    fn types_and_rendering() {
        let g1 = Edgepath::Walk { tangle: fr("-1/2"), vertices: walk(&["-1/2", "-1"]), final_weight: Some(fr("1/11")) };
        assert_eq!(classify_type(&g1).unwrap(), PathType::I);
        assert_eq!(g1.to_string(), "(1/11)<-1> + (10/11)<-1/2> - <-1/2>");
        assert_eq!(g1.end_uv().unwrap(), (fr("10/21"), fr("-11/21")));

        let d1 = Edgepath::Walk { tangle: fr("-1/2"), vertices: walk(&["-1/2", "-1", "inf"]), final_weight: None };
        assert_eq!(classify_type(&d1).unwrap(), PathType::III);
        assert_eq!(d1.to_string(), "<inf> - <-1> - <-1/2>");

        let to_zero = Edgepath::Walk { tangle: fr("1/3"), vertices: walk(&["1/3", "0"]), final_weight: None };
        assert_eq!(classify_type(&to_zero).unwrap(), PathType::II);

        let c = Edgepath::Constant { tangle: fr("-1/2"), weight: fr("4/7") };
        assert_eq!(c.to_string(), "(4/7)<-1/2> + (3/7)<-1/2>o");
        assert_eq!(c.end_uv().unwrap(), (fr("5/7"), fr("-1/2")));
        assert_eq!(c.twist().unwrap(), fr("0"));
    }

    #[test]
    fn path_twist_and_length() {
        let g2 = Edgepath::Walk { tangle: fr("2/5"), vertices: walk(&["2/5", "1/2", "0"]), final_weight: Some(fr("1/11")) };
        // -2 (1 - 1/11)
        assert_eq!(g2.twist().unwrap(), fr("-20/11"));
        assert_eq!(g2.length().unwrap(), fr("12/11"));
        assert_eq!(g2.to_string().matches('<').count(), 4);
        assert_eq!(g2.last_step().unwrap().unwrap().sign, Some(Sign::Decreasing));
        assert_eq!(Skeleton::Walk(walk(&["2/5", "1/2"])).to_string(), "<1/2> - <2/5>");
    }
}
