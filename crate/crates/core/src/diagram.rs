//! The diagram in the `uv`-plane: angle vertices `<p/q>` at `((q-1)/q, p/q)`,
//! circle vertices `<p/q>o` at `(1, p/q)`, and `<inf>` at `(-1, 0)`.
//!
//! The diagram is infinite and never materialized. Neighbors are computed on
//! demand from the determinant rule `|ps - qr| = 1` with `inf = 1/0`.

use alloc::format;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::{Error, Fraction};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    /// `<p/q>`; the fraction is always finite.
    Angle(Fraction),
    /// `<p/q>o`, the right end of the horizontal edge at `p/q`.
    Circle(Fraction),
    Infinity,
}

impl Vertex {
    /// `<f>`, mapping `f = inf` to [`Vertex::Infinity`].
    pub fn angle(f: Fraction) -> Vertex {
        if f.is_infinite() {
            Vertex::Infinity
        } else {
            Vertex::Angle(f)
        }
    }

    /// The fraction labelling this vertex, `inf` for the point at infinity.
    pub fn label(&self) -> Fraction {
        match self {
            Vertex::Angle(f) | Vertex::Circle(f) => f.clone(),
            Vertex::Infinity => Fraction::infinity(),
        }
    }

    pub fn uv(&self) -> (Fraction, Fraction) {
        match self {
            Vertex::Angle(f) if !f.is_infinite() => {
                let q = Fraction::integer(f.denom().clone());
                ((&q - &Fraction::one()) / &q, f.clone())
            }
            Vertex::Circle(f) => (Fraction::one(), f.clone()),
            _ => (Fraction::integer(-1), Fraction::zero()),
        }
    }

    pub fn u(&self) -> Fraction {
        self.uv().0
    }

    /// `true` for `<z>` with `z` an integer (the vertices on the `v`-axis).
    pub fn is_integer(&self) -> bool {
        matches!(self, Vertex::Angle(f) if f.is_integer())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Angle(x) => write!(f, "<{x}>"),
            Vertex::Circle(x) => write!(f, "<{x}>o"),
            Vertex::Infinity => f.write_str("<inf>"),
        }
    }
}

/// `|ps - qr| = 1` for `a = p/q`, `b = r/s`, with `inf = 1/0`.
pub fn is_farey_edge(a: &Fraction, b: &Fraction) -> bool {
    let det = a.numer() * b.denom() - a.denom() * b.numer();
    det.abs().is_one()
}

/// The two Farey parents of `p/q` (`q >= 2`): the neighbors with smaller
/// denominator, of which `p/q` is the mediant. Returned in increasing order.
pub fn farey_parents(f: &Fraction) -> Result<(Fraction, Fraction), Error> {
    if f.is_infinite() || f.is_integer() {
        return Err(Error::NoParents(f.clone()));
    }
    let (p, q) = (f.numer(), f.denom());
    // Lower parent r/s satisfies p*s - q*r = 1 with 0 < s < q.
    let egcd = p.extended_gcd(q);
    debug_assert!(egcd.gcd.is_one());
    let s = egcd.x.mod_floor(q);
    let r = (p * &s - BigInt::one()) / q;
    let lower = Fraction::new(r.clone(), s.clone())?;
    let upper = Fraction::new(p - r, q - s)?;
    Ok((lower, upper))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// A Farey edge with interior in `u > 0`.
    Farey,
    /// `<p/q>` to `<p/q>o`.
    Horizontal,
    /// `<z>` to `<z+1>`, on the `v`-axis.
    Vertical,
    /// `<z>` to `<inf>`.
    Infinity,
}

/// An oriented edge. Edgepaths run right to left, so traversal starts at
/// `right` and ends at `left`. For vertical edges, which have constant `u`,
/// `left` is simply the end reached by the traversal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramEdge {
    left: Vertex,
    right: Vertex,
    kind: EdgeKind,
}

impl DiagramEdge {
    pub fn new(left: Vertex, right: Vertex) -> Result<Self, Error> {
        let kind = match (&left, &right) {
            (Vertex::Angle(a), Vertex::Circle(b)) if a == b => EdgeKind::Horizontal,
            (Vertex::Circle(_), _) | (_, Vertex::Circle(_)) => {
                return Err(Error::NotAnEdge(format!("{left} - {right}")));
            }
            _ if left == right || !is_farey_edge(&left.label(), &right.label()) => {
                return Err(Error::NotAnEdge(format!("{left} - {right}")));
            }
            (Vertex::Infinity, _) | (_, Vertex::Infinity) => EdgeKind::Infinity,
            _ if left.is_integer() && right.is_integer() => EdgeKind::Vertical,
            _ => EdgeKind::Farey,
        };
        if kind != EdgeKind::Vertical && kind != EdgeKind::Horizontal && left.u() >= right.u() {
            return Err(Error::NotAnEdge(format!("{left} - {right}: left end must have smaller u")));
        }
        Ok(DiagramEdge { left, right, kind })
    }

    pub fn left(&self) -> &Vertex {
        &self.left
    }

    pub fn right(&self) -> &Vertex {
        &self.right
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    fn touches(&self, v: &Vertex) -> bool {
        &self.left == v || &self.right == v
    }
}

impl fmt::Display for DiagramEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.left, self.right)
    }
}

/// `true` iff two edges sharing a vertex are two sides of one triangle of
/// the diagram.
pub fn same_triangle(e1: &DiagramEdge, e2: &DiagramEdge) -> Result<bool, Error> {
    let ends = [&e1.left, &e1.right];
    let shared = ends.iter().copied().find(|v| e2.touches(v)).ok_or(Error::DisjointEdges)?;
    if e1 == e2 {
        return Ok(false);
    }
    if e1.kind == EdgeKind::Horizontal || e2.kind == EdgeKind::Horizontal {
        return Ok(false);
    }
    let a = if &e1.left == shared { &e1.right } else { &e1.left };
    let b = if &e2.left == shared { &e2.right } else { &e2.left };
    Ok(a != b && is_farey_edge(&a.label(), &b.label()))
}

/// A point `t<left> + (1-t)<right>` on an edge, `t = k/(k+l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialPoint {
    edge: DiagramEdge,
    weight_left: Fraction,
}

impl PartialPoint {
    pub fn new(edge: DiagramEdge, weight_left: Fraction) -> Result<Self, Error> {
        if edge.kind == EdgeKind::Infinity {
            return Err(Error::InvalidPoint(format!("no rational points are defined on {edge}")));
        }
        if weight_left.is_infinite() || weight_left.is_negative() || weight_left > Fraction::one() {
            return Err(Error::InvalidPoint(format!("weight {weight_left} outside [0, 1]")));
        }
        Ok(PartialPoint { edge, weight_left })
    }

    pub fn edge(&self) -> &DiagramEdge {
        &self.edge
    }

    pub fn weight_left(&self) -> &Fraction {
        &self.weight_left
    }

    /// Integer weights `(k, l)` on the left and right vertex, in lowest terms.
    pub fn weights(&self) -> (BigInt, BigInt) {
        let k = self.weight_left.numer().clone();
        let l = self.weight_left.denom() - &k;
        (k, l)
    }

    pub fn uv(&self) -> (Fraction, Fraction) {
        let (k, l) = self.weights();
        let left = self.edge.left.label();
        let (p, q) = (left.numer(), left.denom());
        if self.edge.kind == EdgeKind::Horizontal {
            // ((kq + lq - k) / (kq + lq), p/q)
            let d = (&k + &l) * q;
            let u = Fraction::new(&d - &k, d).unwrap();
            return (u, left);
        }
        let right = self.edge.right.label();
        let (r, s) = (right.numer(), right.denom());
        // ((kq + ls - (k + l)) / (kq + ls), (kp + lr) / (kq + ls))
        let d: BigInt = &k * q + &l * s;
        let u = Fraction::new(&d - (&k + &l), d.clone()).unwrap();
        let v = Fraction::new(&k * p + &l * r, d).unwrap();
        (u, v)
    }
}

impl fmt::Display for PartialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.weight_left;
        if t.is_one() {
            return write!(f, "{}", self.edge.left);
        }
        if t.is_zero() {
            return write!(f, "{}", self.edge.right);
        }
        write!(f, "({}){} + ({}){}", t, self.edge.left, Fraction::one() - t, self.edge.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DiagramPoint {
    Vertex(Vertex),
    Partial(PartialPoint),
}

impl DiagramPoint {
    pub fn uv(&self) -> (Fraction, Fraction) {
        uv_coords(self)
    }
}

impl fmt::Display for DiagramPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramPoint::Vertex(v) => v.fmt(f),
            DiagramPoint::Partial(p) => p.fmt(f),
        }
    }
}

pub fn uv_coords(point: &DiagramPoint) -> (Fraction, Fraction) {
    match point {
        DiagramPoint::Vertex(v) => v.uv(),
        DiagramPoint::Partial(p) => p.uv(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn edge(left: &str, right: &str) -> DiagramEdge {
        DiagramEdge::new(Vertex::angle(fr(left)), Vertex::angle(fr(right))).unwrap()
    }

    #[test]
    fn farey_edges() {
        assert!(is_farey_edge(&fr("1/2"), &fr("2/5")));
        assert!(!is_farey_edge(&fr("1/2"), &fr("1/4")));
        assert!(is_farey_edge(&fr("inf"), &fr("7")));
        assert!(!is_farey_edge(&fr("2/5"), &fr("2/5")));
    }

    // Brute force: search all r/s with s < q for neighbors of p/q.
    fn parents_by_search(f: &Fraction) -> Vec<Fraction> {
        let q: i64 = f.denom().try_into().unwrap();
        let p: i64 = f.numer().try_into().unwrap();
        let mut out = Vec::new();
        for s in 1..q {
            for r in (p.div_euclid(q) - 1) * s..=(p.div_euclid(q) + 2) * s {
                let c = Fraction::ratio(r, s);
                if c.denom() == &BigInt::from(s) && is_farey_edge(f, &c) {
                    out.push(c);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn parents() {
        assert_eq!(farey_parents(&fr("2/5")).unwrap(), (fr("1/3"), fr("1/2")));
        assert_eq!(parents_by_search(&fr("2/5")), [fr("1/3"), fr("1/2")]);
        assert_eq!(farey_parents(&fr("-1/2")).unwrap(), (fr("-1"), fr("0")));
        assert_eq!(parents_by_search(&fr("-1/2")), [fr("-1"), fr("0")]);
        for n in 2..30 {
            assert_eq!(farey_parents(&Fraction::ratio(1, n)).unwrap(), (fr("0"), Fraction::ratio(1, n - 1)));
        }
        assert!(farey_parents(&fr("3")).is_err());
        assert!(farey_parents(&fr("inf")).is_err());
    }

    #[test]
    fn vertex_coordinates() {
        assert_eq!(Vertex::Infinity.uv(), (fr("-1"), fr("0")));
        assert_eq!(Vertex::angle(fr("2/5")).uv(), (fr("4/5"), fr("2/5")));
        assert_eq!(Vertex::Circle(fr("2/5")).uv(), (fr("1"), fr("2/5")));
        assert_eq!(Vertex::angle(fr("-3")).uv(), (fr("0"), fr("-3")));
    }

    #[test]
    fn partial_point_coordinates() {
        // (1/11)<-1> + (10/11)<-1/2>
        let p = PartialPoint::new(edge("-1", "-1/2"), fr("1/11")).unwrap();
        assert_eq!(uv_coords(&DiagramPoint::Partial(p)), (fr("10/21"), fr("-11/21")));
        // (4/7)<-1/2> + (3/7)<-1/2>o
        let h = DiagramEdge::new(Vertex::angle(fr("-1/2")), Vertex::Circle(fr("-1/2"))).unwrap();
        assert_eq!(h.kind(), EdgeKind::Horizontal);
        let p = PartialPoint::new(h, fr("4/7")).unwrap();
        assert_eq!(p.uv(), (fr("5/7"), fr("-1/2")));
        assert_eq!(p.to_string(), "(4/7)<-1/2> + (3/7)<-1/2>o");
    }

    #[test]
    fn partial_point_endpoints_degenerate_to_vertices() {
        let e = edge("1/3", "2/5");
        assert_eq!(PartialPoint::new(e.clone(), fr("1")).unwrap().uv(), e.left().uv());
        assert_eq!(PartialPoint::new(e.clone(), fr("0")).unwrap().uv(), e.right().uv());
        assert!(PartialPoint::new(e, fr("3/2")).is_err());
        let inf = DiagramEdge::new(Vertex::Infinity, Vertex::angle(fr("0"))).unwrap();
        assert!(PartialPoint::new(inf, fr("1/2")).is_err());
    }

    #[test]
    fn edge_kinds_and_orientation() {
        assert_eq!(edge("1/2", "2/5").kind(), EdgeKind::Farey);
        assert_eq!(edge("0", "1").kind(), EdgeKind::Vertical);
        assert_eq!(edge("inf", "0").kind(), EdgeKind::Infinity);
        assert!(DiagramEdge::new(Vertex::angle(fr("2/5")), Vertex::angle(fr("1/2"))).is_err());
        assert!(DiagramEdge::new(Vertex::angle(fr("1/4")), Vertex::angle(fr("1/2"))).is_err());
    }

    #[test]
    fn triangles() {
        assert!(same_triangle(&edge("1/2", "2/5"), &edge("1/3", "2/5")).unwrap());
        assert!(same_triangle(&edge("0", "1"), &edge("inf", "0")).unwrap());
        assert!(!same_triangle(&edge("0", "1/2"), &edge("-1", "0")).unwrap());
        assert_eq!(same_triangle(&edge("0", "1/2"), &edge("1/3", "2/5")), Err(Error::DisjointEdges));
    }
}
