use montesinos_core::diagram::{farey_parents, is_farey_edge, same_triangle};
use montesinos_core::{DiagramEdge, EdgeKind, Fraction, PartialPoint, Vertex};
use num_integer::Integer;
use proptest::prelude::*;

fn reduced() -> impl Strategy<Value = Fraction> {
    (2i64..400, -2000i64..2000)
        .prop_filter("coprime", |(q, p)| p.gcd(q) == 1)
        .prop_map(|(q, p)| Fraction::ratio(p, q))
}

fn collinear(a: &(Fraction, Fraction), b: &(Fraction, Fraction), c: &(Fraction, Fraction)) -> bool {
    (&b.0 - &a.0) * (&c.1 - &a.1) == (&b.1 - &a.1) * (&c.0 - &a.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parents_are_neighbors_with_the_mediant(f in reduced()) {
        let (a, b) = farey_parents(&f).unwrap();
        prop_assert!(a < f && f < b);
        prop_assert!(is_farey_edge(&a, &b));
        prop_assert!(is_farey_edge(&a, &f) && is_farey_edge(&f, &b));
        prop_assert_eq!(Fraction::new(a.numer() + b.numer(), a.denom() + b.denom()).unwrap(), f.clone());
        prop_assert!(a.denom() < f.denom() && b.denom() < f.denom());
        let e1 = DiagramEdge::new(Vertex::angle(a.clone()), Vertex::angle(f.clone())).unwrap();
        let e2 = DiagramEdge::new(Vertex::angle(b), Vertex::angle(f)).unwrap();
        prop_assert!(same_triangle(&e1, &e2).unwrap());
    }

    #[test]
    fn partial_points_are_collinear(f in reduced(), k in 0i64..50, l in 0i64..50, upper in any::<bool>()) {
        prop_assume!(k + l > 0);
        let (a, b) = farey_parents(&f).unwrap();
        let left = Vertex::angle(if upper { b } else { a });
        let right = Vertex::angle(f);
        let edge = DiagramEdge::new(left.clone(), right.clone()).unwrap();
        prop_assert_eq!(edge.kind(), EdgeKind::Farey);
        let point = PartialPoint::new(edge, Fraction::ratio(k, k + l)).unwrap();
        let uv = point.uv();
        prop_assert!(collinear(&left.uv(), &right.uv(), &uv));
        if k == 0 {
            prop_assert_eq!(uv.clone(), right.uv());
        }
        if l == 0 {
            prop_assert_eq!(uv.clone(), left.uv());
        }
        // u lies between the endpoints.
        prop_assert!(left.u() <= uv.0 && uv.0 <= right.u());
    }

    #[test]
    fn edge_rule_is_symmetric(a in reduced(), b in reduced()) {
        prop_assert_eq!(is_farey_edge(&a, &b), is_farey_edge(&b, &a));
        prop_assert!(!is_farey_edge(&a, &a));
    }
}
