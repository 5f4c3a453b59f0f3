use std::collections::BTreeSet;

use montesinos_core::diagram::is_farey_edge;
use montesinos_core::edgepath::enumerate_skeletons;
use montesinos_core::oracle::exhaustive_paths;
use montesinos_core::{Fraction, Skeleton, Vertex};
use num_integer::Integer;

fn tangles(max_q: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        for p in -q + 1..2 * q {
            if p.gcd(&q) == 1 {
                out.push(Fraction::ratio(p, q));
            }
        }
    }
    out
}

#[test]
fn generator_matches_exhaustive_search() {
    for r in tangles(13) {
        let generated: Vec<Skeleton> = enumerate_skeletons(&r).unwrap().into_iter().filter(|s| s.edges() <= 12).collect();
        assert_eq!(generated, exhaustive_paths(&r, 12), "tangle {r}");
    }
}

#[test]
fn skeletons_are_well_formed() {
    for r in tangles(13) {
        let all = enumerate_skeletons(&r).unwrap();
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len(), "duplicates for {r}");
        let q = i64::try_from(r.denom()).unwrap() as usize;
        for s in &all {
            let Skeleton::Walk(w) = s else { continue };
            assert_eq!(w[0], Vertex::angle(r.clone()));
            assert!(s.edges() <= q + 1, "{s} is too long for {r}");
            for pair in w.windows(2) {
                let (a, b) = (&pair[0], &pair[1]);
                assert!(b.u() <= a.u(), "{s} moves right");
                if *b != Vertex::Infinity {
                    assert!(is_farey_edge(&a.label(), &b.label()), "{s}");
                } else {
                    assert!(a.is_integer(), "{s}");
                }
            }
            for tri in w.windows(3) {
                assert_ne!(tri[0], tri[2], "{s} retraces");
                if tri[2] != Vertex::Infinity {
                    assert!(!is_farey_edge(&tri[0].label(), &tri[2].label()), "{s} cuts a triangle");
                }
            }
            if w.len() > 1 {
                let prefix = Skeleton::Walk(w[..w.len() - 1].to_vec());
                assert!(set.contains(&prefix), "prefix of {s} missing");
            }
        }
    }
}

#[test]
fn integer_tangles_are_rejected() {
    assert!(enumerate_skeletons(&Fraction::integer(3)).is_err());
    assert!(enumerate_skeletons(&Fraction::infinity()).is_err());
}
