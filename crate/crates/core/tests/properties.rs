use proptest::prelude::*;

use hypcone::cones::evaluate;
use hypcone::hypermetric::{cut_vector, hypermetric_coefficients, hypermetric_inequality, switch};
use hypcone::io::{parse_cone, write_hcone, Cone};
use hypcone::symmetry::{apply, symmetric_group, PointPermutation};
use hypcone::{BVector, CutSet, HCone, Inequality};

fn permutation(n: usize) -> impl Strategy<Value = PointPermutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| PointPermutation::new(v).unwrap())
}

fn bvector() -> impl Strategy<Value = BVector> {
    prop::collection::vec(-3i64..=3, 6)
        .prop_map(|mut b| {
            b.push(1 - b.iter().sum::<i64>());
            b
        })
        .prop_filter_map("degenerate", |b| BVector::new(b).ok())
}

fn pair_vector() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 21)
}

proptest! {
    #[test]
    fn hypermetric_value_on_cuts(b in bvector(), mask in 1u32..64) {
        let s = CutSet::from_mask(7, mask).unwrap();
        let value: i64 = hypermetric_coefficients(&b).iter().zip(cut_vector(&s).coords()).map(|(x, y)| x * y).sum();
        let w = b.weight(s.members());
        prop_assert_eq!(value, w * (1 - w));
        prop_assert!(evaluate(&hypermetric_inequality(&b).unwrap(), &cut_vector(&s)).unwrap() <= 0);
    }

    #[test]
    fn orbit_times_stabilizer(v in pair_vector()) {
        let g = symmetric_group(7).unwrap();
        prop_assert_eq!(g.orbit(&v).len() * g.stabilizer(&v).len(), 5040);
    }

    #[test]
    fn action_composes(v in pair_vector(), p in permutation(7), q in permutation(7)) {
        let lhs = apply(&p, &apply(&q, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, apply(&p.compose(&q), &v).unwrap());
        prop_assert_eq!(apply(&p.inverse(), &apply(&p, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn canonical_form_is_an_invariant_projection(v in pair_vector(), p in permutation(7)) {
        let g = symmetric_group(7).unwrap();
        let c = g.canonical_form(&v);
        prop_assert_eq!(g.canonical_form(&c), c.clone());
        prop_assert_eq!(g.canonical_form(&apply(&p, &v).unwrap()), c.clone());
        prop_assert!(c <= v);
    }

    #[test]
    fn hypermetric_commutes_with_relabeling(b in bvector(), p in permutation(7)) {
        let lhs = apply(&p, &hypermetric_coefficients(&b)).unwrap();
        prop_assert_eq!(lhs, hypermetric_coefficients(&b.permuted(&p)));
    }

    #[test]
    fn switching_is_an_involution(b in bvector(), mask in 1u32..64) {
        let f = hypermetric_inequality(&b).unwrap();
        let s = CutSet::from_mask(7, mask).unwrap();
        match switch(&f, &s) {
            Ok(once) => prop_assert_eq!(switch(&once, &s).unwrap(), f),
            Err(_) => prop_assert!(evaluate(&f, &cut_vector(&s)).unwrap() != 0),
        }
    }

    #[test]
    fn cone_files_round_trip(rows in prop::collection::vec(pair_vector(), 1..6)) {
        let ineqs: Vec<Inequality> = rows.into_iter().filter_map(|r| Inequality::le(r).ok()).collect();
        prop_assume!(!ineqs.is_empty());
        let c = HCone::new(7, ineqs).unwrap();
        match parse_cone(&write_hcone(&c)).unwrap() {
            Cone::H(back) => prop_assert_eq!(back, c),
            Cone::V(_) => prop_assert!(false, "kind changed"),
        }
    }
}
