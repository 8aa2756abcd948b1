//! The exact simplex against vertex enumeration on small boxed problems.

use hypcone::linalg::{lp_solve, LpConstraint, LpProblem, LpSense, LpStatus};
use hypcone::linalg::{int, Rational, RationalVector};
use num_traits::Zero;
use proptest::prelude::*;

const BOX: i64 = 6;

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

/// Rows `a·x ≤ b`, including the box. Returns the best objective over all
/// feasible vertices, or `None` when no vertex is feasible.
fn vertex_oracle(rows: &[(Vec<i64>, i64)], c: &[i64]) -> Option<Rational> {
    let q = |v: i64| Rational::from_integer(v.into());
    let mut best: Option<Rational> = None;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            for k in j + 1..rows.len() {
                let pick = [&rows[i], &rows[j], &rows[k]];
                let a: [[Rational; 3]; 3] = std::array::from_fn(|r| std::array::from_fn(|s| q(pick[r].0[s])));
                let d = det3(&a);
                if d.is_zero() {
                    continue;
                }
                let x: Vec<Rational> = (0..3)
                    .map(|col| {
                        let mut m = a.clone();
                        for r in 0..3 {
                            m[r][col] = q(pick[r].1);
                        }
                        det3(&m) / d.clone()
                    })
                    .collect();
                let feasible = rows.iter().all(|(row, b)| {
                    let lhs: Rational = row.iter().zip(&x).map(|(&r, xi)| q(r) * xi).sum();
                    lhs <= q(*b)
                });
                if feasible {
                    let value: Rational = c.iter().zip(&x).map(|(&ci, xi)| q(ci) * xi).sum();
                    if best.as_ref().is_none_or(|b| value > *b) {
                        best = Some(value);
                    }
                }
            }
        }
    }
    best
}

fn boxed(rows: &[(Vec<i64>, i64)]) -> Vec<(Vec<i64>, i64)> {
    let mut all = rows.to_vec();
    for i in 0..3 {
        let mut e = vec![0; 3];
        e[i] = 1;
        all.push((e.clone(), BOX));
        e[i] = -1;
        all.push((e, BOX));
    }
    all
}

fn problem(rows: &[(Vec<i64>, i64)], c: &[i64], sense: LpSense) -> LpProblem {
    LpProblem {
        constraints: rows
            .iter()
            .map(|(a, b)| LpConstraint::le(RationalVector::from_ints(a), int(*b)))
            .collect(),
        objective: RationalVector::from_ints(c),
        sense,
    }
}

fn row() -> impl Strategy<Value = (Vec<i64>, i64)> {
    (prop::collection::vec(-4i64..=4, 3), -5i64..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn simplex_matches_vertex_enumeration(
        rows in prop::collection::vec(row(), 0..6),
        c in prop::collection::vec(-4i64..=4, 3),
    ) {
        let all = boxed(&rows);
        let oracle = vertex_oracle(&all, &c);
        match (lp_solve(&problem(&all, &c, LpSense::Maximize)).unwrap(), oracle) {
            (LpStatus::Optimal { value, point }, Some(best)) => {
                prop_assert_eq!(value, best);
                for (a, b) in &all {
                    prop_assert!(RationalVector::from_ints(a).dot(&point).unwrap() <= int(*b));
                }
            }
            (LpStatus::Infeasible, None) => {}
            (got, want) => prop_assert!(false, "simplex {:?}, oracle {:?}", got, want),
        }
    }

    #[test]
    fn minimize_is_negated_maximize(
        rows in prop::collection::vec(row(), 0..5),
        c in prop::collection::vec(-4i64..=4, 3),
    ) {
        let all = boxed(&rows);
        let neg: Vec<i64> = c.iter().map(|x| -x).collect();
        let min = lp_solve(&problem(&all, &c, LpSense::Minimize)).unwrap();
        let max = lp_solve(&problem(&all, &neg, LpSense::Maximize)).unwrap();
        match (min, max) {
            (LpStatus::Optimal { value: a, .. }, LpStatus::Optimal { value: b, .. }) => prop_assert_eq!(a, -b),
            (a, b) => prop_assert_eq!(
                std::mem::discriminant(&a),
                std::mem::discriminant(&b)
            ),
        }
    }
}

#[test]
fn unboxed_ray_is_unbounded() {
    let rows = vec![(vec![-1, 0, 0], 0), (vec![0, -1, 0], 0), (vec![0, 0, 1], 2), (vec![0, 0, -1], 2)];
    let status = lp_solve(&problem(&rows, &[1, 1, 0], LpSense::Maximize)).unwrap();
    assert_eq!(status, LpStatus::Unbounded);
}

#[test]
fn fractional_optimum_is_exact() {
    // 3x + 2y ≤ 7, x + 4y ≤ 5 inside the box
    let rows = boxed(&[(vec![3, 2, 0], 7), (vec![1, 4, 0], 5)]);
    let LpStatus::Optimal { value, point } = lp_solve(&problem(&rows, &[1, 1, 0], LpSense::Maximize)).unwrap() else {
        panic!("expected an optimum");
    };
    assert_eq!(value, Rational::new(13.into(), 5.into()));
    assert_eq!(point.entries()[0], Rational::new(9.into(), 5.into()));
    assert_eq!(point.entries()[1], Rational::new(4.into(), 5.into()));
}
