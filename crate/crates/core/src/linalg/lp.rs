//! Exact linear programs over free variables, solved through their dual in
//! standard form.
//!
//! The primal `max c·x  s.t.  a_i·x ≤ b_i (i ∈ L), a_i·x = b_i (i ∈ E)` has the
//! dual `min Σ b_i y_i  s.t.  Σ y_i a_i = c, y_L ≥ 0`. The revised simplex
//! multipliers of the dual are an optimal primal point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::simplex::{self, StandardForm, StandardStatus};
use super::{Rational, RationalVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpSense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpConstraint {
    pub coeffs: RationalVector,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LpConstraint {
    pub fn le(coeffs: RationalVector, rhs: Rational) -> Self {
        LpConstraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        }
    }

    pub fn eq(coeffs: RationalVector, rhs: Rational) -> Self {
        LpConstraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub constraints: Vec<LpConstraint>,
    pub objective: RationalVector,
    pub sense: LpSense,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal {
        value: Rational,
        point: RationalVector,
    },
    Unbounded,
    Infeasible,
}

/// Least common denominator.
fn scale_to_integers<'a>(entries: impl Iterator<Item = &'a Rational>) -> BigInt {
    entries.fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

fn integerize(v: &Rational, scale: &BigInt) -> BigInt {
    v.numer() * (scale / v.denom())
}

/// Solves the problem exactly (Bland's rule; deterministic for a fixed
/// constraint order).
pub fn lp_solve(p: &LpProblem) -> Result<LpStatus> {
    let n = p.objective.len();
    for c in &p.constraints {
        if c.coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.coeffs.len(),
            });
        }
    }
    let maximize_obj: Vec<Rational> = match p.sense {
        LpSense::Maximize => p.objective.entries().to_vec(),
        LpSense::Minimize => p.objective.entries().iter().map(|x| -x).collect(),
    };

    let mut columns = Vec::new();
    let mut costs = Vec::new();
    for c in &p.constraints {
        let scale = scale_to_integers(c.coeffs.entries().iter().chain(std::iter::once(&c.rhs)));
        let col: Vec<BigInt> = c.coeffs.entries().iter().map(|x| integerize(x, &scale)).collect();
        let cost = integerize(&c.rhs, &scale);
        if c.relation == Relation::Eq {
            columns.push(col.iter().map(|x| -x).collect());
            costs.push(-cost.clone());
        }
        columns.push(col);
        costs.push(cost);
    }
    let form = StandardForm::new(n, columns, costs);
    let rhs_scale = scale_to_integers(maximize_obj.iter());
    let rhs: Vec<BigInt> = maximize_obj.iter().map(|x| integerize(x, &rhs_scale)).collect();

    let sol = simplex::solve(&form, &rhs, &|_| true);
    match sol.status {
        StandardStatus::Optimal => {
            let point = RationalVector::new(sol.multipliers.expect("optimal multipliers"));
            let obj = RationalVector::new(maximize_obj);
            let mut value = obj.dot(&point)?;
            if p.sense == LpSense::Minimize {
                value = -value;
            }
            Ok(LpStatus::Optimal { value, point })
        }
        StandardStatus::Unbounded => Ok(LpStatus::Infeasible),
        StandardStatus::Infeasible => {
            // Dual infeasible: the primal is unbounded or infeasible. The
            // primal is feasible iff the dual with zero objective is bounded.
            let zero = vec![BigInt::zero(); n];
            let check = simplex::solve(&form, &zero, &|_| true);
            Ok(match check.status {
                StandardStatus::Unbounded => LpStatus::Infeasible,
                _ => LpStatus::Unbounded,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rational};

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    #[test]
    fn bounded_one_dimensional() {
        let p = LpProblem {
            constraints: vec![LpConstraint::le(v(&[1]), int(1)), LpConstraint::le(v(&[-1]), int(0))],
            objective: v(&[1]),
            sense: LpSense::Maximize,
        };
        assert_eq!(
            lp_solve(&p).unwrap(),
            LpStatus::Optimal {
                value: int(1),
                point: v(&[1])
            }
        );
    }

    #[test]
    fn unbounded_one_dimensional() {
        let p = LpProblem {
            constraints: vec![LpConstraint::le(v(&[-1]), int(0))],
            objective: v(&[1]),
            sense: LpSense::Maximize,
        };
        assert_eq!(lp_solve(&p).unwrap(), LpStatus::Unbounded);
    }

    #[test]
    fn infeasible_detected() {
        let p = LpProblem {
            constraints: vec![LpConstraint::le(v(&[1]), int(-1)), LpConstraint::le(v(&[-1]), int(0))],
            objective: v(&[1]),
            sense: LpSense::Maximize,
        };
        assert_eq!(lp_solve(&p).unwrap(), LpStatus::Infeasible);
    }

    #[test]
    fn equality_and_minimize_with_fractions() {
        // min x + y  s.t. x + 2y = 3/2, x ≥ 0, y ≥ 0  →  x = 0, y = 3/4.
        let p = LpProblem {
            constraints: vec![
                LpConstraint::eq(v(&[1, 2]), rational(3, 2)),
                LpConstraint::le(v(&[-1, 0]), int(0)),
                LpConstraint::le(v(&[0, -1]), int(0)),
            ],
            objective: v(&[1, 1]),
            sense: LpSense::Minimize,
        };
        assert_eq!(
            lp_solve(&p).unwrap(),
            LpStatus::Optimal {
                value: rational(3, 4),
                point: RationalVector::new(vec![int(0), rational(3, 4)])
            }
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let p = LpProblem {
            constraints: vec![LpConstraint::le(v(&[1, 0]), int(1))],
            objective: v(&[1]),
            sense: LpSense::Maximize,
        };
        assert!(matches!(lp_solve(&p), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn deterministic() {
        let p = LpProblem {
            constraints: vec![
                LpConstraint::le(v(&[1, 1, 0]), int(2)),
                LpConstraint::le(v(&[0, 1, 1]), int(2)),
                LpConstraint::le(v(&[1, 0, 1]), int(2)),
                LpConstraint::le(v(&[-1, 0, 0]), int(0)),
                LpConstraint::le(v(&[0, -1, 0]), int(0)),
                LpConstraint::le(v(&[0, 0, -1]), int(0)),
            ],
            objective: v(&[1, 1, 1]),
            sense: LpSense::Maximize,
        };
        let a = lp_solve(&p).unwrap();
        assert_eq!(a, lp_solve(&p).unwrap());
        assert!(matches!(a, LpStatus::Optimal { ref value, .. } if *value == int(3)));
    }
}
