//! Exact rational linear algebra and linear programming.

mod bareiss;
mod echelon;
mod lp;
pub(crate) mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use bareiss::{integer_rank, rank, solve_homogeneous};
pub use echelon::{rank_i64, IntEchelon};
pub use lp::{lp_solve, LpConstraint, LpProblem, LpSense, LpStatus, Relation};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RationalVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RationalVector(vec![Rational::zero(); len])
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RationalVector(entries.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> Result<Rational> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Smallest positive integer multiple with coprime integer entries
    /// (sign preserved). Returns `None` for the zero vector.
    pub fn to_primitive_integers(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled: Vec<BigInt> = self
            .0
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        Some(scaled.into_iter().map(|x| x / &g).collect())
    }
}

impl std::ops::Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<RationalVector>,
    cols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<RationalVector>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(RationalMatrix { rows, cols })
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R], cols: usize) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| RationalVector::from_ints(r.as_ref()))
                .collect(),
            cols,
        )
    }

    pub fn identity(size: usize) -> Self {
        let rows = (0..size)
            .map(|i| {
                let mut v = vec![Rational::zero(); size];
                v[i] = Rational::one();
                RationalVector(v)
            })
            .collect();
        RationalMatrix { rows, cols: size }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[RationalVector] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|c| RationalVector(self.rows.iter().map(|r| r.0[c].clone()).collect()))
            .collect();
        RationalMatrix {
            rows,
            cols: self.rows.len(),
        }
    }

    pub fn mul_vec(&self, v: &RationalVector) -> Result<RationalVector> {
        self.rows
            .iter()
            .map(|r| r.dot(v))
            .collect::<Result<Vec<_>>>()
            .map(RationalVector)
    }

    /// Rows scaled to integers by the lcm of their denominators.
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let lcm = r.0.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                r.0.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
            })
            .collect()
    }
}
