//! Fraction-free revised simplex for standard-form problems
//! `min c·λ  s.t.  A λ = b, λ ≥ 0` with integer data.
//!
//! The basis inverse is kept as `det(B) · B⁻¹`, an integer matrix updated by
//! exact division (the Bareiss identity), so no rational normalization happens
//! inside the pivot loop. Entering and leaving variables follow Bland's rule.
//! Each solve first runs in checked `i128` arithmetic and restarts with
//! `BigInt` if anything overflows.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
#[cfg(test)]
use num_traits::One;

/// Column-major integer data of a standard-form problem.
#[derive(Clone, Debug)]
pub struct StandardForm {
    rows: usize,
    columns: Vec<Vec<BigInt>>,
    costs: Vec<BigInt>,
    small: Option<(Vec<Vec<i128>>, Vec<i128>)>,
}

const SMALL_BITS: u64 = 32;
const PRICE_BITS: u32 = 88;

fn fits_small(x: &BigInt) -> Option<i128> {
    (x.bits() < SMALL_BITS).then(|| x.to_i128().expect("small"))
}

impl StandardForm {
    pub fn new(rows: usize, columns: Vec<Vec<BigInt>>, costs: Vec<BigInt>) -> Self {
        assert_eq!(columns.len(), costs.len());
        assert!(columns.iter().all(|c| c.len() == rows));
        let small_columns = columns
            .iter()
            .map(|c| c.iter().map(fits_small).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>();
        let small_costs = costs.iter().map(fits_small).collect::<Option<Vec<_>>>();
        StandardForm {
            rows,
            columns,
            costs,
            small: small_columns.zip(small_costs),
        }
    }

    pub fn from_small(rows: usize, columns: Vec<Vec<i64>>, costs: Vec<i64>) -> Self {
        let big_cols = columns
            .iter()
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let big_costs = costs.iter().map(|&x| BigInt::from(x)).collect();
        Self::new(rows, big_cols, big_costs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct StandardSolution {
    pub status: StandardStatus,
    /// Objective value at the optimum.
    pub value: Option<BigRational>,
    /// Simplex multipliers `c_B B⁻¹` at the optimum (a dual solution).
    pub multipliers: Option<Vec<BigRational>>,
    pub pivots: usize,
}

/// Integer arithmetic for the tableau; `None` signals overflow.
trait Num: Clone + Ord + Sized {
    fn from_i64(x: i64) -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn data(form: &StandardForm) -> Option<(&[Vec<Self>], &[Self])>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
    fn sign(&self) -> i32;
    fn neg(&self) -> Self;
    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn is_zero(&self) -> bool {
        self.sign() == 0
    }
    /// `c·det − Σ y_k a_k`, the scaled reduced cost of a column.
    fn reduced_cost(c: &Self, det: &Self, y: &[Self], col: &[Self]) -> Option<Self> {
        let mut val = c.mul(det)?;
        for (yk, a) in y.iter().zip(col) {
            if !a.is_zero() && !yk.is_zero() {
                val = val.sub(&yk.mul(a)?)?;
            }
        }
        Some(val)
    }
}

impl Num for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn data(form: &StandardForm) -> Option<(&[Vec<Self>], &[Self])> {
        form.small.as_ref().map(|(c, k)| (c.as_slice(), k.as_slice()))
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> i32 {
        self.signum() as i32
    }
    fn neg(&self) -> Self {
        -self
    }
    fn reduced_cost(c: &Self, det: &Self, y: &[Self], col: &[Self]) -> Option<Self> {
        // Columns and costs are below 2^32, so small multipliers cannot
        // overflow the unchecked sum.
        let bound = 1i128 << PRICE_BITS;
        if y.len() <= 64 && det.abs() < bound && y.iter().all(|v| v.abs() < bound) {
            let mut val = c * det;
            for (yk, a) in y.iter().zip(col) {
                val -= yk * a;
            }
            return Some(val);
        }
        let mut val = c.checked_mul(*det)?;
        for (yk, a) in y.iter().zip(col) {
            val = val.checked_sub(yk.checked_mul(*a)?)?;
        }
        Some(val)
    }
}

impl Num for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn data(form: &StandardForm) -> Option<(&[Vec<Self>], &[Self])> {
        Some((&form.columns, &form.costs))
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> i32 {
        match self.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    One,
    Two,
}

struct Tableau<'a, T: Num> {
    columns: &'a [Vec<T>],
    costs: &'a [T],
    allowed: &'a dyn Fn(usize) -> bool,
    m: usize,
    ncols: usize,
    /// Variable ids; ids `>= ncols` are artificials.
    basis: Vec<usize>,
    art_sign: Vec<i64>,
    inv: Vec<Vec<T>>,
    det: T,
    beta: Vec<T>,
    in_basis: Vec<bool>,
    pivots: usize,
}

impl<'a, T: Num> Tableau<'a, T> {
    fn new(form: &'a StandardForm, rhs: &[BigInt], allowed: &'a dyn Fn(usize) -> bool) -> Option<Self> {
        let (columns, costs) = T::data(form)?;
        let m = form.rows;
        let ncols = columns.len();
        let art_sign: Vec<i64> = rhs.iter().map(|b| if b.is_negative() { -1 } else { 1 }).collect();
        let det_sign: i64 = art_sign.iter().product();
        // B = diag(s), B⁻¹ = diag(s), det·B⁻¹ = det·diag(s).
        let mut inv = vec![vec![T::zero(); m]; m];
        for (k, row) in inv.iter_mut().enumerate() {
            row[k] = T::from_i64(det_sign * art_sign[k]);
        }
        let beta = rhs
            .iter()
            .map(|b| T::from_big(&(BigInt::from(det_sign) * b.abs())))
            .collect::<Option<Vec<T>>>()?;
        let mut in_basis = vec![false; ncols + m];
        for flag in in_basis.iter_mut().skip(ncols) {
            *flag = true;
        }
        Some(Tableau {
            columns,
            costs,
            allowed,
            m,
            ncols,
            basis: (ncols..ncols + m).collect(),
            art_sign,
            inv,
            det: T::from_i64(det_sign),
            beta,
            in_basis,
            pivots: 0,
        })
    }

    fn is_artificial(&self, var: usize) -> bool {
        var >= self.ncols
    }

    fn cost(&self, var: usize, phase: Phase) -> T {
        match (phase, self.is_artificial(var)) {
            (Phase::One, true) => T::from_i64(1),
            (Phase::One, false) | (Phase::Two, true) => T::zero(),
            (Phase::Two, false) => self.costs[var].clone(),
        }
    }

    /// `det · B⁻¹ a_var`.
    fn alpha(&self, var: usize) -> Option<Vec<T>> {
        if self.is_artificial(var) {
            let k = var - self.ncols;
            let s = self.art_sign[k];
            return Some(
                self.inv
                    .iter()
                    .map(|row| if s < 0 { row[k].neg() } else { row[k].clone() })
                    .collect(),
            );
        }
        let col = &self.columns[var];
        self.inv
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for (x, a) in row.iter().zip(col) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&x.mul(a)?)?;
                    }
                }
                Some(acc)
            })
            .collect()
    }

    /// `c_B · (det · B⁻¹)`.
    fn scaled_multipliers(&self, phase: Phase) -> Option<Vec<T>> {
        let mut y = vec![T::zero(); self.m];
        for (i, &var) in self.basis.iter().enumerate() {
            let c = self.cost(var, phase);
            if c.is_zero() {
                continue;
            }
            for (yk, x) in y.iter_mut().zip(&self.inv[i]) {
                *yk = yk.add(&c.mul(x)?)?;
            }
        }
        Some(y)
    }

    /// Lowest-index eligible column with negative reduced cost.
    fn entering(&self, phase: Phase) -> Option<Option<usize>> {
        let y = self.scaled_multipliers(phase)?;
        let det_sign = self.det.sign();
        let zero = T::zero();
        for j in 0..self.ncols {
            if self.in_basis[j] || !(self.allowed)(j) {
                continue;
            }
            let c = if phase == Phase::Two { &self.costs[j] } else { &zero };
            let val = T::reduced_cost(c, &self.det, &y, &self.columns[j])?;
            if val.sign() * det_sign < 0 {
                return Some(Some(j));
            }
        }
        Some(None)
    }

    /// Bland ratio test: minimum `β_i / α_i` over rows with positive
    /// direction, ties broken by smallest basic variable id.
    fn leaving(&self, alpha: &[T]) -> Option<Option<usize>> {
        let det_sign = self.det.sign();
        let mut best: Option<usize> = None;
        for i in 0..self.m {
            if alpha[i].sign() * det_sign <= 0 {
                continue;
            }
            let Some(b) = best else {
                best = Some(i);
                continue;
            };
            // β_i/α_i vs β_b/α_b; α_i·α_b > 0.
            let lhs = self.beta[i].mul(&alpha[b])?;
            let rhs = self.beta[b].mul(&alpha[i])?;
            best = match lhs.cmp(&rhs) {
                Ordering::Less => Some(i),
                Ordering::Greater => Some(b),
                Ordering::Equal if self.basis[i] < self.basis[b] => Some(i),
                Ordering::Equal => Some(b),
            };
        }
        Some(best)
    }

    fn pivot(&mut self, row: usize, var: usize, alpha: Vec<T>) -> Option<()> {
        let ar = alpha[row].clone();
        for i in 0..self.m {
            if i == row {
                continue;
            }
            let ai = &alpha[i];
            let (head, tail) = if i < row {
                let (a, b) = self.inv.split_at_mut(row);
                (&mut a[i], &b[0])
            } else {
                let (a, b) = self.inv.split_at_mut(i);
                (&mut b[0], &a[row])
            };
            for (x, r) in head.iter_mut().zip(tail.iter()) {
                let v = ar.mul(x)?.sub(&ai.mul(r)?)?;
                *x = v.div_exact(&self.det);
            }
            let v = ar.mul(&self.beta[i])?.sub(&ai.mul(&self.beta[row])?)?;
            self.beta[i] = v.div_exact(&self.det);
        }
        let old = self.basis[row];
        self.in_basis[old] = false;
        self.in_basis[var] = true;
        self.basis[row] = var;
        self.det = ar;
        self.pivots += 1;
        Some(())
    }

    /// Runs pivots until optimal (`true`) or unbounded (`false`).
    fn optimize(&mut self, phase: Phase) -> Option<bool> {
        loop {
            let Some(q) = self.entering(phase)? else {
                return Some(true);
            };
            let alpha = self.alpha(q)?;
            let Some(r) = self.leaving(&alpha)? else {
                return Some(false);
            };
            self.pivot(r, q, alpha)?;
        }
    }

    fn objective(&self, phase: Phase) -> Option<BigRational> {
        let mut acc = <BigInt as Zero>::zero();
        for (i, &var) in self.basis.iter().enumerate() {
            acc += self.cost(var, phase).to_big() * self.beta[i].to_big();
        }
        Some(BigRational::new(acc, self.det.to_big()))
    }

    /// Pivots zero-level artificials out of the basis where possible.
    fn drive_out_artificials(&mut self) -> Option<()> {
        for row in 0..self.m {
            if !self.is_artificial(self.basis[row]) {
                continue;
            }
            for j in 0..self.ncols {
                if self.in_basis[j] || !(self.allowed)(j) {
                    continue;
                }
                let alpha = self.alpha(j)?;
                if !alpha[row].is_zero() {
                    self.pivot(row, j, alpha)?;
                    break;
                }
            }
        }
        Some(())
    }

    fn run(mut self) -> Option<StandardSolution> {
        let bounded = self.optimize(Phase::One)?;
        debug_assert!(bounded, "phase one is bounded below by zero");
        let done = |t: &Self, status| StandardSolution {
            status,
            value: None,
            multipliers: None,
            pivots: t.pivots,
        };
        if self.objective(Phase::One)?.is_positive() {
            return Some(done(&self, StandardStatus::Infeasible));
        }
        self.drive_out_artificials()?;
        if !self.optimize(Phase::Two)? {
            return Some(done(&self, StandardStatus::Unbounded));
        }
        let det = self.det.to_big();
        let multipliers = self
            .scaled_multipliers(Phase::Two)?
            .iter()
            .map(|v| BigRational::new(v.to_big(), det.clone()))
            .collect();
        Some(StandardSolution {
            status: StandardStatus::Optimal,
            value: Some(self.objective(Phase::Two)?),
            multipliers: Some(multipliers),
            pivots: self.pivots,
        })
    }
}

/// Solves `min c·λ, A λ = rhs, λ ≥ 0` over the columns for which
/// `allowed(j)` holds.
pub fn solve(form: &StandardForm, rhs: &[BigInt], allowed: &dyn Fn(usize) -> bool) -> StandardSolution {
    assert_eq!(rhs.len(), form.rows);
    if let Some(sol) = Tableau::<i128>::new(form, rhs, allowed).and_then(Tableau::run) {
        return sol;
    }
    Tableau::<BigInt>::new(form, rhs, allowed)
        .and_then(Tableau::run)
        .expect("BigInt arithmetic does not overflow")
}

/// Same as [`solve`] but never uses the `i128` path.
#[cfg(test)]
fn solve_big(form: &StandardForm, rhs: &[BigInt], allowed: &dyn Fn(usize) -> bool) -> StandardSolution {
    Tableau::<BigInt>::new(form, rhs, allowed)
        .and_then(Tableau::run)
        .expect("BigInt arithmetic does not overflow")
}
