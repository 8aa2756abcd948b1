//! Pointed polyhedral cones in H- and V-representation and the face tests
//! built on exact ranks of tight sets.

mod dd;
mod graph;
mod redundancy;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::rank_i64;
use crate::pairs::{pair_count, points_for_len};

pub use dd::{double_description, DD_MAX_DIM, DD_MAX_INEQUALITIES};
pub use graph::{bfs_diameter, bfs_distances, Diameter};
pub use redundancy::{is_redundant, remove_redundancy, remove_redundant_inequalities, RedundancyStats};

/// Which side of zero is feasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    /// `⟨coeffs, d⟩ ≤ 0` (hypermetric convention).
    Le,
    /// `⟨coeffs, d⟩ ≥ 0` (the convention of cut-cone facet tables).
    Ge,
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x))
}

/// A homogeneous linear inequality on pair-indexed vectors, stored with
/// content 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Inequality {
    coeffs: Vec<i64>,
    side: Side,
}

impl Inequality {
    pub fn new(coeffs: Vec<i64>, side: Side) -> Result<Self> {
        let g = content(&coeffs);
        if g == 0 {
            return Err(Error::ZeroVector("inequality"));
        }
        let coeffs = if g == 1 { coeffs } else { coeffs.into_iter().map(|x| x / g).collect() };
        Ok(Inequality { coeffs, side })
    }

    /// `⟨coeffs, d⟩ ≤ 0`.
    pub fn le(coeffs: Vec<i64>) -> Result<Self> {
        Self::new(coeffs, Side::Le)
    }

    /// `⟨coeffs, d⟩ ≥ 0`.
    pub fn ge(coeffs: Vec<i64>) -> Result<Self> {
        Self::new(coeffs, Side::Ge)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// The same halfspace written as `⟨c, d⟩ ≤ 0`.
    pub fn to_le(&self) -> Inequality {
        match self.side {
            Side::Le => self.clone(),
            Side::Ge => Inequality {
                coeffs: self.coeffs.iter().map(|x| -x).collect(),
                side: Side::Le,
            },
        }
    }

    /// The closed complementary halfspace (same coefficients, other side).
    pub fn reversed(&self) -> Inequality {
        Inequality {
            coeffs: self.coeffs.clone(),
            side: match self.side {
                Side::Le => Side::Ge,
                Side::Ge => Side::Le,
            },
        }
    }

    /// Signed distance into the feasible side: non-negative iff satisfied.
    pub fn slack(&self, r: &RayVector) -> Result<i128> {
        let v = evaluate(self, r)?;
        Ok(match self.side {
            Side::Le => -v,
            Side::Ge => v,
        })
    }

    pub fn is_satisfied_by(&self, r: &RayVector) -> Result<bool> {
        Ok(self.slack(r)? >= 0)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ints(f, &self.coeffs)?;
        match self.side {
            Side::Le => write!(f, " <= 0"),
            Side::Ge => write!(f, " >= 0"),
        }
    }
}

/// A primitive integer generator of a ray: content 1, first nonzero entry
/// positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RayVector {
    coords: Vec<i64>,
}

impl RayVector {
    pub fn new(mut coords: Vec<i64>) -> Result<Self> {
        let g = content(&coords);
        if g == 0 {
            return Err(Error::ZeroVector("ray"));
        }
        let first = *coords.iter().find(|x| **x != 0).unwrap();
        let g = if first < 0 { -g } else { g };
        if g != 1 {
            coords.iter_mut().for_each(|x| *x /= g);
        }
        Ok(RayVector { coords })
    }

    /// Like [`RayVector::new`] but keeps the direction: only divides by the
    /// positive content.
    pub fn directed(mut coords: Vec<i64>) -> Result<Self> {
        let g = content(&coords);
        if g == 0 {
            return Err(Error::ZeroVector("ray"));
        }
        if g != 1 {
            coords.iter_mut().for_each(|x| *x /= g);
        }
        Ok(RayVector { coords })
    }

    pub fn from_bigints(v: &[BigInt], keep_direction: bool) -> Result<Self> {
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Err(Error::ZeroVector("ray"));
        }
        let coords = v
            .iter()
            .map(|x| (x / &g).to_i64().ok_or(Error::Overflow("ray coordinate")))
            .collect::<Result<Vec<_>>>()?;
        if keep_direction {
            Self::directed(coords)
        } else {
            Self::new(coords)
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }
}

impl fmt::Display for RayVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ints(f, &self.coords)
    }
}

fn write_ints(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// A cone `{d : ⟨a, d⟩ ≤ 0 for all listed a}`. Inequalities are stored in
/// `≤` form; exact duplicates are dropped on construction (first kept).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCone {
    n: usize,
    dim: usize,
    inequalities: Vec<Inequality>,
}

impl HCone {
    pub fn new(n: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        let dim = pair_count(n);
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(inequalities.len());
        for f in inequalities {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.dim(),
                });
            }
            let f = f.to_le();
            if seen.insert(f.coeffs.clone()) {
                out.push(f);
            }
        }
        Ok(HCone {
            n,
            dim,
            inequalities: out,
        })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    fn check(&self, r: &RayVector) -> Result<()> {
        if r.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: r.dim(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, r: &RayVector) -> Result<bool> {
        self.check(r)?;
        Ok(self.inequalities.iter().all(|f| dot(&f.coeffs, &r.coords) <= 0))
    }
}

/// A cone generated by rays. Rays are normalized and deduplicated on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCone {
    n: usize,
    dim: usize,
    rays: Vec<RayVector>,
}

impl VCone {
    pub fn new(n: usize, rays: Vec<RayVector>) -> Result<Self> {
        let dim = pair_count(n);
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(rays.len());
        for r in rays {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.dim(),
                });
            }
            let r = RayVector::new(r.coords)?;
            if seen.insert(r.coords.clone()) {
                out.push(r);
            }
        }
        Ok(VCone { n, dim, rays: out })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[RayVector] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }
}

/// `⟨f.coeffs, r.coords⟩`. How the sign is read depends on `f.side()`: for
/// `Ge` inequalities a negative value is a violation, for `Le` a positive one.
pub fn evaluate(f: &Inequality, r: &RayVector) -> Result<i128> {
    if f.dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: r.dim(),
        });
    }
    Ok(dot(&f.coeffs, &r.coords))
}

/// Indices of inequalities of `c` that are tight on `r`.
pub fn tight_set(c: &HCone, r: &RayVector) -> Result<Vec<usize>> {
    c.check(r)?;
    let mut out = Vec::new();
    for (k, f) in c.inequalities.iter().enumerate() {
        let v = dot(&f.coeffs, &r.coords);
        if v > 0 {
            return Err(Error::NotInCone { index: k, value: v });
        }
        if v == 0 {
            out.push(k);
        }
    }
    Ok(out)
}

fn tight_rank(c: &HCone, tight: &[usize]) -> usize {
    rank_i64(tight.iter().map(|&k| c.inequalities[k].coeffs()), c.dim, None)
}

pub fn is_extreme_ray(c: &HCone, r: &RayVector) -> Result<bool> {
    let tight = tight_set(c, r)?;
    Ok(tight.len() + 1 >= c.dim && tight_rank(c, &tight) == c.dim - 1)
}

/// Indices of rays of `v` incident to `f`; fails with a witness if some ray
/// violates `f`.
pub fn incident_rays(v: &VCone, f: &Inequality) -> Result<Vec<usize>> {
    if f.dim() != v.dim {
        return Err(Error::DimensionMismatch {
            expected: v.dim,
            found: f.dim(),
        });
    }
    let mut out = Vec::new();
    for (k, r) in v.rays.iter().enumerate() {
        let s = f.slack(r)?;
        if s < 0 {
            return Err(Error::InvalidInequality { index: k, value: s });
        }
        if s == 0 {
            out.push(k);
        }
    }
    Ok(out)
}

fn incident_rank(v: &VCone, incident: &[usize]) -> usize {
    rank_i64(incident.iter().map(|&k| v.rays[k].coords()), v.dim, None)
}

pub fn is_facet(v: &VCone, f: &Inequality) -> Result<bool> {
    let inc = incident_rays(v, f)?;
    Ok(inc.len() + 1 >= v.dim && incident_rank(v, &inc) == v.dim - 1)
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn rays_adjacent(c: &HCone, r1: &RayVector, r2: &RayVector) -> Result<bool> {
    let t1 = tight_set(c, r1)?;
    let t2 = tight_set(c, r2)?;
    for t in [&t1, &t2] {
        if t.len() + 1 < c.dim || tight_rank(c, t) != c.dim - 1 {
            return Err(Error::NotExtreme);
        }
    }
    if RayVector::new(r1.coords.clone())? == RayVector::new(r2.coords.clone())? {
        return Ok(false);
    }
    let common = intersect_sorted(&t1, &t2);
    Ok(common.len() + 2 >= c.dim && tight_rank(c, &common) == c.dim - 2)
}

pub fn facets_adjacent(v: &VCone, f1: &Inequality, f2: &Inequality) -> Result<bool> {
    let i1 = incident_rays(v, f1)?;
    let i2 = incident_rays(v, f2)?;
    for inc in [&i1, &i2] {
        if inc.len() + 1 < v.dim || incident_rank(v, inc) != v.dim - 1 {
            return Err(Error::NotFacet);
        }
    }
    if f1.to_le() == f2.to_le() {
        return Ok(false);
    }
    let common = intersect_sorted(&i1, &i2);
    Ok(common.len() + 2 >= v.dim && incident_rank(v, &common) == v.dim - 2)
}

/// Infers `n` from a vector length.
pub fn points_of(v: &[i64]) -> Result<usize> {
    points_for_len(v.len())
}
