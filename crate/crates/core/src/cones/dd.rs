//! Double description for small pointed cones `{x : A x ≤ 0}`.
//!
//! Starts from a simplicial cone on the first linearly independent rows and
//! adds the remaining rows in input order. Ray pairs are combined only when
//! combinatorially adjacent: no third ray's zero set contains the common zero
//! set.

use num_bigint::BigInt;

use super::{HCone, RayVector, VCone};
use crate::error::{Error, Result};
use crate::linalg::{solve_homogeneous, IntEchelon, RationalMatrix};

pub const DD_MAX_DIM: usize = 15;
pub const DD_MAX_INEQUALITIES: usize = 400;

#[derive(Clone)]
struct Ray {
    v: Vec<i128>,
    zero: Vec<u64>,
}

fn words(m: usize) -> usize {
    m.div_ceil(64)
}

fn set_bit(z: &mut [u64], k: usize) {
    z[k / 64] |= 1 << (k % 64);
}

fn contains_all(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(s, t)| t & !s == 0)
}

fn dot(a: &[i64], v: &[i128]) -> Result<i128> {
    a.iter().zip(v).try_fold(0i128, |acc, (&x, &y)| {
        (x as i128)
            .checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("double description dot product"))
    })
}

fn primitive(mut v: Vec<i128>) -> Vec<i128> {
    use num_integer::Integer;
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    v
}

/// Extreme rays of `c`, normalized and sorted.
pub fn double_description(c: &HCone) -> Result<VCone> {
    let dim = c.dim();
    let m = c.len();
    if dim > DD_MAX_DIM {
        return Err(Error::TooLarge {
            what: "dimension",
            found: dim,
            limit: DD_MAX_DIM,
        });
    }
    if m > DD_MAX_INEQUALITIES {
        return Err(Error::TooLarge {
            what: "inequalities",
            found: m,
            limit: DD_MAX_INEQUALITIES,
        });
    }
    let rows: Vec<&[i64]> = c.inequalities().iter().map(|f| f.coeffs()).collect();

    let mut ech = IntEchelon::new(dim);
    let mut basis = Vec::with_capacity(dim);
    for (k, r) in rows.iter().enumerate() {
        if ech.insert(r) {
            basis.push(k);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::NotPointed {
            rank: basis.len(),
            dim,
        });
    }

    let w = words(m);
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for (k, &bk) in basis.iter().enumerate() {
        let others: Vec<&[i64]> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &b)| rows[b])
            .collect();
        let mat = RationalMatrix::from_int_rows(&others, dim)?;
        let ns = solve_homogeneous(&mat);
        debug_assert_eq!(ns.len(), 1);
        let ints: Vec<BigInt> = ns[0].to_primitive_integers().expect("nonzero nullspace vector");
        let mut v: Vec<i128> = ints
            .iter()
            .map(|x| i128::try_from(x).map_err(|_| Error::Overflow("initial ray")))
            .collect::<Result<_>>()?;
        if dot(rows[bk], &v)? > 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        let mut zero = vec![0u64; w];
        for (j, &b) in basis.iter().enumerate() {
            if j != k {
                set_bit(&mut zero, b);
            }
        }
        rays.push(Ray { v, zero });
    }

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }
    for i in (0..m).filter(|&i| !in_basis[i]) {
        let values: Vec<i128> = rays.iter().map(|r| dot(rows[i], &r.v)).collect::<Result<_>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k] > 0).collect();
        if pos.is_empty() {
            for (r, &val) in rays.iter_mut().zip(&values) {
                if val == 0 {
                    set_bit(&mut r.zero, i);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k] < 0).collect();
        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common: Vec<u64> = rays[p].zero.iter().zip(&rays[q].zero).map(|(a, b)| a & b).collect();
                let count: usize = common.iter().map(|x| x.count_ones() as usize).sum();
                if count + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && contains_all(&r.zero, &common));
                if blocked {
                    continue;
                }
                let (vp, vq) = (values[p], -values[q]);
                let v = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(&a, &b)| {
                        vq.checked_mul(a)
                            .zip(vp.checked_mul(b))
                            .and_then(|(x, y)| x.checked_add(y))
                            .ok_or(Error::Overflow("double description combination"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mut zero = common;
                set_bit(&mut zero, i);
                created.push(Ray {
                    v: primitive(v),
                    zero,
                });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() - pos.len() + created.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if values[k] < 0 {
                next.push(r);
            } else if values[k] == 0 {
                set_bit(&mut r.zero, i);
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }

    let mut out = rays
        .into_iter()
        .map(|r| {
            let v = r
                .v
                .into_iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::Overflow("ray coordinate")))
                .collect::<Result<Vec<_>>>()?;
            RayVector::new(v)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    VCone::new(c.points(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermetric::{generate_cuts, generate_met};

    #[test]
    fn met3_is_cut3() {
        let v = double_description(&generate_met(3).unwrap()).unwrap();
        let mut cuts = generate_cuts(3).unwrap().rays().to_vec();
        cuts.sort();
        assert_eq!(v.rays(), cuts.as_slice());
    }

    #[test]
    fn met4_is_cut4() {
        let v = double_description(&generate_met(4).unwrap()).unwrap();
        assert_eq!(v.len(), 7);
    }

    #[test]
    fn guards() {
        let big = generate_met(7).unwrap();
        assert!(matches!(double_description(&big), Err(Error::TooLarge { what: "dimension", .. })));
    }
}
