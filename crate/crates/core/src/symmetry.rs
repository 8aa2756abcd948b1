//! The symmetric group `Sym(n)` acting on pair-indexed vectors by relabeling
//! points: `(p·v)[(p(a), p(b))] = v[(a, b)]`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairs::{pair_count, pair_index, pairs};

pub const MAX_POINTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointPermutation {
    image: Vec<usize>,
}

impl PointPermutation {
    /// 0-based images; `image[i] = p(i)`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(PointPermutation { image })
    }

    /// 1-based images, as written in cycle-free notation.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::InvalidPermutation("0 in a 1-based image".into()));
        }
        Self::new(image.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        PointPermutation {
            image: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        PointPermutation { image }
    }

    pub fn points(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn at(&self, i: usize) -> usize {
        self.image[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &PointPermutation) -> PointPermutation {
        PointPermutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn inverse(&self) -> PointPermutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        PointPermutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Relabels a point set.
    pub fn apply_to_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.image[i]).collect();
        out.sort_unstable();
        out
    }

    /// For each target pair position, the source pair position.
    fn pair_sources(&self) -> Vec<u8> {
        let n = self.image.len();
        let inv = self.inverse();
        pairs(n)
            .into_iter()
            .map(|(i, j)| pair_index(n, inv.image[i], inv.image[j]) as u8)
            .collect()
    }
}

impl fmt::Display for PointPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.image.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

/// All of `Sym(n)` in lexicographic order, with the induced pair action
/// precomputed.
pub struct SymmetricGroup {
    n: usize,
    perms: Vec<PointPermutation>,
    sources: Vec<Vec<u8>>,
}

impl SymmetricGroup {
    fn build(n: usize) -> Self {
        let mut perms = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            perms.push(PointPermutation { image: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let sources = perms.iter().map(|p| p.pair_sources()).collect();
        SymmetricGroup { n, perms, sources }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn permutations(&self) -> &[PointPermutation] {
        &self.perms
    }

    pub fn permutation(&self, k: usize) -> &PointPermutation {
        &self.perms[k]
    }

    /// Image of `v` under the `k`-th permutation.
    #[inline]
    pub fn apply_index(&self, k: usize, v: &[i64]) -> Vec<i64> {
        self.sources[k].iter().map(|&s| v[s as usize]).collect()
    }

    #[inline]
    fn apply_into(&self, k: usize, v: &[i64], out: &mut [i64]) {
        for (o, &s) in out.iter_mut().zip(&self.sources[k]) {
            *o = v[s as usize];
        }
    }

    /// Lexicographically smallest image.
    pub fn canonical_form(&self, v: &[i64]) -> Vec<i64> {
        self.canonical_with_witness(v).0
    }

    /// Smallest image together with the index of a permutation producing it.
    pub fn canonical_with_witness(&self, v: &[i64]) -> (Vec<i64>, usize) {
        let mut best = v.to_vec();
        let mut witness = 0;
        for (k, src) in self.sources.iter().enumerate().skip(1) {
            let mut smaller = false;
            for (pos, &s) in src.iter().enumerate() {
                let x = v[s as usize];
                if x != best[pos] {
                    smaller = x < best[pos];
                    break;
                }
            }
            if smaller {
                self.apply_into(k, v, &mut best);
                witness = k;
            }
        }
        (best, witness)
    }

    /// Distinct images, sorted.
    pub fn orbit(&self, v: &[i64]) -> Vec<Vec<i64>> {
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        for k in 0..self.order() {
            set.insert(self.apply_index(k, v));
        }
        let mut out: Vec<Vec<i64>> = set.into_iter().collect();
        out.sort();
        out
    }

    /// Distinct images (sorted), each with the first permutation index that
    /// produces it from `v`.
    pub fn orbit_with_transporters(&self, v: &[i64]) -> Vec<(Vec<i64>, usize)> {
        let mut map: HashMap<Vec<i64>, usize> = HashMap::new();
        for k in 0..self.order() {
            map.entry(self.apply_index(k, v)).or_insert(k);
        }
        let mut out: Vec<(Vec<i64>, usize)> = map.into_iter().collect();
        out.sort();
        out
    }

    pub fn stabilizer(&self, v: &[i64]) -> Vec<PointPermutation> {
        (0..self.order())
            .filter(|&k| self.sources[k].iter().enumerate().all(|(pos, &s)| v[s as usize] == v[pos]))
            .map(|k| self.perms[k].clone())
            .collect()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Shared `Sym(n)` tables for `1 <= n <= 8`.
pub fn symmetric_group(n: usize) -> Result<&'static SymmetricGroup> {
    static GROUPS: [OnceLock<SymmetricGroup>; MAX_POINTS + 1] = [const { OnceLock::new() }; MAX_POINTS + 1];
    if n == 0 || n > MAX_POINTS {
        return Err(Error::UnsupportedN {
            n,
            min: 1,
            max: MAX_POINTS,
        });
    }
    Ok(GROUPS[n].get_or_init(|| SymmetricGroup::build(n)))
}

fn check_len(n: usize, v: &[i64]) -> Result<()> {
    if v.len() != pair_count(n) {
        return Err(Error::DimensionMismatch {
            expected: pair_count(n),
            found: v.len(),
        });
    }
    Ok(())
}

/// `w[(i, j)] = v[(p⁻¹(i), p⁻¹(j))]`.
pub fn apply(p: &PointPermutation, v: &[i64]) -> Result<Vec<i64>> {
    let n = p.points();
    check_len(n, v)?;
    let mut w = vec![0; v.len()];
    for (k, (a, b)) in pairs(n).into_iter().enumerate() {
        w[pair_index(n, p.at(a), p.at(b))] = v[k];
    }
    Ok(w)
}

pub fn canonical_form(v: &[i64], n: usize) -> Result<Vec<i64>> {
    check_len(n, v)?;
    Ok(symmetric_group(n)?.canonical_form(v))
}

pub fn orbit(v: &[i64], n: usize) -> Result<Vec<Vec<i64>>> {
    check_len(n, v)?;
    Ok(symmetric_group(n)?.orbit(v))
}

pub fn stabilizer(v: &[i64], n: usize) -> Result<Vec<PointPermutation>> {
    check_len(n, v)?;
    Ok(symmetric_group(n)?.stabilizer(v))
}

/// One representative per group orbit of `items`, restricted to `items`.
#[derive(Clone, Debug)]
pub struct Transversal {
    /// Indices into `items`, in first-occurrence order.
    pub representatives: Vec<usize>,
    /// For every item, the position of its representative in
    /// `representatives`.
    pub orbit_of: Vec<usize>,
}

/// Verifies closure under composition. A set of `n!` distinct permutations is
/// all of `Sym(n)` and needs no pairwise check.
pub fn check_closed(group: &[PointPermutation]) -> Result<()> {
    let Some(first) = group.first() else {
        return Ok(());
    };
    let n = first.points();
    let set: HashSet<&PointPermutation> = group.iter().collect();
    if group.iter().any(|p| p.points() != n) {
        return Err(Error::GroupNotClosed);
    }
    let factorial: usize = (1..=n).product();
    if set.len() == factorial {
        return Ok(());
    }
    for p in group {
        for q in group {
            if !set.contains(&p.compose(q)) {
                return Err(Error::GroupNotClosed);
            }
        }
    }
    Ok(())
}

pub fn orbit_transversal<V: AsRef<[i64]>>(items: &[V], group: &[PointPermutation]) -> Result<Transversal> {
    check_closed(group)?;
    let index: HashMap<&[i64], usize> = items
        .iter()
        .enumerate()
        .map(|(k, v)| (v.as_ref(), k))
        .rev()
        .collect();
    let mut orbit_of = vec![usize::MAX; items.len()];
    let mut representatives = Vec::new();
    for (k, item) in items.iter().enumerate() {
        if orbit_of[k] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(k);
        orbit_of[k] = id;
        for p in group {
            let image = apply(p, item.as_ref())?;
            if let Some(&j) = index.get(image.as_slice()) {
                orbit_of[j] = id;
            }
        }
    }
    // Exact duplicates share the first occurrence's orbit.
    for (k, item) in items.iter().enumerate() {
        let first = index[item.as_ref()];
        orbit_of[k] = orbit_of[first];
    }
    Ok(Transversal {
        representatives,
        orbit_of,
    })
}

/// A partition of vectors into `Sym(n)`-orbits.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitTable {
    pub n: usize,
    /// Canonical (lexicographically minimal) form of each orbit.
    pub canonical: Vec<Vec<i64>>,
    /// Orbit sizes in the ambient space.
    pub sizes: Vec<usize>,
    /// For each input member, its orbit index.
    pub member_orbit: Vec<usize>,
}

impl OrbitTable {
    /// Partitions `members` by canonical form. Orbits are numbered in order of
    /// first appearance.
    pub fn partition<V: AsRef<[i64]>>(members: &[V], n: usize) -> Result<Self> {
        let group = symmetric_group(n)?;
        let mut ids: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut canonical = Vec::new();
        let mut member_orbit = Vec::with_capacity(members.len());
        for v in members {
            check_len(n, v.as_ref())?;
            let c = group.canonical_form(v.as_ref());
            let next = canonical.len();
            let id = *ids.entry(c.clone()).or_insert_with(|| {
                canonical.push(c);
                next
            });
            member_orbit.push(id);
        }
        let sizes = canonical.iter().map(|c| group.orbit(c).len()).collect();
        Ok(OrbitTable {
            n,
            canonical,
            sizes,
            member_orbit,
        })
    }

    pub fn orbit_count(&self) -> usize {
        self.canonical.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}
