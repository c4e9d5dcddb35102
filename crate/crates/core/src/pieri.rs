//! Partition combinatorics for the Levi factor SL(m) of the parabolic P_m.
//!
//! Every tensor factor we meet is an exterior power, so products are
//! computed with the vertical-strip Pieri rule instead of general
//! Littlewood-Richardson coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition with trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single column `1^p`.
    pub fn column(p: usize) -> Self {
        Partition(vec![1; p])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to exactly `m` entries.
    pub fn padded(&self, m: usize) -> Result<Vec<u32>> {
        self.check_rows(m)?;
        let mut v = self.0.clone();
        v.resize(m, 0);
        Ok(v)
    }

    pub fn check_rows(&self, m: usize) -> Result<()> {
        if self.rows() > m {
            return Err(Error::TooManyRows { parts: self.0.clone(), rank: m });
        }
        Ok(())
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        Partition((1..=width as u32).map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A direct sum of Schur modules, partition ↦ multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    rank: usize,
    summands: BTreeMap<Partition, u64>,
}

impl Decomposition {
    /// The trivial module, `F^∅` with multiplicity one.
    pub fn trivial(m: usize) -> Self {
        let mut summands = BTreeMap::new();
        summands.insert(Partition::empty(), 1);
        Decomposition { rank: m, summands }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn summands(&self) -> &BTreeMap<Partition, u64> {
        &self.summands
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.summands.get(p).copied().unwrap_or(0)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.summands.contains_key(p)
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.summands.iter().map(|(p, &m)| (p, m))
    }

    /// Total SL(m) dimension, Σ mult · dim F^λ.
    pub fn dimension(&self) -> BigUint {
        self.iter().map(|(p, mult)| sl_dim(p, self.rank).expect("rows checked") * mult).sum()
    }

    /// Tensors every summand with `∧^j F`.
    pub fn tensor_wedge(&self, j: u32) -> Result<Decomposition> {
        check_wedge(j, self.rank)?;
        let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
        for (p, mult) in self.iter() {
            let padded = p.padded(self.rank)?;
            let mut overflow = false;
            for_each_vertical_strip(&padded, j as usize, |lambda| {
                let slot = out.entry(Partition::new(lambda.to_vec()).expect("strip keeps order")).or_insert(0);
                match slot.checked_add(mult) {
                    Some(v) => *slot = v,
                    None => overflow = true,
                }
            });
            if overflow {
                return Err(Error::MultiplicityOverflow);
            }
        }
        Ok(Decomposition { rank: self.rank, summands: out })
    }
}

fn check_wedge(j: u32, m: usize) -> Result<()> {
    if j as usize > m {
        return Err(Error::WedgeOutOfRange { j, rank: m });
    }
    Ok(())
}

/// Calls `f` on every partition obtained from `padded` by adding `j` boxes,
/// no two in the same row. Rows beyond `padded.len()` are never used.
fn for_each_vertical_strip(padded: &[u32], j: usize, mut f: impl FnMut(&[u32])) {
    let mut work = padded.to_vec();
    fn go(work: &mut Vec<u32>, orig: &[u32], row: usize, left: usize, f: &mut dyn FnMut(&[u32])) {
        if left == 0 {
            f(work);
            return;
        }
        let m = orig.len();
        if m - row < left {
            return;
        }
        // A box may go in `row` when the row above is still strictly longer
        // after its own update.
        if row == 0 || work[row - 1] > orig[row] {
            work[row] += 1;
            go(work, orig, row + 1, left - 1, f);
            work[row] -= 1;
        }
        go(work, orig, row + 1, left, f);
    }
    go(&mut work, padded, 0, j, &mut f);
}

/// `F^π ⊗ ∧^j F` for SL(m).
pub fn pieri_wedge(pi: &Partition, j: u32, m: usize) -> Result<Decomposition> {
    check_wedge(j, m)?;
    pi.check_rows(m)?;
    let mut start = BTreeMap::new();
    start.insert(pi.clone(), 1);
    Decomposition { rank: m, summands: start }.tensor_wedge(j)
}

/// `∧^{j_1} F ⊗ ... ⊗ ∧^{j_r} F` by iterated Pieri products.
pub fn decompose_wedges(wedges: &[u32], m: usize) -> Result<Decomposition> {
    for &j in wedges {
        check_wedge(j, m)?;
    }
    wedges.iter().try_fold(Decomposition::trivial(m), |acc, &j| acc.tensor_wedge(j))
}

/// Dimension of the SL(m) Schur module, `Π_{i<j} (π_i - π_j + j - i) / (j - i)`.
pub fn sl_dim(pi: &Partition, m: usize) -> Result<BigUint> {
    let p = pi.padded(m)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= (p[i] - p[j]) as u64 + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    Ok(num / den)
}

/// Removes the full columns of a partition with up to `m` rows, using
/// `F^λ(t) ⊗ ∧^m F ≅ F^λ(t+1)`.
pub fn normalize_columns(pi: &Partition, twist: i64, m: usize) -> Result<(Partition, i64)> {
    let p = pi.padded(m)?;
    let full = p[m - 1];
    let reduced = Partition::new(p.iter().map(|&x| x - full).collect())?;
    Ok((reduced, twist + full as i64))
}

pub fn conjugate(pi: &Partition) -> Partition {
    pi.conjugate()
}

/// Memoised wedge-product decompositions for a fixed rank.
///
/// Keys are sorted multisets of non-zero exterior degrees, so all orderings
/// of the same factors share one entry. A multiset is built from the cached
/// decomposition of its prefix, one Pieri step at a time. Concurrent callers
/// may compute the same entry twice; both results are identical.
#[derive(Debug)]
pub struct DecompositionCache {
    rank: usize,
    entries: DashMap<Vec<u32>, Arc<Decomposition>>,
}

impl DecompositionCache {
    pub fn new(m: usize) -> Self {
        DecompositionCache { rank: m, entries: DashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Canonical cache key: the sorted non-zero degrees.
    pub fn key(wedges: &[u32]) -> Vec<u32> {
        let mut key: Vec<u32> = wedges.iter().copied().filter(|&j| j > 0).collect();
        key.sort_unstable();
        key
    }

    pub fn get(&self, wedges: &[u32]) -> Result<Arc<Decomposition>> {
        for &j in wedges {
            check_wedge(j, self.rank)?;
        }
        self.get_sorted(&Self::key(wedges))
    }

    fn get_sorted(&self, key: &[u32]) -> Result<Arc<Decomposition>> {
        if let Some(hit) = self.entries.get(key) {
            return Ok(Arc::clone(&hit));
        }
        let value = match key.split_last() {
            None => Decomposition::trivial(self.rank),
            Some((&last, prefix)) => self.get_sorted(prefix)?.tensor_wedge(last)?,
        };
        let value = Arc::new(value);
        self.entries.insert(key.to_vec(), Arc::clone(&value));
        Ok(value)
    }
}
