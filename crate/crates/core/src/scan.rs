//! Exhaustive verification of the vanishing conditions
//! `H^i(∧^{j_k}Q* ⊗ ... ⊗ ∧^{j_1}Q*(t)) = 0` over all twists.
//!
//! For each condition tuple the bundle is decomposed with Pieri, and every
//! distinct summand is run through Bott's algorithm across its critical twist
//! window. Outside the window a summand only has cohomology in degree 0 or in
//! the top degree, and neither can equal a condition degree.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bott::{bott, CohomologyResult};
use crate::bundle::{weight_of, window_in};
use crate::error::{Error, Result};
use crate::lie::{lagrangian_dim, RootSystem, Weight};
use crate::pieri::{DecompositionCache, Partition};

pub use crate::bundle::critical_twist_window;

/// Which family of index tuples to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `0 ≤ j_q ≤ n-2k+q` and `Σ j_q ≤ i < Σ j_q + n - 2k`, `i > 0`.
    Sufficient,
    /// `n = 2k+1`, `0 ≤ j_q ≤ q+1` and `i = Σ j_q > 0`.
    Lagrangian,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConditionTuple {
    pub k: usize,
    pub n: usize,
    /// The cohomological degree that must vanish.
    pub i: usize,
    /// `(j_1, ..., j_k)` in slot order.
    pub wedges: Vec<u32>,
}

impl ConditionTuple {
    /// Upper bound for `j_q`; reaching it makes the slot a line-bundle
    /// placeholder.
    pub fn slot_bound(&self, q: usize) -> u32 {
        (self.n + q - 2 * self.k) as u32
    }

    pub fn is_placeholder(&self, q: usize) -> bool {
        self.wedges[q - 1] == self.slot_bound(q)
    }

    pub fn has_placeholder(&self) -> bool {
        (1..=self.k).any(|q| self.is_placeholder(q))
    }

    pub fn degree_sum(&self) -> usize {
        self.wedges.iter().map(|&j| j as usize).sum()
    }

    /// Wedge degrees that enter the tensor product.
    pub fn effective_factors(&self) -> Vec<u32> {
        (1..=self.k).filter(|&q| !self.is_placeholder(q)).map(|q| self.wedges[q - 1]).filter(|&j| j > 0).collect()
    }

    /// The Lagrangian tuple with the given slot-ordered wedges.
    pub fn lagrangian(wedges: Vec<u32>) -> Result<Self> {
        let k = wedges.len();
        if k == 0 {
            return Err(Error::ZeroIndex);
        }
        for (q, &j) in (1..).zip(&wedges) {
            let bound = q as u32 + 1;
            if j > bound {
                return Err(Error::SlotBound { slot: q, j, bound });
            }
        }
        let i = wedges.iter().map(|&j| j as usize).sum();
        Ok(ConditionTuple { k, n: 2 * k + 1, i, wedges })
    }
}

/// A summand and twist with non-zero cohomology in a degree the criterion
/// requires to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tuple: ConditionTuple,
    pub partition: Partition,
    pub multiplicity: u64,
    pub twist: i64,
    pub degree: usize,
    pub dominant: Weight,
    pub dimension: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub tuples_checked: usize,
    pub violations: Vec<Violation>,
}

impl Summary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn enumerate_conditions(mode: Mode, k: usize, n: usize) -> Result<Vec<ConditionTuple>> {
    if k == 0 {
        return Err(Error::ZeroIndex);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension { n });
    }
    if n < 2 * k + 1 {
        return Err(Error::DimensionTooSmall { n, min: 2 * k + 1 });
    }
    if mode == Mode::Lagrangian && n != 2 * k + 1 {
        return Err(Error::NotLagrangian { k, n });
    }
    let bounds: Vec<u32> = (1..=k).map(|q| (n + q - 2 * k) as u32).collect();
    let spread = n - 2 * k;
    let mut out = Vec::new();
    let mut wedges = vec![0u32; k];
    loop {
        let s: usize = wedges.iter().map(|&j| j as usize).sum();
        for i in s.max(1)..s + spread {
            out.push(ConditionTuple { k, n, i, wedges: wedges.clone() });
        }
        // odometer, last slot fastest
        let mut q = k;
        loop {
            if q == 0 {
                return Ok(out);
            }
            q -= 1;
            if wedges[q] < bounds[q] {
                wedges[q] += 1;
                break;
            }
            wedges[q] = 0;
        }
    }
}

#[derive(Debug, Clone)]
struct Hit {
    partition: Partition,
    multiplicity: u64,
    twist: i64,
    result: CohomologyResult,
}

/// Non-singular hits of one decomposition, grouped by degree.
type DegreeIndex = BTreeMap<usize, Vec<Hit>>;

/// Scans condition tuples on a fixed LG(k).
///
/// Holds three value-semantic caches shared by all workers: wedge-product
/// decompositions keyed by sorted factor multisets, per-summand Bott results
/// across the critical window, and per-multiset degree indices. Any entry may
/// be computed more than once under contention; results are identical.
#[derive(Debug)]
pub struct Scanner {
    k: usize,
    roots: RootSystem,
    decompositions: DecompositionCache,
    profiles: DashMap<Partition, Arc<Vec<(i64, CohomologyResult)>>>,
    indices: DashMap<Vec<u32>, Arc<DegreeIndex>>,
}

impl Scanner {
    pub fn new(k: usize) -> Result<Self> {
        let roots = RootSystem::for_lagrangian(k)?;
        Ok(Scanner {
            k,
            decompositions: DecompositionCache::new(roots.rank()),
            roots,
            profiles: DashMap::new(),
            indices: DashMap::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// Non-singular Bott results of `F^π(t)` for every `t` in the critical
    /// window, in increasing `t`.
    pub fn profile(&self, pi: &Partition) -> Result<Arc<Vec<(i64, CohomologyResult)>>> {
        if let Some(hit) = self.profiles.get(pi) {
            return Ok(Arc::clone(&hit));
        }
        let m = self.roots.rank();
        let mut out = Vec::new();
        for t in window_in(&self.roots, pi)? {
            let result = bott(&self.roots, &weight_of(pi, t, m)?)?;
            if !result.is_singular() {
                out.push((t, result));
            }
        }
        let out = Arc::new(out);
        self.profiles.insert(pi.clone(), Arc::clone(&out));
        Ok(out)
    }

    fn index(&self, factors: &[u32]) -> Result<Arc<DegreeIndex>> {
        let key = DecompositionCache::key(factors);
        if let Some(hit) = self.indices.get(&key) {
            return Ok(Arc::clone(&hit));
        }
        let decomposition = self.decompositions.get(&key)?;
        let mut index = DegreeIndex::new();
        for (pi, multiplicity) in decomposition.iter() {
            for (t, result) in self.profile(pi)?.iter() {
                let degree = result.degree().expect("profiles hold non-singular results");
                index.entry(degree).or_default().push(Hit {
                    partition: pi.clone(),
                    multiplicity,
                    twist: *t,
                    result: result.clone(),
                });
            }
        }
        let index = Arc::new(index);
        self.indices.insert(key, Arc::clone(&index));
        Ok(index)
    }

    /// All violations of one tuple, ordered by partition then twist.
    pub fn scan_tuple(&self, tuple: &ConditionTuple) -> Result<Vec<Violation>> {
        if tuple.k != self.k {
            return Err(Error::LengthMismatch { expected: self.k, found: tuple.k });
        }
        if tuple.n != 2 * tuple.k + 1 {
            return Err(Error::NotLagrangian { k: tuple.k, n: tuple.n });
        }
        let index = self.index(&tuple.effective_factors())?;
        let Some(hits) = index.get(&tuple.i) else {
            return Ok(Vec::new());
        };
        Ok(hits
            .iter()
            .map(|h| {
                let CohomologyResult::NonSingular { degree, dominant, dimension } = &h.result else {
                    unreachable!("singular results are never indexed")
                };
                Violation {
                    tuple: tuple.clone(),
                    partition: h.partition.clone(),
                    multiplicity: h.multiplicity,
                    twist: h.twist,
                    degree: *degree,
                    dominant: dominant.clone(),
                    dimension: dimension.clone(),
                }
            })
            .collect())
    }

    /// Scans the given tuples on `jobs` worker threads. The result does not
    /// depend on `jobs`.
    pub fn verify(&self, tuples: &[ConditionTuple], jobs: usize) -> Result<Summary> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        let per_tuple: Vec<Vec<Violation>> =
            pool.install(|| tuples.par_iter().map(|t| self.scan_tuple(t)).collect::<Result<_>>())?;
        Ok(Summary { tuples_checked: tuples.len(), violations: per_tuple.into_iter().flatten().collect() })
    }
}

pub fn scan_tuple(tuple: &ConditionTuple) -> Result<Vec<Violation>> {
    Scanner::new(tuple.k)?.scan_tuple(tuple)
}

/// Checks every tuple of `mode` on LG(k).
pub fn verify_criterion(mode: Mode, k: usize, jobs: usize) -> Result<Summary> {
    let tuples = enumerate_conditions(mode, k, 2 * k + 1)?;
    Scanner::new(k)?.verify(&tuples, jobs)
}

/// The twist range used by the original hand-written scripts, which add
/// `-t` to the last coordinate for `t = -2, ..., 3(k+1)`. In the convention
/// of [`weight_of`] this is `-3(k+1) ..= 2`.
pub fn script_twists(k: usize) -> RangeInclusive<i64> {
    -3 * (k as i64 + 1)..=2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFailure {
    /// The chain member LG(i).
    pub i: usize,
    /// The exterior power `∧^j Q*`.
    pub j: usize,
    pub twist: i64,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSummary {
    pub checks: usize,
    pub failures: Vec<ChainFailure>,
}

impl ChainSummary {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `1 ≤ i ≤ k`, `1 ≤ j ≤ i+1` and twist `t` in the critical window
/// of `1^j` on LG(i), checks that `∧^jQ*(t)` has no cohomology in degrees
/// `1 ..= min(2i+2, dim LG(i))`.
pub fn verify_chain_criterion(k: usize) -> Result<ChainSummary> {
    if k == 0 {
        return Err(Error::ZeroIndex);
    }
    let mut checks = 0;
    let mut failures = Vec::new();
    for i in 1..=k {
        let roots = RootSystem::for_lagrangian(i)?;
        let forbidden = 1..=(2 * i + 2).min(lagrangian_dim(i));
        for j in 1..=i + 1 {
            let pi = Partition::column(j);
            for t in window_in(&roots, &pi)? {
                checks += 1;
                let result = bott(&roots, &weight_of(&pi, t, roots.rank())?)?;
                if let Some(d) = result.degree().filter(|d| forbidden.contains(d)) {
                    failures.push(ChainFailure { i, j, twist: t, degree: d });
                }
            }
        }
    }
    Ok(ChainSummary { checks, failures })
}
