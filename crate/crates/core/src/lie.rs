//! Root system of type C_m (the group Sp(2m)).
//!
//! Weights are stored in fundamental-weight coordinates and roots in
//! simple-root coordinates. The pairing is
//!
//! ```text
//! <λ, a> = λ_1 a_1 + ... + λ_{m-1} a_{m-1} + 2 λ_m a_m
//! ```
//!
//! which is the standard inner product in orthogonal (ε) coordinates. It is
//! twice the coroot pairing on long roots and equal to it on short roots, so
//! signs and zeros agree with the coroot pairing everywhere.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};

/// Integer weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(m: usize) -> Self {
        Weight(vec![0; m])
    }

    /// The fundamental weight ω_i (1-based).
    pub fn fundamental(i: usize, m: usize) -> Self {
        assert!(i >= 1 && i <= m, "fundamental weight index {i} out of range 1..={m}");
        let mut coords = vec![0; m];
        coords[i - 1] = 1;
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// All coordinates but the last are non-negative.
    pub fn is_parabolic_dominant(&self) -> bool {
        match self.0.split_last() {
            Some((_, rest)) => rest.iter().all(|&c| c >= 0),
            None => true,
        }
    }

    /// All coordinates are non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, s: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * s).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    /// The simple root α_i (1-based).
    pub fn simple(i: usize, m: usize) -> Self {
        assert!(i >= 1 && i <= m, "simple root index {i} out of range 1..={m}");
        let mut coords = vec![0; m];
        coords[i - 1] = 1;
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coefficient of the last simple root α_m.
    pub fn last(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Renders the root as a sum of simple roots, e.g. `a2+2a3+a4`.
    pub fn label(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{c}a{}", i + 1) })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Coordinates in the orthogonal basis e_1, ..., e_m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EpsilonVector(Vec<i64>);

impl EpsilonVector {
    pub fn new(entries: Vec<i64>) -> Self {
        EpsilonVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// A vector is regular when no positive root is orthogonal to it:
    /// every entry is non-zero and the absolute values are distinct.
    pub fn is_regular(&self) -> bool {
        if self.0.contains(&0) {
            return false;
        }
        let mut abs: Vec<i64> = self.0.iter().map(|e| e.abs()).collect();
        abs.sort_unstable();
        abs.windows(2).all(|w| w[0] != w[1])
    }

    /// The dominant representative of the Weyl orbit: absolute values sorted
    /// in decreasing order.
    pub fn dominant_representative(&self) -> EpsilonVector {
        let mut abs: Vec<i64> = self.0.iter().map(|e| e.abs()).collect();
        abs.sort_unstable_by(|a, b| b.cmp(a));
        EpsilonVector(abs)
    }

    /// Moves the vector into the closed dominant chamber with simple
    /// reflections, returning the result and the number of reflections used.
    ///
    /// `s_i` (i < m) swaps entries i and i+1 and is applied while
    /// `e_i < e_{i+1}`; `s_m` negates the last entry and is applied while it is
    /// negative. Each step removes exactly one positive root from the set of
    /// roots pairing negatively, so on a regular vector the count is the
    /// length of the minimal Weyl group element reaching the chamber.
    pub fn reflect_to_dominant(&self) -> (EpsilonVector, usize) {
        let mut v = self.0.clone();
        let m = v.len();
        let mut steps = 0;
        loop {
            let mut moved = false;
            for i in 0..m {
                if i + 1 < m {
                    if v[i] < v[i + 1] {
                        v.swap(i, i + 1);
                        steps += 1;
                        moved = true;
                    }
                } else if v[i] < 0 {
                    v[i] = -v[i];
                    steps += 1;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        (EpsilonVector(v), steps)
    }
}

impl fmt::Display for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// `e_j = λ_j + ... + λ_m`.
pub fn to_epsilon(weight: &Weight) -> EpsilonVector {
    let mut acc = 0;
    let mut out = vec![0; weight.rank()];
    for (slot, &c) in out.iter_mut().zip(weight.coords()).rev() {
        acc += c;
        *slot = acc;
    }
    EpsilonVector(out)
}

/// `λ_i = e_i - e_{i+1}` with `e_{m+1} = 0`.
pub fn from_epsilon(e: &EpsilonVector) -> Weight {
    let v = e.entries();
    Weight((0..v.len()).map(|i| v[i] - v.get(i + 1).copied().unwrap_or(0)).collect())
}

/// The positive roots of C_m, in the two families of the classical table:
/// strings `α_i + ... + α_j` (1 ≤ i ≤ j ≤ m), then the roots
/// `α_i + ... + α_{j-1} + 2α_j + ... + 2α_{m-1} + α_m` (1 ≤ i ≤ j < m).
pub fn positive_roots(m: usize) -> Result<Vec<Root>> {
    if m == 0 {
        return Err(Error::EmptyRank);
    }
    let mut roots = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in i..m {
            let mut a = vec![0; m];
            a[i..=j].iter_mut().for_each(|c| *c = 1);
            roots.push(Root(a));
        }
    }
    for j in (0..m - 1).rev() {
        for i in (0..=j).rev() {
            let mut a = vec![0; m];
            a[i..j].iter_mut().for_each(|c| *c = 1);
            a[j..m - 1].iter_mut().for_each(|c| *c = 2);
            a[m - 1] = 1;
            roots.push(Root(a));
        }
    }
    Ok(roots)
}

/// ρ, the all-ones weight.
pub fn rho(m: usize) -> Weight {
    Weight(vec![1; m])
}

pub fn pair(weight: &Weight, root: &Root) -> Result<i64> {
    if weight.rank() != root.0.len() {
        return Err(Error::LengthMismatch { expected: weight.rank(), found: root.0.len() });
    }
    Ok(pair_unchecked(weight.coords(), root.coords()))
}

#[inline]
pub(crate) fn pair_unchecked(weight: &[i64], root: &[i64]) -> i64 {
    let m = weight.len();
    let head: i64 = weight[..m - 1].iter().zip(&root[..m - 1]).map(|(l, a)| l * a).sum();
    head + 2 * weight[m - 1] * root[m - 1]
}

/// Dimension of LG(m-1), which is also the number of positive roots of C_m
/// involving α_m.
pub fn lagrangian_dim(k: usize) -> usize {
    (k + 1) * (k + 2) / 2
}

/// A rank together with its positive roots, built once and shared.
#[derive(Debug, Clone)]
pub struct RootSystem {
    rank: usize,
    positive: Vec<Root>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(m: usize) -> Result<Self> {
        Ok(RootSystem { rank: m, positive: positive_roots(m)?, rho: rho(m) })
    }

    /// The root system of Sp(2(k+1)), whose flag variety quotient is LG(k).
    pub fn for_lagrangian(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroIndex);
        }
        Self::new(k + 1)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Positive roots with α_m coefficient 1.
    pub fn parabolic_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive.iter().filter(|r| r.last() == 1)
    }

    pub fn check_rank(&self, weight: &Weight) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::LengthMismatch { expected: self.rank, found: weight.rank() });
        }
        Ok(())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}
