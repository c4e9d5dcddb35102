//! Bott's algorithm on LG(k) = Sp(2(k+1)) / P_{k+1}.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::{from_epsilon, pair_unchecked, to_epsilon, RootSystem, Weight};

/// Cohomology of an irreducible homogeneous bundle.
///
/// By Borel-Weil-Bott the cohomology is either zero in every degree or a
/// single irreducible G-module sitting in exactly one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyResult {
    Singular,
    NonSingular { degree: usize, dominant: Weight, dimension: BigUint },
}

impl CohomologyResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::Singular => None,
            CohomologyResult::NonSingular { degree, .. } => Some(*degree),
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, CohomologyResult::Singular)
    }
}

/// Counts positive roots pairing negatively with an already ρ-shifted
/// weight. Returns `None` when some positive root pairs to zero.
pub fn degree_by_pairing(roots: &RootSystem, shifted: &Weight) -> Result<Option<usize>> {
    roots.check_rank(shifted)?;
    let mut negative = 0;
    for root in roots.positive_roots() {
        let p = pair_unchecked(shifted.coords(), root.coords());
        if p == 0 {
            return Ok(None);
        }
        if p < 0 {
            negative += 1;
        }
    }
    Ok(Some(negative))
}

/// Runs Bott's algorithm on a P-dominant weight λ (the ρ-shift is applied
/// here).
pub fn bott(roots: &RootSystem, weight: &Weight) -> Result<CohomologyResult> {
    roots.check_rank(weight)?;
    if !weight.is_parabolic_dominant() {
        return Err(Error::NotParabolicDominant(weight.coords().to_vec()));
    }
    let shifted = weight + roots.rho();
    let Some(degree) = degree_by_pairing(roots, &shifted)? else {
        return Ok(CohomologyResult::Singular);
    };
    let eps = to_epsilon(&shifted);
    let dominant = &from_epsilon(&eps.dominant_representative()) - roots.rho();
    debug_assert_eq!(eps.reflect_to_dominant().1, degree, "Weyl length disagrees with root count");
    debug_assert!(dominant.is_dominant());
    let dimension = module_dimension(roots, &dominant)?;
    Ok(CohomologyResult::NonSingular { degree, dominant, dimension })
}

/// Weyl dimension formula for the irreducible Sp(2m)-module of highest
/// weight μ: the product over positive roots of `<μ+ρ, α> / <ρ, α>`.
pub fn module_dimension(roots: &RootSystem, mu: &Weight) -> Result<BigUint> {
    roots.check_rank(mu)?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.coords().to_vec()));
    }
    let shifted = mu + roots.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for root in roots.positive_roots() {
        let top = pair_unchecked(shifted.coords(), root.coords());
        let bottom = pair_unchecked(roots.rho().coords(), root.coords());
        num *= top as u64;
        den *= bottom as u64;
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    Ok(num / den)
}
