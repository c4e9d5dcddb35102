//! Bundles `∧^{j_k}Q* ⊗ ... ⊗ ∧^{j_1}Q*(t)` on LG(k) and their cohomology.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;

use crate::bott::{bott, CohomologyResult};
use crate::error::{Error, Result};
use crate::lie::{lagrangian_dim, RootSystem, Weight};
use crate::pieri::{decompose_wedges, Decomposition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    Fixed(i64),
    /// Every integer twist.
    All,
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Fixed(t) => write!(f, "{t}"),
            Twist::All => write!(f, "all"),
        }
    }
}

/// `∧^{j_k}Q* ⊗ ... ⊗ ∧^{j_1}Q*(t)` on LG(k), with `0 ≤ j_q ≤ q+1`.
///
/// A factor with `j_q = q+1` is a placeholder for a line bundle: it adds
/// nothing to the tensor product but still counts towards `Σ j_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleExpression {
    k: usize,
    wedges: Vec<u32>,
    twist: Twist,
}

impl BundleExpression {
    /// Builds an expression from wedge degrees in slot order `(j_1, ..., j_k)`.
    pub fn new(k: usize, wedges: Vec<u32>, twist: Twist) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroIndex);
        }
        if wedges.len() != k {
            return Err(Error::FactorCount { expected: k, found: wedges.len() });
        }
        for (q, &j) in (1..).zip(&wedges) {
            let bound = q as u32 + 1;
            if j > bound {
                return Err(Error::SlotBound { slot: q, j, bound });
            }
        }
        Ok(BundleExpression { k, wedges, twist })
    }

    /// Builds an expression from an unordered list of factors by assigning
    /// them to slots in increasing order. If the sorted assignment violates a
    /// slot bound, no assignment satisfies the bounds.
    pub fn from_factors(k: usize, factors: &[u32], twist: Twist) -> Result<Self> {
        let mut sorted = factors.to_vec();
        sorted.sort_unstable();
        Self::new(k, sorted, twist)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.k + 1
    }

    pub fn wedges(&self) -> &[u32] {
        &self.wedges
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn with_twist(&self, twist: Twist) -> Self {
        BundleExpression { twist, ..self.clone() }
    }

    pub fn is_placeholder(&self, slot: usize) -> bool {
        self.wedges[slot - 1] as usize == slot + 1
    }

    /// Wedge degrees that contribute an actual tensor factor.
    pub fn effective_factors(&self) -> Vec<u32> {
        self.wedges.iter().enumerate().filter(|&(i, &j)| j > 0 && j as usize != i + 2).map(|(_, &j)| j).collect()
    }

    /// `Σ j_q`, placeholders included.
    pub fn degree_sum(&self) -> usize {
        self.wedges.iter().map(|&j| j as usize).sum()
    }

    pub fn decomposition(&self) -> Result<Decomposition> {
        decompose_wedges(&self.effective_factors(), self.rank())
    }
}

impl fmt::Display for BundleExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.wedges.iter().rev().map(|j| format!("w{j}")).collect();
        write!(f, "{}({}) @ LG({})", factors.join("*"), self.twist, self.k)
    }
}

/// Highest weight of `F^π(t)`: `(π_1-π_2, ..., π_{m-1}-π_m, π_m + t)`.
pub fn weight_of(pi: &Partition, twist: i64, m: usize) -> Result<Weight> {
    let p = pi.padded(m)?;
    let mut coords: Vec<i64> = p.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect();
    coords.push(p[m - 1] as i64 + twist);
    Ok(Weight::new(coords))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandRecord {
    pub partition: Partition,
    pub multiplicity: u64,
    pub twist: i64,
    pub result: CohomologyResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub k: usize,
    pub twist: i64,
    pub summands: Vec<SummandRecord>,
    /// degree ↦ Σ multiplicity · dimension
    pub aggregate: BTreeMap<usize, BigUint>,
}

impl CohomologyReport {
    pub fn is_zero(&self) -> bool {
        self.aggregate.is_empty()
    }
}

/// Cohomology of a bundle at a concrete twist, summand by summand.
pub fn bundle_cohomology(expr: &BundleExpression) -> Result<CohomologyReport> {
    let Twist::Fixed(t) = expr.twist else {
        return Err(Error::SymbolicTwist);
    };
    let roots = RootSystem::for_lagrangian(expr.k)?;
    let decomposition = expr.decomposition()?;
    cohomology_of_decomposition(&roots, expr.k, &decomposition, t)
}

pub(crate) fn cohomology_of_decomposition(
    roots: &RootSystem,
    k: usize,
    decomposition: &Decomposition,
    t: i64,
) -> Result<CohomologyReport> {
    let m = roots.rank();
    let mut summands = Vec::with_capacity(decomposition.len());
    let mut aggregate: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (pi, mult) in decomposition.iter() {
        let result = bott(roots, &weight_of(pi, t, m)?)?;
        if let CohomologyResult::NonSingular { degree, dimension, .. } = &result {
            *aggregate.entry(*degree).or_default() += dimension * mult;
        }
        summands.push(SummandRecord { partition: pi.clone(), multiplicity: mult, twist: t, result });
    }
    Ok(CohomologyReport { k, twist: t, summands, aggregate })
}

/// Twists at which a summand `F^π` on LG(k) can have cohomology in a degree
/// strictly between 0 and `dim LG(k)`.
///
/// Every positive root containing α_m pairs with `weight_of(π, t) + ρ` as
/// `2t + c` for a constant `c`; all other positive roots pair positively.
/// Above the window all pairings are positive (degree 0), below it every
/// α_m-root pairs negatively (top degree).
pub fn critical_twist_window(pi: &Partition, k: usize) -> Result<RangeInclusive<i64>> {
    let roots = RootSystem::for_lagrangian(k)?;
    window_in(&roots, pi)
}

pub(crate) fn window_in(roots: &RootSystem, pi: &Partition) -> Result<RangeInclusive<i64>> {
    let base = &weight_of(pi, 0, roots.rank())? + roots.rho();
    let (mut lo_c, mut hi_c) = (i64::MAX, i64::MIN);
    for root in roots.parabolic_roots() {
        let c = crate::lie::pair_unchecked(base.coords(), root.coords());
        lo_c = lo_c.min(c);
        hi_c = hi_c.max(c);
    }
    // some pairing ≤ 0  ⇔  t ≤ ⌊-c_min / 2⌋
    // some pairing ≥ 0  ⇔  t ≥ ⌈-c_max / 2⌉
    let t_hi = (-lo_c).div_euclid(2);
    let t_lo = -hi_c.div_euclid(2);
    Ok(t_lo..=t_hi)
}

/// Cohomology at every twist where any summand can have intermediate
/// cohomology. Twists outside the returned range only contribute in degree 0
/// (above) or `dim LG(k)` (below).
pub fn twist_scan(expr: &BundleExpression) -> Result<Vec<CohomologyReport>> {
    let roots = RootSystem::for_lagrangian(expr.k)?;
    let decomposition = expr.decomposition()?;
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (pi, _) in decomposition.iter() {
        let w = window_in(&roots, pi)?;
        lo = lo.min(*w.start());
        hi = hi.max(*w.end());
    }
    (lo..=hi).map(|t| cohomology_of_decomposition(&roots, expr.k, &decomposition, t)).collect()
}

/// Top degree `dim LG(k)`.
pub fn top_degree(k: usize) -> usize {
    lagrangian_dim(k)
}

/// Parses `w6*w5*w4*w3*w3*w2*w1(-9) @ LG(7)`.
///
/// Grammar (whitespace is ignored):
///
/// ```text
/// EXPR   := FACTOR ("*" FACTOR)* "(" INT ")" "@" "LG(" INT ")"
/// FACTOR := "w" INT
/// ```
///
/// Factors are assigned to slots in increasing order.
pub fn parse_bundle_expression(text: &str) -> Result<BundleExpression> {
    let mut p = Parser::new(text);
    let mut factors = vec![p.factor()?];
    while p.eat('*') {
        factors.push(p.factor()?);
    }
    p.expect('(')?;
    let twist = p.int()?;
    p.expect(')')?;
    p.expect('@')?;
    p.keyword("LG")?;
    p.expect('(')?;
    let k_pos = p.pos();
    let k = p.int()?;
    p.expect(')')?;
    p.end()?;
    if k < 1 {
        return Err(Error::Parse { pos: k_pos, msg: "LG index must be at least 1".into() });
    }
    let factors = factors
        .into_iter()
        .map(|(pos, j)| u32::try_from(j).map_err(|_| Error::Parse { pos, msg: format!("invalid wedge degree {j}") }))
        .collect::<Result<Vec<u32>>>()?;
    BundleExpression::from_factors(k as usize, &factors, Twist::Fixed(twist))
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, idx: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map(|&(i, _)| i + 1).unwrap_or(self.src.len() + 1)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        for c in kw.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos();
        let mut s = String::new();
        if self.eat('-') {
            s.push('-');
        } else {
            self.eat('+');
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.idx += 1;
        }
        s.parse().map_err(|_| Error::Parse { pos: start, msg: "expected an integer".into() })
    }

    fn factor(&mut self) -> Result<(usize, i64)> {
        self.expect('w')?;
        let pos = self.pos();
        Ok((pos, self.int()?))
    }

    fn end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing '{c}'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weight_of_examples() {
        assert_eq!(weight_of(&Partition::empty(), 0, 4).unwrap(), Weight::zero(4));
        for m in 2..=6 {
            for i in 1..m {
                for t in -5..=5 {
                    let expected = &Weight::fundamental(i, m) + &Weight::fundamental(m, m).scale(t);
                    assert_eq!(weight_of(&Partition::column(i), t, m).unwrap(), expected);
                }
            }
        }
        assert_eq!(weight_of(&p(&[7, 6, 5, 3, 2, 1]), -9, 8).unwrap(), Weight::new(vec![1, 1, 2, 1, 1, 1, 0, -9]));
        assert!(weight_of(&p(&[1, 1, 1, 1]), 0, 3).is_err());
    }

    #[test]
    fn counterexample_bundle() {
        let expr = BundleExpression::new(7, vec![1, 2, 3, 3, 4, 5, 6], Twist::Fixed(-9)).unwrap();
        let report = bundle_cohomology(&expr).unwrap();
        assert!(report.aggregate.get(&24).is_some_and(|d| *d >= BigUint::from(1u32)));
        let rec = report.summands.iter().find(|s| s.partition == p(&[7, 6, 5, 3, 2, 1])).unwrap();
        assert_eq!(rec.result.degree(), Some(24));
    }

    #[test]
    fn canonical_bundle_lg2() {
        let expr = BundleExpression::new(2, vec![0, 0], Twist::Fixed(-4)).unwrap();
        let report = bundle_cohomology(&expr).unwrap();
        let expected: BTreeMap<usize, BigUint> = [(6, BigUint::from(1u32))].into_iter().collect();
        assert_eq!(report.aggregate, expected);
    }

    #[test]
    fn lg2_square_of_dual_quotient() {
        // (2) at t = -4 has ε(λ+ρ) = (1,-2,-3): five negative roots, dominant 0.
        let expr = BundleExpression::new(2, vec![1, 1], Twist::Fixed(-4)).unwrap();
        let report = bundle_cohomology(&expr).unwrap();
        let rec = report.summands.iter().find(|s| s.partition == p(&[2])).unwrap();
        assert_eq!(
            rec.result,
            CohomologyResult::NonSingular { degree: 5, dominant: Weight::zero(3), dimension: BigUint::from(1u32) }
        );
        // at t = -5 the same summand has ε(λ+ρ) = (0,-3,-4), which is singular
        let report = bundle_cohomology(&expr.with_twist(Twist::Fixed(-5))).unwrap();
        let rec = report.summands.iter().find(|s| s.partition == p(&[2])).unwrap();
        assert!(rec.result.is_singular());
    }

    #[test]
    fn placeholders_are_dropped_but_counted() {
        let expr = BundleExpression::new(3, vec![2, 1, 4], Twist::Fixed(0)).unwrap();
        assert!(expr.is_placeholder(1));
        assert!(!expr.is_placeholder(2));
        assert!(expr.is_placeholder(3));
        assert_eq!(expr.effective_factors(), vec![1]);
        assert_eq!(expr.degree_sum(), 7);
    }

    #[test]
    fn symbolic_twist_is_rejected() {
        let expr = BundleExpression::new(1, vec![1], Twist::All).unwrap();
        assert_eq!(bundle_cohomology(&expr), Err(Error::SymbolicTwist));
    }

    #[test]
    fn windows() {
        assert_eq!(critical_twist_window(&Partition::empty(), 2).unwrap(), -3..=-1);
        assert_eq!(critical_twist_window(&Partition::empty(), 1).unwrap(), -2..=-1);
    }

    #[test]
    fn parse_examples() {
        let e = parse_bundle_expression("w6*w5*w4*w3*w3*w2*w1(-9) @ LG(7)").unwrap();
        assert_eq!(e.k(), 7);
        assert_eq!(e.wedges(), &[1, 2, 3, 3, 4, 5, 6]);
        assert_eq!(e.twist(), Twist::Fixed(-9));

        let e = parse_bundle_expression("w0(0) @ LG(1)").unwrap();
        assert_eq!(e.wedges(), &[0]);
        assert_eq!(e.twist(), Twist::Fixed(0));

        assert!(matches!(
            parse_bundle_expression("w9*w1(0) @ LG(2)"),
            Err(Error::SlotBound { slot: 2, j: 9, bound: 3 })
        ));
        assert!(matches!(
            parse_bundle_expression("w1*w1(0) @ LG(3)"),
            Err(Error::FactorCount { expected: 3, found: 2 })
        ));
        assert!(matches!(parse_bundle_expression("w1(0) LG(1)"), Err(Error::Parse { pos: 7, .. })));
        assert!(matches!(parse_bundle_expression("w1(x) @ LG(1)"), Err(Error::Parse { pos: 4, .. })));
        let spaced = parse_bundle_expression(" w2 * w1 ( 3 ) @ LG ( 2 ) ").unwrap();
        assert_eq!(spaced.wedges(), &[1, 2]);
    }

    #[test]
    fn display_round_trips() {
        let e = parse_bundle_expression("w6*w5*w4*w3*w3*w2*w1(-9) @ LG(7)").unwrap();
        assert_eq!(e.to_string(), "w6*w5*w4*w3*w3*w2*w1(-9) @ LG(7)");
        assert_eq!(parse_bundle_expression(&e.to_string()).unwrap(), e);
    }
}
