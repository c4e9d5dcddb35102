//! Independent reference implementations used by the integration tests.
//!
//! The oracles in this file work in ε-coordinates with the standard inner
//! product and never call into the library's root, Bott or Pieri code.

#![allow(dead_code)]

pub mod suites;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Positive roots of C_m as ε-vectors: e_i ± e_j (i < j) and 2e_i.
pub fn eps_positive_roots(m: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut minus = vec![0; m];
            minus[i] = 1;
            minus[j] = -1;
            out.push(minus);
            let mut plus = vec![0; m];
            plus[i] = 1;
            plus[j] = 1;
            out.push(plus);
        }
        let mut long = vec![0; m];
        long[i] = 2;
        out.push(long);
    }
    out
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// ε-coordinates of a weight given in fundamental-weight coordinates.
pub fn eps_of(lambda: &[i64]) -> Vec<i64> {
    let m = lambda.len();
    (0..m).map(|j| lambda[j..].iter().sum()).collect()
}

pub fn fund_of(eps: &[i64]) -> Vec<i64> {
    let m = eps.len();
    (0..m).map(|i| if i + 1 < m { eps[i] - eps[i + 1] } else { eps[i] }).collect()
}

/// ε-vector of a root written in simple-root coordinates.
pub fn eps_of_root(a: &[i64]) -> Vec<i64> {
    let m = a.len();
    let mut e = vec![0; m];
    for i in 0..m {
        if i + 1 < m {
            e[i] += a[i];
            e[i + 1] -= a[i];
        } else {
            e[i] += 2 * a[i];
        }
    }
    e
}

/// All signed permutations of m letters, as (permutation, signs).
pub fn signed_permutations(m: usize) -> Vec<(Vec<usize>, Vec<i64>)> {
    let mut perms = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for p in &perms {
            for x in 0..m {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        for mask in 0..(1u32 << m) {
            let signs = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push((p.clone(), signs));
        }
    }
    out
}

/// `w(v)` where `w = (p, s)` sends e_i to s_i e_{p_i}.
pub fn act(w: &(Vec<usize>, Vec<i64>), v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for i in 0..v.len() {
        out[w.0[i]] = w.1[i] * v[i];
    }
    out
}

/// Length of `w`: the number of positive roots it sends to negative roots.
pub fn length(w: &(Vec<usize>, Vec<i64>), roots: &[Vec<i64>]) -> usize {
    roots
        .iter()
        .filter(|b| {
            let image = act(w, b);
            let first = image.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            first < 0
        })
        .count()
}

fn strictly_dominant(v: &[i64]) -> bool {
    v.windows(2).all(|p| p[0] > p[1]) && v.last().is_none_or(|&x| x > 0)
}

/// Bott by brute force over the Weyl group: find the unique `w` making λ+ρ
/// strictly dominant, if any. Returns (degree, dominant weight in
/// fundamental coordinates, dimension).
pub fn brute_bott(lambda: &[i64]) -> Option<(usize, Vec<i64>, BigInt)> {
    let m = lambda.len();
    let rho: Vec<i64> = (1..=m as i64).rev().collect();
    let v: Vec<i64> = eps_of(lambda).iter().zip(&rho).map(|(a, b)| a + b).collect();
    let roots = eps_positive_roots(m);
    let hits: Vec<_> = signed_permutations(m).into_iter().filter(|w| strictly_dominant(&act(w, &v))).collect();
    assert!(hits.len() <= 1);
    let w = hits.into_iter().next()?;
    let image = act(&w, &v);
    let mu: Vec<i64> = image.iter().zip(&rho).map(|(a, b)| a - b).collect();
    Some((length(&w, &roots), fund_of(&mu), weyl_dim_eps(&mu)))
}

/// Number of positive roots pairing negatively with λ+ρ under the standard
/// form, or `None` if one pairs to zero.
pub fn negative_count(lambda: &[i64]) -> Option<usize> {
    let m = lambda.len();
    let v: Vec<i64> = eps_of(lambda).iter().zip((1..=m as i64).rev()).map(|(a, b)| a + b).collect();
    let mut n = 0;
    for b in eps_positive_roots(m) {
        match dot(&v, &b) {
            0 => return None,
            x if x < 0 => n += 1,
            _ => {}
        }
    }
    Some(n)
}

/// Weyl dimension formula with ε-coordinates and rational arithmetic.
pub fn weyl_dim_eps(mu: &[i64]) -> BigInt {
    let m = mu.len();
    let rho: Vec<i64> = (1..=m as i64).rev().collect();
    let shifted: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for b in eps_positive_roots(m) {
        num *= BigInt::from(dot(&shifted, &b));
        den *= BigInt::from(dot(&rho, &b));
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// Sparse polynomial in m variables.
pub type Poly = HashMap<Vec<u32>, BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Elementary symmetric polynomial e_j in m variables.
pub fn elementary(j: usize, m: usize) -> Poly {
    let mut out = Poly::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize == j {
            let e = (0..m).map(|i| mask >> i & 1).collect();
            out.insert(e, BigInt::one());
        }
    }
    out
}

/// The Vandermonde alternant a_δ = det(x_i^{m-j}).
fn alternant(m: usize) -> Poly {
    let mut out = Poly::new();
    for (perm, _) in signed_permutations(m).into_iter().filter(|w| w.1.iter().all(|&s| s == 1)) {
        let mut e = vec![0u32; m];
        for (row, &col) in perm.iter().enumerate() {
            e[row] = (m - 1 - col) as u32;
        }
        let inversions =
            (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        *out.entry(e).or_insert_with(BigInt::zero) += sign;
    }
    out
}

/// Expands Π e_{j_q} in Schur functions via the bialternant formula: the
/// coefficient of s_λ is the coefficient of x^{λ+δ} in a_δ · Π e_{j_q}.
pub fn schur_expansion(wedges: &[u32], m: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let mut f = alternant(m);
    for &j in wedges {
        f = poly_mul(&f, &elementary(j as usize, m));
    }
    let mut out = BTreeMap::new();
    for (e, c) in f {
        if e.windows(2).all(|p| p[0] > p[1]) {
            let lambda: Vec<u32> = e.iter().enumerate().map(|(i, &x)| x - (m - 1 - i) as u32).collect();
            let trimmed: Vec<u32> = lambda.into_iter().filter(|&x| x > 0).collect();
            assert!(c.is_positive());
            out.insert(trimmed, c);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
