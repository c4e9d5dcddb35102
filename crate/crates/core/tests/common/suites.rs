//! The property suites that also run inside the acceptance target.

use lgbott::bundle::top_degree;
use lgbott::{
    bott, critical_twist_window, decompose_wedges, degree_by_pairing, enumerate_conditions, sl_dim, to_epsilon,
    verify_criterion, weight_of, CohomologyResult, Mode, Partition, RootSystem, Weight,
};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{binomial, negative_count};

fn random_parabolic_dominant(rng: &mut StdRng, m: usize) -> Weight {
    let mut c: Vec<i64> = (0..m - 1).map(|_| rng.gen_range(0..=6)).collect();
    c.push(rng.gen_range(-40..=6));
    Weight::new(c)
}

pub fn degree_equals_weyl_length() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for m in 2..=8 {
        let roots = RootSystem::new(m).unwrap();
        let mut nonsingular = 0;
        for _ in 0..10_000 {
            let lambda = random_parabolic_dominant(&mut rng, m);
            let shifted = &lambda + roots.rho();
            let by_pairing = degree_by_pairing(&roots, &shifted).unwrap();
            let eps = to_epsilon(&shifted);
            assert_eq!(by_pairing.is_some(), eps.is_regular(), "{lambda}");
            assert_eq!(by_pairing, negative_count(lambda.coords()), "{lambda}");
            if let Some(d) = by_pairing {
                nonsingular += 1;
                assert_eq!(eps.reflect_to_dominant().1, d, "{lambda}");
                assert!(d <= m * (m + 1) / 2);
                match bott(&roots, &lambda).unwrap() {
                    CohomologyResult::NonSingular { degree, dominant, .. } => {
                        assert_eq!(degree, d);
                        assert!(dominant.is_dominant());
                    }
                    CohomologyResult::Singular => panic!("{lambda}"),
                }
            }
        }
        assert!(nonsingular > 100, "m={m}: only {nonsingular} non-singular samples");
    }
}

pub fn pieri_dimension_bookkeeping() {
    for k in 1..=5usize {
        let m = k + 1;
        for t in enumerate_conditions(Mode::Lagrangian, k, 2 * k + 1).unwrap() {
            let factors = t.effective_factors();
            let d = decompose_wedges(&factors, m).unwrap();
            let mut total = BigUint::from(0u32);
            for (pi, mult) in d.iter() {
                total += sl_dim(pi, m).unwrap() * mult;
            }
            let expected: BigUint = factors.iter().map(|&j| BigUint::from(binomial(m as u64, j as u64))).product();
            assert_eq!(total, expected, "k={k} {:?}", t.wedges);
        }
    }
}

pub fn canonical_bundle() {
    for k in 1..=6usize {
        let m = k + 1;
        let roots = RootSystem::for_lagrangian(k).unwrap();
        let line = |t: i64| {
            let mut c = vec![0; m];
            c[m - 1] = t;
            bott(&roots, &Weight::new(c)).unwrap()
        };
        match line(-(k as i64 + 2)) {
            CohomologyResult::NonSingular { degree, dominant, dimension } => {
                assert_eq!(degree, (k + 1) * (k + 2) / 2);
                assert!(dominant.is_zero());
                assert_eq!(dimension, 1u32.into());
            }
            r => panic!("k={k}: {r:?}"),
        }
        for t in -(k as i64 + 1)..0 {
            assert!(line(t).is_singular(), "k={k} t={t}");
        }
        for t in 0..5 {
            assert_eq!(line(t).degree(), Some(0));
        }
    }
}

pub fn window_soundness() {
    let mut rng = StdRng::seed_from_u64(200);
    for _ in 0..200 {
        let k = rng.gen_range(1..=6usize);
        let m = k + 1;
        let rows = rng.gen_range(0..=m);
        let mut parts: Vec<u32> = (0..rows).map(|_| rng.gen_range(1..=8)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let pi = Partition::new(parts).unwrap();
        let roots = RootSystem::for_lagrangian(k).unwrap();
        let window = critical_twist_window(&pi, k).unwrap();
        let top = top_degree(k);
        for t in window.start() - 10..=window.end() + 10 {
            let r = bott(&roots, &weight_of(&pi, t, m).unwrap()).unwrap();
            if t > *window.end() {
                assert_eq!(r.degree(), Some(0), "{pi} k={k} t={t}");
            } else if t < *window.start() {
                assert_eq!(r.degree(), Some(top), "{pi} k={k} t={t}");
            }
        }
    }
}

pub fn scan_is_deterministic_across_jobs() {
    for k in [3usize, 5, 7] {
        let reference = format!("{:?}", verify_criterion(Mode::Lagrangian, k, 1).unwrap());
        for jobs in [4, 8] {
            assert_eq!(format!("{:?}", verify_criterion(Mode::Lagrangian, k, jobs).unwrap()), reference, "k={k}");
        }
    }
}
