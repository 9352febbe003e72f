//! Seeded random arrangements and weights for property sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{Arrangement, HyperplaneSpec};
use crate::osalgebra::WeightVector;
use crate::rational::{q_frac, Q};
use crate::resonance::DenseData;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R) -> Q {
    q_frac(rng.random_range(-2..=2), rng.random_range(1..=2))
}

/// `n` distinct hyperplanes in dimension `dim` with coefficients and
/// constants in `{-2, ..., 2} / {1, 2}`. Draws producing a zero or repeated
/// hyperplane are rejected.
pub fn random_arrangement<R: Rng>(rng: &mut R, dim: usize, n: usize) -> Arrangement {
    let mut specs: Vec<HyperplaneSpec> = Vec::with_capacity(n);
    while specs.len() < n {
        let coeffs: Vec<Q> = (0..dim).map(|_| small_rational(rng)).collect();
        let constant = small_rational(rng);
        let label = format!("H{}", specs.len() + 1);
        let mut candidate = specs.clone();
        candidate.push(HyperplaneSpec::new(label, coeffs, constant));
        if Arrangement::new(dim, candidate.clone()).is_ok() {
            specs = candidate;
        }
    }
    Arrangement::new(dim, specs).expect("accepted specs are valid")
}

/// Dimension in `1..=max_dim`, size in `1..=max_n`.
pub fn random_sized_arrangement<R: Rng>(rng: &mut R, max_dim: usize, max_n: usize) -> Arrangement {
    let dim = rng.random_range(1..=max_dim);
    let n = rng.random_range(1..=max_n);
    random_arrangement(rng, dim, n)
}

/// Weights `p / q` with `p` in `-30..=30` nonzero and `q` in `1..=17`.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> WeightVector {
    WeightVector::new(
        (0..n)
            .map(|_| {
                let mut p = 0;
                while p == 0 {
                    p = rng.random_range(-30..=30);
                }
                q_frac(p, rng.random_range(1..=17))
            })
            .collect(),
    )
}

/// Random weights satisfying the Yuzvinsky condition. With
/// `want_nonresonant`, nonresonant weights are tried first; some
/// arrangements admit none (parallel hyperplanes meeting only at infinity
/// give `lambda(X) = 0` there), so after a bounded number of draws the first
/// Yuzvinsky weights are returned.
pub fn random_gated_weights<R: Rng>(
    rng: &mut R,
    dense: &DenseData,
    n: usize,
    want_nonresonant: bool,
) -> WeightVector {
    let mut fallback = None;
    for _ in 0..64 {
        let w = random_weights(rng, n);
        if !dense.check_yuzvinsky(&w).ok {
            continue;
        }
        if !want_nonresonant || dense.check_nonresonance(&w, false).ok {
            return w;
        }
        fallback.get_or_insert(w);
    }
    if let Some(w) = fallback {
        return w;
    }
    loop {
        let w = random_weights(rng, n);
        if dense.check_yuzvinsky(&w).ok {
            return w;
        }
    }
}

/// A reproducible list of random arrangements.
pub fn corpus(seed: u64, count: usize, max_dim: usize, max_n: usize) -> Vec<Arrangement> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_sized_arrangement(&mut r, max_dim, max_n))
        .collect()
}
