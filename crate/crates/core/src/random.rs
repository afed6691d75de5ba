//! Seeded random inputs for the property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;
use crate::series::TruncSeries;

pub type CheckRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> CheckRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational p/q with |p| ≤ 9 and 1 ≤ q ≤ 5.
pub fn random_scalar(rng: &mut CheckRng) -> Scalar {
    Scalar::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)).expect("nonzero denominator")
}

pub fn random_nonzero_scalar(rng: &mut CheckRng) -> Scalar {
    loop {
        let c = random_scalar(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// t + f_2 t^2 + ⋯ + f_N t^N with random rational f_k.
pub fn random_diffeo(rng: &mut CheckRng, n: usize) -> TruncSeries {
    let tail: Vec<Scalar> = (2..=n.max(2)).map(|_| random_scalar(rng)).collect();
    TruncSeries::diffeo(&tail).truncate(n.max(1))
}

/// 1 + f_1 t + ⋯ + f_N t^N with random rational f_k.
pub fn random_invertible(rng: &mut CheckRng, n: usize) -> TruncSeries {
    let tail: Vec<Scalar> = (1..=n).map(|_| random_scalar(rng)).collect();
    TruncSeries::invertible(&tail)
}
