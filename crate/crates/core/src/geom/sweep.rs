use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::etensor::{e_tensor, max_abs_e};
use super::rotation::{random_rotation, RotationMatrix};
use super::symbolic::{row_equality_derivation, RowEqualityReport};
use super::GeomError;

/// Lower limit asserted for `min over samples of max |E|`. Any rotation has
/// `max |E| ≥ max_m |R_0m − R_2m| ≥ sqrt(2/3)`, so this holds with margin.
pub const NO_SHARP_FLOOR: f64 = 0.1;

/// Per-sample seed, independent of evaluation order (SplitMix64 of the
/// base seed and sample index).
pub fn sample_seed(seed: u64, sample: u64) -> u64 {
    let mut z = seed ^ sample.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Rotation for sample `k` of a seeded sweep.
pub fn sample_rotation(seed: u64, k: u64) -> RotationMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, k));
    random_rotation(&mut rng)
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SweepRow {
    pub sample: u64,
    pub seed: u64,
    pub q: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub bound: f64,
    #[serde(rename = "maxE")]
    pub max_e: f64,
}

/// For each sampled rotation, the index tuple maximizing `|E|` and the
/// corresponding bound `(1 − q)|E_{ijkl}|`.
pub fn sweep(samples: u64, seed: u64, q: &BigRational) -> Result<Vec<SweepRow>, GeomError> {
    if samples == 0 {
        return Err(GeomError::NoSamples);
    }
    let pref = (BigRational::one() - q).to_f64().unwrap_or(f64::NAN);
    Ok((0..samples)
        .into_par_iter()
        .map(|k| {
            let r = sample_rotation(seed, k);
            let (m, [i, j, kk, l]) = max_abs_e(&e_tensor(&r));
            SweepRow {
                sample: k,
                seed: sample_seed(seed, k),
                q: q.to_string(),
                i,
                j,
                k: kk,
                l,
                bound: pref * m,
                max_e: m,
            }
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct NoSharpReport {
    pub samples: u64,
    pub seed: u64,
    pub floor: f64,
    pub min_max_e: f64,
    pub argmin_sample: u64,
    pub identity_max_e: f64,
    pub symbolic: RowEqualityReport,
}

impl NoSharpReport {
    pub fn pass(&self) -> bool {
        self.min_max_e > self.floor && self.symbolic.pass()
    }
}

pub fn no_sharp_rotation_check(samples: u64, seed: u64) -> Result<NoSharpReport, GeomError> {
    if samples == 0 {
        return Err(GeomError::NoSamples);
    }
    let (min_max_e, argmin_sample) = (0..samples)
        .into_par_iter()
        .map(|k| (max_abs_e(&e_tensor(&sample_rotation(seed, k))).0, k))
        .reduce(|| (f64::INFINITY, 0), |a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a });
    Ok(NoSharpReport {
        samples,
        seed,
        floor: NO_SHARP_FLOOR,
        min_max_e,
        argmin_sample,
        identity_max_e: max_abs_e(&e_tensor(&RotationMatrix::<f64>::identity())).0,
        symbolic: row_equality_derivation(),
    })
}
