use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::Scalar;
use crate::ncalg::{Generator, Letter, Mode, NcError, NcPoly, Strategy, Word};

use super::system::RelationSystem;

/// Uniform random word over every generator of `sys`, length `0..=max_len`.
pub fn random_word<C: Scalar, R: Rng + ?Sized>(sys: &RelationSystem<C>, rng: &mut R, max_len: usize) -> Word {
    let ncopies = sys.copies().len() as u16;
    let len = rng.gen_range(0..=max_len);
    if ncopies == 0 {
        return Word::identity();
    }
    Word::new(
        (0..len)
            .map(|_| {
                let letter = if rng.gen() { Letter::Alpha } else { Letter::Gamma };
                Generator::new(rng.gen_range(0..ncopies), letter, rng.gen())
            })
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub check: &'static str,
    pub words: usize,
    pub max_len: usize,
    pub seed: u64,
    pub mismatches: usize,
    /// Rendering of the first word whose normal forms differ.
    pub first_mismatch: Option<String>,
    pub steps: u64,
    pub measure_checks: u64,
}

impl ConfluenceReport {
    pub fn pass(&self) -> bool {
        self.mismatches == 0 && self.measure_checks >= self.steps
    }
}

/// Normalizes `words` random words with leftmost-first and rightmost-first
/// rule application and compares the results. Every rewrite step is checked
/// against the termination measure; a violation is returned as an error.
pub fn check_confluence<C: Scalar>(
    sys: &RelationSystem<C>,
    words: usize,
    max_len: usize,
    seed: u64,
    mode: Mode,
) -> Result<ConfluenceReport, NcError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConfluenceReport {
        check: "confluence",
        words,
        max_len,
        seed,
        mismatches: 0,
        first_mismatch: None,
        steps: 0,
        measure_checks: 0,
    };
    for _ in 0..words {
        let word = random_word(sys, &mut rng, max_len);
        let w = NcPoly::word(word.clone());
        let (left, s1) = sys.normalize_with(&w, mode, Strategy::Leftmost)?;
        let (right, s2) = sys.normalize_with(&w, mode, Strategy::Rightmost)?;
        report.steps += s1.steps + s2.steps;
        report.measure_checks += s1.measure_checks + s2.measure_checks;
        if left != right {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert_with(|| word.render(sys));
        }
    }
    Ok(report)
}
