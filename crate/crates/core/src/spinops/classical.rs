use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;

use crate::coeff::Scalar;
use crate::ncalg::{Alphabet, CopyId, Generator, Letter, NcPoly};

use super::SpinError;

/// Numeric values for unstarred generators; starred ones evaluate to the
/// conjugate of their partner.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    values: BTreeMap<(CopyId, Letter), Complex64>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, copy: CopyId, letter: Letter, v: Complex64) -> &mut Self {
        self.values.insert((copy, letter), v);
        self
    }

    /// Sets `α = a`, `γ = c` for one copy.
    pub fn set_copy(&mut self, copy: CopyId, a: Complex64, c: Complex64) -> &mut Self {
        self.set(copy, Letter::Alpha, a).set(copy, Letter::Gamma, c)
    }

    pub fn get(&self, g: Generator) -> Option<Complex64> {
        let v = self.values.get(&(g.copy, g.letter)).copied()?;
        Some(if g.starred { v.conj() } else { v })
    }
}

/// Evaluates `a` with all generators replaced by commuting numbers.
pub fn classical_eval<C: Scalar>(
    a: &NcPoly<C>,
    assignment: &Assignment,
    q: &BigRational,
    names: &dyn Alphabet,
) -> Result<Complex64, SpinError> {
    let qv = C::from_rational(q);
    let mut acc = Complex64::new(0.0, 0.0);
    for (w, c) in a.terms() {
        let mut t = c.eval(&qv)?.to_c64();
        for g in w.letters() {
            let v = assignment
                .get(*g)
                .ok_or_else(|| SpinError::IncompleteAssignment(names.name(*g)))?;
            t *= v;
        }
        acc += t;
    }
    Ok(acc)
}
