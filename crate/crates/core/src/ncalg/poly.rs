use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{LaurentPoly, Scalar};

use super::word::{Alphabet, Generator, Word};

/// Formal sum of words with Laurent-polynomial coefficients. Zero
/// coefficients are never stored, so a normalized zero has no terms.
#[derive(Clone, PartialEq, Debug)]
pub struct NcPoly<C> {
    terms: BTreeMap<Word, LaurentPoly<C>>,
}

impl<C: Scalar> Default for NcPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> NcPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly<C>) -> Self {
        Self::term(Word::identity(), c)
    }

    pub fn gen(g: Generator) -> Self {
        Self::term(Word::single(g), LaurentPoly::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Word, c: LaurentPoly<C>) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly<C>)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly<C>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly<C> {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.keys().flat_map(|w| w.letters().iter().copied())
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly<C>) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// Concatenation product, not normalized.
    pub fn nc_mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    /// Anti-linear anti-automorphism: reverse words, toggle stars,
    /// conjugate coefficients.
    pub fn star(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.star(), c.conj())))
    }

    pub fn map_coeffs<F: Fn(&LaurentPoly<C>) -> LaurentPoly<C>>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// `coeff * word` terms joined with `+`/`-`; the identity word prints
    /// as the bare coefficient.
    pub fn render(&self, names: &dyn Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, c) = match c.as_monomial() {
                Some((_, v)) if v.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let cs = c.to_string();
            let cs = if c.len() > 1 { format!("({cs})") } else { cs };
            if w.is_empty() {
                out.push_str(&cs);
            } else {
                out.push_str(&format!("{cs} * {}", w.render(names)));
            }
        }
        out
    }
}

impl<C: Scalar> Add for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn add(self, o: Self) -> NcPoly<C> {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }
}

impl<C: Scalar> Sub for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn sub(self, o: Self) -> NcPoly<C> {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), &-c);
        }
        r
    }
}

impl<C: Scalar> Mul for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn mul(self, o: Self) -> NcPoly<C> {
        self.nc_mul(o)
    }
}

impl<C: Scalar> Neg for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn neg(self) -> NcPoly<C> {
        self.map_coeffs(|c| -c)
    }
}

impl<C: Scalar> Add for NcPoly<C> {
    type Output = NcPoly<C>;
    fn add(self, o: Self) -> NcPoly<C> {
        &self + &o
    }
}

impl<C: Scalar> Sub for NcPoly<C> {
    type Output = NcPoly<C>;
    fn sub(self, o: Self) -> NcPoly<C> {
        &self - &o
    }
}

impl<C: Scalar> Mul for NcPoly<C> {
    type Output = NcPoly<C>;
    fn mul(self, o: Self) -> NcPoly<C> {
        self.nc_mul(&o)
    }
}

impl<C: Scalar> Neg for NcPoly<C> {
    type Output = NcPoly<C>;
    fn neg(self) -> NcPoly<C> {
        -&self
    }
}
