use std::collections::BTreeMap;

use crate::coeff::{EpsSeries, LaurentPoly, Scalar};

use super::poly::NcPoly;
use super::word::{Generator, Word};

/// Commutative image: monomials are sorted generator multisets.
#[derive(Clone, PartialEq, Debug)]
pub struct CommPoly<C> {
    pub terms: BTreeMap<Vec<Generator>, LaurentPoly<C>>,
}

impl<C: Scalar> CommPoly<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands every coefficient in `ε` and keeps the nonzero series.
    pub fn expand_eps(&self, order: usize) -> BTreeMap<Vec<Generator>, EpsSeries<C>> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.expand_eps(order)))
            .filter(|(_, s)| !s.is_zero())
            .collect()
    }
}

pub fn abelianize<C: Scalar>(a: &NcPoly<C>) -> CommPoly<C> {
    let mut terms: BTreeMap<Vec<Generator>, LaurentPoly<C>> = BTreeMap::new();
    for (w, c) in a.terms() {
        let mut key = w.letters().to_vec();
        key.sort();
        let slot = terms.entry(key.clone()).or_insert_with(LaurentPoly::zero);
        *slot += c;
        if slot.is_zero() {
            terms.remove(&key);
        }
    }
    CommPoly { terms }
}

pub fn expand_terms_eps<C: Scalar>(a: &NcPoly<C>, order: usize) -> BTreeMap<Word, EpsSeries<C>> {
    a.terms().map(|(w, c)| (w.clone(), c.expand_eps(order))).collect()
}
