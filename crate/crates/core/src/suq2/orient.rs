use std::collections::BTreeMap;

use crate::coeff::{LaurentPoly, Scalar};
use crate::ncalg::{Alphabet, Measure, NcPoly, Word};

use super::SystemError;

fn substitute<C: Scalar>(p: &NcPoly<C>, solved: &BTreeMap<Word, NcPoly<C>>) -> NcPoly<C> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        match solved.get(w) {
            Some(rhs) => out = &out + &rhs.scale(c),
            None => out.add_term(w.clone(), c),
        }
    }
    out
}

/// Turns linear relations `rel = 0` into directed rules `word -> rhs` for
/// every word flagged by `reducible`.
///
/// Gauss-Jordan elimination over Laurent polynomials: a relation can only
/// be solved for a word whose coefficient is a unit `c q^n`. Among the
/// candidates the word with the largest measure is taken, which keeps the
/// braiding systems triangular. Every right-hand side ends up free of
/// reducible words; a reducible word that cannot be solved for is an error.
pub fn orient<C: Scalar>(
    relations: &[NcPoly<C>],
    reducible: impl Fn(&Word) -> bool,
    expected: &[Word],
    names: &dyn Alphabet,
) -> Result<BTreeMap<Word, NcPoly<C>>, SystemError> {
    let mut solved: BTreeMap<Word, NcPoly<C>> = BTreeMap::new();
    let mut open: Vec<NcPoly<C>> = relations.to_vec();
    loop {
        let mut progress = false;
        let mut still_open = Vec::new();
        for rel in open {
            let rel = substitute(&rel, &solved);
            if rel.is_empty() {
                continue;
            }
            let pivot = rel
                .terms()
                .filter(|(w, c)| reducible(w) && c.as_monomial().is_some())
                .max_by_key(|(w, _)| (Measure::of(w), (*w).clone()))
                .map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = pivot else {
                still_open.push(rel);
                continue;
            };
            let (e, v) = c.as_monomial().expect("pivot is a monomial");
            let inv = LaurentPoly::monomial(-e, v.recip().expect("nonzero pivot"));
            let rest = &rel - &NcPoly::term(w.clone(), c.clone());
            let rhs = (-&rest).scale(&inv);
            let one = BTreeMap::from([(w.clone(), rhs.clone())]);
            for v in solved.values_mut() {
                *v = substitute(v, &one);
            }
            solved.insert(w, rhs);
            progress = true;
        }
        open = still_open;
        if !progress {
            break;
        }
    }
    for rel in &open {
        if let Some((w, _)) = rel.terms().find(|(w, _)| reducible(w)) {
            return Err(SystemError::Unsolvable(w.render(names)));
        }
        return Err(SystemError::Overdetermined(rel.render(names)));
    }
    for w in expected {
        if !solved.contains_key(w) {
            return Err(SystemError::Unsolvable(w.render(names)));
        }
    }
    Ok(solved)
}
