use std::collections::BTreeMap;

use serde::Serialize;

use crate::coeff::{LaurentPoly, Scalar};

use super::poly::NcPoly;
use super::word::{Alphabet, Generator, Word};
use super::NcError;

/// What a rule does. `Unitarity` rules remove an α/α* pair and are held back
/// until every word is sorted by copy (see [`Mode::TwoPhase`]).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RuleKind {
    Order,
    Unitarity,
    Braid,
    Spectator,
}

impl RuleKind {
    pub fn tag(self) -> &'static str {
        match self {
            RuleKind::Order => "order",
            RuleKind::Unitarity => "unitarity",
            RuleKind::Braid => "braid",
            RuleKind::Spectator => "spectator",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RewriteRule<C> {
    pub lhs: (Generator, Generator),
    pub rhs: NcPoly<C>,
    pub kind: RuleKind,
}

impl<C: Scalar> RewriteRule<C> {
    pub fn lhs_word(&self) -> Word {
        Word::new(vec![self.lhs.0, self.lhs.1])
    }

    pub fn render(&self, names: &dyn Alphabet) -> String {
        format!(
            "{}: {} -> {}",
            self.kind.tag(),
            self.lhs_word().render(names),
            self.rhs.render(names)
        )
    }
}

/// Which redex to rewrite first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// How the rule table is applied.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Sort by copy with all non-unitarity rules, then apply unitarity
    /// inside each copy block. This is the canonical form.
    TwoPhase,
    /// Only the braided algebra: every rule except unitarity.
    BraidedOnly,
    /// Every rule at once. Kept for diagnostics: it is not confluent.
    SinglePass,
}

/// Lexicographic termination measure: (cross-copy inversions over all
/// position pairs, weighted degree with α letters counting 2, intra-copy
/// letter inversions).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Measure(pub usize, pub usize, pub usize);

impl Measure {
    pub fn of(w: &Word) -> Measure {
        let l = w.letters();
        let mut cross = 0;
        let mut intra = 0;
        for (p, a) in l.iter().enumerate() {
            for b in &l[p + 1..] {
                if a.copy < b.copy {
                    cross += 1;
                } else if a.copy == b.copy && a.intra_rank() > b.intra_rank() {
                    intra += 1;
                }
            }
        }
        let degree = l.iter().map(|g| g.weight()).sum();
        Measure(cross, degree, intra)
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize)]
pub struct RewriteStats {
    pub steps: u64,
    /// Every step was checked to decrease [`Measure`]; a violation aborts
    /// with an error instead of being counted.
    pub measure_checks: u64,
}

/// Finite rule table indexed by the adjacent pair it rewrites.
#[derive(Clone, Debug)]
pub struct RuleTable<C> {
    ncopies: usize,
    index: Vec<Option<usize>>,
    rules: Vec<RewriteRule<C>>,
}

impl<C: Scalar> RuleTable<C> {
    pub fn new(ncopies: usize) -> Self {
        let n = ncopies * 4;
        Self { ncopies, index: vec![None; n * n], rules: Vec::new() }
    }

    pub fn ncopies(&self) -> usize {
        self.ncopies
    }

    pub fn rules(&self) -> &[RewriteRule<C>] {
        &self.rules
    }

    pub fn contains(&self, g: Generator) -> bool {
        (g.copy as usize) < self.ncopies
    }

    fn key(&self, a: Generator, b: Generator) -> usize {
        a.slot() * self.ncopies * 4 + b.slot()
    }

    pub fn get(&self, a: Generator, b: Generator) -> Option<&RewriteRule<C>> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        self.index[self.key(a, b)].map(|k| &self.rules[k])
    }

    /// Adds a rule after checking that every word on the right is strictly
    /// below the left-hand side.
    pub fn register(&mut self, rule: RewriteRule<C>, names: &dyn Alphabet) -> Result<(), NcError> {
        let lhs = rule.lhs_word();
        for g in lhs.letters().iter().copied().chain(rule.rhs.generators()) {
            if !self.contains(g) {
                return Err(NcError::UnknownGenerator(names.name(g)));
            }
        }
        let before = Measure::of(&lhs);
        for (w, _) in rule.rhs.terms() {
            let after = Measure::of(w);
            if after >= before {
                return Err(NcError::MeasureViolation {
                    lhs: lhs.render(names),
                    rhs_word: w.render(names),
                    before,
                    after,
                });
            }
        }
        let k = self.key(rule.lhs.0, rule.lhs.1);
        if self.index[k].is_some() {
            return Err(NcError::DuplicateRule(lhs.render(names)));
        }
        self.index[k] = Some(self.rules.len());
        self.rules.push(rule);
        Ok(())
    }

    fn redex(&self, w: &Word, strategy: Strategy, unitarity: bool) -> Option<(usize, &RewriteRule<C>)> {
        let l = w.letters();
        if l.len() < 2 {
            return None;
        }
        let hit = |p: usize| {
            self.get(l[p], l[p + 1])
                .filter(|r| unitarity || r.kind != RuleKind::Unitarity)
                .map(|r| (p, r))
        };
        match strategy {
            Strategy::Leftmost => (0..l.len() - 1).find_map(hit),
            Strategy::Rightmost => (0..l.len() - 1).rev().find_map(hit),
        }
    }

    /// Rewrites until no redex is left. Words are processed from the largest
    /// measure down so that equal words merge before being expanded.
    fn reduce(
        &self,
        a: &NcPoly<C>,
        strategy: Strategy,
        unitarity: bool,
        stats: &mut RewriteStats,
        names: &dyn Alphabet,
    ) -> Result<NcPoly<C>, NcError> {
        let mut pending: BTreeMap<(Measure, Word), LaurentPoly<C>> = BTreeMap::new();
        for (w, c) in a.terms() {
            push(&mut pending, Measure::of(w), w.clone(), c);
        }
        let mut out = NcPoly::zero();
        while let Some(((m, w), c)) = pending.pop_last() {
            let Some((pos, rule)) = self.redex(&w, strategy, unitarity) else {
                out.add_term(w, &c);
                continue;
            };
            stats.steps += 1;
            for (mid, rc) in rule.rhs.terms() {
                let next = w.splice(pos, mid);
                let after = Measure::of(&next);
                stats.measure_checks += 1;
                if after >= m {
                    return Err(NcError::MeasureViolation {
                        lhs: w.render(names),
                        rhs_word: next.render(names),
                        before: m,
                        after,
                    });
                }
                push(&mut pending, after, next, &(&c * rc));
            }
        }
        Ok(out)
    }

    pub fn normalize_with(
        &self,
        a: &NcPoly<C>,
        mode: Mode,
        strategy: Strategy,
        names: &dyn Alphabet,
    ) -> Result<(NcPoly<C>, RewriteStats), NcError> {
        if let Some(g) = a.generators().find(|g| !self.contains(*g)) {
            return Err(NcError::UnknownGenerator(names.name(g)));
        }
        let mut stats = RewriteStats::default();
        let out = match mode {
            Mode::TwoPhase => {
                let sorted = self.reduce(a, strategy, false, &mut stats, names)?;
                self.reduce(&sorted, strategy, true, &mut stats, names)?
            }
            Mode::BraidedOnly => self.reduce(a, strategy, false, &mut stats, names)?,
            Mode::SinglePass => self.reduce(a, strategy, true, &mut stats, names)?,
        };
        Ok((out, stats))
    }
}

fn push<C: Scalar>(
    pending: &mut BTreeMap<(Measure, Word), LaurentPoly<C>>,
    m: Measure,
    w: Word,
    c: &LaurentPoly<C>,
) {
    if c.is_zero() {
        return;
    }
    let key = (m, w);
    match pending.get_mut(&key) {
        Some(old) => {
            *old += c;
            if old.is_zero() {
                pending.remove(&key);
            }
        }
        None => {
            pending.insert(key, c.clone());
        }
    }
}
