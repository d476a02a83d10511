use serde::Serialize;

use crate::coeff::{LaurentPoly, Scalar};
use crate::ncalg::{
    Alphabet, CopyId, Generator, Letter, Mode, NcError, NcPoly, RewriteRule, RewriteStats,
    RuleKind, RuleTable, Strategy, Word,
};

use super::braid::braid_relations;
use super::orient::orient;
use super::SystemError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CopyKind {
    Spin,
    SternGerlach,
    Rotation,
}

/// One copy of the algebra. `index` is 1-based within its kind.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CopyInfo {
    pub id: CopyId,
    pub kind: CopyKind,
    pub index: usize,
}

/// Copies in sequence order `(S_1..S_n, SG_1..SG_m[, R])` plus the
/// registered rewrite rules. Immutable once built.
#[derive(Clone, Debug)]
pub struct RelationSystem<C> {
    copies: Vec<CopyInfo>,
    table: RuleTable<C>,
}

impl<C: Scalar> Alphabet for RelationSystem<C> {
    fn name(&self, g: Generator) -> String {
        let star = if g.starred { "*" } else { "" };
        let Some(info) = self.copies.get(g.copy as usize) else {
            return format!("?{}{star}", g.copy);
        };
        match (info.kind, g.letter) {
            (CopyKind::Spin, Letter::Alpha) => format!("x{}{star}", info.index),
            (CopyKind::Spin, Letter::Gamma) => format!("y{}{star}", info.index),
            (CopyKind::SternGerlach, Letter::Alpha) => format!("a{}{star}", info.index),
            (CopyKind::SternGerlach, Letter::Gamma) => format!("c{}{star}", info.index),
            (CopyKind::Rotation, Letter::Alpha) => format!("r1{star}"),
            (CopyKind::Rotation, Letter::Gamma) => format!("r2{star}"),
        }
    }
}

fn intra_rules<C: Scalar>(k: CopyId) -> Vec<RewriteRule<C>> {
    let x = Generator::alpha(k);
    let y = Generator::gamma(k);
    let (xs, ys) = (x.star(), y.star());
    let w = |a: Generator, b: Generator| Word::new(vec![a, b]);
    let q = |n: i32| LaurentPoly::<C>::q_pow(n);
    let t = |word: Word, c: LaurentPoly<C>| NcPoly::term(word, c);
    let rule = |a, b, rhs, kind| RewriteRule { lhs: (a, b), rhs, kind };
    vec![
        rule(x, y, t(w(y, x), q(1)), RuleKind::Order),
        rule(x, ys, t(w(ys, x), q(1)), RuleKind::Order),
        rule(xs, y, t(w(y, xs), q(-1)), RuleKind::Order),
        rule(xs, ys, t(w(ys, xs), q(-1)), RuleKind::Order),
        rule(ys, y, t(w(y, ys), q(0)), RuleKind::Order),
        rule(
            xs,
            x,
            &t(w(x, xs), q(0)) + &t(w(y, ys), LaurentPoly::from_i64_terms(&[(0, -1), (2, 1)])),
            RuleKind::Order,
        ),
        rule(
            x,
            xs,
            &NcPoly::one() - &t(w(y, ys), q(2)),
            RuleKind::Unitarity,
        ),
    ]
}

/// All sixteen two-letter words with a letter of `early` left of a letter
/// of `late`.
fn cross_words(early: CopyId, late: CopyId) -> Vec<Word> {
    let letters = |k| {
        [
            Generator::alpha(k),
            Generator::gamma(k),
            Generator::alpha(k).star(),
            Generator::gamma(k).star(),
        ]
    };
    letters(early)
        .into_iter()
        .flat_map(|a| letters(late).into_iter().map(move |b| Word::new(vec![a, b])))
        .collect()
}

/// Builds the system for `n_spin` spin copies, `n_sg` Stern-Gerlach copies
/// and an optional rotation copy appended last.
pub fn make_system<C: Scalar>(
    n_spin: usize,
    n_sg: usize,
    with_rotation: bool,
) -> Result<RelationSystem<C>, SystemError> {
    let mut copies = Vec::new();
    let total = n_spin + n_sg + usize::from(with_rotation);
    if total > (u16::MAX as usize) / 4 {
        return Err(SystemError::TooManyCopies);
    }
    for i in 0..n_spin {
        copies.push(CopyInfo { id: copies.len() as CopyId, kind: CopyKind::Spin, index: i + 1 });
    }
    for i in 0..n_sg {
        copies.push(CopyInfo { id: copies.len() as CopyId, kind: CopyKind::SternGerlach, index: i + 1 });
    }
    if with_rotation {
        copies.push(CopyInfo { id: copies.len() as CopyId, kind: CopyKind::Rotation, index: 1 });
    }
    let mut sys = RelationSystem { copies, table: RuleTable::new(total) };
    let mut pending = Vec::new();
    for info in &sys.copies {
        pending.extend(intra_rules::<C>(info.id));
    }
    let apparatus: Vec<CopyId> = sys
        .copies
        .iter()
        .filter(|c| c.kind != CopyKind::Rotation)
        .map(|c| c.id)
        .collect();
    for (p, &i) in apparatus.iter().enumerate() {
        for &j in &apparatus[p + 1..] {
            let relations = braid_relations::<C>(i, j);
            let words = cross_words(i, j);
            let solved = orient(&relations, |w| words.contains(w), &words, &sys)?;
            for w in &words {
                let l = w.letters();
                pending.push(RewriteRule { lhs: (l[0], l[1]), rhs: solved[w].clone(), kind: RuleKind::Braid });
            }
        }
    }
    if let Some(r) = sys.rotation_copy() {
        for &i in &apparatus {
            for w in cross_words(i, r) {
                let l = w.letters();
                let rhs = NcPoly::word(Word::new(vec![l[1], l[0]]));
                pending.push(RewriteRule { lhs: (l[0], l[1]), rhs, kind: RuleKind::Spectator });
            }
        }
    }
    let mut table = RuleTable::new(total);
    for rule in pending {
        table.register(rule, &sys)?;
    }
    sys.table = table;
    Ok(sys)
}

impl<C: Scalar> RelationSystem<C> {
    pub fn copies(&self) -> &[CopyInfo] {
        &self.copies
    }

    pub fn rules(&self) -> &[RewriteRule<C>] {
        self.table.rules()
    }

    pub fn table(&self) -> &RuleTable<C> {
        &self.table
    }

    pub fn n_spin(&self) -> usize {
        self.count(CopyKind::Spin)
    }

    pub fn n_sg(&self) -> usize {
        self.count(CopyKind::SternGerlach)
    }

    fn count(&self, kind: CopyKind) -> usize {
        self.copies.iter().filter(|c| c.kind == kind).count()
    }

    pub fn copy_of(&self, kind: CopyKind, index: usize) -> Result<CopyId, SystemError> {
        self.copies
            .iter()
            .find(|c| c.kind == kind && c.index == index)
            .map(|c| c.id)
            .ok_or(SystemError::UnknownCopy {
                kind: match kind {
                    CopyKind::Spin => "spin",
                    CopyKind::SternGerlach => "Stern-Gerlach",
                    CopyKind::Rotation => "rotation",
                },
                index,
            })
    }

    pub fn spin_copy(&self, i: usize) -> Result<CopyId, SystemError> {
        self.copy_of(CopyKind::Spin, i)
    }

    pub fn sg_copy(&self, i: usize) -> Result<CopyId, SystemError> {
        self.copy_of(CopyKind::SternGerlach, i)
    }

    pub fn rotation_copy(&self) -> Option<CopyId> {
        self.copies.iter().find(|c| c.kind == CopyKind::Rotation).map(|c| c.id)
    }

    /// Looks a generator up by its rendered name: `x2`, `c1*`, `r2`.
    pub fn generator(&self, letter: char, index: usize, starred: bool) -> Option<Generator> {
        let (kind, l, index) = match letter {
            'x' => (CopyKind::Spin, Letter::Alpha, index),
            'y' => (CopyKind::Spin, Letter::Gamma, index),
            'a' => (CopyKind::SternGerlach, Letter::Alpha, index),
            'c' => (CopyKind::SternGerlach, Letter::Gamma, index),
            'r' => match index {
                1 => (CopyKind::Rotation, Letter::Alpha, 1),
                2 => (CopyKind::Rotation, Letter::Gamma, 1),
                _ => return None,
            },
            _ => return None,
        };
        let copy = self.copy_of(kind, index).ok()?;
        Some(Generator::new(copy, l, starred))
    }

    pub fn normalize(&self, a: &NcPoly<C>) -> Result<NcPoly<C>, NcError> {
        Ok(self.table.normalize_with(a, Mode::TwoPhase, Strategy::Leftmost, self)?.0)
    }

    pub fn normalize_with(
        &self,
        a: &NcPoly<C>,
        mode: Mode,
        strategy: Strategy,
    ) -> Result<(NcPoly<C>, RewriteStats), NcError> {
        self.table.normalize_with(a, mode, strategy, self)
    }

    pub fn is_zero(&self, a: &NcPoly<C>) -> Result<bool, NcError> {
        Ok(self.normalize(a)?.is_empty())
    }

    pub fn render(&self, a: &NcPoly<C>) -> String {
        a.render(self)
    }

    /// One rule per line: `kind: lhs -> rhs`.
    pub fn dump_rules(&self) -> String {
        let mut out = String::new();
        for r in self.table.rules() {
            out.push_str(&r.render(self));
            out.push('\n');
        }
        out
    }
}
