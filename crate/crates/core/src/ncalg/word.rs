use std::fmt;

use serde::Serialize;

/// Position of a copy in the global copy sequence. Later copies sort to the
/// left in canonical words.
pub type CopyId = u16;

/// `Alpha` is the x/a-type letter, `Gamma` the y/c-type letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Letter {
    Alpha,
    Gamma,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Generator {
    pub copy: CopyId,
    pub letter: Letter,
    pub starred: bool,
}

impl Generator {
    pub const fn new(copy: CopyId, letter: Letter, starred: bool) -> Self {
        Self { copy, letter, starred }
    }

    pub const fn alpha(copy: CopyId) -> Self {
        Self::new(copy, Letter::Alpha, false)
    }

    pub const fn gamma(copy: CopyId) -> Self {
        Self::new(copy, Letter::Gamma, false)
    }

    pub fn star(self) -> Self {
        Self { starred: !self.starred, ..self }
    }

    /// Canonical order inside one copy: γ < γ* < α < α*.
    pub fn intra_rank(self) -> u8 {
        match (self.letter, self.starred) {
            (Letter::Gamma, false) => 0,
            (Letter::Gamma, true) => 1,
            (Letter::Alpha, false) => 2,
            (Letter::Alpha, true) => 3,
        }
    }

    /// Dense index used by rule tables.
    pub fn slot(self) -> usize {
        self.copy as usize * 4 + self.intra_rank() as usize
    }

    pub fn weight(self) -> usize {
        match self.letter {
            Letter::Alpha => 2,
            Letter::Gamma => 1,
        }
    }
}

/// Names generators for rendering.
pub trait Alphabet {
    fn name(&self, g: Generator) -> String;
}

/// Fallback names `A0`, `G1*` keyed by raw copy id.
pub struct PlainAlphabet;

impl Alphabet for PlainAlphabet {
    fn name(&self, g: Generator) -> String {
        let l = match g.letter {
            Letter::Alpha => 'A',
            Letter::Gamma => 'G',
        };
        format!("{l}{}{}", g.copy, if g.starred { "*" } else { "" })
    }
}

/// Ordered product of generators; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Self(letters)
    }

    pub fn single(g: Generator) -> Self {
        Self(vec![g])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// Reverses the letters and toggles every star.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.star()).collect())
    }

    /// Replaces the two letters at `pos`, `pos + 1` with `mid`.
    pub fn splice(&self, pos: usize, mid: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + mid.0.len() - 2);
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[pos + 2..]);
        Word(v)
    }

    pub fn render(&self, names: &dyn Alphabet) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|g| names.name(*g)).collect::<Vec<_>>().join(" ")
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&PlainAlphabet))
    }
}
