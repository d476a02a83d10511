use std::fmt;

use num_rational::BigRational;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenRef {
    /// One of `x y a c r`.
    pub letter: char,
    pub index: usize,
    pub starred: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    PUp,
    PDown,
    Sigma,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::PUp => "P_up",
            Builtin::PDown => "P_down",
            Builtin::Sigma => "sigma",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "P_up" => Some(Builtin::PUp),
            "P_down" => Some(Builtin::PDown),
            "sigma" => Some(Builtin::Sigma),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Rational(BigRational),
    Imag,
    QPow(i32),
    Gen(GenRef),
    Builtin(Builtin, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
}

/// Equality ignores positions.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, pos: Pos) -> Self {
        Self { kind, pos }
    }

    /// Calls `f` on every node, parents first.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        f(self);
        match &self.kind {
            ExprKind::Neg(a) | ExprKind::Star(a) => a.walk(f),
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) | ExprKind::Bracket(a, b) => {
                a.walk(f);
                b.walk(f);
            }
            _ => {}
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn prec(&self) -> u8 {
        match self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) | ExprKind::Neg(_) => 1,
            ExprKind::Mul(..) => 2,
            _ => 3,
        }
    }

    // `ctx` is the lowest precedence printable without parentheses.
    fn render_into(&self, out: &mut String, ctx: u8) {
        if self.prec() < ctx {
            out.push('(');
            self.render_into(out, 0);
            out.push(')');
            return;
        }
        match &self.kind {
            ExprKind::Rational(r) => out.push_str(&r.to_string()),
            ExprKind::Imag => out.push('i'),
            ExprKind::QPow(1) => out.push('q'),
            ExprKind::QPow(n) => out.push_str(&format!("q^{n}")),
            ExprKind::Gen(g) => {
                out.push_str(&format!("{}{}", g.letter, g.index));
                if g.starred {
                    out.push('*');
                }
            }
            ExprKind::Builtin(b, i) => out.push_str(&format!("{}({i})", b.name())),
            ExprKind::Neg(a) => {
                out.push('-');
                a.render_into(out, 3);
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                a.render_into(out, 1);
                out.push_str(if matches!(self.kind, ExprKind::Add(..)) { " + " } else { " - " });
                b.render_into(out, 2);
            }
            ExprKind::Mul(a, b) => {
                a.render_into(out, 2);
                out.push_str(" * ");
                b.render_into(out, 3);
            }
            ExprKind::Bracket(a, b) => {
                out.push('[');
                a.render_into(out, 0);
                out.push_str(", ");
                b.render_into(out, 0);
                out.push(']');
            }
            ExprKind::Star(a) => {
                out.push_str("star(");
                a.render_into(out, 0);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
