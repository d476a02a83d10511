//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | literal | genref | builtin | '(' expr ')'
//!          | '[' expr ',' expr ']' | 'star' '(' expr ')'
//! genref  := ('x'|'y'|'a'|'c'|'r') digits '*'?
//! literal := digits ('/' digits)? | 'q' ('^' '-'? digits)? | 'i'
//! builtin := ('P_up' | 'P_down' | 'sigma') '(' digits ')'
//! ```
//!
//! A `*` right after a generator is its star unless the next token can
//! start a factor, so `x1*y1` is a product and `x1* * y1` multiplies the
//! starred generator. `**` is never valid.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::ast::{Builtin, Expr, ExprKind, GenRef, Pos};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    Lexical(char),
    #[error("malformed star")]
    MalformedStar,
    #[error("expected {expected}, found {found}")]
    Syntax { expected: String, found: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("index {index} of {what} out of range (system has {max})")]
    IndexOutOfRange { what: String, index: usize, max: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("exponent {0} too large")]
    Exponent(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{pos}: {kind}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

fn perr(pos: Pos, kind: ParseErrorKind) -> ParseError {
    ParseError { pos, kind }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Eof => "end of input".into(),
            t => format!("{:?}", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            _ => "",
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self, Tok::Num(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket)
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let start = k;
        let tok = if c.is_ascii_digit() {
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            Tok::Num(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            Tok::Ident(chars[start..k].iter().collect())
        } else {
            k += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => {
                    if chars.get(k) == Some(&'*') {
                        return Err(perr(Pos { line, col: col + 1 }, ParseErrorKind::MalformedStar));
                    }
                    Tok::Star
                }
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                _ => return Err(perr(pos, ParseErrorKind::Lexical(c))),
            }
        };
        col += k - start;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(perr(
            self.pos(),
            ParseErrorKind::Syntax { expected: expected.into(), found: self.peek().describe() },
        ))
    }

    fn expect(&mut self, t: Tok) -> Result<Pos, ParseError> {
        if *self.peek() == t {
            Ok(self.bump().1)
        } else {
            self.fail(&format!("{:?}", t.symbol()))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let (ctor, pos): (fn(Box<Expr>, Box<Expr>) -> ExprKind, Pos) = match self.peek() {
                Tok::Plus => (ExprKind::Add, self.pos()),
                Tok::Minus => (ExprKind::Sub, self.pos()),
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            let pos = self.bump().1;
            let rhs = self.factor()?;
            lhs = Expr::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), pos);
        }
        Ok(lhs)
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                let pos = self.bump().1;
                usize::try_from(&n).map_err(|_| perr(pos, ParseErrorKind::Exponent(n.to_string())))
            }
            _ => self.fail("an index"),
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                let inner = self.factor()?;
                Ok(Expr::new(ExprKind::Neg(Box::new(inner)), pos))
            }
            Tok::Num(n) => {
                self.bump();
                let mut den = BigInt::from(1);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.peek().clone() {
                        Tok::Num(d) => {
                            self.bump();
                            if d.is_zero() {
                                return Err(perr(dpos, ParseErrorKind::ZeroDenominator));
                            }
                            den = d;
                        }
                        _ => return self.fail("a denominator"),
                    }
                }
                Ok(Expr::new(ExprKind::Rational(BigRational::new(n, den)), pos))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::new(ExprKind::Bracket(Box::new(a), Box::new(b)), pos))
            }
            Tok::Ident(name) => {
                self.bump();
                self.ident(name, pos)
            }
            _ => self.fail("a factor"),
        }
    }

    fn ident(&mut self, name: String, pos: Pos) -> Result<Expr, ParseError> {
        match name.as_str() {
            "i" => return Ok(Expr::new(ExprKind::Imag, pos)),
            "q" => {
                if *self.peek() != Tok::Caret {
                    return Ok(Expr::new(ExprKind::QPow(1), pos));
                }
                self.bump();
                let neg = *self.peek() == Tok::Minus;
                if neg {
                    self.bump();
                }
                let npos = self.pos();
                let n = match self.peek().clone() {
                    Tok::Num(n) => n,
                    _ => return self.fail("an exponent"),
                };
                self.bump();
                let n = if neg { -n } else { n };
                let e = i32::try_from(&n).map_err(|_| perr(npos, ParseErrorKind::Exponent(n.to_string())))?;
                return Ok(Expr::new(ExprKind::QPow(e), pos));
            }
            "star" => {
                self.expect(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(Expr::new(ExprKind::Star(Box::new(e)), pos));
            }
            _ => {}
        }
        if let Some(b) = Builtin::from_name(&name) {
            self.expect(Tok::LParen)?;
            let i = self.index()?;
            self.expect(Tok::RParen)?;
            return Ok(Expr::new(ExprKind::Builtin(b, i), pos));
        }
        let mut chars = name.chars();
        let letter = chars.next().unwrap_or(' ');
        let digits = chars.as_str();
        if !"xyacr".contains(letter) || digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(perr(pos, ParseErrorKind::UnknownGenerator(name)));
        }
        let index = digits.parse().map_err(|_| perr(pos, ParseErrorKind::UnknownGenerator(name.clone())))?;
        let starred = *self.peek() == Tok::Star && !self.peek2().starts_factor();
        if starred {
            self.bump();
        }
        Ok(Expr::new(ExprKind::Gen(GenRef { letter, index, starred }), pos))
    }
}

/// Parses without checking indices against a system.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.fail("an operator or end of input");
    }
    Ok(e)
}

/// Sizes an expression's indices are checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub n_spin: usize,
    pub n_sg: usize,
    pub rotation: bool,
}

/// Rejects generator and apparatus indices the system does not have.
pub fn check_indices(e: &Expr, shape: Shape) -> Result<(), ParseError> {
    let mut found = Ok(());
    e.walk(&mut |node| {
        if found.is_err() {
            return;
        }
        let (what, index, max) = match &node.kind {
            ExprKind::Gen(g) => match g.letter {
                'x' | 'y' => ("spin copy".to_string(), g.index, shape.n_spin),
                'a' | 'c' => ("Stern-Gerlach copy".to_string(), g.index, shape.n_sg),
                _ => {
                    let max = if shape.rotation { 2 } else { 0 };
                    ("rotation generator".to_string(), g.index, max)
                }
            },
            ExprKind::Builtin(Builtin::Sigma, i) => ("apparatus".to_string(), *i, shape.n_sg),
            ExprKind::Builtin(_, i) => ("apparatus".to_string(), *i, shape.n_spin.min(shape.n_sg)),
            _ => return,
        };
        if index == 0 || index > max {
            found = Err(perr(node.pos, ParseErrorKind::IndexOutOfRange { what, index, max }));
        }
    });
    found
}

pub fn parse_for(input: &str, shape: Shape) -> Result<Expr, ParseError> {
    let e = parse(input)?;
    check_indices(&e, shape)?;
    Ok(e)
}
