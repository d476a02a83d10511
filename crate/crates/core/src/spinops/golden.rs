use crate::coeff::{LaurentPoly, Scalar};
use crate::ncalg::NcPoly;
use crate::suq2::RelationSystem;

use super::SpinError;

/// Transcribed all-orders commutator, kept as reviewed data.
pub const ALL_ORDERS_COMMUTATOR: &str = include_str!("../../data/all_orders_commutator.txt");

/// A transcribed expression instantiated for a concrete apparatus pair.
#[derive(Clone, Debug)]
pub struct GoldenExpression<C> {
    pub prefactor: LaurentPoly<C>,
    pub bracket: NcPoly<C>,
    pub terms: usize,
}

impl<C: Scalar> GoldenExpression<C> {
    pub fn value(&self) -> NcPoly<C> {
        self.bracket.scale(&self.prefactor)
    }
}

fn err(line: usize, msg: impl Into<String>) -> SpinError {
    SpinError::Golden { line, msg: msg.into() }
}

/// Parses the data format: a `prefactor:` line of `exp:coeff` pairs and
/// term lines `± [q|q^n] f_k f_k* ...` with `f ∈ {x,y,a,c}`, `k ∈ {i,j}`.
pub fn parse_golden<C: Scalar>(
    text: &str,
    i: usize,
    j: usize,
    sys: &RelationSystem<C>,
) -> Result<GoldenExpression<C>, SpinError> {
    let mut prefactor = None;
    let mut bracket = NcPoly::zero();
    let mut terms = 0;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("prefactor:") {
            let mut p = LaurentPoly::zero();
            for pair in rest.split_whitespace() {
                let (e, c) = pair.split_once(':').ok_or_else(|| err(line_no, "expected exp:coeff"))?;
                let e: i32 = e.parse().map_err(|_| err(line_no, "bad exponent"))?;
                let c: i64 = c.parse().map_err(|_| err(line_no, "bad coefficient"))?;
                p = p + LaurentPoly::monomial(e, C::from_i64(c));
            }
            prefactor = Some(p);
            continue;
        }
        let mut toks = line.split_whitespace();
        let sign = match toks.next() {
            Some("+") => 1,
            Some("-") => -1,
            _ => return Err(err(line_no, "term must start with + or -")),
        };
        let mut coeff = LaurentPoly::monomial(0, C::from_i64(sign));
        let mut word = NcPoly::one();
        for t in toks {
            if t == "q" {
                coeff = &coeff * &LaurentPoly::q_pow(1);
                continue;
            }
            if let Some(e) = t.strip_prefix("q^") {
                let e: i32 = e.parse().map_err(|_| err(line_no, format!("bad power {t}")))?;
                coeff = &coeff * &LaurentPoly::q_pow(e);
                continue;
            }
            let (name, starred) = match t.strip_suffix('*') {
                Some(s) => (s, true),
                None => (t, false),
            };
            let mut chars = name.chars();
            let (Some(letter), Some('_'), Some(sub), None) =
                (chars.next(), chars.next(), chars.next(), chars.next())
            else {
                return Err(err(line_no, format!("bad factor {t}")));
            };
            let index = match sub {
                'i' => i,
                'j' => j,
                _ => return Err(err(line_no, format!("bad subscript in {t}"))),
            };
            let g = sys
                .generator(letter, index, starred)
                .ok_or_else(|| err(line_no, format!("unknown generator {t}")))?;
            word = &word * &NcPoly::gen(g);
        }
        bracket = &bracket + &word.scale(&coeff);
        terms += 1;
    }
    let prefactor = prefactor.ok_or_else(|| err(0, "missing prefactor line"))?;
    Ok(GoldenExpression { prefactor, bracket, terms })
}
