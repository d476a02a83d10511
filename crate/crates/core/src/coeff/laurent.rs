use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::eps::EpsSeries;
use super::scalar::Scalar;
use super::CoeffError;

/// Finite sum `Σ c_n q^n` with `n ∈ ℤ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i32, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^n` with unit coefficient.
    pub fn q_pow(n: i32) -> Self {
        Self::monomial(n, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_i64_terms(pairs: &[(i32, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (e, C::from_i64(c))))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((n, c))` when the polynomial is a single term `c q^n`.
    pub fn as_monomial(&self) -> Option<(i32, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    fn add_term(&mut self, exp: i32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, CoeffError> {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.checked_add(*e2).ok_or(CoeffError::ExponentOverflow)?;
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Coefficient-wise conjugation; `q` is real so exponents stay put.
    pub fn conj(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.conj())))
    }

    /// Exact value at `q = value`.
    pub fn eval(&self, value: &C) -> Result<C, CoeffError> {
        if value.is_zero() {
            return Err(CoeffError::ZeroQ);
        }
        let inv = value.recip();
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 {
                value.clone()
            } else {
                inv.clone().ok_or(CoeffError::ZeroQ)?
            };
            acc = acc + c.clone() * pow(&base, e.unsigned_abs());
        }
        Ok(acc)
    }

    /// Substitutes `q = 1 − ε` and truncates after `ε^order`.
    ///
    /// `(1 − ε)^n = Σ_k (−1)^k C(n, k) ε^k` with the generalized binomial,
    /// which covers negative `n` as well.
    pub fn expand_eps(&self, order: usize) -> EpsSeries<C> {
        let mut coeffs = vec![C::zero(); order + 1];
        for (e, c) in &self.terms {
            let mut binom = BigInt::one();
            let n = BigInt::from(*e);
            for (k, slot) in coeffs.iter_mut().enumerate() {
                if k > 0 {
                    binom = binom * (&n - BigInt::from(k - 1)) / BigInt::from(k);
                }
                if binom.is_zero() {
                    break;
                }
                let term = if k % 2 == 0 { binom.clone() } else { -binom.clone() };
                *slot = slot.clone() + c.clone() * C::from_integer(&term);
            }
        }
        EpsSeries::from_coeffs(coeffs)
    }
}

fn pow<C: Scalar>(base: &C, n: u32) -> C {
    let mut acc = C::one();
    for _ in 0..n {
        acc = acc * base.clone();
    }
    acc
}

impl<C: Scalar> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<C: Scalar> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, o: &LaurentPoly<C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, o: &LaurentPoly<C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Scalar> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += &o;
        self
    }
}

impl<C: Scalar> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self -= &o;
        self
    }
}

impl<C: Scalar> Mul for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<C: Scalar> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, o: Self) -> LaurentPoly<C> {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl<C: Scalar> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, o: Self) -> LaurentPoly<C> {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl<C: Scalar> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    /// Panics only on exponent overflow, far outside anything physical.
    fn mul(self, o: Self) -> LaurentPoly<C> {
        self.try_mul(o).expect("q exponent overflow")
    }
}

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Scalar> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -self.clone()
    }
}

fn render_term<C: Scalar>(e: i32, c: &C, out: &mut String) {
    let power = match e {
        0 => String::new(),
        1 => "q".to_string(),
        n => format!("q^{n}"),
    };
    if power.is_empty() {
        out.push_str(&c.to_string());
        return;
    }
    if c.is_one() {
        out.push_str(&power);
    } else if (-c.clone()).is_one() {
        out.push('-');
        out.push_str(&power);
    } else {
        let s = c.to_string();
        if s.contains('i') {
            out.push_str(&format!("({s})*{power}"));
        } else {
            out.push_str(&format!("{s}*{power}"));
        }
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    /// Ascending exponents, e.g. `-q^-1 + q` for `q − q⁻¹`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                if c.is_negative() {
                    out.push_str(" - ");
                    render_term(*e, &-c.clone(), &mut out);
                    continue;
                }
                out.push_str(" + ");
            }
            render_term(*e, c, &mut out);
        }
        f.write_str(&out)
    }
}
