use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;

/// Power series in `ε` truncated after `ε^order`.
#[derive(Clone, PartialEq, Debug)]
pub struct EpsSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> EpsSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![C::zero(); order + 1] }
    }

    /// `coeffs[k]` multiplies `ε^k`; the truncation order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "an ε-series needs at least the ε⁰ slot");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest `k` with a nonzero `ε^k` coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    /// Horner evaluation of the truncated sum at a concrete `ε`.
    pub fn eval(&self, eps: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * eps.clone() + c.clone())
    }

    fn common(&self, o: &Self) -> usize {
        self.order().min(o.order())
    }
}

impl<C: Scalar> Add for &EpsSeries<C> {
    type Output = EpsSeries<C>;
    fn add(self, o: Self) -> EpsSeries<C> {
        let n = self.common(o);
        EpsSeries { coeffs: (0..=n).map(|k| self.coeffs[k].clone() + o.coeffs[k].clone()).collect() }
    }
}

impl<C: Scalar> Sub for &EpsSeries<C> {
    type Output = EpsSeries<C>;
    fn sub(self, o: Self) -> EpsSeries<C> {
        let n = self.common(o);
        EpsSeries { coeffs: (0..=n).map(|k| self.coeffs[k].clone() - o.coeffs[k].clone()).collect() }
    }
}

impl<C: Scalar> Mul for &EpsSeries<C> {
    type Output = EpsSeries<C>;
    /// Cauchy product, truncated at the smaller of the two orders.
    fn mul(self, o: Self) -> EpsSeries<C> {
        let n = self.common(o);
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(C::zero(), |acc, m| {
                    acc + self.coeffs[m].clone() * o.coeffs[k - m].clone()
                })
            })
            .collect();
        EpsSeries { coeffs }
    }
}

impl<C: Scalar> Neg for &EpsSeries<C> {
    type Output = EpsSeries<C>;
    fn neg(self) -> EpsSeries<C> {
        EpsSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Scalar> fmt::Display for EpsSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*eps")?,
                _ => write!(f, "({c})*eps^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(eps^{})", self.order() + 1)
    }
}
