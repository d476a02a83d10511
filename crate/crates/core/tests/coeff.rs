use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

use qframes::coeff::{CoeffError, EpsSeries, LaurentPoly, Scalar};
use qframes::{GaussRational, Laurent, Series};

fn g(re: i64, im: i64) -> GaussRational {
    GaussRational::from_ints(re, im)
}

fn lp(terms: &[(i32, i64)]) -> Laurent {
    LaurentPoly::from_i64_terms(terms)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn series(coeffs: &[i64]) -> Series {
    EpsSeries::from_coeffs(coeffs.iter().map(|&c| g(c, 0)).collect())
}

#[test]
fn sub_keeps_both_exponents() {
    let d = lp(&[(1, 1)]) - lp(&[(-1, 1)]);
    assert_eq!(d, lp(&[(1, 1), (-1, -1)]));
    assert_eq!(d.len(), 2);
}

#[test]
fn prefactor_product() {
    let p = lp(&[(0, 1), (2, -1)]) * lp(&[(-3, 1)]);
    assert_eq!(p, lp(&[(-3, 1), (-1, -1)]));
}

#[test]
fn multiplying_by_zero_gives_the_empty_map() {
    let p = lp(&[(3, 5), (-2, 7)]) * Laurent::zero();
    assert!(p.is_zero());
    assert_eq!(p.len(), 0);
}

#[test]
fn cancellation_leaves_no_zero_coefficients() {
    let p = lp(&[(1, 2), (0, 1)]) - lp(&[(1, 2)]);
    assert_eq!(p.terms().count(), 1);
    assert_eq!(p.coeff(1), GaussRational::zero());
}

#[test]
fn conj_examples() {
    let iq = LaurentPoly::monomial(1, g(0, 1));
    assert_eq!(iq.conj(), LaurentPoly::monomial(1, g(0, -1)));
    let real = LaurentPoly::monomial(-1, GaussRational::ratio(3, 2));
    assert_eq!(real.conj(), real);
    let mixed = LaurentPoly::from_terms([(1, g(1, 1)), (0, g(2, 0))]);
    assert_eq!(mixed.conj(), LaurentPoly::from_terms([(1, g(1, -1)), (0, g(2, 0))]));
}

/// Coefficients of `(1 − ε)^(−n)` by repeated long division of the
/// truncated series by `1 − ε`: `c_k = c_{k−1} + a_k`.
fn inverse_power_oracle(n: u32, order: usize) -> Vec<BigRational> {
    let mut s = vec![BigRational::zero(); order + 1];
    s[0] = BigRational::one();
    for _ in 0..n {
        let mut next = vec![BigRational::zero(); order + 1];
        let mut acc = BigRational::zero();
        for k in 0..=order {
            acc += &s[k];
            next[k] = acc.clone();
        }
        s = next;
    }
    s
}

#[test]
fn long_division_oracle_for_q_minus_inverse() {
    let inv = inverse_power_oracle(1, 2);
    assert!(inv.iter().all(|c| c == &BigRational::one()), "geometric series");
    // q − q⁻¹ = (1 − ε) − Σ ε^m
    let expected: Vec<BigRational> = (0..=2)
        .map(|k| {
            let lin = match k {
                0 => BigRational::one(),
                1 => -BigRational::one(),
                _ => BigRational::zero(),
            };
            lin - &inv[k]
        })
        .collect();
    let got = lp(&[(1, 1), (-1, -1)]).expand_eps(2);
    for (k, e) in expected.iter().enumerate() {
        assert_eq!(got.coeff(k), GaussRational::real(e.clone()), "eps^{k}");
    }
    assert_eq!(got, series(&[0, -2, -1]));
}

#[test]
fn expand_small_examples() {
    assert_eq!(lp(&[(0, 1), (1, -1)]).expand_eps(1), series(&[0, 1]));
    assert_eq!(lp(&[(0, 1), (2, -1)]).expand_eps(2), series(&[0, 2, -1]));
    assert_eq!(lp(&[(1, 1)]).expand_eps(1), series(&[1, -1]));
}

#[test]
fn negative_powers_match_the_division_oracle() {
    for n in 1..=6u32 {
        let got = LaurentPoly::<GaussRational>::q_pow(-(n as i32)).expand_eps(8);
        let want = inverse_power_oracle(n, 8);
        for k in 0..=8 {
            assert_eq!(got.coeff(k), GaussRational::real(want[k].clone()), "q^-{n}, eps^{k}");
        }
    }
}

#[test]
fn eval_examples() {
    let one_minus_q2 = lp(&[(0, 1), (2, -1)]);
    assert!(one_minus_q2.eval(&g(1, 0)).unwrap().is_zero());
    let v = lp(&[(1, 1), (-1, -1)]).eval(&GaussRational::ratio(1, 2)).unwrap();
    assert_eq!(v, GaussRational::ratio(-3, 2));
    assert_eq!(lp(&[(-3, 1)]).eval(&GaussRational::zero()), Err(CoeffError::ZeroQ));
}

#[test]
fn exponent_overflow_is_reported() {
    let big = LaurentPoly::<GaussRational>::q_pow(i32::MAX);
    assert!(matches!(big.try_mul(&LaurentPoly::q_pow(1)), Err(CoeffError::ExponentOverflow)));
}

#[test]
fn canonical_rendering() {
    assert_eq!(lp(&[(1, 1), (-1, -1)]).to_string(), "-q^-1 + q");
    let c = LaurentPoly::from_terms([(2, GaussRational::new(rat(1, 2), rat(-3, 4)))]);
    assert_eq!(c.to_string(), "(1/2-3/4*i)*q^2");
    assert_eq!(Laurent::zero().to_string(), "0");
}

#[test]
fn scalar_is_generic_over_rationals() {
    let p: LaurentPoly<BigRational> = LaurentPoly::from_i64_terms(&[(0, 1), (1, -1)]);
    assert_eq!(p.eval(&rat(1, 4)).unwrap(), rat(3, 4));
    let f: LaurentPoly<f64> = LaurentPoly::from_i64_terms(&[(2, 1)]);
    assert_eq!(f.eval(&0.5).unwrap(), 0.25);
}

fn small_gauss() -> impl Strategy<Value = GaussRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| GaussRational::new(rat(a, b), rat(c, d)))
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i32..=4, small_gauss()), 0..5).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Laurent::one(), a.clone());
    }

    #[test]
    fn expansion_is_multiplicative(a in laurent(), b in laurent(), order in 0usize..6) {
        let lhs = (&a * &b).expand_eps(order);
        let rhs = &a.expand_eps(order) * &b.expand_eps(order);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_is_additive(a in laurent(), b in laurent(), order in 0usize..6) {
        prop_assert_eq!((&a + &b).expand_eps(order), &a.expand_eps(order) + &b.expand_eps(order));
    }

    #[test]
    fn conj_is_an_involutive_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn eval_agrees_with_truncated_series(a in laurent(), num in 85i64..=100) {
        let r = rat(num, 100);
        let exact = a.eval(&GaussRational::real(r.clone())).unwrap().to_c64();
        let eps = (BigRational::one() - &r).to_f64().unwrap();
        let s = a.expand_eps(40);
        let approx = s.coeffs().iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * eps + c.to_c64());
        // Remainder of (1 − ε)^(−4) past ε^40 at ε ≤ 0.15 is far below this.
        prop_assert!((exact - approx).norm() < 1e-9, "{} vs {}", exact, approx);
    }

    #[test]
    fn series_truncation_is_consistent(a in laurent(), lo in 0usize..4, extra in 0usize..4) {
        let hi = lo + extra;
        prop_assert_eq!(a.expand_eps(hi).truncate(lo), a.expand_eps(lo));
        prop_assert_eq!(a.expand_eps(hi).order(), hi);
    }
}
