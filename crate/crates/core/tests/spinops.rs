use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use qframes::coeff::LaurentPoly;
use qframes::geom::{angles_to_direction, direction_components};
use qframes::ncalg::{CopyId, NcPoly};
use qframes::spinops::{
    bar_spinor, classical_eval, commutator, first_order_rhs, lower_spinor, parse_golden, pauli_expr, prob_op,
    projector, projector_expr, verify_all_orders, verify_covariance, verify_first_order, verify_properties,
    Assignment, OperatorMatrix, Outcome, SpinError, Variance, ALL_ORDERS_COMMUTATOR,
};
use qframes::suq2::{make_system, EpsilonTensor};
use qframes::{Poly, Spinor, System};

fn sys(n_spin: usize, n_sg: usize, rot: bool) -> System {
    make_system(n_spin, n_sg, rot).unwrap()
}

fn one() -> BigRational {
    BigRational::one()
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Classical spinor `(cos θ/2, sin θ/2 e^{iω})`.
fn spinor_values(theta: f64, omega: f64) -> (Complex64, Complex64) {
    (Complex64::new((theta / 2.0).cos(), 0.0), Complex64::from_polar((theta / 2.0).sin(), omega))
}

fn assign(a: &mut Assignment, copy: CopyId, theta: f64, omega: f64) {
    let (x, y) = spinor_values(theta, omega);
    a.set_copy(copy, x, y);
}

fn eval(p: &Poly, a: &Assignment, q: &BigRational, s: &System) -> Complex64 {
    classical_eval(p, a, q, s).unwrap()
}

#[test]
fn bar_spinor_components() {
    let s = sys(0, 1, false);
    let eps = EpsilonTensor::new();
    let w = Spinor::ket(0);
    let bar = bar_spinor(&w.dagger(), &eps).unwrap();
    assert_eq!(bar.variance, Variance::KetBar);
    assert_eq!(s.render(&bar.components[0]), "-q * c1*");
    assert_eq!(s.render(&bar.components[1]), "1 * a1*");
    assert_eq!(lower_spinor(&bar, &eps).unwrap(), w.dagger());
    assert_eq!(
        bar_spinor(&w, &eps),
        Err(SpinError::VarianceMismatch { expected: Variance::Bra, got: Variance::Ket })
    );
}

#[test]
fn dagger_is_an_involution() {
    let w = Spinor::ket(3);
    assert_eq!(w.dagger().dagger(), w);
    assert_eq!(Spinor::bra(3), w.dagger());
}

#[test]
fn projector_up_corner() {
    let s = sys(1, 1, false);
    let p = projector(1, Outcome::Up, &s).unwrap();
    assert_eq!(s.render(&p.entries[0][0]), "1 - q^2 * c1 c1*");
    assert_eq!(s.render(&p.entries[1][1]), "1 * c1 c1*");
    let raw = projector_expr(1, Outcome::Up, &s).unwrap();
    assert_eq!(s.render(&raw.entries[0][1]), "1 * a1 c1*");
}

#[test]
fn projectors_are_idempotent_in_normal_form() {
    let s = sys(0, 1, false);
    for o in [Outcome::Up, Outcome::Down] {
        let p = projector_expr(1, o, &s).unwrap();
        let sq = p.matmul(&p).normalize(&s).unwrap();
        assert_eq!(sq, p.normalize(&s).unwrap(), "{o:?}");
    }
    let up = projector_expr(1, Outcome::Up, &s).unwrap();
    let down = projector_expr(1, Outcome::Down, &s).unwrap();
    assert!(up.matmul(&down).normalize(&s).unwrap().is_zero());
}

#[test]
fn probability_down_is_the_complement() {
    let s = sys(1, 1, false);
    let up = prob_op(1, Outcome::Up, &s).unwrap();
    let down = prob_op(1, Outcome::Down, &s).unwrap();
    assert_eq!(&up.value + &down.value, NcPoly::one());
    assert_eq!(prob_op(2, Outcome::Up, &s).err(), Some(SpinError::System(qframes::suq2::SystemError::UnknownCopy { kind: "spin", index: 2 })));
}

#[test]
fn properties_and_covariance_pass() {
    let s = sys(2, 2, false);
    for i in 1..=2 {
        let r = verify_properties(i, &s).unwrap();
        assert!(r.pass(), "{r:?}");
    }
    let sr = sys(2, 2, true);
    for i in 1..=2 {
        let r = verify_covariance(i, &sr).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}

#[test]
fn first_order_agreement() {
    let s = sys(2, 2, false);
    for (i, j) in [(1, 2), (2, 1)] {
        let r = verify_first_order(i, j, &s, 2).unwrap();
        assert!(r.eps0_zero && r.eps1_zero, "{r:?}");
        assert_eq!(r.first_nonzero_order, Some(2));
        assert!(r.commutator_eps1_terms > 0, "the commutator itself starts at ε¹");
    }
    assert_eq!(verify_first_order(1, 1, &s, 2).err(), Some(SpinError::SameApparatus));
}

#[test]
fn commutator_is_antisymmetric() {
    let s = sys(2, 2, false);
    let p1 = prob_op(1, Outcome::Up, &s).unwrap();
    let p2 = prob_op(2, Outcome::Up, &s).unwrap();
    let c12 = commutator(&p1, &p2, &s).unwrap();
    let c21 = commutator(&p2, &p1, &s).unwrap();
    assert_eq!(c12, -&c21);
    assert!(commutator(&p1, &p1, &s).unwrap().is_empty());
}

#[test]
fn transcription_parses() {
    let s = sys(2, 2, false);
    let g = parse_golden(ALL_ORDERS_COMMUTATOR, 1, 2, &s).unwrap();
    assert!(g.terms > 10);
    assert_eq!(g.prefactor, LaurentPoly::from_i64_terms(&[(-3, 1), (-1, -1)]));
    assert!(matches!(parse_golden::<qframes::GaussRational>("* x_i", 1, 2, &s), Err(SpinError::Golden { line: 1, .. })));
    let r = verify_all_orders(1, 2, ALL_ORDERS_COMMUTATOR, &s, 2).unwrap();
    assert_eq!(r.pass(), r.residual_terms == 0);
    assert_eq!(r.transcribed_terms, g.terms);
}

#[test]
fn incomplete_assignment_is_reported() {
    let s = sys(1, 1, false);
    let p = prob_op(1, Outcome::Up, &s).unwrap();
    let mut a = Assignment::new();
    assign(&mut a, 0, 0.3, 0.1);
    assert_eq!(classical_eval(&p.value, &a, &one(), &s), Err(SpinError::IncompleteAssignment("c1".into())));
}

/// `[[m_z, m_x − i m_y], [m_x + i m_y, −m_z]]`
fn pauli_oracle(theta: f64, omega: f64) -> [[Complex64; 2]; 2] {
    let m = angles_to_direction(theta, omega).unwrap();
    let c = |re, im| Complex64::new(re, im);
    [[c(m.z, 0.0), c(m.x, -m.y)], [c(m.x, m.y), c(-m.z, 0.0)]]
}

fn angle() -> impl Strategy<Value = (f64, f64)> {
    (0.0..PI, 0.0..2.0 * PI)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn born_rule_at_q_one((t1, w1) in angle(), (t2, w2) in angle()) {
        let s = sys(1, 1, false);
        let mut a = Assignment::new();
        assign(&mut a, 0, t1, w1);
        assign(&mut a, 1, t2, w2);
        let n = angles_to_direction(t1, w1).unwrap();
        let m = angles_to_direction(t2, w2).unwrap();
        let born = (1.0 + n.dot(&m)) / 2.0;
        let p = prob_op(1, Outcome::Up, &s).unwrap();
        for e in [&p.raw, &p.value] {
            let v = eval(e, &a, &one(), &s);
            prop_assert!((v - Complex64::new(born, 0.0)).norm() < 1e-12, "{} vs {}", v, born);
        }
    }

    #[test]
    fn direction_operators_evaluate_to_unit_vectors((t, w) in angle()) {
        let s = sys(1, 0, false);
        let mut a = Assignment::new();
        assign(&mut a, 0, t, w);
        let want = angles_to_direction(t, w).unwrap().as_array();
        for (k, c) in direction_components::<qframes::GaussRational>(0).iter().enumerate() {
            let v = eval(c, &a, &one(), &s);
            prop_assert!((v - Complex64::new(want[k], 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn pauli_is_the_direction_matrix_at_q_one((t, w) in angle()) {
        let s = sys(0, 1, false);
        let mut a = Assignment::new();
        assign(&mut a, 0, t, w);
        let sigma: OperatorMatrix<qframes::GaussRational> = pauli_expr(1, &s).unwrap();
        let want = pauli_oracle(t, w);
        for r in 0..2 {
            for c in 0..2 {
                let v = eval(&sigma.entries[r][c], &a, &one(), &s);
                prop_assert!((v - want[r][c]).norm() < 1e-12, "({},{}) {} vs {}", r, c, v, want[r][c]);
            }
        }
    }

    #[test]
    fn first_order_formula_matches_numeric_vectors(
        (t1, w1) in angle(), (t2, w2) in angle(), (t3, w3) in angle(), (t4, w4) in angle()
    ) {
        let s = sys(2, 2, false);
        let mut a = Assignment::new();
        assign(&mut a, 0, t1, w1);
        assign(&mut a, 1, t2, w2);
        assign(&mut a, 2, t3, w3);
        assign(&mut a, 3, t4, w4);
        let d = |t, w| angles_to_direction(t, w).unwrap();
        let (n1, n2, m1, m2) = (d(t1, w1), d(t2, w2), d(t3, w3), d(t4, w4));
        let bracket = (m1 + m2).dot(&n1.cross(&n2)) - (n1 + n2).dot(&m1.cross(&m2));
        // (i/2)(1 − q) at q = 1/2
        let want = Complex64::new(0.0, 0.25 * bracket);
        let rhs = first_order_rhs(1, 2, &s).unwrap();
        let v = eval(&rhs, &a, &half(), &s);
        prop_assert!((v - want).norm() < 1e-12, "{} vs {}", v, want);
    }
}
