use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qframes::geom::{
    angles_to_direction, bound_probabilities, bound_rotation_elements, classical_protocol, e_tensor, e_tensor_pre,
    identity_combinations, levi_civita, max_abs_e, no_sharp_rotation_check, row_equality_derivation,
    sample_rotation, sample_seed, sweep, DirectionVector, GeomError, RotationMatrix, NO_SHARP_FLOOR,
};
use qframes::{Direction, Rotation};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn axis(k: usize) -> Direction {
    DirectionVector::axis(k).unwrap()
}

type V3 = [f64; 3];

fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn unit(k: usize) -> V3 {
    let mut v = [0.0; 3];
    v[k] = 1.0;
    v
}

fn col(r: &Rotation, i: usize) -> V3 {
    [r.get(0, i), r.get(1, i), r.get(2, i)]
}

/// `(e_j + e_l)·(c_i × c_k) − (c_i + c_k)·(e_j × e_l)` from plain arrays.
fn e_oracle(r: &Rotation, i: usize, j: usize, k: usize, l: usize) -> f64 {
    let (ci, ck) = (col(r, i), col(r, k));
    dot(add(unit(j), unit(l)), cross(ci, ck)) - dot(add(ci, ck), cross(unit(j), unit(l)))
}

#[test]
fn levi_civita_values() {
    assert_eq!(levi_civita(0, 1, 2), 1);
    assert_eq!(levi_civita(2, 1, 0), -1);
    assert_eq!(levi_civita(0, 0, 2), 0);
    let total: i32 = (0..27).map(|n| levi_civita(n / 9, (n / 3) % 3, n % 3).abs()).sum();
    assert_eq!(total, 6);
}

#[test]
fn rotation_validation() {
    assert!(RotationMatrix::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]).is_err());
    assert!(matches!(
        RotationMatrix::new([[1.0, 0.1, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]),
        Err(GeomError::NotRotation { .. })
    ));
    let t: f64 = 0.7;
    let r = RotationMatrix::from_quaternion([(t / 2.0).cos(), 0.0, 0.0, (t / 2.0).sin()]);
    let want = [[t.cos(), -t.sin(), 0.0], [t.sin(), t.cos(), 0.0], [0.0, 0.0, 1.0]];
    for a in 0..3 {
        for b in 0..3 {
            assert!((r.get(a, b) - want[a][b]).abs() < 1e-15);
        }
    }
}

#[test]
fn direction_input_errors() {
    assert_eq!(DirectionVector::<f64>::axis(3), Err(GeomError::BadAxis(3)));
    assert!(matches!(angles_to_direction(4.0, 0.0), Err(GeomError::AngleOutOfRange { name: "theta", .. })));
    assert!(matches!(angles_to_direction(1.0, -0.1), Err(GeomError::AngleOutOfRange { name: "omega", .. })));
    assert!(matches!(DirectionVector::new(1.0, 1.0, 0.0).check_unit(), Err(GeomError::NonUnit(_))));
}

#[test]
fn probability_bound_example() {
    // n_i = x, n_j = y, m_i = m_j = z: bracket = 2·(z·z) = 2.
    let r = bound_probabilities(axis(0), axis(2), axis(1), axis(2), &rat(1, 2)).unwrap();
    assert_eq!(r.prefactor, "1/8");
    assert_eq!(r.vector_part, 2.0);
    assert_eq!(r.bound, 0.25);
    let zero = bound_probabilities(axis(0), axis(0), axis(0), axis(0), &rat(1, 2)).unwrap();
    assert_eq!(zero.bound, 0.0);
    let q1 = bound_probabilities(axis(0), axis(2), axis(1), axis(2), &rat(1, 1)).unwrap();
    assert_eq!(q1.bound, 0.0);
}

#[test]
fn bound_rejects_bad_q_and_vectors() {
    for q in [rat(0, 1), rat(3, 2), rat(-1, 2)] {
        assert_eq!(
            bound_probabilities(axis(0), axis(0), axis(1), axis(1), &q).err(),
            Some(GeomError::InvalidQ(q.to_string()))
        );
    }
    let bad = DirectionVector::new(0.0, 0.0, 2.0);
    assert_eq!(
        bound_probabilities(axis(0), bad, axis(1), axis(1), &rat(1, 2)).err(),
        Some(GeomError::NonUnit(2.0))
    );
    assert_eq!(
        bound_rotation_elements(&Rotation::identity(), 0, 3, 0, 0, &rat(1, 2)).err(),
        Some(GeomError::BadAxis(3))
    );
}

#[test]
fn identity_rotation_e_tensor() {
    let r = Rotation::identity();
    let e = e_tensor(&r);
    assert_eq!(max_abs_e(&e).0, 2.0);
    for n in 0..81 {
        let (i, j, k, l) = (n / 27, (n / 9) % 3, (n / 3) % 3, n % 3);
        assert_eq!(e[i][j][k][l], e_oracle(&r, i, j, k, l), "{i}{j}{k}{l}");
    }
    // E_0212 = 2 e_2·(e_0 × e_1) = 2, so the aligned bound at q = 1/2 is 1.
    let b = bound_rotation_elements(&r, 0, 2, 1, 2, &rat(1, 2)).unwrap();
    assert_eq!(b.bound, 1.0);
}

#[test]
fn row_equality_is_derived_symbolically() {
    let rep = row_equality_derivation();
    assert!(rep.pass(), "{rep:?}");
    assert_eq!(rep.forced.len(), 3);
}

#[test]
fn no_sharp_rotation_on_the_default_sample() {
    let rep = no_sharp_rotation_check(1000, 7).unwrap();
    assert!(rep.pass());
    assert_eq!(rep.identity_max_e, 2.0);
    assert!(rep.min_max_e >= (2.0f64 / 3.0).sqrt());
    assert!(rep.min_max_e > NO_SHARP_FLOOR);
    assert_eq!(no_sharp_rotation_check(0, 7).err(), Some(GeomError::NoSamples));
}

#[test]
fn sweep_is_deterministic_and_consistent() {
    let q = rat(9, 10);
    let a = sweep(50, 3, &q).unwrap();
    let b = sweep(50, 3, &q).unwrap();
    assert_eq!(a, b);
    for row in &a {
        assert_eq!(row.seed, sample_seed(3, row.sample));
        let r = sample_rotation(3, row.sample);
        let want = e_oracle(&r, row.i, row.j, row.k, row.l).abs();
        assert!((row.max_e - want).abs() < 1e-12);
        assert!((row.bound - 0.1 * row.max_e).abs() < 1e-12);
    }
    assert_ne!(sample_seed(3, 0), sample_seed(3, 1));
    assert_eq!(sweep(0, 3, &q).err(), Some(GeomError::NoSamples));
}

#[test]
fn generic_over_float_width() {
    let r = sample_rotation(7, 4);
    let e64 = e_tensor(&r);
    let e32 = e_tensor(&r.cast::<f32>());
    for n in 0..81 {
        let (i, j, k, l) = (n / 27, (n / 9) % 3, (n / 3) % 3, n % 3);
        assert!((e64[i][j][k][l] - e32[i][j][k][l] as f64).abs() < 1e-5);
    }
}

fn rotation() -> impl Strategy<Value = Rotation> {
    prop::array::uniform4(-1.0f64..1.0)
        .prop_filter("nonzero quaternion", |q| q.iter().map(|v| v * v).sum::<f64>() > 1e-3)
        .prop_map(RotationMatrix::from_quaternion)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn e_tensor_matches_the_vector_form(r in rotation()) {
        let e = e_tensor(&r);
        let pre = e_tensor_pre(&r);
        for n in 0..81 {
            let (i, j, k, l) = (n / 27, (n / 9) % 3, (n / 3) % 3, n % 3);
            let want = e_oracle(&r, i, j, k, l);
            prop_assert!((e[i][j][k][l] - want).abs() < 1e-12);
            prop_assert!((pre[i][j][k][l] - want).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_combinations_hold(r in rotation()) {
        for (lhs, rhs) in identity_combinations(&r, &e_tensor(&r)) {
            prop_assert!((lhs - rhs).abs() <= 1e-10);
        }
    }

    #[test]
    fn max_e_is_bounded_below(r in rotation()) {
        // Rows 0 and 2 are orthonormal, so some |R_0m − R_2m| ≥ sqrt(2/3).
        let (m, _) = max_abs_e(&e_tensor(&r));
        prop_assert!(m >= (2.0f64 / 3.0).sqrt() - 1e-12);
    }

    #[test]
    fn protocol_round_trip(r in rotation()) {
        let table = classical_protocol(&r);
        for row in table.p {
            for p in row {
                prop_assert!((0.0..=1.0).contains(&p));
            }
        }
        let back = table.to_rotation().unwrap();
        for a in 0..3 {
            for b in 0..3 {
                prop_assert!((back.get(a, b) - r.get(a, b)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn probability_bound_matches_oracle(
        t in prop::array::uniform4(0.0f64..std::f64::consts::PI),
        w in prop::array::uniform4(0.0f64..(2.0 * std::f64::consts::PI)),
        qn in 1i64..=100,
    ) {
        let d: Vec<Direction> = (0..4).map(|k| angles_to_direction(t[k], w[k]).unwrap()).collect();
        let q = rat(qn, 100);
        let rep = bound_probabilities(d[0], d[1], d[2], d[3], &q).unwrap();
        let a = |k: usize| d[k].as_array();
        let v = dot(add(a(1), a(3)), cross(a(0), a(2))) - dot(add(a(0), a(2)), cross(a(1), a(3)));
        let want = (1.0 - qn as f64 / 100.0) / 4.0 * v.abs();
        prop_assert!((rep.bound - want).abs() < 1e-12);
    }

    #[test]
    fn rotation_bound_is_scaled_e(r in rotation(), idx in prop::array::uniform4(0usize..3)) {
        let [i, j, k, l] = idx;
        let rep = bound_rotation_elements(&r, i, j, k, l, &rat(3, 4)).unwrap();
        let e = e_tensor(&r)[i][j][k][l];
        prop_assert!((rep.bound - 0.25 * e.abs()).abs() < 1e-12);
    }
}
