use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qframes::coeff::LaurentPoly;
use qframes::ncalg::{Generator, Mode, NcPoly, RuleKind, Word};
use qframes::spinops::QSpinor;
use qframes::suq2::{
    braid_pair, braid_relations, check_confluence, make_system, random_word, rotate_spinor, self_braid_rules,
    CopyKind, EpsilonTensor, RMatrix, SystemError,
};
use qframes::{Laurent, Poly, System};

fn sys(n_spin: usize, n_sg: usize, rot: bool) -> System {
    make_system(n_spin, n_sg, rot).unwrap()
}

fn qp(n: i32) -> Laurent {
    LaurentPoly::q_pow(n)
}

fn lp(terms: &[(i32, i64)]) -> Laurent {
    LaurentPoly::from_i64_terms(terms)
}

/// Generator by rendered name, e.g. `g(&s, "c1*")`.
fn g(s: &System, name: &str) -> Poly {
    let (body, starred) = match name.strip_suffix('*') {
        Some(b) => (b, true),
        None => (name, false),
    };
    let letter = body.chars().next().unwrap();
    let index = body[1..].parse().unwrap();
    NcPoly::gen(s.generator(letter, index, starred).unwrap())
}

#[test]
fn copy_sequence_puts_rotation_last() {
    let s = sys(2, 3, true);
    let kinds: Vec<CopyKind> = s.copies().iter().map(|c| c.kind).collect();
    use CopyKind::*;
    assert_eq!(kinds, vec![Spin, Spin, SternGerlach, SternGerlach, SternGerlach, Rotation]);
    assert_eq!(s.sg_copy(1).unwrap(), 2);
    assert_eq!(s.rotation_copy(), Some(5));
    assert_eq!((s.n_spin(), s.n_sg()), (2, 3));
    assert_eq!(s.spin_copy(3), Err(SystemError::UnknownCopy { kind: "spin", index: 3 }));
    assert!(sys(1, 1, false).rotation_copy().is_none());
}

#[test]
fn generator_names_round_trip() {
    let s = sys(2, 2, true);
    for name in ["x1", "y2*", "a1", "c2*", "r1", "r2*"] {
        assert_eq!(s.render(&g(&s, name)), format!("1 * {name}"));
    }
    assert!(s.generator('r', 3, false).is_none());
    assert!(s.generator('z', 1, false).is_none());
}

#[test]
fn r_matrix_entries() {
    let r: RMatrix<qframes::GaussRational> = RMatrix::default();
    let z = Laurent::zero();
    // rows/cols in the order 00, 01, 10, 11
    let want = [
        [qp(1), z.clone(), z.clone(), z.clone()],
        [z.clone(), lp(&[(1, 1), (-1, -1)]), qp(0), z.clone()],
        [z.clone(), qp(0), z.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), qp(1)],
    ];
    for ab in 0..4 {
        for cd in 0..4 {
            assert_eq!(r.get(ab / 2, ab % 2, cd / 2, cd % 2), &want[ab][cd], "{ab} {cd}");
        }
    }
}

type M4 = [[Laurent; 4]; 4];
type M8 = Vec<Vec<Laurent>>;

fn r4() -> M4 {
    let r: RMatrix<qframes::GaussRational> = RMatrix::default();
    std::array::from_fn(|ab| std::array::from_fn(|cd| r.get(ab / 2, ab % 2, cd / 2, cd % 2).clone()))
}

fn mul8(a: &M8, b: &M8) -> M8 {
    (0..8)
        .map(|i| (0..8).map(|j| (0..8).fold(Laurent::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))).collect())
        .collect()
}

/// `R ⊗ 1` when `first`, otherwise `1 ⊗ R`, on three tensor factors.
fn embed(r: &M4, first: bool) -> M8 {
    let idx = |i: usize| ((i >> 2) & 1, (i >> 1) & 1, i & 1);
    (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let (a, b, c) = idx(i);
                    let (d, e, f) = idx(j);
                    if first {
                        if c == f { r[a * 2 + b][d * 2 + e].clone() } else { Laurent::zero() }
                    } else if a == d {
                        r[b * 2 + c][e * 2 + f].clone()
                    } else {
                        Laurent::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn r_matrix_satisfies_hecke_and_braid_relations() {
    // Stored in braid form: (R − q)(R + q⁻¹) = 0 and R₁₂R₂₃R₁₂ = R₂₃R₁₂R₂₃.
    let rc = r4();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Laurent::zero();
            for k in 0..4 {
                let mut left = rc[i][k].clone();
                if i == k {
                    left -= &qp(1);
                }
                let mut right = rc[k][j].clone();
                if k == j {
                    right += &qp(-1);
                }
                acc += &(&left * &right);
            }
            assert!(acc.is_zero(), "hecke {i} {j}: {acc}");
        }
    }
    let a = embed(&rc, true);
    let b = embed(&rc, false);
    assert_eq!(mul8(&mul8(&a, &b), &a), mul8(&mul8(&b, &a), &b));
}

#[test]
fn epsilon_raise_and_lower_are_inverse() {
    let s = sys(1, 0, false);
    let eps = EpsilonTensor::new();
    let v = [g(&s, "x1"), g(&s, "y1*")];
    assert_eq!(eps.lower(&eps.raise(&v)), v);
    assert_eq!(eps.raise(&eps.lower(&v)), v);
}

#[test]
fn unitarity_holds_in_normal_form() {
    let s = sys(1, 1, false);
    let (a, c) = (g(&s, "a1"), g(&s, "c1"));
    let one = NcPoly::one();
    let r1 = &(&(&a.star() * &a) + &(&c.star() * &c)) - &one;
    let r2 = &(&(&a * &a.star()) + &(&c * &c.star()).scale(&qp(2))) - &one;
    assert!(s.is_zero(&r1).unwrap());
    assert!(s.is_zero(&r2).unwrap());
}

#[test]
fn cross_relations_between_spin_and_sg() {
    let s = sys(1, 1, false);
    let (x, y, a, c) = (g(&s, "x1"), g(&s, "y1"), g(&s, "a1"), g(&s, "c1"));
    let d = lp(&[(1, 1), (-1, -1)]);
    let rels: Vec<Poly> = vec![
        &(&x * &a) - &(&a * &x),
        &(&(&x * &c).scale(&qp(1)) - &(&c * &x)) - &(&a * &y).scale(&d),
        &(&a * &y) - &(&y * &a).scale(&qp(1)),
        &(&y * &c) - &(&c * &y),
        &(&x * &c.star()) - &(&c.star() * &x).scale(&qp(1)),
        &(&(&x * &a.star()) - &(&a.star() * &x)) - &(&c.star() * &y).scale(&lp(&[(0, 1), (2, -1)])),
        &(&y * &c.star()) - &(&c.star() * &y),
        &(&y * &a.star()) - &(&a.star() * &y).scale(&qp(1)),
    ];
    for (k, r) in rels.iter().enumerate() {
        let n = s.normalize(r).unwrap();
        assert!(n.is_empty(), "relation {k}: {}", s.render(&n));
    }
    // The mirrored ordering is not a relation.
    let wrong = &(&y * &a) - &(&a * &y).scale(&qp(1));
    assert_eq!(s.render(&s.normalize(&wrong).unwrap()), "(q^-1 - q) * a1 y1");
}

#[test]
fn every_braid_relation_normalizes_to_zero() {
    let s = sys(2, 2, false);
    for i in 0..4u16 {
        for j in i + 1..4 {
            for (k, r) in braid_relations::<qframes::GaussRational>(i, j).iter().enumerate() {
                assert!(s.is_zero(r).unwrap(), "copies {i},{j} relation {k}");
            }
        }
    }
}

#[test]
fn self_braiding_reproduces_the_order_rules() {
    let s = sys(1, 0, false);
    let derived = self_braid_rules(&s, 0).unwrap();
    let order: Vec<_> = s.rules().iter().filter(|r| r.kind == RuleKind::Order).collect();
    assert_eq!(derived.len(), order.len());
    for r in order {
        assert_eq!(derived.get(&r.lhs_word()), Some(&r.rhs), "{}", r.render(&s));
    }
    assert_eq!(s.rules().iter().filter(|r| r.kind == RuleKind::Unitarity).count(), 1);
}

#[test]
fn rule_counts() {
    let s = sys(1, 1, false);
    assert_eq!(s.dump_rules().lines().count(), 7 + 7 + 16);
    let r = sys(1, 1, true);
    let spectators = r.rules().iter().filter(|x| x.kind == RuleKind::Spectator).count();
    assert_eq!(spectators, 2 * 16);
}

#[test]
fn rotated_spinors_keep_braiding() {
    let s = sys(1, 1, true);
    let u = QSpinor::ket(s.spin_copy(1).unwrap());
    let w = QSpinor::ket(s.sg_copy(1).unwrap());
    let (ru, rw) = (rotate_spinor(&u, &s).unwrap(), rotate_spinor(&w, &s).unwrap());
    for r in braid_pair(&ru, &rw, &s).unwrap() {
        assert!(r.is_empty(), "{}", s.render(&r));
    }
    // The rotated spinor of one copy still satisfies the single-copy relations.
    let [x, y] = &ru.components;
    assert!(s.is_zero(&(&(x * y) - &(y * x).scale(&qp(1)))).unwrap());
    assert!(s.is_zero(&(&(&x.star() * x) + &(&y.star() * y) - NcPoly::one())).unwrap());
    assert_eq!(rotate_spinor(&u, &sys(1, 1, false)), Err(SystemError::MissingRotation));
}

#[test]
fn rotation_commutes_with_apparatus_copies() {
    let s = sys(1, 1, true);
    for a in ["x1", "y1*", "a1", "c1*"] {
        for r in ["r1", "r2*"] {
            let (p, q) = (g(&s, a), g(&s, r));
            assert!(s.is_zero(&(&(&p * &q) - &(&q * &p))).unwrap(), "{a} {r}");
        }
    }
}

#[test]
fn confluence_report_on_two_apparatuses() {
    let s = sys(2, 2, true);
    let rep = check_confluence(&s, 300, 8, 11, Mode::TwoPhase).unwrap();
    assert_eq!(rep.mismatches, 0, "{:?}", rep.first_mismatch);
    assert!(rep.pass());
    let braided = check_confluence(&s, 300, 8, 11, Mode::BraidedOnly).unwrap();
    assert!(braided.pass());
}

#[test]
fn too_many_copies() {
    assert_eq!(make_system::<qframes::GaussRational>(20_000, 0, false).err(), Some(SystemError::TooManyCopies));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_are_irreducible_and_copy_sorted(seed in any::<u64>()) {
        let s = sys(2, 1, true);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&s, &mut rng, 7);
        let n = s.normalize(&NcPoly::word(w)).unwrap();
        for (word, _) in n.terms() {
            let l = word.letters();
            for p in l.windows(2) {
                prop_assert!(s.table().get(p[0], p[1]).is_none(), "redex left in {}", word.render(&s));
                prop_assert!(p[0].copy >= p[1].copy);
            }
        }
    }

    #[test]
    fn normalize_commutes_with_rotation_spectators(seed in any::<u64>()) {
        // Prepending a rotation letter only shifts it to the front.
        let s = sys(1, 1, true);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&sys(1, 1, false), &mut rng, 6);
        let r = Generator::alpha(s.rotation_copy().unwrap());
        let plain = s.normalize(&NcPoly::word(w.clone())).unwrap();
        let with_r = s.normalize(&NcPoly::word(Word::new(vec![r]).concat(&w))).unwrap();
        let shifted = &NcPoly::gen(r) * &plain;
        prop_assert_eq!(with_r, shifted);
    }
}
