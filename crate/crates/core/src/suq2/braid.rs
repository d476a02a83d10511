use std::collections::BTreeMap;

use crate::coeff::{LaurentPoly, Scalar};
use crate::ncalg::{CopyId, Generator, Measure, NcError, NcPoly, Word};
use crate::spinops::{QSpinor, Variance};

use super::orient::orient;
use super::system::RelationSystem;
use super::tensors::{EpsilonTensor, RMatrix};
use super::SystemError;

type Pair<C> = [NcPoly<C>; 2];

/// `w̄^α`: star the ket components into a bra, then raise the index.
fn bar_of<C: Scalar>(w: &Pair<C>, eps: &EpsilonTensor<C>) -> Pair<C> {
    eps.raise(&[w[0].star(), w[1].star()])
}

/// The eight unnormalized expressions
/// `u^α w^β − q⁻¹ R^{αβ}_{γδ} w^γ u^δ` and `u^α w̄^β − R^{αβ}_{γδ} w̄^γ u^δ`.
fn raw_residuals<C: Scalar>(u: &Pair<C>, w: &Pair<C>) -> Vec<NcPoly<C>> {
    let eps = EpsilonTensor::new();
    let r = RMatrix::new(&eps);
    let wb = bar_of(w, &eps);
    let qinv = LaurentPoly::q_pow(-1);
    let mut out = Vec::with_capacity(8);
    for (v, scale) in [(w, qinv), (&wb, LaurentPoly::one())] {
        for a in 0..2 {
            for b in 0..2 {
                let mut e = &u[a] * &v[b];
                for c in 0..2 {
                    for d in 0..2 {
                        let k = r.get(a, b, c, d);
                        if k.is_zero() {
                            continue;
                        }
                        e = &e - &(&v[c] * &u[d]).scale(&(k * &scale));
                    }
                }
                out.push(e);
            }
        }
    }
    out
}

fn native<C: Scalar>(k: CopyId) -> Pair<C> {
    [NcPoly::gen(Generator::alpha(k)), NcPoly::gen(Generator::gamma(k))]
}

/// Braiding relations between an earlier copy `i` and a later copy `j`,
/// together with their star images. Each entry is an expression that must
/// vanish.
pub fn braid_relations<C: Scalar>(i: CopyId, j: CopyId) -> Vec<NcPoly<C>> {
    let base = raw_residuals(&native::<C>(i), &native::<C>(j));
    let stars: Vec<_> = base.iter().map(|p| p.star()).collect();
    base.into_iter().chain(stars).collect()
}

/// Orients the braiding relations of a copy with itself. The result is
/// compared against the registered intra-copy rules.
pub fn self_braid_rules<C: Scalar>(
    sys: &RelationSystem<C>,
    copy: CopyId,
) -> Result<BTreeMap<Word, NcPoly<C>>, SystemError> {
    let relations = braid_relations::<C>(copy, copy);
    let x = Generator::alpha(copy);
    let y = Generator::gamma(copy);
    let w = |a: Generator, b: Generator| Word::new(vec![a, b]);
    let expected = [
        w(x, y),
        w(x, y.star()),
        w(x.star(), y),
        w(x.star(), y.star()),
        w(y.star(), y),
        w(x.star(), x),
    ];
    orient(&relations, |w| Measure::of(w).2 > 0, &expected, sys)
}

/// Normalized braid residuals for two ket spinors; all zero iff the pair
/// satisfies the braiding relations.
pub fn braid_pair<C: Scalar>(
    u: &QSpinor<C>,
    w: &QSpinor<C>,
    sys: &RelationSystem<C>,
) -> Result<Vec<NcPoly<C>>, NcError> {
    raw_residuals(&u.components, &w.components)
        .iter()
        .map(|e| sys.normalize(e))
        .collect()
}

/// `U_r s` with `U_r = [[r_α, −q r_γ*], [r_γ, r_α*]]` drawn from the
/// rotation copy.
pub fn rotate_spinor<C: Scalar>(s: &QSpinor<C>, sys: &RelationSystem<C>) -> Result<QSpinor<C>, SystemError> {
    let r = sys.rotation_copy().ok_or(SystemError::MissingRotation)?;
    let ra = NcPoly::gen(Generator::alpha(r));
    let rc = NcPoly::gen(Generator::gamma(r));
    let ras = ra.star();
    let rcs = rc.star().scale(&-LaurentPoly::q_pow(1));
    let [s0, s1] = &s.components;
    let c0 = &(&ra * s0) + &(&rcs * s1);
    let c1 = &(&rc * s0) + &(&ras * s1);
    Ok(QSpinor { components: [c0, c1], copy: s.copy, variance: Variance::Ket })
}
