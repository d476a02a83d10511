use num_rational::BigRational;
use num_traits::{Float, One, ToPrimitive, Zero};
use serde::Serialize;

use super::direction::DirectionVector;
use super::rotation::RotationMatrix;
use super::GeomError;

/// Right-hand side of an uncertainty relation: exact rational prefactor
/// times a floating vector part.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub indices: Option<[usize; 4]>,
    pub q: String,
    pub prefactor: String,
    #[serde(skip)]
    pub prefactor_exact: BigRational,
    pub vector_part: f64,
    pub bound: f64,
    pub inputs: Vec<[f64; 3]>,
}

fn check_q(q: &BigRational) -> Result<(), GeomError> {
    if q <= &BigRational::zero() || q > &BigRational::one() {
        return Err(GeomError::InvalidQ(q.to_string()));
    }
    Ok(())
}

fn f<T: Float>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

fn report<T: Float>(
    indices: Option<[usize; 4]>,
    q: &BigRational,
    prefactor: BigRational,
    vector_part: T,
    inputs: &[DirectionVector<T>],
) -> BoundReport {
    let vp = f(vector_part);
    BoundReport {
        indices,
        q: q.to_string(),
        prefactor: prefactor.to_string(),
        bound: prefactor.to_f64().unwrap_or(f64::NAN) * vp,
        prefactor_exact: prefactor,
        vector_part: vp,
        inputs: inputs.iter().map(|d| d.as_array().map(f)).collect(),
    }
}

/// `(1 − q)/4 · |(m_i + m_j)·(n_i × n_j) − (n_i + n_j)·(m_i × m_j)|`.
pub fn bound_probabilities<T: Float>(
    n_i: DirectionVector<T>,
    m_i: DirectionVector<T>,
    n_j: DirectionVector<T>,
    m_j: DirectionVector<T>,
    q: &BigRational,
) -> Result<BoundReport, GeomError> {
    check_q(q)?;
    for d in [&n_i, &m_i, &n_j, &m_j] {
        d.check_unit()?;
    }
    let v = (m_i + m_j).dot(&n_i.cross(&n_j)) - (n_i + n_j).dot(&m_i.cross(&m_j));
    let pref = (BigRational::one() - q) / BigRational::from_integer(4.into());
    Ok(report(None, q, pref, v.abs(), &[n_i, m_i, n_j, m_j]))
}

/// `(1 − q) |(j + l)·(n_i × n_k) − (n_i + n_k)·(j × l)|` with `n_i`, `n_k`
/// the columns of `R` and `j`, `l` Cartesian axes.
pub fn bound_rotation_elements<T: Float>(
    r: &RotationMatrix<T>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    q: &BigRational,
) -> Result<BoundReport, GeomError> {
    check_q(q)?;
    let r = RotationMatrix::new(*r.rows())?;
    for a in [i, j, k, l] {
        if a > 2 {
            return Err(GeomError::BadAxis(a));
        }
    }
    let (n_i, n_k) = (r.column(i), r.column(k));
    let (ej, el) = (DirectionVector::axis(j)?, DirectionVector::axis(l)?);
    let v = (ej + el).dot(&n_i.cross(&n_k)) - (n_i + n_k).dot(&ej.cross(&el));
    let pref = BigRational::one() - q;
    Ok(report(Some([i, j, k, l]), q, pref, v.abs(), &[n_i, n_k, ej, el]))
}
