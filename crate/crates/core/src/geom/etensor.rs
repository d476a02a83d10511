use num_traits::Float;

use super::rotation::RotationMatrix;

/// `E[i][j][k][l]`.
pub type ETensor<T> = [[[[T; 3]; 3]; 3]; 3];

/// Levi-Civita symbol with `ε_{012} = +1`.
pub fn levi_civita(a: usize, b: usize, c: usize) -> i32 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn eps<T: Float>(a: usize, b: usize, c: usize) -> T {
    T::from(levi_civita(a, b, c)).unwrap_or_else(T::zero)
}

/// `E_{ijkl} = ε_{ikm}(R_{jm} + R_{lm}) − ε_{ajl}(R_{ak} + R_{ai})`.
pub fn e_tensor<T: Float>(r: &RotationMatrix<T>) -> ETensor<T> {
    let mut e = [[[[T::zero(); 3]; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let mut v = T::zero();
                    for m in 0..3 {
                        v = v + eps::<T>(i, k, m) * (r.get(j, m) + r.get(l, m));
                        v = v - eps::<T>(m, j, l) * (r.get(m, k) + r.get(m, i));
                    }
                    e[i][j][k][l] = v;
                }
            }
        }
    }
    e
}

/// The same tensor before contracting `ε_{jbc} R_{bi} R_{ck} = ε_{ikm} R_{jm}`,
/// i.e. `(j + l)·(n_i × n_k) − (n_i + n_k)·(j × l)`. Agrees with
/// [`e_tensor`] only on SO(3).
pub fn e_tensor_pre<T: Float>(r: &RotationMatrix<T>) -> ETensor<T> {
    let mut e = [[[[T::zero(); 3]; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let mut v = T::zero();
                    for b in 0..3 {
                        for c in 0..3 {
                            let rr = r.get(b, i) * r.get(c, k);
                            v = v + (eps::<T>(j, b, c) + eps::<T>(l, b, c)) * rr;
                        }
                        v = v - eps::<T>(b, j, l) * (r.get(b, i) + r.get(b, k));
                    }
                    e[i][j][k][l] = v;
                }
            }
        }
    }
    e
}

pub fn max_abs_e<T: Float>(e: &ETensor<T>) -> (T, [usize; 4]) {
    let mut best = (T::neg_infinity(), [0; 4]);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let v = e[i][j][k][l].abs();
                    if v > best.0 {
                        best = (v, [i, j, k, l]);
                    }
                }
            }
        }
    }
    best
}

/// The three combinations that vanish only if rows 0 and 2 of `R` agree,
/// paired with their closed forms:
/// `E_{1020} − E_{0100} = 2(R_00 − R_20)`,
/// `E_{0020} − E_{1011} = −2(R_01 − R_21)`,
/// `E_{0010} − E_{2120} = 2(R_02 − R_22)`.
pub fn identity_combinations<T: Float>(r: &RotationMatrix<T>, e: &ETensor<T>) -> [(T, T); 3] {
    let two = T::one() + T::one();
    [
        (e[1][0][2][0] - e[0][1][0][0], two * (r.get(0, 0) - r.get(2, 0))),
        (e[0][0][2][0] - e[1][0][1][1], -two * (r.get(0, 1) - r.get(2, 1))),
        (e[0][0][1][0] - e[2][1][2][0], two * (r.get(0, 2) - r.get(2, 2))),
    ]
}
