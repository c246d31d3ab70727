//! Small dense tensors over the exact scalar ring.
//!
//! Everything in the engine lives on a fixed three-dimensional basis, so
//! vectors, matrices and the two tensor ranks are plain fixed-size arrays.
//! Indices are 0-based in code and printed 1-based to match the usual
//! basis labels e1, e2, e3.

use crate::scalar::{Rational, Scalar};

pub const DIM: usize = 3;

pub type Vec3 = [Scalar; DIM];
pub type Mat3 = [[Scalar; DIM]; DIM];
pub type Ten3 = [[[Scalar; DIM]; DIM]; DIM];
pub type Ten4 = [[[[Scalar; DIM]; DIM]; DIM]; DIM];

pub fn vec3(mut f: impl FnMut(usize) -> Scalar) -> Vec3 {
    std::array::from_fn(|i| f(i))
}

pub fn mat3(mut f: impl FnMut(usize, usize) -> Scalar) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| f(i, j)))
}

pub fn ten3(mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Ten3 {
    std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| f(i, j, k))))
}

pub fn ten4(mut f: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Ten4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| std::array::from_fn(|k| std::array::from_fn(|l| f(i, j, k, l))))
    })
}

pub fn vec3_zero() -> Vec3 {
    vec3(|_| Scalar::zero())
}

pub fn mat3_zero() -> Mat3 {
    mat3(|_, _| Scalar::zero())
}

pub fn mat3_identity() -> Mat3 {
    mat3(|i, j| if i == j { Scalar::one() } else { Scalar::zero() })
}

/// Basis vector e_{i+1} (0-based index).
pub fn basis(i: usize) -> Vec3 {
    vec3(|k| if k == i { Scalar::one() } else { Scalar::zero() })
}

pub fn vec3_from_i64(v: [i64; DIM]) -> Vec3 {
    vec3(|i| Scalar::from_int(v[i]))
}

pub fn mat3_from_i64(m: [[i64; DIM]; DIM]) -> Mat3 {
    mat3(|i, j| Scalar::from_int(m[i][j]))
}

pub fn vec_add(a: &Vec3, b: &Vec3) -> Vec3 {
    vec3(|i| &a[i] + &b[i])
}

pub fn vec_sub(a: &Vec3, b: &Vec3) -> Vec3 {
    vec3(|i| &a[i] - &b[i])
}

pub fn vec_neg(a: &Vec3) -> Vec3 {
    vec3(|i| -&a[i])
}

pub fn vec_scale(c: &Scalar, a: &Vec3) -> Vec3 {
    vec3(|i| c * &a[i])
}

pub fn vec_is_zero(a: &Vec3) -> bool {
    a.iter().all(Scalar::is_zero)
}

pub fn mat_add(a: &Mat3, b: &Mat3) -> Mat3 {
    mat3(|i, j| &a[i][j] + &b[i][j])
}

pub fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    mat3(|i, j| &a[i][j] - &b[i][j])
}

pub fn mat_scale(c: &Scalar, a: &Mat3) -> Mat3 {
    mat3(|i, j| c * &a[i][j])
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    mat3(|i, j| {
        let mut acc = Scalar::zero();
        for k in 0..DIM {
            acc = &acc + &(&a[i][k] * &b[k][j]);
        }
        acc
    })
}

/// Matrix acting on a coordinate column vector.
pub fn mat_vec(a: &Mat3, v: &Vec3) -> Vec3 {
    vec3(|i| {
        let mut acc = Scalar::zero();
        for k in 0..DIM {
            acc = &acc + &(&a[i][k] * &v[k]);
        }
        acc
    })
}

pub fn transpose(a: &Mat3) -> Mat3 {
    mat3(|i, j| a[j][i].clone())
}

pub fn mat_is_zero(a: &Mat3) -> bool {
    a.iter().flatten().all(Scalar::is_zero)
}

pub fn mat_is_symmetric(a: &Mat3) -> bool {
    a[0][1] == a[1][0] && a[0][2] == a[2][0] && a[1][2] == a[2][1]
}

/// Bilinear form value g(v, w) = v^T g w.
pub fn bilinear(g: &Mat3, v: &Vec3, w: &Vec3) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            acc = &acc + &(&(&v[i] * &g[i][j]) * &w[j]);
        }
    }
    acc
}

pub fn det3(a: &Mat3) -> Scalar {
    let mut acc = Scalar::zero();
    // Permutation expansion of the 3x3 determinant.
    acc = &acc + &(&a[0][0] * &(&(&a[1][1] * &a[2][2]) - &(&a[1][2] * &a[2][1])));
    acc = &acc - &(&a[0][1] * &(&(&a[1][0] * &a[2][2]) - &(&a[1][2] * &a[2][0])));
    acc = &acc + &(&a[0][2] * &(&(&a[1][0] * &a[2][1]) - &(&a[1][1] * &a[2][0])));
    acc
}

/// Adjugate (transposed cofactor matrix), satisfying `a * adj(a) = det(a) I`.
pub fn adjugate3(a: &Mat3) -> Mat3 {
    let minor = |i: usize, j: usize| {
        let r: Vec<usize> = (0..DIM).filter(|&x| x != i).collect();
        let c: Vec<usize> = (0..DIM).filter(|&x| x != j).collect();
        &(&a[r[0]][c[0]] * &a[r[1]][c[1]]) - &(&a[r[0]][c[1]] * &a[r[1]][c[0]])
    };
    mat3(|i, j| {
        // adj[i][j] is the (j, i) cofactor.
        let m = minor(j, i);
        if (i + j) % 2 == 0 {
            m
        } else {
            -&m
        }
    })
}

/// 3x3 determinant of the matrix whose columns are `x`, `y`, `z`.
pub fn det_of_columns(x: &Vec3, y: &Vec3, z: &Vec3) -> Scalar {
    let cols = mat3(|i, j| [x, y, z][j][i].clone());
    det3(&cols)
}

pub fn vec_specialize(a: &Vec3, h: &Rational) -> Vec3 {
    vec3(|i| a[i].specialize(h))
}

pub fn mat_specialize(a: &Mat3, h: &Rational) -> Mat3 {
    mat3(|i, j| a[i][j].specialize(h))
}

pub fn ten3_specialize(a: &Ten3, h: &Rational) -> Ten3 {
    ten3(|i, j, k| a[i][j][k].specialize(h))
}

pub fn ten4_specialize(a: &Ten4, h: &Rational) -> Ten4 {
    ten4(|i, j, k, l| a[i][j][k][l].specialize(h))
}

/// Signature `(positive, negative, zero)` of a symmetric matrix with
/// constant rational entries, computed by exact congruence diagonalization.
/// `None` when some entry actually depends on h.
pub fn signature(a: &Mat3) -> Option<(usize, usize, usize)> {
    let mut m = [[Rational::zero(), Rational::zero(), Rational::zero()],
        [Rational::zero(), Rational::zero(), Rational::zero()],
        [Rational::zero(), Rational::zero(), Rational::zero()]];
    for i in 0..DIM {
        for j in 0..DIM {
            m[i][j] = a[i][j].as_constant()?;
        }
    }
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    for i in 0..DIM {
        if m[i][i].is_zero() {
            // Bring a nonzero entry onto the diagonal: prefer swapping in a
            // later nonzero diagonal, otherwise fold a nonzero off-diagonal
            // pair into the pivot via the basis change e_i += e_j.
            if let Some(j) = (i + 1..DIM).find(|&j| !m[j][j].is_zero()) {
                for k in 0..DIM {
                    let (a, b) = (m[i][k].clone(), m[j][k].clone());
                    m[i][k] = b;
                    m[j][k] = a;
                }
                for k in 0..DIM {
                    let (a, b) = (m[k][i].clone(), m[k][j].clone());
                    m[k][i] = b;
                    m[k][j] = a;
                }
            } else if let Some(j) = (i + 1..DIM).find(|&j| !m[i][j].is_zero()) {
                for k in 0..DIM {
                    m[i][k] = &m[i][k] + &m[j][k].clone();
                }
                for k in 0..DIM {
                    m[k][i] = &m[k][i] + &m[k][j].clone();
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let d = m[i][i].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for j in i + 1..DIM {
            let f = &m[i][j] / &d;
            for k in 0..DIM {
                m[j][k] = &m[j][k] - &(&f * &m[i][k]);
            }
            for k in 0..DIM {
                m[k][j] = &m[k][j] - &(&f * &m[k][i]);
            }
        }
    }
    Some((pos, neg, zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_adjugate() {
        let g = mat3_from_i64([[1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        assert_eq!(det3(&g), Scalar::from_int(-1));
        let adj = adjugate3(&g);
        let prod = mat_mul(&g, &adj);
        assert_eq!(prod, mat_scale(&Scalar::from_int(-1), &mat3_identity()));

        let m = mat3_from_i64([[2, 1, 0], [1, 3, 1], [0, 1, 1]]);
        let d = det3(&m);
        assert_eq!(mat_mul(&m, &adjugate3(&m)), mat_scale(&d, &mat3_identity()));
    }

    #[test]
    fn parametric_determinant() {
        let h = Scalar::h();
        let mut m = mat3_identity();
        m[2][2] = h.clone();
        assert_eq!(det3(&m), h);
    }

    #[test]
    fn signatures() {
        let g = mat3_from_i64([[1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        assert_eq!(signature(&g), Some((2, 1, 0)));
        // Off-diagonal hyperbolic block plus a positive direction.
        let gt = mat3_from_i64([[0, -1, 0], [-1, 0, 0], [0, 0, 1]]);
        assert_eq!(signature(&gt), Some((2, 1, 0)));
        let degenerate = mat3_from_i64([[1, 0, 0], [0, 0, 0], [0, 0, -1]]);
        assert_eq!(signature(&degenerate), Some((1, 1, 1)));
        let mut parametric = mat3_identity();
        parametric[0][0] = Scalar::h();
        assert_eq!(signature(&parametric), None);
    }

    #[test]
    fn column_determinant_detects_dependence() {
        let e1 = basis(0);
        let e2 = basis(1);
        let sum = vec_add(&e1, &e2);
        assert!(det_of_columns(&e1, &e2, &sum).is_zero());
        assert_eq!(det_of_columns(&e1, &e2, &basis(2)), Scalar::one());
    }
}
