//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use super::hamiltonian::SectorHamiltonian;

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition with eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// Row-major `dim × dim`; column `k` is the eigenvector of `values[k]`.
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

impl Eigen {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> Vec<f64> {
        let n = self.dim();
        (0..n).map(|i| self.vectors[i * n + k]).collect()
    }

    /// `‖H x_k - λ_k x_k‖` for eigenpair `k`.
    pub fn residual(&self, matrix: &[f64], k: usize) -> f64 {
        let n = self.dim();
        let x = self.vector(k);
        (0..n)
            .map(|i| {
                let hx: f64 = (0..n).map(|j| matrix[i * n + j] * x[j]).sum();
                (hx - self.values[k] * x[i]).powi(2)
            })
            .sum::<f64>()
            .sqrt()
    }
}

pub fn diagonalize(h: &SectorHamiltonian) -> Eigen {
    diagonalize_matrix(&h.matrix, h.dim())
}

/// Diagonalizes the symmetric row-major matrix `m` of size `n × n`. Only the
/// upper triangle is read.
pub fn diagonalize_matrix(m: &[f64], n: usize) -> Eigen {
    assert_eq!(m.len(), n * n, "matrix length must be n²");
    let mut a = m.to_vec();
    for i in 0..n {
        for j in 0..i {
            a[i * n + j] = a[j * n + i];
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * frob * 1e-2 || off == 0.0 {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                // Below this size a rotation no longer changes the diagonal.
                if apq.abs() <= 1e-3 * f64::EPSILON * (app.abs() + aqq.abs()) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[k * n + new] = v[k * n + old];
        }
    }
    Eigen {
        values,
        vectors,
        sweeps,
    }
}

/// Applies `A ← Jᵀ A J` for the rotation in the (p, q) plane that zeroes
/// `A_pq`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..n {
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p * n + k], a[q * n + k]);
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::DMatrix;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_symmetric(n: usize, rng: &mut StdRng) -> Vec<f64> {
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x: f64 = rng.random_range(-1.0..1.0);
                m[i * n + j] = x;
                m[j * n + i] = x;
            }
        }
        m
    }

    #[test]
    fn two_by_two() {
        let e = diagonalize_matrix(&[1.5, 0.1, 0.1, 1.5], 2);
        assert_relative_eq!(e.values[0], 1.4, max_relative = 1e-15);
        assert_relative_eq!(e.values[1], 1.6, max_relative = 1e-15);
        assert_relative_eq!(e.vector(0)[0].abs(), 0.5f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn diagonal_input() {
        let e = diagonalize_matrix(&[3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0], 3);
        assert_eq!(e.values, vec![-1.0, 2.0, 3.0]);
        assert_eq!(e.sweeps, 0);
    }

    #[test]
    fn matches_nalgebra_and_is_orthonormal() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in [1, 3, 8, 25, 60] {
            let m = random_symmetric(n, &mut rng);
            let e = diagonalize_matrix(&m, n);
            let reference = DMatrix::from_row_slice(n, n, &m).symmetric_eigen();
            let mut expected: Vec<f64> = reference.eigenvalues.iter().copied().collect();
            expected.sort_by(f64::total_cmp);
            for (x, y) in e.values.iter().zip(&expected) {
                assert!((x - y).abs() < 1e-12, "{x} vs {y}");
            }
            for k in 0..n {
                assert!(e.residual(&m, k) < 1e-12);
                for l in 0..n {
                    let dot: f64 = e.vector(k).iter().zip(e.vector(l)).map(|(a, b)| a * b).sum();
                    let target = if k == l { 1.0 } else { 0.0 };
                    assert!((dot - target).abs() < 1e-12);
                }
            }
            let trace: f64 = (0..n).map(|i| m[i * n + i]).sum();
            assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-12 * n as f64);
        }
    }
}
