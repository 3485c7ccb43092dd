use crate::graph::DenseSymMatrix;

const MAX_SWEEPS: usize = 100;
/// Relative off-diagonal Frobenius norm at which sweeping stops.
const OFF_DIAGONAL_TOL: f64 = 1e-14;

/// Eigenvalues in ascending order, optionally with orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Option<Vec<Vec<f64>>>,
}

impl EigenResult {
    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
pub fn dense_eigen_oracle(m: &DenseSymMatrix) -> EigenResult {
    let (values, vectors) = jacobi(m, true);
    EigenResult { values, vectors }
}

/// Eigenvalues only, ascending.
pub fn dense_eigenvalues(m: &DenseSymMatrix) -> Vec<f64> {
    jacobi(m, false).0
}

fn jacobi(m: &DenseSymMatrix, want_vectors: bool) -> (Vec<f64>, Option<Vec<Vec<f64>>>) {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let mut v = if want_vectors { DenseSymMatrix::identity(n).as_slice().to_vec() } else { Vec::new() };
    let norm = m.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= OFF_DIAGONAL_TOL * norm || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_p = c * arp - s * arq;
                    let new_q = s * arp + c * arq;
                    a[r * n + p] = new_p;
                    a[p * n + r] = new_p;
                    a[r * n + q] = new_q;
                    a[q * n + r] = new_q;
                }
                if want_vectors {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = c * vrp - s * vrq;
                        v[r * n + q] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = want_vectors
        .then(|| order.iter().map(|&col| (0..n).map(|r| v[r * n + col]).collect()).collect());
    (values, vectors)
}
