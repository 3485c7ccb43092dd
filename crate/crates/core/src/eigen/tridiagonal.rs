use crate::error::{Error, Result};
use crate::graph::DenseSymMatrix;

/// Absolute bracket width at which bisection stops.
pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;

/// A real symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidArgument("tridiagonal matrix of order 0".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Dimension { expected: diag.len() - 1, got: offdiag.len() });
        }
        Ok(SymTridiagonal { diag, offdiag })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// The `j × j` leading principal submatrix, `1 ≤ j ≤ order`.
    pub fn leading(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.order() {
            return Err(Error::InvalidArgument(format!(
                "leading submatrix order {j} outside 1..={}",
                self.order()
            )));
        }
        Ok(SymTridiagonal { diag: self.diag[..j].to_vec(), offdiag: self.offdiag[..j - 1].to_vec() })
    }

    /// Interval `[lo, hi]` containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.order();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    pub fn to_dense(&self) -> DenseSymMatrix {
        let n = self.order();
        let mut m = DenseSymMatrix::zeros(n);
        for (i, &d) in self.diag.iter().enumerate() {
            m.set(i, i, d);
        }
        for (i, &e) in self.offdiag.iter().enumerate() {
            m.set_sym(i, i + 1, e);
        }
        m
    }
}

/// Number of eigenvalues of `t` strictly less than `lambda`.
///
/// Counts negative pivots in the LDLᵀ factorization of `T − λI`. A pivot that
/// vanishes is replaced by a tiny negative value.
pub fn sturm_count(t: &SymTridiagonal, lambda: f64) -> usize {
    let scale = t
        .diag
        .iter()
        .chain(&t.offdiag)
        .fold(lambda.abs(), |acc, v| acc.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let pivmin = f64::EPSILON * f64::EPSILON * scale.max(1.0);

    let mut count = 0;
    let mut q = t.diag[0] - lambda;
    if q.abs() < pivmin {
        q = -pivmin;
    }
    if q < 0.0 {
        count += 1;
    }
    for i in 1..t.order() {
        let e = t.offdiag[i - 1];
        q = (t.diag[i] - lambda) - e * e / q;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of `t` in nondecreasing order, each bracketed by bisection
/// until the bracket is no wider than `tol`.
pub fn tridiagonal_eigenvalues(t: &SymTridiagonal, tol: f64) -> Vec<f64> {
    assert!(tol > 0.0, "bisection tolerance must be positive");
    let n = t.order();
    let (glo, ghi) = t.gershgorin();
    let pad = f64::EPSILON * glo.abs().max(ghi.abs()).max(1.0);
    let (glo, ghi) = (glo - pad, ghi + pad);

    let mut values = Vec::with_capacity(n);
    let mut lower = glo;
    for i in 0..n {
        // λ_i is the smallest x with count(x) > i, so it lies in (lo, hi].
        let mut lo = lower;
        let mut hi = ghi;
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if sturm_count(t, mid) > i {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let value = 0.5 * (lo + hi);
        values.push(value);
        lower = lo;
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_k13_t2() -> SymTridiagonal {
        SymTridiagonal::new(vec![0.0, 0.0], vec![3f64.sqrt()]).unwrap()
    }

    #[test]
    fn sturm_count_outside_gershgorin() {
        let t = SymTridiagonal::new(vec![1.0, 2.0, 3.0], vec![0.5, 0.7]).unwrap();
        let (lo, hi) = t.gershgorin();
        assert_eq!(sturm_count(&t, lo - 1e-9), 0);
        assert_eq!(sturm_count(&t, hi + 1e-9), 3);
    }

    #[test]
    fn sturm_count_at_zero_for_sqrt3_pair() {
        // eigenvalues ±√3
        assert_eq!(sturm_count(&star_k13_t2(), 0.0), 1);
        assert_eq!(sturm_count(&star_k13_t2(), -1.8), 0);
        assert_eq!(sturm_count(&star_k13_t2(), 1.8), 2);
    }

    #[test]
    fn order_one() {
        let t = SymTridiagonal::new(vec![0.37], vec![]).unwrap();
        let v = tridiagonal_eigenvalues(&t, 1e-13);
        assert_eq!(v.len(), 1);
        assert!((v[0] - 0.37).abs() < 1e-13);
    }

    #[test]
    fn quadratic_roots() {
        let v = tridiagonal_eigenvalues(&star_k13_t2(), DEFAULT_BISECTION_TOL);
        assert!((v[0] + 3f64.sqrt()).abs() < 1e-12);
        assert!((v[1] - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_coupling_gives_sorted_diagonal() {
        let t = SymTridiagonal::new(vec![3.0, -1.0, 2.0, 2.0], vec![0.0, 0.0, 0.0]).unwrap();
        let v = tridiagonal_eigenvalues(&t, DEFAULT_BISECTION_TOL);
        for (got, want) in v.iter().zip([-1.0, 2.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn path_adjacency_eigenvalues() {
        // A(P_n) has eigenvalues 2cos(πi/(n+1))
        let n = 12;
        let t = SymTridiagonal::new(vec![0.0; n], vec![1.0; n - 1]).unwrap();
        let v = tridiagonal_eigenvalues(&t, DEFAULT_BISECTION_TOL);
        for (i, got) in v.iter().enumerate() {
            let want = 2.0 * (std::f64::consts::PI * (n - i) as f64 / (n + 1) as f64).cos();
            assert!((got - want).abs() < 1e-11);
        }
        assert!(v.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn leading_submatrix_bounds() {
        let t = star_k13_t2();
        assert!(t.leading(0).is_err());
        assert!(t.leading(3).is_err());
        assert_eq!(t.leading(1).unwrap().diag(), &[0.0]);
        assert!(SymTridiagonal::new(vec![1.0], vec![1.0]).is_err());
    }
}
