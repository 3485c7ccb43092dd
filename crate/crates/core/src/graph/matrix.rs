use crate::error::{Error, Result};

/// A dense, fully stored real symmetric matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseSymMatrix { order, data: vec![0.0; order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged or non-symmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::Dimension { expected: order, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(order, data)
    }

    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::Dimension { expected: order * order, got: data.len() });
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if data[i * order + j] != data[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(DenseSymMatrix { order, data })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
    }

    #[inline]
    pub(crate) fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.order).map(<[f64]>::to_vec).collect()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.order, "vector length must equal matrix order");
        self.data
            .chunks(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `xᵀ M x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_row_sum(&self) -> f64 {
        self.data
            .chunks(self.order.max(1))
            .map(|row| row.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&v| v >= 0.0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| i == j || self.get(i, j) == 0.0))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        DenseSymMatrix { order: self.order, data: self.data.iter().map(|v| v * factor).collect() }
    }

    /// Entrywise sum; panics on mismatched orders.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "matrix orders differ");
        DenseSymMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.order, other.order, "matrix orders differ");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// The principal submatrix on `indices`, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        let mut m = Self::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_input() {
        let err = DenseSymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap_err();
        assert_eq!(err, Error::NotSymmetric { row: 0, col: 1 });
        assert!(DenseSymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0]]).is_err());
    }

    #[test]
    fn basic_algebra() {
        let m = DenseSymMatrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 3.0]]).unwrap();
        assert_eq!(m.trace(), 5.0);
        assert_eq!(m.max_row_sum(), 4.0);
        assert_eq!(m.mul_vec(&[1.0, 1.0]), vec![1.0, 2.0]);
        assert_eq!(m.quadratic_form(&[1.0, 1.0]), 3.0);
        assert!(!m.is_nonnegative());
        assert_eq!(m.add(&DenseSymMatrix::identity(2)).get(1, 1), 4.0);
        assert_eq!(m.principal_submatrix(&[1]).get(0, 0), 3.0);
    }
}
