#![allow(dead_code)]

use alpha_spectra::{DenseSymMatrix, GeneralizedBetheSpec};

/// `(sign, ln|det|)` of a square matrix by LU with partial pivoting.
pub fn lu_log_det(rows: &[Vec<f64>]) -> (i8, f64) {
    let n = rows.len();
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut sign = 1i8;
    let mut log = 0.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("nonempty range");
        if a[pivot][col] == 0.0 {
            return (0, f64::NEG_INFINITY);
        }
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        let p = a[col][col];
        if p < 0.0 {
            sign = -sign;
        }
        log += p.abs().ln();
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            let f = row[col] / p;
            if f != 0.0 {
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * y;
                }
            }
        }
    }
    (sign, log)
}

/// `λI − M` as rows.
pub fn shifted_negation(m: &DenseSymMatrix, lambda: f64) -> Vec<Vec<f64>> {
    let n = m.order();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { lambda - m.get(i, j) } else { -m.get(i, j) }).collect())
        .collect()
}

/// Every generalized Bethe degree sequence whose tree has at most `max_order`
/// vertices, root degree at least 2.
pub fn specs_up_to(max_order: usize) -> Vec<GeneralizedBetheSpec> {
    fn grow(top_down: &mut Vec<usize>, count: usize, used: usize, max_order: usize, out: &mut Vec<GeneralizedBetheSpec>) {
        let mut degrees: Vec<usize> = top_down.iter().rev().copied().collect();
        degrees.insert(0, 1);
        if let Ok(spec) = GeneralizedBetheSpec::from_degrees(&degrees) {
            assert_eq!(spec.order(), used);
            out.push(spec);
        }
        let mut ratio = 1;
        while used + count * ratio <= max_order {
            top_down.push(ratio + 1);
            grow(top_down, count * ratio, used + count * ratio, max_order, out);
            top_down.pop();
            ratio += 1;
        }
    }
    let mut out = Vec::new();
    for root in 2..max_order {
        let mut top_down = vec![root];
        grow(&mut top_down, root, 1 + root, max_order, &mut out);
    }
    out
}

pub fn max_abs_deviation(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
