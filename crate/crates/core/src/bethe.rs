//! Generalized Bethe trees and the level-polynomial reduction of their
//! `A_α`-spectra.
//!
//! A generalized Bethe tree on `k` levels is a rooted tree in which all
//! vertices at the same depth share one degree. Levels are indexed from the
//! leaves: level 1 holds the `n_1` leaves (degree `d_1 = 1`) and level `k` is
//! the root (`n_k = 1`). With `m_j = n_j / n_{j+1}` the branching ratio below
//! level `j + 1`, the characteristic polynomial of `A_α` factors as
//!
//! ```text
//! φ(λ) = P_k(λ) · ∏_{j<k} P_j(λ)^(n_j − n_{j+1})
//! P_0 = 1,  P_1 = λ − α,  P_j = (λ − α·d_j)·P_{j−1} − β²·m_{j−1}·P_{j−2}
//! ```
//!
//! and `P_j` is the characteristic polynomial of the `j × j` leading block of a
//! `k × k` symmetric tridiagonal matrix with diagonal `α·d_j` and codiagonal
//! `β·√m_j`. The full spectrum is therefore the union of `k` small tridiagonal
//! spectra weighted by `n_j − n_{j+1}` (and 1 for the root level).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::eigen::{tridiagonal_eigenvalues, SymTridiagonal, DEFAULT_BISECTION_TOL};
use crate::error::{Error, Result};
use crate::graph::{AlphaParam, Graph};
use crate::spectrum::Spectrum;

/// Orders up to this size evaluate `φ` as a plain product.
const PLAIN_PRODUCT_MAX_ORDER: usize = 64;

/// Level degrees `(d_1, …, d_k)` of a generalized Bethe tree, leaves first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedBetheSpec {
    degrees: Vec<usize>,
    counts: Vec<usize>,
}

impl GeneralizedBetheSpec {
    /// Requires `k ≥ 2`, `d_1 = 1` and `d_j ≥ 2` for `j ≥ 2`.
    pub fn from_degrees(degrees: &[usize]) -> Result<Self> {
        let k = degrees.len();
        if k < 2 {
            return Err(Error::InvalidDegreeSequence(format!(
                "need at least two levels, got {k}"
            )));
        }
        if degrees[0] != 1 {
            return Err(Error::InvalidDegreeSequence(format!(
                "leaf degree must be 1, got {}",
                degrees[0]
            )));
        }
        if let Some((j, &d)) = degrees.iter().enumerate().skip(1).find(|(_, &d)| d < 2) {
            return Err(Error::InvalidDegreeSequence(format!(
                "level {} has degree {d}; inner levels need degree >= 2",
                j + 1
            )));
        }

        // n_k = 1, n_{k-1} = d_k, n_j = (d_{j+1} - 1)·n_{j+1}
        let mut counts = vec![0usize; k];
        counts[k - 1] = 1;
        counts[k - 2] = degrees[k - 1];
        for j in (0..k - 2).rev() {
            counts[j] = (degrees[j + 1] - 1).checked_mul(counts[j + 1]).ok_or_else(|| {
                Error::InvalidDegreeSequence("level counts overflow".into())
            })?;
        }
        counts.iter().try_fold(0usize, |acc, &c| acc.checked_add(c)).ok_or_else(|| {
            Error::InvalidDegreeSequence("tree order overflows".into())
        })?;
        Ok(GeneralizedBetheSpec { degrees: degrees.to_vec(), counts })
    }

    /// The Bethe tree `B(d, k)`: root degree `d`, inner degree `d + 1`.
    pub fn bethe(d: usize, k: usize) -> Result<Self> {
        if d < 2 || k < 2 {
            return Err(Error::InvalidArgument(format!(
                "Bethe tree needs d >= 2 and k >= 2, got d={d}, k={k}"
            )));
        }
        let mut degrees = vec![d + 1; k];
        degrees[0] = 1;
        degrees[k - 1] = d;
        Self::from_degrees(&degrees)
    }

    /// Number of levels `k`.
    pub fn levels(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `(n_1, …, n_k)`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `(m_1, …, m_{k−1})` with `m_j = n_j / n_{j+1}`.
    pub fn ratios(&self) -> Vec<usize> {
        self.counts.windows(2).map(|w| w[0] / w[1]).collect()
    }

    /// Total number of vertices `N = Σ n_j`.
    pub fn order(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Multiplicity weight of level `j` (1-based): `n_j − n_{j+1}`, or 1 at the root.
    pub fn level_weight(&self, j: usize) -> usize {
        let k = self.levels();
        if j == k {
            1
        } else {
            self.counts[j - 1] - self.counts[j]
        }
    }

    /// Builds the tree with leaves numbered first and the root last; within a
    /// level vertices run left to right, and vertex `t` of level `j` hangs off
    /// vertex `t / m_j` of level `j + 1`.
    pub fn build_tree(&self) -> Graph {
        let k = self.levels();
        let ratios = self.ratios();
        let mut starts = Vec::with_capacity(k);
        let mut offset = 0;
        for &c in &self.counts {
            starts.push(offset);
            offset += c;
        }
        let mut edges = Vec::with_capacity(offset - 1);
        for j in 0..k - 1 {
            for t in 0..self.counts[j] {
                edges.push((starts[j] + t, starts[j + 1] + t / ratios[j]));
            }
        }
        Graph::new(offset, edges).expect("Bethe construction yields a simple graph")
    }

    /// The `k × k` tridiagonal with diagonal `α·d_j` and codiagonal `β·√m_j`.
    pub fn full_tridiagonal(&self, a: AlphaParam) -> SymTridiagonal {
        let diag = self.degrees.iter().map(|&d| a.alpha() * d as f64).collect();
        let offdiag = self.ratios().iter().map(|&m| a.beta() * (m as f64).sqrt()).collect();
        SymTridiagonal::new(diag, offdiag).expect("k >= 2 levels")
    }

    /// `T_j`, the `j × j` leading block of [`full_tridiagonal`](Self::full_tridiagonal).
    pub fn tridiagonal(&self, a: AlphaParam, j: usize) -> Result<SymTridiagonal> {
        if j == 0 || j > self.levels() {
            return Err(Error::InvalidArgument(format!(
                "level {j} outside 1..={}",
                self.levels()
            )));
        }
        self.full_tridiagonal(a).leading(j)
    }

    /// `P_0(λ), …, P_k(λ)`.
    pub fn level_polynomials(&self, a: AlphaParam, lambda: f64) -> Vec<f64> {
        let k = self.levels();
        let ratios = self.ratios();
        let beta2 = a.beta() * a.beta();
        let mut p = Vec::with_capacity(k + 1);
        p.push(1.0);
        p.push(lambda - a.alpha());
        for j in 2..=k {
            let next = (lambda - a.alpha() * self.degrees[j - 1] as f64) * p[j - 1]
                - beta2 * ratios[j - 2] as f64 * p[j - 2];
            p.push(next);
        }
        p
    }

    /// `P_j(λ)` for `0 ≤ j ≤ k`.
    pub fn eval_p(&self, a: AlphaParam, j: usize, lambda: f64) -> Result<f64> {
        if j > self.levels() {
            return Err(Error::InvalidArgument(format!(
                "polynomial index {j} outside 0..={}",
                self.levels()
            )));
        }
        Ok(self.level_polynomials(a, lambda)[j])
    }

    /// `det(λI − A_α(B_k))` in sign / log-magnitude form.
    pub fn char_poly_log(&self, a: AlphaParam, lambda: f64) -> SignedLog {
        let p = self.level_polynomials(a, lambda);
        p.iter()
            .enumerate()
            .skip(1)
            .fold(SignedLog::ONE, |acc, (j, &value)| acc.mul_pow(value, self.level_weight(j)))
    }

    /// `det(λI − A_α(B_k))`. Plain product for `N ≤ 64`; otherwise
    /// accumulated in log form and exponentiated, so it may be infinite.
    pub fn char_poly_eval(&self, a: AlphaParam, lambda: f64) -> f64 {
        if self.order() > PLAIN_PRODUCT_MAX_ORDER {
            return self.char_poly_log(a, lambda).value();
        }
        let p = self.level_polynomials(a, lambda);
        (1..=self.levels())
            .map(|j| p[j].powi(self.level_weight(j) as i32))
            .product()
    }

    /// Full `A_α`-spectrum via the reduction.
    pub fn spectrum(&self, a: AlphaParam) -> Spectrum {
        self.spectrum_detailed(a).spectrum
    }

    /// The spectrum plus the per-level pieces it was assembled from.
    pub fn spectrum_detailed(&self, a: AlphaParam) -> BetheSpectrum {
        self.spectrum_detailed_with_tol(a, DEFAULT_BISECTION_TOL)
    }

    /// As [`Self::spectrum_detailed`] with bisection tolerance `tol > 0`.
    pub fn spectrum_detailed_with_tol(&self, a: AlphaParam, tol: f64) -> BetheSpectrum {
        let full = self.full_tridiagonal(a);
        let levels: Vec<LevelSpectrum> = (1..=self.levels())
            .into_par_iter()
            .map(|j| {
                let t = full.leading(j).expect("1 <= j <= k");
                LevelSpectrum {
                    level: j,
                    weight: self.level_weight(j),
                    eigenvalues: tridiagonal_eigenvalues(&t, tol),
                }
            })
            .collect();
        let weighted = levels
            .iter()
            .flat_map(|l| l.eigenvalues.iter().map(move |&v| (v, l.weight)))
            .collect();
        let (spectrum, merges) = Spectrum::consolidate(weighted);
        BetheSpectrum { spectrum, merges, levels }
    }
}

impl fmt::Display for GeneralizedBetheSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for GeneralizedBetheSpec {
    type Err = Error;

    /// Parses a comma-separated degree list such as `1,3,3,4,3`.
    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| {
                    Error::InvalidDegreeSequence(format!("`{}`: {e}", t.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_degrees(&degrees)
    }
}

/// Eigenvalues of one `T_j` and the multiplicity they carry.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSpectrum {
    pub level: usize,
    pub weight: usize,
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BetheSpectrum {
    pub spectrum: Spectrum,
    /// Number of eigenvalues absorbed into a nearby eigenvalue from another level.
    pub merges: usize,
    pub levels: Vec<LevelSpectrum>,
}

impl BetheSpectrum {
    /// Σ weight × |Spec(T_j)| over all levels, before consolidation.
    pub fn raw_multiplicity(&self) -> usize {
        self.levels.iter().map(|l| l.weight * l.eigenvalues.len()).sum()
    }
}

/// A real number stored as `sign · exp(ln_abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    /// −1, 0 or 1.
    pub sign: i8,
    pub ln_abs: f64,
}

impl SignedLog {
    pub const ONE: SignedLog = SignedLog { sign: 1, ln_abs: 0.0 };
    pub const ZERO: SignedLog = SignedLog { sign: 0, ln_abs: f64::NEG_INFINITY };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            SignedLog { sign: if x > 0.0 { 1 } else { -1 }, ln_abs: x.abs().ln() }
        }
    }

    /// `self · x^power`.
    pub fn mul_pow(self, x: f64, power: usize) -> Self {
        if power == 0 {
            return self;
        }
        let f = Self::from_f64(x);
        if self.sign == 0 || f.sign == 0 {
            return Self::ZERO;
        }
        let sign = if f.sign < 0 && power % 2 == 1 { -self.sign } else { self.sign };
        SignedLog { sign, ln_abs: self.ln_abs + power as f64 * f.ln_abs }
    }

    pub fn value(self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(x: f64) -> AlphaParam {
        AlphaParam::new(x).unwrap()
    }

    #[test]
    fn level_counts_of_sample_trees() {
        let s = GeneralizedBetheSpec::from_degrees(&[1, 3, 3, 4, 3]).unwrap();
        assert_eq!(s.counts(), &[36, 18, 9, 3, 1]);
        assert_eq!(s.order(), 67);
        assert_eq!(s.ratios(), vec![2, 2, 3, 3]);

        let b = GeneralizedBetheSpec::from_degrees(&[1, 4, 4, 3]).unwrap();
        assert_eq!(b.counts(), &[27, 9, 3, 1]);
        assert_eq!(b.order(), 40);
    }

    #[test]
    fn two_levels_is_a_star() {
        for d in 2..7 {
            let s = GeneralizedBetheSpec::from_degrees(&[1, d]).unwrap();
            assert_eq!(s.counts(), &[d, 1]);
            let g = s.build_tree();
            assert!(g.is_star());
            assert_eq!(g.degree(d), d);
        }
    }

    #[test]
    fn invalid_degree_sequences() {
        for bad in [&[2, 3][..], &[1, 1, 3], &[1], &[], &[1, 3, 0]] {
            assert!(matches!(
                GeneralizedBetheSpec::from_degrees(bad),
                Err(Error::InvalidDegreeSequence(_))
            ));
        }
        assert!(GeneralizedBetheSpec::from_str("1,x").is_err());
    }

    #[test]
    fn bethe_degrees() {
        let b = GeneralizedBetheSpec::bethe(3, 4).unwrap();
        assert_eq!(b.degrees(), &[1, 4, 4, 3]);
        assert_eq!(b.order(), 40);
        let p3 = GeneralizedBetheSpec::bethe(2, 2).unwrap().build_tree();
        assert!(p3.is_path() && p3.order() == 3);
        assert!(GeneralizedBetheSpec::bethe(1, 3).is_err());
        assert!(GeneralizedBetheSpec::bethe(3, 1).is_err());
    }

    #[test]
    fn leaves_first_labeling() {
        let s: GeneralizedBetheSpec = "1,3,3,4,3".parse().unwrap();
        assert_eq!(s.to_string(), "1,3,3,4,3");
        let g = s.build_tree();
        assert_eq!(g.order(), 67);
        assert!(g.is_tree());
        assert_eq!(g.degree(66), 3);
        assert!((0..36).all(|v| g.degree(v) == 1));
        // in 1-based labels: 1,2 → 37; 55,56,57 → 64; 64,65,66 → 67
        assert!(g.has_edge(0, 36) && g.has_edge(1, 36));
        assert!(g.has_edge(54, 63) && g.has_edge(56, 63));
        assert!(g.has_edge(63, 66) && g.has_edge(65, 66));
    }

    #[test]
    fn degree_histogram_matches_levels() {
        for degrees in [&[1, 3, 3, 4, 3][..], &[1, 2, 3, 2], &[1, 5, 2, 2, 4]] {
            let s = GeneralizedBetheSpec::from_degrees(degrees).unwrap();
            let g = s.build_tree();
            let mut hist = std::collections::BTreeMap::new();
            for v in 0..g.order() {
                *hist.entry(g.degree(v)).or_insert(0usize) += 1;
            }
            let mut want = std::collections::BTreeMap::new();
            for (d, n) in s.degrees().iter().zip(s.counts()) {
                *want.entry(*d).or_insert(0usize) += n;
            }
            assert_eq!(hist, want);
        }
    }

    #[test]
    fn tridiagonal_entries() {
        let b = GeneralizedBetheSpec::bethe(3, 5).unwrap();
        let a = alpha(0.3);
        let t = b.tridiagonal(a, 5).unwrap();
        let r3 = 3f64.sqrt();
        assert_eq!(t.diag(), &[0.3, 0.3 * 4.0, 0.3 * 4.0, 0.3 * 4.0, 0.3 * 3.0]);
        assert!(t.offdiag().iter().all(|&e| (e - 0.7 * r3).abs() < 1e-15));
        assert_eq!(b.tridiagonal(a, 1).unwrap().diag(), &[0.3]);
        assert!(b.tridiagonal(a, 0).is_err());
        assert!(b.tridiagonal(a, 6).is_err());

        // root coupling uses √d_k, inner couplings √(d_{j+1} − 1)
        let g = GeneralizedBetheSpec::from_degrees(&[1, 3, 3, 4, 3]).unwrap();
        let t = g.tridiagonal(AlphaParam::ZERO, 5).unwrap();
        let want = [2f64.sqrt(), 2f64.sqrt(), 3f64.sqrt(), 3f64.sqrt()];
        for (e, w) in t.offdiag().iter().zip(want) {
            assert!((e - w).abs() < 1e-15);
        }
    }

    #[test]
    fn low_order_polynomials() {
        let s = GeneralizedBetheSpec::from_degrees(&[1, 3, 3, 4, 3]).unwrap();
        let a = alpha(0.4);
        for lambda in [-2.0, 0.1, 1.7] {
            assert_eq!(s.eval_p(a, 0, lambda).unwrap(), 1.0);
            assert_eq!(s.eval_p(a, 1, lambda).unwrap(), lambda - 0.4);
            let want = (lambda - 0.4 * 3.0) * (lambda - 0.4) - 0.36 * 2.0;
            assert!((s.eval_p(a, 2, lambda).unwrap() - want).abs() < 1e-14);
        }
        assert!(s.eval_p(a, 6, 0.0).is_err());
    }

    #[test]
    fn three_vertex_path_char_poly() {
        // (λ² − 2)·λ
        let s = GeneralizedBetheSpec::from_degrees(&[1, 2]).unwrap();
        for lambda in [-1.3, 0.0, 0.5, 2.2] {
            let got = s.char_poly_eval(AlphaParam::ZERO, lambda);
            assert!((got - (lambda * lambda - 2.0) * lambda).abs() < 1e-13);
        }
    }

    #[test]
    fn char_poly_positive_right_of_spectrum() {
        let s = GeneralizedBetheSpec::from_degrees(&[1, 3, 3, 4, 3]).unwrap();
        let a = alpha(0.6);
        let bound = s.build_tree().alpha_matrix(a).max_row_sum();
        let v = s.char_poly_log(a, bound + 0.01);
        assert_eq!(v.sign, 1);
        assert!(s.char_poly_eval(a, bound + 0.01) > 0.0);
    }

    #[test]
    fn char_poly_vanishes_on_reduction_eigenvalues() {
        let s = GeneralizedBetheSpec::from_degrees(&[1, 2, 3, 2]).unwrap();
        let a = alpha(0.25);
        for (lambda, _) in s.spectrum(a).pairs() {
            let p = s.char_poly_eval(a, *lambda);
            assert!(p.abs() < 1e-8, "φ({lambda}) = {p}");
        }
    }

    #[test]
    fn star_k13_spectrum() {
        let s = GeneralizedBetheSpec::from_degrees(&[1, 3]).unwrap();
        let spec = s.spectrum(AlphaParam::ZERO);
        let r3 = 3f64.sqrt();
        let pairs = spec.pairs();
        assert_eq!(pairs.len(), 3);
        assert!((pairs[0].0 + r3).abs() < 1e-12 && pairs[0].1 == 1);
        assert!(pairs[1].0.abs() < 1e-12 && pairs[1].1 == 2);
        assert!((pairs[2].0 - r3).abs() < 1e-12 && pairs[2].1 == 1);
    }

    #[test]
    fn alpha_one_gives_degree_multiset() {
        let s = GeneralizedBetheSpec::from_degrees(&[1, 3, 3, 4, 3]).unwrap();
        let spec = s.spectrum(AlphaParam::ONE);
        let got: Vec<(i64, usize)> =
            spec.pairs().iter().map(|&(v, m)| (v.round() as i64, m)).collect();
        assert_eq!(got, vec![(1, 36), (3, 28), (4, 3)]);
        assert!(spec.pairs().iter().all(|&(v, _)| (v - v.round()).abs() < 1e-12));
    }

    #[test]
    fn bookkeeping_and_top_level() {
        for degrees in [&[1, 3, 3, 4, 3][..], &[1, 2, 3, 2], &[1, 4, 4, 3]] {
            let s = GeneralizedBetheSpec::from_degrees(degrees).unwrap();
            for x in [0.0, 0.3, 0.75] {
                let d = s.spectrum_detailed(alpha(x));
                assert_eq!(d.raw_multiplicity(), s.order());
                assert_eq!(d.spectrum.total_multiplicity(), s.order());
                let top = d.levels.last().unwrap().eigenvalues.last().copied().unwrap();
                for l in &d.levels {
                    assert!(l.eigenvalues.iter().all(|&v| v <= top + 1e-12));
                }
                assert!((d.spectrum.max().unwrap() - top).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn signed_log_arithmetic() {
        let v = SignedLog::ONE.mul_pow(-2.0, 3).mul_pow(0.5, 2);
        assert_eq!(v.sign, -1);
        assert!((v.value() + 2.0).abs() < 1e-14);
        assert_eq!(SignedLog::ONE.mul_pow(0.0, 2), SignedLog::ZERO);
        assert_eq!(SignedLog::ONE.mul_pow(0.0, 0), SignedLog::ONE);
    }
}
