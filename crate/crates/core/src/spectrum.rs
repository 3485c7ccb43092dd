//! Consolidated spectra: strictly increasing eigenvalues with multiplicities.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::format::round_sig;

/// Relative merge tolerance: `|λ − μ| ≤ MERGE_TOL · max(1, |λ|, |μ|)`.
pub const MERGE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    lambda: f64,
    mult: usize,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= MERGE_TOL * a.abs().max(b.abs()).max(1.0)
}

impl Spectrum {
    /// Consolidates weighted eigenvalues, also returning how many input values
    /// were absorbed into an existing cluster. Zero weights are dropped; merged
    /// clusters are represented by their weighted mean.
    pub fn consolidate(mut values: Vec<(f64, usize)>) -> (Spectrum, usize) {
        values.retain(|&(_, w)| w > 0);
        values.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut pairs: Vec<(f64, usize)> = Vec::with_capacity(values.len());
        let mut sums: Vec<f64> = Vec::with_capacity(values.len());
        let mut merges = 0;
        for (lambda, w) in values {
            match pairs.last_mut() {
                Some(last) if close(last.0, lambda) => {
                    let sum = sums.last_mut().unwrap();
                    *sum += lambda * w as f64;
                    last.1 += w;
                    last.0 = *sum / last.1 as f64;
                    merges += 1;
                }
                _ => {
                    pairs.push((lambda, w));
                    sums.push(lambda * w as f64);
                }
            }
        }
        (Spectrum { pairs }, merges)
    }

    pub fn from_weighted(values: Vec<(f64, usize)>) -> Spectrum {
        Self::consolidate(values).0
    }

    /// Consolidates a list of eigenvalues, each with multiplicity one.
    pub fn from_eigenvalues(values: &[f64]) -> Spectrum {
        Self::from_weighted(values.iter().map(|&v| (v, 1)).collect())
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn max(&self) -> Option<f64> {
        self.pairs.last().map(|p| p.0)
    }

    pub fn min(&self) -> Option<f64> {
        self.pairs.first().map(|p| p.0)
    }

    /// Eigenvalues repeated by multiplicity, ascending.
    pub fn expand(&self) -> Vec<f64> {
        self.pairs.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect()
    }

    /// Values rounded to the serialization precision.
    pub fn rounded(&self) -> Spectrum {
        Spectrum { pairs: self.pairs.iter().map(|&(v, m)| (round_sig(v), m)).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Spectrum> {
        serde_json::from_str(text)
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> =
            self.pairs.iter().map(|&(v, m)| Entry { lambda: round_sig(v), mult: m }).collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        for e in &entries {
            if e.mult == 0 {
                return Err(D::Error::custom("multiplicity must be positive"));
            }
        }
        if entries.windows(2).any(|w| w[0].lambda >= w[1].lambda) {
            return Err(D::Error::custom("eigenvalues must be strictly increasing"));
        }
        Ok(Spectrum { pairs: entries.into_iter().map(|e| (e.lambda, e.mult)).collect() })
    }
}
