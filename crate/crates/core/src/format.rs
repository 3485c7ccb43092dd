//! Fixed-precision float output.
//!
//! Every number leaving the crate through JSON or CSV is first rounded to 12
//! significant digits, so identical runs give byte-identical files and a
//! parsed value re-serializes to the same text.

use serde::Serializer;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant decimal digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Display form used in CSV cells.
pub fn fmt_sig(x: f64) -> String {
    format!("{}", round_sig(x))
}

pub fn serialize_sig<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

pub fn serialize_sig_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_sig(*v)),
        None => s.serialize_none(),
    }
}

pub fn serialize_sig_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&round_sig(*x))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rounds_to_twelve_digits() {
        assert_eq!(fmt_sig(2f64.sqrt()), "1.41421356237");
        assert_eq!(round_sig(-1234567.891234567), -1234567.89123);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(fmt_sig(2.0), "2");
    }

    proptest! {
        #[test]
        fn rounding_is_idempotent(x in -1e12f64..1e12) {
            let r = round_sig(x);
            prop_assert_eq!(round_sig(r), r);
            prop_assert!((r - x).abs() <= 1e-11 * x.abs());
        }
    }
}
