//! Invariant dictionary between `J¹(S¹)` and the complement of the unknot
//! `K₀` in `S³`.
//!
//! The contactomorphism sends a knot homotopic to `q` times the generator to
//! a knot whose tb drops by `q²`, and a `(p, q)`-cable link to a
//! `(−q, q − p)`-cable link. Only the integer consequences are modelled; `S³`
//! classes use the meridian/longitude pair of the complement of `K₀`, which
//! may differ from other references by a basis change.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("({p}, {q}) is not a normalised primitive class")]
    InvalidClass { p: i64, q: i64 },
    #[error("m = {0} must be non-negative")]
    NegativeM(i64),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

/// A cable type on the `S³` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct S3CableType {
    pub p: i64,
    pub q: i64,
    pub m: i64,
}

fn check_class(p: i64, q: i64) -> Result<(), TranslateError> {
    if gcd(p, q) != 1 || q < 0 || (q == 0 && p != 1) {
        return Err(TranslateError::InvalidClass { p, q });
    }
    Ok(())
}

pub fn cable_type_to_s3(p: i64, q: i64) -> Result<(i64, i64), TranslateError> {
    check_class(p, q)?;
    Ok((-q, q - p))
}

pub fn tb_to_s3(tb: i64, q: i64) -> i64 {
    tb - q * q
}

pub fn m_to_s3(m: i64) -> Result<i64, TranslateError> {
    if m < 0 {
        return Err(TranslateError::NegativeM(m));
    }
    Ok(m + 1)
}

pub fn to_s3_cable(p: i64, q: i64, m: i64) -> Result<S3CableType, TranslateError> {
    let (p2, q2) = cable_type_to_s3(p, q)?;
    Ok(S3CableType { p: p2, q: q2, m: m_to_s3(m)? })
}

/// Reverses the orientation of a component in class `(p, q)`.
pub fn reverse_orientation(p: i64, q: i64, tb: i64, rot: i64) -> (i64, i64, i64, i64) {
    (-p, -q, tb, -rot)
}

/// Gap between the maximal tb of an `S³` cable of type `(−q, q − p)` and the
/// largest tb reached by images of `J¹(S¹)` cables. A positive gap means some
/// `S³` cable links are not images.
pub fn cor_noimage_gap(p: i64, q: i64) -> Result<i64, TranslateError> {
    if p <= 0 {
        return Err(TranslateError::Hypothesis(format!("0 < p fails for p = {p}")));
    }
    if p >= q - 1 {
        return Err(TranslateError::Hypothesis(format!("p < q - 1 fails for p = {p}, q = {q}")));
    }
    let s3_max = p * q - q * q;
    let image_max = tb_to_s3(p * (q - 1), q);
    Ok(s3_max - image_max)
}

/// Maximal tb of the positive `(−p′, −q′)` torus knot, also valid for
/// `(p′, q′) = (−1, 0)`.
pub fn s3_positive_torus_tb_max(p: i64, q: i64) -> Result<i64, TranslateError> {
    let unknot = p == -1 && q == 0;
    if !unknot && !(p <= -1 && q <= -1 && gcd(p, q) == 1) {
        return Err(TranslateError::Hypothesis(format!(
            "({p}, {q}) is not the negative of a positive torus type"
        )));
    }
    Ok(p * q + p + q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::tb_max;

    #[test]
    fn cable_types() {
        assert_eq!(cable_type_to_s3(2, 3), Ok((-3, 1)));
        assert_eq!(cable_type_to_s3(0, 1), Ok((-1, 1)));
        for q in 2..8 {
            assert_eq!(cable_type_to_s3(-1, q), Ok((-q, q + 1)));
        }
        assert!(cable_type_to_s3(2, 4).is_err());
        assert!(cable_type_to_s3(1, -2).is_err());
        assert_eq!(to_s3_cable(2, 3, 2), Ok(S3CableType { p: -3, q: 1, m: 3 }));
    }

    #[test]
    fn tb_and_m() {
        assert_eq!(tb_to_s3(4, 3), -5);
        assert_eq!(tb_to_s3(-7, 0), -7);
        assert_eq!(tb_to_s3(0, 1), -1);
        assert_eq!(m_to_s3(0), Ok(1));
        assert_eq!(m_to_s3(2), Ok(3));
        assert!(m_to_s3(-1).is_err());
        for m in 0..10 {
            assert_eq!(tb_to_s3(-m, 1), -m_to_s3(m).unwrap());
        }
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse_orientation(0, -1, 0, 0), (0, 1, 0, 0));
        assert_eq!(reverse_orientation(3, -2, 3, 1), (-3, 2, 3, -1));
        let (p, q, tb, rot) = reverse_orientation(5, 7, -2, 3);
        assert_eq!(reverse_orientation(p, q, tb, rot), (5, 7, -2, 3));
    }

    #[test]
    fn noimage_gap() {
        assert_eq!(cor_noimage_gap(2, 5), Ok(2));
        assert_eq!(cor_noimage_gap(1, 3), Ok(1));
        assert!(cor_noimage_gap(3, 4).is_err());
        assert!(cor_noimage_gap(0, 4).is_err());
    }

    #[test]
    fn positive_torus() {
        assert_eq!(s3_positive_torus_tb_max(-2, -1), Ok(-1));
        assert_eq!(tb_to_s3(3 * (2 - 1), 2), -1);
        assert_eq!(s3_positive_torus_tb_max(-1, 0), Ok(-1));
        assert_eq!(s3_positive_torus_tb_max(-3, -2), Ok(1));
        assert!(s3_positive_torus_tb_max(2, 3).is_err());
        assert!(s3_positive_torus_tb_max(-2, -4).is_err());
    }

    /// Linking number of a Legendrian knot with its Legendrian push-off.
    fn pushoff_linking(tb: i64) -> i64 {
        tb
    }

    #[test]
    fn longitude_change_family_is_consistent() {
        // p = −1 and m = q: the core and the reversed cable share tb, and
        // the cable is a push-off of the core.
        for q in 2..10 {
            let (p, m) = (-1, q);
            let tb0 = -m;
            let tb1 = tb_max(p, q, m).unwrap();
            assert_eq!(tb0, -q);
            assert_eq!(tb1, p * q);
            assert_eq!(tb0, tb1);
            assert_eq!(pushoff_linking(tb0), -q);
        }
    }
}
