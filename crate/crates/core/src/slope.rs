//! Slope arithmetic on convex tori around the core strand.
//!
//! Dividing curves on a standardly embedded torus have slope `−r/s` with
//! `r ≥ 1`, `s ≥ 0` coprime (`s = 0` is slope ∞). A Legendrian curve in the
//! class `pμ + qλ` meets a pair of dividing curves of slope `−r/s` at least
//! `2|pr + qs|` times, and its twisting relative to the torus is minus half
//! that count. Minimising over admissible slopes gives an upper bound for tb
//! that is computed here independently of the closed forms in
//! [`crate::classify`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("intersection count {0} must be even and non-negative")]
    BadIntersectionCount(i64),
    #[error("({p}, {q}) is not a primitive class")]
    InvalidClass { p: i64, q: i64 },
    #[error("slope pair ({r}, {s}) needs r >= 1, s >= 0 and gcd 1")]
    InvalidSlope { r: i64, s: i64 },
    #[error("matrix has determinant {0}, expected ±1")]
    NotUnimodular(i64),
    #[error("m = {0} must be non-negative")]
    NegativeM(i64),
    #[error("search bound {0} must be at least 1")]
    InvalidBound(i64),
    #[error("class ({p}, {q}) must be normalised: q >= 0, and p = 1 when q = 0")]
    NotNormalized { p: i64, q: i64 },
    #[error("minimum did not stabilise below r = {0}")]
    Unstable(i64),
}

/// Dividing-curve slope `−r/s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlopePair {
    r: i64,
    s: i64,
}

impl SlopePair {
    pub fn new(r: i64, s: i64) -> Result<Self, SlopeError> {
        if r < 1 || s < 0 || gcd(r, s) != 1 {
            return Err(SlopeError::InvalidSlope { r, s });
        }
        Ok(SlopePair { r, s })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn is_infinite(&self) -> bool {
        self.s == 0
    }
}

/// Homology class `pμ + qλ` on the boundary torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub p: i64,
    pub q: i64,
}

impl CurveClass {
    pub fn new(p: i64, q: i64) -> Result<Self, SlopeError> {
        if gcd(p, q) != 1 {
            return Err(SlopeError::InvalidClass { p, q });
        }
        Ok(CurveClass { p, q })
    }

    fn ensure_normalized(&self) -> Result<(), SlopeError> {
        if gcd(self.p, self.q) != 1 {
            return Err(SlopeError::InvalidClass { p: self.p, q: self.q });
        }
        if self.q < 0 || (self.q == 0 && self.p != 1) {
            return Err(SlopeError::NotNormalized { p: self.p, q: self.q });
        }
        Ok(())
    }
}

pub fn kanda_twist(intersection_count: i64) -> Result<i64, SlopeError> {
    if intersection_count < 0 || intersection_count % 2 != 0 {
        return Err(SlopeError::BadIntersectionCount(intersection_count));
    }
    Ok(-intersection_count / 2)
}

/// Twisting of a curve relative to the torus framing: `tb − pq`.
pub fn twist_on_torus(tb: i64, class: CurveClass) -> i64 {
    tb - class.p * class.q
}

/// Coprime `(r, s)` with `1 ≤ r ≤ r_bound` and `0 ≤ s ≤ r·m`, in
/// lexicographic order.
pub fn admissible_slopes(m: i64, r_bound: i64) -> Result<Vec<SlopePair>, SlopeError> {
    if m < 0 {
        return Err(SlopeError::NegativeM(m));
    }
    if r_bound < 1 {
        return Err(SlopeError::InvalidBound(r_bound));
    }
    let mut out = Vec::new();
    for r in 1..=r_bound {
        for s in 0..=r * m {
            if gcd(r, s) == 1 {
                out.push(SlopePair { r, s });
            }
        }
    }
    Ok(out)
}

/// Smallest `2|pr + qs|` over admissible slopes with `r ≤ r_bound`, with a
/// minimising slope.
pub fn min_intersection_within(
    class: CurveClass,
    m: i64,
    r_bound: i64,
) -> Result<(i64, SlopePair), SlopeError> {
    let slopes = admissible_slopes(m, r_bound)?;
    let best = slopes
        .into_iter()
        .map(|sl| (2 * (class.p * sl.r + class.q * sl.s).abs(), sl))
        .min()
        .expect("slope ∞ is always admissible");
    Ok(best)
}

const MAX_R_BOUND: i64 = 1 << 12;

/// Minimal intersection of the class with a dividing-curve pair. The search
/// starts at `r ≤ max(q, 1) + 2` and widens by 2 until the minimum stays put.
pub fn min_intersection(class: CurveClass, m: i64) -> Result<i64, SlopeError> {
    class.ensure_normalized()?;
    let mut bound = class.q.max(1) + 2;
    let mut current = min_intersection_within(class, m, bound)?.0;
    loop {
        let wider = min_intersection_within(class, m, bound + 2)?.0;
        if wider == current {
            return Ok(current);
        }
        bound += 2;
        current = wider;
        if bound > MAX_R_BOUND {
            return Err(SlopeError::Unstable(bound));
        }
    }
}

/// Upper bound for tb of a curve in the class: `pq − ½·min_intersection`.
pub fn tb_max_oracle(class: CurveClass, m: i64) -> Result<i64, SlopeError> {
    let min = min_intersection(class, m)?;
    Ok(class.p * class.q + kanda_twist(min)?)
}

pub type Matrix = [[i64; 2]; 2];

pub fn change_basis(class: CurveClass, matrix: Matrix) -> Result<CurveClass, SlopeError> {
    let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    if det.abs() != 1 {
        return Err(SlopeError::NotUnimodular(det));
    }
    Ok(CurveClass {
        p: matrix[0][0] * class.p + matrix[0][1] * class.q,
        q: matrix[1][0] * class.p + matrix[1][1] * class.q,
    })
}

/// Basis change taking the longitude `−μ + qλ` to the meridian direction,
/// so that a torus of boundary slope `−1/q` becomes one of slope ∞.
pub fn unwinding_matrix(q: i64) -> Matrix {
    [[q, 1], [-1, 0]]
}

pub fn swap_matrix() -> Matrix {
    [[0, 1], [1, 0]]
}

pub fn tb_after_longitude_shift(tb: i64, winding: i64, shift: i64) -> i64 {
    tb + shift * winding * winding
}
