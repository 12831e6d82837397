//! Compact real intervals and the interval-level operations used level-wise
//! by the fuzzy layer: length, Hausdorff distance, Minkowski sum, scaling
//! and the generalized Hukuhara difference (which always exists here).

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A compact interval `[lo, hi]` with `lo <= hi`. Degenerate intervals
/// (`lo == hi`) are first-class and represent crisp values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl TryFrom<(f64, f64)> for Interval {
    type Error = Error;

    fn try_from((lo, hi): (f64, f64)) -> Result<Self> {
        Interval::new(lo, hi)
    }
}

impl From<Interval> for (f64, f64) {
    fn from(i: Interval) -> Self {
        (i.lo, i.hi)
    }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "interval endpoints must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo > hi {
            return Err(Error::InvalidParams(format!(
                "interval endpoints out of order: lo {lo} > hi {hi}"
            )));
        }
        Ok(Self { lo, hi })
    }

    /// The singleton `[r, r]`.
    pub fn point(r: f64) -> Self {
        Self { lo: r, hi: r }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Diameter `hi - lo`.
    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    /// Hausdorff distance `max(|lo-lo'|, |hi-hi'|)`.
    pub fn hausdorff(&self, other: &Interval) -> f64 {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }

    /// Generalized Hukuhara difference; total on intervals. The result `w`
    /// satisfies either `other + w = self` or `self + (-1)w = other`.
    pub fn gh_diff(&self, other: &Interval) -> Interval {
        let dl = self.lo - other.lo;
        let dh = self.hi - other.hi;
        Interval {
            lo: dl.min(dh),
            hi: dl.max(dh),
        }
    }

    /// Minkowski sum, `[lo+lo', hi+hi']`.
    pub fn minkowski_add(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }

    /// Scalar multiple; endpoints swap for negative `k` so `lo <= hi` holds.
    pub fn scale(&self, k: f64) -> Interval {
        if k >= 0.0 {
            Interval {
                lo: k * self.lo,
                hi: k * self.hi,
            }
        } else {
            Interval {
                lo: k * self.hi,
                hi: k * self.lo,
            }
        }
    }

    /// Whether `other` is contained in `self`, up to `tol` per endpoint.
    pub fn contains(&self, other: &Interval, tol: f64) -> bool {
        self.lo <= other.lo + tol && other.hi <= self.hi + tol
    }
}
