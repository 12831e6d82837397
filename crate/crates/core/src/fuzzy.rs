//! Discretized fuzzy numbers as nested alpha-cut families, with level-wise
//! arithmetic, the supremum metric, the (partial) gH-difference and the
//! (total) g-difference.
//!
//! A fuzzy number is stored as one compact interval per level of a shared
//! [`AlphaGrid`]; the endpoint functions are treated as piecewise linear
//! between grid nodes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::interval::Interval;
use crate::{Error, Result, TOL_INCL, TOL_MONO, TOL_NEST};

/// Default number of subintervals in the uniform alpha grid.
pub const DEFAULT_GRID_SUBDIVISIONS: usize = 100;

/// Ordered membership levels `0 = lambda_0 < ... < lambda_m = 1`.
#[derive(Debug, Clone)]
pub struct AlphaGrid {
    levels: Arc<Vec<f64>>,
}

impl PartialEq for AlphaGrid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.levels, &other.levels) || self.levels == other.levels
    }
}

impl AlphaGrid {
    /// Uniform grid with `m` subintervals (`m + 1` levels).
    pub fn uniform(m: usize) -> Self {
        assert!(m >= 1, "alpha grid needs at least two levels");
        let levels = (0..=m).map(|i| i as f64 / m as f64).collect();
        Self {
            levels: Arc::new(levels),
        }
    }

    pub fn from_levels(levels: Vec<f64>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::InvalidParams(
                "alpha grid needs at least two levels".into(),
            ));
        }
        if levels[0] != 0.0 || *levels.last().unwrap() != 1.0 {
            return Err(Error::InvalidParams(
                "alpha grid must start at 0 and end at 1".into(),
            ));
        }
        if levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams(
                "alpha grid levels must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            levels: Arc::new(levels),
        })
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of a level equal to `alpha` up to 1e-12, if any.
    pub fn index_of(&self, alpha: f64) -> Option<usize> {
        self.levels.iter().position(|&l| (l - alpha).abs() <= 1e-12)
    }
}

impl Default for AlphaGrid {
    fn default() -> Self {
        Self::uniform(DEFAULT_GRID_SUBDIVISIONS)
    }
}

/// A fuzzy number as the nested family of its alpha-cuts on a grid
/// (a discretized Goetschel-Voxman endpoint pair).
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    grid: AlphaGrid,
    cuts: Vec<Interval>,
}

#[derive(Serialize, Deserialize)]
struct FuzzyNumberRepr {
    levels: Vec<f64>,
    cuts: Vec<(f64, f64)>,
}

impl Serialize for FuzzyNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FuzzyNumberRepr {
            levels: self.grid.levels().to_vec(),
            cuts: self.cuts.iter().map(|c| (c.lo(), c.hi())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FuzzyNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FuzzyNumberRepr::deserialize(d)?;
        let grid = AlphaGrid::from_levels(repr.levels).map_err(serde::de::Error::custom)?;
        let cuts = repr
            .cuts
            .into_iter()
            .map(|(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        FuzzyNumber::new(grid, cuts).map_err(serde::de::Error::custom)
    }
}

impl FuzzyNumber {
    /// Builds a fuzzy number from explicit cuts, validating nestedness.
    pub fn new(grid: AlphaGrid, cuts: Vec<Interval>) -> Result<Self> {
        if cuts.len() != grid.len() {
            return Err(Error::InvalidParams(format!(
                "expected {} cuts, got {}",
                grid.len(),
                cuts.len()
            )));
        }
        let fz = Self { grid, cuts };
        fz.validate(TOL_NEST)?;
        Ok(fz)
    }

    /// Internal constructor for cuts that are nested by construction.
    pub(crate) fn from_cuts_unchecked(grid: AlphaGrid, cuts: Vec<Interval>) -> Self {
        debug_assert_eq!(cuts.len(), grid.len());
        Self { grid, cuts }
    }

    /// Checks nestedness of consecutive cuts within `tol`.
    pub fn validate(&self, tol: f64) -> Result<()> {
        for (i, w) in self.cuts.windows(2).enumerate() {
            if !w[0].contains(&w[1], tol) {
                return Err(Error::InvariantError(format!(
                    "cut at level index {} is not contained in the cut at index {}",
                    i + 1,
                    i
                )));
            }
        }
        Ok(())
    }

    /// Triangular fuzzy number `<a, b, c>`.
    pub fn triangular(a: f64, b: f64, c: f64, grid: &AlphaGrid) -> Result<Self> {
        Self::trapezoidal(a, b, b, c, grid)
    }

    /// Trapezoidal fuzzy number with support `[a, d]` and core `[b, c]`.
    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64, grid: &AlphaGrid) -> Result<Self> {
        if !(a <= b && b <= c && c <= d) {
            return Err(Error::InvalidParams(format!(
                "trapezoidal parameters out of order: {a}, {b}, {c}, {d}"
            )));
        }
        let cuts = grid
            .levels()
            .iter()
            // Lerp as a*(1-l) + b*l: exact at both ends, so degenerate
            // cores (b = c) never produce inverted cuts from rounding.
            .map(|&l| Interval::new(a * (1.0 - l) + b * l, d * (1.0 - l) + c * l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_cuts_unchecked(grid.clone(), cuts))
    }

    /// The crisp number `r` (all cuts equal `[r, r]`).
    pub fn crisp(r: f64, grid: &AlphaGrid) -> Self {
        let cuts = vec![Interval::point(r); grid.len()];
        Self::from_cuts_unchecked(grid.clone(), cuts)
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn cuts(&self) -> &[Interval] {
        &self.cuts
    }

    pub fn cut(&self, i: usize) -> Interval {
        self.cuts[i]
    }

    fn check_grid(&self, other: &FuzzyNumber) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// Level-wise Minkowski sum.
    pub fn add(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.check_grid(other)?;
        let cuts = self
            .cuts
            .iter()
            .zip(&other.cuts)
            .map(|(a, b)| a.minkowski_add(b))
            .collect();
        Ok(Self::from_cuts_unchecked(self.grid.clone(), cuts))
    }

    /// Level-wise scalar multiple; valid for any sign of `k`.
    pub fn scale(&self, k: f64) -> FuzzyNumber {
        let cuts = self.cuts.iter().map(|c| c.scale(k)).collect();
        Self::from_cuts_unchecked(self.grid.clone(), cuts)
    }

    /// Supremum metric: max over grid levels of the cut Hausdorff distances.
    pub fn d_infty(&self, other: &FuzzyNumber) -> Result<f64> {
        self.check_grid(other)?;
        Ok(self
            .cuts
            .iter()
            .zip(&other.cuts)
            .map(|(a, b)| a.hausdorff(b))
            .fold(0.0, f64::max))
    }

    /// Whether `self` includes `other` (cut-wise containment at every level).
    pub fn includes(&self, other: &FuzzyNumber) -> Result<bool> {
        self.check_grid(other)?;
        Ok(self
            .cuts
            .iter()
            .zip(&other.cuts)
            .all(|(a, b)| a.contains(b, TOL_INCL)))
    }

    /// Existence test for the gH-difference `self - other`: either
    /// lengths dominate with lower gaps nondecreasing and upper gaps
    /// nonincreasing across the grid, or the mirrored case holds.
    pub fn gh_exists(&self, other: &FuzzyNumber) -> Result<bool> {
        self.check_grid(other)?;
        let m = self.cuts.len();
        let dl: Vec<f64> = (0..m)
            .map(|i| self.cuts[i].lo() - other.cuts[i].lo())
            .collect();
        let dh: Vec<f64> = (0..m)
            .map(|i| self.cuts[i].hi() - other.cuts[i].hi())
            .collect();
        let len_ge = (0..m).all(|i| self.cuts[i].len() >= other.cuts[i].len() - TOL_MONO);
        let len_le = (0..m).all(|i| self.cuts[i].len() <= other.cuts[i].len() + TOL_MONO);
        let nondec = |v: &[f64]| v.windows(2).all(|w| w[1] >= w[0] - TOL_MONO);
        let noninc = |v: &[f64]| v.windows(2).all(|w| w[1] <= w[0] + TOL_MONO);
        let case1 = len_ge && nondec(&dl) && noninc(&dh);
        let case2 = len_le && nondec(&dh) && noninc(&dl);
        Ok(case1 || case2)
    }

    /// gH-difference; errors when the existence conditions fail.
    pub fn gh_difference(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        if !self.gh_exists(other)? {
            return Err(Error::GHDifferenceUndefined);
        }
        let cuts = self
            .cuts
            .iter()
            .zip(&other.cuts)
            .map(|(a, b)| a.gh_diff(b))
            .collect();
        Ok(Self::from_cuts_unchecked(self.grid.clone(), cuts))
    }

    /// g-difference: always defined. The cut at level `i` is the suffix
    /// min/max over levels `j >= i` of the endpoint differences, which is
    /// nested by construction and coincides with the gH-difference
    /// whenever the latter exists.
    pub fn g_difference(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.check_grid(other)?;
        let m = self.cuts.len();
        let mut cuts = vec![Interval::point(0.0); m];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in (0..m).rev() {
            let dl = self.cuts[i].lo() - other.cuts[i].lo();
            let dh = self.cuts[i].hi() - other.cuts[i].hi();
            lo = lo.min(dl.min(dh));
            hi = hi.max(dl.max(dh));
            cuts[i] = Interval::new(lo, hi)?;
        }
        Ok(Self::from_cuts_unchecked(self.grid.clone(), cuts))
    }
}
