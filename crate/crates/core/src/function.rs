//! Evaluable fuzzy-number-valued functions on `[0,1]`: the built-in
//! catalog, sampled (user-supplied) functions with linear interpolation,
//! alpha-cut slicing, probe-based hypothesis checks and modulus-of-
//! continuity computation.

use std::sync::Arc;

use serde::Deserialize;

use crate::fuzzy::{AlphaGrid, FuzzyNumber};
use crate::interval::Interval;
use crate::report::ModulusSource;
use crate::{Error, Result};

/// Subdivisions per delta window when sampling a modulus numerically.
pub const MODULUS_SUBDIVISIONS: usize = 50;
/// Default probe count for hypothesis checks.
pub const DEFAULT_PROBES: usize = 257;

type FuzzyEval = Arc<dyn Fn(f64) -> FuzzyNumber + Send + Sync>;
type ModulusFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type SliceModulusFn = Arc<dyn Fn(usize, f64) -> f64 + Send + Sync>;
type IntervalEval = Arc<dyn Fn(f64) -> Interval + Send + Sync>;

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionKind {
    Catalog(String),
    Sampled,
}

/// A continuous map `[0,1] -> E^1` on a fixed alpha grid, optionally
/// carrying an analytic modulus of continuity (and per-level slice moduli).
#[derive(Clone)]
pub struct FuzzyFunction {
    grid: AlphaGrid,
    kind: FunctionKind,
    eval: FuzzyEval,
    modulus: Option<ModulusFn>,
    slice_modulus: Option<SliceModulusFn>,
}

/// A modulus value together with how trustworthy it is for certification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusEstimate {
    pub value: f64,
    pub source: ModulusSource,
}

/// An interval-valued function on `[0,1]` (one alpha-slice of a fuzzy
/// function, or a standalone construction).
#[derive(Clone)]
pub struct IntervalFunction {
    eval: IntervalEval,
    modulus: Option<ModulusFn>,
}

impl IntervalFunction {
    pub fn new(eval: impl Fn(f64) -> Interval + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(eval),
            modulus: None,
        }
    }

    pub fn with_modulus(mut self, m: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.modulus = Some(Arc::new(m));
        self
    }

    pub fn eval(&self, x: f64) -> Result<Interval> {
        check_domain(x)?;
        Ok((self.eval)(x))
    }

    /// Modulus of continuity in the Hausdorff metric: analytic when
    /// available, otherwise a sampled lower estimate.
    pub fn modulus(&self, delta: f64) -> ModulusEstimate {
        if let Some(m) = &self.modulus {
            return ModulusEstimate {
                value: m(delta),
                source: ModulusSource::Analytic,
            };
        }
        let value = sampled_sup(delta, |x, y| {
            (self.eval)(x).hausdorff(&(self.eval)(y))
        });
        ModulusEstimate {
            value,
            source: ModulusSource::LowerEstimate,
        }
    }

    /// Probe-based check that the interval length is nonincreasing in `x`.
    pub fn len_nonincreasing(&self, probes: usize) -> bool {
        monotone_probe(probes, |x, y| {
            (self.eval)(x).len() >= (self.eval)(y).len() - crate::TOL_MONO
        })
    }

    /// Probe-based check that the interval length is nondecreasing in `x`.
    pub fn len_nondecreasing(&self, probes: usize) -> bool {
        monotone_probe(probes, |x, y| {
            (self.eval)(x).len() <= (self.eval)(y).len() + crate::TOL_MONO
        })
    }
}

fn check_domain(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::DomainError(x))
    }
}

/// Sampled supremum of `d(x, y)` over pairs with `|x - y| < delta`, on a
/// uniform grid of step `delta / MODULUS_SUBDIVISIONS`. A lower estimate.
fn sampled_sup(delta: f64, d: impl Fn(f64, f64) -> f64) -> f64 {
    let delta = delta.min(1.0);
    let step = delta / MODULUS_SUBDIVISIONS as f64;
    let n = (1.0 / step).ceil() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| (i as f64 * step).min(1.0)).collect();
    let mut sup: f64 = 0.0;
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            if xs[j] - xs[i] >= delta {
                break;
            }
            sup = sup.max(d(xs[i], xs[j]));
        }
    }
    sup
}

fn monotone_probe(probes: usize, ok: impl Fn(f64, f64) -> bool) -> bool {
    assert!(probes >= 2);
    let xs: Vec<f64> = (0..probes)
        .map(|i| i as f64 / (probes - 1) as f64)
        .collect();
    for i in 0..probes {
        for j in (i + 1)..probes {
            if !ok(xs[i], xs[j]) {
                return false;
            }
        }
    }
    true
}

/// Direction of the node chain in the gH existence check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChainDirection {
    /// `f(a_j) gh- f(a_{j+1})` must exist for all `j`.
    Forward,
    /// `f(a_{j+1}) gh- f(a_j)` must exist for all `j`.
    Backward,
}

impl FuzzyFunction {
    pub fn from_parts(
        grid: AlphaGrid,
        kind: FunctionKind,
        eval: impl Fn(f64) -> FuzzyNumber + Send + Sync + 'static,
    ) -> Self {
        Self {
            grid,
            kind,
            eval: Arc::new(eval),
            modulus: None,
            slice_modulus: None,
        }
    }

    pub fn with_modulus(mut self, m: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.modulus = Some(Arc::new(m));
        self
    }

    pub fn with_slice_modulus(
        mut self,
        m: impl Fn(usize, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.slice_modulus = Some(Arc::new(m));
        self
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn has_analytic_modulus(&self) -> bool {
        self.modulus.is_some()
    }

    pub fn eval(&self, x: f64) -> Result<FuzzyNumber> {
        check_domain(x)?;
        Ok((self.eval)(x))
    }

    /// The interval-valued function `x -> [f(x)]_alpha` for a grid level.
    pub fn alpha_slice(&self, alpha: f64) -> Result<IntervalFunction> {
        let idx = self
            .grid
            .index_of(alpha)
            .ok_or_else(|| Error::InvalidParams(format!("alpha {alpha} is not a grid level")))?;
        let eval = self.eval.clone();
        let mut slice = IntervalFunction::new(move |x| eval(x).cut(idx));
        if let Some(sm) = &self.slice_modulus {
            let sm = sm.clone();
            slice = slice.with_modulus(move |d| sm(idx, d));
        }
        Ok(slice)
    }

    /// Fuzzy modulus of continuity at window `delta`: analytic when the
    /// function carries one, otherwise a sampled lower estimate.
    pub fn modulus(&self, delta: f64) -> ModulusEstimate {
        if let Some(m) = &self.modulus {
            return ModulusEstimate {
                value: m(delta),
                source: ModulusSource::Analytic,
            };
        }
        let value = sampled_sup(delta, |x, y| {
            (self.eval)(x).d_infty(&(self.eval)(y)).expect("same grid")
        });
        ModulusEstimate {
            value,
            source: ModulusSource::LowerEstimate,
        }
    }

    /// Probe check of `f(y) included in f(x)` for all `x <= y`.
    pub fn check_nested_decreasing(&self, probes: usize) -> bool {
        monotone_probe(probes, |x, y| {
            (self.eval)(x).includes(&(self.eval)(y)).expect("same grid")
        })
    }

    /// Probe check of `f(x) included in f(y)` for all `x <= y`.
    pub fn check_nested_increasing(&self, probes: usize) -> bool {
        monotone_probe(probes, |x, y| {
            (self.eval)(y).includes(&(self.eval)(x)).expect("same grid")
        })
    }

    /// Whether the gH-differences along the node chain `a_j = j/n` exist.
    pub fn check_gh_chain(&self, n: usize, dir: ChainDirection) -> bool {
        assert!(n >= 1);
        (0..n).all(|j| {
            let a = (self.eval)(j as f64 / n as f64);
            let b = (self.eval)((j + 1) as f64 / n as f64);
            let (u, v) = match dir {
                ChainDirection::Forward => (a, b),
                ChainDirection::Backward => (b, a),
            };
            u.gh_exists(&v).expect("same grid")
        })
    }
}

/// Parameters for catalog entries; `u` overrides the entry's default
/// triangular shape where one applies.
#[derive(Debug, Clone)]
pub struct CatalogParams {
    pub u: Option<(f64, f64, f64)>,
    pub grid: AlphaGrid,
}

impl Default for CatalogParams {
    fn default() -> Self {
        Self {
            u: None,
            grid: AlphaGrid::default(),
        }
    }
}

/// Names of the built-in catalog entries.
pub const CATALOG_NAMES: &[&str] = &[
    "scaled_exp",
    "scaled_linear",
    "translated",
    "bump_width",
    "crisp_ident",
];

/// `sup |u^-|, |u^+|` over all levels; for a nested family this is
/// attained at level 0.
fn radius(u: &FuzzyNumber) -> f64 {
    u.cut(0).lo().abs().max(u.cut(0).hi().abs())
}

fn scaled_entry(
    name: &str,
    u: FuzzyNumber,
    g: impl Fn(f64) -> f64 + Send + Sync + 'static,
    // Exact modulus of g on [0,1].
    omega_g: impl Fn(f64) -> f64 + Send + Sync + Copy + 'static,
) -> FuzzyFunction {
    let grid = u.grid().clone();
    let r = radius(&u);
    let u_eval = u.clone();
    let u_slice = u;
    FuzzyFunction::from_parts(grid, FunctionKind::Catalog(name.to_string()), move |x| {
        u_eval.scale(g(x))
    })
    .with_modulus(move |d| omega_g(d) * r)
    .with_slice_modulus(move |idx, d| {
        let c = u_slice.cut(idx);
        omega_g(d) * c.lo().abs().max(c.hi().abs())
    })
}

/// Instantiates a catalog function. Entries:
/// - `scaled_exp`: `f(x) = e^{-x} u` (widths decreasing),
/// - `scaled_linear`: `f(x) = (1 + x) u` (widths increasing),
/// - `translated`: `f(x) = u + crisp(x^2)` (constant widths),
/// - `bump_width`: `f(x) = (1 + x(1-x)) u` (widths rise then fall),
/// - `crisp_ident`: `f(x) = crisp(x)`.
///
/// All entries carry analytic moduli.
pub fn catalog(name: &str, params: &CatalogParams) -> Result<FuzzyFunction> {
    let grid = params.grid.clone();
    let tri = |default: (f64, f64, f64)| -> Result<FuzzyNumber> {
        let (a, b, c) = params.u.unwrap_or(default);
        FuzzyNumber::triangular(a, b, c, &grid)
    };
    match name {
        "scaled_exp" => {
            let u = tri((0.0, 1.0, 2.0))?;
            Ok(scaled_entry(name, u, |x| (-x).exp(), |d| {
                1.0 - (-d.min(1.0)).exp()
            }))
        }
        "scaled_linear" => {
            let u = tri((-1.0, 0.0, 1.0))?;
            Ok(scaled_entry(name, u, |x| 1.0 + x, |d| d.min(1.0)))
        }
        "translated" => {
            // Shift s(x) = x^2; exact modulus d(2 - d) on [0,1].
            let u = tri((0.0, 1.0, 2.0))?;
            let omega_s = |d: f64| {
                let d = d.min(1.0);
                d * (2.0 - d)
            };
            let g = grid.clone();
            let eval_u = u;
            Ok(FuzzyFunction::from_parts(
                grid,
                FunctionKind::Catalog(name.to_string()),
                move |x| {
                    eval_u
                        .add(&FuzzyNumber::crisp(x * x, &g))
                        .expect("same grid")
                },
            )
            .with_modulus(omega_s)
            .with_slice_modulus(move |_, d| omega_s(d)))
        }
        "bump_width" => {
            // g(x) = 1 + x(1 - x); exact modulus d(1 - d) capped at 1/4.
            let u = tri((-1.0, 0.0, 1.0))?;
            Ok(scaled_entry(name, u, |x| 1.0 + x * (1.0 - x), |d| {
                let d = d.min(0.5);
                d * (1.0 - d)
            }))
        }
        "crisp_ident" => {
            let g = grid.clone();
            Ok(FuzzyFunction::from_parts(
                grid,
                FunctionKind::Catalog(name.to_string()),
                move |x| FuzzyNumber::crisp(x, &g),
            )
            .with_modulus(|d| d.min(1.0))
            .with_slice_modulus(|_, d| d.min(1.0)))
        }
        _ => Err(Error::UnknownCatalogEntry(name.to_string())),
    }
}

/// A fuzzy function given by samples at `x_0 = 0 < ... < x_N = 1`,
/// interpolated endpoint-wise linearly per level (which preserves
/// nestedness).
#[derive(Debug, Clone)]
pub struct SampledFuzzyFunction {
    grid: AlphaGrid,
    xs: Vec<f64>,
    values: Vec<FuzzyNumber>,
}

#[derive(Deserialize)]
struct SampleRepr {
    x: f64,
    cuts: Vec<(f64, f64)>,
}

#[derive(Deserialize)]
struct FunctionFileRepr {
    levels: Vec<f64>,
    samples: Vec<SampleRepr>,
}

impl SampledFuzzyFunction {
    pub fn new(grid: AlphaGrid, xs: Vec<f64>, values: Vec<FuzzyNumber>) -> Result<Self> {
        if xs.len() != values.len() || xs.len() < 2 {
            return Err(Error::InvalidParams(
                "need at least two samples with one value each".into(),
            ));
        }
        if xs[0] != 0.0 || *xs.last().unwrap() != 1.0 {
            return Err(Error::InvalidParams(
                "sample points must start at 0 and end at 1".into(),
            ));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams(
                "sample points must be strictly increasing".into(),
            ));
        }
        for (i, v) in values.iter().enumerate() {
            if v.grid() != &grid {
                return Err(Error::InvalidParams(format!(
                    "sample {i} is not on the shared alpha grid"
                )));
            }
            v.validate(crate::TOL_NEST)
                .map_err(|e| Error::InvariantError(format!("sample {i}: {e}")))?;
        }
        Ok(Self { grid, xs, values })
    }

    /// Parses the JSON function file
    /// `{ "levels": [...], "samples": [ { "x": ..., "cuts": [[lo,hi],...] }, ... ] }`
    /// validating every invariant with a field-precise message.
    pub fn from_json(text: &str) -> Result<Self> {
        let repr: FunctionFileRepr =
            serde_json::from_str(text).map_err(|e| Error::SchemaError(e.to_string()))?;
        let grid = AlphaGrid::from_levels(repr.levels)
            .map_err(|e| Error::SchemaError(format!("levels: {e}")))?;
        let mut xs = Vec::with_capacity(repr.samples.len());
        let mut values = Vec::with_capacity(repr.samples.len());
        for (si, s) in repr.samples.into_iter().enumerate() {
            if s.cuts.len() != grid.len() {
                return Err(Error::SchemaError(format!(
                    "sample {si}: expected {} cuts, got {}",
                    grid.len(),
                    s.cuts.len()
                )));
            }
            let mut cuts = Vec::with_capacity(s.cuts.len());
            for (li, (lo, hi)) in s.cuts.iter().enumerate() {
                if lo > hi {
                    return Err(Error::InvariantError(format!(
                        "lo > hi at sample {si} level {li}"
                    )));
                }
                cuts.push(Interval::new(*lo, *hi).map_err(|e| {
                    Error::SchemaError(format!("sample {si} level {li}: {e}"))
                })?);
            }
            for li in 1..cuts.len() {
                if !cuts[li - 1].contains(&cuts[li], crate::TOL_NEST) {
                    return Err(Error::InvariantError(format!(
                        "cuts not nested at sample {si} between levels {} and {li}",
                        li - 1
                    )));
                }
            }
            xs.push(s.x);
            values.push(FuzzyNumber::from_cuts_unchecked(grid.clone(), cuts));
        }
        Self::new(grid, xs, values)
    }

    pub fn sample_points(&self) -> &[f64] {
        &self.xs
    }

    fn eval_at(&self, x: f64) -> FuzzyNumber {
        match self.xs.binary_search_by(|p| p.partial_cmp(&x).unwrap()) {
            Ok(i) => self.values[i].clone(),
            Err(i) => {
                let (x0, x1) = (self.xs[i - 1], self.xs[i]);
                let t = (x - x0) / (x1 - x0);
                let cuts = self.values[i - 1]
                    .cuts()
                    .iter()
                    .zip(self.values[i].cuts())
                    .map(|(a, b)| {
                        Interval::new(
                            a.lo() + t * (b.lo() - a.lo()),
                            a.hi() + t * (b.hi() - a.hi()),
                        )
                        .expect("interpolation preserves order")
                    })
                    .collect();
                FuzzyNumber::from_cuts_unchecked(self.grid.clone(), cuts)
            }
        }
    }

    /// Exact modulus of the piecewise-linear interpolant: extremal pairs
    /// have at least one breakpoint coordinate, the other a breakpoint or
    /// a point at distance exactly `delta`. A certified upper bound for
    /// the open-window modulus.
    pub fn exact_modulus(&self, delta: f64) -> f64 {
        let delta = delta.min(1.0);
        let d = |x: f64, y: f64| self.eval_at(x).d_infty(&self.eval_at(y)).expect("same grid");
        let mut sup: f64 = 0.0;
        for (i, &xi) in self.xs.iter().enumerate() {
            for &xj in &self.xs[i..] {
                if xj - xi <= delta {
                    sup = sup.max(d(xi, xj));
                }
            }
            let right = (xi + delta).min(1.0);
            let left = (xi - delta).max(0.0);
            sup = sup.max(d(xi, right)).max(d(left, xi));
        }
        sup
    }

    /// Wraps the sampled data as a [`FuzzyFunction`] whose modulus is the
    /// certified exact modulus of the interpolant.
    pub fn into_function(self) -> FuzzyFunction {
        let grid = self.grid.clone();
        let this = Arc::new(self);
        let eval_src = this.clone();
        let mod_src = this;
        let mut f = FuzzyFunction::from_parts(grid, FunctionKind::Sampled, move |x| {
            eval_src.eval_at(x)
        });
        let sm = mod_src.clone();
        f = f.with_modulus(move |d| mod_src.exact_modulus(d));
        // Slice modulus: same breakpoint argument per level.
        f.slice_modulus = Some(Arc::new(move |idx, delta| {
            let delta: f64 = delta.min(1.0);
            let d = |x: f64, y: f64| sm.eval_at(x).cut(idx).hausdorff(&sm.eval_at(y).cut(idx));
            let mut sup: f64 = 0.0;
            for (i, &xi) in sm.xs.iter().enumerate() {
                for &xj in &sm.xs[i..] {
                    if xj - xi <= delta {
                        sup = sup.max(d(xi, xj));
                    }
                }
                sup = sup.max(d(xi, (xi + delta).min(1.0)));
                sup = sup.max(d((xi - delta).max(0.0), xi));
            }
            sup
        }));
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> AlphaGrid {
        AlphaGrid::uniform(100)
    }

    fn cat(name: &str, u: Option<(f64, f64, f64)>) -> FuzzyFunction {
        catalog(
            name,
            &CatalogParams {
                u,
                grid: grid(),
            },
        )
        .unwrap()
    }

    #[test]
    fn scaled_exp_eval() {
        let f = cat("scaled_exp", Some((0.0, 1.0, 2.0)));
        let at0 = f.eval(0.0).unwrap();
        assert!(at0
            .d_infty(&FuzzyNumber::triangular(0.0, 1.0, 2.0, &grid()).unwrap())
            .unwrap()
            .abs()
            <= 1e-15);
        let e = (-1.0f64).exp();
        let at1 = f.eval(1.0).unwrap();
        let expect = FuzzyNumber::triangular(0.0, e, 2.0 * e, &grid()).unwrap();
        assert!(at1.d_infty(&expect).unwrap() <= 1e-15);
    }

    #[test]
    fn eval_rejects_out_of_domain() {
        let f = cat("crisp_ident", None);
        assert!(matches!(f.eval(1.5), Err(Error::DomainError(_))));
        assert!(matches!(f.eval(-0.1), Err(Error::DomainError(_))));
    }

    #[test]
    fn unknown_catalog_entry() {
        assert!(matches!(
            catalog("nope", &CatalogParams::default()),
            Err(Error::UnknownCatalogEntry(_))
        ));
    }

    #[test]
    fn alpha_slice_core_of_scaled_exp() {
        let f = cat("scaled_exp", Some((0.0, 1.0, 2.0)));
        let slice = f.alpha_slice(1.0).unwrap();
        for i in 0..10 {
            let x = i as f64 / 9.0;
            let c = slice.eval(x).unwrap();
            let e = (-x).exp();
            assert!((c.lo() - e).abs() <= 1e-15 && (c.hi() - e).abs() <= 1e-15);
        }
        assert!(f.alpha_slice(0.123456).is_err());
    }

    #[test]
    fn crisp_ident_slice_is_identity() {
        let f = cat("crisp_ident", None);
        let slice = f.alpha_slice(0.0).unwrap();
        let c = slice.eval(0.7).unwrap();
        assert_eq!((c.lo(), c.hi()), (0.7, 0.7));
    }

    #[test]
    fn analytic_moduli() {
        let f = cat("crisp_ident", None);
        let m = f.modulus(0.1);
        assert_eq!(m.source, ModulusSource::Analytic);
        assert!((m.value - 0.1).abs() <= 1e-15);

        let f = cat("scaled_exp", Some((0.0, 1.0, 2.0)));
        let m = f.modulus(0.3);
        assert!((m.value - 2.0 * (1.0 - (-0.3f64).exp())).abs() <= 1e-15);
    }

    #[test]
    fn constant_function_modulus_is_zero() {
        let g = grid();
        let u = FuzzyNumber::triangular(0.0, 1.0, 2.0, &g);
        let u = u.unwrap();
        let f = FuzzyFunction::from_parts(g, FunctionKind::Sampled, move |_| u.clone());
        let m = f.modulus(0.2);
        assert_eq!(m.source, ModulusSource::LowerEstimate);
        assert_eq!(m.value, 0.0);
    }

    #[test]
    fn sampled_modulus_close_to_analytic_for_crisp_ident() {
        let g = grid();
        let f = FuzzyFunction::from_parts(g.clone(), FunctionKind::Sampled, move |x| {
            FuzzyNumber::crisp(x, &g)
        });
        let m = f.modulus(0.25);
        assert!(m.value <= 0.25 + 1e-12);
        assert!(m.value >= 0.25 * (1.0 - 2.0 / MODULUS_SUBDIVISIONS as f64));
    }

    #[test]
    fn nesting_checks_route_catalog_entries() {
        assert!(cat("scaled_exp", Some((-1.0, 0.0, 1.0))).check_nested_decreasing(33));
        assert!(!cat("scaled_exp", Some((0.0, 1.0, 2.0))).check_nested_decreasing(33));
        assert!(!cat("scaled_exp", Some((-1.0, 0.0, 1.0))).check_nested_increasing(33));
        assert!(cat("scaled_linear", None).check_nested_increasing(33));
        assert!(!cat("scaled_linear", None).check_nested_decreasing(33));
        assert!(!cat("bump_width", None).check_nested_decreasing(33));
        assert!(!cat("bump_width", None).check_nested_increasing(33));
        let g = grid();
        let u = FuzzyNumber::triangular(0.0, 1.0, 2.0, &g).unwrap();
        let cf = FuzzyFunction::from_parts(g, FunctionKind::Sampled, move |_| u.clone());
        assert!(cf.check_nested_decreasing(17) && cf.check_nested_increasing(17));
    }

    #[test]
    fn gh_chain_checks() {
        assert!(cat("scaled_exp", Some((0.0, 1.0, 2.0)))
            .check_gh_chain(8, ChainDirection::Forward));
        assert!(cat("scaled_linear", None).check_gh_chain(8, ChainDirection::Backward));
        assert!(cat("translated", None).check_gh_chain(8, ChainDirection::Forward));
    }

    #[test]
    fn gh_chain_fails_on_alternating_shapes() {
        // Alternate between the shapes of <12,15,19> and <5,9,11>, whose
        // gH-difference does not exist.
        let g = grid();
        let u = FuzzyNumber::triangular(12.0, 15.0, 19.0, &g).unwrap();
        let v = FuzzyNumber::triangular(5.0, 9.0, 11.0, &g).unwrap();
        let f = SampledFuzzyFunction::new(g, vec![0.0, 1.0], vec![u, v])
            .unwrap()
            .into_function();
        assert!(!f.check_gh_chain(1, ChainDirection::Forward));
    }

    #[test]
    fn sampled_interpolation() {
        let g = grid();
        let f = SampledFuzzyFunction::new(
            g.clone(),
            vec![0.0, 1.0],
            vec![FuzzyNumber::crisp(0.0, &g), FuzzyNumber::crisp(1.0, &g)],
        )
        .unwrap()
        .into_function();
        let mid = f.eval(0.5).unwrap();
        assert!(mid.d_infty(&FuzzyNumber::crisp(0.5, &g)).unwrap() <= 1e-15);
    }

    #[test]
    fn loader_accepts_well_formed_file() {
        let text = r#"{
            "levels": [0.0, 0.5, 1.0],
            "samples": [
                { "x": 0.0, "cuts": [[0.0, 2.0], [0.5, 1.5], [1.0, 1.0]] },
                { "x": 1.0, "cuts": [[1.0, 3.0], [1.5, 2.5], [2.0, 2.0]] }
            ]
        }"#;
        let f = SampledFuzzyFunction::from_json(text).unwrap().into_function();
        let mid = f.eval(0.5).unwrap();
        assert!((mid.cut(0).lo() - 0.5).abs() <= 1e-15);
        assert!((mid.cut(2).hi() - 1.5).abs() <= 1e-15);
    }

    #[test]
    fn loader_rejects_inverted_cut_with_position() {
        let text = r#"{
            "levels": [0.0, 0.5, 1.0],
            "samples": [
                { "x": 0.0, "cuts": [[0.0, 2.0], [0.5, 1.5], [2.0, 1.0]] },
                { "x": 1.0, "cuts": [[1.0, 3.0], [1.5, 2.5], [2.0, 2.0]] }
            ]
        }"#;
        let err = SampledFuzzyFunction::from_json(text).unwrap_err();
        assert!(err.to_string().contains("lo > hi at sample 0 level 2"));
    }

    #[test]
    fn loader_rejects_non_nested_cuts_with_levels() {
        let text = r#"{
            "levels": [0.0, 0.5, 1.0],
            "samples": [
                { "x": 0.0, "cuts": [[0.0, 2.0], [-1.0, 1.5], [1.0, 1.0]] },
                { "x": 1.0, "cuts": [[1.0, 3.0], [1.5, 2.5], [2.0, 2.0]] }
            ]
        }"#;
        let err = SampledFuzzyFunction::from_json(text).unwrap_err();
        assert!(err
            .to_string()
            .contains("not nested at sample 0 between levels 0 and 1"));
    }

    #[test]
    fn exact_modulus_of_crisp_ramp() {
        let g = grid();
        let f = SampledFuzzyFunction::new(
            g.clone(),
            vec![0.0, 1.0],
            vec![FuzzyNumber::crisp(0.0, &g), FuzzyNumber::crisp(1.0, &g)],
        )
        .unwrap();
        assert!((f.exact_modulus(0.25) - 0.25).abs() <= 1e-15);
    }
}
