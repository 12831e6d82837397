//! The approximation operators: interval-level smooth-step constructions,
//! their fuzzy counterparts built on the gH- and g-differences, and the
//! trapezoidal operator `T_{n,delta}` that needs no hypothesis beyond
//! continuity. Also measures the sup-distance between a target function
//! and an approximant and assembles [`ErrorReport`]s.

use serde::{Deserialize, Serialize};

use crate::function::{ChainDirection, FuzzyFunction, IntervalFunction, DEFAULT_PROBES};
use crate::fuzzy::FuzzyNumber;
use crate::interval::Interval;
use crate::report::{ErrorReport, Verdict};
use crate::smoothstep::{JewettPoly, PhiFamily, PsiFamily};
use crate::{Error, Result, REPORT_TOL};

/// Probe grid used when bounding the pairwise diameter for the epsilon'
/// rule.
const DIAMETER_PROBES: usize = 65;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    GhDec,
    GhInc,
    GDiff,
    Trapezoid,
    IntervalGhDec,
    IntervalGhInc,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::GhDec => "gh_dec",
            Method::GhInc => "gh_inc",
            Method::GDiff => "g_diff",
            Method::Trapezoid => "trapezoid",
            Method::IntervalGhDec => "interval_gh_dec",
            Method::IntervalGhInc => "interval_gh_inc",
        }
    }

    fn bound(&self, omega: f64, n: usize, eps: f64) -> (f64, String) {
        match self {
            Method::GhDec | Method::GhInc | Method::IntervalGhDec | Method::IntervalGhInc => {
                (2.0 * omega + eps, "2*omega(1/n) + eps".into())
            }
            Method::GDiff => (
                (2.0 * n as f64 + 2.0) * omega + eps,
                "(2n+2)*omega(1/n) + eps".into(),
            ),
            Method::Trapezoid => (3.0 * omega, "3*omega(1/n)".into()),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One coefficient function of an approximant.
#[derive(Debug, Clone)]
pub enum Coefficient {
    Psi(JewettPoly),
    OneMinusPsi(JewettPoly),
    Phi { family: PhiFamily, index: usize },
}

impl Coefficient {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Coefficient::Psi(p) => p.eval(x),
            Coefficient::OneMinusPsi(p) => 1.0 - p.eval(x),
            Coefficient::Phi { family, index } => family.eval(*index, x),
        }
    }
}

/// A fuzzy approximant: a base fuzzy number plus coefficient-weighted
/// difference terms, evaluable at any `x` in `[0,1]`.
#[derive(Clone)]
pub struct Approximant {
    method: Method,
    base: FuzzyNumber,
    terms: Vec<(Coefficient, FuzzyNumber)>,
    n: usize,
    delta: f64,
    eps: f64,
}

impl Approximant {
    pub fn method(&self) -> Method {
        self.method
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn terms(&self) -> &[(Coefficient, FuzzyNumber)] {
        &self.terms
    }

    /// `base + sum_j c_j(x) * delta_j`, computed level-wise.
    pub fn eval(&self, x: f64) -> Result<FuzzyNumber> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::DomainError(x));
        }
        let mut acc = self.base.clone();
        for (coeff, delta) in &self.terms {
            acc = acc.add(&delta.scale(coeff.eval(x)))?;
        }
        Ok(acc)
    }
}

/// Interval-level analogue of [`Approximant`].
#[derive(Debug, Clone)]
pub struct IntervalApproximant {
    method: Method,
    base: Interval,
    terms: Vec<(Coefficient, Interval)>,
    n: usize,
    delta: f64,
    eps: f64,
}

impl IntervalApproximant {
    pub fn method(&self) -> Method {
        self.method
    }

    pub fn eval(&self, x: f64) -> Result<Interval> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::DomainError(x));
        }
        let mut acc = self.base;
        for (coeff, delta) in &self.terms {
            acc = acc.minkowski_add(&delta.scale(coeff.eval(x)));
        }
        Ok(acc)
    }
}

fn check_params(n: usize, delta: f64, eps: f64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParams("need n >= 1".into()));
    }
    if !(delta > 0.0 && delta < 1.0 / (2.0 * n as f64)) {
        return Err(Error::InvalidParams(format!(
            "need 0 < delta < 1/(2n), got {delta} for n = {n}"
        )));
    }
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::InvalidParams(format!(
            "need 0 < eps < 1/2, got {eps}"
        )));
    }
    Ok(())
}

/// Default band half-width: centered in the admissible range `(0, 1/(2n))`.
pub fn default_delta(n: usize) -> f64 {
    1.0 / (4.0 * n as f64)
}

/// Step tolerance for the psi family: `eps' < eps / (2(n+1)M)` where `2M`
/// bounds the pairwise diameter. `M` is probed on a coarse grid and then
/// doubled, which keeps the rule valid for any upper bound.
pub fn step_tolerance(eps: f64, n: usize, max_pair_dist: f64) -> f64 {
    let m = (0.5 * max_pair_dist).max(1.0) * 2.0;
    0.5 * eps / (2.0 * (n + 1) as f64 * m)
}

/// Max pairwise `d_infty` of `f` over a coarse probe grid.
pub fn fuzzy_diameter(f: &FuzzyFunction) -> Result<f64> {
    let vals: Vec<FuzzyNumber> = (0..DIAMETER_PROBES)
        .map(|i| f.eval(i as f64 / (DIAMETER_PROBES - 1) as f64))
        .collect::<Result<Vec<_>>>()?;
    let mut max = 0.0f64;
    for i in 0..vals.len() {
        for j in (i + 1)..vals.len() {
            max = max.max(vals[i].d_infty(&vals[j])?);
        }
    }
    Ok(max)
}

fn interval_diameter(f: &IntervalFunction) -> Result<f64> {
    let vals: Vec<Interval> = (0..DIAMETER_PROBES)
        .map(|i| f.eval(i as f64 / (DIAMETER_PROBES - 1) as f64))
        .collect::<Result<Vec<_>>>()?;
    let mut max = 0.0f64;
    for i in 0..vals.len() {
        for j in (i + 1)..vals.len() {
            max = max.max(vals[i].hausdorff(&vals[j]));
        }
    }
    Ok(max)
}

fn nodes(f: &FuzzyFunction, n: usize) -> Result<Vec<FuzzyNumber>> {
    (0..=n).map(|j| f.eval(j as f64 / n as f64)).collect()
}

/// `g(x) = u_n + sum_j psi_j(x) (u_j gh- u_{j+1})`; needs the forward gH
/// chain and downward nesting of the target.
pub fn build_gh_dec(f: &FuzzyFunction, n: usize, eps: f64, delta: f64) -> Result<Approximant> {
    check_params(n, delta, eps)?;
    if !f.check_nested_decreasing(DEFAULT_PROBES) {
        return Err(Error::HypothesisViolated("nesting hypothesis failed".into()));
    }
    if !f.check_gh_chain(n, ChainDirection::Forward) {
        return Err(Error::GHDifferenceUndefined);
    }
    let u = nodes(f, n)?;
    let psi = PsiFamily::build(n, delta, step_tolerance(eps, n, fuzzy_diameter(f)?))?;
    let terms = (0..n)
        .map(|j| {
            Ok((
                Coefficient::Psi(*psi.member(j)),
                u[j].gh_difference(&u[j + 1])?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Approximant {
        method: Method::GhDec,
        base: u[n].clone(),
        terms,
        n,
        delta,
        eps,
    })
}

/// `g(x) = u_0 + sum_j (1 - psi_j(x)) (u_{j+1} gh- u_j)`; needs the
/// backward gH chain and upward nesting.
pub fn build_gh_inc(f: &FuzzyFunction, n: usize, eps: f64, delta: f64) -> Result<Approximant> {
    check_params(n, delta, eps)?;
    if !f.check_nested_increasing(DEFAULT_PROBES) {
        return Err(Error::HypothesisViolated("nesting hypothesis failed".into()));
    }
    if !f.check_gh_chain(n, ChainDirection::Backward) {
        return Err(Error::GHDifferenceUndefined);
    }
    let u = nodes(f, n)?;
    let psi = PsiFamily::build(n, delta, step_tolerance(eps, n, fuzzy_diameter(f)?))?;
    let terms = (0..n)
        .map(|j| {
            Ok((
                Coefficient::OneMinusPsi(*psi.member(j)),
                u[j + 1].gh_difference(&u[j])?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Approximant {
        method: Method::GhInc,
        base: u[0].clone(),
        terms,
        n,
        delta,
        eps,
    })
}

/// `h(x) = u_n + sum_j psi_j(x) (u_j g- u_{j+1})`; the g-difference is
/// total, so only downward nesting is required. The price is the
/// `(2n+2) omega` bound.
pub fn build_g(f: &FuzzyFunction, n: usize, eps: f64, delta: f64) -> Result<Approximant> {
    check_params(n, delta, eps)?;
    if !f.check_nested_decreasing(DEFAULT_PROBES) {
        return Err(Error::HypothesisViolated("nesting hypothesis failed".into()));
    }
    let u = nodes(f, n)?;
    let psi = PsiFamily::build(n, delta, step_tolerance(eps, n, fuzzy_diameter(f)?))?;
    let terms = (0..n)
        .map(|j| {
            Ok((
                Coefficient::Psi(*psi.member(j)),
                u[j].g_difference(&u[j + 1])?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Approximant {
        method: Method::GDiff,
        base: u[n].clone(),
        terms,
        n,
        delta,
        eps,
    })
}

/// `T_{n,delta}(x) = sum_k phi_k(x) f(a_k)`; applies to any continuous
/// fuzzy function.
pub fn build_trapezoid(f: &FuzzyFunction, n: usize, delta: f64) -> Result<Approximant> {
    check_params(n, delta, 0.25)?;
    let phi = PhiFamily::build(n, delta)?;
    let u = nodes(f, n)?;
    let terms = u
        .iter()
        .enumerate()
        .map(|(k, uk)| {
            (
                Coefficient::Phi {
                    family: phi.clone(),
                    index: k,
                },
                uk.clone(),
            )
        })
        .collect();
    Ok(Approximant {
        method: Method::Trapezoid,
        base: FuzzyNumber::crisp(0.0, f.grid()),
        terms,
        n,
        delta,
        eps: 0.0,
    })
}

/// Interval construction `g(x) = A_n + sum_j psi_j(x) (A_j gh- A_{j+1})`
/// for slices with nonincreasing length.
pub fn build_interval_gh_dec(
    f: &IntervalFunction,
    n: usize,
    eps: f64,
    delta: f64,
) -> Result<IntervalApproximant> {
    check_params(n, delta, eps)?;
    if !f.len_nonincreasing(DEFAULT_PROBES) {
        return Err(Error::HypothesisViolated(
            "interval length is not nonincreasing".into(),
        ));
    }
    let a: Vec<Interval> = (0..=n)
        .map(|j| f.eval(j as f64 / n as f64))
        .collect::<Result<Vec<_>>>()?;
    let psi = PsiFamily::build(n, delta, step_tolerance(eps, n, interval_diameter(f)?))?;
    let terms = (0..n)
        .map(|j| (Coefficient::Psi(*psi.member(j)), a[j].gh_diff(&a[j + 1])))
        .collect();
    Ok(IntervalApproximant {
        method: Method::IntervalGhDec,
        base: a[n],
        terms,
        n,
        delta,
        eps,
    })
}

/// Interval construction `g(x) = A_0 + sum_j (1 - psi_j(x)) (A_{j+1} gh- A_j)`
/// for slices with nondecreasing length.
pub fn build_interval_gh_inc(
    f: &IntervalFunction,
    n: usize,
    eps: f64,
    delta: f64,
) -> Result<IntervalApproximant> {
    check_params(n, delta, eps)?;
    if !f.len_nondecreasing(DEFAULT_PROBES) {
        return Err(Error::HypothesisViolated(
            "interval length is not nondecreasing".into(),
        ));
    }
    let a: Vec<Interval> = (0..=n)
        .map(|j| f.eval(j as f64 / n as f64))
        .collect::<Result<Vec<_>>>()?;
    let psi = PsiFamily::build(n, delta, step_tolerance(eps, n, interval_diameter(f)?))?;
    let terms = (0..n)
        .map(|j| {
            (
                Coefficient::OneMinusPsi(*psi.member(j)),
                a[j + 1].gh_diff(&a[j]),
            )
        })
        .collect();
    Ok(IntervalApproximant {
        method: Method::IntervalGhInc,
        base: a[0],
        terms,
        n,
        delta,
        eps,
    })
}

/// Sample points for sup-distance measurement: a uniform grid plus the
/// nodes `a_j` and band edges `a_j +- delta`, where the piecewise
/// structure concentrates extrema.
fn sample_points(samples: usize, n: usize, delta: f64) -> Vec<f64> {
    assert!(samples >= 2);
    let mut xs: Vec<f64> = (0..samples)
        .map(|i| i as f64 / (samples - 1) as f64)
        .collect();
    for j in 0..=n {
        let aj = j as f64 / n as f64;
        for x in [aj, aj - delta, aj + delta] {
            if (0.0..=1.0).contains(&x) {
                xs.push(x);
            }
        }
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    xs
}

fn make_report(
    method: Method,
    n: usize,
    delta: f64,
    eps: f64,
    modulus: crate::function::ModulusEstimate,
    per_sample: Vec<(f64, f64)>,
) -> ErrorReport {
    let sup_distance = per_sample.iter().map(|&(_, d)| d).fold(0.0, f64::max);
    let (bound_value, bound_formula) = method.bound(modulus.value, n, eps);
    let pass = if !modulus.source.certifies() {
        Verdict::Indicative
    } else if sup_distance <= bound_value + REPORT_TOL {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    ErrorReport {
        method,
        n,
        delta,
        eps,
        sup_distance,
        modulus_value: modulus.value,
        modulus_source: modulus.source,
        bound_value,
        bound_formula,
        pass,
        per_sample,
    }
}

/// Measures `sup_x d_infty(f(x), A(x))` over the sample set and fills an
/// [`ErrorReport`] with the bound matching the approximant's method.
pub fn sup_distance(f: &FuzzyFunction, a: &Approximant, samples: usize) -> Result<ErrorReport> {
    let xs = sample_points(samples, a.n, a.delta);
    let per_sample = xs
        .iter()
        .map(|&x| Ok((x, f.eval(x)?.d_infty(&a.eval(x)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let modulus = f.modulus(1.0 / a.n as f64);
    Ok(make_report(a.method, a.n, a.delta, a.eps, modulus, per_sample))
}

/// Interval-level analogue of [`sup_distance`].
pub fn sup_distance_interval(
    f: &IntervalFunction,
    a: &IntervalApproximant,
    samples: usize,
) -> Result<ErrorReport> {
    let xs = sample_points(samples, a.n, a.delta);
    let per_sample = xs
        .iter()
        .map(|&x| Ok((x, f.eval(x)?.hausdorff(&a.eval(x)?))))
        .collect::<Result<Vec<_>>>()?;
    let modulus = f.modulus(1.0 / a.n as f64);
    Ok(make_report(a.method, a.n, a.delta, a.eps, modulus, per_sample))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{catalog, CatalogParams, FunctionKind};
    use crate::fuzzy::AlphaGrid;

    fn grid() -> AlphaGrid {
        AlphaGrid::uniform(100)
    }

    fn cat(name: &str, u: Option<(f64, f64, f64)>) -> FuzzyFunction {
        catalog(name, &CatalogParams { u, grid: grid() }).unwrap()
    }

    fn constant_fn(u: FuzzyNumber) -> FuzzyFunction {
        let g = u.grid().clone();
        FuzzyFunction::from_parts(g, FunctionKind::Sampled, move |_| u.clone())
    }

    #[test]
    fn gh_dec_bound_on_scaled_exp() {
        let f = cat("scaled_exp", Some((-1.0, 0.0, 1.0)));
        for n in [4usize, 8, 16] {
            let eps = 1e-3;
            let a = build_gh_dec(&f, n, eps, default_delta(n)).unwrap();
            let report = sup_distance(&f, &a, 257).unwrap();
            let omega = 1.0 - (-1.0 / n as f64).exp();
            assert!(
                report.sup_distance <= 2.0 * omega + eps + 1e-12,
                "n = {n}: {} > {}",
                report.sup_distance,
                2.0 * omega + eps
            );
            assert_eq!(report.pass, Verdict::Pass);
        }
    }

    #[test]
    fn gh_dec_rejects_bump_width() {
        let f = cat("bump_width", None);
        assert!(matches!(
            build_gh_dec(&f, 4, 1e-3, default_delta(4)),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn gh_inc_bound_on_scaled_linear() {
        let f = cat("scaled_linear", None);
        let n = 8;
        let eps = 1e-3;
        let a = build_gh_inc(&f, n, eps, default_delta(n)).unwrap();
        let report = sup_distance(&f, &a, 257).unwrap();
        assert!(report.sup_distance <= 2.0 / n as f64 + eps + 1e-12);
        assert_eq!(report.pass, Verdict::Pass);
    }

    #[test]
    fn gh_inc_rejects_scaled_exp() {
        let f = cat("scaled_exp", Some((-1.0, 0.0, 1.0)));
        assert!(matches!(
            build_gh_inc(&f, 4, 1e-3, default_delta(4)),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn constant_function_error_stays_below_eps() {
        let g = grid();
        let f = constant_fn(FuzzyNumber::triangular(-1.0, 0.5, 3.0, &g).unwrap());
        let eps = 1e-3;
        for (name, a) in [
            ("gh_dec", build_gh_dec(&f, 4, eps, default_delta(4)).unwrap()),
            ("gh_inc", build_gh_inc(&f, 4, eps, default_delta(4)).unwrap()),
            ("g_diff", build_g(&f, 4, eps, default_delta(4)).unwrap()),
            ("trapezoid", build_trapezoid(&f, 4, default_delta(4)).unwrap()),
        ] {
            let report = sup_distance(&f, &a, 101).unwrap();
            assert!(report.sup_distance <= eps, "{name}: {}", report.sup_distance);
        }
    }

    #[test]
    fn g_diff_matches_gh_dec_when_chain_exists() {
        let f = cat("scaled_exp", Some((-1.0, 0.0, 1.0)));
        let n = 8;
        let gh = build_gh_dec(&f, n, 1e-3, default_delta(n)).unwrap();
        let g = build_g(&f, n, 1e-3, default_delta(n)).unwrap();
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            let d = gh.eval(x).unwrap().d_infty(&g.eval(x).unwrap()).unwrap();
            assert!(d <= 1e-10, "x = {x}: {d}");
        }
    }

    #[test]
    fn g_diff_bound_on_scaled_exp() {
        let f = cat("scaled_exp", Some((-1.0, 0.0, 1.0)));
        let n = 8;
        let a = build_g(&f, n, 1e-3, default_delta(n)).unwrap();
        let report = sup_distance(&f, &a, 257).unwrap();
        assert_eq!(report.pass, Verdict::Pass);
        // The (2n+2) bound leaves large slack for this entry.
        assert!(report.sup_distance < 0.2 * report.bound_value);
    }

    #[test]
    fn trapezoid_reproduces_nodes_inside_w_bands() {
        let f = cat("bump_width", None);
        let n = 4;
        let delta = default_delta(n);
        let a = build_trapezoid(&f, n, delta).unwrap();
        // Midpoint of the W band between a_1 + delta and a_2 - delta.
        let x = (0.25 + delta + 0.5 - delta) / 2.0;
        let k = 2;
        let want = f.eval(k as f64 / n as f64).unwrap();
        assert!(a.eval(x).unwrap().d_infty(&want).unwrap() <= 1e-15);
    }

    #[test]
    fn trapezoid_averages_at_interior_nodes() {
        let f = cat("scaled_exp", Some((0.0, 1.0, 2.0)));
        let n = 4;
        let a = build_trapezoid(&f, n, default_delta(n)).unwrap();
        for j in 1..n {
            let x = j as f64 / n as f64;
            let want = f
                .eval(x)
                .unwrap()
                .scale(0.5)
                .add(&f.eval((j + 1) as f64 / n as f64).unwrap().scale(0.5))
                .unwrap();
            assert!(a.eval(x).unwrap().d_infty(&want).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn trapezoid_bound_on_bump_width() {
        let f = cat("bump_width", None);
        for n in [4usize, 8, 16] {
            let a = build_trapezoid(&f, n, default_delta(n)).unwrap();
            let report = sup_distance(&f, &a, 257).unwrap();
            assert_eq!(report.pass, Verdict::Pass, "n = {n}: {report:?}");
        }
    }

    #[test]
    fn eval_rejects_out_of_domain() {
        let f = cat("crisp_ident", None);
        let a = build_trapezoid(&f, 4, default_delta(4)).unwrap();
        assert!(matches!(a.eval(1.25), Err(Error::DomainError(_))));
    }

    #[test]
    fn report_sup_equals_max_per_sample() {
        let f = cat("scaled_exp", Some((-1.0, 0.0, 1.0)));
        let a = build_trapezoid(&f, 4, default_delta(4)).unwrap();
        let report = sup_distance(&f, &a, 101).unwrap();
        let max = report.per_sample.iter().map(|&(_, d)| d).fold(0.0, f64::max);
        assert_eq!(report.sup_distance, max);
    }

    #[test]
    fn interval_gh_dec_bound() {
        // f_alpha(x) = [0, e^-x]: width decreasing.
        let f = IntervalFunction::new(|x| Interval::new(0.0, (-x).exp()).unwrap())
            .with_modulus(|d| 1.0 - (-d.min(1.0)).exp());
        let n = 8;
        let eps = 1e-3;
        let a = build_interval_gh_dec(&f, n, eps, default_delta(n)).unwrap();
        let report = sup_distance_interval(&f, &a, 257).unwrap();
        assert_eq!(report.pass, Verdict::Pass, "{report:?}");
    }

    #[test]
    fn interval_gh_dec_accepts_shrinking_width() {
        let f = IntervalFunction::new(|x| Interval::new(x, 2.0 - x).unwrap());
        assert!(build_interval_gh_dec(&f, 4, 1e-3, default_delta(4)).is_ok());
    }

    #[test]
    fn interval_gh_inc_bound_and_rejection() {
        let f = IntervalFunction::new(|x| Interval::new(-x, x).unwrap())
            .with_modulus(|d| 2.0 * d.min(1.0));
        let n = 8;
        let a = build_interval_gh_inc(&f, n, 1e-3, default_delta(n)).unwrap();
        let report = sup_distance_interval(&f, &a, 257).unwrap();
        assert_eq!(report.pass, Verdict::Pass, "{report:?}");

        let dec = IntervalFunction::new(|x| Interval::new(0.0, (-x).exp()).unwrap());
        assert!(matches!(
            build_interval_gh_inc(&dec, 4, 1e-3, default_delta(4)),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn constant_interval_function_is_reproduced() {
        let f = IntervalFunction::new(|_| Interval::new(1.0, 3.0).unwrap());
        let a = build_interval_gh_dec(&f, 4, 1e-3, default_delta(4)).unwrap();
        for i in 0..=32 {
            let x = i as f64 / 32.0;
            assert!(f.eval(x).unwrap().hausdorff(&a.eval(x).unwrap()) <= 1e-3);
        }
    }
}
