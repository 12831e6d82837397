//! Browser bindings for the demo page: each export returns a JSON string
//! ready for canvas plotting.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use fuzzjack_core::{
    build_g, build_gh_dec, build_gh_inc, build_trapezoid, catalog, default_delta, sup_distance,
    AlphaGrid, Approximant, CatalogParams, FuzzyNumber, PhiFamily,
};

const CURVE_POINTS: usize = 401;

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[derive(Serialize)]
struct Band {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

#[derive(Serialize)]
struct ApproximationCurves {
    xs: Vec<f64>,
    target: Band,
    approx: Band,
    sup_distance: f64,
    bound: f64,
    verdict: String,
}

fn build(
    f: &fuzzjack_core::FuzzyFunction,
    method: &str,
    n: usize,
) -> Result<Approximant, fuzzjack_core::Error> {
    let (eps, delta) = (1e-3, default_delta(n));
    match method {
        "gh_dec" => build_gh_dec(f, n, eps, delta),
        "gh_inc" => build_gh_inc(f, n, eps, delta),
        "g_diff" => build_g(f, n, eps, delta),
        "trapezoid" => build_trapezoid(f, n, delta),
        other => Err(fuzzjack_core::Error::InvalidParams(format!(
            "unknown method {other:?}"
        ))),
    }
}

/// Target vs approximant alpha-cut bands for a catalog function, plotted
/// at level `alpha` (a multiple of 1/20).
#[wasm_bindgen]
pub fn approximation_curves(
    function: &str,
    method: &str,
    n: usize,
    alpha: f64,
) -> Result<String, JsError> {
    let params = CatalogParams {
        u: Some((-1.0, 0.0, 1.0)),
        grid: AlphaGrid::uniform(20),
    };
    let f = catalog(function, &params).map_err(err)?;
    let level = f
        .grid()
        .index_of(alpha)
        .ok_or_else(|| JsError::new("alpha must be a multiple of 1/20"))?;
    let a = build(&f, method, n).map_err(err)?;
    let report = sup_distance(&f, &a, 513).map_err(err)?;

    let mut out = ApproximationCurves {
        xs: Vec::new(),
        target: Band { lo: Vec::new(), hi: Vec::new() },
        approx: Band { lo: Vec::new(), hi: Vec::new() },
        sup_distance: report.sup_distance,
        bound: report.bound_value,
        verdict: report.pass.as_csv().to_string(),
    };
    for i in 0..CURVE_POINTS {
        let x = i as f64 / (CURVE_POINTS - 1) as f64;
        let t = f.eval(x).map_err(err)?.cut(level);
        let g = a.eval(x).map_err(err)?.cut(level);
        out.xs.push(x);
        out.target.lo.push(t.lo());
        out.target.hi.push(t.hi());
        out.approx.lo.push(g.lo());
        out.approx.hi.push(g.hi());
    }
    serde_json::to_string(&out).map_err(err)
}

#[derive(Serialize)]
struct PartitionCurves {
    xs: Vec<f64>,
    members: Vec<Vec<f64>>,
    max_sum_error: f64,
}

/// The trapezoidal partition-of-unity members for a given `n`.
#[wasm_bindgen]
pub fn partition_curves(n: usize) -> Result<String, JsError> {
    let phi = PhiFamily::build(n, default_delta(n)).map_err(err)?;
    let mut out = PartitionCurves {
        xs: Vec::new(),
        members: vec![Vec::new(); n + 1],
        max_sum_error: 0.0,
    };
    for i in 0..CURVE_POINTS {
        let x = i as f64 / (CURVE_POINTS - 1) as f64;
        let vals = phi.eval_all(x);
        out.max_sum_error = out
            .max_sum_error
            .max((vals.iter().sum::<f64>() - 1.0).abs());
        out.xs.push(x);
        for (j, v) in vals.iter().enumerate() {
            out.members[j].push(*v);
        }
    }
    serde_json::to_string(&out).map_err(err)
}

#[derive(Serialize)]
struct DifferenceDemo {
    levels: Vec<f64>,
    a: Vec<(f64, f64)>,
    b: Vec<(f64, f64)>,
    gh: Option<Vec<(f64, f64)>>,
    g: Vec<(f64, f64)>,
}

fn cut_pairs(u: &FuzzyNumber) -> Vec<(f64, f64)> {
    u.cuts().iter().map(|c| (c.lo(), c.hi())).collect()
}

/// gH- and g-differences of two triangular fuzzy numbers. `gh` is null
/// when the gH-difference does not exist.
#[wasm_bindgen]
pub fn difference_demo(
    a1: f64,
    a2: f64,
    a3: f64,
    b1: f64,
    b2: f64,
    b3: f64,
) -> Result<String, JsError> {
    let grid = AlphaGrid::uniform(40);
    let a = FuzzyNumber::triangular(a1, a2, a3, &grid).map_err(err)?;
    let b = FuzzyNumber::triangular(b1, b2, b3, &grid).map_err(err)?;
    let gh = if a.gh_exists(&b).map_err(err)? {
        Some(cut_pairs(&a.gh_difference(&b).map_err(err)?))
    } else {
        None
    };
    let out = DifferenceDemo {
        levels: grid.levels().to_vec(),
        a: cut_pairs(&a),
        b: cut_pairs(&b),
        gh,
        g: cut_pairs(&a.g_difference(&b).map_err(err)?),
    };
    serde_json::to_string(&out).map_err(err)
}
