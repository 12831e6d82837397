//! Smooth step functions built from polynomials of the form
//! `p(x) = (1 - x^m)^n`, the derived family of `n + 1` steps `psi_j`
//! anchored at the nodes `a_j = j/n`, and the trapezoidal piecewise-linear
//! partition of unity `phi_j`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const M_CAP: u64 = 10_000_000;

/// `p(x) = (1 - x^m)^n`, monotone nonincreasing on `[0,1]` with
/// `p(0) = 1`, `p(1) = 0`.
///
/// The exponent `n` is an integer but is kept as its natural logarithm:
/// for narrow transition bands `n` routinely exceeds the `f64` range
/// (beyond 2^53 every finite `f64` is itself an exact integer, so the
/// represented value stays a genuine exponent).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct JewettPoly {
    m: u64,
    ln_n: f64,
}

/// `ln(-ln(1 - x^m))` computed from `lt = ln(x^m)` without underflow:
/// for tiny `x^m`, `-ln(1 - x^m) ~ x^m`.
fn ln_neg_ln_one_minus(lt: f64) -> f64 {
    if lt < -37.0 {
        lt
    } else {
        (-(-lt.exp()).ln_1p()).ln()
    }
}

impl JewettPoly {
    /// Finds the minimal `m` (and smallest exponent for it) such that
    /// `p(a) > 1 - eps` and `p(b) < eps`; by monotonicity these endpoint
    /// conditions give `p > 1 - eps` on `[0, a]` and `p < eps` on `[b, 1]`.
    pub fn search(a: f64, b: f64, eps: f64) -> Result<Self> {
        if !(0.0 <= a && a < b && b <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "need 0 <= a < b <= 1, got a = {a}, b = {b}"
            )));
        }
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Error::InvalidParams(format!(
                "need 0 < eps < 1/2, got eps = {eps}"
            )));
        }
        let ln_a = a.ln(); // -inf for a = 0
        let ln_b = b.ln(); // 0 for b = 1
        // Valid exponents n satisfy
        //   n > ln(eps) / ln(1 - b^m)   (low side)  and
        //   n < ln(1-eps) / ln(1 - a^m) (high side; vacuous for a = 0).
        let ln_num_lo = (1.0 / eps).ln().ln();
        let ln_num_hi = (-(-eps).ln_1p()).ln();
        for m in 1..=M_CAP {
            let mf = m as f64;
            // b = 1 makes the low side vacuous (p(1) = 0 < eps for any n).
            let ln_n_lo = if b >= 1.0 {
                f64::NEG_INFINITY
            } else {
                ln_num_lo - ln_neg_ln_one_minus(mf * ln_b)
            };
            let ln_n_hi = if a <= 0.0 {
                f64::INFINITY
            } else {
                ln_num_hi - ln_neg_ln_one_minus(mf * ln_a)
            };
            if ln_n_lo >= ln_n_hi {
                continue;
            }
            let candidate = if ln_n_lo < 36.0 {
                // Small regime: pick the smallest integer strictly above n_lo.
                let n_lo = if ln_n_lo.is_finite() { ln_n_lo.exp() } else { 0.0 };
                let n = (n_lo.floor() + 1.0).max(1.0);
                Self { m, ln_n: n.ln() }
            } else {
                // Huge regime: any f64 above 2^53 is an exact integer; nudge
                // just past n_lo.
                Self {
                    m,
                    ln_n: ln_n_lo + 1e-9,
                }
            };
            // Accept only if the endpoint conditions verify by evaluation.
            if candidate.log_eval(a) > (-eps).ln_1p() && candidate.log_eval(b) < eps.ln() {
                return Ok(candidate);
            }
        }
        Err(Error::SearchExhausted)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// The exponent as `f64`; infinite when it exceeds the `f64` range.
    pub fn n_exp(&self) -> f64 {
        self.ln_n.exp()
    }

    pub fn ln_n(&self) -> f64 {
        self.ln_n
    }

    /// `ln p(x)`; everything runs in log space so exponents of any size
    /// classify correctly near the thresholds.
    pub fn log_eval(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else if x >= 1.0 {
            f64::NEG_INFINITY
        } else {
            let lt = self.m as f64 * x.ln();
            -(self.ln_n + ln_neg_ln_one_minus(lt)).exp()
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.log_eval(x).exp()
    }
}

/// The `n + 1` smooth steps `psi_0 ... psi_n`: `psi_j` stays above
/// `1 - eps` up to `a_j - delta` and drops below `eps` past `a_j + delta`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PsiFamily {
    n: usize,
    delta: f64,
    eps: f64,
    members: Vec<JewettPoly>,
}

fn check_band_params(n: usize, delta: f64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParams("need n >= 1".into()));
    }
    if !(delta > 0.0 && delta < 1.0 / (2.0 * n as f64)) {
        return Err(Error::InvalidParams(format!(
            "need 0 < delta < 1/(2n), got delta = {delta} for n = {n}"
        )));
    }
    Ok(())
}

impl PsiFamily {
    pub fn build(n: usize, delta: f64, eps: f64) -> Result<Self> {
        check_band_params(n, delta)?;
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Error::InvalidParams(format!(
                "need 0 < eps < 1/2, got eps = {eps}"
            )));
        }
        let members = (0..=n)
            .map(|j| {
                let aj = j as f64 / n as f64;
                // Edge members use a = 0 (j = 0) and b = 1 (j = n).
                let a = (aj - delta).max(0.0);
                let b = (aj + delta).min(1.0);
                JewettPoly::search(a, b, eps)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            delta,
            eps,
            members,
        })
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

    pub fn member(&self, j: usize) -> &JewettPoly {
        &self.members[j]
    }

    pub fn eval(&self, j: usize, x: f64) -> f64 {
        self.members[j].eval(x)
    }
}

/// Trapezoidal piecewise-linear partition of unity: `n + 1` members that
/// sum to one with at most two nonzero at any point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhiFamily {
    n: usize,
    delta: f64,
}

impl PhiFamily {
    pub fn build(n: usize, delta: f64) -> Result<Self> {
        check_band_params(n, delta)?;
        Ok(Self { n, delta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The descending ramps `f_j`: value 1 before `a_j - delta`, 0 after
    /// `a_j + delta`, linear in between (`f_0` ramps down on `[0, delta]`).
    fn ramp(&self, j: usize, x: f64) -> f64 {
        let d = self.delta;
        if j == 0 {
            if x < d {
                (d - x) / d
            } else {
                0.0
            }
        } else {
            let aj = j as f64 / self.n as f64;
            if x <= aj - d {
                1.0
            } else if x >= aj + d {
                0.0
            } else {
                (aj + d - x) / (2.0 * d)
            }
        }
    }

    /// All member values at `x`: `phi_j = f_j * prod_{i<j} (1 - f_i)`,
    /// `phi_n` the full complementary product; telescoping makes them sum
    /// to one.
    pub fn eval_all(&self, x: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n + 1);
        let mut prod = 1.0;
        for j in 0..self.n {
            let fj = self.ramp(j, x);
            out.push(fj * prod);
            prod *= 1.0 - fj;
        }
        out.push(prod);
        out
    }

    pub fn eval(&self, j: usize, x: f64) -> f64 {
        self.eval_all(x)[j]
    }
}
