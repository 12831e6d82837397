//! Machine-readable outcome of one approximation experiment: the measured
//! sup-distance, the modulus value that feeds the theoretical bound, and a
//! pass/fail/indicative verdict.

use serde::{Deserialize, Serialize};

use crate::approximant::Method;

/// Where a modulus value came from. Only analytic or certified-upper
/// values may certify a bound; a sampled supremum is a lower estimate and
/// can only yield an indicative verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusSource {
    Analytic,
    CertifiedUpper,
    LowerEstimate,
}

impl ModulusSource {
    pub fn certifies(self) -> bool {
        !matches!(self, ModulusSource::LowerEstimate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Indicative,
}

impl Verdict {
    /// The CSV spelling of the verdict.
    pub fn as_csv(&self) -> &'static str {
        match self {
            Verdict::Pass => "true",
            Verdict::Fail => "false",
            Verdict::Indicative => "indicative",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorReport {
    pub method: Method,
    pub n: usize,
    pub delta: f64,
    pub eps: f64,
    pub sup_distance: f64,
    pub modulus_value: f64,
    pub modulus_source: ModulusSource,
    pub bound_value: f64,
    pub bound_formula: String,
    pub pass: Verdict,
    pub per_sample: Vec<(f64, f64)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let r = ErrorReport {
            method: Method::Trapezoid,
            n: 8,
            delta: 1.0 / 32.0,
            eps: 0.0,
            sup_distance: 0.125,
            modulus_value: 0.05,
            modulus_source: ModulusSource::Analytic,
            bound_value: 0.15,
            bound_formula: "3*omega(1/n)".into(),
            pass: Verdict::Pass,
            per_sample: vec![(0.0, 0.1), (1.0, 0.125)],
        };
        let json = serde_json::to_string(&r).unwrap();
        let back: ErrorReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.sup_distance, r.sup_distance);
        assert_eq!(back.pass, Verdict::Pass);
        assert_eq!(back.per_sample, r.per_sample);
    }

    #[test]
    fn verdict_csv_spellings() {
        assert_eq!(Verdict::Pass.as_csv(), "true");
        assert_eq!(Verdict::Fail.as_csv(), "false");
        assert_eq!(Verdict::Indicative.as_csv(), "indicative");
    }
}
