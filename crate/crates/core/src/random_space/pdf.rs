//! Probability densities of the random inputs.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Lower bound applied to densities before they are used as divisors.
pub const DENSITY_FLOOR: f64 = 1e-300;

/// One-dimensional probability density with a closed-form evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pdf {
    /// Constant density `1/(hi − lo)` on `[lo, hi]`.
    Uniform { lo: f64, hi: f64 },
    /// Gaussian density. Mass outside the random axis is simply lost.
    Normal { mean: f64, variance: f64 },
    /// Beta(p, q) law mapped affinely onto `[−1, 1]`:
    /// `(1 − ξ)^(q−1) (1 + ξ)^(p−1) / (2^(p+q−1) B(p, q))`.
    BetaShifted { p: f64, q: f64 },
}

impl Pdf {
    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && hi > lo) {
            return Err(Error::Config(format!("uniform density needs lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Pdf::Uniform { lo, hi })
    }

    pub fn normal(mean: f64, variance: f64) -> Result<Self> {
        if !(mean.is_finite() && variance.is_finite() && variance > 0.0) {
            return Err(Error::Config(format!(
                "normal density needs a positive variance, got {variance}"
            )));
        }
        Ok(Pdf::Normal { mean, variance })
    }

    pub fn beta_shifted(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && q.is_finite() && p > 0.0 && q > 0.0) {
            return Err(Error::Config(format!("beta exponents must be positive, got ({p}, {q})")));
        }
        Ok(Pdf::BetaShifted { p, q })
    }

    /// Density at `x`; zero outside the support of uniform and beta laws.
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Pdf::Uniform { lo, hi } => {
                if (lo..=hi).contains(&x) {
                    1.0 / (hi - lo)
                } else {
                    0.0
                }
            }
            Pdf::Normal { mean, variance } => {
                let z = x - mean;
                (-(z * z) / (2.0 * variance)).exp() / (2.0 * PI * variance).sqrt()
            }
            Pdf::BetaShifted { p, q } => {
                if !(-1.0..=1.0).contains(&x) {
                    return 0.0;
                }
                let norm = 2f64.powf(p + q - 1.0) * statrs::function::beta::beta(p, q);
                (1.0 - x).powf(q - 1.0) * (1.0 + x).powf(p - 1.0) / norm
            }
        }
    }

    /// Density clamped from below by [`DENSITY_FLOOR`], safe to divide by.
    pub fn eval_floored(&self, x: f64) -> f64 {
        self.eval(x).max(DENSITY_FLOOR)
    }

    pub fn describe(&self) -> String {
        match *self {
            Pdf::Uniform { lo, hi } => format!("uniform({lo}, {hi})"),
            Pdf::Normal { mean, variance } => format!("normal({mean}, {variance})"),
            Pdf::BetaShifted { p, q } => format!("beta_shifted({p}, {q})"),
        }
    }
}

/// Joint density of independent random variables: `ν(ξ)` or `ν(ξ)·ν(η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointPdf {
    xi: Pdf,
    eta: Option<Pdf>,
}

impl JointPdf {
    pub fn single(xi: Pdf) -> Self {
        Self { xi, eta: None }
    }

    pub fn product(xi: Pdf, eta: Pdf) -> Self {
        Self { xi, eta: Some(eta) }
    }

    pub fn xi(&self) -> &Pdf {
        &self.xi
    }

    pub fn eta(&self) -> Option<&Pdf> {
        self.eta.as_ref()
    }

    pub fn dims(&self) -> usize {
        1 + self.eta.is_some() as usize
    }

    /// `ν(ξ, η)`; `η` is ignored for a single random variable.
    pub fn eval(&self, xi: f64, eta: f64) -> f64 {
        let a = self.xi.eval(xi);
        match &self.eta {
            Some(p) => a * p.eval(eta),
            None => a,
        }
    }

    pub fn eval_floored(&self, xi: f64, eta: f64) -> f64 {
        self.eval(xi, eta).max(DENSITY_FLOOR)
    }

    pub fn describe(&self) -> String {
        match &self.eta {
            Some(p) => format!("{} x {}", self.xi.describe(), p.describe()),
            None => self.xi.describe(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn midpoint_mass(pdf: &Pdf, lo: f64, hi: f64, n: usize) -> f64 {
        let h = (hi - lo) / n as f64;
        (0..n).map(|i| pdf.eval(lo + (i as f64 + 0.5) * h) * h).sum()
    }

    #[test]
    fn uniform_density() {
        let p = Pdf::uniform(-1.0, 1.0).unwrap();
        assert_eq!(p.eval(0.3), 0.5);
        assert_eq!(p.eval(1.5), 0.0);
    }

    #[test]
    fn normal_density_at_mean() {
        let p = Pdf::normal(0.0, 1.0 / 36.0).unwrap();
        let expected = (18.0 / PI).sqrt();
        assert!((p.eval(0.0) - expected).abs() < 1e-14);
        assert!((expected - 2.39365).abs() < 1e-5);
        let x = 0.2;
        assert!((p.eval(x) - expected * (-18.0 * x * x).exp()).abs() < 1e-14);
    }

    #[test]
    fn beta_density() {
        let p = Pdf::beta_shifted(2.0, 4.0).unwrap();
        assert_eq!(p.eval(1.0), 0.0);
        assert_eq!(p.eval(-1.0), 0.0);
        // (1 − ξ)^3 (1 + ξ) / (32 B(2, 4)) with B(2, 4) = 1/20
        let x: f64 = 0.25;
        let direct = (1.0 - x).powi(3) * (1.0 + x) / (32.0 / 20.0);
        assert!((p.eval(x) - direct).abs() < 1e-13);
    }

    #[test]
    fn densities_have_unit_mass() {
        for p in [
            Pdf::uniform(-1.0, 1.0).unwrap(),
            Pdf::normal(0.0, 1.0 / 36.0).unwrap(),
            Pdf::beta_shifted(2.0, 4.0).unwrap(),
        ] {
            let m = midpoint_mass(&p, -1.0, 1.0, 20_000);
            assert!((m - 1.0).abs() < 1e-6, "{}: mass {m}", p.describe());
        }
    }

    #[test]
    fn floor_keeps_tails_positive() {
        let p = Pdf::normal(0.0, 1.0 / 36.0).unwrap();
        assert!(p.eval(40.0) == 0.0);
        assert_eq!(p.eval_floored(40.0), DENSITY_FLOOR);
    }

    #[test]
    fn joint_density_is_a_product() {
        let u = Pdf::uniform(-1.0, 1.0).unwrap();
        let j = JointPdf::product(u, u);
        assert_eq!(j.eval(0.1, -0.7), 0.25);
        assert_eq!(JointPdf::single(u).eval(0.1, 123.0), 0.5);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Pdf::uniform(1.0, -1.0).is_err());
        assert!(Pdf::normal(0.0, 0.0).is_err());
        assert!(Pdf::beta_shifted(-1.0, 2.0).is_err());
    }

    proptest! {
        #[test]
        fn densities_are_nonnegative(x in -3.0f64..3.0, p in 0.5f64..6.0, q in 0.5f64..6.0) {
            prop_assert!(Pdf::beta_shifted(p, q).unwrap().eval(x) >= 0.0);
            prop_assert!(Pdf::normal(0.1, 0.3).unwrap().eval(x) >= 0.0);
            prop_assert!(Pdf::uniform(-1.0, 1.0).unwrap().eval(x) >= 0.0);
        }
    }
}
