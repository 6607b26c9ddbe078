//! Extremal functions and the non-injectivity witness for sharpness.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LandauError, Result};
use crate::polyfn::{ClosedForm, Component, PolyFn, PolyKind};
use crate::radii::{landau_radii, LandauParams, Variant};
use crate::series::{series_divide, AnalyticSeries, DEFAULT_ORDER};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ExtremalSpec {
    /// `M_0^2 z + (M_0^3 - M_0) log(1 - z/M_0) - sum M_k conj(z)^k z^{p_k} / p_k!`
    G1(LandauParams),
    /// `M_0^2 z + (M_0^3 - M_0) log(1 - z/M_0) - sum M_k |z|^{2k} z`
    G4(LandauParams),
    /// `M z (1 - M z) / (M - z)`, extremal for the classical theorem.
    ClassicalF0 { bound: f64 },
    /// `M z (1 - M z^{n-1}) / (M - z^{n-1})`, extremal for the `n`-th coefficient.
    Lemma1 { n: usize, bound: f64 },
}

/// Two distinct real points with (numerically) the same image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SharpnessWitness {
    pub x1: f64,
    pub x2: f64,
    /// `|F(x1) - F(x2)|` under the full complex extremal.
    pub image_gap: f64,
    /// The step past the radius was capped by the second zero of the real profile.
    pub capped: bool,
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Series of the coefficient extremal `f_n` for `|f| <= M`, truncated at `order`.
pub fn lemma1_extremal_series(n: usize, bound: f64, order: usize) -> Result<AnalyticSeries> {
    if n == 0 || !(bound >= 1.0) {
        return Err(LandauError::InvalidParams(format!("need n >= 1 and M >= 1, got n = {n}, M = {bound}")));
    }
    if n == 1 {
        return Ok(AnalyticSeries::identity().truncate(order.max(1)));
    }
    let c = |x: f64| Complex64::new(x, 0.0);
    let num = AnalyticSeries::monomial(1, c(bound), n).add(&AnalyticSeries::monomial(n, c(-bound * bound), n));
    let den = AnalyticSeries::monomial(0, c(bound), n - 1).add(&AnalyticSeries::monomial(n - 1, c(-1.0), n - 1));
    series_divide(&num, &den, order)
}

fn require(params: &LandauParams, variant: Variant, name: &str) -> Result<()> {
    if params.variant() == variant {
        Ok(())
    } else {
        Err(LandauError::InvalidParams(format!("{name} needs {variant} parameters, got {}", params.variant())))
    }
}

pub fn build_extremal(spec: &ExtremalSpec) -> Result<PolyFn> {
    let c = |x: f64| Complex64::new(x, 0.0);
    match spec {
        ExtremalSpec::G1(params) => {
            require(params, Variant::T1, "G1")?;
            let mut components = vec![Component::Closed(ClosedForm::LandauLog { m0: params.bounds()[0] })];
            for (&mk, &p) in params.bounds()[1..].iter().zip(params.orders()) {
                let term = AnalyticSeries::monomial(p as usize, c(-mk / factorial(p)), p as usize);
                components.push(term.into());
            }
            PolyFn::new(PolyKind::ConjugatePower, components)
        }
        ExtremalSpec::G4(params) => {
            require(params, Variant::T4, "G4")?;
            let mut components = vec![Component::Closed(ClosedForm::LandauLog { m0: params.bounds()[0] })];
            for &mk in &params.bounds()[1..] {
                components.push(AnalyticSeries::monomial(1, c(-mk), 1).into());
            }
            PolyFn::new(PolyKind::ModulusPower, components)
        }
        ExtremalSpec::ClassicalF0 { bound } => Ok(PolyFn::analytic(lemma1_extremal_series(2, *bound, DEFAULT_ORDER)?)),
        ExtremalSpec::Lemma1 { n, bound } => Ok(PolyFn::analytic(lemma1_extremal_series(*n, *bound, DEFAULT_ORDER)?)),
    }
}

/// Restriction of G1 or G4 to the real segment `[0, 1]`.
pub fn g2_profile(spec: &ExtremalSpec, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(LandauError::Domain(format!("x = {x} outside [0, 1]")));
    }
    let (params, reduced) = match spec {
        ExtremalSpec::G1(p) => (p, false),
        ExtremalSpec::G4(p) => (p, true),
        _ => return Err(LandauError::InvalidParams("the real profile is defined for G1 and G4 only".into())),
    };
    require(params, if reduced { Variant::T4 } else { Variant::T1 }, "real profile")?;
    Ok(g2_unchecked(params, reduced, x))
}

fn g2_unchecked(params: &LandauParams, reduced: bool, x: f64) -> f64 {
    let m0 = params.bounds()[0];
    let head = m0 * m0 * x + (m0 * m0 * m0 - m0) * (1.0 - x / m0).ln();
    let tail: f64 = if reduced {
        params.bounds()[1..].iter().enumerate().map(|(i, &mk)| mk * x.powi(2 * (i as i32 + 1) + 1)).sum()
    } else {
        params.bounds()[1..]
            .iter()
            .zip(params.orders())
            .enumerate()
            .map(|(i, (&mk, &p))| mk * x.powi(i as i32 + 1 + p as i32) / factorial(p))
            .sum()
    };
    head - tail
}

/// Bisection for `f(x) = 0` given `f(a) > 0 >= f(b)`, run to floating-point resolution.
fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if !(mid > a.min(b) && mid < a.max(b)) {
            break;
        }
        if f(mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Two points inside `D_r` on which the extremal coincides, for any `r`
/// beyond the univalence radius.
pub fn sharpness_witness(spec: &ExtremalSpec, r: f64) -> Result<SharpnessWitness> {
    let (params, reduced) = match spec {
        ExtremalSpec::G1(p) => (p, false),
        ExtremalSpec::G4(p) => (p, true),
        _ => return Err(LandauError::InvalidParams("sharpness witnesses exist for G1 and G4 only".into())),
    };
    let f = build_extremal(spec)?;
    let r0 = landau_radii(params)?.radius;
    if !(r > r0 && r <= 1.0) {
        return Err(LandauError::Precondition(format!("r = {r} must lie in (r0, 1] with r0 = {r0}")));
    }
    let g = |x: f64| g2_unchecked(params, reduced, x);
    let peak = g(r0);
    if !(peak > 0.0) {
        return Err(LandauError::Precondition(format!(
            "real profile at the radius is {peak}, not positive; the witness construction does not apply"
        )));
    }
    let half_gap = 0.5 * (r - r0);
    let (eps, capped) = if g(1.0) <= 0.0 {
        let r2 = bisect(g, r0, 1.0);
        let cap = 0.5 * (r2 - r0);
        (half_gap.min(cap), cap < half_gap)
    } else {
        (half_gap, false)
    };
    let x1 = r0 + eps;
    let target = g(x1);
    // increasing branch on [0, r0]
    let x2 = bisect(|x| target - g(x), 0.0, r0);
    let image_gap = (f.eval(Complex64::new(x1, 0.0))? - f.eval(Complex64::new(x2, 0.0))?).norm();
    Ok(SharpnessWitness { x1, x2, image_gap, capped })
}
