//! Random functions satisfying each theorem's hypotheses.
//!
//! Bounds are certified through coefficient sums: a series with
//! `sum |c_n| <= M` is bounded by `M` on the whole disk, so no boundary
//! optimization is needed and nothing is accepted on grid evidence alone.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::sampling;
use crate::error::{LandauError, Result};
use crate::polyfn::{PolyFn, PolyKind};
use crate::radii::{LandauParams, Variant};
use crate::series::{normalize_bounded, AnalyticSeries};

const MAX_ATTEMPTS: usize = 100;

/// Random coefficients in the unit square for indices `from..=degree`, zero below.
fn raw(rng: &mut ChaCha8Rng, from: usize, degree: usize) -> AnalyticSeries {
    let coeffs = (0..=degree)
        .map(|n| {
            let re = rng.gen_range(-1.0..=1.0);
            let im = rng.gen_range(-1.0..=1.0);
            if n < from {
                Complex64::default()
            } else {
                Complex64::new(re, im)
            }
        })
        .collect();
    AnalyticSeries::new(coeffs).expect("finite by construction")
}

fn bounded(rng: &mut ChaCha8Rng, from: usize, degree: usize, bound: f64) -> Result<AnalyticSeries> {
    loop {
        let r = raw(rng, from, degree);
        if !r.is_zero() {
            return normalize_bounded(&r, bound);
        }
    }
}

/// `f_0` with `f_0(0) = 0`, `f_0'(0) = 1` and `|f_0'(z)| <= 1 + (M_0 - 1)|z| < M_0`.
fn derivative_bounded_head(rng: &mut ChaCha8Rng, degree: usize, m0: f64) -> Result<AnalyticSeries> {
    let q = bounded(rng, 0, degree.saturating_sub(2), 1.0)?;
    // f_0' = 1 + (M_0 - 1) z q(z)
    let mut d = vec![Complex64::new(1.0, 0.0)];
    if degree >= 2 {
        d.extend(q.coeffs().iter().map(|c| c * (m0 - 1.0)));
    }
    Ok(AnalyticSeries::new(d)?.antiderivative())
}

/// `z + tail` with `sum |c_n| <= M`. The tail budget is a random fraction of
/// `M - 1/M`; draws exceeding the certified budget `M - 1` are rejected.
fn normalized_bounded(rng: &mut ChaCha8Rng, degree: usize, bound: f64) -> Result<AnalyticSeries> {
    let id = AnalyticSeries::identity();
    if degree < 2 || bound == 1.0 {
        return Ok(id.truncate(degree.max(1)));
    }
    for _ in 0..MAX_ATTEMPTS {
        let budget = rng.gen::<f64>() * (bound - 1.0 / bound);
        let tail = bounded(rng, 2, degree, budget)?;
        let f = id.add(&tail);
        if f.abs_coeff_sum() <= bound {
            return Ok(f);
        }
    }
    Err(LandauError::ResampleExhausted(MAX_ATTEMPTS))
}

/// Random function of degree `degree` satisfying the hypotheses of the
/// variant in `params`. Deterministic in `seed`.
pub fn generate_admissible(params: &LandauParams, degree: usize, seed: u64) -> Result<PolyFn> {
    if degree < 1 {
        return Err(LandauError::InvalidParams("degree must be at least 1".into()));
    }
    let mut rng = sampling::rng(seed);
    let bounds = params.bounds();
    let rng = &mut rng;
    match params.variant() {
        Variant::T1 => {
            let mut comps = vec![derivative_bounded_head(rng, degree, bounds[0])?];
            for (&mk, &p) in bounds[1..].iter().zip(params.orders()) {
                let top = bounded(rng, 0, degree, mk)?;
                comps.push((0..p).fold(top, |s, _| s.antiderivative()));
            }
            PolyFn::conjugate_power(comps)
        }
        Variant::T4 => {
            let mut comps = vec![derivative_bounded_head(rng, degree, bounds[0])?];
            for &mk in &bounds[1..] {
                comps.push(bounded(rng, 0, degree.saturating_sub(1), mk)?.antiderivative());
            }
            PolyFn::modulus_power(comps)
        }
        Variant::T2 => {
            let mut comps = vec![normalized_bounded(rng, degree, bounds[0])?];
            for &mk in &bounds[1..] {
                comps.push(bounded(rng, 1, degree, mk)?);
            }
            PolyFn::conjugate_power(comps)
        }
        Variant::T3 | Variant::TC | Variant::Classical => {
            let comps = bounds.iter().map(|&mk| normalized_bounded(rng, degree, mk)).collect::<Result<_>>()?;
            PolyFn::new(PolyKind::ConjugatePower, comps_into(comps))
        }
        Variant::T5 => {
            let comps = bounds.iter().map(|&mk| normalized_bounded(rng, degree, mk)).collect::<Result<_>>()?;
            PolyFn::new(PolyKind::ModulusPower, comps_into(comps))
        }
    }
}

fn comps_into(series: Vec<AnalyticSeries>) -> Vec<crate::polyfn::Component> {
    series.into_iter().map(Into::into).collect()
}
