//! Bundled verification runs for a parameter set.

use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    check_bounds_suite, check_distortion_bound, check_lemma6_condition, check_schlicht_coverage,
    check_starlike_sense_preserving, check_univalence_grid, check_univalence_grid_with, generate_admissible, sampling,
    BoundCheck, CheckEntry, VerificationReport, Witness,
};
use crate::error::{LandauError, Result};
use crate::extremal::{build_extremal, sharpness_witness, ExtremalSpec};
use crate::polyfn::{PolyFn, PolyKind};
use crate::radii::{landau_radii, LandauParams, RadiusResult, Variant};

const ORDER_RESIDUAL_TOL: f64 = 1e-4;
const ORDER_RESIDUAL_POINT: f64 = 0.3;
const EXTREMAL_VALUE_TOL: f64 = 1e-9;
const WITNESS_GAP_TOL: f64 = 1e-10;
const SHARPNESS_STEP: f64 = 0.05;
const LATTICE_SIDE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteMode {
    /// A seeded random function satisfying the hypotheses.
    Admissible,
    /// The sharpness extremal (T1 and T4 only).
    Extremal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub grid_points: usize,
    pub pairs: usize,
    pub boundary_samples: usize,
    pub circles: usize,
    pub per_circle: usize,
    pub degree: usize,
    /// Checks run at this fraction of the radius.
    pub fraction: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid_points: 600,
            pairs: 2000,
            boundary_samples: 4096,
            circles: 16,
            per_circle: 256,
            degree: 6,
            fraction: 0.9,
        }
    }
}

pub fn run_suite(
    params: &LandauParams,
    mode: SuiteMode,
    seed: u64,
    config: &SuiteConfig,
) -> Result<VerificationReport> {
    if !(config.fraction > 0.0 && config.fraction < 1.0) {
        return Err(LandauError::InvalidParams(format!("fraction {} must lie in (0, 1)", config.fraction)));
    }
    let start = Instant::now();
    let radii = landau_radii(params)?;
    let checks = match mode {
        SuiteMode::Admissible => admissible_checks(params, &radii, seed, config)?,
        SuiteMode::Extremal => extremal_checks(params, &radii, seed, config)?,
    };
    Ok(VerificationReport { checks, seed, elapsed: start.elapsed() })
}

fn admissible_checks(
    params: &LandauParams,
    radii: &RadiusResult,
    seed: u64,
    config: &SuiteConfig,
) -> Result<Vec<CheckEntry>> {
    let f = generate_admissible(params, config.degree, seed)?;
    let r = config.fraction * radii.radius;
    let mut checks = vec![check_univalence_grid(&f, r, config.grid_points, seed)?];
    // the classical theorem has no profile, hence no Lipschitz bound to test
    if params.variant() != Variant::Classical {
        checks.push(check_distortion_bound(&f, params, r, config.pairs, seed)?);
    }
    if let Some(schlicht) = radii.schlicht_radius.filter(|&s| s > 0.0 && radii.radius < 1.0) {
        let targets = sampling::lattice_in_disk(LATTICE_SIDE, schlicht);
        checks.push(check_schlicht_coverage(&f, radii.radius, schlicht, config.boundary_samples, &targets)?);
    }
    if params.variant() == Variant::T3 {
        let starlike = check_starlike_sense_preserving(&f, r, config.circles, config.per_circle)?;
        let lemma6 = check_lemma6_condition(&f, r)?;
        let implication = !lemma6.passed || starlike.passed;
        let mut entry = CheckEntry::new("lemma6_implies_starlike", implication, starlike.margin, starlike.samples)
            .with_witness(starlike.witness);
        entry = entry.with_note(format!("condition {}", if lemma6.passed { "holds" } else { "fails; report only" }));
        checks.extend([starlike, lemma6, entry]);
    }
    if f.kind() == PolyKind::ConjugatePower {
        let h = 1e-16f64.powf(1.0 / (f.order() as f64 + 2.0));
        let z = Complex64::from_polar(ORDER_RESIDUAL_POINT, 1.0);
        let residual = f.order_residual(z, h)?;
        let passed = residual <= ORDER_RESIDUAL_TOL;
        checks.push(
            CheckEntry::new("order_residual", passed, ORDER_RESIDUAL_TOL - residual, 1)
                .with_witness(Some(Witness::Point(z)))
                .with_note(format!("residual {residual:.3e} with step {h:.3e}")),
        );
    }
    checks.extend(component_bounds(params, &f)?);
    Ok(checks)
}

fn component_bounds(params: &LandauParams, f: &PolyFn) -> Result<Vec<CheckEntry>> {
    let comps = f.components();
    let bounds = params.bounds();
    let mut out = Vec::new();
    match params.variant() {
        Variant::T1 => {
            out.push(check_bounds_suite(&comps[0], BoundCheck::MinModulusLem3ii { lambda: bounds[0], r: 0.5 })?);
            for ((c, &mk), &p) in comps[1..].iter().zip(&bounds[1..]).zip(params.orders()) {
                out.push(check_bounds_suite(c, BoundCheck::DerivCascadeF1 { bound: mk, order: p })?);
            }
        }
        Variant::T4 => {
            out.push(check_bounds_suite(&comps[0], BoundCheck::MinModulusLem3ii { lambda: bounds[0], r: 0.5 })?);
            for (c, &mk) in comps[1..].iter().zip(&bounds[1..]) {
                out.push(check_bounds_suite(c, BoundCheck::SchwarzPickF7 { bound: mk })?);
            }
        }
        Variant::T2 => {
            out.push(check_bounds_suite(&comps[0], BoundCheck::CoeffLemma1 { bound: bounds[0] })?);
            for (c, &mk) in comps[1..].iter().zip(&bounds[1..]) {
                out.push(check_bounds_suite(c, BoundCheck::SchwarzPickF7 { bound: mk })?);
            }
        }
        Variant::T3 | Variant::T5 | Variant::TC | Variant::Classical => {
            for (c, &mk) in comps.iter().zip(bounds) {
                out.push(check_bounds_suite(c, BoundCheck::CoeffLemma1 { bound: mk })?);
            }
        }
    }
    Ok(out)
}

fn extremal_checks(
    params: &LandauParams,
    radii: &RadiusResult,
    seed: u64,
    config: &SuiteConfig,
) -> Result<Vec<CheckEntry>> {
    let spec = match params.variant() {
        Variant::T1 => ExtremalSpec::G1(params.clone()),
        Variant::T4 => ExtremalSpec::G4(params.clone()),
        v => return Err(LandauError::InvalidParams(format!("extremal mode needs t1 or t4 parameters, got {v}"))),
    };
    let f = build_extremal(&spec)?;
    let r0 = radii.radius;
    let r1 = radii.schlicht_radius.unwrap_or(0.0);
    let mut checks = vec![
        check_univalence_grid(&f, 0.99 * r0, config.grid_points, seed)?,
        check_distortion_bound(&f, params, config.fraction * r0, config.pairs, seed)?,
    ];
    if r0 < 1.0 {
        let targets = sampling::lattice_in_disk(LATTICE_SIDE, r1);
        checks.push(check_schlicht_coverage(&f, r0, r1, config.boundary_samples, &targets)?);
        let at = Complex64::new(r0, 0.0);
        let gap = (f.eval(at)?.norm() - r1).abs();
        checks.push(
            CheckEntry::new("extremal_value", gap <= EXTREMAL_VALUE_TOL, EXTREMAL_VALUE_TOL - gap, 1)
                .with_witness(Some(Witness::Point(at))),
        );

        let r = (r0 + SHARPNESS_STEP).min(1.0);
        let w = sharpness_witness(&spec, r)?;
        let pair = [Complex64::new(w.x1, 0.0), Complex64::new(w.x2, 0.0)];
        let injected = check_univalence_grid_with(&f, r.min(1.0 - f64::EPSILON), config.grid_points, seed, &pair)?;
        let passed = !injected.passed && w.image_gap <= WITNESS_GAP_TOL;
        let mut entry = CheckEntry::new("sharpness", passed, WITNESS_GAP_TOL - w.image_gap, injected.samples)
            .with_note(format!("pair ({:.12}, {:.12}) with image gap {:.3e}", w.x1, w.x2, w.image_gap));
        entry.witness = Some(Witness::Pair(pair[0], pair[1]));
        checks.push(entry);
    }
    Ok(checks)
}
