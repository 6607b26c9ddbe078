//! Numerical certification of univalence, distortion, coverage and
//! starlikeness claims.
//!
//! Every check returns a [`CheckEntry`]: a pass flag, a margin (how far the
//! sampled quantity sits from its threshold) and, on failure, a concrete
//! witness. All reductions are minima over deterministic sample sets, so
//! a report depends only on the seed and the sample counts.

mod admissible;
mod bounds;
pub mod sampling;
mod suite;

use std::f64::consts::PI;
use std::time::Duration;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LandauError, Result};
use crate::polyfn::{PolyFn, PolyKind};
use crate::radii::{profile_value, LandauParams};
use crate::series::check_disk;

pub use admissible::generate_admissible;
pub use bounds::{check_bounds_suite, BoundCheck};
pub use suite::{run_suite, SuiteConfig, SuiteMode};

/// Image points closer than this count as a collision.
pub const COINCIDENCE_TOL: f64 = 1e-12;
/// Slack on the distortion inequality for evaluation round-off.
pub const DISTORTION_TOL: f64 = 1e-9;
/// Slack on boundary minimum-modulus comparisons.
pub const MODULUS_TOL: f64 = 1e-6;
/// Points where `|F|` is below this are skipped by the starlikeness test.
pub const STARLIKE_SKIP: f64 = 1e-12;
/// Minimum number of boundary samples for winding numbers.
pub const MIN_BOUNDARY_SAMPLES: usize = 4096;
/// Largest allowed distance of a winding sum from an integer multiple of 2 pi.
pub const WINDING_CLOSURE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Point(Complex64),
    Pair(Complex64, Complex64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub margin: f64,
    pub witness: Option<Witness>,
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    fn new(name: &str, passed: bool, margin: f64, samples: usize) -> Self {
        Self { name: name.to_string(), passed, margin, witness: None, samples, note: None }
    }

    fn with_witness(mut self, w: Option<Witness>) -> Self {
        if !self.passed {
            self.witness = w;
        }
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckEntry>,
    pub seed: u64,
    /// Wall-clock time; kept out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(LandauError::Domain(format!("radius {r} must lie in (0, 1)")))
    }
}

/// Injectivity on a quasi-uniform grid of `n` points of the closed disk of
/// radius `r`: minimum image distance over pairs at least `r/n` apart.
pub fn check_univalence_grid(f: &PolyFn, r: f64, n: usize, seed: u64) -> Result<CheckEntry> {
    check_univalence_grid_with(f, r, n, seed, &[])
}

/// As [`check_univalence_grid`], with extra sample points appended.
pub fn check_univalence_grid_with(f: &PolyFn, r: f64, n: usize, seed: u64, extra: &[Complex64]) -> Result<CheckEntry> {
    check_radius(r)?;
    let mut points = sampling::sunflower(n, r, seed);
    for &z in extra {
        check_disk(z)?;
        points.push(z);
    }
    let images: Vec<Complex64> = points.iter().map(|&z| f.eval_unchecked(z)).collect();
    let min_sep = r / n.max(1) as f64;
    let mut best = (f64::INFINITY, 0, 0);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if (points[i] - points[j]).norm() < min_sep {
                continue;
            }
            let d = (images[i] - images[j]).norm();
            if d < best.0 {
                best = (d, i, j);
            }
        }
    }
    let (min_dist, i, j) = best;
    if !min_dist.is_finite() {
        return Ok(CheckEntry::new("univalence_grid", true, 0.0, points.len()).with_note("no separated pairs"));
    }
    let passed = min_dist > COINCIDENCE_TOL;
    Ok(CheckEntry::new("univalence_grid", passed, min_dist, points.len())
        .with_witness(Some(Witness::Pair(points[i], points[j]))))
}

/// `|F(z2) - F(z1)| >= profile(r) |z2 - z1|` on random pairs in `D_r`.
pub fn check_distortion_bound(
    f: &PolyFn,
    params: &LandauParams,
    r: f64,
    pairs: usize,
    seed: u64,
) -> Result<CheckEntry> {
    check_radius(r)?;
    let lower = profile_value(params, r)?;
    let mut rng = sampling::rng(seed);
    let mut worst = (f64::INFINITY, Complex64::default(), Complex64::default());
    for _ in 0..pairs {
        let z1 = sampling::uniform_in_disk(&mut rng, r);
        let z2 = sampling::uniform_in_disk(&mut rng, r);
        if z1 == z2 {
            continue;
        }
        let slack = (f.eval_unchecked(z2) - f.eval_unchecked(z1)).norm() - lower * (z2 - z1).norm();
        if slack < worst.0 {
            worst = (slack, z1, z2);
        }
    }
    let margin = if worst.0.is_finite() { worst.0 } else { 0.0 };
    let passed = margin >= -DISTORTION_TOL;
    Ok(CheckEntry::new("distortion_bound", passed, margin, pairs)
        .with_witness(Some(Witness::Pair(worst.1, worst.2)))
        .with_note(format!("lower Lipschitz constant {lower:.6e} at r = {r:.6e}")))
}

/// Winding number of the closed polyline `curve` about `target`, as a real
/// number (`2 pi` times an integer when the curve is well resolved).
pub fn winding_number(curve: &[Complex64], target: Complex64) -> f64 {
    let n = curve.len();
    let total: f64 = (0..n)
        .map(|j| {
            let a = curve[j] - target;
            let b = curve[(j + 1) % n] - target;
            (b / a).arg()
        })
        .sum();
    total / (2.0 * PI)
}

/// Coverage of `D_R` by `F(D_r)`: boundary minimum modulus at least `R` and
/// winding number 1 of `F(|z| = r)` about every target.
pub fn check_schlicht_coverage(
    f: &PolyFn,
    r: f64,
    schlicht: f64,
    boundary_samples: usize,
    targets: &[Complex64],
) -> Result<CheckEntry> {
    check_radius(r)?;
    let default_target = [Complex64::new(0.0, 0.0)];
    let targets = if targets.is_empty() { &default_target[..] } else { targets };
    if let Some(t) = targets.iter().find(|t| t.norm() >= schlicht && schlicht > 0.0) {
        return Err(LandauError::Precondition(format!("target {t} lies outside the claimed disk")));
    }
    let mut samples = boundary_samples.max(MIN_BOUNDARY_SAMPLES);
    let mut curve: Vec<Complex64> = sampling::circle(samples, r).iter().map(|&z| f.eval_unchecked(z)).collect();

    let (mut min_mod, mut argmin) = (f64::INFINITY, 0);
    for (j, w) in curve.iter().enumerate() {
        if w.norm() < min_mod {
            min_mod = w.norm();
            argmin = j;
        }
    }
    let min_point = Complex64::from_polar(r, 2.0 * PI * argmin as f64 / samples as f64);

    let mut windings: Vec<f64> = targets.iter().map(|&t| winding_number(&curve, t)).collect();
    let unresolved = |ws: &[f64]| ws.iter().any(|w| (w - w.round()).abs() > WINDING_CLOSURE_TOL);
    if unresolved(&windings) {
        samples *= 2;
        curve = sampling::circle(samples, r).iter().map(|&z| f.eval_unchecked(z)).collect();
        windings = targets.iter().map(|&t| winding_number(&curve, t)).collect();
    }
    let bad_target =
        targets.iter().zip(&windings).find(|(_, w)| (*w - 1.0).abs() > WINDING_CLOSURE_TOL).map(|(t, _)| *t);

    let modulus_ok = min_mod >= schlicht - MODULUS_TOL;
    let passed = modulus_ok && bad_target.is_none();
    let witness = if !modulus_ok { Some(Witness::Point(min_point)) } else { bad_target.map(Witness::Point) };
    let mut entry = CheckEntry::new("schlicht_coverage", passed, min_mod - schlicht, samples).with_witness(witness);
    if unresolved(&windings) {
        entry = entry.with_note("winding sum did not close after one doubling");
    } else if let Some(t) = bad_target {
        entry = entry.with_note(format!("winding number about {t} is not 1"));
    }
    Ok(entry)
}

/// Sense preservation (`J_F > 0`) and starlikeness of the circle images
/// (`Re((z F_z - conj(z) F_zbar) / F) > 0`) on `circles` circles in `(0, r]`.
pub fn check_starlike_sense_preserving(f: &PolyFn, r: f64, circles: usize, per_circle: usize) -> Result<CheckEntry> {
    check_radius(r)?;
    let mut worst = (f64::INFINITY, Complex64::default());
    let (mut evaluated, mut skipped) = (0usize, 0usize);
    for i in 1..=circles {
        let rho = r * i as f64 / circles as f64;
        for z in sampling::circle(per_circle, rho) {
            let w = f.wirtinger_unchecked(z);
            let value = f.eval_unchecked(z);
            if w.jacobian < worst.0 {
                worst = (w.jacobian, z);
            }
            if value.norm() < STARLIKE_SKIP {
                skipped += 1;
                continue;
            }
            let ratio = ((z * w.f_z - z.conj() * w.f_zbar) / value).re;
            if ratio < worst.0 {
                worst = (ratio, z);
            }
            evaluated += 1;
        }
    }
    let margin = if worst.0.is_finite() { worst.0 } else { 0.0 };
    let passed = margin > 0.0;
    let mut entry = CheckEntry::new("starlike_sense_preserving", passed, margin, evaluated)
        .with_witness(Some(Witness::Point(worst.1)));
    if skipped > 0 {
        entry = entry.with_note(format!("{skipped} points skipped where |F| < {STARLIKE_SKIP:e}"));
    }
    Ok(entry)
}

/// Left-hand side of the coefficient condition for univalence and full
/// starlikeness of `z + sum a_n z^n + sum conj(z)^k f_k` in `D_r`.
pub fn lemma6_value(f: &PolyFn, r: f64) -> Result<f64> {
    if f.kind() != PolyKind::ConjugatePower {
        return Err(LandauError::UnsupportedKind("the coefficient condition is for poly-analytic functions".into()));
    }
    let comps = f
        .series_components()
        .ok_or_else(|| LandauError::UnsupportedKind("the coefficient condition needs series components".into()))?;
    let f0 = comps[0];
    if f0.coeff(0).norm() > 1e-12 || (f0.coeff(1) - 1.0).norm() > 1e-12 {
        return Err(LandauError::Precondition(format!(
            "f_0 must start z + ..., got a_0 = {}, a_1 = {}",
            f0.coeff(0),
            f0.coeff(1)
        )));
    }
    if let Some(k) = comps.iter().skip(1).position(|s| s.coeff(0).norm() > 1e-12) {
        return Err(LandauError::Precondition(format!("f_{} must vanish at the origin", k + 1)));
    }
    let head: f64 =
        f0.coeffs().iter().enumerate().skip(2).map(|(n, a)| n as f64 * a.norm() * r.powi(n as i32 - 1)).sum();
    let tail: f64 = comps
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, s)| {
            let rk = r.powi(k as i32);
            let (weighted, plain) = s.coeffs().iter().enumerate().skip(1).fold((0.0, 0.0), |(wa, pa), (n, b)| {
                let t = b.norm() * r.powi(n as i32 - 1);
                (wa + n as f64 * t, pa + t)
            });
            rk * weighted + k as f64 * rk * plain
        })
        .sum();
    Ok(head + tail)
}

pub fn check_lemma6_condition(f: &PolyFn, r: f64) -> Result<CheckEntry> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(LandauError::Domain(format!("radius {r} must lie in (0, 1]")));
    }
    let value = lemma6_value(f, r)?;
    let samples = f.series_components().map_or(0, |c| c.iter().map(|s| s.coeffs().len()).sum());
    Ok(CheckEntry::new("lemma6_condition", value < 1.0, 1.0 - value, samples)
        .with_note(format!("condition value {value:.6e} at r = {r:.6e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{build_extremal, sharpness_witness, ExtremalSpec};
    use crate::radii::{landau_radii, Variant};
    use crate::series::AnalyticSeries;

    fn s(coeffs: &[f64]) -> AnalyticSeries {
        AnalyticSeries::from_real(coeffs).unwrap()
    }

    fn identity() -> PolyFn {
        PolyFn::analytic(AnalyticSeries::identity())
    }

    fn g1() -> (LandauParams, PolyFn) {
        let p = LandauParams::new(Variant::T1, vec![2.0, 1.0], vec![1]).unwrap();
        let f = build_extremal(&ExtremalSpec::G1(p.clone())).unwrap();
        (p, f)
    }

    #[test]
    fn identity_is_injective() {
        let e = check_univalence_grid(&identity(), 0.9, 400, 3).unwrap();
        assert!(e.passed && e.margin >= 0.9 / 400.0 - 1e-15, "{e:?}");
    }

    #[test]
    fn g1_injective_inside_and_witness_breaks_outside() {
        let (_, f) = g1();
        let r0 = 2.0 - 3f64.sqrt();
        assert!(check_univalence_grid(&f, 0.99 * r0, 600, 1).unwrap().passed);
        let (p, _) = g1();
        let w = sharpness_witness(&ExtremalSpec::G1(p), r0 + 0.05).unwrap();
        let extra = [Complex64::new(w.x1, 0.0), Complex64::new(w.x2, 0.0)];
        let e = check_univalence_grid_with(&f, r0 + 0.05, 600, 1, &extra).unwrap();
        assert!(!e.passed);
        assert!(matches!(e.witness, Some(Witness::Pair(..))));
    }

    #[test]
    fn distortion_examples() {
        let flat = LandauParams::new(Variant::T2, vec![1.0], vec![]).unwrap();
        assert!(check_distortion_bound(&identity(), &flat, 0.5, 500, 1).unwrap().passed);
        let (p, f) = g1();
        assert!(check_distortion_bound(&f, &p, 0.2, 2000, 5).unwrap().passed);
    }

    #[test]
    fn coverage_of_identity() {
        let e = check_schlicht_coverage(&identity(), 0.5, 0.5, 4096, &[]).unwrap();
        assert!(e.passed && e.margin.abs() < 1e-15, "{e:?}");
        let e = check_schlicht_coverage(&identity(), 0.5, 0.6, 4096, &[]).unwrap();
        assert!(!e.passed && e.witness.is_some());
        assert!(check_schlicht_coverage(&identity(), 0.5, 0.3, 4096, &[Complex64::new(0.4, 0.0)]).is_err());
    }

    #[test]
    fn coverage_of_g1_is_tight() {
        let (p, f) = g1();
        let r = landau_radii(&p).unwrap();
        let e = check_schlicht_coverage(&f, r.radius, r.schlicht_radius.unwrap(), 4096, &[]).unwrap();
        assert!(e.passed && e.margin.abs() < 1e-9, "{e:?}");
    }

    #[test]
    fn winding_counts_turns() {
        let unit = sampling::circle(64, 1.0);
        assert!((winding_number(&unit, Complex64::new(0.2, 0.1)) - 1.0).abs() < 1e-12);
        assert!(winding_number(&unit, Complex64::new(2.0, 0.0)).abs() < 1e-12);
        let twice: Vec<_> = unit.iter().map(|z| z * z).collect();
        assert!((winding_number(&twice, Complex64::new(0.0, 0.0)) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn starlike_examples() {
        let e = check_starlike_sense_preserving(&identity(), 0.9, 8, 64).unwrap();
        assert!(e.passed && (e.margin - 1.0).abs() < 1e-12);
        let f = PolyFn::conjugate_power(vec![s(&[0.0, 1.0]), s(&[0.0, 0.3])]).unwrap();
        assert!(lemma6_value(&f, 0.9).unwrap() < 1.0);
        assert!(check_starlike_sense_preserving(&f, 0.9, 16, 128).unwrap().passed);
        let f = PolyFn::conjugate_power(vec![s(&[0.0, 1.0]), s(&[0.0, 0.8])]).unwrap();
        assert!(!check_lemma6_condition(&f, 0.9).unwrap().passed);
    }

    #[test]
    fn lemma6_examples() {
        let e = check_lemma6_condition(&PolyFn::conjugate_power(vec![s(&[0.0, 1.0])]).unwrap(), 0.5).unwrap();
        assert!(e.passed && e.margin == 1.0);
        let f = PolyFn::conjugate_power(vec![s(&[0.0, 1.0]), s(&[0.0, 0.5])]).unwrap();
        let v = lemma6_value(&f, 0.8).unwrap();
        assert!((v - 0.8).abs() < 1e-15);
        assert!(check_lemma6_condition(&f, 0.8).unwrap().passed);
        let e = check_lemma6_condition(&f, 1.0).unwrap();
        assert!(!e.passed && e.margin.abs() < 1e-15);
    }

    #[test]
    fn lemma6_normalization_errors() {
        let f = PolyFn::conjugate_power(vec![s(&[0.0, 2.0])]).unwrap();
        assert!(matches!(lemma6_value(&f, 0.5), Err(LandauError::Precondition(_))));
        let f = PolyFn::modulus_power(vec![s(&[0.0, 1.0])]).unwrap();
        assert!(matches!(lemma6_value(&f, 0.5), Err(LandauError::UnsupportedKind(_))));
        let (_, g) = g1();
        assert!(matches!(lemma6_value(&g, 0.5), Err(LandauError::UnsupportedKind(_))));
    }

    #[test]
    fn report_json_skips_elapsed() {
        let rep = VerificationReport {
            checks: vec![CheckEntry::new("x", true, 0.5, 3)],
            seed: 9,
            elapsed: Duration::from_millis(12),
        };
        let json = serde_json::to_string(&rep).unwrap();
        assert!(!json.contains("elapsed"));
        assert!(json.contains("\"seed\":9"));
    }
}
