//! Univalence radii and schlicht-disk radii.
//!
//! Each theorem variant comes with a profile function that equals 1 at the
//! origin and decreases strictly; its first zero is the univalence radius.
//! The schlicht radius is then a closed formula evaluated at that zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LandauError, Result};

/// Bracket width at which bisection may stop.
pub const BISECTION_TOL: f64 = 1e-13;

/// Distance kept from the first pole of the TC profile.
pub const POLE_GUARD: f64 = 1e-9;

/// Number of probes `hi - (hi - lo) 2^-j` used to find a sign change.
/// Beyond 45 halvings `1 - 2^-j` stops being representable next to 1.
const MAX_PROBES: i32 = 45;

const MAX_BISECTIONS: usize = 200;

/// Theorem variant selecting the profile and schlicht formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Poly-analytic, `|f_0'| < M_0` and `|f_k^{(p_k)}| <= M_k`.
    T1,
    /// Poly-analytic, `|f_k| <= M_k`.
    T2,
    /// Poly-analytic, `|f_k| <= M_k` and `f_k'(0) = 1`; fully starlike radius.
    T3,
    /// Reduced poly-analytic, `|f_0'| < M_0` and `|f_k'| <= M_k`.
    T4,
    /// Reduced poly-analytic, `|f_k| <= M_k` and `f_k'(0) = 1`.
    T5,
    /// The earlier poly-analytic bound with a single `M` for all components.
    TC,
    /// Classical Landau theorem for bounded analytic functions.
    Classical,
}

impl Variant {
    pub const ALL: [Variant; 7] =
        [Variant::T1, Variant::T2, Variant::T3, Variant::T4, Variant::T5, Variant::TC, Variant::Classical];

    pub fn name(self) -> &'static str {
        match self {
            Variant::T1 => "t1",
            Variant::T2 => "t2",
            Variant::T3 => "t3",
            Variant::T4 => "t4",
            Variant::T5 => "t5",
            Variant::TC => "tc",
            Variant::Classical => "classical",
        }
    }

    /// Whether the theorem is about reduced (`|z|^{2k}`) functions.
    pub fn is_reduced(self) -> bool {
        matches!(self, Variant::T4 | Variant::T5)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = LandauError;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| LandauError::InvalidParams(format!("unknown theorem '{s}'")))
    }
}

/// Validated theorem parameters: the bounds `M_0..M_{m-1}` and, for T1, the
/// vanishing orders `p_1..p_{m-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LandauParams {
    variant: Variant,
    bounds: Vec<f64>,
    orders: Vec<u32>,
}

impl LandauParams {
    pub fn new(variant: Variant, bounds: Vec<f64>, orders: Vec<u32>) -> Result<Self> {
        let params = Self { variant, bounds, orders };
        params.validate()?;
        Ok(params)
    }

    pub fn classical(bound: f64) -> Result<Self> {
        Self::new(Variant::Classical, vec![bound], vec![])
    }

    /// TC parameters: order `m` and a single bound `M` shared by all components.
    pub fn uniform_bound(m: usize, bound: f64) -> Result<Self> {
        Self::new(Variant::TC, vec![bound; m.max(1)], vec![])
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(LandauError::InvalidParams(msg));
        let m = self.bounds.len();
        if m == 0 {
            return bad("order m must be at least 1".into());
        }
        if let Some((k, b)) = self.bounds.iter().enumerate().find(|(_, b)| !(b.is_finite() && **b >= 0.0)) {
            return bad(format!("M{k} = {b} must be finite and non-negative"));
        }
        if self.variant == Variant::T1 {
            if self.orders.len() != m - 1 {
                return bad(format!("T1 needs m - 1 = {} vanishing orders p, got {}", m - 1, self.orders.len()));
            }
            if let Some(p) = self.orders.iter().find(|&&p| !(1..=30).contains(&p)) {
                return bad(format!("vanishing order p = {p} must lie in 1..=30"));
            }
        } else if !self.orders.is_empty() {
            return bad(format!("vanishing orders p only apply to T1, not {}", self.variant));
        }
        let m0 = self.bounds[0];
        match self.variant {
            Variant::T1 | Variant::T4 if m0 <= 1.0 => bad(format!("M0 must exceed 1 (got {m0})")),
            Variant::T2 if m0 < 1.0 => bad(format!("M0 must be at least 1 (got {m0})")),
            Variant::T3 | Variant::T5 => match self.bounds.iter().position(|&b| b < 1.0) {
                Some(k) => bad(format!("M{k} must be at least 1 (got {})", self.bounds[k])),
                None => Ok(()),
            },
            Variant::TC if self.bounds.iter().any(|&b| b != m0) => {
                bad("TC takes a single bound M for every component".into())
            }
            Variant::TC if m0 <= 1.0 => bad(format!("M must exceed 1 (got {m0})")),
            Variant::Classical if m != 1 => bad("the classical theorem takes a single bound M".into()),
            Variant::Classical if m0 < 1.0 => bad(format!("M must be at least 1 (got {m0})")),
            _ => Ok(()),
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Order `m` (number of analytic components).
    pub fn m(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[f64] {
        &self.bounds
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Interval on which the profile is defined: `(hi, hi_included)` with `lo = 0`.
    pub fn admissible(&self) -> (f64, bool) {
        match self.variant {
            Variant::T1 | Variant::T4 => (1.0, true),
            Variant::TC if self.m() >= 2 => ((1.0 / (self.m() - 1) as f64).min(1.0), false),
            _ => (1.0, false),
        }
    }

    /// Interval scanned by the root finder.
    pub fn search_bracket(&self) -> (f64, f64) {
        match self.variant {
            Variant::TC if self.m() >= 2 => (0.0, self.admissible().0 - POLE_GUARD),
            _ => (0.0, 1.0),
        }
    }
}

/// Solved radii for one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// Absent for T3, which asserts no coverage disk.
    pub schlicht_radius: Option<f64>,
    /// The profile stays positive on the whole interval; `radius` is then 1.
    pub degenerate: bool,
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: usize,
    /// The schlicht formula was negative and has been replaced by 0.
    pub schlicht_clamped: bool,
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `M - 1/M`, the sharp coefficient bound for a normalized component bounded by `M`.
fn coeff_bound(m: f64) -> f64 {
    m - 1.0 / m
}

/// The `M_0 (1 - M_0 r)/(M_0 - r)` lower bound on `|f_0'|`.
fn automorphism_term(m0: f64, r: f64) -> f64 {
    m0 * (1.0 - m0 * r) / (m0 - r)
}

/// `M_0^2 r + (M_0^3 - M_0) log(1 - r/M_0)`, the minimum modulus bound.
fn log_term(m0: f64, r: f64) -> f64 {
    m0 * m0 * r + (m0 * m0 * m0 - m0) * (1.0 - r / m0).ln()
}

/// Value of the variant's radius profile at `r`.
pub fn profile_value(params: &LandauParams, r: f64) -> Result<f64> {
    let (hi, closed) = params.admissible();
    if params.variant == Variant::Classical {
        return Err(LandauError::InvalidParams("the classical theorem has no radius profile".into()));
    }
    if !(r >= 0.0 && (r < hi || (closed && r == hi))) {
        let close = if closed { ']' } else { ')' };
        return Err(LandauError::Domain(format!("r = {r} outside [0, {hi}{close} for {}", params.variant)));
    }
    Ok(profile_unchecked(params, r))
}

fn profile_unchecked(params: &LandauParams, r: f64) -> f64 {
    let bounds = &params.bounds;
    let m0 = bounds[0];
    let tail = || bounds.iter().enumerate().skip(1);
    match params.variant {
        Variant::T1 => {
            let sum: f64 = tail()
                .zip(&params.orders)
                .map(|((k, &mk), &p)| {
                    let e = k as u32 + p;
                    f64::from(e) * mk * r.powi(e as i32 - 1) / factorial(p)
                })
                .sum();
            automorphism_term(m0, r) - sum
        }
        Variant::T2 => {
            let lead = coeff_bound(m0) * (2.0 - r) * r / ((1.0 - r) * (1.0 - r));
            let sum: f64 = tail()
                .map(|(k, &mk)| {
                    let rk = r.powi(k as i32);
                    rk * mk / (1.0 - r * r) + k as f64 * rk * mk
                })
                .sum();
            1.0 - lead - sum
        }
        Variant::T3 => {
            let a: f64 = bounds
                .iter()
                .enumerate()
                .map(|(k, &mk)| {
                    let kf = k as f64;
                    coeff_bound(mk) * r.powi(k as i32 + 1) * (2.0 - r + kf * (1.0 - r)) / ((1.0 - r) * (1.0 - r))
                })
                .sum();
            let b: f64 = (1..params.m()).map(|k| (k + 1) as f64 * r.powi(k as i32)).sum();
            1.0 - a - b
        }
        Variant::T4 => {
            let sum: f64 = tail().map(|(k, &mk)| mk * (2 * k + 1) as f64 * r.powi(2 * k as i32)).sum();
            automorphism_term(m0, r) - sum
        }
        Variant::T5 => {
            let a: f64 = bounds
                .iter()
                .enumerate()
                .map(|(k, &mk)| {
                    let kf = k as f64;
                    coeff_bound(mk) * (2.0 * kf * (1.0 - r) + (2.0 - r)) * r.powi(2 * k as i32 + 1)
                        / ((1.0 - r) * (1.0 - r))
                })
                .sum();
            let b: f64 = (1..params.m()).map(|k| (2 * k + 1) as f64 * r.powi(2 * k as i32)).sum();
            1.0 - a - b
        }
        Variant::TC => {
            let lead = r * (2.0 - r) / ((1.0 - r) * (1.0 - r));
            let sum: f64 = (1..params.m())
                .map(|k| {
                    let kf = k as f64;
                    r.powi(k as i32) * (1.0 + kf - kf * r) / ((1.0 - kf * r) * (1.0 - kf * r))
                })
                .sum();
            1.0 - m0 * (lead + sum)
        }
        Variant::Classical => unreachable!("rejected by profile_value"),
    }
}

/// Schlicht radius formula evaluated at a solved univalence radius.
fn schlicht_formula(params: &LandauParams, r: f64) -> Option<f64> {
    let bounds = &params.bounds;
    let m0 = bounds[0];
    let tail = || bounds.iter().enumerate().skip(1);
    // Terms with a vanishing coefficient are skipped so that r = 1 (degenerate
    // profiles) does not produce 0 * inf.
    let weighted = |c: f64, x: f64| if c == 0.0 { 0.0 } else { c * x };
    let value = match params.variant {
        Variant::T1 => {
            let sum: f64 = tail()
                .zip(&params.orders)
                .map(|((k, &mk), &p)| mk * r.powi((p + k as u32) as i32) / factorial(p))
                .sum();
            log_term(m0, r) - sum
        }
        Variant::T2 => {
            let sum: f64 = tail().map(|(k, &mk)| mk * r.powi(k as i32)).sum();
            r - weighted(coeff_bound(m0), r * r / (1.0 - r)) - sum
        }
        Variant::T3 => return None,
        Variant::T4 => {
            let sum: f64 = tail().map(|(k, &mk)| mk * r.powi(2 * k as i32 + 1)).sum();
            log_term(m0, r) - sum
        }
        Variant::T5 => {
            // r (r^2 - r^{2m}) / (1 - r^2) written as its finite geometric sum.
            let geometric: f64 = (1..params.m()).map(|k| r.powi(2 * k as i32 + 1)).sum();
            let sum: f64 = bounds
                .iter()
                .enumerate()
                .map(|(k, &mk)| weighted(coeff_bound(mk), r.powi(2 * k as i32 + 2) / (1.0 - r)))
                .sum();
            r - geometric - sum
        }
        Variant::TC => {
            let m = params.m() as i32;
            let sum: f64 = (0..m).map(|k| r.powi(k + 2)).sum();
            r - r * r * (1.0 - r.powi(m - 1)) / (1.0 - r) - m0 * sum / (1.0 - r)
        }
        Variant::Classical => m0 * r * r,
    };
    Some(value)
}

/// Outcome of a monotone root search.
#[derive(Debug, Clone, PartialEq)]
pub enum RootOutcome {
    Root {
        root: f64,
        residual: f64,
        iterations: usize,
        bracket: (f64, f64),
    },
    /// No probe toward `hi` reached a non-positive value.
    Degenerate {
        last_probe: f64,
        last_value: f64,
    },
}

/// Bisection for the first zero of a strictly decreasing `f` on `[lo, hi)`.
///
/// A sign change is searched at `hi - (hi - lo) 2^-j`, `j = 1, 2, ...`; once
/// one is found the bracket is halved down to floating-point resolution.
pub fn solve_monotone_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<RootOutcome> {
    let f_lo = f(lo);
    if !(f_lo > 0.0) {
        return Err(LandauError::Bracket(f_lo));
    }
    let mut a = lo;
    let mut b = None;
    let mut last = (lo, f_lo);
    for j in 1..=MAX_PROBES {
        let x = hi - (hi - lo) * 0.5f64.powi(j);
        let fx = f(x);
        if !(fx > 0.0) {
            b = Some(x);
            break;
        }
        a = x;
        last = (x, fx);
    }
    let Some(mut b) = b else {
        return Ok(RootOutcome::Degenerate { last_probe: last.0, last_value: last.1 });
    };
    let mut iterations = 0;
    while iterations < MAX_BISECTIONS {
        let mid = 0.5 * (a + b);
        if !(mid > a && mid < b) {
            break;
        }
        if f(mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
        iterations += 1;
    }
    debug_assert!(b - a <= BISECTION_TOL);
    let root = 0.5 * (a + b);
    Ok(RootOutcome::Root { root, residual: f(root).abs(), iterations, bracket: (a, b) })
}

/// Solves the variant's radius equation and evaluates its schlicht radius.
pub fn landau_radii(params: &LandauParams) -> Result<RadiusResult> {
    params.validate()?;
    if params.variant == Variant::Classical {
        let m = params.bounds[0];
        let root = (m * m - 1.0).sqrt();
        let r0 = 1.0 / (m + root);
        return Ok(RadiusResult {
            radius: r0,
            schlicht_radius: Some(m * r0 * r0),
            degenerate: false,
            bracket: (r0, r0),
            residual: (r0 * (m + root) - 1.0).abs(),
            iterations: 0,
            schlicht_clamped: false,
        });
    }
    let (lo, hi) = params.search_bracket();
    let outcome = solve_monotone_root(|r| profile_unchecked(params, r), lo, hi)?;
    let (radius, degenerate, bracket, residual, iterations) = match outcome {
        RootOutcome::Root { root, residual, iterations, bracket } => (root, false, bracket, residual, iterations),
        RootOutcome::Degenerate { last_probe, last_value } => (1.0, true, (last_probe, 1.0), last_value, 0),
    };
    let raw = schlicht_formula(params, radius);
    let schlicht_clamped = raw.is_some_and(|s| s < 0.0);
    Ok(RadiusResult {
        radius,
        schlicht_radius: raw.map(|s| s.max(0.0)),
        degenerate,
        bracket,
        residual,
        iterations,
        schlicht_clamped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> LandauParams {
        LandauParams::new(Variant::T1, vec![2.0, 1.0], vec![1]).unwrap()
    }

    #[test]
    fn profile_examples() {
        assert_eq!(profile_value(&t1(), 0.0).unwrap(), 1.0);
        assert!(profile_value(&t1(), 2.0 - 3f64.sqrt()).unwrap().abs() < 1e-12);
        let t3 = LandauParams::new(Variant::T3, vec![1.0, 1.0], vec![]).unwrap();
        assert!((profile_value(&t3, 0.25).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn profile_domain_errors() {
        assert!(profile_value(&t1(), 1.0).is_ok());
        assert!(matches!(profile_value(&t1(), 1.01), Err(LandauError::Domain(_))));
        assert!(matches!(profile_value(&t1(), -0.1), Err(LandauError::Domain(_))));
        let t2 = LandauParams::new(Variant::T2, vec![2.0, 1.0], vec![]).unwrap();
        assert!(matches!(profile_value(&t2, 1.0), Err(LandauError::Domain(_))));
        let tc = LandauParams::uniform_bound(3, 2.0).unwrap();
        assert!(matches!(profile_value(&tc, 0.5), Err(LandauError::Domain(_))));
        assert!(profile_value(&tc, 0.49).is_ok());
        let cl = LandauParams::classical(2.0).unwrap();
        assert!(matches!(profile_value(&cl, 0.1), Err(LandauError::InvalidParams(_))));
    }

    #[test]
    fn invariant_violations() {
        let err = LandauParams::new(Variant::T1, vec![0.5, 1.0], vec![1]).unwrap_err();
        assert!(err.to_string().contains("M0 must exceed 1"), "{err}");
        assert!(LandauParams::new(Variant::T1, vec![2.0, 1.0], vec![]).is_err());
        assert!(LandauParams::new(Variant::T1, vec![2.0, 1.0], vec![0]).is_err());
        assert!(LandauParams::new(Variant::T2, vec![0.9], vec![]).is_err());
        assert!(LandauParams::new(Variant::T3, vec![2.0, 0.5], vec![]).is_err());
        assert!(LandauParams::new(Variant::T4, vec![1.0, 1.0], vec![]).is_err());
        assert!(LandauParams::new(Variant::T2, vec![2.0, -1.0], vec![]).is_err());
        assert!(LandauParams::new(Variant::TC, vec![2.0, 3.0], vec![]).is_err());
        assert!(LandauParams::uniform_bound(2, 1.0).is_err());
        assert!(LandauParams::classical(0.5).is_err());
        assert!(LandauParams::new(Variant::T2, vec![], vec![]).is_err());
        assert!(LandauParams::new(Variant::T2, vec![2.0, 1.0], vec![1]).is_err());
    }

    #[test]
    fn classical_closed_form() {
        let r = landau_radii(&LandauParams::classical(1.0).unwrap()).unwrap();
        assert_eq!((r.radius, r.schlicht_radius), (1.0, Some(1.0)));
        let m = 3.0;
        let r = landau_radii(&LandauParams::classical(m).unwrap()).unwrap();
        assert!((r.radius * (m + (m * m - 1.0f64).sqrt()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn t1_closed_form() {
        let r = landau_radii(&t1()).unwrap();
        let r0 = 2.0 - 3f64.sqrt();
        assert!((r.radius - r0).abs() < 1e-12);
        assert!((r.schlicht_radius.unwrap() - 0.136_953_782_644_657_2).abs() < 1e-10);
        assert!(r.residual <= 1e-10 && !r.degenerate && !r.schlicht_clamped);
        assert!(r.bracket.1 - r.bracket.0 <= BISECTION_TOL);
    }

    #[test]
    fn tc_and_t5_closed_forms() {
        let r = landau_radii(&LandauParams::uniform_bound(2, 2.0).unwrap()).unwrap();
        assert!((r.radius - (1.0 - 2.0 / 5f64.sqrt())).abs() < 1e-12);
        assert!((r.schlicht_radius.unwrap() - 0.066_873_708_001_009_46).abs() < 1e-10);

        let t5 = LandauParams::new(Variant::T5, vec![1.0, 1.0], vec![]).unwrap();
        let r = landau_radii(&t5).unwrap();
        let r7 = 1.0 / 3f64.sqrt();
        assert!((r.radius - r7).abs() < 1e-12);
        assert!((r.schlicht_radius.unwrap() - (r7 - r7 * r7 * r7)).abs() < 1e-12);
    }

    #[test]
    fn t4_numeric() {
        let t4 = LandauParams::new(Variant::T4, vec![2.0, 1.0], vec![]).unwrap();
        let r = landau_radii(&t4).unwrap();
        assert!((r.radius - 0.349_101_471_908_196_85).abs() < 1e-12);
        assert!((r.schlicht_radius.unwrap() - 0.202_895_379_384_096_4).abs() < 1e-10);
    }

    #[test]
    fn t3_has_no_schlicht_radius() {
        let t3 = LandauParams::new(Variant::T3, vec![1.0, 1.0], vec![]).unwrap();
        let r = landau_radii(&t3).unwrap();
        assert!((r.radius - 0.5).abs() < 1e-12);
        assert_eq!(r.schlicht_radius, None);
    }

    #[test]
    fn degenerate_schwarz_case() {
        let t2 = LandauParams::new(Variant::T2, vec![1.0], vec![]).unwrap();
        let r = landau_radii(&t2).unwrap();
        assert!(r.degenerate);
        assert_eq!((r.radius, r.schlicht_radius), (1.0, Some(1.0)));
        let t5 = LandauParams::new(Variant::T5, vec![1.0], vec![]).unwrap();
        let r = landau_radii(&t5).unwrap();
        assert!(r.degenerate);
        assert_eq!((r.radius, r.schlicht_radius), (1.0, Some(1.0)));
    }

    #[test]
    fn negative_schlicht_is_clamped() {
        let t2 = LandauParams::new(Variant::T2, vec![2.0, 2.0], vec![]).unwrap();
        let r = landau_radii(&t2).unwrap();
        assert!(r.schlicht_clamped);
        assert_eq!(r.schlicht_radius, Some(0.0));
        assert!((r.radius - 0.129_279_250_074_563_55).abs() < 1e-12);
    }

    #[test]
    fn solver_examples() {
        match solve_monotone_root(|r| 1.0 - 2.0 * r, 0.0, 1.0).unwrap() {
            RootOutcome::Root { root, .. } => assert!((root - 0.5).abs() < 1e-13),
            other => panic!("{other:?}"),
        }
        let p = t1();
        match solve_monotone_root(|r| profile_value(&p, r).unwrap(), 0.0, 1.0).unwrap() {
            RootOutcome::Root { root, .. } => assert!((root - (2.0 - 3f64.sqrt())).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        assert!(matches!(solve_monotone_root(|_| 1.0, 0.0, 1.0).unwrap(), RootOutcome::Degenerate { .. }));
        assert!(matches!(solve_monotone_root(|r| -r, 0.0, 1.0), Err(LandauError::Bracket(_))));
    }

    #[test]
    fn tc_pole_guarded_bracket() {
        let tc = LandauParams::uniform_bound(3, 2.0).unwrap();
        let (lo, hi) = tc.search_bracket();
        assert_eq!(lo, 0.0);
        assert!((hi - 0.5).abs() <= 2.0 * POLE_GUARD);
        let r = landau_radii(&tc).unwrap();
        assert!((r.radius - 0.098_021_883_765_296_38).abs() < 1e-12);
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("t9".parse::<Variant>().is_err());
    }
}
