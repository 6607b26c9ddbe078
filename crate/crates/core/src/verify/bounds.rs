//! Coefficient, growth and minimum-modulus bounds for single analytic components.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{sampling, CheckEntry, Witness, MIN_BOUNDARY_SAMPLES, MODULUS_TOL};
use crate::error::{LandauError, Result};
use crate::polyfn::Component;
use crate::series::AnalyticSeries;

const GRID_POINTS: usize = 500;
const GRID_RADIUS: f64 = 0.95;
const JET_TOL: f64 = 1e-12;
const NORMALIZATION_TOL: f64 = 1e-9;
const BOUND_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BoundCheck {
    /// `|a_n| <= M - 1/M` for `n >= 2`, given `|a_1| = 1` and `|f| <= M`.
    CoeffLemma1 { bound: f64 },
    /// `|f'| <= M |z|^{p-1}/(p-1)!` and `|f| <= M |z|^p/p!`, given a zero of
    /// order `p` at the origin and `|f^{(p)}| <= M`.
    DerivCascadeF1 { bound: f64, order: u32 },
    /// `|f| <= M |z|` and `|f'| <= M / (1 - |z|^2)`, given `f(0) = 0`, `|f| <= M`.
    SchwarzPickF7 { bound: f64 },
    /// `min_{|z| = r} |f| >= L^2 r + (L^3 - L) log(1 - r/L)`, given
    /// `f(0) = 0`, `f'(0) = 1` and `|f'| <= L`.
    MinModulusLem3ii { lambda: f64, r: f64 },
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn precondition<T>(msg: String) -> Result<T> {
    Err(LandauError::Precondition(msg))
}

fn need_series<'a>(f: &'a Component, what: &str) -> Result<&'a AnalyticSeries> {
    f.as_series().ok_or_else(|| LandauError::Precondition(format!("{what} needs a truncated series component")))
}

fn grid() -> Vec<Complex64> {
    sampling::sunflower(GRID_POINTS, GRID_RADIUS, 0)
}

fn grid_sup(g: impl Fn(Complex64) -> Complex64) -> f64 {
    grid().into_iter().map(|z| g(z).norm()).fold(0.0, f64::max)
}

/// Minimum of `bound(z) - value(z)` over the grid, with its location.
fn grid_slack(slack: impl Fn(Complex64) -> f64) -> (f64, Complex64) {
    grid().into_iter().map(|z| (slack(z), z)).fold(
        (f64::INFINITY, Complex64::default()),
        |a, b| {
            if b.0 < a.0 {
                b
            } else {
                a
            }
        },
    )
}

pub fn check_bounds_suite(f: &Component, check: BoundCheck) -> Result<CheckEntry> {
    match check {
        BoundCheck::CoeffLemma1 { bound } => {
            let s = need_series(f, "CoeffLemma1")?;
            if s.coeff(0).norm() > JET_TOL || (s.coeff(1).norm() - 1.0).abs() > NORMALIZATION_TOL {
                return precondition(format!(
                    "need f(0) = 0 and |a_1| = 1, got a_0 = {}, a_1 = {}",
                    s.coeff(0),
                    s.coeff(1)
                ));
            }
            let sup = grid_sup(|z| s.horner(z));
            if sup > bound * (1.0 + NORMALIZATION_TOL) {
                return precondition(format!("grid sup |f| = {sup} exceeds M = {bound}"));
            }
            let limit = bound - 1.0 / bound;
            let (worst_n, worst) = s
                .coeffs()
                .iter()
                .enumerate()
                .skip(2)
                .map(|(n, a)| (n, a.norm()))
                .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            let margin = limit - worst;
            let entry = CheckEntry::new("coeff_lemma1", margin >= -BOUND_TOL, margin, s.order().saturating_sub(1));
            Ok(entry.with_note(format!("max |a_n| = {worst:.6e} at n = {worst_n}, limit {limit:.6e}")))
        }
        BoundCheck::DerivCascadeF1 { bound, order } => {
            let s = need_series(f, "DerivCascadeF1")?;
            if order == 0 {
                return precondition("vanishing order p must be at least 1".into());
            }
            if let Some(n) = (0..order as usize).find(|&n| s.coeff(n).norm() > JET_TOL) {
                return precondition(format!("coefficient {n} = {} should vanish below order {order}", s.coeff(n)));
            }
            let top = (0..order).fold(s.clone(), |d, _| d.differentiate());
            let sup = grid_sup(|z| top.horner(z));
            if sup > bound * (1.0 + NORMALIZATION_TOL) {
                return precondition(format!("grid sup |f^({order})| = {sup} exceeds M = {bound}"));
            }
            let (margin, at) = grid_slack(|z| {
                let (v, d) = s.value_and_derivative(z);
                let rho = z.norm();
                let dv = bound * rho.powi(order as i32 - 1) / factorial(order - 1) - d.norm();
                let vv = bound * rho.powi(order as i32) / factorial(order) - v.norm();
                dv.min(vv)
            });
            let passed = margin >= -BOUND_TOL;
            Ok(CheckEntry::new("deriv_cascade_f1", passed, margin, GRID_POINTS).with_witness(Some(Witness::Point(at))))
        }
        BoundCheck::SchwarzPickF7 { bound } => {
            if f.value(Complex64::default()).norm() > JET_TOL {
                return precondition("need f(0) = 0".into());
            }
            let sup = grid_sup(|z| f.value(z));
            if sup > bound * (1.0 + NORMALIZATION_TOL) + BOUND_TOL {
                return precondition(format!("grid sup |f| = {sup} exceeds M = {bound}"));
            }
            let (margin, at) = grid_slack(|z| {
                let (v, d) = f.value_and_derivative(z);
                let rho = z.norm();
                (bound * rho - v.norm()).min(bound / (1.0 - rho * rho) - d.norm())
            });
            let passed = margin >= -BOUND_TOL;
            Ok(CheckEntry::new("schwarz_pick_f7", passed, margin, GRID_POINTS).with_witness(Some(Witness::Point(at))))
        }
        BoundCheck::MinModulusLem3ii { lambda, r } => {
            if !(r > 0.0 && r < 1.0) {
                return Err(LandauError::Domain(format!("radius {r} must lie in (0, 1)")));
            }
            let (v0, d0) = f.value_and_derivative(Complex64::default());
            if v0.norm() > JET_TOL || (d0 - 1.0).norm() > NORMALIZATION_TOL {
                return precondition(format!("need f(0) = 0 and f'(0) = 1, got {v0} and {d0}"));
            }
            let sup = grid_sup(|z| f.value_and_derivative(z).1);
            if sup > lambda * (1.0 + NORMALIZATION_TOL) {
                return precondition(format!("grid sup |f'| = {sup} exceeds Lambda = {lambda}"));
            }
            let lower = lambda * lambda * r + (lambda.powi(3) - lambda) * (1.0 - r / lambda).ln();
            let (min_mod, at) = sampling::circle(MIN_BOUNDARY_SAMPLES, r)
                .into_iter()
                .map(|z| (f.value(z).norm(), z))
                .fold((f64::INFINITY, Complex64::default()), |a, b| if b.0 < a.0 { b } else { a });
            let margin = min_mod - lower;
            Ok(CheckEntry::new("min_modulus_lem3ii", margin >= -MODULUS_TOL, margin, MIN_BOUNDARY_SAMPLES)
                .with_witness(Some(Witness::Point(at)))
                .with_note(format!("lower bound {lower:.6e}, min modulus {min_mod:.6e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::lemma1_extremal_series;
    use crate::polyfn::ClosedForm;

    fn series(coeffs: &[f64]) -> Component {
        AnalyticSeries::from_real(coeffs).unwrap().into()
    }

    #[test]
    fn lemma1_extremal_attains_the_bound() {
        let f: Component = lemma1_extremal_series(2, 2.0, 64).unwrap().into();
        let e = check_bounds_suite(&f, BoundCheck::CoeffLemma1 { bound: 2.0 }).unwrap();
        assert!(e.passed && e.margin.abs() < 1e-12, "{e:?}");
    }

    #[test]
    fn coefficient_violation_is_reported() {
        // bounded by 1.9, and 0.9 <= 1.9 - 1/1.9; claiming M = 1.2 breaks the sup precondition
        let f = series(&[0.0, 1.0, 0.9]);
        let e = check_bounds_suite(&f, BoundCheck::CoeffLemma1 { bound: 1.9 }).unwrap();
        assert!(e.passed);
        assert!(check_bounds_suite(&f, BoundCheck::CoeffLemma1 { bound: 1.2 }).is_err());
    }

    #[test]
    fn min_modulus_identity() {
        let f = series(&[0.0, 1.0]);
        let e = check_bounds_suite(&f, BoundCheck::MinModulusLem3ii { lambda: 1.0, r: 0.5 }).unwrap();
        assert!(e.passed && e.margin.abs() < 1e-15, "{e:?}");
    }

    #[test]
    fn min_modulus_is_attained_by_the_log_extremal() {
        let f = Component::Closed(ClosedForm::LandauLog { m0: 2.0 });
        let r0 = 2.0 - 3f64.sqrt();
        let e = check_bounds_suite(&f, BoundCheck::MinModulusLem3ii { lambda: 2.0, r: r0 }).unwrap();
        assert!(e.passed && e.margin.abs() < 1e-12, "{e:?}");
    }

    #[test]
    fn schwarz_pick_on_square() {
        let f = series(&[0.0, 0.0, 1.5]);
        assert!(check_bounds_suite(&f, BoundCheck::SchwarzPickF7 { bound: 1.5 }).unwrap().passed);
        assert!(check_bounds_suite(&series(&[0.1, 1.0]), BoundCheck::SchwarzPickF7 { bound: 2.0 }).is_err());
    }

    #[test]
    fn deriv_cascade() {
        // f'' = 1 everywhere: f = z^2 / 2
        let f = series(&[0.0, 0.0, 0.5]);
        let e = check_bounds_suite(&f, BoundCheck::DerivCascadeF1 { bound: 1.0, order: 2 }).unwrap();
        assert!(e.passed && e.margin.abs() < 1e-12);
        assert!(check_bounds_suite(&f, BoundCheck::DerivCascadeF1 { bound: 1.0, order: 3 }).is_err());
        assert!(check_bounds_suite(&series(&[0.0, 1.0]), BoundCheck::DerivCascadeF1 { bound: 1.0, order: 2 }).is_err());
    }
}
