//! Poly-analytic and reduced poly-analytic functions.
//!
//! A [`PolyFn`] of order `m` is a list of analytic components `f_0..f_{m-1}`
//! combined either as `sum conj(z)^k f_k(z)` ([`PolyKind::ConjugatePower`])
//! or as `sum |z|^{2k} f_k(z)` ([`PolyKind::ModulusPower`]). Components are
//! truncated series, or exact closed forms where a series would introduce
//! truncation error (the logarithmic part of the extremal functions).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LandauError, Result};
use crate::series::{check_disk, AnalyticSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolyKind {
    ConjugatePower,
    ModulusPower,
}

/// Non-polynomial analytic functions evaluated exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ClosedForm {
    /// `M^2 z + (M^3 - M) log(1 - z/M)` for `M > 1`. Its derivative is
    /// `M (1 - M z) / (M - z)`, a disk automorphism scaled by `M`.
    LandauLog { m0: f64 },
}

impl ClosedForm {
    pub fn value_and_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        match *self {
            ClosedForm::LandauLog { m0 } => {
                let one = Complex64::new(1.0, 0.0);
                // Re(1 - z/M) > 0 on the unit disk, so the principal log is analytic there.
                let value = z * (m0 * m0) + (one - z / m0).ln() * (m0 * m0 * m0 - m0);
                let deriv = (one - z * m0) * m0 / (Complex64::new(m0, 0.0) - z);
                (value, deriv)
            }
        }
    }
}

/// One analytic component `f_k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Component {
    Series(AnalyticSeries),
    Closed(ClosedForm),
}

impl Component {
    pub fn value(&self, z: Complex64) -> Complex64 {
        match self {
            Component::Series(s) => s.horner(z),
            Component::Closed(c) => c.value_and_derivative(z).0,
        }
    }

    pub fn value_and_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            Component::Series(s) => s.value_and_derivative(z),
            Component::Closed(c) => c.value_and_derivative(z),
        }
    }

    pub fn as_series(&self) -> Option<&AnalyticSeries> {
        match self {
            Component::Series(s) => Some(s),
            Component::Closed(_) => None,
        }
    }
}

impl From<AnalyticSeries> for Component {
    fn from(s: AnalyticSeries) -> Self {
        Component::Series(s)
    }
}

impl From<ClosedForm> for Component {
    fn from(c: ClosedForm) -> Self {
        Component::Closed(c)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyFn {
    kind: PolyKind,
    components: Vec<Component>,
}

/// First-order Wirtinger data at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WirtingerData {
    pub f_z: Complex64,
    pub f_zbar: Complex64,
    /// `|F_z|^2 - |F_zbar|^2`
    pub jacobian: f64,
    /// `|F_z| + |F_zbar|`, the largest directional derivative.
    pub lambda_big: f64,
    /// `||F_z| - |F_zbar||`, the smallest directional derivative.
    pub lambda_small: f64,
}

impl WirtingerData {
    fn new(f_z: Complex64, f_zbar: Complex64) -> Self {
        let (a, b) = (f_z.norm(), f_zbar.norm());
        Self { f_z, f_zbar, jacobian: a * a - b * b, lambda_big: a + b, lambda_small: (a - b).abs() }
    }

    /// Derivative of `F` along the unit direction `e^{i theta}`.
    pub fn directional(&self, theta: f64) -> Complex64 {
        let e = Complex64::from_polar(1.0, theta);
        self.f_z * e + self.f_zbar * e.conj()
    }
}

impl PolyFn {
    pub fn new(kind: PolyKind, components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(LandauError::InvalidParams("a poly-analytic function needs order m >= 1".into()));
        }
        Ok(Self { kind, components })
    }

    /// Poly-analytic function built from series components.
    pub fn conjugate_power(components: Vec<AnalyticSeries>) -> Result<Self> {
        Self::new(PolyKind::ConjugatePower, components.into_iter().map(Component::from).collect())
    }

    /// Reduced poly-analytic function built from series components.
    pub fn modulus_power(components: Vec<AnalyticSeries>) -> Result<Self> {
        Self::new(PolyKind::ModulusPower, components.into_iter().map(Component::from).collect())
    }

    /// The analytic function `f`, as an order-1 poly-analytic function.
    pub fn analytic(f: impl Into<Component>) -> Self {
        Self { kind: PolyKind::ConjugatePower, components: vec![f.into()] }
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// True when some component is carried as an exact closed form.
    pub fn is_closed(&self) -> bool {
        self.components.iter().any(|c| matches!(c, Component::Closed(_)))
    }

    /// Series components, or `None` if any component is a closed form.
    pub fn series_components(&self) -> Option<Vec<&AnalyticSeries>> {
        self.components.iter().map(Component::as_series).collect()
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let w = match self.kind {
            PolyKind::ConjugatePower => z.conj(),
            PolyKind::ModulusPower => Complex64::new(z.norm_sqr(), 0.0),
        };
        self.components.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, f| acc * w + f.value(z))
    }

    pub fn wirtinger(&self, z: Complex64) -> Result<WirtingerData> {
        check_disk(z)?;
        Ok(self.wirtinger_unchecked(z))
    }

    pub(crate) fn wirtinger_unchecked(&self, z: Complex64) -> WirtingerData {
        let zero = Complex64::new(0.0, 0.0);
        let zbar = z.conj();
        let mut f_z = zero;
        let mut f_zbar = zero;
        // zbar^{k-1}, zbar^k, z^{k-1}, z^k carried incrementally so that z = 0 never
        // hits a negative power.
        let mut zbar_prev = zero;
        let mut zbar_k = Complex64::new(1.0, 0.0);
        let mut z_prev = zero;
        let mut z_k = Complex64::new(1.0, 0.0);
        for (k, comp) in self.components.iter().enumerate() {
            let (f, df) = comp.value_and_derivative(z);
            let kf = k as f64;
            match self.kind {
                PolyKind::ConjugatePower => {
                    f_z += zbar_k * df;
                    f_zbar += zbar_prev * f * kf;
                }
                PolyKind::ModulusPower => {
                    f_z += zbar_k * (z_prev * f * kf + z_k * df);
                    f_zbar += zbar_prev * z_k * f * kf;
                }
            }
            zbar_prev = zbar_k;
            zbar_k *= zbar;
            z_prev = z_k;
            z_k *= z;
        }
        WirtingerData::new(f_z, f_zbar)
    }

    /// Modulus of an iterated central-difference estimate of the `m`-th
    /// conjugate Wirtinger derivative at `z`. Vanishes (up to `O(h^2)`) exactly
    /// when the function is poly-analytic of order at most `m`.
    pub fn order_residual(&self, z: Complex64, h: f64) -> Result<f64> {
        if self.kind == PolyKind::ModulusPower {
            return Err(LandauError::UnsupportedKind(
                "reduced poly-analytic functions are not annihilated by the m-th dbar derivative".into(),
            ));
        }
        let m = self.order();
        if !(h > 0.0) || z.norm() + m as f64 * h >= 1.0 {
            return Err(LandauError::Domain(format!(
                "stencil of {m} steps of size {h} around |z| = {} leaves the disk",
                z.norm()
            )));
        }
        Ok(dbar_iterated(&|w| self.eval_unchecked(w), z, h, m).norm())
    }
}

fn dbar_iterated(f: &dyn Fn(Complex64) -> Complex64, z: Complex64, h: f64, depth: usize) -> Complex64 {
    if depth == 0 {
        return f(z);
    }
    let g = |w| dbar_iterated(f, w, h, depth - 1);
    let i = Complex64::new(0.0, 1.0);
    let dx = g(z + h) - g(z - h);
    let dy = g(z + i * h) - g(z - i * h);
    (dx + i * dy) / (4.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn s(coeffs: &[f64]) -> AnalyticSeries {
        AnalyticSeries::from_real(coeffs).unwrap()
    }

    fn modulus_squared() -> PolyFn {
        PolyFn::conjugate_power(vec![s(&[0.0, 0.0]), s(&[0.0, 1.0])]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = modulus_squared();
        assert!((f.eval(c(0.3, 0.4)).unwrap() - c(0.25, 0.0)).norm() < 1e-15);

        let id = PolyFn::conjugate_power(vec![s(&[0.0, 1.0])]).unwrap();
        assert_eq!(id.eval(c(0.2, -0.7)).unwrap(), c(0.2, -0.7));

        let reduced = PolyFn::modulus_power(vec![s(&[0.0, 1.0]), s(&[0.0, 0.5])]).unwrap();
        assert!((reduced.eval(c(0.5, 0.0)).unwrap() - c(0.5625, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn wirtinger_examples() {
        let z = c(0.3, 0.4);
        let w = modulus_squared().wirtinger(z).unwrap();
        assert!((w.f_z - z.conj()).norm() < 1e-15);
        assert!((w.f_zbar - z).norm() < 1e-15);
        assert!(w.jacobian.abs() < 1e-15);

        let id = PolyFn::conjugate_power(vec![s(&[0.0, 1.0])]).unwrap();
        let w = id.wirtinger(c(0.1, 0.1)).unwrap();
        assert_eq!((w.f_z, w.f_zbar), (c(1.0, 0.0), c(0.0, 0.0)));
        assert_eq!((w.jacobian, w.lambda_big, w.lambda_small), (1.0, 1.0, 1.0));
    }

    #[test]
    fn wirtinger_at_origin_with_modulus_kind() {
        let f = PolyFn::modulus_power(vec![s(&[0.0, 1.0]), s(&[0.0, -1.0]), s(&[0.0, 0.3])]).unwrap();
        let w = f.wirtinger(c(0.0, 0.0)).unwrap();
        assert_eq!(w.f_z, c(1.0, 0.0));
        assert_eq!(w.f_zbar, c(0.0, 0.0));
    }

    #[test]
    fn closed_log_normalized_at_origin() {
        let g = ClosedForm::LandauLog { m0: 2.0 };
        let (v, d) = g.value_and_derivative(c(0.0, 0.0));
        assert_eq!(v, c(0.0, 0.0));
        assert!((d - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn order_residual_examples() {
        let r = modulus_squared().order_residual(c(0.2, 0.0), 1e-3).unwrap();
        assert!(r <= 1e-6, "{r}");
        let id = PolyFn::conjugate_power(vec![s(&[0.0, 1.0])]).unwrap();
        assert!(id.order_residual(c(0.0, 0.5), 1e-3).unwrap() <= 1e-8);
    }

    #[test]
    fn order_residual_rejects_reduced_and_large_stencils() {
        let reduced = PolyFn::modulus_power(vec![s(&[0.0, 1.0]), s(&[0.0, 0.5])]).unwrap();
        assert!(matches!(reduced.order_residual(c(0.1, 0.0), 1e-3), Err(LandauError::UnsupportedKind(_))));
        assert!(matches!(modulus_squared().order_residual(c(0.99, 0.0), 0.01), Err(LandauError::Domain(_))));
    }

    #[test]
    fn dbar_stencil_is_not_trivially_zero() {
        // zbar^2 z^2 has order 3; two dbar steps leave 2 z^2, three leave 0.
        let f = PolyFn::conjugate_power(vec![s(&[0.0]), s(&[0.0]), s(&[0.0, 0.0, 1.0])]).unwrap();
        let z = c(0.3, 0.1);
        let two = dbar_iterated(&|w| f.eval_unchecked(w), z, 1e-2, 2);
        assert!((two - z * z * 2.0).norm() < 1e-8, "{two}");
        assert!(f.order_residual(z, 1e-2).unwrap() < 1e-8);
    }

    #[test]
    fn domain_errors() {
        let f = modulus_squared();
        assert!(f.eval(c(1.0, 0.0)).is_err());
        assert!(f.wirtinger(c(0.0, -1.2)).is_err());
        assert!(PolyFn::conjugate_power(vec![]).is_err());
    }
}
