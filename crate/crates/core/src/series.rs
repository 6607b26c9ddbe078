//! Truncated Taylor series with complex coefficients.
//!
//! An [`AnalyticSeries`] of order `N` stores `c_0..=c_N` and stands for the
//! polynomial `sum c_n z^n` on the open unit disk. All arithmetic truncates
//! at an explicit order; nothing here tries to estimate the discarded tail.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LandauError, Result};

/// Default truncation order for series built from rational closed forms.
pub const DEFAULT_ORDER: usize = 64;

/// Denominators with a smaller constant term are rejected by [`series_divide`].
pub const SINGULAR_TOL: f64 = 1e-12;

const NORMALIZE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyticSeries {
    coeffs: Vec<Complex64>,
}

impl AnalyticSeries {
    /// Builds a series from `c_0..=c_N`. The list must be non-empty and finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(LandauError::Domain("a series needs at least one coefficient".into()));
        }
        if let Some(n) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(LandauError::Domain(format!("coefficient {n} is not finite")));
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients, mostly a convenience for tests and closed forms.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::new(0.0, 0.0); order + 1] }
    }

    /// `c * z^n`, padded with zeros up to `order` (at least `n`).
    pub fn monomial(n: usize, c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order.max(n));
        s.coeffs[n] = c;
        s
    }

    /// The series `z`.
    pub fn identity() -> Self {
        Self::monomial(1, Complex64::new(1.0, 0.0), 1)
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// `sum |c_n|`, an upper bound for `sup |s|` on the closed unit disk.
    pub fn abs_coeff_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// Horner evaluation at a point of the open unit disk.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z)?;
        Ok(self.horner(z))
    }

    /// Value and first derivative in one Horner pass. No domain check.
    pub fn value_and_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = Complex64::new(0.0, 0.0);
        let mut deriv = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            deriv = deriv * z + value;
            value = value * z + c;
        }
        (value, deriv)
    }

    pub(crate) fn horner(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Term-wise derivative; an order-0 series maps to the zero series.
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(0);
        }
        let coeffs = self.coeffs[1..].iter().enumerate().map(|(n, &c)| c * (n + 1) as f64).collect();
        Self { coeffs }
    }

    /// Antiderivative vanishing at the origin. Raises the order by one.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend(self.coeffs.iter().enumerate().map(|(n, &c)| c / (n + 1) as f64));
        Self { coeffs }
    }

    pub fn scale(&self, a: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&c| c * a).collect() }
    }

    /// Coefficient-wise sum; the result has the larger of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self { coeffs }
    }

    /// Copy truncated (or zero-padded) to `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let coeffs = (0..=order).map(|i| self.coeff(i)).collect();
        Self { coeffs }
    }
}

/// Cauchy product of `a` and `b` truncated at `order`.
pub fn cauchy_product(a: &AnalyticSeries, b: &AnalyticSeries, order: usize) -> AnalyticSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let hi = n.min(a.order());
            (0..=hi).filter(|&i| n - i <= b.order()).map(|i| a.coeffs[i] * b.coeffs[n - i]).sum()
        })
        .collect();
    AnalyticSeries { coeffs }
}

/// Quotient `num / den` through `z^order`.
pub fn series_divide(num: &AnalyticSeries, den: &AnalyticSeries, order: usize) -> Result<AnalyticSeries> {
    let d0 = den.coeffs[0];
    if d0.norm() < SINGULAR_TOL {
        return Err(LandauError::Singular(d0.norm()));
    }
    let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for i in 1..=n.min(den.order()) {
            acc -= den.coeffs[i] * q[n - i];
        }
        q.push(acc / d0);
    }
    AnalyticSeries::new(q)
}

/// Rescales `raw` so that its coefficient sum is at most `bound`, which
/// bounds the modulus of the result by `bound` on the whole disk.
pub fn normalize_bounded(raw: &AnalyticSeries, bound: f64) -> Result<AnalyticSeries> {
    if !(bound >= 0.0 && bound.is_finite()) {
        return Err(LandauError::Domain(format!("bound must be finite and non-negative, got {bound}")));
    }
    if raw.is_zero() {
        return Err(LandauError::Precondition("cannot normalize the zero series".into()));
    }
    let factor = bound / (raw.abs_coeff_sum() + NORMALIZE_EPS);
    Ok(raw.scale(Complex64::new(factor, 0.0)))
}

pub(crate) fn check_disk(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r < 1.0 {
        Ok(())
    } else {
        Err(LandauError::Domain(format!("|z| = {r} is not inside the unit disk")))
    }
}
