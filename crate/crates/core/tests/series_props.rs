use landau::{cauchy_product, normalize_bounded, series_divide, AnalyticSeries};
use num_complex::Complex64;
use proptest::prelude::*;

fn coeffs(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im)), len)
}

fn point(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #[test]
    fn evaluation_is_linear(a in coeffs(1..10), b in coeffs(1..10), z in point(0.95), re in -2.0f64..2.0) {
        let (sa, sb) = (AnalyticSeries::new(a).unwrap(), AnalyticSeries::new(b).unwrap());
        let c = Complex64::new(re, 0.5);
        let lhs = sa.scale(c).add(&sb).eval(z).unwrap();
        let rhs = c * sa.eval(z).unwrap() + sb.eval(z).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn derivative_matches_difference_quotient(a in coeffs(1..10), z in point(0.8)) {
        let s = AnalyticSeries::new(a).unwrap();
        let h = 1e-6;
        let fd = (s.eval(z + h).unwrap() - s.eval(z - h).unwrap()) / (2.0 * h);
        let exact = s.differentiate().eval(z).unwrap();
        prop_assert!((fd - exact).norm() < 1e-6 * (1.0 + exact.norm()));
    }

    #[test]
    fn antiderivative_inverts_derivative(a in coeffs(1..10)) {
        let s = AnalyticSeries::new(a).unwrap();
        let back = s.antiderivative().differentiate();
        for n in 0..=s.order() {
            prop_assert!((back.coeff(n) - s.coeff(n)).norm() < 1e-15);
        }
    }

    #[test]
    fn division_round_trips(a in coeffs(1..12), b in coeffs(1..12), lead in 0.5f64..2.0) {
        let mut b = b;
        b[0] = Complex64::new(lead, 0.0);
        let (num, den) = (AnalyticSeries::new(a).unwrap(), AnalyticSeries::new(b).unwrap());
        let order = 16;
        let q = series_divide(&num, &den, order).unwrap();
        let back = cauchy_product(&q, &den, order);
        for n in 0..=order {
            prop_assert!((back.coeff(n) - num.coeff(n)).norm() < 1e-8 * (1.0 + q.abs_coeff_sum()));
        }
    }

    #[test]
    fn normalization_caps_the_coefficient_sum(a in coeffs(2..12), bound in 0.1f64..5.0) {
        let s = AnalyticSeries::new(a).unwrap();
        prop_assume!(!s.is_zero());
        let n = normalize_bounded(&s, bound).unwrap();
        prop_assert!(n.abs_coeff_sum() <= bound);
        prop_assert!(n.abs_coeff_sum() >= bound * (1.0 - 1e-9));
    }

    #[test]
    fn product_evaluates_pointwise(a in coeffs(1..8), b in coeffs(1..8), z in point(0.9)) {
        let (sa, sb) = (AnalyticSeries::new(a).unwrap(), AnalyticSeries::new(b).unwrap());
        let p = cauchy_product(&sa, &sb, sa.order() + sb.order());
        prop_assert!((p.eval(z).unwrap() - sa.eval(z).unwrap() * sb.eval(z).unwrap()).norm() < 1e-12);
    }
}
