use landau::{landau_radii, profile_value, LandauParams, Variant};
use proptest::prelude::*;

/// Valid parameter sets for every profiled variant.
fn params() -> impl Strategy<Value = LandauParams> {
    let m = 1usize..=4;
    prop_oneof![
        (m.clone(), 1.01f64..5.0, prop::collection::vec((0.0f64..3.0, 1u32..=4), 3)).prop_map(|(m, m0, rest)| {
            let rest = &rest[..m - 1];
            let bounds = std::iter::once(m0).chain(rest.iter().map(|r| r.0)).collect();
            LandauParams::new(Variant::T1, bounds, rest.iter().map(|r| r.1).collect()).unwrap()
        }),
        (prop::collection::vec(0.0f64..3.0, 4), 1.0f64..5.0, m.clone()).prop_map(|(rest, m0, m)| bounds(
            Variant::T2,
            m0,
            &rest[..m - 1]
        )),
        (prop::collection::vec(1.0f64..3.0, 4), 1.0f64..5.0, m.clone()).prop_map(|(rest, m0, m)| bounds(
            Variant::T3,
            m0,
            &rest[..m - 1]
        )),
        (prop::collection::vec(0.0f64..3.0, 4), 1.01f64..5.0, m.clone()).prop_map(|(rest, m0, m)| bounds(
            Variant::T4,
            m0,
            &rest[..m - 1]
        )),
        (prop::collection::vec(1.0f64..3.0, 4), 1.0f64..5.0, m.clone()).prop_map(|(rest, m0, m)| bounds(
            Variant::T5,
            m0,
            &rest[..m - 1]
        )),
        (m, 1.01f64..5.0).prop_map(|(m, b)| LandauParams::uniform_bound(m, b).unwrap()),
    ]
}

fn bounds(v: Variant, m0: f64, rest: &[f64]) -> LandauParams {
    LandauParams::new(v, std::iter::once(m0).chain(rest.iter().copied()).collect(), vec![]).unwrap()
}

proptest! {
    #[test]
    fn profile_is_one_at_the_origin(p in params()) {
        prop_assert_eq!(profile_value(&p, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn profile_decreases(p in params(), a in 0.0f64..1.0, b in 0.0f64..1.0) {
        prop_assume!(a != b);
        let hi = p.search_bracket().1;
        let (x, y) = (a.min(b) * hi, a.max(b) * hi);
        prop_assume!(x < y);
        let (fx, fy) = (profile_value(&p, x).unwrap(), profile_value(&p, y).unwrap());
        prop_assert!(fx >= fy, "profile rises from {fx} at {x} to {fy} at {y}");
    }

    #[test]
    fn radius_is_a_root_or_degenerate(p in params()) {
        let r = landau_radii(&p).unwrap();
        prop_assert!(r.radius > 0.0 && r.radius <= 1.0);
        if r.degenerate {
            prop_assert_eq!(r.radius, 1.0);
        } else {
            prop_assert!(r.residual <= 1e-10, "residual {}", r.residual);
            prop_assert!(r.bracket.1 - r.bracket.0 <= 1e-13);
            prop_assert!(profile_value(&p, r.bracket.0).unwrap() > 0.0);
        }
        if let Some(s) = r.schlicht_radius {
            prop_assert!(s >= 0.0 && s <= r.radius);
        }
    }

    #[test]
    fn larger_bounds_shrink_the_radius(m in 1usize..=4, b in 1.01f64..4.0, step in 0.01f64..1.0) {
        for v in [Variant::T2, Variant::T3, Variant::T5, Variant::TC] {
            let small = LandauParams::new(v, vec![b; m], vec![]).unwrap();
            let large = LandauParams::new(v, vec![b + step; m], vec![]).unwrap();
            prop_assert!(landau_radii(&large).unwrap().radius <= landau_radii(&small).unwrap().radius);
        }
        let t1 = |m0: f64| LandauParams::new(Variant::T1, std::iter::once(m0).chain(vec![b; m - 1]).collect(), vec![1; m - 1]).unwrap();
        prop_assert!(landau_radii(&t1(b + step)).unwrap().radius <= landau_radii(&t1(b)).unwrap().radius);
    }

    #[test]
    fn t2_improves_on_uniform_bound(b in 1.05f64..4.0) {
        let t2 = landau_radii(&LandauParams::new(Variant::T2, vec![b, b], vec![]).unwrap()).unwrap().radius;
        let tc = landau_radii(&LandauParams::uniform_bound(2, b).unwrap()).unwrap().radius;
        prop_assert!(t2 > tc, "t2 {t2} vs tc {tc} at M = {b}");
    }

    #[test]
    fn classical_closed_form(b in 1.0f64..10.0) {
        let r = landau_radii(&LandauParams::classical(b).unwrap()).unwrap();
        prop_assert!((r.radius * (b + (b * b - 1.0).sqrt()) - 1.0).abs() < 1e-14);
        prop_assert!((r.schlicht_radius.unwrap() - b * r.radius * r.radius).abs() < 1e-15);
    }
}
