use proptest::prelude::*;

use pedal_geometry::circle::power_of_point;
use pedal_geometry::projective::{collinearity_det, distance, join, HLine, HPoint, Tolerance};
use pedal_geometry::theorems::checks::{
    circumcenter_pedal_steiner_residual, equidistant_arc_residual, isogonal_pair_line, metric_identity_sides,
    orthic_line_residual, polarity_residual,
};
use pedal_geometry::theorems::sampling::{interior_point, sample_triangle, trial_rng};
use pedal_geometry::theorems::{build_scene, catalog_ids, run_suite, Frame, TrialConfig};
use pedal_geometry::triangle::{center, isogonal_conjugate, reflection_triangle, CenterKind, Triangle};
use pedal_geometry::GeomError;

fn t0() -> Triangle {
    Triangle::from_xy([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]).unwrap()
}

fn pt(x: f64, y: f64) -> HPoint {
    HPoint::xy(x, y).unwrap()
}

fn bevan_t0() -> HPoint {
    pt(3.0, 2.0)
}

/// Fixture tolerance, a tenth of the default absolute tolerance.
fn tight() -> Tolerance {
    Tolerance::default().with_abs_tol(1e-8)
}

#[test]
fn bevan_point_of_reference_triangle() {
    assert!(distance(&center(&t0(), CenterKind::Bevan), &bevan_t0()).unwrap() < 1e-12);
}

#[test]
fn equidistant_arc_fixture() {
    // D = (3.5, 3.5), B' = (3, 0), C' = (0, 4): both distances √12.5
    let d = pt(3.5, 3.5);
    assert!((distance(&d, &pt(3.0, 0.0)).unwrap() - 12.5f64.sqrt()).abs() < 1e-12);
    assert!((distance(&d, &pt(0.0, 4.0)).unwrap() - 12.5f64.sqrt()).abs() < 1e-12);
    assert!(equidistant_arc_residual(&t0(), 1.0).unwrap().abs() < 1e-12);
    assert!(equidistant_arc_residual(&t0(), 0.0).unwrap().abs() < 1e-12);
}

#[test]
fn metric_identity_fixtures() {
    let t = t0();
    let i = center(&t, CenterKind::Incenter);
    let (lhs, rhs) = metric_identity_sides(&t, &i, &i).unwrap();
    assert!((lhs - 4.0).abs() < 1e-12 && (rhs - 4.0).abs() < 1e-12);

    let (o, h) = (center(&t, CenterKind::Circumcenter), center(&t, CenterKind::Orthocenter));
    let (lhs, rhs) = metric_identity_sides(&t, &o, &h).unwrap();
    assert!((lhs - 6.25).abs() < 1e-12 && (rhs - 6.25).abs() < 1e-12);
}

#[test]
fn metric_identity_signed_form_on_an_obtuse_triangle() {
    // the stated form with |R² - OH²| breaks once OH > R
    let t = Triangle::from_xy([(0.0, 0.0), (6.0, 0.0), (1.0, 1.5)]).unwrap();
    assert!(t.angles().iter().any(|&a| a > std::f64::consts::FRAC_PI_2));
    let p = pt(2.0, 0.5);
    let q = isogonal_conjugate(&p, &t).unwrap();
    let (lhs, rhs) = metric_identity_sides(&t, &p, &q).unwrap();
    let (o, h) = (center(&t, CenterKind::Circumcenter), center(&t, CenterKind::Orthocenter));
    let signed = t.circumcircle().r_sq() - distance(&o, &h).unwrap().powi(2);
    assert!(signed < 0.0);
    assert!((lhs - rhs).abs() > 1.0);
    assert!((lhs - (rhs - signed.abs() + signed)).abs() < 1e-9);
}

#[test]
fn orthology_fixture_on_reference_triangle() {
    let s = build_scene(&t0(), &bevan_t0(), 0.5, &tight()).unwrap();
    let f = s.frame();
    let bp = &s.bisector_pedals;
    // Q2 = (2.5, 0) sits on A'B', so its conjugate degenerates to C' = O2
    assert!(distance(&s.q2, &pt(2.5, 0.0)).unwrap() < 1e-12);
    assert_eq!(isogonal_conjugate(&s.q2, bp), Err(GeomError::OnSideline));
    assert!(distance(s.o2.center(), bp.c()).unwrap() < 1e-12);
    assert!(f.point_distance(&isogonal_conjugate(&s.q1, bp).unwrap(), s.o1.center()) < 1e-9);
    for (q, tri) in [(&s.q1, s.first_triangle().unwrap()), (&s.q2, s.second_triangle().unwrap())] {
        let refl = reflection_triangle(q, bp).unwrap();
        for (a, b) in refl.vertices().iter().zip(tri.vertices().iter()) {
            assert!(f.point_distance(a, b) < 1e-9);
        }
    }
    let d1 = distance(&s.h_prime, &s.q1).unwrap();
    let d2 = distance(&s.h_prime, &s.q2).unwrap();
    assert!((d1 - d2).abs() < 1e-9);
    assert!(f.incidence(&s.q, &s.q_line) < 1e-9);
    assert!(f.incidence(&s.h_prime, &s.steiner_p) < 1e-9);
    assert!(f.incidence(&s.q, &s.steiner_p) < 1e-9);
}

#[test]
fn offset_centers_merge_as_offset_shrinks() {
    let s = build_scene(&t0(), &bevan_t0(), 1e-6, &tight()).unwrap();
    assert!(distance(&s.q1, &s.q).unwrap() < 1e-5);
    assert!(distance(&s.q2, &s.q).unwrap() < 1e-5);
}

#[test]
fn fixed_point_fixture() {
    for x in [0.3, 0.5, 0.8] {
        let s = build_scene(&t0(), &bevan_t0(), x, &tight()).unwrap();
        assert!(distance(&s.h_prime, &pt(2.0, 1.0)).unwrap() < 1e-12);
        assert!(s.rad_axis.signed_distance(&s.h_prime).unwrap().abs() < 1e-12);
    }
}

#[test]
fn steiner_line_fixture() {
    let s = build_scene(&t0(), &bevan_t0(), 0.5, &tight()).unwrap();
    let x_eq_2 = HLine::new(1.0, 0.0, -2.0).unwrap();
    assert!(s.steiner_p.coeff_distance(&x_eq_2) < 1e-10);
    let euler = join(&s.o_prime, &s.h_prime).unwrap();
    assert!(euler.coeff_distance(&x_eq_2) < 1e-10);
}

#[test]
fn steiner_line_when_p_is_the_circumcenter() {
    let t = Triangle::from_xy([(0.0, 0.0), (7.0, 0.0), (2.0, 5.0)]).unwrap();
    let o = center(&t, CenterKind::Circumcenter);
    let s = build_scene(&t, &o, 0.3, &tight()).unwrap();
    let euler = join(&s.o_prime, &s.h_prime).unwrap();
    assert!(s.frame().line_distance(&s.steiner_p, &euler) < 1e-9);
    assert!(circumcenter_pedal_steiner_residual(&t).unwrap() < 1e-9);
}

#[test]
fn fixed_line_fixture() {
    let y_eq_1 = HLine::new(0.0, 1.0, -1.0).unwrap();
    for x in [0.3, 0.6] {
        let s = build_scene(&t0(), &bevan_t0(), x, &tight()).unwrap();
        assert!(s.rad_axis.coeff_distance(&y_eq_1) < 1e-12);
        let f = s.frame();
        assert!(f.conic_membership(&s.p, &s.c_conic) < 1e-9);
        assert!(f.conic_membership(&s.o_p, &s.c_conic) < 1e-9);
    }
}

#[test]
fn section4_fixture() {
    let t = t0();
    let s = build_scene(&t, &bevan_t0(), 0.5, &tight()).unwrap();
    assert!(distance(&s.h_prime, &center(&t, CenterKind::Nagel)).unwrap() < 1e-12);
    let o0 = pedal_geometry::circle::circumcircle(&pt(2.4, 1.2), &pt(0.0, 2.0), &pt(3.0, 0.0)).unwrap();
    assert!(distance(o0.center(), &s.o_p).unwrap() < 1e-12);
    assert!(collinearity_det(&s.bevan, &s.h_prime, &s.o_p).abs() < 1e-9);
    let acute = Triangle::from_xy([(0.0, 0.0), (6.0, 0.0), (2.5, 4.0)]).unwrap();
    assert!(orthic_line_residual(&acute).unwrap() < 1e-9);
}

#[test]
fn open_problem_fixture() {
    let t = t0();
    let r = t.inradius();
    let nagel_line = HLine::new(0.0, 1.0, -1.0).unwrap();
    for frac in [0.1, 0.2, 0.4, 0.5 / r] {
        let s = build_scene(&t, &bevan_t0(), frac * r, &tight()).unwrap();
        assert!(s.rad_axis.coeff_distance(&nagel_line) < 1e-12);
        for p in [pt(1.0, 1.0), pt(4.0 / 3.0, 1.0), pt(2.0, 1.0)] {
            assert!(s.rad_axis.signed_distance(&p).unwrap().abs() < 1e-12);
        }
    }
}

#[test]
fn isogonal_parallel_fixture() {
    let t = Triangle::from_xy([(0.0, 0.0), (7.0, 0.0), (2.0, 5.0)]).unwrap();
    let l = HLine::new(1.0, 2.0, -16.0).unwrap();
    let (a, cr_a) = isogonal_pair_line(&t, &l, 0.3 * t.diameter()).unwrap();
    let (b, cr_b) = isogonal_pair_line(&t, &l, 0.7 * t.diameter()).unwrap();
    assert!(pedal_geometry::theorems::frame::parallelism(&a, &b) < 1e-7);
    assert!((cr_a + 1.0).abs() < 1e-9 && (cr_b + 1.0).abs() < 1e-9);
}

#[test]
fn polarity_fixture() {
    let t = Triangle::from_xy([(0.0, 0.0), (7.0, 0.0), (2.0, 5.0)]).unwrap();
    let l1 = HLine::new(1.0, 2.0, -16.0).unwrap();
    let l2 = HLine::new(3.0, -1.0, -2.0).unwrap();
    let x = HPoint::xy(10.0, 3.0).unwrap();
    assert!(polarity_residual(&t, &l1, &l2, &x).unwrap() < 1e-6);
    assert!(polarity_residual(&t, &l1, &HLine::at_infinity(), &x).unwrap() < 1e-6);
}

#[test]
fn suite_reports_are_deterministic() {
    let cfg = TrialConfig::default().with_trials(20);
    let ids = catalog_ids();
    let a = run_suite(&ids, &cfg).unwrap();
    let b = run_suite(&ids, &cfg).unwrap();
    assert_eq!(a, b);
    for r in &a {
        assert!(r.max_residual >= 0.0);
        assert_eq!(r.passed, r.failures.is_empty());
        assert!(r.failures.windows(2).all(|w| w[0].index < w[1].index));
    }
}

#[test]
fn unknown_ids_are_rejected() {
    assert_eq!(
        run_suite(&["no_such"], &TrialConfig::default()),
        Err(GeomError::UnknownCheckId("no_such".into()))
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scene_invariants(seed in 0u64..1_000_000, frac in 0.05..0.6f64) {
        let t = sample_triangle(seed, 0);
        let mut rng = trial_rng(seed, 99, 0, 0);
        let p = interior_point(&mut rng, &t, 0.05);
        let i = center(&t, CenterKind::Incenter);
        prop_assume!(distance(&p, &i).unwrap() > 0.05 * t.diameter());
        let x = frac * t.inradius();
        let s = match build_scene(&t, &p, x, &Tolerance::default()) {
            Ok(s) => s,
            Err(GeomError::DegenerateBisectorPedals | GeomError::CollinearPoints) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e:?}"))),
        };
        let scale = t.diameter();
        let circ = s.bisector_pedals.circumcircle();
        prop_assert!(power_of_point(&p, &circ).unwrap().abs() < 1e-9 * scale * scale);
        for (pedal_vertex, pair) in s.pedal.vertices().iter().zip([
            [s.offsets.a1, s.offsets.a2],
            [s.offsets.b1, s.offsets.b2],
            [s.offsets.c1, s.offsets.c2],
        ]) {
            for q in pair {
                prop_assert!((distance(pedal_vertex, &q).unwrap() - x).abs() < 1e-9 * scale);
            }
        }
        let f = Frame::new(s.o.to_xy().unwrap(), scale);
        prop_assert!(f.incidence(&s.h_prime, &s.rad_axis) < 1e-7);
    }

    #[test]
    fn bevan_scene_matches_base_centers(seed in 0u64..1_000_000) {
        let t = sample_triangle(seed, 1);
        let bevan = center(&t, CenterKind::Bevan);
        let s = match build_scene(&t, &bevan, 0.25 * t.inradius(), &Tolerance::default()) {
            Ok(s) => s,
            Err(GeomError::DegeneratePedal | GeomError::DegenerateBisectorPedals) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e:?}"))),
        };
        let scale = t.diameter();
        prop_assert!(distance(&s.o_prime, &s.o).unwrap() < 1e-9 * scale);
        prop_assert!(distance(&s.h_prime, &s.nagel).unwrap() < 1e-9 * scale);
    }
}
