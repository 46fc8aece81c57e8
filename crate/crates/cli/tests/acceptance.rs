//! Acceptance criteria, one printed line each. Exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use pedal_cli::ReportDocument;
use pedal_geometry::circle::{circumcircle, power_of_point};
use pedal_geometry::projective::{distance, join};
use pedal_geometry::theorems::checks::metric_identity_sides;
use pedal_geometry::theorems::build_scene;
use pedal_geometry::triangle::{center, excircle_touch_points, CenterKind, Triangle};
use pedal_geometry::{GeomError, HLine, HPoint, Tolerance};

/// Exact reference fixtures.
const FIXTURE_TOL: f64 = 1e-12;
const FIXTURE_TIME: Duration = Duration::from_secs(1);
const STEINER_TOL: f64 = 1e-10;
const NAGEL_LINE_TOL: f64 = 1e-8;
const NAGEL_LINE_FRACTIONS: [f64; 3] = [0.1, 0.25, 0.5];
const SUITE_SEED: &str = "42";
const SUITE_TRIALS: &str = "500";
const SUITE_TOL: f64 = 1e-7;
const POLARITY_TOL: f64 = 1e-6;
const SUITE_TIME: Duration = Duration::from_secs(60);
const SUITE_IDS: [&str; 10] = ["P2.1", "P2.2", "L2.2", "T2.1", "P3.1", "P3.2", "P3.3", "T3.1", "S4", "T1.1"];

type Outcome = Result<String, String>;

fn t0() -> Triangle {
    Triangle::from_xy([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]).unwrap()
}

fn pt(x: f64, y: f64) -> HPoint {
    HPoint::xy(x, y).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pedal() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pedal"))
}

fn reference_triangle_fixtures() -> Outcome {
    let start = Instant::now();
    let t = t0();
    let mut worst: f64 = 0.0;
    let mut expect = |label: &str, got: &HPoint, x: f64, y: f64| -> Result<(), String> {
        let e = distance(got, &pt(x, y)).map_err(|e| format!("{label}: {e}"))?;
        worst = worst.max(e);
        ensure(e <= FIXTURE_TOL, || format!("{label} off by {e:.3e}"))
    };
    expect("incenter", &center(&t, CenterKind::Incenter), 1.0, 1.0)?;
    expect("centroid", &center(&t, CenterKind::Centroid), 4.0 / 3.0, 1.0)?;
    expect("circumcenter", &center(&t, CenterKind::Circumcenter), 2.0, 1.5)?;
    expect("orthocenter", &center(&t, CenterKind::Orthocenter), 0.0, 0.0)?;
    expect("Nagel point", &center(&t, CenterKind::Nagel), 2.0, 1.0)?;
    expect("Bevan point", &center(&t, CenterKind::Bevan), 3.0, 2.0)?;
    let touch = excircle_touch_points(&t);
    for (p, (x, y)) in touch.iter().zip([(2.4, 1.2), (0.0, 2.0), (3.0, 0.0)]) {
        expect("excircle touch point", p, x, y)?;
    }
    let s = build_scene(&t, &pt(3.0, 2.0), 0.5, &Tolerance::default()).map_err(|e| e.to_string())?;
    for (p, (x, y)) in s.bisector_pedals.vertices().iter().zip([(2.5, 2.5), (2.5, 0.5), (1.0, 1.0)]) {
        expect("bisector pedal", p, x, y)?;
    }
    expect("H'", &s.h_prime, 2.0, 1.0)?;
    let elapsed = start.elapsed();
    ensure(elapsed < FIXTURE_TIME, || format!("took {elapsed:?}"))?;
    Ok(format!("max error {worst:.1e}, {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn metric_identity_fixtures() -> Outcome {
    let t = t0();
    let (i, o, h) = (
        center(&t, CenterKind::Incenter),
        center(&t, CenterKind::Circumcenter),
        center(&t, CenterKind::Orthocenter),
    );
    let mut worst: f64 = 0.0;
    for (label, p, q, expected) in [("(I, I)", i, i, 4.0), ("(O, H)", o, h, 6.25)] {
        let (lhs, rhs) = metric_identity_sides(&t, &p, &q).map_err(|e| e.to_string())?;
        let err = (lhs - expected).abs().max((rhs - expected).abs());
        worst = worst.max(err);
        ensure(err <= FIXTURE_TOL, || format!("{label}: {lhs} vs {rhs}, expected {expected}"))?;
    }
    // the individual terms: HI² = 2, HO² = 6.25, R² - OH² = 0
    let r_sq = t.circumcircle().r_sq();
    let terms = [
        distance(&h, &i).unwrap().powi(2) - 2.0,
        distance(&h, &o).unwrap().powi(2) - 6.25,
        r_sq - distance(&o, &h).unwrap().powi(2),
    ];
    for e in terms {
        worst = worst.max(e.abs());
        ensure(e.abs() <= FIXTURE_TOL, || format!("term off by {e:.3e}"))?;
    }
    Ok(format!("4 = 2+2+0 and 6.25 = 6.25+0+0, max error {worst:.1e}"))
}

fn steiner_euler_fixture() -> Outcome {
    let s = build_scene(&t0(), &pt(3.0, 2.0), 0.5, &Tolerance::default()).map_err(|e| e.to_string())?;
    let x_eq_2 = HLine::new(1.0, 0.0, -2.0).unwrap();
    let steiner = s.steiner_p.coeff_distance(&x_eq_2);
    let euler = join(&s.o_prime, &s.h_prime).map_err(|e| e.to_string())?.coeff_distance(&x_eq_2);
    ensure(steiner <= STEINER_TOL, || format!("Steiner line off x = 2 by {steiner:.3e}"))?;
    ensure(euler <= STEINER_TOL, || format!("Euler line off x = 2 by {euler:.3e}"))?;
    Ok(format!("Steiner {steiner:.1e}, Euler {euler:.1e}"))
}

fn radical_axis_is_nagel_line() -> Outcome {
    let t = t0();
    let nagel_line = HLine::new(0.0, 1.0, -1.0).unwrap();
    let mut worst: f64 = 0.0;
    for frac in NAGEL_LINE_FRACTIONS {
        let x = frac * t.inradius();
        let s = build_scene(&t, &pt(3.0, 2.0), x, &Tolerance::default()).map_err(|e| e.to_string())?;
        let coeff = s.rad_axis.coeff_distance(&nagel_line);
        worst = worst.max(coeff);
        ensure(coeff <= NAGEL_LINE_TOL, || format!("x = {x}: axis off y = 1 by {coeff:.3e}"))?;
        for p in [pt(1.0, 1.0), pt(4.0 / 3.0, 1.0), pt(2.0, 1.0)] {
            let d = s.rad_axis.signed_distance(&p).map_err(|e| e.to_string())?.abs();
            worst = worst.max(d);
            ensure(d <= NAGEL_LINE_TOL, || format!("x = {x}: incidence off by {d:.3e}"))?;
        }
    }
    Ok(format!("max residual {worst:.1e}"))
}

fn run_full_suite() -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = pedal()
        .args(["verify", "--seed", SUITE_SEED, "--trials", SUITE_TRIALS, "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let code = out.status.code();
    ensure(matches!(code, Some(0 | 1)), || format!("verify exited with {code:?}"))?;
    Ok((String::from_utf8(out.stdout).map_err(|e| e.to_string())?, elapsed))
}

fn full_randomized_suite() -> Outcome {
    let (stdout, elapsed) = run_full_suite()?;
    let reports: Vec<ReportDocument> = stdout
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    ensure(ids == SUITE_IDS, || format!("unexpected checks {ids:?}"))?;
    for r in &reports {
        let expected = if r.id == "P3.3" { POLARITY_TOL } else { SUITE_TOL };
        ensure(r.tolerance == expected, || format!("{} ran at tolerance {}", r.id, r.tolerance))?;
    }
    ensure(elapsed < SUITE_TIME, || format!("took {elapsed:?}"))?;
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| {
            let first = r.failures.first().map(|f| f.detail.as_str()).unwrap_or("");
            format!("{}: {}/{} trials failed, max residual {:.3e}; first: {first}", r.id, r.failures.len(), r.trials, r.max_residual)
        })
        .collect();
    if failing.is_empty() {
        Ok(format!("{} checks passed in {:.2} s", reports.len(), elapsed.as_secs_f64()))
    } else {
        Err(failing.join(" | "))
    }
}

fn determinism() -> Outcome {
    let (a, _) = run_full_suite()?;
    let (b, _) = run_full_suite()?;
    ensure(a == b, || "verify reports differ between runs".into())?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut figures = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("figure{k}.svg"));
        let status = pedal()
            .args(["figure", "--triangle", "0,0 4,0 0,3", "--point", "bevan", "--x", "0.5", "-o"])
            .arg(&path)
            .args(["--show", "triangle,pedal,offsets,circles,radical-axis,nagel-line,conic"])
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("figure exited with {status}"))?;
        figures.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(figures[0] == figures[1], || "figure bytes differ between runs".into())?;
    Ok(format!("{} report bytes, {} figure bytes identical", a.len(), figures[0].len()))
}

fn degeneracy_contract() -> Outcome {
    let t = t0();
    let tol = Tolerance::default();
    let zero = build_scene(&t, &pt(3.0, 2.0), 0.0, &tol);
    ensure(zero == Err(GeomError::ConcentricCircles), || format!("x = 0 gave {zero:?}"))?;
    let on_circle = pt(4.0, 3.0);
    let circ = circumcircle(t.a(), t.b(), t.c()).unwrap();
    ensure(power_of_point(&on_circle, &circ).unwrap().abs() < FIXTURE_TOL, || "fixture point off the circumcircle".into())?;
    let pedal_err = build_scene(&t, &on_circle, 0.5, &tol);
    ensure(pedal_err == Err(GeomError::DegeneratePedal), || format!("P on circumcircle gave {pedal_err:?}"))?;
    let out = pedal()
        .args(["construct", "--triangle", "0,0 1,0 2,0", "--point", "bevan", "--x", "0.5"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(2), || format!("collinear input exited with {:?}", out.status.code()))?;
    let out = pedal()
        .args(["construct", "--triangle", "0,0 4,0 0,3", "--point", "bevan", "--x", "0"])
        .output()
        .map_err(|e| e.to_string())?;
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(1) && stderr.contains("ConcentricCircles"), || {
        format!("--x 0 exited with {:?}: {stderr}", out.status.code())
    })?;
    Ok("ConcentricCircles, DegeneratePedal, collinear input exits 2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("reference triangle fixtures", reference_triangle_fixtures),
        ("metric identity fixtures", metric_identity_fixtures),
        ("Steiner line equals Euler line", steiner_euler_fixture),
        ("radical axis is the Nagel line", radical_axis_is_nagel_line),
        ("full randomized suite, seed 42, 500 trials", full_randomized_suite),
        ("determinism of reports and figures", determinism),
        ("degeneracy contract", degeneracy_contract),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
