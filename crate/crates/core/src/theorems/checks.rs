//! One function per verified statement. Each draws a fresh instance from the
//! trial's counter-based generator, rejects instances outside the
//! statement's hypotheses (or too close to them to be well-conditioned), and
//! returns the worst of its named residuals.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::circle::{power_of_point, to_conic};
use crate::conic::{conic_center, conic_through_5, meet_line, pole_of_line, polar_line};
use crate::error::GeomError;
use crate::projective::{
    cross_ratio, distance, foot_of_perpendicular, join, meet, offset_toward, HLine, HPoint, Tolerance,
};
use crate::triangle::{
    center, isogonal_conjugate, isogonal_image_of_line, pedal_triangle, reflection_triangle,
    steiner_line, to_barycentric, CenterKind, Triangle,
};

use super::frame::{parallelism, perpendicularity, Frame};
use super::sampling::{interior_point, point_in_disk, random_triangle, trial_rng, BOX_SIZE};
use super::scene::{build_scene, Scene};
use super::TrialConfig;

/// Fresh draws per trial before the trial is reported as skipped.
pub const MAX_ATTEMPTS: u64 = 32;

/// Sampled points closer than this fraction of the diameter to a sideline
/// are rejected.
const SIDELINE_MARGIN: f64 = 0.02;
/// Sampled points whose power w.r.t. the circumcircle is below this fraction
/// of R² are rejected.
const CIRCUMCIRCLE_MARGIN: f64 = 0.02;
/// Minimum `|PI|` as a fraction of the diameter.
const INCENTER_MARGIN: f64 = 0.05;
/// Minimum `|IO|` as a fraction of the diameter for the `P ∈ IO` family.
const IO_MARGIN: f64 = 0.02;

/// Inputs a check sees for one trial.
#[derive(Debug, Clone, Copy)]
pub struct Trial<'a> {
    pub seed: u64,
    pub domain: u64,
    pub index: u64,
    pub cfg: &'a TrialConfig,
}

impl Trial<'_> {
    fn rng(&self, attempt: u64) -> ChaCha8Rng {
        trial_rng(self.seed, self.domain, self.index, attempt)
    }

    fn tol(&self) -> Tolerance {
        self.cfg.tol
    }

    fn x_values(&self, t: &Triangle) -> Vec<f64> {
        let r = t.inradius();
        self.cfg.x_grid.iter().map(|f| f * r).collect()
    }

    fn io_parameter<R: Rng>(&self, rng: &mut R) -> f64 {
        let (lo, hi) = self.cfg.t_range;
        if hi > lo {
            rng.random_range(lo..hi)
        } else {
            lo
        }
    }
}

/// Result of one trial.
#[derive(Debug, Clone, PartialEq)]
pub enum TrialOutcome {
    /// Worst residual over the statement's sub-claims, with its label.
    Measured { residual: f64, detail: String },
    Skipped { reason: String },
}

/// Named residuals of one instance.
#[derive(Debug, Default)]
pub(crate) struct Residuals(Vec<(String, f64)>);

impl Residuals {
    pub(crate) fn push(&mut self, name: impl Into<String>, value: f64) {
        let value = if value.is_finite() { value.abs() } else { f64::MAX };
        self.0.push((name.into(), value));
    }

    /// A construction the statement guarantees failed outright.
    fn broken(&mut self, name: &str, err: GeomError) {
        self.0.push((format!("{name}: {}", err.name()), 1.0));
    }

    fn into_outcome(self) -> TrialOutcome {
        let (detail, residual) = self
            .0
            .into_iter()
            .fold((String::from("no residuals"), 0.0), |acc, (n, v)| if v > acc.1 { (n, v) } else { acc });
        TrialOutcome::Measured { residual, detail }
    }
}

type Attempt = std::result::Result<Residuals, String>;

fn skip(reason: impl std::fmt::Display) -> String {
    reason.to_string()
}

/// Scene errors that contradict a proven statement count as failures, all
/// others as hypothesis violations.
fn is_theorem_violation(err: &GeomError) -> bool {
    matches!(err, GeomError::NotOrthologic | GeomError::NotOnCircumcircle)
}

fn run_attempts(trial: &Trial, mut attempt: impl FnMut(&mut ChaCha8Rng) -> Attempt) -> TrialOutcome {
    let mut last = String::from("no attempts");
    for k in 0..MAX_ATTEMPTS {
        let mut rng = trial.rng(k);
        match attempt(&mut rng) {
            Ok(res) => return res.into_outcome(),
            Err(reason) => last = reason,
        }
    }
    TrialOutcome::Skipped { reason: last }
}

fn xy(p: &HPoint) -> (f64, f64) {
    p.to_xy().unwrap_or((f64::NAN, f64::NAN))
}

fn sub(p: &HPoint, q: &HPoint) -> (f64, f64) {
    let (a, b) = (xy(p), xy(q));
    (a.0 - b.0, a.1 - b.1)
}

fn base_frame(t: &Triangle) -> Frame {
    Frame::new(xy(&center(t, CenterKind::Circumcenter)), t.diameter())
}

/// Rejects points near a sideline, near the circumcircle or near `I`.
fn well_placed(p: &HPoint, t: &Triangle, check_incenter: bool) -> std::result::Result<(), String> {
    let scale = t.diameter();
    for side in t.sidelines() {
        if side.signed_distance(p).map_err(skip)?.abs() < SIDELINE_MARGIN * scale {
            return Err(skip("P near a sideline"));
        }
    }
    let circ = t.circumcircle();
    if power_of_point(p, &circ).map_err(skip)?.abs() < CIRCUMCIRCLE_MARGIN * circ.r_sq() {
        return Err(skip("P near the circumcircle"));
    }
    if check_incenter && distance(p, &center(t, CenterKind::Incenter)).map_err(skip)? < INCENTER_MARGIN * scale {
        return Err(skip("P near the incenter"));
    }
    Ok(())
}

/// Arbitrary P, uniform in the circumdisk.
fn sample_general_p<R: Rng>(rng: &mut R, t: &Triangle) -> std::result::Result<HPoint, String> {
    let circ = t.circumcircle();
    let p = point_in_disk(rng, circ.center_xy(), circ.radius());
    well_placed(&p, t, true)?;
    Ok(p)
}

/// `P = I + s (O - I)` with `s` drawn from the configured range.
fn sample_io_p<R: Rng>(rng: &mut R, t: &Triangle, trial: &Trial) -> std::result::Result<HPoint, String> {
    let i = xy(&center(t, CenterKind::Incenter));
    let o = xy(&center(t, CenterKind::Circumcenter));
    if (o.0 - i.0).hypot(o.1 - i.1) < IO_MARGIN * t.diameter() {
        return Err(skip("I and O nearly coincide"));
    }
    let s = trial.io_parameter(rng);
    let p = HPoint::xy(i.0 + s * (o.0 - i.0), i.1 + s * (o.1 - i.1)).map_err(skip)?;
    well_placed(&p, t, true)?;
    Ok(p)
}

fn scene_or_skip(t: &Triangle, p: &HPoint, x: f64, tol: &Tolerance, res: &mut Residuals) -> Option<Scene> {
    match build_scene(t, p, x, tol) {
        Ok(s) => Some(s),
        Err(e) if is_theorem_violation(&e) => {
            res.broken("scene", e);
            None
        }
        Err(_) => None,
    }
}

/// Second intersection of the A-bisector with the circumcircle, B' on BA at
/// distance `u` from B, C' on AC beyond C at distance `u`; `|DB'| = |DC'|`.
pub fn equidistant_arc_residual(t: &Triangle, u: f64) -> crate::Result<f64> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let i = center(t, CenterKind::Incenter);
    let bisector = join(a, &i)?;
    let circle = to_conic(&t.circumcircle());
    let d = meet_line(&bisector, &circle)
        .into_iter()
        .filter(|p| p.is_finite())
        .max_by(|p, q| {
            let dp = distance(p, a).unwrap_or(0.0);
            let dq = distance(q, a).unwrap_or(0.0);
            dp.total_cmp(&dq)
        })
        .ok_or(GeomError::NotCollinear)?;
    let b_prime = offset_toward(b, b, a, u)?;
    let c_prime = offset_toward(c, a, c, u)?;
    Ok((distance(&d, &b_prime)? - distance(&d, &c_prime)?) / t.diameter())
}

pub fn check_equidistant_arc_midpoint(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let max_u = t.side_lengths().into_iter().fold(f64::INFINITY, f64::min) / 2.0;
        let u = rng.random_range(0.0..max_u);
        if u <= 0.0 {
            return Err(skip("zero offset"));
        }
        let mut res = Residuals::default();
        match equidistant_arc_residual(&t, u) {
            Ok(r) => res.push("|DB'| - |DC'|", r),
            Err(e) => res.broken("arc midpoint", e),
        }
        Ok(res)
    })
}

/// Both sides of the reflection-triangle identity for isogonal pair `(P, Q)`:
/// `(R_PQ², HQ² + HP² + |R² - OH²|)`.
pub fn metric_identity_sides(t: &Triangle, p: &HPoint, q: &HPoint) -> crate::Result<(f64, f64)> {
    let reflection = reflection_triangle(p, t)?;
    let r_pq_sq = reflection.circumcircle().r_sq();
    let h = center(t, CenterKind::Orthocenter);
    let o = center(t, CenterKind::Circumcenter);
    let r_sq = t.circumcircle().r_sq();
    let oh_sq = distance(&o, &h)?.powi(2);
    let rhs = distance(&h, q)?.powi(2) + distance(&h, p)?.powi(2) + (r_sq - oh_sq).abs();
    Ok((r_pq_sq, rhs))
}

pub fn check_metric_identity(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let p = interior_point(rng, &t, 0.02);
        let q = isogonal_conjugate(&p, &t).map_err(skip)?;
        let (lhs, rhs) = match metric_identity_sides(&t, &p, &q) {
            Ok(v) => v,
            Err(GeomError::DegenerateReflection) => return Err(skip("degenerate reflection triangle")),
            Err(e) => return Err(skip(e)),
        };
        let scale_sq = t.diameter().powi(2);
        let mut res = Residuals::default();
        let obtuse = t.angles().iter().any(|&a| a > std::f64::consts::FRAC_PI_2);
        let label = if obtuse {
            // the same identity with the signed R² - OH² in place of its
            // absolute value
            let h = center(&t, CenterKind::Orthocenter);
            let o = center(&t, CenterKind::Circumcenter);
            let signed = lhs - (rhs - 2.0 * (distance(&o, &h).unwrap_or(0.0).powi(2) - t.circumcircle().r_sq()).abs());
            format!(
                "R_PQ^2 vs HQ^2+HP^2+|R^2-OH^2| (obtuse; signed-power form residual {:.3e})",
                (signed / scale_sq).abs()
            )
        } else {
            String::from("R_PQ^2 vs HQ^2+HP^2+|R^2-OH^2|")
        };
        res.push(label, (lhs - rhs) / scale_sq);
        Ok(res)
    })
}

fn orthology_residuals(s: &Scene, res: &mut Residuals) {
    let f = s.frame();
    let scale_sq = f.scale() * f.scale();
    let bp = &s.bisector_pedals;
    let h = &s.h_prime;
    for (tag, tri, circ, qk) in [
        ("1", s.first_triangle(), &s.o1, &s.q1),
        ("2", s.second_triangle(), &s.o2, &s.q2),
    ] {
        let tri = match tri {
            Ok(t) => t,
            Err(e) => {
                res.broken(&format!("offset triangle {tag}"), e);
                continue;
            }
        };
        let oc = circ.center();
        let sides = [(tri.b(), tri.c()), (tri.c(), tri.a()), (tri.a(), tri.b())];
        for (v, (p, q)) in bp.vertices().iter().zip(sides) {
            let (ux, uy) = sub(oc, v);
            let (wx, wy) = sub(q, p);
            res.push(format!("(a) A'O{tag} perpendicular to side"), (ux * wx + uy * wy) / scale_sq);
        }
        match isogonal_conjugate(qk, bp) {
            Ok(image) => res.push(format!("(b) isogonal(Q{tag}) = O{tag}"), f.point_distance(&image, oc)),
            Err(e) => res.broken(&format!("(b) isogonal(Q{tag})"), e),
        }
        match reflection_triangle(qk, bp) {
            Ok(r) => {
                for (x, y) in r.vertices().iter().zip(tri.vertices().iter()) {
                    res.push(format!("(c) reflection triangle of Q{tag}"), f.point_distance(x, y));
                }
            }
            Err(e) => res.broken(&format!("(c) reflection triangle of Q{tag}"), e),
        }
    }
    match (distance(h, &s.q1), distance(h, &s.q2)) {
        (Ok(d1), Ok(d2)) => res.push("(d) |H'Q1| = |H'Q2|", f.length_residual(d1 - d2)),
        _ => res.broken("(d) |H'Q1| = |H'Q2|", GeomError::PointAtInfinity),
    }
    res.push("(e) Q on q", f.incidence(&s.q, &s.q_line));
    res.push("(e) q perpendicular to Steiner line", perpendicularity(&s.q_line, &s.steiner_p));
    res.push("(e) H' on Steiner line", f.incidence(h, &s.steiner_p));
    res.push("(e) Q on Steiner line", f.incidence(&s.q, &s.steiner_p));
}

pub fn check_orthology_lemmas(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let p = sample_general_p(rng, &t)?;
        let xs = trial.x_values(&t);
        let x = xs[(trial.index as usize) % xs.len()];
        let mut res = Residuals::default();
        let Some(scene) = scene_or_skip(&t, &p, x, &trial.tol(), &mut res) else {
            return if res.0.is_empty() { Err(skip("degenerate scene")) } else { Ok(res) };
        };
        orthology_residuals(&scene, &mut res);
        Ok(res)
    })
}

pub fn check_fixed_point(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let p = sample_general_p(rng, &t)?;
        let mut res = Residuals::default();
        let mut measured = 0;
        for x in trial.x_values(&t) {
            let Some(s) = scene_or_skip(&t, &p, x, &trial.tol(), &mut res) else {
                continue;
            };
            measured += 1;
            res.push(format!("H' on radical axis (x = {x:.4})"), s.frame().incidence(&s.h_prime, &s.rad_axis));
        }
        if measured == 0 && res.0.is_empty() {
            return Err(skip("no non-degenerate x"));
        }
        Ok(res)
    })
}

/// Steiner line of O w.r.t. the pedals of O on AH, BH, CH, against the Euler
/// line of that pedal triangle.
pub fn circumcenter_pedal_steiner_residual(t: &Triangle) -> std::result::Result<f64, String> {
    let o = center(t, CenterKind::Circumcenter);
    let h = center(t, CenterKind::Orthocenter);
    let scale = t.diameter();
    if distance(&o, &h).map_err(skip)? < 0.05 * scale {
        return Err(skip("O and H nearly coincide"));
    }
    let mut feet = Vec::with_capacity(3);
    for v in t.vertices() {
        if distance(&v, &h).map_err(skip)? < 0.05 * scale {
            return Err(skip("H near a vertex"));
        }
        let altitude = join(&v, &h).map_err(skip)?;
        feet.push(foot_of_perpendicular(&o, &altitude).map_err(skip)?);
    }
    let star = Triangle::new(feet[0], feet[1], feet[2]).map_err(skip)?;
    let euler_o = center(&star, CenterKind::Circumcenter);
    let euler_h = center(&star, CenterKind::Orthocenter);
    if distance(&euler_o, &euler_h).map_err(skip)? < 0.01 * scale {
        return Err(skip("pedal triangle nearly equilateral"));
    }
    let euler = join(&euler_o, &euler_h).map_err(skip)?;
    let steiner = steiner_line(&o, &star).map_err(skip)?;
    Ok(base_frame(t).line_distance(&steiner, &euler))
}

pub fn check_steiner_euler(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let p = sample_io_p(rng, &t, trial)?;
        let xs = trial.x_values(&t);
        let mut res = Residuals::default();
        let Some(s) = scene_or_skip(&t, &p, xs[0], &trial.tol(), &mut res) else {
            return if res.0.is_empty() { Err(skip("degenerate scene")) } else { Ok(res) };
        };
        if distance(&s.o_prime, &s.h_prime).map_err(skip)? < 0.01 * distance(&s.i, &s.p).map_err(skip)? {
            return Err(skip("A'B'C' nearly equilateral"));
        }
        let euler = join(&s.o_prime, &s.h_prime).map_err(skip)?;
        res.push("Steiner line of P = Euler line of A'B'C'", s.frame().line_distance(&s.steiner_p, &euler));

        // independent triangle for the circumcenter-pedal framing
        let mut r = None;
        for _ in 0..MAX_ATTEMPTS {
            let other = random_triangle(rng);
            if let Ok(v) = circumcenter_pedal_steiner_residual(&other) {
                r = Some(v);
                break;
            }
        }
        if let Some(v) = r {
            res.push("Steiner line of O = Euler line of pedals of O on AH, BH, CH", v);
        }
        Ok(res)
    })
}

fn random_line<R: Rng>(rng: &mut R) -> HLine {
    let (x, y) = (rng.random_range(0.0..BOX_SIZE), rng.random_range(0.0..BOX_SIZE));
    let theta = rng.random_range(0.0..std::f64::consts::PI);
    let (dx, dy) = (theta.cos(), theta.sin());
    HLine::new(dy, -dx, dx * y - dy * x).expect("finite line")
}

/// Rejects points whose isogonal conjugate is ill-conditioned.
fn conjugable(p: &HPoint, t: &Triangle) -> std::result::Result<(), String> {
    if p.is_finite() {
        well_placed(p, t, false)
    } else {
        let min = to_barycentric(p, t).coords().iter().fold(f64::INFINITY, |m, c| m.min(c.abs()));
        if min < 1e-3 {
            Err(skip("ideal point near a sideline direction"))
        } else {
            Ok(())
        }
    }
}

/// For `R`, `S` at `±s` from the foot `T` of O on `l`, the direction of
/// `S'R'` and the harmonic pencil `A(T', L'; S', R')`.
pub fn isogonal_pair_line(t: &Triangle, l: &HLine, s: f64) -> std::result::Result<(HLine, f64), String> {
    let o = center(t, CenterKind::Circumcenter);
    let foot = foot_of_perpendicular(&o, l).map_err(skip)?;
    let (fx, fy) = xy(&foot);
    let (dx, dy) = l.unit_direction().map_err(skip)?;
    let r = HPoint::xy(fx + s * dx, fy + s * dy).map_err(skip)?;
    let sp = HPoint::xy(fx - s * dx, fy - s * dy).map_err(skip)?;
    conjugable(&r, t)?;
    conjugable(&sp, t)?;
    let r_img = isogonal_conjugate(&r, t).map_err(skip)?;
    let s_img = isogonal_conjugate(&sp, t).map_err(skip)?;
    let line = join(&s_img, &r_img).map_err(skip)?;
    if line.is_at_infinity() {
        return Err(skip("S'R' is the line at infinity"));
    }

    let inf = l.point_at_infinity().map_err(skip)?;
    conjugable(&foot, t)?;
    conjugable(&inf, t)?;
    let t_img = isogonal_conjugate(&foot, t).map_err(skip)?;
    let l_img = isogonal_conjugate(&inf, t).map_err(skip)?;
    let [bc, ..] = t.sidelines();
    let a = t.a();
    let mut on_bc = Vec::with_capacity(4);
    for p in [&t_img, &l_img, &s_img, &r_img] {
        let ray = join(a, p).map_err(skip)?;
        on_bc.push(meet(&ray, &bc).map_err(skip)?);
    }
    let cr = cross_ratio(&on_bc[0], &on_bc[1], &on_bc[2], &on_bc[3]).map_err(skip)?;
    Ok((line, cr))
}

pub fn check_isogonal_parallel(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let l = random_line(rng);
        let scale = t.diameter();
        for side in t.sidelines() {
            if side.coeff_distance(&l) < 1e-3 {
                return Err(skip("l is a sideline"));
            }
        }
        let s_a = rng.random_range(0.1..1.5) * scale;
        let s_b = rng.random_range(0.1..1.5) * scale;
        if (s_a - s_b).abs() < 0.1 * scale {
            return Err(skip("offsets too close"));
        }
        let (line_a, cr_a) = isogonal_pair_line(&t, &l, s_a)?;
        let (line_b, cr_b) = isogonal_pair_line(&t, &l, s_b)?;
        let mut res = Residuals::default();
        res.push("S'R' parallel across offsets", parallelism(&line_a, &line_b));
        res.push("A(T',L';S',R') = -1", cr_a + 1.0);
        res.push("A(T',L';S',R') = -1", cr_b + 1.0);
        Ok(res)
    })
}

/// Residual of "X'Y' passes through the pole of `l2` w.r.t. ψ(`l1`)" with `Y`
/// the conjugate of `X` on `l1` w.r.t. ψ(`l2`).
pub fn polarity_residual(t: &Triangle, l1: &HLine, l2: &HLine, x: &HPoint) -> std::result::Result<f64, String> {
    let c2 = if l2.is_at_infinity() {
        to_conic(&t.circumcircle())
    } else {
        isogonal_image_of_line(l2, t).map_err(skip)?
    };
    if c2.is_degenerate() {
        return Err(skip("degenerate second circumconic"));
    }
    let frame = base_frame(t);
    if frame.conic_membership(x, &c2) < 1e-3 {
        return Err(skip("X on the circumconic (self-conjugate)"));
    }
    let polar = polar_line(x, &c2).map_err(skip)?;
    let y = meet(l1, &polar).map_err(skip)?;
    if frame.point_distance(x, &y) < 0.05 {
        return Err(skip("Y too close to X"));
    }
    conjugable(x, t)?;
    conjugable(&y, t)?;
    let x_img = isogonal_conjugate(x, t).map_err(skip)?;
    let y_img = isogonal_conjugate(&y, t).map_err(skip)?;
    let chord = join(&x_img, &y_img).map_err(skip)?;
    let pole = if l2.is_at_infinity() {
        let [a, b, c] = t.vertices();
        let c1 = conic_through_5([&a, &b, &c, &x_img, &y_img]).map_err(skip)?;
        if c1.is_degenerate() {
            return Err(skip("degenerate first circumconic"));
        }
        conic_center(&c1).map_err(skip)?
    } else {
        let c1 = isogonal_image_of_line(l1, t).map_err(skip)?;
        if c1.is_degenerate() {
            return Err(skip("degenerate first circumconic"));
        }
        pole_of_line(l2, &c1).map_err(skip)?
    };
    Ok(frame.incidence(&pole, &chord))
}

fn point_on_line<R: Rng>(rng: &mut R, l: &HLine, t: &Triangle) -> std::result::Result<HPoint, String> {
    let base = foot_of_perpendicular(&center(t, CenterKind::Centroid), l).map_err(skip)?;
    let (bx, by) = xy(&base);
    let (dx, dy) = l.unit_direction().map_err(skip)?;
    let s = rng.random_range(-1.0..1.0) * t.diameter();
    HPoint::xy(bx + s * dx, by + s * dy).map_err(skip)
}

pub fn check_polarity(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let l1 = random_line(rng);
        let l2 = random_line(rng);
        for side in t.sidelines() {
            if side.coeff_distance(&l1) < 1e-3 || side.coeff_distance(&l2) < 1e-3 {
                return Err(skip("sampled line is a sideline"));
            }
        }
        let x = point_on_line(rng, &l1, &t)?;
        let general = polarity_residual(&t, &l1, &l2, &x)?;
        let mut res = Residuals::default();
        res.push("X'Y' through pole of l2 w.r.t. image of l1", general);
        // corollary: l2 at infinity, independent X on l1
        let mut corollary = None;
        for _ in 0..MAX_ATTEMPTS {
            let x = point_on_line(rng, &l1, &t)?;
            if let Ok(v) = polarity_residual(&t, &l1, &HLine::at_infinity(), &x) {
                corollary = Some(v);
                break;
            }
        }
        match corollary {
            Some(v) => res.push("X'Y' through center of circumconic ABCX'Y'", v),
            None => return Err(skip("no admissible X for the corollary")),
        }
        Ok(res)
    })
}

fn fixed_line_residuals(scenes: &[Scene], res: &mut Residuals) {
    let Some(first) = scenes.first() else { return };
    let f = first.frame();
    for s in &scenes[1..] {
        res.push(
            format!("(a) radical axis fixed (x = {:.4} vs {:.4})", first.x, s.x),
            f.line_distance(&first.rad_axis, &s.rad_axis),
        );
    }
    for s in scenes {
        match foot_of_perpendicular(&s.o_prime, &s.q_line) {
            Ok(foot) => res.push("(b) Q = foot of O' on q", f.point_distance(&s.q, &foot)),
            Err(e) => res.broken("(b) foot of O' on q", e),
        }
        res.push("(c) P on C", f.conic_membership(&s.p, &s.c_conic));
        res.push("(c) O_P on C", f.conic_membership(&s.o_p, &s.c_conic));
        match polar_line(&s.o_p, &s.c_conic) {
            Ok(tangent) => res.push("(d) radical axis perpendicular to tangent at O_P", perpendicularity(&s.rad_axis, &tangent)),
            Err(e) => res.broken("(d) tangent at O_P", e),
        }
    }
}

pub fn check_fixed_line(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let p = sample_io_p(rng, &t, trial)?;
        let mut res = Residuals::default();
        let mut scenes = Vec::new();
        for x in trial.x_values(&t) {
            if let Some(s) = scene_or_skip(&t, &p, x, &trial.tol(), &mut res) {
                scenes.push(s);
            }
        }
        if scenes.len() < 2 && res.0.is_empty() {
            return Err(skip("fewer than two non-degenerate x"));
        }
        fixed_line_residuals(&scenes, &mut res);
        Ok(res)
    })
}

/// Orthocenter of the pedals of O on AH, BH, CH lies on `A_H J`, where `J`
/// is `AO ∩ B_H C_H`. Requires an acute triangle.
pub fn orthic_line_residual(t: &Triangle) -> std::result::Result<f64, String> {
    if t.angles().iter().any(|&a| a >= std::f64::consts::FRAC_PI_2 - 0.05) {
        return Err(skip("not acute"));
    }
    let o = center(t, CenterKind::Circumcenter);
    let h = center(t, CenterKind::Orthocenter);
    let scale = t.diameter();
    if distance(&o, &h).map_err(skip)? < 0.05 * scale {
        return Err(skip("O and H nearly coincide"));
    }
    let orthic = pedal_triangle(&h, t).map_err(skip)?;
    let mut feet = Vec::with_capacity(3);
    for v in t.vertices() {
        let altitude = join(&v, &h).map_err(skip)?;
        feet.push(foot_of_perpendicular(&o, &altitude).map_err(skip)?);
    }
    let star = Triangle::new(feet[0], feet[1], feet[2]).map_err(skip)?;
    let h_star = center(&star, CenterKind::Orthocenter);
    let j = meet(&join(t.a(), &o).map_err(skip)?, &join(orthic.b(), orthic.c()).map_err(skip)?).map_err(skip)?;
    let frame = base_frame(t);
    if frame.point_distance(&j, orthic.a()) < 0.02 {
        return Err(skip("J too close to A_H"));
    }
    let line = join(orthic.a(), &j).map_err(skip)?;
    Ok(frame.incidence(&h_star, &line))
}

pub fn check_section4(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let bevan = center(&t, CenterKind::Bevan);
        let xs = trial.x_values(&t);
        let mut res = Residuals::default();
        let Some(s) = scene_or_skip(&t, &bevan, xs[0], &trial.tol(), &mut res) else {
            return if res.0.is_empty() { Err(skip("degenerate Bevan scene")) } else { Ok(res) };
        };
        let f = s.frame();
        res.push("(a) H' = Nagel point", f.point_distance(&s.h_prime, &s.nagel));
        res.push("(c) B_e, H', O_0 collinear", f.collinearity(&s.bevan, &s.h_prime, &s.o_p));

        let mut lemma = None;
        for _ in 0..MAX_ATTEMPTS {
            let other = random_triangle(rng);
            if let Ok(v) = orthic_line_residual(&other) {
                lemma = Some(v);
                break;
            }
        }
        match lemma {
            Some(v) => res.push("(b) H* on A_H J", v),
            None => return Err(skip("no acute triangle for the orthic framing")),
        }
        Ok(res)
    })
}

pub fn check_open_problem(trial: &Trial) -> TrialOutcome {
    run_attempts(trial, |rng| {
        let t = random_triangle(rng);
        let bevan = center(&t, CenterKind::Bevan);
        let mut res = Residuals::default();
        let mut measured = 0;
        for x in trial.x_values(&t) {
            let Some(s) = scene_or_skip(&t, &bevan, x, &trial.tol(), &mut res) else {
                continue;
            };
            measured += 1;
            let f = s.frame();
            res.push(format!("I on radical axis (x = {x:.4})"), f.incidence(&s.i, &s.rad_axis));
            res.push(format!("G on radical axis (x = {x:.4})"), f.incidence(&s.centroid, &s.rad_axis));
            res.push(format!("N on radical axis (x = {x:.4})"), f.incidence(&s.nagel, &s.rad_axis));
        }
        if measured == 0 && res.0.is_empty() {
            return Err(skip("no non-degenerate x"));
        }
        Ok(res)
    })
}
