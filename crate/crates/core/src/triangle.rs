//! Triangle-anchored constructions.
//!
//! Named centers come from a single barycentric formula table and are mapped
//! to the plane by [`from_barycentric`]. Everything else (pedal and
//! reflection triangles, offsets, isogonal conjugation, Steiner lines,
//! orthologic centers) is built from the projective primitives.

use nalgebra::Matrix3;

use crate::circle::{circumcircle, power_of_point, Circle};
use crate::conic::{conic_through_5, Conic};
use crate::error::{GeomError, Result};
use crate::projective::{
    distance, foot_of_perpendicular, join, meet, perpendicular_line_through, reflect_over_line,
    HLine, HPoint, Tolerance, ABS_TOL, EXACT_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a_vertex: HPoint,
    b_vertex: HPoint,
    c_vertex: HPoint,
}

impl Triangle {
    /// Fails with [`GeomError::CollinearPoints`] unless the twice-area exceeds
    /// `EXACT_TOL · diameter²`.
    pub fn new(a: HPoint, b: HPoint, c: HPoint) -> Result<Self> {
        let (ax, ay) = a.to_xy()?;
        let (bx, by) = b.to_xy()?;
        let (cx, cy) = c.to_xy()?;
        let area2 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        let diam = (bx - cx).hypot(by - cy).max((cx - ax).hypot(cy - ay)).max((ax - bx).hypot(ay - by));
        if !(diam > 0.0) || area2.abs() <= EXACT_TOL * diam * diam {
            return Err(GeomError::CollinearPoints);
        }
        Ok(Self {
            a_vertex: a,
            b_vertex: b,
            c_vertex: c,
        })
    }

    pub fn from_xy(points: [(f64, f64); 3]) -> Result<Self> {
        let [a, b, c] = points;
        Self::new(HPoint::xy(a.0, a.1)?, HPoint::xy(b.0, b.1)?, HPoint::xy(c.0, c.1)?)
    }

    pub fn a(&self) -> &HPoint {
        &self.a_vertex
    }

    pub fn b(&self) -> &HPoint {
        &self.b_vertex
    }

    pub fn c(&self) -> &HPoint {
        &self.c_vertex
    }

    pub fn vertices(&self) -> [HPoint; 3] {
        [self.a_vertex, self.b_vertex, self.c_vertex]
    }

    pub fn vertices_xy(&self) -> [(f64, f64); 3] {
        self.vertices().map(|p| p.to_xy().unwrap_or((0.0, 0.0)))
    }

    /// `[a, b, c] = [|BC|, |CA|, |AB|]`.
    pub fn side_lengths(&self) -> [f64; 3] {
        let [a, b, c] = self.vertices_xy();
        let d = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
        [d(b, c), d(c, a), d(a, b)]
    }

    pub fn semiperimeter(&self) -> f64 {
        self.side_lengths().iter().sum::<f64>() / 2.0
    }

    /// Longest side.
    pub fn diameter(&self) -> f64 {
        self.side_lengths().into_iter().fold(0.0, f64::max)
    }

    pub fn signed_area(&self) -> f64 {
        let [a, b, c] = self.vertices_xy();
        0.5 * ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0))
    }

    pub fn inradius(&self) -> f64 {
        self.signed_area().abs() / self.semiperimeter()
    }

    /// Interior angles at A, B, C in radians.
    pub fn angles(&self) -> [f64; 3] {
        let [a, b, c] = self.side_lengths();
        let angle = |opp: f64, s1: f64, s2: f64| ((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)).clamp(-1.0, 1.0).acos();
        [angle(a, b, c), angle(b, c, a), angle(c, a, b)]
    }

    /// Sidelines `[BC, CA, AB]`.
    pub fn sidelines(&self) -> [HLine; 3] {
        let j = |p: &HPoint, q: &HPoint| join(p, q).expect("vertices of a valid triangle are distinct");
        [
            j(&self.b_vertex, &self.c_vertex),
            j(&self.c_vertex, &self.a_vertex),
            j(&self.a_vertex, &self.b_vertex),
        ]
    }

    pub fn circumcircle(&self) -> Circle {
        circumcircle(&self.a_vertex, &self.b_vertex, &self.c_vertex).expect("valid triangle has a circumcircle")
    }

    /// Default tolerance scaled to this triangle.
    pub fn tolerance(&self) -> Tolerance {
        Tolerance::default().with_scale(self.diameter())
    }

    fn vertex_matrix(&self) -> Matrix3<f64> {
        let [a, b, c] = self.vertices_xy();
        Matrix3::new(a.0, b.0, c.0, a.1, b.1, c.1, 1.0, 1.0, 1.0)
    }
}

/// Homogeneous barycentric coordinates `(u : v : w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Barycentric(HPoint);

impl Barycentric {
    pub fn new(u: f64, v: f64, w: f64) -> Result<Self> {
        HPoint::new(u, v, w).map(Barycentric)
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0.coords()
    }

    pub fn coord_distance(&self, other: &Barycentric) -> f64 {
        self.0.coord_distance(&other.0)
    }
}

pub fn to_barycentric(p: &HPoint, t: &Triangle) -> Barycentric {
    let inv = t
        .vertex_matrix()
        .try_inverse()
        .expect("vertex matrix of a valid triangle is invertible");
    Barycentric(HPoint::from_vector(inv * p.vector()).expect("invertible map keeps nonzero vectors nonzero"))
}

/// Ideal when `u + v + w = 0`.
pub fn from_barycentric(b: &Barycentric, t: &Triangle) -> Result<HPoint> {
    HPoint::from_vector(t.vertex_matrix() * b.0.vector())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CenterKind {
    Incenter,
    Centroid,
    Circumcenter,
    Orthocenter,
    NinePoint,
    Nagel,
    Bevan,
    ExcenterA,
    ExcenterB,
    ExcenterC,
}

impl CenterKind {
    pub const ALL: [CenterKind; 10] = [
        CenterKind::Incenter,
        CenterKind::Centroid,
        CenterKind::Circumcenter,
        CenterKind::Orthocenter,
        CenterKind::NinePoint,
        CenterKind::Nagel,
        CenterKind::Bevan,
        CenterKind::ExcenterA,
        CenterKind::ExcenterB,
        CenterKind::ExcenterC,
    ];

    fn barycentrics(self, [a, b, c]: [f64; 3]) -> [f64; 3] {
        let (a2, b2, c2) = (a * a, b * b, c * c);
        let s = (a + b + c) / 2.0;
        // Conway notation
        let (sa, sb, sc) = ((b2 + c2 - a2) / 2.0, (c2 + a2 - b2) / 2.0, (a2 + b2 - c2) / 2.0);
        let bevan = |x: f64, y: f64, z: f64| x * (x.powi(3) + x * x * (y + z) - x * (y + z).powi(2) - (y + z) * (y - z).powi(2));
        let nine = |x2: f64, y2: f64, z2: f64| x2 * (y2 + z2) - (y2 - z2).powi(2);
        match self {
            CenterKind::Incenter => [a, b, c],
            CenterKind::Centroid => [1.0, 1.0, 1.0],
            CenterKind::Circumcenter => [a2 * sa, b2 * sb, c2 * sc],
            CenterKind::Orthocenter => [sb * sc, sc * sa, sa * sb],
            CenterKind::NinePoint => [nine(a2, b2, c2), nine(b2, c2, a2), nine(c2, a2, b2)],
            CenterKind::Nagel => [s - a, s - b, s - c],
            CenterKind::Bevan => [bevan(a, b, c), bevan(b, c, a), bevan(c, a, b)],
            CenterKind::ExcenterA => [-a, b, c],
            CenterKind::ExcenterB => [a, -b, c],
            CenterKind::ExcenterC => [a, b, -c],
        }
    }
}

pub fn center(t: &Triangle, kind: CenterKind) -> HPoint {
    let [u, v, w] = kind.barycentrics(t.side_lengths());
    let bary = Barycentric::new(u, v, w).expect("center barycentrics are finite and nonzero");
    from_barycentric(&bary, t).expect("invertible map keeps nonzero vectors nonzero")
}

/// Touch points of the excircles with BC, CA, AB: barycentrics
/// `(0 : s-b : s-c)` and cyclic.
pub fn excircle_touch_points(t: &Triangle) -> [HPoint; 3] {
    let [a, b, c] = t.side_lengths();
    let s = (a + b + c) / 2.0;
    let touch = |u: f64, v: f64, w: f64| {
        from_barycentric(&Barycentric::new(u, v, w).expect("positive weights"), t).expect("finite touch point")
    };
    [touch(0.0, s - b, s - c), touch(s - a, 0.0, s - c), touch(s - a, s - b, 0.0)]
}

fn on_circumcircle(p: &HPoint, t: &Triangle) -> Result<bool> {
    let scale = t.diameter();
    Ok(power_of_point(p, &t.circumcircle())?.abs() <= ABS_TOL * scale * scale)
}

/// Feet of the perpendiculars from `p` onto BC, CA, AB.
pub fn pedal_triangle(p: &HPoint, t: &Triangle) -> Result<Triangle> {
    if on_circumcircle(p, t)? {
        return Err(GeomError::DegeneratePedal);
    }
    let [bc, ca, ab] = t.sidelines();
    Triangle::new(
        foot_of_perpendicular(p, &bc)?,
        foot_of_perpendicular(p, &ca)?,
        foot_of_perpendicular(p, &ab)?,
    )
    .map_err(|_| GeomError::DegeneratePedal)
}

/// The six points at distance `x` from the pedal vertices along the sidelines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Offsets {
    pub a1: HPoint,
    pub a2: HPoint,
    pub b1: HPoint,
    pub b2: HPoint,
    pub c1: HPoint,
    pub c2: HPoint,
}

impl Offsets {
    pub fn first(&self) -> [HPoint; 3] {
        [self.a1, self.b1, self.c1]
    }

    pub fn second(&self) -> [HPoint; 3] {
        [self.a2, self.b2, self.c2]
    }
}

/// `A1, B1, C1` move from the pedal vertices in the directions `B→C`, `C→A`,
/// `A→B`; `A2, B2, C2` in the opposite directions.
pub fn offset_points(pedal: &Triangle, base: &Triangle, x: f64) -> Result<Offsets> {
    if !x.is_finite() || x < 0.0 {
        return Err(GeomError::InvalidOffset);
    }
    let tol = ABS_TOL * base.diameter();
    let sides = base.sidelines();
    for (v, side) in pedal.vertices().iter().zip(&sides) {
        if side.signed_distance(v)?.abs() > tol {
            return Err(GeomError::InvalidPedal);
        }
    }
    let (a, b, c) = (base.a(), base.b(), base.c());
    let step = |from: &HPoint, d0: &HPoint, d1: &HPoint| crate::projective::offset_toward(from, d0, d1, x);
    Ok(Offsets {
        a1: step(pedal.a(), b, c)?,
        a2: step(pedal.a(), c, b)?,
        b1: step(pedal.b(), c, a)?,
        b2: step(pedal.b(), a, c)?,
        c1: step(pedal.c(), a, b)?,
        c2: step(pedal.c(), b, a)?,
    })
}

/// `(u : v : w) ↦ (a²vw : b²wu : c²uv)`.
pub fn isogonal_conjugate(p: &HPoint, t: &Triangle) -> Result<HPoint> {
    let [u, v, w] = to_barycentric(p, t).coords();
    if [u, v, w].iter().any(|c| c.abs() <= EXACT_TOL) {
        return Err(GeomError::OnSideline);
    }
    let [a, b, c] = t.side_lengths();
    let image = Barycentric::new(a * a * v * w, b * b * w * u, c * c * u * v)?;
    from_barycentric(&image, t)
}

/// Maximum sampling retries in [`isogonal_image_of_line`].
const IMAGE_SAMPLE_RETRIES: usize = 8;

/// Circumconic that isogonal conjugation maps `l` onto, fitted through the
/// vertices and the images of two sample points of `l`.
///
/// Samples sit at `±h` from the point of `l` nearest the centroid, with `h`
/// the triangle's diameter, pushed outward on each retry.
pub fn isogonal_image_of_line(l: &HLine, t: &Triangle) -> Result<Conic> {
    let [a, b, c] = t.vertices();
    let try_pair = |p1: HPoint, p2: HPoint| -> Result<Conic> {
        let i1 = isogonal_conjugate(&p1, t)?;
        let i2 = isogonal_conjugate(&p2, t)?;
        conic_through_5([&a, &b, &c, &i1, &i2])
    };
    if l.is_at_infinity() {
        for k in 0..=IMAGE_SAMPLE_RETRIES {
            let theta = 0.4 + 0.37 * k as f64;
            let p1 = HPoint::direction(theta.cos(), theta.sin())?;
            let p2 = HPoint::direction((theta + 1.3).cos(), (theta + 1.3).sin())?;
            if let Ok(conic) = try_pair(p1, p2) {
                return Ok(conic);
            }
        }
        return Err(GeomError::SampleDegenerate);
    }
    let base = foot_of_perpendicular(&center(t, CenterKind::Centroid), l)?;
    let (bx, by) = base.to_xy()?;
    let (dx, dy) = l.unit_direction()?;
    let h = t.diameter();
    for k in 0..=IMAGE_SAMPLE_RETRIES {
        let s = h * (1.0 + 0.5 * k as f64);
        let p1 = HPoint::xy(bx - s * dx, by - s * dy)?;
        let p2 = HPoint::xy(bx + s * dx, by + s * dy)?;
        if let Ok(conic) = try_pair(p1, p2) {
            return Ok(conic);
        }
    }
    Err(GeomError::SampleDegenerate)
}

/// Reflections of `p` in BC, CA, AB.
pub fn reflection_triangle(p: &HPoint, t: &Triangle) -> Result<Triangle> {
    let [bc, ca, ab] = t.sidelines();
    Triangle::new(
        reflect_over_line(p, &bc)?,
        reflect_over_line(p, &ca)?,
        reflect_over_line(p, &ab)?,
    )
    .map_err(|_| GeomError::DegenerateReflection)
}

/// Line through the three side-reflections of a circumcircle point.
pub fn steiner_line(p: &HPoint, t: &Triangle) -> Result<HLine> {
    if !on_circumcircle(p, t)? {
        return Err(GeomError::NotOnCircumcircle);
    }
    let [bc, ca, ab] = t.sidelines();
    let r = [
        reflect_over_line(p, &bc)?,
        reflect_over_line(p, &ca)?,
        reflect_over_line(p, &ab)?,
    ];
    let mut best = (0, 1, -1.0);
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let d = distance(&r[i], &r[j])?;
        if d > best.2 {
            best = (i, j, d);
        }
    }
    join(&r[best.0], &r[best.1])
}

/// `O_{t1}(t2)`: common point of the perpendiculars from the vertices of `t1`
/// to the corresponding sides of `t2`.
pub fn orthologic_center(t1: &Triangle, t2: &Triangle) -> Result<HPoint> {
    let sides = t2.sidelines();
    let perps: Vec<HLine> = t1
        .vertices()
        .iter()
        .zip(&sides)
        .map(|(v, s)| perpendicular_line_through(v, s))
        .collect::<Result<_>>()?;
    let normal = |l: &HLine| l.unit_normal();
    let mut best: Option<(usize, usize, usize, f64)> = None;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
        let (a, b) = normal(&perps[i])?;
        let (c, d) = normal(&perps[j])?;
        let sin = (a * d - b * c).abs();
        if best.map_or(true, |bst| sin > bst.3) {
            best = Some((i, j, k, sin));
        }
    }
    let (i, j, k, _) = best.expect("three candidate pairs");
    let point = meet(&perps[i], &perps[j]).map_err(|_| GeomError::NotOrthologic)?;
    let scale = t1.diameter().max(t2.diameter());
    let miss = if point.is_finite() {
        perps[k].signed_distance(&point)?.abs() / scale
    } else {
        perps[k].vector().dot(point.vector()).abs()
    };
    if miss > ABS_TOL {
        return Err(GeomError::NotOrthologic);
    }
    Ok(point)
}

/// Feet of the perpendiculars from `p` onto the lines AI, BI, CI.
pub fn bisector_pedals(p: &HPoint, t: &Triangle) -> Result<Triangle> {
    let i = center(t, CenterKind::Incenter);
    let feet = t
        .vertices()
        .map(|v| join(&v, &i).and_then(|l| foot_of_perpendicular(p, &l)));
    let [a, b, c] = feet;
    Triangle::new(a?, b?, c?).map_err(|_| GeomError::DegenerateBisectorPedals)
}

pub fn excentral_triangle(t: &Triangle) -> Triangle {
    Triangle::new(
        center(t, CenterKind::ExcenterA),
        center(t, CenterKind::ExcenterB),
        center(t, CenterKind::ExcenterC),
    )
    .expect("excentral triangle of a valid triangle is valid")
}
