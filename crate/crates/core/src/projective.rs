//! Homogeneous points and lines of the real projective plane, plus the
//! Euclidean measurements (distance, perpendicular feet, reflections) the
//! constructions need.
//!
//! Both [`HPoint`] and [`HLine`] are stored as unit-norm triples whose first
//! clearly nonzero component is positive, so two representations of the same
//! object compare equal component-wise.

use nalgebra::Vector3;

use crate::error::{GeomError, Result};

/// Default incidence / residual tolerance.
pub const ABS_TOL: f64 = 1e-7;
/// Default threshold for "exactly equal" decisions (coincidence, degeneracy).
pub const EXACT_TOL: f64 = 1e-12;

/// Components whose magnitude is below this are ignored when choosing the
/// canonical sign, so round-off noise in a zero slot cannot flip a triple.
const SIGN_EPS: f64 = 1e-12;
/// A normalized point with `|w|` at or below this is treated as ideal.
const INFINITY_EPS: f64 = 1e-12;

/// Residual tolerances used by predicates and checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub exact_tol: f64,
    /// Configuration diameter; length residuals are divided by it.
    pub scale: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: ABS_TOL,
            exact_tol: EXACT_TOL,
            scale: 1.0,
        }
    }
}

impl Tolerance {
    pub fn new(abs_tol: f64, exact_tol: f64, scale: f64) -> Result<Self> {
        if !(abs_tol.is_finite() && exact_tol.is_finite() && scale.is_finite()) {
            return Err(GeomError::NonFinite("tolerance"));
        }
        if !(exact_tol > 0.0 && exact_tol <= abs_tol && scale > 0.0) {
            return Err(GeomError::NonFinite("tolerance ordering"));
        }
        Ok(Self {
            abs_tol,
            exact_tol,
            scale,
        })
    }

    pub fn with_scale(self, scale: f64) -> Self {
        Self {
            scale: if scale.is_finite() && scale > 0.0 {
                scale
            } else {
                1.0
            },
            ..self
        }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        Self {
            abs_tol,
            exact_tol: self.exact_tol.min(abs_tol),
            ..self
        }
    }
}

fn canonical(v: Vector3<f64>, what: &'static str) -> Result<Vector3<f64>> {
    if !v.iter().all(|c| c.is_finite()) {
        return Err(GeomError::NonFinite(what));
    }
    let norm = v.norm();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(GeomError::ZeroVector);
    }
    let mut u = v / norm;
    let lead = u
        .iter()
        .copied()
        .find(|c| c.abs() > SIGN_EPS)
        .unwrap_or(0.0);
    if lead < 0.0 {
        u = -u;
    }
    Ok(u)
}

/// A point of the projective plane; `w = 0` encodes a direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint(Vector3<f64>);

impl HPoint {
    pub fn new(x: f64, y: f64, w: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(x, y, w))
    }

    /// Finite point with affine coordinates `(x, y)`.
    pub fn xy(x: f64, y: f64) -> Result<Self> {
        Self::new(x, y, 1.0)
    }

    /// Ideal point in direction `(dx, dy)`.
    pub fn direction(dx: f64, dy: f64) -> Result<Self> {
        Self::new(dx, dy, 0.0)
    }

    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        canonical(v, "point").map(HPoint)
    }

    pub fn vector(&self) -> &Vector3<f64> {
        &self.0
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn is_finite(&self) -> bool {
        self.0.z.abs() > INFINITY_EPS
    }

    /// Affine coordinates, or [`GeomError::PointAtInfinity`].
    pub fn to_xy(&self) -> Result<(f64, f64)> {
        if !self.is_finite() {
            return Err(GeomError::PointAtInfinity);
        }
        let (x, y) = (self.0.x / self.0.z, self.0.y / self.0.z);
        if x.is_finite() && y.is_finite() {
            Ok((x, y))
        } else {
            Err(GeomError::PointAtInfinity)
        }
    }

    /// Largest absolute difference to `other`, up to sign.
    pub fn coord_distance(&self, other: &HPoint) -> f64 {
        (self.0 - other.0).amax().min((self.0 + other.0).amax())
    }
}

/// A line `l x + m y + n w = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HLine(Vector3<f64>);

impl HLine {
    pub fn new(l: f64, m: f64, n: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(l, m, n))
    }

    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        canonical(v, "line").map(HLine)
    }

    pub fn at_infinity() -> Self {
        HLine(Vector3::new(0.0, 0.0, 1.0))
    }

    pub fn vector(&self) -> &Vector3<f64> {
        &self.0
    }

    pub fn coeffs(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0.x.hypot(self.0.y) <= INFINITY_EPS
    }

    /// Unit normal `(l, m) / |(l, m)|`.
    pub fn unit_normal(&self) -> Result<(f64, f64)> {
        if self.is_at_infinity() {
            return Err(GeomError::InfiniteLine);
        }
        let h = self.0.x.hypot(self.0.y);
        Ok((self.0.x / h, self.0.y / h))
    }

    /// Unit direction vector along the line.
    pub fn unit_direction(&self) -> Result<(f64, f64)> {
        self.unit_normal().map(|(a, b)| (-b, a))
    }

    /// The ideal point of the line.
    pub fn point_at_infinity(&self) -> Result<HPoint> {
        let (dx, dy) = self.unit_direction()?;
        HPoint::direction(dx, dy)
    }

    /// Largest absolute coefficient difference to `other`, up to sign.
    pub fn coeff_distance(&self, other: &HLine) -> f64 {
        (self.0 - other.0).amax().min((self.0 + other.0).amax())
    }

    /// Signed Euclidean distance from a finite point.
    pub fn signed_distance(&self, p: &HPoint) -> Result<f64> {
        let (x, y) = p.to_xy()?;
        let (a, b, c) = (self.0.x, self.0.y, self.0.z);
        let h = a.hypot(b);
        if h <= INFINITY_EPS {
            return Err(GeomError::InfiniteLine);
        }
        Ok((a * x + b * y + c) / h)
    }
}

/// Line through two distinct points.
pub fn join(p: &HPoint, q: &HPoint) -> Result<HLine> {
    let v = p.0.cross(&q.0);
    if v.norm() <= EXACT_TOL {
        return Err(GeomError::CoincidentPoints);
    }
    HLine::from_vector(v)
}

/// Intersection of two distinct lines; ideal when they are parallel.
pub fn meet(l: &HLine, m: &HLine) -> Result<HPoint> {
    let v = l.0.cross(&m.0);
    if v.norm() <= EXACT_TOL {
        return Err(GeomError::CoincidentLines);
    }
    HPoint::from_vector(v)
}

pub fn incident(p: &HPoint, l: &HLine, tol: &Tolerance) -> bool {
    l.0.dot(&p.0).abs() <= tol.abs_tol
}

/// Cross-ratio `(a, b; c, d) = ((c - a)(d - b)) / ((c - b)(d - a))` of four
/// collinear points.
///
/// Each difference is the bracket `line · (p × q)` of the homogeneous
/// representatives, so ideal points need no special casing.
pub fn cross_ratio(a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> Result<f64> {
    let pts = [a, b, c, d];
    let mut best = Vector3::zeros();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let v = pts[i].0.cross(&pts[j].0);
            if v.norm() > best.norm() {
                best = v;
            }
        }
    }
    if best.norm() <= EXACT_TOL {
        return Err(GeomError::DegenerateQuadruple);
    }
    let line = best.normalize();
    if pts.iter().any(|p| line.dot(&p.0).abs() > ABS_TOL) {
        return Err(GeomError::NotCollinear);
    }
    let bracket = |p: &HPoint, q: &HPoint| line.dot(&p.0.cross(&q.0));
    let (cb, da) = (bracket(c, b), bracket(d, a));
    if cb.abs() <= EXACT_TOL || da.abs() <= EXACT_TOL {
        return Err(GeomError::DegenerateQuadruple);
    }
    Ok(bracket(c, a) * bracket(d, b) / (cb * da))
}

pub fn distance(p: &HPoint, q: &HPoint) -> Result<f64> {
    let (px, py) = p.to_xy()?;
    let (qx, qy) = q.to_xy()?;
    Ok((px - qx).hypot(py - qy))
}

pub fn midpoint(p: &HPoint, q: &HPoint) -> Result<HPoint> {
    let (px, py) = p.to_xy()?;
    let (qx, qy) = q.to_xy()?;
    HPoint::xy(0.5 * (px + qx), 0.5 * (py + qy))
}

/// Affine combination `p + t (q - p)` of two finite points.
pub fn lerp(p: &HPoint, q: &HPoint, t: f64) -> Result<HPoint> {
    let (px, py) = p.to_xy()?;
    let (qx, qy) = q.to_xy()?;
    HPoint::xy(px + t * (qx - px), py + t * (qy - py))
}

/// `p` moved by `len` along the unit vector pointing from `from` to `to`.
pub fn offset_toward(p: &HPoint, from: &HPoint, to: &HPoint, len: f64) -> Result<HPoint> {
    let (px, py) = p.to_xy()?;
    let (fx, fy) = from.to_xy()?;
    let (tx, ty) = to.to_xy()?;
    let d = (tx - fx).hypot(ty - fy);
    if d <= EXACT_TOL {
        return Err(GeomError::CoincidentPoints);
    }
    HPoint::xy(px + len * (tx - fx) / d, py + len * (ty - fy) / d)
}

pub fn foot_of_perpendicular(p: &HPoint, l: &HLine) -> Result<HPoint> {
    let (x, y) = p.to_xy()?;
    if l.is_at_infinity() {
        return Err(GeomError::InfiniteLine);
    }
    let (a, b, c) = (l.0.x, l.0.y, l.0.z);
    let k = (a * x + b * y + c) / (a * a + b * b);
    HPoint::xy(x - k * a, y - k * b)
}

pub fn reflect_over_line(p: &HPoint, l: &HLine) -> Result<HPoint> {
    let (x, y) = p.to_xy()?;
    let (fx, fy) = foot_of_perpendicular(p, l)?.to_xy()?;
    HPoint::xy(2.0 * fx - x, 2.0 * fy - y)
}

pub fn perpendicular_line_through(p: &HPoint, l: &HLine) -> Result<HLine> {
    if l.is_at_infinity() {
        return Err(GeomError::InfiniteLine);
    }
    let (x, y) = p.to_xy()?;
    let (a, b) = (l.0.x, l.0.y);
    HLine::new(-b, a, b * x - a * y)
}

pub fn parallel_line_through(p: &HPoint, l: &HLine) -> Result<HLine> {
    if l.is_at_infinity() {
        return Err(GeomError::InfiniteLine);
    }
    let (x, y) = p.to_xy()?;
    let (a, b) = (l.0.x, l.0.y);
    HLine::new(a, b, -(a * x + b * y))
}

/// Line through two finite points, by affine coordinates.
pub fn line_through_xy(p: (f64, f64), q: (f64, f64)) -> Result<HLine> {
    join(&HPoint::xy(p.0, p.1)?, &HPoint::xy(q.0, q.1)?)
}

/// Determinant of three normalized triples; zero iff collinear.
pub fn collinearity_det(p: &HPoint, q: &HPoint, r: &HPoint) -> f64 {
    p.0.dot(&q.0.cross(&r.0))
}
