//! Dimensionless residuals.
//!
//! A [`Frame`] recenters the configuration and divides by its diameter, so
//! incidence, collinearity and conic-membership residuals are computed on
//! unit-normalized triples in a frame where the configuration has size ~1.
//! Ideal points and far-away points then degrade gracefully instead of
//! producing huge Euclidean distances.

use nalgebra::{Matrix3, Vector3};

use crate::conic::Conic;
use crate::projective::{HLine, HPoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    origin: (f64, f64),
    scale: f64,
}

impl Frame {
    pub fn new(origin: (f64, f64), scale: f64) -> Self {
        assert!(scale > 0.0 && scale.is_finite(), "frame scale must be positive");
        Self { origin, scale }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// World → frame point map.
    fn forward(&self) -> Matrix3<f64> {
        let s = 1.0 / self.scale;
        Matrix3::new(s, 0.0, -self.origin.0 * s, 0.0, s, -self.origin.1 * s, 0.0, 0.0, 1.0)
    }

    /// Frame → world point map.
    fn backward(&self) -> Matrix3<f64> {
        let s = self.scale;
        Matrix3::new(s, 0.0, self.origin.0, 0.0, s, self.origin.1, 0.0, 0.0, 1.0)
    }

    pub fn point(&self, p: &HPoint) -> Vector3<f64> {
        (self.forward() * p.vector()).normalize()
    }

    pub fn line(&self, l: &HLine) -> Vector3<f64> {
        (self.backward().transpose() * l.vector()).normalize()
    }

    fn conic(&self, c: &Conic) -> Matrix3<f64> {
        let b = self.backward();
        let m = b.transpose() * c.matrix() * b;
        m / m.norm()
    }

    pub fn incidence(&self, p: &HPoint, l: &HLine) -> f64 {
        self.line(l).dot(&self.point(p)).abs()
    }

    pub fn collinearity(&self, p: &HPoint, q: &HPoint, r: &HPoint) -> f64 {
        self.point(p).dot(&self.point(q).cross(&self.point(r))).abs()
    }

    pub fn conic_membership(&self, p: &HPoint, c: &Conic) -> f64 {
        let v = self.point(p);
        v.dot(&(self.conic(c) * v)).abs()
    }

    /// Sign-invariant distance between normalized line triples.
    pub fn line_distance(&self, l: &HLine, m: &HLine) -> f64 {
        let (a, b) = (self.line(l), self.line(m));
        (a - b).amax().min((a + b).amax())
    }

    /// Sign-invariant distance between normalized point triples. Never
    /// exceeds the Euclidean distance over the scale, and stays bounded for
    /// far-away and ideal points.
    pub fn point_distance(&self, p: &HPoint, q: &HPoint) -> f64 {
        let (a, b) = (self.point(p), self.point(q));
        (a - b).amax().min((a + b).amax())
    }

    pub fn length_residual(&self, d: f64) -> f64 {
        d.abs() / self.scale
    }

    pub fn area_residual(&self, d: f64) -> f64 {
        d.abs() / (self.scale * self.scale)
    }
}

/// `|cos|` of the angle between two lines; zero iff perpendicular.
pub fn perpendicularity(l: &HLine, m: &HLine) -> f64 {
    match (l.unit_normal(), m.unit_normal()) {
        (Ok((a, b)), Ok((c, d))) => (a * c + b * d).abs(),
        _ => 1.0,
    }
}

/// `|sin|` of the angle between two lines; zero iff parallel.
pub fn parallelism(l: &HLine, m: &HLine) -> f64 {
    match (l.unit_normal(), m.unit_normal()) {
        (Ok((a, b)), Ok((c, d))) => (a * d - b * c).abs(),
        _ => 1.0,
    }
}
