//! Circles, power of a point and radical axes.

use crate::conic::Conic;
use crate::error::{GeomError, Result};
use crate::projective::{HLine, HPoint, EXACT_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    center: HPoint,
    r_sq: f64,
}

impl Circle {
    pub fn new(center: HPoint, r_sq: f64) -> Result<Self> {
        center.to_xy()?;
        if !r_sq.is_finite() {
            return Err(GeomError::NonFinite("circle radius"));
        }
        if r_sq < 0.0 {
            return Err(GeomError::NonFinite("negative squared radius"));
        }
        Ok(Self { center, r_sq })
    }

    pub fn center(&self) -> &HPoint {
        &self.center
    }

    pub fn center_xy(&self) -> (f64, f64) {
        // finite by construction
        self.center.to_xy().unwrap_or((0.0, 0.0))
    }

    pub fn r_sq(&self) -> f64 {
        self.r_sq
    }

    pub fn radius(&self) -> f64 {
        self.r_sq.sqrt()
    }
}

pub fn circumcircle(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<Circle> {
    let (ax, ay) = a.to_xy()?;
    let (bx, by) = b.to_xy()?;
    let (cx, cy) = c.to_xy()?;
    // work relative to `a` to keep magnitudes small
    let (bx, by, cx, cy) = (bx - ax, by - ay, cx - ax, cy - ay);
    let d = 2.0 * (bx * cy - by * cx);
    let diam_sq = (bx * bx + by * by).max(cx * cx + cy * cy).max((bx - cx).powi(2) + (by - cy).powi(2));
    if d.abs() <= EXACT_TOL * diam_sq {
        return Err(GeomError::CollinearPoints);
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Circle::new(HPoint::xy(ax + ux, ay + uy)?, ux * ux + uy * uy)
}

/// `|p - center|² - r²`.
pub fn power_of_point(p: &HPoint, c: &Circle) -> Result<f64> {
    let (x, y) = p.to_xy()?;
    let (cx, cy) = c.center_xy();
    Ok((x - cx).powi(2) + (y - cy).powi(2) - c.r_sq)
}

/// Difference of the two expanded circle equations.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<HLine> {
    let (x1, y1) = c1.center_xy();
    let (x2, y2) = c2.center_xy();
    let scale = 1f64.max(c1.radius()).max(c2.radius()).max(x1.hypot(y1)).max(x2.hypot(y2));
    if (x1 - x2).hypot(y1 - y2) < EXACT_TOL * scale {
        return Err(GeomError::ConcentricCircles);
    }
    let k1 = x1 * x1 + y1 * y1 - c1.r_sq;
    let k2 = x2 * x2 + y2 * y2 - c2.r_sq;
    HLine::new(-2.0 * (x1 - x2), -2.0 * (y1 - y2), k1 - k2)
}

pub fn to_conic(c: &Circle) -> Conic {
    let (x, y) = c.center_xy();
    Conic::from_coefficients(1.0, 0.0, 1.0, -2.0 * x, -2.0 * y, x * x + y * y - c.r_sq)
        .expect("finite circle gives a finite conic")
}
