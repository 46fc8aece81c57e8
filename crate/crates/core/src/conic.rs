//! Conics as symmetric 3×3 forms: five-point fitting, pole/polar duality,
//! centers, tangents and line intersections.

use nalgebra::{Matrix3, SMatrix, Vector3};

use crate::error::{GeomError, Result};
use crate::projective::{join, HLine, HPoint, Tolerance, ABS_TOL, EXACT_TOL};

/// `|det|` of the Frobenius-normalized form below which a conic is degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;
/// Ratio of the two smallest singular values above which a five-point fit is
/// rejected.
pub const ILL_CONDITIONED_RATIO: f64 = 0.5;
/// Relative size below which a singular value counts as zero.
const RANK_GAP: f64 = 1e-10;
/// Discriminant magnitude treated as tangency in [`meet_line`].
const TANGENCY_EPS: f64 = 1e-12;

/// Plane conic `pᵀ M p = 0`, stored Frobenius-normalized with a canonical
/// sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    m: Matrix3<f64>,
    degenerate: bool,
}

impl Conic {
    pub fn from_matrix(m: Matrix3<f64>) -> Result<Self> {
        if !m.iter().all(|v| v.is_finite()) {
            return Err(GeomError::NonFinite("conic"));
        }
        let sym = (m + m.transpose()) * 0.5;
        let norm = sym.norm();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(GeomError::ZeroVector);
        }
        let mut sym = sym / norm;
        let lead = [sym[(0, 0)], sym[(0, 1)], sym[(0, 2)], sym[(1, 1)], sym[(1, 2)], sym[(2, 2)]]
            .into_iter()
            .find(|v| v.abs() > EXACT_TOL)
            .unwrap_or(0.0);
        if lead < 0.0 {
            sym = -sym;
        }
        Ok(Self {
            m: sym,
            degenerate: sym.determinant().abs() < DEGENERACY_TOL,
        })
    }

    /// `a x² + b xy + c y² + d xw + e yw + f w²`.
    pub fn from_coefficients(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        Self::from_matrix(Matrix3::new(
            a,
            b / 2.0,
            d / 2.0,
            b / 2.0,
            c,
            e / 2.0,
            d / 2.0,
            e / 2.0,
            f,
        ))
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `pᵀ M p` on the normalized point.
    pub fn eval(&self, p: &HPoint) -> f64 {
        self.bilinear(p, p)
    }

    /// `pᵀ M q` on normalized points.
    pub fn bilinear(&self, p: &HPoint, q: &HPoint) -> f64 {
        p.vector().dot(&(self.m * q.vector()))
    }

    pub fn contains(&self, p: &HPoint, tol: &Tolerance) -> bool {
        self.eval(p).abs() <= tol.abs_tol
    }

    /// Largest coefficient difference to `other`, up to sign.
    pub fn coeff_distance(&self, other: &Conic) -> f64 {
        (self.m - other.m).amax().min((self.m + other.m).amax())
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.degenerate {
            Err(GeomError::DegenerateConic)
        } else {
            Ok(())
        }
    }
}

fn adjugate(m: &Matrix3<f64>) -> Matrix3<f64> {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| m[(r0, c0)] * m[(r1, c1)] - m[(r0, c1)] * m[(r1, c0)];
    Matrix3::new(
        c(1, 2, 1, 2),
        -c(0, 2, 1, 2),
        c(0, 1, 1, 2),
        -c(1, 2, 0, 2),
        c(0, 2, 0, 2),
        -c(0, 1, 0, 2),
        c(1, 2, 0, 1),
        -c(0, 2, 0, 1),
        c(0, 1, 0, 1),
    )
}

/// Similarity taking the finite input points to zero mean and unit mean
/// distance; identity when fewer than two points are finite.
fn conditioning_transform(points: &[&HPoint]) -> Matrix3<f64> {
    let finite: Vec<(f64, f64)> = points.iter().filter_map(|p| p.to_xy().ok()).collect();
    if finite.len() < 2 {
        return Matrix3::identity();
    }
    let n = finite.len() as f64;
    let cx = finite.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = finite.iter().map(|p| p.1).sum::<f64>() / n;
    let spread = finite.iter().map(|p| (p.0 - cx).hypot(p.1 - cy)).sum::<f64>() / n;
    if !(spread > EXACT_TOL) {
        return Matrix3::identity();
    }
    let s = 1.0 / spread;
    Matrix3::new(s, 0.0, -cx * s, 0.0, s, -cy * s, 0.0, 0.0, 1.0)
}

/// Conic through five points: the unit coefficient vector minimizing the
/// 5×6 homogeneous system residual.
///
/// Three collinear inputs yield a line pair, returned with the degeneracy
/// flag set; four collinear inputs leave two null directions and raise
/// [`GeomError::IllConditioned`].
pub fn conic_through_5(points: [&HPoint; 5]) -> Result<Conic> {
    let t = conditioning_transform(&points);
    let mut a = SMatrix::<f64, 6, 6>::zeros();
    for (row, p) in points.iter().enumerate() {
        let v = (t * p.vector()).normalize();
        let (x, y, w) = (v.x, v.y, v.z);
        let entries = [x * x, x * y, y * y, x * w, y * w, w * w];
        for (col, e) in entries.into_iter().enumerate() {
            a[(row, col)] = e;
        }
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.ok_or(GeomError::IllConditioned)?;
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let (smallest, second) = (svd.singular_values[order[0]], svd.singular_values[order[1]]);
    let largest = svd.singular_values[order[5]];
    // a second null direction shows up as two round-off sized values whose
    // ratio is noise, so also require a clear gap to the largest
    if !(second > RANK_GAP * largest) || smallest / second > ILL_CONDITIONED_RATIO {
        return Err(GeomError::IllConditioned);
    }
    let c = v_t.row(order[0]);
    let local = Conic::from_coefficients(c[0], c[1], c[2], c[3], c[4], c[5])?;
    Conic::from_matrix(t.transpose() * local.m * t)
}

pub fn polar_line(p: &HPoint, c: &Conic) -> Result<HLine> {
    c.require_nondegenerate()?;
    let v = c.m * p.vector();
    if v.norm() <= EXACT_TOL {
        return Err(GeomError::CenterOfConic);
    }
    HLine::from_vector(v)
}

pub fn pole_of_line(l: &HLine, c: &Conic) -> Result<HPoint> {
    c.require_nondegenerate()?;
    let v = adjugate(&c.m) * l.vector();
    if v.norm() <= 0.0 {
        return Err(GeomError::DegenerateConic);
    }
    HPoint::from_vector(v)
}

pub fn are_conjugate(p: &HPoint, q: &HPoint, c: &Conic, tol: &Tolerance) -> bool {
    c.bilinear(p, q).abs() <= tol.abs_tol
}

/// Pole of the line at infinity; ideal for parabolas.
pub fn conic_center(c: &Conic) -> Result<HPoint> {
    pole_of_line(&HLine::at_infinity(), c)
}

/// A tangent line together with its point of contact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent {
    pub line: HLine,
    pub touch: HPoint,
}

/// Tangents from `p`: the polar of `p` cut with the conic gives the contact
/// points, each joined back to `p`.
pub fn tangent_lines_from(p: &HPoint, c: &Conic) -> Result<Vec<Tangent>> {
    c.require_nondegenerate()?;
    if c.eval(p).abs() <= ABS_TOL {
        return Ok(vec![Tangent {
            line: polar_line(p, c)?,
            touch: *p,
        }]);
    }
    let polar = polar_line(p, c)?;
    let touches = meet_line(&polar, c);
    if touches.is_empty() {
        return Err(GeomError::InteriorPoint);
    }
    touches
        .into_iter()
        .map(|touch| {
            Ok(Tangent {
                line: join(p, &touch)?,
                touch,
            })
        })
        .collect()
}

/// Orthonormal pair spanning the 2-plane of homogeneous points on `l`.
fn line_basis(l: &HLine) -> (Vector3<f64>, Vector3<f64>) {
    let n = l.vector();
    let axis = (0..3)
        .min_by(|&i, &j| n[i].abs().total_cmp(&n[j].abs()))
        .unwrap_or(0);
    let mut e = Vector3::zeros();
    e[axis] = 1.0;
    let u = n.cross(&e).normalize();
    let v = n.cross(&u).normalize();
    (u, v)
}

/// Real intersections of a line with a nondegenerate conic: none, one double
/// point at tangency, or two.
pub fn meet_line(l: &HLine, c: &Conic) -> Vec<HPoint> {
    let (u, v) = line_basis(l);
    let mu = c.m * u;
    let a = u.dot(&mu);
    let b = v.dot(&mu);
    let cc = v.dot(&(c.m * v));
    let disc = b * b - a * cc;
    let to_point = |s: f64, t: f64| HPoint::from_vector(u * s + v * t).ok();
    if disc < -TANGENCY_EPS {
        return Vec::new();
    }
    if disc <= TANGENCY_EPS {
        let p = if a.abs() >= cc.abs() {
            to_point(-b, a)
        } else {
            to_point(cc, -b)
        };
        return p.into_iter().collect();
    }
    let root = disc.sqrt();
    let q = -(b + if b >= 0.0 { root } else { -root });
    [to_point(q, a), to_point(cc, q)].into_iter().flatten().collect()
}
