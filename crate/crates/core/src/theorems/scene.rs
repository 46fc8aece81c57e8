//! The full configuration for one `(triangle, P, x)`.

use crate::circle::{circumcircle, radical_axis, Circle};
use crate::conic::Conic;
use crate::error::{GeomError, Result};
use crate::projective::{join, HLine, HPoint, Tolerance};
use crate::triangle::{
    bisector_pedals, center, isogonal_image_of_line, offset_points, orthologic_center,
    pedal_triangle, steiner_line, CenterKind, Offsets, Triangle,
};

use super::frame::Frame;

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub base: Triangle,
    pub p: HPoint,
    pub x: f64,
    /// Pedal triangle `A_P B_P C_P` of `p`.
    pub pedal: Triangle,
    pub offsets: Offsets,
    /// `A' B' C'`: feet of `p` on AI, BI, CI.
    pub bisector_pedals: Triangle,
    /// `H'`, orthocenter of `A'B'C'`.
    pub h_prime: HPoint,
    /// Circumcenter of `A'B'C'`.
    pub o_prime: HPoint,
    /// `O_{pedal}(A'B'C')`.
    pub q: HPoint,
    /// `O_{A1B1C1}(A'B'C')`.
    pub q1: HPoint,
    /// `O_{A2B2C2}(A'B'C')`.
    pub q2: HPoint,
    /// Circumcircle of `A1 B1 C1`.
    pub o1: Circle,
    /// Circumcircle of `A2 B2 C2`.
    pub o2: Circle,
    /// Circumcenter of the pedal triangle.
    pub o_p: HPoint,
    pub i: HPoint,
    pub o: HPoint,
    pub nagel: HPoint,
    pub centroid: HPoint,
    pub bevan: HPoint,
    pub rad_axis: HLine,
    /// Steiner line of `p` with respect to `A'B'C'`.
    pub steiner_p: HLine,
    /// Line through `q1`, `q`, `q2`.
    pub q_line: HLine,
    /// Isogonal image of `q_line` with respect to `A'B'C'`.
    pub c_conic: Conic,
}

impl Scene {
    pub fn first_triangle(&self) -> Result<Triangle> {
        let [a, b, c] = self.offsets.first();
        Triangle::new(a, b, c)
    }

    pub fn second_triangle(&self) -> Result<Triangle> {
        let [a, b, c] = self.offsets.second();
        Triangle::new(a, b, c)
    }

    /// Residual frame centered on the base circumcenter, scaled by the base
    /// diameter.
    pub fn frame(&self) -> Frame {
        let origin = self.o.to_xy().unwrap_or((0.0, 0.0));
        Frame::new(origin, self.base.diameter())
    }
}

/// Builds every object of the configuration. `x = 0` makes the two offset
/// circles coincide and fails with [`GeomError::ConcentricCircles`].
pub fn build_scene(base: &Triangle, p: &HPoint, x: f64, tol: &Tolerance) -> Result<Scene> {
    p.to_xy()?;
    if x.is_finite() && x.abs() <= tol.exact_tol * base.diameter() {
        return Err(GeomError::ConcentricCircles);
    }
    let pedal = pedal_triangle(p, base)?;
    let offsets = offset_points(&pedal, base, x)?;
    let bp = bisector_pedals(p, base)?;

    let [a1, b1, c1] = offsets.first();
    let [a2, b2, c2] = offsets.second();
    let o1 = circumcircle(&a1, &b1, &c1)?;
    let o2 = circumcircle(&a2, &b2, &c2)?;
    let rad_axis = radical_axis(&o1, &o2)?;
    let first = Triangle::new(a1, b1, c1)?;
    let second = Triangle::new(a2, b2, c2)?;

    let q = orthologic_center(&pedal, &bp)?;
    let q1 = orthologic_center(&first, &bp)?;
    let q2 = orthologic_center(&second, &bp)?;
    let steiner_p = steiner_line(p, &bp)?;
    let q_line = join(&q1, &q2).map_err(|_| GeomError::ConcentricCircles)?;
    let c_conic = isogonal_image_of_line(&q_line, &bp)?;

    Ok(Scene {
        base: *base,
        p: *p,
        x,
        pedal,
        offsets,
        bisector_pedals: bp,
        h_prime: center(&bp, CenterKind::Orthocenter),
        o_prime: center(&bp, CenterKind::Circumcenter),
        q,
        q1,
        q2,
        o1,
        o2,
        o_p: *pedal.circumcircle().center(),
        i: center(base, CenterKind::Incenter),
        o: center(base, CenterKind::Circumcenter),
        nagel: center(base, CenterKind::Nagel),
        centroid: center(base, CenterKind::Centroid),
        bevan: center(base, CenterKind::Bevan),
        rad_axis,
        steiner_p,
        q_line,
        c_conic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::power_of_point;
    use crate::projective::distance;
    use crate::triangle::excircle_touch_points;

    fn t0() -> Triangle {
        Triangle::from_xy([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]).unwrap()
    }

    fn close(p: &HPoint, x: f64, y: f64) -> bool {
        let (px, py) = p.to_xy().unwrap();
        (px - x).abs() < 1e-12 && (py - y).abs() < 1e-12
    }

    #[test]
    fn bevan_scene_on_t0() {
        let t = t0();
        let s = build_scene(&t, &HPoint::xy(3.0, 2.0).unwrap(), 0.5, &Tolerance::default()).unwrap();
        assert!(close(s.bisector_pedals.a(), 2.5, 2.5));
        assert!(close(s.bisector_pedals.b(), 2.5, 0.5));
        assert!(close(s.bisector_pedals.c(), 1.0, 1.0));
        assert!(close(&s.h_prime, 2.0, 1.0));
        assert!(close(&s.o_prime, 2.0, 1.5));
        for (p, q) in s.pedal.vertices().iter().zip(excircle_touch_points(&t).iter()) {
            assert!(distance(p, q).unwrap() < 1e-12);
        }
        assert!(s.rad_axis.coeff_distance(&HLine::new(0.0, 1.0, -1.0).unwrap()) < 1e-12);
    }

    #[test]
    fn zero_offset_is_concentric() {
        let t = t0();
        assert_eq!(
            build_scene(&t, &HPoint::xy(3.0, 2.0).unwrap(), 0.0, &Tolerance::default()),
            Err(GeomError::ConcentricCircles)
        );
    }

    #[test]
    fn p_on_bisector_pedal_circle() {
        let t = Triangle::from_xy([(1.0, 1.0), (8.0, 2.0), (3.0, 7.0)]).unwrap();
        let p = HPoint::xy(4.0, 3.0).unwrap();
        let s = build_scene(&t, &p, 0.4, &Tolerance::default()).unwrap();
        let circ = s.bisector_pedals.circumcircle();
        assert!(power_of_point(&p, &circ).unwrap().abs() < 1e-12);
        assert!(power_of_point(&s.i, &circ).unwrap().abs() < 1e-12);
    }

    #[test]
    fn p_equal_to_incenter_is_degenerate() {
        let t = t0();
        assert_eq!(
            build_scene(&t, &HPoint::xy(1.0, 1.0).unwrap(), 0.5, &Tolerance::default()),
            Err(GeomError::DegenerateBisectorPedals)
        );
    }

    #[test]
    fn p_on_circumcircle_is_degenerate() {
        let t = t0();
        assert_eq!(
            build_scene(&t, &HPoint::xy(4.0, 3.0).unwrap(), 0.5, &Tolerance::default()),
            Err(GeomError::DegeneratePedal)
        );
    }
}
