//! Counter-based randomness: every draw is a pure function of
//! `(seed, domain, index, attempt)`, so trials can run in any order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::projective::HPoint;
use crate::triangle::Triangle;

/// Side length of the square vertices are drawn from.
pub const BOX_SIZE: f64 = 10.0;
pub const MIN_ANGLE: f64 = 0.25;
pub const MIN_SIDE: f64 = 1.0;
const MAX_TRIANGLE_DRAWS: usize = 10_000;

/// Domain reserved for [`sample_triangle`].
const TRIANGLE_DOMAIN: u64 = 0;

/// Independent generator for one `(seed, domain, index, attempt)` tuple.
pub fn trial_rng(seed: u64, domain: u64, index: u64, attempt: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&domain.to_le_bytes());
    key[16..24].copy_from_slice(&attempt.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    rng
}

fn acceptable(t: &Triangle) -> bool {
    t.side_lengths().iter().all(|&s| s >= MIN_SIDE) && t.angles().iter().all(|&a| a >= MIN_ANGLE)
}

/// Rejection-samples a triangle in `[0, 10]²` with every angle at least 0.25
/// rad and every side at least 1.
pub fn random_triangle<R: Rng>(rng: &mut R) -> Triangle {
    for _ in 0..MAX_TRIANGLE_DRAWS {
        let mut v = || (rng.random_range(0.0..BOX_SIZE), rng.random_range(0.0..BOX_SIZE));
        let pts = [v(), v(), v()];
        if let Ok(t) = Triangle::from_xy(pts) {
            if acceptable(&t) {
                return t;
            }
        }
    }
    panic!("no acceptable triangle after {MAX_TRIANGLE_DRAWS} draws");
}

/// Deterministic triangle for `(seed, index)`, independent of call order.
pub fn sample_triangle(seed: u64, index: u64) -> Triangle {
    random_triangle(&mut trial_rng(seed, TRIANGLE_DOMAIN, index, 0))
}

/// Uniform point in the disk of radius `r` about `(cx, cy)`.
pub fn point_in_disk<R: Rng>(rng: &mut R, (cx, cy): (f64, f64), r: f64) -> HPoint {
    let radius = r * rng.random::<f64>().sqrt();
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    HPoint::xy(cx + radius * theta.cos(), cy + radius * theta.sin()).expect("finite sample")
}

/// Point with barycentrics drawn uniformly from the simplex, every weight at
/// least `min_weight`.
pub fn interior_point<R: Rng>(rng: &mut R, t: &Triangle, min_weight: f64) -> HPoint {
    let [a, b, c] = t.vertices_xy();
    loop {
        let (r1, r2): (f64, f64) = (rng.random(), rng.random());
        let (u, v) = if r1 + r2 > 1.0 { (1.0 - r1, 1.0 - r2) } else { (r1, r2) };
        let w = 1.0 - u - v;
        if u.min(v).min(w) >= min_weight {
            return HPoint::xy(u * a.0 + v * b.0 + w * c.0, u * a.1 + v * b.1 + w * c.1).expect("finite sample");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_inputs_same_triangle() {
        assert_eq!(sample_triangle(42, 0), sample_triangle(42, 0));
        assert_ne!(sample_triangle(42, 0), sample_triangle(42, 1));
        assert_ne!(sample_triangle(42, 0), sample_triangle(43, 0));
    }

    #[test]
    fn order_independent() {
        let forward: Vec<_> = (0..20).map(|i| sample_triangle(7, i)).collect();
        let backward: Vec<_> = (0..20).rev().map(|i| sample_triangle(7, i)).collect();
        assert!(forward.iter().eq(backward.iter().rev()));
    }

    #[test]
    fn batch_respects_constraints() {
        for i in 0..1000 {
            let t = sample_triangle(42, i);
            for (x, y) in t.vertices_xy() {
                assert!((0.0..=BOX_SIZE).contains(&x) && (0.0..=BOX_SIZE).contains(&y));
            }
            assert!(t.side_lengths().iter().all(|&s| s >= MIN_SIDE), "index {i}");
            assert!(t.angles().iter().all(|&a| a >= MIN_ANGLE), "index {i}");
        }
    }

    #[test]
    fn interior_points_are_interior() {
        let t = sample_triangle(3, 3);
        let mut rng = trial_rng(3, 9, 0, 0);
        for _ in 0..100 {
            let p = interior_point(&mut rng, &t, 0.05);
            for side in t.sidelines() {
                let d = side.signed_distance(&p).unwrap();
                let opposite = t
                    .vertices()
                    .iter()
                    .map(|v| side.signed_distance(v).unwrap())
                    .find(|d| d.abs() > 1e-9)
                    .unwrap();
                assert!(d * opposite > 0.0);
            }
        }
    }
}
