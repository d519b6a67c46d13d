//! Upper half-plane geometry.

use crate::surface_group::Mat2;

/// A point `x + i y` with `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UhpPoint {
    pub x: f64,
    pub y: f64,
}

impl UhpPoint {
    pub fn new(x: f64, y: f64) -> Self {
        assert!(y > 0.0, "point must lie in the upper half plane");
        UhpPoint { x, y }
    }

    /// Moebius action of a real matrix with positive determinant.
    pub fn apply(&self, m: &Mat2) -> UhpPoint {
        // (a z + b) / (c z + d) on z = x + i y
        let (a, b, c, d) = (m.a, m.b, m.c, m.d);
        let den = (c * self.x + d) * (c * self.x + d) + (c * self.y) * (c * self.y);
        let nx = (a * self.x + b) * (c * self.x + d) + a * c * self.y * self.y;
        let ny = (a * d - b * c) * self.y;
        UhpPoint::new(nx / den, ny / den)
    }
}

/// `arccosh(1 + |z-w|^2 / (2 Im z Im w))`.
pub fn hyperbolic_distance(z: UhpPoint, w: UhpPoint) -> f64 {
    let dx = z.x - w.x;
    let dy = z.y - w.y;
    let arg = 1.0 + (dx * dx + dy * dy) / (2.0 * z.y * w.y);
    arg.acosh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;
    use rand::Rng;

    #[test]
    fn same_point_zero() {
        let z = UhpPoint::new(0.3, 1.7);
        assert_eq!(hyperbolic_distance(z, z), 0.0);
    }

    #[test]
    fn vertical_geodesic_is_log_ratio() {
        let d = hyperbolic_distance(UhpPoint::new(0.0, 1.0), UhpPoint::new(0.0, 2.0));
        assert!((d - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn symmetry_on_random_pairs() {
        let mut rng = stream_rng(0xD15, 0);
        for _ in 0..200 {
            let z = UhpPoint::new(rng.gen_range(-5.0..5.0), rng.gen_range(0.01..5.0));
            let w = UhpPoint::new(rng.gen_range(-5.0..5.0), rng.gen_range(0.01..5.0));
            assert_eq!(hyperbolic_distance(z, w), hyperbolic_distance(w, z));
        }
    }

    #[test]
    fn isometry_invariance() {
        let mut rng = stream_rng(0xD16, 0);
        let g = crate::surface_group::build_genus2_group().unwrap();
        for _ in 0..100 {
            let z = UhpPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.1..3.0));
            let w = UhpPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.1..3.0));
            let m = g.generator(rng.gen_range(0..4));
            let d0 = hyperbolic_distance(z, w);
            let d1 = hyperbolic_distance(z.apply(m), w.apply(m));
            assert!((d0 - d1).abs() < 1e-10, "{d0} vs {d1}");
        }
    }
}
