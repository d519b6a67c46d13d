//! The Bolza-type Fuchsian realization of the genus-2 surface group.

use super::word::GroupWord;
use super::SurfaceGroupError;

/// A real 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Inverse of a determinant-1 matrix (the adjugate).
    pub fn sl2_inverse(&self) -> Mat2 {
        Mat2 { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Max-norm distance to +I or -I, whichever is closer.
    pub fn dist_to_pm_identity(&self) -> f64 {
        let plus = (self.a - 1.0)
            .abs()
            .max((self.d - 1.0).abs())
            .max(self.b.abs())
            .max(self.c.abs());
        let minus = (self.a + 1.0)
            .abs()
            .max((self.d + 1.0).abs())
            .max(self.b.abs())
            .max(self.c.abs());
        plus.min(minus)
    }
}

/// A cocompact Fuchsian group presenting the genus-2 surface group with the
/// relator `[a1,a2][a3,a4]`.
pub struct FuchsianGroup {
    genus: u32,
    generators: Vec<Mat2>,
    inverses: Vec<Mat2>,
    relator: GroupWord,
}

/// Rotation by `theta` about `i` in the upper half-plane (an SO(2) matrix).
fn rotation(theta: f64) -> Mat2 {
    let (s, c) = (theta / 2.0).sin_cos();
    Mat2::new(c, s, -s, c)
}

/// Builds the Bolza-type genus-2 group.
///
/// The regular-octagon surface carries four hyperbolic translations of trace
/// `2(1+sqrt 2)` along axes through `i` at angles `k*pi/4`, `k = 0..4`
/// (each is the base boost conjugated by a rotation). Those four satisfy the
/// octagon side-pairing relation; the commutator-relator generating set used
/// here is the Nielsen-equivalent tuple
///
/// ```text
/// g1 = b2,   g2 = b1^-1 b0 b3,   g3 = b1^-1 b0,   g4 = b3 b1
/// ```
///
/// (indices are the rotation steps `k`), which satisfies
/// `[g1,g2][g3,g4] = I` exactly and still generates the same group.
pub fn build_genus2_group() -> Result<FuchsianGroup, SurfaceGroupError> {
    // cosh(l/2) = 1 + sqrt(2), the systole half-length of the Bolza surface
    let lam = 1.0 + std::f64::consts::SQRT_2 + (2.0 + 2.0 * std::f64::consts::SQRT_2).sqrt();
    let boost = Mat2::new(lam, 0.0, 0.0, 1.0 / lam);
    let b: Vec<Mat2> = (0..4)
        .map(|k| {
            let r = rotation(k as f64 * std::f64::consts::FRAC_PI_4);
            r.mul(&boost).mul(&r.sl2_inverse())
        })
        .collect();
    let binv: Vec<Mat2> = b.iter().map(Mat2::sl2_inverse).collect();

    let generators = vec![
        b[2],
        binv[1].mul(&b[0]).mul(&b[3]),
        binv[1].mul(&b[0]),
        b[3].mul(&b[1]),
    ];
    let inverses: Vec<Mat2> = generators.iter().map(Mat2::sl2_inverse).collect();
    let relator = GroupWord::genus2(&[1, 2, -1, -2, 3, 4, -3, -4]);

    let group = FuchsianGroup { genus: 2, generators, inverses, relator };

    for (k, g) in group.generators.iter().enumerate() {
        let err = (g.det() - 1.0).abs();
        if err > 1e-12 {
            return Err(SurfaceGroupError::Construction(format!(
                "generator {k} determinant off by {err:.3e}"
            )));
        }
    }
    let rel = group.word_matrix(&group.relator);
    let res = rel.dist_to_pm_identity();
    if res > 1e-9 {
        return Err(SurfaceGroupError::Construction(format!(
            "relator matrix {res:.3e} away from +-identity"
        )));
    }
    Ok(group)
}

impl FuchsianGroup {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn generator(&self, k: usize) -> &Mat2 {
        &self.generators[k]
    }

    pub fn relator_word(&self) -> &GroupWord {
        &self.relator
    }

    /// Matrix of a letter (`k` or `-k`).
    pub fn letter_matrix(&self, l: i32) -> &Mat2 {
        debug_assert!(l != 0 && l.unsigned_abs() <= 2 * self.genus);
        if l > 0 {
            &self.generators[(l - 1) as usize]
        } else {
            &self.inverses[(-l - 1) as usize]
        }
    }

    /// Product of generator matrices along the word (identity when empty).
    ///
    /// Accumulated in compensated (double-double) arithmetic: long products
    /// of hyperbolic matrices grow exponentially in the word length while
    /// conjugation-invariant quantities like the trace cancel back down, so
    /// plain f64 products lose absolute accuracy exactly where the catalog
    /// and the class-function checks need it.
    pub fn word_matrix(&self, w: &GroupWord) -> Mat2 {
        let mut m = dd::MatDD::identity();
        for &l in w.letters() {
            m = m.mul_f64(self.letter_matrix(l));
        }
        m.round()
    }
}

/// Minimal double-double arithmetic for 2x2 matrix products.
mod dd {
    use super::Mat2;

    #[derive(Clone, Copy)]
    pub struct DD {
        hi: f64,
        lo: f64,
    }

    #[inline]
    fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        (s, b - (s - a))
    }

    #[inline]
    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    #[inline]
    fn split(a: f64) -> (f64, f64) {
        let c = 134_217_729.0 * a; // 2^27 + 1
        let hi = c - (c - a);
        (hi, a - hi)
    }

    #[inline]
    fn two_prod(a: f64, b: f64) -> (f64, f64) {
        let p = a * b;
        let (ah, al) = split(a);
        let (bh, bl) = split(b);
        (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
    }

    impl DD {
        const ZERO: DD = DD { hi: 0.0, lo: 0.0 };

        fn from_f64(x: f64) -> DD {
            DD { hi: x, lo: 0.0 }
        }

        fn add(self, o: DD) -> DD {
            let (s, e) = two_sum(self.hi, o.hi);
            let (hi, lo) = quick_two_sum(s, e + self.lo + o.lo);
            DD { hi, lo }
        }

        fn mul_f64(self, o: f64) -> DD {
            let (p, e) = two_prod(self.hi, o);
            let (hi, lo) = quick_two_sum(p, e + self.lo * o);
            DD { hi, lo }
        }
    }

    pub struct MatDD {
        e: [DD; 4],
    }

    impl MatDD {
        pub fn identity() -> MatDD {
            MatDD {
                e: [DD::from_f64(1.0), DD::ZERO, DD::ZERO, DD::from_f64(1.0)],
            }
        }

        /// `self * m` with an f64 right factor.
        pub fn mul_f64(&self, m: &Mat2) -> MatDD {
            let [a, b, c, d] = self.e;
            MatDD {
                e: [
                    a.mul_f64(m.a).add(b.mul_f64(m.c)),
                    a.mul_f64(m.b).add(b.mul_f64(m.d)),
                    c.mul_f64(m.a).add(d.mul_f64(m.c)),
                    c.mul_f64(m.b).add(d.mul_f64(m.d)),
                ],
            }
        }

        pub fn round(&self) -> Mat2 {
            Mat2 {
                a: self.e[0].hi + self.e[0].lo,
                b: self.e[1].hi + self.e[1].lo,
                c: self.e[2].hi + self.e[2].lo,
                d: self.e[3].hi + self.e[3].lo,
            }
        }
    }
}

/// Translation length of a hyperbolic isometry: `2 arccosh(|tr|/2)`.
pub fn geodesic_length(m: &Mat2) -> Result<f64, SurfaceGroupError> {
    let t = m.trace().abs();
    if t <= 2.0 + 1e-9 {
        return Err(SurfaceGroupError::NonHyperbolic(t));
    }
    Ok(2.0 * (t / 2.0).acosh())
}

/// Trace of the Bolza systole generators, `2(1+sqrt 2)`.
pub const SYSTOLE_TRACE: f64 = 4.82842712474619;

/// Length of the Bolza systole, `2 arccosh(1+sqrt 2)`.
pub const SYSTOLE_LENGTH: f64 = 3.0571418389619964;
