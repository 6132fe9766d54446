use std::ops::{Add, Mul};

use crate::linalg::{c64, CMatrix};

/// `a + bi + cj + dk`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub fn conj(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(s * self.a, s * self.b, s * self.c, s * self.d)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product, `i² = j² = k² = ijk = −1`.
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        )
    }
}

/// Real *-algebra embedding `ℍ → M₂(ℂ)`:
///
/// ```text
/// a + bi + cj + dk ↦ [[a + bi, −c − di],
///                     [c − di,  a − bi]]
/// ```
///
/// The transposed layout `[[a + bi, c − di], [−c − di, a − bi]]` is an
/// anti-homomorphism (it sends `ij` to `−k`), so it is not used.
pub fn quaternion_embed(q: Quaternion) -> CMatrix {
    CMatrix::from_rows(&[
        &[c64(q.a, q.b), c64(-q.c, -q.d)],
        &[c64(q.c, -q.d), c64(q.a, -q.b)],
    ])
}
