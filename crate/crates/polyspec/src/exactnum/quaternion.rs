use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactError, QRoot5};

/// A quaternion w + xi + yj + zk with components in Q(√5).
///
/// Multiplication is the Hamilton product (i² = j² = k² = ijk = −1). The
/// icosian coordinates of the 600-cell and all isometry components used in
/// this crate are unit quaternions of this type. Ordering is lexicographic
/// on (w, x, y, z) in the exact real-embedding order, which gives canonical
/// representatives for central quotients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternionQ5 {
    pub w: QRoot5,
    pub x: QRoot5,
    pub y: QRoot5,
    pub z: QRoot5,
}

impl QuaternionQ5 {
    pub fn new(w: QRoot5, x: QRoot5, y: QRoot5, z: QRoot5) -> Self {
        QuaternionQ5 { w, x, y, z }
    }

    /// (w + xi + yj + zk)/d from integer parts, d ≠ 0.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64, d: i64) -> Self {
        QuaternionQ5 {
            w: QRoot5::from_ratio(w, d),
            x: QRoot5::from_ratio(x, d),
            y: QRoot5::from_ratio(y, d),
            z: QRoot5::from_ratio(z, d),
        }
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0, 1)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0, 1)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0, 1)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1, 1)
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Quaternion conjugate w − xi − yj − zk.
    pub fn conj(&self) -> Self {
        QuaternionQ5 {
            w: self.w.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    /// Reduced norm w² + x² + y² + z², an element of Q(√5).
    pub fn norm(&self) -> QRoot5 {
        &(&(&self.w * &self.w) + &(&self.x * &self.x))
            + &(&(&self.y * &self.y) + &(&self.z * &self.z))
    }

    /// Real part of p·q̄, the Euclidean inner product of p and q as vectors
    /// in R⁴. Two 600-cell vertices are nearest neighbours exactly when this
    /// equals τ/2.
    pub fn dot(&self, other: &Self) -> QRoot5 {
        &(&(&self.w * &other.w) + &(&self.x * &other.x))
            + &(&(&self.y * &other.y) + &(&self.z * &other.z))
    }

    /// Multiplicative inverse q̄/N(q); fails on zero norm.
    ///
    /// N(q) = 0 forces q = 0 here because the norm form is totally positive
    /// at the identity embedding, but the check is on the norm itself.
    pub fn inv(&self) -> Result<Self, ExactError> {
        let n = self.norm();
        let ninv = n.inv().ok_or(ExactError::ZeroNormInverse)?;
        let c = self.conj();
        Ok(QuaternionQ5 {
            w: &c.w * &ninv,
            x: &c.x * &ninv,
            y: &c.y * &ninv,
            z: &c.z * &ninv,
        })
    }

    pub fn scale(&self, s: &QRoot5) -> Self {
        QuaternionQ5 {
            w: &self.w * s,
            x: &self.x * s,
            y: &self.y * s,
            z: &self.z * s,
        }
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        ]
    }
}

impl Mul for &QuaternionQ5 {
    type Output = QuaternionQ5;
    fn mul(self, r: &QuaternionQ5) -> QuaternionQ5 {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&r.w, &r.x, &r.y, &r.z);
        QuaternionQ5 {
            w: &(&(a * e) - &(b * f)) - &(&(c * g) + &(d * h)),
            x: &(&(a * f) + &(b * e)) + &(&(c * h) - &(d * g)),
            y: &(&(a * g) - &(b * h)) + &(&(c * e) + &(d * f)),
            z: &(&(a * h) + &(b * g)) - &(&(c * f) - &(d * e)),
        }
    }
}

impl Mul for QuaternionQ5 {
    type Output = QuaternionQ5;
    fn mul(self, rhs: QuaternionQ5) -> QuaternionQ5 {
        &self * &rhs
    }
}

impl Add for &QuaternionQ5 {
    type Output = QuaternionQ5;
    fn add(self, rhs: &QuaternionQ5) -> QuaternionQ5 {
        QuaternionQ5 {
            w: &self.w + &rhs.w,
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z,
        }
    }
}

impl Sub for &QuaternionQ5 {
    type Output = QuaternionQ5;
    fn sub(self, rhs: &QuaternionQ5) -> QuaternionQ5 {
        QuaternionQ5 {
            w: &self.w - &rhs.w,
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            z: &self.z - &rhs.z,
        }
    }
}

impl Neg for &QuaternionQ5 {
    type Output = QuaternionQ5;
    fn neg(self) -> QuaternionQ5 {
        QuaternionQ5 {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl fmt::Display for QuaternionQ5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})i+({})j+({})k", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Debug for QuaternionQ5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// First component of the special generator: (−τ̄·i − j + τ·k)/2.
    fn special_component() -> QuaternionQ5 {
        let half = QRoot5::from_ratio(1, 2);
        QuaternionQ5::new(
            QRoot5::zero(),
            (-&QRoot5::taubar()) * half.clone(),
            -&half,
            QRoot5::tau() * half,
        )
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (QuaternionQ5::i(), QuaternionQ5::j(), QuaternionQ5::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -&QuaternionQ5::one());
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn special_generator_component_is_a_unit_involution_up_to_sign() {
        let g = special_component();
        // (τ̄² + 1 + τ²)/4 = (3 + 1)/4 = 1
        assert_eq!(g.norm(), QRoot5::one());
        // pure imaginary unit quaternion squares to −1
        assert_eq!(&g * &g, -&QuaternionQ5::one());
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = QuaternionQ5::from_ints(1, 1, 1, 1, 2);
        let q = special_component();
        let pq = &p * &q;
        assert_eq!(pq.norm(), p.norm() * q.norm());
    }

    #[test]
    fn inverse() {
        let p = QuaternionQ5::from_ints(3, -1, 4, 1, 5);
        let pinv = p.inv().unwrap();
        assert_eq!(&p * &pinv, QuaternionQ5::one());
        assert_eq!(
            QuaternionQ5::zero().inv(),
            Err(ExactError::ZeroNormInverse)
        );
    }
}
