use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational; `Ratio` keeps values reduced with a
/// positive denominator, which is exactly the canonical form we need for
/// structural equality and hashing.
pub type Rational = BigRational;

/// An element a + b√5 of the real quadratic field Q(√5).
///
/// Equality and hashing are structural on the reduced pair (a, b); ordering
/// is the real-embedding order, decided exactly by sign analysis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRoot5 {
    a: Rational,
    b: Rational,
}

impl QRoot5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QRoot5 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QRoot5 {
            a: Rational::from_integer(BigInt::from(n)),
            b: Rational::zero(),
        }
    }

    /// n/d, with d ≠ 0.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        QRoot5 {
            a: Rational::new(BigInt::from(n), BigInt::from(d)),
            b: Rational::zero(),
        }
    }

    /// (n + m√5)/d, with d ≠ 0.
    pub fn from_parts(n: i64, m: i64, d: i64) -> Self {
        QRoot5 {
            a: Rational::new(BigInt::from(n), BigInt::from(d)),
            b: Rational::new(BigInt::from(m), BigInt::from(d)),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        Self::from_parts(0, 1, 1)
    }

    /// The golden ratio τ = (1+√5)/2.
    pub fn tau() -> Self {
        Self::from_parts(1, 1, 2)
    }

    /// The algebraic conjugate τ̄ = (1−√5)/2 of the golden ratio.
    pub fn taubar() -> Self {
        Self::from_parts(1, -1, 2)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate a − b√5.
    pub fn conjugate(&self) -> Self {
        QRoot5 {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a² − 5b² (a rational).
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    /// Exact sign of a + b√5: −1, 0 or 1.
    ///
    /// Mixed-sign cases compare a² against 5b², which decides the sign of the
    /// real embedding without any irrational arithmetic.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (_, 0) => sa,
            (0, _) => sb,
            _ if sa == sb => sa,
            _ => {
                // a and b have opposite signs: |a| vs |b|√5 ⇔ a² vs 5b².
                let a2 = &self.a * &self.a;
                let b2 = Rational::from_integer(BigInt::from(5)) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(a+b√5) = (a−b√5)/(a²−5b²); the norm is nonzero since √5 ∉ Q.
        let n = self.field_norm();
        let conj = self.conjugate();
        Some(QRoot5 {
            a: conj.a / &n,
            b: conj.b / &n,
        })
    }

    pub fn to_f64(&self) -> f64 {
        rat_f64(&self.a) + rat_f64(&self.b) * 5.0_f64.sqrt()
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rat_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

impl PartialOrd for QRoot5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QRoot5 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).signum() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for QRoot5 {
    type Output = QRoot5;
    fn add(self, rhs: QRoot5) -> QRoot5 {
        QRoot5 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<'a> Add<&'a QRoot5> for &QRoot5 {
    type Output = QRoot5;
    fn add(self, rhs: &'a QRoot5) -> QRoot5 {
        QRoot5 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for QRoot5 {
    type Output = QRoot5;
    fn sub(self, rhs: QRoot5) -> QRoot5 {
        QRoot5 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<'a> Sub<&'a QRoot5> for &QRoot5 {
    type Output = QRoot5;
    fn sub(self, rhs: &'a QRoot5) -> QRoot5 {
        QRoot5 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for QRoot5 {
    type Output = QRoot5;
    fn mul(self, rhs: QRoot5) -> QRoot5 {
        &self * &rhs
    }
}

impl<'a> Mul<&'a QRoot5> for &QRoot5 {
    type Output = QRoot5;
    fn mul(self, rhs: &'a QRoot5) -> QRoot5 {
        // (a+b√5)(c+d√5) = ac+5bd + (ad+bc)√5
        let five = Rational::from_integer(BigInt::from(5));
        QRoot5 {
            a: &self.a * &rhs.a + five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for QRoot5 {
    type Output = QRoot5;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: QRoot5) -> QRoot5 {
        &self * &rhs.inv().expect("division by zero in Q(√5)")
    }
}

impl Neg for QRoot5 {
    type Output = QRoot5;
    fn neg(self) -> QRoot5 {
        QRoot5 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &QRoot5 {
    type Output = QRoot5;
    fn neg(self) -> QRoot5 {
        QRoot5 {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl fmt::Display for QRoot5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√5", self.b)
        } else {
            write!(f, "{}+{}√5", self.a, self.b)
        }
    }
}

impl fmt::Debug for QRoot5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
