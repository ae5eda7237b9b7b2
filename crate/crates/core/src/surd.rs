use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::arith::squarefree_decomposition;

/// Exact rational number.
pub type Rational = Ratio<i128>;

/// The number `rational + coeff * sqrt(radicand)`.
///
/// `radicand` is a squarefree integer different from 1 whenever `coeff` is
/// nonzero; a negative radicand gives a point of an imaginary quadratic field.
/// Rational values are stored with `coeff = 0` and `radicand = 1`.
///
/// Arithmetic between two irrational surds is only defined when they share
/// the radicand; mixing fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    rational: Rational,
    coeff: Rational,
    radicand: i64,
}

impl QuadSurd {
    pub fn new(rational: Rational, coeff: Rational, radicand: i64) -> Self {
        assert!(radicand != 0 || coeff.is_zero(), "zero radicand with nonzero coefficient");
        if coeff.is_zero() || radicand == 0 {
            return Self::from_rational(rational);
        }
        let (k, m) = squarefree_decomposition(radicand.unsigned_abs() as u128);
        let coeff = coeff * Rational::from_integer(k as i128);
        let m = m as i64;
        if radicand > 0 && m == 1 {
            Self::from_rational(rational + coeff)
        } else {
            QuadSurd {
                rational,
                coeff,
                radicand: if radicand > 0 { m } else { -m },
            }
        }
    }

    /// Assembles a surd whose radicand is already squarefree.
    fn from_parts(rational: Rational, coeff: Rational, radicand: i64) -> Self {
        if coeff.is_zero() {
            return Self::from_rational(rational);
        }
        QuadSurd {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn from_rational(rational: Rational) -> Self {
        QuadSurd {
            rational,
            coeff: Rational::zero(),
            radicand: 1,
        }
    }

    pub fn from_integer(value: i128) -> Self {
        Self::from_rational(Rational::from_integer(value))
    }

    /// Principal square root of a rational; `i * sqrt(|x|)` for negative `x`.
    pub fn sqrt(x: Rational) -> Self {
        if x.is_zero() {
            return Self::from_integer(0);
        }
        let num = *x.numer();
        let den = *x.denom();
        let mag = num.unsigned_abs() * den as u128;
        let radicand = i64::try_from(mag).expect("radicand exceeds i64");
        let radicand = if num < 0 { -radicand } else { radicand };
        Self::new(Rational::zero(), Rational::new(1, den), radicand)
    }

    /// `sqrt(a * b)` for integers, decomposing the factors separately so
    /// that only `|a|` and `|b|` are ever trial-divided.
    pub fn sqrt_of_product(a: i128, b: i128) -> Self {
        if a == 0 || b == 0 {
            return Self::from_integer(0);
        }
        let (k1, m1) = squarefree_decomposition(a.unsigned_abs());
        let (k2, m2) = squarefree_decomposition(b.unsigned_abs());
        let g = num_integer::Integer::gcd(&m1, &m2);
        let coeff = i128::try_from(k1 * k2 * g).expect("coefficient exceeds i128");
        let m = i64::try_from((m1 / g) * (m2 / g)).expect("radicand exceeds i64");
        let negative = (a < 0) != (b < 0);
        if m == 1 && !negative {
            return Self::from_integer(coeff);
        }
        QuadSurd {
            rational: Rational::zero(),
            coeff: Rational::from_integer(coeff),
            radicand: if negative { -m } else { m },
        }
    }

    pub fn rational_part(&self) -> Rational {
        self.rational
    }

    pub fn coeff(&self) -> Rational {
        self.coeff
    }

    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.coeff.is_zero() || self.radicand > 0
    }

    pub fn conj(&self) -> Self {
        QuadSurd {
            coeff: -self.coeff,
            ..self.clone()
        }
    }

    /// Field norm `x * conj(x)`.
    pub fn norm(&self) -> Rational {
        self.rational * self.rational
            - self.coeff * self.coeff * Rational::from_integer(self.radicand as i128)
    }

    fn shared_radicand(&self, other: &Self) -> i64 {
        if self.coeff.is_zero() {
            other.radicand
        } else if other.coeff.is_zero() || self.radicand == other.radicand {
            self.radicand
        } else {
            panic!("surds over different quadratic fields");
        }
    }

    /// Exact comparison of a real surd with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        let a = self.rational - x;
        if self.coeff.is_zero() {
            return Some(a.cmp(&Rational::zero()));
        }
        // sign of a + b*sqrt(m), m > 0
        let b = self.coeff;
        let m = Rational::from_integer(self.radicand as i128);
        let sign = |r: &Rational| r.cmp(&Rational::zero());
        Some(match (sign(&a), sign(&b)) {
            (Ordering::Less, Ordering::Greater) => (b * b * m).cmp(&(a * a)),
            (Ordering::Greater, Ordering::Less) => (a * a).cmp(&(b * b * m)),
            (Ordering::Less, _) | (Ordering::Equal, Ordering::Less) => Ordering::Less,
            _ => Ordering::Greater,
        })
    }
}

impl Add for &QuadSurd {
    type Output = QuadSurd;
    fn add(self, rhs: &QuadSurd) -> QuadSurd {
        let m = self.shared_radicand(rhs);
        QuadSurd::from_parts(self.rational + rhs.rational, self.coeff + rhs.coeff, m)
    }
}

impl Sub for &QuadSurd {
    type Output = QuadSurd;
    fn sub(self, rhs: &QuadSurd) -> QuadSurd {
        self + &(-rhs)
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd {
            rational: -self.rational,
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl Mul for &QuadSurd {
    type Output = QuadSurd;
    fn mul(self, rhs: &QuadSurd) -> QuadSurd {
        let m = self.shared_radicand(rhs);
        let mr = Rational::from_integer(m as i128);
        QuadSurd::from_parts(
            self.rational * rhs.rational + self.coeff * rhs.coeff * mr,
            self.rational * rhs.coeff + self.coeff * rhs.rational,
            m,
        )
    }
}

impl Div for &QuadSurd {
    type Output = QuadSurd;
    fn div(self, rhs: &QuadSurd) -> QuadSurd {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero surd");
        let num = self * &rhs.conj();
        QuadSurd::from_parts(num.rational / norm, num.coeff / norm, num.radicand)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{} ", self.rational)?;
            f.write_str(if self.coeff.is_negative() { "- " } else { "+ " })?;
            write!(f, "{}*sqrt({})", self.coeff.abs(), self.radicand)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}
