//! Elementary number theory: factorization, the Kronecker symbol, and class
//! numbers of negative discriminants by reduced-form enumeration.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Prime-power decomposition of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Number of distinct primes.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Writes `n = k^2 * m` with `m` squarefree. `n = 0` gives `(0, 1)`.
pub fn squarefree_decomposition(n: u128) -> (u128, u128) {
    if n == 0 {
        return (0, 1);
    }
    let (mut k, mut m, mut rest) = (1u128, 1u128, n);
    let mut p = 2u128;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (k, m * rest)
}

/// Integer square root of a nonnegative integer, if it is a perfect square.
pub(crate) fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).isqrt() as i128;
    (r * r == n).then_some(r)
}

/// The Kronecker symbol `(a / m)`.
///
/// Vanishes whenever `gcd(a, m) > 1`. At 2 it is `(a / 2) = ±1` for odd `a`
/// according to `a ≡ ±1` or `±3 (mod 8)`, so `(-1 / 2) = 1` while `(-4 / 2) = 0`.
pub fn kronecker(a: i64, m: i64) -> Result<i8> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut a = a as i128;
    let mut b = m as i128;
    let mut sign = 1i8;
    if b < 0 {
        b = -b;
        if a < 0 {
            sign = -sign;
        }
    }
    let v = b.trailing_zeros();
    if v > 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        b >>= v;
        if v % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
    }
    // Jacobi symbol (a / b) for odd positive b.
    a = a.rem_euclid(b);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(b % 8, 3 | 5) {
                sign = -sign;
            }
        }
        core::mem::swap(&mut a, &mut b);
        if a % 4 == 3 && b % 4 == 3 {
            sign = -sign;
        }
        a %= b;
    }
    Ok(if b == 1 { sign } else { 0 })
}

/// The binary quadratic form `a X^2 + b XY + c Y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadraticForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadraticForm { a, b, c }
    }

    pub fn discriminant(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c
    }

    pub fn content(&self) -> i64 {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Reduced positive-definite: `|b| <= a <= c`, with `b >= 0` when
    /// `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let QuadraticForm { a, b, c } = *self;
        a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }
}

fn check_negative_discriminant(d: i64) -> Result<()> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(d));
    }
    Ok(())
}

/// All reduced primitive positive-definite forms of discriminant `d < 0`,
/// ordered by `(a, b)`.
pub fn reduced_forms(d: i64) -> Result<Vec<QuadraticForm>> {
    check_negative_discriminant(d)?;
    let abs_d = d.unsigned_abs() as i64;
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= abs_d {
        // b ≡ d (mod 2) is equivalent to b^2 ≡ d (mod 4) here
        let start = if (a + d).rem_euclid(2) == 0 { -a } else { -a + 1 };
        for b in (start..=a).step_by(2) {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let form = QuadraticForm::new(a, b, num / (4 * a));
            if form.is_reduced() && form.is_primitive() {
                forms.push(form);
            }
        }
        a += 1;
    }
    Ok(forms)
}

/// Class number `h(d)` of primitive positive-definite forms of discriminant `d`.
pub fn class_number(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?.len() as u64)
}
