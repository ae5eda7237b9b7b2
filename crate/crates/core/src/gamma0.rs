//! Invariants of the modular curve `X_0(n)`.
//!
//! The product formulas for the elliptic point counts are the implementation;
//! [`elliptic_congruence_oracle`] counts roots of `x^2 + 1` and `x^2 + x + 1`
//! modulo `n` directly and is kept public so callers can pin the two together.

use num_integer::Integer;

use crate::arith::{factorize, kronecker, Factorization};
use crate::error::{Error, Result};

/// `(μ, ν_2, ν_3, ν_∞, g)` for `Γ_0(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InvariantTable {
    pub n: u64,
    /// Index of `Γ_0(n)` in `PSL(2, Z)`.
    pub mu: u64,
    pub nu2: u64,
    pub nu3: u64,
    pub nu_inf: u64,
    pub genus: u64,
}

fn euler_phi(f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

fn divisors(f: &Factorization) -> alloc::vec::Vec<u64> {
    let mut divs = alloc::vec![1u64];
    for &(p, e) in f.factors() {
        let current = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

fn elliptic_count(f: &Factorization, disc: i64, blocked_prime_square: u64) -> Result<u64> {
    if f.n() % blocked_prime_square == 0 {
        return Ok(0);
    }
    let mut count = 1u64;
    for p in f.primes() {
        count *= (1 + kronecker(disc, p as i64)?) as u64;
    }
    Ok(count)
}

pub fn gamma0_invariants(n: u64) -> Result<InvariantTable> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let f = factorize(n)?;
    let mu: u64 = f
        .factors()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p + 1))
        .product();
    let nu2 = elliptic_count(&f, -4, 4)?;
    let nu3 = elliptic_count(&f, -3, 9)?;
    let nu_inf = divisors(&f)
        .into_iter()
        .map(|d| {
            let g = d.gcd(&(n / d));
            euler_phi(&factorize(g).expect("gcd of positive integers is positive"))
        })
        .sum();

    // g = 1 + μ/12 - ν_2/4 - ν_3/3 - ν_∞/2
    let twelve_g = 12 + mu as i128 - 3 * nu2 as i128 - 4 * nu3 as i128 - 6 * nu_inf as i128;
    if twelve_g < 0 || twelve_g % 12 != 0 {
        return Err(Error::Consistency("genus of X_0(n) is not a nonnegative integer"));
    }
    Ok(InvariantTable {
        n,
        mu,
        nu2,
        nu3,
        nu_inf,
        genus: (twelve_g / 12) as u64,
    })
}

/// Number of residues `x mod n` with `x^2 + 1 ≡ 0` (order 2) or
/// `x^2 + x + 1 ≡ 0` (order 3), by exhaustive enumeration.
pub fn elliptic_congruence_oracle(n: u64, order: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let poly: fn(u128) -> u128 = match order {
        2 => |x| x * x + 1,
        3 => |x| x * x + x + 1,
        other => return Err(Error::InvalidEllipticOrder(other)),
    };
    let n128 = n as u128;
    Ok((0..n128).filter(|&x| poly(x) % n128 == 0).count() as u64)
}
