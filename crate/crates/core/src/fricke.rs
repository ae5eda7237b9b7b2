//! Invariants of the Fricke quotient `X_0^+(n) = Γ_0^+(n) \ H*`.
//!
//! For `n >= 5` everything follows from the `Γ_0(n)` table and the number `ξ(n)`
//! of ordinary ramification points of the double cover `X_0(n) -> X_0^+(n)`.
//! The levels `n <= 4` are special and are listed explicitly.
//!
//! Note on `n = 3`: `ξ(3) = h(-3) + h(-12) = 2`, while the cover at level 3 has
//! one ordinary ramification point and one elliptic one. The `ξ`-based
//! formulas are therefore only applied from `n = 5` on; `xi(3)` itself still
//! returns the class-number value.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::class_number;
use crate::error::{Error, Result};
use crate::gamma0::{gamma0_invariants, InvariantTable};

/// The `(-2)`-points on `Y_0^+(n)`, recorded by their elliptic orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinusTwoCensus {
    /// Elliptic order on `Y_0^+(n)` of each `(-2)`-point.
    pub orders: Vec<u32>,
}

impl MinusTwoCensus {
    pub fn count(&self) -> usize {
        self.orders.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrickeTable {
    pub n: u64,
    pub xi: u64,
    pub nu2_plus: u64,
    pub nu3_plus: u64,
    pub nu4_plus: u64,
    pub nu6_plus: u64,
    pub nu_inf_plus: u64,
    pub genus_plus: u64,
    pub minus_two_points: MinusTwoCensus,
    /// The underlying `Γ_0(n)` table.
    pub gamma0: InvariantTable,
}

impl FrickeTable {
    /// Number of ramification points of `X_0(n) -> X_0^+(n)`; zero for `n = 1`.
    pub fn ramification_points(&self) -> u64 {
        match self.n {
            1 => 0,
            2..=4 => 2,
            _ => self.xi,
        }
    }
}

/// `ξ(n) = h(-4n)`, plus `h(-n)` when `n ≡ 3 (mod 4)`.
pub fn xi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let n_i = i64::try_from(n).map_err(|_| Error::Overflow)?;
    let four_n = n_i.checked_mul(4).ok_or(Error::Overflow)?;
    let mut total = class_number(-four_n)?;
    if n % 4 == 3 {
        total += class_number(-n_i)?;
    }
    Ok(total)
}

fn halve(value: u64, what: &'static str) -> Result<u64> {
    if value % 2 != 0 {
        return Err(Error::Consistency(what));
    }
    Ok(value / 2)
}

pub fn fricke_invariants(n: u64) -> Result<FrickeTable> {
    let gamma0 = gamma0_invariants(n)?;
    let xi = xi(n)?;
    let base = FrickeTable {
        n,
        xi,
        nu2_plus: 0,
        nu3_plus: 0,
        nu4_plus: 0,
        nu6_plus: 0,
        nu_inf_plus: 0,
        genus_plus: 0,
        minus_two_points: MinusTwoCensus { orders: vec![2] },
        gamma0,
    };
    let table = match n {
        1 => FrickeTable {
            nu2_plus: 1,
            nu3_plus: 1,
            nu_inf_plus: 1,
            ..base
        },
        2 => FrickeTable {
            nu2_plus: 1,
            nu4_plus: 1,
            nu_inf_plus: 1,
            ..base
        },
        3 => FrickeTable {
            nu2_plus: 1,
            nu6_plus: 1,
            nu_inf_plus: 1,
            minus_two_points: MinusTwoCensus { orders: vec![2, 6] },
            ..base
        },
        4 => FrickeTable {
            nu2_plus: 1,
            nu_inf_plus: 2,
            ..base
        },
        _ => {
            let half_xi = halve(xi, "ξ(n) is odd")?;
            let two_genus_plus = (gamma0.genus + 1)
                .checked_sub(half_xi)
                .ok_or(Error::Consistency("g + 1 - ξ/2 is negative"))?;
            FrickeTable {
                nu2_plus: halve(gamma0.nu2, "ν_2 is odd")? + xi,
                nu3_plus: halve(gamma0.nu3, "ν_3 is odd")?,
                nu_inf_plus: halve(gamma0.nu_inf, "ν_∞ is odd")?,
                genus_plus: halve(two_genus_plus, "g + 1 - ξ/2 is odd")?,
                minus_two_points: MinusTwoCensus {
                    orders: vec![2; xi as usize],
                },
                ..base
            }
        }
    };
    Ok(table)
}
