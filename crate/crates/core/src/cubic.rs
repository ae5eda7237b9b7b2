//! Existence of an associated cubic fourfold for a K3 surface of Picard
//! number one, via Hassett's conditions on the discriminant.

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::gamma0::gamma0_invariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HassettConditions {
    /// `d >= 8` and `d ≡ 0, 2 (mod 6)`.
    pub nonempty: bool,
    /// `d` divisible by none of 4, 9, or an odd prime `p ≡ 2 (mod 3)`.
    pub has_k3: bool,
}

pub fn hassett_conditions(d: u64) -> Result<HassettConditions> {
    if d == 0 {
        return Err(Error::NonPositive);
    }
    let nonempty = d >= 8 && matches!(d % 6, 0 | 2);
    let has_k3 = d % 4 != 0
        && d % 9 != 0
        && factorize(d)?.primes().all(|p| p == 2 || p % 3 != 2);
    Ok(HassettConditions { nonempty, has_k3 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicSpecialCase {
    /// Degree 2: related to cubic fourfolds with an ordinary double point.
    NodalDegreeTwo,
}

impl CubicSpecialCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            CubicSpecialCase::NodalDegreeTwo => "degree-2 nodal cubic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubicVerdict {
    pub degree: u64,
    pub has_associated_cubic: bool,
    /// `(n >= 7, ν_3(n) > 0)`.
    pub via_nu3: (bool, bool),
    pub hassett_nonempty: bool,
    pub hassett_has_k3: bool,
    pub special_case: Option<CubicSpecialCase>,
}

pub fn has_associated_cubic(two_n: u64) -> Result<CubicVerdict> {
    if two_n == 0 || two_n % 2 != 0 {
        return Err(Error::InvalidDegree(two_n));
    }
    let n = two_n / 2;
    let nu3_positive = gamma0_invariants(n)?.nu3 > 0;
    let hassett = hassett_conditions(two_n)?;
    let big = n >= 7;
    let has_associated_cubic = big && nu3_positive;
    if big && has_associated_cubic != (hassett.nonempty && hassett.has_k3) {
        return Err(Error::Consistency("ν_3 criterion disagrees with Hassett's conditions"));
    }
    Ok(CubicVerdict {
        degree: two_n,
        has_associated_cubic,
        via_nu3: (big, nu3_positive),
        hassett_nonempty: hassett.nonempty,
        hassett_has_k3: hassett.has_k3,
        special_case: (n == 1).then_some(CubicSpecialCase::NodalDegreeTwo),
    })
}
