//! Counts of finite subgroups of autoequivalences and the free-product
//! presentations they are read off from.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::fricke::fricke_invariants;
use crate::gamma0::gamma0_invariants;

fn level_of_degree(two_n: u64) -> Result<u64> {
    if two_n == 0 || two_n % 2 != 0 {
        return Err(Error::InvalidDegree(two_n));
    }
    Ok(two_n / 2)
}

/// `2^{a-1}` when `n = q^ℓ p_1^{k_1} ... p_a^{k_a}` with `q = special`,
/// `ℓ ∈ {0, 1}`, `a >= 1` and every `p_i ≡ 1 (mod modulus)`; 0 otherwise.
fn power_count(n: u64, special: u64, modulus: u64) -> Result<u64> {
    let f = factorize(n)?;
    if f.exponent_of(special) > 1 {
        return Ok(0);
    }
    let mut a = 0u32;
    for p in f.primes() {
        if p == special {
            continue;
        }
        if p % modulus != 1 {
            return Ok(0);
        }
        a += 1;
    }
    Ok(if a == 0 { 0 } else { 1 << (a - 1) })
}

/// Conjugacy classes of nontrivial finite subgroups of `Aut(D^b(X))` for a
/// K3 surface of degree `two_n`.
pub fn count_involution_classes(two_n: u64) -> Result<u64> {
    let n = level_of_degree(two_n)?;
    if n <= 2 {
        return Ok(1);
    }
    // 4 | n, or a prime ≡ 3 (mod 4), gives 0; otherwise n = 2^ℓ (1 mod 4)-primes
    let count = power_count(n, 2, 4)?;
    if n >= 5 {
        let nu2 = gamma0_invariants(n)?.nu2;
        if 2 * count != nu2 {
            return Err(Error::Consistency("involution count differs from ν_2 / 2"));
        }
    }
    Ok(count)
}

/// Isomorphism type of a maximal finite symplectic subgroup modulo `[2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteShape {
    Trivial,
    Z2,
    Z3,
    Z4,
    Z6,
}

impl FiniteShape {
    pub fn as_str(&self) -> &'static str {
        match self {
            FiniteShape::Trivial => "0",
            FiniteShape::Z2 => "Z2",
            FiniteShape::Z3 => "Z3",
            FiniteShape::Z4 => "Z4",
            FiniteShape::Z6 => "Z6",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupCount {
    pub degree: u64,
    pub involution_classes: u64,
    /// Classes of subgroups `Z2 × Z2[1]`.
    pub z2_mod2_classes: u64,
    /// Classes of subgroups `Z3 × Z2[1]`.
    pub z3_mod2_classes: u64,
    /// The shapes `G_s` that occur as maximal finite symplectic subgroups,
    /// each appearing as `G_s × Z2[1]`.
    pub maximal_shapes: Vec<FiniteShape>,
    /// Every maximal subgroup carries the factor `Z2[1]`.
    pub times_shift_factor: bool,
}

pub fn count_subgroups_mod2(two_n: u64) -> Result<SubgroupCount> {
    let n = level_of_degree(two_n)?;
    let involution_classes = count_involution_classes(two_n)?;
    let (z2, z3, maximal_shapes) = match n {
        // Z6 contains one Z2 and one Z3
        1 => (1, 1, vec![FiniteShape::Z6]),
        2 => (1, 0, vec![FiniteShape::Z4]),
        3 | 4 => (involution_classes, 0, vec![FiniteShape::Trivial]),
        _ => {
            let z3 = power_count(n, 3, 3)?;
            let table = gamma0_invariants(n)?;
            if 2 * z3 != table.nu3 {
                return Err(Error::Consistency("Z3 count differs from ν_3 / 2"));
            }
            let mut shapes = Vec::new();
            if involution_classes > 0 {
                shapes.push(FiniteShape::Z2);
            }
            if z3 > 0 {
                shapes.push(FiniteShape::Z3);
            }
            if shapes.is_empty() {
                shapes.push(FiniteShape::Trivial);
            }
            (involution_classes, z3, shapes)
        }
    };
    Ok(SubgroupCount {
        degree: two_n,
        involution_classes,
        z2_mod2_classes: z2,
        z3_mod2_classes: z3,
        maximal_shapes,
        times_shift_factor: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Z2,
    Z3,
    Z4,
    Z6,
    /// An infinite cyclic factor.
    Plain,
    /// `Z̊`: a loop around a `(-2)`-point.
    Ring,
    /// `Ž`: a loop around a real cusp.
    Check,
}

impl FactorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FactorKind::Z2 => "Z2",
            FactorKind::Z3 => "Z3",
            FactorKind::Z4 => "Z4",
            FactorKind::Z6 => "Z6",
            FactorKind::Plain => "Z_plain",
            FactorKind::Ring => "Z_ring",
            FactorKind::Check => "Z_check",
        }
    }

    /// Order of the factor, `None` for infinite cyclic ones.
    pub fn order(&self) -> Option<u32> {
        match self {
            FactorKind::Z2 => Some(2),
            FactorKind::Z3 => Some(3),
            FactorKind::Z4 => Some(4),
            FactorKind::Z6 => Some(6),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    /// Orbifold fundamental group of `Γ_0^+(n) \\ Q_0^+(X)`.
    Pi1OrbQ0,
    /// `Γ_0^+(n)` itself.
    FrickeGroup,
    /// `Aut_s(D^b(X)) / Z[2]`.
    AutsMod2,
}

/// A free product, as factors with multiplicities. Factors of multiplicity
/// zero are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeProductPresentation {
    pub factors: Vec<(FactorKind, u64)>,
    /// Degree 2 only: the group is `Aut_s(D^b(X)) / Z(ι[1])` rather than the
    /// quotient by `[2]`.
    pub quotient_by_iota_shift: bool,
}

impl FreeProductPresentation {
    fn from_list(list: &[(FactorKind, u64)]) -> Self {
        FreeProductPresentation {
            factors: list.iter().copied().filter(|&(_, m)| m > 0).collect(),
            quotient_by_iota_shift: false,
        }
    }

    pub fn multiplicity(&self, kind: FactorKind) -> u64 {
        self.factors
            .iter()
            .filter(|(k, _)| *k == kind)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.factors.iter().any(|(k, _)| k.order().is_some())
    }
}

impl core::fmt::Display for FreeProductPresentation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, (kind, mult)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            match mult {
                1 => write!(f, "{}", kind.as_str())?,
                m => write!(f, "{}^{}", kind.as_str(), m)?,
            }
        }
        Ok(())
    }
}

pub fn presentation(n: u64, which: PresentationKind) -> Result<FreeProductPresentation> {
    use FactorKind::*;
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let small: Option<&[(FactorKind, u64)]> = match (which, n) {
        (PresentationKind::Pi1OrbQ0, 1) => Some(&[(Ring, 1), (Z3, 1)]),
        (PresentationKind::Pi1OrbQ0, 2) => Some(&[(Ring, 1), (Z4, 1)]),
        (PresentationKind::Pi1OrbQ0, 3) => Some(&[(Ring, 2)]),
        (PresentationKind::Pi1OrbQ0, 4) => Some(&[(Ring, 1), (Check, 1)]),
        (PresentationKind::FrickeGroup, 1) => Some(&[(Z2, 1), (Z3, 1)]),
        (PresentationKind::FrickeGroup, 2) => Some(&[(Z2, 1), (Z4, 1)]),
        (PresentationKind::FrickeGroup, 3) => Some(&[(Z2, 1), (Z6, 1)]),
        (PresentationKind::FrickeGroup, 4) => Some(&[(Z2, 1), (Plain, 1)]),
        (PresentationKind::AutsMod2, 1) => Some(&[(Plain, 1), (Z3, 1)]),
        (PresentationKind::AutsMod2, 2) => Some(&[(Plain, 1), (Z4, 1)]),
        (PresentationKind::AutsMod2, 3 | 4) => Some(&[(Plain, 2)]),
        _ => None,
    };
    if let Some(list) = small {
        let mut p = FreeProductPresentation::from_list(list);
        p.quotient_by_iota_shift = which == PresentationKind::AutsMod2 && n == 1;
        return Ok(p);
    }

    let t = fricke_invariants(n)?;
    let g0 = t.gamma0;
    let (nu2, nu3, nu_inf, g, xi) = (g0.nu2 / 2, g0.nu3 / 2, g0.nu_inf / 2, g0.genus, t.xi);
    let half_xi = xi / 2;
    let list = match which {
        PresentationKind::Pi1OrbQ0 => [
            (Z2, nu2),
            (Z3, nu3),
            (Ring, xi),
            (Check, nu_inf - 1),
            (Plain, g + 1 - half_xi),
        ],
        PresentationKind::FrickeGroup => [
            (Z2, nu2 + xi),
            (Z3, nu3),
            (Plain, g + nu_inf - half_xi),
            (Ring, 0),
            (Check, 0),
        ],
        PresentationKind::AutsMod2 => [
            (Z2, nu2),
            (Z3, nu3),
            (Plain, g + nu_inf + half_xi),
            (Ring, 0),
            (Check, 0),
        ],
    };
    Ok(FreeProductPresentation::from_list(&list))
}
