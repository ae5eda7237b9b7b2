//! Classification of nontrivial elements of `Γ_0^+(n)` by their action on the
//! period domain, and stabilizers of isotropic classes.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::fricke_group::{
    is_minus_two_point, vector_from_involution, Cusp, DetTag, FixedLocus, FrickeElement, HPoint,
    TraceKind,
};
use crate::mukai::{eigen_data, induced_isometry, MukaiVector};
use crate::surd::{QuadSurd, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PolychotomyResult {
    /// Elliptic with fixed point off the `(-2)`-points.
    FiniteOrder { order: u32, fixed_point: HPoint },
    /// An involution of the Fricke coset fixing a `(-2)`-point; `δ` is the
    /// vector of the corresponding spherical twist.
    MinusTwoReducible { delta: MukaiVector },
    /// Parabolic; `w` is the primitive isotropic class it fixes.
    ZeroReducible { w: MukaiVector },
    PseudoAnosov { spectral_radius: QuadSurd },
    /// Elliptic of order greater than two whose fixed point is a `(-2)`-point.
    /// `delta` is the vector of the involution stabilizing that point.
    EllipticAtMinusTwoPoint { order: u32, delta: MukaiVector },
}

impl PolychotomyResult {
    pub fn name(&self) -> &'static str {
        match self {
            PolychotomyResult::FiniteOrder { .. } => "FiniteOrder",
            PolychotomyResult::MinusTwoReducible { .. } => "MinusTwoReducible",
            PolychotomyResult::ZeroReducible { .. } => "ZeroReducible",
            PolychotomyResult::PseudoAnosov { .. } => "PseudoAnosov",
            PolychotomyResult::EllipticAtMinusTwoPoint { .. } => "EllipticAtMinusTwoPoint",
        }
    }
}

pub fn classify_element(g: &FrickeElement) -> Result<PolychotomyResult> {
    if g.is_identity() {
        return Err(Error::Identity);
    }
    let class = g.trace_class();
    match class.kind {
        TraceKind::Hyperbolic => {
            let eig = eigen_data(&induced_isometry(g)?, g)?;
            if eig.spectral_radius.cmp_rational(&Rational::from_integer(1))
                != Some(core::cmp::Ordering::Greater)
            {
                return Err(Error::Consistency("hyperbolic element with spectral radius at most 1"));
            }
            Ok(PolychotomyResult::PseudoAnosov {
                spectral_radius: eig.spectral_radius,
            })
        }
        TraceKind::Parabolic => {
            let eig = eigen_data(&induced_isometry(g)?, g)?;
            let w = eig.eigen_one_vector;
            if w.square() != 0 || !eig.jordan_block_3 {
                return Err(Error::Consistency("parabolic element without an isotropic fixed class"));
            }
            Ok(PolychotomyResult::ZeroReducible { w })
        }
        TraceKind::Elliptic { order } => match is_minus_two_point(g)? {
            None => {
                let fixed_point = match g.fixed_point()? {
                    FixedLocus::Point(p @ HPoint::Interior { .. }) => p,
                    _ => return Err(Error::Consistency("elliptic element without an interior fixed point")),
                };
                Ok(PolychotomyResult::FiniteOrder { order, fixed_point })
            }
            Some(cert) if order == 2 => {
                if !g.in_fricke_coset() {
                    return Err(Error::Consistency("involution of Γ_0(n) fixes a (-2)-point"));
                }
                let delta = vector_from_involution(g)?;
                if delta != cert.delta {
                    return Err(Error::Consistency("certificate disagrees with the involution vector"));
                }
                Ok(PolychotomyResult::MinusTwoReducible { delta })
            }
            Some(cert) => Ok(PolychotomyResult::EllipticAtMinusTwoPoint {
                order,
                delta: cert.delta,
            }),
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelLabel {
    /// `I(D^b(X))`
    Torelli,
    /// `<I(D^b(X)), ι>`, degree 2 only.
    TorelliAndIota,
}

impl KernelLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            KernelLabel::Torelli => "I(D^b(X))",
            KernelLabel::TorelliAndIota => "⟨I(D^b(X)), ι⟩",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuspStabilizer {
    pub cusp: Cusp,
    /// Generator of the stabilizer of `cusp` in `Γ_0^+(n)`, conjugate in
    /// `PSL(2, R)` to a positive translation.
    pub generator: FrickeElement,
    pub kernel: KernelLabel,
}

pub fn cusp_stabilizer(n: u64, w: &MukaiVector) -> Result<CuspStabilizer> {
    if w.level() != n {
        return Err(Error::LevelMismatch(n, w.level()));
    }
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    let sq = w.square();
    if sq != 0 {
        return Err(Error::NotIsotropic(sq));
    }
    if !w.is_primitive() {
        return Err(Error::Imprimitive);
    }
    // n d^2 = r s, so r = 0 forces d = 0 and the cusp is ∞.
    let (a, c) = if w.r == 0 {
        (1, 0)
    } else {
        let x = Rational::new(w.d as i128, w.r as i128);
        let num = i64::try_from(*x.numer()).map_err(|_| Error::Overflow)?;
        let den = i64::try_from(*x.denom()).map_err(|_| Error::Overflow)?;
        (num, den)
    };
    let cusp = if c == 0 {
        Cusp::Infinity
    } else {
        Cusp::Finite(Rational::new(a as i128, c as i128))
    };

    let ni = i64::try_from(n).map_err(|_| Error::Overflow)?;
    let root = ni.sqrt();
    let m = if root * root == ni { root } else { 1 };
    // A T^h A^{-1} = (1 - a c h, a^2 h; -c^2 h, 1 + a c h), with h = k / m.
    let generator = (1..=ni.checked_mul(m).ok_or(Error::Overflow)?)
        .find_map(|k| {
            // integer model m * A T^h A^{-1}
            let ac = a.checked_mul(c)?.checked_mul(k)?;
            let a2 = a.checked_mul(a)?.checked_mul(k)?;
            let c2 = c.checked_mul(c)?.checked_mul(k)?;
            if k % m == 0 {
                let unit = FrickeElement::new(n, m - ac, a2, -c2, m + ac, DetTag::Unit);
                if let Ok(g) = unit {
                    return Some(g);
                }
            }
            if m > 1 {
                if let Ok(g) = FrickeElement::new(n, m - ac, a2, -c2, m + ac, DetTag::Fricke) {
                    return Some(g);
                }
            }
            None
        })
        .ok_or(Error::Consistency("no parabolic element stabilizes the cusp"))?;

    match generator.fixed_point()? {
        FixedLocus::Point(HPoint::Cusp(fixed)) if fixed == cusp => {}
        _ => return Err(Error::Consistency("stabilizer generator does not fix the cusp")),
    }
    if induced_isometry(&generator)?.apply(w)? != *w {
        return Err(Error::Consistency("stabilizer generator does not fix w"));
    }
    let kernel = if n == 1 {
        KernelLabel::TorelliAndIota
    } else {
        KernelLabel::Torelli
    };
    Ok(CuspStabilizer {
        cusp,
        generator,
        kernel,
    })
}
