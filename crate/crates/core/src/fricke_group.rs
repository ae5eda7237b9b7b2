//! Elements of the Fricke group `Γ_0^+(n) = <Γ_0(n), w_n>`.
//!
//! An element of the Fricke coset `Γ_0(n) w_n` has real entries in
//! `n^{-1/2} Z`. It is stored as the integer matrix `sqrt(n) * g`, which has
//! determinant `n` and entries `(p q; r s)` with `n | p, r, s`, tagged
//! [`DetTag::Fricke`]. Elements of `Γ_0(n)` carry [`DetTag::Unit`]. Matrices
//! are projective: the first nonzero entry of `(p, q, r, s)` is positive.
//!
//! For `n = 1` the coset is all of `PSL(2, Z)`, so every element is stored
//! with the unit tag.

use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{exact_sqrt, squarefree_decomposition, QuadraticForm};
use crate::error::{Error, Result};
use crate::mukai::MukaiVector;
use crate::surd::{QuadSurd, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DetTag {
    /// Determinant 1: an element of `Γ_0(n)`.
    Unit,
    /// Determinant `n`: an element of the Fricke coset, scaled by `sqrt(n)`.
    Fricke,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrickeElement {
    n: u64,
    p: i64,
    q: i64,
    r: i64,
    s: i64,
    tag: DetTag,
}

fn to_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

fn level(n: u64) -> Result<i128> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    i64::try_from(n).map(i128::from).map_err(|_| Error::Overflow)
}

impl FrickeElement {
    /// Validates and normalizes `(p q; r s)` as an element of `Γ_0^+(n)`.
    ///
    /// A common factor of the entries is divided out before the determinant
    /// is compared with the tag.
    pub fn new(n: u64, p: i64, q: i64, r: i64, s: i64, tag: DetTag) -> Result<Self> {
        Self::from_wide(n, [p as i128, q as i128, r as i128, s as i128], tag)
    }

    fn from_wide(n: u64, entries: [i128; 4], tag: DetTag) -> Result<Self> {
        let ni = level(n)?;
        let content = entries.iter().fold(0i128, |g, &x| g.gcd(&x));
        if content == 0 {
            return Err(Error::DeterminantMismatch {
                expected: if tag == DetTag::Unit { 1 } else { ni },
                found: 0,
            });
        }
        let [p, q, r, s] = entries.map(|x| x / content);
        let det = p * s - q * r;
        let expected = match tag {
            DetTag::Unit => 1,
            DetTag::Fricke => ni,
        };
        if det != expected {
            return Err(Error::DeterminantMismatch {
                expected,
                found: entries[0] * entries[3] - entries[1] * entries[2],
            });
        }
        if r % ni != 0 || (tag == DetTag::Fricke && (p % ni != 0 || s % ni != 0)) {
            return Err(Error::Divisibility { n });
        }
        let sign = [p, q, r, s]
            .into_iter()
            .find(|x| *x != 0)
            .map_or(1, i128::signum);
        let tag = if n == 1 { DetTag::Unit } else { tag };
        Ok(FrickeElement {
            n,
            p: to_i64(sign * p)?,
            q: to_i64(sign * q)?,
            r: to_i64(sign * r)?,
            s: to_i64(sign * s)?,
            tag,
        })
    }

    pub fn identity(n: u64) -> Result<Self> {
        Self::new(n, 1, 0, 0, 1, DetTag::Unit)
    }

    /// `z -> z + 1`.
    pub fn translation(n: u64) -> Result<Self> {
        Self::new(n, 1, 1, 0, 1, DetTag::Unit)
    }

    /// `z -> z / (n z + 1)`.
    pub fn lower_translation(n: u64) -> Result<Self> {
        let ni = to_i64(level(n)?)?;
        Self::new(n, 1, 0, ni, 1, DetTag::Unit)
    }

    /// `w_n : z -> -1 / (n z)`.
    pub fn fricke_involution(n: u64) -> Result<Self> {
        let ni = to_i64(level(n)?)?;
        Self::new(n, 0, -1, ni, 0, DetTag::Fricke)
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.p, self.q, self.r, self.s]
    }

    pub fn tag(&self) -> DetTag {
        self.tag
    }

    /// Determinant of the stored integer matrix: 1 or `n`.
    pub fn det(&self) -> i64 {
        match self.tag {
            DetTag::Unit => 1,
            DetTag::Fricke => self.n as i64,
        }
    }

    /// Whether the element lies in the coset `Γ_0(n) w_n`, which is the whole
    /// group when `n = 1`.
    pub fn in_fricke_coset(&self) -> bool {
        self.n == 1 || self.tag == DetTag::Fricke
    }

    pub fn is_identity(&self) -> bool {
        self.tag == DetTag::Unit && self.entries() == [1, 0, 0, 1]
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LevelMismatch(self.n, other.n));
        }
        let [a, b, c, d] = self.entries().map(i128::from);
        let [e, f, g, h] = other.entries().map(i128::from);
        let mut prod = [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h];
        let mut det = self.det() as i128 * other.det() as i128;
        let ni = self.n as i128;
        if self.tag == DetTag::Fricke && other.tag == DetTag::Fricke {
            if prod.iter().any(|x| x % ni != 0) {
                return Err(Error::Consistency("product of Fricke elements is not divisible by n"));
            }
            prod = prod.map(|x| x / ni);
            det /= ni * ni;
        }
        let tag = match det {
            1 => DetTag::Unit,
            x if x == ni => DetTag::Fricke,
            _ => return Err(Error::Consistency("composite determinant is neither 1 nor n")),
        };
        Self::from_wide(self.n, prod, tag).map_err(|e| match e {
            Error::Overflow => Error::Overflow,
            _ => Error::Consistency("composite is not an element of the Fricke group"),
        })
    }

    pub fn inverse(&self) -> Self {
        let inv = Self::new(self.n, self.s, -self.q, -self.r, self.p, self.tag);
        inv.expect("inverse of a valid element is valid")
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::identity(self.n)?;
        for _ in 0..k {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// `t^2 = (p + s)^2 / det`, the squared trace of the real matrix. Always an
    /// integer.
    pub fn trace_squared(&self) -> i128 {
        let t = self.p as i128 + self.s as i128;
        let t2 = t * t;
        let det = self.det() as i128;
        debug_assert_eq!(t2 % det, 0);
        t2 / det
    }

    pub fn trace_class(&self) -> TraceClass {
        let trace_squared = self.trace_squared();
        let kind = match trace_squared.cmp(&4) {
            Ordering::Less => TraceKind::Elliptic {
                order: match trace_squared {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    _ => 6,
                },
            },
            Ordering::Equal => TraceKind::Parabolic,
            Ordering::Greater => TraceKind::Hyperbolic,
        };
        TraceClass { kind, trace_squared }
    }

    /// Discriminant of the fixed-point equation `r z^2 + (s - p) z - q = 0`.
    fn fixed_discriminant(&self) -> i128 {
        let t = self.p as i128 + self.s as i128;
        t * t - 4 * self.det() as i128
    }

    /// Fixed points in `H ∪ P^1(R)`.
    pub fn fixed_point(&self) -> Result<FixedLocus> {
        if self.is_identity() {
            return Err(Error::Identity);
        }
        let (p, r, s) = (self.p as i128, self.r as i128, self.s as i128);
        let disc = self.fixed_discriminant();
        if r == 0 {
            // p s = det forces p = s for unit elements; a Fricke element with
            // r = 0 has n | p, s and p s = n, so n = 1.
            return if disc == 0 {
                Ok(FixedLocus::Point(HPoint::Cusp(Cusp::Infinity)))
            } else {
                Err(Error::Consistency("element with r = 0 is not parabolic"))
            };
        }
        let re = Rational::new(p - s, 2 * r);
        match disc.cmp(&0) {
            Ordering::Less => {
                let (k, m) = squarefree_decomposition((-disc) as u128);
                Ok(FixedLocus::Point(HPoint::Interior {
                    re,
                    im_coeff: Rational::new(k as i128, 2 * r.abs()),
                    im_radicand: m as u64,
                }))
            }
            Ordering::Equal => Ok(FixedLocus::Point(HPoint::Cusp(Cusp::Finite(re)))),
            Ordering::Greater => {
                let root = QuadSurd::sqrt(Rational::from_integer(disc));
                let half = QuadSurd::from_rational(Rational::new(1, 2 * r));
                let base = QuadSurd::from_integer(p - s);
                let plus = &(&base + &root) * &half;
                let minus = &(&base - &root) * &half;
                let (lo, hi) = if r > 0 { (minus, plus) } else { (plus, minus) };
                Ok(FixedLocus::BoundaryPair(lo, hi))
            }
        }
    }

    /// Möbius action on a cusp.
    pub fn act_on_cusp(&self, cusp: &Cusp) -> Cusp {
        let (p, q, r, s) = (self.p as i128, self.q as i128, self.r as i128, self.s as i128);
        match cusp {
            Cusp::Infinity => {
                if r == 0 {
                    Cusp::Infinity
                } else {
                    Cusp::Finite(Rational::new(p, r))
                }
            }
            Cusp::Finite(x) => {
                let num = Rational::from_integer(p) * x + Rational::from_integer(q);
                let den = Rational::from_integer(r) * x + Rational::from_integer(s);
                if den.is_zero() {
                    Cusp::Infinity
                } else {
                    Cusp::Finite(num / den)
                }
            }
        }
    }

    /// Möbius action on a point of a quadratic field, `None` at a pole.
    pub fn act_on_surd(&self, z: &QuadSurd) -> Option<QuadSurd> {
        let [p, q, r, s] = self.entries().map(|x| QuadSurd::from_integer(x as i128));
        let num = &(&p * z) + &q;
        let den = &(&r * z) + &s;
        if den.norm().is_zero() {
            return None;
        }
        Some(&num / &den)
    }

    /// Möbius action on an interior point or cusp.
    pub fn act_on_point(&self, point: &HPoint) -> HPoint {
        match point {
            HPoint::Cusp(c) => HPoint::Cusp(self.act_on_cusp(c)),
            interior => {
                let image = self
                    .act_on_surd(&interior.to_surd().expect("interior point"))
                    .expect("no pole in the upper half plane");
                HPoint::from_surd(&image).expect("upper half plane is preserved")
            }
        }
    }
}

impl core::fmt::Display for FrickeElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let tag = match self.tag {
            DetTag::Unit => "1",
            DetTag::Fricke => "n",
        };
        write!(
            f,
            "[{} {}; {} {}] (n={}, det={})",
            self.p, self.q, self.r, self.s, self.n, tag
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceKind {
    Elliptic { order: u32 },
    Parabolic,
    Hyperbolic,
}

/// Trace classification. The identity has `t^2 = 4` and is reported as
/// parabolic; callers that care check [`FrickeElement::is_identity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceClass {
    pub kind: TraceKind,
    pub trace_squared: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cusp {
    Infinity,
    Finite(Rational),
}

/// A point of `H ∪ P^1(Q)`: a cusp or `re + im_coeff * sqrt(im_radicand) * i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HPoint {
    Cusp(Cusp),
    Interior {
        re: Rational,
        im_coeff: Rational,
        /// Squarefree.
        im_radicand: u64,
    },
}

impl HPoint {
    /// The interior point as an element of `Q(sqrt(-m))`.
    pub fn to_surd(&self) -> Option<QuadSurd> {
        match self {
            HPoint::Interior {
                re,
                im_coeff,
                im_radicand,
            } => Some(QuadSurd::new(*re, *im_coeff, -(*im_radicand as i64))),
            HPoint::Cusp(_) => None,
        }
    }

    /// Inverse of [`HPoint::to_surd`]; `None` unless the value lies in `H`.
    pub fn from_surd(z: &QuadSurd) -> Option<Self> {
        if z.is_real() || z.coeff().is_negative() {
            return None;
        }
        Some(HPoint::Interior {
            re: z.rational_part(),
            im_coeff: z.coeff(),
            im_radicand: z.radicand().unsigned_abs(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FixedLocus {
    /// The unique fixed point of an elliptic (interior) or parabolic (cusp)
    /// element.
    Point(HPoint),
    /// The two boundary fixed points of a hyperbolic element, in increasing
    /// order.
    BoundaryPair(QuadSurd, QuadSurd),
}

/// The Fricke involution attached to a `(-2)`-vector `δ = (r, d, s)`:
/// `(n d, -s; n r, -n d)` in the integer model.
pub fn involution_from_vector(delta: &MukaiVector) -> Result<FrickeElement> {
    let sq = delta.square();
    if sq != -2 {
        return Err(Error::NotMinusTwo(sq));
    }
    let n = delta.level();
    let ni = level(n)?;
    let (r, d, s) = (delta.r as i128, delta.d as i128, delta.s as i128);
    FrickeElement::from_wide(n, [ni * d, -s, ni * r, -ni * d], DetTag::Fricke)
}

/// The `(-2)`-vector `(r/n, p/n, -q)` of a trace-zero element of the Fricke
/// coset, with its first nonzero coordinate positive.
pub fn vector_from_involution(g: &FrickeElement) -> Result<MukaiVector> {
    if !g.in_fricke_coset() || g.p as i128 + g.s as i128 != 0 {
        return Err(Error::NotFrickeInvolution);
    }
    let ni = g.n as i64;
    let v = MukaiVector::new(g.n, g.r / ni, g.p / ni, -g.q).canonical();
    if v.square() != -2 {
        return Err(Error::Consistency("involution vector is not a (-2)-vector"));
    }
    Ok(v)
}

/// Witness that the fixed point of an elliptic element is a `(-2)`-point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinusTwoCertificate {
    pub lambda: Rational,
    pub delta: MukaiVector,
}

/// Decides whether the fixed point of an elliptic element is a `(-2)`-point.
///
/// The fixed point is the root in `H` of the primitive form `(a, b, c)`
/// proportional to `(r, s - p, -q)`. It is a `(-2)`-point iff some
/// `(-2)`-vector `δ` has fixed-point form `(n δ_r, -2n δ_d, δ_s)` equal to
/// `λ (a, b, c)`, which forces `λ^2 = 4n / |disc(a, b, c)|`.
pub fn is_minus_two_point(g: &FrickeElement) -> Result<Option<MinusTwoCertificate>> {
    if !matches!(g.trace_class().kind, TraceKind::Elliptic { .. }) {
        return Err(Error::NotElliptic);
    }
    let raw = QuadraticForm::new(g.r, g.s - g.p, -g.q);
    let k = raw.content();
    let form = QuadraticForm::new(raw.a / k, raw.b / k, raw.c / k);
    let abs_disc = -form.discriminant();
    debug_assert!(abs_disc > 0);
    let ni = g.n as i128;
    let lambda_sq = Rational::new(4 * ni, abs_disc);
    let lambda = match (exact_sqrt(*lambda_sq.numer()), exact_sqrt(*lambda_sq.denom())) {
        (Some(num), Some(den)) => Rational::new(num, den),
        _ => return Ok(None),
    };
    let coords = [
        lambda * Rational::new(form.a as i128, ni),
        -lambda * Rational::new(form.b as i128, 2 * ni),
        lambda * Rational::from_integer(form.c as i128),
    ];
    if coords.iter().any(|x| !x.is_integer()) {
        return Ok(None);
    }
    let [r, d, s] = coords.map(|x| to_i64(x.to_integer()));
    let delta = MukaiVector::new(g.n, r?, d?, s?).canonical();
    if delta.square() != -2 {
        return Err(Error::Consistency("certificate vector is not a (-2)-vector"));
    }
    Ok(Some(MinusTwoCertificate { lambda, delta }))
}
