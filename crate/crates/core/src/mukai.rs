//! The lattice `N(X) = Z^3` of Mukai vectors `(r, d, s)` with the degree-`2n`
//! pairing `(r1, d1, s1).(r2, d2, s2) = 2n d1 d2 - r1 s2 - r2 s1`, and the
//! isometries induced by elements of `Γ_0^+(n)`.
//!
//! An element of `Γ_0^+(n)` determines its isometry only up to sign.
//! [`induced_isometry`] returns the determinant-one representative; the
//! reflection along a `(-2)`-vector is the negative of the isometry induced by
//! the corresponding Fricke involution.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fricke_group::{DetTag, FrickeElement, TraceKind};
use crate::surd::{QuadSurd, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MukaiVector {
    pub r: i64,
    pub d: i64,
    pub s: i64,
    n: u64,
}

impl MukaiVector {
    pub fn new(n: u64, r: i64, d: i64, s: i64) -> Self {
        MukaiVector { r, d, s, n }
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn coords(&self) -> [i64; 3] {
        [self.r, self.d, self.s]
    }

    pub fn is_zero(&self) -> bool {
        self.coords() == [0, 0, 0]
    }

    /// `2 (n d^2 - r s)`.
    pub fn square(&self) -> i128 {
        let (r, d, s) = (self.r as i128, self.d as i128, self.s as i128);
        2 * (self.n as i128 * d * d - r * s)
    }

    pub fn content(&self) -> i64 {
        self.r.gcd(&self.d).gcd(&self.s)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Sign flipped so that the first nonzero coordinate is positive.
    pub fn canonical(&self) -> Self {
        match self.coords().into_iter().find(|x| *x != 0) {
            Some(x) if x < 0 => MukaiVector::new(self.n, -self.r, -self.d, -self.s),
            _ => *self,
        }
    }

    /// Divided by its content, with canonical sign. The zero vector is fixed.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g == 0 {
            return *self;
        }
        MukaiVector::new(self.n, self.r / g, self.d / g, self.s / g).canonical()
    }
}

pub fn pairing(u: &MukaiVector, v: &MukaiVector) -> Result<i128> {
    if u.n != v.n {
        return Err(Error::LevelMismatch(u.n, v.n));
    }
    let n = u.n as i128;
    let [r1, d1, s1] = u.coords().map(i128::from);
    let [r2, d2, s2] = v.coords().map(i128::from);
    Ok(2 * n * d1 * d2 - r1 * s2 - r2 * s1)
}

type Matrix = [[i128; 3]; 3];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[0i128; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn transpose(a: &Matrix) -> Matrix {
    let mut out = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// Gram matrix of the pairing in the basis `(r, d, s)`.
pub fn gram(n: u64) -> [[i128; 3]; 3] {
    [[0, 0, -1], [0, 2 * n as i128, 0], [-1, 0, 0]]
}

/// An integral isometry of `N(X)`, acting on column vectors `(r, d, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeIsometry {
    n: u64,
    m: Matrix,
}

impl LatticeIsometry {
    /// Checks `M^T G M = G` and `det M = ±1`.
    pub fn new(n: u64, m: [[i128; 3]; 3]) -> Result<Self> {
        let iso = LatticeIsometry { n, m };
        if !iso.preserves_pairing() || iso.det().abs() != 1 {
            return Err(Error::NotIsometry);
        }
        Ok(iso)
    }

    pub fn identity(n: u64) -> Self {
        LatticeIsometry {
            n,
            m: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        }
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn matrix(&self) -> &[[i128; 3]; 3] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn det(&self) -> i128 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn preserves_pairing(&self) -> bool {
        let g = gram(self.n);
        mat_mul(&transpose(&self.m), &mat_mul(&g, &self.m)) == g
    }

    /// The other sign representative.
    pub fn neg(&self) -> Self {
        LatticeIsometry {
            n: self.n,
            m: self.m.map(|row| row.map(|x| -x)),
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LevelMismatch(self.n, other.n));
        }
        Ok(LatticeIsometry {
            n: self.n,
            m: mat_mul(&self.m, &other.m),
        })
    }

    /// Equality in `O(N(X)) / {±1}`.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    /// `M - I`, as a raw matrix.
    pub fn minus_identity(&self) -> [[i128; 3]; 3] {
        let mut out = self.m;
        for (i, row) in out.iter_mut().enumerate() {
            row[i] -= 1;
        }
        out
    }

    pub fn apply(&self, v: &MukaiVector) -> Result<MukaiVector> {
        if self.n != v.n {
            return Err(Error::LevelMismatch(self.n, v.n));
        }
        let x = v.coords().map(i128::from);
        let img = self.m.map(|row| row[0] * x[0] + row[1] * x[1] + row[2] * x[2]);
        let [r, d, s] = img.map(|c| i64::try_from(c).map_err(|_| Error::Overflow));
        Ok(MukaiVector::new(self.n, r?, d?, s?))
    }
}

/// `M^k` for a raw 3x3 matrix; used for nilpotency checks.
pub fn raw_matrix_power(m: &[[i128; 3]; 3], k: u32) -> [[i128; 3]; 3] {
    let mut acc = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..k {
        acc = mat_mul(&acc, m);
    }
    acc
}

/// The determinant-one isometry inducing `g` on `H`.
///
/// With real entries `(α β; γ δ)` it is
/// `[[δ², 2γδ, γ²/n], [βδ, αδ + βγ, αγ/n], [nβ², 2nαβ, α²]]`; for the Fricke
/// coset the integer model supplies a factor `1/n` on every entry.
pub fn induced_isometry(g: &FrickeElement) -> Result<LatticeIsometry> {
    let n = g.level() as i128;
    let [p, q, r, s] = g.entries().map(i128::from);
    let e = g.det() as i128;
    let entries = [
        [(s * s, e), (2 * r * s, e), (r * r, n * e)],
        [(q * s, e), (p * s + q * r, e), (p * r, n * e)],
        [(n * q * q, e), (2 * n * p * q, e), (p * p, e)],
    ];
    let mut m = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (num, den) = entries[i][j];
            if num % den != 0 {
                return Err(Error::Consistency("induced isometry has a non-integral entry"));
            }
            m[i][j] = num / den;
        }
    }
    let iso = LatticeIsometry { n: g.level(), m };
    if iso.det() != 1 || !iso.preserves_pairing() {
        return Err(Error::Consistency("induced matrix is not a determinant-one isometry"));
    }
    Ok(iso)
}

/// `x -> x + (x.δ) δ` for a `(-2)`-vector `δ`.
pub fn reflection(delta: &MukaiVector) -> Result<LatticeIsometry> {
    let sq = delta.square();
    if sq != -2 {
        return Err(Error::NotMinusTwo(sq));
    }
    let n = delta.level() as i128;
    let [r, d, s] = delta.coords().map(i128::from);
    // row vector of x -> x.δ
    let functional = [-s, 2 * n * d, -r];
    let col = [r, d, s];
    let mut m = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = i128::from(i == j) + col[i] * functional[j];
        }
    }
    let iso = LatticeIsometry { n: delta.level(), m };
    debug_assert!(iso.preserves_pairing() && iso.det() == -1);
    Ok(iso)
}

/// Spectral data of a nontrivial induced isometry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigenData {
    pub trace_squared: i128,
    /// Primitive generator of the 1-eigenspace, canonical sign.
    pub eigen_one_vector: MukaiVector,
    /// Square of the real eigenvector `(2γ, α - δ, -2nβ)`, equal to `2n(t² - 4)`.
    pub eigen_one_square: i128,
    /// `μ± = (t² - 2 ± sqrt(t²(t² - 4))) / 2`.
    pub other_eigenvalues: [QuadSurd; 2],
    /// A single Jordan block of size three (parabolic case).
    pub jordan_block_3: bool,
    pub spectral_radius: QuadSurd,
}

pub fn eigen_data(m: &LatticeIsometry, g: &FrickeElement) -> Result<EigenData> {
    if g.is_identity() {
        return Err(Error::Identity);
    }
    let induced = induced_isometry(g)?;
    if !induced.eq_up_to_sign(m) {
        return Err(Error::IsometryMismatch);
    }
    let n = g.level();
    let [p, q, r, s] = g.entries();
    let raw = MukaiVector::new(
        n,
        2 * r,
        p - s,
        (2 * n as i64).checked_mul(q).ok_or(Error::Overflow)?.checked_neg().ok_or(Error::Overflow)?,
    );
    // For the Fricke coset the raw vector is sqrt(n) times the real one.
    let eigen_one_square = raw.square() / g.det() as i128;
    let v = raw.primitive();
    if induced.apply(&v)? != v {
        return Err(Error::Consistency("eigenvector is not fixed by the induced isometry"));
    }

    let class = g.trace_class();
    let t2 = class.trace_squared;
    let half = Rational::new(1, 2);
    let centre = QuadSurd::from_rational(Rational::from_integer(t2 - 2) * half);
    let root = QuadSurd::sqrt_of_product(t2, t2 - 4);
    let offset = &root * &QuadSurd::from_rational(half);
    let mu_plus = &centre + &offset;
    let mu_minus = &centre - &offset;
    let spectral_radius = match class.kind {
        TraceKind::Hyperbolic => mu_plus.clone(),
        _ => QuadSurd::from_integer(1),
    };
    let jordan_block_3 = class.kind == TraceKind::Parabolic && !induced.is_identity();

    Ok(EigenData {
        trace_squared: t2,
        eigen_one_vector: v,
        eigen_one_square,
        other_eigenvalues: [mu_plus, mu_minus],
        jordan_block_3,
        spectral_radius,
    })
}

/// `det · disc` of the induced isometry: `+1` on `Γ_0(n)`, `-1` on the Fricke
/// coset.
///
/// The discriminant group `N^*/N ≅ Z/2n` is generated by `(0, 1/(2n), 0)`,
/// which the isometry multiplies by its middle diagonal entry.
pub fn det_disc(g: &FrickeElement) -> Result<i8> {
    let n = g.level();
    if n < 2 {
        return Err(Error::LevelTooSmall);
    }
    let two_n = 2 * n as i128;
    let sign_of = |iso: &LatticeIsometry| -> Result<i8> {
        let m = iso.matrix();
        if m[0][1] % two_n != 0 || m[2][1] % two_n != 0 {
            return Err(Error::Consistency("isometry does not preserve the discriminant generator line"));
        }
        let disc = match m[1][1].rem_euclid(two_n) {
            1 => 1,
            x if x == two_n - 1 => -1,
            _ => return Err(Error::Consistency("discriminant action is not ±1")),
        };
        Ok(disc * iso.det() as i8)
    };
    let primary = induced_isometry(g)?;
    let value = sign_of(&primary)?;
    if sign_of(&primary.neg())? != value {
        return Err(Error::Consistency("det·disc differs between sign representatives"));
    }
    let expected = match g.tag() {
        DetTag::Unit => 1,
        DetTag::Fricke => -1,
    };
    if value != expected {
        return Err(Error::Consistency("det·disc disagrees with the coset"));
    }
    Ok(value)
}

impl LatticeIsometry {
    /// Whether the entries of `M - I` all vanish after applying `k` times.
    pub fn unipotent_index_at_most(&self, k: u32) -> bool {
        raw_matrix_power(&self.minus_identity(), k)
            .iter()
            .all(|row| row.iter().all(Zero::is_zero))
    }
}
