//! Exact arithmetic attached to a K3 surface of Picard number one and degree `2n`.
//!
//! Everything is computed from the level `n`:
//!
//! - [`arith`]: factorization, the Kronecker symbol and class numbers of
//!   negative discriminants.
//! - [`gamma0`]: index, elliptic points, cusps and genus of `X_0(n)`.
//! - [`fricke`]: the same invariants for the Fricke quotient `X_0^+(n)`,
//!   together with the census of `(-2)`-points.
//! - [`fricke_group`]: elements of the Fricke group `Γ_0^+(n)`, their fixed
//!   points, and the dictionary between involutions and `(-2)`-vectors.
//! - [`mukai`]: the lattice `N(X) = Z^3` with the degree-`2n` Mukai pairing and
//!   the isometries induced by Fricke group elements.
//! - [`classify`]: the four dynamical types of Fricke group elements and cusp
//!   stabilizers.
//! - [`counting`]: conjugacy-class counts of finite subgroups and free product
//!   presentations.
//! - [`cubic`]: existence of associated cubic fourfolds.
//!
//! The crate is `no_std` and only needs `alloc`. No floating point is used;
//! irrational quantities are carried as exact quadratic surds ([`QuadSurd`]).

#![no_std]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod counting;
pub mod cubic;
mod error;
pub mod fricke;
pub mod fricke_group;
pub mod gamma0;
pub mod mukai;
mod surd;

pub use error::{Error, Result};
pub use surd::{QuadSurd, Rational};

pub use arith::{class_number, factorize, kronecker, Factorization, QuadraticForm};
pub use classify::{classify_element, cusp_stabilizer, CuspStabilizer, KernelLabel, PolychotomyResult};
pub use counting::{
    count_involution_classes, count_subgroups_mod2, presentation, FactorKind, FiniteShape,
    FreeProductPresentation, PresentationKind, SubgroupCount,
};
pub use cubic::{
    has_associated_cubic, hassett_conditions, CubicSpecialCase, CubicVerdict, HassettConditions,
};
pub use fricke::{fricke_invariants, xi, FrickeTable, MinusTwoCensus};
pub use fricke_group::{
    involution_from_vector, is_minus_two_point, vector_from_involution, Cusp, DetTag,
    FixedLocus, FrickeElement, HPoint, MinusTwoCertificate, TraceClass, TraceKind,
};
pub use gamma0::{elliptic_congruence_oracle, gamma0_invariants, InvariantTable};
pub use mukai::{
    det_disc, eigen_data, gram, induced_isometry, pairing, reflection, EigenData, LatticeIsometry,
    MukaiVector,
};
