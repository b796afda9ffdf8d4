//! Exact computations around classical r-matrices for type-A Lie algebras.
//!
//! The crate covers triangular r-matrices and the moduli set of tensors
//! `x ∈ (∧²m)^u` with `CYB(x) = 0` in `∧³(g/u)`, Lagrangian subalgebras of the
//! dual-number double `g[ε]`, twists of triangular Lie bialgebras, and the
//! projection of a dynamical r-matrix value at zero onto a complementary
//! subalgebra. Everything is computed over `BigRational`; nothing here uses
//! floating point.
//!
//! Module map:
//!
//! * [`algebra`]: `sl(n)` in its matrix realization, bracket table, trace form,
//!   root data and canonical (RREF) subspaces.
//! * [`tensor`]: sparse `g⊗g` and `g⊗g⊗g` calculus (CYB, mixed bracket, Alt,
//!   leg projections, conjugation).
//! * [`reductive`]: reductive root subsets and `(N, U)`-regular Cartan elements.
//! * [`rmatrix`]: `x_{N,h}`, membership in `(∧²m)^u` and in the moduli set,
//!   coefficient classification.
//! * [`dualnum`]: `g[ε]`, `Pairs(g) ↔ Lagr(g)`, base-point Lagrangians of
//!   bivectors.
//! * [`twist`]: cobrackets `dρ` and the two forms of the twist equation.
//! * [`dynconst`]: dynamical-to-constant projection and the `sl(n)` parabolic
//!   example.
//! * [`json`]: the stable JSON formats used by the `dynr` CLI.

pub mod algebra;
pub mod dualnum;
pub mod dynconst;
pub mod error;
pub mod json;
pub mod linalg;
pub mod reductive;
pub mod rmatrix;
pub mod tensor;
pub mod twist;

pub use algebra::{LieAlgebra, LieElement, Matrix, Rational, Root, Subspace};
pub use error::{Error, Result};
pub use reductive::{CartanElement, RootSubset};
pub use tensor::{Tensor2, Tensor3};
