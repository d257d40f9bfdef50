//! Exact-arithmetic structure theory of left-symmetric (pre-Lie) algebras.
//!
//! The crate decides, over arbitrary-precision rationals, every identity of
//! the theory connecting left-symmetric algebras to symplectic Lie algebra
//! decompositions: bimodules and matched pairs, left-symmetric bialgebras,
//! parakahler Lie algebras and phase spaces, the S-equation and the classical
//! Yang-Baxter equation, and the O-operator constructions tying the two
//! coboundary theories together. Every check is exact (no floats anywhere)
//! and every construction is a deterministic structure-constant computation.
//!
//! Module map:
//! - [`scalar`], [`matrix`], [`tensor`]: the arithmetic substrate.
//! - [`algebra`]: structure-constant tables and pointwise identity checkers.
//! - [`form`]: bilinear-form conditions (2-cocycles, trace forms, Hessian data).
//! - [`rep`]: bimodules, Lie representations, 1-cocycles, matched pairs.
//! - [`constructions`]: realizations of left-symmetric algebras from other data.
//! - [`bialgebra`]: left-symmetric bialgebras, parakahler data, Manin triples.
//! - [`yangbaxter`]: the coboundary theory, S-equation, CYBE, O-operators.
//! - [`fixtures`]: the small named algebras used by tests and docs.
//!
//! ```
//! use lsab_core::fixtures;
//! use lsab_core::yangbaxter::{canonical_symmetric_solution, check_s_equation};
//!
//! // the canonical symmetric solution on A ⋉ A* exists for every
//! // left-symmetric algebra
//! let a = fixtures::a2();
//! let sol = canonical_symmetric_solution(&a).unwrap();
//! assert!(check_s_equation(&sol.ambient, &sol.r).passes());
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod bialgebra;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod form;
pub mod matrix;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod yangbaxter;

pub use algebra::{Algebra, AlgebraKind};
pub use error::{Error, Result};
pub use form::BilinearForm;
pub use matrix::Matrix;
pub use rep::{Bimodule, CocycleMap, Representation};
pub use report::{CheckReport, Violation};
pub use scalar::Scalar;
pub use tensor::{Tensor2, Tensor3};
