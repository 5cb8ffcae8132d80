//! Exact faithful representations of nilpotent Lie algebras.
//!
//! Given a nilpotent Lie algebra `g` by rational structure constants, this
//! crate builds the group `G = (g, ∗)` under the truncated
//! Baker–Campbell–Hausdorff product, the regular representation
//! `(λ(x)φ)(y) = φ((−x) ∗ y)` on polynomial functions, and its derivative
//! `λ̇`. The space `F_G` spanned by the translates of the coordinate
//! functionals carries a faithful representation in which every `λ̇_G(x)`
//! is nilpotent and every `λ_G(x)` unipotent, both of index at most
//! `2^(N−1)·N + 1` where `g^(N) ≠ 0 = g^(N+1)`.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and every
//! identity is checked for equality, never within a tolerance.
//!
//! ```
//! use nilrep::corpus::{self, CorpusSpec};
//! use nilrep::rep::Representation;
//!
//! let g = corpus::make(&CorpusSpec::Heisenberg(3)).unwrap();
//! let rep = Representation::build(&g).unwrap();
//! assert_eq!(rep.dim(), 4);
//! assert_eq!(rep.bound(), 5);
//! assert!(rep.faithfulness_check().is_faithful);
//! ```

pub mod bch;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod report;
pub mod sample;
pub mod verify;

pub use bch::{bch_derivative_coeffs, bch_product, left_translation};
pub use error::{Error, Result};
pub use lie::{LieAlgebra, LieElement};
pub use linalg::Matrix;
pub use poly::{lie_derivative, translate_poly, PolyFun, PolyMap};
pub use rational::Rational;
pub use rep::{RepSpace, Representation};
