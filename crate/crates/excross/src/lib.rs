//! Exact computational algebra for partial actions of finite groups, actions
//! of the universal inverse semigroup S(G), and the associated algebraic
//! partial crossed products.
//!
//! The crate constructs, over exact rationals:
//!
//! - finite groups as validated Cayley tables ([`group`]);
//! - S(G) in canonical standard form, with an independent word-rewriting
//!   oracle for its defining relations ([`semigroup`], [`oracle`]);
//! - partial actions of G on finite sets and finite-dimensional algebras, the
//!   induced actions of S(G), and the bijection between the two ([`action`]);
//! - the crossed products A⋊ᵃ_αG and L = A⋊-style sums over S(G), the ideal N,
//!   the quotient L/N, the isomorphism between the two crossed products, and
//!   covariant representations with π×ν ([`crossed`]);
//! - the exact linear algebra substrate ([`linalg`]).
//!
//! Identities are verified exhaustively at small scale rather than assumed;
//! validators return [`report::Report`] values with witnesses for failures.

pub mod action;
pub mod crossed;
pub mod fixtures;
pub mod group;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod semigroup;

pub use group::{GroupTable, PartialBijection};
pub use linalg::{Matrix, Rat, StructureAlgebra, Subspace};
pub use semigroup::SElem;
