//! Regular homotopy classification of immersions with trivial normal bundle
//! of closed oriented 3-manifolds into ℝ⁵.
//!
//! A 3-manifold enters as the linking matrix of a framed link. From it the
//! crate derives H₁, the group Γ₂ of elements of order at most two, spin
//! structures as characteristic sublinks, and the Wu coset of a pair of
//! spin structures. The integer invariant `i` is computed from signature,
//! cusp, triple point and linking bookkeeping of a singular Seifert surface,
//! and the pair `(wu, i)` is the complete invariant.

pub mod cli;
pub mod embeddings;
pub mod error;
pub mod fixtures;
pub mod intlinalg;
pub mod invariants;
pub mod spin;
pub mod surgery;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
