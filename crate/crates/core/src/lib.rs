//! Exact equivariant cohomology of weighted moduli spaces of pointed rational
//! curves.
//!
//! The crate computes the `S_k × S_{n-k}`-equivariant Poincaré polynomials
//! `E^n_{k,l}(q)` of the moduli spaces of rational curves with `k` marked
//! points of weight one and `n - k` points of weight `1/l`, by the blow-up
//! recursion that connects them to the symmetric GIT quotient of `(P^1)^n`.
//! At `k = 0, l = 1` this is the full `S_n`-character of `H^*(M̄_{0,n})`.

pub mod bigraded;
pub mod cache;
pub mod characters;
pub mod error;
pub mod golden;
pub mod length;
pub mod moduli;
pub mod oracle;
pub mod partition;
pub mod qpoly;
pub mod render;
pub mod serial;
pub mod symfunc;
pub mod verify;

pub use bigraded::BiSymFunc;
pub use error::{Error, Result};
pub use moduli::Engine;
pub use partition::{partitions_of, Partition};
pub use qpoly::QPoly;
pub use symfunc::{Basis, SymFunc};
