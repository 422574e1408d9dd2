//! Permutation codes, set partitions, and the Bell-counted permutation
//! classes they connect.
//!
//! The crate revolves around a pair of bijections between subexceedant
//! functions and permutations, built as products of transpositions
//! ([`codes::phi`], [`codes::phi_tilde`]). Restricted growth words — the
//! subexceedant functions whose prefix images are intervals — are exactly
//! the canonical forms of set partitions ([`partitions`]), and the
//! permutations whose code is a restricted growth word form a class counted
//! by the Bell numbers ([`bp2`]), with weak exceedances distributed like
//! block counts. The [`bijections`] module maps that class onto set
//! partitions and onto the older cycle-based Bell class, and [`oracle`]
//! re-derives every one of these statements by brute force at small sizes.
//!
//! All values are immutable after construction and all operations are pure
//! functions; everything can be shared freely across threads.

pub mod bijections;
pub mod bp2;
pub mod codes;
mod error;
pub mod oracle;
pub mod partitions;
pub mod perm;
mod text;

pub use codes::SubexceedantFunction;
pub use error::Error;
pub use partitions::{Rgf, SetPartition};
pub use perm::{CycleDecomposition, Permutation, WeakExcProfile};
