//! Subgroup lattices of small symmetric and alternating groups, their tables
//! of marks, and the integer sequences derived from them.
//!
//! The crate is organized around a pipeline:
//!
//! * [`perm`] / [`group`] — permutations and fully materialized permutation
//!   groups (desk scale, orders up to a configurable budget).
//! * [`enumerate`] — exhaustive subgroup enumeration and conjugacy-class
//!   fusion, producing the canonical [`enumerate::ClassTable`].
//! * [`properties`] — abelian / cyclic / nilpotent / solvable / supersolvable
//!   classification and subgroup-order statistics.
//! * [`marks`] — the table of marks and everything read off it: containment
//!   and incidence matrices, subgroup totals, Hasse-edge counts, maximal
//!   property-P extraction. Includes the `tom`-text interchange format in
//!   [`tomtext`], which admits externally computed tables for degrees beyond
//!   the enumeration budget.
//! * [`transforms`] — Euler transform, inverse Euler transform, and the
//!   number-theoretic helpers they need.
//! * [`connectivity`] — connected subgroups, direct-product decomposition,
//!   and connected partitions.
//!
//! All group objects are immutable after construction and safe to share
//! across threads. With the `parallel` feature (on by default) the heavy
//! inner loops run on rayon; without it every code path falls back to the
//! identical sequential implementation.

pub mod arith;
pub mod cache;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod marks;
pub mod perm;
pub mod properties;
pub mod seqio;
pub mod tomtext;
pub mod transforms;

mod element;
mod par;

pub use error::Error;
pub use group::Group;
pub use perm::Perm;
pub use transforms::IntSeq;

/// Crate result type.
pub type Result<T> = std::result::Result<T, Error>;
