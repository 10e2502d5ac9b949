//! Exact finite fuzzy topologies and fuzzy boundary operators.
//!
//! Membership degrees live on a grid `k/d` with one denominator per space, so
//! meet (min), join (max) and complement (`1 - x`) never leave the grid and every
//! computation in this crate is exact. Topologies are finite families of fuzzy
//! sets closed under pairwise meet and join; on a finite family this is the same
//! as closure under arbitrary joins, which is the only place the finite setting
//! differs from the general definition.
//!
//! On top of the closure and interior operators the crate provides four boundary
//! operators ([`boundary`]), a registry of checkable identities about them
//! ([`claims`]) and a search engine that verifies those identities on
//! enumerated or sampled spaces, or produces shrunk counterexamples ([`search`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boundary;
pub mod claims;
mod error;
pub mod lattice;
pub mod search;
pub mod topology;

pub use boundary::BoundaryKind;
pub use claims::{Claim, ClaimKind, Outcome};
pub use error::{Error, Result};
pub use lattice::{Carrier, Degree, FuzzySet};
pub use topology::{FuzzyTopology, Violation};
