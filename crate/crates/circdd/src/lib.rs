//! Exact arithmetic for the largest-known circulant graphs of degree 10 and 11.
//!
//! The crate reconstructs the quintic order/generator polynomial families,
//! verifies claimed diameters by breadth-first search, checks the
//! lattice-theoretic existence constructions (determinants, cyclic quotients,
//! Lee-sphere coverings), evaluates the Abelian-Cayley bounds, and reproduces
//! small-diameter extremality by pruned exhaustive search.
//!
//! All arithmetic is exact: group arithmetic in 64 bits with checked
//! operations, polynomial and lattice work in 128-bit intermediates, bound
//! coefficients as reduced rationals. Nothing is ever rounded or wrapped.

pub mod arith;
pub mod bounds;
pub mod circulant;
pub mod engine;
pub mod families;
pub mod lattice;
pub mod search;

pub use circulant::{CirculantGraph, DistanceProfile, GeneratingSet};
pub use families::{Tables, VerificationReport};
