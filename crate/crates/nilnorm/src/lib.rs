//! Normal forms of nilpotent orbits in simple Lie algebras.
//!
//! Every non-zero nilpotent element of a simple Lie algebra decomposes into a
//! sum of commuting irreducible nilpotents living in commuting semisimple
//! subalgebras, with weakly decreasing intrinsic depths. This crate computes
//! that decomposition together with the depth, reduced depth and type
//! (semisimple / nilpotent / mixed) of the orbit, the bush it belongs to, and
//! the invariants (order, characteristic polynomial) of the Weyl-group
//! conjugacy class attached to it.
//!
//! * classical types `sl_N`, `sp_N`, `so_N`: computed from the partition
//!   labelling the orbit ([`classical`]),
//! * exceptional types `G2 F4 E6 E7 E8`: served from an embedded catalogue of
//!   all non-zero orbits ([`exceptional`]),
//! * and everything is cross-checked by two independent exact-arithmetic
//!   engines: a Chevalley-basis model of the algebra itself ([`liealg`]) and
//!   a matrix model of the classical algebras ([`matrix_oracle`]).
//!
//! All arithmetic is exact (integers and rationals); there is no floating
//! point anywhere in this crate. The crate is `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classical;
pub mod error;
pub mod exceptional;
pub mod liealg;
pub mod matrix_oracle;
pub mod poly;
pub mod rootdata;
pub mod weyl;

pub use classical::{
    ClassicalAlgebra, ClassicalSeries, NormalForm, NormalFormComponent, Partition,
};
pub use error::Error;
pub use rootdata::{RootSystem, SimpleFamily, SimpleType};
