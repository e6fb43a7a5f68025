//! Exact symbolic computation in the groups `G = <x, y | x^m = y^n>` (m >= n >= 2).
//!
//! The crate provides:
//!
//! - [`words`]: abstract words over the generating sets `{x, y}`, `{s1, s2}`
//!   and `{a, b}`, with parsing, free reduction, alphabet translation and the
//!   twist/detwist transforms between ordered generating sets;
//! - [`group`]: canonical normal forms through the central extension
//!   `1 -> Z -> G -> Z_m * Z_n -> 1`, giving a decidable word problem;
//! - [`tree`]: the lifted end space of the Bass-Serre tree of `Z_m * Z_n`,
//!   encoded as eventually periodic label sequences, with the generator
//!   action and lexicographic comparison;
//! - [`orders`]: decision procedures for the Dehornoy-like ordering `<_D`,
//!   the isolated ordering `<_A`, and shifts of either by a group element;
//! - [`enumerate`]: word-length balls, sigma-positive word streams, ordering
//!   fingerprints and positive-cone factorization search.
//!
//! Everything is pure value manipulation over `alloc`; the crate is
//! `no_std`-compatible.

#![no_std]

extern crate alloc;

pub mod enumerate;
pub mod group;
pub mod orders;
pub mod params;
pub mod tree;
pub mod words;

pub use group::NormalForm;
pub use orders::{OrderSpec, Sign};
pub use params::GroupParams;
pub use tree::End;
pub use words::{Alphabet, Word};
