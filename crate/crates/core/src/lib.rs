//! Noncrossing partition lattices of finite real reflection groups, built
//! with exact arithmetic.
//!
//! The crate constructs root systems over the rationals and over the real
//! quadratic field Q(√5), realizes group elements as exact orthogonal
//! matrices together with signed permutations of the positive roots, builds
//! the interval `[1, γ]` in absolute order (the noncrossing partition
//! lattice `NC_W(γ)`), and checks the combinatorial machinery on top of it:
//! reflection orderings, compatibility with a Coxeter element, EL-labelings,
//! Möbius/falling-chain identities and the Hurwitz action on reduced
//! reflection factorizations.
//!
//! Everything is decided exactly; no floating point enters any comparison.
//! The crate is `no_std`-compatible (with `alloc`); the companion `ncshell`
//! crate carries the CLI and the file formats.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod exact;
pub mod group;
pub mod ordering;
pub mod poset;
pub mod roots;
pub mod shell;

pub use exact::{ArithmeticError, Matrix, Rational, Scalar, Vector};
pub use group::{
    absolute_le, bipartite_coxeter_element, conjugate_reflection, coxeter_element,
    fixed_space_dim, identity, reflection_below, reflection_element, reflection_length, Element,
    ElementKey,
};
pub use ordering::{classical_order, steinberg_order, TotalOrder};
pub use poset::{Chain, Interval, NcPoset};
pub use roots::{build_root_system, CoxeterType, Family, Rank2Subsystem, RootSystem, RootsError};
pub use shell::{el_check, ChainClass, ElReport};
