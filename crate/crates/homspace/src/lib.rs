//! Homomorphism spaces between GF(2) symmetric-group modules, and the
//! splitting machinery built on them.
//!
//! A homomorphism from a module of dimension `a` to one of dimension `b` is
//! a bit matrix `F` of shape `a x b`, applied to row vectors as `v * F`; the
//! intertwining condition reads `rho_src(g) * F == F * rho_tgt(g)` for both
//! group generators.
//!
//! [`hom_basis`] picks one of three computation paths: a Frobenius path when
//! the source is a permutation module (homs out of it are the fixed vectors
//! of the target under a point stabilizer), a dual Frobenius path when the
//! target is a permutation module (fixed functionals), and a general
//! seed-and-relations path for everything else. All three produce the same
//! space; the integration tests pin them against a dense intertwiner
//! solver on small instances.

mod basis;
mod frobenius;
mod ops;
pub mod rng;
mod seeds;

pub use basis::{hom_basis, is_intertwiner, HomBasis};
pub use ops::{
    cotrace_into, fitting_decompose, homs_into_subspace, iso_test, restrict_homs_to_summand,
    split_off, summand_multiplicity, trace_from, FittingSummand, Split,
};
