//! GF(2) modules for the symmetric groups on at most seven points.
//!
//! A module is stored as the pair of matrices by which the two group
//! generators act: `s`, the transposition of points 0 and 1, and `c`, the
//! full cycle. Vectors are rows and the action is on the right, so a group
//! element applied to a vector `v` is `v * rho(g)`, and the homomorphism
//! property reads `rho(g then h) = rho(g) * rho(h)` with the left-to-right
//! composition convention of the `combinat` crate.
//!
//! The crate builds the three classical families over GF(2): permutation
//! modules on tabloids, their polytabloid submodules, and the simple heads
//! of the latter for 2-regular shapes. It also provides the structural
//! plumbing every higher layer leans on: invariant closures, subquotients
//! with explicit witness maps, duals, tensor products, direct sums, element
//! matrices for arbitrary permutations, and the matrices of a Sylow
//! 2-subgroup.

mod construct;
mod io;
mod module;
mod sylow;
mod words;

pub use construct::{
    perm_module, perm_point_action, simple_module, simples_catalog, specht_module,
};
pub use module::{direct_sum, GModule, ModuleKind, SubQuotient};
pub use sylow::{restrict_to_sylow2, sylow2_order, sylow2_point_generators};
pub use words::{element_matrix, perm_to_word, Evaluator, Letter};
