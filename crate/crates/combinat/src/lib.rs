//! Combinatorial foundations for symmetric-group representation computations.
//!
//! This crate provides integer partitions with dominance order and 2-core
//! arithmetic, permutations of points encoded as index arrays, tabloid bases
//! of permutation modules together with the generator actions on them, and
//! standard Young tableaux.
//!
//! Conventions used throughout the workspace:
//!
//! * Points are 0-indexed: the symmetric group on `n` points permutes
//!   `0..n`.
//! * A permutation is a `Vec<usize>` mapping each point to its image, and
//!   composition is left to right: `compose(a, b)[x] == b[a[x]]`, so
//!   `compose(a, b)` means "apply `a`, then `b`".
//! * The two distinguished generators are `s`, the transposition of points
//!   0 and 1, and `c`, the full cycle sending `x` to `x + 1 (mod n)`. For
//!   `n == 1` both degenerate to the identity.

mod partition;
mod perm;
mod tableau;
mod tabloid;

pub use partition::{partitions_desc, ParsePartitionError, Partition};
pub use perm::{compose, gen_c_points, gen_s_points, identity, inverse, is_identity, Perm};
pub use tableau::{hook_length_count, standard_tableaux};
pub use tabloid::{tabloid_basis, TabloidBasis};
