//! Bit-packed dense linear algebra over GF(2).
//!
//! Layout is row-major: a row of a `cols`-wide matrix occupies
//! `cols.div_ceil(64)` words, bit `j` of the row lives at bit `j % 64` of word
//! `j / 64` (little endian within the word), and unused tail bits are kept
//! zero so rows can be compared and serialized bytewise. The same layout is
//! used verbatim by the on-disk format in [`BitMatrix::write_ymf2`].

mod echelon;
mod io;
mod matrix;
mod span;

pub use echelon::{Echelon, EchelonBuilder};
pub use matrix::{BitMatrix, BitVec};
pub use span::{RowSpan, SpanPush};
