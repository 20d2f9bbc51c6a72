use std::fmt;
use std::ops::{Add, Mul};

pub(crate) const WORD_BITS: usize = 64;

/// Number of words needed to hold `bits` bits.
#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Mask of the valid bits in the last word of a `bits`-wide row.
#[inline]
pub(crate) fn tail_mask(bits: usize) -> u64 {
    let r = bits % WORD_BITS;
    if r == 0 {
        !0
    } else {
        (1u64 << r) - 1
    }
}

/// XOR `len` bits of `src` (starting at its bit 0) into `dst` starting at bit
/// offset `dst_off`. Bits of `src` beyond `len` must be zero.
pub(crate) fn xor_shifted(dst: &mut [u64], dst_off: usize, src: &[u64], len: usize) {
    if len == 0 {
        return;
    }
    let nw = words_for(len);
    let w0 = dst_off / WORD_BITS;
    let s = dst_off % WORD_BITS;
    if s == 0 {
        for w in 0..nw {
            dst[w0 + w] ^= src[w];
        }
    } else {
        for w in 0..nw {
            dst[w0 + w] ^= src[w] << s;
            let hi = src[w] >> (WORD_BITS - s);
            // hi != 0 can only come from valid bits, so the index is in range.
            if hi != 0 {
                dst[w0 + w + 1] ^= hi;
            }
        }
    }
}

/// Read the 64-bit window of `src` starting at bit `off`; out-of-range bits
/// read as zero.
#[inline]
pub(crate) fn read_word(src: &[u64], off: usize) -> u64 {
    let a = off / WORD_BITS;
    let r = off % WORD_BITS;
    let lo = src.get(a).copied().unwrap_or(0);
    if r == 0 {
        lo
    } else {
        let hi = src.get(a + 1).copied().unwrap_or(0);
        (lo >> r) | (hi << (WORD_BITS - r))
    }
}

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = BitVec::zeros(len);
        for i in 0..len {
            if f(i) {
                v.set(i, true);
            }
        }
        v
    }

    /// Wraps raw words, masking any bits beyond `len`.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        assert_eq!(words.len(), words_for(len), "word count mismatch");
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(len);
        }
        BitVec { len, words }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `i >= len`.
    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i >= len`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let w = &mut self.words[i / WORD_BITS];
        let m = 1u64 << (i % WORD_BITS);
        if value {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    #[must_use]
    pub fn leading_bit(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// # Panics
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Indices of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        SetBits {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Inner product over GF(2).
    ///
    /// # Panics
    /// Panics if the lengths differ.
    #[must_use]
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

struct SetBits<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for SetBits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

/// Use the method of four Russians when the inner dimension reaches this.
const M4R_MIN_INNER: usize = 64;

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// # Panics
    /// Panics if any row length differs from `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, v) in rows.iter().enumerate() {
            m.set_row(i, v);
        }
        m
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// # Panics
    /// Panics if out of range.
    #[inline]
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if out of range.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let m = 1u64 << (c % WORD_BITS);
        if value {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    /// The packed words of row `r`.
    #[inline]
    #[must_use]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[must_use]
    pub fn row_vec(&self, r: usize) -> BitVec {
        BitVec {
            len: self.cols,
            words: self.row(r).to_vec(),
        }
    }

    /// # Panics
    /// Panics if `v.len() != cols`.
    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        assert_eq!(v.len, self.cols, "row length mismatch");
        self.row_mut(r).copy_from_slice(&v.words);
    }

    pub(crate) fn xor_row_words(&mut self, r: usize, src: &[u64]) {
        let row = self.row_mut(r);
        for (a, b) in row.iter_mut().zip(src) {
            *a ^= b;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (lo, hi) = self.data.split_at_mut(b * self.stride);
        lo[a * self.stride..(a + 1) * self.stride].swap_with_slice(&mut hi[..self.stride]);
    }

    /// Indices of set bits of row `r` in increasing order.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let words = self.row(r);
        SetBits {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BitMatrix::identity(self.rows)
    }

    #[must_use]
    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Matrix product `self * rhs`, using the method of four Russians above a
    /// small inner dimension.
    ///
    /// # Panics
    /// Panics if `self.cols != rhs.rows`.
    #[must_use]
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        if self.rows == 0 || self.cols == 0 || rhs.cols == 0 {
            return out;
        }
        if rhs.rows < M4R_MIN_INNER {
            for i in 0..self.rows {
                for k in self.row_ones(i) {
                    out.xor_row_words(i, rhs.row(k));
                }
            }
            return out;
        }
        // One strip of 8 rhs rows at a time: the table holds all 256 XOR
        // combinations of the strip, keeping memory at 256 * stride words.
        let strips = rhs.rows.div_ceil(8);
        let mut table = vec![0u64; 256 * out.stride];
        for t in 0..strips {
            for w in &mut table[..out.stride] {
                *w = 0;
            }
            for pattern in 1usize..256 {
                let low = pattern.trailing_zeros() as usize;
                let prev = pattern & (pattern - 1);
                let k = t * 8 + low;
                let (head, tail) = table.split_at_mut(pattern * out.stride);
                let dst = &mut tail[..out.stride];
                dst.copy_from_slice(&head[prev * out.stride..prev * out.stride + out.stride]);
                if k < rhs.rows {
                    for (d, s) in dst.iter_mut().zip(rhs.row(k)) {
                        *d ^= s;
                    }
                }
            }
            let bitpos = t * 8;
            let word = bitpos / WORD_BITS;
            let shift = bitpos % WORD_BITS;
            for i in 0..self.rows {
                let byte = ((self.data[i * self.stride + word] >> shift) & 0xFF) as usize;
                if byte != 0 {
                    let src = &table[byte * out.stride..(byte + 1) * out.stride];
                    let dst = &mut out.data[i * out.stride..(i + 1) * out.stride];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix: returns `v * self`.
    ///
    /// # Panics
    /// Panics if `v.len() != self.rows`.
    #[must_use]
    pub fn row_mul(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len, self.rows, "dimension mismatch");
        let mut out = BitVec::zeros(self.cols);
        for k in v.iter_ones() {
            for (a, b) in out.words.iter_mut().zip(self.row(k)) {
                *a ^= b;
            }
        }
        out
    }

    /// Entrywise sum (XOR).
    ///
    /// # Panics
    /// Panics if the shapes differ.
    #[must_use]
    pub fn add(&self, rhs: &BitMatrix) -> BitMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= b;
        }
        out
    }

    #[must_use]
    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        let mut block = [0u64; 64];
        for br in (0..self.rows).step_by(64) {
            for bc in (0..self.cols).step_by(64) {
                let h = (self.rows - br).min(64);
                let w = (self.cols - bc).min(64);
                for (i, b) in block.iter_mut().enumerate() {
                    *b = if i < h {
                        read_word(self.row(br + i), bc) & tail_mask_64(w)
                    } else {
                        0
                    };
                }
                transpose64(&mut block);
                for (j, &b) in block.iter().enumerate().take(w) {
                    if b != 0 {
                        xor_shifted(out.row_mut(bc + j), br, &[b], h);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; block `(i, j)` of the result is `rhs` where
    /// `self[i, j]` is set.
    #[must_use]
    pub fn kronecker(&self, rhs: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            let cols1: Vec<usize> = self.row_ones(i1).collect();
            if cols1.is_empty() {
                continue;
            }
            for i2 in 0..rhs.rows {
                let src = rhs.row(i2);
                let r = i1 * rhs.rows + i2;
                let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
                for &j1 in &cols1 {
                    xor_shifted(dst, j1 * rhs.cols, src, rhs.cols);
                }
            }
        }
        out
    }

    /// Concatenates the rows into a single vector of `rows * cols` bits.
    #[must_use]
    pub fn flatten(&self) -> BitVec {
        let mut out = BitVec::zeros(self.rows * self.cols);
        for r in 0..self.rows {
            xor_shifted(&mut out.words, r * self.cols, self.row(r), self.cols);
        }
        out
    }

    /// Rebuilds a matrix from a vector produced by [`BitMatrix::flatten`].
    ///
    /// # Panics
    /// Panics if the vector length is not `rows * cols`.
    #[must_use]
    pub fn unflatten(rows: usize, cols: usize, v: &BitVec) -> BitMatrix {
        assert_eq!(v.len(), rows * cols, "flattened length mismatch");
        let mut out = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
            for (w, d) in dst.iter_mut().enumerate() {
                *d = read_word(&v.words, r * cols + w * WORD_BITS);
            }
            if let Some(last) = dst.last_mut() {
                *last &= tail_mask(cols);
            }
        }
        out
    }

    /// Stacks matrices vertically. All must have `cols` columns; the list may
    /// be empty.
    ///
    /// # Panics
    /// Panics on a column-count mismatch.
    #[must_use]
    pub fn vstack(cols: usize, mats: &[&BitMatrix]) -> BitMatrix {
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut out = BitMatrix::zeros(rows, cols);
        let mut r = 0;
        for m in mats {
            assert_eq!(m.cols, cols, "column count mismatch in vstack");
            out.data[r * out.stride..(r + m.rows) * out.stride].copy_from_slice(&m.data);
            r += m.rows;
        }
        out
    }

    /// Concatenates columns of `self` and `rhs`.
    ///
    /// # Panics
    /// Panics if the row counts differ.
    #[must_use]
    pub fn hstack(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch in hstack");
        let mut out = BitMatrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
            xor_shifted(dst, 0, self.row(r), self.cols);
            xor_shifted(dst, self.cols, rhs.row(r), rhs.cols);
        }
        out
    }

    /// The submatrix of columns `from..to`.
    ///
    /// # Panics
    /// Panics if the range is out of bounds.
    #[must_use]
    pub fn columns(&self, from: usize, to: usize) -> BitMatrix {
        assert!(from <= to && to <= self.cols, "column range out of bounds");
        let width = to - from;
        let mut out = BitMatrix::zeros(self.rows, width);
        for r in 0..self.rows {
            let src = self.row(r);
            let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
            for (w, d) in dst.iter_mut().enumerate() {
                *d = read_word(src, from + w * WORD_BITS);
            }
            if let Some(last) = dst.last_mut() {
                *last &= tail_mask(width);
            }
        }
        out
    }

    /// The submatrix picking the given columns in order.
    ///
    /// # Panics
    /// Panics if any index is out of bounds.
    #[must_use]
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, j, true);
                }
            }
        }
        out
    }

    /// The submatrix picking the given rows in order.
    ///
    /// # Panics
    /// Panics if any index is out of bounds.
    #[must_use]
    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            let src = self.row(r).to_vec();
            out.row_mut(i).copy_from_slice(&src);
        }
        out
    }
}

#[inline]
fn tail_mask_64(bits: usize) -> u64 {
    if bits >= 64 {
        !0
    } else {
        (1u64 << bits) - 1
    }
}

/// In-place transpose of a 64x64 bit block, one row per word, bit `c` of word
/// `r` holding element `(r, c)`.
fn transpose64(a: &mut [u64; 64]) {
    let mut j = 32;
    let mut m: u64 = 0x0000_0000_FFFF_FFFF;
    while j != 0 {
        let mut k = 0;
        while k < 64 {
            let t = ((a[k] >> j) ^ a[k + j]) & m;
            a[k] ^= t << j;
            a[k + j] ^= t;
            k = (k + j + 1) & !j;
        }
        j >>= 1;
        m ^= m << j;
    }
}

impl Mul for &BitMatrix {
    type Output = BitMatrix;

    fn mul(self, rhs: &BitMatrix) -> BitMatrix {
        BitMatrix::mul(self, rhs)
    }
}

impl Add for &BitMatrix {
    type Output = BitMatrix;

    fn add(self, rhs: &BitMatrix) -> BitMatrix {
        BitMatrix::add(self, rhs)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        if self.rows <= 72 && self.cols <= 144 {
            for r in 0..self.rows {
                for c in 0..self.cols {
                    f.write_str(if self.get(r, c) { "1" } else { "." })?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
