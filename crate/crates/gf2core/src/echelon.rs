use crate::matrix::{BitMatrix, BitVec};

/// Reduced row echelon form of a matrix, with rank, pivot columns, and a
/// basis of the right kernel.
pub struct Echelon {
    pub rref: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Rows span `{x : a * x^T = 0}`.
    pub nullspace: BitMatrix,
}

/// Incremental reduced row echelon form. Rows can be streamed in one at a
/// time, so wide implicit systems never have to be materialized; memory stays
/// at `rank * cols` bits.
pub struct EchelonBuilder {
    cols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    #[must_use]
    pub fn new(cols: usize) -> Self {
        EchelonBuilder {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `v` against the rows seen so far.
    #[must_use]
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        for (k, &p) in self.pivots.iter().enumerate() {
            if r.get(p) {
                r.xor_assign(&self.rows[k]);
            }
        }
        r
    }

    #[must_use]
    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a row. Returns true if it enlarged the span.
    ///
    /// # Panics
    /// Panics if `v.len() != cols`.
    pub fn push(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let r = self.reduce(v);
        let Some(lead) = r.leading_bit() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(lead) {
                row.xor_assign(&r);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, r);
        true
    }

    /// Finishes into an [`Echelon`], computing the nullspace basis.
    #[must_use]
    pub fn finish(self) -> Echelon {
        let rank = self.rows.len();
        let rref = BitMatrix::from_rows(self.cols, &self.rows);
        let mut pivot_slot = vec![usize::MAX; self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            pivot_slot[p] = i;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| pivot_slot[c] == usize::MAX).collect();
        let mut nullspace = BitMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            nullspace.set(k, f, true);
            for (i, &p) in self.pivots.iter().enumerate() {
                if rref.get(i, f) {
                    nullspace.set(k, p, true);
                }
            }
        }
        Echelon {
            rref,
            rank,
            pivots: self.pivots,
            nullspace,
        }
    }
}

impl BitMatrix {
    /// Reduced row echelon form with pivots and right-kernel basis.
    #[must_use]
    pub fn echelonize(&self) -> Echelon {
        let mut b = EchelonBuilder::new(self.cols());
        for r in 0..self.rows() {
            b.push(&self.row_vec(r));
        }
        b.finish()
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        let mut b = EchelonBuilder::new(self.cols());
        for r in 0..self.rows() {
            b.push(&self.row_vec(r));
        }
        b.rank()
    }

    /// Solves `self * X = rhs`. Returns None when the system is inconsistent.
    ///
    /// # Panics
    /// Panics if `self.rows() != rhs.rows()`.
    #[must_use]
    pub fn solve(&self, rhs: &BitMatrix) -> Option<BitMatrix> {
        assert_eq!(self.rows(), rhs.rows(), "row count mismatch in solve");
        let aug = self.hstack(rhs);
        let ech = aug.echelonize();
        if ech.pivots.iter().any(|&p| p >= self.cols()) {
            return None;
        }
        let mut x = BitMatrix::zeros(self.cols(), rhs.cols());
        for (i, &p) in ech.pivots.iter().enumerate() {
            for c in 0..rhs.cols() {
                if ech.rref.get(i, self.cols() + c) {
                    x.set(p, c, true);
                }
            }
        }
        Some(x)
    }

    /// The inverse of a square matrix, or None if singular.
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    #[must_use]
    pub fn inverse(&self) -> Option<BitMatrix> {
        assert_eq!(self.rows(), self.cols(), "inverse of a non-square matrix");
        self.solve(&BitMatrix::identity(self.rows()))
    }

    /// True when square and of full rank.
    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.rows() == self.cols() && self.rank() == self.rows()
    }
}
