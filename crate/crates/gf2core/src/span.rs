use crate::matrix::BitVec;

/// Result of [`RowSpan::push`].
pub enum SpanPush {
    /// The vector enlarged the span; it is basis vector number `.0` in
    /// insertion order.
    Added(usize),
    /// The vector was already in the span; the combination is over the basis
    /// vectors in insertion order (bit `i` = basis vector `i`).
    Dependent(BitVec),
}

/// A growing row span that can express dependent vectors as combinations of
/// the previously inserted independent ones. Used for spanning-tree hom
/// computations and spin closures where the expansion coefficients matter.
///
/// The basis size can never exceed the ambient dimension, so combination
/// vectors are allocated at that length up front.
pub struct RowSpan {
    cols: usize,
    rows: Vec<BitVec>,
    combos: Vec<BitVec>,
    pivot_slot: Vec<Option<usize>>,
    added: usize,
}

impl RowSpan {
    #[must_use]
    pub fn new(cols: usize) -> Self {
        RowSpan {
            cols,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_slot: vec![None; cols],
            added: 0,
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.added
    }

    #[must_use]
    pub fn is_full(&self) -> bool {
        self.added == self.cols
    }

    /// Inserts `v`, returning either its basis index or its expansion over
    /// the basis inserted so far.
    ///
    /// # Panics
    /// Panics if `v.len()` differs from the span width.
    pub fn push(&mut self, v: &BitVec) -> SpanPush {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let mut r = v.clone();
        let mut cmb = BitVec::zeros(self.cols.max(1));
        loop {
            match r.leading_bit() {
                None => return SpanPush::Dependent(cmb),
                Some(p) => match self.pivot_slot[p] {
                    Some(i) => {
                        r.xor_assign(&self.rows[i]);
                        cmb.xor_assign(&self.combos[i]);
                    }
                    None => {
                        self.pivot_slot[p] = Some(self.rows.len());
                        cmb.set(self.added, true);
                        self.rows.push(r);
                        self.combos.push(cmb);
                        self.added += 1;
                        return SpanPush::Added(self.added - 1);
                    }
                },
            }
        }
    }
}
