use combinat::Partition;
use gf2core::{BitMatrix, EchelonBuilder};

/// What a labeled module is, when it is one of the named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleKind {
    /// Permutation module on tabloids of the labeling shape.
    Perm,
    /// Span of the polytabloids of the labeling shape.
    Polytabloid,
    /// Simple module indexed by a 2-regular shape.
    Simple,
    /// Indecomposable direct summand of a permutation module.
    Young,
}

/// A GF(2) representation of the symmetric group on `n` points, given by the
/// right action matrices of the two generators.
#[derive(Clone, PartialEq, Eq)]
pub struct GModule {
    pub n: usize,
    pub dim: usize,
    pub gen_s: BitMatrix,
    pub gen_c: BitMatrix,
    /// Optional name, carried only when the matrices are exactly the ones
    /// this workspace constructs for that name.
    pub label: Option<(ModuleKind, Partition)>,
}

/// An invariant subspace presented three ways: as a module in its own right,
/// as the quotient by it, and as the witness maps tying both to the ambient
/// module.
pub struct SubQuotient {
    pub sub: GModule,
    pub quot: GModule,
    /// Rows are the reduced echelon basis of the subspace; maps subspace
    /// coordinates into ambient coordinates by `v * inclusion`.
    pub inclusion: BitMatrix,
    /// Maps ambient coordinates onto quotient coordinates by
    /// `v * projection`.
    pub projection: BitMatrix,
}

impl GModule {
    /// Wraps generator matrices as a module after checking the defining
    /// relations.
    ///
    /// # Panics
    /// Panics if the matrices are not square of equal size, if `s` is not an
    /// involution, or if `c` does not have order dividing `n`.
    #[must_use]
    pub fn new(
        n: usize,
        gen_s: BitMatrix,
        gen_c: BitMatrix,
        label: Option<(ModuleKind, Partition)>,
    ) -> Self {
        let dim = gen_s.rows();
        assert!(n >= 1, "the group needs at least one point");
        assert_eq!(gen_s.cols(), dim, "s action must be square");
        assert_eq!(gen_c.rows(), dim, "generator sizes must agree");
        assert_eq!(gen_c.cols(), dim, "c action must be square");
        assert!(gen_s.mul(&gen_s).is_identity(), "s must be an involution");
        let mut power = BitMatrix::identity(dim);
        for _ in 0..n {
            power = power.mul(&gen_c);
        }
        assert!(power.is_identity(), "c must have order dividing n");
        GModule {
            n,
            dim,
            gen_s,
            gen_c,
            label,
        }
    }

    /// The one-dimensional module with trivial action.
    #[must_use]
    pub fn trivial(n: usize) -> Self {
        GModule::new(n, BitMatrix::identity(1), BitMatrix::identity(1), None)
    }

    /// The contragredient module: `g` acts by the transposed inverse. Since
    /// `s` is an involution and `c` has order dividing `n`, inverses are
    /// `s` itself and `c` to the `n - 1`.
    ///
    /// The label survives only when dualizing did not change the matrices.
    #[must_use]
    pub fn dual(&self) -> GModule {
        let gen_s = self.gen_s.transpose();
        let mut c_inv = BitMatrix::identity(self.dim);
        for _ in 0..self.n - 1 {
            c_inv = c_inv.mul(&self.gen_c);
        }
        let gen_c = c_inv.transpose();
        let label = if gen_s == self.gen_s && gen_c == self.gen_c {
            self.label.clone()
        } else {
            None
        };
        GModule {
            n: self.n,
            dim: self.dim,
            gen_s,
            gen_c,
            label,
        }
    }

    /// The tensor product over GF(2) with the diagonal group action.
    ///
    /// # Panics
    /// Panics if the two modules are for different groups.
    #[must_use]
    pub fn tensor(&self, other: &GModule) -> GModule {
        assert_eq!(self.n, other.n, "tensor factors must share the group");
        GModule {
            n: self.n,
            dim: self.dim * other.dim,
            gen_s: self.gen_s.kronecker(&other.gen_s),
            gen_c: self.gen_c.kronecker(&other.gen_c),
            label: None,
        }
    }

    /// The smallest invariant subspace containing the given rows, as a
    /// reduced echelon basis in ambient coordinates.
    #[must_use]
    pub fn spin(&self, seeds: &BitMatrix) -> BitMatrix {
        assert_eq!(seeds.cols(), self.dim, "seed width must match the module");
        let mut builder = EchelonBuilder::new(self.dim);
        let mut queue: Vec<gf2core::BitVec> = Vec::new();
        for i in 0..seeds.rows() {
            let v = seeds.row_vec(i);
            if builder.push(&v) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for image in [self.gen_s.row_mul(&v), self.gen_c.row_mul(&v)] {
                if builder.push(&image) {
                    queue.push(image);
                }
            }
        }
        builder.finish().rref
    }

    /// Splits the module along an invariant subspace, returning the
    /// subspace and quotient modules together with the witness maps.
    ///
    /// The rows of `subspace` may be any spanning set; they are echelonized
    /// first.
    ///
    /// # Panics
    /// Panics if the row space of `subspace` is not invariant under both
    /// generators.
    #[must_use]
    pub fn sub_and_quotient(&self, subspace: &BitMatrix) -> SubQuotient {
        assert_eq!(subspace.cols(), self.dim, "subspace lives in the module");
        let ech = subspace.echelonize();
        let basis = ech.rref;
        let pivots = &ech.pivots;
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.dim];
            for &p in pivots {
                is_pivot[p] = true;
            }
            (0..self.dim).filter(|&j| !is_pivot[j]).collect()
        };
        let quot_dim = free.len();

        // Row i of the projection is the image of the i-th ambient basis
        // vector: free coordinates pass through, pivot coordinates fold in
        // the rest of their echelon row.
        let mut projection = BitMatrix::zeros(self.dim, quot_dim);
        for (j, &f) in free.iter().enumerate() {
            projection.set(f, j, true);
        }
        for (k, &p) in pivots.iter().enumerate() {
            for (j, &f) in free.iter().enumerate() {
                if basis.get(k, f) {
                    projection.set(p, j, true);
                }
            }
        }

        let act = |g: &BitMatrix, what: &str| -> (BitMatrix, BitMatrix) {
            let moved = basis.mul(g);
            // Invariance: every moved basis row must again lie in the
            // subspace, which for a reduced basis means it is reproduced by
            // its own pivot coordinates.
            let coords = moved.select_columns(pivots);
            assert_eq!(
                coords.mul(&basis),
                moved,
                "subspace is not invariant under {what}"
            );
            let quot_act = g.select_rows(&free).mul(&projection);
            (coords, quot_act)
        };
        let (sub_s, quot_s) = act(&self.gen_s, "s");
        let (sub_c, quot_c) = act(&self.gen_c, "c");

        SubQuotient {
            sub: GModule::new(self.n, sub_s, sub_c, None),
            quot: GModule::new(self.n, quot_s, quot_c, None),
            inclusion: basis,
            projection,
        }
    }
}

/// The block-diagonal direct sum, with `a` occupying the leading
/// coordinates.
///
/// # Panics
/// Panics if the summands are modules for different groups.
#[must_use]
pub fn direct_sum(a: &GModule, b: &GModule) -> GModule {
    assert_eq!(a.n, b.n, "summands must share the group");
    let dim = a.dim + b.dim;
    let embed = |top: &BitMatrix, bottom: &BitMatrix| {
        BitMatrix::from_fn(dim, dim, |i, j| {
            if i < a.dim && j < a.dim {
                top.get(i, j)
            } else if i >= a.dim && j >= a.dim {
                bottom.get(i - a.dim, j - a.dim)
            } else {
                false
            }
        })
    };
    GModule {
        n: a.n,
        dim,
        gen_s: embed(&a.gen_s, &b.gen_s),
        gen_c: embed(&a.gen_c, &b.gen_c),
        label: None,
    }
}
