use gf2core::{BitMatrix, BitVec, EchelonBuilder, RowSpan, SpanPush};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
    BitMatrix::from_fn(rows, cols, |_, _| r.gen_bool(0.5))
}

/// Reference product by the definition, bit by bit.
fn naive_mul(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    assert_eq!(a.cols(), b.rows());
    BitMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        let mut acc = false;
        for k in 0..a.cols() {
            acc ^= a.get(i, k) && b.get(k, j);
        }
        acc
    })
}

#[test]
fn multiply_matches_naive_oracle() {
    let mut r = rng(1);
    for trial in 0..100 {
        // Sizes straddle the four-Russians threshold in both directions.
        let m = r.gen_range(0..90);
        let k = r.gen_range(0..140);
        let n = r.gen_range(0..90);
        let a = random_matrix(&mut r, m, k);
        let b = random_matrix(&mut r, k, n);
        assert_eq!(a.mul(&b), naive_mul(&a, &b), "trial {trial}: {m}x{k} * {k}x{n}");
    }
}

#[test]
fn multiply_hand_checked() {
    // [1 1; 0 1] * [1 0; 1 1] = [0 1; 1 1]
    let a = BitMatrix::from_fn(2, 2, |i, j| (i, j) != (1, 0));
    let b = BitMatrix::from_fn(2, 2, |i, j| (i, j) != (0, 1));
    let c = a.mul(&b);
    assert_eq!(
        (c.get(0, 0), c.get(0, 1), c.get(1, 0), c.get(1, 1)),
        (false, true, true, true)
    );
}

#[test]
fn multiply_is_associative() {
    let mut r = rng(2);
    for trial in 0..100 {
        let (m, k, l, n) = (
            r.gen_range(1..40),
            r.gen_range(1..90),
            r.gen_range(1..90),
            r.gen_range(1..40),
        );
        let a = random_matrix(&mut r, m, k);
        let b = random_matrix(&mut r, k, l);
        let c = random_matrix(&mut r, l, n);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)), "trial {trial}");
    }
}

#[test]
fn identity_is_neutral() {
    let mut r = rng(3);
    let a = random_matrix(&mut r, 33, 70);
    assert_eq!(BitMatrix::identity(33).mul(&a), a);
    assert_eq!(a.mul(&BitMatrix::identity(70)), a);
}

#[test]
fn row_mul_matches_matrix_product() {
    let mut r = rng(4);
    for _ in 0..50 {
        let k = r.gen_range(1..100);
        let n = r.gen_range(1..100);
        let m = random_matrix(&mut r, k, n);
        let v = BitVec::from_fn(k, |_| r.gen_bool(0.5));
        let as_matrix = BitMatrix::from_rows(k, &[v.clone()]).mul(&m);
        assert_eq!(m.row_mul(&v), as_matrix.row_vec(0));
    }
}

#[test]
fn rank_nullity_holds() {
    let mut r = rng(5);
    for trial in 0..100 {
        let rows = r.gen_range(0..70);
        let cols = r.gen_range(0..70);
        let a = random_matrix(&mut r, rows, cols);
        let e = a.echelonize();
        assert_eq!(e.rank + e.nullspace.rows(), cols, "trial {trial}");
        assert!(e.rank <= rows.min(cols));
        // Every nullspace row is annihilated: a * x^T = 0.
        let prod = a.mul(&e.nullspace.transpose());
        assert!(prod.is_zero(), "trial {trial}: nullspace not annihilated");
        // Nullspace rows are independent.
        assert_eq!(e.nullspace.rank(), e.nullspace.rows());
    }
}

#[test]
fn echelonize_is_idempotent_and_rank_symmetric() {
    let mut r = rng(6);
    for _ in 0..100 {
        let (rows, cols) = (r.gen_range(1..60), r.gen_range(1..60));
        let a = random_matrix(&mut r, rows, cols);
        let e = a.echelonize();
        let e2 = e.rref.echelonize();
        assert_eq!(e.rref, e2.rref);
        assert_eq!(e.pivots, e2.pivots);
        assert_eq!(a.rank(), a.transpose().rank());
    }
}

#[test]
fn echelonize_edge_shapes() {
    let z = BitMatrix::zeros(3, 3).echelonize();
    assert_eq!(z.rank, 0);
    assert_eq!(z.nullspace.rows(), 3);
    let i = BitMatrix::identity(5).echelonize();
    assert_eq!(i.rank, 5);
    assert_eq!(i.nullspace.rows(), 0);
    assert_eq!(i.pivots, vec![0, 1, 2, 3, 4]);
    let empty = BitMatrix::zeros(0, 4).echelonize();
    assert_eq!(empty.rank, 0);
    assert_eq!(empty.nullspace.rows(), 4);
    let no_cols = BitMatrix::zeros(4, 0).echelonize();
    assert_eq!(no_cols.rank, 0);
    assert_eq!(no_cols.nullspace.rows(), 0);
}

#[test]
fn solve_recovers_constructed_solutions() {
    let mut r = rng(7);
    for trial in 0..100 {
        let m = r.gen_range(1..50);
        let n = r.gen_range(1..50);
        let k = r.gen_range(1..10);
        let a = random_matrix(&mut r, m, n);
        let x = random_matrix(&mut r, n, k);
        let b = a.mul(&x);
        let got = a.solve(&b).expect("constructed system must be solvable");
        assert_eq!(a.mul(&got), b, "trial {trial}");
    }
}

#[test]
fn solve_detects_inconsistency() {
    // x + y = 0 and x + y = 1 cannot both hold.
    let a = BitMatrix::from_fn(2, 2, |_, _| true);
    let mut b = BitMatrix::zeros(2, 1);
    b.set(1, 0, true);
    assert!(a.solve(&b).is_none());
}

#[test]
fn inverse_round_trips() {
    let mut r = rng(8);
    let mut found = 0;
    while found < 30 {
        let n = r.gen_range(1..60);
        let a = random_matrix(&mut r, n, n);
        if let Some(inv) = a.inverse() {
            assert!(a.mul(&inv).is_identity());
            assert!(inv.mul(&a).is_identity());
            found += 1;
        }
    }
    assert!(BitMatrix::zeros(3, 3).inverse().is_none());
}

#[test]
fn kronecker_rank_is_multiplicative() {
    let mut r = rng(9);
    for trial in 0..100 {
        let (ar, ac) = (r.gen_range(1..12), r.gen_range(1..12));
        let (br, bc) = (r.gen_range(1..12), r.gen_range(1..12));
        let a = random_matrix(&mut r, ar, ac);
        let b = random_matrix(&mut r, br, bc);
        let k = a.kronecker(&b);
        assert_eq!(k.rows(), a.rows() * b.rows());
        assert_eq!(k.cols(), a.cols() * b.cols());
        assert_eq!(k.rank(), a.rank() * b.rank(), "trial {trial}");
    }
}

#[test]
fn kronecker_matches_definition() {
    let mut r = rng(10);
    let a = random_matrix(&mut r, 3, 5);
    let b = random_matrix(&mut r, 4, 7);
    let k = a.kronecker(&b);
    for i1 in 0..3 {
        for j1 in 0..5 {
            for i2 in 0..4 {
                for j2 in 0..7 {
                    assert_eq!(
                        k.get(i1 * 4 + i2, j1 * 7 + j2),
                        a.get(i1, j1) && b.get(i2, j2)
                    );
                }
            }
        }
    }
    // Mixed product rule: (A (x) B)(C (x) D) = AC (x) BD.
    let c = random_matrix(&mut r, 5, 2);
    let d = random_matrix(&mut r, 7, 3);
    assert_eq!(
        a.kronecker(&b).mul(&c.kronecker(&d)),
        a.mul(&c).kronecker(&b.mul(&d))
    );
}

#[test]
fn transpose_involution_and_definition() {
    let mut r = rng(11);
    for &(rows, cols) in &[(1, 1), (64, 64), (65, 3), (3, 65), (1, 130), (130, 1), (100, 100)] {
        let a = random_matrix(&mut r, rows, cols);
        let t = a.transpose();
        assert_eq!(t.rows(), cols);
        assert_eq!(t.cols(), rows);
        for i in 0..rows {
            for j in 0..cols {
                assert_eq!(a.get(i, j), t.get(j, i));
            }
        }
        assert_eq!(t.transpose(), a);
    }
}

#[test]
fn stacking_and_column_slicing() {
    let mut r = rng(12);
    let a = random_matrix(&mut r, 4, 70);
    let b = random_matrix(&mut r, 6, 70);
    let v = BitMatrix::vstack(70, &[&a, &b]);
    assert_eq!(v.rows(), 10);
    assert_eq!(v.row_vec(5), b.row_vec(1));
    let empty = BitMatrix::vstack(70, &[]);
    assert_eq!((empty.rows(), empty.cols()), (0, 70));

    let c = random_matrix(&mut r, 5, 33);
    let d = random_matrix(&mut r, 5, 41);
    let h = c.hstack(&d);
    assert_eq!(h.cols(), 74);
    assert_eq!(h.columns(0, 33), c);
    assert_eq!(h.columns(33, 74), d);
    let sel = h.select_columns(&[0, 34, 73]);
    assert_eq!(sel.get(2, 0), c.get(2, 0));
    assert_eq!(sel.get(2, 1), d.get(2, 1));
    assert_eq!(sel.get(2, 2), d.get(2, 40));
}

#[test]
fn flatten_round_trips_and_orders_bits_row_major() {
    let mut r = rng(16);
    for &(rows, cols) in &[(1, 1), (3, 64), (5, 67), (7, 130), (4, 0)] {
        let a = random_matrix(&mut r, rows, cols);
        let flat = a.flatten();
        assert_eq!(flat.len(), rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                assert_eq!(flat.get(i * cols + j), a.get(i, j));
            }
        }
        assert_eq!(BitMatrix::unflatten(rows, cols, &flat), a);
    }
}

#[test]
fn serialization_round_trips() {
    let mut r = rng(13);
    for &(rows, cols) in &[(0, 0), (1, 1), (7, 64), (13, 65), (40, 129)] {
        let a = random_matrix(&mut r, rows, cols);
        let mut buf = Vec::new();
        a.write_ymf2(&mut buf).unwrap();
        let back = BitMatrix::read_ymf2(&mut buf.as_slice()).unwrap();
        assert_eq!(a, back);
    }
}

#[test]
fn serialization_golden_layout() {
    let mut m = BitMatrix::zeros(1, 1);
    m.set(0, 0, true);
    let mut buf = Vec::new();
    m.write_ymf2(&mut buf).unwrap();
    let expected: Vec<u8> = [
        b"YMF2".as_slice(),
        &1u32.to_le_bytes(),
        &1u32.to_le_bytes(),
        &1u64.to_le_bytes(),
    ]
    .concat();
    assert_eq!(buf, expected);
}

#[test]
fn serialization_rejects_corruption() {
    let mut m = BitMatrix::zeros(1, 1);
    m.set(0, 0, true);
    let mut buf = Vec::new();
    m.write_ymf2(&mut buf).unwrap();
    let mut bad_magic = buf.clone();
    bad_magic[0] = b'X';
    assert!(BitMatrix::read_ymf2(&mut bad_magic.as_slice()).is_err());
    // Set a bit beyond the single valid column.
    let mut bad_tail = buf.clone();
    bad_tail[12] = 0b10;
    assert!(BitMatrix::read_ymf2(&mut bad_tail.as_slice()).is_err());
    // Truncated data.
    assert!(BitMatrix::read_ymf2(&mut buf[..10].as_ref()).is_err());
}

#[test]
fn echelon_builder_matches_batch() {
    let mut r = rng(14);
    for _ in 0..50 {
        let (rows, cols) = (r.gen_range(1..50), r.gen_range(1..50));
        let a = random_matrix(&mut r, rows, cols);
        let mut b = EchelonBuilder::new(a.cols());
        for i in 0..a.rows() {
            b.push(&a.row_vec(i));
        }
        let streamed = b.finish();
        let batch = a.echelonize();
        assert_eq!(streamed.rref, batch.rref);
        assert_eq!(streamed.pivots, batch.pivots);
        assert_eq!(streamed.nullspace, batch.nullspace);
    }
}

#[test]
fn row_span_expresses_dependents() {
    let mut r = rng(15);
    for _ in 0..50 {
        let cols = r.gen_range(1..60);
        let mut span = RowSpan::new(cols);
        let mut basis: Vec<BitVec> = Vec::new();
        for _ in 0..cols + 10 {
            let v = BitVec::from_fn(cols, |_| r.gen_bool(0.4));
            match span.push(&v) {
                SpanPush::Added(i) => {
                    assert_eq!(i, basis.len());
                    basis.push(v);
                }
                SpanPush::Dependent(combo) => {
                    let mut rebuilt = BitVec::zeros(cols);
                    for i in combo.iter_ones() {
                        assert!(i < basis.len(), "combo references future vector");
                        rebuilt.xor_assign(&basis[i]);
                    }
                    assert_eq!(rebuilt, v, "combination does not rebuild the vector");
                }
            }
        }
        assert_eq!(span.rank(), basis.len());
    }
}
