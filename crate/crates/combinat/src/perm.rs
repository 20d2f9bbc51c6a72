/// A permutation of the points `0..n`, stored as the image array:
/// `p[x]` is where point `x` goes.
pub type Perm = Vec<usize>;

/// The identity permutation on `n` points.
#[must_use]
pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// Left-to-right composition: apply `a`, then `b`.
///
/// # Panics
/// Panics if the two permutations act on different numbers of points.
#[must_use]
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    assert_eq!(a.len(), b.len(), "composing permutations of different degree");
    a.iter().map(|&x| b[x]).collect()
}

/// The inverse permutation.
#[must_use]
pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

#[must_use]
pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(x, &y)| x == y)
}

/// The generator `s`: the transposition of points 0 and 1, or the identity
/// when `n < 2`.
#[must_use]
pub fn gen_s_points(n: usize) -> Perm {
    let mut p = identity(n);
    if n >= 2 {
        p.swap(0, 1);
    }
    p
}

/// The generator `c`: the full cycle sending `x` to `x + 1 (mod n)`.
#[must_use]
pub fn gen_c_points(n: usize) -> Perm {
    (0..n).map(|x| (x + 1) % n).collect()
}
