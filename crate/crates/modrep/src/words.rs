use gf2core::BitMatrix;

use crate::module::GModule;

/// One letter of a word in the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    S,
    C,
}

/// Expresses a permutation as a word in `s` and `c`, to be applied left to
/// right.
///
/// The adjacent transposition of points `j` and `j + 1` is the conjugate
/// `c^a s c^(n-a)` with `a = (n - j) mod n`: the first rotation carries the
/// two points onto 0 and 1, and the second carries them back. An arbitrary
/// permutation is bubble-sorted into such transpositions.
///
/// # Panics
/// Panics if `g` is not a permutation of `0..g.len()`.
#[must_use]
pub fn perm_to_word(g: &[usize]) -> Vec<Letter> {
    let n = g.len();
    {
        let mut seen = vec![false; n];
        for &x in g {
            assert!(x < n && !seen[x], "not a permutation: {g:?}");
            seen[x] = true;
        }
    }
    let mut word = Vec::new();
    let mut current = g.to_vec();
    loop {
        let Some(j) = (0..n.saturating_sub(1)).find(|&j| current[j] > current[j + 1]) else {
            break;
        };
        current.swap(j, j + 1);
        let a = (n - j) % n;
        word.extend(std::iter::repeat(Letter::C).take(a));
        word.push(Letter::S);
        word.extend(std::iter::repeat(Letter::C).take((n - a) % n));
    }
    word
}

/// Evaluates permutations to their action matrices on one module, caching
/// the powers of the cycle generator.
pub struct Evaluator<'a> {
    module: &'a GModule,
    c_powers: Vec<BitMatrix>,
}

impl<'a> Evaluator<'a> {
    #[must_use]
    pub fn new(module: &'a GModule) -> Self {
        let mut c_powers = vec![BitMatrix::identity(module.dim)];
        for _ in 1..module.n {
            let next = c_powers.last().unwrap().mul(&module.gen_c);
            c_powers.push(next);
        }
        Evaluator { module, c_powers }
    }

    /// The matrix by which the permutation `g` acts.
    ///
    /// # Panics
    /// Panics if `g` does not permute the module's points.
    #[must_use]
    pub fn matrix_of(&self, g: &[usize]) -> BitMatrix {
        assert_eq!(g.len(), self.module.n, "permutation degree mismatch");
        let word = perm_to_word(g);
        let mut out = BitMatrix::identity(self.module.dim);
        let mut run = 0usize;
        for letter in word {
            match letter {
                Letter::C => run += 1,
                Letter::S => {
                    if run % self.module.n != 0 {
                        out = out.mul(&self.c_powers[run % self.module.n]);
                    }
                    run = 0;
                    out = out.mul(&self.module.gen_s);
                }
            }
        }
        if run % self.module.n != 0 {
            out = out.mul(&self.c_powers[run % self.module.n]);
        }
        out
    }
}

/// One-shot form of [`Evaluator::matrix_of`].
#[must_use]
pub fn element_matrix(module: &GModule, g: &[usize]) -> BitMatrix {
    Evaluator::new(module).matrix_of(g)
}
