use combinat::{partitions_desc, standard_tableaux, tabloid_basis, Partition, TabloidBasis};
use gf2core::BitMatrix;

use crate::module::{GModule, ModuleKind};

/// The permutation module on tabloids of shape `lambda`: generators act by
/// permuting the tabloid basis.
#[must_use]
pub fn perm_module(lambda: &Partition) -> GModule {
    let basis = tabloid_basis(lambda);
    let dim = basis.tabloids.len();
    GModule::new(
        lambda.n(),
        index_matrix(dim, &basis.perm_s),
        index_matrix(dim, &basis.perm_c),
        Some((ModuleKind::Perm, lambda.clone())),
    )
}

fn index_matrix(dim: usize, images: &[usize]) -> BitMatrix {
    let mut m = BitMatrix::zeros(dim, dim);
    for (i, &j) in images.iter().enumerate() {
        m.set(i, j, true);
    }
    m
}

/// The permutation matrix by which the point permutation `g` acts on the
/// tabloids of shape `lambda`, computed directly rather than through a word
/// in the generators.
///
/// # Panics
/// Panics if `g` does not permute the points of the shape.
#[must_use]
pub fn perm_point_action(lambda: &Partition, g: &[usize]) -> BitMatrix {
    assert_eq!(g.len(), lambda.n(), "permutation degree mismatch");
    let basis = tabloid_basis(lambda);
    let dim = basis.tabloids.len();
    let mut m = BitMatrix::zeros(dim, dim);
    for (i, t) in basis.tabloids.iter().enumerate() {
        let image: Vec<Vec<u8>> = t
            .iter()
            .map(|row| {
                let mut out: Vec<u8> = row.iter().map(|&x| g[x as usize] as u8).collect();
                out.sort_unstable();
                out
            })
            .collect();
        let j = basis
            .tabloids
            .binary_search(&image)
            .expect("tabloid image stays in the basis");
        m.set(i, j, true);
    }
    m
}

/// The submodule of the permutation module spanned by the polytabloids of
/// the standard tableaux, acting on that basis. The second return is the
/// basis itself, one polytabloid per row in tabloid coordinates.
#[must_use]
pub fn specht_module(lambda: &Partition) -> (GModule, BitMatrix) {
    let tabs = tabloid_basis(lambda);
    let rows = polytabloid_matrix(lambda, &tabs);
    let perm = perm_module(lambda);
    let restrict = |g: &BitMatrix| -> BitMatrix {
        let moved = rows.mul(g);
        rows.transpose()
            .solve(&moved.transpose())
            .expect("polytabloid span is invariant and independent")
            .transpose()
    };
    let module = GModule::new(
        lambda.n(),
        restrict(&perm.gen_s),
        restrict(&perm.gen_c),
        Some((ModuleKind::Polytabloid, lambda.clone())),
    );
    (module, rows)
}

/// The simple module for a 2-regular shape: the polytabloid module modulo
/// the radical of its bilinear form.
///
/// # Panics
/// Panics if `lambda` has a repeated part, where no simple is indexed.
#[must_use]
pub fn simple_module(lambda: &Partition) -> GModule {
    assert!(
        lambda.is_two_regular(),
        "simple modules are indexed by 2-regular shapes, got {lambda}"
    );
    let (specht, rows) = specht_module(lambda);
    let gram = rows.mul(&rows.transpose());
    let radical = gram.echelonize().nullspace;
    let mut simple = if radical.rows() == 0 {
        specht
    } else {
        specht.sub_and_quotient(&radical).quot
    };
    assert!(simple.dim > 0, "the form cannot be wholly degenerate");
    simple.label = Some((ModuleKind::Simple, lambda.clone()));
    simple
}

/// All simple modules for the group on `n` points, on 2-regular shapes in
/// descending lexicographic order.
#[must_use]
pub fn simples_catalog(n: usize) -> Vec<(Partition, GModule)> {
    partitions_desc(n)
        .into_iter()
        .filter(Partition::is_two_regular)
        .map(|lam| {
            let m = simple_module(&lam);
            (lam, m)
        })
        .collect()
}

/// One row per standard tableau: the GF(2) sum of the tabloids reached by
/// permuting entries within columns.
fn polytabloid_matrix(lambda: &Partition, tabs: &TabloidBasis) -> BitMatrix {
    let tableaux = standard_tableaux(lambda);
    let conj = lambda.conjugate();
    let mut out = BitMatrix::zeros(tableaux.len(), tabs.tabloids.len());
    for (r, tableau) in tableaux.iter().enumerate() {
        let columns: Vec<Vec<u8>> = conj
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &height)| (0..height).map(|i| tableau[i][j]).collect())
            .collect();
        let arrangements: Vec<Vec<Vec<u8>>> =
            columns.iter().map(|col| permutations(col)).collect();
        let mut pick = vec![0usize; columns.len()];
        loop {
            let filled: Vec<Vec<u8>> = lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| {
                    let mut row: Vec<u8> =
                        (0..len).map(|j| arrangements[j][pick[j]][i]).collect();
                    row.sort_unstable();
                    row
                })
                .collect();
            let idx = tabs
                .tabloids
                .binary_search(&filled)
                .expect("column rearrangement yields a tabloid of the shape");
            out.set(r, idx, !out.get(r, idx));
            // Odometer over the per-column arrangement choices.
            let mut k = 0;
            loop {
                if k == pick.len() {
                    break;
                }
                pick[k] += 1;
                if pick[k] < arrangements[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
    }
    out
}

/// Every ordering of `items`, in a deterministic order.
fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}
