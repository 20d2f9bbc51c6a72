use crate::{gen_c_points, gen_s_points, Partition};

/// A tabloid is a filling of a Young diagram considered up to reordering
/// within rows; it is stored canonically with every row sorted ascending.
/// The basis lists all tabloids of the given shape in lexicographic order
/// of that canonical nested form, together with the index action of the two
/// group generators.
pub struct TabloidBasis {
    /// All tabloids of the shape, each a vector of sorted rows, sorted
    /// lexicographically.
    pub tabloids: Vec<Vec<Vec<u8>>>,
    /// `perm_s[i]` is the index of `tabloids[i]` acted on by `s`.
    pub perm_s: Vec<usize>,
    /// `perm_c[i]` is the index of `tabloids[i]` acted on by `c`.
    pub perm_c: Vec<usize>,
}

/// Enumerates the tabloid basis of the permutation module of shape `lambda`.
///
/// # Panics
/// Panics if `lambda` is empty or partitions an integer above 30, where the
/// point type would overflow long before memory does.
#[must_use]
pub fn tabloid_basis(lambda: &Partition) -> TabloidBasis {
    let n = lambda.n();
    assert!(n >= 1, "tabloid basis needs a nonempty shape");
    assert!(n <= 30, "point labels are u8-sized and shapes are small");

    let mut tabloids = Vec::new();
    let points: Vec<u8> = (0..n as u8).collect();
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(lambda.len());
    fill_rows(lambda.parts(), &points, &mut rows, &mut tabloids);
    tabloids.sort();

    let perm_s = action_indices(&tabloids, &gen_s_points(n));
    let perm_c = action_indices(&tabloids, &gen_c_points(n));
    TabloidBasis {
        tabloids,
        perm_s,
        perm_c,
    }
}

/// Recursively chooses the set of entries for each successive row.
fn fill_rows(
    shape: &[usize],
    remaining: &[u8],
    rows: &mut Vec<Vec<u8>>,
    out: &mut Vec<Vec<Vec<u8>>>,
) {
    let Some(&row_len) = shape.first() else {
        out.push(rows.clone());
        return;
    };
    let mut choice = Vec::with_capacity(row_len);
    choose_row(shape, remaining, row_len, 0, &mut choice, rows, out);
}

fn choose_row(
    shape: &[usize],
    remaining: &[u8],
    row_len: usize,
    from: usize,
    choice: &mut Vec<u8>,
    rows: &mut Vec<Vec<u8>>,
    out: &mut Vec<Vec<Vec<u8>>>,
) {
    if choice.len() == row_len {
        let rest: Vec<u8> = remaining
            .iter()
            .copied()
            .filter(|p| !choice.contains(p))
            .collect();
        rows.push(choice.clone());
        fill_rows(&shape[1..], &rest, rows, out);
        rows.pop();
        return;
    }
    let needed = row_len - choice.len();
    for i in from..=remaining.len().saturating_sub(needed) {
        choice.push(remaining[i]);
        choose_row(shape, remaining, row_len, i + 1, choice, rows, out);
        choice.pop();
    }
}

/// For each tabloid, the index of its image under the point map `g`.
fn action_indices(tabloids: &[Vec<Vec<u8>>], g: &[usize]) -> Vec<usize> {
    tabloids
        .iter()
        .map(|t| {
            let image = apply_points(t, g);
            tabloids
                .binary_search(&image)
                .expect("the image of a tabloid is a tabloid of the same shape")
        })
        .collect()
}

fn apply_points(tabloid: &[Vec<u8>], g: &[usize]) -> Vec<Vec<u8>> {
    tabloid
        .iter()
        .map(|row| {
            let mut out: Vec<u8> = row.iter().map(|&p| g[p as usize] as u8).collect();
            out.sort_unstable();
            out
        })
        .collect()
}
