use crate::Partition;

/// All standard Young tableaux of shape `lambda`: fillings with `0..n` that
/// increase along rows and down columns. Entries are the 0-indexed points.
#[must_use]
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<u8>>> {
    let shape = lambda.parts();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.len()];
    place(0, lambda.n() as u8, shape, &mut rows, &mut out);
    out
}

fn place(value: u8, n: u8, shape: &[usize], rows: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
    if value == n {
        out.push(rows.clone());
        return;
    }
    for r in 0..shape.len() {
        let filled = rows[r].len();
        let room = filled < shape[r];
        let supported = r == 0 || rows[r - 1].len() > filled;
        if room && supported {
            rows[r].push(value);
            place(value + 1, n, shape, rows, out);
            rows[r].pop();
        }
    }
}

/// The number of standard tableaux of shape `lambda`, by the hook length
/// formula. Only intended for the small shapes this workspace handles.
///
/// # Panics
/// Panics if intermediate factorials overflow, which cannot happen for the
/// shapes of at most 20 cells accepted here.
#[must_use]
pub fn hook_length_count(lambda: &Partition) -> u64 {
    let n = lambda.n();
    assert!(n <= 20, "hook length factorials computed in u64");
    let conj = lambda.conjugate();
    let mut product = 1u64;
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 0..len {
            let hook = (len - j) + (conj.parts()[j] - i) - 1;
            product = product.checked_mul(hook as u64).expect("hook product fits");
        }
    }
    let factorial: u64 = (1..=n as u64).product();
    assert_eq!(factorial % product, 0, "hook product divides n!");
    factorial / product
}
