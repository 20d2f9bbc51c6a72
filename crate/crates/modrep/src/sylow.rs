use std::collections::HashMap;

use combinat::{compose, identity, Perm};
use gf2core::BitMatrix;

use crate::module::GModule;
use crate::words::Evaluator;

/// Point permutations generating a Sylow 2-subgroup of the symmetric group
/// on `n` points, for `n` up to 7.
///
/// # Panics
/// Panics for `n` outside `1..=7`.
#[must_use]
pub fn sylow2_point_generators(n: usize) -> Vec<Perm> {
    let swap = |n: usize, a: usize, b: usize| {
        let mut p = identity(n);
        p.swap(a, b);
        p
    };
    let four_cycle = |n: usize| -> Perm {
        (0..n).map(|x| if x < 4 { (x + 1) % 4 } else { x }).collect()
    };
    match n {
        1 => Vec::new(),
        2 | 3 => vec![swap(n, 0, 1)],
        4 | 5 => vec![four_cycle(n), swap(n, 0, 2)],
        6 | 7 => vec![four_cycle(n), swap(n, 0, 2), swap(n, 4, 5)],
        _ => panic!("Sylow generators tabulated only for 1..=7 points, got {n}"),
    }
}

/// The order of that Sylow 2-subgroup: the 2-part of `n` factorial.
///
/// # Panics
/// Panics for `n` outside `1..=7`.
#[must_use]
pub fn sylow2_order(n: usize) -> usize {
    match n {
        1 => 1,
        2 | 3 => 2,
        4 | 5 => 8,
        6 | 7 => 16,
        _ => panic!("Sylow orders tabulated only for 1..=7 points, got {n}"),
    }
}

/// The action matrices of every element of the Sylow 2-subgroup, identity
/// included, enumerated breadth-first from the generators. The order of the
/// returned list is deterministic.
#[must_use]
pub fn restrict_to_sylow2(module: &GModule) -> Vec<BitMatrix> {
    let n = module.n;
    let evaluator = Evaluator::new(module);
    let gens: Vec<(Perm, BitMatrix)> = sylow2_point_generators(n)
        .into_iter()
        .map(|p| {
            let m = evaluator.matrix_of(&p);
            (p, m)
        })
        .collect();

    let mut elements: Vec<(Perm, BitMatrix)> =
        vec![(identity(n), BitMatrix::identity(module.dim))];
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(identity(n), ());
    let mut cursor = 0;
    while cursor < elements.len() {
        let (p, m) = (elements[cursor].0.clone(), elements[cursor].1.clone());
        cursor += 1;
        for (gp, gm) in &gens {
            let q = compose(&p, gp);
            if seen.insert(q.clone(), ()).is_none() {
                elements.push((q, m.mul(gm)));
            }
        }
    }
    assert_eq!(
        elements.len(),
        sylow2_order(n),
        "generator closure must have the tabulated order"
    );
    elements.into_iter().map(|(_, m)| m).collect()
}
