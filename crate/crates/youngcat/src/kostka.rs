//! Kostka columns for permutation modules that were never decomposed
//! explicitly: multiplicities come from the rank of the composition
//! pairing, and the column of the regular module from the dimensions of
//! the simple heads of the projective entries.

use combinat::Partition;
use homspace::{hom_basis, summand_multiplicity};
use modrep::{perm_module, simple_module};

use crate::YoungCatalog;

/// Kostka column of a shape handled by the tensor route. Only non-zero
/// entries are returned.
///
/// For the regular module (`mu` all ones) the column is the list of head
/// dimensions: `M^[1^n]` is the regular module, so each projective
/// `Y^lambda` occurs as often as its simple head is a composition factor
/// of the head of the regular module, which is `dim D^{lambda'}`;
/// non-projective entries do not occur at all. Every other column is
/// computed as the rank of the pairing between `Hom(Y^lambda, M^mu)` and
/// `Hom(M^mu, Y^lambda)`.
pub(crate) fn wide_column(mu: &Partition, catalog: &YoungCatalog) -> Vec<(Partition, usize)> {
    if mu.parts().iter().all(|&part| part == 1) {
        return regular_column(catalog);
    }
    let m = perm_module(mu);
    let mut column = Vec::new();
    for (lambda, young) in &catalog.entries {
        if !lambda.dominates(mu) {
            continue;
        }
        let into_m = hom_basis(young, &m);
        let onto_y = hom_basis(&m, young);
        let count = summand_multiplicity(&into_m, &onto_y);
        if count > 0 {
            column.push((lambda.clone(), count));
        }
    }
    column
}

fn regular_column(catalog: &YoungCatalog) -> Vec<(Partition, usize)> {
    let mut column = Vec::new();
    let mut total = 0usize;
    for lambda in catalog.entries.keys() {
        if !lambda.is_column_two_regular() {
            continue;
        }
        let head_dim = simple_module(&lambda.conjugate()).dim;
        column.push((lambda.clone(), head_dim));
        total += head_dim * catalog.entries[lambda].dim;
    }
    let order: usize = (1..=catalog.n).product();
    assert_eq!(
        total, order,
        "projective entries weighted by their head dimensions must fill the regular module"
    );
    column
}
