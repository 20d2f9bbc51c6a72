//! Cross-checks on a finished catalog: structural invariants that do not
//! depend on how the entries were constructed.

use homspace::{iso_test, rng};
use modrep::simples_catalog;
use structure::is_projective;

use crate::{permutation_dim, YoungCatalog};

/// Outcome of one verification rule.
#[derive(Debug)]
pub struct VerifyCheck {
    /// Short rule name.
    pub name: String,
    /// Whether the rule held for every entry it applies to.
    pub passed: bool,
    /// Counterexamples, one line each; empty when the rule passed.
    pub details: Vec<String>,
}

/// Results of [`verify_catalog`], one entry per rule.
#[derive(Debug)]
pub struct VerifyReport {
    /// All rule outcomes, in a fixed order.
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    /// Whether every rule passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|check| check.passed)
    }

    /// All counterexample lines across failing rules.
    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|check| !check.passed)
            .flat_map(|check| {
                check
                    .details
                    .iter()
                    .map(move |line| format!("{}: {line}", check.name))
            })
            .collect()
    }
}

/// Check the catalog-wide invariants: self-duality of every entry, the
/// unitriangular dominance shape of the Kostka matrix, the dimension
/// identity for every permutation module, the match between projectivity
/// and column 2-regularity, and the regular-module dimension count.
pub fn verify_catalog(catalog: &YoungCatalog, seed: u64) -> VerifyReport {
    let mut checks = Vec::new();
    let shapes = catalog.shapes();
    let simples = simples_catalog(catalog.n);

    let mut self_dual = Vec::new();
    for shape in &shapes {
        let young = catalog.young(shape);
        let mut rng = rng::stream(seed, "verify-self-dual", &format!("{}:{shape}", catalog.n));
        if iso_test(young, &young.dual(), &mut rng, 200).is_none() {
            self_dual.push(format!("Y[{shape}] is not isomorphic to its dual"));
        }
    }
    checks.push(check("self-duality", self_dual));

    let mut diagonal = Vec::new();
    for shape in &shapes {
        let count = catalog.kostka(shape, shape);
        if count != 1 {
            diagonal.push(format!("kostka({shape}, {shape}) = {count}, expected 1"));
        }
    }
    checks.push(check("kostka-diagonal", diagonal));

    let mut dominance = Vec::new();
    for ((row, col), &count) in &catalog.kostka {
        if count > 0 && !row.dominates(col) {
            dominance.push(format!(
                "kostka({row}, {col}) = {count} although {row} does not dominate {col}"
            ));
        }
    }
    checks.push(check("kostka-dominance", dominance));

    let mut dims = Vec::new();
    for col in &shapes {
        let total: usize = shapes
            .iter()
            .map(|row| catalog.kostka(row, col) * catalog.young(row).dim)
            .sum();
        let expected = permutation_dim(col);
        if total != expected {
            dims.push(format!(
                "column {col} sums to {total}, but dim M^{col} = {expected}"
            ));
        }
    }
    checks.push(check("dimension-identity", dims));

    let mut projectivity = Vec::new();
    for shape in &shapes {
        let projective = is_projective(catalog.young(shape));
        let column_regular = shape.is_column_two_regular();
        if projective != column_regular {
            projectivity.push(format!(
                "Y[{shape}]: projective = {projective}, column 2-regular = {column_regular}"
            ));
        }
    }
    checks.push(check("projectivity-set", projectivity));

    let mut regular = Vec::new();
    let mut total = 0usize;
    for shape in &shapes {
        if !shape.is_column_two_regular() {
            continue;
        }
        let conjugate = shape.conjugate();
        match simples.iter().find(|(sigma, _)| *sigma == conjugate) {
            Some((_, simple)) => total += simple.dim * catalog.young(shape).dim,
            None => regular.push(format!("no simple module labeled {conjugate}")),
        }
    }
    let order: usize = (1..=catalog.n).product();
    if total != order {
        regular.push(format!(
            "projective entries weighted by head dimensions sum to {total}, expected {order}"
        ));
    }
    checks.push(check("regular-module-dimension", regular));

    VerifyReport { checks }
}

fn check(name: &str, details: Vec<String>) -> VerifyCheck {
    VerifyCheck {
        name: name.to_string(),
        passed: details.is_empty(),
        details,
    }
}
