use combinat::{hook_length_count, Partition};
use gf2core::EchelonBuilder;
use youngcat::YoungCatalog;

use crate::algebra::{cartan_matrix, BasicAlgebra};
use crate::amodule::{projective_A, quotient_amodule, AModule};
use crate::SchurError;

/// The standard module Delta(lam): the quotient of P(lam) by the trace of
/// every P(nu) whose label is not dominated by `lam`. Its composition
/// factors all lie in the dominance down-set of `lam`, with the label
/// itself occurring exactly once, at the top.
///
/// # Errors
/// Returns an error if the quotient keeps a factor outside the down-set.
///
/// # Panics
/// Panics if `lam` is not a shape of the algebra's degree.
pub fn weyl_module(a: &BasicAlgebra, lam: &Partition) -> Result<AModule, SchurError> {
    let i = a.shape_index(lam);
    let projective = projective_A(a, lam);
    let range = a.row_range(i);
    // The trace of P(nu) in P(lam) is spanned by all composites of a basis
    // element lam -> nu with a basis element out of nu; collect the spans
    // in full coefficient coordinates, then restrict to the row ideal.
    let mut builder = EchelonBuilder::new(a.dim());
    for (j, nu) in a.shapes.iter().enumerate() {
        if lam.dominates(nu) {
            continue;
        }
        for u in a.offset(i, j)..a.offset(i, j) + a.count(i, j) {
            for b in a.row_range(j) {
                builder.push(&a.structure_constants[b].row_vec(u));
            }
        }
    }
    let full = builder.finish().rref;
    let kernel = full.columns(range.start, range.end);
    let delta = quotient_amodule(a, &projective, &kernel);
    for (mu, count) in &delta.idempotent_dims {
        if *count > 0 && !lam.dominates(mu) {
            return Err(SchurError::DominanceViolation {
                shape: lam.to_string(),
                factor: mu.to_string(),
            });
        }
    }
    assert_eq!(
        delta.idempotent_dims[lam], 1,
        "standard module carries its own label exactly once"
    );
    Ok(delta)
}

/// Decomposition matrix: entry (i, j) is the multiplicity of the j-th
/// simple in the i-th standard module. Validated against the Cartan
/// identity transpose(D)*D == C before being returned.
///
/// # Errors
/// Propagates standard-module errors and reports a failed Cartan identity.
pub fn decomposition_matrix(a: &BasicAlgebra) -> Result<Vec<Vec<usize>>, SchurError> {
    let s = a.shapes.len();
    let mut dmat = vec![vec![0usize; s]; s];
    for (i, lam) in a.shapes.iter().enumerate() {
        let delta = weyl_module(a, lam)?;
        for (j, mu) in a.shapes.iter().enumerate() {
            dmat[i][j] = delta.idempotent_dims[mu];
        }
    }
    let cartan = cartan_matrix(a);
    for i in 0..s {
        for j in 0..s {
            let product: usize = (0..s).map(|k| dmat[k][i] * dmat[k][j]).sum();
            if product != cartan[i][j] {
                return Err(SchurError::CartanIdentity);
            }
        }
    }
    Ok(dmat)
}

/// Multiplicities of the Specht factors in the Specht filtration of the
/// Young module of `lam`: the multiplicity of the mu-factor equals the
/// multiplicity of Delta(mu) in a standard filtration of P(lam), which by
/// reciprocity is the (mu, lam) decomposition number. Validated against
/// the dimension of the Young module using standard-tableau counts.
///
/// # Errors
/// Propagates decomposition-matrix errors and reports a failed dimension
/// identity.
///
/// # Panics
/// Panics if `lam` is not a shape of the algebra's degree.
pub fn specht_filtration_multiplicities(
    a: &BasicAlgebra,
    catalog: &YoungCatalog,
    lam: &Partition,
) -> Result<Vec<(Partition, usize)>, SchurError> {
    let dmat = decomposition_matrix(a)?;
    let i = a.shape_index(lam);
    let mut mults = Vec::new();
    let mut total = 0usize;
    for (k, mu) in a.shapes.iter().enumerate() {
        let count = dmat[k][i];
        if count > 0 {
            let specht_dim = usize::try_from(hook_length_count(mu))
                .expect("Specht dimensions fit in usize");
            total += count * specht_dim;
            mults.push((mu.clone(), count));
        }
    }
    let expected = catalog.young(lam).dim;
    if total != expected {
        return Err(SchurError::SpechtDimension {
            shape: lam.to_string(),
            actual: total,
            expected,
        });
    }
    Ok(mults)
}
