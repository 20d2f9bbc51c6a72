//! Catalog construction: the split route for small permutation modules
//! and the orchestration of the tensor route for the large ones.

use std::collections::BTreeMap;

use combinat::{partitions_desc, Partition};
use gf2core::BitMatrix;
use homspace::{
    fitting_decompose, hom_basis, homs_into_subspace, iso_test, restrict_homs_to_summand, rng,
    split_off, summand_multiplicity,
};
use modrep::{perm_module, GModule, ModuleKind};

use crate::{cache, kostka, permutation_dim, tensor, BuildConfig, CatalogError, YoungCatalog};

/// Build the full catalog of Young modules and Kostka numbers for the
/// symmetric group of the given degree.
///
/// Shapes whose permutation module stays within `config.split_threshold`
/// are handled by peeling known summands off `M^mu`; the remaining new
/// summand is `Y^mu`. Larger shapes get their module from a tensor
/// construction and their Kostka column from composition-pairing ranks.
/// When `config.cache_dir` is set, a previously saved catalog for the
/// same degree is loaded instead of rebuilt, and a fresh build is saved.
///
/// # Errors
///
/// Fails if the degree is outside `1..=7`, if any certification step
/// (indecomposability, self-duality, projectivity of tensor products)
/// fails, or if the cache directory cannot be read or written.
pub fn build_catalog(n: usize, config: &BuildConfig) -> Result<YoungCatalog, CatalogError> {
    if !(1..=7).contains(&n) {
        return Err(CatalogError::UnsupportedDegree(n));
    }
    if let Some(dir) = &config.cache_dir {
        if let Some(catalog) = cache::try_load(n, dir)? {
            return Ok(catalog);
        }
    }

    let mut catalog = YoungCatalog {
        n,
        entries: BTreeMap::new(),
        kostka: BTreeMap::new(),
        provenance: BTreeMap::new(),
    };
    let mut built_order: Vec<Partition> = Vec::new();
    let mut wide: Vec<Partition> = Vec::new();

    for mu in partitions_desc(n) {
        if permutation_dim(&mu) > config.split_threshold {
            wide.push(mu);
            continue;
        }
        let (young, column) = split_route(&mu, &built_order, &catalog, config)?;
        for (lambda, count) in column {
            catalog.kostka.insert((lambda, mu.clone()), count);
        }
        catalog.provenance.insert(mu.clone(), "split".to_string());
        catalog.entries.insert(mu.clone(), young);
        built_order.push(mu);
    }

    // Tensor pass: whole-product recipes first, then the ones that peel
    // other projectives off a product, so every prerequisite is ready.
    let mut tensor_order = wide.clone();
    tensor_order.sort_by(|a, b| {
        let whole_a = tensor::has_whole_recipe(n, a);
        let whole_b = tensor::has_whole_recipe(n, b);
        whole_b.cmp(&whole_a).then_with(|| b.cmp(a))
    });
    for mu in &tensor_order {
        let young = tensor::projective_young(n, mu, &catalog, config)?;
        let route = tensor::describe_recipe(n, mu);
        catalog.provenance.insert(mu.clone(), route);
        catalog.entries.insert(mu.clone(), young);
        built_order.push(mu.clone());
    }

    // Kostka columns for the wide shapes, now that every row is present.
    for mu in &wide {
        let column = kostka::wide_column(mu, &catalog);
        for (lambda, count) in column {
            catalog.kostka.insert((lambda, mu.clone()), count);
        }
    }

    if let Some(dir) = &config.cache_dir {
        cache::save(&catalog, dir)?;
    }
    Ok(catalog)
}

/// Decompose `M^mu` by splitting off every previously built Young module
/// as often as the composition pairing allows; the remainder is the new
/// `Y^mu`. Returns the module together with its Kostka column.
fn split_route(
    mu: &Partition,
    built_order: &[Partition],
    catalog: &YoungCatalog,
    config: &BuildConfig,
) -> Result<(GModule, Vec<(Partition, usize)>), CatalogError> {
    let m = perm_module(mu);
    let mut remainder_rows = BitMatrix::identity(m.dim);
    let mut remainder_dim = m.dim;
    let mut column = Vec::new();

    for lambda in built_order {
        let young = &catalog.entries[lambda];
        let into_m = hom_basis(young, &m);
        let onto_y = hom_basis(&m, young);
        let count = summand_multiplicity(&into_m, &onto_y);
        if count == 0 {
            continue;
        }
        assert!(
            lambda.dominates(mu),
            "Y^{lambda} appeared in M^{mu} without dominance"
        );
        for _ in 0..count {
            let into_rem = homs_into_subspace(&into_m, &remainder_rows);
            let onto_from_rem = restrict_homs_to_summand(&onto_y, &remainder_rows);
            let split = split_off(&into_rem, &onto_from_rem)
                .expect("the pairing rank promised another copy to split off");
            remainder_rows = split.complement.mul(&remainder_rows).echelonize().rref;
        }
        remainder_dim -= count * young.dim;
        assert_eq!(
            remainder_rows.rows(),
            remainder_dim,
            "dimension bookkeeping drifted while splitting M^{mu}"
        );
        column.push((lambda.clone(), count));
    }

    let raw = m.sub_and_quotient(&remainder_rows).sub;
    let young = GModule::new(
        raw.n,
        raw.gen_s,
        raw.gen_c,
        Some((ModuleKind::Young, mu.clone())),
    );
    certify_entry(&young, mu, config)?;
    column.push((mu.clone(), 1));
    Ok((young, column))
}

/// Certify that a finished catalog entry is indecomposable (by repeated
/// failed Fitting splits) and self-dual.
pub(crate) fn certify_entry(
    young: &GModule,
    mu: &Partition,
    config: &BuildConfig,
) -> Result<(), CatalogError> {
    let mut rng = rng::stream(config.seed, "certify-fitting", &format!("{}:{mu}", young.n));
    let pieces = fitting_decompose(young, &mut rng, config.trials);
    if pieces.len() != 1 {
        let dims: Vec<usize> = pieces.iter().map(|p| p.module.dim).collect();
        return Err(CatalogError::NotIndecomposable {
            shape: mu.to_string(),
            details: format!("random splitting found summands of dimensions {dims:?}"),
        });
    }
    if !pieces[0].certain && pieces[0].failed_trials < config.trials {
        return Err(CatalogError::NotIndecomposable {
            shape: mu.to_string(),
            details: format!(
                "only {} of {} splitting attempts were run",
                pieces[0].failed_trials, config.trials
            ),
        });
    }
    let mut rng = rng::stream(config.seed, "certify-dual", &format!("{}:{mu}", young.n));
    if iso_test(young, &young.dual(), &mut rng, config.trials).is_none() {
        return Err(CatalogError::NotSelfDual {
            shape: mu.to_string(),
        });
    }
    Ok(())
}
