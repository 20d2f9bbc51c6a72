//! Tensor constructions for the projective Young modules whose
//! permutation modules are too large to split directly, and the
//! 2-dimensional uniserial trivial self-extension they tensor with.

use combinat::Partition;
use gf2core::{BitMatrix, EchelonBuilder};
use homspace::{
    cotrace_into, fitting_decompose, hom_basis, homs_into_subspace, restrict_homs_to_summand,
    rng, split_off, trace_from,
};
use modrep::{simple_module, simples_catalog, GModule, ModuleKind};
use structure::{is_projective, radical_socle_series};

use crate::build::certify_entry;
use crate::{BuildConfig, CatalogError, YoungCatalog};

enum RightFactor {
    /// The 2-dimensional uniserial trivial self-extension.
    Uniserial,
    /// A simple module.
    Simple(Partition),
}

enum Recipe {
    /// The whole tensor product is the Young module.
    Whole { left: Partition, right: RightFactor },
    /// The Young module is the summand left over after peeling every
    /// other projective off the tensor product.
    Split { left: Partition, right: RightFactor },
}

fn recipe_for(n: usize, target: &Partition) -> Option<Recipe> {
    let p = |text: &str| text.parse::<Partition>().expect("recipe shapes parse");
    match (n, format!("{target}").as_str()) {
        (6, "2,1,1,1,1") => Some(Recipe::Whole {
            left: p("4,1,1"),
            right: RightFactor::Uniserial,
        }),
        (6, "1,1,1,1,1,1") => Some(Recipe::Whole {
            left: p("3,1,1,1"),
            right: RightFactor::Uniserial,
        }),
        (7, "2,1,1,1,1,1") => Some(Recipe::Whole {
            left: p("4,1,1,1"),
            right: RightFactor::Uniserial,
        }),
        (7, "2,2,1,1,1") => Some(Recipe::Split {
            left: p("3,2,1,1"),
            right: RightFactor::Simple(p("6,1")),
        }),
        (7, "1,1,1,1,1,1,1") => Some(Recipe::Split {
            left: p("2,1,1,1,1,1"),
            right: RightFactor::Simple(p("6,1")),
        }),
        _ => None,
    }
}

/// Whether the tensor route builds this shape as a whole product rather
/// than by peeling. Used to order the tensor pass so prerequisites are
/// ready.
pub(crate) fn has_whole_recipe(n: usize, target: &Partition) -> bool {
    matches!(recipe_for(n, target), Some(Recipe::Whole { .. }))
}

/// One-line description of the construction route for provenance logs.
pub(crate) fn describe_recipe(n: usize, target: &Partition) -> String {
    match recipe_for(n, target) {
        Some(Recipe::Whole { left, right }) => match right {
            RightFactor::Uniserial => format!("tensor-whole(Y[{left}] (x) U)"),
            RightFactor::Simple(s) => format!("tensor-whole(Y[{left}] (x) D[{s}])"),
        },
        Some(Recipe::Split { left, right }) => match right {
            RightFactor::Uniserial => format!("tensor-split(Y[{left}] (x) U)"),
            RightFactor::Simple(s) => format!("tensor-split(Y[{left}] (x) D[{s}])"),
        },
        None => "split".to_string(),
    }
}

/// Construct the projective Young module `Y^target` without touching
/// `M^target`.
///
/// If the catalog already holds the entry it is returned as-is (after a
/// projectivity check). Otherwise a configured tensor product is formed
/// and, when the recipe says so, every other projective summand is
/// peeled off by head multiplicities. The result is certified
/// projective, indecomposable, self-dual, and to have the simple head
/// `D` labeled by the conjugate partition.
///
/// # Errors
///
/// Fails if `target` is not column 2-regular, no recipe is configured,
/// a prerequisite entry is missing, or any certification fails.
pub fn projective_young(
    n: usize,
    target: &Partition,
    catalog: &YoungCatalog,
    config: &BuildConfig,
) -> Result<GModule, CatalogError> {
    if !target.is_column_two_regular() {
        return Err(CatalogError::NotColumnRegular {
            shape: target.to_string(),
        });
    }
    if let Some(existing) = catalog.entries.get(target) {
        if !is_projective(existing) {
            return Err(CatalogError::TensorNotProjective {
                shape: target.to_string(),
            });
        }
        return Ok(existing.clone());
    }
    let Some(recipe) = recipe_for(n, target) else {
        return Err(CatalogError::MissingRecipe {
            n,
            shape: target.to_string(),
        });
    };

    let lookup = |shape: &Partition| -> Result<&GModule, CatalogError> {
        catalog
            .entries
            .get(shape)
            .ok_or_else(|| CatalogError::MissingPrerequisite {
                shape: target.to_string(),
                missing: format!("Y[{shape}]"),
            })
    };
    let product = match &recipe {
        Recipe::Whole { left, right } | Recipe::Split { left, right } => {
            let left_module = lookup(left)?;
            let right_module = match right {
                RightFactor::Uniserial => build_uniserial_u(n, catalog)?,
                RightFactor::Simple(shape) => simple_module(shape),
            };
            left_module.tensor(&right_module)
        }
    };

    let raw = match recipe {
        Recipe::Whole { .. } => product,
        Recipe::Split { .. } => peel_to_target(n, target, product, catalog, config)?,
    };
    let young = GModule::new(
        raw.n,
        raw.gen_s,
        raw.gen_c,
        Some((ModuleKind::Young, target.clone())),
    );

    if !is_projective(&young) {
        return Err(CatalogError::TensorNotProjective {
            shape: target.to_string(),
        });
    }
    let head = target.conjugate();
    for (sigma, simple) in simples_catalog(n) {
        let expected = usize::from(sigma == head);
        if hom_basis(&young, &simple).maps.len() != expected {
            return Err(CatalogError::MissingProjectiveSummand {
                shape: target.to_string(),
                top: format!("D[{head}]"),
            });
        }
    }
    certify_entry(&young, target, config)?;
    Ok(young)
}

/// Peel every projective summand with the wrong head off the product;
/// what remains is the target Young module.
fn peel_to_target(
    n: usize,
    target: &Partition,
    product: GModule,
    catalog: &YoungCatalog,
    config: &BuildConfig,
) -> Result<GModule, CatalogError> {
    if !is_projective(&product) {
        return Err(CatalogError::TensorNotProjective {
            shape: target.to_string(),
        });
    }
    let head = target.conjugate();
    let mut remainder_rows = BitMatrix::identity(product.dim);
    let mut target_count = 0usize;

    for (sigma, simple) in simples_catalog(n) {
        let count = hom_basis(&product, &simple).maps.len();
        if sigma == head {
            target_count = count;
            continue;
        }
        if count == 0 {
            continue;
        }
        let other_shape = sigma.conjugate();
        let other = catalog.entries.get(&other_shape).ok_or_else(|| {
            CatalogError::MissingPrerequisite {
                shape: target.to_string(),
                missing: format!("Y[{other_shape}]"),
            }
        })?;
        let into_product = hom_basis(other, &product);
        let onto_other = hom_basis(&product, other);
        for _ in 0..count {
            let into_rem = homs_into_subspace(&into_product, &remainder_rows);
            let onto_from_rem = restrict_homs_to_summand(&onto_other, &remainder_rows);
            let split = split_off(&into_rem, &onto_from_rem).ok_or_else(|| {
                CatalogError::MissingProjectiveSummand {
                    shape: target.to_string(),
                    top: format!("D[{sigma}]"),
                }
            })?;
            remainder_rows = split.complement.mul(&remainder_rows).echelonize().rref;
        }
    }
    if target_count == 0 {
        return Err(CatalogError::MissingProjectiveSummand {
            shape: target.to_string(),
            top: format!("D[{head}]"),
        });
    }

    let remainder = product.sub_and_quotient(&remainder_rows).sub;
    if target_count == 1 {
        return Ok(remainder);
    }
    // Several copies of the target are left; random splitting separates
    // isomorphic summands, and any one of them is the module we want.
    assert_eq!(
        remainder.dim % target_count,
        0,
        "the remainder must consist of {target_count} equal summands"
    );
    let mut rng = rng::stream(config.seed, "tensor-copies", &format!("{n}:{target}"));
    let pieces = fitting_decompose(&remainder, &mut rng, config.trials);
    let copy_dim = remainder.dim / target_count;
    let piece = pieces
        .into_iter()
        .find(|p| p.module.dim == copy_dim)
        .ok_or_else(|| CatalogError::NotIndecomposable {
            shape: target.to_string(),
            details: format!("could not isolate one of {target_count} equal summands"),
        })?;
    Ok(piece.module)
}

/// Construct the 2-dimensional uniserial module with two trivial
/// composition factors, as a section of the configured source module:
/// a fixed cotrace/trace recipe inside `Y^[5,1,1]` at degree 7 and a
/// search through sections of `Y^[3,1,1,1]` at degree 6.
///
/// # Errors
///
/// Fails for degrees other than 6 and 7, when the source entry is not in
/// the catalog yet, or when no suitable section exists.
pub fn build_uniserial_u(n: usize, catalog: &YoungCatalog) -> Result<GModule, CatalogError> {
    match n {
        7 => uniserial_from_cotrace(catalog),
        6 => uniserial_from_sections(catalog),
        other => Err(CatalogError::UnsupportedUniserialDegree(other)),
    }
}

fn uniserial_from_cotrace(catalog: &YoungCatalog) -> Result<GModule, CatalogError> {
    let source_shape: Partition = "5,1,1".parse().expect("shape parses");
    let source = catalog.entries.get(&source_shape).ok_or_else(|| {
        CatalogError::MissingPrerequisite {
            shape: "uniserial".to_string(),
            missing: format!("Y[{source_shape}]"),
        }
    })?;
    let d52 = simple_module(&"5,2".parse().expect("shape parses"));
    // Kill the non-trivial head, then quotient out the non-trivial socle
    // of what is left: two trivial factors glued together remain.
    let without_head = source.sub_and_quotient(&cotrace_into(source, &d52)).sub;
    let socle_part = trace_from(&d52, &without_head);
    let section = without_head.sub_and_quotient(&socle_part).quot;
    if is_uniserial_double_trivial(&section) {
        Ok(section)
    } else {
        Err(CatalogError::SectionNotFound { n: 7 })
    }
}

fn uniserial_from_sections(catalog: &YoungCatalog) -> Result<GModule, CatalogError> {
    let sources = ["3,1,1,1", "2,2,2"];
    let simples: Vec<GModule> = simples_catalog(6).into_iter().map(|(_, m)| m).collect();
    let non_trivial: Vec<&GModule> = simples.iter().filter(|m| m.dim > 1).collect();
    let mut found_source = false;

    for shape_text in sources {
        let shape: Partition = shape_text.parse().expect("shape parses");
        let Some(source) = catalog.entries.get(&shape) else {
            continue;
        };
        found_source = true;
        let series = radical_socle_series(source, &simples)
            .expect("the simple catalog covers every factor of a Young module");
        // Candidate window boundaries: every term of the radical and socle
        // chains is an invariant subspace. A section between two nested
        // boundaries isolates a band of layers; stripping the non-trivial
        // part of its socle then exposes any trivial-over-trivial gluing.
        let mut boundaries: Vec<&BitMatrix> = Vec::new();
        boundaries.extend(series.rad_chain.iter());
        boundaries.extend(series.soc_chain.iter());
        for outer in &boundaries {
            if outer.rows() < 2 {
                continue;
            }
            for inner in &boundaries {
                if inner.rows() + 2 > outer.rows() || !spans_contain(outer, inner) {
                    continue;
                }
                let window = cut_window(source, outer, inner);
                if let Some(section) = strip_and_search(window, &non_trivial) {
                    return Ok(section);
                }
            }
        }
    }
    if !found_source {
        return Err(CatalogError::MissingPrerequisite {
            shape: "uniserial".to_string(),
            missing: "Y[3,1,1,1] or Y[2,2,2]".to_string(),
        });
    }
    Err(CatalogError::SectionNotFound { n: 6 })
}

/// Whether the row space of `inner` lies inside the row space of `outer`.
fn spans_contain(outer: &BitMatrix, inner: &BitMatrix) -> bool {
    let mut span = EchelonBuilder::new(outer.cols());
    for r in 0..outer.rows() {
        span.push(&outer.row_vec(r));
    }
    (0..inner.rows()).all(|r| span.contains(&inner.row_vec(r)))
}

/// The section module `outer / inner` for nested invariant subspaces given
/// by echelon bases in ambient coordinates.
fn cut_window(m: &GModule, outer: &BitMatrix, inner: &BitMatrix) -> GModule {
    let restricted = m.sub_and_quotient(outer);
    let pivots = restricted.inclusion.echelonize().pivots;
    let inner_coords = BitMatrix::from_fn(inner.rows(), pivots.len(), |i, j| {
        inner.get(i, pivots[j])
    });
    restricted.sub.sub_and_quotient(&inner_coords).quot
}

/// Alternately search a module for a trivial self-extension submodule and
/// strip the non-trivial part of its socle, which promotes new vectors
/// into the fixed space without cutting trivial strands.
fn strip_and_search(start: GModule, non_trivial: &[&GModule]) -> Option<GModule> {
    let mut stage = start;
    loop {
        if let Some(section) = double_trivial_section(&stage) {
            return Some(section);
        }
        let mut killed = EchelonBuilder::new(stage.dim);
        for simple in non_trivial {
            let image = trace_from(simple, &stage);
            for r in 0..image.rows() {
                killed.push(&image.row_vec(r));
            }
        }
        let kill_rows = killed.finish().rref;
        if kill_rows.rows() == 0 || stage.dim - kill_rows.rows() < 2 {
            return None;
        }
        stage = stage.sub_and_quotient(&kill_rows).quot;
    }
}

/// Search one module for a subquotient isomorphic to the non-split
/// self-extension of the trivial module. A vector `v` outside the fixed
/// space whose generator moves `v*(g+1)` land inside the fixed space
/// spans such a section together with those moves.
fn double_trivial_section(ambient: &GModule) -> Option<GModule> {
    let fixed = fixed_subspace(ambient);
    if fixed.rows() == 0 || fixed.rows() == ambient.dim {
        return None;
    }
    let identity = BitMatrix::identity(ambient.dim);
    let s_move = ambient.gen_s.add(&identity);
    let c_move = ambient.gen_c.add(&identity);
    let projection = ambient.sub_and_quotient(&fixed).projection;
    let constraints = s_move.mul(&projection).hstack(&c_move.mul(&projection));
    let candidates = constraints.transpose().echelonize().nullspace;

    let mut fixed_span = EchelonBuilder::new(ambient.dim);
    for r in 0..fixed.rows() {
        fixed_span.push(&fixed.row_vec(r));
    }
    for r in 0..candidates.rows() {
        let v = candidates.row_vec(r);
        if fixed_span.contains(&v) {
            continue;
        }
        let move_s = s_move.row_mul(&v);
        let move_c = c_move.row_mul(&v);
        let mut span = EchelonBuilder::new(ambient.dim);
        span.push(&v);
        span.push(&move_s);
        span.push(&move_c);
        let sub_rows = span.finish().rref;
        let sub = ambient.sub_and_quotient(&sub_rows).sub;
        let section = match sub.dim {
            2 => sub,
            3 => {
                // Both moves are non-zero and independent; kill their sum
                // to leave a single move shared by the two generators.
                let echelon = sub_rows.echelonize();
                let mut sum = move_s.clone();
                sum.xor_assign(&move_c);
                let in_sub =
                    BitMatrix::from_fn(1, 3, |_, j| sum.get(echelon.pivots[j]));
                sub.sub_and_quotient(&in_sub).quot
            }
            _ => continue,
        };
        if is_uniserial_double_trivial(&section) {
            return Some(section);
        }
    }
    None
}

/// A 2-dimensional module with a 1-dimensional fixed space has two
/// trivial composition factors glued non-trivially.
fn is_uniserial_double_trivial(m: &GModule) -> bool {
    m.dim == 2 && fixed_subspace(m).rows() == 1
}

/// Echelon basis of the subspace of vectors fixed by the whole group.
fn fixed_subspace(m: &GModule) -> BitMatrix {
    let identity = BitMatrix::identity(m.dim);
    let s_move = m.gen_s.add(&identity).transpose();
    let c_move = m.gen_c.add(&identity).transpose();
    BitMatrix::vstack(m.dim, &[&s_move, &c_move])
        .echelonize()
        .nullspace
        .echelonize()
        .rref
}

/// The abelianization of the symmetric group gives an explicit model of
/// the trivial self-extension: both generators act as the 2x2 unipotent
/// Jordan block when they are odd permutations and trivially when even.
/// Used by tests as an independent oracle for `build_uniserial_u`.
pub fn parity_extension_module(n: usize) -> GModule {
    assert!(n >= 2, "the sign character needs at least two points");
    let odd_cycle = n % 2 == 0;
    let jordan = |odd: bool| {
        BitMatrix::from_fn(2, 2, |i, j| i == j || (odd && i == 0 && j == 1))
    };
    GModule::new(n, jordan(true), jordan(odd_cycle), None)
}
