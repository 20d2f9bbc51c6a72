use std::collections::BTreeMap;

use combinat::Partition;
use gf2core::BitVec;
use homspace::rng;
use rand::RngCore;
use schuralg::{
    action_respects_structure, basic_algebra, blocks_and_fingerprint, cartan_matrix,
    decomposition_matrix, fingerprints_match, injectivity_check, module_radical_layers,
    projective_A, radical_and_quiver, specht_filtration_multiplicities, weyl_module,
    BasicAlgebra,
};
use youngcat::{build_catalog, BuildConfig, YoungCatalog};

fn p(text: &str) -> Partition {
    text.parse().expect("valid partition literal")
}

fn catalog(n: usize) -> YoungCatalog {
    let config = BuildConfig::default();
    build_catalog(n, &config).expect("catalog build succeeds")
}

fn algebra(n: usize) -> BasicAlgebra {
    basic_algebra(&catalog(n)).expect("basic algebra build succeeds")
}

fn layer_names(layers: &[BTreeMap<Partition, usize>]) -> Vec<Vec<(String, usize)>> {
    layers
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|(shape, count)| (shape.to_string(), *count))
                .collect()
        })
        .collect()
}

fn named_layers(spec: &[&[(&str, usize)]]) -> Vec<Vec<(String, usize)>> {
    spec.iter()
        .map(|layer| {
            let mut entries: Vec<(String, usize)> = layer
                .iter()
                .map(|&(name, count)| (name.to_string(), count))
                .collect();
            entries.sort();
            entries
        })
        .collect()
}

#[test]
fn algebra_dimensions_and_idempotents() {
    let expected_dims = [1usize, 5, 6, 41, 58];
    for n in 1..=5 {
        let a = algebra(n);
        assert_eq!(
            a.dim(),
            expected_dims[n - 1],
            "algebra dimension for degree {n}"
        );

        let mut total = BitVec::zeros(a.dim());
        for coeffs in a.idempotents.values() {
            total.xor_assign(coeffs);
        }
        for (e, tag) in a.tags.iter().enumerate() {
            let unit = BitVec::from_fn(a.dim(), |x| x == e);
            let left = a.multiply(&total, &unit);
            let right = a.multiply(&unit, &total);
            assert_eq!(left, unit, "left identity on ({:?})", tag);
            assert_eq!(right, unit, "right identity on ({:?})", tag);
        }

        for (lam, e_lam) in &a.idempotents {
            for (mu, e_mu) in &a.idempotents {
                let product = a.multiply(e_lam, e_mu);
                if lam == mu {
                    assert_eq!(&product, e_lam, "idempotent square at {lam}");
                } else {
                    assert!(
                        product.is_zero(),
                        "idempotents {lam} and {mu} must be orthogonal"
                    );
                }
            }
        }
    }
}

#[test]
fn multiplication_is_associative_and_respects_modules() {
    fn random_vec(r: &mut impl RngCore, dim: usize) -> BitVec {
        BitVec::from_fn(dim, |_| r.next_u64() % 2 == 1)
    }
    let cat = catalog(4);
    let a = basic_algebra(&cat).expect("basic algebra build succeeds");
    let mut randoms = rng::stream(0, "schur-assoc", "4");
    for _ in 0..200 {
        let x = random_vec(&mut randoms, a.dim());
        let y = random_vec(&mut randoms, a.dim());
        let z = random_vec(&mut randoms, a.dim());
        let left = a.multiply(&a.multiply(&x, &y), &z);
        let right = a.multiply(&x, &a.multiply(&y, &z));
        assert_eq!(left, right, "associativity on random triple");
    }

    for shape in &a.shapes {
        let module = projective_A(&a, shape);
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                assert!(
                    action_respects_structure(&a, &module, x, y),
                    "action of P({shape}) must respect the product of elements {x} and {y}"
                );
            }
        }
    }
}

#[test]
fn cartan_matrices_match_known_tables() {
    let fixtures: [(usize, Vec<Vec<usize>>); 5] = [
        (1, vec![vec![1]]),
        (2, vec![vec![1, 1], vec![1, 2]]),
        (3, vec![vec![1, 0, 1], vec![0, 1, 0], vec![1, 0, 2]]),
        (
            4,
            vec![
                vec![1, 1, 1, 0, 1],
                vec![1, 2, 2, 1, 2],
                vec![1, 2, 3, 2, 2],
                vec![0, 1, 2, 3, 2],
                vec![1, 2, 2, 2, 4],
            ],
        ),
        (
            5,
            vec![
                vec![1, 0, 1, 1, 0, 0, 1],
                vec![0, 1, 0, 0, 0, 1, 0],
                vec![1, 0, 2, 2, 1, 0, 2],
                vec![1, 0, 2, 3, 2, 0, 4],
                vec![0, 0, 1, 2, 3, 0, 4],
                vec![0, 1, 0, 0, 0, 2, 0],
                vec![1, 0, 2, 4, 4, 0, 8],
            ],
        ),
    ];
    for (n, expected) in &fixtures {
        let a = algebra(*n);
        let cartan = cartan_matrix(&a);
        assert_eq!(&cartan, expected, "Cartan matrix for degree {n}");
        for i in 0..cartan.len() {
            for j in 0..cartan.len() {
                assert_eq!(
                    cartan[i][j], cartan[j][i],
                    "Cartan matrix must be symmetric at ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn quiver_is_symmetric_with_zero_diagonal() {
    let a = algebra(5);
    let (chain, quiver) = radical_and_quiver(&a);
    assert!(
        chain.last().expect("nonempty radical chain").rows() == 0,
        "radical chain must terminate at zero"
    );
    for w in chain.windows(2) {
        assert!(
            w[0].rows() > w[1].rows(),
            "radical chain must strictly decrease"
        );
    }

    let mut arrows = Vec::new();
    for i in 0..quiver.len() {
        assert_eq!(quiver[i][i], 0, "no loops at {}", a.shapes[i]);
        for j in 0..quiver.len() {
            assert_eq!(quiver[i][j], quiver[j][i], "quiver must be symmetric");
            if i < j && quiver[i][j] != 0 {
                arrows.push((a.shapes[i].to_string(), a.shapes[j].to_string(), quiver[i][j]));
            }
        }
    }
    let expected = vec![
        ("5".to_string(), "3,2".to_string(), 1),
        ("4,1".to_string(), "2,1,1,1".to_string(), 1),
        ("3,2".to_string(), "3,1,1".to_string(), 1),
        ("3,1,1".to_string(), "1,1,1,1,1".to_string(), 1),
        ("2,2,1".to_string(), "1,1,1,1,1".to_string(), 1),
    ];
    assert_eq!(arrows, expected, "quiver arrows for degree 5");
}

#[test]
fn projective_layers_match_known_diagrams() {
    let a3 = algebra(3);
    let lone = module_radical_layers(&a3, &projective_A(&a3, &p("2,1")));
    assert_eq!(
        layer_names(&lone),
        named_layers(&[&[("2,1", 1)]]),
        "P(2,1) at degree 3 is simple"
    );

    let a4 = algebra(4);
    let fixtures4: [(&str, Vec<&[(&str, usize)]>); 5] = [
        ("4", vec![&[("4", 1)], &[("2,2", 1)], &[("3,1", 1)], &[("1,1,1,1", 1)]]),
        (
            "3,1",
            vec![
                &[("3,1", 1)],
                &[("2,2", 1), ("1,1,1,1", 1)],
                &[("4", 1), ("2,1,1", 1)],
                &[("2,2", 1)],
                &[("3,1", 1)],
                &[("1,1,1,1", 1)],
            ],
        ),
        (
            "2,2",
            vec![
                &[("2,2", 1)],
                &[("4", 1), ("2,1,1", 1), ("3,1", 1)],
                &[("2,2", 2), ("1,1,1,1", 1)],
                &[("3,1", 1), ("2,1,1", 1)],
                &[("1,1,1,1", 1)],
            ],
        ),
        (
            "2,1,1",
            vec![
                &[("2,1,1", 1)],
                &[("2,2", 1), ("1,1,1,1", 1)],
                &[("2,1,1", 1), ("3,1", 1)],
                &[("2,2", 1), ("1,1,1,1", 1)],
                &[("2,1,1", 1)],
            ],
        ),
        (
            "1,1,1,1",
            vec![
                &[("1,1,1,1", 1)],
                &[("2,1,1", 1), ("3,1", 1)],
                &[("1,1,1,1", 2), ("2,2", 1)],
                &[("4", 1), ("2,1,1", 1)],
                &[("2,2", 1)],
                &[("3,1", 1)],
                &[("1,1,1,1", 1)],
            ],
        ),
    ];
    for (shape, expected) in &fixtures4 {
        let layers = module_radical_layers(&a4, &projective_A(&a4, &p(shape)));
        assert_eq!(
            layer_names(&layers),
            named_layers(expected),
            "layers of P({shape}) at degree 4"
        );
    }

    let a5 = algebra(5);
    let fixtures5: [(&str, Vec<&[(&str, usize)]>); 3] = [
        (
            "5",
            vec![&[("5", 1)], &[("3,2", 1)], &[("3,1,1", 1)], &[("1,1,1,1,1", 1)]],
        ),
        ("4,1", vec![&[("4,1", 1)], &[("2,1,1,1", 1)]]),
        (
            "3,2",
            vec![
                &[("3,2", 1)],
                &[("5", 1), ("3,1,1", 1)],
                &[("3,2", 1), ("1,1,1,1,1", 1)],
                &[("3,1,1", 1), ("2,2,1", 1)],
                &[("1,1,1,1,1", 1)],
            ],
        ),
    ];
    for (shape, expected) in &fixtures5 {
        let layers = module_radical_layers(&a5, &projective_A(&a5, &p(shape)));
        assert_eq!(
            layer_names(&layers),
            named_layers(expected),
            "layers of P({shape}) at degree 5"
        );
    }
}

#[test]
fn decomposition_matrices_match_known_tables() {
    let fixtures: [(usize, Vec<Vec<usize>>); 4] = [
        (2, vec![vec![1, 1], vec![0, 1]]),
        (3, vec![vec![1, 0, 1], vec![0, 1, 0], vec![0, 0, 1]]),
        (
            4,
            vec![
                vec![1, 1, 1, 0, 1],
                vec![0, 1, 1, 1, 1],
                vec![0, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 1],
            ],
        ),
        (
            5,
            vec![
                vec![1, 0, 1, 1, 0, 0, 1],
                vec![0, 1, 0, 0, 0, 1, 0],
                vec![0, 0, 1, 1, 1, 0, 1],
                vec![0, 0, 0, 1, 1, 0, 2],
                vec![0, 0, 0, 0, 1, 0, 1],
                vec![0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 1],
            ],
        ),
    ];
    for (n, expected) in &fixtures {
        let a = algebra(*n);
        let dmat = decomposition_matrix(&a).expect("decomposition matrix satisfies the Cartan identity");
        assert_eq!(&dmat, expected, "decomposition matrix for degree {n}");
        for (i, row) in dmat.iter().enumerate() {
            assert_eq!(row[i], 1, "unitriangular diagonal at {}", a.shapes[i]);
            for (j, &entry) in row.iter().enumerate() {
                if entry != 0 {
                    assert!(
                        a.shapes[i].dominates(&a.shapes[j]),
                        "support of row {} must lie below it in dominance",
                        a.shapes[i]
                    );
                }
            }
        }
    }
}

#[test]
fn specht_filtrations_match_known_multiplicities() {
    for n in [4usize, 5] {
        let cat = catalog(n);
        let a = basic_algebra(&cat).expect("basic algebra build succeeds");
        for shape in &a.shapes {
            let mults = specht_filtration_multiplicities(&a, &cat, shape)
                .expect("filtration passes its dimension check");
            assert!(
                mults.iter().any(|(mu, count)| mu == shape && *count == 1),
                "Y({shape}) must contain its own Specht module exactly once"
            );
        }
        if n == 5 {
            let tall = specht_filtration_multiplicities(&a, &cat, &p("3,1,1"))
                .expect("filtration passes its dimension check");
            let names: Vec<(String, usize)> = tall
                .iter()
                .map(|(mu, count)| (mu.to_string(), *count))
                .collect();
            assert_eq!(
                names,
                vec![
                    ("5".to_string(), 1),
                    ("3,2".to_string(), 1),
                    ("3,1,1".to_string(), 1)
                ],
                "Specht filtration of Y(3,1,1) at degree 5"
            );
            let trivial = specht_filtration_multiplicities(&a, &cat, &p("5"))
                .expect("filtration passes its dimension check");
            assert_eq!(
                trivial,
                vec![(p("5"), 1)],
                "the trivial Young module is its own Specht module"
            );
        }
    }
}

#[test]
fn weyl_modules_have_dominated_composition_factors() {
    let a = algebra(5);
    for shape in &a.shapes {
        let delta = weyl_module(&a, shape).expect("standard module construction succeeds");
        for (mu, &count) in &delta.idempotent_dims {
            if count > 0 {
                assert!(
                    shape.dominates(mu),
                    "factor {mu} of the standard module at {shape} must be dominated"
                );
            }
        }
        assert_eq!(
            delta.idempotent_dims[shape], 1,
            "standard module at {shape} carries its own label once"
        );
    }
}

#[test]
fn blocks_split_by_core_and_match_known_partners() {
    let a3 = algebra(3);
    let blocks3 = blocks_and_fingerprint(&a3).expect("blocks split cleanly");
    let defect_zero = blocks3
        .iter()
        .find(|b| b.shapes == vec![p("2,1")])
        .expect("degree 3 has a defect-zero block at 2,1");
    assert_eq!(defect_zero.weight, 0, "defect-zero block has weight 0");
    assert_eq!(defect_zero.fingerprint.cartan, vec![vec![1]]);
    assert_eq!(defect_zero.fingerprint.quiver, vec![vec![0]]);

    let a5 = algebra(5);
    let blocks5 = blocks_and_fingerprint(&a5).expect("blocks split cleanly");
    assert_eq!(blocks5.len(), 2, "degree 5 splits into two blocks");
    let principal = blocks5
        .iter()
        .find(|b| b.shapes.contains(&p("5")))
        .expect("principal block exists");
    let small = blocks5
        .iter()
        .find(|b| b.shapes.contains(&p("4,1")))
        .expect("weight-one block exists");
    assert_eq!(
        principal.shapes,
        vec![p("5"), p("3,2"), p("3,1,1"), p("2,2,1"), p("1,1,1,1,1")],
        "principal block members at degree 5"
    );
    assert_eq!(principal.core, p("1"));
    assert_eq!(principal.weight, 2);
    assert_eq!(small.shapes, vec![p("4,1"), p("2,1,1,1")]);
    assert_eq!(small.core, p("2,1"));
    assert_eq!(small.weight, 1);

    let a2 = algebra(2);
    let blocks2 = blocks_and_fingerprint(&a2).expect("blocks split cleanly");
    assert_eq!(blocks2.len(), 1, "degree 2 is a single block");
    assert!(
        fingerprints_match(&small.fingerprint, &blocks2[0].fingerprint),
        "the weight-one block at degree 5 matches the degree-2 algebra"
    );

    let a4 = algebra(4);
    let blocks4 = blocks_and_fingerprint(&a4).expect("blocks split cleanly");
    assert_eq!(blocks4.len(), 1, "degree 4 is a single block");
    assert!(
        !fingerprints_match(&blocks4[0].fingerprint, &principal.fingerprint),
        "the degree-4 block must differ from the degree-5 principal block"
    );
    assert!(
        fingerprints_match(&principal.fingerprint, &principal.fingerprint),
        "a fingerprint matches itself"
    );
}

#[test]
fn degree_six_algebra_smoke_check() {
    let cat = catalog(6);
    let a = basic_algebra(&cat).expect("basic algebra build succeeds");
    assert_eq!(a.dim(), 272, "algebra dimension for degree 6");

    let (_, quiver) = radical_and_quiver(&a);
    let mut arrows = Vec::new();
    for i in 0..quiver.len() {
        for j in (i + 1)..quiver.len() {
            if quiver[i][j] != 0 {
                arrows.push((a.shapes[i].to_string(), a.shapes[j].to_string()));
            }
        }
    }
    let expected = vec![
        ("6", "5,1"),
        ("6", "2,2,2"),
        ("5,1", "3,3"),
        ("4,2", "4,1,1"),
        ("4,2", "3,3"),
        ("4,1,1", "3,1,1,1"),
        ("4,1,1", "2,2,2"),
        ("4,1,1", "2,1,1,1,1"),
        ("3,3", "3,1,1,1"),
        ("3,3", "2,2,2"),
        ("3,1,1,1", "1,1,1,1,1,1"),
        ("2,2,2", "2,2,1,1"),
        ("2,2,1,1", "1,1,1,1,1,1"),
        ("2,1,1,1,1", "1,1,1,1,1,1"),
    ];
    let expected: Vec<(String, String)> = expected
        .into_iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    assert_eq!(arrows, expected, "quiver arrows for degree 6");

    let dmat = decomposition_matrix(&a).expect("decomposition matrix satisfies the Cartan identity");
    let expected_dmat = vec![
        vec![1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1],
        vec![0, 1, 1, 1, 1, 0, 1, 0, 0, 1, 1],
        vec![0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1],
        vec![0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2],
        vec![0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1],
        vec![0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2],
        vec![0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1],
        vec![0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
        vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ];
    assert_eq!(dmat, expected_dmat, "decomposition matrix for degree 6");

    let blocks = blocks_and_fingerprint(&a).expect("blocks split cleanly");
    assert_eq!(blocks.len(), 2, "degree 6 splits into two blocks");
    let defect_zero = blocks
        .iter()
        .find(|b| b.shapes == vec![p("3,2,1")])
        .expect("degree 6 has a defect-zero block at 3,2,1");
    assert_eq!(defect_zero.fingerprint.cartan, vec![vec![1]]);

    let delta = weyl_module(&a, &p("3,2,1")).expect("standard module construction succeeds");
    assert_eq!(delta.dim, 1, "the defect-zero standard module is simple");
}

#[test]
fn projectives_over_group_projectives_have_simple_socles() {
    for n in [3usize, 4, 5] {
        let cat = catalog(n);
        let a = basic_algebra(&cat).expect("basic algebra build succeeds");
        let report = injectivity_check(&a, &cat);
        assert!(
            !report.items.is_empty(),
            "every degree has at least one projective Young module"
        );
        assert!(report.all_passed(), "all socle checks pass at degree {n}");
        if n == 5 {
            let names: Vec<String> =
                report.items.iter().map(|i| i.shape.to_string()).collect();
            assert_eq!(
                names,
                vec!["2,2,1".to_string(), "2,1,1,1".to_string(), "1,1,1,1,1".to_string()],
                "projective Young modules at degree 5"
            );
            assert!(report.items.iter().all(|i| i.socle_dim == 1));
        }
    }
}
