use combinat::{partitions_desc, Partition};
use homspace::{iso_test, rng};
use modrep::ModuleKind;
use structure::is_projective;
use youngcat::{
    build_catalog, build_uniserial_u, parity_extension_module, projective_young, verify_catalog,
    BuildConfig, CatalogError, YoungCatalog,
};

fn p(text: &str) -> Partition {
    text.parse().expect("test partitions parse")
}

fn build(n: usize) -> YoungCatalog {
    build_catalog(n, &BuildConfig::default()).expect("catalog builds")
}

/// Assert the full Kostka matrix: `expected` lists every non-zero entry
/// as (row, column, count); all other pairs must be zero.
fn assert_kostka(catalog: &YoungCatalog, expected: &[(&str, &str, usize)]) {
    let shapes = partitions_desc(catalog.n);
    for row in &shapes {
        for col in &shapes {
            let want = expected
                .iter()
                .find(|(r, c, _)| p(r) == *row && p(c) == *col)
                .map_or(0, |(_, _, count)| *count);
            assert_eq!(
                catalog.kostka(row, col),
                want,
                "kostka({row}, {col}) at degree {}",
                catalog.n
            );
        }
    }
}

fn assert_dims(catalog: &YoungCatalog, expected: &[(&str, usize)]) {
    for (shape, dim) in expected {
        assert_eq!(
            catalog.young(&p(shape)).dim,
            *dim,
            "dim Y[{shape}] at degree {}",
            catalog.n
        );
    }
}

#[test]
fn catalogs_up_to_degree_four_match_known_tables() {
    let c1 = build(1);
    assert_kostka(&c1, &[("1", "1", 1)]);
    assert_dims(&c1, &[("1", 1)]);

    let c2 = build(2);
    assert_kostka(&c2, &[("2", "2", 1), ("1,1", "1,1", 1)]);
    assert_dims(&c2, &[("2", 1), ("1,1", 2)]);

    let c3 = build(3);
    assert_kostka(
        &c3,
        &[
            ("3", "3", 1),
            ("3", "2,1", 1),
            ("2,1", "2,1", 1),
            ("2,1", "1,1,1", 2),
            ("1,1,1", "1,1,1", 1),
        ],
    );
    assert_dims(&c3, &[("3", 1), ("2,1", 2), ("1,1,1", 2)]);

    let c4 = build(4);
    assert_kostka(
        &c4,
        &[
            ("4", "4", 1),
            ("3,1", "3,1", 1),
            ("3,1", "2,1,1", 1),
            ("2,2", "2,2", 1),
            ("2,1,1", "2,1,1", 1),
            ("2,1,1", "1^4", 2),
            ("1^4", "1^4", 1),
        ],
    );
    assert_dims(
        &c4,
        &[("4", 1), ("3,1", 4), ("2,2", 6), ("2,1,1", 8), ("1^4", 8)],
    );

    for catalog in [&c1, &c2, &c3, &c4] {
        let report = verify_catalog(catalog, 7);
        assert!(
            report.all_passed(),
            "verification at degree {}: {:?}",
            catalog.n,
            report.failures()
        );
    }
}

#[test]
fn degree_five_catalog_matches_the_known_table() {
    let catalog = build(5);
    assert_kostka(
        &catalog,
        &[
            ("5", "5", 1),
            ("5", "4,1", 1),
            ("4,1", "4,1", 1),
            ("4,1", "3,2", 1),
            ("4,1", "3,1,1", 2),
            ("4,1", "2,2,1", 2),
            ("4,1", "2,1,1,1", 2),
            ("3,2", "3,2", 1),
            ("3,2", "2,2,1", 1),
            ("3,1,1", "3,1,1", 1),
            ("3,1,1", "2,1,1,1", 1),
            ("2,2,1", "2,2,1", 1),
            ("2,2,1", "2,1,1,1", 2),
            ("2,2,1", "1^5", 4),
            ("2,1,1,1", "2,1,1,1", 1),
            ("2,1,1,1", "1^5", 4),
            ("1^5", "1^5", 1),
        ],
    );
    assert_dims(
        &catalog,
        &[
            ("5", 1),
            ("4,1", 4),
            ("3,2", 6),
            ("3,1,1", 12),
            ("2,2,1", 16),
            ("2,1,1,1", 8),
            ("1^5", 24),
        ],
    );
    let report = verify_catalog(&catalog, 11);
    assert!(report.all_passed(), "{:?}", report.failures());
    for shape in catalog.shapes() {
        assert_eq!(
            catalog.young(&shape).label,
            Some((ModuleKind::Young, shape.clone())),
            "labels identify every entry"
        );
        assert_eq!(catalog.provenance[&shape], "split");
    }
}

#[test]
fn same_seed_builds_are_identical() {
    let config = BuildConfig {
        seed: 42,
        ..BuildConfig::default()
    };
    let a = build_catalog(5, &config).expect("first build");
    let b = build_catalog(5, &config).expect("second build");
    assert_eq!(a.kostka, b.kostka, "kostka matrices agree across runs");
    for shape in a.shapes() {
        let (ya, yb) = (a.young(&shape), b.young(&shape));
        assert!(
            ya.gen_s == yb.gen_s && ya.gen_c == yb.gen_c,
            "Y[{shape}] has identical matrices across runs"
        );
    }
}

#[test]
fn caching_round_trips_the_catalog() {
    let dir = tempfile::tempdir().expect("temp dir");
    let config = BuildConfig {
        cache_dir: Some(dir.path().to_path_buf()),
        ..BuildConfig::default()
    };
    let fresh = build_catalog(4, &config).expect("build and save");
    assert!(
        dir.path().join("4").join("manifest.json").is_file(),
        "the manifest lands on disk"
    );
    let cached = build_catalog(4, &config).expect("load from cache");
    assert_eq!(fresh.kostka, cached.kostka);
    assert_eq!(fresh.provenance, cached.provenance);
    for shape in fresh.shapes() {
        let (a, b) = (fresh.young(&shape), cached.young(&shape));
        assert!(
            a.gen_s == b.gen_s && a.gen_c == b.gen_c && a.label == b.label,
            "cached module for {shape} round-trips"
        );
    }
}

#[test]
fn projective_young_hands_out_entries_and_enforces_column_regularity() {
    let c3 = build(3);
    let config = BuildConfig::default();
    let y21 = projective_young(3, &p("2,1"), &c3, &config).expect("already-projective entry");
    assert_eq!(y21.dim, 2);
    assert!(is_projective(&y21));

    let Err(err) = projective_young(3, &p("3"), &c3, &config) else {
        panic!("[3] is not column 2-regular, so its Young module is not projective");
    };
    assert!(matches!(err, CatalogError::NotColumnRegular { .. }), "{err}");

    // A column 2-regular shape with no recipe and no catalog entry.
    let mut c5 = build(5);
    c5.entries.remove(&p("2,1,1,1"));
    let Err(err) = projective_young(5, &p("2,1,1,1"), &c5, &config) else {
        panic!("no tensor recipe is configured at degree 5");
    };
    assert!(matches!(err, CatalogError::MissingRecipe { .. }), "{err}");

    let Err(err) = build_uniserial_u(5, &c5) else {
        panic!("the uniserial extension is only configured for degrees 6 and 7");
    };
    assert!(
        matches!(err, CatalogError::UnsupportedUniserialDegree(5)),
        "{err}"
    );
}

#[test]
fn degree_six_split_and_tensor_routes_agree() {
    let expected_kostka: &[(&str, &str, usize)] = &[
        ("6", "6", 1),
        ("6", "4,2", 1),
        ("5,1", "5,1", 1),
        ("5,1", "4,1,1", 1),
        ("4,2", "4,2", 1),
        ("4,2", "2,2,2", 2),
        ("4,1,1", "4,1,1", 1),
        ("4,1,1", "3,2,1", 1),
        ("4,1,1", "3,1,1,1", 2),
        ("4,1,1", "2,2,1,1", 2),
        ("4,1,1", "2,1^4", 2),
        ("3,3", "3,3", 1),
        ("3,3", "3,2,1", 1),
        ("3,3", "2,2,1,1", 1),
        ("3,2,1", "3,2,1", 1),
        ("3,2,1", "3,1,1,1", 2),
        ("3,2,1", "2,2,2", 2),
        ("3,2,1", "2,2,1,1", 4),
        ("3,2,1", "2,1^4", 8),
        ("3,2,1", "1^6", 16),
        ("3,1,1,1", "3,1,1,1", 1),
        ("3,1,1,1", "2,1^4", 1),
        ("2,2,2", "2,2,2", 1),
        ("2,2,1,1", "2,2,1,1", 1),
        ("2,2,1,1", "2,1^4", 2),
        ("2,2,1,1", "1^6", 4),
        ("2,1^4", "2,1^4", 1),
        ("2,1^4", "1^6", 4),
        ("1^6", "1^6", 1),
    ];
    let expected_dims: &[(&str, usize)] = &[
        ("6", 1),
        ("5,1", 6),
        ("4,2", 14),
        ("4,1,1", 24),
        ("3,3", 20),
        ("3,2,1", 16),
        ("3,1,1,1", 40),
        ("2,2,2", 30),
        ("2,2,1,1", 48),
        ("2,1^4", 48),
        ("1^6", 80),
    ];

    let split_catalog = build(6);
    assert_kostka(&split_catalog, expected_kostka);
    assert_dims(&split_catalog, expected_dims);
    let report = verify_catalog(&split_catalog, 3);
    assert!(report.all_passed(), "{:?}", report.failures());

    // Force the two largest permutation modules through the tensor route.
    let config = BuildConfig {
        split_threshold: 350,
        ..BuildConfig::default()
    };
    let tensor_catalog = build_catalog(6, &config).expect("tensor-route build");
    assert_kostka(&tensor_catalog, expected_kostka);
    assert_dims(&tensor_catalog, expected_dims);
    assert_eq!(split_catalog.kostka, tensor_catalog.kostka);

    for shape in ["2,1^4", "1^6"] {
        let shape = p(shape);
        assert!(
            tensor_catalog.provenance[&shape].starts_with("tensor-whole"),
            "provenance records the tensor route: {}",
            tensor_catalog.provenance[&shape]
        );
        let mut rng = rng::stream(9, "route-compare", &format!("{shape}"));
        assert!(
            iso_test(
                split_catalog.young(&shape),
                tensor_catalog.young(&shape),
                &mut rng,
                200,
            )
            .is_some(),
            "both routes build the same Y[{shape}]"
        );
    }

    // The uniserial tensor factor agrees with the parity-character model.
    let u = build_uniserial_u(6, &split_catalog).expect("uniserial extension");
    assert_eq!(u.dim, 2);
    let mut rng = rng::stream(9, "uniserial-oracle", "6");
    assert!(
        iso_test(&u, &parity_extension_module(6), &mut rng, 200).is_some(),
        "the section matches the parity extension"
    );
}
