//! Fixture comparison: recomputes each degree's structure data and diffs
//! it against the bundled tables. Every rule reports pass or fail with
//! counterexample lines; computation failures become failing rules
//! rather than aborting the report.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use combinat::{hook_length_count, Partition};
use homspace::{fitting_decompose, rng};
use modrep::GModule;
use schuralg::{
    blocks_and_fingerprint, cartan_matrix, decomposition_matrix, injectivity_check,
    fingerprints_match, module_radical_layers, projective_A, radical_and_quiver,
    specht_filtration_multiplicities, weyl_module, BasicAlgebra, BlockReport,
};
use structure::{composition_factors, ext1_dim, heart, radical_socle_series};
use youngcat::verify_catalog;

use crate::emit::layer_of;
use crate::fixtures::{fixtures, LayerCounts};
use crate::pipeline::{Bundle, BundleCache, PipelineError};

const MAX_DETAILS: usize = 20;

/// Outcome of one verification rule.
#[derive(Debug)]
pub struct CheckResult {
    /// Short rule name.
    pub name: String,
    /// Whether every comparison under the rule matched.
    pub passed: bool,
    /// Mismatch descriptions; empty when the rule passed.
    pub details: Vec<String>,
}

fn check(name: &str, mut diffs: Vec<String>) -> CheckResult {
    if diffs.len() > MAX_DETAILS {
        let extra = diffs.len() - MAX_DETAILS;
        diffs.truncate(MAX_DETAILS);
        diffs.push(format!("... and {extra} more"));
    }
    CheckResult {
        name: name.to_string(),
        passed: diffs.is_empty(),
        details: diffs,
    }
}

/// All rule outcomes for one degree.
#[derive(Debug)]
pub struct DegreeReport {
    /// The verified degree.
    pub n: usize,
    /// Rule outcomes in a fixed order.
    pub checks: Vec<CheckResult>,
}

impl DegreeReport {
    /// Whether every rule passed.
    #[must_use]
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One line per rule plus indented mismatch details.
    #[must_use]
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            writeln!(out, "verify n={}: {} ... {verdict}", self.n, c.name)
                .expect("writing to string");
            for line in &c.details {
                writeln!(out, "    {line}").expect("writing to string");
            }
        }
        let verdict = if self.all_passed() { "pass" } else { "FAIL" };
        writeln!(
            out,
            "verify n={}: {} checks ... {verdict}",
            self.n,
            self.checks.len()
        )
        .expect("writing to string");
        out
    }
}

fn counts_text(counts: &LayerCounts) -> String {
    let entries: Vec<String> = counts
        .iter()
        .rev()
        .map(|(label, count)| format!("{label} x{count}"))
        .collect();
    if entries.is_empty() {
        "(none)".to_string()
    } else {
        entries.join(" + ")
    }
}

fn normalized_layers(raw: &[Vec<(Partition, usize)>]) -> Vec<LayerCounts> {
    raw.iter().map(|layer| layer_of(layer)).collect()
}

fn diff_layerings(
    what: &str,
    computed: &[LayerCounts],
    expected: &[LayerCounts],
    diffs: &mut Vec<String>,
) {
    if computed.len() != expected.len() {
        diffs.push(format!(
            "{what}: computed {} layers, fixture records {}",
            computed.len(),
            expected.len()
        ));
        return;
    }
    for (i, (got, want)) in computed.iter().zip(expected).enumerate() {
        if got != want {
            diffs.push(format!(
                "{what} layer {}: computed {}, fixture records {}",
                i + 1,
                counts_text(got),
                counts_text(want)
            ));
        }
    }
}

fn kostka_check(bundle: &Bundle) -> CheckResult {
    let fixture = fixtures().kostka_table(bundle.n);
    let mut diffs = Vec::new();
    let shapes = bundle.catalog.shapes();
    if shapes != fixture.shapes {
        diffs.push(format!(
            "catalog shapes differ from the fixture labels at degree {}",
            bundle.n
        ));
    }
    for (i, lambda) in fixture.shapes.iter().enumerate() {
        for (j, mu) in fixture.shapes.iter().enumerate() {
            let got = bundle.catalog.kostka(lambda, mu);
            let want = fixture.rows[i][j];
            if got != want {
                diffs.push(format!(
                    "kostka({lambda}; {mu}): computed {got}, fixture records {want}"
                ));
            }
        }
    }
    check("kostka-table", diffs)
}

fn young_layers_check(bundle: &Bundle) -> CheckResult {
    let table = fixtures().young_layer_table(bundle.n);
    let mut diffs = Vec::new();
    for (shape, expected) in &table.modules {
        match radical_socle_series(bundle.catalog.young(shape), &bundle.simples) {
            Ok(series) => {
                let computed = normalized_layers(&series.rad_series.layers);
                diff_layerings(&format!("Y[{shape}]"), &computed, expected, &mut diffs);
            }
            Err(e) => diffs.push(format!("Y[{shape}]: series analysis failed: {e}")),
        }
    }
    check("young-radical-layers", diffs)
}

fn young_factors_check(bundle: &Bundle) -> CheckResult {
    let mut diffs = Vec::new();
    for shape in bundle.catalog.shapes() {
        let expected = fixtures().young_factors(bundle.n, &shape);
        match composition_factors(bundle.catalog.young(&shape), &bundle.simples) {
            Ok(raw) => {
                let computed = layer_of(&raw);
                if computed != expected {
                    diffs.push(format!(
                        "Y[{shape}] factors: computed {}, fixture records {}",
                        counts_text(&computed),
                        counts_text(&expected)
                    ));
                }
            }
            Err(e) => diffs.push(format!("Y[{shape}]: factor analysis failed: {e}")),
        }
    }
    check("young-factor-multisets", diffs)
}

fn uniserial_check(bundle: &Bundle) -> Option<CheckResult> {
    let cases = fixtures().uniserial_cases(bundle.n);
    if cases.is_empty() {
        return None;
    }
    let mut diffs = Vec::new();
    for case in cases {
        let series = match radical_socle_series(bundle.catalog.young(&case.shape), &bundle.simples)
        {
            Ok(series) => series,
            Err(e) => {
                diffs.push(format!("Y[{}]: series analysis failed: {e}", case.shape));
                continue;
            }
        };
        if !series.rad_series.is_uniserial_shape() || !series.soc_series.is_uniserial_shape() {
            diffs.push(format!("Y[{}]: not uniserial", case.shape));
            continue;
        }
        let computed: Vec<Partition> = series
            .rad_series
            .layers
            .iter()
            .map(|layer| layer[0].0.clone())
            .collect();
        if computed != case.chain {
            let got: Vec<String> = computed.iter().map(ToString::to_string).collect();
            let want: Vec<String> = case.chain.iter().map(ToString::to_string).collect();
            diffs.push(format!(
                "Y[{}] chain: computed {}, fixture records {}",
                case.shape,
                got.join(" / "),
                want.join(" / ")
            ));
        }
    }
    Some(check("uniserial-chains", diffs))
}

fn chain_of(module: &GModule, simples: &[GModule]) -> Result<Vec<Partition>, String> {
    let series = radical_socle_series(module, simples).map_err(|e| e.to_string())?;
    if !series.rad_series.is_uniserial_shape() {
        return Err("summand is not uniserial".to_string());
    }
    Ok(series
        .rad_series
        .layers
        .iter()
        .map(|layer| layer[0].0.clone())
        .collect())
}

fn hearts_check(bundle: &Bundle, seed: u64, trials: usize) -> Option<CheckResult> {
    let cases = fixtures().heart_cases(bundle.n);
    if cases.is_empty() {
        return None;
    }
    let mut diffs = Vec::new();
    for case in cases {
        let core = match heart(bundle.catalog.young(&case.shape), &bundle.simples) {
            Ok(core) => core,
            Err(e) => {
                diffs.push(format!("heart(Y[{}]) failed: {e}", case.shape));
                continue;
            }
        };
        let mut stream = rng::stream(seed, "verify-heart", &case.shape.to_string());
        let summands = fitting_decompose(&core, &mut stream, trials);
        let mut computed: Vec<Vec<Partition>> = Vec::new();
        for (k, summand) in summands.iter().enumerate() {
            match chain_of(&summand.module, &bundle.simples) {
                Ok(chain) => computed.push(chain),
                Err(e) => diffs.push(format!(
                    "heart(Y[{}]) summand {k}: {e}",
                    case.shape
                )),
            }
        }
        let mut expected = case.summands.clone();
        computed.sort();
        expected.sort();
        if computed != expected {
            diffs.push(format!(
                "heart(Y[{}]): computed {} uniserial summands, fixture records {}",
                case.shape,
                computed.len(),
                expected.len()
            ));
            for chain in &computed {
                let text: Vec<String> = chain.iter().map(ToString::to_string).collect();
                diffs.push(format!("  computed summand: {}", text.join(" / ")));
            }
        }
    }
    Some(check("heart-decompositions", diffs))
}

fn catalog_invariants_check(bundle: &Bundle, seed: u64) -> CheckResult {
    let report = verify_catalog(&bundle.catalog, seed);
    check("catalog-invariants", report.failures())
}

fn grid_diffs(
    what: &str,
    shapes: &[Partition],
    computed: &[Vec<usize>],
    expected: &[Vec<usize>],
    diffs: &mut Vec<String>,
) {
    for i in 0..shapes.len() {
        for j in 0..shapes.len() {
            if computed[i][j] != expected[i][j] {
                diffs.push(format!(
                    "{what}[{}; {}]: computed {}, fixture records {}",
                    shapes[i], shapes[j], computed[i][j], expected[i][j]
                ));
            }
        }
    }
}

fn cartan_fixture_check(bundle: &Bundle, algebra: &BasicAlgebra) -> Option<CheckResult> {
    let fixture = fixtures().cartan_table(bundle.n)?;
    let mut diffs = Vec::new();
    if algebra.shapes != fixture.shapes {
        diffs.push("algebra shapes differ from the fixture labels".to_string());
    } else {
        let computed = cartan_matrix(algebra);
        grid_diffs("cartan", &fixture.shapes, &computed, &fixture.rows, &mut diffs);
    }
    Some(check("cartan-table", diffs))
}

fn matrix_identities_check(algebra: &BasicAlgebra) -> CheckResult {
    let mut diffs = Vec::new();
    let shapes = &algebra.shapes;
    let cartan = cartan_matrix(algebra);
    for i in 0..shapes.len() {
        for j in (i + 1)..shapes.len() {
            if cartan[i][j] != cartan[j][i] {
                diffs.push(format!(
                    "cartan asymmetric at [{}; {}]: {} vs {}",
                    shapes[i], shapes[j], cartan[i][j], cartan[j][i]
                ));
            }
        }
    }
    match decomposition_matrix(algebra) {
        Ok(dmat) => {
            for i in 0..shapes.len() {
                if dmat[i][i] != 1 {
                    diffs.push(format!("dmat diagonal at {} is {}", shapes[i], dmat[i][i]));
                }
                for j in 0..shapes.len() {
                    if dmat[i][j] != 0 && !shapes[i].dominates(&shapes[j]) {
                        diffs.push(format!(
                            "dmat[{}; {}] = {} but {} does not dominate {}",
                            shapes[i], shapes[j], dmat[i][j], shapes[i], shapes[j]
                        ));
                    }
                }
            }
            for i in 0..shapes.len() {
                for j in 0..shapes.len() {
                    let product: usize =
                        (0..shapes.len()).map(|k| dmat[k][i] * dmat[k][j]).sum();
                    if product != cartan[i][j] {
                        diffs.push(format!(
                            "(D^T D)[{}; {}] = {product} but cartan entry is {}",
                            shapes[i], shapes[j], cartan[i][j]
                        ));
                    }
                }
            }
        }
        Err(e) => diffs.push(format!("decomposition matrix failed: {e}")),
    }
    check("matrix-identities", diffs)
}

fn dmat_fixture_check(bundle: &Bundle, algebra: &BasicAlgebra) -> CheckResult {
    let fixture = fixtures().dmat_table(bundle.n);
    let mut diffs = Vec::new();
    if algebra.shapes != fixture.shapes {
        diffs.push("algebra shapes differ from the fixture labels".to_string());
        return check("decomposition-matrix", diffs);
    }
    match decomposition_matrix(algebra) {
        Ok(computed) => {
            grid_diffs("dmat", &fixture.shapes, &computed, &fixture.rows, &mut diffs);
        }
        Err(e) => diffs.push(format!("decomposition matrix failed: {e}")),
    }
    check("decomposition-matrix", diffs)
}

fn schur_layers_check(bundle: &Bundle, algebra: &BasicAlgebra) -> Option<CheckResult> {
    let table = fixtures().schur_layer_table(bundle.n)?;
    let mut diffs = Vec::new();
    for (shape, expected) in &table.modules {
        let computed = module_radical_layers(algebra, &projective_A(algebra, shape));
        diff_layerings(&format!("P[{shape}]"), &computed, expected, &mut diffs);
    }
    Some(check("schur-projective-layers", diffs))
}

fn injective_socle_check(bundle: &Bundle, algebra: &BasicAlgebra) -> CheckResult {
    let mut diffs = Vec::new();
    let report = injectivity_check(algebra, &bundle.catalog);
    let expected: BTreeSet<Partition> = bundle
        .catalog
        .shapes()
        .into_iter()
        .filter(Partition::is_column_two_regular)
        .collect();
    let covered: BTreeSet<Partition> = report.items.iter().map(|i| i.shape.clone()).collect();
    if covered != expected {
        diffs.push(format!(
            "projective Young labels {:?} differ from the column 2-regular shapes",
            covered.iter().map(ToString::to_string).collect::<Vec<_>>()
        ));
    }
    for item in &report.items {
        if !item.passed {
            diffs.push(format!(
                "P[{}] has socle dimension {}, expected 1",
                item.shape, item.socle_dim
            ));
        }
    }
    check("injective-socles", diffs)
}

fn specht_filtration_check(bundle: &Bundle, algebra: &BasicAlgebra) -> CheckResult {
    let mut diffs = Vec::new();
    for shape in bundle.catalog.shapes() {
        let expected = layer_of(&fixtures().specht_filtration(bundle.n, &shape));
        match specht_filtration_multiplicities(algebra, &bundle.catalog, &shape) {
            Ok(raw) => {
                let computed = layer_of(&raw);
                if computed != expected {
                    diffs.push(format!(
                        "Y[{shape}] Specht filtration: computed {}, fixture records {}",
                        counts_text(&computed),
                        counts_text(&expected)
                    ));
                }
            }
            Err(e) => diffs.push(format!("Y[{shape}]: Specht filtration failed: {e}")),
        }
    }
    check("specht-filtrations", diffs)
}

fn weyl_check(bundle: &Bundle, algebra: &BasicAlgebra) -> Option<CheckResult> {
    let degree = fixtures().weyl_degree(bundle.n)?;
    let mut diffs = Vec::new();
    for (shape, chain) in &degree.entries {
        let module = match weyl_module(algebra, shape) {
            Ok(module) => module,
            Err(e) => {
                diffs.push(format!("Delta[{shape}] failed: {e}"));
                continue;
            }
        };
        let expected = fixtures().weyl_factors(bundle.n, shape);
        let computed: LayerCounts = module
            .idempotent_dims
            .iter()
            .filter(|&(_, &count)| count > 0)
            .map(|(label, &count)| (label.clone(), count))
            .collect();
        if computed != expected {
            diffs.push(format!(
                "Delta[{shape}] factors: computed {}, fixture records {}",
                counts_text(&computed),
                counts_text(&expected)
            ));
        }
        if let Some(chain) = chain {
            let layers = module_radical_layers(algebra, &module);
            let uniserial = layers
                .iter()
                .all(|layer| layer.values().sum::<usize>() == 1);
            if !uniserial {
                diffs.push(format!("Delta[{shape}] is not a chain"));
                continue;
            }
            let computed_chain: Vec<Partition> = layers
                .iter()
                .map(|layer| layer.keys().next().expect("one factor per layer").clone())
                .collect();
            if &computed_chain != chain {
                let got: Vec<String> = computed_chain.iter().map(ToString::to_string).collect();
                let want: Vec<String> = chain.iter().map(ToString::to_string).collect();
                diffs.push(format!(
                    "Delta[{shape}] chain: computed {}, fixture records {}",
                    got.join(" / "),
                    want.join(" / ")
                ));
            }
        }
    }
    Some(check("weyl-tables", diffs))
}

fn quiver_check(bundle: &Bundle, algebra: &BasicAlgebra) -> Option<CheckResult> {
    let fixture = fixtures().quiver_fixture(bundle.n)?;
    let mut diffs = Vec::new();
    let (_, quiver) = radical_and_quiver(algebra);
    let position = |shape: &Partition| {
        algebra
            .shapes
            .iter()
            .position(|s| s == shape)
            .expect("fixture shapes label the algebra")
    };
    let members: Vec<usize> = fixture.shapes.iter().map(position).collect();
    let mut expected = vec![vec![0usize; members.len()]; members.len()];
    for (a, b) in &fixture.pairs {
        let i = fixture.shapes.iter().position(|s| s == a).expect("pair label recorded");
        let j = fixture.shapes.iter().position(|s| s == b).expect("pair label recorded");
        expected[i][j] += 1;
        expected[j][i] += 1;
    }
    for (i, &vi) in members.iter().enumerate() {
        for (j, &vj) in members.iter().enumerate() {
            let got = quiver[vi][vj];
            if got != expected[i][j] {
                diffs.push(format!(
                    "quiver arrows {} -> {}: computed {got}, fixture records {}",
                    fixture.shapes[i], fixture.shapes[j], expected[i][j]
                ));
            }
        }
    }
    let member_set: BTreeSet<usize> = members.iter().copied().collect();
    for (v, shape) in algebra.shapes.iter().enumerate() {
        if member_set.contains(&v) {
            continue;
        }
        for &m in &members {
            if quiver[v][m] != 0 || quiver[m][v] != 0 {
                diffs.push(format!(
                    "unexpected arrows between {} and {}",
                    shape, algebra.shapes[m]
                ));
            }
        }
    }
    Some(check("quiver-edges", diffs))
}

fn blocks_check(
    bundle: &Bundle,
    reports: &Result<Vec<BlockReport>, String>,
) -> CheckResult {
    let mut diffs = Vec::new();
    let fixture = fixtures().blocks_of(bundle.n);
    match reports {
        Ok(reports) => {
            if reports.len() != fixture.len() {
                diffs.push(format!(
                    "computed {} blocks, fixture records {}",
                    reports.len(),
                    fixture.len()
                ));
            } else {
                for (computed, expected) in reports.iter().zip(fixture) {
                    if computed.shapes != expected.shapes {
                        let got: Vec<String> =
                            computed.shapes.iter().map(ToString::to_string).collect();
                        diffs.push(format!(
                            "block of core {} members: computed {}",
                            expected.core,
                            got.join(" + ")
                        ));
                    }
                    if computed.core != expected.core || computed.weight != expected.weight {
                        diffs.push(format!(
                            "block label: computed core {} weight {}, fixture records core {} weight {}",
                            computed.core, computed.weight, expected.core, expected.weight
                        ));
                    }
                }
            }
        }
        Err(e) => diffs.push(format!("block analysis failed: {e}")),
    }
    check("block-partition", diffs)
}

fn dimension_check(bundle: &Bundle, algebra: &BasicAlgebra) -> CheckResult {
    let mut diffs = Vec::new();
    let shapes = bundle.catalog.shapes();
    match decomposition_matrix(algebra) {
        Ok(dmat) => {
            for (j, lambda) in shapes.iter().enumerate() {
                let young_dim = bundle.catalog.young(lambda).dim as u64;
                let total: u64 = shapes
                    .iter()
                    .enumerate()
                    .map(|(i, mu)| dmat[i][j] as u64 * hook_length_count(mu))
                    .sum();
                if young_dim != total {
                    diffs.push(format!(
                        "dim Y[{lambda}] = {young_dim} but the filtration total is {total}"
                    ));
                }
            }
        }
        Err(e) => diffs.push(format!("decomposition matrix failed: {e}")),
    }
    let factorial: u64 = (1..=bundle.n as u64).product();
    let regular: u64 = shapes
        .iter()
        .filter(|shape| shape.is_column_two_regular())
        .map(|shape| {
            bundle.simple_dim(&shape.conjugate()) as u64 * bundle.catalog.young(shape).dim as u64
        })
        .sum();
    if regular != factorial {
        diffs.push(format!(
            "projective Young dimension total {regular} differs from {}! = {factorial}",
            bundle.n
        ));
    }
    check("dimension-identities", diffs)
}

fn self_extension_check(bundle: &Bundle) -> CheckResult {
    let mut diffs = Vec::new();
    let simple: Partition = "5,2".parse().expect("static shape parses");
    let cover_label: Partition = "2,2,1,1,1".parse().expect("static shape parses");
    match ext1_dim(
        &simple,
        &simple,
        bundle.catalog.young(&cover_label),
        &bundle.simples,
    ) {
        Ok(2) => {}
        Ok(dim) => diffs.push(format!(
            "ext1(D[5,2], D[5,2]) computed {dim}, fixture records 2"
        )),
        Err(e) => diffs.push(format!("ext1(D[5,2], D[5,2]) failed: {e}")),
    }
    check("self-extension", diffs)
}

fn block_by_core<'a>(
    reports: &'a [BlockReport],
    core: &Partition,
) -> Result<&'a BlockReport, String> {
    reports
        .iter()
        .find(|b| &b.core == core)
        .ok_or_else(|| format!("no block with core {core}"))
}

fn morita_check(cache: &BundleCache, reports7: &Result<Vec<BlockReport>, String>) -> CheckResult {
    let mut diffs = Vec::new();
    let correspondence = &fixtures().blocks.correspondence;
    let fingerprint_of = |n: usize, core: &Partition| -> Result<BlockReport, String> {
        let bundle = cache.get(n).map_err(|e| e.to_string())?;
        let algebra = bundle.algebra().map_err(|e| e.to_string())?;
        let reports = blocks_and_fingerprint(algebra).map_err(|e| e.to_string())?;
        block_by_core(&reports, core).cloned()
    };
    let empty = Partition::new(Vec::new());
    let one: Partition = "1".parse().expect("static shape parses");
    let source = match reports7 {
        Ok(reports) => block_by_core(reports, &correspondence.from_core).cloned(),
        Err(e) => Err(e.clone()),
    };
    let principal5 = fingerprint_of(correspondence.to_n, &correspondence.to_core);
    match (&source, &principal5) {
        (Ok(block7), Ok(block5)) => {
            let sources: Vec<Partition> =
                correspondence.pairs.iter().map(|(a, _)| a.clone()).collect();
            let targets: Vec<Partition> =
                correspondence.pairs.iter().map(|(_, b)| b.clone()).collect();
            if block7.shapes != sources || block5.shapes != targets {
                diffs.push("correspondence labels differ from the block members".to_string());
            }
            if block7.fingerprint != block5.fingerprint {
                diffs.push(
                    "degree 7 second block and degree 5 principal block fingerprints differ under the correspondence"
                        .to_string(),
                );
            }
            if !fingerprints_match(&block7.fingerprint, &block5.fingerprint) {
                diffs.push(
                    "degree 7 second block and degree 5 principal block do not match under any relabeling"
                        .to_string(),
                );
            }
        }
        (Err(e), _) => diffs.push(format!("degree 7 block: {e}")),
        (_, Err(e)) => diffs.push(format!("degree 5 block: {e}")),
    }
    match (fingerprint_of(4, &empty), &principal5, &source) {
        (Ok(block4), Ok(block5), Ok(block7)) => {
            if fingerprints_match(&block4.fingerprint, &block5.fingerprint) {
                diffs.push("degree 4 fingerprint unexpectedly matches the degree 5 principal block".to_string());
            }
            if fingerprints_match(&block4.fingerprint, &block7.fingerprint) {
                diffs.push("degree 4 fingerprint unexpectedly matches the degree 7 second block".to_string());
            }
        }
        (Err(e), _, _) => diffs.push(format!("degree 4 block: {e}")),
        _ => {}
    }
    let principal7 = match reports7 {
        Ok(reports) => block_by_core(reports, &one).cloned(),
        Err(e) => Err(e.clone()),
    };
    match (fingerprint_of(6, &empty), principal7) {
        (Ok(block6), Ok(block7)) => {
            if fingerprints_match(&block6.fingerprint, &block7.fingerprint) {
                diffs.push(
                    "degree 6 principal and degree 7 principal fingerprints unexpectedly match"
                        .to_string(),
                );
            }
        }
        (Err(e), _) => diffs.push(format!("degree 6 block: {e}")),
        (_, Err(e)) => diffs.push(format!("degree 7 principal block: {e}")),
    }
    check("morita-correspondence", diffs)
}

/// Recomputes the structure data of degree `n` and compares it to every
/// bundled table that covers the degree.
///
/// # Errors
/// Returns [`PipelineError`] when the catalog or algebra for the degree
/// cannot be built at all; comparison mismatches are reported in the
/// returned checks instead.
pub fn verify_degree(cache: &BundleCache, n: usize) -> Result<DegreeReport, PipelineError> {
    let bundle = cache.get(n)?;
    let seed = cache.base().seed;
    let trials = cache.base().trials;
    let algebra = bundle.algebra()?;
    let block_reports = blocks_and_fingerprint(algebra).map_err(|e| e.to_string());

    let mut checks = vec![
        kostka_check(&bundle),
        young_layers_check(&bundle),
        young_factors_check(&bundle),
    ];
    if let Some(result) = uniserial_check(&bundle) {
        checks.push(result);
    }
    if let Some(result) = hearts_check(&bundle, seed, trials) {
        checks.push(result);
    }
    checks.push(catalog_invariants_check(&bundle, seed));
    if let Some(result) = cartan_fixture_check(&bundle, algebra) {
        checks.push(result);
    }
    checks.push(matrix_identities_check(algebra));
    checks.push(dmat_fixture_check(&bundle, algebra));
    if let Some(result) = schur_layers_check(&bundle, algebra) {
        checks.push(result);
    }
    checks.push(injective_socle_check(&bundle, algebra));
    checks.push(specht_filtration_check(&bundle, algebra));
    if let Some(result) = weyl_check(&bundle, algebra) {
        checks.push(result);
    }
    if let Some(result) = quiver_check(&bundle, algebra) {
        checks.push(result);
    }
    checks.push(blocks_check(&bundle, &block_reports));
    checks.push(dimension_check(&bundle, algebra));
    if n == 7 {
        checks.push(self_extension_check(&bundle));
        checks.push(morita_check(cache, &block_reports));
    }
    Ok(DegreeReport { n, checks })
}
