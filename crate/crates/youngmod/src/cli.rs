//! Command-line front-end: argument parsing, cache resolution, and
//! dispatch to the pipeline, emitters, and fixture verification.
//!
//! Exit codes: 0 on success, 1 for runtime failures and fixture
//! mismatches, 2 for usage errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use combinat::Partition;
use modrep::{perm_module, simple_module, specht_module, GModule};
use schuralg::{
    blocks_and_fingerprint, cartan_matrix, decomposition_matrix, module_radical_layers,
    radical_and_quiver, weyl_module, BasicAlgebra, BlockReport,
};
use structure::{composition_factors, radical_socle_series};

use crate::config::{EmitKind, RunConfig, MAX_DEGREE, MIN_DEGREE};
use crate::emit;
use crate::fixtures::LayerCounts;
use crate::pipeline::{build_bundle, BundleCache};
use crate::verify::verify_degree;

/// Why a command did not finish, split by exit code.
enum Failure {
    /// Rejected flags or flag combinations; exits 2.
    Usage(String),
    /// A computation failed; exits 1.
    Runtime(String),
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn runtime(error: impl ToString) -> Failure {
    Failure::Runtime(error.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "youngmod",
    version,
    about = "Young module and Schur algebra workbench for symmetric groups over GF(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Pipeline flags shared by every command; unset flags fall back to the
/// pipeline defaults.
#[derive(Args, Clone, Debug)]
struct PipelineOpts {
    /// Seed for every randomized search.
    #[arg(long)]
    seed: Option<u64>,

    /// Directory for cached catalog entries; the YOUNGMOD_CACHE
    /// environment variable overrides this flag.
    #[arg(long)]
    cache: Option<PathBuf>,

    /// Dimension bound below which permutation modules are split
    /// directly instead of through Kostka-directed projections.
    #[arg(long)]
    split_threshold: Option<usize>,

    /// Random trials per indecomposability and isomorphism test.
    #[arg(long)]
    trials: Option<usize>,
}

impl PipelineOpts {
    /// Resolves the flags into a validated [`RunConfig`] for degree `n`,
    /// using `default_cache` when neither the cache flag nor the
    /// environment variable names a directory.
    fn configure(
        &self,
        n: usize,
        default_cache: Option<PathBuf>,
        emit: &[EmitKind],
    ) -> Result<RunConfig, Failure> {
        let mut config = RunConfig::new(n);
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(bound) = self.split_threshold {
            config.split_threshold = bound;
        }
        if let Some(trials) = self.trials {
            config.trials = trials;
        }
        config.cache_dir = match std::env::var_os("YOUNGMOD_CACHE") {
            Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
            _ => self.cache.clone().or(default_cache),
        };
        config.emit.extend(emit.iter().copied());
        config.validate().map_err(|e| usage(e.to_string()))?;
        Ok(config)
    }
}

/// Degree selection plus the shared pipeline flags.
#[derive(Args, Clone, Debug)]
struct BuildOpts {
    /// Symmetric group degree, between 1 and 7.
    #[arg(long, value_parser = clap::value_parser!(u64).range(MIN_DEGREE as u64..=MAX_DEGREE as u64))]
    n: u64,

    #[command(flatten)]
    pipeline: PipelineOpts,
}

impl BuildOpts {
    fn configure(
        &self,
        default_cache: Option<PathBuf>,
        emit: &[EmitKind],
    ) -> Result<RunConfig, Failure> {
        self.pipeline.configure(self.n as usize, default_cache, emit)
    }
}

/// Output encodings; each command accepts a subset.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

/// What a module analysis emits.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ShowEmit {
    /// The radical layering, top layer first.
    Layers,
    /// The composition factor multiset.
    Factors,
}

/// Which module family `analyze` constructs.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    /// The Young module of the shape.
    Young,
    /// The permutation module on the tabloids of the shape.
    Perm,
    /// The span of the polytabloids of the shape.
    Specht,
    /// The simple module of a 2-regular shape.
    Simple,
}

/// Which Schur algebra table `schur` emits.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SchurEmit {
    /// The Cartan matrix.
    Cartan,
    /// The decomposition matrix.
    Dmat,
    /// The Gabriel quiver.
    Quiver,
    /// Weyl module factors, or one layering with --lambda.
    Weyl,
    /// The block partition.
    Blocks,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the Young module catalog of one degree.
    Young {
        #[command(subcommand)]
        action: YoungAction,
    },
    /// Emit the 2-Kostka table of a degree.
    Kostka {
        #[command(flatten)]
        opts: BuildOpts,

        /// Output format: csv or json.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Analyze one module: radical layering or composition factors.
    Analyze {
        #[command(flatten)]
        opts: BuildOpts,

        /// The partition labeling the module, e.g. 4,1,1 or 4,1^2.
        #[arg(long)]
        lambda: String,

        /// Which module family to analyze.
        #[arg(long, value_enum, default_value_t = KindArg::Young)]
        kind: KindArg,

        /// What to emit.
        #[arg(long, value_enum, default_value_t = ShowEmit::Layers)]
        emit: ShowEmit,

        /// Output format: layerings render as text, json, or dot;
        /// factor multisets as text, csv, or json.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Emit tables of the basic Schur algebra of a degree.
    Schur {
        #[command(flatten)]
        opts: BuildOpts,

        /// Which table to emit.
        #[arg(long, value_enum, default_value_t = SchurEmit::Cartan)]
        emit: SchurEmit,

        /// Output format; defaults to csv for matrices and text
        /// otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,

        /// Restrict to one block, numbered from 1 in order of first
        /// member; applies to cartan, dmat, quiver, and blocks.
        #[arg(long)]
        block: Option<usize>,

        /// With --emit weyl: the label of a single Weyl module whose
        /// radical layering is emitted instead of the factor table.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Recompute structure data and compare it against the bundled
    /// tables; exits 1 on any mismatch.
    Verify {
        /// Degree to verify.
        #[arg(
            long,
            value_parser = clap::value_parser!(u64).range(MIN_DEGREE as u64..=MAX_DEGREE as u64),
            required_unless_present = "all",
            conflicts_with = "all"
        )]
        n: Option<u64>,

        /// Verify every degree from 1 through 7.
        #[arg(long)]
        all: bool,

        #[command(flatten)]
        pipeline: PipelineOpts,
    },
    /// Emit a layered module diagram or the quiver in DOT syntax.
    Diagram {
        #[command(flatten)]
        opts: BuildOpts,

        /// What to draw: young:SHAPE, weyl:SHAPE, or quiver.
        #[arg(long)]
        target: String,

        /// With --target quiver: restrict to one block, numbered from 1.
        #[arg(long)]
        block: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum YoungAction {
    /// Build the catalog, caching it under ./cache unless overridden.
    Build {
        #[command(flatten)]
        opts: BuildOpts,
    },
    /// Show one Young module's layering or factors.
    Show {
        #[command(flatten)]
        opts: BuildOpts,

        /// The partition labeling the Young module, e.g. 4,1^2.
        #[arg(long)]
        lambda: String,

        /// What to emit.
        #[arg(long, value_enum, default_value_t = ShowEmit::Layers)]
        emit: ShowEmit,

        /// Output format: layerings render as text, json, or dot;
        /// factor multisets as text, csv, or json.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn parse_shape(text: &str, n: usize) -> Result<Partition, Failure> {
    let shape: Partition = text
        .parse()
        .map_err(|e| usage(format!("invalid partition {text:?}: {e}")))?;
    if shape.n() != n {
        return Err(usage(format!("{shape} is not a partition of {n}")));
    }
    Ok(shape)
}

fn module_layers(
    module: &GModule,
    simples: &[GModule],
    what: &str,
) -> Result<Vec<LayerCounts>, Failure> {
    let series = radical_socle_series(module, simples)
        .map_err(|e| Failure::Runtime(format!("series analysis of {what} failed: {e}")))?;
    Ok(series
        .rad_series
        .layers
        .iter()
        .map(|layer| emit::layer_of(layer))
        .collect())
}

fn module_factors(
    module: &GModule,
    simples: &[GModule],
    what: &str,
) -> Result<LayerCounts, Failure> {
    let factors = composition_factors(module, simples)
        .map_err(|e| Failure::Runtime(format!("factor analysis of {what} failed: {e}")))?;
    Ok(emit::layer_of(&factors))
}

fn render_layers(layers: &[LayerCounts], format: Format, name: &str) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(emit::layers_text(layers)),
        Format::Json => Ok(emit::layers_json(layers)),
        Format::Dot => Ok(emit::layering_dot(name, layers)),
        Format::Csv => Err(usage("layerings render as text, json, or dot")),
    }
}

fn render_factors(counts: &LayerCounts, format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(emit::factors_text(counts)),
        Format::Csv => Ok(emit::factors_csv(counts)),
        Format::Json => Ok(emit::factors_json(counts)),
        Format::Dot => Err(usage("factor multisets render as text, csv, or json")),
    }
}

fn show_module(
    module: &GModule,
    simples: &[GModule],
    what: &str,
    what_emit: ShowEmit,
    format: Option<Format>,
) -> Result<String, Failure> {
    match what_emit {
        ShowEmit::Layers => {
            let layers = module_layers(module, simples, what)?;
            render_layers(&layers, format.unwrap_or(Format::Text), what)
        }
        ShowEmit::Factors => {
            let counts = module_factors(module, simples, what)?;
            render_factors(&counts, format.unwrap_or(Format::Text))
        }
    }
}

fn young_build(opts: &BuildOpts) -> Result<String, Failure> {
    let config = opts.configure(Some(PathBuf::from("cache")), &[])?;
    let bundle = build_bundle(&config).map_err(runtime)?;
    let mut out = String::new();
    out.push_str(&format!(
        "degree {}: {} Young modules\n",
        bundle.n,
        bundle.catalog.entries.len()
    ));
    for shape in bundle.catalog.shapes() {
        let note = bundle
            .catalog
            .provenance
            .get(&shape)
            .map(String::as_str)
            .unwrap_or("built");
        out.push_str(&format!(
            "Y[{shape}]: dim {} ({note})\n",
            bundle.catalog.young(&shape).dim
        ));
    }
    match &config.cache_dir {
        Some(dir) => out.push_str(&format!("cache: {}\n", dir.display())),
        None => out.push_str("cache: disabled\n"),
    }
    eprintln!("catalog built in {:.2}s", bundle.catalog_seconds);
    Ok(out)
}

fn young_show(
    opts: &BuildOpts,
    lambda: &str,
    what_emit: ShowEmit,
    format: Option<Format>,
) -> Result<String, Failure> {
    let kind = match what_emit {
        ShowEmit::Layers => EmitKind::Layers,
        ShowEmit::Factors => EmitKind::Factors,
    };
    let config = opts.configure(None, &[kind])?;
    let shape = parse_shape(lambda, config.n)?;
    let bundle = build_bundle(&config).map_err(runtime)?;
    show_module(
        bundle.catalog.young(&shape),
        &bundle.simples,
        &format!("Y[{shape}]"),
        what_emit,
        format,
    )
}

fn kostka_cmd(opts: &BuildOpts, format: Format) -> Result<String, Failure> {
    let config = opts.configure(None, &[EmitKind::Kostka])?;
    let bundle = build_bundle(&config).map_err(runtime)?;
    let shapes = bundle.catalog.shapes();
    let rows: Vec<Vec<usize>> = shapes
        .iter()
        .map(|lambda| shapes.iter().map(|mu| bundle.catalog.kostka(lambda, mu)).collect())
        .collect();
    match format {
        Format::Csv => Ok(emit::grid_csv("kostka", &shapes, &rows)),
        Format::Json => Ok(emit::grid_json(&shapes, &rows)),
        other => Err(usage(format!(
            "the Kostka table renders as csv or json, not {}",
            other.name()
        ))),
    }
}

fn analyze_cmd(
    opts: &BuildOpts,
    lambda: &str,
    kind: KindArg,
    what_emit: ShowEmit,
    format: Option<Format>,
) -> Result<String, Failure> {
    let emit_kind = match what_emit {
        ShowEmit::Layers => EmitKind::Layers,
        ShowEmit::Factors => EmitKind::Factors,
    };
    let config = opts.configure(None, &[emit_kind])?;
    let shape = parse_shape(lambda, config.n)?;
    if kind == KindArg::Simple && !shape.is_two_regular() {
        return Err(usage(format!(
            "simple modules are labeled by 2-regular partitions; {shape} is not 2-regular"
        )));
    }
    let bundle = build_bundle(&config).map_err(runtime)?;
    let (module, what) = match kind {
        KindArg::Young => (bundle.catalog.young(&shape).clone(), format!("Y[{shape}]")),
        KindArg::Perm => (perm_module(&shape), format!("M[{shape}]")),
        KindArg::Specht => (specht_module(&shape).0, format!("S[{shape}]")),
        KindArg::Simple => (simple_module(&shape), format!("D[{shape}]")),
    };
    show_module(&module, &bundle.simples, &what, what_emit, format)
}

/// The 1-based block's member positions within the algebra shape order.
fn block_members(
    algebra: &BasicAlgebra,
    reports: &[BlockReport],
    block: usize,
) -> Result<Vec<usize>, Failure> {
    let report = reports.get(block.wrapping_sub(1)).ok_or_else(|| {
        usage(format!(
            "block {block} does not exist; the algebra has {} blocks",
            reports.len()
        ))
    })?;
    Ok(report
        .shapes
        .iter()
        .map(|shape| {
            algebra
                .shapes
                .iter()
                .position(|s| s == shape)
                .expect("block members label the algebra")
        })
        .collect())
}

fn restrict_grid(
    shapes: &[Partition],
    rows: &[Vec<usize>],
    members: Option<&[usize]>,
) -> (Vec<Partition>, Vec<Vec<usize>>) {
    match members {
        None => (shapes.to_vec(), rows.to_vec()),
        Some(members) => {
            let sub_shapes = members.iter().map(|&i| shapes[i].clone()).collect();
            let sub_rows = members
                .iter()
                .map(|&i| members.iter().map(|&j| rows[i][j]).collect())
                .collect();
            (sub_shapes, sub_rows)
        }
    }
}

fn weyl_factor_table(
    algebra: &BasicAlgebra,
    format: Format,
) -> Result<String, Failure> {
    let mut factors: Vec<(Partition, LayerCounts)> = Vec::new();
    for shape in &algebra.shapes {
        let module = weyl_module(algebra, shape).map_err(runtime)?;
        let counts: LayerCounts = module
            .idempotent_dims
            .iter()
            .filter(|&(_, &count)| count > 0)
            .map(|(label, &count)| (label.clone(), count))
            .collect();
        factors.push((shape.clone(), counts));
    }
    match format {
        Format::Text => {
            let mut out = String::new();
            for (shape, counts) in &factors {
                let line = emit::factors_text(counts);
                out.push_str(&format!("Delta[{shape}]: {}", line));
            }
            Ok(out)
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = factors
                .iter()
                .map(|(shape, counts)| {
                    let inner: serde_json::Map<String, serde_json::Value> = counts
                        .iter()
                        .map(|(label, count)| {
                            (label.to_string(), serde_json::Value::from(*count))
                        })
                        .collect();
                    (shape.to_string(), serde_json::Value::Object(inner))
                })
                .collect();
            let mut text = serde_json::Value::Object(map).to_string();
            text.push('\n');
            Ok(text)
        }
        other => Err(usage(format!(
            "the Weyl factor table renders as text or json, not {}",
            other.name()
        ))),
    }
}

fn schur_cmd(
    opts: &BuildOpts,
    what_emit: SchurEmit,
    format: Option<Format>,
    block: Option<usize>,
    lambda: Option<&str>,
) -> Result<String, Failure> {
    let emit_kind = match what_emit {
        SchurEmit::Cartan | SchurEmit::Dmat => EmitKind::Cartan,
        SchurEmit::Quiver => EmitKind::Quiver,
        SchurEmit::Weyl => EmitKind::Weyl,
        SchurEmit::Blocks => EmitKind::Blocks,
    };
    let config = opts.configure(None, &[emit_kind])?;
    if lambda.is_some() && what_emit != SchurEmit::Weyl {
        return Err(usage("--lambda only applies to --emit weyl"));
    }
    if block.is_some() && matches!(what_emit, SchurEmit::Weyl) {
        return Err(usage(
            "--block applies to cartan, dmat, quiver, and blocks output",
        ));
    }
    let bundle = build_bundle(&config).map_err(runtime)?;
    let algebra = bundle.algebra().map_err(runtime)?;
    let members = match block {
        Some(k) => {
            let reports = blocks_and_fingerprint(algebra).map_err(runtime)?;
            Some(block_members(algebra, &reports, k)?)
        }
        None => None,
    };
    match what_emit {
        SchurEmit::Cartan | SchurEmit::Dmat => {
            let (name, rows) = match what_emit {
                SchurEmit::Cartan => ("cartan", cartan_matrix(algebra)),
                _ => ("dmat", decomposition_matrix(algebra).map_err(runtime)?),
            };
            let (shapes, rows) = restrict_grid(&algebra.shapes, &rows, members.as_deref());
            match format.unwrap_or(Format::Csv) {
                Format::Csv => Ok(emit::grid_csv(name, &shapes, &rows)),
                Format::Json => Ok(emit::grid_json(&shapes, &rows)),
                other => Err(usage(format!(
                    "matrices render as csv or json, not {}",
                    other.name()
                ))),
            }
        }
        SchurEmit::Quiver => {
            let (_, quiver) = radical_and_quiver(algebra);
            let (shapes, grid) = restrict_grid(&algebra.shapes, &quiver, members.as_deref());
            match format.unwrap_or(Format::Text) {
                Format::Text => Ok(emit::quiver_text(&shapes, &grid)),
                Format::Dot => Ok(emit::quiver_dot("quiver", &shapes, &grid)),
                other => Err(usage(format!(
                    "the quiver renders as text or dot, not {}",
                    other.name()
                ))),
            }
        }
        SchurEmit::Weyl => match lambda {
            Some(text) => {
                let shape = parse_shape(text, config.n)?;
                let module = weyl_module(algebra, &shape).map_err(runtime)?;
                let layers = module_radical_layers(algebra, &module);
                render_layers(
                    &layers,
                    format.unwrap_or(Format::Text),
                    &format!("Delta[{shape}]"),
                )
            }
            None => weyl_factor_table(algebra, format.unwrap_or(Format::Text)),
        },
        SchurEmit::Blocks => {
            let reports = blocks_and_fingerprint(algebra).map_err(runtime)?;
            let selected: Vec<BlockReport> = match block {
                Some(k) => {
                    let report = reports.get(k - 1).ok_or_else(|| {
                        usage(format!(
                            "block {k} does not exist; the algebra has {} blocks",
                            reports.len()
                        ))
                    })?;
                    vec![report.clone()]
                }
                None => reports,
            };
            match format.unwrap_or(Format::Text) {
                Format::Text => Ok(emit::blocks_text(&selected)),
                Format::Json => Ok(emit::blocks_json(&selected)),
                other => Err(usage(format!(
                    "blocks render as text or json, not {}",
                    other.name()
                ))),
            }
        }
    }
}

fn verify_cmd(pipeline: &PipelineOpts, n: Option<u64>, all: bool) -> Result<i32, Failure> {
    let base = pipeline.configure(MIN_DEGREE, None, &[])?;
    let cache = BundleCache::new(base);
    let degrees: Vec<usize> = if all {
        (MIN_DEGREE..=MAX_DEGREE).collect()
    } else {
        vec![n.expect("clap requires --n unless --all") as usize]
    };
    let mut all_ok = true;
    for degree in degrees {
        let report = verify_degree(&cache, degree).map_err(runtime)?;
        print!("{}", report.render());
        if !report.all_passed() {
            all_ok = false;
        }
    }
    if all_ok {
        Ok(0)
    } else {
        println!("verify: FAIL");
        Ok(1)
    }
}

enum Target {
    Young(Partition),
    Weyl(Partition),
    Quiver,
}

fn parse_target(text: &str, n: usize) -> Result<Target, Failure> {
    if text == "quiver" {
        return Ok(Target::Quiver);
    }
    if let Some(label) = text.strip_prefix("young:") {
        return Ok(Target::Young(parse_shape(label, n)?));
    }
    if let Some(label) = text.strip_prefix("weyl:") {
        return Ok(Target::Weyl(parse_shape(label, n)?));
    }
    Err(usage(format!(
        "invalid target {text:?}; expected young:SHAPE, weyl:SHAPE, or quiver"
    )))
}

fn diagram_cmd(opts: &BuildOpts, target: &str, block: Option<usize>) -> Result<String, Failure> {
    let config = opts.configure(None, &[EmitKind::Dot])?;
    let target = parse_target(target, config.n)?;
    if block.is_some() && !matches!(target, Target::Quiver) {
        return Err(usage("--block only applies to --target quiver"));
    }
    let bundle = build_bundle(&config).map_err(runtime)?;
    match target {
        Target::Young(shape) => {
            let what = format!("Y[{shape}]");
            let layers = module_layers(bundle.catalog.young(&shape), &bundle.simples, &what)?;
            Ok(emit::layering_dot(&what, &layers))
        }
        Target::Weyl(shape) => {
            let algebra = bundle.algebra().map_err(runtime)?;
            let module = weyl_module(algebra, &shape).map_err(runtime)?;
            let layers = module_radical_layers(algebra, &module);
            Ok(emit::layering_dot(&format!("Delta[{shape}]"), &layers))
        }
        Target::Quiver => {
            let algebra = bundle.algebra().map_err(runtime)?;
            let (_, quiver) = radical_and_quiver(algebra);
            let members = match block {
                Some(k) => {
                    let reports = blocks_and_fingerprint(algebra).map_err(runtime)?;
                    Some(block_members(algebra, &reports, k)?)
                }
                None => None,
            };
            let (shapes, grid) = restrict_grid(&algebra.shapes, &quiver, members.as_deref());
            Ok(emit::quiver_dot("quiver", &shapes, &grid))
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    let output = match &cli.command {
        Command::Young { action } => match action {
            YoungAction::Build { opts } => young_build(opts)?,
            YoungAction::Show {
                opts,
                lambda,
                emit,
                format,
            } => young_show(opts, lambda, *emit, *format)?,
        },
        Command::Kostka { opts, format } => kostka_cmd(opts, *format)?,
        Command::Analyze {
            opts,
            lambda,
            kind,
            emit,
            format,
        } => analyze_cmd(opts, lambda, *kind, *emit, *format)?,
        Command::Schur {
            opts,
            emit,
            format,
            block,
            lambda,
        } => schur_cmd(opts, *emit, *format, *block, lambda.as_deref())?,
        Command::Verify { n, all, pipeline } => return verify_cmd(pipeline, *n, *all),
        Command::Diagram {
            opts,
            target,
            block,
        } => diagram_cmd(opts, target, *block)?,
    };
    print!("{output}");
    Ok(0)
}

/// Parses `argv` and runs the requested command, returning the process
/// exit code: 0 on success, 1 for runtime failures or fixture
/// mismatches, 2 for usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(error) => {
            let code = if error.use_stderr() { 2 } else { 0 };
            let _ = error.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(Failure::Runtime(message)) => {
            eprintln!("error: {message}");
            1
        }
    }
}
