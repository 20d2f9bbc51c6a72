//! Bundled reference tables.
//!
//! The JSON files under `fixtures/` transcribe the published structure
//! data this workbench reproduces: 2-Kostka tables, radical layerings of
//! every Young module, the uniserial and heart special cases, Cartan and
//! decomposition matrices, Schur projective layerings, displayed Weyl
//! layerings, quiver edge sets, and the block partition with its
//! cross-degree correspondence. Composition factor multisets are the
//! flattened radical layerings; Specht filtration lists and Weyl factor
//! multisets are columns and rows of the decomposition matrices.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use combinat::Partition;
use serde::Deserialize;

#[derive(Deserialize)]
struct RawGrid {
    n: usize,
    shapes: Vec<String>,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawModuleLayers {
    shape: String,
    layers: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct RawDegreeLayers {
    n: usize,
    #[serde(alias = "projectives")]
    modules: Vec<RawModuleLayers>,
}

#[derive(Deserialize)]
struct RawUniserial {
    n: usize,
    shape: String,
    chain: Vec<String>,
}

#[derive(Deserialize)]
struct RawHeart {
    n: usize,
    shape: String,
    summands: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct RawWeylEntry {
    shape: String,
    chain: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawWeylDegree {
    n: usize,
    entries: Vec<RawWeylEntry>,
}

#[derive(Deserialize)]
struct RawQuiver {
    n: usize,
    shapes: Vec<String>,
    pairs: Vec<[String; 2]>,
}

#[derive(Deserialize)]
struct RawBlock {
    core: String,
    weight: usize,
    shapes: Vec<String>,
}

#[derive(Deserialize)]
struct RawBlocksDegree {
    n: usize,
    blocks: Vec<RawBlock>,
}

#[derive(Deserialize)]
struct RawCorrespondence {
    from_n: usize,
    from_core: String,
    to_n: usize,
    to_core: String,
    pairs: Vec<[String; 2]>,
}

#[derive(Deserialize)]
struct RawBlocksFile {
    degrees: Vec<RawBlocksDegree>,
    correspondence: RawCorrespondence,
}

/// A square integer table indexed by the partitions of one degree.
#[derive(Clone, Debug)]
pub struct GridTable {
    /// The degree.
    pub n: usize,
    /// Row and column labels, in descending shape order.
    pub shapes: Vec<Partition>,
    /// Table entries, one row per shape.
    pub rows: Vec<Vec<usize>>,
}

impl GridTable {
    /// The row index of a shape.
    ///
    /// # Panics
    /// Panics when the shape is not a label of this table.
    #[must_use]
    pub fn index_of(&self, shape: &Partition) -> usize {
        self.shapes
            .iter()
            .position(|s| s == shape)
            .unwrap_or_else(|| panic!("{shape} is not a label of the degree {} table", self.n))
    }
}

/// One layer of a layering: labels with multiplicities.
pub type LayerCounts = BTreeMap<Partition, usize>;

/// Radical layerings of a family of modules at one degree.
#[derive(Clone, Debug)]
pub struct DegreeLayers {
    /// The degree.
    pub n: usize,
    /// Per shape: the layering, top layer first.
    pub modules: Vec<(Partition, Vec<LayerCounts>)>,
}

impl DegreeLayers {
    /// The layering recorded for a shape.
    ///
    /// # Panics
    /// Panics when the shape has no recorded layering.
    #[must_use]
    pub fn layers_of(&self, shape: &Partition) -> &[LayerCounts] {
        self.modules
            .iter()
            .find(|(s, _)| s == shape)
            .map(|(_, layers)| layers.as_slice())
            .unwrap_or_else(|| panic!("no recorded layering for {shape} at degree {}", self.n))
    }
}

/// A module the tables record as uniserial, with its factor chain.
#[derive(Clone, Debug)]
pub struct UniserialCase {
    /// The degree.
    pub n: usize,
    /// The Young module label.
    pub shape: Partition,
    /// Factor labels, top first.
    pub chain: Vec<Partition>,
}

/// A recorded heart decomposition: the direct summands of
/// `rad(Y)/soc(Y)`, each a uniserial chain.
#[derive(Clone, Debug)]
pub struct HeartCase {
    /// The degree.
    pub n: usize,
    /// The Young module label.
    pub shape: Partition,
    /// One chain per indecomposable summand, top first.
    pub summands: Vec<Vec<Partition>>,
}

/// The displayed Weyl modules of one degree.
#[derive(Clone, Debug)]
pub struct WeylDegree {
    /// The degree.
    pub n: usize,
    /// Per shape: the factor chain when the displayed diagram is one.
    pub entries: Vec<(Partition, Option<Vec<Partition>>)>,
}

/// A recorded quiver: vertex labels and bidirected edge pairs, each pair
/// standing for one arrow in each direction.
#[derive(Clone, Debug)]
pub struct QuiverFixture {
    /// The degree.
    pub n: usize,
    /// Vertex labels in descending shape order.
    pub shapes: Vec<Partition>,
    /// Unordered adjacent pairs; every recorded arrow has multiplicity 1.
    pub pairs: Vec<(Partition, Partition)>,
}

/// One block of the basic Schur algebra.
#[derive(Clone, Debug)]
pub struct BlockFixture {
    /// The common 2-core of the member shapes.
    pub core: Partition,
    /// The common 2-weight of the member shapes.
    pub weight: usize,
    /// Member shapes in descending shape order.
    pub shapes: Vec<Partition>,
}

/// The block partitions of every degree plus the recorded cross-degree
/// block correspondence.
#[derive(Clone, Debug)]
pub struct BlocksFixture {
    /// Per degree: the blocks in order of first member.
    pub degrees: Vec<(usize, Vec<BlockFixture>)>,
    /// The recorded equivalence of two blocks at different degrees.
    pub correspondence: Correspondence,
}

/// An order-preserving bijection between the shapes of two blocks.
#[derive(Clone, Debug)]
pub struct Correspondence {
    /// Degree of the source block.
    pub from_n: usize,
    /// 2-core of the source block.
    pub from_core: Partition,
    /// Degree of the target block.
    pub to_n: usize,
    /// 2-core of the target block.
    pub to_core: Partition,
    /// Shape pairs (source, target), in descending source order.
    pub pairs: Vec<(Partition, Partition)>,
}

/// Every bundled table, parsed and typed.
pub struct FixtureSet {
    /// 2-Kostka tables for degrees 1..=7.
    pub kostka: Vec<GridTable>,
    /// Radical layerings of every Young module, degrees 1..=7.
    pub young_layers: Vec<DegreeLayers>,
    /// The recorded uniserial Young modules.
    pub uniserial: Vec<UniserialCase>,
    /// The recorded heart decompositions.
    pub hearts: Vec<HeartCase>,
    /// Cartan matrices of the basic Schur algebras, degrees 1..=5.
    pub cartan: Vec<GridTable>,
    /// Radical layerings of the Schur projectives, degrees 1..=5.
    pub schur_layers: Vec<DegreeLayers>,
    /// Decomposition matrices, degrees 1..=7; row `i`, column `j` is the
    /// multiplicity of the simple labeled by shape `j` in the Weyl module
    /// labeled by shape `i`.
    pub dmat: Vec<GridTable>,
    /// Displayed Weyl chains for degrees 6 and 7.
    pub weyl: Vec<WeylDegree>,
    /// Quiver edge sets for degree 6 and the first block of degree 7.
    pub quiver: Vec<QuiverFixture>,
    /// Block partitions and the cross-degree correspondence.
    pub blocks: BlocksFixture,
}

impl FixtureSet {
    fn table(tables: &[GridTable], n: usize) -> Option<&GridTable> {
        tables.iter().find(|t| t.n == n)
    }

    /// The 2-Kostka table of a degree.
    ///
    /// # Panics
    /// Panics when the degree is outside 1..=7.
    #[must_use]
    pub fn kostka_table(&self, n: usize) -> &GridTable {
        Self::table(&self.kostka, n)
            .unwrap_or_else(|| panic!("no bundled Kostka table for degree {n}"))
    }

    /// The Young module layerings of a degree.
    ///
    /// # Panics
    /// Panics when the degree is outside 1..=7.
    #[must_use]
    pub fn young_layer_table(&self, n: usize) -> &DegreeLayers {
        self.young_layers
            .iter()
            .find(|d| d.n == n)
            .unwrap_or_else(|| panic!("no bundled Young layerings for degree {n}"))
    }

    /// The flattened factor multiset of one recorded Young module.
    ///
    /// # Panics
    /// Panics when the degree or shape has no recorded layering.
    #[must_use]
    pub fn young_factors(&self, n: usize, shape: &Partition) -> LayerCounts {
        let mut counts = LayerCounts::new();
        for layer in self.young_layer_table(n).layers_of(shape) {
            for (label, count) in layer {
                *counts.entry(label.clone()).or_insert(0) += count;
            }
        }
        counts
    }

    /// The Cartan matrix of a degree, when bundled (degrees 1..=5).
    #[must_use]
    pub fn cartan_table(&self, n: usize) -> Option<&GridTable> {
        Self::table(&self.cartan, n)
    }

    /// The Schur projective layerings of a degree, when bundled.
    #[must_use]
    pub fn schur_layer_table(&self, n: usize) -> Option<&DegreeLayers> {
        self.schur_layers.iter().find(|d| d.n == n)
    }

    /// The decomposition matrix of a degree.
    ///
    /// # Panics
    /// Panics when the degree is outside 1..=7.
    #[must_use]
    pub fn dmat_table(&self, n: usize) -> &GridTable {
        Self::table(&self.dmat, n)
            .unwrap_or_else(|| panic!("no bundled decomposition matrix for degree {n}"))
    }

    /// The recorded factor multiset of one Weyl module: the nonzero
    /// entries of its decomposition matrix row.
    ///
    /// # Panics
    /// Panics when the degree or shape is not bundled.
    #[must_use]
    pub fn weyl_factors(&self, n: usize, shape: &Partition) -> LayerCounts {
        let table = self.dmat_table(n);
        let row = table.index_of(shape);
        table.shapes
            .iter()
            .zip(&table.rows[row])
            .filter(|(_, &count)| count > 0)
            .map(|(label, &count)| (label.clone(), count))
            .collect()
    }

    /// The recorded Specht filtration of one Young module: the nonzero
    /// entries of its decomposition matrix column, by reciprocity.
    ///
    /// # Panics
    /// Panics when the degree or shape is not bundled.
    #[must_use]
    pub fn specht_filtration(&self, n: usize, shape: &Partition) -> Vec<(Partition, usize)> {
        let table = self.dmat_table(n);
        let col = table.index_of(shape);
        table.shapes
            .iter()
            .enumerate()
            .filter(|&(i, _)| table.rows[i][col] > 0)
            .map(|(i, label)| (label.clone(), table.rows[i][col]))
            .collect()
    }

    /// The displayed Weyl entries of a degree, when bundled (6 and 7).
    #[must_use]
    pub fn weyl_degree(&self, n: usize) -> Option<&WeylDegree> {
        self.weyl.iter().find(|d| d.n == n)
    }

    /// The recorded quiver of a degree, when bundled.
    #[must_use]
    pub fn quiver_fixture(&self, n: usize) -> Option<&QuiverFixture> {
        self.quiver.iter().find(|q| q.n == n)
    }

    /// The recorded block partition of a degree.
    ///
    /// # Panics
    /// Panics when the degree is outside 1..=7.
    #[must_use]
    pub fn blocks_of(&self, n: usize) -> &[BlockFixture] {
        self.blocks
            .degrees
            .iter()
            .find(|(m, _)| *m == n)
            .map(|(_, blocks)| blocks.as_slice())
            .unwrap_or_else(|| panic!("no bundled block partition for degree {n}"))
    }

    /// The recorded uniserial cases of a degree.
    #[must_use]
    pub fn uniserial_cases(&self, n: usize) -> Vec<&UniserialCase> {
        self.uniserial.iter().filter(|c| c.n == n).collect()
    }

    /// The recorded heart cases of a degree.
    #[must_use]
    pub fn heart_cases(&self, n: usize) -> Vec<&HeartCase> {
        self.hearts.iter().filter(|c| c.n == n).collect()
    }
}

fn shape(text: &str) -> Partition {
    text.parse()
        .unwrap_or_else(|e| panic!("bundled partition {text:?} failed to parse: {e}"))
}

fn layer_counts(labels: &[String]) -> LayerCounts {
    let mut counts = LayerCounts::new();
    for label in labels {
        *counts.entry(shape(label)).or_insert(0) += 1;
    }
    counts
}

fn grid(raw: Vec<RawGrid>, what: &str) -> Vec<GridTable> {
    raw.into_iter()
        .map(|t| {
            assert_eq!(
                t.shapes.len(),
                t.rows.len(),
                "{what} table for degree {} is square",
                t.n
            );
            for row in &t.rows {
                assert_eq!(
                    row.len(),
                    t.shapes.len(),
                    "{what} rows for degree {} have one entry per shape",
                    t.n
                );
            }
            GridTable {
                n: t.n,
                shapes: t.shapes.iter().map(|s| shape(s)).collect(),
                rows: t.rows,
            }
        })
        .collect()
}

fn degree_layers(raw: Vec<RawDegreeLayers>) -> Vec<DegreeLayers> {
    raw.into_iter()
        .map(|d| DegreeLayers {
            n: d.n,
            modules: d
                .modules
                .into_iter()
                .map(|m| {
                    let layers = m.layers.iter().map(|l| layer_counts(l)).collect();
                    (shape(&m.shape), layers)
                })
                .collect(),
        })
        .collect()
}

fn parse_json<T: serde::de::DeserializeOwned>(name: &str, text: &str) -> T {
    serde_json::from_str(text)
        .unwrap_or_else(|e| panic!("bundled fixture {name} failed to parse: {e}"))
}

fn load() -> FixtureSet {
    let kostka = grid(
        parse_json("kostka.json", include_str!("../fixtures/kostka.json")),
        "kostka",
    );
    let young_layers = degree_layers(parse_json(
        "young_layers.json",
        include_str!("../fixtures/young_layers.json"),
    ));
    let uniserial: Vec<RawUniserial> =
        parse_json("uniserial.json", include_str!("../fixtures/uniserial.json"));
    let hearts: Vec<RawHeart> =
        parse_json("hearts.json", include_str!("../fixtures/hearts.json"));
    let cartan = grid(
        parse_json("cartan.json", include_str!("../fixtures/cartan.json")),
        "cartan",
    );
    let schur_layers = degree_layers(parse_json(
        "schur_layers.json",
        include_str!("../fixtures/schur_layers.json"),
    ));
    let dmat = grid(
        parse_json("dmat.json", include_str!("../fixtures/dmat.json")),
        "dmat",
    );
    let weyl: Vec<RawWeylDegree> =
        parse_json("weyl.json", include_str!("../fixtures/weyl.json"));
    let quiver: Vec<RawQuiver> =
        parse_json("quiver.json", include_str!("../fixtures/quiver.json"));
    let blocks: RawBlocksFile =
        parse_json("blocks.json", include_str!("../fixtures/blocks.json"));

    FixtureSet {
        kostka,
        young_layers,
        uniserial: uniserial
            .into_iter()
            .map(|c| UniserialCase {
                n: c.n,
                shape: shape(&c.shape),
                chain: c.chain.iter().map(|s| shape(s)).collect(),
            })
            .collect(),
        hearts: hearts
            .into_iter()
            .map(|c| HeartCase {
                n: c.n,
                shape: shape(&c.shape),
                summands: c
                    .summands
                    .iter()
                    .map(|chain| chain.iter().map(|s| shape(s)).collect())
                    .collect(),
            })
            .collect(),
        cartan,
        schur_layers,
        dmat,
        weyl: weyl
            .into_iter()
            .map(|d| WeylDegree {
                n: d.n,
                entries: d
                    .entries
                    .into_iter()
                    .map(|e| {
                        let chain = e
                            .chain
                            .map(|labels| labels.iter().map(|s| shape(s)).collect());
                        (shape(&e.shape), chain)
                    })
                    .collect(),
            })
            .collect(),
        quiver: quiver
            .into_iter()
            .map(|q| QuiverFixture {
                n: q.n,
                shapes: q.shapes.iter().map(|s| shape(s)).collect(),
                pairs: q
                    .pairs
                    .iter()
                    .map(|[a, b]| (shape(a), shape(b)))
                    .collect(),
            })
            .collect(),
        blocks: BlocksFixture {
            degrees: blocks
                .degrees
                .into_iter()
                .map(|d| {
                    let list = d
                        .blocks
                        .into_iter()
                        .map(|b| BlockFixture {
                            core: shape(&b.core),
                            weight: b.weight,
                            shapes: b.shapes.iter().map(|s| shape(s)).collect(),
                        })
                        .collect();
                    (d.n, list)
                })
                .collect(),
            correspondence: Correspondence {
                from_n: blocks.correspondence.from_n,
                from_core: shape(&blocks.correspondence.from_core),
                to_n: blocks.correspondence.to_n,
                to_core: shape(&blocks.correspondence.to_core),
                pairs: blocks
                    .correspondence
                    .pairs
                    .iter()
                    .map(|[a, b]| (shape(a), shape(b)))
                    .collect(),
            },
        },
    }
}

/// The bundled dataset, parsed once per process.
#[must_use]
pub fn fixtures() -> &'static FixtureSet {
    static SET: OnceLock<FixtureSet> = OnceLock::new();
    SET.get_or_init(load)
}
