//! Deterministic text, CSV, JSON, and DOT renderings.
//!
//! Every function here is a pure formatter: identical inputs produce
//! byte-identical output. Partition labels contain commas, so CSV fields
//! are quoted where needed and plain-text lists separate entries with
//! ` + ` instead.

use std::fmt::Write as _;

use combinat::Partition;
use schuralg::BlockReport;
use serde_json::{json, Value};

use crate::fixtures::LayerCounts;

/// Renders a partition as a filesystem- and DOT-safe slug: parts joined
/// by `-` with repeats collapsed into `e` exponents, e.g. `2,1,1,1` to
/// `2-1e3`; the empty partition renders as `0`.
#[must_use]
pub fn slug(shape: &Partition) -> String {
    if shape.parts().is_empty() {
        return "0".to_string();
    }
    let mut pieces: Vec<String> = Vec::new();
    let mut i = 0;
    let parts = shape.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if j - i == 1 {
            pieces.push(parts[i].to_string());
        } else {
            pieces.push(format!("{}e{}", parts[i], j - i));
        }
        i = j;
    }
    pieces.join("-")
}

fn csv_from_records(records: Vec<Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.write_record(&record).expect("writing CSV to memory");
    }
    let bytes = writer.into_inner().expect("flushing CSV to memory");
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

/// Renders a labeled integer grid as CSV: a header row with `corner`
/// followed by the column labels, then one row per shape.
#[must_use]
pub fn grid_csv(corner: &str, shapes: &[Partition], rows: &[Vec<usize>]) -> String {
    let mut records = Vec::with_capacity(rows.len() + 1);
    let mut header = vec![corner.to_string()];
    header.extend(shapes.iter().map(ToString::to_string));
    records.push(header);
    for (shape, row) in shapes.iter().zip(rows) {
        let mut record = vec![shape.to_string()];
        record.extend(row.iter().map(ToString::to_string));
        records.push(record);
    }
    csv_from_records(records)
}

/// Renders a labeled integer grid as JSON with sorted keys.
#[must_use]
pub fn grid_json(shapes: &[Partition], rows: &[Vec<usize>]) -> String {
    let value = json!({
        "shapes": shapes.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "rows": rows,
    });
    let mut text = value.to_string();
    text.push('\n');
    text
}

fn expand_layer(layer: &LayerCounts) -> Vec<Partition> {
    let mut labels = Vec::new();
    for (label, count) in layer.iter().rev() {
        for _ in 0..*count {
            labels.push(label.clone());
        }
    }
    labels
}

/// Normalizes a computed layer into label counts.
#[must_use]
pub fn layer_of(pairs: &[(Partition, usize)]) -> LayerCounts {
    let mut counts = LayerCounts::new();
    for (label, count) in pairs {
        *counts.entry(label.clone()).or_insert(0) += count;
    }
    counts
}

/// Renders a layering as text: one line per layer, top first, factors in
/// descending shape order joined by ` + `, repeated per multiplicity.
#[must_use]
pub fn layers_text(layers: &[LayerCounts]) -> String {
    let mut out = String::new();
    for (i, layer) in layers.iter().enumerate() {
        let labels: Vec<String> = expand_layer(layer).iter().map(ToString::to_string).collect();
        writeln!(out, "{}: {}", i + 1, labels.join(" + ")).expect("writing to string");
    }
    out
}

/// Renders a layering as a JSON array of layers, each an array of labels
/// in descending shape order, repeated per multiplicity.
#[must_use]
pub fn layers_json(layers: &[LayerCounts]) -> String {
    let value: Value = layers
        .iter()
        .map(|layer| {
            expand_layer(layer)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into();
    let mut text = value.to_string();
    text.push('\n');
    text
}

/// Renders a factor multiset as text: one `label xCount` entry per
/// factor in descending shape order, joined by ` + `.
#[must_use]
pub fn factors_text(counts: &LayerCounts) -> String {
    let entries: Vec<String> = counts
        .iter()
        .rev()
        .map(|(label, count)| {
            if *count == 1 {
                label.to_string()
            } else {
                format!("{label} x{count}")
            }
        })
        .collect();
    let mut text = entries.join(" + ");
    text.push('\n');
    text
}

/// Renders a factor multiset as CSV with `factor,count` records in
/// descending shape order.
#[must_use]
pub fn factors_csv(counts: &LayerCounts) -> String {
    let mut records = vec![vec!["factor".to_string(), "count".to_string()]];
    for (label, count) in counts.iter().rev() {
        records.push(vec![label.to_string(), count.to_string()]);
    }
    csv_from_records(records)
}

/// Renders a factor multiset as a JSON object keyed by label.
#[must_use]
pub fn factors_json(counts: &LayerCounts) -> String {
    let map: serde_json::Map<String, Value> = counts
        .iter()
        .map(|(label, count)| (label.to_string(), Value::from(*count)))
        .collect();
    let mut text = Value::Object(map).to_string();
    text.push('\n');
    text
}

/// Renders a layering as a DOT digraph: one box node per factor, layers
/// ranked top-to-bottom, and an edge from every node of a layer to every
/// node of the next. Edges mark layer adjacency, not individual
/// extension witnesses.
#[must_use]
pub fn layering_dot(name: &str, layers: &[LayerCounts]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").expect("writing to string");
    writeln!(out, "  rankdir=TB;").expect("writing to string");
    writeln!(out, "  node [shape=box];").expect("writing to string");
    let expanded: Vec<Vec<Partition>> = layers.iter().map(expand_layer).collect();
    for (i, layer) in expanded.iter().enumerate() {
        let mut line = String::from("  { rank=same;");
        for (k, label) in layer.iter().enumerate() {
            write!(line, " n{i}_{k} [label=\"{label}\"];").expect("writing to string");
        }
        line.push_str(" }");
        writeln!(out, "{line}").expect("writing to string");
    }
    for i in 1..expanded.len() {
        for k in 0..expanded[i - 1].len() {
            for l in 0..expanded[i].len() {
                writeln!(out, "  n{}_{k} -> n{i}_{l};", i - 1).expect("writing to string");
            }
        }
    }
    writeln!(out, "}}").expect("writing to string");
    out
}

/// Renders a quiver as a DOT digraph with stable node order: every
/// vertex is declared, paired arrows render once with `dir=both`
/// (repeated per multiplicity), and any arrow surplus in one direction
/// renders as a plain edge.
#[must_use]
pub fn quiver_dot(name: &str, shapes: &[Partition], quiver: &[Vec<usize>]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").expect("writing to string");
    writeln!(out, "  node [shape=box];").expect("writing to string");
    for shape in shapes {
        writeln!(out, "  \"{shape}\";").expect("writing to string");
    }
    for i in 0..shapes.len() {
        for j in i..shapes.len() {
            let forward = quiver[i][j];
            let backward = if i == j { 0 } else { quiver[j][i] };
            let both = forward.min(backward);
            for _ in 0..both {
                writeln!(out, "  \"{}\" -> \"{}\" [dir=both];", shapes[i], shapes[j])
                    .expect("writing to string");
            }
            for _ in both..forward {
                writeln!(out, "  \"{}\" -> \"{}\";", shapes[i], shapes[j])
                    .expect("writing to string");
            }
            for _ in both..backward {
                writeln!(out, "  \"{}\" -> \"{}\";", shapes[j], shapes[i])
                    .expect("writing to string");
            }
        }
    }
    writeln!(out, "}}").expect("writing to string");
    out
}

/// Renders a quiver as text: one `a -- b` line per bidirected pair in
/// scan order, with an `xCount` suffix for multiplicities above 1 and
/// explicit `a -> b` lines for any one-directional surplus.
#[must_use]
pub fn quiver_text(shapes: &[Partition], quiver: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for i in 0..shapes.len() {
        for j in i..shapes.len() {
            let forward = quiver[i][j];
            let backward = if i == j { 0 } else { quiver[j][i] };
            let both = forward.min(backward);
            if both > 0 {
                let suffix = if both > 1 { format!(" x{both}") } else { String::new() };
                writeln!(out, "{} -- {}{suffix}", shapes[i], shapes[j])
                    .expect("writing to string");
            }
            for _ in both..forward {
                writeln!(out, "{} -> {}", shapes[i], shapes[j]).expect("writing to string");
            }
            for _ in both..backward {
                writeln!(out, "{} -> {}", shapes[j], shapes[i]).expect("writing to string");
            }
        }
    }
    out
}

/// Renders block reports as text: one line per block with core, weight,
/// and member shapes.
#[must_use]
pub fn blocks_text(reports: &[BlockReport]) -> String {
    let mut out = String::new();
    for (i, block) in reports.iter().enumerate() {
        let members: Vec<String> = block.shapes.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "block {}: core {}, weight {}, shapes {}",
            i + 1,
            block.core,
            block.weight,
            members.join(" + ")
        )
        .expect("writing to string");
    }
    out
}

/// Renders block reports as JSON with sorted keys.
#[must_use]
pub fn blocks_json(reports: &[BlockReport]) -> String {
    let value: Value = reports
        .iter()
        .map(|block| {
            json!({
                "core": block.core.to_string(),
                "weight": block.weight,
                "shapes": block.shapes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>()
        .into();
    let mut text = value.to_string();
    text.push('\n');
    text
}
