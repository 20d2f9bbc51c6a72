//! On-disk catalog cache: one module file per entry plus a manifest with
//! the Kostka numbers. Writes go to a temporary sibling first and are
//! renamed into place, so a crash never leaves a half-written file.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use combinat::Partition;
use modrep::{GModule, ModuleKind};
use serde::{Deserialize, Serialize};

use crate::{CatalogError, YoungCatalog};

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Manifest {
    version: u32,
    n: usize,
    entries: Vec<ManifestEntry>,
    kostka: Vec<KostkaEntry>,
}

#[derive(Serialize, Deserialize)]
struct ManifestEntry {
    partition: String,
    file: String,
    provenance: String,
}

#[derive(Serialize, Deserialize)]
struct KostkaEntry {
    row: String,
    col: String,
    count: usize,
}

fn degree_dir(root: &Path, n: usize) -> PathBuf {
    root.join(n.to_string())
}

/// File name for one cached Young module: runs of equal parts collapse
/// to `part`x`count`, so `[2,1,1,1]` becomes `young-2-1x3.ymod`.
fn module_file_name(shape: &Partition) -> String {
    let mut pieces: Vec<String> = Vec::new();
    let parts = shape.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if j - i > 1 {
            pieces.push(format!("{}x{}", parts[i], j - i));
        } else {
            pieces.push(parts[i].to_string());
        }
        i = j;
    }
    format!("young-{}.ymod", pieces.join("-"))
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut tmp = path.to_path_buf();
    let name = tmp
        .file_name()
        .expect("cache paths always name a file")
        .to_string_lossy()
        .into_owned();
    tmp.set_file_name(format!(".tmp-{name}"));
    {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(bytes)?;
        file.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Save a finished catalog under `root/<n>/`. The manifest goes last, so
/// a directory with a manifest always has every module file in place.
pub(crate) fn save(catalog: &YoungCatalog, root: &Path) -> Result<(), CatalogError> {
    let dir = degree_dir(root, catalog.n);
    fs::create_dir_all(&dir)?;
    let mut entries = Vec::new();
    for (shape, module) in &catalog.entries {
        let file = module_file_name(shape);
        let mut bytes = Vec::new();
        module.write_ygm(&mut bytes)?;
        write_atomic(&dir.join(&file), &bytes)?;
        entries.push(ManifestEntry {
            partition: shape.to_string(),
            file,
            provenance: catalog
                .provenance
                .get(shape)
                .cloned()
                .unwrap_or_else(|| "unknown".to_string()),
        });
    }
    let kostka = catalog
        .kostka
        .iter()
        .filter(|(_, &count)| count > 0)
        .map(|((row, col), &count)| KostkaEntry {
            row: row.to_string(),
            col: col.to_string(),
            count,
        })
        .collect();
    let manifest = Manifest {
        version: FORMAT_VERSION,
        n: catalog.n,
        entries,
        kostka,
    };
    let bytes = serde_json::to_vec_pretty(&manifest)?;
    write_atomic(&dir.join("manifest.json"), &bytes)?;
    Ok(())
}

/// Load a catalog from `root/<n>/` if a manifest of the current format
/// is present; `Ok(None)` means a fresh build is needed.
pub(crate) fn try_load(n: usize, root: &Path) -> Result<Option<YoungCatalog>, CatalogError> {
    let dir = degree_dir(root, n);
    let manifest_path = dir.join("manifest.json");
    let bytes = match fs::read(&manifest_path) {
        Ok(bytes) => bytes,
        Err(err) if err.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(err) => return Err(err.into()),
    };
    let manifest: Manifest = serde_json::from_slice(&bytes)?;
    if manifest.version != FORMAT_VERSION || manifest.n != n {
        return Ok(None);
    }

    let mut entries = BTreeMap::new();
    let mut provenance = BTreeMap::new();
    for entry in &manifest.entries {
        let shape: Partition = entry
            .partition
            .parse()
            .map_err(|err| bad_manifest(format!("partition {}: {err}", entry.partition)))?;
        let module_bytes = fs::read(dir.join(&entry.file))?;
        let module = GModule::read_ygm(&mut module_bytes.as_slice())?;
        if module.label != Some((ModuleKind::Young, shape.clone())) || module.n != n {
            return Err(bad_manifest(format!(
                "module file {} does not hold Y[{shape}] at degree {n}",
                entry.file
            )));
        }
        provenance.insert(shape.clone(), entry.provenance.clone());
        entries.insert(shape, module);
    }
    let mut kostka = BTreeMap::new();
    for item in &manifest.kostka {
        let row: Partition = item
            .row
            .parse()
            .map_err(|err| bad_manifest(format!("partition {}: {err}", item.row)))?;
        let col: Partition = item
            .col
            .parse()
            .map_err(|err| bad_manifest(format!("partition {}: {err}", item.col)))?;
        kostka.insert((row, col), item.count);
    }
    Ok(Some(YoungCatalog {
        n,
        entries,
        kostka,
        provenance,
    }))
}

fn bad_manifest(message: String) -> CatalogError {
    CatalogError::CacheIo(std::io::Error::new(
        std::io::ErrorKind::InvalidData,
        message,
    ))
}
