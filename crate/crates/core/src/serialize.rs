//! On-disk JSON form of a built representation.
//!
//! Schema: `{ "m", "n", "lambda": {"even": [...], "odd": [...]},
//! "indexing": "0-based", "dim", "basis": [tableau rows...],
//! "generators": { "E_i_j": {"parity": 0|1, "entries": [[row, col, "p/q"],
//! ...] } } }`. Generator labels use the 1-based mathematical indices;
//! matrix row/column indices inside `entries` are 0-based positions in the
//! canonical basis order. Rationals are reduced strings `p/q`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bundle::RepresentationBundle;
use crate::error::{Error, Result};
use crate::ratio::{format_ratio, parse_ratio};
use crate::sparse::SparseMatrix;
use crate::tableau::Supertableau;
use crate::weight::{CovariantWeight, SuperDims};

#[derive(Debug, Serialize, Deserialize)]
pub struct BundleFile {
    pub m: usize,
    pub n: usize,
    pub lambda: LambdaBlock,
    pub indexing: String,
    pub dim: usize,
    pub basis: Vec<Vec<Vec<u16>>>,
    pub generators: BTreeMap<String, GeneratorBlock>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LambdaBlock {
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorBlock {
    pub parity: u8,
    pub entries: Vec<(usize, usize, String)>,
}

/// Serializes a bundle into the schema above.
pub fn bundle_to_file(bundle: &RepresentationBundle) -> BundleFile {
    let lambda = bundle.lambda();
    let mut generators = BTreeMap::new();
    for (&(i, j), mat) in bundle.generators() {
        let entries = mat
            .entries()
            .map(|(row, col, v)| (row, col, format_ratio(v)))
            .collect();
        generators.insert(
            format!("E_{i}_{j}"),
            GeneratorBlock {
                parity: mat.parity(),
                entries,
            },
        );
    }
    BundleFile {
        m: lambda.dims().m(),
        n: lambda.dims().n(),
        lambda: LambdaBlock {
            even: lambda.even().to_vec(),
            odd: lambda.odd().to_vec(),
        },
        indexing: "0-based".into(),
        dim: bundle.dim(),
        basis: bundle.basis().iter().map(|t| t.rows().to_vec()).collect(),
        generators,
    }
}

/// Rebuilds a bundle from its file form, re-deriving nothing: basis order
/// and every matrix entry come from the file.
pub fn bundle_from_file(file: &BundleFile) -> Result<RepresentationBundle> {
    let dims = SuperDims::new(file.m, file.n)
        .ok_or_else(|| Error::NotCovariant("m and n must be positive".into()))?;
    let lambda = CovariantWeight::new(dims, file.lambda.even.clone(), file.lambda.odd.clone())?;
    let basis: Result<Vec<Supertableau>> = file
        .basis
        .iter()
        .map(|rows| Supertableau::new(dims, rows.clone()))
        .collect();
    let basis = basis?;
    if basis.len() != file.dim {
        return Err(Error::InconsistentPattern(format!(
            "file says dim {} but lists {} basis tableaux",
            file.dim,
            basis.len()
        )));
    }
    let mut gens = HashMap::new();
    for (label, block) in &file.generators {
        let parts: Vec<&str> = label.split('_').collect();
        let (i, j) = match parts.as_slice() {
            ["E", i, j] => (
                i.parse::<usize>()
                    .map_err(|_| Error::InconsistentPattern(format!("bad label {label}")))?,
                j.parse::<usize>()
                    .map_err(|_| Error::InconsistentPattern(format!("bad label {label}")))?,
            ),
            _ => return Err(Error::InconsistentPattern(format!("bad label {label}"))),
        };
        let mut entries = Vec::with_capacity(block.entries.len());
        for (row, col, text) in &block.entries {
            let v = parse_ratio(text).ok_or_else(|| {
                Error::InconsistentPattern(format!("bad rational {text:?} in {label}"))
            })?;
            entries.push((*row, *col, v));
        }
        gens.insert(
            (i, j),
            SparseMatrix::from_entries(file.dim, block.parity, entries),
        );
    }
    Ok(RepresentationBundle::from_parts(lambda, basis, gens))
}

pub fn save_bundle(bundle: &RepresentationBundle) -> String {
    serde_json::to_string_pretty(&bundle_to_file(bundle)).expect("schema serializes")
}

pub fn load_bundle(text: &str) -> Result<RepresentationBundle> {
    let file: BundleFile = serde_json::from_str(text)
        .map_err(|e| Error::InconsistentPattern(format!("bad bundle file: {e}")))?;
    bundle_from_file(&file)
}
