//! The wedge-map document format and its validation.
//!
//! A document (format `"wedge-map/1"`) declares the summands of a wedge and
//! the homology action of a self-map, either through coordinate maps or (for
//! wedges of tori) through a single assembled degree-1 matrix:
//!
//! ```json
//! {
//!   "format": "wedge-map/1",
//!   "spaces": [
//!     { "kind": "torus", "dim": 2 },
//!     { "kind": "generic", "betti": [1, 2, 1] }
//!   ],
//!   "coordinates": [
//!     { "from": 1, "to": 2, "h1": [[0, 1], [1, 0]] },
//!     { "from": 2, "to": 1, "graded": { "1": [[0, -1], [-1, 0]], "2": [[-1]] } }
//!   ],
//!   "permutation": [2, 1],
//!   "notes": ["free-form annotations"]
//! }
//! ```
//!
//! Indices are 1-based. `h1` is only meaningful between torus summands (the
//! full graded action is its exterior powers); `graded` lists one integer
//! matrix per positive degree. At most one entry per (from, to) pair;
//! omitted pairs are constant coordinates. `assembled_h1` (fully toral
//! documents only) replaces `coordinates` with one square matrix in the
//! assembled block convention: block row j, block column i holds the
//! X_i -> X_j coordinate. The optional `permutation` declares the 1-based
//! images of a permutative map and is cross-checked against the nonzero
//! coordinate pattern. Integer entries may be JSON integers or decimal
//! strings; strings are what the tool emits, so arbitrary precision
//! round-trips.

use std::collections::BTreeMap;
use std::fmt;

use lefwedge::matrix::Matrix;
use lefwedge::torus::torus_graded_from_h1;
use lefwedge::wedge::{assemble, GradedMap, SpaceSignature, WedgeMap};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Visitor;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const FORMAT: &str = "wedge-map/1";

/// Arbitrary-precision integer that reads from a JSON integer or decimal
/// string and always writes back a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntEntry(pub BigInt);

impl Serialize for IntEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for IntEntry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = IntEntry;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<IntEntry, E> {
                Ok(IntEntry(BigInt::from(v)))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<IntEntry, E> {
                Ok(IntEntry(BigInt::from(v)))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<IntEntry, E> {
                v.parse::<BigInt>()
                    .map(IntEntry)
                    .map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpaceDecl {
    Torus { dim: usize },
    Generic { betti: Vec<usize> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoordinateDecl {
    pub from: usize,
    pub to: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<Vec<Vec<IntEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded: Option<BTreeMap<String, Vec<Vec<IntEntry>>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapSpecDocument {
    pub format: String,
    pub spaces: Vec<SpaceDecl>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<CoordinateDecl>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assembled_h1: Option<Vec<Vec<IntEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<Vec<String>>,
}

/// A structural problem in a syntactically well-formed document.
#[derive(Debug)]
pub struct StructuralError(pub String);

impl fmt::Display for StructuralError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for StructuralError {}

fn err(msg: impl Into<String>) -> StructuralError {
    StructuralError(msg.into())
}

/// Document checked against the schema, with the homology data assembled.
pub struct ValidatedSpec {
    pub wedge: WedgeMap,
    /// Torus dimensions when every summand is a torus.
    pub toral_dims: Option<Vec<usize>>,
}

fn to_matrix(rows: &[Vec<IntEntry>]) -> Result<Matrix, StructuralError> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(err("ragged matrix rows"));
    }
    Ok(Matrix::from_fn(r, c, |i, j| {
        BigRational::from_integer(rows[i][j].0.clone())
    }))
}

impl MapSpecDocument {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn signatures(&self) -> Result<Vec<SpaceSignature>, StructuralError> {
        self.spaces
            .iter()
            .enumerate()
            .map(|(i, decl)| match decl {
                SpaceDecl::Torus { dim } => {
                    if *dim == 0 {
                        Err(err(format!("space {}: torus dimension must be >= 1", i + 1)))
                    } else {
                        Ok(SpaceSignature::torus(*dim))
                    }
                }
                SpaceDecl::Generic { betti } => SpaceSignature::new(betti.clone())
                    .map_err(|e| err(format!("space {}: {e}", i + 1))),
            })
            .collect()
    }

    fn toral_dims(&self) -> Option<Vec<usize>> {
        self.spaces
            .iter()
            .map(|d| match d {
                SpaceDecl::Torus { dim } => Some(*dim),
                SpaceDecl::Generic { .. } => None,
            })
            .collect()
    }

    /// Schema and dimension validation; assembles the homology data.
    pub fn validate(&self) -> Result<ValidatedSpec, StructuralError> {
        if self.format != FORMAT {
            return Err(err(format!(
                "unsupported format {:?} (expected {FORMAT:?})",
                self.format
            )));
        }
        let signatures = self.signatures()?;
        let s = signatures.len();
        if s == 0 {
            return Err(err("a wedge needs at least one summand"));
        }
        let toral_dims = self.toral_dims();
        let mut grid: Vec<Vec<Option<GradedMap>>> = vec![vec![None; s]; s];
        match (&self.coordinates, &self.assembled_h1) {
            (Some(_), Some(_)) => {
                return Err(err("give either coordinates or assembled_h1, not both"));
            }
            (None, None) => {} // the all-constant map
            (Some(coords), None) => {
                for decl in coords {
                    if decl.from == 0 || decl.from > s || decl.to == 0 || decl.to > s {
                        return Err(err(format!(
                            "coordinate {}->{}: indices must lie in 1..={s}",
                            decl.from, decl.to
                        )));
                    }
                    let (i, j) = (decl.from - 1, decl.to - 1);
                    if grid[i][j].is_some() {
                        return Err(err(format!(
                            "coordinate {}->{} given twice",
                            decl.from, decl.to
                        )));
                    }
                    let graded = match (&decl.h1, &decl.graded) {
                        (Some(_), Some(_)) => {
                            return Err(err(format!(
                                "coordinate {}->{}: give h1 or graded, not both",
                                decl.from, decl.to
                            )));
                        }
                        (None, None) => {
                            return Err(err(format!(
                                "coordinate {}->{}: missing h1 or graded",
                                decl.from, decl.to
                            )));
                        }
                        (Some(h1), None) => {
                            let both_toral = matches!(self.spaces[i], SpaceDecl::Torus { .. })
                                && matches!(self.spaces[j], SpaceDecl::Torus { .. });
                            if !both_toral {
                                return Err(err(format!(
                                    "coordinate {}->{}: h1 requires torus summands on both sides",
                                    decl.from, decl.to
                                )));
                            }
                            let m = to_matrix(h1)?;
                            if m.rows() != signatures[j].betti(1) || m.cols() != signatures[i].betti(1)
                            {
                                return Err(err(format!(
                                    "coordinate {}->{}: h1 must be {}x{}, got {}x{}",
                                    decl.from,
                                    decl.to,
                                    signatures[j].betti(1),
                                    signatures[i].betti(1),
                                    m.rows(),
                                    m.cols()
                                )));
                            }
                            torus_graded_from_h1(&m)
                        }
                        (None, Some(entries)) => {
                            let top = signatures[i].dim().max(signatures[j].dim());
                            let mut blocks = Vec::with_capacity(top);
                            for k in 1..=top {
                                let block = match entries.get(&k.to_string()) {
                                    Some(rows) => to_matrix(rows)?,
                                    None => Matrix::zero(
                                        signatures[j].betti(k),
                                        signatures[i].betti(k),
                                    ),
                                };
                                blocks.push(block);
                            }
                            for key in entries.keys() {
                                let parsed: Option<usize> = key.parse().ok();
                                match parsed {
                                    Some(k) if (1..=top).contains(&k) => {}
                                    _ => {
                                        return Err(err(format!(
                                            "coordinate {}->{}: bad graded degree key {key:?}",
                                            decl.from, decl.to
                                        )));
                                    }
                                }
                            }
                            GradedMap::new(signatures[i].clone(), signatures[j].clone(), blocks)
                                .map_err(|e| {
                                    err(format!("coordinate {}->{}: {e}", decl.from, decl.to))
                                })?
                        }
                    };
                    grid[i][j] = Some(graded);
                }
            }
            (None, Some(rows)) => {
                let dims = toral_dims
                    .clone()
                    .ok_or_else(|| err("assembled_h1 requires every summand to be a torus"))?;
                let m = to_matrix(rows)?;
                let total: usize = dims.iter().sum();
                if m.rows() != total || m.cols() != total {
                    return Err(err(format!(
                        "assembled_h1 must be {total}x{total}, got {}x{}",
                        m.rows(),
                        m.cols()
                    )));
                }
                let mut offsets = vec![0usize];
                for &n in &dims {
                    offsets.push(offsets.last().unwrap() + n);
                }
                for i in 0..s {
                    for j in 0..s {
                        let block = m.extract_block(offsets[j], offsets[i], dims[j], dims[i]);
                        if !block.is_zero() {
                            grid[i][j] = Some(torus_graded_from_h1(&block));
                        }
                    }
                }
            }
        }
        let wedge = assemble(signatures, grid).map_err(|e| err(e.to_string()))?;
        if let Some(declared) = &self.permutation {
            check_declared_permutation(declared, &wedge)?;
        }
        Ok(ValidatedSpec { wedge, toral_dims })
    }
}

/// The declared permutation must be a bijection on 1..=s that sends every
/// summand with a present coordinate to that coordinate's target.
fn check_declared_permutation(declared: &[usize], w: &WedgeMap) -> Result<(), StructuralError> {
    let s = w.num_spaces();
    if declared.len() != s {
        return Err(err(format!(
            "declared permutation has {} entries, expected {s}",
            declared.len()
        )));
    }
    let mut seen = vec![false; s];
    for &t in declared {
        if t == 0 || t > s || seen[t - 1] {
            return Err(err("declared permutation is not a bijection on 1..=s"));
        }
        seen[t - 1] = true;
    }
    for i in 0..s {
        for j in 0..s {
            if w.coordinate_present(i, j) && declared[i] != j + 1 {
                return Err(err(format!(
                    "declared permutation sends {} to {}, but the coordinate {}->{} is present",
                    i + 1,
                    declared[i],
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}
