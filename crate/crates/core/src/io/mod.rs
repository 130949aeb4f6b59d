//! Versioned JSON documents for complexes, maps, modules, groups and
//! verdicts. Integers are decimal strings so any precision round-trips.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complex::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::hovey::Verdict;
use crate::keps::{KEpsHom, KEpsModule};
use crate::linalg::{ExactMatrix, PresentedGroup, Ring};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Complex(ChainComplex),
    ChainMap(ChainMap),
    KEpsModule(KEpsModule),
    KEpsHom(KEpsHom),
    Verdict(Verdict),
    Group(PresentedGroup),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Complex(_) => "complex",
            Payload::ChainMap(_) => "chain_map",
            Payload::KEpsModule(_) => "keps_module",
            Payload::KEpsHom(_) => "keps_hom",
            Payload::Verdict(_) => "verdict",
            Payload::Group(_) => "group",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub ring: Ring,
    pub payload: Payload,
}

type RawMatrix = Vec<Vec<String>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema_version: String,
    ring: String,
    payload: RawPayload,
}

#[derive(Deserialize)]
struct VersionProbe {
    schema_version: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawPayload {
    Complex(RawComplex),
    ChainMap { source: RawComplex, target: RawComplex, components: Vec<RawBlock> },
    KepsModule(RawKEps),
    KepsHom { source: RawKEps, target: RawKEps, matrix: RawMatrix },
    Verdict(Verdict),
    Group { invariant_factors: Vec<String>, free_rank: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    min_degree: i64,
    ranks: Vec<usize>,
    differentials: Vec<RawBlock>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    degree: i64,
    matrix: RawMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawKEps {
    dim: usize,
    eps: RawMatrix,
}

fn parse_err(location: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), reason: reason.into() }
}

fn write_matrix(m: &ExactMatrix) -> RawMatrix {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn read_matrix(ring: Ring, rows: usize, cols: usize, raw: &RawMatrix, location: &str) -> Result<ExactMatrix> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        let got_cols = raw.first().map_or(0, Vec::len);
        return Err(parse_err(location, format!("expected a {rows}x{cols} matrix, got {}x{got_cols}", raw.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in raw.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let v: BigInt = x
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("{location}[{i}][{j}]"), format!("not an integer: {x:?}")))?;
            entries.push(v);
        }
    }
    ExactMatrix::from_entries(ring, rows, cols, entries)
}

fn write_complex(x: &ChainComplex) -> RawComplex {
    let differentials = x
        .degrees()
        .filter(|&n| x.rank(n - 1) > 0 && x.rank(n) > 0)
        .map(|n| RawBlock { degree: n, matrix: write_matrix(&x.d(n)) })
        .collect();
    RawComplex { min_degree: x.min_degree(), ranks: x.ranks().to_vec(), differentials }
}

fn read_complex(ring: Ring, raw: &RawComplex, location: &str) -> Result<ChainComplex> {
    let rank = |n: i64| -> usize {
        let k = n - raw.min_degree;
        if k < 0 || k as usize >= raw.ranks.len() { 0 } else { raw.ranks[k as usize] }
    };
    let mut diffs = Vec::new();
    for b in &raw.differentials {
        let n = b.degree;
        let m = read_matrix(ring, rank(n - 1), rank(n), &b.matrix, &format!("{location}.differentials[degree {n}]"))
            .map_err(|e| match e {
                Error::Parse { reason, .. } => Error::InvalidComplex { degree: n, reason },
                e => e,
            })?;
        diffs.push((n, m));
    }
    ChainComplex::checked(ring, raw.min_degree, raw.ranks.clone(), diffs)
}

fn write_keps(m: &KEpsModule) -> RawKEps {
    RawKEps { dim: m.dim(), eps: write_matrix(m.eps()) }
}

fn read_keps(ring: Ring, raw: &RawKEps, location: &str) -> Result<KEpsModule> {
    KEpsModule::new(read_matrix(ring, raw.dim, raw.dim, &raw.eps, &format!("{location}.eps"))?)
}

fn check_ring(doc: Ring, found: Ring) -> Result<()> {
    doc.ensure_same(&found)
}

impl Document {
    pub fn new(ring: Ring, payload: Payload) -> Self {
        Document { ring, payload }
    }

    pub fn complex(x: &ChainComplex) -> Self {
        Document::new(x.ring(), Payload::Complex(x.clone()))
    }

    pub fn chain_map(f: &ChainMap) -> Self {
        Document::new(f.ring(), Payload::ChainMap(f.clone()))
    }

    pub fn keps_module(m: &KEpsModule) -> Self {
        Document::new(m.field(), Payload::KEpsModule(m.clone()))
    }

    pub fn keps_hom(f: &KEpsHom) -> Self {
        Document::new(f.source.field(), Payload::KEpsHom(f.clone()))
    }

    pub fn group(g: &PresentedGroup) -> Self {
        Document::new(g.ring, Payload::Group(g.clone()))
    }

    pub fn verdict(ring: Ring, v: &Verdict) -> Self {
        Document::new(ring, Payload::Verdict(v.clone()))
    }

    fn to_raw(&self) -> RawDocument {
        let payload = match &self.payload {
            Payload::Complex(x) => RawPayload::Complex(write_complex(x)),
            Payload::ChainMap(f) => RawPayload::ChainMap {
                source: write_complex(f.source()),
                target: write_complex(f.target()),
                components: f
                    .source()
                    .degrees()
                    .filter(|&n| f.source().rank(n) > 0 && f.target().rank(n) > 0)
                    .map(|n| RawBlock { degree: n, matrix: write_matrix(&f.component(n)) })
                    .collect(),
            },
            Payload::KEpsModule(m) => RawPayload::KepsModule(write_keps(m)),
            Payload::KEpsHom(f) => RawPayload::KepsHom {
                source: write_keps(&f.source),
                target: write_keps(&f.target),
                matrix: write_matrix(&f.matrix),
            },
            Payload::Verdict(v) => RawPayload::Verdict(v.clone()),
            Payload::Group(g) => RawPayload::Group {
                invariant_factors: g.torsion.iter().map(ToString::to_string).collect(),
                free_rank: g.free_rank,
            },
        };
        RawDocument { schema_version: SCHEMA_VERSION.into(), ring: self.ring.to_string(), payload }
    }

    fn from_raw(raw: RawDocument) -> Result<Self> {
        if raw.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion(raw.schema_version));
        }
        let ring: Ring = raw.ring.parse()?;
        let payload = match &raw.payload {
            RawPayload::Complex(c) => Payload::Complex(read_complex(ring, c, "payload")?),
            RawPayload::ChainMap { source, target, components } => {
                let s = read_complex(ring, source, "payload.source")?;
                let t = read_complex(ring, target, "payload.target")?;
                let mut comps = Vec::new();
                for b in components {
                    let n = b.degree;
                    let m = read_matrix(ring, t.rank(n), s.rank(n), &b.matrix, &format!("payload.components[degree {n}]"))
                        .map_err(|e| match e {
                            Error::Parse { reason, .. } => Error::InvalidMap { degree: n, reason },
                            e => e,
                        })?;
                    comps.push((n, m));
                }
                Payload::ChainMap(ChainMap::checked(s, t, comps)?)
            }
            RawPayload::KepsModule(m) => Payload::KEpsModule(read_keps(ring, m, "payload")?),
            RawPayload::KepsHom { source, target, matrix } => {
                let s = read_keps(ring, source, "payload.source")?;
                let t = read_keps(ring, target, "payload.target")?;
                let m = read_matrix(ring, t.dim(), s.dim(), matrix, "payload.matrix")?;
                Payload::KEpsHom(KEpsHom::new(s, t, m)?)
            }
            RawPayload::Verdict(v) => {
                if v.passed != v.counterexamples.is_empty() {
                    return Err(parse_err("payload.passed", "must hold exactly when there are no counterexamples"));
                }
                Payload::Verdict(v.clone())
            }
            RawPayload::Group { invariant_factors, free_rank } => {
                let mut torsion = Vec::new();
                for (i, x) in invariant_factors.iter().enumerate() {
                    let d: BigInt = x
                        .trim()
                        .parse()
                        .map_err(|_| parse_err(format!("payload.invariant_factors[{i}]"), format!("not an integer: {x:?}")))?;
                    if ring.is_unit(&d) || d <= BigInt::from(0) {
                        return Err(parse_err(format!("payload.invariant_factors[{i}]"), "factors must be positive non-units"));
                    }
                    if let Some(prev) = torsion.last() {
                        if !ring.divides(prev, &d) {
                            return Err(parse_err(format!("payload.invariant_factors[{i}]"), "each factor must divide the next"));
                        }
                    }
                    torsion.push(d);
                }
                Payload::Group(PresentedGroup { ring, torsion, free_rank: *free_rank })
            }
        };
        let doc = Document { ring, payload };
        if let Some(r) = doc.payload_ring() {
            check_ring(ring, r)?;
        }
        Ok(doc)
    }

    fn payload_ring(&self) -> Option<Ring> {
        match &self.payload {
            Payload::Complex(x) => Some(x.ring()),
            Payload::ChainMap(f) => Some(f.ring()),
            Payload::KEpsModule(m) => Some(m.field()),
            Payload::KEpsHom(f) => Some(f.source.field()),
            Payload::Group(g) => Some(g.ring),
            Payload::Verdict(_) => None,
        }
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("documents serialize")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_raw()).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        // Check the version first so that other schemas fail with a clear message.
        if let Ok(VersionProbe { schema_version: Some(v) }) = serde_json::from_str::<VersionProbe>(text) {
            if v != SCHEMA_VERSION {
                return Err(Error::SchemaVersion(v));
            }
        }
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
            parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string())
        })?;
        Self::from_raw(raw)
    }

    pub fn into_complex(self) -> Result<ChainComplex> {
        match self.payload {
            Payload::Complex(x) => Ok(x),
            p => Err(parse_err("payload.kind", format!("expected a complex, found {}", p.kind()))),
        }
    }

    pub fn into_chain_map(self) -> Result<ChainMap> {
        match self.payload {
            Payload::ChainMap(f) => Ok(f),
            p => Err(parse_err("payload.kind", format!("expected a chain_map, found {}", p.kind()))),
        }
    }

    pub fn into_keps_module(self) -> Result<KEpsModule> {
        match self.payload {
            Payload::KEpsModule(m) => Ok(m),
            p => Err(parse_err("payload.kind", format!("expected a keps_module, found {}", p.kind()))),
        }
    }
}

pub fn load(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path)?;
    Document::from_json(&text).map_err(|e| match e {
        Error::Parse { location, reason } => Error::Parse { location: format!("{}: {location}", path.display()), reason },
        e => e,
    })
}

pub fn store(doc: &Document, path: &Path) -> Result<()> {
    fs::write(path, doc.to_json())?;
    Ok(())
}

#[cfg(test)]
mod tests;
