//! JSON and CSV file formats. Vertices are 1-based in every file.

use std::fs;
use std::io::Write;
use std::path::Path;

use hyperlap_core::oracle::OracleFinding;
use hyperlap_core::{
    EigenPair, FamilySpec, Graph, SpectrumEntry, SpectrumReport, TensorKind, UniformHypergraph,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphFile {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl HypergraphFile {
    pub fn from_hypergraph(h: &UniformHypergraph) -> Self {
        HypergraphFile {
            k: h.k(),
            n: h.n(),
            edges: h.canonical_edges(),
        }
    }

    pub fn to_hypergraph(&self) -> hyperlap_core::Result<UniformHypergraph> {
        UniformHypergraph::from_one_based(self.k, self.n, &self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g
                .canonical_edges()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
        }
    }

    pub fn to_graph(&self) -> hyperlap_core::Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::from_one_based(self.n, &edges)
    }
}

/// Extra fields are ignored so an eigenpair file also reads as a vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorFile {
    pub x: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenPairFile {
    pub lambda: f64,
    pub residual: f64,
    pub kind: String,
    pub x: Vec<f64>,
}

impl From<&EigenPair> for EigenPairFile {
    fn from(p: &EigenPair) -> Self {
        EigenPairFile {
            lambda: p.lambda,
            residual: p.residual,
            kind: p.kind.as_str().to_string(),
            x: p.x.clone(),
        }
    }
}

impl EigenPairFile {
    pub fn kind(&self) -> Option<TensorKind> {
        self.kind.parse().ok()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum FamilyFile {
    Hyperstar { k: usize, d: usize },
    Hypercycle { k: usize, s: usize },
    Hyperpath { k: usize, d: usize },
    Sunflower { k: usize },
    Power { k: usize, graph: GraphFile },
    Complete { k: usize, n: usize },
}

impl From<&FamilySpec> for FamilyFile {
    fn from(f: &FamilySpec) -> Self {
        match *f {
            FamilySpec::Hyperstar { k, d } => FamilyFile::Hyperstar { k, d },
            FamilySpec::Hypercycle { k, s } => FamilyFile::Hypercycle { k, s },
            FamilySpec::Hyperpath { k, d } => FamilyFile::Hyperpath { k, d },
            FamilySpec::Sunflower { k } => FamilyFile::Sunflower { k },
            FamilySpec::Power { ref graph, k } => FamilyFile::Power {
                k,
                graph: GraphFile::from_graph(graph),
            },
            FamilySpec::Complete { k, n } => FamilyFile::Complete { k, n },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryFile {
    pub lambda: f64,
    pub case: String,
    pub certified: bool,
    pub witness: Option<EigenPairFile>,
}

impl From<&SpectrumEntry> for EntryFile {
    fn from(e: &SpectrumEntry) -> Self {
        EntryFile {
            lambda: e.lambda,
            case: e.case.clone(),
            certified: e.certified,
            witness: e.witness.as_ref().map(EigenPairFile::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReportFile {
    pub family: FamilyFile,
    pub k: usize,
    pub max_degree: usize,
    pub method: String,
    pub entries: Vec<EntryFile>,
}

impl From<&SpectrumReport> for SpectrumReportFile {
    fn from(r: &SpectrumReport) -> Self {
        SpectrumReportFile {
            family: FamilyFile::from(&r.family),
            k: r.k,
            max_degree: r.d,
            method: r.method.to_string(),
            entries: r.entries.iter().map(EntryFile::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FindingFile {
    pub lambda: f64,
    pub residual: f64,
    pub basin_count: usize,
    pub x: Vec<f64>,
}

impl From<&OracleFinding> for FindingFile {
    fn from(f: &OracleFinding) -> Self {
        FindingFile {
            lambda: f.lambda,
            residual: f.residual,
            basin_count: f.basin_count,
            x: f.x.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionFile {
    pub odd_bipartite: bool,
    /// 1-based; `null` when no odd bipartition exists.
    pub v1: Option<Vec<usize>>,
    pub v2: Option<Vec<usize>>,
}

/// Reads and parses a JSON file; parse errors carry line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Input(format!(
            "{}:{}:{}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn read_hypergraph(path: &Path) -> Result<UniformHypergraph, CliError> {
    read_json::<HypergraphFile>(path)?
        .to_hypergraph()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    read_json::<GraphFile>(path)?
        .to_graph()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes through a temporary file in the target directory, then renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("report types serialize");
    bytes.push(b'\n');
    write_atomic(path, &bytes)
}

/// `{:.16e}` keeps 17 significant digits, enough to round-trip any `f64`.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV projection `lambda,case,certified`.
pub fn spectrum_csv(report: &SpectrumReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["lambda", "case", "certified"])
        .expect("in-memory write");
    for e in &report.entries {
        w.write_record([
            format_float(e.lambda),
            e.case.clone(),
            e.certified.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// CSV of `k,lambda` rows.
pub fn sequence_csv(values: &[(usize, f64)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "lambda"]).expect("in-memory write");
    for &(k, l) in values {
        w.write_record([k.to_string(), format_float(l)])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
