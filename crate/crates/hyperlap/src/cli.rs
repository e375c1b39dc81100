//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlap_core::oracle::{multistart_search, spectrum_compare, CompareStatus};
use hyperlap_core::solvers::{lambda_l_even_cored, power_iteration_q};
use hyperlap_core::spectra::{
    cored_lambda1, hypercycle3_spectrum, hyperpath3_spectrum, hyperstar_spectrum,
    monotonicity_check, sunflower_lambda_max, MonotoneFamily, STRICTNESS_MARGIN,
};
use hyperlap_core::tensor::residual;
use hyperlap_core::{
    generate, kth_power, odd_bipartition, EigenPair, FamilySpec, SolverOptions, SpectrumEntry,
    SpectrumReport, TensorKind, UniformHypergraph,
};

use crate::closed::closed_lambda_max;
use crate::formats::{
    read_graph, read_hypergraph, read_json, sequence_csv, spectrum_csv, write_atomic, write_json,
    EigenPairFile, FamilyFile, FindingFile, HypergraphFile, PartitionFile, SpectrumReportFile,
    VectorFile,
};
use crate::{CliError, ExitReport, EXIT_CONTRADICTED, EXIT_INPUT, EXIT_OK};

/// Largest tolerated gap between the power-iteration and closed-form `λ_max`.
pub const CROSS_CHECK_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "hyperlap",
    version,
    about = "Laplacian H-eigenvalues of uniform hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family member or a power hypergraph as JSON
    Gen(GenArgs),
    /// Closed-form spectrum of a named family, every entry certified or flagged
    Spectrum(SpectrumArgs),
    /// Largest Laplacian H-eigenvalue of a hypergraph file
    Lmax(LmaxArgs),
    /// Multistart Newton search for Laplacian H-eigenpairs
    Oracle(OracleArgs),
    /// Residual of a user-supplied eigenpair; exit 0 iff within tolerance
    Verify(VerifyArgs),
    /// Odd-bipartition of an even-uniform hypergraph
    Bipartite(BipartiteArgs),
    /// λ(L) across uniformities; exit 0 iff strictly decreasing
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct SolverArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    /// Residual tolerance for certification
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long = "max-iter")]
    pub max_iter: Option<usize>,
}

impl SolverArgs {
    pub fn options(&self) -> Result<SolverOptions, CliError> {
        let mut o = SolverOptions::default();
        if let Some(s) = self.seed {
            o.seed = s;
        }
        if let Some(t) = self.tol {
            o.tol_residual = t;
        }
        if let Some(r) = self.restarts {
            o.restarts = r;
        }
        if let Some(m) = self.max_iter {
            o.max_iter = m;
        }
        o.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(o)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Hyperstar,
    Hypercycle,
    Hyperpath,
    Sunflower,
    Complete,
    Power,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: GenFamily,
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    /// Hyperstar size or hyperpath length
    #[arg(long)]
    pub d: Option<usize>,
    /// Hypercycle length
    #[arg(long)]
    pub s: Option<usize>,
    /// Vertex count of a complete hypergraph
    #[arg(long)]
    pub n: Option<usize>,
    /// Base graph file for a power hypergraph
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumFamily {
    Hyperstar,
    Hyperpath3,
    Hypercycle3,
    Sunflower,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub family: SpectrumFamily,
    #[arg(long, value_parser = parse_k)]
    pub k: usize,
    /// Hyperstar size
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Power iteration on the signless Laplacian
    Nqz,
    Closed,
    /// Both, exiting 4 when they differ by more than 1e-8
    Both,
}

#[derive(Debug, Args)]
pub struct LmaxArgs {
    pub input: PathBuf,
    #[arg(long, default_value = "nqz")]
    pub method: Method,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Spectrum report to compare the findings against
    #[arg(long)]
    pub against: Option<PathBuf>,
    #[arg(long = "match-tol", default_value_t = 1e-6)]
    pub match_tol: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Laplacian,
    Signless,
    Adjacency,
}

impl From<Kind> for TensorKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Laplacian => TensorKind::Laplacian,
            Kind::Signless => TensorKind::Signless,
            Kind::Adjacency => TensorKind::Adjacency,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    /// Vector file; an eigenpair file also works
    #[arg(long = "vec")]
    pub vector: PathBuf,
    #[arg(long, default_value = "laplacian")]
    pub kind: Kind,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct BipartiteArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjectureFamily {
    Hyperstar,
    Hypercycle,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub family: ConjectureFamily,
    /// Hyperstar size
    #[arg(long)]
    pub d: Option<usize>,
    /// Hypercycle length
    #[arg(long)]
    pub s: Option<usize>,
    /// Ascending uniformities, comma separated
    #[arg(long, value_parser = parse_k, value_delimiter = ',', required = true)]
    pub k: Vec<usize>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

fn parse_k(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    if k < 3 {
        return Err(format!("uniformity must be at least 3, got {k}"));
    }
    Ok(k)
}

pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Parses, runs and prints; returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let report = run(cli);
    if report.code == EXIT_OK {
        print!("{}", report.summary);
    } else {
        eprintln!("{}", report.summary.trim_end());
    }
    report.code
}

pub fn run(cli: Cli) -> ExitReport {
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Lmax(a) => lmax(a),
        Command::Oracle(a) => oracle(a),
        Command::Verify(a) => verify(a),
        Command::Bipartite(a) => bipartite(a),
        Command::Conjecture(a) => conjecture(a),
    };
    result.unwrap_or_else(|e| ExitReport::from_error(&e))
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {family}")))
}

fn ok(summary: String, reports: Vec<PathBuf>) -> Result<ExitReport, CliError> {
    Ok(ExitReport {
        code: EXIT_OK,
        summary,
        reports,
    })
}

fn gen_spec(a: &GenArgs) -> Result<FamilySpec, CliError> {
    let k = a.k;
    Ok(match a.family {
        GenFamily::Hyperstar => FamilySpec::Hyperstar {
            k,
            d: require(a.d, "d", "hyperstar")?,
        },
        GenFamily::Hypercycle => FamilySpec::Hypercycle {
            k,
            s: require(a.s, "s", "hypercycle")?,
        },
        GenFamily::Hyperpath => FamilySpec::Hyperpath {
            k,
            d: require(a.d, "d", "hyperpath")?,
        },
        GenFamily::Sunflower => FamilySpec::Sunflower { k },
        GenFamily::Complete => FamilySpec::Complete {
            k,
            n: require(a.n, "n", "complete")?,
        },
        GenFamily::Power => {
            let path = a
                .graph
                .as_deref()
                .ok_or_else(|| CliError::Usage("--graph is required for power".into()))?;
            FamilySpec::Power {
                graph: read_graph(path)?,
                k,
            }
        }
    })
}

fn gen(a: GenArgs) -> Result<ExitReport, CliError> {
    let spec = gen_spec(&a)?;
    let h = match &spec {
        FamilySpec::Power { graph, k } => kth_power(graph, *k)?,
        other => generate(other)?,
    };
    let file = HypergraphFile::from_hypergraph(&h);
    match a.output {
        Some(path) => {
            write_json(&path, &file)?;
            let summary = format!(
                "{}: k={} n={} edges={} -> {}\n",
                spec.name(),
                h.k(),
                h.n(),
                h.num_edges(),
                path.display()
            );
            ok(summary, vec![path])
        }
        None => ok(
            serde_json::to_string_pretty(&file).expect("hypergraph serializes") + "\n",
            Vec::new(),
        ),
    }
}

fn sunflower_spectrum(k: usize, opts: &SolverOptions) -> Result<SpectrumReport, CliError> {
    let spec = FamilySpec::Sunflower { k };
    let h = generate(&spec)?;
    let mut report = SpectrumReport::new(spec, h.degrees().max, "closed form");
    let zero = EigenPair::new(&h, TensorKind::Laplacian, 0.0, &vec![1.0; h.n()])?;
    report.add(SpectrumEntry::certified("zero (all-ones)", zero));
    report.add(cored_lambda1(&h)?);
    report.add(sunflower_lambda_max(k, opts)?);
    Ok(report)
}

fn spectrum_summary(report: &SpectrumReport) -> String {
    let mut s = format!(
        "{} k={} max degree={} ({} entries)\n",
        report.family.name(),
        report.k,
        report.d,
        report.entries.len()
    );
    for e in &report.entries {
        let status = if e.certified {
            "certified"
        } else {
            "uncertified"
        };
        let _ = writeln!(s, "  {:>22.16}  {:<11}  {}", e.lambda, status, e.case);
    }
    s
}

fn spectrum(a: SpectrumArgs) -> Result<ExitReport, CliError> {
    let opts = a.solver.options()?;
    let report = match a.family {
        SpectrumFamily::Hyperstar => {
            hyperstar_spectrum(a.k, require(a.d, "d", "hyperstar")?, &opts)?
        }
        SpectrumFamily::Hyperpath3 => hyperpath3_spectrum(a.k, &opts)?,
        SpectrumFamily::Hypercycle3 => hypercycle3_spectrum(a.k, &opts)?,
        SpectrumFamily::Sunflower => sunflower_spectrum(a.k, &opts)?,
    };
    let mut written = Vec::new();
    if let Some(path) = a.output {
        write_json(&path, &SpectrumReportFile::from(&report))?;
        written.push(path);
    }
    if let Some(path) = a.csv {
        write_atomic(&path, spectrum_csv(&report).as_bytes())?;
        written.push(path);
    }
    ok(spectrum_summary(&report), written)
}

/// `λ(L)` by power iteration when the sign-flip transfer applies, else `λ(Q)`.
fn nqz(h: &UniformHypergraph, opts: &SolverOptions) -> Result<EigenPair, CliError> {
    if h.k().is_multiple_of(2) && h.is_cored() {
        Ok(lambda_l_even_cored(h, opts)?)
    } else {
        Ok(power_iteration_q(h, opts)?)
    }
}

fn pair_line(label: &str, p: &EigenPair) -> String {
    format!(
        "{label}: lambda={:.16} kind={} residual={:.3e}\n",
        p.lambda, p.kind, p.residual
    )
}

fn lmax(a: LmaxArgs) -> Result<ExitReport, CliError> {
    let opts = a.solver.options()?;
    let h = read_hypergraph(&a.input)?;
    let (pair, mut summary) = match a.method {
        Method::Nqz => {
            let p = nqz(&h, &opts)?;
            let mut s = pair_line("nqz", &p);
            if p.kind == TensorKind::Signless {
                s.push_str("note: not even-uniform and cored; this is lambda(Q), an upper bound for lambda(L)\n");
            }
            (p, s)
        }
        Method::Closed => {
            let e = closed_lambda_max(&h, &opts)?;
            let p = e.witness.expect("closed-form entries are certified");
            let s = pair_line(&format!("closed ({})", e.case), &p);
            (p, s)
        }
        Method::Both => {
            if h.k() % 2 == 1 || !h.is_cored() {
                return Err(CliError::Input(
                    "--method both compares lambda(L) and needs an even-uniform cored hypergraph"
                        .into(),
                ));
            }
            let p = nqz(&h, &opts)?;
            let c = closed_lambda_max(&h, &opts)?;
            let gap = (p.lambda - c.lambda).abs();
            let s = pair_line("nqz", &p)
                + &format!(
                    "closed: lambda={:.16} ({})\ngap: {gap:.3e}\n",
                    c.lambda, c.case
                );
            if !(gap <= CROSS_CHECK_TOL) {
                return Ok(ExitReport {
                    code: EXIT_CONTRADICTED,
                    summary: s + &format!("methods disagree by more than {CROSS_CHECK_TOL:e}\n"),
                    reports: Vec::new(),
                });
            }
            (p, s)
        }
    };
    let mut written = Vec::new();
    if let Some(path) = a.output {
        write_json(&path, &EigenPairFile::from(&pair))?;
        let _ = writeln!(summary, "wrote {}", path.display());
        written.push(path);
    }
    ok(summary, written)
}

fn family_from_file(f: &FamilyFile) -> Result<FamilySpec, CliError> {
    Ok(match *f {
        FamilyFile::Hyperstar { k, d } => FamilySpec::Hyperstar { k, d },
        FamilyFile::Hypercycle { k, s } => FamilySpec::Hypercycle { k, s },
        FamilyFile::Hyperpath { k, d } => FamilySpec::Hyperpath { k, d },
        FamilyFile::Sunflower { k } => FamilySpec::Sunflower { k },
        FamilyFile::Power { k, ref graph } => FamilySpec::Power {
            graph: graph.to_graph()?,
            k,
        },
        FamilyFile::Complete { k, n } => FamilySpec::Complete { k, n },
    })
}

fn report_from_file(path: &Path) -> Result<SpectrumReport, CliError> {
    let file: SpectrumReportFile = read_json(path)?;
    let mut report = SpectrumReport::new(family_from_file(&file.family)?, file.max_degree, "file");
    for e in file.entries {
        let witness = match e.witness {
            Some(w) => Some(EigenPair {
                kind: w.kind().ok_or_else(|| {
                    CliError::Input(format!(
                        "{}: unknown tensor kind {}",
                        path.display(),
                        w.kind
                    ))
                })?,
                lambda: w.lambda,
                x: w.x,
                residual: w.residual,
            }),
            None => None,
        };
        if e.certified && witness.is_none() {
            return Err(CliError::Input(format!(
                "{}: certified entry {} has no witness",
                path.display(),
                e.lambda
            )));
        }
        report.entries.push(SpectrumEntry {
            lambda: e.lambda,
            case: e.case,
            certified: e.certified,
            witness,
        });
    }
    Ok(report)
}

fn list(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.10}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn oracle(a: OracleArgs) -> Result<ExitReport, CliError> {
    let opts = a.solver.options()?;
    let h = read_hypergraph(&a.input)?;
    let findings = multistart_search(&h, &opts)?;
    let mut lambdas: Vec<f64> = findings.iter().map(|f| f.lambda).collect();
    lambdas.dedup_by(|next, kept| (*next - *kept).abs() <= a.match_tol);
    let mut summary = format!(
        "{} eigenpairs, {} distinct eigenvalues from {} restarts (seed {}): [{}]\n",
        findings.len(),
        lambdas.len(),
        opts.restarts,
        opts.seed,
        list(&lambdas)
    );
    let mut written = Vec::new();
    if let Some(path) = a.output {
        let files: Vec<FindingFile> = findings.iter().map(FindingFile::from).collect();
        write_json(&path, &files)?;
        written.push(path);
    }
    let mut code = EXIT_OK;
    if let Some(path) = a.against {
        let catalog = report_from_file(&path)?;
        let cmp = spectrum_compare(&catalog, &findings, a.match_tol);
        let _ = writeln!(summary, "matched: {}", cmp.matched.len());
        let _ = writeln!(summary, "catalog only: [{}]", list(&cmp.catalog_only));
        let _ = writeln!(summary, "oracle only: [{}]", list(&cmp.oracle_only));
        if cmp.status == CompareStatus::Disagreement {
            summary.push_str("oracle found eigenvalues missing from the catalog\n");
            code = EXIT_CONTRADICTED;
        } else {
            summary.push_str("oracle findings are a subset of the catalog\n");
        }
    }
    Ok(ExitReport {
        code,
        summary,
        reports: written,
    })
}

fn verify(a: VerifyArgs) -> Result<ExitReport, CliError> {
    let opts = a.solver.options()?;
    let h = read_hypergraph(&a.input)?;
    let x = read_json::<VectorFile>(&a.vector)?.x;
    let r = residual(&h, a.kind.into(), a.lambda, &x)?;
    let pass = r <= opts.tol_residual;
    let summary = format!(
        "residual {r:.6e} ({} tolerance {:e})\n",
        if pass { "within" } else { "exceeds" },
        opts.tol_residual
    );
    Ok(ExitReport {
        code: if pass { EXIT_OK } else { EXIT_CONTRADICTED },
        summary,
        reports: Vec::new(),
    })
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| i + 1).collect()
}

fn bipartite(a: BipartiteArgs) -> Result<ExitReport, CliError> {
    let h = read_hypergraph(&a.input)?;
    let found = odd_bipartition(&h)?;
    let file = match &found {
        Some(p) => PartitionFile {
            odd_bipartite: true,
            v1: Some(one_based(&p.v1)),
            v2: Some(one_based(&p.v2)),
        },
        None => PartitionFile {
            odd_bipartite: false,
            v1: None,
            v2: None,
        },
    };
    let summary = match &file.v1 {
        Some(v1) => format!("odd-bipartite; V1 = {v1:?}\n"),
        None => "not odd-bipartite\n".to_string(),
    };
    let mut written = Vec::new();
    if let Some(path) = a.output {
        write_json(&path, &file)?;
        written.push(path);
    }
    ok(summary, written)
}

fn conjecture(a: ConjectureArgs) -> Result<ExitReport, CliError> {
    let opts = a.solver.options()?;
    let family = match a.family {
        ConjectureFamily::Hyperstar => MonotoneFamily::Hyperstar {
            d: require(a.d, "d", "hyperstar")?,
        },
        ConjectureFamily::Hypercycle => MonotoneFamily::Hypercycle {
            s: require(a.s, "s", "hypercycle")?,
        },
    };
    let report = monotonicity_check(family, &a.k, &opts)?;
    let text = sequence_csv(&report.values);
    let mut written = Vec::new();
    if let Some(path) = a.csv {
        write_atomic(&path, text.as_bytes())?;
        written.push(path);
    }
    if report.strictly_decreasing {
        return ok(text, written);
    }
    Ok(ExitReport {
        code: EXIT_CONTRADICTED,
        summary: text + &format!("not strictly decreasing (margin {STRICTNESS_MARGIN:e})\n"),
        reports: written,
    })
}
