//! Command-line dispatch and the exit-code contract.
//!
//! Exit 0: success or property holds (an unmet suite precondition is not a failure).
//! Exit 1: a checked property is violated. Exit 2: input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::bridge::{cochain_to_form, digamma, form_to_cochain};
use crate::cochain::{coadjoint, cohomology_witness, product_cochain, Cochain, CochainError, SeedKind};
use crate::io::{self, IoError};
use crate::linalg::{parse_rational, Matrix};
use crate::random;
use crate::scenarios::{run_theorem_suite, ScenarioError, ScenarioReport, SuiteParams};
use crate::space::{
    cohom, dual, is_admissible, is_second_admissible, product, twist, verify_gauge_witness, ProductKind, QuantumSpace,
    SpaceError, WitnessVariant,
};

#[derive(Debug, Parser)]
#[command(name = "qtwist", version, about = "Exact cocycle twisting of truncated conic quantum spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Lower the cutoff of every loaded file (raising is an input error).
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    /// Result file: a space or cochain for constructions, the JSON summary otherwise.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for random generation.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Include wall time in the JSON summary.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a cochain and, given a space, test admissibility.
    Check {
        #[arg(long)]
        cochain: PathBuf,
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// Twist a space by a counital admissible cocycle.
    Twist {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// The quadratic dual `A^!`.
    Dual {
        #[arg(long)]
        space: PathBuf,
    },
    /// One of the six products of two spaces.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// The internal coHom `hom[B, A]`.
    Cohom {
        /// The space `B`.
        #[arg(long)]
        source: PathBuf,
        /// The space `A`.
        #[arg(long)]
        target: PathBuf,
    },
    /// Hilbert function up to the cutoff; with a cochain, compares against the twist.
    Hilbert {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cochain: Option<PathBuf>,
    },
    /// Witness verification and construction.
    Witness {
        #[command(subcommand)]
        mode: WitnessMode,
    },
    /// Bridge checks on the form corresponding to a cochain over the free matrix bialgebra.
    Bridge {
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Run a named theorem suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long)]
        cochain: Option<PathBuf>,
        /// Rational parameter `q` of suites that use one.
        #[arg(long)]
        q: Option<String>,
        /// Second rational parameter `r`.
        #[arg(long)]
        r: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum WitnessMode {
    /// Verify that a family `ϑ_n` realises a gauge equivalence `A ≅ B`.
    Gauge {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// JSON list of `{degree, matrix}` for degrees `0..=cutoff`.
        #[arg(long)]
        theta: PathBuf,
        #[arg(long, value_enum, default_value = "pairwise")]
        variant: WitnessVariant,
    },
    /// Build `θ` with `∂₋θ · φ · (∂₊θ)⁻¹ = ψ` from two counital cocycles.
    Cohomology {
        #[arg(long)]
        psi: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        /// Square matrix `ϖ` on `V`, identity by default.
        #[arg(long)]
        varpi: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    Input(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

/// Refusals caused by the properties under test, as opposed to malformed input.
fn space_refusal(e: &SpaceError) -> Option<String> {
    match e {
        SpaceError::NotCocycle(b) => Some(format!("not a cocycle {b:?}")),
        SpaceError::NotCounital(b) => Some(format!("not counital {b:?}")),
        SpaceError::NotAdmissible(b) => Some(format!("not admissible {b:?}")),
        SpaceError::Cochain(c) => cochain_refusal(c),
        _ => None,
    }
}

fn cochain_refusal(e: &CochainError) -> Option<String> {
    match e {
        CochainError::NotCocycle(b) => Some(format!("not a cocycle {b:?}")),
        CochainError::NotCounital(b) => Some(format!("not counital {b:?}")),
        CochainError::PrimitiveMismatch(b) => Some(format!("primitive mismatch {b:?}")),
        CochainError::WitnessMismatch(b) => Some(format!("witness mismatch {b:?}")),
        _ => None,
    }
}

/// What a command produced besides its report.
enum Artifact {
    None,
    Space(QuantumSpace),
    Cochain(Cochain),
}

struct Outcome {
    report: ScenarioReport,
    artifact: Artifact,
    text: Vec<String>,
}

impl Outcome {
    fn new(name: &str) -> Self {
        Outcome { report: ScenarioReport::new(name), artifact: Artifact::None, text: Vec::new() }
    }
}

fn describe_space(qs: &QuantumSpace) -> Vec<String> {
    let mut lines = vec![format!("space {} on [{}], cutoff {}", qs.name(), qs.generators().join(", "), qs.cutoff())];
    for rel in qs.ideal().minimal_relations() {
        lines.push(format!("  degree {}: {}", rel.degree, io::format_relation(&rel, qs.generators())));
    }
    lines.push(format!("  hilbert: {}", join_numbers(&qs.hilbert())));
    lines
}

fn join_numbers(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn space_result(report: &mut ScenarioReport, label: &str, r: Result<QuantumSpace, SpaceError>) -> Result<Option<QuantumSpace>, CliError> {
    match r {
        Ok(qs) => {
            report.check(label, true);
            Ok(Some(qs))
        }
        Err(e) => match space_refusal(&e) {
            Some(why) => {
                report.record(label, false, Some(why));
                Ok(None)
            }
            None => Err(input(e)),
        },
    }
}

fn run_check(cochain: &Path, space: Option<&Path>, cutoff: Option<usize>) -> Result<Outcome, CliError> {
    let c = io::load_cochain(cochain, cutoff)?;
    let mut out = Outcome::new("check");
    out.report.param("level", c.level()).param("dim", c.dim()).param("cutoff", c.cutoff());
    let (counital, cocycle) = (c.counital_failure(), c.cocycle_failure());
    out.report.record("counital", counital.is_none(), counital.map(|b| format!("{b:?}")));
    out.report.record("cocycle", cocycle.is_none(), cocycle.map(|b| format!("{b:?}")));
    if c.level() == 2 {
        let bi = c.factorization_failure(SeedKind::Bicharacter).is_none();
        let anti = c.factorization_failure(SeedKind::Antibicharacter).is_none();
        out.text.push(format!("class: bicharacter={bi} antibicharacter={anti} scalar_00={}", c.scalar_00()));
    }
    if let Some(path) = space {
        let qs = io::load_space(path, cutoff)?;
        out.report.param("space", qs.name());
        out.report.verdict("admissible", &is_admissible(&qs, &c).map_err(input)?);
        let second = is_second_admissible(&qs, &c).map_err(input)?;
        out.text.push(format!("2nd admissible: {}", if second.holds { "yes".to_string() } else { format!("no {:?}", second.witness.unwrap_or_default()) }));
    }
    Ok(out)
}

fn run_twist(space: &Path, cochain: &Path, cutoff: Option<usize>) -> Result<Outcome, CliError> {
    let qs = io::load_space(space, cutoff)?;
    let c = io::load_cochain(cochain, cutoff)?;
    let mut out = Outcome::new("twist");
    out.report.param("space", qs.name()).param("cutoff", qs.cutoff());
    if let Some(t) = space_result(&mut out.report, "twist", twist(&qs, &c))? {
        out.text = describe_space(&t);
        out.artifact = Artifact::Space(t);
    }
    Ok(out)
}

fn run_hilbert(space: &Path, cochain: Option<&Path>, cutoff: Option<usize>) -> Result<Outcome, CliError> {
    let qs = io::load_space(space, cutoff)?;
    let mut out = Outcome::new("hilbert");
    out.report.param("space", qs.name()).param("cutoff", qs.cutoff());
    out.text.push(format!("hilbert: {}", join_numbers(&qs.hilbert())));
    if let Some(path) = cochain {
        let c = io::load_cochain(path, cutoff)?;
        if let Some(t) = space_result(&mut out.report, "twist", twist(&qs, &c))? {
            out.text.push(format!("hilbert of twist: {}", join_numbers(&t.hilbert())));
            out.report.check("hilbert(A_ψ) = hilbert(A)", t.hilbert() == qs.hilbert());
        }
    }
    Ok(out)
}

fn load_degree_blocks(path: &Path) -> Result<Vec<Matrix>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let blocks: Vec<io::DegreeBlock> =
        serde_json::from_str(&text).map_err(|e| input(format!("{}: malformed JSON: {e}", path.display())))?;
    let mut sorted = blocks;
    sorted.sort_by_key(|b| b.degree);
    sorted
        .iter()
        .enumerate()
        .map(|(n, b)| {
            if b.degree != n {
                return Err(input(format!("theta: missing degree {n}")));
            }
            let rows = b
                .matrix
                .iter()
                .map(|row| row.iter().map(|s| parse_rational(s).map_err(input)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::from_rows(rows).map_err(|e| input(format!("theta degree {n}: {e}")))?;
            if !m.is_square() {
                return Err(input(format!("theta degree {n}: matrix is not square")));
            }
            Ok(m)
        })
        .collect()
}

fn run_witness(mode: &WitnessMode, cutoff: Option<usize>) -> Result<Outcome, CliError> {
    match mode {
        WitnessMode::Gauge { space, target, theta, variant } => {
            let a = io::load_space(space, cutoff)?;
            let b = io::load_space(target, cutoff)?;
            let mut family = load_degree_blocks(theta)?;
            if family.len() < a.cutoff() + 1 {
                return Err(input(format!("theta covers degrees 0..{} but the cutoff is {}", family.len(), a.cutoff())));
            }
            family.truncate(a.cutoff() + 1);
            let mut out = Outcome::new("witness");
            out.report.param("A", a.name()).param("B", b.name()).param("variant", format!("{variant:?}").to_lowercase());
            out.report.verdict("gauge witness", &verify_gauge_witness(&a, &b, &family, *variant).map_err(input)?);
            Ok(out)
        }
        WitnessMode::Cohomology { psi, phi, varpi } => {
            let psi = io::load_cochain(psi, cutoff)?;
            let phi = io::load_cochain(phi, cutoff)?;
            let w = match varpi {
                Some(p) => io::load_matrix(p)?,
                None => Matrix::identity(psi.dim()),
            };
            let mut out = Outcome::new("witness");
            out.report.param("dim", psi.dim()).param("cutoff", psi.cutoff());
            match cohomology_witness(&psi, &phi, &w) {
                Ok(theta) => {
                    out.report.check("cohomology witness", true);
                    out.artifact = Artifact::Cochain(theta);
                }
                Err(e) => match cochain_refusal(&e) {
                    Some(why) => out.report.record("cohomology witness", false, Some(why)),
                    None => return Err(input(e)),
                },
            }
            Ok(out)
        }
    }
}

fn run_bridge(cochain: &Path, cutoff: Option<usize>, seed: u64) -> Result<Outcome, CliError> {
    let x = io::load_cochain(cochain, cutoff)?;
    let (n, d, k) = (x.level(), x.dim(), x.cutoff());
    let mut out = Outcome::new("bridge");
    out.report.param("level", n).param("dim", d).param("cutoff", k).param("seed", seed);
    let chi = cochain_to_form(&x);
    let bridge = |e: crate::bridge::BridgeError| input(e);
    let cochain = |e: CochainError| input(e);
    out.report.check("iso round trip", form_to_cochain(&chi) == x);
    let fc = digamma(&chi);
    out.report.check("Ϝχ = 𝔧(χ, χ^!)", fc == product_cochain(&x, &coadjoint(&x)).map_err(cochain)?);
    let zeta = random::form(&mut random::rng(seed), n, d, k, false);
    let conv = chi.convolution(&zeta).map_err(bridge)?;
    out.report.check("Ϝ(χ∗ζ) = Ϝζ·Ϝχ", digamma(&conv) == digamma(&zeta).compose(&fc).map_err(cochain)?);
    for i in 0..=n + 1 {
        let lhs = digamma(&chi.face(i).map_err(bridge)?);
        out.report.check(format!("Ϝ∘d_{i} = δ_{i}∘Ϝ"), lhs == fc.coface(i).map_err(cochain)?);
    }
    out.report.check("Ϝ∘d = ∂∘Ϝ", digamma(&chi.coboundary()) == fc.coboundary().full);
    if x.counital_failure().is_none() {
        out.report.check("counital form maps to a counital cochain", fc.counital_failure().is_none());
    }
    Ok(out)
}

fn run_verify(
    suite: &str,
    space: Option<&Path>,
    cochain: Option<&Path>,
    qv: Option<&str>,
    rv: Option<&str>,
    cutoff: Option<usize>,
    seed: Option<u64>,
) -> Result<Outcome, CliError> {
    let mut params = SuiteParams::with_seed(seed.unwrap_or(0));
    if let Some(s) = qv {
        params.q = parse_rational(s).map_err(input)?;
    }
    if let Some(s) = rv {
        params.r = parse_rational(s).map_err(input)?;
    }
    params.space = space.map(|p| io::load_space(p, cutoff)).transpose()?;
    params.cochain = cochain.map(|p| io::load_cochain(p, cutoff)).transpose()?;
    let report = run_theorem_suite(suite, &params).map_err(|e| match e {
        ScenarioError::UnknownSuite(_) => input(format!("{e}; known suites: {}", crate::scenarios::SUITES.join(", "))),
        other => input(other),
    })?;
    Ok(Outcome { report, artifact: Artifact::None, text: Vec::new() })
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let cutoff = cli.cutoff;
    match &cli.command {
        Command::Check { cochain, space } => run_check(cochain, space.as_deref(), cutoff),
        Command::Twist { space, cochain } => run_twist(space, cochain, cutoff),
        Command::Dual { space } => {
            let qs = io::load_space(space, cutoff)?;
            let mut out = Outcome::new("dual");
            let d = dual(&qs);
            out.report.param("space", qs.name());
            out.report.check("dual", true);
            out.text = describe_space(&d);
            out.artifact = Artifact::Space(d);
            Ok(out)
        }
        Command::Product { kind, left, right } => {
            let (a, b) = (io::load_space(left, cutoff)?, io::load_space(right, cutoff)?);
            let mut out = Outcome::new("product");
            out.report.param("kind", format!("{kind:?}").to_lowercase()).param("A", a.name()).param("B", b.name());
            let p = product(*kind, &a, &b).map_err(input)?;
            out.report.check("product", true);
            out.text = describe_space(&p);
            out.artifact = Artifact::Space(p);
            Ok(out)
        }
        Command::Cohom { source, target } => {
            let (b, a) = (io::load_space(source, cutoff)?, io::load_space(target, cutoff)?);
            let mut out = Outcome::new("cohom");
            out.report.param("B", b.name()).param("A", a.name());
            let h = cohom(&b, &a).map_err(input)?;
            out.report.check("cohom", true);
            out.text = describe_space(&h);
            out.artifact = Artifact::Space(h);
            Ok(out)
        }
        Command::Hilbert { space, cochain } => run_hilbert(space, cochain.as_deref(), cutoff),
        Command::Witness { mode } => run_witness(mode, cutoff),
        Command::Bridge { cochain } => run_bridge(cochain, cutoff, cli.seed.unwrap_or(0)),
        Command::Verify { suite, space, cochain, q, r } => {
            run_verify(suite, space.as_deref(), cochain.as_deref(), q.as_deref(), r.as_deref(), cutoff, cli.seed)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Write { path: path.display().to_string(), source })
}

/// Runs one invocation, writing the report to `stdout` and diagnostics to `stderr`; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    let start = Instant::now();
    let result = dispatch(&cli).and_then(|mut out| {
        out.report.runtime = start.elapsed();
        let file = match (&out.artifact, &cli.out) {
            (_, None) => None,
            (Artifact::Space(qs), Some(p)) => Some((p, io::emit_space(qs))),
            (Artifact::Cochain(c), Some(p)) => Some((p, io::emit_cochain(c))),
            (Artifact::None, Some(p)) => Some((p, io::to_canonical_json(&out.report.to_json(cli.timing)))),
        };
        if let Some((p, contents)) = file {
            write_file(p, &contents)?;
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            for line in &out.text {
                let _ = writeln!(stdout, "{line}");
            }
            let _ = write!(stdout, "{}", out.report.lines());
            if cli.timing {
                let _ = writeln!(stdout, "runtime: {} ms", out.report.runtime.as_millis());
            }
            if out.report.passed() { 0 } else { 1 }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
