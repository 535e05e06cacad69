//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a sweep finds a bound violation or the
//! two inertia engines disagree, 2 on usage, input or output errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::enumerate::{enumerate_connected_graphs, SwitchingClasses};
use crate::families::{
    make_complete_multipartite, make_cycle, make_cycle_with_pendant_star, make_path,
    make_signed_canonical_unicyclic, make_star, make_theta, FamilyError, ThetaSigns,
};
use crate::graph::{Sign, SignedGraph};
use crate::inertia::{exact_inertia, float_spectrum, FloatError, Spectrum};
use crate::sgf::{parse_sgf, write_sgf};
use crate::structure::{girth, is_balanced, is_connected};
use crate::verify::{
    check_equality_families, evaluate, sweep, Engines, Status, SweepOptions,
    VerificationReport, VerifyError, DEFAULT_MAX_N, DEFAULT_SEED, MAX_SWEEP_ORDER,
};

#[derive(Debug, Parser)]
#[command(name = "sigraph", version, about = "Positive inertia and girth of signed graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, connectivity, girth, balance, inertia and spectrum of a graph
    Info(InputArgs),
    /// Eigenvalues, one per line, followed by the inertia
    Spectrum(SpectrumArgs),
    /// Family label and position relative to the girth bound
    Classify(InputArgs),
    /// Write a family member or an enumeration as SGF
    Gen(GenArgs),
    /// Exhaustive sweep over connected graphs and their switching classes
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// SGF file, or `-` for standard input
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// SGF file, or `-` for standard input
    pub input: PathBuf,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Args, Clone, Copy, Default)]
#[group(multiple = false)]
pub struct EngineArgs {
    /// Use only the exact rational engine
    #[arg(long)]
    pub exact_only: bool,
    /// Use only the floating-point eigensolver
    #[arg(long)]
    pub float_only: bool,
}

impl EngineArgs {
    fn engines(self) -> Engines {
        if self.exact_only {
            Engines::ExactOnly
        } else if self.float_only {
            Engines::FloatOnly
        } else {
            Engines::Both
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Balance {
    Balanced,
    Unbalanced,
}

impl Balance {
    fn is_balanced(self) -> bool {
        self == Balance::Balanced
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: GenFamily,
    /// Output file for a single graph (default: standard output)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory receiving one SGF file per enumerated graph
    #[arg(long, global = true)]
    pub dump_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Cycle on N vertices
    Cycle { n: usize, balance: Balance },
    /// Path on N vertices
    Path { n: usize },
    /// Star with the given number of leaves
    Star { leaves: usize },
    /// All-positive complete multipartite graph with the given part sizes
    Multipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Cycle with pendant leaves, stars given as POSITION:LEAVES
    Unicyclic {
        girth: usize,
        balance: Balance,
        #[arg(required = true, value_parser = parse_star)]
        stars: Vec<(usize, usize)>,
    },
    /// Cycle with a pendant star of T leaves joined to vertex 0
    CycleStar { girth: usize, balance: Balance, t: usize },
    /// Theta graph with paths of K, L, M vertices (hubs included)
    Theta {
        k: usize,
        l: usize,
        m: usize,
        /// Sign of the cycle through the K and L paths
        #[arg(default_value = "+")]
        kl: SignArg,
        /// Sign of the cycle through the L and M paths
        #[arg(default_value = "+")]
        lm: SignArg,
    },
    /// Every connected graph on N vertices up to isomorphism (needs --dump-dir)
    Connected { n: usize },
    /// Every switching class of every connected graph on N vertices (needs --dump-dir)
    Signed { n: usize },
}

fn parse_star(s: &str) -> Result<(usize, usize), String> {
    let (pos, leaves) = s.split_once(':').ok_or_else(|| format!("expected POSITION:LEAVES, got `{s}`"))?;
    let pos = pos.parse().map_err(|_| format!("bad position in `{s}`"))?;
    let leaves = leaves.parse().map_err(|_| format!("bad leaf count in `{s}`"))?;
    Ok((pos, leaves))
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest order swept (8 needs --allow-n8)
    #[arg(long, default_value_t = DEFAULT_MAX_N,
          value_parser = RangedU64ValueParser::<usize>::new().range(3..=MAX_SWEEP_ORDER as u64))]
    pub max_n: usize,
    /// Permit the order-8 sweep, which takes far longer than order 7
    #[arg(long)]
    pub allow_n8: bool,
    /// Worker threads
    #[arg(long, default_value_t = 1, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub jobs: usize,
    /// Seed for the random probes
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Evaluate the lemma checks on every record
    #[arg(long)]
    pub lemma_checks: bool,
    /// Report file (default: standard output)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory receiving counterexamples and discrepancy witnesses as SGF
    #[arg(long)]
    pub dump_dir: Option<PathBuf>,
    /// Omit the timing footer
    #[arg(long)]
    pub no_footer: bool,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Float(#[from] FloatError),
    #[error("{0}")]
    Verification(VerifyError),
    #[error("bound violated on {0} record(s)")]
    Counterexamples(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Counterexamples(_) => 1,
            CliError::Verification(VerifyError::EngineMismatch { .. } | VerifyError::BoundViolated(_)) => 1,
            CliError::Float(_) => 1,
            _ => 2,
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Acyclic => CliError::Usage("girth undefined: the graph has no cycle".into()),
            VerifyError::Disconnected => CliError::Usage("graph is not connected".into()),
            other => CliError::Verification(other),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Info(a) => cmd_info(&a.input, out),
        Command::Spectrum(a) => cmd_spectrum(&a.input, a.engine.engines(), out),
        Command::Classify(a) => cmd_classify(&a.input, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err(path))?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err(path))?
    };
    parse_sgf(&text).map_err(|e| CliError::Parse { path: path.display().to_string(), message: e.to_string() })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(io_err(Path::new("<stdout>")))
}

/// `%g`-style rendering with six significant digits; values within the
/// spectrum's zero tolerance print as `0`.
pub fn format_eigenvalue(x: f64, zero_tolerance: f64) -> String {
    if x.abs() <= zero_tolerance {
        return "0".to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn spectrum_line(s: &Spectrum) -> String {
    let vals: Vec<String> = s.values().iter().map(|&x| format_eigenvalue(x, s.zero_tolerance())).collect();
    vals.join(" ")
}

pub fn cmd_info(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let connected = g.n() > 0 && is_connected(&g).unwrap_or(false);
    let girth = girth(&g).map_or_else(|| "none".to_string(), |x| x.to_string());
    let spectrum = float_spectrum(&g)?;
    let text = format!(
        "n={} m={} connected={connected}\ngirth={girth} balanced={} inertia={}\nspectrum: {}\n",
        g.n(),
        g.m(),
        is_balanced(&g),
        exact_inertia(&g),
        spectrum_line(&spectrum),
    );
    emit(out, &text)
}

pub fn cmd_spectrum(path: &Path, engines: Engines, out: &mut dyn Write) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let mut text = String::new();
    let inertia = match engines {
        Engines::ExactOnly => exact_inertia(&g),
        _ => {
            let s = float_spectrum(&g)?;
            for &x in s.values() {
                text.push_str(&format_eigenvalue(x, s.zero_tolerance()));
                text.push('\n');
            }
            let float = s.inertia();
            if engines == Engines::Both {
                let exact = exact_inertia(&g);
                if exact != float {
                    return Err(VerifyError::EngineMismatch {
                        graph: crate::sgf::write_sgf_inline(&g),
                        exact,
                        float,
                    }
                    .into());
                }
            }
            float
        }
    };
    text.push_str(&format!("inertia={inertia}\n"));
    emit(out, &text)
}

pub fn cmd_classify(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let rec = check_equality_families(evaluate(&g, Engines::Both)?);
    let mut text = format!("{} status={}\n", rec.family, rec.status);
    text.push_str(&format!(
        "girth={} bound_floor={} inertia={}\n",
        rec.girth, rec.bound_floor, rec.inertia
    ));
    for d in &rec.discrepancies {
        text.push_str(&format!("discrepancy {}: {}\n", d.statement, d.detail));
    }
    emit(out, &text)?;
    if rec.status == Status::Strict {
        return Err(CliError::Counterexamples(1));
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(io_err(path))
}

fn dump_dir(dir: Option<PathBuf>, what: &str) -> Result<PathBuf, CliError> {
    let dir = dir.ok_or_else(|| CliError::Usage(format!("{what} needs --dump-dir")))?;
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;
    Ok(dir)
}

pub fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = match args.family {
        GenFamily::Cycle { n, balance } => make_cycle(n, balance.is_balanced())?,
        GenFamily::Path { n } => make_path(n)?,
        GenFamily::Star { leaves } => make_star(leaves)?,
        GenFamily::Multipartite { parts } => make_complete_multipartite(&parts)?,
        GenFamily::Unicyclic { girth, balance, stars } => {
            make_signed_canonical_unicyclic(girth, balance.is_balanced(), &stars)?
        }
        GenFamily::CycleStar { girth, balance, t } => {
            make_cycle_with_pendant_star(girth, balance.is_balanced(), t)?
        }
        GenFamily::Theta { k, l, m, kl, lm } => make_theta(k, l, m, ThetaSigns::new(kl.into(), lm.into()))?,
        GenFamily::Connected { n } => {
            let dir = dump_dir(args.dump_dir, "gen connected")?;
            let graphs = enumerate_connected_graphs(n).map_err(|e| CliError::Usage(e.to_string()))?;
            for (i, g) in graphs.iter().enumerate() {
                write_file(&dir.join(format!("connected-n{n}-{i:05}.sgf")), &write_sgf(g))?;
            }
            return emit(out, &format!("wrote {} graphs to {}\n", graphs.len(), dir.display()));
        }
        GenFamily::Signed { n } => {
            let dir = dump_dir(args.dump_dir, "gen signed")?;
            let graphs = enumerate_connected_graphs(n).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut count = 0;
            for (i, base) in graphs.iter().enumerate() {
                let classes = SwitchingClasses::new(base).map_err(|e| CliError::Usage(e.to_string()))?;
                for (c, g) in classes.iter().enumerate() {
                    write_file(&dir.join(format!("signed-n{n}-{i:05}-{c:04}.sgf")), &write_sgf(&g))?;
                    count += 1;
                }
            }
            return emit(out, &format!("wrote {count} signed graphs to {}\n", dir.display()));
        }
    };
    match args.out {
        Some(path) => write_file(&path, &write_sgf(&g)),
        None => emit(out, &write_sgf(&g)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable digest of a report.
pub fn summary_table(report: &VerificationReport) -> String {
    let s = &report.summary;
    let mut t = String::new();
    let o = &s.options;
    t.push_str(&format!(
        "sweep: max_n={} seed={} engines={} lemma-checks={}\n",
        o.max_n,
        o.seed,
        serde_json::to_value(o.engines).expect("serializable").as_str().unwrap_or("?"),
        if o.lemma_checks { "on" } else { "off" }
    ));
    t.push_str("order  underlying  acyclic  records\n");
    for c in &s.orders {
        t.push_str(&format!("{:>5}  {:>10}  {:>7}  {:>7}\n", c.n, c.underlying, c.acyclic, c.records));
    }
    let mut by_status = [0usize; 4];
    for c in &s.totals {
        by_status[c.status as usize] += c.count;
    }
    t.push_str(&format!(
        "status: strict={} equality={} plus-one={} higher={}\n",
        by_status[0], by_status[1], by_status[2], by_status[3]
    ));
    let k = &s.checks;
    t.push_str(&format!("counterexamples: {}\n", k.bound_violations));
    t.push_str(&format!("equality outside cycles and multipartite graphs: {}\n", k.equality_structure_violations));
    t.push_str(&format!("p+=1 vs balanced complete multipartite mismatches: {}\n", k.p_plus_one_mismatches));
    t.push_str(&format!(
        "improved bound violations: stated reading {}, corrected reading {}\n",
        k.improved_bound_violations_stated, k.improved_bound_violations_corrected
    ));
    if let Some(tallies) = &s.lemma_checks {
        t.push_str("lemma checks:\n");
        for (name, tally) in tallies {
            t.push_str(&format!(
                "  {name:<24} applicable={} passed={} failed={}\n",
                tally.applicable, tally.passed, tally.failed
            ));
        }
    }
    t.push_str(&format!("discrepancies: {}\n", s.discrepancies.len()));
    for d in &s.discrepancies {
        t.push_str(&format!("  {} [{}] x{}: {}\n", d.statement, d.detail, d.count, d.witness));
    }
    let c = &s.cycle_classes;
    t.push_str(&format!(
        "cycle classes up to n={}: closed form disagreements={}, stated classes mismatched={}\n",
        c.max_n,
        c.closed_form_disagreements,
        c.mismatches.len()
    ));
    for m in &c.mismatches {
        t.push_str(&format!(
            "  {} n ≡ {} (mod 4): stated {}, observed {} (witness {})\n",
            if m.balanced { "balanced" } else { "unbalanced" },
            m.n_mod_4,
            m.stated,
            m.observed,
            m.witness
        ));
    }
    let cs = &s.cycle_star_classes;
    let classes: Vec<String> = cs
        .plus_one_classes
        .iter()
        .map(|(b, r)| format!("{} ≡{r}", if *b { "balanced" } else { "unbalanced" }))
        .collect();
    t.push_str(&format!(
        "cycle with pendant star: plus-one at [{}]; stated mismatches={} corrected mismatches={}\n",
        classes.join(", "),
        cs.stated_mismatches,
        cs.corrected_mismatches
    ));
    let u = &s.unicyclic_parity;
    t.push_str(&format!(
        "canonical unicyclic: cases={} law failures={} stated mismatches={} corrected mismatches={} interchanged={}\n",
        u.cases,
        u.law_failures,
        u.stated_mismatches,
        u.corrected_mismatches,
        yes_no(u.interchanged)
    ));
    for p in &u.pairings {
        let observed: Vec<&str> = p.observed.iter().map(|k| k.name()).collect();
        t.push_str(&format!(
            "  {} girth: observed [{}], stated {}, proof {}\n",
            p.girth_parity,
            observed.join(", "),
            p.stated,
            p.proof
        ));
    }
    for f in &s.theta_fixtures {
        t.push_str(&format!(
            "theta {}: girth={} exact={} float={} expected p+={} status={}\n",
            f.label, f.girth, f.exact, f.float, f.expected_p_plus, f.status
        ));
    }
    t
}

fn dump_witnesses(dir: &Path, report: &VerificationReport) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let inline_to_sgf = |s: &str| s.replace(';', "\n") + "\n";
    for (i, rec) in report.summary.counterexamples.iter().enumerate() {
        write_file(&dir.join(format!("counterexample-{i:04}.sgf")), &inline_to_sgf(&rec.graph))?;
    }
    for (i, d) in report.summary.discrepancies.iter().enumerate() {
        write_file(&dir.join(format!("{}-{i:03}.sgf", d.statement)), &inline_to_sgf(&d.witness))?;
    }
    Ok(())
}

pub fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if args.max_n == 8 && !args.allow_n8 {
        return Err(CliError::Usage(
            "--max-n 8 sweeps millions of signed graphs; pass --allow-n8 to run it".into(),
        ));
    }
    if args.max_n == 8 {
        let _ = writeln!(err, "warning: the order-8 sweep can take hours");
    }
    let started = Instant::now();
    let opts = SweepOptions {
        max_n: args.max_n,
        jobs: args.jobs,
        seed: args.seed,
        lemma_checks: args.lemma_checks,
        engines: args.engine.engines(),
    };
    let report = sweep(&opts)?;
    let json = report.to_json_lines();
    let table = summary_table(&report);
    let footer = format!("elapsed {:.2}s\n", started.elapsed().as_secs_f64());
    match &args.out {
        Some(path) => {
            write_file(path, &json)?;
            emit(out, &table)?;
            if !args.no_footer {
                emit(out, &footer)?;
            }
        }
        None => {
            emit(out, &json)?;
            let _ = err.write_all(table.as_bytes());
            if !args.no_footer {
                let _ = err.write_all(footer.as_bytes());
            }
        }
    }
    if let Some(dir) = &args.dump_dir {
        dump_witnesses(dir, &report)?;
    }
    if !report.bound_holds() {
        return Err(CliError::Counterexamples(report.summary.counterexamples.len()));
    }
    Ok(())
}
