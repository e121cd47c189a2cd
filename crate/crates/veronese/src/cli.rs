//! Command-line front end.
//!
//! Exit status: 0 success, 1 mathematical mismatch, 2 invalid configuration,
//! 3 resource cap, 4 verification inconclusive at the tested horizon.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use veronese_core::charpoly::DEFAULT_MAX_TERMS;
use veronese_core::{
    bott, BottOutcome, DominantWeight, Engine, Error, ExtTable, Limits, Partition, WeightWindow,
};

use crate::schema::{ExtDoc, TableDoc};
use crate::sweep::{self, Kind};
use crate::verify::{self, Report, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

const NEGATIVE_HELP: &str = "Negative integers may be written with a leading `m` (m3 = -3) \
when the shell or flag parser would swallow the minus sign; `--r=-3` also works.";

#[derive(Parser, Debug)]
#[command(name = "veronese", version, about = "Exact characters of D-modules on Veronese cones", after_help = NEGATIVE_HELP)]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest number of monomials a single plethysm sweep may hold.
    #[arg(long, global = true, env = "VERONESE_CACHE_CAP", default_value_t = DEFAULT_MAX_TERMS)]
    pub cache_cap: u64,

    /// Lift the desk-scale guards 1 ≤ n ≤ 10 and 2 ≤ d ≤ 6.
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Windowed character of D_j or E.
    Character(CharacterArgs),
    /// Windowed table of one of the intermediate multiplicities.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Cohomology of S_mu R ⊗ Q^r on P^(n-1), via Bott's algorithm.
    Bott(BottArgs),
    /// Stable plethysm multiplicity nu_mu.
    Nu(NuArgs),
    /// The alternating sum m_lambda.
    M(MArgs),
    /// Ext modules of M_mu against S.
    Ext(ExtArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct WindowArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    /// Upper bound on lambda_1.
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
    pub l1max: i64,
    /// Lower bound on lambda_n.
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
    pub lnmin: i64,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Route {
    /// The a_lambda^j formula.
    Direct,
    /// The filtration spectral sequence, summed two ways (D0 only).
    Spectral,
}

#[derive(Args, Debug)]
pub struct CharacterArgs {
    /// D0, D1, ..., D(d-1), or E.
    #[arg(long)]
    pub target: String,
    #[command(flatten)]
    pub window: WindowArgs,
    #[arg(long, value_enum, default_value_t = Route::Direct)]
    pub route: Route,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum TableKind {
    S,
    APleth,
    P,
    Nu,
    M,
    E,
    #[value(name = "a-j")]
    AJ,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: TableKind,
    /// Residue for `--kind a-j`.
    #[arg(long)]
    pub j: Option<u32>,
    #[command(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Suite {
    D2Table,
    Stabilization,
    Hooks,
    PrimitiveSum,
    PrimitiveOrdering,
    ExtTwoRoute,
    D0TwoRoute,
    DetExclusion,
    GeneratingFunction,
    BottRoundtrip,
    Witness,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Rank; `hooks` and `bott-roundtrip` default to n = 2, 3, 4.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true, default_value = "8")]
    pub l1max: i64,
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true, default_value = "m4")]
    pub lnmin: i64,
    /// Largest |mu| for stabilization, primitive-sum, ext and det-exclusion.
    #[arg(long, default_value_t = 6)]
    pub musize: u32,
    /// Largest hook size.
    #[arg(long, default_value_t = 12)]
    pub sizemax: u32,
    /// Largest t for the generating function check.
    #[arg(long, default_value_t = 20)]
    pub tmax: u32,
    /// Entries of lambda lie in [-range, range] for bott-roundtrip.
    #[arg(long, default_value_t = 5)]
    pub range: i64,
    /// Largest lambda_2 + ... + lambda_n for primitive-ordering.
    #[arg(long, default_value_t = 6)]
    pub gmax: u32,
}

#[derive(Args, Debug)]
pub struct BottArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated, n - 1 nonincreasing integers (may be empty).
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, default_value = "")]
    pub mu: IntList,
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
    pub r: i64,
}

#[derive(Args, Debug)]
pub struct NuArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, default_value = "")]
    pub mu: IntList,
}

#[derive(Args, Debug)]
pub struct MArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub lambda: IntList,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum ExtRoute {
    Bott,
    Closed,
}

#[derive(Args, Debug)]
pub struct ExtArgs {
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub mu: IntList,
    #[command(flatten)]
    pub window: WindowArgs,
    #[arg(long, value_enum, default_value_t = ExtRoute::Bott)]
    pub route: ExtRoute,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A parsed comma-separated integer list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

fn parse_int(s: &str) -> Result<i64, String> {
    let t = s.trim();
    let (neg, digits) = match t.strip_prefix('m') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let v: i64 = digits.parse().map_err(|e| format!("`{s}`: {e}"))?;
    Ok(if neg { -v } else { v })
}

fn parse_list(s: &str) -> Result<IntList, String> {
    if s.trim().is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',').map(parse_int).collect::<Result<_, _>>().map(IntList)
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_mathematical() {
            EXIT_MISMATCH
        } else if e.is_resource() {
            EXIT_RESOURCE
        } else {
            EXIT_CONFIG
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        config(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        config(format!("csv error: {e}"))
    }
}

fn config(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_CONFIG,
        message: message.into(),
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit status; data goes to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_CONFIG
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return EXIT_CONFIG;
        }
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = match pool.install(|| dispatch(&cli, &mut out, &mut err)) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    };
    let _ = stdout.write_all(&out).and_then(|()| stdout.flush());
    let _ = stderr.write_all(&err);
    code
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let engine = Engine::new(Limits::new(cli.cache_cap));
    let guard = Guard {
        allow_large: cli.allow_large,
    };
    match &cli.command {
        Command::Character(a) => cmd_character(&engine, guard, a, stdout),
        Command::Table(a) => cmd_table(&engine, guard, a, stdout),
        Command::Verify(a) => cmd_verify(&engine, guard, a, stdout, stderr),
        Command::Bott(a) => cmd_bott(guard, a, stdout),
        Command::Nu(a) => cmd_nu(&engine, guard, a, stdout),
        Command::M(a) => cmd_m(&engine, guard, a, stdout),
        Command::Ext(a) => cmd_ext(guard, a, stdout),
    }
}

#[derive(Clone, Copy)]
struct Guard {
    allow_large: bool,
}

impl Guard {
    fn n(self, n: usize) -> Result<(), Failure> {
        if n == 0 {
            return Err(config("n must be at least 1"));
        }
        if !self.allow_large && n > 10 {
            return Err(config(format!("n = {n} exceeds 10; pass --allow-large to proceed")));
        }
        Ok(())
    }

    fn d(self, d: u32) -> Result<(), Failure> {
        if d < 2 {
            return Err(config("d must be at least 2"));
        }
        if !self.allow_large && d > 6 {
            return Err(config(format!("d = {d} exceeds 6; pass --allow-large to proceed")));
        }
        Ok(())
    }

    fn window(self, a: &WindowArgs) -> Result<WeightWindow, Failure> {
        self.n(a.n)?;
        self.d(a.d)?;
        Ok(window(a.n, a.l1max, a.lnmin)?)
    }
}

/// A window with the given bounds; inverted bounds give the empty window.
fn window(n: usize, l1max: i64, lnmin: i64) -> veronese_core::Result<WeightWindow> {
    if l1max < lnmin {
        let mut w = WeightWindow::empty(n);
        w.lambda1_max = l1max;
        w.lambdan_min = lnmin;
        Ok(w)
    } else {
        WeightWindow::new(n, l1max, lnmin)
    }
}

fn emit(out: &OutputArgs, stdout: &mut dyn Write, write: impl FnOnce(&mut dyn Write) -> Result<(), Failure>) -> CmdResult {
    match &out.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| config(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write(&mut w)?;
            w.flush()?;
        }
        None => write(stdout)?,
    }
    Ok(EXIT_OK)
}

fn write_table(doc: &TableDoc, out: &OutputArgs, stdout: &mut dyn Write) -> CmdResult {
    emit(out, stdout, |w| {
        match out.format {
            Format::Json => doc.write_json(&mut BoxedWrite(w))?,
            Format::Csv => doc.write_csv(&mut BoxedWrite(w))?,
        }
        Ok(())
    })
}

/// Adapter so the schema writers, which take `impl Write`, accept `dyn Write`.
struct BoxedWrite<'a>(&'a mut dyn Write);

impl Write for BoxedWrite<'_> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.0.write(buf)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.0.flush()
    }
}

fn parse_target(target: &str, d: u32) -> Result<Kind, Failure> {
    if target == "E" {
        return Ok(Kind::E);
    }
    let j = target
        .strip_prefix('D')
        .and_then(|j| j.parse::<u32>().ok())
        .ok_or_else(|| config(format!("unknown target `{target}`; expected D0..D{} or E", d - 1)))?;
    if j >= d {
        return Err(config(format!("target D{j} needs j < d = {d}")));
    }
    Ok(Kind::Aj(j))
}

fn cmd_character(engine: &Engine, guard: Guard, a: &CharacterArgs, stdout: &mut dyn Write) -> CmdResult {
    let win = guard.window(&a.window)?;
    let d = a.window.d;
    let kind = parse_target(&a.target, d)?;
    let character = match (a.route, kind) {
        (Route::Direct, _) => sweep::table(engine, kind, d, &win)?,
        (Route::Spectral, Kind::Aj(0)) => {
            engine.prepare(d, &win)?;
            engine.d0_spectral(d, &win)?
        }
        (Route::Spectral, _) => return Err(config("--route spectral is only available for D0")),
    };
    let shown = *character.window().unwrap_or(&win);
    let doc = TableDoc::new(&a.target, d, kind.j(), &shown, &character);
    write_table(&doc, &a.output, stdout)
}

fn cmd_table(engine: &Engine, guard: Guard, a: &TableArgs, stdout: &mut dyn Write) -> CmdResult {
    let win = guard.window(&a.window)?;
    let d = a.window.d;
    let kind = match a.kind {
        TableKind::S => Kind::S,
        TableKind::APleth => Kind::APleth,
        TableKind::P => Kind::P,
        TableKind::Nu => Kind::Nu,
        TableKind::M => Kind::M,
        TableKind::E => Kind::E,
        TableKind::AJ => {
            let j = a.j.ok_or_else(|| config("--kind a-j needs --j"))?;
            if j >= d {
                return Err(config(format!("j = {j} must be below d = {d}")));
            }
            Kind::Aj(j)
        }
    };
    if a.j.is_some() && !matches!(kind, Kind::Aj(_)) {
        return Err(config("--j only applies to --kind a-j"));
    }
    let character = sweep::table(engine, kind, d, &win)?;
    let shown = *character.window().unwrap_or(&win);
    let name = match kind {
        Kind::Aj(_) => "a_j".to_string(),
        k => k.name(),
    };
    let doc = TableDoc::new(&name, d, kind.j(), &shown, &character);
    write_table(&doc, &a.output, stdout)
}

fn cmd_verify(
    engine: &Engine,
    guard: Guard,
    a: &VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let n = a.n.unwrap_or(2);
    let d = a.d.unwrap_or(2);
    guard.n(n)?;
    guard.d(d)?;
    let ranks: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => vec![2, 3, 4],
    };
    let reports: Vec<Report> = match a.suite {
        Suite::D2Table => {
            if a.d.is_some_and(|d| d != 2) {
                return Err(config("d2-table is specific to d = 2"));
            }
            vec![verify::d2_table(engine, &window(n, a.l1max, a.lnmin)?)?]
        }
        Suite::Hooks => ranks
            .iter()
            .map(|&n| verify::hook_plethysm(engine, n, d, a.sizemax))
            .collect::<Result<_, _>>()?,
        Suite::Stabilization => vec![verify::stabilization(engine, n, d, a.musize)?],
        Suite::PrimitiveSum => vec![verify::primitive_sum(engine, n, d, a.musize)?],
        Suite::PrimitiveOrdering => vec![verify::primitive_ordering(engine, n, d, a.gmax)?],
        Suite::ExtTwoRoute => vec![verify::ext_two_route(d, a.musize, &window(n, a.l1max, a.lnmin)?)?],
        Suite::D0TwoRoute => vec![verify::d0_two_route(engine, d, &window(n, a.l1max, a.lnmin)?)?],
        Suite::DetExclusion => vec![verify::det_exclusion(engine, n, d, a.musize)?],
        Suite::GeneratingFunction => vec![verify::generating_function(engine, d, a.tmax)?],
        Suite::BottRoundtrip => ranks
            .iter()
            .map(|&n| verify::bott_roundtrip(n, a.range))
            .collect::<Result<_, _>>()?,
        Suite::Witness => vec![verify::witness(engine, n, d)?],
    };
    let mut code = EXIT_OK;
    for r in &reports {
        writeln!(stdout, "{r}")?;
        match r.status {
            Status::Pass => {}
            Status::Fail(_) => code = EXIT_MISMATCH,
            Status::Inconclusive(_) => {
                if code == EXIT_OK {
                    code = EXIT_INCONCLUSIVE;
                }
            }
        }
    }
    if code == EXIT_MISMATCH {
        writeln!(stderr, "verification found a mathematical mismatch")?;
    } else if code == EXIT_INCONCLUSIVE {
        writeln!(stderr, "verification inconclusive at the tested horizon")?;
    }
    Ok(code)
}

fn cmd_bott(guard: Guard, a: &BottArgs, stdout: &mut dyn Write) -> CmdResult {
    guard.n(a.n)?;
    let line = match bott(&a.mu.0, a.r, a.n)? {
        BottOutcome::Vanishing => serde_json::json!({ "vanishing": true }),
        BottOutcome::Cohomology { degree, weight } => {
            serde_json::json!({ "l": degree, "lambda": weight.parts() })
        }
    };
    writeln!(stdout, "{line}")?;
    Ok(EXIT_OK)
}

fn cmd_nu(engine: &Engine, guard: Guard, a: &NuArgs, stdout: &mut dyn Write) -> CmdResult {
    guard.n(a.n)?;
    guard.d(a.d)?;
    if a.mu.0.len() + 1 != a.n {
        return Err(Error::LengthMismatch {
            expected: a.n - 1,
            found: a.mu.0.len(),
        }
        .into());
    }
    writeln!(stdout, "{}", engine.nu_stable(&a.mu.0, a.d)?)?;
    Ok(EXIT_OK)
}

fn cmd_m(engine: &Engine, guard: Guard, a: &MArgs, stdout: &mut dyn Write) -> CmdResult {
    guard.n(a.n)?;
    guard.d(a.d)?;
    if a.lambda.0.len() != a.n {
        return Err(Error::LengthMismatch {
            expected: a.n,
            found: a.lambda.0.len(),
        }
        .into());
    }
    let lambda = DominantWeight::new(a.lambda.0.clone())?;
    writeln!(stdout, "{}", engine.m_lambda(&lambda, a.d)?)?;
    Ok(EXIT_OK)
}

fn cmd_ext(guard: Guard, a: &ExtArgs, stdout: &mut dyn Write) -> CmdResult {
    let win = guard.window(&a.window)?;
    if a.mu.0.len() != a.window.n {
        return Err(Error::LengthMismatch {
            expected: a.window.n,
            found: a.mu.0.len(),
        }
        .into());
    }
    let mu = Partition::new(a.mu.0.clone())?;
    let table = match a.route {
        ExtRoute::Bott => ExtTable::via_bott(&mu, a.window.d, &win)?,
        ExtRoute::Closed => ExtTable::closed_form(&mu, a.window.d, &win)?,
    };
    let doc = ExtDoc::new(&table)?;
    emit(&a.output, stdout, |w| {
        match a.output.format {
            Format::Json => doc.write_json(&mut BoxedWrite(w))?,
            Format::Csv => doc.write_csv(&mut BoxedWrite(w))?,
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_escapes() {
        assert_eq!(parse_int("m3"), Ok(-3));
        assert_eq!(parse_int("-3"), Ok(-3));
        assert_eq!(parse_int("7"), Ok(7));
        assert!(parse_int("x").is_err());
        assert_eq!(parse_list("2,m1,-4"), Ok(IntList(vec![2, -1, -4])));
        assert_eq!(parse_list(""), Ok(IntList(vec![])));
    }

    #[test]
    fn targets() {
        assert_eq!(parse_target("E", 3).unwrap(), Kind::E);
        assert_eq!(parse_target("D2", 3).unwrap(), Kind::Aj(2));
        assert!(parse_target("D3", 3).is_err());
        assert!(parse_target("X", 3).is_err());
    }

    #[test]
    fn exit_codes_from_errors() {
        assert_eq!(Failure::from(Error::Inconsistency("x".into())).code, EXIT_MISMATCH);
        let cap = Error::ResourceCap {
            what: "x",
            needed: 2,
            cap: 1,
        };
        assert_eq!(Failure::from(cap).code, EXIT_RESOURCE);
        assert_eq!(Failure::from(Error::InvalidParameter("x".into())).code, EXIT_CONFIG);
    }
}
