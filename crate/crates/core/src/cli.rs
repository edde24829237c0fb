//! Command-line front end. The `genassoc` binary is a thin wrapper around
//! [`run`], which writes to caller-supplied streams so it can be tested
//! in-process.
//!
//! Exit codes: 0 on success, 1 when a batch had bad lines, 2 on usage or
//! parse errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotic::{asymptotic_p_all, QuadratureSpec};
use crate::error::{Error, Result};
use crate::exact::{exact_p_all, EnumerationOptions, ExactP, LogFactorialTable};
use crate::genetics::GeneticModelSpec;
use crate::simulation::{estimate_power_with_threads, PowerEstimate, StudyDesign};
use crate::statistics::{table_statistics, StatisticKind};
use crate::tables::{enumerate_tables, max_summands, parse_table_lines, ContingencyTable, Margins};
use crate::exact::hypergeometric_prob;

/// Six significant digits with trailing zeros removed; scientific notation
/// below `1e-4`.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    if v.abs() < 1e-4 {
        return format!("{v:.5e}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[derive(Debug, Parser)]
#[command(name = "genassoc", version, about = "Exact and asymptotic tests for genotype case-control tables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test one table given as x0,x1,x2,y0,y1,y2 (cases, then controls).
    Test {
        table: String,
        #[command(flatten)]
        flags: TestFlags,
    },
    /// Test every table in a CSV file (`-` for stdin) and print TSV rows.
    Batch {
        input: PathBuf,
        #[command(flatten)]
        flags: TestFlags,
        #[arg(long, env = "GENASSOC_THREADS")]
        parallel: Option<usize>,
    },
    /// Simulated test size over a grid of null designs.
    Size {
        config: PathBuf,
        #[command(flatten)]
        flags: StudyFlags,
    },
    /// Simulated power over a grid of designs and genetic models.
    Power {
        config: PathBuf,
        #[command(flatten)]
        flags: StudyFlags,
    },
    /// Largest number of tables sharing margins for row totals n1, n2.
    Maxcount { n1: u32, n2: u32 },
    /// List every table with the given column margins and its null probability.
    Enumerate {
        /// Column margins m0,m1,m2.
        margins: String,
        #[arg(long)]
        n1: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Asymptotic,
    Exact,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct TestFlags {
    /// Comma-separated statistics, or `all`.
    #[arg(long, default_value = "all")]
    pub stats: String,
    #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
    pub method: MethodChoice,
    /// Stop exact enumeration once p is known to exceed this value.
    #[arg(long)]
    pub abort_threshold: Option<f64>,
    /// Always sum the full enumeration.
    #[arg(long)]
    pub no_abort: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Jsonl,
}

#[derive(Debug, Clone, Args)]
pub struct StudyFlags {
    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
    pub format: OutputFormat,
    /// Add the estimate times 5/alpha as an extra column.
    #[arg(long)]
    pub scaled: bool,
    #[arg(long, env = "GENASSOC_THREADS")]
    pub parallel: Option<usize>,
}

fn parse_stats(list: &str) -> Result<Vec<StatisticKind>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(StatisticKind::ALL.to_vec());
    }
    let mut kinds: Vec<StatisticKind> = list
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_>>()?;
    kinds.sort();
    kinds.dedup();
    Ok(kinds)
}

impl TestFlags {
    fn options(&self) -> Result<EnumerationOptions> {
        let opts = match (self.no_abort, self.abort_threshold) {
            (false, Some(t)) => EnumerationOptions::with_abort(t),
            _ => EnumerationOptions::full(),
        };
        opts.validate()?;
        Ok(opts)
    }
}

struct TableReport {
    values: [f64; 7],
    asymptotic: Option<[Result<f64>; 7]>,
    exact: Option<[ExactP; 7]>,
}

fn report(z: &ContingencyTable, flags: &TestFlags, opts: &EnumerationOptions) -> Result<TableReport> {
    let values = table_statistics(z).set();
    let asymptotic = (flags.method != MethodChoice::Exact)
        .then(|| asymptotic_p_all(z, &QuadratureSpec::default()));
    let exact = if flags.method != MethodChoice::Asymptotic {
        let lf = LogFactorialTable::new(z.total());
        Some(exact_p_all(z, opts, &lf)?.p)
    } else {
        None
    };
    Ok(TableReport { values, asymptotic, exact })
}

fn asymptotic_cell(p: &Result<f64>) -> String {
    match p {
        Ok(p) => format_number(*p),
        Err(Error::DegenerateFreqs { .. }) => "NA(degenerate)".into(),
        Err(_) => "NA".into(),
    }
}

fn exact_cell(p: &ExactP) -> String {
    match p {
        ExactP::Value(p) => format_number(*p),
        ExactP::Aborted { threshold } => format!("ABORTED(>{})", format_number(*threshold)),
    }
}

fn cmd_test(table: &str, flags: &TestFlags, out: &mut dyn Write) -> Result<()> {
    let z: ContingencyTable = table.parse()?;
    let kinds = parse_stats(&flags.stats)?;
    let r = report(&z, flags, &flags.options()?)?;
    let io = |e: io::Error| Error::Config(e.to_string());
    writeln!(out, "# table {z}").map_err(io)?;
    let mut header = vec!["statistic", "value"];
    if r.asymptotic.is_some() {
        header.push("p_asymptotic");
    }
    if r.exact.is_some() {
        header.push("p_exact");
    }
    writeln!(out, "{}", header.join("\t")).map_err(io)?;
    for kind in kinds {
        let k = kind.index();
        let mut row = vec![kind.name().to_string(), format_number(r.values[k])];
        if let Some(a) = &r.asymptotic {
            row.push(asymptotic_cell(&a[k]));
        }
        if let Some(e) = &r.exact {
            row.push(exact_cell(&e[k]));
        }
        writeln!(out, "{}", row.join("\t")).map_err(io)?;
    }
    Ok(())
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Config(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("cannot start thread pool: {e}")))
}

fn cmd_batch(
    input: &PathBuf,
    flags: &TestFlags,
    parallel: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool> {
    let kinds = parse_stats(&flags.stats)?;
    let opts = flags.options()?;
    let lines = parse_table_lines(&read_input(input)?);
    let pool = thread_pool(parallel)?;
    let reports: Vec<(usize, Result<(ContingencyTable, TableReport)>)> = pool.install(|| {
        lines
            .into_par_iter()
            .map(|(line, parsed)| {
                (line, parsed.and_then(|z| Ok((z, report(&z, flags, &opts)?))))
            })
            .collect()
    });

    let io = |e: io::Error| Error::Config(e.to_string());
    let mut header = vec!["line".to_string(), "table".to_string()];
    for kind in &kinds {
        header.push(kind.name().to_string());
        if flags.method != MethodChoice::Exact {
            header.push(format!("{}_p_asymptotic", kind.name()));
        }
        if flags.method != MethodChoice::Asymptotic {
            header.push(format!("{}_p_exact", kind.name()));
        }
    }
    writeln!(out, "{}", header.join("\t")).map_err(io)?;
    let mut clean = true;
    for (line, result) in reports {
        match result {
            Ok((z, r)) => {
                let mut row = vec![line.to_string(), z.to_string()];
                for kind in &kinds {
                    let k = kind.index();
                    row.push(format_number(r.values[k]));
                    if let Some(a) = &r.asymptotic {
                        row.push(asymptotic_cell(&a[k]));
                    }
                    if let Some(e) = &r.exact {
                        row.push(exact_cell(&e[k]));
                    }
                }
                writeln!(out, "{}", row.join("\t")).map_err(io)?;
            }
            Err(e) => {
                clean = false;
                writeln!(err, "line {line}: {e}").map_err(io)?;
            }
        }
    }
    Ok(clean)
}

/// A size or power study read from a `key=value` file.
///
/// ```text
/// sizes = 500:500, 1000:1000
/// deltas = 0, 0.5, 1
/// lambda2 = 1.5, 2
/// alphas = 0.05, 5e-5
/// replicates = 100000
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub sizes: Vec<(u32, u32)>,
    pub deltas: Vec<f64>,
    pub lambda2: Vec<f64>,
    pub k: f64,
    pub maf: f64,
    pub alphas: Vec<f64>,
    pub replicates: u64,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub abort_threshold: Option<f64>,
}

impl Default for StudyConfig {
    fn default() -> Self {
        Self {
            sizes: Vec::new(),
            deltas: vec![0.5],
            lambda2: vec![1.0],
            k: 0.1,
            maf: 0.1,
            alphas: vec![0.05],
            replicates: 1_000_000,
            seed: 1,
            output: None,
            abort_threshold: None,
        }
    }
}

fn config_value<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    raw.trim()
        .parse()
        .map_err(|e| Error::Config(format!("{key}: cannot parse {raw:?}: {e}")))
}

fn config_list<T: std::str::FromStr>(key: &str, raw: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    let items: Vec<T> = raw
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| config_value(key, s))
        .collect::<Result<_>>()?;
    if items.is_empty() {
        return Err(Error::Config(format!("{key}: empty list")));
    }
    Ok(items)
}

impl StudyConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value", i + 1)))?;
            let key = key.trim();
            match key {
                "sizes" => {
                    c.sizes = value
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|pair| {
                            let (a, b) = pair.split_once(':').ok_or_else(|| {
                                Error::Config(format!("sizes: expected n1:n2, got {pair:?}"))
                            })?;
                            Ok((config_value(key, a)?, config_value(key, b)?))
                        })
                        .collect::<Result<_>>()?
                }
                "deltas" | "delta" => c.deltas = config_list(key, value)?,
                "lambda2" => c.lambda2 = config_list(key, value)?,
                "k" => c.k = config_value(key, value)?,
                "maf" => c.maf = config_value(key, value)?,
                "alphas" | "alpha" => c.alphas = config_list(key, value)?,
                "replicates" | "b" => c.replicates = config_value(key, value)?,
                "seed" => c.seed = config_value(key, value)?,
                "output" => c.output = Some(PathBuf::from(value.trim())),
                "abort_threshold" => {
                    c.abort_threshold = match value.trim() {
                        "none" | "NONE" => None,
                        v => Some(config_value(key, v)?),
                    }
                }
                other => return Err(Error::Config(format!("line {}: unknown key {other:?}", i + 1))),
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::Config("sizes: at least one n1:n2 pair is required".into()));
        }
        // Every design must be valid apart from model feasibility, which is
        // checked per cell.
        for &(n1, n2) in &self.sizes {
            for &delta in &self.deltas {
                for &lambda2 in &self.lambda2 {
                    let spec = GeneticModelSpec::new(self.k, self.maf, delta, lambda2)?;
                    StudyDesign::new(n1, n2, spec, self.replicates, &self.alphas, self.seed)?
                        .with_abort_threshold(self.abort_threshold)?;
                }
            }
        }
        Ok(())
    }

    /// The same grid with the model restricted to the null.
    pub fn null_only(&self) -> Self {
        Self {
            deltas: vec![0.5],
            lambda2: vec![1.0],
            ..self.clone()
        }
    }
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n1: u32,
    n2: u32,
    k: f64,
    maf: f64,
    delta: f64,
    lambda2: f64,
    kind: &'a str,
    method: &'a str,
    alpha: f64,
    hits: u64,
    b: u64,
    power: f64,
    ci_half: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    scaled: Option<f64>,
}

fn write_estimate(
    design: &StudyDesign,
    est: &PowerEstimate,
    flags: &StudyFlags,
    out: &mut dyn Write,
) -> io::Result<()> {
    let scaled = flags.scaled || design.spec.is_null();
    let s = &design.spec;
    match flags.format {
        OutputFormat::Tsv => {
            writeln!(
                out,
                "# n1={} n2={} k={} maf={} delta={} lambda2={} b={} seed={} abort_threshold={}",
                design.n1,
                design.n2,
                format_number(s.k),
                format_number(s.maf),
                format_number(s.delta),
                format_number(s.lambda2),
                design.replicates,
                design.seed,
                format_number(design.threshold()),
            )?;
            let mut header = "kind\tmethod\talpha\thits\tb\tpower\tci_half".to_string();
            if scaled {
                header.push_str("\tscaled");
            }
            writeln!(out, "{header}")?;
            for row in est.rows() {
                write!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    row.kind.name(),
                    row.method.code(),
                    format_number(row.alpha),
                    row.hits,
                    row.replicates,
                    format_number(row.power),
                    format_number(row.ci_half),
                )?;
                if scaled {
                    write!(out, "\t{}", format_number(row.scaled()))?;
                }
                writeln!(out)?;
            }
        }
        OutputFormat::Jsonl => {
            for row in est.rows() {
                let json = JsonRow {
                    n1: design.n1,
                    n2: design.n2,
                    k: s.k,
                    maf: s.maf,
                    delta: s.delta,
                    lambda2: s.lambda2,
                    kind: row.kind.name(),
                    method: row.method.code(),
                    alpha: row.alpha,
                    hits: row.hits,
                    b: row.replicates,
                    power: row.power,
                    ci_half: row.ci_half,
                    scaled: scaled.then(|| row.scaled()),
                };
                let line = serde_json::to_string(&json).map_err(io::Error::other)?;
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn cmd_study(
    config: &StudyConfig,
    flags: &StudyFlags,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let io = |e: io::Error| Error::Config(e.to_string());
    let mut file;
    let sink: &mut dyn Write = match &config.output {
        Some(path) => {
            file = fs::File::create(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            &mut file
        }
        None => out,
    };
    for &(n1, n2) in &config.sizes {
        for &delta in &config.deltas {
            for &lambda2 in &config.lambda2 {
                let spec = GeneticModelSpec::new(config.k, config.maf, delta, lambda2)?;
                let design = StudyDesign::new(n1, n2, spec, config.replicates, &config.alphas, config.seed)?
                    .with_abort_threshold(config.abort_threshold)?;
                match estimate_power_with_threads(&design, flags.parallel.unwrap_or(0)) {
                    Ok(est) => write_estimate(&design, &est, flags, sink).map_err(io)?,
                    Err(e @ Error::PenetranceOverflow { .. }) => {
                        writeln!(
                            err,
                            "skipped n1={n1} n2={n2} delta={} lambda2={}: {e}",
                            format_number(delta),
                            format_number(lambda2)
                        )
                        .map_err(io)?;
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(margins: &str, n1: u32, out: &mut dyn Write) -> Result<()> {
    let parts: Vec<u32> = margins
        .split(',')
        .map(|s| {
            s.trim().parse().map_err(|_| Error::Parse {
                input: margins.to_string(),
                reason: "expected three non-negative integers m0,m1,m2".into(),
            })
        })
        .collect::<Result<_>>()?;
    let cols: [u32; 3] = parts.try_into().map_err(|_| Error::Parse {
        input: margins.to_string(),
        reason: "expected three non-negative integers m0,m1,m2".into(),
    })?;
    let m = Margins::new(cols, n1)?;
    let lf = LogFactorialTable::new(m.total());
    let io = |e: io::Error| Error::Config(e.to_string());
    writeln!(out, "table\tprobability").map_err(io)?;
    let (mut count, mut sum) = (0u64, 0.0);
    for z in enumerate_tables(&m, None) {
        let p = hypergeometric_prob(&z, &lf)?;
        count += 1;
        sum += p;
        writeln!(out, "{z}\t{}", format_number(p)).map_err(io)?;
    }
    writeln!(out, "# tables={count} sum={sum:.6}").map_err(io)?;
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Test { table, flags } => cmd_test(table, flags, out).map(|_| true),
        Command::Batch { input, flags, parallel } => cmd_batch(input, flags, *parallel, out, err),
        Command::Size { config, flags } => read_input(config)
            .and_then(|text| StudyConfig::parse(&text))
            .and_then(|c| cmd_study(&c.null_only(), flags, out, err))
            .map(|_| true),
        Command::Power { config, flags } => read_input(config)
            .and_then(|text| StudyConfig::parse(&text))
            .and_then(|c| cmd_study(&c, flags, out, err))
            .map(|_| true),
        Command::Maxcount { n1, n2 } => writeln!(out, "{}", max_summands(*n1, *n2))
            .map(|_| true)
            .map_err(|e| Error::Config(e.to_string())),
        Command::Enumerate { margins, n1 } => cmd_enumerate(margins, *n1, out).map(|_| true),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["genassoc"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn number_format() {
        assert_eq!(format_number(20.0), "20");
        assert_eq!(format_number(1.0 / 3.0), "0.333333");
        assert_eq!(format_number(20f64.sqrt()), "4.47214");
        assert_eq!(format_number(20.92899), "20.929");
        assert_eq!(format_number(7.744216e-6), "7.74422e-6");
        assert_eq!(format_number(12507501.0), "12507501");
        assert_eq!(format_number(-0.25), "-0.25");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(1.0), "1");
    }

    #[test]
    fn test_command() {
        let (code, out, _) = run_capture(&["test", "10,20,30,30,20,10"]);
        assert_eq!(code, 0);
        assert!(out.contains("CATT_HALF\t4.47214"), "{out}");
        assert!(out.contains("PEARSON\t20\t"));
        assert!(out.contains("CLRT\t20.929"));

        let (_, out, _) = run_capture(&["test", "2,0,0,0,1,1", "--stats", "pearson", "--method", "exact"]);
        assert_eq!(out.lines().nth(2).unwrap(), "PEARSON\t4\t0.333333");

        let (code, _, err) = run_capture(&["test", "1,2,x,4,5,6"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
        assert_eq!(run_capture(&["test", "1,2,3", "--stats", "bogus"]).0, 2);
    }

    #[test]
    fn degenerate_is_not_fatal() {
        let (code, out, _) = run_capture(&["test", "3,4,0,2,5,0"]);
        assert_eq!(code, 0);
        assert!(out.contains("NA(degenerate)"));
    }

    #[test]
    fn abort_flags() {
        let (_, out, _) = run_capture(&["test", "5,5,5,5,5,5", "--abort-threshold", "0.05", "--method", "exact"]);
        assert!(out.contains("ABORTED(>0.05)"));
        let (_, out, _) = run_capture(&["test", "5,5,5,5,5,5", "--abort-threshold", "0.05", "--no-abort"]);
        assert!(!out.contains("ABORTED"));
        assert_eq!(run_capture(&["test", "5,5,5,5,5,5", "--abort-threshold", "2"]).0, 2);
    }

    #[test]
    fn maxcount_and_enumerate() {
        assert_eq!(run_capture(&["maxcount", "500", "1000"]).1, "125751\n");
        let (code, out, _) = run_capture(&["enumerate", "2,1,1", "--n1", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(out.ends_with("# tables=4 sum=1.000000\n"));
        assert_eq!(run_capture(&["maxcount", "-3", "4"]).0, 2);
        assert_eq!(run_capture(&["enumerate", "2,1", "--n1", "2"]).0, 2);
    }

    #[test]
    fn config_parsing() {
        let c = StudyConfig::parse(
            "# grid\nsizes = 500:500, 1000:2000\ndeltas = 0,1\nlambda2=1.5\nalphas=0.05,5e-5\nreplicates=10\nseed=3\nabort_threshold=0.1\n",
        )
        .unwrap();
        assert_eq!(c.sizes, vec![(500, 500), (1000, 2000)]);
        assert_eq!(c.deltas, vec![0.0, 1.0]);
        assert_eq!(c.alphas, vec![0.05, 5e-5]);
        assert_eq!(c.replicates, 10);
        assert_eq!(c.abort_threshold, Some(0.1));
        assert_eq!(c.null_only().lambda2, vec![1.0]);
        assert!(StudyConfig::parse("deltas=0.5\n").is_err());
        assert!(StudyConfig::parse("sizes=10:10\ncolour=red\n").is_err());
        assert!(StudyConfig::parse("sizes=10:10\nalphas=2\n").is_err());
        assert!(StudyConfig::parse("sizes=10-10\n").is_err());
        assert!(StudyConfig::parse("sizes=10:10\nalphas=0.05\nabort_threshold=0.01\n").is_err());
    }
}
