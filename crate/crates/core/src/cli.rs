//! The `adjlabel` command line. Exit codes: 0 on success, 1 when a checked
//! property fails, 2 on bad input or an exhausted budget.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::contiguity::{low_contiguity_ordering, PipelineOptions};
use crate::crossing::{build_low_crossing_path, BuildOptions, PairSampling, PathBound};
use crate::error::{Error, Result};
use crate::generators::{generate, Family, FamilyKind, GeneratorSpec};
use crate::graph::degeneracy_ordering;
use crate::labeling::{
    choose_scheme, encode_degeneracy, encode_interval_with, label_stats, read_label_file,
    write_label_file, Scheme,
};
use crate::set_system::{
    neighborhood_system, primal_shatter_with, sampled_shatter_lower_bound, vc_dimension_with,
    SetSystem, DEFAULT_SHATTER_BUDGET,
};
use crate::verify::{Suite, Verifier, VerifyConfig};
use crate::Graph;

#[derive(Debug, Parser)]
#[command(
    name = "adjlabel",
    version,
    about = "Adjacency labels from low-crossing spanning paths"
)]
pub struct Cli {
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node budget for exact shatter function searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SHATTER_BUDGET)]
    pub budget: u64,
    /// Largest n for which exact VC dimension and shatter bounds are evaluated.
    #[arg(long = "limit-n", global = true, default_value_t = 64)]
    pub limit_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph in edge-list format.
    Gen(GenArgs),
    /// Label every vertex of a graph.
    Encode(EncodeArgs),
    /// Answer adjacency queries from a label file alone.
    Decode(DecodeArgs),
    /// Report crossing, contiguity and shatter quantities as JSON.
    Analyze(AnalyzeArgs),
    /// Tabulate pipeline quantities over generated families as CSV.
    Bench(BenchArgs),
    /// Run the property suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: String,
    /// Vertex count (approximate for grid and subdivided).
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    /// Edge probability for the random families.
    #[arg(long)]
    pub p: Option<f64>,
    /// Back-degree for random_d_degenerate.
    #[arg(long)]
    pub d: Option<usize>,
    /// Side sizes for the bipartite families.
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Subdivided family: new vertices per edge.
    #[arg(long)]
    pub r: Option<usize>,
    /// Subdivided family: base family, drawn with `--n` vertices.
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeChoice {
    Interval,
    Degeneracy,
    Auto,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = SchemeChoice::Auto)]
    pub scheme: SchemeChoice,
    /// `auto` takes the degeneracy scheme up to this degeneracy.
    #[arg(long, default_value_t = 4)]
    pub threshold: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub labels: PathBuf,
    /// Queries as `u,v;u,v;...`.
    #[arg(long)]
    pub pairs: String,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Graph file; the neighbourhood system is analysed.
    #[arg(long = "in", conflicts_with = "sets", required_unless_present = "sets")]
    pub input: Option<PathBuf>,
    /// Incidence-matrix file of a set system.
    #[arg(long)]
    pub sets: Option<PathBuf>,
    #[arg(long)]
    pub crossing: bool,
    #[arg(long)]
    pub contiguity: bool,
    #[arg(long)]
    pub vcdim: bool,
    /// Shatter function value at `m`.
    #[arg(long)]
    pub nu: Option<usize>,
    /// Fall back to this many random `m`-subsets (a lower bound) when the
    /// exact shatter value is over budget.
    #[arg(long = "nu-trials")]
    pub nu_trials: Option<usize>,
    /// Evaluate only this many random candidate pairs per tree step.
    #[arg(long = "sample-pairs")]
    pub sample_pairs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated family names; all families by default.
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    #[arg(long, value_delimiter = ',', default_values_t = [16usize, 32, 64])]
    pub sizes: Vec<usize>,
    /// Seeds per (family, size), counted up from `--seed`.
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Fill `elapsed_ms`; without it the column is 0 so runs compare byte for byte.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
}

/// What a successful run concluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A checked property failed (exit code 1).
    Violation,
}

impl Status {
    fn from_ok(ok: bool) -> Status {
        if ok {
            Status::Ok
        } else {
            Status::Violation
        }
    }
}

pub fn exit_code(r: &Result<Status>) -> i32 {
    match r {
        Ok(Status::Ok) => 0,
        Ok(Status::Violation) => 1,
        Err(_) => 2,
    }
}

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let r = run(&cli, out, err);
    if let Err(e) = &r {
        let _ = writeln!(err, "error: {e}");
    }
    exit_code(&r)
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Gen(a) => gen(cli, a, out),
        Command::Encode(a) => encode(a, out, err),
        Command::Decode(a) => decode(a, out),
        Command::Analyze(a) => analyze(cli, a, out),
        Command::Bench(a) => bench(cli, a, out),
        Command::Verify(a) => verify(cli, a, out),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::Input(format!("cannot write output: {e}"))),
    }
}

fn say(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Input(format!("cannot write output: {e}")))
}

/// Builds a family from its name and the optional parameter overrides.
pub fn family_from_args(a: &GenArgs) -> Result<Family> {
    let kind: FamilyKind = a.family.parse()?;
    let mut f = Family::sized(kind, a.n);
    match &mut f {
        Family::CompleteBipartite { a: x, b: y } => {
            *x = a.a.unwrap_or(*x);
            *y = a.b.unwrap_or(*y);
        }
        Family::Grid { rows, cols } => {
            *rows = a.rows.unwrap_or(*rows);
            *cols = a.cols.unwrap_or(*cols);
        }
        Family::RandomGnp { p, .. } => *p = a.p.unwrap_or(*p),
        Family::RandomDDegenerate { d, .. } => *d = a.d.unwrap_or(*d),
        Family::RandomBipartite { a: x, b: y, p } => {
            *x = a.a.unwrap_or(*x);
            *y = a.b.unwrap_or(*y);
            *p = a.p.unwrap_or(*p);
        }
        Family::Subdivided { base, r } => {
            if let Some(name) = &a.base {
                let inner = GenArgs {
                    family: name.clone(),
                    base: None,
                    out: None,
                    ..*a
                };
                if inner.family == "subdivided" {
                    return Err(Error::Input(
                        "the base of a subdivided family cannot be subdivided".into(),
                    ));
                }
                **base = family_from_args(&inner)?;
            }
            *r = a.r.unwrap_or(*r);
        }
        _ => {}
    }
    Ok(f)
}

fn gen(cli: &Cli, a: &GenArgs, out: &mut dyn Write) -> Result<Status> {
    let g = generate(&GeneratorSpec::new(family_from_args(a)?, cli.seed))?;
    emit(a.out.as_deref(), &g.to_edge_list_string(), out)?;
    Ok(Status::Ok)
}

fn encode(a: &EncodeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    let g = Graph::parse(&read(&a.input)?)?;
    let ls = match a.scheme {
        SchemeChoice::Interval => encode_interval_with(&g, &PipelineOptions::default())?.0,
        SchemeChoice::Degeneracy => encode_degeneracy(&g),
        SchemeChoice::Auto => choose_scheme(&g, a.threshold)?,
    };
    let stats = label_stats(&ls);
    emit(a.out.as_deref(), &write_label_file(&ls), out)?;
    let mut line = format!(
        "scheme={} n={} max_bits={} mean_bits={:.2} bound_bits={}",
        ls.scheme.name(),
        ls.n,
        stats.max_bits,
        stats.mean_bits,
        stats.bound_bits
    );
    match ls.scheme {
        Scheme::Interval => {
            line += &format!(" k={}", ls.parameter);
            if let Some(kp) = ls.path_crossing {
                line += &format!(" k_P={kp}");
            }
        }
        Scheme::Degeneracy => line += &format!(" d={}", ls.parameter),
    }
    // labels own stdout when no file is given
    if a.out.is_some() {
        say(out, line)?;
    } else {
        say(err, line)?;
    }
    Ok(Status::from_ok(stats.bound_check))
}

/// Parses `u,v;u,v;...`.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let bad = || Error::Input(format!("bad pair {p:?}; expected `u,v`"));
            let (u, v) = p.split_once(',').ok_or_else(bad)?;
            Ok((
                u.trim().parse().map_err(|_| bad())?,
                v.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

fn decode(a: &DecodeArgs, out: &mut dyn Write) -> Result<Status> {
    let file = read_label_file(&read(&a.labels)?)?;
    let pairs = parse_pairs(&a.pairs)?;
    let answers = pairs
        .iter()
        .map(|&(u, v)| file.adjacent(u, v).map(|adj| format!("{u} {v} {adj}")))
        .collect::<Result<Vec<_>>>()?;
    for line in answers {
        say(out, line)?;
    }
    Ok(Status::Ok)
}

/// Certificate record of one low-crossing path build.
#[derive(Debug, Serialize)]
pub struct CrossingRecord {
    pub n: usize,
    pub num_sets: usize,
    pub tree_crossing: usize,
    pub path_crossing: usize,
    pub log_weight_bound: f64,
    pub elapsed_ms: u128,
    pub certificate_holds: bool,
    pub factor_two_holds: bool,
    pub sampled: bool,
    /// Present when the exact VC dimension and shatter envelope fit the budget.
    pub bound: Option<PathBound>,
}

fn analyze(cli: &Cli, a: &AnalyzeArgs, out: &mut dyn Write) -> Result<Status> {
    let (graph, s) = match (&a.input, &a.sets) {
        (Some(p), _) => {
            let g = Graph::parse(&read(p)?)?;
            let s = neighborhood_system(&g);
            (Some(g), s)
        }
        (None, Some(p)) => (None, SetSystem::parse_incidence(&read(p)?)?),
        (None, None) => return Err(Error::Input("pass --in or --sets".into())),
    };
    let build = BuildOptions {
        sampling: a.sample_pairs.map(|k| PairSampling {
            pairs_per_step: k,
            seed: cli.seed,
        }),
    };
    let mut ok = true;
    let mut report = json!({ "n": s.ground_size(), "num_sets": s.len() });

    if a.vcdim {
        report["vc_dimension"] = json!(vc_dimension_with(
            &s,
            cli.limit_n.max(crate::set_system::DEFAULT_VC_GROUND_LIMIT)
        )?);
    }
    if let Some(m) = a.nu {
        report["nu"] = match (primal_shatter_with(&s, m, cli.budget), a.nu_trials) {
            (Ok(v), _) => json!({ "m": m, "value": v, "exact": true }),
            (Err(Error::Budget { .. }), Some(trials)) => {
                let v = sampled_shatter_lower_bound(&s, m, trials, cli.seed)?;
                json!({ "m": m, "value": v, "exact": false, "trials": trials })
            }
            (Err(Error::Budget { budget, .. }), None) => {
                return Err(Error::Input(format!(
                    "exact shatter value at m = {m} needs more than {budget} search nodes; \
                     raise --budget or pass --nu-trials for a sampled lower bound"
                )))
            }
            (Err(e), _) => return Err(e),
        };
    }
    if a.crossing && !s.is_empty() && s.ground_size() > 0 {
        let start = Instant::now();
        let p = build_low_crossing_path(&s, &build)?;
        let elapsed_ms = start.elapsed().as_millis();
        let bound = if p.tree.sampled || s.ground_size() > cli.limit_n {
            None
        } else {
            match PathBound::for_system(&s, p.tree_crossing, p.path_crossing, cli.budget) {
                Ok(b) => Some(b),
                Err(Error::Budget { .. } | Error::TooLarge { .. }) => None,
                Err(e) => return Err(e),
            }
        };
        let rec = CrossingRecord {
            n: s.ground_size(),
            num_sets: s.len(),
            tree_crossing: p.tree_crossing,
            path_crossing: p.path_crossing,
            log_weight_bound: p.tree.final_log_weight_bound,
            elapsed_ms,
            certificate_holds: p.tree.holds(),
            factor_two_holds: p.factor_two_holds(),
            sampled: p.tree.sampled,
            bound,
        };
        ok &= rec.certificate_holds && rec.factor_two_holds;
        ok &= rec
            .bound
            .as_ref()
            .is_none_or(|b| b.tree_holds && b.path_holds);
        report["crossing"] = serde_json::to_value(&rec).expect("serialisable");
    }
    if a.contiguity {
        let g = graph
            .as_ref()
            .ok_or_else(|| Error::Input("--contiguity needs a graph (--in)".into()))?;
        report["contiguity"] = if g.n() == 0 {
            json!({ "k": 0, "ordering": "" })
        } else {
            let opts = PipelineOptions {
                build,
                bound_budget: Some(cli.budget),
                bound_limit_n: Some(cli.limit_n),
            };
            let p = low_contiguity_ordering(g, &opts)?;
            ok &= p.report.path_bound_holds && p.report.contiguity_bound_holds != Some(false);
            let order: Vec<String> = p
                .contiguity
                .ordering
                .order()
                .iter()
                .map(|v| v.to_string())
                .collect();
            let mut v: Value = serde_json::to_value(&p.report).expect("serialisable");
            v["ordering"] = json!(order.join(" "));
            v
        };
    }
    say(
        out,
        serde_json::to_string_pretty(&report).expect("serialisable"),
    )?;
    Ok(Status::from_ok(ok))
}

/// One line of the bench table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub family: FamilyKind,
    pub n: usize,
    pub seed: u64,
    pub d_degeneracy: usize,
    pub k_t: usize,
    pub k_p: usize,
    pub k_ctg: usize,
    pub interval_bits: usize,
    pub degeneracy_bits: usize,
    pub elapsed_ms: u128,
    /// Interval labels within their format bound.
    pub within_bound: bool,
}

pub const BENCH_HEADER: &str =
    "family,n,seed,d_degeneracy,k_T,k_P,k_ctg,interval_bits,degeneracy_bits,elapsed_ms";

impl BenchRow {
    pub fn compute(family: FamilyKind, size: usize, seed: u64, timing: bool) -> Result<BenchRow> {
        let start = Instant::now();
        let g = generate(&GeneratorSpec::new(Family::sized(family, size), seed))?;
        if g.n() == 0 {
            return Err(Error::Input(format!(
                "{family} with size {size} has no vertices"
            )));
        }
        let (interval, pipeline) = encode_interval_with(&g, &PipelineOptions::default())?;
        let degeneracy = encode_degeneracy(&g);
        let istats = label_stats(&interval);
        Ok(BenchRow {
            family,
            n: g.n(),
            seed,
            d_degeneracy: degeneracy_ordering(&g).d,
            k_t: pipeline.path.tree_crossing,
            k_p: pipeline.path.path_crossing,
            k_ctg: pipeline.contiguity.k,
            interval_bits: istats.max_bits,
            degeneracy_bits: label_stats(&degeneracy).max_bits,
            elapsed_ms: if timing {
                start.elapsed().as_millis()
            } else {
                0
            },
            within_bound: istats.bound_check,
        })
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.seed,
            self.d_degeneracy,
            self.k_t,
            self.k_p,
            self.k_ctg,
            self.interval_bits,
            self.degeneracy_bits,
            self.elapsed_ms
        )
    }
}

/// Rows for every (family, size, seed) in that order. Graphs are processed
/// on all cores; each row depends only on its own inputs.
pub fn bench_rows(
    families: &[FamilyKind],
    sizes: &[usize],
    seeds: &[u64],
    timing: bool,
) -> Result<Vec<BenchRow>> {
    let jobs: Vec<(FamilyKind, usize, u64)> = families
        .iter()
        .flat_map(|&f| {
            sizes
                .iter()
                .flat_map(move |&n| seeds.iter().map(move |&s| (f, n, s)))
        })
        .collect();
    let results: Mutex<Vec<Option<Result<BenchRow>>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(f, n, s)) = jobs.get(i) else { break };
                let row = BenchRow::compute(f, n, s, timing);
                results.lock().unwrap()[i] = Some(row);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every job ran"))
        .collect()
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from(BENCH_HEADER);
    s.push('\n');
    for r in rows {
        s += &r.to_csv();
        s.push('\n');
    }
    s
}

fn bench(cli: &Cli, a: &BenchArgs, out: &mut dyn Write) -> Result<Status> {
    let families = if a.families.is_empty() {
        FamilyKind::ALL.to_vec()
    } else {
        a.families
            .iter()
            .map(|f| f.parse())
            .collect::<Result<Vec<_>>>()?
    };
    if let Some(&bad) = a.sizes.iter().find(|&&n| n == 0) {
        return Err(Error::Input(format!("sizes must be positive, got {bad}")));
    }
    let seeds: Vec<u64> = (0..a.seeds).map(|i| cli.seed.wrapping_add(i)).collect();
    let rows = bench_rows(&families, &a.sizes, &seeds, a.timing)?;
    emit(a.out.as_deref(), &bench_csv(&rows), out)?;
    Ok(Status::from_ok(rows.iter().all(|r| r.within_bound)))
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<Status> {
    let suite: Suite = a.suite.parse()?;
    let v = Verifier::new(VerifyConfig {
        seed: cli.seed,
        budget: cli.budget,
        bound_limit_n: cli.limit_n,
    });
    let mut ok = true;
    for &check in suite.checks() {
        let o = v.run(check)?;
        say(out, o.summary_line())?;
        for note in &o.notes {
            say(out, format!("    {note}"))?;
        }
        if let Some(f) = o.witness() {
            say(
                out,
                format!("    smallest witness: {}", f.witness.trim_end()),
            )?;
        }
        ok &= o.passed();
    }
    Ok(Status::from_ok(ok))
}
