//! Property suites over the fixed corpus and seeded families.
//!
//! Each check returns an [`Outcome`] with the number of instances examined,
//! the instances skipped for budget reasons and every failure with a witness.
//! Failures are sorted by instance size so the first one is the smallest.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;

use crate::contiguity::{
    exact_contiguity, low_contiguity_ordering, Pipeline, PipelineOptions, EXACT_CONTIGUITY_LIMIT,
};
use crate::crossing::{optimal_path_crossing, PathBound};
use crate::error::{Error, Result};
use crate::generators::{corpus, generate, survey_set_system, CorpusEntry, Family, GeneratorSpec};
use crate::graph::{
    are_isomorphic_within, automorphism_count_within, nonisomorphic_graphs, subdivide, Graph,
};
use crate::labeling::{
    encode_degeneracy, encode_interval_with_ordering, field_width, gamma_len, read_label_file,
    write_label_file, LabelSet,
};
use crate::rng;
use crate::set_system::{
    dual_shatter_with, greedy_delta_packing, neighborhood_system, primal_shatter_with,
    unit_distance_graph, vc_dimension_with, verify_packing_bound_with, SetSystem,
    DEFAULT_SHATTER_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Offsets every seeded family used by the suites.
    pub seed: u64,
    /// Node budget for exact shatter computations.
    pub budget: u64,
    /// Largest graph for which the exact crossing bound is evaluated.
    pub bound_limit_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            budget: DEFAULT_SHATTER_BUDGET,
            bound_limit_n: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Roundtrip,
    IntervalSize,
    TreeCertificate,
    FactorTwo,
    CrossingBound,
    PathContiguity,
    OracleGap,
    Packing,
    UnitDistance,
    PrimalDual,
    Subdivision,
    DegeneracyLabels,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Roundtrip,
        Check::IntervalSize,
        Check::TreeCertificate,
        Check::FactorTwo,
        Check::CrossingBound,
        Check::PathContiguity,
        Check::OracleGap,
        Check::Packing,
        Check::UnitDistance,
        Check::PrimalDual,
        Check::Subdivision,
        Check::DegeneracyLabels,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Roundtrip => "label-roundtrip",
            Check::IntervalSize => "interval-label-size",
            Check::TreeCertificate => "tree-weight-certificate",
            Check::FactorTwo => "path-factor-two",
            Check::CrossingBound => "path-crossing-bound",
            Check::PathContiguity => "contiguity-from-path",
            Check::OracleGap => "oracle-gap",
            Check::Packing => "packing-bound",
            Check::UnitDistance => "unit-distance-edges",
            Check::PrimalDual => "primal-dual-shatter",
            Check::Subdivision => "subdivision-oracles",
            Check::DegeneracyLabels => "degeneracy-label-size",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Packing,
    Crossing,
    Labels,
    Subdivision,
}

impl Suite {
    pub fn checks(self) -> &'static [Check] {
        match self {
            Suite::All => &Check::ALL,
            Suite::Packing => &[Check::Packing, Check::UnitDistance, Check::PrimalDual],
            Suite::Crossing => &[
                Check::TreeCertificate,
                Check::FactorTwo,
                Check::CrossingBound,
                Check::PathContiguity,
                Check::OracleGap,
            ],
            Suite::Labels => &[
                Check::Roundtrip,
                Check::IntervalSize,
                Check::DegeneracyLabels,
            ],
            Suite::Subdivision => &[Check::Subdivision],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "all" => Ok(Suite::All),
            "packing" => Ok(Suite::Packing),
            "crossing" => Ok(Suite::Crossing),
            "labels" => Ok(Suite::Labels),
            "subdivision" => Ok(Suite::Subdivision),
            _ => Err(Error::input(format!(
                "unknown suite {s:?} (expected all, packing, crossing, labels or subdivision)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Instance size, used to put the smallest witness first.
    pub size: usize,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub check: Check,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Outcome {
    fn new(check: Check) -> Self {
        Outcome {
            check,
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn fail(&mut self, size: usize, witness: impl Into<String>) {
        self.failures.push(Failure {
            size,
            witness: witness.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    /// The smallest failing instance.
    pub fn witness(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// `PASS name: checked N, skipped S, failures F (t s)`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {}: checked {}, skipped {}, failures {} ({:.1}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.checked,
            self.skipped,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// One pipeline run per corpus graph, shared by the label and crossing checks.
pub struct CorpusRun {
    pub name: String,
    pub graph: Graph,
    pub pipeline: Pipeline,
    pub interval: LabelSet,
    pub degeneracy: LabelSet,
}

impl CorpusRun {
    pub fn new(entry: &CorpusEntry) -> Result<CorpusRun> {
        let pipeline = low_contiguity_ordering(&entry.graph, &PipelineOptions::default())?;
        let mut interval =
            encode_interval_with_ordering(&entry.graph, pipeline.contiguity.ordering.clone())?;
        interval.path_crossing = Some(pipeline.path.path_crossing);
        Ok(CorpusRun {
            name: entry.name(),
            graph: entry.graph.clone(),
            interval,
            degeneracy: encode_degeneracy(&entry.graph),
            pipeline,
        })
    }

    fn n(&self) -> usize {
        self.graph.n()
    }

    fn witness(&self, detail: impl fmt::Display) -> String {
        format!(
            "{} (n = {}): {detail}\n{}",
            self.name,
            self.n(),
            self.graph.to_edge_list_string()
        )
    }
}

/// Runs checks, computing the corpus pipeline at most once.
pub struct Verifier {
    cfg: VerifyConfig,
    runs: OnceCell<Vec<CorpusRun>>,
}

impl Verifier {
    pub fn new(cfg: VerifyConfig) -> Self {
        Verifier {
            cfg,
            runs: OnceCell::new(),
        }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.cfg
    }

    pub fn corpus_runs(&self) -> Result<&[CorpusRun]> {
        if self.runs.get().is_none() {
            let runs = corpus()
                .iter()
                .map(CorpusRun::new)
                .collect::<Result<Vec<_>>>()?;
            let _ = self.runs.set(runs);
        }
        Ok(self.runs.get().expect("just set"))
    }

    pub fn run(&self, check: Check) -> Result<Outcome> {
        let start = Instant::now();
        let mut out = match check {
            Check::Roundtrip => roundtrip(self.corpus_runs()?),
            Check::IntervalSize => interval_size(self.corpus_runs()?),
            Check::TreeCertificate => tree_certificate(self.corpus_runs()?),
            Check::FactorTwo => factor_two(self.corpus_runs()?),
            Check::CrossingBound => crossing_bound(self.corpus_runs()?, &self.cfg)?,
            Check::PathContiguity => path_contiguity(self.corpus_runs()?),
            Check::OracleGap => oracle_gap(self.corpus_runs()?)?,
            Check::Packing => packing(&self.cfg)?,
            Check::UnitDistance => unit_distance(&self.cfg)?,
            Check::PrimalDual => primal_dual(&self.cfg)?,
            Check::Subdivision => subdivision(&self.cfg)?,
            Check::DegeneracyLabels => degeneracy_labels(&self.cfg)?,
        };
        out.failures.sort_by_key(|f| f.size);
        out.elapsed = start.elapsed();
        Ok(out)
    }

    pub fn run_suite(&self, suite: Suite) -> Result<Vec<Outcome>> {
        suite.checks().iter().map(|&c| self.run(c)).collect()
    }
}

fn labels_match(out: &mut Outcome, run: &CorpusRun, ls: &LabelSet) {
    let file = match read_label_file(&write_label_file(ls)) {
        Ok(f) => f,
        Err(e) => {
            return out.fail(
                run.n(),
                run.witness(format!("{} label file unreadable: {e}", ls.scheme.name())),
            )
        }
    };
    for u in 0..run.n() {
        for v in u..run.n() {
            let want = run.graph.has_edge(u, v);
            match file.adjacent(u, v) {
                Ok(got) if got == want => {}
                Ok(got) => {
                    return out.fail(
                        run.n(),
                        run.witness(format!("{} labels say {u}~{v} is {got}", ls.scheme.name())),
                    )
                }
                Err(e) => {
                    return out.fail(
                        run.n(),
                        run.witness(format!("{} decode of {u},{v}: {e}", ls.scheme.name())),
                    )
                }
            }
        }
    }
}

/// Both schemes decode every pair correctly after a trip through the label file.
pub fn roundtrip(runs: &[CorpusRun]) -> Outcome {
    let mut out = Outcome::new(Check::Roundtrip);
    let mut pairs = 0usize;
    for run in runs {
        labels_match(&mut out, run, &run.interval);
        labels_match(&mut out, run, &run.degeneracy);
        pairs += run.n() * (run.n() + 1) / 2;
        out.checked += 1;
    }
    out.notes.push(format!("{pairs} vertex pairs per scheme"));
    out
}

/// Interval labels fit in `1 + (2 floor(log2 w) + 1) + (2k + 2) w` bits.
pub fn interval_size(runs: &[CorpusRun]) -> Outcome {
    let mut out = Outcome::new(Check::IntervalSize);
    let mut tightest = usize::MAX;
    for run in runs {
        let w = field_width(run.n());
        let k = run.pipeline.contiguity.k;
        let bound = 1 + (2 * w.ilog2() as usize + 1) + (2 * k + 2) * w;
        let max = run
            .interval
            .labels
            .iter()
            .map(|l| l.len())
            .max()
            .unwrap_or(0);
        if max > bound {
            out.fail(
                run.n(),
                run.witness(format!("{max} bits > {bound} (k = {k}, w = {w})")),
            );
        }
        tightest = tightest.min(bound.saturating_sub(max));
        out.checked += 1;
    }
    out.notes.push(format!("least slack {tightest} bits"));
    out
}

/// `2^k_T <= W_final` and the weight recurrence, both in exact arithmetic.
pub fn tree_certificate(runs: &[CorpusRun]) -> Outcome {
    let mut out = Outcome::new(Check::TreeCertificate);
    for run in runs {
        let t = &run.pipeline.path.tree;
        if !t.crossing_within_log_weight() {
            out.fail(
                run.n(),
                run.witness(format!(
                    "k_T = {} exceeds log2 W_final = {:.3}",
                    t.measured_crossing, t.final_log_weight_bound
                )),
            );
        } else if !t.weight_recurrence_holds() {
            out.fail(
                run.n(),
                run.witness("recorded weights break W_(i+1) = W_i (1 + c_i / W_i)"),
            );
        }
        out.checked += 1;
    }
    out
}

/// Every set crosses the path at most twice as often as the tree.
pub fn factor_two(runs: &[CorpusRun]) -> Outcome {
    let mut out = Outcome::new(Check::FactorTwo);
    let mut sets = 0usize;
    for run in runs {
        let p = &run.pipeline.path;
        if let Some(i) = p.factor_two_violation() {
            out.fail(
                run.n(),
                run.witness(format!(
                    "set {i}: path crossing {} > 2 * tree crossing {}",
                    p.per_set_path_crossing[i], p.tree.per_set_crossing[i]
                )),
            );
        }
        sets += p.per_set_path_crossing.len();
        out.checked += 1;
    }
    out.notes.push(format!("{sets} sets compared"));
    out
}

/// `k_P <= 2 log2 |S| + 10 d sum_j 1/f^-1(j/2)` wherever `d` and the envelope
/// are computable within budget.
pub fn crossing_bound(runs: &[CorpusRun], cfg: &VerifyConfig) -> Result<Outcome> {
    let mut out = Outcome::new(Check::CrossingBound);
    let (mut tree_held, mut tight_held, mut base2_held) = (0, 0, 0);
    let mut ratio_max: f64 = 0.0;
    let mut skipped = Vec::new();
    for run in runs.iter().filter(|r| r.n() <= cfg.bound_limit_n) {
        let s = neighborhood_system(&run.graph);
        let p = &run.pipeline.path;
        let b = match PathBound::for_system(&s, p.tree_crossing, p.path_crossing, cfg.budget) {
            Ok(b) => b,
            Err(Error::Budget { .. } | Error::TooLarge { .. }) => {
                out.skipped += 1;
                skipped.push(run.name.clone());
                continue;
            }
            Err(e) => return Err(e),
        };
        out.checked += 1;
        if !b.path_holds {
            out.fail(
                run.n(),
                run.witness(format!(
                    "k_P = {} > {:.3} (d = {}, |S| = {}, sum = {:.4})",
                    b.path_crossing, b.path_rhs, b.d, b.num_sets, b.inverse_sum
                )),
            );
        }
        tree_held += b.tree_holds as usize;
        tight_held += (b.path_crossing as f64 <= b.path_rhs_tight) as usize;
        base2_held += (b.path_crossing as f64 <= b.path_rhs_base2) as usize;
        if b.path_rhs > 0.0 {
            ratio_max = ratio_max.max(b.path_crossing as f64 / b.path_rhs);
        }
    }
    out.notes
        .push(format!("tree bound held on {tree_held}/{}", out.checked));
    out.notes
        .push(format!("5d variant held on {tight_held}/{}", out.checked));
    out.notes.push(format!(
        "10d/ln2 variant held on {base2_held}/{}",
        out.checked
    ));
    out.notes
        .push(format!("largest k_P / bound {ratio_max:.3}"));
    if !skipped.is_empty() {
        out.notes
            .push(format!("over budget: {}", skipped.join(", ")));
    }
    Ok(out)
}

/// `k <= floor(k_P / 2) + 1` for the ordering read off the path.
pub fn path_contiguity(runs: &[CorpusRun]) -> Outcome {
    let mut out = Outcome::new(Check::PathContiguity);
    for run in runs {
        let k = run.pipeline.contiguity.k;
        let kp = run.pipeline.path.path_crossing;
        if k > kp / 2 + 1 {
            out.fail(
                run.n(),
                run.witness(format!("k = {k} > floor({kp} / 2) + 1")),
            );
        }
        out.checked += 1;
    }
    out
}

/// Exact optima on small graphs never beat by the pipeline; ratios reported.
pub fn oracle_gap(runs: &[CorpusRun]) -> Result<Outcome> {
    let mut out = Outcome::new(Check::OracleGap);
    let (mut k_ratios, mut kp_ratios) = (Vec::new(), Vec::new());
    for run in runs.iter().filter(|r| r.n() <= EXACT_CONTIGUITY_LIMIT) {
        let (k_opt, _) = exact_contiguity(&run.graph)?;
        let (kp_opt, _) = optimal_path_crossing(&neighborhood_system(&run.graph))?;
        let k = run.pipeline.contiguity.k;
        let kp = run.pipeline.path.path_crossing;
        if k_opt > k {
            out.fail(
                run.n(),
                run.witness(format!("exact contiguity {k_opt} > pipeline {k}")),
            );
        }
        if kp_opt > kp {
            out.fail(
                run.n(),
                run.witness(format!("optimal path crossing {kp_opt} > pipeline {kp}")),
            );
        }
        if k_opt > 0 {
            k_ratios.push(k as f64 / k_opt as f64);
        }
        if kp_opt > 0 {
            kp_ratios.push(kp as f64 / kp_opt as f64);
        }
        out.checked += 1;
    }
    let stats = |r: &[f64]| {
        let mean = r.iter().sum::<f64>() / r.len().max(1) as f64;
        let max = r.iter().cloned().fold(1.0, f64::max);
        let optimal = r.iter().filter(|&&x| x == 1.0).count();
        format!(
            "mean {mean:.3}, max {max:.3}, optimal on {optimal}/{}",
            r.len()
        )
    };
    out.notes
        .push(format!("contiguity ratio: {}", stats(&k_ratios)));
    out.notes
        .push(format!("path crossing ratio: {}", stats(&kp_ratios)));
    Ok(out)
}

const SURVEY_SIZE: u64 = 200;

fn survey(cfg: &VerifyConfig) -> impl Iterator<Item = (u64, SetSystem)> + '_ {
    (0..SURVEY_SIZE).map(move |i| (i, survey_set_system(cfg.seed.wrapping_add(i))))
}

fn system_witness(i: u64, s: &SetSystem, detail: impl fmt::Display) -> String {
    format!("survey system {i}: {detail}\n{}", s.to_incidence_string())
}

/// Greedy delta-separated packings against `2 pi(ceil(4dn / delta))`.
pub fn packing(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut out = Outcome::new(Check::Packing);
    for (i, s) in survey(cfg) {
        let d = vc_dimension_with(&s, s.ground_size())?;
        for delta in [1, 2, 4].into_iter().filter(|&x| x <= s.ground_size()) {
            let p = greedy_delta_packing(&s, delta, cfg.seed ^ i)?;
            match verify_packing_bound_with(&s, &p, d, delta, cfg.budget) {
                Ok(r) if r.holds => {}
                Ok(r) => out.fail(
                    s.ground_size(),
                    system_witness(
                        i,
                        &s,
                        format!("delta = {delta}, d = {d}: |P| = {} > {}", r.lhs, r.rhs),
                    ),
                ),
                Err(Error::Budget { .. }) => {
                    out.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            }
            out.checked += 1;
        }
    }
    Ok(out)
}

/// The unit distance graph of a system has at most `d` edges per distinct set.
pub fn unit_distance(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut out = Outcome::new(Check::UnitDistance);
    let mut edges = 0usize;
    for (i, s) in survey(cfg) {
        let d = vc_dimension_with(&s, s.ground_size())?;
        let (ud, distinct) = unit_distance_graph(&s);
        if ud.edge_count() > d * distinct.len() {
            out.fail(
                s.ground_size(),
                system_witness(
                    i,
                    &s,
                    format!(
                        "{} edges > d * #distinct = {d} * {}",
                        ud.edge_count(),
                        distinct.len()
                    ),
                ),
            );
        }
        edges += ud.edge_count();
        out.checked += 1;
    }
    out.notes
        .push(format!("{edges} unit distance edges in total"));
    Ok(out)
}

/// Neighbourhood systems are self-dual: primal and dual shatter functions agree.
pub fn primal_dual(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut out = Outcome::new(Check::PrimalDual);
    for entry in corpus().iter().filter(|e| e.graph.n() <= 12) {
        let g = &entry.graph;
        let s = neighborhood_system(g);
        for m in 0..=g.n() {
            let pair = primal_shatter_with(&s, m, cfg.budget)
                .and_then(|p| Ok((p, dual_shatter_with(&s, m, cfg.budget)?)));
            match pair {
                Ok((p, q)) if p == q => out.checked += 1,
                Ok((p, q)) => {
                    out.checked += 1;
                    out.fail(
                        g.n(),
                        format!(
                            "{} m = {m}: primal {p} != dual {q}\n{}",
                            entry.name(),
                            g.to_edge_list_string()
                        ),
                    );
                }
                Err(Error::Budget { .. }) => out.skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    out.notes.push("counted per (graph, m)".into());
    Ok(out)
}

/// Subdivision reflects isomorphism and, for connected graphs with a vertex
/// of degree at least 3, preserves the automorphism count.
pub fn subdivision(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut out = Outcome::new(Check::Subdivision);
    let mut rng = rng::seeded(cfg.seed);
    for n in 1..=6 {
        let graphs = nonisomorphic_graphs(n);
        for r in 0..=2 {
            let subs: Vec<Graph> = graphs.iter().map(|g| subdivide(g, r).graph).collect();
            let limit = subs.iter().map(Graph::n).max().unwrap_or(0);
            let mut classes = 0;
            for i in 0..subs.len() {
                let distinct =
                    (0..i).all(|j| !are_isomorphic_within(&subs[i], &subs[j], limit).unwrap());
                if distinct {
                    classes += 1;
                } else {
                    out.fail(
                        subs[i].n(),
                        format!(
                            "non-isomorphic graphs on {n} vertices collide after {r}-subdivision\n{}",
                            graphs[i].to_edge_list_string()
                        ),
                    );
                }
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let relabelled = subdivide(&graphs[i].permuted(&perm), r).graph;
                if !are_isomorphic_within(&subs[i], &relabelled, limit)? {
                    out.fail(
                        subs[i].n(),
                        format!(
                            "relabelling by {perm:?} changes the {r}-subdivision\n{}",
                            graphs[i].to_edge_list_string()
                        ),
                    );
                }
                out.checked += 1;
            }
            if r > 0 && n == 6 {
                out.notes.push(format!(
                    "n = 6, r = {r}: {} classes map to {classes}",
                    graphs.len()
                ));
            }
        }
    }
    let mut aut_graphs = 0;
    for n in 1..=7 {
        for g in nonisomorphic_graphs(n) {
            if !g.is_connected() || g.max_degree() < 3 {
                continue;
            }
            aut_graphs += 1;
            let a = automorphism_count_within(&g, n)?;
            for r in 1..=3 {
                let h = subdivide(&g, r).graph;
                let b = automorphism_count_within(&h, h.n())?;
                if a != b {
                    out.fail(
                        h.n(),
                        format!(
                            "aut = {a} but the {r}-subdivision has {b}\n{}",
                            g.to_edge_list_string()
                        ),
                    );
                }
                out.checked += 1;
            }
        }
    }
    out.notes.push(format!(
        "{aut_graphs} connected graphs with a vertex of degree >= 3"
    ));
    Ok(out)
}

pub const DEGENERACY_SEEDS: u64 = 20;

/// 3-degenerate random graphs on 128 vertices get labels of at most 41 bits.
pub fn degeneracy_labels(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut out = Outcome::new(Check::DegeneracyLabels);
    let (n, d) = (128, 3);
    let w = field_width(n);
    let bound = 1 + gamma_len(w) + (d + 2) * w;
    let mut largest = 0;
    for i in 0..DEGENERACY_SEEDS {
        let seed = cfg.seed.wrapping_add(i);
        let g = generate(&GeneratorSpec::new(
            Family::RandomDDegenerate { n, d },
            seed,
        ))?;
        let ls = encode_degeneracy(&g);
        let max = ls.labels.iter().map(|l| l.len()).max().unwrap_or(0);
        largest = largest.max(max);
        if max > bound || ls.parameter > d {
            out.fail(
                n,
                format!(
                    "seed {seed}: {max} bits (bound {bound}), degeneracy {}\n{}",
                    ls.parameter,
                    g.to_edge_list_string()
                ),
            );
        }
        out.checked += 1;
    }
    out.notes
        .push(format!("largest label {largest} of {bound} bits"));
    Ok(out)
}
