//! Finite set systems, their traces and shatter functions.
//!
//! Exact shatter values are found by a branch-and-bound over subsets of
//! (deduplicated, non-constant) ground elements. Each search node holds the
//! partition of the distinct sets by their trace on the chosen elements; the
//! number of classes is the number of distinct traces, and a class of size
//! `s` can split into at most `min(s, 2^r)` classes with `r` more elements.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use rand::seq::{index, SliceRandom};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

/// Default number of search nodes an exact shatter computation may visit.
pub const DEFAULT_SHATTER_BUDGET: u64 = 10_000_000;
/// Default largest ground set accepted by [`vc_dimension`].
pub const DEFAULT_VC_GROUND_LIMIT: usize = 24;

/// A family of subsets of `0..ground_size`, kept in order. Duplicates are
/// allowed and every set carries a positive multiplicity (1 by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground_size: usize,
    sets: Vec<FixedBitSet>,
    multiplicities: Vec<u64>,
}

impl SetSystem {
    pub fn new(ground_size: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut bits = Vec::with_capacity(sets.len());
        for (i, s) in sets.iter().enumerate() {
            let mut b = FixedBitSet::with_capacity(ground_size);
            for &x in s {
                if x >= ground_size {
                    return Err(Error::input(format!(
                        "set {i} contains {x}, outside the ground set 0..{ground_size}"
                    )));
                }
                b.insert(x);
            }
            bits.push(b);
        }
        Ok(Self::from_bitsets(ground_size, bits))
    }

    /// Bitsets longer than `ground_size` are not expected; shorter ones are grown.
    pub fn from_bitsets(ground_size: usize, mut sets: Vec<FixedBitSet>) -> Self {
        for s in &mut sets {
            s.grow(ground_size);
        }
        let multiplicities = vec![1; sets.len()];
        SetSystem {
            ground_size,
            sets,
            multiplicities,
        }
    }

    /// Replaces the multiplicities; zero entries are rejected.
    pub fn with_multiplicities(mut self, multiplicities: Vec<u64>) -> Result<Self> {
        if multiplicities.len() != self.sets.len() {
            return Err(Error::input(format!(
                "{} multiplicities for {} sets",
                multiplicities.len(),
                self.sets.len()
            )));
        }
        if multiplicities.contains(&0) {
            return Err(Error::input("multiplicities must be positive"));
        }
        self.multiplicities = multiplicities;
        Ok(self)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, i: usize) -> &FixedBitSet {
        &self.sets[i]
    }

    pub fn sets(&self) -> &[FixedBitSet] {
        &self.sets
    }

    pub fn multiplicity(&self, i: usize) -> u64 {
        self.multiplicities[i]
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Sum of multiplicities, i.e. the size of the multiset.
    pub fn total_multiplicity(&self) -> u128 {
        self.multiplicities.iter().map(|&m| m as u128).sum()
    }

    /// Distinct sets in order of first occurrence.
    pub fn distinct_sets(&self) -> Vec<FixedBitSet> {
        let mut seen = HashSet::new();
        self.sets
            .iter()
            .filter(|s| seen.insert((*s).clone()))
            .cloned()
            .collect()
    }

    /// Index of the first occurrence of each distinct set.
    pub fn distinct_indices(&self) -> Vec<usize> {
        let mut seen = HashSet::new();
        (0..self.sets.len())
            .filter(|&i| seen.insert(&self.sets[i]))
            .collect()
    }

    /// Parses the incidence-matrix text format: a `rows cols` header, then
    /// one line of `0`/`1` characters per set.
    pub fn parse_incidence(text: &str) -> Result<SetSystem> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `rows cols` header".into(),
        })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: hline,
                msg: "header must be two non-negative integers".into(),
            })?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse {
                line: hline,
                msg: "header must be two non-negative integers".into(),
            });
        };
        let mut sets = Vec::with_capacity(rows);
        for (line, body) in lines {
            let row: String = body.split_whitespace().collect();
            if row.len() != cols {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {cols} columns, found {}", row.len()),
                });
            }
            let mut b = FixedBitSet::with_capacity(cols);
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => b.insert(j),
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("unexpected character `{other}`"),
                        })
                    }
                }
            }
            sets.push(b);
        }
        if sets.len() != rows {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {rows} rows but {} were listed", sets.len()),
            });
        }
        Ok(SetSystem::from_bitsets(cols, sets))
    }

    pub fn to_incidence_string(&self) -> String {
        let mut out = format!("{} {}\n", self.sets.len(), self.ground_size);
        for s in &self.sets {
            out.extend((0..self.ground_size).map(|j| if s.contains(j) { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

/// One set per vertex: `N(v)` over the ground set `V(G)`.
pub fn neighborhood_system(g: &Graph) -> SetSystem {
    SetSystem::from_bitsets(
        g.n(),
        (0..g.n()).map(|v| g.neighborhood(v).clone()).collect(),
    )
}

/// The transpose: ground set = set indices, one set `{i : x in S_i}` per
/// element `x`.
pub fn dual_system(s: &SetSystem) -> SetSystem {
    let mut dual = vec![FixedBitSet::with_capacity(s.len()); s.ground_size()];
    for (i, set) in s.sets().iter().enumerate() {
        for x in set.ones() {
            dual[x].insert(i);
        }
    }
    SetSystem::from_bitsets(s.len(), dual)
}

fn trace_mask(set: &FixedBitSet, a: &[usize]) -> u64 {
    a.iter()
        .enumerate()
        .filter(|(_, &x)| set.contains(x))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Whether every subset of `a` is the trace of some set.
pub fn is_shattered(s: &SetSystem, a: &[usize]) -> Result<bool> {
    let mut a = a.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.len() > 30 {
        return Err(Error::TooLarge {
            what: "shattering test",
            size: a.len(),
            limit: 30,
        });
    }
    if let Some(&x) = a.iter().find(|&&x| x >= s.ground_size()) {
        return Err(Error::input(format!("{x} is outside the ground set")));
    }
    let traces: HashSet<u64> = s.sets().iter().map(|set| trace_mask(set, &a)).collect();
    Ok(traces.len() == 1 << a.len())
}

/// VC dimension with the default ground-set limit.
pub fn vc_dimension(s: &SetSystem) -> Result<usize> {
    vc_dimension_with(s, DEFAULT_VC_GROUND_LIMIT)
}

/// Largest shattered subset size. Shattered sets are closed under taking
/// subsets, so candidates of size `k + 1` are only formed from shattered sets
/// of size `k` whose every `k`-subset is shattered. The search stops at
/// `floor(log2(#distinct sets))`.
pub fn vc_dimension_with(s: &SetSystem, ground_limit: usize) -> Result<usize> {
    if s.ground_size() > ground_limit {
        return Err(Error::TooLarge {
            what: "VC dimension",
            size: s.ground_size(),
            limit: ground_limit,
        });
    }
    let distinct = s.distinct_sets().len();
    if distinct <= 1 {
        return Ok(0);
    }
    let cutoff = (usize::BITS - 1 - distinct.leading_zeros()) as usize;
    let reduced = SetSystem::from_bitsets(s.ground_size(), s.distinct_sets());

    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    let mut d = 0;
    while d < cutoff {
        let known: HashSet<&Vec<usize>> = level.iter().collect();
        let mut next = Vec::new();
        for a in &level {
            let start = a.last().map_or(0, |&x| x + 1);
            for x in start..s.ground_size() {
                let mut cand = a.clone();
                cand.push(x);
                let all_faces = (0..a.len()).all(|skip| {
                    let face: Vec<usize> = cand
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &y)| y)
                        .collect();
                    known.contains(&face)
                });
                if all_faces && is_shattered(&reduced, &cand)? {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
        d += 1;
    }
    Ok(d)
}

/// Primal shatter function value with the default budget.
pub fn primal_shatter(s: &SetSystem, m: usize) -> Result<u64> {
    primal_shatter_with(s, m, DEFAULT_SHATTER_BUDGET)
}

/// `max_{|A| = m} |{S ∩ A}|`, exact. Fails with [`Error::Budget`] if the
/// search visits more than `budget` nodes.
pub fn primal_shatter_with(s: &SetSystem, m: usize, budget: u64) -> Result<u64> {
    if m > s.ground_size() {
        return Err(Error::input(format!(
            "m = {m} exceeds the ground set size {}",
            s.ground_size()
        )));
    }
    ShatterSearch::new(s).max_traces(m, budget)
}

pub fn dual_shatter(s: &SetSystem, m: usize) -> Result<u64> {
    primal_shatter(&dual_system(s), m)
}

pub fn dual_shatter_with(s: &SetSystem, m: usize, budget: u64) -> Result<u64> {
    primal_shatter_with(&dual_system(s), m, budget)
}

/// Shatter function of the neighbourhood set system.
pub fn neighborhood_complexity(g: &Graph, m: usize) -> Result<u64> {
    primal_shatter(&neighborhood_system(g), m)
}

pub fn neighborhood_complexity_with(g: &Graph, m: usize, budget: u64) -> Result<u64> {
    primal_shatter_with(&neighborhood_system(g), m, budget)
}

/// Best trace count over `trials` uniformly random `m`-subsets. Never exceeds
/// the exact value; deterministic for a fixed seed.
pub fn sampled_shatter_lower_bound(
    s: &SetSystem,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<u64> {
    if m > s.ground_size() {
        return Err(Error::input(format!(
            "m = {m} exceeds the ground set size {}",
            s.ground_size()
        )));
    }
    let mut rng = rng::seeded(seed);
    let distinct = s.distinct_sets();
    let mut best = 0;
    for _ in 0..trials {
        let a = index::sample(&mut rng, s.ground_size(), m).into_vec();
        let traces: HashSet<Vec<usize>> = distinct
            .iter()
            .map(|set| a.iter().copied().filter(|&x| set.contains(x)).collect())
            .collect();
        best = best.max(traces.len() as u64);
    }
    Ok(best)
}

/// Values of a shatter function for `m = 0..=exact_up_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterProfile {
    pub values: Vec<u64>,
    pub exact_up_to: usize,
}

impl ShatterProfile {
    /// Computes `pi(0), pi(1), ...` up to `max_m`, stopping early at the first
    /// value that exceeds the budget.
    pub fn compute(s: &SetSystem, max_m: usize, budget: u64) -> ShatterProfile {
        let search = ShatterSearch::new(s);
        let mut values = Vec::new();
        for m in 0..=max_m.min(s.ground_size()) {
            match search.max_traces(m, budget) {
                Ok(v) => values.push(v),
                Err(_) => break,
            }
        }
        let exact_up_to = values.len().saturating_sub(1);
        ShatterProfile {
            values,
            exact_up_to,
        }
    }
}

struct ShatterSearch {
    /// Number of distinct sets.
    k: usize,
    /// Distinct, non-constant element columns as membership bitsets over the
    /// distinct sets, sorted by decreasing `gain`.
    columns: Vec<FixedBitSet>,
    /// `gain_prefix[j]` sums the first `j` gains. A column separates at most
    /// `min(ones, zeros)` classes, whatever the partition.
    gain_prefix: Vec<u64>,
}

impl ShatterSearch {
    fn new(s: &SetSystem) -> Self {
        let distinct = s.distinct_sets();
        let k = distinct.len();
        let mut seen = HashSet::new();
        let mut columns = Vec::new();
        for x in 0..s.ground_size() {
            let mut col = FixedBitSet::with_capacity(k);
            for (i, set) in distinct.iter().enumerate() {
                col.set(i, set.contains(x));
            }
            let ones = col.count_ones(..);
            if ones == 0 || ones == k {
                continue;
            }
            if seen.insert(col.clone()) {
                columns.push((ones.min(k - ones) as u64, col));
            }
        }
        columns.sort_by_key(|(gain, _)| std::cmp::Reverse(*gain));
        let mut gain_prefix = vec![0];
        for (gain, _) in &columns {
            gain_prefix.push(gain_prefix.last().unwrap() + gain);
        }
        let columns = columns.into_iter().map(|(_, c)| c).collect();
        ShatterSearch {
            k,
            columns,
            gain_prefix,
        }
    }

    fn max_traces(&self, m: usize, budget: u64) -> Result<u64> {
        if self.k <= 1 {
            return Ok(self.k as u64);
        }
        let m = m.min(self.columns.len());
        let cap = if m >= 63 {
            self.k as u64
        } else {
            (1u64 << m).min(self.k as u64)
        };
        if m == 0 {
            return Ok(1);
        }

        // greedy start: repeatedly take the column that splits the most
        let mut part = Partition::whole(self.k);
        let mut used = vec![false; self.columns.len()];
        for _ in 0..m {
            let (j, p) = (0..self.columns.len())
                .filter(|&j| !used[j])
                .map(|j| (j, part.split(&self.columns[j])))
                .max_by_key(|(j, p)| (p.classes, std::cmp::Reverse(*j)))
                .unwrap();
            used[j] = true;
            part = p;
        }
        let mut best = part.classes as u64;
        if best == cap {
            return Ok(best);
        }

        let mut nodes = 0u64;
        self.descend(
            &Partition::whole(self.k),
            0,
            0,
            m,
            cap,
            &mut best,
            &mut nodes,
            budget,
        )?;
        Ok(best)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        part: &Partition,
        start: usize,
        depth: usize,
        m: usize,
        cap: u64,
        best: &mut u64,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<()> {
        if depth == m {
            *best = (*best).max(part.classes as u64);
            return Ok(());
        }
        let remaining = m - depth;
        for j in start..=self.columns.len() - remaining {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::Budget {
                    what: "exact shatter function",
                    budget,
                    hint: "; use sampled_shatter_lower_bound for a lower bound",
                });
            }
            // the gains are sorted, so the next columns bound any later choice
            let r = remaining - 1;
            if part.classes as u64 + self.gain_prefix[j + 1 + r] - self.gain_prefix[j] <= *best {
                break;
            }
            let child = part.split(&self.columns[j]);
            if child.upper_bound(r) <= *best {
                continue;
            }
            self.descend(&child, j + 1, depth + 1, m, cap, best, nodes, budget)?;
            if *best == cap {
                return Ok(());
            }
        }
        Ok(())
    }
}

#[derive(Clone)]
struct Partition {
    class_of: Vec<u32>,
    sizes: Vec<u32>,
    classes: usize,
}

impl Partition {
    fn whole(k: usize) -> Self {
        Partition {
            class_of: vec![0; k],
            sizes: vec![k as u32],
            classes: 1,
        }
    }

    fn split(&self, col: &FixedBitSet) -> Partition {
        let mut relabel = vec![u32::MAX; 2 * self.classes];
        let mut sizes = Vec::with_capacity(2 * self.classes);
        let class_of = self
            .class_of
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let key = 2 * c as usize + col.contains(i) as usize;
                if relabel[key] == u32::MAX {
                    relabel[key] = sizes.len() as u32;
                    sizes.push(0);
                }
                sizes[relabel[key] as usize] += 1;
                relabel[key]
            })
            .collect();
        let classes = sizes.len();
        Partition {
            class_of,
            sizes,
            classes,
        }
    }

    /// Most classes reachable after `r` more splits.
    fn upper_bound(&self, r: usize) -> u64 {
        let cap = if r >= 32 { u64::MAX } else { 1u64 << r };
        self.sizes.iter().map(|&s| (s as u64).min(cap)).sum()
    }
}

/// Smallest symmetric difference between two of the selected sets.
pub fn min_pairwise_separation(s: &SetSystem, indices: &[usize]) -> Result<usize> {
    Ok(closest_pair(s, indices)?.2)
}

/// The closest pair among `indices` and its symmetric-difference size.
pub fn closest_pair(s: &SetSystem, indices: &[usize]) -> Result<(usize, usize, usize)> {
    if indices.len() < 2 {
        return Err(Error::input("separation needs at least two sets"));
    }
    if let Some(&i) = indices.iter().find(|&&i| i >= s.len()) {
        return Err(Error::input(format!("set index {i} out of range")));
    }
    let mut best = (indices[0], indices[1], usize::MAX);
    for (a, &i) in indices.iter().enumerate() {
        for &j in &indices[a + 1..] {
            let d = s.set(i).symmetric_difference_count(s.set(j));
            if d < best.2 {
                best = (i, j, d);
            }
        }
    }
    Ok(best)
}

/// Graph on the distinct sets, joining sets whose symmetric difference has
/// exactly one element. Vertex `i` is the `i`-th distinct set.
pub fn unit_distance_graph(s: &SetSystem) -> (Graph, Vec<FixedBitSet>) {
    let distinct = s.distinct_sets();
    let index: HashMap<&FixedBitSet, usize> =
        distinct.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut g = Graph::empty(distinct.len());
    for (i, d) in distinct.iter().enumerate() {
        for x in 0..s.ground_size() {
            let mut flipped = d.clone();
            flipped.toggle(x);
            if let Some(&j) = index.get(&flipped) {
                if j > i {
                    g.insert_edge(i, j);
                }
            }
        }
    }
    (g, distinct)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PackingReport {
    /// Size of the packing.
    pub lhs: u64,
    /// `2 * pi(min(n, ceil(4dn / delta)))`.
    pub rhs: u64,
    pub holds: bool,
}

/// Checks `|P| <= 2 pi(ceil(4dn/delta))` for a delta-separated sub-family `P`.
pub fn verify_packing_bound(
    s: &SetSystem,
    packing: &[usize],
    d: usize,
    delta: usize,
) -> Result<PackingReport> {
    verify_packing_bound_with(s, packing, d, delta, DEFAULT_SHATTER_BUDGET)
}

pub fn verify_packing_bound_with(
    s: &SetSystem,
    packing: &[usize],
    d: usize,
    delta: usize,
    budget: u64,
) -> Result<PackingReport> {
    let n = s.ground_size();
    if delta == 0 || delta > n {
        return Err(Error::input(format!("delta = {delta} must lie in 1..={n}")));
    }
    if packing.is_empty() {
        return Err(Error::input("empty packing"));
    }
    if packing.len() >= 2 {
        let (i, j, sep) = closest_pair(s, packing)?;
        if sep < delta {
            return Err(Error::input(format!(
                "packing is not {delta}-separated: sets {i} and {j} differ in {sep} elements"
            )));
        }
    } else if packing[0] >= s.len() {
        return Err(Error::input(format!(
            "set index {} out of range",
            packing[0]
        )));
    }
    let m = (4 * d * n).div_ceil(delta).min(n);
    let rhs = 2 * primal_shatter_with(s, m, budget)?;
    let lhs = packing.len() as u64;
    Ok(PackingReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// Maximal delta-separated sub-family: sets are scanned in a seeded random
/// order and kept when at least `delta` away from every kept set.
pub fn greedy_delta_packing(s: &SetSystem, delta: usize, seed: u64) -> Result<Vec<usize>> {
    if delta == 0 {
        return Err(Error::input("delta must be at least 1"));
    }
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.shuffle(&mut rng::seeded(seed));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        if kept
            .iter()
            .all(|&j| s.set(i).symmetric_difference_count(s.set(j)) >= delta)
        {
            kept.push(i);
        }
    }
    Ok(kept)
}
