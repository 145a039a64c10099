//! Crossing numbers of pair families and spanning paths with few crossings.
//!
//! A set crosses a pair `{x, y}` when it contains exactly one of the two
//! points. The low-crossing construction builds a spanning tree greedily with
//! multiplicative (doubling) weights on the sets, then shortcuts a DFS tour of
//! the tree into a spanning path.

pub mod bounds;
mod path;
mod tree;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::set_system::SetSystem;

pub use bounds::{
    verify_short_edge_bound, within_log_bound, PathBound, ShortEdgeReport, StepEnvelope,
};
pub use path::{
    build_low_crossing_path, optimal_path_crossing, tree_to_path, PathCertificate,
    OPTIMAL_PATH_LIMIT,
};
pub use tree::{build_low_crossing_tree, BuildOptions, PairSampling, TreeCertificate, WeightState};

pub type Pair = (usize, usize);

/// An ordered multiset of 2-element subsets of `0..ground_size`. Pairs are
/// stored with the smaller point first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePairList {
    ground_size: usize,
    pairs: Vec<Pair>,
}

impl EdgePairList {
    pub fn new(ground_size: usize, pairs: &[Pair]) -> Result<Self> {
        let mut out = Vec::with_capacity(pairs.len());
        for &(x, y) in pairs {
            if x == y {
                return Err(Error::input(format!(
                    "pair {{{x},{y}}} is not a 2-element set"
                )));
            }
            if x >= ground_size || y >= ground_size {
                return Err(Error::input(format!(
                    "pair {{{x},{y}}} leaves the ground set 0..{ground_size}"
                )));
            }
            out.push((x.min(y), x.max(y)));
        }
        Ok(EdgePairList {
            ground_size,
            pairs: out,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.ground_size];
        for &(x, y) in &self.pairs {
            adj[x].push(y);
            adj[y].push(x);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Checks that the pairs form a spanning tree; the error names a pair that
    /// closes a cycle or a point that cannot be reached.
    pub fn check_spanning_tree(&self) -> Result<()> {
        let n = self.ground_size;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(x, y) in &self.pairs {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a == b {
                return Err(Error::input(format!("pair {{{x},{y}}} closes a cycle")));
            }
            parent[a] = b;
        }
        if n > 0 {
            let root = find(&mut parent, 0);
            if let Some(v) = (1..n).find(|&v| find(&mut parent, v) != root) {
                return Err(Error::input(format!(
                    "point {v} is not connected to point 0"
                )));
            }
        }
        Ok(())
    }

    /// The points of a Hamiltonian path in traversal order, starting from the
    /// smaller endpoint.
    pub fn path_order(&self) -> Result<Vec<usize>> {
        let n = self.ground_size;
        if n == 0 {
            return Ok(Vec::new());
        }
        if self.pairs.len() != n - 1 {
            return Err(Error::input(format!(
                "a path on {n} points has {} pairs, found {}",
                n - 1,
                self.pairs.len()
            )));
        }
        let adj = self.adjacency();
        if let Some(v) = (0..n).find(|&v| adj[v].len() > 2) {
            return Err(Error::input(format!(
                "point {v} has {} path neighbours",
                adj[v].len()
            )));
        }
        let start = if n == 1 {
            0
        } else {
            (0..n)
                .find(|&v| adj[v].len() == 1)
                .ok_or_else(|| Error::input("pairs form a cycle, not a path"))?
        };
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut cur = start;
        loop {
            seen[cur] = true;
            order.push(cur);
            match adj[cur].iter().find(|&&w| !seen[w]) {
                Some(&w) => cur = w,
                None => break,
            }
        }
        if order.len() != n {
            return Err(Error::input("pairs do not form a single path"));
        }
        Ok(order)
    }
}

/// Whether `set` contains exactly one of the two points.
pub fn crosses(set: &FixedBitSet, pair: Pair) -> bool {
    set.contains(pair.0) != set.contains(pair.1)
}

/// Crossing number of `f` with respect to every set of `s`, and the maximum.
pub fn crossing_number(f: &EdgePairList, s: &SetSystem) -> (usize, Vec<usize>) {
    let per_set: Vec<usize> = s
        .sets()
        .iter()
        .map(|set| f.pairs().iter().filter(|&&p| crosses(set, p)).count())
        .collect();
    (per_set.iter().copied().max().unwrap_or(0), per_set)
}

/// The pair of active points crossed by the least total multiplicity of `q`,
/// ties going to the lexicographically smallest pair.
pub fn min_crossing_pair(q: &SetSystem, active: &[usize]) -> Result<Pair> {
    Ok(min_crossing_pair_with_cost(q, active)?.0)
}

pub fn min_crossing_pair_with_cost(q: &SetSystem, active: &[usize]) -> Result<(Pair, u128)> {
    let mut pts = active.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 2 {
        return Err(Error::input("need at least two active points"));
    }
    if let Some(&x) = pts.iter().find(|&&x| x >= q.ground_size()) {
        return Err(Error::input(format!(
            "active point {x} is outside the ground set"
        )));
    }
    let mut best: Option<(Pair, u128)> = None;
    for (a, &x) in pts.iter().enumerate() {
        for &y in &pts[a + 1..] {
            let cost: u128 = q
                .sets()
                .iter()
                .zip(q.multiplicities())
                .filter(|(set, _)| crosses(set, (x, y)))
                .map(|(_, &m)| m as u128)
                .sum();
            if best.as_ref().is_none_or(|(_, c)| cost < *c) {
                best = Some(((x, y), cost));
            }
        }
    }
    Ok(best.unwrap())
}
