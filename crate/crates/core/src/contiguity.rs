//! Vertex orderings in which every neighbourhood splits into few intervals.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::crossing::{
    build_low_crossing_path, within_log_bound, BuildOptions, EdgePairList, PathBound,
    PathCertificate,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexOrdering};
use crate::set_system::neighborhood_system;

/// Largest graph accepted by [`exact_contiguity`].
pub const EXACT_CONTIGUITY_LIMIT: usize = 8;

/// Maximal runs of positions, as inclusive `(start, end)` pairs, sorted and
/// separated by at least one position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntervalSet {
    intervals: Vec<(usize, usize)>,
}

impl IntervalSet {
    /// Merges arbitrary positions into maximal runs.
    pub fn from_positions(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        let mut intervals: Vec<(usize, usize)> = Vec::new();
        for p in positions {
            match intervals.last_mut() {
                Some((_, end)) if *end + 1 == p => *end = p,
                _ => intervals.push((p, p)),
            }
        }
        IntervalSet { intervals }
    }

    /// Validates already-merged intervals.
    pub fn new(intervals: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(s, e)) in intervals.iter().enumerate() {
            if s > e {
                return Err(Error::input(format!("interval ({s}, {e}) is reversed")));
            }
            if i > 0 && intervals[i - 1].1 + 1 >= s {
                return Err(Error::input(format!(
                    "interval ({s}, {e}) touches or overlaps its predecessor"
                )));
            }
        }
        Ok(IntervalSet { intervals })
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        let i = self.intervals.partition_point(|&(_, e)| e < pos);
        self.intervals.get(i).is_some_and(|&(s, _)| s <= pos)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.intervals.iter().flat_map(|&(s, e)| s..=e)
    }

    /// How many intervals start at position 0 or end at `n - 1`; one
    /// interval spanning everything counts twice.
    pub fn boundary_touches(&self, n: usize) -> usize {
        let first = self.intervals.first().is_some_and(|&(s, _)| s == 0) as usize;
        let last = self.intervals.last().is_some_and(|&(_, e)| e + 1 == n) as usize;
        first + last
    }
}

/// The maximal runs of `N(v)` under `sigma`.
pub fn interval_partition(g: &Graph, sigma: &VertexOrdering, v: Vertex) -> IntervalSet {
    IntervalSet::from_positions(g.neighbors(v).map(|u| sigma.pos(u)).collect())
}

/// Largest number of runs over all neighbourhoods; 0 for edgeless graphs.
pub fn contiguity_of_ordering(g: &Graph, sigma: &VertexOrdering) -> usize {
    (0..g.n())
        .map(|v| interval_partition(g, sigma, v).len())
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContiguityResult {
    pub ordering: VertexOrdering,
    pub per_vertex: Vec<IntervalSet>,
    pub k: usize,
}

impl ContiguityResult {
    pub fn of(g: &Graph, ordering: VertexOrdering) -> Result<Self> {
        if ordering.len() != g.n() {
            return Err(Error::input(format!(
                "ordering has {} vertices, graph has {}",
                ordering.len(),
                g.n()
            )));
        }
        let per_vertex: Vec<IntervalSet> = (0..g.n())
            .map(|v| interval_partition(g, &ordering, v))
            .collect();
        let k = per_vertex.iter().map(IntervalSet::len).max().unwrap_or(0);
        Ok(ContiguityResult {
            ordering,
            per_vertex,
            k,
        })
    }
}

/// Traversal order of a Hamiltonian path, from its smaller endpoint.
pub fn ordering_from_path(path: &EdgePairList) -> Result<VertexOrdering> {
    VertexOrdering::new(path.path_order()?)
}

/// Contiguity bounds derived from one pipeline run.
#[derive(Clone, Debug, Serialize)]
pub struct ContiguityReport {
    pub n: usize,
    pub k: usize,
    pub tree_crossing: usize,
    pub path_crossing: usize,
    /// `k <= floor(k_P / 2) + 1`, or `k <= 1` when `k_P <= 1`.
    pub path_bound_holds: bool,
    /// Exact tree/path bounds, when the VC dimension and the shatter
    /// envelope were affordable.
    pub crossing_bound: Option<PathBound>,
    /// `k <= 1 + log2 n + 5d * sum_j 1 / f^-1(j/2)`.
    pub contiguity_bound_holds: Option<bool>,
    pub contiguity_bound: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct Pipeline {
    pub contiguity: ContiguityResult,
    pub path: PathCertificate,
    pub report: ContiguityReport,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    pub build: BuildOptions,
    /// Budget for the exact shatter envelope; `None` skips the bound values.
    pub bound_budget: Option<u64>,
    /// Skip the bound values above this many vertices.
    pub bound_limit_n: Option<usize>,
}

/// `k <= floor(k_P / 2) + 1` with the small cases checked directly.
pub fn path_bound_holds(k: usize, path_crossing: usize) -> bool {
    if path_crossing <= 1 {
        k <= 1
    } else {
        k <= 2 + (path_crossing - 2) / 2 && k <= path_crossing / 2 + 1
    }
}

/// Orders the vertices along a low-crossing path for the neighbourhood
/// system and measures the resulting contiguity.
pub fn low_contiguity_ordering(g: &Graph, opts: &PipelineOptions) -> Result<Pipeline> {
    if g.n() == 0 {
        return Err(Error::input("the graph has no vertices"));
    }
    let s = neighborhood_system(g);
    let path = build_low_crossing_path(&s, &opts.build)?;
    let ordering = ordering_from_path(&path.path)?;
    let contiguity = ContiguityResult::of(g, ordering)?;
    let k = contiguity.k;

    let affordable = opts.bound_budget.is_some()
        && opts.bound_limit_n.is_none_or(|lim| g.n() <= lim)
        && !path.tree.sampled;
    let crossing_bound = if affordable {
        match PathBound::for_system(
            &s,
            path.tree_crossing,
            path.path_crossing,
            opts.bound_budget.unwrap(),
        ) {
            Ok(b) => Some(b),
            Err(Error::Budget { .. } | Error::TooLarge { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let (contiguity_bound_holds, contiguity_bound) = match &crossing_bound {
        Some(b) => {
            let linear = BigRational::from_integer(BigInt::from(5 * b.d)) * &b.exact_inverse_sum;
            let lhs = BigRational::from_integer(BigInt::from(k as i64 - 1));
            let value = 1.0 + (g.n() as f64).log2() + 5.0 * b.d as f64 * b.inverse_sum;
            (Some(within_log_bound(&lhs, 1, g.n(), &linear)), Some(value))
        }
        None => (None, None),
    };

    let report = ContiguityReport {
        n: g.n(),
        k,
        tree_crossing: path.tree_crossing,
        path_crossing: path.path_crossing,
        path_bound_holds: path_bound_holds(k, path.path_crossing),
        crossing_bound,
        contiguity_bound_holds,
        contiguity_bound,
    };
    Ok(Pipeline {
        contiguity,
        path,
        report,
    })
}

/// Minimum contiguity over all orderings, with the first optimal ordering
/// found. Only orderings whose first vertex is smaller than the last are
/// tried, since reversal preserves contiguity.
pub fn exact_contiguity(g: &Graph) -> Result<(usize, VertexOrdering)> {
    let n = g.n();
    if n > EXACT_CONTIGUITY_LIMIT {
        return Err(Error::TooLarge {
            what: "exact contiguity",
            size: n,
            limit: EXACT_CONTIGUITY_LIMIT,
        });
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut order: Vec<usize> = (0..n).collect();
    permute(&mut order, 0, &mut |o| {
        if n >= 2 && o[0] > o[n - 1] {
            return;
        }
        let sigma = VertexOrdering::new(o.to_vec()).expect("a permutation");
        let k = contiguity_of_ordering(g, &sigma);
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, o.to_vec()));
        }
    });
    let (k, o) = best.expect("at least one ordering");
    Ok((k, VertexOrdering::new(o)?))
}

/// Visits every permutation of `a[i..]`, prefixes fixed.
fn permute(a: &mut [usize], i: usize, visit: &mut impl FnMut(&[usize])) {
    if i + 1 >= a.len() {
        visit(a);
        return;
    }
    for j in i..a.len() {
        a.swap(i, j);
        permute(a, i + 1, visit);
        a.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::crossing_number;
    use crate::graph::fixtures::*;
    use crate::graph::nonisomorphic_graphs;
    use crate::set_system::DEFAULT_SHATTER_BUDGET;
    use proptest::prelude::*;

    fn ord(o: &[usize]) -> VertexOrdering {
        VertexOrdering::new(o.to_vec()).unwrap()
    }

    fn run(g: &Graph) -> Pipeline {
        low_contiguity_ordering(g, &PipelineOptions::default()).unwrap()
    }

    #[test]
    fn partition_examples() {
        let p = interval_partition(&path(3), &ord(&[0, 2, 1]), 1);
        assert_eq!(p.intervals(), &[(0, 1)]);
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(interval_partition(&g, &ord(&[0, 1, 2]), 2).is_empty());
        let k4 = interval_partition(&complete(4), &VertexOrdering::identity(4), 1);
        assert_eq!(k4.intervals(), &[(0, 0), (2, 3)]);
    }

    #[test]
    fn contiguity_examples() {
        assert_eq!(
            contiguity_of_ordering(&star(4), &VertexOrdering::identity(5)),
            1
        );
        for n in 3..7 {
            assert_eq!(
                contiguity_of_ordering(&complete(n), &VertexOrdering::identity(n)),
                2
            );
        }
        assert_eq!(contiguity_of_ordering(&path(4), &ord(&[0, 2, 1, 3])), 1);
        assert_eq!(
            contiguity_of_ordering(&Graph::empty(5), &VertexOrdering::identity(5)),
            0
        );
    }

    #[test]
    fn interval_set_basics() {
        let s = IntervalSet::from_positions(vec![5, 1, 2, 3, 7, 8]);
        assert_eq!(s.intervals(), &[(1, 3), (5, 5), (7, 8)]);
        assert!(s.contains(2) && s.contains(5) && !s.contains(4) && !s.contains(9));
        assert_eq!(s.positions().collect::<Vec<_>>(), vec![1, 2, 3, 5, 7, 8]);
        assert_eq!(s.boundary_touches(9), 1);
        assert_eq!(
            IntervalSet::from_positions(vec![0, 1, 2]).boundary_touches(3),
            2
        );
        assert!(IntervalSet::new(vec![(0, 1), (2, 3)]).is_err());
        assert!(IntervalSet::new(vec![(3, 1)]).is_err());
        assert!(IntervalSet::new(vec![(0, 1), (3, 3)]).is_ok());
    }

    #[test]
    fn orderings_from_paths() {
        let p = EdgePairList::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(ordering_from_path(&p).unwrap().order(), &[0, 1, 2]);
        assert_eq!(
            ordering_from_path(&EdgePairList::new(1, &[]).unwrap())
                .unwrap()
                .order(),
            &[0]
        );
        let p = EdgePairList::new(4, &[(3, 0), (0, 2), (2, 1)]).unwrap();
        assert_eq!(ordering_from_path(&p).unwrap().order(), &[1, 2, 0, 3]);
        let star = EdgePairList::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(ordering_from_path(&star).is_err());
    }

    #[test]
    fn pipeline_examples() {
        assert_eq!(run(&Graph::empty(6)).contiguity.k, 0);
        assert_eq!(run(&path(2)).contiguity.k, 1);
        let c8 = run(&cycle(8));
        assert!(c8.report.path_bound_holds);
        assert!(c8.contiguity.k <= c8.path.path_crossing / 2 + 1);
    }

    #[test]
    fn pipeline_reports_bounds_when_asked() {
        let opts = PipelineOptions {
            bound_budget: Some(DEFAULT_SHATTER_BUDGET),
            ..Default::default()
        };
        let p = low_contiguity_ordering(&cycle(8), &opts).unwrap();
        let b = p.report.crossing_bound.as_ref().unwrap();
        assert!(b.path_holds && b.tree_holds);
        assert_eq!(p.report.contiguity_bound_holds, Some(true));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_contiguity(&path(4)).unwrap().0, 1);
        assert_eq!(exact_contiguity(&complete(4)).unwrap().0, 2);
        let c5 = cycle(5);
        let (k, w) = exact_contiguity(&c5).unwrap();
        assert_eq!(contiguity_of_ordering(&c5, &w), k);
        assert!(run(&c5).contiguity.k >= k);
        assert!(matches!(
            exact_contiguity(&path(9)),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(exact_contiguity(&Graph::empty(0)).unwrap().0, 0);
    }

    /// `2 |runs| - boundary touches` counts the path edges `N(v)` crosses.
    fn duality_holds(g: &Graph) -> bool {
        let p = run(g);
        let s = neighborhood_system(g);
        let (_, per_set) = crossing_number(&p.path.path, &s);
        (0..g.n()).all(|v| {
            let runs = &p.contiguity.per_vertex[v];
            2 * runs.len() - runs.boundary_touches(g.n()) == per_set[v]
        })
    }

    #[test]
    fn small_graphs_satisfy_the_invariants() {
        for n in 1..=6 {
            for g in nonisomorphic_graphs(n) {
                let p = run(&g);
                assert!(p.report.path_bound_holds, "{g:?}");
                assert!(duality_holds(&g), "{g:?}");
                let (opt, _) = exact_contiguity(&g).unwrap();
                assert!(opt <= p.contiguity.k);
                for (v, runs) in p.contiguity.per_vertex.iter().enumerate() {
                    let mut back: Vec<usize> = runs
                        .positions()
                        .map(|i| p.contiguity.ordering.order()[i])
                        .collect();
                    back.sort_unstable();
                    assert_eq!(back, g.neighbors(v).collect::<Vec<_>>());
                }
            }
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut e = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            e.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edge_list(n, &e).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn random_graphs_satisfy_the_invariants(g in arb_graph()) {
            prop_assert!(duality_holds(&g));
            let p = run(&g);
            prop_assert!(p.report.path_bound_holds);
            let (opt, w) = exact_contiguity(&g).unwrap();
            prop_assert!(opt <= p.contiguity.k);
            prop_assert!(opt <= contiguity_of_ordering(&g, &VertexOrdering::identity(g.n())));
            prop_assert_eq!(contiguity_of_ordering(&g, &w), opt);
        }
    }
}
