use super::tree::{build_low_crossing_tree, BuildOptions, TreeCertificate};
use super::{crossing_number, EdgePairList};
use crate::error::{Error, Result};
use crate::set_system::SetSystem;

/// Largest ground set accepted by [`optimal_path_crossing`].
pub const OPTIMAL_PATH_LIMIT: usize = 8;

/// Shortcuts a DFS of `tree` from `root` into a Hamiltonian path. Children
/// are visited in ascending order; the path follows discovery order.
pub fn tree_to_path(tree: &EdgePairList, root: usize) -> Result<EdgePairList> {
    let order = dfs_order(tree, root)?;
    let pairs: Vec<_> = order.windows(2).map(|w| (w[0], w[1])).collect();
    EdgePairList::new(tree.ground_size(), &pairs)
}

fn dfs_order(tree: &EdgePairList, root: usize) -> Result<Vec<usize>> {
    let n = tree.ground_size();
    if root >= n {
        return Err(Error::input(format!(
            "root {root} is outside the ground set 0..{n}"
        )));
    }
    tree.check_spanning_tree()?;
    let adj = tree.adjacency();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        stack.extend(adj[v].iter().rev().filter(|&&w| !seen[w]));
    }
    Ok(order)
}

#[derive(Clone, Debug)]
pub struct PathCertificate {
    pub tree: TreeCertificate,
    pub path: EdgePairList,
    /// Path points in traversal order, starting at the DFS root 0.
    pub order: Vec<usize>,
    pub tree_crossing: usize,
    pub path_crossing: usize,
    pub per_set_path_crossing: Vec<usize>,
}

impl PathCertificate {
    /// First set whose path crossing exceeds twice its tree crossing.
    pub fn factor_two_violation(&self) -> Option<usize> {
        self.per_set_path_crossing
            .iter()
            .zip(&self.tree.per_set_crossing)
            .position(|(&p, &t)| p > 2 * t)
    }

    pub fn factor_two_holds(&self) -> bool {
        self.factor_two_violation().is_none() && self.path_crossing <= 2 * self.tree_crossing
    }
}

/// Low-crossing tree followed by the DFS shortcut from point 0.
pub fn build_low_crossing_path(s: &SetSystem, opts: &BuildOptions) -> Result<PathCertificate> {
    let tree = build_low_crossing_tree(s, opts)?;
    let order = dfs_order(&tree.edges, 0)?;
    let pairs: Vec<_> = order.windows(2).map(|w| (w[0], w[1])).collect();
    let path = EdgePairList::new(s.ground_size(), &pairs)?;
    let (path_crossing, per_set_path_crossing) = crossing_number(&path, s);
    Ok(PathCertificate {
        tree_crossing: tree.measured_crossing,
        tree,
        path,
        order,
        path_crossing,
        per_set_path_crossing,
    })
}

/// Minimum crossing number over all Hamiltonian paths, with the first
/// optimal point order found (first point smaller than last).
pub fn optimal_path_crossing(s: &SetSystem) -> Result<(usize, EdgePairList)> {
    let n = s.ground_size();
    if n > OPTIMAL_PATH_LIMIT {
        return Err(Error::TooLarge {
            what: "optimal path crossing",
            size: n,
            limit: OPTIMAL_PATH_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::input("the ground set is empty"));
    }
    let mut search = PathSearch {
        s,
        counts: vec![0; s.len()],
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: usize::MAX,
        witness: Vec::new(),
    };
    search.extend(0);
    let pairs: Vec<_> = search.witness.windows(2).map(|w| (w[0], w[1])).collect();
    Ok((search.best, EdgePairList::new(n, &pairs)?))
}

struct PathSearch<'a> {
    s: &'a SetSystem,
    counts: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: usize,
    witness: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, current: usize) {
        let n = self.used.len();
        if self.order.len() == n {
            if self.order[0] <= self.order[n - 1] && current < self.best {
                self.best = current;
                self.witness = self.order.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let mut touched = Vec::new();
            let mut next = current;
            if let Some(&u) = self.order.last() {
                for (i, set) in self.s.sets().iter().enumerate() {
                    if set.contains(u) != set.contains(v) {
                        self.counts[i] += 1;
                        next = next.max(self.counts[i]);
                        touched.push(i);
                    }
                }
            }
            if next < self.best {
                self.used[v] = true;
                self.order.push(v);
                self.extend(next);
                self.order.pop();
                self.used[v] = false;
            }
            for i in touched {
                self.counts[i] -= 1;
            }
        }
    }
}
