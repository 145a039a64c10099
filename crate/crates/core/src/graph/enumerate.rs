use std::collections::HashMap;

use super::iso::are_isomorphic_within;
use super::Graph;

/// One representative of every isomorphism class of graphs on `n` vertices.
///
/// Built by adding a vertex with every possible neighbourhood to each class
/// on `n - 1` vertices, then merging isomorphic candidates. The output order
/// is deterministic (by edge count, then discovery order). Practical up to
/// `n = 7`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let smaller = nonisomorphic_graphs(n - 1);
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Graph> = Vec::new();
    for base in &smaller {
        for mask in 0u32..1 << (n - 1) {
            let mut g = Graph::empty(n);
            for (u, v) in base.edges() {
                g.insert_edge(u, v);
            }
            for u in 0..n - 1 {
                if mask >> u & 1 == 1 {
                    g.insert_edge(u, n - 1);
                }
            }
            let key = invariant(&g);
            let bucket = buckets.entry(key).or_default();
            if bucket
                .iter()
                .any(|&i| are_isomorphic_within(&reps[i], &g, usize::MAX).expect("no limit"))
            {
                continue;
            }
            bucket.push(reps.len());
            reps.push(g);
        }
    }
    reps.sort_by_key(|g| g.edge_count());
    reps
}

/// Isomorphism invariant: sorted (degree, sorted neighbour degrees, triangles
/// through the vertex) per vertex, flattened.
fn invariant(g: &Graph) -> Vec<usize> {
    let mut rows: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let tri = g
                .neighbors(v)
                .map(|u| {
                    let mut common = g.neighborhood(u).clone();
                    common.intersect_with(g.neighborhood(v));
                    common.count_ones(..)
                })
                .sum::<usize>();
            let mut row = vec![g.degree(v), tri];
            row.extend(nd);
            row
        })
        .collect();
    rows.sort();
    let mut flat = vec![g.edge_count()];
    for r in rows {
        flat.push(usize::MAX);
        flat.extend(r);
    }
    flat
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        // OEIS A000088
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).len(), count, "n = {n}");
        }
    }
}
