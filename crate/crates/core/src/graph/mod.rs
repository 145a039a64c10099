//! Undirected simple graphs over `0..n` and the primitives built on them.
//!
//! Adjacency is stored as one bitset per vertex, which keeps neighbourhood
//! intersections and the neighbourhood set system cheap to build.

mod degeneracy;
mod enumerate;
mod iso;
mod ops;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use degeneracy::{degeneracy_ordering, peel_to_min_degree, DegeneracyResult};
pub use enumerate::nonisomorphic_graphs;
pub use iso::{
    are_isomorphic, are_isomorphic_within, automorphism_count, automorphism_count_within,
    count_labeled, IsoLimits,
};
pub use ops::{contains_biclique, subdivide, Subdivision, VertexRole};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from a list of vertex pairs. Parallel pairs are merged.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop ({u},{v}) is not allowed")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    /// Neighbourhood of `v` as a bitset over `0..n`.
    pub fn neighborhood(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].ones() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.count_ones(..) == self.n
    }

    /// Subgraph induced by `vertices`. Vertex `i` of the result is
    /// `vertices[i]` after sorting and deduplication; that map is returned too.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let mut keep: Vec<Vertex> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!(
                "vertex {bad} is not in 0..{}",
                self.n
            )));
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for u in self.adj[v].ones() {
                let j = index[u];
                if j != usize::MAX && j > i {
                    h.insert_edge(i, j);
                }
            }
        }
        Ok((h, keep))
    }

    /// Relabels vertices so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.insert_edge(perm[u], perm[v]);
        }
        h
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. Anything after `#` on a line is ignored.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body)?;
            if u >= n || v >= n || u == v {
                return Err(Error::Parse {
                    line,
                    msg: format!("invalid edge ({u},{v}) for n = {n}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Writes the graph in the edge-list text format.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {name}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A permutation of the vertices together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::input(format!(
                    "ordering is not a permutation of 0..{n} (offending entry {v})"
                )));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertices in order.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Position of `v` in the ordering.
    pub fn pos(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn edge_list_construction() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(1, 0));

        let e = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(e.n(), 2);

        let d = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(d.edge_count(), 2);
    }

    #[test]
    fn edge_list_rejects_bad_pairs() {
        let err = Graph::from_edge_list(3, &[(0, 3)]).unwrap_err();
        assert!(err.to_string().contains("(0,3)"));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn induced_subgraphs() {
        let (h, map) = cycle(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h, path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (k3, _) = complete(4).induced_subgraph(&[3, 0, 2]).unwrap();
        assert_eq!(k3, complete(3));

        // P5 restricted to alternate vertices has no edges left
        let (e, _) = path(5).induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(e.n(), 3);
        for u in 0..3 {
            for v in 0..3 {
                assert!(!e.has_edge(u, v));
            }
        }

        assert!(path(3).induced_subgraph(&[0, 5]).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a path\n4 3\n0 1\n1 2 # middle\n\n2 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, path(4));
        assert_eq!(Graph::parse(&g.to_edge_list_string()).unwrap(), g);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!(Graph::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            Graph::parse("3 2\n0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("3 1\n0 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn ordering_validates_permutation() {
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.pos(2), 0);
        assert_eq!(o.pos(1), 2);
        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
        assert!(VertexOrdering::new(vec![0, 3, 1]).is_err());
    }
}
