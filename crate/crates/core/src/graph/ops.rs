use fixedbitset::FixedBitSet;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Where a vertex of a subdivided graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// An original vertex of the base graph.
    Branching(Vertex),
    /// The `index`-th inner vertex (from `edge.0` towards `edge.1`) of the
    /// path that replaced `edge`.
    Subdivision {
        edge: (Vertex, Vertex),
        index: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
}

/// Replaces every edge by a path through `r` new vertices. Original vertices
/// keep their ids; inner path vertices follow in edge order.
pub fn subdivide(g: &Graph, r: usize) -> Subdivision {
    let m = g.edge_count();
    let total = g.n() + r * m;
    let mut h = Graph::empty(total);
    let mut roles: Vec<VertexRole> = (0..g.n()).map(VertexRole::Branching).collect();
    let mut next = g.n();
    for (u, v) in g.edges() {
        let mut prev = u;
        for index in 0..r {
            roles.push(VertexRole::Subdivision {
                edge: (u, v),
                index,
            });
            h.insert_edge(prev, next);
            prev = next;
            next += 1;
        }
        h.insert_edge(prev, v);
    }
    debug_assert_eq!(next, total);
    Subdivision { graph: h, roles }
}

/// Whether `K_{t,t}` is a (not necessarily induced) subgraph of `g`.
///
/// Enumerates `t`-subsets of one side, pruning as soon as the common
/// neighbourhood drops below `t` vertices. Refuses graphs with more than
/// `limit` vertices.
pub fn contains_biclique(g: &Graph, t: usize, limit: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::input("biclique size t must be at least 1"));
    }
    if g.n() > limit {
        return Err(Error::TooLarge {
            what: "biclique search",
            size: g.n(),
            limit,
        });
    }
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    Ok(extend_side(g, t, 0, 0, &all))
}

fn extend_side(g: &Graph, t: usize, chosen: usize, start: Vertex, common: &FixedBitSet) -> bool {
    if chosen == t {
        return true;
    }
    for a in start..g.n() {
        if g.n() - a < t - chosen {
            break;
        }
        let mut next = common.clone();
        next.intersect_with(g.neighborhood(a));
        if next.count_ones(..) >= t && extend_side(g, t, chosen + 1, a + 1, &next) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::graph::are_isomorphic;

    fn grid(r: usize, c: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                if j + 1 < c {
                    e.push((v, v + 1));
                }
                if i + 1 < r {
                    e.push((v, v + c));
                }
            }
        }
        Graph::from_edge_list(r * c, &e).unwrap()
    }

    /// Direct search over all ordered pairs of disjoint t-subsets.
    fn brute_biclique(g: &Graph, t: usize) -> bool {
        let n = g.n();
        let subsets: Vec<u32> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == t)
            .collect();
        subsets.iter().any(|&a| {
            subsets.iter().any(|&b| {
                a & b == 0
                    && (0..n).filter(|&i| a >> i & 1 == 1).all(|i| {
                        (0..n)
                            .filter(|&j| b >> j & 1 == 1)
                            .all(|j| g.has_edge(i, j))
                    })
            })
        })
    }

    #[test]
    fn biclique_examples() {
        assert!(!contains_biclique(&cycle(5), 2, 64).unwrap());
        assert!(contains_biclique(&biclique(3, 3), 3, 64).unwrap());
        // every unit square of the grid is a K_{2,2}
        let g = grid(3, 3);
        assert!(brute_biclique(&g, 2));
        assert!(contains_biclique(&g, 2, 64).unwrap());
        assert!(!contains_biclique(&g, 3, 64).unwrap());
        assert!(contains_biclique(&cycle(4), 2, 64).unwrap());
    }

    #[test]
    fn biclique_guards() {
        assert!(matches!(
            contains_biclique(&path(3), 0, 64),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            contains_biclique(&path(70), 2, 64),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn biclique_matches_brute_force() {
        for g in crate::graph::nonisomorphic_graphs(6) {
            for t in 1..=3 {
                assert_eq!(
                    contains_biclique(&g, t, 64).unwrap(),
                    brute_biclique(&g, t),
                    "{g:?} t={t}"
                );
            }
        }
    }

    #[test]
    fn subdivision_examples() {
        let s = subdivide(&complete(3), 1);
        assert_eq!(s.graph.n(), 6);
        assert!(are_isomorphic(&s.graph, &cycle(6)).unwrap());

        let g = cycle(5);
        let s0 = subdivide(&g, 0);
        assert_eq!(s0.graph, g);
        assert!(s0
            .roles
            .iter()
            .enumerate()
            .all(|(i, r)| *r == VertexRole::Branching(i)));

        let s3 = subdivide(&path(2), 3);
        assert_eq!(s3.graph.n(), 5);
        assert!(are_isomorphic(&s3.graph, &path(5)).unwrap());
        assert_eq!(
            s3.roles[2],
            VertexRole::Subdivision {
                edge: (0, 1),
                index: 0
            }
        );
    }

    #[test]
    fn subdivision_sizes() {
        let g = biclique(2, 3);
        for r in 0..4 {
            let s = subdivide(&g, r);
            assert_eq!(s.graph.n(), g.n() + r * g.edge_count());
            assert_eq!(s.graph.edge_count(), (r + 1) * g.edge_count());
        }
    }
}
