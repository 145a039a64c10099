use super::{Graph, Vertex, VertexOrdering};

/// Outcome of a min-degree elimination.
///
/// `ordering` lists the vertices so that each one has at most `d` neighbours
/// before it: it is the elimination sequence read backwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub ordering: VertexOrdering,
    pub d: usize,
    pub back_degrees: Vec<usize>,
}

impl DegeneracyResult {
    /// Neighbours of `v` that precede it in `ordering`.
    pub fn back_neighbors<'a>(
        &'a self,
        g: &'a Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'a {
        let pv = self.ordering.pos(v);
        g.neighbors(v).filter(move |&u| self.ordering.pos(u) < pv)
    }
}

/// Repeatedly removes a vertex of minimum remaining degree (smallest id on
/// ties). `d` is the largest degree seen at removal time.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyResult {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut elimination = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        d = d.max(deg[v]);
        removed[v] = true;
        elimination.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    elimination.reverse();
    let ordering = VertexOrdering::new(elimination).expect("elimination visits every vertex once");
    let back_degrees = (0..n)
        .map(|v| {
            let pv = ordering.pos(v);
            g.neighbors(v).filter(|&u| ordering.pos(u) < pv).count()
        })
        .collect();
    DegeneracyResult {
        ordering,
        d,
        back_degrees,
    }
}

/// The `t`-core: repeatedly deletes the smallest-id vertex of degree `< t`.
/// Returns the surviving induced subgraph and the original ids of its vertices.
pub fn peel_to_min_degree(g: &Graph, t: usize) -> (Graph, Vec<Vertex>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    while let Some(v) = (0..n).find(|&v| alive[v] && deg[v] < t) {
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    let keep: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    g.induced_subgraph(&keep)
        .expect("kept vertices are in range")
}
