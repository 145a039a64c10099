//! Exhaustive isomorphism and automorphism search for small graphs.
//!
//! Both routines use individualisation and refinement: colour refinement
//! runs jointly on the two graphs, and while a colour class has several
//! vertices one of them is pinned against each candidate in turn.
//! Automorphisms are counted through orbits of successive point stabilisers,
//! so the search never lists the group itself.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Default vertex limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoLimits {
    pub automorphism: usize,
    pub isomorphism: usize,
}

impl Default for IsoLimits {
    fn default() -> Self {
        IsoLimits {
            automorphism: 9,
            isomorphism: 9,
        }
    }
}

/// Joint colour refinement of `g` and `h` from the given colourings, so that
/// the colour ids stay comparable across the two graphs.
fn refine(g: &Graph, h: &Graph, mut cg: Vec<u32>, mut ch: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
    let mut classes = usize::MAX;
    loop {
        let sig = |graph: &Graph, col: &[u32], v: Vertex| {
            let mut nb: Vec<u32> = graph.neighbors(v).map(|u| col[u]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len() as u32;
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cg, ch);
        }
        classes = ids.len();
    }
}

fn sorted(c: &[u32]) -> Vec<u32> {
    let mut c = c.to_vec();
    c.sort_unstable();
    c
}

/// Smallest colour class with more than one vertex, ties to the lower id.
fn target_cell(c: &[u32]) -> Option<u32> {
    let mut size: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in c {
        *size.entry(x).or_default() += 1;
    }
    size.into_iter()
        .filter(|&(_, s)| s > 1)
        .min_by_key(|&(x, s)| (s, x))
        .map(|(x, _)| x)
}

/// Whether a colour-preserving isomorphism `g -> h` exists. Refines, then
/// individualises one vertex of the smallest open cell of `g` against every
/// candidate in `h`.
fn coloured_iso(g: &Graph, h: &Graph, cg: Vec<u32>, ch: Vec<u32>) -> bool {
    let (cg, ch) = refine(g, h, cg, ch);
    if sorted(&cg) != sorted(&ch) {
        return false;
    }
    let Some(cell) = target_cell(&cg) else {
        let mut image = vec![0; h.n()];
        for (u, &c) in ch.iter().enumerate() {
            image[c as usize] = u;
        }
        return g
            .edges()
            .all(|(a, b)| h.has_edge(image[cg[a] as usize], image[cg[b] as usize]));
    };
    let fresh = 1 + cg.iter().chain(&ch).max().unwrap();
    let v = cg.iter().position(|&c| c == cell).unwrap();
    let mut cv = cg.clone();
    cv[v] = fresh;
    (0..h.n()).filter(|&u| ch[u] == cell).any(|u| {
        let mut cu = ch.clone();
        cu[u] = fresh;
        coloured_iso(g, h, cv.clone(), cu)
    })
}

/// `|Aut(g, c)|` as the product of orbit sizes along a chain of point
/// stabilisers.
fn coloured_aut_count(g: &Graph, c: Vec<u32>) -> Option<u64> {
    let (c, _) = refine(g, g, c.clone(), c);
    let Some(cell) = target_cell(&c) else {
        return Some(1);
    };
    let fresh = 1 + c.iter().max().unwrap();
    let members: Vec<Vertex> = (0..g.n()).filter(|&u| c[u] == cell).collect();
    let mut cv = c.clone();
    cv[members[0]] = fresh;
    let orbit = 1 + members[1..]
        .iter()
        .filter(|&&u| {
            let mut cu = c.clone();
            cu[u] = fresh;
            coloured_iso(g, g, cv.clone(), cu)
        })
        .count() as u64;
    orbit.checked_mul(coloured_aut_count(g, cv)?)
}

fn check_limit(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::TooLarge {
            what,
            size: n,
            limit,
        })
    } else {
        Ok(())
    }
}

/// `|Aut(g)|` using the default vertex limit.
pub fn automorphism_count(g: &Graph) -> Result<u64> {
    automorphism_count_within(g, IsoLimits::default().automorphism)
}

/// `|Aut(g)|` by enumerating every automorphism; refuses graphs with more than
/// `limit` vertices.
pub fn automorphism_count_within(g: &Graph, limit: usize) -> Result<u64> {
    check_limit("automorphism count", g.n(), limit)?;
    coloured_aut_count(g, vec![0; g.n()])
        .ok_or_else(|| Error::input("automorphism count overflows u64"))
}

/// Isomorphism test using the default vertex limit.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_within(g, h, IsoLimits::default().isomorphism)
}

pub fn are_isomorphic_within(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    check_limit("isomorphism test", g.n().max(h.n()), limit)?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(coloured_iso(g, h, vec![0; g.n()], vec![0; h.n()]))
}

/// Number of labelled graphs isomorphic to one of `graphs`, i.e. the sum of
/// `n!/aut(G)`. The graphs must share one order and be pairwise
/// non-isomorphic; the latter is checked for lists of at most 20 graphs.
pub fn count_labeled(graphs: &[Graph]) -> Result<BigUint> {
    let Some(first) = graphs.first() else {
        return Ok(BigUint::default());
    };
    let n = first.n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::input(format!(
            "all graphs must have {n} vertices, found one with {}",
            g.n()
        )));
    }
    if graphs.len() <= 20 {
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                if are_isomorphic(&graphs[i], &graphs[j])? {
                    return Err(Error::input(format!("graphs {i} and {j} are isomorphic")));
                }
            }
        }
    }
    let fact: BigUint = (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k);
    let mut total = BigUint::default();
    for g in graphs {
        total += &fact / automorphism_count(g)?;
    }
    Ok(total)
}
