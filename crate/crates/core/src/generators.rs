//! Seeded graph families and the fixed test corpus.
//!
//! Random families draw from [`crate::rng`] (ChaCha8), so a spec always
//! yields the same graph on every platform.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graph::{subdivide, Graph};
use crate::rng;
use crate::set_system::SetSystem;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
    RandomGnp {
        n: usize,
        p: f64,
    },
    /// Each vertex joins `min(d, i)` random earlier vertices.
    RandomDDegenerate {
        n: usize,
        d: usize,
    },
    RandomBipartite {
        a: usize,
        b: usize,
        p: f64,
    },
    /// The `r`-subdivision of the base family (drawn with the same seed).
    Subdivided {
        base: Box<Family>,
        r: usize,
    },
}

/// Family names without parameters, as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Grid,
    RandomGnp,
    RandomDDegenerate,
    RandomBipartite,
    Subdivided,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Star,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Grid,
        FamilyKind::RandomGnp,
        FamilyKind::RandomDDegenerate,
        FamilyKind::RandomBipartite,
        FamilyKind::Subdivided,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Grid => "grid",
            FamilyKind::RandomGnp => "random_gnp",
            FamilyKind::RandomDDegenerate => "random_d_degenerate",
            FamilyKind::RandomBipartite => "random_bipartite",
            FamilyKind::Subdivided => "subdivided",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
                Error::input(format!(
                    "unknown family {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Path { .. } => FamilyKind::Path,
            Family::Cycle { .. } => FamilyKind::Cycle,
            Family::Star { .. } => FamilyKind::Star,
            Family::Complete { .. } => FamilyKind::Complete,
            Family::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            Family::Grid { .. } => FamilyKind::Grid,
            Family::RandomGnp { .. } => FamilyKind::RandomGnp,
            Family::RandomDDegenerate { .. } => FamilyKind::RandomDDegenerate,
            Family::RandomBipartite { .. } => FamilyKind::RandomBipartite,
            Family::Subdivided { .. } => FamilyKind::Subdivided,
        }
    }

    /// A member of `kind` with about `n` vertices and default parameters.
    pub fn sized(kind: FamilyKind, n: usize) -> Family {
        let p = (6.0 / n.max(1) as f64).min(0.5);
        match kind {
            FamilyKind::Path => Family::Path { n },
            FamilyKind::Cycle if n >= 3 => Family::Cycle { n },
            FamilyKind::Cycle => Family::Path { n },
            FamilyKind::Star => Family::Star {
                leaves: n.saturating_sub(1),
            },
            FamilyKind::Complete => Family::Complete { n },
            FamilyKind::CompleteBipartite => Family::CompleteBipartite {
                a: n / 2,
                b: n - n / 2,
            },
            FamilyKind::Grid => {
                let rows = (1..=n.isqrt().max(1))
                    .rev()
                    .find(|&r| n.is_multiple_of(r))
                    .unwrap_or(1);
                Family::Grid {
                    rows,
                    cols: n / rows.max(1),
                }
            }
            FamilyKind::RandomGnp => Family::RandomGnp { n, p },
            FamilyKind::RandomDDegenerate => Family::RandomDDegenerate { n, d: 3 },
            FamilyKind::RandomBipartite => Family::RandomBipartite {
                a: n / 2,
                b: n - n / 2,
                p,
            },
            // a cycle on n/2 vertices, each edge split once
            FamilyKind::Subdivided => Family::Subdivided {
                base: Box::new(Family::sized(FamilyKind::Cycle, n / 2)),
                r: 1,
            },
        }
    }

    fn validate(&self) -> Result<()> {
        let prob = |p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::input(format!(
                    "edge probability {p} is outside [0, 1]"
                )))
            }
        };
        match self {
            Family::Cycle { n } if *n < 3 => Err(Error::input(format!(
                "a cycle needs at least 3 vertices, got {n}"
            ))),
            Family::RandomGnp { p, .. } | Family::RandomBipartite { p, .. } => prob(*p),
            Family::Subdivided { base, .. } => base.validate(),
            _ => Ok(()),
        }
    }

    fn build(&self, rng: &mut rng::Rng) -> Graph {
        let mut edges = Vec::new();
        let n = match *self {
            Family::Path { n } => {
                edges.extend((1..n).map(|i| (i - 1, i)));
                n
            }
            Family::Cycle { n } => {
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
                n
            }
            Family::Star { leaves } => {
                edges.extend((1..=leaves).map(|i| (0, i)));
                leaves + 1
            }
            Family::Complete { n } => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
                n
            }
            Family::CompleteBipartite { a, b } => {
                for u in 0..a {
                    edges.extend((a..a + b).map(|v| (u, v)));
                }
                a + b
            }
            Family::Grid { rows, cols } => {
                for i in 0..rows {
                    for j in 0..cols {
                        let v = i * cols + j;
                        if j + 1 < cols {
                            edges.push((v, v + 1));
                        }
                        if i + 1 < rows {
                            edges.push((v, v + cols));
                        }
                    }
                }
                rows * cols
            }
            Family::RandomGnp { n, p } => {
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                n
            }
            Family::RandomDDegenerate { n, d } => {
                for v in 1..n {
                    let k = d.min(v);
                    edges.extend(index::sample(rng, v, k).into_iter().map(|u| (u, v)));
                }
                n
            }
            Family::RandomBipartite { a, b, p } => {
                for u in 0..a {
                    for v in a..a + b {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                a + b
            }
            Family::Subdivided { ref base, r } => return subdivide(&base.build(rng), r).graph,
        };
        Graph::from_edge_list(n, &edges).expect("generated edges are valid")
    }

    /// Short human-readable description, e.g. `random_gnp(n=8,p=0.5)`.
    pub fn describe(&self) -> String {
        match self {
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => {
                format!("{}(n={n})", self.kind())
            }
            Family::Star { leaves } => format!("star(leaves={leaves})"),
            Family::CompleteBipartite { a, b } => format!("complete_bipartite(a={a},b={b})"),
            Family::Grid { rows, cols } => format!("grid({rows}x{cols})"),
            Family::RandomGnp { n, p } => format!("random_gnp(n={n},p={p})"),
            Family::RandomDDegenerate { n, d } => format!("random_d_degenerate(n={n},d={d})"),
            Family::RandomBipartite { a, b, p } => format!("random_bipartite(a={a},b={b},p={p})"),
            Family::Subdivided { base, r } => format!("subdivided(r={r},{})", base.describe()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GeneratorSpec { family, seed }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.family.validate()?;
    Ok(spec.family.build(&mut rng::seeded(spec.seed)))
}

/// A random set system: `num_sets` sets, each point included with
/// probability `p`.
pub fn random_set_system(n: usize, num_sets: usize, p: f64, seed: u64) -> Result<SetSystem> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!(
            "inclusion probability {p} is outside [0, 1]"
        )));
    }
    let mut rng = rng::seeded(seed);
    let sets: Vec<Vec<usize>> = (0..num_sets)
        .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    SetSystem::new(n, &sets)
}

/// The `i`-th system of the seeded survey family used by the packing checks:
/// up to 16 points, up to 24 sets, varied densities.
pub fn survey_set_system(i: u64) -> SetSystem {
    let mut rng = rng::seeded(0x5e7 ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let n = rng.gen_range(2..=16);
    let num_sets = rng.gen_range(1..=24);
    let p = rng.gen_range(0.1..0.9);
    random_set_system(n, num_sets, p, rng.gen()).expect("valid parameters")
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub spec: GeneratorSpec,
    pub graph: Graph,
}

impl CorpusEntry {
    pub fn name(&self) -> String {
        format!("{}#{}", self.spec.family.describe(), self.spec.seed)
    }
}

/// The fixed corpus: every family on 1 to 16 vertices, plus seeded members
/// with 32, 64 and 128 vertices.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut specs = Vec::new();
    let mut add = |family: Family, seed: u64| specs.push(GeneratorSpec::new(family, seed));
    for n in 1..=16usize {
        add(Family::Path { n }, 0);
        add(Family::Star { leaves: n - 1 }, 0);
        add(Family::Complete { n }, 0);
        if n >= 3 {
            add(Family::Cycle { n }, 0);
        }
        if n >= 2 {
            add(
                Family::CompleteBipartite {
                    a: n / 2,
                    b: n - n / 2,
                },
                0,
            );
            add(
                Family::CompleteBipartite {
                    a: 1.max(n / 4),
                    b: n - 1.max(n / 4),
                },
                0,
            );
        }
        add(Family::sized(FamilyKind::Grid, n), 0);
        for (i, p) in [0.2, 0.5].into_iter().enumerate() {
            for seed in 0..2 {
                add(
                    Family::RandomGnp { n, p },
                    100 * n as u64 + 10 * i as u64 + seed,
                );
            }
        }
        for d in 1..=3 {
            add(
                Family::RandomDDegenerate { n, d },
                200 * n as u64 + d as u64,
            );
        }
        add(Family::RandomGnp { n, p: 0.8 }, 100 * n as u64 + 50);
        add(
            Family::RandomBipartite {
                a: n / 2,
                b: n - n / 2,
                p: 0.5,
            },
            300 * n as u64,
        );
    }
    for (t, r) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)] {
        add(
            Family::Subdivided {
                base: Box::new(Family::Complete { n: t }),
                r,
            },
            0,
        );
    }
    for (n, r) in [(4, 1), (5, 1), (6, 1), (4, 2), (7, 1)] {
        add(
            Family::Subdivided {
                base: Box::new(Family::RandomGnp { n, p: 0.5 }),
                r,
            },
            400 + n as u64,
        );
    }
    for n in [32usize, 64, 128] {
        for kind in FamilyKind::ALL {
            add(Family::sized(kind, n), 1000 + n as u64);
        }
        add(Family::RandomGnp { n, p: 0.3 }, 2000 + n as u64);
        add(Family::RandomGnp { n, p: 0.05 }, 2500 + n as u64);
        add(Family::RandomDDegenerate { n, d: 2 }, 3000 + n as u64);
        add(Family::RandomDDegenerate { n, d: 3 }, 3001 + n as u64);
    }
    specs
        .into_iter()
        .map(|spec| CorpusEntry {
            graph: generate(&spec).expect("corpus specs are valid"),
            spec,
        })
        .collect()
}
