use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families. Parsed from and printed as `family:param:...`, e.g.
/// `star:5`, `complete_bipartite:2:3`, `circulant:8:4`, `gnp:50:0.1:7`.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `K_{1,n-1}`, centre is vertex 0.
    Star { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `k`-regular circulant on `n` vertices with offsets `1..=k/2`, plus the
    /// antipodal offset `n/2` when `k` is odd.
    CirculantRegular { n: usize, k: usize },
    /// Erdős–Rényi `G(n, p)`; the seed falls back to the one passed to
    /// [`generate`] when absent.
    Gnp { n: usize, p: f64, seed: Option<u64> },
}

/// Deterministic random stream `stream` under `seed`.
pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn generate(family: &Family, seed: Option<u64>) -> Result<Graph> {
    family.validate()?;
    match *family {
        Family::Star { n } => Graph::from_edge_list(n, (1..n).map(|v| (0, v))),
        Family::Path { n } => Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))),
        Family::Cycle { n } => Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n))),
        Family::Complete { n } => {
            Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite { a, b } => {
            Graph::from_edge_list(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::CirculantRegular { n, k } => {
            let mut edges: Vec<_> =
                (0..n).flat_map(|u| (1..=k / 2).map(move |j| (u, (u + j) % n))).collect();
            if k % 2 == 1 {
                edges.extend((0..n / 2).map(|u| (u, u + n / 2)));
            }
            Graph::from_edge_list(n, edges)
        }
        Family::Gnp { n, p, seed: own } => {
            let mut rng = rng_for(own.or(seed).unwrap_or(0), 0);
            Ok(gnp(n, p, &mut rng))
        }
    }
}

pub(crate) fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("valid G(n,p) edges")
}

impl Family {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Star { n }
            | Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::CirculantRegular { n, .. }
            | Family::Gnp { n, .. } => n,
            Family::CompleteBipartite { a, b } => a + b,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(Error::param(format!("{self}: vertex count must be at least 1")));
        }
        match *self {
            Family::Cycle { n } if n < 3 => Err(Error::param(format!("cycle needs n >= 3, got {n}"))),
            Family::CompleteBipartite { a, b } if a == 0 || b == 0 => {
                Err(Error::param("complete_bipartite needs both sides nonempty"))
            }
            Family::CirculantRegular { n, k } if k >= n => {
                Err(Error::param(format!("circulant degree k={k} must be below n={n}")))
            }
            Family::CirculantRegular { n, k } if k % 2 == 1 && n % 2 == 1 => {
                Err(Error::param(format!("circulant with odd k={k} needs even n, got {n}")))
            }
            Family::Gnp { p, .. } if !(0.0..=1.0).contains(&p) => {
                Err(Error::param(format!("gnp probability p={p} must lie in [0, 1]")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Star { n } => write!(f, "star:{n}"),
            Family::Path { n } => write!(f, "path:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::CompleteBipartite { a, b } => write!(f, "complete_bipartite:{a}:{b}"),
            Family::CirculantRegular { n, k } => write!(f, "circulant:{n}:{k}"),
            Family::Gnp { n, p, seed: None } => write!(f, "gnp:{n}:{p}"),
            Family::Gnp { n, p, seed: Some(s) } => write!(f, "gnp:{n}:{p}:{s}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let uint = |i: usize| -> Result<usize> {
            let token = args.get(i).ok_or_else(|| Error::param(format!("`{s}`: missing parameter {}", i + 1)))?;
            token.parse().map_err(|_| Error::param(format!("`{s}`: invalid integer `{token}`")))
        };
        let arity = |expected: &[usize]| -> Result<()> {
            if expected.contains(&args.len()) {
                Ok(())
            } else {
                Err(Error::param(format!("`{s}`: wrong number of parameters")))
            }
        };
        let family = match name {
            "star" => arity(&[1]).and_then(|_| Ok(Family::Star { n: uint(0)? })),
            "path" => arity(&[1]).and_then(|_| Ok(Family::Path { n: uint(0)? })),
            "cycle" => arity(&[1]).and_then(|_| Ok(Family::Cycle { n: uint(0)? })),
            "complete" => arity(&[1]).and_then(|_| Ok(Family::Complete { n: uint(0)? })),
            "complete_bipartite" | "bipartite" => {
                arity(&[2]).and_then(|_| Ok(Family::CompleteBipartite { a: uint(0)?, b: uint(1)? }))
            }
            "circulant" | "circulant_regular" => {
                arity(&[2]).and_then(|_| Ok(Family::CirculantRegular { n: uint(0)?, k: uint(1)? }))
            }
            "gnp" => arity(&[2, 3]).and_then(|_| {
                let p = args[1]
                    .parse()
                    .map_err(|_| Error::param(format!("`{s}`: invalid probability `{}`", args[1])))?;
                let seed = match args.get(2) {
                    Some(t) => Some(t.parse().map_err(|_| Error::param(format!("`{s}`: invalid seed `{t}`")))?),
                    None => None,
                };
                Ok(Family::Gnp { n: uint(0)?, p, seed })
            }),
            other => Err(Error::param(format!("unknown graph family `{other}`"))),
        }?;
        family.validate()?;
        Ok(family)
    }
}
