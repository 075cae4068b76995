//! Simple undirected graphs and the constructions the bounds are checked on.

mod edgelist;
mod generate;
pub mod graph6;
mod stats;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use generate::{generate, Family};
pub(crate) use generate::{gnp, rng_for};
pub use stats::{degree_stats, DegreeStats};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are stored sorted in one flat array (CSR layout). Loops and
/// parallel edges cannot be represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

/// A connected component together with its vertex map into the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[local] = parent vertex`.
    pub vertices: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse to one edge.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut lists = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(lists))
    }

    /// Builds the graph whose edges are the set bits of `mask`, read in graph6
    /// order: bit `k` is the `k`-th pair of the sequence
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub fn from_upper_mask(n: usize, mask: u64) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let pairs = n * (n - 1) / 2;
        if pairs > 64 || (pairs < 64 && mask >> pairs != 0) {
            return Err(Error::param(format!(
                "edge mask does not fit the {pairs} vertex pairs of a graph on {n} vertices"
            )));
        }
        let mut lists = vec![Vec::new(); n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    lists[i].push(j);
                    lists[j].push(i);
                }
                bit += 1;
            }
        }
        for list in &mut lists {
            list.sort_unstable();
        }
        Ok(Self::from_sorted_lists(lists))
    }

    fn from_sorted_lists(lists: Vec<Vec<usize>>) -> Graph {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let total: usize = lists.iter().map(Vec::len).sum();
        let mut neighbors = Vec::with_capacity(total);
        offsets.push(0);
        for list in lists {
            neighbors.extend_from_slice(&list);
            offsets.push(neighbors.len());
        }
        Graph { n, m: total / 2, offsets, neighbors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// `out = A x`.
    pub fn adjacency_mul(&self, x: &[f64], out: &mut [f64]) {
        for (u, slot) in out.iter_mut().enumerate() {
            *slot = self.neighbors(u).iter().map(|&v| x[v]).sum();
        }
    }

    pub fn is_regular(&self) -> bool {
        (1..self.n).all(|u| self.degree(u) == self.degree(0))
    }

    /// Maximal connected subgraphs, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |c| c + 1);
        let mut members = vec![Vec::new(); count];
        for (u, &c) in labels.iter().enumerate() {
            members[c].push(u);
        }
        if count == 1 {
            return vec![Component { graph: self.clone(), vertices: members.pop().unwrap() }];
        }
        members
            .into_iter()
            .map(|vertices| Component { graph: self.induced(&vertices), vertices })
            .collect()
    }

    /// Component index per vertex; components are numbered by smallest vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut labels = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        let mut next = 0;
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            labels[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if labels[v] == usize::MAX {
                        labels[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        labels
    }

    // `vertices` must be a whole component (sorted), so every neighbour maps.
    fn induced(&self, vertices: &[usize]) -> Graph {
        let local = |v: usize| vertices.binary_search(&v).expect("neighbour inside component");
        let lists = vertices
            .iter()
            .map(|&u| self.neighbors(u).iter().map(|&v| local(v)).collect())
            .collect();
        Self::from_sorted_lists(lists)
    }

    /// The `t`-fold blow-up: every vertex `u` becomes the independent set
    /// `{u*t, ..., u*t + t - 1}` and every edge `uv` becomes a complete
    /// bipartite join between the two sets.
    pub fn blow_up(&self, t: usize) -> Result<Graph> {
        self.blow_up_limited(t, usize::MAX)
    }

    /// [`Graph::blow_up`] with a cap on the resulting vertex count.
    pub fn blow_up_limited(&self, t: usize, max_vertices: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::param("blow-up factor t must be at least 1"));
        }
        let requested = self.n.saturating_mul(t);
        if requested > max_vertices {
            return Err(Error::TooLarge { requested, limit: max_vertices });
        }
        let lists = (0..requested)
            .map(|x| {
                let u = x / t;
                self.neighbors(u).iter().flat_map(|&v| v * t..v * t + t).collect()
            })
            .collect();
        Ok(Self::from_sorted_lists(lists))
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &[u8]) -> Result<Graph> {
        graph6::decode(text)
    }
}
