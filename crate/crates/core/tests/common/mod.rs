//! Reference computations that share no code with the library: dense
//! matrices, a symmetric eigensolver and plain matrix powers.
#![allow(dead_code)]

use degdev_core::Graph;
use nalgebra::DMatrix;
use proptest::prelude::*;

pub fn dense(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
pub fn oracle_rho(g: &Graph) -> f64 {
    dense(g).symmetric_eigen().eigenvalues.iter().copied().fold(0.0, f64::max)
}

/// `s` from its definition, as `(numerator, denominator)` over `n`.
pub fn oracle_s_times_n(g: &Graph) -> (i64, i64) {
    let n = g.n() as i64;
    let two_m = 2 * g.m() as i64;
    let sum: i64 = (0..g.n()).map(|u| (g.degree(u) as i64 * n - two_m).abs()).sum();
    (sum, n)
}

/// Row sums of `sum_k c_k A^k` from explicit integer matrix powers.
pub fn oracle_row_sums(g: &Graph, coeffs: &[i64]) -> Vec<i128> {
    let n = g.n();
    let mut a = vec![vec![0i128; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    let mut power: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut sums = vec![0i128; n];
    for &c in coeffs {
        for (i, row) in power.iter().enumerate() {
            sums[i] += i128::from(c) * row.iter().sum::<i128>();
        }
        power = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| power[i][k] * a[k][j]).sum()).collect())
            .collect();
    }
    sums
}

/// Graph on `1..=max_n` vertices with each pair present independently.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, edges).unwrap()
        })
    })
}
