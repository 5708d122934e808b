//! Brute-force oracles and graph strategies shared by the integration tests.
//! Nothing here calls into the solvers under test.

#![allow(dead_code)]

use burning::Graph;
use proptest::prelude::*;

pub const INF: usize = usize::MAX;

/// All-pairs hop distances by Floyd-Warshall over the edge list.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Coverage masks `cover[v][r]` of the ball around `v` with radius `r`, for `r < n`.
pub fn ball_masks(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let d = floyd(g);
    (0..n)
        .map(|v| {
            (0..n.max(1))
                .map(|r| (0..n).filter(|&u| d[v][u] <= r).fold(0u64, |m, u| m | 1 << u))
                .collect()
        })
        .collect()
}

/// Smallest `b` such that some choice of one center per radius `0..b` covers
/// every vertex. Centers may repeat; that never helps but keeps the oracle
/// free of any reduction argument.
pub fn brute_burning_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!((1..=16).contains(&n));
    let balls = ball_masks(g);
    let full = (1u64 << n) - 1;
    fn go(balls: &[Vec<u64>], full: u64, radius: usize, covered: u64) -> bool {
        if covered == full {
            return true;
        }
        balls.iter().any(|b| {
            let next = covered | b[radius];
            if radius == 0 {
                next == full
            } else {
                go(balls, full, radius - 1, next)
            }
        })
    }
    (1..=n).find(|&b| go(&balls, full, b - 1, 0)).expect("b = n always works")
}

/// Smallest dominating set size, by enumerating subsets in order of size.
pub fn brute_domination_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &u| m | 1 << u))
        .collect();
    let full = (1u64 << n) - 1;
    (0..=n)
        .find(|&k| subsets(n, k).any(|s| s.iter().fold(0, |m, &v| m | closed[v]) == full))
        .unwrap()
}

pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn ceil_sqrt(n: usize) -> usize {
    (1..).find(|k| k * k >= n).unwrap()
}

/// A tree decoded from a Prüfer sequence; `n >= 2` needs `n - 2` labels.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e);
            Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
        })
    })
}

pub fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n.saturating_sub(2)).prop_map(move |seq| prufer_tree(n, &seq))
    })
}

/// A tree with some edges removed.
pub fn arb_forest(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_tree(1, max_n).prop_flat_map(|t| {
        let m = t.edge_count();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = t.edges().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            Graph::from_edges(t.vertex_count(), edges).unwrap()
        })
    })
}
