#![allow(dead_code)]

use std::collections::VecDeque;

use linesym_core::{catalog, CatalogName, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn named(s: &str) -> Graph {
    catalog(&s.parse::<CatalogName>().unwrap()).unwrap()
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Any graph on `n` vertices, each pair present with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// Whether `g` has a cycle of length exactly `k`, by DFS over simple paths.
pub fn has_cycle_of_length(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, start: usize, path: &mut Vec<usize>, k: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == k {
            return g.has_edge(last, start);
        }
        for &w in g.adj(last) {
            if w > start && !path.contains(&w) {
                path.push(w);
                if go(g, start, path, k) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.order()).any(|v| go(g, v, &mut vec![v], k))
}

/// Connected simple cubic graph from the pairing model, without 5-cycles.
pub fn random_cubic_c5_free<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n.is_multiple_of(2) && n >= 4);
    loop {
        let mut points: Vec<usize> = (0..3 * n).collect();
        points.shuffle(rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0] / 3, c[1] / 3)).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Graph::new(n, pairs).unwrap();
        if g.is_regular() == Some(3) && g.is_connected() && !has_cycle_of_length(&g, 5) {
            return g;
        }
    }
}

/// Automorphism count by extending a partial map in BFS order, checking
/// adjacency against every mapped vertex.
pub fn brute_force_aut_order(g: &Graph) -> u64 {
    let n = g.order();
    let mut order_v = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order_v.push(u);
            for &w in g.adj(u) {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    fn go(g: &Graph, order_v: &[usize], k: usize, map: &mut [usize], used: &mut [bool]) -> u64 {
        if k == order_v.len() {
            return 1;
        }
        let u = order_v[k];
        let mut total = 0;
        for x in 0..g.order() {
            if used[x] || g.degree(x) != g.degree(u) {
                continue;
            }
            if order_v[..k].iter().all(|&w| g.has_edge(u, w) == g.has_edge(x, map[w])) {
                map[u] = x;
                used[x] = true;
                total += go(g, order_v, k + 1, map, used);
                used[x] = false;
            }
        }
        total
    }
    go(g, &order_v, 0, &mut vec![usize::MAX; n], &mut vec![false; n])
}

/// graph6 encoder written from the format description, bit by bit.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    let push6 = |out: &mut String, x: usize| out.push(char::from(63 + x as u8));
    if n <= 62 {
        push6(&mut out, n);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(&mut out, (n >> shift) & 63);
        }
    }
    let mut bits = Vec::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let x = chunk.iter().fold(0, |acc, &b| acc * 2 + b as usize);
        push6(&mut out, x);
    }
    out
}
