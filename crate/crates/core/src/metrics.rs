//! Distances, diameter, girth and local structure.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Graph, Result, VertexSet};

/// Distance that marks an unreachable pair.
pub const UNREACHABLE: u32 = u32::MAX;

/// BFS hop counts from `source`; [`UNREACHABLE`] for other components.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.adj(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs hop counts.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = Vec::with_capacity(n * n);
        for u in 0..n {
            dist.extend(bfs_distances(g, u));
        }
        DistanceMatrix { n, dist }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d as usize)
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Largest distance, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        self.dist.iter().try_fold(0, |acc, &d| (d != UNREACHABLE).then(|| acc.max(d as usize)))
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHABLE).max().copied().unwrap_or(0) as usize
    }
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let d = bfs_distances(g, u)[v];
    Ok((d != UNREACHABLE).then_some(d as usize))
}

/// Maximum distance over all pairs; `None` if `g` is disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for u in 0..g.order() {
        for d in bfs_distances(g, u) {
            if d == UNREACHABLE {
                return None;
            }
            best = best.max(d as usize);
        }
    }
    Some(best)
}

/// Length of a shortest cycle; `None` for forests.
///
/// BFS from every vertex; a non-tree edge `{u, w}` met during the search from
/// `r` closes a closed walk of length `d(r,u) + d(r,w) + 1` containing a
/// cycle no longer than that, and a shortest cycle is detected exactly from
/// any of its vertices.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(UNREACHABLE);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] as usize >= b) {
                break;
            }
            for &w in g.adj(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = (dist[u] + dist[w] + 1) as usize;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Level sets `Γ_0(u) = {u}, Γ_1(u), …` over the component of `u`.
pub fn distance_partition(g: &Graph, u: usize) -> Result<Vec<VertexSet>> {
    g.check_vertex(u)?;
    let dist = bfs_distances(g, u);
    let depth = dist.iter().filter(|&&d| d != UNREACHABLE).max().copied().unwrap_or(0) as usize;
    let mut levels = vec![Vec::new(); depth + 1];
    for (v, &d) in dist.iter().enumerate() {
        if d != UNREACHABLE {
            levels[d as usize].push(v);
        }
    }
    Ok(levels.into_iter().map(VertexSet::new).collect())
}

/// Shape of an induced neighborhood `[Γ(u)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalKind {
    /// Connected and 2-regular on `n ≥ 3` vertices (and not complete).
    Cycle(usize),
    /// `m` components, each complete on `r` vertices.
    DisjointCliques { m: usize, r: usize },
    Other,
}

#[derive(Clone, Debug)]
pub struct LocalType {
    pub kind: LocalKind,
    pub witness: Graph,
}

#[derive(Clone, Debug)]
pub struct LocalStructure {
    pub per_vertex: Vec<LocalType>,
    /// Present iff `g` is regular and every vertex has the same kind.
    pub summary: Option<LocalKind>,
}

impl LocalStructure {
    pub fn is_locally_cyclic(&self) -> bool {
        matches!(self.summary, Some(LocalKind::Cycle(_)))
    }
}

fn classify(local: &Graph) -> LocalKind {
    let comps = local.components();
    let r = comps[0].len();
    let m = comps.len();
    if comps.iter().all(|c| c.len() == r) && local.size() == m * r * (r - 1) / 2 {
        return LocalKind::DisjointCliques { m, r };
    }
    if m == 1 && local.order() >= 3 && local.is_regular() == Some(2) {
        return LocalKind::Cycle(local.order());
    }
    LocalKind::Other
}

/// Classifies `[Γ(u)]` for every vertex. Vertices of degree zero are
/// classified as [`LocalKind::Other`].
pub fn local_type(g: &Graph) -> LocalStructure {
    let per_vertex: Vec<LocalType> = (0..g.order())
        .map(|u| {
            let nb = VertexSet::from_sorted(g.adj(u).to_vec()).expect("adjacency is sorted");
            match g.induced_subgraph(&nb) {
                Ok(witness) => LocalType { kind: classify(&witness), witness },
                Err(_) => LocalType { kind: LocalKind::Other, witness: Graph::new(1, []).unwrap() },
            }
        })
        .collect();
    let first = per_vertex[0].kind;
    let summary =
        (g.is_regular().is_some() && per_vertex.iter().all(|t| t.kind == first)).then_some(first);
    LocalStructure { per_vertex, summary }
}
