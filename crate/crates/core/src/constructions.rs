//! Line, subdivision and clique graphs.

use crate::{Error, Graph, Result, VertexSet};

/// Bijection between the edges of a host graph and the vertices of its line
/// graph. Edges are listed by `(min, max)` in lexicographic order, so the
/// rank of an edge is its position in that list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    host: Graph,
    edges: Vec<(usize, usize)>,
}

impl EdgeIndex {
    pub fn new(host: &Graph) -> Self {
        EdgeIndex { host: host.clone(), edges: host.edges().collect() }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Endpoints of line-graph vertex `i`, smaller first.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Line-graph vertex of the edge `{u, v}`, if it is an edge of the host.
    pub fn rank(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

/// Where the vertices of a [`DerivedGraph`] came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Vertex `i` is edge `i` of the index.
    Line(EdgeIndex),
    /// Vertices `0..n` are the host vertices; `n + i` is edge `i` of the index.
    Subdivision(EdgeIndex),
    /// Vertex `i` is the `i`-th maximum clique of the host.
    Clique(Vec<VertexSet>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedGraph {
    pub graph: Graph,
    pub origin: Origin,
}

impl DerivedGraph {
    /// The edge index, for line and subdivision graphs.
    pub fn edge_index(&self) -> Option<&EdgeIndex> {
        match &self.origin {
            Origin::Line(idx) | Origin::Subdivision(idx) => Some(idx),
            Origin::Clique(_) => None,
        }
    }
}

/// Line graph: one vertex per edge, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<DerivedGraph> {
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    let index = EdgeIndex::new(g);
    let mut edges = Vec::new();
    for v in 0..g.order() {
        let incident: Vec<usize> = g.adj(v).iter().map(|&w| index.rank(v, w).unwrap()).collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let name = g.name().map(|n| format!("line({n})"));
    let mut graph = Graph::new(index.len(), edges)?;
    if let Some(n) = name {
        graph = graph.with_name(n);
    }
    Ok(DerivedGraph { graph, origin: Origin::Line(index) })
}

/// Subdivision graph: every edge `{u, v}` replaced by a path `u – e – v`.
pub fn subdivision_graph(g: &Graph) -> Result<DerivedGraph> {
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    let index = EdgeIndex::new(g);
    let n = g.order();
    let edges = index.edges().iter().enumerate().flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    let mut graph = Graph::new(n + index.len(), edges)?;
    if let Some(name) = g.name() {
        graph = graph.with_name(format!("subdivision({name})"));
    }
    Ok(DerivedGraph { graph, origin: Origin::Subdivision(index) })
}

/// Clique graph: one vertex per maximum clique, adjacent when the cliques
/// intersect. Cliques are listed in lexicographic order.
pub fn clique_graph(g: &Graph) -> Result<DerivedGraph> {
    let cliques = maximum_cliques(g);
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if cliques[i].iter().any(|&v| cliques[j].contains(v)) {
                edges.push((i, j));
            }
        }
    }
    let mut graph = Graph::new(cliques.len(), edges)?;
    if let Some(name) = g.name() {
        graph = graph.with_name(format!("clique({name})"));
    }
    Ok(DerivedGraph { graph, origin: Origin::Clique(cliques) })
}

/// All maximal cliques, sorted, via Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, (0..g.order()).collect(), Vec::new(), &mut out);
    let mut out: Vec<VertexSet> = out.into_iter().map(VertexSet::new).collect();
    out.sort();
    out
}

/// Maximal cliques of the largest size.
pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    let all = maximal_cliques(g);
    let best = all.iter().map(VertexSet::len).max().unwrap_or(0);
    all.into_iter().filter(|c| c.len() == best).collect()
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // Pivot on the vertex of P ∪ X with the most neighbors in P.
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
