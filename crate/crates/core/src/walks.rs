//! Walks, s-arcs, s-geodesics, and the map sending an s-arc
//! `(v_0, …, v_s)` to the edge sequence `({v_0,v_1}, …, {v_{s-1},v_s})`.

use std::collections::HashSet;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::constructions::{line_graph, EdgeIndex};
use crate::metrics::{bfs_distances, DistanceMatrix, UNREACHABLE};
use crate::{Error, Graph, Result};

/// Default ceiling on the number of walks a single enumeration may produce.
pub const DEFAULT_WALK_CAP: u128 = 10_000_000;

/// A vertex sequence whose consecutive entries are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotAWalk("empty sequence".into()));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::NotAWalk(format!("{} and {} are not adjacent", w[0], w[1])));
        }
        Ok(Walk(vertices))
    }

    /// Number of steps `s`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// No immediate backtracking: `v_{j-1} ≠ v_{j+1}`.
    pub fn is_arc(&self) -> bool {
        is_arc_sequence(&self.0)
    }

    /// All vertices distinct.
    pub fn is_path(&self) -> bool {
        let mut seen = HashSet::new();
        self.0.iter().all(|v| seen.insert(v))
    }

    /// `d(v_0, v_s) = s`.
    pub fn is_geodesic(&self, g: &Graph) -> bool {
        bfs_distances(g, self.0[0])[*self.0.last().unwrap()] as usize == self.len()
    }

    pub fn is_geodesic_in(&self, dist: &DistanceMatrix) -> bool {
        dist.get(self.0[0], *self.0.last().unwrap()) == Some(self.len())
    }
}

impl From<Walk> for Vec<usize> {
    fn from(w: Walk) -> Self {
        w.0
    }
}

impl Deref for Walk {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// A sequence `(e_0, …, e_{s-1})` of line-graph vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LineTuple(pub Vec<usize>);

impl Deref for LineTuple {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

fn is_arc_sequence(v: &[usize]) -> bool {
    v.windows(3).all(|w| w[0] != w[2])
}

/// Exact number of s-arcs, by dynamic programming over directed arcs.
pub fn count_arcs(g: &Graph, s: usize) -> u128 {
    if s == 0 {
        return g.order() as u128;
    }
    // ways[(u, i)]: number of t-arcs starting with the arc u -> adj(u)[i]
    let mut ways: Vec<Vec<u128>> = (0..g.order()).map(|u| vec![1; g.degree(u)]).collect();
    for _ in 1..s {
        let next = (0..g.order())
            .map(|u| {
                g.adj(u)
                    .iter()
                    .map(|&v| {
                        g.adj(v)
                            .iter()
                            .zip(&ways[v])
                            .filter(|(&w, _)| w != u)
                            .fold(0u128, |acc, (_, &c)| acc.saturating_add(c))
                    })
                    .collect()
            })
            .collect();
        ways = next;
    }
    ways.iter().flatten().fold(0u128, |acc, &c| acc.saturating_add(c))
}

/// All s-arcs in lexicographic order.
pub fn enumerate_arcs(g: &Graph, s: usize) -> Result<Vec<Walk>> {
    enumerate_arcs_capped(g, s, DEFAULT_WALK_CAP)
}

pub fn enumerate_arcs_capped(g: &Graph, s: usize, cap: u128) -> Result<Vec<Walk>> {
    if s == 0 {
        return Err(Error::LengthTooSmall { s, min: 1 });
    }
    let count = count_arcs(g, s);
    if count > cap {
        return Err(Error::TooManyWalks { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut stack = Vec::with_capacity(s + 1);
    for v in 0..g.order() {
        stack.push(v);
        extend_arcs(g, s, &mut stack, &mut out);
        stack.pop();
    }
    Ok(out)
}

fn extend_arcs(g: &Graph, s: usize, stack: &mut Vec<usize>, out: &mut Vec<Walk>) {
    if stack.len() == s + 1 {
        out.push(Walk(stack.clone()));
        return;
    }
    let last = stack[stack.len() - 1];
    let prev = if stack.len() >= 2 { Some(stack[stack.len() - 2]) } else { None };
    for &w in g.adj(last) {
        if Some(w) != prev {
            stack.push(w);
            extend_arcs(g, s, stack, out);
            stack.pop();
        }
    }
}

/// All s-geodesics in lexicographic order. `s` must lie in
/// `1..=max finite distance`.
pub fn enumerate_geodesics(g: &Graph, s: usize) -> Result<Vec<Walk>> {
    enumerate_geodesics_in(g, &DistanceMatrix::new(g), s)
}

pub fn enumerate_geodesics_in(g: &Graph, dist: &DistanceMatrix, s: usize) -> Result<Vec<Walk>> {
    if s == 0 {
        return Err(Error::LengthTooSmall { s, min: 1 });
    }
    let diameter = dist.max_finite();
    if s > diameter {
        return Err(Error::LengthExceedsDiameter { s, diameter });
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(s + 1);
    for v in 0..g.order() {
        stack.push(v);
        extend_geodesics(g, dist, s, &mut stack, &mut out)?;
        stack.pop();
    }
    Ok(out)
}

fn extend_geodesics(
    g: &Graph,
    dist: &DistanceMatrix,
    s: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Walk>,
) -> Result<()> {
    if stack.len() == s + 1 {
        if out.len() as u128 >= DEFAULT_WALK_CAP {
            return Err(Error::TooManyWalks { count: out.len() as u128 + 1, cap: DEFAULT_WALK_CAP });
        }
        out.push(Walk(stack.clone()));
        return Ok(());
    }
    let start = stack[0];
    let depth = stack.len() as u32;
    for &w in g.adj(stack[stack.len() - 1]) {
        if dist.raw(start, w) == depth {
            stack.push(w);
            extend_geodesics(g, dist, s, stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Edge sequence of an s-arc, `s ≥ 2`.
pub fn lmap(index: &EdgeIndex, arc: &[usize]) -> Result<LineTuple> {
    if arc.len() < 3 {
        return Err(Error::LengthTooSmall { s: arc.len().saturating_sub(1), min: 2 });
    }
    let host = index.host();
    let walk = Walk::new(host, arc.to_vec())?;
    if !walk.is_arc() {
        return Err(Error::NotAnArc(format!("{arc:?} backtracks")));
    }
    Ok(lmap_unchecked(index, arc))
}

pub(crate) fn lmap_unchecked(index: &EdgeIndex, arc: &[usize]) -> LineTuple {
    LineTuple(arc.windows(2).map(|w| index.rank(w[0], w[1]).expect("consecutive arc vertices are adjacent")).collect())
}

/// Line-graph distance between edges `e` and `f`, read off host distances:
/// `0` if equal, otherwise one more than the closest pair of endpoints.
pub fn line_distance(index: &EdgeIndex, dist: &DistanceMatrix, e: usize, f: usize) -> Option<usize> {
    if e == f {
        return Some(0);
    }
    let (a, b) = index.edge(e);
    let (c, d) = index.edge(f);
    [(a, c), (a, d), (b, c), (b, d)].iter().filter_map(|&(x, y)| dist.get(x, y)).min().map(|m| m + 1)
}

/// The unique s-arc whose edge sequence is the given (s-1)-geodesic of the
/// line graph. Interior vertices are the intersections of consecutive edges;
/// the ends are the remaining endpoints of the first and last edge.
pub fn lmap_invert(index: &EdgeIndex, e: &[usize]) -> Result<Walk> {
    let not_geodesic = |why: String| Error::NotAGeodesic(format!("{e:?}: {why}"));
    if e.len() < 2 {
        return Err(Error::LengthTooSmall { s: e.len(), min: 2 });
    }
    if let Some(&x) = e.iter().find(|&&x| x >= index.len()) {
        return Err(Error::VertexOutOfRange { vertex: x, n: index.len() });
    }
    let host = index.host();
    let shared = |i: usize, j: usize| -> Option<usize> {
        let (a, b) = index.edge(i);
        let (c, d) = index.edge(j);
        if i == j {
            None
        } else if a == c || a == d {
            Some(a)
        } else if b == c || b == d {
            Some(b)
        } else {
            None
        }
    };
    let mut inner = Vec::with_capacity(e.len() - 1);
    for w in e.windows(2) {
        inner.push(shared(w[0], w[1]).ok_or_else(|| not_geodesic(format!("{} and {} are not adjacent", w[0], w[1])))?);
    }
    let (a, b) = index.edge(e[0]);
    let first = if a == inner[0] { b } else { a };
    let (c, d) = index.edge(e[e.len() - 1]);
    let last_inner = inner[inner.len() - 1];
    let last = if c == last_inner { d } else { c };

    // Distance from e_0 to e_last in the line graph, via the host.
    let (da, db) = (bfs_distances(host, a), bfs_distances(host, b));
    let closest = [c, d].iter().flat_map(|&x| [da[x], db[x]]).filter(|&d| d != UNREACHABLE).min();
    let line_dist = if e[0] == e[e.len() - 1] { Some(0) } else { closest.map(|m| m as usize + 1) };
    if line_dist != Some(e.len() - 1) {
        return Err(not_geodesic(format!("endpoints at line distance {line_dist:?}, expected {}", e.len() - 1)));
    }

    let mut vertices = Vec::with_capacity(e.len() + 1);
    vertices.push(first);
    vertices.extend(inner);
    vertices.push(last);
    let walk = Walk::new(host, vertices)?;
    if !walk.is_arc() {
        return Err(not_geodesic("preimage backtracks".into()));
    }
    Ok(walk)
}

/// Outcome of comparing the image of all s-arcs with the (s-1)-geodesics of
/// the line graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageComparison {
    pub equal: bool,
    /// A line tuple in the symmetric difference, when unequal.
    pub witness: Option<LineTuple>,
    pub image_size: usize,
    pub geodesic_count: usize,
}

/// Maps every s-arc of `g` and compares the image, as a set, with all
/// (s-1)-geodesics of `L(g)`. Requires `g` connected with an s-arc and
/// `2 ≤ s ≤ diam(L(g)) + 1`.
pub fn image_equals_geodesics(g: &Graph, s: usize) -> Result<ImageComparison> {
    if s < 2 {
        return Err(Error::LengthTooSmall { s, min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let line = line_graph(g)?;
    let index = line.edge_index().expect("line graph has an edge index");
    let line_dist = DistanceMatrix::new(&line.graph);
    let diameter = line_dist.diameter().expect("line graph of a connected graph is connected");
    if s > diameter + 1 {
        return Err(Error::LengthExceedsDiameter { s: s - 1, diameter });
    }
    let arcs = enumerate_arcs(g, s)?;
    if arcs.is_empty() {
        return Err(Error::Precondition(format!("graph has no {s}-arc")));
    }
    let image: HashSet<LineTuple> = arcs.iter().map(|a| lmap_unchecked(index, a)).collect();
    let geodesics: Vec<LineTuple> =
        enumerate_geodesics_in(&line.graph, &line_dist, s - 1)?.into_iter().map(|w| LineTuple(w.into_vec())).collect();
    let geo_set: HashSet<&LineTuple> = geodesics.iter().collect();
    let mut witness = geodesics.iter().find(|t| !image.contains(*t)).cloned();
    if witness.is_none() {
        let mut outside: Vec<&LineTuple> = image.iter().filter(|t| !geo_set.contains(t)).collect();
        outside.sort();
        witness = outside.first().map(|t| (*t).clone());
    }
    Ok(ImageComparison { equal: witness.is_none(), witness, image_size: image.len(), geodesic_count: geodesics.len() })
}
