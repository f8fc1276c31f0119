//! Orbits of groups on vertex tuples and the transitivity predicates built
//! on them.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::constructions::EdgeIndex;
use crate::metrics::DistanceMatrix;
use crate::walks::{enumerate_arcs, enumerate_geodesics_in};
use crate::{Error, Graph, Result};

use super::{AutGroup, Permutation};

/// Orbits of a group on a finite list of tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// The tuples, in the order supplied.
    pub universe: Vec<Vec<usize>>,
    /// Orbit id per tuple; ids are numbered by first appearance.
    pub orbit_ids: Vec<usize>,
    pub count: usize,
}

impl OrbitPartition {
    /// Orbit sizes, indexed by orbit id.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &id in &self.orbit_ids {
            sizes[id] += 1;
        }
        sizes
    }

    /// First tuple of each orbit.
    pub fn representatives(&self) -> Vec<&[usize]> {
        let mut reps = Vec::with_capacity(self.count);
        for (t, &id) in self.universe.iter().zip(&self.orbit_ids) {
            if id == reps.len() {
                reps.push(t.as_slice());
            }
        }
        reps
    }
}

fn check_tuple(group: &AutGroup, tuple: &[usize]) -> Result<()> {
    match tuple.iter().find(|&&x| x >= group.degree()) {
        Some(&x) => Err(Error::VertexOutOfRange { vertex: x, n: group.degree() }),
        None => Ok(()),
    }
}

/// Orbit of `tuple` under the pointwise action, in BFS order from `tuple`.
pub fn orbit_of(tuple: &[usize], group: &AutGroup) -> Result<Vec<Vec<usize>>> {
    check_tuple(group, tuple)?;
    let mut seen: HashSet<Vec<usize>> = HashSet::from([tuple.to_vec()]);
    let mut order = vec![tuple.to_vec()];
    let mut queue = VecDeque::from([tuple.to_vec()]);
    while let Some(t) = queue.pop_front() {
        for p in group.generators() {
            let image = p.act(&t);
            if seen.insert(image.clone()) {
                order.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(order)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Whether the orbit of the first tuple is exactly the set of listed tuples,
/// with the orbit partition of the list for diagnostics. Images leaving the
/// list are ignored by the partition. The empty list is transitive with zero
/// orbits.
pub fn transitive_on(tuples: &[Vec<usize>], group: &AutGroup) -> Result<(bool, OrbitPartition)> {
    for t in tuples {
        check_tuple(group, t)?;
    }
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..tuples.len()).collect();
    for (i, t) in tuples.iter().enumerate() {
        for p in group.generators() {
            if let Some(&j) = index.get(p.act(t).as_slice()) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut ids = HashMap::new();
    let orbit_ids: Vec<usize> = (0..tuples.len())
        .map(|i| {
            let root = find(&mut parent, i);
            let next = ids.len();
            *ids.entry(root).or_insert(next)
        })
        .collect();
    let count = ids.len();
    let transitive = match tuples.first() {
        None => true,
        Some(first) => {
            let orbit = orbit_of(first, group)?;
            orbit.len() == index.len() && orbit.iter().all(|t| index.contains_key(t.as_slice()))
        }
    };
    Ok((transitive, OrbitPartition { universe: tuples.to_vec(), orbit_ids, count }))
}

/// Image of `p` on edges: `rank{u,v} ↦ rank{p(u),p(v)}`.
pub fn induced_edge_action(index: &EdgeIndex, p: &Permutation) -> Result<Permutation> {
    p.check_automorphism(index.host())?;
    let image = index
        .edges()
        .iter()
        .map(|&(u, v)| index.rank(p.apply(u), p.apply(v)).expect("automorphisms map edges to edges"))
        .collect();
    Ok(Permutation::from_vec_unchecked(image))
}

/// The group acting on line-graph vertices through the induced edge action.
pub fn induced_group(index: &EdgeIndex, group: &AutGroup) -> Result<AutGroup> {
    let gens = group.generators().iter().map(|p| induced_edge_action(index, p)).collect::<Result<Vec<_>>>()?;
    AutGroup::from_generators(index.len(), gens)
}

fn check_group(g: &Graph, group: &AutGroup) -> Result<()> {
    if group.degree() != g.order() {
        return Err(Error::DegreeMismatch { expected: g.order(), found: group.degree() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn as_tuples<T: Into<Vec<usize>>>(walks: Vec<T>) -> Vec<Vec<usize>> {
    walks.into_iter().map(Into::into).collect()
}

/// Transitivity on the s-arcs alone (a single level). `false` when there is
/// no s-arc.
pub fn transitive_on_arcs(g: &Graph, s: usize, group: &AutGroup) -> Result<bool> {
    check_group(g, group)?;
    let arcs = as_tuples(enumerate_arcs(g, s)?);
    Ok(!arcs.is_empty() && transitive_on(&arcs, group)?.0)
}

/// Transitivity on the s-geodesics alone. Requires `1 ≤ s ≤ diam(g)`.
pub fn transitive_on_geodesics(g: &Graph, s: usize, group: &AutGroup) -> Result<bool> {
    check_group(g, group)?;
    let geo = as_tuples(enumerate_geodesics_in(g, &DistanceMatrix::new(g), s)?);
    Ok(transitive_on(&geo, group)?.0)
}

/// `g` has an s-arc and `group` is transitive on the t-arcs for every
/// `1 ≤ t ≤ s`.
pub fn is_s_arc_transitive(g: &Graph, s: usize, group: &AutGroup) -> Result<bool> {
    if s == 0 {
        return Err(Error::LengthTooSmall { s, min: 1 });
    }
    check_group(g, group)?;
    for t in 1..=s {
        if !transitive_on_arcs(g, t, group)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `group` is transitive on the i-geodesics for every `1 ≤ i ≤ s`.
pub fn is_s_geodesic_transitive(g: &Graph, s: usize, group: &AutGroup) -> Result<bool> {
    if s == 0 {
        return Err(Error::LengthTooSmall { s, min: 1 });
    }
    check_group(g, group)?;
    let dist = DistanceMatrix::new(g);
    let diameter = dist.diameter().expect("connected");
    if s > diameter {
        return Err(Error::LengthExceedsDiameter { s, diameter });
    }
    for i in 1..=s {
        let geo = as_tuples(enumerate_geodesics_in(g, &dist, i)?);
        if !transitive_on(&geo, group)?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `group` is transitive on ordered pairs at distance `t`, for each
/// `0 ≤ t ≤ diam(g)`.
pub fn is_distance_transitive(g: &Graph, group: &AutGroup) -> Result<bool> {
    check_group(g, group)?;
    let dist = DistanceMatrix::new(g);
    let diameter = dist.diameter().expect("connected");
    let n = g.order();
    let mut by_distance = vec![Vec::new(); diameter + 1];
    for u in 0..n {
        for v in 0..n {
            by_distance[dist.get(u, v).unwrap()].push(vec![u, v]);
        }
    }
    for pairs in &by_distance {
        if !transitive_on(pairs, group)?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}
