//! Individualization-refinement search shared by the isomorphism test and the
//! automorphism-group computation.
//!
//! Colorings are refined to the coarsest equitable partition by iterating
//! "own color plus sorted multiset of neighbor colors" signatures. New colors
//! are assigned in sorted signature order, so refinement commutes with every
//! isomorphism that respects the starting colorings. Two refined colorings
//! are compatible only if their quotient data (cell sizes and per-cell
//! neighbor-color multisets) coincide.

use crate::Graph;

use super::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Refined {
    colors: Vec<usize>,
    cells: Vec<Vec<usize>>,
    quotient: Vec<(usize, Vec<usize>)>,
}

impl Refined {
    fn is_discrete(&self) -> bool {
        self.cells.len() == self.colors.len()
    }

    /// Smallest non-singleton cell, lowest color on ties.
    fn target_cell(&self) -> usize {
        let mut best = None;
        for (c, cell) in self.cells.iter().enumerate() {
            if cell.len() > 1 && best.is_none_or(|b: usize| cell.len() < self.cells[b].len()) {
                best = Some(c);
            }
        }
        best.expect("target_cell called on a discrete partition")
    }
}

pub(crate) fn refine(g: &Graph, initial: &[usize]) -> Refined {
    let n = g.order();
    let mut colors = initial.to_vec();
    let mut count = usize::MAX;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.adj(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; n];
        let mut quotient: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let new_count = c + 1;
        if new_count == count {
            // Stable: every cell has a single signature. Record it against the
            // compacted colors.
            let mut cells = vec![Vec::new(); new_count];
            for v in 0..n {
                cells[next[v]].push(v);
            }
            for cell in &cells {
                let v = cell[0];
                let mut nb: Vec<usize> = g.adj(v).iter().map(|&w| next[w]).collect();
                nb.sort_unstable();
                quotient.push((cell.len(), nb));
            }
            return Refined { colors: next, cells, quotient };
        }
        count = new_count;
        colors = next;
    }
}

/// Gives `x` its own color, placed just before the rest of its old cell.
fn individualize(colors: &[usize], x: usize) -> Vec<usize> {
    colors.iter().enumerate().map(|(v, &c)| if v == x { 2 * c } else { 2 * c + 1 }).collect()
}

/// Backtracking search for a bijection `g1 → g2` compatible with the two
/// starting colorings.
fn extend(g1: &Graph, g2: &Graph, c1: &[usize], c2: &[usize]) -> Option<Vec<usize>> {
    let r1 = refine(g1, c1);
    let r2 = refine(g2, c2);
    if r1.quotient != r2.quotient {
        return None;
    }
    if r1.is_discrete() {
        let mut map = vec![0; g1.order()];
        for (cell1, cell2) in r1.cells.iter().zip(&r2.cells) {
            map[cell1[0]] = cell2[0];
        }
        let ok = g1.edges().all(|(u, v)| g2.has_edge(map[u], map[v]));
        return ok.then_some(map);
    }
    let target = r1.target_cell();
    let x = r1.cells[target][0];
    let left = individualize(&r1.colors, x);
    for &y in &r2.cells[target] {
        if let Some(map) = extend(g1, g2, &left, &individualize(&r2.colors, y)) {
            return Some(map);
        }
    }
    None
}

/// Returns `φ` with `{u,v} ∈ E(g1) ⇔ {φu,φv} ∈ E(g2)`, or `None`.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return None;
    }
    let zeros = vec![0; g1.order()];
    extend(g1, g2, &zeros, &zeros)
}

/// Result of the automorphism search: a strong generating set relative to
/// `base`, with the exact basic orbit length at every level.
#[derive(Clone, Debug)]
pub(crate) struct SearchOutcome {
    pub generators: Vec<Permutation>,
    pub base: Vec<usize>,
    pub basic_orbit_sizes: Vec<usize>,
}

pub(crate) fn automorphism_search(g: &Graph) -> SearchOutcome {
    let n = g.order();
    // First path: individualize the first vertex of the target cell until
    // the partition is discrete.
    let mut levels: Vec<(Refined, usize)> = Vec::new();
    let mut current = refine(g, &vec![0; n]);
    while !current.is_discrete() {
        let b = current.cells[current.target_cell()][0];
        let next = refine(g, &individualize(&current.colors, b));
        levels.push((current, b));
        current = next;
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut sizes = vec![1; levels.len()];
    for (i, (refined, b)) in levels.iter().enumerate().rev() {
        let b = *b;
        let cell = &refined.cells[refined.colors[b]];
        let left = individualize(&refined.colors, b);
        let mut orbit = point_orbit(n, b, &generators);
        for &y in cell {
            if orbit[y] {
                continue;
            }
            if let Some(map) = extend(g, g, &left, &individualize(&refined.colors, y)) {
                generators.push(Permutation::from_vec_unchecked(map));
                orbit = point_orbit(n, b, &generators);
            }
        }
        sizes[i] = orbit.iter().filter(|&&x| x).count();
    }
    SearchOutcome {
        generators,
        base: levels.iter().map(|(_, b)| *b).collect(),
        basic_orbit_sizes: sizes,
    }
}

fn point_orbit(n: usize, start: usize, gens: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for p in gens {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}
