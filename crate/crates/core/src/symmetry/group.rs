//! Permutation groups given by generators, backed by a stabilizer chain.

use num_bigint::BigUint;
use rand::Rng;

use crate::{Error, Graph, Result};

use super::search::automorphism_search;
use super::Permutation;

/// Groups up to this order can be listed element by element.
pub const ELEMENT_LIMIT: u64 = 1_000_000;

/// One level of the stabilizer chain: the basic orbit of `point` under the
/// pointwise stabilizer of the earlier base points, with coset
/// representatives `u_p` sending `point` to `p`.
#[derive(Clone, Debug)]
struct Level {
    point: usize,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

/// A subgroup of `Sym(0..degree)`, usually the automorphism group of a graph
/// or a subgroup of it.
#[derive(Clone, Debug)]
pub struct AutGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl AutGroup {
    pub fn trivial(degree: usize) -> Self {
        AutGroup { degree, generators: Vec::new(), strong: Vec::new(), levels: Vec::new(), order: BigUint::from(1u8) }
    }

    /// Group generated by `generators`, with the order computed by
    /// Schreier–Sims.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base(degree, generators, Vec::new())
    }

    /// Like [`AutGroup::from_generators`], seeding the base with `base`.
    pub fn with_base(degree: usize, generators: Vec<Permutation>, base: Vec<usize>) -> Result<Self> {
        for p in &generators {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: p.degree() });
            }
        }
        if let Some(&b) = base.iter().find(|&&b| b >= degree) {
            return Err(Error::VertexOutOfRange { vertex: b, n: degree });
        }
        let (strong, levels) = schreier_sims(degree, &generators, base);
        let order = levels.iter().fold(BigUint::from(1u8), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(AutGroup { degree, generators, strong, levels, order })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Strong generating set relative to [`AutGroup::base`].
    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && sift(&self.levels, p.clone(), 0).0.is_identity()
    }

    /// Uniformly random element: one random coset representative per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let p = level.orbit[rng.random_range(0..level.orbit.len())];
            g = g.then(level.transversal[p].as_ref().expect("orbit point has a representative"));
        }
        g
    }

    /// Every element, when the order is at most [`ELEMENT_LIMIT`].
    pub fn elements(&self) -> Option<Vec<Permutation>> {
        if self.order_u64().is_none_or(|o| o > ELEMENT_LIMIT) {
            return None;
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &p in &level.orbit {
                    next.push(h.then(level.transversal[p].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out.sort();
        Some(out)
    }

    /// Checks that every generator is an automorphism of `g`.
    pub fn check_preserves(&self, g: &Graph) -> Result<()> {
        self.generators.iter().try_for_each(|p| p.check_automorphism(g))
    }
}

/// Full automorphism group of `g`.
pub fn automorphisms(g: &Graph) -> AutGroup {
    let found = automorphism_search(g);
    let group = AutGroup::with_base(g.order(), found.generators, found.base)
        .expect("search yields permutations of the right degree");
    debug_assert_eq!(
        group.order,
        found.basic_orbit_sizes.iter().fold(BigUint::from(1u8), |a, &s| a * BigUint::from(s))
    );
    group
}

/// Strips `g` through the levels starting at `from`. Returns the residue and
/// the level where stripping stopped (`levels.len()` if it went through).
fn sift(levels: &[Level], mut g: Permutation, from: usize) -> (Permutation, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        let x = g.apply(level.point);
        match &level.transversal[x] {
            Some(u) => g = g.then(&u.inverse()),
            None => return (g, j),
        }
    }
    (g, levels.len())
}

fn build_levels(degree: usize, base: &[usize], strong: &[Permutation]) -> Vec<Level> {
    base.iter()
        .enumerate()
        .map(|(k, &point)| {
            let gens: Vec<&Permutation> =
                strong.iter().filter(|s| base[..k].iter().all(|&b| s.apply(b) == b)).collect();
            let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
            transversal[point] = Some(Permutation::identity(degree));
            let mut orbit = vec![point];
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                for s in &gens {
                    let q = s.apply(p);
                    if transversal[q].is_none() {
                        transversal[q] = Some(transversal[p].as_ref().unwrap().then(s));
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            Level { point, orbit, transversal }
        })
        .collect()
}

/// Deterministic Schreier–Sims: extend the base until no strong generator
/// fixes it, then sift Schreier generators level by level (deepest first),
/// adding any non-trivial residue as a new strong generator.
fn schreier_sims(degree: usize, gens: &[Permutation], mut base: Vec<usize>) -> (Vec<Permutation>, Vec<Level>) {
    let mut strong: Vec<Permutation> = gens.iter().filter(|p| !p.is_identity()).cloned().collect();
    base.dedup();
    for s in &strong {
        if base.iter().all(|&b| s.apply(b) == b) {
            base.push(s.first_moved().unwrap());
        }
    }
    'restart: loop {
        let levels = build_levels(degree, &base, &strong);
        for k in (0..levels.len()).rev() {
            let level_gens: Vec<&Permutation> =
                strong.iter().filter(|s| base[..k].iter().all(|&b| s.apply(b) == b)).collect();
            for &p in &levels[k].orbit {
                let u_p = levels[k].transversal[p].as_ref().unwrap();
                for s in &level_gens {
                    let q = s.apply(p);
                    let u_q = levels[k].transversal[q].as_ref().unwrap();
                    let schreier = u_p.then(s).then(&u_q.inverse());
                    let (residue, j) = sift(&levels, schreier, k + 1);
                    if !residue.is_identity() {
                        if j == levels.len() {
                            base.push(residue.first_moved().unwrap());
                        }
                        strong.push(residue);
                        continue 'restart;
                    }
                }
            }
        }
        return (strong, levels);
    }
}
