use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result};

/// A permutation of `0..n` stored as its image array. Acts on the right:
/// `p.then(&q)` applies `p` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() {
                return Err(Error::InvalidPermutation(format!("image {x} out of range 0..{}", image.len())));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { image: self.image.iter().map(|&x| other.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// First point not fixed, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.image.iter().enumerate().find(|&(x, &y)| x != y).map(|(x, _)| x)
    }

    /// Image of a tuple under the pointwise action.
    pub fn act(&self, tuple: &[usize]) -> Vec<usize> {
        tuple.iter().map(|&x| self.image[x]).collect()
    }

    pub fn check_automorphism(&self, g: &Graph) -> Result<()> {
        if self.degree() != g.order() {
            return Err(Error::DegreeMismatch { expected: g.order(), found: self.degree() });
        }
        for (u, v) in g.edges() {
            if !g.has_edge(self.image[u], self.image[v]) {
                return Err(Error::NotAnAutomorphism(u, v));
            }
        }
        Ok(())
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.check_automorphism(g).is_ok()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

/// One-line notation: the images of `0, 1, …` separated by spaces.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses one-line notation; separators may be whitespace or commas, and
/// surrounding brackets are ignored.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let image = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::InvalidPermutation(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(image)
    }
}
