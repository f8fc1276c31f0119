//! Named graphs with frozen vertex numberings.
//!
//! | name | numbering |
//! |------|-----------|
//! | `complete(n)` | `0..n` |
//! | `cycle(n)` | `i ~ i+1 mod n`, `n ≥ 3` |
//! | `path(n)` | `n` vertices, `i ~ i+1` |
//! | `complete_multipartite(m,b)` | vertex `v` lies in part `v / b` |
//! | `k33` | parts `{0,1,2}` and `{3,4,5}` |
//! | `cube` | 3-bit words, adjacent when they differ in one bit |
//! | `petersen` | 2-subsets of `{0..4}` in lexicographic order, adjacent when disjoint |
//! | `heawood` | Fano plane: points `0..7`, line `7+i` is `{i, i+1, i+3} mod 7` |
//! | `tutte_8_cage` | generalized quadrangle of order 2: points `0..15` are the 2-subsets of `{0..5}` (lexicographic), lines `15..30` are the partitions of `{0..5}` into three pairs (lexicographic) |
//! | `icosahedron` | `0` top, `1..=5` upper ring, `6..=10` lower ring, `11` bottom; upper `1+k` meets lower `6+k` and `6+(k+1)%5` |
//! | `circulant(n,a,b)` | `i ~ i±a, i±b mod n` |
//! | `torus(m,n)` | vertex `(i,j)` is `i*n+j`, adjacent to `(i+1,j)`, `(i,j+1)`, `(i+1,j+1)` mod `(m,n)` |
//! | `line(X)`, `subdivision(X)`, `clique(X)` | derived from `X` |

use std::fmt;
use std::str::FromStr;

use crate::constructions::{clique_graph, line_graph, subdivision_graph};
use crate::{Error, Graph, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteMultipartite(usize, usize),
    K33,
    Cube,
    Petersen,
    Heawood,
    Tutte8Cage,
    Icosahedron,
    Circulant(usize, usize, usize),
    Torus(usize, usize),
    Line(Box<CatalogName>),
    Subdivision(Box<CatalogName>),
    Clique(Box<CatalogName>),
}

impl CatalogName {
    /// Examples of every family, for `catalog list`.
    pub fn listing() -> Vec<CatalogName> {
        use CatalogName::*;
        vec![
            Complete(4),
            Cycle(5),
            Path(4),
            CompleteMultipartite(3, 2),
            K33,
            Cube,
            Petersen,
            Heawood,
            Tutte8Cage,
            Icosahedron,
            Circulant(9, 1, 2),
            Torus(7, 7),
            Line(Box::new(Petersen)),
            Subdivision(Box::new(Complete(4))),
            Clique(Box::new(Line(Box::new(Petersen)))),
        ]
    }

    pub fn build(&self) -> Result<Graph> {
        catalog(self)
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CatalogName::*;
        match self {
            Complete(n) => write!(f, "complete({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Path(n) => write!(f, "path({n})"),
            CompleteMultipartite(m, b) => write!(f, "complete_multipartite({m},{b})"),
            K33 => f.write_str("k33"),
            Cube => f.write_str("cube"),
            Petersen => f.write_str("petersen"),
            Heawood => f.write_str("heawood"),
            Tutte8Cage => f.write_str("tutte_8_cage"),
            Icosahedron => f.write_str("icosahedron"),
            Circulant(n, a, b) => write!(f, "circulant({n},{a},{b})"),
            Torus(m, n) => write!(f, "torus({m},{n})"),
            Line(x) => write!(f, "line({x})"),
            Subdivision(x) => write!(f, "subdivision({x})"),
            Clique(x) => write!(f, "clique({x})"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownCatalogName(s.to_string());
        let (head, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(unknown()),
            None => (s, None),
        };
        let ints = |expected: usize| -> Result<Vec<usize>> {
            let list: Vec<usize> = args
                .ok_or_else(unknown)?
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| unknown())?;
            if list.len() != expected {
                return Err(Error::InvalidCatalogParameters {
                    name: head.to_string(),
                    reason: format!("expected {expected} integer arguments"),
                });
            }
            Ok(list)
        };
        let inner = || -> Result<Box<CatalogName>> { Ok(Box::new(args.ok_or_else(unknown)?.parse()?)) };
        use CatalogName::*;
        Ok(match head {
            "complete" => Complete(ints(1)?[0]),
            "cycle" => Cycle(ints(1)?[0]),
            "path" => Path(ints(1)?[0]),
            "complete_multipartite" => {
                let v = ints(2)?;
                CompleteMultipartite(v[0], v[1])
            }
            "circulant" => {
                let v = ints(3)?;
                Circulant(v[0], v[1], v[2])
            }
            "torus" => {
                let v = ints(2)?;
                Torus(v[0], v[1])
            }
            "line" => Line(inner()?),
            "subdivision" => Subdivision(inner()?),
            "clique" => Clique(inner()?),
            _ if args.is_some() => return Err(unknown()),
            "k33" => K33,
            "cube" => Cube,
            "petersen" => Petersen,
            "heawood" => Heawood,
            "tutte_8_cage" => Tutte8Cage,
            "icosahedron" => Icosahedron,
            _ => return Err(unknown()),
        })
    }
}

fn invalid(name: &CatalogName, reason: &str) -> Error {
    Error::InvalidCatalogParameters { name: name.to_string(), reason: reason.to_string() }
}

/// Builds a named graph; the result carries the canonical name.
pub fn catalog(name: &CatalogName) -> Result<Graph> {
    use CatalogName::*;
    let g = match name {
        Complete(n) => {
            if *n == 0 {
                return Err(invalid(name, "need n ≥ 1"));
            }
            Graph::complete(*n)?
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(invalid(name, "need n ≥ 3"));
            }
            Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))?
        }
        Path(n) => {
            if *n == 0 {
                return Err(invalid(name, "need n ≥ 1"));
            }
            Graph::new(*n, (1..*n).map(|i| (i - 1, i)))?
        }
        CompleteMultipartite(m, b) => {
            if *m == 0 || *b == 0 {
                return Err(invalid(name, "need m ≥ 1 and b ≥ 1"));
            }
            let n = m * b;
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| u / b != v / b))?
        }
        K33 => Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))))?,
        Cube => Graph::new(8, (0..8usize).flat_map(|u| (0..3).map(move |k| (u, u ^ (1 << k)))))?,
        Petersen => {
            let pairs = two_subsets(5);
            let edges = pairs.iter().enumerate().flat_map(|(i, a)| {
                pairs.iter().enumerate().filter(move |(_, b)| disjoint(a, b)).map(move |(j, _)| (i, j))
            });
            Graph::new(pairs.len(), edges)?
        }
        Heawood => Graph::new(14, (0..7).flat_map(|i| [i, (i + 1) % 7, (i + 3) % 7].map(|p| (p, 7 + i))))?,
        Tutte8Cage => {
            let duads = two_subsets(6);
            let synthemes = synthemes();
            let edges = synthemes.iter().enumerate().flat_map(|(l, s)| {
                let duads = &duads;
                s.iter().map(move |d| (duads.iter().position(|x| x == d).unwrap(), 15 + l))
            });
            Graph::new(30, edges)?
        }
        Icosahedron => {
            let mut edges = Vec::new();
            for k in 0..5 {
                let up = 1 + k;
                let low = 6 + k;
                edges.push((0, up));
                edges.push((up, 1 + (k + 1) % 5));
                edges.push((11, low));
                edges.push((low, 6 + (k + 1) % 5));
                edges.push((up, low));
                edges.push((up, 6 + (k + 1) % 5));
            }
            Graph::new(12, edges)?
        }
        Circulant(n, a, b) => {
            if *n < 3 || *a == 0 || *b == 0 || a % n == 0 || b % n == 0 {
                return Err(invalid(name, "need n ≥ 3 and jumps not divisible by n"));
            }
            Graph::new(*n, (0..*n).flat_map(|i| [(i, (i + a) % n), (i, (i + b) % n)]))?
        }
        Torus(m, n) => {
            if *m < 3 || *n < 3 {
                return Err(invalid(name, "need m ≥ 3 and n ≥ 3"));
            }
            let id = |i: usize, j: usize| (i % m) * n + (j % n);
            let edges = (0..*m).flat_map(|i| (0..*n).flat_map(move |j| [(id(i, j), id(i + 1, j)), (id(i, j), id(i, j + 1)), (id(i, j), id(i + 1, j + 1))]));
            Graph::new(m * n, edges)?
        }
        Line(x) => line_graph(&catalog(x)?)?.graph,
        Subdivision(x) => subdivision_graph(&catalog(x)?)?.graph,
        Clique(x) => clique_graph(&catalog(x)?)?.graph,
    };
    Ok(g.with_name(name.to_string()))
}

fn two_subsets(n: usize) -> Vec<[usize; 2]> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect()
}

fn disjoint(a: &[usize; 2], b: &[usize; 2]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Partitions of `{0..5}` into three pairs, each sorted, in lexicographic order.
fn synthemes() -> Vec<[[usize; 2]; 3]> {
    let mut out = Vec::new();
    for b in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != b).collect();
        for &d in &rest[1..] {
            let last: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != d).collect();
            out.push([[0, b], [rest[0], d], [last[0], last[1]]]);
        }
    }
    out.sort();
    out
}
