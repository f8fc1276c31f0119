//! Graph collections, file loaders and the batch runner.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::graph6::parse_graph6;
use crate::{catalog, CatalogName, Error, Graph, Result};

use super::checks::{
    check_diameter_lemma, check_fixture_integrity, check_line_equivalence, check_lmap_theorem, check_locally_cyclic,
    check_weiss_flag, classify_valency4_girth3, Subject,
};
use super::report::VerdictReport;

/// s values tried by the edge-sequence map check.
pub const LMAP_LENGTHS: [usize; 3] = [2, 3, 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    LineEquivalence,
    DiameterShift,
    Lmap,
    ClassifyV4G3,
    LocallyCyclic,
    Weiss,
    FixtureIntegrity,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::LineEquivalence,
        CheckKind::DiameterShift,
        CheckKind::Lmap,
        CheckKind::ClassifyV4G3,
        CheckKind::LocallyCyclic,
        CheckKind::Weiss,
        CheckKind::FixtureIntegrity,
    ];

    /// Claim id written into reports.
    pub fn id(self) -> &'static str {
        match self {
            CheckKind::LineEquivalence => "line-equivalence",
            CheckKind::DiameterShift => "diameter-shift",
            CheckKind::Lmap => "lmap",
            CheckKind::ClassifyV4G3 => "classify-v4g3",
            CheckKind::LocallyCyclic => "locally-cyclic",
            CheckKind::Weiss => "weiss",
            CheckKind::FixtureIntegrity => "fixture-integrity",
        }
    }

    /// Whether the check takes an arc length.
    pub fn takes_length(self) -> bool {
        matches!(self, CheckKind::LineEquivalence | CheckKind::Lmap | CheckKind::Weiss)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    /// Accepts claim ids and the short aliases `thm13`, `lemma22`, `thm32`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "line-equivalence" | "thm13" => CheckKind::LineEquivalence,
            "diameter-shift" | "lemma22" => CheckKind::DiameterShift,
            "lmap" | "thm32" => CheckKind::Lmap,
            "classify-v4g3" => CheckKind::ClassifyV4G3,
            "locally-cyclic" => CheckKind::LocallyCyclic,
            "weiss" => CheckKind::Weiss,
            "fixture-integrity" => CheckKind::FixtureIntegrity,
            _ => return Err(Error::Precondition(format!("unknown check {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Catalog,
    Graph6(PathBuf),
    EdgeList(PathBuf),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
    pub source: Source,
}

/// An ordered list of named graphs.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

/// Catalog entries of the default corpus.
pub const DEFAULT_CATALOG: &[&str] = &[
    "complete(2)",
    "complete(3)",
    "complete(4)",
    "cycle(5)",
    "cycle(9)",
    "path(5)",
    "k33",
    "cube",
    "petersen",
    "heawood",
    "tutte_8_cage",
    "complete_multipartite(3,2)",
    "icosahedron",
    "circulant(9,1,2)",
    "torus(7,7)",
    "line(complete(4))",
    "line(k33)",
    "line(cube)",
    "line(petersen)",
    "line(heawood)",
    "line(tutte_8_cage)",
];

impl Corpus {
    pub fn new() -> Self {
        Corpus::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, name: impl Into<String>, graph: Graph, source: Source) {
        let name = name.into();
        let graph = graph.with_name(name.clone());
        self.entries.push(CorpusEntry { name, graph, source });
    }

    pub fn push_catalog(&mut self, name: &CatalogName) -> Result<()> {
        let g = catalog(name)?;
        self.push(name.to_string(), g, Source::Catalog);
        Ok(())
    }

    pub fn default_catalog() -> Self {
        let mut c = Corpus::new();
        for name in DEFAULT_CATALOG {
            c.push_catalog(&name.parse().expect("valid catalog name")).expect("valid catalog entry");
        }
        c
    }

    /// Loads a file, or every `.g6` / `.edges` / `.txt` file of a directory in
    /// name order.
    pub fn load_path(&mut self, path: &Path) -> Result<()> {
        if path.is_dir() {
            let io = |e: std::io::Error| Error::Io { path: path.display().to_string(), reason: e.to_string() };
            let mut files: Vec<PathBuf> = fs::read_dir(path)
                .map_err(io)?
                .map(|e| e.map(|e| e.path()).map_err(io))
                .collect::<Result<_>>()?;
            files.retain(|p| p.is_file() && matches!(extension(p), "g6" | "edges" | "txt"));
            files.sort();
            files.iter().try_for_each(|f| self.load_path(f))
        } else if extension(path) == "g6" {
            self.load_graph6(path)
        } else {
            self.load_edge_list(path)
        }
    }

    /// Every non-empty line is one graph; with more than one graph the names
    /// are suffixed `#1`, `#2`, ...
    pub fn load_graph6(&mut self, path: &Path) -> Result<()> {
        let text = read(path)?;
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let stem = stem(path);
        for (i, line) in lines.iter().enumerate() {
            let g = parse_graph6(line.as_bytes()).map_err(|e| Error::Io { path: path.display().to_string(), reason: e.to_string() })?;
            let name = if lines.len() == 1 { stem.clone() } else { format!("{stem}#{}", i + 1) };
            self.push(name, g, Source::Graph6(path.to_path_buf()));
        }
        Ok(())
    }

    pub fn load_edge_list(&mut self, path: &Path) -> Result<()> {
        let g = parse_edge_list(&read(path)?)?;
        self.push(stem(path), g, Source::EdgeList(path.to_path_buf()));
        Ok(())
    }
}

fn extension(p: &Path) -> &str {
    p.extension().and_then(|e| e.to_str()).unwrap_or("")
}

fn stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), reason: e.to_string() })
}

/// Whitespace-separated `u v` lines with 0-based vertices; blank lines and
/// `#` comments are skipped. The order is one more than the largest vertex.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: &str| Error::EdgeList { line: i + 1, reason: reason.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad("expected two vertex ids"));
        }
        let u = fields[0].parse::<usize>().map_err(|_| bad("vertex is not a non-negative integer"))?;
        let v = fields[1].parse::<usize>().map_err(|_| bad("vertex is not a non-negative integer"))?;
        if u == v {
            return Err(bad("self-loop"));
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or(Error::EmptyGraph)?;
    Graph::new(n, edges)
}

/// Which checks to run and at which lengths.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub checks: Vec<CheckKind>,
    /// Fixed lengths; by default every applicable length is tried.
    pub lengths: Option<Vec<usize>>,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { checks: CheckKind::ALL.to_vec(), lengths: None, timings: true }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOutcome {
    pub reports: Vec<VerdictReport>,
}

impl RunOutcome {
    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| r.is_fail()).count()
    }

    /// `0` without failures, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failures() > 0)
    }
}

/// Lengths at which an s-parametrized check runs for this subject.
fn lengths_for(kind: CheckKind, subject: &Subject, fixed: &Option<Vec<usize>>) -> Vec<usize> {
    if let Some(v) = fixed {
        return v.clone();
    }
    match kind {
        CheckKind::Lmap => LMAP_LENGTHS.to_vec(),
        _ => match subject.max_s() {
            Some(max) if max >= 2 => (2..=max).collect(),
            _ => vec![2],
        },
    }
}

/// Runs the selected checks on one graph, in check order then length order.
pub fn run_checks(entry: &CorpusEntry, subject: &Subject, options: &RunOptions) -> Vec<VerdictReport> {
    let mut out = Vec::new();
    let mut checks = options.checks.clone();
    checks.sort();
    checks.dedup();
    for kind in checks {
        if kind.takes_length() {
            for s in lengths_for(kind, subject, &options.lengths) {
                out.push(match kind {
                    CheckKind::LineEquivalence => check_line_equivalence(subject, s),
                    CheckKind::Lmap => check_lmap_theorem(subject, s),
                    _ => check_weiss_flag(subject, s),
                });
            }
        } else {
            out.push(match kind {
                CheckKind::DiameterShift => check_diameter_lemma(&entry.graph),
                CheckKind::ClassifyV4G3 => classify_valency4_girth3(subject),
                CheckKind::LocallyCyclic => check_locally_cyclic(subject),
                _ => check_fixture_integrity(&entry.name, &entry.graph),
            });
        }
    }
    if !options.timings {
        out.iter_mut().for_each(|r| r.elapsed_ms = None);
    }
    out
}

/// Checks every graph in parallel; reports keep corpus order.
pub fn run_corpus(corpus: &Corpus, options: &RunOptions) -> RunOutcome {
    let per_graph: Vec<Vec<VerdictReport>> = corpus
        .entries
        .par_iter()
        .map(|entry| run_checks(entry, &Subject::new(&entry.graph), options))
        .collect();
    RunOutcome { reports: per_graph.into_iter().flatten().collect() }
}
