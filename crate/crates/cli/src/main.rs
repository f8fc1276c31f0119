use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use linesym_core::graph6::{parse_graph6, to_graph6_string};
use linesym_core::metrics::{diameter, girth, local_type, LocalKind};
use linesym_core::symmetry::{orbit_of, transitive_on};
use linesym_core::verify::{
    format_table, run_checks, run_corpus, to_records, CheckKind, Corpus, CorpusEntry, RunOptions, Source, Subject,
    VerdictReport,
};
use linesym_core::walks::{enumerate_arcs, enumerate_geodesics};
use linesym_core::{
    automorphisms, catalog, clique_graph, line_graph, subdivision_graph, AutGroup, CatalogName, Graph, Permutation,
};

#[derive(Parser)]
#[command(name = "linesym", version, about = "Line graphs, arc and geodesic transitivity, and claim checks")]
struct Cli {
    /// Output style on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write line-delimited JSON records to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Omit elapsed times from reports.
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Named graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build a derived graph and print it in graph6.
    Construct {
        #[command(flatten)]
        kind: ConstructKind,
        #[command(flatten)]
        input: Input,
    },
    /// Print basic invariants.
    Invariants {
        #[command(flatten)]
        input: Input,
    },
    /// Orbits of the group on s-arcs or s-geodesics.
    Orbits {
        #[command(flatten)]
        tuples: TupleKind,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Run one check on one graph.
    Verify {
        /// Check name (claim id or alias: thm13, lemma22, thm32, classify-v4g3, locally-cyclic, weiss).
        #[arg(long)]
        check: String,
        /// Arc length; all applicable lengths when omitted.
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Batch runs over a corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog families with an example of each.
    List,
}

#[derive(Subcommand)]
enum CorpusAction {
    Run {
        /// Include the default catalog corpus.
        #[arg(long)]
        all: bool,
        /// graph6 / edge-list files or directories to add.
        #[arg(long = "path", value_name = "PATH")]
        paths: Vec<PathBuf>,
        /// Restrict to these checks (repeatable); all checks by default.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Fixed arc lengths (repeatable).
        #[arg(long)]
        s: Vec<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConstructKind {
    #[arg(long)]
    line: bool,
    #[arg(long)]
    subdivision: bool,
    #[arg(long)]
    clique: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TupleKind {
    #[arg(long, value_name = "S")]
    arcs: Option<usize>,
    #[arg(long, value_name = "S")]
    geodesics: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Catalog name, e.g. petersen or line(heawood).
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
    /// File holding one graph6 string.
    #[arg(long, value_name = "FILE")]
    graph6: Option<PathBuf>,
    /// File of "u v" lines, 0-based.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct GroupArgs {
    /// Generator in one-line notation (repeatable); the full automorphism
    /// group is used when none is given.
    #[arg(long = "generator", value_name = "PERM")]
    generators: Vec<String>,
}

fn file_stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into())
}

impl Input {
    fn load(&self) -> Result<(String, Graph)> {
        if let Some(name) = &self.catalog {
            let parsed: CatalogName = name.parse()?;
            return Ok((parsed.to_string(), catalog(&parsed)?));
        }
        if let Some(path) = &self.graph6 {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).context("no graph6 string in file")?;
            let name = file_stem(path);
            return Ok((name.clone(), parse_graph6(line.as_bytes())?.with_name(name)));
        }
        let path = self.edges.as_ref().expect("clap enforces one input");
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let name = file_stem(path);
        Ok((name.clone(), linesym_core::verify::parse_edge_list(&text)?.with_name(name)))
    }

    fn source(&self) -> Source {
        match (&self.graph6, &self.edges) {
            (Some(p), _) => Source::Graph6(p.clone()),
            (_, Some(p)) => Source::EdgeList(p.clone()),
            _ => Source::Catalog,
        }
    }
}

impl GroupArgs {
    fn group(&self, g: &Graph) -> Result<AutGroup> {
        if self.generators.is_empty() {
            return Ok(automorphisms(g));
        }
        let gens = self.generators.iter().map(|s| s.parse::<Permutation>()).collect::<Result<Vec<_>, _>>()?;
        for p in &gens {
            p.check_automorphism(g).with_context(|| format!("generator {p}"))?;
        }
        Ok(AutGroup::from_generators(g.order(), gens)?)
    }
}

fn emit(cli: &Cli, reports: &[VerdictReport]) -> Result<()> {
    if let Some(path) = &cli.report {
        fs::write(path, to_records(reports)).with_context(|| format!("writing {}", path.display()))?;
    }
    match cli.format {
        Format::Table => print!("{}", format_table(reports)),
        Format::Records => print!("{}", to_records(reports)),
    }
    Ok(())
}

fn local_summary(kind: Option<LocalKind>) -> String {
    match kind {
        Some(LocalKind::Cycle(n)) => format!("cycle({n})"),
        Some(LocalKind::DisjointCliques { m, r }) => format!("disjoint_cliques({m},{r})"),
        Some(LocalKind::Other) => "other".into(),
        None => "mixed".into(),
    }
}

/// Returns whether any check failed.
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Catalog { action: CatalogAction::List } => {
            for name in CatalogName::listing() {
                let g = catalog(&name)?;
                match cli.format {
                    Format::Table => println!("{:<40} {:>4} vertices {:>4} edges", name.to_string(), g.order(), g.size()),
                    Format::Records => println!(
                        "{}",
                        json!({ "name": name.to_string(), "order": g.order(), "size": g.size(), "graph6": to_graph6_string(&g) })
                    ),
                }
            }
            Ok(false)
        }
        Command::Construct { kind, input } => {
            let (_, g) = input.load()?;
            let derived = if kind.line {
                line_graph(&g)?
            } else if kind.subdivision {
                subdivision_graph(&g)?
            } else {
                clique_graph(&g)?
            };
            let h = derived.graph;
            match cli.format {
                Format::Table => println!("{}", to_graph6_string(&h)),
                Format::Records => println!(
                    "{}",
                    json!({ "name": h.name(), "order": h.order(), "size": h.size(), "graph6": to_graph6_string(&h) })
                ),
            }
            Ok(false)
        }
        Command::Invariants { input } => {
            let (name, g) = input.load()?;
            let aut = automorphisms(&g);
            let record = json!({
                "name": name,
                "order": g.order(),
                "size": g.size(),
                "regular": g.is_regular(),
                "complete": g.is_complete(),
                "connected": g.is_connected(),
                "diameter": diameter(&g),
                "girth": girth(&g),
                "local_type": local_summary(local_type(&g).summary),
                "aut_order": aut.order().to_string(),
                "graph6": to_graph6_string(&g),
            });
            match cli.format {
                Format::Table => {
                    for (k, v) in record.as_object().unwrap() {
                        let shown = match v {
                            serde_json::Value::Null => "none".to_string(),
                            serde_json::Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        println!("{k:<11} {shown}");
                    }
                }
                Format::Records => println!("{record}"),
            }
            Ok(false)
        }
        Command::Orbits { tuples, input, group } => {
            let (name, g) = input.load()?;
            let group = group.group(&g)?;
            let (label, s, walks) = match (tuples.arcs, tuples.geodesics) {
                (Some(s), _) => ("arcs", s, enumerate_arcs(&g, s)?),
                (_, Some(s)) => ("geodesics", s, enumerate_geodesics(&g, s)?),
                _ => unreachable!("clap enforces one kind"),
            };
            let list: Vec<Vec<usize>> = walks.into_iter().map(|w| w.into_vec()).collect();
            let (transitive, part) = transitive_on(&list, &group)?;
            let sizes = part.sizes();
            let reps: Vec<&[usize]> = part.representatives();
            let record = json!({
                "name": name,
                "tuples": label,
                "s": s,
                "count": list.len(),
                "orbits": part.count,
                "orbit_sizes": sizes,
                "representatives": reps,
                "transitive": transitive,
                "group_order": group.order().to_string(),
            });
            match cli.format {
                Format::Table => {
                    println!("{name}: {} {s}-{label}, {} orbit(s), group order {}", list.len(), part.count, group.order());
                    for (rep, size) in reps.iter().zip(&sizes) {
                        let full = orbit_of(rep, &group)?.len();
                        println!("  {rep:?}  size {size}{}", if full == *size { String::new() } else { format!(" (full orbit {full})") });
                    }
                    println!("transitive: {transitive}");
                }
                Format::Records => println!("{record}"),
            }
            Ok(false)
        }
        Command::Verify { check, s, input, group } => {
            let kind: CheckKind = check.parse()?;
            if s.is_some() && !kind.takes_length() {
                bail!("check {kind} does not take --s");
            }
            let (name, g) = input.load()?;
            let subject = Subject::with_group(&g, group.group(&g)?);
            let entry = CorpusEntry { name, graph: g, source: input.source() };
            let options = RunOptions { checks: vec![kind], lengths: s.map(|s| vec![s]), timings: !cli.no_timings };
            let reports = run_checks(&entry, &subject, &options);
            emit(cli, &reports)?;
            Ok(reports.iter().any(VerdictReport::is_fail))
        }
        Command::Corpus { action: CorpusAction::Run { all, paths, checks, s } } => {
            let mut corpus = if *all { Corpus::default_catalog() } else { Corpus::new() };
            for p in paths {
                corpus.load_path(p)?;
            }
            let checks = if checks.is_empty() {
                CheckKind::ALL.to_vec()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<Vec<CheckKind>, _>>()?
            };
            let options =
                RunOptions { checks, lengths: (!s.is_empty()).then(|| s.clone()), timings: !cli.no_timings };
            let outcome = run_corpus(&corpus, &options);
            emit(cli, &outcome.reports)?;
            Ok(outcome.failures() > 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
