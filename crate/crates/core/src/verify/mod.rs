//! Claim checks, corpus handling and reports.

mod checks;
mod corpus;
mod report;

pub use checks::{
    check_diameter_lemma, check_fixture_integrity, check_line_equivalence, check_lmap_theorem, check_locally_cyclic,
    check_weiss_flag, classify_valency4_girth3, equivalence_sides, girth_bound_holds, EquivalenceSides, LineData,
    Subject, EQUIVARIANCE_SAMPLES, EQUIVARIANCE_SEED,
};
pub use corpus::{
    parse_edge_list, run_checks, run_corpus, CheckKind, Corpus, CorpusEntry, RunOptions, RunOutcome, Source,
    DEFAULT_CATALOG, LMAP_LENGTHS,
};
pub use report::{format_table, tally, to_records, Verdict, VerdictReport};
