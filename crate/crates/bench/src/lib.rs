//! Fixtures shared by the criterion benches.

use linesym_core::{catalog, Graph};

/// Builds a catalog graph from its name, panicking on bad names.
pub fn fixture(name: &str) -> Graph {
    catalog(&name.parse().expect("catalog name")).expect("catalog graph")
}
