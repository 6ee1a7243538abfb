//! The `example` subcommand: canned computations reproducing the standard
//! tables for the assembled species.

use gamma_species::expand::expand_symmetric;
use gamma_species::library;
use gamma_species::perm::{FiniteGroup, GroupElement};
use gamma_species::series::{integral_count, CycleIndexSeries};
use gamma_species::Result;

use crate::output::OutputRecord;

pub const EXAMPLE_NAMES: &[&str] = &[
    "rblt",
    "digraph-conversity",
    "binary-tree-reversal",
    "paths-polygons",
    "self-complementary-graphs",
    "kary-interchange",
];

pub fn run_example(name: &str) -> Option<Result<Vec<OutputRecord>>> {
    match name {
        "rblt" => Some(rblt()),
        "digraph-conversity" => Some(digraph_conversity()),
        "binary-tree-reversal" => Some(binary_tree_reversal()),
        "paths-polygons" => Some(paths_polygons()),
        "self-complementary-graphs" => Some(self_complementary_graphs()),
        "kary-interchange" => Some(kary_interchange()),
        _ => None,
    }
}

/// Rooted binary leaf-multi-labeled trees: R = X + E_2(R); the number of
/// trees with 8 leaves labeled from a 4-element set is the sum of all
/// degree-8 monomial coefficients of the 4-variable expansion.
fn rblt() -> Result<Vec<OutputRecord>> {
    let r = CycleIndexSeries::placeholder("R");
    r.define(&library::singleton().add(&library::set_of_size(2).plethysm(&r)))?;
    let expansion = expand_symmetric(&r, 4, 8)?;
    let total = expansion.monomial_total(8);
    let count = integral_count(&total, "rblt colored-structure count")?;
    Ok(vec![OutputRecord::new(8, "profile", "total", count)])
}

/// Conversity classes of digraphs: quotient isotype counts for n = 0..6.
fn digraph_conversity() -> Result<Vec<OutputRecord>> {
    let quotient = library::digraph_gcis().quotient();
    let mut records = Vec::new();
    for n in 0..=6u32 {
        let count = integral_count(&quotient.isotype_count(n)?, "digraph conversity count")?;
        records.push(OutputRecord::new(n, "isotype", "-", count));
    }
    Ok(records)
}

/// Reversal classes of binary trees, indexed by internal-node count m (a
/// tree with m internal nodes has 2m + 1 vertices).
fn binary_tree_reversal() -> Result<Vec<OutputRecord>> {
    let quotient = library::binary_trees_with_reversal()?.quotient();
    let mut records = Vec::new();
    for m in 0..=9u32 {
        let count = integral_count(
            &quotient.isotype_count(2 * m + 1)?,
            "binary tree reversal count",
        )?;
        records.push(OutputRecord::new(m, "isotype", "-", count));
    }
    Ok(records)
}

/// Paths (linear orders up to reversal) and polygons (cyclic orders up to
/// reversal): quotient labeled and isotype counts for n = 0..6.
fn paths_polygons() -> Result<Vec<OutputRecord>> {
    let mut records = Vec::new();
    for (key, series) in [("path", library::paths()), ("polygon", library::polygons())] {
        for n in 0..=6u32 {
            let labeled = integral_count(&series.labeled_count(n)?, "labeled count")?;
            records.push(OutputRecord::new(n, "labeled", key, labeled));
        }
        for n in 0..=6u32 {
            let isotype = integral_count(&series.isotype_count(n)?, "isotype count")?;
            records.push(OutputRecord::new(n, "isotype", key, isotype));
        }
    }
    Ok(records)
}

/// Unlabeled self-complementary graphs: the isotype generating series of
/// the complementation component of the graph species, n = 1..5.
fn self_complementary_graphs() -> Result<Vec<OutputRecord>> {
    let graph = library::graph_gcis();
    let tau = GroupElement::from_cycles(2, &[&[1, 2]]).expect("transposition");
    let ogf = graph.isotype_ogf(&tau)?;
    let mut records = Vec::new();
    for n in 1..=5u32 {
        let count = integral_count(&ogf.coefficient(n)?, "self-complementary count")?;
        records.push(OutputRecord::new(n, "isotype", "tau", count));
    }
    Ok(records)
}

/// Ternary trees modulo the global S_3 slot interchange: quotient isotype
/// counts for n = 0..5 (brute-force verified).
fn kary_interchange() -> Result<Vec<OutputRecord>> {
    let k3 = library::kary_trees_with_interchange(FiniteGroup::symmetric(3))?;
    let quotient = k3.quotient();
    let mut records = Vec::new();
    for n in 0..=5u32 {
        let count = integral_count(&quotient.isotype_count(n)?, "ternary interchange count")?;
        records.push(OutputRecord::new(n, "isotype", "-", count));
    }
    Ok(records)
}
