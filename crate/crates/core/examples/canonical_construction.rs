// The universal power-of-two labeling, and repair of a colliding labeling.

use std::error::Error;

use iasi::construct::{canonical_iasi, induced_labeling, Operation, Target};
use iasi::graph::{enumerate_graphs, GraphFilter};
use iasi::{Graph, IntegerSet, SetLabeling};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let out = canonical_iasi(&Graph::complete(4))?;
    for (v, l) in out.labeling.labels().iter().enumerate() {
        println!("f({v}) = {l}");
    }
    assert!(out.report.is_set_indexer() && !out.repaired);

    let mut checked = 0;
    for n in 1..=5 {
        for g in enumerate_graphs(n, GraphFilter::ALL)? {
            assert!(canonical_iasi(&g)?.report.is_set_indexer());
            checked += 1;
        }
    }
    println!("canonical labeling is a set-indexer on all {checked} labeled graphs up to 5 vertices");

    // the complement of 4 isolated vertices is K4, where 0+3 = 1+2
    let f = SetLabeling::new(
        Graph::empty(4),
        (0..4).map(IntegerSet::singleton).collect::<Result<_, _>>()?,
    )?;
    let out = induced_labeling(&Operation::Complement, &f, None, Target::Iasi)?;
    println!("formula iasi: {}, repaired: {}", out.formula_is_iasi, out.repaired);
    for r in &out.repairs {
        println!("  vertex {}: {} -> {} ({:?})", r.vertex, r.original, r.replacement, r.reason);
    }
    assert!(!out.formula_is_iasi && out.repaired);
    assert!(out.report.is_set_indexer());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
