// Classify a hand-written labeling of the 4-cycle.

use std::error::Error;

use iasi::labeling::{strong_structure_check, weak_structure_check};
use iasi::{Graph, IntegerSet, SetLabeling};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::cycle(4);
    let labels = vec![
        IntegerSet::new([0])?,
        IntegerSet::new([0, 1])?,
        IntegerSet::new([2])?,
        IntegerSet::new([0, 4])?,
    ];
    let f = SetLabeling::new(g, labels)?;
    let report = f.classify();

    for e in &report.edges {
        println!(
            "{:?} -> {} (size {}, neglecting {})",
            e.edge, e.label, e.set_indexing_number, e.neglecting_number
        );
    }
    println!(
        "iasl {} iasi {} weak {} strong {} k {:?}",
        report.is_iasl, report.is_iasi, report.is_weak, report.is_strong, report.edge_uniform_k
    );
    assert!(report.is_set_indexer());
    assert!(report.is_weak);
    assert_eq!(report.edge_uniform_k, Some(2));
    assert!(weak_structure_check(&f).holds);
    assert!(strong_structure_check(&f).holds);

    // two vertices sharing a label break injectivity
    let g = Graph::path(3);
    let same = IntegerSet::new([1, 2])?;
    let bad = SetLabeling::new(g, vec![same.clone(), IntegerSet::new([0])?, same])?;
    let report = bad.classify();
    println!("violations: {:?}", report.violations);
    assert!(!report.is_iasl);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
