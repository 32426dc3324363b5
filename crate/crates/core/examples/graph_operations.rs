// Labelings induced on unions, joins, products, coronas and rooted products.

use std::error::Error;

use iasi::construct::{
    canonical_iasi, corona_labeling, induced_labeling, rooted_labeling, ConstructionOutcome, Operation, Target,
};
use iasi::graph::ProductKind;
use iasi::{Graph, IntegerSet, SetLabeling};

fn summary(name: &str, o: &ConstructionOutcome) {
    let g = o.labeling.graph();
    println!(
        "{name}: {} vertices, {} edges, iasl {}, iasi {}, repaired {}",
        g.vertex_count(),
        g.edge_count(),
        o.report.is_iasl,
        o.report.is_iasi,
        o.repaired
    );
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f1 = canonical_iasi(&Graph::path(3))?.labeling;
    let f2 = SetLabeling::new(
        Graph::complete(2),
        vec![IntegerSet::new([0, 8])?, IntegerSet::new([16])?],
    )?;

    // vertex 2 of the first path and vertex 0 of the second are identified,
    // so they must carry the same label
    let f3 = SetLabeling::new(
        Graph::path(3),
        vec![IntegerSet::new([4])?, IntegerSet::new([32])?, IntegerSet::new([64])?],
    )?;
    let out = induced_labeling(&Operation::Union { shared: vec![(2, 0)] }, &f1, Some(&f3), Target::Iasi)?;
    assert_eq!(out.labeling.graph(), &Graph::path(5));
    summary("P3 glued to P3", &out);

    let out = induced_labeling(&Operation::Join, &f1, Some(&f2), Target::Iasl)?;
    summary("P3 join K2", &out);
    assert!(out.report.is_iasl);

    for kind in ProductKind::ALL {
        let out = induced_labeling(&Operation::Product { kind }, &f1, Some(&f2), Target::Iasl)?;
        summary(&format!("P3 {kind:?} K2"), &out);
        assert!(out.report.is_iasl);
    }

    let out = corona_labeling(&f1, &f2, Target::Iasl)?;
    summary("P3 corona K2", &out);
    let out = rooted_labeling(&f1, &f2, 1, Target::Iasi)?;
    summary("P3 rooted K2", &out);
    for note in &out.notes {
        println!("  {note}");
    }
    assert!(out.report.is_set_indexer());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
