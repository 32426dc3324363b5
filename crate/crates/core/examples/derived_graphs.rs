// Line graphs, total graphs, subdivisions, contractions, minors and
// homeomorphic transfer.

use std::error::Error;

use iasi::construct::{
    canonical_iasi, contraction_labeling, homeomorphic_transfer, line_graph_labeling, minor_labeling,
    subdivision_labeling, total_graph_labeling, Homeomorphism, Target,
};
use iasi::graph::MinorStep;
use iasi::Graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = canonical_iasi(&Graph::star(3))?.labeling;

    let line = line_graph_labeling(&f)?;
    println!(
        "L(K1,3): formula iasi {}, repaired {}, final iasi {}",
        line.formula_is_iasi, line.repaired, line.report.is_set_indexer()
    );
    assert!(line.report.is_set_indexer());

    let total = total_graph_labeling(&f)?;
    println!("T(K1,3): {} vertices, {} repairs", total.labeling.graph().vertex_count(), total.repairs.len());
    assert!(total.report.is_set_indexer());

    let sub = subdivision_labeling(&f, 0, 1, Target::Iasi)?;
    println!("new vertex label {}", sub.labeling.label(4));
    assert!(sub.report.is_set_indexer());

    let con = contraction_labeling(&canonical_iasi(&Graph::cycle(4))?.labeling, 0, 1, Target::Iasi)?;
    println!("C4 / 01 labels {:?}", con.labeling.labels().iter().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(con.labeling.graph().vertex_count(), 3);

    let script = [MinorStep::DeleteEdge(0, 1), MinorStep::Contract(0, 2)];
    let minor = minor_labeling(&canonical_iasi(&Graph::complete(4))?.labeling, &script, Target::Iasi)?;
    println!("K4 minor: {:?}", minor.labeling.graph().edges());
    assert!(minor.report.is_set_indexer());

    // C3 subdivided once is C4; relabel it as the standard C4 then undo
    let h = Homeomorphism {
        subdivisions: vec![(0, 1)],
        target: Graph::cycle(4),
        isomorphism: vec![0, 2, 3, 1],
        reductions: vec![],
    };
    let moved = homeomorphic_transfer(&canonical_iasi(&Graph::complete(3))?.labeling, &h, Target::Iasi)?;
    println!("transfer onto C4: iasi {}", moved.report.is_set_indexer());
    assert_eq!(moved.labeling.graph(), &Graph::cycle(4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
