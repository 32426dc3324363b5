// Bounded search: uniform set-indexers, minimum ground sets and the binomial
// bound.

use std::error::Error;
use std::time::Duration;

use iasi::search::{self, CertificateKind, EdgeConstraint, SearchConfig};
use iasi::Graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let config = SearchConfig::new(6, 3);

    let c = search::find_k_uniform(&Graph::cycle(4), 2, &config)?;
    let w = c.witness.as_ref().expect("C4 is bipartite");
    println!("C4 2-uniform witness over {}: {:?}", c.space, w.labeling.labels);
    assert!(c.reverify());

    let c = search::find_k_uniform(&Graph::complete(3), 2, &config)?;
    println!("K3 2-uniform: {:?} over {}", c.kind, c.space);
    assert_eq!(c.kind, CertificateKind::Exhausted);

    let c = search::find_constrained(&Graph::path(4), EdgeConstraint::StronglyUniform { k: 4 }, &config)?;
    println!("P4 strong 4-uniform: {:?}", c.witness.map(|w| w.labeling.labels));

    for g in [Graph::complete(2), Graph::complete(3), Graph::cycle(4), Graph::complete(4)] {
        let r = search::min_ground_set_size(&g, &SearchConfig::new(8, 4))?;
        println!(
            "n = {}, e = {}: lower bound {}, minimum {:?}",
            g.vertex_count(),
            g.edge_count(),
            r.lower_bound,
            r.size
        );
        let f = r.certificate.witness.as_ref().unwrap().to_labeling()?;
        // the binomial bound only speaks about labels of one common size
        if f.classify().vertex_uniform_l.is_some() {
            let bound = search::check_binomial_bound(&f)?;
            println!("  {} vertices <= C({}, {}) = {}", bound.vertices, bound.ground_set.len(), bound.label_size, bound.binomial);
            assert!(bound.holds);
        }
    }

    let tight = SearchConfig::new(20, 4).with_budget(Duration::from_millis(1));
    let c = search::find_k_uniform(&Graph::complete(7), 3, &tight)?;
    println!("K7 3-uniform under 1 ms: {:?}", c.kind);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
