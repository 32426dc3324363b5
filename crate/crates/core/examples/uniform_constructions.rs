// Two-uniform, weakly uniform and strongly uniform set-indexers.

use std::error::Error;

use iasi::construct::{strongly_uniform_iasi, two_uniform_iasi, weakly_uniform_iasi, UniformOutcome};
use iasi::labeling::strong_structure_check;
use iasi::Graph;

fn show(name: &str, out: &UniformOutcome) {
    match out {
        UniformOutcome::Built(o) => {
            let labels: Vec<String> = o.labeling.labels().iter().map(ToString::to_string).collect();
            println!("{name}: {} (k = {:?})", labels.join(" "), o.report.edge_uniform_k);
        }
        UniformOutcome::Impossible { reason, odd_cycle } => {
            println!("{name}: impossible, {reason}; odd cycle {odd_cycle:?}");
        }
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c6 = Graph::cycle(6);
    let k3 = Graph::complete(3);

    let out = two_uniform_iasi(&c6)?;
    show("2-uniform C6", &out);
    assert_eq!(out.built().unwrap().report.edge_uniform_k, Some(2));
    let out = two_uniform_iasi(&k3)?;
    show("2-uniform K3", &out);
    assert!(!out.is_built());

    let out = weakly_uniform_iasi(&Graph::complete_bipartite(2, 3), 4)?;
    show("weak 4-uniform K2,3", &out);
    assert!(out.built().unwrap().report.is_weak_iasi());

    let out = strongly_uniform_iasi(&Graph::star(3), 3)?;
    show("strong 3-uniform K1,3", &out);
    assert!(out.built().unwrap().report.is_strong_iasi());

    // odd cycles admit strong k-uniform labelings only for square k
    for k in [2, 4, 9] {
        let out = strongly_uniform_iasi(&Graph::cycle(5), k)?;
        show(&format!("strong {k}-uniform C5"), &out);
        if let Some(o) = out.built() {
            assert!(strong_structure_check(&o.labeling).holds);
        }
        assert_eq!(out.is_built(), k != 2);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
