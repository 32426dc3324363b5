// Parse, write, enumerate and render graphs.

use std::error::Error;

use iasi::graph::{enumerate_graphs, parse_graph6, to_dot, write_graph6, GraphFilter};
use iasi::Graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = parse_graph6("Bw")?;
    println!("Bw: {} vertices, edges {:?}", g.vertex_count(), g.edges());
    assert_eq!(g, Graph::complete(3));
    assert_eq!(write_graph6(&Graph::cycle(5)), "Dhc");

    match parse_graph6("C~~!") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("'!' is outside the graph6 alphabet"),
    }

    for n in 1..=5 {
        let all = enumerate_graphs(n, GraphFilter::ALL)?.count();
        let connected = enumerate_graphs(n, GraphFilter::CONNECTED)?.count();
        println!("n = {n}: {all} labeled graphs, {connected} connected");
    }
    assert_eq!(enumerate_graphs(4, GraphFilter::ALL)?.count(), 64);
    assert_eq!(enumerate_graphs(4, GraphFilter::CONNECTED)?.count(), 38);

    let b = Graph::cycle(5).is_bipartite();
    println!("C5 odd cycle: {:?}", b.odd_cycle());
    assert!(!b.is_bipartite());

    print!("{}", to_dot(&Graph::star(3), None));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
