// Run oracle checks and inspect their certificates.

use std::error::Error;

use iasi::oracle::{self, CheckId, Corpus, OracleContext, Verdict};
use iasi::search::SearchConfig;
use iasi::IntegerSet;

// a deliberately wrong sum set: drops the largest element
fn lossy_sumset(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    let s = a.sumset(b).expect("small sets");
    match s.len() {
        1 => s,
        n => IntegerSet::new(s.iter().take(n - 1)).expect("subset"),
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let config = SearchConfig::default();

    for id in [CheckId::EveryGraphIasi, CheckId::NeglectingNumberIdentity, CheckId::TwoUniformBipartite] {
        let corpus = Corpus::default_for(id);
        let check = oracle::run_check(id, &corpus, &config)?;
        println!("{id}: {:?} over {} ({} cases)", check.verdict, check.domain, check.cases);
        assert_eq!(check.verdict, Verdict::Pass);
    }

    let check = oracle::run_check(CheckId::LineGraphIasi, &Corpus::enumerated(1, 4, true), &config)?;
    println!("{}: {:?}, {} anomalies", check.id, check.verdict, check.anomalies.len());
    if let Some(c) = check.anomalies.first() {
        println!("  e.g. {}", c.detail);
        assert!(c.reverify());
    }

    let broken = OracleContext { sumset: lossy_sumset };
    let corpus = Corpus::enumerated(1, 1, false).with_labels(3, 2);
    let check = oracle::run_check_with(CheckId::SumsetCardinalityBounds, &corpus, &config, &broken)?;
    println!("with a broken sum set: {:?}", check.verdict);
    let cx = &check.counterexamples[0];
    println!("  {}", cx.detail);
    assert_eq!(check.verdict, Verdict::Counterexample);
    assert!(!cx.reverify(), "the real arithmetic does not reproduce it");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
