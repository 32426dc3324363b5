mod common;

use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use common::{set, to_vec};
use iasi::construct::{
    canonical_iasi, contraction_labeling, corona_labeling, induced_labeling, line_graph_labeling,
    rooted_labeling, subdivision_labeling, total_graph_labeling, Operation, Target,
};
use iasi::graph::{self, parse_graph6, write_graph6, ProductKind};
use iasi::search::{self, SearchConfig};
use iasi::{Graph, IntegerSet, SetLabeling};

fn small_set() -> impl Strategy<Value = IntegerSet> {
    btree_set(0u64..40, 1..6).prop_map(|s| IntegerSet::new(s).unwrap())
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn labeling(max_n: usize) -> impl Strategy<Value = SetLabeling> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        vec(small_set(), n).prop_map(move |labels| SetLabeling::new(g.clone(), labels).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sumset_matches_pair_enumeration(a in small_set(), b in small_set()) {
        let s = a.sumset(&b).unwrap();
        prop_assert_eq!(to_vec(&s), common::sumset(&to_vec(&a), &to_vec(&b)));
        prop_assert_eq!(&s, &b.sumset(&a).unwrap());
        prop_assert!(a.len().max(b.len()) <= s.len() && s.len() <= a.len() * b.len());
        prop_assert!(a.len() + b.len() - 1 <= s.len());
    }

    #[test]
    fn full_sumset_iff_disjoint_differences(a in small_set(), b in small_set()) {
        let full = a.sumset(&b).unwrap().len() == a.len() * b.len();
        prop_assert_eq!(full, a.difference_set().is_disjoint(&b.difference_set()));
        let naive = common::differences(&to_vec(&a)).is_disjoint(&common::differences(&to_vec(&b)));
        prop_assert_eq!(full, naive);
    }

    #[test]
    fn compatibility_table_accounts_for_every_pair(a in small_set(), b in small_set()) {
        let t = a.compatibility_table(&b);
        prop_assert_eq!(t.pair_count(), a.len() * b.len());
        prop_assert_eq!(t.index, a.sumset(&b).unwrap().len());
        prop_assert_eq!(t.index + t.neglecting_number, a.len() * b.len());
        prop_assert!(t.max_class_size <= a.len().min(b.len()));
        let sizes = common::class_sizes(&to_vec(&a), &to_vec(&b));
        for (sum, members) in &t.classes {
            prop_assert_eq!(sizes[sum], members.len());
        }
    }

    #[test]
    fn multiple_scales_every_element(a in small_set(), n in 1u64..20) {
        prop_assert!(a.multiple(0).is_err());
        let m = a.multiple(n).unwrap();
        prop_assert_eq!(m.len(), a.len());
        let want: common::Set = a.iter().map(|x| x * n).collect();
        prop_assert_eq!(to_vec(&m), want);
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = write_graph6(&g);
        prop_assert_eq!(&parse_graph6(&s).unwrap(), &g);
        prop_assert_eq!(&s, &common::encode_graph6(g.vertex_count(), g.edges()));
        prop_assert_eq!(common::decode_graph6(&s), Some((g.vertex_count(), g.edges().to_vec())));
    }

    #[test]
    fn classification_matches_reference(f in labeling(6)) {
        let r = f.classify();
        let labels: Vec<_> = f.labels().iter().map(to_vec).collect();
        let naive = common::classify(&labels, f.graph().edges());
        prop_assert_eq!(r.is_iasl, naive.iasl);
        prop_assert_eq!(r.is_iasi, naive.iasi);
        prop_assert_eq!(r.is_weak, naive.weak);
        prop_assert_eq!(r.is_strong, naive.strong);
        let k = naive.edge_sizes.first().copied().filter(|&k| naive.edge_sizes.iter().all(|&s| s == k));
        prop_assert_eq!(r.edge_uniform_k, k);
        prop_assert_eq!(r.is_weak, iasi::labeling::weak_structure_check(&f).holds);
        prop_assert_eq!(r.is_strong, iasi::labeling::strong_structure_check(&f).holds);
    }

    #[test]
    fn canonical_labeling_is_a_set_indexer(g in graph(12)) {
        let out = canonical_iasi(&g).unwrap();
        prop_assert!(out.report.is_set_indexer());
        prop_assert!(!out.repaired);
    }

    #[test]
    fn set_indexers_restrict_to_induced_subgraphs(g in graph(8), keep in vec(any::<bool>(), 8)) {
        let f = canonical_iasi(&g).unwrap().labeling;
        let subset: Vec<usize> = g.vertices().filter(|&v| keep[v]).collect();
        prop_assume!(!subset.is_empty());
        let sub = graph::induced_subgraph(&g, &subset).unwrap();
        prop_assert!(f.restrict(&sub).classify().is_set_indexer());
    }

    #[test]
    fn binary_operations_reach_their_target(f1 in labeling(4), f2 in labeling(4), kind in 0usize..6) {
        let op = match kind {
            0 => Operation::Join,
            1 => Operation::Union { shared: vec![] },
            k => Operation::Product { kind: ProductKind::ALL[k - 2] },
        };
        let out = induced_labeling(&op, &f1, Some(&f2), Target::Iasi).unwrap();
        prop_assert!(out.reaches(Target::Iasi));
        prop_assert_eq!(out.repaired, !out.repairs.is_empty());
        let out = corona_labeling(&f1, &f2, Target::Iasl).unwrap();
        prop_assert!(out.report.is_iasl);
        let out = rooted_labeling(&f1, &f2, 0, Target::Iasi).unwrap();
        prop_assert!(out.report.is_set_indexer());
    }

    #[test]
    fn unary_operations_reach_their_target(f in labeling(5)) {
        prop_assert!(induced_labeling(&Operation::Complement, &f, None, Target::Iasi).unwrap().reaches(Target::Iasi));
        prop_assert!(line_graph_labeling(&f).unwrap().report.is_set_indexer());
        prop_assert!(total_graph_labeling(&f).unwrap().report.is_set_indexer());
        if let Some(&(u, v)) = f.graph().edges().first() {
            prop_assert!(subdivision_labeling(&f, u, v, Target::Iasi).unwrap().report.is_set_indexer());
            prop_assert!(contraction_labeling(&f, u, v, Target::Iasi).unwrap().report.is_set_indexer());
        }
    }

    #[test]
    fn repair_leaves_verified_labels_alone(g in graph(6)) {
        let f = canonical_iasi(&g).unwrap().labeling;
        let out = induced_labeling(&Operation::Complement, &f, None, Target::Iasi).unwrap();
        prop_assert!(!out.repaired);
        prop_assert_eq!(out.labeling.labels(), f.labels());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_certificates_reverify(g in graph(4), k in 1usize..4) {
        let c = search::find_k_uniform(&g, k, &SearchConfig::new(5, 3)).unwrap();
        prop_assert!(c.reverify());
        if let Some(w) = &c.witness {
            let f = w.to_labeling().unwrap();
            let labels: Vec<_> = f.labels().iter().map(to_vec).collect();
            let naive = common::classify(&labels, f.graph().edges());
            prop_assert!(naive.iasl && naive.iasi);
            prop_assert!(naive.edge_sizes.iter().all(|&s| s == k));
        }
    }

    #[test]
    fn minimum_ground_set_meets_the_log_bound(g in graph(5)) {
        let r = search::min_ground_set_size(&g, &SearchConfig::default()).unwrap();
        let m = r.size.unwrap();
        prop_assert!(m >= r.lower_bound);
        prop_assert!((1usize << m) > g.vertex_count());
        let f = r.certificate.witness.as_ref().unwrap().to_labeling().unwrap();
        let x: common::Set = f.labels().iter().flat_map(|l| l.iter()).collect();
        prop_assert!(x.len() <= m);
        prop_assert!(x.contains(&0));
    }
}

#[test]
fn sumset_example_through_reference() {
    assert_eq!(common::sumset(&set(&[1, 2]), &set(&[1, 3])), set(&[2, 3, 4, 5]));
}
