mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{fixture_subgraph, graph, hybrid_oracle, reach_oracle};
use t2md_core::knowledge::{
    embed, hybrid_retrieve, normalize_str, span_text, threshold_filter, Category, KnowledgeError, KnowledgeGraph,
    Relation, RelationFilter, TermEdge, TermNode, VectorIndex,
};

fn random_graph() -> impl Strategy<Value = KnowledgeGraph> {
    (2usize..=20).prop_flat_map(|n| {
        let edge = (0..n, 0..n, 0..Relation::ALL.len());
        prop::collection::vec(edge, 0..40).prop_map(move |raw| {
            let nodes = (0..n)
                .map(|i| TermNode::new(format!("n{i}"), format!("term{i}"), Category::Condition, "x."))
                .collect();
            let mut seen = BTreeSet::new();
            let edges = raw
                .into_iter()
                .filter(|(a, b, r)| a != b && seen.insert((*a, *b, *r)))
                .map(|(a, b, r)| TermEdge::new(format!("n{a}"), Relation::ALL[r], format!("n{b}")))
                .collect();
            KnowledgeGraph::from_parts(nodes, edges, 1).unwrap()
        })
    })
}

fn fixture_ids() -> Vec<String> {
    graph().nodes().map(|n| n.id.clone()).collect()
}

fn surfaces() -> Vec<String> {
    graph().nodes().flat_map(|n| n.surface_forms.clone()).collect()
}

proptest! {
    #[test]
    fn neighborhood_matches_expansion(g in random_graph(), seed in 0usize..20, depth in 1usize..=3, mask in 1u8..64) {
        let seed = format!("n{}", seed % g.len());
        let allowed: BTreeSet<Relation> = Relation::ALL.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|p| *p.1).collect();
        let got = g.neighborhood_ids(&seed, &RelationFilter::only(allowed.iter().copied()), depth).unwrap();
        prop_assert_eq!(&got, &reach_oracle(g.edges(), &allowed, &seed, depth));
        let sub = g.neighborhood(&seed, &RelationFilter::only(allowed.iter().copied()), depth).unwrap();
        prop_assert_eq!(sub.nodes().map(|n| n.id.clone()).collect::<BTreeSet<_>>(), got);
        prop_assert!(sub.edges().iter().all(|e| allowed.contains(&e.relation)));
    }

    #[test]
    fn matches_are_sorted_and_disjoint(text in "[a-z ,.]{0,20}( (metformin|insulin|HbA1c|blood sugar|type 2 diabetes|hypoglycemia)[a-z ,.]{0,8}){0,5}") {
        let matches = graph().find_terms(&text);
        for w in matches.windows(2) {
            prop_assert!(w[0].span.1 <= w[1].span.0, "{:?}", matches);
        }
        let len = text.chars().count();
        for m in &matches {
            prop_assert!(m.span.0 < m.span.1 && m.span.1 <= len);
            let node = graph().node(&m.node_id).unwrap();
            let hit = normalize_str(&span_text(&text, m.span));
            prop_assert!(node.surface_forms.iter().any(|s| normalize_str(s) == hit), "{} for {}", hit, m.node_id);
        }
    }

    #[test]
    fn every_surface_matches_alone(i in 0usize..10_000, upper in any::<bool>()) {
        let all = surfaces();
        let s = &all[i % all.len()];
        let text = if upper { s.to_uppercase() } else { s.clone() };
        let matches = graph().find_terms(&text);
        prop_assert_eq!(matches.len(), 1, "{:?} gave {:?}", text, matches);
        prop_assert_eq!(matches[0].span, (0, text.chars().count()));
    }

    #[test]
    fn embeddings_are_unit_or_zero(text in "\\PC{0,60}") {
        let v = embed(&text);
        prop_assert!(v.is_zero() || (v.norm() - 1.0).abs() < 1e-9);
        prop_assert_eq!(v.clone(), embed(&text));
        let c = v.cosine(&embed("blood sugar"));
        prop_assert!((-1.0 - 1e-9..=1.0 + 1e-9).contains(&c));
    }

    #[test]
    fn hybrid_equals_oracle(picks in prop::collection::btree_set(0usize..1000, 1..=10), words in prop::collection::vec(0usize..1000, 0..4), k in 1usize..8, rrf_k in 1.0..100.0f64) {
        let ids = fixture_ids();
        let set: BTreeSet<String> = picks.iter().map(|p| ids[p % ids.len()].clone()).collect();
        let sub = fixture_subgraph(&set);
        let index = VectorIndex::from_graph(&sub);
        let all = surfaces();
        let query = words.iter().map(|w| all[w % all.len()].as_str()).collect::<Vec<_>>().join(" and ");
        let got = hybrid_retrieve(&query, &sub, &index, k, rrf_k);
        let want = hybrid_oracle(&query, &sub, &index, k, rrf_k);
        prop_assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(&want) {
            prop_assert_eq!(&g.doc_id, &w.0);
            prop_assert!((g.score - w.1).abs() < 1e-12);
        }
        prop_assert!(got.len() <= k);
        prop_assert!(got.windows(2).all(|w| w[0].score >= w[1].score));
    }

    #[test]
    fn threshold_is_idempotent(words in prop::collection::vec(0usize..1000, 1..4), min in 0.0..0.05f64) {
        let all = surfaces();
        let query = words.iter().map(|w| all[w % all.len()].as_str()).collect::<Vec<_>>().join(" ");
        let index = VectorIndex::from_graph(graph());
        let results = hybrid_retrieve(&query, graph(), &index, 10, 60.0);
        let once = threshold_filter(&results, min);
        prop_assert_eq!(threshold_filter(&once, min), once.clone());
        prop_assert!(once.iter().all(|r| r.score >= min));
        prop_assert_eq!(once.len(), results.iter().filter(|r| r.score >= min).count());
    }
}

#[test]
fn graph_validation_rejects_bad_parts() {
    let a = TermNode::new("a", "alpha", Category::Drug, "x.");
    let b = TermNode::new("b", "beta", Category::Drug, "x.");
    assert!(matches!(
        KnowledgeGraph::from_parts(vec![a.clone(), a.clone()], vec![], 1),
        Err(KnowledgeError::DuplicateId(_))
    ));
    assert!(matches!(
        KnowledgeGraph::from_parts(vec![a.clone()], vec![TermEdge::new("a", Relation::Treats, "z")], 1),
        Err(KnowledgeError::DanglingEndpoint(_))
    ));
    assert!(matches!(
        KnowledgeGraph::from_parts(vec![a.clone(), b], vec![TermEdge::new("a", Relation::Treats, "a")], 1),
        Err(KnowledgeError::SelfLoop(_))
    ));
    assert!(matches!(
        graph().neighborhood_ids("nope", &RelationFilter::all(), 1),
        Err(KnowledgeError::UnknownNode(_))
    ));
    let some = graph().nodes().next().unwrap().id.clone();
    assert!(matches!(
        graph().neighborhood_ids(&some, &RelationFilter::all(), 4),
        Err(KnowledgeError::InvalidDepth(4))
    ));
}

#[test]
fn document_round_trip() {
    let doc = graph().to_document();
    let back = KnowledgeGraph::parse_document(&doc).unwrap();
    assert_eq!(back.to_document(), doc);
    assert_eq!(back.len(), graph().len());
}
