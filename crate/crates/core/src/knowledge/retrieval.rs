//! Exact vector search, graph-neighbourhood lookup and reciprocal rank
//! fusion of the two.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::embed::{embed, EmbeddingVector};
use super::graph::{KnowledgeGraph, RelationFilter};

pub const DEFAULT_RRF_K: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultSource {
    Graph,
    Vector,
    Fused,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedResult {
    pub doc_id: String,
    pub score: f64,
    pub source: ResultSource,
}

/// Canonical result order: score descending, then doc id ascending.
pub fn result_order(a: &RankedResult, b: &RankedResult) -> Ordering {
    b.score
        .partial_cmp(&a.score)
        .unwrap_or(Ordering::Equal)
        .then_with(|| a.doc_id.cmp(&b.doc_id))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexedDocument {
    pub doc_id: String,
    /// Graph node the document is attached to, if any.
    pub node_id: Option<String>,
    pub text: String,
    pub vector: EmbeddingVector,
}

/// In-memory exact cosine index.
#[derive(Debug, Clone, Default)]
pub struct VectorIndex {
    docs: BTreeMap<String, IndexedDocument>,
}

impl VectorIndex {
    pub fn new() -> Self {
        Self::default()
    }

    /// One document per node: its lay explanation, keyed by node id.
    pub fn from_graph(graph: &KnowledgeGraph) -> Self {
        let mut index = Self::new();
        for node in graph.nodes() {
            let text = format!("{}. {}", node.canonical_name, node.lay_explanation);
            index.insert(node.id.clone(), Some(node.id.clone()), text);
        }
        index
    }

    pub fn insert(&mut self, doc_id: impl Into<String>, node_id: Option<String>, text: impl Into<String>) {
        let doc_id = doc_id.into();
        let text = text.into();
        let vector = embed(&text);
        self.docs.insert(
            doc_id.clone(),
            IndexedDocument {
                doc_id,
                node_id,
                text,
                vector,
            },
        );
    }

    pub fn insert_vector(&mut self, doc_id: impl Into<String>, node_id: Option<String>, vector: EmbeddingVector) {
        let doc_id = doc_id.into();
        self.docs.insert(
            doc_id.clone(),
            IndexedDocument {
                doc_id,
                node_id,
                text: String::new(),
                vector,
            },
        );
    }

    pub fn get(&self, doc_id: &str) -> Option<&IndexedDocument> {
        self.docs.get(doc_id)
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn documents(&self) -> impl Iterator<Item = &IndexedDocument> {
        self.docs.values()
    }
}

/// Top-k documents by cosine similarity.
pub fn vector_search(query: &EmbeddingVector, index: &VectorIndex, k: usize) -> Vec<RankedResult> {
    let mut results: Vec<RankedResult> = index
        .documents()
        .map(|d| RankedResult {
            doc_id: d.doc_id.clone(),
            score: query.cosine(&d.vector).max(0.0),
            source: ResultSource::Vector,
        })
        .collect();
    results.sort_by(result_order);
    results.truncate(k.max(1));
    results
}

/// Documents attached to recognised terms (score 1.0) and to their
/// one-hop neighbours (score 0.5).
pub fn graph_candidates(query_text: &str, graph: &KnowledgeGraph, index: &VectorIndex) -> Vec<RankedResult> {
    let filter = RelationFilter::all();
    let mut seeds = BTreeSet::new();
    let mut neighbours = BTreeSet::new();
    for m in graph.find_terms(query_text) {
        seeds.insert(m.node_id.clone());
        if let Ok(ids) = graph.neighborhood_ids(&m.node_id, &filter, 1) {
            neighbours.extend(ids);
        }
    }
    let mut results: Vec<RankedResult> = index
        .documents()
        .filter_map(|d| {
            let node = d.node_id.as_ref()?;
            let score = if seeds.contains(node) {
                1.0
            } else if neighbours.contains(node) {
                0.5
            } else {
                return None;
            };
            Some(RankedResult {
                doc_id: d.doc_id.clone(),
                score,
                source: ResultSource::Graph,
            })
        })
        .collect();
    results.sort_by(result_order);
    results
}

/// Reciprocal rank fusion: each list contributes `1 / (rrf_k + rank)` with
/// 1-based ranks. Returns the top `k`.
pub fn reciprocal_rank_fusion(lists: &[&[RankedResult]], rrf_k: f64, k: usize) -> Vec<RankedResult> {
    let mut fused: BTreeMap<&str, f64> = BTreeMap::new();
    for list in lists {
        for (i, r) in list.iter().enumerate() {
            *fused.entry(r.doc_id.as_str()).or_default() += 1.0 / (rrf_k + (i + 1) as f64);
        }
    }
    let mut results: Vec<RankedResult> = fused
        .into_iter()
        .map(|(doc_id, score)| RankedResult {
            doc_id: doc_id.to_owned(),
            score,
            source: ResultSource::Fused,
        })
        .collect();
    results.sort_by(result_order);
    results.truncate(k);
    results
}

/// Hybrid retrieval: graph candidates fused with vector hits. Vector hits
/// with zero similarity share no token with the query and are not counted.
pub fn hybrid_retrieve(
    query_text: &str,
    graph: &KnowledgeGraph,
    index: &VectorIndex,
    k: usize,
    rrf_k: f64,
) -> Vec<RankedResult> {
    let graph_list = graph_candidates(query_text, graph, index);
    let mut vector_list = vector_search(&embed(query_text), index, k);
    vector_list.retain(|r| r.score > 0.0);
    reciprocal_rank_fusion(&[&graph_list, &vector_list], rrf_k, k)
}

pub fn threshold_filter(results: &[RankedResult], min_score: f64) -> Vec<RankedResult> {
    results.iter().filter(|r| r.score >= min_score).cloned().collect()
}
