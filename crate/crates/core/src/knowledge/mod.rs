//! Medical knowledge graph, term recognition and hybrid retrieval.

use std::sync::Arc;

use parking_lot::RwLock;
use thiserror::Error;

pub mod embed;
pub mod graph;
pub mod matcher;
pub mod retrieval;
pub mod review;

pub use embed::{embed, Embedder, EmbeddingVector, HashingEmbedder, DIMENSION};
pub use graph::{
    Category, Explanation, KnowledgeGraph, Relation, RelationFilter, TermEdge, TermNode,
};
pub use matcher::{normalize, normalize_str, span_text, TermMatch, TermMatcher};
pub use retrieval::{
    graph_candidates, hybrid_retrieve, reciprocal_rank_fusion, threshold_filter, vector_search,
    RankedResult, ResultSource, VectorIndex, DEFAULT_RRF_K,
};
pub use review::{PendingUpdate, ReviewQueue, ReviewStatus, UpdateCandidate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnowledgeError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate node id {0:?}")]
    DuplicateId(String),
    #[error("edge endpoint {0:?} does not exist")]
    DanglingEndpoint(String),
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("invalid node {id:?}: {reason}")]
    InvalidNode { id: String, reason: String },
    #[error("unknown node id {0:?}")]
    UnknownNode(String),
    #[error("neighbourhood depth must be 1..=3, got {0}")]
    InvalidDepth(usize),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unknown update #{0}")]
    UnknownUpdate(u64),
    #[error("update #{0} is not pending")]
    NotPending(u64),
}

/// A graph together with the document index derived from it.
#[derive(Debug, Clone)]
pub struct KnowledgeSnapshot {
    pub graph: KnowledgeGraph,
    pub index: VectorIndex,
}

impl KnowledgeSnapshot {
    pub fn new(graph: KnowledgeGraph) -> Self {
        let index = VectorIndex::from_graph(&graph);
        Self { graph, index }
    }
}

/// Holds the current snapshot. Readers clone the `Arc` and keep a
/// consistent view for as long as they need; approvals swap in a new one.
#[derive(Debug)]
pub struct GraphStore {
    current: RwLock<Arc<KnowledgeSnapshot>>,
}

impl GraphStore {
    pub fn new(graph: KnowledgeGraph) -> Self {
        Self {
            current: RwLock::new(Arc::new(KnowledgeSnapshot::new(graph))),
        }
    }

    pub fn snapshot(&self) -> Arc<KnowledgeSnapshot> {
        self.current.read().clone()
    }

    pub fn replace(&self, graph: KnowledgeGraph) {
        let next = Arc::new(KnowledgeSnapshot::new(graph));
        *self.current.write() = next;
    }
}
