//! Pending-review queue for knowledge-graph changes.
//!
//! Proposals are checked for shape only. Whether they fit the live graph
//! (endpoints exist, ids are fresh) is decided at approval, which builds a
//! new graph version and swaps it into the [`GraphStore`].

use parking_lot::Mutex;
use serde::{Deserialize, Serialize};

use super::graph::{TermEdge, TermNode};
use super::{GraphStore, KnowledgeError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UpdateCandidate {
    NewTerm {
        node: TermNode,
    },
    NewAlias {
        node_id: String,
        alias: String,
    },
    NewEdge {
        edge: TermEdge,
    },
    /// The term's explanation keeps being re-requested and needs a plainer
    /// rewrite. Approval requires the replacement text.
    LayRewrite {
        node_id: String,
        current_explanation: String,
        request_count: usize,
    },
}

impl UpdateCandidate {
    fn validate(&self) -> Result<(), String> {
        match self {
            UpdateCandidate::NewTerm { node } => {
                if node.id.trim().is_empty() {
                    return Err("new_term: empty id".into());
                }
                if node.lay_explanation.trim().is_empty() {
                    return Err("new_term: empty lay explanation".into());
                }
                if !node.surface_forms.contains(&node.canonical_name) {
                    return Err("new_term: canonical name missing from surface forms".into());
                }
            }
            UpdateCandidate::NewAlias { node_id, alias } => {
                if node_id.trim().is_empty() || alias.trim().is_empty() {
                    return Err("new_alias: node id and alias are required".into());
                }
            }
            UpdateCandidate::NewEdge { edge } => {
                if edge.src.trim().is_empty() || edge.dst.trim().is_empty() {
                    return Err("new_edge: both endpoints are required".into());
                }
                if edge.src == edge.dst {
                    return Err("new_edge: self-loop".into());
                }
            }
            UpdateCandidate::LayRewrite { node_id, .. } => {
                if node_id.trim().is_empty() {
                    return Err("lay_rewrite: node id is required".into());
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReviewStatus {
    Pending,
    Approved { graph_version: u64 },
    Rejected { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PendingUpdate {
    pub id: u64,
    pub candidate: UpdateCandidate,
    pub status: ReviewStatus,
}

#[derive(Debug, Default)]
pub struct ReviewQueue {
    entries: Mutex<Vec<PendingUpdate>>,
}

impl ReviewQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn propose(&self, candidate: UpdateCandidate) -> Result<PendingUpdate, KnowledgeError> {
        candidate.validate().map_err(KnowledgeError::Schema)?;
        let mut entries = self.entries.lock();
        let record = PendingUpdate {
            id: entries.len() as u64 + 1,
            candidate,
            status: ReviewStatus::Pending,
        };
        entries.push(record.clone());
        Ok(record)
    }

    pub fn entries(&self) -> Vec<PendingUpdate> {
        self.entries.lock().clone()
    }

    pub fn pending(&self) -> Vec<PendingUpdate> {
        self.entries
            .lock()
            .iter()
            .filter(|e| e.status == ReviewStatus::Pending)
            .cloned()
            .collect()
    }

    pub fn reject(&self, id: u64, reason: impl Into<String>) -> Result<PendingUpdate, KnowledgeError> {
        let mut entries = self.entries.lock();
        let entry = pending_entry(&mut entries, id)?;
        entry.status = ReviewStatus::Rejected { reason: reason.into() };
        Ok(entry.clone())
    }

    /// Apply a pending update to the live graph. `replacement` is the
    /// reviewer-authored explanation for `lay_rewrite` candidates. A
    /// candidate that does not fit the graph is marked rejected and the
    /// error returned.
    pub fn approve(
        &self,
        id: u64,
        replacement: Option<&str>,
        store: &GraphStore,
    ) -> Result<PendingUpdate, KnowledgeError> {
        let mut entries = self.entries.lock();
        let entry = pending_entry(&mut entries, id)?;
        let current = store.snapshot();
        let candidate = entry.candidate.clone();
        let next = current.graph.derive(|nodes, edges| {
            match candidate {
                UpdateCandidate::NewTerm { node } => {
                    if nodes.contains_key(&node.id) {
                        return Err(KnowledgeError::DuplicateId(node.id));
                    }
                    nodes.insert(node.id.clone(), node);
                }
                UpdateCandidate::NewAlias { node_id, alias } => {
                    let node = nodes
                        .get_mut(&node_id)
                        .ok_or(KnowledgeError::UnknownNode(node_id))?;
                    if !node.surface_forms.contains(&alias) {
                        node.surface_forms.push(alias);
                    }
                }
                UpdateCandidate::NewEdge { edge } => edges.push(edge),
                UpdateCandidate::LayRewrite { node_id, .. } => {
                    let text = replacement
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .ok_or_else(|| KnowledgeError::Schema("lay_rewrite approval needs replacement text".into()))?;
                    let node = nodes
                        .get_mut(&node_id)
                        .ok_or(KnowledgeError::UnknownNode(node_id))?;
                    node.lay_explanation = text.to_owned();
                }
            }
            Ok(())
        });
        match next {
            Ok(graph) => {
                let version = graph.version();
                store.replace(graph);
                entry.status = ReviewStatus::Approved { graph_version: version };
                Ok(entry.clone())
            }
            // missing reviewer text leaves the entry pending
            Err(err @ KnowledgeError::Schema(_)) => Err(err),
            Err(err) => {
                entry.status = ReviewStatus::Rejected { reason: err.to_string() };
                Err(err)
            }
        }
    }
}

fn pending_entry(entries: &mut [PendingUpdate], id: u64) -> Result<&mut PendingUpdate, KnowledgeError> {
    let entry = entries
        .iter_mut()
        .find(|e| e.id == id)
        .ok_or(KnowledgeError::UnknownUpdate(id))?;
    if entry.status != ReviewStatus::Pending {
        return Err(KnowledgeError::NotPending(id));
    }
    Ok(entry)
}
