use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matcher::TermMatcher;
use super::KnowledgeError;
use crate::tsv;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Condition,
    Drug,
    Symptom,
    Procedure,
    Lifestyle,
    Metric,
}

impl Category {
    pub const ALL: [Category; 6] = [
        Category::Condition,
        Category::Drug,
        Category::Symptom,
        Category::Procedure,
        Category::Lifestyle,
        Category::Metric,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Category::Condition => "condition",
            Category::Drug => "drug",
            Category::Symptom => "symptom",
            Category::Procedure => "procedure",
            Category::Lifestyle => "lifestyle",
            Category::Metric => "metric",
        }
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown category {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Treats,
    SymptomOf,
    SubtypeOf,
    Measures,
    ContraindicatedWith,
    RelatedTo,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::Treats,
        Relation::SymptomOf,
        Relation::SubtypeOf,
        Relation::Measures,
        Relation::ContraindicatedWith,
        Relation::RelatedTo,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Treats => "treats",
            Relation::SymptomOf => "symptom_of",
            Relation::SubtypeOf => "subtype_of",
            Relation::Measures => "measures",
            Relation::ContraindicatedWith => "contraindicated_with",
            Relation::RelatedTo => "related_to",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Relation::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown relation {s:?}"))
    }
}

/// A set of relations used to filter graph traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFilter(BTreeSet<Relation>);

impl RelationFilter {
    pub fn all() -> Self {
        Self(Relation::ALL.into_iter().collect())
    }

    pub fn only(relations: impl IntoIterator<Item = Relation>) -> Self {
        Self(relations.into_iter().collect())
    }

    pub fn allows(&self, relation: Relation) -> bool {
        self.0.contains(&relation)
    }
}

impl Default for RelationFilter {
    fn default() -> Self {
        Self::all()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermNode {
    pub id: String,
    pub canonical_name: String,
    /// Every textual variant the term is recognised by. Always contains
    /// `canonical_name`.
    pub surface_forms: Vec<String>,
    pub lay_explanation: String,
    pub disambiguation_cues: Vec<String>,
    pub category: Category,
}

impl TermNode {
    pub fn new(
        id: impl Into<String>,
        canonical_name: impl Into<String>,
        category: Category,
        lay_explanation: impl Into<String>,
    ) -> Self {
        let canonical_name = canonical_name.into();
        Self {
            id: id.into(),
            surface_forms: vec![canonical_name.clone()],
            canonical_name,
            lay_explanation: lay_explanation.into(),
            disambiguation_cues: Vec::new(),
            category,
        }
    }

    pub fn with_surface_forms<I, S>(mut self, forms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for form in forms {
            let form = form.into();
            if !self.surface_forms.contains(&form) {
                self.surface_forms.push(form);
            }
        }
        self
    }

    fn validate(&self) -> Result<(), KnowledgeError> {
        let invalid = |reason: &str| KnowledgeError::InvalidNode {
            id: self.id.clone(),
            reason: reason.to_owned(),
        };
        if self.id.trim().is_empty() {
            return Err(invalid("empty id"));
        }
        if self.surface_forms.iter().all(|s| s.trim().is_empty()) {
            return Err(invalid("no surface forms"));
        }
        if !self.surface_forms.contains(&self.canonical_name) {
            return Err(invalid("canonical name missing from surface forms"));
        }
        if self.lay_explanation.trim().is_empty() {
            return Err(invalid("empty lay explanation"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEdge {
    pub src: String,
    pub dst: String,
    pub relation: Relation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TermEdge {
    pub fn new(src: impl Into<String>, relation: Relation, dst: impl Into<String>) -> Self {
        Self {
            src: src.into(),
            dst: dst.into(),
            relation,
            note: None,
        }
    }
}

/// Explanation card returned when a patient taps a recognised term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Explanation {
    pub node_id: String,
    pub canonical_name: String,
    pub lay_explanation: String,
    pub disambiguation_cues: Vec<String>,
    pub related: Vec<(Relation, String)>,
}

/// An immutable, validated knowledge-graph snapshot with its compiled
/// surface-form matcher.
#[derive(Debug, Clone)]
pub struct KnowledgeGraph {
    nodes: BTreeMap<String, TermNode>,
    edges: Vec<TermEdge>,
    version: u64,
    matcher: TermMatcher,
}

impl KnowledgeGraph {
    /// Validate nodes and edges and compile the matcher.
    pub fn from_parts(
        nodes: Vec<TermNode>,
        edges: Vec<TermEdge>,
        version: u64,
    ) -> Result<Self, KnowledgeError> {
        let mut map = BTreeMap::new();
        for node in nodes {
            node.validate()?;
            if map.contains_key(&node.id) {
                return Err(KnowledgeError::DuplicateId(node.id));
            }
            map.insert(node.id.clone(), node);
        }
        for edge in &edges {
            for end in [&edge.src, &edge.dst] {
                if !map.contains_key(end) {
                    return Err(KnowledgeError::DanglingEndpoint(end.clone()));
                }
            }
            if edge.src == edge.dst {
                return Err(KnowledgeError::SelfLoop(edge.src.clone()));
            }
        }
        let matcher = TermMatcher::build(map.values());
        Ok(Self {
            nodes: map,
            edges,
            version,
            matcher,
        })
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new(), 1).expect("empty graph is valid")
    }

    /// Parse a graph document. The result has version 1.
    ///
    /// Node lines: `N<TAB>id<TAB>canonical<TAB>surface1|surface2|...<TAB>category<TAB>explanation[<TAB>cue1|cue2]`.
    /// Edge lines: `E<TAB>src<TAB>relation<TAB>dst[<TAB>note]`.
    pub fn parse_document(text: &str) -> Result<Self, KnowledgeError> {
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        for line in tsv::lines(text) {
            let parse_err = |message: String| KnowledgeError::Parse {
                line: line.number,
                message,
            };
            match line.tag() {
                "N" => {
                    if !(6..=7).contains(&line.fields.len()) {
                        return Err(parse_err(format!(
                            "node line needs 6 or 7 fields, found {}",
                            line.fields.len()
                        )));
                    }
                    let f = &line.fields;
                    let category = f[4].trim().parse::<Category>().map_err(parse_err)?;
                    let canonical = f[2].trim().to_owned();
                    let mut surface_forms = vec![canonical.clone()];
                    for form in tsv::split_list(f[3]) {
                        if !surface_forms.contains(&form) {
                            surface_forms.push(form);
                        }
                    }
                    nodes.push(TermNode {
                        id: f[1].trim().to_owned(),
                        canonical_name: canonical,
                        surface_forms,
                        lay_explanation: f[5].trim().to_owned(),
                        disambiguation_cues: f.get(6).map(|c| tsv::split_list(c)).unwrap_or_default(),
                        category,
                    });
                }
                "E" => {
                    if !(4..=5).contains(&line.fields.len()) {
                        return Err(parse_err(format!(
                            "edge line needs 4 or 5 fields, found {}",
                            line.fields.len()
                        )));
                    }
                    let f = &line.fields;
                    let relation = f[2].trim().parse::<Relation>().map_err(parse_err)?;
                    edges.push(TermEdge {
                        src: f[1].trim().to_owned(),
                        dst: f[3].trim().to_owned(),
                        relation,
                        note: f.get(4).map(|n| n.trim().to_owned()).filter(|n| !n.is_empty()),
                    });
                }
                other => return Err(parse_err(format!("unknown record tag {other:?}"))),
            }
        }
        Self::from_parts(nodes, edges, 1)
    }

    /// Serialize back into the graph document format.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        for node in self.nodes.values() {
            let surfaces: Vec<&str> = node
                .surface_forms
                .iter()
                .filter(|s| **s != node.canonical_name)
                .map(String::as_str)
                .collect();
            out.push_str(&format!(
                "N\t{}\t{}\t{}\t{}\t{}",
                node.id,
                node.canonical_name,
                surfaces.join("|"),
                node.category.as_str(),
                node.lay_explanation
            ));
            if !node.disambiguation_cues.is_empty() {
                out.push('\t');
                out.push_str(&node.disambiguation_cues.join("|"));
            }
            out.push('\n');
        }
        for edge in &self.edges {
            out.push_str(&format!("E\t{}\t{}\t{}", edge.src, edge.relation, edge.dst));
            if let Some(note) = &edge.note {
                out.push('\t');
                out.push_str(note);
            }
            out.push('\n');
        }
        out
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: &str) -> Option<&TermNode> {
        self.nodes.get(id)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &TermNode> {
        self.nodes.values()
    }

    pub fn edges(&self) -> &[TermEdge] {
        &self.edges
    }

    pub fn matcher(&self) -> &TermMatcher {
        &self.matcher
    }

    pub fn find_terms(&self, text: &str) -> Vec<super::TermMatch> {
        self.matcher.find(text)
    }

    pub fn explain_term(&self, node_id: &str) -> Result<Explanation, KnowledgeError> {
        let node = self
            .nodes
            .get(node_id)
            .ok_or_else(|| KnowledgeError::UnknownNode(node_id.to_owned()))?;
        let related = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.src == node_id {
                    Some((e.relation, e.dst.clone()))
                } else if e.dst == node_id {
                    Some((e.relation, e.src.clone()))
                } else {
                    None
                }
            })
            .collect();
        Ok(Explanation {
            node_id: node.id.clone(),
            canonical_name: node.canonical_name.clone(),
            lay_explanation: node.lay_explanation.clone(),
            disambiguation_cues: node.disambiguation_cues.clone(),
            related,
        })
    }

    /// Ids reachable from `seed` within `depth` hops over edges whose
    /// relation passes `filter`. Edges are traversed in both directions.
    /// The seed is always included.
    pub fn neighborhood_ids(
        &self,
        seed: &str,
        filter: &RelationFilter,
        depth: usize,
    ) -> Result<BTreeSet<String>, KnowledgeError> {
        if !self.nodes.contains_key(seed) {
            return Err(KnowledgeError::UnknownNode(seed.to_owned()));
        }
        if !(1..=3).contains(&depth) {
            return Err(KnowledgeError::InvalidDepth(depth));
        }
        let mut adjacency: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in self.edges.iter().filter(|e| filter.allows(e.relation)) {
            adjacency.entry(&e.src).or_default().push(&e.dst);
            adjacency.entry(&e.dst).or_default().push(&e.src);
        }
        let mut seen = BTreeSet::from([seed.to_owned()]);
        let mut queue = VecDeque::from([(seed, 0usize)]);
        while let Some((id, d)) = queue.pop_front() {
            if d == depth {
                continue;
            }
            for next in adjacency.get(id).into_iter().flatten() {
                if seen.insert((*next).to_owned()) {
                    queue.push_back((next, d + 1));
                }
            }
        }
        Ok(seen)
    }

    /// The induced subgraph around `seed`; keeps only edges that pass the
    /// filter and have both endpoints inside.
    pub fn neighborhood(
        &self,
        seed: &str,
        filter: &RelationFilter,
        depth: usize,
    ) -> Result<KnowledgeGraph, KnowledgeError> {
        let ids = self.neighborhood_ids(seed, filter, depth)?;
        let nodes = ids.iter().map(|id| self.nodes[id].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| filter.allows(e.relation) && ids.contains(&e.src) && ids.contains(&e.dst))
            .cloned()
            .collect();
        KnowledgeGraph::from_parts(nodes, edges, self.version)
    }

    /// Copy of this graph with the version bumped, after applying `change`
    /// to the raw parts. Revalidates everything.
    pub(crate) fn derive<F>(&self, change: F) -> Result<KnowledgeGraph, KnowledgeError>
    where
        F: FnOnce(&mut BTreeMap<String, TermNode>, &mut Vec<TermEdge>) -> Result<(), KnowledgeError>,
    {
        let mut nodes = self.nodes.clone();
        let mut edges = self.edges.clone();
        change(&mut nodes, &mut edges)?;
        KnowledgeGraph::from_parts(nodes.into_values().collect(), edges, self.version + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_NODE: &str = "\
# minimal fixture
N\tmetformin\tmetformin\tglucophage\tdrug\tA tablet that lowers blood sugar.
N\tt2dm\ttype 2 diabetes mellitus\ttype 2 diabetes|T2DM\tcondition\tA long-term condition with high blood sugar.
E\tmetformin\ttreats\tt2dm
";

    fn chain() -> KnowledgeGraph {
        let nodes = ["a", "b", "c"]
            .iter()
            .map(|id| TermNode::new(*id, format!("term {id}"), Category::Condition, "x"))
            .collect();
        let edges = vec![
            TermEdge::new("a", Relation::RelatedTo, "b"),
            TermEdge::new("b", Relation::Treats, "c"),
        ];
        KnowledgeGraph::from_parts(nodes, edges, 1).unwrap()
    }

    #[test]
    fn empty_document_gives_version_one() {
        let g = KnowledgeGraph::parse_document("").unwrap();
        assert!(g.is_empty());
        assert!(g.edges().is_empty());
        assert_eq!(g.version(), 1);
    }

    #[test]
    fn parses_two_node_fixture() {
        let g = KnowledgeGraph::parse_document(TWO_NODE).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.edges().len(), 1);
        let t2dm = g.node("t2dm").unwrap();
        assert_eq!(t2dm.surface_forms[0], "type 2 diabetes mellitus");
        assert_eq!(t2dm.surface_forms.len(), 3);
    }

    #[test]
    fn dangling_edge_names_the_missing_id() {
        let doc = format!("{TWO_NODE}E\tmetformin\ttreats\tx9\n");
        let err = KnowledgeGraph::parse_document(&doc).unwrap_err();
        assert_eq!(err, KnowledgeError::DanglingEndpoint("x9".into()));
        assert!(err.to_string().contains("x9"));
    }

    #[test]
    fn duplicate_id_and_parse_errors() {
        let doc = format!("{TWO_NODE}N\tmetformin\tm\t\tdrug\tdup\n");
        assert_eq!(
            KnowledgeGraph::parse_document(&doc).unwrap_err(),
            KnowledgeError::DuplicateId("metformin".into())
        );
        let err = KnowledgeGraph::parse_document("N\ta\tb\n").unwrap_err();
        assert!(matches!(err, KnowledgeError::Parse { line: 1, .. }));
        let err = KnowledgeGraph::parse_document("# c\n\nN\ta\ta\t\tplanet\tx\n").unwrap_err();
        assert!(matches!(err, KnowledgeError::Parse { line: 3, .. }));
    }

    #[test]
    fn self_loop_rejected() {
        let err =
            KnowledgeGraph::parse_document("N\ta\ta\t\tdrug\tx\nE\ta\trelated_to\ta\n").unwrap_err();
        assert_eq!(err, KnowledgeError::SelfLoop("a".into()));
    }

    #[test]
    fn document_round_trips() {
        let g = KnowledgeGraph::parse_document(TWO_NODE).unwrap();
        let again = KnowledgeGraph::parse_document(&g.to_document()).unwrap();
        assert_eq!(again.to_document(), g.to_document());
        assert_eq!(again.node("t2dm"), g.node("t2dm"));
    }

    #[test]
    fn explain_term_lists_incident_edges() {
        let g = KnowledgeGraph::parse_document(TWO_NODE).unwrap();
        let e = g.explain_term("metformin").unwrap();
        assert_eq!(e.related, vec![(Relation::Treats, "t2dm".to_owned())]);
        let iso = KnowledgeGraph::parse_document("N\ta\ta\t\tdrug\tx\n").unwrap();
        assert!(iso.explain_term("a").unwrap().related.is_empty());
        assert_eq!(
            g.explain_term("nope").unwrap_err(),
            KnowledgeError::UnknownNode("nope".into())
        );
    }

    #[test]
    fn neighborhood_depths_on_chain() {
        let g = chain();
        let all = RelationFilter::all();
        let ids = |d| g.neighborhood_ids("a", &all, d).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(ids(1), ["a", "b"]);
        assert_eq!(ids(2), ["a", "b", "c"]);
        let only_related = RelationFilter::only([Relation::RelatedTo]);
        let sub = g.neighborhood("a", &only_related, 3).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.edges().len(), 1);
        assert!(matches!(
            g.neighborhood_ids("a", &all, 0),
            Err(KnowledgeError::InvalidDepth(0))
        ));
        assert!(g.neighborhood_ids("zz", &all, 1).is_err());
    }

    #[test]
    fn isolated_seed_neighborhood_is_itself() {
        let g = KnowledgeGraph::parse_document("N\ta\ta\t\tdrug\tx\n").unwrap();
        let sub = g.neighborhood("a", &RelationFilter::all(), 1).unwrap();
        assert_eq!(sub.len(), 1);
    }
}
