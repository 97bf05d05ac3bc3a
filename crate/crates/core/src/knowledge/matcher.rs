//! Surface-form recognition.
//!
//! Text and surface forms are both normalised with NFKC followed by
//! lower-case folding, per character, so every normalised byte can be traced
//! back to the character of the original text it came from. Candidates are
//! every occurrence found by an Aho-Corasick automaton; a candidate is kept
//! only if it does not split a Latin/digit word on either side. Selection is
//! leftmost-longest without overlap.

use std::collections::BTreeMap;

use aho_corasick::{AhoCorasick, AhoCorasickBuilder, MatchKind};
use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use super::graph::TermNode;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermMatch {
    pub node_id: String,
    /// Half-open character offsets into the original text.
    pub span: (usize, usize),
    pub matched_surface: String,
}

/// Text after normalisation, with a back-mapping to original char indices.
#[derive(Debug, Clone)]
pub struct Normalized {
    pub text: String,
    /// For every byte of `text`, the index of the originating char.
    origin: Vec<usize>,
}

impl Normalized {
    pub fn origin_char(&self, byte: usize) -> usize {
        self.origin[byte]
    }
}

fn fold_char(c: char, out: &mut String) {
    for n in std::iter::once(c).nfkc() {
        out.extend(n.to_lowercase());
    }
}

pub fn normalize(text: &str) -> Normalized {
    let mut out = String::with_capacity(text.len());
    let mut origin = Vec::with_capacity(text.len());
    for (idx, c) in text.chars().enumerate() {
        let before = out.len();
        fold_char(c, &mut out);
        origin.resize(origin.len() + (out.len() - before), idx);
    }
    Normalized { text: out, origin }
}

/// Normalised form of `text` without the offset map.
pub fn normalize_str(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    text.chars().for_each(|c| fold_char(c, &mut out));
    out
}

fn is_cjk(c: char) -> bool {
    matches!(c as u32,
        0x3040..=0x30FF | 0x3400..=0x4DBF | 0x4E00..=0x9FFF | 0xAC00..=0xD7AF | 0xF900..=0xFAFF | 0x20000..=0x2FA1F)
}

/// Characters that glue into words for boundary purposes. CJK scripts are
/// written without spaces, so they never impose a boundary.
pub fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() && !is_cjk(c)
}

/// True when the char span `[start, end)` of `chars` does not cut through a
/// word on either side.
pub fn respects_boundaries(chars: &[char], start: usize, end: usize) -> bool {
    if start >= end {
        return false;
    }
    let left_ok = start == 0 || !(is_word_char(chars[start - 1]) && is_word_char(chars[start]));
    let right_ok = end == chars.len() || !(is_word_char(chars[end - 1]) && is_word_char(chars[end]));
    left_ok && right_ok
}

#[derive(Debug, Clone)]
struct Pattern {
    node_id: String,
    surface: String,
}

/// Compiled multi-pattern matcher over all surface forms of a graph.
#[derive(Debug, Clone)]
pub struct TermMatcher {
    automaton: Option<AhoCorasick>,
    patterns: Vec<Pattern>,
}

impl TermMatcher {
    /// Build from nodes. When two nodes share a normalised surface form, the
    /// node visited first (graphs iterate in id order) owns it.
    pub fn build<'a>(nodes: impl IntoIterator<Item = &'a TermNode>) -> Self {
        let mut by_form: BTreeMap<String, Pattern> = BTreeMap::new();
        for node in nodes {
            for surface in &node.surface_forms {
                let key = normalize_str(surface);
                if key.trim().is_empty() {
                    continue;
                }
                by_form.entry(key).or_insert_with(|| Pattern {
                    node_id: node.id.clone(),
                    surface: surface.clone(),
                });
            }
        }
        if by_form.is_empty() {
            return Self {
                automaton: None,
                patterns: Vec::new(),
            };
        }
        let (keys, patterns): (Vec<String>, Vec<Pattern>) = by_form.into_iter().unzip();
        let automaton = AhoCorasickBuilder::new()
            .match_kind(MatchKind::Standard)
            .build(&keys)
            .expect("surface-form automaton");
        Self {
            automaton: Some(automaton),
            patterns,
        }
    }

    pub fn pattern_count(&self) -> usize {
        self.patterns.len()
    }

    pub fn find(&self, text: &str) -> Vec<TermMatch> {
        let Some(automaton) = &self.automaton else {
            return Vec::new();
        };
        if text.is_empty() {
            return Vec::new();
        }
        let norm = normalize(text);
        let chars: Vec<char> = text.chars().collect();

        // (start, end, pattern) in original char offsets
        let mut candidates: Vec<(usize, usize, usize)> = automaton
            .find_overlapping_iter(&norm.text)
            .filter_map(|m| {
                let start = norm.origin_char(m.start());
                let end = norm.origin_char(m.end() - 1) + 1;
                // a match must cover whole original chars
                let clean_start = m.start() == 0 || norm.origin_char(m.start() - 1) != start;
                let clean_end = m.end() == norm.text.len() || norm.origin_char(m.end()) != end - 1;
                (clean_start && clean_end && respects_boundaries(&chars, start, end))
                    .then_some((start, end, m.pattern().as_usize()))
            })
            .collect();
        candidates.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

        let mut out = Vec::new();
        let mut cursor = 0;
        for (start, end, pattern) in candidates {
            if start < cursor {
                continue;
            }
            let p = &self.patterns[pattern];
            out.push(TermMatch {
                node_id: p.node_id.clone(),
                span: (start, end),
                matched_surface: p.surface.clone(),
            });
            cursor = end;
        }
        out
    }
}

/// The original substring covered by a char span.
pub fn span_text(text: &str, span: (usize, usize)) -> String {
    text.chars().skip(span.0).take(span.1 - span.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knowledge::graph::Category;

    fn matcher(forms: &[(&str, &[&str])]) -> TermMatcher {
        let nodes: Vec<TermNode> = forms
            .iter()
            .map(|(id, surfaces)| {
                TermNode::new(*id, surfaces[0], Category::Condition, "x")
                    .with_surface_forms(surfaces.iter().copied())
            })
            .collect();
        TermMatcher::build(&nodes)
    }

    #[test]
    fn empty_text_no_matches() {
        let m = matcher(&[("metformin", &["metformin"])]);
        assert!(m.find("").is_empty());
        assert!(TermMatcher::build(&[]).find("anything").is_empty());
    }

    #[test]
    fn single_surface_form() {
        let m = matcher(&[("metformin", &["metformin"])]);
        let text = "take metformin after meals";
        let found = m.find(text);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].span, (5, 14));
        assert_eq!(span_text(text, found[0].span), "metformin");
    }

    #[test]
    fn longest_form_wins() {
        let m = matcher(&[
            ("t2dm", &["type 2 diabetes mellitus"]),
            ("diabetes", &["diabetes"]),
        ]);
        let found = m.find("type 2 diabetes mellitus");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].node_id, "t2dm");
        assert_eq!(found[0].span, (0, 24));
    }

    #[test]
    fn case_and_width_folding_keep_original_offsets() {
        let m = matcher(&[("hba1c", &["HbA1c"])]);
        // full-width letters normalise under NFKC
        let text = "my ＨＢＡ１Ｃ is 7";
        let found = m.find(text);
        assert_eq!(found.len(), 1);
        assert_eq!(span_text(text, found[0].span), "ＨＢＡ１Ｃ");
    }

    #[test]
    fn word_boundaries_for_latin_not_cjk() {
        let m = matcher(&[("diabetes", &["diabetes"]), ("tnb", &["糖尿病"])]);
        assert!(m.find("prediabetes").is_empty());
        assert_eq!(m.find("diabetes.").len(), 1);
        let found = m.find("我有糖尿病吗");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].span, (2, 5));
    }

    #[test]
    fn overlapping_candidates_resolve_leftmost() {
        let m = matcher(&[("a", &["blood sugar"]), ("b", &["sugar level"])]);
        let found = m.find("blood sugar level");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].node_id, "a");
    }
}
