use serde::{Deserialize, Serialize};

use super::EvalError;

pub const TEST_TOTAL: f64 = 50.0;
pub const DEFAULT_OPEN_MAX: f64 = 23.0;
pub const MULTIPLE_CHOICE_ITEMS: usize = 23;
pub const TRUE_FALSE_ITEMS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ItemKind {
    MultipleChoice,
    TrueFalse,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveItem {
    pub kind: ItemKind,
    /// `a`..`d` for multiple choice, `true`/`false` otherwise.
    pub key: String,
    pub weight: f64,
}

fn valid_answer(kind: ItemKind, answer: &str) -> bool {
    match kind {
        ItemKind::MultipleChoice => matches!(answer, "a" | "b" | "c" | "d"),
        ItemKind::TrueFalse => matches!(answer, "true" | "false"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnowledgeTest {
    pub items: Vec<ObjectiveItem>,
    pub open_max: f64,
}

impl KnowledgeTest {
    /// Any point allocation is accepted as long as the maximum is 50.
    pub fn new(items: Vec<ObjectiveItem>, open_max: f64) -> Result<Self, EvalError> {
        for (i, item) in items.iter().enumerate() {
            if !(item.weight.is_finite() && item.weight > 0.0) {
                return Err(EvalError::InvalidTest(format!("item {} has weight {}", i + 1, item.weight)));
            }
            if !valid_answer(item.kind, &item.key) {
                return Err(EvalError::InvalidTest(format!("item {} has key {:?}", i + 1, item.key)));
            }
        }
        if !(open_max.is_finite() && open_max >= 0.0) {
            return Err(EvalError::InvalidTest(format!("open item maximum {open_max}")));
        }
        let total: f64 = items.iter().map(|i| i.weight).sum::<f64>() + open_max;
        if (total - TEST_TOTAL).abs() > 1e-9 {
            return Err(EvalError::InvalidTest(format!("maximum total is {total}, expected {TEST_TOTAL}")));
        }
        Ok(Self { items, open_max })
    }

    /// 23 multiple-choice and 4 true/false items at one point each, plus a
    /// 23-point open item.
    pub fn standard(mc_keys: &[&str; MULTIPLE_CHOICE_ITEMS], tf_keys: &[bool; TRUE_FALSE_ITEMS]) -> Result<Self, EvalError> {
        let items = mc_keys
            .iter()
            .map(|k| ObjectiveItem { kind: ItemKind::MultipleChoice, key: k.to_lowercase(), weight: 1.0 })
            .chain(tf_keys.iter().map(|k| ObjectiveItem {
                kind: ItemKind::TrueFalse,
                key: k.to_string(),
                weight: 1.0,
            }))
            .collect();
        Self::new(items, DEFAULT_OPEN_MAX)
    }

    /// Score one participant. An empty response is a wrong answer.
    pub fn score(&self, responses: &[&str], open_score: f64) -> Result<f64, EvalError> {
        if responses.len() != self.items.len() {
            return Err(EvalError::MalformedResponses(format!(
                "{} responses for {} items",
                responses.len(),
                self.items.len()
            )));
        }
        if !(0.0..=self.open_max).contains(&open_score) {
            return Err(EvalError::OutOfRange(format!("open score {open_score} outside 0..={}", self.open_max)));
        }
        let mut total = 0.0;
        for (i, (item, raw)) in self.items.iter().zip(responses).enumerate() {
            let answer = raw.trim().to_lowercase();
            if answer.is_empty() {
                continue;
            }
            if !valid_answer(item.kind, &answer) {
                return Err(EvalError::MalformedResponses(format!("item {}: {raw:?}", i + 1)));
            }
            if answer == item.key {
                total += item.weight;
            }
        }
        Ok(total + open_score)
    }
}

pub fn score_test(test: &KnowledgeTest, responses: &[&str], open_score: f64) -> Result<f64, EvalError> {
    test.score(responses, open_score)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Split {
    /// Indices into the input, per group, in assignment order.
    pub groups: Vec<Vec<usize>>,
    pub means: Vec<f64>,
}

/// Serpentine assignment of the descending-sorted scores; ties keep input
/// order.
pub fn balanced_split(scores: &[f64], k: usize) -> Result<Split, EvalError> {
    if k == 0 || scores.len() < k {
        return Err(EvalError::TooFewScores { scores: scores.len(), groups: k });
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(EvalError::NotFinite);
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    let mut groups = vec![Vec::new(); k];
    for (pos, idx) in order.into_iter().enumerate() {
        let round = pos / k;
        let slot = pos % k;
        let g = if round % 2 == 0 { slot } else { k - 1 - slot };
        groups[g].push(idx);
    }
    let means = groups
        .iter()
        .map(|g| g.iter().map(|&i| scores[i]).sum::<f64>() / g.len() as f64)
        .collect();
    Ok(Split { groups, means })
}

pub const SUS_ITEMS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SusResponse([u8; SUS_ITEMS]);

impl SusResponse {
    pub fn new(items: [u8; SUS_ITEMS]) -> Result<Self, EvalError> {
        match items.iter().position(|v| !(1..=5).contains(v)) {
            Some(i) => Err(EvalError::OutOfRange(format!("SUS item {} is {}", i + 1, items[i]))),
            None => Ok(Self(items)),
        }
    }

    pub fn items(&self) -> [u8; SUS_ITEMS] {
        self.0
    }

    pub fn score(&self) -> f64 {
        let mut v = [0.0; SUS_ITEMS];
        for (d, s) in v.iter_mut().zip(self.0) {
            *d = f64::from(s);
        }
        sus_formula(&v)
    }
}

/// Odd items contribute `score - 1`, even items `5 - score`, times 2.5.
/// Item 1 is odd.
fn sus_formula(items: &[f64; SUS_ITEMS]) -> f64 {
    let raw: f64 = items
        .iter()
        .enumerate()
        .map(|(i, s)| if i % 2 == 0 { s - 1.0 } else { 5.0 - s })
        .sum();
    raw * 2.5
}

pub fn sus_score(response: &SusResponse) -> f64 {
    response.score()
}

/// The formula applied to per-item means; by linearity this is the mean
/// of the individual scores.
pub fn sus_score_of_means(means: &[f64; SUS_ITEMS]) -> Result<f64, EvalError> {
    if let Some(i) = means.iter().position(|v| !(1.0..=5.0).contains(v)) {
        return Err(EvalError::OutOfRange(format!("SUS item mean {} is {}", i + 1, means[i])));
    }
    Ok(sus_formula(means))
}

pub const RUBRIC_WEIGHTS: [f64; 4] = [0.4, 0.3, 0.2, 0.1];

/// Accuracy, relevance, readability and user-friendliness, each 0..=100.
pub fn rubric_score(accuracy: f64, relevance: f64, readability: f64, user_friendliness: f64) -> Result<f64, EvalError> {
    for (name, v) in [
        ("accuracy", accuracy),
        ("relevance", relevance),
        ("readability", readability),
        ("user_friendliness", user_friendliness),
    ] {
        if !(0.0..=100.0).contains(&v) {
            return Err(EvalError::OutOfRange(format!("{name} {v} outside 0..=100")));
        }
    }
    // integer weights keep the single-facet identities exact
    Ok((4.0 * accuracy + 3.0 * relevance + 2.0 * readability + user_friendliness) / 10.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test() -> KnowledgeTest {
        let mc = ["a", "b", "c", "d"];
        let mut keys = [""; MULTIPLE_CHOICE_ITEMS];
        for (i, k) in keys.iter_mut().enumerate() {
            *k = mc[i % 4];
        }
        KnowledgeTest::standard(&keys, &[true, false, true, false]).unwrap()
    }

    fn answers(t: &KnowledgeTest, correct: usize) -> Vec<String> {
        t.items
            .iter()
            .enumerate()
            .map(|(i, item)| {
                if i < correct {
                    item.key.clone()
                } else {
                    match item.kind {
                        ItemKind::MultipleChoice => if item.key == "a" { "b" } else { "a" }.into(),
                        ItemKind::TrueFalse => if item.key == "true" { "false" } else { "true" }.into(),
                    }
                }
            })
            .collect()
    }

    fn score(t: &KnowledgeTest, correct: usize, open: f64) -> Result<f64, EvalError> {
        let a = answers(t, correct);
        let refs: Vec<&str> = a.iter().map(String::as_str).collect();
        t.score(&refs, open)
    }

    #[test]
    fn test_bounds_and_arithmetic() {
        let t = test();
        assert_eq!(t.items.len(), 27);
        assert_eq!(score(&t, 27, 23.0).unwrap(), 50.0);
        assert_eq!(score(&t, 0, 0.0).unwrap(), 0.0);
        assert!((score(&t, 20, 12.8).unwrap() - 32.8).abs() < 1e-12);
    }

    #[test]
    fn test_errors() {
        let t = test();
        assert!(matches!(score(&t, 27, 23.5), Err(EvalError::OutOfRange(_))));
        assert!(matches!(t.score(&["a"], 0.0), Err(EvalError::MalformedResponses(_))));
        let mut a: Vec<&str> = vec!["a"; 27];
        a[0] = "e";
        assert!(matches!(t.score(&a, 0.0), Err(EvalError::MalformedResponses(_))));
        let bad = vec![ObjectiveItem { kind: ItemKind::TrueFalse, key: "true".into(), weight: 1.0 }];
        assert!(KnowledgeTest::new(bad.clone(), 49.0).is_ok());
        assert!(KnowledgeTest::new(bad, 40.0).is_err());
    }

    #[test]
    fn serpentine() {
        let s = balanced_split(&[10.0, 9.0, 8.0, 7.0], 2).unwrap();
        assert_eq!(s.groups, vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(s.means, vec![8.5, 8.5]);
        let eq = balanced_split(&[5.0; 7], 3).unwrap();
        assert!(eq.means.iter().all(|m| *m == 5.0));
        assert!(balanced_split(&[1.0], 2).is_err());
    }

    #[test]
    fn sus_points() {
        assert_eq!(SusResponse::new([5, 1, 5, 1, 5, 1, 5, 1, 5, 1]).unwrap().score(), 100.0);
        assert_eq!(SusResponse::new([3; 10]).unwrap().score(), 50.0);
        assert!(SusResponse::new([0; 10]).is_err());
        let means = [4.8, 1.2, 4.5, 1.2, 4.6, 1.0, 4.6, 1.2, 4.6, 1.1];
        assert!((sus_score_of_means(&means).unwrap() - 93.5).abs() < 1e-9);
    }

    #[test]
    fn rubric_identities() {
        assert_eq!(rubric_score(100.0, 100.0, 100.0, 100.0).unwrap(), 100.0);
        assert_eq!(rubric_score(100.0, 0.0, 0.0, 0.0).unwrap(), 40.0);
        assert_eq!(rubric_score(0.0, 100.0, 0.0, 0.0).unwrap(), 30.0);
        assert_eq!(rubric_score(0.0, 0.0, 100.0, 0.0).unwrap(), 20.0);
        assert_eq!(rubric_score(0.0, 0.0, 0.0, 100.0).unwrap(), 10.0);
        assert_eq!(rubric_score(50.0, 50.0, 50.0, 50.0).unwrap(), 50.0);
        assert!(rubric_score(101.0, 0.0, 0.0, 0.0).is_err());
        assert!((RUBRIC_WEIGHTS.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }
}
