//! Deterministic reference text embedding: hashed bag of tokens.

use serde::{Deserialize, Serialize};

use super::matcher::normalize_str;

pub const DIMENSION: usize = 256;

/// A `DIMENSION`-length vector that is either unit-norm or all zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingVector(Vec<f64>);

impl EmbeddingVector {
    pub fn zero() -> Self {
        Self(vec![0.0; DIMENSION])
    }

    /// L2-normalise raw values. Panics if the length is not `DIMENSION`.
    pub fn from_raw(mut values: Vec<f64>) -> Self {
        assert_eq!(values.len(), DIMENSION, "embedding dimension");
        let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            values.iter_mut().for_each(|v| *v /= norm);
        }
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|v| *v == 0.0)
    }

    /// Cosine similarity; zero when either side is the zero vector.
    pub fn cosine(&self, other: &EmbeddingVector) -> f64 {
        // both sides are unit or zero, so the dot product is the cosine
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

/// Encoder contract. Production deployments plug a semantic model in here.
pub trait Embedder: Send + Sync {
    fn embed(&self, text: &str) -> EmbeddingVector;
}

/// The reference encoder.
#[derive(Debug, Clone, Copy, Default)]
pub struct HashingEmbedder;

impl Embedder for HashingEmbedder {
    fn embed(&self, text: &str) -> EmbeddingVector {
        embed(text)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

pub fn tokens(text: &str) -> Vec<String> {
    normalize_str(text)
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_owned)
        .collect()
}

pub fn embed(text: &str) -> EmbeddingVector {
    let mut counts = vec![0.0; DIMENSION];
    for token in tokens(text) {
        counts[(fnv1a(token.as_bytes()) % DIMENSION as u64) as usize] += 1.0;
    }
    EmbeddingVector::from_raw(counts)
}
