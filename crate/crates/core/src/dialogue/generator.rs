//! Text-generator adapter contract and the deterministic reference filler.
//!
//! A request is an instruction name plus named lists of structured slots.
//! Production adapters (hosted language models) implement the same trait;
//! the engine always calls them through [`generate_bounded`].

use std::collections::BTreeMap;
use std::sync::mpsc;
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const INSTRUCTION_SUMMARY: &str = "summarize_assessment";
pub const INSTRUCTION_ANSWER: &str = "answer_question";

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GenerationRequest {
    pub instruction: String,
    pub slots: BTreeMap<String, Vec<String>>,
}

impl GenerationRequest {
    pub fn new(instruction: &str) -> Self {
        Self {
            instruction: instruction.to_owned(),
            slots: BTreeMap::new(),
        }
    }

    pub fn slot(mut self, name: &str, values: Vec<String>) -> Self {
        self.slots.insert(name.to_owned(), values);
        self
    }

    pub fn get(&self, name: &str) -> &[String] {
        self.slots.get(name).map(Vec::as_slice).unwrap_or(&[])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationResponse {
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("generator did not answer within {0:?}")]
    Timeout(Duration),
    #[error("generator failed: {0}")]
    Failed(String),
}

pub trait TextGenerator: Send + Sync {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GeneratorError>;
}

/// Run `generator` on a worker thread and give up after `timeout`. A
/// generator that overruns is abandoned, not cancelled.
pub fn generate_bounded(
    generator: &Arc<dyn TextGenerator>,
    request: &GenerationRequest,
    timeout: Duration,
) -> Result<GenerationResponse, GeneratorError> {
    let (tx, rx) = mpsc::channel();
    let gen = Arc::clone(generator);
    let req = request.clone();
    thread::spawn(move || {
        let _ = tx.send(gen.generate(&req));
    });
    match rx.recv_timeout(timeout) {
        Ok(result) => result,
        Err(mpsc::RecvTimeoutError::Timeout) => Err(GeneratorError::Timeout(timeout)),
        Err(mpsc::RecvTimeoutError::Disconnected) => Err(GeneratorError::Failed("generator thread panicked".into())),
    }
}

/// Deterministic slot-template filler.
///
/// For summaries it echoes each slot entry as a `section<TAB>entry` line in
/// slot order. For answers it stitches the retrieved passages into a short
/// reply.
#[derive(Debug, Clone, Copy, Default)]
pub struct TemplateGenerator;

impl TextGenerator for TemplateGenerator {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GeneratorError> {
        match request.instruction.as_str() {
            INSTRUCTION_SUMMARY => {
                let mut text = String::new();
                for (section, entries) in &request.slots {
                    for entry in entries {
                        text.push_str(section);
                        text.push('\t');
                        text.push_str(entry);
                        text.push('\n');
                    }
                }
                Ok(GenerationResponse { text })
            }
            INSTRUCTION_ANSWER => {
                let passages = request.get("passages");
                if passages.is_empty() {
                    return Err(GeneratorError::Failed("no passages to answer from".into()));
                }
                let mut text = String::from("Here is what I found for you. ");
                text.push_str(&passages.join(" "));
                if let Some(ctx) = request.get("context").first() {
                    text.push_str(&format!(" This applies to you because {ctx}."));
                }
                text.push_str(" Please check any change to your treatment with your doctor.");
                Ok(GenerationResponse { text })
            }
            other => Err(GeneratorError::Failed(format!("unknown instruction {other:?}"))),
        }
    }
}

/// Always fails; used to exercise degraded paths.
#[derive(Debug, Clone, Copy, Default)]
pub struct FailingGenerator;

impl TextGenerator for FailingGenerator {
    fn generate(&self, _request: &GenerationRequest) -> Result<GenerationResponse, GeneratorError> {
        Err(GeneratorError::Failed("generator unavailable".into()))
    }
}

/// Sleeps before delegating to [`TemplateGenerator`].
#[derive(Debug, Clone, Copy)]
pub struct SlowGenerator(pub Duration);

impl TextGenerator for SlowGenerator {
    fn generate(&self, request: &GenerationRequest) -> Result<GenerationResponse, GeneratorError> {
        thread::sleep(self.0);
        TemplateGenerator.generate(request)
    }
}
