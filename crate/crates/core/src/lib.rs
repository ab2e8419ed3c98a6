//! Ontology-grounded concept annotation for clinical-style text.
//!
//! The pipeline: parse an ontology, silver-label a corpus by shallow keyword
//! matching, learn concept embeddings from the ontology graph and concept
//! definitions, pretrain a token annotator on the silver labels, then detect
//! concept mentions (including contextual synonyms absent from the ontology's
//! surface forms) with a two-branch decision rule over classifier probabilities
//! and embedding distances.

pub mod annotator;
pub mod augment;
pub mod config;
pub mod corpus;
pub mod encoder;
pub mod error;
pub mod evaluator;
pub mod inference;
pub mod kg;
pub mod ontology;
pub mod selective;
pub mod synthetic;
pub mod tensor;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
