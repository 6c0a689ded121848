//! # temoji-core
//!
//! Building blocks for studying how emoji usage shifts with the calendar and
//! for predicting the emoji of a short message from its text and posting time.
//!
//! The crate is organised as a pipeline:
//!
//! - [`corpus`] — parsing timestamped message records, emoji extraction and
//!   tokenization, seasonal slicing, and construction of the capped
//!   per-emoji prediction dataset.
//! - [`embeddings`] — skip-gram negative-sampling training of per-slice
//!   token/emoji vector spaces, nearest-neighbour queries, persistence, and a
//!   finite-difference gradient check of the training objective.
//! - [`drift`] — comparisons between season-tagged spaces: k-NN overlap,
//!   emoji-pair similarity matrices, Pearson correlation of matrices, and the
//!   largest pair-similarity changes.
//! - [`model`] — the emoji classifier: character-level bidirectional LSTM
//!   word encoder, word-level LSTM with learned attention, and a date module
//!   fused either early (per word) or late (after attention), trained by
//!   manual backpropagation with verified gradients.
//! - [`eval`] — macro precision/recall/F1, accuracy@k, coverage error, and
//!   per-class F1 comparisons between systems.
//!
//! All randomized operations take explicit seeds and are deterministic in
//! single-worker mode.

pub mod corpus;
pub mod drift;
pub mod embeddings;
pub mod eval;
pub mod model;

mod error;

pub use error::{Error, Result};
