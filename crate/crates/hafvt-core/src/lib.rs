//! Core library for a cross-domain sequential recommender with multimodal
//! item representations.
//!
//! Items from two domains (X and Y) are represented three ways: a learnable
//! ID embedding plus frozen image and text embeddings ingested from files.
//! A user's history is split into three streams (X-only, Y-only, merged),
//! each encoded per modality by a causal self-attention layer. Cosine
//! similarity against the item embedding matrices yields per-modality
//! probability heads, which are fused across modalities and then combined
//! across streams to score candidate items.
//!
//! The crate is `no_std`-compatible (requires `alloc`); all floating-point
//! transcendentals go through `libm` so results are bit-stable across
//! platforms. File formats, checkpointing, and the CLI live in the
//! companion `hafvt-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod adam;
pub mod catalog;
pub mod data;
pub mod encoder;
pub mod error;
pub mod eval;
pub mod fusion;
pub mod loss;
pub mod matrix;
pub mod model;
pub mod ops;
pub mod rng;
pub mod sequence;
pub mod synth;
pub mod tape;

pub use error::{Error, Result};
pub use matrix::Matrix;
