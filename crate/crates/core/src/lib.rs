// Copyright 2026 The lexaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Corpus engineering for dictionary-driven domain adaptation of low-resource
//! machine translation.
//!
//! The crate covers the data side of the workflow:
//!
//! - [`corpus`]: loading, lowercasing, validation/test extraction and seeded capping.
//! - [`align`]: an IBM Model 2 aligner with a log-linear diagonal prior, trained
//!   by EM, plus Viterbi alignment and word-pair harvesting.
//! - [`lexicon`]: frequent-lemma extraction, dictionary translation through a
//!   [`lexicon::TranslationClient`], and merging of harvested pairs.
//! - [`augment`]: word-for-word pseudo-parallel data (DALI), dictionary
//!   suggestion annotation (LeCA) and mixed-language span-masking corruption (CPT).
//! - [`batching`]: half pseudo-parallel, half parallel batch plans.
//! - [`metrics`]: BLEU, chrF, length curves and output statistics.
//! - [`cli`]: the `lexaug` command and its manifests.
//!
//! All randomness flows from explicit seeds through [`rng`], so every artifact
//! is reproducible byte for byte.

pub mod align;
pub mod augment;
pub mod batching;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod lexicon;
pub mod manifest;
pub mod metrics;
pub mod rng;
pub mod tokenize;

pub use error::{Error, Result};
