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

//! Dictionary-driven training data: word-for-word pseudo-parallel text
//! ([`dali`]), dictionary suggestion annotation ([`leca`]) and mixed-language
//! span-masking corruption ([`cpt`]).

pub mod cpt;
pub mod dali;
pub mod leca;

pub use cpt::{
    cpt_corrupt, cpt_corrupt_corpus, CorruptionPair, CorruptionSpec, MaskSpan, ReplacedTerm,
};
pub use dali::{
    dali_synthesize, dali_translate, replaced_fraction_histogram, OovPolicy, PseudoPair,
};
pub use leca::{leca_annotate, AnnotatedSentence, LecaConfig};

use crate::error::{Error, Result};

/// Special symbols are single tokens: non-empty and free of whitespace.
pub(crate) fn check_symbol(name: &str, symbol: &str) -> Result<()> {
    if symbol.is_empty() || symbol.chars().any(char::is_whitespace) {
        return Err(Error::InvalidParameter(format!(
            "{name} must be a single non-empty token, got {symbol:?}"
        )));
    }
    Ok(())
}
