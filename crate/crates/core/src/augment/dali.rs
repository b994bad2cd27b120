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

//! Forward translation of source-language monolingual text by word-for-word
//! dictionary replacement.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Sentence};
use crate::lexicon::Lexicon;

/// What to do with tokens missing from the dictionary.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OovPolicy {
    #[default]
    Copy,
    Drop,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PseudoPair {
    pub source: Sentence,
    pub pseudo_target: Sentence,
    /// Replaced source tokens over all source tokens.
    pub replaced_fraction: f64,
}

/// Replaces every dictionary hit by its translation, keeping word order.
/// Multi-word translations expand into several tokens.
pub fn dali_translate(sentence: &Sentence, lexicon: &Lexicon, policy: OovPolicy) -> PseudoPair {
    let mut out = Vec::with_capacity(sentence.len());
    let mut replaced = 0usize;
    for token in sentence.tokens() {
        match lexicon.lookup(token) {
            Some(translation) => {
                replaced += 1;
                out.extend(translation.split_whitespace().map(str::to_owned));
            }
            None if policy == OovPolicy::Copy => out.push(token.clone()),
            None => {}
        }
    }
    let replaced_fraction = if sentence.is_empty() {
        0.0
    } else {
        replaced as f64 / sentence.len() as f64
    };
    PseudoPair {
        source: sentence.clone(),
        pseudo_target: Sentence::from_tokens(out),
        replaced_fraction,
    }
}

/// [`dali_translate`] over a corpus, in corpus order.
pub fn dali_synthesize(corpus: &Corpus, lexicon: &Lexicon, policy: OovPolicy) -> Vec<PseudoPair> {
    corpus
        .sentences
        .par_iter()
        .map(|s| dali_translate(s, lexicon, policy))
        .collect()
}

/// Counts of replaced fractions in `bins` equal-width bins over [0, 1]; a
/// fraction of exactly 1 falls into the last bin.
pub fn replaced_fraction_histogram(pairs: &[PseudoPair], bins: usize) -> Vec<usize> {
    let mut hist = vec![0usize; bins.max(1)];
    let last = hist.len() - 1;
    for p in pairs {
        let bin = ((p.replaced_fraction * hist.len() as f64) as usize).min(last);
        hist[bin] += 1;
    }
    hist
}
