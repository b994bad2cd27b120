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

//! Mixed-language corruption for continued denoising pretraining.
//!
//! Stage 1 swaps dictionary hits for their translation with probability
//! `dict_replace_prob`. Stage 2 masks spans of the stage-1 tokens: span
//! lengths are drawn from Poisson(`span_lambda`) with zeros raised to one,
//! and spans are drawn until `ceil(mask_ratio * len)` tokens are covered,
//! the final span being shortened to land exactly on that goal. Each span is
//! placed uniformly among start positions that keep it disjoint from earlier
//! spans and is replaced by a single mask token. Sentences are neither
//! rotated nor permuted.

use rand::Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::Sentence;
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::rng;

/// Placement attempts that may fail per sentence before masking gives up
/// with the coverage reached so far.
pub const MAX_REJECTIONS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorruptionSpec {
    pub mask_ratio: f64,
    pub span_lambda: f64,
    pub replace_length: usize,
    pub dict_replace_prob: f64,
    pub mask_token: String,
    pub seed: u64,
}

impl Default for CorruptionSpec {
    fn default() -> Self {
        CorruptionSpec {
            mask_ratio: 0.35,
            span_lambda: 3.5,
            replace_length: 1,
            dict_replace_prob: 0.3,
            mask_token: "<mask>".into(),
            seed: 42,
        }
    }
}

impl CorruptionSpec {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..1.0).contains(&self.mask_ratio) {
            return Err(Error::InvalidParameter(format!(
                "mask_ratio must lie in [0, 1), got {}",
                self.mask_ratio
            )));
        }
        if !(self.span_lambda > 0.0 && self.span_lambda.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "span_lambda must be positive, got {}",
                self.span_lambda
            )));
        }
        if self.replace_length != 1 {
            return Err(Error::InvalidParameter(format!(
                "only replace_length 1 is supported, got {}",
                self.replace_length
            )));
        }
        if !(0.0..=1.0).contains(&self.dict_replace_prob) {
            return Err(Error::InvalidParameter(format!(
                "dict_replace_prob must lie in [0, 1], got {}",
                self.dict_replace_prob
            )));
        }
        super::check_symbol("mask_token", &self.mask_token)
    }

    /// Tokens to cover in a sequence of `len` tokens.
    pub fn mask_goal(&self, len: usize) -> usize {
        // slack keeps e.g. 0.35 * 20 from rounding up to 8
        let goal = (self.mask_ratio * len as f64 - 1e-9).ceil().max(0.0) as usize;
        goal.min(len)
    }
}

/// A masked run of stage-1 tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaskSpan {
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacedTerm {
    /// Token index in the original sentence.
    pub position: usize,
    pub source_form: String,
    pub target_form: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorruptionPair {
    pub corrupted: Sentence,
    pub original: Sentence,
    /// Stage-1 tokens covered by mask spans.
    pub masked_token_count: usize,
    pub replaced_terms: Vec<ReplacedTerm>,
    /// Stage-1 token count.
    pub mixed_len: usize,
    /// Placed spans, sorted by start.
    pub spans: Vec<MaskSpan>,
    /// Span lengths as drawn, before the final span is shortened.
    pub sampled_span_lengths: Vec<usize>,
    /// Placement gave up after [`MAX_REJECTIONS`] failed attempts.
    pub placement_exhausted: bool,
}

/// Corrupts one sentence using `stream` for every random decision.
pub fn cpt_corrupt<R: Rng + ?Sized>(
    sentence: &Sentence,
    lexicon: &Lexicon,
    spec: &CorruptionSpec,
    stream: &mut R,
) -> Result<CorruptionPair> {
    spec.validate()?;
    if sentence.is_empty() {
        return Err(Error::InvalidParameter(
            "cannot corrupt an empty sentence".into(),
        ));
    }

    let mut mixed: Vec<String> = Vec::with_capacity(sentence.len());
    let mut replaced_terms = Vec::new();
    for (position, token) in sentence.tokens().iter().enumerate() {
        match lexicon.lookup(token) {
            Some(t) if stream.random_bool(spec.dict_replace_prob) => {
                mixed.extend(t.split_whitespace().map(str::to_owned));
                replaced_terms.push(ReplacedTerm {
                    position,
                    source_form: token.clone(),
                    target_form: t.to_owned(),
                });
            }
            _ => mixed.push(token.clone()),
        }
    }

    let len = mixed.len();
    let goal = spec.mask_goal(len);
    let poisson = Poisson::new(spec.span_lambda)
        .map_err(|e| Error::InvalidParameter(format!("span_lambda: {e}")))?;
    let mut covered = vec![false; len];
    let mut spans = Vec::new();
    let mut sampled_span_lengths = Vec::new();
    let mut masked = 0usize;
    let mut rejections = 0usize;
    let mut placement_exhausted = false;
    'spans: while masked < goal {
        let drawn = (poisson.sample(stream) as usize).max(1);
        sampled_span_lengths.push(drawn);
        let span_len = drawn.min(goal - masked);
        loop {
            if rejections >= MAX_REJECTIONS {
                placement_exhausted = true;
                break 'spans;
            }
            let start = stream.random_range(0..=len - span_len);
            if covered[start..start + span_len].iter().any(|&c| c) {
                rejections += 1;
                continue;
            }
            covered[start..start + span_len].fill(true);
            spans.push(MaskSpan {
                start,
                len: span_len,
            });
            masked += span_len;
            break;
        }
    }
    spans.sort_unstable_by_key(|s| s.start);

    let mut corrupted = Vec::with_capacity(len - masked + spans.len());
    let mut next_span = spans.iter().peekable();
    let mut i = 0;
    while i < len {
        match next_span.peek() {
            Some(span) if span.start == i => {
                corrupted.push(spec.mask_token.clone());
                i += span.len;
                next_span.next();
            }
            _ => {
                corrupted.push(mixed[i].clone());
                i += 1;
            }
        }
    }

    Ok(CorruptionPair {
        corrupted: Sentence::from_verbatim_tokens(corrupted),
        original: sentence.clone(),
        masked_token_count: masked,
        replaced_terms,
        mixed_len: len,
        spans,
        sampled_span_lengths,
        placement_exhausted,
    })
}

/// Corrupts each sentence with its own stream derived from
/// `(spec.seed, index)`, so results do not depend on scheduling.
pub fn cpt_corrupt_corpus(
    sentences: &[Sentence],
    lexicon: &Lexicon,
    spec: &CorruptionSpec,
) -> Result<Vec<CorruptionPair>> {
    spec.validate()?;
    sentences
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut stream = rng::stream(spec.seed, "augment.cpt", i as u64);
            cpt_corrupt(s, lexicon, spec, &mut stream)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{LexiconEntry, Provenance};
    use proptest::prelude::*;

    fn words(n: usize) -> Sentence {
        Sentence::from_tokens((0..n).map(|i| format!("w{i}")))
    }

    fn lexicon() -> Lexicon {
        let mut lex = Lexicon::new();
        for i in 0..10 {
            lex.insert_new(
                LexiconEntry::new(&format!("w{i}"), &format!("t{i}"), Provenance::Domain, "x")
                    .unwrap(),
            );
        }
        lex
    }

    #[test]
    fn goal_for_twenty_tokens() {
        let spec = CorruptionSpec::default();
        assert_eq!(spec.mask_goal(20), 7);
        assert_eq!(spec.mask_goal(40), 14);
        assert_eq!(spec.mask_goal(1), 1);
    }

    #[test]
    fn twenty_tokens_mask_seven() {
        let spec = CorruptionSpec::default();
        for i in 0..50 {
            let mut stream = rng::stream(1, "t", i);
            let pair = cpt_corrupt(&words(20), &Lexicon::new(), &spec, &mut stream).unwrap();
            assert_eq!(pair.masked_token_count, 7);
            assert_eq!(
                pair.corrupted.len(),
                20 - 7 + pair.spans.len(),
                "each span becomes exactly one mask"
            );
        }
    }

    #[test]
    fn no_op_limit() {
        let spec = CorruptionSpec {
            mask_ratio: 0.0,
            dict_replace_prob: 0.0,
            ..CorruptionSpec::default()
        };
        let s = words(12);
        let pair = cpt_corrupt(&s, &lexicon(), &spec, &mut rng::stream(3, "t", 0)).unwrap();
        assert_eq!(pair.corrupted.tokens(), s.tokens());
        assert_eq!(pair.masked_token_count, 0);
    }

    #[test]
    fn full_replacement_without_masking() {
        let spec = CorruptionSpec {
            mask_ratio: 0.0,
            dict_replace_prob: 1.0,
            ..CorruptionSpec::default()
        };
        let pair = cpt_corrupt(&words(3), &lexicon(), &spec, &mut rng::stream(3, "t", 0)).unwrap();
        assert_eq!(pair.corrupted.text(), "t0 t1 t2");
        assert_eq!(pair.replaced_terms.len(), 3);
        assert_eq!(pair.original.text(), "w0 w1 w2");
    }

    #[test]
    fn rejects_bad_spec_and_empty_sentence() {
        let bad = CorruptionSpec {
            replace_length: 2,
            ..CorruptionSpec::default()
        };
        assert!(bad.validate().is_err());
        let bad = CorruptionSpec {
            mask_ratio: 1.0,
            ..CorruptionSpec::default()
        };
        assert!(bad.validate().is_err());
        let empty = Sentence::new("");
        assert!(cpt_corrupt(
            &empty,
            &Lexicon::new(),
            &CorruptionSpec::default(),
            &mut rng::stream(0, "t", 0)
        )
        .is_err());
    }

    #[test]
    fn corpus_driver_is_order_independent() {
        let sentences: Vec<Sentence> = (5..40).map(words).collect();
        let spec = CorruptionSpec::default();
        let all = cpt_corrupt_corpus(&sentences, &lexicon(), &spec).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let single = pool.install(|| cpt_corrupt_corpus(&sentences, &lexicon(), &spec).unwrap());
        assert_eq!(all, single);
        let tail = cpt_corrupt_corpus(&sentences[10..], &lexicon(), &spec).unwrap();
        // stream index is the position in the slice, so only the first item lines up
        assert_eq!(tail[0].original, all[10].original);
        let mut stream = rng::stream(spec.seed, "augment.cpt", 10);
        assert_eq!(
            cpt_corrupt(&sentences[10], &lexicon(), &spec, &mut stream).unwrap(),
            all[10]
        );
    }

    proptest! {
        #[test]
        fn spans_disjoint_and_accounted(n in 1usize..60, seed in any::<u64>(), ratio in 0.0f64..0.9) {
            let spec = CorruptionSpec { mask_ratio: ratio, seed, ..CorruptionSpec::default() };
            let s = words(n);
            let pair = cpt_corrupt(&s, &lexicon(), &spec, &mut rng::stream(seed, "p", 0)).unwrap();
            prop_assert_eq!(&pair.original, &s);
            let mut end = 0;
            for span in &pair.spans {
                prop_assert!(span.start >= end, "overlap");
                end = span.start + span.len;
            }
            prop_assert!(end <= pair.mixed_len);
            let total: usize = pair.spans.iter().map(|s| s.len).sum();
            prop_assert_eq!(total, pair.masked_token_count);
            prop_assert!(pair.masked_token_count <= spec.mask_goal(pair.mixed_len));
            let max_span = pair.sampled_span_lengths.iter().copied().max().unwrap_or(0);
            if !pair.placement_exhausted {
                prop_assert_eq!(pair.masked_token_count, spec.mask_goal(pair.mixed_len));
                prop_assert!(
                    pair.masked_token_count as f64 / pair.mixed_len as f64
                        >= spec.mask_ratio - max_span as f64 / pair.mixed_len as f64
                );
            }
            let masks = pair.corrupted.tokens().iter().filter(|t| *t == "<mask>").count();
            prop_assert_eq!(masks, pair.spans.len());
        }
    }
}
