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

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_corpus, check_pair};
use crate::corpus::Sentence;
use crate::error::Result;

pub const MAX_NGRAM_ORDER: usize = 4;

/// Sufficient statistics: clipped n-gram matches and hypothesis n-gram
/// totals per order, plus lengths.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BleuStats {
    pub matches: [usize; MAX_NGRAM_ORDER],
    pub totals: [usize; MAX_NGRAM_ORDER],
    pub hyp_len: usize,
    pub ref_len: usize,
}

impl BleuStats {
    pub fn from_pair(hypothesis: &[String], reference: &[String]) -> Self {
        let mut stats = BleuStats {
            hyp_len: hypothesis.len(),
            ref_len: reference.len(),
            ..BleuStats::default()
        };
        for n in 1..=MAX_NGRAM_ORDER {
            let mut ref_counts: HashMap<&[String], usize> = HashMap::new();
            for gram in reference.windows(n) {
                *ref_counts.entry(gram).or_default() += 1;
            }
            let mut hyp_counts: HashMap<&[String], usize> = HashMap::new();
            for gram in hypothesis.windows(n) {
                *hyp_counts.entry(gram).or_default() += 1;
            }
            stats.totals[n - 1] = hypothesis.len().saturating_sub(n - 1);
            stats.matches[n - 1] = hyp_counts
                .iter()
                .map(|(gram, &c)| c.min(ref_counts.get(gram).copied().unwrap_or(0)))
                .sum();
        }
        stats
    }

    pub fn add(&mut self, other: &BleuStats) {
        for n in 0..MAX_NGRAM_ORDER {
            self.matches[n] += other.matches[n];
            self.totals[n] += other.totals[n];
        }
        self.hyp_len += other.hyp_len;
        self.ref_len += other.ref_len;
    }

    pub fn brevity_penalty(&self) -> f64 {
        if self.hyp_len >= self.ref_len {
            1.0
        } else if self.hyp_len == 0 {
            0.0
        } else {
            (1.0 - self.ref_len as f64 / self.hyp_len as f64).exp()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BleuScore {
    /// In [0, 100].
    pub score: f64,
    /// Modified n-gram precisions as fractions, orders 1 to 4.
    pub precisions: [f64; MAX_NGRAM_ORDER],
    pub brevity_penalty: f64,
    pub hyp_len: usize,
    pub ref_len: usize,
    /// Orders that entered the geometric mean.
    pub effective_order: usize,
}

/// Unsmoothed corpus score: any order with zero precision gives 0.
fn score_unsmoothed(stats: &BleuStats) -> BleuScore {
    let bp = stats.brevity_penalty();
    let precisions: [f64; MAX_NGRAM_ORDER] = std::array::from_fn(|n| {
        if stats.totals[n] > 0 {
            stats.matches[n] as f64 / stats.totals[n] as f64
        } else {
            0.0
        }
    });
    let score = if precisions.contains(&0.0) {
        0.0
    } else {
        let mean_log = precisions.iter().map(|p| p.ln()).sum::<f64>() / MAX_NGRAM_ORDER as f64;
        100.0 * bp * mean_log.exp()
    };
    BleuScore {
        score,
        precisions,
        brevity_penalty: bp,
        hyp_len: stats.hyp_len,
        ref_len: stats.ref_len,
        effective_order: MAX_NGRAM_ORDER,
    }
}

/// Exponentially smoothed score over the effective order: orders with no
/// hypothesis n-grams are left out, and the k-th order with zero matches
/// gets precision `1 / (2^k * total)`.
#[allow(clippy::needless_range_loop)]
fn score_smoothed(stats: &BleuStats) -> BleuScore {
    let bp = stats.brevity_penalty();
    let mut precisions = [0.0; MAX_NGRAM_ORDER];
    let mut effective_order = 0;
    let mut result = BleuScore {
        score: 0.0,
        precisions,
        brevity_penalty: bp,
        hyp_len: stats.hyp_len,
        ref_len: stats.ref_len,
        effective_order,
    };
    if stats.matches.iter().all(|&m| m == 0) {
        return result;
    }
    let mut smooth = 1.0;
    for n in 0..MAX_NGRAM_ORDER {
        if stats.totals[n] == 0 {
            break;
        }
        effective_order = n + 1;
        precisions[n] = if stats.matches[n] == 0 {
            smooth *= 2.0;
            1.0 / (smooth * stats.totals[n] as f64)
        } else {
            stats.matches[n] as f64 / stats.totals[n] as f64
        };
    }
    let mean_log = precisions[..effective_order]
        .iter()
        .map(|p| p.ln())
        .sum::<f64>()
        / effective_order as f64;
    result.score = 100.0 * bp * mean_log.exp();
    result.precisions = precisions;
    result.effective_order = effective_order;
    result
}

/// Corpus BLEU with per-sentence clipping and no smoothing.
pub fn corpus_bleu(hypotheses: &[Sentence], references: &[Sentence]) -> Result<BleuScore> {
    check_corpus(hypotheses, references)?;
    let mut stats = BleuStats::default();
    for (h, r) in hypotheses.iter().zip(references) {
        stats.add(&BleuStats::from_pair(h.tokens(), r.tokens()));
    }
    Ok(score_unsmoothed(&stats))
}

/// Sentence BLEU with exponential smoothing and effective order.
pub fn sentence_bleu(hypothesis: &Sentence, reference: &Sentence) -> Result<BleuScore> {
    check_pair(hypothesis, reference)?;
    Ok(score_smoothed(&BleuStats::from_pair(
        hypothesis.tokens(),
        reference.tokens(),
    )))
}
