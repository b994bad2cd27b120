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
use crate::error::{Error, Result};

/// How per-order statistics are combined into one F-score.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChrfAveraging {
    /// Average precision and recall over orders where both sides have
    /// n-grams, then take F-beta (sacreBLEU's default).
    #[default]
    AveragedPrecisionRecall,
    /// Arithmetic mean of the per-order F-beta scores, an order with
    /// `P = R = 0` contributing 0 (sacreBLEU with `eps_smoothing=True`).
    MeanOfF,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ChrfConfig {
    pub char_order: usize,
    pub beta: f64,
    pub include_whitespace: bool,
    pub averaging: ChrfAveraging,
}

impl Default for ChrfConfig {
    fn default() -> Self {
        ChrfConfig {
            char_order: 6,
            beta: 2.0,
            include_whitespace: false,
            averaging: ChrfAveraging::default(),
        }
    }
}

impl ChrfConfig {
    pub fn validate(&self) -> Result<()> {
        if self.char_order == 0 {
            return Err(Error::InvalidParameter(
                "char_order must be at least 1".into(),
            ));
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        Ok(())
    }

    fn chars(&self, sentence: &Sentence) -> Vec<char> {
        if self.include_whitespace {
            sentence.text().chars().collect()
        } else {
            sentence.tokens().iter().flat_map(|t| t.chars()).collect()
        }
    }
}

/// Per-order `(hypothesis n-grams, reference n-grams, clipped matches)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChrfStats {
    pub orders: Vec<[usize; 3]>,
}

impl ChrfStats {
    fn from_chars(hyp: &[char], reference: &[char], order: usize) -> Self {
        let orders = (1..=order)
            .map(|n| {
                let mut ref_counts: HashMap<&[char], usize> = HashMap::new();
                for gram in reference.windows(n) {
                    *ref_counts.entry(gram).or_default() += 1;
                }
                let mut hyp_counts: HashMap<&[char], usize> = HashMap::new();
                for gram in hyp.windows(n) {
                    *hyp_counts.entry(gram).or_default() += 1;
                }
                let matches = hyp_counts
                    .iter()
                    .map(|(g, &c)| c.min(ref_counts.get(g).copied().unwrap_or(0)))
                    .sum();
                [
                    hyp.len().saturating_sub(n - 1),
                    reference.len().saturating_sub(n - 1),
                    matches,
                ]
            })
            .collect();
        ChrfStats { orders }
    }

    fn add(&mut self, other: &ChrfStats) {
        if self.orders.is_empty() {
            self.orders = vec![[0; 3]; other.orders.len()];
        }
        for (a, b) in self.orders.iter_mut().zip(&other.orders) {
            for k in 0..3 {
                a[k] += b[k];
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChrfScore {
    /// In [0, 100].
    pub score: f64,
    pub char_order: usize,
    pub beta: f64,
}

fn f_beta(precision: f64, recall: f64, beta2: f64) -> f64 {
    let denom = beta2 * precision + recall;
    if denom > 0.0 {
        (1.0 + beta2) * precision * recall / denom
    } else {
        0.0
    }
}

fn score(stats: &ChrfStats, config: &ChrfConfig) -> ChrfScore {
    let beta2 = config.beta * config.beta;
    let ratio = |num: usize, den: usize| {
        if den > 0 {
            num as f64 / den as f64
        } else {
            0.0
        }
    };
    let value = match config.averaging {
        ChrfAveraging::MeanOfF => {
            let sum: f64 = stats
                .orders
                .iter()
                .map(|&[hyp, reference, matched]| {
                    f_beta(ratio(matched, hyp), ratio(matched, reference), beta2)
                })
                .sum();
            sum / config.char_order as f64
        }
        ChrfAveraging::AveragedPrecisionRecall => {
            let effective: Vec<(f64, f64)> = stats
                .orders
                .iter()
                .filter(|&&[hyp, reference, _]| hyp > 0 && reference > 0)
                .map(|&[hyp, reference, matched]| (ratio(matched, hyp), ratio(matched, reference)))
                .collect();
            if effective.is_empty() {
                0.0
            } else {
                let k = effective.len() as f64;
                let p = effective.iter().map(|e| e.0).sum::<f64>() / k;
                let r = effective.iter().map(|e| e.1).sum::<f64>() / k;
                f_beta(p, r, beta2)
            }
        }
    };
    ChrfScore {
        score: 100.0 * value,
        char_order: config.char_order,
        beta: config.beta,
    }
}

/// Corpus chrF: statistics are summed over all pairs before scoring.
pub fn corpus_chrf(
    hypotheses: &[Sentence],
    references: &[Sentence],
    config: &ChrfConfig,
) -> Result<ChrfScore> {
    config.validate()?;
    check_corpus(hypotheses, references)?;
    let mut total = ChrfStats::default();
    for (h, r) in hypotheses.iter().zip(references) {
        total.add(&ChrfStats::from_chars(
            &config.chars(h),
            &config.chars(r),
            config.char_order,
        ));
    }
    Ok(score(&total, config))
}

pub fn sentence_chrf(
    hypothesis: &Sentence,
    reference: &Sentence,
    config: &ChrfConfig,
) -> Result<ChrfScore> {
    config.validate()?;
    check_pair(hypothesis, reference)?;
    let stats = ChrfStats::from_chars(
        &config.chars(hypothesis),
        &config.chars(reference),
        config.char_order,
    );
    Ok(score(&stats, config))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Sentence {
        Sentence::new(text)
    }

    #[test]
    fn identity_and_disjoint() {
        let c = ChrfConfig::default();
        for text in ["yes", "the patient should rest", "għajn"] {
            assert_eq!(sentence_chrf(&s(text), &s(text), &c).unwrap().score, 100.0);
        }
        assert_eq!(sentence_chrf(&s("abc"), &s("xyz"), &c).unwrap().score, 0.0);
        let mean_f = ChrfConfig {
            averaging: ChrfAveraging::MeanOfF,
            ..c
        };
        assert_eq!(
            sentence_chrf(&s("abcdefgh"), &s("abcdefgh"), &mean_f)
                .unwrap()
                .score,
            100.0
        );
        assert_eq!(
            sentence_chrf(&s("abc"), &s("xyz"), &mean_f).unwrap().score,
            0.0
        );
    }

    #[test]
    fn whitespace_is_removed_by_default() {
        let c = ChrfConfig::default();
        assert_eq!(
            sentence_chrf(&s("ab cd"), &s("abcd"), &c).unwrap().score,
            100.0
        );
        let keep = ChrfConfig {
            include_whitespace: true,
            ..c
        };
        assert!(sentence_chrf(&s("ab cd"), &s("abcd"), &keep).unwrap().score < 100.0);
    }

    #[test]
    fn counts_unicode_scalars() {
        let st = ChrfStats::from_chars(&['ħ', 'a'], &['ħ', 'a'], 2);
        assert_eq!(st.orders, vec![[2, 2, 2], [1, 1, 1]]);
    }

    proptest! {
        #[test]
        fn swap_symmetry_with_equal_totals(a in "[a-c]{1,12}", b in "[a-c]{1,12}") {
            // equal lengths => equal n-gram totals per order => P and R swap, F unchanged
            let n = a.len().min(b.len());
            let (a, b) = (&a[..n], &b[..n]);
            for averaging in [ChrfAveraging::MeanOfF, ChrfAveraging::AveragedPrecisionRecall] {
                let c = ChrfConfig { averaging, ..ChrfConfig::default() };
                let x = sentence_chrf(&s(a), &s(b), &c).unwrap().score;
                let y = sentence_chrf(&s(b), &s(a), &c).unwrap().score;
                prop_assert!((x - y).abs() < 1e-9);
                prop_assert!((0.0..=100.0 + 1e-9).contains(&x));
            }
        }
    }
}
