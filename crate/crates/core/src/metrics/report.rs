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

use serde::{Deserialize, Serialize};

use super::{corpus_bleu, corpus_chrf, length_curve, sentence_bleu, sentence_chrf};
use super::{BleuScore, ChrfConfig, ChrfScore, LengthCurve, LengthRecord};
use crate::corpus::{corpus_stats, CorpusStats, Sentence};
use crate::error::Result;
use crate::tokenize::Tokenizer;

/// Scores of one system against the references.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemReport {
    pub name: String,
    pub corpus_bleu: BleuScore,
    pub corpus_chrf: ChrfScore,
    pub sentence_bleu: Vec<f64>,
    pub sentence_chrf: Vec<f64>,
    pub ref_lengths: Vec<usize>,
    pub output_stats: CorpusStats,
}

impl SystemReport {
    pub fn length_records(&self) -> impl Iterator<Item = LengthRecord> + '_ {
        self.ref_lengths
            .iter()
            .zip(&self.sentence_bleu)
            .zip(&self.sentence_chrf)
            .map(|((&ref_len, &bleu), &chrf)| LengthRecord {
                ref_len,
                bleu,
                chrf,
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    /// How text was prepared before scoring.
    pub tokenization: String,
    pub chrf: ChrfConfig,
    pub reference_stats: CorpusStats,
    pub systems: Vec<SystemReport>,
    /// Sentence scores of every system pooled by reference length.
    pub length_curve: LengthCurve,
}

impl EvaluationReport {
    pub fn new(
        systems: Vec<SystemReport>,
        references: &[Sentence],
        chrf: ChrfConfig,
        tokenizer: &dyn Tokenizer,
    ) -> Self {
        let records: Vec<LengthRecord> = systems.iter().flat_map(|s| s.length_records()).collect();
        EvaluationReport {
            tokenization: "lowercased, whitespace-split; no metric-internal tokenization".into(),
            chrf,
            reference_stats: corpus_stats(references, tokenizer),
            length_curve: length_curve(&records),
            systems,
        }
    }
}

/// Scores a system. An empty hypothesis line gets sentence scores of 0.
pub fn evaluate_system(
    name: &str,
    hypotheses: &[Sentence],
    references: &[Sentence],
    chrf: &ChrfConfig,
    tokenizer: &dyn Tokenizer,
) -> Result<SystemReport> {
    let corpus_bleu = corpus_bleu(hypotheses, references)?;
    let corpus_chrf = corpus_chrf(hypotheses, references, chrf)?;
    let mut sentence_bleu_scores = Vec::with_capacity(hypotheses.len());
    let mut sentence_chrf_scores = Vec::with_capacity(hypotheses.len());
    for (h, r) in hypotheses.iter().zip(references) {
        if h.is_empty() {
            sentence_bleu_scores.push(0.0);
            sentence_chrf_scores.push(0.0);
        } else {
            sentence_bleu_scores.push(sentence_bleu(h, r)?.score);
            sentence_chrf_scores.push(sentence_chrf(h, r, chrf)?.score);
        }
    }
    Ok(SystemReport {
        name: name.to_owned(),
        corpus_bleu,
        corpus_chrf,
        sentence_bleu: sentence_bleu_scores,
        sentence_chrf: sentence_chrf_scores,
        ref_lengths: references.iter().map(Sentence::len).collect(),
        output_stats: corpus_stats(hypotheses, tokenizer),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokenize::WhitespaceTokenizer;

    #[test]
    fn report_pools_systems() {
        let refs = vec![Sentence::new("a b c"), Sentence::new("d e")];
        let hyps = vec![Sentence::new("a b c"), Sentence::new("")];
        let c = ChrfConfig::default();
        let sys = evaluate_system("x", &hyps, &refs, &c, &WhitespaceTokenizer).unwrap();
        assert_eq!(sys.sentence_bleu, vec![100.0, 0.0]);
        assert_eq!(sys.ref_lengths, vec![3, 2]);
        let report = EvaluationReport::new(vec![sys.clone(), sys], &refs, c, &WhitespaceTokenizer);
        assert_eq!(report.length_curve.get(3).unwrap().count, 2);
        assert_eq!(report.length_curve.get(2).unwrap().mean_bleu, 0.0);
    }
}
