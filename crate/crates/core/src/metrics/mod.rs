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

//! Translation quality metrics: BLEU, chrF, reference-length curves and
//! output length statistics.
//!
//! Every metric works on the crate's lowercased whitespace tokens; there is
//! no metric-internal tokenization. Scores follow sacreBLEU run on
//! pre-tokenized input (`tokenize="none"`).

mod bleu;
mod chrf;
mod curve;
mod report;

pub use bleu::{corpus_bleu, sentence_bleu, BleuScore, BleuStats, MAX_NGRAM_ORDER};
pub use chrf::{corpus_chrf, sentence_chrf, ChrfAveraging, ChrfConfig, ChrfScore, ChrfStats};
pub use curve::{length_curve, LengthCurve, LengthPoint, LengthRecord};
pub use report::{evaluate_system, EvaluationReport, SystemReport};

use crate::corpus::{corpus_stats, CorpusStats, Sentence};
use crate::error::{Error, Result};
use crate::tokenize::Tokenizer;

/// Average word, token and character counts of system outputs.
pub fn output_stats(hypotheses: &[Sentence], tokenizer: &dyn Tokenizer) -> CorpusStats {
    corpus_stats(hypotheses, tokenizer)
}

fn check_corpus(hypotheses: &[Sentence], references: &[Sentence]) -> Result<()> {
    if hypotheses.len() != references.len() {
        return Err(Error::InvalidParameter(format!(
            "{} hypotheses but {} references",
            hypotheses.len(),
            references.len()
        )));
    }
    if hypotheses.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    Ok(())
}

fn check_pair(hypothesis: &Sentence, reference: &Sentence) -> Result<()> {
    if hypothesis.is_empty() || reference.is_empty() {
        return Err(Error::InvalidParameter(
            "sentence-level scores need a non-empty hypothesis and reference".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokenize::WhitespaceTokenizer;

    #[test]
    fn output_stats_examples() {
        let s = output_stats(&[Sentence::new("a b")], &WhitespaceTokenizer);
        assert_eq!((s.avg_words, s.avg_chars), (2.0, 3.0));
        assert_eq!(
            output_stats(&[], &WhitespaceTokenizer),
            CorpusStats::default()
        );
    }
}
