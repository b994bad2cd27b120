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

//! Corpus and sentence BLEU and chrF on pre-tokenized text, plus the
//! sentence-score curve by reference length.
//!
//! ```text
//! cargo run --example evaluate_metrics
//! ```

use lexaug::corpus::Sentence;
use lexaug::metrics::{
    corpus_bleu, corpus_chrf, evaluate_system, sentence_bleu, sentence_chrf, ChrfAveraging,
    ChrfConfig, EvaluationReport,
};
use lexaug::tokenize::WhitespaceTokenizer;

fn main() -> lexaug::Result<()> {
    let refs: Vec<Sentence> = [
        "the patient was given a second dose",
        "take one tablet twice a day",
        "call your doctor if the fever persists",
        "wash your hands before each meal",
        "yes",
    ]
    .into_iter()
    .map(Sentence::new)
    .collect();
    let hyps: Vec<Sentence> = [
        "the patient got a second dose",
        "take one tablet two times a day",
        "call the doctor if fever continues",
        "wash your hands before every meal",
        "yes",
    ]
    .into_iter()
    .map(Sentence::new)
    .collect();

    let bleu = corpus_bleu(&hyps, &refs)?;
    println!(
        "corpus BLEU {:.2} (bp {:.4}, precisions {:?})",
        bleu.score, bleu.brevity_penalty, bleu.precisions
    );
    let chrf = ChrfConfig::default();
    println!("corpus chrF {:.2}", corpus_chrf(&hyps, &refs, &chrf)?.score);
    let mean_f = ChrfConfig {
        averaging: ChrfAveraging::MeanOfF,
        ..chrf
    };
    println!(
        "corpus chrF, mean of per-order F {:.2}",
        corpus_chrf(&hyps, &refs, &mean_f)?.score
    );

    for (h, r) in hyps.iter().zip(&refs) {
        println!(
            "  BLEU {:6.2}  chrF {:6.2}  {}",
            sentence_bleu(h, r)?.score,
            sentence_chrf(h, r, &chrf)?.score,
            h.text()
        );
    }

    let system = evaluate_system("example", &hyps, &refs, &chrf, &WhitespaceTokenizer)?;
    let report = EvaluationReport::new(vec![system], &refs, chrf, &WhitespaceTokenizer);
    print!("{}", report.length_curve.to_csv());
    Ok(())
}
