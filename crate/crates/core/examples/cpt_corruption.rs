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

//! Mixed-language replacement followed by span-Poisson masking, producing
//! (corrupted, original) reconstruction pairs.
//!
//! ```text
//! cargo run --example cpt_corruption
//! ```

use lexaug::augment::{cpt_corrupt, cpt_corrupt_corpus, CorruptionSpec};
use lexaug::corpus::Sentence;
use lexaug::lexicon::{Lexicon, LexiconEntry, Provenance};
use lexaug::rng;

fn main() -> lexaug::Result<()> {
    let mut lexicon = Lexicon::new();
    for (en, xx) in [
        ("patients", "pacijenti"),
        ("infection", "infekcija"),
        ("hospital", "bolnica"),
    ] {
        lexicon.insert_new(LexiconEntry::new(en, xx, Provenance::Domain, en)?);
    }
    let spec = CorruptionSpec::default();
    let sentence = Sentence::new(
        "patients admitted to the hospital with a suspected infection were tested twice and monitored closely for a week",
    );

    let mut stream = rng::stream(spec.seed, "example.cpt", 0);
    let pair = cpt_corrupt(&sentence, &lexicon, &spec, &mut stream)?;
    println!("original : {}", pair.original.text());
    println!("corrupted: {}", pair.corrupted.text());
    println!(
        "masked {} of {} tokens in {} spans {:?}; replaced {:?}",
        pair.masked_token_count,
        pair.mixed_len,
        pair.spans.len(),
        pair.spans.iter().map(|s| s.len).collect::<Vec<_>>(),
        pair.replaced_terms
            .iter()
            .map(|t| &t.target_form)
            .collect::<Vec<_>>()
    );

    let corpus: Vec<Sentence> = (0..2000).map(|_| sentence.clone()).collect();
    let pairs = cpt_corrupt_corpus(&corpus, &lexicon, &spec)?;
    let masked: usize = pairs.iter().map(|p| p.masked_token_count).sum();
    let total: usize = pairs.iter().map(|p| p.mixed_len).sum();
    println!(
        "over {} corruptions: {:.3} of tokens masked",
        pairs.len(),
        masked as f64 / total as f64
    );
    Ok(())
}
