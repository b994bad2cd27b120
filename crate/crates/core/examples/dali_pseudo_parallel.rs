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

//! Word-for-word forward translation of monolingual text into a
//! pseudo-parallel corpus, under both out-of-vocabulary policies.
//!
//! ```text
//! cargo run --example dali_pseudo_parallel
//! ```

use lexaug::augment::{dali_synthesize, dali_translate, replaced_fraction_histogram, OovPolicy};
use lexaug::corpus::{Corpus, Sentence};
use lexaug::lexicon::{Lexicon, LexiconEntry, Provenance};

fn main() -> lexaug::Result<()> {
    let mut lexicon = Lexicon::new();
    for (en, hr) in [
        ("patient", "pacijent"),
        ("the", "taj"),
        ("fever", "groznica"),
        ("high", "visoka"),
        ("doctor", "liječnik"),
        ("checked", "provjerio je"),
    ] {
        lexicon.insert_new(LexiconEntry::new(en, hr, Provenance::Domain, en)?);
    }

    let sentence = Sentence::new("The doctor checked the patient today");
    for policy in [OovPolicy::Copy, OovPolicy::Drop] {
        let pair = dali_translate(&sentence, &lexicon, policy);
        println!(
            "{policy:?}: {} ({:.0}% replaced)",
            pair.pseudo_target.text(),
            100.0 * pair.replaced_fraction
        );
    }

    let monolingual = Corpus::new(
        [
            "the patient has a high fever",
            "fever and pain",
            "the doctor is here",
            "no dictionary words here",
        ]
        .into_iter()
        .map(Sentence::new)
        .collect(),
        "en",
        "medical",
    )?;
    let pairs = dali_synthesize(&monolingual, &lexicon, OovPolicy::Copy);
    for p in &pairs {
        println!("{:<32} => {}", p.source.text(), p.pseudo_target.text());
    }
    println!(
        "replaced-fraction histogram (5 bins): {:?}",
        replaced_fraction_histogram(&pairs, 5)
    );
    Ok(())
}
