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

//! Appends dictionary suggestions to source sentences for a copy-capable
//! decoder.
//!
//! ```text
//! cargo run --example leca_annotation
//! ```

use lexaug::augment::{leca_annotate, LecaConfig};
use lexaug::corpus::Sentence;
use lexaug::lexicon::{Lexicon, LexiconEntry, Provenance};

fn main() -> lexaug::Result<()> {
    let mut lexicon = Lexicon::new();
    for (en, xx) in [
        ("vaccine", "cjepivo"),
        ("dose", "doza"),
        ("children", "djeca"),
        ("second", "druga doza"),
    ] {
        lexicon.insert_new(LexiconEntry::new(en, xx, Provenance::Domain, en)?);
    }

    let config = LecaConfig::default();
    for line in [
        "Children receive a second dose of the vaccine",
        "the dose the dose the dose",
        "nothing to suggest",
    ] {
        let annotated = leca_annotate(&Sentence::new(line), &lexicon, &config);
        println!("{}", annotated.rendered.text());
        println!("  suggestions: {:?}", annotated.suggestions);
    }

    let capped = LecaConfig {
        max_suggestions: 1,
        separator: "<c>".into(),
    };
    let one = leca_annotate(&Sentence::new("vaccine dose children"), &lexicon, &capped);
    println!("capped at one: {}", one.rendered.text());
    Ok(())
}
