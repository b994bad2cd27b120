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

//! Builds the domain lexicon from the most frequent in-domain words using the
//! file-backed stub client, then merges alignment-harvested Bible pairs
//! without overwriting any domain entry.
//!
//! ```text
//! cargo run --example build_lexicon
//! ```

use std::path::Path;

use lexaug::align::{harvest_pairs, train_aligner, AlignConfig};
use lexaug::corpus::{load_monolingual, load_parallel};
use lexaug::lexicon::{
    build_domain_lexicon, extract_frequent, merge_bible, IdentityLemmatizer, Provenance, StubClient,
};

fn main() -> lexaug::Result<()> {
    let tiny = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/tiny");
    let (domain, report) = load_monolingual(&tiny.join("domain.en"), "en", "medical")?;
    println!(
        "{} domain sentences ({} blank lines skipped)",
        domain.len(),
        report.blank_lines
    );

    let frequent = extract_frequent(&domain, &IdentityLemmatizer, 40);
    for f in frequent.iter().take(5) {
        println!("  {:<10} x{}", f.lemma, f.frequency);
    }

    let client = StubClient::load(&tiny.join("stub_dictionary.tsv"))?;
    let (lexicon, build) = build_domain_lexicon(&frequent, &client, "en", "xx")?;
    println!(
        "translated {}/{} forms; skipped: {:?}",
        build.translated,
        build.requested,
        build
            .skipped
            .iter()
            .map(|s| s.form.as_str())
            .collect::<Vec<_>>()
    );

    let bible = load_parallel(&tiny.join("bible.en"), &tiny.join("bible.xx"), "en", "xx")?;
    let config = AlignConfig::default();
    let model = train_aligner(&bible, &config)?;
    let harvested = harvest_pairs(&model, &bible, config.min_pair_count)?;
    let merged = merge_bible(&lexicon, &harvested);
    println!(
        "merged lexicon: {} domain + {} bible = {} entries",
        merged.count(Provenance::Domain),
        merged.count(Provenance::Bible),
        merged.len()
    );
    for word in ["patient", "lord", "the"] {
        if let Some(e) = merged.get(word) {
            println!("  {word} -> {} ({})", e.target_form, e.provenance);
        }
    }
    Ok(())
}
