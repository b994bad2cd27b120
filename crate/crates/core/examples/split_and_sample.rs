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

//! Loads the bundled Bible pair, carves out a validation split, caps the
//! training side and prints per-corpus statistics.
//!
//! ```text
//! cargo run --example split_and_sample
//! ```

use std::path::Path;

use lexaug::corpus::{
    corpus_stats, hold_out_test, load_parallel, sample_cap, split_validation, SplitSpec,
};
use lexaug::tokenize::CharacterTokenizer;

fn main() -> lexaug::Result<()> {
    let tiny = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/tiny");
    let bible = load_parallel(&tiny.join("bible.en"), &tiny.join("bible.xx"), "en", "xx")?;

    let spec = SplitSpec {
        test_count: 40,
        train_cap: 300,
        ..SplitSpec::default()
    };
    let (rest, test) = hold_out_test(&bible, &spec)?;
    let (train, valid) = split_validation(&rest, &spec)?;
    let capped = sample_cap(&train, spec.train_cap, spec.seed)?;
    println!(
        "{} pairs -> test {}, validation {}, train {} (capped to {})",
        bible.len(),
        test.len(),
        valid.len(),
        train.len(),
        capped.len()
    );

    let english = capped.source_side("bible");
    let stats = corpus_stats(&english.sentences, &CharacterTokenizer);
    println!(
        "train source: {:.2} words, {:.2} character tokens, {:.2} chars per line",
        stats.avg_words, stats.avg_tokens, stats.avg_chars
    );
    println!(
        "first kept pair: {:?} -> {:?}",
        capped.pairs[0].source.text(),
        capped.pairs[0].target.text()
    );
    Ok(())
}
