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

//! Trains the diagonal-prior aligner on the bundled Bible pair, shows the
//! Viterbi links of one sentence and the most frequent harvested pairs.
//!
//! ```text
//! cargo run --example align_and_harvest
//! ```

use std::path::Path;

use lexaug::align::{harvest_pairs, train_aligner, AlignConfig};
use lexaug::corpus::load_parallel;

fn main() -> lexaug::Result<()> {
    let tiny = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/tiny");
    let bible = load_parallel(&tiny.join("bible.en"), &tiny.join("bible.xx"), "en", "xx")?;

    let config = AlignConfig::default();
    let model = train_aligner(&bible, &config)?;
    for (i, ll) in model.log_likelihoods.iter().enumerate() {
        println!("iteration {}: log-likelihood {ll:.2}", i + 1);
    }

    let pair = &bible.pairs[0];
    println!("\n{}\n{}", pair.source.text(), pair.target.text());
    for link in model.viterbi_align(pair)? {
        let target = &pair.target.tokens()[link.target_index];
        match link.source_index {
            Some(j) => println!("  {target:<10} <- {}", pair.source.tokens()[j]),
            None => println!("  {target:<10} <- (null)"),
        }
    }

    let harvested = harvest_pairs(&model, &bible, config.min_pair_count)?;
    println!("\n{} harvested pairs, most frequent:", harvested.len());
    for p in harvested.iter().take(10) {
        println!("  {:<10} {:<10} {}", p.source, p.target, p.count);
    }
    Ok(())
}
