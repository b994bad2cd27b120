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

//! Runs the whole pipeline on the bundled tiny corpus twice, with different
//! thread counts, and shows that the artifacts are byte-identical and that a
//! third run is a no-op.
//!
//! ```text
//! cargo run --example reproducible_pipeline
//! ```

use std::path::Path;

use lexaug::cli::{run_from, StageStatus};
use lexaug::manifest::Manifest;

fn pipeline(out: &Path, threads: &str) -> Vec<StageStatus> {
    let config = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/tiny/config.json");
    let args = [
        "lexaug".to_string(),
        "--quiet".into(),
        "--config".into(),
        config.display().to_string(),
        "--output-dir".into(),
        out.display().to_string(),
        "--threads".into(),
        threads.into(),
        "pipeline".into(),
    ];
    match run_from(args) {
        Ok(statuses) => statuses.into_iter().map(|(_, s)| s).collect(),
        Err(e) => panic!("pipeline failed: {e}"),
    }
}

fn main() {
    let root = tempfile::tempdir().expect("temporary directory");
    let (a, b) = (root.path().join("a"), root.path().join("b"));
    pipeline(&a, "1");
    pipeline(&b, "4");

    let ma = Manifest::load(&a).unwrap().expect("manifest");
    let mb = Manifest::load(&b).unwrap().expect("manifest");
    for stage in &ma.stages {
        for out in &stage.outputs {
            let same = mb
                .stage(&stage.operation)
                .is_some_and(|s| s.outputs.contains(out));
            println!(
                "{:<14} {:<22} {} {}",
                stage.operation,
                out.path,
                &out.sha256[..12],
                if same { "same" } else { "DIFFERENT" }
            );
        }
    }
    println!(
        "manifests equal apart from timestamps: {}",
        ma.without_timestamps() == mb.without_timestamps()
    );

    let rerun = pipeline(&a, "2");
    let skipped = rerun
        .iter()
        .filter(|s| **s == StageStatus::UpToDate)
        .count();
    println!("third run: {skipped} of {} stages up to date", rerun.len());
}
