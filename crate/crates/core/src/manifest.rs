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

//! Run manifests.
//!
//! Every stage of a run appends a [`StageRecord`] to `manifest.json` in the
//! output directory: the stage name, the configuration it saw, SHA-256
//! digests of what it read and wrote, wall-clock bounds and the tool version.
//! A stage whose configuration and input digests match its previous record,
//! and whose outputs are still on disk unchanged, can be skipped.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// File name of the run manifest inside an output directory.
pub const MANIFEST_FILE: &str = "manifest.json";

/// Version string stamped into every record.
pub const TOOL_VERSION: &str = concat!("lexaug ", env!("CARGO_PKG_VERSION"));

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn hash_file(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(sha256_hex(&bytes))
}

/// Seconds since the Unix epoch.
pub fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// A file as seen by a stage. `path` is the name the run knows it by:
/// relative to the output directory for artifacts, as configured for inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

impl FileDigest {
    pub fn of(label: impl Into<String>, file: &Path) -> Result<Self> {
        let data = fs::read(file).map_err(|e| Error::io(file, e))?;
        Ok(FileDigest {
            path: label.into(),
            sha256: sha256_hex(&data),
            bytes: data.len() as u64,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageRecord {
    pub operation: String,
    pub config: Value,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    /// Stage-specific summary such as counts or skipped items.
    pub details: Value,
    pub started_at: u64,
    pub finished_at: u64,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool_version: String,
    /// The effective configuration of the most recent invocation.
    pub config: Value,
    pub stages: Vec<StageRecord>,
}

impl Manifest {
    pub fn new(config: Value) -> Self {
        Manifest {
            tool_version: TOOL_VERSION.to_owned(),
            config,
            stages: Vec::new(),
        }
    }

    /// Reads `dir/manifest.json`, or returns `None` when there is none yet.
    pub fn load(dir: &Path) -> Result<Option<Self>> {
        let path = dir.join(MANIFEST_FILE);
        match fs::read_to_string(&path) {
            Ok(text) => Ok(Some(serde_json::from_str(&text)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::io(path, e)),
        }
    }

    pub fn save(&self, dir: &Path) -> Result<()> {
        let path = dir.join(MANIFEST_FILE);
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(&path, text).map_err(|e| Error::io(path, e))
    }

    pub fn stage(&self, operation: &str) -> Option<&StageRecord> {
        self.stages.iter().find(|s| s.operation == operation)
    }

    /// Stores `record`, replacing an earlier record of the same operation in
    /// place. Outputs claimed by the new record are removed from every other
    /// record, so each file stays listed exactly once.
    pub fn record(&mut self, record: StageRecord) {
        for other in self
            .stages
            .iter_mut()
            .filter(|s| s.operation != record.operation)
        {
            other
                .outputs
                .retain(|o| !record.outputs.iter().any(|n| n.path == o.path));
        }
        match self
            .stages
            .iter_mut()
            .find(|s| s.operation == record.operation)
        {
            Some(slot) => *slot = record,
            None => self.stages.push(record),
        }
    }

    /// Whether `operation` already ran with this configuration on these
    /// inputs and its outputs in `dir` still carry the recorded digests.
    pub fn is_current(
        &self,
        operation: &str,
        config: &Value,
        inputs: &[FileDigest],
        dir: &Path,
    ) -> bool {
        let Some(prev) = self.stage(operation) else {
            return false;
        };
        prev.config == *config
            && prev.inputs == inputs
            && !prev.outputs.is_empty()
            && prev
                .outputs
                .iter()
                .all(|o| FileDigest::of(o.path.clone(), &dir.join(&o.path)).is_ok_and(|d| d == *o))
    }

    /// Output path to the operations listing it.
    pub fn output_owners(&self) -> BTreeMap<&str, Vec<&str>> {
        let mut owners: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for stage in &self.stages {
            for out in &stage.outputs {
                owners
                    .entry(out.path.as_str())
                    .or_default()
                    .push(&stage.operation);
            }
        }
        owners
    }

    /// The manifest with every timestamp zeroed, for comparing runs.
    pub fn without_timestamps(&self) -> Self {
        let mut copy = self.clone();
        for stage in &mut copy.stages {
            stage.started_at = 0;
            stage.finished_at = 0;
        }
        copy
    }
}
