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

use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant onto an exit code
/// through [`Error::is_config_error`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: line {line} is not valid UTF-8")]
    InvalidUtf8 { path: PathBuf, line: usize },

    #[error("parallel files have different line counts: {source_lines} vs {target_lines}")]
    LineCountMismatch {
        source_lines: usize,
        target_lines: usize,
    },

    #[error("{path}: line {line} is blank")]
    BlankLine { path: PathBuf, line: usize },

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("corpus has {size} items, need more than {required}")]
    CorpusTooSmall { size: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alignment model has not been trained")]
    UntrainedModel,

    #[error("translation client failed after {translated} of {requested} forms: {message}")]
    Transport {
        message: String,
        translated: usize,
        requested: usize,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Whether the error stems from user-supplied parameters rather than data.
    pub fn is_config_error(&self) -> bool {
        matches!(self, Error::InvalidParameter(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
