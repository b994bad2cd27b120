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

//! Dictionary suggestions appended to model inputs.

use serde::{Deserialize, Serialize};

use crate::corpus::Sentence;
use crate::error::Result;
use crate::lexicon::Lexicon;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LecaConfig {
    pub max_suggestions: usize,
    pub separator: String,
}

impl Default for LecaConfig {
    fn default() -> Self {
        LecaConfig {
            max_suggestions: 10,
            separator: "<sep>".into(),
        }
    }
}

impl LecaConfig {
    pub fn validate(&self) -> Result<()> {
        super::check_symbol("separator", &self.separator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedSentence {
    pub base: Sentence,
    /// Translations of dictionary hits, first occurrence first, no repeats.
    pub suggestions: Vec<String>,
    /// `base ++ [sep, s1, sep, s2, ...]`.
    pub rendered: Sentence,
}

/// Scans `sentence` left to right and appends the translation of each
/// dictionary hit, once, up to `config.max_suggestions`.
pub fn leca_annotate(
    sentence: &Sentence,
    lexicon: &Lexicon,
    config: &LecaConfig,
) -> AnnotatedSentence {
    let mut suggestions: Vec<String> = Vec::new();
    for token in sentence.tokens() {
        if suggestions.len() >= config.max_suggestions {
            break;
        }
        if let Some(t) = lexicon.lookup(token) {
            if !suggestions.iter().any(|s| s == t) {
                suggestions.push(t.to_owned());
            }
        }
    }
    let mut tokens = sentence.tokens().to_vec();
    for s in &suggestions {
        tokens.push(config.separator.clone());
        tokens.extend(s.split_whitespace().map(str::to_owned));
    }
    AnnotatedSentence {
        base: sentence.clone(),
        suggestions,
        rendered: Sentence::from_verbatim_tokens(tokens),
    }
}
