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

//! The pipeline configuration document and its command-line overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::align::AlignConfig;
use crate::augment::{CorruptionSpec, LecaConfig, OovPolicy};
use crate::corpus::SplitSpec;
use crate::lexicon::RemoteClientConfig;
use crate::metrics::ChrfConfig;
use crate::tokenize::TokenizerKind;

/// Sections whose `seed` falls back to the top-level seed when unset.
const SEEDED_SECTIONS: [&str; 4] = ["split", "align", "cpt", "batching"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_source_lang")]
    pub source_lang: String,
    pub target_lang: String,
    pub paths: Paths,
    #[serde(default)]
    pub split: SplitSpec,
    #[serde(default)]
    pub align: AlignConfig,
    #[serde(default)]
    pub lexicon: LexiconSettings,
    #[serde(default)]
    pub dali: DaliSettings,
    #[serde(default)]
    pub leca: LecaConfig,
    #[serde(default)]
    pub cpt: CorruptionSpec,
    #[serde(default)]
    pub batching: BatchSettings,
    #[serde(default)]
    pub evaluation: EvaluationSettings,
    #[serde(default)]
    pub tokenizer: TokenizerKind,
}

fn default_seed() -> u64 {
    42
}

fn default_source_lang() -> String {
    "en".into()
}

/// Input files, relative to the directory holding the config file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Paths {
    pub bible_source: String,
    pub bible_target: String,
    /// In-domain parallel data; the test set is held out from it and the
    /// rest of its source side serves as monolingual text.
    pub domain_source: String,
    pub domain_target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stub_dictionary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma_table: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClientKind {
    #[default]
    Stub,
    Remote,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ClientSettings {
    pub kind: ClientKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint_url: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub api_key_env: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LexiconSettings {
    pub n_lemmas: usize,
    pub client: ClientSettings,
}

impl Default for LexiconSettings {
    fn default() -> Self {
        LexiconSettings {
            n_lemmas: 5000,
            client: ClientSettings::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DaliSettings {
    pub oov_policy: OovPolicy,
    pub histogram_bins: usize,
}

impl Default for DaliSettings {
    fn default() -> Self {
        DaliSettings {
            oov_policy: OovPolicy::Copy,
            histogram_bins: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BatchSettings {
    pub batch_size: usize,
    pub seed: u64,
}

impl Default for BatchSettings {
    fn default() -> Self {
        BatchSettings {
            batch_size: 32,
            seed: default_seed(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvaluationSettings {
    pub chrf: ChrfConfig,
}

/// A configuration problem, always naming the offending key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Overrides applied on top of the config file, in order.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    /// `key.path=value` assignments; the value is parsed as JSON when it
    /// parses, and taken as a string otherwise.
    pub set: Vec<String>,
    pub seed: Option<u64>,
}

/// A validated configuration together with the directory its relative
/// paths are resolved against.
#[derive(Debug, Clone)]
pub struct LoadedConfig {
    pub config: PipelineConfig,
    pub base_dir: PathBuf,
}

impl LoadedConfig {
    pub fn load(path: &Path, overrides: &Overrides) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
        let doc: Value = serde_json::from_str(&text)
            .map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        let base_dir = path
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from("."));
        Self::from_value(doc, base_dir, overrides)
    }

    pub fn from_value(
        mut doc: Value,
        base_dir: PathBuf,
        overrides: &Overrides,
    ) -> Result<Self, ConfigError> {
        for assignment in &overrides.set {
            apply_assignment(&mut doc, assignment)?;
        }
        let root = doc
            .as_object_mut()
            .ok_or_else(|| ConfigError("config must be a JSON object".into()))?;
        if let Some(seed) = overrides.seed {
            root.insert("seed".into(), seed.into());
        }
        let seed = root
            .get("seed")
            .cloned()
            .unwrap_or_else(|| default_seed().into());
        for section in SEEDED_SECTIONS {
            let entry = root
                .entry(section)
                .or_insert_with(|| Value::Object(Map::new()));
            if let Some(obj) = entry.as_object_mut() {
                obj.entry("seed").or_insert_with(|| seed.clone());
            }
        }

        let config: PipelineConfig =
            serde_json::from_value(doc).map_err(|e| ConfigError(format!("config: {e}")))?;
        let loaded = LoadedConfig { config, base_dir };
        loaded.validate()?;
        Ok(loaded)
    }

    pub fn resolve(&self, configured: &str) -> PathBuf {
        self.base_dir.join(configured)
    }

    /// The configuration exactly as the stages see it.
    pub fn effective(&self) -> Value {
        serde_json::to_value(&self.config).expect("config serializes")
    }

    pub fn remote_client(&self) -> Option<RemoteClientConfig> {
        let c = &self.config.lexicon.client;
        match (c.kind, &c.endpoint_url, &c.api_key_env) {
            (ClientKind::Remote, Some(url), Some(env)) => Some(RemoteClientConfig {
                endpoint_url: url.clone(),
                api_key_env: env.clone(),
            }),
            _ => None,
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let c = &self.config;
        fn key(name: &'static str) -> impl Fn(crate::Error) -> ConfigError {
            move |e| ConfigError(format!("{name}: {e}"))
        }
        c.split.validate().map_err(key("split"))?;
        c.align.validate().map_err(key("align"))?;
        c.leca.validate().map_err(key("leca"))?;
        c.cpt.validate().map_err(key("cpt"))?;
        c.evaluation
            .chrf
            .validate()
            .map_err(key("evaluation.chrf"))?;
        if c.source_lang.trim().is_empty() {
            return Err(ConfigError("source_lang: must not be empty".into()));
        }
        if c.target_lang.trim().is_empty() {
            return Err(ConfigError("target_lang: must not be empty".into()));
        }
        if c.lexicon.n_lemmas == 0 {
            return Err(ConfigError("lexicon.n_lemmas: must be positive".into()));
        }
        if c.dali.histogram_bins == 0 {
            return Err(ConfigError("dali.histogram_bins: must be positive".into()));
        }
        if c.batching.batch_size < 2 || !c.batching.batch_size.is_multiple_of(2) {
            return Err(ConfigError(format!(
                "batching.batch_size: must be even and at least 2, got {}",
                c.batching.batch_size
            )));
        }

        let mut files = vec![
            ("paths.bible_source", Some(&c.paths.bible_source)),
            ("paths.bible_target", Some(&c.paths.bible_target)),
            ("paths.domain_source", Some(&c.paths.domain_source)),
            ("paths.domain_target", Some(&c.paths.domain_target)),
            ("paths.lemma_table", c.paths.lemma_table.as_ref()),
        ];
        match c.lexicon.client.kind {
            ClientKind::Stub => {
                if c.paths.stub_dictionary.is_none() {
                    return Err(ConfigError(
                        "paths.stub_dictionary: required when lexicon.client.kind is \"stub\""
                            .into(),
                    ));
                }
                files.push(("paths.stub_dictionary", c.paths.stub_dictionary.as_ref()));
            }
            ClientKind::Remote => {
                if c.lexicon.client.endpoint_url.is_none() {
                    return Err(ConfigError(
                        "lexicon.client.endpoint_url: required for the remote client".into(),
                    ));
                }
                if c.lexicon.client.api_key_env.is_none() {
                    return Err(ConfigError(
                        "lexicon.client.api_key_env: required for the remote client".into(),
                    ));
                }
            }
        }
        for (name, value) in files {
            if let Some(p) = value {
                let full = self.resolve(p);
                if !full.is_file() {
                    return Err(ConfigError(format!(
                        "{name}: file not found: {}",
                        full.display()
                    )));
                }
            }
        }
        Ok(())
    }
}

fn apply_assignment(doc: &mut Value, assignment: &str) -> Result<(), ConfigError> {
    let (path, raw) = assignment
        .split_once('=')
        .ok_or_else(|| ConfigError(format!("--set {assignment:?}: expected key.path=value")))?;
    let keys: Vec<&str> = path.split('.').collect();
    if keys.iter().any(|k| k.is_empty()) {
        return Err(ConfigError(format!(
            "--set {assignment:?}: empty key in {path:?}"
        )));
    }
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_owned()));
    let mut node = doc;
    for (depth, k) in keys.iter().enumerate() {
        let obj = node.as_object_mut().ok_or_else(|| {
            ConfigError(format!(
                "--set {path}: {} is not an object",
                keys[..depth].join(".")
            ))
        })?;
        if depth + 1 == keys.len() {
            obj.insert((*k).to_owned(), value);
            return Ok(());
        }
        node = obj.entry(*k).or_insert_with(|| Value::Object(Map::new()));
    }
    unreachable!("keys is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn fixture_dir() -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        for f in ["b.en", "b.xx", "d.en", "d.xx", "dict.tsv"] {
            std::fs::write(dir.path().join(f), "x\n").unwrap();
        }
        dir
    }

    fn minimal() -> Value {
        json!({
            "target_lang": "xx",
            "paths": {
                "bible_source": "b.en", "bible_target": "b.xx",
                "domain_source": "d.en", "domain_target": "d.xx",
                "stub_dictionary": "dict.tsv"
            }
        })
    }

    fn load(doc: Value, dir: &Path, overrides: &Overrides) -> Result<LoadedConfig, ConfigError> {
        LoadedConfig::from_value(doc, dir.to_path_buf(), overrides)
    }

    #[test]
    fn defaults_fill_in_and_seeds_follow_the_top_level_seed() {
        let dir = fixture_dir();
        let c = load(minimal(), dir.path(), &Overrides::default())
            .unwrap()
            .config;
        assert_eq!(c.seed, 42);
        assert_eq!(c.split.validation_fraction, 0.08);
        assert_eq!(c.lexicon.n_lemmas, 5000);
        assert_eq!(c.cpt.mask_ratio, 0.35);

        let o = Overrides {
            seed: Some(7),
            ..Overrides::default()
        };
        let c = load(minimal(), dir.path(), &o).unwrap().config;
        assert_eq!(
            (c.split.seed, c.align.seed, c.cpt.seed, c.batching.seed),
            (7, 7, 7, 7)
        );
    }

    #[test]
    fn explicit_section_seed_survives() {
        let dir = fixture_dir();
        let mut doc = minimal();
        doc["cpt"] = json!({"seed": 5});
        let c = load(doc, dir.path(), &Overrides::default()).unwrap().config;
        assert_eq!(c.cpt.seed, 5);
        assert_eq!(c.split.seed, 42);
    }

    #[test]
    fn set_overrides_parse_json_or_fall_back_to_strings() {
        let dir = fixture_dir();
        let o = Overrides {
            set: vec![
                "cpt.mask_ratio=0.2".into(),
                "leca.separator=<s>".into(),
                "dali.oov_policy=\"drop\"".into(),
            ],
            seed: None,
        };
        let c = load(minimal(), dir.path(), &o).unwrap().config;
        assert_eq!(c.cpt.mask_ratio, 0.2);
        assert_eq!(c.leca.separator, "<s>");
        assert_eq!(c.dali.oov_policy, OovPolicy::Drop);
    }

    #[test]
    fn errors_name_the_key() {
        let dir = fixture_dir();
        let cases = [
            ("batching.batch_size=3", "batching.batch_size"),
            ("paths.lemma_table=missing.tsv", "paths.lemma_table"),
            ("split.bogus=1", "bogus"),
            ("cpt.mask_ratio=1.5", "cpt"),
            ("lexicon.client.kind=remote", "lexicon.client.endpoint_url"),
        ];
        for (set, key) in cases {
            let o = Overrides {
                set: vec![set.into()],
                seed: None,
            };
            let err = load(minimal(), dir.path(), &o).unwrap_err();
            assert!(err.0.contains(key), "{set}: {err}");
        }
        let mut doc = minimal();
        doc["paths"]
            .as_object_mut()
            .unwrap()
            .remove("domain_target");
        assert!(load(doc, dir.path(), &Overrides::default())
            .unwrap_err()
            .0
            .contains("domain_target"));
    }

    #[test]
    fn effective_config_round_trips() {
        let dir = fixture_dir();
        let loaded = load(minimal(), dir.path(), &Overrides::default()).unwrap();
        let again = load(loaded.effective(), dir.path(), &Overrides::default()).unwrap();
        assert_eq!(again.config, loaded.config);
    }
}
