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

//! The pipeline stages. Each stage names its inputs and configuration up
//! front, then writes its artifacts into the output directory.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::align::{
    harvest_pairs, harvested_from_tsv, harvested_to_tsv, train_aligner, AlignmentModel,
};
use crate::augment::{
    cpt_corrupt_corpus, dali_synthesize, dali_translate, leca_annotate, replaced_fraction_histogram,
};
use crate::batching::plan_batches;
use crate::corpus::{
    corpus_stats, hold_out_test, load_monolingual, load_parallel, read_lines, sample_cap,
    split_validation, write_lines, Corpus, ParallelCorpus, Sentence,
};
use crate::error::{Error, Result};
use crate::lexicon::{
    build_domain_lexicon, extract_frequent, merge_bible, IdentityLemmatizer, Lemmatizer, Lexicon,
    Provenance, RemoteClient, StubClient, TableLemmatizer, TranslationClient,
};
use crate::manifest::hash_file;
use crate::metrics::{evaluate_system, EvaluationReport};

use super::config::{ClientKind, LoadedConfig};

pub const BIBLE_TRAIN_SRC: &str = "bible.train.src";
pub const BIBLE_TRAIN_TGT: &str = "bible.train.tgt";
pub const BIBLE_VALID_SRC: &str = "bible.valid.src";
pub const BIBLE_VALID_TGT: &str = "bible.valid.tgt";
pub const DOMAIN_TRAIN_SRC: &str = "domain.train.src";
pub const TEST_SRC: &str = "test.src";
pub const TEST_TGT: &str = "test.tgt";
pub const ALIGN_MODEL: &str = "align.model.tsv";
pub const HARVESTED: &str = "harvested.tsv";
pub const DOMAIN_LEXICON: &str = "lexicon.domain.tsv";
pub const LEXICON: &str = "lexicon.tsv";
pub const DALI_SRC: &str = "dali.src";
pub const DALI_TGT: &str = "dali.tgt";
pub const DALI_MANIFEST: &str = "dali.manifest.json";
pub const W4W_HYP: &str = "test.w4w.hyp";
pub const LECA_TRAIN: &str = "leca.train.src";
pub const LECA_VALID: &str = "leca.valid.src";
pub const LECA_TEST: &str = "leca.test.src";
pub const LECA_MANIFEST: &str = "leca.manifest.json";
pub const CPT_CORRUPTED: &str = "cpt.corrupted";
pub const CPT_ORIGINAL: &str = "cpt.original";
pub const CPT_MANIFEST: &str = "cpt.manifest.json";
pub const BATCHES: &str = "batches.json";
pub const REPORT: &str = "report.json";
pub const LENGTH_CURVE: &str = "length_curve.csv";
pub const STATS: &str = "stats.json";

/// Name under which the word-for-word baseline appears in reports.
pub const W4W_SYSTEM: &str = "word-for-word";

/// Domain tag of the in-domain corpus.
const DOMAIN: &str = "domain";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Prepare,
    AlignTrain,
    Harvest,
    BuildDict,
    MergeDict,
    Dali,
    Leca,
    Cpt,
    PlanBatches,
    Evaluate,
    LengthCurve,
    Stats,
}

impl Stage {
    /// Dependency order.
    pub const ALL: [Stage; 12] = [
        Stage::Prepare,
        Stage::AlignTrain,
        Stage::Harvest,
        Stage::BuildDict,
        Stage::MergeDict,
        Stage::Dali,
        Stage::Leca,
        Stage::Cpt,
        Stage::PlanBatches,
        Stage::Evaluate,
        Stage::LengthCurve,
        Stage::Stats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Prepare => "prepare",
            Stage::AlignTrain => "align-train",
            Stage::Harvest => "harvest",
            Stage::BuildDict => "build-dict",
            Stage::MergeDict => "merge-dict",
            Stage::Dali => "dali",
            Stage::Leca => "leca",
            Stage::Cpt => "cpt",
            Stage::PlanBatches => "plan-batches",
            Stage::Evaluate => "evaluate",
            Stage::LengthCurve => "length-curve",
            Stage::Stats => "stats",
        }
    }
}

/// A file a stage reads: the label recorded in the manifest and its location.
#[derive(Debug, Clone)]
pub struct Input {
    pub label: String,
    pub path: PathBuf,
}

/// What a stage reads and the configuration it depends on.
#[derive(Debug, Clone)]
pub struct Plan {
    pub config: Value,
    pub inputs: Vec<Input>,
}

/// What a stage wrote, relative to the output directory.
#[derive(Debug, Clone)]
pub struct Produced {
    pub outputs: Vec<String>,
    pub details: Value,
}

/// Files produced by earlier stages that `stats` summarizes when present.
const STATS_CORPORA: [&str; 8] = [
    BIBLE_TRAIN_SRC,
    BIBLE_TRAIN_TGT,
    DOMAIN_TRAIN_SRC,
    TEST_SRC,
    TEST_TGT,
    DALI_TGT,
    W4W_HYP,
    CPT_CORRUPTED,
];

pub struct StageContext<'a> {
    pub loaded: &'a LoadedConfig,
    pub out_dir: &'a Path,
    /// Extra hypothesis files for `evaluate`, as (system name, path).
    pub systems: &'a [(String, PathBuf)],
}

impl StageContext<'_> {
    fn artifact(&self, name: &str) -> PathBuf {
        self.out_dir.join(name)
    }

    fn artifact_input(&self, name: &str) -> Input {
        Input {
            label: name.to_owned(),
            path: self.artifact(name),
        }
    }

    fn configured_input(&self, configured: &str) -> Input {
        Input {
            label: configured.to_owned(),
            path: self.loaded.resolve(configured),
        }
    }

    fn write_sentences<'s>(
        &self,
        name: &str,
        sentences: impl IntoIterator<Item = &'s Sentence>,
    ) -> Result<()> {
        write_lines(
            &self.artifact(name),
            sentences.into_iter().map(Sentence::text),
        )
    }

    fn write_json<T: Serialize>(&self, name: &str, value: &T) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        let path = self.artifact(name);
        fs::write(&path, text).map_err(|e| Error::io(path, e))
    }

    fn write_text(&self, name: &str, text: &str) -> Result<()> {
        let path = self.artifact(name);
        fs::write(&path, text).map_err(|e| Error::io(path, e))
    }

    fn read_text(&self, name: &str) -> Result<String> {
        let path = self.artifact(name);
        fs::read_to_string(&path).map_err(|e| Error::io(path, e))
    }

    fn lexicon(&self) -> Result<Lexicon> {
        Lexicon::load(&self.artifact(LEXICON))
    }

    fn monolingual(&self, name: &str, lang: &str, domain: &str) -> Result<Corpus> {
        Ok(load_monolingual(&self.artifact(name), lang, domain)?.0)
    }

    /// Lines of an artifact as sentences, blank lines kept in place.
    fn lines(&self, name: &str) -> Result<Vec<Sentence>> {
        Ok(read_lines(&self.artifact(name))?
            .iter()
            .map(|l| Sentence::new(l.as_str()))
            .collect())
    }

    fn bible_train(&self) -> Result<ParallelCorpus> {
        let c = &self.loaded.config;
        load_parallel(
            &self.artifact(BIBLE_TRAIN_SRC),
            &self.artifact(BIBLE_TRAIN_TGT),
            &c.source_lang,
            &c.target_lang,
        )
    }

    pub fn plan(&self, stage: Stage) -> Plan {
        let c = &self.loaded.config;
        let p = &c.paths;
        let a = |names: &[&str]| {
            names
                .iter()
                .map(|n| self.artifact_input(n))
                .collect::<Vec<_>>()
        };
        match stage {
            Stage::Prepare => Plan {
                config: json!({"source_lang": c.source_lang, "target_lang": c.target_lang, "split": c.split}),
                inputs: [
                    &p.bible_source,
                    &p.bible_target,
                    &p.domain_source,
                    &p.domain_target,
                ]
                .into_iter()
                .map(|f| self.configured_input(f))
                .collect(),
            },
            Stage::AlignTrain => Plan {
                config: json!({"align": c.align}),
                inputs: a(&[BIBLE_TRAIN_SRC, BIBLE_TRAIN_TGT]),
            },
            Stage::Harvest => Plan {
                config: json!({"min_pair_count": c.align.min_pair_count}),
                inputs: a(&[ALIGN_MODEL, BIBLE_TRAIN_SRC, BIBLE_TRAIN_TGT]),
            },
            Stage::BuildDict => {
                let mut inputs = a(&[DOMAIN_TRAIN_SRC]);
                if c.lexicon.client.kind == ClientKind::Stub {
                    if let Some(d) = &p.stub_dictionary {
                        inputs.push(self.configured_input(d));
                    }
                }
                if let Some(t) = &p.lemma_table {
                    inputs.push(self.configured_input(t));
                }
                Plan {
                    config: json!({"lexicon": c.lexicon, "source_lang": c.source_lang, "target_lang": c.target_lang}),
                    inputs,
                }
            }
            Stage::MergeDict => Plan {
                config: Value::Null,
                inputs: a(&[DOMAIN_LEXICON, HARVESTED]),
            },
            Stage::Dali => Plan {
                config: json!({"dali": c.dali}),
                inputs: a(&[DOMAIN_TRAIN_SRC, TEST_SRC, LEXICON]),
            },
            Stage::Leca => Plan {
                config: json!({"leca": c.leca}),
                inputs: a(&[BIBLE_TRAIN_SRC, BIBLE_VALID_SRC, TEST_SRC, LEXICON]),
            },
            Stage::Cpt => Plan {
                config: json!({"cpt": c.cpt}),
                inputs: a(&[DOMAIN_TRAIN_SRC, LEXICON]),
            },
            Stage::PlanBatches => Plan {
                config: json!({"batching": c.batching}),
                inputs: a(&[DALI_SRC, BIBLE_TRAIN_SRC]),
            },
            Stage::Evaluate => {
                let mut inputs = a(&[TEST_TGT, W4W_HYP]);
                inputs.extend(self.systems.iter().map(|(name, path)| Input {
                    label: format!("{name}={}", path.display()),
                    path: path.clone(),
                }));
                Plan {
                    config: json!({"chrf": c.evaluation.chrf, "tokenizer": c.tokenizer}),
                    inputs,
                }
            }
            Stage::LengthCurve => Plan {
                config: Value::Null,
                inputs: a(&[REPORT]),
            },
            Stage::Stats => Plan {
                config: json!({"tokenizer": c.tokenizer}),
                inputs: STATS_CORPORA
                    .iter()
                    .filter(|n| self.artifact(n).is_file())
                    .map(|n| self.artifact_input(n))
                    .collect(),
            },
        }
    }

    pub fn execute(&self, stage: Stage) -> Result<Produced> {
        match stage {
            Stage::Prepare => self.prepare(),
            Stage::AlignTrain => self.align_train(),
            Stage::Harvest => self.harvest(),
            Stage::BuildDict => self.build_dict(),
            Stage::MergeDict => self.merge_dict(),
            Stage::Dali => self.dali(),
            Stage::Leca => self.leca(),
            Stage::Cpt => self.cpt(),
            Stage::PlanBatches => self.plan_batches(),
            Stage::Evaluate => self.evaluate(),
            Stage::LengthCurve => self.length_curve(),
            Stage::Stats => self.stats(),
        }
    }

    fn prepare(&self) -> Result<Produced> {
        let c = &self.loaded.config;
        let p = &c.paths;
        let split = &c.split;
        let bible = load_parallel(
            &self.loaded.resolve(&p.bible_source),
            &self.loaded.resolve(&p.bible_target),
            &c.source_lang,
            &c.target_lang,
        )?;
        let (bible_train, bible_valid) = split_validation(&bible, split)?;
        let bible_train = sample_cap(&bible_train, split.train_cap, split.seed)?;

        let domain = load_parallel(
            &self.loaded.resolve(&p.domain_source),
            &self.loaded.resolve(&p.domain_target),
            &c.source_lang,
            &c.target_lang,
        )?;
        let (domain_rest, test) = hold_out_test(&domain, split)?;
        let domain_train = sample_cap(
            &domain_rest.source_side(DOMAIN),
            split.train_cap,
            split.seed,
        )?;

        self.write_sentences(BIBLE_TRAIN_SRC, bible_train.pairs.iter().map(|x| &x.source))?;
        self.write_sentences(BIBLE_TRAIN_TGT, bible_train.pairs.iter().map(|x| &x.target))?;
        self.write_sentences(BIBLE_VALID_SRC, bible_valid.pairs.iter().map(|x| &x.source))?;
        self.write_sentences(BIBLE_VALID_TGT, bible_valid.pairs.iter().map(|x| &x.target))?;
        self.write_sentences(DOMAIN_TRAIN_SRC, &domain_train.sentences)?;
        self.write_sentences(TEST_SRC, test.pairs.iter().map(|x| &x.source))?;
        self.write_sentences(TEST_TGT, test.pairs.iter().map(|x| &x.target))?;

        Ok(Produced {
            outputs: [
                BIBLE_TRAIN_SRC,
                BIBLE_TRAIN_TGT,
                BIBLE_VALID_SRC,
                BIBLE_VALID_TGT,
                DOMAIN_TRAIN_SRC,
                TEST_SRC,
                TEST_TGT,
            ]
            .map(String::from)
            .to_vec(),
            details: json!({
                "bible_pairs": bible.len(),
                "bible_train": bible_train.len(),
                "bible_valid": bible_valid.len(),
                "domain_pairs": domain.len(),
                "domain_train": domain_train.len(),
                "test": test.len(),
            }),
        })
    }

    fn align_train(&self) -> Result<Produced> {
        let corpus = self.bible_train()?;
        let model = train_aligner(&corpus, &self.loaded.config.align)?;
        self.write_text(ALIGN_MODEL, &model.to_tsv())?;
        Ok(Produced {
            outputs: vec![ALIGN_MODEL.into()],
            details: json!({
                "pairs": corpus.len(),
                "table_entries": model.table.len(),
                "log_likelihoods": model.log_likelihoods,
            }),
        })
    }

    fn harvest(&self) -> Result<Produced> {
        let model =
            AlignmentModel::from_tsv(&self.read_text(ALIGN_MODEL)?, &self.artifact(ALIGN_MODEL))?;
        let corpus = self.bible_train()?;
        let pairs = harvest_pairs(&model, &corpus, self.loaded.config.align.min_pair_count)?;
        self.write_text(HARVESTED, &harvested_to_tsv(&pairs))?;
        Ok(Produced {
            outputs: vec![HARVESTED.into()],
            details: json!({"harvested_pairs": pairs.len()}),
        })
    }

    fn build_dict(&self) -> Result<Produced> {
        let c = &self.loaded.config;
        let corpus = self.monolingual(DOMAIN_TRAIN_SRC, &c.source_lang, DOMAIN)?;
        let lemmatizer: Box<dyn Lemmatizer> = match &c.paths.lemma_table {
            Some(t) => Box::new(TableLemmatizer::load(&self.loaded.resolve(t))?),
            None => Box::new(IdentityLemmatizer),
        };
        let frequent = extract_frequent(&corpus, lemmatizer.as_ref(), c.lexicon.n_lemmas);
        let client: Box<dyn TranslationClient> = match c.lexicon.client.kind {
            ClientKind::Stub => {
                let path = c.paths.stub_dictionary.as_deref().ok_or_else(|| {
                    Error::InvalidParameter(
                        "paths.stub_dictionary is required for the stub client".into(),
                    )
                })?;
                Box::new(StubClient::load(&self.loaded.resolve(path))?)
            }
            ClientKind::Remote => {
                let cfg = self.loaded.remote_client().ok_or_else(|| {
                    Error::InvalidParameter(
                        "lexicon.client needs endpoint_url and api_key_env".into(),
                    )
                })?;
                Box::new(RemoteClient::new(&cfg)?)
            }
        };
        let (lexicon, report) =
            build_domain_lexicon(&frequent, client.as_ref(), &c.source_lang, &c.target_lang)?;
        self.write_text(DOMAIN_LEXICON, &lexicon.to_tsv())?;
        Ok(Produced {
            outputs: vec![DOMAIN_LEXICON.into()],
            details: json!({
                "n_lemmas": c.lexicon.n_lemmas,
                "lemmas": frequent.len(),
                "boundary_ties": frequent.len().saturating_sub(c.lexicon.n_lemmas),
                "forms_requested": report.requested,
                "forms_translated": report.translated,
                "skipped": report.skipped,
                "entries": lexicon.len(),
            }),
        })
    }

    fn merge_dict(&self) -> Result<Produced> {
        let domain = Lexicon::load(&self.artifact(DOMAIN_LEXICON))?;
        let harvested = harvested_from_tsv(&self.read_text(HARVESTED)?, &self.artifact(HARVESTED))?;
        let merged = merge_bible(&domain, &harvested);
        self.write_text(LEXICON, &merged.to_tsv())?;
        Ok(Produced {
            outputs: vec![LEXICON.into()],
            details: json!({
                "domain": merged.count(Provenance::Domain),
                "bible": merged.count(Provenance::Bible),
                "total": merged.len(),
            }),
        })
    }

    fn dali(&self) -> Result<Produced> {
        let c = &self.loaded.config;
        let corpus = self.monolingual(DOMAIN_TRAIN_SRC, &c.source_lang, DOMAIN)?;
        let lexicon = self.lexicon()?;
        let policy = c.dali.oov_policy;
        let (kept, empty): (Vec<_>, Vec<_>) = dali_synthesize(&corpus, &lexicon, policy)
            .into_iter()
            .partition(|p| !p.pseudo_target.is_empty());
        self.write_sentences(DALI_SRC, kept.iter().map(|p| &p.source))?;
        self.write_sentences(DALI_TGT, kept.iter().map(|p| &p.pseudo_target))?;

        let test = self.lines(TEST_SRC)?;
        let baseline: Vec<Sentence> = test
            .iter()
            .map(|s| dali_translate(s, &lexicon, policy).pseudo_target)
            .collect();
        self.write_sentences(W4W_HYP, &baseline)?;

        let histogram = replaced_fraction_histogram(&kept, c.dali.histogram_bins);
        let mean_replaced = if kept.is_empty() {
            0.0
        } else {
            kept.iter().map(|p| p.replaced_fraction).sum::<f64>() / kept.len() as f64
        };
        self.write_json(
            DALI_MANIFEST,
            &json!({
                "lexicon_sha256": hash_file(&self.artifact(LEXICON))?,
                "oov_policy": policy,
                "pairs": kept.len(),
                "skipped_empty": empty.len(),
                "mean_replaced_fraction": mean_replaced,
                "replaced_fraction_histogram": histogram,
            }),
        )?;
        Ok(Produced {
            outputs: [DALI_SRC, DALI_TGT, DALI_MANIFEST, W4W_HYP]
                .map(String::from)
                .to_vec(),
            details: json!({"pairs": kept.len(), "skipped_empty": empty.len(), "baseline_lines": baseline.len()}),
        })
    }

    fn leca(&self) -> Result<Produced> {
        let cfg = &self.loaded.config.leca;
        let lexicon = self.lexicon()?;
        let mut counts = serde_json::Map::new();
        for (input, output) in [
            (BIBLE_TRAIN_SRC, LECA_TRAIN),
            (BIBLE_VALID_SRC, LECA_VALID),
            (TEST_SRC, LECA_TEST),
        ] {
            let annotated: Vec<_> = self
                .lines(input)?
                .iter()
                .map(|s| leca_annotate(s, &lexicon, cfg))
                .collect();
            self.write_sentences(output, annotated.iter().map(|a| &a.rendered))?;
            let suggestions: usize = annotated.iter().map(|a| a.suggestions.len()).sum();
            counts.insert(
                output.to_owned(),
                json!({"sentences": annotated.len(), "suggestions": suggestions}),
            );
        }
        self.write_json(
            LECA_MANIFEST,
            &json!({
                "lexicon_sha256": hash_file(&self.artifact(LEXICON))?,
                "config": cfg,
                "files": counts,
            }),
        )?;
        Ok(Produced {
            outputs: [LECA_TRAIN, LECA_VALID, LECA_TEST, LECA_MANIFEST]
                .map(String::from)
                .to_vec(),
            details: Value::Object(counts),
        })
    }

    fn cpt(&self) -> Result<Produced> {
        let c = &self.loaded.config;
        let corpus = self.monolingual(DOMAIN_TRAIN_SRC, &c.source_lang, DOMAIN)?;
        let lexicon = self.lexicon()?;
        let pairs = cpt_corrupt_corpus(&corpus.sentences, &lexicon, &c.cpt)?;
        self.write_sentences(CPT_CORRUPTED, pairs.iter().map(|p| &p.corrupted))?;
        self.write_sentences(CPT_ORIGINAL, pairs.iter().map(|p| &p.original))?;

        let mixed: usize = pairs.iter().map(|p| p.mixed_len).sum();
        let masked: usize = pairs.iter().map(|p| p.masked_token_count).sum();
        let spans: Vec<usize> = pairs
            .iter()
            .flat_map(|p| p.sampled_span_lengths.iter().copied())
            .collect();
        let replaced: usize = pairs.iter().map(|p| p.replaced_terms.len()).sum();
        let exhausted = pairs.iter().filter(|p| p.placement_exhausted).count();
        self.write_json(
            CPT_MANIFEST,
            &json!({
                "spec": c.cpt,
                "lexicon_sha256": hash_file(&self.artifact(LEXICON))?,
                "sentences": pairs.len(),
                "masked_fraction": ratio(masked, mixed),
                "mean_sampled_span": ratio(spans.iter().sum(), spans.len()),
                "replaced_terms": replaced,
                "placement_exhausted": exhausted,
            }),
        )?;
        Ok(Produced {
            outputs: [CPT_CORRUPTED, CPT_ORIGINAL, CPT_MANIFEST]
                .map(String::from)
                .to_vec(),
            details: json!({"sentences": pairs.len(), "masked_tokens": masked}),
        })
    }

    fn plan_batches(&self) -> Result<Produced> {
        let b = &self.loaded.config.batching;
        let pseudo = read_lines(&self.artifact(DALI_SRC))?.len();
        let parallel = read_lines(&self.artifact(BIBLE_TRAIN_SRC))?.len();
        let plan = plan_batches(pseudo, parallel, b.batch_size, b.seed)?;
        self.write_json(BATCHES, &plan)?;
        Ok(Produced {
            outputs: vec![BATCHES.into()],
            details: json!({"batches": plan.batches.len()}),
        })
    }

    fn evaluate(&self) -> Result<Produced> {
        let c = &self.loaded.config;
        let tokenizer = c.tokenizer.build();
        let references = self.lines(TEST_TGT)?;
        let mut hypotheses = vec![(W4W_SYSTEM.to_owned(), self.lines(W4W_HYP)?)];
        for (name, path) in self.systems {
            let lines = read_lines(path)?
                .iter()
                .map(|l| Sentence::new(l.as_str()))
                .collect();
            hypotheses.push((name.clone(), lines));
        }
        let systems = hypotheses
            .iter()
            .map(|(name, hyps)| {
                evaluate_system(
                    name,
                    hyps,
                    &references,
                    &c.evaluation.chrf,
                    tokenizer.as_ref(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let summary: Vec<Value> = systems
            .iter()
            .map(|s| json!({"system": s.name, "bleu": s.corpus_bleu.score, "chrf": s.corpus_chrf.score}))
            .collect();
        let report =
            EvaluationReport::new(systems, &references, c.evaluation.chrf, tokenizer.as_ref());
        self.write_json(REPORT, &report)?;
        Ok(Produced {
            outputs: vec![REPORT.into()],
            details: Value::Array(summary),
        })
    }

    fn length_curve(&self) -> Result<Produced> {
        let report: EvaluationReport = serde_json::from_str(&self.read_text(REPORT)?)?;
        self.write_text(LENGTH_CURVE, &report.length_curve.to_csv())?;
        Ok(Produced {
            outputs: vec![LENGTH_CURVE.into()],
            details: json!({"points": report.length_curve.points.len()}),
        })
    }

    fn stats(&self) -> Result<Produced> {
        let tokenizer = self.loaded.config.tokenizer.build();
        let mut stats = serde_json::Map::new();
        for name in STATS_CORPORA {
            if self.artifact(name).is_file() {
                let sentences = self.lines(name)?;
                stats.insert(
                    name.to_owned(),
                    serde_json::to_value(corpus_stats(&sentences, tokenizer.as_ref()))?,
                );
            }
        }
        self.write_json(
            STATS,
            &json!({"tokenizer": self.loaded.config.tokenizer, "corpora": stats}),
        )?;
        Ok(Produced {
            outputs: vec![STATS.into()],
            details: json!({"corpora": stats.len()}),
        })
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}
