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

//! Word alignment with IBM Model 2 under a log-linear diagonal prior.
//!
//! For a pair with source length `n` and target length `m`, target position
//! `i` (1-based) aligns to the NULL word with fixed probability `p0` and to
//! source position `j` (1-based) with probability
//!
//! ```text
//! (1 - p0) * exp(-tension * |i/m - j/n|) / Z(i, m, n)
//! ```
//!
//! where `Z` normalizes over `j = 1..n`. Only the lexical table `t(f | e)` is
//! re-estimated by EM; `tension` and `p0` stay fixed, so the corpus
//! log-likelihood never decreases between iterations. With the diagonal
//! disabled the non-NULL mass is spread uniformly (IBM Model 1 with NULL).
//!
//! Source is the high-resource side (dictionary keys), target the
//! low-resource side.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{ParallelCorpus, SentencePair};
use crate::error::{Error, Result};

/// Spelling of the NULL source word in tables and model files.
pub const NULL_WORD: &str = "<null>";

const NULL_ID: u32 = 0;
const RENORM_FLOOR: f64 = 1e-12;
const E_STEP_WINDOW: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DiagonalParams {
    pub tension: f64,
    pub null_prob: f64,
}

impl Default for DiagonalParams {
    fn default() -> Self {
        DiagonalParams {
            tension: 4.0,
            null_prob: 0.08,
        }
    }
}

impl DiagonalParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.tension > 0.0 && self.tension.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "tension must be positive, got {}",
                self.tension
            )));
        }
        if !(self.null_prob > 0.0 && self.null_prob < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "null_prob must lie in (0, 1), got {}",
                self.null_prob
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AlignConfig {
    pub em_iterations: usize,
    pub diagonal: bool,
    pub min_pair_count: usize,
    /// Recorded for manifests. Training itself is deterministic.
    pub seed: u64,
    pub prior: DiagonalParams,
}

impl Default for AlignConfig {
    fn default() -> Self {
        AlignConfig {
            em_iterations: 5,
            diagonal: true,
            min_pair_count: 2,
            seed: 42,
            prior: DiagonalParams::default(),
        }
    }
}

impl AlignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_iterations == 0 {
            return Err(Error::InvalidParameter(
                "em_iterations must be at least 1".into(),
            ));
        }
        if self.min_pair_count == 0 {
            return Err(Error::InvalidParameter(
                "min_pair_count must be at least 1".into(),
            ));
        }
        self.prior.validate()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
struct Vocab {
    words: Vec<String>,
    index: HashMap<String, u32>,
}

impl Vocab {
    fn intern(&mut self, word: &str) -> u32 {
        if let Some(&id) = self.index.get(word) {
            return id;
        }
        let id = self.words.len() as u32;
        self.words.push(word.to_owned());
        self.index.insert(word.to_owned(), id);
        id
    }

    fn get(&self, word: &str) -> Option<u32> {
        self.index.get(word).copied()
    }

    fn len(&self) -> usize {
        self.words.len()
    }
}

/// Sparse lexical translation table `t(target | source)`, including the NULL
/// source word.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TranslationTable {
    sources: Vocab,
    targets: Vocab,
    /// Per source id, `(target id, probability)` sorted by target id.
    rows: Vec<Vec<(u32, f64)>>,
}

impl TranslationTable {
    fn empty() -> Self {
        let mut sources = Vocab::default();
        sources.intern(NULL_WORD);
        TranslationTable {
            sources,
            targets: Vocab::default(),
            rows: vec![Vec::new()],
        }
    }

    fn lookup(&self, source: u32, target: u32) -> f64 {
        let row = &self.rows[source as usize];
        match row.binary_search_by_key(&target, |&(t, _)| t) {
            Ok(k) => row[k].1,
            Err(_) => 0.0,
        }
    }

    /// `t(target | source)`; zero for unseen combinations.
    pub fn prob(&self, source: &str, target: &str) -> f64 {
        match (self.sources.get(source), self.targets.get(target)) {
            (Some(s), Some(t)) => self.lookup(s, t),
            _ => 0.0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Number of non-zero-capacity entries.
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn target_vocab_size(&self) -> usize {
        self.targets.len()
    }

    /// All entries sorted by (source, target) spelling.
    pub fn entries(&self) -> Vec<(&str, &str, f64)> {
        let mut out: Vec<(&str, &str, f64)> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(s, row)| {
                row.iter().map(move |&(t, p)| {
                    (
                        self.sources.words[s].as_str(),
                        self.targets.words[t as usize].as_str(),
                        p,
                    )
                })
            })
            .collect();
        out.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        out
    }

    /// Sum of `t(. | source)`, or `None` for a source without entries.
    pub fn row_sum(&self, source: &str) -> Option<f64> {
        let row = &self.rows[self.sources.get(source)? as usize];
        (!row.is_empty()).then(|| row.iter().map(|&(_, p)| p).sum())
    }

    pub fn source_words(&self) -> impl Iterator<Item = &str> {
        self.sources.words.iter().map(String::as_str)
    }

    /// Most probable target for `source`; ties go to the smaller spelling.
    pub fn best_translation(&self, source: &str) -> Option<(&str, f64)> {
        let row = &self.rows[self.sources.get(source)? as usize];
        row.iter()
            .map(|&(t, p)| (self.targets.words[t as usize].as_str(), p))
            .fold(None, |best: Option<(&str, f64)>, (t, p)| match best {
                Some((bt, bp)) if bp > p || (bp == p && bt < t) => Some((bt, bp)),
                _ => Some((t, p)),
            })
    }
}

/// A trained aligner.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignmentModel {
    pub table: TranslationTable,
    pub prior: DiagonalParams,
    pub diagonal: bool,
    pub iterations: usize,
    /// Corpus log-likelihood measured in the E-step of each iteration.
    pub log_likelihoods: Vec<f64>,
}

/// One link from a target position to a source position, or to NULL.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlignmentLink {
    pub target_index: usize,
    pub source_index: Option<usize>,
}

/// A word pair harvested from Viterbi links.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarvestedPair {
    pub source: String,
    pub target: String,
    pub count: usize,
}

/// Alignment prior for every (target position, source slot) of an `m x n`
/// pair, row-major with `n + 1` slots per target position; slot 0 is NULL.
fn prior_matrix(m: usize, n: usize, prior: &DiagonalParams, diagonal: bool) -> Vec<f64> {
    let p0 = prior.null_prob;
    let mut out = Vec::with_capacity(m * (n + 1));
    for i in 1..=m {
        out.push(p0);
        if diagonal {
            let row: Vec<f64> = (1..=n)
                .map(|j| (-prior.tension * (i as f64 / m as f64 - j as f64 / n as f64).abs()).exp())
                .collect();
            let z: f64 = row.iter().sum();
            out.extend(row.into_iter().map(|w| (1.0 - p0) * w / z));
        } else {
            out.extend(std::iter::repeat_n((1.0 - p0) / n as f64, n));
        }
    }
    out
}

struct Encoded {
    /// Cell ids, row-major `m x (n + 1)`, slot 0 the NULL word.
    cells: Vec<u32>,
    m: usize,
    n: usize,
}

/// Trains the aligner with EM for `config.em_iterations` iterations.
pub fn train_aligner(corpus: &ParallelCorpus, config: &AlignConfig) -> Result<AlignmentModel> {
    config.validate()?;
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let mut table = TranslationTable::empty();
    let mut cell_index: HashMap<(u32, u32), u32> = HashMap::new();
    let mut cell_source: Vec<u32> = Vec::new();
    let mut cell_target: Vec<u32> = Vec::new();
    let mut encoded = Vec::with_capacity(corpus.len());

    for pair in &corpus.pairs {
        let src: Vec<u32> = std::iter::once(NULL_ID)
            .chain(pair.source.tokens().iter().map(|w| table.sources.intern(w)))
            .collect();
        let tgt: Vec<u32> = pair
            .target
            .tokens()
            .iter()
            .map(|w| table.targets.intern(w))
            .collect();
        let mut cells = Vec::with_capacity(tgt.len() * src.len());
        for &f in &tgt {
            for &e in &src {
                let next = cell_source.len() as u32;
                let id = *cell_index.entry((e, f)).or_insert_with(|| {
                    cell_source.push(e);
                    cell_target.push(f);
                    next
                });
                cells.push(id);
            }
        }
        encoded.push(Encoded {
            cells,
            m: tgt.len(),
            n: src.len() - 1,
        });
    }

    // uniform over co-occurring targets
    let mut degree = vec![0usize; table.sources.len()];
    for &e in &cell_source {
        degree[e as usize] += 1;
    }
    let mut probs: Vec<f64> = cell_source
        .iter()
        .map(|&e| 1.0 / degree[e as usize] as f64)
        .collect();

    let mut log_likelihoods = Vec::with_capacity(config.em_iterations);
    for _ in 0..config.em_iterations {
        let mut counts = vec![0.0f64; probs.len()];
        let mut log_likelihood = 0.0;
        for window in encoded.chunks(E_STEP_WINDOW) {
            let posteriors: Vec<(Vec<f64>, f64)> = window
                .par_iter()
                .map(|pair| posterior(pair, &probs, &config.prior, config.diagonal))
                .collect();
            for (pair, (post, ll)) in window.iter().zip(posteriors) {
                for (&cell, &p) in pair.cells.iter().zip(&post) {
                    counts[cell as usize] += p;
                }
                log_likelihood += ll;
            }
        }
        log_likelihoods.push(log_likelihood);

        let mut totals = vec![0.0f64; table.sources.len()];
        for (cell, &c) in counts.iter().enumerate() {
            totals[cell_source[cell] as usize] += c;
        }
        for (cell, &c) in counts.iter().enumerate() {
            probs[cell] = c / totals[cell_source[cell] as usize].max(RENORM_FLOOR);
        }
    }

    let mut rows: Vec<Vec<(u32, f64)>> = vec![Vec::new(); table.sources.len()];
    for (cell, &p) in probs.iter().enumerate() {
        rows[cell_source[cell] as usize].push((cell_target[cell], p));
    }
    for row in &mut rows {
        row.sort_unstable_by_key(|&(t, _)| t);
    }
    table.rows = rows;

    Ok(AlignmentModel {
        table,
        prior: config.prior,
        diagonal: config.diagonal,
        iterations: config.em_iterations,
        log_likelihoods,
    })
}

/// Posterior link probabilities of one pair plus its log-likelihood.
fn posterior(
    pair: &Encoded,
    probs: &[f64],
    prior: &DiagonalParams,
    diagonal: bool,
) -> (Vec<f64>, f64) {
    let slots = pair.n + 1;
    let mut post: Vec<f64> = prior_matrix(pair.m, pair.n, prior, diagonal)
        .into_iter()
        .zip(&pair.cells)
        .map(|(a, &cell)| a * probs[cell as usize])
        .collect();
    let mut ll = 0.0;
    for row in post.chunks_mut(slots) {
        let z: f64 = row.iter().sum::<f64>().max(f64::MIN_POSITIVE);
        ll += z.ln();
        for p in row.iter_mut() {
            *p /= z;
        }
    }
    (post, ll)
}

impl AlignmentModel {
    fn check_trained(&self) -> Result<()> {
        if self.table.is_empty() {
            Err(Error::UntrainedModel)
        } else {
            Ok(())
        }
    }

    /// Per-target-position argmax over `t(f|e_j) * prior(j)`, NULL included.
    /// Ties go to the smallest source index; NULL wins only when strictly
    /// better than every source word. Target words never seen in training
    /// score `p0 / |target vocabulary|` against NULL and zero elsewhere.
    pub fn viterbi_align(&self, pair: &SentencePair) -> Result<Vec<AlignmentLink>> {
        self.check_trained()?;
        if pair.source.is_empty() || pair.target.is_empty() {
            return Err(Error::InvalidParameter(
                "cannot align a pair with an empty side".into(),
            ));
        }
        let table = &self.table;
        let n = pair.source.len();
        let m = pair.target.len();
        let src: Vec<Option<u32>> = pair
            .source
            .tokens()
            .iter()
            .map(|w| table.sources.get(w))
            .collect();
        let prior = prior_matrix(m, n, &self.prior, self.diagonal);
        let uniform = 1.0 / table.targets.len().max(1) as f64;

        let links = pair
            .target
            .tokens()
            .iter()
            .enumerate()
            .map(|(i, word)| {
                let row = &prior[i * (n + 1)..(i + 1) * (n + 1)];
                let f = table.targets.get(word);
                let null_score = row[0]
                    * match f {
                        Some(f) => table.lookup(NULL_ID, f),
                        None => uniform,
                    };
                let mut best: Option<(usize, f64)> = None;
                if let Some(f) = f {
                    for (j, e) in src.iter().enumerate() {
                        let score = e.map_or(0.0, |e| row[j + 1] * table.lookup(e, f));
                        if best.is_none_or(|(_, b)| score > b) {
                            best = Some((j, score));
                        }
                    }
                }
                let source_index = match best {
                    Some((j, score)) if score > 0.0 && score >= null_score => Some(j),
                    _ => None,
                };
                AlignmentLink {
                    target_index: i,
                    source_index,
                }
            })
            .collect();
        Ok(links)
    }

    /// Serializes the model as TSV: a `#` header with the prior followed by
    /// `source<TAB>target<TAB>t(target|source)` lines sorted by spelling.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "#lexaug-align\ttension={}\tnull_prob={}\titerations={}\tdiagonal={}\n",
            self.prior.tension, self.prior.null_prob, self.iterations, self.diagonal
        );
        for (e, f, p) in self.table.entries() {
            let _ = writeln!(out, "{e}\t{f}\t{}", format_prob(p));
        }
        out
    }

    pub fn from_tsv(text: &str, path: &Path) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse {
            path: path.to_owned(),
            line,
            message,
        };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header".into()))?;
        let mut fields = header.split('\t');
        if fields.next() != Some("#lexaug-align") {
            return Err(parse_err(1, "header must start with #lexaug-align".into()));
        }
        let mut prior = DiagonalParams::default();
        let mut iterations = 0;
        let mut diagonal = true;
        for field in fields {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| parse_err(1, format!("malformed header field {field:?}")))?;
            let bad = |_| parse_err(1, format!("bad value for {key}: {value:?}"));
            match key {
                "tension" => {
                    prior.tension = value
                        .parse()
                        .map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?
                }
                "null_prob" => {
                    prior.null_prob = value
                        .parse()
                        .map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?
                }
                "iterations" => {
                    iterations = value
                        .parse()
                        .map_err(|e: std::num::ParseIntError| bad(e.to_string()))?
                }
                "diagonal" => {
                    diagonal = value
                        .parse()
                        .map_err(|e: std::str::ParseBoolError| bad(e.to_string()))?
                }
                _ => return Err(parse_err(1, format!("unknown header field {key:?}"))),
            }
        }
        prior.validate().map_err(|e| parse_err(1, e.to_string()))?;

        let mut table = TranslationTable::empty();
        let mut rows: Vec<Vec<(u32, f64)>> = vec![Vec::new()];
        for (i, line) in lines {
            let parts: Vec<&str> = line.split('\t').collect();
            let [e, f, p] = parts[..] else {
                return Err(parse_err(i + 1, "expected 3 tab-separated fields".into()));
            };
            let p: f64 = p
                .parse()
                .map_err(|_| parse_err(i + 1, format!("bad probability {p:?}")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(parse_err(i + 1, format!("probability {p} outside [0, 1]")));
            }
            let e = table.sources.intern(e);
            let f = table.targets.intern(f);
            if rows.len() <= e as usize {
                rows.resize(e as usize + 1, Vec::new());
            }
            rows[e as usize].push((f, p));
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|&(t, _)| t);
        }
        table.rows = rows;
        Ok(AlignmentModel {
            table,
            prior,
            diagonal,
            iterations,
            log_likelihoods: Vec::new(),
        })
    }
}

fn format_prob(p: f64) -> String {
    if p != 0.0 && p < 1e-4 {
        format!("{p:e}")
    } else {
        format!("{p}")
    }
}

/// Free-function form of [`AlignmentModel::viterbi_align`].
pub fn viterbi_align(model: &AlignmentModel, pair: &SentencePair) -> Result<Vec<AlignmentLink>> {
    model.viterbi_align(pair)
}

/// Counts non-NULL Viterbi links over `corpus`, keeps each source word's most
/// frequent target (ties to the smaller target), drops pairs seen fewer than
/// `min_pair_count` times, and sorts by count descending then spelling.
pub fn harvest_pairs(
    model: &AlignmentModel,
    corpus: &ParallelCorpus,
    min_pair_count: usize,
) -> Result<Vec<HarvestedPair>> {
    model.check_trained()?;
    let links: Vec<Vec<AlignmentLink>> = corpus
        .pairs
        .par_iter()
        .map(|pair| model.viterbi_align(pair))
        .collect::<Result<_>>()?;

    let mut counts: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for (pair, links) in corpus.pairs.iter().zip(&links) {
        for link in links {
            if let Some(j) = link.source_index {
                let key = (
                    pair.source.tokens()[j].as_str(),
                    pair.target.tokens()[link.target_index].as_str(),
                );
                *counts.entry(key).or_default() += 1;
            }
        }
    }

    let mut best: BTreeMap<&str, (&str, usize)> = BTreeMap::new();
    for (&(source, target), &count) in &counts {
        // targets arrive in ascending order; a later one replaces only on a higher count
        match best.get(source) {
            Some(&(_, c)) if c >= count => {}
            _ => {
                best.insert(source, (target, count));
            }
        }
    }

    let mut out: Vec<HarvestedPair> = best
        .into_iter()
        .filter(|&(_, (_, count))| count >= min_pair_count)
        .map(|(source, (target, count))| HarvestedPair {
            source: source.to_owned(),
            target: target.to_owned(),
            count,
        })
        .collect();
    out.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| a.source.cmp(&b.source))
            .then_with(|| a.target.cmp(&b.target))
    });
    Ok(out)
}

/// Harvested pairs as `source<TAB>target<TAB>count` lines.
pub fn harvested_to_tsv(pairs: &[HarvestedPair]) -> String {
    pairs
        .iter()
        .map(|p| format!("{}\t{}\t{}\n", p.source, p.target, p.count))
        .collect()
}

pub fn harvested_from_tsv(text: &str, path: &Path) -> Result<Vec<HarvestedPair>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, line)| {
            let err = |message: String| Error::Parse {
                path: path.to_owned(),
                line: i + 1,
                message,
            };
            let parts: Vec<&str> = line.split('\t').collect();
            let [source, target, count] = parts[..] else {
                return Err(err("expected 3 tab-separated fields".into()));
            };
            Ok(HarvestedPair {
                source: source.to_owned(),
                target: target.to_owned(),
                count: count
                    .parse()
                    .map_err(|_| err(format!("bad count {count:?}")))?,
            })
        })
        .collect()
}
