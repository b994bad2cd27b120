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

//! Monolingual and parallel corpora: loading, normalization, splitting and
//! seeded sampling.
//!
//! Text is normalized by lowercasing and splitting on Unicode whitespace.
//! No punctuation splitting or other normalization is applied, so dictionary
//! keys and corpus tokens stay directly comparable.

use std::fs;
use std::io::Write;
use std::path::Path;

use rand::seq::index;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng;
use crate::tokenize::Tokenizer;

/// Lowercases `text` and collapses it to single-space separated tokens.
pub fn normalize(text: &str) -> String {
    tokenize_normalized(text).join(" ")
}

fn tokenize_normalized(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split_whitespace()
        .map(str::to_owned)
        .collect()
}

/// A line of text together with its normalized tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sentence {
    raw: String,
    tokens: Vec<String>,
}

impl Sentence {
    pub fn new(raw: impl Into<String>) -> Self {
        let raw = raw.into();
        let tokens = tokenize_normalized(&raw);
        Sentence { raw, tokens }
    }

    /// Builds a sentence from already-normalized tokens. Tokens containing
    /// whitespace are split, empty ones dropped.
    pub fn from_tokens<I, S>(tokens: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let tokens: Vec<String> = tokens
            .into_iter()
            .flat_map(|t| tokenize_normalized(t.as_ref()))
            .collect();
        Sentence {
            raw: tokens.join(" "),
            tokens,
        }
    }

    /// Builds a sentence from tokens kept verbatim, for special symbols such
    /// as separators and mask tokens that must not be lowercased.
    pub(crate) fn from_verbatim_tokens(tokens: Vec<String>) -> Self {
        debug_assert!(tokens
            .iter()
            .all(|t| !t.is_empty() && !t.chars().any(char::is_whitespace)));
        Sentence {
            raw: tokens.join(" "),
            tokens,
        }
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Normalized text: tokens joined by single spaces.
    pub fn text(&self) -> String {
        self.tokens.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub sentences: Vec<Sentence>,
    pub language_tag: String,
    pub domain_tag: String,
}

impl Corpus {
    pub fn new(
        sentences: Vec<Sentence>,
        language_tag: impl Into<String>,
        domain_tag: impl Into<String>,
    ) -> Result<Self> {
        let language_tag = language_tag.into();
        let domain_tag = domain_tag.into();
        if language_tag.is_empty() || domain_tag.is_empty() {
            return Err(Error::InvalidParameter(
                "language and domain tags must be non-empty".into(),
            ));
        }
        Ok(Corpus {
            sentences,
            language_tag,
            domain_tag,
        })
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentencePair {
    pub source: Sentence,
    pub target: Sentence,
}

impl SentencePair {
    pub fn new(source: impl Into<String>, target: impl Into<String>) -> Self {
        SentencePair {
            source: Sentence::new(source),
            target: Sentence::new(target),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelCorpus {
    pub pairs: Vec<SentencePair>,
    pub source_tag: String,
    pub target_tag: String,
}

impl ParallelCorpus {
    pub fn new(
        pairs: Vec<SentencePair>,
        source_tag: impl Into<String>,
        target_tag: impl Into<String>,
    ) -> Self {
        ParallelCorpus {
            pairs,
            source_tag: source_tag.into(),
            target_tag: target_tag.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The source side as a monolingual corpus.
    pub fn source_side(&self, domain_tag: &str) -> Corpus {
        Corpus {
            sentences: self.pairs.iter().map(|p| p.source.clone()).collect(),
            language_tag: self.source_tag.clone(),
            domain_tag: domain_tag.to_owned(),
        }
    }

    pub fn target_side(&self, domain_tag: &str) -> Corpus {
        Corpus {
            sentences: self.pairs.iter().map(|p| p.target.clone()).collect(),
            language_tag: self.target_tag.clone(),
            domain_tag: domain_tag.to_owned(),
        }
    }
}

/// Sizes and seed for validation extraction, test hold-out and capping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SplitSpec {
    pub validation_fraction: f64,
    pub test_count: usize,
    pub train_cap: usize,
    pub seed: u64,
}

impl Default for SplitSpec {
    fn default() -> Self {
        SplitSpec {
            validation_fraction: 0.08,
            test_count: 1500,
            train_cap: 200_000,
            seed: 42,
        }
    }
}

impl SplitSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.validation_fraction > 0.0 && self.validation_fraction < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "validation_fraction must lie in (0, 1), got {}",
                self.validation_fraction
            )));
        }
        if self.train_cap == 0 {
            return Err(Error::InvalidParameter(
                "train_cap must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Number of validation items drawn from a corpus of `n` items.
    pub fn validation_size(&self, n: usize) -> usize {
        (self.validation_fraction * n as f64).round() as usize
    }
}

/// Counts gathered while loading a monolingual file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    pub lines: usize,
    pub blank_lines: usize,
}

/// Reads a file as UTF-8 lines. Accepts LF with or without a trailing newline;
/// a trailing CR on each line is dropped.
pub fn read_lines(path: &Path) -> Result<Vec<String>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    if bytes.is_empty() {
        return Ok(Vec::new());
    }
    let body = bytes.strip_suffix(b"\n").unwrap_or(&bytes);
    body.split(|&b| b == b'\n')
        .enumerate()
        .map(|(i, line)| {
            let line = line.strip_suffix(b"\r").unwrap_or(line);
            String::from_utf8(line.to_vec()).map_err(|_| Error::InvalidUtf8 {
                path: path.to_owned(),
                line: i + 1,
            })
        })
        .collect()
}

/// Writes one line per item with LF endings and a trailing newline.
pub fn write_lines<I, S>(path: &Path, lines: I) -> Result<()>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = Vec::new();
    for line in lines {
        out.extend_from_slice(line.as_ref().as_bytes());
        out.push(b'\n');
    }
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(&out).map_err(|e| Error::io(path, e))
}

/// Loads a monolingual corpus. Blank lines are skipped and counted.
pub fn load_monolingual(
    path: &Path,
    language_tag: &str,
    domain_tag: &str,
) -> Result<(Corpus, LoadReport)> {
    let lines = read_lines(path)?;
    let mut report = LoadReport {
        lines: lines.len(),
        blank_lines: 0,
    };
    let mut sentences = Vec::with_capacity(lines.len());
    for line in lines {
        let sentence = Sentence::new(line);
        if sentence.is_empty() {
            report.blank_lines += 1;
        } else {
            sentences.push(sentence);
        }
    }
    Ok((Corpus::new(sentences, language_tag, domain_tag)?, report))
}

/// Loads a line-aligned parallel corpus. Blank lines on either side are
/// rejected since they would break the alignment.
pub fn load_parallel(
    source_path: &Path,
    target_path: &Path,
    source_tag: &str,
    target_tag: &str,
) -> Result<ParallelCorpus> {
    let source_lines = read_lines(source_path)?;
    let target_lines = read_lines(target_path)?;
    if source_lines.len() != target_lines.len() {
        return Err(Error::LineCountMismatch {
            source_lines: source_lines.len(),
            target_lines: target_lines.len(),
        });
    }
    let mut pairs = Vec::with_capacity(source_lines.len());
    for (i, (src, tgt)) in source_lines.into_iter().zip(target_lines).enumerate() {
        let pair = SentencePair::new(src, tgt);
        if pair.source.is_empty() {
            return Err(Error::BlankLine {
                path: source_path.to_owned(),
                line: i + 1,
            });
        }
        if pair.target.is_empty() {
            return Err(Error::BlankLine {
                path: target_path.to_owned(),
                line: i + 1,
            });
        }
        pairs.push(pair);
    }
    Ok(ParallelCorpus::new(pairs, source_tag, target_tag))
}

/// Collections that can be subset by position.
pub trait Sampleable: Sized {
    fn item_count(&self) -> usize;

    /// Keeps the items at `indices` (strictly increasing) in that order.
    fn select(&self, indices: &[usize]) -> Self;
}

impl Sampleable for Corpus {
    fn item_count(&self) -> usize {
        self.sentences.len()
    }

    fn select(&self, indices: &[usize]) -> Self {
        Corpus {
            sentences: indices.iter().map(|&i| self.sentences[i].clone()).collect(),
            language_tag: self.language_tag.clone(),
            domain_tag: self.domain_tag.clone(),
        }
    }
}

impl Sampleable for ParallelCorpus {
    fn item_count(&self) -> usize {
        self.pairs.len()
    }

    fn select(&self, indices: &[usize]) -> Self {
        ParallelCorpus {
            pairs: indices.iter().map(|&i| self.pairs[i].clone()).collect(),
            source_tag: self.source_tag.clone(),
            target_tag: self.target_tag.clone(),
        }
    }
}

impl<T: Clone> Sampleable for Vec<T> {
    fn item_count(&self) -> usize {
        self.len()
    }

    fn select(&self, indices: &[usize]) -> Self {
        indices.iter().map(|&i| self[i].clone()).collect()
    }
}

/// Draws `k` distinct positions out of `n` uniformly, returned sorted.
pub fn sample_positions(n: usize, k: usize, seed: u64, label: &str) -> Vec<usize> {
    let mut stream = rng::stream(seed, label, 0);
    let mut picked = index::sample(&mut stream, n, k).into_vec();
    picked.sort_unstable();
    picked
}

/// Splits `selected` (sorted) and its complement out of `0..n`.
fn complement(n: usize, selected: &[usize]) -> Vec<usize> {
    let mut rest = Vec::with_capacity(n - selected.len());
    let mut it = selected.iter().peekable();
    for i in 0..n {
        if it.peek() == Some(&&i) {
            it.next();
        } else {
            rest.push(i);
        }
    }
    rest
}

/// Extracts a random validation set of `round(fraction * N)` items.
/// Returns `(train, valid)`, each in original relative order.
pub fn split_validation<C: Sampleable>(corpus: &C, spec: &SplitSpec) -> Result<(C, C)> {
    spec.validate()?;
    let n = corpus.item_count();
    if n == 0 {
        return Err(Error::EmptyCorpus);
    }
    let valid_size = spec.validation_size(n);
    if valid_size >= n {
        return Err(Error::InvalidParameter(format!(
            "validation fraction {} leaves no training data out of {n} items",
            spec.validation_fraction
        )));
    }
    let valid = sample_positions(n, valid_size, spec.seed, "corpus.split_validation");
    let train = complement(n, &valid);
    Ok((corpus.select(&train), corpus.select(&valid)))
}

/// Keeps at most `cap` items, sampled uniformly without replacement.
/// Corpora at or under the cap are returned unchanged.
pub fn sample_cap<C: Sampleable + Clone>(corpus: &C, cap: usize, seed: u64) -> Result<C> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let n = corpus.item_count();
    if n <= cap {
        return Ok(corpus.clone());
    }
    Ok(corpus.select(&sample_positions(n, cap, seed, "corpus.sample_cap")))
}

/// Holds out `test_count` random pairs. Returns `(rest, test)`.
pub fn hold_out_test(
    corpus: &ParallelCorpus,
    spec: &SplitSpec,
) -> Result<(ParallelCorpus, ParallelCorpus)> {
    let n = corpus.len();
    if spec.test_count > 0 && n <= spec.test_count {
        return Err(Error::CorpusTooSmall {
            size: n,
            required: spec.test_count,
        });
    }
    let test = sample_positions(n, spec.test_count, spec.seed, "corpus.hold_out_test");
    let rest = complement(n, &test);
    Ok((corpus.select(&rest), corpus.select(&test)))
}

/// Average lengths over a set of sentences.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CorpusStats {
    pub avg_words: f64,
    pub avg_tokens: f64,
    pub avg_chars: f64,
    pub count: usize,
}

/// Mean whitespace-word, tokenizer-token and character counts of the raw text.
pub fn corpus_stats(sentences: &[Sentence], tokenizer: &dyn Tokenizer) -> CorpusStats {
    if sentences.is_empty() {
        return CorpusStats::default();
    }
    let (mut words, mut tokens, mut chars) = (0usize, 0usize, 0usize);
    for s in sentences {
        words += s.raw().split_whitespace().count();
        tokens += tokenizer.count(s.raw());
        chars += s.raw().chars().count();
    }
    let n = sentences.len() as f64;
    CorpusStats {
        avg_words: words as f64 / n,
        avg_tokens: tokens as f64 / n,
        avg_chars: chars as f64 / n,
        count: sentences.len(),
    }
}
