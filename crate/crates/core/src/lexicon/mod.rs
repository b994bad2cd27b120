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

//! Bilingual dictionaries with one translation per source form.
//!
//! A domain dictionary is built from the most frequent lemmas of in-domain
//! monolingual text, translated form by form through a [`TranslationClient`].
//! Word pairs harvested from a parallel corpus are then added for source forms
//! the domain dictionary lacks; existing entries are never replaced.

mod client;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::align::HarvestedPair;
use crate::corpus::{normalize, Corpus};
use crate::error::{Error, Result};

pub use client::{
    RemoteClient, RemoteClientConfig, StubClient, TranslationClient, Translations, TransportError,
};

/// Where an entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Translated in-domain term.
    Domain,
    /// Harvested from aligned parallel text.
    Bible,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Domain => "domain",
            Provenance::Bible => "bible",
        })
    }
}

impl std::str::FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "domain" => Ok(Provenance::Domain),
            "bible" => Ok(Provenance::Bible),
            other => Err(format!("unknown provenance {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub source_form: String,
    pub target_form: String,
    pub provenance: Provenance,
    pub lemma: String,
}

impl LexiconEntry {
    /// Normalizes both forms; fails if either ends up empty.
    pub fn new(
        source_form: &str,
        target_form: &str,
        provenance: Provenance,
        lemma: &str,
    ) -> Result<Self> {
        let source_form = normalize(source_form);
        let target_form = normalize(target_form);
        if source_form.is_empty() || target_form.is_empty() {
            return Err(Error::InvalidParameter(
                "lexicon entries need non-empty source and target forms".into(),
            ));
        }
        Ok(LexiconEntry {
            source_form,
            target_form,
            provenance,
            lemma: normalize(lemma),
        })
    }
}

/// A dictionary keyed by lowercased source form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, LexiconEntry>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `entry` unless its source form is already present. Returns whether
    /// it was added.
    pub fn insert_new(&mut self, entry: LexiconEntry) -> bool {
        use std::collections::btree_map::Entry;
        match self.entries.entry(entry.source_form.clone()) {
            Entry::Occupied(_) => false,
            Entry::Vacant(slot) => {
                slot.insert(entry);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, source_form: &str) -> Option<&LexiconEntry> {
        self.entries.get(source_form)
    }

    /// Entries sorted by source form.
    pub fn iter(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    pub fn count(&self, provenance: Provenance) -> usize {
        self.entries
            .values()
            .filter(|e| e.provenance == provenance)
            .count()
    }

    /// Translation of `token`, matched after lowercasing.
    pub fn lookup(&self, token: &str) -> Option<&str> {
        match self.entries.get(token) {
            Some(e) => Some(&e.target_form),
            None => self
                .entries
                .get(&normalize(token))
                .map(|e| e.target_form.as_str()),
        }
    }

    /// `source<TAB>target<TAB>provenance<TAB>lemma` lines sorted by source.
    pub fn to_tsv(&self) -> String {
        self.entries
            .values()
            .map(|e| {
                format!(
                    "{}\t{}\t{}\t{}\n",
                    e.source_form, e.target_form, e.provenance, e.lemma
                )
            })
            .collect()
    }

    pub fn from_tsv(text: &str, path: &Path) -> Result<Self> {
        let mut lexicon = Lexicon::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                path: path.to_owned(),
                line: i + 1,
                message,
            };
            let parts: Vec<&str> = line.split('\t').collect();
            let [source, target, provenance, lemma] = parts[..] else {
                return Err(err("expected 4 tab-separated fields".into()));
            };
            let provenance = provenance.parse().map_err(err)?;
            let entry = LexiconEntry::new(source, target, provenance, lemma)
                .map_err(|e| err(e.to_string()))?;
            if !lexicon.insert_new(entry) {
                return Err(err(format!("duplicate source form {source:?}")));
            }
        }
        Ok(lexicon)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_tsv(&text, path)
    }
}

/// Free-function form of [`Lexicon::lookup`].
pub fn lookup<'a>(lexicon: &'a Lexicon, token: &str) -> Option<&'a str> {
    lexicon.lookup(token)
}

/// Maps surface forms to lemmas.
pub trait Lemmatizer: Send + Sync {
    fn lemma(&self, form: &str) -> String;
}

/// Every form is its own lemma.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityLemmatizer;

impl Lemmatizer for IdentityLemmatizer {
    fn lemma(&self, form: &str) -> String {
        form.to_owned()
    }
}

/// Lemma table read from `form<TAB>lemma` lines; unknown forms map to themselves.
#[derive(Debug, Clone, Default)]
pub struct TableLemmatizer {
    table: HashMap<String, String>,
}

impl TableLemmatizer {
    pub fn from_pairs<I, A, B>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        TableLemmatizer {
            table: pairs
                .into_iter()
                .map(|(f, l)| (normalize(f.as_ref()), normalize(l.as_ref())))
                .collect(),
        }
    }

    pub fn from_tsv(text: &str, path: &Path) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (form, lemma) = line.split_once('\t').ok_or_else(|| Error::Parse {
                path: path.to_owned(),
                line: i + 1,
                message: "expected form<TAB>lemma".into(),
            })?;
            pairs.push((form, lemma));
        }
        Ok(Self::from_pairs(pairs))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_tsv(&text, path)
    }
}

impl Lemmatizer for TableLemmatizer {
    fn lemma(&self, form: &str) -> String {
        self.table
            .get(form)
            .cloned()
            .unwrap_or_else(|| form.to_owned())
    }
}

/// A lemma with its observed surface forms (in first-occurrence order) and
/// their summed frequency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequentLemma {
    pub lemma: String,
    pub forms: Vec<String>,
    pub frequency: usize,
}

/// Groups the corpus tokens by lemma and returns the `n_lemmas` most frequent
/// lemmas, ties ordered by lemma spelling. Lemmas tied with the last one
/// at the cut are all kept, so the result may be slightly longer than
/// `n_lemmas`.
pub fn extract_frequent(
    corpus: &Corpus,
    lemmatizer: &dyn Lemmatizer,
    n_lemmas: usize,
) -> Vec<FrequentLemma> {
    let mut lemma_of: HashMap<&str, usize> = HashMap::new();
    let mut groups: Vec<FrequentLemma> = Vec::new();
    let mut by_lemma: HashMap<String, usize> = HashMap::new();
    for token in corpus.sentences.iter().flat_map(|s| s.tokens()) {
        let group = match lemma_of.get(token.as_str()) {
            Some(&g) => g,
            None => {
                let lemma = lemmatizer.lemma(token);
                let g = *by_lemma.entry(lemma.clone()).or_insert_with(|| {
                    groups.push(FrequentLemma {
                        lemma,
                        forms: Vec::new(),
                        frequency: 0,
                    });
                    groups.len() - 1
                });
                groups[g].forms.push(token.clone());
                lemma_of.insert(token, g);
                g
            }
        };
        groups[group].frequency += 1;
    }

    groups.sort_by(|a, b| {
        b.frequency
            .cmp(&a.frequency)
            .then_with(|| a.lemma.cmp(&b.lemma))
    });
    if let Some(cut) = groups.get(n_lemmas.saturating_sub(1)).map(|g| g.frequency) {
        if n_lemmas == 0 {
            groups.clear();
        } else {
            let keep = n_lemmas
                + groups[n_lemmas..]
                    .iter()
                    .take_while(|g| g.frequency == cut)
                    .count();
            groups.truncate(keep);
        }
    }
    groups
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedForm {
    pub form: String,
    pub reason: String,
}

/// Outcome of [`build_domain_lexicon`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub requested: usize,
    pub translated: usize,
    pub skipped: Vec<SkippedForm>,
}

/// Forms sent to the client per request.
pub const CLIENT_BATCH: usize = 128;

/// Translates every surface form of `frequent` through `client` and stores
/// each as its own entry with provenance [`Provenance::Domain`]. Forms the
/// client cannot translate are skipped and listed in the report. A transport
/// failure aborts with [`Error::Transport`] carrying the progress so far.
pub fn build_domain_lexicon(
    frequent: &[FrequentLemma],
    client: &dyn TranslationClient,
    source_lang: &str,
    target_lang: &str,
) -> Result<(Lexicon, BuildReport)> {
    let mut seen = std::collections::HashSet::new();
    let forms: Vec<(&str, &str)> = frequent
        .iter()
        .flat_map(|g| g.forms.iter().map(move |f| (f.as_str(), g.lemma.as_str())))
        .filter(|(f, _)| seen.insert(*f))
        .collect();
    if forms.is_empty() {
        return Err(Error::InvalidParameter("no forms to translate".into()));
    }

    let mut lexicon = Lexicon::new();
    let mut report = BuildReport {
        requested: forms.len(),
        ..BuildReport::default()
    };
    for batch in forms.chunks(CLIENT_BATCH) {
        let request: Vec<String> = batch.iter().map(|(f, _)| (*f).to_owned()).collect();
        let translations = client
            .translate(&request, source_lang, target_lang)
            .map_err(|e| Error::Transport {
                message: e.to_string(),
                translated: report.translated,
                requested: report.requested,
            })?;
        for &(form, lemma) in batch {
            let outcome = translations
                .get(form)
                .cloned()
                .unwrap_or_else(|| Err("missing from client response".into()))
                .and_then(|t| {
                    LexiconEntry::new(form, &t, Provenance::Domain, lemma)
                        .map_err(|_| "empty translation".to_owned())
                });
            match outcome {
                Ok(entry) => {
                    lexicon.insert_new(entry);
                    report.translated += 1;
                }
                Err(reason) => report.skipped.push(SkippedForm {
                    form: form.to_owned(),
                    reason,
                }),
            }
        }
    }
    Ok((lexicon, report))
}

/// Adds harvested pairs whose source form is absent from `domain`, tagged
/// [`Provenance::Bible`]. Existing entries are left untouched. When the same
/// source occurs more than once in `harvested`, the first occurrence wins.
pub fn merge_bible(domain: &Lexicon, harvested: &[HarvestedPair]) -> Lexicon {
    let mut merged = domain.clone();
    for pair in harvested {
        if let Ok(entry) =
            LexiconEntry::new(&pair.source, &pair.target, Provenance::Bible, &pair.source)
        {
            merged.insert_new(entry);
        }
    }
    merged
}
