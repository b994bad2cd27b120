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

//! Translation clients used to build domain dictionaries.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::normalize;
use crate::error::{Error, Result};

/// Per-form outcome: the translation or a reason it is unavailable.
pub type Translations = BTreeMap<String, std::result::Result<String, String>>;

/// The client could not be reached or answered garbage; nothing in the
/// current request can be trusted.
#[derive(Debug, Error)]
#[error("{0}")]
pub struct TransportError(pub String);

pub trait TranslationClient: Send + Sync {
    /// Translates each form, returning an entry for every requested form.
    fn translate(
        &self,
        forms: &[String],
        source_lang: &str,
        target_lang: &str,
    ) -> std::result::Result<Translations, TransportError>;
}

/// Deterministic client backed by a `source<TAB>translation` table.
#[derive(Debug, Clone, Default)]
pub struct StubClient {
    table: HashMap<String, String>,
}

impl StubClient {
    pub fn from_pairs<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        StubClient {
            table: pairs
                .into_iter()
                .map(|(s, t)| (normalize(s), t.to_owned()))
                .collect(),
        }
    }

    pub fn from_tsv(text: &str, path: &Path) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (source, target) = line.split_once('\t').ok_or_else(|| Error::Parse {
                path: path.to_owned(),
                line: i + 1,
                message: "expected source<TAB>translation".into(),
            })?;
            pairs.push((source, target));
        }
        Ok(Self::from_pairs(pairs))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_tsv(&text, path)
    }
}

impl TranslationClient for StubClient {
    fn translate(
        &self,
        forms: &[String],
        _source_lang: &str,
        _target_lang: &str,
    ) -> std::result::Result<Translations, TransportError> {
        Ok(forms
            .iter()
            .map(|f| {
                let outcome = self
                    .table
                    .get(&normalize(f))
                    .cloned()
                    .ok_or_else(|| "no translation in table".to_owned());
                (f.clone(), outcome)
            })
            .collect())
    }
}

/// Settings for [`RemoteClient`]. The API key is read from the environment
/// variable named by `api_key_env`, never from the config file itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RemoteClientConfig {
    pub endpoint_url: String,
    pub api_key_env: String,
}

/// Client for a translation service speaking the Google Cloud Translation v2
/// JSON protocol: `POST endpoint?key=...` with `{"q": [...], "source", "target",
/// "format": "text"}`, answered by `{"data": {"translations": [{"translatedText"}]}}`
/// in request order.
#[derive(Debug)]
pub struct RemoteClient {
    endpoint_url: String,
    api_key: String,
    agent: ureq::Agent,
}

#[derive(Serialize)]
struct Request<'a> {
    q: &'a [String],
    source: &'a str,
    target: &'a str,
    format: &'static str,
}

#[derive(Deserialize)]
struct Response {
    data: ResponseData,
}

#[derive(Deserialize)]
struct ResponseData {
    translations: Vec<ResponseItem>,
}

#[derive(Deserialize)]
struct ResponseItem {
    #[serde(rename = "translatedText")]
    translated_text: Option<String>,
}

impl RemoteClient {
    pub fn new(config: &RemoteClientConfig) -> Result<Self> {
        let api_key = std::env::var(&config.api_key_env).map_err(|_| {
            Error::InvalidParameter(format!(
                "environment variable {} (api_key_env) is not set",
                config.api_key_env
            ))
        })?;
        Ok(Self::with_key(&config.endpoint_url, api_key))
    }

    pub fn with_key(endpoint_url: &str, api_key: String) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs(60)))
            .build()
            .into();
        RemoteClient {
            endpoint_url: endpoint_url.to_owned(),
            api_key,
            agent,
        }
    }
}

/// Pairs the service's answers with the requested forms.
fn pair_response(
    forms: &[String],
    body: &str,
) -> std::result::Result<Translations, TransportError> {
    let response: Response = serde_json::from_str(body)
        .map_err(|e| TransportError(format!("malformed response: {e}")))?;
    let items = response.data.translations;
    if items.len() != forms.len() {
        return Err(TransportError(format!(
            "asked for {} translations, got {}",
            forms.len(),
            items.len()
        )));
    }
    Ok(forms
        .iter()
        .zip(items)
        .map(|(form, item)| {
            let outcome = match item.translated_text {
                Some(t) if !t.trim().is_empty() => Ok(t),
                _ => Err("service returned no translation".to_owned()),
            };
            (form.clone(), outcome)
        })
        .collect())
}

impl TranslationClient for RemoteClient {
    fn translate(
        &self,
        forms: &[String],
        source_lang: &str,
        target_lang: &str,
    ) -> std::result::Result<Translations, TransportError> {
        let request = Request {
            q: forms,
            source: source_lang,
            target: target_lang,
            format: "text",
        };
        let mut response = self
            .agent
            .post(&self.endpoint_url)
            .query("key", &self.api_key)
            .send_json(&request)
            .map_err(|e| TransportError(e.to_string()))?;
        let body = response
            .body_mut()
            .read_to_string()
            .map_err(|e| TransportError(e.to_string()))?;
        pair_response(forms, &body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::{BufRead, BufReader, Read, Write};
    use std::net::TcpListener;

    #[test]
    fn stub_reports_missing_forms() {
        let client = StubClient::from_tsv("Eye\tgħajn\n", Path::new("x")).unwrap();
        let out = client
            .translate(&["eye".into(), "nose".into()], "en", "mt")
            .unwrap();
        assert_eq!(out["eye"], Ok("għajn".to_owned()));
        assert!(out["nose"].is_err());
    }

    #[test]
    fn response_pairing() {
        let forms = vec!["eye".to_owned(), "ear".to_owned()];
        let body =
            r#"{"data":{"translations":[{"translatedText":"għajn"},{"translatedText":""}]}}"#;
        let out = pair_response(&forms, body).unwrap();
        assert_eq!(out["eye"], Ok("għajn".into()));
        assert!(out["ear"].is_err());
        assert!(pair_response(&forms, r#"{"data":{"translations":[]}}"#).is_err());
        assert!(pair_response(&forms, "not json").is_err());
    }

    #[test]
    fn missing_key_env_is_config_error() {
        let config = RemoteClientConfig {
            endpoint_url: "http://127.0.0.1:1/".into(),
            api_key_env: "LEXAUG_TEST_SURELY_UNSET_KEY".into(),
        };
        assert!(RemoteClient::new(&config).unwrap_err().is_config_error());
    }

    #[test]
    fn remote_client_against_local_server() {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let addr = listener.local_addr().unwrap();
        let server = std::thread::spawn(move || {
            let (stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut request_line = String::new();
            reader.read_line(&mut request_line).unwrap();
            let mut length = 0;
            loop {
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                if line == "\r\n" {
                    break;
                }
                if let Some(v) = line.to_ascii_lowercase().strip_prefix("content-length:") {
                    length = v.trim().parse().unwrap();
                }
            }
            let mut body = vec![0; length];
            reader.read_exact(&mut body).unwrap();
            let reply = r#"{"data":{"translations":[{"translatedText":"għajn"}]}}"#;
            let mut stream = stream;
            write!(
                stream,
                "HTTP/1.1 200 OK\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
                reply.len(),
                reply
            )
            .unwrap();
            (request_line, String::from_utf8(body).unwrap())
        });

        let client = RemoteClient::with_key(&format!("http://{addr}/translate"), "secret".into());
        let out = client.translate(&["eye".into()], "en", "mt").unwrap();
        assert_eq!(out["eye"], Ok("għajn".into()));

        let (request_line, body) = server.join().unwrap();
        assert!(
            request_line.starts_with("POST /translate?key=secret"),
            "{request_line}"
        );
        let body: serde_json::Value = serde_json::from_str(&body).unwrap();
        assert_eq!(body["q"][0], "eye");
        assert_eq!(body["target"], "mt");
        assert_eq!(body["format"], "text");
    }
}
