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

//! End-to-end behaviour of the command line and the artifact formats.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use lexaug::batching::BatchPlan;
use lexaug::cli::{run_from, CliError, Stage, StageStatus};
use lexaug::manifest::Manifest;
use lexaug::metrics::EvaluationReport;
use serde_json::{json, Value};

fn tiny_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/tiny/config.json")
}

fn args(config: &Path, out: &Path, extra: &[&str]) -> Vec<String> {
    let mut v = vec![
        "lexaug".to_owned(),
        "--quiet".into(),
        "--config".into(),
        config.display().to_string(),
        "--output-dir".into(),
        out.display().to_string(),
    ];
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

fn lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

/// Writes a 100-line bible pair, a 100-line domain pair, a stub dictionary
/// and a config holding out 10 test pairs.
fn hundred_line_setup(dir: &Path) -> PathBuf {
    let src: Vec<String> = (0..100)
        .map(|i| format!("Word{} common line {}", i % 7, i))
        .collect();
    let tgt: Vec<String> = (0..100)
        .map(|i| format!("mot{} commun ligne {}", i % 7, i))
        .collect();
    for (name, body) in [
        ("b.en", &src),
        ("b.xx", &tgt),
        ("d.en", &src),
        ("d.xx", &tgt),
    ] {
        fs::write(dir.join(name), body.join("\n") + "\n").unwrap();
    }
    fs::write(dir.join("dict.tsv"), "common\tcommun\nline\tligne\n").unwrap();
    let config = json!({
        "target_lang": "xx",
        "paths": {
            "bible_source": "b.en", "bible_target": "b.xx",
            "domain_source": "d.en", "domain_target": "d.xx",
            "stub_dictionary": "dict.tsv"
        },
        "split": {"test_count": 10},
        "lexicon": {"n_lemmas": 5}
    });
    let path = dir.join("config.json");
    fs::write(&path, serde_json::to_string_pretty(&config).unwrap()).unwrap();
    path
}

#[test]
fn prepare_splits_a_hundred_line_pair() {
    let dir = tempfile::tempdir().unwrap();
    let config = hundred_line_setup(dir.path());
    let out = dir.path().join("out");
    let statuses = run_from(args(&config, &out, &["prepare"])).unwrap();
    assert_eq!(statuses, vec![(Stage::Prepare, StageStatus::Ran)]);

    assert_eq!(lines(&out.join("bible.valid.src")).len(), 8);
    assert_eq!(lines(&out.join("bible.train.src")).len(), 92);
    assert_eq!(lines(&out.join("bible.train.tgt")).len(), 92);
    assert_eq!(lines(&out.join("test.src")).len(), 10);
    assert_eq!(lines(&out.join("domain.train.src")).len(), 90);
    assert!(lines(&out.join("test.src"))
        .iter()
        .all(|l| l == &l.to_lowercase()));

    let manifest = Manifest::load(&out).unwrap().unwrap();
    let stage = manifest.stage("prepare").unwrap();
    assert_eq!(stage.inputs.len(), 4);
    assert_eq!(stage.outputs.len(), 7);
    assert_eq!(stage.config["split"]["seed"], json!(42));
    assert_eq!(manifest.config["split"]["test_count"], json!(10));
}

#[test]
fn rerun_is_a_noop_and_config_changes_rerun() {
    let dir = tempfile::tempdir().unwrap();
    let config = hundred_line_setup(dir.path());
    let out = dir.path().join("out");
    run_from(args(&config, &out, &["prepare"])).unwrap();
    let before = fs::read(out.join("bible.train.src")).unwrap();

    let again = run_from(args(&config, &out, &["prepare"])).unwrap();
    assert_eq!(again, vec![(Stage::Prepare, StageStatus::UpToDate)]);
    assert_eq!(fs::read(out.join("bible.train.src")).unwrap(), before);

    let forced = run_from(args(&config, &out, &["--force", "prepare"])).unwrap();
    assert_eq!(forced[0].1, StageStatus::Ran);
    assert_eq!(fs::read(out.join("bible.train.src")).unwrap(), before);

    let reseeded = run_from(args(&config, &out, &["--seed", "7", "prepare"])).unwrap();
    assert_eq!(reseeded[0].1, StageStatus::Ran);
    let manifest = Manifest::load(&out).unwrap().unwrap();
    assert_eq!(
        manifest.stage("prepare").unwrap().config["split"]["seed"],
        json!(7)
    );

    fs::write(out.join("test.src"), "tampered\n").unwrap();
    let repaired = run_from(args(&config, &out, &["--seed", "7", "prepare"])).unwrap();
    assert_eq!(repaired[0].1, StageStatus::Ran);
}

#[test]
fn set_overrides_reach_the_stage_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    run_from(args(
        &tiny_config(),
        &out,
        &["--set", "cpt.mask_ratio=0.2", "pipeline"],
    ))
    .unwrap();
    let cpt: Value =
        serde_json::from_str(&fs::read_to_string(out.join("cpt.manifest.json")).unwrap()).unwrap();
    assert_eq!(cpt["spec"]["mask_ratio"], json!(0.2));
    let manifest = Manifest::load(&out).unwrap().unwrap();
    assert_eq!(manifest.config["cpt"]["mask_ratio"], json!(0.2));
    assert_eq!(
        manifest.stage("cpt").unwrap().config["cpt"]["mask_ratio"],
        json!(0.2)
    );
}

#[test]
fn pipeline_artifacts_have_the_documented_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let statuses = run_from(args(&tiny_config(), &out, &["pipeline"])).unwrap();
    assert_eq!(
        statuses.iter().map(|s| s.0).collect::<Vec<_>>(),
        Stage::ALL.to_vec()
    );

    let lexicon = lines(&out.join("lexicon.tsv"));
    assert!(lexicon.iter().all(|l| l.split('\t').count() == 4));
    let sources: Vec<&str> = lexicon
        .iter()
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert!(sources.windows(2).all(|w| w[0] < w[1]));
    let provenance = |p: &str| {
        lexicon
            .iter()
            .filter(|l| l.split('\t').nth(2) == Some(p))
            .count()
    };
    assert!(provenance("domain") > 0 && provenance("bible") > 0);
    assert_eq!(provenance("domain") + provenance("bible"), lexicon.len());

    let harvested = lines(&out.join("harvested.tsv"));
    assert!(harvested
        .iter()
        .all(|l| l.split('\t').nth(2).unwrap().parse::<usize>().unwrap() >= 2));

    let model = lines(&out.join("align.model.tsv"));
    assert!(model[0].starts_with("#lexaug-align\t"));

    assert_eq!(
        lines(&out.join("dali.src")).len(),
        lines(&out.join("dali.tgt")).len()
    );
    assert_eq!(
        lines(&out.join("test.w4w.hyp")).len(),
        lines(&out.join("test.tgt")).len()
    );
    let dali: Value =
        serde_json::from_str(&fs::read_to_string(out.join("dali.manifest.json")).unwrap()).unwrap();
    for key in [
        "lexicon_sha256",
        "oov_policy",
        "replaced_fraction_histogram",
    ] {
        assert!(dali.get(key).is_some(), "dali manifest lacks {key}");
    }

    let leca = lines(&out.join("leca.test.src"));
    assert!(leca.iter().any(|l| l.contains(" <sep> ")));

    let corrupted = lines(&out.join("cpt.corrupted"));
    assert_eq!(corrupted.len(), lines(&out.join("cpt.original")).len());
    assert_eq!(
        lines(&out.join("cpt.original")),
        lines(&out.join("domain.train.src"))
    );
    assert!(corrupted.iter().any(|l| l.contains("<mask>")));

    let plan: BatchPlan =
        serde_json::from_str(&fs::read_to_string(out.join("batches.json")).unwrap()).unwrap();
    assert_eq!(plan.header.batch_size, 16);
    assert_eq!(plan.header.pseudo_size, lines(&out.join("dali.src")).len());

    let report: EvaluationReport =
        serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report.systems[0].name, "word-for-word");
    assert_eq!(
        lines(&out.join("length_curve.csv"))[0],
        "ref_len,mean_bleu,mean_chrf,count"
    );

    let stats: Value =
        serde_json::from_str(&fs::read_to_string(out.join("stats.json")).unwrap()).unwrap();
    assert!(stats["corpora"]["test.tgt"]["avg_words"].as_f64().unwrap() > 0.0);

    let manifest = Manifest::load(&out).unwrap().unwrap();
    let build = manifest.stage("build-dict").unwrap();
    assert!(build.details.get("boundary_ties").is_some());
    assert!(!build.details["skipped"].as_array().unwrap().is_empty());
}

#[test]
fn extra_systems_are_scored() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    run_from(args(&tiny_config(), &out, &["pipeline"])).unwrap();
    let oracle = out.join("test.tgt").display().to_string();
    let system = format!("oracle={oracle}");
    run_from(args(
        &tiny_config(),
        &out,
        &["evaluate", "--system", &system],
    ))
    .unwrap();
    let report: EvaluationReport =
        serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    let oracle = report.systems.iter().find(|s| s.name == "oracle").unwrap();
    assert_eq!(oracle.corpus_bleu.score, 100.0);
    assert_eq!(oracle.corpus_chrf.score, 100.0);
}

#[test]
fn failing_stage_leaves_a_partial_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let config = hundred_line_setup(dir.path());
    fs::write(dir.path().join("dict.tsv"), "no tab on this line\n").unwrap();
    let out = dir.path().join("out");
    let err = run_from(args(&config, &out, &["pipeline"])).unwrap_err();
    assert!(matches!(err, CliError::Data(_)), "{err}");
    assert_eq!(err.exit_code(), 2);
    let manifest = Manifest::load(&out).unwrap().unwrap();
    let done: Vec<&str> = manifest
        .stages
        .iter()
        .map(|s| s.operation.as_str())
        .collect();
    assert_eq!(done, vec!["prepare", "align-train", "harvest"]);
}

fn exit_code(config: &Path, out: &Path, extra: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_lexaug"))
        .args(&args(config, out, extra)[1..])
        .output()
        .unwrap()
        .status
        .code()
        .unwrap()
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let config = hundred_line_setup(dir.path());
    let out = dir.path().join("out");
    assert_eq!(exit_code(&config, &out, &["prepare"]), 0);
    assert_eq!(
        exit_code(
            &config,
            &out,
            &["--set", "split.validation_fraction=2", "prepare"]
        ),
        1
    );
    assert_eq!(
        exit_code(
            &config,
            &out,
            &["--set", "paths.bible_source=missing.en", "prepare"]
        ),
        1
    );
    assert_eq!(exit_code(&config, &out, &["--threads", "0", "prepare"]), 1);
    assert_eq!(
        exit_code(&dir.path().join("absent.json"), &out, &["prepare"]),
        1
    );

    fs::write(dir.path().join("b.xx"), "only one line\n").unwrap();
    assert_eq!(exit_code(&config, &out, &["prepare"]), 2);
}

#[test]
fn config_errors_name_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let config = hundred_line_setup(dir.path());
    let out = dir.path().join("out");
    let output = Command::new(env!("CARGO_BIN_EXE_lexaug"))
        .args(&args(&config, &out, &["--set", "leca.separator=", "leca"])[1..])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("leca"), "{stderr}");
}
