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

//! The `lexaug` command line.
//!
//! Every subcommand reads one JSON configuration document, applies the
//! `--set` and `--seed` overrides, runs one stage (or all of them for
//! `pipeline`) and records the result in `manifest.json` inside the output
//! directory. Exit codes: 0 success, 1 configuration error, 2 data error,
//! 3 internal error.

pub mod config;
pub mod stages;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::manifest::{now_unix, FileDigest, Manifest, StageRecord, TOOL_VERSION};

pub use config::{ConfigError, LoadedConfig, Overrides, PipelineConfig};
pub use stages::{Stage, StageContext};

#[derive(Debug, Parser)]
#[command(
    name = "lexaug",
    version,
    about = "Dictionary-driven data augmentation for low-resource MT"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// JSON configuration file.
    #[arg(long, short, global = true, default_value = "lexaug.json")]
    pub config: PathBuf,
    /// Directory receiving all artifacts and manifest.json.
    #[arg(long, short, global = true, default_value = "lexaug-out")]
    pub output_dir: PathBuf,
    /// Override a config key, e.g. `--set cpt.mask_ratio=0.3`. Repeatable.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Top-level seed; sections without their own seed inherit it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for intra-stage parallelism. Outputs do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Rerun stages even when the manifest says they are up to date.
    #[arg(long, global = true)]
    pub force: bool,
    /// Do not report stage progress on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load, split and cap the corpora; hold out the test set.
    Prepare,
    /// Train the word aligner on the Bible training pairs.
    AlignTrain,
    /// Harvest one-to-one word pairs from Viterbi alignments.
    Harvest,
    /// Translate the most frequent in-domain lemmas into a domain lexicon.
    BuildDict,
    /// Add harvested pairs to the domain lexicon without overwriting.
    MergeDict,
    /// Word-for-word pseudo-parallel data and the test baseline.
    Dali,
    /// Append dictionary suggestions to source sentences.
    Leca,
    /// Mixed-language span-masking corruption pairs.
    Cpt,
    /// Batch plan mixing pseudo and real parallel data half and half.
    PlanBatches,
    /// Score hypotheses against the test references.
    Evaluate(EvaluateArgs),
    /// Sentence scores by reference length, as CSV.
    LengthCurve,
    /// Average words, tokens and characters per line of each corpus.
    Stats,
    /// Every stage in dependency order.
    Pipeline,
}

#[derive(Debug, Args, Default)]
pub struct EvaluateArgs {
    /// Additional system to score, as NAME=PATH. Repeatable.
    #[arg(long = "system", value_name = "NAME=PATH")]
    pub systems: Vec<String>,
}

/// Failure of a CLI invocation, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Data(Error),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Data(e) => write!(f, "data error: {e}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_config_error() {
            CliError::Config(e.to_string())
        } else {
            CliError::Data(e)
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.0)
    }
}

/// Outcome of one stage within a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StageStatus {
    Ran,
    UpToDate,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Result<Vec<(Stage, StageStatus)>, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Config(e.to_string()))?;
    run(&cli)
}

pub fn run(cli: &Cli) -> Result<Vec<(Stage, StageStatus)>, CliError> {
    let g = &cli.global;
    let overrides = Overrides {
        set: g.set.clone(),
        seed: g.seed,
    };
    let loaded = LoadedConfig::load(&g.config, &overrides)?;
    let systems = match &cli.command {
        Command::Evaluate(a) => parse_systems(&a.systems)?,
        _ => Vec::new(),
    };
    let stages: Vec<Stage> = match &cli.command {
        Command::Prepare => vec![Stage::Prepare],
        Command::AlignTrain => vec![Stage::AlignTrain],
        Command::Harvest => vec![Stage::Harvest],
        Command::BuildDict => vec![Stage::BuildDict],
        Command::MergeDict => vec![Stage::MergeDict],
        Command::Dali => vec![Stage::Dali],
        Command::Leca => vec![Stage::Leca],
        Command::Cpt => vec![Stage::Cpt],
        Command::PlanBatches => vec![Stage::PlanBatches],
        Command::Evaluate(_) => vec![Stage::Evaluate],
        Command::LengthCurve => vec![Stage::LengthCurve],
        Command::Stats => vec![Stage::Stats],
        Command::Pipeline => Stage::ALL.to_vec(),
    };
    let runner = Runner {
        loaded: &loaded,
        out_dir: &g.output_dir,
        systems: &systems,
        force: g.force,
        quiet: g.quiet,
    };
    match g.threads {
        None => runner.run(&stages),
        Some(0) => Err(CliError::Config("--threads: must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?
            .install(|| runner.run(&stages)),
    }
}

/// Entry point for the binary: runs, reports errors on stderr and maps
/// them (and panics) to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(_)) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("lexaug: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(3),
    }
}

fn parse_systems(specs: &[String]) -> Result<Vec<(String, PathBuf)>, CliError> {
    specs
        .iter()
        .map(|s| match s.split_once('=') {
            Some((name, path)) if !name.is_empty() && !path.is_empty() => {
                if name == stages::W4W_SYSTEM {
                    return Err(CliError::Config(format!(
                        "--system: name {name:?} is reserved"
                    )));
                }
                Ok((name.to_owned(), PathBuf::from(path)))
            }
            _ => Err(CliError::Config(format!(
                "--system {s:?}: expected NAME=PATH"
            ))),
        })
        .collect()
}

struct Runner<'a> {
    loaded: &'a LoadedConfig,
    out_dir: &'a Path,
    systems: &'a [(String, PathBuf)],
    force: bool,
    quiet: bool,
}

impl Runner<'_> {
    fn report(&self, line: std::fmt::Arguments) {
        if !self.quiet {
            eprintln!("{line}");
        }
    }

    fn run(&self, stages: &[Stage]) -> Result<Vec<(Stage, StageStatus)>, CliError> {
        fs::create_dir_all(self.out_dir).map_err(|e| Error::io(self.out_dir, e))?;
        let effective = self.loaded.effective();
        let mut manifest = match Manifest::load(self.out_dir)? {
            Some(mut m) => {
                m.config = effective;
                m.tool_version = TOOL_VERSION.to_owned();
                m
            }
            None => Manifest::new(effective),
        };
        let ctx = StageContext {
            loaded: self.loaded,
            out_dir: self.out_dir,
            systems: self.systems,
        };
        let mut statuses = Vec::with_capacity(stages.len());
        for &stage in stages {
            let status = self.run_stage(&ctx, &mut manifest, stage);
            // a failed stage leaves the records of the stages before it
            manifest.save(self.out_dir)?;
            statuses.push((stage, status?));
        }
        Ok(statuses)
    }

    fn run_stage(
        &self,
        ctx: &StageContext,
        manifest: &mut Manifest,
        stage: Stage,
    ) -> Result<StageStatus, CliError> {
        let name = stage.name();
        let plan = ctx.plan(stage);
        let inputs = plan
            .inputs
            .iter()
            .map(|i| FileDigest::of(i.label.clone(), &i.path))
            .collect::<Result<Vec<_>, _>>()?;
        if !self.force && manifest.is_current(name, &plan.config, &inputs, self.out_dir) {
            self.report(format_args!("{name}: up to date"));
            return Ok(StageStatus::UpToDate);
        }
        let started_at = now_unix();
        let produced = ctx.execute(stage)?;
        let outputs = produced
            .outputs
            .iter()
            .map(|o| FileDigest::of(o.clone(), &self.out_dir.join(o)))
            .collect::<Result<Vec<_>, _>>()?;
        self.report(format_args!(
            "{name}: wrote {}",
            produced.outputs.join(", ")
        ));
        manifest.record(StageRecord {
            operation: name.to_owned(),
            config: plan.config,
            inputs,
            outputs,
            details: produced.details,
            started_at,
            finished_at: now_unix(),
            tool_version: TOOL_VERSION.to_owned(),
        });
        Ok(StageStatus::Ran)
    }
}
