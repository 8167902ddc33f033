//! Operator entry point: scaffold demo fixtures, validate or generate
//! plans, run tasks (dry or live), and evaluate survey ratings.
//!
//! Exit codes: 0 success, 2 validation/data error, 3 environment or
//! transport error.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use alas::backend::{
    builtin_model_specs, BackendRegistry, HttpBackend, LlmBackend, ModelSpec, ScriptedBackend,
};
use alas::clock::{Clock, FixedClock, SystemClock};
use alas::eval::{compute_report, export_survey, group_by_variant, ingest_ratings, render_table};
use alas::kb::KnowledgeBase;
use alas::orchestrator::{
    builtin_demo_script, dry_run, run_task, RunConfig, RunError, RunMetadata, RunResult,
};
use alas::profile::{builtin_roster, load_roster, save_roster, validate_roster, Roster};
use alas::story::{load_story_corpus, save_story_corpus};
use alas::task::{
    builtin_demo_stories, builtin_demo_task, generate_plan, load_plan, load_task, plan_is_valid,
    render_plan_wire, save_plan, save_task, validate_plan, Plan, Severity, Task, TaskError,
};

#[derive(Parser)]
#[command(name = "alas", version, about = "Role-playing agent runs for user story improvement")]
struct Cli {
    /// Optional JSON config file supplying defaults for the flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scaffold demo task, roster, plan, stories, script, and ratings.
    Init(InitArgs),
    /// Validate or generate a plan.
    Plan {
        #[command(subcommand)]
        action: PlanAction,
    },
    /// Execute a plan (or inspect its prompts with --dry-run).
    Run(RunArgs),
    /// Ingest ratings or print the report table.
    Eval {
        #[command(subcommand)]
        action: EvalAction,
    },
    /// Export the survey form for a story corpus.
    Survey {
        #[command(subcommand)]
        action: SurveyAction,
    },
}

#[derive(Args)]
struct InitArgs {
    /// Directory to scaffold into.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Overwrite files in a non-empty directory.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum PlanAction {
    Validate {
        #[arg(long)]
        plan: Option<PathBuf>,
        #[arg(long)]
        roster: Option<PathBuf>,
    },
    Generate {
        #[arg(long)]
        task: Option<PathBuf>,
        #[arg(long)]
        roster: Option<PathBuf>,
        /// Scripted planner replies (JSON array of strings).
        #[arg(long)]
        script: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_attempts: u32,
        #[command(flatten)]
        backend: BackendArgs,
    },
}

#[derive(Args)]
struct BackendArgs {
    /// Backend selection: auto, scripted, or http.
    #[arg(long)]
    backend: Option<String>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    base_url: Option<String>,
    /// Environment variable holding the API key.
    #[arg(long)]
    api_key_env: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    task: Option<PathBuf>,
    #[arg(long)]
    plan: Option<PathBuf>,
    #[arg(long)]
    roster: Option<PathBuf>,
    /// Scripted backend replies (JSON array of strings).
    #[arg(long)]
    script: Option<PathBuf>,
    #[command(flatten)]
    backend: BackendArgs,
    #[arg(long)]
    temperature: Option<f64>,
    /// Print the prompt sequence without calling any backend.
    #[arg(long)]
    dry_run: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EvalAction {
    Ingest {
        #[arg(long)]
        ratings: Option<PathBuf>,
    },
    Report {
        #[arg(long)]
        ratings: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SurveyAction {
    Export {
        #[arg(long)]
        stories: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Defaults loadable from --config.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    task: Option<PathBuf>,
    roster: Option<PathBuf>,
    plan: Option<PathBuf>,
    stories: Option<PathBuf>,
    script: Option<PathBuf>,
    ratings: Option<PathBuf>,
    backend: Option<String>,
    model: Option<String>,
    base_url: Option<String>,
    api_key_env: Option<String>,
    temperature: Option<f64>,
    out: Option<PathBuf>,
}

enum CliError {
    /// Validation or data problem: exit 2.
    Data(String),
    /// Environment or transport problem: exit 3.
    Env(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Data(_) => 2,
            CliError::Env(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Data(m) | CliError::Env(m) => m,
        }
    }
}

fn data(e: impl std::fmt::Display) -> CliError {
    CliError::Data(e.to_string())
}

fn env_err(e: impl std::fmt::Display) -> CliError {
    CliError::Env(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| env_err(format!("cannot read config {}: {e}", path.display())))?;
            serde_json::from_str(&raw).map_err(data)?
        }
        None => FileConfig::default(),
    };
    match cli.command {
        Command::Init(args) => cmd_init(args),
        Command::Plan { action } => match action {
            PlanAction::Validate { plan, roster } => cmd_plan_validate(
                &require(plan.or_else(|| cfg.plan.clone()), "--plan")?,
                &require(roster.or_else(|| cfg.roster.clone()), "--roster")?,
            ),
            PlanAction::Generate {
                task,
                roster,
                script,
                out,
                max_attempts,
                backend,
            } => cmd_plan_generate(
                &require(task.or_else(|| cfg.task.clone()), "--task")?,
                &require(roster.or_else(|| cfg.roster.clone()), "--roster")?,
                script.or_else(|| cfg.script.clone()),
                &require(out.or_else(|| cfg.out.clone()), "--out")?,
                max_attempts,
                merge_backend(backend, &cfg),
            ),
        },
        Command::Run(args) => {
            let task = require(args.task.or(cfg.task.clone()), "--task")?;
            let plan = require(args.plan.or(cfg.plan.clone()), "--plan")?;
            let roster = require(args.roster.or(cfg.roster.clone()), "--roster")?;
            let out = args.out.or(cfg.out.clone()).unwrap_or_else(|| ".".into());
            let temperature = args.temperature.or(cfg.temperature);
            let script = args.script.or(cfg.script.clone());
            let backend = merge_backend(args.backend, &cfg);
            cmd_run(
                &task,
                &plan,
                &roster,
                script,
                backend,
                temperature,
                args.dry_run,
                &out,
            )
        }
        Command::Eval { action } => match action {
            EvalAction::Ingest { ratings } => {
                let path = require(ratings.or_else(|| cfg.ratings.clone()), "--ratings")?;
                let records = ingest_ratings(&path).map_err(eval_error)?;
                println!("ok: {} rating record(s)", records.len());
                Ok(())
            }
            EvalAction::Report { ratings, out } => {
                let path = require(ratings.or_else(|| cfg.ratings.clone()), "--ratings")?;
                cmd_eval_report(&path, out)
            }
        },
        Command::Survey { action } => match action {
            SurveyAction::Export { stories, out } => {
                let path = require(stories.or_else(|| cfg.stories.clone()), "--stories")?;
                cmd_survey_export(&path, out)
            }
        },
    }
}

fn require(value: Option<PathBuf>, flag: &str) -> Result<PathBuf, CliError> {
    value.ok_or_else(|| CliError::Data(format!("{flag} is required (flag or config file)")))
}

struct BackendChoice {
    backend: Option<String>,
    model: String,
    base_url: String,
    api_key_env: String,
}

fn merge_backend(args: BackendArgs, cfg: &FileConfig) -> BackendChoice {
    BackendChoice {
        backend: args.backend.or_else(|| cfg.backend.clone()),
        model: args
            .model
            .or_else(|| cfg.model.clone())
            .unwrap_or_else(|| "gpt-3.5-turbo-16k".to_string()),
        base_url: args
            .base_url
            .or_else(|| cfg.base_url.clone())
            .unwrap_or_else(|| "https://api.openai.com/v1".to_string()),
        api_key_env: args
            .api_key_env
            .or_else(|| cfg.api_key_env.clone())
            .unwrap_or_else(|| "OPENAI_API_KEY".to_string()),
    }
}

fn eval_error(e: alas::eval::EvalError) -> CliError {
    match e {
        alas::eval::EvalError::Io { .. } => env_err(e),
        other => data(other),
    }
}

fn task_error(e: TaskError) -> CliError {
    match e {
        TaskError::Io { .. } => env_err(e),
        other => data(other),
    }
}

fn cmd_init(args: InitArgs) -> Result<(), CliError> {
    let dir = &args.out;
    if dir.exists() {
        let non_empty = std::fs::read_dir(dir)
            .map_err(env_err)?
            .next()
            .is_some();
        if non_empty && !args.force {
            return Err(CliError::Data(format!(
                "{} is not empty; pass --force to overwrite",
                dir.display()
            )));
        }
    } else {
        std::fs::create_dir_all(dir).map_err(env_err)?;
    }

    let (task, plan) = builtin_demo_task();
    save_task(&task, &dir.join("task.json")).map_err(task_error)?;
    save_plan(&plan, &dir.join("plan.json")).map_err(task_error)?;
    save_roster(&builtin_roster(), &dir.join("roster.json")).map_err(env_err)?;
    save_story_corpus(&builtin_demo_stories(), &dir.join("stories.json")).map_err(env_err)?;

    let script = serde_json::to_string_pretty(&builtin_demo_script()).expect("script serializes");
    std::fs::write(dir.join("script.json"), script).map_err(env_err)?;
    std::fs::write(dir.join("ratings.csv"), demo_ratings_csv()).map_err(env_err)?;

    println!(
        "scaffolded task.json, plan.json, roster.json, stories.json, script.json, ratings.csv \
         in {}",
        dir.display()
    );
    Ok(())
}

/// Demo ratings: 12 respondents. The original us-1 gets overall-only
/// scores summing to 40 (mean 3.33); the improved variant gets full
/// statement scores with S1 summing to 50 (mean 4.17).
fn demo_ratings_csv() -> String {
    let mut out = String::from("respondent_id,variant_id,S1,S2,S3,S4,S5,S6,S7,overall\n");
    let originals = [4, 3, 3, 4, 3, 3, 4, 3, 3, 4, 3, 3];
    let s1 = [5, 5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4];
    for (i, overall) in originals.iter().enumerate() {
        out.push_str(&format!("r{:02},us-1,,,,,,,,{overall}\n", i + 1));
    }
    for (i, s1_score) in s1.iter().enumerate() {
        out.push_str(&format!(
            "r{:02},us-1 (v.1),{s1_score},4,4,4,4,4,4,4\n",
            i + 1
        ));
    }
    out
}

fn load_inputs(
    task_path: &Path,
    plan_path: &Path,
    roster_path: &Path,
) -> Result<(Task, Plan, Roster), CliError> {
    let task = load_task(task_path).map_err(task_error)?;
    let plan = load_plan(plan_path).map_err(task_error)?;
    let roster = load_roster(roster_path).map_err(|e| match e {
        alas::profile::ProfileError::Io { .. } => env_err(e),
        other => data(other),
    })?;
    let roster_problems = validate_roster(&roster);
    if !roster_problems.is_empty() {
        return Err(CliError::Data(format!(
            "roster invalid: {}",
            roster_problems.join("; ")
        )));
    }
    Ok((task, plan, roster))
}

fn cmd_plan_validate(plan_path: &Path, roster_path: &Path) -> Result<(), CliError> {
    let plan = load_plan(plan_path).map_err(task_error)?;
    let roster = load_roster(roster_path).map_err(|e| match e {
        alas::profile::ProfileError::Io { .. } => env_err(e),
        other => data(other),
    })?;
    let issues = validate_plan(&plan, &roster);
    for issue in &issues {
        let tag = match issue.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match issue.subtask_index {
            Some(i) => eprintln!("{tag}: subtask {i}: {}", issue.message),
            None => eprintln!("{tag}: {}", issue.message),
        }
    }
    if plan_is_valid(&issues) {
        println!("plan ok: {} subtask(s)", plan.subtasks.len());
        Ok(())
    } else {
        Err(CliError::Data("plan validation failed".to_string()))
    }
}

fn load_script(path: &Path) -> Result<Vec<String>, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| env_err(format!("cannot read script {}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(data)
}

fn model_spec_for(tag: &str) -> ModelSpec {
    builtin_model_specs()
        .into_iter()
        .find(|s| s.model_tag == tag)
        .unwrap_or(ModelSpec {
            model_tag: tag.to_string(),
            context_window: 16384,
            max_output: 4096,
        })
}

enum ResolvedBackend {
    Scripted(Arc<ScriptedBackend>),
    Http(Arc<HttpBackend>),
    /// No script and no API key: fall back to prompt inspection.
    DryRunFallback,
}

fn resolve_backend(
    choice: &BackendChoice,
    script: Option<&Path>,
) -> Result<ResolvedBackend, CliError> {
    let mode = choice.backend.as_deref().unwrap_or("auto");
    match mode {
        "scripted" => {
            let path = script.ok_or_else(|| {
                CliError::Data("--script is required with --backend scripted".to_string())
            })?;
            Ok(ResolvedBackend::Scripted(Arc::new(ScriptedBackend::new(
                load_script(path)?,
            ))))
        }
        "http" => {
            let key = std::env::var(&choice.api_key_env).map_err(|_| {
                CliError::Env(format!(
                    "environment variable {} is not set",
                    choice.api_key_env
                ))
            })?;
            let backend = HttpBackend::new(
                choice.base_url.clone(),
                choice.model.clone(),
                Some(key),
                Duration::from_secs(120),
            )
            .map_err(env_err)?;
            Ok(ResolvedBackend::Http(Arc::new(backend)))
        }
        "auto" => {
            if script.is_some() {
                resolve_backend(
                    &BackendChoice {
                        backend: Some("scripted".to_string()),
                        model: choice.model.clone(),
                        base_url: choice.base_url.clone(),
                        api_key_env: choice.api_key_env.clone(),
                    },
                    script,
                )
            } else if std::env::var(&choice.api_key_env).is_ok() {
                resolve_backend(
                    &BackendChoice {
                        backend: Some("http".to_string()),
                        model: choice.model.clone(),
                        base_url: choice.base_url.clone(),
                        api_key_env: choice.api_key_env.clone(),
                    },
                    script,
                )
            } else {
                Ok(ResolvedBackend::DryRunFallback)
            }
        }
        other => Err(CliError::Data(format!(
            "unknown backend `{other}` (expected auto, scripted, or http)"
        ))),
    }
}

fn registry_for(roster: &Roster, backend: Arc<dyn LlmBackend>, spec: &ModelSpec) -> BackendRegistry {
    let mut registry = BackendRegistry::new();
    let ids: BTreeSet<&str> = roster.agents.iter().map(|a| a.backend_id.as_str()).collect();
    for id in ids {
        registry.register(id, backend.clone(), spec.clone());
    }
    registry
}

fn cmd_plan_generate(
    task_path: &Path,
    roster_path: &Path,
    script: Option<PathBuf>,
    out: &Path,
    max_attempts: u32,
    choice: BackendChoice,
) -> Result<(), CliError> {
    let task = load_task(task_path).map_err(task_error)?;
    let roster = load_roster(roster_path).map_err(|e| match e {
        alas::profile::ProfileError::Io { .. } => env_err(e),
        other => data(other),
    })?;
    let backend: Arc<dyn LlmBackend> = match resolve_backend(&choice, script.as_deref())? {
        ResolvedBackend::Scripted(b) => b,
        ResolvedBackend::Http(b) => b,
        ResolvedBackend::DryRunFallback => {
            return Err(CliError::Env(format!(
                "plan generation needs a backend: pass --script or set {}",
                choice.api_key_env
            )));
        }
    };
    let generated = generate_plan(&task, &roster, backend.as_ref(), max_attempts).map_err(|e| {
        match e {
            TaskError::Backend(ref b) if b.is_retryable() => env_err(e),
            TaskError::PlanGenerationFailed { .. } => data(e),
            other => task_error(other),
        }
    })?;
    save_plan(&generated.plan, out).map_err(task_error)?;
    println!(
        "plan written to {} ({} subtask(s), attempt {})",
        out.display(),
        generated.plan.subtasks.len(),
        generated.attempts
    );
    println!("{}", render_plan_wire(&generated.plan));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_run(
    task_path: &Path,
    plan_path: &Path,
    roster_path: &Path,
    script: Option<PathBuf>,
    choice: BackendChoice,
    temperature: Option<f64>,
    dry: bool,
    out: &Path,
) -> Result<(), CliError> {
    let (task, plan, roster) = load_inputs(task_path, plan_path, roster_path)?;
    let mut config = RunConfig {
        version_label: "v.1".to_string(),
        ..RunConfig::default()
    };
    if let Some(t) = temperature {
        config.temperature = t;
    }

    let resolved = if dry {
        ResolvedBackend::DryRunFallback
    } else {
        resolve_backend(&choice, script.as_deref())?
    };

    let spec = model_spec_for(&choice.model);
    let (backend, clock): (Arc<dyn LlmBackend>, Box<dyn Clock>) = match resolved {
        ResolvedBackend::Scripted(b) => {
            // Scripted runs are replayable: fixed clock, no backoff waits.
            config.backoff_base = Duration::ZERO;
            (b, Box::new(FixedClock::new(0, 1)))
        }
        ResolvedBackend::Http(b) => (b, Box::new(SystemClock)),
        ResolvedBackend::DryRunFallback => {
            if !dry {
                eprintln!(
                    "note: no script and no API key in {}; showing prompts only",
                    choice.api_key_env
                );
            }
            let prompts = dry_run(&task, &plan, &roster, &config).map_err(run_error)?;
            for prompt in &prompts {
                println!(
                    "--- prompt for subtask {} (agent {}) ---",
                    prompt.subtask_index, prompt.target_agent_id
                );
                println!("{}\n", prompt.rendered_text());
            }
            println!("{} prompt(s)", prompts.len());
            return Ok(());
        }
    };

    std::fs::create_dir_all(out).map_err(env_err)?;
    let registry = registry_for(&roster, backend, &spec);
    let result = match run_task(&task, &plan, &roster, &registry, &config, clock.as_ref()) {
        Ok(result) => result,
        Err(RunError::Backend {
            subtask_index,
            retries,
            source,
            transcript,
        }) => {
            // Preserve what we have before reporting the failure.
            let _ = transcript.export_transcript(&out.join("transcript.jsonl"));
            return Err(CliError::Env(format!(
                "backend failed at subtask {subtask_index} after {retries} retries: {source} \
                 (partial transcript exported)"
            )));
        }
        Err(e) => return Err(run_error(e)),
    };
    write_run_artifacts(&task, &roster, &spec, &config, &result, out)?;
    println!(
        "run complete: {} transcript entries, artifacts in {}",
        result.transcript.len(),
        out.display()
    );
    Ok(())
}

fn run_error(e: RunError) -> CliError {
    match e {
        RunError::Backend { .. } => env_err(e),
        other => data(other),
    }
}

fn write_run_artifacts(
    task: &Task,
    roster: &Roster,
    spec: &ModelSpec,
    config: &RunConfig,
    result: &RunResult,
    out: &Path,
) -> Result<(), CliError> {
    result
        .transcript
        .export_transcript(&out.join("transcript.jsonl"))
        .map_err(env_err)?;
    // Sanity: what we just wrote must load and re-validate.
    KnowledgeBase::load_transcript(&out.join("transcript.jsonl")).map_err(data)?;

    let meta = RunMetadata {
        task_id: task.task_id.clone(),
        model_tags: roster
            .agents
            .iter()
            .map(|a| (a.agent_id.clone(), spec.model_tag.clone()))
            .collect(),
        temperature: config.temperature,
        max_retries: config.max_retries,
        chars_per_token: config.chars_per_token,
        version_label: config.version_label.clone(),
        output_fence: config.output_fence.clone(),
        usage: result.per_subtask_usage.clone(),
        warnings: result.warnings.clone(),
    };
    std::fs::write(
        out.join("run_meta.json"),
        serde_json::to_string_pretty(&meta).expect("metadata serializes"),
    )
    .map_err(env_err)?;
    std::fs::write(out.join("final_output.txt"), &result.final_output).map_err(env_err)?;
    if let Some(story) = &result.improved_story {
        std::fs::write(
            out.join("improved_story.json"),
            serde_json::to_string_pretty(&story.to_record()).expect("story serializes"),
        )
        .map_err(env_err)?;
    }
    for warning in &result.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(())
}

fn cmd_eval_report(ratings: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let records = ingest_ratings(ratings).map_err(eval_error)?;
    let mut reports = Vec::new();
    for (_, group) in group_by_variant(&records) {
        reports.push(compute_report(&group).map_err(eval_error)?);
    }
    let table = render_table(&reports);
    match out {
        Some(path) => std::fs::write(&path, &table).map_err(env_err)?,
        None => print!("{table}"),
    }
    Ok(())
}

fn cmd_survey_export(stories: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let corpus = load_story_corpus(stories).map_err(|e| match e {
        alas::story::StoryError::Io { .. } => env_err(e),
        other => data(other),
    })?;
    let survey = export_survey(&corpus);
    let text = survey.render();
    match out {
        Some(path) => std::fs::write(&path, &text).map_err(env_err)?,
        None => print!("{text}"),
    }
    eprintln!(
        "{} rating question(s), {} open-ended question(s)",
        survey.rating_count(),
        survey.open_ended_count()
    );
    Ok(())
}
