//! Task conduction: execute the plan subtask by subtask, compose
//! prompts, call backends, and record everything in the knowledge base.
//!
//! The first prompt delivered to an agent within a run carries its
//! profile, the task, the context, and the subtask; every later prompt
//! to any agent carries only the subtask and the previous response.
//! The final output is the last agent response, from which the improved
//! story is parsed out of the output fence.

use std::collections::HashSet;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backend::{
    BackendError, BackendRegistry, CompletionRequest, CompletionResult, Message,
};
use crate::clock::Clock;
use crate::kb::{EntryKind, KbError, KnowledgeBase};
use crate::profile::Roster;
use crate::prompt::{
    check_budget, compose_followup, compose_initial, elide_to_fit, Prompt, PromptError,
    SegmentLabel, TokenBudget,
};
use crate::task::{plan_is_valid, validate_plan, Plan, Task};
use crate::story::{parse_story_document, Provenance, StoryError, UserStory};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("plan is invalid: {}", .0.join("; "))]
    InvalidPlan(Vec<String>),
    #[error("agent {0} is not in the roster")]
    UnknownAgent(String),
    #[error("agent {agent_id} references unregistered backend {backend_id}")]
    UnknownBackend { agent_id: String, backend_id: String },
    #[error(transparent)]
    Prompt(#[from] PromptError),
    #[error(transparent)]
    Kb(#[from] KbError),
    #[error("backend failed at subtask {subtask_index} after {retries} retries: {source}")]
    Backend {
        subtask_index: u32,
        retries: u32,
        source: BackendError,
        /// Transcript up to the failure, preserved for export.
        transcript: Box<KnowledgeBase>,
    },
}

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("no fenced story block found in the output")]
    FenceMissing,
    #[error("fenced story does not parse: {0}")]
    Parse(#[from] StoryError),
}

/// Open/close markers wrapping the improved story in the final output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fence {
    pub open: String,
    pub close: String,
}

impl Default for Fence {
    fn default() -> Self {
        Self {
            open: "===STORY BEGIN===".to_string(),
            close: "===STORY END===".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub temperature: f64,
    pub max_retries: u32,
    pub backoff_base: Duration,
    pub output_fence: Fence,
    pub chars_per_token: u32,
    pub version_label: String,
    pub dry_run: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            temperature: 1.0,
            max_retries: 3,
            backoff_base: Duration::from_millis(250),
            output_fence: Fence::default(),
            chars_per_token: 4,
            version_label: "v.1".to_string(),
            dry_run: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtaskUsage {
    pub subtask_index: u32,
    pub agent_id: String,
    pub prompt_tokens_est: u64,
    pub completion_tokens: Option<u32>,
    pub retries: u32,
}

#[derive(Debug)]
pub struct RunResult {
    pub final_output: String,
    pub improved_story: Option<UserStory>,
    pub transcript: KnowledgeBase,
    pub per_subtask_usage: Vec<SubtaskUsage>,
    pub warnings: Vec<String>,
}

/// Config echo and usage written beside the transcript.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunMetadata {
    pub task_id: String,
    pub model_tags: Vec<(String, String)>,
    pub temperature: f64,
    pub max_retries: u32,
    pub chars_per_token: u32,
    pub version_label: String,
    pub output_fence: Fence,
    pub usage: Vec<SubtaskUsage>,
    pub warnings: Vec<String>,
}

fn prompt_messages(prompt: &Prompt) -> Vec<Message> {
    // The profile travels as the system message; everything else is one
    // user message rendered with its headers.
    match prompt.segment(SegmentLabel::Profile) {
        Some(profile) => {
            let rest = Prompt {
                segments: prompt
                    .segments
                    .iter()
                    .filter(|s| s.label != SegmentLabel::Profile)
                    .cloned()
                    .collect(),
                target_agent_id: prompt.target_agent_id.clone(),
                subtask_index: prompt.subtask_index,
            };
            vec![
                Message::system(profile.text.clone()),
                Message::user(rest.rendered_text()),
            ]
        }
        None => vec![Message::user(prompt.rendered_text())],
    }
}

fn plan_error_messages(plan: &Plan, roster: &Roster) -> Option<Vec<String>> {
    let issues = validate_plan(plan, roster);
    if plan_is_valid(&issues) {
        None
    } else {
        Some(
            issues
                .iter()
                .filter(|i| i.severity == crate::task::Severity::Error)
                .map(|i| i.message.clone())
                .collect(),
        )
    }
}

/// Execute the plan against live backends.
pub fn run_task(
    task: &Task,
    plan: &Plan,
    roster: &Roster,
    backends: &BackendRegistry,
    config: &RunConfig,
    clock: &dyn Clock,
) -> Result<RunResult, RunError> {
    if let Some(problems) = plan_error_messages(plan, roster) {
        return Err(RunError::InvalidPlan(problems));
    }
    // Resolve every backend up front so a bad wiring fails before any call.
    for subtask in &plan.subtasks {
        let profile = roster
            .agent(&subtask.responsible_agent_id)
            .ok_or_else(|| RunError::UnknownAgent(subtask.responsible_agent_id.clone()))?;
        if backends.get(&profile.backend_id).is_none() {
            return Err(RunError::UnknownBackend {
                agent_id: profile.agent_id.clone(),
                backend_id: profile.backend_id.clone(),
            });
        }
    }

    let mut kb = KnowledgeBase::init(task, clock.now_millis());
    let mut contacted: HashSet<String> = HashSet::new();
    let mut usage = Vec::new();
    let mut warnings = Vec::new();
    let mut last_model_tag = String::new();

    for subtask in &plan.subtasks {
        let profile = roster.agent(&subtask.responsible_agent_id).unwrap();
        let slot = backends.get(&profile.backend_id).unwrap();
        last_model_tag = slot.spec.model_tag.clone();
        let budget = TokenBudget::new(
            slot.spec.context_window,
            slot.spec.max_output,
            config.chars_per_token,
        );

        let first_contact = !contacted.contains(&profile.agent_id);
        let mut prompt = if first_contact {
            compose_initial(profile, task, subtask)
        } else {
            compose_followup(subtask, kb.latest_response()?)?
        };

        let mut report = check_budget(&prompt, &budget);
        if !report.fits {
            let outcome = elide_to_fit(&prompt, task, &budget)?;
            if !outcome.dropped_titles.is_empty() {
                warnings.push(format!(
                    "subtask {}: dropped context documents to fit the budget: {}",
                    subtask.index,
                    outcome.dropped_titles.join(", ")
                ));
            }
            prompt = outcome.prompt;
            report = check_budget(&prompt, &budget);
        }

        kb.append(
            EntryKind::SubtaskIssued {
                subtask_index: subtask.index,
                agent_id: profile.agent_id.clone(),
            },
            prompt.rendered_text(),
            clock.now_millis(),
        )?;

        let request = CompletionRequest {
            messages: prompt_messages(&prompt),
            temperature: config.temperature,
            max_tokens: Some(slot.spec.max_output),
        };

        let mut retries = 0u32;
        let result: CompletionResult = loop {
            let attempt = slot.backend.complete(&request);
            match attempt {
                Ok(result) if result.text.trim().is_empty() => {
                    // Empty responses are treated as retryable.
                    if retries >= config.max_retries {
                        return Err(RunError::Backend {
                            subtask_index: subtask.index,
                            retries,
                            source: BackendError::Protocol("empty response".to_string()),
                            transcript: Box::new(kb),
                        });
                    }
                }
                Ok(result) => break result,
                Err(e) if e.is_retryable() && retries < config.max_retries => {}
                Err(e) => {
                    return Err(RunError::Backend {
                        subtask_index: subtask.index,
                        retries,
                        source: e,
                        transcript: Box::new(kb),
                    });
                }
            }
            if !config.backoff_base.is_zero() {
                std::thread::sleep(config.backoff_base * 2u32.pow(retries.min(8)));
            }
            retries += 1;
        };

        kb.append(
            EntryKind::AgentResponse {
                subtask_index: subtask.index,
                agent_id: profile.agent_id.clone(),
            },
            result.text.clone(),
            clock.now_millis(),
        )?;
        contacted.insert(profile.agent_id.clone());
        usage.push(SubtaskUsage {
            subtask_index: subtask.index,
            agent_id: profile.agent_id.clone(),
            prompt_tokens_est: report.estimated_tokens,
            completion_tokens: result.completion_tokens,
            retries,
        });
    }

    let final_output = kb.latest_response()?.to_string();
    let improved_story = match extract_improved_story(
        &final_output,
        &config.output_fence,
        &last_model_tag,
        &config.version_label,
    ) {
        Ok((story, mut extract_warnings)) => {
            warnings.append(&mut extract_warnings);
            Some(story)
        }
        Err(e) => {
            warnings.push(format!("no improved story extracted: {e}"));
            None
        }
    };

    Ok(RunResult {
        final_output,
        improved_story,
        transcript: kb,
        per_subtask_usage: usage,
        warnings,
    })
}

/// Locate the fenced story block in the final output and parse it.
/// When several blocks are present the last one wins, with a warning.
pub fn extract_improved_story(
    output: &str,
    fence: &Fence,
    model_tag: &str,
    version_label: &str,
) -> Result<(UserStory, Vec<String>), ExtractError> {
    let mut blocks: Vec<String> = Vec::new();
    let mut current: Option<Vec<&str>> = None;
    for line in output.lines() {
        let trimmed = line.trim();
        if trimmed == fence.open {
            current = Some(Vec::new());
        } else if trimmed == fence.close {
            if let Some(lines) = current.take() {
                blocks.push(lines.join("\n"));
            }
        } else if let Some(lines) = current.as_mut() {
            lines.push(line);
        }
    }
    let mut warnings = Vec::new();
    if blocks.len() > 1 {
        warnings.push(format!(
            "output contains {} fenced blocks; using the last one",
            blocks.len()
        ));
    }
    let block = blocks.pop().ok_or(ExtractError::FenceMissing)?;
    let mut story = parse_story_document(&block)?;
    story.provenance = Provenance::Improved {
        model_tag: model_tag.to_string(),
        version_label: version_label.to_string(),
    };
    Ok((story, warnings))
}

/// The exact prompt sequence `run_task` would issue, computed against a
/// placeholder prior response. No backend is called.
pub fn dry_run(
    task: &Task,
    plan: &Plan,
    roster: &Roster,
    _config: &RunConfig,
) -> Result<Vec<Prompt>, RunError> {
    if plan.subtasks.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(problems) = plan_error_messages(plan, roster) {
        return Err(RunError::InvalidPlan(problems));
    }
    let mut contacted: HashSet<String> = HashSet::new();
    let mut prompts = Vec::new();
    for subtask in &plan.subtasks {
        let profile = roster
            .agent(&subtask.responsible_agent_id)
            .ok_or_else(|| RunError::UnknownAgent(subtask.responsible_agent_id.clone()))?;
        let prompt = if contacted.insert(profile.agent_id.clone()) {
            compose_initial(profile, task, subtask)
        } else {
            compose_followup(subtask, "(prior response placeholder)")?
        };
        prompts.push(prompt);
    }
    Ok(prompts)
}

/// Scripted replies for a full demo run: five conversational turns and
/// a final reply carrying the improved story inside the default fence.
pub fn builtin_demo_script() -> Vec<String> {
    let improved = serde_json::json!({
        "id": "us-1-improved",
        "title": "Mobile printer synchronization",
        "role": "delivery person",
        "requirement": "to pair my mobile device with the mobile printer automatically",
        "benefit": "I can print labels without manual setup",
        "description": "Rewritten to resolve the defects found during analysis.",
        "acceptance_criteria": [
            "Pairing completes within 10 seconds of enabling the printer",
            "A failed pairing shows an error message with a retry option",
            "Only one printer can be paired with a device at a time"
        ],
        "provenance": "original"
    });
    let fence = Fence::default();
    vec![
        "Here is the original story together with the MVP and vision context.".to_string(),
        "Defects found: the benefit is vague and two acceptance criteria are not measurable."
            .to_string(),
        "The story supports the core label-printing flow; its business value is fewer failed \
         deliveries."
            .to_string(),
        "Rewritten draft: narrative tightened, every criterion now has a measurable condition."
            .to_string(),
        "Review passed with one wording adjustment to the benefit clause.".to_string(),
        format!(
            "{}\n{}\n{}",
            fence.open,
            serde_json::to_string_pretty(&improved).expect("story serializes"),
            fence.close
        ),
    ]
}

const INITIAL_HEADERS: [&str; 4] = ["== PROFILE ==", "== TASK ==", "== CONTEXT ==", "== SUBTASK =="];
const FOLLOWUP_HEADERS: [&str; 2] = ["== SUBTASK ==", "== PRIOR RESPONSE =="];

/// Trace checker: verify from a transcript alone that every recorded
/// prompt obeys the two composition formulas (four-segment first
/// contact per agent, two-segment follow-ups).
pub fn verify_prompt_shapes(kb: &KnowledgeBase) -> Result<(), String> {
    let mut contacted: HashSet<String> = HashSet::new();
    for entry in kb.entries() {
        if let EntryKind::SubtaskIssued { agent_id, .. } = &entry.kind {
            let expected: &[&str] = if contacted.insert(agent_id.clone()) {
                &INITIAL_HEADERS
            } else {
                &FOLLOWUP_HEADERS
            };
            let found: Vec<&str> = entry
                .content
                .lines()
                .filter(|l| l.starts_with("== ") && l.ends_with(" =="))
                .collect();
            if found != expected {
                return Err(format!(
                    "entry {}: prompt headers {:?} do not match the expected shape {:?}",
                    entry.seq, found, expected
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::{builtin_model_specs, ScriptStep, ScriptedBackend};
    use crate::clock::FixedClock;
    use crate::profile::builtin_roster;
    use crate::task::builtin_demo_task;
    use std::sync::Arc;

    fn demo_script() -> Vec<String> {
        builtin_demo_script()
    }

    fn registry(backend: Arc<ScriptedBackend>) -> BackendRegistry {
        let mut registry = BackendRegistry::new();
        registry.register("default", backend, builtin_model_specs()[0].clone());
        registry
    }

    fn zero_backoff() -> RunConfig {
        RunConfig {
            backoff_base: Duration::ZERO,
            ..RunConfig::default()
        }
    }

    #[test]
    fn demo_run_produces_a_13_entry_transcript() {
        let (task, plan) = builtin_demo_task();
        let backend = Arc::new(ScriptedBackend::new(demo_script()));
        let result = run_task(
            &task,
            &plan,
            &builtin_roster(),
            &registry(backend.clone()),
            &zero_backoff(),
            &FixedClock::new(0, 1),
        )
        .unwrap();
        assert_eq!(result.transcript.len(), 13);
        assert_eq!(backend.request_log().len(), 6);
        verify_prompt_shapes(&result.transcript).unwrap();
        let story = result.improved_story.expect("fenced story extracted");
        assert!(matches!(story.provenance, Provenance::Improved { .. }));
    }

    #[test]
    fn first_two_prompts_are_initial_rest_are_followups() {
        let (task, plan) = builtin_demo_task();
        let backend = Arc::new(ScriptedBackend::new(demo_script()));
        run_task(
            &task,
            &plan,
            &builtin_roster(),
            &registry(backend.clone()),
            &zero_backoff(),
            &FixedClock::new(0, 1),
        )
        .unwrap();
        let log = backend.request_log();
        for req in &log[..2] {
            assert_eq!(req.messages.len(), 2);
            assert_eq!(req.messages[0].role, "system");
        }
        for req in &log[2..] {
            assert_eq!(req.messages.len(), 1);
            assert!(req.messages[0].content.starts_with("== SUBTASK =="));
            assert!(req.messages[0].content.contains("== PRIOR RESPONSE =="));
        }
    }

    #[test]
    fn single_agent_single_subtask_issues_one_initial_prompt() {
        let (task, mut plan) = builtin_demo_task();
        plan.subtasks.truncate(1);
        let roster = crate::profile::Roster {
            agents: vec![builtin_roster().agents[0].clone()],
        };
        let backend = Arc::new(ScriptedBackend::new(vec!["done".to_string()]));
        let result = run_task(
            &task,
            &plan,
            &roster,
            &registry(backend.clone()),
            &zero_backoff(),
            &FixedClock::new(0, 1),
        )
        .unwrap();
        assert_eq!(result.transcript.len(), 3);
        let log = backend.request_log();
        assert_eq!(log.len(), 1);
        assert_eq!(log[0].messages[0].role, "system");
    }

    #[test]
    fn transient_failures_are_retried_and_counted() {
        let (task, mut plan) = builtin_demo_task();
        plan.subtasks.truncate(1);
        let backend = Arc::new(ScriptedBackend::with_steps(vec![
            ScriptStep::TransportError("flaky".into()),
            ScriptStep::TransportError("flaky".into()),
            ScriptStep::Reply("done".into()),
        ]));
        let result = run_task(
            &task,
            &plan,
            &builtin_roster(),
            &registry(backend),
            &zero_backoff(),
            &FixedClock::new(0, 1),
        )
        .unwrap();
        assert_eq!(result.per_subtask_usage[0].retries, 2);
        assert_eq!(result.final_output, "done");
    }

    #[test]
    fn exhausted_retries_preserve_the_partial_transcript() {
        let (task, plan) = builtin_demo_task();
        let backend = Arc::new(ScriptedBackend::with_steps(vec![
            ScriptStep::Reply("first reply".into()),
            ScriptStep::TransportError("down".into()),
            ScriptStep::TransportError("down".into()),
            ScriptStep::TransportError("down".into()),
            ScriptStep::TransportError("down".into()),
        ]));
        let err = run_task(
            &task,
            &plan,
            &builtin_roster(),
            &registry(backend),
            &zero_backoff(),
            &FixedClock::new(0, 1),
        )
        .unwrap_err();
        match err {
            RunError::Backend {
                subtask_index,
                retries,
                transcript,
                ..
            } => {
                assert_eq!(subtask_index, 2);
                assert_eq!(retries, 3);
                // Task description + subtask 1 pair + dangling subtask 2.
                assert_eq!(transcript.len(), 4);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn extract_takes_the_last_fenced_block_with_a_warning() {
        let fence = Fence::default();
        let first = r#"{"id":"a","title":"t","role":"user","requirement":"x","benefit":null,"description":"","acceptance_criteria":[],"provenance":"original"}"#;
        let second = r#"{"id":"b","title":"t","role":"user","requirement":"y","benefit":null,"description":"","acceptance_criteria":[],"provenance":"original"}"#;
        let output = format!(
            "{o}\n{first}\n{c}\nchatter\n{o}\n{second}\n{c}",
            o = fence.open,
            c = fence.close
        );
        let (story, warnings) = extract_improved_story(&output, &fence, "gpt-test", "v.1").unwrap();
        assert_eq!(story.id, "b");
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn extract_reports_a_missing_fence() {
        let err = extract_improved_story("no fence here", &Fence::default(), "m", "v").unwrap_err();
        assert!(matches!(err, ExtractError::FenceMissing));
    }

    #[test]
    fn dry_run_matches_the_planned_shapes() {
        let (task, plan) = builtin_demo_task();
        let roster = builtin_roster();
        let prompts = dry_run(&task, &plan, &roster, &RunConfig::default()).unwrap();
        assert_eq!(prompts.len(), 6);
        assert_eq!(prompts[0].segments.len(), 4);
        assert_eq!(prompts[1].segments.len(), 4);
        for p in &prompts[2..] {
            assert_eq!(p.segments.len(), 2);
        }
        let again = dry_run(&task, &plan, &roster, &RunConfig::default()).unwrap();
        assert_eq!(prompts, again);
    }

    #[test]
    fn dry_run_of_an_empty_plan_is_empty() {
        let (task, _) = builtin_demo_task();
        let plan = Plan { subtasks: vec![] };
        let prompts = dry_run(&task, &plan, &builtin_roster(), &RunConfig::default()).unwrap();
        assert!(prompts.is_empty());
    }
}
