//! Tasks, their context documents, and the plan of subtasks with
//! responsible agents.
//!
//! The plan wire format is one line per subtask:
//! `<index>. [<agent_id>] <name>: <instruction>`. Plan generation
//! prompts a backend with the task, the roster summary, and a fact
//! check list, then validates the parsed reply; violations are fed
//! back into the re-prompt until the plan is clean or attempts run out.
//!
//! ```
//! use alas::task::{parse_plan_wire, render_plan_wire};
//!
//! let wire = "1. [po] Analyze: Review the story for gaps.";
//! let plan = parse_plan_wire(wire).unwrap();
//! assert_eq!(render_plan_wire(&plan), wire);
//! ```

use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backend::{BackendError, CompletionRequest, LlmBackend, Message};
use crate::profile::Roster;

#[derive(Debug, Error)]
pub enum TaskError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("plan generation failed after {attempts} attempt(s); last violations: {}",
            last_violations.join("; "))]
    PlanGenerationFailed {
        attempts: u32,
        last_violations: Vec<String>,
    },
    #[error(transparent)]
    Backend(#[from] BackendError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    Mvp,
    VisionNabc,
    Other(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextDocument {
    pub kind: DocumentKind,
    pub title: String,
    pub body: String,
    /// Drop order under token pressure: higher ranks are dropped first.
    pub elision_rank: u32,
}

/// Needs/Approach/Benefit/Competition value proposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NabcVision {
    pub needs: String,
    pub approach: String,
    pub benefit: String,
    pub competition: String,
}

impl NabcVision {
    pub fn render(&self) -> String {
        format!(
            "Needs: {}\n\nApproach: {}\n\nBenefit: {}\n\nCompetition: {}",
            self.needs, self.approach, self.benefit, self.competition
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Task {
    pub task_id: String,
    pub description: String,
    pub expected_outcome: String,
    pub context_documents: Vec<ContextDocument>,
    pub input_stories: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subtask {
    /// 1-based position in the plan.
    pub index: u32,
    pub name: String,
    pub instruction: String,
    pub responsible_agent_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub subtasks: Vec<Subtask>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanIssue {
    pub severity: Severity,
    pub subtask_index: Option<u32>,
    pub message: String,
}

impl PlanIssue {
    fn error(subtask_index: Option<u32>, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            subtask_index,
            message: message.into(),
        }
    }

    fn warning(message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Warning,
            subtask_index: None,
            message: message.into(),
        }
    }
}

/// True when no error-severity issue is present (warnings are allowed).
pub fn plan_is_valid(issues: &[PlanIssue]) -> bool {
    issues.iter().all(|i| i.severity != Severity::Error)
}

/// Check a plan against its structural invariants and the roster.
pub fn validate_plan(plan: &Plan, roster: &Roster) -> Vec<PlanIssue> {
    let mut issues = Vec::new();
    if plan.subtasks.is_empty() {
        issues.push(PlanIssue::error(None, "plan has no subtasks"));
        return issues;
    }
    for (pos, subtask) in plan.subtasks.iter().enumerate() {
        let expected = (pos + 1) as u32;
        if subtask.index != expected {
            issues.push(PlanIssue::error(
                Some(subtask.index),
                format!(
                    "non-contiguous indices: position {} holds index {}",
                    pos + 1,
                    subtask.index
                ),
            ));
        }
        if subtask.instruction.trim().is_empty() {
            issues.push(PlanIssue::error(
                Some(subtask.index),
                "instruction must be non-empty",
            ));
        }
        if roster.agent(&subtask.responsible_agent_id).is_none() {
            issues.push(PlanIssue::error(
                Some(subtask.index),
                format!(
                    "responsible agent {} is not in the roster",
                    subtask.responsible_agent_id
                ),
            ));
        }
    }
    if plan.subtasks.len() <= roster.len() {
        issues.push(PlanIssue::warning(format!(
            "plan has {} subtask(s) for {} agent(s); follow-up prompts will never fire",
            plan.subtasks.len(),
            roster.len()
        )));
    }
    issues
}

fn wire_line_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^(\d+)\. \[([^\]]+)\] ([^:]+): (.+)$").unwrap())
}

/// Render a plan in the wire format, one subtask per line.
pub fn render_plan_wire(plan: &Plan) -> String {
    plan.subtasks
        .iter()
        .map(|s| {
            format!(
                "{}. [{}] {}: {}",
                s.index, s.responsible_agent_id, s.name, s.instruction
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse the wire format. Every non-empty line must match the grammar.
pub fn parse_plan_wire(text: &str) -> Result<Plan, Vec<String>> {
    let mut subtasks = Vec::new();
    let mut problems = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match wire_line_regex().captures(line) {
            Some(caps) => subtasks.push(Subtask {
                index: caps[1].parse().unwrap_or(0),
                responsible_agent_id: caps[2].to_string(),
                name: caps[3].trim().to_string(),
                instruction: caps[4].trim().to_string(),
            }),
            None => problems.push(format!(
                "line {}: does not match `<index>. [<agent_id>] <name>: <instruction>`",
                lineno + 1
            )),
        }
    }
    if subtasks.is_empty() {
        problems.push("no subtask lines found".to_string());
    }
    if problems.is_empty() {
        Ok(Plan { subtasks })
    } else {
        Err(problems)
    }
}

pub fn load_plan(path: &Path) -> Result<Plan, TaskError> {
    let raw = std::fs::read_to_string(path).map_err(|source| TaskError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&raw).map_err(|e| TaskError::Parse(e.to_string()))
}

pub fn save_plan(plan: &Plan, path: &Path) -> Result<(), TaskError> {
    let body = serde_json::to_string_pretty(plan).expect("plan serializes");
    std::fs::write(path, body).map_err(|source| TaskError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_task(path: &Path) -> Result<Task, TaskError> {
    let raw = std::fs::read_to_string(path).map_err(|source| TaskError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&raw).map_err(|e| TaskError::Parse(e.to_string()))
}

pub fn save_task(task: &Task, path: &Path) -> Result<(), TaskError> {
    let body = serde_json::to_string_pretty(task).expect("task serializes");
    std::fs::write(path, body).map_err(|source| TaskError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Outcome of a successful plan generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedPlan {
    pub plan: Plan,
    /// 1-based attempt on which the plan validated cleanly.
    pub attempts: u32,
}

fn planning_prompt(task: &Task, roster: &Roster, feedback: Option<&[String]>) -> String {
    let mut out = String::new();
    out.push_str("You are planning a task for a team of AI agents.\n\n");
    let _ = writeln!(out, "Task: {}", task.description);
    let _ = writeln!(out, "Expected outcome: {}", task.expected_outcome);
    out.push_str("\nAvailable agents:\n");
    for agent in &roster.agents {
        let _ = writeln!(out, "- {}: {}", agent.agent_id, agent.role_name);
    }
    out.push_str(
        "\nBreak the task into numbered subtasks and assign each to one agent.\n\
         Reply with one subtask per line, exactly in this format:\n\
         <index>. [<agent_id>] <name>: <instruction>\n\n\
         Before answering, verify this fact check list against your reply:\n\
         - indices are contiguous starting at 1\n\
         - every agent_id is one of the listed agents\n\
         - every line matches the format exactly\n",
    );
    if let Some(problems) = feedback {
        out.push_str("\nYour previous reply was rejected for these reasons:\n");
        for p in problems {
            let _ = writeln!(out, "- {}", p);
        }
        out.push_str("Produce a corrected plan.\n");
    }
    out
}

/// Ask a backend for a plan, validate it, and retry with the violations
/// appended until it validates or `max_attempts` is exhausted. A plan
/// with outstanding error-severity issues never escapes this function.
pub fn generate_plan(
    task: &Task,
    roster: &Roster,
    backend: &dyn LlmBackend,
    max_attempts: u32,
) -> Result<GeneratedPlan, TaskError> {
    let mut feedback: Option<Vec<String>> = None;
    let mut last_violations = Vec::new();
    for attempt in 1..=max_attempts.max(1) {
        let prompt = planning_prompt(task, roster, feedback.as_deref());
        let result = backend.complete(&CompletionRequest {
            messages: vec![Message::user(prompt)],
            temperature: 0.0,
            max_tokens: None,
        })?;
        let problems = match parse_plan_wire(&result.text) {
            Ok(plan) => {
                let issues = validate_plan(&plan, roster);
                if plan_is_valid(&issues) {
                    return Ok(GeneratedPlan {
                        plan,
                        attempts: attempt,
                    });
                }
                issues
                    .iter()
                    .filter(|i| i.severity == Severity::Error)
                    .map(|i| i.message.clone())
                    .collect()
            }
            Err(problems) => problems,
        };
        last_violations = problems.clone();
        feedback = Some(problems);
    }
    Err(TaskError::PlanGenerationFailed {
        attempts: max_attempts.max(1),
        last_violations,
    })
}

/// Builtin user-story-improvement task with its six-step PO/RE plan.
pub fn builtin_demo_task() -> (Task, Plan) {
    let vision = NabcVision {
        needs: "Delivery staff need a single mobile workflow for scanning parcels, \
                printing labels, and confirming deliveries in the field."
            .to_string(),
        approach: "A mobile delivery application that pairs with portable printers \
                   and synchronizes route data in real time."
            .to_string(),
        benefit: "Fewer failed deliveries, faster handovers, and a complete digital \
                  trail for every parcel."
            .to_string(),
        competition: "Paper-based routing sheets and legacy handheld scanners without \
                      printer integration."
            .to_string(),
    };
    let task = Task {
        task_id: "demo-story-improvement".to_string(),
        description: "Improve the quality of the user stories in the backlog and ensure \
                      alignment with the organizational standards for requirements \
                      engineering."
            .to_string(),
        expected_outcome: "An improved version of the user story with a clear narrative \
                           and measurable acceptance criteria."
            .to_string(),
        context_documents: vec![
            ContextDocument {
                kind: DocumentKind::Mvp,
                title: "Mobile Delivery MVP".to_string(),
                body: "The minimum viable product covers parcel scanning, a daily route \
                       overview, label printing through a paired mobile printer, and \
                       recipient signature capture on delivery."
                    .to_string(),
                elision_rank: 0,
            },
            ContextDocument {
                kind: DocumentKind::VisionNabc,
                title: "Product Vision (NABC)".to_string(),
                body: vision.render(),
                elision_rank: 1,
            },
        ],
        input_stories: vec!["us-1".to_string()],
    };
    let plan = Plan {
        subtasks: vec![
            Subtask {
                index: 1,
                name: "Present story and context".to_string(),
                instruction: "Present the original user story together with the MVP and \
                              product vision context to the team."
                    .to_string(),
                responsible_agent_id: "po".to_string(),
            },
            Subtask {
                index: 2,
                name: "Analyze quality".to_string(),
                instruction: "Analyze the user story against clarity, completeness, \
                              consistency, and testability criteria and list the defects \
                              found."
                    .to_string(),
                responsible_agent_id: "re".to_string(),
            },
            Subtask {
                index: 3,
                name: "Assess business value".to_string(),
                instruction: "Assess how well the story aligns with the product strategy \
                              and state the business value it should deliver."
                    .to_string(),
                responsible_agent_id: "po".to_string(),
            },
            Subtask {
                index: 4,
                name: "Rewrite story".to_string(),
                instruction: "Rewrite the user story and its acceptance criteria to \
                              resolve the defects found, keeping the canonical narrative \
                              template."
                    .to_string(),
                responsible_agent_id: "re".to_string(),
            },
            Subtask {
                index: 5,
                name: "Review rewrite".to_string(),
                instruction: "Review the rewritten story for business value alignment and \
                              request adjustments if needed."
                    .to_string(),
                responsible_agent_id: "po".to_string(),
            },
            Subtask {
                index: 6,
                name: "Finalize improved story".to_string(),
                instruction: "Finalize the improved user story and emit it between the \
                              output fence markers as a story document."
                    .to_string(),
                responsible_agent_id: "re".to_string(),
            },
        ],
    };
    (task, plan)
}

/// Synthetic demo backlog: the two stories the demo task operates on.
pub fn builtin_demo_stories() -> Vec<crate::story::UserStory> {
    use crate::story::{Provenance, StoryRecord, UserStory};
    let records = vec![
        StoryRecord {
            id: "us-1".to_string(),
            title: "Mobile printer synchronization".to_string(),
            role: "delivery person".to_string(),
            requirement: "to synchronize my mobile device with the mobile printer".to_string(),
            benefit: Some("I can print labels".to_string()),
            description: "Label printing currently requires manual printer setup at the \
                          depot before every tour."
                .to_string(),
            acceptance_criteria: vec![
                "The device can connect to a mobile printer".to_string(),
                "Labels are printed".to_string(),
            ],
            provenance: Provenance::Original,
        },
        StoryRecord {
            id: "us-2".to_string(),
            title: "Delivery confirmation".to_string(),
            role: "delivery person".to_string(),
            requirement: "to capture the recipient's signature on my mobile device".to_string(),
            benefit: Some("the delivery is documented".to_string()),
            description: String::new(),
            acceptance_criteria: vec![
                "A signature can be captured on the device".to_string(),
                "The confirmation is stored".to_string(),
            ],
            provenance: Provenance::Original,
        },
    ];
    records
        .into_iter()
        .map(|r| UserStory::from_record(r).expect("builtin stories are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::ScriptedBackend;
    use crate::profile::builtin_roster;

    #[test]
    fn demo_plan_validates_against_builtin_roster() {
        let (task, plan) = builtin_demo_task();
        let issues = validate_plan(&plan, &builtin_roster());
        assert!(plan_is_valid(&issues));
        assert!(issues.is_empty());
        assert_eq!(plan.subtasks.len(), 6);
        let agents: Vec<&str> = plan
            .subtasks
            .iter()
            .map(|s| s.responsible_agent_id.as_str())
            .collect();
        assert_eq!(agents, ["po", "re", "po", "re", "po", "re"]);
        assert_eq!(task.context_documents.len(), 2);
        assert_eq!(task.context_documents[0].kind, DocumentKind::Mvp);
        assert_eq!(task.context_documents[1].kind, DocumentKind::VisionNabc);
    }

    #[test]
    fn unknown_agent_is_flagged_at_its_subtask() {
        let (_, mut plan) = builtin_demo_task();
        plan.subtasks[2].responsible_agent_id = "qa".to_string();
        let issues = validate_plan(&plan, &builtin_roster());
        assert!(!plan_is_valid(&issues));
        assert!(issues
            .iter()
            .any(|i| i.subtask_index == Some(3) && i.message.contains("qa")));
    }

    #[test]
    fn non_contiguous_indices_are_flagged() {
        let (_, mut plan) = builtin_demo_task();
        plan.subtasks[2].index = 4;
        let issues = validate_plan(&plan, &builtin_roster());
        assert!(issues
            .iter()
            .any(|i| i.message.contains("non-contiguous indices")));
    }

    #[test]
    fn short_plan_is_a_warning_not_an_error() {
        let plan = Plan {
            subtasks: vec![Subtask {
                index: 1,
                name: "only".to_string(),
                instruction: "do it".to_string(),
                responsible_agent_id: "po".to_string(),
            }],
        };
        let issues = validate_plan(&plan, &builtin_roster());
        assert!(plan_is_valid(&issues));
        assert!(issues.iter().any(|i| i.severity == Severity::Warning));
    }

    #[test]
    fn wire_format_round_trips() {
        let (_, plan) = builtin_demo_task();
        let wire = render_plan_wire(&plan);
        let parsed = parse_plan_wire(&wire).unwrap();
        assert_eq!(parsed, plan);
    }

    #[test]
    fn generate_plan_accepts_a_well_formed_reply() {
        let (task, plan) = builtin_demo_task();
        let backend = ScriptedBackend::new(vec![render_plan_wire(&plan)]);
        let generated = generate_plan(&task, &builtin_roster(), &backend, 3).unwrap();
        assert_eq!(generated.plan.subtasks.len(), 6);
        assert_eq!(generated.attempts, 1);
    }

    #[test]
    fn generate_plan_retries_after_malformed_reply() {
        let (task, plan) = builtin_demo_task();
        let backend = ScriptedBackend::new(vec![
            "this is not a plan".to_string(),
            render_plan_wire(&plan),
        ]);
        let generated = generate_plan(&task, &builtin_roster(), &backend, 3).unwrap();
        assert_eq!(generated.attempts, 2);
        // The re-prompt carries the parse problems back to the model.
        let log = backend.request_log();
        assert!(log[1].messages[0]
            .content
            .contains("previous reply was rejected"));
    }

    #[test]
    fn generate_plan_gives_up_after_max_attempts() {
        let (task, _) = builtin_demo_task();
        let backend = ScriptedBackend::new(vec![
            "junk".to_string(),
            "junk".to_string(),
            "junk".to_string(),
        ]);
        let err = generate_plan(&task, &builtin_roster(), &backend, 3).unwrap_err();
        match err {
            TaskError::PlanGenerationFailed {
                attempts,
                last_violations,
            } => {
                assert_eq!(attempts, 3);
                assert!(!last_violations.is_empty());
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
