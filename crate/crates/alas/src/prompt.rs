//! Prompt composition.
//!
//! Two shapes exist. The first prompt ever delivered to an agent is
//! `profile + task + context + subtask`; every later prompt to any
//! agent is `subtask + prior response`. Rendered prompts join the
//! segments with a labeled header line each, so transcripts stay
//! auditable and byte-exact.
//!
//! ```
//! use alas::prompt::{check_budget, Prompt, Segment, SegmentLabel, TokenBudget};
//!
//! let budget = TokenBudget::new(16384, 4096, 4);
//! let prompt = Prompt {
//!     segments: vec![Segment {
//!         label: SegmentLabel::SubtaskInstruction,
//!         text: "x".repeat(40_000),
//!     }],
//!     target_agent_id: "po".into(),
//!     subtask_index: 1,
//! };
//! // 40,000 chars / 4 = 10,000 tokens, under the 12,288 available.
//! assert!(check_budget(&prompt, &budget).fits);
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profile::AgentProfile;
use crate::task::{ContextDocument, Subtask, Task};

#[derive(Debug, Error)]
pub enum PromptError {
    #[error("prior response must be non-empty")]
    EmptyPriorResponse,
    #[error("prompt cannot fit the token budget: {estimated} tokens estimated, {available} available")]
    BudgetUnsatisfiable { estimated: u64, available: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SegmentLabel {
    Profile,
    TaskDescription,
    Context,
    SubtaskInstruction,
    PriorResponse,
}

impl SegmentLabel {
    pub fn header(self) -> &'static str {
        match self {
            SegmentLabel::Profile => "== PROFILE ==",
            SegmentLabel::TaskDescription => "== TASK ==",
            SegmentLabel::Context => "== CONTEXT ==",
            SegmentLabel::SubtaskInstruction => "== SUBTASK ==",
            SegmentLabel::PriorResponse => "== PRIOR RESPONSE ==",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub label: SegmentLabel,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prompt {
    pub segments: Vec<Segment>,
    pub target_agent_id: String,
    pub subtask_index: u32,
}

impl Prompt {
    pub fn segment(&self, label: SegmentLabel) -> Option<&Segment> {
        self.segments.iter().find(|s| s.label == label)
    }

    /// Full prompt text: each segment under its header line, segments
    /// separated by a blank line. Contains the segment texts verbatim.
    pub fn rendered_text(&self) -> String {
        self.segments
            .iter()
            .map(|s| format!("{}\n{}", s.label.header(), s.text))
            .collect::<Vec<_>>()
            .join("\n\n")
    }
}

/// Sentinel used when a task carries no context documents.
pub const EMPTY_CONTEXT_SENTINEL: &str = "(no additional context)";

fn render_context(docs: &[&ContextDocument]) -> String {
    if docs.is_empty() {
        return EMPTY_CONTEXT_SENTINEL.to_string();
    }
    let mut ordered: Vec<&ContextDocument> = docs.to_vec();
    ordered.sort_by_key(|d| d.elision_rank);
    ordered
        .iter()
        .map(|d| format!("# {}\n{}", d.title, d.body))
        .collect::<Vec<_>>()
        .join("\n\n")
}

/// First-contact prompt: profile + task + context + subtask, in that
/// order. Context documents are concatenated in ascending elision rank.
pub fn compose_initial(profile: &AgentProfile, task: &Task, subtask: &Subtask) -> Prompt {
    debug_assert_eq!(subtask.responsible_agent_id, profile.agent_id);
    let docs: Vec<&ContextDocument> = task.context_documents.iter().collect();
    Prompt {
        segments: vec![
            Segment {
                label: SegmentLabel::Profile,
                text: crate::profile::render_profile(profile),
            },
            Segment {
                label: SegmentLabel::TaskDescription,
                text: task.description.clone(),
            },
            Segment {
                label: SegmentLabel::Context,
                text: render_context(&docs),
            },
            Segment {
                label: SegmentLabel::SubtaskInstruction,
                text: subtask.instruction.clone(),
            },
        ],
        target_agent_id: subtask.responsible_agent_id.clone(),
        subtask_index: subtask.index,
    }
}

/// Follow-up prompt: subtask + prior response, nothing else.
pub fn compose_followup(subtask: &Subtask, prior_response: &str) -> Result<Prompt, PromptError> {
    if prior_response.trim().is_empty() {
        return Err(PromptError::EmptyPriorResponse);
    }
    Ok(Prompt {
        segments: vec![
            Segment {
                label: SegmentLabel::SubtaskInstruction,
                text: subtask.instruction.clone(),
            },
            Segment {
                label: SegmentLabel::PriorResponse,
                text: prior_response.to_string(),
            },
        ],
        target_agent_id: subtask.responsible_agent_id.clone(),
        subtask_index: subtask.index,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenBudget {
    pub context_window: u32,
    pub max_output: u32,
    /// Characters-per-token divisor for the estimate.
    pub chars_per_token: u32,
}

impl TokenBudget {
    pub fn new(context_window: u32, max_output: u32, chars_per_token: u32) -> Self {
        assert!(context_window > max_output && max_output > 0);
        assert!(chars_per_token >= 1);
        Self {
            context_window,
            max_output,
            chars_per_token,
        }
    }

    /// Tokens the prompt may occupy: window minus the reserved output.
    pub fn available(&self) -> u64 {
        (self.context_window - self.max_output) as u64
    }

    pub fn estimate_tokens(&self, chars: u64) -> u64 {
        chars.div_ceil(self.chars_per_token as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub per_segment: Vec<(SegmentLabel, u64)>,
    pub estimated_tokens: u64,
    pub available: u64,
    pub fits: bool,
}

/// Estimate prompt size as ceil(total segment chars / divisor) and
/// compare it against the window minus the reserved output tokens.
pub fn check_budget(prompt: &Prompt, budget: &TokenBudget) -> BudgetReport {
    let per_segment: Vec<(SegmentLabel, u64)> = prompt
        .segments
        .iter()
        .map(|s| (s.label, budget.estimate_tokens(s.text.chars().count() as u64)))
        .collect();
    let total_chars: u64 = prompt
        .segments
        .iter()
        .map(|s| s.text.chars().count() as u64)
        .sum();
    let estimated_tokens = budget.estimate_tokens(total_chars);
    let available = budget.available();
    BudgetReport {
        per_segment,
        estimated_tokens,
        available,
        fits: estimated_tokens <= available,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElisionOutcome {
    pub prompt: Prompt,
    /// Titles of the context documents that were dropped, in drop order.
    pub dropped_titles: Vec<String>,
    /// Set when the input already fit and elision was a no-op.
    pub already_fit: bool,
}

/// Drop context documents in descending elision rank until the prompt
/// fits. Profile, subtask, and prior-response segments are never
/// touched. Calling this on an already-fitting prompt is a warning
/// no-op, surfaced via `already_fit`.
pub fn elide_to_fit(
    prompt: &Prompt,
    task: &Task,
    budget: &TokenBudget,
) -> Result<ElisionOutcome, PromptError> {
    let report = check_budget(prompt, budget);
    if report.fits {
        return Ok(ElisionOutcome {
            prompt: prompt.clone(),
            dropped_titles: Vec::new(),
            already_fit: true,
        });
    }
    let has_context = prompt.segment(SegmentLabel::Context).is_some();
    let mut kept: Vec<&ContextDocument> = if has_context {
        task.context_documents.iter().collect()
    } else {
        Vec::new()
    };
    let mut dropped_titles = Vec::new();
    loop {
        let mut candidate = prompt.clone();
        if has_context {
            for seg in &mut candidate.segments {
                if seg.label == SegmentLabel::Context {
                    seg.text = render_context(&kept);
                }
            }
        }
        let report = check_budget(&candidate, budget);
        if report.fits {
            return Ok(ElisionOutcome {
                prompt: candidate,
                dropped_titles,
                already_fit: false,
            });
        }
        // Drop the next-most-expendable document, highest rank first.
        let next = kept
            .iter()
            .enumerate()
            .max_by_key(|(_, d)| d.elision_rank)
            .map(|(i, _)| i);
        match next {
            Some(i) => dropped_titles.push(kept.remove(i).title.clone()),
            None => {
                return Err(PromptError::BudgetUnsatisfiable {
                    estimated: report.estimated_tokens,
                    available: report.available,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::builtin_roster;
    use crate::task::builtin_demo_task;

    fn demo_parts() -> (crate::profile::Roster, Task, crate::task::Plan) {
        let (task, plan) = builtin_demo_task();
        (builtin_roster(), task, plan)
    }

    #[test]
    fn initial_prompt_has_four_segments_in_order() {
        let (roster, task, plan) = demo_parts();
        let re = roster.agent("re").unwrap();
        let prompt = compose_initial(re, &task, &plan.subtasks[1]);
        let labels: Vec<SegmentLabel> = prompt.segments.iter().map(|s| s.label).collect();
        assert_eq!(
            labels,
            [
                SegmentLabel::Profile,
                SegmentLabel::TaskDescription,
                SegmentLabel::Context,
                SegmentLabel::SubtaskInstruction
            ]
        );
    }

    #[test]
    fn compose_is_deterministic() {
        let (roster, task, plan) = demo_parts();
        let re = roster.agent("re").unwrap();
        let a = compose_initial(re, &task, &plan.subtasks[1]);
        let b = compose_initial(re, &task, &plan.subtasks[1]);
        assert_eq!(a, b);
        assert_eq!(a.rendered_text(), b.rendered_text());
    }

    #[test]
    fn empty_context_uses_sentinel() {
        let (roster, mut task, plan) = demo_parts();
        task.context_documents.clear();
        let po = roster.agent("po").unwrap();
        let prompt = compose_initial(po, &task, &plan.subtasks[0]);
        assert_eq!(
            prompt.segment(SegmentLabel::Context).unwrap().text,
            EMPTY_CONTEXT_SENTINEL
        );
    }

    #[test]
    fn followup_prompt_has_two_segments() {
        let (_, _, plan) = demo_parts();
        let prompt = compose_followup(&plan.subtasks[2], "improved draft").unwrap();
        let labels: Vec<SegmentLabel> = prompt.segments.iter().map(|s| s.label).collect();
        assert_eq!(
            labels,
            [SegmentLabel::SubtaskInstruction, SegmentLabel::PriorResponse]
        );
    }

    #[test]
    fn followup_rejects_empty_prior_response() {
        let (_, _, plan) = demo_parts();
        assert!(matches!(
            compose_followup(&plan.subtasks[2], "  "),
            Err(PromptError::EmptyPriorResponse)
        ));
    }

    #[test]
    fn rendered_text_contains_segments_verbatim_in_order() {
        let (roster, task, plan) = demo_parts();
        let po = roster.agent("po").unwrap();
        let prompt = compose_initial(po, &task, &plan.subtasks[0]);
        let text = prompt.rendered_text();
        let mut cursor = 0;
        for seg in &prompt.segments {
            let header_at = text[cursor..].find(seg.label.header()).unwrap() + cursor;
            let body_at = text[header_at..].find(&seg.text).unwrap() + header_at;
            cursor = body_at;
        }
    }

    fn single_segment_prompt(chars: usize) -> Prompt {
        Prompt {
            segments: vec![Segment {
                label: SegmentLabel::SubtaskInstruction,
                text: "x".repeat(chars),
            }],
            target_agent_id: "po".to_string(),
            subtask_index: 1,
        }
    }

    #[test]
    fn budget_arithmetic_matches_the_oracle() {
        let budget = TokenBudget::new(16384, 4096, 4);
        // 40,000 chars -> 10,000 tokens <= 12,288
        assert!(check_budget(&single_segment_prompt(40_000), &budget).fits);
        // 60,000 chars -> 15,000 tokens > 12,288
        let report = check_budget(&single_segment_prompt(60_000), &budget);
        assert!(!report.fits);
        assert_eq!(report.estimated_tokens, 15_000);
    }

    #[test]
    fn empty_prompt_fits_with_zero_estimate() {
        let budget = TokenBudget::new(16384, 4096, 4);
        let prompt = Prompt {
            segments: Vec::new(),
            target_agent_id: "po".to_string(),
            subtask_index: 1,
        };
        let report = check_budget(&prompt, &budget);
        assert!(report.fits);
        assert_eq!(report.estimated_tokens, 0);
    }

    #[test]
    fn elision_drops_highest_rank_first_and_spares_fixed_segments() {
        let (roster, mut task, plan) = demo_parts();
        // Make the rank-1 document enormous so dropping it suffices.
        task.context_documents[1].body = "y".repeat(60_000);
        let po = roster.agent("po").unwrap();
        let prompt = compose_initial(po, &task, &plan.subtasks[0]);
        let budget = TokenBudget::new(16384, 4096, 4);
        assert!(!check_budget(&prompt, &budget).fits);
        let outcome = elide_to_fit(&prompt, &task, &budget).unwrap();
        assert_eq!(outcome.dropped_titles, vec!["Product Vision (NABC)"]);
        assert!(check_budget(&outcome.prompt, &budget).fits);
        // Non-context segments are byte-identical.
        for label in [
            SegmentLabel::Profile,
            SegmentLabel::TaskDescription,
            SegmentLabel::SubtaskInstruction,
        ] {
            assert_eq!(
                outcome.prompt.segment(label).unwrap(),
                prompt.segment(label).unwrap()
            );
        }
        // The surviving document is still in the context segment.
        assert!(outcome
            .prompt
            .segment(SegmentLabel::Context)
            .unwrap()
            .text
            .contains("Mobile Delivery MVP"));
    }

    #[test]
    fn oversized_profile_is_unsatisfiable() {
        let (roster, task, plan) = demo_parts();
        let mut po = roster.agent("po").unwrap().clone();
        po.tone_spec = "z".repeat(100_000);
        let prompt = compose_initial(&po, &task, &plan.subtasks[0]);
        let budget = TokenBudget::new(16384, 4096, 4);
        assert!(matches!(
            elide_to_fit(&prompt, &task, &budget),
            Err(PromptError::BudgetUnsatisfiable { .. })
        ));
    }

    #[test]
    fn elision_on_a_fitting_prompt_is_a_noop_with_warning() {
        let (roster, task, plan) = demo_parts();
        let po = roster.agent("po").unwrap();
        let prompt = compose_initial(po, &task, &plan.subtasks[0]);
        let budget = TokenBudget::new(16384, 4096, 4);
        let outcome = elide_to_fit(&prompt, &task, &budget).unwrap();
        assert!(outcome.already_fit);
        assert_eq!(outcome.prompt, prompt);
        assert!(outcome.dropped_titles.is_empty());
    }
}
