//! Append-only shared knowledge base.
//!
//! The record starts with the task description and grows with every
//! issued subtask and every agent response. Entries are never mutated
//! or removed; loading a transcript re-validates all ordering
//! invariants, so tampered files are rejected.
//!
//! ```
//! use alas::kb::{EntryKind, KnowledgeBase};
//! use alas::task::builtin_demo_task;
//!
//! let (task, _) = builtin_demo_task();
//! let mut kb = KnowledgeBase::init(&task, 0);
//! kb.append(
//!     EntryKind::SubtaskIssued { subtask_index: 1, agent_id: "po".into() },
//!     "the rendered prompt".to_string(),
//!     1,
//! )
//! .unwrap();
//! kb.append(
//!     EntryKind::AgentResponse { subtask_index: 1, agent_id: "po".into() },
//!     "the reply".to_string(),
//!     2,
//! )
//! .unwrap();
//! assert_eq!(kb.latest_response().unwrap(), "the reply");
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::task::Task;

#[derive(Debug, Error)]
pub enum KbError {
    #[error("ordering violation: {0}")]
    OrderingViolation(String),
    #[error("no agent response recorded yet")]
    NoResponseYet,
    #[error("transcript parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("transcript invariant violated at entry {seq}: {message}")]
    InvariantViolation { seq: u64, message: String },
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    TaskDescription,
    SubtaskIssued { subtask_index: u32, agent_id: String },
    AgentResponse { subtask_index: u32, agent_id: String },
}

/// One transcript record. Field order is the wire order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnowledgeBaseEntry {
    pub seq: u64,
    pub kind: EntryKind,
    pub content: String,
    pub token_estimate: u64,
    pub timestamp: u64,
}

/// Divisor for the stored per-entry token estimate.
const ESTIMATE_CHARS_PER_TOKEN: u64 = 4;

fn estimate_tokens(content: &str) -> u64 {
    (content.chars().count() as u64).div_ceil(ESTIMATE_CHARS_PER_TOKEN)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KnowledgeBase {
    entries: Vec<KnowledgeBaseEntry>,
}

impl KnowledgeBase {
    /// Start a knowledge base with the task description as entry 1.
    pub fn init(task: &Task, timestamp: u64) -> Self {
        Self {
            entries: vec![KnowledgeBaseEntry {
                seq: 1,
                kind: EntryKind::TaskDescription,
                content: task.description.clone(),
                token_estimate: estimate_tokens(&task.description),
                timestamp,
            }],
        }
    }

    pub fn entries(&self) -> &[KnowledgeBaseEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Append an entry, enforcing the ordering invariants. Returns the
    /// new entry's sequence number.
    pub fn append(
        &mut self,
        kind: EntryKind,
        content: impl Into<String>,
        timestamp: u64,
    ) -> Result<u64, KbError> {
        match &kind {
            EntryKind::TaskDescription => {
                return Err(KbError::OrderingViolation(
                    "task description is only ever entry 1".to_string(),
                ));
            }
            EntryKind::AgentResponse {
                subtask_index,
                agent_id,
            } => match self.entries.last().map(|e| &e.kind) {
                Some(EntryKind::SubtaskIssued {
                    subtask_index: issued_index,
                    agent_id: issued_agent,
                }) if issued_index == subtask_index && issued_agent == agent_id => {}
                _ => {
                    return Err(KbError::OrderingViolation(format!(
                        "agent response for subtask {subtask_index} by {agent_id} \
                         must immediately follow its matching issued subtask"
                    )));
                }
            },
            EntryKind::SubtaskIssued { .. } => {
                if self.entries.is_empty() {
                    return Err(KbError::OrderingViolation(
                        "knowledge base must be initialized with a task description"
                            .to_string(),
                    ));
                }
                if let Some(EntryKind::SubtaskIssued { subtask_index, .. }) =
                    self.entries.last().map(|e| &e.kind)
                {
                    return Err(KbError::OrderingViolation(format!(
                        "subtask {subtask_index} is still awaiting its response"
                    )));
                }
            }
        }
        let seq = self.entries.len() as u64 + 1;
        let content = content.into();
        self.entries.push(KnowledgeBaseEntry {
            seq,
            token_estimate: estimate_tokens(&content),
            kind,
            content,
            timestamp,
        });
        Ok(seq)
    }

    /// Content of the most recent agent response.
    pub fn latest_response(&self) -> Result<&str, KbError> {
        self.entries
            .iter()
            .rev()
            .find(|e| matches!(e.kind, EntryKind::AgentResponse { .. }))
            .map(|e| e.content.as_str())
            .ok_or(KbError::NoResponseYet)
    }

    /// Export as line-delimited records, one entry per line.
    pub fn export_transcript(&self, path: &Path) -> Result<(), KbError> {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&serde_json::to_string(entry).expect("entry serializes"));
            out.push('\n');
        }
        std::fs::write(path, out).map_err(|source| KbError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    /// Load a transcript and re-validate every invariant.
    pub fn load_transcript(path: &Path) -> Result<Self, KbError> {
        let raw = std::fs::read_to_string(path).map_err(|source| KbError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut entries = Vec::new();
        for (i, line) in raw.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let entry: KnowledgeBaseEntry =
                serde_json::from_str(line).map_err(|e| KbError::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })?;
            entries.push(entry);
        }
        validate_entries(&entries)?;
        Ok(Self { entries })
    }
}

fn validate_entries(entries: &[KnowledgeBaseEntry]) -> Result<(), KbError> {
    for (i, entry) in entries.iter().enumerate() {
        let expected = i as u64 + 1;
        if entry.seq != expected {
            return Err(KbError::InvariantViolation {
                seq: entry.seq,
                message: format!("sequence gap: expected seq {expected}"),
            });
        }
        match &entry.kind {
            EntryKind::TaskDescription => {
                if entry.seq != 1 {
                    return Err(KbError::InvariantViolation {
                        seq: entry.seq,
                        message: "task description must be entry 1".to_string(),
                    });
                }
            }
            EntryKind::SubtaskIssued { .. } => {
                if entry.seq == 1 {
                    return Err(KbError::InvariantViolation {
                        seq: 1,
                        message: "entry 1 must be the task description".to_string(),
                    });
                }
            }
            EntryKind::AgentResponse {
                subtask_index,
                agent_id,
            } => {
                let prev = i.checked_sub(1).map(|p| &entries[p].kind);
                match prev {
                    Some(EntryKind::SubtaskIssued {
                        subtask_index: issued_index,
                        agent_id: issued_agent,
                    }) if issued_index == subtask_index && issued_agent == agent_id => {}
                    _ => {
                        return Err(KbError::InvariantViolation {
                            seq: entry.seq,
                            message: format!(
                                "agent response (subtask {subtask_index}, agent {agent_id}) \
                                 has no matching issued subtask before it"
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::task::builtin_demo_task;

    fn kb() -> KnowledgeBase {
        let (task, _) = builtin_demo_task();
        KnowledgeBase::init(&task, 0)
    }

    #[test]
    fn init_holds_a_single_task_description() {
        let (task, _) = builtin_demo_task();
        let kb = kb();
        assert_eq!(kb.len(), 1);
        assert_eq!(kb.entries()[0].seq, 1);
        assert_eq!(kb.entries()[0].kind, EntryKind::TaskDescription);
        assert_eq!(kb.entries()[0].content, task.description);
    }

    #[test]
    fn append_sequences_are_contiguous() {
        let mut kb = kb();
        let s1 = kb
            .append(
                EntryKind::SubtaskIssued {
                    subtask_index: 1,
                    agent_id: "po".into(),
                },
                "prompt",
                1,
            )
            .unwrap();
        let s2 = kb
            .append(
                EntryKind::AgentResponse {
                    subtask_index: 1,
                    agent_id: "po".into(),
                },
                "reply",
                2,
            )
            .unwrap();
        assert_eq!((s1, s2), (2, 3));
    }

    #[test]
    fn response_without_issued_subtask_is_rejected() {
        let mut kb = kb();
        let err = kb
            .append(
                EntryKind::AgentResponse {
                    subtask_index: 1,
                    agent_id: "po".into(),
                },
                "reply",
                1,
            )
            .unwrap_err();
        assert!(matches!(err, KbError::OrderingViolation(_)));
    }

    #[test]
    fn response_agent_must_match_issued_agent() {
        let mut kb = kb();
        kb.append(
            EntryKind::SubtaskIssued {
                subtask_index: 2,
                agent_id: "po".into(),
            },
            "prompt",
            1,
        )
        .unwrap();
        let err = kb
            .append(
                EntryKind::AgentResponse {
                    subtask_index: 2,
                    agent_id: "re".into(),
                },
                "reply",
                2,
            )
            .unwrap_err();
        assert!(matches!(err, KbError::OrderingViolation(_)));
    }

    #[test]
    fn latest_response_tracks_the_newest_reply() {
        let mut kb = kb();
        assert!(matches!(kb.latest_response(), Err(KbError::NoResponseYet)));
        for (i, text) in ["draft A", "draft B"].iter().enumerate() {
            let idx = i as u32 + 1;
            kb.append(
                EntryKind::SubtaskIssued {
                    subtask_index: idx,
                    agent_id: "po".into(),
                },
                "prompt",
                0,
            )
            .unwrap();
            kb.append(
                EntryKind::AgentResponse {
                    subtask_index: idx,
                    agent_id: "po".into(),
                },
                *text,
                0,
            )
            .unwrap();
        }
        assert_eq!(kb.latest_response().unwrap(), "draft B");
    }

    #[test]
    fn transcript_round_trips() {
        let mut kb = kb();
        kb.append(
            EntryKind::SubtaskIssued {
                subtask_index: 1,
                agent_id: "po".into(),
            },
            "prompt",
            5,
        )
        .unwrap();
        kb.append(
            EntryKind::AgentResponse {
                subtask_index: 1,
                agent_id: "po".into(),
            },
            "reply",
            6,
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("transcript.jsonl");
        kb.export_transcript(&path).unwrap();
        let loaded = KnowledgeBase::load_transcript(&path).unwrap();
        assert_eq!(loaded, kb);
    }

    #[test]
    fn tampered_transcripts_are_rejected_on_load() {
        let mut kb = kb();
        kb.append(
            EntryKind::SubtaskIssued {
                subtask_index: 1,
                agent_id: "po".into(),
            },
            "prompt",
            1,
        )
        .unwrap();
        kb.append(
            EntryKind::AgentResponse {
                subtask_index: 1,
                agent_id: "po".into(),
            },
            "reply",
            2,
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("transcript.jsonl");
        kb.export_transcript(&path).unwrap();
        let lines: Vec<String> = std::fs::read_to_string(&path)
            .unwrap()
            .lines()
            .map(String::from)
            .collect();

        // Gap: remove the middle entry.
        std::fs::write(&path, format!("{}\n{}\n", lines[0], lines[2])).unwrap();
        assert!(matches!(
            KnowledgeBase::load_transcript(&path),
            Err(KbError::InvariantViolation { .. })
        ));

        // Reorder: response before task description.
        std::fs::write(&path, format!("{}\n{}\n{}\n", lines[2], lines[0], lines[1])).unwrap();
        assert!(KnowledgeBase::load_transcript(&path).is_err());
    }
}
