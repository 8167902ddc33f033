//! Orchestration of role-playing LLM agents for agile user story
//! refinement.
//!
//! The crate models a task as an ordered plan of subtasks, each assigned
//! to an agent with a persona profile. Prompts are composed from two
//! fixed shapes: the first contact with an agent carries its profile,
//! the task description, the task context and the subtask instruction;
//! every later prompt carries only the subtask instruction and the
//! previous agent's response. Every issued prompt and every response is
//! recorded in an append-only knowledge base that can be exported and
//! replayed byte-exactly.
//!
//! A deterministic scripted backend makes whole runs reproducible under
//! test; an HTTP backend speaks the OpenAI-compatible chat-completions
//! protocol for live runs.
//!
//! ```
//! use alas::story::parse_narrative;
//!
//! let n = parse_narrative(
//!     "As a delivery person, I want to synchronize my mobile device \
//!      with the mobile printer so that I can print labels",
//! )
//! .unwrap();
//! assert_eq!(n.role, "delivery person");
//! assert_eq!(n.benefit.as_deref(), Some("I can print labels"));
//! ```

pub mod backend;
pub mod clock;
pub mod eval;
pub mod kb;
pub mod orchestrator;
pub mod profile;
pub mod prompt;
pub mod story;
pub mod task;
