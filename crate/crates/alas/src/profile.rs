//! Agent personas and the roster of agents participating in a task.
//!
//! A rendered profile always contains, in order: the role adoption
//! sentence, the knowledge amplification sentence, the responsibilities
//! block, the practical tips block, and the tone block.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgentProfile {
    pub agent_id: String,
    pub role_name: String,
    pub role_definition: String,
    pub human_level: u32,
    pub agent_level: u32,
    pub responsibilities: Vec<String>,
    pub practical_tips: Vec<String>,
    pub tone_spec: String,
    pub backend_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roster {
    pub agents: Vec<AgentProfile>,
}

impl Roster {
    pub fn agent(&self, agent_id: &str) -> Option<&AgentProfile> {
        self.agents.iter().find(|a| a.agent_id == agent_id)
    }

    /// Number of participating agents (the `k` of the prompt formulas).
    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }
}

/// Render a persona prompt text. Same profile, same bytes.
pub fn render_profile(p: &AgentProfile) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "From now on, you will play the role of a {role}, a new version of AI model \
         that is capable of {definition}. If a human {role} has a level {human} knowledge, \
         you will have a level {agent} of knowledge in this role. Please make sure to make \
         accurate and comprehensive results in this role, because if you don't, the software \
         may not meet the desired outcomes, and the project could fail.",
        role = p.role_name,
        definition = p.role_definition,
        human = p.human_level,
        agent = p.agent_level,
    );
    out.push_str("\n\nYour key responsibilities:\n");
    for (i, r) in p.responsibilities.iter().enumerate() {
        let _ = writeln!(out, "{}. {}", i + 1, r);
    }
    out.push_str("\nPractical tips:\n");
    if p.practical_tips.is_empty() {
        out.push_str("(none)\n");
    }
    for tip in &p.practical_tips {
        let _ = writeln!(out, "- {}", tip);
    }
    let _ = write!(out, "\nTone: {}", p.tone_spec);
    out
}

/// Structural checks on a roster. An empty list means the roster is valid.
pub fn validate_roster(roster: &Roster) -> Vec<String> {
    let mut violations = Vec::new();
    if roster.agents.is_empty() {
        violations.push("roster must contain at least one agent".to_string());
    }
    let mut seen = HashSet::new();
    for agent in &roster.agents {
        let id = &agent.agent_id;
        if !seen.insert(id.clone()) {
            violations.push(format!("duplicate agent_id {id}"));
        }
        if agent.agent_level <= agent.human_level {
            violations.push(format!(
                "agent {id}: knowledge amplification violated \
                 (agent_level {} must exceed human_level {})",
                agent.agent_level, agent.human_level
            ));
        }
        if agent.role_name.trim().is_empty() {
            violations.push(format!("agent {id}: role_name must be non-empty"));
        }
        if agent.role_definition.trim().is_empty() {
            violations.push(format!("agent {id}: role_definition must be non-empty"));
        }
        if agent.tone_spec.trim().is_empty() {
            violations.push(format!("agent {id}: tone_spec must be non-empty"));
        }
        if agent.responsibilities.is_empty() {
            violations.push(format!("agent {id}: responsibilities must be non-empty"));
        }
    }
    violations
}

pub fn load_roster(path: &Path) -> Result<Roster, ProfileError> {
    let raw = std::fs::read_to_string(path).map_err(|source| ProfileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let agents: Vec<AgentProfile> =
        serde_json::from_str(&raw).map_err(|e| ProfileError::Parse(e.to_string()))?;
    Ok(Roster { agents })
}

pub fn save_roster(roster: &Roster, path: &Path) -> Result<(), ProfileError> {
    let body = serde_json::to_string_pretty(&roster.agents).expect("profiles serialize");
    std::fs::write(path, body).map_err(|source| ProfileError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The two builtin focus roles: product owner and requirements engineer.
pub fn builtin_roster() -> Roster {
    Roster {
        agents: vec![
            AgentProfile {
                agent_id: "po".to_string(),
                role_name: "Product Owner".to_string(),
                role_definition: "managing the product vision and backlog for a software project"
                    .to_string(),
                human_level: 10,
                agent_level: 250,
                responsibilities: vec![
                    "managing product backlog and prioritizing user stories based on business \
                     value and customer needs"
                        .to_string(),
                    "ensuring that the user stories align with the overall product strategy \
                     and objectives"
                        .to_string(),
                ],
                practical_tips: vec![
                    "Keep the business value of every story explicit and traceable to the \
                     product vision."
                        .to_string(),
                ],
                tone_spec: "The tone of the responses should be professional, yet approachable \
                            and friendly. As a Product Owner, you should provide clear and \
                            concise instructions, while also fostering a positive and \
                            collaborative environment."
                    .to_string(),
                backend_id: "default".to_string(),
            },
            AgentProfile {
                agent_id: "re".to_string(),
                role_name: "Requirements Engineer".to_string(),
                role_definition: "analyzing, documenting, and managing software requirements"
                    .to_string(),
                human_level: 10,
                agent_level: 250,
                responsibilities: vec![
                    "elicit, analyze, document, and manage the requirements for a software \
                     project"
                        .to_string(),
                    "ensure that the user story description is unambiguous, and the acceptance \
                     criteria are measurable"
                        .to_string(),
                ],
                practical_tips: vec![
                    "Use clear and unambiguous language when documenting requirements to avoid \
                     any misunderstandings."
                        .to_string(),
                ],
                tone_spec: "The tone of the responses should be precise, objective, and \
                            professional."
                    .to_string(),
                backend_id: "default".to_string(),
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_roster_has_po_and_re() {
        let roster = builtin_roster();
        assert_eq!(roster.len(), 2);
        assert_eq!(roster.agents[0].agent_id, "po");
        assert_eq!(roster.agents[1].agent_id, "re");
        assert!(validate_roster(&roster).is_empty());
    }

    #[test]
    fn re_profile_renders_knowledge_amplification() {
        let roster = builtin_roster();
        let re = roster.agent("re").unwrap();
        assert_eq!(re.human_level, 10);
        assert_eq!(re.agent_level, 250);
        let text = render_profile(re);
        assert!(text.contains("a level 250 of knowledge in this role"));
        assert!(text.contains("a level 10 knowledge"));
        assert!(text.contains(
            "elicit, analyze, document, and manage the requirements for a software project"
        ));
    }

    #[test]
    fn po_tone_block_is_rendered() {
        let roster = builtin_roster();
        let text = render_profile(roster.agent("po").unwrap());
        assert!(text.contains("approachable and friendly"));
        assert!(text.contains("managing product backlog and prioritizing user stories"));
    }

    #[test]
    fn render_is_deterministic() {
        let roster = builtin_roster();
        let a = render_profile(&roster.agents[0]);
        let b = render_profile(&roster.agents[0]);
        assert_eq!(a, b);
    }

    #[test]
    fn anatomy_sections_appear_in_order() {
        let roster = builtin_roster();
        let text = render_profile(roster.agent("re").unwrap());
        let adoption = text.find("From now on, you will play the role of").unwrap();
        let amplification = text.find("of knowledge in this role").unwrap();
        let responsibilities = text.find("Your key responsibilities:").unwrap();
        let tips = text.find("Practical tips:").unwrap();
        let tone = text.find("Tone:").unwrap();
        assert!(adoption < amplification);
        assert!(amplification < responsibilities);
        assert!(responsibilities < tips);
        assert!(tips < tone);
    }

    #[test]
    fn duplicate_agent_id_is_a_violation() {
        let mut roster = builtin_roster();
        roster.agents[1].agent_id = "po".to_string();
        let violations = validate_roster(&roster);
        assert!(violations.iter().any(|v| v.contains("duplicate agent_id")));
    }

    #[test]
    fn non_amplified_knowledge_is_a_violation() {
        let mut roster = builtin_roster();
        roster.agents[0].agent_level = 10;
        let violations = validate_roster(&roster);
        assert!(violations
            .iter()
            .any(|v| v.contains("knowledge amplification")));
    }

    #[test]
    fn roster_round_trips_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("roster.json");
        let roster = builtin_roster();
        save_roster(&roster, &path).unwrap();
        assert_eq!(load_roster(&path).unwrap(), roster);
    }
}
