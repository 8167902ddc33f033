//! User stories in the canonical agile template, with acceptance
//! criteria and provenance tracking.
//!
//! The narrative grammar is the familiar one-sentence template
//! `As a [role], I want [requirement] so that [benefit]`, matched
//! case-insensitively with an optional benefit clause.

use std::collections::HashSet;
use std::path::Path;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StoryError {
    #[error("malformed narrative: missing \"{0}\" marker")]
    MalformedNarrative(&'static str),
    #[error("malformed narrative: empty {0} segment")]
    EmptySegment(&'static str),
    #[error("story {id}: {field} must be non-empty")]
    EmptyField { id: String, field: &'static str },
    #[error("story {id}: duplicate acceptance criterion {index}")]
    DuplicateCriterion { id: String, index: usize },
    #[error("story {id}: improved provenance requires a non-empty model tag")]
    EmptyModelTag { id: String },
    #[error("duplicate story id {0}")]
    DuplicateId(String),
    #[error("parse error at record {record}: {message}")]
    Parse { record: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// The three slots of the story template sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Narrative {
    pub role: String,
    pub requirement: String,
    pub benefit: Option<String>,
}

impl Narrative {
    pub fn new(
        role: impl Into<String>,
        requirement: impl Into<String>,
        benefit: Option<String>,
    ) -> Result<Self, StoryError> {
        let role = collapse_ws(&role.into());
        let requirement = collapse_ws(&requirement.into());
        if role.is_empty() {
            return Err(StoryError::EmptySegment("role"));
        }
        if requirement.is_empty() {
            return Err(StoryError::EmptySegment("requirement"));
        }
        let benefit = benefit.map(|b| collapse_ws(&b)).filter(|b| !b.is_empty());
        Ok(Self {
            role,
            requirement,
            benefit,
        })
    }
}

fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn marker_regexes() -> &'static (Regex, Regex, Regex) {
    static RE: OnceLock<(Regex, Regex, Regex)> = OnceLock::new();
    RE.get_or_init(|| {
        (
            Regex::new(r"(?i)\bas an? ").unwrap(),
            Regex::new(r"(?i)\bi want\b").unwrap(),
            Regex::new(r"(?i)\bso that\b").unwrap(),
        )
    })
}

/// Parse one template sentence into its narrative slots.
///
/// Matching is case-insensitive and accepts both `as a` and `as an`.
/// The benefit clause starts at the first `so that` after `i want`;
/// a missing clause leaves the benefit absent.
pub fn parse_narrative(text: &str) -> Result<Narrative, StoryError> {
    let normalized = collapse_ws(text);
    let sentence = normalized.strip_suffix('.').unwrap_or(&normalized);
    let (as_a, i_want, so_that) = marker_regexes();

    let as_m = as_a
        .find(sentence)
        .ok_or(StoryError::MalformedNarrative("as a"))?;
    let iw_m = i_want
        .find_at(sentence, as_m.end())
        .ok_or(StoryError::MalformedNarrative("i want"))?;

    let role = sentence[as_m.end()..iw_m.start()]
        .trim()
        .trim_end_matches(',')
        .trim();
    let rest = &sentence[iw_m.end()..];
    let (requirement, benefit) = match so_that.find(rest) {
        Some(st) => (
            rest[..st.start()].trim().trim_end_matches(',').trim(),
            Some(rest[st.end()..].trim().to_string()),
        ),
        None => (rest.trim(), None),
    };

    Narrative::new(role, requirement, benefit)
}

/// Render a narrative back to the canonical template sentence.
/// Deterministic: the same narrative always yields the same bytes.
pub fn render_narrative(n: &Narrative) -> String {
    match &n.benefit {
        Some(b) => format!("As a {}, I want {} so that {}", n.role, n.requirement, b),
        None => format!("As a {}, I want {}", n.role, n.requirement),
    }
}

/// Provenance of a story variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Original,
    Improved {
        model_tag: String,
        version_label: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserStory {
    pub id: String,
    pub title: String,
    pub narrative: Narrative,
    pub description: String,
    pub acceptance_criteria: Vec<String>,
    pub provenance: Provenance,
}

/// On-disk story record. Field order is the wire order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StoryRecord {
    pub id: String,
    pub title: String,
    pub role: String,
    pub requirement: String,
    pub benefit: Option<String>,
    pub description: String,
    pub acceptance_criteria: Vec<String>,
    pub provenance: Provenance,
}

impl UserStory {
    pub fn from_record(rec: StoryRecord) -> Result<Self, StoryError> {
        let id = rec.id.trim().to_string();
        if id.is_empty() {
            return Err(StoryError::EmptyField {
                id: "<unset>".into(),
                field: "id",
            });
        }
        let narrative = Narrative::new(rec.role, rec.requirement, rec.benefit)?;
        let mut seen = HashSet::new();
        for (i, item) in rec.acceptance_criteria.iter().enumerate() {
            let trimmed = item.trim();
            if trimmed.is_empty() {
                return Err(StoryError::EmptyField {
                    id: id.clone(),
                    field: "acceptance_criteria item",
                });
            }
            if !seen.insert(trimmed.to_string()) {
                return Err(StoryError::DuplicateCriterion {
                    id: id.clone(),
                    index: i,
                });
            }
        }
        if let Provenance::Improved { model_tag, .. } = &rec.provenance {
            if model_tag.trim().is_empty() {
                return Err(StoryError::EmptyModelTag { id });
            }
        }
        Ok(Self {
            id,
            title: rec.title,
            narrative,
            description: rec.description,
            acceptance_criteria: rec.acceptance_criteria,
            provenance: rec.provenance,
        })
    }

    pub fn to_record(&self) -> StoryRecord {
        StoryRecord {
            id: self.id.clone(),
            title: self.title.clone(),
            role: self.narrative.role.clone(),
            requirement: self.narrative.requirement.clone(),
            benefit: self.narrative.benefit.clone(),
            description: self.description.clone(),
            acceptance_criteria: self.acceptance_criteria.clone(),
            provenance: self.provenance.clone(),
        }
    }

    /// Template sentence for this story.
    pub fn narrative_sentence(&self) -> String {
        render_narrative(&self.narrative)
    }
}

/// Parse a single story document (one JSON record).
pub fn parse_story_document(text: &str) -> Result<UserStory, StoryError> {
    let rec: StoryRecord = serde_json::from_str(text).map_err(|e| StoryError::Parse {
        record: 0,
        message: e.to_string(),
    })?;
    UserStory::from_record(rec)
}

/// Load a story corpus file: a JSON array of records, order-preserving,
/// with ids unique across the file.
pub fn load_story_corpus(path: &Path) -> Result<Vec<UserStory>, StoryError> {
    let raw = std::fs::read_to_string(path).map_err(|source| StoryError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let records: Vec<StoryRecord> = serde_json::from_str(&raw).map_err(|e| StoryError::Parse {
        record: 0,
        message: e.to_string(),
    })?;
    let mut stories = Vec::with_capacity(records.len());
    let mut ids = HashSet::new();
    for (i, rec) in records.into_iter().enumerate() {
        let story = UserStory::from_record(rec).map_err(|e| match e {
            StoryError::DuplicateId(_) => e,
            other => StoryError::Parse {
                record: i + 1,
                message: other.to_string(),
            },
        })?;
        if !ids.insert(story.id.clone()) {
            return Err(StoryError::DuplicateId(story.id));
        }
        stories.push(story);
    }
    Ok(stories)
}

/// Write a story corpus file in the wire field order.
pub fn save_story_corpus(stories: &[UserStory], path: &Path) -> Result<(), StoryError> {
    let records: Vec<StoryRecord> = stories.iter().map(UserStory::to_record).collect();
    let body = serde_json::to_string_pretty(&records).expect("story records serialize");
    std::fs::write(path, body).map_err(|source| StoryError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_template_sentence() {
        let n = parse_narrative(
            "As a delivery person, I want to synchronize my mobile device with the mobile printer so that I can print labels",
        )
        .unwrap();
        assert_eq!(n.role, "delivery person");
        assert_eq!(
            n.requirement,
            "to synchronize my mobile device with the mobile printer"
        );
        assert_eq!(n.benefit.as_deref(), Some("I can print labels"));
    }

    #[test]
    fn benefit_is_optional() {
        let n = parse_narrative("As a user, I want login").unwrap();
        assert_eq!(n.role, "user");
        assert_eq!(n.requirement, "login");
        assert_eq!(n.benefit, None);
    }

    #[test]
    fn missing_as_a_marker_is_reported() {
        let err = parse_narrative("I want a pony").unwrap_err();
        assert!(matches!(err, StoryError::MalformedNarrative("as a")));
    }

    #[test]
    fn missing_i_want_marker_is_reported() {
        let err = parse_narrative("As a user, login would be nice").unwrap_err();
        assert!(matches!(err, StoryError::MalformedNarrative("i want")));
    }

    #[test]
    fn matching_is_case_insensitive_and_accepts_an() {
        let n = parse_narrative("as an OPERATOR, I WANT a dashboard SO THAT I can monitor").unwrap();
        assert_eq!(n.role, "OPERATOR");
        assert_eq!(n.benefit.as_deref(), Some("I can monitor"));
    }

    #[test]
    fn first_so_that_wins() {
        let n = parse_narrative("As a user, I want alerts so that I know so that fast").unwrap();
        assert_eq!(n.requirement, "alerts");
        assert_eq!(n.benefit.as_deref(), Some("I know so that fast"));
    }

    #[test]
    fn render_without_benefit() {
        let n = Narrative::new("user", "login", None).unwrap();
        assert_eq!(render_narrative(&n), "As a user, I want login");
    }

    #[test]
    fn render_with_benefit() {
        let n = Narrative::new("PO", "X", Some("Y".into())).unwrap();
        assert_eq!(render_narrative(&n), "As a PO, I want X so that Y");
    }

    #[test]
    fn duplicate_acceptance_criteria_rejected() {
        let rec = StoryRecord {
            id: "s1".into(),
            title: "t".into(),
            role: "user".into(),
            requirement: "x".into(),
            benefit: None,
            description: String::new(),
            acceptance_criteria: vec!["a".into(), "a".into()],
            provenance: Provenance::Original,
        };
        assert!(matches!(
            UserStory::from_record(rec),
            Err(StoryError::DuplicateCriterion { .. })
        ));
    }

    #[test]
    fn improved_provenance_needs_model_tag() {
        let rec = StoryRecord {
            id: "s1".into(),
            title: "t".into(),
            role: "user".into(),
            requirement: "x".into(),
            benefit: None,
            description: String::new(),
            acceptance_criteria: vec![],
            provenance: Provenance::Improved {
                model_tag: " ".into(),
                version_label: "v.1".into(),
            },
        };
        assert!(matches!(
            UserStory::from_record(rec),
            Err(StoryError::EmptyModelTag { .. })
        ));
    }

    #[test]
    fn corpus_rejects_duplicate_ids() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("stories.json");
        let story = UserStory::from_record(StoryRecord {
            id: "s1".into(),
            title: "t".into(),
            role: "user".into(),
            requirement: "x".into(),
            benefit: None,
            description: String::new(),
            acceptance_criteria: vec!["a".into()],
            provenance: Provenance::Original,
        })
        .unwrap();
        save_story_corpus(&[story.clone(), story], &path).unwrap();
        assert!(matches!(
            load_story_corpus(&path),
            Err(StoryError::DuplicateId(id)) if id == "s1"
        ));
    }

    #[test]
    fn corpus_preserves_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("stories.json");
        let mk = |id: &str| {
            UserStory::from_record(StoryRecord {
                id: id.into(),
                title: id.into(),
                role: "user".into(),
                requirement: "x".into(),
                benefit: None,
                description: String::new(),
                acceptance_criteria: vec![],
                provenance: Provenance::Original,
            })
            .unwrap()
        };
        save_story_corpus(&[mk("b"), mk("a")], &path).unwrap();
        let loaded = load_story_corpus(&path).unwrap();
        assert_eq!(loaded[0].id, "b");
        assert_eq!(loaded[1].id, "a");
    }
}
