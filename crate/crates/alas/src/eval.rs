//! Survey evaluation: the seven-statement questionnaire catalog, Likert
//! rating ingestion, per-variant mean and distribution reports, the
//! fixed-width report table, and survey form export.
//!
//! Displayed means are rounded half-up to two decimals, computed on
//! integer sums so no floating-point drift can change a digit.
//!
//! ```
//! use alas::eval::Mean;
//!
//! assert_eq!(Mean::from_sum(50, 12).to_string(), "4.17");
//! assert_eq!(Mean::from_sum(40, 12).to_string(), "3.33");
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::story::{Provenance, UserStory};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("ratings parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: score {value} for {column} is outside 1..=5")]
    OutOfRangeScore {
        line: usize,
        column: String,
        value: i64,
    },
    #[error("line {line}: statement {column} is missing")]
    MissingStatement { line: usize, column: String },
    #[error("no rating records supplied")]
    EmptyInput,
    #[error("records mix variants: {0} and {1}")]
    MixedVariants(String, String),
    #[error("records for {0} mix overall-only and full-statement shapes")]
    MixedShapes(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatementId {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
}

impl StatementId {
    pub const ALL: [StatementId; 7] = [
        StatementId::S1,
        StatementId::S2,
        StatementId::S3,
        StatementId::S4,
        StatementId::S5,
        StatementId::S6,
        StatementId::S7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::S1 => "S1",
            StatementId::S2 => "S2",
            StatementId::S3 => "S3",
            StatementId::S4 => "S4",
            StatementId::S5 => "S5",
            StatementId::S6 => "S6",
            StatementId::S7 => "S7",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub id: StatementId,
    pub text: &'static str,
}

/// The questionnaire statements on good user stories.
pub fn statement_catalog() -> [Statement; 7] {
    [
        Statement {
            id: StatementId::S1,
            text: "The user story is simple and easy to understand.",
        },
        Statement {
            id: StatementId::S2,
            text: "The user story is of the right size (not too long).",
        },
        Statement {
            id: StatementId::S3,
            text: "The user story is at a suitable level of detail.",
        },
        Statement {
            id: StatementId::S4,
            text: "The user story includes a description of the task and the goal to achieve.",
        },
        Statement {
            id: StatementId::S5,
            text: "The user story is technically achievable.",
        },
        Statement {
            id: StatementId::S6,
            text: "The acceptance criteria include measurable elements for test case preparation.",
        },
        Statement {
            id: StatementId::S7,
            text: "The acceptance criteria are sufficient to validate the story.",
        },
    ]
}

/// One respondent's ratings for one story variant. Records for original
/// (unimproved) stories carry only the overall score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatingRecord {
    pub respondent_id: String,
    pub variant_id: String,
    pub scores: Option<BTreeMap<StatementId, u8>>,
    pub overall: u8,
    pub open_answers: BTreeMap<String, String>,
}

/// A mean stored exactly as hundredths, rounded half-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mean(i64);

impl Mean {
    /// Mean of `sum` over `n` values, rounded half-up to 2 decimals.
    pub fn from_sum(sum: u64, n: u64) -> Self {
        assert!(n > 0);
        Mean(((200 * sum + n) / (2 * n)) as i64)
    }

    pub fn hundredths(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Mean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantReport {
    pub variant_id: String,
    pub n_respondents: u64,
    pub per_statement_mean: Option<BTreeMap<StatementId, Mean>>,
    pub overall_mean: Mean,
    /// Counts over scores 1..=5, per statement.
    pub distribution: Option<BTreeMap<StatementId, [u32; 5]>>,
}

/// Aggregate all records of one variant into means and distributions.
pub fn compute_report(records: &[RatingRecord]) -> Result<VariantReport, EvalError> {
    let first = records.first().ok_or(EvalError::EmptyInput)?;
    let variant_id = first.variant_id.clone();
    let with_scores = first.scores.is_some();
    for rec in records {
        if rec.variant_id != variant_id {
            return Err(EvalError::MixedVariants(
                variant_id.clone(),
                rec.variant_id.clone(),
            ));
        }
        if rec.scores.is_some() != with_scores {
            return Err(EvalError::MixedShapes(variant_id.clone()));
        }
    }
    let n = records.len() as u64;
    let overall_sum: u64 = records.iter().map(|r| r.overall as u64).sum();

    let (per_statement_mean, distribution) = if with_scores {
        let mut means = BTreeMap::new();
        let mut dists = BTreeMap::new();
        for id in StatementId::ALL {
            let mut sum = 0u64;
            let mut counts = [0u32; 5];
            for rec in records {
                let v = rec.scores.as_ref().unwrap()[&id];
                sum += v as u64;
                counts[(v - 1) as usize] += 1;
            }
            means.insert(id, Mean::from_sum(sum, n));
            dists.insert(id, counts);
        }
        (Some(means), Some(dists))
    } else {
        (None, None)
    };

    Ok(VariantReport {
        variant_id,
        n_respondents: n,
        per_statement_mean,
        overall_mean: Mean::from_sum(overall_sum, n),
        distribution,
    })
}

/// Group records by variant, preserving first-appearance order.
pub fn group_by_variant(records: &[RatingRecord]) -> Vec<(String, Vec<RatingRecord>)> {
    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<String, Vec<RatingRecord>> = BTreeMap::new();
    for rec in records {
        if !groups.contains_key(&rec.variant_id) {
            order.push(rec.variant_id.clone());
        }
        groups
            .entry(rec.variant_id.clone())
            .or_default()
            .push(rec.clone());
    }
    order
        .into_iter()
        .map(|id| {
            let recs = groups.remove(&id).unwrap();
            (id, recs)
        })
        .collect()
}

const RATINGS_HEADER: [&str; 10] = [
    "respondent_id",
    "variant_id",
    "S1",
    "S2",
    "S3",
    "S4",
    "S5",
    "S6",
    "S7",
    "overall",
];

fn parse_score(field: &str, line: usize, column: &str) -> Result<u8, EvalError> {
    let value: i64 = field.trim().parse().map_err(|_| EvalError::Parse {
        line,
        message: format!("{column}: `{field}` is not an integer"),
    })?;
    if !(1..=5).contains(&value) {
        return Err(EvalError::OutOfRangeScore {
            line,
            column: column.to_string(),
            value,
        });
    }
    Ok(value as u8)
}

/// Read a ratings CSV: columns respondent_id, variant_id, S1..S7,
/// overall. Records for originals leave all seven statement cells
/// empty; a partially filled record is a missing-statement error.
pub fn ingest_ratings(path: &Path) -> Result<Vec<RatingRecord>, EvalError> {
    let raw = std::fs::read_to_string(path).map_err(|source| EvalError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ingest_ratings_str(&raw)
}

pub fn ingest_ratings_str(raw: &str) -> Result<Vec<RatingRecord>, EvalError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(raw.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| EvalError::Parse {
            line: 1,
            message: e.to_string(),
        })?
        .clone();
    if headers.iter().collect::<Vec<_>>() != RATINGS_HEADER {
        return Err(EvalError::Parse {
            line: 1,
            message: format!(
                "header must be `{}`",
                RATINGS_HEADER.join(",")
            ),
        });
    }
    let mut records = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| EvalError::Parse {
            line,
            message: e.to_string(),
        })?;
        if row.len() != RATINGS_HEADER.len() {
            return Err(EvalError::Parse {
                line,
                message: format!("expected {} fields, got {}", RATINGS_HEADER.len(), row.len()),
            });
        }
        let statement_fields: Vec<&str> = (2..9).map(|c| row.get(c).unwrap()).collect();
        let filled = statement_fields.iter().filter(|f| !f.is_empty()).count();
        let scores = match filled {
            0 => None,
            7 => {
                let mut map = BTreeMap::new();
                for (id, field) in StatementId::ALL.iter().zip(&statement_fields) {
                    map.insert(*id, parse_score(field, line, id.as_str())?);
                }
                Some(map)
            }
            _ => {
                let missing = StatementId::ALL
                    .iter()
                    .zip(&statement_fields)
                    .find(|(_, f)| f.is_empty())
                    .map(|(id, _)| id.as_str())
                    .unwrap();
                return Err(EvalError::MissingStatement {
                    line,
                    column: missing.to_string(),
                });
            }
        };
        records.push(RatingRecord {
            respondent_id: row.get(0).unwrap().to_string(),
            variant_id: row.get(1).unwrap().to_string(),
            scores,
            overall: parse_score(row.get(9).unwrap(), line, "overall")?,
            open_answers: BTreeMap::new(),
        });
    }
    Ok(records)
}

const VARIANT_COL: usize = 14;
const STAT_COL: usize = 6;
const OVERALL_COL: usize = 8;

/// Fixed-width report table, rows in input order, columns S1..S7 plus
/// the overall mean. Variants without per-statement data render `-`.
pub fn render_table(reports: &[VariantReport]) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<VARIANT_COL$}", "User story");
    for id in StatementId::ALL {
        let _ = write!(out, "{:>STAT_COL$}", id.as_str());
    }
    let _ = writeln!(out, "{:>OVERALL_COL$}", "Overall");
    for report in reports {
        let _ = write!(out, "{:<VARIANT_COL$}", report.variant_id);
        for id in StatementId::ALL {
            match &report.per_statement_mean {
                Some(means) => {
                    let _ = write!(out, "{:>STAT_COL$}", means[&id].to_string());
                }
                None => {
                    let _ = write!(out, "{:>STAT_COL$}", "-");
                }
            }
        }
        let _ = writeln!(out, "{:>OVERALL_COL$}", report.overall_mean.to_string());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuestionKind {
    Rating,
    OpenEnded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Question {
    pub kind: QuestionKind,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurveyDocument {
    pub questions: Vec<Question>,
}

impl SurveyDocument {
    pub fn rating_count(&self) -> usize {
        self.questions
            .iter()
            .filter(|q| q.kind == QuestionKind::Rating)
            .count()
    }

    pub fn open_ended_count(&self) -> usize {
        self.questions
            .iter()
            .filter(|q| q.kind == QuestionKind::OpenEnded)
            .count()
    }

    /// Plain-text form. Every question is one line starting with
    /// `Qn. [Rating 1-5]` or `Qn. [Open]`, so counts can be recovered
    /// from the rendered document alone.
    pub fn render(&self) -> String {
        let mut out = String::from(
            "# User Story Quality Survey\n\n\
             Rate each statement from 1 (strong disagreement) to 5 (strong agreement).\n\n",
        );
        for (i, q) in self.questions.iter().enumerate() {
            let tag = match q.kind {
                QuestionKind::Rating => "[Rating 1-5]",
                QuestionKind::OpenEnded => "[Open]",
            };
            let _ = writeln!(out, "Q{}. {} {}", i + 1, tag, q.text);
        }
        out
    }
}

/// Build the survey for a list of story variants. Improved variants get
/// the seven statements, two open questions, and an overall rating;
/// originals get an overall rating and a concerns question; the form
/// closes with two overall open questions.
pub fn export_survey(variants: &[UserStory]) -> SurveyDocument {
    let mut questions = Vec::new();
    if variants.is_empty() {
        return SurveyDocument { questions };
    }
    for story in variants {
        match &story.provenance {
            Provenance::Original => {
                questions.push(Question {
                    kind: QuestionKind::Rating,
                    text: format!(
                        "Overall satisfaction with the original story `{}`.",
                        story.id
                    ),
                });
                questions.push(Question {
                    kind: QuestionKind::OpenEnded,
                    text: format!(
                        "What concerns do you have about the original story `{}`?",
                        story.id
                    ),
                });
            }
            Provenance::Improved { version_label, .. } => {
                for statement in statement_catalog() {
                    questions.push(Question {
                        kind: QuestionKind::Rating,
                        text: format!("`{}` ({version_label}): {}", story.id, statement.text),
                    });
                }
                questions.push(Question {
                    kind: QuestionKind::Rating,
                    text: format!(
                        "Overall satisfaction with `{}` ({version_label}).",
                        story.id
                    ),
                });
                questions.push(Question {
                    kind: QuestionKind::OpenEnded,
                    text: format!(
                        "What specific improvements did you notice in `{}` ({version_label})?",
                        story.id
                    ),
                });
                questions.push(Question {
                    kind: QuestionKind::OpenEnded,
                    text: format!(
                        "What concerns or suggestions do you have for `{}` ({version_label})?",
                        story.id
                    ),
                });
            }
        }
    }
    questions.push(Question {
        kind: QuestionKind::OpenEnded,
        text: "Do you have further suggestions for improving the user stories?".to_string(),
    });
    questions.push(Question {
        kind: QuestionKind::OpenEnded,
        text: "Which variant is most appropriate for the project context, and why?".to_string(),
    });
    SurveyDocument { questions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::story::{Narrative, UserStory};

    fn full_record(respondent: &str, variant: &str, scores: [u8; 7], overall: u8) -> RatingRecord {
        let map = StatementId::ALL
            .iter()
            .zip(scores)
            .map(|(id, v)| (*id, v))
            .collect();
        RatingRecord {
            respondent_id: respondent.to_string(),
            variant_id: variant.to_string(),
            scores: Some(map),
            overall,
            open_answers: BTreeMap::new(),
        }
    }

    #[test]
    fn catalog_has_seven_statements() {
        let catalog = statement_catalog();
        assert_eq!(catalog.len(), 7);
        assert_eq!(
            catalog[0].text,
            "The user story is simple and easy to understand."
        );
        assert_eq!(
            catalog[5].text,
            "The acceptance criteria include measurable elements for test case preparation."
        );
    }

    #[test]
    fn mean_rounds_half_up() {
        assert_eq!(Mean::from_sum(50, 12).to_string(), "4.17");
        assert_eq!(Mean::from_sum(25, 8).to_string(), "3.13"); // 3.125
        assert_eq!(Mean::from_sum(12, 3).to_string(), "4.00");
    }

    #[test]
    fn twelve_records_summing_to_fifty_give_4_17() {
        // S1 scores: eight 4s and four 4.5-free values summing to 50.
        let s1_scores = [5, 5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4];
        assert_eq!(s1_scores.iter().sum::<i32>(), 50);
        let records: Vec<RatingRecord> = s1_scores
            .iter()
            .enumerate()
            .map(|(i, &s1)| {
                full_record(&format!("r{i}"), "us-1-v1", [s1 as u8, 4, 4, 4, 4, 4, 4], 4)
            })
            .collect();
        let report = compute_report(&records).unwrap();
        assert_eq!(
            report.per_statement_mean.as_ref().unwrap()[&StatementId::S1].to_string(),
            "4.17"
        );
        assert_eq!(report.n_respondents, 12);
    }

    #[test]
    fn single_record_means_equal_its_scores() {
        let record = full_record("r0", "v", [1, 2, 3, 4, 5, 1, 2], 3);
        let report = compute_report(&[record]).unwrap();
        let means = report.per_statement_mean.unwrap();
        assert_eq!(means[&StatementId::S1].to_string(), "1.00");
        assert_eq!(means[&StatementId::S5].to_string(), "5.00");
        assert_eq!(report.overall_mean.to_string(), "3.00");
    }

    #[test]
    fn distribution_counts_sum_to_n() {
        let records = vec![
            full_record("a", "v", [5, 5, 5, 5, 5, 5, 5], 5),
            full_record("b", "v", [5, 5, 5, 5, 5, 5, 5], 5),
        ];
        let report = compute_report(&records).unwrap();
        for counts in report.distribution.unwrap().values() {
            assert_eq!(counts.iter().sum::<u32>() as u64, report.n_respondents);
            assert_eq!(counts[4], 2);
        }
    }

    #[test]
    fn mixed_variants_are_rejected() {
        let records = vec![
            full_record("a", "v1", [4; 7], 4),
            full_record("b", "v2", [4; 7], 4),
        ];
        assert!(matches!(
            compute_report(&records),
            Err(EvalError::MixedVariants(_, _))
        ));
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(compute_report(&[]), Err(EvalError::EmptyInput)));
    }

    #[test]
    fn ingest_parses_valid_rows() {
        let csv = "respondent_id,variant_id,S1,S2,S3,S4,S5,S6,S7,overall\n\
                   r1,us-1-v1,4,4,4,4,4,4,4,4\n\
                   r2,us-1,,,,,,,,3\n";
        let records = ingest_ratings_str(csv).unwrap();
        assert_eq!(records.len(), 2);
        assert!(records[0].scores.is_some());
        assert!(records[1].scores.is_none());
    }

    #[test]
    fn ingest_rejects_out_of_range_scores() {
        let csv = "respondent_id,variant_id,S1,S2,S3,S4,S5,S6,S7,overall\n\
                   r1,v,6,4,4,4,4,4,4,4\n";
        assert!(matches!(
            ingest_ratings_str(csv),
            Err(EvalError::OutOfRangeScore { value: 6, .. })
        ));
    }

    #[test]
    fn ingest_rejects_missing_statement() {
        let csv = "respondent_id,variant_id,S1,S2,S3,S4,S5,S6,S7,overall\n\
                   r1,v,4,4,4,4,4,4,,4\n";
        assert!(matches!(
            ingest_ratings_str(csv),
            Err(EvalError::MissingStatement { column, .. }) if column == "S7"
        ));
    }

    #[test]
    fn table_renders_dashes_for_originals() {
        let original = compute_report(&[RatingRecord {
            respondent_id: "r1".into(),
            variant_id: "us-1".into(),
            scores: None,
            overall: 3,
            open_answers: BTreeMap::new(),
        }])
        .unwrap();
        let table = render_table(&[original]);
        let row = table.lines().nth(1).unwrap();
        assert!(row.starts_with("us-1"));
        assert_eq!(row.matches(" -").count(), 7);
        assert!(row.trim_end().ends_with("3.00"));
    }

    #[test]
    fn empty_report_list_renders_header_only() {
        let table = render_table(&[]);
        assert_eq!(table.lines().count(), 1);
        assert!(table.starts_with("User story"));
    }

    fn story(id: &str, provenance: Provenance) -> UserStory {
        UserStory {
            id: id.to_string(),
            title: id.to_string(),
            narrative: Narrative::new("user", "something", None).unwrap(),
            description: String::new(),
            acceptance_criteria: vec![],
            provenance,
        }
    }

    fn improved(id: &str, version: &str) -> UserStory {
        story(
            id,
            Provenance::Improved {
                model_tag: "gpt-test".to_string(),
                version_label: version.to_string(),
            },
        )
    }

    #[test]
    fn survey_counts_for_two_originals_and_four_improved() {
        let variants = vec![
            story("us-1", Provenance::Original),
            improved("us-1", "v.1"),
            improved("us-1", "v.2"),
            story("us-2", Provenance::Original),
            improved("us-2", "v.1"),
            improved("us-2", "v.2"),
        ];
        let survey = export_survey(&variants);
        assert_eq!(survey.rating_count(), 34);
        assert_eq!(survey.open_ended_count(), 12);
    }

    #[test]
    fn survey_counts_for_one_original_one_improved() {
        let variants = vec![story("us-1", Provenance::Original), improved("us-1", "v.1")];
        let survey = export_survey(&variants);
        assert_eq!(survey.rating_count(), 9);
    }

    #[test]
    fn empty_survey_is_preamble_only() {
        let survey = export_survey(&[]);
        assert!(survey.questions.is_empty());
        let text = survey.render();
        assert!(text.contains("strong agreement"));
        assert!(!text.contains("Q1."));
    }
}
