//! Acceptance suite. Each test exercises one release criterion end to
//! end and prints a PASS line with what it verified.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use alas::backend::{builtin_model_specs, BackendRegistry, ScriptedBackend};
use alas::clock::FixedClock;
use alas::eval::{
    compute_report, export_survey, Mean, QuestionKind, RatingRecord, StatementId,
};
use alas::kb::{EntryKind, KnowledgeBase};
use alas::orchestrator::{
    builtin_demo_script, run_task, verify_prompt_shapes, RunConfig, RunResult,
};
use alas::profile::{builtin_roster, render_profile};
use alas::prompt::{
    check_budget, compose_initial, elide_to_fit, Prompt, PromptError, Segment, SegmentLabel,
    TokenBudget,
};
use alas::story::{parse_narrative, render_narrative, Narrative, Provenance, UserStory};
use alas::task::{builtin_demo_task, generate_plan, render_plan_wire, TaskError};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_alas")
}

fn demo_run() -> (RunResult, Arc<ScriptedBackend>) {
    let (task, plan) = builtin_demo_task();
    let roster = builtin_roster();
    let backend = Arc::new(ScriptedBackend::new(builtin_demo_script()));
    let mut registry = BackendRegistry::new();
    registry.register(
        "default",
        backend.clone(),
        builtin_model_specs()[0].clone(),
    );
    let config = RunConfig {
        backoff_base: Duration::ZERO,
        ..RunConfig::default()
    };
    let result = run_task(
        &task,
        &plan,
        &roster,
        &registry,
        &config,
        &FixedClock::new(0, 1),
    )
    .expect("demo run succeeds");
    (result, backend)
}

#[test]
fn criterion_1_prompt_formula_conformance() {
    let started = Instant::now();
    let (task, plan) = builtin_demo_task();
    let roster = builtin_roster();
    let script = builtin_demo_script();
    let (result, backend) = demo_run();
    verify_prompt_shapes(&result.transcript).expect("trace checker accepts the transcript");

    // Independently assembled expectations, straight from the formula.
    let context = task
        .context_documents
        .iter()
        .map(|d| format!("# {}\n{}", d.title, d.body))
        .collect::<Vec<_>>()
        .join("\n\n");
    let log = backend.request_log();
    assert_eq!(log.len(), 6);
    let mut initial_count = 0;
    let mut followup_count = 0;
    for (i, (req, subtask)) in log.iter().zip(&plan.subtasks).enumerate() {
        if i < 2 {
            // First contact per agent: profile + task + context + subtask.
            initial_count += 1;
            let profile = roster.agent(&subtask.responsible_agent_id).unwrap();
            assert_eq!(req.messages.len(), 2);
            assert_eq!(req.messages[0].role, "system");
            assert_eq!(req.messages[0].content, render_profile(profile));
            let expected_user = format!(
                "== TASK ==\n{}\n\n== CONTEXT ==\n{}\n\n== SUBTASK ==\n{}",
                task.description, context, subtask.instruction
            );
            assert_eq!(req.messages[1].content, expected_user);
        } else {
            // Follow-up: subtask + previous response, nothing else.
            followup_count += 1;
            assert_eq!(req.messages.len(), 1);
            let expected = format!(
                "== SUBTASK ==\n{}\n\n== PRIOR RESPONSE ==\n{}",
                subtask.instruction,
                script[i - 1]
            );
            assert_eq!(req.messages[0].content, expected);
        }
    }
    assert_eq!((initial_count, followup_count), (2, 4));
    assert!(started.elapsed() < Duration::from_secs(1));
    println!(
        "PASS criterion 1: 2 four-segment initial prompts and 4 two-segment follow-ups, \
         byte-equal to independent renderings, in {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_2_knowledge_base_shape_and_tamper_rejection() {
    let (result, _) = demo_run();
    let entries = result.transcript.entries();
    assert_eq!(entries.len(), 13);
    assert_eq!(entries[0].kind, EntryKind::TaskDescription);
    for (i, entry) in entries.iter().enumerate().skip(1) {
        if i % 2 == 1 {
            assert!(matches!(entry.kind, EntryKind::SubtaskIssued { .. }));
        } else {
            assert!(matches!(entry.kind, EntryKind::AgentResponse { .. }));
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("transcript.jsonl");
    result.transcript.export_transcript(&path).unwrap();
    let lines: Vec<String> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();

    // Gap.
    let mut gapped = lines.clone();
    gapped.remove(5);
    std::fs::write(&path, gapped.join("\n")).unwrap();
    assert!(KnowledgeBase::load_transcript(&path).is_err());

    // Reorder.
    let mut reordered = lines.clone();
    reordered.swap(1, 2);
    std::fs::write(&path, reordered.join("\n")).unwrap();
    assert!(KnowledgeBase::load_transcript(&path).is_err());

    // Agent mismatch: rewrite a response's agent_id.
    let mut mismatched = lines.clone();
    let mut value: serde_json::Value = serde_json::from_str(&mismatched[2]).unwrap();
    value["kind"]["agent_response"]["agent_id"] = serde_json::Value::from("re");
    mismatched[2] = value.to_string();
    std::fs::write(&path, mismatched.join("\n")).unwrap();
    assert!(KnowledgeBase::load_transcript(&path).is_err());

    println!(
        "PASS criterion 2: 13-entry transcript with strict alternation; gap, reorder, and \
         agent-mismatch tampering all rejected on load"
    );
}

fn run_cli(args: &[&str], cwd: &Path) -> std::process::Output {
    Command::new(bin())
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_3_replay_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    assert!(run_cli(&["init", "--out", "fixtures"], root).status.success());
    for out in ["runA", "runB"] {
        let output = run_cli(
            &[
                "run",
                "--task",
                "fixtures/task.json",
                "--plan",
                "fixtures/plan.json",
                "--roster",
                "fixtures/roster.json",
                "--script",
                "fixtures/script.json",
                "--out",
                out,
            ],
            root,
        );
        assert!(output.status.success(), "{output:?}");
    }
    for file in ["transcript.jsonl", "run_meta.json", "final_output.txt"] {
        let a = std::fs::read(root.join("runA").join(file)).unwrap();
        let b = std::fs::read(root.join("runB").join(file)).unwrap();
        assert_eq!(a, b, "{file} differs between identical runs");
    }
    println!(
        "PASS criterion 3: two identical scripted runs produced byte-identical transcript \
         and metadata files"
    );
}

#[test]
fn criterion_4_token_budget_and_elision() {
    let budget = TokenBudget::new(16384, 4096, 4);
    let prompt_of = |chars: usize| Prompt {
        segments: vec![Segment {
            label: SegmentLabel::SubtaskInstruction,
            text: "x".repeat(chars),
        }],
        target_agent_id: "po".to_string(),
        subtask_index: 1,
    };
    // Arithmetic oracle: 40000/4 = 10000 <= 12288; 60000/4 = 15000 > 12288.
    assert!(check_budget(&prompt_of(40_000), &budget).fits);
    assert!(!check_budget(&prompt_of(60_000), &budget).fits);

    let (mut task, plan) = builtin_demo_task();
    let roster = builtin_roster();
    let po = roster.agent("po").unwrap();
    // Both context documents oversized: both must go, highest rank first.
    task.context_documents[0].body = "a".repeat(55_000);
    task.context_documents[1].body = "b".repeat(30_000);
    let prompt = compose_initial(po, &task, &plan.subtasks[0]);
    let outcome = elide_to_fit(&prompt, &task, &budget).unwrap();
    assert_eq!(
        outcome.dropped_titles,
        vec!["Product Vision (NABC)", "Mobile Delivery MVP"]
    );
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

    // A profile alone exceeding the budget cannot be elided away.
    let mut heavy = po.clone();
    heavy.tone_spec = "z".repeat(100_000);
    let heavy_prompt = compose_initial(&heavy, &task, &plan.subtasks[0]);
    assert!(matches!(
        elide_to_fit(&heavy_prompt, &task, &budget),
        Err(PromptError::BudgetUnsatisfiable { .. })
    ));
    println!(
        "PASS criterion 4: budget arithmetic matches the oracle; elision drops context in \
         rank order and never touches fixed segments; oversized profile is unsatisfiable"
    );
}

fn full_record(variant: &str, respondent: usize, scores: [u8; 7], overall: u8) -> RatingRecord {
    let map: BTreeMap<StatementId, u8> = StatementId::ALL
        .iter()
        .zip(scores)
        .map(|(id, v)| (*id, v))
        .collect();
    RatingRecord {
        respondent_id: format!("r{respondent}"),
        variant_id: variant.to_string(),
        scores: Some(map),
        overall,
        open_answers: BTreeMap::new(),
    }
}

#[test]
fn criterion_5_evaluation_arithmetic() {
    // Twelve ratings whose S1 scores sum to 50 display as 4.17.
    let s1 = [5u8, 5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4];
    assert_eq!(s1.iter().map(|v| *v as u32).sum::<u32>(), 50);
    let records: Vec<RatingRecord> = s1
        .iter()
        .enumerate()
        .map(|(i, &v)| full_record("us-1 (v.1)", i, [v, 4, 4, 4, 4, 4, 4], 4))
        .collect();
    let report = compute_report(&records).unwrap();
    assert_eq!(
        report.per_statement_mean.as_ref().unwrap()[&StatementId::S1].to_string(),
        "4.17"
    );

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=15);
        let records: Vec<RatingRecord> = (0..n)
            .map(|i| {
                let mut scores = [0u8; 7];
                for s in &mut scores {
                    *s = rng.gen_range(1..=5);
                }
                full_record("v", i, scores, rng.gen_range(1..=5))
            })
            .collect();
        let report = compute_report(&records).unwrap();

        // Distribution counts sum to n; distribution-derived sums are exact.
        for id in StatementId::ALL {
            let counts = report.distribution.as_ref().unwrap()[&id];
            assert_eq!(counts.iter().sum::<u32>() as usize, n);
            let dist_sum: u64 = counts
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u64 + 1) * *c as u64)
                .sum();
            let rec_sum: u64 = records
                .iter()
                .map(|r| r.scores.as_ref().unwrap()[&id] as u64)
                .sum();
            assert_eq!(dist_sum, rec_sum);
        }

        // Permutation invariance.
        let mut shuffled = records.clone();
        shuffled.shuffle(&mut rng);
        let report_shuffled = compute_report(&shuffled).unwrap();
        assert_eq!(report.per_statement_mean, report_shuffled.per_statement_mean);
        assert_eq!(report.overall_mean, report_shuffled.overall_mean);

        // Monotonicity: appending a uniform record moves each mean toward it.
        let v: u8 = rng.gen_range(1..=5);
        let mut extended = records.clone();
        extended.push(full_record("v", n, [v; 7], v));
        let after = compute_report(&extended).unwrap();
        let target = Mean::from_sum(v as u64, 1);
        for id in StatementId::ALL {
            let old = report.per_statement_mean.as_ref().unwrap()[&id];
            let new = after.per_statement_mean.as_ref().unwrap()[&id];
            if target >= old {
                assert!(new >= old && new <= target);
            } else {
                assert!(new <= old && new >= target);
            }
        }
    }
    println!(
        "PASS criterion 5: 50/12 displays as 4.17; distribution sums and exact pre-rounding \
         equality hold; permutation invariance and monotonicity verified over 1000 random sets"
    );
}

#[test]
fn criterion_6_table_rendering_golden_match() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    assert!(run_cli(&["init", "--out", "fixtures"], root).status.success());
    let output = run_cli(
        &[
            "eval",
            "report",
            "--ratings",
            "fixtures/ratings.csv",
            "--out",
            "table.txt",
        ],
        root,
    );
    assert!(output.status.success(), "{output:?}");
    let rendered = std::fs::read_to_string(root.join("table.txt")).unwrap();
    let golden = include_str!("golden/report_table.txt");
    assert_eq!(rendered, golden);
    // Original row shape: dashes for every statement, overall only.
    let original_row = rendered.lines().nth(1).unwrap();
    assert_eq!(original_row.matches(" -").count(), 7);
    assert!(original_row.trim_end().ends_with("3.33"));
    println!("PASS criterion 6: report table byte-matches the golden file; originals render dashes");
}

#[test]
fn criterion_7_survey_question_counts() {
    let story = |id: &str, provenance: Provenance| UserStory {
        id: id.to_string(),
        title: id.to_string(),
        narrative: Narrative::new("user", "something", None).unwrap(),
        description: String::new(),
        acceptance_criteria: vec![],
        provenance,
    };
    let improved = |id: &str, version: &str| {
        story(
            id,
            Provenance::Improved {
                model_tag: "gpt-test".to_string(),
                version_label: version.to_string(),
            },
        )
    };
    let variants = vec![
        story("us-1", Provenance::Original),
        improved("us-1", "v.1"),
        improved("us-1", "v.2"),
        story("us-2", Provenance::Original),
        improved("us-2", "v.1"),
        improved("us-2", "v.2"),
    ];
    let survey = export_survey(&variants);

    // Brute-force enumeration over the rendered document itself.
    let rendered = survey.render();
    let rating_lines = rendered
        .lines()
        .filter(|l| l.contains("[Rating 1-5]"))
        .count();
    let open_lines = rendered.lines().filter(|l| l.contains("[Open]")).count();
    assert_eq!(rating_lines, 34);
    assert_eq!(open_lines, 12);
    assert_eq!(survey.rating_count(), 34);
    assert_eq!(survey.open_ended_count(), 12);
    assert_eq!(
        survey
            .questions
            .iter()
            .filter(|q| q.kind == QuestionKind::Rating)
            .count(),
        34
    );
    println!(
        "PASS criterion 7: 2 originals x 2 improved versions each yield exactly 34 rating \
         and 12 open-ended questions, counted from the rendered document"
    );
}

#[test]
fn criterion_8_story_round_trip() {
    let words = [
        "alpha", "bravo", "delta", "parcel", "printer", "route", "driver", "scan", "label",
        "sync", "mobile", "device", "depot", "signature", "overview",
    ];
    let mut rng = StdRng::seed_from_u64(42);
    let mut phrase = |rng: &mut StdRng| {
        let n = rng.gen_range(1..6);
        (0..n)
            .map(|_| words[rng.gen_range(0..words.len())])
            .collect::<Vec<_>>()
            .join(" ")
    };
    for _ in 0..1000 {
        let benefit = rng.gen_bool(0.7).then(|| phrase(&mut rng));
        let narrative = Narrative::new(phrase(&mut rng), phrase(&mut rng), benefit).unwrap();
        let rendered = render_narrative(&narrative);
        assert_eq!(parse_narrative(&rendered).unwrap(), narrative);
    }

    let fixture = "As a delivery person, I want to synchronize my mobile device with the \
                   mobile printer so that I can print labels";
    let parsed = parse_narrative(fixture).unwrap();
    assert_eq!(parsed.role, "delivery person");
    assert_eq!(parsed.benefit.as_deref(), Some("I can print labels"));
    println!(
        "PASS criterion 8: parse/render round-trip holds on 1000 generated narratives; the \
         mobile-printer fixture parses with role and benefit"
    );
}

#[test]
fn criterion_9_plan_generation_loop() {
    let (task, plan) = builtin_demo_task();
    let roster = builtin_roster();

    let backend = ScriptedBackend::new(vec![
        "not a plan at all".to_string(),
        render_plan_wire(&plan),
    ]);
    let generated = generate_plan(&task, &roster, &backend, 3).unwrap();
    assert_eq!(generated.attempts, 2);
    assert!(alas::task::plan_is_valid(&alas::task::validate_plan(
        &generated.plan,
        &roster
    )));

    let stubborn = ScriptedBackend::new(vec!["junk".into(), "junk".into(), "junk".into()]);
    match generate_plan(&task, &roster, &stubborn, 3) {
        Err(TaskError::PlanGenerationFailed {
            attempts,
            last_violations,
        }) => {
            assert_eq!(attempts, 3);
            assert!(!last_violations.is_empty());
        }
        other => panic!("expected PlanGenerationFailed, got {other:?}"),
    }
    println!(
        "PASS criterion 9: malformed-then-valid script succeeds on attempt 2; always-malformed \
         script fails after 3 attempts and no invalid plan escapes"
    );
}

#[test]
fn criterion_10_end_to_end_smoke() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    let steps: Vec<Vec<&str>> = vec![
        vec!["init", "--out", "ws"],
        vec!["plan", "validate", "--plan", "ws/plan.json", "--roster", "ws/roster.json"],
        vec![
            "run", "--task", "ws/task.json", "--plan", "ws/plan.json", "--roster",
            "ws/roster.json", "--dry-run",
        ],
        vec![
            "run", "--task", "ws/task.json", "--plan", "ws/plan.json", "--roster",
            "ws/roster.json", "--script", "ws/script.json", "--out", "ws/run",
        ],
        vec!["eval", "report", "--ratings", "ws/ratings.csv"],
    ];
    for step in &steps {
        let output = run_cli(step, root);
        assert!(
            output.status.success(),
            "step {:?} failed: {}",
            step,
            String::from_utf8_lossy(&output.stderr)
        );
    }
    for artifact in [
        "ws/task.json",
        "ws/plan.json",
        "ws/roster.json",
        "ws/stories.json",
        "ws/script.json",
        "ws/ratings.csv",
        "ws/run/transcript.jsonl",
        "ws/run/run_meta.json",
        "ws/run/final_output.txt",
        "ws/run/improved_story.json",
    ] {
        assert!(root.join(artifact).exists(), "{artifact} missing");
    }
    assert!(started.elapsed() < Duration::from_secs(5));
    println!(
        "PASS criterion 10: init, plan validate, dry run, scripted run, and eval report all \
         exit 0 with every artifact present, in {:?}",
        started.elapsed()
    );
}
