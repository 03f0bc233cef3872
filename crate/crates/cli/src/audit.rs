//! Audit planner, parallel runner, and report rendering.
//!
//! A plan is the cross product of registered checks and the corpus instances
//! they apply to. Tasks run on a fixed-size thread pool with work stealing by
//! atomic index; results merge in task order, so reports are byte-for-byte
//! reproducible regardless of thread count. Timing goes to stderr only.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use semiprimary_core::Error;
use serde::Serialize;

use crate::checks::{all_checks, CaseReport, Check};
use crate::corpus::{corpus, Instance, Profile};

/// One (check, instance) unit of work.
struct Task<'a> {
    check: &'a Check,
    instance: &'a Instance,
}

/// Outcome of one task after running.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum Outcome {
    Passed { cases: u64 },
    Failed { cases: u64, failures: Vec<String> },
    Skipped { reason: String },
    Errored { error: String },
}

#[derive(Clone, Debug, Serialize)]
struct TaskRecord {
    check: String,
    instance: String,
    #[serde(flatten)]
    outcome: Outcome,
}

/// Aggregated per-check block of the final report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub id: String,
    pub law: String,
    pub instances: u64,
    pub cases: u64,
    pub failures: Vec<String>,
    pub skips: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub profile: String,
    pub checks: Vec<CheckSummary>,
    pub total_instances: u64,
    pub total_cases: u64,
    pub failed_checks: u64,
    pub skipped_tasks: u64,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.failed_checks == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("audit profile: {}\n", self.profile));
        for c in &self.checks {
            let status = if !c.failures.is_empty() {
                "FAIL"
            } else if c.instances == 0 {
                "SKIP"
            } else {
                "ok"
            };
            out.push_str(&format!(
                "{status:>4}  {:<40} instances {:>3}  cases {:>7}\n",
                c.id, c.instances, c.cases
            ));
            for f in &c.failures {
                out.push_str(&format!("      ! {f}\n"));
            }
            for s in &c.skips {
                out.push_str(&format!("      ~ skipped: {s}\n"));
            }
        }
        out.push_str(&format!(
            "checks {} | instances {} | cases {} | failing checks {} | skipped tasks {}\n",
            self.checks.len(),
            self.total_instances,
            self.total_cases,
            self.failed_checks,
            self.skipped_tasks
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Errors surfaced before any task runs.
#[derive(Debug)]
pub enum PlanError {
    UnknownCheckId(String),
    EmptyCheck(String),
}

impl std::fmt::Display for PlanError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlanError::UnknownCheckId(id) => write!(f, "unknown check id: {id}"),
            PlanError::EmptyCheck(id) => {
                write!(f, "check {id} matches no instance in this profile")
            }
        }
    }
}

/// Runs the audit and returns the aggregated report.
pub fn run_audit(
    profile: Profile,
    id_filter: Option<&[String]>,
    threads: usize,
) -> Result<AuditReport, PlanError> {
    let checks = all_checks();
    let instances = corpus(profile);

    let selected: Vec<&Check> = match id_filter {
        None => checks.iter().collect(),
        Some(ids) => {
            let mut sel = Vec::new();
            for id in ids {
                match checks.iter().find(|c| c.id == id) {
                    Some(c) => sel.push(c),
                    None => return Err(PlanError::UnknownCheckId(id.clone())),
                }
            }
            sel
        }
    };

    let mut tasks: Vec<Task<'_>> = Vec::new();
    for check in &selected {
        let mine: Vec<&Instance> = instances.iter().filter(|i| (check.applies)(i)).collect();
        if mine.is_empty() {
            return Err(PlanError::EmptyCheck(check.id.to_string()));
        }
        for instance in mine {
            tasks.push(Task { check, instance });
        }
    }

    let records = run_tasks(&tasks, threads.max(1));

    // Aggregate in registry order for reproducible output.
    let mut summaries: Vec<CheckSummary> = Vec::new();
    let mut total_instances = 0u64;
    let mut total_cases = 0u64;
    let mut failed_checks = 0u64;
    let mut skipped_tasks = 0u64;
    for check in &selected {
        let mut summary = CheckSummary {
            id: check.id.to_string(),
            law: check.law.to_string(),
            instances: 0,
            cases: 0,
            failures: Vec::new(),
            skips: Vec::new(),
        };
        for rec in records.iter().filter(|r| r.check == check.id) {
            match &rec.outcome {
                Outcome::Passed { cases } => {
                    summary.instances += 1;
                    summary.cases += cases;
                }
                Outcome::Failed { cases, failures } => {
                    summary.instances += 1;
                    summary.cases += cases;
                    for f in failures {
                        if summary.failures.len() < 16 {
                            summary.failures.push(format!("[{}] {f}", rec.instance));
                        }
                    }
                }
                Outcome::Skipped { reason } => {
                    skipped_tasks += 1;
                    if summary.skips.len() < 8 {
                        summary.skips.push(format!("[{}] {reason}", rec.instance));
                    }
                }
                Outcome::Errored { error } => {
                    summary.instances += 1;
                    summary.failures.push(format!("[{}] internal error: {error}", rec.instance));
                }
            }
        }
        total_instances += summary.instances;
        total_cases += summary.cases;
        if !summary.failures.is_empty() {
            failed_checks += 1;
        }
        summaries.push(summary);
    }

    Ok(AuditReport {
        profile: profile.as_str().to_string(),
        checks: summaries,
        total_instances,
        total_cases,
        failed_checks,
        skipped_tasks,
    })
}

fn run_tasks(tasks: &[Task<'_>], threads: usize) -> Vec<TaskRecord> {
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<TaskRecord>>> =
        (0..tasks.len()).map(|_| Mutex::new(None)).collect();
    let started = Instant::now();

    std::thread::scope(|scope| {
        for _ in 0..threads.min(tasks.len().max(1)) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= tasks.len() {
                    break;
                }
                let task = &tasks[idx];
                let t0 = Instant::now();
                let outcome = match (task.check.run)(task.instance) {
                    Ok(CaseReport { cases, failures }) if failures.is_empty() => {
                        Outcome::Passed { cases }
                    }
                    Ok(CaseReport { cases, failures }) => Outcome::Failed { cases, failures },
                    Err(Error::Budget(msg)) => Outcome::Skipped { reason: msg },
                    Err(e) => Outcome::Errored { error: e.to_string() },
                };
                let elapsed = t0.elapsed();
                if elapsed.as_millis() > 2000 {
                    eprintln!(
                        "[audit] slow task {} on {}: {:.1}s",
                        task.check.id,
                        task.instance.name,
                        elapsed.as_secs_f64()
                    );
                }
                *slots[idx].lock().unwrap() = Some(TaskRecord {
                    check: task.check.id.to_string(),
                    instance: task.instance.name.clone(),
                    outcome,
                });
            });
        }
    });

    eprintln!(
        "[audit] {} tasks in {:.1}s on {} thread(s)",
        tasks.len(),
        started.elapsed().as_secs_f64(),
        threads
    );

    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every task slot is filled"))
        .collect()
}

/// Lists registered checks as "id: law" lines.
pub fn render_check_list() -> String {
    let mut out = String::new();
    for c in all_checks() {
        out.push_str(&format!("{:<40} {}\n", c.id, c.law.split_whitespace().collect::<Vec<_>>().join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_plan_error() {
        let err = run_audit(Profile::Small, Some(&["no-such-check".to_string()]), 1);
        assert!(matches!(err, Err(PlanError::UnknownCheckId(_))));
    }

    #[test]
    fn single_check_runs_clean() {
        let report =
            run_audit(Profile::Small, Some(&["integer-exponents".to_string()]), 2).unwrap();
        assert!(report.ok(), "{}", report.render_text());
        assert_eq!(report.checks.len(), 1);
        assert!(report.total_cases >= 199);
        let json = report.render_json();
        assert!(json.contains("integer-exponents"));
    }
}
