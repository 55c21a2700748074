use knotcert::catalogue::LoadedLink;
use knotcert::theoremlab::{certify_bound, BoundReport, Verdict};
use serde::Serialize;

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RecordOutcome {
    Certified {
        name: String,
        verdict: Verdict,
        expected_ok: bool,
        report: Box<BoundReport>,
    },
    Rejected {
        name: String,
        error: String,
    },
}

impl RecordOutcome {
    pub fn fails(&self) -> bool {
        matches!(self, RecordOutcome::Certified { verdict: Verdict::Failed, .. } | RecordOutcome::Certified { expected_ok: false, .. })
    }
}

#[derive(Default, Serialize)]
pub struct Summary {
    pub records: usize,
    pub holds: usize,
    pub degraded: usize,
    pub failed: usize,
    pub expected_mismatches: usize,
    pub rejected: usize,
}

impl Summary {
    pub fn add(&mut self, o: &RecordOutcome) {
        self.records += 1;
        match o {
            RecordOutcome::Certified { verdict, expected_ok, .. } => {
                match verdict {
                    Verdict::Holds => self.holds += 1,
                    Verdict::Degraded => self.degraded += 1,
                    Verdict::Failed => self.failed += 1,
                }
                if !expected_ok {
                    self.expected_mismatches += 1;
                }
            }
            RecordOutcome::Rejected { .. } => self.rejected += 1,
        }
    }
}

pub fn verify(link: &LoadedLink) -> RecordOutcome {
    match certify_bound(&link.name, &link.diagram) {
        Ok(report) => {
            let expected_ok = link.expected.signature.map_or(true, |s| s == report.sigma)
                && link.expected.b1.map_or(true, |b| b == report.b1);
            RecordOutcome::Certified { name: link.name.clone(), verdict: report.verdict, expected_ok, report: Box::new(report) }
        }
        Err(e) => RecordOutcome::Rejected { name: link.name.clone(), error: e.to_string() },
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "HOLDS",
        Verdict::Degraded => "DEGRADED",
        Verdict::Failed => "FAILED",
    }
}

pub fn render_text(o: &RecordOutcome) -> String {
    match o {
        RecordOutcome::Certified { name, verdict, expected_ok, report } => {
            let failing: Vec<&str> =
                report.all_inequalities().filter(|i| !i.holds).map(|i| i.name.as_str()).collect();
            let mut line = format!(
                "{name}: {} sigma={} b1={} c={} reduced_c={} min_fraction={}",
                verdict_name(*verdict),
                report.sigma,
                report.b1,
                report.input.c,
                report.reduced.c,
                report.min_fraction
            );
            if !failing.is_empty() {
                line.push_str(&format!(" failing=[{}]", failing.join(",")));
            }
            if !expected_ok {
                line.push_str(" EXPECTED-MISMATCH");
            }
            line
        }
        RecordOutcome::Rejected { name, error } => format!("{name}: REJECTED {error}"),
    }
}
