use std::fmt::Write as _;
use std::time::Duration;

use pavstat_core::{Mismatch, Verification};
use serde_json::{json, Value};

use crate::suites::Suite;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub suite: Suite,
    pub label: String,
    pub params: String,
    pub outcome: Verification,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// Informational lines that are not pass/fail, such as the list of
/// non-log-concave `A_{n,k}`.
#[derive(Debug, Clone)]
pub struct Note {
    pub suite: Suite,
    pub text: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub notes: Vec<Note>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn render_text(&self, timings: bool) -> String {
        let label_width = self
            .checks
            .iter()
            .map(|c| c.label.chars().count())
            .max()
            .unwrap_or(0);
        let param_width = self
            .checks
            .iter()
            .map(|c| c.params.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let mut line = format!(
                "{status}  {:<12} {:<lw$}  {:<pw$}",
                c.suite.name(),
                c.label,
                c.params,
                lw = label_width,
                pw = param_width,
            );
            if timings {
                let _ = write!(line, "  {}", format_duration(c.elapsed));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if let Err(m) = &c.outcome {
                out.push_str(&render_mismatch(m));
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "NOTE  {:<12} {}", n.suite.name(), n.text);
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        );
        out
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "suite": c.suite.name(),
                    "label": c.label,
                    "params": c.params,
                    "status": if c.passed() { "pass" } else { "fail" },
                });
                if timings {
                    v["seconds"] = json!(c.elapsed.as_secs_f64());
                }
                if let Err(m) = &c.outcome {
                    v["mismatch"] = json!({
                        "label": m.label,
                        "expected": m.expected,
                        "actual": m.actual,
                    });
                }
                v
            })
            .collect();
        let notes: Vec<Value> = self
            .notes
            .iter()
            .map(|n| json!({ "suite": n.suite.name(), "text": n.text }))
            .collect();
        json!({
            "passed": self.all_passed(),
            "checks": checks,
            "notes": notes,
        })
    }
}

fn format_duration(d: Duration) -> String {
    let s = d.as_secs_f64();
    if s >= 1.0 {
        format!("{s:.2}s")
    } else {
        format!("{:.1}ms", s * 1e3)
    }
}

/// Both sides in full, then the terms present on only one side.
pub fn render_mismatch(m: &Mismatch) -> String {
    let mut out = format!(
        "      {}\n      expected: {}\n      actual:   {}\n",
        m.label, m.expected, m.actual
    );
    let (missing, extra) = term_diff(&m.expected, &m.actual);
    for t in missing {
        let _ = writeln!(out, "      - {t}");
    }
    for t in extra {
        let _ = writeln!(out, "      + {t}");
    }
    out
}

/// Splits a rendered polynomial such as `1 - 2*q*t + t^2` into signed terms.
fn signed_terms(rendered: &str) -> Vec<String> {
    fn push(terms: &mut Vec<String>, sign: char, body: &str) {
        match body.strip_prefix('-') {
            Some(rest) => terms.push(format!("{}{rest}", if sign == '+' { '-' } else { '+' })),
            None => terms.push(format!("{sign}{body}")),
        }
    }
    let mut terms = Vec::new();
    let mut sign = '+';
    for tok in rendered.split(' ').filter(|t| !t.is_empty()) {
        match tok {
            "+" => sign = '+',
            "-" => sign = '-',
            body => push(&mut terms, sign, body),
        }
    }
    terms
}

/// Terms of `expected` absent from `actual`, and vice versa.
pub fn term_diff(expected: &str, actual: &str) -> (Vec<String>, Vec<String>) {
    let e = signed_terms(expected);
    let a = signed_terms(actual);
    let missing = e.iter().filter(|t| !a.contains(t)).cloned().collect();
    let extra = a.iter().filter(|t| !e.contains(t)).cloned().collect();
    (missing, extra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_split_on_signs() {
        assert_eq!(signed_terms("t^2 + q*t"), ["+t^2", "+q*t"]);
        assert_eq!(signed_terms("1 - 2*q*t"), ["+1", "-2*q*t"]);
        assert_eq!(signed_terms("-t + t^2"), ["-t", "+t^2"]);
    }

    #[test]
    fn diff_reports_both_sides() {
        let (missing, extra) = term_diff("q + q^2", "2*q + q^2");
        assert_eq!(missing, ["+q"]);
        assert_eq!(extra, ["+2*q"]);
    }
}
