use std::fmt::Write as _;
use std::time::Duration;

use ptosc_core::format::{json_float, json_string};

use crate::config::Format;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
}

/// Outcome of one suite. `passed` holds iff every record passed.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            records: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Records `measured <= threshold`; NaN never passes.
    pub fn check(&mut self, name: impl Into<String>, measured: f64, threshold: f64) {
        self.records.push(CheckRecord {
            name: name.into(),
            measured,
            threshold,
            passed: measured <= threshold,
        });
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    fn json(&self) -> String {
        let checks = self
            .records
            .iter()
            .map(|r| {
                format!(
                    "{{\"name\":{},\"measured\":{},\"threshold\":{},\"passed\":{}}}",
                    json_string(&r.name),
                    json_float(r.measured),
                    json_float(r.threshold),
                    r.passed
                )
            })
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"suite\":{},\"passed\":{},\"checks\":[{}]}}",
            json_string(&self.suite),
            self.passed(),
            checks
        )
    }

    fn csv_rows(&self, out: &mut String) {
        for r in &self.records {
            let _ = writeln!(
                out,
                "{},\"{}\",{:e},{:e},{}",
                self.suite,
                r.name.replace('"', "\"\""),
                r.measured,
                r.threshold,
                r.passed
            );
        }
    }

    fn text(&self, out: &mut String) {
        let _ = writeln!(out, "suite {}", self.suite);
        for r in &self.records {
            let _ = writeln!(
                out,
                "  [{}] {}: {:.3e} (threshold {:.1e})",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.measured,
                r.threshold
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "  {}: {} checks, {} failed, {:.3}s",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.records.len(),
            failed,
            self.elapsed.as_secs_f64()
        );
    }
}

pub const CSV_HEADER: &str = "suite,name,measured,threshold,passed";

/// Renders one or more reports. JSON and CSV carry no timing so that
/// identical runs produce identical bytes.
pub fn render(reports: &[VerificationReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            if let [single] = reports {
                out.push_str(&single.json());
            } else {
                let suites = reports.iter().map(|r| r.json()).collect::<Vec<_>>().join(",");
                let passed = reports.iter().all(|r| r.passed());
                let _ = write!(out, "{{\"passed\":{passed},\"suites\":[{suites}]}}");
            }
            out.push('\n');
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in reports {
                r.csv_rows(&mut out);
            }
        }
        Format::Text => {
            for r in reports {
                r.text(&mut out);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new("demo");
        r.check("a", 1e-12, 1e-10);
        r.check("b", 0.5, 0.1);
        r.check("c", f64::NAN, 1.0);
        r.elapsed = Duration::from_millis(12);
        r
    }

    #[test]
    fn status_follows_records() {
        let r = sample();
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 2);
        let mut ok = VerificationReport::new("ok");
        ok.check("x", 0.0, 0.0);
        assert!(ok.passed());
    }

    #[test]
    fn json_has_fixed_layout() {
        let r = sample();
        let json = render(std::slice::from_ref(&r), Format::Json);
        assert_eq!(
            json,
            "{\"suite\":\"demo\",\"passed\":false,\"checks\":[\
             {\"name\":\"a\",\"measured\":9.9999999999999998e-13,\"threshold\":1.0000000000000000e-10,\"passed\":true},\
             {\"name\":\"b\",\"measured\":5.0000000000000000e-1,\"threshold\":1.0000000000000001e-1,\"passed\":false},\
             {\"name\":\"c\",\"measured\":null,\"threshold\":1.0000000000000000e0,\"passed\":false}]}\n"
        );
        let mut later = r.clone();
        later.elapsed = Duration::from_secs(3);
        assert_eq!(json, render(&[later], Format::Json));
    }

    #[test]
    fn csv_and_text() {
        let csv = render(&[sample()], Format::Csv);
        assert!(csv.starts_with("suite,name,measured,threshold,passed\ndemo,\"a\",1e-12,"));
        let text = render(&[sample()], Format::Text);
        assert!(text.contains("[FAIL] b"));
        assert!(text.contains("FAIL: 3 checks, 2 failed"));
    }
}
