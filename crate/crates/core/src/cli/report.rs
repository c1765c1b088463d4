//! Deterministic report documents.
//!
//! A report is a tree of suite records rendered either as an indented
//! key-value text document or as a CSV summary table. Rendering is
//! byte-deterministic for a fixed config and seed: records are sorted by
//! (suite, parameters), floats print as 17-significant-digit scientific
//! decimals (shortest round-trip width for f64), and exact rationals print
//! as `num/den` strings. Wall-clock timings deliberately stay out of the
//! document (they go to stderr) so identical configs diff byte-for-byte.

/// 17 significant digits round-trip any f64.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One named check with a severity class: `hard` checks gate the process
/// exit status, soft checks only downgrade to warnings (used for the
/// unknown-constant inequality families).
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub hard: bool,
    pub passed: bool,
    pub detail: String,
}

/// One per-function row of an inequality record.
#[derive(Debug, Clone, PartialEq)]
pub struct EntryRow {
    pub index: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// One suite execution record.
#[derive(Debug, Clone, Default)]
pub struct SuiteRecord {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub metrics: Vec<(String, String)>,
    pub entries: Vec<EntryRow>,
    pub checks: Vec<CheckRecord>,
}

impl SuiteRecord {
    pub fn new(suite: &str) -> Self {
        Self { suite: suite.to_string(), ..Self::default() }
    }

    pub fn param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn metric(&mut self, key: &str, value: impl Into<String>) {
        self.metrics.push((key.to_string(), value.into()));
    }

    pub fn check(&mut self, name: &str, hard: bool, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckRecord { name: name.to_string(), hard, passed, detail: detail.into() });
    }

    fn params_key(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.hard)
    }
}

/// The full document: config echo plus suite records.
#[derive(Debug, Clone, Default)]
pub struct ReportDocument {
    pub config_echo: Vec<(String, String)>,
    pub records: Vec<SuiteRecord>,
}

impl ReportDocument {
    pub fn new(config_echo: Vec<(String, String)>) -> Self {
        Self { config_echo, records: Vec::new() }
    }

    pub fn push(&mut self, record: SuiteRecord) {
        self.records.push(record);
    }

    /// Sorts records by suite name, then rendered parameters (the rendering
    /// contract; execution order does not matter).
    pub fn sort_records(&mut self) {
        self.records.sort_by(|a, b| {
            (a.suite.as_str(), a.params_key()).cmp(&(b.suite.as_str(), b.params_key()))
        });
    }

    pub fn hard_failures(&self) -> usize {
        self.records
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| c.hard && !c.passed)
            .count()
    }

    pub fn warnings(&self) -> usize {
        self.records
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| !c.hard && !c.passed)
            .count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("hyperf report\nformat-version 1\n\nconfig\n");
        for (key, value) in &self.config_echo {
            out.push_str(&format!("  {key} = {value}\n"));
        }
        for record in &self.records {
            out.push_str(&format!("\nsuite {}\n", record.suite));
            for (key, value) in &record.params {
                out.push_str(&format!("  param {key} = {value}\n"));
            }
            for (key, value) in &record.metrics {
                out.push_str(&format!("  metric {key} = {value}\n"));
            }
            if !record.entries.is_empty() {
                out.push_str("  entries\n");
                for row in &record.entries {
                    out.push_str(&format!(
                        "    {} lhs = {} rhs = {} ratio = {}\n",
                        row.index,
                        fmt_float(row.lhs),
                        fmt_float(row.rhs),
                        fmt_float(row.ratio)
                    ));
                }
            }
            for check in &record.checks {
                let class = if check.hard { "hard" } else { "soft" };
                let verdict = if check.passed {
                    "pass"
                } else if check.hard {
                    "FAIL"
                } else {
                    "warn"
                };
                out.push_str(&format!("  check {} [{class}] {verdict}", check.name));
                if !check.detail.is_empty() {
                    out.push_str(&format!(" ({})", check.detail));
                }
                out.push('\n');
            }
        }
        out.push_str("\nsummary\n");
        for record in &self.records {
            out.push_str(&format!(
                "  suite {} [{}] {}\n",
                record.suite,
                record.params_key(),
                if record.passed() { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!("  hard-failures = {}\n", self.hard_failures()));
        out.push_str(&format!("  warnings = {}\n", self.warnings()));
        out
    }

    /// CSV summary: one row per record metric named `sup_ratio` (or the
    /// first metric otherwise), plus the pass verdict.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("suite,params,metric,value,pass\n");
        for record in &self.records {
            let metric = record
                .metrics
                .iter()
                .find(|(k, _)| k == "sup_ratio")
                .or_else(|| record.metrics.first());
            let (name, value) = match metric {
                Some((k, v)) => (k.as_str(), v.as_str()),
                None => ("checks", ""),
            };
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                record.suite,
                record.params_key().replace(',', ";"),
                name,
                value,
                if record.passed() { "pass" } else { "fail" }
            ));
        }
        out
    }
}
