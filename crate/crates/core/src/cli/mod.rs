//! Batch experiment runner behind the `hyperf` binary: configuration,
//! deterministic reports, and suite execution.

pub mod config;
pub mod report;
pub mod runner;

pub use config::{ExperimentConfig, InstanceChoice, OutputFormat, PValue, Suite};
pub use report::{fmt_float, ReportDocument, SuiteRecord};
pub use runner::{build_symbol, run, sweep};
