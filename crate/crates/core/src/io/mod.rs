//! Text formats, invariant reports and the randomized check suites.

mod checks;
mod format;
mod matrices;
mod report;

pub use checks::{run_checks, CheckReport, SuiteResult, DEFAULT_TRIALS};
pub use format::{format_combination, parse_algebra, serialize_algebra, AlgebraFile, BracketLine, EpsLine};
pub use matrices::{parse_dual, MatrixFile};
pub use report::{build_report, ReportDocument, Value, REPORT_TRIALS};
