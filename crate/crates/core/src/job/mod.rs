//! Job scripts: parsing, execution and the report document.

mod emit;
mod examples;
mod run;
mod script;

pub use emit::{render_report, validate_report, REPORT_SCHEMA};
pub use examples::{example_script, EXAMPLES};
pub use run::{
    run_job, Fragment, FragmentStatus, IdealEcho, JobConfig, Report, RingEcho, D_SEQUENCE_SAMPLE, TIER1_MAX_VARS,
};
pub use script::{parse_job, IdealExpr, JobScript, Located, ReportCmd, Statement};
