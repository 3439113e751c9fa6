//! Reports, file formats and configuration for the `pavstat` command-line
//! tool. The mathematics lives in `pavstat_core`.

pub mod config;
pub mod export;
pub mod render;
pub mod report;
pub mod suites;

pub use config::Config;
pub use report::Report;
pub use suites::{Runner, Suite};

/// Runs `suite` (or every suite for [`Suite::All`]) under `config`.
pub fn verify(config: Config, suite: Suite) -> Report {
    let mut runner = Runner::new(config);
    runner.run(suite);
    runner.finish()
}
