//! Command-line front end for `ctrlab-core`: input schemas, canonical JSON
//! reports, a rayon executor and report verification.

pub mod encode;
pub mod error;
pub mod input;
pub mod parallel;
pub mod report;
pub mod request;
pub mod run;

pub use error::CliError;
pub use report::{Format, Report};
pub use request::Request;
pub use run::{execute, Cli, Outcome};
