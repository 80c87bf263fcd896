//! File formats, the test-group catalog and the verification suite.

pub mod analyze;
pub mod caps;
pub mod catalog;
pub mod checks;
pub mod classfile;
pub mod error;
pub mod groupfile;
pub mod rankfile;
pub mod recipe;
pub mod report;
pub mod search;

pub use error::{Error, Result};
