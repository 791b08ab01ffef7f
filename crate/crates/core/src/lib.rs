pub mod algebra;
pub mod bialgebroid;
pub mod checks;
pub mod cli;
pub mod depth_two;
pub mod error;
pub mod field;
pub mod hopf;
pub mod hopf_algebroid;
pub mod instance;
pub mod linalg;
pub mod report;
pub mod weak_hopf;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
