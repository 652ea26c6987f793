pub mod bounds;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod hyp2f1;
pub mod metric;
pub mod pqfun;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
