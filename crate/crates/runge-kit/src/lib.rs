pub mod error;
pub mod exact;
pub mod cli;
pub mod family;
pub mod curves;
pub mod pell;
pub mod records;
pub mod runge;
pub mod search;

pub use error::{Error, Result};
