//! Library side of the command-line driver: the verification check
//! registry, the correspondence table, and output serialization.

pub mod checks;
pub mod output;
pub mod table;
