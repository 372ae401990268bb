pub mod arcs;
pub mod config;
pub mod desargues;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod io;
mod linalg;
pub mod projlin;
pub mod verify;

pub use error::{Error, Result};
