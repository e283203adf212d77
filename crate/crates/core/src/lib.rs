pub mod charpoly;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod iso;
pub mod poly;
pub mod rational;
pub mod walk;
pub mod witness;

pub use error::{Error, Result};
