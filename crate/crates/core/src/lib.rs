pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod weierstrass;
pub mod inose;
pub mod kummer;
pub mod matching;
pub mod lattice;
pub mod modular;
pub mod reconcile;
pub mod suite;
pub mod wire;
