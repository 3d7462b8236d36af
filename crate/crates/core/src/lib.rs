pub mod chebyshev;
pub mod curves;
pub mod enumerator;
pub mod error;
pub mod fixtures;
pub mod polyring;
pub mod sequences;
pub mod specializations;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
