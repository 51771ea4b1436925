pub mod cli;
pub mod contiguous;
pub mod error;
pub mod numerics;
pub mod qbessel;
pub mod qcore;
pub mod verify;

pub use error::{Error, Result};
