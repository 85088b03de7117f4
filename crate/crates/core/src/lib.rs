pub mod deform1;
pub mod deform2;
pub mod error;
pub mod laguerre;
pub mod published;
pub mod ratcore;
pub mod verify;
pub mod susy;

pub use error::{Error, Result};
