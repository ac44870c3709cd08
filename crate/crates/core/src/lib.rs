#![no_std]

extern crate alloc;

pub mod error;
pub mod linalg;

pub use error::{Error, ErrorKind, Result};
pub mod group;
pub mod rep;
pub mod relation;
pub mod regconst;
pub mod local;
pub mod presets;
