//! Built-in examples, verifications, JSON I/O and the command line.

pub mod cli;
pub mod examples;
pub mod io;
pub mod random;
pub mod verify;
