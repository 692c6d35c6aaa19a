//! Cross-checks of generated sequences against OEIS b-files. Tests use only
//! the bundled fixtures; the network is a convenience for exploration.

pub mod bfile;
pub mod client;
pub mod error;
pub mod registry;

pub use client::{AId, Client, SequenceFixture, Source, Transport, UreqTransport, CACHE_ENV};
pub use error::{OeisError, Result};
pub use registry::{crosscheck, generator, Generator, GENERATORS};
