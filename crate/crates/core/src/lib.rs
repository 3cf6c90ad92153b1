//! Binary code analysis: Hamming metric and distributions, size bounds,
//! systematic encodings, isometry classes, and exhaustive verification of
//! the classification of binary systematic AMDS codes.

pub mod bounds;
pub mod classify;
pub mod cli;
pub mod code;
pub mod codeword;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod isometry;
pub mod systematic;

pub use code::{BinaryCode, DistributionReport};
pub use codeword::Codeword;
pub use enumerate::{enumerate_systematic_amds, EnumerationResult, SearchMode};
pub use error::{Error, Result};
pub use isometry::Isometry;
pub use systematic::EncodingTable;
