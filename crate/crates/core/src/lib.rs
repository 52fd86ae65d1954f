//! Braid group actions on free groups, Wada-type representations, and tools
//! for deciding the braid word problem and separating representation images.

pub mod braid;
pub mod dehornoy;
pub mod distinguish;
pub mod endo;
pub mod error;
pub mod free_group;
pub mod magnus;
pub mod reps;
pub mod verify;

pub use braid::{BraidWord, Sigma1Class};
pub use dehornoy::Verdict;
pub use endo::FreeEndo;
pub use error::{Error, Result};
pub use free_group::{FreeWord, Letter};
pub use reps::{RepKind, Representation};
