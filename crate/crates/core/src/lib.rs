pub mod cache;
pub mod charring;
pub mod cli;
pub mod error;
pub mod gammaposet;
pub mod jacobitrudi;
pub mod liealgebra;
mod linalg;
pub mod projchar;
pub mod rootdata;

pub use charring::{CharRing, DominantCharacter, FormalCharacter, GradedCharacter};
pub use error::{Error, Result};
pub use rootdata::{Family, LieType, RootSystem, RootVec, Weight};
