//! Stack-sorting preimages and the combinatorics around them: decreasing plane
//! trees, valid hook configurations, sliding operators, and finite-level checks
//! of fertility, strong fertility and postorder Wilf equivalence.

pub mod error;
pub mod perm;
pub mod poly;
pub mod sliding;
pub mod stacksort;
pub mod stats;
pub mod trees;
pub mod verify;
pub mod vhc;

pub use error::{Error, Result};
pub use perm::{PatternList, Permutation};
pub use trees::{DecreasingPlaneTree, TreeFamily};
pub use vhc::{Composition, Hook, PartitionType, ValidHookConfiguration};
