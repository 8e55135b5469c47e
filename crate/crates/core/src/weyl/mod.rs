//! Combinatorics of the type D Weyl group.

mod covers;
mod partition;
mod signed;

pub use covers::{check_cover_properties, covers, reduced_word_to_top, top_partition, CoverCase, CoverDatum};
pub use partition::{KStrictPartition, PartitionType, RowPair, TypedPartition};
pub use signed::{reflect_value, SignedPermutation};
