//! `(r, l)`-partitions and neighborhood-diversity decompositions.

mod nd;
mod rl;
mod split;

pub use nd::{nd_decompose, NdDecomposition, NdPart, PartKind};
pub use rl::{
    find_rl_partition, find_rl_partition_with, two_coloring, verify_partition, RlPartition,
};
pub use split::{enumerate_split_partitions, split_partition};
