//! Combinatorics of blocks of symmetric groups in prime characteristic.
//!
//! The crate covers partitions and the James abacus, Kleshchev branching
//! between blocks and `[w:k]`-pairs, the `[a,b]` labelling of weight-two
//! partitions, Jordan-block arithmetic for cyclic groups of prime order, rank
//! varieties of modules for elementary abelian groups, and an oracle for the
//! complexity of simple modules that reports exact values where they are known
//! and certified bounds otherwise.

pub mod abacus;
pub mod branching;
pub mod complexity;
pub mod error;
pub mod fp;
pub mod jordan;
pub mod partition;
pub mod prime;
pub mod rank_variety;
pub mod rim_hook;
pub mod sweeps;
pub mod weight_two;

pub use abacus::{
    beta_numbers, block_of, default_beads, p_core, p_weight, partition_from_beta, AbacusDisplay,
    BetaSequence, BlockId,
};
pub use complexity::{complexity_of, ComplexityResult, ComplexityValue, Justification};
pub use error::{Error, Result};
pub use fp::FpMatrix;
pub use jordan::{JordanMultiset, NilpotentMatrix};
pub use partition::{partitions_of, Partition};
pub use prime::Prime;
pub use rank_variety::ElemAbelianModule;
pub use rim_hook::core_by_rim_hooks_oracle;
pub use weight_two::{label_of, partition_of_label, Route, WeightTwoLabel};
