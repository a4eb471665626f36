//! Exact combinatorics of the periplectic Deligne category.
//!
//! * [`partition`]: Young-diagram geometry (rim hooks, 2-cores, enumeration).
//! * [`fock`]: the two Temperley-Lieb actions `Ξ` and `Ξ′` on the free abelian
//!   group on partitions.
//! * [`tl`]: the algebra `TL_∞(0)` itself, as planar diagrams and fully
//!   commutative normal forms, with faithfulness witnesses.
//! * [`cells`]: staircase ideals, cells, label sets and summand tables.
//! * [`weight`]: the diamond marking and the dictionary to dominant weights.
//! * [`verify`]: exhaustive sweeps checking the structural identities.

pub mod cells;
pub mod error;
pub mod fock;
pub mod partition;
pub mod tl;
pub mod trace;
pub mod verify;
pub mod weight;

pub use cells::{StratumReport, SummandLabel};
pub use error::{Error, Result};
pub use fock::{CaseTag, FockVector, Rep};
pub use partition::{enumerate_partitions, BoxCoord, Partition, RimHook};
pub use tl::{FcsWord, TlDiagram, TlElement};
pub use verify::{Params, Suite, VerifyReport};
pub use weight::{DominantWeight, Marking};
