//! Per-operation call counters.
//!
//! With the `op-counters` feature each public operation bumps an atomic
//! counter on entry; without it `track!` expands to nothing.

/// Every counted operation, one per public entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(usize)]
pub enum Op {
    Staircase,
    Contains,
    AddBox,
    RemoveBox,
    RimBoxes,
    RimHook,
    MinimalBalancedHookStarting,
    MinimalBalancedHookEnding,
    TwoCore,
    Transpose,
    EnumeratePartitions,
    ClassifyCase,
    XiOnPartition,
    XiApply,
    XiPrimeOnPartition,
    ApplyWord,
    AQEntry,
    AEntry,
    SupportBounds,
    GeneratorDiagram,
    DiagramProduct,
    WordToDiagram,
    FcsToWord,
    Normalize,
    ElementMultiply,
    MinimalPart,
    WitnessPartition,
    FaithfulnessWitness,
    CellIndex,
    InIdeal,
    QuasiOrderCompare,
    JSet,
    JZeroSet,
    SummandLabels,
    IdealClosureCheck,
    Marking,
    DTilde,
    DSet,
    WeightFromSubset,
    FMap,
    DInverse,
    PropLinkWeight,
    CheckLemaddqTransition,
}

impl Op {
    pub const ALL: [Op; 43] = [
        Op::Staircase,
        Op::Contains,
        Op::AddBox,
        Op::RemoveBox,
        Op::RimBoxes,
        Op::RimHook,
        Op::MinimalBalancedHookStarting,
        Op::MinimalBalancedHookEnding,
        Op::TwoCore,
        Op::Transpose,
        Op::EnumeratePartitions,
        Op::ClassifyCase,
        Op::XiOnPartition,
        Op::XiApply,
        Op::XiPrimeOnPartition,
        Op::ApplyWord,
        Op::AQEntry,
        Op::AEntry,
        Op::SupportBounds,
        Op::GeneratorDiagram,
        Op::DiagramProduct,
        Op::WordToDiagram,
        Op::FcsToWord,
        Op::Normalize,
        Op::ElementMultiply,
        Op::MinimalPart,
        Op::WitnessPartition,
        Op::FaithfulnessWitness,
        Op::CellIndex,
        Op::InIdeal,
        Op::QuasiOrderCompare,
        Op::JSet,
        Op::JZeroSet,
        Op::SummandLabels,
        Op::IdealClosureCheck,
        Op::Marking,
        Op::DTilde,
        Op::DSet,
        Op::WeightFromSubset,
        Op::FMap,
        Op::DInverse,
        Op::PropLinkWeight,
        Op::CheckLemaddqTransition,
    ];
}

#[cfg(feature = "op-counters")]
mod imp {
    use super::Op;
    use std::sync::atomic::{AtomicU64, Ordering};

    #[allow(clippy::declare_interior_mutable_const)]
    const ZERO: AtomicU64 = AtomicU64::new(0);
    static COUNTS: [AtomicU64; Op::ALL.len()] = [ZERO; Op::ALL.len()];

    pub fn hit(op: Op) {
        COUNTS[op as usize].fetch_add(1, Ordering::Relaxed);
    }

    pub fn count(op: Op) -> u64 {
        COUNTS[op as usize].load(Ordering::Relaxed)
    }

    pub fn reset() {
        for c in &COUNTS {
            c.store(0, Ordering::Relaxed);
        }
    }
}

#[cfg(feature = "op-counters")]
pub use imp::{count, hit, reset};

/// Operations that have not been called since the last reset.
#[cfg(feature = "op-counters")]
pub fn uncovered() -> Vec<Op> {
    Op::ALL
        .iter()
        .copied()
        .filter(|&op| count(op) == 0)
        .collect()
}

macro_rules! track {
    ($op:ident) => {
        #[cfg(feature = "op-counters")]
        $crate::trace::hit($crate::trace::Op::$op);
    };
}
pub(crate) use track;

#[cfg(test)]
mod tests {
    use super::Op;

    #[test]
    fn discriminants_index_the_table() {
        for (i, op) in Op::ALL.iter().enumerate() {
            assert_eq!(*op as usize, i);
        }
    }
}
