//! Witnesses for the faithfulness of the Fock action `Ξ′`.
//!
//! For an fcs word `w`, the lowest-degree part of `Ξ′(T_w)(λ)` lives in size
//! `|λ| - ℓ(w)` and is either zero or a single partition. A suitable `λ` built
//! from the intervals of `w` makes it nonzero, and distinct words of equal
//! length never share it, so the longest term of any nonzero element survives.

use crate::error::{Error, Result};
use crate::fock::{apply_word, FockVector, Rep};
use crate::partition::Partition;
use crate::trace::track;

use super::element::TlElement;
use super::fcs::FcsWord;

/// The size-`|λ| - ℓ(w)` part of `Ξ′(T_w)(λ)`, which must be zero or one
/// partition with coefficient one.
pub fn minimal_part(w: &FcsWord, lambda: &Partition) -> Result<Option<Partition>> {
    track!(MinimalPart);
    let Some(target) = lambda.size().checked_sub(w.len()) else {
        return Ok(None);
    };
    let image = apply_word(
        &FockVector::basis(lambda.clone()),
        &w.to_word(),
        Rep::XiPrime,
    );
    let low = image.graded_part(target);
    let mut terms = low.iter();
    match (terms.next(), terms.next()) {
        (None, _) => Ok(None),
        (Some((p, 1)), None) => Ok(Some(p.clone())),
        _ => Err(Error::Falsified(format!(
            "minimal part of T{w:?}({lambda}) is {low:?}, not a single partition"
        ))),
    }
}

/// Smallest admissible `p`: `max(1, 2 - a_r - r)`.
pub fn min_witness_p(w: &FcsWord) -> usize {
    match w.intervals().last() {
        None => 1,
        Some(&(a_r, _)) => (2 - a_r - w.interval_count() as i64).max(1) as usize,
    }
}

/// The partition with `p` rows of length `p + b_1` followed by rows
/// `p + i + b_i - 1` for each interval `i`.
pub fn witness_partition(w: &FcsWord, p: usize) -> Result<Partition> {
    track!(WitnessPartition);
    if w.is_empty() {
        return Ok(Partition::empty());
    }
    let min = min_witness_p(w);
    if p < min {
        return Err(Error::Precondition(format!(
            "witness for T{w:?} needs p >= {min}, got {p}"
        )));
    }
    let p = p as i64;
    let b1 = w.intervals()[0].1;
    let mut parts: Vec<i64> = vec![p + b1; p as usize];
    for (i, &(_, b)) in w.intervals().iter().enumerate() {
        parts.push(p + i as i64 + 1 + b - 1);
    }
    let parts = parts.into_iter().map(|x| x as usize).collect();
    Partition::new(parts)
}

/// A partition on which `Ξ′(x)` is nonzero, together with that image.
/// Returns `None` for `x = 0`.
pub fn faithfulness_witness(x: &TlElement) -> Result<Option<(Partition, FockVector)>> {
    track!(FaithfulnessWitness);
    let Some(longest) = x
        .iter()
        .map(|(w, _)| w)
        .max_by_key(|w| (w.len(), std::cmp::Reverse(*w)))
    else {
        return Ok(None);
    };
    let lambda = witness_partition(longest, min_witness_p(longest))?;
    let image = x.act(&lambda, Rep::XiPrime);
    if image.is_zero() {
        return Err(Error::Falsified(format!(
            "Ξ′({x:?}) vanishes on witness {lambda}"
        )));
    }
    Ok(Some((lambda, image)))
}
