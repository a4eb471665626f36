//! Staircase stratification: thick tensor ideals `I_k`, cells `Par^k`, blocks
//! by 2-core, and the label sets for summands of tensor powers.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::fock::{support_bounds, xi_on_partition};
use crate::partition::{enumerate_partitions, Partition};
use crate::trace::track;

/// The largest `k` with `∂^k ⊆ λ`.
pub fn cell_index(lambda: &Partition) -> usize {
    track!(CellIndex);
    // ∂^k ⊆ λ iff λ_i ≥ k + 1 - i for i ≤ k
    let mut k = 0;
    while (1..=k + 1).all(|i| lambda.row(i) + i > k + 1) {
        k += 1;
    }
    k
}

/// Membership of `R(λ)` in the ideal `I_k`, i.e. `∂^k ⊆ λ`.
pub fn in_ideal(lambda: &Partition, k: usize) -> bool {
    track!(InIdeal);
    lambda.contains(&Partition::staircase(k))
}

/// Compares cells. `Equal` means "same cell", not isomorphic objects.
pub fn quasi_order_compare(lambda: &Partition, mu: &Partition) -> Ordering {
    track!(QuasiOrderCompare);
    cell_index(lambda).cmp(&cell_index(mu))
}

/// `J(r) = {r - 2i | 0 ≤ i ≤ r/2}`, largest first.
pub fn j_set(r: usize) -> Vec<usize> {
    track!(JSet);
    (0..=r / 2).map(|i| r - 2 * i).collect()
}

/// `J^0(r) = {r - 2i | 0 ≤ i < r/2}`, with `J^0(0) = {0}`.
pub fn j_zero_set(r: usize) -> Vec<usize> {
    track!(JZeroSet);
    if r == 0 {
        return vec![0];
    }
    (0..r.div_ceil(2)).map(|i| r - 2 * i).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub partition: Partition,
    pub cell: usize,
    pub block: usize,
    /// `k -> (∂^k ⊆ λ)` for `k = 0..=cell+1`.
    pub ideals: BTreeMap<String, bool>,
}

pub fn stratum_report(lambda: &Partition) -> StratumReport {
    let cell = cell_index(lambda);
    let (_, block) = lambda.two_core();
    let ideals = (0..=cell + 1)
        .map(|k| (k.to_string(), in_ideal(lambda, k)))
        .collect();
    StratumReport {
        partition: lambda.clone(),
        cell,
        block,
        ideals,
    }
}

/// One row of the summand table of `V^{⊗r}` for `𝔭𝔢(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandLabel {
    pub partition: Partition,
    pub appears: bool,
    pub projective: bool,
}

/// Labels `λ` with `|λ| ∈ J^0(r)`, flagged by whether `R(λ)` survives as a
/// summand (`λ ∈ Par^{≤n}`) and whether that summand is projective
/// (`λ ∈ Par^n`). Sizes are listed in the order of `J^0(r)`.
pub fn summand_labels(n: usize, r: usize) -> Vec<SummandLabel> {
    track!(SummandLabels);
    let mut out = Vec::new();
    for size in j_zero_set(r) {
        for lambda in crate::partition::PartitionsOf::new(size) {
            let cell = cell_index(&lambda);
            let appears = cell <= n;
            out.push(SummandLabel {
                partition: lambda,
                appears,
                projective: appears && cell == n,
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureViolation {
    pub partition: Partition,
    pub q: i64,
    pub image: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub k: usize,
    pub max_size: usize,
    pub members_checked: usize,
    pub steps_checked: usize,
    pub violations: Vec<ClosureViolation>,
}

/// Checks that every nonzero `Ξ(T_q)` step from a member of `I_k` (up to
/// `max_size` boxes) lands back in `I_k`.
pub fn ideal_closure_check(k: usize, max_size: usize) -> ClosureReport {
    track!(IdealClosureCheck);
    let mut report = ClosureReport {
        k,
        max_size,
        members_checked: 0,
        steps_checked: 0,
        violations: Vec::new(),
    };
    for lambda in enumerate_partitions(max_size).filter(|l| in_ideal(l, k)) {
        report.members_checked += 1;
        let (lo, hi) = support_bounds(&lambda);
        for q in lo - 2..=hi + 2 {
            if let Some(image) = xi_on_partition(&lambda, q) {
                report.steps_checked += 1;
                if !in_ideal(&image, k) {
                    report.violations.push(ClosureViolation {
                        partition: lambda.clone(),
                        q,
                        image,
                    });
                }
            }
        }
    }
    report
}

/// A chain `∂^k = κ_0 → κ_1 → ⋯ → λ` of `Ξ` steps, given as the contents
/// `q_j` with `κ_{j+1} = Ξ(T_{q_j})(κ_j)`. Boxes are added row by row.
/// `None` if `λ ∉ I_k`.
pub fn generation_path(lambda: &Partition, k: usize) -> Option<Vec<i64>> {
    if !in_ideal(lambda, k) {
        return None;
    }
    let base = Partition::staircase(k);
    let mut qs = Vec::new();
    for (i, &len) in lambda.parts().iter().enumerate() {
        let row = i + 1;
        for col in base.row(row) + 1..=len {
            qs.push(col as i64 - row as i64);
        }
    }
    Some(qs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cell_indices() {
        assert_eq!(cell_index(&Partition::empty()), 0);
        assert_eq!(cell_index(&p(&[2])), 1);
        assert_eq!(cell_index(&p(&[3, 2, 2, 2])), 3);
        assert_eq!(cell_index(&p(&[3, 2, 1])), 3);
        assert_eq!(cell_index(&p(&[4, 4, 4, 4])), 4);
    }

    #[test]
    fn ideals() {
        assert!(in_ideal(&p(&[1]), 1));
        assert!(!in_ideal(&p(&[2]), 2));
        for lambda in enumerate_partitions(5) {
            assert!(in_ideal(&lambda, 0));
        }
    }

    #[test]
    fn quasi_order() {
        assert_eq!(
            quasi_order_compare(&Partition::empty(), &p(&[1, 1])),
            Ordering::Less
        );
        assert_eq!(quasi_order_compare(&p(&[2]), &p(&[1])), Ordering::Equal);
        assert_eq!(
            quasi_order_compare(&p(&[3, 2, 1]), &p(&[1])),
            Ordering::Greater
        );
    }

    #[test]
    fn label_sets() {
        assert_eq!(j_set(5), vec![5, 3, 1]);
        assert_eq!(j_zero_set(5), vec![5, 3, 1]);
        assert_eq!(j_set(4), vec![4, 2, 0]);
        assert_eq!(j_zero_set(4), vec![4, 2]);
        assert_eq!(j_set(0), vec![0]);
        assert_eq!(j_zero_set(0), vec![0]);
        assert_eq!(j_zero_set(1), vec![1]);
    }

    #[test]
    fn summand_tables() {
        let row = |parts: &[usize], appears, projective| SummandLabel {
            partition: p(parts),
            appears,
            projective,
        };
        assert_eq!(summand_labels(1, 1), vec![row(&[1], true, true)]);
        assert_eq!(
            summand_labels(1, 3),
            vec![
                row(&[3], true, true),
                row(&[2, 1], false, false),
                row(&[1, 1, 1], true, true),
                row(&[1], true, true),
            ]
        );
        assert_eq!(summand_labels(5, 1), vec![row(&[1], true, false)]);
    }

    #[test]
    fn closure() {
        for (k, m) in [(1, 10), (0, 10), (3, 12)] {
            let report = ideal_closure_check(k, m);
            assert!(report.violations.is_empty(), "{report:?}");
            assert!(report.members_checked > 0);
        }
    }

    #[test]
    fn paths() {
        let lambda = p(&[4, 2, 2, 1]);
        let qs = generation_path(&lambda, 2).unwrap();
        let mut cur = Partition::staircase(2);
        for q in qs {
            cur = xi_on_partition(&cur, q).unwrap();
        }
        assert_eq!(cur, lambda);
        assert!(generation_path(&p(&[3]), 2).is_none());
    }

    #[test]
    fn report_json() {
        let r = stratum_report(&p(&[2]));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"partition":[2],"cell":1,"block":0,"ideals":{"0":true,"1":true,"2":false}}"#
        );
    }
}
