//! The diamond marking of Young diagrams and the resulting dictionary
//! `Par^n → X_n^+` to dominant weights of `𝔭𝔢(n)`.
//!
//! Marking: scan rows from the bottom up and put a diamond in the right-most
//! box of a row whenever the number of diamonds placed so far is smaller than
//! the row length. `d̃_λ` is the set of marked contents and `d_λ = d̃_λ - 1`.
//! A dominant weight `ω` corresponds to the `n`-set `{ω_i + n - i}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cells::cell_index;
use crate::error::{Error, Result};
use crate::partition::{BoxCoord, Partition};
use crate::trace::track;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Marking {
    /// Marked boxes from the bottom row upward, as `[row, col]`.
    #[serde(with = "box_pairs")]
    pub boxes: Vec<BoxCoord>,
    /// Contents of the marked boxes, increasing.
    #[serde(rename = "dTilde")]
    pub d_tilde: Vec<i64>,
    /// `d̃` shifted down by one.
    pub d: Vec<i64>,
}

mod box_pairs {
    use super::BoxCoord;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(boxes: &[BoxCoord], s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = boxes.iter().map(|b| [b.row, b.col]).collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BoxCoord>, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(d)?;
        Ok(pairs
            .into_iter()
            .map(|[r, c]| BoxCoord::new(r, c))
            .collect())
    }
}

impl Marking {
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

pub fn marking(lambda: &Partition) -> Marking {
    track!(Marking);
    let mut boxes = Vec::new();
    for row in (1..=lambda.len()).rev() {
        let len = lambda.row(row);
        if boxes.len() < len {
            boxes.push(BoxCoord::new(row, len));
        }
    }
    // contents strictly increase going up, so this is already sorted
    let d_tilde: Vec<i64> = boxes.iter().map(BoxCoord::content).collect();
    let d = d_tilde.iter().map(|c| c - 1).collect();
    Marking { boxes, d_tilde, d }
}

/// `d̃_λ`, increasing.
pub fn d_tilde(lambda: &Partition) -> Vec<i64> {
    track!(DTilde);
    marking(lambda).d_tilde
}

/// `d_λ`, increasing.
pub fn d_set(lambda: &Partition) -> Vec<i64> {
    track!(DSet);
    marking(lambda).d
}

/// A dominant integral weight `ω_1 ≥ ⋯ ≥ ω_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantWeight {
    pub n: usize,
    pub omega: Vec<i64>,
}

impl DominantWeight {
    pub fn new(omega: Vec<i64>) -> Result<Self> {
        if omega.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "{omega:?} is not weakly decreasing"
            )));
        }
        Ok(DominantWeight {
            n: omega.len(),
            omega,
        })
    }

    /// `c_ω = {ω_i + n - i}`, decreasing.
    pub fn beta_set(&self) -> Vec<i64> {
        let n = self.n as i64;
        self.omega
            .iter()
            .enumerate()
            .map(|(i, w)| w + n - (i as i64 + 1))
            .collect()
    }

    /// `ω_i = -i`, the weight attached to `∂^n`.
    pub fn staircase_weight(n: usize) -> Self {
        DominantWeight {
            n,
            omega: (1..=n as i64).map(|i| -i).collect(),
        }
    }
}

fn distinct_sorted_desc(set: &[i64]) -> Vec<i64> {
    let s: BTreeSet<i64> = set.iter().copied().collect();
    s.into_iter().rev().collect()
}

/// `c^{-1}`: sorts `S` decreasingly as `s_1 > ⋯ > s_n` and sets
/// `ω_i = s_i - (n - i)`.
pub fn weight_from_subset(set: &[i64], n: usize) -> Result<DominantWeight> {
    track!(WeightFromSubset);
    let sorted = distinct_sorted_desc(set);
    if sorted.len() != set.len() || sorted.len() != n {
        return Err(Error::Precondition(format!(
            "expected {n} distinct integers, got {set:?}"
        )));
    }
    let omega = sorted
        .iter()
        .enumerate()
        .map(|(i, s)| s - (n as i64 - (i as i64 + 1)))
        .collect();
    Ok(DominantWeight { n, omega })
}

/// `f(λ) = c^{-1}(d_λ)`, with `n` the number of diamonds.
pub fn f_map(lambda: &Partition) -> DominantWeight {
    track!(FMap);
    let d = d_set(lambda);
    let n = d.len();
    weight_from_subset(&d, n).expect("marked contents are distinct")
}

/// The unique `λ ∈ Par^n` with `d_λ = S`.
///
/// Reading the marking bottom-up, the `j`-th marked row has some length
/// `m_j ≥ j`, and it can only be followed by unmarked rows if `m_j = j`, in
/// which case those rows have length exactly `j`. So `λ` is fixed by `m_1` and
/// the numbers `g_j` of unmarked rows after each mark; consecutive marked
/// contents then pin `m_{j+1} - m_j + g_j`. The candidates are enumerated and
/// each is checked by recomputing its marking.
pub fn d_inverse(set: &[i64], n: usize) -> Result<Partition> {
    track!(DInverse);
    let mut t: Vec<i64> = distinct_sorted_desc(set)
        .into_iter()
        .rev()
        .map(|s| s + 1)
        .collect();
    if t.len() != set.len() || t.len() != n {
        return Err(Error::Precondition(format!(
            "expected {n} distinct integers, got {set:?}"
        )));
    }
    if n == 0 {
        return Ok(Partition::empty());
    }
    t.dedup();
    let n_i = n as i64;
    // rows between marks: Δ_j - 1 = (m_{j+1} - m_j) + g_j
    let slack: Vec<i64> = t.windows(2).map(|w| w[1] - w[0] - 1).collect();
    let top_gap = (n_i - 1 - t[n - 1]).max(0);
    let max_total = slack.iter().sum::<i64>() + top_gap;

    let mut found: Vec<Partition> = Vec::new();
    for total in 0..=max_total {
        // t_1 = m_1 - ℓ with ℓ = n + Σ g
        let m1 = t[0] + n_i + total;
        if m1 < 1 {
            continue;
        }
        let mut gaps = Vec::with_capacity(n);
        search_gaps(&slack, n, m1, total, &mut gaps, &mut |gaps: &[i64]| {
            if let Some(lambda) = assemble(&slack, m1, gaps) {
                if d_set(&lambda) == set_sorted(set) && cell_index(&lambda) == n {
                    found.push(lambda);
                }
            }
        });
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Falsified(format!(
            "no partition in Par^{n} has d-set {set:?}"
        ))),
        _ => Err(Error::Falsified(format!(
            "d-set {set:?} has several preimages {found:?}"
        ))),
    }
}

fn set_sorted(set: &[i64]) -> Vec<i64> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v
}

/// Enumerates gap vectors `g_1..g_n` summing to `total`, with `g_j` allowed
/// to be positive only when the `j`-th marked row has length `j`.
fn search_gaps(
    slack: &[i64],
    n: usize,
    m: i64,
    remaining: i64,
    gaps: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    let j = gaps.len() + 1;
    if m < j as i64 {
        return;
    }
    if j == n {
        if remaining == 0 || m == n as i64 {
            gaps.push(remaining);
            emit(gaps);
            gaps.pop();
        }
        return;
    }
    let max_gap = if m == j as i64 {
        slack[j - 1].min(remaining)
    } else {
        0
    };
    for g in 0..=max_gap {
        gaps.push(g);
        let next = m + slack[j - 1] - g;
        search_gaps(slack, n, next, remaining - g, gaps, emit);
        gaps.pop();
    }
}

fn assemble(slack: &[i64], m1: i64, gaps: &[i64]) -> Option<Partition> {
    let mut bottom_up: Vec<usize> = Vec::new();
    let mut m = m1;
    for (j, &g) in gaps.iter().enumerate() {
        bottom_up.push(m as usize);
        bottom_up.extend(std::iter::repeat_n(j + 1, g as usize));
        if j < slack.len() {
            m += slack[j] - g;
        }
    }
    bottom_up.reverse();
    Partition::new(bottom_up).ok()
}

/// `ω` read off directly from the shape, for `λ ∈ Par^n` whose associated
/// `ν` has distinct parts: `ω_i = λ_i - n - 1` for `i ≤ k_0` and
/// `ω_i = -ν_{n-i+1} - k_0` after, where `λ_{k_0+1} = n - k_0` and `ν` is the
/// transpose of `(λ_{k_0+1}, λ_{k_0+2}, …)`.
///
/// Every admissible `k_0` is tried. Returns `None` if no admissible `k_0`
/// gives distinct parts; differing answers are a falsification event.
pub fn prop_link_weight(lambda: &Partition) -> Result<Option<DominantWeight>> {
    track!(PropLinkWeight);
    let candidates = prop_link_candidates(lambda)?;
    let mut generic = candidates.into_iter().filter_map(|(_, w)| w);
    let Some(first) = generic.next() else {
        return Ok(None);
    };
    for other in generic {
        if other != first {
            return Err(Error::Falsified(format!(
                "closed formula for {lambda} depends on k_0: {first:?} vs {other:?}"
            )));
        }
    }
    Ok(Some(first))
}

/// Every admissible `k_0` with the closed-formula weight, or `None` where `ν`
/// has a repeated part.
pub fn prop_link_candidates(lambda: &Partition) -> Result<Vec<(usize, Option<DominantWeight>)>> {
    let n = cell_index(lambda);
    let ks: Vec<usize> = (0..=n).filter(|&k| lambda.row(k + 1) == n - k).collect();
    if ks.is_empty() {
        return Err(Error::Falsified(format!(
            "no admissible k_0 for {lambda} in Par^{n}"
        )));
    }
    Ok(ks
        .into_iter()
        .map(|k0| {
            let tail = Partition::new(lambda.parts().iter().skip(k0).copied().collect())
                .expect("suffix of a partition");
            let nu = tail.transpose();
            let distinct = nu.parts().windows(2).all(|w| w[0] != w[1]);
            let weight = distinct.then(|| {
                let n_i = n as i64;
                let omega = (1..=n)
                    .map(|i| {
                        if i <= k0 {
                            lambda.row(i) as i64 - n_i - 1
                        } else {
                            -(nu.row(n - i + 1) as i64) - k0 as i64
                        }
                    })
                    .collect();
                DominantWeight { n, omega }
            });
            (k0, weight)
        })
        .collect())
}

/// Which hypothesis of the `d`-set transition under adding a `q`-box applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemaddqCase {
    /// Marked box of content `q - 1`: `q - 2` becomes `q - 1`.
    I,
    /// Marked box of content `q + 1` but none of content `q - 1`: `q` becomes `q - 1`.
    Ii,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemaddqReport {
    pub partition: Partition,
    pub q: i64,
    pub case: LemaddqCase,
    pub pass: bool,
    pub expected: Vec<i64>,
    pub actual: Vec<i64>,
}

/// Checks the `d`-set surgery predicted for `λ → λ ⊞ q` inside `Par^n`.
/// Both sides are computed from scratch.
pub fn check_lemaddq_transition(lambda: &Partition, q: i64) -> LemaddqReport {
    track!(CheckLemaddqTransition);
    let mut report = LemaddqReport {
        partition: lambda.clone(),
        q,
        case: LemaddqCase::NotApplicable,
        pass: true,
        expected: Vec::new(),
        actual: Vec::new(),
    };
    let Some(mu) = lambda.add_box(q) else {
        return report;
    };
    if cell_index(lambda) != cell_index(&mu) {
        return report;
    }
    let marked = d_tilde(lambda);
    let (case, old, new) = if marked.contains(&(q - 1)) {
        (LemaddqCase::I, q - 2, q - 1)
    } else if marked.contains(&(q + 1)) {
        (LemaddqCase::Ii, q, q - 1)
    } else {
        return report;
    };
    let before = d_set(lambda);
    let mut expected: BTreeSet<i64> = before.iter().copied().collect();
    let replaced = expected.remove(&old);
    expected.insert(new);
    report.case = case;
    report.expected = expected.into_iter().collect();
    report.actual = d_set(&mu);
    report.pass = replaced && report.expected == report.actual;
    report
}
