//! Young-diagram geometry: boxes, contents, rim hooks, 2-cores and
//! enumeration.
//!
//! Diagrams use English notation with 1-based rows and columns. The box in
//! row `i`, column `j` has content `j - i`. A partition has at most one
//! addable and at most one removable box of any given content.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trace::track;

/// A box of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn anticontent(&self) -> i64 {
        self.col as i64 + self.row as i64
    }
}

/// A weakly decreasing list of positive integers.
///
/// The derived order is the canonical one used everywhere output is
/// produced: size ascending, then reverse-lexicographic on the parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Caller guarantees `parts` is weakly decreasing and positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes, `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn has_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.row(row) >= col
    }

    /// All boxes, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| BoxCoord::new(i + 1, j)))
    }

    /// `∂^k = (k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        track!(Staircase);
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    /// True iff the diagram of `inner` fits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        track!(Contains);
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Contents of the addable boxes, in increasing order.
    pub fn addable_contents(&self) -> Vec<i64> {
        let l = self.len();
        (1..=l + 1)
            .rev()
            .filter(|&i| i == 1 || self.row(i - 1) > self.row(i))
            .map(|i| self.row(i) as i64 + 1 - i as i64)
            .collect()
    }

    /// Contents of the removable boxes, in increasing order.
    pub fn removable_contents(&self) -> Vec<i64> {
        (1..=self.len())
            .rev()
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| self.row(i) as i64 - i as i64)
            .collect()
    }

    /// Row of the addable box with content `q`, if any.
    fn addable_row(&self, q: i64) -> Option<usize> {
        // Row i can take a box at column parts[i]+1, content parts[i]+1-i.
        (1..=self.len() + 1).find(|&i| {
            self.row(i) as i64 + 1 - i as i64 == q && (i == 1 || self.row(i - 1) > self.row(i))
        })
    }

    fn removable_row(&self, q: i64) -> Option<usize> {
        (1..=self.len())
            .find(|&i| self.row(i) as i64 - i as i64 == q && self.row(i) > self.row(i + 1))
    }

    /// `λ ⊞ q`: add the addable box of content `q`, if there is one.
    pub fn add_box(&self, q: i64) -> Option<Partition> {
        track!(AddBox);
        let i = self.addable_row(q)?;
        let mut parts = self.parts.clone();
        if i > parts.len() {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    /// `λ ⊟ q`: remove the removable box of content `q`, if there is one.
    pub fn remove_box(&self, q: i64) -> Option<Partition> {
        track!(RemoveBox);
        let i = self.removable_row(q)?;
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    /// The box of content `q` on the rim, if the diagram meets that diagonal.
    pub fn rim_box(&self, q: i64) -> Option<BoxCoord> {
        // The rim box of content q is the last box on its diagonal.
        let mut found = None;
        let start_row = if q >= 0 { 1 } else { (1 - q) as usize };
        let mut i = start_row;
        loop {
            let j = i as i64 + q;
            if self.has_box(i, j as usize) {
                found = Some(BoxCoord::new(i, j as usize));
                i += 1;
            } else {
                break;
            }
        }
        found
    }

    /// Boxes `(i, j)` with `(i+1, j+1)` outside the diagram, one per diagonal
    /// that meets `λ`, in increasing content.
    pub fn rim_boxes(&self) -> Vec<BoxCoord> {
        track!(RimBoxes);
        let mut out = Vec::new();
        for i in (1..=self.len()).rev() {
            let from = self.row(i + 1).max(1);
            for j in from..=self.row(i) {
                out.push(BoxCoord::new(i, j));
            }
        }
        out
    }

    /// Deletes `boxes` from the diagram, returning the result only if it is
    /// again a partition.
    pub fn delete_boxes(&self, boxes: &[BoxCoord]) -> Option<Partition> {
        let mut per_row = vec![0usize; self.len() + 1];
        for b in boxes {
            if !self.has_box(b.row, b.col) {
                return None;
            }
            per_row[b.row] += 1;
        }
        let mut parts = self.parts.clone();
        for (i, &k) in per_row.iter().enumerate().skip(1) {
            if k == 0 {
                continue;
            }
            // the deleted boxes of each row must be its right-most ones
            let len = parts[i - 1];
            let ok = boxes.iter().filter(|b| b.row == i).all(|b| b.col + k > len);
            if !ok {
                return None;
            }
            parts[i - 1] = len - k;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return None;
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    /// The removable rim hook whose contents are exactly `[c1, c2]`.
    pub fn rim_hook(&self, c1: i64, c2: i64) -> Option<RimHook> {
        track!(RimHook);
        if c1 > c2 {
            return None;
        }
        let boxes: Vec<BoxCoord> = self
            .rim_boxes()
            .into_iter()
            .filter(|b| (c1..=c2).contains(&b.content()))
            .collect();
        if boxes.len() as i64 != c2 - c1 + 1 {
            return None;
        }
        let remainder = self.delete_boxes(&boxes)?;
        Some(RimHook::from_boxes(boxes, remainder))
    }

    /// Smallest balanced removable rim hook whose minimal content is `q`.
    pub fn minimal_balanced_hook_starting(&self, q: i64) -> Option<RimHook> {
        track!(MinimalBalancedHookStarting);
        let top = self.row(1) as i64 - 1;
        (q..=top)
            .filter_map(|c2| self.rim_hook(q, c2))
            .find(RimHook::is_balanced)
    }

    /// Smallest balanced removable rim hook whose maximal content is `q`.
    pub fn minimal_balanced_hook_ending(&self, q: i64) -> Option<RimHook> {
        track!(MinimalBalancedHookEnding);
        let bottom = 1 - self.len() as i64;
        (bottom..=q)
            .rev()
            .filter_map(|c1| self.rim_hook(c1, q))
            .find(RimHook::is_balanced)
    }

    /// Removable dominoes, as `(start content, remainder)` pairs.
    pub fn removable_dominoes(&self) -> Vec<(i64, Partition)> {
        let lo = 1 - self.len() as i64;
        let hi = self.row(1) as i64 - 1;
        (lo..hi)
            .filter_map(|c| self.rim_hook(c, c + 1).map(|h| (c, h.remainder)))
            .collect()
    }

    /// Strips rim 2-hooks until none is left, always taking the one with the
    /// largest start content. Returns the core `∂^k` and `k`.
    pub fn two_core(&self) -> (Partition, usize) {
        track!(TwoCore);
        let mut current = self.clone();
        while let Some((_, next)) = current.removable_dominoes().pop() {
            current = next;
        }
        let k = current.len();
        debug_assert_eq!(current, Partition::staircase(k));
        (current, k)
    }

    pub fn transpose(&self) -> Partition {
        track!(Transpose);
        let cols = self.row(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_parts_unchecked(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A removable connected strip of rim boxes, one box per content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    /// Ordered by increasing content.
    pub boxes: Vec<BoxCoord>,
    pub start_content: i64,
    pub end_content: i64,
    pub height: usize,
    pub width: usize,
    /// The partition left after deleting the hook.
    pub remainder: Partition,
}

impl RimHook {
    fn from_boxes(boxes: Vec<BoxCoord>, remainder: Partition) -> Self {
        let mut rows: Vec<usize> = boxes.iter().map(|b| b.row).collect();
        let mut cols: Vec<usize> = boxes.iter().map(|b| b.col).collect();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        RimHook {
            start_content: boxes[0].content(),
            end_content: boxes[boxes.len() - 1].content(),
            height: rows.len(),
            width: cols.len(),
            boxes,
            remainder,
        }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.height == self.width
    }
}

/// Partitions of `n` in reverse-lexicographic order, starting from `(n)`.
#[derive(Debug, Clone)]
pub struct PartitionsOf {
    current: Option<Vec<usize>>,
}

impl PartitionsOf {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        PartitionsOf {
            current: Some(first),
        }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // successor: decrement the last part > 1 and refill greedily
        if let Some(i) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..i].to_vec();
            let m = cur[i] - 1;
            let mut rest: usize = cur[i..].iter().sum::<usize>() - m;
            next.push(m);
            while rest > 0 {
                let take = rest.min(m);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(Partition::from_parts_unchecked(cur))
    }
}

/// Every partition of size at most `max_size`, by size then reverse-lex.
pub fn enumerate_partitions(max_size: usize) -> impl Iterator<Item = Partition> {
    track!(EnumeratePartitions);
    (0..=max_size).flat_map(PartitionsOf::new)
}
