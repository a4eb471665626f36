//! Fully commutative sequences: the normal-form words of `TL_∞(0)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::diagram::{word_to_diagram, PlanarMatching, TlDiagram};
use crate::error::{Error, Result};
use crate::trace::track;

/// `[a_1,b_1]·[a_2,b_2]·…·[a_r,b_r]` with `a_j ≤ b_j` and both endpoint
/// sequences strictly decreasing. `[a,b]` stands for `(a, a+1, …, b)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct FcsWord {
    intervals: Vec<(i64, i64)>,
}

impl FcsWord {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        let ordered = intervals.iter().all(|&(a, b)| a <= b)
            && intervals
                .windows(2)
                .all(|w| w[0].0 > w[1].0 && w[0].1 > w[1].1);
        if !ordered {
            return Err(Error::MalformedFcs(intervals));
        }
        Ok(FcsWord { intervals })
    }

    /// The empty word, i.e. the unit.
    pub fn identity() -> Self {
        FcsWord::default()
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    /// Number of intervals `r`.
    pub fn interval_count(&self) -> usize {
        self.intervals.len()
    }

    /// Number of generators `ℓ(w)`.
    pub fn len(&self) -> usize {
        self.intervals
            .iter()
            .map(|&(a, b)| (b - a + 1) as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn translate(&self, by: i64) -> Self {
        FcsWord {
            intervals: self
                .intervals
                .iter()
                .map(|&(a, b)| (a + by, b + by))
                .collect(),
        }
    }

    /// The generator word `a_1, a_1+1, …, b_1, a_2, …, b_r`.
    pub fn to_word(&self) -> Vec<i64> {
        track!(FcsToWord);
        self.intervals.iter().flat_map(|&(a, b)| a..=b).collect()
    }
}

impl TryFrom<Vec<(i64, i64)>> for FcsWord {
    type Error = Error;

    fn try_from(v: Vec<(i64, i64)>) -> Result<Self> {
        FcsWord::new(v)
    }
}

impl From<FcsWord> for Vec<(i64, i64)> {
    fn from(w: FcsWord) -> Self {
        w.intervals
    }
}

impl fmt::Debug for FcsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "1");
        }
        for (a, b) in &self.intervals {
            write!(f, "[{a},{b}]")?;
        }
        Ok(())
    }
}

/// All fcs words whose generators lie in `[lo, hi]` and whose length is at
/// most `max_len`.
pub fn enumerate_fcs(lo: i64, hi: i64, max_len: usize) -> Vec<FcsWord> {
    fn extend(
        prefix: &mut Vec<(i64, i64)>,
        lo: i64,
        a_bound: i64,
        b_bound: i64,
        budget: usize,
        out: &mut Vec<FcsWord>,
    ) {
        out.push(FcsWord {
            intervals: prefix.clone(),
        });
        for b in (lo..b_bound).rev() {
            for a in (lo..=b.min(a_bound - 1)).rev() {
                let len = (b - a + 1) as usize;
                if len > budget {
                    break;
                }
                prefix.push((a, b));
                extend(prefix, lo, a, b, budget - len, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        extend(&mut Vec::new(), lo, hi + 1, hi + 1, max_len, &mut out);
    } else {
        out.push(FcsWord::identity());
    }
    out
}

/// Widest window (in generators) for which the normal-form table is built.
pub const MAX_TABLE_GENERATORS: usize = 10;

type Table = HashMap<PlanarMatching, FcsWord>;

static TABLES: [OnceLock<Table>; MAX_TABLE_GENERATORS + 1] =
    [const { OnceLock::new() }; MAX_TABLE_GENERATORS + 1];

/// Diagrams of the fcs words on generators `0..g` whose window is exactly
/// `[0, g]`.
fn table(g: usize) -> &'static Table {
    TABLES[g].get_or_init(|| {
        let full = g as i64;
        enumerate_fcs(0, full - 1, usize::MAX)
            .into_iter()
            .filter_map(|w| match word_to_diagram(&w.to_word()) {
                TlDiagram::Planar(m) if m.window() == Some((0, full)) => Some((m, w)),
                _ => None,
            })
            .collect()
    })
}

/// The fcs word whose diagram is `m`.
pub fn normal_form_of(m: &PlanarMatching) -> Result<FcsWord> {
    let Some((lo, hi)) = m.window() else {
        return Ok(FcsWord::identity());
    };
    let g = (hi - lo) as usize;
    if g > MAX_TABLE_GENERATORS {
        return Err(Error::WindowTooWide(g, MAX_TABLE_GENERATORS));
    }
    table(g)
        .get(&m.translate(-lo))
        .map(|w| w.translate(lo))
        .ok_or_else(|| Error::Falsified(format!("no fcs word has diagram {m:?}")))
}

/// Reduces a generator word to its normal form; `None` means the word is zero.
pub fn normalize(word: &[i64]) -> Result<Option<FcsWord>> {
    track!(Normalize);
    match word_to_diagram(word) {
        TlDiagram::Zero => Ok(None),
        TlDiagram::Planar(m) => normal_form_of(&m).map(Some),
    }
}
