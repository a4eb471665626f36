//! A brute-force model of `Ξ(T_q)` built only from box sets.
//!
//! Border strips are found by enumerating every sub-partition `μ ⊆ λ` and
//! testing `λ/μ` for connectedness and the absence of 2×2 squares. Nothing
//! here calls the rim-hook code of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pecomb::Partition;

pub type Cell = (i64, i64);

pub fn cells(parts: &[usize]) -> BTreeSet<Cell> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len as i64).map(move |j| (i as i64 + 1, j)))
        .collect()
}

/// Every partition contained in `parts`.
pub fn sub_partitions(parts: &[usize]) -> Vec<Vec<usize>> {
    fn go(parts: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == parts.len() {
            let mut mu = cur.clone();
            while mu.last() == Some(&0) {
                mu.pop();
            }
            out.push(mu);
            return;
        }
        for len in 0..=parts[i].min(cap) {
            cur.push(len);
            go(parts, i + 1, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(parts, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip {
    pub remainder: Vec<usize>,
    pub min_content: i64,
    pub max_content: i64,
    pub height: usize,
    pub width: usize,
    pub size: usize,
}

impl Strip {
    pub fn balanced(&self) -> bool {
        self.height == self.width
    }
}

fn connected(skew: &BTreeSet<Cell>) -> bool {
    let Some(&start) = skew.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        for n in [(r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)] {
            if skew.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == skew.len()
}

/// All border strips `λ/μ`.
pub fn border_strips(parts: &[usize]) -> Vec<Strip> {
    let outer = cells(parts);
    let mut out = Vec::new();
    for mu in sub_partitions(parts) {
        let inner = cells(&mu);
        let skew: BTreeSet<Cell> = outer.difference(&inner).copied().collect();
        if skew.is_empty() || !connected(&skew) {
            continue;
        }
        let square = skew.iter().any(|&(r, c)| {
            skew.contains(&(r + 1, c))
                && skew.contains(&(r, c + 1))
                && skew.contains(&(r + 1, c + 1))
        });
        if square {
            continue;
        }
        let contents: Vec<i64> = skew.iter().map(|(r, c)| c - r).collect();
        let rows: BTreeSet<i64> = skew.iter().map(|x| x.0).collect();
        let cols: BTreeSet<i64> = skew.iter().map(|x| x.1).collect();
        out.push(Strip {
            remainder: mu,
            min_content: *contents.iter().min().unwrap(),
            max_content: *contents.iter().max().unwrap(),
            height: rows.len(),
            width: cols.len(),
            size: skew.len(),
        });
    }
    out
}

/// Smallest balanced border strip with the given minimal content.
pub fn minimal_starting(strips: &[Strip], c: i64) -> Option<&Strip> {
    strips
        .iter()
        .filter(|s| s.balanced() && s.min_content == c)
        .min_by_key(|s| s.size)
}

/// Smallest balanced border strip with the given maximal content.
pub fn minimal_ending(strips: &[Strip], c: i64) -> Option<&Strip> {
    strips
        .iter()
        .filter(|s| s.balanced() && s.max_content == c)
        .min_by_key(|s| s.size)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleCase {
    Add,
    Zero,
    Right,
    Below,
}

pub fn oracle_case(parts: &[usize], q: i64) -> OracleCase {
    let set = cells(parts);
    if parts.is_empty() {
        return if q == 0 {
            OracleCase::Add
        } else {
            OracleCase::Zero
        };
    }
    let addable = |r: i64, c: i64| {
        !set.contains(&(r, c))
            && (r == 1 || set.contains(&(r - 1, c)))
            && (c == 1 || set.contains(&(r, c - 1)))
    };
    let removable = |r: i64, c: i64| {
        set.contains(&(r, c)) && !set.contains(&(r + 1, c)) && !set.contains(&(r, c + 1))
    };
    let diag = |q: i64| {
        (1..=parts.len() as i64 + 1)
            .map(move |r| (r, r + q))
            .filter(|&(_, c)| c >= 1)
    };
    if diag(q).any(|(r, c)| addable(r, c)) {
        return OracleCase::Add;
    }
    if diag(q).any(|(r, c)| removable(r, c)) {
        return OracleCase::Zero;
    }
    let rim = diag(q).find(|&(r, c)| set.contains(&(r, c)) && !set.contains(&(r + 1, c + 1)));
    match rim {
        None => OracleCase::Zero,
        Some((r, c)) => match (set.contains(&(r, c + 1)), set.contains(&(r + 1, c))) {
            (true, false) => OracleCase::Right,
            (false, true) => OracleCase::Below,
            other => panic!("no case for {parts:?} at {q}: {other:?}"),
        },
    }
}

/// `Ξ(T_q)(λ)` from the model.
pub fn oracle_xi(parts: &[usize], q: i64) -> Option<Vec<usize>> {
    match oracle_case(parts, q) {
        OracleCase::Add => {
            let mut out = parts.to_vec();
            let row = (0..=parts.len()).find(|&i| {
                let len = parts.get(i).copied().unwrap_or(0) as i64;
                len - i as i64 == q && (i == 0 || (parts[i - 1] as i64) > len)
            })?;
            if row == out.len() {
                out.push(1);
            } else {
                out[row] += 1;
            }
            Some(out)
        }
        OracleCase::Zero => None,
        OracleCase::Right => {
            minimal_starting(&border_strips(parts), q + 1).map(|s| s.remainder.clone())
        }
        OracleCase::Below => {
            minimal_ending(&border_strips(parts), q - 1).map(|s| s.remainder.clone())
        }
    }
}

pub fn to_partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("oracle produces partitions")
}
