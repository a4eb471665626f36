//! The two `TL_∞(0)` actions on the Fock space `Par_ℤ`.
//!
//! `Ξ′` is the plain Fock action: `T_q` adds a `q`-box and removes a
//! `(q-1)`-box. `Ξ` is the twisted action determined by `T_q(∅) = δ_{q0}□`
//! and `T_q(λ) = λ ⊞ q` whenever a `q`-box is addable; on the remaining cases
//! it is zero or removes a minimal balanced rim hook.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::trace::track;

/// Which of the two representations to act with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rep {
    Xi,
    XiPrime,
}

/// A finite integer combination of partitions. Zero coefficients are never
/// stored, so structural equality is equality in `Par_ℤ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FockVector {
    terms: BTreeMap<Partition, i64>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        FockVector { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut v = FockVector::zero();
        for (p, c) in terms {
            v.add_term(p, c);
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e
                    .get()
                    .checked_add(coeff)
                    .expect("Fock coefficient overflow");
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (size ascending, then reverse-lex).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn scale(&self, k: i64) -> Self {
        FockVector::from_terms(self.iter().map(|(p, c)| (p.clone(), c * k)))
    }

    /// The part supported on partitions of exactly `size` boxes.
    pub fn graded_part(&self, size: usize) -> Self {
        FockVector::from_terms(
            self.iter()
                .filter(|(p, _)| p.size() == size)
                .map(|(p, c)| (p.clone(), c)),
        )
    }

    /// Linear extension of a partition-level map.
    fn map_linear<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Partition) -> FockVector,
    {
        let mut out = FockVector::zero();
        for (p, c) in self.iter() {
            for (image, d) in f(p).iter() {
                out.add_term(image.clone(), c * d);
            }
        }
        out
    }
}

impl Add for &FockVector {
    type Output = FockVector;

    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (p, c) in rhs.iter() {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl Sub for &FockVector {
    type Output = FockVector;

    fn sub(self, rhs: &FockVector) -> FockVector {
        self + &(-rhs)
    }
}

impl Neg for &FockVector {
    type Output = FockVector;

    fn neg(self) -> FockVector {
        self.scale(-1)
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}·{p}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    partition: Partition,
    coeff: i64,
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .iter()
            .map(|(p, c)| Term {
                partition: p.clone(),
                coeff: c,
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(FockVector::from_terms(
            terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

/// The five mutually exclusive local configurations of `λ` around content `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// An addable `q`-box.
    A,
    /// A removable `q`-box.
    B,
    /// No boxes of content `q-1`, `q` or `q+1`.
    C,
    /// The rim `q`-box has a box to its right but none below.
    D,
    /// The rim `q`-box has a box below but none to its right.
    E,
}

fn has_content(lambda: &Partition, c: i64) -> bool {
    !lambda.is_empty() && 1 - lambda.len() as i64 <= c && c < lambda.row(1) as i64
}

/// Classifies `(λ, q)`. Panics if none of the five cases applies, which would
/// contradict their exhaustiveness.
pub fn classify_case(lambda: &Partition, q: i64) -> CaseTag {
    track!(ClassifyCase);
    if lambda.is_empty() {
        return if q == 0 { CaseTag::A } else { CaseTag::C };
    }
    if lambda.addable_contents().contains(&q) {
        return CaseTag::A;
    }
    if lambda.removable_contents().contains(&q) {
        return CaseTag::B;
    }
    if !(q - 1..=q + 1).any(|c| has_content(lambda, c)) {
        return CaseTag::C;
    }
    let b = lambda
        .rim_box(q)
        .unwrap_or_else(|| panic!("case split failed for {lambda} at {q}: no rim box"));
    let right = lambda.has_box(b.row, b.col + 1);
    let below = lambda.has_box(b.row + 1, b.col);
    match (right, below) {
        (true, false) => CaseTag::D,
        (false, true) => CaseTag::E,
        _ => panic!("case split failed for {lambda} at {q}"),
    }
}

/// `Ξ(T_q)(λ)`: zero or a single partition with coefficient one.
pub fn xi_on_partition(lambda: &Partition, q: i64) -> Option<Partition> {
    track!(XiOnPartition);
    match classify_case(lambda, q) {
        CaseTag::A => lambda.add_box(q),
        CaseTag::B | CaseTag::C => None,
        CaseTag::D => lambda
            .minimal_balanced_hook_starting(q + 1)
            .map(|h| h.remainder),
        CaseTag::E => lambda
            .minimal_balanced_hook_ending(q - 1)
            .map(|h| h.remainder),
    }
}

pub fn xi_apply(v: &FockVector, q: i64) -> FockVector {
    track!(XiApply);
    v.map_linear(|p| match xi_on_partition(p, q) {
        Some(k) => FockVector::basis(k),
        None => FockVector::zero(),
    })
}

/// `Ξ′(T_q)(λ) = λ ⊞ q + λ ⊟ (q-1)`.
pub fn xi_prime_on_partition(lambda: &Partition, q: i64) -> FockVector {
    track!(XiPrimeOnPartition);
    let mut out = FockVector::zero();
    if let Some(up) = lambda.add_box(q) {
        out.add_term(up, 1);
    }
    if let Some(down) = lambda.remove_box(q - 1) {
        out.add_term(down, 1);
    }
    out
}

pub fn xi_prime_apply(v: &FockVector, q: i64) -> FockVector {
    v.map_linear(|p| xi_prime_on_partition(p, q))
}

pub fn apply_generator(v: &FockVector, q: i64, rep: Rep) -> FockVector {
    match rep {
        Rep::Xi => xi_apply(v, q),
        Rep::XiPrime => xi_prime_apply(v, q),
    }
}

/// Acts with `T_{i_1} ⋯ T_{i_r}` for `word = [i_1, ..., i_r]`; the rightmost
/// generator acts first.
pub fn apply_word(v: &FockVector, word: &[i64], rep: Rep) -> FockVector {
    track!(ApplyWord);
    let mut out = v.clone();
    for &q in word.iter().rev() {
        if out.is_zero() {
            break;
        }
        out = apply_generator(&out, q, rep);
    }
    out
}

/// The multiplicity `a^q_{νκ}`, which is 0 or 1.
pub fn a_q_entry(nu: &Partition, kappa: &Partition, q: i64) -> u32 {
    track!(AQEntry);
    u32::from(xi_on_partition(nu, q).as_ref() == Some(kappa))
}

/// The multiplicity `a_{νκ} = Σ_q a^q_{νκ}`.
pub fn a_entry(nu: &Partition, kappa: &Partition) -> u32 {
    track!(AEntry);
    let (lo, hi) = support_bounds(nu);
    (lo..=hi).map(|q| a_q_entry(nu, kappa, q)).sum()
}

/// A window `[qmin, qmax]` outside which both `Ξ(T_q)` and `Ξ′(T_q)` kill `λ`.
pub fn support_bounds(lambda: &Partition) -> (i64, i64) {
    track!(SupportBounds);
    if lambda.is_empty() {
        (0, 0)
    } else {
        (-(lambda.len() as i64), lambda.row(1) as i64)
    }
}

/// The nonzero `(q, Ξ(T_q)(λ))` pairs: the summands of `R(λ) ⊗ R(□)` by block.
pub fn tensor_row(lambda: &Partition) -> Vec<(i64, Partition)> {
    let (lo, hi) = support_bounds(lambda);
    (lo..=hi)
        .rev()
        .filter_map(|q| xi_on_partition(lambda, q).map(|k| (q, k)))
        .collect()
}
