use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::fcs::{normalize, FcsWord};
use crate::error::Result;
use crate::fock::{apply_word, FockVector, Rep};
use crate::partition::Partition;
use crate::trace::track;

/// An integer combination of normal-form monomials `T_w`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TlElement {
    terms: BTreeMap<FcsWord, i64>,
}

impl TlElement {
    pub fn zero() -> Self {
        TlElement::default()
    }

    pub fn one() -> Self {
        TlElement::monomial(FcsWord::identity())
    }

    pub fn monomial(w: FcsWord) -> Self {
        TlElement::from_terms([(w, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FcsWord, i64)>) -> Self {
        let mut x = TlElement::zero();
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn add_term(&mut self, w: FcsWord, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(coeff).expect("TL coefficient overflow");
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
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

    pub fn iter(&self) -> impl Iterator<Item = (&FcsWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn scale(&self, k: i64) -> Self {
        TlElement::from_terms(self.iter().map(|(w, c)| (w.clone(), c * k)))
    }

    pub fn coeff(&self, w: &FcsWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// The action on `λ` through the given representation.
    pub fn act(&self, lambda: &Partition, rep: Rep) -> FockVector {
        let start = FockVector::basis(lambda.clone());
        let mut out = FockVector::zero();
        for (w, c) in self.iter() {
            let image = apply_word(&start, &w.to_word(), rep);
            out = &out + &image.scale(c);
        }
        out
    }
}

/// The product `xy`, computed monomial by monomial through diagrams.
pub fn element_multiply(x: &TlElement, y: &TlElement) -> Result<TlElement> {
    track!(ElementMultiply);
    let mut out = TlElement::zero();
    for (u, c) in x.iter() {
        for (v, d) in y.iter() {
            let mut word = u.to_word();
            word.extend(v.to_word());
            if let Some(w) = normalize(&word)? {
                out.add_term(w, c * d);
            }
        }
    }
    Ok(out)
}

impl Add for &TlElement {
    type Output = TlElement;

    fn add(self, rhs: &TlElement) -> TlElement {
        let mut out = self.clone();
        for (w, c) in rhs.iter() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Neg for &TlElement {
    type Output = TlElement;

    fn neg(self) -> TlElement {
        TlElement::from_terms(self.iter().map(|(w, c)| (w.clone(), -c)))
    }
}

impl Sub for &TlElement {
    type Output = TlElement;

    fn sub(self, rhs: &TlElement) -> TlElement {
        self + &(-rhs)
    }
}

impl fmt::Debug for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}·T{w:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    word: FcsWord,
    coeff: i64,
}

impl Serialize for TlElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .iter()
            .map(|(w, c)| Term {
                word: w.clone(),
                coeff: c,
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TlElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(TlElement::from_terms(
            terms.into_iter().map(|t| (t.word, t.coeff)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(iv: &[(i64, i64)]) -> TlElement {
        TlElement::monomial(FcsWord::new(iv.to_vec()).unwrap())
    }

    #[test]
    fn products() {
        assert!(element_multiply(&t(&[(0, 0)]), &t(&[(0, 0)]))
            .unwrap()
            .is_zero());
        let x = &t(&[(1, 2)]) + &t(&[(0, 0)]).scale(3);
        assert_eq!(element_multiply(&TlElement::one(), &x).unwrap(), x);
        assert_eq!(element_multiply(&x, &TlElement::one()).unwrap(), x);
        assert_eq!(
            element_multiply(&t(&[(1, 1)]), &t(&[(3, 3)])).unwrap(),
            t(&[(3, 3), (1, 1)])
        );
        // T_0 T_1 T_0 = T_0
        let left = element_multiply(&t(&[(0, 1)]), &t(&[(0, 0)])).unwrap();
        assert_eq!(left, t(&[(0, 0)]));
    }

    #[test]
    fn zero_coefficients_vanish() {
        let x = &t(&[(0, 0)]) - &t(&[(0, 0)]);
        assert!(x.is_zero());
    }

    #[test]
    fn json_shape() {
        let x = &t(&[(1, 3), (0, 1)]) - &t(&[(0, 0)]);
        let s = serde_json::to_string(&x).unwrap();
        let back: TlElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(s.contains(r#"{"word":[[1,3],[0,1]],"coeff":1}"#));
    }
}
