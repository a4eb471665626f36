//! Planar diagrams for monomials of `TL_∞(0)`.
//!
//! A diagram is a perfect matching of two rows of points indexed by `ℤ`,
//! equal to the identity (bottom `i` to top `i`) outside a finite window.
//! Only the window is stored. Composition that closes a loop gives zero,
//! since the loop parameter is 0.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::trace::track;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Bottom,
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Endpoint {
    pub side: Side,
    pub index: i64,
}

/// A nonzero diagram, trimmed to its minimal window.
///
/// Points are numbered `0..n` along the bottom and `n..2n` along the top, so
/// `links[x]` is the partner of point `x`. The window is
/// `[start, start + n - 1]`; `n = 0` is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarMatching {
    start: i64,
    links: Vec<usize>,
}

/// A `TL_∞(0)` monomial in diagram form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TlDiagram {
    Zero,
    Planar(PlanarMatching),
}

impl PlanarMatching {
    pub fn identity() -> Self {
        PlanarMatching {
            start: 0,
            links: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.links.is_empty()
    }

    /// Number of columns in the window.
    pub fn width(&self) -> usize {
        self.links.len() / 2
    }

    /// `[m, M]`, or `None` for the identity.
    pub fn window(&self) -> Option<(i64, i64)> {
        (!self.is_identity()).then(|| (self.start, self.start + self.width() as i64 - 1))
    }

    fn endpoint(&self, x: usize) -> Endpoint {
        let n = self.width();
        if x < n {
            Endpoint {
                side: Side::Bottom,
                index: self.start + x as i64,
            }
        } else {
            Endpoint {
                side: Side::Top,
                index: self.start + (x - n) as i64,
            }
        }
    }

    fn point(&self, e: Endpoint) -> Option<usize> {
        let n = self.width() as i64;
        let off = e.index - self.start;
        if !(0..n).contains(&off) {
            return None;
        }
        Some(match e.side {
            Side::Bottom => off as usize,
            Side::Top => (n + off) as usize,
        })
    }

    pub fn partner(&self, e: Endpoint) -> Endpoint {
        match self.point(e) {
            Some(x) => self.endpoint(self.links[x]),
            None => Endpoint {
                side: match e.side {
                    Side::Bottom => Side::Top,
                    Side::Top => Side::Bottom,
                },
                index: e.index,
            },
        }
    }

    /// The pairs inside the window, each listed once with its smaller point first.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        (0..self.links.len())
            .filter(|&x| x < self.links[x])
            .map(|x| (self.endpoint(x), self.endpoint(self.links[x])))
            .collect()
    }

    /// Mirror image through the horizontal axis.
    pub fn reflect(&self) -> Self {
        let n = self.width();
        let flip = |x: usize| if x < n { x + n } else { x - n };
        let mut links = vec![0; 2 * n];
        for x in 0..2 * n {
            links[flip(x)] = flip(self.links[x]);
        }
        PlanarMatching {
            start: self.start,
            links,
        }
    }

    /// Shifts every index by `by`.
    pub fn translate(&self, by: i64) -> Self {
        if self.is_identity() {
            return self.clone();
        }
        PlanarMatching {
            start: self.start + by,
            links: self.links.clone(),
        }
    }

    /// Re-expresses the matching on the window `[lo, lo + n - 1]`, which must
    /// contain the current one.
    fn widen(&self, lo: i64, n: usize) -> Vec<usize> {
        let mut links: Vec<usize> = (0..2 * n)
            .map(|x| if x < n { x + n } else { x - n })
            .collect();
        let m = self.width();
        let shift = (self.start - lo) as usize;
        let to_wide = |x: usize| if x < m { x + shift } else { x - m + n + shift };
        for x in 0..2 * m {
            links[to_wide(x)] = to_wide(self.links[x]);
        }
        links
    }

    /// Drops identity columns from both ends of a raw window.
    fn trimmed(start: i64, links: Vec<usize>) -> Self {
        let n = links.len() / 2;
        let through = |c: usize| links[c] == c + n;
        let Some(first) = (0..n).find(|&c| !through(c)) else {
            return PlanarMatching::identity();
        };
        let last = (0..n).rev().find(|&c| !through(c)).unwrap();
        let m = last - first + 1;
        let to_new = |x: usize| if x < n { x - first } else { x - n - first + m };
        let mut out = vec![0; 2 * m];
        for c in first..=last {
            for x in [c, c + n] {
                out[to_new(x)] = to_new(links[x]);
            }
        }
        PlanarMatching {
            start: start + first as i64,
            links: out,
        }
    }

    /// Stacks `self` on top of `lower`: `lower` acts first.
    fn compose(&self, lower: &PlanarMatching) -> TlDiagram {
        if self.is_identity() {
            return TlDiagram::Planar(lower.clone());
        }
        if lower.is_identity() {
            return TlDiagram::Planar(self.clone());
        }
        let (a_lo, a_hi) = self.window().unwrap();
        let (b_lo, b_hi) = lower.window().unwrap();
        let lo = a_lo.min(b_lo);
        let n = (a_hi.max(b_hi) - lo + 1) as usize;
        let upper = self.widen(lo, n);
        let lower = lower.widen(lo, n);

        // nodes: 0..n bottom of `lower`, n..2n middle row, 2n..3n top of `upper`
        let mut uf = UnionFind::new(3 * n);
        for x in 0..2 * n {
            uf.union(x, lower[x]);
            uf.union(x + n, upper[x] + n);
        }
        let is_outer = |v: usize| v < n || v >= 2 * n;
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); 3 * n];
        for v in (0..3 * n).filter(|&v| is_outer(v)) {
            let root = uf.find(v);
            ends[root].push(v);
        }
        for v in n..2 * n {
            if ends[uf.find(v)].is_empty() {
                return TlDiagram::Zero;
            }
        }
        let to_result = |v: usize| if v < n { v } else { v - n };
        let mut links = vec![0; 2 * n];
        for pair in ends.iter().filter(|e| !e.is_empty()) {
            debug_assert_eq!(pair.len(), 2);
            let (x, y) = (to_result(pair[0]), to_result(pair[1]));
            links[x] = y;
            links[y] = x;
        }
        TlDiagram::Planar(PlanarMatching::trimmed(lo, links))
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let show = |e: Endpoint| match e.side {
            Side::Bottom => format!("b{}", e.index),
            Side::Top => format!("t{}", e.index),
        };
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", show(a), show(b)))
            .collect();
        write!(f, "{{{}}}", pairs.join(" "))
    }
}

impl Serialize for PlanarMatching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PlanarMatching", 2)?;
        st.serialize_field("window", &self.window())?;
        st.serialize_field("pairs", &self.pairs())?;
        st.end()
    }
}

impl Serialize for TlDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            TlDiagram::Zero => s.serialize_none(),
            TlDiagram::Planar(m) => s.serialize_some(m),
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl TlDiagram {
    pub fn identity() -> Self {
        TlDiagram::Planar(PlanarMatching::identity())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, TlDiagram::Zero)
    }

    pub fn as_planar(&self) -> Option<&PlanarMatching> {
        match self {
            TlDiagram::Zero => None,
            TlDiagram::Planar(m) => Some(m),
        }
    }

    pub fn reflect(&self) -> Self {
        match self {
            TlDiagram::Zero => TlDiagram::Zero,
            TlDiagram::Planar(m) => TlDiagram::Planar(m.reflect()),
        }
    }
}

/// `T_i`: a cap joining bottom `i` and `i+1`, and a cup joining top `i` and
/// `i+1`; identity elsewhere.
pub fn generator_diagram(i: i64) -> TlDiagram {
    track!(GeneratorDiagram);
    TlDiagram::Planar(PlanarMatching {
        start: i,
        links: vec![1, 0, 3, 2],
    })
}

/// The product `d1 · d2`, with `d2` drawn below `d1`.
pub fn diagram_product(d1: &TlDiagram, d2: &TlDiagram) -> TlDiagram {
    track!(DiagramProduct);
    match (d1, d2) {
        (TlDiagram::Planar(a), TlDiagram::Planar(b)) => a.compose(b),
        _ => TlDiagram::Zero,
    }
}

/// `T_{i_1} ⋯ T_{i_r}` as a diagram.
pub fn word_to_diagram(word: &[i64]) -> TlDiagram {
    track!(WordToDiagram);
    let mut d = TlDiagram::identity();
    for &i in word {
        d = diagram_product(&d, &generator_diagram(i));
        if d.is_zero() {
            break;
        }
    }
    d
}
