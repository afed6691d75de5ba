//! Canonical basis elements: commutative monomials and words.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Grading on basis elements.
pub trait Graded {
    fn degree(&self) -> usize;
}

/// A basis that is closed under a monoid product (monomials, words, forests).
pub trait MulBasis: Ord + Clone {
    fn unit() -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// Commutative monomial over an ordered set of generators, stored as
/// generator -> positive exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
#[serde(bound(serialize = "G: Serialize + Ord"))]
pub struct Monomial<G: Ord> {
    exps: BTreeMap<G, u32>,
}

/// Monomial in the generators x_1, x_2, ... of a polynomial Hopf algebra.
pub type CommMonomial = Monomial<usize>;

impl<G: Ord + Clone> Monomial<G> {
    pub fn one() -> Self {
        Monomial { exps: BTreeMap::new() }
    }

    pub fn gen(g: G) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: G, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(g, e);
        }
        Monomial { exps }
    }

    /// Builds a monomial from (generator, exponent) pairs; repeated
    /// generators accumulate, zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (G, u32)>>(pairs: I) -> Self {
        let mut exps = BTreeMap::new();
        for (g, e) in pairs {
            if e > 0 {
                *exps.entry(g).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, g: &G) -> u32 {
        self.exps.get(g).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, u32)> {
        self.exps.iter().map(|(g, &e)| (g, e))
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn len(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Generators with multiplicity, in increasing order.
    pub fn factors(&self) -> Vec<G> {
        let mut out = Vec::new();
        for (g, &e) in &self.exps {
            for _ in 0..e {
                out.push(g.clone());
            }
        }
        out
    }

    /// The single generator of a degree-one monomial x_g, if that is what this is.
    pub fn as_generator(&self) -> Option<&G> {
        let mut it = self.exps.iter();
        match (it.next(), it.next()) {
            (Some((g, 1)), None) => Some(g),
            _ => None,
        }
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (g, &e) in &other.exps {
            *exps.entry(g.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }
}

impl<'de, G: Ord + Clone + Deserialize<'de>> Deserialize<'de> for Monomial<G> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<G, u32>::deserialize(d)?;
        Ok(Monomial::from_pairs(raw))
    }
}

impl<G: Ord + Clone> MulBasis for Monomial<G> {
    fn unit() -> Self {
        Self::one()
    }
    fn mul(&self, other: &Self) -> Self {
        self.times(other)
    }
}

impl<G: Ord + Clone + Graded> Graded for Monomial<G> {
    fn degree(&self) -> usize {
        self.exps.iter().map(|(g, &e)| g.degree() * e as usize).sum()
    }
}

impl Graded for usize {
    fn degree(&self) -> usize {
        *self
    }
}

impl fmt::Display for CommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.exps.iter().map(|(g, &e)| if e == 1 { format!("x{g}") } else { format!("x{g}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl<G: Ord + fmt::Debug> fmt::Debug for Monomial<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.exps.iter()).finish()
    }
}

/// Word in the free monoid on generators x_1, x_2, ...; the empty word is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(n: usize) -> Self {
        Word(vec![n])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Sorts the letters into a commutative monomial.
    pub fn abelianize(&self) -> CommMonomial {
        CommMonomial::from_pairs(self.0.iter().map(|&n| (n, 1)))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl MulBasis for Word {
    fn unit() -> Self {
        Word::empty()
    }
    fn mul(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

impl Graded for Word {
    fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|n| format!("x{n}")).collect();
        write!(f, "{}", parts.join(""))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl<A: MulBasis, B: MulBasis> MulBasis for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }
    fn mul(&self, other: &Self) -> Self {
        (self.0.mul(&other.0), self.1.mul(&other.1))
    }
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_degree_and_product() {
        let a = CommMonomial::from_pairs([(1, 2), (3, 1)]);
        let b = CommMonomial::from_pairs([(1, 1), (2, 1)]);
        assert_eq!(a.degree(), 5);
        assert_eq!(a.times(&b), b.times(&a));
        assert_eq!(a.times(&b).degree(), 8);
        assert_eq!(a.to_string(), "x1^2*x3");
        assert_eq!(CommMonomial::from_pairs([(2, 0)]), CommMonomial::one());
    }

    #[test]
    fn word_concat() {
        let u = Word(vec![1, 2]);
        let v = Word(vec![3]);
        assert_eq!(u.concat(&v), Word(vec![1, 2, 3]));
        assert_eq!(u.concat(&Word::empty()), u);
        assert_eq!(u.concat(&v).degree(), 6);
        assert_eq!(Word(vec![2, 1]).abelianize(), Word(vec![1, 2]).abelianize());
    }

    #[test]
    fn monomial_json_shape() {
        let m = CommMonomial::from_pairs([(1, 2), (4, 1)]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"1":2,"4":1}"#);
        let back: CommMonomial = serde_json::from_str(r#"{"4":1,"1":2}"#).unwrap();
        assert_eq!(back, m);
    }
}
