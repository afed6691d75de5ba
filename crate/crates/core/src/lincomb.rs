//! Finite formal linear combinations over a canonical basis, and tensors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::basis::{Graded, MulBasis};
use crate::scalar::Scalar;

/// A finitely supported map basis -> nonzero scalar.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

/// Element of H ⊗ H, a combination of ordered basis pairs.
pub type Tensor2<B> = LinComb<(B, B)>;

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: B, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Scalar)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in it {
            out.add_term(b, c);
        }
        out
    }

    /// Adds c·b in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_default()
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

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
    }

    /// u + c·v.
    pub fn combine(&self, v: &Self, c: &Scalar) -> Self {
        let mut out = self.clone();
        out.add_scaled(v, c);
        out
    }

    pub fn add_scaled(&mut self, v: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &v.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    /// Linear extension of a map on basis elements.
    pub fn map_basis<B2: Ord + Clone>(&self, f: impl Fn(&B) -> B2) -> LinComb<B2> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }

    /// Linear extension of a map basis -> combination.
    pub fn flat_map<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<B2>) -> LinComb<B2> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Σ c·f(b).
    pub fn eval(&self, mut f: impl FnMut(&B) -> Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (b, c) in &self.terms {
            let v = f(b);
            if !v.is_zero() {
                acc += c * &v;
            }
        }
        acc
    }

    pub fn filter(&self, pred: impl Fn(&B) -> bool) -> Self {
        LinComb { terms: self.terms.iter().filter(|(b, _)| pred(b)).map(|(b, c)| (b.clone(), c.clone())).collect() }
    }

    pub fn into_terms(self) -> BTreeMap<B, Scalar> {
        self.terms
    }
}

impl<B: Ord + Clone + Graded> LinComb<B> {
    /// Keeps only the terms of degree ≤ n.
    pub fn truncate(&self, n: usize) -> Self {
        self.filter(|b| b.degree() <= n)
    }

    pub fn homogeneous_part(&self, n: usize) -> Self {
        self.filter(|b| b.degree() == n)
    }

    /// Largest degree present, or None for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|b| b.degree()).max()
    }
}

impl<B: MulBasis> LinComb<B> {
    pub fn one() -> Self {
        Self::basis(B::unit())
    }

    /// Bilinear extension of the basis product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<B: MulBasis + Graded> LinComb<B> {
    /// Product with every term of degree above `n` discarded.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            let da = a.degree();
            if da > n {
                continue;
            }
            for (b, y) in &other.terms {
                if da + b.degree() <= n {
                    out.add_term(a.mul(b), x * y);
                }
            }
        }
        out
    }
}

/// u + c·v with zero terms pruned.
pub fn lincomb_combine<B: Ord + Clone>(u: &LinComb<B>, v: &LinComb<B>, c: &Scalar) -> LinComb<B> {
    u.combine(v, c)
}

/// Evaluates the functional given by a table on v; absent keys count as 0.
pub fn functional_eval<B: Ord + Clone>(f: &BTreeMap<B, Scalar>, v: &LinComb<B>) -> Scalar {
    v.eval(|b| f.get(b).cloned().unwrap_or_default())
}

/// a ⊗ b.
pub fn tensor<B: Ord + Clone>(a: &LinComb<B>, b: &LinComb<B>) -> Tensor2<B> {
    let mut out = Tensor2::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// τ(u ⊗ v) = v ⊗ u.
pub fn flip<B: Ord + Clone>(t: &Tensor2<B>) -> Tensor2<B> {
    t.map_basis(|(a, b)| (b.clone(), a.clone()))
}

/// (f ⊗ g)(t) for linear maps given on basis elements.
pub fn tensor_map<B: Ord + Clone, C: Ord + Clone>(
    t: &Tensor2<B>,
    mut f: impl FnMut(&B) -> LinComb<C>,
    mut g: impl FnMut(&B) -> LinComb<C>,
) -> Tensor2<C> {
    let mut out = Tensor2::zero();
    for ((a, b), c) in t.iter() {
        let fa = f(a);
        if fa.is_zero() {
            continue;
        }
        let gb = g(b);
        out.add_scaled(&tensor(&fa, &gb), c);
    }
    out
}

/// m(t) for the basis product.
pub fn multiply_out<B: MulBasis>(t: &Tensor2<B>) -> LinComb<B> {
    t.map_basis(|(a, b)| a.mul(b))
}

/// (f ⊗ g)(t) for scalar-valued functionals.
pub fn tensor_eval<B: Ord + Clone>(
    t: &Tensor2<B>,
    mut f: impl FnMut(&B) -> Scalar,
    mut g: impl FnMut(&B) -> Scalar,
) -> Scalar {
    t.eval(|(a, b)| {
        let x = f(a);
        if x.is_zero() {
            return Scalar::zero();
        }
        x * g(b)
    })
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, &Scalar::one())
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        self.combine(rhs, &Scalar::one())
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, &Scalar::from_int(-1))
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        self.combine(rhs, &Scalar::from_int(-1))
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(rhs, &Scalar::one());
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(rhs, &Scalar::from_int(-1));
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }
}

impl<B: Ord + Clone> Mul<&Scalar> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Scalar) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Basis elements that know how to print themselves inside a sum.
pub trait ShowBasis {
    fn show(&self) -> String;
    fn is_unit(&self) -> bool {
        false
    }
}

impl<B: fmt::Display + MulBasis> ShowBasis for B {
    fn show(&self) -> String {
        self.to_string()
    }
    fn is_unit(&self) -> bool {
        *self == B::unit()
    }
}

/// Renders a combination as "c1*b1 + c2*b2", omitting unit coefficients.
pub fn render_sum<B: Ord, F: Fn(&B) -> (String, bool)>(lc: &LinComb<B>, show: F) -> String {
    if lc.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (b, c)) in lc.terms.iter().enumerate() {
        let (body, unit) = show(b);
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if unit {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag}*{body}"));
        }
    }
    out
}

impl<B: Ord + ShowBasis> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_sum(self, |b| (b.show(), b.is_unit())))
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<B> {
    basis: B,
    coeff: Scalar,
}

impl<B: Ord + Clone + Serialize> Serialize for LinComb<B> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&TermRepr { basis: b.clone(), coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de, B: Ord + Clone + DeserializeOwned> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermRepr<B>>::deserialize(d)?;
        Ok(LinComb::from_terms(raw.into_iter().map(|t| (t.basis, t.coeff))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::CommMonomial;

    fn x(n: usize) -> LinComb<CommMonomial> {
        LinComb::basis(CommMonomial::gen(n))
    }

    #[test]
    fn cancellation_prunes() {
        let u = x(1);
        let v = x(1).scale(&Scalar::from_int(-1));
        assert!(lincomb_combine(&u, &v, &Scalar::one()).is_zero());
    }

    #[test]
    fn combine_accumulates() {
        let u = x(2).scale(&Scalar::from_int(2));
        let r = lincomb_combine(&u, &x(2), &Scalar::from_int(3));
        assert_eq!(r.coeff(&CommMonomial::gen(2)), Scalar::from_int(5));
    }

    #[test]
    fn tensor_combine() {
        let a = tensor(&x(1), &x(1));
        let b = tensor(&x(2), &LinComb::one());
        let r = lincomb_combine(&a, &b, &Scalar::one());
        assert_eq!(r.len(), 2);
        assert_eq!(flip(&flip(&r)), r);
    }

    #[test]
    fn functional_eval_examples() {
        let mut f = BTreeMap::new();
        f.insert(CommMonomial::gen(1), Scalar::one());
        assert_eq!(functional_eval(&f, &x(1).scale(&Scalar::from_int(3))), Scalar::from_int(3));
        assert_eq!(functional_eval(&f, &x(2)), Scalar::zero());
        f.insert(CommMonomial::gen(2), Scalar::from_int(2));
        assert_eq!(functional_eval(&f, &(x(1) + x(2))), Scalar::from_int(3));
    }

    #[test]
    fn display_and_json() {
        let v = x(1).scale(&Scalar::from_int(-2)) + LinComb::one() + x(2);
        assert_eq!(v.to_string(), "1 - 2*x1 + x2");
        let j = serde_json::to_string(&x(2)).unwrap();
        assert_eq!(j, r#"[{"basis":{"2":1},"coeff":"1"}]"#);
        let back: LinComb<CommMonomial> = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x(2));
    }
}
