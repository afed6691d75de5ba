//! The polynomial Hopf algebras H_inv and H_FdB on generators x_1, x_2, ...,
//! their characters, infinitesimal characters and convolution.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::{CommMonomial, Graded};
use crate::combinat::{factorial_q, partitions};
use crate::error::{Error, Result};
use crate::hopf::GradedHopf;
use crate::lincomb::{tensor_eval, LinComb, Tensor2};
use crate::scalar::Scalar;
use crate::series::{bell_polynomial, SeriesKind, TruncSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfKind {
    /// Coordinates of invertible series under pointwise product.
    Inv,
    /// Coordinates of formal diffeomorphisms under composition.
    Fdb,
}

impl fmt::Display for HopfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HopfKind::Inv => "inv",
            HopfKind::Fdb => "fdb",
        })
    }
}

/// An element of H_inv or H_FdB.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfElement {
    pub algebra: HopfKind,
    pub value: LinComb<CommMonomial>,
}

/// x_n as a combination, with x_0 = 1.
pub fn x(n: usize) -> LinComb<CommMonomial> {
    if n == 0 {
        LinComb::one()
    } else {
        LinComb::basis(CommMonomial::gen(n))
    }
}

/// Δ on the generator x_n.
///
/// H_inv: Σ_p x_p ⊗ x_{n-p}. H_FdB: Σ_m (m+1)!/(n+1)! B_{n+1,m+1}(1, 2!x_1, 3!x_2, ...) ⊗ x_m.
pub fn generator_coproduct(kind: HopfKind, n: usize) -> Tensor2<CommMonomial> {
    let mut out = Tensor2::zero();
    if n == 0 {
        out.add_term((CommMonomial::one(), CommMonomial::one()), Scalar::one());
        return out;
    }
    match kind {
        HopfKind::Inv => {
            for p in 0..=n {
                out.add_scaled(&crate::lincomb::tensor(&x(p), &x(n - p)), &Scalar::one());
            }
        }
        HopfKind::Fdb => {
            let scale_den = factorial_q(n + 1);
            for m in 0..=n {
                let bell = bell_polynomial(n + 1, m + 1).expect("1 ≤ m+1 ≤ n+1");
                // Substitute y_i = i! x_{i-1}, with x_0 = 1.
                let left = bell.flat_map(|mono| {
                    let mut term = LinComb::one();
                    for (i, e) in mono.iter() {
                        let gen = x(i - 1).scale(&factorial_q(*i));
                        term = term.mul(&gen.pow(e));
                    }
                    term
                });
                let c = factorial_q(m + 1) * scale_den.recip().expect("nonzero");
                out.add_scaled(&crate::lincomb::tensor(&left, &x(m)), &c);
            }
        }
    }
    out
}

/// All monomials of the given degree in x_1, x_2, ... (one per integer partition).
pub fn monomials_of_degree(n: usize) -> Vec<CommMonomial> {
    partitions(n).into_iter().map(|p| CommMonomial::from_pairs(p.into_iter().map(|k| (k, 1)))).collect()
}

pub fn monomials_up_to(n: usize) -> Vec<CommMonomial> {
    (0..=n).flat_map(monomials_of_degree).collect()
}

/// H_inv or H_FdB with coproducts and antipodes of generators tabulated up
/// to a degree bound.
#[derive(Debug, Clone)]
pub struct PolyHopf {
    kind: HopfKind,
    bound: usize,
    delta: Vec<Tensor2<CommMonomial>>,
    s: Vec<LinComb<CommMonomial>>,
}

impl PolyHopf {
    pub fn new(kind: HopfKind, bound: usize) -> Self {
        let delta: Vec<_> = (0..=bound).map(|n| generator_coproduct(kind, n)).collect();
        let mut h = PolyHopf { kind, bound, delta, s: vec![LinComb::one()] };
        for n in 1..=bound {
            // m(S ⊗ id)Δ(x_n) = 0; the x_n ⊗ 1 term isolates S(x_n).
            let mut acc = LinComb::zero();
            for ((a, b), c) in h.delta[n].iter() {
                if b.is_one() && a.degree() == n {
                    continue;
                }
                let sa = h.antipode_monomial(a);
                acc.add_scaled(&sa.mul(&LinComb::basis(b.clone())), &-c);
            }
            h.s.push(acc);
        }
        h
    }

    pub fn kind(&self) -> HopfKind {
        self.kind
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check_degree(&self, m: &CommMonomial) {
        let top = m.iter().map(|(g, _)| *g).max().unwrap_or(0);
        assert!(top <= self.bound, "generator x_{top} beyond tabulated bound {}", self.bound);
    }

    pub fn coproduct_monomial(&self, m: &CommMonomial) -> Tensor2<CommMonomial> {
        self.check_degree(m);
        let mut acc = Tensor2::basis((CommMonomial::one(), CommMonomial::one()));
        for (g, e) in m.iter() {
            acc = acc.mul(&self.delta[*g].pow(e));
        }
        acc
    }

    pub fn antipode_monomial(&self, m: &CommMonomial) -> LinComb<CommMonomial> {
        self.check_degree(m);
        let mut acc = LinComb::one();
        for (g, e) in m.iter() {
            acc = acc.mul(&self.s[*g].pow(e));
        }
        acc
    }

    /// S(x_n) from the other recursion, m(id ⊗ S)Δ(x_n) = 0.
    pub fn right_antipode_generator(&self, n: usize) -> LinComb<CommMonomial> {
        let mut acc = LinComb::zero();
        for ((a, b), c) in self.delta[n].iter() {
            if a.is_one() {
                continue;
            }
            let sb = self.antipode_monomial(b);
            acc.add_scaled(&LinComb::basis(a.clone()).mul(&sb), &-c);
        }
        acc
    }
}

impl GradedHopf for PolyHopf {
    type B = CommMonomial;

    fn name(&self) -> String {
        format!("H_{}", self.kind)
    }

    fn basis(&self, degree: usize) -> Vec<CommMonomial> {
        monomials_of_degree(degree)
    }

    fn coproduct_basis(&self, b: &CommMonomial) -> Tensor2<CommMonomial> {
        self.coproduct_monomial(b)
    }

    fn antipode_basis(&self, b: &CommMonomial) -> LinComb<CommMonomial> {
        self.antipode_monomial(b)
    }
}

fn generator_bound(v: &LinComb<CommMonomial>) -> usize {
    v.support().flat_map(|m| m.iter().map(|(g, _)| *g)).max().unwrap_or(0)
}

/// Δ(h), extended multiplicatively from the generators.
pub fn coproduct(h: &HopfElement) -> Tensor2<CommMonomial> {
    PolyHopf::new(h.algebra, generator_bound(&h.value)).coproduct(&h.value)
}

/// S(h) from the graded recursion.
pub fn antipode(h: &HopfElement) -> HopfElement {
    let value = PolyHopf::new(h.algebra, generator_bound(&h.value)).antipode(&h.value);
    HopfElement { algebra: h.algebra, value }
}

pub fn counit(v: &LinComb<CommMonomial>) -> Scalar {
    v.coeff(&CommMonomial::one())
}

/// A linear functional on H given by its values on every monomial of degree
/// at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    pub algebra: HopfKind,
    pub bound: usize,
    values: BTreeMap<CommMonomial, Scalar>,
}

impl Functional {
    pub fn from_fn(algebra: HopfKind, bound: usize, f: impl Fn(&CommMonomial) -> Scalar) -> Self {
        let values = monomials_up_to(bound)
            .into_iter()
            .filter_map(|m| {
                let v = f(&m);
                (!v.is_zero()).then_some((m, v))
            })
            .collect();
        Functional { algebra, bound, values }
    }

    /// The counit ε, unit of convolution.
    pub fn unit(algebra: HopfKind, bound: usize) -> Self {
        Self::from_fn(algebra, bound, |m| if m.is_one() { Scalar::one() } else { Scalar::zero() })
    }

    pub fn zero(algebra: HopfKind, bound: usize) -> Self {
        Functional { algebra, bound, values: BTreeMap::new() }
    }

    pub fn value(&self, m: &CommMonomial) -> Scalar {
        assert!(m.degree() <= self.bound, "monomial beyond functional bound");
        self.values.get(m).cloned().unwrap_or_default()
    }

    pub fn eval(&self, v: &LinComb<CommMonomial>) -> Scalar {
        v.eval(|m| self.value(m))
    }

    pub fn add_scaled(&self, other: &Functional, c: &Scalar) -> Functional {
        Self::from_fn(self.algebra, self.bound.min(other.bound), |m| self.value(m) + c * &other.value(m))
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        Self::from_fn(self.algebra, self.bound, |m| c * &self.value(m))
    }

    /// Values on the generators x_1..x_bound.
    pub fn generator_values(&self) -> BTreeMap<usize, Scalar> {
        (1..=self.bound).map(|n| (n, self.value(&CommMonomial::gen(n)))).collect()
    }

    /// Checks φ(uv) = φ(u)φ(v) on all monomials in range.
    pub fn is_multiplicative(&self) -> bool {
        monomials_up_to(self.bound).iter().all(|m| {
            let prod: Scalar = m.factors().iter().map(|g| self.value(&CommMonomial::gen(*g))).product();
            self.value(m) == prod
        })
    }
}

/// (a ∗ b)(h) = (a ⊗ b)Δ(h), over the smaller of the two bounds.
pub fn convolve(a: &Functional, b: &Functional) -> Result<Functional> {
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch(a.algebra.to_string(), b.algebra.to_string()));
    }
    let bound = a.bound.min(b.bound);
    let h = PolyHopf::new(a.algebra, bound);
    Ok(Functional::from_fn(a.algebra, bound, |m| tensor_eval(&h.coproduct_monomial(m), |u| a.value(u), |v| b.value(v))))
}

/// A character, determined by its values on x_1..x_bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub algebra: HopfKind,
    pub values: BTreeMap<usize, Scalar>,
    pub bound: usize,
}

/// An infinitesimal character: zero on 1 and on products of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfChar {
    pub algebra: HopfKind,
    pub values: BTreeMap<usize, Scalar>,
    pub bound: usize,
}

fn dense_values(values: &BTreeMap<usize, Scalar>, bound: usize) -> BTreeMap<usize, Scalar> {
    (1..=bound).map(|n| (n, values.get(&n).cloned().unwrap_or_default())).collect()
}

impl Character {
    pub fn new(algebra: HopfKind, bound: usize, values: &BTreeMap<usize, Scalar>) -> Result<Self> {
        if let Some(&k) = values.keys().find(|&&k| k == 0 || k > bound) {
            return Err(Error::OutOfRange(format!("generator index {k} outside 1..={bound}")));
        }
        Ok(Character { algebra, values: dense_values(values, bound), bound })
    }

    pub fn counit(algebra: HopfKind, bound: usize) -> Self {
        Character { algebra, values: dense_values(&BTreeMap::new(), bound), bound }
    }

    pub fn eval_monomial(&self, m: &CommMonomial) -> Scalar {
        m.iter().map(|(g, e)| self.values.get(g).cloned().unwrap_or_default().pow(e)).product()
    }

    pub fn to_functional(&self) -> Functional {
        Functional::from_fn(self.algebra, self.bound, |m| self.eval_monomial(m))
    }

    /// The character of a series: x_n ↦ f_{n+1} for a diffeo series (H_FdB),
    /// x_n ↦ f_n for an invertible series (H_inv).
    pub fn from_series(f: &TruncSeries) -> Self {
        let n = f.truncation();
        match f.kind() {
            SeriesKind::Diffeo => Character {
                algebra: HopfKind::Fdb,
                values: (1..n).map(|k| (k, f.coeff(k + 1))).collect(),
                bound: n - 1,
            },
            SeriesKind::Invertible => {
                Character { algebra: HopfKind::Inv, values: (1..=n).map(|k| (k, f.coeff(k))).collect(), bound: n }
            }
        }
    }

    pub fn to_series(&self) -> TruncSeries {
        match self.algebra {
            HopfKind::Fdb => {
                let tail: Vec<Scalar> = (1..=self.bound).map(|k| self.values[&k].clone()).collect();
                if tail.is_empty() {
                    TruncSeries::identity(1)
                } else {
                    TruncSeries::diffeo(&tail)
                }
            }
            HopfKind::Inv => {
                let tail: Vec<Scalar> = (1..=self.bound).map(|k| self.values[&k].clone()).collect();
                TruncSeries::invertible(&tail)
            }
        }
    }

    /// Restriction of a multiplicative functional to the generators.
    pub fn from_functional(f: &Functional) -> Self {
        Character { algebra: f.algebra, values: f.generator_values(), bound: f.bound }
    }

    /// (a ∗ b) on characters; the result is again a character.
    pub fn convolve(&self, other: &Character) -> Result<Character> {
        let c = convolve(&self.to_functional(), &other.to_functional())?;
        Ok(Character::from_functional(&c))
    }

    /// The convolution inverse a∘S.
    pub fn inverse(&self) -> Character {
        let h = PolyHopf::new(self.algebra, self.bound);
        let values = (1..=self.bound)
            .map(|n| (n, h.antipode_monomial(&CommMonomial::gen(n)).eval(|m| self.eval_monomial(m))))
            .collect();
        Character { algebra: self.algebra, values, bound: self.bound }
    }
}

impl InfChar {
    pub fn new(algebra: HopfKind, bound: usize, values: &BTreeMap<usize, Scalar>) -> Result<Self> {
        if let Some(&k) = values.keys().find(|&&k| k == 0 || k > bound) {
            return Err(Error::OutOfRange(format!("generator index {k} outside 1..={bound}")));
        }
        Ok(InfChar { algebra, values: dense_values(values, bound), bound })
    }

    pub fn eval_monomial(&self, m: &CommMonomial) -> Scalar {
        match m.as_generator() {
            Some(g) => self.values.get(g).cloned().unwrap_or_default(),
            None => Scalar::zero(),
        }
    }

    pub fn to_functional(&self) -> Functional {
        Functional::from_fn(self.algebra, self.bound, |m| self.eval_monomial(m))
    }

    pub fn from_functional(f: &Functional) -> Self {
        InfChar { algebra: f.algebra, values: f.generator_values(), bound: f.bound }
    }
}

/// exp(α) = ε + Σ_{k≥1} α^{∗k}/k!, exact because α^{∗k} vanishes below degree k.
pub fn exp_functional(alpha: &Functional) -> Result<Functional> {
    let mut acc = Functional::unit(alpha.algebra, alpha.bound);
    let mut power = Functional::unit(alpha.algebra, alpha.bound);
    for k in 1..=alpha.bound {
        power = convolve(&power, alpha)?;
        acc = acc.add_scaled(&power, &factorial_q(k).recip()?);
    }
    Ok(acc)
}

/// log(ε + γ) = Σ_{k≥1} (-1)^{k-1} γ^{∗k}/k.
pub fn log_functional(phi: &Functional) -> Result<Functional> {
    let eps = Functional::unit(phi.algebra, phi.bound);
    let gamma = phi.add_scaled(&eps, &Scalar::from_int(-1));
    let mut acc = Functional::zero(phi.algebra, phi.bound);
    let mut power = eps;
    for k in 1..=phi.bound {
        power = convolve(&power, &gamma)?;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = acc.add_scaled(&power, &Scalar::new(sign, k as i64)?);
    }
    Ok(acc)
}

pub fn exp_char(alpha: &InfChar) -> Result<Character> {
    Ok(Character::from_functional(&exp_functional(&alpha.to_functional())?))
}

pub fn log_char(phi: &Character) -> Result<InfChar> {
    Ok(InfChar::from_functional(&log_functional(&phi.to_functional())?))
}

/// f∘g computed as m ∘ (g ⊗ f) ∘ Δ_FdB on characters.
pub fn compose_via_hopf(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    if f.kind() != SeriesKind::Diffeo || g.kind() != SeriesKind::Diffeo {
        return Err(Error::KindMismatch { expected: "diffeo" });
    }
    if f.truncation() != g.truncation() {
        return Err(Error::TruncationMismatch { left: f.truncation(), right: g.truncation() });
    }
    let (cf, cg) = (Character::from_series(f), Character::from_series(g));
    Ok(cg.convolve(&cf)?.to_series())
}

#[derive(Serialize, Deserialize)]
struct CharRepr {
    algebra: HopfKind,
    values: BTreeMap<usize, Scalar>,
}

macro_rules! char_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                CharRepr { algebra: self.algebra, values: self.values.clone() }.serialize(s)
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let r = CharRepr::deserialize(d)?;
                let bound = r.values.keys().copied().max().unwrap_or(0);
                <$t>::new(r.algebra, bound, &r.values).map_err(serde::de::Error::custom)
            }
        }
    };
}

char_serde!(Character);
char_serde!(InfChar);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_antipode, check_coassociative, check_cocommutative};
    use crate::lincomb::{flip, tensor};

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn mono(pairs: &[(usize, u32)]) -> LinComb<CommMonomial> {
        LinComb::basis(CommMonomial::from_pairs(pairs.iter().copied()))
    }

    #[test]
    fn fdb_generator_coproducts() {
        let d1 = generator_coproduct(HopfKind::Fdb, 1);
        assert_eq!(d1, tensor(&x(1), &x(0)) + tensor(&x(0), &x(1)));
        let d2 = generator_coproduct(HopfKind::Fdb, 2);
        let expect = tensor(&x(2), &x(0)) + tensor(&x(1), &x(1)).scale(&q("2")) + tensor(&x(0), &x(2));
        assert_eq!(d2, expect);
        let d3 = generator_coproduct(HopfKind::Fdb, 3);
        let left = x(2).scale(&q("2")) + mono(&[(1, 2)]);
        let expect =
            tensor(&x(3), &x(0)) + tensor(&left, &x(1)) + tensor(&x(1), &x(2)).scale(&q("3")) + tensor(&x(0), &x(3));
        assert_eq!(d3, expect);
        // Δ(x_2) is flip-symmetric; x_3 is the first generator that is not.
        assert_eq!(d2, flip(&d2));
        assert_ne!(d3, flip(&d3));
    }

    #[test]
    fn inv_coproduct_is_binomial_free() {
        let d2 = generator_coproduct(HopfKind::Inv, 2);
        let expect = tensor(&x(2), &x(0)) + tensor(&x(1), &x(1)) + tensor(&x(0), &x(2));
        assert_eq!(d2, expect);
    }

    #[test]
    fn fdb_antipode_small() {
        let h = PolyHopf::new(HopfKind::Fdb, 3);
        assert_eq!(h.antipode_monomial(&CommMonomial::gen(1)), x(1).scale(&q("-1")));
        assert_eq!(h.antipode_monomial(&CommMonomial::gen(2)), x(2).scale(&q("-1")) + mono(&[(1, 2)]).scale(&q("2")));
        let s3 = x(3).scale(&q("-1")) + mono(&[(1, 1), (2, 1)]).scale(&q("5")) + mono(&[(1, 3)]).scale(&q("-5"));
        assert_eq!(h.antipode_monomial(&CommMonomial::gen(3)), s3);
        for n in 1..=3 {
            assert_eq!(h.right_antipode_generator(n), h.antipode_monomial(&CommMonomial::gen(n)));
        }
    }

    #[test]
    fn axioms_low_degree() {
        for kind in [HopfKind::Inv, HopfKind::Fdb] {
            let h = PolyHopf::new(kind, 5);
            check_coassociative(&h, 5).unwrap();
            check_antipode(&h, 5).unwrap();
        }
        assert!(check_cocommutative(&PolyHopf::new(HopfKind::Inv, 5), 5).is_ok());
        assert!(check_cocommutative(&PolyHopf::new(HopfKind::Fdb, 2), 2).is_ok());
        assert!(check_cocommutative(&PolyHopf::new(HopfKind::Fdb, 3), 3).is_err());
    }

    #[test]
    fn convolution_matches_composition_orientation() {
        let f = TruncSeries::diffeo(&[q("1"), q("0"), q("0")]);
        let (cf, cg) = (Character::from_series(&f), Character::from_series(&f));
        let c = cg.convolve(&cf).unwrap();
        assert_eq!(c.values[&2], q("2"));
        assert_eq!(c.to_series(), crate::series::compose(&f, &f).unwrap());
    }

    #[test]
    fn exp_of_x1_dual_is_geometric() {
        let mut v = BTreeMap::new();
        v.insert(1, q("1"));
        let alpha = InfChar::new(HopfKind::Fdb, 6, &v).unwrap();
        let e = exp_char(&alpha).unwrap();
        assert!(e.values.values().all(|c| c.is_one()));
        assert_eq!(log_char(&e).unwrap(), alpha);
    }

    #[test]
    fn log_of_t_plus_t2() {
        let f = TruncSeries::diffeo(&[q("1"), q("0")]);
        let l = log_char(&Character::from_series(&f)).unwrap();
        assert_eq!(l.values[&1], q("1"));
        assert_eq!(l.values[&2], q("-1"));
    }

    #[test]
    fn character_json() {
        let c = Character::from_series(&TruncSeries::diffeo(&[q("1"), q("0")]));
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"algebra":"fdb","values":{"1":"1","2":"0"}}"#);
        let back: Character = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
    }
}
