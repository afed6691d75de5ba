//! The group of operadic series Σ p_n with identity leading term, its
//! relation to formal diffeomorphisms, and tree-expanded α-series.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::assoc::{Assoc, AssocOp};
use super::dup::{under, Dup, PlanarBinaryTree};
use super::operad::NsOperad;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::series::{SeriesKind, TruncSeries};

/// Σ f_p p over basis elements of arity 1..=N, with coefficient 1 on the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperadSeries<O: NsOperad> {
    operad: O,
    truncation: usize,
    coeffs: LinComb<O::Op>,
}

impl<O: NsOperad> OperadSeries<O> {
    pub fn identity(operad: O, truncation: usize) -> Self {
        let coeffs = LinComb::basis(operad.identity());
        OperadSeries { operad, truncation, coeffs }
    }

    /// Builds a series from its coefficients; the identity coefficient must
    /// be 1 (an absent identity is filled in) and arities must be ≤ N.
    pub fn new(operad: O, truncation: usize, coeffs: LinComb<O::Op>) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::OutOfRange("operad series need truncation ≥ 1".into()));
        }
        let e = operad.identity();
        let mut coeffs = coeffs;
        match coeffs.coeff(&e) {
            c if c.is_zero() => coeffs.add_term(e, Scalar::one()),
            c if c.is_one() => {}
            c => return Err(Error::OutOfRange(format!("identity coefficient must be 1, got {c}"))),
        }
        if let Some((p, _)) = coeffs.iter().find(|(p, _)| operad.arity(p) > truncation || operad.arity(p) == 0) {
            return Err(Error::OutOfRange(format!("{p} has arity outside 1..={truncation}")));
        }
        Ok(OperadSeries { operad, truncation, coeffs })
    }

    pub fn operad(&self) -> &O {
        &self.operad
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeffs(&self) -> &LinComb<O::Op> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &O::Op) -> Scalar {
        self.coeffs.coeff(p)
    }

    /// Σ_p f_p Σ g_{q_1}⋯g_{q_k} γ(p; q_1, …, q_k), keeping arity ≤ N.
    fn substitute(&self, f: &LinComb<O::Op>, g: &LinComb<O::Op>) -> Result<LinComb<O::Op>> {
        let n = self.truncation;
        let op = &self.operad;
        let g_terms: Vec<(&O::Op, &Scalar, usize)> = g.iter().map(|(q, c)| (q, c, op.arity(q))).collect();
        let mut out = LinComb::zero();
        for (p, fp) in f.iter() {
            let k = op.arity(p);
            let mut chosen: Vec<O::Op> = Vec::with_capacity(k);
            fill(op, p, k, n, &g_terms, fp.clone(), &mut chosen, &mut out)?;
        }
        Ok(out)
    }

    pub fn compose(&self, g: &Self) -> Result<Self> {
        if self.truncation != g.truncation {
            return Err(Error::TruncationMismatch { left: self.truncation, right: g.truncation });
        }
        let coeffs = self.substitute(&self.coeffs, &g.coeffs)?;
        Ok(OperadSeries { operad: self.operad.clone(), truncation: self.truncation, coeffs })
    }

    /// The inverse g with f ∘ g = e, from g = e − (f − e) ∘ g degree by degree.
    pub fn inverse(&self) -> Result<Self> {
        let e = LinComb::basis(self.operad.identity());
        let tail = &self.coeffs - &e;
        let mut g = e.clone();
        for _ in 1..self.truncation {
            g = &e - &self.substitute(&tail, &g)?;
        }
        Ok(OperadSeries { operad: self.operad.clone(), truncation: self.truncation, coeffs: g })
    }
}

#[allow(clippy::too_many_arguments)]
fn fill<O: NsOperad>(
    op: &O,
    p: &O::Op,
    remaining_slots: usize,
    budget: usize,
    g_terms: &[(&O::Op, &Scalar, usize)],
    coef: Scalar,
    chosen: &mut Vec<O::Op>,
    out: &mut LinComb<O::Op>,
) -> Result<()> {
    if remaining_slots == 0 {
        out.add_term(op.total_compose(p, chosen)?, coef);
        return Ok(());
    }
    for &(q, c, a) in g_terms {
        // Every later slot needs arity at least 1.
        if a + remaining_slots - 1 > budget {
            continue;
        }
        chosen.push(q.clone());
        fill(op, p, remaining_slots - 1, budget - a, g_terms, &coef * c, chosen, out)?;
        chosen.pop();
    }
    Ok(())
}

/// Assoc series ↔ formal diffeomorphisms: p_n ↦ t^n.
pub fn assoc_to_series(f: &OperadSeries<Assoc>) -> TruncSeries {
    let n = f.truncation();
    let mut c = vec![Scalar::zero(); n + 1];
    for (p, v) in f.coeffs().iter() {
        c[p.0] = v.clone();
    }
    diffeo_from_dense(n, c)
}

pub fn series_to_assoc(f: &TruncSeries) -> Result<OperadSeries<Assoc>> {
    expect_diffeo(f)?;
    let coeffs = (1..=f.truncation()).map(|k| (AssocOp(k), f.coeff(k))).collect();
    OperadSeries::new(Assoc, f.truncation(), coeffs)
}

fn expect_diffeo(f: &TruncSeries) -> Result<()> {
    if f.kind() != SeriesKind::Diffeo {
        return Err(Error::KindMismatch { expected: "diffeo" });
    }
    Ok(())
}

fn diffeo_from_dense(n: usize, c: Vec<Scalar>) -> TruncSeries {
    let tail: BTreeMap<usize, Scalar> = c.into_iter().enumerate().skip(2).filter(|(_, v)| !v.is_zero()).collect();
    TruncSeries::new(SeriesKind::Diffeo, n, &tail).expect("coefficients within range")
}

/// The order map: each tree contributes its coefficient to t^{#internal vertices}.
pub fn order_project(f: &OperadSeries<Dup>) -> TruncSeries {
    let n = f.truncation();
    let mut c = vec![Scalar::zero(); n + 1];
    for (t, v) in f.coeffs().iter() {
        c[t.internal()] += v;
    }
    diffeo_from_dense(n, c)
}

/// The section through left combs: t^n ↦ the comb p_n = γ(p_2; p_{n−1}, e).
pub fn section_embed(f: &TruncSeries) -> Result<OperadSeries<Dup>> {
    expect_diffeo(f)?;
    let coeffs = (1..=f.truncation()).map(|k| (PlanarBinaryTree::left_comb(k), f.coeff(k))).collect();
    OperadSeries::new(Dup, f.truncation(), coeffs)
}

/// Tree-expanded series Σ f_t x^t over all planar binary trees, the leaf included.
pub type TreeSeries = LinComb<PlanarBinaryTree>;

/// α_f = (x^| − x^Y∖f)^{−1} ∕ x^Y, truncated at N internal vertices.
pub fn alpha_series(f: &TreeSeries, n: usize) -> TreeSeries {
    let y = PlanarBinaryTree::y();
    let h: TreeSeries = f.map_basis(|t| under(&y, t)).truncate(n);
    // h has no leaf term, so Σ_k h^k is finite in each degree.
    let mut inv = TreeSeries::one();
    let mut power = TreeSeries::one();
    for _ in 0..n {
        power = power.mul_trunc(&h, n);
        inv += &power;
    }
    inv.mul_trunc(&TreeSeries::basis(y), n)
}

/// (x^| − x^Y∖f) ∕ α_f − x^Y, truncated; zero when α_f satisfies its definition.
pub fn alpha_residual(f: &TreeSeries, alpha: &TreeSeries, n: usize) -> TreeSeries {
    let y = PlanarBinaryTree::y();
    let h: TreeSeries = f.map_basis(|t| under(&y, t)).truncate(n);
    let lhs = (TreeSeries::one() - h).mul_trunc(alpha, n);
    lhs - TreeSeries::basis(y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperadKind {
    Assoc,
    Dup,
}

/// An operad series of either instance, for JSON and the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyOperadSeries {
    Assoc(OperadSeries<Assoc>),
    Dup(OperadSeries<Dup>),
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    operad: OperadKind,
    truncation: usize,
    coeffs: BTreeMap<String, Scalar>,
}

impl AnyOperadSeries {
    pub fn kind(&self) -> OperadKind {
        match self {
            AnyOperadSeries::Assoc(_) => OperadKind::Assoc,
            AnyOperadSeries::Dup(_) => OperadKind::Dup,
        }
    }

    pub fn compose(&self, g: &Self) -> Result<Self> {
        match (self, g) {
            (AnyOperadSeries::Assoc(a), AnyOperadSeries::Assoc(b)) => Ok(AnyOperadSeries::Assoc(a.compose(b)?)),
            (AnyOperadSeries::Dup(a), AnyOperadSeries::Dup(b)) => Ok(AnyOperadSeries::Dup(a.compose(b)?)),
            _ => Err(Error::AlgebraMismatch(
                format!("{:?}", self.kind()).to_lowercase(),
                format!("{:?}", g.kind()).to_lowercase(),
            )),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            AnyOperadSeries::Assoc(a) => AnyOperadSeries::Assoc(a.inverse()?),
            AnyOperadSeries::Dup(a) => AnyOperadSeries::Dup(a.inverse()?),
        })
    }

    fn from_json(j: SeriesJson) -> Result<Self> {
        fn build<O: NsOperad>(op: O, j: &SeriesJson) -> Result<OperadSeries<O>> {
            let mut coeffs = LinComb::zero();
            for (k, v) in &j.coeffs {
                coeffs.add_term(op.parse_op(k)?, v.clone());
            }
            OperadSeries::new(op, j.truncation, coeffs)
        }
        Ok(match j.operad {
            OperadKind::Assoc => AnyOperadSeries::Assoc(build(Assoc, &j)?),
            OperadKind::Dup => AnyOperadSeries::Dup(build(Dup, &j)?),
        })
    }

    fn to_json(&self) -> SeriesJson {
        fn dump<O: NsOperad>(f: &OperadSeries<O>) -> BTreeMap<String, Scalar> {
            f.coeffs().iter().map(|(p, c)| (p.to_string(), c.clone())).collect()
        }
        let (truncation, coeffs) = match self {
            AnyOperadSeries::Assoc(a) => (a.truncation(), dump(a)),
            AnyOperadSeries::Dup(a) => (a.truncation(), dump(a)),
        };
        SeriesJson { operad: self.kind(), truncation, coeffs }
    }
}

impl Serialize for AnyOperadSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AnyOperadSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_json(SeriesJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
