//! The standard reduced incidence Hopf algebra of a poset family and its
//! identification with the binomial, Faà di Bruno and rooted-tree Hopf
//! algebras.

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;

use super::families::{boolean_lattice, forest_ideals, partition_lattice};
use super::poset::{factorize, Poset, PosetClass};
use crate::basis::{CommMonomial, Graded, Monomial, MulBasis};
use crate::combinat::{binomial_q, factorial_q, partitions};
use crate::error::{Error, Result};
use crate::fdb_hopf::{generator_coproduct, HopfKind};
use crate::hopf::GradedHopf;
use crate::lincomb::{flip, LinComb, Tensor2};
use crate::scalar::Scalar;
use crate::trees_hopf::{coproduct_rt, forests_of_degree, trees_of_degree, Forest, RootedTree};

/// A product of indecomposable classes; the empty product is the class of
/// the one-element poset.
pub type ClassMonomial = Monomial<PosetClass>;

impl Graded for PosetClass {
    fn degree(&self) -> usize {
        self.poset().height()
    }
}

/// The class of a bounded poset as a monomial in its indecomposable factors.
pub fn classify(p: &Poset) -> Result<ClassMonomial> {
    let mut m = ClassMonomial::one();
    for f in factorize(p)? {
        m = m.mul(&ClassMonomial::gen(f.class()));
    }
    Ok(m)
}

/// Δ[P] = Σ_x [0, x] ⊗ [x, 1], each interval factored.
pub fn incidence_coproduct_poset(p: &Poset) -> Result<Tensor2<ClassMonomial>> {
    let zero = p.minimum().ok_or_else(|| Error::Poset("poset has no minimum".into()))?;
    let one = p.maximum().ok_or_else(|| Error::Poset("poset has no maximum".into()))?;
    let mut out = Tensor2::zero();
    for x in 0..p.len() {
        let lo = classify(&p.interval(zero, x)?)?;
        let hi = classify(&p.interval(x, one)?)?;
        out.add_term((lo, hi), Scalar::one());
    }
    Ok(out)
}

pub fn incidence_coproduct(c: &PosetClass) -> Result<Tensor2<ClassMonomial>> {
    incidence_coproduct_poset(c.poset())
}

/// The counit: 1 on the one-element class, 0 on everything else.
pub fn incidence_counit(m: &ClassMonomial) -> Scalar {
    if m.is_one() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Boolean,
    Partitions,
    ForestIdeals,
}

/// The incidence Hopf algebra of a family, on monomials in its
/// indecomposable classes up to a degree bound.
pub struct IncidenceHopf {
    kind: FamilyKind,
    bound: usize,
    generators: Vec<Vec<PosetClass>>,
    labels: BTreeMap<PosetClass, String>,
    delta: BTreeMap<PosetClass, Tensor2<ClassMonomial>>,
    antipode: Mutex<BTreeMap<PosetClass, LinComb<ClassMonomial>>>,
}

impl IncidenceHopf {
    pub fn new(kind: FamilyKind, bound: usize) -> Result<Self> {
        let mut generators = vec![Vec::new(); bound + 1];
        let mut labels = BTreeMap::new();
        for (d, slot) in generators.iter_mut().enumerate().skip(1) {
            let named: Vec<(Poset, String)> = match kind {
                FamilyKind::Boolean if d == 1 => vec![(boolean_lattice(1)?, "B1".into())],
                FamilyKind::Boolean => Vec::new(),
                FamilyKind::Partitions => vec![(partition_lattice(d + 1)?, format!("X{d}"))],
                FamilyKind::ForestIdeals => trees_of_degree(d)
                    .into_iter()
                    .map(|t| Ok((forest_ideals(&Forest::tree(t.clone()))?, format!("J{t}"))))
                    .collect::<Result<_>>()?,
            };
            for (p, name) in named {
                let c = p.class();
                labels.insert(c.clone(), name);
                slot.push(c);
            }
        }
        let mut delta = BTreeMap::new();
        for c in generators.iter().flatten() {
            delta.insert(c.clone(), incidence_coproduct(c)?);
        }
        Ok(IncidenceHopf { kind, bound, generators, labels, delta, antipode: Mutex::new(BTreeMap::new()) })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Indecomposable classes of the given degree.
    pub fn generators(&self, degree: usize) -> &[PosetClass] {
        &self.generators[degree]
    }

    /// Readable name of an indecomposable class: B1, X_k = [SP(k+1)], or J followed by a tree.
    pub fn label(&self, c: &PosetClass) -> String {
        self.labels.get(c).cloned().unwrap_or_else(|| c.to_string())
    }

    pub fn label_monomial(&self, m: &ClassMonomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.iter()
            .map(|(c, e)| if e == 1 { self.label(c) } else { format!("{}^{e}", self.label(c)) })
            .collect::<Vec<_>>()
            .join("*")
    }

    fn generator_delta(&self, c: &PosetClass) -> Tensor2<ClassMonomial> {
        match self.delta.get(c) {
            Some(d) => d.clone(),
            None => incidence_coproduct(c).expect("classes of bounded posets"),
        }
    }

    fn generator_antipode(&self, c: &PosetClass) -> LinComb<ClassMonomial> {
        if let Some(s) = self.antipode.lock().expect("antipode cache").get(c) {
            return s.clone();
        }
        let top = ClassMonomial::gen(c.clone());
        let mut acc = LinComb::zero();
        for ((a, b), coef) in self.generator_delta(c).iter() {
            if b.is_one() && *a == top {
                continue;
            }
            let sa = self.antipode_basis(a);
            acc.add_scaled(&sa.mul(&LinComb::basis(b.clone())), &-coef);
        }
        self.antipode.lock().expect("antipode cache").insert(c.clone(), acc.clone());
        acc
    }
}

impl GradedHopf for IncidenceHopf {
    type B = ClassMonomial;

    fn name(&self) -> String {
        format!("incidence({:?})", self.kind)
    }

    fn basis(&self, degree: usize) -> Vec<ClassMonomial> {
        let mut out = Vec::new();
        for parts in partitions(degree) {
            let mut acc = vec![ClassMonomial::one()];
            for &d in &parts {
                let gens = self.generators.get(d).map(Vec::as_slice).unwrap_or(&[]);
                acc =
                    acc.iter().flat_map(|m| gens.iter().map(move |g| m.mul(&ClassMonomial::gen(g.clone())))).collect();
            }
            out.extend(acc);
        }
        out.sort();
        out.dedup();
        out
    }

    fn coproduct_basis(&self, b: &ClassMonomial) -> Tensor2<ClassMonomial> {
        b.factors().iter().fold(Tensor2::one(), |acc, c| acc.mul(&self.generator_delta(c)))
    }

    fn antipode_basis(&self, b: &ClassMonomial) -> LinComb<ClassMonomial> {
        b.factors().iter().fold(LinComb::one(), |acc, c| acc.mul(&self.generator_antipode(c)))
    }

    fn counit_basis(&self, b: &ClassMonomial) -> Scalar {
        incidence_counit(b)
    }
}

/// Outcome of comparing an incidence Hopf algebra with a known one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub target: String,
    pub max_degree: usize,
    pub cases: usize,
    pub failure: Option<String>,
}

impl IsoReport {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }

    fn run(target: &str, max_degree: usize, body: impl FnOnce(&mut usize) -> std::result::Result<(), String>) -> Self {
        let mut cases = 0;
        let failure = body(&mut cases).err();
        IsoReport { target: target.into(), max_degree, cases, failure }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoTarget {
    Binomial,
    Fdb,
    Rt,
}

pub fn iso_check(target: IsoTarget, max_degree: usize) -> IsoReport {
    match target {
        IsoTarget::Binomial => check_binomial(max_degree),
        IsoTarget::Fdb => check_fdb(max_degree),
        IsoTarget::Rt => check_rt(max_degree),
    }
}

/// Boolean family: [B_n] = X^n with X = [B_1], Δ(X^n) = Σ C(n,k) X^k ⊗ X^{n−k},
/// and the dual basis multiplies as divided powers.
fn check_binomial(max_degree: usize) -> IsoReport {
    IsoReport::run("binomial", max_degree, |cases| {
        let err = |e: Error| e.to_string();
        let x = boolean_lattice(1).map_err(err)?.class();
        let xp = |k: usize| ClassMonomial::power(x.clone(), k as u32);
        let mut deltas = Vec::new();
        for n in 0..=max_degree {
            let b = boolean_lattice(n).map_err(err)?;
            let class = classify(&b).map_err(err)?;
            if class != xp(n) {
                return Err(format!("[B_{n}] is not X^{n}"));
            }
            let got = incidence_coproduct_poset(&b).map_err(err)?;
            let expect: Tensor2<ClassMonomial> = (0..=n).map(|k| ((xp(k), xp(n - k)), binomial_q(n, k))).collect();
            if got != expect {
                return Err(format!("Δ[B_{n}] = {got:?}"));
            }
            deltas.push(got);
            *cases += 1;
        }
        // (y_m ⋆ y_k)(X^n) = Σ y_m(a) y_k(b) over Δ(X^n), with y_j dual to X^j.
        for (n, d) in deltas.iter().enumerate() {
            for m in 0..=n {
                let k = n - m;
                let conv: Scalar =
                    d.iter().filter(|((a, b), _)| *a == xp(m) && *b == xp(k)).map(|(_, c)| c.clone()).sum();
                if conv != binomial_q(m + k, m) {
                    return Err(format!("y_{m} ⋆ y_{k} ≠ C({n},{m}) y_{n}"));
                }
                *cases += 1;
            }
        }
        Ok(())
    })
}

/// Partition family: with X_j = [SP(j+1)] ↦ (j+1)! x_j, Δ[SP(n+1)]/(n+1)!
/// is the Faà di Bruno coproduct of x_n.
fn check_fdb(max_degree: usize) -> IsoReport {
    IsoReport::run("fdb", max_degree, |cases| {
        let err = |e: Error| e.to_string();
        let mut index: BTreeMap<PosetClass, usize> = BTreeMap::new();
        for j in 1..=max_degree {
            index.insert(partition_lattice(j + 1).map_err(err)?.class(), j);
        }
        let to_x = |m: &ClassMonomial| -> std::result::Result<(CommMonomial, Scalar), String> {
            let mut mono = CommMonomial::one();
            let mut c = Scalar::one();
            for g in m.factors() {
                let j = *index.get(&g).ok_or_else(|| format!("unexpected factor {g}"))?;
                mono = mono.mul(&CommMonomial::gen(j));
                c *= &factorial_q(j + 1);
            }
            Ok((mono, c))
        };
        for n in 1..=max_degree {
            let p = partition_lattice(n + 1).map_err(err)?;
            let got = incidence_coproduct_poset(&p).map_err(err)?;
            let mut mapped = Tensor2::zero();
            for ((a, b), c) in got.iter() {
                let (ma, ca) = to_x(a)?;
                let (mb, cb) = to_x(b)?;
                let scaled = (c * &ca * &cb).checked_div(&factorial_q(n + 1)).map_err(err)?;
                mapped.add_term((ma, mb), scaled);
            }
            let expect = generator_coproduct(HopfKind::Fdb, n);
            if mapped != expect {
                return Err(format!("x_{n}: {mapped:?} vs {expect:?}"));
            }
            *cases += 1;
        }
        Ok(())
    })
}

/// Forest family: t ↦ [J(t)] carries the flip of Δ_RT(F) to Δ[J(F)] for
/// every forest F.
fn check_rt(max_degree: usize) -> IsoReport {
    IsoReport::run("rt", max_degree, |cases| {
        let err = |e: Error| e.to_string();
        let mut class_of: BTreeMap<RootedTree, PosetClass> = BTreeMap::new();
        for d in 1..=max_degree {
            for t in trees_of_degree(d) {
                let c = forest_ideals(&Forest::tree(t.clone())).map_err(err)?.class();
                if class_of.values().any(|v| *v == c) {
                    return Err(format!("two trees share the class of J({t})"));
                }
                class_of.insert(t, c);
            }
        }
        let image = |f: &Forest| -> ClassMonomial {
            f.trees().iter().fold(ClassMonomial::one(), |m, t| m.mul(&ClassMonomial::gen(class_of[t].clone())))
        };
        for d in 0..=max_degree {
            for f in forests_of_degree(d) {
                let j = forest_ideals(&f).map_err(err)?;
                if classify(&j).map_err(err)? != image(&f) {
                    return Err(format!("J({f}) does not factor over its trees"));
                }
                let got = incidence_coproduct_poset(&j).map_err(err)?;
                let expect = flip(&coproduct_rt(&f)).map_basis(|(a, b)| (image(a), image(b)));
                if got != expect {
                    return Err(format!("Δ[J({f})] differs from flipped Δ_RT"));
                }
                *cases += 1;
            }
        }
        Ok(())
    })
}
