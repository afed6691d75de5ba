//! The Lie algebra L_1 spanned by e_n = t^{n+1} d/dt (n ≥ 1), its pre-Lie
//! products and symmetric braces, the brace product on the generators of
//! H_FdB, and the pairing between H_FdB and U(L_1).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::{CommMonomial, Graded, Word};
use crate::combinat::binomial_q;
use crate::error::{Error, Result};
use crate::fdb_hopf::{convolve, Functional, HopfKind};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Element of L_1 as a combination of the e_n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct L1Element(pub LinComb<usize>);

fn check_index(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange("L_1 generators are e_n with n ≥ 1".into()));
    }
    Ok(())
}

impl L1Element {
    pub fn zero() -> Self {
        L1Element(LinComb::zero())
    }

    pub fn e(n: usize) -> Self {
        assert!(n >= 1, "e_0 is not in L_1");
        L1Element(LinComb::basis(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coeff(&self, n: usize) -> Scalar {
        self.0.coeff(&n)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        L1Element(self.0.scale(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        L1Element(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        L1Element(&self.0 - &other.0)
    }

    fn bilinear(&self, other: &Self, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut out = LinComb::zero();
        for (&p, a) in self.0.iter() {
            for (&q, b) in other.0.iter() {
                out.add_term(p + q, a * b * f(p, q));
            }
        }
        L1Element(out)
    }

    /// [e_p, e_q] = (q − p) e_{p+q}.
    pub fn bracket(&self, other: &Self) -> Self {
        self.bilinear(other, |p, q| Scalar::from_int(q as i64 - p as i64))
    }

    /// e_p ▷_λ e_q = (q + λ) e_{p+q}, a left pre-Lie product for every λ.
    pub fn prelie(&self, other: &Self, lambda: &Scalar) -> Self {
        self.bilinear(other, |_, q| Scalar::from_int(q as i64) + lambda)
    }

    /// x ◁ y = y ▷_1 x, so e_p ◁ e_q = (p + 1) e_{p+q}.
    pub fn right_prelie(&self, other: &Self) -> Self {
        other.prelie(self, &Scalar::one())
    }

    /// The element of U(L_1) given by this element of L_1.
    pub fn to_uenv(&self) -> UEnvElement {
        self.0.map_basis(|&n| Word::letter(n))
    }
}

impl fmt::Display for L1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = crate::lincomb::render_sum(&self.0, |n| (format!("e{n}"), false));
        f.write_str(&s)
    }
}

impl fmt::Debug for L1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct L1Repr {
    e: BTreeMap<usize, Scalar>,
}

impl Serialize for L1Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        L1Repr { e: self.0.iter().map(|(k, v)| (*k, v.clone())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for L1Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = L1Repr::deserialize(d)?;
        if r.e.contains_key(&0) {
            return Err(serde::de::Error::custom("L_1 generators are e_n with n ≥ 1"));
        }
        Ok(L1Element(LinComb::from_terms(r.e)))
    }
}

pub fn witt_bracket(p: usize, q: usize) -> Result<L1Element> {
    check_index(p)?;
    check_index(q)?;
    Ok(L1Element::e(p).bracket(&L1Element::e(q)))
}

pub fn prelie_lambda(p: usize, q: usize, lambda: &Scalar) -> Result<L1Element> {
    check_index(p)?;
    check_index(q)?;
    Ok(L1Element::e(p).prelie(&L1Element::e(q), lambda))
}

/// Symmetric brace {x; y_1 ⋯ y_p} built from ◁ by
/// {x; ∅} = x and
/// {x; y_1⋯y_p} = {x; y_1⋯y_{p-1}} ◁ y_p − Σ_{i<p} {x; y_1⋯(y_i ◁ y_p)⋯y_{p-1}}.
pub fn symmetric_brace(x: &L1Element, args: &[L1Element]) -> L1Element {
    match args.split_last() {
        None => x.clone(),
        Some((last, rest)) => {
            let mut out = symmetric_brace(x, rest).right_prelie(last);
            for i in 0..rest.len() {
                let mut modified = rest.to_vec();
                modified[i] = rest[i].right_prelie(last);
                out = out.sub(&symmetric_brace(x, &modified));
            }
            out
        }
    }
}

/// Combination of H_FdB generators x_n, the domain of the brace product.
pub type GenComb = LinComb<usize>;

/// {x_n; x_{m_1} ⋯ x_{m_q}} = C(n+1, q) x_{n + Σ m_i}.
pub fn brace_product(n: usize, ms: &[usize]) -> Result<LinComb<CommMonomial>> {
    check_index(n)?;
    for &m in ms {
        check_index(m)?;
    }
    let total = n + ms.iter().sum::<usize>();
    Ok(LinComb::term(CommMonomial::gen(total), binomial_q(n + 1, ms.len())))
}

/// Multilinear extension of the brace to combinations of generators.
pub fn brace(x: &GenComb, args: &[GenComb]) -> GenComb {
    fn go(x: &GenComb, args: &[GenComb], i: usize, extra: usize, coef: Scalar, out: &mut GenComb) {
        if i == args.len() {
            for (&n, c) in x.iter() {
                let b = binomial_q(n + 1, args.len());
                out.add_term(n + extra, &coef * c * b);
            }
            return;
        }
        for (&m, c) in args[i].iter() {
            go(x, args, i + 1, extra + m, &coef * c, out);
        }
    }
    let mut out = GenComb::zero();
    go(x, args, 0, 0, Scalar::one(), &mut out);
    out
}

/// Both sides of the brace identity
/// {{x; y_1⋯y_p}; z_1⋯z_q} = Σ {x; z⋯z {y_1; z⋯z} z⋯z {y_p; z⋯z} z⋯z},
/// the sum running over the ways to hand consecutive runs of the z's to the
/// y's (possibly empty) while keeping all z's in order.
pub fn brace_identity_sides(x: &GenComb, ys: &[GenComb], zs: &[GenComb]) -> (GenComb, GenComb) {
    let lhs = brace(&brace(x, ys), zs);
    let mut rhs = GenComb::zero();
    let p = ys.len();
    let q = zs.len();
    // cuts[2k], cuts[2k+1] bound the run of z's given to y_k.
    fn go(k: usize, from: usize, cuts: &mut Vec<usize>, p: usize, q: usize, out: &mut Vec<Vec<usize>>) {
        if k == p {
            out.push(cuts.clone());
            return;
        }
        for s in from..=q {
            for e in s..=q {
                cuts.push(s);
                cuts.push(e);
                go(k + 1, e, cuts, p, q, out);
                cuts.pop();
                cuts.pop();
            }
        }
    }
    let mut all = Vec::new();
    go(0, 0, &mut Vec::new(), p, q, &mut all);
    for cuts in all {
        let mut args = Vec::new();
        let mut pos = 0;
        for k in 0..p {
            let (s, e) = (cuts[2 * k], cuts[2 * k + 1]);
            args.extend(zs[pos..s].iter().cloned());
            args.push(brace(&ys[k], &zs[s..e]));
            pos = e;
        }
        args.extend(zs[pos..].iter().cloned());
        rhs += &brace(x, &args);
    }
    (lhs, rhs)
}

/// Element of U(L_1): a combination of PBW words e_{i_1} ∗ ⋯ ∗ e_{i_k}.
pub type UEnvElement = LinComb<Word>;

/// The infinitesimal character dual to x_n.
pub fn e_functional(n: usize, bound: usize) -> Functional {
    Functional::from_fn(
        HopfKind::Fdb,
        bound,
        |m| {
            if m.as_generator() == Some(&n) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        },
    )
}

/// The functional on H_FdB (monomials of degree ≤ bound) realizing u.
pub fn uenv_functional(u: &UEnvElement, bound: usize) -> Functional {
    let mut acc = Functional::zero(HopfKind::Fdb, bound);
    for (w, c) in u.iter() {
        let mut f = Functional::unit(HopfKind::Fdb, bound);
        for &n in w.letters() {
            f = convolve(&f, &e_functional(n, bound)).expect("same algebra");
        }
        acc = acc.add_scaled(&f, c);
    }
    acc
}

/// ⟨h, u⟩ with u realized as an iterated convolution on H_FdB.
pub fn pairing(h: &LinComb<CommMonomial>, u: &UEnvElement) -> Scalar {
    let bound = h.max_degree().unwrap_or(0);
    pairing_bounded(h, u, bound).expect("bound covers h")
}

/// ⟨h, u⟩ on monomials of degree ≤ bound; higher-degree terms are an error.
pub fn pairing_bounded(h: &LinComb<CommMonomial>, u: &UEnvElement, bound: usize) -> Result<Scalar> {
    if let Some(d) = h.max_degree() {
        if d > bound {
            return Err(Error::DegreeOverflow { degree: d, bound });
        }
    }
    // Words whose degree differs from every term of h pair to zero.
    let degrees: std::collections::BTreeSet<usize> = h.support().map(|m| m.degree()).collect();
    let u = u.filter(|w| degrees.contains(&w.degree()));
    Ok(uenv_functional(&u, bound).eval(h))
}
