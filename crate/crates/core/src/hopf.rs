//! Graded connected bialgebras with a distinguished basis, and generic
//! checks of the Hopf axioms on all basis elements up to a degree.

use std::fmt::Debug;

use crate::basis::{Graded, MulBasis};
use crate::lincomb::{multiply_out, tensor_map, LinComb, Tensor2};
use crate::scalar::Scalar;

pub type Tensor3<B> = LinComb<(B, B, B)>;

/// A graded connected Hopf algebra presented on a monoid basis.
pub trait GradedHopf {
    type B: MulBasis + Graded + Debug;

    fn name(&self) -> String;

    /// All basis elements of exactly the given degree.
    fn basis(&self, degree: usize) -> Vec<Self::B>;

    fn coproduct_basis(&self, b: &Self::B) -> Tensor2<Self::B>;

    fn antipode_basis(&self, b: &Self::B) -> LinComb<Self::B>;

    /// Whether S(uv) = S(v)S(u) (true) or S(u)S(v) (false) is expected.
    fn antipode_reverses_products(&self) -> bool {
        true
    }

    fn counit_basis(&self, b: &Self::B) -> Scalar {
        if *b == Self::B::unit() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn coproduct(&self, x: &LinComb<Self::B>) -> Tensor2<Self::B> {
        x.flat_map(|b| self.coproduct_basis(b))
    }

    fn antipode(&self, x: &LinComb<Self::B>) -> LinComb<Self::B> {
        x.flat_map(|b| self.antipode_basis(b))
    }

    fn counit(&self, x: &LinComb<Self::B>) -> Scalar {
        x.eval(|b| self.counit_basis(b))
    }

    fn basis_up_to(&self, degree: usize) -> Vec<Self::B> {
        (0..=degree).flat_map(|d| self.basis(d)).collect()
    }
}

/// Outcome of an axiom check: the number of instances verified, or a
/// description of the first counterexample.
pub type CheckOutcome = Result<usize, String>;

fn fail<B: Debug, T: Debug>(what: &str, b: &B, lhs: &T, rhs: &T) -> String {
    format!("{what} fails on {b:?}: {lhs:?} != {rhs:?}")
}

fn left_triple<B: Ord + Clone>(t: &Tensor2<B>, d: impl Fn(&B) -> Tensor2<B>) -> Tensor3<B> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for ((x, y), e) in d(a).iter() {
            out.add_term((x.clone(), y.clone(), b.clone()), c * e);
        }
    }
    out
}

fn right_triple<B: Ord + Clone>(t: &Tensor2<B>, d: impl Fn(&B) -> Tensor2<B>) -> Tensor3<B> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.iter() {
        for ((x, y), e) in d(b).iter() {
            out.add_term((a.clone(), x.clone(), y.clone()), c * e);
        }
    }
    out
}

pub fn check_coassociative<H: GradedHopf>(h: &H, max_degree: usize) -> CheckOutcome {
    let mut n = 0;
    for b in h.basis_up_to(max_degree) {
        let d = h.coproduct_basis(&b);
        let lhs = left_triple(&d, |x| h.coproduct_basis(x));
        let rhs = right_triple(&d, |x| h.coproduct_basis(x));
        if lhs != rhs {
            return Err(fail("coassociativity", &b, &lhs, &rhs));
        }
        n += 1;
    }
    Ok(n)
}

pub fn check_counit<H: GradedHopf>(h: &H, max_degree: usize) -> CheckOutcome {
    let mut n = 0;
    for b in h.basis_up_to(max_degree) {
        let d = h.coproduct_basis(&b);
        let one = LinComb::basis(b.clone());
        let left = d.flat_map(|(x, y)| LinComb::term(y.clone(), h.counit_basis(x)));
        let right = d.flat_map(|(x, y)| LinComb::term(x.clone(), h.counit_basis(y)));
        if left != one {
            return Err(fail("left counit", &b, &left, &one));
        }
        if right != one {
            return Err(fail("right counit", &b, &right, &one));
        }
        n += 1;
    }
    Ok(n)
}

pub fn check_antipode<H: GradedHopf>(h: &H, max_degree: usize) -> CheckOutcome {
    let mut n = 0;
    for b in h.basis_up_to(max_degree) {
        let d = h.coproduct_basis(&b);
        let expect = LinComb::term(H::B::unit(), h.counit_basis(&b));
        let left = multiply_out(&tensor_map(&d, |x| h.antipode_basis(x), |y| LinComb::basis(y.clone())));
        let right = multiply_out(&tensor_map(&d, |x| LinComb::basis(x.clone()), |y| h.antipode_basis(y)));
        if left != expect {
            return Err(fail("m(S⊗id)Δ = ηε", &b, &left, &expect));
        }
        if right != expect {
            return Err(fail("m(id⊗S)Δ = ηε", &b, &right, &expect));
        }
        n += 1;
    }
    Ok(n)
}

/// Δ, ε multiplicative and S an (anti)morphism on pairs of basis elements
/// with total degree ≤ max_degree.
pub fn check_morphisms<H: GradedHopf>(h: &H, max_degree: usize) -> CheckOutcome {
    let all = h.basis_up_to(max_degree);
    let mut n = 0;
    for a in &all {
        for b in &all {
            if a.degree() + b.degree() > max_degree {
                continue;
            }
            let ab = a.mul(b);
            let lhs = h.coproduct_basis(&ab);
            let rhs = h.coproduct_basis(a).mul(&h.coproduct_basis(b));
            if lhs != rhs {
                return Err(fail("Δ multiplicative", &(a, b), &lhs, &rhs));
            }
            let e = h.counit_basis(&ab);
            let e2 = h.counit_basis(a) * h.counit_basis(b);
            if e != e2 {
                return Err(fail("ε multiplicative", &(a, b), &e, &e2));
            }
            let s = h.antipode_basis(&ab);
            let (sa, sb) = (h.antipode_basis(a), h.antipode_basis(b));
            let s2 = if h.antipode_reverses_products() { sb.mul(&sa) } else { sa.mul(&sb) };
            if s != s2 {
                return Err(fail("S (anti)morphism", &(a, b), &s, &s2));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Δ = τ∘Δ on all basis elements up to the degree; Err names a witness.
pub fn check_cocommutative<H: GradedHopf>(h: &H, max_degree: usize) -> CheckOutcome {
    let mut n = 0;
    for b in h.basis_up_to(max_degree) {
        let d = h.coproduct_basis(&b);
        let t = crate::lincomb::flip(&d);
        if d != t {
            return Err(fail("cocommutativity", &b, &d, &t));
        }
        n += 1;
    }
    Ok(n)
}

/// Runs every axiom check; returns the per-axiom outcomes.
pub fn hopf_axioms<H: GradedHopf>(h: &H, max_degree: usize) -> Vec<(String, CheckOutcome)> {
    vec![
        ("coassociativity".to_string(), check_coassociative(h, max_degree)),
        ("counit".to_string(), check_counit(h, max_degree)),
        ("antipode".to_string(), check_antipode(h, max_degree)),
        ("morphisms".to_string(), check_morphisms(h, max_degree)),
    ]
}
