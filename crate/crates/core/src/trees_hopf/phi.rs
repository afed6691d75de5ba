use std::collections::BTreeMap;

use super::grafting::{graft, GlContext};
use super::hopf::coproduct_rt;
use super::tree::{trees_of_degree, Forest, RootedTree};
use crate::basis::{CommMonomial, Graded, MulBasis, Word};
use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::fdb_hopf::{monomials_of_degree, HopfKind, PolyHopf};
use crate::hopf::CheckOutcome;
use crate::lie_brace::{symmetric_brace, uenv_functional, L1Element, UEnvElement};
use crate::linalg::rank;
use crate::lincomb::{tensor, LinComb, Tensor2};
use crate::scalar::Scalar;

/// The pre-Lie morphism from trees under grafting to L_1 with •↦e_1,
/// computed through φ(B₊(t_1⋯t_k)) = {e_1; φ(t_1)⋯φ(t_k)}.
pub fn phi(t: &RootedTree) -> L1Element {
    let args: Vec<L1Element> = t.children().trees().iter().map(phi).collect();
    symmetric_brace(&L1Element::e(1), &args)
}

pub fn phi_lin(x: &LinComb<RootedTree>) -> L1Element {
    let mut out = L1Element::zero();
    for (t, c) in x.iter() {
        out = out.add(&phi(t).scale(c));
    }
    out
}

/// Transport of GL functionals to U(L_1): δ̃_t = σ(t)δ_t goes to φ(t), and
/// products of single-tree duals go to products in U(L_1).
#[derive(Debug, Clone)]
pub struct PsiContext {
    gl: GlContext,
    // table[w][m] = ⟨m, e_{w_1} ∗ ⋯ ∗ e_{w_k}⟩ for words w of the bound's degrees.
    pairing: BTreeMap<Word, BTreeMap<CommMonomial, Scalar>>,
}

impl PsiContext {
    pub fn new(bound: usize) -> Self {
        let gl = GlContext::new(bound);
        let mut pairing = BTreeMap::new();
        for n in 1..=bound {
            let monos = monomials_of_degree(n);
            for comp in compositions(n) {
                let w = Word(comp);
                let f = uenv_functional(&UEnvElement::basis(w.clone()), n);
                let row = monos.iter().map(|m| (m.clone(), f.value(m))).collect();
                pairing.insert(w, row);
            }
        }
        PsiContext { gl, pairing }
    }

    pub fn gl(&self) -> &GlContext {
        &self.gl
    }

    /// Φ(δ_t) = φ(t)/σ(t).
    pub fn phi_delta_tree(&self, t: &RootedTree) -> UEnvElement {
        let sigma = Scalar::from_bigint(t.symmetry_factor());
        phi(t).to_uenv().scale(&sigma.recip().expect("σ > 0"))
    }

    /// Φ(δ_F) ∈ U(L_1).
    pub fn phi_delta(&self, f: &Forest) -> Result<UEnvElement> {
        let dec = self.gl.pbw_decompose(f)?;
        let mut out = UEnvElement::zero();
        for (g, c) in dec.iter() {
            let mut prod = UEnvElement::one();
            for t in g.trees() {
                prod = prod.mul(&self.phi_delta_tree(t));
            }
            out.add_scaled(&prod, c);
        }
        Ok(out)
    }

    fn pair(&self, m: &CommMonomial, u: &UEnvElement) -> Scalar {
        u.eval(|w| self.pairing.get(w).and_then(|row| row.get(m)).cloned().unwrap_or_default())
    }

    /// Ψ(m) = Σ_{|F| = |m|} ⟨m, Φ(δ_F)⟩ F.
    pub fn psi(&self, m: &CommMonomial) -> Result<LinComb<Forest>> {
        let n = m.degree();
        if n > self.gl.bound() {
            return Err(Error::DegreeOverflow { degree: n, bound: self.gl.bound() });
        }
        if n == 0 {
            return Ok(LinComb::basis(Forest::one()));
        }
        let mut out = LinComb::zero();
        for f in self.gl.forests(n) {
            let u = self.phi_delta(f)?;
            out.add_term(f.clone(), self.pair(m, &u));
        }
        Ok(out)
    }

    pub fn psi_lin(&self, h: &LinComb<CommMonomial>) -> Result<LinComb<Forest>> {
        let mut out = LinComb::zero();
        for (m, c) in h.iter() {
            out.add_scaled(&self.psi(m)?, c);
        }
        Ok(out)
    }
}

/// Ψ on a single monomial of H_FdB.
pub fn psi_embed(m: &CommMonomial) -> Result<LinComb<Forest>> {
    PsiContext::new(m.degree()).psi(m)
}

/// φ(t→u) = φ(t) ▷₁ φ(u) for all pairs with |t| + |u| ≤ max_total.
pub fn check_phi_morphism(max_total: usize) -> CheckOutcome {
    let trees: Vec<RootedTree> = (1..max_total).flat_map(trees_of_degree).collect();
    let mut count = 0;
    for t in &trees {
        for u in &trees {
            if t.vertices() + u.vertices() > max_total {
                continue;
            }
            let lhs = phi_lin(&graft(t, u));
            let rhs = phi(t).prelie(&phi(u), &Scalar::one());
            if lhs != rhs {
                return Err(format!("φ({t} → {u}) = {lhs} but φ({t}) ▷ φ({u}) = {rhs}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

impl PsiContext {
    /// Ψ(m m') = Ψ(m)Ψ(m') for all monomials with total degree ≤ the bound.
    pub fn check_multiplicative(&self) -> CheckOutcome {
        let n = self.gl.bound();
        let mut count = 0;
        for d1 in 1..n {
            for d2 in d1..=n - d1 {
                for a in monomials_of_degree(d1) {
                    for b in monomials_of_degree(d2) {
                        let lhs = self.psi(&a.mul(&b)).map_err(|e| e.to_string())?;
                        let rhs =
                            self.psi(&a).map_err(|e| e.to_string())?.mul(&self.psi(&b).map_err(|e| e.to_string())?);
                        if lhs != rhs {
                            return Err(format!("Ψ({a}·{b}) ≠ Ψ({a})Ψ({b})"));
                        }
                        count += 1;
                    }
                }
            }
        }
        Ok(count)
    }

    /// Δ_RT Ψ(m) = (Ψ ⊗ Ψ) Δ_FdB(m) for all monomials of degree ≤ the bound.
    pub fn check_comultiplicative(&self) -> CheckOutcome {
        let n = self.gl.bound();
        let fdb = PolyHopf::new(HopfKind::Fdb, n);
        let mut count = 0;
        for d in 1..=n {
            for m in monomials_of_degree(d) {
                let lhs = coproduct_rt_lin(&self.psi(&m).map_err(|e| e.to_string())?);
                let mut rhs = Tensor2::zero();
                for ((a, b), c) in fdb.coproduct_monomial(&m).iter() {
                    let pa = self.psi(a).map_err(|e| e.to_string())?;
                    let pb = self.psi(b).map_err(|e| e.to_string())?;
                    rhs.add_scaled(&tensor(&pa, &pb), c);
                }
                if lhs != rhs {
                    return Err(format!("Δ Ψ({m}) ≠ (Ψ⊗Ψ) Δ({m})"));
                }
                count += 1;
            }
        }
        Ok(count)
    }

    /// Rank of Ψ restricted to each degree 1..=bound.
    pub fn ranks(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for d in 1..=self.gl.bound() {
            let forests = self.gl.forests(d);
            let mut rows = Vec::new();
            for m in monomials_of_degree(d) {
                let img = self.psi(&m)?;
                rows.push(forests.iter().map(|f| img.coeff(f)).collect());
            }
            out.push(rank(rows));
        }
        Ok(out)
    }
}

fn coproduct_rt_lin(x: &LinComb<Forest>) -> Tensor2<Forest> {
    let mut out = Tensor2::zero();
    for (f, c) in x.iter() {
        out.add_scaled(&coproduct_rt(f), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        RootedTree::parse(s).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&t("[]")), L1Element::e(1));
        assert_eq!(phi(&t("[[]]")), L1Element::e(2).scale(&Scalar::from_int(2)));
        assert_eq!(phi(&t("[[][]]")), L1Element::e(3).scale(&Scalar::from_int(2)));
        assert_eq!(phi(&t("[[[]]]")), L1Element::e(3).scale(&Scalar::from_int(4)));
    }

    #[test]
    fn psi_low_degree() {
        let ctx = PsiContext::new(2);
        let f = |s: &str| Forest::parse(s).unwrap();
        assert_eq!(ctx.psi(&CommMonomial::gen(1)).unwrap(), LinComb::basis(f("[]")));
        assert_eq!(ctx.psi(&CommMonomial::power(1, 2)).unwrap(), LinComb::basis(f("[] []")));
        assert_eq!(ctx.psi(&CommMonomial::gen(2)).unwrap(), LinComb::term(f("[[]]"), Scalar::from_int(2)));
    }

    #[test]
    fn phi_is_a_prelie_morphism() {
        assert!(check_phi_morphism(6).unwrap() > 0);
    }

    #[test]
    fn psi_is_an_injective_hopf_morphism() {
        let ctx = PsiContext::new(5);
        ctx.check_multiplicative().unwrap();
        ctx.check_comultiplicative().unwrap();
        assert_eq!(ctx.ranks().unwrap(), vec![1, 2, 3, 5, 7]);
    }
}
