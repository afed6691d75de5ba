use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::hopf::coproduct_rt;
use super::tree::{bplus, forests_of_degree, trees_of_degree, Forest, RootedTree, Shape};
use crate::basis::Graded;
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Tensor2};
use crate::scalar::Scalar;

/// The trees obtained by attaching the root of t to each vertex of u, one
/// per vertex (so with repetitions).
pub fn graft_all_positions(t: &RootedTree, u: &RootedTree) -> Vec<RootedTree> {
    let kids: Vec<RootedTree> = u.children().trees().to_vec();
    let mut out = Vec::new();
    let mut at_root = kids.clone();
    at_root.push(t.clone());
    out.push(bplus(&Forest::from_trees(at_root)));
    for i in 0..kids.len() {
        for r in graft_all_positions(t, &kids[i]) {
            let mut k = kids.clone();
            k[i] = r;
            out.push(bplus(&Forest::from_trees(k)));
        }
    }
    out
}

/// t → u = Σ_{v ∈ V(u)} t →_v u.
pub fn graft(t: &RootedTree, u: &RootedTree) -> LinComb<RootedTree> {
    graft_all_positions(t, u).into_iter().map(|r| (r, Scalar::one())).collect()
}

/// Bilinear extension of grafting.
pub fn graft_lin(a: &LinComb<RootedTree>, b: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    let mut out = LinComb::zero();
    for (t, x) in a.iter() {
        for (u, y) in b.iter() {
            out.add_scaled(&graft(t, u), &(x * y));
        }
    }
    out
}

/// N'(t, u, T): the number of edges of T whose removal leaves the subtree
/// above the edge equal to t and the rest equal to u.
pub fn graft_count_n(t: &RootedTree, u: &RootedTree, big: &RootedTree) -> usize {
    let shape = Shape::of_tree(big);
    let full = shape.full();
    (1..shape.len())
        .filter(|&v| {
            let above = shape.descendants(v);
            shape.induced(above).as_tree() == Some(t) && shape.induced(full & !above).as_tree() == Some(u)
        })
        .count()
}

/// M'(t, u, T) = σ(t)σ(u)/σ(T) · N'(t, u, T), the coefficient of T in t → u.
pub fn graft_count_m(t: &RootedTree, u: &RootedTree, big: &RootedTree) -> Scalar {
    let n = graft_count_n(t, u, big);
    let num = t.symmetry_factor() * u.symmetry_factor() * BigInt::from(n);
    Scalar::from_big(num, big.symmetry_factor()).expect("σ > 0")
}

/// Element of the graded dual of H_RT in the basis δ_F dual to forests.
pub type GlFunctional = LinComb<Forest>;

/// δ̃_t = σ(t) δ_t.
pub fn normalized_delta(t: &RootedTree) -> GlFunctional {
    GlFunctional::term(Forest::tree(t.clone()), Scalar::from_bigint(t.symmetry_factor()))
}

/// Coproducts of all forests up to a degree, with the Grossman–Larson
/// product and the PBW decomposition computed against them.
#[derive(Debug, Clone)]
pub struct GlContext {
    bound: usize,
    by_degree: Vec<Vec<Forest>>,
    coproducts: BTreeMap<Forest, Tensor2<Forest>>,
}

impl GlContext {
    pub fn new(bound: usize) -> Self {
        let by_degree: Vec<Vec<Forest>> = (0..=bound).map(forests_of_degree).collect();
        let coproducts = by_degree.iter().flatten().map(|f| (f.clone(), coproduct_rt(f))).collect();
        GlContext { bound, by_degree, coproducts }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn forests(&self, degree: usize) -> &[Forest] {
        &self.by_degree[degree]
    }

    /// (ζ ∗ η)(F) = (ζ ⊗ η)(Δ F).
    pub fn product(&self, zeta: &GlFunctional, eta: &GlFunctional) -> Result<GlFunctional> {
        let mut degrees = std::collections::BTreeSet::new();
        for a in zeta.support() {
            for b in eta.support() {
                degrees.insert(a.degree() + b.degree());
            }
        }
        let mut out = GlFunctional::zero();
        for d in degrees {
            if d > self.bound {
                return Err(Error::DegreeOverflow { degree: d, bound: self.bound });
            }
            for f in &self.by_degree[d] {
                let v = self.coproducts[f].eval(|(a, b)| {
                    let x = zeta.coeff(a);
                    if x.is_zero() {
                        Scalar::zero()
                    } else {
                        x * eta.coeff(b)
                    }
                });
                out.add_term(f.clone(), v);
            }
        }
        Ok(out)
    }

    /// δ_{t_1} ∗ ⋯ ∗ δ_{t_k} for the components of F in canonical order.
    pub fn pbw_product(&self, f: &Forest) -> Result<GlFunctional> {
        let mut acc = GlFunctional::basis(Forest::one());
        for t in f.trees() {
            acc = self.product(&acc, &GlFunctional::basis(Forest::tree(t.clone())))?;
        }
        Ok(acc)
    }

    /// δ_F as a combination of ordered products δ_{t_1} ∗ ⋯ ∗ δ_{t_k}, each
    /// product keyed by the forest of its factors.
    pub fn pbw_decompose(&self, f: &Forest) -> Result<LinComb<Forest>> {
        let mut memo = BTreeMap::new();
        self.pbw_rec(f, &mut memo)
    }

    fn pbw_rec(&self, f: &Forest, memo: &mut BTreeMap<Forest, LinComb<Forest>>) -> Result<LinComb<Forest>> {
        if let Some(v) = memo.get(f) {
            return Ok(v.clone());
        }
        // P_F = P_F(F) δ_F + Σ_G P_F(G) δ_G with G ≠ F having fewer components.
        let p = self.pbw_product(f)?;
        let lead = p.coeff(f);
        let mut out = LinComb::basis(f.clone());
        for (g, c) in p.iter() {
            if g == f {
                continue;
            }
            debug_assert!(g.len() < f.len(), "PBW system is triangular in component count");
            let sub = self.pbw_rec(g, memo)?;
            out.add_scaled(&sub, &-c);
        }
        let out = out.scale(&lead.recip()?);
        memo.insert(f.clone(), out.clone());
        Ok(out)
    }
}

/// ζ ∗ η in the Grossman–Larson algebra.
pub fn gl_product(zeta: &GlFunctional, eta: &GlFunctional) -> Result<GlFunctional> {
    let deg = |x: &GlFunctional| x.max_degree().unwrap_or(0);
    GlContext::new(deg(zeta) + deg(eta)).product(zeta, eta)
}

/// PBW decomposition of δ_F.
pub fn pbw_decompose(f: &Forest) -> Result<LinComb<Forest>> {
    GlContext::new(f.degree()).pbw_decompose(f)
}

/// Expands a PBW combination back into the δ basis.
pub fn pbw_expand(ctx: &GlContext, p: &LinComb<Forest>) -> Result<GlFunctional> {
    let mut out = GlFunctional::zero();
    for (g, c) in p.iter() {
        out.add_scaled(&ctx.pbw_product(g)?, c);
    }
    Ok(out)
}

impl crate::lincomb::ShowBasis for RootedTree {
    fn show(&self) -> String {
        self.to_string()
    }
}

/// Left pre-Lie identity for grafting: s→(t→u) − (s→t)→u is symmetric in
/// s, t, on all triples of trees with total degree ≤ max_total.
pub fn check_graft_prelie(max_total: usize) -> crate::hopf::CheckOutcome {
    let trees: Vec<RootedTree> = (1..=max_total.saturating_sub(2)).flat_map(trees_of_degree).collect();
    let assoc = |s: &RootedTree, t: &RootedTree, u: &RootedTree| {
        let bs = LinComb::basis(s.clone());
        graft_lin(&bs, &graft(t, u)) - graft_lin(&graft(s, t), &LinComb::basis(u.clone()))
    };
    let mut count = 0;
    for s in &trees {
        for t in &trees {
            for u in &trees {
                if s.vertices() + t.vertices() + u.vertices() > max_total {
                    continue;
                }
                if assoc(s, t, u) != assoc(t, s, u) {
                    return Err(format!("pre-Lie identity fails on ({s}, {t}, {u})"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        RootedTree::parse(s).unwrap()
    }

    fn d(s: &str) -> GlFunctional {
        GlFunctional::basis(Forest::parse(s).unwrap())
    }

    #[test]
    fn grafting_examples() {
        assert_eq!(graft(&t("[]"), &t("[]")), LinComb::basis(t("[[]]")));
        let g = graft(&t("[]"), &t("[[]]"));
        assert_eq!(g, LinComb::basis(t("[[[]]]")) + LinComb::basis(t("[[][]]")));
        let cherry = t("[[][]]");
        assert_eq!(graft_count_n(&t("[]"), &t("[[]]"), &cherry), 2);
        assert_eq!(graft_count_m(&t("[]"), &t("[[]]"), &cherry), Scalar::one());
    }

    #[test]
    fn gl_examples() {
        let p = gl_product(&d("[]"), &d("[]")).unwrap();
        assert_eq!(p, d("[] []").scale(&Scalar::from_int(2)) + d("[[]]"));
        let a = normalized_delta(&t("[]"));
        let b = normalized_delta(&t("[[]]"));
        let comm = gl_product(&a, &b).unwrap() - gl_product(&b, &a).unwrap();
        assert_eq!(comm, normalized_delta(&t("[[][]]")));
        let dec = pbw_decompose(&Forest::parse("[] []").unwrap()).unwrap();
        let half = Scalar::new(1, 2).unwrap();
        let expect = d("[] []").scale(&half) + d("[[]]").scale(&-half.clone());
        assert_eq!(dec, expect);
    }

    #[test]
    fn grafting_is_left_prelie() {
        assert!(check_graft_prelie(6).unwrap() > 0);
    }

    #[test]
    fn pbw_roundtrip() {
        let ctx = GlContext::new(4);
        for deg in 1..=4 {
            for f in ctx.forests(deg).to_vec() {
                let dec = ctx.pbw_decompose(&f).unwrap();
                assert_eq!(pbw_expand(&ctx, &dec).unwrap(), GlFunctional::basis(f.clone()));
            }
        }
    }
}
