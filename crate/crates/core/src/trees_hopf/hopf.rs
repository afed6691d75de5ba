use std::collections::BTreeMap;

use super::tree::{bplus, forests_of_degree, trees_of_degree, Forest, RootedTree, Shape};
use crate::hopf::GradedHopf;
use crate::lincomb::{LinComb, Tensor2};
use crate::scalar::Scalar;

/// Δ(F) = Σ crown ⊗ trunk over the admissible cuts of F, enumerated as the
/// vertex subsets W (the trunk) that contain the parent of each of their
/// non-root vertices; the crown is the complement.
pub fn coproduct_rt(f: &Forest) -> Tensor2<Forest> {
    let shape = Shape::of_forest(f);
    assert!(shape.len() < 64, "forest too large for cut enumeration");
    let full = shape.full();
    let mut out = Tensor2::zero();
    for w in 0..=full {
        if shape.is_trunk(w) {
            out.add_term((shape.induced(full & !w), shape.induced(w)), Scalar::one());
        }
    }
    out
}

/// The Hopf algebra of rooted forests with antipodes of trees tabulated up
/// to a degree bound.
#[derive(Debug, Clone)]
pub struct RtHopf {
    bound: usize,
    antipodes: BTreeMap<RootedTree, LinComb<Forest>>,
}

impl RtHopf {
    pub fn new(bound: usize) -> Self {
        let mut h = RtHopf { bound, antipodes: BTreeMap::new() };
        for n in 1..=bound {
            for t in trees_of_degree(n) {
                // Σ S(crown)·trunk = 0, and the empty trunk contributes S(t).
                let mut acc = LinComb::zero();
                for ((crown, trunk), c) in coproduct_rt(&Forest::tree(t.clone())).iter() {
                    if trunk.is_one() {
                        continue;
                    }
                    let s = h.antipode_forest(crown);
                    acc.add_scaled(&s.mul(&LinComb::basis(trunk.clone())), &-c);
                }
                h.antipodes.insert(t, acc);
            }
        }
        h
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn antipode_tree(&self, t: &RootedTree) -> LinComb<Forest> {
        self.antipodes.get(t).cloned().unwrap_or_else(|| panic!("tree {t} beyond tabulated degree {}", self.bound))
    }

    pub fn antipode_forest(&self, f: &Forest) -> LinComb<Forest> {
        let mut acc = LinComb::one();
        for t in f.trees() {
            acc = acc.mul(&self.antipode_tree(t));
        }
        acc
    }
}

impl GradedHopf for RtHopf {
    type B = Forest;

    fn name(&self) -> String {
        "H_RT".into()
    }

    fn basis(&self, degree: usize) -> Vec<Forest> {
        forests_of_degree(degree)
    }

    fn coproduct_basis(&self, b: &Forest) -> Tensor2<Forest> {
        coproduct_rt(b)
    }

    fn antipode_basis(&self, b: &Forest) -> LinComb<Forest> {
        self.antipode_forest(b)
    }
}

/// Both sides of Δ(B₊(F)) = B₊(F) ⊗ 1 + (id ⊗ B₊)Δ(F).
pub fn cocycle_sides(f: &Forest) -> (Tensor2<Forest>, Tensor2<Forest>) {
    let t = Forest::tree(bplus(f));
    let lhs = coproduct_rt(&t);
    let mut rhs = Tensor2::basis((t, Forest::one()));
    for ((a, b), c) in coproduct_rt(f).iter() {
        rhs.add_term((a.clone(), Forest::tree(bplus(b))), c.clone());
    }
    (lhs, rhs)
}

/// Checks the cocycle identity on every forest of degree ≤ max_degree.
pub fn check_cocycle(max_degree: usize) -> Result<usize, String> {
    let mut n = 0;
    for d in 0..=max_degree {
        for f in forests_of_degree(d) {
            let (l, r) = cocycle_sides(&f);
            if l != r {
                return Err(format!("cocycle fails on {f}: {l:?} != {r:?}"));
            }
            n += 1;
        }
    }
    Ok(n)
}
