//! Non-symmetric set operads, their axioms, and the induced pre-Lie product.

use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::CheckOutcome;
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// A non-symmetric operad whose compositions of basis elements are basis
/// elements (both instances here are set operads).
pub trait NsOperad: Clone {
    type Op: Clone + Ord + fmt::Debug + fmt::Display;

    fn name(&self) -> &'static str;

    fn arity(&self, a: &Self::Op) -> usize;

    fn identity(&self) -> Self::Op;

    /// All basis elements of the given arity.
    fn basis(&self, arity: usize) -> Vec<Self::Op>;

    fn parse_op(&self, s: &str) -> Result<Self::Op>;

    /// a ∘_i b, 1 ≤ i ≤ arity(a).
    fn partial_compose(&self, a: &Self::Op, i: usize, b: &Self::Op) -> Result<Self::Op>;

    /// γ(a; b_1, …, b_k).
    fn total_compose(&self, a: &Self::Op, bs: &[Self::Op]) -> Result<Self::Op> {
        total_by_partials(self, a, bs)
    }
}

/// γ(a; b_1, …, b_k) as (⋯(a ∘_k b_k) ∘_{k−1} ⋯) ∘_1 b_1.
pub fn total_by_partials<O: NsOperad>(op: &O, a: &O::Op, bs: &[O::Op]) -> Result<O::Op> {
    let k = op.arity(a);
    if bs.len() != k {
        return Err(Error::OutOfRange(format!("{} inputs given to an operation of arity {k}", bs.len())));
    }
    let mut acc = a.clone();
    for (i, b) in bs.iter().enumerate().rev() {
        acc = op.partial_compose(&acc, i + 1, b)?;
    }
    Ok(acc)
}

pub(crate) fn check_index(arity: usize, i: usize) -> Result<()> {
    if i == 0 || i > arity {
        return Err(Error::OutOfRange(format!("slot {i} outside 1..={arity}")));
    }
    Ok(())
}

fn basis_up_to<O: NsOperad>(op: &O, max_arity: usize) -> Vec<O::Op> {
    (1..=max_arity).flat_map(|n| op.basis(n)).collect()
}

/// Unit, nested and disjoint associativity on all basis elements of arity
/// ≤ max_arity. Returns the number of identities checked.
pub fn check_operad_axioms<O: NsOperad>(op: &O, max_arity: usize) -> CheckOutcome {
    let all = basis_up_to(op, max_arity);
    let e = op.identity();
    let pc = |a: &O::Op, i: usize, b: &O::Op| op.partial_compose(a, i, b).map_err(|err| err.to_string());
    let mut count = 0;
    for a in &all {
        if pc(&e, 1, a)? != *a {
            return Err(format!("e ∘_1 {a} ≠ {a}"));
        }
        for i in 1..=op.arity(a) {
            if pc(a, i, &e)? != *a {
                return Err(format!("{a} ∘_{i} e ≠ {a}"));
            }
            count += 2;
        }
    }
    for a in &all {
        let ka = op.arity(a);
        for b in &all {
            let kb = op.arity(b);
            for c in &all {
                for i in 1..=ka {
                    let ab = pc(a, i, b)?;
                    for j in 1..=kb {
                        let lhs = pc(&ab, i + j - 1, c)?;
                        let rhs = pc(a, i, &pc(b, j, c)?)?;
                        if lhs != rhs {
                            return Err(format!(
                                "nested: ({a} ∘_{i} {b}) ∘_{} {c} ≠ {a} ∘_{i} ({b} ∘_{j} {c})",
                                i + j - 1
                            ));
                        }
                        count += 1;
                    }
                    for j in i + 1..=ka {
                        let lhs = pc(&ab, j + kb - 1, c)?;
                        let rhs = pc(&pc(a, j, c)?, i, b)?;
                        if lhs != rhs {
                            return Err(format!(
                                "disjoint: ({a} ∘_{i} {b}) ∘_{} {c} ≠ ({a} ∘_{j} {c}) ∘_{i} {b}",
                                j + kb - 1
                            ));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// p ◁ q = Σ_i q ∘_i p, inserting p into every slot of q.
pub fn operadic_prelie<O: NsOperad>(op: &O, p: &O::Op, q: &O::Op) -> Result<LinComb<O::Op>> {
    let mut out = LinComb::zero();
    for i in 1..=op.arity(q) {
        out.add_term(op.partial_compose(q, i, p)?, Scalar::one());
    }
    Ok(out)
}

pub fn operadic_prelie_lin<O: NsOperad>(op: &O, x: &LinComb<O::Op>, y: &LinComb<O::Op>) -> Result<LinComb<O::Op>> {
    let mut out = LinComb::zero();
    for (p, a) in x.iter() {
        for (q, b) in y.iter() {
            out.add_scaled(&operadic_prelie(op, p, q)?, &(a * b));
        }
    }
    Ok(out)
}

/// [p, q] = p ◁ q − q ◁ p.
pub fn operadic_bracket<O: NsOperad>(op: &O, p: &O::Op, q: &O::Op) -> Result<LinComb<O::Op>> {
    Ok(operadic_prelie(op, p, q)? - operadic_prelie(op, q, p)?)
}

/// Associator (x ◁ y) ◁ z − x ◁ (y ◁ z).
pub fn prelie_associator<O: NsOperad>(op: &O, x: &O::Op, y: &O::Op, z: &O::Op) -> Result<LinComb<O::Op>> {
    let bx = LinComb::basis(x.clone());
    let by = LinComb::basis(y.clone());
    let bz = LinComb::basis(z.clone());
    let left = operadic_prelie_lin(op, &operadic_prelie_lin(op, &bx, &by)?, &bz)?;
    let right = operadic_prelie_lin(op, &bx, &operadic_prelie_lin(op, &by, &bz)?)?;
    Ok(left - right)
}

/// Which pair of arguments the associator is symmetric in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreLieSide {
    /// A(x, y, z) = A(y, x, z).
    Left,
    /// A(x, y, z) = A(x, z, y).
    Right,
}

/// Checks the pre-Lie identity of the given side on all triples of basis
/// elements with total arity ≤ max_total.
pub fn check_prelie<O: NsOperad>(op: &O, side: PreLieSide, max_total: usize) -> CheckOutcome {
    let all = basis_up_to(op, max_total.saturating_sub(2));
    let mut count = 0;
    for x in &all {
        for y in &all {
            for z in &all {
                if op.arity(x) + op.arity(y) + op.arity(z) > max_total {
                    continue;
                }
                let a = prelie_associator(op, x, y, z).map_err(|e| e.to_string())?;
                let b = match side {
                    PreLieSide::Left => prelie_associator(op, y, x, z),
                    PreLieSide::Right => prelie_associator(op, x, z, y),
                }
                .map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("{side:?} pre-Lie identity fails on ({x}, {y}, {z})"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}
