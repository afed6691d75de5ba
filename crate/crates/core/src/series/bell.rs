use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::{CommMonomial, Monomial, MulBasis};
use crate::combinat::{binomial_q, block_sizes, factorial, multiplicities, partitions_with_parts, set_partitions};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

fn check_range(n: usize, m: usize) -> Result<()> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::OutOfRange(format!("Bell polynomial B_{{{n},{m}}} needs 1 ≤ m ≤ n")));
    }
    Ok(())
}

/// Partial Bell polynomial B_{n,m}(x_1, ..., x_{n-m+1}) from the multinomial
/// formula: coefficient of Π x_i^{k_i} is n! / Π (k_i! (i!)^{k_i}).
pub fn bell_polynomial(n: usize, m: usize) -> Result<LinComb<CommMonomial>> {
    check_range(n, m)?;
    let mut out = LinComb::zero();
    for parts in partitions_with_parts(n, m) {
        let k = multiplicities(&parts, n);
        let mut den = num_bigint::BigInt::from(1);
        for (i, &ki) in k.iter().enumerate().skip(1) {
            den *= factorial(ki) * factorial(i).pow(ki as u32);
        }
        let c = Scalar::from_big(factorial(n), den)?;
        let mono = CommMonomial::from_pairs(k.iter().enumerate().skip(1).map(|(i, &ki)| (i, ki as u32)));
        out.add_term(mono, c);
    }
    Ok(out)
}

/// B_{n,m} by counting set partitions of an n-set into m blocks, each block
/// of size r contributing x_r.
pub fn bell_polynomial_by_partitions(n: usize, m: usize) -> Result<LinComb<CommMonomial>> {
    check_range(n, m)?;
    let mut out = LinComb::zero();
    for rgs in set_partitions(n) {
        let sizes = block_sizes(&rgs);
        if sizes.len() == m {
            out.add_term(CommMonomial::from_pairs(sizes.into_iter().map(|s| (s, 1))), Scalar::one());
        }
    }
    Ok(out)
}

/// A product f^{(m)} · Π (g^{(k)})^{e_k} of formal derivative symbols.
/// `f == 0` means no f factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DerivMonomial {
    pub f: usize,
    pub g: CommMonomial,
}

impl DerivMonomial {
    pub fn new(f: usize, g: CommMonomial) -> Self {
        DerivMonomial { f, g }
    }
}

impl fmt::Display for DerivMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.f > 0 {
            parts.push(format!("f({})", self.f));
        }
        for (k, e) in self.g.iter() {
            parts.push(if e == 1 { format!("g({k})") } else { format!("g({k})^{e}") });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for DerivMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl MulBasis for DerivMonomial {
    fn unit() -> Self {
        DerivMonomial { f: 0, g: CommMonomial::one() }
    }
    // Only meaningful when at most one side carries an f factor.
    fn mul(&self, other: &Self) -> Self {
        DerivMonomial { f: self.f.max(other.f), g: self.g.times(&other.g) }
    }
}

/// Symbols of the determinant matrix: the undifferentiated f and g^{(k)}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sym {
    F,
    G(usize),
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange("derivative order must be at least 1".into()));
    }
    Ok(())
}

/// n-th derivative of f∘g: Σ_m f^{(m)} B_{n,m}(g', g'', ...).
pub fn fdb_derivative(n: usize) -> Result<LinComb<DerivMonomial>> {
    check_n(n)?;
    let mut out = LinComb::zero();
    for m in 1..=n {
        let b = bell_polynomial(n, m)?;
        for (mono, c) in b.iter() {
            out.add_term(DerivMonomial::new(m, mono.clone()), c.clone());
        }
    }
    Ok(out)
}

/// n-th derivative of f∘g as a sum over set partitions of {1..n}: a partition
/// with blocks B_1..B_m contributes f^{(m)} Π g^{(|B_i|)}.
pub fn fdb_derivative_partitions(n: usize) -> Result<LinComb<DerivMonomial>> {
    check_n(n)?;
    let mut out = LinComb::zero();
    for rgs in set_partitions(n) {
        let sizes = block_sizes(&rgs);
        let g = CommMonomial::from_pairs(sizes.iter().map(|&s| (s, 1)));
        out.add_term(DerivMonomial::new(sizes.len(), g), Scalar::one());
    }
    Ok(out)
}

type SymPoly = LinComb<Monomial<Sym>>;

fn determinant(m: &[Vec<SymPoly>], rows: &[usize], col: usize) -> SymPoly {
    // Cofactor expansion along column `col` over the remaining rows.
    if rows.is_empty() {
        return SymPoly::one();
    }
    let mut out = SymPoly::zero();
    for (pos, &r) in rows.iter().enumerate() {
        let entry = &m[r][col];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let minor = determinant(m, &rest, col + 1);
        let sign = if pos % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
        out.add_scaled(&entry.mul(&minor), &sign);
    }
    out
}

/// The n-th derivative of f∘g as the determinant of an upper Hessenberg
/// matrix with entries C(n-i, j-i) f g^{(j-i+1)} on and above the diagonal
/// and -1 on the subdiagonal. The determinant is expanded as a polynomial in
/// the symbol f and afterwards f^m is read as f^{(m)}.
pub fn fdb_determinant(n: usize) -> Result<LinComb<DerivMonomial>> {
    check_n(n)?;
    let mut m = vec![vec![SymPoly::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if j >= i {
                let mono = Monomial::from_pairs([(Sym::F, 1), (Sym::G(j - i + 1), 1)]);
                *cell = SymPoly::term(mono, binomial_q(n - 1 - i, j - i));
            } else if j + 1 == i {
                *cell = SymPoly::term(Monomial::one(), Scalar::from_int(-1));
            }
        }
    }
    let rows: Vec<usize> = (0..n).collect();
    let det = determinant(&m, &rows, 0);
    let mut out = LinComb::zero();
    for (mono, c) in det.iter() {
        let mut f = 0;
        let mut g = BTreeMap::new();
        for (s, e) in mono.iter() {
            match s {
                Sym::F => f = e as usize,
                Sym::G(k) => {
                    g.insert(*k, e);
                }
            }
        }
        out.add_term(DerivMonomial::new(f, CommMonomial::from_pairs(g)), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(pairs: &[(usize, u32)]) -> CommMonomial {
        CommMonomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn small_bell_polynomials() {
        let b = bell_polynomial(3, 1).unwrap();
        assert_eq!(b, LinComb::basis(mono(&[(3, 1)])));
        let b = bell_polynomial(3, 2).unwrap();
        assert_eq!(b, LinComb::term(mono(&[(1, 1), (2, 1)]), Scalar::from_int(3)));
        let b = bell_polynomial(4, 2).unwrap();
        assert_eq!(b.coeff(&mono(&[(1, 1), (3, 1)])), Scalar::from_int(4));
        assert_eq!(b.coeff(&mono(&[(2, 2)])), Scalar::from_int(3));
        assert_eq!(b.len(), 2);
        assert!(bell_polynomial(3, 4).is_err());
        assert!(bell_polynomial(3, 0).is_err());
    }

    #[test]
    fn multinomial_matches_partition_count() {
        for n in 1..=7 {
            for m in 1..=n {
                assert_eq!(bell_polynomial(n, m).unwrap(), bell_polynomial_by_partitions(n, m).unwrap());
            }
        }
    }

    #[test]
    fn determinant_at_two() {
        let d = fdb_determinant(2).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(DerivMonomial::new(2, mono(&[(1, 2)])), Scalar::one());
        expect.add_term(DerivMonomial::new(1, mono(&[(2, 1)])), Scalar::one());
        assert_eq!(d, expect);
    }

    #[test]
    fn derivative_routes_agree() {
        for n in 1..=6 {
            let a = fdb_derivative(n).unwrap();
            assert_eq!(a, fdb_derivative_partitions(n).unwrap(), "n={n}");
            assert_eq!(a, fdb_determinant(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn rendering() {
        let d = fdb_derivative(3).unwrap();
        assert_eq!(d.to_string(), "f(1)*g(3) + 3*f(2)*g(1)*g(2) + f(3)*g(1)^3");
    }
}
