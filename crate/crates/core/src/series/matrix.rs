use std::fmt;

use serde::Serialize;

use super::{poly_mul, SeriesKind, TruncSeries};
use crate::combinat::factorial_q;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::bell::bell_polynomial;

/// The N×N upper-triangular matrix of a diffeo series, rows and columns
/// indexed 1..=N, with M_{ij} = [t^j] g(t)^i.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct BellMatrix {
    entries: Vec<Vec<Scalar>>,
}

impl BellMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry (i, j) with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries[i - 1][j - 1].clone()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Scalar::one();
        }
        BellMatrix { entries }
    }

    pub fn mul(&self, other: &BellMatrix) -> Result<BellMatrix> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::TruncationMismatch { left: n, right: other.size() });
        }
        let mut entries = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = Scalar::zero();
                for k in 0..n {
                    let a = &self.entries[i][k];
                    if !a.is_zero() {
                        acc += a * &other.entries[k][j];
                    }
                }
                *cell = acc;
            }
        }
        Ok(BellMatrix { entries })
    }
}

impl fmt::Debug for BellMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BellMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn check(g: &TruncSeries, n: usize) -> Result<()> {
    if g.kind() != SeriesKind::Diffeo {
        return Err(Error::KindMismatch { expected: "diffeo" });
    }
    if n > g.truncation() {
        return Err(Error::DegreeOverflow { degree: n, bound: g.truncation() });
    }
    Ok(())
}

/// Matrix of powers: row i holds the coefficients of g(t)^i.
pub fn bell_matrix(g: &TruncSeries, n: usize) -> Result<BellMatrix> {
    check(g, n)?;
    let gd = g.truncate(n);
    let base = gd.dense().to_vec();
    let mut power = base.clone();
    let mut entries = Vec::with_capacity(n);
    for _ in 1..=n {
        entries.push(power[1..=n].to_vec());
        power = poly_mul(&power, &base, n);
    }
    Ok(BellMatrix { entries })
}

/// The same matrix from Bell polynomials:
/// M_{ij} = (i!/j!) B_{j,i}(1!g_1, 2!g_2, ...) for j ≥ i.
pub fn bell_matrix_closed(g: &TruncSeries, n: usize) -> Result<BellMatrix> {
    check(g, n)?;
    let args: Vec<Scalar> = (0..=n).map(|k| factorial_q(k) * g.coeff(k)).collect();
    let mut entries = vec![vec![Scalar::zero(); n]; n];
    for i in 1..=n {
        for j in i..=n {
            let b = bell_polynomial(j, i)?;
            let val = b.eval(|mono| mono.iter().map(|(k, e)| args[*k].pow(e)).product());
            entries[i - 1][j - 1] = val * factorial_q(i) * factorial_q(j).recip()?;
        }
    }
    Ok(BellMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::compose;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn t_plus_t2() {
        let g = TruncSeries::diffeo(&[q("1"), q("0"), q("0")]);
        let m = bell_matrix(&g, 4).unwrap();
        assert_eq!(m.rows()[0], vec![q("1"), q("1"), q("0"), q("0")]);
        assert_eq!(m.get(2, 3), q("2"));
        assert_eq!(m, bell_matrix_closed(&g, 4).unwrap());
    }

    #[test]
    fn identity_series_gives_identity() {
        let g = TruncSeries::identity(5);
        assert_eq!(bell_matrix(&g, 5).unwrap(), BellMatrix::identity(5));
    }

    #[test]
    fn representation_order() {
        let f = TruncSeries::diffeo(&[q("2"), q("-1/3"), q("5")]);
        let g = TruncSeries::diffeo(&[q("1/2"), q("7"), q("-1")]);
        let fg = compose(&f, &g).unwrap();
        let lhs = bell_matrix(&fg, 4).unwrap();
        let rhs = bell_matrix(&f, 4).unwrap().mul(&bell_matrix(&g, 4).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn size_beyond_truncation_is_rejected() {
        let g = TruncSeries::identity(3);
        assert!(bell_matrix(&g, 4).is_err());
    }
}
