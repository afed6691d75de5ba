//! Truncated one-variable formal series and the Faà di Bruno composition.

mod bell;
mod matrix;

pub use bell::{
    bell_polynomial, bell_polynomial_by_partitions, fdb_derivative, fdb_derivative_partitions, fdb_determinant,
    DerivMonomial, Sym,
};
pub use matrix::{bell_matrix, bell_matrix_closed, BellMatrix};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{factorial_q, multinomial, multiplicities, partitions_with_parts};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// t + f_2 t^2 + ..., composed by substitution.
    Diffeo,
    /// 1 + f_1 t + ..., multiplied pointwise.
    Invertible,
}

impl SeriesKind {
    fn first_free(self) -> usize {
        match self {
            SeriesKind::Diffeo => 2,
            SeriesKind::Invertible => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SeriesKind::Diffeo => "diffeo",
            SeriesKind::Invertible => "invertible",
        }
    }
}

/// A series truncated at t^N; coefficients beyond N are not represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    kind: SeriesKind,
    // Dense coefficients c[0..=N], including the fixed leading ones.
    c: Vec<Scalar>,
}

impl TruncSeries {
    /// The identity series t (diffeo) or the constant 1 (invertible).
    pub fn unit(kind: SeriesKind, n: usize) -> Self {
        let mut c = vec![Scalar::zero(); n + 1];
        match kind {
            SeriesKind::Diffeo => {
                if n >= 1 {
                    c[1] = Scalar::one();
                }
            }
            SeriesKind::Invertible => c[0] = Scalar::one(),
        }
        TruncSeries { kind, c }
    }

    pub fn identity(n: usize) -> Self {
        Self::unit(SeriesKind::Diffeo, n)
    }

    /// Builds a series from its free coefficients (indices ≥ 2 for diffeo,
    /// ≥ 1 for invertible, all ≤ N).
    pub fn new(kind: SeriesKind, n: usize, coeffs: &BTreeMap<usize, Scalar>) -> Result<Self> {
        if n < 1 {
            return Err(Error::OutOfRange("truncation must be at least 1".into()));
        }
        let mut s = Self::unit(kind, n);
        for (&i, v) in coeffs {
            if i < kind.first_free() || i > n {
                return Err(Error::OutOfRange(format!(
                    "coefficient index {i} outside {}..={n} for a {} series",
                    kind.first_free(),
                    kind.name()
                )));
            }
            s.c[i] = v.clone();
        }
        Ok(s)
    }

    /// Diffeo series from the list (f_2, f_3, ..., f_N).
    pub fn diffeo(tail: &[Scalar]) -> Self {
        let n = tail.len() + 1;
        let mut s = Self::identity(n);
        for (k, v) in tail.iter().enumerate() {
            s.c[k + 2] = v.clone();
        }
        s
    }

    /// Invertible series from the list (f_1, ..., f_N).
    pub fn invertible(tail: &[Scalar]) -> Self {
        let n = tail.len().max(1);
        let mut s = Self::unit(SeriesKind::Invertible, n);
        for (k, v) in tail.iter().enumerate() {
            s.c[k + 1] = v.clone();
        }
        s
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn truncation(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn dense(&self) -> &[Scalar] {
        &self.c
    }

    /// Free coefficients with nonzero values.
    pub fn coeffs(&self) -> BTreeMap<usize, Scalar> {
        (self.kind.first_free()..self.c.len())
            .filter(|&i| !self.c[i].is_zero())
            .map(|i| (i, self.c[i].clone()))
            .collect()
    }

    /// Same series cut down to a smaller truncation.
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.truncation());
        TruncSeries { kind: self.kind, c: self.c[..=n].to_vec() }
    }

    fn expect(&self, kind: SeriesKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch { expected: kind.name() });
        }
        Ok(())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(N={}) {:?}", self.kind.name(), self.truncation(), self.c)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() { -c } else { c.clone() };
            match (out.is_empty(), c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            out.push_str(&match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => var,
                _ => format!("{mag}*{var}"),
            });
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} + O(t^{})", self.truncation() + 1)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesRepr {
    kind: SeriesKind,
    truncation: usize,
    coeffs: BTreeMap<usize, Scalar>,
}

// Every free coefficient is written, zeros included, so the truncation is
// visible from the coefficient map alone.
impl Serialize for TruncSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = (self.kind.first_free()..self.c.len()).map(|i| (i, self.c[i].clone())).collect();
        SeriesRepr { kind: self.kind, truncation: self.truncation(), coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SeriesRepr::deserialize(d)?;
        TruncSeries::new(r.kind, r.truncation, &r.coeffs).map_err(serde::de::Error::custom)
    }
}

/// Dense truncated product of coefficient vectors.
pub(crate) fn poly_mul(a: &[Scalar], b: &[Scalar], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Inverse of a dense series with nonzero constant term, truncated at n.
pub(crate) fn poly_recip(a: &[Scalar], n: usize) -> Result<Vec<Scalar>> {
    let a0 = a.first().cloned().unwrap_or_default();
    let inv0 = a0.recip()?;
    let mut out = vec![Scalar::zero(); n + 1];
    out[0] = inv0.clone();
    for k in 1..=n {
        let mut s = Scalar::zero();
        for j in 1..=k.min(a.len() - 1) {
            s += &a[j] * &out[k - j];
        }
        out[k] = -(s * &inv0);
    }
    Ok(out)
}

fn same_truncation(f: &TruncSeries, g: &TruncSeries) -> Result<usize> {
    if f.truncation() != g.truncation() {
        return Err(Error::TruncationMismatch { left: f.truncation(), right: g.truncation() });
    }
    Ok(f.truncation())
}

/// f∘g through the coefficient formula
/// (f∘g)_n = Σ_m Σ_{Σk_i = m, Σ i k_i = n} m!/(Πk_i!) f_m Π g_i^{k_i}.
pub fn compose(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    f.expect(SeriesKind::Diffeo)?;
    g.expect(SeriesKind::Diffeo)?;
    let n = same_truncation(f, g)?;
    let mut out = TruncSeries::identity(n);
    for deg in 2..=n {
        let mut acc = Scalar::zero();
        for m in 1..=deg {
            let fm = f.coeff(m);
            if fm.is_zero() {
                continue;
            }
            for parts in partitions_with_parts(deg, m) {
                let k = multiplicities(&parts, deg);
                let mut term = Scalar::from_bigint(multinomial(&k));
                for (i, &ki) in k.iter().enumerate().skip(1) {
                    if ki > 0 {
                        term *= &g.coeff(i).pow(ki as u32);
                    }
                }
                acc += term * &fm;
            }
        }
        out.c[deg] = acc;
    }
    Ok(out)
}

/// f∘g by expanding Σ_m f_m g(t)^m directly.
pub fn compose_by_substitution(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    f.expect(SeriesKind::Diffeo)?;
    g.expect(SeriesKind::Diffeo)?;
    let n = same_truncation(f, g)?;
    let mut acc = vec![Scalar::zero(); n + 1];
    let mut power = g.c.clone();
    for m in 1..=n {
        let fm = f.coeff(m);
        if !fm.is_zero() {
            for (a, p) in acc.iter_mut().zip(&power) {
                *a += p * &fm;
            }
        }
        power = poly_mul(&power, &g.c, n);
    }
    Ok(TruncSeries { kind: SeriesKind::Diffeo, c: acc })
}

/// Compositional inverse by Lagrange inversion: g_n = (1/n)[t^{n-1}](t/f)^n.
pub fn compositional_inverse(f: &TruncSeries) -> Result<TruncSeries> {
    f.expect(SeriesKind::Diffeo)?;
    let n = f.truncation();
    // f(t)/t = 1 + f_2 t + ... up to t^{N-1}
    let quotient: Vec<Scalar> = f.c[1..].to_vec();
    let t_over_f = poly_recip(&quotient, n - 1)?;
    let mut out = TruncSeries::identity(n);
    let mut power = t_over_f.clone();
    for k in 2..=n {
        power = poly_mul(&power, &t_over_f, n - 1);
        out.c[k] = power[k - 1].div_int(k as i64);
    }
    Ok(out)
}

/// Compositional inverse by solving compose(f, g) = t degree by degree.
pub fn compositional_inverse_backsub(f: &TruncSeries) -> Result<TruncSeries> {
    f.expect(SeriesKind::Diffeo)?;
    let n = f.truncation();
    let mut g = TruncSeries::identity(n);
    for k in 2..=n {
        // (f∘g)_k = g_k + terms in g_2..g_{k-1}; with g_k = 0 the remainder is what must cancel.
        let h = compose_by_substitution(&f.truncate(k), &g.truncate(k))?;
        g.c[k] = -h.coeff(k);
    }
    Ok(g)
}

/// Pointwise product of invertible series.
pub fn multiply(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    f.expect(SeriesKind::Invertible)?;
    g.expect(SeriesKind::Invertible)?;
    let n = same_truncation(f, g)?;
    Ok(TruncSeries { kind: SeriesKind::Invertible, c: poly_mul(&f.c, &g.c, n) })
}

/// Inverse for the pointwise product.
pub fn multiplicative_inverse(f: &TruncSeries) -> Result<TruncSeries> {
    f.expect(SeriesKind::Invertible)?;
    let n = f.truncation();
    Ok(TruncSeries { kind: SeriesKind::Invertible, c: poly_recip(&f.c, n)? })
}

/// Coefficients g_1..g_N of the compositional inverse of t·e^t.
pub fn lambert_w_coefficients(n: usize) -> Result<Vec<Scalar>> {
    if n < 1 {
        return Err(Error::OutOfRange("need at least one coefficient".into()));
    }
    let tail: Vec<Scalar> = (2..=n).map(|k| factorial_q(k - 1).recip()).collect::<Result<_>>()?;
    let f = if n == 1 { TruncSeries::identity(1) } else { TruncSeries::diffeo(&tail) };
    let g = compositional_inverse(&f)?;
    Ok(g.dense()[1..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn diffeo(v: &[&str]) -> TruncSeries {
        TruncSeries::diffeo(&v.iter().map(|s| q(s)).collect::<Vec<_>>())
    }

    #[test]
    fn compose_t_plus_t2_with_itself() {
        let f = diffeo(&["1", "0", "0"]);
        let h = compose(&f, &f).unwrap();
        assert_eq!(h.dense(), &[q("0"), q("1"), q("2"), q("2"), q("1")]);
        assert_eq!(h, compose_by_substitution(&f, &f).unwrap());
    }

    #[test]
    fn identity_is_neutral() {
        let f = diffeo(&["1/2", "-3", "7/5", "2"]);
        let id = TruncSeries::identity(5);
        assert_eq!(compose(&f, &id).unwrap(), f);
        assert_eq!(compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn inverse_of_t_plus_t2_is_signed_catalan() {
        let f = diffeo(&["1", "0", "0"]);
        let g = compositional_inverse(&f).unwrap();
        assert_eq!(g.dense(), &[q("0"), q("1"), q("-1"), q("2"), q("-5")]);
        assert_eq!(g, compositional_inverse_backsub(&f).unwrap());
    }

    #[test]
    fn lambert_first_terms() {
        let w = lambert_w_coefficients(4).unwrap();
        assert_eq!(w, vec![q("1"), q("-1"), q("3/2"), q("-8/3")]);
    }

    #[test]
    fn geometric_inverse() {
        let f = TruncSeries::invertible(&[q("1"), q("0"), q("0"), q("0"), q("0"), q("0")]);
        let g = multiplicative_inverse(&f).unwrap();
        assert_eq!(g.dense(), &[q("1"), q("-1"), q("1"), q("-1"), q("1"), q("-1"), q("1")]);
        let one = multiply(&f, &g).unwrap();
        assert_eq!(one, TruncSeries::unit(SeriesKind::Invertible, 6));
    }

    #[test]
    fn mismatched_truncations_are_rejected() {
        let f = diffeo(&["1"]);
        let g = diffeo(&["1", "1"]);
        assert!(matches!(compose(&f, &g), Err(Error::TruncationMismatch { .. })));
    }

    #[test]
    fn out_of_range_coefficients_are_rejected() {
        let mut m = BTreeMap::new();
        m.insert(1, q("2"));
        assert!(TruncSeries::new(SeriesKind::Diffeo, 4, &m).is_err());
        m.clear();
        m.insert(5, q("2"));
        assert!(TruncSeries::new(SeriesKind::Diffeo, 4, &m).is_err());
    }

    #[test]
    fn json_round_trip() {
        let j = r#"{"kind":"diffeo","truncation":4,"coeffs":{"2":"1","3":"0"}}"#;
        let f: TruncSeries = serde_json::from_str(j).unwrap();
        assert_eq!(f, TruncSeries::diffeo(&[q("1"), q("0"), q("0")]));
        let out = serde_json::to_string(&f).unwrap();
        assert_eq!(out, r#"{"kind":"diffeo","truncation":4,"coeffs":{"2":"1","3":"0","4":"0"}}"#);
        assert!(serde_json::from_str::<TruncSeries>(r#"{"kind":"diffeo","truncation":3,"coeffs":{"1":"2"}}"#).is_err());
        assert!(serde_json::from_str::<TruncSeries>(r#"{"kind":"diffeo","truncation":3,"coeffs":{"5":"2"}}"#).is_err());
    }
}
