//! Non-commutative lifts of H_inv and H_FdB on words, the shuffle algebra,
//! the free-product cogroup, and composition of series with non-commuting
//! coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::{CommMonomial, Graded, MulBasis, Word};
use crate::combinat::{binomial_q, compositions, weak_compositions};
use crate::error::{Error, Result};
use crate::hopf::GradedHopf;
use crate::lincomb::{LinComb, Tensor2};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NcKind {
    #[serde(rename = "invnc")]
    InvNc,
    #[serde(rename = "fdbnc")]
    FdbNc,
}

/// x_n as a word, with x_0 the empty word.
fn w(n: usize) -> Word {
    if n == 0 {
        Word::empty()
    } else {
        Word::letter(n)
    }
}

/// Δ on the generator x_n.
///
/// inv_nc: Σ_p x_p ⊗ x_{n-p}. fdb_nc: Σ_m (Σ_{k_0+⋯+k_m = n-m} x_{k_0}⋯x_{k_m}) ⊗ x_m.
pub fn generator_coproduct_nc(kind: NcKind, n: usize) -> Tensor2<Word> {
    let mut out = Tensor2::zero();
    if n == 0 {
        out.add_term((Word::empty(), Word::empty()), Scalar::one());
        return out;
    }
    match kind {
        NcKind::InvNc => {
            for p in 0..=n {
                out.add_term((w(p), w(n - p)), Scalar::one());
            }
        }
        NcKind::FdbNc => {
            for m in 0..=n {
                for ks in weak_compositions(n - m, m + 1) {
                    let left = Word(ks.into_iter().filter(|&k| k > 0).collect());
                    out.add_term((left, w(m)), Scalar::one());
                }
            }
        }
    }
    out
}

/// All words of degree n (one per composition of n).
pub fn words_of_degree(n: usize) -> Vec<Word> {
    compositions(n).into_iter().map(Word).collect()
}

/// A non-commutative Hopf algebra on words with generator data tabulated
/// up to a degree bound.
#[derive(Debug, Clone)]
pub struct NcHopf {
    kind: NcKind,
    bound: usize,
    delta: Vec<Tensor2<Word>>,
    s: Vec<LinComb<Word>>,
}

impl NcHopf {
    pub fn new(kind: NcKind, bound: usize) -> Self {
        let delta: Vec<_> = (0..=bound).map(|n| generator_coproduct_nc(kind, n)).collect();
        let mut h = NcHopf { kind, bound, delta, s: vec![LinComb::one()] };
        for n in 1..=bound {
            // Σ S(a) b = 0 over Δ(x_n); the x_n ⊗ 1 term isolates S(x_n).
            let mut acc = LinComb::zero();
            for ((a, b), c) in h.delta[n].iter() {
                if b.is_empty() && a.degree() == n {
                    continue;
                }
                let sa = h.antipode_word(a);
                acc.add_scaled(&sa.mul(&LinComb::basis(b.clone())), &-c);
            }
            h.s.push(acc);
        }
        h
    }

    pub fn kind(&self) -> NcKind {
        self.kind
    }

    fn check(&self, word: &Word) {
        let top = word.letters().iter().copied().max().unwrap_or(0);
        assert!(top <= self.bound, "letter x_{top} beyond tabulated bound {}", self.bound);
    }

    pub fn coproduct_word(&self, word: &Word) -> Tensor2<Word> {
        self.check(word);
        let mut acc = Tensor2::one();
        for &n in word.letters() {
            acc = acc.mul(&self.delta[n]);
        }
        acc
    }

    /// S on a word, extended as an antimorphism: S(uv) = S(v)S(u).
    pub fn antipode_word(&self, word: &Word) -> LinComb<Word> {
        self.check(word);
        let mut acc = LinComb::one();
        for &n in word.letters().iter().rev() {
            acc = acc.mul(&self.s[n]);
        }
        acc
    }

    /// S(x_n) from the other recursion, Σ a S(b) = 0.
    pub fn right_antipode_generator(&self, n: usize) -> LinComb<Word> {
        let mut acc = LinComb::zero();
        for ((a, b), c) in self.delta[n].iter() {
            if a.is_empty() {
                continue;
            }
            let sb = self.antipode_word(b);
            acc.add_scaled(&LinComb::basis(a.clone()).mul(&sb), &-c);
        }
        acc
    }
}

impl GradedHopf for NcHopf {
    type B = Word;

    fn name(&self) -> String {
        match self.kind {
            NcKind::InvNc => "H_inv^nc".into(),
            NcKind::FdbNc => "H_FdB^nc".into(),
        }
    }

    fn basis(&self, degree: usize) -> Vec<Word> {
        words_of_degree(degree)
    }

    fn coproduct_basis(&self, b: &Word) -> Tensor2<Word> {
        self.coproduct_word(b)
    }

    fn antipode_basis(&self, b: &Word) -> LinComb<Word> {
        self.antipode_word(b)
    }
}

pub fn coproduct_nc(word: &Word, kind: NcKind) -> Tensor2<Word> {
    let top = word.letters().iter().copied().max().unwrap_or(0);
    NcHopf::new(kind, top).coproduct_word(word)
}

/// S by the graded recursion.
pub fn antipode_nc_recursive(word: &Word, kind: NcKind) -> LinComb<Word> {
    let top = word.letters().iter().copied().max().unwrap_or(0);
    NcHopf::new(kind, top).antipode_word(word)
}

/// λ(n_1, …, n_k) = Σ C(n_1+1, m_1)⋯C(n_k+1, m_k) over m_i ≥ 0 with
/// m_1 + ⋯ + m_k = k and m_1 + ⋯ + m_h ≥ h for h < k.
pub fn lagrange_lambda(ns: &[usize]) -> Scalar {
    fn go(ns: &[usize], h: usize, partial: usize, acc: Scalar, out: &mut Scalar) {
        let k = ns.len();
        if h == k {
            if partial == k {
                *out += acc;
            }
            return;
        }
        for m in 0..=(ns[h] + 1).min(k - partial) {
            let p = partial + m;
            if h + 1 < k && p < h + 1 {
                continue;
            }
            go(ns, h + 1, p, &acc * &binomial_q(ns[h] + 1, m), out);
        }
    }
    let mut out = Scalar::zero();
    go(ns, 0, 0, Scalar::one(), &mut out);
    out
}

/// S(x_n) in H_FdB^nc from the closed formula: the word x_{n_1}⋯x_{n_{k+1}}
/// has coefficient (−1)^{k+1} λ(n_{k+1}, …, n_2).
pub fn antipode_nc_closed(n: usize) -> Result<LinComb<Word>> {
    if n < 1 {
        return Err(Error::OutOfRange("antipode_nc_closed needs n ≥ 1".into()));
    }
    let mut out = LinComb::zero();
    for comp in compositions(n) {
        let k = comp.len() - 1;
        let sign = if k % 2 == 0 { -1 } else { 1 };
        let tail: Vec<usize> = comp[1..].iter().rev().copied().collect();
        let c = lagrange_lambda(&tail) * Scalar::from_int(sign);
        out.add_term(Word(comp), c);
    }
    Ok(out)
}

/// Sorts the letters of every word.
pub fn abelianize(e: &LinComb<Word>) -> LinComb<CommMonomial> {
    e.map_basis(|w| w.abelianize())
}

pub fn abelianize_tensor(t: &Tensor2<Word>) -> Tensor2<CommMonomial> {
    t.map_basis(|(a, b)| (a.abelianize(), b.abelianize()))
}

/// u ⧢ v, the sum over all interleavings.
pub fn shuffle(u: &Word, v: &Word) -> LinComb<Word> {
    fn go(u: &[usize], v: &[usize], cur: &mut Vec<usize>, out: &mut LinComb<Word>) {
        if u.is_empty() && v.is_empty() {
            out.add_term(Word(cur.clone()), Scalar::one());
            return;
        }
        if let Some((&a, rest)) = u.split_first() {
            cur.push(a);
            go(rest, v, cur, out);
            cur.pop();
        }
        if let Some((&b, rest)) = v.split_first() {
            cur.push(b);
            go(u, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = LinComb::zero();
    go(u.letters(), v.letters(), &mut Vec::new(), &mut out);
    out
}

pub fn shuffle_lin(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            out.add_scaled(&shuffle(u, v), &(x * y));
        }
    }
    out
}

/// Deconcatenation: Σ over split points of prefix ⊗ suffix.
pub fn deconcat(word: &Word) -> Tensor2<Word> {
    let l = word.letters();
    (0..=l.len()).map(|i| ((Word(l[..i].to_vec()), Word(l[i..].to_vec())), Scalar::one())).collect()
}

/// Unshuffle: Σ over subsets of positions of (chosen letters) ⊗ (the rest),
/// the coproduct making every letter primitive.
pub fn unshuffle(word: &Word) -> Tensor2<Word> {
    let l = word.letters();
    assert!(l.len() < 32, "word too long to unshuffle");
    let mut out = Tensor2::zero();
    for mask in 0u32..(1 << l.len()) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &x) in l.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(x);
            } else {
                b.push(x);
            }
        }
        out.add_term((Word(a), Word(b)), Scalar::one());
    }
    out
}

/// Word over several copies of the generator alphabet; letter (k, n) is x_n
/// in copy k. Copies 0 and 1 are the x and y of a free product H ⋆ H.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TaggedWord(pub Vec<(u8, usize)>);

impl TaggedWord {
    pub fn empty() -> Self {
        TaggedWord(Vec::new())
    }

    pub fn letter(tag: u8, n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            TaggedWord(vec![(tag, n)])
        }
    }
}

impl MulBasis for TaggedWord {
    fn unit() -> Self {
        TaggedWord::empty()
    }
    fn mul(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        TaggedWord(v)
    }
}

impl Graded for TaggedWord {
    fn degree(&self) -> usize {
        self.0.iter().map(|(_, n)| n).sum()
    }
}

const TAG_NAMES: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for TaggedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (t, n) in &self.0 {
            let name = TAG_NAMES.get(*t as usize).copied().unwrap_or("w");
            write!(f, "{name}{n}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TaggedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TaggedWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(&str, usize)> =
            self.0.iter().map(|(t, n)| (TAG_NAMES.get(*t as usize).copied().unwrap_or("w"), *n)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TaggedWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<(String, usize)>::deserialize(d)?;
        let mut out = Vec::new();
        for (name, n) in v {
            let tag = TAG_NAMES
                .iter()
                .position(|t| *t == name)
                .ok_or_else(|| serde::de::Error::custom(format!("unknown letter {name:?}")))?;
            if n == 0 {
                return Err(serde::de::Error::custom("letters are indexed from 1"));
            }
            out.push((tag as u8, n));
        }
        Ok(TaggedWord(out))
    }
}

/// Element of H_inv^nc ⋆ H_inv^nc.
pub type FreeProductElement = LinComb<TaggedWord>;

fn cogroup_generator(n: usize, left: u8, right: u8) -> FreeProductElement {
    (0..=n).map(|p| (TaggedWord::letter(left, p).mul(&TaggedWord::letter(right, n - p)), Scalar::one())).collect()
}

/// Δ*(x_n) = Σ_p x_p y_{n−p}, extended as an algebra morphism to words.
pub fn cogroup_coproduct_inv(word: &Word) -> FreeProductElement {
    let mut acc = FreeProductElement::one();
    for &n in word.letters() {
        acc = acc.mul(&cogroup_generator(n, 0, 1));
    }
    acc
}

/// π: moves the x-letters (order kept) to the left factor and the y-letters
/// to the right factor.
pub fn star_project(e: &FreeProductElement) -> Tensor2<Word> {
    e.map_basis(|tw| {
        let xs = tw.0.iter().filter(|(t, _)| *t == 0).map(|(_, n)| *n).collect();
        let ys = tw.0.iter().filter(|(t, _)| *t == 1).map(|(_, n)| *n).collect();
        (Word(xs), Word(ys))
    })
}

/// Applies a per-letter substitution to tagged words, as an algebra morphism.
pub fn substitute(e: &LinComb<TaggedWord>, f: impl Fn(u8, usize) -> LinComb<TaggedWord>) -> LinComb<TaggedWord> {
    e.flat_map(|tw| {
        let mut acc = LinComb::one();
        for &(t, n) in &tw.0 {
            acc = acc.mul(&f(t, n));
        }
        acc
    })
}

/// Both sides of cogroup coassociativity (Δ* ⋆ id)Δ* = (id ⋆ Δ*)Δ* on a
/// word, with the three copies tagged 0, 1, 2.
pub fn cogroup_coassociativity_sides(word: &Word) -> (LinComb<TaggedWord>, LinComb<TaggedWord>) {
    let d = cogroup_coproduct_inv(word);
    let lhs = substitute(&d, |t, n| match t {
        0 => cogroup_generator(n, 0, 1),
        _ => LinComb::basis(TaggedWord::letter(2, n)),
    });
    let rhs = substitute(&d, |t, n| match t {
        0 => LinComb::basis(TaggedWord::letter(0, n)),
        _ => cogroup_generator(n, 1, 2),
    });
    (lhs, rhs)
}

/// The cogroup antipode: the algebra morphism with S(x_n) = −Σ_{p<n} S(x_p) x_{n−p}.
#[derive(Debug, Clone)]
pub struct CogroupAntipode {
    s: Vec<LinComb<Word>>,
}

impl CogroupAntipode {
    pub fn new(bound: usize) -> Self {
        let mut s: Vec<LinComb<Word>> = vec![LinComb::one()];
        for n in 1..=bound {
            let mut acc = LinComb::zero();
            for (p, sp) in s.iter().enumerate() {
                acc -= &sp.mul(&LinComb::basis(w(n - p)));
            }
            s.push(acc);
        }
        CogroupAntipode { s }
    }

    pub fn generator(&self, n: usize) -> &LinComb<Word> {
        &self.s[n]
    }

    /// S on words, as a morphism: S(uv) = S(u)S(v).
    pub fn apply(&self, word: &Word) -> LinComb<Word> {
        let mut acc = LinComb::one();
        for &n in word.letters() {
            acc = acc.mul(&self.s[n]);
        }
        acc
    }

    /// ∇(S ⋆ id)(e): S on the x-letters, identity on the y-letters, each
    /// letter kept in place.
    pub fn fold_left(&self, e: &FreeProductElement) -> LinComb<Word> {
        e.flat_map(|tw| {
            let mut acc = LinComb::one();
            for &(t, n) in &tw.0 {
                let f = if t == 0 { self.s[n].clone() } else { LinComb::basis(w(n)) };
                acc = acc.mul(&f);
            }
            acc
        })
    }

    /// m(S ⊗ id)π(e).
    pub fn project_left(&self, e: &FreeProductElement) -> LinComb<Word> {
        star_project(e).flat_map(|(a, b)| self.apply(a).mul(&LinComb::basis(b.clone())))
    }
}

pub mod nc_series {
    //! Series t + Σ_{n≥2} f_n t^n whose coefficients are free non-commuting
    //! symbols, composed by (f∘g)(t) = Σ_m f_m g(t)^m with f_m kept on the
    //! left and t central.

    use super::TaggedWord;
    use crate::lincomb::LinComb;

    /// Polynomial in non-commuting symbols; letter (k, n) is coefficient n of series k.
    pub type NcPoly = LinComb<TaggedWord>;

    /// Dense coefficients c[0..=N] of a series over NcPoly.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct NcSeries(pub Vec<NcPoly>);

    impl NcSeries {
        /// The generic series with symbolic coefficients (id, n), n ≥ 2.
        pub fn generic(id: u8, n: usize) -> Self {
            let mut c = vec![NcPoly::zero(); n + 1];
            if n >= 1 {
                c[1] = NcPoly::one();
            }
            for (k, ck) in c.iter_mut().enumerate().skip(2) {
                *ck = NcPoly::basis(TaggedWord::letter(id, k));
            }
            NcSeries(c)
        }

        pub fn truncation(&self) -> usize {
            self.0.len() - 1
        }

        fn mul(&self, other: &NcSeries) -> NcSeries {
            let n = self.truncation();
            let mut out = vec![NcPoly::zero(); n + 1];
            for i in 0..=n {
                if self.0[i].is_zero() {
                    continue;
                }
                for j in 0..=n - i {
                    out[i + j] += &self.0[i].mul(&other.0[j]);
                }
            }
            NcSeries(out)
        }

        /// Σ_m f_m g^m, truncated.
        pub fn compose(&self, g: &NcSeries) -> NcSeries {
            let n = self.truncation();
            let mut out = vec![NcPoly::zero(); n + 1];
            let mut power = g.clone();
            for m in 1..=n {
                for (k, slot) in out.iter_mut().enumerate() {
                    if !power.0[k].is_zero() {
                        *slot += &self.0[m].mul(&power.0[k]);
                    }
                }
                power = power.mul(g);
            }
            NcSeries(out)
        }
    }

    /// A coefficient where (f∘g)∘h and f∘(g∘h) differ.
    #[derive(Debug, Clone)]
    pub struct Counterexample {
        pub degree: usize,
        pub left: NcPoly,
        pub right: NcPoly,
    }

    impl Counterexample {
        pub fn difference(&self) -> NcPoly {
            &self.left - &self.right
        }
    }

    /// Searches degrees 2..=max_degree for the first coefficient where
    /// composition of three generic series fails to associate.
    pub fn find_nonassociativity(max_degree: usize) -> Option<Counterexample> {
        let (f, g, h) =
            (NcSeries::generic(0, max_degree), NcSeries::generic(1, max_degree), NcSeries::generic(2, max_degree));
        let left = f.compose(&g).compose(&h);
        let right = f.compose(&g.compose(&h));
        (2..=max_degree).find(|&d| left.0[d] != right.0[d]).map(|d| Counterexample {
            degree: d,
            left: left.0[d].clone(),
            right: right.0[d].clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_antipode, check_coassociative, check_cocommutative};
    use crate::lincomb::tensor;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn word(v: &[usize]) -> LinComb<Word> {
        LinComb::basis(Word(v.to_vec()))
    }

    #[test]
    fn coproduct_examples() {
        let d2 = generator_coproduct_nc(NcKind::FdbNc, 2);
        let expect = tensor(&word(&[2]), &word(&[]))
            + tensor(&word(&[1]), &word(&[1])).scale(&q("2"))
            + tensor(&word(&[]), &word(&[2]));
        assert_eq!(d2, expect);
        let d4 = generator_coproduct_nc(NcKind::FdbNc, 4);
        let slice = d4.filter(|(_, b)| *b == Word::letter(1));
        let expect = tensor(&(word(&[3]).scale(&q("2")) + word(&[1, 2]) + word(&[2, 1])), &word(&[1]));
        assert_eq!(slice, expect);
        let d3 = generator_coproduct_nc(NcKind::InvNc, 3);
        assert_eq!(d3.len(), 4);
    }

    #[test]
    fn antipode_examples() {
        let h = NcHopf::new(NcKind::FdbNc, 3);
        assert_eq!(h.antipode_word(&Word::letter(1)), word(&[1]).scale(&q("-1")));
        assert_eq!(h.antipode_word(&Word::letter(2)), word(&[2]).scale(&q("-1")) + word(&[1, 1]).scale(&q("2")));
        let s3 = word(&[3]).scale(&q("-1"))
            + word(&[1, 2]).scale(&q("3"))
            + word(&[2, 1]).scale(&q("2"))
            + word(&[1, 1, 1]).scale(&q("-5"));
        assert_eq!(h.antipode_word(&Word::letter(3)), s3);
        assert_eq!(h.right_antipode_generator(3), s3);
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lagrange_lambda(&[1]), q("2"));
        assert_eq!(lagrange_lambda(&[2]), q("3"));
        assert_eq!(lagrange_lambda(&[1, 1]), q("5"));
        assert_eq!(lagrange_lambda(&[]), q("1"));
    }

    #[test]
    fn closed_form_matches_recursion() {
        let h = NcHopf::new(NcKind::FdbNc, 6);
        for n in 1..=6 {
            assert_eq!(antipode_nc_closed(n).unwrap(), h.antipode_word(&Word::letter(n)), "n={n}");
        }
    }

    #[test]
    fn abelianization() {
        let e = word(&[2, 1]) + word(&[1, 2]);
        assert_eq!(abelianize(&e), LinComb::term(CommMonomial::from_pairs([(1, 1), (2, 1)]), q("2")));
        let s3 = abelianize(&antipode_nc_closed(3).unwrap());
        let expect = LinComb::term(CommMonomial::gen(3), q("-1"))
            + LinComb::term(CommMonomial::from_pairs([(1, 1), (2, 1)]), q("5"))
            + LinComb::term(CommMonomial::power(1, 3), q("-5"));
        assert_eq!(s3, expect);
        assert_eq!(abelianize(&LinComb::one()), LinComb::one());
    }

    #[test]
    fn axioms() {
        for kind in [NcKind::InvNc, NcKind::FdbNc] {
            let h = NcHopf::new(kind, 5);
            check_coassociative(&h, 5).unwrap();
            check_antipode(&h, 5).unwrap();
        }
        assert!(check_cocommutative(&NcHopf::new(NcKind::InvNc, 5), 5).is_ok());
        assert!(check_cocommutative(&NcHopf::new(NcKind::FdbNc, 4), 4).is_err());
    }

    #[test]
    fn shuffle_examples() {
        let s = shuffle(&Word(vec![1]), &Word(vec![2]));
        assert_eq!(s, word(&[1, 2]) + word(&[2, 1]));
        let s = shuffle(&Word(vec![1]), &Word(vec![1, 2]));
        assert_eq!(s, word(&[1, 1, 2]).scale(&q("2")) + word(&[1, 2, 1]));
        let d = deconcat(&Word(vec![1, 2]));
        assert_eq!(
            d,
            tensor(&word(&[1, 2]), &word(&[])) + tensor(&word(&[1]), &word(&[2])) + tensor(&word(&[]), &word(&[1, 2]))
        );
    }

    #[test]
    fn cogroup_examples() {
        let d = cogroup_coproduct_inv(&Word::letter(2));
        let expect: FreeProductElement = [
            (TaggedWord(vec![(1, 2)]), Scalar::one()),
            (TaggedWord(vec![(0, 1), (1, 1)]), Scalar::one()),
            (TaggedWord(vec![(0, 2)]), Scalar::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expect);
        let p = star_project(&FreeProductElement::basis(TaggedWord(vec![(0, 1), (1, 1)])));
        assert_eq!(p, tensor(&word(&[1]), &word(&[1])));
        assert_eq!(star_project(&d), generator_coproduct_nc(NcKind::InvNc, 2));
        let (l, r) = cogroup_coassociativity_sides(&Word(vec![2, 1]));
        assert_eq!(l, r);
    }

    #[test]
    fn cogroup_antipode_on_words() {
        let s = CogroupAntipode::new(4);
        for wd in words_of_degree(4) {
            let d = cogroup_coproduct_inv(&wd);
            assert!(s.fold_left(&d).is_zero(), "{wd:?}");
        }
        for n in 1..=4 {
            let d = cogroup_coproduct_inv(&Word::letter(n));
            assert!(s.project_left(&d).is_zero());
        }
    }

    #[test]
    fn naive_nc_composition_fails_to_associate() {
        assert!(nc_series::find_nonassociativity(3).is_none());
        let c = nc_series::find_nonassociativity(4).expect("counterexample at degree 4");
        assert_eq!(c.degree, 4);
    }
}
