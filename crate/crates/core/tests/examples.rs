//! Worked examples with known values, one test per module.

use std::collections::BTreeMap;

use fdb_core::fdb_hopf::{exp_char, generator_coproduct, log_char, Character, HopfKind, InfChar, PolyHopf};
use fdb_core::incidence::{
    boolean_lattice, forest_ideals, incidence_coproduct, partition_lattice, FamilyKind, IncidenceHopf, Poset,
};
use fdb_core::lie_brace::{brace_product, pairing, symmetric_brace, witt_bracket, L1Element};
use fdb_core::lincomb::tensor;
use fdb_core::nc_hopf::{
    abelianize, antipode_nc_closed, cogroup_coproduct_inv, generator_coproduct_nc, lagrange_lambda, shuffle,
    star_project, NcHopf, NcKind, TaggedWord,
};
use fdb_core::operads::{
    alpha_series, operadic_bracket, operadic_prelie, order_project, section_embed, Assoc, AssocOp, Dup, OperadSeries,
    PlanarBinaryTree, TreeSeries,
};
use fdb_core::series::{
    bell_matrix, bell_polynomial, compose, compositional_inverse, fdb_derivative, fdb_determinant,
    multiplicative_inverse, DerivMonomial,
};
use fdb_core::trees_hopf::{coproduct_rt, graft, phi, Forest, PsiContext, RootedTree};
use fdb_core::{functional_eval, CommMonomial, LinComb, Scalar, SeriesKind, TruncSeries, Word};

fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

fn x(n: usize) -> LinComb<CommMonomial> {
    LinComb::basis(CommMonomial::gen(n))
}

fn mono(pairs: &[(usize, u32)]) -> CommMonomial {
    pairs.iter().fold(CommMonomial::one(), |a, &(g, e)| a.times(&CommMonomial::power(g, e)))
}

fn w(v: &[usize]) -> LinComb<Word> {
    LinComb::basis(Word(v.to_vec()))
}

fn f(s: &str) -> LinComb<Forest> {
    LinComb::basis(Forest::parse(s).unwrap())
}

fn t(s: &str) -> RootedTree {
    RootedTree::parse(s).unwrap()
}

#[test]
fn algebra_core() {
    assert_eq!(q("1/2") + q("1/3"), q("5/6"));
    assert_eq!(q("2/4"), q("1/2"));
    assert_eq!(Scalar::new(-3, -6).unwrap().to_string(), "1/2");
    assert!((x(1) + x(1).scale(&q("-1"))).is_zero());
    assert_eq!(x(2).scale(&q("2")) + x(2).scale(&q("3")), x(2).scale(&q("5")));
    let fnl: BTreeMap<CommMonomial, Scalar> = [(CommMonomial::gen(1), q("1")), (CommMonomial::gen(2), q("2"))].into();
    assert_eq!(functional_eval(&fnl, &x(1).scale(&q("3"))), q("3"));
    assert_eq!(functional_eval(&fnl, &(x(1) + x(2))), q("3"));
    assert_eq!(functional_eval(&fnl, &x(3)), q("0"));
}

#[test]
fn series() {
    assert_eq!(bell_polynomial(3, 1).unwrap(), x(3));
    assert_eq!(bell_polynomial(3, 2).unwrap(), LinComb::term(mono(&[(1, 1), (2, 1)]), q("3")));
    assert_eq!(
        bell_polynomial(4, 2).unwrap(),
        LinComb::term(mono(&[(1, 1), (3, 1)]), q("4")) + LinComb::term(mono(&[(2, 2)]), q("3"))
    );
    let s = TruncSeries::diffeo(&[q("1"), q("0"), q("0")]);
    assert_eq!(compose(&s, &s).unwrap(), TruncSeries::diffeo(&[q("2"), q("2"), q("1")]));
    assert_eq!(compose(&s, &TruncSeries::identity(4)).unwrap(), s);
    assert_eq!(compositional_inverse(&s).unwrap(), TruncSeries::diffeo(&[q("-1"), q("2"), q("-5")]));
    let one_plus_t = TruncSeries::invertible(&[q("1"), q("0"), q("0"), q("0")]);
    assert_eq!(
        multiplicative_inverse(&one_plus_t).unwrap(),
        TruncSeries::invertible(&[q("-1"), q("1"), q("-1"), q("1")])
    );
    let unit = TruncSeries::unit(SeriesKind::Invertible, 3);
    assert_eq!(multiplicative_inverse(&unit).unwrap(), unit);
    assert_eq!(fdb_derivative(1).unwrap(), LinComb::basis(DerivMonomial::new(1, mono(&[(1, 1)]))));
    let d4 = fdb_derivative(4).unwrap().filter(|m| m.f == 2);
    let expect = LinComb::term(DerivMonomial::new(2, mono(&[(1, 1), (3, 1)])), q("4"))
        + LinComb::term(DerivMonomial::new(2, mono(&[(2, 2)])), q("3"));
    assert_eq!(d4, expect);
    let d2 =
        LinComb::basis(DerivMonomial::new(2, mono(&[(1, 2)]))) + LinComb::basis(DerivMonomial::new(1, mono(&[(2, 1)])));
    assert_eq!(fdb_determinant(2).unwrap(), d2);
    let m = bell_matrix(&s, 4).unwrap();
    assert_eq!(m.rows()[0], vec![q("1"), q("1"), q("0"), q("0")]);
    assert_eq!(m.get(2, 3), q("2"));
}

#[test]
fn fdb_hopf() {
    let d2 = tensor(&x(2), &LinComb::basis(CommMonomial::one()))
        + tensor(&x(1), &x(1)).scale(&q("2"))
        + tensor(&LinComb::basis(CommMonomial::one()), &x(2));
    assert_eq!(generator_coproduct(HopfKind::Fdb, 2), d2);
    let h = PolyHopf::new(HopfKind::Fdb, 3);
    assert_eq!(
        h.antipode_monomial(&CommMonomial::gen(2)),
        x(2).scale(&q("-1")) + LinComb::term(mono(&[(1, 2)]), q("2"))
    );
    let s3 =
        x(3).scale(&q("-1")) + LinComb::term(mono(&[(1, 1), (2, 1)]), q("5")) + LinComb::term(mono(&[(1, 3)]), q("-5"));
    assert_eq!(h.antipode_monomial(&CommMonomial::gen(3)), s3);
    let ones: BTreeMap<usize, Scalar> = [(1, q("1"))].into();
    let e = exp_char(&InfChar::new(HopfKind::Fdb, 5, &ones).unwrap()).unwrap();
    assert!(e.values.values().all(|v| *v == q("1")));
    let c = Character::from_series(&TruncSeries::diffeo(&[q("1"), q("0")]));
    let l = log_char(&c).unwrap();
    assert_eq!((l.values[&1].clone(), l.values[&2].clone()), (q("1"), q("-1")));
}

#[test]
fn lie_brace() {
    assert_eq!(witt_bracket(1, 2).unwrap(), L1Element::e(3));
    assert_eq!(witt_bracket(3, 1).unwrap(), L1Element::e(4).scale(&q("-2")));
    let one = Scalar::one();
    assert_eq!(L1Element::e(1).prelie(&L1Element::e(1), &one), L1Element::e(2).scale(&q("2")));
    let e1 = L1Element::e(1);
    assert_eq!(symmetric_brace(&e1, &[]), e1);
    assert_eq!(symmetric_brace(&e1, std::slice::from_ref(&e1)), L1Element::e(2).scale(&q("2")));
    assert_eq!(symmetric_brace(&e1, &[e1.clone(), e1.clone()]), L1Element::e(3).scale(&q("2")));
    assert_eq!(brace_product(2, &[1, 1]).unwrap(), x(4).scale(&q("3")));
    assert_eq!(brace_product(1, &[1, 1]).unwrap(), x(3));
    let e1e1 = LinComb::basis(Word(vec![1, 1]));
    assert_eq!(pairing(&x(2), &e1e1), q("2"));
    assert_eq!(pairing(&LinComb::basis(mono(&[(1, 2)])), &e1e1), q("2"));
}

#[test]
fn trees_hopf() {
    assert_eq!(t("[[][[]]]"), t("[[[]][]]"));
    assert_eq!(t("[[][]]").symmetry_factor(), 2.into());
    assert_eq!(RootedTree::ladder(3).symmetry_factor(), 1.into());
    let l2 = coproduct_rt(&Forest::parse("[[]]").unwrap());
    assert_eq!(l2, tensor(&f("[[]]"), &f("1")) + tensor(&f("1"), &f("[[]]")) + tensor(&f("[]"), &f("[]")));
    let cherry = coproduct_rt(&Forest::parse("[[][]]").unwrap());
    let expect = tensor(&f("[[][]]"), &f("1"))
        + tensor(&f("1"), &f("[[][]]"))
        + tensor(&f("[]"), &f("[[]]")).scale(&q("2"))
        + tensor(&f("[] []"), &f("[]"));
    assert_eq!(cherry, expect);
    assert_eq!(graft(&t("[]"), &t("[[]]")), LinComb::basis(t("[[[]]]")) + LinComb::basis(t("[[][]]")));
    assert_eq!(phi(&t("[[]]")), L1Element::e(2).scale(&q("2")));
    assert_eq!(phi(&t("[[][]]")), L1Element::e(3).scale(&q("2")));
    assert_eq!(phi(&t("[[[]]]")), L1Element::e(3).scale(&q("4")));
    let ctx = PsiContext::new(2);
    assert_eq!(ctx.psi(&CommMonomial::gen(1)).unwrap(), f("[]"));
    assert_eq!(ctx.psi(&mono(&[(1, 2)])).unwrap(), f("[] []"));
    assert_eq!(ctx.psi(&CommMonomial::gen(2)).unwrap(), f("[[]]").scale(&q("2")));
}

#[test]
fn nc_hopf() {
    let d4 = generator_coproduct_nc(NcKind::FdbNc, 4).filter(|(_, b)| *b == Word::letter(1));
    assert_eq!(d4, tensor(&(w(&[3]).scale(&q("2")) + w(&[1, 2]) + w(&[2, 1])), &w(&[1])));
    let s3 =
        w(&[3]).scale(&q("-1")) + w(&[1, 2]).scale(&q("3")) + w(&[2, 1]).scale(&q("2")) + w(&[1, 1, 1]).scale(&q("-5"));
    assert_eq!(NcHopf::new(NcKind::FdbNc, 3).antipode_word(&Word::letter(3)), s3);
    assert_eq!(antipode_nc_closed(3).unwrap(), s3);
    assert_eq!((lagrange_lambda(&[1]), lagrange_lambda(&[2]), lagrange_lambda(&[1, 1])), (q("2"), q("3"), q("5")));
    let ab =
        x(3).scale(&q("-1")) + LinComb::term(mono(&[(1, 1), (2, 1)]), q("5")) + LinComb::term(mono(&[(1, 3)]), q("-5"));
    assert_eq!(abelianize(&s3), ab);
    assert_eq!(shuffle(&Word(vec![1]), &Word(vec![1, 2])), w(&[1, 1, 2]).scale(&q("2")) + w(&[1, 2, 1]));
    let dstar = cogroup_coproduct_inv(&Word::letter(2));
    let tw = |v: &[(u8, usize)]| LinComb::basis(TaggedWord(v.to_vec()));
    assert_eq!(dstar, tw(&[(1, 2)]) + tw(&[(0, 1), (1, 1)]) + tw(&[(0, 2)]));
    assert_eq!(star_project(&dstar), generator_coproduct_nc(NcKind::InvNc, 2));
}

#[test]
fn incidence() {
    let b2 = boolean_lattice(2).unwrap();
    assert_eq!(b2.len(), 4);
    let b4 = boolean_lattice(4).unwrap();
    // [{1}, {1,2,4}] is a boolean lattice on two points.
    assert_eq!(b4.interval(0b0001, 0b1011).unwrap().class(), b2.class());
    assert_eq!(Poset::from_covers(2, &[(1, 0)]).unwrap().class(), Poset::chain(2).class());
    let sp3 = partition_lattice(3).unwrap();
    assert_eq!(sp3.len(), 5);
    assert!(sp3.is_bounded());
    assert_eq!(forest_ideals(&Forest::parse("[[]]").unwrap()).unwrap().class(), Poset::chain(3).class());
    let h = IncidenceHopf::new(FamilyKind::Partitions, 2).unwrap();
    let delta = incidence_coproduct(&sp3.class()).unwrap();
    let rendered: Vec<(String, String, Scalar)> =
        delta.iter().map(|((a, b), c)| (h.label_monomial(a), h.label_monomial(b), c.clone())).collect();
    assert_eq!(
        rendered,
        vec![("1".into(), "X2".into(), q("1")), ("X1".into(), "X1".into(), q("3")), ("X2".into(), "1".into(), q("1"))]
    );
}

#[test]
fn operads() {
    use fdb_core::operads::NsOperad;
    assert_eq!(Assoc.total_compose(&AssocOp(2), &[AssocOp(1), AssocOp(3)]).unwrap(), AssocOp(4));
    assert_eq!(operadic_prelie(&Assoc, &AssocOp(2), &AssocOp(3)).unwrap(), LinComb::term(AssocOp(4), q("3")));
    assert_eq!(operadic_bracket(&Assoc, &AssocOp(2), &AssocOp(3)).unwrap(), LinComb::basis(AssocOp(4)));
    for n in 0..=4 {
        assert_eq!(PlanarBinaryTree::all(n).len(), [1, 1, 2, 5, 14][n]);
    }
    let y = PlanarBinaryTree::y();
    let yy = fdb_core::operads::over(&y, &y);
    assert_eq!(operadic_prelie(&Dup, &y, &yy).unwrap(), LinComb::term(yy.clone(), q("2")));
    let a = TruncSeries::diffeo(&[q("1"), q("0"), q("0")]);
    let s = section_embed(&a).unwrap();
    let higher = s.coeffs().filter(|t| t.internal() >= 2);
    assert_eq!(higher, LinComb::basis(PlanarBinaryTree::left_comb(2)));
    assert_eq!(order_project(&s), a);
    let two: LinComb<PlanarBinaryTree> = PlanarBinaryTree::all(2).into_iter().zip([q("3"), q("4")]).collect();
    let sum = order_project(&OperadSeries::new(Dup, 2, two).unwrap());
    assert_eq!(sum.coeff(2), q("7"));
    assert_eq!(alpha_series(&TreeSeries::zero(), 3), TreeSeries::basis(y));
}
