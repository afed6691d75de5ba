//! Named invariant suites, one per module, runnable from the command line.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basis::{CommMonomial, Graded, MulBasis, Word};
use crate::combinat::{binomial_q, compositions, partitions, permutations};
use crate::error::{Error, Result};
use crate::fdb_hopf::{
    compose_via_hopf, convolve, exp_char, log_char, monomials_up_to, Character, HopfKind, InfChar, PolyHopf,
};
use crate::hopf::{check_cocommutative, hopf_axioms, CheckOutcome};
use crate::incidence::{
    all_posets, direct_product, forest_ideals, ideal_lattice, incidence_coproduct_poset, iso_check, partition_lattice,
    FamilyKind, IncidenceHopf, IsoTarget,
};
use crate::lie_brace::{
    brace, brace_identity_sides, brace_product, e_functional, prelie_lambda, symmetric_brace, witt_bracket, GenComb,
    L1Element,
};
use crate::lincomb::{functional_eval, LinComb};
use crate::nc_hopf::{
    abelianize, abelianize_tensor, antipode_nc_closed, cogroup_coassociativity_sides, cogroup_coproduct_inv, deconcat,
    nc_series, shuffle, shuffle_lin, star_project, unshuffle, words_of_degree, CogroupAntipode, NcHopf, NcKind,
};
use crate::operads::{
    alpha_residual, alpha_series, assoc_to_series, check_duplicial, check_operad_axioms, check_prelie, order_project,
    section_embed, series_to_assoc, Assoc, Dup, OperadSeries, PlanarBinaryTree, PreLieSide, TreeSeries,
};
use crate::random::{random_diffeo, random_scalar, seeded, CheckRng};
use crate::scalar::Scalar;
use crate::series::{
    bell_matrix, bell_matrix_closed, bell_polynomial, bell_polynomial_by_partitions, compose, compose_by_substitution,
    compositional_inverse, compositional_inverse_backsub, fdb_derivative, fdb_determinant, TruncSeries,
};
use crate::trees_hopf::{
    check_cocycle, check_graft_prelie, check_phi_morphism, phi, trees_of_degree, PsiContext, RootedTree, RtHopf,
};

pub const SUITES: &[&str] =
    &["algebra_core", "series", "fdb_hopf", "lie_brace", "trees_hopf", "nc_hopf", "incidence", "operads"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_degree: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> CheckOutcome) {
        let r = f();
        self.checks.push(CheckResult {
            name: name.into(),
            passed: r.is_ok(),
            cases: *r.as_ref().unwrap_or(&0),
            counterexample: r.err(),
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

/// Runs one named suite, or every suite for "all".
pub fn run_suite(name: &str, max_degree: usize) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, max_degree)).collect();
    }
    Ok(vec![run_one(name, max_degree)?])
}

fn run_one(name: &str, d: usize) -> Result<SuiteReport> {
    if d == 0 {
        return Err(Error::OutOfRange("--max-degree must be at least 1".into()));
    }
    let mut r = Runner { checks: Vec::new() };
    match name {
        "algebra_core" => algebra_core(&mut r, d),
        "series" => series(&mut r, d),
        "fdb_hopf" => fdb_hopf(&mut r, d),
        "lie_brace" => lie_brace(&mut r, d),
        "trees_hopf" => trees_hopf(&mut r, d),
        "nc_hopf" => nc_hopf(&mut r, d),
        "incidence" => incidence(&mut r, d),
        "operads" => operads(&mut r, d),
        _ => {
            return Err(Error::Parse(format!("unknown suite {name:?}; expected one of {SUITES:?} or \"all\"")));
        }
    }
    let passed = r.checks.iter().all(|c| c.passed);
    Ok(SuiteReport { suite: name.into(), max_degree: d, passed, checks: r.checks })
}

fn random_comb(rng: &mut CheckRng, d: usize) -> LinComb<CommMonomial> {
    let monos = monomials_up_to(d);
    (0..4).map(|_| (monos[rand::Rng::gen_range(rng, 0..monos.len())].clone(), random_scalar(rng))).collect()
}

fn algebra_core(r: &mut Runner, d: usize) {
    let mut rng = seeded(1);
    r.run("lincomb_vector_space", || {
        for k in 0..30 {
            let (u, v, w) = (random_comb(&mut rng, d), random_comb(&mut rng, d), random_comb(&mut rng, d));
            ensure(&(&u + &v) + &w == &u + &(&v + &w), || format!("associativity, sample {k}"))?;
            ensure(&u + &LinComb::zero() == u, || format!("zero, sample {k}"))?;
            ensure(u.scale(&Scalar::one()) == u, || format!("unit scalar, sample {k}"))?;
            ensure(&u + &(-u.clone()) == LinComb::zero(), || format!("negation, sample {k}"))?;
        }
        Ok(30)
    });
    r.run("monomials_commutative_graded", || {
        let monos = monomials_up_to(d);
        let mut n = 0;
        for a in &monos {
            for b in &monos {
                ensure(a.mul(b) == b.mul(a), || format!("{a}·{b}"))?;
                ensure(a.mul(b).degree() == a.degree() + b.degree(), || format!("degree of {a}·{b}"))?;
                n += 1;
            }
        }
        Ok(n)
    });
    r.run("words_associative_graded", || {
        let words: Vec<Word> = (0..=d.min(3)).flat_map(words_of_degree).collect();
        let mut n = 0;
        for a in &words {
            for b in &words {
                for c in &words {
                    ensure(a.mul(b).mul(c) == a.mul(&b.mul(c)), || format!("({a}{b}){c}"))?;
                    ensure(a.mul(b).degree() == a.degree() + b.degree(), || format!("degree of {a}{b}"))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    });
    r.run("functional_eval_linear", || {
        for k in 0..30 {
            let f: BTreeMap<CommMonomial, Scalar> =
                monomials_up_to(d).into_iter().map(|m| (m, random_scalar(&mut rng))).collect();
            let (u, v, c) = (random_comb(&mut rng, d), random_comb(&mut rng, d), random_scalar(&mut rng));
            let lhs = functional_eval(&f, &(&u + &v.scale(&c)));
            let rhs = functional_eval(&f, &u) + &c * &functional_eval(&f, &v);
            ensure(lhs == rhs, || format!("sample {k}"))?;
        }
        Ok(30)
    });
}

fn series(r: &mut Runner, d: usize) {
    let n = d.max(2);
    let mut rng = seeded(2);
    r.run("group_axioms", || {
        for k in 0..10 {
            let (f, g, h) = (random_diffeo(&mut rng, n), random_diffeo(&mut rng, n), random_diffeo(&mut rng, n));
            let lhs = compose(&compose(&f, &g).map_err(e2s)?, &h).map_err(e2s)?;
            let rhs = compose(&f, &compose(&g, &h).map_err(e2s)?).map_err(e2s)?;
            ensure(lhs == rhs, || format!("associativity, sample {k}"))?;
            let id = TruncSeries::identity(n);
            ensure(compose(&f, &id).map_err(e2s)? == f && compose(&id, &f).map_err(e2s)? == f, || {
                format!("identity, sample {k}")
            })?;
            let inv = compositional_inverse(&f).map_err(e2s)?;
            ensure(compose(&f, &inv).map_err(e2s)? == id && compose(&inv, &f).map_err(e2s)? == id, || {
                format!("inverse, sample {k}")
            })?;
        }
        Ok(10)
    });
    r.run("compose_formula_vs_substitution", || {
        for k in 0..20 {
            let (f, g) = (random_diffeo(&mut rng, n), random_diffeo(&mut rng, n));
            ensure(compose(&f, &g).map_err(e2s)? == compose_by_substitution(&f, &g).map_err(e2s)?, || {
                format!("sample {k}")
            })?;
        }
        Ok(20)
    });
    r.run("lagrange_vs_back_substitution", || {
        for k in 0..10 {
            let f = random_diffeo(&mut rng, n);
            ensure(compositional_inverse(&f).map_err(e2s)? == compositional_inverse_backsub(&f).map_err(e2s)?, || {
                format!("sample {k}")
            })?;
        }
        Ok(10)
    });
    r.run("bell_polynomial_two_ways", || {
        let mut c = 0;
        for nn in 1..=d {
            for m in 1..=nn {
                ensure(
                    bell_polynomial(nn, m).map_err(e2s)? == bell_polynomial_by_partitions(nn, m).map_err(e2s)?,
                    || format!("B_{{{nn},{m}}}"),
                )?;
                c += 1;
            }
        }
        Ok(c)
    });
    r.run("bell_matrix_homomorphism", || {
        for k in 0..5 {
            let (f, g) = (random_diffeo(&mut rng, n), random_diffeo(&mut rng, n));
            let fg = compose(&f, &g).map_err(e2s)?;
            let lhs = bell_matrix(&fg, n).map_err(e2s)?;
            let rhs = bell_matrix(&f, n).map_err(e2s)?.mul(&bell_matrix(&g, n).map_err(e2s)?).map_err(e2s)?;
            ensure(lhs == rhs, || format!("M(f∘g) ≠ M(f)M(g), sample {k}"))?;
            ensure(bell_matrix_closed(&f, n).map_err(e2s)? == bell_matrix(&f, n).map_err(e2s)?, || {
                format!("closed form, sample {k}")
            })?;
        }
        let id = bell_matrix(&TruncSeries::identity(n), n).map_err(e2s)?;
        ensure(id == crate::series::BellMatrix::identity(n), || "M(t) ≠ Id".into())?;
        Ok(6)
    });
    r.run("determinant_vs_derivative", || {
        for k in 1..=d.min(6) {
            ensure(fdb_determinant(k).map_err(e2s)? == fdb_derivative(k).map_err(e2s)?, || format!("n = {k}"))?;
        }
        Ok(d.min(6))
    });
}

fn fdb_hopf(r: &mut Runner, d: usize) {
    for kind in [HopfKind::Inv, HopfKind::Fdb] {
        let h = PolyHopf::new(kind, d);
        for (name, outcome) in hopf_axioms(&h, d) {
            r.run(&format!("{kind}:{name}"), || outcome);
        }
    }
    r.run("inv:cocommutative", || check_cocommutative(&PolyHopf::new(HopfKind::Inv, d), d));
    r.run("fdb:not_cocommutative", || {
        let h = PolyHopf::new(HopfKind::Fdb, d.max(3));
        match check_cocommutative(&h, d.max(3)) {
            Err(_) => Ok(1),
            Ok(_) => Err("no witness of non-cocommutativity found".into()),
        }
    });
    let n = d.max(2);
    let mut rng = seeded(3);
    r.run("character_group_isomorphism", || {
        for k in 0..10 {
            let (f, g) = (random_diffeo(&mut rng, n), random_diffeo(&mut rng, n));
            ensure(compose_via_hopf(&f, &g).map_err(e2s)? == compose(&f, &g).map_err(e2s)?, || format!("sample {k}"))?;
            let c = Character::from_series(&f);
            ensure(c.to_series() == f, || format!("round trip, sample {k}"))?;
        }
        Ok(10)
    });
    r.run("antipode_is_inversion", || {
        let h = PolyHopf::new(HopfKind::Fdb, n);
        for k in 0..5 {
            let f = random_diffeo(&mut rng, n);
            let inv = compositional_inverse(&f).map_err(e2s)?;
            let c = Character::from_series(&f);
            for m in 1..n {
                let s = h.antipode_monomial(&CommMonomial::gen(m));
                let v: Scalar = s.iter().map(|(mono, coef)| coef * c.eval_monomial(mono)).sum();
                ensure(v == inv.coeff(m + 1), || format!("S(x{m}) on sample {k}"))?;
            }
        }
        Ok(5)
    });
    r.run("exp_log_bijection", || {
        for kind in [HopfKind::Inv, HopfKind::Fdb] {
            for k in 0..3 {
                let vals: BTreeMap<usize, Scalar> = (1..=d).map(|i| (i, random_scalar(&mut rng))).collect();
                let alpha = InfChar::new(kind, d, &vals).map_err(e2s)?;
                let back = log_char(&exp_char(&alpha).map_err(e2s)?).map_err(e2s)?;
                ensure(back == alpha, || format!("log∘exp on {kind}, sample {k}"))?;
                let phi = Character::new(kind, d, &vals).map_err(e2s)?;
                ensure(exp_char(&log_char(&phi).map_err(e2s)?).map_err(e2s)? == phi, || {
                    format!("exp∘log on {kind}, sample {k}")
                })?;
                let c = random_scalar(&mut rng);
                let a = alpha.to_functional();
                let b = a.scale(&c);
                let sum = crate::fdb_hopf::exp_functional(&a.add_scaled(&b, &Scalar::one())).map_err(e2s)?;
                let prod = convolve(
                    &crate::fdb_hopf::exp_functional(&a).map_err(e2s)?,
                    &crate::fdb_hopf::exp_functional(&b).map_err(e2s)?,
                )
                .map_err(e2s)?;
                ensure(sum == prod, || format!("exp(α + cα) on {kind}, sample {k}"))?;
            }
        }
        Ok(6)
    });
}

fn lie_brace(r: &mut Runner, d: usize) {
    let lambdas = ["0", "1", "2", "-1", "1/2"];
    r.run("left_prelie_lambda", || {
        let mut c = 0;
        for l in lambdas {
            let lambda: Scalar = l.parse().map_err(e2s)?;
            for p in 1..=d {
                for q in 1..=d {
                    for s in 1..=d {
                        if p + q + s > d.max(3) {
                            continue;
                        }
                        let (a, b, e) = (L1Element::e(p), L1Element::e(q), L1Element::e(s));
                        let assoc = |x: &L1Element, y: &L1Element| {
                            x.prelie(&y.prelie(&e, &lambda), &lambda).sub(&x.prelie(y, &lambda).prelie(&e, &lambda))
                        };
                        ensure(assoc(&a, &b) == assoc(&b, &a), || format!("λ = {l}, ({p}, {q}, {s})"))?;
                        c += 1;
                    }
                }
            }
        }
        Ok(c)
    });
    r.run("commutator_is_witt", || {
        let mut c = 0;
        for p in 1..=d {
            for q in 1..=d {
                let one = Scalar::one();
                let comm = prelie_lambda(p, q, &one).map_err(e2s)?.sub(&prelie_lambda(q, p, &one).map_err(e2s)?);
                ensure(comm == witt_bracket(p, q).map_err(e2s)?, || format!("[e{p}, e{q}]"))?;
                c += 1;
            }
        }
        Ok(c)
    });
    r.run("convolution_commutator", || {
        let mut c = 0;
        for p in 1..d {
            for q in 1..=d - p {
                let (ep, eq) = (e_functional(p, d), e_functional(q, d));
                let comm = convolve(&ep, &eq)
                    .map_err(e2s)?
                    .add_scaled(&convolve(&eq, &ep).map_err(e2s)?, &Scalar::from_int(-1));
                let expect = e_functional(p + q, d).scale(&Scalar::from_int(q as i64 - p as i64));
                ensure(comm == expect, || format!("e{p} ∗ e{q} − e{q} ∗ e{p}"))?;
                c += 1;
            }
        }
        Ok(c)
    });
    r.run("symmetric_brace_symmetry", || {
        let mut c = 0;
        for k in 1..=3 {
            for args in compositions(d.max(k)).into_iter().filter(|a| a.len() == k) {
                let x = L1Element::e(1);
                let elems: Vec<L1Element> = args.iter().map(|&a| L1Element::e(a)).collect();
                let base = symmetric_brace(&x, &elems);
                for perm in permutations(k) {
                    let permuted: Vec<L1Element> = perm.iter().map(|&i| elems[i].clone()).collect();
                    ensure(symmetric_brace(&x, &permuted) == base, || format!("args {args:?}"))?;
                }
                c += 1;
            }
        }
        Ok(c)
    });
    r.run("brace_product_binomial", || {
        let mut c = 0;
        for n in 1..=d {
            for ms in (0..=d).flat_map(compositions).filter(|ms| n + ms.iter().sum::<usize>() <= d + 2) {
                let got = brace_product(n, &ms).map_err(e2s)?;
                let total = n + ms.iter().sum::<usize>();
                let expect = LinComb::term(CommMonomial::gen(total), binomial_q(n + 1, ms.len()));
                ensure(got == expect, || format!("{{x{n}; {ms:?}}}"))?;
                let lin = brace(&GenComb::basis(n), &ms.iter().map(|&m| GenComb::basis(m)).collect::<Vec<_>>());
                ensure(lin == LinComb::term(total, binomial_q(n + 1, ms.len())), || {
                    format!("multilinear {{x{n}; {ms:?}}}")
                })?;
                c += 1;
            }
        }
        Ok(c)
    });
    r.run("brace_identity", || {
        let mut c = 0;
        let g = |n| GenComb::basis(n);
        for x in 1..=d {
            for ys in [vec![1], vec![2], vec![1, 1], vec![1, 2]] {
                for zs in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
                    if x + ys.iter().sum::<usize>() + zs.iter().sum::<usize>() > d.max(5) {
                        continue;
                    }
                    let ysg: Vec<GenComb> = ys.iter().map(|&n| g(n)).collect();
                    let zsg: Vec<GenComb> = zs.iter().map(|&n| g(n)).collect();
                    let (lhs, rhs) = brace_identity_sides(&g(x), &ysg, &zsg);
                    ensure(lhs == rhs, || format!("x{x}; ys {ys:?}; zs {zs:?}"))?;
                    c += 1;
                }
            }
        }
        Ok(c)
    });
}

fn trees_hopf(r: &mut Runner, d: usize) {
    r.run("tree_counts", || {
        let expect = [1, 1, 2, 4, 9, 20, 48, 115];
        for n in 1..=d.min(8) {
            let got = trees_of_degree(n).len();
            ensure(got == expect[n - 1], || format!("degree {n}: {got} trees"))?;
        }
        let up_to_5: usize = (1..=5).map(|n| trees_of_degree(n).len()).sum();
        ensure(up_to_5 == 17, || format!("{up_to_5} trees up to 5 vertices"))?;
        Ok(d.min(8))
    });
    let dd = d.min(5);
    let h = RtHopf::new(dd);
    for (name, outcome) in hopf_axioms(&h, dd) {
        r.run(&format!("rt:{name}"), || outcome);
    }
    r.run("cocycle", || check_cocycle(dd));
    r.run("graft_left_prelie", || check_graft_prelie(d.clamp(3, 6)));
    r.run("phi_prelie_morphism", || check_phi_morphism(d.clamp(2, 6)));
    r.run("phi_surjective", || {
        for n in 1..=d {
            ensure(!phi(&RootedTree::ladder(n)).coeff(n).is_zero(), || format!("φ(ℓ{n}) = 0"))?;
        }
        Ok(d)
    });
    let ctx = PsiContext::new(dd);
    r.run("psi_multiplicative", || ctx.check_multiplicative());
    r.run("psi_comultiplicative", || ctx.check_comultiplicative());
    r.run("psi_injective", || {
        let ranks = ctx.ranks().map_err(e2s)?;
        let expect: Vec<usize> = (1..=dd).map(|n| partitions(n).len()).collect();
        ensure(ranks == expect, || format!("ranks {ranks:?}, expected {expect:?}"))?;
        Ok(dd)
    });
}

fn nc_hopf(r: &mut Runner, d: usize) {
    for (kind, label) in [(NcKind::InvNc, "invnc"), (NcKind::FdbNc, "fdbnc")] {
        let h = NcHopf::new(kind, d);
        for (name, outcome) in hopf_axioms(&h, d) {
            r.run(&format!("{label}:{name}"), || outcome);
        }
    }
    r.run("closed_form_antipode", || {
        let h = NcHopf::new(NcKind::FdbNc, d);
        for n in 1..=d {
            ensure(antipode_nc_closed(n).map_err(e2s)? == h.antipode_word(&Word::letter(n)), || format!("S(x{n})"))?;
        }
        Ok(d)
    });
    r.run("abelianization_is_hopf_morphism", || {
        let mut c = 0;
        for (kind, ckind) in [(NcKind::InvNc, HopfKind::Inv), (NcKind::FdbNc, HopfKind::Fdb)] {
            let h = NcHopf::new(kind, d);
            let hc = PolyHopf::new(ckind, d);
            for n in 1..=d {
                for w in words_of_degree(n) {
                    let m = w.abelianize();
                    ensure(abelianize(&h.antipode_word(&w)) == hc.antipode_monomial(&m), || format!("π S({w})"))?;
                    ensure(abelianize_tensor(&h.coproduct_word(&w)) == hc.coproduct_monomial(&m), || {
                        format!("(π⊗π) Δ({w})")
                    })?;
                    c += 1;
                }
            }
        }
        Ok(c)
    });
    r.run("invnc_cocommutative", || check_cocommutative(&NcHopf::new(NcKind::InvNc, d), d));
    r.run("fdbnc_not_cocommutative", || {
        let h = NcHopf::new(NcKind::FdbNc, d.max(3));
        match check_cocommutative(&h, d.max(3)) {
            Err(_) => Ok(1),
            Ok(_) => Err("no witness of non-cocommutativity found".into()),
        }
    });
    let words: Vec<Word> = (0..=d.min(4)).flat_map(words_of_degree).collect();
    r.run("shuffle_commutative_associative", || {
        let mut c = 0;
        for u in &words {
            for v in &words {
                ensure(shuffle(u, v) == shuffle(v, u), || format!("{u} ⧢ {v}"))?;
                for w in words.iter().filter(|w| u.len() + v.len() + w.len() <= 5) {
                    let l = shuffle_lin(&shuffle(u, v), &LinComb::basis(w.clone()));
                    let rr = shuffle_lin(&LinComb::basis(u.clone()), &shuffle(v, w));
                    ensure(l == rr, || format!("({u} ⧢ {v}) ⧢ {w}"))?;
                    c += 1;
                }
            }
        }
        Ok(c)
    });
    r.run("deconcat_coassociative", || {
        for w in &words {
            let d1 = deconcat(w);
            let left: LinComb<(Word, Word, Word)> =
                d1.flat_map(|(a, b)| deconcat(a).map_basis(|(x, y)| (x.clone(), y.clone(), b.clone())));
            let right: LinComb<(Word, Word, Word)> =
                d1.flat_map(|(a, b)| deconcat(b).map_basis(|(x, y)| (a.clone(), x.clone(), y.clone())));
            ensure(left == right, || format!("{w}"))?;
        }
        Ok(words.len())
    });
    r.run("shuffle_pairings", || {
        let short: Vec<&Word> = words.iter().filter(|w| w.len() <= 4).collect();
        let mut c = 0;
        for u in &short {
            for v in &short {
                if u.len() + v.len() > 4 {
                    continue;
                }
                let uv = ((*u).clone(), (*v).clone());
                for w in short.iter().filter(|w| w.len() == u.len() + v.len()) {
                    let sh = shuffle(u, v).coeff(w);
                    ensure(sh == unshuffle(w).coeff(&uv), || format!("⟨{u} ⧢ {v}, {w}⟩"))?;
                    let cat = if u.concat(v) == **w { Scalar::one() } else { Scalar::zero() };
                    ensure(cat == deconcat(w).coeff(&uv), || format!("⟨{u}{v}, {w}⟩"))?;
                    c += 1;
                }
            }
        }
        Ok(c)
    });
    r.run("cogroup_axioms", || {
        let s = CogroupAntipode::new(d);
        let mut c = 0;
        for n in 1..=d {
            let w = Word::letter(n);
            let (l, rr) = cogroup_coassociativity_sides(&w);
            ensure(l == rr, || format!("coassociativity on x{n}"))?;
            let dstar = cogroup_coproduct_inv(&w);
            ensure(star_project(&dstar) == crate::nc_hopf::generator_coproduct_nc(NcKind::InvNc, n), || {
                format!("π Δ*(x{n})")
            })?;
            ensure(s.project_left(&dstar).is_zero(), || format!("m(S⊗id)π Δ*(x{n})"))?;
            ensure(s.fold_left(&dstar).is_zero(), || format!("∇(S⋆id) Δ*(x{n})"))?;
            c += 1;
        }
        for w in words.iter().filter(|w| !w.is_empty()) {
            ensure(s.fold_left(&cogroup_coproduct_inv(w)).is_zero(), || format!("∇(S⋆id) Δ*({w})"))?;
            c += 1;
        }
        Ok(c)
    });
    r.run("nc_composition_not_associative", || match nc_series::find_nonassociativity(d.max(4)) {
        Some(cx) if cx.degree <= 4 => Ok(1),
        Some(cx) => Err(format!("first failure only at degree {}", cx.degree)),
        None => Err("no counterexample found".into()),
    });
}

fn incidence(r: &mut Runner, d: usize) {
    for (kind, label, cap) in [
        (FamilyKind::Boolean, "boolean", 6),
        (FamilyKind::Partitions, "partitions", 5),
        (FamilyKind::ForestIdeals, "forest", 5),
    ] {
        let dd = d.min(cap);
        let h = match IncidenceHopf::new(kind, dd) {
            Ok(h) => h,
            Err(e) => {
                r.run(&format!("{label}:construct"), || Err(e.to_string()));
                continue;
            }
        };
        r.run(&format!("{label}:coassociative"), || crate::hopf::check_coassociative(&h, dd));
        r.run(&format!("{label}:counit"), || crate::hopf::check_counit(&h, dd));
        r.run(&format!("{label}:antipode"), || crate::hopf::check_antipode(&h, dd.min(4)));
    }
    r.run("multiplicative_over_products", || {
        let ps = [partition_lattice(2), partition_lattice(3)];
        let qs = [
            forest_ideals(&crate::trees_hopf::Forest::parse("[[]]").map_err(e2s)?),
            forest_ideals(&crate::trees_hopf::Forest::parse("[] []").map_err(e2s)?),
        ];
        let mut c = 0;
        for p in &ps {
            for q in &qs {
                let (p, q) = (p.as_ref().map_err(|e| e.to_string())?, q.as_ref().map_err(|e| e.to_string())?);
                let lhs = incidence_coproduct_poset(&direct_product(p, q)).map_err(e2s)?;
                let rhs = incidence_coproduct_poset(p).map_err(e2s)?.mul(&incidence_coproduct_poset(q).map_err(e2s)?);
                ensure(lhs == rhs, || format!("{p:?} × {q:?}"))?;
                c += 1;
            }
        }
        Ok(c)
    });
    for (t, cap) in [(IsoTarget::Binomial, 6), (IsoTarget::Fdb, 5), (IsoTarget::Rt, 5)] {
        r.run(&format!("iso_{t:?}").to_lowercase(), || {
            let rep = iso_check(t, d.min(cap));
            rep.failure.map_or(Ok(rep.cases), Err)
        });
    }
    r.run("ideal_lattice_injective", || {
        let mut seen = BTreeMap::new();
        for n in 1..=d.min(5) {
            for c in all_posets(n) {
                let j = ideal_lattice(c.poset()).map_err(e2s)?.class();
                if let Some(prev) = seen.insert(j, c.clone()) {
                    return Err(format!("J({prev}) ≅ J({c})"));
                }
            }
        }
        Ok(seen.len())
    });
}

fn operads(r: &mut Runner, d: usize) {
    r.run("assoc_axioms", || check_operad_axioms(&Assoc, d.min(5)));
    r.run("dup_axioms", || check_operad_axioms(&Dup, d.min(3)));
    r.run("duplicial_identities", || check_duplicial(d.min(3)));
    let mut rng = seeded(7);
    let n_assoc = d.clamp(2, 8);
    let n_dup = d.clamp(2, 5);
    r.run("assoc_group_is_gdif", || {
        for k in 0..10 {
            let (f, g) = (random_diffeo(&mut rng, n_assoc), random_diffeo(&mut rng, n_assoc));
            let via = series_to_assoc(&f).map_err(e2s)?.compose(&series_to_assoc(&g).map_err(e2s)?).map_err(e2s)?;
            ensure(assoc_to_series(&via) == compose(&f, &g).map_err(e2s)?, || format!("sample {k}"))?;
        }
        Ok(10)
    });
    r.run("assoc_group_axioms", || {
        let f = series_to_assoc(&random_diffeo(&mut rng, n_assoc)).map_err(e2s)?;
        let g = series_to_assoc(&random_diffeo(&mut rng, n_assoc)).map_err(e2s)?;
        let h = series_to_assoc(&random_diffeo(&mut rng, n_assoc)).map_err(e2s)?;
        group_axioms(&f, &g, &h)
    });
    r.run("dup_group_axioms", || {
        let f = random_dup(&mut rng, n_dup);
        let g = random_dup(&mut rng, n_dup);
        let h = random_dup(&mut rng, n_dup);
        group_axioms(&f, &g, &h)
    });
    r.run("projection_section_morphisms", || {
        for k in 0..3 {
            let (a, b) = (random_diffeo(&mut rng, n_dup), random_diffeo(&mut rng, n_dup));
            let (sa, sb) = (section_embed(&a).map_err(e2s)?, section_embed(&b).map_err(e2s)?);
            ensure(order_project(&sa) == a, || format!("project∘section, sample {k}"))?;
            let ab = compose(&a, &b).map_err(e2s)?;
            ensure(sa.compose(&sb).map_err(e2s)? == section_embed(&ab).map_err(e2s)?, || {
                format!("section morphism, sample {k}")
            })?;
            let (fa, fb) = (random_dup(&mut rng, n_dup), random_dup(&mut rng, n_dup));
            let lhs = order_project(&fa.compose(&fb).map_err(e2s)?);
            let rhs = compose(&order_project(&fa), &order_project(&fb)).map_err(e2s)?;
            ensure(lhs == rhs, || format!("projection morphism, sample {k}"))?;
        }
        Ok(3)
    });
    r.run("assoc_left_prelie", || check_prelie(&Assoc, PreLieSide::Left, d.clamp(3, 6)));
    r.run("dup_left_prelie", || check_prelie(&Dup, PreLieSide::Left, d.clamp(3, 6)));
    r.run("alpha_residual", || {
        let n = d.min(3);
        let y = PlanarBinaryTree::y();
        let mut f = TreeSeries::basis(PlanarBinaryTree::leaf());
        for t in (1..=n).flat_map(PlanarBinaryTree::all) {
            f.add_term(t, random_scalar(&mut rng));
        }
        let a = alpha_series(&f, n);
        ensure(alpha_residual(&f, &a, n).is_zero(), || "residual ≠ 0".into())?;
        let combs: TreeSeries = (1..=n).map(|k| (PlanarBinaryTree::left_comb(k), Scalar::one())).collect();
        ensure(alpha_series(&TreeSeries::basis(PlanarBinaryTree::leaf()), n) == combs, || "f = x^| case".into())?;
        ensure(alpha_series(&TreeSeries::zero(), n) == TreeSeries::basis(y), || "f = 0 case".into())?;
        Ok(3)
    });
}

fn random_dup(rng: &mut CheckRng, n: usize) -> OperadSeries<Dup> {
    let mut coeffs = LinComb::zero();
    for k in 2..=n {
        for t in PlanarBinaryTree::all(k) {
            coeffs.add_term(t, random_scalar(rng));
        }
    }
    OperadSeries::new(Dup, n, coeffs).expect("valid series")
}

fn group_axioms<O: crate::operads::NsOperad + PartialEq>(
    f: &OperadSeries<O>,
    g: &OperadSeries<O>,
    h: &OperadSeries<O>,
) -> CheckOutcome
where
    O::Op: PartialEq,
{
    let e = OperadSeries::identity(f.operad().clone(), f.truncation());
    let lhs = f.compose(g).map_err(e2s)?.compose(h).map_err(e2s)?;
    let rhs = f.compose(&g.compose(h).map_err(e2s)?).map_err(e2s)?;
    ensure(lhs == rhs, || "associativity".into())?;
    ensure(f.compose(&e).map_err(e2s)? == *f && e.compose(f).map_err(e2s)? == *f, || "identity".into())?;
    let inv = f.inverse().map_err(e2s)?;
    ensure(f.compose(&inv).map_err(e2s)? == e && inv.compose(f).map_err(e2s)? == e, || "inverse".into())?;
    Ok(3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for report in run_suite("all", 4).unwrap() {
            for c in &report.checks {
                assert!(c.passed, "{}:{} failed: {:?}", report.suite, c.name, c.counterexample);
            }
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", 3).is_err());
        assert!(run_suite("series", 0).is_err());
    }
}
