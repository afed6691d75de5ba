//! One function per subcommand, each a pure function of its arguments and
//! payload.

use std::collections::BTreeMap;
use std::process::ExitCode;

use fdb_core::checks::run_suite;
use fdb_core::fdb_hopf::{exp_char, log_char, Character, HopfKind, InfChar, PolyHopf};
use fdb_core::hopf::GradedHopf;
use fdb_core::incidence::{
    boolean_lattice, forest_ideals, incidence_coproduct_poset, partition_lattice, FamilyKind, IncidenceHopf, Poset,
};
use fdb_core::lie_brace::L1Element;
use fdb_core::nc_hopf::{antipode_nc_closed, NcHopf, NcKind};
use fdb_core::operads::{
    alpha_series, assoc_to_series, order_project, section_embed, series_to_assoc, AnyOperadSeries, OperadKind,
    TreeSeries,
};
use fdb_core::series::{
    bell_matrix, bell_polynomial, compose, compositional_inverse, compositional_inverse_backsub, fdb_derivative,
    fdb_determinant, lambert_w_coefficients, multiplicative_inverse,
};
use fdb_core::trees_hopf::{forests_of_degree, graft, phi, Forest, PsiContext, RootedTree, RtHopf};
use fdb_core::{CommMonomial, Error, Graded, LinComb, Result, Scalar, Tensor2, TruncSeries};
use serde::Serialize;

use crate::payload;
use crate::render::{aligned, sum_text, tensor_text, Out};
use crate::{Algebra, Cli, CommAlgebra, Command, FamilyArg, OperadAction, OperadArg};

pub fn run(cli: &Cli) -> Result<(Out, ExitCode)> {
    let input = |p: &Option<String>| payload::read(p.as_deref(), cli.input.as_deref());
    let out = match &cli.command {
        Command::Compose { payload } => {
            let (f, g) = payload::series_pair(&input(payload)?)?;
            series_out(&compose(&f, &g)?)
        }
        Command::Invert { payload } => series_out(&compositional_inverse_backsub(&payload::series(&input(payload)?)?)?),
        Command::Lagrange { payload } => series_out(&compositional_inverse(&payload::series(&input(payload)?)?)?),
        Command::Mulinv { payload } => series_out(&multiplicative_inverse(&payload::series(&input(payload)?)?)?),
        Command::Bell { n, m } => {
            let b = bell_polynomial(*n, *m)?;
            Out::new(&b, b.to_string())
        }
        Command::Lambert { n } => {
            let c = lambert_w_coefficients(*n)?;
            let rows: Vec<(String, String)> =
                c.iter().enumerate().map(|(i, v)| (format!("g{}", i + 1), v.to_string())).collect();
            Out::new(&c, aligned(&rows))
        }
        Command::Bellmatrix { payload, size } => {
            let f = payload::series(&input(payload)?)?;
            let m = bell_matrix(&f, size.unwrap_or(f.truncation()))?;
            Out::new(&m.rows(), m.to_string())
        }
        Command::Fdbderiv { n, determinant } => {
            let d = if *determinant { fdb_determinant(*n)? } else { fdb_derivative(*n)? };
            Out::new(&d, d.to_string())
        }
        Command::Coproduct { algebra, payload } => coproduct(*algebra, &input(payload)?)?,
        Command::Antipode { algebra, closed_form, payload } => antipode(*algebra, *closed_form, &input(payload)?)?,
        Command::Exp { algebra, degree, payload } => {
            let (kind, values) = char_values(*algebra, &input(payload)?)?;
            let c = exp_char(&InfChar::new(kind, *degree, &values)?)?;
            char_out(&c, &c.values)
        }
        Command::Log { algebra, degree, payload } => {
            let (kind, values) = char_values(*algebra, &input(payload)?)?;
            let a = log_char(&Character::new(kind, *degree, &values)?)?;
            char_out(&a, &a.values)
        }
        Command::Graft { t, u } => {
            let g = graft(&RootedTree::parse(t)?, &RootedTree::parse(u)?);
            Out::new(&g, g.to_string())
        }
        Command::Phi { tree } => {
            let v: L1Element = phi(&RootedTree::parse(tree)?);
            Out::new(&v, v.to_string())
        }
        Command::Psi { n } => {
            if *n == 0 {
                return Err(Error::OutOfRange("psi needs n ≥ 1".into()));
            }
            let v = PsiContext::new(*n).psi(&CommMonomial::gen(*n))?;
            Out::new(&v, v.to_string())
        }
        Command::Incidence { family, n } => incidence(*family, *n)?,
        Command::Operad { action, operad, degree, payload } => operad_cmd(*action, *operad, *degree, &input(payload)?)?,
        Command::Check { suite, max_degree } => {
            let reports = run_suite(suite, *max_degree)?;
            let passed = reports.iter().all(|r| r.passed);
            let mut rows = Vec::new();
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed { format!("PASS ({} cases)", c.cases) } else { "FAIL".to_string() };
                    rows.push((format!("{}/{}", r.suite, c.name), status));
                    if let Some(cx) = &c.counterexample {
                        rows.push(("  counterexample".into(), cx.clone()));
                    }
                }
            }
            #[derive(Serialize)]
            struct CheckOut<'a> {
                passed: bool,
                suites: &'a [fdb_core::checks::SuiteReport],
            }
            let out = Out::new(&CheckOut { passed, suites: &reports }, aligned(&rows));
            return Ok((out, if passed { ExitCode::SUCCESS } else { ExitCode::from(2) }));
        }
    };
    Ok((out, ExitCode::SUCCESS))
}

fn series_out(f: &TruncSeries) -> Out {
    Out::new(f, f.to_string())
}

fn bound_of<B: Graded + Ord + Clone>(x: &LinComb<B>) -> usize {
    x.max_degree().unwrap_or(0).max(1)
}

fn coproduct(algebra: Algebra, raw: &str) -> Result<Out> {
    Ok(match algebra {
        Algebra::Fdb | Algebra::Inv => {
            let x = payload::comm_element(raw)?;
            let t = PolyHopf::new(comm_kind(algebra), bound_of(&x)).coproduct(&x);
            Out::new(&t, tensor_text(&t, |m| m.to_string()))
        }
        Algebra::Fdbnc | Algebra::Invnc => {
            let x = payload::word_element(raw)?;
            let t = NcHopf::new(nc_kind(algebra), bound_of(&x)).coproduct(&x);
            Out::new(&t, tensor_text(&t, |w| w.to_string()))
        }
        Algebra::Rt => {
            let x = payload::forest_element(raw)?;
            let t: Tensor2<Forest> = RtHopf::new(bound_of(&x)).coproduct(&x);
            Out::new(&t, tensor_text(&t, |f| f.to_string()))
        }
    })
}

fn antipode(algebra: Algebra, closed_form: bool, raw: &str) -> Result<Out> {
    if closed_form && !matches!(algebra, Algebra::Fdbnc) {
        return Err(Error::Parse("--closed-form is available for --algebra fdbnc only".into()));
    }
    Ok(match algebra {
        Algebra::Fdb | Algebra::Inv => {
            let x = payload::comm_element(raw)?;
            let s = PolyHopf::new(comm_kind(algebra), bound_of(&x)).antipode(&x);
            Out::new(&s, s.to_string())
        }
        Algebra::Fdbnc | Algebra::Invnc => {
            let x = payload::word_element(raw)?;
            let s = if closed_form {
                let mut s = LinComb::zero();
                for (w, c) in x.iter() {
                    match w.letters() {
                        [n] => s.add_scaled(&antipode_nc_closed(*n)?, c),
                        _ => return Err(Error::Parse(format!("closed form applies to generators, got {w}"))),
                    }
                }
                s
            } else {
                NcHopf::new(nc_kind(algebra), bound_of(&x)).antipode(&x)
            };
            Out::new(&s, s.to_string())
        }
        Algebra::Rt => {
            let x = payload::forest_element(raw)?;
            let s = RtHopf::new(bound_of(&x)).antipode(&x);
            Out::new(&s, s.to_string())
        }
    })
}

fn comm_kind(a: Algebra) -> HopfKind {
    match a {
        Algebra::Inv => HopfKind::Inv,
        _ => HopfKind::Fdb,
    }
}

fn nc_kind(a: Algebra) -> NcKind {
    match a {
        Algebra::Invnc => NcKind::InvNc,
        _ => NcKind::FdbNc,
    }
}

fn char_values(algebra: CommAlgebra, raw: &str) -> Result<(HopfKind, BTreeMap<usize, Scalar>)> {
    let kind = match algebra {
        CommAlgebra::Fdb => HopfKind::Fdb,
        CommAlgebra::Inv => HopfKind::Inv,
    };
    let (named, values) = payload::generator_values(raw)?;
    if let Some(name) = named {
        if name != kind.to_string() {
            return Err(Error::AlgebraMismatch(name, kind.to_string()));
        }
    }
    Ok((kind, values))
}

fn char_out(value: &impl Serialize, values: &BTreeMap<usize, Scalar>) -> Out {
    let rows: Vec<(String, String)> = values.iter().map(|(n, v)| (format!("x{n}"), v.to_string())).collect();
    Out::new(value, aligned(&rows))
}

#[derive(Serialize)]
struct IncidenceEntry {
    name: String,
    poset: String,
    elements: usize,
    class: String,
    coproduct: Vec<IncidenceTerm>,
}

#[derive(Serialize)]
struct IncidenceTerm {
    left: String,
    right: String,
    coeff: Scalar,
}

fn incidence(family: FamilyArg, n: usize) -> Result<Out> {
    let (kind, items): (FamilyKind, Vec<(String, Poset)>) = match family {
        FamilyArg::Boolean => (FamilyKind::Boolean, vec![(format!("B{n}"), boolean_lattice(n)?)]),
        FamilyArg::Partitions => (FamilyKind::Partitions, vec![(format!("SP({n})"), partition_lattice(n)?)]),
        FamilyArg::Forest => {
            if n == 0 {
                return Err(Error::OutOfRange("forest family needs n ≥ 1".into()));
            }
            let items = forests_of_degree(n)
                .into_iter()
                .map(|f| Ok((format!("J({f})"), forest_ideals(&f)?)))
                .collect::<Result<_>>()?;
            (FamilyKind::ForestIdeals, items)
        }
    };
    let mut entries = Vec::new();
    let mut text = Vec::new();
    for (name, p) in items {
        let delta = incidence_coproduct_poset(&p)?;
        let bound = delta.support().map(|(a, b)| a.degree().max(b.degree())).max().unwrap_or(0);
        let h = IncidenceHopf::new(kind, bound)?;
        let class = p.class();
        let coproduct = delta
            .iter()
            .map(|((a, b), c)| IncidenceTerm {
                left: h.label_monomial(a),
                right: h.label_monomial(b),
                coeff: c.clone(),
            })
            .collect();
        text.push(format!(
            "{name}: {} elements, class {class}\n  Δ = {}",
            p.len(),
            tensor_text(&delta, |m| h.label_monomial(m))
        ));
        entries.push(IncidenceEntry {
            name,
            poset: class.to_string(),
            elements: p.len(),
            class: h.label_monomial(&fdb_core::incidence::classify(&p)?),
            coproduct,
        });
    }
    #[derive(Serialize)]
    struct IncidenceOut {
        family: FamilyKind,
        n: usize,
        entries: Vec<IncidenceEntry>,
    }
    Ok(Out::new(&IncidenceOut { family: kind, n, entries }, text.join("\n")))
}

fn operad_cmd(action: OperadAction, operad: OperadArg, degree: Option<usize>, raw: &str) -> Result<Out> {
    let want = match operad {
        OperadArg::Assoc => OperadKind::Assoc,
        OperadArg::Dup => OperadKind::Dup,
    };
    let check = |s: &AnyOperadSeries| {
        if s.kind() != want {
            return Err(Error::AlgebraMismatch(
                format!("{:?}", s.kind()).to_lowercase(),
                format!("{want:?}").to_lowercase(),
            ));
        }
        Ok(())
    };
    Ok(match action {
        OperadAction::Compose => {
            let (f, g) = payload::pair(payload::json(raw)?)?;
            let (f, g): (AnyOperadSeries, AnyOperadSeries) =
                (payload::typed(f, "series f")?, payload::typed(g, "series g")?);
            check(&f)?;
            check(&g)?;
            operad_out(&f.compose(&g)?)
        }
        OperadAction::Project => {
            let f: AnyOperadSeries = payload::typed(payload::json(raw)?, "operad series")?;
            check(&f)?;
            series_out(&match f {
                AnyOperadSeries::Assoc(a) => assoc_to_series(&a),
                AnyOperadSeries::Dup(d) => order_project(&d),
            })
        }
        OperadAction::Section => {
            let f = payload::series(raw)?;
            operad_out(&match operad {
                OperadArg::Assoc => AnyOperadSeries::Assoc(series_to_assoc(&f)?),
                OperadArg::Dup => AnyOperadSeries::Dup(section_embed(&f)?),
            })
        }
        OperadAction::Alpha => {
            if !matches!(operad, OperadArg::Dup) {
                return Err(Error::Parse("alpha is defined for --operad dup only".into()));
            }
            let n = degree.ok_or_else(|| Error::Parse("alpha needs --degree".into()))?;
            let a = alpha_series(&payload::tree_series(raw)?, n);
            tree_series_out(&a)
        }
    })
}

fn operad_out(f: &AnyOperadSeries) -> Out {
    let v = serde_json::to_value(f).expect("operad series serialize");
    let coeffs = v["coeffs"]
        .as_object()
        .map(|m| m.iter().map(|(k, c)| (k.clone(), c.as_str().unwrap_or_default().to_string())).collect::<Vec<_>>());
    Out { text: aligned(&coeffs.unwrap_or_default()), json: v }
}

fn tree_series_out(a: &TreeSeries) -> Out {
    let map: serde_json::Map<String, serde_json::Value> =
        a.iter().map(|(t, c)| (t.to_string(), serde_json::to_value(c).expect("scalars serialize"))).collect();
    Out { json: serde_json::Value::Object(map), text: sum_text(a) }
}
