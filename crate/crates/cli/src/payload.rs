//! Reading command inputs: inline text, --input files or stdin, in either a
//! compact text form or JSON.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use fdb_core::operads::{PlanarBinaryTree, TreeSeries};
use fdb_core::trees_hopf::Forest;
use fdb_core::{CommMonomial, Error, LinComb, Result, Scalar, TruncSeries, Word};
use serde::de::DeserializeOwned;
use serde_json::Value;

/// The raw payload: the positional argument if given, else the --input
/// file, else stdin.
pub fn read(inline: Option<&str>, file: Option<&Path>) -> Result<String> {
    if let Some(s) = inline {
        return Ok(s.to_string());
    }
    if let Some(p) = file {
        return std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())));
    }
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

pub fn json(raw: &str) -> Result<Value> {
    serde_json::from_str(raw.trim()).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

pub fn typed<T: DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("invalid {what}: {e}")))
}

pub fn series(raw: &str) -> Result<TruncSeries> {
    typed(json(raw)?, "series")
}

/// Two series given as {"f": ..., "g": ...} or [f, g].
pub fn series_pair(raw: &str) -> Result<(TruncSeries, TruncSeries)> {
    pair(json(raw)?).and_then(|(f, g)| Ok((typed(f, "series f")?, typed(g, "series g")?)))
}

pub fn pair(v: Value) -> Result<(Value, Value)> {
    match v {
        Value::Array(mut a) if a.len() == 2 => {
            let g = a.pop().expect("two elements");
            Ok((a.pop().expect("two elements"), g))
        }
        Value::Object(mut m) if m.len() == 2 && m.contains_key("f") && m.contains_key("g") => {
            Ok((m.remove("f").expect("checked"), m.remove("g").expect("checked")))
        }
        _ => Err(Error::Parse("expected {\"f\": ..., \"g\": ...} or a two-element array".into())),
    }
}

/// "1", "x3" or "x1^2*x3" (factors separated by '*' or spaces).
pub fn monomial_text(s: &str) -> Result<CommMonomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(CommMonomial::one());
    }
    let bad = || Error::Parse(format!("cannot parse monomial {s:?}"));
    let mut pairs = Vec::new();
    for factor in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|f| !f.is_empty()) {
        let body = factor.strip_prefix('x').ok_or_else(bad)?;
        let (g, e) = match body.split_once('^') {
            Some((g, e)) => (g, e.parse::<u32>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let g: usize = g.parse().map_err(|_| bad())?;
        if g == 0 || e == 0 {
            return Err(bad());
        }
        pairs.push((g, e));
    }
    if pairs.is_empty() {
        return Err(bad());
    }
    Ok(pairs.into_iter().map(|(g, e)| CommMonomial::power(g, e)).fold(CommMonomial::one(), |a, b| a.times(&b)))
}

/// "1" or a concatenation such as "x1x2x1".
pub fn word_text(s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::empty());
    }
    let bad = || Error::Parse(format!("cannot parse word {s:?}"));
    let body = s.strip_prefix('x').ok_or_else(bad)?;
    let letters = body.split('x').map(|n| n.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad));
    Ok(Word(letters.collect::<Result<_>>()?))
}

/// A commutative element: monomial text, a monomial map such as {"1":2},
/// or a list of {"basis", "coeff"} terms.
pub fn comm_element(raw: &str) -> Result<LinComb<CommMonomial>> {
    if let Ok(m) = monomial_text(raw) {
        return Ok(LinComb::basis(m));
    }
    match json(raw)? {
        v @ Value::Object(_) => Ok(LinComb::basis(typed(v, "monomial")?)),
        v => typed(v, "element"),
    }
}

/// A non-commutative element: word text, a word as a list of indices, or a
/// list of {"basis", "coeff"} terms.
pub fn word_element(raw: &str) -> Result<LinComb<Word>> {
    if let Ok(w) = word_text(raw) {
        return Ok(LinComb::basis(w));
    }
    match json(raw)? {
        Value::Array(a) if a.iter().all(Value::is_u64) => Ok(LinComb::basis(typed(Value::Array(a), "word")?)),
        v => typed(v, "element"),
    }
}

/// A forest in bracket notation, or a list of {"basis", "coeff"} terms.
pub fn forest_element(raw: &str) -> Result<LinComb<Forest>> {
    if let Ok(f) = Forest::parse(raw) {
        return Ok(LinComb::basis(f));
    }
    match json(raw)? {
        Value::String(s) => Ok(LinComb::basis(Forest::parse(&s)?)),
        v => typed(v, "element"),
    }
}

/// Generator values {"1": "2", ...}, bare or inside {"algebra", "values"}.
pub fn generator_values(raw: &str) -> Result<(Option<String>, BTreeMap<usize, Scalar>)> {
    let v = json(raw)?;
    match v {
        Value::Object(mut m) if m.contains_key("values") => {
            let algebra = match m.remove("algebra") {
                Some(Value::String(s)) => Some(s),
                None => None,
                Some(_) => return Err(Error::Parse("\"algebra\" must be a string".into())),
            };
            Ok((algebra, typed(m.remove("values").expect("checked"), "values")?))
        }
        v => Ok((None, typed(v, "values")?)),
    }
}

/// A tree series {"o": "1", "(o o)": "2", ...}.
pub fn tree_series(raw: &str) -> Result<TreeSeries> {
    let m: BTreeMap<String, Scalar> = typed(json(raw)?, "tree series")?;
    let mut out = TreeSeries::zero();
    for (k, c) in m {
        out.add_term(k.parse::<PlanarBinaryTree>()?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        assert_eq!(monomial_text("x1^2*x3").unwrap(), CommMonomial::power(1, 2).times(&CommMonomial::gen(3)));
        assert_eq!(monomial_text("x2 x2").unwrap(), CommMonomial::power(2, 2));
        assert!(monomial_text("y2").is_err());
        assert!(monomial_text("x0").is_err());
        assert_eq!(word_text("x1x12x1").unwrap(), Word(vec![1, 12, 1]));
        assert!(word_text("x1x").is_err());
        assert_eq!(word_element("[2,1]").unwrap(), LinComb::basis(Word(vec![2, 1])));
        assert_eq!(comm_element(r#"{"2":1}"#).unwrap(), LinComb::basis(CommMonomial::gen(2)));
    }

    #[test]
    fn pairs() {
        let (f, g) = pair(json(r#"{"g": 2, "f": 1}"#).unwrap()).unwrap();
        assert_eq!((f, g), (Value::from(1), Value::from(2)));
        assert!(pair(json("[1]").unwrap()).is_err());
    }
}
