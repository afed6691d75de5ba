//! The operad Assoc, one operation p_n in each arity n.

use std::fmt;

use super::operad::{check_index, NsOperad};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Assoc;

/// The unique operation p_n of arity n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssocOp(pub usize);

impl fmt::Display for AssocOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

impl NsOperad for Assoc {
    type Op = AssocOp;

    fn name(&self) -> &'static str {
        "assoc"
    }

    fn arity(&self, a: &AssocOp) -> usize {
        a.0
    }

    fn identity(&self) -> AssocOp {
        AssocOp(1)
    }

    fn basis(&self, arity: usize) -> Vec<AssocOp> {
        if arity == 0 {
            Vec::new()
        } else {
            vec![AssocOp(arity)]
        }
    }

    fn parse_op(&self, s: &str) -> Result<AssocOp> {
        let digits = s.trim().strip_prefix('p').unwrap_or(s.trim());
        match digits.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(AssocOp(n)),
            _ => Err(Error::Parse(format!("expected an Assoc operation like \"p3\", got {s:?}"))),
        }
    }

    /// p_n ∘_i p_m = p_{n+m−1}.
    fn partial_compose(&self, a: &AssocOp, i: usize, b: &AssocOp) -> Result<AssocOp> {
        check_index(a.0, i)?;
        Ok(AssocOp(a.0 + b.0 - 1))
    }
}
