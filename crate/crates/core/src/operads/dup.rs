//! Planar binary trees, the over and under products, and the operad Dup of
//! duplicial algebras, whose arity-n operations are trees with n internal
//! vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::operad::{check_index, total_by_partials, NsOperad};
use crate::basis::{Graded, MulBasis};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

use PlanarBinaryTree::{Leaf, Node};

impl PlanarBinaryTree {
    pub fn leaf() -> Self {
        Leaf
    }

    pub fn node(l: PlanarBinaryTree, r: PlanarBinaryTree) -> Self {
        Node(Box::new(l), Box::new(r))
    }

    /// The tree with one internal vertex, written Y.
    pub fn y() -> Self {
        Self::node(Leaf, Leaf)
    }

    /// Left comb with n internal vertices: Y, Y∕Y, (Y∕Y)∕Y, …
    pub fn left_comb(n: usize) -> Self {
        (1..n).fold(if n == 0 { Leaf } else { Self::y() }, |t, _| Self::node(t, Leaf))
    }

    /// Number of internal vertices.
    pub fn internal(&self) -> usize {
        match self {
            Leaf => 0,
            Node(l, r) => 1 + l.internal() + r.internal(),
        }
    }

    /// All trees with n internal vertices, in a fixed order.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in Self::all(k) {
                for r in Self::all(n - 1 - k) {
                    out.push(Self::node(l.clone(), r));
                }
            }
        }
        out
    }

    fn replace_leftmost_leaf(&self, t: &Self) -> Self {
        match self {
            Leaf => t.clone(),
            Node(l, r) => Node(Box::new(l.replace_leftmost_leaf(t)), r.clone()),
        }
    }

    fn replace_rightmost_leaf(&self, s: &Self) -> Self {
        match self {
            Leaf => s.clone(),
            Node(l, r) => Node(l.clone(), Box::new(r.replace_rightmost_leaf(s))),
        }
    }

    /// Substitutes s_1, …, s_n for the internal vertices, numbered in
    /// in-order: a vertex with subtrees L, R becomes L′ ∕ (s_k ∖ R′).
    pub fn substitute(&self, subs: &[PlanarBinaryTree]) -> Result<Self> {
        if subs.len() != self.internal() {
            return Err(Error::OutOfRange(format!(
                "{} trees substituted into {} internal vertices",
                subs.len(),
                self.internal()
            )));
        }
        Ok(self.eval(subs))
    }

    fn eval(&self, subs: &[PlanarBinaryTree]) -> Self {
        match self {
            Leaf => Leaf,
            Node(l, r) => {
                let k = l.internal();
                over(&l.eval(&subs[..k]), &under(&subs[k], &r.eval(&subs[k + 1..])))
            }
        }
    }
}

/// t ∕ s: the root of t grafted onto the left-most leaf of s.
pub fn over(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> PlanarBinaryTree {
    s.replace_leftmost_leaf(t)
}

/// t ∖ s: the root of s grafted onto the right-most leaf of t.
pub fn under(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> PlanarBinaryTree {
    t.replace_rightmost_leaf(s)
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => f.write_str("o"),
            Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlanarBinaryTree {
    type Err = Error;

    /// Parses "o" and "(L R)".
    fn from_str(s: &str) -> Result<Self> {
        fn parse(chars: &[char], pos: &mut usize) -> Option<PlanarBinaryTree> {
            while chars.get(*pos) == Some(&' ') {
                *pos += 1;
            }
            match chars.get(*pos)? {
                'o' => {
                    *pos += 1;
                    Some(Leaf)
                }
                '(' => {
                    *pos += 1;
                    let l = parse(chars, pos)?;
                    let r = parse(chars, pos)?;
                    while chars.get(*pos) == Some(&' ') {
                        *pos += 1;
                    }
                    if chars.get(*pos) != Some(&')') {
                        return None;
                    }
                    *pos += 1;
                    Some(PlanarBinaryTree::node(l, r))
                }
                _ => None,
            }
        }
        let chars: Vec<char> = s.trim().chars().collect();
        let mut pos = 0;
        match parse(&chars, &mut pos) {
            Some(t) if pos == chars.len() => Ok(t),
            _ => Err(Error::Parse(format!("cannot parse planar binary tree {s:?}"))),
        }
    }
}

impl Serialize for PlanarBinaryTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PlanarBinaryTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl Graded for PlanarBinaryTree {
    fn degree(&self) -> usize {
        self.internal()
    }
}

/// Tree-expanded series multiply under ∕, with the leaf as unit.
impl MulBasis for PlanarBinaryTree {
    fn unit() -> Self {
        Leaf
    }
    fn mul(&self, other: &Self) -> Self {
        over(self, other)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dup;

impl NsOperad for Dup {
    type Op = PlanarBinaryTree;

    fn name(&self) -> &'static str {
        "dup"
    }

    fn arity(&self, a: &PlanarBinaryTree) -> usize {
        a.internal()
    }

    fn identity(&self) -> PlanarBinaryTree {
        PlanarBinaryTree::y()
    }

    fn basis(&self, arity: usize) -> Vec<PlanarBinaryTree> {
        if arity == 0 {
            Vec::new()
        } else {
            PlanarBinaryTree::all(arity)
        }
    }

    fn parse_op(&self, s: &str) -> Result<PlanarBinaryTree> {
        let t: PlanarBinaryTree = s.parse()?;
        if t.internal() == 0 {
            return Err(Error::Parse("Dup operations need at least one internal vertex".into()));
        }
        Ok(t)
    }

    fn partial_compose(&self, a: &PlanarBinaryTree, i: usize, b: &PlanarBinaryTree) -> Result<PlanarBinaryTree> {
        let k = a.internal();
        check_index(k, i)?;
        let subs: Vec<PlanarBinaryTree> =
            (1..=k).map(|j| if j == i { b.clone() } else { PlanarBinaryTree::y() }).collect();
        a.substitute(&subs)
    }

    fn total_compose(&self, a: &PlanarBinaryTree, bs: &[PlanarBinaryTree]) -> Result<PlanarBinaryTree> {
        a.substitute(bs)
    }
}

/// Which duplicial identity to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuplicialAxiom {
    /// (x∕y)∕z = x∕(y∕z)
    OverAssociative,
    /// (x∖y)∖z = x∖(y∖z)
    UnderAssociative,
    /// (x∕y)∖z = x∕(y∖z)
    Mixed,
}

pub fn duplicial_holds(
    axiom: DuplicialAxiom,
    x: &PlanarBinaryTree,
    y: &PlanarBinaryTree,
    z: &PlanarBinaryTree,
) -> bool {
    match axiom {
        DuplicialAxiom::OverAssociative => over(&over(x, y), z) == over(x, &over(y, z)),
        DuplicialAxiom::UnderAssociative => under(&under(x, y), z) == under(x, &under(y, z)),
        DuplicialAxiom::Mixed => under(&over(x, y), z) == over(x, &under(y, z)),
    }
}

/// All three duplicial identities on every triple of trees with 1..=max
/// internal vertices each.
pub fn check_duplicial(max_degree: usize) -> crate::hopf::CheckOutcome {
    let all: Vec<PlanarBinaryTree> = (1..=max_degree).flat_map(PlanarBinaryTree::all).collect();
    let mut count = 0;
    for axiom in [DuplicialAxiom::OverAssociative, DuplicialAxiom::UnderAssociative, DuplicialAxiom::Mixed] {
        for x in &all {
            for y in &all {
                for z in &all {
                    if !duplicial_holds(axiom, x, y, z) {
                        return Err(format!("{axiom:?} fails on ({x}, {y}, {z})"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// γ computed through partial compositions, for cross-checking the direct substitution.
pub fn dup_total_by_partials(a: &PlanarBinaryTree, bs: &[PlanarBinaryTree]) -> Result<PlanarBinaryTree> {
    total_by_partials(&Dup, a, bs)
}
