use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::basis::{Graded, MulBasis};
use crate::combinat::factorial;
use crate::error::{Error, Result};

/// A non-planar rooted tree, stored as its canonical bracket string:
/// "[" followed by the canonical strings of the children in sorted order,
/// then "]". The single vertex is "[]".
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree(String);

/// A commutative product of rooted trees; the empty forest is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Forest(Vec<RootedTree>);

/// Splits a bracket string into its top-level groups, validating balance.
fn top_level_groups(s: &str) -> Result<Vec<&str>> {
    let bad = || Error::Parse(format!("malformed tree string {s:?}"));
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            ']' => {
                if depth == 0 {
                    return Err(bad());
                }
                depth -= 1;
                if depth == 0 {
                    groups.push(&s[start..=i]);
                }
            }
            _ => return Err(bad()),
        }
    }
    if depth != 0 {
        return Err(bad());
    }
    Ok(groups)
}

impl RootedTree {
    /// The single vertex •.
    pub fn dot() -> Self {
        RootedTree("[]".to_string())
    }

    /// Ladder with n vertices.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1);
        RootedTree(format!("{}{}", "[".repeat(n), "]".repeat(n)))
    }

    /// Root with n leaf children (n = 2 is the cherry).
    pub fn corolla(n: usize) -> Self {
        bplus(&Forest::from_trees(vec![Self::dot(); n]))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let groups = top_level_groups(&s)?;
        if groups.len() != 1 {
            return Err(Error::Parse(format!("expected exactly one tree in {s:?}")));
        }
        Self::canonicalize(groups[0])
    }

    fn canonicalize(s: &str) -> Result<Self> {
        let inner = &s[1..s.len() - 1];
        let kids = top_level_groups(inner)?.into_iter().map(Self::canonicalize).collect::<Result<Vec<_>>>()?;
        Ok(bplus(&Forest::from_trees(kids)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices.
    pub fn vertices(&self) -> usize {
        self.0.len() / 2
    }

    /// The forest of subtrees hanging from the root.
    pub fn children(&self) -> Forest {
        let inner = &self.0[1..self.0.len() - 1];
        let kids = top_level_groups(inner)
            .expect("canonical string is balanced")
            .into_iter()
            .map(|g| RootedTree(g.to_string()))
            .collect();
        Forest(kids)
    }

    /// σ(t) = |Aut t|.
    pub fn symmetry_factor(&self) -> BigInt {
        self.children().symmetry_factor()
    }
}

/// B₊: grafts the components of a forest onto a new common root.
pub fn bplus(f: &Forest) -> RootedTree {
    let mut s = String::with_capacity(2 * f.degree() + 2);
    s.push('[');
    for t in &f.0 {
        s.push_str(&t.0);
    }
    s.push(']');
    RootedTree(s)
}

pub fn symmetry_factor(t: &RootedTree) -> BigInt {
    t.symmetry_factor()
}

impl Forest {
    pub fn one() -> Self {
        Forest(Vec::new())
    }

    pub fn from_trees(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        Forest(trees)
    }

    pub fn tree(t: RootedTree) -> Self {
        Forest(vec![t])
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The single tree of a one-component forest.
    pub fn as_tree(&self) -> Option<&RootedTree> {
        match self.0.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Distinct trees with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(&RootedTree, usize)> {
        let mut out: Vec<(&RootedTree, usize)> = Vec::new();
        for t in &self.0 {
            match out.last_mut() {
                Some((u, k)) if *u == t => *k += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    /// Π m_i! σ(t_i)^{m_i} over the distinct components t_i.
    pub fn symmetry_factor(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (t, m) in self.multiplicities() {
            acc *= factorial(m) * t.symmetry_factor().pow(m as u32);
        }
        acc
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Forest::one());
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let trees =
            top_level_groups(&compact)?.into_iter().map(RootedTree::canonicalize).collect::<Result<Vec<_>>>()?;
        Ok(Forest::from_trees(trees))
    }
}

impl Graded for RootedTree {
    fn degree(&self) -> usize {
        self.vertices()
    }
}

impl Graded for Forest {
    fn degree(&self) -> usize {
        self.0.iter().map(|t| t.vertices()).sum()
    }
}

impl MulBasis for Forest {
    fn unit() -> Self {
        Forest::one()
    }
    fn mul(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Forest::from_trees(v)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self.0.iter().map(|t| t.as_str()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RootedTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl FromStr for Forest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(RootedTree);
string_serde!(Forest);

/// All rooted trees with n vertices, in canonical order.
pub fn trees_of_degree(n: usize) -> Vec<RootedTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<RootedTree> = BTreeSet::from([RootedTree::dot()]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for t in &level {
            for u in super::grafting::graft_all_positions(&RootedTree::dot(), t) {
                next.insert(u);
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All forests of total degree n, in canonical order.
pub fn forests_of_degree(n: usize) -> Vec<Forest> {
    let mut by_degree: Vec<BTreeSet<Forest>> = vec![BTreeSet::from([Forest::one()])];
    let trees: Vec<Vec<RootedTree>> = (0..=n).map(trees_of_degree).collect();
    for d in 1..=n {
        let mut set = BTreeSet::new();
        for k in 1..=d {
            for t in &trees[k] {
                for f in &by_degree[d - k] {
                    set.insert(f.mul(&Forest::tree(t.clone())));
                }
            }
        }
        by_degree.push(set);
    }
    by_degree.pop().unwrap_or_default().into_iter().collect()
}

/// Parent-pointer view of a forest, used for cut enumeration and grafting.
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl Shape {
    pub fn of_forest(f: &Forest) -> Shape {
        let mut shape = Shape { parent: Vec::new(), children: Vec::new() };
        for t in f.trees() {
            shape.push_tree(t, None);
        }
        shape
    }

    pub fn of_tree(t: &RootedTree) -> Shape {
        Self::of_forest(&Forest::tree(t.clone()))
    }

    fn push_tree(&mut self, t: &RootedTree, parent: Option<usize>) -> usize {
        let v = self.parent.len();
        self.parent.push(parent);
        self.children.push(Vec::new());
        if let Some(p) = parent {
            self.children[p].push(v);
        }
        for c in t.children().trees() {
            self.push_tree(c, Some(v));
        }
        v
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    fn subtree(&self, v: usize, mask: u64) -> RootedTree {
        let kids = self.children[v].iter().filter(|&&c| mask >> c & 1 == 1).map(|&c| self.subtree(c, mask)).collect();
        bplus(&Forest::from_trees(kids))
    }

    /// The forest induced on a vertex subset whose members' parents are
    /// either in the subset or absent from it (crowns and trunks).
    pub fn induced(&self, mask: u64) -> Forest {
        let roots = (0..self.len())
            .filter(|&v| mask >> v & 1 == 1)
            .filter(|&v| self.parent[v].is_none_or(|p| mask >> p & 1 == 0))
            .map(|v| self.subtree(v, mask))
            .collect();
        Forest::from_trees(roots)
    }

    /// Whether the subset is closed under taking parents.
    pub fn is_trunk(&self, mask: u64) -> bool {
        (0..self.len()).all(|v| mask >> v & 1 == 0 || self.parent[v].is_none_or(|p| mask >> p & 1 == 1))
    }

    /// Bitmask of v together with all of its descendants.
    pub fn descendants(&self, v: usize) -> u64 {
        let mut m = 1u64 << v;
        for &c in &self.children[v] {
            m |= self.descendants(c);
        }
        m
    }

    pub fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(RootedTree::parse("[]").unwrap(), RootedTree::dot());
        let a = RootedTree::parse("[[][[]]]").unwrap();
        let b = RootedTree::parse("[[[]][]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(RootedTree::parse("[[][]]").unwrap(), RootedTree::corolla(2));
        assert!(RootedTree::parse("[[]").is_err());
        assert!(RootedTree::parse("[][]").is_err());
        assert!(RootedTree::parse("[x]").is_err());
        assert_eq!(a.to_string().parse::<RootedTree>().unwrap(), a);
    }

    #[test]
    fn symmetry_factors() {
        assert_eq!(RootedTree::dot().symmetry_factor(), BigInt::from(1));
        assert_eq!(RootedTree::corolla(2).symmetry_factor(), BigInt::from(2));
        assert_eq!(RootedTree::ladder(3).symmetry_factor(), BigInt::from(1));
        assert_eq!(RootedTree::corolla(3).symmetry_factor(), BigInt::from(6));
    }

    #[test]
    fn bplus_examples() {
        assert_eq!(bplus(&Forest::one()), RootedTree::dot());
        assert_eq!(bplus(&Forest::tree(RootedTree::dot())), RootedTree::ladder(2));
        assert_eq!(bplus(&Forest::parse("[] []").unwrap()), RootedTree::corolla(2));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| trees_of_degree(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
        let total: usize = (1..=5).map(|n| trees_of_degree(n).len()).sum();
        assert_eq!(total, 17);
        let forests: Vec<usize> = (0..=5).map(|n| forests_of_degree(n).len()).collect();
        assert_eq!(forests, vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn forest_strings() {
        let f = Forest::parse("[[]] []").unwrap();
        assert_eq!(f.to_string(), "[[]] []");
        assert_eq!(Forest::parse("1").unwrap(), Forest::one());
        assert_eq!(Forest::one().to_string(), "1");
        assert_eq!(f.degree(), 3);
    }
}
