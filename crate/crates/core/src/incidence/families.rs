//! The boolean, set-partition and forest-ideal poset families.

use serde::{Deserialize, Serialize};

use super::poset::{ideal_lattice, Poset, PosetClass};
use crate::combinat::set_partitions;
use crate::error::{Error, Result};
use crate::trees_hopf::{Forest, Shape};

pub const MAX_PARTITION_N: usize = 7;

/// Subsets of {1..n} under inclusion.
pub fn boolean_lattice(n: usize) -> Result<Poset> {
    if n > 16 {
        return Err(Error::OutOfRange(format!("boolean lattice limited to n ≤ 16, got {n}")));
    }
    Ok(Poset::from_fn_unchecked(1 << n, |a, b| a & !b == 0))
}

/// Set partitions of {1..n} under refinement, finest at the bottom.
pub fn partition_lattice(n: usize) -> Result<Poset> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::OutOfRange(format!("partition lattice needs 1 ≤ n ≤ {MAX_PARTITION_N}, got {n}")));
    }
    let parts = set_partitions(n);
    let refines = |a: &[usize], b: &[usize]| (0..n).all(|i| (0..i).all(|j| a[i] != a[j] || b[i] == b[j]));
    Ok(Poset::from_fn_unchecked(parts.len(), |i, j| refines(&parts[i], &parts[j])))
}

/// The vertex poset of a forest, roots minimal.
pub fn forest_poset(f: &Forest) -> Poset {
    let shape = Shape::of_forest(f);
    let anc = |v: usize, w: usize| {
        let mut cur = Some(w);
        while let Some(c) = cur {
            if c == v {
                return true;
            }
            cur = shape.parent[c];
        }
        false
    };
    Poset::from_fn_unchecked(shape.len(), anc)
}

/// J(P) for the vertex poset of a forest: its trunks under inclusion.
pub fn forest_ideals(f: &Forest) -> Result<Poset> {
    ideal_lattice(&forest_poset(f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Boolean(usize),
    Partitions(usize),
    ForestIdeals(Forest),
}

impl Family {
    pub fn poset(&self) -> Result<Poset> {
        match self {
            Family::Boolean(n) => boolean_lattice(*n),
            Family::Partitions(n) => partition_lattice(*n),
            Family::ForestIdeals(f) => forest_ideals(f),
        }
    }

    pub fn class(&self) -> Result<PosetClass> {
        Ok(self.poset()?.class())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees_hopf::RootedTree;

    #[test]
    fn family_examples() {
        let b2 = boolean_lattice(2).unwrap();
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.class(), Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap().class());
        let sp3 = partition_lattice(3).unwrap();
        assert_eq!(sp3.len(), 5);
        // rgs [0,1,2] is the all-singletons partition, [0,0,0] the single block.
        let parts = set_partitions(3);
        let bottom = parts.iter().position(|p| *p == vec![0, 1, 2]).unwrap();
        let top = parts.iter().position(|p| *p == vec![0, 0, 0]).unwrap();
        assert_eq!(sp3.minimum(), Some(bottom));
        assert_eq!(sp3.maximum(), Some(top));
        let l2 = Forest::tree(RootedTree::ladder(2));
        assert_eq!(forest_ideals(&l2).unwrap().class(), Poset::chain(3).class());
        assert!(partition_lattice(8).is_err());
        let sizes: Vec<usize> = (1..=6).map(|n| partition_lattice(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn boolean_intervals_are_boolean() {
        let b4 = boolean_lattice(4).unwrap();
        let (lo, hi) = (0b0001, 0b1011);
        assert_eq!(b4.interval(lo, hi).unwrap().class(), boolean_lattice(2).unwrap().class());
    }
}
