//! Finite posets, canonical forms up to isomorphism, intervals, products and
//! factorization into indecomposable bounded factors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset on 0..n as a dense relation matrix, le[i*n + j] = (i ≤ j).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    le: Vec<bool>,
}

impl Poset {
    /// Builds from a full relation matrix, checking the poset axioms.
    pub fn from_relation(n: usize, le: Vec<bool>) -> Result<Self> {
        if le.len() != n * n {
            return Err(Error::Poset(format!("relation matrix has {} entries, expected {}", le.len(), n * n)));
        }
        let p = Poset { n, le };
        for i in 0..n {
            if !p.leq(i, i) {
                return Err(Error::Poset(format!("not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && p.leq(i, j) && p.leq(j, i) {
                    return Err(Error::Poset(format!("not antisymmetric at {i}, {j}")));
                }
                if p.leq(i, j) && (0..n).any(|k| p.leq(j, k) && !p.leq(i, k)) {
                    return Err(Error::Poset(format!("not transitive at {i}, {j}")));
                }
            }
        }
        Ok(p)
    }

    /// Builds from a predicate the caller guarantees to be a partial order.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut le = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                le[i * n + j] = i == j || f(i, j);
            }
        }
        Poset { n, le }
    }

    /// Transitive-reflexive closure of a covering (or any acyclic) relation.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Poset(format!("cover ({a}, {b}) out of range for {n} elements")));
            }
            le[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if le[i * n + j] && le[j * n + i] {
                    return Err(Error::Poset(format!("cycle through {j} and {i}")));
                }
            }
        }
        Ok(Poset { n, le })
    }

    pub fn chain(k: usize) -> Self {
        Self::from_fn_unchecked(k, |i, j| i <= j)
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_fn_unchecked(k, |_, _| false)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&i| (0..self.n).all(|j| self.leq(i, j)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&i| (0..self.n).all(|j| self.leq(j, i)))
    }

    pub fn is_bounded(&self) -> bool {
        self.minimum().is_some() && self.maximum().is_some()
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) && !(0..self.n).any(|k| self.lt(i, k) && self.lt(k, j))
    }

    /// All covering pairs (i, j), i ⋖ j.
    pub fn cover_relation(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.covers(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The subposet on the listed elements, relabeled 0.. in list order.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        Self::from_fn_unchecked(elems.len(), |a, b| self.leq(elems[a], elems[b]))
    }

    /// The interval [x, y].
    pub fn interval(&self, x: usize, y: usize) -> Result<Poset> {
        if x >= self.n || y >= self.n {
            return Err(Error::Poset(format!("element out of range for {} elements", self.n)));
        }
        if !self.leq(x, y) {
            return Err(Error::Poset(format!("{x} is not below {y}")));
        }
        let elems: Vec<usize> = (0..self.n).filter(|&z| self.leq(x, z) && self.leq(z, y)).collect();
        Ok(self.induced(&elems))
    }

    /// Length of the longest chain, counted in cover steps.
    pub fn height(&self) -> usize {
        let order = self.linear_extension();
        let mut best = vec![0usize; self.n];
        let mut top = 0;
        for &j in &order {
            for &i in &order {
                if i == j {
                    break;
                }
                if self.lt(i, j) {
                    best[j] = best[j].max(best[i] + 1);
                }
            }
            top = top.max(best[j]);
        }
        top
    }

    /// Elements sorted so that i < j in the order implies i comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).collect();
        let below: Vec<usize> = (0..self.n).map(|j| (0..self.n).filter(|&i| self.leq(i, j)).count()).collect();
        v.sort_by_key(|&i| below[i]);
        v
    }

    /// Down-sets as bitmasks, in increasing mask order.
    pub fn down_sets(&self) -> Result<Vec<u64>> {
        if self.n > 24 {
            return Err(Error::Poset(format!("down-set enumeration limited to 24 elements, got {}", self.n)));
        }
        let below: Vec<u64> =
            (0..self.n).map(|j| (0..self.n).filter(|&i| self.leq(i, j)).fold(0u64, |m, i| m | 1 << i)).collect();
        Ok((0u64..1 << self.n).filter(|&m| (0..self.n).all(|j| m >> j & 1 == 0 || below[j] & !m == 0)).collect())
    }

    pub fn class(&self) -> PosetClass {
        PosetClass::of(self)
    }

    /// Strict up- and down-neighbour lists.
    fn neighbours(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.n;
        let up = (0..n).map(|i| (0..n).filter(|&j| self.lt(i, j)).collect()).collect();
        let down = (0..n).map(|j| (0..n).filter(|&i| self.lt(i, j)).collect()).collect();
        (up, down)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_covers(f, self)
    }
}

fn write_covers(f: &mut fmt::Formatter<'_>, p: &Poset) -> fmt::Result {
    write!(f, "{}:", p.n)?;
    for (k, (a, b)) in p.cover_relation().into_iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}<{b}")?;
    }
    Ok(())
}

/// P × Q with the componentwise order; (p, q) is element p·|Q| + q.
pub fn direct_product(p: &Poset, q: &Poset) -> Poset {
    let m = q.n;
    Poset::from_fn_unchecked(p.n * m, |a, b| p.leq(a / m, b / m) && q.leq(a % m, b % m))
}

/// J(P), the down-sets of P ordered by inclusion.
pub fn ideal_lattice(p: &Poset) -> Result<Poset> {
    let sets = p.down_sets()?;
    Ok(Poset::from_fn_unchecked(sets.len(), |a, b| sets[a] & !sets[b] == 0))
}

/// Isomorphism class of a poset, stored as its canonical relabeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PosetClass(Poset);

impl PosetClass {
    pub fn of(p: &Poset) -> Self {
        PosetClass(canonical_form(p))
    }

    pub fn poset(&self) -> &Poset {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.n
    }

    pub fn is_empty(&self) -> bool {
        self.0.n == 0
    }
}

impl Ord for PosetClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.n.cmp(&other.0.n).then_with(|| self.0.le.cmp(&other.0.le))
    }
}

impl PartialOrd for PosetClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_covers(f, &self.0)
    }
}

impl fmt::Debug for PosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PosetClass {
    type Err = Error;

    /// Parses "n:a<b,c<d" (covering pairs, any acyclic relation accepted).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Poset(format!("cannot parse poset {s:?}"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut covers = Vec::new();
        for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = pair.split_once('<').ok_or_else(bad)?;
            covers.push((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?));
        }
        Ok(PosetClass::of(&Poset::from_covers(n, &covers)?))
    }
}

impl Serialize for PosetClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PosetClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical relabeling by individualization–refinement: equitable colour
/// refinement on the comparability structure, then branching over the first
/// non-singleton cell, keeping the lexicographically least relation matrix
/// over all leaves. Automorphisms found at equal leaves prune the branching.
pub fn canonical_form(p: &Poset) -> Poset {
    let n = p.n;
    if n <= 1 {
        return p.clone();
    }
    let (up, down) = p.neighbours();
    let mut search = Search { p, up: &up, down: &down, best: None, autos: Vec::new() };
    let colours = search.refine(vec![0; n]);
    search.descend(colours, &[]);
    let (_, best_matrix) = search.best.expect("search reaches a leaf");
    Poset { n, le: best_matrix }
}

struct Search<'a> {
    p: &'a Poset,
    up: &'a [Vec<usize>],
    down: &'a [Vec<usize>],
    best: Option<(Vec<usize>, Vec<bool>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Refines a colouring to the coarsest equitable one; colours are ranks
    /// of label-free signatures, so the result is isomorphism-invariant.
    fn refine(&self, mut colours: Vec<usize>) -> Vec<usize> {
        let n = self.p.n;
        let mut count = distinct(&colours);
        loop {
            let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut u: Vec<usize> = self.up[v].iter().map(|&w| colours[w]).collect();
                    let mut d: Vec<usize> = self.down[v].iter().map(|&w| colours[w]).collect();
                    u.sort_unstable();
                    d.sort_unstable();
                    (colours[v], u, d)
                })
                .collect();
            let mut keys: Vec<&(usize, Vec<usize>, Vec<usize>)> = sigs.iter().collect();
            keys.sort();
            keys.dedup();
            colours = sigs.iter().map(|s| keys.binary_search(&s).expect("present")).collect();
            let c = keys.len();
            if c == count {
                return colours;
            }
            count = c;
        }
    }

    fn descend(&mut self, colours: Vec<usize>, prefix: &[usize]) {
        let n = self.p.n;
        let mut sizes = vec![0usize; n];
        for &c in &colours {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colours);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.same_orbit(prefix, u, v)) {
                continue;
            }
            explored.push(v);
            let split: Vec<usize> = (0..n).map(|u| 2 * colours[u] + usize::from(u != v)).collect();
            let colours = self.refine(rank(&split));
            let mut next = prefix.to_vec();
            next.push(v);
            self.descend(colours, &next);
        }
    }

    /// Whether u and v are in one orbit of the group generated by the known
    /// automorphisms that fix the prefix pointwise.
    fn same_orbit(&self, prefix: &[usize], u: usize, v: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self.autos.iter().filter(|g| prefix.iter().all(|&x| g[x] == x)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.p.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for g in &gens {
                let y = g[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn leaf(&mut self, colours: &[usize]) {
        let n = self.p.n;
        let mut inv = vec![0usize; n];
        for (v, &c) in colours.iter().enumerate() {
            inv[c] = v;
        }
        let matrix: Vec<bool> = (0..n * n).map(|k| self.p.leq(inv[k / n], inv[k % n])).collect();
        match &self.best {
            None => self.best = Some((colours.to_vec(), matrix)),
            Some((best_lab, best_m)) => match matrix.cmp(best_m) {
                Ordering::Less => self.best = Some((colours.to_vec(), matrix)),
                Ordering::Equal => {
                    let mut best_inv = vec![0usize; n];
                    for (v, &c) in best_lab.iter().enumerate() {
                        best_inv[c] = v;
                    }
                    let auto: Vec<usize> = (0..n).map(|v| best_inv[colours[v]]).collect();
                    self.autos.push(auto);
                }
                Ordering::Greater => {}
            },
        }
    }
}

fn distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

fn rank(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    v.iter().map(|x| s.binary_search(x).expect("present")).collect()
}

/// Splits a bounded poset into indecomposable direct factors (each with at
/// least two elements; a one-element poset gives the empty list).
pub fn factorize(p: &Poset) -> Result<Vec<Poset>> {
    let zero = p.minimum().ok_or_else(|| Error::Poset("poset has no minimum".into()))?;
    p.maximum().ok_or_else(|| Error::Poset("poset has no maximum".into()))?;
    let mut out = Vec::new();
    factor_into(p, zero, &mut out);
    Ok(out)
}

fn factor_into(p: &Poset, zero: usize, out: &mut Vec<Poset>) {
    if p.n <= 1 {
        return;
    }
    let atoms: Vec<usize> = (0..p.n).filter(|&a| p.covers(zero, a)).collect();
    let comps = atom_components(p, &atoms);
    let r = comps.len();
    if r > 1 {
        assert!(r < 32, "too many atom components to factor");
        // Subsets containing component 0, by increasing size, give a minimal factor first.
        let mut masks: Vec<u32> = (0u32..1 << (r - 1)).map(|m| m << 1 | 1).filter(|&m| m != (1 << r) - 1).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let side: Vec<bool> = {
                let mut s = vec![false; p.n];
                for (k, comp) in comps.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        for &a in comp {
                            s[a] = true;
                        }
                    }
                }
                s
            };
            if let Some((a, b)) = try_split(p, &atoms, &side) {
                let (pa, pb) = (p.induced(&a), p.induced(&b));
                let za = pa.minimum().expect("factor has a minimum");
                let zb = pb.minimum().expect("factor has a minimum");
                factor_into(&pa, za, out);
                factor_into(&pb, zb, out);
                return;
            }
        }
    }
    out.push(p.clone());
}

/// Groups atoms that cannot lie in different direct factors: two atoms from
/// different factors always have a join whose lower interval is a square.
fn atom_components(p: &Poset, atoms: &[usize]) -> Vec<Vec<usize>> {
    let k = atoms.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (atoms[i], atoms[j]);
            let ub: Vec<usize> = (0..p.n).filter(|&z| p.leq(a, z) && p.leq(b, z)).collect();
            let least = ub.iter().copied().find(|&z| ub.iter().all(|&w| p.leq(z, w)));
            let square = least.is_some_and(|j| (0..p.n).filter(|&z| p.leq(z, j)).count() == 4);
            if !square {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, &a) in atoms.iter().enumerate().take(k) {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(a);
    }
    groups.into_values().collect()
}

/// Tests P ≅ A × B where A (resp. B) is the set of elements whose atoms all
/// lie on the chosen side (resp. the other side), via x ↦ (max of A below x,
/// max of B below x).
fn try_split(p: &Poset, atoms: &[usize], side: &[bool]) -> Option<(Vec<usize>, Vec<usize>)> {
    let below_atoms = |x: usize| atoms.iter().copied().filter(move |&a| p.leq(a, x));
    let a_set: Vec<usize> = (0..p.n).filter(|&x| below_atoms(x).all(|a| side[a])).collect();
    let b_set: Vec<usize> = (0..p.n).filter(|&x| below_atoms(x).all(|a| !side[a])).collect();
    if a_set.len() * b_set.len() != p.n || a_set.len() < 2 || b_set.len() < 2 {
        return None;
    }
    let max_below = |set: &[usize], x: usize| -> Option<usize> {
        let under: Vec<usize> = set.iter().copied().filter(|&y| p.leq(y, x)).collect();
        under.iter().copied().find(|&y| under.iter().all(|&z| p.leq(z, y)))
    };
    let mut image = Vec::with_capacity(p.n);
    let mut hit = vec![false; p.n];
    for x in 0..p.n {
        let ia = a_set.binary_search(&max_below(&a_set, x)?).ok()?;
        let ib = b_set.binary_search(&max_below(&b_set, x)?).ok()?;
        let slot = ia * b_set.len() + ib;
        if hit[slot] {
            return None;
        }
        hit[slot] = true;
        image.push((a_set[ia], b_set[ib]));
    }
    for x in 0..p.n {
        for y in 0..p.n {
            let prod = p.leq(image[x].0, image[y].0) && p.leq(image[x].1, image[y].1);
            if prod != p.leq(x, y) {
                return None;
            }
        }
    }
    Some((a_set, b_set))
}

/// All posets on n elements up to isomorphism.
pub fn all_posets(n: usize) -> Vec<PosetClass> {
    assert!(n <= 6, "poset enumeration limited to 6 elements");
    // Every poset has a natural labeling, so strict relations inside the upper triangle suffice.
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = std::collections::BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                le[i * n + j] = true;
            }
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !le[i * n + j] || (0..n).all(|k| !le[j * n + k] || le[i * n + k])));
        if transitive {
            out.insert(PosetClass::of(&Poset { n, le }));
        }
    }
    out.into_iter().collect()
}
