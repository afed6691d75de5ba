//! Small enumerators and integer helpers shared across modules.

use num_bigint::BigInt;

use crate::scalar::Scalar;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

pub fn factorial_q(n: usize) -> Scalar {
    Scalar::from_bigint(factorial(n))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial_q(n: usize, k: usize) -> Scalar {
    Scalar::from_bigint(binomial(n, k))
}

/// (Σk)! / Πk_i!, the multinomial coefficient of a multiplicity vector.
pub fn multinomial(k: &[usize]) -> BigInt {
    let total: usize = k.iter().sum();
    let mut acc = factorial(total);
    for &ki in k {
        acc /= factorial(ki);
    }
    acc
}

/// Integer partitions of n as non-increasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of n into exactly m parts.
pub fn partitions_with_parts(n: usize, m: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().filter(|p| p.len() == m).collect()
}

/// Multiplicity vector k with k[i] = number of parts equal to i (index 0 unused).
pub fn multiplicities(parts: &[usize], n: usize) -> Vec<usize> {
    let mut k = vec![0; n + 1];
    for &p in parts {
        k[p] += 1;
    }
    k
}

/// Compositions of n into exactly k non-negative parts.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            go(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// Compositions of n into positive parts (any number of parts).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            go(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Set partitions of {0..n-1} as restricted growth strings: a[i] is the
/// block index of i and a[i] ≤ 1 + max(a[..i]).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            go(i + 1, n, blocks.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Block sizes of a restricted growth string.
pub fn block_sizes(rgs: &[usize]) -> Vec<usize> {
    let nb = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
    let mut sizes = vec![0; nb];
    for &b in rgs {
        sizes[b] += 1;
    }
    sizes
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Sign of a permutation given as an image vector.
pub fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
