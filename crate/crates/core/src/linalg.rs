//! Exact linear algebra over the rationals.

use crate::scalar::Scalar;

/// Rank of a matrix given by rows, by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c).is_some_and(|x| !x.is_zero())) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            let x = rows[i].get(c).cloned().unwrap_or_default();
            if x.is_zero() {
                continue;
            }
            let f = x.checked_div(&pivot).expect("nonzero pivot");
            for k in c..cols {
                let sub = &f * rows[r].get(k).cloned().unwrap_or_default();
                if k < rows[i].len() {
                    rows[i][k] -= &sub;
                }
            }
        }
        r += 1;
    }
    r
}
