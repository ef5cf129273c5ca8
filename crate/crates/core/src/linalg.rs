//! Dense linear algebra over GF(p): ranks, kernels and span tests.
//!
//! Used by the verification oracles, so it shares nothing with the Gröbner
//! machinery.

use crate::field::{Fp, PrimeField};

/// Row-reduces in place and returns the pivot columns.
pub fn row_reduce(k: &PrimeField, rows: &mut [Vec<Fp>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = k.inv(rows[r][c]).expect("pivot");
        for v in rows[r].iter_mut() {
            *v = k.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = k.neg(row[c]);
            for (a, &b) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !b.is_zero() {
                    *a = k.add(*a, k.mul(f, b));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(k: &PrimeField, mut rows: Vec<Vec<Fp>>) -> usize {
    row_reduce(k, &mut rows).len()
}

/// A basis of `{v : Σ_j rows[i][j] v_j = 0 for all i}`.
pub fn kernel(k: &PrimeField, mut rows: Vec<Vec<Fp>>, ncols: usize) -> Vec<Vec<Fp>> {
    if rows.is_empty() {
        return (0..ncols).map(|j| unit(ncols, j)).collect();
    }
    let pivots = row_reduce(k, &mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Fp::ZERO; ncols];
            v[f] = Fp::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(rows[r][f]);
            }
            v
        })
        .collect()
}

fn unit(n: usize, j: usize) -> Vec<Fp> {
    let mut v = vec![Fp::ZERO; n];
    v[j] = Fp::ONE;
    v
}

/// Whether `v` lies in the row space of `rows`.
pub fn in_span(k: &PrimeField, rows: &[Vec<Fp>], v: &[Fp]) -> bool {
    let base = rank(k, rows.to_vec());
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(k, ext) == base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(k: &PrimeField, rows: &[&[i64]]) -> Vec<Vec<Fp>> {
        rows.iter().map(|r| r.iter().map(|&x| k.elem(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let k = PrimeField::new(7).unwrap();
        let a = m(&k, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&k, a.clone()), 2);
        let ker = kernel(&k, a.clone(), 3);
        assert_eq!(ker.len(), 1);
        for row in &a {
            let s = row.iter().zip(&ker[0]).fold(Fp::ZERO, |acc, (&x, &y)| k.add(acc, k.mul(x, y)));
            assert!(s.is_zero());
        }
        assert!(in_span(&k, &a, &[k.elem(1), k.elem(3), k.elem(4)]));
        assert!(!in_span(&k, &a, &[k.elem(0), k.elem(0), k.elem(1)]));
    }
}
