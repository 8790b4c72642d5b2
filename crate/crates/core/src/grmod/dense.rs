//! Naive dense Gaussian elimination.
//!
//! Deliberately shares no code with [`super::linalg`]; it is the reference
//! the sparse engine and the Γ solver are checked against.

use crate::exactalg::Rational;

/// Row-reduces a copy of `rows` in place and returns the pivot columns.
fn eliminate(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
        rows.swap(r, k);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut().take(ncols) {
            *x = &*x * &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[k].iter_mut().zip(&pivot_row).take(ncols) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn dense_rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut work = rows.to_vec();
    eliminate(&mut work, ncols).len()
}

/// A basis of the null space, one vector per free column.
pub fn dense_kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut work = rows.to_vec();
    let pivots = eliminate(&mut work, ncols);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&work[r][f];
        }
        out.push(v);
    }
    out
}

pub fn dense_mul_vec(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_small() {
        let q = |n: i64| Rational::from(n);
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(dense_rank(&rows, 3), 1);
        let k = dense_kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dense_mul_vec(&rows, v).iter().all(Rational::is_zero));
        }
        assert_eq!(dense_rank(&[], 4), 0);
        assert_eq!(dense_kernel(&[], 2).len(), 2);
    }
}
