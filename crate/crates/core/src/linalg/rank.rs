use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;


use crate::{Error, Rat, Result};

/// Rank of a rational matrix by fraction-free elimination on integer rows.
pub fn rank_q(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).filter(|r| !is_zero_row(r)).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        rest.par_iter_mut().for_each(|row| {
            if row[col].is_zero() {
                return;
            }
            let g = pivot[col].gcd(&row[col]);
            let (fp, fr) = (&pivot[col] / &g, &row[col] / &g);
            for c in col..ncols {
                row[c] = &row[c] * &fp - &pivot[c] * &fr;
            }
            primitive_row(row);
        });
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&den / x.denom())).collect()
}

fn is_zero_row(row: &[BigInt]) -> bool {
    row.iter().all(Zero::is_zero)
}

fn primitive_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x /= &g);
    }
}

/// Determinant by fraction-free (Bareiss) elimination with full pivoting on
/// the lightest nonzero entry.
pub fn symbolic_det<T: super::Scalar>(mut a: Vec<Vec<T>>) -> Result<T> {
    let n = a.len();
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: row.len() });
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        let pivot = (k..n)
            .flat_map(|r| (k..n).map(move |c| (r, c)))
            .filter(|&(r, c)| !a[r][c].is_zero())
            .min_by_key(|&(r, c)| a[r][c].weight());
        let Some((pr, pc)) = pivot else {
            return Ok(T::zero());
        };
        if pr != k {
            a.swap(pr, k);
            negate = !negate;
        }
        if pc != k {
            a.iter_mut().for_each(|row| row.swap(pc, k));
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        rest.par_iter_mut().for_each(|row| {
            let lead = std::mem::replace(&mut row[k], T::zero());
            for j in k + 1..n {
                let mut v = pivot_row[k].mul(&row[j]);
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&lead.mul(&pivot_row[j]));
                }
                row[j] = v.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        });
        prev = a[k][k].clone();
    }
    let det = if n == 0 { T::one() } else { a[n - 1][n - 1].clone() };
    Ok(if negate { det.neg() } else { det })
}

/// Incremental test of linear independence over the rationals.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    basis: Vec<(usize, Vec<Rat>)>,
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds `v` if it is independent of the vectors added so far.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        for (p, b) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        v.iter_mut().for_each(|x| *x *= &inv);
        self.basis.push((p, v));
        true
    }
}
