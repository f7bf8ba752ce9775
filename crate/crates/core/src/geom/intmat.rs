//! Small dense integer kernels used by the polytope code.

use num_integer::Integer;

use crate::Rat;

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
pub(crate) fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Rank of an integer matrix, fraction-free elimination in `i128`.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let (a, b) = (m[rank][col], m[r][col]);
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            let pivot = m[rank].clone();
            for (x, p) in m[r][col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                *x = *x * fa - p * fb;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix by cofactor expansion (tiny sizes only).
pub(crate) fn det(m: &[Vec<i64>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0] as i128,
        2 => m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128,
        n => {
            let mut total = 0i128;
            for c in 0..n {
                if m[0][c] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let term = m[0][c] as i128 * det(&minor);
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Vector orthogonal to `n - 1` vectors of `Z^n` (generalized cross product).
/// Zero exactly when the vectors are linearly dependent.
pub(crate) fn cross(vectors: &[Vec<i64>], n: usize) -> Vec<i64> {
    debug_assert_eq!(vectors.len() + 1, n);
    (0..n)
        .map(|i| {
            let minor: Vec<Vec<i64>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = det(&minor);
            let d = if i % 2 == 0 { d } else { -d };
            i64::try_from(d).expect("normal vector overflow")
        })
        .collect()
}

/// Solves the square system `a x = b` over the rationals; `None` when singular.
pub(crate) fn solve(a: &[Vec<i64>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r: Vec<Rat> = row.iter().map(|&x| crate::rat(x)).collect();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !num_traits::Zero::is_zero(&m[r][col]))?;
        m.swap(col, p);
        let inv = num_traits::Inv::inv(m[col][col].clone());
        for x in &mut m[col][col..=n] {
            *x = &*x * &inv;
        }
        let pivot = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || num_traits::Zero::is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..=n].iter_mut().zip(&pivot[col..=n]) {
                *x -= &f * p;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal() {
        let v = vec![vec![1, 2, 3], vec![0, 1, -1]];
        let c = cross(&v, 3);
        assert_eq!(dot(&c, &v[0]), 0);
        assert_eq!(dot(&c, &v[1]), 0);
        assert_ne!(c, vec![0, 0, 0]);
        assert_eq!(cross(&[], 1), vec![1]);
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2], vec![2, 5]]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(det(&[vec![2, 0, 0], vec![0, 3, 0], vec![1, 1, 1]]), 6);
        assert_eq!(primitive(&[4, -6]), vec![2, -3]);
    }

    #[test]
    fn solves_small_system() {
        let x = solve(&[vec![1, 1], vec![1, -1]], &[crate::rat(3), crate::rat(1)]).unwrap();
        assert_eq!(x, vec![crate::rat(2), crate::rat(1)]);
        assert!(solve(&[vec![1, 1], vec![2, 2]], &[crate::rat(0), crate::rat(0)]).is_none());
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(subsets(7, 3).len(), 35);
    }
}
