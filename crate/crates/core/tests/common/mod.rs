#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use toric_elim::{LatticePoint, SparseSystem};

pub type Rat = BigRational;

pub fn int(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

pub fn frac(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}

pub fn points(raw: &[&[i64]]) -> Vec<LatticePoint> {
    raw.iter().map(|p| LatticePoint::new(p.to_vec())).collect()
}

/// The two-variable system with three supports used throughout.
pub fn running_supports() -> Vec<Vec<LatticePoint>> {
    vec![
        points(&[&[0, 0], &[1, 1]]),
        points(&[&[0, 0], &[2, 1], &[1, 2]]),
        points(&[&[0, 0], &[2, 1], &[0, 1]]),
    ]
}

pub fn running_system(delta: Vec<Rat>) -> SparseSystem {
    SparseSystem::new(2, running_supports()).unwrap().with_delta(delta).unwrap()
}

/// Dense support `{0, ..., d}` in one variable.
pub fn segment(d: i64) -> Vec<LatticePoint> {
    (0..=d).map(|i| LatticePoint::new(vec![i])).collect()
}

/// Lattice points of the simplex `d * conv(0, e1, e2)`.
pub fn dense_triangle(d: i64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for x in 0..=d {
        for y in 0..=d - x {
            out.push(LatticePoint::new(vec![x, y]));
        }
    }
    out
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &[Vec<Rat>]) -> Rat {
    if a.is_empty() {
        return Rat::one();
    }
    let mut total = Rat::zero();
    for j in 0..a.len() {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * cofactor_det(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

/// Sylvester matrix of `f = sum f[i] x^i` and `g = sum g[i] x^i`.
pub fn sylvester(f: &[Rat], g: &[Rat]) -> Vec<Vec<Rat>> {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dg {
        let mut row = vec![Rat::zero(); size];
        for (i, c) in f.iter().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![Rat::zero(); size];
        for (i, c) in g.iter().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}
