use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};

use super::intmat::{det, rank};
use super::{minkowski_sum_all, Facet, IntegralPolytope, LatticePoint};
use crate::{Error, Rat, Result};

/// Lebesgue volume; zero for polytopes that are not full-dimensional.
pub fn euclidean_volume(poly: &IntegralPolytope) -> Rat {
    if !poly.is_full_dimensional() {
        return Rat::zero();
    }
    let n = poly.dim_ambient();
    let verts = poly.vertices();
    let all: Vec<usize> = (0..verts.len()).collect();
    let mut total: i128 = 0;
    for simplex in triangulate(&all, n, verts, poly.facets()) {
        let base = &verts[simplex[0]];
        let edges: Vec<Vec<i64>> = simplex[1..].iter().map(|&i| (&verts[i] - base).0).collect();
        total += det(&edges).abs();
    }
    let factorial: i128 = (1..=n as i128).product();
    Rat::new(total.into(), factorial.into())
}

/// Pulling triangulation of the face spanned by `face` (indices into `verts`),
/// of dimension `d`, from its first vertex.
fn triangulate(face: &[usize], d: usize, verts: &[LatticePoint], facets: &[Facet]) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let mut subfaces = BTreeSet::new();
    for h in facets {
        let sub: Vec<usize> = face.iter().copied().filter(|&i| h.is_tight(&verts[i])).collect();
        if sub.is_empty() || sub.contains(&apex) || affine_rank(&sub, verts) + 1 != d {
            continue;
        }
        subfaces.insert(sub);
    }
    let mut out = Vec::new();
    for sub in subfaces {
        for mut simplex in triangulate(&sub, d - 1, verts, facets) {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
    out
}

fn affine_rank(idx: &[usize], verts: &[LatticePoint]) -> usize {
    if idx.len() < 2 {
        return 0;
    }
    let base = &verts[idx[0]];
    rank(&idx[1..].iter().map(|&i| (&verts[i] - base).0).collect::<Vec<_>>())
}

/// Mixed volume of `n` polytopes in `R^n`, normalized so that `MV(P,...,P) = n! Vol(P)`.
pub fn mixed_volume(polys: &[IntegralPolytope]) -> Result<u64> {
    let n = polys.len();
    if let Some(bad) = polys.iter().find(|p| p.dim_ambient() != n) {
        return Err(Error::WrongCount { expected: bad.dim_ambient(), found: n });
    }
    if n == 0 {
        return Ok(1);
    }
    let mut total = Rat::zero();
    for mask in 1u32..(1 << n) {
        let chosen = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &polys[i]);
        let vol = euclidean_volume(&minkowski_sum_all(chosen)?);
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    debug_assert!(total.is_integer() && !total.is_negative());
    Ok(total.to_integer().to_u64().expect("mixed volume is a nonnegative integer"))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull;

    fn poly(v: &[&[i64]]) -> IntegralPolytope {
        convex_hull(&v.iter().map(|p| LatticePoint(p.to_vec())).collect::<Vec<_>>()).unwrap()
    }

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p.into(), q.into())
    }

    #[test]
    fn volumes() {
        assert_eq!(euclidean_volume(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), r(1, 1));
        assert_eq!(euclidean_volume(&poly(&[&[0, 0], &[2, 1], &[1, 2]])), r(3, 2));
        assert_eq!(euclidean_volume(&poly(&[&[0, 0], &[0, 1], &[1, 3], &[3, 3], &[4, 2]])), r(13, 2));
        assert_eq!(euclidean_volume(&poly(&[&[0, 0], &[1, 1]])), r(0, 1));
        let cube: Vec<Vec<i64>> = (0..8).map(|m| vec![m & 1, m >> 1 & 1, m >> 2 & 1]).collect();
        let cube: Vec<&[i64]> = cube.iter().map(Vec::as_slice).collect();
        assert_eq!(euclidean_volume(&poly(&cube)), r(1, 1));
        assert_eq!(euclidean_volume(&poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), r(1, 6));
    }

    #[test]
    fn mixed_volumes_of_running_example() {
        let p1 = poly(&[&[0, 0], &[1, 1]]);
        let p2 = poly(&[&[0, 0], &[2, 1], &[1, 2]]);
        let p3 = poly(&[&[0, 0], &[2, 1], &[0, 1]]);
        assert_eq!(mixed_volume(&[p2.clone(), p3.clone()]).unwrap(), 4);
        assert_eq!(mixed_volume(&[p1.clone(), p3.clone()]).unwrap(), 2);
        assert_eq!(mixed_volume(&[p1.clone(), p2.clone()]).unwrap(), 2);
        let simplex = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[simplex.clone(), simplex.clone()]).unwrap(), 1);
        let point = poly(&[&[3, 1]]);
        assert_eq!(mixed_volume(&[p2, point]).unwrap(), 0);
        assert!(matches!(mixed_volume(&[p1]), Err(Error::WrongCount { .. })));
    }
}
