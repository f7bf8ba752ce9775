use num_traits::Zero;

use super::intmat::{solve, subsets};
use super::{convex_hull, IntegralPolytope, LatticePoint, ShiftPattern};
use crate::{Error, Rat, Result};

/// All `m` in `Z^n` with `<m, eta_j> >= -offsets[j] + shifts[j]` for every `j`,
/// sorted lexicographically.
pub fn lattice_points(
    n: usize,
    normals: &[Vec<i64>],
    offsets: &[i64],
    shifts: &ShiftPattern,
) -> Result<Vec<LatticePoint>> {
    if offsets.len() != normals.len() {
        return Err(Error::DimensionMismatch { expected: normals.len(), found: offsets.len() });
    }
    if shifts.shifts.len() != normals.len() {
        return Err(Error::DimensionMismatch { expected: normals.len(), found: shifts.shifts.len() });
    }
    if let Some(bad) = normals.iter().find(|eta| eta.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
    }
    if n == 0 {
        return Ok(vec![LatticePoint::origin(0)]);
    }
    if !positively_spanning(n, normals)? {
        return Err(Error::Unbounded);
    }
    let bounds: Vec<i64> = offsets.iter().zip(&shifts.shifts).map(|(c, s)| s - c).collect();
    let Some((lo, hi)) = bounding_box(n, normals, &bounds) else {
        return Ok(Vec::new());
    };
    let inside = |m: &[i64]| {
        normals
            .iter()
            .zip(&bounds)
            .all(|(eta, &b)| super::intmat::dot(m, eta) >= b)
    };
    Ok(box_scan(&lo, &hi, inside))
}

/// Integer points of a polytope by scanning the box spanned by its vertices.
pub fn brute_force_points(poly: &IntegralPolytope) -> Vec<LatticePoint> {
    let n = poly.dim_ambient();
    let verts = poly.vertices();
    let lo: Vec<i64> = (0..n).map(|i| verts.iter().map(|v| v.0[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|i| verts.iter().map(|v| v.0[i]).max().unwrap()).collect();
    if poly.is_full_dimensional() {
        let facets = poly.facets();
        return box_scan(&lo, &hi, |m| facets.iter().all(|f| super::intmat::dot(m, &f.normal) >= -f.offset));
    }
    box_scan(&lo, &hi, |m| {
        let mut with = verts.to_vec();
        with.push(LatticePoint(m.to_vec()));
        convex_hull(&with).map(|h| h.vertices() == verts).unwrap_or(false)
    })
}

fn box_scan(lo: &[i64], hi: &[i64], mut keep: impl FnMut(&[i64]) -> bool) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return out;
    }
    let mut cur = lo.to_vec();
    loop {
        if keep(&cur) {
            out.push(LatticePoint(cur.clone()));
        }
        let Some(i) = (0..cur.len()).rev().find(|&i| cur[i] < hi[i]) else {
            return out;
        };
        cur[i] += 1;
        cur[i + 1..].copy_from_slice(&lo[i + 1..]);
    }
}

/// The normals positively span `R^n` iff the origin is interior to their hull.
fn positively_spanning(n: usize, normals: &[Vec<i64>]) -> Result<bool> {
    let mut pts: Vec<LatticePoint> = normals.iter().map(|v| LatticePoint(v.clone())).collect();
    if pts.is_empty() {
        return Ok(false);
    }
    pts.push(LatticePoint::origin(n));
    let hull = convex_hull(&pts)?;
    Ok(hull.is_full_dimensional() && hull.facets().iter().all(|f| f.offset > 0))
}

/// Integer box containing the region `<m, eta_j> >= bounds[j]`, from its
/// vertices; `None` when the region is empty.
fn bounding_box(n: usize, normals: &[Vec<i64>], bounds: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
    let mut lo: Option<Vec<Rat>> = None;
    let mut hi: Option<Vec<Rat>> = None;
    for s in subsets(normals.len(), n) {
        let a: Vec<Vec<i64>> = s.iter().map(|&j| normals[j].clone()).collect();
        let b: Vec<Rat> = s.iter().map(|&j| crate::rat(bounds[j])).collect();
        let Some(x) = solve(&a, &b) else { continue };
        let feasible = normals.iter().zip(bounds).all(|(eta, &bj)| {
            let v = x.iter().zip(eta).fold(Rat::zero(), |acc, (xi, &e)| acc + xi * crate::rat(e));
            v >= crate::rat(bj)
        });
        if !feasible {
            continue;
        }
        match (&mut lo, &mut hi) {
            (Some(l), Some(h)) => {
                for i in 0..n {
                    if x[i] < l[i] {
                        l[i] = x[i].clone();
                    }
                    if x[i] > h[i] {
                        h[i] = x[i].clone();
                    }
                }
            }
            _ => {
                lo = Some(x.clone());
                hi = Some(x);
            }
        }
    }
    let to_int = |r: Rat| i64::try_from(r.to_integer()).expect("coordinate overflow");
    Some((
        lo?.into_iter().map(|r| to_int(r.ceil())).collect(),
        hi?.into_iter().map(|r| to_int(r.floor())).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{minkowski_sum, ShiftRule};

    fn heptagon() -> IntegralPolytope {
        let v: Vec<LatticePoint> = [[0, 0], [0, 1], [1, 3], [2, 4], [4, 4], [5, 3], [4, 2]]
            .iter()
            .map(|&p| LatticePoint::from(p))
            .collect();
        convex_hull(&v).unwrap()
    }

    fn half() -> Rat {
        Rat::new(1.into(), 2.into())
    }

    #[test]
    fn heptagon_counts() {
        let p = heptagon();
        let normals = p.normals();
        let offsets: Vec<i64> = p.facets().iter().map(|f| f.offset).collect();
        let zero = ShiftPattern::zero(normals.len());
        assert_eq!(lattice_points(2, &normals, &offsets, &zero).unwrap().len(), 16);

        let d = [half(), half()];
        let t = ShiftPattern::new(ShiftRule::Translate, &d, &normals);
        assert_eq!(lattice_points(2, &normals, &offsets, &t).unwrap().len(), 12);
        let s = ShiftPattern::new(ShiftRule::Direction, &d, &normals);
        assert_eq!(lattice_points(2, &normals, &offsets, &s).unwrap().len(), 11);

        let d = [crate::rat(0), -half()];
        let t = ShiftPattern::new(ShiftRule::Translate, &d, &normals);
        assert_eq!(lattice_points(2, &normals, &offsets, &t).unwrap().len(), 12);
    }

    #[test]
    fn shifted_segment_keeps_one_point() {
        let p = heptagon();
        let normals = p.normals();
        let seg = convex_hull(&[LatticePoint::from([0, 0]), LatticePoint::from([1, 1])]).unwrap();
        let offsets = super::super::support_offsets(&seg, &normals);
        let d = [half(), half()];
        let t = ShiftPattern::new(ShiftRule::Translate, &d, &normals);
        assert_eq!(lattice_points(2, &normals, &offsets, &t).unwrap(), vec![LatticePoint::from([1, 1])]);
    }

    #[test]
    fn sorted_and_matches_box_scan() {
        let p = heptagon();
        let normals = p.normals();
        let offsets: Vec<i64> = p.facets().iter().map(|f| f.offset).collect();
        let pts = lattice_points(2, &normals, &offsets, &ShiftPattern::zero(7)).unwrap();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(pts, brute_force_points(&p));
    }

    #[test]
    fn lower_dimensional_points() {
        let seg = convex_hull(&[LatticePoint::from([0, 0]), LatticePoint::from([2, 2])]).unwrap();
        assert_eq!(
            brute_force_points(&seg),
            vec![LatticePoint::from([0, 0]), LatticePoint::from([1, 1]), LatticePoint::from([2, 2])]
        );
        let t = convex_hull(&[LatticePoint::from([0, 0]), LatticePoint::from([1, 0]), LatticePoint::from([0, 1])]).unwrap();
        let sum = minkowski_sum(&seg, &t).unwrap();
        assert_eq!(brute_force_points(&sum).len(), 9);
    }

    #[test]
    fn unbounded_and_empty() {
        let normals = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(lattice_points(2, &normals, &[0, 0], &ShiftPattern::zero(2)), Err(Error::Unbounded));
        let normals = vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]];
        // 1 <= x <= 0 is empty.
        assert!(lattice_points(2, &normals, &[-1, 0, 0, 0], &ShiftPattern::zero(4)).unwrap().is_empty());
        assert_eq!(lattice_points(0, &[], &[], &ShiftPattern::zero(0)).unwrap().len(), 1);
    }
}
