use std::collections::{BTreeSet, HashMap};

use super::intmat::{cross, primitive, rank, subsets};
use super::{Facet, IntegralPolytope, LatticePoint, MAX_DIM};
use crate::{Error, Result};

/// Convex hull of a finite point set.
///
/// Full-dimensional hulls get their facet description; lower-dimensional ones
/// carry vertices only. Points are inserted one at a time and the vertex set
/// is refreshed whenever a point falls outside the current hull.
pub fn convex_hull(points: &[LatticePoint]) -> Result<IntegralPolytope> {
    let first = points.first().ok_or(Error::EmptyInput("convex hull of no points"))?;
    let n = first.dim();
    if let Some(bad) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
    }
    if n > MAX_DIM {
        return Err(Error::UnsupportedDimension(n));
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let d = affine_rank(&pts);
    if d == 0 {
        return Ok(IntegralPolytope::point(pts.swap_remove(0)));
    }
    if d < n {
        return lower_dimensional(n, d, &pts);
    }

    let mut verts = initial_simplex(&pts, n);
    let mut facets = facets_of(&verts, n);
    for p in &pts {
        if facets.iter().all(|f| f.contains(p)) {
            continue;
        }
        verts.push(p.clone());
        facets = facets_of(&verts, n);
        verts.retain(|v| is_vertex(v, &facets, n));
    }
    Ok(IntegralPolytope::from_parts(n, n, verts, facets))
}

fn differences(pts: &[LatticePoint]) -> Vec<Vec<i64>> {
    pts[1..].iter().map(|p| (p - &pts[0]).0).collect()
}

fn affine_rank(pts: &[LatticePoint]) -> usize {
    if pts.len() < 2 {
        return 0;
    }
    rank(&differences(pts))
}

fn initial_simplex(pts: &[LatticePoint], n: usize) -> Vec<LatticePoint> {
    let mut simplex = vec![pts[0].clone()];
    for p in &pts[1..] {
        simplex.push(p.clone());
        if affine_rank(&simplex) < simplex.len() - 1 {
            simplex.pop();
        }
        if simplex.len() == n + 1 {
            break;
        }
    }
    simplex
}

fn facets_of(verts: &[LatticePoint], n: usize) -> Vec<Facet> {
    let mut found = BTreeSet::new();
    for s in subsets(verts.len(), n) {
        let base = &verts[s[0]];
        let spans: Vec<Vec<i64>> = s[1..].iter().map(|&i| (&verts[i] - base).0).collect();
        let normal = cross(&spans, n);
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let normal = primitive(&normal);
        let level = base.dot(&normal);
        let values = verts.iter().map(|v| v.dot(&normal));
        let (lo, hi) = values.fold((level, level), |(lo, hi), x| (lo.min(x), hi.max(x)));
        if lo == level {
            found.insert(Facet { normal, offset: -level });
        } else if hi == level {
            found.insert(Facet { normal: normal.iter().map(|x| -x).collect(), offset: level });
        }
    }
    found.into_iter().collect()
}

fn is_vertex(p: &LatticePoint, facets: &[Facet], n: usize) -> bool {
    let tight: Vec<Vec<i64>> = facets
        .iter()
        .filter(|f| f.is_tight(p))
        .map(|f| f.normal.clone())
        .collect();
    tight.len() >= n && rank(&tight) == n
}

/// Projects onto `d` coordinates that stay independent on the affine hull,
/// takes the hull there and lifts the vertices back.
fn lower_dimensional(n: usize, d: usize, pts: &[LatticePoint]) -> Result<IntegralPolytope> {
    let diffs = differences(pts);
    let mut coords: Vec<usize> = Vec::with_capacity(d);
    for c in 0..n {
        coords.push(c);
        let cols: Vec<Vec<i64>> = diffs
            .iter()
            .map(|row| coords.iter().map(|&j| row[j]).collect())
            .collect();
        if rank(&cols) < coords.len() {
            coords.pop();
        }
        if coords.len() == d {
            break;
        }
    }
    let project = |p: &LatticePoint| LatticePoint(coords.iter().map(|&j| p.0[j]).collect());
    let lift: HashMap<LatticePoint, &LatticePoint> = pts.iter().map(|p| (project(p), p)).collect();
    let projected: Vec<LatticePoint> = lift.keys().cloned().collect();
    let low = convex_hull(&projected)?;
    let verts = low.vertices().iter().map(|v| lift[v].clone()).collect();
    Ok(IntegralPolytope::from_parts(n, d, verts, Vec::new()))
}
