//! Exact lattice and polytope geometry: convex hulls with facet descriptions,
//! Minkowski sums, shifted lattice-point enumeration, volumes and mixed volumes.

mod hull;
pub(crate) mod intmat;
mod lattice;
mod volume;

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Signed;

use crate::{Error, Rat, Result};

pub use hull::convex_hull;
pub use lattice::{brute_force_points, lattice_points};
pub use volume::{euclidean_volume, mixed_volume};

/// Largest ambient dimension accepted by the hull code.
pub const MAX_DIM: usize = 4;

/// An exponent vector of a Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        LatticePoint(coords.into())
    }

    pub fn origin(n: usize) -> Self {
        LatticePoint(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        intmat::dot(&self.0, v)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint(v.to_vec())
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Half-space `<u, normal> >= -offset` with a primitive inner normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.dot(&self.normal) >= -self.offset
    }

    pub fn is_tight(&self, p: &LatticePoint) -> bool {
        p.dot(&self.normal) == -self.offset
    }
}

/// A lattice polytope stored by its vertices, plus its facets when it is
/// full-dimensional. Vertices are sorted lexicographically and facets by normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralPolytope {
    dim_ambient: usize,
    affine_dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
}

impl IntegralPolytope {
    pub(crate) fn from_parts(
        dim_ambient: usize,
        affine_dim: usize,
        mut vertices: Vec<LatticePoint>,
        mut facets: Vec<Facet>,
    ) -> Self {
        vertices.sort();
        vertices.dedup();
        facets.sort();
        IntegralPolytope { dim_ambient, affine_dim, vertices, facets }
    }

    /// The polytope consisting of a single lattice point.
    pub fn point(p: LatticePoint) -> Self {
        let n = p.dim();
        // A point is full-dimensional only in dimension zero, where there are no facets.
        IntegralPolytope::from_parts(n, 0, vec![p], Vec::new())
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim_ambient
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn normals(&self) -> Vec<Vec<i64>> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }

    pub fn translate(&self, by: &LatticePoint) -> IntegralPolytope {
        let vertices = self.vertices.iter().map(|v| v + by).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet { normal: f.normal.clone(), offset: f.offset - by.dot(&f.normal) })
            .collect();
        IntegralPolytope::from_parts(self.dim_ambient, self.affine_dim, vertices, facets)
    }

    /// Integer points of the polytope, by the same box scan used for bases.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        brute_force_points(self)
    }
}

/// `conv{a + b : a vertex of A, b vertex of B}`.
pub fn minkowski_sum(a: &IntegralPolytope, b: &IntegralPolytope) -> Result<IntegralPolytope> {
    if a.dim_ambient != b.dim_ambient {
        return Err(Error::DimensionMismatch { expected: a.dim_ambient, found: b.dim_ambient });
    }
    let sums: Vec<LatticePoint> = a
        .vertices
        .iter()
        .flat_map(|u| b.vertices.iter().map(move |v| u + v))
        .collect();
    convex_hull(&sums)
}

/// Minkowski sum of a nonempty list of polytopes.
pub fn minkowski_sum_all<'a>(
    polys: impl IntoIterator<Item = &'a IntegralPolytope>,
) -> Result<IntegralPolytope> {
    let mut iter = polys.into_iter();
    let first = iter.next().ok_or(Error::EmptyInput("Minkowski sum of no polytopes"))?;
    iter.try_fold(first.clone(), |acc, p| minkowski_sum(&acc, p))
}

/// Offsets `a_j = -min_v <v, eta_j>` of `poly` against the given normals, so that
/// `poly = {u : <u, eta_j> >= -a_j}` whenever the normal fan of the reference
/// polytope refines that of `poly`.
pub fn support_offsets(poly: &IntegralPolytope, normals: &[Vec<i64>]) -> Vec<i64> {
    normals
        .iter()
        .map(|eta| -poly.vertices.iter().map(|v| v.dot(eta)).min().expect("polytope has a vertex"))
        .collect()
}

/// How a rational shift `delta` modifies the facet inequalities of a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ShiftRule {
    /// Lattice points of the translate `R + delta`: `s_j = ceil(<delta, eta_j>)`.
    #[default]
    Translate,
    /// Strict inequalities on the facets with `<delta, eta_j> > 0`: `s_j` in `{0, 1}`.
    /// Depends only on the direction of `delta`.
    Direction,
}

/// Per-facet integer shifts: a basis point `m` must satisfy `<m, eta_j> >= -c_j + s_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftPattern {
    pub shifts: Vec<i64>,
}

impl ShiftPattern {
    pub fn zero(facets: usize) -> Self {
        ShiftPattern { shifts: vec![0; facets] }
    }

    pub fn new(rule: ShiftRule, delta: &[Rat], normals: &[Vec<i64>]) -> Self {
        match rule {
            ShiftRule::Translate => Self::translate(delta, normals),
            ShiftRule::Direction => shift_pattern(delta, normals),
        }
    }

    /// `s_j = ceil(<delta, eta_j>)`.
    pub fn translate(delta: &[Rat], normals: &[Vec<i64>]) -> Self {
        let shifts = normals
            .iter()
            .map(|eta| {
                let v = rat_dot(delta, eta).ceil();
                i64::try_from(v.to_integer()).expect("shift overflow")
            })
            .collect();
        ShiftPattern { shifts }
    }

    pub fn is_zero(&self) -> bool {
        self.shifts.iter().all(|&s| s == 0)
    }
}

/// The `{0,1}` pattern of facets whose inner normal has positive pairing with `delta`.
pub fn shift_pattern(delta: &[Rat], normals: &[Vec<i64>]) -> ShiftPattern {
    let shifts = normals
        .iter()
        .map(|eta| i64::from(rat_dot(delta, eta).is_positive()))
        .collect();
    ShiftPattern { shifts }
}

fn rat_dot(delta: &[Rat], eta: &[i64]) -> Rat {
    delta
        .iter()
        .zip(eta)
        .map(|(d, &e)| d * crate::rat(e))
        .fold(crate::rat(0), |acc, x| acc + x)
}
