//! Sparse systems and their degree bookkeeping on the toric variety of `P + Q`.

use num_integer::Integer;
use num_traits::Zero;

use crate::geom::{
    convex_hull, lattice_points, minkowski_sum, minkowski_sum_all, support_offsets, IntegralPolytope,
    LatticePoint, ShiftPattern, ShiftRule,
};
use crate::poly::{LaurentPoly, VarSet};
use crate::{Error, Rat, Result};

/// Coefficients of a sparse system: symbolic `c_{i,b}` or concrete rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Generic,
    /// `values[i][t]` is the coefficient of the `t`-th point of support `i`.
    Concrete(Vec<Vec<Rat>>),
}

/// Laurent polynomial supports with coefficients, a shift `delta` and an
/// auxiliary polytope `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseSystem {
    n: usize,
    supports: Vec<Vec<LatticePoint>>,
    coefficients: Coefficients,
    delta: Vec<Rat>,
    q: IntegralPolytope,
    shift_rule: ShiftRule,
}

impl SparseSystem {
    /// A generic system with `delta = 0` and `Q` the origin.
    pub fn new(n: usize, supports: Vec<Vec<LatticePoint>>) -> Result<Self> {
        if supports.is_empty() {
            return Err(Error::EmptyInput("system without polynomials"));
        }
        for (i, a) in supports.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidSystem(format!("support {} is empty", i + 1)));
            }
            if let Some(bad) = a.iter().find(|b| b.dim() != n) {
                return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
            }
            let mut sorted = a.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != a.len() {
                return Err(Error::InvalidSystem(format!("support {} has repeated points", i + 1)));
            }
        }
        Ok(SparseSystem {
            n,
            supports,
            coefficients: Coefficients::Generic,
            delta: vec![Rat::zero(); n],
            q: IntegralPolytope::point(LatticePoint::origin(n)),
            shift_rule: ShiftRule::default(),
        })
    }

    pub fn with_coefficients(mut self, values: Vec<Vec<Rat>>) -> Result<Self> {
        if values.len() != self.supports.len() {
            return Err(Error::WrongCount { expected: self.supports.len(), found: values.len() });
        }
        for (i, (vals, a)) in values.iter().zip(&self.supports).enumerate() {
            if vals.len() != a.len() {
                return Err(Error::InvalidSystem(format!(
                    "polynomial {} has {} coefficients for {} support points",
                    i + 1,
                    vals.len(),
                    a.len()
                )));
            }
            if let Some(t) = vals.iter().position(Zero::is_zero) {
                return Err(Error::ZeroCoefficient(format!("c_{{{},{}}}", i + 1, a[t])));
            }
        }
        self.coefficients = Coefficients::Concrete(values);
        Ok(self)
    }

    pub fn with_delta(mut self, delta: Vec<Rat>) -> Result<Self> {
        if delta.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: delta.len() });
        }
        self.delta = delta;
        Ok(self)
    }

    pub fn with_q(mut self, points: &[LatticePoint]) -> Result<Self> {
        let q = convex_hull(points)?;
        if q.dim_ambient() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: q.dim_ambient() });
        }
        self.q = q;
        Ok(self)
    }

    pub fn with_shift_rule(mut self, rule: ShiftRule) -> Self {
        self.shift_rule = rule;
        self
    }

    /// Same supports, `delta`, `Q` and rule with generic coefficients.
    pub fn generic(&self) -> Self {
        SparseSystem { coefficients: Coefficients::Generic, ..self.clone() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.supports.len()
    }

    pub fn supports(&self) -> &[Vec<LatticePoint>] {
        &self.supports
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coefficients
    }

    pub fn delta(&self) -> &[Rat] {
        &self.delta
    }

    pub fn q(&self) -> &IntegralPolytope {
        &self.q
    }

    pub fn shift_rule(&self) -> ShiftRule {
        self.shift_rule
    }

    pub fn vars(&self) -> VarSet {
        VarSet::from_supports(&self.supports)
    }

    /// Concrete coefficient of `t^b` in polynomial `i`.
    pub fn coefficient(&self, i: usize, b: &LatticePoint) -> Option<Rat> {
        let Coefficients::Concrete(values) = &self.coefficients else {
            return None;
        };
        let t = self.supports[i].iter().position(|p| p == b)?;
        Some(values[i][t].clone())
    }

    /// The `i`-th polynomial, when coefficients are concrete.
    pub fn polynomial(&self, i: usize) -> Option<LaurentPoly> {
        let Coefficients::Concrete(values) = &self.coefficients else {
            return None;
        };
        Some(LaurentPoly::from_terms(self.supports[i].iter().cloned().zip(values[i].iter().cloned())))
    }

    pub fn newton_polytopes(&self) -> Result<Vec<IntegralPolytope>> {
        self.supports.iter().map(|a| convex_hull(a)).collect()
    }
}

/// Facet data of `P + Q` and the decomposition of its offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricContext {
    n: usize,
    normals: Vec<Vec<i64>>,
    offsets_per_poly: Vec<Vec<i64>>,
    offsets_q: Vec<i64>,
    shift: ShiftPattern,
    polytopes: Vec<IntegralPolytope>,
    lattice: Vec<Vec<i64>>,
}

impl ToricContext {
    pub fn build(system: &SparseSystem) -> Result<Self> {
        let n = system.n;
        let polytopes = system.newton_polytopes()?;
        let p = minkowski_sum_all(&polytopes)?;
        if !p.is_full_dimensional() {
            return Err(Error::NotFullDimensional { expected: n, found: p.dim() });
        }
        let pq = minkowski_sum(&p, &system.q)?;
        let normals = pq.normals();
        let offsets_per_poly: Vec<Vec<i64>> =
            polytopes.iter().map(|pi| support_offsets(pi, &normals)).collect();
        let offsets_q = support_offsets(&system.q, &normals);
        for (j, f) in pq.facets().iter().enumerate() {
            let total: i64 = offsets_per_poly.iter().map(|a| a[j]).sum::<i64>() + offsets_q[j];
            debug_assert_eq!(total, f.offset);
        }
        let shift = ShiftPattern::new(system.shift_rule, &system.delta, &normals);
        let rows: Vec<Vec<i64>> = (0..n).map(|i| normals.iter().map(|eta| eta[i]).collect()).collect();
        Ok(ToricContext {
            n,
            normals,
            offsets_per_poly,
            offsets_q,
            shift,
            polytopes,
            lattice: echelon(rows),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.offsets_per_poly.len()
    }

    /// Primitive inner facet normals of `P + Q`, sorted lexicographically.
    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn offsets_per_poly(&self) -> &[Vec<i64>] {
        &self.offsets_per_poly
    }

    pub fn offsets_q(&self) -> &[i64] {
        &self.offsets_q
    }

    pub fn shift(&self) -> &ShiftPattern {
        &self.shift
    }

    pub fn newton_polytopes(&self) -> &[IntegralPolytope] {
        &self.polytopes
    }

    /// Offsets of `sum_{i not in excluded} P_i + Q`.
    pub fn offsets_without(&self, excluded: &[usize]) -> Vec<i64> {
        let mut c = self.offsets_q.clone();
        for (i, a) in self.offsets_per_poly.iter().enumerate() {
            if excluded.contains(&i) {
                continue;
            }
            for (cj, aj) in c.iter_mut().zip(a) {
                *cj += aj;
            }
        }
        c
    }

    /// Shifted lattice points of `sum_{i not in excluded} P_i + Q`.
    pub fn basis(&self, excluded: &[usize]) -> Result<Vec<LatticePoint>> {
        lattice_points(self.n, &self.normals, &self.offsets_without(excluded), &self.shift)
    }

    /// Exponent vector `(<m, eta_j> + c_j)_j` of the Cox monomial of `m` in degree `c`.
    pub fn cox_exponents(&self, m: &LatticePoint, offsets: &[i64]) -> Vec<i64> {
        self.normals.iter().zip(offsets).map(|(eta, c)| m.dot(eta) + c).collect()
    }

    /// Cox-ring homogenization of the `i`-th polynomial of `system`.
    pub fn homogenize(&self, system: &SparseSystem, i: usize, f: &LaurentPoly) -> Result<Vec<(Vec<i64>, Rat)>> {
        if f.support().any(|b| !system.supports[i].contains(b)) {
            return Err(Error::SupportEscape { index: i + 1 });
        }
        Ok(f
            .terms()
            .map(|(b, c)| (self.cox_exponents(b, &self.offsets_per_poly[i]), c.clone()))
            .collect())
    }

    /// Lattice point whose Cox monomial in the degree given by `offsets` is `exps`.
    pub fn dehomogenize(&self, exps: &[i64], offsets: &[i64]) -> Result<LatticePoint> {
        if exps.len() != self.normals.len() || offsets.len() != self.normals.len() {
            return Err(Error::DimensionMismatch { expected: self.normals.len(), found: exps.len() });
        }
        if exps.iter().any(|&e| e < 0) {
            return Err(Error::NotOfDegree);
        }
        let rhs: Vec<i64> = exps.iter().zip(offsets).map(|(e, c)| e - c).collect();
        for s in crate::geom::intmat::subsets(self.normals.len(), self.n) {
            let a: Vec<Vec<i64>> = s.iter().map(|&j| self.normals[j].clone()).collect();
            let b: Vec<Rat> = s.iter().map(|&j| crate::rat(rhs[j])).collect();
            let Some(x) = crate::geom::intmat::solve(&a, &b) else { continue };
            if x.iter().any(|v| !v.is_integer()) {
                return Err(Error::NotOfDegree);
            }
            let m = LatticePoint(
                x.iter().map(|v| i64::try_from(v.to_integer()).expect("coordinate overflow")).collect(),
            );
            if self.cox_exponents(&m, offsets) != exps {
                return Err(Error::NotOfDegree);
            }
            return Ok(m);
        }
        Err(Error::NotOfDegree)
    }

    /// Class of an offset (or Cox exponent) vector modulo the lattice of
    /// principal divisors.
    pub fn degree_class(&self, offsets: &[i64]) -> DegreeClass {
        let mut rep = offsets.to_vec();
        for row in &self.lattice {
            let p = row.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            let q = Integer::div_floor(&rep[p], &row[p]);
            if q != 0 {
                for (r, x) in rep.iter_mut().zip(row) {
                    *r -= q * x;
                }
            }
        }
        DegreeClass { rep }
    }
}

/// Canonical representative of a divisor class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeClass {
    rep: Vec<i64>,
}

impl DegreeClass {
    pub fn representative(&self) -> &[i64] {
        &self.rep
    }
}

pub fn degree_equal(a: &DegreeClass, b: &DegreeClass) -> bool {
    a == b
}

/// Row echelon basis of the row lattice with positive pivots.
fn echelon(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for col in 0..ncols {
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let pivot = *nonzero.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
            for &r in &nonzero {
                if r == pivot {
                    continue;
                }
                let q = rows[r][col] / rows[pivot][col];
                let prow = rows[pivot].clone();
                for (x, p) in rows[r].iter_mut().zip(&prow) {
                    *x -= q * p;
                }
            }
        }
        if let Some(r) = (0..rows.len()).find(|&r| rows[r][col] != 0) {
            let mut row = rows.swap_remove(r);
            if row[col] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(row);
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn running_example() -> SparseSystem {
        let pts = |v: &[[i64; 2]]| v.iter().map(|&p| LatticePoint::from(p)).collect::<Vec<_>>();
        SparseSystem::new(
            2,
            vec![pts(&[[0, 0], [1, 1]]), pts(&[[0, 0], [2, 1], [1, 2]]), pts(&[[0, 0], [2, 1], [0, 1]])],
        )
        .unwrap()
    }

    /// Facet index for the clockwise numbering starting at the left edge.
    fn clockwise(ctx: &ToricContext) -> Vec<usize> {
        let order = [[1, 0], [2, -1], [1, -1], [0, -1], [-1, -1], [-1, 1], [-1, 2]];
        order
            .iter()
            .map(|eta| ctx.normals().iter().position(|v| v == eta).unwrap())
            .collect()
    }

    fn cox(ctx: &ToricContext, exps: &[i64]) -> Vec<i64> {
        clockwise(ctx).iter().map(|&j| exps[j]).collect()
    }

    #[test]
    fn context_of_running_example() {
        let ctx = ToricContext::build(&running_example()).unwrap();
        assert_eq!(ctx.normals().len(), 7);
        let sums: Vec<i64> = (0..7).map(|j| ctx.offsets_per_poly().iter().map(|a| a[j]).sum()).collect();
        assert_eq!(ctx.offsets_without(&[]), sums);
    }

    #[test]
    fn homogenized_f1_and_f3() {
        let sys = running_example();
        let ctx = ToricContext::build(&sys).unwrap();
        let f1 = LaurentPoly::from_terms(sys.supports()[0].iter().map(|b| (b.clone(), crate::rat(1))));
        let mut h = ctx.homogenize(&sys, 0, &f1).unwrap();
        h.sort();
        let by_point: Vec<Vec<i64>> = h.iter().map(|(e, _)| cox(&ctx, e)).collect();
        // x4 x5^2 and x1 x2 x7
        assert!(by_point.contains(&vec![0, 0, 0, 1, 2, 0, 0]));
        assert!(by_point.contains(&vec![1, 1, 0, 0, 0, 0, 1]));

        let a3 = &sys.supports()[2];
        let e = |b: &LatticePoint| cox(&ctx, &ctx.cox_exponents(b, &ctx.offsets_per_poly()[2]));
        assert_eq!(e(&a3[0]), vec![0, 1, 1, 1, 3, 1, 0]);
        assert_eq!(e(&a3[1]), vec![2, 4, 2, 0, 0, 0, 0]);
        assert_eq!(e(&a3[2]), vec![0, 0, 0, 0, 2, 2, 2]);
        let classes: Vec<DegreeClass> =
            a3.iter().map(|b| ctx.degree_class(&ctx.cox_exponents(b, &ctx.offsets_per_poly()[2]))).collect();
        assert!(classes.windows(2).all(|w| degree_equal(&w[0], &w[1])));

        let bad = LaurentPoly::monomial(LatticePoint::from([5, 5]), crate::rat(1));
        assert_eq!(ctx.homogenize(&sys, 0, &bad), Err(Error::SupportEscape { index: 1 }));
    }

    #[test]
    fn degrees_and_dehomogenization() {
        let sys = running_example();
        let ctx = ToricContext::build(&sys).unwrap();
        let a1 = &ctx.offsets_per_poly()[0];
        let e00 = ctx.cox_exponents(&LatticePoint::from([0, 0]), a1);
        let e11 = ctx.cox_exponents(&LatticePoint::from([1, 1]), a1);
        assert!(degree_equal(&ctx.degree_class(&e00), &ctx.degree_class(&e11)));
        assert_eq!(ctx.dehomogenize(&e00, a1).unwrap(), LatticePoint::from([0, 0]));
        assert_eq!(ctx.dehomogenize(&e11, a1).unwrap(), LatticePoint::from([1, 1]));
        let a2 = &ctx.offsets_per_poly()[1];
        assert!(!degree_equal(&ctx.degree_class(a1), &ctx.degree_class(a2)));
        assert_eq!(ctx.dehomogenize(&e11, a2), Err(Error::NotOfDegree));
    }

    #[test]
    fn dense_normals() {
        let simplex = |d: i64| {
            let mut v = Vec::new();
            for x in 0..=d {
                for y in 0..=d - x {
                    v.push(LatticePoint::from([x, y]));
                }
            }
            v
        };
        let sys = SparseSystem::new(2, vec![simplex(1), simplex(2), simplex(3)]).unwrap();
        let ctx = ToricContext::build(&sys).unwrap();
        assert_eq!(ctx.normals(), &[vec![-1, -1], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn translated_q() {
        let base = ToricContext::build(&running_example()).unwrap();
        let p = LatticePoint::from([2, -3]);
        let moved = ToricContext::build(&running_example().with_q(std::slice::from_ref(&p)).unwrap()).unwrap();
        assert_eq!(base.normals(), moved.normals());
        let expected: Vec<i64> = base.normals().iter().map(|eta| -p.dot(eta)).collect();
        assert_eq!(moved.offsets_q(), expected.as_slice());
    }

    #[test]
    fn rejects_flat_systems() {
        let pts = |v: &[[i64; 2]]| v.iter().map(|&p| LatticePoint::from(p)).collect::<Vec<_>>();
        let sys = SparseSystem::new(2, vec![pts(&[[0, 0], [1, 1]]), pts(&[[0, 0], [2, 2]])]).unwrap();
        assert_eq!(
            ToricContext::build(&sys),
            Err(Error::NotFullDimensional { expected: 2, found: 1 })
        );
        assert!(running_example().with_coefficients(vec![vec![crate::rat(1); 2]]).is_err());
        let zero = vec![vec![crate::rat(1), crate::rat(0)], vec![crate::rat(1); 3], vec![crate::rat(1); 3]];
        assert!(matches!(running_example().with_coefficients(zero), Err(Error::ZeroCoefficient(_))));
    }
}
