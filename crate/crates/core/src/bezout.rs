//! Emptiness of common zeros on the toric compactification and Bézout
//! identities `g = g_1 f_1 + ... + g_k f_k` with shifted supports.
//!
//! Emptiness here is emptiness in the compactification `X_{P+Q}`, which is
//! stronger than having no common zero in the torus.

use num_traits::{One, Signed, Zero};

use crate::geom::LatticePoint;
use crate::koszul::{build_concrete, rightmost_surjective, GradedKoszulComplex};
use crate::poly::LaurentPoly;
use crate::toric::{SparseSystem, ToricContext};
use crate::{Error, Rat, Result};

/// Whether the homogenized system has no common zero, decided by
/// surjectivity of the last map of the complex.
pub fn emptiness_check(system: &SparseSystem) -> Result<bool> {
    let ctx = ToricContext::build(system)?;
    let complex = build_concrete(system, &ctx)?;
    Ok(rightmost_surjective(&complex.complex))
}

/// A Bézout identity with declared cofactor supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: LaurentPoly,
    pub cofactors: Vec<LaurentPoly>,
    pub declared_supports: Vec<Vec<LatticePoint>>,
}

impl Certificate {
    /// `{"target": "..", "cofactors": [[{"point": [..], "coeff": ".."}, ..], ..], "verified": ..}`
    pub fn to_json(&self, verified: bool) -> String {
        let point = |m: &LatticePoint| {
            let coords: Vec<String> = m.coords().iter().map(i64::to_string).collect();
            format!("[{}]", coords.join(","))
        };
        let cofactors: Vec<String> = self
            .cofactors
            .iter()
            .map(|g| {
                let terms: Vec<String> = g
                    .terms()
                    .map(|(m, c)| format!("{{\"point\":{},\"coeff\":\"{c}\"}}", point(m)))
                    .collect();
                format!("[{}]", terms.join(","))
            })
            .collect();
        format!(
            "{{\"target\":\"{}\",\"cofactors\":[{}],\"verified\":{verified}}}",
            self.target,
            cofactors.join(",")
        )
    }
}

/// Solves `M_1 x = g` for many targets against one echelonized `M_1`.
#[derive(Clone, Debug)]
pub struct CertificateSolver {
    system: SparseSystem,
    complex: GradedKoszulComplex<Rat>,
    /// Pivot columns of the reduced row echelon form of `M_1`.
    pivots: Vec<usize>,
    /// `transform * M_1 = reduced`.
    transform: Vec<Vec<Rat>>,
}

impl CertificateSolver {
    pub fn new(system: &SparseSystem) -> Result<Self> {
        for d in system.delta() {
            if d.abs() >= Rat::one() {
                return Err(Error::DeltaOutOfRange(d.to_string()));
            }
        }
        let ctx = ToricContext::build(system)?;
        let complex = build_concrete(system, &ctx)?;
        let (pivots, transform) = rref_with_transform(complex.map(1).to_dense());
        Ok(CertificateSolver { system: system.clone(), complex, pivots, transform })
    }

    /// Lattice points `(P + Q + delta) ∩ Z^n` allowed in a target.
    pub fn target_support(&self) -> &[LatticePoint] {
        &self.complex.terms[0].components[0].basis
    }

    /// Declared cofactor supports, one per polynomial.
    pub fn declared_supports(&self) -> Vec<Vec<LatticePoint>> {
        self.complex.terms[1].components.iter().map(|c| c.basis.clone()).collect()
    }

    /// A certificate for `target`, or `None` when `M_1 x = g` is inconsistent.
    pub fn solve(&self, target: &LaurentPoly) -> Result<Option<Certificate>> {
        let level0 = &self.complex.terms[0];
        let mut rhs = vec![Rat::zero(); level0.dim()];
        for (m, c) in target.terms() {
            let idx = level0.index_of(&[], m).ok_or(Error::TargetSupportEscape)?;
            rhs[idx] = c.clone();
        }
        let y: Vec<Rat> = self
            .transform
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        if y[self.pivots.len()..].iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }
        let level1 = &self.complex.terms[1];
        let mut cofactors = vec![LaurentPoly::zero(); self.system.k()];
        for (r, &col) in self.pivots.iter().enumerate() {
            let (comp, point) = level1.locate(col);
            cofactors[comp.subset[0]].add_term(point.clone(), y[r].clone());
        }
        Ok(Some(Certificate { target: target.clone(), cofactors, declared_supports: self.declared_supports() }))
    }
}

/// Pivot columns of the reduced row echelon form of `a`, and the invertible
/// row operation matrix that produces it.
fn rref_with_transform(mut a: Vec<Vec<Rat>>) -> (Vec<usize>, Vec<Vec<Rat>>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut t: Vec<Vec<Rat>> =
        (0..rows).map(|i| (0..rows).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect();
    let mut pivots = Vec::new();
    for col in 0..cols {
        let r = pivots.len();
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        t.swap(r, p);
        let inv = a[r][col].recip();
        a[r].iter_mut().for_each(|x| *x *= &inv);
        t[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..rows {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let (pa, pt) = (a[r].clone(), t[r].clone());
            for (x, y) in a[i].iter_mut().zip(&pa) {
                *x -= &f * y;
            }
            for (x, y) in t[i].iter_mut().zip(&pt) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        if pivots.len() == rows {
            break;
        }
    }
    (pivots, t)
}

/// A certificate for `target`, or `None` when none exists with the declared supports.
pub fn certificate(system: &SparseSystem, target: &LaurentPoly) -> Result<Option<Certificate>> {
    CertificateSolver::new(system)?.solve(target)
}

/// Re-expands `sum g_i f_i` and checks it against the target and the declared supports.
pub fn verify_certificate(cert: &Certificate, system: &SparseSystem) -> bool {
    if cert.cofactors.len() != system.k() || cert.declared_supports.len() != system.k() {
        return false;
    }
    let mut total = LaurentPoly::zero();
    for (i, (g, support)) in cert.cofactors.iter().zip(&cert.declared_supports).enumerate() {
        if g.support().any(|m| support.binary_search(m).is_err()) {
            return false;
        }
        let Some(f) = system.polynomial(i) else {
            return false;
        };
        total.mul_add(g, &f);
    }
    total == cert.target
}
