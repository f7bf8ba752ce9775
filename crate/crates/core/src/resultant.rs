//! Sparse resultants as determinants of generic Koszul complexes.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::geom::{intmat::subsets, mixed_volume, IntegralPolytope};
use crate::koszul::{build_generic, GradedKoszulComplex};
use crate::linalg::{
    det_complex, select_admissible_generic, symbolic_det, AdmissibleSelection, ComplexDeterminant, ScanOrder,
};
use crate::poly::{MPoly, VarSet};
use crate::toric::{SparseSystem, ToricContext};
use crate::{Error, Rat, Result};

/// A sparse resultant with its degree certificate.
#[derive(Clone, Debug)]
pub struct ResultantResult {
    /// Primitive integer polynomial with positive leading coefficient.
    pub polynomial: MPoly,
    pub vars: VarSet,
    /// Degree in the coefficients of each polynomial.
    pub degrees: Vec<u64>,
    /// `MV` of the Newton polytopes other than the `i`-th.
    pub mixed_volumes: Vec<u64>,
    pub selection: AdmissibleSelection,
    pub determinant: ComplexDeterminant,
}

impl ResultantResult {
    pub fn render(&self) -> String {
        self.polynomial.render(&self.vars)
    }

    /// JSON list of terms `{"coeff": "..", "monomial": [[i, [b..], e], ..]}` with one-based `i`.
    pub fn terms_json(&self) -> String {
        let mut out = String::from("[");
        for (k, (m, c)) in self.polynomial.terms().iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "{{\"coeff\":\"{c}\",\"monomial\":[");
            let mut first = true;
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push(',');
                }
                first = false;
                let var = self.vars.get(v);
                let coords: Vec<String> = var.point.coords().iter().map(i64::to_string).collect();
                let _ = write!(out, "[{},[{}],{e}]", var.poly + 1, coords.join(","));
            }
            out.push_str("]}");
        }
        out.push(']');
        out
    }
}

/// Mixed volumes `MV(P_1, .., P_{i-1}, P_{i+1}, .., P_{n+1})` for each `i`.
pub fn complementary_mixed_volumes(polytopes: &[IntegralPolytope]) -> Result<Vec<u64>> {
    (0..polytopes.len())
        .map(|i| {
            let rest: Vec<IntegralPolytope> =
                polytopes.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            mixed_volume(&rest)
        })
        .collect()
}

/// The sparse resultant of the supports of `system` (coefficients are ignored),
/// computed from the generic complex with the system's `delta` and `Q`.
pub fn sparse_resultant(system: &SparseSystem, seed: u64) -> Result<ResultantResult> {
    let (res, _) = sparse_resultant_with_complex(system, seed)?;
    Ok(res)
}

/// As `sparse_resultant`, also returning the generic complex.
pub fn sparse_resultant_with_complex(
    system: &SparseSystem,
    seed: u64,
) -> Result<(ResultantResult, GradedKoszulComplex<MPoly>)> {
    let n = system.n();
    if system.k() != n + 1 {
        return Err(Error::WrongCount { expected: n + 1, found: system.k() });
    }
    let generic = system.generic();
    let ctx = ToricContext::build(&generic)?;
    let complex = build_generic(&generic, &ctx)?;
    let vars = generic.vars();
    let (selection, _) = select_admissible_generic(&complex.complex, vars.len(), seed, ScanOrder::Ascending)?;
    let determinant = det_complex(&complex.complex, &selection)?;
    let value = determinant.value()?;
    let (_, polynomial) = value
        .content_primitive()
        .ok_or_else(|| Error::DivisionFailure("determinant of the complex is zero".into()))?;

    let mixed_volumes = complementary_mixed_volumes(ctx.newton_polytopes())?;
    let mut degrees = Vec::with_capacity(system.k());
    for (group, &mv) in mixed_volumes.iter().enumerate() {
        let in_group = |v: usize| vars.get(v).poly == group;
        let found = u64::from(polynomial.degree_in(in_group));
        if found != mv || !polynomial.is_homogeneous_in(in_group) {
            return Err(Error::DegreeMismatch { group: group + 1, expected: mv, found });
        }
        degrees.push(found);
    }
    let res = ResultantResult { polynomial, vars, degrees, mixed_volumes, selection, determinant };
    Ok((res, complex))
}

/// Which maximal minors of `M_1` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorSample {
    All,
    /// A seeded random sample of distinct column sets.
    Count { count: usize, seed: u64 },
}

/// Outcome of `verify_minor_divisibility`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinorReport {
    pub total: usize,
    pub checked: usize,
    pub zero: usize,
    pub divisible: usize,
    /// Column sets of nonzero minors not divisible by the resultant.
    pub indivisible: Vec<Vec<usize>>,
}

impl MinorReport {
    pub fn passed(&self) -> bool {
        self.indivisible.is_empty() && self.divisible > 0
    }
}

/// Checks that every sampled maximal minor of `M_1` is zero or divisible by the resultant.
pub fn verify_minor_divisibility(
    complex: &GradedKoszulComplex<MPoly>,
    res: &ResultantResult,
    which: MinorSample,
) -> MinorReport {
    let m1 = complex.map(1);
    let rows: Vec<usize> = (0..m1.rows()).collect();
    let column_sets: Vec<Vec<usize>> = match which {
        MinorSample::All => subsets(m1.cols(), m1.rows()),
        MinorSample::Count { count, seed } => {
            let all = subsets(m1.cols(), m1.rows());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked: Vec<usize> = sample(&mut rng, all.len(), count.min(all.len())).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|i| all[i].clone()).collect()
        }
    };
    let total = crate::geom::intmat::subsets(m1.cols(), m1.rows()).len();
    let outcomes: Vec<(Vec<usize>, Option<bool>)> = column_sets
        .into_par_iter()
        .map(|cols| {
            let det = symbolic_det(m1.submatrix(&rows, &cols)).expect("square submatrix");
            if det.is_zero() {
                return (cols, None);
            }
            let ok = det.exact_divide(&res.polynomial).is_ok();
            (cols, Some(ok))
        })
        .collect();
    let mut report = MinorReport { total, checked: outcomes.len(), ..MinorReport::default() };
    for (cols, outcome) in outcomes {
        match outcome {
            None => report.zero += 1,
            Some(true) => report.divisible += 1,
            Some(false) => report.indivisible.push(cols),
        }
    }
    report
}

/// Value of the resultant at the coefficients of a concrete system.
pub fn specialize_resultant(res: &ResultantResult, system: &SparseSystem) -> Result<Rat> {
    let values = res
        .vars
        .vars()
        .iter()
        .map(|v| {
            system
                .coefficient(v.poly, &v.point)
                .ok_or_else(|| Error::MissingVariable(v.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    res.polynomial.evaluate(&values)
}
