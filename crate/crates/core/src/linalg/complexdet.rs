use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{symbolic_det, ChainComplex, RowReducer};
use crate::poly::MPoly;
use crate::{Error, Rat, Result};

/// Bound on the random integers used to specialize generic complexes.
pub const SPECIALIZATION_BOUND: i64 = 10_000;
/// Number of specializations tried before giving up.
pub const SPECIALIZATION_ATTEMPTS: u64 = 3;

/// Column order used by the greedy scan in `select_admissible`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ScanOrder {
    #[default]
    Ascending,
    /// A per-level random permutation derived from the seed.
    Shuffled(u64),
}

/// Index sets `I_0 = B_0, I_1, ..., I_k = {}` with invertible minors
/// `Delta_i` on rows `I_{i-1}` and columns `B_i \ I_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSelection {
    kept: Vec<Vec<usize>>,
    complement: Vec<Vec<usize>>,
}

impl AdmissibleSelection {
    /// `I_level`, sorted.
    pub fn kept(&self, level: usize) -> &[usize] {
        &self.kept[level]
    }

    /// `B_level \ I_level`, sorted; empty for level 0.
    pub fn complement(&self, level: usize) -> &[usize] {
        &self.complement[level]
    }

    /// Number of maps of the complex.
    pub fn len(&self) -> usize {
        self.kept.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sizes `|B_i \ I_i|` of the square minors, for `i = 1..=k`.
    pub fn minor_sizes(&self) -> Vec<usize> {
        self.complement[1..].iter().map(Vec::len).collect()
    }
}

/// Descending method: at each level, scan columns of `M_i` restricted to the
/// rows `I_{i-1}` and keep those that raise the rank.
pub fn select_admissible(complex: &ChainComplex<Rat>, order: ScanOrder) -> Result<AdmissibleSelection> {
    let dims = complex.dims();
    let k = complex.len();
    let mut kept = vec![(0..dims[0]).collect::<Vec<usize>>()];
    let mut complement = vec![Vec::new()];
    for level in 1..=k {
        let rows = &kept[level - 1];
        let map = complex.map(level);
        let mut position = vec![usize::MAX; map.rows()];
        for (i, &r) in rows.iter().enumerate() {
            position[r] = i;
        }
        let mut cols: Vec<usize> = (0..dims[level]).collect();
        if let ScanOrder::Shuffled(seed) = order {
            cols.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(level as u64)));
        }
        let mut reducer = RowReducer::new();
        let mut chosen = Vec::new();
        for c in cols {
            if reducer.rank() == rows.len() {
                break;
            }
            let mut v = vec![Rat::zero(); rows.len()];
            for (r, x) in map.column(c) {
                if position[*r] != usize::MAX {
                    v[position[*r]] = x.clone();
                }
            }
            if reducer.insert(v) {
                chosen.push(c);
            }
        }
        if chosen.len() < rows.len() {
            return Err(Error::ExactnessFailure { level, rank: chosen.len(), required: rows.len() });
        }
        chosen.sort_unstable();
        let rest: Vec<usize> = (0..dims[level]).filter(|c| chosen.binary_search(c).is_err()).collect();
        kept.push(rest);
        complement.push(chosen);
    }
    if !kept[k].is_empty() {
        return Err(Error::ExactnessFailure { level: k, rank: complement[k].len(), required: dims[k] });
    }
    Ok(AdmissibleSelection { kept, complement })
}

/// Random integer specialization of `nvars` variables.
pub fn random_specialization(nvars: usize, seed: u64) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..nvars)
        .map(|_| crate::rat(rng.gen_range(-SPECIALIZATION_BOUND..=SPECIALIZATION_BOUND)))
        .collect()
}

/// Selection for a generic complex, found on a random specialization. A
/// selection whose specialized minors are invertible has nonzero symbolic
/// minors as well. Returns the selection and the specialization used.
pub fn select_admissible_generic(
    complex: &ChainComplex<MPoly>,
    nvars: usize,
    seed: u64,
    order: ScanOrder,
) -> Result<(AdmissibleSelection, Vec<Rat>)> {
    let mut last = None;
    for attempt in 0..SPECIALIZATION_ATTEMPTS {
        let values = random_specialization(nvars, seed.wrapping_add(attempt));
        let concrete = complex.try_map_entries(|p| p.evaluate(&values))?;
        match select_admissible(&concrete, order) {
            Ok(sel) => return Ok((sel, values)),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// The minors `Delta_1, ..., Delta_k` of a selection, computed in parallel.
pub fn admissible_minors<T: super::Scalar>(complex: &ChainComplex<T>, sel: &AdmissibleSelection) -> Result<Vec<T>> {
    (1..=complex.len())
        .into_par_iter()
        .map(|level| symbolic_det(complex.map(level).submatrix(sel.kept(level - 1), sel.complement(level))))
        .collect()
}

/// `prod_i Delta_i^((-1)^(i+1))` as `content * numerator / denominator`, with
/// numerator and denominator primitive integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDeterminant {
    pub numerator: MPoly,
    pub denominator: MPoly,
    pub content: Rat,
}

impl ComplexDeterminant {
    pub fn from_minors(minors: &[MPoly]) -> Result<Self> {
        let mut num = MPoly::one();
        let mut den = MPoly::one();
        for (i, delta) in minors.iter().enumerate() {
            if delta.is_zero() {
                return Err(Error::DivisionFailure(format!("minor of level {} vanishes", i + 1)));
            }
            if i % 2 == 0 {
                num = &num * delta;
            } else {
                den = &den * delta;
            }
        }
        let (cn, numerator) = num.content_primitive().expect("nonzero product");
        let (cd, denominator) = den.content_primitive().expect("nonzero product");
        Ok(ComplexDeterminant { numerator, denominator, content: cn / cd })
    }

    /// The determinant as a polynomial; fails if the denominator does not divide.
    pub fn value(&self) -> Result<MPoly> {
        let q = self.numerator.exact_divide(&self.denominator).map_err(|e| {
            Error::DivisionFailure(format!("denominator does not divide numerator ({e:?})"))
        })?;
        Ok(q.scale(&self.content))
    }
}

/// Determinant of a generic exact complex with respect to a selection.
pub fn det_complex(complex: &ChainComplex<MPoly>, sel: &AdmissibleSelection) -> Result<ComplexDeterminant> {
    ComplexDeterminant::from_minors(&admissible_minors(complex, sel)?)
}

/// Determinant of an exact complex over the rationals.
pub fn det_complex_rational(complex: &ChainComplex<Rat>, sel: &AdmissibleSelection) -> Result<Rat> {
    let mut value = Rat::one();
    for (i, delta) in admissible_minors(complex, sel)?.into_iter().enumerate() {
        if delta.is_zero() {
            return Err(Error::DivisionFailure(format!("minor of level {} vanishes", i + 1)));
        }
        value = if i % 2 == 0 { value * delta } else { value / delta };
    }
    Ok(value)
}
