//! Polynomials in the generic coefficients `c_{i,b}` and Laurent polynomials in `t`.

mod laurent;
mod mpoly;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::geom::LatticePoint;
use crate::{Error, Rat, Result};

pub use laurent::LaurentPoly;
pub use mpoly::{DivideError, MPoly, Monomial};

/// The generic coefficient `c_{i,b}` of `t^b` in the `i`-th polynomial.
/// `poly` is zero-based; rendering is one-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffVar {
    pub poly: usize,
    pub point: LatticePoint,
}

impl fmt::Display for CoeffVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c_{{{},{}}}", self.poly + 1, self.point)
    }
}

/// Ordered set of coefficient variables; an `MPoly` refers to variables by
/// their position here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSet {
    vars: Vec<CoeffVar>,
    index: HashMap<CoeffVar, usize>,
}

impl VarSet {
    pub fn new(mut vars: Vec<CoeffVar>) -> Self {
        vars.sort();
        vars.dedup();
        let index = vars.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        VarSet { vars, index }
    }

    /// One variable per support point, ordered by `(i, b)`.
    pub fn from_supports(supports: &[Vec<LatticePoint>]) -> Self {
        let vars = supports
            .iter()
            .enumerate()
            .flat_map(|(i, a)| a.iter().map(move |b| CoeffVar { poly: i, point: b.clone() }))
            .collect();
        VarSet::new(vars)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[CoeffVar] {
        &self.vars
    }

    pub fn get(&self, idx: usize) -> &CoeffVar {
        &self.vars[idx]
    }

    pub fn index_of(&self, var: &CoeffVar) -> Option<usize> {
        self.index.get(var).copied()
    }

    /// Number of polynomials the variables belong to.
    pub fn groups(&self) -> usize {
        self.vars.last().map_or(0, |v| v.poly + 1)
    }

    /// Positional value vector from a map keyed by variable.
    pub fn assignment(&self, values: &BTreeMap<CoeffVar, Rat>) -> Result<Vec<Rat>> {
        self.vars
            .iter()
            .map(|v| values.get(v).cloned().ok_or_else(|| Error::MissingVariable(v.to_string())))
            .collect()
    }
}
