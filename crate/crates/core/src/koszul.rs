//! The graded piece of the Koszul complex of a sparse system, in lattice-point
//! coordinates.

use rayon::prelude::*;

use crate::geom::LatticePoint;
use crate::linalg::{rank_q, ChainComplex, Scalar, SparseMatrix};
use crate::poly::{MPoly, VarSet};
use crate::toric::{Coefficients, SparseSystem, ToricContext};
use crate::{Error, Rat, Result};

/// One summand of a level: the subset `J` and the basis of
/// `(sum_{i not in J} P_i + Q)` shifted, as sorted lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub subset: Vec<usize>,
    pub basis: Vec<LatticePoint>,
    /// Global index of the first basis element within the level.
    pub offset: usize,
}

/// Components of one level, ordered colexicographically by subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulTerm {
    pub level: usize,
    pub components: Vec<Component>,
}

impl KoszulTerm {
    pub fn dim(&self) -> usize {
        self.components.iter().map(|c| c.basis.len()).sum()
    }

    pub fn component(&self, subset: &[usize]) -> Option<&Component> {
        self.components.iter().find(|c| c.subset == subset)
    }

    /// Global index of `point` in the component of `subset`.
    pub fn index_of(&self, subset: &[usize], point: &LatticePoint) -> Option<usize> {
        let c = self.component(subset)?;
        c.basis.binary_search(point).ok().map(|i| c.offset + i)
    }

    /// Component and point of a global index.
    pub fn locate(&self, index: usize) -> (&Component, &LatticePoint) {
        let c = self
            .components
            .iter()
            .rfind(|c| c.offset <= index && index < c.offset + c.basis.len())
            .expect("index within the level");
        (c, &c.basis[index - c.offset])
    }
}

/// Based terms for levels `0..=k` and the differentials between them.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedKoszulComplex<T> {
    pub terms: Vec<KoszulTerm>,
    pub complex: ChainComplex<T>,
}

impl<T: Scalar> GradedKoszulComplex<T> {
    /// Per-level component dimensions, level 0 first.
    pub fn dimension_signature(&self) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| t.components.iter().map(|c| c.basis.len()).collect())
            .collect()
    }

    pub fn dims(&self) -> &[usize] {
        self.complex.dims()
    }

    /// The differential `M_level` from level `level` to `level - 1`.
    pub fn map(&self, level: usize) -> &SparseMatrix<T> {
        self.complex.map(level)
    }

    fn with_complex<U: Scalar>(&self, complex: ChainComplex<U>) -> GradedKoszulComplex<U> {
        GradedKoszulComplex { terms: self.terms.clone(), complex }
    }
}

/// `l`-subsets of `0..k` in colexicographic order.
pub fn colex_subsets(k: usize, l: usize) -> Vec<Vec<usize>> {
    let mut subsets = crate::geom::intmat::subsets(k, l);
    subsets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    subsets
}

fn build_terms(ctx: &ToricContext) -> Result<Vec<KoszulTerm>> {
    let k = ctx.k();
    (0..=k)
        .map(|level| {
            let mut offset = 0;
            let components = colex_subsets(k, level)
                .into_iter()
                .map(|subset| {
                    let basis = ctx.basis(&subset)?;
                    let c = Component { subset, basis, offset };
                    offset += c.basis.len();
                    Ok(c)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(KoszulTerm { level, components })
        })
        .collect()
}

/// Assembles the differentials; `entry(i, t, sign)` is the matrix entry for the
/// `t`-th support point of polynomial `i`, with sign `+1` or `-1`.
fn build_with<T: Scalar>(
    system: &SparseSystem,
    ctx: &ToricContext,
    entry: impl Fn(usize, usize, bool) -> T,
) -> Result<GradedKoszulComplex<T>> {
    let terms = build_terms(ctx)?;
    let k = system.k();
    let mut maps = Vec::with_capacity(k);
    for level in 1..=k {
        let (source, target) = (&terms[level], &terms[level - 1]);
        let mut m = SparseMatrix::new(target.dim(), source.dim());
        for comp in &source.components {
            for (pos, i) in comp.subset.iter().enumerate() {
                let face: Vec<usize> = comp.subset.iter().copied().filter(|j| j != i).collect();
                let negative = pos % 2 == 1;
                for (col, point) in comp.basis.iter().enumerate() {
                    for (t, b) in system.supports()[*i].iter().enumerate() {
                        let row = target
                            .index_of(&face, &(point + b))
                            .expect("shifted bases are closed under the differential");
                        m.add_entry(row, comp.offset + col, entry(*i, t, negative));
                    }
                }
            }
        }
        maps.push(m);
    }
    Ok(GradedKoszulComplex { terms, complex: ChainComplex::new(maps) })
}

/// The complex with entries `+-c_{i,b}` in the variables of `system.vars()`.
pub fn build_generic(system: &SparseSystem, ctx: &ToricContext) -> Result<GradedKoszulComplex<MPoly>> {
    let vars = system.vars();
    let index: Vec<Vec<usize>> = system
        .supports()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            a.iter()
                .map(|b| vars.index_of(&crate::poly::CoeffVar { poly: i, point: b.clone() }).unwrap())
                .collect()
        })
        .collect();
    build_with(system, ctx, |i, t, negative| {
        let v = MPoly::var(index[i][t]);
        if negative {
            -v
        } else {
            v
        }
    })
}

/// The complex of a system with concrete coefficients.
pub fn build_concrete(system: &SparseSystem, ctx: &ToricContext) -> Result<GradedKoszulComplex<Rat>> {
    let Coefficients::Concrete(values) = system.coefficients() else {
        return Err(Error::InvalidSystem("the system has generic coefficients".into()));
    };
    build_with(system, ctx, |i, t, negative| if negative { -&values[i][t] } else { values[i][t].clone() })
}

/// Builds the context and the complex matching the system's coefficients.
pub fn build_complex(system: &SparseSystem) -> Result<(ToricContext, BuiltComplex)> {
    let ctx = ToricContext::build(system)?;
    let complex = match system.coefficients() {
        Coefficients::Generic => BuiltComplex::Generic(build_generic(system, &ctx)?),
        Coefficients::Concrete(_) => BuiltComplex::Concrete(build_concrete(system, &ctx)?),
    };
    Ok((ctx, complex))
}

/// A complex with symbolic or rational entries.
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltComplex {
    Generic(GradedKoszulComplex<MPoly>),
    Concrete(GradedKoszulComplex<Rat>),
}

impl BuiltComplex {
    pub fn dimension_signature(&self) -> Vec<Vec<usize>> {
        match self {
            BuiltComplex::Generic(c) => c.dimension_signature(),
            BuiltComplex::Concrete(c) => c.dimension_signature(),
        }
    }
}

/// Evaluates every entry at a positional assignment of the variables.
pub fn specialize(complex: &GradedKoszulComplex<MPoly>, values: &[Rat]) -> Result<GradedKoszulComplex<Rat>> {
    Ok(complex.with_complex(complex.complex.try_map_entries(|p| p.evaluate(values))?))
}

/// Evaluates with the concrete coefficients of `system`, matched by variable.
pub fn specialize_to_system(
    complex: &GradedKoszulComplex<MPoly>,
    vars: &VarSet,
    system: &SparseSystem,
) -> Result<GradedKoszulComplex<Rat>> {
    let values = vars
        .vars()
        .iter()
        .map(|v| {
            system
                .coefficient(v.poly, &v.point)
                .ok_or_else(|| Error::MissingVariable(v.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    specialize(complex, &values)
}

/// Ranks of `M_1, ..., M_k`, computed in parallel.
pub fn ranks(complex: &ChainComplex<Rat>) -> Vec<usize> {
    complex.maps().par_iter().map(|m| rank_q(&m.to_dense())).collect()
}

/// Exactness at every level: `rank M_l + rank M_{l+1} = dim V_l`.
pub fn check_exact(complex: &ChainComplex<Rat>) -> bool {
    if complex.euler_characteristic() != 0 {
        return false;
    }
    let mut r = vec![0];
    r.extend(ranks(complex));
    r.push(0);
    complex.dims().iter().enumerate().all(|(l, &d)| r[l] + r[l + 1] == d)
}

/// Whether `M_1` is onto `V_0`.
pub fn rightmost_surjective(complex: &ChainComplex<Rat>) -> bool {
    rank_q(&complex.map(1).to_dense()) == complex.dims()[0]
}
