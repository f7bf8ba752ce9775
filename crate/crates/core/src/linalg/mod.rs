//! Exact linear algebra: sparse matrices and chain complexes over a scalar
//! ring, ranks over the rationals, fraction-free determinants, and the
//! determinant of an exact complex.

mod complexdet;
mod matrix;
mod rank;

pub use complexdet::{
    admissible_minors, random_specialization,
    det_complex, det_complex_rational, select_admissible, select_admissible_generic, AdmissibleSelection,
    ComplexDeterminant, ScanOrder,
};
pub use matrix::{ChainComplex, SparseMatrix};
pub use rank::{rank_q, symbolic_det, RowReducer};

use num_traits::{One, Zero};

use crate::poly::MPoly;
use crate::Rat;

/// Entry type of matrices: an integral domain with exact division.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// Size estimate used to prefer cheap pivots.
    fn weight(&self) -> usize;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Scalar for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_divide(other).ok()
    }
    fn weight(&self) -> usize {
        self.len()
    }
}
