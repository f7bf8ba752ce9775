//! Exact sparse elimination on toric varieties.
//!
//! Given Laurent polynomial supports `A_1, ..., A_k` in `Z^n`, this crate builds
//! the graded piece of the Koszul complex of their Cox-ring homogenizations in
//! lattice-point coordinates, computes the sparse resultant as the determinant
//! of that complex (when `k = n + 1`), decides emptiness of common zeros on the
//! toric compactification, and produces Bézout-identity certificates with
//! shifted Minkowski-sum supports.
//!
//! All arithmetic is exact (`BigRational` coefficients, integer geometry).

pub mod bezout;
pub mod error;
pub mod geom;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod resultant;
pub mod toric;

pub use error::{Error, Result};
pub use geom::{IntegralPolytope, LatticePoint, ShiftPattern, ShiftRule};
pub use poly::{CoeffVar, LaurentPoly, MPoly, VarSet};
pub use toric::{Coefficients, SparseSystem, ToricContext};

/// Arbitrary-precision rational used for every coefficient in the crate.
pub type Rat = num_rational::BigRational;

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().ok()?;
            let q: num_bigint::BigInt = q.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&q) {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Rat::from_integer),
    }
}

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
