use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::geom::LatticePoint;
use crate::{parse_rational, Error, Rat, Result};

/// Laurent polynomial `sum_m c_m t^m` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<LatticePoint, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(point: LatticePoint, coeff: Rat) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(point, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LatticePoint, Rat)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, point: LatticePoint, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(point).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, point: &LatticePoint) -> Rat {
        self.terms.get(point).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticePoint> {
        self.terms.keys()
    }

    /// `self += f * g`.
    pub fn mul_add(&mut self, f: &LaurentPoly, g: &LaurentPoly) {
        for (a, ca) in &f.terms {
            for (b, cb) in &g.terms {
                self.add_term(a + b, ca * cb);
            }
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.mul_add(self, other);
        out
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Value at a point of the torus; every coordinate must be nonzero.
    pub fn evaluate(&self, at: &[Rat]) -> Rat {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in at.iter().zip(m.coords()) {
                let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
                t *= if e < 0 { p.recip() } else { p };
            }
            total += t;
        }
        total
    }

    /// Parses expressions such as `3/2*t^(1,0) - t^(0,-1) + 1` in `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<LaurentPoly> {
        let bad = |why: &str| Error::InvalidSystem(format!("cannot parse Laurent polynomial {text:?}: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        for (i, ch) in compact.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > 0 && !compact[..i].ends_with(['*', '^']) => {
                    pieces.push(&compact[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(&compact[start..]);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-Rat::one(), &piece[1..]),
                Some(b'+') => (Rat::one(), &piece[1..]),
                _ => (Rat::one(), piece),
            };
            let mut coeff = sign;
            let mut point = LatticePoint::origin(n);
            for factor in body.split('*') {
                if let Some(exp) = factor.strip_prefix("t^") {
                    let inner = exp
                        .strip_prefix('(')
                        .and_then(|e| e.strip_suffix(')'))
                        .unwrap_or(exp);
                    let coords: Vec<i64> = inner
                        .split(',')
                        .map(|s| s.parse().map_err(|_| bad("bad exponent")))
                        .collect::<Result<_>>()?;
                    if coords.len() != n {
                        return Err(Error::DimensionMismatch { expected: n, found: coords.len() });
                    }
                    point = &point + &LatticePoint(coords);
                } else if factor == "t" && n == 1 {
                    point = &point + &LatticePoint(vec![1]);
                } else {
                    coeff *= parse_rational(factor).ok_or_else(|| bad("bad coefficient"))?;
                }
            }
            out.add_term(point, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let sep = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.abs();
            let constant = m.coords().iter().all(|&e| e == 0);
            match (constant, mag.is_one()) {
                (true, _) => write!(f, "{sep}{mag}")?,
                (false, true) => write!(f, "{sep}t^{m}")?,
                (false, false) => write!(f, "{sep}{mag}*t^{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p.into(), q.into())
    }

    #[test]
    fn inverse_monomials_cancel() {
        let a = LaurentPoly::monomial(LatticePoint::from([1, 1]), r(1, 1));
        let b = LaurentPoly::monomial(LatticePoint::from([-1, -1]), r(1, 1));
        assert_eq!(a.mul(&b), LaurentPoly::monomial(LatticePoint::origin(2), r(1, 1)));
    }

    #[test]
    fn mul_add_with_unit_and_zero() {
        let f1 = LaurentPoly::parse("1 + 2*t^(1,1)", 2).unwrap();
        let f2 = LaurentPoly::parse("t^(2,1) - 3", 2).unwrap();
        let mut acc = LaurentPoly::zero();
        acc.mul_add(&LaurentPoly::monomial(LatticePoint::origin(2), r(1, 1)), &f1);
        acc.mul_add(&LaurentPoly::zero(), &f2);
        assert_eq!(acc, f1);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = LaurentPoly::parse("3/2*t^(1,0) - 1 + t^(0,-2)", 2).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&LatticePoint::from([1, 0])), r(3, 2));
        assert_eq!(p.coeff(&LatticePoint::from([0, -2])), r(1, 1));
        assert_eq!(LaurentPoly::parse(&p.to_string(), 2).unwrap(), p);
        assert_eq!(p.evaluate(&[r(2, 1), r(1, 2)]), r(6, 1));
        assert_eq!(LaurentPoly::parse("-t^(2,2)", 2).unwrap().to_string(), "-t^(2,2)");
        assert!(LaurentPoly::parse("t^(1)", 2).is_err());
        assert!(LaurentPoly::parse("", 2).is_err());
        assert!(LaurentPoly::parse("x", 2).is_err());
    }
}
