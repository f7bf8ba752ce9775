use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::VarSet;
use crate::{Error, Rat, Result};

/// Exponent vector over the variables of a `VarSet`, trailing zeros trimmed.
/// The derived order is graded lexicographic with variable 0 largest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(idx: usize) -> Self {
        let mut exps = vec![0; idx + 1];
        exps[idx] = 1;
        Monomial { deg: 1, exps }
    }

    pub fn from_exponents(exps: impl Into<Vec<u16>>) -> Self {
        let mut exps = exps.into();
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let deg = exps.iter().map(|&e| u32::from(e)).sum();
        Monomial { deg, exps }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() { (self, other) } else { (other, self) };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.len() > self.exps.len() || other.deg > self.deg {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = e.checked_sub(*o)?;
        }
        Some(Monomial::from_exponents(exps))
    }
}

/// Error of `MPoly::exact_divide`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivideError {
    DivisionByZero,
    NotDivisible,
}

/// Sparse polynomial with rational coefficients, terms sorted by decreasing
/// monomial and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        MPoly::term(Monomial::one(), c)
    }

    pub fn var(idx: usize) -> Self {
        MPoly::term(Monomial::var(idx), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        MPoly::from_sorted_map(acc)
    }

    fn from_sorted_map(map: BTreeMap<Monomial, Rat>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        MPoly { terms }
    }

    fn from_hash_map(map: HashMap<Monomial, Rat>) -> Self {
        let mut terms: Vec<(Monomial, Rat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly { terms }
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

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.degree() == 0 => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn scale(&self, s: &Rat) -> MPoly {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// `self * c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect() }
    }

    /// Exact quotient `self / divisor`, by multivariate division in the term order.
    pub fn exact_divide(&self, divisor: &MPoly) -> std::result::Result<MPoly, DivideError> {
        let Some((lead_m, lead_c)) = divisor.leading_term() else {
            return Err(DivideError::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        if divisor.len() == 1 {
            let inv = lead_c.recip();
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| Some((m.div(lead_m)?, c * &inv)))
                .collect::<Option<Vec<_>>>()
                .ok_or(DivideError::NotDivisible)?;
            return Ok(MPoly { terms });
        }
        let inv = lead_c.recip();
        let mut rem: BTreeMap<Monomial, Rat> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lead_m).ok_or(DivideError::NotDivisible)?;
            let qc = c * &inv;
            for (dm, dc) in &divisor.terms[1..] {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(MPoly { terms: quotient })
    }

    /// Splits `self = content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient. `None` for zero.
    pub fn content_primitive(&self) -> Option<(Rat, MPoly)> {
        let (_, lead) = self.leading_term()?;
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut content = Rat::new(num, den);
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        Some((content, self.scale(&inv)))
    }

    /// Value at a positional assignment.
    pub fn evaluate(&self, values: &[Rat]) -> Result<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            if m.exps.len() > values.len() {
                return Err(Error::MissingVariable(format!("#{}", m.exps.len() - 1)));
            }
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.exps) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), usize::from(e));
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes the variables for which `values` has an entry.
    pub fn substitute(&self, values: &[Option<Rat>]) -> MPoly {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.exps.clone();
            for (i, e) in rest.iter_mut().enumerate() {
                if let Some(Some(v)) = values.get(i) {
                    coeff *= num_traits::pow(v.clone(), usize::from(*e));
                    *e = 0;
                }
            }
            *acc.entry(Monomial::from_exponents(rest)).or_insert_with(Rat::zero) += coeff;
        }
        MPoly::from_hash_map(acc)
    }

    /// Largest total degree in the variables selected by `in_group`.
    pub fn degree_in(&self, in_group: impl Fn(usize) -> bool) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| {
                m.exps
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| in_group(i))
                    .map(|(_, &e)| u32::from(e))
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    /// Whether every term has the same total degree in the selected variables.
    pub fn is_homogeneous_in(&self, in_group: impl Fn(usize) -> bool) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| {
            m.exps
                .iter()
                .enumerate()
                .filter(|&(i, _)| in_group(i))
                .map(|(_, &e)| u32::from(e))
                .sum::<u32>()
        });
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Per-polynomial degrees `(deg in c_{1,*}, ..., deg in c_{k,*})`.
    pub fn group_degrees(&self, vars: &VarSet) -> Vec<u32> {
        (0..vars.groups())
            .map(|g| self.degree_in(|i| vars.get(i).poly == g))
            .collect()
    }

    /// Canonical text form: terms in decreasing order, variables as `c_{i,(b)}`.
    pub fn render(&self, vars: &VarSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars.get(i).to_string()),
                    _ => factors.push(format!("{}^{e}", vars.get(i))),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut terms = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().cloned(),
                (None, Some((m, c))) => {
                    b.next();
                    Some((m.clone(), if negate { -c } else { c.clone() }))
                }
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => a.next().cloned(),
                    std::cmp::Ordering::Less => {
                        b.next();
                        Some((mb.clone(), if negate { -cb } else { cb.clone() }))
                    }
                    std::cmp::Ordering::Equal => {
                        let c = if negate { ca - cb } else { ca + cb };
                        let m = ma.clone();
                        a.next();
                        b.next();
                        (!c.is_zero()).then_some((m, c))
                    }
                },
            };
            terms.extend(next);
        }
        MPoly { terms }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, true)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if rhs.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rat> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        MPoly::from_hash_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}
