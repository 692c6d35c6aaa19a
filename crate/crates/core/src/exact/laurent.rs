use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::GaussianRational;
use super::ring::{Rational, Ring};
use crate::error::Result;

/// Finitely supported map from exponents to coefficients, read as a Laurent
/// polynomial in `z`. With `z = e^{iθ}` these represent trigonometric
/// polynomials exactly, and the constant term is the mean value over a period.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(R::one(), 0)
    }

    pub fn monomial(c: R, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// `z^k + z^{-k}` (for `k = 0` this is the constant 2).
    pub fn cos_pair(k: i64) -> Self {
        Self::from_terms([(k, R::one()), (-k, R::one())])
    }

    fn add_term(&mut self, e: i64, c: &R) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(R::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of `z^0`.
    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a.clone() * c)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `z ↦ z^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `z ↦ z^k` for a nonzero `k`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k != 0, "dilation by zero");
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    /// First exponent at which `self` and `other` differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, R, R)> {
        let diff = self - other;
        let (&e, _) = diff.terms.iter().next()?;
        Some((e, self.coeff(e), other.coeff(e)))
    }
}

impl LaurentPoly<Rational> {
    pub fn to_gaussian(&self) -> LaurentPoly<GaussianRational> {
        self.map(|c| GaussianRational::real(c.clone()))
    }
}

impl LaurentPoly<GaussianRational> {
    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }

    /// Drops the (zero) imaginary parts, failing if any coefficient is not real.
    pub fn into_real(self) -> Result<LaurentPoly<Rational>> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms {
            terms.insert(e, c.into_real()?);
        }
        Ok(LaurentPoly { terms })
    }
}

impl<'a, R: Ring> Add<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a, R: Ring> Sub<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &-c.clone());
        }
        out
    }
}

impl<'a, R: Ring> Mul<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1.clone() * c2));
            }
        }
        out
    }
}

impl<R: Ring> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                _ => format!("{c}·z^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
