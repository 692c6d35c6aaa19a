use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{IntPoly, RatPoly};
use super::ring::{Integer, Rational};
use crate::error::{Error, Result};

/// Power series over Q known exactly through `x^order`.
///
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims coefficients that were not determined by its inputs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past `order`.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { order, coeffs }
    }

    pub fn from_integers(order: usize, coeffs: impl IntoIterator<Item = Integer>) -> Self {
        Self::new(
            order,
            coeffs
                .into_iter()
                .take(order + 1)
                .map(Rational::from_integer)
                .collect(),
        )
    }

    pub fn from_i64(order: usize, coeffs: &[i64]) -> Self {
        Self::from_integers(order, coeffs.iter().map(|&c| Integer::from(c)))
    }

    pub fn from_poly(order: usize, p: &RatPoly) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn from_int_poly(order: usize, p: &IntPoly) -> Self {
        Self::from_integers(order, p.coeffs().iter().cloned())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        Self::new(order, vec![c])
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(order, vec![Rational::zero(), Rational::one()])
    }

    /// Expansion of the rational function `num / den`; `den(0)` must be nonzero.
    pub fn ratio(order: usize, num: &IntPoly, den: &IntPoly) -> Result<Self> {
        Ok(&Self::from_int_poly(order, num) * &Self::from_int_poly(order, den).mul_inverse()?)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    ///
    /// # Panics
    /// When `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(k <= self.order, "coefficient x^{k} beyond order {}", self.order);
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn mul_inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ConstantTermZero);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// `self ∘ inner`; the inner series must have zero constant term.
    pub fn compose(&self, inner: &TruncSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = TruncSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Integer power; negative exponents go through the multiplicative inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.mul_inverse()?
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut base = base;
        let mut acc = TruncSeries::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// `self / x`; requires a zero constant term and lowers the order by one.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        if self.order == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(TruncSeries {
            order: self.order - 1,
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self · x`; raises the order by one.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries {
            order: self.order + 1,
            coeffs,
        }
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// First index (up to the common order) where the two series differ.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<(usize, Rational, Rational)> {
        let order = self.order.min(other.order);
        (0..=order)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }

    /// Equality up to the smaller of the two orders.
    pub fn agrees_with(&self, other: &TruncSeries) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { order, coeffs }
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = RatPoly::new(self.coeffs.clone());
        write!(f, "{poly} + O(x^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn s(order: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_i64(order, c)
    }

    #[test]
    fn geometric_series() {
        assert_eq!(s(4, &[1, -1]).mul_inverse().unwrap(), s(4, &[1, 1, 1, 1, 1]));
        assert_eq!(s(4, &[0, 1]).mul_inverse(), Err(Error::ConstantTermZero));
    }

    #[test]
    fn catalan_square() {
        let c = s(3, &[1, 1, 2, 5]);
        assert_eq!(&c * &c, s(3, &[1, 2, 5, 14]));
    }

    #[test]
    fn compose_example() {
        // 1/(1−x) ∘ x/(1+x)², oracle: substitute term by term and expand by hand
        let geo = s(3, &[1, -1]).mul_inverse().unwrap();
        let inner = TruncSeries::ratio(3, &IntPoly::from_i64(&[0, 1]), &IntPoly::from_i64(&[1, 2, 1])).unwrap();
        assert_eq!(geo.compose(&inner).unwrap(), s(3, &[1, 1, -1, 0]));
        assert_eq!(geo.compose(&geo), Err(Error::InnerConstantNonzero));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = s(5, &[1, 1, 1, 1, 1, 1]);
        let b = s(2, &[1, 1, 1]);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!(a.compose(&s(3, &[0, 1])).unwrap().order(), 3);
    }

    #[test]
    fn negative_power() {
        let one_minus_x = s(5, &[1, -1]);
        assert_eq!(one_minus_x.pow(-2).unwrap(), s(5, &[1, 2, 3, 4, 5, 6]));
        assert_eq!(one_minus_x.pow(0).unwrap(), TruncSeries::one(5));
    }

    #[test]
    fn div_and_mul_by_x() {
        let f = s(4, &[0, 1, 2, 3, 4]);
        assert_eq!(f.div_x().unwrap(), s(3, &[1, 2, 3, 4]));
        assert_eq!(f.div_x().unwrap().mul_x(), f);
        assert!(s(4, &[1]).div_x().is_err());
    }

    fn arb_unit() -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-9i64..9, 1i64..5), 1..8).prop_map(|v| {
            let mut coeffs: Vec<Rational> = v.iter().map(|&(n, d)| rat(n, d)).collect();
            if coeffs[0].is_zero() {
                coeffs[0] = rat(1, 1);
            }
            TruncSeries::new(7, coeffs)
        })
    }

    proptest! {
        #[test]
        fn inverse_times_series_is_one(a in arb_unit()) {
            let inv = a.mul_inverse().unwrap();
            prop_assert_eq!(&a * &inv, TruncSeries::one(7));
        }

        #[test]
        fn composition_is_associative(a in arb_unit(), b in arb_unit(), c in arb_unit()) {
            let b = &b - &TruncSeries::constant(7, b.coeff(0).clone());
            let c = &c - &TruncSeries::constant(7, c.coeff(0).clone());
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
