use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::ring::{to_integer, Integer, Rational, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<Integer>;
pub type RatPoly = Poly<Rational>;

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
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

    /// `p(q(x))`, by Horner's rule over polynomials.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    /// Evaluates at a point of any ring the coefficients embed into.
    pub fn eval<R>(&self, x: &R) -> R
    where
        R: Ring + From<T>,
    {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x;
            acc += &R::from(c.clone());
        }
        acc
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> From<Vec<T>> for Poly<T> {
    fn from(coeffs: Vec<T>) -> Self {
        Self::new(coeffs)
    }
}

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Exact quotient `p / q` over Z.
    ///
    /// Fails with `NotDivisible` when long division leaves a remainder or
    /// produces a non-integral quotient coefficient.
    pub fn exact_div(&self, q: &IntPoly) -> Result<IntPoly> {
        let dq = q.degree().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dp = self.degree().unwrap();
        if dp < dq {
            return Err(Error::NotDivisible);
        }
        let lead = q.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = &rem[k + dq];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, qj) in q.coeffs.iter().enumerate() {
                rem[k + j] -= &c * qj;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Square root over Z by coefficient matching from the lowest nonzero
    /// coefficient upward. The root is normalized so that its lowest nonzero
    /// coefficient is positive.
    pub fn sqrt(&self) -> Result<IntPoly> {
        let deg = self.degree().ok_or(Error::NotASquare("zero polynomial"))?;
        let v = self.valuation().unwrap();
        if deg % 2 == 1 {
            return Err(Error::NotASquare("odd degree"));
        }
        if v % 2 == 1 {
            return Err(Error::NotASquare("odd valuation"));
        }
        let low = &self.coeffs[v];
        if low.is_negative() {
            return Err(Error::NotASquare("lowest coefficient is negative"));
        }
        let q0 = low.sqrt();
        if &(&q0 * &q0) != low {
            return Err(Error::NotASquare("lowest coefficient is not a perfect square"));
        }
        let half = (deg - v) / 2;
        let two_q0 = &q0 * 2;
        let mut q = Vec::with_capacity(half + 1);
        q.push(q0);
        for k in 1..=half {
            let mut target = self.coeffs[v + k].clone();
            for i in 1..k {
                target -= &q[i] * &q[k - i];
            }
            let (c, r) = target.div_rem(&two_q0);
            if !r.is_zero() {
                return Err(Error::NotASquare("coefficient matching fails"));
            }
            q.push(c);
        }
        let root = IntPoly::new(q).shift(v / 2);
        if &(&root * &root) != self {
            return Err(Error::NotASquare("coefficient matching fails"));
        }
        Ok(root)
    }
}

impl RatPoly {
    /// Converts to an integer polynomial, failing on the first fractional coefficient.
    pub fn to_int(&self) -> Result<IntPoly> {
        Ok(IntPoly::new(
            self.coeffs.iter().map(to_integer).collect::<Result<_>>()?,
        ))
    }
}

impl<'a, T: Ring> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Ring> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, T::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Ring> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a.clone() * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Ring> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    /// Ascending powers, e.g. `5 - 5x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&IntPoly::x() * &IntPoly::x(), p(&[0, 0, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        // (2x²−1)² = 4x⁴ − 4x² + 1
        assert_eq!(&p(&[-1, 0, 2]) * &p(&[-1, 0, 2]), p(&[1, 0, -4, 0, 4]));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, -2])), p(&[1, -4, 4]));
        let q = p(&[3, 7, -2, 9]);
        assert_eq!(IntPoly::x().compose(&q), q);
        // (4x − x²) ∘ (9x − 6x² + x³) is Z₆
        let z6 = p(&[0, 36, -105, 112, -54, 12, -1]);
        assert_eq!(p(&[0, 4, -1]).compose(&p(&[0, 9, -6, 1])), z6);
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::NotDivisible)
        );
        // non-integral quotient: (x + 1) / (2x + 2) = 1/2
        assert_eq!(
            p(&[1, 1]).exact_div(&p(&[2, 2])),
            Err(Error::NotDivisible)
        );
        assert_eq!(p(&[1]).exact_div(&IntPoly::zero()), Err(Error::DivisionByZero));
        // Z₆ / (x (3 − x)²) = (4 − x)(1 − x)²
        let z6 = p(&[0, 36, -105, 112, -54, 12, -1]);
        let den = &p(&[0, 1]) * &p(&[3, -1]).pow(2);
        let expected = &p(&[4, -1]) * &p(&[1, -1]).pow(2);
        assert_eq!(z6.exact_div(&den).unwrap(), expected);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(p(&[1, -4, 4]).sqrt().unwrap(), p(&[1, -2]));
        let psi5 = p(&[5, -5, 1]);
        assert_eq!((&psi5 * &psi5).sqrt().unwrap(), psi5);
        assert!(matches!(p(&[1, 0, 1]).sqrt(), Err(Error::NotASquare(_))));
        assert!(matches!(p(&[1, 1]).sqrt(), Err(Error::NotASquare(_))));
        assert!(matches!(p(&[2, 0, 1]).sqrt(), Err(Error::NotASquare(_))));
        assert!(matches!(IntPoly::zero().sqrt(), Err(Error::NotASquare(_))));
        // x² (1 − x)² with a vanishing constant term
        assert_eq!(p(&[0, 0, 1, -2, 1]).sqrt().unwrap(), p(&[0, 1, -1]));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[5, -5, 1]).to_string(), "5 - 5x + x^2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_in_rationals() {
        let q = p(&[1, -3, 2]);
        assert_eq!(q.eval(&Rational::new(1.into(), 2.into())), Rational::zero());
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..max_len).prop_map(|v| IntPoly::from_i64(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(6), b in small_poly(6), c in small_poly(6)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn rational_ring_axioms(a in small_poly(5), b in small_poly(5), c in small_poly(5)) {
            let (a, b, c) = (a.to_rat(), b.to_rat(), c.to_rat());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_div_undoes_mul(a in small_poly(7), b in small_poly(5)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn sqrt_undoes_square(a in small_poly(7)) {
            prop_assume!(!a.coeff(0).is_zero());
            let root = (&a * &a).sqrt().unwrap();
            let expected = if a.coeff(0).is_negative() { -a.clone() } else { a.clone() };
            prop_assert_eq!(root, expected);
        }

        #[test]
        fn compose_agrees_with_eval(a in small_poly(5), b in small_poly(4), x in -5i64..5) {
            let x = Integer::from(x);
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }
    }
}
