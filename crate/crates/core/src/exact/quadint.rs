use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::ring::Integer;

/// Element `a + bφ` of Z[φ], where φ is the golden ratio and φ² = φ + 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadInt {
    pub a: Integer,
    pub b: Integer,
}

impl QuadInt {
    pub fn new(a: impl Into<Integer>, b: impl Into<Integer>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn phi() -> Self {
        QuadInt::new(0, 1)
    }

    /// Galois conjugate, sending φ to 1 − φ.
    pub fn conj(&self) -> Self {
        QuadInt {
            a: &self.a + &self.b,
            b: -self.b.clone(),
        }
    }

    /// Field norm N(a + bφ) = a² + ab − b².
    pub fn norm(&self) -> Integer {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }
}

impl From<Integer> for QuadInt {
    fn from(a: Integer) -> Self {
        QuadInt {
            a,
            b: Integer::zero(),
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        let mag = if mag.is_one() { String::new() } else { mag.to_string() };
        if self.a.is_zero() {
            let neg = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{neg}{mag}φ");
        }
        write!(f, "{} {sign} {mag}φ", self.a)
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    // (a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        let bd = &self.b * &rhs.b;
        QuadInt {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $m(self, rhs: QuadInt) -> QuadInt {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $m(self, rhs: &QuadInt) -> QuadInt {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<'a> AddAssign<&'a QuadInt> for QuadInt {
    fn add_assign(&mut self, rhs: &QuadInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> SubAssign<&'a QuadInt> for QuadInt {
    fn sub_assign(&mut self, rhs: &QuadInt) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Zero for QuadInt {
    fn zero() -> Self {
        QuadInt::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadInt {
    fn one() -> Self {
        QuadInt::new(1, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = QuadInt::phi();
        assert_eq!(&phi * &phi, &phi + &QuadInt::one());
    }

    #[test]
    fn two_plus_phi_squared() {
        let x = QuadInt::new(2, 1);
        assert_eq!(&x * &x, QuadInt::new(5, 5));
    }

    fn arb() -> impl Strategy<Value = QuadInt> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| QuadInt::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
        }

        #[test]
        fn norm_is_multiplicative(x in arb(), y in arb()) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            prop_assert_eq!(&x * &x.conj(), QuadInt::from(x.norm()));
        }
    }
}
