//! Binomial coefficients, pyramidal numbers, the Catalan family and the
//! arithmetic functions used by the factorization battery.

use std::sync::{OnceLock, RwLock};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Integer, Matrix, Rational};

/// Pascal rows up to this index are memoized.
const PASCAL_CACHE_ROWS: usize = 256;

fn pascal_cache() -> &'static RwLock<Vec<Vec<Integer>>> {
    static CACHE: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![vec![Integer::one()]]))
}

fn cached_binomial(n: usize, k: usize) -> Integer {
    {
        let rows = pascal_cache().read().unwrap();
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = pascal_cache().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(Integer::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(Integer::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Product `n (n-1) ··· (n-k+1) / k!` computed incrementally; every
/// intermediate quotient is an integer.
fn falling_binomial(n: &Integer, k: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient with the falling-factorial convention:
/// `binom(n, 0) = 1` for every `n` (including negative `n`), and
/// `binom(n, k) = 0` for `0 <= n < k`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if k < 0 {
        return Err(Error::NegativeK(k));
    }
    Ok(binomial_nonneg_k(n, k as u64))
}

fn binomial_nonneg_k(n: i64, k: u64) -> Integer {
    if n >= 0 {
        let (n, k) = (n as u64, k);
        if k > n {
            return Integer::zero();
        }
        if (n as usize) <= PASCAL_CACHE_ROWS {
            return cached_binomial(n as usize, k as usize);
        }
        falling_binomial(&Integer::from(n), k.min(n - k))
    } else {
        falling_binomial(&Integer::from(n), k)
    }
}

/// `binom(n, k)`, reading a negative lower index as zero. This is the
/// convention the triangle and matrix formulas use at their edges.
pub fn binom(n: i64, k: i64) -> Integer {
    if k < 0 {
        Integer::zero()
    } else {
        binomial_nonneg_k(n, k as u64)
    }
}

/// The `i`-dimensional pyramidal number `p_j^{[i]}`: the coefficient of `t^j`
/// in `(1 + t) / (1 - t)^{i+1}`. Zero for `j < 0`.
pub fn pyramidal(i: u32, j: i64) -> Integer {
    if j < 0 {
        return Integer::zero();
    }
    let i = i as i64;
    binom(i + j, j) * 2 - binom(i + j - 1, j)
}

/// Rectangular table of pyramidal numbers built by running partial sums,
/// starting from `p^{[0]} = 1, 2, 2, 2, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidalTable {
    rows: Vec<Vec<Integer>>,
}

impl PyramidalTable {
    /// Rows `0..=max_i`, columns `0..=max_j`.
    pub fn new(max_i: usize, max_j: usize) -> Self {
        let mut rows = Vec::with_capacity(max_i + 1);
        let mut row: Vec<Integer> = (0..=max_j)
            .map(|j| if j == 0 { Integer::one() } else { Integer::from(2) })
            .collect();
        rows.push(row.clone());
        for _ in 1..=max_i {
            let mut acc = Integer::zero();
            for v in row.iter_mut() {
                acc += &*v;
                *v = acc.clone();
            }
            rows.push(row.clone());
        }
        PyramidalTable { rows }
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.rows[i]
    }

    pub fn max_i(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_j(&self) -> usize {
        self.rows[0].len() - 1
    }

    /// Column `j` read down the rows.
    pub fn column(&self, j: usize) -> Vec<Integer> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }
}

pub fn central_binomial(n: u64) -> Integer {
    binom(2 * n as i64, n as i64)
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Integer {
    central_binomial(n) / (n + 1)
}

/// Catalan numbers `C_0..=C_n` from the Segner recursion.
pub fn catalan_segner(n: usize) -> Vec<Integer> {
    let mut c = vec![Integer::one()];
    for m in 1..=n {
        let v = (0..m).map(|k| &c[k] * &c[m - 1 - k]).sum();
        c.push(v);
    }
    c
}

/// Fuss–Catalan number `F_m(p, r) = r/(mp + r) · binom(mp + r, m)`, the
/// coefficient of `x^m` in the `r`-th power of the generalized binomial
/// series. The two alternative closed forms are evaluated as a cross-check.
pub fn fuss_catalan(m: u64, p: u64, r: u64) -> Result<Rational> {
    let top = m * p + r;
    if m == 0 {
        return Ok(Rational::one());
    }
    if top == 0 {
        return Err(Error::DegenerateDenominator { m });
    }
    let (m_i, top_i, r_q) = (m as i64, top as i64, Rational::from_integer(r.into()));
    let primary = &r_q / Rational::from_integer(top.into())
        * Rational::from_integer(binom(top_i, m_i));
    let alt_den = m * (p.max(1) - 1) + r;
    if p >= 1 && alt_den != 0 {
        let second = &r_q / Rational::from_integer(alt_den.into())
            * Rational::from_integer(binom(top_i - 1, m_i));
        debug_assert_eq!(second, primary, "Fuss-Catalan forms disagree");
    }
    let third = &r_q / Rational::from_integer(m.into())
        * Rational::from_integer(binom(top_i - 1, m_i - 1));
    debug_assert_eq!(third, primary, "Fuss-Catalan forms disagree");
    Ok(primary)
}

/// Entry of the even Catalan triangle (1-based): `(j/i) · binom(2i, i − j)`;
/// column `j` holds the coefficients of `C(x)^{2j}`.
pub fn catalan_triangle_even(i: i64, j: i64) -> Result<Integer> {
    if i < 1 || j < 1 || j > i {
        return Err(Error::OutOfTriangle { i, j });
    }
    let (q, r) = (binom(2 * i, i - j) * j).div_rem(&Integer::from(i));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Entry of the odd Catalan triangle (0-based): `((2j+1)/(2i+1)) · binom(2i+1, i − j)`;
/// column `j` holds the coefficients of `C(x)^{2j+1}`.
pub fn catalan_triangle_odd(i: i64, j: i64) -> Result<Integer> {
    if i < 0 || j < 0 || j > i {
        return Err(Error::OutOfTriangle { i, j });
    }
    let (q, r) = (binom(2 * i + 1, i - j) * (2 * j + 1)).div_rem(&Integer::from(2 * i + 1));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Both Catalan triangles as `n × n` lower-triangular matrices. The even
/// triangle is stored with its 1-based indices shifted to 0-based storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanTriangles {
    pub even: Matrix<Integer>,
    pub odd: Matrix<Integer>,
}

impl CatalanTriangles {
    pub fn new(n: usize) -> Self {
        let entry = |f: fn(i64, i64) -> Result<Integer>, i: i64, j: i64| {
            f(i, j).unwrap_or_else(|_| Integer::zero())
        };
        CatalanTriangles {
            even: Matrix::from_fn(n, n, |i, j| {
                entry(catalan_triangle_even, i as i64 + 1, j as i64 + 1)
            }),
            odd: Matrix::from_fn(n, n, |i, j| entry(catalan_triangle_odd, i as i64, j as i64)),
        }
    }
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Euler's totient.
pub fn totient(d: u64) -> u64 {
    assert!(d >= 1, "totient is defined for d >= 1");
    factorize(d)
        .into_iter()
        .fold(d, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn moebius(d: u64) -> i64 {
    assert!(d >= 1, "moebius is defined for d >= 1");
    let f = factorize(d);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `exp(Λ(d))`: the prime `q` when `d` is a power of `q`, otherwise 1 (OEIS A014963).
pub fn a014963(d: u64) -> u64 {
    assert!(d >= 1, "a014963 is defined for d >= 1");
    match factorize(d).as_slice() {
        [(q, _)] => *q,
        _ => 1,
    }
}

/// `∏_{e | d} (d/e)^{μ(e)}` as an exact rational; equals [`a014963`].
pub fn mangoldt_product(d: u64) -> Rational {
    divisors(d).into_iter().fold(Rational::one(), |acc, e| {
        let base = Rational::from_integer((d / e).into());
        match moebius(e) {
            1 => acc * base,
            -1 => acc / base,
            _ => acc,
        }
    })
}

/// `true` when `n` is a nonnegative perfect square.
pub fn is_perfect_square(n: &Integer) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, TruncSeries};

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(-1, 0).unwrap(), int(1));
        assert_eq!(binomial(8, 3).unwrap(), int(56));
        assert_eq!(binomial(3, 5).unwrap(), int(0));
        assert_eq!(binomial(-1, 3).unwrap(), int(-1));
        assert_eq!(binomial(-3, 2).unwrap(), int(6));
        assert_eq!(binomial(2, -1), Err(Error::NegativeK(-1)));
    }

    #[test]
    fn binomial_matches_pascal_recurrence_past_the_cache() {
        // Pascal's rule as an independent oracle on both sides of the cache boundary.
        for n in 1..=300i64 {
            for k in [1, 2, n / 3, n / 2, n - 1] {
                if k >= 1 {
                    assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), "n={n} k={k}");
                }
            }
        }
        for n in -20..0i64 {
            for k in 1..10 {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pyramidal_examples() {
        assert_eq!(pyramidal(3, 2), int(14));
        assert_eq!(pyramidal(4, 3), int(50));
        assert_eq!(pyramidal(2, -1), int(0));
        for i in 0..20 {
            assert_eq!(pyramidal(i, 0), int(1));
        }
        let rows: [&[i64]; 5] = [
            &[1, 3, 5, 7, 9, 11],
            &[1, 4, 9, 16, 25, 36],
            &[1, 5, 14, 30, 55, 91],
            &[1, 6, 20, 50, 105, 196],
            &[1, 7, 27, 77, 182, 378],
        ];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(pyramidal(i as u32 + 1, j as i64), int(v));
            }
        }
    }

    #[test]
    fn pyramidal_matches_generating_function() {
        let n = 12;
        for i in 0..8 {
            let gf = TruncSeries::from_i64(n, &[1, 1])
                .pow(1)
                .unwrap();
            let den = TruncSeries::from_i64(n, &[1, -1]).pow(-(i as i64 + 1)).unwrap();
            let gf = &gf * &den;
            for j in 0..=n {
                assert_eq!(*gf.coeff(j), Rational::from_integer(pyramidal(i, j as i64)));
            }
        }
    }

    #[test]
    fn pyramidal_difference_property() {
        let table = PyramidalTable::new(51, 50);
        for i in 0..=50u32 {
            for j in 0..=50i64 {
                assert_eq!(
                    pyramidal(i + 1, j) - pyramidal(i + 1, j - 1),
                    pyramidal(i, j),
                    "i={i} j={j}"
                );
                assert_eq!(*table.get(i as usize, j as usize), pyramidal(i, j));
            }
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(7), int(429));
        assert_eq!(catalan(0), int(1));
        assert_eq!(central_binomial(4), int(70));
        let segner = catalan_segner(200);
        for (n, c) in segner.iter().enumerate() {
            assert_eq!(catalan(n as u64), *c);
        }
    }

    #[test]
    fn fuss_catalan_examples() {
        assert_eq!(fuss_catalan(3, 2, 1).unwrap(), rat(5, 1));
        for m in 0..30 {
            assert_eq!(fuss_catalan(m, 1, 1).unwrap(), rat(1, 1));
        }
        assert_eq!(fuss_catalan(2, 2, 3).unwrap(), rat(9, 1));
        assert_eq!(fuss_catalan(0, 0, 0).unwrap(), rat(1, 1));
        assert_eq!(
            fuss_catalan(2, 0, 0),
            Err(Error::DegenerateDenominator { m: 2 })
        );
    }

    #[test]
    fn fuss_catalan_convolution() {
        for p in 0..=5 {
            for r in 0..=5 {
                for s in 0..=5 {
                    if p == 0 && (r == 0 || s == 0) {
                        continue;
                    }
                    for m in 0..=30 {
                        let lhs = fuss_catalan(m, p, r + s).unwrap();
                        let rhs: Rational = (0..=m)
                            .map(|k| {
                                fuss_catalan(k, p, r).unwrap() * fuss_catalan(m - k, p, s).unwrap()
                            })
                            .sum();
                        assert_eq!(lhs, rhs, "m={m} p={p} r={r} s={s}");
                        assert!(lhs.is_integer());
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(catalan_triangle_even(5, 2).unwrap(), int(48));
        assert_eq!(catalan_triangle_odd(3, 1).unwrap(), int(9));
        assert_eq!(catalan_triangle_even(1, 1).unwrap(), int(1));
        assert_eq!(
            catalan_triangle_even(2, 3),
            Err(Error::OutOfTriangle { i: 2, j: 3 })
        );
        assert!(catalan_triangle_odd(0, 1).is_err());
        assert!(catalan_triangle_even(0, 0).is_err());
    }

    #[test]
    fn triangle_columns_are_convolution_powers_of_catalan() {
        let order = 30;
        let c = TruncSeries::from_integers(order, catalan_segner(order));
        let tri = CatalanTriangles::new(order + 1);
        for j in 0..=order {
            // odd: column j of B^odd holds C^{2j+1} shifted down by j
            let odd = c.pow(2 * j as i64 + 1).unwrap();
            for i in j..=order {
                assert_eq!(
                    Rational::from_integer(tri.odd.get(i, j).clone()),
                    *odd.coeff(i - j)
                );
            }
        }
        for j in 1..=order {
            let even = c.pow(2 * j as i64).unwrap();
            for i in j..=order {
                assert_eq!(
                    Rational::from_integer(tri.even.get(i - 1, j - 1).clone()),
                    *even.coeff(i - j)
                );
            }
        }
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(totient(12), 4);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(17), 16);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(1), 1);
        assert_eq!(a014963(9), 3);
        assert_eq!(a014963(1), 1);
        assert_eq!(a014963(12), 1);
        assert_eq!(a014963(16), 2);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(is_prime(97) && !is_prime(1) && !is_prime(91));
    }

    #[test]
    fn mangoldt_product_matches_prime_power_test() {
        for d in 1..=500 {
            assert_eq!(mangoldt_product(d), Rational::from_integer(a014963(d).into()), "d={d}");
        }
    }

    #[test]
    fn totient_divisor_sum() {
        for n in 1..=200 {
            assert_eq!(divisors(n).into_iter().map(totient).sum::<u64>(), n);
        }
    }
}
