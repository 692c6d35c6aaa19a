//! Exact trigonometric moments `(1/2π)∫cosⁿθ sinᵐθ dθ`, the super Catalan
//! matrix `M` and its `L·D·Lᵀ` factorization.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::basechange::{laurent_expand, real_laurent, TrigElement};
use crate::combinatorics::binom;
use crate::error::{CheckFailed, CheckReport, CheckResult};
use crate::exact::{int, GaussianRational, Integer, LaurentPoly, Matrix, Rational};

/// Mean value over one period, i.e. the integral divided by `2π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralValue {
    pub value: Rational,
}

fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// `(2k)!(2l)! / (k! l! (k+l)!)`.
pub fn super_catalan(k: u64, l: u64) -> Integer {
    let num = factorial(2 * k) * factorial(2 * l);
    let den = factorial(k) * factorial(l) * factorial(k + l);
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "super Catalan number ({k},{l}) is not an integer");
    q
}

/// `binom(k+l−1, l)·binom(2(k+l), k+l) / binom(2(k+l)−1, 2l)`; `None` when the
/// ratio is `0/0` (`k = 0`, `l ≥ 1`).
pub fn super_catalan_ratio_form(k: u64, l: u64) -> Option<Rational> {
    let (k, l) = (k as i64, l as i64);
    let s = k + l;
    let den = binom(2 * s - 1, 2 * l);
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(binom(s - 1, l) * binom(2 * s, s), den))
}

/// `(1/2π)∫₀^{2π} cosⁿθ sinᵐθ dθ` from the closed form.
pub fn trig_integral(n: u64, m: u64) -> IntegralValue {
    let value = if n % 2 == 1 || m % 2 == 1 {
        Rational::zero()
    } else {
        Rational::new(super_catalan(n / 2, m / 2), Integer::one() << (n + m))
    };
    IntegralValue { value }
}

/// The same mean as the constant term of `((z+z⁻¹)/2)ⁿ ((z−z⁻¹)/(2i))ᵐ`.
pub fn trig_integral_oracle(n: u64, m: u64) -> IntegralValue {
    let half = GaussianRational::real(Rational::new(int(1), int(2)));
    let cos = laurent_expand(TrigElement::Kappa(1)).scale(&half);
    let sin = laurent_expand(TrigElement::Sigma(1)).scale(&half);
    let product: LaurentPoly<GaussianRational> = &cos.pow(n as u32) * &sin.pow(m as u32);
    let value = product
        .constant_term()
        .into_real()
        .expect("the mean of a real function is real");
    IntegralValue { value }
}

/// Leading `n × n` block of `M`, `M_{kl} = super_catalan(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperCatalanMatrix {
    pub entries: Matrix<Integer>,
}

impl SuperCatalanMatrix {
    pub fn new(n: usize) -> Self {
        SuperCatalanMatrix {
            entries: Matrix::from_fn(n, n, |k, l| super_catalan(k as u64, l as u64)),
        }
    }

    /// `M_{kl}` as the constant term of `κ^{2k} σ^{2l}` — built without any
    /// closed form.
    pub fn from_laurent(n: usize) -> Self {
        let kappa: Vec<_> = (0..n)
            .map(|k| real_laurent(TrigElement::KappaPow(2 * k as u32)).unwrap())
            .collect();
        let sigma: Vec<_> = (0..n)
            .map(|l| real_laurent(TrigElement::SigmaPow(2 * l as u32)).unwrap())
            .collect();
        SuperCatalanMatrix {
            entries: Matrix::from_fn(n, n, |k, l| {
                let c = (&kappa[k] * &sigma[l]).constant_term();
                assert!(c.is_integer());
                c.to_integer()
            }),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }
}

/// `L_{ij} = binom(2i, i−j)`.
pub fn lu_lower(n: usize) -> Matrix<Integer> {
    Matrix::from_fn(n, n, |i, j| binom(2 * i as i64, i as i64 - j as i64))
}

/// `diag(1, −2, 2, −2, …)`.
pub fn lu_diagonal(n: usize) -> Vec<Integer> {
    (0..n)
        .map(|i| match i {
            0 => int(1),
            _ if i % 2 == 1 => int(-2),
            _ => int(2),
        })
        .collect()
}

/// Checks `(1/2π)∫` closed forms against the Laurent oracle for
/// `0 ≤ k, l ≤ max` (exponents `2k`, `2l`, and their odd neighbours), plus the
/// integration-by-parts recurrence `(m+1) I_{n,m} = (n−1) I_{n−2,m+2}`.
pub fn verify_trig_integrals(max: u64) -> CheckResult {
    const CHECK: &str = "trigonometric integrals";
    let mut comparisons = 0;
    for n in 0..=2 * max + 1 {
        for m in 0..=2 * max + 1 {
            if (n % 2 == 1 || m % 2 == 1) && (n > 7 || m > 7) {
                continue; // odd cases: a few suffice, they vanish by symmetry
            }
            let (closed, oracle) = (trig_integral(n, m), trig_integral_oracle(n, m));
            if closed != oracle {
                return Err(CheckFailed::new(CHECK, format!("I({n},{m})"), oracle.value, closed.value));
            }
            comparisons += 1;
        }
    }
    for n in 2..=30u64 {
        for m in 0..=30u64 {
            let lhs = trig_integral(n, m).value * Rational::from_integer((m + 1).into());
            let rhs = trig_integral(n - 2, m + 2).value * Rational::from_integer((n - 1).into());
            if lhs != rhs {
                return Err(CheckFailed::new(CHECK, format!("recurrence at ({n},{m})"), rhs, lhs));
            }
            comparisons += 1;
        }
    }
    Ok(CheckReport::new(CHECK, comparisons))
}

/// Super Catalan integrality, the ratio form for `k ≥ 1`, symmetry, the first
/// row, and `Σ_{k+l=m} binom(m,l) 2^{−2m} M_{kl} = 1`.
pub fn verify_super_catalan(max: u64) -> CheckResult {
    const CHECK: &str = "super Catalan numbers";
    let mut comparisons = 0;
    for k in 0..=max {
        for l in 0..=max {
            let v = super_catalan(k, l);
            if !v.is_positive() {
                return Err(CheckFailed::new(CHECK, format!("M({k},{l})"), "positive", &v));
            }
            if v != super_catalan(l, k) {
                return Err(CheckFailed::new(CHECK, format!("symmetry at ({k},{l})"), super_catalan(l, k), &v));
            }
            if k >= 1 {
                let ratio = super_catalan_ratio_form(k, l).expect("defined for k ≥ 1");
                if ratio != Rational::from_integer(v.clone()) {
                    return Err(CheckFailed::new(CHECK, format!("ratio form at ({k},{l})"), &v, ratio));
                }
            }
            comparisons += 1;
        }
        let central = binom(2 * k as i64, k as i64);
        if super_catalan(k, 0) != central {
            return Err(CheckFailed::new(CHECK, format!("M({k},0)"), central, super_catalan(k, 0)));
        }
    }
    for m in 0..=max {
        let total: Rational = (0..=m)
            .map(|l| {
                Rational::new(binom(m as i64, l as i64) * super_catalan(m - l, l), Integer::one() << (2 * m))
            })
            .sum();
        if !total.is_one() {
            return Err(CheckFailed::new(CHECK, format!("partition of unity, m={m}"), 1, total));
        }
        comparisons += 1;
    }
    Ok(CheckReport::new(CHECK, comparisons))
}

/// `l`-th summand of the identity; the `l = m ≥ 1` term is `0/0` as written and
/// is taken to be 1.
fn weirdhyp_term(m: u64, l: u64) -> Rational {
    let (m, l) = (m as i64, l as i64);
    if l == m && m >= 1 {
        return Rational::one();
    }
    Rational::new(binom(m - 1, l) * binom(m, l), binom(2 * m - 1, 2 * l))
}

/// `2^{2m} / binom(2m, m) = Σ_{l=0}^{m} binom(m−1,l) binom(m,l) / binom(2m−1,2l)`.
pub fn weirdhyp_check(m: u64) -> CheckResult {
    const CHECK: &str = "central binomial reciprocal identity";
    let lhs = Rational::new(Integer::one() << (2 * m), binom(2 * m as i64, m as i64));
    let rhs = weirdhyp_sum(m);
    if lhs != rhs {
        return Err(CheckFailed::new(CHECK, format!("m={m}"), lhs, rhs));
    }
    Ok(CheckReport::new(CHECK, 1))
}

/// The right-hand side over the common denominator `(2m−1)!`:
/// `binom(m−1,l) binom(m,l) / binom(2m−1,2l) = binom(m−1,l) binom(m,l) (2l)! (2m−1−2l)! / (2m−1)!`.
fn weirdhyp_sum(m: u64) -> Rational {
    if m == 0 {
        return weirdhyp_term(0, 0);
    }
    let mut fact = vec![Integer::one()];
    for k in 1..2 * m {
        let next = &fact[k as usize - 1] * k;
        fact.push(next);
    }
    let top = fact[2 * m as usize - 1].clone();
    let mi = Integer::from(m);
    let (mut b1, mut b2) = (Integer::one(), Integer::one());
    let mut numerator = top.clone(); // the l = m term, taken as 1
    for l in 0..m {
        let (l2, rest) = (2 * l as usize, (2 * m - 1 - 2 * l) as usize);
        numerator += &b1 * &b2 * &fact[l2] * &fact[rest];
        let li = Integer::from(l);
        b1 = b1 * (&mi - 1u32 - &li) / (&li + 1u32);
        b2 = b2 * (&mi - &li) / (&li + 1u32);
    }
    Rational::new(numerator, top)
}

/// `M = L·diag(1,−2,2,…)·Lᵀ` on the leading `N × N` block, and
/// `det M^{(n)} = (−1)^{⌊n/2⌋} 2^{n−1}` for `n ≤ N` (from the factorization,
/// cross-checked by fraction-free elimination for `n ≤ 12`).
pub fn lu_factorization_check(n: usize) -> CheckResult {
    lu_factorization_check_with(&SuperCatalanMatrix::new(n))
}

pub fn lu_factorization_check_with(m: &SuperCatalanMatrix) -> CheckResult {
    const CHECK: &str = "super Catalan LDLᵀ factorization";
    let n = m.size();
    let l = lu_lower(n);
    let d = lu_diagonal(n);
    let ld = Matrix::from_fn(n, n, |i, j| l.get(i, j) * &d[j]);
    let product = &ld * &l.transpose();
    if let Some((i, j, want, got)) = m.entries.first_difference(&product) {
        return Err(CheckFailed::new(CHECK, format!("entry ({i},{j})"), got, want));
    }
    let mut det = Integer::one();
    for size in 1..=n {
        // L is unitriangular, so det M^{(size)} is the product of the first D entries.
        det *= &d[size - 1];
        let want = if (size / 2) % 2 == 0 { int(1) } else { int(-1) } * (Integer::one() << (size - 1));
        if det != want {
            return Err(CheckFailed::new(CHECK, format!("det M^({size})"), want, det));
        }
        if size <= 12 {
            let direct = m.entries.leading_block(size).determinant();
            if direct != want {
                return Err(CheckFailed::new(CHECK, format!("Bareiss det M^({size})"), want, direct));
            }
        }
    }
    Ok(CheckReport::new(CHECK, 2 * n + 1))
}

/// Second construction of `M` from Laurent constant terms of `κ^{2k} σ^{2l}`.
pub fn m_matrix_derivation_check(n: usize) -> CheckResult {
    m_matrix_derivation_check_with(&SuperCatalanMatrix::new(n))
}

pub fn m_matrix_derivation_check_with(m: &SuperCatalanMatrix) -> CheckResult {
    const CHECK: &str = "super Catalan matrix from constant terms";
    let oracle = SuperCatalanMatrix::from_laurent(m.size());
    if let Some((i, j, got, want)) = m.entries.first_difference(&oracle.entries) {
        return Err(CheckFailed::new(CHECK, format!("entry ({i},{j})"), want, got));
    }
    Ok(CheckReport::new(CHECK, m.size() * m.size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn integral_examples() {
        assert_eq!(trig_integral(2, 0).value, rat(1, 2));
        assert_eq!(trig_integral(2, 2).value, rat(1, 8));
        assert_eq!(trig_integral(3, 2).value, rat(0, 1));
        assert_eq!(trig_integral_oracle(2, 2).value, rat(1, 8));
        assert_eq!(trig_integral_oracle(0, 0).value, rat(1, 1));
    }

    #[test]
    fn integrals_match_oracle() {
        verify_trig_integrals(15).unwrap();
    }

    #[test]
    fn super_catalan_examples() {
        assert_eq!(super_catalan(2, 1), int(4));
        assert_eq!(super_catalan(0, 0), int(1));
        assert_eq!(super_catalan(0, 3), int(20));
        assert_eq!(super_catalan(1, 1), int(2));
        assert_eq!(super_catalan(3, 2), int(12));
        assert_eq!(super_catalan_ratio_form(0, 2), None);
        assert_eq!(super_catalan_ratio_form(0, 0), Some(rat(1, 1)));
        verify_super_catalan(60).unwrap();
    }

    #[test]
    fn weirdhyp() {
        let sum = weirdhyp_sum;
        assert_eq!(sum(0), rat(1, 1));
        assert_eq!(sum(1), rat(2, 1));
        assert_eq!(sum(2), rat(8, 3));
        for m in 1..=40 {
            let direct: Rational = (0..=m).map(|l| weirdhyp_term(m, l)).sum();
            assert_eq!(sum(m), direct);
        }
        for m in 0..=500 {
            weirdhyp_check(m).unwrap();
        }
    }

    #[test]
    fn factorization() {
        lu_factorization_check(1).unwrap();
        lu_factorization_check(40).unwrap();
        assert_eq!(SuperCatalanMatrix::new(3).entries.determinant(), int(-4));
        let mut m = SuperCatalanMatrix::new(10);
        m.entries.set(4, 6, int(0));
        let err = lu_factorization_check_with(&m).unwrap_err();
        assert_eq!(err.location, "entry (4,6)");
    }

    #[test]
    fn derivation_from_constant_terms() {
        let m = SuperCatalanMatrix::from_laurent(4);
        assert_eq!(*m.entries.get(1, 1), int(2));
        assert_eq!(*m.entries.get(0, 0), int(1));
        assert_eq!(*m.entries.get(3, 2), int(12));
        m_matrix_derivation_check(20).unwrap();
    }
}
