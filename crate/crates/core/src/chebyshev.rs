//! Chebyshev polynomials `T_n`, `U_n`, their depowered forms `P_n`, `V_n`,
//! the pyramidal closed forms, and exact trigonometric-value oracles.

use num_traits::{One, Zero};

use crate::combinatorics::{binom, pyramidal};
use crate::error::{CheckFailed, CheckReport, CheckResult, Result};
use crate::exact::{int, GaussianRational, IntPoly, Integer, LaurentPoly, Matrix, Rational, Ring};

fn three_term(n: usize, first: IntPoly, second: IntPoly, x_coeff: i64) -> Vec<IntPoly> {
    let step = IntPoly::monomial(int(x_coeff), 1);
    let mut out = vec![first, second];
    while out.len() <= n {
        let k = out.len();
        out.push(&(&step * &out[k - 1]) - &out[k - 2]);
    }
    out.truncate(n + 1);
    out
}

/// `T_0..=T_n` from the three-term recursion.
pub fn chebyshev_t_table(n: usize) -> Vec<IntPoly> {
    three_term(n, IntPoly::one(), IntPoly::x(), 2)
}

/// `U_0..=U_n` from the three-term recursion.
pub fn chebyshev_u_table(n: usize) -> Vec<IntPoly> {
    three_term(n, IntPoly::one(), IntPoly::from_i64(&[0, 2]), 2)
}

/// `P_0..=P_n`: `P_0 = 1`, `P_n(z) = 2 T_n(z/2)`, i.e. `P_n = z P_{n-1} − P_{n-2}`
/// with `P_1 = z`, `P_2 = z² − 2`.
pub fn p_table(n: usize) -> Vec<IntPoly> {
    let mut out = three_term(n.max(2), IntPoly::from_i64(&[2]), IntPoly::x(), 1);
    out[0] = IntPoly::one();
    out.truncate(n + 1);
    out
}

/// `V_0..=V_n` with `V_n(z) = U_n(z/2)`.
pub fn v_table(n: usize) -> Vec<IntPoly> {
    three_term(n, IntPoly::one(), IntPoly::x(), 1)
}

pub fn chebyshev_t(n: usize) -> IntPoly {
    chebyshev_t_table(n).pop().unwrap()
}

pub fn chebyshev_u(n: usize) -> IntPoly {
    chebyshev_u_table(n).pop().unwrap()
}

/// `2 T_n(z/2)` for `n > 0`, `1` for `n = 0`, computed by rescaling `T_n`.
pub fn p_poly(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::one());
    }
    rescale_half(&chebyshev_t(n), &int(2))
}

/// `U_n(z/2)`, computed by rescaling `U_n`.
pub fn v_poly(n: usize) -> Result<IntPoly> {
    rescale_half(&chebyshev_u(n), &int(1))
}

/// `factor · p(z/2)`, which must have integer coefficients.
fn rescale_half(p: &IntPoly, factor: &Integer) -> Result<IntPoly> {
    let coeffs: Vec<Rational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Rational::new(c * factor, Integer::one() << k))
        .collect();
    crate::exact::RatPoly::new(coeffs).to_int()
}

/// `T_n` from the pyramidal-number formulas.
pub fn t_closed_form(n: usize) -> IntPoly {
    let half = n / 2;
    let sign = |e: usize| if e % 2 == 0 { Integer::one() } else { -Integer::one() };
    let mut coeffs = vec![Integer::zero(); n + 1];
    if n % 2 == 0 {
        coeffs[0] = sign(half);
        for j in 1..=half {
            coeffs[2 * j] = sign(half + j)
                * (Integer::one() << (2 * j - 1))
                * pyramidal(2 * j as u32, (half - j) as i64);
        }
    } else {
        for j in 0..=half {
            coeffs[2 * j + 1] = sign(half + j)
                * (Integer::one() << (2 * j))
                * pyramidal(2 * j as u32 + 1, (half - j) as i64);
        }
    }
    IntPoly::new(coeffs)
}

/// `U_n` from the binomial formulas.
pub fn u_closed_form(n: usize) -> IntPoly {
    let half = n / 2;
    let sign = |e: usize| if e % 2 == 0 { Integer::one() } else { -Integer::one() };
    let mut coeffs = vec![Integer::zero(); n + 1];
    for j in 0..=half {
        let (nn, jj) = (half as i64, j as i64);
        if n % 2 == 0 {
            coeffs[2 * j] = sign(half + j) * (Integer::one() << (2 * j)) * binom(nn + jj, 2 * jj);
        } else {
            coeffs[2 * j + 1] =
                sign(half + j) * (Integer::one() << (2 * j + 1)) * binom(nn + jj + 1, 2 * jj + 1);
        }
    }
    IntPoly::new(coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebKind {
    T,
    U,
    P,
    V,
}

impl ChebKind {
    pub fn table(self, n: usize) -> Vec<IntPoly> {
        match self {
            ChebKind::T => chebyshev_t_table(n),
            ChebKind::U => chebyshev_u_table(n),
            ChebKind::P => p_table(n),
            ChebKind::V => v_table(n),
        }
    }
}

/// Square coefficient matrix: entry `(m, n)` is the coefficient of `x^m` in
/// the `n`-th polynomial of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebMatrix {
    pub kind: ChebKind,
    entries: Matrix<Integer>,
}

impl ChebMatrix {
    /// Columns `0..size` from the recursion.
    pub fn new(kind: ChebKind, size: usize) -> Self {
        let polys = if size == 0 { Vec::new() } else { kind.table(size - 1) };
        Self::from_polys(kind, &polys)
    }

    pub fn from_polys(kind: ChebKind, polys: &[IntPoly]) -> Self {
        let size = polys.len();
        ChebMatrix {
            kind,
            entries: Matrix::from_fn(size, size, |m, n| polys[n].coeff(m)),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn entry(&self, m: usize, n: usize) -> &Integer {
        self.entries.get(m, n)
    }

    pub fn matrix(&self) -> &Matrix<Integer> {
        &self.entries
    }

    pub fn into_matrix(self) -> Matrix<Integer> {
        self.entries
    }

    pub fn column_poly(&self, n: usize) -> IntPoly {
        IntPoly::new(self.entries.column(n))
    }
}

/// Builds `P` from difference and partial-sum rows: row 1 holds the odd
/// numbers, row 0 their differences `1, 2, 2, …`, and row `i + 1` the running
/// sums of row `i`. Row `i`'s `j`-th entry lands at `(i, i + 2j)` with sign `(−1)^j`.
pub fn mnemonic_p_matrix(size: usize) -> ChebMatrix {
    let width = size.div_ceil(2).max(1);
    let odd: Vec<Integer> = (0..width).map(|j| int(2 * j as i64 + 1)).collect();
    let mut rows = Vec::with_capacity(size);
    let mut diffs = odd.clone();
    for j in (1..width).rev() {
        diffs[j] = &odd[j] - &odd[j - 1];
    }
    rows.push(diffs);
    rows.push(odd);
    while rows.len() < size {
        let mut next = rows.last().unwrap().clone();
        for j in 1..width {
            let prev = next[j - 1].clone();
            next[j] += &prev;
        }
        rows.push(next);
    }
    let mut entries = Matrix::zeros(size, size);
    for (i, row) in rows.iter().enumerate().take(size) {
        for (j, v) in row.iter().enumerate() {
            let col = i + 2 * j;
            if col < size {
                entries.set(i, col, if j % 2 == 0 { v.clone() } else { -v.clone() });
            }
        }
    }
    ChebMatrix { kind: ChebKind::P, entries }
}

/// Recovers `T` from `P`: the 2s of row 0 become 1s and row `i ≥ 1` is scaled
/// by `2^{i−1}`.
pub fn t_from_p(p: &ChebMatrix) -> ChebMatrix {
    let size = p.size();
    let entries = Matrix::from_fn(size, size, |i, n| {
        let v = p.entry(i, n);
        if i == 0 {
            if n == 0 {
                v.clone()
            } else {
                v / 2
            }
        } else {
            v * (Integer::one() << (i - 1))
        }
    });
    ChebMatrix { kind: ChebKind::T, entries }
}

/// `{n; k}`, stored doubled so that the corner value `1/2` is integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceNumber {
    pub n: usize,
    pub k: usize,
    pub doubled: Integer,
}

impl BraceNumber {
    pub fn value(&self) -> Rational {
        Rational::new(self.doubled.clone(), int(2))
    }
}

/// Doubled brace numbers for `0..=max_n × 0..=max_k` from
/// `{n;k} = 2{n−1;k} − {n;k−1}` with `{n;0} = 2^{n−1}`, `{0;k} = (−1)^k` (`k > 0`),
/// `{0;0} = 1/2`.
pub fn brace_table(max_n: usize, max_k: usize) -> Vec<Vec<Integer>> {
    let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut row = Vec::with_capacity(max_k + 1);
        for k in 0..=max_k {
            let v = match (n, k) {
                (_, 0) => Integer::one() << n,
                (0, k) => int(if k % 2 == 0 { 2 } else { -2 }),
                _ => &rows[n - 1][k] * 2 - &row[k - 1],
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

pub fn brace(n: usize, k: usize) -> BraceNumber {
    let doubled = brace_table(n, k)[n][k].clone();
    BraceNumber { n, k, doubled }
}

/// Horner evaluation of an integer polynomial at a Laurent polynomial.
fn eval_laurent<R: Ring>(p: &IntPoly, at: &LaurentPoly<R>, embed: impl Fn(&Integer) -> R) -> LaurentPoly<R> {
    let mut acc = LaurentPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * at) + &LaurentPoly::monomial(embed(c), 0);
    }
    acc
}

fn laurent_mismatch<R: Ring + std::fmt::Display>(
    check: &str,
    n: usize,
    expected: &LaurentPoly<R>,
    actual: &LaurentPoly<R>,
) -> Option<CheckFailed> {
    expected.first_difference(actual).map(|(e, want, got)| {
        CheckFailed::new(check, format!("n={n}, coefficient of z^{e}"), want, got)
    })
}

fn half() -> Rational {
    Rational::new(int(1), int(2))
}

/// `(z^k + z^{−k})/2` and `(z^k − z^{−k})/2` over the rationals.
fn cos_laurent(k: i64) -> LaurentPoly<Rational> {
    LaurentPoly::cos_pair(k).scale(&half())
}

fn sin_times_i_laurent(k: i64) -> LaurentPoly<Rational> {
    LaurentPoly::from_terms([(k, half()), (-k, -half())])
}

/// Checks the cosine and sine evaluations of `T_n` and `U_n` as Laurent
/// identities in `z = e^{iθ}`.
pub fn verify_trig_values(n: usize) -> CheckResult {
    verify_trig_values_with(n, &chebyshev_t(n), &chebyshev_u(n))
}

pub fn verify_trig_values_with(n: usize, t_n: &IntPoly, u_n: &IntPoly) -> CheckResult {
    const CHECK: &str = "Chebyshev trigonometric values";
    let ni = n as i64;
    let mut comparisons = 0;
    let mut compare = |exp: &LaurentPoly<Rational>, act: &LaurentPoly<Rational>| {
        comparisons += 1;
        match laurent_mismatch(CHECK, n, exp, act) {
            Some(f) => Err(f),
            None => Ok(()),
        }
    };

    // cosine side
    let cos1 = cos_laurent(1);
    let embed = |c: &Integer| Rational::from_integer(c.clone());
    compare(&cos_laurent(ni), &eval_laurent(t_n, &cos1, embed))?;
    let sin_u = &sin_times_i_laurent(1) * &eval_laurent(u_n, &cos1, embed);
    compare(&sin_times_i_laurent(ni + 1), &sin_u)?;

    // sine side over the Gaussian rationals: sin θ = (z − z⁻¹)/(2i)
    let inv_i = -GaussianRational::i();
    let sin1 = sin_times_i_laurent(1).to_gaussian().scale(&inv_i);
    let gembed = |c: &Integer| GaussianRational::from_integer(c.clone());
    let sign = if (n / 2) % 2 == 0 { Integer::one() } else { -Integer::one() };
    let trig = |k: i64, even: bool| -> LaurentPoly<GaussianRational> {
        if even {
            cos_laurent(k).to_gaussian()
        } else {
            sin_times_i_laurent(k).to_gaussian().scale(&inv_i)
        }
    };
    let sign_g = GaussianRational::from_integer(sign);
    let even = n % 2 == 0;
    let compare_g = |exp: &LaurentPoly<GaussianRational>, act: &LaurentPoly<GaussianRational>| {
        match laurent_mismatch(CHECK, n, exp, act) {
            Some(f) => Err(f),
            None => Ok(()),
        }
    };
    let t_sin = eval_laurent(t_n, &sin1, gembed);
    compare_g(&trig(ni, even).scale(&sign_g), &t_sin)?;
    let u_sin_cos = &eval_laurent(u_n, &sin1, gembed) * &cos1.to_gaussian();
    compare_g(&trig(ni + 1, even).scale(&sign_g), &u_sin_cos)?;
    comparisons += 2;

    Ok(CheckReport::new(CHECK, comparisons))
}

/// The polynomial families to test against their generating functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevData {
    pub t: Vec<IntPoly>,
    pub u: Vec<IntPoly>,
    pub p: Vec<IntPoly>,
}

impl ChebyshevData {
    pub fn new(order: usize) -> Self {
        ChebyshevData {
            t: chebyshev_t_table(order),
            u: chebyshev_u_table(order),
            p: p_table(order),
        }
    }
}

/// `(1 − a·x·t + t²) · Σ_m S_m t^m` compared with `target` to order `len − 1`,
/// all coefficients being polynomials in `x`.
fn gf_product_check(
    check: &str,
    series: &[IntPoly],
    x_coeff: i64,
    target: &[IntPoly],
) -> CheckResult {
    let step = IntPoly::monomial(int(x_coeff), 1);
    for m in 0..series.len() {
        let mut lhs = series[m].clone();
        if m >= 1 {
            lhs = &lhs - &(&step * &series[m - 1]);
        }
        if m >= 2 {
            lhs = &lhs + &series[m - 2];
        }
        let want = target.get(m).cloned().unwrap_or_default();
        if lhs != want {
            return Err(CheckFailed::new(check, format!("t^{m}"), want, lhs));
        }
    }
    Ok(CheckReport::new(check, series.len()))
}

/// Generating-function identities for `T`, `U` and `P` to order `t^N`.
pub fn gf_check_chebyshev(order: usize) -> CheckResult {
    gf_check_chebyshev_with(&ChebyshevData::new(order))
}

pub fn gf_check_chebyshev_with(data: &ChebyshevData) -> CheckResult {
    let one = IntPoly::one();
    let t = gf_product_check(
        "T generating function",
        &data.t,
        2,
        &[one.clone(), IntPoly::from_i64(&[0, -1])],
    )?;
    let u = gf_product_check("U generating function", &data.u, 2, &[one.clone()])?;
    let p = gf_product_check(
        "P generating function",
        &data.p,
        1,
        &[one, IntPoly::zero(), IntPoly::from_i64(&[-1])],
    )?;
    Ok(CheckReport::new("Chebyshev generating functions", 0).absorb(t).absorb(u).absorb(p))
}

/// Closed forms, parity, depowering, the addition-theorem identities and the
/// pyramidal reading of `P`, for all indices up to `n`.
pub fn verify_structure_with(data: &ChebyshevData) -> CheckResult {
    const CHECK: &str = "Chebyshev structure";
    let mut comparisons = 0;
    let fail = |loc: String, want: &dyn std::fmt::Display, got: &dyn std::fmt::Display| {
        Err(CheckFailed::new(CHECK, loc, want, got))
    };
    let x = IntPoly::x();
    let x2m1 = IntPoly::from_i64(&[-1, 0, 1]);
    for n in 0..data.t.len() {
        let (t, u) = (&data.t[n], &data.u[n]);
        let (tc, uc) = (t_closed_form(n), u_closed_form(n));
        if *t != tc {
            return fail(format!("T_{n} closed form"), &tc, t);
        }
        if *u != uc {
            return fail(format!("U_{n} closed form"), &uc, u);
        }
        let parity = |p: &IntPoly| if n % 2 == 0 { p.clone() } else { -p.clone() };
        if t.reflect() != parity(t) {
            return fail(format!("T_{n}(-x) parity"), &parity(t), &t.reflect());
        }
        if u.reflect() != parity(u) {
            return fail(format!("U_{n}(-x) parity"), &parity(u), &u.reflect());
        }
        if let Some(p) = data.p.get(n) {
            if p.reflect() != parity(p) {
                return fail(format!("P_{n}(-x) parity"), &parity(p), &p.reflect());
            }
            if n >= 1 {
                let depowered = rescale_half(t, &int(2)).map_err(|e| {
                    CheckFailed::new(CHECK, format!("P_{n} depowering"), "integers", e)
                })?;
                if *p != depowered {
                    return fail(format!("P_{n} = 2T_{n}(z/2)"), &depowered, p);
                }
            }
            for j in 0..=n / 2 {
                let i = n - 2 * j;
                let want = pyramidal(i as u32, j as i64);
                let got = p.coeff(i);
                let got_abs = if j % 2 == 0 { got.clone() } else { -got.clone() };
                if got_abs != want {
                    return fail(format!("P entry ({i},{n}) vs pyramidal p^[{i}]_{j}"), &want, &got);
                }
            }
        }
        if n >= 1 {
            let u_prev2 = if n >= 2 { data.u[n - 2].clone() } else { IntPoly::zero() };
            let lhs = &(&x * &data.t[n - 1]) + &(&x2m1 * &u_prev2);
            if lhs != *t {
                return fail(format!("xT_{}+(x²-1)U_{} = T_{n}", n - 1, n as i64 - 2), t, &lhs);
            }
            let lhs = t + &(&x * &data.u[n - 1]);
            if lhs != *u {
                return fail(format!("T_{n}+xU_{} = U_{n}", n - 1), u, &lhs);
            }
        }
        comparisons += 1;
    }
    Ok(CheckReport::new(CHECK, comparisons))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn recursion_examples() {
        assert_eq!(chebyshev_t(4), IntPoly::from_i64(&[1, 0, -8, 0, 8]));
        assert_eq!(chebyshev_t(0), IntPoly::one());
        assert_eq!(chebyshev_u(0), IntPoly::one());
        assert_eq!(chebyshev_u(5), IntPoly::from_i64(&[0, 6, 0, -32, 0, 32]));
    }

    #[test]
    fn depowered_examples() {
        assert_eq!(p_poly(4).unwrap(), IntPoly::from_i64(&[2, 0, -4, 0, 1]));
        assert_eq!(p_poly(1).unwrap(), IntPoly::x());
        assert_eq!(p_poly(0).unwrap(), IntPoly::one());
        assert_eq!(v_poly(3).unwrap(), IntPoly::from_i64(&[0, -2, 0, 1]));
        for n in 0..=60 {
            assert_eq!(p_poly(n).unwrap(), p_table(n)[n]);
            assert_eq!(v_poly(n).unwrap(), v_table(n)[n]);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(t_closed_form(2), IntPoly::from_i64(&[-1, 0, 2]));
        assert_eq!(u_closed_form(4), IntPoly::from_i64(&[1, 0, -12, 0, 16]));
        assert_eq!(t_closed_form(0), IntPoly::one());
    }

    #[test]
    fn closed_forms_match_recursion() {
        let (t, u) = (chebyshev_t_table(200), chebyshev_u_table(200));
        for n in 0..=200 {
            assert_eq!(t_closed_form(n), t[n], "T_{n}");
            assert_eq!(u_closed_form(n), u[n], "U_{n}");
        }
    }

    #[test]
    fn structure_suite_passes() {
        let report = verify_structure_with(&ChebyshevData::new(200)).unwrap();
        assert_eq!(report.comparisons, 201);
    }

    #[test]
    fn mnemonic_matches_recursion() {
        assert_eq!(mnemonic_p_matrix(1).matrix(), &Matrix::from_rows(vec![vec![int(1)]]));
        let m3 = mnemonic_p_matrix(3);
        assert_eq!(m3.column_poly(2), IntPoly::from_i64(&[-2, 0, 1]));
        for size in 1..=40 {
            assert_eq!(mnemonic_p_matrix(size), ChebMatrix::new(ChebKind::P, size), "size {size}");
        }
        let p = mnemonic_p_matrix(25);
        assert_eq!(t_from_p(&p), ChebMatrix::new(ChebKind::T, 25));
    }

    #[test]
    fn brace_examples() {
        assert_eq!(brace(5, 0).value(), Rational::from_integer(int(16)));
        assert_eq!(brace(0, 3).value(), Rational::from_integer(int(-1)));
        assert_eq!(brace(0, 0).value(), Rational::new(int(1), int(2)));
        assert_eq!(brace(0, 0).doubled, int(1));
        assert_eq!(brace(4, 1).value(), Rational::from_integer(int(-48)));
    }

    #[test]
    fn brace_numbers_are_t_entries() {
        let t = ChebMatrix::new(ChebKind::T, 61);
        let table = brace_table(30, 15);
        for n in 0..=30 {
            for k in 0..=15 {
                let want = if n == 0 && k == 0 {
                    t.entry(0, 0).clone()
                } else {
                    t.entry(n, n + 2 * k) * 2
                };
                assert_eq!(table[n][k], want, "{{{n};{k}}}");
            }
        }
    }

    #[test]
    fn trig_values() {
        for n in 0..=40 {
            verify_trig_values(n).unwrap();
        }
    }

    #[test]
    fn trig_values_detect_mutation() {
        let mut t4 = chebyshev_t(4).into_coeffs();
        t4[2] += int(1);
        let err = verify_trig_values_with(4, &IntPoly::new(t4), &chebyshev_u(4)).unwrap_err();
        assert!(err.location.contains("n=4"));
    }

    #[test]
    fn sine_variant_sign_for_t4() {
        // T₄(sin θ) = +cos 4θ
        let s = sin_times_i_laurent(1).to_gaussian().scale(&-GaussianRational::i());
        let v = eval_laurent(&chebyshev_t(4), &s, |c| GaussianRational::from_integer(c.clone()));
        assert_eq!(v, cos_laurent(4).to_gaussian());
    }

    #[test]
    fn generating_functions() {
        gf_check_chebyshev(1).unwrap();
        gf_check_chebyshev(30).unwrap();
        let mut data = ChebyshevData::new(30);
        data.t[5] = -data.t[5].clone();
        let err = gf_check_chebyshev_with(&data).unwrap_err();
        assert_eq!(err.location, "t^5");
    }

    proptest! {
        #[test]
        fn chebyshev_composition(m in 0usize..12, n in 0usize..12) {
            // T_m ∘ T_n = T_{mn}
            prop_assert_eq!(chebyshev_t(m).compose(&chebyshev_t(n)), chebyshev_t(m * n));
        }

        #[test]
        fn u_telescopes_t(n in 2usize..80) {
            // 2T_n = U_n − U_{n−2}
            let t = chebyshev_t(n);
            prop_assert_eq!(&t + &t, &chebyshev_u(n) - &chebyshev_u(n - 2));
        }
    }
}
