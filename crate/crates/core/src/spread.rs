//! Spread polynomials `S_n` (`S_n(sin²θ) = sin²(nθ)`) and their integral
//! rescaling, the zpread polynomials `Z_n(x) = 4 S_n(x/4)`
//! (`Z_n(4sin²θ) = 4sin²(nθ)`).

use num_traits::{One, Zero};

use crate::chebyshev::{chebyshev_t_table, chebyshev_u_table, p_table, v_table};
use crate::combinatorics::{binom, pyramidal};
use crate::error::{CheckFailed, CheckReport, CheckResult, Result};
use crate::exact::{int, IntPoly, Integer, Matrix, RatPoly, Rational, TruncSeries};
use crate::riordan::RiordanArray;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpreadKind {
    S,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadFamily {
    pub kind: SpreadKind,
    /// Index `n ≥ 0`.
    pub polys: Vec<IntPoly>,
}

impl SpreadFamily {
    /// `S_0..=S_n` from `S_n = 2(1−2x)S_{n−1} − S_{n−2} + 2x`.
    pub fn spread(n: usize) -> Self {
        SpreadFamily {
            kind: SpreadKind::S,
            polys: recursion(n, &[2, -4], 2),
        }
    }

    /// `Z_0..=Z_n` from `Z_n = (2−x)Z_{n−1} − Z_{n−2} + 2x`.
    pub fn zpread(n: usize) -> Self {
        SpreadFamily {
            kind: SpreadKind::Z,
            polys: recursion(n, &[2, -1], 2),
        }
    }

    /// Square matrix, 1-based in the source: entry `(m−1, n−1)` is the
    /// coefficient of `x^m` in the `n`-th polynomial, `1 ≤ m, n ≤ size`.
    pub fn matrix(&self, size: usize) -> Matrix<Integer> {
        Matrix::from_fn(size, size, |m, n| self.polys[n + 1].coeff(m + 1))
    }
}

fn recursion(n: usize, factor: &[i64], shift: i64) -> Vec<IntPoly> {
    let factor = IntPoly::from_i64(factor);
    let affine = IntPoly::from_i64(&[0, shift]);
    let mut out = vec![IntPoly::zero(), IntPoly::x()];
    while out.len() <= n {
        let k = out.len();
        let next = &(&(&factor * &out[k - 1]) - &out[k - 2]) + &affine;
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

pub fn spread_poly(n: usize) -> IntPoly {
    SpreadFamily::spread(n).polys.pop().unwrap()
}

/// `(1 − T_n(1−2x))/2`.
pub fn spread_from_chebyshev(t_n: &IntPoly) -> Result<IntPoly> {
    let inner = IntPoly::from_i64(&[1, -2]);
    let v = &IntPoly::one() - &t_n.compose(&inner);
    let half = Rational::new(int(1), int(2));
    v.to_rat().scale(&half).to_int()
}

/// `4 S_n(x/4)`.
pub fn zpread_poly(n: usize) -> Result<IntPoly> {
    zpread_from_spread(&spread_poly(n))
}

pub fn zpread_from_spread(s: &IntPoly) -> Result<IntPoly> {
    let coeffs: Vec<Rational> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Rational::new(c * 4, Integer::one() << (2 * k)))
        .collect();
    RatPoly::new(coeffs).to_int()
}

/// Inputs to the spread suite, kept as data for fault injection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadData {
    pub s: Vec<IntPoly>,
    pub z: Vec<IntPoly>,
}

impl SpreadData {
    pub fn new(n: usize) -> Self {
        SpreadData {
            s: SpreadFamily::spread(n).polys,
            z: SpreadFamily::zpread(n).polys,
        }
    }
}

fn fail<T>(check: &str, loc: String, want: impl std::fmt::Display, got: impl std::fmt::Display) -> std::result::Result<T, CheckFailed> {
    Err(CheckFailed::new(check, loc, want, got))
}

/// `Z_{mn} = (−1)^{m+1} p^{[2m]}_{n−m}`, and both `Zᵀ` and `Sᵀ` against their
/// Riordan arrays `((1+x)/(1−x)³, −x/(1−x)²)` and `((1+x)/(1−x)³, −4x/(1−x)²)`.
pub fn zpread_matrix_check(size: usize) -> CheckResult {
    zpread_matrix_check_with(&SpreadData::new(size))
}

pub fn zpread_matrix_check_with(data: &SpreadData) -> CheckResult {
    const CHECK: &str = "zpread matrix";
    let size = data.z.len().min(data.s.len()) - 1;
    let z = SpreadFamily { kind: SpreadKind::Z, polys: data.z.clone() }.matrix(size);
    let s = SpreadFamily { kind: SpreadKind::S, polys: data.s.clone() }.matrix(size);
    for m in 1..=size {
        for n in 1..=size {
            let p = pyramidal(2 * m as u32, n as i64 - m as i64);
            let want = if m % 2 == 1 { p } else { -p };
            let got = z.get(m - 1, n - 1);
            if *got != want {
                return fail(CHECK, format!("Z entry ({m},{n})"), want, got);
            }
        }
    }
    let order = size.saturating_sub(1);
    let g = &TruncSeries::from_i64(order, &[1, 1])
        * &TruncSeries::from_i64(order, &[1, -1]).pow(-3).expect("invertible");
    let inv_sq = TruncSeries::from_i64(order, &[1, -1]).pow(-2).expect("invertible");
    for (name, scale, m) in [("Zᵀ", -1, &z), ("Sᵀ", -4, &s)] {
        let f = (&TruncSeries::from_i64(order, &[0, scale]) * &inv_sq).truncate(order);
        let arr = RiordanArray::new(g.clone(), f).expect("f(0) = 0");
        let riordan = arr.matrix(size).expect("size fits the order");
        let mt = m.transpose().map(|v| Rational::from_integer(v.clone()));
        if let Some((i, j, want, got)) = riordan.first_difference(&mt) {
            return fail(CHECK, format!("{name} vs Riordan array, entry ({},{})", i + 1, j + 1), want, got);
        }
    }
    Ok(CheckReport::new(CHECK, size * size + 2))
}

/// `(1−t)(1−2t+t²+4tx) Σ S_n tⁿ = tx(1+t)` to order `t^N`.
pub fn hirschhorn_gf_check(order: usize) -> CheckResult {
    hirschhorn_gf_check_with(&SpreadData::new(order).s)
}

pub fn hirschhorn_gf_check_with(s: &[IntPoly]) -> CheckResult {
    let target = [IntPoly::zero(), IntPoly::x(), IntPoly::x()];
    cleared_series_check("spread generating function", "t", s, &target)
}

/// `Σ_m a_m y^m` times `(1−y)(1 + (4x−2)y + y²) = 1 + (4x−3)y + (3−4x)y² − y³`,
/// compared against `target`.
fn cleared_series_check(check: &str, var: &str, series: &[IntPoly], target: &[IntPoly]) -> CheckResult {
    let den = [
        IntPoly::one(),
        IntPoly::from_i64(&[-3, 4]),
        IntPoly::from_i64(&[3, -4]),
        IntPoly::from_i64(&[-1]),
    ];
    for m in 0..series.len() {
        let mut lhs = IntPoly::zero();
        for (d, c) in den.iter().enumerate().take(m + 1) {
            lhs = &lhs + &(c * &series[m - d]);
        }
        let want = target.get(m).cloned().unwrap_or_default();
        if lhs != want {
            return fail(check, format!("{var}^{m}"), want, lhs);
        }
    }
    Ok(CheckReport::new(check, series.len()))
}

/// `2^{2n−2} s^n = Σ_{k=1}^{n} (−1)^{k−1} binom(2n, n−k) S_k(s)` in `Z[s]`.
pub fn sqsin_reduction_check(n: usize) -> CheckResult {
    sqsin_reduction_check_with(n, &SpreadData::new(n).s)
}

pub fn sqsin_reduction_check_with(n: usize, s: &[IntPoly]) -> CheckResult {
    const CHECK: &str = "sin^{2n} reduction";
    let lhs = IntPoly::monomial(Integer::one() << (2 * n - 2), n);
    let mut rhs = IntPoly::zero();
    for (k, s_k) in s.iter().enumerate().take(n + 1).skip(1) {
        let b = binom(2 * n as i64, n as i64 - k as i64);
        let c = if k % 2 == 1 { b } else { -b };
        rhs = &rhs + &s_k.scale(&c);
    }
    if lhs != rhs {
        return fail(CHECK, format!("n={n}"), lhs, rhs);
    }
    Ok(CheckReport::new(CHECK, 1))
}

/// `A_{kn} = (−1)^{k−1} binom(2n, n−k)` (1-based), expressing `⧢(θ)ⁿ` through `⧢(kθ)`.
pub fn shuffle_power_matrix(size: usize) -> Matrix<Integer> {
    Matrix::from_fn(size, size, |k, n| {
        let (k, n) = (k as i64 + 1, n as i64 + 1);
        let b = binom(2 * n, n - k);
        if k % 2 == 1 {
            b
        } else {
            -b
        }
    })
}

/// The shuffle-power matrix and `Z` are mutually inverse.
pub fn shuffle_inverse_check(size: usize) -> CheckResult {
    shuffle_inverse_check_with(&SpreadData::new(size).z)
}

pub fn shuffle_inverse_check_with(z: &[IntPoly]) -> CheckResult {
    const CHECK: &str = "shuffle base change";
    let size = z.len() - 1;
    let zm = SpreadFamily { kind: SpreadKind::Z, polys: z.to_vec() }.matrix(size);
    let a = shuffle_power_matrix(size);
    let id = Matrix::identity(size);
    for (name, prod) in [("A·Z", &a * &zm), ("Z·A", &zm * &a)] {
        if let Some((i, j, want, got)) = id.first_difference(&prod) {
            return fail(CHECK, format!("{name} entry ({},{})", i + 1, j + 1), want, got);
        }
    }
    Ok(CheckReport::new(CHECK, 2))
}

/// `(1+x)s = (1−x)((1−x)² + 4xs) Σ S_{n+1}(s) xⁿ` to order `x^N`, and the
/// `s = 1` specialization `Σ S_{n+1}(1) xⁿ = 1/(1−x²)`.
pub fn spreadometric_check(order: usize) -> CheckResult {
    spreadometric_check_with(&SpreadData::new(order + 1).s)
}

pub fn spreadometric_check_with(s: &[IntPoly]) -> CheckResult {
    const CHECK: &str = "spreadometric series";
    let shifted = &s[1..];
    let target = [IntPoly::x(), IntPoly::x()];
    let report = cleared_series_check(CHECK, "x", shifted, &target)?;
    let order = shifted.len() - 1;
    let at_one = TruncSeries::from_integers(order, shifted.iter().map(|p| p.eval(&Integer::one())));
    let geometric = TruncSeries::from_i64(order, &[1, 0, -1]).mul_inverse().expect("invertible");
    if let Some((k, want, got)) = geometric.first_difference(&at_one) {
        return fail(CHECK, format!("s = 1, coefficient of x^{k}"), want, got);
    }
    Ok(CheckReport::new(CHECK, report.comparisons + 1))
}

/// `S_{2n}(x²) = (1−x²)U_{2n−1}(x)²`, `S_{2n+1}(x²) = T_{2n+1}(x)²`, and the
/// zpread forms `Z_{2n}(x²) = (4−x²)V_{2n−1}(x)²`, `Z_{2n+1}(x²) = P_{2n+1}(x)²`.
pub fn cigler_check(n: usize) -> CheckResult {
    cigler_check_with(n, &SpreadData::new(2 * n + 1))
}

pub fn cigler_check_with(n: usize, data: &SpreadData) -> CheckResult {
    const CHECK: &str = "Cigler identities";
    let top = 2 * n + 1;
    let (t, u) = (chebyshev_t_table(top), chebyshev_u_table(top));
    let (p, v) = (p_table(top), v_table(top));
    let x2 = IntPoly::monomial(int(1), 2);
    let one_minus = IntPoly::from_i64(&[1, 0, -1]);
    let four_minus = IntPoly::from_i64(&[4, 0, -1]);
    let sq = |q: &IntPoly| q * q;
    let cases = [
        ("S_{2n}(x²) = (1−x²)U_{2n−1}²", data.s[2 * n].compose(&x2), &one_minus * &sq(&u[2 * n - 1])),
        ("S_{2n+1}(x²) = T_{2n+1}²", data.s[2 * n + 1].compose(&x2), sq(&t[2 * n + 1])),
        ("Z_{2n}(x²) = (4−x²)V_{2n−1}²", data.z[2 * n].compose(&x2), &four_minus * &sq(&v[2 * n - 1])),
        ("Z_{2n+1}(x²) = P_{2n+1}²", data.z[2 * n + 1].compose(&x2), sq(&p[2 * n + 1])),
    ];
    for (name, lhs, rhs) in cases {
        if lhs != rhs {
            return fail(CHECK, format!("n={n}, {name}"), rhs, lhs);
        }
    }
    Ok(CheckReport::new(CHECK, 4))
}

/// `S_n = (1 − T_n(1−2x))/2` and `Z_n = 4S_n(x/4)` for all indices in `data`.
pub fn spread_consistency_check_with(data: &SpreadData) -> CheckResult {
    const CHECK: &str = "spread/Chebyshev consistency";
    let t = chebyshev_t_table(data.s.len() - 1);
    for (n, s_n) in data.s.iter().enumerate() {
        let via_t = spread_from_chebyshev(&t[n])
            .map_err(|e| CheckFailed::new(CHECK, format!("n={n}"), "integer coefficients", e))?;
        if *s_n != via_t {
            return fail(CHECK, format!("S_{n} vs (1−T_{n}(1−2x))/2"), via_t, s_n);
        }
        if let Some(z_n) = data.z.get(n) {
            let rescaled = zpread_from_spread(s_n)
                .map_err(|e| CheckFailed::new(CHECK, format!("n={n}"), "integer coefficients", e))?;
            if *z_n != rescaled {
                return fail(CHECK, format!("Z_{n} vs 4S_{n}(x/4)"), rescaled, z_n);
            }
        }
    }
    Ok(CheckReport::new(CHECK, data.s.len()))
}

/// The spread matrix by the difference-table rule: row `m` holds
/// `(−4)^{m−1} p^{[2m]}`, shifted onto the diagonal.
pub fn spread_matrix_mnemonic(size: usize) -> Matrix<Integer> {
    let mut rows: Vec<Vec<Integer>> = Vec::new();
    // row 1: the squares; each following row of the full pattern is the partial
    // sums of the previous one, and every second row is kept.
    let mut row: Vec<Integer> = (1..=size as i64).map(|j| int(j * j)).collect();
    for m in 1..=size {
        if m > 1 {
            for _ in 0..2 {
                let mut acc = Integer::zero();
                for v in row.iter_mut() {
                    acc += &*v;
                    *v = acc.clone();
                }
            }
        }
        rows.push(row.clone());
    }
    Matrix::from_fn(size, size, |m, n| {
        if n < m {
            return Integer::zero();
        }
        let scale = Integer::from(-4).pow(m as u32);
        &rows[m][n - m] * scale
    })
}
