//! Riordan arrays `(g, f)` over truncated rational series.

use num_traits::Zero;

use crate::combinatorics::{binom, catalan, central_binomial, fuss_catalan};
use crate::error::{CheckFailed, CheckReport, CheckResult, Error, Result};
use crate::exact::{Matrix, Rational, TruncSeries};

/// Working order used when a caller does not pick one.
pub const DEFAULT_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    g: TruncSeries,
    f: TruncSeries,
}

impl RiordanArray {
    /// Both series are truncated to the smaller of their orders; `f(0)` must vanish.
    pub fn new(g: TruncSeries, f: TruncSeries) -> Result<Self> {
        if !f.coeff(0).is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        let order = g.order().min(f.order());
        Ok(RiordanArray {
            g: g.truncate(order),
            f: f.truncate(order),
        })
    }

    /// `(1, x)`.
    pub fn identity(order: usize) -> Self {
        RiordanArray {
            g: TruncSeries::one(order),
            f: TruncSeries::x(order),
        }
    }

    pub fn g(&self) -> &TruncSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.g.coeff(0).is_zero()
    }

    fn check_order(&self, other_order: usize) -> Result<()> {
        if self.order() != other_order {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other_order,
            });
        }
        Ok(())
    }

    /// Group law `(g₁, f₁) ∗ (g₂, f₂) = (g₁·(g₂∘f₁), f₂∘f₁)`.
    pub fn mul(&self, other: &RiordanArray) -> Result<RiordanArray> {
        self.check_order(other.order())?;
        if self.order() >= 1 && self.f.coeff(1).is_zero() {
            return Err(Error::NotInvertible);
        }
        let g = &self.g * &other.g.compose(&self.f)?;
        let f = other.f.compose(&self.f)?;
        Ok(RiordanArray { g, f })
    }

    /// `(1/(g∘f̄), f̄)`.
    pub fn inverse(&self) -> Result<RiordanArray> {
        if !self.is_proper() {
            return Err(Error::NotProper);
        }
        let fbar = lagrange_invert(&self.f)?;
        let g = self.g.compose(&fbar)?.mul_inverse()?;
        Ok(RiordanArray { g, f: fbar })
    }

    /// Fundamental theorem: the matrix acting on the coefficient column of `h`
    /// gives `g·(h∘f)`. `h` may carry more terms than the array; it is truncated.
    pub fn apply(&self, h: &TruncSeries) -> Result<TruncSeries> {
        if h.order() < self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: h.order(),
            });
        }
        Ok(&self.g * &h.truncate(self.order()).compose(&self.f)?)
    }

    /// Leading `n × n` block of the lower-triangular matrix `[xⁿ] g f^k`.
    pub fn matrix(&self, n: usize) -> Result<Matrix<Rational>> {
        if n > self.order() + 1 {
            return Err(Error::OrderMismatch {
                left: self.order() + 1,
                right: n,
            });
        }
        let mut out = Matrix::zeros(n, n);
        let mut column = self.g.clone();
        for k in 0..n {
            for i in k..n {
                out.set(i, k, column.coeff(i).clone());
            }
            column = &column * &self.f;
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == RiordanArray::identity(self.order())
    }

    /// First coefficient where `self` and `other` differ, named `g` or `f`.
    pub fn first_difference(&self, other: &RiordanArray) -> Option<(&'static str, usize, Rational, Rational)> {
        if let Some((k, a, b)) = self.g.first_difference(&other.g) {
            return Some(("g", k, a, b));
        }
        self.f
            .first_difference(&other.f)
            .map(|(k, a, b)| ("f", k, a, b))
    }
}

/// Compositional inverse of `f = x/φ` via `[yⁿ] f̄(y) = (1/n) [x^{n−1}] φ(x)ⁿ`.
pub fn lagrange_invert(f: &TruncSeries) -> Result<TruncSeries> {
    if !f.coeff(0).is_zero() {
        return Err(Error::InnerConstantNonzero);
    }
    let order = f.order();
    if order == 0 {
        return Ok(TruncSeries::zero(0));
    }
    if f.coeff(1).is_zero() {
        return Err(Error::NotInvertible);
    }
    let phi = f.div_x()?.mul_inverse()?;
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut power = TruncSeries::one(phi.order());
    for n in 1..=order {
        power = &power * &phi;
        coeffs[n] = power.coeff(n - 1) / Rational::from_integer(n.into());
    }
    Ok(TruncSeries::new(order, coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesTag {
    /// Catalan numbers.
    C,
    /// Central binomial coefficients.
    B,
    BC,
    BC2,
    C2,
    /// `Σ F_m(p, 1) x^m`.
    GeneralizedBinomial(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSeries {
    pub tag: SeriesTag,
    pub series: TruncSeries,
}

impl NamedSeries {
    pub fn new(tag: SeriesTag, order: usize) -> Self {
        let c = || TruncSeries::from_integers(order, (0..=order as u64).map(catalan));
        let b = || TruncSeries::from_integers(order, (0..=order as u64).map(central_binomial));
        let series = match tag {
            SeriesTag::C => c(),
            SeriesTag::B => b(),
            SeriesTag::BC => &b() * &c(),
            SeriesTag::BC2 => &(&b() * &c()) * &c(),
            SeriesTag::C2 => &c() * &c(),
            SeriesTag::GeneralizedBinomial(p) => TruncSeries::new(
                order,
                (0..=order as u64)
                    .map(|m| fuss_catalan(m, p, 1).expect("r = 1 never degenerates"))
                    .collect(),
            ),
        };
        NamedSeries { tag, series }
    }
}

fn rational_series(order: usize, num: &[i64], den: &[i64]) -> TruncSeries {
    &TruncSeries::from_i64(order, num) * &TruncSeries::from_i64(order, den).mul_inverse().unwrap()
}

/// `x/(1+x)²`.
pub fn x_over_one_plus_x_squared(order: usize) -> TruncSeries {
    rational_series(order, &[0, 1], &[1, 2, 1])
}

/// The Catalan and central-binomial series the theorem checks are built from.
/// Kept as data so a suite can corrupt a coefficient and watch the checks fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanData {
    pub c: TruncSeries,
    pub b: TruncSeries,
}

impl RiordanData {
    pub fn new(order: usize) -> Self {
        RiordanData {
            c: NamedSeries::new(SeriesTag::C, order).series,
            b: NamedSeries::new(SeriesTag::B, order).series,
        }
    }

    pub fn order(&self) -> usize {
        self.c.order().min(self.b.order())
    }
}

fn expect_array(check: &str, what: &str, want: &RiordanArray, got: &RiordanArray) -> Result<(), CheckFailed> {
    match want.first_difference(got) {
        None => Ok(()),
        Some((part, k, a, b)) => Err(CheckFailed::new(
            check,
            format!("{what}: coefficient x^{k} of {part}"),
            a,
            b,
        )),
    }
}

fn expect_series(check: &str, what: &str, want: &TruncSeries, got: &TruncSeries) -> Result<(), CheckFailed> {
    match want.first_difference(got) {
        None => Ok(()),
        Some((k, a, b)) => Err(CheckFailed::new(check, format!("{what}: coefficient x^{k}"), a, b)),
    }
}

fn algebra(check: &str, what: &str, r: Result<RiordanArray>) -> Result<RiordanArray, CheckFailed> {
    r.map_err(|e| CheckFailed::new(check, what, "a defined array", e))
}

/// The four inversions of `(C, xC²)`, `(C², xC²)`, `(B, xC²)`, `(BC, xC²)`,
/// the product lemma that links them, and `C∘(x/(1+x)²) = 1 + x`.
pub fn riordan_theorem_checks(order: usize) -> CheckResult {
    riordan_theorem_checks_with(&RiordanData::new(order))
}

pub fn riordan_theorem_checks_with(data: &RiordanData) -> CheckResult {
    const CHECK: &str = "Riordan inversions";
    let n = data.order();
    let (c, b) = (data.c.truncate(n), data.b.truncate(n));
    let xc2 = (&c * &c).mul_x().truncate(n);
    let f_bar = x_over_one_plus_x_squared(n);
    let arr = |g: TruncSeries, f: &TruncSeries, what: &str| {
        algebra(CHECK, what, RiordanArray::new(g, f.clone()))
    };
    let mut comparisons = 0;

    let lhs = [
        ("(C, xC²)", c.clone()),
        ("(C², xC²)", &c * &c),
        ("(B, xC²)", b.clone()),
        ("(BC, xC²)", &b * &c),
    ];
    let rhs = [
        rational_series(n, &[1], &[1, 1]),
        rational_series(n, &[1], &[1, 2, 1]),
        rational_series(n, &[1, -1], &[1, 1]),
        rational_series(n, &[1, -1], &[1, 2, 1]),
    ];
    let mut inverses = Vec::new();
    for ((name, g), g_inv) in lhs.iter().zip(&rhs) {
        let a = arr(g.clone(), &xc2, name)?;
        let claimed = arr(g_inv.clone(), &f_bar, name)?;
        let inv = algebra(CHECK, name, a.inverse())?;
        expect_array(CHECK, &format!("{name}⁻¹"), &claimed, &inv)?;
        let prod = algebra(CHECK, name, a.mul(&claimed))?;
        expect_array(CHECK, &format!("{name} ∗ claimed inverse"), &RiordanArray::identity(n), &prod)?;
        inverses.push(claimed);
        comparisons += 2;
    }

    // Product lemma: (g₁g₂, f)⁻¹ = (G₁G₂, F) for each pair sharing f = xC².
    for i in 0..lhs.len() {
        for j in i..lhs.len() {
            let what = format!("product lemma {} · {}", lhs[i].0, lhs[j].0);
            let a = arr(&lhs[i].1 * &lhs[j].1, &xc2, &what)?;
            let claimed = arr(inverses[i].g() * inverses[j].g(), &f_bar, &what)?;
            let inv = algebra(CHECK, &what, a.inverse())?;
            expect_array(CHECK, &what, &claimed, &inv)?;
            comparisons += 1;
        }
    }

    let c_of_fbar = c
        .compose(&f_bar)
        .map_err(|e| CheckFailed::new(CHECK, "C∘(x/(1+x)²)", "a series", e))?;
    expect_series(CHECK, "C∘(x/(1+x)²) = 1 + x", &TruncSeries::from_i64(n, &[1, 1]), &c_of_fbar)?;
    comparisons += 1;

    Ok(CheckReport::new(CHECK, comparisons))
}

/// `Σ_j binom(2j+n, j−m) x^j = B·Cⁿ·(C−1)^m`, negative `n` through `C^{−1}`.
pub fn binomial_series_identity(n: i64, m: u64, order: usize) -> CheckResult {
    binomial_series_identity_with(n, m, &RiordanData::new(order))
}

pub fn binomial_series_identity_with(n: i64, m: u64, data: &RiordanData) -> CheckResult {
    let check = format!("binomial series identity (n={n}, m={m})");
    let order = data.order();
    let lhs = TruncSeries::from_integers(
        order,
        (0..=order as i64).map(|j| binom(2 * j + n, j - m as i64)),
    );
    let c = data.c.truncate(order);
    let c_minus_one = &c - &TruncSeries::one(order);
    let power = |s: &TruncSeries, e: i64| {
        s.pow(e)
            .map_err(|err| CheckFailed::new(&check, format!("power {e}"), "a series", err))
    };
    let rhs = &(&data.b.truncate(order) * &power(&c, n)?) * &power(&c_minus_one, m as i64)?;
    expect_series(&check, "coefficients", &lhs, &rhs)?;
    Ok(CheckReport::new(check, order + 1))
}

/// `((1+x)/(1−x)³, −x/(1−x)²) ∗ (BC², −xC²) = (1, x)`.
pub fn zpread_riordan_check(order: usize) -> CheckResult {
    zpread_riordan_check_with(&RiordanData::new(order))
}

pub fn zpread_riordan_check_with(data: &RiordanData) -> CheckResult {
    const CHECK: &str = "zpread Riordan inverse";
    let n = data.order();
    let c = data.c.truncate(n);
    let z = algebra(
        CHECK,
        "zpread array",
        RiordanArray::new(
            rational_series(n, &[1, 1], &[1, -3, 3, -1]),
            rational_series(n, &[0, -1], &[1, -2, 1]),
        ),
    )?;
    let bc2 = &(&data.b.truncate(n) * &c) * &c;
    let neg_xc2 = -(&c * &c).mul_x().truncate(n);
    let w = algebra(CHECK, "(BC², −xC²)", RiordanArray::new(bc2, neg_xc2))?;
    let prod = algebra(CHECK, "product", z.mul(&w))?;
    expect_array(CHECK, "product", &RiordanArray::identity(n), &prod)?;
    let prod = algebra(CHECK, "product", w.mul(&z))?;
    expect_array(CHECK, "reverse product", &RiordanArray::identity(n), &prod)?;
    Ok(CheckReport::new(CHECK, 2))
}

/// Everything in this module at one order.
pub fn verify_riordan_with(data: &RiordanData) -> CheckResult {
    let mut report = riordan_theorem_checks_with(data)?;
    for n in [-1, 0, 1, 2] {
        for m in 0..=2 {
            report = report.absorb(binomial_series_identity_with(n, m, data)?);
        }
    }
    report = report.absorb(zpread_riordan_check_with(data)?);
    Ok(CheckReport::new("Riordan group", report.comparisons))
}
