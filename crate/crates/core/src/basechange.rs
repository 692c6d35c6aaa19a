//! Power reduction and the eight transition matrices between multiple-angle,
//! power and `ν` bases, each checked against Laurent representatives in
//! `z = e^{iθ}`.
//!
//! Notation: `κ(θ) = 2cos θ`, `σ(θ) = 2sin θ`, `ν_m(θ) = sin((m+1)θ)/sin θ`.

use num_traits::{One, Zero};

use crate::chebyshev::{chebyshev_t_table, chebyshev_u_table};
use crate::combinatorics::{binom, catalan_triangle_even, catalan_triangle_odd, pyramidal};
use crate::error::{CheckFailed, CheckReport, CheckResult};
use crate::exact::{int, GaussianRational, IntPoly, Integer, LaurentPoly, Matrix, Rational};

/// A single trigonometric function with an exact Laurent representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigElement {
    One,
    /// `κ(kθ) = z^k + z^{−k}`.
    Kappa(i64),
    /// `ν_m = z^m + z^{m−2} + … + z^{−m}`.
    Nu(i64),
    /// `κ(θ)^n`.
    KappaPow(u32),
    /// `σ(kθ) = −i (z^k − z^{−k})`.
    Sigma(i64),
    /// `σ(θ)^n`.
    SigmaPow(u32),
}

/// Canonical representative over the Gaussian rationals.
pub fn laurent_expand(e: TrigElement) -> LaurentPoly<GaussianRational> {
    match e {
        TrigElement::Sigma(k) => sigma_multiple(k),
        TrigElement::SigmaPow(n) => sigma_multiple(1).pow(n),
        other => real_laurent(other)
            .expect("cosine-family elements have real representatives")
            .to_gaussian(),
    }
}

/// Real representative, for the elements that have one (`σ^n` with `n` even
/// included).
pub fn real_laurent(e: TrigElement) -> Option<LaurentPoly<Rational>> {
    let one = Rational::one;
    Some(match e {
        TrigElement::One => LaurentPoly::one(),
        TrigElement::Kappa(k) => LaurentPoly::cos_pair(k),
        TrigElement::Nu(m) => LaurentPoly::from_terms((0..=m).map(|j| (m - 2 * j, one()))),
        TrigElement::KappaPow(n) => LaurentPoly::cos_pair(1).pow(n),
        TrigElement::SigmaPow(n) if n % 2 == 0 => {
            // σ² = −(z − z⁻¹)² = 2 − z² − z⁻²
            LaurentPoly::from_terms([(0, int(2).into()), (2, -one()), (-2, -one())]).pow(n / 2)
        }
        TrigElement::Sigma(_) | TrigElement::SigmaPow(_) => return None,
    })
}

fn sigma_multiple(k: i64) -> LaurentPoly<GaussianRational> {
    let minus_i = -GaussianRational::i();
    LaurentPoly::from_terms([(k, minus_i.clone()), (-k, -minus_i)])
}

/// Ordered bases of trigonometric polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigBasis {
    /// `1, κ(2θ), κ(4θ), …`
    EvenKappaMultiple,
    /// `κ(θ), κ(3θ), …`
    OddKappaMultiple,
    /// `κ⁰, κ², κ⁴, …`
    EvenKappaPower,
    /// `κ¹, κ³, …`
    OddKappaPower,
    /// `ν₀, ν₂, ν₄, …`
    EvenNu,
    /// `ν₁, ν₃, …`
    OddNu,
    /// `σ(θ), σ(2θ), σ(3θ), …`
    SigmaMultiple,
    /// `σ⁰, σ¹, σ², …`
    SigmaPower,
}

impl TrigBasis {
    pub fn element(self, n: usize) -> TrigElement {
        let k = n as i64;
        match self {
            TrigBasis::EvenKappaMultiple if n == 0 => TrigElement::One,
            TrigBasis::EvenKappaMultiple => TrigElement::Kappa(2 * k),
            TrigBasis::OddKappaMultiple => TrigElement::Kappa(2 * k + 1),
            TrigBasis::EvenKappaPower => TrigElement::KappaPow(2 * n as u32),
            TrigBasis::OddKappaPower => TrigElement::KappaPow(2 * n as u32 + 1),
            TrigBasis::EvenNu => TrigElement::Nu(2 * k),
            TrigBasis::OddNu => TrigElement::Nu(2 * k + 1),
            TrigBasis::SigmaMultiple => TrigElement::Sigma(k + 1),
            TrigBasis::SigmaPower => TrigElement::SigmaPow(n as u32),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerKind {
    CosEven,
    CosOdd,
    SinEven,
    SinOdd,
}

/// Multiple-angle expansion of a normalized power of `cos` or `sin`.
///
/// * `CosEven`: `2^{2n−1}cos^{2n} = Σ_k c_k cos(2kθ)`
/// * `CosOdd`:  `2^{2n}cos^{2n+1} = Σ_k c_k cos((2k+1)θ)`
/// * `SinEven`: `2^{2n−1}sin^{2n} = Σ_k c_k cos(2kθ)`
/// * `SinOdd`:  `2^{2n}sin^{2n+1} = Σ_k c_k sin((2k+1)θ)`
///
/// `coeffs[k]` is `c_k`; for the even kinds `c_0 = binom(2n, n)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerReduction {
    pub kind: PowerKind,
    pub n: u32,
    pub coeffs: Vec<Rational>,
}

pub fn power_reduce(kind: PowerKind, n: u32) -> PowerReduction {
    let ni = n as i64;
    let sign = |k: i64| match kind {
        PowerKind::SinEven | PowerKind::SinOdd if k % 2 == 1 => -Rational::one(),
        _ => Rational::one(),
    };
    let coeffs = match kind {
        PowerKind::CosEven | PowerKind::SinEven => (0..=ni)
            .map(|k| {
                let b = Rational::from_integer(binom(2 * ni, ni - k));
                let b = if k == 0 { b / Rational::from_integer(int(2)) } else { b };
                sign(k) * b
            })
            .collect(),
        PowerKind::CosOdd | PowerKind::SinOdd => (0..=ni)
            .map(|k| sign(k) * Rational::from_integer(binom(2 * ni + 1, ni - k)))
            .collect(),
    };
    PowerReduction { kind, n, coeffs }
}

impl PowerReduction {
    /// Both sides as Laurent polynomials: `(left, right)`.
    pub fn laurent_sides(&self) -> (LaurentPoly<GaussianRational>, LaurentPoly<GaussianRational>) {
        let half = GaussianRational::real(Rational::new(int(1), int(2)));
        let (power, angle): (_, fn(i64) -> LaurentPoly<GaussianRational>) = match self.kind {
            PowerKind::CosEven => (laurent_expand(TrigElement::KappaPow(2 * self.n)), |k| {
                laurent_expand(TrigElement::Kappa(2 * k))
            }),
            PowerKind::CosOdd => (laurent_expand(TrigElement::KappaPow(2 * self.n + 1)), |k| {
                laurent_expand(TrigElement::Kappa(2 * k + 1))
            }),
            PowerKind::SinEven => (laurent_expand(TrigElement::SigmaPow(2 * self.n)), |k| {
                laurent_expand(TrigElement::Kappa(2 * k))
            }),
            PowerKind::SinOdd => (laurent_expand(TrigElement::SigmaPow(2 * self.n + 1)), |k| {
                laurent_expand(TrigElement::Sigma(2 * k + 1))
            }),
        };
        // 2^{m−1}·cos^m = κ^m / 2 and cos(jθ) = κ(jθ)/2, likewise for sin.
        let left = power.scale(&half);
        let mut right = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut term = angle(k as i64).scale(&GaussianRational::real(c.clone()));
            term = term.scale(&half);
            right = &right + &term;
        }
        (left, right)
    }
}

fn laurent_check<R: crate::exact::Ring + std::fmt::Display>(
    check: &str,
    what: &str,
    left: &LaurentPoly<R>,
    right: &LaurentPoly<R>,
) -> Result<(), CheckFailed> {
    match left.first_difference(right) {
        None => Ok(()),
        Some((e, a, b)) => Err(CheckFailed::new(check, format!("{what}, coefficient of z^{e}"), a, b)),
    }
}

pub fn verify_power_reduction(reduction: &PowerReduction) -> CheckResult {
    const CHECK: &str = "power reduction";
    let (left, right) = reduction.laurent_sides();
    laurent_check(CHECK, &format!("{:?} n={}", reduction.kind, reduction.n), &left, &right)?;
    Ok(CheckReport::new(CHECK, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NuParity {
    /// `κ^{2n} = Σ_{k=0}^{n} B^odd_{nk} ν_{2k}`
    Even,
    /// `κ^{2n−1} = Σ_{k=1}^{n} B^even_{nk} ν_{2k−1}`
    Odd,
}

/// Coefficients of `κ^{2n}` over `ν₀, ν₂, …, ν_{2n}` (even) or of `κ^{2n−1}` over
/// `ν₁, ν₃, …, ν_{2n−1}` (odd, `n ≥ 1`); index `k` of the result is the
/// `k`-th element of that list.
pub fn cos_power_to_nu(parity: NuParity, n: u32) -> Vec<Integer> {
    let n = n as i64;
    match parity {
        NuParity::Even => (0..=n).map(|k| catalan_triangle_odd(n, k).unwrap()).collect(),
        NuParity::Odd => (1..=n).map(|k| catalan_triangle_even(n, k).unwrap()).collect(),
    }
}

pub fn verify_cos_power_to_nu(parity: NuParity, n: u32) -> CheckResult {
    const CHECK: &str = "cosine powers over ν";
    let coeffs = cos_power_to_nu(parity, n);
    let (power, first_nu) = match parity {
        NuParity::Even => (2 * n, 0),
        NuParity::Odd => (2 * n - 1, 1),
    };
    let left = real_laurent(TrigElement::KappaPow(power)).unwrap();
    let mut right = LaurentPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let nu = real_laurent(TrigElement::Nu(first_nu + 2 * k as i64)).unwrap();
        right = &right + &nu.scale(&Rational::from_integer(c.clone()));
    }
    laurent_check(CHECK, &format!("{parity:?} n={n}"), &left, &right)?;
    Ok(CheckReport::new(CHECK, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransitionKind {
    Inv1,
    Inv2,
    Inv3,
    Inv4,
    PyrCat1,
    PyrCat2,
    PyrCat3,
    PyrCat4,
}

impl TransitionKind {
    pub const ALL: [TransitionKind; 8] = [
        TransitionKind::Inv1,
        TransitionKind::Inv2,
        TransitionKind::Inv3,
        TransitionKind::Inv4,
        TransitionKind::PyrCat1,
        TransitionKind::PyrCat2,
        TransitionKind::PyrCat3,
        TransitionKind::PyrCat4,
    ];

    /// `(expressed, in_terms_of)`: column `n` writes element `n` of the first
    /// basis as a combination of the second.
    pub fn bases(self) -> (TrigBasis, TrigBasis) {
        use TrigBasis::*;
        match self {
            TransitionKind::Inv1 => (EvenKappaMultiple, EvenKappaPower),
            TransitionKind::Inv2 => (EvenKappaPower, EvenKappaMultiple),
            TransitionKind::Inv3 => (OddKappaMultiple, OddKappaPower),
            TransitionKind::Inv4 => (OddKappaPower, OddKappaMultiple),
            TransitionKind::PyrCat1 => (EvenKappaPower, EvenNu),
            TransitionKind::PyrCat2 => (EvenNu, EvenKappaPower),
            TransitionKind::PyrCat3 => (OddKappaPower, OddNu),
            TransitionKind::PyrCat4 => (OddNu, OddKappaPower),
        }
    }

    pub fn inverse(self) -> TransitionKind {
        use TransitionKind::*;
        match self {
            Inv1 => Inv2,
            Inv2 => Inv1,
            Inv3 => Inv4,
            Inv4 => Inv3,
            PyrCat1 => PyrCat2,
            PyrCat2 => PyrCat1,
            PyrCat3 => PyrCat4,
            PyrCat4 => PyrCat3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransitionKind::Inv1 => "inv1",
            TransitionKind::Inv2 => "inv2",
            TransitionKind::Inv3 => "inv3",
            TransitionKind::Inv4 => "inv4",
            TransitionKind::PyrCat1 => "pyrcat1",
            TransitionKind::PyrCat2 => "pyrcat2",
            TransitionKind::PyrCat3 => "pyrcat3",
            TransitionKind::PyrCat4 => "pyrcat4",
        }
    }

    /// Entry `(i, n)` from its formula (zero below the diagonal).
    pub fn entry(self, i: usize, n: usize) -> Integer {
        if i > n {
            return Integer::zero();
        }
        let (i, n) = (i as i64, n as i64);
        let d = n - i;
        let sign = if d % 2 == 0 { Integer::one() } else { -Integer::one() };
        match self {
            TransitionKind::Inv1 => sign * pyramidal(2 * i as u32, d),
            TransitionKind::Inv2 => binom(2 * n, d),
            TransitionKind::Inv3 => sign * pyramidal(2 * i as u32 + 1, d),
            TransitionKind::Inv4 => binom(2 * n + 1, d),
            TransitionKind::PyrCat1 => catalan_triangle_odd(n, i).unwrap(),
            TransitionKind::PyrCat2 => sign * binom(n + i, d),
            TransitionKind::PyrCat3 => catalan_triangle_even(n + 1, i + 1).unwrap(),
            TransitionKind::PyrCat4 => sign * binom(n + i + 1, d),
        }
    }
}

impl std::str::FromStr for TransitionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TransitionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown transition matrix `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub kind: TransitionKind,
    pub source: TrigBasis,
    pub target: TrigBasis,
    pub entries: Matrix<Integer>,
}

pub fn transition_matrix(kind: TransitionKind, size: usize) -> TransitionMatrix {
    let (source, target) = kind.bases();
    TransitionMatrix {
        kind,
        source,
        target,
        entries: Matrix::from_fn(size, size, |i, n| kind.entry(i, n)),
    }
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    /// Checks every column against the Laurent representatives of both bases.
    pub fn verify_against_laurent(&self) -> CheckResult {
        let check = format!("{} Laurent expansion", self.kind.name());
        for n in 0..self.size() {
            let want = laurent_expand(self.source.element(n));
            let mut got = LaurentPoly::zero();
            for i in 0..=n {
                let c = self.entries.get(i, n);
                if !c.is_zero() {
                    let e = laurent_expand(self.target.element(i));
                    got = &got + &e.scale(&GaussianRational::from_integer(c.clone()));
                }
            }
            laurent_check(&check, &format!("column {n}"), &want, &got)?;
        }
        Ok(CheckReport::new(check, self.size()))
    }
}

fn matrix_check(check: &str, what: &str, want: &Matrix<Integer>, got: &Matrix<Integer>) -> Result<(), CheckFailed> {
    match want.first_difference(got) {
        None => Ok(()),
        Some((i, j, a, b)) => Err(CheckFailed::new(check, format!("{what}, entry ({i},{j})"), a, b)),
    }
}

/// The four mutually inverse pairs, each matrix checked by its Laurent
/// expansion, the products checked both ways, and the Catalan-triangle
/// transposes.
pub fn verify_mutual_inverse(kind: TransitionKind, size: usize) -> CheckResult {
    verify_mutual_inverse_with(
        &transition_matrix(kind, size),
        &transition_matrix(kind.inverse(), size),
    )
}

pub fn verify_mutual_inverse_with(a: &TransitionMatrix, b: &TransitionMatrix) -> CheckResult {
    let check = format!("{} · {} = I", a.kind.name(), b.kind.name());
    let n = a.size();
    let id = Matrix::identity(n);
    let mut report = CheckReport::new(&check, 0);
    report = report.absorb(a.verify_against_laurent()?);
    report = report.absorb(b.verify_against_laurent()?);
    matrix_check(&check, "left product", &id, &(&a.entries * &b.entries))?;
    matrix_check(&check, "right product", &id, &(&b.entries * &a.entries))?;
    report.comparisons += 2;

    // pyrcat1ᵀ and pyrcat3ᵀ are the Catalan triangles; pyrcat2ᵀ, pyrcat4ᵀ their inverses.
    for m in [a, b] {
        let triangle = match m.kind {
            TransitionKind::PyrCat1 => Matrix::from_fn(n, n, |i, j| {
                catalan_triangle_odd(i as i64, j as i64).unwrap_or_default()
            }),
            TransitionKind::PyrCat3 => Matrix::from_fn(n, n, |i, j| {
                catalan_triangle_even(i as i64 + 1, j as i64 + 1).unwrap_or_default()
            }),
            _ => continue,
        };
        matrix_check(&check, &format!("{}ᵀ vs Catalan triangle", m.kind.name()), &triangle, &m.entries.transpose())?;
        report.comparisons += 1;
    }
    Ok(report)
}

/// All four pairs at one size.
pub fn verify_all_transitions(size: usize) -> CheckResult {
    let mut report = CheckReport::new("base changes", 0);
    for kind in [TransitionKind::Inv1, TransitionKind::Inv3, TransitionKind::PyrCat1, TransitionKind::PyrCat3] {
        report = report.absorb(verify_mutual_inverse(kind, size)?);
    }
    Ok(report)
}

/// Inputs of the closed cosine series: the denominator
/// `(1+x)² − 4x c²` as coefficients of `x⁰, x¹, x²` (polynomials in `c = cos θ`),
/// and the Chebyshev polynomials substituted for the multiple angles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSeriesData {
    pub denominator: [IntPoly; 3],
    pub t: Vec<IntPoly>,
    pub u: Vec<IntPoly>,
}

impl ClosedSeriesData {
    pub fn new(order: usize) -> Self {
        ClosedSeriesData {
            denominator: [IntPoly::one(), IntPoly::from_i64(&[2, 0, -4]), IntPoly::one()],
            t: chebyshev_t_table(2 * order + 1),
            u: chebyshev_u_table(2 * order + 1),
        }
    }

    pub fn order(&self) -> usize {
        (self.t.len().min(self.u.len()) - 1) / 2
    }
}

/// The four closed forms for `Σ cos(2nθ)xⁿ`, `Σ cos((2n+1)θ)xⁿ`,
/// `Σ ν_{2n} xⁿ`, `Σ ν_{2n+1} xⁿ`, cleared of denominators and compared in
/// `Q[c][[x]]` up to `x^N`.
pub fn closed_series_checks(order: usize) -> CheckResult {
    closed_series_checks_with(&ClosedSeriesData::new(order))
}

pub fn closed_series_checks_with(data: &ClosedSeriesData) -> CheckResult {
    let order = data.order();
    let c = IntPoly::x();
    let two_c = IntPoly::from_i64(&[0, 2]);
    type Item<'a> = (&'static str, Vec<IntPoly>, Vec<IntPoly>);
    let items: [Item; 4] = [
        (
            "1 + 2Σcos(2nθ)xⁿ",
            (0..=order)
                .map(|n| if n == 0 { data.t[0].clone() } else { &data.t[2 * n] + &data.t[2 * n] })
                .collect(),
            vec![IntPoly::one(), IntPoly::zero(), IntPoly::from_i64(&[-1])],
        ),
        (
            "Σcos((2n+1)θ)xⁿ",
            (0..=order).map(|n| data.t[2 * n + 1].clone()).collect(),
            vec![c.clone(), -c],
        ),
        (
            "Σν_{2n}xⁿ",
            (0..=order).map(|n| data.u[2 * n].clone()).collect(),
            vec![IntPoly::one(), IntPoly::one()],
        ),
        (
            "Σν_{2n+1}xⁿ",
            (0..=order).map(|n| data.u[2 * n + 1].clone()).collect(),
            vec![two_c],
        ),
    ];
    let mut comparisons = 0;
    for (name, series, numerator) in items {
        for m in 0..=order {
            let mut lhs = IntPoly::zero();
            for (d, den) in data.denominator.iter().enumerate() {
                if m >= d {
                    lhs = &lhs + &(den * &series[m - d]);
                }
            }
            let want = numerator.get(m).cloned().unwrap_or_default();
            if lhs != want {
                return Err(CheckFailed::new(
                    "closed cosine series",
                    format!("{name}, coefficient of x^{m}"),
                    want,
                    lhs,
                ));
            }
            comparisons += 1;
        }
    }
    Ok(CheckReport::new("closed cosine series", comparisons))
}
