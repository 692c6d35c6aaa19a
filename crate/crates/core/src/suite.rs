//! Verification suites: every identity check of a module, run at one order,
//! optionally on data with a single coefficient perturbed.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;

use crate::basechange::{
    closed_series_checks_with, power_reduce, transition_matrix, verify_cos_power_to_nu,
    verify_mutual_inverse_with, verify_power_reduction, ClosedSeriesData, NuParity, PowerKind, TransitionKind,
};
use crate::chebyshev::{gf_check_chebyshev_with, verify_structure_with, verify_trig_values_with, ChebyshevData};
use crate::error::{CheckFailed, CheckReport, CheckResult};
use crate::exact::{Integer, IntPoly, Matrix, Rational};
use crate::fourier::{
    lu_factorization_check_with, m_matrix_derivation_check_with, verify_super_catalan, verify_trig_integrals,
    weirdhyp_check, SuperCatalanMatrix,
};
use crate::riordan::{verify_riordan_with, RiordanData};
use crate::spread::{
    cigler_check_with, hirschhorn_gf_check_with, shuffle_inverse_check_with, spread_consistency_check_with,
    spreadometric_check_with, sqsin_reduction_check_with, zpread_matrix_check_with, SpreadData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Chebyshev,
    Riordan,
    Basechange,
    Fourier,
    Spread,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Chebyshev, Suite::Riordan, Suite::Basechange, Suite::Fourier, Suite::Spread];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chebyshev => "chebyshev",
            Suite::Riordan => "riordan",
            Suite::Basechange => "basechange",
            Suite::Fourier => "fourier",
            Suite::Spread => "spread",
        }
    }

    /// What a [`Fault`] perturbs in this suite.
    pub fn fault_target(self) -> &'static str {
        match self {
            Suite::Chebyshev => "coefficient x^col of T_row",
            Suite::Riordan => "coefficient x^col of the Catalan series C",
            Suite::Basechange => "entry (row, col) of the inv1 transition matrix",
            Suite::Fourier => "entry (row, col) of the super Catalan matrix M",
            Suite::Spread => "coefficient x^col of S_row",
        }
    }

    /// A perturbation that lands inside the data at any order ≥ 5.
    pub fn default_fault(self) -> Fault {
        match self {
            Suite::Chebyshev => Fault::new(5, 1),
            Suite::Riordan => Fault::new(0, 3),
            Suite::Basechange => Fault::new(1, 3),
            Suite::Fourier => Fault::new(1, 2),
            Suite::Spread => Fault::new(4, 1),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Adds one to a single coefficient or matrix entry of a suite's input data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fault {
    pub row: usize,
    pub col: usize,
}

impl Fault {
    pub fn new(row: usize, col: usize) -> Self {
        Fault { row, col }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("fault ({row}, {col}) lies outside the {suite} data at order {order}")]
pub struct FaultOutOfRange {
    pub suite: Suite,
    pub order: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub order: usize,
    pub fault: Option<Fault>,
    /// One entry per check, in a fixed order independent of scheduling.
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(Result::is_ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckFailed> {
        self.results.iter().filter_map(|r| r.as_ref().err())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} (order {})", self.suite, self.order)?;
        if let Some(fault) = self.fault {
            write!(f, " [fault injected at ({}, {}): {}]", fault.row, fault.col, self.suite.fault_target())?;
        }
        writeln!(f)?;
        for r in &self.results {
            match r {
                Ok(rep) => writeln!(f, "  ok    {rep}")?,
                Err(e) => writeln!(f, "  FAIL  {e}")?,
            }
        }
        Ok(())
    }
}

type Job<'a> = Box<dyn Fn() -> CheckResult + Send + Sync + 'a>;

fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<CheckResult> {
    jobs.par_iter().map(|job| job()).collect()
}

/// Runs `check` for each index and reports the first failure in index order.
fn over_range(name: &str, range: impl IntoIterator<Item = usize>, check: impl Fn(usize) -> CheckResult + Sync) -> CheckResult {
    let idx: Vec<usize> = range.into_iter().collect();
    let results: Vec<CheckResult> = idx.par_iter().map(|&n| check(n)).collect();
    let mut total = CheckReport::new(name, 0);
    for r in results {
        total = total.absorb(r?);
    }
    Ok(total)
}

fn bump_poly(polys: &mut [IntPoly], fault: Fault, oob: impl Fn() -> FaultOutOfRange) -> Result<(), FaultOutOfRange> {
    let p = polys.get_mut(fault.row).ok_or_else(&oob)?;
    let mut c = p.coeffs().to_vec();
    if fault.col >= c.len() {
        return Err(oob());
    }
    c[fault.col] += 1;
    *p = IntPoly::new(c);
    Ok(())
}

fn bump_matrix(m: &mut Matrix<Integer>, fault: Fault, oob: impl Fn() -> FaultOutOfRange) -> Result<(), FaultOutOfRange> {
    if fault.row >= m.rows() || fault.col >= m.cols() {
        return Err(oob());
    }
    let v = m.get(fault.row, fault.col) + Integer::one();
    m.set(fault.row, fault.col, v);
    Ok(())
}

/// Runs a suite at order `order` (≥ 2), with an optional injected fault.
pub fn run_suite(suite: Suite, order: usize, fault: Option<Fault>) -> Result<SuiteReport, FaultOutOfRange> {
    let order = order.max(2);
    let oob = || {
        let f = fault.unwrap_or(Fault::new(0, 0));
        FaultOutOfRange { suite, order, row: f.row, col: f.col }
    };
    let results = match suite {
        Suite::Chebyshev => {
            let mut data = ChebyshevData::new(order);
            if let Some(f) = fault {
                bump_poly(&mut data.t, f, oob)?;
            }
            let data = &data;
            run_jobs(vec![
                Box::new(move || gf_check_chebyshev_with(data)),
                Box::new(move || verify_structure_with(data)),
                Box::new(move || {
                    over_range("Chebyshev trigonometric values", 0..=order, |n| {
                        verify_trig_values_with(n, &data.t[n], &data.u[n])
                    })
                }),
            ])
        }
        Suite::Riordan => {
            let mut data = RiordanData::new(order);
            if let Some(f) = fault {
                if f.col > data.order() {
                    return Err(oob());
                }
                let mut c = data.c.coeffs().to_vec();
                c[f.col] += Rational::one();
                data.c = crate::exact::TruncSeries::new(data.order(), c);
            }
            vec![verify_riordan_with(&data)]
        }
        Suite::Basechange => {
            let mut pairs: Vec<_> = [TransitionKind::Inv1, TransitionKind::Inv3, TransitionKind::PyrCat1, TransitionKind::PyrCat3]
                .into_iter()
                .map(|k| (transition_matrix(k, order), transition_matrix(k.inverse(), order)))
                .collect();
            if let Some(f) = fault {
                bump_matrix(&mut pairs[0].0.entries, f, oob)?;
            }
            let closed = ClosedSeriesData::new(order.min(20));
            let closed = &closed;
            let mut jobs: Vec<Job> = pairs
                .iter()
                .map(|(a, b)| Box::new(move || verify_mutual_inverse_with(a, b)) as Job)
                .collect();
            jobs.push(Box::new(move || closed_series_checks_with(closed)));
            jobs.push(Box::new(move || {
                over_range("power reduction", 0..=order, |n| {
                    let mut rep = CheckReport::new("power reduction", 0);
                    for kind in [PowerKind::CosEven, PowerKind::CosOdd, PowerKind::SinEven, PowerKind::SinOdd] {
                        rep = rep.absorb(verify_power_reduction(&power_reduce(kind, n as u32))?);
                    }
                    Ok(rep)
                })
            }));
            jobs.push(Box::new(move || {
                over_range("cos powers in ν", 0..=order, |n| {
                    let mut rep = CheckReport::new("cos powers in ν", 0);
                    for parity in [NuParity::Even, NuParity::Odd] {
                        if parity == NuParity::Odd && n == 0 {
                            continue;
                        }
                        rep = rep.absorb(verify_cos_power_to_nu(parity, n as u32)?);
                    }
                    Ok(rep)
                })
            }));
            run_jobs(jobs)
        }
        Suite::Fourier => {
            let mut m = SuperCatalanMatrix::new(order);
            if let Some(f) = fault {
                bump_matrix(&mut m.entries, f, oob)?;
            }
            let m = &m;
            let small = order.min(15) as u64;
            run_jobs(vec![
                Box::new(move || lu_factorization_check_with(m)),
                Box::new(move || m_matrix_derivation_check_with(m)),
                Box::new(move || verify_trig_integrals(small)),
                Box::new(move || verify_super_catalan(order as u64)),
                Box::new(move || over_range("central binomial reciprocal identity", 0..=order, |k| weirdhyp_check(k as u64))),
            ])
        }
        Suite::Spread => {
            let mut data = SpreadData::new(order);
            if let Some(f) = fault {
                bump_poly(&mut data.s, f, oob)?;
            }
            let data = &data;
            run_jobs(vec![
                Box::new(move || spread_consistency_check_with(data)),
                Box::new(move || zpread_matrix_check_with(data)),
                Box::new(move || hirschhorn_gf_check_with(&data.s)),
                Box::new(move || over_range("sin^{2n} reduction", 1..=order, |n| sqsin_reduction_check_with(n, &data.s))),
                Box::new(move || shuffle_inverse_check_with(&data.z)),
                Box::new(move || spreadometric_check_with(&data.s)),
                Box::new(move || over_range("Cigler identities", 1..=(order - 1) / 2, |n| cigler_check_with(n, data))),
            ])
        }
    };
    Ok(SuiteReport { suite, order, fault, results })
}

/// Runs several suites concurrently; reports come back in the given order.
pub fn run_suites(suites: &[Suite], order: usize, fault: Option<Fault>) -> Result<Vec<SuiteReport>, FaultOutOfRange> {
    suites.par_iter().map(|&s| run_suite(s, order, fault)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for report in run_suites(&Suite::ALL, 12, None).unwrap() {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn default_faults_are_caught() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 8, Some(suite.default_fault())).unwrap();
            assert!(!report.passed(), "{suite} missed its fault");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("all".parse::<Suite>().is_err());
    }

    #[test]
    fn out_of_range_fault() {
        assert!(run_suite(Suite::Spread, 5, Some(Fault::new(9, 0))).is_err());
        assert!(run_suite(Suite::Fourier, 5, Some(Fault::new(0, 5))).is_err());
    }
}
