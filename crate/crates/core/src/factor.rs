//! The factor system of the zpread polynomials: `Z_n = ∏_{d|n} Φ_d` with
//! `Φ_d = ψ_d²` for `d ≥ 3`, its conjectured properties, and the fixed points
//! of `Z_n` at 2, 3 and 2+φ.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::combinatorics::{a014963, divisors, is_prime, mangoldt_product, moebius, pyramidal, totient};
use crate::error::{Error, Result};
use crate::exact::{int, IntPoly, Integer, QuadInt, Rational};
use crate::spread::SpreadFamily;

fn violation(n: u64, what: impl Into<String>) -> Error {
    Error::ConjectureViolation { n, what: what.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorTable {
    pub max_n: u64,
    pub phi: BTreeMap<u64, IntPoly>,
    /// Defined for `d ≥ 3` once [`extract_psi`] has run.
    pub psi: BTreeMap<u64, IntPoly>,
    /// `Z_0..=Z_{max_n}`, kept for the reconstruction check.
    pub z: Vec<IntPoly>,
}

/// `Φ_n = Z_n / ∏_{d|n, d<n} Φ_d`, failing at the first inexact division.
pub fn build_factor_table(max_n: u64) -> Result<FactorTable> {
    assert!(max_n >= 1, "max_n must be at least 1");
    let z = SpreadFamily::zpread(max_n as usize).polys;
    let mut phi = BTreeMap::new();
    for n in 1..=max_n {
        let mut q = z[n as usize].clone();
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            q = q
                .exact_div(&phi[&d])
                .map_err(|_| violation(n, format!("Z_{n} not divisible by Φ_{d}")))?;
        }
        phi.insert(n, q);
    }
    Ok(FactorTable {
        max_n,
        phi,
        psi: BTreeMap::new(),
        z,
    })
}

/// `ψ_d = √Φ_d` with `ψ_d(0) > 0`, for `3 ≤ d ≤ max_n`.
pub fn extract_psi(mut table: FactorTable) -> Result<FactorTable> {
    for (&d, phi) in table.phi.range(3..) {
        let root = phi
            .sqrt()
            .map_err(|e| violation(d, format!("Φ_{d} not a perfect square ({e})")))?;
        if !root.coeff(0).is_positive() {
            return Err(violation(d, format!("ψ_{d}(0) is not positive")));
        }
        table.psi.insert(d, root);
    }
    Ok(table)
}

/// Builds `Φ` and `ψ` through `max_n`.
pub fn factor_table(max_n: u64) -> Result<FactorTable> {
    extract_psi(build_factor_table(max_n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryCheck {
    pub name: &'static str,
    /// Number of indices the property was tested at.
    pub tested: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryReport {
    pub max_n: u64,
    pub checks: Vec<BatteryCheck>,
    /// `Φ_p(x) = Φ_{2p}(2−x)` as literally stated; reported, never asserted.
    pub reflection_two_minus_x: Vec<(u64, bool)>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.violations.is_empty() { "pass" } else { "FAIL" };
            writeln!(f, "{status}  {} ({} cases)", c.name, c.tested)?;
            for v in &c.violations {
                writeln!(f, "      {v}")?;
            }
        }
        let held: Vec<String> = self
            .reflection_two_minus_x
            .iter()
            .map(|(p, ok)| format!("{p}:{}", if *ok { "yes" } else { "no" }))
            .collect();
        writeln!(f, "info  Φ_p(x) = Φ_2p(2−x), literal form: {}", if held.is_empty() { "-".into() } else { held.join(" ") })?;
        writeln!(f, "info  irreducibility of ψ_d: not tested")
    }
}

fn battery_check(name: &'static str, ds: Vec<u64>, f: impl Fn(u64) -> Option<String> + Sync) -> BatteryCheck {
    let violations: Vec<String> = ds.par_iter().filter_map(|&d| f(d)).collect();
    BatteryCheck {
        name,
        tested: ds.len(),
        violations,
    }
}

/// Every property of the factor system that can be checked exactly.
pub fn run_conjecture_battery(table: &FactorTable) -> BatteryReport {
    let max_n = table.max_n;
    let all: Vec<u64> = (1..=max_n).collect();
    let from3: Vec<u64> = (3..=max_n).collect();
    let primes5: Vec<u64> = (5..=max_n).filter(|&p| is_prime(p)).collect();
    let refl: Vec<u64> = (3..=max_n / 2).filter(|&p| is_prime(p)).collect();
    let psi = |d: u64| table.psi.get(&d);

    let checks = vec![
        battery_check("reconstruction ∏_{d|n} Φ_d = Z_n", all.clone(), |n| {
            let prod = divisors(n).iter().fold(IntPoly::one(), |acc, d| &acc * &table.phi[d]);
            (prod != table.z[n as usize]).then(|| format!("n={n}"))
        }),
        battery_check("deg Φ_d = φ(d)", all.clone(), |d| {
            let deg = table.phi[&d].degree().unwrap_or(0) as u64;
            (deg != totient(d)).then(|| format!("d={d}: degree {deg}, φ(d) = {}", totient(d)))
        }),
        battery_check("Φ_d = ψ_d², ψ_d(0) > 0", from3.clone(), |d| match psi(d) {
            Some(q) if &(q * q) == &table.phi[&d] && q.coeff(0).is_positive() => None,
            _ => Some(format!("d={d}")),
        }),
        battery_check("ψ_d(0) = A014963(d)", from3.clone(), |d| {
            let c0 = psi(d)?.coeff(0);
            (c0 != int(a014963(d) as i64)).then(|| format!("d={d}: ψ_d(0) = {c0}"))
        }),
        battery_check("ψ_d(0) = ∏_{e|d} (d/e)^μ(e)", from3, |d| {
            let c0 = Rational::from_integer(psi(d)?.coeff(0));
            (c0 != mangoldt_product(d)).then(|| format!("d={d}: ψ_d(0) = {c0}"))
        }),
        battery_check("ψ_p(1) = (−1)^{φ(p)/2}, p ≥ 5 prime", primes5, |p| {
            let v = psi(p)?.eval(&Integer::one());
            let want = if (totient(p) / 2) % 2 == 0 { int(1) } else { int(-1) };
            (v != want).then(|| format!("p={p}: ψ_p(1) = {v}"))
        }),
        battery_check("Φ_2p(x) = Φ_p(4−x), p > 2 prime", refl.clone(), |p| {
            let reflected = table.phi[&p].compose(&IntPoly::from_i64(&[4, -1]));
            (reflected != table.phi[&(2 * p)]).then(|| format!("p={p}"))
        }),
    ];
    let reflection_two_minus_x = refl
        .iter()
        .map(|&p| (p, table.phi[&p] == table.phi[&(2 * p)].compose(&IntPoly::from_i64(&[2, -1]))))
        .collect();
    BatteryReport {
        max_n,
        checks,
        reflection_two_minus_x,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPointItem {
    /// `Z_n(2) = 2 ⇔ n ≡ 1 mod 2`
    Two,
    /// `Z_n(3) = 3 ⇔ n ≡ 1, 2 mod 3`
    Three,
    /// `Z_n(2+φ) = 2+φ ⇔ n ≡ 1, 4 mod 5`
    GoldenFixed,
    /// `Z_n(2+φ) = 3−φ ⇔ n ≡ 2, 3 mod 5`
    GoldenSwap,
}

impl FixedPointItem {
    pub const ALL: [FixedPointItem; 4] = [
        FixedPointItem::Two,
        FixedPointItem::Three,
        FixedPointItem::GoldenFixed,
        FixedPointItem::GoldenSwap,
    ];

    pub fn input(self) -> QuadInt {
        match self {
            FixedPointItem::Two => QuadInt::new(2, 0),
            FixedPointItem::Three => QuadInt::new(3, 0),
            _ => QuadInt::new(2, 1),
        }
    }

    pub fn target(self) -> QuadInt {
        match self {
            FixedPointItem::Two => QuadInt::new(2, 0),
            FixedPointItem::Three => QuadInt::new(3, 0),
            FixedPointItem::GoldenFixed => QuadInt::new(2, 1),
            FixedPointItem::GoldenSwap => QuadInt::new(3, -1),
        }
    }

    pub fn modulus(self) -> u64 {
        match self {
            FixedPointItem::Two => 2,
            FixedPointItem::Three => 3,
            _ => 5,
        }
    }

    pub fn residues(self) -> &'static [u64] {
        match self {
            FixedPointItem::Two => &[1],
            FixedPointItem::Three => &[1, 2],
            FixedPointItem::GoldenFixed => &[1, 4],
            FixedPointItem::GoldenSwap => &[2, 3],
        }
    }

    pub fn predicts(self, n: u64) -> bool {
        self.residues().contains(&(n % self.modulus()))
    }
}

impl fmt::Display for FixedPointItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> = self.residues().iter().map(u64::to_string).collect();
        write!(f, "Z_n({}) = {} ⇔ n ≡ {} mod {}", self.input(), self.target(), rs.join(","), self.modulus())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointReport {
    pub max_n: u64,
    /// Per item, how many `n` hit the target in each residue class mod the item's modulus.
    pub hits_by_class: Vec<(FixedPointItem, Vec<u64>)>,
}

impl fmt::Display for FixedPointReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fixed points verified for 1 ≤ n ≤ {}", self.max_n)?;
        for (item, hits) in &self.hits_by_class {
            let cls: Vec<String> = hits.iter().enumerate().map(|(r, h)| format!("{r}:{h}")).collect();
            writeln!(f, "  {item}   hits by class [{}]", cls.join(" "))?;
        }
        Ok(())
    }
}

/// Evaluates every `Z_n`, `n ≤ max_n`, exactly in Z[φ] at 2, 3 and 2+φ, and
/// checks both directions of each equivalence. The polynomial values are
/// cross-checked against the recursion run directly on values.
pub fn golden_fixed_points(max_n: u64) -> Result<FixedPointReport> {
    assert!(max_n >= 1, "max_n must be at least 1");
    let inputs = [QuadInt::new(2, 0), QuadInt::new(3, 0), QuadInt::new(2, 1)];
    // value recursion Z_n(a) = (2−a)Z_{n−1}(a) − Z_{n−2}(a) + 2a
    let by_recursion: Vec<Vec<QuadInt>> = inputs
        .iter()
        .map(|a| {
            let two = QuadInt::new(2, 0);
            let (c, shift) = (&two - a, a * &two);
            let mut v = vec![QuadInt::zero(), a.clone()];
            while v.len() <= max_n as usize {
                let k = v.len();
                let next = &(&(&c * &v[k - 1]) - &v[k - 2]) + &shift;
                v.push(next);
            }
            v
        })
        .collect();

    // Walk the polynomial recursion keeping a bounded window, evaluating batches in parallel.
    const BATCH: usize = 64;
    let factor = IntPoly::from_i64(&[2, -1]);
    let affine = IntPoly::from_i64(&[0, 2]);
    let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::x());
    let mut n = 1u64;
    let mut hits = vec![vec![0u64; 5]; 4];
    while n <= max_n {
        let mut batch = Vec::with_capacity(BATCH);
        while batch.len() < BATCH && n <= max_n {
            batch.push((n, cur.clone()));
            let next = &(&(&factor * &cur) - &prev) + &affine;
            prev = std::mem::replace(&mut cur, next);
            n += 1;
        }
        let results: Vec<Result<[bool; 4]>> = batch
            .par_iter()
            .map(|(n, z)| {
                let vals: Vec<QuadInt> = inputs.iter().map(|a| z.eval(a)).collect();
                for (i, v) in vals.iter().enumerate() {
                    if *v != by_recursion[i][*n as usize] {
                        return Err(violation(*n, format!("Z_{n}({}) disagrees with the value recursion", inputs[i])));
                    }
                }
                let mut out = [false; 4];
                for (k, item) in FixedPointItem::ALL.iter().enumerate() {
                    let v = &vals[k.min(2)];
                    let hit = *v == item.target();
                    if hit != item.predicts(*n) {
                        return Err(violation(*n, format!("{item}: Z_{n}({}) = {v}", item.input())));
                    }
                    out[k] = hit;
                }
                Ok(out)
            })
            .collect();
        for ((n, _), r) in batch.iter().zip(results) {
            for (k, item) in FixedPointItem::ALL.iter().enumerate() {
                if r.as_ref().map_err(Clone::clone)?[k] {
                    hits[k][(n % item.modulus()) as usize] += 1;
                }
            }
        }
    }
    let hits_by_class = FixedPointItem::ALL
        .iter()
        .zip(hits)
        .map(|(item, mut h)| {
            h.truncate(item.modulus() as usize);
            (*item, h)
        })
        .collect();
    Ok(FixedPointReport { max_n, hits_by_class })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnAlignment {
    pub d: u64,
    /// `φ(d) − μ(d)`.
    pub column: i64,
    /// `(j, |[x^{deg−j}] ψ_d|, p^{[column−2j]}_j)`; the pyramidal value is
    /// absent when the row index would be negative.
    pub rows: Vec<(usize, Integer, Option<Integer>)>,
}

impl ColumnAlignment {
    pub fn mismatches(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|(_, c, p)| p.as_ref() != Some(c))
            .map(|(j, _, _)| *j)
            .collect()
    }
}

/// Lines up the coefficients of each `ψ_d`, read from the top, with the
/// anti-diagonal of the pyramidal array through column `φ(d) − μ(d)`. An
/// exploratory report: mismatches are listed, never treated as failures.
pub fn pyramidal_column_report(table: &FactorTable) -> Vec<ColumnAlignment> {
    table
        .psi
        .iter()
        .map(|(&d, psi)| {
            let column = totient(d) as i64 - moebius(d);
            let deg = psi.degree().unwrap_or(0);
            let rows = (0..=deg)
                .map(|j| {
                    let i = column - 2 * j as i64;
                    let p = (i >= 0).then(|| pyramidal(i as u32, j as i64));
                    (j, psi.coeff(deg - j).abs(), p)
                })
                .collect();
            ColumnAlignment { d, column, rows }
        })
        .collect()
}

impl fmt::Display for ColumnAlignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mism = self.mismatches();
        write!(f, "d={:<4} column {:<4} ", self.d, self.column)?;
        if mism.is_empty() {
            return write!(f, "all {} coefficients match", self.rows.len());
        }
        let shown: Vec<String> = mism
            .iter()
            .map(|&j| {
                let (_, c, p) = &self.rows[j];
                let p = p.as_ref().map_or("-".to_string(), Integer::to_string);
                format!("x^{}: {c} vs {p}", self.rows.len() - 1 - j)
            })
            .collect();
        write!(f, "{} of {} match; differs at {}", self.rows.len() - mism.len(), self.rows.len(), shown.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_factors() {
        let t = factor_table(17).unwrap();
        assert_eq!(t.phi[&1], IntPoly::x());
        assert_eq!(t.phi[&2], p(&[4, -1]));
        assert_eq!(t.phi[&6], p(&[1, -1]).pow(2));
        assert_eq!(t.phi[&12], p(&[1, -4, 1]).pow(2));
        assert_eq!(t.psi[&5], p(&[5, -5, 1]));
        assert_eq!(t.psi[&9], p(&[3, -9, 6, -1]));
        assert_eq!(t.psi[&14], p(&[1, -6, 5, -1]));
        assert_eq!(t.psi[&16], p(&[2, -16, 20, -8, 1]));
        assert_eq!(t.psi[&17], p(&[17, -204, 714, -1122, 935, -442, 119, -17, 1]));
        assert_eq!(t.psi[&11].eval(&int(1)), int(-1));
    }

    #[test]
    fn factor_one() {
        let t = factor_table(1).unwrap();
        assert_eq!(t.phi.len(), 1);
        assert!(t.psi.is_empty());
        assert!(run_conjecture_battery(&t).passed());
    }

    #[test]
    fn battery_passes() {
        let t = factor_table(120).unwrap();
        let report = run_conjecture_battery(&t);
        assert!(report.passed(), "{report}");
        // The literal 2−x reflection fails already at p = 3.
        assert_eq!(report.reflection_two_minus_x[0], (3, false));
        let degsum: u64 = divisors(120).iter().map(|d| t.phi[d].degree().unwrap() as u64).sum();
        assert_eq!(degsum, 120);
    }

    #[test]
    fn battery_reports_corruption() {
        let mut t = factor_table(30).unwrap();
        let bad = &t.phi[&7] + &IntPoly::monomial(int(1), 2);
        t.phi.insert(7, bad);
        let report = run_conjecture_battery(&t);
        assert!(!report.passed());
        let recon = &report.checks[0];
        assert_eq!(recon.violations, vec!["n=7".to_string(), "n=14".to_string(), "n=21".to_string(), "n=28".to_string()]);
    }

    #[test]
    fn non_square_is_reported() {
        let mut t = build_factor_table(10).unwrap();
        t.phi.insert(5, p(&[5, -5, 1]));
        assert!(matches!(extract_psi(t), Err(Error::ConjectureViolation { n: 5, .. })));
    }

    #[test]
    fn golden_values() {
        let z2 = p(&[0, 4, -1]);
        assert_eq!(z2.eval(&QuadInt::new(2, 1)), QuadInt::new(3, -1));
        assert_eq!(p(&[0, 9, -6, 1]).eval(&QuadInt::new(2, 0)), QuadInt::new(2, 0));
        let z5 = SpreadFamily::zpread(5).polys.pop().unwrap();
        assert_eq!(z5.eval(&QuadInt::new(2, 1)), QuadInt::zero());
        let report = golden_fixed_points(200).unwrap();
        assert_eq!(report.hits_by_class[0].1, vec![0, 100]);
        assert_eq!(report.hits_by_class[2].1, vec![0, 40, 0, 0, 40]);
    }

    #[test]
    fn column_report() {
        let t = factor_table(17).unwrap();
        let rep = pyramidal_column_report(&t);
        let by_d = |d: u64| rep.iter().find(|r| r.d == d).unwrap();
        assert!(by_d(13).mismatches().is_empty());
        assert!(by_d(16).mismatches().is_empty());
        assert_eq!(by_d(5).column, 5);
        assert_eq!(by_d(17).rows.len(), 9);
        assert_eq!(by_d(3).rows.len(), 2);
    }
}
