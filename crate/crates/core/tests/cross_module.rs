use proptest::prelude::*;
use trigpoly_core::chebyshev::chebyshev_t_table;
use trigpoly_core::combinatorics::divisors;
use trigpoly_core::exact::{IntPoly, Integer};
use trigpoly_core::factor::{factor_table, run_conjecture_battery};
use trigpoly_core::spread::{spread_from_chebyshev, SpreadFamily};
use trigpoly_core::suite::{run_suites, Fault, Suite};

#[test]
fn every_suite_passes_clean() {
    let reports = run_suites(&Suite::ALL, 8, None).unwrap();
    assert!(reports.iter().all(|r| r.passed()), "{reports:#?}");
}

#[test]
fn every_default_fault_is_located() {
    for suite in Suite::ALL {
        let rep = run_suites(&[suite], 8, Some(suite.default_fault())).unwrap().remove(0);
        let first = rep.failures().next().unwrap_or_else(|| panic!("{suite} missed its fault"));
        assert!(!first.location.is_empty());
    }
}

#[test]
fn out_of_range_fault_is_rejected() {
    assert!(run_suites(&[Suite::Chebyshev], 5, Some(Fault::new(500, 500))).is_err());
}

#[test]
fn spread_polys_agree_with_chebyshev() {
    let t = chebyshev_t_table(40);
    let s = SpreadFamily::spread(40).polys;
    for n in 0..=40 {
        assert_eq!(spread_from_chebyshev(&t[n]).unwrap(), s[n], "n={n}");
    }
}

#[test]
fn factor_battery_to_120() {
    let table = factor_table(120).unwrap();
    let rep = run_conjecture_battery(&table);
    assert!(rep.passed(), "{rep}");
}

#[test]
fn corrupted_factor_is_caught() {
    let mut table = factor_table(40).unwrap();
    let p = &table.phi[&9] * &IntPoly::constant(Integer::from(-1));
    table.phi.insert(9, p);
    assert!(!run_conjecture_battery(&table).passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn z_is_product_over_divisors(n in 1u64..80) {
        let table = factor_table(n).unwrap();
        let z = &SpreadFamily::zpread(n as usize).polys[n as usize];
        let prod = divisors(n).iter().fold(IntPoly::one(), |acc, d| &acc * &table.phi[d]);
        prop_assert_eq!(&prod, z);
    }
}
