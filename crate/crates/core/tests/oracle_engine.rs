//! Agreement between the case analysis and the brute-force oracle, plus
//! oracle invariants.

use dioph11::cases::solve;
use dioph11::family::{self, Certification};
use dioph11::oracle::{brute_force, cohn_base_scan, nagell_scan};
use dioph11::SearchBounds;
use proptest::prelude::*;

#[test]
fn oracle_hits_are_certified() {
    let b = SearchBounds { y_max: 20_000, m_max: 9, n_max: 12, ..Default::default() };
    for s in brute_force(&b) {
        assert_eq!(family::certify(&s), Certification::Certified);
    }
    for h in cohn_base_scan(10_000, 12) {
        let s = dioph11::Solution { x: h.x, y: h.y, m: 1, n: h.n };
        assert_eq!(family::certify(&s), Certification::CertifiedBaseCase);
    }
}

#[test]
fn engine_agrees_with_oracle_on_small_grid() {
    let b = SearchBounds { y_max: 20_000, m_max: 9, n_max: 10, a_max: 500, x_max: 1_000, ..Default::default() };
    let oracle = brute_force(&b);
    for m in (3..=9).step_by(2) {
        for n in 3..=10 {
            let cell: Vec<_> = oracle.iter().filter(|s| s.m == m && s.n == n).cloned().collect();
            let engine: Vec<_> = solve(m, n, &b)
                .unwrap()
                .solutions
                .into_iter()
                .filter(|s| s.y <= dioph11::Nat::from(b.y_max))
                .collect();
            assert_eq!(engine, cell, "m={m} n={n}");
        }
    }
}

#[test]
fn nagell_scan_is_empty_to_a_million() {
    assert!(nagell_scan(1_000_000, 25).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn enlarging_bounds_keeps_hits(y in 400u64..3_000, dy in 0u64..3_000, m in 1u32..4, dm in 0u32..2, n in 3u32..8, dn in 0u32..4) {
        let small = SearchBounds { y_max: y, m_max: 2 * m + 1, n_max: n, ..Default::default() };
        let large = SearchBounds { y_max: y + dy, m_max: 2 * (m + dm) + 1, n_max: n + dn, ..Default::default() };
        let big = brute_force(&large);
        for s in brute_force(&small) {
            prop_assert!(big.contains(&s));
        }
    }

    #[test]
    fn nagell_and_cohn_monotone(x in 0u64..5_000, dx in 0u64..5_000) {
        let a = cohn_base_scan(x, 10);
        let b = cohn_base_scan(x + dx, 10);
        prop_assert!(a.iter().all(|h| b.contains(h)));
        prop_assert!(nagell_scan(x + dx, 11).is_empty());
    }
}
