//! The bounded DFS against a naive scan of a bounding box.

use higgs_betti::chains::{
    count_chains, degree_independence_check, enumerate_chains, omega_closed_form, subset_count,
    ChainDegreeVector, SignConvention, TwistParams,
};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

/// Every vector in the box `[floor(d/r) − (r−1)q − 1, ceil(d/r) + (r−1)q + 1]^r`
/// with the right sum that satisfies the constraints, checked literally.
fn box_oracle(r: i64, q: i64, d: i64) -> Vec<Vec<i64>> {
    let lo = Integer::div_floor(&d, &r) - (r - 1) * q - 1;
    let hi = Integer::div_ceil(&d, &r) + (r - 1) * q + 1;
    let mut out = Vec::new();
    let mut cur = vec![lo; r as usize];
    loop {
        if cur.iter().sum::<i64>() == d && satisfies(&cur, r, q, d) {
            out.push(cur.clone());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == cur.len() {
                out.sort();
                return out;
            }
            if cur[i] < hi {
                cur[i] += 1;
                break;
            }
            cur[i] = lo;
            i += 1;
        }
    }
}

fn satisfies(v: &[i64], r: i64, q: i64, d: i64) -> bool {
    for i in 0..v.len().saturating_sub(1) {
        if v[i] - v[i + 1] > q {
            return false;
        }
    }
    for j in 2..=r {
        let start = (j - 1) as usize;
        let suffix: i64 = v[start..].iter().sum();
        // suffix / (r − j + 1) < d / r
        if suffix * r >= d * (r - j + 1) {
            return false;
        }
    }
    true
}

#[test]
fn dfs_matches_box_scan() {
    for r in 1..=5i64 {
        for q in 1..=3 {
            for d in -7..=7i64 {
                if r.gcd(&d) != 1 {
                    continue;
                }
                let dfs: Vec<Vec<i64>> = enumerate_chains(&TwistParams::new(r, q, d))
                    .unwrap()
                    .into_iter()
                    .map(|v| v.0)
                    .collect();
                assert_eq!(dfs, box_oracle(r, q, d), "r={r} q={q} d={d}");
            }
        }
    }
}

#[test]
fn enumerated_vectors_are_valid_and_distinct() {
    for r in 1..=7 {
        for q in 1..=3 {
            let p = TwistParams::new(r, q, 1);
            let vs = enumerate_chains(&p).unwrap();
            assert!(vs.iter().all(|v| v.is_valid(&p)));
            assert!(
                vs.windows(2).all(|w| w[0] < w[1]),
                "sorted and duplicate-free"
            );
            assert_eq!(vs.len() as u64, count_chains(&p).unwrap());
        }
    }
}

#[test]
fn sequence_for_all_coprime_degrees() {
    let seq = [1u64, 1, 1, 2, 5, 13, 35, 100, 300, 925, 2915, 9386];
    for (i, &want) in seq.iter().enumerate() {
        let r = i as i64 + 1;
        for d in (-r..=2 * r).filter(|d| r.gcd(d) == 1) {
            assert_eq!(
                count_chains(&TwistParams::new(r, 1, d)).unwrap(),
                want,
                "r={r} d={d}"
            );
        }
    }
}

#[test]
fn closed_form_matches_counts_across_degrees() {
    for r in 1..=8i64 {
        for q in 1..=3 {
            let omega = omega_closed_form(r, q, SignConvention::Corrected).unwrap();
            for d in [1, 3, 5, 7, -1, -3] {
                if r.gcd(&d) != 1 {
                    continue;
                }
                let n = count_chains(&TwistParams::new(r, q, d)).unwrap();
                assert_eq!(BigInt::from(n), omega, "r={r} q={q} d={d}");
            }
        }
    }
}

#[test]
fn printed_sign_disagrees_for_even_rank() {
    // The closed form as printed yields negative counts for even r when q is odd.
    for r in [2, 4, 6, 8] {
        let printed = omega_closed_form(r, 1, SignConvention::Paper).unwrap();
        let corrected = omega_closed_form(r, 1, SignConvention::Corrected).unwrap();
        assert_eq!(printed, -corrected);
    }
    // and for even q at any rank
    assert_eq!(
        omega_closed_form(3, 2, SignConvention::Paper).unwrap(),
        BigInt::from(-3)
    );
}

#[test]
fn subset_brute_force() {
    for r in 1..=6usize {
        let n = 2 * r - 1;
        let mut counts = vec![0u64; r];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let sum: usize = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).sum();
            counts[sum % r] += 1;
        }
        for (res, &c) in counts.iter().enumerate() {
            assert_eq!(subset_count(r as i64, res as i64).unwrap(), BigInt::from(c));
        }
    }
}

#[test]
fn subset_identity_for_coprime_residues() {
    for r in 1..=8i64 {
        let lhs = omega_closed_form(r, 1, SignConvention::Corrected).unwrap() * r;
        for d in (1..=3 * r).filter(|d| r.gcd(d) == 1) {
            assert_eq!(subset_count(r, d).unwrap(), lhs, "r={r} d={d}");
        }
    }
}

#[test]
fn independence_report_shape() {
    let rep = degree_independence_check(7, 2, &[1, 2, 3, 4, 5, 6]).unwrap();
    assert_eq!(rep.counts.len(), 6);
    assert!(rep.all_equal);
    assert_eq!(
        BigInt::from(rep.counts[0].count),
        omega_closed_form(7, 2, SignConvention::Corrected).unwrap()
    );
}

proptest! {
    #[test]
    fn shift_bijection(r in 1i64..=5, q in 1i64..=3, d in -20i64..=20) {
        let a = count_chains(&TwistParams::new(r, q, d)).unwrap();
        let b = count_chains(&TwistParams::new(r, q, d + r)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn shifted_vectors_are_solutions(r in 1i64..=5, q in 1i64..=3, d in -10i64..=10) {
        let p = TwistParams::new(r, q, d);
        let shifted = TwistParams::new(r, q, d + r);
        for v in enumerate_chains(&p).unwrap() {
            let w = ChainDegreeVector(v.0.iter().map(|x| x + 1).collect());
            prop_assert!(w.is_valid(&shifted));
        }
    }
}
