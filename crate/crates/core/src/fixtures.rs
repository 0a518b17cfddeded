//! Reference integer sequences vendored from the OEIS.

use num_bigint::BigInt;

const A131868: &str = include_str!("../fixtures/A131868.txt");
const A000990: &str = include_str!("../fixtures/A000990.txt");

fn parse(raw: &str) -> Vec<BigInt> {
    raw.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().expect("fixture entry is an integer"))
        .collect()
}

/// A131868, offset 1: entry `i` is the `(1,…,1)` fixed-point count for rank `i + 1`, `q = 1`.
pub fn a131868() -> Vec<BigInt> {
    parse(A131868)
}

/// A000990, offset 0: plane partitions of `n` with at most two rows.
pub fn a000990() -> Vec<BigInt> {
    parse(A000990)
}
