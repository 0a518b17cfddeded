//! Type-(1,…,1) fixed points of `O(q)`-twisted Higgs bundles on the
//! projective line.
//!
//! A fixed point is a degree vector `(d₁,…,d_r)` with
//!
//! * `d₁ + ⋯ + d_r = d`,
//! * `dᵢ − dᵢ₊₁ ≤ q` (the chain map `Bᵢ → Bᵢ₊₁ ⊗ O(q)` is nonzero),
//! * `(d_j + ⋯ + d_r)/(r − j + 1) < d/r` for `2 ≤ j ≤ r` (stability).
//!
//! The stability condition is equivalent to every proper prefix having
//! average strictly above `d/r`, i.e. `r·(d₁+⋯+d_k) > k·d` for `k < r`.
//! All comparisons are done by integer cross-multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{binomial, divisors, moebius};

/// Rank, twist degree and degree of a twisted Higgs problem on P¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwistParams {
    pub rank: i64,
    pub twist: i64,
    pub degree: i64,
}

impl TwistParams {
    pub fn new(rank: i64, twist: i64, degree: i64) -> Self {
        Self {
            rank,
            twist,
            degree,
        }
    }

    fn check(&self) -> Result<()> {
        if self.rank < 1 {
            return Err(Error::domain(format!(
                "rank must be >= 1, got {}",
                self.rank
            )));
        }
        if self.twist < 1 {
            return Err(Error::domain(format!(
                "twist degree must be >= 1, got {}",
                self.twist
            )));
        }
        Ok(())
    }
}

/// Degrees `(d₁,…,d_r)` of the line bundles in a `(1,…,1)` chain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ChainDegreeVector(pub Vec<i64>);

impl ChainDegreeVector {
    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// Checks all three constraint families directly from their definition.
    pub fn is_valid(&self, p: &TwistParams) -> bool {
        let v = &self.0;
        let r = p.rank;
        if v.len() as i64 != r || v.iter().sum::<i64>() != p.degree {
            return false;
        }
        if v.windows(2).any(|w| w[0] - w[1] > p.twist) {
            return false;
        }
        // suffix form: r·(d_j + ⋯ + d_r) < (r − j + 1)·d for 2 ≤ j ≤ r
        (2..=r).all(|j| {
            let suffix: i64 = v[(j - 1) as usize..].iter().sum();
            r * suffix < (r - j + 1) * p.degree
        })
    }
}

impl fmt::Display for ChainDegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Depth-first search over `d₁, d₂, …` with per-position bounds.
struct ChainSearch {
    r: i64,
    q: i64,
    d: i64,
}

impl ChainSearch {
    /// Admissible range for position `i` (0-based) given the prefix sum of
    /// positions `< i` and the previous entry.
    fn bounds(&self, i: i64, prefix: i64, prev: Option<i64>) -> (i64, i64) {
        let (r, q, d) = (self.r, self.q, self.d);
        let k = i + 1;
        // prefix average strictly above d/r: r·(prefix + x) > k·d
        let mut lo = Integer::div_floor(&(k * d - r * prefix), &r) + 1;
        if let Some(prev) = prev {
            lo = lo.max(prev - q);
        }
        // the m = r − k later entries are each at least q below their
        // predecessor, so they sum to at least m·x − q·m(m+1)/2
        let m = r - k;
        let hi = Integer::div_floor(&(d - prefix + q * m * (m + 1) / 2), &(m + 1));
        (lo, hi)
    }

    fn walk(&self, buf: &mut Vec<i64>, prefix: i64, visit: &mut impl FnMut(&[i64])) {
        let i = buf.len() as i64;
        let prev = buf.last().copied();
        if i == self.r - 1 {
            let last = self.d - prefix;
            if prev.is_none_or(|p| p - last <= self.q) {
                buf.push(last);
                visit(buf);
                buf.pop();
            }
            return;
        }
        let (lo, hi) = self.bounds(i, prefix, prev);
        for x in lo..=hi {
            buf.push(x);
            self.walk(buf, prefix + x, visit);
            buf.pop();
        }
    }

    fn run(&self, mut visit: impl FnMut(&[i64])) {
        let mut buf = Vec::with_capacity(self.r as usize);
        self.walk(&mut buf, 0, &mut visit);
    }
}

fn search(p: &TwistParams) -> Result<ChainSearch> {
    p.check()?;
    Ok(ChainSearch {
        r: p.rank,
        q: p.twist,
        d: p.degree,
    })
}

/// All type-(1,…,1) fixed points, sorted lexicographically.
pub fn enumerate_chains(p: &TwistParams) -> Result<Vec<ChainDegreeVector>> {
    let mut out = Vec::new();
    search(p)?.run(|v| out.push(ChainDegreeVector(v.to_vec())));
    // DFS visits d₁ ascending, then d₂ ascending, ... so this is a no-op
    // check rather than real work.
    out.sort_unstable();
    Ok(out)
}

/// Number of type-(1,…,1) fixed points.
pub fn count_chains(p: &TwistParams) -> Result<u64> {
    let mut n = 0u64;
    search(p)?.run(|_| n += 1);
    Ok(n)
}

/// Sign attached to the `e`-th term of the Möbius sum for `Ω(r, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SignConvention {
    /// `(−1)^{qe+1}`, the form printed alongside the conjectured formula.
    Paper,
    /// `(−1)^{q(e+r)}`, which agrees with enumeration for every `r, q`.
    #[default]
    Corrected,
}

impl SignConvention {
    fn sign(self, q: i64, e: i64, r: i64) -> i64 {
        let exp = match self {
            SignConvention::Paper => q * e + 1,
            SignConvention::Corrected => q * (e + r),
        };
        if exp.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

impl std::str::FromStr for SignConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "paper" => Ok(SignConvention::Paper),
            "corrected" => Ok(SignConvention::Corrected),
            other => Err(format!("unknown sign convention '{other}'")),
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignConvention::Paper => "paper",
            SignConvention::Corrected => "corrected",
        })
    }
}

/// `Ω(r,q) = 1/((q+1)r²) · Σ_{e|r} μ(r/e) · C((q+1)e, e) · ε(e)`.
pub fn omega_closed_form(r: i64, q: i64, sign: SignConvention) -> Result<BigInt> {
    TwistParams::new(r, q, 1).check()?;
    let mut sum = BigInt::zero();
    for e in divisors(r)? {
        let mu = moebius(r / e)?;
        if mu == 0 {
            continue;
        }
        let term = binomial(((q + 1) * e) as u64, e as u64);
        sum += term * (i64::from(mu) * sign.sign(q, e, r));
    }
    let denom = BigInt::from((q + 1) * r * r);
    let (quot, rem) = sum.div_rem(&denom);
    if !rem.is_zero() {
        return Err(Error::NonIntegerResult {
            numerator: sum.to_string(),
            denominator: denom.to_string(),
        });
    }
    Ok(quot)
}

/// Number of `r`-element subsets of `{1,…,2r−1}` whose sum is `≡ residue (mod r)`.
pub fn subset_count(r: i64, residue: i64) -> Result<BigInt> {
    if r < 1 {
        return Err(Error::domain(format!("rank must be >= 1, got {r}")));
    }
    let n = r as usize;
    // ways[k][c]: k elements chosen so far, sum ≡ c
    let mut ways = vec![vec![BigInt::zero(); n]; n + 1];
    ways[0][0] = BigInt::from(1);
    for x in 1..=(2 * n - 1) {
        let shift = x % n;
        for k in (0..n).rev() {
            for c in 0..n {
                if ways[k][c].is_zero() {
                    continue;
                }
                let add = ways[k][c].clone();
                ways[k + 1][(c + shift) % n] += add;
            }
        }
    }
    Ok(ways[n][residue.rem_euclid(r) as usize].clone())
}

/// Coefficients of `Π_{k≥1} (1 − x^k)^{−min(k,2)}` through `x^{n_max}`:
/// plane partitions with at most two rows.
pub fn plane_partitions_two_rows(n_max: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); n_max + 1];
    series[0] = BigInt::from(1);
    for k in 1..=n_max {
        // dividing by (1 − x^k) is a running sum with stride k
        for _ in 0..k.min(2) {
            for i in k..=n_max {
                let prev = series[i - k].clone();
                series[i] += prev;
            }
        }
    }
    series
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCount {
    pub degree: i64,
    pub count: u64,
}

/// Fixed-point counts across several degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub rank: i64,
    pub twist: i64,
    pub counts: Vec<DegreeCount>,
    pub all_equal: bool,
}

/// Counts `(1,…,1)` fixed points for each coprime degree and reports
/// whether they agree.
pub fn degree_independence_check(r: i64, q: i64, degrees: &[i64]) -> Result<IndependenceReport> {
    TwistParams::new(r, q, 1).check()?;
    if let Some(bad) = degrees.iter().find(|d| r.gcd(d) != 1) {
        return Err(Error::domain(format!(
            "degree {bad} is not coprime to rank {r}"
        )));
    }
    let counts = degrees
        .iter()
        .map(|&d| {
            Ok(DegreeCount {
                degree: d,
                count: count_chains(&TwistParams::new(r, q, d))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_equal = counts.windows(2).all(|w| w[0].count == w[1].count);
    Ok(IndependenceReport {
        rank: r,
        twist: q,
        counts,
        all_equal,
    })
}
