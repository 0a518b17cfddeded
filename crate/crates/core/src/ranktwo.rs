//! Poincaré polynomials of rank-1 and rank-2 Higgs moduli spaces via the
//! U(1)-fixed-point decomposition.
//!
//! For coprime `(2, d)` the fixed locus has one component of rank vector
//! `(2)` (stable bundles, index 0) and `g − 1` components of rank vector
//! `(1,1)`. A `(1,1)` component with `deg B₁ = b` fibres over the symmetric
//! product `S^n X`, `n = d − 2b + 2g − 2`, with fibre a Jacobian, and sits at
//! real Morse index `4b − 2d + 2g − 2`. The Poincaré polynomial of the moduli
//! space is `Σ t^ι P[C](t)` over the components.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dims::ModuliParams;
use crate::error::{Error, Result};
use crate::polyring::{binomial, IntPolynomial, TruncatedSeries};

/// `1 + t`
fn one_plus_t() -> IntPolynomial {
    IntPolynomial::from_coeffs([1, 1])
}

/// `1 + c t^k`
fn one_plus_monomial(c: i64, k: usize) -> IntPolynomial {
    &IntPolynomial::one() + &IntPolynomial::monomial(c, k)
}

fn genus_exp(g: i64) -> u32 {
    u32::try_from(2 * g).expect("genus out of range")
}

/// Poincaré polynomial of the `n`-fold symmetric product of a genus `g`
/// curve: the coefficient of `s^n` in `(1+st)^{2g} / ((1−s)(1−st²))`.
pub fn symprod_poincare(g: u32, n: u32) -> IntPolynomial {
    let order = n as usize;
    let two_g = 2 * u64::from(g);
    // (1 + s t)^{2g} = Σ_j C(2g, j) t^j s^j
    let numerator = TruncatedSeries::new(
        (0..=order)
            .map(|j| IntPolynomial::monomial(binomial(two_g, j as u64), j))
            .collect(),
        order,
    );
    let series = numerator
        .mul_truncated(&TruncatedSeries::geometric(1, 0, order))
        .mul_truncated(&TruncatedSeries::geometric(1, 2, order));
    series.coeff(order).clone()
}

fn check_curve(g: i64, d: i64) -> Result<()> {
    if g < 2 {
        return Err(Error::domain(format!("genus must be >= 2, got {g}")));
    }
    if d.rem_euclid(2) == 0 {
        return Err(Error::domain(format!(
            "degree must be odd for rank 2 (coprimality), got {d}"
        )));
    }
    Ok(())
}

/// Poincaré polynomial of the moduli space of stable rank-2 bundles with
/// fixed odd determinant:
/// `((1+t³)^{2g} − t^{2g}(1+t)^{2g}) / ((1−t²)(1−t⁴))`.
pub fn stable_bundles_sl2(g: i64, d: i64) -> Result<IntPolynomial> {
    check_curve(g, d)?;
    let e = genus_exp(g);
    let numerator = &one_plus_monomial(1, 3).pow(e) - &one_plus_t().pow(e).shift(2 * g as usize);
    let denominator = &one_plus_monomial(-1, 2) * &one_plus_monomial(-1, 4);
    numerator.exact_div(&denominator)
}

/// Stable rank-2 bundles without fixing the determinant: the fixed-determinant
/// series times the Jacobian's `(1+t)^{2g}`.
pub fn stable_bundles_gl2(g: i64, d: i64) -> Result<IntPolynomial> {
    let sl = stable_bundles_sl2(g, d)?;
    Ok(&one_plus_t().pow(genus_exp(g)) * &sl)
}

/// `(1+t)^{2g}`: the rank-1 moduli space is `T*Jac`, which retracts onto the
/// Jacobian.
pub fn rank1_poincare(g: i64) -> Result<IntPolynomial> {
    if g < 1 {
        return Err(Error::domain(format!("genus must be >= 1, got {g}")));
    }
    Ok(one_plus_t().pow(genus_exp(g)))
}

/// Rank vector of a holomorphic chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RankVector {
    /// A single rank-2 bundle with zero Higgs field.
    Two,
    /// Two line bundles `B₁ → B₂ ⊗ ω`.
    OneOne,
}

impl fmt::Display for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankVector::Two => "(2)",
            RankVector::OneOne => "(1,1)",
        })
    }
}

/// One connected component of the U(1)-fixed locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub label: RankVector,
    /// `deg B₁`; only for `(1,1)` chains.
    pub b: Option<i64>,
    /// Real Morse index.
    pub morse_index: u64,
    pub series: IntPolynomial,
    /// Order of the symmetric product the component fibres over; only for
    /// `(1,1)` chains.
    pub symprod_order: Option<u64>,
}

impl ComponentReport {
    /// `t^ι · P[C](t)`
    pub fn weighted_series(&self) -> IntPolynomial {
        self.series.shift(self.morse_index as usize)
    }
}

/// Components of the fixed locus in `M(2, d)`, ordered by `(label, b)`.
pub fn rank2_components(g: i64, d: i64) -> Result<Vec<ComponentReport>> {
    check_curve(g, d)?;
    let jac = one_plus_t().pow(genus_exp(g));
    let mut out = vec![ComponentReport {
        label: RankVector::Two,
        b: None,
        morse_index: 0,
        series: stable_bundles_gl2(g, d)?,
        symprod_order: None,
    }];
    // b > d/2 (B₂ not destabilising) and d − 2b + 2g − 2 >= 0 (φ ≠ 0)
    let b_min = (d + 1).div_euclid(2);
    let b_max = (d - 1).div_euclid(2) + (g - 1);
    for b in b_min..=b_max {
        let index = 4 * b - 2 * d + 2 * g - 2;
        let order = d - 2 * b + 2 * g - 2;
        debug_assert!(index >= 0 && index % 2 == 0 && order >= 1);
        let series = &jac * &symprod_poincare(g as u32, order as u32);
        out.push(ComponentReport {
            label: RankVector::OneOne,
            b: Some(b),
            morse_index: index as u64,
            series,
            symprod_order: Some(order as u64),
        });
    }
    Ok(out)
}

/// Poincaré polynomial of the rank-2, degree-`d` Higgs moduli space.
pub fn rank2_poincare(g: i64, d: i64) -> Result<IntPolynomial> {
    Ok(rank2_components(g, d)?
        .iter()
        .fold(IntPolynomial::zero(), |acc, c| &acc + &c.weighted_series()))
}

/// Poincaré polynomial of the PGL(2) moduli space:
/// `P[M(2,d)] / (1+t)^{2g}`.
pub fn pgl2_poincare(g: i64, d: i64) -> Result<IntPolynomial> {
    rank2_poincare(g, d)?.exact_div(&one_plus_t().pow(genus_exp(g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Gl,
    Sl,
    Pgl,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Gl => "GL",
            Group::Sl => "SL",
            Group::Pgl => "PGL",
        })
    }
}

/// A Poincaré polynomial together with the moduli problem it describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    pub poly: IntPolynomial,
    pub params: ModuliParams,
    pub group: Group,
}

impl PoincareSeries {
    /// Rank-2 GL series for `(g, d)`.
    pub fn rank2(g: i64, d: i64) -> Result<Self> {
        Ok(Self {
            poly: rank2_poincare(g, d)?,
            params: ModuliParams::new(g, 2, d),
            group: Group::Gl,
        })
    }

    /// Rank-2 PGL series for `(g, d)`.
    pub fn pgl2(g: i64, d: i64) -> Result<Self> {
        Ok(Self {
            poly: pgl2_poincare(g, d)?,
            params: ModuliParams::new(g, 2, d),
            group: Group::Pgl,
        })
    }

    /// `k`-th Betti number.
    pub fn betti(&self, k: usize) -> BigInt {
        self.poly.coeff(k)
    }

    /// `b₀ = 1`.
    pub fn is_connected(&self) -> bool {
        self.betti(0).is_one()
    }

    /// Euler characteristic, `P(−1)`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.poly.eval(&BigInt::from(-1))
    }

    /// Sum of all Betti numbers, `P(1)`.
    pub fn total_betti(&self) -> BigInt {
        let v = self.poly.eval(&BigInt::one());
        debug_assert!(v >= BigInt::zero());
        v
    }
}
