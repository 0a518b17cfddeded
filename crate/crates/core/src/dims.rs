//! Closed-form dimension counts for Higgs bundle moduli spaces on a curve of
//! genus `g >= 2`, and the numerical data of the spectral cover.
//!
//! Formulas are applied as written for every rank `r >= 1`; for `r = 1` the
//! "spectral cover" is the curve itself.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Genus, rank and degree of a moduli problem on a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ModuliParams {
    pub genus: i64,
    pub rank: i64,
    pub degree: i64,
}

impl ModuliParams {
    pub fn new(genus: i64, rank: i64, degree: i64) -> Self {
        Self {
            genus,
            rank,
            degree,
        }
    }

    pub fn is_coprime(&self) -> bool {
        self.rank.gcd(&self.degree) == 1
    }

    fn check(&self) -> Result<()> {
        check_genus(self.genus)?;
        if self.rank < 1 {
            return Err(Error::domain(format!(
                "rank must be >= 1, got {}",
                self.rank
            )));
        }
        Ok(())
    }
}

fn check_genus(g: i64) -> Result<()> {
    if g < 2 {
        return Err(Error::domain(format!("genus must be >= 2, got {g}")));
    }
    Ok(())
}

/// Complex dimension of the GL(r) moduli space, `2r²(g−1)+2`.
pub fn dim_moduli_gl(p: &ModuliParams) -> Result<i64> {
    p.check()?;
    Ok(2 * p.rank * p.rank * (p.genus - 1) + 2)
}

/// Complex dimension of the fixed-determinant (SL(r)) moduli space, `2(r²−1)(g−1)`.
pub fn dim_moduli_sl(p: &ModuliParams) -> Result<i64> {
    p.check()?;
    Ok(2 * (p.rank * p.rank - 1) * (p.genus - 1))
}

/// Dimension of the Hitchin base. With `fixed_det` the trace part `h⁰(ω) = g`
/// is dropped.
pub fn hitchin_base_dim(p: &ModuliParams, fixed_det: bool) -> Result<i64> {
    p.check()?;
    let gl = p.rank * p.rank * (p.genus - 1) + 1;
    Ok(if fixed_det { gl - p.genus } else { gl })
}

/// `h⁰(X, ω^i)`: `g` for `i = 1`, otherwise `(2i−1)(g−1)`.
pub fn h0_canonical_power(genus: i64, i: i64) -> Result<i64> {
    check_genus(genus)?;
    if i < 1 {
        return Err(Error::domain(format!(
            "canonical power must be >= 1, got {i}"
        )));
    }
    Ok(if i == 1 {
        genus
    } else {
        (2 * i - 1) * (genus - 1)
    })
}

/// Genus of a smooth spectral curve, `r²(g−1)+1`.
pub fn spectral_genus(p: &ModuliParams) -> Result<i64> {
    p.check()?;
    Ok(p.rank * p.rank * (p.genus - 1) + 1)
}

/// Degree `e` of the spectral line bundle whose pushforward has degree `d`:
/// `e = d − (1 − g′) + r(1 − g)`.
pub fn pushforward_degree(p: &ModuliParams) -> Result<i64> {
    let g_prime = spectral_genus(p)?;
    Ok(p.degree - (1 - g_prime) + p.rank * (1 - p.genus))
}

/// Spectral-cover numbers for one moduli problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpectralData {
    pub genus_prime: i64,
    pub pushforward_degree: i64,
    pub base_dim: i64,
}

impl SpectralData {
    pub fn compute(p: &ModuliParams) -> Result<Self> {
        Ok(Self {
            genus_prime: spectral_genus(p)?,
            pushforward_degree: pushforward_degree(p)?,
            base_dim: hitchin_base_dim(p, false)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(g: i64, r: i64, d: i64) -> ModuliParams {
        ModuliParams::new(g, r, d)
    }

    #[test]
    fn gl_dimension() {
        assert_eq!(dim_moduli_gl(&mp(2, 2, 1)).unwrap(), 10);
        assert_eq!(dim_moduli_gl(&mp(2, 1, 0)).unwrap(), 4);
        assert_eq!(dim_moduli_gl(&mp(3, 3, 1)).unwrap(), 38);
        assert!(dim_moduli_gl(&mp(1, 2, 1)).unwrap_err().is_domain());
    }

    #[test]
    fn sl_dimension() {
        assert_eq!(dim_moduli_sl(&mp(2, 2, 0)).unwrap(), 6);
        for g in 2..6 {
            assert_eq!(dim_moduli_sl(&mp(g, 1, 3)).unwrap(), 0);
        }
        assert_eq!(dim_moduli_sl(&mp(3, 2, 1)).unwrap(), 12);
        assert_eq!(
            dim_moduli_gl(&mp(3, 3, 1)).unwrap(),
            dim_moduli_sl(&mp(3, 3, 1)).unwrap() + 6
        );
    }

    #[test]
    fn base_dimension() {
        assert_eq!(hitchin_base_dim(&mp(2, 2, 0), false).unwrap(), 5);
        assert_eq!(hitchin_base_dim(&mp(2, 2, 0), true).unwrap(), 3);
        // SL(2) base is H^0(ω²), of dimension 3g − 3
        for g in 2..8 {
            assert_eq!(
                hitchin_base_dim(&mp(g, 2, 0), true).unwrap(),
                h0_canonical_power(g, 2).unwrap()
            );
        }
        assert_eq!(hitchin_base_dim(&mp(3, 2, 0), true).unwrap(), 6);
        assert!(hitchin_base_dim(&mp(0, 2, 0), true).is_err());
    }

    #[test]
    fn canonical_powers() {
        assert_eq!(h0_canonical_power(2, 1).unwrap(), 2);
        assert_eq!(h0_canonical_power(2, 2).unwrap(), 3);
        assert_eq!(h0_canonical_power(4, 3).unwrap(), 15);
        assert!(h0_canonical_power(4, 0).unwrap_err().is_domain());
        assert!(h0_canonical_power(1, 2).unwrap_err().is_domain());
    }

    #[test]
    fn canonical_powers_sum_to_base() {
        for g in 2..=10 {
            for r in 1..=6 {
                let sum: i64 = (1..=r).map(|i| h0_canonical_power(g, i).unwrap()).sum();
                assert_eq!(sum, hitchin_base_dim(&mp(g, r, 0), false).unwrap());
            }
        }
    }

    #[test]
    fn spectral_genus_examples() {
        assert_eq!(spectral_genus(&mp(2, 2, 1)).unwrap(), 5);
        assert_eq!(spectral_genus(&mp(3, 2, 1)).unwrap(), 9);
        // rank one: the cover is the curve itself
        assert_eq!(spectral_genus(&mp(2, 1, 0)).unwrap(), 2);
    }

    #[test]
    fn pushforward_examples() {
        assert_eq!(pushforward_degree(&mp(2, 2, 1)).unwrap(), 3);
        assert_eq!(pushforward_degree(&mp(2, 2, 0)).unwrap(), 2);
        assert_eq!(pushforward_degree(&mp(3, 1, 5)).unwrap(), 5);
    }

    #[test]
    fn dimension_identities() {
        for g in 2..=10 {
            for r in 1..=6 {
                for d in -3..=3 {
                    let p = mp(g, r, d);
                    let base = hitchin_base_dim(&p, false).unwrap();
                    let gp = spectral_genus(&p).unwrap();
                    assert_eq!(base, gp);
                    assert_eq!(dim_moduli_gl(&p).unwrap(), 2 * base);
                    assert_eq!(
                        dim_moduli_gl(&p).unwrap() - dim_moduli_sl(&p).unwrap(),
                        2 * g
                    );
                    // χ(spectral curve, L) = χ(X, pushforward of L)
                    let e = pushforward_degree(&p).unwrap();
                    assert_eq!(e + 1 - gp, d + r * (1 - g));
                }
            }
        }
    }

    #[test]
    fn spectral_data_bundle() {
        let s = SpectralData::compute(&mp(2, 2, 1)).unwrap();
        assert_eq!(
            s,
            SpectralData {
                genus_prime: 5,
                pushforward_degree: 3,
                base_dim: 5
            }
        );
        assert!(mp(2, 2, 1).is_coprime());
        assert!(!mp(2, 2, 4).is_coprime());
    }
}
