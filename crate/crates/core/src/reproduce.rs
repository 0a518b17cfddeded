//! The bundled reproduction suite behind `higgs-betti reproduce`: every
//! published value this library can recompute, checked exactly.

use num_bigint::BigInt;
use serde::Serialize;

use crate::chains::{
    count_chains, omega_closed_form, plane_partitions_two_rows, subset_count, SignConvention,
    TwistParams,
};
use crate::dims::{dim_moduli_gl, dim_moduli_sl, hitchin_base_dim, spectral_genus, ModuliParams};
use crate::fixtures;
use crate::polyring::IntPolynomial;
use crate::ranktwo::{pgl2_poincare, rank1_poincare, rank2_poincare};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub citation: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Check {
    fn compare<T: PartialEq + std::fmt::Display>(
        name: &str,
        citation: &str,
        expected: T,
        actual: Result<T>,
    ) -> Self {
        let (actual, passed) = match actual {
            Ok(a) => {
                let ok = a == expected;
                (a.to_string(), ok)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        Check {
            name: name.to_string(),
            citation: citation.to_string(),
            expected: expected.to_string(),
            actual,
            passed,
        }
    }
}

/// Newtype so sequences print as `[a, b, c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Seq(Vec<BigInt>);

impl std::fmt::Display for Seq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(c.iter().copied())
}

fn jacobian_factor(g: u32) -> IntPolynomial {
    poly(&[1, 1]).pow(2 * g)
}

const EX6_BRACKET: [i64; 7] = [1, 0, 1, 4, 2, 4, 2];
const EX7_BRACKET: [i64; 13] = [1, 0, 1, 6, 2, 6, 17, 12, 18, 32, 18, 12, 3];

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_all() -> Summary {
    let mut checks = Vec::with_capacity(32);

    checks.push(Check::compare(
        "rank-2 Poincare polynomial, g=2, d=1",
        "Exercise: (1+t)^4(1+t^2+4t^3+2t^4+4t^5+2t^6)",
        &jacobian_factor(2) * &poly(&EX6_BRACKET),
        rank2_poincare(2, 1),
    ));
    checks.push(Check::compare(
        "rank-2 Poincare polynomial, g=3, d=1",
        "Exercise: (1+t)^6(1+t^2+6t^3+...+12t^11+3t^12)",
        &jacobian_factor(3) * &poly(&EX7_BRACKET),
        rank2_poincare(3, 1),
    ));
    checks.push(Check::compare(
        "PGL(2) Poincare polynomial, g=2",
        "Langlands dual invariant part 1+t^2+4t^3+2t^4+4t^5+2t^6",
        poly(&EX6_BRACKET),
        pgl2_poincare(2, 1),
    ));
    checks.push(Check::compare(
        "rank-1 Poincare polynomial, g=2",
        "P[Jac](t) = (1+t)^{2g}",
        jacobian_factor(2),
        rank1_poincare(2),
    ));

    let g2r2 = ModuliParams::new(2, 2, 0);
    checks.push(Check::compare(
        "dim SL(2) moduli, g=2",
        "dimension 6g-6",
        6,
        dim_moduli_sl(&g2r2),
    ));
    checks.push(Check::compare(
        "dim GL(2) moduli, g=2",
        "dim M(r,d) = 2r^2(g-1)+2",
        10,
        dim_moduli_gl(&g2r2),
    ));
    checks.push(Check::compare(
        "SL(2) Hitchin base, g=2",
        "fibering over a 3-dimensional base",
        3,
        hitchin_base_dim(&g2r2, true),
    ));
    checks.push(Check::compare(
        "spectral genus, g=2, r=2",
        "smooth genus g'=5 curve",
        5,
        spectral_genus(&g2r2),
    ));
    for g in 3..=5 {
        checks.push(Check::compare(
            &format!("spectral genus, r=2, g={g}"),
            "generic spectral curve has genus g'=4g-3",
            4 * g - 3,
            spectral_genus(&ModuliParams::new(g, 2, 0)),
        ));
    }
    for g in 2..=5i64 {
        checks.push(Check::compare(
            &format!("top degree of rank-2 series, g={g}"),
            "highest power of t is 2r^2(g-1)+2",
            (8 * g - 6) as usize,
            rank2_poincare(g, 1).map(|p| p.degree().unwrap_or(0)),
        ));
    }
    checks.push(Check::compare(
        "b_0 and b_18 of M(2,1), g=3",
        "connected (b_0=1) with b_18=3",
        "b0=1 b18=3".to_string(),
        rank2_poincare(3, 1).map(|p| format!("b0={} b18={}", p.coeff(0), p.coeff(18))),
    ));
    for g in 2..=5i64 {
        checks.push(Check::compare(
            &format!("rank-2 series independent of odd d, g={g}"),
            "Betti numbers independent of d",
            "identical for d in {1,3,5,7}".to_string(),
            (|| {
                let base = rank2_poincare(g, 1)?;
                for d in [3, 5, 7] {
                    if rank2_poincare(g, d)? != base {
                        return Ok(format!("differs at d={d}"));
                    }
                }
                Ok("identical for d in {1,3,5,7}".to_string())
            })(),
        ));
    }

    let a131868 = fixtures::a131868();
    let prefix = Seq(a131868[..12].to_vec());
    checks.push(Check::compare(
        "(1,...,1) fixed-point counts, q=1, r=1..12",
        "OEIS A131868: 1, 1, 1, 2, 5, 13, 35, 100, 300, 925, 2915, 9386",
        prefix.clone(),
        (1..=12)
            .map(|r| count_chains(&TwistParams::new(r, 1, 1)).map(BigInt::from))
            .collect::<Result<Vec<_>>>()
            .map(Seq),
    ));
    checks.push(Check::compare(
        "Omega(r) closed form, r=1..12",
        "OEIS A131868 Mobius-sum formula",
        prefix,
        (1..=12)
            .map(|r| omega_closed_form(r, 1, SignConvention::Corrected))
            .collect::<Result<Vec<_>>>()
            .map(Seq),
    ));
    checks.push(Check::compare(
        "fixed-point counts independent of d, r=5",
        "count independent of coprime d",
        Seq(vec![BigInt::from(5); 4]),
        (1..=4)
            .map(|d| count_chains(&TwistParams::new(5, 1, d)).map(BigInt::from))
            .collect::<Result<Vec<_>>>()
            .map(Seq),
    ));
    checks.push(Check::compare(
        "Omega(r,q) matches enumeration, r<=8, q<=3",
        "Omega(r,q) Mobius-sum formula (sign (-1)^{q(e+r)})",
        "all equal".to_string(),
        (|| {
            for q in 1..=3 {
                for r in 1..=8 {
                    let n = count_chains(&TwistParams::new(r, q, 1))?;
                    if omega_closed_form(r, q, SignConvention::Corrected)? != BigInt::from(n) {
                        return Ok(format!("mismatch at r={r} q={q}"));
                    }
                }
            }
            Ok("all equal".to_string())
        })(),
    ));
    checks.push(Check::compare(
        "r*Omega(r,1) = size-r subsets of {1..2r-1} summing to 1 mod r, r<=8",
        "OEIS A131868 subset interpretation",
        "all equal".to_string(),
        (|| {
            for r in 1..=8 {
                let lhs = omega_closed_form(r, 1, SignConvention::Corrected)? * r;
                if lhs != subset_count(r, 1)? {
                    return Ok(format!("mismatch at r={r}"));
                }
            }
            Ok("all equal".to_string())
        })(),
    ));
    checks.push(Check::compare(
        "two-row plane partitions, n=0..9",
        "OEIS A000990: 1+t^2+3t^4+5t^6+10t^8+...+115t^18",
        Seq(fixtures::a000990()),
        Ok(Seq(plane_partitions_two_rows(9))),
    ));

    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    Summary {
        checks,
        passed,
        failed,
    }
}
