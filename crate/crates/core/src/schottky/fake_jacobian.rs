//! Degree-0 and degree-1 Chern–Mather equations for fake Jacobians.
//!
//! A fake Jacobian of dimension `g` has `[e]₊ cc(δ_Θ) = Alt^{g-1}(Λ)`
//! (nonhyperelliptic, `e = g − 1`) or `Alt^{g-1}(Λ) − Alt^{g-3}(Λ)`
//! (hyperelliptic, `e = gcd(2, g − 1)`) for some cycle `Λ`. Writing
//! `c_i = c_{M,i}(Λ)`, the degree fixes `c_0` and the degree-one layer is
//! linear in `c_1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chow::ChowVector;
use crate::cycles::{cm1_partition_product, CleanCycleModel};
use crate::error::{Error, Result};
use crate::num::{binomial, is_integer, rat_int, serde_bigint, serde_rational};
use crate::symfun::{elementary_to_powersum, Partition};

use super::theta::{divisor_cm, PpavInput};

/// Coefficient of `c_1` in `c_{M,1}(Alt^n(Λ))` for a cycle with `c_M(Λ) = (c0, c1, 0, …)`.
///
/// Expands `e_n = Σ_β ε_β p_β / z_β` and uses that `Λ_[β]` has degree-one
/// coefficient `(Σ β_i²)·c0^{ℓ(β)−1}`.
pub fn alt_cm1_coefficient(n: u32, c0: &BigInt) -> BigRational {
    elementary_to_powersum(n)
        .terms()
        .map(|(beta, coeff)| coeff * rat_int(cm1_partition_product(beta, c0)))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Degree `C(c0, g−1)` or `C(c0, g−1) − C(c0, g−3)` of the tensor construction.
pub fn construction_degree(g: usize, c0: u64, hyperelliptic: bool) -> BigInt {
    let n = g as u64 - 1;
    let main = binomial(c0, n);
    if hyperelliptic && n >= 2 {
        main - binomial(c0, n - 2)
    } else {
        main
    }
}

/// Covering degree `e` of the universal cover in the fake-Jacobian equation.
pub fn covering_degree(g: usize, hyperelliptic: bool) -> u64 {
    let n = g as u64 - 1;
    if hyperelliptic {
        n.gcd(&2).max(1)
    } else {
        n.max(1)
    }
}

/// Solution of the two lowest Chern–Mather layers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FakeJacobianSolution {
    pub g: usize,
    pub hyperelliptic: bool,
    pub e: u64,
    #[serde(with = "serde_bigint")]
    pub target_degree: BigInt,
    /// Smallest `c_0` solving the degree equation.
    #[serde(with = "serde_bigint")]
    pub c0: BigInt,
    /// Further solutions of the degree equation, if any.
    pub other_c0: Vec<String>,
    /// Coefficient of `c_1` in the degree-one layer of the construction.
    #[serde(with = "serde_rational")]
    pub c1_coefficient: BigRational,
    /// Degree-one coordinate of `[e]₊` of the target.
    #[serde(with = "serde_rational")]
    pub pushed_target_c1: BigRational,
    /// Solved `c_1(Λ)`; absent when the degree-one layer does not involve `c_1`
    /// or the target carries no valid degree-one data.
    pub c1: Option<ChowVector>,
    pub c1_integral: Option<bool>,
    pub c1_effective: Option<bool>,
    /// Layers from this index on are not constrained by the computation.
    pub unconstrained_from: usize,
}

/// Solves the degree and degree-one equations for `Λ` given `cc(δ_Θ)`.
///
/// The degree equation has no integral solution exactly when the target cannot
/// come from a fake Jacobian; this is reported as [`Error::Infeasible`].
pub fn fake_jacobian_solve(g: usize, target: &CleanCycleModel, hyperelliptic: bool) -> Result<FakeJacobianSolution> {
    if g < 2 {
        return Err(Error::Precondition(format!("g = {g}: a fake Jacobian needs g ≥ 2")));
    }
    if target.g() != g {
        return Err(Error::DimensionMismatch(g, target.g()));
    }
    let deg = target.degree();
    let n = g as u64 - 1;
    // Past 2n the degree is increasing in c0, so stop once it overshoots.
    let mut solutions = Vec::new();
    let mut c0 = 0u64;
    loop {
        let d = construction_degree(g, c0, hyperelliptic);
        if d == deg {
            solutions.push(c0);
        }
        if c0 >= 2 * n && d > deg {
            break;
        }
        c0 += 1;
    }
    let Some(&first) = solutions.first() else {
        return Err(Error::Infeasible(format!(
            "no c0 solves the degree equation {} = {deg}: not a {} fake Jacobian",
            if hyperelliptic { "C(c0, g-1) - C(c0, g-3)" } else { "C(c0, g-1)" },
            if hyperelliptic { "hyperelliptic" } else { "nonhyperelliptic" }
        )));
    };
    let c0 = BigInt::from(first);
    let e = covering_degree(g, hyperelliptic);
    let mut coeff = alt_cm1_coefficient(n as u32, &c0);
    if hyperelliptic && n >= 2 {
        coeff -= alt_cm1_coefficient(n as u32 - 2, &c0);
    }
    let e2 = BigInt::from(e) * BigInt::from(e);
    let known = g >= 2 && target.valid_through() >= 1;
    let pushed = if known { target.total_cm().coord(1) * rat_int(e2) } else { BigRational::zero() };
    let c1_value = (known && !coeff.is_zero()).then(|| &pushed / &coeff);
    Ok(FakeJacobianSolution {
        g,
        hyperelliptic,
        e,
        target_degree: deg,
        c0,
        other_c0: solutions[1..].iter().map(ToString::to_string).collect(),
        c1_coefficient: coeff,
        pushed_target_c1: pushed,
        c1_integral: c1_value.as_ref().map(is_integer),
        c1_effective: c1_value.as_ref().map(|c| !c.is_negative()),
        c1: c1_value.map(|c| ChowVector::basis(g, 1, c)),
        unconstrained_from: 2,
    })
}

/// Record of the genus-five computation showing that a nonhyperelliptic fake
/// Jacobian with at most isolated theta singularities does not exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Genus5Record {
    #[serde(with = "serde_bigint")]
    pub c0: BigInt,
    /// `(partition, c_{M,1}(Λ_[β]) / c_1)` for the partitions of four.
    pub partition_coefficients: Vec<(Partition, String)>,
    #[serde(with = "serde_rational")]
    pub alt4_coefficient: BigRational,
    /// `c_{M,1}(Λ_Θ)`, equal to `[Θ]⁴`.
    pub theta_c1: ChowVector,
    /// `(g − 1)²·[Θ]⁴`, the degree-one part of `[4]₊ cc(δ_Θ)`.
    pub lhs: ChowVector,
    pub c1: ChowVector,
    /// `c_1` as a multiple of `[Θ]⁴`.
    #[serde(with = "serde_rational")]
    pub c1_over_theta4: BigRational,
    pub integral: bool,
    pub verdict: String,
}

impl Genus5Record {
    /// The coefficients in the order `[1,1,1,1], [2,1,1], [2,2], [3,1], [4]`.
    pub fn coefficient_values(&self) -> Vec<BigInt> {
        self.partition_coefficients.iter().map(|(_, c)| c.parse().expect("integer")).collect()
    }
}

/// Genus-five obstruction from the degree-one Chern–Mather layer.
///
/// Only the divisor component contributes in degree one when the singularities
/// are isolated, so `c_{M,1}(cc(δ_Θ)) = [Θ]⁴ = 24·μ_1` and `k` plays no role.
pub fn genus5_obstruction(p: &PpavInput) -> Result<Genus5Record> {
    if p.g != 5 {
        return Err(Error::Precondition(format!("g = {} but the computation is for g = 5", p.g)));
    }
    if !p.symmetric {
        return Err(Error::MissingHypothesis("symmetric"));
    }
    let g = 5;
    let c0 = BigInt::from(2 * g as u64 - 2);
    let mut betas: Vec<Partition> = crate::symfun::partitions(4);
    betas.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let partition_coefficients = betas.iter().map(|b| (b.clone(), cm1_partition_product(b, &c0).to_string())).collect();
    let alt4 = alt_cm1_coefficient(4, &c0);
    let theta4 = divisor_cm(g, BigInt::from(1), Some(0)).coord(1).clone();
    let theta_c1 = ChowVector::basis(g, 1, theta4.clone());
    let e = rat_int(BigInt::from((g - 1) * (g - 1)));
    let lhs = theta_c1.scale(&e);
    let c1_value = lhs.coord(1) / &alt4;
    let integral = is_integer(&c1_value);
    let ratio = &c1_value / &theta4;
    Ok(Genus5Record {
        c0,
        partition_coefficients,
        alt4_coefficient: alt4,
        theta_c1,
        lhs,
        c1: ChowVector::basis(g, 1, c1_value),
        c1_over_theta4: ratio,
        integral,
        verdict: if integral {
            "consistent: the degree-one layer does not exclude a fake Jacobian".into()
        } else {
            "excluded: c_1 is not integral, so a nonhyperelliptic fake Jacobian of dimension 5 has a \
             theta divisor with positive-dimensional singular locus"
                .into()
        },
    })
}

/// `c_1` solved against an arbitrary degree-one target `t·μ_1`, for checking
/// that the verdict only depends on integrality.
pub fn genus5_c1_for_target(target_c1: &BigRational) -> BigRational {
    let alt4 = alt_cm1_coefficient(4, &BigInt::from(8));
    target_c1 * rat_int(BigInt::from(16)) / alt4
}
