//! Obstructions to decompositions: summands of divisors and almost simplicity.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cycles::{adams_push, convolve, essentially_multiplicity_free_exact, CleanCycleModel};
use crate::error::{Error, Result};
use crate::liere::{
    char_sym, decompose, freudenthal_character, root_multiple_condition, DynkinType, Family, RootSystem, Weight,
};
use crate::num::frac;

/// Lower bound `δ` on the dimension of the summands in `Z = X + Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandBound {
    /// Half the smallest positive support dimension among submodules of the
    /// adjoint module; absent when there is none and the bound is vacuous.
    #[serde(with = "opt_rational")]
    pub delta: Option<BigRational>,
    pub d_z: usize,
    /// `δ > ⌊d_Z/2⌋`: no decomposition into positive-dimensional summands.
    pub no_positive_dimensional_decomposition: bool,
}

mod opt_rational {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => crate::num::serde_rational::serialize(v, s),
            None => s.serialize_none(),
        }
    }
}

/// `δ = ½·min{dim Supp(M) : M ⊂ Ad_Z, dim Supp(M) > 0}` from the support
/// dimensions of the submodules of the adjoint module.
///
/// Each entry is `(dim, present)`; entries with `present = false` or dimension
/// zero do not enter the minimum.
pub fn summand_bound(ad_components: &[(usize, bool)], d_z: usize) -> SummandBound {
    let delta = ad_components
        .iter()
        .filter(|&&(d, present)| present && d > 0)
        .map(|&(d, _)| d)
        .min()
        .map(|d| frac(d as i64, 2));
    let half = BigRational::from_integer(BigInt::from(d_z / 2));
    let no_positive_dimensional_decomposition = delta.as_ref().is_some_and(|d| *d > half);
    SummandBound { delta, d_z, no_positive_dimensional_decomposition }
}

/// The bound for a theta divisor whose group is symplectic in its standard
/// representation: the adjoint support has dimension at least `g − 1`.
pub fn theta_not_a_sum(g: usize) -> Result<SummandBound> {
    if g < 2 {
        return Err(Error::Precondition(format!("g = {g}: a theta divisor needs g ≥ 2")));
    }
    Ok(summand_bound(&[(g - 1, true)], g - 1))
}

/// Root system and highest weight of the standard representation of `Sp_{2m}`.
pub fn symplectic_standard(m: usize) -> Result<(RootSystem, Weight)> {
    match m {
        0 => Err(Error::Precondition("Sp_0 has no standard representation".into())),
        1 => Ok((RootSystem::new(DynkinType::new(Family::A, 1)?), Weight::fundamental(1, 1))),
        _ => Ok((RootSystem::new(DynkinType::new(Family::C, m)?), Weight::fundamental(m, 1))),
    }
}

/// Adjoint data for `Sp_{2m}` acting on `C^{2m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointObstruction {
    pub m: usize,
    /// Irreducible constituents of `Sym²` of the standard representation.
    pub sym2_constituents: Vec<(String, u64)>,
    pub sym2_irreducible: bool,
    /// Some weight of the standard representation is a positive multiple of a root.
    pub root_multiple: bool,
    pub summand: SummandBound,
}

/// Checks the adjoint obstruction for a theta divisor on a `g`-dimensional
/// ppav with group `Sp_{2m}` in its standard representation.
pub fn adjoint_obstruction(g: usize, m: usize) -> Result<AdjointObstruction> {
    let (rs, w) = symplectic_standard(m)?;
    let std = freudenthal_character(&rs, &w)?;
    let parts = decompose(&rs, &char_sym(2, &std)?)?;
    let sym2_irreducible = parts.len() == 1 && parts[0].1 == 1;
    Ok(AdjointObstruction {
        m,
        sym2_constituents: parts.iter().map(|(w, c)| (w.label(), *c)).collect(),
        sym2_irreducible,
        root_multiple: root_multiple_condition(&rs, &w)?,
        summand: theta_not_a_sum(g)?,
    })
}

/// Status of the convolution criterion, which quantifies over all `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConvolutionCriterion {
    /// `[2m]₊ cc ≠ Λ_{mZ} ∘ Λ_{mZ}` for every `m ≤ m_bound`; not a proof for all `m`.
    VerifiedUpToBound {
        m_bound: u32,
    },
    /// The Chern–Mather totals agree for this `m`, so the criterion gives nothing.
    Fails {
        m: u32,
    },
    NotApplicable {
        reason: String,
    },
}

/// The four sufficient conditions for the Lie algebra of the group to be
/// simple modulo its center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub divisor: String,
    pub divisor_degree: String,
    pub total_degree: String,
    /// `deg Λ_Z > deg cc / 3`.
    pub large_divisor: bool,
    /// Every other component with nonzero multiplicity lies over a point.
    pub only_point_companions: bool,
    pub convolution: ConvolutionCriterion,
    /// `[n]₊ cc` is reduced for every `n`.
    pub essentially_multiplicity_free: bool,
    /// One of the unconditional criteria holds.
    pub simple_modulo_center: bool,
}

/// Evaluates the four criteria for a cycle with divisor component `divisor_label`.
///
/// The convolution criterion compares Chern–Mather totals of `[2m]₊ c` with
/// those of `Λ_{mZ} ∘ Λ_{mZ}` through index `g − 1`, for `m = 1..=m_bound`;
/// it needs a finite Gauss map on the divisor. The last criterion needs a fiber
/// model.
pub fn simplicity_criteria(c: &CleanCycleModel, divisor_label: &str, m_bound: u32) -> Result<SimplicityReport> {
    let g = c.g();
    let z = c
        .component(divisor_label)
        .ok_or_else(|| Error::Precondition(format!("no component labelled `{divisor_label}`")))?;
    if z.dim + 1 != g || z.mult != 1 || z.aggregate {
        return Err(Error::Precondition(format!(
            "component `{divisor_label}` must be a reduced divisor component of dimension {}",
            g.saturating_sub(1)
        )));
    }
    let total = c.degree();
    let zdeg = z.gauss_degree();
    let large_divisor = BigInt::from(3) * &zdeg > total;
    let only_point_companions =
        c.components().iter().filter(|comp| comp.label != z.label && comp.mult != 0).all(|comp| comp.dim == 0);
    let emf = essentially_multiplicity_free_exact(c)?;

    let convolution = if !z.gauss_finite {
        ConvolutionCriterion::NotApplicable { reason: "the Gauss map of the divisor is not known to be finite".into() }
    } else if g < 2 {
        ConvolutionCriterion::NotApplicable { reason: "needs g ≥ 2".into() }
    } else {
        let zc = CleanCycleModel::new(g, vec![z.clone()], None)?;
        let mut status = ConvolutionCriterion::VerifiedUpToBound { m_bound };
        for m in 1..=m_bound {
            let lhs = adams_push(2 * i64::from(m), c)?.total_cm().truncate(g - 1);
            let mz = adams_push(i64::from(m), &zc)?;
            let rhs = convolve(&mz, &mz, g - 1)?.total_cm();
            if lhs == rhs {
                status = ConvolutionCriterion::Fails { m };
                break;
            }
        }
        status
    };
    Ok(SimplicityReport {
        divisor: z.label.clone(),
        divisor_degree: zdeg.to_string(),
        total_degree: total.to_string(),
        large_divisor,
        only_point_companions,
        convolution,
        essentially_multiplicity_free: emf,
        simple_modulo_center: large_divisor || only_point_companions || emf,
    })
}
