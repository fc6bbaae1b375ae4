//! Invariants of indecomposable principally polarized abelian fourfolds, and
//! the check `[e]₊ target = S(Λ_1, …, Λ_r)` in the group ring.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lambda::{eval_construction, gr_adams, GroupRingElement, TensorConstruction};
use crate::liere::{
    char_alt, decompose, freudenthal_character, group_label, DynkinType, Family, RootSystem, TableRow, Weight,
};

use super::fake_jacobian::construction_degree;
use super::theta::{cc_odp, theta_group, PpavInput, ThetaGroupVerdict};

/// One row of the fourfold table. Cells are strings because the thetanull
/// row is stated for a symbolic number `k` of double points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourfoldRow {
    pub locus: String,
    pub gauss_degree: String,
    pub cc_degree: String,
    pub representation: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const G: usize = 4;

fn fundamental_label(i: usize) -> String {
    format!("ϖ{i}")
}

/// `deg γ = a − b·k` read off from the thetanull degrees at `k = 0` and `k = 1`.
fn linear_in_k(at0: &BigInt, at1: &BigInt) -> String {
    format!("{at0}-{}k", at0 - at1)
}

fn smooth_row() -> Result<FourfoldRow> {
    let p = PpavInput::new(G, 0);
    let cc = cc_odp(&p)?;
    let group = match theta_group(&p)? {
        ThetaGroupVerdict::Determined { label, .. } => label,
        ThetaGroupVerdict::Undetermined { reason, .. } => return Err(Error::Invariant(reason)),
    };
    Ok(FourfoldRow {
        locus: "A4_sm".into(),
        gauss_degree: cc.components()[0].gauss_degree().to_string(),
        cc_degree: cc.degree().to_string(),
        representation: fundamental_label(1),
        group,
        note: None,
    })
}

/// Jacobian of a nonhyperelliptic genus-four curve: `Alt³` of the standard
/// representation of `Sl_6`. The Gauss map of the theta divisor has degree
/// `C(2g−2, g−1)`.
fn nonhyperelliptic_row() -> Result<FourfoldRow> {
    let rs = RootSystem::new(DynkinType::new(Family::A, 2 * G - 3)?);
    let w = Weight::fundamental(2 * G - 3, G - 1);
    Ok(FourfoldRow {
        locus: "J4_nh".into(),
        gauss_degree: construction_degree(G, 2 * G as u64 - 2, false).to_string(),
        cc_degree: rs.weyl_dim(&w)?.to_string(),
        representation: fundamental_label(G - 1),
        group: group_label(&rs, &w),
        note: None,
    })
}

/// Jacobian of a hyperelliptic genus-four curve: `Alt³(C⁶)/C⁶` for `Sp_6`.
/// The Gauss map has degree `2^{g−1}`, and the characteristic cycle picks up
/// the conormal varieties of the singular locus as well.
fn hyperelliptic_row() -> Result<FourfoldRow> {
    let n = G - 1;
    let rs = RootSystem::new(DynkinType::new(Family::C, n)?);
    let std_w = Weight::fundamental(n, 1);
    let alt = char_alt(n as u32, &freudenthal_character(&rs, &std_w)?)?;
    let parts: Vec<_> = decompose(&rs, &alt)?.into_iter().filter(|(w, _)| *w != std_w).collect();
    let [(ref top, 1)] = parts[..] else {
        return Err(Error::Invariant(format!("Alt^{n} of the standard representation minus it is not irreducible")));
    };
    let label = top
        .0
        .iter()
        .position(|&c| c == 1)
        .filter(|_| top.0.iter().sum::<i64>() == 1)
        .map(|i| fundamental_label(i + 1))
        .unwrap_or_else(|| top.label());
    let row = TableRow::of(rs.ty(), top).map(|r| r.group()).unwrap_or_else(|| group_label(&rs, top));
    Ok(FourfoldRow {
        locus: "J4_h".into(),
        gauss_degree: BigInt::from(1u64 << (G - 1)).to_string(),
        cc_degree: rs.weyl_dim(top)?.to_string(),
        representation: label,
        group: row,
        note: None,
    })
}

fn thetanull_degrees(k: u64) -> Result<(BigInt, BigInt)> {
    let cc = cc_odp(&PpavInput::new(G, k))?;
    Ok((cc.components()[0].gauss_degree(), cc.degree()))
}

/// Concrete thetanull row for `k` vanishing thetanulls. For `k = 2` the group
/// is only determined when the Gauss map is finite, which is assumed here.
pub fn thetanull_row(k: u64) -> Result<FourfoldRow> {
    let finite = k == 2;
    let p = PpavInput::new(G, k).with_gauss_finite(finite);
    let (gauss, deg) = thetanull_degrees(k)?;
    let group = match theta_group(&p)? {
        ThetaGroupVerdict::Determined { label, .. } => label,
        ThetaGroupVerdict::Undetermined { dimension, .. } => format!("undetermined ({dimension})"),
    };
    Ok(FourfoldRow {
        locus: format!("Theta_null^{k}"),
        gauss_degree: gauss.to_string(),
        cc_degree: deg.to_string(),
        representation: fundamental_label(1),
        group,
        note: finite.then(|| "assuming the Gauss map is finite".into()),
    })
}

fn thetanull_symbolic_row() -> Result<FourfoldRow> {
    let (g0, d0) = thetanull_degrees(0)?;
    let (g1, d1) = thetanull_degrees(1)?;
    let cc = linear_in_k(&d0, &d1);
    // Every k in 1..=10 must give the standard symplectic group.
    for k in 1..=10 {
        let row = thetanull_row(k)?;
        let (_, d) = thetanull_degrees(k)?;
        if row.group != format!("Sp_{d}") {
            return Err(Error::Invariant(format!("k = {k}: expected Sp_{d}, found {}", row.group)));
        }
    }
    Ok(FourfoldRow {
        locus: "Theta_null^k".into(),
        gauss_degree: linear_in_k(&g0, &g1),
        cc_degree: cc.clone(),
        representation: fundamental_label(1),
        group: format!("Sp_{{{cc}}}"),
        note: Some("1 <= k <= 10; assuming the Gauss map is finite if k = 2".into()),
    })
}

/// The four rows of the fourfold table, each recomputed: the smooth row from
/// the characteristic cycle, the Jacobian rows from Weyl dimensions and
/// characters, and the thetanull row from the degrees at `k = 0, 1`.
pub fn fourfold_table() -> Result<Vec<FourfoldRow>> {
    Ok(vec![smooth_row()?, nonhyperelliptic_row()?, hyperelliptic_row()?, thetanull_symbolic_row()?])
}

/// The table with one concrete row per number of vanishing thetanulls.
pub fn fourfold_table_expanded() -> Result<Vec<FourfoldRow>> {
    let mut rows = vec![smooth_row()?, nonhyperelliptic_row()?, hyperelliptic_row()?];
    for k in 1..=10 {
        rows.push(thetanull_row(k)?);
    }
    Ok(rows)
}

/// Checks `[e]₊ target = S(candidates)` exactly in the group ring.
pub fn verify_inverse_galois(
    target: &GroupRingElement,
    s: &TensorConstruction,
    e: i64,
    candidates: &[GroupRingElement],
) -> Result<bool> {
    if e == 0 {
        return Err(Error::Precondition("e must be nonzero".into()));
    }
    for c in candidates {
        target.check_group(c)?;
    }
    let lhs = gr_adams(e, target);
    let rhs = eval_construction(s, candidates)?;
    Ok(lhs == rhs)
}
