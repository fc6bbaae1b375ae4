//! Minuscule, quasi-minuscule and weight-multiplicity-free irreducibles.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::character::{
    dominant_multiplicities, dominant_weight_set, dominant_weights, fs_type, fs_type_with, self_dual, FsType,
};
use super::root_system::{DynkinType, Family, RootSystem, Weight};
use crate::error::Result;
use crate::num::binomial;

/// The weights of `V_λ` form a single Weyl orbit.
pub fn is_minuscule(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    Ok(dominant_weights(rs, lambda)?.len() == 1)
}

/// The nonzero weights of `V_λ` form a single Weyl orbit.
pub fn is_quasi_minuscule(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    let dom = dominant_weights(rs, lambda)?;
    Ok(dom.iter().all(|w| w == lambda || w.is_zero()))
}

/// Every weight of `V_λ` has multiplicity at most one.
///
/// Each dominant `μ ≤ λ` occurs with multiplicity at least one, so
/// `dim V_λ ≥ Σ |W·μ|` with equality exactly in the multiplicity-free case.
pub fn is_wmf(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    Ok(wmf_from_set(rs, lambda, &dominant_weight_set(rs, lambda)?))
}

fn wmf_from_set(rs: &RootSystem, lambda: &Weight, dominant: &HashSet<Weight>) -> bool {
    let orbits: BigInt = dominant.iter().map(|mu| rs.orbit_size(mu)).sum();
    orbits == rs.weyl_dim_unchecked(lambda)
}

/// [`is_wmf`] by running Freudenthal's recursion until a multiplicity exceeds one.
pub fn is_wmf_by_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    Ok(dominant_multiplicities(rs, lambda, Some(1))?.iter().all(|&(_, m)| m <= 1))
}

/// Order of the kernel of the simply connected group acting on `V_λ`: the
/// centre `P^∨/Q^∨` has order `det C`, and the part acting trivially has index
/// equal to the order of `λ` modulo the root lattice.
pub fn kernel_order(rs: &RootSystem, lambda: &Weight) -> u64 {
    rs.cartan_det() as u64 / rs.order_mod_root_lattice(lambda)
}

/// Image of the simply connected group, named as in the usual tables.
pub fn group_label(rs: &RootSystem, lambda: &Weight) -> String {
    let ty = rs.ty();
    let n = ty.rank;
    let kernel = kernel_order(rs, lambda);
    match ty.family {
        Family::A if kernel == 1 => format!("Sl_{}", n + 1),
        Family::A => format!("Sl_{}/μ_{}", n + 1, kernel),
        Family::B if kernel == 1 => format!("Spin_{}", 2 * n + 1),
        Family::B => format!("SO_{}", 2 * n + 1),
        Family::C if kernel == 1 => format!("Sp_{}", 2 * n),
        Family::C => format!("PSp_{}", 2 * n),
        Family::D => {
            // The class of ϖ₁ in P/Q is the one killed by SO; the half-spin classes
            // keep the spin notation even when a μ₂ acts trivially.
            let vector_class = rs.order_mod_root_lattice(&lambda.sub(&Weight::fundamental(n, 1))) == 1;
            match kernel {
                1 => format!("Spin_{}", 2 * n),
                2 if vector_class => format!("SO_{}", 2 * n),
                2 => format!("Spin_{}", 2 * n),
                _ => format!("PSO_{}", 2 * n),
            }
        }
        Family::E if kernel == 1 => format!("E{n}"),
        Family::E => format!("E{n}/μ_{kernel}"),
        Family::F => "F4".into(),
        Family::G => "G2".into(),
    }
}

/// One weight-multiplicity-free irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WmfEntry {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    pub highest_weight: Weight,
    pub label: String,
    #[serde(with = "crate::num::serde_bigint")]
    pub dim: BigInt,
    pub minuscule: bool,
    pub quasi_minuscule: bool,
    pub self_dual: bool,
    pub fs_type: FsType,
    pub kernel_order: u64,
    pub group: String,
}

impl WmfEntry {
    /// Record for a highest weight already known to be weight multiplicity free.
    fn describe_wmf(rs: &RootSystem, lambda: &Weight, dominant: &HashSet<Weight>) -> Result<WmfEntry> {
        let dual = self_dual(rs, lambda)?;
        let fs = if dual {
            let ones: Vec<(Weight, u64)> = dominant.iter().map(|w| (w.clone(), 1)).collect();
            fs_type_with(rs, &ones)?
        } else {
            FsType::None
        };
        Ok(WmfEntry {
            ty: rs.ty(),
            highest_weight: lambda.clone(),
            label: lambda.label(),
            dim: rs.weyl_dim(lambda)?,
            minuscule: dominant.len() == 1,
            quasi_minuscule: dominant.iter().all(|w| w == lambda || w.is_zero()),
            self_dual: dual,
            fs_type: fs,
            kernel_order: kernel_order(rs, lambda),
            group: group_label(rs, lambda),
        })
    }

    pub fn describe(rs: &RootSystem, lambda: &Weight) -> Result<WmfEntry> {
        Ok(WmfEntry {
            ty: rs.ty(),
            highest_weight: lambda.clone(),
            label: lambda.label(),
            dim: rs.weyl_dim(lambda)?,
            minuscule: is_minuscule(rs, lambda)?,
            quasi_minuscule: is_quasi_minuscule(rs, lambda)?,
            self_dual: self_dual(rs, lambda)?,
            fs_type: fs_type(rs, lambda)?,
            kernel_order: kernel_order(rs, lambda),
            group: group_label(rs, lambda),
        })
    }
}

/// Nonzero dominant weights with `weyl_dim ≤ max_dim`.
///
/// Adding a fundamental weight strictly increases the Weyl dimension, so a
/// depth-first search over multisets of fundamental weights can be cut as soon
/// as the bound is exceeded.
pub fn dominant_weights_up_to_dim(rs: &RootSystem, max_dim: u64) -> Vec<Weight> {
    let bound = BigInt::from(max_dim);
    let n = rs.rank();
    let mut out = Vec::new();
    let mut stack = vec![(Weight::zero(n), 0usize)];
    while let Some((w, first)) = stack.pop() {
        for j in first..n {
            let mut next = w.clone();
            next.0[j] += 1;
            if rs.weyl_dim_unchecked(&next) <= bound {
                out.push(next.clone());
                stack.push((next, j));
            }
        }
    }
    out.sort();
    out
}

/// All nontrivial weight-multiplicity-free irreducibles of dimension at most
/// `max_dim`, over every simple type of rank at most `max_rank`.
pub fn classify_wmf(max_rank: usize, max_dim: u64) -> Result<Vec<WmfEntry>> {
    classify_types(&DynkinType::all_up_to(max_rank), max_dim)
}

/// [`classify_wmf`] over an explicit list of types; output follows the list order.
pub fn classify_types(types: &[DynkinType], max_dim: u64) -> Result<Vec<WmfEntry>> {
    let per_type: Vec<Result<Vec<WmfEntry>>> = types
        .par_iter()
        .map(|&ty| {
            let rs = RootSystem::new(ty);
            let found: Vec<Option<WmfEntry>> = dominant_weights_up_to_dim(&rs, max_dim)
                .par_iter()
                .map(|lambda| {
                    let dominant = dominant_weight_set(&rs, lambda)?;
                    if wmf_from_set(&rs, lambda, &dominant) {
                        WmfEntry::describe_wmf(&rs, lambda, &dominant).map(Some)
                    } else {
                        Ok(None)
                    }
                })
                .collect::<Result<_>>()?;
            Ok(found.into_iter().flatten().collect())
        })
        .collect();
    let mut out = Vec::new();
    for part in per_type {
        out.extend(part?);
    }
    Ok(out)
}

/// Quasi-minuscule irreducibles of dimension exactly `dim`, over all types of
/// rank at most `max_rank`.
pub fn quasi_minuscule_dim_search(dim: u64, max_rank: usize) -> Result<Vec<(DynkinType, Weight)>> {
    let types = DynkinType::all_up_to(max_rank);
    let per_type: Vec<Result<Vec<(DynkinType, Weight)>>> = types
        .par_iter()
        .map(|&ty| {
            let rs = RootSystem::new(ty);
            let target = BigInt::from(dim);
            let mut found = Vec::new();
            for lambda in dominant_weights_up_to_dim(&rs, dim) {
                if rs.weyl_dim_unchecked(&lambda) == target && is_quasi_minuscule(&rs, &lambda)? {
                    found.push((ty, lambda));
                }
            }
            Ok(found)
        })
        .collect();
    let mut out = Vec::new();
    for part in per_type {
        out.extend(part?);
    }
    Ok(out)
}

/// A nonzero weight has a Weyl orbit with at least `rank` elements.
pub fn orbit_rank_bound(rs: &RootSystem, w: &Weight) -> bool {
    w.is_zero() || rs.orbit_size_at_least(w, rs.rank())
}

/// Some weight of `V_λ` is a nonzero rational multiple of a root.
///
/// Both sets are Weyl-stable, so it suffices to compare nonzero dominant weights
/// with positive multiples of the dominant roots.
pub fn root_multiple_condition(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    let dominant_roots: Vec<&Weight> = rs.positive_roots_weights().iter().filter(|r| r.is_dominant()).collect();
    let weights = dominant_weights(rs, lambda)?;
    Ok(weights.iter().filter(|w| !w.is_zero()).any(|w| dominant_roots.iter().any(|r| positively_proportional(w, r))))
}

fn positively_proportional(x: &Weight, y: &Weight) -> bool {
    let n = x.0.len();
    (0..n).all(|i| (0..n).all(|j| i128::from(x.0[i]) * i128::from(y.0[j]) == i128::from(x.0[j]) * i128::from(y.0[i])))
        && x.0.iter().zip(&y.0).all(|(a, b)| a.signum() == b.signum())
}

/// Columns of the two tables of weight-multiplicity-free representations.
/// The first seven are the minuscule ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "row", rename_all = "snake_case")]
pub enum TableRow {
    /// `Alt^k(C^n)` for `Sl_n`, `1 ≤ k < n`.
    SlExterior {
        n: u64,
        k: u64,
    },
    /// Spin representation of `Spin_{2n+1}`.
    SpinOdd {
        n: u64,
    },
    /// Standard representation of `Sp_{2n}`.
    SpStandard {
        n: u64,
    },
    /// Standard representation of `SO_{2n}`.
    SoEvenStandard {
        n: u64,
    },
    /// Half-spin representation of `Spin_{2n}`.
    HalfSpin {
        n: u64,
    },
    E6,
    E7,
    /// `Sym^k(C^n)` for `Sl_n`, `k > 1`.
    SlSymmetric {
        n: u64,
        k: u64,
    },
    /// Standard representation of `SO_{2n+1}`.
    SoOddStandard {
        n: u64,
    },
    /// The 14-dimensional third fundamental representation of `Sp_6`.
    Sp6Third,
    /// The 7-dimensional representation of `G_2`.
    G2Seven,
}

impl TableRow {
    pub fn is_minuscule_row(&self) -> bool {
        !matches!(
            self,
            TableRow::SlSymmetric { .. } | TableRow::SoOddStandard { .. } | TableRow::Sp6Third | TableRow::G2Seven
        )
    }

    /// Dimension by the closed formula of the row.
    pub fn dim(&self) -> BigInt {
        let two = BigInt::from(2);
        match *self {
            TableRow::SlExterior { n, k } => binomial(n, k),
            TableRow::SpinOdd { n } => two.pow(n as u32),
            TableRow::SpStandard { n } | TableRow::SoEvenStandard { n } => BigInt::from(2 * n),
            TableRow::HalfSpin { n } => two.pow(n as u32 - 1),
            TableRow::E6 => BigInt::from(27),
            TableRow::E7 => BigInt::from(56),
            TableRow::SlSymmetric { n, k } => binomial(n + k - 1, k),
            TableRow::SoOddStandard { n } => BigInt::from(2 * n + 1),
            TableRow::Sp6Third => BigInt::from(14),
            TableRow::G2Seven => BigInt::from(7),
        }
    }

    /// Symplectic/orthogonal verdict exactly as the tables state it.
    pub fn tabulated_fs(&self) -> FsType {
        use FsType::*;
        match *self {
            TableRow::SlExterior { n, k } if n == 2 * k => {
                if n % 4 == 0 {
                    Orthogonal
                } else {
                    Symplectic
                }
            }
            TableRow::SlExterior { .. } => None,
            TableRow::SpinOdd { n } => match n % 4 {
                1 | 2 => Symplectic,
                _ => Orthogonal,
            },
            TableRow::SpStandard { .. } => Symplectic,
            TableRow::SoEvenStandard { .. } => Orthogonal,
            TableRow::HalfSpin { n } => match n % 4 {
                2 => Symplectic,
                0 => Orthogonal,
                _ => None,
            },
            TableRow::E6 => None,
            TableRow::E7 => Symplectic,
            TableRow::SlSymmetric { .. } => None,
            TableRow::SoOddStandard { .. } => Orthogonal,
            TableRow::Sp6Third => Symplectic,
            TableRow::G2Seven => Orthogonal,
        }
    }

    /// The tabulated verdict, except that `Sym^k(C^2)` is self-dual: symplectic
    /// for odd `k` and orthogonal for even `k`. The tables print "no" for every
    /// symmetric power, which only holds for `n ≥ 3`.
    pub fn corrected_fs(&self) -> FsType {
        match *self {
            TableRow::SlSymmetric { n: 2, k } if k % 2 == 1 => FsType::Symplectic,
            TableRow::SlSymmetric { n: 2, .. } => FsType::Orthogonal,
            _ => self.tabulated_fs(),
        }
    }

    /// Image group as written in the tables.
    pub fn group(&self) -> String {
        match *self {
            TableRow::SlExterior { n, k } | TableRow::SlSymmetric { n, k } => {
                let d = num_integer::gcd(n, k);
                if d == 1 {
                    format!("Sl_{n}")
                } else {
                    format!("Sl_{n}/μ_{d}")
                }
            }
            TableRow::SpinOdd { n } => format!("Spin_{}", 2 * n + 1),
            TableRow::SpStandard { n } => format!("Sp_{}", 2 * n),
            TableRow::SoEvenStandard { n } => format!("SO_{}", 2 * n),
            TableRow::HalfSpin { n } => format!("Spin_{}", 2 * n),
            TableRow::E6 => "E6".into(),
            TableRow::E7 => "E7".into(),
            TableRow::SoOddStandard { n } => format!("SO_{}", 2 * n + 1),
            TableRow::Sp6Third => "Sp_6".into(),
            TableRow::G2Seven => "G2".into(),
        }
    }

    /// The table row a highest weight belongs to, if any.
    pub fn of(ty: DynkinType, lambda: &Weight) -> Option<TableRow> {
        let n = ty.rank;
        let c = &lambda.0;
        let support: Vec<usize> = (0..n).filter(|&i| c[i] != 0).collect();
        let [i] = support[..] else { return None };
        let (i1, a) = (i + 1, c[i] as u64);
        let nn = n as u64;
        match (ty.family, i1, a) {
            (Family::A, _, 1) => Some(TableRow::SlExterior { n: nn + 1, k: i1 as u64 }),
            (Family::A, 1, k) => Some(TableRow::SlSymmetric { n: nn + 1, k }),
            (Family::A, j, k) if j == n => Some(TableRow::SlSymmetric { n: nn + 1, k }),
            (Family::B, 1, 1) => Some(TableRow::SoOddStandard { n: nn }),
            (Family::B, j, 1) if j == n => Some(TableRow::SpinOdd { n: nn }),
            (Family::C, 1, 1) => Some(TableRow::SpStandard { n: nn }),
            (Family::C, 3, 1) if n == 3 => Some(TableRow::Sp6Third),
            (Family::D, 1, 1) => Some(TableRow::SoEvenStandard { n: nn }),
            (Family::D, j, 1) if j + 1 >= n => Some(TableRow::HalfSpin { n: nn }),
            (Family::E, 1 | 6, 1) if n == 6 => Some(TableRow::E6),
            (Family::E, 7, 1) if n == 7 => Some(TableRow::E7),
            (Family::G, 1, 1) => Some(TableRow::G2Seven),
            _ => None,
        }
    }

    /// Every highest weight covered by the tables for the given types, with
    /// row dimension at most `max_dim`, computed from the row formulas alone.
    pub fn instances(types: &[DynkinType], max_dim: u64) -> Vec<(DynkinType, Weight, TableRow)> {
        let bound = BigInt::from(max_dim);
        let mut out = Vec::new();
        for &ty in types {
            let n = ty.rank;
            let mut push = |idx: usize, coeff: i64| {
                let mut w = Weight::zero(n);
                w.0[idx - 1] = coeff;
                let row = TableRow::of(ty, &w).expect("tabulated weight");
                if row.dim() <= bound {
                    out.push((ty, w, row));
                }
            };
            match ty.family {
                Family::A => {
                    (1..=n).for_each(|j| push(j, 1));
                    let mut k = 2u64;
                    while binomial(n as u64 + k, k) <= bound {
                        push(1, k as i64);
                        if n > 1 {
                            push(n, k as i64);
                        }
                        k += 1;
                    }
                }
                Family::B => {
                    push(1, 1);
                    push(n, 1);
                }
                Family::C => {
                    push(1, 1);
                    if n == 3 {
                        push(3, 1);
                    }
                }
                Family::D => {
                    push(1, 1);
                    push(n - 1, 1);
                    push(n, 1);
                }
                Family::E if n == 6 => {
                    push(1, 1);
                    push(6, 1);
                }
                Family::E if n == 7 => push(7, 1),
                Family::G => push(1, 1),
                _ => {}
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TableRow::SlExterior { n, k } => write!(f, "Alt^{k}(C^{n})"),
            TableRow::SlSymmetric { n, k } => write!(f, "Sym^{k}(C^{n})"),
            TableRow::SpinOdd { n } => write!(f, "spin of B{n}"),
            TableRow::HalfSpin { n } => write!(f, "half-spin of D{n}"),
            _ => f.write_str(&self.group()),
        }
    }
}

/// The symplectic minuscule and orthogonal weight-multiplicity-free dimensions
/// found in a classification, leaving out the standard representations of the
/// classical groups.
///
/// `A1` with highest weight `kϖ₁`, `k ≥ 2`, is `SO_3` for `k = 2` and otherwise
/// a symmetric power of the standard representation of `Sl_2 = Sp_2`; both count
/// as standard here.
pub fn exceptional_dims(entries: &[WmfEntry]) -> (Vec<u64>, Vec<u64>) {
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for e in entries {
        let standard = matches!(
            (e.ty.family, TableRow::of(e.ty, &e.highest_weight)),
            (Family::A, Some(TableRow::SlSymmetric { n: 2, .. }))
                | (
                    _,
                    Some(
                        TableRow::SpStandard { .. } | TableRow::SoEvenStandard { .. } | TableRow::SoOddStandard { .. }
                    )
                )
        );
        if standard {
            continue;
        }
        let dim = e.dim.to_u64().expect("bounded dimension");
        match e.fs_type {
            FsType::Symplectic if e.minuscule => minus.push(dim),
            FsType::Orthogonal => plus.push(dim),
            _ => {}
        }
    }
    for v in [&mut minus, &mut plus] {
        v.sort_unstable();
        v.dedup();
    }
    (minus, plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn adjoint_of_a2_is_quasi_minuscule_only() {
        let a2 = rs("A2");
        let adj = w(&[1, 1]);
        assert!(is_quasi_minuscule(&a2, &adj).unwrap());
        assert!(!is_minuscule(&a2, &adj).unwrap());
        assert!(!is_wmf(&a2, &adj).unwrap());
    }

    #[test]
    fn wmf_tests_agree() {
        for name in ["A1", "A2", "A3", "B3", "C3", "D4", "G2"] {
            let r = rs(name);
            for lambda in dominant_weights_up_to_dim(&r, 200) {
                assert_eq!(
                    is_wmf(&r, &lambda).unwrap(),
                    is_wmf_by_multiplicities(&r, &lambda).unwrap(),
                    "{name} {lambda}"
                );
            }
        }
    }

    #[test]
    fn g2_seven() {
        let g2 = rs("G2");
        assert!(is_quasi_minuscule(&g2, &w(&[1, 0])).unwrap());
        assert!(is_wmf(&g2, &w(&[1, 0])).unwrap());
        assert_eq!(fs_type(&g2, &w(&[1, 0])).unwrap(), FsType::Orthogonal);
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(fs_type(&rs("C4"), &Weight::fundamental(4, 1)).unwrap(), FsType::Symplectic);
        assert_eq!(fs_type(&rs("B5"), &Weight::fundamental(5, 5)).unwrap(), FsType::Symplectic);
        assert_eq!(fs_type(&rs("A5"), &Weight::fundamental(5, 3)).unwrap(), FsType::Symplectic);
    }

    #[test]
    fn group_labels() {
        assert_eq!(group_label(&rs("A5"), &Weight::fundamental(5, 3)), "Sl_6/μ_3");
        assert_eq!(group_label(&rs("A5"), &Weight::fundamental(5, 1)), "Sl_6");
        assert_eq!(group_label(&rs("B4"), &Weight::fundamental(4, 1)), "SO_9");
        assert_eq!(group_label(&rs("B4"), &Weight::fundamental(4, 4)), "Spin_9");
        assert_eq!(group_label(&rs("C3"), &Weight::fundamental(3, 3)), "Sp_6");
        assert_eq!(group_label(&rs("D5"), &Weight::fundamental(5, 1)), "SO_10");
        assert_eq!(group_label(&rs("D6"), &Weight::fundamental(6, 6)), "Spin_12");
        assert_eq!(group_label(&rs("E6"), &Weight::fundamental(6, 1)), "E6");
        assert_eq!(group_label(&rs("E7"), &Weight::fundamental(7, 7)), "E7");
        assert_eq!(kernel_order(&rs("D6"), &Weight::fundamental(6, 6)), 2);
    }

    #[test]
    fn root_multiples() {
        assert!(root_multiple_condition(&rs("C4"), &Weight::fundamental(4, 1)).unwrap());
        assert!(!root_multiple_condition(&rs("A3"), &Weight::fundamental(3, 1)).unwrap());
        assert!(root_multiple_condition(&rs("B3"), &Weight::fundamental(3, 1)).unwrap());
    }

    #[test]
    fn orbit_bound_small() {
        let a1 = rs("A1");
        assert!(orbit_rank_bound(&a1, &w(&[0])));
        assert!(orbit_rank_bound(&a1, &w(&[3])));
        let e8 = rs("E8");
        assert!(orbit_rank_bound(&e8, &Weight::fundamental(8, 8)));
    }

    #[test]
    fn enumeration_by_dimension() {
        let a2 = rs("A2");
        let ws = dominant_weights_up_to_dim(&a2, 8);
        // 3, 3*, 6, 6*, 8
        assert_eq!(ws.len(), 5);
    }

    #[test]
    fn small_classification_matches_tables() {
        let entries = classify_wmf(4, 60).unwrap();
        for e in &entries {
            let row = TableRow::of(e.ty, &e.highest_weight).unwrap_or_else(|| panic!("untabulated {e:?}"));
            assert_eq!(row.dim(), e.dim);
            assert_eq!(row.is_minuscule_row(), e.minuscule);
            assert_eq!(row.corrected_fs(), e.fs_type, "{} {}", e.ty, e.label);
        }
        let expected = TableRow::instances(&DynkinType::all_up_to(4), 60);
        assert_eq!(expected.len(), entries.len());
    }
}
