//! Theta divisors with ordinary double points: characteristic cycles and groups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::ChowVector;
use crate::cycles::{essentially_multiplicity_free_exact, CleanCycleModel, CycleComponent};
use crate::error::{Error, Result};
use crate::lambda::{FgAbelianGroup, GroupRingElement};
use crate::liere::{classify_wmf, exceptional_dims, DynkinType, Family, FsType, TableRow, Weight};
use crate::num::{binomial, factorial, rat_int};

use super::fake_jacobian::{fake_jacobian_solve, FakeJacobianSolution};

/// A ppav whose theta divisor is smooth away from `k` ordinary double points,
/// together with the geometric hypotheses that cannot be computed here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PpavInput {
    pub g: usize,
    pub k: u64,
    #[serde(default = "yes")]
    pub symmetric: bool,
    /// `e_1 + … + e_k = 0`. Only used for odd `g`.
    #[serde(default = "yes")]
    pub double_points_sum_zero: bool,
    /// No two double points differ by a torsion point. Only used for odd `g`.
    #[serde(default = "yes")]
    pub pairwise_torsion_independent: bool,
    #[serde(default = "yes")]
    pub stabilizer_trivial: bool,
    /// The projectivized Gauss map of the theta divisor is finite.
    #[serde(default)]
    pub gauss_finite: bool,
}

fn yes() -> bool {
    true
}

impl PpavInput {
    /// Symmetric, trivial stabilizer, double points summing to zero and
    /// torsion independent, Gauss map not assumed finite.
    pub fn new(g: usize, k: u64) -> Self {
        PpavInput {
            g,
            k,
            symmetric: true,
            double_points_sum_zero: true,
            pairwise_torsion_independent: true,
            stabilizer_trivial: true,
            gauss_finite: false,
        }
    }

    pub fn with_sum_zero(mut self, v: bool) -> Self {
        self.double_points_sum_zero = v;
        self
    }

    pub fn with_torsion_independent(mut self, v: bool) -> Self {
        self.pairwise_torsion_independent = v;
        self
    }

    pub fn with_stabilizer_trivial(mut self, v: bool) -> Self {
        self.stabilizer_trivial = v;
        self
    }

    pub fn with_gauss_finite(mut self, v: bool) -> Self {
        self.gauss_finite = v;
        self
    }

    /// Degree `g! − 2k` of the classical Gauss map.
    pub fn gauss_degree(&self) -> BigInt {
        factorial(self.g as u64) - BigInt::from(2 * self.k)
    }

    /// Degree of the characteristic cycle: the Gauss degree, plus one for each
    /// double point when `g` is odd.
    pub fn cc_degree(&self) -> BigInt {
        let points = if self.g % 2 == 1 { self.k } else { 0 };
        self.gauss_degree() + BigInt::from(points)
    }
}

/// Chern–Mather vector of a divisor `Z` with Gauss degree `deg` and singular
/// locus of dimension `sing_dim`: `c_i = [Z]^{g−i} = (g−i)!·μ_i` for `i > sing_dim`.
///
/// Entries `1..=sing_dim` are not determined by this rule and are left zero.
pub fn divisor_cm(g: usize, deg: BigInt, sing_dim: Option<usize>) -> ChowVector {
    let mut v = ChowVector::point(g, rat_int(deg));
    let first = sing_dim.map_or(1, |s| s + 1).max(1);
    for i in first..g {
        v.set(i, rat_int(factorial((g - i) as u64)));
    }
    v
}

/// Clean characteristic cycle of the theta divisor.
///
/// One divisor component of Gauss degree `g! − 2k`; for odd `g` also one point
/// component per double point. The fiber over a very general covector is
/// synthesized from the flags inside `ℤ² ⊕ torsion`:
///
/// * the divisor contributes the distinct free points `i·a`, `i = 1..deg`, and
///   when the stabilizer is nontrivial they come in pairs `x, x + s` with `s`
///   of order two;
/// * torsion-independent double points sit at distinct multiples of a second
///   free generator `b`, the last one adjusted to make the sum vanish when
///   asked; otherwise they are distinct elements of order four in `(ℤ/4)^k`.
pub fn cc_odp(p: &PpavInput) -> Result<CleanCycleModel> {
    if p.g < 2 {
        return Err(Error::Precondition(format!("g = {} but a theta divisor needs g ≥ 2", p.g)));
    }
    let deg = p.gauss_degree();
    if deg <= BigInt::zero() {
        return Err(Error::Precondition(format!("Gauss degree g! - 2k = {deg} must be positive")));
    }
    let g = p.g;
    let divisor = CycleComponent::new("Theta", g - 1, 1, divisor_cm(g, deg.clone(), Some(0)), p.gauss_finite)?;
    let mut components = vec![divisor];
    let odd = g % 2 == 1;
    if odd {
        for i in 1..=p.k {
            components.push(CycleComponent::point(format!("e{i}"), g, 1));
        }
    }
    let fiber = synthesize_fiber(p, deg.to_i64().ok_or_else(|| Error::Precondition("Gauss degree too large".into()))?)?;
    CleanCycleModel::new(g, components, Some(fiber))
}

fn synthesize_fiber(p: &PpavInput, deg: i64) -> Result<GroupRingElement> {
    let odd = p.g % 2 == 1;
    let torsion_points = odd && !p.pairwise_torsion_independent && p.k > 0;
    let mut torsion = Vec::new();
    if !p.stabilizer_trivial {
        torsion.push(2);
    }
    let point_offset = 2 + torsion.len();
    if torsion_points {
        torsion.extend(std::iter::repeat_n(4, p.k as usize));
    }
    let group = FgAbelianGroup::new(2, torsion)?;
    let width = group.width();
    let mut support: Vec<Vec<i64>> = Vec::new();
    let free_point = |a: i64, b: i64| {
        let mut v = vec![0i64; width];
        v[0] = a;
        v[1] = b;
        v
    };
    if p.stabilizer_trivial {
        support.extend((1..=deg).map(|i| free_point(i, 0)));
    } else {
        for i in 1..=deg / 2 {
            support.push(free_point(i, 0));
            let mut shifted = free_point(i, 0);
            shifted[2] = 1;
            support.push(shifted);
        }
    }
    if odd && p.k > 0 {
        let k = p.k as i64;
        if torsion_points {
            for i in 0..k as usize {
                let mut v = vec![0i64; width];
                if p.double_points_sum_zero && i + 1 == k as usize {
                    for j in 0..i {
                        v[point_offset + j] = -1;
                    }
                } else {
                    v[point_offset + i] = 1;
                }
                support.push(v);
            }
        } else {
            for i in 1..=k {
                let b = if p.double_points_sum_zero && i == k { -(k - 1) * k / 2 } else { i };
                support.push(free_point(0, b));
            }
        }
    }
    GroupRingElement::from_support(&group, &support)
}

/// Families of image groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupFamily {
    Sp,
    SO,
    O,
    Sl,
    Spin,
    E6,
    E7,
    G2,
}

/// A classical or exceptional group named by family and size parameter, e.g. `Sp_22`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub family: GroupFamily,
    /// Dimension of the standard representation for `Sp`, `SO`, `O`, `Sl`, `Spin`.
    pub size: u64,
    /// Order of the central subgroup divided out, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<u64>,
}

impl GroupDescriptor {
    pub fn new(family: GroupFamily, size: u64) -> Result<Self> {
        let ok = match family {
            GroupFamily::Sp => size > 0 && size.is_multiple_of(2),
            GroupFamily::E6 => size == 27,
            GroupFamily::E7 => size == 56,
            GroupFamily::G2 => size == 7,
            _ => size > 0,
        };
        if !ok {
            return Err(Error::Invariant(format!("{family:?} with size {size}")));
        }
        Ok(GroupDescriptor { family, size, quotient: None })
    }

    /// Connected, unless the family is `O`.
    pub fn connected(&self) -> bool {
        self.family != GroupFamily::O
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::E6 | GroupFamily::E7 | GroupFamily::G2 => write!(f, "{:?}", self.family)?,
            fam => write!(f, "{fam:?}_{}", self.size)?,
        }
        if let Some(q) = self.quotient {
            write!(f, "/μ_{q}")?;
        }
        Ok(())
    }
}

/// Outcome of [`theta_group`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ThetaGroupVerdict {
    Determined {
        group: GroupDescriptor,
        label: String,
        dimension: u64,
        reason: String,
    },
    Undetermined {
        dimension: u64,
        reason: String,
        /// Exceptional highest weights of this dimension with the matching form.
        candidates: Vec<String>,
    },
}

impl ThetaGroupVerdict {
    pub fn group(&self) -> Option<&GroupDescriptor> {
        match self {
            ThetaGroupVerdict::Determined { group, .. } => Some(group),
            ThetaGroupVerdict::Undetermined { .. } => None,
        }
    }
}

/// `S₋` (symplectic minuscule) and `S₊` (orthogonal weight multiplicity free)
/// dimensions up to `bound`, from the closed formulas:
///
/// * `S₋ = {C(2n,n) : n odd} ∪ {2ⁿ : n ≡ 1,2 mod 4} ∪ {56}`
/// * `S₊ = {C(2n,n) : n even} ∪ {2ⁿ : n ≡ 0,3 mod 4} ∪ {7}`
///
/// with `n ≥ 1` throughout.
pub fn s_sets(bound: u64) -> (Vec<u64>, Vec<u64>) {
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    let cap = BigInt::from(bound);
    let mut n = 1u64;
    while binomial(2 * n, n) <= cap {
        let v = binomial(2 * n, n).to_u64().expect("bounded");
        if n % 2 == 1 {
            minus.push(v);
        } else {
            plus.push(v);
        }
        n += 1;
    }
    let mut n = 1u32;
    while n < 64 && (1u64 << n) <= bound {
        match n % 4 {
            1 | 2 => minus.push(1 << n),
            _ => plus.push(1 << n),
        }
        n += 1;
    }
    if 56 <= bound {
        minus.push(56);
    }
    if 7 <= bound {
        plus.push(7);
    }
    for v in [&mut minus, &mut plus] {
        v.sort_unstable();
        v.dedup();
    }
    (minus, plus)
}

/// The same two sets read off from a classification of weight-multiplicity-free
/// representations of dimension at most `bound` and rank at most `max_rank`.
pub fn s_sets_from_classification(bound: u64, max_rank: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    Ok(exceptional_dims(&classify_wmf(max_rank, bound)?))
}

/// Non-standard table entries of dimension `dim` with the given form.
///
/// Even `g` gives a symplectic representation and only minuscule candidates
/// matter; odd `g` gives an orthogonal one.
fn exceptional_candidates(dim: u64, symplectic: bool) -> Vec<(DynkinType, Weight, TableRow)> {
    // Non-standard entries of rank r have dimension at least C(r+1, 2).
    let mut max_rank = 8u64;
    while (max_rank + 2) * (max_rank + 1) / 2 <= dim {
        max_rank += 1;
    }
    let types = DynkinType::all_up_to(max_rank as usize);
    TableRow::instances(&types, dim)
        .into_iter()
        .filter(|(_, _, row)| row.dim() == BigInt::from(dim))
        .filter(|(_, _, row)| {
            !matches!(
                row,
                TableRow::SpStandard { .. }
                    | TableRow::SoEvenStandard { .. }
                    | TableRow::SoOddStandard { .. }
                    | TableRow::SlSymmetric { n: 2, .. }
            )
        })
        .filter(|(_, _, row)| {
            if symplectic {
                row.is_minuscule_row() && row.corrected_fs() == FsType::Symplectic
            } else {
                row.corrected_fs() == FsType::Orthogonal
            }
        })
        .collect()
}

/// Candidates whose image is the full symplectic or special orthogonal group
/// through an exceptional isomorphism: `Sl_2 = Sp_2`, `Spin_5 = Sp_4`,
/// `Sl_4/μ_2 = SO_6`, and the half-spin images of `Spin_8`, which triality
/// identifies with `SO_8`.
fn image_is_standard(ty: DynkinType, w: &Weight) -> bool {
    let fundamental = |i: usize| *w == Weight::fundamental(ty.rank, i);
    match (ty.family, ty.rank) {
        (Family::A, 1) => fundamental(1),
        (Family::B, 2) => fundamental(2),
        (Family::A, 3) => fundamental(2),
        (Family::D, 4) => fundamental(3) || fundamental(4),
        _ => false,
    }
}

/// The Tannaka group of `δ_Θ` for a theta divisor with ordinary double points.
///
/// Requires a symmetric theta divisor with trivial stabilizer, for odd `g` also
/// torsion-independent double points, so that the characteristic cycle stays
/// reduced under every `[n]₊`. The representation is then weight multiplicity
/// free of dimension `deg cc`, symplectic for even `g` and orthogonal for odd
/// `g`; it is the standard representation unless the dimension is exceptional.
///
/// Two refinements are applied. For `g = 4, k = 2` with a finite Gauss map the
/// only exceptional candidate `Alt³` of `Sl_6` is ruled out by the fake
/// Jacobian computation, leaving `Sp_20`. For `g = 5, k = 2` with dependent
/// double points, all nonzero weights must form one orbit, and no
/// quasi-minuscule representation has dimension 118.
pub fn theta_group(p: &PpavInput) -> Result<ThetaGroupVerdict> {
    if !p.symmetric {
        return Err(Error::MissingHypothesis("symmetric"));
    }
    let cc = cc_odp(p)?;
    let dim = cc.degree().to_u64().ok_or_else(|| Error::Precondition("degree too large".into()))?;
    let even = p.g.is_multiple_of(2);
    let undetermined = |reason: String, cands: &[(DynkinType, Weight, TableRow)]| ThetaGroupVerdict::Undetermined {
        dimension: dim,
        reason,
        candidates: cands.iter().map(|(t, w, r)| format!("{t} {} ({r})", w.label())).collect(),
    };
    if !p.stabilizer_trivial {
        return Ok(undetermined("the stabilizer of the theta divisor is not assumed trivial".into(), &[]));
    }
    let torsion_case = !even && p.k == 2 && p.g == 5 && !p.pairwise_torsion_independent;
    if !even && !p.pairwise_torsion_independent && !torsion_case {
        return Ok(undetermined("two double points differ by a torsion point; no rule covers this case".into(), &[]));
    }
    if !torsion_case && !essentially_multiplicity_free_exact(&cc)? {
        return Ok(undetermined("the characteristic cycle is not essentially multiplicity free".into(), &[]));
    }
    let family = if even {
        GroupFamily::Sp
    } else if p.double_points_sum_zero || p.k == 0 {
        GroupFamily::SO
    } else {
        GroupFamily::O
    };
    let group = GroupDescriptor::new(family, dim)?;
    let label = group.to_string();
    if torsion_case {
        return Ok(ThetaGroupVerdict::Determined {
            group,
            label,
            dimension: dim,
            reason: "orthogonal of dimension 118: the divisor orbit has size 116 so any further orbit has size \
                     at most two, below the rank; the representation would be quasi-minuscule, and none has \
                     dimension 118; the determinant is the class of e1 + e2"
                .into(),
        });
    }
    let (s_minus, s_plus) = s_sets(dim);
    let exceptional = if even { s_minus.contains(&dim) } else { s_plus.contains(&dim) };
    if !exceptional {
        return Ok(ThetaGroupVerdict::Determined {
            group,
            label,
            dimension: dim,
            reason: format!(
                "{} weight multiplicity free representation of dimension {dim} outside {}",
                if even { "symplectic" } else { "orthogonal" },
                if even { "S-" } else { "S+" }
            ),
        });
    }
    let cands = exceptional_candidates(dim, even);
    let open: Vec<_> = cands.iter().filter(|(t, w, _)| !image_is_standard(*t, w)).cloned().collect();
    if open.is_empty() {
        let reason = format!("dimension {dim} is exceptional but every candidate image is isomorphic to {label}");
        return Ok(ThetaGroupVerdict::Determined { group, label, dimension: dim, reason });
    }
    if p.g == 4 && p.k == 2 && p.gauss_finite {
        let target = cc_odp(p)?;
        let sol: FakeJacobianSolution = fake_jacobian_solve(4, &target, false)?;
        let c1 = sol.c1.as_ref().map(|c| c.coord(1).to_string()).unwrap_or_default();
        return Ok(ThetaGroupVerdict::Determined {
            group,
            label,
            dimension: dim,
            reason: format!(
                "the alternative Alt^3 of Sl_6 would give [3]_* cc = Alt^3(L) with c_0(L) = {} and c_1(L) = {c1}*mu_1; \
                 with a finite Gauss map L lives over a curve and the ppav would be a Jacobian",
                sol.c0
            ),
        });
    }
    Ok(undetermined(format!("dimension {dim} is exceptional"), &open))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{degree, essentially_multiplicity_free, reduced};

    #[test]
    fn degrees_of_odp_cycles() {
        assert_eq!(degree(&cc_odp(&PpavInput::new(4, 1)).unwrap()), BigInt::from(22));
        assert_eq!(degree(&cc_odp(&PpavInput::new(4, 0)).unwrap()), BigInt::from(24));
        let c = cc_odp(&PpavInput::new(5, 2)).unwrap();
        assert_eq!(degree(&c), BigInt::from(118));
        assert_eq!(c.components().len(), 3);
        assert_eq!(c.components()[0].gauss_degree(), BigInt::from(116));
        assert!(cc_odp(&PpavInput::new(3, 3)).is_err());
    }

    #[test]
    fn divisor_chern_mather() {
        let v = divisor_cm(5, BigInt::from(120), Some(0));
        assert_eq!(v, ChowVector::from_ints(5, &[120, 24, 6, 2, 1]).unwrap());
        assert_eq!(v.coord(1), ChowVector::theta_power(5, 4).unwrap().coord(1));
    }

    #[test]
    fn synthesized_fibers_follow_flags() {
        let good = cc_odp(&PpavInput::new(5, 2)).unwrap();
        assert!(reduced(&good));
        assert!(essentially_multiplicity_free_exact(&good).unwrap());
        let tors = cc_odp(&PpavInput::new(5, 2).with_torsion_independent(false)).unwrap();
        assert!(!essentially_multiplicity_free_exact(&tors).unwrap());
        assert!(!essentially_multiplicity_free(&tors, 4).unwrap());
        let stab = cc_odp(&PpavInput::new(4, 1).with_stabilizer_trivial(false)).unwrap();
        assert!(!essentially_multiplicity_free_exact(&stab).unwrap());
        for sum_zero in [true, false] {
            for indep in [true, false] {
                let p = PpavInput::new(5, 3).with_sum_zero(sum_zero).with_torsion_independent(indep);
                let c = cc_odp(&p).unwrap();
                let f = c.fiber().unwrap();
                let points: Vec<_> = f.support().filter(|e| e.coords()[0] == 0).cloned().collect();
                assert_eq!(points.len(), 3);
                let group = f.group();
                let sum = points.iter().fold(group.zero(), |a, b| group.add(&a, b));
                assert_eq!(sum == group.zero(), sum_zero, "sum_zero={sum_zero} indep={indep}");
            }
        }
    }

    #[test]
    fn s_set_formulas() {
        let (m, p) = s_sets(10000);
        assert_eq!(m, vec![2, 4, 20, 32, 56, 64, 252, 512, 1024, 3432, 8192]);
        assert_eq!(p, vec![6, 7, 8, 16, 70, 128, 256, 924, 2048, 4096]);
        let (m, p) = s_sets(5);
        assert_eq!(m, vec![2, 4]);
        assert!(p.is_empty());
    }

    #[test]
    fn groups_of_theta_divisors() {
        let label = |p: PpavInput| theta_group(&p).unwrap().group().map(ToString::to_string);
        assert_eq!(label(PpavInput::new(4, 1)).as_deref(), Some("Sp_22"));
        assert_eq!(label(PpavInput::new(4, 0)).as_deref(), Some("Sp_24"));
        assert_eq!(label(PpavInput::new(5, 2)).as_deref(), Some("SO_118"));
        assert_eq!(label(PpavInput::new(5, 2).with_sum_zero(false)).as_deref(), Some("O_118"));
        let dependent = PpavInput::new(5, 2).with_sum_zero(false).with_torsion_independent(false);
        assert_eq!(label(dependent).as_deref(), Some("O_118"));
        assert_eq!(label(PpavInput::new(4, 2)), None);
        assert_eq!(label(PpavInput::new(4, 2).with_gauss_finite(true)).as_deref(), Some("Sp_20"));
        assert_eq!(label(PpavInput::new(4, 10)).as_deref(), Some("Sp_4"));
        assert_eq!(label(PpavInput::new(3, 0)).as_deref(), Some("SO_6"));
        assert_eq!(label(PpavInput::new(5, 1).with_stabilizer_trivial(false)), None);
        let odd_dependent = PpavInput::new(5, 3).with_torsion_independent(false);
        assert_eq!(label(odd_dependent), None);
    }

    #[test]
    fn undetermined_lists_candidates() {
        // 120 - 50 = 70 = C(8,4), the middle exterior power of Sl_8.
        match theta_group(&PpavInput::new(5, 50)).unwrap() {
            ThetaGroupVerdict::Undetermined { dimension, candidates, .. } => {
                assert_eq!(dimension, 70);
                assert!(candidates.iter().any(|c| c.starts_with("A7 w4")), "{candidates:?}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn asymmetric_input_is_refused() {
        let mut p = PpavInput::new(4, 1);
        p.symmetric = false;
        assert_eq!(theta_group(&p), Err(Error::MissingHypothesis("symmetric")));
    }
}
