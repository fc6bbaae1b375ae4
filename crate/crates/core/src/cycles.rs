//! Clean conic Lagrangian cycles, modeled numerically.
//!
//! A [`CleanCycleModel`] is a formal sum of components. Each component records
//! the dimension of its base, an integer multiplicity, its Chern–Mather vector
//! (multiplicity not folded in) and whether its projectivized Gauss map is
//! finite. An optional group-ring fiber records the cycle over a very general
//! covector, which is where collisions under `[n]` become visible.
//!
//! Convolution and Schur functors only control Chern–Mather totals modulo
//! `CH_{>d}`. Their results are therefore returned as one *aggregate*
//! component carrying the totals, together with the index `valid_through`
//! up to which those totals are meaningful. No finer component decomposition
//! is invented.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::ChowVector;
use crate::error::{Error, Result};
use crate::lambda::{schur_apply, GroupRingElement, LambdaRing};
use crate::num::{is_integer, rat_int, serde_rational};
use crate::symfun::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleComponent {
    pub label: String,
    pub dim: usize,
    pub mult: i64,
    pub cm: ChowVector,
    pub gauss_finite: bool,
    /// Totals of a convolution or Schur functor rather than a single conormal variety.
    pub aggregate: bool,
}

impl CycleComponent {
    pub fn new(label: impl Into<String>, dim: usize, mult: i64, cm: ChowVector, gauss_finite: bool) -> Result<Self> {
        let c = CycleComponent { label: label.into(), dim, mult, cm, gauss_finite, aggregate: false };
        c.validate()?;
        Ok(c)
    }

    /// The conormal variety of a point, with multiplicity `mult`.
    pub fn point(label: impl Into<String>, g: usize, mult: i64) -> Self {
        CycleComponent {
            label: label.into(),
            dim: 0,
            mult,
            cm: ChowVector::point(g, BigRational::one()),
            gauss_finite: true,
            aggregate: false,
        }
    }

    /// Gauss degree, the coefficient of `μ_0`.
    pub fn gauss_degree(&self) -> BigInt {
        self.cm.degree().to_integer()
    }

    fn validate(&self) -> Result<()> {
        let g = self.cm.g();
        let name = &self.label;
        if self.dim >= g {
            return Err(Error::Invariant(format!("component `{name}`: dim {} must be below g = {g}", self.dim)));
        }
        if let Some(top) = self.cm.top_index() {
            if top > self.dim {
                return Err(Error::Invariant(format!(
                    "component `{name}`: Chern-Mather coordinate {top} is nonzero above dim {}",
                    self.dim
                )));
            }
        }
        if !is_integer(self.cm.degree()) {
            return Err(Error::Invariant(format!("component `{name}`: Gauss degree must be an integer")));
        }
        if self.aggregate {
            return Ok(());
        }
        if !self.cm.degree().is_positive() {
            return Err(Error::Invariant(format!("component `{name}`: Gauss degree must be positive")));
        }
        if self.cm.coord(self.dim).is_zero() {
            return Err(Error::Invariant(format!(
                "component `{name}`: Chern-Mather coordinate at dim {} must be nonzero",
                self.dim
            )));
        }
        if self.dim == 0 && !self.cm.degree().is_one() {
            return Err(Error::Invariant(format!(
                "component `{name}`: a point component has Chern-Mather vector (1,0,...)"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCycle", into = "RawCycle")]
pub struct CleanCycleModel {
    g: usize,
    components: Vec<CycleComponent>,
    fiber: Option<GroupRingElement>,
    valid_through: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawComponent {
    label: String,
    dim: usize,
    mult: i64,
    #[serde(with = "serde_rational::vec")]
    cm: Vec<BigRational>,
    gauss_finite: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    aggregate: bool,
}

#[derive(Serialize, Deserialize)]
struct RawCycle {
    g: usize,
    components: Vec<RawComponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fiber: Option<GroupRingElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    valid_through: Option<usize>,
}

impl TryFrom<RawCycle> for CleanCycleModel {
    type Error = Error;
    fn try_from(r: RawCycle) -> Result<Self> {
        let components = r
            .components
            .into_iter()
            .map(|c| {
                let comp = CycleComponent {
                    cm: ChowVector::new(r.g, c.cm)
                        .map_err(|e| Error::Invariant(format!("component `{}`: {e}", c.label)))?,
                    label: c.label,
                    dim: c.dim,
                    mult: c.mult,
                    gauss_finite: c.gauss_finite,
                    aggregate: c.aggregate,
                };
                comp.validate()?;
                Ok(comp)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut model = CleanCycleModel::new(r.g, components, r.fiber)?;
        if let Some(d) = r.valid_through {
            if d >= r.g {
                return Err(Error::Invariant(format!("valid_through {d} must be below g = {}", r.g)));
            }
            model.valid_through = Some(d);
        }
        Ok(model)
    }
}

impl From<CleanCycleModel> for RawCycle {
    fn from(m: CleanCycleModel) -> Self {
        RawCycle {
            g: m.g,
            components: m
                .components
                .into_iter()
                .map(|c| RawComponent {
                    label: c.label,
                    dim: c.dim,
                    mult: c.mult,
                    cm: c.cm.coords().to_vec(),
                    gauss_finite: c.gauss_finite,
                    aggregate: c.aggregate,
                })
                .collect(),
            fiber: m.fiber,
            valid_through: m.valid_through,
        }
    }
}

impl CleanCycleModel {
    /// Checks that every component lives on the same `g` and that the fiber,
    /// when present, has coefficient sum equal to the degree.
    pub fn new(g: usize, components: Vec<CycleComponent>, fiber: Option<GroupRingElement>) -> Result<Self> {
        if g == 0 {
            return Err(Error::Precondition("g must be positive".into()));
        }
        for c in &components {
            if c.cm.g() != g {
                return Err(Error::DimensionMismatch(g, c.cm.g()));
            }
            c.validate()?;
        }
        let model = CleanCycleModel { g, components, fiber, valid_through: None };
        if let Some(f) = &model.fiber {
            if f.augmentation() != model.degree() {
                return Err(Error::Invariant(format!(
                    "fiber has coefficient sum {} but the components have degree {}",
                    f.augmentation(),
                    model.degree()
                )));
            }
        }
        Ok(model)
    }

    pub fn empty(g: usize) -> Self {
        CleanCycleModel { g, components: Vec::new(), fiber: None, valid_through: None }
    }

    /// The conormal variety of the origin: the unit for convolution.
    pub fn origin(g: usize) -> Self {
        CleanCycleModel { g, components: vec![CycleComponent::point("0", g, 1)], fiber: None, valid_through: None }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn components(&self) -> &[CycleComponent] {
        &self.components
    }

    pub fn fiber(&self) -> Option<&GroupRingElement> {
        self.fiber.as_ref()
    }

    pub fn with_fiber(mut self, fiber: GroupRingElement) -> Result<Self> {
        if fiber.augmentation() != self.degree() {
            return Err(Error::Invariant(format!(
                "fiber has coefficient sum {} but the components have degree {}",
                fiber.augmentation(),
                self.degree()
            )));
        }
        self.fiber = Some(fiber);
        Ok(self)
    }

    /// Largest index through which the Chern–Mather totals are exact.
    pub fn valid_through(&self) -> usize {
        self.valid_through.unwrap_or(self.g - 1)
    }

    pub fn component(&self, label: &str) -> Option<&CycleComponent> {
        self.components.iter().find(|c| c.label == label)
    }

    /// `Σ mult · cm` over the components.
    pub fn total_cm(&self) -> ChowVector {
        self.components.iter().fold(ChowVector::zero(self.g), |acc, c| {
            acc.add(&c.cm.scale(&rat_int(BigInt::from(c.mult)))).expect("same g")
        })
    }

    /// `Σ mult · (Gauss degree)`.
    pub fn degree(&self) -> BigInt {
        self.components.iter().map(|c| c.gauss_degree() * c.mult).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.components.iter().all(|c| c.mult >= 0 && (!c.aggregate || c.cm.is_effective()))
            && self.fiber.as_ref().is_none_or(GroupRingElement::is_effective)
    }

    pub fn all_gauss_finite(&self) -> bool {
        self.components.iter().all(|c| c.gauss_finite)
    }

    fn aggregate(
        g: usize,
        label: String,
        totals: ChowVector,
        gauss_finite: bool,
        fiber: Option<GroupRingElement>,
        d: usize,
    ) -> Result<Self> {
        let components = if totals.is_zero() {
            Vec::new()
        } else {
            if !is_integer(totals.degree()) {
                return Err(Error::NonIntegral(format!("aggregate degree {} is not an integer", totals.degree())));
            }
            vec![CycleComponent {
                label,
                dim: totals.top_index().unwrap_or(0),
                mult: 1,
                cm: totals,
                gauss_finite,
                aggregate: true,
            }]
        };
        let mut model = CleanCycleModel::new(g, components, fiber)?;
        model.valid_through = Some(d);
        Ok(model)
    }

    fn label(&self) -> String {
        let labels: Vec<&str> = self.components.iter().map(|c| c.label.as_str()).collect();
        if labels.len() == 1 {
            labels[0].to_string()
        } else {
            format!("({})", labels.join("+"))
        }
    }
}

impl fmt::Display for CleanCycleModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "g = {}, degree = {}", self.g, self.degree())?;
        for c in &self.components {
            writeln!(
                f,
                "  {} x {} (dim {}, cm {}{}{})",
                c.mult,
                c.label,
                c.dim,
                c.cm,
                if c.gauss_finite { ", finite Gauss map" } else { "" },
                if c.aggregate { ", aggregate" } else { "" }
            )?;
        }
        if let Some(fib) = &self.fiber {
            writeln!(f, "  fiber: {fib}")?;
        }
        Ok(())
    }
}

pub fn degree(c: &CleanCycleModel) -> BigInt {
    c.degree()
}

fn check_truncation(d_trunc: usize, g: usize, finite: bool) -> Result<()> {
    if d_trunc == 0 || d_trunc >= g {
        return Err(Error::Truncation { d: d_trunc, reason: format!("must lie in 1..={}", g.saturating_sub(1)) });
    }
    if d_trunc == g - 1 && !finite {
        return Err(Error::Truncation {
            d: d_trunc,
            reason: "index g-1 needs finite Gauss maps on every component of one factor".into(),
        });
    }
    Ok(())
}

/// Convolution: Pontryagin product of the totals through `d_trunc`, product of fibers.
pub fn convolve(c1: &CleanCycleModel, c2: &CleanCycleModel, d_trunc: usize) -> Result<CleanCycleModel> {
    if c1.g != c2.g {
        return Err(Error::DimensionMismatch(c1.g, c2.g));
    }
    check_truncation(d_trunc, c1.g, c1.all_gauss_finite() || c2.all_gauss_finite())?;
    let totals = c1.total_cm().pontryagin(&c2.total_cm(), d_trunc)?;
    let fiber = match (&c1.fiber, &c2.fiber) {
        (Some(a), Some(b)) => Some(a.multiply(b)?),
        _ => None,
    };
    let d = d_trunc.min(c1.valid_through()).min(c2.valid_through());
    let label = format!("{}*{}", c1.label(), c2.label());
    CleanCycleModel::aggregate(c1.g, label, totals, c1.all_gauss_finite() && c2.all_gauss_finite(), fiber, d)
}

/// `[n]₊` on every component and on the fiber; `n ≠ 0`.
pub fn adams_push(n: i64, c: &CleanCycleModel) -> Result<CleanCycleModel> {
    if n == 0 {
        return Err(Error::Precondition("[0] collapses every cycle onto the origin; n must be nonzero".into()));
    }
    let components = c
        .components
        .iter()
        .map(|comp| CycleComponent {
            label: if n == 1 { comp.label.clone() } else { format!("[{n}]{}", comp.label) },
            cm: comp.cm.pushforward(n),
            ..comp.clone()
        })
        .collect();
    Ok(CleanCycleModel {
        g: c.g,
        components,
        fiber: c.fiber.as_ref().map(|f| f.push(n)),
        valid_through: c.valid_through,
    })
}

/// Chern–Mather totals and optional fiber, the λ-ring that Schur functors act on.
#[derive(Clone, Debug)]
struct CycleClass {
    totals: ChowVector,
    fiber: Option<GroupRingElement>,
    d: usize,
}

impl LambdaRing for CycleClass {
    fn zero_like(&self) -> Self {
        CycleClass {
            totals: ChowVector::zero(self.totals.g()),
            fiber: self.fiber.as_ref().map(LambdaRing::zero_like),
            d: self.d,
        }
    }
    fn one_like(&self) -> Self {
        CycleClass {
            totals: ChowVector::point(self.totals.g(), BigRational::one()),
            fiber: self.fiber.as_ref().map(LambdaRing::one_like),
            d: self.d,
        }
    }
    fn add(&self, other: &Self) -> Result<Self> {
        Ok(CycleClass {
            totals: self.totals.add(&other.totals)?,
            fiber: zip_fibers(&self.fiber, &other.fiber, GroupRingElement::plus)?,
            d: self.d,
        })
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(CycleClass {
            totals: self.totals.pontryagin_unchecked(&other.totals, self.d),
            fiber: zip_fibers(&self.fiber, &other.fiber, GroupRingElement::multiply)?,
            d: self.d,
        })
    }
    fn scale(&self, c: &BigInt) -> Self {
        CycleClass {
            totals: self.totals.scale(&rat_int(c.clone())),
            fiber: self.fiber.as_ref().map(|f| f.times_scalar(c)),
            d: self.d,
        }
    }
    fn adams(&self, n: u32) -> Self {
        CycleClass {
            totals: self.totals.pushforward(i64::from(n)),
            fiber: self.fiber.as_ref().map(|f| f.push(i64::from(n))),
            d: self.d,
        }
    }
    fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let fiber = self.fiber.as_ref().map(|f| f.div_exact(d)).transpose()?;
        let totals = self.totals.scale(&BigRational::new(BigInt::one(), d.clone()));
        if let Some(i) = totals.coords().iter().position(|c| !is_integer(c)) {
            return Err(Error::NonIntegral(format!(
                "Chern-Mather coordinate {i} of the Schur functor is {}",
                totals.coord(i)
            )));
        }
        Ok(CycleClass { totals, fiber, d: self.d })
    }
}

fn zip_fibers(
    a: &Option<GroupRingElement>,
    b: &Option<GroupRingElement>,
    op: fn(&GroupRingElement, &GroupRingElement) -> Result<GroupRingElement>,
) -> Result<Option<GroupRingElement>> {
    match (a, b) {
        (Some(x), Some(y)) => op(x, y).map(Some),
        _ => Ok(None),
    }
}

/// The Schur functor `s_α` applied to a cycle, as aggregate totals through `d_trunc`.
///
/// The rational combination `Σ_β m_{αβ} Λ_[β]` is evaluated exactly and must come
/// out integral.
pub fn schur_cycle(alpha: &Partition, c: &CleanCycleModel, d_trunc: usize) -> Result<CleanCycleModel> {
    check_truncation(d_trunc, c.g, c.all_gauss_finite())?;
    let x = CycleClass { totals: c.total_cm().truncate(d_trunc), fiber: c.fiber.clone(), d: d_trunc };
    let y = schur_apply(alpha, &x)?;
    let label = format!("s{alpha}({})", c.label());
    CleanCycleModel::aggregate(c.g, label, y.totals, c.all_gauss_finite(), y.fiber, d_trunc.min(c.valid_through()))
}

/// Degree-one Chern–Mather coefficient of `Λ_[β]` per unit of `c_1`, for a cycle
/// with Gauss degree `c0` and Chern–Mather vector `(c0, c1, 0, …)`:
/// `(Σ β_i²)·c0^{ℓ(β)-1}`.
pub fn cm1_partition_product(beta: &Partition, c0: &BigInt) -> BigInt {
    if beta.is_empty() {
        return BigInt::zero();
    }
    BigInt::from(beta.sum_of_squares()) * num_traits::pow(c0.clone(), beta.len() - 1)
}

/// Lower bound `|d1 - d2|` on the dimension of components of a convolution.
pub fn mindim_bound(d1: usize, d2: usize) -> usize {
    d1.abs_diff(d2)
}

/// Every multiplicity equals one.
pub fn reduced(c: &CleanCycleModel) -> bool {
    c.components.iter().all(|comp| comp.mult == 1) && c.fiber.as_ref().is_none_or(GroupRingElement::is_reduced)
}

/// Checks `reduced([n]₊ c)` for `n = 1..=n_max` on the fiber model.
pub fn essentially_multiplicity_free(c: &CleanCycleModel, n_max: u32) -> Result<bool> {
    let fiber = c.fiber.as_ref().ok_or(Error::MissingFiber)?;
    if !reduced(c) {
        return Ok(false);
    }
    Ok((1..=i64::from(n_max)).all(|n| fiber.push(n).is_reduced()))
}

/// Decides `reduced([n]₊ c)` for every `n ≥ 1`.
///
/// Two support points collide under `[n]` exactly when their difference is
/// torsion of order dividing `n`, so it suffices to test `n = 1` and `n` equal
/// to the exponent of the torsion subgroup.
pub fn essentially_multiplicity_free_exact(c: &CleanCycleModel) -> Result<bool> {
    let fiber = c.fiber.as_ref().ok_or(Error::MissingFiber)?;
    let e = fiber.group().torsion_exponent();
    Ok(reduced(c) && fiber.push(e as i64).is_reduced())
}
