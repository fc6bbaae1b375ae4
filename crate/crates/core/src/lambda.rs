//! λ-rings driven by Adams operations, with the group ring `ℤ[Γ]` of a finitely
//! generated abelian group as the concrete model.
//!
//! Exterior powers and Schur functors are never defined combinatorially here.
//! They are computed from Adams operations through the power-sum expansions of
//! [`crate::symfun`], which is valid in any λ-ring without additive torsion.
//! The rational combination is cleared of denominators, evaluated in the ring
//! and divided back exactly; a remainder means the input cannot be the class of
//! an actual object and is reported as [`Error::NonIntegral`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{binomial, serde_bigint};
use crate::symfun::{cleared_terms, elementary_to_powersum, schur_to_powersum, Partition, SymExpr};

/// A commutative ring with Adams operations `Ψⁿ`, enough to evaluate symmetric functions.
pub trait LambdaRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn scale(&self, c: &BigInt) -> Self;
    /// `Ψⁿ` for `n ≥ 1`.
    fn adams(&self, n: u32) -> Self;
    /// Division by a nonzero integer that must leave no remainder.
    fn div_exact(&self, d: &BigInt) -> Result<Self>;
}

/// Evaluates a symmetric function on `x` through its power-sum expansion.
pub fn apply_symmetric<R: LambdaRing>(f: &SymExpr, x: &R) -> Result<R> {
    let f = f.to_powersum();
    let (denom, terms) = cleared_terms(&f);
    let mut adams: BTreeMap<u32, R> = BTreeMap::new();
    let mut acc = x.zero_like();
    for (beta, c) in terms {
        let mut prod = x.one_like();
        for &part in beta.parts() {
            let psi = adams.entry(part).or_insert_with(|| x.adams(part));
            prod = prod.mul(psi)?;
        }
        acc = acc.add(&prod.scale(&c))?;
    }
    acc.div_exact(&denom)
}

/// `λᵏ(x)`.
pub fn lambda_op<R: LambdaRing>(k: u32, x: &R) -> Result<R> {
    apply_symmetric(&elementary_to_powersum(k), x)
}

/// `Symᵏ(x)`, the Schur functor of the one-row partition.
pub fn sym_op<R: LambdaRing>(k: u32, x: &R) -> Result<R> {
    apply_symmetric(&schur_to_powersum(&Partition::row(k)), x)
}

/// The Schur functor `s_α(x)`.
pub fn schur_apply<R: LambdaRing>(alpha: &Partition, x: &R) -> Result<R> {
    apply_symmetric(&schur_to_powersum(alpha), x)
}

/// A finitely generated abelian group `ℤʳ ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_s` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    rank: usize,
    #[serde(default)]
    torsion: Vec<u64>,
}

impl TryFrom<RawGroup> for FgAbelianGroup {
    type Error = Error;
    fn try_from(r: RawGroup) -> Result<Self> {
        FgAbelianGroup::new(r.rank, r.torsion)
    }
}

impl From<FgAbelianGroup> for RawGroup {
    fn from(g: FgAbelianGroup) -> Self {
        RawGroup { rank: g.rank, torsion: g.torsion }
    }
}

impl FgAbelianGroup {
    /// Requires every `d_i ≥ 2` and `d_i | d_{i+1}`.
    pub fn new(rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(d) = torsion.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!("torsion factor {d} is below 2")));
        }
        if let Some(w) = torsion.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidGroup(format!(
                "torsion factors {} and {} are not in invariant-factor form",
                w[0], w[1]
            )));
        }
        Ok(FgAbelianGroup { rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of coordinates of an element.
    pub fn width(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Exponent of the torsion subgroup (1 when torsion-free).
    pub fn torsion_exponent(&self) -> u64 {
        self.torsion.last().copied().unwrap_or(1)
    }

    /// Builds an element, reducing torsion coordinates into `[0, d_i)`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.width() {
            return Err(Error::InvalidGroup(format!(
                "element {coords:?} has {} coordinates, group {self} needs {}",
                coords.len(),
                self.width()
            )));
        }
        let mut v = coords.to_vec();
        self.reduce(&mut v);
        Ok(GroupElement(v))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.width()])
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut v: Vec<i64> =
            a.0.iter().zip(&b.0).map(|(x, y)| x.checked_add(*y).expect("group coordinate overflow")).collect();
        self.reduce(&mut v);
        GroupElement(v)
    }

    pub fn scale(&self, n: i64, a: &GroupElement) -> GroupElement {
        let mut v: Vec<i64> = a.0.iter().map(|x| x.checked_mul(n).expect("group coordinate overflow")).collect();
        self.reduce(&mut v);
        GroupElement(v)
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.scale(-1, a)
    }

    pub fn is_torsion(&self, a: &GroupElement) -> bool {
        a.0[..self.rank].iter().all(|&x| x == 0)
    }

    fn reduce(&self, v: &mut [i64]) {
        for (x, &d) in v[self.rank..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(d as i64);
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 || self.torsion.is_empty() {
            parts.push(format!("Z^{}", self.rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coordinates of a group element: free part first, then torsion residues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

/// An element of `ℤ[Γ]`: finitely many group elements with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroupRing", into = "RawGroupRing")]
pub struct GroupRingElement {
    group: FgAbelianGroup,
    coeffs: BTreeMap<GroupElement, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawGroupRing {
    group: FgAbelianGroup,
    terms: Vec<(Vec<i64>, RawCoeff)>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RawCoeff(#[serde(with = "serde_bigint")] BigInt);

impl TryFrom<RawGroupRing> for GroupRingElement {
    type Error = Error;
    fn try_from(r: RawGroupRing) -> Result<Self> {
        GroupRingElement::from_terms(r.group, r.terms.into_iter().map(|(e, c)| (e, c.0)))
    }
}

impl From<GroupRingElement> for RawGroupRing {
    fn from(x: GroupRingElement) -> Self {
        RawGroupRing { terms: x.coeffs.into_iter().map(|(e, c)| (e.0, RawCoeff(c))).collect(), group: x.group }
    }
}

impl GroupRingElement {
    pub fn zero(group: &FgAbelianGroup) -> Self {
        GroupRingElement { group: group.clone(), coeffs: BTreeMap::new() }
    }

    /// The unit `x⁰`.
    pub fn one(group: &FgAbelianGroup) -> Self {
        Self::monomial(group, group.zero(), BigInt::one())
    }

    pub fn monomial(group: &FgAbelianGroup, e: GroupElement, c: BigInt) -> Self {
        let mut x = Self::zero(group);
        x.add_term(e, c);
        x
    }

    /// Collects `(coordinates, coefficient)` pairs; repeated elements are summed.
    pub fn from_terms<I, C>(group: FgAbelianGroup, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut x = Self::zero(&group);
        for (coords, c) in terms {
            let e = group.element(&coords)?;
            x.add_term(e, c.into());
        }
        Ok(x)
    }

    /// Sum of the given elements, each with coefficient one.
    pub fn from_support(group: &FgAbelianGroup, elems: &[Vec<i64>]) -> Result<Self> {
        Self::from_terms(group.clone(), elems.iter().map(|e| (e.clone(), 1)))
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn add_term(&mut self, e: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: &GroupElement) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of coefficients; the degree of the cycle this element is a fiber of.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// All coefficients equal to one.
    pub fn is_reduced(&self) -> bool {
        self.coeffs.values().all(|c| c.is_one())
    }

    pub fn check_group(&self, other: &GroupRingElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: other.group.to_string() });
        }
        Ok(())
    }

    pub fn plus(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.plus(&other.times_scalar(&-BigInt::one()))
    }

    /// Convolution of coefficient maps.
    pub fn multiply(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_group(other)?;
        let mut out = Self::zero(&self.group);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(self.group.add(a, b), x * y);
            }
        }
        Ok(out)
    }

    pub fn times_scalar(&self, c: &BigInt) -> GroupRingElement {
        let mut out = Self::zero(&self.group);
        for (e, v) in &self.coeffs {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Pushforward along `g ↦ n·g`; colliding images add up.
    pub fn push(&self, n: i64) -> GroupRingElement {
        let mut out = Self::zero(&self.group);
        for (e, c) in &self.coeffs {
            out.add_term(self.group.scale(n, e), c.clone());
        }
        out
    }
}

impl LambdaRing for GroupRingElement {
    fn zero_like(&self) -> Self {
        Self::zero(&self.group)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.group)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        self.plus(other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.multiply(other)
    }
    fn scale(&self, c: &BigInt) -> Self {
        self.times_scalar(c)
    }
    fn adams(&self, n: u32) -> Self {
        self.push(i64::from(n))
    }
    fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = Self::zero(&self.group);
        for (e, c) in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!("coefficient {c} at {e} is not divisible by {d}")));
            }
            out.add_term(e.clone(), q);
        }
        Ok(out)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{mag}*{e}")?;
            }
        }
        Ok(())
    }
}

/// `Ψⁿ` on the group ring for any integer `n`.
pub fn gr_adams(n: i64, x: &GroupRingElement) -> GroupRingElement {
    x.push(n)
}

pub fn gr_multiply(x: &GroupRingElement, y: &GroupRingElement) -> Result<GroupRingElement> {
    x.multiply(y)
}

/// Expected coefficient sum of `λᵏ(x)` when `x` has coefficient sum `d ≥ 0`.
pub fn lambda_dimension(d: u64, k: u32) -> BigInt {
    binomial(d, u64::from(k))
}

/// A composite of direct sums, tensor products and Schur functors in variables `x₁, …, x_r`.
///
/// JSON form: `{"var": 1}`, `{"sum": [..]}`, `{"product": [..]}`, `{"schur": [[1,1], {..}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorConstruction {
    /// One-based variable index.
    Var(usize),
    Sum(Vec<TensorConstruction>),
    Product(Vec<TensorConstruction>),
    Schur(Partition, Box<TensorConstruction>),
}

impl TensorConstruction {
    pub fn var(i: usize) -> Self {
        TensorConstruction::Var(i)
    }

    pub fn alt(k: u32, inner: TensorConstruction) -> Self {
        TensorConstruction::Schur(Partition::column(k), Box::new(inner))
    }

    pub fn sym(k: u32, inner: TensorConstruction) -> Self {
        TensorConstruction::Schur(Partition::row(k), Box::new(inner))
    }

    /// Largest variable index used.
    pub fn arity(&self) -> usize {
        match self {
            TensorConstruction::Var(i) => *i,
            TensorConstruction::Sum(xs) | TensorConstruction::Product(xs) => {
                xs.iter().map(Self::arity).max().unwrap_or(0)
            }
            TensorConstruction::Schur(_, x) => x.arity(),
        }
    }

    fn check_leaves(&self, r: usize) -> Result<()> {
        match self {
            TensorConstruction::Var(i) if *i == 0 || *i > r => {
                Err(Error::Precondition(format!("variable index {i} outside 1..={r}")))
            }
            TensorConstruction::Var(_) => Ok(()),
            TensorConstruction::Sum(xs) | TensorConstruction::Product(xs) => {
                xs.iter().try_for_each(|x| x.check_leaves(r))
            }
            TensorConstruction::Schur(_, x) => x.check_leaves(r),
        }
    }
}

/// Evaluates a tensor construction on `xs`, which must be nonempty.
pub fn eval_construction<R: LambdaRing>(s: &TensorConstruction, xs: &[R]) -> Result<R> {
    let first =
        xs.first().ok_or_else(|| Error::Precondition("a tensor construction needs at least one argument".into()))?;
    s.check_leaves(xs.len())?;
    eval_rec(s, xs, first)
}

fn eval_rec<R: LambdaRing>(s: &TensorConstruction, xs: &[R], proto: &R) -> Result<R> {
    match s {
        TensorConstruction::Var(i) => Ok(xs[i - 1].clone()),
        TensorConstruction::Sum(parts) => {
            parts.iter().try_fold(proto.zero_like(), |acc, p| acc.add(&eval_rec(p, xs, proto)?))
        }
        TensorConstruction::Product(parts) => {
            parts.iter().try_fold(proto.one_like(), |acc, p| acc.mul(&eval_rec(p, xs, proto)?))
        }
        TensorConstruction::Schur(alpha, inner) => schur_apply(alpha, &eval_rec(inner, xs, proto)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z1() -> FgAbelianGroup {
        FgAbelianGroup::free(1)
    }

    fn z2() -> FgAbelianGroup {
        FgAbelianGroup::new(0, vec![2]).unwrap()
    }

    #[test]
    fn invariant_factor_form_is_enforced() {
        assert!(FgAbelianGroup::new(0, vec![2, 4]).is_ok());
        assert!(FgAbelianGroup::new(0, vec![2, 3]).is_err());
        assert!(FgAbelianGroup::new(1, vec![1]).is_err());
    }

    #[test]
    fn binomial_square() {
        let x = GroupRingElement::from_terms(z1(), [(vec![1], 1), (vec![-1], 1)]).unwrap();
        let sq = gr_multiply(&x, &x).unwrap();
        let want = GroupRingElement::from_terms(z1(), [(vec![2], 1), (vec![0], 2), (vec![-2], 1)]).unwrap();
        assert_eq!(sq, want);
    }

    #[test]
    fn torsion_square() {
        let x = GroupRingElement::from_terms(z2(), [(vec![0], 1), (vec![1], 1)]).unwrap();
        let want = GroupRingElement::from_terms(z2(), [(vec![0], 2), (vec![1], 2)]).unwrap();
        assert_eq!(gr_multiply(&x, &x).unwrap(), want);
        assert_eq!(gr_adams(2, &x), GroupRingElement::from_terms(z2(), [(vec![0], 2)]).unwrap());
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = GroupRingElement::one(&z1());
        let b = GroupRingElement::one(&z2());
        assert!(matches!(gr_multiply(&a, &b), Err(Error::GroupMismatch { .. })));
    }

    #[test]
    fn second_exterior_power_of_three_characters() {
        let x = GroupRingElement::from_support(&z1(), &[vec![0], vec![1], vec![2]]).unwrap();
        let want = GroupRingElement::from_support(&z1(), &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(lambda_op(2, &x).unwrap(), want);
        assert!(lambda_op(4, &x).unwrap().is_zero());
    }

    #[test]
    fn non_integral_input_is_detected() {
        let odd = GroupRingElement::from_terms(z1(), [(vec![1], 1)]).unwrap();
        let half = SymExpr::monomial(
            crate::symfun::Basis::PowerSum,
            Partition::row(2),
            num_rational::BigRational::new(BigInt::one(), BigInt::from(2)),
        );
        assert!(matches!(apply_symmetric(&half, &odd), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = FgAbelianGroup::new(1, vec![2]).unwrap();
        let x = GroupRingElement::from_terms(g, [(vec![1, 1], 3), (vec![-2, 0], -1)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<GroupRingElement>(&s).unwrap(), x);
    }

    #[test]
    fn construction_json_shape() {
        let s = TensorConstruction::alt(
            2,
            TensorConstruction::Sum(vec![TensorConstruction::var(1), TensorConstruction::var(2)]),
        );
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"schur":[[1,1],{"sum":[{"var":1},{"var":2}]}]}"#);
        assert_eq!(serde_json::from_str::<TensorConstruction>(&j).unwrap(), s);
    }

    #[test]
    fn construction_leaf_range_checked() {
        let x = GroupRingElement::one(&z1());
        assert!(eval_construction(&TensorConstruction::var(2), std::slice::from_ref(&x)).is_err());
        assert!(eval_construction(&TensorConstruction::var(0), &[x]).is_err());
    }
}
