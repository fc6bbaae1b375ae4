//! Numerical Chow classes on a very general principally polarized abelian variety.
//!
//! `CH_i` is modeled as rank one, generated by the minimal class
//! `μ_i = [Θ]^{g-i}/(g-i)!`. A [`ChowVector`] stores the coordinates
//! `a_0, …, a_{g-1}` of `Σ a_i μ_i`; the top group `CH_g` is quotiented away.
//! Integrality verdicts refer to this lattice and are only meaningful for a
//! very general ppav, where the Néron–Severi group has rank one.
//!
//! The Pontryagin product uses `μ_a ⋆ μ_b = C(a+b, a)·μ_{a+b}` and `[n]₊`
//! multiplies `CH_i` by `n^{2i}`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{binomial, factorial, is_integer, is_nonneg, rat_int, serde_rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawChow", into = "RawChow")]
pub struct ChowVector {
    g: usize,
    coords: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct RawChow {
    g: usize,
    #[serde(with = "serde_rational::vec")]
    coords: Vec<BigRational>,
}

impl TryFrom<RawChow> for ChowVector {
    type Error = Error;
    fn try_from(r: RawChow) -> Result<Self> {
        ChowVector::new(r.g, r.coords)
    }
}

impl From<ChowVector> for RawChow {
    fn from(c: ChowVector) -> Self {
        RawChow { g: c.g, coords: c.coords }
    }
}

impl ChowVector {
    /// Requires `g ≥ 1` and exactly `g` coordinates.
    pub fn new(g: usize, coords: Vec<BigRational>) -> Result<Self> {
        if g == 0 {
            return Err(Error::Precondition("g must be positive".into()));
        }
        if coords.len() != g {
            return Err(Error::Invariant(format!(
                "a Chow vector for g = {g} needs {g} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(ChowVector { g, coords })
    }

    pub fn from_ints(g: usize, coords: &[i64]) -> Result<Self> {
        Self::new(g, coords.iter().map(|&c| rat_int(BigInt::from(c))).collect())
    }

    pub fn zero(g: usize) -> Self {
        ChowVector { g, coords: vec![BigRational::zero(); g] }
    }

    /// `d` times the class of a point.
    pub fn point(g: usize, d: BigRational) -> Self {
        Self::basis(g, 0, d)
    }

    /// `c·μ_i`.
    pub fn basis(g: usize, i: usize, c: BigRational) -> Self {
        let mut v = Self::zero(g);
        v.coords[i] = c;
        v
    }

    /// `[Θ]^k = k!·μ_{g-k}` for `1 ≤ k ≤ g`.
    pub fn theta_power(g: usize, k: usize) -> Result<Self> {
        if k == 0 || k > g {
            return Err(Error::Precondition(format!("theta power {k} outside 1..={g}")));
        }
        Ok(Self::basis(g, g - k, rat_int(factorial(k as u64))))
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.coords[i]
    }

    /// Coefficient of `μ_0`, the degree.
    pub fn degree(&self) -> &BigRational {
        &self.coords[0]
    }

    pub fn set(&mut self, i: usize, c: BigRational) {
        self.coords[i] = c;
    }

    /// Largest index with a nonzero coordinate.
    pub fn top_index(&self) -> Option<usize> {
        self.coords.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// All coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(is_integer)
    }

    /// All coordinates are nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(is_nonneg)
    }

    pub fn add(&self, other: &ChowVector) -> Result<ChowVector> {
        self.check_g(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(ChowVector { g: self.g, coords })
    }

    pub fn sub(&self, other: &ChowVector) -> Result<ChowVector> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> ChowVector {
        ChowVector { g: self.g, coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Zeroes every coordinate above `d`.
    pub fn truncate(&self, d: usize) -> ChowVector {
        let mut out = self.clone();
        for c in out.coords.iter_mut().skip(d + 1) {
            *c = BigRational::zero();
        }
        out
    }

    /// Pontryagin product modulo `CH_{>d_trunc}`, for `1 ≤ d_trunc ≤ g-1`.
    pub fn pontryagin(&self, other: &ChowVector, d_trunc: usize) -> Result<ChowVector> {
        self.check_g(other)?;
        if d_trunc == 0 || d_trunc >= self.g {
            return Err(Error::Truncation {
                d: d_trunc,
                reason: format!("must lie in 1..={}", self.g.saturating_sub(1)),
            });
        }
        Ok(self.pontryagin_unchecked(other, d_trunc))
    }

    pub(crate) fn pontryagin_unchecked(&self, other: &ChowVector, d_trunc: usize) -> ChowVector {
        let mut out = Self::zero(self.g);
        for c in 0..=d_trunc.min(self.g - 1) {
            let mut acc = BigRational::zero();
            for a in 0..=c {
                let (x, y) = (&self.coords[a], &other.coords[c - a]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                acc += x * y * rat_int(binomial(c as u64, a as u64));
            }
            out.coords[c] = acc;
        }
        out
    }

    /// `[n]₊`, multiplying `a_i` by `n^{2i}`.
    pub fn pushforward(&self, n: i64) -> ChowVector {
        let n2 = BigInt::from(n) * BigInt::from(n);
        let mut factor = BigInt::one();
        let mut coords = Vec::with_capacity(self.g);
        for a in &self.coords {
            coords.push(a * rat_int(factor.clone()));
            factor *= &n2;
        }
        ChowVector { g: self.g, coords }
    }

    fn check_g(&self, other: &ChowVector) -> Result<()> {
        if self.g != other.g {
            return Err(Error::DimensionMismatch(self.g, other.g));
        }
        Ok(())
    }
}

impl fmt::Display for ChowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", inner.join(", "))
    }
}

pub fn pontryagin(x: &ChowVector, y: &ChowVector, d_trunc: usize) -> Result<ChowVector> {
    x.pontryagin(y, d_trunc)
}

pub fn pushforward_n(n: i64, x: &ChowVector) -> ChowVector {
    x.pushforward(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, rat};

    #[test]
    fn theta_powers() {
        assert_eq!(ChowVector::theta_power(5, 4).unwrap(), ChowVector::basis(5, 1, rat(24)));
        assert_eq!(ChowVector::theta_power(5, 5).unwrap(), ChowVector::point(5, rat(120)));
        assert!(ChowVector::theta_power(5, 0).is_err());
        assert!(ChowVector::theta_power(5, 6).is_err());
    }

    #[test]
    fn genus_five_non_integral_class() {
        let c1 = ChowVector::basis(5, 1, frac(96, 5));
        assert!(!c1.is_integral());
        assert!(c1.is_effective());
        assert!(ChowVector::zero(5).is_integral() && ChowVector::zero(5).is_effective());
    }

    #[test]
    fn point_class_acts_by_degree() {
        let y = ChowVector::from_ints(4, &[3, 5, 7, 11]).unwrap();
        let p = ChowVector::point(4, rat(2));
        assert_eq!(p.pontryagin(&y, 3).unwrap(), y.scale(&rat(2)));
        assert_eq!(p.pontryagin(&y, 1).unwrap(), y.scale(&rat(2)).truncate(1));
    }

    #[test]
    fn degree_one_layer_of_a_square() {
        let x = ChowVector::from_ints(5, &[8, 7, 0, 0, 0]).unwrap();
        let sq = x.pontryagin(&x, 1).unwrap();
        assert_eq!(sq, ChowVector::from_ints(5, &[64, 112, 0, 0, 0]).unwrap());
    }

    #[test]
    fn minimal_classes_multiply_by_binomials() {
        let mu1 = ChowVector::basis(4, 1, rat(1));
        assert_eq!(mu1.pontryagin(&mu1, 3).unwrap(), ChowVector::basis(4, 2, rat(2)));
    }

    #[test]
    fn pushforward_scales_by_even_powers() {
        let x = ChowVector::from_ints(5, &[1, 1, 1, 0, 0]).unwrap();
        let y = x.pushforward(3);
        assert_eq!(y.coord(2), &rat(81));
        assert_eq!(x.pushforward(4).coord(1), &rat(16));
        assert_eq!(x.pushforward(1), x);
    }

    #[test]
    fn truncation_range_is_checked() {
        let x = ChowVector::zero(3);
        assert!(x.pontryagin(&x, 0).is_err());
        assert!(x.pontryagin(&x, 3).is_err());
        assert!(matches!(x.pontryagin(&ChowVector::zero(4), 1), Err(Error::DimensionMismatch(3, 4))));
    }

    #[test]
    fn json_uses_rational_strings() {
        let x = ChowVector::new(2, vec![rat(8), frac(96, 5)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"g":2,"coords":["8","96/5"]}"#);
        assert_eq!(serde_json::from_str::<ChowVector>(&s).unwrap(), x);
        assert!(serde_json::from_str::<ChowVector>(r#"{"g":3,"coords":["1"]}"#).is_err());
    }
}
