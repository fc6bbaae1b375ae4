//! Integer partitions and exact transitions between symmetric-function bases.
//!
//! - [`partitions`] enumerates the partitions of `n` in lexicographic descending order.
//! - [`character`] evaluates an irreducible symmetric-group character by the
//!   Murnaghan–Nakayama rule.
//! - [`schur_to_powersum`] expands `s_α = Σ_β χ^α(β)/z_β · p_β`.
//! - [`elementary_to_powersum`] expands `e_n` through Newton's identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{factorial, rat_int};

/// A weakly decreasing sequence of positive integers.
///
/// The derived order compares part lists lexicographically; among partitions of
/// equal degree the canonical listing order is the reverse of it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p) * u64::from(p)).sum()
    }

    /// Multiplicity `m_i` of every part size `i` that occurs.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `z_β = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m) * factorial(u64::from(m)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }

    /// Union of part multisets, so that `p_β · p_γ = p_{β ∪ γ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Parses `3,1`, `(3,1)`, `[3,1]` or `3 1`; the empty string and `()` give the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidPartition(format!("bad part `{t}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in lexicographic descending order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Irreducible character `χ^α(β)` of the symmetric group, by Murnaghan–Nakayama.
///
/// Rim hooks are removed on the beta-set of `α`; a hook of length `r` moves one
/// bead down by `r` and contributes the sign `(-1)^{beads jumped}`. Returns zero
/// when the degrees differ.
pub fn character(alpha: &Partition, beta: &Partition) -> BigInt {
    if alpha.degree() != beta.degree() {
        return BigInt::zero();
    }
    let l = alpha.len() as u32;
    let beads: Vec<u32> = alpha.parts.iter().enumerate().map(|(i, &a)| a + l - 1 - i as u32).collect();
    let mut memo = HashMap::new();
    mn_rec(beads, beta.parts(), &mut memo)
}

fn mn_rec(beads: Vec<u32>, rest: &[u32], memo: &mut HashMap<(Vec<u32>, usize), BigInt>) -> BigInt {
    let Some((&r, tail)) = rest.split_first() else {
        return BigInt::one();
    };
    let key = (beads, rest.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beads = &key.0;
    let mut total = BigInt::zero();
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beads.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let v = mn_rec(next, tail, memo);
        if jumped % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    PowerSum,
    Elementary,
    Schur,
}

impl Basis {
    fn symbol(self) -> char {
        match self {
            Basis::PowerSum => 'p',
            Basis::Elementary => 'e',
            Basis::Schur => 's',
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" | "powersum" | "power-sum" => Ok(Basis::PowerSum),
            "e" | "elementary" => Ok(Basis::Elementary),
            "s" | "schur" => Ok(Basis::Schur),
            _ => Err(Error::Parse(format!("unknown basis `{s}`"))),
        }
    }
}

/// A finite linear combination of basis functions with rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpr {
    basis: Basis,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymExpr {
    pub fn zero(basis: Basis) -> Self {
        SymExpr { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Partition::empty(), BigRational::one())
    }

    pub fn monomial(basis: Basis, p: Partition, c: BigRational) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(p, c);
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, p: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, p: &Partition) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing lexicographic order, so `p(1,1,…)` comes first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, if there is one.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Partition::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &BigRational) -> SymExpr {
        let mut out = SymExpr::zero(self.basis);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &SymExpr) -> Result<SymExpr> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (p, v) in &other.terms {
            out.add_term(p.clone(), v.clone());
        }
        Ok(out)
    }

    /// Product of two power-sum expressions.
    pub fn mul(&self, other: &SymExpr) -> Result<SymExpr> {
        self.same_basis(other)?;
        if self.basis != Basis::PowerSum {
            return Err(Error::Precondition("products are only formed in the power-sum basis".into()));
        }
        let mut out = SymExpr::zero(Basis::PowerSum);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.union(q), a * b);
            }
        }
        Ok(out)
    }

    /// Rewrites the expression in the power-sum basis.
    pub fn to_powersum(&self) -> SymExpr {
        let mut out = SymExpr::zero(Basis::PowerSum);
        for (p, c) in &self.terms {
            let piece = match self.basis {
                Basis::PowerSum => SymExpr::monomial(Basis::PowerSum, p.clone(), BigRational::one()),
                Basis::Schur => schur_to_powersum(p),
                Basis::Elementary => p.parts().iter().fold(SymExpr::one(Basis::PowerSum), |acc, &k| {
                    acc.mul(&elementary_to_powersum(k)).expect("power-sum basis")
                }),
            };
            for (q, v) in piece.terms {
                out.add_term(q, v * c);
            }
        }
        out
    }

    fn same_basis(&self, other: &SymExpr) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Precondition(format!("basis mismatch: {:?} vs {:?}", self.basis, other.basis)));
        }
        Ok(())
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{mag}*{}{p}", self.basis.symbol())?;
        }
        Ok(())
    }
}

/// `s_α` in the power-sum basis, with coefficients `χ^α(β)/z_β`.
pub fn schur_to_powersum(alpha: &Partition) -> SymExpr {
    let mut out = SymExpr::zero(Basis::PowerSum);
    for beta in partitions(alpha.degree()) {
        let chi = character(alpha, &beta);
        if !chi.is_zero() {
            let z = beta.z();
            out.add_term(beta, BigRational::new(chi, z));
        }
    }
    out
}

/// `e_n` in the power-sum basis via `n·e_n = Σ_{i=1}^n (-1)^{i-1} e_{n-i} p_i`.
pub fn elementary_to_powersum(n: u32) -> SymExpr {
    let mut es = vec![SymExpr::one(Basis::PowerSum)];
    for m in 1..=n {
        let mut acc = SymExpr::zero(Basis::PowerSum);
        for i in 1..=m {
            let sign = if i % 2 == 1 { BigRational::one() } else { -BigRational::one() };
            let p_i = SymExpr::monomial(Basis::PowerSum, Partition::row(i), sign);
            let term = es[(m - i) as usize].mul(&p_i).expect("power-sum basis");
            acc = acc.add(&term).expect("power-sum basis");
        }
        es.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(m))));
    }
    es.pop().expect("at least e_0")
}

/// Largest denominator-clearing factor of an expression, i.e. the lcm of its denominators.
pub(crate) fn common_denominator(e: &SymExpr) -> BigInt {
    use num_integer::Integer;
    e.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Integer coefficients of `D·e` where `D` is [`common_denominator`].
pub(crate) fn cleared_terms(e: &SymExpr) -> (BigInt, Vec<(Partition, BigInt)>) {
    let d = common_denominator(e);
    let terms = e
        .terms
        .iter()
        .map(|(p, c)| {
            let v = c * rat_int(d.clone());
            (p.clone(), v.to_integer())
        })
        .collect();
    (d, terms)
}
