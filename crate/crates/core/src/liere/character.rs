use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::root_system::{DynkinType, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::lambda::{lambda_op, sym_op, LambdaRing};

/// A Weyl-invariant map from weights to positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCharacter", into = "RawCharacter")]
pub struct Character {
    ty: DynkinType,
    weights: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
struct RawCharacter {
    #[serde(rename = "type")]
    ty: DynkinType,
    weights: Vec<(Vec<i64>, u64)>,
}

impl TryFrom<RawCharacter> for Character {
    type Error = Error;
    fn try_from(r: RawCharacter) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (w, m) in r.weights {
            if w.len() != r.ty.rank {
                return Err(Error::Invariant(format!(
                    "weight {w:?} has {} coordinates, {} needs {}",
                    w.len(),
                    r.ty,
                    r.ty.rank
                )));
            }
            if m == 0 {
                return Err(Error::Invariant(format!("weight {w:?} has multiplicity zero")));
            }
            if weights.insert(Weight(w.clone()), m).is_some() {
                return Err(Error::Invariant(format!("weight {w:?} is listed twice")));
            }
        }
        let ch = Character { ty: r.ty, weights };
        ch.check_weyl_invariant(&RootSystem::new(r.ty))?;
        Ok(ch)
    }
}

impl From<Character> for RawCharacter {
    fn from(c: Character) -> Self {
        RawCharacter { ty: c.ty, weights: c.weights.into_iter().map(|(w, m)| (w.0, m)).collect() }
    }
}

impl Character {
    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn weights(&self) -> &BTreeMap<Weight, u64> {
        &self.weights
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities.
    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    /// Multiplicities on dominant weights only.
    pub fn dominant_part(&self) -> BTreeMap<Weight, u64> {
        self.weights.iter().filter(|(w, _)| w.is_dominant()).map(|(w, &m)| (w.clone(), m)).collect()
    }

    /// Checks invariance under every simple reflection, hence under the Weyl group.
    pub fn check_weyl_invariant(&self, rs: &RootSystem) -> Result<()> {
        check_same_type(rs, self.ty)?;
        for (w, &m) in &self.weights {
            for i in 0..rs.rank() {
                let r = rs.reflect(w, i);
                if self.multiplicity(&r) != m {
                    return Err(Error::NotACharacter(format!(
                        "multiplicity {m} at {w} differs from {} at its reflection {r}",
                        self.multiplicity(&r)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_virtual(&self) -> VirtualCharacter {
        VirtualCharacter {
            ty: self.ty,
            weights: self.weights.iter().map(|(w, &m)| (w.clone(), BigInt::from(m))).collect(),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|(w, m)| format!("{m}*{w}")).collect();
        write!(f, "{}: {}", self.ty, parts.join(" + "))
    }
}

/// Integer combination of weights, the λ-ring in which exterior and symmetric
/// powers of characters are evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter {
    ty: DynkinType,
    weights: BTreeMap<Weight, BigInt>,
}

impl VirtualCharacter {
    fn insert(&mut self, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.weights.entry(w.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.weights.remove(&w);
        }
    }

    pub fn weights(&self) -> &BTreeMap<Weight, BigInt> {
        &self.weights
    }

    /// Converts to a genuine character when every coefficient is positive.
    pub fn into_character(self) -> Result<Character> {
        let mut weights = BTreeMap::new();
        for (w, c) in self.weights {
            match c.to_u64() {
                Some(m) if m > 0 => {
                    weights.insert(w, m);
                }
                _ => return Err(Error::NotACharacter(format!("coefficient {c} at weight {w}"))),
            }
        }
        Ok(Character { ty: self.ty, weights })
    }
}

impl LambdaRing for VirtualCharacter {
    fn zero_like(&self) -> Self {
        VirtualCharacter { ty: self.ty, weights: BTreeMap::new() }
    }
    fn one_like(&self) -> Self {
        let mut one = self.zero_like();
        one.insert(Weight::zero(self.ty.rank), BigInt::from(1));
        one
    }
    fn add(&self, other: &Self) -> Result<Self> {
        check_pair(self.ty, other.ty)?;
        let mut out = self.clone();
        for (w, c) in &other.weights {
            out.insert(w.clone(), c.clone());
        }
        Ok(out)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        check_pair(self.ty, other.ty)?;
        let mut out = self.zero_like();
        for (a, x) in &self.weights {
            for (b, y) in &other.weights {
                out.insert(a.add(b), x * y);
            }
        }
        Ok(out)
    }
    fn scale(&self, c: &BigInt) -> Self {
        let mut out = self.zero_like();
        for (w, x) in &self.weights {
            out.insert(w.clone(), x * c);
        }
        out
    }
    fn adams(&self, n: u32) -> Self {
        let mut out = self.zero_like();
        for (w, x) in &self.weights {
            out.insert(w.scale(i64::from(n)), x.clone());
        }
        out
    }
    fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = self.zero_like();
        for (w, x) in &self.weights {
            let (q, r) = x.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!("coefficient {x} at weight {w} is not divisible by {d}")));
            }
            out.insert(w.clone(), q);
        }
        Ok(out)
    }
}

fn check_pair(a: DynkinType, b: DynkinType) -> Result<()> {
    if a != b {
        return Err(Error::RootSystemMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

fn check_same_type(rs: &RootSystem, ty: DynkinType) -> Result<()> {
    check_pair(rs.ty(), ty)
}

/// Dominant weights of `V_λ`, ordered by increasing depth below `λ`.
///
/// Every dominant `μ ≤ λ` is reached from `λ` by subtracting positive roots while
/// staying dominant, so a search over such steps finds all of them.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    let seen = dominant_weight_set(rs, lambda)?;
    let mut out: Vec<(i64, Weight)> =
        seen.into_iter().map(|mu| (rs.root_height(&lambda.sub(&mu)).expect("same coset"), mu)).collect();
    out.sort();
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// Dominant weights of `V_λ` in no particular order.
pub(crate) fn dominant_weight_set(rs: &RootSystem, lambda: &Weight) -> Result<HashSet<Weight>> {
    rs.check_dominant(lambda)?;
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for alpha in rs.positive_roots_weights() {
            let nu = mu.sub(alpha);
            if nu.is_dominant() && !seen.contains(&nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    Ok(seen)
}

/// Freudenthal's formula on dominant weights, in order of increasing depth.
///
/// When `stop_above` is set, the computation halts at the first multiplicity
/// exceeding it and the partial list ends with that entry.
pub fn dominant_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    stop_above: Option<u64>,
) -> Result<Vec<(Weight, u64)>> {
    let order = dominant_weights(rs, lambda)?;
    let members: HashSet<&Weight> = order.iter().collect();
    let rho = rs.rho();
    let lr = lambda.add(&rho);
    let top = rs.scaled_inner(&lr, &lr);
    let det = i128::from(rs.cartan_det());
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let mut out = Vec::with_capacity(order.len());
    for mu in &order {
        let m = if mu == lambda {
            1
        } else {
            let mut num: i128 = 0;
            for (root, alpha) in rs.positive_roots().iter().zip(rs.positive_roots_weights()) {
                let mut nu = mu.add(alpha);
                loop {
                    let dom = rs.to_dominant(&nu);
                    if !members.contains(&dom) {
                        break;
                    }
                    num += i128::from(mult[&dom]) * i128::from(rs.pair_with_root(&nu, root));
                    nu = nu.add(alpha);
                }
            }
            let mr = mu.add(&rho);
            let den = top - rs.scaled_inner(&mr, &mr);
            let scaled = 2 * det * num;
            assert!(den > 0 && scaled % den == 0, "Freudenthal recursion must be exact");
            (scaled / den) as u64
        };
        mult.insert(mu.clone(), m);
        out.push((mu.clone(), m));
        if stop_above.is_some_and(|s| m > s) {
            break;
        }
    }
    Ok(out)
}

/// Full weight-multiplicity map of the irreducible representation `V_λ`.
pub fn freudenthal_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let mut weights = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(rs, lambda, None)? {
        for w in rs.weyl_orbit(&mu) {
            weights.insert(w, m);
        }
    }
    Ok(Character { ty: rs.ty(), weights })
}

pub fn char_tensor(x: &Character, y: &Character) -> Result<Character> {
    x.to_virtual().mul(&y.to_virtual())?.into_character()
}

pub fn char_sum(x: &Character, y: &Character) -> Result<Character> {
    x.to_virtual().add(&y.to_virtual())?.into_character()
}

/// `Ψⁿ`: every weight scaled by `n`.
pub fn char_adams(n: i64, x: &Character) -> Character {
    let mut out = VirtualCharacter { ty: x.ty, weights: BTreeMap::new() };
    for (w, &m) in &x.weights {
        out.insert(w.scale(n), BigInt::from(m));
    }
    out.into_character().expect("positive multiplicities stay positive")
}

pub fn char_alt(k: u32, x: &Character) -> Result<Character> {
    lambda_op(k, &x.to_virtual())?.into_character()
}

pub fn char_sym(k: u32, x: &Character) -> Result<Character> {
    sym_op(k, &x.to_virtual())?.into_character()
}

/// Highest weights with multiplicities, found by repeatedly removing the
/// irreducible character of a maximal dominant weight that is still present.
pub fn decompose(rs: &RootSystem, x: &Character) -> Result<Vec<(Weight, u64)>> {
    x.check_weyl_invariant(rs)?;
    let mut rest: BTreeMap<Weight, i128> = x.dominant_part().into_iter().map(|(w, m)| (w, i128::from(m))).collect();
    let rho = rs.rho();
    let mut out = Vec::new();
    while let Some(top) = rest
        .keys()
        .max_by_key(|w| {
            let s = w.add(&rho);
            (rs.scaled_inner(&s, &s), (*w).clone())
        })
        .cloned()
    {
        let m = rest[&top];
        if m < 0 {
            return Err(Error::NotACharacter(format!("peeling leaves multiplicity {m} at {top}")));
        }
        for (mu, k) in dominant_multiplicities(rs, &top, None)? {
            let slot = rest.entry(mu.clone()).or_insert(0);
            *slot -= m * i128::from(k);
            if *slot == 0 {
                rest.remove(&mu);
            }
        }
        out.push((top, m as u64));
    }
    Ok(out)
}

/// Virtual decomposition by the Brauer–Klimyk rule: every weight `μ` contributes
/// `sign(w)·mult(μ)` to `V_{w(μ+ρ)−ρ}` when `μ+ρ` is regular.
pub fn racah_speiser(rs: &RootSystem, weights: &BTreeMap<Weight, BigInt>) -> BTreeMap<Weight, BigInt> {
    let rho = rs.rho();
    let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (mu, m) in weights {
        if let Some((nu, odd)) = shifted_dominant(rs, &mu.add(&rho)) {
            let slot = out.entry(nu.sub(&rho)).or_insert_with(BigInt::zero);
            if odd {
                *slot -= m;
            } else {
                *slot += m;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn shifted_dominant(rs: &RootSystem, w: &Weight) -> Option<(Weight, bool)> {
    let (d, odd) = rs.to_dominant_with_parity(w);
    d.0.iter().all(|&c| c > 0).then_some((d, odd))
}

/// Multiplicity of `V_ν` in a character, by the Brauer–Klimyk rule.
pub fn multiplicity_of(rs: &RootSystem, x: &Character, nu: &Weight) -> Result<i64> {
    check_same_type(rs, x.ty)?;
    let v = racah_speiser(rs, &x.to_virtual().weights);
    Ok(v.get(nu).map_or(0, |c| c.to_i64().expect("small multiplicity")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FsType {
    Orthogonal,
    Symplectic,
    None,
}

impl fmt::Display for FsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FsType::Orthogonal => "orthogonal",
            FsType::Symplectic => "symplectic",
            FsType::None => "none",
        })
    }
}

/// `−w₀(λ) = λ`.
pub fn self_dual(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    rs.check_dominant(lambda)?;
    Ok(rs.apply_minus_w0(lambda) == *lambda)
}

/// Frobenius–Schur type from the location of the trivial constituent.
///
/// For self-dual `V`, `V ⊗ V` contains the trivial representation once, and
/// `Sym²V − Alt²V = Ψ²V`. The trivial multiplicity `t` of `Ψ²V` is read off by
/// the Brauer–Klimyk rule, so `Sym²V` contains it `(1+t)/2` times and `Alt²V`
/// `(1−t)/2` times.
pub fn fs_type(rs: &RootSystem, lambda: &Weight) -> Result<FsType> {
    if !self_dual(rs, lambda)? {
        return Ok(FsType::None);
    }
    fs_type_with(rs, &dominant_multiplicities(rs, lambda, None)?)
}

/// [`fs_type`] for a self-dual highest weight whose dominant multiplicities are
/// already known.
pub(crate) fn fs_type_with(rs: &RootSystem, dominant: &[(Weight, u64)]) -> Result<FsType> {
    let rho = rs.rho();
    let weight_count: BigInt = dominant.iter().map(|(mu, _)| rs.orbit_size(mu)).sum();
    let mut t: i64 = 0;
    if rs.ty().weyl_group_order() < weight_count {
        // Only ν = (wρ − ρ)/2 can contribute, each with sign(w); walk the orbit of ρ instead.
        let mult: HashMap<&Weight, u64> = dominant.iter().map(|(w, m)| (w, *m)).collect();
        for (x, odd) in orbit_with_parity(rs, &rho) {
            let diff = x.sub(&rho);
            if diff.0.iter().any(|c| c % 2 != 0) {
                continue;
            }
            let nu = Weight(diff.0.iter().map(|c| c / 2).collect());
            if let Some(&m) = mult.get(&rs.to_dominant(&nu)) {
                t += if odd { -(m as i64) } else { m as i64 };
            }
        }
    } else {
        for (mu, m) in dominant.iter().cloned() {
            for w in rs.weyl_orbit(&mu) {
                if let Some((d, odd)) = shifted_dominant(rs, &w.scale(2).add(&rho)) {
                    if d == rho {
                        t += if odd { -(m as i64) } else { m as i64 };
                    }
                }
            }
        }
    }
    match t {
        1 => Ok(FsType::Orthogonal),
        -1 => Ok(FsType::Symplectic),
        _ => Err(Error::NotACharacter(format!("trivial multiplicity {t} in the second Adams power"))),
    }
}

/// Orbit of a regular weight, each element tagged with the parity of the Weyl
/// element reaching it.
fn orbit_with_parity(rs: &RootSystem, start: &Weight) -> Vec<(Weight, bool)> {
    let mut seen: HashMap<Weight, bool> = HashMap::from([(start.clone(), false)]);
    let mut queue = VecDeque::from([(start.clone(), false)]);
    while let Some((cur, odd)) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = rs.reflect(&cur, i);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), !odd);
                queue.push_back((next, !odd));
            }
        }
    }
    let mut out: Vec<(Weight, bool)> = seen.into_iter().collect();
    out.sort();
    out
}

/// Frobenius–Schur type by peeling `Sym²V` and `Alt²V` completely.
///
/// Slower than [`fs_type`]; kept as an independent route for small cases.
pub fn fs_type_by_peeling(rs: &RootSystem, lambda: &Weight) -> Result<FsType> {
    let v = freudenthal_character(rs, lambda)?;
    let zero = Weight::zero(rs.rank());
    let has_trivial = |c: &Character| -> Result<bool> { Ok(decompose(rs, c)?.iter().any(|(w, _)| *w == zero)) };
    let in_sym = has_trivial(&char_sym(2, &v)?)?;
    let in_alt = has_trivial(&char_alt(2, &v)?)?;
    Ok(match (in_sym, in_alt) {
        (true, false) => FsType::Orthogonal,
        (false, true) => FsType::Symplectic,
        _ => FsType::None,
    })
}
