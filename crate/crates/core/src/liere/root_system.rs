use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::factorial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Dynkin type such as `A5`, `E7` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    /// Accepts `A_n (n ≥ 1)`, `B_n (n ≥ 2)`, `C_n (n ≥ 2)`, `D_n (n ≥ 3)`, `E6..E8`, `F4`, `G2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnknownType(format!("{family:?}{rank}")));
        }
        Ok(DynkinType { family, rank })
    }

    /// Every simple Lie algebra of rank at most `max_rank`, each listed once:
    /// `A_n (n ≥ 1)`, `B_n (n ≥ 2)`, `C_n (n ≥ 3)`, `D_n (n ≥ 4)` and the exceptional types.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        let mut push = |f, lo: usize| {
            for n in lo..=max_rank {
                if let Ok(t) = DynkinType::new(f, n) {
                    out.push(t);
                }
            }
        };
        push(Family::A, 1);
        push(Family::B, 2);
        push(Family::C, 3);
        push(Family::D, 4);
        push(Family::E, 6);
        push(Family::F, 4);
        push(Family::G, 2);
        out
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> BigInt {
        let n = self.rank as u64;
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => BigInt::from(2).pow(self.rank as u32) * factorial(n),
            Family::D => BigInt::from(2).pow(self.rank as u32 - 1) * factorial(n),
            Family::E => BigInt::from(match self.rank {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => BigInt::from(1152),
            Family::G => BigInt::from(12),
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => (0..n - 1).for_each(|i| link(i, i + 1)),
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            Family::F => (0..3).for_each(|i| link(i, i + 1)),
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => c[n - 1][n - 2] = -2,
            Family::C => c[n - 2][n - 1] = -2,
            Family::F => c[2][1] = -2,
            Family::G => c[0][1] = -3,
            _ => {}
        }
        c
    }

    /// Half squared lengths of the simple roots, short roots normalized to one.
    fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
            _ => vec![1; n],
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        DynkinType::new(family, rank).map_err(|_| bad())
    }
}

impl TryFrom<String> for DynkinType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(t: DynkinType) -> Self {
        t.to_string()
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_i`, one-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, n: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * n).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    /// Label such as `w1+2w3` (fundamental weights), or `0`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("w{}", i + 1),
                _ => format!("{c}w{}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Parses `0,0,1` or `(0,0,1)`.
impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        body.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad weight coordinate `{t}`"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Immutable data of a simple root system in Bourbaki numbering.
///
/// `cartan[i][j] = ⟨α_i^∨, α_j⟩`, so the simple root `α_j` has fundamental-weight
/// coordinates given by column `j`, and `s_i(λ)_k = λ_k − λ_i·cartan[k][i]`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: DynkinType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    det: i64,
    adj: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_wt: Vec<Weight>,
    minus_w0: Vec<usize>,
}

impl RootSystem {
    pub fn new(ty: DynkinType) -> Self {
        let cartan = ty.cartan();
        let sym = ty.symmetrizer();
        let (det, adj) = integer_inverse(&cartan);
        let mut rs = RootSystem {
            ty,
            cartan,
            sym,
            det,
            adj,
            positive_roots: Vec::new(),
            positive_roots_wt: Vec::new(),
            minus_w0: Vec::new(),
        };
        rs.positive_roots = rs.generate_positive_roots();
        rs.positive_roots_wt = rs.positive_roots.iter().map(|c| rs.root_to_weight(c)).collect();
        rs.minus_w0 = (1..=ty.rank)
            .map(|i| {
                let low = rs.to_antidominant(&Weight::fundamental(ty.rank, i)).neg();
                low.0.iter().position(|&x| x == 1).expect("-w0 permutes fundamental weights")
            })
            .collect();
        rs
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_i)/2`, short roots normalized to one.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// Determinant of the Cartan matrix, the order of `P/Q`.
    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_roots_weights(&self) -> &[Weight] {
        &self.positive_roots_wt
    }

    /// Simple root `α_i` (one-based) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i - 1]).collect())
    }

    /// Simple coroot `α_i^∨` (one-based) as a functional on fundamental-weight coordinates.
    pub fn simple_coroot(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i - 1] = 1;
        v
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// The involution `-w₀` as a permutation of fundamental weights (zero-based).
    pub fn minus_w0(&self) -> &[usize] {
        &self.minus_w0
    }

    pub fn apply_minus_w0(&self, w: &Weight) -> Weight {
        let mut out = vec![0; self.rank()];
        for (i, &c) in w.0.iter().enumerate() {
            out[self.minus_w0[i]] = c;
        }
        Weight(out)
    }

    pub fn root_to_weight(&self, c: &[i64]) -> Weight {
        Weight((0..self.rank()).map(|k| (0..self.rank()).map(|j| c[j] * self.cartan[k][j]).sum()).collect())
    }

    /// Simple-root coordinates of a weight, exact.
    pub fn weight_to_root(&self, w: &Weight) -> Vec<BigRational> {
        (0..self.rank())
            .map(|i| {
                let num: i64 = (0..self.rank()).map(|j| self.adj[i][j] * w.0[j]).sum();
                BigRational::new(BigInt::from(num), BigInt::from(self.det))
            })
            .collect()
    }

    /// Height of `w` measured in simple roots, if `w` lies in the root lattice.
    pub fn root_height(&self, w: &Weight) -> Option<i64> {
        let mut total = 0i64;
        for i in 0..self.rank() {
            let num: i64 = (0..self.rank()).map(|j| self.adj[i][j] * w.0[j]).sum();
            if num % self.det != 0 {
                return None;
            }
            total += num / self.det;
        }
        Some(total)
    }

    /// Order of `w` in `P/Q`.
    pub fn order_mod_root_lattice(&self, w: &Weight) -> u64 {
        self.weight_to_root(w).iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom())).to_u64().expect("small order")
    }

    /// `det(C)·(x, y)`, an integer for all weights.
    pub fn scaled_inner(&self, x: &Weight, y: &Weight) -> i128 {
        let mut s = 0i128;
        for i in 0..self.rank() {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                s += i128::from(x.0[i]) * i128::from(self.adj[i][j] * self.sym[i]) * i128::from(y.0[j]);
            }
        }
        s
    }

    /// `(ν, α)` for a root given in simple-root coordinates; always an integer.
    pub fn pair_with_root(&self, nu: &Weight, root: &[i64]) -> i64 {
        root.iter().zip(&self.sym).zip(&nu.0).map(|((c, d), v)| c * d * v).sum()
    }

    /// Squared length `(α, α)` of a root in simple-root coordinates.
    pub fn root_norm(&self, root: &[i64]) -> i64 {
        let wt = self.root_to_weight(root);
        self.pair_with_root(&wt, root)
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let li = w.0[i];
        if li == 0 {
            return w.clone();
        }
        Weight(w.0.iter().enumerate().map(|(k, &x)| x - li * self.cartan[k][i]).collect())
    }

    /// Dominant representative of the orbit of `w` and the parity of the reflections used.
    pub fn to_dominant_with_parity(&self, w: &Weight) -> (Weight, bool) {
        let mut cur = w.clone();
        let mut odd = false;
        while let Some(i) = cur.0.iter().position(|&x| x < 0) {
            cur = self.reflect(&cur, i);
            odd = !odd;
        }
        (cur, odd)
    }

    pub fn to_dominant(&self, w: &Weight) -> Weight {
        self.to_dominant_with_parity(w).0
    }

    pub fn to_antidominant(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.0.iter().position(|&x| x > 0) {
            cur = self.reflect(&cur, i);
        }
        cur
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::Precondition(format!(
                "weight {w} has {} coordinates, {} needs {}",
                w.rank(),
                self.ty,
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// The full Weyl orbit, by breadth-first search downward from the dominant representative.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        self.orbit_walk(w, usize::MAX).into_iter().collect()
    }

    /// True when the orbit of `w` has at least `k` elements; stops as soon as it does.
    pub fn orbit_size_at_least(&self, w: &Weight, k: usize) -> bool {
        self.orbit_walk(w, k).len() >= k
    }

    fn orbit_walk(&self, w: &Weight, cap: usize) -> Vec<Weight> {
        let start = self.to_dominant(w);
        let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            if out.len() >= cap {
                break;
            }
            for i in 0..self.rank() {
                if cur.0[i] > 0 {
                    let next = self.reflect(&cur, i);
                    if seen.insert(next.clone()) {
                        out.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        out
    }

    /// Exact orbit size `|W| / |W_λ|`, where the stabilizer of the dominant
    /// representative is the parabolic subgroup on its zero coordinates.
    pub fn orbit_size(&self, w: &Weight) -> BigInt {
        let dom = self.to_dominant(w);
        let zeros: Vec<usize> = (0..self.rank()).filter(|&i| dom.0[i] == 0).collect();
        self.ty.weyl_group_order() / self.parabolic_order(&zeros)
    }

    fn parabolic_order(&self, nodes: &[usize]) -> BigInt {
        let mut rest: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut order = BigInt::one();
        while let Some(&seed) = rest.iter().next() {
            let mut comp = vec![seed];
            rest.remove(&seed);
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                let nbrs: Vec<usize> = rest.iter().copied().filter(|&j| self.cartan[i][j] != 0).collect();
                for j in nbrs {
                    rest.remove(&j);
                    comp.push(j);
                }
                k += 1;
            }
            order *= self.component_weyl_order(&comp);
        }
        order
    }

    fn component_weyl_order(&self, comp: &[usize]) -> BigInt {
        let n = comp.len();
        let roots = self
            .positive_roots
            .iter()
            .filter(|c| c.iter().enumerate().all(|(i, &x)| x == 0 || comp.contains(&i)))
            .count();
        let laced = comp.iter().all(|&i| comp.iter().all(|&j| i == j || self.cartan[i][j] >= -1));
        let family = match (laced, roots) {
            (true, r) if r == n * (n + 1) / 2 => Family::A,
            (true, r) if r == n * (n - 1) => Family::D,
            (true, _) => Family::E,
            (false, 24) if n == 4 => Family::F,
            (false, 6) if n == 2 => Family::G,
            (false, _) => Family::B,
        };
        DynkinType { family, rank: n }.weyl_group_order()
    }

    /// Weyl dimension formula `Π (λ+ρ, α)/(ρ, α)` over positive roots.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_dominant(lambda)?;
        Ok(self.weyl_dim_unchecked(lambda))
    }

    pub(crate) fn weyl_dim_unchecked(&self, lambda: &Weight) -> BigInt {
        let lr = lambda.add(&self.rho());
        let rho = self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for root in &self.positive_roots {
            num *= self.pair_with_root(&lr, root);
            den *= self.pair_with_root(&rho, root);
        }
        num / den
    }

    /// Positive roots via root strings: `β + α_i` is a root iff `p − ⟨β, α_i^∨⟩ > 0`,
    /// where `p` is the largest integer with `β − p·α_i` a root.
    fn generate_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut levels: Vec<Vec<Vec<i64>>> = vec![(0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect()];
        known.extend(levels[0].iter().cloned());
        loop {
            let mut next = BTreeSet::new();
            for beta in levels.last().expect("nonempty") {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] >= 0 && known.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            known.extend(next.iter().cloned());
            levels.push(next.into_iter().collect());
        }
        levels.into_iter().flatten().collect()
    }
}

/// Determinant and adjugate of an integer matrix, by exact elimination.
fn integer_inverse(m: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrices are invertible");
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    let d = det.to_integer();
    let adj = a
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    let v = x * BigRational::from_integer(d.clone());
                    debug_assert!(v.is_integer());
                    v.to_integer().to_i64().expect("small adjugate")
                })
                .collect()
        })
        .collect();
    (d.to_i64().expect("small determinant"), adj)
}
