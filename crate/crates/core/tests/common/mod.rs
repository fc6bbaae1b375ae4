//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the algorithms it checks: characters come from the
//! Frobenius alternant, Kostka numbers from enumerating tableaux, exterior
//! powers from subsets, dimensions from hook lengths and classical product
//! formulas, and the weight-multiplicity-free tables are transcribed row by row.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use tannaka::lambda::{FgAbelianGroup, GroupRingElement};
use tannaka::liere::{Character, DynkinType, Family, FsType, Weight};

// ---------------------------------------------------------------- partitions

/// Partitions of `n` as plain vectors, largest part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of ways to distribute the parts of `beta` into `target.len()` bins
/// with bin sums `target`: the coefficient of `x^target` in `p_β`.
pub fn powersum_monomial_coeff(beta: &[u32], target: &[i64]) -> u64 {
    fn rec(beta: &[u32], rest: &mut Vec<i64>) -> u64 {
        let Some((&b, tail)) = beta.split_first() else {
            return u64::from(rest.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..rest.len() {
            if rest[i] >= i64::from(b) {
                rest[i] -= i64::from(b);
                total += rec(tail, rest);
                rest[i] += i64::from(b);
            }
        }
        total
    }
    rec(beta, &mut target.to_vec())
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `χ^α(β)` as the coefficient of `x^{α+δ}` in `a_δ·p_β` (Frobenius).
pub fn frobenius_character(alpha: &[u32], beta: &[u32]) -> i64 {
    let l = alpha.len();
    if l == 0 {
        return i64::from(beta.is_empty());
    }
    let delta: Vec<i64> = (0..l).map(|i| (l - 1 - i) as i64).collect();
    permutations(l)
        .into_iter()
        .map(|(sigma, sign)| {
            let exps: Vec<i64> = (0..l).map(|i| i64::from(alpha[i]) + delta[i] - delta[sigma[i]]).collect();
            if exps.iter().any(|&e| e < 0) {
                0
            } else {
                sign * powersum_monomial_coeff(beta, &exps) as i64
            }
        })
        .sum()
}

/// `z_β = Π i^{m_i} m_i!`.
pub fn z_of(beta: &[u32]) -> BigInt {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &b in beta {
        *counts.entry(b).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&i, &m)| {
        let fact: BigInt = (1..=m).map(BigInt::from).product();
        acc * BigInt::from(i).pow(m) * fact
    })
}

/// Number of semistandard tableaux of shape `alpha` and content `mu`.
///
/// The cells holding each value form a horizontal strip, so the shapes
/// `κ ⊂ ν` of consecutive steps interlace: `κ_i ≤ ν_i ≤ κ_{i-1}`.
pub fn kostka(alpha: &[u32], mu: &[u32]) -> u64 {
    fn strips(prev: &[u32], alpha: &[u32], row: usize, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == alpha.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if row == 0 { alpha[0] } else { alpha[row].min(prev[row - 1]) };
        for add in 0..=cap.saturating_sub(prev[row]).min(k) {
            cur.push(prev[row] + add);
            strips(prev, alpha, row + 1, k - add, cur, out);
            cur.pop();
        }
    }
    fn rec(shape: Vec<u32>, alpha: &[u32], mu: &[u32]) -> u64 {
        let Some((&k, rest)) = mu.split_first() else {
            return u64::from(shape.as_slice() == alpha);
        };
        let mut next = Vec::new();
        strips(&shape, alpha, 0, k, &mut Vec::new(), &mut next);
        next.into_iter().map(|t| rec(t, alpha, rest)).sum()
    }
    rec(vec![0; alpha.len()], alpha, mu)
}

/// Coefficient of `m_μ` in `p_β`.
pub fn powersum_to_monomial(beta: &[u32], mu: &[u32]) -> u64 {
    let target: Vec<i64> = mu.iter().map(|&m| i64::from(m)).collect();
    powersum_monomial_coeff(beta, &target)
}

pub fn rational_sum<I: IntoIterator<Item = BigRational>>(it: I) -> BigRational {
    it.into_iter().fold(BigRational::zero(), |a, b| a + b)
}

// ---------------------------------------------------------------- group rings

/// `λ^k` of an effective element: sum over `k`-subsets of the support,
/// counted with multiplicity.
pub fn exterior_power_by_subsets(x: &GroupRingElement, k: usize) -> GroupRingElement {
    let group = x.group().clone();
    let mut points = Vec::new();
    for (e, c) in x.terms() {
        let c: u64 = c.try_into().expect("effective element");
        for _ in 0..c {
            points.push(e.clone());
        }
    }
    let mut out = GroupRingElement::zero(&group);
    fn rec(
        points: &[tannaka::lambda::GroupElement],
        start: usize,
        k: usize,
        acc: tannaka::lambda::GroupElement,
        group: &FgAbelianGroup,
        out: &mut GroupRingElement,
    ) {
        if k == 0 {
            out.add_term(acc, BigInt::one());
            return;
        }
        for i in start..points.len() {
            rec(points, i + 1, k - 1, group.add(&acc, &points[i]), group, out);
        }
    }
    rec(&points, 0, k, group.zero(), &group, &mut out);
    out
}

/// Pushes a character along the linear map `h` from the weight lattice to the
/// free part of `group`: the fiber of the cycle attached to the representation.
pub fn push_character(ch: &Character, h: &[Vec<i64>], group: &FgAbelianGroup) -> GroupRingElement {
    let mut out = GroupRingElement::zero(group);
    for (w, &m) in ch.weights() {
        let mut coords = vec![0i64; group.width()];
        for (r, row) in h.iter().enumerate() {
            coords[r] = row.iter().zip(&w.0).map(|(a, b)| a * b).sum();
        }
        out.add_term(group.element(&coords).unwrap(), BigInt::from(m));
    }
    out
}

// ---------------------------------------------------------------- dimensions

/// Dimension of the `Sl_n` representation with highest weight `λ` by the
/// hook-content formula on the associated partition.
pub fn hook_content_dim(n: usize, lambda: &[i64]) -> BigInt {
    // Row i has length Σ_{j ≥ i} λ_j.
    let rows: Vec<i64> = (0..lambda.len()).map(|i| lambda[i..].iter().sum()).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..r {
            let content = j - i as i64;
            let arm = r - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&rr| rr > j).count() as i64;
            num *= BigInt::from(n as i64 + content);
            den *= BigInt::from(arm + leg + 1);
        }
    }
    num / den
}

/// Weyl dimension for `B_n`, `C_n`, `D_n` in orthogonal coordinates, using
/// the textbook positive roots `ε_i ± ε_j` together with `ε_i` (B) or `2ε_i` (C).
pub fn classical_dim(family: Family, n: usize, lambda: &[i64]) -> BigRational {
    // ε-coordinates of λ, doubled so that spin weights stay integral.
    let mut eps = vec![0i64; n];
    for (i, &c) in lambda.iter().enumerate() {
        let i1 = i + 1;
        match family {
            Family::B if i1 == n => eps.iter_mut().for_each(|e| *e += c),
            Family::D if i1 == n => eps.iter_mut().for_each(|e| *e += c),
            Family::D if i1 + 1 == n => {
                eps.iter_mut().take(n - 1).for_each(|e| *e += c);
                eps[n - 1] -= c;
            }
            Family::B | Family::D => eps.iter_mut().take(i1).for_each(|e| *e += 2 * c),
            _ => eps.iter_mut().take(i1).for_each(|e| *e += 2 * c),
        }
    }
    let rho2: Vec<i64> = match family {
        Family::B => (0..n).map(|i| 2 * (n - i) as i64 - 1).collect(),
        Family::C => (0..n).map(|i| 2 * (n - i) as i64).collect(),
        Family::D => (0..n).map(|i| 2 * (n - 1 - i) as i64).collect(),
        _ => panic!("classical families only"),
    };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut root = |v: &dyn Fn(&[i64]) -> i64| {
        let top: Vec<i64> = eps.iter().zip(&rho2).map(|(a, b)| a + b).collect();
        num *= BigInt::from(v(&top));
        den *= BigInt::from(v(&rho2));
    };
    for i in 0..n {
        for j in i + 1..n {
            root(&|x: &[i64]| x[i] - x[j]);
            root(&|x: &[i64]| x[i] + x[j]);
        }
        match family {
            Family::B | Family::C => root(&|x: &[i64]| x[i]),
            _ => {}
        }
    }
    BigRational::new(num, den)
}

// ---------------------------------------------------------------- tables

/// One expected entry of the weight-multiplicity-free tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Expected {
    pub ty: String,
    pub weight: Vec<i64>,
    pub dim: BigInt,
    pub minuscule: bool,
    pub fs: FsType,
}

fn binom(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = c;
    v
}

/// The two tables transcribed for the given types, up to dimension `max_dim`,
/// with `Sym^k(C²)` recorded as self-dual: orthogonal for even `k`,
/// symplectic for odd `k`. The trivial representation is not listed.
pub fn expected_tables(types: &[DynkinType], max_dim: u64) -> Vec<Expected> {
    let bound = BigInt::from(max_dim);
    let mut out = Vec::new();
    for ty in types {
        let n = ty.rank;
        let name = ty.to_string();
        let mut push = |weight: Vec<i64>, dim: BigInt, minuscule: bool, fs: FsType| {
            if dim <= bound {
                out.push(Expected { ty: name.clone(), weight, dim, minuscule, fs });
            }
        };
        match ty.family {
            Family::A => {
                let nn = n as u64 + 1;
                for k in 1..=n {
                    let fs = if nn == 2 * k as u64 {
                        if nn.is_multiple_of(4) {
                            FsType::Orthogonal
                        } else {
                            FsType::Symplectic
                        }
                    } else {
                        FsType::None
                    };
                    push(unit(n, k, 1), binom(nn, k as u64), true, fs);
                }
                let mut k = 2u64;
                while binom(nn + k - 1, k) <= bound {
                    let fs = match (nn, k % 2) {
                        (2, 0) => FsType::Orthogonal,
                        (2, _) => FsType::Symplectic,
                        _ => FsType::None,
                    };
                    push(unit(n, 1, k as i64), binom(nn + k - 1, k), false, fs);
                    if n > 1 {
                        push(unit(n, n, k as i64), binom(nn + k - 1, k), false, fs);
                    }
                    k += 1;
                }
            }
            Family::B => {
                let spin_fs = if matches!(n % 4, 1 | 2) { FsType::Symplectic } else { FsType::Orthogonal };
                push(unit(n, n, 1), BigInt::from(2).pow(n as u32), true, spin_fs);
                push(unit(n, 1, 1), BigInt::from(2 * n + 1), false, FsType::Orthogonal);
            }
            Family::C => {
                push(unit(n, 1, 1), BigInt::from(2 * n), true, FsType::Symplectic);
                if n == 3 {
                    push(unit(3, 3, 1), BigInt::from(14), false, FsType::Symplectic);
                }
            }
            Family::D => {
                push(unit(n, 1, 1), BigInt::from(2 * n), true, FsType::Orthogonal);
                let half = match n % 4 {
                    0 => FsType::Orthogonal,
                    2 => FsType::Symplectic,
                    _ => FsType::None,
                };
                push(unit(n, n - 1, 1), BigInt::from(2).pow(n as u32 - 1), true, half);
                push(unit(n, n, 1), BigInt::from(2).pow(n as u32 - 1), true, half);
            }
            Family::E if n == 6 => {
                push(unit(6, 1, 1), BigInt::from(27), true, FsType::None);
                push(unit(6, 6, 1), BigInt::from(27), true, FsType::None);
            }
            Family::E if n == 7 => push(unit(7, 7, 1), BigInt::from(56), true, FsType::Symplectic),
            Family::G => push(unit(2, 1, 1), BigInt::from(7), false, FsType::Orthogonal),
            _ => {}
        }
    }
    out.sort();
    out
}

/// The symplectic minuscule and orthogonal dimensions from the transcribed
/// tables, leaving out standard representations and `Sym^k(C²)`.
pub fn expected_exceptional_dims(entries: &[Expected]) -> (Vec<u64>, Vec<u64>) {
    let standard = |e: &Expected| {
        let w = &e.weight;
        let first = w.iter().position(|&c| c != 0) == Some(0) && w.iter().skip(1).all(|&c| c == 0);
        (e.ty.starts_with('B') || e.ty.starts_with('C') || e.ty.starts_with('D')) && first && w[0] == 1
            || e.ty == "A1" && w[0] >= 2
    };
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for e in entries.iter().filter(|e| !standard(e)) {
        let d: u64 = (&e.dim).try_into().unwrap();
        match e.fs {
            FsType::Symplectic if e.minuscule => minus.push(d),
            FsType::Orthogonal => plus.push(d),
            _ => {}
        }
    }
    for v in [&mut minus, &mut plus] {
        v.sort_unstable();
        v.dedup();
    }
    (minus, plus)
}

pub fn weight(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}
