//! Benchmark fixtures shared by the criterion targets.

use tannaka::schottky::{cc_odp, PpavInput};
use tannaka::{ChowVector, CleanCycleModel, CycleComponent, FgAbelianGroup, GroupRingElement};

/// A curve class with `c_0`, `c_1` given, on a `g`-dimensional abelian variety.
pub fn curve(g: usize, c0: i64, c1: i64) -> CleanCycleModel {
    let mut v = vec![0; g];
    v[0] = c0;
    v[1] = c1;
    let cm = ChowVector::from_ints(g, &v).expect("g >= 2");
    let comp = CycleComponent::new("C", 1, 1, cm, true).expect("valid component");
    CleanCycleModel::new(g, vec![comp], None).expect("valid cycle")
}

/// The clean characteristic cycle of a theta divisor with `k` double points.
pub fn theta(g: usize, k: u64) -> CleanCycleModel {
    cc_odp(&PpavInput::new(g, k)).expect("valid ppav")
}

/// `n` distinct points on a line in `ℤ ⊕ ℤ/6`, with coefficient one.
pub fn points(n: i64) -> GroupRingElement {
    let group = FgAbelianGroup::new(1, vec![6]).expect("valid group");
    let support: Vec<Vec<i64>> = (0..n).map(|i| vec![i * i - 3 * i, i % 6]).collect();
    GroupRingElement::from_support(&group, &support).expect("valid support")
}
