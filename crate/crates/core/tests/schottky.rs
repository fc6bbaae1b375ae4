use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use tannaka::cycles::{CleanCycleModel, CycleComponent};
use tannaka::lambda::{lambda_op, FgAbelianGroup, GroupRingElement, TensorConstruction};
use tannaka::num::{frac, rat};
use tannaka::schottky::{
    adjoint_obstruction, cc_odp, divisor_cm, fake_jacobian_solve, fourfold_table_expanded, genus5_c1_for_target,
    genus5_obstruction, s_sets, simplicity_criteria, summand_bound, theta_group, verify_inverse_galois, GroupFamily,
    PpavInput, ThetaGroupVerdict,
};
use tannaka::Error;

fn determined(p: &PpavInput) -> String {
    match theta_group(p).unwrap() {
        ThetaGroupVerdict::Determined { label, .. } => label,
        v => panic!("expected a group for {p:?}, got {v:?}"),
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

#[test]
fn groups_for_small_genus() {
    assert_eq!(determined(&PpavInput::new(4, 1)), "Sp_22");
    assert_eq!(determined(&PpavInput::new(4, 0)), "Sp_24");
    assert_eq!(determined(&PpavInput::new(5, 2).with_torsion_independent(false)), "SO_118");
    assert_eq!(determined(&PpavInput::new(5, 2).with_torsion_independent(false).with_sum_zero(false)), "O_118");
    assert_eq!(determined(&PpavInput::new(4, 2).with_gauss_finite(true)), "Sp_20");
    assert!(matches!(theta_group(&PpavInput::new(4, 2)).unwrap(), ThetaGroupVerdict::Undetermined { .. }));
}

#[test]
fn hypotheses_are_enforced() {
    let p = PpavInput { symmetric: false, ..PpavInput::new(4, 1) };
    assert_eq!(theta_group(&p), Err(Error::MissingHypothesis("symmetric")));
    assert!(cc_odp(&PpavInput::new(1, 0)).is_err());
    assert!(genus5_obstruction(&PpavInput::new(6, 0)).is_err());
}

#[test]
fn genus_five_layers() {
    let r = genus5_obstruction(&PpavInput::new(5, 3)).unwrap();
    assert_eq!(r.coefficient_values(), [2048, 384, 64, 80, 16].map(BigInt::from).to_vec());
    assert_eq!(r.alt4_coefficient, rat(20));
    assert_eq!(r.c1.coord(1), &frac(96, 5));
    assert_eq!(r.c1_over_theta4, frac(4, 5));
    assert!(!r.integral);
}

#[test]
fn fake_jacobians_of_curves() {
    for g in 3..=5usize {
        let c0 = 2 * g as u64 - 2;
        for hyper in [false, true] {
            let mut deg = binom(c0, g as u64 - 1);
            if hyper {
                deg -= binom(c0, g as u64 - 3);
            }
            let cm = divisor_cm(g, deg, Some(0));
            let t = CleanCycleModel::new(g, vec![CycleComponent::new("Theta", g - 1, 1, cm, false).unwrap()], None)
                .unwrap();
            let s = fake_jacobian_solve(g, &t, hyper).unwrap();
            assert_eq!(s.c0, BigInt::from(c0), "g={g} hyper={hyper}");
        }
    }
}

#[test]
fn fourfold_degrees_agree_off_the_hyperelliptic_locus() {
    for row in fourfold_table_expanded().unwrap() {
        if row.locus == "J4_h" {
            assert_ne!(row.gauss_degree, row.cc_degree);
        } else {
            assert_eq!(row.gauss_degree, row.cc_degree, "{}", row.locus);
        }
    }
}

#[test]
fn s_sets_are_disjoint_and_sorted() {
    let (minus, plus) = s_sets(10000);
    assert_eq!(minus, vec![2, 4, 20, 32, 56, 64, 252, 512, 1024, 3432, 8192]);
    assert_eq!(plus, vec![6, 7, 8, 16, 70, 128, 256, 924, 2048, 4096]);
    assert!(minus.iter().all(|d| !plus.contains(d)));
}

#[test]
fn adjoint_data_of_symplectic_groups() {
    for m in 1..=6 {
        let a = adjoint_obstruction(4, m).unwrap();
        assert!(a.sym2_irreducible, "m={m}");
        assert!(a.root_multiple, "m={m}");
        assert!(a.summand.no_positive_dimensional_decomposition);
    }
    let vacuous = summand_bound(&[(0, true), (5, false)], 4);
    assert!(vacuous.delta.is_none() && !vacuous.no_positive_dimensional_decomposition);
}

#[test]
fn simplicity_of_a_smooth_theta_divisor() {
    let cc = cc_odp(&PpavInput::new(4, 0)).unwrap();
    let r = simplicity_criteria(&cc, "Theta", 3).unwrap();
    assert!(r.large_divisor);
    assert!(r.simple_modulo_center);
}

#[test]
fn inverse_galois_on_exterior_squares() {
    let z = FgAbelianGroup::free(1);
    let x = GroupRingElement::from_support(&z, &[vec![0], vec![1], vec![3]]).unwrap();
    let target = lambda_op(2, &x).unwrap();
    let s = TensorConstruction::alt(2, TensorConstruction::var(1));
    assert!(verify_inverse_galois(&target, &s, 1, std::slice::from_ref(&x)).unwrap());
    assert!(!verify_inverse_galois(&target, &s, 2, &[x]).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_of_genus_decides_the_form(g in 2usize..=6, k in 0u64..=3) {
        let mut p = PpavInput::new(g, k);
        p.gauss_finite = true;
        prop_assume!(p.gauss_degree() > BigInt::from(0));
        if let Some(group) = theta_group(&p).unwrap().group() {
            let fam = group.family;
            if g % 2 == 0 {
                prop_assert!(fam == GroupFamily::Sp || fam == GroupFamily::Sl, "{:?}", group);
            } else {
                prop_assert!(fam != GroupFamily::Sp, "{:?}", group);
            }
        }
    }

    #[test]
    fn genus_five_ratio_is_four_fifths(t in 1i64..2000) {
        let c1 = genus5_c1_for_target(&rat(t));
        prop_assert_eq!(&c1 / rat(t), frac(4, 5));
        prop_assert_eq!(c1.is_integer(), t.is_multiple_of(&5));
    }

    #[test]
    fn cc_degree_matches_the_input(g in 2usize..=6, k in 0u64..=4) {
        let p = PpavInput::new(g, k);
        prop_assume!(p.gauss_degree() > BigInt::from(0));
        let cc = cc_odp(&p).unwrap();
        prop_assert_eq!(cc.degree(), p.cc_degree());
    }
}
