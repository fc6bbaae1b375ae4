mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use tannaka::lambda::{gr_multiply, FgAbelianGroup};
use tannaka::liere::{
    char_adams, char_tensor, classify_types, decompose, dominant_weights, freudenthal_character, fs_type,
    fs_type_by_peeling, is_wmf, is_wmf_by_multiplicities, orbit_rank_bound, Character, DynkinType, Family, FsType,
    RootSystem, Weight,
};

fn arb_weight(rank: usize, max: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, rank).prop_map(Weight)
}

#[test]
fn weyl_dimension_matches_hook_content() {
    for n in 1..=5 {
        let rs = RootSystem::new(DynkinType::new(Family::A, n).unwrap());
        let mut w = vec![0i64; n];
        // All weights with coefficients in 0..=2.
        loop {
            assert_eq!(rs.weyl_dim(&Weight(w.clone())).unwrap(), common::hook_content_dim(n + 1, &w), "A{n} {w:?}");
            let Some(i) = w.iter().position(|&c| c < 2) else { break };
            w[i] += 1;
            w[..i].iter_mut().for_each(|c| *c = 0);
        }
    }
}

#[test]
fn weyl_dimension_matches_orthogonal_coordinates() {
    for (family, lo) in [(Family::B, 2), (Family::C, 2), (Family::D, 3)] {
        for n in lo..=5 {
            let rs = RootSystem::new(DynkinType::new(family, n).unwrap());
            for i in 0..n {
                for c in 1..=2 {
                    let mut w = vec![0i64; n];
                    w[i] = c;
                    if i + 1 < n {
                        w[n - 1] = 1;
                    }
                    let expect = common::classical_dim(family, n, &w);
                    let got = BigRational::from_integer(rs.weyl_dim(&Weight(w.clone())).unwrap());
                    assert_eq!(got, expect, "{family:?}{n} {w:?}");
                }
            }
        }
    }
}

#[test]
fn exceptional_fundamental_dimensions() {
    let dims = |name: &str| {
        let rs = RootSystem::from_name(name).unwrap();
        (1..=rs.rank()).map(|i| rs.weyl_dim(&Weight::fundamental(rs.rank(), i)).unwrap()).collect::<Vec<_>>()
    };
    let b = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(dims("G2"), b(&[7, 14]));
    assert_eq!(dims("F4"), b(&[52, 1274, 273, 26]));
    assert_eq!(dims("E6"), b(&[27, 78, 351, 2925, 351, 27]));
    assert_eq!(dims("E7"), b(&[133, 912, 8645, 365750, 27664, 1539, 56]));
    assert_eq!(dims("E8")[7], BigInt::from(248));
    assert_eq!(dims("E8")[0], BigInt::from(3875));
}

#[test]
fn small_classification_matches_tables() {
    let types: Vec<DynkinType> = DynkinType::all_up_to(4);
    let found = classify_types(&types, 200).unwrap();
    let mut got: Vec<common::Expected> = found
        .iter()
        .map(|e| common::Expected {
            ty: e.ty.to_string(),
            weight: e.highest_weight.0.clone(),
            dim: e.dim.clone(),
            minuscule: e.minuscule,
            fs: e.fs_type,
        })
        .collect();
    got.sort();
    assert_eq!(got, common::expected_tables(&types, 200));
}

#[test]
fn symplectic_third_fundamental() {
    let rs = RootSystem::from_name("C3").unwrap();
    let w = Weight::fundamental(3, 3);
    assert_eq!(fs_type(&rs, &w).unwrap(), FsType::Symplectic);
    assert_eq!(dominant_weights(&rs, &w).unwrap().len(), 2);
}

#[test]
fn character_json_rejects_non_invariant_input() {
    let good = r#"{"type":"A1","weights":[[[1],1],[[-1],1]]}"#;
    let ch: Character = serde_json::from_str(good).unwrap();
    assert_eq!(ch.dim(), 2);
    let bad = r#"{"type":"A1","weights":[[[1],1]]}"#;
    assert!(serde_json::from_str::<Character>(bad).is_err());
}

fn small_types() -> Vec<&'static str> {
    vec!["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn freudenthal_dimension_is_weyl_dimension(t in 0usize..8, seed in arb_weight(4, 2)) {
        let rs = RootSystem::from_name(small_types()[t]).unwrap();
        let w = Weight(seed.0[..rs.rank()].to_vec());
        let ch = freudenthal_character(&rs, &w).unwrap();
        prop_assert_eq!(BigInt::from(ch.dim()), rs.weyl_dim(&w).unwrap());
        prop_assert!(ch.check_weyl_invariant(&rs).is_ok());
    }

    #[test]
    fn wmf_tests_agree(t in 0usize..8, seed in arb_weight(4, 3)) {
        let rs = RootSystem::from_name(small_types()[t]).unwrap();
        let w = Weight(seed.0[..rs.rank()].to_vec());
        prop_assert_eq!(is_wmf(&rs, &w).unwrap(), is_wmf_by_multiplicities(&rs, &w).unwrap());
    }

    #[test]
    fn indicator_agrees_with_peeling(t in 0usize..8, seed in arb_weight(4, 1)) {
        let rs = RootSystem::from_name(small_types()[t]).unwrap();
        let w = Weight(seed.0[..rs.rank()].to_vec());
        prop_assert_eq!(fs_type(&rs, &w).unwrap(), fs_type_by_peeling(&rs, &w).unwrap());
    }

    #[test]
    fn tensor_products_decompose_with_correct_dimension(t in 0usize..5, a in arb_weight(3, 1), b in arb_weight(3, 1)) {
        let rs = RootSystem::from_name(["A1", "A2", "B2", "G2", "A3"][t]).unwrap();
        let r = rs.rank();
        let (x, y) = (Weight(a.0[..r].to_vec()), Weight(b.0[..r].to_vec()));
        let prod = char_tensor(&freudenthal_character(&rs, &x).unwrap(), &freudenthal_character(&rs, &y).unwrap()).unwrap();
        let parts = decompose(&rs, &prod).unwrap();
        let total: BigInt = parts.iter().map(|(w, m)| rs.weyl_dim(w).unwrap() * BigInt::from(*m)).sum();
        prop_assert_eq!(total, BigInt::from(prod.dim()));
        // The top constituent is the sum of the highest weights.
        prop_assert!(parts.iter().any(|(w, m)| *w == x.add(&y) && *m == 1));
    }

    #[test]
    fn fibers_of_characters_form_a_ring_map(
        t in 0usize..4,
        a in arb_weight(3, 1),
        b in arb_weight(3, 1),
        h in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 2),
        n in 1i64..4,
    ) {
        let rs = RootSystem::from_name(["A2", "B2", "G2", "A3"][t]).unwrap();
        let r = rs.rank();
        let h: Vec<Vec<i64>> = h.into_iter().map(|row| row[..r].to_vec()).collect();
        let gamma = FgAbelianGroup::free(2);
        let x = freudenthal_character(&rs, &Weight(a.0[..r].to_vec())).unwrap();
        let y = freudenthal_character(&rs, &Weight(b.0[..r].to_vec())).unwrap();
        let fx = common::push_character(&x, &h, &gamma);
        let fy = common::push_character(&y, &h, &gamma);
        let fxy = common::push_character(&char_tensor(&x, &y).unwrap(), &h, &gamma);
        prop_assert_eq!(&fxy, &gr_multiply(&fx, &fy).unwrap());
        prop_assert_eq!(common::push_character(&char_adams(n, &x), &h, &gamma), tannaka::lambda::gr_adams(n, &fx));
    }

    #[test]
    fn orbits_are_at_least_as_large_as_the_rank(t in 0usize..8, seed in arb_weight(4, 3)) {
        let rs = RootSystem::from_name(small_types()[t]).unwrap();
        let w = Weight(seed.0[..rs.rank()].to_vec());
        prop_assume!(!w.is_zero());
        prop_assert!(orbit_rank_bound(&rs, &w));
        prop_assert_eq!(BigInt::from(rs.weyl_orbit(&w).len()), rs.orbit_size(&w));
    }
}
