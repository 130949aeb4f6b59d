use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fixtures::*;
use super::random::{random_chain_map, random_complex, SampleBounds};
use super::*;
use crate::linalg::{ExactMatrix, PresentedGroup, Ring};

const Z: Ring = Ring::Integers;

#[test]
fn validate_examples() {
    assert!(d1(Z).validate().is_valid());
    assert!(z0(Z).validate().is_valid());
    let one = ExactMatrix::scalar(Z, 1);
    let bad = ChainComplex::new(Z, 0, vec![1, 1, 1], vec![(1, one.clone()), (2, one)]).unwrap();
    assert_eq!(bad.validate(), Validity::Invalid { degree: 2, reason: "d ∘ d ≠ 0".into() });
}

#[test]
fn shape_errors_name_the_degree() {
    let err = ChainComplex::new(Z, 0, vec![1, 2], vec![(1, ExactMatrix::scalar(Z, 1))]).unwrap_err();
    assert!(matches!(err, crate::Error::InvalidComplex { degree: 1, .. }));
}

#[test]
fn shift_examples() {
    assert_eq!(shift(&s0(Z), 1), s1(Z));
    assert_eq!(s1(Z).rank(1), 1);
    let k = shift(&k2(), -1);
    assert_eq!(k.min_degree(), -1);
    assert_eq!(*k.d(0), ExactMatrix::scalar(Z, -2));
}

#[test]
fn trimming_makes_equality_canonical() {
    let padded = ChainComplex::new(Z, -2, vec![0, 0, 1, 0], vec![]).unwrap();
    assert_eq!(padded, s0(Z));
    assert_eq!(ChainComplex::new(Z, 5, vec![0, 0], vec![]).unwrap(), z0(Z));
}

#[test]
fn cone_of_identity_is_the_disk_up_to_sign() {
    let c = cone(&ChainMap::identity(&s0(Z)));
    assert!(c.complex.validate().is_valid());
    assert_eq!(c.complex.ranks(), &[1, 1]);
    assert_eq!(*c.complex.d(1), ExactMatrix::scalar(Z, -1));
    // Negating the degree-1 basis vector identifies it with D1.
    let iso = ChainMap::checked(c.complex.clone(), d1(Z), vec![(1, ExactMatrix::scalar(Z, -1)), (0, ExactMatrix::scalar(Z, 1))]);
    assert!(iso.is_ok());
}

#[test]
fn cone_of_zero_map_splits() {
    let s = s0(Z);
    let c = cone(&ChainMap::zero(&s, &s));
    assert_eq!(c.complex, direct_sum(&s1(Z), &s).unwrap().sum);
}

#[test]
fn cone_of_two_is_k2_up_to_sign() {
    let c = cone(&ChainMap::scalar(&s0(Z), 2));
    assert_eq!(c.complex.ranks(), k2().ranks());
    assert_eq!(*c.complex.d(1), ExactMatrix::scalar(Z, -2));
    assert_eq!(c.complex.homology(0), k2().homology(0));
}

#[test]
fn cone_maps_are_chain_maps() {
    let c = cone(&ChainMap::scalar(&s0(Z), 2));
    assert!(c.inclusion.validate().is_valid());
    assert!(c.projection.validate().is_valid());
    assert!(c.projection.after(&c.inclusion).is_zero());
}

#[test]
fn direct_sum_examples() {
    let s = s0(Z);
    assert_eq!(direct_sum(&z0(Z), &k2()).unwrap().sum, k2());
    assert_eq!(direct_sum(&s, &s).unwrap().sum.rank(0), 2);
    assert!(matches!(direct_sum(&s, &s0(Ring::f2())), Err(crate::Error::RingMismatch(..))));
    let b = direct_sum(&k2(), &d1(Z)).unwrap();
    assert!(b.pr1.after(&b.in1).is_identity());
    assert!(b.pr2.after(&b.in1).is_zero());
}

#[test]
fn hom_complex_examples() {
    assert_eq!(hom_complex(&s0(Z), &s0(Z)).unwrap(), s0(Z));
    let h = hom_complex(&k2(), &k2()).unwrap();
    assert_eq!((h.rank(1), h.rank(0), h.rank(-1)), (1, 2, 1));
    assert!(hom_complex(&z0(Z), &k2()).unwrap().is_zero());
}

#[test]
fn homology_examples() {
    assert_eq!(homology(&k2(), 0), PresentedGroup::cyclic(Z, 2));
    assert_eq!(homology(&k2(), 1), PresentedGroup::zero(Z));
    for n in -1..=2 {
        assert!(homology(&d1(Z), n).is_zero());
    }
    assert_eq!(homology(&f2k0(), 0), PresentedGroup::free(Ring::f2(), 1));
}

#[test]
fn hom_cycles_are_chain_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let b = SampleBounds::new(Z);
    for _ in 0..30 {
        let x = random_complex(&mut rng, &b);
        let y = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &x, &y);
        assert!(f.validate().is_valid(), "{f:?}");
        let hom = HomComplex::new(&x, &y).unwrap();
        assert!((&hom.differential(0) * &hom.flatten_map(&f)).is_zero());
    }
}

#[test]
fn homotopy_rejects_wrong_witness() {
    let d = d1(Z);
    let id = ChainMap::identity(&d);
    let zero = ChainMap::zero(&d, &d);
    assert!(Homotopy::new(zero.clone(), id.clone(), vec![(0, ExactMatrix::scalar(Z, 1))]).is_ok());
    assert!(Homotopy::new(zero, id, vec![(0, ExactMatrix::scalar(Z, 2))]).is_err());
}

fn arb_complex(ring: Ring) -> impl Strategy<Value = ChainComplex> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_complex(&mut rng, &SampleBounds::new(ring))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shifts_are_inverse(x in arb_complex(Z), k in -3i64..=3) {
        prop_assert_eq!(x.shift(k).shift(-k), x);
    }

    #[test]
    fn constructions_stay_valid(x in arb_complex(Z), y in arb_complex(Z), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_chain_map(&mut rng, &x, &y);
        let c = cone(&f);
        prop_assert!(c.complex.validate().is_valid());
        prop_assert!(c.inclusion.validate().is_valid());
        prop_assert!(c.projection.validate().is_valid());
        let s = direct_sum(&x, &y).unwrap();
        prop_assert!(s.sum.validate().is_valid());
        for n in s.sum.degrees() {
            prop_assert_eq!(s.sum.rank(n), x.rank(n) + y.rank(n));
        }
        prop_assert!(hom_complex(&x, &y).unwrap().validate().is_valid());
    }

    #[test]
    fn field_homology_is_torsion_free(x in arb_complex(Ring::f2())) {
        for n in x.degrees() {
            let h = x.homology(n);
            prop_assert!(h.torsion.is_empty());
            let dim = x.rank(n) - crate::linalg::rank(&x.d(n)) - crate::linalg::rank(&x.d(n + 1));
            prop_assert_eq!(h.free_rank, dim);
        }
    }
}

#[test]
fn homology_torsion_matches_smith() {
    // [ℤ² --diag(2,3)--> ℤ²] has H_0 = ℤ/6.
    let d = ExactMatrix::from_rows(Z, &[vec![2, 0], vec![0, 3]]);
    let x = ChainComplex::checked(Z, 0, vec![2, 2], vec![(1, d)]).unwrap();
    assert_eq!(x.homology(0).torsion, vec![BigInt::from(6)]);
}
