use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::complex::fixtures::*;
use crate::complex::random::{random_chain_map, random_complex, SampleBounds};
use crate::complex::{cone, direct_sum, ChainComplex, ChainMap, HomComplex};
use crate::dw_exact::{admissible_epi, admissible_mono, sample::random_ses, DwSes};
use crate::error::Error;
use crate::linalg::{ExactMatrix, PresentedGroup, Ring};

const Z: Ring = Ring::Integers;

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Isomorphic by `±1` in each degree.
fn sign_iso(a: &ChainComplex, b: &ChainComplex) -> bool {
    a.ranks() == b.ranks()
        && a.min_degree() == b.min_degree()
        && a.degrees().all(|n| *a.d(n) == *b.d(n) || *a.d(n) == -&*b.d(n))
}

#[test]
fn contractibility_examples() {
    let h = is_contractible(&d1(Z)).unwrap();
    assert_eq!(h.component(0), ExactMatrix::scalar(Z, 1));
    assert!(is_contractible(&k2()).is_none());
    assert!(is_contractible(&z0(Z)).is_some());
    assert!(is_contractible(&s0(Z)).is_none());
}

#[test]
fn homotopy_examples() {
    let k = k2();
    let id = ChainMap::identity(&k);
    let zero = ChainMap::zero(&k, &k);
    let h = find_homotopy(&id, &id).unwrap().unwrap();
    assert!(h.components().iter().all(|(_, m)| m.is_zero()));
    assert!(find_homotopy(&id, &zero).unwrap().is_none());
    let d = d1(Z);
    assert!(find_homotopy(&ChainMap::identity(&d), &ChainMap::zero(&d, &d)).unwrap().is_some());
    assert!(find_homotopy(&id, &ChainMap::identity(&s0(Z))).is_err());
}

#[test]
fn factorization_examples() {
    let k = k2();
    let id = ChainMap::identity(&k);
    let fac = homotopic_by_factorization(&id, &id).unwrap().unwrap();
    assert!(fac.beta.is_zero());
    assert!(is_contractible(fac.middle()).is_some());
    assert!(homotopic_by_factorization(&id, &ChainMap::zero(&k, &k)).unwrap().is_none());
    let d = d1(Z);
    let fac = homotopic_by_factorization(&ChainMap::identity(&d), &ChainMap::zero(&d, &d)).unwrap().unwrap();
    assert!(fac.q.after(&fac.beta).neg().is_identity());
}

#[test]
fn homotopy_oracles_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ring in [Z, Ring::f2()] {
        let b = SampleBounds::new(ring);
        for _ in 0..60 {
            let x = random_complex(&mut rng, &b);
            let y = random_complex(&mut rng, &b);
            let f = random_chain_map(&mut rng, &x, &y);
            // Often homotopic: perturb f by a boundary.
            let hom = HomComplex::new(&x, &y).unwrap();
            let g = if rand::Rng::gen_bool(&mut rng, 0.5) {
                let h = crate::complex::random::random_matrix(&mut rng, ring, hom.dim(1), 1, 2);
                f.try_add(&hom.map_from_vector(&(&hom.differential(1) * &h))).unwrap()
            } else {
                random_chain_map(&mut rng, &x, &y)
            };
            let a = find_homotopy(&f, &g).unwrap();
            let b2 = homotopic_by_factorization(&f, &g).unwrap();
            assert_eq!(a.is_some(), b2.is_some(), "{f:?} vs {g:?}");
            if let Some(fac) = b2 {
                assert_eq!(fac.q.after(&fac.beta), g.try_sub(&f).unwrap());
                assert!(fac.beta.validate().is_valid());
            }
        }
    }
}

#[test]
fn homotopy_is_compatible_with_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let b = SampleBounds::new(Z);
    let mut hits = 0;
    for _ in 0..40 {
        let x = random_complex(&mut rng, &b);
        let y = random_complex(&mut rng, &b);
        let w = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &x, &y);
        let hom = HomComplex::new(&x, &y).unwrap();
        let h = crate::complex::random::random_matrix(&mut rng, Z, hom.dim(1), 1, 2);
        let g = f.try_add(&hom.map_from_vector(&(&hom.differential(1) * &h))).unwrap();
        assert!(find_homotopy(&f, &g).unwrap().is_some());
        let k = random_chain_map(&mut rng, &y, &w);
        let pre = random_chain_map(&mut rng, &w, &x);
        assert!(find_homotopy(&k.after(&f), &k.after(&g)).unwrap().is_some());
        assert!(find_homotopy(&f.after(&pre), &g.after(&pre)).unwrap().is_some());
        hits += usize::from(!f.try_sub(&g).unwrap().is_zero());
    }
    assert!(hits > 0);
}

#[test]
fn cone_of_identity_is_contractible() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let b = SampleBounds::new(Z);
    for _ in 0..30 {
        let x = random_complex(&mut rng, &b);
        assert!(is_contractible(&cone(&ChainMap::identity(&x)).complex).is_some());
        assert!(is_contractible(&contractible_cover(&x)).is_some());
    }
}

#[test]
fn enough_injectives_and_projectives() {
    let s = s0(Z);
    let inj = enough_injectives(&s);
    assert!(sign_iso(inj.middle(), &d1(Z)));
    assert_eq!(*inj.quotient(), s1(Z));
    let proj = enough_projectives(&s);
    assert_eq!(proj.middle().degrees(), -1..=0);
    assert_eq!(proj.middle().ranks(), &[1, 1]);
    assert!(is_contractible(proj.middle()).is_some());
    assert_eq!(*proj.quotient(), s);
    for e in [enough_injectives(&z0(Z)), enough_projectives(&z0(Z))] {
        assert!(e.middle().is_zero() && e.sub().is_zero() && e.quotient().is_zero());
    }
}

#[test]
fn path_object_examples() {
    for y in [z0(Z), s0(Z), k2(), d1(Z)] {
        let po = path_object(&y);
        let yy = direct_sum(&y, &y).unwrap();
        let id = ChainMap::identity(&y);
        assert_eq!(po.p.after(&po.i), yy.pairing(&id, &id));
        assert!(po.i.validate().is_valid() && po.p.validate().is_valid());
        let ci = classify(&po.i);
        assert!(ci.is_trivial_cofibration && ci.is_cofibration && ci.is_weak_equivalence);
        assert!(classify(&po.p).is_fibration);
        let (phi, psi) = &po.kernel_iso;
        assert!(phi.validate().is_valid() && psi.validate().is_valid());
        assert!(psi.after(phi).is_identity());
        assert!(phi.after(psi).is_identity());
    }
}

#[test]
fn classify_examples() {
    let id = classify(&ChainMap::identity(&k2()));
    assert!(id.is_cofibration && id.is_trivial_cofibration && id.is_fibration && id.is_trivial_fibration);
    assert!(id.is_weak_equivalence);
    let inc = classify(&s0_into_d1(Z));
    assert_eq!(inc, MapClass { is_cofibration: true, ..MapClass::default() });
    let pr = classify(&d1_onto_s1(Z));
    assert_eq!(pr, MapClass { is_fibration: true, ..MapClass::default() });
    // D1 → 0 is a weak equivalence and a trivial fibration.
    let d = d1(Z);
    let c = classify(&ChainMap::zero(&d, &z0(Z)));
    assert!(c.is_weak_equivalence && c.is_trivial_fibration && !c.is_cofibration);
}

#[test]
fn map_class_flags_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let b = SampleBounds::new(Z);
    for _ in 0..60 {
        let x = random_complex(&mut rng, &b);
        let y = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &x, &y);
        let c = classify(&f);
        if c.is_trivial_cofibration {
            assert!(c.is_cofibration && c.is_weak_equivalence);
        }
        if c.is_trivial_fibration {
            assert!(c.is_fibration && c.is_weak_equivalence);
        }
        if c.is_cofibration && c.is_weak_equivalence {
            assert!(c.is_trivial_cofibration);
        }
        assert_eq!(c.is_weak_equivalence, weak_equivalence_by_kernel(&f));
        if let Some(eq) = homotopy_inverse(&f).unwrap() {
            assert!(eq.inverse.validate().is_valid());
            assert!(eq.left.verify().is_valid() && eq.right.verify().is_valid());
        }
    }
}

#[test]
fn two_out_of_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let b = SampleBounds::with_limits(Ring::f2(), 2, 3, 1);
    let mut weq_pairs = 0;
    for _ in 0..80 {
        let x = random_complex(&mut rng, &b);
        let y = random_complex(&mut rng, &b);
        let z = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &x, &y);
        let g = random_chain_map(&mut rng, &y, &z);
        let flags = [f.clone(), g.clone(), g.after(&f)].map(|m| classify(&m).is_weak_equivalence);
        let count = flags.iter().filter(|&&w| w).count();
        assert_ne!(count, 2, "two of three weak equivalences: {flags:?}");
        weq_pairs += usize::from(count == 3);
    }
    assert!(weq_pairs > 0);
}

#[test]
fn factorization_examples_on_s0() {
    let s = s0(Z);
    for c in [1, 0, 2] {
        let f = ChainMap::scalar(&s, c);
        let a = factor_trivcof_fib(&f);
        let b = factor_cof_trivfib(&f);
        assert_eq!(a.p.after(&a.i), f);
        assert_eq!(b.p.after(&b.i), f);
        assert!(classify(&a.i).is_trivial_cofibration);
        assert!(classify(&a.p).is_fibration);
        assert!(classify(&b.i).is_cofibration);
        assert!(classify(&b.p).is_trivial_fibration);
    }
}

#[test]
fn factorizations_on_random_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let b = SampleBounds::new(Z);
    for _ in 0..30 {
        let x = random_complex(&mut rng, &b);
        let y = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &x, &y);
        for fac in [factor_trivcof_fib(&f), factor_cof_trivfib(&f)] {
            assert!(fac.i.validate().is_valid() && fac.p.validate().is_valid());
            assert_eq!(fac.p.after(&fac.i), f);
        }
        assert!(classify(&factor_trivcof_fib(&f).i).is_trivial_cofibration);
        assert!(classify(&factor_cof_trivfib(&f).p).is_trivial_fibration);
    }
}

#[test]
fn pi_group_examples() {
    let k = k2();
    let p = pi_group(&k, &k).unwrap();
    assert_eq!(p.group, PresentedGroup::cyclic(Z, 2));
    assert_eq!(p.reduce(&ChainMap::identity(&k)).unwrap(), big(&[1]));
    assert_eq!(p.reduce(&ChainMap::scalar(&k, 2)).unwrap(), big(&[0]));
    assert_eq!(p.reduce(&ChainMap::scalar(&k, 3)).unwrap(), big(&[1]));
    assert_eq!(pi_group(&s0(Z), &s0(Z)).unwrap().group, PresentedGroup::free(Z, 1));
    assert!(pi_group(&d1(Z), &d1(Z)).unwrap().group.is_zero());
    assert!(matches!(pi_group(&s0(Z), &s0(Ring::f2())), Err(Error::RingMismatch(..))));
}

#[test]
fn pi_group_generators_reduce_to_units() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let b = SampleBounds::new(Z);
    for _ in 0..40 {
        let x = random_complex(&mut rng, &b);
        let y = random_complex(&mut rng, &b);
        let p = pi_group(&x, &y).unwrap();
        assert_eq!(p.group, crate::complex::homology(&crate::complex::hom_complex(&x, &y).unwrap(), 0));
        let n = p.group.num_generators();
        for (i, g) in p.generators.iter().enumerate() {
            assert!(g.validate().is_valid());
            assert_eq!(p.reduce(g).unwrap(), crate::linalg::unit_coordinates(n, i));
        }
        let f = random_chain_map(&mut rng, &x, &y);
        let g = random_chain_map(&mut rng, &x, &y);
        let same = p.reduce(&f).unwrap() == p.reduce(&g).unwrap();
        assert_eq!(same, find_homotopy(&f, &g).unwrap().is_some());
    }
}

#[test]
fn composition_of_classes() {
    let k = k2();
    let p = pi_group(&k, &k).unwrap();
    let one = big(&[1]);
    assert_eq!(p.compose(&one, &p, &one, &p).unwrap(), one);
}

#[test]
fn ext_examples() {
    assert_eq!(ext_dw(1, &s1(Z), &s0(Z)).unwrap(), PresentedGroup::free(Z, 1));
    assert!(ext_dw(1, &s0(Z), &s0(Z)).unwrap().is_zero());
    assert_eq!(ext_dw(0, &k2(), &k2()).unwrap(), PresentedGroup::cyclic(Z, 2));
    assert!(matches!(ext_dw(-1, &s0(Z), &s0(Z)), Err(Error::NegativeDegree(-1))));
}

#[test]
fn contractibles_are_ext_orthogonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let b = SampleBounds::new(Z);
    for _ in 0..30 {
        let x = random_complex(&mut rng, &b);
        let w = cone(&ChainMap::identity(&random_complex(&mut rng, &b))).complex;
        assert!(ext_dw(1, &x, &w).unwrap().is_zero());
        assert!(ext_dw(1, &w, &x).unwrap().is_zero());
    }
}

#[test]
fn extension_classes() {
    let a = k2();
    let c = s1(Z);
    let split = DwSes::split(&a, &c).unwrap();
    assert!(ses_to_class(&split).unwrap().coordinates.iter().all(|x| *x == BigInt::from(0)));

    let e = admissible_mono(&s0_into_d1(Z)).unwrap().ses();
    let cls = ses_to_class(&e).unwrap();
    assert_eq!(cls.group.group, PresentedGroup::free(Z, 1));
    assert!(cls.coordinates == big(&[1]) || cls.coordinates == big(&[-1]));

    let e = admissible_epi(&d1_onto_s1(Z)).unwrap().ses();
    let cls = ses_to_class(&e).unwrap();
    assert!(cls.coordinates == big(&[1]) || cls.coordinates == big(&[-1]));
}

#[test]
fn class_round_trip_f2() {
    let f2 = Ring::f2();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let b = SampleBounds::new(f2);
    for _ in 0..40 {
        let a = random_complex(&mut rng, &b);
        let c = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &c, &a.shift(1));
        let e = class_to_ses(&f).unwrap();
        assert!(e.verify().is_valid());
        let cls = ses_to_class(&e).unwrap();
        assert_eq!(cls.map, f);
        assert_eq!(cls.coordinates, cls.group.reduce(&f).unwrap());
    }
}

#[test]
fn class_of_isomorphic_extensions_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let b = SampleBounds::new(Z);
    for _ in 0..30 {
        let e = random_ses(&mut rng, &b, None, None);
        let cls = ses_to_class(&e).unwrap();
        // Splitting iff the class vanishes.
        let zero = cls.coordinates.iter().all(|x| *x == BigInt::from(0));
        let split = DwSes::split(e.sub(), e.quotient()).unwrap();
        assert_eq!(zero, ses_to_class(&split).unwrap().coordinates == cls.coordinates);
    }
}

#[test]
fn thickness_of_contractibles() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let b = SampleBounds::new(Z);
    for _ in 0..40 {
        let e = random_ses(&mut rng, &b, None, None);
        let flags = [e.sub(), e.middle(), e.quotient()].map(|x| is_contractible(x).is_some());
        assert_ne!(flags.iter().filter(|&&w| w).count(), 2, "{flags:?}");
        let w1 = cone(&ChainMap::identity(e.sub())).complex;
        let w2 = cone(&ChainMap::identity(e.quotient())).complex;
        let e2 = DwSes::split(&w1, &w2).unwrap();
        assert!(is_contractible(e2.middle()).is_some());
    }
    // Summands of a contractible complex.
    let dd = direct_sum(&d1(Z), &d1(Z)).unwrap();
    assert!(is_contractible(&dd.sum).is_some());
    assert!(is_contractible(dd.left()).is_some());
    let mixed = direct_sum(&d1(Z), &k2()).unwrap();
    assert!(is_contractible(&mixed.sum).is_none());
}

#[test]
fn injectivity_probe_agrees_with_contractibility() {
    assert!(injectivity_probe(&d1(Z)).is_some());
    assert!(injectivity_probe(&k2()).is_none());
    assert!(injectivity_probe(&z0(Z)).is_some());
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for ring in [Z, Ring::f2()] {
        let b = SampleBounds::new(ring);
        for _ in 0..40 {
            let x = random_complex(&mut rng, &b);
            let r = injectivity_probe(&x);
            assert_eq!(r.is_some(), is_contractible(&x).is_some());
            if let Some(r) = r {
                assert!(r.validate().is_valid());
                assert!(r.after(&enough_injectives(&x).i).is_identity());
            }
        }
    }
}
