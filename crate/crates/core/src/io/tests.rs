use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::complex::fixtures::{d1, k2, s0, s0_into_d1};
use crate::complex::random::{random_chain_map, random_complex, SampleBounds};
use crate::hovey::Counterexample;
use crate::keps::{random_hom, random_module};

fn round_trip(doc: &Document) -> Document {
    Document::from_json(&doc.to_json()).expect("round trip parses")
}

#[test]
fn fixtures_round_trip() {
    for ring in [Ring::Integers, Ring::f2()] {
        for doc in [Document::complex(&d1(ring)), Document::complex(&s0(ring)), Document::chain_map(&s0_into_d1(ring))] {
            assert_eq!(round_trip(&doc), doc);
        }
    }
    let k = Document::complex(&k2());
    assert_eq!(round_trip(&k), k);
}

#[test]
fn random_objects_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ring in [Ring::Integers, Ring::f2(), Ring::prime_field(3).unwrap()] {
        let b = SampleBounds::with_limits(ring, 3, 4, 5);
        for _ in 0..40 {
            let x = random_complex(&mut rng, &b);
            let y = random_complex(&mut rng, &b);
            let f = random_chain_map(&mut rng, &x, &y);
            assert_eq!(round_trip(&Document::complex(&x)), Document::complex(&x));
            assert_eq!(round_trip(&Document::chain_map(&f)), Document::chain_map(&f));
        }
    }
    let f2 = Ring::f2();
    for _ in 0..40 {
        let m = random_module(&mut rng, f2, 4);
        let n = random_module(&mut rng, f2, 4);
        let h = random_hom(&mut rng, &m, &n);
        assert_eq!(round_trip(&Document::keps_module(&m)), Document::keps_module(&m));
        assert_eq!(round_trip(&Document::keps_hom(&h)), Document::keps_hom(&h));
    }
}

#[test]
fn big_integers_survive() {
    let big: BigInt = "123456789012345678901234567890".parse().unwrap();
    let m = ExactMatrix::from_entries(Ring::Integers, 1, 1, vec![big.clone()]).unwrap();
    let x = ChainComplex::checked(Ring::Integers, 0, vec![1, 1], vec![(1, m)]).unwrap();
    let text = Document::complex(&x).to_json();
    assert!(text.contains("123456789012345678901234567890"));
    assert_eq!(Document::from_json(&text).unwrap().into_complex().unwrap(), x);
}

#[test]
fn groups_and_verdicts_round_trip() {
    let g = PresentedGroup { ring: Ring::Integers, torsion: vec![BigInt::from(2), BigInt::from(6)], free_rank: 1 };
    assert_eq!(round_trip(&Document::group(&g)), Document::group(&g));
    let v = Verdict {
        check: "orthogonality".into(),
        passed: false,
        samples_run: 10,
        inconclusive: 1,
        counterexamples: vec![Counterexample { seed: 3, index: 4, description: "Ext^1 = Z/2".into() }],
        notes: vec!["note".into()],
    };
    let doc = Document::verdict(Ring::Integers, &v);
    assert_eq!(round_trip(&doc), doc);
}

#[test]
fn files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d1.json");
    let doc = Document::complex(&d1(Ring::Integers));
    store(&doc, &path).unwrap();
    assert_eq!(load(&path).unwrap(), doc);
}

#[test]
fn unknown_schema_is_rejected_first() {
    let text = r#"{"schema_version": "2", "ring": "nonsense", "payload": 5}"#;
    assert!(matches!(Document::from_json(text), Err(Error::SchemaVersion(v)) if v == "2"));
}

#[test]
fn syntax_errors_carry_a_location() {
    let text = "{\n  \"schema_version\": \"1\",\n  \"ring\": \"Z\",\n  \"payload\": {\"kind\": \"complex\", }\n}";
    match Document::from_json(text) {
        Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 4"), "{location}"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn bad_shapes_name_the_degree() {
    let text = r#"{"schema_version":"1","ring":"Z","payload":{"kind":"complex","min_degree":0,"ranks":[1,1],
        "differentials":[{"degree":1,"matrix":[["1","0"]]}]}}"#;
    assert!(matches!(Document::from_json(text), Err(Error::InvalidComplex { degree: 1, .. })));
    let text = r#"{"schema_version":"1","ring":"Z","payload":{"kind":"complex","min_degree":0,"ranks":[1,1,1],
        "differentials":[{"degree":1,"matrix":[["1"]]},{"degree":2,"matrix":[["1"]]}]}}"#;
    assert!(matches!(Document::from_json(text), Err(Error::InvalidComplex { degree: 2, .. })));
}

#[test]
fn non_chain_maps_are_rejected() {
    // S0 -> D1 in degree 0 commutes with d only for the component 1.
    let text = r#"{"schema_version":"1","ring":"Z","payload":{"kind":"chain_map",
        "source":{"min_degree":0,"ranks":[1],"differentials":[]},
        "target":{"min_degree":0,"ranks":[1,1],"differentials":[{"degree":1,"matrix":[["1"]]}]},
        "components":[{"degree":0,"matrix":[["1"]]}]}}"#;
    assert!(Document::from_json(text).is_ok());
    let text = r#"{"schema_version":"1","ring":"Z","payload":{"kind":"chain_map",
        "source":{"min_degree":0,"ranks":[1,1],"differentials":[{"degree":1,"matrix":[["1"]]}]},
        "target":{"min_degree":0,"ranks":[1],"differentials":[]},
        "components":[{"degree":0,"matrix":[["1"]]}]}}"#;
    assert!(matches!(Document::from_json(text), Err(Error::InvalidMap { degree: 1, .. })));
}

#[test]
fn bad_integers_and_rings() {
    let text = r#"{"schema_version":"1","ring":"Z","payload":{"kind":"group","invariant_factors":["x"],"free_rank":0}}"#;
    assert!(matches!(Document::from_json(text), Err(Error::Parse { .. })));
    let text = r#"{"schema_version":"1","ring":"F4","payload":{"kind":"group","invariant_factors":[],"free_rank":0}}"#;
    assert!(Document::from_json(text).is_err());
}
