//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exact_model::complex::fixtures::{d1, d1_onto_s1, k2, s0, s0_into_d1};
use exact_model::complex::random::{random_chain_map, random_complex, random_isomorphic, random_matrix, SampleBounds};
use exact_model::complex::{cone, direct_sum, ChainComplex, ChainMap, HomComplex};
use exact_model::dw_exact::sample::random_ses;
use exact_model::dw_exact::{axiom_suite_with, split_mono_cokernel, DwSes};
use exact_model::frobenius::{
    class_to_ses, classify, enough_injectives, enough_projectives, ext_dw, factor_cof_trivfib, factor_trivcof_fib,
    find_homotopy, homotopic_by_factorization, is_contractible, path_object, pi_group, ses_to_class,
};
use exact_model::hovey::{classify_by_classes, ChainInstance, ClassSpec};
use exact_model::io::{load, Document};
use exact_model::keps::{ext1_keps, stable_hom, KEpsHom, KEpsModule};
use exact_model::linalg::{ExactMatrix, PresentedGroup, Ring};

const Z: Ring = Ring::Integers;

fn rings() -> [Ring; 2] {
    [Z, Ring::f2()]
}

fn contractible_sample(rng: &mut ChaCha8Rng, b: &SampleBounds) -> ChainComplex {
    let x = random_complex(rng, b);
    random_isomorphic(rng, &cone(&ChainMap::identity(&x)).complex).0
}

/// `f` plus a random boundary in `Hom(X, Y)`, or an unrelated map.
fn partner(rng: &mut ChaCha8Rng, f: &ChainMap) -> ChainMap {
    let (x, y) = (f.source(), f.target());
    if rng.gen_bool(0.5) {
        let hom = HomComplex::new(x, y).unwrap();
        let h = random_matrix(rng, f.ring(), hom.dim(1), 1, 3);
        f.try_add(&hom.map_from_vector(&(&hom.differential(1) * &h))).unwrap()
    } else {
        random_chain_map(rng, x, y)
    }
}

fn c1_homotopy_oracles() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let (mut pairs, mut homotopic) = (0, 0);
    for ring in rings() {
        let b = SampleBounds::with_limits(ring, 4, 4, 3);
        for _ in 0..500 {
            let x = random_complex(&mut rng, &b);
            let y = random_complex(&mut rng, &b);
            let f = random_chain_map(&mut rng, &x, &y);
            let g = partner(&mut rng, &f);
            let direct = find_homotopy(&f, &g).unwrap();
            let via_cover = homotopic_by_factorization(&f, &g).unwrap();
            assert_eq!(direct.is_some(), via_cover.is_some(), "oracles disagree on {f:?}, {g:?}");
            if let Some(h) = direct {
                assert!(h.verify().is_valid());
                assert_eq!((&h.f, &h.g), (&f, &g));
                homotopic += 1;
            }
            if let Some(fac) = via_cover {
                assert!(fac.beta.validate().is_valid());
                assert_eq!(fac.q.after(&fac.beta), g.try_sub(&f).unwrap());
            }
            pairs += 1;
        }
    }
    assert!(homotopic > 0 && homotopic < pairs);
    format!("{pairs} pairs, {homotopic} homotopic")
}

fn c2_exact_groups() -> String {
    assert_eq!(pi_group(&k2(), &k2()).unwrap().group, PresentedGroup::cyclic(Z, 2));
    assert_eq!(pi_group(&s0(Z), &s0(Z)).unwrap().group, PresentedGroup::free(Z, 1));
    assert!(pi_group(&d1(Z), &d1(Z)).unwrap().group.is_zero());
    assert!(ext_dw(1, &s0(Z), &s0(Z)).unwrap().is_zero());
    let e = DwSes::from_maps(s0_into_d1(Z), d1_onto_s1(Z)).unwrap();
    let class = ses_to_class(&e).unwrap();
    assert_eq!(class.group.group, PresentedGroup::free(Z, 1));
    let c = &class.coordinates[..];
    assert!(c == [BigInt::from(1)] || c == [BigInt::from(-1)], "{c:?}");
    format!("pi(K2,K2) = {}, class of S0 -> D1 -> S1 = {c:?}", pi_group(&k2(), &k2()).unwrap().group)
}

fn c3_cone_of_identity() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut n = 0;
    for ring in rings() {
        let b = SampleBounds::with_limits(ring, 4, 4, 3);
        for _ in 0..200 {
            let x = random_complex(&mut rng, &b);
            let h = is_contractible(&cone(&ChainMap::identity(&x)).complex).expect("cone of identity contracts");
            assert!(h.verify().is_valid() && h.f.is_zero() && h.g.is_identity());
            n += 1;
        }
    }
    format!("{n} cones")
}

fn c4_thickness() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let b = SampleBounds::new(Z);
    let mut sequences = 0;
    for k in 0..300 {
        let w = contractible_sample(&mut rng, &b);
        // Two contractible terms in each of the three positions.
        let e = match k % 3 {
            0 => {
                let w2 = contractible_sample(&mut rng, &b);
                random_ses(&mut rng, &b, Some(&w), Some(&w2))
            }
            1 => enough_injectives(&w),
            _ => enough_projectives(&w),
        };
        let (_, phi, phi_inv) = random_isomorphic(&mut rng, e.middle());
        let e = e.transport(&phi, &phi_inv).unwrap();
        let flags = [e.sub(), e.middle(), e.quotient()].map(|x| is_contractible(x).is_some());
        assert!(flags.iter().filter(|&&c| c).count() >= 2, "sampler drew {flags:?}");
        assert!(flags.iter().all(|&c| c), "third term not contractible: {flags:?}");
        sequences += 1;
    }
    let mut summands = 0;
    for _ in 0..300 {
        let pick = |rng: &mut ChaCha8Rng| {
            if rng.gen_bool(0.8) { contractible_sample(rng, &b) } else { random_complex(rng, &b) }
        };
        let (x, y) = (pick(&mut rng), pick(&mut rng));
        let s = direct_sum(&x, &y).unwrap();
        let (w, phi, phi_inv) = random_isomorphic(&mut rng, &s.sum);
        if is_contractible(&w).is_none() {
            continue;
        }
        let inc = phi.after(&s.in1);
        let split = split_mono_cokernel(&inc, &s.pr1.after(&phi_inv)).unwrap();
        assert!(is_contractible(inc.source()).is_some());
        assert!(is_contractible(split.ses.quotient()).is_some());
        summands += 1;
    }
    assert!(summands >= 100, "only {summands} summands sampled");
    format!("{sequences} sequences, {summands} summands")
}

fn c5_axiom_suite() -> String {
    let mut out = Vec::new();
    for ring in rings() {
        let r = axiom_suite_with(&SampleBounds::new(ring), 105, 300);
        for c in &r.clauses {
            assert!(c.samples >= 300 && c.counterexamples.is_empty(), "{} over {ring}: {:?}", c.name, c.counterexamples);
        }
        out.push(format!("{} clauses x 300 over {ring}", r.clauses.len()));
    }
    out.join(", ")
}

fn c6_path_object() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut n = 0;
    for ring in rings() {
        let b = SampleBounds::new(ring);
        for _ in 0..100 {
            let y = random_complex(&mut rng, &b);
            let po = path_object(&y);
            let yy = direct_sum(&y, &y).unwrap();
            let id = ChainMap::identity(&y);
            assert_eq!(po.p.after(&po.i), yy.pairing(&id, &id));
            assert!(classify(&po.i).is_trivial_cofibration);
            assert!(classify(&po.p).is_fibration);
            let (phi, psi) = &po.kernel_iso;
            assert!(phi.validate().is_valid() && psi.validate().is_valid());
            assert!(psi.after(phi).is_identity() && phi.after(psi).is_identity());
            assert_eq!(phi.source(), po.cover.sub());
            n += 1;
        }
    }
    format!("{n} path objects")
}

/// Random map, or one built to be a weak equivalence.
fn sample_map(rng: &mut ChaCha8Rng, b: &SampleBounds, x: &ChainComplex) -> ChainMap {
    let w = contractible_sample(rng, b);
    match rng.gen_range(0..3) {
        0 => {
            let y = random_complex(rng, b);
            random_chain_map(rng, x, &y)
        }
        1 => {
            // X → X ⊕ W in a random basis.
            let s = direct_sum(x, &w).unwrap();
            let (_, phi, _) = random_isomorphic(rng, &s.sum);
            phi.after(&s.in1)
        }
        _ => {
            // 1_X plus a null-homotopic map.
            let hom = HomComplex::new(x, x).unwrap();
            let h = random_matrix(rng, x.ring(), hom.dim(1), 1, 2);
            ChainMap::identity(x).try_add(&hom.map_from_vector(&(&hom.differential(1) * &h))).unwrap()
        }
    }
}

fn c7_factorizations() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let b = SampleBounds::new(Z);
    for _ in 0..200 {
        let x = random_complex(&mut rng, &b);
        let f = sample_map(&mut rng, &b, &x);
        let a = factor_trivcof_fib(&f);
        assert_eq!(a.p.after(&a.i), f);
        assert!(classify(&a.i).is_trivial_cofibration && classify(&a.p).is_fibration);
        let c = factor_cof_trivfib(&f);
        assert_eq!(c.p.after(&c.i), f);
        assert!(classify(&c.i).is_cofibration && classify(&c.p).is_trivial_fibration);
    }
    let small = SampleBounds::with_limits(Z, 2, 3, 2);
    let mut all_three = 0;
    for _ in 0..200 {
        let x = random_complex(&mut rng, &small);
        let f = sample_map(&mut rng, &small, &x);
        let g = sample_map(&mut rng, &small, f.target());
        let flags = [&f, &g, &g.after(&f)].map(|m| classify(m).is_weak_equivalence);
        let count = flags.iter().filter(|&&w| w).count();
        assert_ne!(count, 2, "two of three weak equivalences: {flags:?}");
        all_three += usize::from(count == 3);
    }
    assert!(all_three > 0);
    format!("400 factorizations, 200 pairs ({all_three} with all three weak equivalences)")
}

fn c8_classification() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let mut n = 0;
    for ring in rings() {
        let inst = ChainInstance::new(ring);
        let spec = ClassSpec { q: inst.all(), r: inst.all(), w: inst.contractibles() };
        for k in 0..150 {
            let x = random_complex(&mut rng, &inst.bounds);
            let f = match k % 3 {
                0 => sample_map(&mut rng, &inst.bounds, &x),
                1 => random_ses(&mut rng, &inst.bounds, Some(&x), None).i,
                _ => random_ses(&mut rng, &inst.bounds, None, Some(&x)).p,
            };
            assert_eq!(classify_by_classes(&inst, &spec, &f), classify(&f), "{f:?}");
            n += 1;
        }
    }
    format!("{n} maps")
}

/// `F₂` matrices as row bitmasks.
type Bits = Vec<u8>;

fn bits_mul(a: &Bits, b: &Bits) -> Bits {
    a.iter()
        .map(|&row| (0..8).filter(|k| row >> k & 1 == 1).fold(0u8, |acc, k| acc ^ b[k]))
        .collect()
}

fn bits_of(m: &ExactMatrix) -> Bits {
    (0..m.rows())
        .map(|i| m.row(i).iter().enumerate().fold(0u8, |acc, (j, x)| acc | (u8::from(*x != BigInt::from(0)) << j)))
        .collect()
}

fn flat(m: &Bits, cols: usize) -> usize {
    m.iter().enumerate().fold(0, |acc, (i, &r)| acc | (r as usize) << (i * cols))
}

fn unflat(v: usize, rows: usize, cols: usize) -> Bits {
    (0..rows).map(|i| (v >> (i * cols) & ((1 << cols) - 1)) as u8).collect()
}

fn to_matrix(m: &Bits, rows: usize, cols: usize) -> ExactMatrix {
    let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| BigInt::from(m[i] >> j & 1))).collect();
    ExactMatrix::from_entries(Ring::f2(), rows, cols, entries).unwrap()
}

/// Every `F₂`-matrix `n.dim × m.dim` commuting with ε.
fn all_homs(m: &KEpsModule, n: &KEpsModule) -> Vec<Bits> {
    let (em, en) = (bits_of(m.eps()), bits_of(n.eps()));
    let (rows, cols) = (n.dim(), m.dim());
    (0..1usize << (rows * cols))
        .map(|v| unflat(v, rows, cols))
        .filter(|f| bits_mul(f, &em) == bits_mul(&en, f))
        .collect()
}

fn c9_keps() -> String {
    let f2 = Ring::f2();
    let classes = KEpsModule::isomorphism_classes(f2, 4);
    assert_eq!(classes.len(), 9);
    let free = KEpsModule::free(f2, 1);
    let mut homs = 0;
    let mut nonzero_stable = 0;
    for m in &classes {
        for n in &classes {
            let (rows, cols) = (n.dim(), m.dim());
            // Maps through k[ε]: all composites m → k[ε] → n, closed under sums.
            let mut span = vec![false; 1 << (rows * cols)];
            span[0] = true;
            for a in all_homs(m, &free) {
                for b in all_homs(&free, n) {
                    let c = flat(&bits_mul(&b, &a), cols);
                    if !span[c] {
                        let old: Vec<usize> = (0..span.len()).filter(|&v| span[v]).collect();
                        for v in old {
                            span[v ^ c] = true;
                        }
                    }
                }
            }
            let st = stable_hom(m, n).unwrap();
            let all = all_homs(m, n);
            let through_free = all.iter().filter(|f| span[flat(f, cols)]).count();
            assert_eq!(all.len() / through_free, 1 << st.group.free_rank, "{m:?} -> {n:?}");
            for f in &all {
                let h = KEpsHom::new(m.clone(), n.clone(), to_matrix(f, rows, cols)).unwrap();
                let zero = st.reduce(&h).unwrap().iter().all(|c| *c == BigInt::from(0));
                assert_eq!(zero, span[flat(f, cols)], "{m:?} -> {n:?}: {f:?}");
            }
            homs += all.len();
            nonzero_stable += usize::from(!st.group.is_zero());
        }
    }
    for m in &classes {
        for b in 1..=2 {
            let f = KEpsModule::free(f2, b);
            assert!(ext1_keps(m, &f).unwrap().is_zero() && ext1_keps(&f, m).unwrap().is_zero());
        }
    }
    let k = KEpsModule::trivial(f2, 1);
    assert_eq!(stable_hom(&k, &k).unwrap().group, PresentedGroup::free(f2, 1));
    format!("81 pairs, {homs} homs enumerated, {nonzero_stable} nonzero stable groups")
}

fn c10_class_round_trip() -> String {
    let f2 = Ring::f2();
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let b = SampleBounds::new(f2);
    let mut nonzero = 0;
    for _ in 0..200 {
        let a = random_complex(&mut rng, &b);
        let c = random_complex(&mut rng, &b);
        let f = random_chain_map(&mut rng, &c, &a.shift(1));
        let e = class_to_ses(&f).unwrap();
        let cls = ses_to_class(&e).unwrap();
        let expected = pi_group(&c, &a.shift(1)).unwrap().reduce(&f).unwrap();
        assert_eq!(cls.coordinates, expected);
        nonzero += usize::from(expected.iter().any(|x| *x != BigInt::from(0)));
    }
    assert!(nonzero > 0);
    format!("200 classes, {nonzero} nonzero")
}

fn c11_cli() -> String {
    use common::{exmod, fixture_files};
    let cases: &[(&[&str], i32)] = &[
        (&["validate", "K2.json"], 0),
        (&["validate", "bad_shape.json"], 1),
        (&["validate", "bad_schema.json"], 2),
        (&["cone", "id_S0.json"], 0),
        (&["shift", "S0.json", "--by", "2"], 0),
        (&["sum", "S0.json", "D1.json"], 0),
        (&["classify", "S0_into_D1.json"], 0),
        (&["homotopy", "zero_S0.json", "two_S0.json"], 1),
        (&["homotopy", "id_K2.json", "id_K2.json"], 0),
        (&["contractible", "D1.json"], 0),
        (&["contractible", "K2.json"], 1),
        (&["pi", "K2.json", "K2.json"], 0),
        (&["ext", "1", "K2.json", "S0.json"], 0),
        (&["factor", "S0_into_D1.json", "--mode", "trivcof-fib"], 0),
        (&["factor", "S0_into_D1.json", "--mode", "cof-trivfib"], 0),
        (&["path-object", "K2.json"], 0),
        (&["ses-class", "S0_into_D1.json", "D1_onto_S1.json"], 0),
        (&["class-ses", "id_S1.json"], 0),
        (&["keps", "decompose", "keps_mixed.json"], 0),
        (&["keps", "stablehom", "k.json", "k.json"], 0),
        (&["keps", "ext1", "k.json", "keps_free.json"], 0),
        (&["check", "axioms", "--ring", "Z", "--seed", "1", "--samples", "50"], 0),
        (&["check", "cotorsion", "--seed", "1", "--samples", "10", "--left", "K2.json", "--right", "S0.json"], 1),
        (&["check", "thick", "--seed", "1", "--samples", "20"], 0),
        (&["check", "hereditary", "--seed", "1", "--samples", "20"], 0),
        (&["check", "submodel", "--seed", "1", "--samples", "10"], 0),
        (&["check", "axioms", "--ring", "Z"], 2),
    ];
    for (args, code) in cases {
        let r = exmod(args);
        assert_eq!(r.code, *code, "exmod {args:?}: {}{}", r.stdout, r.stderr);
    }
    assert_eq!(exmod(&["pi", "K2.json", "K2.json"]).stdout.lines().next(), Some("Z/2"));
    let mut round_trips = 0;
    for path in fixture_files() {
        let Ok(doc) = load(&path) else { continue };
        assert_eq!(Document::from_json(&doc.to_json()).unwrap(), doc, "{}", path.display());
        round_trips += 1;
    }
    format!("{} invocations, {round_trips} fixture round trips", cases.len())
}

type Criterion = (&'static str, fn() -> String);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("homotopy oracle agreement", c1_homotopy_oracles),
        ("exact computed groups", c2_exact_groups),
        ("cone of identity contractible", c3_cone_of_identity),
        ("thickness of contractibles", c4_thickness),
        ("exact category axioms", c5_axiom_suite),
        ("path object", c6_path_object),
        ("factorizations and 2-out-of-3", c7_factorizations),
        ("classification cross-check", c8_classification),
        ("k[e] stable homs and Ext", c9_keps),
        ("extension class round trip", c10_class_round_trip),
        ("command line", c11_cli),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL {:>2} {name}: {msg} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
