use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::frobenius::MapClass;
use crate::hovey::classes::{sub_classes, Class, ClassSpec};
use crate::hovey::instance::ExactInstance;
use crate::hovey::verdict::{run_samples, Outcome, Verdict};

/// Rejection-sampling budget per requested class member.
pub const MAX_TRIES: usize = 64;

fn draw<I: ExactInstance>(inst: &I, class: &Class<I::Object>, rng: &mut ChaCha8Rng) -> Option<I::Object> {
    for _ in 0..MAX_TRIES {
        let x = match class.sampler() {
            Some(s) => s(rng),
            None => inst.sample_object(rng),
        };
        if class.contains(&x) {
            return Some(x);
        }
    }
    None
}

/// A class member half of the time, an arbitrary object otherwise.
fn draw_mixed<I: ExactInstance>(inst: &I, class: &Class<I::Object>, rng: &mut ChaCha8Rng) -> Option<I::Object> {
    if rng.gen_bool(0.5) {
        draw(inst, class, rng)
    } else {
        Some(inst.sample_object(rng))
    }
}

/// Looks for `c` among the candidates and one fresh sample with `Ext¹ ≠ 0`,
/// with `x` on the left when `x_left`.
fn find_witness<I: ExactInstance>(
    inst: &I,
    x: &I::Object,
    other: &Class<I::Object>,
    x_left: bool,
    rng: &mut ChaCha8Rng,
) -> bool {
    let mut candidates = inst.witness_candidates(x);
    candidates.extend(draw(inst, other, rng));
    candidates.into_iter().filter(|c| other.contains(c)).any(|c| {
        let g = if x_left { inst.ext1(x, &c) } else { inst.ext1(&c, x) };
        !g.is_zero()
    })
}

fn orthogonality_sample<I: ExactInstance>(
    inst: &I,
    ambient: &Class<I::Object>,
    left: &Class<I::Object>,
    right: &Class<I::Object>,
    rng: &mut ChaCha8Rng,
) -> Outcome {
    let (Some(f), Some(c)) = (draw(inst, left, rng), draw(inst, right, rng)) else {
        return Outcome::Inconclusive(format!("no members of {} or {} sampled", left.name, right.name));
    };
    let g = inst.ext1(&f, &c);
    if !g.is_zero() {
        return Outcome::Fail(format!("Ext¹({f:?}, {c:?}) = {g}"));
    }
    // Maximality, refutation only: objects outside a class should see a
    // nonzero Ext¹ against the other class.
    let Some(x) = draw(inst, ambient, rng) else {
        return Outcome::Pass;
    };
    if !left.contains(&x) && !find_witness(inst, &x, right, true, rng) {
        return Outcome::Inconclusive(format!("no witness found for {x:?} outside {}", left.name));
    }
    if !right.contains(&x) && !find_witness(inst, &x, left, false, rng) {
        return Outcome::Inconclusive(format!("no witness found for {x:?} outside {}", right.name));
    }
    Outcome::Pass
}

fn orthogonality_in<I: ExactInstance>(
    inst: &I,
    ambient: &Class<I::Object>,
    left: &Class<I::Object>,
    right: &Class<I::Object>,
    seed: u64,
    n: usize,
) -> Verdict {
    let name = format!("orthogonality ({}, {})", left.name, right.name);
    run_samples(&name, seed, n, |rng| orthogonality_sample(inst, ambient, left, right, rng))
}

/// `Ext¹(F, C) = 0` on sampled `F ∈ left`, `C ∈ right`.
pub fn check_orthogonality<I: ExactInstance>(
    inst: &I,
    left: &Class<I::Object>,
    right: &Class<I::Object>,
    seed: u64,
    n: usize,
) -> Verdict {
    orthogonality_in(inst, &Class::all(), left, right, seed, n)
}

/// Two-out-of-three along sampled sequences and closure under summands.
pub fn check_thick<I: ExactInstance>(inst: &I, w: &Class<I::Object>, seed: u64, n: usize) -> Verdict {
    run_samples(&format!("thick ({})", w.name), seed, n, |rng| {
        let (Some(x), Some(y)) = (draw_mixed(inst, w, rng), draw_mixed(inst, w, rng)) else {
            return Outcome::Inconclusive(format!("no members of {} sampled", w.name));
        };
        let sum = inst.direct_sum(&x, &y);
        if w.contains(&sum) && !(w.contains(&x) && w.contains(&y)) {
            return Outcome::Fail(format!("{sum:?} lies in {} but its summands {x:?}, {y:?} do not", w.name));
        }
        for _ in 0..MAX_TRIES {
            let (Some(a), Some(c)) = (draw_mixed(inst, w, rng), draw_mixed(inst, w, rng)) else {
                continue;
            };
            let e = inst.sample_ses(rng, Some(&a), Some(&c));
            let flags = [w.contains(&e.sub), w.contains(&e.middle), w.contains(&e.quotient)];
            match flags.iter().filter(|&&b| b).count() {
                3 => return Outcome::Pass,
                2 => {
                    return Outcome::Fail(format!(
                        "{:?} ↣ {:?} ↠ {:?} has membership {flags:?} in {}",
                        e.sub, e.middle, e.quotient, w.name
                    ))
                }
                _ => {}
            }
        }
        Outcome::Inconclusive("no sequence with two terms in the class".into())
    })
}

fn hereditary_in<I: ExactInstance>(
    inst: &I,
    left: &Class<I::Object>,
    right: &Class<I::Object>,
    seed: u64,
    n: usize,
) -> Verdict {
    let name = format!("hereditary ({}, {})", left.name, right.name);
    run_samples(&name, seed, n, |rng| {
        let mut tested = false;
        // Kernels of admissible epis between objects of the left class.
        for _ in 0..MAX_TRIES {
            let (Some(a), Some(c)) = (draw_mixed(inst, left, rng), draw(inst, left, rng)) else {
                continue;
            };
            let e = inst.sample_ses(rng, Some(&a), Some(&c));
            if !left.contains(&e.middle) {
                continue;
            }
            let k = inst.kernel_of_epi(&e.p).expect("sampled epi is admissible");
            if !left.contains(&k) {
                return Outcome::Fail(format!("kernel {k:?} of {:?} ↠ {c:?} leaves {}", e.middle, left.name));
            }
            tested = true;
            break;
        }
        // Cokernels of admissible monos between objects of the right class.
        for _ in 0..MAX_TRIES {
            let (Some(a), Some(c)) = (draw(inst, right, rng), draw_mixed(inst, right, rng)) else {
                continue;
            };
            let e = inst.sample_ses(rng, Some(&a), Some(&c));
            if !right.contains(&e.middle) {
                continue;
            }
            let q = inst.cokernel_of_mono(&e.i).expect("sampled mono is admissible");
            if !right.contains(&q) {
                return Outcome::Fail(format!("cokernel {q:?} of {a:?} ↣ {:?} leaves {}", e.middle, right.name));
            }
            return Outcome::Pass;
        }
        if tested {
            Outcome::Pass
        } else {
            Outcome::Inconclusive("no admissible map between class members".into())
        }
    })
}

/// Left class closed under kernels of admissible epis, right class under
/// cokernels of admissible monos.
pub fn check_hereditary<I: ExactInstance>(
    inst: &I,
    left: &Class<I::Object>,
    right: &Class<I::Object>,
    seed: u64,
    n: usize,
) -> Verdict {
    hereditary_in(inst, left, right, seed, n)
}

/// Classification read off the classes: cofibrations are admissible monos
/// with cokernel in `Q` (trivial: `Q ∩ W`), fibrations admissible epis with
/// kernel in `R` (trivial: `R ∩ W`). Weak equivalences are the maps whose
/// factorization `p ∘ i` with `i` a trivial cofibration has `p` a trivial
/// fibration.
pub fn classify_by_classes<I: ExactInstance>(inst: &I, spec: &ClassSpec<I::Object>, f: &I::Map) -> MapClass {
    let qw = spec.q.and(&spec.w);
    let rw = spec.r.and(&spec.w);
    let cok = inst.cokernel_of_mono(f);
    let ker = inst.kernel_of_epi(f);
    let trivcof = |c: &Option<I::Object>| c.as_ref().is_some_and(|c| qw.contains(c));
    let trivfib = |k: &Option<I::Object>| k.as_ref().is_some_and(|k| rw.contains(k));
    let (i, p) = inst.factor_trivcof_fib(f);
    MapClass {
        is_cofibration: cok.as_ref().is_some_and(|c| spec.q.contains(c)),
        is_trivial_cofibration: trivcof(&cok),
        is_fibration: ker.as_ref().is_some_and(|k| spec.r.contains(k)),
        is_trivial_fibration: trivfib(&ker),
        is_weak_equivalence: trivcof(&inst.cokernel_of_mono(&i)) && trivfib(&inst.kernel_of_epi(&p)),
    }
}

/// Runs the cotorsion-pair checks inside the fibrant, cofibrant and
/// bifibrant subcategories, after checking that `W` is thick.
pub fn check_sub_model<I: ExactInstance>(inst: &I, spec: &ClassSpec<I::Object>, seed: u64, n: usize) -> Verdict {
    let thick = check_thick(inst, &spec.w, seed, n);
    if !thick.passed {
        let mut v = Verdict::merge("submodel", vec![thick]);
        v.notes.push("W is not thick; sub-model checks skipped".into());
        return v;
    }
    let subs = sub_classes(spec);
    let mut parts = vec![thick];
    for (label, sub, fibrant, cofibrant) in [
        ("fibrant", &subs.fibrant, true, false),
        ("cofibrant", &subs.cofibrant, false, true),
        ("bifibrant", &subs.bifibrant, true, true),
    ] {
        let s = &sub.spec;
        let (rw, qw) = (s.r.and(&s.w), s.q.and(&s.w));
        let mut ps = vec![
            orthogonality_in(inst, &sub.objects, &s.q, &rw, seed, n),
            orthogonality_in(inst, &sub.objects, &qw, &s.r, seed, n),
            hereditary_in(inst, &s.q, &rw, seed, n),
            hereditary_in(inst, &qw, &s.r, seed, n),
        ];
        ps.push(run_samples("object classes", seed, n, |rng| {
            let Some(x) = draw(inst, &sub.objects, rng) else {
                return Outcome::Inconclusive(format!("no objects of {} sampled", sub.objects.name));
            };
            if fibrant && !s.r.contains(&x) {
                return Outcome::Fail(format!("{x:?} is not fibrant"));
            }
            if cofibrant && !s.q.contains(&x) {
                return Outcome::Fail(format!("{x:?} is not cofibrant"));
            }
            // Every object fibrant: trivially cofibrant = projective; dually.
            if fibrant && qw.contains(&x) != inst.is_projective(&x) {
                return Outcome::Fail(format!("{x:?}: trivially cofibrant and projective disagree"));
            }
            if cofibrant && rw.contains(&x) != inst.is_injective(&x) {
                return Outcome::Fail(format!("{x:?}: trivially fibrant and injective disagree"));
            }
            let y = inst.sample_object(rng);
            let z = inst.sample_object(rng);
            let sum = inst.direct_sum(&y, &z);
            if sub.objects.contains(&sum) && !(sub.objects.contains(&y) && sub.objects.contains(&z)) {
                return Outcome::Fail(format!("subcategory not closed under summands of {sum:?}"));
            }
            Outcome::Pass
        }));
        parts.push(Verdict::merge(label, ps));
    }
    Verdict::merge("submodel", parts)
}
