use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::complex::random::{random_chain_map, random_complex, random_isomorphic, SampleBounds};
use crate::complex::{direct_sum, map_sum, ChainComplex, ChainMap};
use crate::dw_exact::sample::random_ses;
use crate::dw_exact::{
    admissible_epi, admissible_mono, pullback_epi, pushout_mono, retract_embedding, DwSes, RetractDiagram,
};
use crate::linalg::Ring;
use crate::seeding::sample_rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseReport {
    pub name: &'static str,
    pub samples: usize,
    /// `(sample index, description)`; replay with [`sample_rng`] on the clause stream.
    pub counterexamples: Vec<(u64, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub ring: Ring,
    pub seed: u64,
    pub clauses: Vec<ClauseReport>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.counterexamples.is_empty())
    }

    pub fn counterexample_count(&self) -> usize {
        self.clauses.iter().map(|c| c.counterexamples.len()).sum()
    }
}

type Clause = fn(&mut ChaCha8Rng, &SampleBounds) -> Result<(), String>;

const CLAUSES: &[(&str, Clause)] = &[
    ("isomorphisms are admissible", isomorphisms),
    ("split sequences are admissible", split_sequences),
    ("admissible monos compose", compose_monos),
    ("admissible epis compose", compose_epis),
    ("pushout of an admissible mono", pushouts),
    ("pullback of an admissible epi", pullbacks),
    ("gf admissible mono implies f", mono_cancellation),
    ("gf admissible epi implies g", epi_cancellation),
    ("admissible monos closed under retracts", mono_retracts),
    ("admissible epis closed under retracts", epi_retracts),
];

/// Randomized verification of the exact-category axioms for the degreewise
/// split structure. Sample `k` of clause `c` draws from stream
/// `(c << 32) | k` of `seed`.
pub fn axiom_suite(ring: Ring, seed: u64, samples: usize) -> AxiomReport {
    axiom_suite_with(&SampleBounds::new(ring), seed, samples)
}

pub fn axiom_suite_with(bounds: &SampleBounds, seed: u64, samples: usize) -> AxiomReport {
    let clauses = CLAUSES
        .iter()
        .enumerate()
        .map(|(c, (name, check))| {
            let mut counterexamples = Vec::new();
            for k in 0..samples as u64 {
                let stream = ((c as u64) << 32) | k;
                let mut rng = sample_rng(seed, stream);
                if let Err(why) = check(&mut rng, bounds) {
                    counterexamples.push((stream, why));
                }
            }
            ClauseReport { name, samples, counterexamples }
        })
        .collect();
    AxiomReport { ring: bounds.ring, seed, clauses }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(why()) }
}

fn isomorphisms(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let x = random_complex(rng, b);
    let (_, phi, _) = random_isomorphic(rng, &x);
    let m = admissible_mono(&phi).ok_or_else(|| format!("iso not admissible mono: {phi:?}"))?;
    let e = admissible_epi(&phi).ok_or_else(|| format!("iso not admissible epi: {phi:?}"))?;
    ensure(m.complement.is_zero() && e.complement.is_zero(), || "iso has nonzero complement".into())
}

fn split_sequences(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let a = random_complex(rng, b);
    let c = random_complex(rng, b);
    let s = DwSes::split(&a, &c).map_err(|e| e.to_string())?;
    ensure(admissible_mono(&s.i).is_some(), || format!("canonical injection rejected: {:?}", s.i))?;
    ensure(admissible_epi(&s.p).is_some(), || format!("canonical projection rejected: {:?}", s.p))
}

fn compose_monos(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let e1 = random_ses(rng, b, None, None);
    let e2 = random_ses(rng, b, Some(e1.middle()), None);
    let comp = e2.i.after(&e1.i);
    let w = admissible_mono(&comp).ok_or_else(|| format!("composite not admissible: {comp:?}"))?;
    let degrees = ChainComplex::span(&[&w.complement, e1.quotient(), e2.quotient()]);
    ensure(
        degrees.into_iter().all(|n| w.complement.rank(n) == e1.quotient().rank(n) + e2.quotient().rank(n)),
        || "cokernel of the composite has the wrong ranks".into(),
    )
}

fn compose_epis(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let e1 = random_ses(rng, b, None, None);
    let e2 = random_ses(rng, b, None, Some(e1.middle()));
    let comp = e1.p.after(&e2.p);
    ensure(admissible_epi(&comp).is_some(), || format!("composite not admissible: {comp:?}"))
}

fn pushouts(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let e = random_ses(rng, b, None, None);
    let z = random_complex(rng, b);
    let f = random_chain_map(rng, e.sub(), &z);
    let w = admissible_mono(&e.i).ok_or("sampled mono rejected")?;
    let po = pushout_mono(&w, &f).map_err(|e| e.to_string())?;
    ensure(po.from_middle.after(&e.i) == po.from_z().after(&f), || "pushout square does not commute".into())?;
    let wj = admissible_mono(po.from_z()).ok_or("pushed-forward mono not admissible")?;
    let (phi, psi) = wj.ses().quotient_iso(&po.ses).map_err(|e| e.to_string())?;
    ensure(
        phi.validate().is_valid()
            && psi.validate().is_valid()
            && psi.after(&phi).is_identity()
            && phi.after(&psi).is_identity(),
        || "cokernel comparison is not an isomorphism".into(),
    )?;
    ensure(*po.ses.quotient() == w.complement, || "pushout cokernel differs from coker(i)".into())
}

fn pullbacks(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let e = random_ses(rng, b, None, None);
    let z = random_complex(rng, b);
    let g = random_chain_map(rng, &z, e.quotient());
    let w = admissible_epi(&e.p).ok_or("sampled epi rejected")?;
    let pb = pullback_epi(&w, &g).map_err(|e| e.to_string())?;
    ensure(e.p.after(&pb.to_middle) == g.after(pb.to_z()), || "pullback square does not commute".into())?;
    let wq = admissible_epi(pb.to_z()).ok_or("pulled-back epi not admissible")?;
    let (phi, psi) = wq.ses().sub_iso(&pb.ses).map_err(|e| e.to_string())?;
    ensure(
        phi.validate().is_valid() && psi.after(&phi).is_identity() && phi.after(&psi).is_identity(),
        || "kernel comparison is not an isomorphism".into(),
    )
}

fn mono_cancellation(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    // Constructed case: g f = m admissible with f = (m; h), g = pr1.
    let e = random_ses(rng, b, None, None);
    let w = random_complex(rng, b);
    let h = random_chain_map(rng, e.sub(), &w);
    let sum = direct_sum(e.middle(), &w).map_err(|e| e.to_string())?;
    let f = sum.pairing(&e.i, &h);
    let gf = sum.pr1.after(&f);
    ensure(admissible_mono(&gf).is_some(), || "g f should be admissible".into())?;
    ensure(admissible_mono(&f).is_some(), || format!("f not admissible although g f is: {f:?}"))?;
    // Unconstrained case: the implication on arbitrary composable maps.
    let x = random_complex(rng, b);
    let y = random_complex(rng, b);
    let t = random_complex(rng, b);
    let f = random_chain_map(rng, &x, &y);
    let g = random_chain_map(rng, &y, &t);
    ensure(admissible_mono(&g.after(&f)).is_none() || admissible_mono(&f).is_some(), || {
        format!("cancellation fails for f = {f:?}, g = {g:?}")
    })
}

fn epi_cancellation(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let e = random_ses(rng, b, None, None);
    let w = random_complex(rng, b);
    let h = random_chain_map(rng, &w, e.quotient());
    let sum = direct_sum(e.quotient(), &w).map_err(|e| e.to_string())?;
    let g = sum.copairing(&ChainMap::identity(e.quotient()), &h);
    let f = sum.pairing(&e.p, &ChainMap::zero(e.middle(), &w));
    ensure(admissible_epi(&g.after(&f)).is_some(), || "g f should be admissible".into())?;
    ensure(admissible_epi(&g).is_some(), || format!("g not admissible although g f is: {g:?}"))?;
    let x = random_complex(rng, b);
    let y = random_complex(rng, b);
    let t = random_complex(rng, b);
    let f = random_chain_map(rng, &x, &y);
    let g = random_chain_map(rng, &y, &t);
    ensure(admissible_epi(&g.after(&f)).is_none() || admissible_epi(&g).is_some(), || {
        format!("cancellation fails for f = {f:?}, g = {g:?}")
    })
}

/// `j` as a retract of `j ⊕ k` through the canonical injections/projections.
fn summand_diagram(j: &ChainMap, k: &ChainMap) -> RetractDiagram {
    let i = map_sum(j, k).expect("same ring");
    let src = direct_sum(j.source(), k.source()).expect("same ring");
    let tgt = direct_sum(j.target(), k.target()).expect("same ring");
    RetractDiagram { j: j.clone(), i, f1: src.in1, g1: src.pr1, f2: tgt.in1, g2: tgt.pr1 }
}

fn mono_retracts(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let j = if rng.gen_bool(0.5) {
        random_ses(rng, b, None, None).i
    } else {
        let x = random_complex(rng, b);
        let y = random_complex(rng, b);
        random_chain_map(rng, &x, &y)
    };
    let k = random_ses(rng, b, None, None).i;
    let d = summand_diagram(&j, &k);
    ensure(d.commutes(), || "summand retract diagram does not commute".into())?;
    ensure(admissible_mono(&d.i).is_none() || admissible_mono(&j).is_some(), || {
        format!("retract of an admissible mono is not admissible: {j:?}")
    })?;
    // A chain-split mono as a retract of (1; −f).
    let a = random_complex(rng, b);
    let c = random_complex(rng, b);
    let sum = direct_sum(&a, &c).map_err(|e| e.to_string())?;
    let (_, phi, phi_inv) = random_isomorphic(rng, &sum.sum);
    let f = phi.after(&sum.in1);
    let g = sum.pr1.after(&phi_inv);
    let d = retract_embedding(&f, &g).map_err(|e| e.to_string())?;
    ensure(admissible_mono(&d.i).is_some(), || "(1; −f) is not admissible".into())?;
    ensure(admissible_mono(&f).is_some(), || format!("split mono not admissible: {f:?}"))
}

fn epi_retracts(rng: &mut ChaCha8Rng, b: &SampleBounds) -> Result<(), String> {
    let j = if rng.gen_bool(0.5) {
        random_ses(rng, b, None, None).p
    } else {
        let x = random_complex(rng, b);
        let y = random_complex(rng, b);
        random_chain_map(rng, &x, &y)
    };
    let k = random_ses(rng, b, None, None).p;
    let d = summand_diagram(&j, &k);
    ensure(d.commutes(), || "summand retract diagram does not commute".into())?;
    ensure(admissible_epi(&d.i).is_none() || admissible_epi(&j).is_some(), || {
        format!("retract of an admissible epi is not admissible: {j:?}")
    })
}
