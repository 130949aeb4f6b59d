use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dw_exact::AxiomReport;
use crate::seeding::sample_rng;

/// A failing sample; re-running the same check with the same seed and at
/// least `index + 1` samples reproduces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub seed: u64,
    pub index: u64,
    pub description: String,
}

/// Outcome of a sampled check. `passed` means no counterexample was found
/// in `samples_run` samples, nothing stronger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    pub samples_run: usize,
    /// Samples where the sampler gave up before producing a test case.
    pub inconclusive: usize,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

pub(crate) enum Outcome {
    Pass,
    Fail(String),
    Inconclusive(String),
}

impl Verdict {
    pub fn merge(check: &str, parts: Vec<Verdict>) -> Verdict {
        let mut v = Verdict {
            check: check.into(),
            passed: true,
            samples_run: 0,
            inconclusive: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        };
        for p in parts {
            v.samples_run += p.samples_run;
            v.inconclusive += p.inconclusive;
            v.counterexamples.extend(p.counterexamples.into_iter().map(|c| Counterexample {
                description: format!("{}: {}", p.check, c.description),
                ..c
            }));
            v.notes.extend(p.notes.into_iter().map(|n| format!("{}: {n}", p.check)));
        }
        v.passed = v.counterexamples.is_empty();
        v
    }
}

/// Run `n` samples, sample `k` drawing from the stream `(seed, k)`.
pub(crate) fn run_samples(check: &str, seed: u64, n: usize, mut f: impl FnMut(&mut ChaCha8Rng) -> Outcome) -> Verdict {
    let mut counterexamples = Vec::new();
    let mut inconclusive = 0;
    let mut notes = Vec::new();
    for index in 0..n as u64 {
        let mut rng = sample_rng(seed, index);
        match f(&mut rng) {
            Outcome::Pass => {}
            Outcome::Fail(description) => counterexamples.push(Counterexample { seed, index, description }),
            Outcome::Inconclusive(why) => {
                inconclusive += 1;
                if notes.len() < 5 {
                    notes.push(format!("sample {index}: {why}"));
                }
            }
        }
    }
    Verdict {
        check: check.into(),
        passed: counterexamples.is_empty(),
        samples_run: n,
        inconclusive,
        counterexamples,
        notes,
    }
}

impl From<&AxiomReport> for Verdict {
    fn from(r: &AxiomReport) -> Self {
        let parts = r
            .clauses
            .iter()
            .map(|c| Verdict {
                check: c.name.to_string(),
                passed: c.counterexamples.is_empty(),
                samples_run: c.samples,
                inconclusive: 0,
                counterexamples: c
                    .counterexamples
                    .iter()
                    .map(|(index, d)| Counterexample { seed: r.seed, index: *index, description: d.clone() })
                    .collect(),
                notes: Vec::new(),
            })
            .collect();
        Verdict::merge("axioms", parts)
    }
}
