use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::smith::{kernel_from, kernel_left_inverse, smith_form};
use crate::linalg::{ExactMatrix, Ring};

/// A finitely generated module over the ring in invariant-factor form:
/// `R/d₁ ⊕ … ⊕ R/d_t ⊕ R^free_rank` with every `dᵢ` a non-unit and
/// `d₁ | d₂ | …`. Over a field the torsion list is always empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedGroup {
    pub ring: Ring,
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl PresentedGroup {
    pub fn zero(ring: Ring) -> Self {
        PresentedGroup { ring, torsion: Vec::new(), free_rank: 0 }
    }

    pub fn free(ring: Ring, rank: usize) -> Self {
        PresentedGroup { ring, torsion: Vec::new(), free_rank: rank }
    }

    /// `R/(order)` in canonical form: free for order 0, zero for a unit.
    pub fn cyclic(ring: Ring, order: i64) -> Self {
        let d = ring.reduce(BigInt::from(order.unsigned_abs()));
        if d.is_zero() {
            Self::free(ring, 1)
        } else if ring.is_unit(&d) {
            Self::zero(ring)
        } else {
            PresentedGroup { ring, torsion: vec![d], free_rank: 0 }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Number of cyclic summands, i.e. the length of a coordinate vector.
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Order of the i-th coordinate (`None` for a free coordinate over ℤ).
    pub fn coordinate_modulus(&self, i: usize) -> Option<BigInt> {
        if i < self.torsion.len() {
            Some(self.torsion[i].clone())
        } else {
            match self.ring {
                Ring::Integers => None,
                Ring::PrimeField(p) => Some(BigInt::from(p.get())),
            }
        }
    }

    /// `k`-fold direct sum, rebuilt into invariant-factor form.
    pub fn power(&self, k: usize) -> Self {
        let mut diag = Vec::new();
        for _ in 0..k {
            diag.extend(self.torsion.iter().cloned());
        }
        let n = diag.len();
        let rel = ExactMatrix::diagonal(self.ring, n, n, &diag);
        let mut g = cokernel_presentation(&rel);
        g.free_rank += self.free_rank * k;
        g
    }
}

impl fmt::Display for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let base = match self.ring {
            Ring::Integers => "Z".to_string(),
            Ring::PrimeField(p) => format!("F{}", p.get()),
        };
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("{base}/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push(base),
            r => parts.push(format!("{base}^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The cokernel of `a : R^cols → R^rows`.
pub fn cokernel_presentation(a: &ExactMatrix) -> PresentedGroup {
    let s = smith_form(a);
    let ring = a.ring();
    let r = s.rank();
    let torsion = s.d[..r].iter().filter(|x| !ring.is_unit(x)).cloned().collect();
    PresentedGroup { ring, torsion, free_rank: a.rows() - r }
}

/// `ker(outgoing) / im(incoming)` with explicit generators and a coordinate map.
///
/// Ambient vectors are columns of length `outgoing.cols() == incoming.rows()`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub group: PresentedGroup,
    /// One ambient cycle per cyclic summand, in coordinate order.
    pub generators: ExactMatrix,
    outgoing: ExactMatrix,
    coordinates: ExactMatrix,
}

impl Subquotient {
    pub fn new(outgoing: &ExactMatrix, incoming: &ExactMatrix) -> Result<Self> {
        let ring = outgoing.ring();
        ring.ensure_same(&incoming.ring())?;
        if outgoing.cols() != incoming.rows() {
            return Err(Error::Dimension(format!(
                "subquotient: outgoing map has {} columns, incoming map has {} rows",
                outgoing.cols(),
                incoming.rows()
            )));
        }
        if !(outgoing * incoming).is_zero() {
            return Err(Error::InvalidWitness("outgoing ∘ incoming ≠ 0".into()));
        }
        let s0 = smith_form(outgoing);
        let cycles = kernel_from(&s0);
        let cycles_left = kernel_left_inverse(&s0);
        let relations = &cycles_left * incoming;
        let s1 = smith_form(&relations);
        let r1 = s1.rank();
        let k = cycles.cols();
        let mut idx = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..r1 {
            if !ring.is_unit(&s1.d[i]) {
                idx.push(i);
                torsion.push(s1.d[i].clone());
            }
        }
        idx.extend(r1..k);
        let group = PresentedGroup { ring, torsion, free_rank: k - r1 };
        let generators = &cycles * &s1.u_inv.select_columns(&idx);
        let coordinates = &s1.u.select_rows(&idx) * &cycles_left;
        Ok(Subquotient { group, generators, outgoing: outgoing.clone(), coordinates })
    }

    pub fn ambient_dim(&self) -> usize {
        self.outgoing.cols()
    }

    pub fn generator(&self, i: usize) -> ExactMatrix {
        self.generators.column(i)
    }

    /// Canonical coordinates of an ambient cycle: torsion coordinates are
    /// reduced into `[0, dᵢ)`, so two cycles have equal coordinates exactly
    /// when they differ by a boundary.
    pub fn reduce(&self, v: &ExactMatrix) -> Result<Vec<BigInt>> {
        if v.shape() != (self.ambient_dim(), 1) {
            return Err(Error::Dimension(format!(
                "expected a column of length {}, got {:?}",
                self.ambient_dim(),
                v.shape()
            )));
        }
        self.group.ring.ensure_same(&v.ring())?;
        if !(&self.outgoing * v).is_zero() {
            return Err(Error::NotACycle);
        }
        let w = &self.coordinates * v;
        Ok((0..w.rows())
            .map(|i| {
                let x = w.get(i, 0).clone();
                match self.group.coordinate_modulus(i) {
                    Some(m) => x.mod_floor(&m),
                    None => x,
                }
            })
            .collect())
    }

    /// Ambient cycle representing the given coordinates.
    pub fn element(&self, coords: &[BigInt]) -> ExactMatrix {
        let ring = self.group.ring;
        let c = ExactMatrix::from_entries(ring, coords.len(), 1, coords.to_vec())
            .expect("coordinate length");
        &self.generators * &c
    }
}

/// Unit vector helper for coordinate comparisons.
pub fn unit_coordinates(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}
