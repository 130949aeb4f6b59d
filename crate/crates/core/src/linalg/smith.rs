//! Smith normal form and the solvers built on it.
//!
//! Every routine here works uniformly over ℤ and 𝔽_p: over a field the
//! invariant factors are ones followed by zeros and the reduction is plain
//! Gauss–Jordan elimination in both directions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Ring};

/// `u · a · v = diag(d)` with `d₁ | d₂ | …` and zeros last.
///
/// The inverses of the transforms are tracked alongside so kernels,
/// images and left inverses can be read off without a second solve.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: Vec<BigInt>,
    pub u: ExactMatrix,
    pub v: ExactMatrix,
    pub(crate) u_inv: ExactMatrix,
    pub(crate) v_inv: ExactMatrix,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d.iter().take_while(|x| !x.is_zero()).count()
    }

    pub fn u_inverse(&self) -> &ExactMatrix {
        &self.u_inv
    }

    pub fn v_inverse(&self) -> &ExactMatrix {
        &self.v_inv
    }

    /// `diag(d)` with the shape of the original matrix.
    pub fn diagonal_matrix(&self) -> ExactMatrix {
        let ring = self.u.ring();
        ExactMatrix::diagonal(ring, self.u.rows(), self.v.rows(), &self.d)
    }
}

struct Reducer {
    ring: Ring,
    a: ExactMatrix,
    u: ExactMatrix,
    u_inv: ExactMatrix,
    v: ExactMatrix,
    v_inv: ExactMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row_i += c · row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_row_multiple(i, j, c);
        self.u.add_row_multiple(i, j, c);
        let neg = self.ring.neg(c);
        self.u_inv.add_col_multiple(j, i, &neg);
    }

    /// col_i += c · col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_col_multiple(i, j, c);
        self.v.add_col_multiple(i, j, c);
        let neg = self.ring.neg(c);
        self.v_inv.add_row_multiple(j, i, &neg);
    }

    fn scale_row(&mut self, i: usize, unit: &BigInt) {
        let inv = self.ring.inverse(unit).expect("scaling by a unit");
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, &inv);
    }

    /// Position of the nonzero entry of least norm in the trailing block.
    fn least_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let n = self.ring.norm(x);
                if best.as_ref().is_none_or(|(b, _, _)| n < *b) {
                    let unit = n.is_one();
                    best = Some((n, i, j));
                    if unit {
                        break;
                    }
                }
            }
            if best.as_ref().is_some_and(|(b, _, _)| b.is_one()) {
                break;
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn reduce(&mut self) -> Vec<BigInt> {
        let (m, n) = self.a.shape();
        let mut d = Vec::with_capacity(m.min(n));
        for t in 0..m.min(n) {
            let Some((pi, pj)) = self.least_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                // Clear column t and row t by Euclidean steps.
                let mut remainder = false;
                for i in t + 1..m {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.ring.quotient(self.a.get(i, t), self.a.get(t, t));
                    self.add_row(i, t, &self.ring.neg(&q));
                    remainder |= !self.a.get(i, t).is_zero();
                }
                for j in t + 1..n {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.ring.quotient(self.a.get(t, j), self.a.get(t, t));
                    self.add_col(j, t, &self.ring.neg(&q));
                    remainder |= !self.a.get(t, j).is_zero();
                }
                if remainder {
                    // A surviving remainder is strictly smaller than the pivot.
                    let (bi, bj) = self.least_in_cross(t);
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                // Enforce divisibility of the trailing block by the pivot.
                let pivot = self.a.get(t, t).clone();
                let offender = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.ring.divides(&pivot, self.a.get(i, j)))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            let unit = self.ring.normalizing_unit(self.a.get(t, t));
            if !unit.is_one() {
                self.scale_row(t, &unit);
            }
            d.push(self.a.get(t, t).clone());
        }
        d.resize(m.min(n), BigInt::zero());
        d
    }

    /// Least nonzero entry in row t / column t (pivot included).
    fn least_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (self.ring.norm(self.a.get(t, t)), t, t);
        for i in t + 1..self.a.rows() {
            let x = self.a.get(i, t);
            if !x.is_zero() && self.ring.norm(x) < best.0 {
                best = (self.ring.norm(x), i, t);
            }
        }
        for j in t + 1..self.a.cols() {
            let x = self.a.get(t, j);
            if !x.is_zero() && self.ring.norm(x) < best.0 {
                best = (self.ring.norm(x), t, j);
            }
        }
        (best.1, best.2)
    }
}

pub fn smith_form(a: &ExactMatrix) -> SmithForm {
    let ring = a.ring();
    let (m, n) = a.shape();
    let mut r = Reducer {
        ring,
        a: a.clone(),
        u: ExactMatrix::identity(ring, m),
        u_inv: ExactMatrix::identity(ring, m),
        v: ExactMatrix::identity(ring, n),
        v_inv: ExactMatrix::identity(ring, n),
    };
    let d = r.reduce();
    SmithForm { d, u: r.u, v: r.v, u_inv: r.u_inv, v_inv: r.v_inv }
}

/// Some `x` with `a · x = b`, or `None` if the system has no solution over the ring.
pub fn solve_linear(a: &ExactMatrix, b: &ExactMatrix) -> Result<Option<ExactMatrix>> {
    a.ring().ensure_same(&b.ring())?;
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "solve: system has {} rows but right-hand side has {}",
            a.rows(),
            b.rows()
        )));
    }
    Ok(solve_with(&smith_form(a), b))
}

/// Solve against a precomputed Smith form of the coefficient matrix.
pub fn solve_with(s: &SmithForm, b: &ExactMatrix) -> Option<ExactMatrix> {
    let ring = b.ring();
    let rank = s.rank();
    let n = s.v.rows();
    let ub = &s.u * b;
    let mut y = ExactMatrix::zeros(ring, n, b.cols());
    for i in 0..ub.rows() {
        for j in 0..b.cols() {
            let c = ub.get(i, j);
            if i < rank {
                let di = &s.d[i];
                if !ring.divides(di, c) {
                    return None;
                }
                let q = match ring {
                    Ring::Integers => c / di,
                    Ring::PrimeField(_) => ring.mul(c, &ring.inverse(di).expect("unit pivot")),
                };
                y.set(i, j, q);
            } else if !c.is_zero() {
                return None;
            }
        }
    }
    Some(&s.v * &y)
}

/// Columns form a basis of `{x : a·x = 0}` (a ℤ-basis of the kernel lattice over ℤ).
pub fn kernel_basis(a: &ExactMatrix) -> ExactMatrix {
    let s = smith_form(a);
    kernel_from(&s)
}

pub(crate) fn kernel_from(s: &SmithForm) -> ExactMatrix {
    let idx: Vec<usize> = (s.rank()..s.v.cols()).collect();
    s.v.select_columns(&idx)
}

/// A left inverse of the kernel basis returned by [`kernel_from`].
pub(crate) fn kernel_left_inverse(s: &SmithForm) -> ExactMatrix {
    let idx: Vec<usize> = (s.rank()..s.v_inv.rows()).collect();
    s.v_inv.select_rows(&idx)
}

pub fn rank(a: &ExactMatrix) -> usize {
    smith_form(a).rank()
}

fn pseudo_inverse(a: &ExactMatrix, s: &SmithForm) -> Option<ExactMatrix> {
    let ring = a.ring();
    let r = s.rank();
    if s.d[..r].iter().any(|x| !ring.is_unit(x)) {
        return None;
    }
    let mut dplus = ExactMatrix::zeros(ring, a.cols(), a.rows());
    for i in 0..r {
        dplus.set(i, i, ring.inverse(&s.d[i]).expect("unit"));
    }
    Some(&(&s.v * &dplus) * &s.u)
}

/// Some `r` with `r · a = 1`, or `None` when `a` is not split injective.
pub fn split_injection_witness(a: &ExactMatrix) -> Option<ExactMatrix> {
    let s = smith_form(a);
    if s.rank() != a.cols() {
        return None;
    }
    pseudo_inverse(a, &s)
}

/// Some `s` with `a · s = 1`, or `None` when `a` is not split surjective.
pub fn split_surjection_witness(a: &ExactMatrix) -> Option<ExactMatrix> {
    let s = smith_form(a);
    if s.rank() != a.rows() {
        return None;
    }
    pseudo_inverse(a, &s)
}

/// Basis of the column lattice of `a` in reduced column-echelon (Hermite)
/// form: pivots are the topmost nonzero entries, normalized to be positive
/// (to 1 over a field), and entries to the left of each pivot are reduced
/// modulo it. The result is canonical for the lattice.
pub fn column_echelon(a: &ExactMatrix) -> ExactMatrix {
    let ring = a.ring();
    let mut m = a.clone();
    let (rows, cols) = m.shape();
    let mut c = 0;
    for i in 0..rows {
        if c == cols {
            break;
        }
        // Euclid on row i across columns c.. until a single nonzero remains.
        loop {
            let mut best: Option<usize> = None;
            for j in c..cols {
                let x = m.get(i, j);
                if !x.is_zero() && best.is_none_or(|b| ring.norm(x) < ring.norm(m.get(i, b))) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            m.swap_cols(c, b);
            let mut done = true;
            for j in c + 1..cols {
                if m.get(i, j).is_zero() {
                    continue;
                }
                let q = ring.quotient(m.get(i, j), m.get(i, c));
                m.add_col_multiple(j, c, &ring.neg(&q));
                done &= m.get(i, j).is_zero();
            }
            if done {
                break;
            }
        }
        if m.get(i, c).is_zero() {
            continue;
        }
        let unit = ring.normalizing_unit(m.get(i, c));
        m.scale_col(c, &unit);
        for j in 0..c {
            if m.get(i, j).is_zero() {
                continue;
            }
            let q = ring.quotient(m.get(i, j), m.get(i, c));
            m.add_col_multiple(j, c, &ring.neg(&q));
        }
        c += 1;
    }
    let idx: Vec<usize> = (0..c).collect();
    m.select_columns(&idx)
}

/// Canonical basis `b` of the image of an idempotent `e` with a left inverse
/// `l`, so that `l · e` gives coordinates in that basis. The image of an
/// idempotent is a direct summand, hence the left inverse exists.
pub fn idempotent_image(e: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let b = column_echelon(e);
    let l = split_injection_witness(&b)
        .ok_or_else(|| Error::InvalidWitness("image of the projector is not a direct summand".into()))?;
    Ok((b, l))
}

/// Inverse of a square matrix, if it is invertible over the ring.
pub fn inverse(a: &ExactMatrix) -> Option<ExactMatrix> {
    if a.rows() != a.cols() {
        return None;
    }
    split_injection_witness(a)
}
