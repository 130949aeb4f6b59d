//! Seeded samplers for complexes, chain maps and changes of basis.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::complex::{ChainComplex, ChainMap, HomComplex};
use crate::linalg::{kernel_basis, ExactMatrix, Ring};

/// Size limits for sampled complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleBounds {
    pub ring: Ring,
    pub max_rank: usize,
    pub max_span: usize,
    pub entry_bound: i64,
}

impl SampleBounds {
    pub fn new(ring: Ring) -> Self {
        SampleBounds { ring, max_rank: 3, max_span: 3, entry_bound: 3 }
    }

    pub fn with_limits(ring: Ring, max_rank: usize, max_span: usize, entry_bound: i64) -> Self {
        SampleBounds { ring, max_rank, max_span, entry_bound }
    }
}

fn small_entry<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    if bound == 0 || rng.gen_bool(0.4) { 0 } else { rng.gen_range(-bound..=bound) }
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, ring: Ring, rows: usize, cols: usize, bound: i64) -> ExactMatrix {
    let entries = (0..rows * cols).map(|_| ring.from_i64(small_entry(rng, bound))).collect();
    ExactMatrix::from_entries(ring, rows, cols, entries).expect("sizes agree")
}

fn within(m: &ExactMatrix, bound: i64) -> bool {
    let b = BigInt::from(bound);
    m.entries().iter().all(|x| *x <= b && *x >= -&b)
}

/// A random bounded complex with `d² = 0` and entries in `[-entry_bound, entry_bound]`
/// (representatives in `[0, p)` over 𝔽_p).
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, b: &SampleBounds) -> ChainComplex {
    let ring = b.ring;
    let span = rng.gen_range(1..=b.max_span.max(1));
    let lo = rng.gen_range(-1..=1);
    let ranks: Vec<usize> = (0..span).map(|_| rng.gen_range(0..=b.max_rank)).collect();
    let mut diffs: Vec<(i64, ExactMatrix)> = Vec::new();
    let mut below = ExactMatrix::zeros(ring, 0, ranks[0]);
    for k in 1..span {
        let n = lo + k as i64;
        let (r_lo, r_hi) = (ranks[k - 1], ranks[k]);
        // Columns of d_n must lie in ker d_{n-1}.
        let kernel = kernel_basis(&below);
        let mut d = ExactMatrix::zeros(ring, r_lo, r_hi);
        for _ in 0..8 {
            let coeffs = random_matrix(rng, ring, kernel.cols(), r_hi, 1);
            let cand = &kernel * &coeffs;
            if within(&cand, b.entry_bound.max(1)) {
                d = cand;
                break;
            }
        }
        diffs.push((n, d.clone()));
        below = d;
    }
    ChainComplex::checked(ring, lo, ranks, diffs).expect("sampled complex is valid")
}

/// A random chain map, drawn as a small combination of a ℤ-basis of the
/// degree-0 cycles of the Hom-complex (so every chain map can occur).
pub fn random_chain_map<R: Rng + ?Sized>(rng: &mut R, x: &ChainComplex, y: &ChainComplex) -> ChainMap {
    let hom = HomComplex::new(x, y).expect("same ring");
    let cycles = kernel_basis(&hom.differential(0));
    let coeffs = random_matrix(rng, x.ring(), cycles.cols(), 1, 1);
    let v = &cycles * &coeffs;
    hom.map_from_vector(&v)
}

/// A random degree-`k` cycle of `Hom(X, Y)`, returned per source degree.
pub fn random_hom_cycle<R: Rng + ?Sized>(
    rng: &mut R,
    x: &ChainComplex,
    y: &ChainComplex,
    k: i64,
) -> Vec<(i64, ExactMatrix)> {
    let hom = HomComplex::new(x, y).expect("same ring");
    let cycles = kernel_basis(&hom.differential(k));
    let coeffs = random_matrix(rng, x.ring(), cycles.cols(), 1, 1);
    let v = &cycles * &coeffs;
    x.degrees().map(|n| (n, hom.unflatten(k, &v, n))).collect()
}

/// A random invertible matrix and its inverse, as a product of elementary operations.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, ring: Ring, n: usize) -> (ExactMatrix, ExactMatrix) {
    let mut u = ExactMatrix::identity(ring, n);
    let mut u_inv = ExactMatrix::identity(ring, n);
    if n < 2 {
        if n == 1 {
            if let Ring::PrimeField(p) = ring {
                let c = BigInt::from(rng.gen_range(1..p.get()));
                let inv = ring.inverse(&c).expect("unit");
                u = u.scale(&c);
                u_inv = u_inv.scale(&inv);
            } else if rng.gen_bool(0.5) {
                u = u.scale(&BigInt::from(-1));
                u_inv = u_inv.scale(&BigInt::from(-1));
            }
        }
        return (u, u_inv);
    }
    for _ in 0..n + 2 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = ring.from_i64(if rng.gen_bool(0.5) { 1 } else { -1 });
        if c.is_zero() {
            continue;
        }
        // u ← E u with E: row_i += c row_j; u⁻¹ ← u⁻¹ E⁻¹.
        u.add_row_multiple(i, j, &c);
        u_inv.add_col_multiple(j, i, &ring.neg(&c));
    }
    (u, u_inv)
}

/// A complex isomorphic to `x` through a random degreewise change of basis,
/// with the isomorphism `x → x'` and its inverse.
pub fn random_isomorphic<R: Rng + ?Sized>(rng: &mut R, x: &ChainComplex) -> (ChainComplex, ChainMap, ChainMap) {
    let ring = x.ring();
    let mut us = Vec::new();
    for n in x.degrees() {
        us.push((n, random_unimodular(rng, ring, x.rank(n))));
    }
    let get = |n: i64| -> (ExactMatrix, ExactMatrix) {
        us.iter()
            .find(|(m, _)| *m == n)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| (ExactMatrix::identity(ring, x.rank(n)), ExactMatrix::identity(ring, x.rank(n))))
    };
    let diffs = x
        .degrees()
        .map(|n| (n, &(&get(n - 1).0 * &*x.d(n)) * &get(n).1))
        .collect();
    let y = ChainComplex::checked(ring, x.min_degree(), x.ranks().to_vec(), diffs).expect("conjugate is valid");
    let to = ChainMap::from_fn(x, &y, |n| get(n).0);
    let from = ChainMap::from_fn(&y, x, |n| get(n).1);
    (y, to, from)
}
