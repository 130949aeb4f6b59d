//! The small named complexes used throughout examples and tests.

use crate::complex::{ChainComplex, ChainMap};
use crate::linalg::{ExactMatrix, Ring};

/// `Z0`, the zero complex.
pub fn z0(ring: Ring) -> ChainComplex {
    ChainComplex::zero(ring)
}

/// `S0`: rank one in degree 0.
pub fn s0(ring: Ring) -> ChainComplex {
    ChainComplex::new(ring, 0, vec![1], vec![]).expect("valid")
}

/// `S1 = Σ S0`: rank one in degree 1.
pub fn s1(ring: Ring) -> ChainComplex {
    s0(ring).shift(1)
}

/// Rank one in degree `n`.
pub fn sphere(ring: Ring, n: i64) -> ChainComplex {
    s0(ring).shift(n)
}

/// `[R --c--> R]` in degrees 1, 0.
pub fn interval(ring: Ring, c: i64) -> ChainComplex {
    ChainComplex::new(ring, 0, vec![1, 1], vec![(1, ExactMatrix::scalar(ring, c))]).expect("valid")
}

/// `D1 = [R --1--> R]`, the disk.
pub fn d1(ring: Ring) -> ChainComplex {
    interval(ring, 1)
}

/// `K2 = [ℤ --2--> ℤ]`.
pub fn k2() -> ChainComplex {
    interval(Ring::Integers, 2)
}

/// `F2K0 = [𝔽₂ --0--> 𝔽₂]`.
pub fn f2k0() -> ChainComplex {
    interval(Ring::f2(), 0)
}

/// The degree-0 identity `S0 → D1`.
pub fn s0_into_d1(ring: Ring) -> ChainMap {
    ChainMap::checked(s0(ring), d1(ring), vec![(0, ExactMatrix::scalar(ring, 1))]).expect("chain map")
}

/// The degree-1 identity `D1 → S1`.
pub fn d1_onto_s1(ring: Ring) -> ChainMap {
    ChainMap::checked(d1(ring), s1(ring), vec![(1, ExactMatrix::scalar(ring, 1))]).expect("chain map")
}
