use crate::complex::{ChainComplex, ChainMap, Homotopy};
use crate::error::Result;
use crate::linalg::{ExactMatrix, Ring};

/// One summand `Hom(X_n, Y_{n+k})` inside the flattened degree-`k` module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomBlock {
    pub n: i64,
    pub rows: usize,
    pub cols: usize,
    pub offset: usize,
}

/// The Hom-complex `Hom(X, Y)` realized on row-major flattened matrices.
///
/// Degree `k` is `⊕_n Hom(X_n, Y_{n+k})`, ordered by increasing `n`, and the
/// differential is `∂h = d_Y ∘ h − (−1)^k h ∘ d_X`. Degree-0 cycles are the
/// chain maps and degree-0 boundaries are the null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub complex: ChainComplex,
}

impl HomComplex {
    pub fn new(x: &ChainComplex, y: &ChainComplex) -> Result<Self> {
        x.ring().ensure_same(&y.ring())?;
        let ring = x.ring();
        if x.is_zero() || y.is_zero() {
            return Ok(HomComplex { source: x.clone(), target: y.clone(), complex: ChainComplex::zero(ring) });
        }
        let lo = y.min_degree() - x.max_degree();
        let hi = y.max_degree() - x.min_degree();
        let ranks: Vec<usize> = (lo..=hi).map(|k| blocks(x, y, k).iter().map(|b| b.rows * b.cols).sum()).collect();
        let complex = ChainComplex::from_fn(ring, lo, ranks, |k| differential(x, y, k));
        Ok(HomComplex { source: x.clone(), target: y.clone(), complex })
    }

    pub fn ring(&self) -> Ring {
        self.source.ring()
    }

    pub fn blocks(&self, k: i64) -> Vec<HomBlock> {
        blocks(&self.source, &self.target, k)
    }

    pub fn dim(&self, k: i64) -> usize {
        self.complex.rank(k)
    }

    /// `∂_k : Hom_k → Hom_{k-1}`.
    pub fn differential(&self, k: i64) -> ExactMatrix {
        self.complex.d(k).into_owned()
    }

    /// Flatten a degree-`k` family given per source degree.
    pub fn flatten(&self, k: i64, mut family: impl FnMut(i64) -> ExactMatrix) -> ExactMatrix {
        let bs = self.blocks(k);
        let mut entries = Vec::new();
        for b in &bs {
            let m = family(b.n);
            debug_assert_eq!(m.shape(), (b.rows, b.cols));
            entries.extend_from_slice(m.entries());
        }
        ExactMatrix::from_entries(self.ring(), entries.len(), 1, entries).expect("sizes agree")
    }

    /// Inverse of [`flatten`](Self::flatten): the matrix for source degree `n`.
    pub fn unflatten(&self, k: i64, v: &ExactMatrix, n: i64) -> ExactMatrix {
        let ring = self.ring();
        match self.blocks(k).into_iter().find(|b| b.n == n) {
            Some(b) => {
                let entries = (0..b.rows * b.cols).map(|i| v.get(b.offset + i, 0).clone()).collect();
                ExactMatrix::from_entries(ring, b.rows, b.cols, entries).expect("block size")
            }
            None => ExactMatrix::zeros(ring, self.target.rank(n + k), self.source.rank(n)),
        }
    }

    pub fn flatten_map(&self, f: &ChainMap) -> ExactMatrix {
        self.flatten(0, |n| f.component(n).into_owned())
    }

    pub fn map_from_vector(&self, v: &ExactMatrix) -> ChainMap {
        ChainMap::from_fn(&self.source, &self.target, |n| self.unflatten(0, v, n))
    }

    pub fn homotopy_from_vector(&self, f: &ChainMap, g: &ChainMap, v: &ExactMatrix) -> Result<Homotopy> {
        let comps = self.source.degrees().map(|n| (n, self.unflatten(1, v, n))).collect();
        Homotopy::new(f.clone(), g.clone(), comps)
    }

    /// Matrix of `h ↦ h ∘ f` from `Hom_k(Y, Z)` to `Hom_k(X, Z)` for `f : X → Y`,
    /// where `self = Hom(Y, Z)` and `into = Hom(X, Z)`.
    pub fn precompose_matrix(&self, into: &HomComplex, f: &ChainMap, k: i64) -> ExactMatrix {
        let ring = self.ring();
        let src = self.blocks(k);
        let dst = into.blocks(k);
        let mut m = ExactMatrix::zeros(ring, into.dim(k), self.dim(k));
        for b in &dst {
            if let Some(a) = src.iter().find(|a| a.n == b.n) {
                // (h f)_n = h_n f_n : vec(h_n f_n) = (I ⊗ f_nᵀ) vec(h_n)
                let block = ExactMatrix::identity(ring, a.rows).kron(&f.component(b.n).transpose());
                place(&mut m, b.offset, a.offset, &block);
            }
        }
        m
    }

    /// Matrix of `h ↦ f ∘ h` from `Hom_k(X, Y)` to `Hom_k(X, Z)` for `f : Y → Z`,
    /// where `self = Hom(X, Y)` and `into = Hom(X, Z)`.
    pub fn postcompose_matrix(&self, into: &HomComplex, f: &ChainMap, k: i64) -> ExactMatrix {
        let ring = self.ring();
        let src = self.blocks(k);
        let dst = into.blocks(k);
        let mut m = ExactMatrix::zeros(ring, into.dim(k), self.dim(k));
        for b in &dst {
            if let Some(a) = src.iter().find(|a| a.n == b.n) {
                let block = f.component(b.n + k).kron(&ExactMatrix::identity(ring, a.cols));
                place(&mut m, b.offset, a.offset, &block);
            }
        }
        m
    }
}

fn place(m: &mut ExactMatrix, r0: usize, c0: usize, block: &ExactMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            m.set(r0 + i, c0 + j, block.get(i, j).clone());
        }
    }
}

fn blocks(x: &ChainComplex, y: &ChainComplex, k: i64) -> Vec<HomBlock> {
    let mut out = Vec::new();
    let mut offset = 0;
    if x.is_zero() {
        return out;
    }
    for n in x.degrees() {
        let rows = y.rank(n + k);
        let cols = x.rank(n);
        if rows * cols == 0 {
            continue;
        }
        out.push(HomBlock { n, rows, cols, offset });
        offset += rows * cols;
    }
    out
}

fn differential(x: &ChainComplex, y: &ChainComplex, k: i64) -> ExactMatrix {
    let ring = x.ring();
    let src = blocks(x, y, k);
    let dst = blocks(x, y, k - 1);
    let rows = dst.iter().map(|b| b.rows * b.cols).sum();
    let cols = src.iter().map(|b| b.rows * b.cols).sum();
    let mut m = ExactMatrix::zeros(ring, rows, cols);
    let sign = if k.rem_euclid(2) == 0 { -1 } else { 1 };
    for b in &dst {
        let n = b.n;
        // d_Y ∘ h_n
        if let Some(a) = src.iter().find(|a| a.n == n) {
            let block = y.d(n + k).kron(&ExactMatrix::identity(ring, a.cols));
            place(&mut m, b.offset, a.offset, &block);
        }
        // −(−1)^k h_{n-1} ∘ d_X
        if let Some(a) = src.iter().find(|a| a.n == n - 1) {
            let block = ExactMatrix::identity(ring, a.rows)
                .kron(&x.d(n).transpose())
                .scale(&ring.from_i64(sign));
            place(&mut m, b.offset, a.offset, &block);
        }
    }
    m
}
