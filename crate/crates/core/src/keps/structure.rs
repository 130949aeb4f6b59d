use crate::error::{Error, Result};
use crate::keps::module::{KEpsHom, KEpsModule};
use crate::linalg::{inverse, kernel_basis, rank, solve_linear, ExactMatrix};

/// `m ≅ k^a ⊕ k[ε]^b` with the isomorphisms to and from the normal form.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub a: usize,
    pub b: usize,
    pub to_normal: KEpsHom,
    pub from_normal: KEpsHom,
}

fn extend_independent(cols: &mut Vec<ExactMatrix>, candidates: impl IntoIterator<Item = ExactMatrix>) {
    for c in candidates {
        let mut trial = cols.clone();
        trial.push(c.clone());
        let stacked = ExactMatrix::hstack(&trial.iter().collect::<Vec<_>>());
        if rank(&stacked) == trial.len() {
            cols.push(c);
        }
    }
}

pub fn decompose(m: &KEpsModule) -> Decomposition {
    let k = m.field();
    let n = m.dim();
    let eps = m.eps();
    // Columns of ε giving a basis of im ε, with the unit vectors mapping onto them.
    let mut image = Vec::new();
    let mut pivots = Vec::new();
    for j in 0..n {
        let before = image.len();
        extend_independent(&mut image, [eps.column(j)]);
        if image.len() > before {
            pivots.push(j);
        }
    }
    let b = image.len();
    let kernel = kernel_basis(eps);
    let mut ker_cols = image.clone();
    extend_independent(&mut ker_cols, (0..kernel.cols()).map(|j| kernel.column(j)));
    let complement = &ker_cols[b..];
    let a = complement.len();
    let mut basis: Vec<ExactMatrix> = complement.to_vec();
    for (w, &j) in image.iter().zip(&pivots) {
        let mut e = ExactMatrix::zeros(k, n, 1);
        e.set(j, 0, 1.into());
        basis.push(w.clone());
        basis.push(e);
    }
    let nf = KEpsModule::normal_form(k, a, b);
    let t = if n == 0 { ExactMatrix::zeros(k, 0, 0) } else { ExactMatrix::hstack(&basis.iter().collect::<Vec<_>>()) };
    let t_inv = inverse(&t).expect("basis adapted to ε");
    let from_normal = KEpsHom::new(nf.clone(), m.clone(), t).expect("normal form basis");
    let to_normal = KEpsHom::new(m.clone(), nf, t_inv).expect("inverse of a module map");
    Decomposition { a, b, to_normal, from_normal }
}

pub fn is_free(m: &KEpsModule) -> bool {
    m.dim() == 2 * rank(m.eps())
}

/// A short exact sequence of modules `K ↣ M ↠ C`.
#[derive(Clone, Debug)]
pub struct KEpsSes {
    pub i: KEpsHom,
    pub p: KEpsHom,
}

impl KEpsSes {
    pub fn verify(&self) -> Result<()> {
        let mid = self.i.target.dim();
        if self.p.source != self.i.target {
            return Err(Error::InvalidWitness("middle terms differ".into()));
        }
        if !(&self.p.matrix * &self.i.matrix).is_zero() {
            return Err(Error::InvalidWitness("p ∘ i ≠ 0".into()));
        }
        let (ri, rp) = (rank(&self.i.matrix), rank(&self.p.matrix));
        if ri != self.i.source.dim() || rp != self.p.target.dim() || ri + rp != mid {
            return Err(Error::InvalidWitness("sequence is not exact".into()));
        }
        Ok(())
    }

    /// Some section of `p` that is `k[ε]`-linear, if the sequence splits.
    pub fn splitting(&self) -> Option<KEpsHom> {
        let c = &self.p.target;
        let mid = &self.p.source;
        let basis = crate::keps::module::hom_basis(c, mid).ok()?;
        // p ∘ s = 1 as a linear condition on the coefficients of s.
        let post = self.p.matrix.kron(&ExactMatrix::identity(c.field(), c.dim()));
        let a = &post * &basis;
        let target = ExactMatrix::identity(c.field(), c.dim()).flatten();
        let coeffs = solve_linear(&a, &target).ok()??;
        Some(crate::keps::module::hom_from_vector(c, mid, &(&basis * &coeffs)))
    }
}

/// Kernel of a module map with its inclusion.
pub fn kernel(f: &KEpsHom) -> KEpsHom {
    let kb = kernel_basis(&f.matrix);
    let eps_k = solve_linear(&kb, &(f.source.eps() * &kb)).expect("shapes").expect("kernel is a submodule");
    let kmod = KEpsModule::new(eps_k).expect("submodule");
    KEpsHom::new(kmod, f.source.clone(), kb).expect("inclusion")
}

/// Cokernel of a module map with its projection, through a basis of the
/// left kernel.
pub fn cokernel(f: &KEpsHom) -> KEpsHom {
    let q = kernel_basis(&f.matrix.transpose()).transpose();
    let eps_c = solve_linear(&q.transpose(), &(&q * f.target.eps()).transpose())
        .expect("shapes")
        .expect("image is a submodule")
        .transpose();
    let cmod = KEpsModule::new(eps_c).expect("quotient module");
    KEpsHom::new(f.target.clone(), cmod, q).expect("quotient map")
}

/// `K ↣ k[ε] ⊗ V ↠ m` with `V` the underlying space of `m`; the free
/// module has basis `(ε ⊗ e_j, 1 ⊗ e_j)` and the projection sends
/// `1 ⊗ e_j ↦ e_j`.
pub fn free_cover(m: &KEpsModule) -> KEpsSes {
    let k = m.field();
    let n = m.dim();
    let mut pi = ExactMatrix::zeros(k, n, 2 * n);
    for j in 0..n {
        for i in 0..n {
            pi.set(i, 2 * j, m.eps().get(i, j).clone());
        }
        pi.set(j, 2 * j + 1, 1.into());
    }
    let p = KEpsHom::new(KEpsModule::free(k, n), m.clone(), pi).expect("augmentation is linear");
    KEpsSes { i: kernel(&p), p }
}

/// `m ↣ k[ε] ⊗ V ↠ C` with `ι(v) = ε ⊗ v + 1 ⊗ ε v`.
pub fn free_envelope(m: &KEpsModule) -> KEpsSes {
    let k = m.field();
    let n = m.dim();
    let mut iota = ExactMatrix::zeros(k, 2 * n, n);
    for c in 0..n {
        iota.set(2 * c, c, 1.into());
        for j in 0..n {
            iota.set(2 * j + 1, c, m.eps().get(j, c).clone());
        }
    }
    let i = KEpsHom::new(m.clone(), KEpsModule::free(k, n), iota).expect("envelope is linear");
    KEpsSes { p: cokernel(&i), i }
}

/// A random extension `a ↣ e ↠ c`: the middle is `a ⊕ c` with
/// `ε = [[ε_a, τ], [0, ε_c]]` for a random admissible `τ`, seen through a
/// random change of basis.
pub fn random_extension<R: rand::Rng + ?Sized>(rng: &mut R, a: &KEpsModule, c: &KEpsModule) -> Result<KEpsSes> {
    use crate::complex::random::{random_matrix, random_unimodular};
    let k = a.field();
    k.ensure_same(&c.field())?;
    let (da, dc) = (a.dim(), c.dim());
    // ε² = 0 on the middle term iff ε_a τ + τ ε_c = 0.
    let op = &a.eps().kron(&ExactMatrix::identity(k, dc)) + &ExactMatrix::identity(k, da).kron(&c.eps().transpose());
    let basis = kernel_basis(&op);
    let coeffs = random_matrix(rng, k, basis.cols(), 1, k.characteristic() as i64);
    let tau = (&basis * &coeffs).reshape(da, dc);
    let eps = ExactMatrix::blocks2(a.eps(), &tau, &ExactMatrix::zeros(k, dc, da), c.eps());
    let (t, t_inv) = random_unimodular(rng, k, da + dc);
    let mid = KEpsModule::new(&(&t * &eps) * &t_inv)?;
    let i = ExactMatrix::vstack(&[&ExactMatrix::identity(k, da), &ExactMatrix::zeros(k, dc, da)]);
    let p = ExactMatrix::hstack(&[&ExactMatrix::zeros(k, dc, da), &ExactMatrix::identity(k, dc)]);
    let i = KEpsHom::new(a.clone(), mid.clone(), &t * &i)?;
    let p = KEpsHom::new(mid, c.clone(), &p * &t_inv)?;
    Ok(KEpsSes { i, p })
}
