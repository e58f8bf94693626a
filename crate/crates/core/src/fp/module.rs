//! Finite-dimensional modules over the group algebra of a cyclic group of
//! order p, i.e. GF(p)-spaces with an automorphism sigma of order dividing p.
//!
//! Over GF(p) such an automorphism is unipotent, so the module is a direct
//! sum of Jordan blocks M_1..M_p for sigma-1, and the block multiplicities
//! are a complete isomorphism invariant. They are read off the rank profile
//! r_k = rank((sigma-1)^k) without ever choosing a chain basis; chain bases
//! are extracted separately where a distinguished block generator is needed.

use crate::error::{Error, Result};
use crate::fp::matrix::{is_prime, vec_is_zero, Echelon, GfpMatrix};

/// Multiplicities of the indecomposables M_1..M_p.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMultiset {
    p: u32,
    counts: Vec<usize>, // index i-1 holds the multiplicity of M_i
}

impl ModuleMultiset {
    pub fn empty(p: u32) -> Self {
        ModuleMultiset {
            p,
            counts: vec![0; p as usize],
        }
    }

    pub fn from_pairs(p: u32, pairs: &[(usize, usize)]) -> Self {
        let mut ms = Self::empty(p);
        for &(i, n) in pairs {
            ms.add_blocks(i, n);
        }
        ms
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn add_blocks(&mut self, size: usize, n: usize) {
        assert!(size >= 1 && size <= self.p as usize, "block size out of range");
        self.counts[size - 1] += n;
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        if size >= 1 && size <= self.p as usize {
            self.counts[size - 1]
        } else {
            0
        }
    }

    pub fn total_dim(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, &m)| (i + 1) * m).sum()
    }

    pub fn block_count(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn combine(&self, other: &ModuleMultiset) -> Result<ModuleMultiset> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        let mut out = self.clone();
        for (a, &b) in out.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        Ok(out)
    }

    /// Block sizes in ascending order, with repetition.
    pub fn sizes(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (i, &m) in self.counts.iter().enumerate() {
            for _ in 0..m {
                v.push(i + 1);
            }
        }
        v
    }
}

impl std::fmt::Display for ModuleMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| format!("M{}:{}", i + 1, m))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl std::fmt::Debug for ModuleMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// A GF(p)-space with an order-dividing-p automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaModule {
    p: u32,
    dim: usize,
    sigma: GfpMatrix,
}

impl SigmaModule {
    pub fn new(p: u32, sigma: GfpMatrix) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if sigma.p() != p {
            return Err(Error::MismatchedP(sigma.p(), p));
        }
        if sigma.rows() != sigma.cols() {
            return Err(Error::NotSquare {
                rows: sigma.rows(),
                cols: sigma.cols(),
            });
        }
        if !sigma.pow(p)?.is_identity() {
            return Err(Error::SigmaOrder);
        }
        Ok(SigmaModule {
            p,
            dim: sigma.rows(),
            sigma,
        })
    }

    pub fn trivial(p: u32, dim: usize) -> Self {
        SigmaModule::new(p, GfpMatrix::identity(p, dim)).expect("identity action is valid")
    }

    /// One Jordan block: (sigma-1) e_j = e_{j-1}, e_0 in the fixed line.
    pub fn single_block(p: u32, size: usize) -> Result<Self> {
        if size == 0 || size > p as usize {
            return Err(Error::Dim(format!("block size {size} not in 1..={p}")));
        }
        let mut m = GfpMatrix::identity(p, size);
        for j in 1..size {
            m.set(j - 1, j, 1);
        }
        SigmaModule::new(p, m)
    }

    /// The cyclic-shift permutation action on GF(p)^p, e_i -> e_{i+1 mod p}.
    pub fn cyclic_shift(p: u32) -> Self {
        let n = p as usize;
        let mut m = GfpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.set((i + 1) % n, i, 1);
        }
        SigmaModule::new(p, m).expect("shift has order p")
    }

    /// Block-diagonal module realizing the given multiset, blocks in the
    /// ascending-size order of `ModuleMultiset::sizes`.
    pub fn from_multiset(ms: &ModuleMultiset) -> Self {
        let p = ms.p();
        let mut acc = SigmaModule::trivial(p, 0);
        for size in ms.sizes() {
            let block = SigmaModule::single_block(p, size).expect("sizes are in range");
            acc = acc.direct_sum(&block).expect("same p");
        }
        acc
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &GfpMatrix {
        &self.sigma
    }

    pub fn sigma_minus_one(&self) -> GfpMatrix {
        self.sigma.sub_identity().expect("square")
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.sigma.mul_vec(v)
    }

    /// Echelonized basis of (sigma-1)^k N.
    pub fn power_image(&self, k: usize) -> Vec<Vec<u32>> {
        assert!(k <= self.p as usize, "power beyond nilpotency degree");
        let n = self.sigma_minus_one().pow(k as u32).expect("square");
        n.column_space().basis().to_vec()
    }

    pub fn power_image_echelon(&self, k: usize) -> Echelon {
        Echelon::from_rows(self.p, self.dim, self.power_image(k))
    }

    /// Basis of the fixed subspace N^G = ker(sigma-1).
    pub fn fixed_submodule(&self) -> Vec<Vec<u32>> {
        self.sigma_minus_one().kernel_basis()
    }

    /// Block multiplicities from the rank profile of (sigma-1)^k:
    /// m_i = r_{i-1} - 2 r_i + r_{i+1}.
    pub fn decompose(&self) -> ModuleMultiset {
        let pp = self.p as usize;
        let n = self.sigma_minus_one();
        let mut ranks = Vec::with_capacity(pp + 2);
        let mut acc = GfpMatrix::identity(self.p, self.dim);
        ranks.push(self.dim); // r_0
        for _ in 1..=pp + 1 {
            acc = acc.mul(&n).expect("square");
            ranks.push(acc.rank());
        }
        debug_assert_eq!(ranks[pp], 0, "(sigma-1)^p must vanish");
        let mut ms = ModuleMultiset::empty(self.p);
        for i in 1..=pp {
            let m = ranks[i - 1] + ranks[i + 1];
            let twice = 2 * ranks[i];
            assert!(m >= twice, "rank profile must be convex");
            if m > twice {
                ms.add_blocks(i, m - twice);
            }
        }
        debug_assert_eq!(ms.total_dim(), self.dim);
        ms
    }

    pub fn direct_sum(&self, other: &SigmaModule) -> Result<SigmaModule> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        SigmaModule::new(self.p, self.sigma.block_diag(&other.sigma)?)
    }

    /// Diagonal action on the tensor product; basis index is i*dimB + j.
    pub fn tensor(&self, other: &SigmaModule) -> Result<SigmaModule> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        SigmaModule::new(self.p, self.sigma.kronecker(&other.sigma)?)
    }

    /// Exterior square with basis e_i ^ e_j, i < j, ordered lexicographically.
    /// Returns the induced action together with the basis pair labels.
    pub fn exterior_square(&self) -> (SigmaModule, Vec<(usize, usize)>) {
        let pairs = pair_basis(self.dim);
        let m = GfpMatrix::from_columns(self.p, pairs.len(), pairs.len(), |idx| {
            let (i, j) = pairs[idx];
            let a = self.sigma.column(i);
            let b = self.sigma.column(j);
            wedge2(self.p, &a, &b, &pairs)
        });
        (
            SigmaModule::new(self.p, m).expect("induced action keeps order p"),
            pairs,
        )
    }

    /// Exterior cube, same conventions with triples (i,j,k), i < j < k.
    pub fn exterior_cube(&self) -> (SigmaModule, Vec<(usize, usize, usize)>) {
        let triples = triple_basis(self.dim);
        let m = GfpMatrix::from_columns(self.p, triples.len(), triples.len(), |idx| {
            let (i, j, k) = triples[idx];
            let a = self.sigma.column(i);
            let b = self.sigma.column(j);
            let c = self.sigma.column(k);
            wedge3(self.p, &a, &b, &c, &triples)
        });
        (
            SigmaModule::new(self.p, m).expect("induced action keeps order p"),
            triples,
        )
    }

    /// Conjugated action Q sigma Q^{-1}; the decomposition must not change.
    pub fn conjugated(&self, q: &GfpMatrix) -> Result<SigmaModule> {
        let qi = q.inverse().ok_or_else(|| Error::Dim("base change not invertible".into()))?;
        SigmaModule::new(self.p, q.mul(&self.sigma)?.mul(&qi)?)
    }

    /// Dual module with the transpose-inverse action.
    pub fn dual(&self) -> SigmaModule {
        let inv = self.sigma.inverse().expect("sigma is invertible");
        SigmaModule::new(self.p, inv.transpose()).expect("dual action has order p")
    }

    /// Jordan chain basis: one (size, generator) per block, sizes descending.
    /// The generator g of a size-s block satisfies (sigma-1)^{s-1} g != 0 and
    /// (sigma-1)^s g = 0, and all chain vectors together form a basis.
    pub fn chain_basis(&self) -> Vec<(usize, Vec<u32>)> {
        let n = self.sigma_minus_one();
        let pp = self.p as usize;
        // kernels of increasing powers
        let mut kernels: Vec<Echelon> = Vec::with_capacity(pp + 1);
        kernels.push(Echelon::new(self.p, self.dim)); // ker n^0 = 0
        let mut acc = GfpMatrix::identity(self.p, self.dim);
        for _ in 1..=pp {
            acc = acc.mul(&n).expect("square");
            kernels.push(Echelon::from_rows(self.p, self.dim, acc.kernel_basis()));
        }
        let mut chosen = Echelon::new(self.p, self.dim); // span of all chain vectors
        let mut out: Vec<(usize, Vec<u32>)> = Vec::new();
        for k in (1..=pp).rev() {
            // tops of height k: vectors of ker n^k independent of ker n^{k-1} + chosen
            let mut blocked = kernels[k - 1].clone();
            for v in chosen.basis() {
                blocked.insert(v.clone());
            }
            for cand in kernels[k].basis().to_vec() {
                if blocked.contains(&cand) {
                    continue;
                }
                // take the whole chain cand, n cand, ..., n^{k-1} cand
                let mut vecs = Vec::with_capacity(k);
                let mut v = cand.clone();
                for _ in 0..k {
                    vecs.push(v.clone());
                    v = n.mul_vec(&v);
                }
                debug_assert!(vec_is_zero(&v));
                for w in &vecs {
                    let grew = chosen.insert(w.clone());
                    assert!(grew, "chain vectors must be independent");
                }
                blocked.insert(cand.clone());
                out.push((k, cand));
            }
        }
        assert_eq!(chosen.dim(), self.dim, "chains must span the module");
        out
    }
}

fn pair_basis(dim: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            v.push((i, j));
        }
    }
    v
}

fn triple_basis(dim: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                v.push((i, j, k));
            }
        }
    }
    v
}

/// Expand a ^ b over the sorted pair basis: coefficient of e_i ^ e_j is the
/// 2x2 minor a_i b_j - a_j b_i.
pub fn wedge2(p: u32, a: &[u32], b: &[u32], pairs: &[(usize, usize)]) -> Vec<u32> {
    let pl = p as u64;
    pairs
        .iter()
        .map(|&(i, j)| {
            let pos = a[i] as u64 * b[j] as u64 % pl;
            let neg = a[j] as u64 * b[i] as u64 % pl;
            ((pos + pl - neg) % pl) as u32
        })
        .collect()
}

/// Expand a ^ b ^ c over the sorted triple basis via 3x3 minors.
pub fn wedge3(p: u32, a: &[u32], b: &[u32], c: &[u32], triples: &[(usize, usize, usize)]) -> Vec<u32> {
    let pl = p as i64;
    triples
        .iter()
        .map(|&(i, j, k)| {
            let det = a[i] as i64 * (b[j] as i64 * c[k] as i64 - b[k] as i64 * c[j] as i64)
                - a[j] as i64 * (b[i] as i64 * c[k] as i64 - b[k] as i64 * c[i] as i64)
                + a[k] as i64 * (b[i] as i64 * c[j] as i64 - b[j] as i64 * c[i] as i64);
            (det.rem_euclid(pl)) as u32
        })
        .collect()
}

/// Induced action on a subspace: coordinates of sigma restricted to the span
/// of `basis`, which must be sigma-invariant.
pub fn restrict_action(module: &SigmaModule, basis: &[Vec<u32>]) -> Result<SigmaModule> {
    let p = module.p();
    let k = basis.len();
    let cols: Vec<Vec<u32>> = basis
        .iter()
        .map(|b| {
            let img = module.apply(b);
            let mat = GfpMatrix::from_columns(p, module.dim(), k, |j| basis[j].clone());
            mat.solve(&img)
                .ok_or_else(|| Error::Dim("subspace is not sigma-invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    SigmaModule::new(p, GfpMatrix::from_columns(p, k, k, |j| cols[j].clone()))
}

/// Induced action on the quotient by a sigma-invariant subspace, in the
/// coordinates of the complement positions of its echelon form.
pub fn quotient_action(module: &SigmaModule, sub: &Echelon) -> Result<SigmaModule> {
    let p = module.p();
    let comp = sub.complement_positions();
    let k = comp.len();
    let mut m = GfpMatrix::zeros(p, k, k);
    for (j, &cj) in comp.iter().enumerate() {
        let mut e = vec![0u32; module.dim()];
        e[cj] = 1;
        let coords = sub.quotient_coords(&module.apply(&e));
        for (i, &v) in coords.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    SigmaModule::new(p, m)
}
