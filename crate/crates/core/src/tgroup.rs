//! T-groups: extensions of an elementary abelian group N by a cyclic group
//! of order p, with a central p-th-power datum x.
//!
//! Elements are written (v, k) for v in N and k the exponent of a fixed
//! lift sigma; the group law is
//!
//!     (v, k) (w, l) = (v + sigma^k w + c x, k + l mod p),   c = [k+l >= p],
//!
//! the standard cyclic-extension law with carry cocycle. The invariants
//! (t_1..t_p, u) classify T-groups up to isomorphism; the oracle module
//! certifies that claim by brute force at small orders.

use crate::error::{Error, Result};
use crate::fp::matrix::{vec_add, vec_is_zero, vec_neg, vec_scale, Echelon, GfpMatrix};
use crate::fp::module::{ModuleMultiset, SigmaModule};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TElement {
    pub v: Vec<u32>,
    pub k: u32,
}

impl TElement {
    pub fn in_n(&self) -> bool {
        self.k == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGroup {
    p: u32,
    module: SigmaModule,
    x: Vec<u32>,
}

/// The complete isomorphism invariant: t[i-1] holds t_i, and u in 1..=p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TInvariants {
    pub p: u32,
    pub t: Vec<usize>,
    pub u: usize,
}

impl TInvariants {
    pub fn new(p: u32, t: Vec<usize>, u: usize) -> Self {
        assert_eq!(t.len(), p as usize);
        TInvariants { p, t, u }
    }

    pub fn t(&self, i: usize) -> usize {
        self.t[i - 1]
    }

    /// Validity of the tuple as invariants of some T-group:
    /// (a) u < p implies t_u >= 1; (b) u = p with t_i = 0 for all
    /// 2 <= i <= p implies t_1 >= 1. Returns the violated clause.
    pub fn validate(&self) -> Result<()> {
        if self.u < 1 || self.u > self.p as usize {
            return Err(Error::InvalidInvariants(format!(
                "u={} outside 1..={}",
                self.u, self.p
            )));
        }
        if self.u < self.p as usize && self.t(self.u) == 0 {
            return Err(Error::InvalidInvariants(format!(
                "clause (2a): u={} < p but t_{} = 0",
                self.u, self.u
            )));
        }
        let higher_all_zero = (2..=self.p as usize).all(|i| self.t(i) == 0);
        if self.u == self.p as usize && higher_all_zero && self.t(1) == 0 {
            return Err(Error::InvalidInvariants(
                "clause (2b): u=p and t_i=0 for 2<=i<=p but t_1 = 0".into(),
            ));
        }
        Ok(())
    }

    /// Total weight sum i * t_i; equals dim N except for abelian groups of
    /// exponent p, where it exceeds it by one.
    pub fn weight(&self) -> usize {
        self.t.iter().enumerate().map(|(i, &t)| (i + 1) * t).sum()
    }

    /// Every valid tuple with weight at most `max_weight`.
    pub fn enumerate_valid(p: u32, max_weight: usize) -> Vec<TInvariants> {
        let pp = p as usize;
        let mut out = Vec::new();
        let mut t = vec![0usize; pp];
        fn rec(p: usize, i: usize, budget: usize, t: &mut Vec<usize>, out: &mut Vec<TInvariants>, prime: u32) {
            if i > p {
                for u in 1..=p {
                    let inv = TInvariants::new(prime, t.clone(), u);
                    if inv.validate().is_ok() {
                        out.push(inv);
                    }
                }
                return;
            }
            let max_here = budget / i;
            for c in 0..=max_here {
                t[i - 1] = c;
                rec(p, i + 1, budget - c * i, t, out, prime);
            }
            t[i - 1] = 0;
        }
        rec(pp, 1, max_weight, &mut t, &mut out, p);
        out
    }
}

impl std::fmt::Display for TInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ts: Vec<String> = self
            .t
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, &t)| format!("t{}={}", i + 1, t))
            .collect();
        if ts.is_empty() {
            write!(f, "(all t_i=0, u={})", self.u)
        } else {
            write!(f, "({}, u={})", ts.join(", "), self.u)
        }
    }
}

impl std::fmt::Debug for TInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl TGroup {
    pub fn new(module: SigmaModule, x: Vec<u32>) -> Result<Self> {
        if x.len() != module.dim() {
            return Err(Error::Dim(format!(
                "x has length {} but N has dimension {}",
                x.len(),
                module.dim()
            )));
        }
        let p = module.p();
        let x: Vec<u32> = x.iter().map(|&a| a % p).collect();
        let diff = module.sigma_minus_one().mul_vec(&x);
        if !vec_is_zero(&diff) {
            return Err(Error::XNotFixed);
        }
        Ok(TGroup { p, module, x })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn module(&self) -> &SigmaModule {
        &self.module
    }

    pub fn dim_n(&self) -> usize {
        self.module.dim()
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    /// |T| = p^(dim N + 1), None on overflow.
    pub fn order(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..=self.dim_n() {
            acc = acc.checked_mul(self.p as u64)?;
        }
        Some(acc)
    }

    pub fn identity(&self) -> TElement {
        TElement {
            v: vec![0; self.dim_n()],
            k: 0,
        }
    }

    pub fn sigma(&self) -> TElement {
        TElement {
            v: vec![0; self.dim_n()],
            k: 1 % self.p,
        }
    }

    pub fn from_n(&self, v: &[u32]) -> TElement {
        debug_assert_eq!(v.len(), self.dim_n());
        TElement {
            v: v.iter().map(|&a| a % self.p).collect(),
            k: 0,
        }
    }

    pub fn element(&self, v: &[u32], k: u32) -> TElement {
        TElement {
            v: v.iter().map(|&a| a % self.p).collect(),
            k: k % self.p,
        }
    }

    pub fn mul(&self, a: &TElement, b: &TElement) -> TElement {
        debug_assert_eq!(a.v.len(), self.dim_n());
        debug_assert_eq!(b.v.len(), self.dim_n());
        let sk = self
            .module
            .sigma()
            .pow(a.k)
            .expect("sigma is square");
        let mut v = vec_add(self.p, &a.v, &sk.mul_vec(&b.v));
        if a.k + b.k >= self.p {
            v = vec_add(self.p, &v, &self.x);
        }
        TElement {
            v,
            k: (a.k + b.k) % self.p,
        }
    }

    pub fn inv(&self, a: &TElement) -> TElement {
        if a.k == 0 {
            return TElement {
                v: vec_neg(self.p, &a.v),
                k: 0,
            };
        }
        // (v,k)^-1 = (-sigma^{p-k}(v + x), p-k)
        let s = self.module.sigma().pow(self.p - a.k).expect("square");
        let w = vec_neg(self.p, &s.mul_vec(&vec_add(self.p, &a.v, &self.x)));
        TElement { v: w, k: self.p - a.k }
    }

    pub fn pow(&self, a: &TElement, e: u32) -> TElement {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn order_of(&self, a: &TElement) -> u32 {
        let mut acc = a.clone();
        let mut ord = 1;
        while acc != self.identity() {
            acc = self.mul(&acc, a);
            ord += 1;
        }
        ord
    }

    pub fn commutator(&self, a: &TElement, b: &TElement) -> TElement {
        let ab = self.mul(a, b);
        let ai = self.inv(a);
        let bi = self.inv(b);
        self.mul(&self.mul(&ab, &ai), &bi)
    }

    /// n-fold left-nested commutator: 0 gives b, 1 gives [a,b] = a b a^-1 b^-1,
    /// and n gives [a, (n-1)-fold].
    pub fn iterated_commutator(&self, a: &TElement, b: &TElement, n: u32) -> TElement {
        let mut acc = b.clone();
        for _ in 0..n {
            acc = self.commutator(a, &acc);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.module.sigma().is_identity()
    }

    /// T has exponent p iff the p-th-power subgroup is trivial, i.e. x = 0
    /// and (sigma-1)^{p-1} N = 0.
    pub fn is_exponent_p(&self) -> bool {
        vec_is_zero(&self.x) && self.module.power_image(self.p as usize - 1).is_empty()
    }

    /// Basis of the i-th lower central subgroup inside N, i >= 2:
    /// T_(i) = N^{(sigma-1)^{i-1}}.
    pub fn lower_central(&self, i: usize) -> Vec<Vec<u32>> {
        assert!(i >= 2, "T_(1) is the whole group");
        self.module.power_image((i - 1).min(self.p as usize))
    }

    /// Basis of Z(T) inside N plus a flag for the abelian case Z(T) = T.
    pub fn center(&self) -> (Vec<Vec<u32>>, bool) {
        if self.is_abelian() {
            ((0..self.dim_n())
                .map(|i| {
                    let mut e = vec![0u32; self.dim_n()];
                    e[i] = 1;
                    e
                })
                .collect(), true)
        } else {
            (self.module.fixed_submodule(), false)
        }
    }

    /// The subgroup of p-th powers, as a subspace of N: span(x) + T_(p).
    pub fn pth_power_space(&self) -> Echelon {
        let mut e = self.module.power_image_echelon(self.p as usize - 1);
        e.insert(self.x.clone());
        e
    }

    pub fn invariants(&self) -> TInvariants {
        let pp = self.p as usize;
        let ms = self.module.decompose();
        let mut t: Vec<usize> = (1..=pp).map(|i| ms.multiplicity(i)).collect();
        // t_1 correction: abelian of exponent p means the lift contributes
        // one extra independent class
        if self.is_abelian() && vec_is_zero(&self.x) {
            t[0] += 1;
        }
        debug_assert_eq!(t[0], self.t1_raw(), "t_1 case split must agree with the raw filtration formula");

        // u = max { i : <x> + T_(p) lies in T_(i) }; T_(1) always holds and
        // T_(p) lies in every T_(i), so only membership of x matters.
        let u = if vec_is_zero(&self.x) {
            pp
        } else {
            let mut u = 1;
            for i in 2..=pp {
                if self.module.power_image_echelon(i - 1).contains(&self.x) {
                    u = i;
                } else {
                    break;
                }
            }
            u
        };
        let inv = TInvariants::new(self.p, t, u);
        debug_assert!(inv.validate().is_ok(), "constructed invariants must be valid");
        inv
    }

    /// t_1 straight from its definition dim Z(T)[p] / (Z(T) cap T_(2)),
    /// used to cross-check the case split in `invariants`.
    fn t1_raw(&self) -> usize {
        if self.is_abelian() {
            if vec_is_zero(&self.x) {
                // Z(T)[p] = T, T_(2) = 1
                self.dim_n() + 1
            } else {
                // elements outside N have order p^2, so Z(T)[p] = N
                self.dim_n()
            }
        } else {
            let fixed = Echelon::from_rows(self.p, self.dim_n(), self.module.fixed_submodule());
            let im = self.module.power_image_echelon(1);
            fixed.dim() - crate::fp::matrix::intersection_dim(&fixed, &im)
        }
    }

    /// The Heisenberg group of order p^3 for odd p, the dihedral group of
    /// order 8 for p = 2: N is a single block of size 2 and x = 0.
    pub fn heisenberg(p: u32) -> Result<TGroup> {
        let module = SigmaModule::single_block(p, 2)?;
        TGroup::new(module, vec![0, 0])
    }

    /// The canonical T-group with the given invariants. Blocks are laid out
    /// in ascending size order; for u < p the distinguished block X of size
    /// u comes first among the size-u blocks and x generates its fixed line.
    pub fn construct_canonical(inv: &TInvariants) -> Result<TGroup> {
        inv.validate()?;
        let p = inv.p;
        let pp = p as usize;
        let higher_all_zero = (2..=pp).all(|i| inv.t(i) == 0);

        let mut ms = ModuleMultiset::empty(p);
        for i in 1..=pp {
            ms.add_blocks(i, inv.t(i));
        }
        if inv.u == pp {
            if higher_all_zero {
                // abelian of exponent p: the lift accounts for one unit of t_1
                let mut adjusted = ModuleMultiset::empty(p);
                adjusted.add_blocks(1, inv.t(1) - 1);
                ms = adjusted;
            }
            let module = SigmaModule::from_multiset(&ms);
            let dim = module.dim();
            TGroup::new(module, vec![0; dim])
        } else {
            // u < p: multiplicities keep t_u blocks of size u, one of which
            // is the distinguished X carrying x in its fixed line
            let module = SigmaModule::from_multiset(&ms);
            let mut x = vec![0u32; module.dim()];
            let mut offset = 0;
            for size in ms.sizes() {
                if size == inv.u {
                    // fixed line of the block is its first coordinate
                    x[offset] = 1;
                    break;
                }
                offset += size;
            }
            TGroup::new(module, x)
        }
    }

    /// Invariant equality; Proposition-certified as a complete isomorphism
    /// test for T-groups, with the certification done by the oracle module.
    pub fn is_isomorphic(&self, other: &TGroup) -> Result<bool> {
        if self.p != other.p {
            return Err(Error::MismatchedP(self.p, other.p));
        }
        Ok(self.invariants() == other.invariants())
    }

    /// All elements, for brute-force work. Capped by order.
    pub fn elements(&self, max_order: u64) -> Result<Vec<TElement>> {
        let order = self
            .order()
            .filter(|&o| o <= max_order)
            .ok_or_else(|| Error::CapExceeded(format!("group order exceeds {max_order}")))?;
        let mut out = Vec::with_capacity(order as usize);
        let dim = self.dim_n();
        let mut v = vec![0u32; dim];
        loop {
            for k in 0..self.p {
                out.push(TElement { v: v.clone(), k });
            }
            // odometer over N
            let mut i = 0;
            loop {
                if i == dim {
                    return Ok(out);
                }
                v[i] += 1;
                if v[i] < self.p {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    /// Index-p subgroups that are abelian of exponent dividing p, returned
    /// as witnesses. Subgroups of index p are kernels of nonzero
    /// homomorphisms T -> Z/p, which factor through T / Phi(T).
    pub fn maximal_elementary_abelian_subgroups(&self, max_candidates: usize) -> Result<Vec<SubgroupWitness>> {
        let p = self.p;
        let dim = self.dim_n();
        // functionals (f, c): f kills (sigma-1)N and x, c is the sigma-coefficient
        let mut frattini = self.module.power_image_echelon(1);
        frattini.insert(self.x.clone());
        // basis of admissible f's: rows of the kernel of the map
        // v -> (coordinates along frattini basis)... equivalently functionals
        // vanishing on the subspace. Compute as the kernel of the matrix
        // whose rows are the frattini basis (f acts as a row vector).
        let fr_mat = GfpMatrix::from_rows(p, frattini.basis())
            .expect("echelon rows are rectangular");
        let f_basis: Vec<Vec<u32>> = if frattini.dim() == 0 {
            (0..dim)
                .map(|i| {
                    let mut e = vec![0u32; dim];
                    e[i] = 1;
                    e
                })
                .collect()
        } else {
            fr_mat.kernel_basis()
        };
        let d = f_basis.len();
        // projective enumeration over (f, c) in GF(p)^{d+1}
        let count = ((p as u64).pow(d as u32 + 1) - 1) / (p as u64 - 1);
        if count > max_candidates as u64 {
            return Err(Error::CapExceeded(format!(
                "{count} index-p subgroups exceed the cap {max_candidates}"
            )));
        }
        let mut out = Vec::new();
        for rep in projective_reps(p, d + 1) {
            let c = rep[d];
            let mut f = vec![0u32; dim];
            for (i, &coef) in rep.iter().take(d).enumerate() {
                f = vec_add(p, &f, &vec_scale(p, coef, &f_basis[i]));
            }
            if vec_is_zero(&f) {
                // kernel is N itself: abelian of exponent p by definition
                out.push(SubgroupWitness {
                    is_n: true,
                    functional: f,
                    sigma_coeff: c,
                    extra_generator: None,
                });
                continue;
            }
            // pick w0 with f(w0) = -c, generators: ker f plus (w0, 1)
            let fmat = GfpMatrix::from_rows(p, &[f.clone()]).expect("one row");
            let w0 = fmat.solve(&[(p - c % p) % p]).expect("f is onto");
            let gen1 = self.element(&w0, 1);
            let ker_f = fmat.kernel_basis();
            // subgroup is abelian of exponent p iff the generators pairwise
            // commute and the non-N generator has order p
            let mut ok = self.pow(&gen1, p) == self.identity();
            if ok {
                for b in &ker_f {
                    let nb = self.from_n(b);
                    if self.commutator(&gen1, &nb) != self.identity() {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                out.push(SubgroupWitness {
                    is_n: false,
                    functional: f,
                    sigma_coeff: c,
                    extra_generator: Some(gen1),
                });
            }
        }
        Ok(out)
    }
}

/// Witness for one maximal elementary abelian subgroup: the defining
/// functional phi(v, k) = f(v) + c k, plus a generator outside N when the
/// subgroup is not N itself.
#[derive(Clone, Debug)]
pub struct SubgroupWitness {
    pub is_n: bool,
    pub functional: Vec<u32>,
    pub sigma_coeff: u32,
    pub extra_generator: Option<TElement>,
}

/// Representatives of the projective space P(GF(p)^n): last nonzero
/// coordinate normalized to 1.
fn projective_reps(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for lead in 0..n {
        // coordinates after `lead` are zero, coordinate `lead` is 1
        let free = lead;
        let total = (p as u64).pow(free as u32);
        for mut code in 0..total {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            for slot in v.iter_mut().take(free) {
                *slot = (code % p as u64) as u32;
                code /= p as u64;
            }
            out.push(v);
        }
    }
    out
}

/// Dimension counts from Lemma-style arithmetic on an invariant tuple:
/// the first value is sum i*t_i when u < p or some t_i > 0 with i >= 2
/// (there it equals dim H^1(N)), and t_1 otherwise (there it equals
/// 1 + dim H^1(N)); the second is sum t_i = dim H^1(Z(T)) whenever Z(T)
/// has exponent p, and None in the abelian exponent-p^2 case.
pub fn predicted_h1_dims(inv: &TInvariants) -> (usize, Option<usize>) {
    let pp = inv.p as usize;
    let some_higher = (2..=pp).any(|i| inv.t(i) > 0);
    let n_value = if inv.u < pp || some_higher {
        inv.weight()
    } else {
        inv.t(1)
    };
    let center = if some_higher || (inv.u == pp && !some_higher) {
        Some(inv.t.iter().sum())
    } else {
        None
    };
    // the None branch is unreachable as written (u < p with no higher t_i is
    // the exponent-p^2 abelian case, where u = 1 and the center has
    // exponent p^2): keep the guard explicit
    let center = if inv.u < pp && !some_higher { None } else { center };
    (n_value, center)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical(p: u32, pairs: &[(usize, usize)], u: usize) -> TGroup {
        let mut t = vec![0usize; p as usize];
        for &(i, n) in pairs {
            t[i - 1] = n;
        }
        TGroup::construct_canonical(&TInvariants::new(p, t, u)).unwrap()
    }

    #[test]
    fn sigma_to_the_p_is_x() {
        let t = canonical(5, &[(1, 1)], 1); // cyclic of order 25
        let s = t.sigma();
        let sp = t.pow(&s, 5);
        assert_eq!(sp.v, t.x().to_vec());
        assert_eq!(sp.k, 0);
        assert_eq!(t.order_of(&s), 25);
    }

    #[test]
    fn identity_and_inverses() {
        let t = TGroup::heisenberg(5).unwrap();
        let a = t.element(&[1, 2], 3);
        assert_eq!(t.mul(&t.identity(), &a), a);
        assert_eq!(t.mul(&a, &t.inv(&a)), t.identity());
        assert_eq!(t.mul(&t.inv(&a), &a), t.identity());
    }

    #[test]
    fn multiplication_is_associative_on_heisenberg() {
        let t = TGroup::heisenberg(3).unwrap();
        let els = t.elements(27).unwrap();
        for a in &els {
            for b in &els {
                for c in &els {
                    assert_eq!(t.mul(&t.mul(a, b), c), t.mul(a, &t.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn commutator_with_sigma_is_sigma_minus_one() {
        let t = TGroup::heisenberg(5).unwrap();
        let s = t.sigma();
        for v in [[1u32, 0], [0, 1], [2, 3]] {
            let n = t.from_n(&v);
            let c = t.commutator(&s, &n);
            let expected = t.module().sigma_minus_one().mul_vec(&v);
            assert_eq!(c, t.from_n(&expected));
        }
    }

    #[test]
    fn iterated_commutator_examples() {
        let t = TGroup::heisenberg(5).unwrap();
        let s = t.sigma();
        let b = t.from_n(&[0, 1]); // generator of the block
        assert_eq!(t.iterated_commutator(&s, &b, 0), b);
        assert_ne!(t.iterated_commutator(&s, &b, 1), t.identity());
        assert_eq!(t.iterated_commutator(&s, &b, 2), t.identity());

        // one size-4 block at p=5: depth 3 lands in the fixed line, depth 4 dies
        let t4 = canonical(5, &[(4, 1)], 5);
        let top = t4.from_n(&[0, 0, 0, 1]);
        let s = t4.sigma();
        let d3 = t4.iterated_commutator(&s, &top, 3);
        assert_ne!(d3, t4.identity());
        let fixed = Echelon::from_rows(5, 4, t4.module().fixed_submodule());
        assert!(fixed.contains(&d3.v));
        assert_eq!(t4.iterated_commutator(&s, &top, 4), t4.identity());
    }

    #[test]
    fn lower_central_series() {
        let abelian = canonical(5, &[(1, 2)], 5);
        assert!(abelian.lower_central(2).is_empty());

        let heis = TGroup::heisenberg(5).unwrap();
        assert_eq!(heis.lower_central(2).len(), 1);
        assert!(heis.lower_central(3).is_empty());

        let full = canonical(5, &[(5, 1)], 5);
        for i in 2..=5 {
            assert_eq!(full.lower_central(i).len(), 6 - i, "i={i}");
        }
    }

    #[test]
    fn invariants_of_named_groups() {
        let heis = TGroup::heisenberg(5).unwrap();
        let inv = heis.invariants();
        assert_eq!(inv.t(2), 1);
        assert_eq!(inv.t(1) + inv.t(3) + inv.t(4) + inv.t(5), 0);
        assert_eq!(inv.u, 5);

        // free-presentation shape: distinguished M_1 with x plus two M_5
        let free_like = canonical(5, &[(1, 1), (5, 2)], 1);
        let inv = free_like.invariants();
        assert_eq!(inv.t(1), 1);
        assert_eq!(inv.t(5), 2);
        assert_eq!(inv.u, 1);

        // elementary abelian of order p^2
        let ea = canonical(5, &[(1, 2)], 5);
        let inv = ea.invariants();
        assert_eq!(inv.t(1), 2);
        assert_eq!(inv.u, 5);
    }

    #[test]
    fn canonical_rejects_invalid_tuples() {
        let bad = TInvariants::new(5, vec![1, 0, 0, 0, 0], 3); // u=3 < p with t_3 = 0
        let err = TGroup::construct_canonical(&bad).unwrap_err();
        assert!(err.to_string().contains("(2a)"), "{err}");

        let bad = TInvariants::new(5, vec![0, 0, 0, 0, 0], 5);
        let err = TGroup::construct_canonical(&bad).unwrap_err();
        assert!(err.to_string().contains("(2b)"), "{err}");
    }

    #[test]
    fn canonical_examples() {
        let g = canonical(5, &[(1, 1), (5, 2)], 1);
        assert_eq!(
            g.module().decompose(),
            ModuleMultiset::from_pairs(5, &[(1, 1), (5, 2)])
        );
        assert!(!vec_is_zero(g.x()));

        let heis_like = canonical(5, &[(2, 1)], 5);
        assert!(heis_like
            .is_isomorphic(&TGroup::heisenberg(5).unwrap())
            .unwrap());

        let cyclic = canonical(5, &[(1, 1)], 1);
        assert_eq!(cyclic.order(), Some(25));
        assert_eq!(cyclic.order_of(&cyclic.sigma()), 25);
    }

    #[test]
    fn isomorphism_by_invariants() {
        let heis = TGroup::heisenberg(5).unwrap();
        assert!(heis.is_isomorphic(&heis).unwrap());
        let ea = canonical(5, &[(1, 3)], 5); // elementary abelian 5^3
        assert!(!heis.is_isomorphic(&ea).unwrap());
        let other_p = TGroup::heisenberg(3).unwrap();
        assert!(heis.is_isomorphic(&other_p).is_err());
    }

    #[test]
    fn center_examples() {
        let heis = TGroup::heisenberg(5).unwrap();
        let (z, whole) = heis.center();
        assert_eq!(z.len(), 1);
        assert!(!whole);

        let ea = canonical(5, &[(1, 2)], 5);
        let (_, whole) = ea.center();
        assert!(whole);

        let mixed = canonical(5, &[(3, 1), (1, 2)], 5);
        let (z, whole) = mixed.center();
        assert_eq!(z.len(), 3);
        assert!(!whole);
    }

    #[test]
    fn subgroup_census_examples() {
        // cyclic of order p^2: only N itself
        let cyclic = canonical(5, &[(1, 1)], 1);
        let subs = cyclic.maximal_elementary_abelian_subgroups(100_000).unwrap();
        assert_eq!(subs.len(), 1);
        assert!(subs[0].is_n);

        // elementary abelian of order p^2: all p+1 index-p subgroups qualify
        let ea = canonical(5, &[(1, 1)], 5);
        let subs = ea.maximal_elementary_abelian_subgroups(100_000).unwrap();
        assert_eq!(subs.len(), 6);

        // dihedral of order 8: exactly the two Klein subgroups
        let dih = TGroup::heisenberg(2).unwrap();
        let subs = dih.maximal_elementary_abelian_subgroups(100_000).unwrap();
        assert_eq!(subs.len(), 2);

        // Heisenberg for odd p has exponent p, so every maximal subgroup is
        // abelian of exponent p: p + 1 of them
        let heis = TGroup::heisenberg(5).unwrap();
        let subs = heis.maximal_elementary_abelian_subgroups(100_000).unwrap();
        assert_eq!(subs.len(), 6);
    }

    #[test]
    fn power_formula_binomial_expansion() {
        // (delta sigma)^i = prod_k ^k[sigma,delta]^{C(i,k)} delta^i sigma^i
        for p in [3u32, 5] {
            let t = canonical(p, &[(p as usize, 1)], p as usize);
            let s = t.sigma();
            for d in 0..t.dim_n() {
                let mut dv = vec![0u32; t.dim_n()];
                dv[d] = 1;
                let delta = t.from_n(&dv);
                let ds = t.mul(&delta, &s);
                for i in 2..=p {
                    let lhs = t.pow(&ds, i);
                    let mut rhs = t.identity();
                    for k in (2..=i).rev() {
                        let c = binom(i, k) % p;
                        let term = t.iterated_commutator(&s, &delta, k - 1);
                        rhs = t.mul(&rhs, &t.pow(&term, c));
                    }
                    rhs = t.mul(&rhs, &t.pow(&delta, i));
                    rhs = t.mul(&rhs, &t.pow(&s, i));
                    assert_eq!(lhs, rhs, "p={p} i={i} d={d}");
                }
            }
        }
    }

    fn binom(n: u32, k: u32) -> u32 {
        let mut num = 1u64;
        let mut den = 1u64;
        for j in 0..k {
            num *= (n - j) as u64;
            den *= (j + 1) as u64;
        }
        (num / den) as u32
    }

    #[test]
    fn pth_powers_as_a_set() {
        // the set {g^p} equals span(x) + (sigma-1)^{p-1} N
        for (pairs, u) in [(vec![(2usize, 1usize)], 5), (vec![(1, 1), (2, 1)], 2), (vec![(3, 1)], 3)] {
            let t = canonical(5, &pairs, u);
            if t.order().unwrap() > 625 {
                continue;
            }
            let space = t.pth_power_space();
            let mut powers: Vec<Vec<u32>> = Vec::new();
            for g in t.elements(625).unwrap() {
                let gp = t.pow(&g, 5);
                assert_eq!(gp.k, 0);
                powers.push(gp.v);
            }
            powers.sort();
            powers.dedup();
            assert_eq!(powers.len() as u64, 5u64.pow(space.dim() as u32));
            for v in &powers {
                assert!(space.contains(v));
            }
        }
    }

    #[test]
    fn roundtrip_on_a_few_tuples() {
        for inv in TInvariants::enumerate_valid(5, 5) {
            let g = TGroup::construct_canonical(&inv).unwrap();
            assert_eq!(g.invariants(), inv, "tuple {inv}");
        }
    }

    #[test]
    fn predicted_dims() {
        let heis = TGroup::heisenberg(5).unwrap().invariants();
        assert_eq!(predicted_h1_dims(&heis), (2, Some(1)));

        let free3 = TInvariants::new(5, vec![1, 0, 0, 0, 2], 1);
        assert_eq!(predicted_h1_dims(&free3), (11, Some(3)));

        let ea = TInvariants::new(5, vec![4, 0, 0, 0, 0], 5);
        assert_eq!(predicted_h1_dims(&ea), (4, Some(4)));

        // abelian of exponent p^2: center dimension not predicted
        let c25 = TInvariants::new(5, vec![1, 0, 0, 0, 0], 1);
        assert_eq!(predicted_h1_dims(&c25), (1, None));
    }

    #[test]
    fn nilpotency_class_bound() {
        // class <= p, and <= p-1 exactly when there is no size-p block
        let with_mp = canonical(5, &[(5, 1)], 5);
        assert!(!with_mp.lower_central(5).is_empty());
        let without = canonical(5, &[(4, 1)], 4);
        assert!(without.lower_central(5).is_empty());
        assert!(!without.lower_central(4).is_empty());
    }
}
