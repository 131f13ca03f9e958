//! Nichols algebras of braided vector spaces via quantum symmetrizers.
//!
//! Degree `n` of `𝔅(V)` is `V⊗ⁿ / ker Sₙ`, so its dimension is `rank Sₙ`.
//! Tensor index of `e_{i₁} ⊗ ⋯ ⊗ e_{iₙ}` is `Σ i_k·d^{n−k}` (first factor
//! most significant).

use crate::cyclo::{sqrt2, xi, Scalar};
use crate::linalg::{is_zero_vec, span_basis, unit_vec, Matrix, Vector};
use crate::modrep::{is_isomorphic, restrict, AModule, ModError, Registry, SimpleLabel};
use crate::hopf::Subspace;
use crate::par;
use crate::yd::{braiding, braiding_terms, tensor, to_double_module, yang_baxter, YDModule, YdError};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum NicholsError {
    #[error("braiding is not invertible")]
    NotInvertible,
    #[error("braiding fails the braid equation")]
    NotBraided,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unidentified module: {0}")]
    Unidentified(String),
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error(transparent)]
    Mod(#[from] ModError),
}

type SparseVec = BTreeMap<usize, Scalar>;

/// A vector space with an invertible solution of the braid equation.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    pub name: String,
    pub dim: usize,
    pub c: Matrix,
    // c(e_a ⊗ e_b) = Σ coef · e_u ⊗ e_v, listed as (u, v, coef)
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl BraidedSpace {
    pub fn new(name: impl Into<String>, dim: usize, c: Matrix) -> Result<Self, NicholsError> {
        if c.rows() != dim * dim || c.cols() != dim * dim {
            return Err(NicholsError::Shape("braiding must act on V⊗V".into()));
        }
        if c.rank() != dim * dim {
            return Err(NicholsError::NotInvertible);
        }
        let terms = (0..dim * dim)
            .map(|col| {
                (0..dim * dim)
                    .filter(|&r| !c.get(r, col).is_zero())
                    .map(|r| (r / dim, r % dim, c.get(r, col).clone()))
                    .collect()
            })
            .collect();
        let bs = BraidedSpace {
            name: name.into(),
            dim,
            c,
            terms,
        };
        if !bs.braid_equation() {
            return Err(NicholsError::NotBraided);
        }
        Ok(bs)
    }

    /// Braided space underlying a YD module.
    pub fn from_yd(y: &YDModule) -> Result<Self, NicholsError> {
        if !yang_baxter(y) {
            return Err(NicholsError::NotBraided);
        }
        let terms = braiding_terms(y, y);
        let c = braiding(y, y);
        if c.rank() != y.dim * y.dim {
            return Err(NicholsError::NotInvertible);
        }
        Ok(BraidedSpace {
            name: y.name.clone(),
            dim: y.dim,
            c,
            terms,
        })
    }

    fn braid_equation(&self) -> bool {
        let d = self.dim;
        par::find_first(d * d * d, |t| {
            let v: SparseVec = [(t, Scalar::one())].into_iter().collect();
            let l = self.apply_t(3, 1, &self.apply_t(3, 2, &self.apply_t(3, 1, &v)));
            let r = self.apply_t(3, 2, &self.apply_t(3, 1, &self.apply_t(3, 2, &v)));
            (l != r).then_some(())
        })
        .is_none()
    }

    pub fn tensor_dim(&self, n: usize) -> usize {
        self.dim.pow(n as u32)
    }

    /// `T_i = id^{⊗(i−1)} ⊗ c ⊗ id^{⊗(n−i−1)}` on a sparse vector, `1 ≤ i < n`.
    fn apply_t(&self, n: usize, i: usize, v: &SparseVec) -> SparseVec {
        let d = self.dim;
        let low = d.pow((n - i - 1) as u32);
        let mut out = SparseVec::new();
        for (idx, x) in v {
            let rest_low = idx % low;
            let pair = (idx / low) % (d * d);
            let high = idx / (low * d * d);
            for (u, w, c) in &self.terms[pair] {
                let j = (high * d * d + u * d + w) * low + rest_low;
                *out.entry(j).or_insert_with(Scalar::zero) += &(x * c);
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// Product `T_{w₁} ⋯ T_{w_k}` applied to `v` (rightmost first).
    fn apply_word(&self, n: usize, word: &[usize], v: &SparseVec) -> SparseVec {
        word.iter().rev().fold(v.clone(), |acc, &i| self.apply_t(n, i, &acc))
    }

    fn dense_from_columns(&self, n: usize, f: impl Fn(&SparseVec) -> SparseVec + Sync) -> Matrix {
        let dn = self.tensor_dim(n);
        let cols = par::map_range(dn, |col| {
            let v: SparseVec = [(col, Scalar::one())].into_iter().collect();
            f(&v)
        });
        let mut m = Matrix::zeros(dn, dn);
        for (col, entries) in cols.into_iter().enumerate() {
            for (r, x) in entries {
                m.set(r, col, x);
            }
        }
        m
    }
}

fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Reduced word of a permutation (`perm[p] = σ(p)`) by bubble sort; letter
/// `i` stands for the simple transposition of positions `i` and `i+1`.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (1..p.len()).find(|&i| p[i - 1] > p[i]) {
        p.swap(i - 1, i);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// Every reduced word of a permutation.
pub fn all_reduced_words(perm: &[usize]) -> Vec<Vec<usize>> {
    let descents: Vec<usize> = (1..perm.len()).filter(|&i| perm[i - 1] > perm[i]).collect();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in descents {
        let mut p = perm.to_vec();
        p.swap(i - 1, i);
        for mut w in all_reduced_words(&p) {
            w.push(i);
            out.push(w);
        }
    }
    out
}

/// All permutations of `n` letters in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Lift of a reduced word to `V⊗ⁿ`.
pub fn braid_lift_word(bs: &BraidedSpace, n: usize, word: &[usize]) -> Matrix {
    bs.dense_from_columns(n, |v| bs.apply_word(n, word, v))
}

/// Matsumoto lift of a permutation along its bubble-sort reduced word.
pub fn braid_lift(bs: &BraidedSpace, perm: &[usize]) -> Matrix {
    braid_lift_word(bs, perm.len(), &reduced_word(perm))
}

fn symmetrizer_apply(bs: &BraidedSpace, n: usize, prev: &Matrix, v: &SparseVec) -> SparseVec {
    let d = bs.dim;
    // Σ_k T_{n−1} ⋯ T_{n−k} v
    let mut mixed = v.clone();
    for k in 1..n {
        let word: Vec<usize> = (n - k..n).rev().collect();
        for (i, x) in bs.apply_word(n, &word, v) {
            *mixed.entry(i).or_insert_with(Scalar::zero) += &x;
        }
    }
    // (S_{n−1} ⊗ id)
    let mut out = SparseVec::new();
    for (idx, x) in mixed {
        if x.is_zero() {
            continue;
        }
        let (pre, last) = (idx / d, idx % d);
        for r in 0..prev.rows() {
            let y = prev.get(r, pre);
            if !y.is_zero() {
                *out.entry(r * d + last).or_insert_with(Scalar::zero) += &(&x * y);
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// Quantum symmetrizers `S_1, …, S_max` by the recursion
/// `Sₙ = (S_{n−1} ⊗ id)(id + T_{n−1} + T_{n−1}T_{n−2} + ⋯ + T_{n−1}⋯T₁)`.
pub fn symmetrizers(bs: &BraidedSpace, max: usize) -> Vec<Matrix> {
    let mut out = vec![Matrix::identity(bs.dim)];
    for n in 2..=max {
        let prev = out.last().expect("nonempty").clone();
        out.push(bs.dense_from_columns(n, |v| symmetrizer_apply(bs, n, &prev, v)));
    }
    out.truncate(max);
    out
}

pub fn symmetrizer(bs: &BraidedSpace, n: usize) -> Matrix {
    symmetrizers(bs, n).pop().expect("n ≥ 1")
}

/// `Σ_{σ ∈ Sₙ}` of the lifts, summed directly.
pub fn symmetrizer_brute(bs: &BraidedSpace, n: usize) -> Matrix {
    let perms = permutations(n);
    bs.dense_from_columns(n, |v| {
        let mut acc = SparseVec::new();
        for p in &perms {
            for (i, x) in bs.apply_word(n, &reduced_word(p), v) {
                *acc.entry(i).or_insert_with(Scalar::zero) += &x;
            }
        }
        acc.retain(|_, x| !x.is_zero());
        acc
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Total {
    Finite(usize),
    InfiniteWitness,
    Undetermined(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct NicholsReport {
    pub graded_dims: Vec<usize>,
    pub total: Total,
    pub degree2_kernel: Matrix,
    pub witness: Option<Vector>,
}

/// `c(v⊗v) = v⊗v`: a fixed vector makes `𝔅(V)` contain `k[v]`.
pub fn check_fixed_vector(bs: &BraidedSpace, v: &[Scalar]) -> bool {
    if is_zero_vec(v) {
        return false;
    }
    let vv = Matrix::from_cols(bs.dim, &[v.to_vec()]).kron(&Matrix::from_cols(bs.dim, &[v.to_vec()]));
    bs.c.dot(&vv) == vv
}

/// Candidate fixed vectors: basis vectors and `e_i + t·e_j` for `t` in
/// `{±1, ±ξ} · {1, √2, 1/√2}`.
pub fn witness_candidates(dim: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..dim).map(|i| unit_vec(dim, i)).collect();
    let r2 = sqrt2();
    let scales = [Scalar::one(), r2.clone(), &r2 * &Scalar::frac(1, 2)];
    let units = [Scalar::one(), -Scalar::one(), xi(), -xi()];
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            for s in &scales {
                for u in &units {
                    let mut v = unit_vec(dim, i);
                    v[j] = s * u;
                    out.push(v);
                }
            }
        }
    }
    out
}

pub fn find_witness(bs: &BraidedSpace) -> Option<Vector> {
    let cands = witness_candidates(bs.dim);
    par::find_first(cands.len(), |k| check_fixed_vector(bs, &cands[k]).then(|| cands[k].clone()))
        .map(|(_, v)| v)
}

/// Graded dimensions up to `max_degree`, stopping at the first zero.
pub fn hilbert(bs: &BraidedSpace, max_degree: usize) -> NicholsReport {
    let mut dims = vec![1];
    let mut prev = Matrix::identity(bs.dim);
    dims.push(bs.dim);
    let mut kernel2 = Matrix::zeros(bs.dim * bs.dim, 0);
    let mut finished = bs.dim == 0;
    for n in 2..=max_degree.max(2) {
        if finished {
            break;
        }
        let s = bs.dense_from_columns(n, |v| symmetrizer_apply(bs, n, &prev, v));
        let r = s.rank();
        if n == 2 {
            kernel2 = s.kernel_basis();
        }
        dims.push(r);
        finished = r == 0;
        prev = s;
    }
    if finished {
        return NicholsReport {
            total: Total::Finite(dims.iter().sum()),
            graded_dims: dims,
            degree2_kernel: kernel2,
            witness: None,
        };
    }
    let witness = find_witness(bs);
    NicholsReport {
        total: if witness.is_some() {
            Total::InfiniteWitness
        } else {
            Total::Undetermined(max_degree)
        },
        graded_dims: dims,
        degree2_kernel: kernel2,
        witness,
    }
}

/// Kernel of `S₂ = id + c`, columns spanning the degree-2 relations.
pub fn degree2_relations(bs: &BraidedSpace) -> Matrix {
    let s2 = &bs.c.add(&Matrix::identity(bs.dim * bs.dim)).expect("square");
    s2.kernel_basis()
}

/// `Sₙ(t) = 0` for `t ∈ V⊗ⁿ`, i.e. `t` vanishes in `𝔅(V)`.
pub fn check_relation(bs: &BraidedSpace, t: &[Scalar]) -> Result<bool, NicholsError> {
    let mut n = 0;
    let mut size = 1;
    while size < t.len() {
        size *= bs.dim;
        n += 1;
    }
    if size != t.len() || n == 0 {
        return Err(NicholsError::Shape(format!("length {} is not a power of {}", t.len(), bs.dim)));
    }
    let mut prev = Matrix::identity(bs.dim);
    let mut v = to_sparse(t);
    for k in 2..=n {
        if k == n {
            v = symmetrizer_apply(bs, k, &prev, &v);
        } else {
            prev = bs.dense_from_columns(k, |u| symmetrizer_apply(bs, k, &prev, u));
        }
    }
    Ok(v.is_empty())
}

/// `t`-fold tensor power of a vector.
pub fn tensor_power(v: &[Scalar], n: usize) -> Vector {
    let col = Matrix::from_cols(v.len(), &[v.to_vec()]);
    let mut acc = Matrix::identity(1);
    for _ in 0..n {
        acc = acc.kron(&col);
    }
    acc.col(0)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// For `W = ⊕ k_{χ^{jₛ}}` with odd `jₛ`, checks that `𝔅(W)` has the graded
/// dimensions of the exterior algebra.
pub fn exterior_check(chars: &[YDModule]) -> Result<bool, NicholsError> {
    let Some(first) = chars.first() else {
        return Ok(true);
    };
    let w = chars[1..].iter().fold(first.clone(), |acc, y| acc.direct_sum(y));
    let t = w.dim;
    let bs = BraidedSpace::from_yd(&w)?;
    let rep = hilbert(&bs, t + 1);
    let expect: Vec<usize> = (0..=t).map(|k| binomial(t, k)).chain([0]).collect();
    Ok(rep.graded_dims == expect)
}

/// `ad(V)(W)` in degree 2 of `𝔅(V ⊕ W)`: the image of
/// `{v⊗w − c(v⊗w)}` under `S₂`, identified against the simple registry.
pub fn ad_degree2(reg: &Registry, v: &YDModule, w: &YDModule) -> Result<(SimpleLabel, AModule), NicholsError> {
    let u = v.direct_sum(w);
    let n = u.dim;
    let c = braiding(&u, &u);
    let s2 = c.add(&Matrix::identity(n * n)).expect("square");
    let mut vecs = Vec::new();
    for a in 0..v.dim {
        for b in v.dim..n {
            let mut t = unit_vec(n * n, a * n + b);
            for (r, x) in c.col(a * n + b).into_iter().enumerate() {
                t[r] -= &x;
            }
            vecs.push(s2.apply(&t));
        }
    }
    let sub = Subspace {
        ambient: n * n,
        basis: span_basis(&vecs, n * n),
    };
    let square = to_double_module(&tensor(&u, &u))?;
    if !crate::modrep::is_submodule(&square, &sub) {
        return Err(NicholsError::Unidentified("image is not a submodule".into()));
    }
    let m = restrict(&square, &sub).renamed(format!("ad({})({})", v.name, w.name));
    for (l, s) in &reg.simples {
        if s.dim == m.dim && is_isomorphic(s, &m) {
            return Ok((*l, m));
        }
    }
    Err(NicholsError::Unidentified(m.name))
}

/// Recorded fixed-vector witness for `V_{i,j}`, `(i, j) ∈ Λ′`.
pub fn vij_witness(i: u8, j: u8) -> Vector {
    if i == 1 && (j == 1 || j == 3) {
        vec![Scalar::one(), &sqrt2() * &xi()]
    } else {
        unit_vec(2, 0)
    }
}

/// `Λ′`: the pairs of `Λ` whose Nichols algebra is infinite.
pub fn lambda_prime() -> Vec<(u8, u8)> {
    crate::modrep::lambda()
        .into_iter()
        .filter(|p| !matches!(p, (2, 1) | (3, 1) | (2, 3) | (3, 3)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessEntry {
    pub space: String,
    pub witness: Option<Vector>,
    pub validates: bool,
}

/// Validates the recorded witnesses for `Λ′`, `k_{χ⁰}`, `k_{χ²}` and the
/// projective covers, and checks that none of the candidates fixes a vector
/// for the six finite cases.
pub fn witness_sweep(reg: &Registry) -> Result<Vec<WitnessEntry>, NicholsError> {
    let yd = |m: &AModule| crate::yd::from_double_module(m).map_err(NicholsError::from);
    let mut out = Vec::new();
    for (i, j) in lambda_prime() {
        let bs = BraidedSpace::from_yd(&yd(reg.simple(SimpleLabel::TwoDim(i, j)))?)?;
        let w = vij_witness(i, j);
        out.push(WitnessEntry {
            space: SimpleLabel::TwoDim(i, j).to_string(),
            validates: check_fixed_vector(&bs, &w),
            witness: Some(w),
        });
    }
    for j in [0u8, 2] {
        let bs = BraidedSpace::from_yd(&yd(reg.simple(SimpleLabel::Char(j)))?)?;
        let w = vec![Scalar::one()];
        out.push(WitnessEntry {
            space: SimpleLabel::Char(j).to_string(),
            validates: check_fixed_vector(&bs, &w),
            witness: Some(w),
        });
    }
    for (j, p) in reg.char_covers.iter().enumerate() {
        let bs = BraidedSpace::from_yd(&yd(p)?)?;
        let w = unit_vec(4, if j % 2 == 0 { 3 } else { 2 });
        out.push(WitnessEntry {
            space: format!("P({})", SimpleLabel::Char(j as u8)),
            validates: check_fixed_vector(&bs, &w),
            witness: Some(w),
        });
    }
    let finite = [
        SimpleLabel::Char(1),
        SimpleLabel::Char(3),
        SimpleLabel::TwoDim(2, 1),
        SimpleLabel::TwoDim(2, 3),
        SimpleLabel::TwoDim(3, 1),
        SimpleLabel::TwoDim(3, 3),
    ];
    for l in finite {
        let bs = BraidedSpace::from_yd(&yd(reg.simple(l))?)?;
        let recorded: Vec<Vector> = if l.dim() == 1 {
            vec![vec![Scalar::one()]]
        } else {
            vec![vij_witness(1, 1), vij_witness(0, 1)]
        };
        let none = !recorded.iter().any(|w| check_fixed_vector(&bs, w));
        out.push(WitnessEntry {
            space: l.to_string(),
            witness: None,
            validates: none,
        });
    }
    Ok(out)
}

/// The finite 2-dimensional cases with their stated degree-2 relations,
/// as vectors in `V⊗V` with `x = e₁`, `y = e₂`.
pub fn stated_degree2_relations(i: u8, j: u8) -> Option<Vec<Vector>> {
    let z = Scalar::zero;
    let o = Scalar::one;
    // basis order: xx, xy, yx, yy
    let v = |a: Scalar, b: Scalar, c: Scalar, d: Scalar| vec![a, b, c, d];
    match (i, j) {
        (2, 1) => Some(vec![v(o(), z(), z(), z()), v(z(), o(), xi(), z())]),
        (2, 3) => Some(vec![v(o(), z(), z(), z()), v(z(), o(), -xi(), z())]),
        (3, 1) | (3, 3) => Some(vec![
            v(o(), z(), z(), Scalar::from_int(-2)),
            v(z(), o(), o(), z()),
        ]),
        _ => None,
    }
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vector], b: &[Vector], dim: usize) -> bool {
    span_basis(a, dim) == span_basis(b, dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{make_char_module, make_vij};
    use crate::yd::from_double_module;

    fn space(i: i64, j: i64) -> BraidedSpace {
        BraidedSpace::from_yd(&from_double_module(&make_vij(i, j).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn reduced_words_and_lifts() {
        let bs = space(2, 1);
        assert_eq!(braid_lift(&bs, &[0, 1, 2]), Matrix::identity(8));
        assert_eq!(braid_lift(&bs, &[1, 0]), bs.c);
        let words = all_reduced_words(&[2, 1, 0]);
        assert_eq!(words.len(), 2);
        assert_eq!(braid_lift_word(&bs, 3, &words[0]), braid_lift_word(&bs, 3, &words[1]));
    }

    #[test]
    fn recursion_matches_brute_force() {
        let bs = space(3, 1);
        let s = symmetrizers(&bs, 3);
        assert_eq!(s[0], Matrix::identity(2));
        assert_eq!(s[1], bs.c.add(&Matrix::identity(4)).unwrap());
        assert_eq!(s[2], symmetrizer_brute(&bs, 3));
    }

    #[test]
    fn odd_character_is_exterior() {
        let y = from_double_module(&make_char_module(1)).unwrap();
        let bs = BraidedSpace::from_yd(&y).unwrap();
        assert!(symmetrizer(&bs, 2).is_zero());
        let rep = hilbert(&bs, 4);
        assert_eq!(rep.graded_dims, vec![1, 1, 0]);
        assert_eq!(rep.total, Total::Finite(2));
    }

    #[test]
    fn nonbraided_matrix_is_rejected() {
        let mut c = Matrix::identity(4);
        c.set(0, 1, Scalar::one());
        c.set(1, 2, Scalar::one());
        assert!(BraidedSpace::new("bad", 2, c).is_err());
        assert!(BraidedSpace::new("flip", 2, Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])).is_ok());
    }
}
