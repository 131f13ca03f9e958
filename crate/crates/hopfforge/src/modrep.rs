//! Finite-dimensional modules over algebras presented by generators, and the
//! simple, projective and indecomposable modules of the double `D(K^cop)`.

use crate::cyclo::{sign_pow, sqrt2, xi_pow, Scalar};
use crate::drinfeld::KDouble;
use crate::hopf::{algebra_radical, FinHopf, HopfError, Sparse, Subspace};
use crate::linalg::{kernel_vectors, span_basis, unit_vec, IncrementalBasis, Matrix, Vector};
use crate::par;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::{Arc, OnceLock};

#[derive(Debug, thiserror::Error)]
pub enum ModError {
    #[error("({0},{1}) is not in Lambda")]
    NotInLambda(u8, u8),
    #[error("action is not an algebra map: {0}")]
    NotAModule(String),
    #[error("missing matrix for generator {0}")]
    MissingGenerator(String),
    #[error("unidentified composition factor in {0}")]
    Unidentified(String),
    #[error("decomposition mismatch: {0}")]
    Mismatch(String),
    #[error("modules over different algebras")]
    AlgebraMismatch,
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A finite-dimensional algebra together with generators and a word basis:
/// every basis element is a fixed combination of products of generators.
pub struct GenAlgebra {
    pub name: String,
    pub algebra: FinHopf,
    pub gen_names: Vec<String>,
    pub gens: Vec<Vector>,
    /// `(parent word, last generator)`; the empty word is index 0.
    words: Vec<(usize, usize)>,
    coords: Vec<Sparse>,
    radical: OnceLock<Subspace>,
}

impl GenAlgebra {
    pub fn new(
        name: &str,
        algebra: FinHopf,
        gens: Vec<(String, Vector)>,
    ) -> Result<Self, HopfError> {
        let n = algebra.dim;
        let mut basis = IncrementalBasis::new(n);
        let mut elems = vec![algebra.unit.clone()];
        let mut words = vec![(0usize, usize::MAX)];
        basis.insert(&algebra.unit);
        let mut cursor = 0;
        while cursor < elems.len() && basis.len() < n {
            let u = elems[cursor].clone();
            for (gi, (_, g)) in gens.iter().enumerate() {
                let w = algebra.mul(&u, g);
                if basis.insert(&w).is_some() {
                    elems.push(w);
                    words.push((cursor, gi));
                }
            }
            cursor += 1;
        }
        if basis.len() < n {
            return Err(HopfError::DoesNotSpan {
                reached: basis.len(),
                dim: n,
            });
        }
        let coords = (0..n)
            .map(|m| {
                basis
                    .express(&unit_vec(n, m))
                    .expect("full span")
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let (gen_names, gens) = gens.into_iter().unzip();
        Ok(GenAlgebra {
            name: name.to_string(),
            algebra,
            gen_names,
            gens,
            words,
            coords,
            radical: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn gen(&self, name: &str) -> Option<&Vector> {
        self.gen_names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.gens[i])
    }

    /// Jacobson radical, computed once.
    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| algebra_radical(&self.algebra))
    }
}

/// Left module given by one matrix per basis element of the algebra.
#[derive(Clone)]
pub struct AModule {
    pub algebra: Arc<GenAlgebra>,
    pub name: String,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl fmt::Debug for AModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AModule({}, dim {})", self.name, self.dim)
    }
}

impl AModule {
    /// Extends generator matrices along the word basis and checks the result.
    pub fn from_generators(
        alg: &Arc<GenAlgebra>,
        name: &str,
        dim: usize,
        mats: &[(&str, Matrix)],
    ) -> Result<Self, ModError> {
        let m = Self::from_generators_unchecked(alg, name, dim, mats)?;
        if let Some(why) = module_failure(&m) {
            return Err(ModError::NotAModule(format!("{name}: {why}")));
        }
        Ok(m)
    }

    /// Same as [`AModule::from_generators`] without the homomorphism check.
    pub fn from_generators_unchecked(
        alg: &Arc<GenAlgebra>,
        name: &str,
        dim: usize,
        mats: &[(&str, Matrix)],
    ) -> Result<Self, ModError> {
        let gm: Vec<Matrix> = alg
            .gen_names
            .iter()
            .map(|g| {
                mats.iter()
                    .find(|(n, _)| n == g)
                    .map(|(_, m)| m.clone())
                    .ok_or_else(|| ModError::MissingGenerator(g.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut word_mats: Vec<Matrix> = Vec::with_capacity(alg.words.len());
        word_mats.push(Matrix::identity(dim));
        for &(parent, g) in &alg.words[1..] {
            let next = word_mats[parent].dot(&gm[g]);
            word_mats.push(next);
        }
        let like = Matrix::zeros(dim, dim);
        let action = par::map_range(alg.dim(), |m| {
            let mut acc = like.clone();
            for (w, c) in &alg.coords[m] {
                acc.axpy(c, &word_mats[*w]);
            }
            acc
        });
        Ok(AModule {
            algebra: alg.clone(),
            name: name.to_string(),
            dim,
            action,
        })
    }

    /// Zero-dimensional module.
    pub fn zero(alg: &Arc<GenAlgebra>) -> Self {
        AModule {
            algebra: alg.clone(),
            name: "0".into(),
            dim: 0,
            action: vec![Matrix::zeros(0, 0); alg.dim()],
        }
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, u: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (c, m) in u.iter().zip(&self.action) {
            if !c.is_zero() {
                acc.axpy(c, m);
            }
        }
        acc
    }

    pub fn gen_action(&self, name: &str) -> Matrix {
        self.act(self.algebra.gen(name).expect("generator name"))
    }

    fn gen_matrices(&self) -> Vec<Matrix> {
        self.algebra.gens.iter().map(|g| self.act(g)).collect()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn module_failure(m: &AModule) -> Option<String> {
    let alg = &m.algebra.algebra;
    if m.act(&alg.unit) != Matrix::identity(m.dim) {
        return Some("unit does not act as the identity".into());
    }
    let n = alg.dim;
    let bad = par::find_first(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let lhs = m.action[i].dot(&m.action[j]);
        let mut rhs = Matrix::zeros(m.dim, m.dim);
        for (k, c) in alg.mult_basis(i, j) {
            rhs.axpy(c, &m.action[*k]);
        }
        (lhs != rhs).then_some(())
    });
    bad.map(|(ij, _)| {
        format!(
            "ρ({})ρ({}) ≠ ρ(product)",
            alg.basis_names[ij / n],
            alg.basis_names[ij % n]
        )
    })
}

/// True iff the action is a unital algebra map on all basis pairs.
pub fn verify_module(m: &AModule) -> bool {
    module_failure(m).is_none()
}

fn same_algebra(m: &AModule, n: &AModule) -> Result<(), ModError> {
    if Arc::ptr_eq(&m.algebra, &n.algebra) {
        Ok(())
    } else {
        Err(ModError::AlgebraMismatch)
    }
}

/// Smallest submodule containing the given vectors.
pub fn submodule_generated(m: &AModule, vecs: &[Vector]) -> Subspace {
    let gens = m.gen_matrices();
    let mut basis = IncrementalBasis::new(m.dim);
    let mut queue = Vec::new();
    for v in vecs {
        if basis.insert(v).is_some() {
            queue.push(v.clone());
        }
    }
    let mut cursor = 0;
    while cursor < queue.len() {
        let v = queue[cursor].clone();
        cursor += 1;
        for g in &gens {
            let w = g.apply(&v);
            if basis.insert(&w).is_some() {
                queue.push(w);
            }
        }
    }
    Subspace::new(m.dim, &queue)
}

pub fn is_submodule(m: &AModule, w: &Subspace) -> bool {
    m.gen_matrices()
        .iter()
        .all(|g| w.basis.iter().all(|v| w.contains(&g.apply(v))))
}

/// Action on an invariant subspace, in the coordinates of its echelon basis.
pub fn restrict(m: &AModule, w: &Subspace) -> AModule {
    let piv = w.pivots();
    let k = w.dim();
    let action = m
        .action
        .iter()
        .map(|a| {
            let mut r = Matrix::zeros(k, k);
            for (j, b) in w.basis.iter().enumerate() {
                let img = a.apply(b);
                for (i, &p) in piv.iter().enumerate() {
                    r.set(i, j, img[p].clone());
                }
            }
            r
        })
        .collect();
    AModule {
        algebra: m.algebra.clone(),
        name: format!("sub({})", m.name),
        dim: k,
        action,
    }
}

/// Quotient by an invariant subspace, with basis the classes of the
/// non-pivot unit vectors.
pub fn quotient(m: &AModule, w: &Subspace) -> AModule {
    let q = w.quotient_map();
    let piv = w.pivots();
    let free: Vec<usize> = (0..m.dim).filter(|j| !piv.contains(j)).collect();
    let action = m
        .action
        .iter()
        .map(|a| {
            let cols: Vec<Vector> = free.iter().map(|&f| q.apply(&a.col(f))).collect();
            Matrix::from_cols(free.len(), &cols)
        })
        .collect();
    AModule {
        algebra: m.algebra.clone(),
        name: format!("{}/sub", m.name),
        dim: free.len(),
        action,
    }
}

/// Lifts quotient coordinates back to the module (non-pivot unit vectors).
fn lift_from_quotient(dim: usize, w: &Subspace, v: &[Scalar]) -> Vector {
    let piv = w.pivots();
    let free: Vec<usize> = (0..dim).filter(|j| !piv.contains(j)).collect();
    let mut out = vec![Scalar::zero(); dim];
    for (c, &f) in v.iter().zip(&free) {
        out[f] = c.clone();
    }
    out
}

/// `rad(A)·M`.
pub fn radical(m: &AModule) -> Subspace {
    let rad = m.algebra.radical();
    let mut vecs = Vec::new();
    for r in &rad.basis {
        let a = m.act(r);
        vecs.extend(a.col_vecs());
    }
    Subspace::new(m.dim, &vecs)
}

/// Vectors killed by `rad(A)`.
pub fn socle(m: &AModule) -> Subspace {
    let rad = m.algebra.radical();
    let mut rows = Vec::new();
    for r in &rad.basis {
        rows.extend(m.act(r).row_vecs());
    }
    if rows.is_empty() {
        return Subspace::whole(m.dim);
    }
    Subspace::new(m.dim, &kernel_vectors(&rows, m.dim))
}

pub fn top(m: &AModule) -> AModule {
    quotient(m, &radical(m)).renamed(format!("top({})", m.name))
}

pub fn socle_module(m: &AModule) -> AModule {
    restrict(m, &socle(m)).renamed(format!("soc({})", m.name))
}

/// Basis of `Hom_A(m, n)` as `n.dim × m.dim` matrices.
pub fn hom_space(m: &AModule, n: &AModule) -> Vec<Matrix> {
    let (p, q) = (m.dim, n.dim);
    if p == 0 || q == 0 {
        return Vec::new();
    }
    let gm = m.gen_matrices();
    let gn = n.gen_matrices();
    let mut rows = Vec::new();
    for (a, b) in gm.iter().zip(&gn) {
        for r in 0..q {
            for c in 0..p {
                let mut row = vec![Scalar::zero(); q * p];
                for k in 0..q {
                    let v = b.get(r, k);
                    if !v.is_zero() {
                        row[k * p + c] += v;
                    }
                }
                for k in 0..p {
                    let v = a.get(k, c);
                    if !v.is_zero() {
                        row[r * p + k] -= v;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = if rows.is_empty() {
        (0..q * p).map(|i| unit_vec(q * p, i)).collect()
    } else {
        kernel_vectors(&rows, q * p)
    };
    ker.into_iter()
        .map(|v| Matrix::from_vec(q, p, v).expect("shape"))
        .collect()
}

pub fn end_space(m: &AModule) -> Vec<Matrix> {
    hom_space(m, m)
}

/// Isomorphism test: some combination of a Hom basis is invertible. The
/// determinant of the generic combination has degree `dim` in each variable,
/// so it is nonzero iff it is nonzero somewhere on the grid `{0..dim}^r`.
pub fn is_isomorphic(m: &AModule, n: &AModule) -> bool {
    if m.dim != n.dim {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    let hom = hom_space(m, n);
    let r = hom.len();
    if r == 0 {
        return false;
    }
    let side = m.dim + 1;
    let total = side.checked_pow(r as u32).unwrap_or(usize::MAX);
    let point = |mut idx: usize| -> Vec<i64> {
        let mut t = vec![0i64; r];
        for ti in t.iter_mut() {
            *ti = (idx % side) as i64;
            idx /= side;
        }
        t
    };
    // start with unit directions, which settle most cases immediately
    for h in &hom {
        if !h.det().is_zero() {
            return true;
        }
    }
    par::find_first(total, |idx| {
        let t = point(idx);
        if t.iter().all(|&x| x == 0) {
            return None;
        }
        let mut acc = Matrix::zeros(m.dim, m.dim);
        for (ti, h) in t.iter().zip(&hom) {
            if *ti != 0 {
                acc.axpy(&Scalar::from_int(*ti), h);
            }
        }
        (!acc.det().is_zero()).then_some(())
    })
    .is_some()
}

/// Dimension of the radical of `End(m)`, from the trace form of the matrices.
fn end_radical_dim(end: &[Matrix]) -> usize {
    let r = end.len();
    let gram: Vec<Vector> = (0..r)
        .map(|i| (0..r).map(|j| end[i].dot(&end[j]).trace()).collect())
        .collect();
    kernel_vectors(&gram, r).len()
}

/// `rad(A)` kills the module and `End = k`.
pub fn is_abs_simple(m: &AModule) -> bool {
    m.dim > 0 && radical(m).dim() == 0 && end_space(m).len() == 1
}

/// `End(m)` modulo its radical is one-dimensional.
pub fn is_indecomposable(m: &AModule) -> bool {
    if m.dim == 0 {
        return false;
    }
    let end = end_space(m);
    end.len() - end_radical_dim(&end) == 1
}

/// Tensor product through the coproduct of the algebra.
pub fn tensor_module(m: &AModule, n: &AModule) -> Result<AModule, ModError> {
    same_algebra(m, n)?;
    let alg = &m.algebra.algebra;
    let action = par::map_range(alg.dim, |k| {
        let mut acc = Matrix::zeros(m.dim * n.dim, m.dim * n.dim);
        for (p, q, c) in alg.comult_basis(k) {
            acc.axpy(c, &m.action[*p].kron(&n.action[*q]));
        }
        acc
    });
    Ok(AModule {
        algebra: m.algebra.clone(),
        name: format!("{}⊗{}", m.name, n.name),
        dim: m.dim * n.dim,
        action,
    })
}

/// Dual module `(h·f)(v) = f(S(h)·v)`.
pub fn dual_module(m: &AModule) -> Result<AModule, ModError> {
    let alg = &m.algebra.algebra;
    let s = alg
        .antipode
        .as_ref()
        .ok_or_else(|| HopfError::NoAntipode("dual module needs an antipode".into()))?;
    let action = (0..alg.dim)
        .map(|k| m.act(&s.col(k)).transpose())
        .collect();
    Ok(AModule {
        algebra: m.algebra.clone(),
        name: format!("{}*", m.name),
        dim: m.dim,
        action,
    })
}

pub fn direct_sum(m: &AModule, n: &AModule) -> Result<AModule, ModError> {
    same_algebra(m, n)?;
    let action = m
        .action
        .iter()
        .zip(&n.action)
        .map(|(a, b)| a.direct_sum(b))
        .collect();
    Ok(AModule {
        algebra: m.algebra.clone(),
        name: format!("{}⊕{}", m.name, n.name),
        dim: m.dim + n.dim,
        action,
    })
}

#[derive(Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: String,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl AModule {
    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            algebra: self.algebra.name.clone(),
            dim: self.dim,
            action: self.action.clone(),
        }
    }

    pub fn from_json(alg: &Arc<GenAlgebra>, j: ModuleJson) -> Result<Self, ModError> {
        if j.algebra != alg.name || j.action.len() != alg.dim() {
            return Err(ModError::AlgebraMismatch);
        }
        if j.action.iter().any(|a| a.rows() != j.dim || a.cols() != j.dim) {
            return Err(ModError::NotAModule("action matrix shape".into()));
        }
        Ok(AModule {
            algebra: alg.clone(),
            name: "loaded".into(),
            dim: j.dim,
            action: j.action,
        })
    }
}

// ---------------------------------------------------------------------------
// Modules over the double of K

/// Generator names of the double, in word-basis order.
pub const D_GENERATORS: [&str; 6] = ["a", "b", "c", "d", "g", "x"];

static D_ALGEBRA: OnceLock<Arc<GenAlgebra>> = OnceLock::new();

/// The double `D(K^cop)` with generators `a, b, c, d, g, x`, built once.
pub fn d_algebra() -> Arc<GenAlgebra> {
    D_ALGEBRA
        .get_or_init(|| {
            let kd = KDouble::build().expect("double of K");
            let gens = D_GENERATORS
                .iter()
                .map(|g| (g.to_string(), kd.gen(g).clone()))
                .collect();
            Arc::new(GenAlgebra::new("D(K^cop)", kd.double.underlying, gens).expect("generators span"))
        })
        .clone()
}

/// Label of a simple `D`-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleLabel {
    Char(u8),
    TwoDim(u8, u8),
}

impl SimpleLabel {
    pub fn dim(&self) -> usize {
        match self {
            SimpleLabel::Char(_) => 1,
            SimpleLabel::TwoDim(..) => 2,
        }
    }

    /// All sixteen labels: characters first, then `Λ` in lexicographic order.
    pub fn all() -> Vec<SimpleLabel> {
        let mut v: Vec<_> = (0..4).map(SimpleLabel::Char).collect();
        v.extend(lambda().into_iter().map(|(i, j)| SimpleLabel::TwoDim(i, j)));
        v
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::Char(0) => write!(f, "k_ε"),
            SimpleLabel::Char(1) => write!(f, "k_χ"),
            SimpleLabel::Char(j) => write!(f, "k_χ^{j}"),
            SimpleLabel::TwoDim(i, j) => write!(f, "V_{{{i},{j}}}"),
        }
    }
}

/// `Λ = {(i, j) ∈ Z₄ × Z₄ : 2i ≠ j}`.
pub fn lambda() -> Vec<(u8, u8)> {
    let mut v = Vec::new();
    for i in 0..4u8 {
        for j in 0..4u8 {
            if (2 * i) % 4 != j {
                v.push((i, j));
            }
        }
    }
    v
}

fn m4(k: i64) -> u8 {
    k.rem_euclid(4) as u8
}

fn char_values(j: i64) -> [Scalar; 6] {
    [
        xi_pow(j),
        Scalar::zero(),
        Scalar::zero(),
        xi_pow(-j),
        sign_pow(j),
        Scalar::zero(),
    ]
}

fn half_sqrt2() -> Scalar {
    &sqrt2() * &Scalar::frac(1, 2)
}

/// One-dimensional module `k_{χʲ}`.
pub fn make_char_module(j: i64) -> AModule {
    let alg = d_algebra();
    let vals = char_values(j);
    let mats: Vec<(&str, Matrix)> = D_GENERATORS
        .iter()
        .zip(vals)
        .map(|(g, v)| (*g, Matrix::diag(&[v])))
        .collect();
    AModule::from_generators(&alg, &SimpleLabel::Char(m4(j)).to_string(), 1, &mats)
        .expect("characters are modules")
}

fn vij_matrices(i: i64, j: i64) -> Vec<(&'static str, Matrix)> {
    let z = Scalar::zero;
    let x = xi_pow(1);
    let x12 = &(&half_sqrt2() * &x) * &(&xi_pow(i) + &xi_pow(3 * i + j));
    let x21 = &(&sqrt2() * &x) * &(&xi_pow(3 * i) - &xi_pow(i + j));
    vec![
        ("a", Matrix::diag(&[xi_pow(i), xi_pow(i + 3)])),
        ("b", Matrix::from_rows(vec![vec![z(), xi_pow(2 * i)], vec![z(), z()]])),
        ("c", Matrix::from_rows(vec![vec![z(), Scalar::one()], vec![z(), z()]])),
        ("d", Matrix::diag(&[xi_pow(-i), xi_pow(1 - i)])),
        ("g", Matrix::diag(&[xi_pow(j), -xi_pow(j)])),
        ("x", Matrix::from_rows(vec![vec![z(), x12], vec![x21, z()]])),
    ]
}

/// Two-dimensional simple module `V_{i,j}`, `(i, j) ∈ Λ`.
pub fn make_vij(i: i64, j: i64) -> Result<AModule, ModError> {
    let (a, b) = (m4(i), m4(j));
    if (2 * a) % 4 == b {
        return Err(ModError::NotInLambda(a, b));
    }
    AModule::from_generators(
        &d_algebra(),
        &SimpleLabel::TwoDim(a, b).to_string(),
        2,
        &vij_matrices(i, j),
    )
}

/// `V_{i,j}` with `x₂₁` shifted by one, without the module check.
pub fn make_vij_perturbed(i: i64, j: i64) -> AModule {
    let mut mats = vij_matrices(i, j);
    let x = &mut mats[5].1;
    let v = x.get(1, 0) + &Scalar::one();
    x.set(1, 0, v);
    AModule::from_generators_unchecked(&d_algebra(), "perturbed", 2, &mats)
        .expect("all generators given")
}

fn p_matrices(l: i64) -> Vec<(&'static str, Matrix)> {
    let o = Scalar::one;
    let z = Scalar::zero;
    let x = xi_pow(1);
    let r2 = sqrt2();
    let from_cols = |cols: [[Scalar; 4]; 4]| {
        let cols: Vec<Vector> = cols.into_iter().map(|c| c.to_vec()).collect();
        Matrix::from_cols(4, &cols)
    };
    let a = Matrix::diag(&[o(), -&x, x.clone(), o()]);
    let b = from_cols([
        [z(), z(), o(), z()],
        [z(), z(), z(), x.clone()],
        [z(), z(), z(), z()],
        [z(), z(), z(), z()],
    ]);
    let c = from_cols([
        [z(), z(), -o(), z()],
        [z(), z(), z(), x.clone()],
        [z(), z(), z(), z()],
        [z(), z(), z(), z()],
    ]);
    let d = Matrix::diag(&[o(), x.clone(), -&x, o()]);
    let xm = from_cols([
        [z(), o(), r2.clone(), z()],
        [z(), z(), z(), -&r2],
        [z(), z(), z(), o()],
        [z(), z(), z(), z()],
    ]);
    let g = Matrix::diag(&[o(), -o(), -o(), o()]);
    vec![
        ("a", a.scale(&xi_pow(l))),
        ("b", b.scale(&xi_pow(l))),
        ("c", c.scale(&xi_pow(-l))),
        ("d", d.scale(&xi_pow(-l))),
        ("g", g.scale(&sign_pow(l))),
        ("x", xm),
    ]
}

/// Projective cover `P` of the trivial module, basis `p₁, …, p₄`.
pub fn make_p() -> AModule {
    AModule::from_generators(&d_algebra(), "P", 4, &p_matrices(0)).expect("P is a module")
}

/// `P ⊗ k_{χˡ}` in the basis `p_{i,ℓ}`.
pub fn make_p_char(l: i64) -> AModule {
    AModule::from_generators(&d_algebra(), &format!("P(χ^{})", m4(l)), 4, &p_matrices(l))
        .expect("P(χ^l) is a module")
}

/// Generator matrices where `d` acts as `a³`.
fn with_d_from_a(mut mats: Vec<(&'static str, Matrix)>) -> Vec<(&'static str, Matrix)> {
    let a = mats.iter().find(|(n, _)| *n == "a").expect("a").1.clone();
    mats.push(("d", a.pow(3)));
    mats
}

fn two_dim_indec(l: i64, plus: bool) -> Vec<(&'static str, Matrix)> {
    let z = Scalar::zero;
    let e = if plus { l + 1 } else { l - 1 };
    let (bv, cv) = if plus {
        (z(), z())
    } else {
        (
            &half_sqrt2() * &xi_pow(l - 1),
            &half_sqrt2() * &(&sign_pow(l + 1) * &xi_pow(l + 1)),
        )
    };
    let upper = |v: Scalar| Matrix::from_rows(vec![vec![z(), v], vec![z(), z()]]);
    with_d_from_a(vec![
        ("a", Matrix::diag(&[xi_pow(l), xi_pow(e)])),
        ("b", upper(bv)),
        ("c", upper(cv)),
        ("g", Matrix::diag(&[sign_pow(l), sign_pow(e)])),
        ("x", upper(Scalar::one())),
    ])
}

/// Non-split extension `M⁺ℓ` of `k_{χ^{ℓ+1}}` by `k_{χℓ}`.
pub fn make_m_plus(l: i64) -> AModule {
    AModule::from_generators(&d_algebra(), &format!("M+_{}", m4(l)), 2, &two_dim_indec(l, true))
        .expect("M+ is a module")
}

/// Non-split extension `M⁻ℓ` of `k_{χ^{ℓ−1}}` by `k_{χℓ}`.
pub fn make_m_minus(l: i64) -> AModule {
    AModule::from_generators(&d_algebra(), &format!("M-_{}", m4(l)), 2, &two_dim_indec(l, false))
        .expect("M- is a module")
}

/// Three-dimensional module `Nℓ` with socle `k_{χℓ} ⊕ k_{χ^{ℓ+2}}`.
pub fn make_n(l: i64) -> AModule {
    let z = Scalar::zero;
    let h = half_sqrt2();
    let e = l + 1;
    let col3 = |v1: Scalar, v2: Scalar| {
        Matrix::from_rows(vec![
            vec![z(), z(), v1],
            vec![z(), z(), v2],
            vec![z(), z(), z()],
        ])
    };
    let mats = with_d_from_a(vec![
        ("a", Matrix::diag(&[xi_pow(l), xi_pow(l + 2), xi_pow(e)])),
        ("b", col3(z(), &h * &xi_pow(e))),
        ("c", col3(z(), -&(&h * &(&sign_pow(e) * &xi_pow(e))))),
        ("g", Matrix::diag(&[sign_pow(l), sign_pow(l + 2), sign_pow(e)])),
        ("x", col3(Scalar::one(), Scalar::one())),
    ]);
    AModule::from_generators(&d_algebra(), &format!("N_{}", m4(l)), 3, &mats).expect("N is a module")
}

/// The sixteen simple modules and the projective covers of the characters.
pub struct Registry {
    pub simples: Vec<(SimpleLabel, AModule)>,
    pub char_covers: Vec<AModule>,
}

static REGISTRY: OnceLock<Arc<Registry>> = OnceLock::new();

impl Registry {
    pub fn build() -> Self {
        let simples = SimpleLabel::all()
            .into_iter()
            .map(|l| (l, simple_module(l)))
            .collect();
        let char_covers = (0..4).map(make_p_char).collect();
        Registry {
            simples,
            char_covers,
        }
    }

    /// Shared registry, built once.
    pub fn shared() -> Arc<Registry> {
        REGISTRY.get_or_init(|| Arc::new(Registry::build())).clone()
    }

    pub fn simple(&self, l: SimpleLabel) -> &AModule {
        &self
            .simples
            .iter()
            .find(|(k, _)| *k == l)
            .expect("registered label")
            .1
    }

    /// Projective cover: `P ⊗ k_{χˡ}` for characters, `V_{i,j}` itself otherwise.
    pub fn cover(&self, l: SimpleLabel) -> &AModule {
        match l {
            SimpleLabel::Char(j) => &self.char_covers[j as usize],
            SimpleLabel::TwoDim(..) => self.simple(l),
        }
    }
}

pub fn simple_module(l: SimpleLabel) -> AModule {
    match l {
        SimpleLabel::Char(j) => make_char_module(j as i64),
        SimpleLabel::TwoDim(i, j) => make_vij(i as i64, j as i64).expect("label in Lambda"),
    }
}

/// Multiplicities of registered simples in a semisimple module.
pub fn decompose_semisimple(reg: &Registry, m: &AModule) -> Result<Vec<(SimpleLabel, usize)>, ModError> {
    if radical(m).dim() != 0 {
        return Err(ModError::Unidentified(format!("{} is not semisimple", m.name)));
    }
    let mut out = Vec::new();
    let mut total = 0;
    for (l, s) in &reg.simples {
        let k = hom_space(s, m).len();
        if k > 0 {
            out.push((*l, k));
            total += k * l.dim();
        }
    }
    if total != m.dim {
        return Err(ModError::Unidentified(m.name.clone()));
    }
    Ok(out)
}

/// Layers `radᵏM / radᵏ⁺¹M`, top first.
pub fn radical_layers(reg: &Registry, m: &AModule) -> Result<Vec<Vec<(SimpleLabel, usize)>>, ModError> {
    let mut cur = m.clone();
    let mut layers = Vec::new();
    while cur.dim > 0 {
        let r = radical(&cur);
        layers.push(decompose_semisimple(reg, &quotient(&cur, &r))?);
        cur = restrict(&cur, &r);
    }
    Ok(layers)
}

/// A composition series built from the socle up: at each step the first
/// registered simple embedding in the socle of the remaining quotient is
/// added. Returns factors top-to-socle with the chain of submodules
/// (largest first, ending with 0).
pub fn composition_series_with_chain(
    reg: &Registry,
    m: &AModule,
) -> Result<(Vec<SimpleLabel>, Vec<Subspace>), ModError> {
    let mut current = Subspace::new(m.dim, &[]);
    let mut chain = vec![current.clone()];
    let mut labels = Vec::new();
    while current.dim() < m.dim {
        let q = quotient(m, &current);
        let soc = socle(&q);
        let s = restrict(&q, &soc);
        let found = reg.simples.iter().find_map(|(l, simple)| {
            hom_space(simple, &s).into_iter().next().map(|t| (*l, t))
        });
        let Some((label, t)) = found else {
            return Err(ModError::Unidentified(m.name.clone()));
        };
        let mut vecs = current.basis.clone();
        for col in t.col_vecs() {
            // socle coordinates → quotient coordinates → module
            let mut in_q = vec![Scalar::zero(); q.dim];
            for (c, b) in col.iter().zip(&soc.basis) {
                if !c.is_zero() {
                    in_q = crate::linalg::vec_add(&in_q, &crate::linalg::vec_scale(b, c));
                }
            }
            vecs.push(lift_from_quotient(m.dim, &current, &in_q));
        }
        current = Subspace::new(m.dim, &vecs);
        labels.push(label);
        chain.push(current.clone());
    }
    labels.reverse();
    chain.reverse();
    Ok((labels, chain))
}

pub fn composition_series(reg: &Registry, m: &AModule) -> Result<Vec<SimpleLabel>, ModError> {
    composition_series_with_chain(reg, m).map(|(l, _)| l)
}

/// `dim Ext¹(s, t)` as the multiplicity of `t` in `rad P(s) / rad² P(s)`.
pub fn ext1(reg: &Registry, s: SimpleLabel, t: SimpleLabel) -> Result<usize, ModError> {
    let layers = radical_layers(reg, reg.cover(s))?;
    Ok(layers
        .get(1)
        .and_then(|l| l.iter().find(|(k, _)| *k == t).map(|(_, n)| *n))
        .unwrap_or(0))
}

/// Outcome of decomposing `V_{i,j} ⊗ V_{k,l}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CgDecomposition {
    /// Isomorphic to `P(k_{χ^ℓ})`.
    Projective(u8),
    /// Isomorphic to the direct sum of two simple modules.
    Sum((u8, u8), (u8, u8)),
}

impl fmt::Display for CgDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CgDecomposition::Projective(l) => write!(f, "P({})", SimpleLabel::Char(*l)),
            CgDecomposition::Sum(a, b) => write!(
                f,
                "{} ⊕ {}",
                SimpleLabel::TwoDim(a.0, a.1),
                SimpleLabel::TwoDim(b.0, b.1)
            ),
        }
    }
}

/// Computes `V_{i,j} ⊗ V_{k,l}` and certifies which of the two candidate
/// decompositions it is isomorphic to.
pub fn decompose_cg(reg: &Registry, i: u8, j: u8, k: u8, l: u8) -> Result<CgDecomposition, ModError> {
    for (a, b) in [(i, j), (k, l)] {
        if (2 * a) % 4 == b {
            return Err(ModError::NotInLambda(a, b));
        }
    }
    let t = tensor_module(
        reg.simple(SimpleLabel::TwoDim(i, j)),
        reg.simple(SimpleLabel::TwoDim(k, l)),
    )?;
    let p = m4(i as i64 + k as i64 - 1);
    if is_isomorphic(&t, reg.cover(SimpleLabel::Char(p))) {
        return Ok(CgDecomposition::Projective(p));
    }
    let first = (m4((i + k) as i64), m4((j + l) as i64));
    let second = (m4((i + k + 3) as i64), m4((j + l + 2) as i64));
    let in_lambda = |(a, b): (u8, u8)| (2 * a) % 4 != b;
    if in_lambda(first) && in_lambda(second) {
        let sum = direct_sum(
            reg.simple(SimpleLabel::TwoDim(first.0, first.1)),
            reg.simple(SimpleLabel::TwoDim(second.0, second.1)),
        )?;
        if is_isomorphic(&t, &sum) {
            return Ok(CgDecomposition::Sum(first, second));
        }
    }
    Err(ModError::Mismatch(format!("V_{{{i},{j}}} ⊗ V_{{{k},{l}}}")))
}

/// Separation diagram of the Ext quiver: vertices `S` and `S'`, one edge
/// `s -- t'` per arrow `s → t`.
#[derive(Clone, Debug, Serialize)]
pub struct SeparationDiagram {
    pub vertices: Vec<String>,
    pub arrows: Vec<(SimpleLabel, SimpleLabel)>,
    pub edges: Vec<(String, String)>,
}

impl SeparationDiagram {
    /// Connected components as sets of vertex indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let index = |s: &str| self.vertices.iter().position(|v| v == s).expect("vertex");
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (a, b) in &self.edges {
            let (x, y) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
            parent[x] = y;
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Number of components that are cycles on four vertices (affine type A₃).
    pub fn affine_a3_count(&self) -> usize {
        self.components()
            .iter()
            .filter(|c| {
                c.len() == 4 && {
                    let names: Vec<&String> = c.iter().map(|&i| &self.vertices[i]).collect();
                    let edges: Vec<_> = self
                        .edges
                        .iter()
                        .filter(|(a, _)| names.contains(&a))
                        .collect();
                    edges.len() == 4
                        && names.iter().all(|v| {
                            edges.iter().filter(|(a, b)| a == *v || b == *v).count() == 2
                        })
                }
            })
            .count()
    }

    pub fn isolated_count(&self) -> usize {
        self.components().iter().filter(|c| c.len() == 1).count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph separation {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Full `Ext¹` table over the sixteen simples.
pub fn ext_table(reg: &Registry) -> Result<Vec<(SimpleLabel, SimpleLabel, usize)>, ModError> {
    let labels = SimpleLabel::all();
    let mut out = Vec::new();
    for s in &labels {
        let layers = radical_layers(reg, reg.cover(*s))?;
        for t in &labels {
            let n = layers
                .get(1)
                .and_then(|l| l.iter().find(|(k, _)| k == t).map(|(_, n)| *n))
                .unwrap_or(0);
            out.push((*s, *t, n));
        }
    }
    Ok(out)
}

pub fn separation_diagram(reg: &Registry) -> Result<SeparationDiagram, ModError> {
    let labels = SimpleLabel::all();
    let mut vertices: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    vertices.extend(labels.iter().map(|l| format!("{l}'")));
    let mut arrows = Vec::new();
    let mut edges = Vec::new();
    for (s, t, n) in ext_table(reg)? {
        for _ in 0..n {
            arrows.push((s, t));
            edges.push((s.to_string(), format!("{t}'")));
        }
    }
    Ok(SeparationDiagram {
        vertices,
        arrows,
        edges,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularReport {
    pub checks: Vec<(String, bool)>,
}

impl RegularReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Bookkeeping for `D ≅ ⊕ P(S)^{dim S}` and the structure of the covers.
pub fn verify_regular_decomposition(reg: &Registry) -> RegularReport {
    let mut checks = Vec::new();
    let d = reg.simples[0].1.algebra.dim();
    let total: usize = reg
        .simples
        .iter()
        .map(|(l, _)| reg.cover(*l).dim * l.dim())
        .sum();
    checks.push((format!("Σ dim P(S)·dim S = {total} = dim D = {d}"), total == d));
    let two_dim = reg.simples.iter().filter(|(l, _)| l.dim() == 2).count();
    let bound = 4 * 2 + two_dim * 4;
    checks.push((format!("4·2 + {two_dim}·2² = {bound}"), bound == 56));
    for l in 0..4u8 {
        let p = reg.cover(SimpleLabel::Char(l));
        checks.push((format!("dim P(χ^{l}) = 4"), p.dim == 4));
        checks.push((format!("P(χ^{l}) indecomposable"), is_indecomposable(p)));
        let ch = reg.simple(SimpleLabel::Char(l));
        checks.push((format!("top P(χ^{l}) ≅ χ^{l}"), is_isomorphic(&top(p), ch)));
        checks.push((
            format!("soc P(χ^{l}) ≅ χ^{l}"),
            is_isomorphic(&socle_module(p), ch),
        ));
    }
    for (l, s) in &reg.simples {
        if let SimpleLabel::TwoDim(..) = l {
            checks.push((format!("{l} simple"), is_abs_simple(s)));
        }
    }
    RegularReport { checks }
}

/// `span{p_i, …, p_4}` inside a four-dimensional module.
pub fn tail_span(i: usize) -> Subspace {
    let vecs: Vec<Vector> = (i - 1..4).map(|k| unit_vec(4, k)).collect();
    Subspace::new(4, &vecs)
}

/// Echelon basis of a set of vectors (re-export for callers building subspaces).
pub fn subspace(dim: usize, vecs: &[Vector]) -> Subspace {
    Subspace {
        ambient: dim,
        basis: span_basis(vecs, dim),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characters_and_simples_are_modules() {
        let c1 = make_char_module(1);
        assert_eq!(c1.gen_action("a"), Matrix::diag(&[xi_pow(1)]));
        assert_eq!(c1.gen_action("g"), Matrix::diag(&[-Scalar::one()]));
        assert_eq!(make_char_module(2).gen_action("d"), Matrix::diag(&[-Scalar::one()]));
        for (i, j) in lambda() {
            let v = make_vij(i as i64, j as i64).unwrap();
            assert!(is_abs_simple(&v));
        }
        assert!(matches!(make_vij(0, 0), Err(ModError::NotInLambda(0, 0))));
        assert!(!verify_module(&make_vij_perturbed(2, 1)));
        assert!(verify_module(&AModule::zero(&d_algebra())));
    }

    #[test]
    fn p_structure() {
        let reg = Registry::shared();
        let p = make_p();
        assert!(is_indecomposable(&p) && !is_abs_simple(&p));
        let series = composition_series(&reg, &p).unwrap();
        use SimpleLabel::Char;
        assert_eq!(series, vec![Char(0), Char(3), Char(1), Char(0)]);
        let b = p.gen_action("b");
        assert_eq!(b.col(1), vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), xi_pow(1)]);
    }

    #[test]
    fn iso_and_tensor() {
        let reg = Registry::shared();
        let v21 = reg.simple(SimpleLabel::TwoDim(2, 1));
        assert_eq!(hom_space(v21, v21).len(), 1);
        assert_eq!(hom_space(v21, reg.simple(SimpleLabel::TwoDim(2, 3))).len(), 0);
        let t = tensor_module(v21, reg.simple(SimpleLabel::Char(1))).unwrap();
        assert!(is_isomorphic(&t, reg.simple(SimpleLabel::TwoDim(3, 3))));
        let eps = reg.simple(SimpleLabel::Char(0));
        let s = direct_sum(eps, reg.simple(SimpleLabel::Char(1))).unwrap();
        assert!(!is_indecomposable(&s));
        assert!(is_isomorphic(&tensor_module(v21, eps).unwrap(), v21));
    }

    #[test]
    fn cg_examples() {
        let reg = Registry::shared();
        assert_eq!(
            decompose_cg(&reg, 2, 1, 2, 1).unwrap(),
            CgDecomposition::Sum((0, 2), (3, 0))
        );
        assert_eq!(decompose_cg(&reg, 2, 1, 2, 3).unwrap(), CgDecomposition::Projective(3));
    }
}
