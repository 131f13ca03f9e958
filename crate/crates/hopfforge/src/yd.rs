//! Yetter–Drinfeld modules over K obtained from modules over `D(K^cop)`.
//!
//! A YD module stores the K-action (one matrix per basis element of K) and
//! the coaction `δ(v) = Σ_i k_i ⊗ C_i v`, stacked as an `(8·dim) × dim`
//! matrix whose `i`-th block is `C_i`.

use crate::cyclo::{sign_pow, sqrt2, xi, xi_pow, Scalar};
use crate::drinfeld::delta2_table;
use crate::hopf::{alpha, build_k, dual, phi_xg, AxiomReport, FinHopf, K_NAMES};
use crate::linalg::{unit_vec, Matrix, Vector};
use crate::modrep::{d_algebra, make_p_char, verify_module, AModule, Registry, SimpleLabel};
use crate::par;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

#[derive(Debug, thiserror::Error)]
pub enum YdError {
    #[error("module is not over D(K^cop)")]
    WrongAlgebra,
    #[error("YD invariant failed for {0}: {1:?}")]
    Invariant(String, Vec<String>),
    #[error("malformed YD data: {0}")]
    Malformed(String),
}

struct KBase {
    k: FinHopf,
    kd: FinHopf,
    s: Matrix,
    d2: Vec<Vec<(usize, usize, usize, Scalar)>>,
}

static K_BASE: OnceLock<KBase> = OnceLock::new();

fn kbase() -> &'static KBase {
    K_BASE.get_or_init(|| {
        let k = build_k();
        let kd = dual(&k);
        let s = k.antipode.clone().expect("K has an antipode");
        let d2 = delta2_table(&k);
        KBase { k, kd, s, d2 }
    })
}

/// The Hopf algebra K, shared.
pub fn k_algebra() -> &'static FinHopf {
    &kbase().k
}

const KDIM: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct YDModule {
    pub name: String,
    pub dim: usize,
    /// `action[j]` is the matrix of the basis element `K_NAMES[j]`.
    pub action: Vec<Matrix>,
    pub coaction: Matrix,
}

impl YDModule {
    /// Builds from the action and the coaction blocks `C_0, …, C_7`.
    pub fn from_blocks(name: impl Into<String>, action: Vec<Matrix>, blocks: &[Matrix]) -> Self {
        let dim = action[0].rows();
        let mut coaction = Matrix::zeros(KDIM * dim, dim);
        for (i, b) in blocks.iter().enumerate() {
            for r in 0..dim {
                for c in 0..dim {
                    coaction.set(i * dim + r, c, b.get(r, c).clone());
                }
            }
        }
        YDModule {
            name: name.into(),
            dim,
            action,
            coaction,
        }
    }

    /// Coaction block `C_i`: the `K_NAMES[i]` component of `δ`.
    pub fn block(&self, i: usize) -> Matrix {
        let rows: Vec<usize> = (i * self.dim..(i + 1) * self.dim).collect();
        let cols: Vec<usize> = (0..self.dim).collect();
        self.coaction.submatrix(&rows, &cols)
    }

    pub fn blocks(&self) -> Vec<Matrix> {
        (0..KDIM).map(|i| self.block(i)).collect()
    }

    /// `δ(v)` as a vector indexed by `(i, r) ↦ i·dim + r`.
    pub fn coact(&self, v: &[Scalar]) -> Vector {
        self.coaction.apply(v)
    }

    /// Action of an arbitrary element of K.
    pub fn act(&self, h: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (j, c) in h.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.action[j]);
            }
        }
        m
    }

    pub fn direct_sum(&self, o: &YDModule) -> YDModule {
        let action = self
            .action
            .iter()
            .zip(&o.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let blocks: Vec<Matrix> = self
            .blocks()
            .iter()
            .zip(o.blocks())
            .map(|(a, b)| a.direct_sum(&b))
            .collect();
        YDModule::from_blocks(format!("{} ⊕ {}", self.name, o.name), action, &blocks)
    }

    /// Trivial YD module: `h·v = ε(h)v`, `δ(v) = 1 ⊗ v`.
    pub fn trivial(dim: usize) -> YDModule {
        let k = k_algebra();
        let action = k.counit.iter().map(|e| Matrix::identity(dim).scale(e)).collect();
        let mut blocks = vec![Matrix::zeros(dim, dim); KDIM];
        blocks[0] = Matrix::identity(dim);
        YDModule::from_blocks("trivial", action, &blocks)
    }

    pub fn to_json(&self) -> YdJson {
        YdJson {
            name: self.name.clone(),
            dim: self.dim,
            action: K_NAMES
                .iter()
                .zip(&self.action)
                .map(|(n, m)| (n.to_string(), m.clone()))
                .collect(),
            coaction: self.coaction.clone(),
        }
    }

    pub fn from_json(j: YdJson) -> Result<Self, YdError> {
        let mut action = Vec::with_capacity(KDIM);
        for n in K_NAMES {
            let m = j
                .action
                .get(n)
                .ok_or_else(|| YdError::Malformed(format!("missing action of {n}")))?;
            if m.rows() != j.dim || m.cols() != j.dim {
                return Err(YdError::Malformed(format!("action of {n} has wrong shape")));
            }
            action.push(m.clone());
        }
        if j.coaction.rows() != KDIM * j.dim || j.coaction.cols() != j.dim {
            return Err(YdError::Malformed("coaction has wrong shape".into()));
        }
        Ok(YDModule {
            name: j.name,
            dim: j.dim,
            action,
            coaction: j.coaction,
        })
    }
}

#[derive(Serialize, Deserialize)]
pub struct YdJson {
    pub name: String,
    pub dim: usize,
    pub action: BTreeMap<String, Matrix>,
    pub coaction: Matrix,
}

// index of e^i ⋈ e_j in the double
fn dbl(i: usize, j: usize) -> usize {
    i * KDIM + j
}

/// Matrix of `f ⋈ 1` for `f ∈ K*` given in the dual basis.
fn left_action(m: &AModule, f: &[Scalar]) -> Matrix {
    let unit = &k_algebra().unit;
    let mut u = vec![Scalar::zero(); KDIM * KDIM];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in unit.iter().enumerate() {
            if !a.is_zero() && !b.is_zero() {
                u[dbl(i, j)] += &(a * b);
            }
        }
    }
    m.act(&u)
}

/// Matrix of `ε ⋈ h`.
fn right_action(m: &AModule, h: &[Scalar]) -> Matrix {
    let counit = &k_algebra().counit;
    let mut u = vec![Scalar::zero(); KDIM * KDIM];
    for (i, a) in counit.iter().enumerate() {
        for (j, b) in h.iter().enumerate() {
            if !a.is_zero() && !b.is_zero() {
                u[dbl(i, j)] += &(a * b);
            }
        }
    }
    m.act(&u)
}

/// The basis `{gⁱ, xgⁱ}` of K* paired with its dual basis written in K:
/// `(gⁱ)* = ¼(1 + ξⁱa + (−ξ)ⁱd + (−1)ⁱa²)` and
/// `(xgⁱ)* = (4√2ξ)⁻¹((−ξ)ⁱb + ξⁱc + ab + (−1)ⁱac)`.
pub fn dual_basis_pairs() -> Vec<(Vector, Vector)> {
    let base = kbase();
    let (k, kd) = (&base.k, &base.kd);
    let quarter = Scalar::frac(1, 4);
    let xpre = (&(&sqrt2() * &xi()) * &Scalar::from_int(4)).inv().expect("nonzero");
    let mut out = Vec::with_capacity(KDIM);
    for i in 0..4i64 {
        let minus_xi = &sign_pow(i) * &xi_pow(i);
        let gstar = k.elem(&[
            (quarter.clone(), "1"),
            (&quarter * &xi_pow(i), "a"),
            (&quarter * &minus_xi, "d"),
            (&quarter * &sign_pow(i), "a^2"),
        ]);
        out.push((alpha(kd, i), gstar));
    }
    for i in 0..4i64 {
        let minus_xi = &sign_pow(i) * &xi_pow(i);
        let xstar = k.elem(&[
            (&xpre * &minus_xi, "b"),
            (&xpre * &xi_pow(i), "c"),
            (xpre.clone(), "ab"),
            (&xpre * &sign_pow(i), "ac"),
        ]);
        out.push((phi_xg(kd, i), xstar));
    }
    out
}

fn check_d_module(m: &AModule) -> Result<(), YdError> {
    if m.algebra.dim() != KDIM * KDIM || m.algebra.name != "D(K^cop)" {
        return Err(YdError::WrongAlgebra);
    }
    Ok(())
}

fn k_action(m: &AModule) -> Vec<Matrix> {
    (0..KDIM).map(|j| right_action(m, &unit_vec(KDIM, j))).collect()
}

/// Coaction blocks from `δ(v) = Σ (gⁱ)* ⊗ gⁱ·v + Σ (xgⁱ)* ⊗ xgⁱ·v`.
fn blocks_from_pairs(m: &AModule, pairs: &[(Vector, Vector)]) -> Vec<Matrix> {
    let mut blocks = vec![Matrix::zeros(m.dim, m.dim); KDIM];
    for (f, kstar) in pairs {
        let rho = left_action(m, f);
        for (i, c) in kstar.iter().enumerate() {
            if !c.is_zero() {
                blocks[i].axpy(c, &rho);
            }
        }
    }
    blocks
}

/// Coaction blocks from the plain dual basis: `C_i = ρ(e^i ⋈ 1)`.
pub fn coaction_generic(m: &AModule) -> Result<Vec<Matrix>, YdError> {
    check_d_module(m)?;
    Ok((0..KDIM).map(|i| left_action(m, &unit_vec(KDIM, i))).collect())
}

/// YD module over K underlying a `D(K^cop)`-module, checked against all
/// YD axioms.
pub fn from_double_module(m: &AModule) -> Result<YDModule, YdError> {
    check_d_module(m)?;
    let blocks = blocks_from_pairs(m, &dual_basis_pairs());
    let y = YDModule::from_blocks(m.name.clone(), k_action(m), &blocks);
    let rep = verify_yd(&y);
    if !rep.passed() {
        return Err(YdError::Invariant(m.name.clone(), rep.failures()));
    }
    Ok(y)
}

/// Counit, coassociativity and YD compatibility, checked on basis elements.
pub fn verify_yd(y: &YDModule) -> AxiomReport {
    let base = kbase();
    let k = &base.k;
    let n = y.dim;
    let blocks = y.blocks();
    let mut rep = AxiomReport::default();

    let mut eps_sum = Matrix::zeros(n, n);
    for (i, e) in k.counit.iter().enumerate() {
        if !e.is_zero() {
            eps_sum.axpy(e, &blocks[i]);
        }
    }
    rep.push("counit", eps_sum == Matrix::identity(n), "(ε⊗id)δ = id");

    // (Δ⊗id)δ = (id⊗δ)δ: Σ_i Δ(k_i)[p,q] C_i = C_q C_p
    let mut coassoc_fail = Vec::new();
    let mut lhs: HashMap<(usize, usize), Matrix> = HashMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for (p, q, c) in k.comult_basis(i) {
            lhs.entry((*p, *q))
                .or_insert_with(|| Matrix::zeros(n, n))
                .axpy(c, b);
        }
    }
    for p in 0..KDIM {
        for q in 0..KDIM {
            let rhs = blocks[q].dot(&blocks[p]);
            let l = lhs.remove(&(p, q)).unwrap_or_else(|| Matrix::zeros(n, n));
            if l != rhs {
                coassoc_fail.push(format!("{}⊗{}", K_NAMES[p], K_NAMES[q]));
            }
        }
    }
    rep.push("coassociativity", coassoc_fail.is_empty(), coassoc_fail.join(", "));

    // δ(h·m) = h₁ m₋₁ S(h₃) ⊗ h₂·m₀
    let fails: Vec<String> = par::map_range(KDIM, |h| {
        let mut bad = Vec::new();
        let mut rhs = Matrix::zeros(KDIM * n, n);
        for (p, q, r, c) in &base.d2[h] {
            let s3 = base.s.col(*r);
            let h1 = k.e(*p);
            for (i, bi) in blocks.iter().enumerate() {
                let prod = k.mul(&k.mul(&h1, &k.e(i)), &s3);
                let tail = y.action[*q].dot(bi);
                for (t, coef) in prod.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let w = c * coef;
                    for rr in 0..n {
                        for cc in 0..n {
                            let v = tail.get(rr, cc);
                            if !v.is_zero() {
                                rhs.add_to(t * n + rr, cc, &(&w * v));
                            }
                        }
                    }
                }
            }
        }
        let lhs = y.coaction.dot(&y.action[h]);
        if lhs != rhs {
            bad.push(K_NAMES[h].to_string());
        }
        bad
    })
    .into_iter()
    .flatten()
    .collect();
    rep.push("compatibility", fails.is_empty(), fails.join(", "));
    rep
}

/// Braiding terms: `c(e_a ⊗ f_b) = Σ coef · f_{b'} ⊗ e_{a'}`, listed as
/// `(b', a', coef)` for each input index `a·dim(n) + b`.
pub fn braiding_terms(m: &YDModule, n: &YDModule) -> Vec<Vec<(usize, usize, Scalar)>> {
    let mb = m.blocks();
    let mut out = vec![Vec::new(); m.dim * n.dim];
    for (i, ci) in mb.iter().enumerate() {
        let ai = &n.action[i];
        for a in 0..m.dim {
            for a2 in 0..m.dim {
                let x = ci.get(a2, a);
                if x.is_zero() {
                    continue;
                }
                for b in 0..n.dim {
                    for b2 in 0..n.dim {
                        let y = ai.get(b2, b);
                        if !y.is_zero() {
                            out[a * n.dim + b].push((b2, a2, x * y));
                        }
                    }
                }
            }
        }
    }
    for terms in &mut out {
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (b2, a2, c) in terms.drain(..) {
            *acc.entry((b2, a2)).or_insert_with(Scalar::zero) += &c;
        }
        terms.extend(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((b2, a2), c)| (b2, a2, c)),
        );
    }
    out
}

/// `c_{M,N}(m ⊗ n) = m₋₁·n ⊗ m₀` as a matrix from `M⊗N` to `N⊗M`
/// (index of `u ⊗ v` is `u·dim + v`).
pub fn braiding(m: &YDModule, n: &YDModule) -> Matrix {
    let mut c = Matrix::zeros(m.dim * n.dim, m.dim * n.dim);
    for (col, terms) in braiding_terms(m, n).into_iter().enumerate() {
        for (b2, a2, x) in terms {
            c.add_to(b2 * m.dim + a2, col, &x);
        }
    }
    c
}

type SparseTensor = BTreeMap<Vec<usize>, Scalar>;

fn apply_at(terms: &[Vec<(usize, usize, Scalar)>], dim: usize, pos: usize, t: &SparseTensor) -> SparseTensor {
    let mut out = SparseTensor::new();
    for (idx, c) in t {
        for (b2, a2, x) in &terms[idx[pos] * dim + idx[pos + 1]] {
            let mut j = idx.clone();
            j[pos] = *b2;
            j[pos + 1] = *a2;
            *out.entry(j).or_insert_with(Scalar::zero) += &(c * x);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Braid equation `c₁c₂c₁ = c₂c₁c₂` on `V⊗³`, evaluated sparsely on every
/// basis tensor.
pub fn yang_baxter(y: &YDModule) -> bool {
    let terms = braiding_terms(y, y);
    let d = y.dim;
    par::find_first(d * d * d, |t| {
        let idx = vec![t / (d * d), (t / d) % d, t % d];
        let start: SparseTensor = [(idx, Scalar::one())].into_iter().collect();
        let l = apply_at(&terms, d, 0, &apply_at(&terms, d, 1, &apply_at(&terms, d, 0, &start)));
        let r = apply_at(&terms, d, 1, &apply_at(&terms, d, 0, &apply_at(&terms, d, 1, &start)));
        (l != r).then_some(())
    })
    .is_none()
}

/// YD structure on `P(k_{χˡ}) = P ⊗ k_{χˡ}` in the basis `p_{1,ℓ}, …, p_{4,ℓ}`.
pub fn projcover_yd(l: i64) -> YDModule {
    from_double_module(&make_p_char(l)).expect("projective covers are YD modules")
}

/// D-action rebuilt from the YD data: `ρ(e^i ⋈ e_j) = C_i A_j`.
pub fn reconstruct_double_action(y: &YDModule) -> Vec<Matrix> {
    let blocks = y.blocks();
    let mut out = Vec::with_capacity(KDIM * KDIM);
    for b in &blocks {
        for a in &y.action {
            out.push(b.dot(a));
        }
    }
    out
}

/// Checks that the YD data determines the original D-action.
pub fn round_trip(m: &AModule, y: &YDModule) -> bool {
    reconstruct_double_action(y) == m.action
}

/// Tensor product in the YD category: `h·(v⊗w) = h₁v ⊗ h₂w`,
/// `δ(v⊗w) = v₋₁w₋₁ ⊗ v₀ ⊗ w₀`.
pub fn tensor(m: &YDModule, n: &YDModule) -> YDModule {
    let k = k_algebra();
    let dim = m.dim * n.dim;
    let action = (0..KDIM)
        .map(|h| {
            let mut acc = Matrix::zeros(dim, dim);
            for (p, q, c) in k.comult_basis(h) {
                acc.axpy(c, &m.action[*p].kron(&n.action[*q]));
            }
            acc
        })
        .collect();
    let (mb, nb) = (m.blocks(), n.blocks());
    let mut blocks = vec![Matrix::zeros(dim, dim); KDIM];
    for (i, bi) in mb.iter().enumerate() {
        for (j, bj) in nb.iter().enumerate() {
            let kk = bi.kron(bj);
            for (t, c) in k.mult_basis(i, j) {
                blocks[*t].axpy(c, &kk);
            }
        }
    }
    YDModule::from_blocks(format!("{} ⊗ {}", m.name, n.name), action, &blocks)
}

/// The `D(K^cop)`-module with the same underlying YD data.
pub fn to_double_module(y: &YDModule) -> Result<AModule, YdError> {
    let m = AModule {
        algebra: d_algebra(),
        name: y.name.clone(),
        dim: y.dim,
        action: reconstruct_double_action(y),
    };
    if !verify_module(&m) {
        return Err(YdError::Invariant(y.name.clone(), vec!["D-action".into()]));
    }
    Ok(m)
}

/// All registry objects as YD modules: the sixteen simples, then the four
/// projective covers `P(k_{χʲ})`.
pub fn registry_yd(reg: &Registry) -> Result<Vec<(String, YDModule)>, YdError> {
    let mut mods: Vec<(String, &AModule)> = reg
        .simples
        .iter()
        .map(|(l, m)| (l.to_string(), m))
        .collect();
    for (j, p) in reg.char_covers.iter().enumerate() {
        mods.push((format!("P({})", SimpleLabel::Char(j as u8)), p));
    }
    par::map_slice(&mods, |(name, m)| {
        from_double_module(m).map(|mut y| {
            y.name = name.clone();
            (name.clone(), y)
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{make_char_module, make_vij, make_vij_perturbed};

    #[test]
    fn explicit_dual_basis_is_dual() {
        for (r, (f, _)) in dual_basis_pairs().iter().enumerate() {
            for (c, (_, h)) in dual_basis_pairs().iter().enumerate() {
                let s: Scalar = f.iter().zip(h).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y));
                assert_eq!(s, Scalar::from_int((r == c) as i64), "⟨{r}, {c}⟩");
            }
        }
    }

    #[test]
    fn explicit_and_generic_coactions_agree() {
        for m in [make_char_module(1), make_vij(2, 1).unwrap(), make_p_char(3)] {
            let y = from_double_module(&m).unwrap();
            assert_eq!(y.blocks(), coaction_generic(&m).unwrap());
            assert!(round_trip(&m, &y));
        }
    }

    #[test]
    fn character_coaction_and_braiding() {
        let k = k_algebra();
        for j in 0..4 {
            let y = from_double_module(&make_char_module(j)).unwrap();
            let a2j = k.pow(&k.named("a^2"), j as usize);
            let got: Vector = (0..KDIM).map(|i| y.block(i).get(0, 0).clone()).collect();
            assert_eq!(got, a2j);
            assert_eq!(braiding(&y, &y), Matrix::diag(&[sign_pow(j)]));
        }
    }

    #[test]
    fn trivial_passes_and_sign_flip_fails() {
        assert!(verify_yd(&YDModule::trivial(3)).passed());
        let mut y = from_double_module(&make_vij(2, 1).unwrap()).unwrap();
        let (r, c) = (0..y.coaction.rows())
            .flat_map(|r| (0..y.dim).map(move |c| (r, c)))
            .find(|&(r, c)| r >= y.dim && !y.coaction.get(r, c).is_zero())
            .unwrap();
        let v = -y.coaction.get(r, c).clone();
        y.coaction.set(r, c, v);
        assert!(!verify_yd(&y).passed());
    }

    #[test]
    fn perturbed_module_is_rejected() {
        assert!(from_double_module(&make_vij_perturbed(2, 1)).is_err());
    }

    #[test]
    fn tensor_matches_double_tensor() {
        use crate::modrep::tensor_module;
        let (m, n) = (make_vij(2, 1).unwrap(), make_char_module(1));
        let (ym, yn) = (from_double_module(&m).unwrap(), from_double_module(&n).unwrap());
        let t = tensor(&ym, &yn);
        assert!(verify_yd(&t).passed());
        let back = to_double_module(&t).unwrap();
        assert!(crate::modrep::is_isomorphic(&back, &tensor_module(&m, &n).unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let y = projcover_yd(1);
        let s = serde_json::to_string(&y.to_json()).unwrap();
        let back = YDModule::from_json(serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, y);
    }
}
