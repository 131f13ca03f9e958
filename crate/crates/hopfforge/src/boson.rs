//! Bosonizations `𝔅(V)#K` and the liftings `𝔄₃,₁(μ)`, `𝔄₃,₃(μ)`.
//!
//! Degree `n` of `𝔅(V)` is realized as `im Sₙ ⊂ V⊗ⁿ`: multiplication is
//! concatenation followed by the symmetrizer, comultiplication is
//! deconcatenation. The liftings are presented by a rewriting system on words
//! in `x, y, a, b` (with `c = a²b`, `d = a³`) whose irreducible words are
//! `xⁱyʲaᵏbˡ`.

use crate::cyclo::{xi, Scalar};
use crate::hopf::{
    compute_antipode, coradical, generated_subalgebra, graded_from_filtration, hopf_map_check,
    skew_primitives, standard_filtration, tensor_add, verify_hopf, AxiomReport, FinHopf, HopfError,
    Sparse, Tensor2, K_NAMES,
};
use crate::linalg::{span_rank, unit_vec, IncrementalBasis, Matrix, Vector};
use crate::modrep::{AModule, GenAlgebra, ModError};
use crate::nichols::{hilbert, symmetrizers, BraidedSpace, NicholsError, Total};
use crate::par;
use crate::yd::{k_algebra, tensor, YDModule};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum BosonError {
    #[error("Nichols algebra is not known to be finite: {0:?}")]
    NotFinite(Total),
    #[error("deconcatenation leaves the image of the symmetrizers in degree {0}")]
    NotClosed(usize),
    #[error("rewriting did not terminate on {0}")]
    NoNormalForm(String),
    #[error("critical pair {0} does not resolve")]
    NotConfluent(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Mod(#[from] ModError),
}

fn k_index(name: &str) -> usize {
    K_NAMES.iter().position(|n| *n == name).expect("K basis name")
}

// ---------------------------------------------------------------------------
// Nichols algebra as a braided Hopf algebra

/// Finite Nichols algebra with its YD structure, in a graded basis of
/// symmetrizer images of monomials.
#[derive(Clone, Debug)]
pub struct BraidedHopf {
    pub name: String,
    pub top_degree: usize,
    pub degrees: Vec<usize>,
    /// Monomial `e_{i₁}⋯e_{iₙ}` chosen for each basis element.
    pub monomials: Vec<Vec<usize>>,
    /// `Sₙ` applied to the monomial, a vector in `V⊗ⁿ`.
    pub reps: Vec<Vector>,
    pub mult: Vec<Vec<Sparse>>,
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub yd: YDModule,
}

impl BraidedHopf {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn names(&self) -> Vec<String> {
        self.monomials
            .iter()
            .map(|m| {
                if m.is_empty() {
                    "1".to_string()
                } else {
                    m.iter().map(|i| format!("v{}", i + 1)).collect::<Vec<_>>().join("")
                }
            })
            .collect()
    }

    pub fn counit(&self) -> Vector {
        unit_vec(self.dim(), 0)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in &self.mult[i][j] {
                    out[*k] += &(&(a * b) * c);
                }
            }
        }
        out
    }

    /// Degree-`(p, q)` component of `Δ(u)` for a basis element.
    pub fn comul_component(&self, i: usize, p: usize) -> Vec<(usize, usize, Scalar)> {
        self.comult[i]
            .iter()
            .filter(|(l, _, _)| self.degrees[*l] == p)
            .cloned()
            .collect()
    }
}

fn index_of_monomial(m: &[usize], d: usize) -> usize {
    m.iter().fold(0, |acc, &i| acc * d + i)
}

fn monomial_of_index(mut idx: usize, n: usize, d: usize) -> Vec<usize> {
    let mut m = vec![0; n];
    for k in (0..n).rev() {
        m[k] = idx % d;
        idx /= d;
    }
    m
}

/// Builds `𝔅(V)` for a YD module whose Nichols algebra is finite.
pub fn build_nichols_hopf(y: &YDModule, max_degree: usize) -> Result<BraidedHopf, BosonError> {
    let bs = BraidedSpace::from_yd(y)?;
    let rep = hilbert(&bs, max_degree);
    if !matches!(rep.total, Total::Finite(_)) {
        return Err(BosonError::NotFinite(rep.total));
    }
    let top = rep.graded_dims.len() - 2;
    let d = y.dim;
    let sym = symmetrizers(&bs, top.max(1));
    let s_of = |n: usize| -> Matrix {
        if n == 0 {
            Matrix::identity(1)
        } else {
            sym[n - 1].clone()
        }
    };

    // graded basis
    let mut degrees = Vec::new();
    let mut monomials = Vec::new();
    let mut reps = Vec::new();
    let mut bases: Vec<IncrementalBasis> = Vec::new();
    let mut offsets = Vec::new();
    for n in 0..=top {
        let s = s_of(n);
        let dn = d.pow(n as u32);
        let mut basis = IncrementalBasis::new(dn);
        offsets.push(degrees.len());
        for col in 0..dn {
            let v = s.col(col);
            if basis.insert(&v).is_some() {
                degrees.push(n);
                monomials.push(monomial_of_index(col, n, d));
                reps.push(v);
            }
        }
        debug_assert_eq!(basis.len(), rep.graded_dims[n]);
        bases.push(basis);
    }
    let dim = degrees.len();

    // concatenate, then symmetrize and express
    let mult: Vec<Vec<Sparse>> = par::map_range(dim, |i| {
        (0..dim)
            .map(|j| {
                let n = degrees[i] + degrees[j];
                if n > top {
                    return Sparse::new();
                }
                let mut m = monomials[i].clone();
                m.extend(&monomials[j]);
                let v = s_of(n).col(index_of_monomial(&m, d));
                let coef = bases[n].express(&v).expect("image of the symmetrizer");
                coef.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (offsets[n] + k, c))
                    .collect()
            })
            .collect()
    });

    // deconcatenation in the basis of products of representatives
    let mut pair_bases: HashMap<(usize, usize), IncrementalBasis> = HashMap::new();
    for p in 0..=top {
        for q in 0..=top - p {
            let dn = d.pow((p + q) as u32);
            let mut b = IncrementalBasis::new(dn);
            for (i, ri) in reps.iter().enumerate().filter(|(i, _)| degrees[*i] == p) {
                for (j, rj) in reps.iter().enumerate().filter(|(j, _)| degrees[*j] == q) {
                    let v = Matrix::from_cols(ri.len(), std::slice::from_ref(ri))
                        .kron(&Matrix::from_cols(rj.len(), std::slice::from_ref(rj)))
                        .col(0);
                    let _ = (i, j);
                    b.insert(&v);
                }
            }
            pair_bases.insert((p, q), b);
        }
    }
    let mut comult = Vec::with_capacity(dim);
    for i in 0..dim {
        let n = degrees[i];
        let mut terms = Vec::new();
        for p in 0..=n {
            let q = n - p;
            let (kp, kq) = (
                degrees.iter().filter(|&&x| x == p).count(),
                degrees.iter().filter(|&&x| x == q).count(),
            );
            let coef = pair_bases[&(p, q)]
                .express(&reps[i])
                .ok_or(BosonError::NotClosed(n))?;
            debug_assert_eq!(coef.len(), kp * kq);
            for (k, c) in coef.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((offsets[p] + k / kq, offsets[q] + k % kq, c));
                }
            }
        }
        comult.push(terms);
    }

    // YD structure of each graded piece, transported to the chosen basis
    let mut powers = vec![YDModule::trivial(1)];
    for n in 1..=top {
        let next = tensor(&powers[n - 1], y);
        powers.push(next);
    }
    let mut action = vec![Matrix::zeros(dim, dim); 8];
    let mut blocks = vec![Matrix::zeros(dim, dim); 8];
    for (i, r) in reps.iter().enumerate() {
        let n = degrees[i];
        let pw = &powers[n];
        for h in 0..8 {
            for (target, src) in [(&mut action[h], &pw.action[h]), (&mut blocks[h], &pw.block(h))] {
                let v = src.apply(r);
                let coef = bases[n].express(&v).expect("YD submodule");
                for (k, c) in coef.into_iter().enumerate() {
                    if !c.is_zero() {
                        target.set(offsets[n] + k, i, c);
                    }
                }
            }
        }
    }
    let yd_b = YDModule::from_blocks(format!("𝔅({})", y.name), action, &blocks);

    Ok(BraidedHopf {
        name: format!("𝔅({})", y.name),
        top_degree: top,
        degrees,
        monomials,
        reps,
        mult,
        comult,
        yd: yd_b,
    })
}

// ---------------------------------------------------------------------------
// Bosonization

/// `𝔅(V)#K` with the inclusion of K and the projection onto K.
pub struct Bosonization {
    pub nichols: BraidedHopf,
    pub hopf: FinHopf,
    /// `ι(e_j) = 1#e_j`, columns indexed by the basis of K.
    pub inclusion: Matrix,
    /// `π(b#k) = ε(b)k`.
    pub projection: Matrix,
}

impl Bosonization {
    /// `b#k` for basis indices.
    pub fn index(&self, b: usize, k: usize) -> usize {
        b * 8 + k
    }

    /// Degree-one generator `e_i # 1`.
    pub fn generator(&self, i: usize) -> Vector {
        let b = self
            .nichols
            .monomials
            .iter()
            .position(|m| m.as_slice() == [i])
            .expect("degree-one basis");
        unit_vec(self.hopf.dim, self.index(b, 0))
    }

    /// `1 # k` for an element of K.
    pub fn from_k(&self, k: &[Scalar]) -> Vector {
        self.inclusion.apply(k)
    }
}

/// `(b#g)(c#h) = b(g₁·c)#g₂h` and `Δ(b#g) = b⁽¹⁾#(b⁽²⁾)₋₁g₁ ⊗ (b⁽²⁾)₀#g₂`.
pub fn bosonize(b: &BraidedHopf) -> Result<Bosonization, BosonError> {
    let k = k_algebra();
    let nb = b.dim();
    let dim = nb * 8;
    let idx = |x: usize, g: usize| x * 8 + g;
    let yd = &b.yd;
    let blocks = yd.blocks();

    let mult: Vec<Vec<Sparse>> = par::map_range(dim, |p| {
        let (x, g) = (p / 8, p % 8);
        (0..dim)
            .map(|q| {
                let (y, h) = (q / 8, q % 8);
                let mut acc = vec![Scalar::zero(); dim];
                for (g1, g2, c) in k.comult_basis(g) {
                    let g2h = k.mul(&k.e(*g2), &k.e(h));
                    for z in 0..nb {
                        let a = yd.action[*g1].get(z, y);
                        if a.is_zero() {
                            continue;
                        }
                        let ca = c * a;
                        for (w, m) in &b.mult[x][z] {
                            let cam = &ca * m;
                            for (t, s) in g2h.iter().enumerate() {
                                if !s.is_zero() {
                                    acc[idx(*w, t)] += &(&cam * s);
                                }
                            }
                        }
                    }
                }
                acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect()
    });

    let comult: Vec<Vec<(usize, usize, Scalar)>> = par::map_range(dim, |p| {
        let (x, g) = (p / 8, p % 8);
        let mut t = Tensor2::new();
        for (x1, x2, c) in &b.comult[x] {
            for (i, bi) in blocks.iter().enumerate() {
                for z in 0..nb {
                    let cz = bi.get(z, *x2);
                    if cz.is_zero() {
                        continue;
                    }
                    for (g1, g2, e) in k.comult_basis(g) {
                        let kg = k.mul(&k.e(i), &k.e(*g1));
                        let w = &(c * cz) * e;
                        for (s, ks) in kg.iter().enumerate() {
                            if !ks.is_zero() {
                                tensor_add(&mut t, (idx(*x1, s), idx(z, *g2)), &w * ks);
                            }
                        }
                    }
                }
            }
        }
        t.into_iter().map(|((l, r), c)| (l, r, c)).collect()
    });

    let mut counit = vec![Scalar::zero(); dim];
    for g in 0..8 {
        counit[idx(0, g)] = k.counit[g].clone();
    }
    let names: Vec<String> = b
        .names()
        .iter()
        .flat_map(|bn| K_NAMES.iter().map(move |kn| format!("{bn}#{kn}")))
        .collect();
    let mut inclusion = Matrix::zeros(dim, 8);
    let mut projection = Matrix::zeros(8, dim);
    for g in 0..8 {
        inclusion.set(idx(0, g), g, Scalar::one());
        projection.set(g, idx(0, g), Scalar::one());
    }
    let h = FinHopf::new(names, mult, unit_vec(dim, 0), comult, counit, None)?;
    let mut gens: Vec<Vector> = (0..nb)
        .filter(|&x| b.degrees[x] == 1)
        .map(|x| unit_vec(dim, idx(x, 0)))
        .collect();
    gens.extend(["a", "b", "c", "d"].iter().map(|n| inclusion.apply(&k.named(n))));
    let mut h = h.with_generators(gens);
    h.antipode = Some(compute_antipode(&h)?);
    Ok(Bosonization {
        nichols: b.clone(),
        hopf: h,
        inclusion,
        projection,
    })
}

/// Hopf-map checks for `ι` and `π`, and `π∘ι = id`.
pub fn check_inclusion_projection(bz: &Bosonization) -> Result<AxiomReport, BosonError> {
    let k = k_algebra();
    let mut rep = AxiomReport::default();
    let pi_iota = bz.projection.dot(&bz.inclusion);
    rep.push("π∘ι = id", pi_iota == Matrix::identity(8), "");
    let kgens: Vec<(Vector, Vector)> = ["a", "b", "c", "d"]
        .iter()
        .map(|n| (k.named(n), bz.from_k(&k.named(n))))
        .collect();
    let (iota, m) = hopf_map_check(k, &bz.hopf, &kgens)?;
    rep.push("ι Hopf map", iota.is_hopf_map() && m == bz.inclusion, iota.detail);
    let mut pgens: Vec<(Vector, Vector)> = bz
        .hopf
        .generators
        .iter()
        .map(|g| (g.clone(), bz.projection.apply(g)))
        .collect();
    pgens.retain(|_| true);
    let (pi, m) = hopf_map_check(&bz.hopf, k, &pgens)?;
    rep.push("π Hopf map", pi.is_hopf_map() && m == bz.projection, pi.detail);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Rewriting

pub type Word = Vec<u8>;
pub type Poly = BTreeMap<Word, Scalar>;

fn poly_add(p: &mut Poly, w: Word, c: Scalar) {
    let e = p.entry(w).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        let key: Vec<Word> = p.iter().filter(|(_, c)| c.is_zero()).map(|(w, _)| w.clone()).collect();
        for k in key {
            p.remove(&k);
        }
    }
}

pub fn show_word(w: &[u8]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        String::from_utf8_lossy(w).into_owned()
    }
}

pub fn show_poly(p: &Poly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(w, c)| format!("({})·{}", c.pretty(), show_word(w)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Oriented relations `lhs → Σ c·w`.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub rules: Vec<(Word, Vec<(Scalar, Word)>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPair {
    pub overlap: String,
    pub resolves: bool,
}

const MAX_STEPS: usize = 200_000;

impl RewriteSystem {
    fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (r, (lhs, _)) in self.rules.iter().enumerate() {
                if w[pos..].starts_with(lhs) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    fn apply_at(&self, w: &[u8], pos: usize, r: usize) -> Poly {
        let (lhs, rhs) = &self.rules[r];
        let mut out = Poly::new();
        for (c, mid) in rhs {
            let mut v = w[..pos].to_vec();
            v.extend(mid);
            v.extend(&w[pos + lhs.len()..]);
            poly_add(&mut out, v, c.clone());
        }
        out
    }

    /// Normal form by leftmost reduction.
    pub fn normal_form(&self, w: &[u8]) -> Result<Poly, BosonError> {
        self.reduce_poly([(w.to_vec(), Scalar::one())].into_iter().collect())
    }

    pub fn reduce_poly(&self, p: Poly) -> Result<Poly, BosonError> {
        let mut work = p;
        let mut done = Poly::new();
        let mut steps = 0;
        while let Some((w, c)) = work.pop_first() {
            steps += 1;
            if steps > MAX_STEPS {
                return Err(BosonError::NoNormalForm(show_word(&w)));
            }
            match self.find(&w) {
                None => poly_add(&mut done, w, c),
                Some((pos, r)) => {
                    for (v, d) in self.apply_at(&w, pos, r) {
                        poly_add(&mut work, v, &c * &d);
                    }
                }
            }
        }
        Ok(done)
    }

    /// All overlaps `uvw` with `uv`, `vw` left-hand sides, plus inclusions,
    /// reduced both ways.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>, BosonError> {
        let mut out = Vec::new();
        for (i, (l1, _)) in self.rules.iter().enumerate() {
            for (j, (l2, _)) in self.rules.iter().enumerate() {
                // proper overlaps
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut w = l1.clone();
                        w.extend(&l2[k..]);
                        let left = self.reduce_poly(self.apply_at(&w, 0, i))?;
                        let right = self.reduce_poly(self.apply_at(&w, l1.len() - k, j))?;
                        out.push(CriticalPair {
                            overlap: show_word(&w),
                            resolves: left == right,
                        });
                    }
                }
                // inclusions
                if i != j && l2.len() < l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] == l2[..] {
                            let left = self.reduce_poly(self.apply_at(l1, 0, i))?;
                            let right = self.reduce_poly(self.apply_at(l1, pos, j))?;
                            out.push(CriticalPair {
                                overlap: show_word(l1),
                                resolves: left == right,
                            });
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Liftings

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    A31,
    A33,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::A31 => write!(f, "𝔄₃,₁"),
            Family::A33 => write!(f, "𝔄₃,₃"),
        }
    }
}

fn w(s: &str) -> Word {
    s.as_bytes().to_vec()
}

fn t(c: Scalar, s: &str) -> (Scalar, Word) {
    (c, w(s))
}

/// Words for the basis of K (`c = a²b`, `d = a³`, `ac = a³b`).
pub fn k_words() -> [(&'static str, Word); 8] {
    [
        ("1", w("")),
        ("a", w("a")),
        ("b", w("b")),
        ("c", w("aab")),
        ("d", w("aaa")),
        ("a^2", w("aa")),
        ("ab", w("ab")),
        ("ac", w("aaab")),
    ]
}

/// Rewriting rules of `𝔄₃,₁(μ)` (the algebra is the same for `𝔄₃,₃(μ)`).
pub fn lifting_rules(mu: &Scalar) -> RewriteSystem {
    let x = xi();
    let one = Scalar::one;
    let mu2h = &(mu * mu) * &Scalar::frac(1, 2);
    RewriteSystem {
        rules: vec![
            (w("aaaa"), vec![t(one(), "")]),
            (w("bb"), vec![]),
            (w("ba"), vec![t(-x.clone(), "ab")]),
            (w("ax"), vec![t(-x.clone(), "xa")]),
            (w("ay"), vec![t(-one(), "ya"), t(-one(), "xaab")]),
            (w("bx"), vec![t(-x.clone(), "xb")]),
            (w("by"), vec![t(-one(), "yb"), t(-one(), "xaaa")]),
            (
                w("xx"),
                vec![t(Scalar::from_int(2), "yy"), t(mu.clone(), ""), t(-mu.clone(), "aa")],
            ),
            (w("yx"), vec![t(-one(), "xy"), t(&x * mu, "aaab")]),
            (
                w("yyyy"),
                vec![
                    t(-mu.clone(), "yy"),
                    t(mu.clone(), "yyaa"),
                    t(-mu2h.clone(), ""),
                    t(mu2h, "aa"),
                ],
            ),
        ],
    }
}

/// Normal-form basis `xⁱyʲaᵏbˡ`.
pub fn normal_words() -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..2 {
                    let mut v = Vec::new();
                    v.extend(std::iter::repeat_n(b'x', i));
                    v.extend(std::iter::repeat_n(b'y', j));
                    v.extend(std::iter::repeat_n(b'a', k));
                    v.extend(std::iter::repeat_n(b'b', l));
                    out.push(v);
                }
            }
        }
    }
    out
}

/// A Hopf algebra given by generators, oriented relations and generator
/// coproducts.
pub struct PresentedHopf {
    pub family: Family,
    pub mu: Scalar,
    pub rules: RewriteSystem,
    pub basis: Vec<Word>,
    pub critical_pairs: Vec<CriticalPair>,
    pub hopf: FinHopf,
}

impl PresentedHopf {
    pub fn index(&self, w: &[u8]) -> Option<usize> {
        self.basis.iter().position(|b| b == w)
    }

    /// Element given by a word (reduced to normal form).
    pub fn word(&self, s: &str) -> Vector {
        let p = self.rules.normal_form(s.as_bytes()).expect("normal form");
        self.from_poly(&p)
    }

    pub fn from_poly(&self, p: &Poly) -> Vector {
        let mut v = vec![Scalar::zero(); self.basis.len()];
        for (w, c) in p {
            let i = self.index(w).expect("normal word");
            v[i] += c;
        }
        v
    }

    /// Linear combination of words.
    pub fn elem(&self, terms: &[(Scalar, &str)]) -> Vector {
        let mut v = vec![Scalar::zero(); self.basis.len()];
        for (c, s) in terms {
            let e = self.word(s);
            for (i, x) in e.iter().enumerate() {
                if !x.is_zero() {
                    v[i] += &(c * x);
                }
            }
        }
        v
    }
}

fn generator_coproducts(family: Family) -> [(u8, Vec<(Scalar, &'static str, &'static str)>); 4] {
    let x = xi();
    let one = Scalar::one;
    let half = Scalar::frac(1, 2);
    let (dx, dy) = match family {
        Family::A31 => (
            vec![(one(), "x", ""), (one(), "aaa", "x"), (&x - &one(), "aab", "y")],
            vec![(one(), "y", ""), (one(), "a", "y"), (-&(&half * &(&x + &one())), "b", "x")],
        ),
        Family::A33 => (
            vec![(one(), "x", ""), (one(), "a", "x"), (&x + &one(), "b", "y")],
            vec![(one(), "y", ""), (one(), "aaa", "y"), (&half * &(&one() - &x), "aab", "x")],
        ),
    };
    [
        (b'a', vec![(one(), "a", "a"), (one(), "b", "aab")]),
        (b'b', vec![(one(), "a", "b"), (one(), "b", "aaa")]),
        (b'x', dx),
        (b'y', dy),
    ]
}

/// Builds `𝔄₃,₁(μ)` or `𝔄₃,₃(μ)` on the normal-form basis.
pub fn build_lifting(family: Family, mu: &Scalar) -> Result<PresentedHopf, BosonError> {
    let rules = lifting_rules(mu);
    let critical_pairs = rules.critical_pairs()?;
    if let Some(bad) = critical_pairs.iter().find(|p| !p.resolves) {
        return Err(BosonError::NotConfluent(bad.overlap.clone()));
    }
    let basis = normal_words();
    let n = basis.len();
    let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let to_vec = |p: &Poly| -> Result<Vec<(usize, Scalar)>, BosonError> {
        p.iter()
            .map(|(w, c)| {
                index
                    .get(w)
                    .map(|i| (*i, c.clone()))
                    .ok_or_else(|| BosonError::NoNormalForm(show_word(w)))
            })
            .collect()
    };

    let mult_rows: Vec<Result<Vec<Sparse>, BosonError>> = par::map_range(n, |i| {
        (0..n)
            .map(|j| {
                let mut wd = basis[i].clone();
                wd.extend(&basis[j]);
                to_vec(&rules.normal_form(&wd)?)
            })
            .collect()
    });
    let mult: Vec<Vec<Sparse>> = mult_rows.into_iter().collect::<Result<_, _>>()?;

    let mut counit = vec![Scalar::zero(); n];
    for (i, wd) in basis.iter().enumerate() {
        if wd.iter().all(|&l| l == b'a') {
            counit[i] = Scalar::one();
        }
    }
    let unit = unit_vec(n, index[&Vec::new()]);

    // algebra first, then Δ of words as products of generator coproducts
    let names: Vec<String> = basis.iter().map(|w| show_word(w)).collect();
    let alg = FinHopf::new(names.clone(), mult.clone(), unit.clone(), vec![Vec::new(); n], counit.clone(), None)?;
    let word_vec = |s: &str| -> Result<Vector, BosonError> {
        let p = rules.normal_form(s.as_bytes())?;
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in to_vec(&p)? {
            v[i] += &c;
        }
        Ok(v)
    };
    let mut gen_delta: HashMap<u8, Tensor2> = HashMap::new();
    for (g, terms) in generator_coproducts(family) {
        let mut tsum = Tensor2::new();
        for (c, l, r) in terms {
            for (key, v) in alg.pure_tensor(&word_vec(l)?, &word_vec(r)?) {
                tensor_add(&mut tsum, key, &c * &v);
            }
        }
        gen_delta.insert(g, tsum);
    }
    let one_one: Tensor2 = alg.pure_tensor(&unit, &unit);
    let comult: Vec<Vec<(usize, usize, Scalar)>> = par::map_range(n, |i| {
        let mut acc = one_one.clone();
        for l in &basis[i] {
            acc = alg.mul2(&acc, &gen_delta[l]);
        }
        let mut v: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((p, q), c)| (p, q, c))
            .collect();
        v.sort_by_key(|x| (x.0, x.1));
        v
    });
    let gens: Vec<Vector> = ["x", "y", "a", "b"].iter().map(|s| word_vec(s)).collect::<Result<_, _>>()?;
    let mut hopf = FinHopf::new(names, mult, unit, comult, counit, None)?.with_generators(gens);
    hopf.antipode = Some(compute_antipode(&hopf)?);
    Ok(PresentedHopf {
        family,
        mu: mu.clone(),
        rules,
        basis,
        critical_pairs,
        hopf,
    })
}

pub fn build_a31(mu: &Scalar) -> Result<PresentedHopf, BosonError> {
    build_lifting(Family::A31, mu)
}

pub fn build_a33(mu: &Scalar) -> Result<PresentedHopf, BosonError> {
    build_lifting(Family::A33, mu)
}

/// Every defining relation of the lifting, as `lhs − rhs` evaluated in the
/// built algebra.
pub fn defining_relations(p: &PresentedHopf) -> Vec<(String, Vector)> {
    let x = xi();
    let mu = &p.mu;
    let one = Scalar::one;
    let m1 = || -one();
    let mu2h = &(mu * mu) * &Scalar::frac(1, 2);
    let rels: Vec<(&str, Vec<(Scalar, &str)>)> = vec![
        ("ab = ξba", vec![(one(), "ab"), (-x.clone(), "ba")]),
        ("ac = ξca", vec![(one(), "aaab"), (-x.clone(), "aaba")]),
        ("cb = 0", vec![(one(), "aabb")]),
        ("bc = 0", vec![(one(), "baab")]),
        ("cd = ξdc", vec![(one(), "aabaaa"), (-x.clone(), "aaaaab")]),
        ("bd = ξdb", vec![(one(), "baaa"), (-x.clone(), "aaab")]),
        ("ad = 1", vec![(one(), "aaaa"), (m1(), "")]),
        ("b² = 0", vec![(one(), "bb")]),
        ("c² = 0", vec![(one(), "aabaab")]),
        ("a⁴ = 1", vec![(one(), "aaaa"), (m1(), "")]),
        ("ax = −ξxa", vec![(one(), "ax"), (x.clone(), "xa")]),
        ("ay = −ya − xc", vec![(one(), "ay"), (one(), "ya"), (one(), "xaab")]),
        ("bx = −ξxb", vec![(one(), "bx"), (x.clone(), "xb")]),
        ("by = −yb − xd", vec![(one(), "by"), (one(), "yb"), (one(), "xaaa")]),
        ("cx = ξxc", vec![(one(), "aabx"), (-x.clone(), "xaab")]),
        ("cy = −yc + xa", vec![(one(), "aaby"), (one(), "yaab"), (m1(), "xa")]),
        ("dx = ξxd", vec![(one(), "aaax"), (-x.clone(), "xaaa")]),
        ("dy = −yd + xb", vec![(one(), "aaay"), (one(), "yaaa"), (m1(), "xb")]),
        (
            "x² − 2y² = μ(1 − a²)",
            vec![(one(), "xx"), (Scalar::from_int(-2), "yy"), (-mu.clone(), ""), (mu.clone(), "aa")],
        ),
        ("xy + yx = ξμac", vec![(one(), "xy"), (one(), "yx"), (-(&x * mu), "aaab")]),
        (
            "y⁴ = −μy²(1 − a²) − (μ²/2)(1 − a²)",
            vec![
                (one(), "yyyy"),
                (mu.clone(), "yy"),
                (-mu.clone(), "yyaa"),
                (mu2h.clone(), ""),
                (-mu2h, "aa"),
            ],
        ),
    ];
    rels.into_iter().map(|(name, terms)| (name.to_string(), p.elem(&terms))).collect()
}

/// `S(x)`, `S(y)` from the definition of the family.
pub fn stated_antipode(p: &PresentedHopf) -> [(String, Vector, Vector); 2] {
    let x = xi();
    let one = Scalar::one;
    let half = Scalar::frac(1, 2);
    match p.family {
        Family::A31 => [
            (
                "S(x) = −ax − (1+ξ)cy".into(),
                p.word("x"),
                p.elem(&[(-one(), "ax"), (-&(&one() + &x), "aaby")]),
            ),
            (
                "S(y) = −dy + ½(ξ−1)bx".into(),
                p.word("y"),
                p.elem(&[(-one(), "aaay"), (&half * &(&x - &one()), "bx")]),
            ),
        ],
        Family::A33 => [
            (
                "S(x) = −dx − (ξ−1)by".into(),
                p.word("x"),
                p.elem(&[(-one(), "aaax"), (-&(&x - &one()), "by")]),
            ),
            (
                "S(y) = −ay + ½(1+ξ)cx".into(),
                p.word("y"),
                p.elem(&[(-one(), "ay"), (&half * &(&one() + &x), "aabx")]),
            ),
        ],
    }
}

// ---------------------------------------------------------------------------
// Representations W_λ and U_λ

fn blocks_to_matrix(blocks: &[Vec<Matrix>]) -> Matrix {
    let rows: Vec<Matrix> = blocks
        .iter()
        .map(|r| r[1..].iter().fold(r[0].clone(), |acc, m| acc.hcat(m).expect("rows")))
        .collect();
    rows[1..].iter().fold(rows[0].clone(), |acc, m| acc.vcat(m).expect("cols"))
}

fn sm(rows: &[&[Scalar]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

/// `ρ(x), ρ(y), ρ(a), ρ(b)` on the 8-dimensional `W_λ`.
pub fn w_lambda(lambda: &Scalar, mu: &Scalar) -> [(&'static str, Matrix); 4] {
    let x = xi();
    let z = Scalar::zero;
    let one = Scalar::one;
    let l = lambda.clone();
    let l2 = lambda.pow(2);
    let l3 = lambda.pow(3);
    let mu2 = mu * mu;
    let half = Scalar::frac(1, 2);
    let l3ml = &l3 - &l;
    let lml3 = &l - &l3;
    let ml = -l.clone();
    let a = sm(&[
        &[l.clone(), z(), mu * &l3ml, z()],
        &[z(), ml.clone(), z(), mu * &lml3],
        &[z(), z(), ml.clone(), z()],
        &[z(), z(), z(), l.clone()],
    ]);
    let b12 = sm(&[
        &[z(), &(&x * mu) * &l3ml, z(), &(&x * &mu2) * &lml3],
        &[z(), z(), z(), z()],
        &[z(), &(&x * &Scalar::from_int(2)) * &l3, z(), &(&x * mu) * &lml3],
        &[z(), z(), z(), z()],
    ]);
    let b21 = sm(&[
        &[z(), -l3.clone(), z(), mu * &l3ml],
        &[z(), z(), z(), z()],
        &[z(), z(), z(), l3.clone()],
        &[z(), z(), z(), z()],
    ]);
    let om = &one() - &l2;
    let mo = &l2 - &one();
    let xb = sm(&[
        &[mu * &om, z(), &mu2 * &mo, z()],
        &[z(), mu * &om, z(), &mu2 * &mo],
        &[Scalar::from_int(2), z(), mu * &mo, z()],
        &[z(), Scalar::from_int(2), z(), mu * &mo],
    ]);
    let y11 = sm(&[
        &[z(), z(), z(), &(&half * &mu2) * &mo],
        &[one(), z(), z(), z()],
        &[z(), one(), z(), mu * &mo],
        &[z(), z(), one(), z()],
    ]);
    let y22 = sm(&[
        &[z(), mu * &l2, z(), &(&half * &mu2) * &om],
        &[-one(), z(), z(), z()],
        &[z(), -one(), z(), mu.clone()],
        &[z(), z(), -one(), z()],
    ]);
    let o4 = Matrix::zeros(4, 4);
    let i4 = Matrix::identity(4);
    [
        ("x", blocks_to_matrix(&[vec![o4.clone(), xb], vec![i4, o4.clone()]])),
        ("y", blocks_to_matrix(&[vec![y11, o4.clone()], vec![o4.clone(), y22]])),
        ("a", blocks_to_matrix(&[vec![a.clone(), o4.clone()], vec![o4.clone(), a.scale(&-x.clone())]])),
        ("b", blocks_to_matrix(&[vec![o4.clone(), b12], vec![b21, o4]])),
    ]
}

/// `ρ(x), ρ(y), ρ(a), ρ(b)` on the 16-dimensional `U_λ`.
pub fn u_lambda(lambda: &Scalar, mu: &Scalar) -> [(&'static str, Matrix); 4] {
    let x = xi();
    let z = Scalar::zero;
    let l = lambda.clone();
    let a = Matrix::diag(&[l.clone(), -&(&x * &l)]);
    let b = sm(&[&[z(), lambda.pow(2)], &[z(), z()]]);
    let c = sm(&[&[z(), Scalar::one()], &[z(), z()]]);
    let d = Matrix::diag(&[lambda.pow(3), &x * &lambda.pow(3)]);
    let i2 = Matrix::identity(2);
    let o = Matrix::zeros(2, 2);
    let mu2 = mu * mu;
    let xm = &x * mu;
    let xmu2 = &x * &mu2;
    let two_x = &x * &Scalar::from_int(2);
    let half_mu2 = &mu2 * &Scalar::frac(1, 2);
    let sub = |p: &Matrix, q: &Matrix| p.sub(q).expect("shape");
    let add = |p: &Matrix, q: &Matrix| p.add(q).expect("shape");
    let a2 = a.dot(&a);
    let ac = a.dot(&c);
    let ab = a.dot(&b);
    let d_a = sub(&d, &a);
    let a_d = sub(&a, &d);

    let ra = blocks_to_matrix(&[
        vec![a.clone(), o.clone(), d_a.scale(mu), o.clone(), o.clone(), sub(&c, &b).scale(&xm), o.clone(), o.clone()],
        vec![o.clone(), a.scale(&-Scalar::one()), o.clone(), a_d.scale(mu), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), a.scale(&-Scalar::one()), o.clone(), o.clone(), c.scale(&two_x), o.clone(), add(&b, &c).scale(&-xm.clone())],
        vec![o.clone(), o.clone(), o.clone(), a.clone(), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), c.scale(&-Scalar::one()), o.clone(), c.scale(mu), a.scale(&-x.clone()), o.clone(), a_d.scale(&xm), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), a.scale(&x), o.clone(), d_a.scale(&xm)],
        vec![o.clone(), o.clone(), o.clone(), c.clone(), o.clone(), o.clone(), a.scale(&x), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), a.scale(&-x.clone())],
    ]);
    let rb = blocks_to_matrix(&[
        vec![b.clone(), o.clone(), b.scale(&-mu.clone()), o.clone(), o.clone(), d_a.scale(&xm), o.clone(), a_d.scale(&xmu2)],
        vec![o.clone(), b.scale(&-Scalar::one()), o.clone(), b.scale(mu), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), b.scale(&-Scalar::one()), o.clone(), o.clone(), d.scale(&two_x), o.clone(), a_d.scale(&xm)],
        vec![o.clone(), o.clone(), o.clone(), b.clone(), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), d.scale(&-Scalar::one()), o.clone(), d_a.scale(mu), b.scale(&-x.clone()), o.clone(), b.scale(&xm), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), b.scale(&x), o.clone(), b.scale(&-xm.clone())],
        vec![o.clone(), o.clone(), o.clone(), d.clone(), o.clone(), o.clone(), b.scale(&x), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), b.scale(&-x.clone())],
    ]);
    let i_a2 = sub(&i2, &a2);
    let a2_i = sub(&a2, &i2);
    let xblock = blocks_to_matrix(&[
        vec![i_a2.scale(mu), o.clone(), a2_i.scale(&mu2), o.clone()],
        vec![o.clone(), i_a2.scale(mu), o.clone(), a2_i.scale(&mu2)],
        vec![i2.scale(&Scalar::from_int(2)), o.clone(), a2_i.scale(mu), o.clone()],
        vec![o.clone(), i2.scale(&Scalar::from_int(2)), o.clone(), a2_i.scale(mu)],
    ]);
    let o8 = Matrix::zeros(8, 8);
    let rx = blocks_to_matrix(&[vec![o8.clone(), xblock], vec![Matrix::identity(8), o8]]);
    let mi = i2.scale(&-Scalar::one());
    let ry = blocks_to_matrix(&[
        vec![o.clone(), o.clone(), o.clone(), a2_i.scale(&half_mu2), ac.scale(&xm), o.clone(), ab.scale(&-xmu2.clone()), o.clone()],
        vec![i2.clone(), o.clone(), o.clone(), o.clone(), o.clone(), ac.scale(&xm), o.clone(), ab.scale(&-xmu2.clone())],
        vec![o.clone(), i2.clone(), o.clone(), a2_i.scale(mu), o.clone(), o.clone(), ac.scale(&xm), o.clone()],
        vec![o.clone(), o.clone(), i2.clone(), o.clone(), o.clone(), o.clone(), o.clone(), ac.scale(&xm)],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), a2.scale(mu), o.clone(), i_a2.scale(&half_mu2)],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), mi.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), mi.clone(), o.clone(), i2.scale(mu)],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), o.clone(), mi, o.clone()],
    ]);
    [("x", rx), ("y", ry), ("a", ra), ("b", rb)]
}

/// Matrix of a word in the generators.
pub fn eval_word(mats: &[(&str, Matrix)], wd: &[u8]) -> Matrix {
    let n = mats[0].1.rows();
    wd.iter().fold(Matrix::identity(n), |acc, l| {
        let key = (*l as char).to_string();
        let m = &mats.iter().find(|(k, _)| *k == key).expect("generator").1;
        acc.dot(m)
    })
}

/// Residual of every defining relation on the given matrices.
pub fn relation_residuals(mats: &[(&str, Matrix)], mu: &Scalar) -> Vec<(String, bool)> {
    let n = mats[0].1.rows();
    let x = xi();
    let one = Scalar::one;
    let mu2h = &(mu * mu) * &Scalar::frac(1, 2);
    let lin = |terms: &[(Scalar, &str)]| -> Matrix {
        let mut acc = Matrix::zeros(n, n);
        for (c, s) in terms {
            acc.axpy(c, &eval_word(mats, s.as_bytes()));
        }
        acc
    };
    let rels: Vec<(&str, Vec<(Scalar, &str)>)> = vec![
        ("a⁴ = 1", vec![(one(), "aaaa"), (-one(), "")]),
        ("b² = 0", vec![(one(), "bb")]),
        ("ab = ξba", vec![(one(), "ab"), (-x.clone(), "ba")]),
        ("ac = ξca", vec![(one(), "aaab"), (-x.clone(), "aaba")]),
        ("bc = cb = 0", vec![(one(), "baab"), (one(), "aabb")]),
        ("cd = ξdc", vec![(one(), "aabaaa"), (-x.clone(), "aaaaab")]),
        ("bd = ξdb", vec![(one(), "baaa"), (-x.clone(), "aaab")]),
        ("ax = −ξxa", vec![(one(), "ax"), (x.clone(), "xa")]),
        ("ay = −ya − xc", vec![(one(), "ay"), (one(), "ya"), (one(), "xaab")]),
        ("bx = −ξxb", vec![(one(), "bx"), (x.clone(), "xb")]),
        ("by = −yb − xd", vec![(one(), "by"), (one(), "yb"), (one(), "xaaa")]),
        ("cx = ξxc", vec![(one(), "aabx"), (-x.clone(), "xaab")]),
        ("cy = −yc + xa", vec![(one(), "aaby"), (one(), "yaab"), (-one(), "xa")]),
        ("dx = ξxd", vec![(one(), "aaax"), (-x.clone(), "xaaa")]),
        ("dy = −yd + xb", vec![(one(), "aaay"), (one(), "yaaa"), (-one(), "xb")]),
        (
            "x² − 2y² = μ(1 − a²)",
            vec![(one(), "xx"), (Scalar::from_int(-2), "yy"), (-mu.clone(), ""), (mu.clone(), "aa")],
        ),
        ("xy + yx = ξμac", vec![(one(), "xy"), (one(), "yx"), (-(&x * mu), "aaab")]),
        (
            "y⁴ = −μy²(1 − a²) − (μ²/2)(1 − a²)",
            vec![
                (one(), "yyyy"),
                (mu.clone(), "yy"),
                (-mu.clone(), "yyaa"),
                (mu2h.clone(), ""),
                (-mu2h, "aa"),
            ],
        ),
    ];
    rels.into_iter()
        .map(|(name, terms)| (name.to_string(), lin(&terms).is_zero()))
        .collect()
}

/// `W_λ` or `U_λ` as a module over the built lifting.
pub fn representation_module(p: &PresentedHopf, name: &str, mats: &[(&'static str, Matrix)]) -> Result<AModule, BosonError> {
    let gens: Vec<(String, Vector)> = ["x", "y", "a", "b"].iter().map(|g| (g.to_string(), p.word(g))).collect();
    let alg = Arc::new(GenAlgebra::new(&format!("{}({})", p.family, p.mu.pretty()), p.hopf.clone(), gens)?);
    let dim = mats[0].1.rows();
    Ok(AModule::from_generators(&alg, name, dim, mats)?)
}

/// The four fourth roots of unity.
pub fn fourth_roots() -> [Scalar; 4] {
    [Scalar::one(), xi(), -Scalar::one(), -xi()]
}

/// Rank of the 64 normal words evaluated on `⊕_λ (W_λ ⊕ U_λ)`, computed
/// from the representation matrices alone.
pub fn independence_rank(mu: &Scalar) -> usize {
    let reps: Vec<[(&'static str, Matrix); 4]> = fourth_roots()
        .iter()
        .flat_map(|l| [w_lambda(l, mu), u_lambda(l, mu)])
        .collect();
    let rows: Vec<Vector> = par::map_slice(&normal_words(), |wd| {
        let mut row = Vec::new();
        for r in &reps {
            row.extend(eval_word(r, wd).entries().iter().cloned());
        }
        row
    });
    let width = rows[0].len();
    span_rank(&rows, width)
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftingReport {
    pub family: Family,
    pub mu: String,
    pub checks: AxiomReport,
    pub filtration_dims: Vec<usize>,
    pub graded_dims: Vec<usize>,
    pub independence_rank: usize,
}

impl LiftingReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

/// Confluence, Hopf axioms, coradical, standard filtration and associated
/// graded object of a lifting, plus the representation certificate.
pub fn lifting_verification(family: Family, mu: &Scalar) -> Result<LiftingReport, BosonError> {
    let p = build_lifting(family, mu)?;
    let h = &p.hopf;
    let k = k_algebra();
    let mut rep = AxiomReport::default();
    let unresolved = p.critical_pairs.iter().filter(|c| !c.resolves).count();
    rep.push(
        "confluence",
        unresolved == 0,
        format!("{} critical pairs, {} unresolved", p.critical_pairs.len(), unresolved),
    );
    for (name, v) in defining_relations(&p) {
        rep.push(&format!("relation {name}"), v.iter().all(Scalar::is_zero), "");
    }
    let hv = verify_hopf(h);
    rep.push("Hopf axioms", hv.passed(), hv.failures().join("; "));
    rep.push("dimension 64", h.dim == 64, format!("{}", h.dim));
    let s = h.antipode.as_ref().expect("antipode");
    for (name, arg, expect) in stated_antipode(&p) {
        rep.push(&name, s.apply(&arg) == expect, "");
    }

    let h0 = generated_subalgebra(h, &coradical(h));
    rep.push("Hopf coradical has dim 8", h0.dim() == 8, format!("{}", h0.dim()));
    let images: Vec<(Vector, Vector)> = k_words()
        .iter()
        .filter(|(n, _)| ["a", "b", "c", "d"].contains(n))
        .map(|(n, wd)| (k.named(n), p.word(&show_word(wd))))
        .collect();
    let (mc, m) = hopf_map_check(k, h, &images)?;
    let image = crate::hopf::Subspace::new(h.dim, &m.col_vecs());
    rep.push(
        "coradical ≅ K",
        mc.is_hopf_map() && mc.rank == 8 && image == h0,
        mc.detail,
    );

    let filt = standard_filtration(h)?;
    let filtration_dims: Vec<usize> = filt.iter().map(|s| s.dim()).collect();
    rep.push(
        "standard filtration",
        filtration_dims == vec![8, 24, 40, 56, 64],
        format!("{filtration_dims:?}"),
    );
    let (gr, graded_dims) = graded_from_filtration(h, &filt)?;
    let gv = verify_hopf(&gr);
    rep.push("gr Hopf axioms", gv.passed(), gv.failures().join("; "));
    rep.push(
        "gr dims",
        graded_dims == vec![8, 16, 16, 16, 8],
        format!("{graded_dims:?}"),
    );
    let ind = independence_rank(mu);
    rep.push("independence certificate", ind == 64, format!("rank {ind}"));
    Ok(LiftingReport {
        family,
        mu: mu.pretty(),
        checks: rep,
        filtration_dims,
        graded_dims,
        independence_rank: ind,
    })
}

/// Generator correspondence `x ↦ e₁#1, y ↦ e₂#1, a ↦ 1#a, b ↦ 1#b` from
/// the undeformed lifting to the bosonization; returns the map check and
/// whether the map is bijective.
pub fn compare_with_bosonization(p: &PresentedHopf, bz: &Bosonization) -> Result<(bool, Matrix), BosonError> {
    let k = k_algebra();
    let images = vec![
        (p.word("x"), bz.generator(0)),
        (p.word("y"), bz.generator(1)),
        (p.word("a"), bz.from_k(&k.named("a"))),
        (p.word("b"), bz.from_k(&k.named("b"))),
    ];
    let (mc, m) = hopf_map_check(&p.hopf, &bz.hopf, &images)?;
    Ok((mc.is_hopf_map() && m.rank() == p.hopf.dim && bz.hopf.dim == p.hopf.dim, m))
}

// ---------------------------------------------------------------------------
// No-deformation ingredients

#[derive(Clone, Debug, Serialize)]
pub struct NoDeformationReport {
    pub checks: AxiomReport,
    pub primitive_dim: usize,
    pub skew_primitive_dim: usize,
    /// `[a, μ₁(1−a²) + μ₂ab]` for `(μ₁, μ₂) = (1, 0)` and `(0, 1)`.
    pub commutator_a: [Vector; 2],
    pub commutator_b: [Vector; 2],
}

impl NoDeformationReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

/// For `V ∈ {k_χ, k_{χ³}, V_{2,1}, V_{2,3}}`: the skew-primitive spaces of K,
/// the commutators that force a deformation of `x² = 0` to vanish, and the
/// relations of the bosonization that make them vanish.
pub fn no_deformation_check(bz: &Bosonization) -> NoDeformationReport {
    let k = k_algebra();
    let h = &bz.hopf;
    let x = xi();
    let mut rep = AxiomReport::default();
    let one = k.unit.clone();
    let a2 = k.named("a^2");
    let prim = skew_primitives(k, &one, &one);
    let skew = skew_primitives(k, &one, &a2);
    rep.push("P(K) = 0", prim.dim() == 0, format!("dim {}", prim.dim()));
    let expect = crate::hopf::Subspace::new(8, &[k.elem(&[(Scalar::one(), "1"), (-Scalar::one(), "a^2")]), k.named("ab")]);
    rep.push("P_{1,a²}(K) = span{1 − a², ab}", skew == expect, format!("dim {}", skew.dim()));

    let cands = [
        k.elem(&[(Scalar::one(), "1"), (-Scalar::one(), "a^2")]),
        k.named("ab"),
    ];
    let comm = |g: &Vector, v: &Vector| -> Vector {
        let l = k.mul(g, v);
        let r = k.mul(v, g);
        l.iter().zip(&r).map(|(p, q)| p - q).collect()
    };
    let ca = [comm(&k.named("a"), &cands[0]), comm(&k.named("a"), &cands[1])];
    let cb = [comm(&k.named("b"), &cands[0]), comm(&k.named("b"), &cands[1])];
    let c = k.named("c");
    let zero = k.zero();
    rep.push(
        "[a, μ₁(1−a²) + μ₂ab] = μ₂(1+ξ)c",
        ca[0] == zero && ca[1] == c.iter().map(|v| v * &(&Scalar::one() + &x)).collect::<Vector>(),
        "",
    );
    rep.push(
        "[b, μ₁(1−a²) + μ₂ab] = 2μ₁c",
        cb[0] == c.iter().map(|v| v * &Scalar::from_int(2)).collect::<Vector>() && cb[1] == zero,
        "",
    );
    // (μ₁, μ₂) ↦ ([a, ·], [b, ·]) is injective
    let cols: Vec<Vector> = (0..2).map(|i| [ca[i].clone(), cb[i].clone()].concat()).collect();
    rep.push("commutators force μ₁ = μ₂ = 0", span_rank(&cols, 16) == 2, "");

    // in 𝔅(V)#K, x² commutes with a and b
    let xg = bz.generator(0);
    let x2 = h.mul(&xg, &xg);
    let ai = bz.from_k(&k.named("a"));
    let bi = bz.from_k(&k.named("b"));
    let commutes = |g: &Vector| h.mul(g, &x2) == h.mul(&x2, g);
    rep.push("a, b commute with x²", commutes(&ai) && commutes(&bi), "");
    // Δ(x)² has no mixed term: x·a² + a²·x = 0 when δ(x) = a² ⊗ x
    if bz.nichols.yd.dim == 1 {
        let a2i = bz.from_k(&a2);
        let s: Vector = h.mul(&xg, &a2i).iter().zip(&h.mul(&a2i, &xg)).map(|(p, q)| p + q).collect();
        rep.push("x² primitive in T(V)#K", s.iter().all(Scalar::is_zero), "");
    }
    NoDeformationReport {
        checks: rep,
        primitive_dim: prim.dim(),
        skew_primitive_dim: skew.dim(),
        commutator_a: ca,
        commutator_b: cb,
    }
}

/// Index of a K basis element by name.
pub fn k_basis_index(name: &str) -> usize {
    k_index(name)
}
