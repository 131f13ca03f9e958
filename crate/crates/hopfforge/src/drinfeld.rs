//! The Drinfeld double `D(H^cop) = (H^cop)* ⋈ H^cop`.
//!
//! Basis element `e^i ⋈ e_j` has index `i·dim + j`, where `e^i` runs over the
//! dual basis of `H*`.

use crate::cyclo::{sqrt2, xi, Scalar};
use crate::hopf::{
    build_a4pp, build_k, cop, dual, phi_x, alpha, span_growth, verify_hopf, AxiomReport, FinHopf,
    HopfError, Sparse, Tensor2,
};
use crate::linalg::{is_zero_vec, unit_vec, vec_add, vec_scale, vec_sub, Matrix, Vector};
use crate::par;
use std::collections::HashMap;

type Triple = Vec<(usize, usize, usize, Scalar)>;

/// Iterated comultiplication `Δ²(e_i) = Σ c·e_p⊗e_q⊗e_r` for every basis element.
pub fn delta2_table(h: &FinHopf) -> Vec<Triple> {
    par::map_range(h.dim, |i| {
        let mut acc: HashMap<(usize, usize, usize), Scalar> = HashMap::new();
        for (a, b, c) in h.comult_basis(i) {
            for (p, q, d) in h.comult_basis(*a) {
                *acc.entry((*p, *q, *b)).or_insert_with(Scalar::zero) += &(c * d);
            }
        }
        let mut v: Triple = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((p, q, r), c)| (p, q, r, c))
            .collect();
        v.sort_by_key(|t| (t.0, t.1, t.2));
        v
    })
}

fn pairing(f: &[Scalar], h: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for (a, b) in f.iter().zip(h) {
        if !a.is_zero() && !b.is_zero() {
            s += &(a * b);
        }
    }
    s
}

/// The two actions defining the double of a Hopf algebra `H` (here `H = K^cop`).
pub struct Hits {
    pub h: FinHopf,
    pub hd: FinHopf,
    s_inv: Matrix,
    sd_inv: Matrix,
    d2: Vec<Triple>,
    d2d: Vec<Triple>,
}

impl Hits {
    pub fn new(h: FinHopf) -> Result<Self, HopfError> {
        let s = h
            .antipode
            .clone()
            .ok_or_else(|| HopfError::NoAntipode("double needs an antipode".into()))?;
        let s_inv = s
            .inverse()
            .map_err(|_| HopfError::NoAntipode("antipode is not invertible".into()))?;
        let hd = dual(&h);
        let sd_inv = s_inv.transpose();
        let d2 = delta2_table(&h);
        let d2d = delta2_table(&hd);
        Ok(Hits {
            h,
            hd,
            s_inv,
            sd_inv,
            d2,
            d2d,
        })
    }

    /// `h ↠ f = ⟨f₃ S⁻¹(f₁), h⟩ f₂`, an element of `H*`.
    pub fn hit_left(&self, h: &[Scalar], f: &[Scalar]) -> Vector {
        let mut out = self.hd.zero();
        for (i, fi) in f.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (p, q, r, c) in &self.d2d[i] {
                let prod = self.hd.mul(&self.hd.e(*r), &self.sd_inv.col(*p));
                let w = pairing(&prod, h);
                if !w.is_zero() {
                    out[*q] += &(&(fi * c) * &w);
                }
            }
        }
        out
    }

    /// `h ↞ f = ⟨f, S⁻¹(h₃)h₁⟩ h₂`, an element of `H`.
    pub fn hit_right(&self, h: &[Scalar], f: &[Scalar]) -> Vector {
        let mut out = self.h.zero();
        for (i, hi) in h.iter().enumerate() {
            if hi.is_zero() {
                continue;
            }
            for (p, q, r, c) in &self.d2[i] {
                let prod = self.h.mul(&self.s_inv.col(*r), &self.h.e(*p));
                let w = pairing(f, &prod);
                if !w.is_zero() {
                    out[*q] += &(&(hi * c) * &w);
                }
            }
        }
        out
    }
}

/// Double of `H` with embeddings of its two tensor factors.
pub struct DoubleAlgebra {
    pub underlying: FinHopf,
    pub hits: Hits,
    /// `left_factor_embedding[i]` is the index of `e^i ⋈ 1`.
    pub left_factor_embedding: Vec<usize>,
    /// `right_factor_embedding[j]` is the index of `ε ⋈ e_j`.
    pub right_factor_embedding: Vec<usize>,
}

impl DoubleAlgebra {
    pub fn base_dim(&self) -> usize {
        self.hits.h.dim
    }

    /// `f ⋈ h` as an element of the double.
    pub fn pair(&self, f: &[Scalar], h: &[Scalar]) -> Vector {
        let n = self.base_dim();
        let mut v = vec![Scalar::zero(); n * n];
        for (i, a) in f.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in h.iter().enumerate() {
                if !b.is_zero() {
                    v[i * n + j] = a * b;
                }
            }
        }
        v
    }

    /// `f ⋈ 1`.
    pub fn embed_left(&self, f: &[Scalar]) -> Vector {
        self.pair(f, &self.hits.h.unit)
    }

    /// `ε ⋈ h`.
    pub fn embed_right(&self, h: &[Scalar]) -> Vector {
        self.pair(&self.hits.h.counit, h)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        self.underlying.mul(u, v)
    }
}

/// Multiplication of basis elements by the double formula
/// `(f⋈h)(g⋈k) = f(h₁ ↠ g₂) ⋈ (h₂ ↞ g₁)k`.
fn double_product(hits: &Hits, left: &[Vec<Vector>], right: &[Vec<Vector>], a: usize, b: usize) -> Sparse {
    let h = &hits.h;
    let hd = &hits.hd;
    let n = h.dim;
    let (f, hh) = (a / n, a % n);
    let (g, k) = (b / n, b % n);
    let mut acc = vec![Scalar::zero(); n * n];
    for (p, q, c1) in h.comult_basis(hh) {
        for (r, s, c2) in hd.comult_basis(g) {
            let lf = hd.mul(&hd.e(f), &left[*p][*s]);
            if is_zero_vec(&lf) {
                continue;
            }
            let rk = h.mul(&right[*q][*r], &h.e(k));
            let c = c1 * c2;
            for (i, x) in lf.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let cx = &c * x;
                for (j, y) in rk.iter().enumerate() {
                    if !y.is_zero() {
                        acc[i * n + j] += &(&cx * y);
                    }
                }
            }
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Builds `D(H^cop)` for a Hopf algebra `H` with invertible antipode.
///
/// Coproduct `Δ(f⋈h) = (f₂⋈h₁) ⊗ (f₁⋈h₂)` and antipode
/// `S(f⋈h) = (ε⋈S(h))(S*⁻¹(f)⋈1)`, with the Hopf structure of `H^cop`.
pub fn double_cop(base: &FinHopf) -> Result<DoubleAlgebra, HopfError> {
    let report = verify_hopf(base);
    if !report.passed() {
        return Err(HopfError::Malformed(report.failures().join("; ")));
    }
    let hits = Hits::new(cop(base))?;
    let h = &hits.h;
    let hd = &hits.hd;
    let n = h.dim;
    let left: Vec<Vec<Vector>> = par::map_range(n, |p| {
        (0..n).map(|s| hits.hit_left(&h.e(p), &hd.e(s))).collect()
    });
    let right: Vec<Vec<Vector>> = par::map_range(n, |q| {
        (0..n).map(|r| hits.hit_right(&h.e(q), &hd.e(r))).collect()
    });
    let flat: Vec<Sparse> = par::map_range(n * n * n * n, |ab| {
        double_product(&hits, &left, &right, ab / (n * n), ab % (n * n))
    });
    let mut mult = vec![Vec::with_capacity(n * n); n * n];
    for (ab, e) in flat.into_iter().enumerate() {
        mult[ab / (n * n)].push(e);
    }
    let idx = |i: usize, j: usize| i * n + j;
    let comult: Vec<Vec<(usize, usize, Scalar)>> = (0..n * n)
        .map(|a| {
            let (f, k) = (a / n, a % n);
            let mut t = Vec::new();
            for (f1, f2, c1) in hd.comult_basis(f) {
                for (h1, h2, c2) in h.comult_basis(k) {
                    t.push((idx(*f2, *h1), idx(*f1, *h2), c1 * c2));
                }
            }
            t
        })
        .collect();
    let counit: Vector = (0..n * n)
        .map(|a| &h.unit[a / n] * &h.counit[a % n])
        .collect();
    let names: Vec<String> = (0..n * n)
        .map(|a| format!("{}⋈{}", hd.basis_names[a / n], h.basis_names[a % n]))
        .collect();
    let embed = |f: &[Scalar], k: &[Scalar]| -> Vector {
        let mut v = vec![Scalar::zero(); n * n];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in k.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    v[idx(i, j)] = a * b;
                }
            }
        }
        v
    };
    let unit = embed(&hd.unit, &h.unit);
    let gens: Vec<Vector> = (0..n)
        .map(|j| embed(&hd.unit, &h.e(j)))
        .chain((0..n).map(|i| embed(&hd.e(i), &h.unit)))
        .collect();
    let mut underlying = FinHopf::new(names, mult, unit, comult, counit, None)?
        .with_generators(gens);
    underlying.antipode = Some(double_antipode(&underlying, &hits)?);
    let left_factor_embedding = (0..n).map(|i| idx(i, 0)).collect();
    let right_factor_embedding = (0..n).map(|j| idx(0, j)).collect();
    Ok(DoubleAlgebra {
        underlying,
        hits,
        left_factor_embedding,
        right_factor_embedding,
    })
}

fn double_antipode(d: &FinHopf, hits: &Hits) -> Result<Matrix, HopfError> {
    let h = &hits.h;
    let hd = &hits.hd;
    let n = h.dim;
    let s = h.antipode.as_ref().expect("antipode present");
    let pair = |f: &[Scalar], k: &[Scalar]| -> Vector {
        let mut v = vec![Scalar::zero(); n * n];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in k.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    v[i * n + j] = a * b;
                }
            }
        }
        v
    };
    let cols: Vec<Vector> = par::map_range(n * n, |a| {
        let (f, k) = (a / n, a % n);
        let left = pair(&hd.unit, &s.col(k));
        let right = pair(&hits.sd_inv.col(f), &h.unit);
        d.mul(&left, &right)
    });
    Ok(Matrix::from_cols(n * n, &cols))
}

/// Standard generators of `D(K^cop)` and the isomorphism data used to embed
/// `g`, `x` of 𝒜₄″.
pub struct KDouble {
    pub double: DoubleAlgebra,
    pub gens: HashMap<&'static str, Vector>,
}

impl KDouble {
    pub fn build() -> Result<Self, HopfError> {
        let k = build_k();
        let double = double_cop(&k)?;
        let hd = &double.hits.hd;
        let mut gens = HashMap::new();
        for name in ["a", "b", "c", "d"] {
            gens.insert(name, double.embed_right(&k.named(name)));
        }
        gens.insert("g", double.embed_left(&alpha(hd, 1)));
        gens.insert("x", double.embed_left(&phi_x(hd)));
        Ok(KDouble { double, gens })
    }

    pub fn gen(&self, name: &str) -> &Vector {
        &self.gens[name]
    }

    pub fn d(&self) -> &FinHopf {
        &self.double.underlying
    }

    /// Evaluates a product word such as `"gc"` or `"xa"`.
    pub fn word(&self, w: &str) -> Vector {
        let d = self.d();
        let mut acc = d.unit.clone();
        for ch in w.chars() {
            let key = ch.to_string();
            acc = d.mul(&acc, &self.gens[key.as_str()]);
        }
        acc
    }
}

/// Outcome of one relation: the residual vector, zero when it holds.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
    pub residual: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct PresentationReport {
    pub relations: Vec<RelationCheck>,
    pub k_factor: bool,
    pub a4_factor: bool,
    pub factor_products: bool,
    pub spans: bool,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.k_factor
            && self.a4_factor
            && self.factor_products
            && self.spans
            && self.relations.iter().all(|r| r.holds)
    }
}

/// Combination `Σ cᵢ·wordᵢ` in the double.
fn combo(kd: &KDouble, terms: &[(Scalar, &str)]) -> Vector {
    let mut acc = kd.d().zero();
    for (c, w) in terms {
        acc = vec_add(&acc, &vec_scale(&kd.word(w), c));
    }
    acc
}

/// The eight cross relations between `K^cop` and the 𝒜₄″ factor, each as
/// `(label, lhs terms, rhs terms)`.
pub fn cross_relations() -> Vec<(&'static str, Vec<(Scalar, &'static str)>, Vec<(Scalar, &'static str)>)> {
    let one = Scalar::one;
    let x = xi();
    let r = &sqrt2() * &x;
    vec![
        (
            "ax + ξxa = √2ξ(b + gc)",
            vec![(one(), "ax"), (x.clone(), "xa")],
            vec![(r.clone(), "b"), (r.clone(), "gc")],
        ),
        (
            "bx − ξxb = √2ξ(a − gd)",
            vec![(one(), "bx"), (-&x, "xb")],
            vec![(r.clone(), "a"), (-&r, "gd")],
        ),
        ("ag = ga", vec![(one(), "ag")], vec![(one(), "ga")]),
        ("bg = −gb", vec![(one(), "bg")], vec![(-one(), "gb")]),
        ("cg = −gc", vec![(one(), "cg")], vec![(-one(), "gc")]),
        ("dg = gd", vec![(one(), "dg")], vec![(one(), "gd")]),
        (
            "cx + ξxc = √2ξ(d − ga)",
            vec![(one(), "cx"), (x.clone(), "xc")],
            vec![(r.clone(), "d"), (-&r, "ga")],
        ),
        (
            "dx − ξxd = √2ξ(c + gb)",
            vec![(one(), "dx"), (-&x, "xd")],
            vec![(r.clone(), "c"), (r, "gb")],
        ),
    ]
}

/// Checks the presentation of `D(K^cop)` by generators `a, b, c, d, g, x`.
pub fn verify_presentation(kd: &KDouble) -> PresentationReport {
    let d = kd.d();
    let dbl = &kd.double;
    let k = build_k();
    let a4 = build_a4pp();
    let hd = &dbl.hits.hd;

    let relations = cross_relations()
        .into_iter()
        .map(|(label, lhs, rhs)| {
            let res = vec_sub(&combo(kd, &lhs), &combo(kd, &rhs));
            RelationCheck {
                relation: label.to_string(),
                holds: is_zero_vec(&res),
                residual: d.show(&res),
            }
        })
        .collect();

    // ε⋈(·) is multiplicative for the whole table of K
    let k_factor = (0..8).all(|i| {
        (0..8).all(|j| {
            let lhs = d.mul(&dbl.embed_right(&k.e(i)), &dbl.embed_right(&k.e(j)));
            lhs == dbl.embed_right(&k.mul(&k.e(i), &k.e(j)))
        })
    });

    // φ(·)⋈1 is an anti-homomorphism from 𝒜₄″
    let phi = span_growth(
        &a4,
        &crate::hopf::phi_images(&a4, &dual(&k)),
        dual(&k).unit.clone(),
        |u, v| dual(&k).mul(u, v),
    );
    let a4_factor = match phi {
        Ok(images) => (0..8).all(|i| {
            (0..8).all(|j| {
                let lhs = d.mul(&dbl.embed_left(&images[i]), &dbl.embed_left(&images[j]));
                let prod = a4.mul(&a4.e(j), &a4.e(i));
                let mut img = hd.zero();
                for (m, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        img = vec_add(&img, &vec_scale(&images[m], c));
                    }
                }
                lhs == dbl.embed_left(&img)
            })
        }),
        Err(_) => false,
    };

    let n = dbl.base_dim();
    let factor_products = (0..n).all(|i| {
        (0..n).all(|j| {
            d.mul(&dbl.embed_left(&hd.e(i)), &dbl.embed_right(&dbl.hits.h.e(j)))
                == unit_vec(n * n, i * n + j)
        })
    });

    let gens: Vec<(Vector, Vector)> = ["a", "b", "c", "d", "g", "x"]
        .iter()
        .map(|g| (kd.gen(g).clone(), kd.gen(g).clone()))
        .collect();
    let spans = span_growth(d, &gens, d.unit.clone(), |u, v| d.mul(u, v)).is_ok();

    PresentationReport {
        relations,
        k_factor,
        a4_factor,
        factor_products,
        spans,
    }
}

/// Hopf axioms of the constructed double.
pub fn verify_double(d: &DoubleAlgebra) -> AxiomReport {
    verify_hopf(&d.underlying)
}

/// Element of `D ⊗ D` as a map for convenience in module code.
pub fn coproduct(d: &DoubleAlgebra, u: &[Scalar]) -> Tensor2 {
    d.underlying.comul(u)
}
