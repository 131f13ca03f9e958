//! Finite-dimensional Hopf algebras given by structure constants.

use crate::cyclo::{sign_pow, sqrt2, xi, xi_pow, Rational, Scalar};
use crate::linalg::{
    is_zero_vec, kernel_vectors, rref_rows, span_basis, unit_vec, IncrementalBasis, Matrix, Vector,
};
use crate::par;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Sparse vector as `(index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;
/// Element of `H ⊗ H` keyed by basis index pairs.
pub type Tensor2 = HashMap<(usize, usize), Scalar>;

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("generators do not span (reached dimension {reached} of {dim})")]
    DoesNotSpan { reached: usize, dim: usize },
    #[error("assignment is not well defined: {0}")]
    NotWellDefined(String),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("filtration: {0}")]
    Filtration(String),
}

pub fn tensor_add(t: &mut Tensor2, key: (usize, usize), v: Scalar) {
    if v.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(x) => {
            *x += &v;
            if x.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, v);
        }
    }
}

fn sparse_of(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Hopf algebra (or bialgebra when `antipode` is absent) on a named basis.
#[derive(Clone, Debug)]
pub struct FinHopf {
    pub dim: usize,
    pub basis_names: Vec<String>,
    mult: Vec<Sparse>,
    pub unit: Vector,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vector,
    pub antipode: Option<Matrix>,
    /// Elements generating the algebra; used to speed up span growth.
    pub generators: Vec<Vector>,
}

impl PartialEq for FinHopf {
    fn eq(&self, o: &Self) -> bool {
        if self.dim != o.dim || self.unit != o.unit || self.counit != o.counit {
            return false;
        }
        if self.antipode != o.antipode {
            return false;
        }
        (0..self.dim * self.dim).all(|p| self.mult[p] == o.mult[p])
            && (0..self.dim).all(|i| {
                let mut a = self.comult[i].clone();
                let mut b = o.comult[i].clone();
                a.sort_by_key(|t| (t.0, t.1));
                b.sort_by_key(|t| (t.0, t.1));
                a == b
            })
    }
}

impl FinHopf {
    /// Builds from a multiplication table `mult[i][j]` and comultiplication
    /// triples; coefficients that vanish are dropped.
    pub fn new(
        basis_names: Vec<String>,
        mult: Vec<Vec<Sparse>>,
        unit: Vector,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Result<Self, HopfError> {
        let dim = basis_names.len();
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim) {
            return Err(HopfError::Malformed("multiplication table shape".into()));
        }
        if unit.len() != dim || counit.len() != dim || comult.len() != dim {
            return Err(HopfError::Malformed("unit/counit/comultiplication length".into()));
        }
        if let Some(s) = &antipode {
            if s.rows() != dim || s.cols() != dim {
                return Err(HopfError::Malformed("antipode shape".into()));
            }
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for row in mult {
            for entry in row {
                let mut acc = vec![Scalar::zero(); dim];
                for (k, c) in entry {
                    if k >= dim {
                        return Err(HopfError::Malformed(format!("index {k} out of range")));
                    }
                    acc[k] += &c;
                }
                flat.push(sparse_of(&acc));
            }
        }
        let mut cm = Vec::with_capacity(dim);
        for terms in comult {
            let mut t = Tensor2::new();
            for (j, k, c) in terms {
                if j >= dim || k >= dim {
                    return Err(HopfError::Malformed(format!("index ({j},{k}) out of range")));
                }
                tensor_add(&mut t, (j, k), c);
            }
            let mut v: Vec<_> = t.into_iter().map(|((j, k), c)| (j, k, c)).collect();
            v.sort_by_key(|x| (x.0, x.1));
            cm.push(v);
        }
        Ok(FinHopf {
            dim,
            basis_names,
            mult: flat,
            unit,
            comult: cm,
            counit,
            antipode,
            generators: Vec::new(),
        })
    }

    pub fn with_generators(mut self, gens: Vec<Vector>) -> Self {
        self.generators = gens;
        self
    }

    pub fn e(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        vec![Scalar::zero(); self.dim]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    /// Basis vector by name; panics if absent.
    pub fn named(&self, name: &str) -> Vector {
        self.e(self.index_of(name).unwrap_or_else(|| panic!("no basis element {name}")))
    }

    /// Linear combination of named basis elements.
    pub fn elem(&self, terms: &[(Scalar, &str)]) -> Vector {
        let mut v = self.zero();
        for (c, n) in terms {
            let i = self.index_of(n).unwrap_or_else(|| panic!("no basis element {n}"));
            v[i] += c;
        }
        v
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = self.zero();
        let vs = sparse_of(v);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &vs {
                let ab = a * b;
                for (k, c) in self.mult_basis(i, *j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&[Scalar]]) -> Vector {
        let mut acc = self.unit.clone();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn pow(&self, u: &[Scalar], e: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, u);
        }
        acc
    }

    pub fn comul(&self, u: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                tensor_add(&mut t, (*j, *k), a * c);
            }
        }
        t
    }

    pub fn eps(&self, u: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (a, b) in u.iter().zip(&self.counit) {
            if !a.is_zero() && !b.is_zero() {
                s += &(a * b);
            }
        }
        s
    }

    pub fn apply_antipode(&self, u: &[Scalar]) -> Option<Vector> {
        self.antipode.as_ref().map(|s| s.apply(u))
    }

    /// Product in `H ⊗ H`.
    pub fn mul2(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut t = Tensor2::new();
        for ((p, q), a) in x {
            for ((r, s), b) in y {
                let ab = a * b;
                let left = self.mult_basis(*p, *r);
                if left.is_empty() {
                    continue;
                }
                let right = self.mult_basis(*q, *s);
                for (u, c) in left {
                    let abc = &ab * c;
                    for (v, d) in right {
                        tensor_add(&mut t, (*u, *v), &abc * d);
                    }
                }
            }
        }
        t
    }

    pub fn pure_tensor(&self, x: &[Scalar], y: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    t.insert((i, j), a * b);
                }
            }
        }
        t
    }

    /// Matrix of left multiplication by `u`.
    pub fn left_mult_matrix(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(u, &self.e(j))).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    /// Matrix of right multiplication by `u`.
    pub fn right_mult_matrix(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.e(j), u)).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    pub fn is_unit(&self, u: &[Scalar]) -> bool {
        self.inverse_of(u).is_some()
    }

    pub fn inverse_of(&self, u: &[Scalar]) -> Option<Vector> {
        let l = self.left_mult_matrix(u);
        if l.rank() != self.dim {
            return None;
        }
        l.solve(&self.unit).ok().flatten()
    }

    /// Human-readable rendering of an element.
    pub fn show(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.basis_names[i];
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("({})·{}", c.pretty(), name));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn show_tensor(&self, t: &Tensor2) -> String {
        let mut keys: Vec<_> = t.keys().copied().collect();
        keys.sort();
        if keys.is_empty() {
            return "0".into();
        }
        keys.iter()
            .map(|k| {
                let c = &t[k];
                let pair = format!("{}⊗{}", self.basis_names[k.0], self.basis_names[k.1]);
                if c.is_one() {
                    pair
                } else {
                    format!("({})·{}", c.pretty(), pair)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect()
    }
}

fn iterated_left(h: &FinHopf, i: usize) -> HashMap<(usize, usize, usize), Scalar> {
    let mut out = HashMap::new();
    for (a, b, c) in h.comult_basis(i) {
        for (p, q, d) in h.comult_basis(*a) {
            let v = c * d;
            let e = out.entry((*p, *q, *b)).or_insert_with(Scalar::zero);
            *e += &v;
        }
    }
    out.retain(|_, v: &mut Scalar| !v.is_zero());
    out
}

fn iterated_right(h: &FinHopf, i: usize) -> HashMap<(usize, usize, usize), Scalar> {
    let mut out = HashMap::new();
    for (a, b, c) in h.comult_basis(i) {
        for (p, q, d) in h.comult_basis(*b) {
            let v = c * d;
            let e = out.entry((*a, *p, *q)).or_insert_with(Scalar::zero);
            *e += &v;
        }
    }
    out.retain(|_, v: &mut Scalar| !v.is_zero());
    out
}

/// Checks every Hopf axiom on all basis elements and basis pairs.
pub fn verify_hopf(h: &FinHopf) -> AxiomReport {
    let n = h.dim;
    let mut rep = AxiomReport::default();

    let assoc = par::find_first(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let ab = h.mult_basis(i, j);
        for k in 0..n {
            let mut lhs = vec![Scalar::zero(); n];
            for (l, c) in ab {
                for (m, d) in h.mult_basis(*l, k) {
                    lhs[*m] += &(c * d);
                }
            }
            let mut rhs = vec![Scalar::zero(); n];
            for (l, c) in h.mult_basis(j, k) {
                for (m, d) in h.mult_basis(i, *l) {
                    rhs[*m] += &(c * d);
                }
            }
            if lhs != rhs {
                return Some(k);
            }
        }
        None
    });
    rep.push(
        "associativity",
        assoc.is_none(),
        assoc.map_or(String::new(), |(ij, k)| {
            format!("({}·{})·{}", h.basis_names[ij / n], h.basis_names[ij % n], h.basis_names[k])
        }),
    );

    let unit_bad = (0..n).find(|&i| {
        let e = h.e(i);
        h.mul(&h.unit, &e) != e || h.mul(&e, &h.unit) != e
    });
    rep.push(
        "unit",
        unit_bad.is_none(),
        unit_bad.map_or(String::new(), |i| h.basis_names[i].clone()),
    );

    let coassoc = par::find_first(n, |i| (iterated_left(h, i) != iterated_right(h, i)).then_some(()));
    rep.push(
        "coassociativity",
        coassoc.is_none(),
        coassoc.map_or(String::new(), |(i, _)| h.basis_names[i].clone()),
    );

    let counit_bad = (0..n).find(|&i| {
        let mut l = h.zero();
        let mut r = h.zero();
        for (a, b, c) in h.comult_basis(i) {
            l[*b] += &(c * &h.counit[*a]);
            r[*a] += &(c * &h.counit[*b]);
        }
        l != h.e(i) || r != h.e(i)
    });
    rep.push(
        "counit",
        counit_bad.is_none(),
        counit_bad.map_or(String::new(), |i| h.basis_names[i].clone()),
    );

    let deltas: Vec<Tensor2> = par::map_range(n, |i| h.comul(&h.e(i)));
    let unit_ok = h.comul(&h.unit) == h.pure_tensor(&h.unit, &h.unit) && h.eps(&h.unit).is_one();
    let bialg = par::find_first(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let prod = h.mult_basis(i, j);
        let mut lhs = Tensor2::new();
        let mut eps = Scalar::zero();
        for (k, c) in prod {
            for (p, q, d) in h.comult_basis(*k) {
                tensor_add(&mut lhs, (*p, *q), c * d);
            }
            eps += &(c * &h.counit[*k]);
        }
        let rhs = h.mul2(&deltas[i], &deltas[j]);
        let eps_ok = eps == &h.counit[i] * &h.counit[j];
        (lhs != rhs || !eps_ok).then_some(())
    });
    rep.push(
        "bialgebra",
        unit_ok && bialg.is_none(),
        match (unit_ok, bialg) {
            (false, _) => "unit is not group-like".to_string(),
            (_, Some((ij, _))) => format!(
                "Δ({}·{})",
                h.basis_names[ij / n],
                h.basis_names[ij % n]
            ),
            _ => String::new(),
        },
    );

    match &h.antipode {
        None => rep.push("antipode", false, "absent"),
        Some(s) => {
            let bad = antipode_failure(h, s);
            rep.push(
                "antipode",
                bad.is_none(),
                bad.map_or(String::new(), |i| h.basis_names[i].clone()),
            );
        }
    }
    rep
}

/// First basis index where `S` violates the convolution-inverse axiom.
fn antipode_failure(h: &FinHopf, s: &Matrix) -> Option<usize> {
    let n = h.dim;
    let images: Vec<Vector> = (0..n).map(|j| s.col(j)).collect();
    par::find_first(n, |i| {
        let mut l = h.zero();
        let mut r = h.zero();
        for (a, b, c) in h.comult_basis(i) {
            let x = h.mul(&images[*a], &h.e(*b));
            let y = h.mul(&h.e(*a), &images[*b]);
            for k in 0..n {
                if !x[k].is_zero() {
                    l[k] += &(c * &x[k]);
                }
                if !y[k].is_zero() {
                    r[k] += &(c * &y[k]);
                }
            }
        }
        let target: Vector = h.unit.iter().map(|u| u * &h.counit[i]).collect();
        (l != target || r != target).then_some(())
    })
    .map(|(i, _)| i)
}

fn dual_name(n: &str) -> String {
    if n.chars().count() == 1 {
        format!("{n}*")
    } else {
        format!("({n})*")
    }
}

/// Linear dual with the convolution product `(fg)(h) = f(h₁)g(h₂)`.
pub fn dual(h: &FinHopf) -> FinHopf {
    let n = h.dim;
    let mut mult = vec![vec![Sparse::new(); n]; n];
    for k in 0..n {
        for (i, j, c) in h.comult_basis(k) {
            mult[*i][*j].push((k, c.clone()));
        }
    }
    let mut comult = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mult_basis(i, j) {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let names = h.basis_names.iter().map(|s| dual_name(s)).collect();
    FinHopf::new(
        names,
        mult,
        h.counit.clone(),
        comult,
        h.unit.clone(),
        h.antipode.as_ref().map(Matrix::transpose),
    )
    .expect("dual of a well-formed algebra")
}

fn inverse_antipode(h: &FinHopf) -> Option<Matrix> {
    h.antipode.as_ref().and_then(|s| s.inverse().ok())
}

/// Opposite algebra; the antipode becomes `S⁻¹`.
pub fn op(h: &FinHopf) -> FinHopf {
    let n = h.dim;
    let mult = (0..n)
        .map(|i| (0..n).map(|j| h.mult_basis(j, i).clone()).collect())
        .collect();
    let comult = (0..n).map(|i| h.comult_basis(i).to_vec()).collect();
    FinHopf::new(
        h.basis_names.clone(),
        mult,
        h.unit.clone(),
        comult,
        h.counit.clone(),
        inverse_antipode(h),
    )
    .expect("op of a well-formed algebra")
    .with_generators(h.generators.clone())
}

/// Co-opposite coalgebra; the antipode becomes `S⁻¹`.
pub fn cop(h: &FinHopf) -> FinHopf {
    let n = h.dim;
    let mult = (0..n)
        .map(|i| (0..n).map(|j| h.mult_basis(i, j).clone()).collect())
        .collect();
    let comult = (0..n)
        .map(|i| {
            h.comult_basis(i)
                .iter()
                .map(|(a, b, c)| (*b, *a, c.clone()))
                .collect()
        })
        .collect();
    FinHopf::new(
        h.basis_names.clone(),
        mult,
        h.unit.clone(),
        comult,
        h.counit.clone(),
        inverse_antipode(h),
    )
    .expect("cop of a well-formed algebra")
    .with_generators(h.generators.clone())
}

/// Linear payloads carried along a span-growth walk (algebra-map images,
/// representation matrices, antipode values).
pub trait Payload: Clone + PartialEq + Send + Sync {
    fn lincomb(terms: &[(Scalar, &Self)], like: &Self) -> Self;
}

impl Payload for Vector {
    fn lincomb(terms: &[(Scalar, &Self)], like: &Self) -> Self {
        let mut out = vec![Scalar::zero(); like.len()];
        for (c, v) in terms {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v.iter()) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }
}

impl Payload for Matrix {
    fn lincomb(terms: &[(Scalar, &Self)], like: &Self) -> Self {
        let mut out = Matrix::zeros(like.rows(), like.cols());
        for (c, m) in terms {
            out.axpy(c, m);
        }
        out
    }
}

/// Extends values on generators along words: starting from `(1, start)`,
/// every accepted element `u` and generator `g` yields `(u·g, step(P(u), P(g)))`.
/// Returns the payload of every basis element. Fails if the words do not span
/// or if a dependent word carries an inconsistent payload.
pub fn span_growth<T: Payload>(
    h: &FinHopf,
    gens: &[(Vector, T)],
    start: T,
    step: impl Fn(&T, &T) -> T,
) -> Result<Vec<T>, HopfError> {
    let n = h.dim;
    let mut basis = IncrementalBasis::new(n);
    let mut elems: Vec<Vector> = Vec::new();
    let mut pays: Vec<T> = Vec::new();
    basis.insert(&h.unit);
    elems.push(h.unit.clone());
    pays.push(start.clone());
    let mut cursor = 0;
    let mut pending_checks: Vec<(Vector, T)> = Vec::new();
    while cursor < elems.len() {
        let u = elems[cursor].clone();
        let pu = pays[cursor].clone();
        cursor += 1;
        for (g, pg) in gens {
            let w = h.mul(&u, g);
            let pw = step(&pu, pg);
            if basis.insert(&w).is_some() {
                elems.push(w);
                pays.push(pw);
            } else {
                pending_checks.push((w, pw));
            }
        }
    }
    if basis.len() < n {
        return Err(HopfError::DoesNotSpan {
            reached: basis.len(),
            dim: n,
        });
    }
    let express = |v: &Vector| -> T {
        let coef = basis.express(v).expect("full span");
        let terms: Vec<(Scalar, &T)> = coef.into_iter().zip(pays.iter()).collect();
        T::lincomb(&terms, &start)
    };
    let bad = par::find_first(pending_checks.len(), |i| {
        let (w, pw) = &pending_checks[i];
        (express(w) != *pw).then_some(())
    });
    if let Some((i, _)) = bad {
        return Err(HopfError::NotWellDefined(format!(
            "value on {} is inconsistent",
            h.show(&pending_checks[i].0)
        )));
    }
    Ok(par::map_range(n, |m| express(&h.e(m))))
}

/// Antipode as convolution inverse of the identity. Small algebras solve the
/// full linear system; larger ones with known generators solve on the
/// subcoalgebra spanned by the generators and extend anti-multiplicatively.
pub fn compute_antipode(h: &FinHopf) -> Result<Matrix, HopfError> {
    let s = if h.dim <= 16 || h.generators.is_empty() {
        antipode_full_system(h)?
    } else {
        antipode_from_generators(h)?
    };
    if let Some(i) = antipode_failure(h, &s) {
        return Err(HopfError::NoAntipode(format!(
            "axiom fails at {}",
            h.basis_names[i]
        )));
    }
    Ok(s)
}

fn antipode_full_system(h: &FinHopf) -> Result<Matrix, HopfError> {
    let n = h.dim;
    // unknown S_{kj}: coefficient of e_k in S(e_j), column index k*n + j
    let rows: Vec<Vector> = par::map_range(n * n, |im| {
        let (i, m) = (im / n, im % n);
        let mut row = vec![Scalar::zero(); n * n + 1];
        for (j, l, c) in h.comult_basis(i) {
            for k in 0..n {
                for (t, d) in h.mult_basis(k, *l) {
                    if *t == m {
                        row[k * n + j] += &(c * d);
                    }
                }
            }
        }
        row[n * n] = &h.counit[i] * &h.unit[m];
        row
    });
    let (rr, piv) = rref_rows(rows, n * n + 1);
    if piv.last() == Some(&(n * n)) {
        return Err(HopfError::NoAntipode("linear system is inconsistent".into()));
    }
    let mut s = Matrix::zeros(n, n);
    for (row, &p) in rr.iter().zip(&piv) {
        s.set(p / n, p % n, row[n * n].clone());
    }
    Ok(s)
}

/// Smallest subcoalgebra containing the given vectors.
pub fn subcoalgebra_generated(h: &FinHopf, vecs: &[Vector]) -> Vec<Vector> {
    let n = h.dim;
    let mut basis = IncrementalBasis::new(n);
    let mut queue: Vec<Vector> = Vec::new();
    for v in vecs {
        if basis.insert(v).is_some() {
            queue.push(v.clone());
        }
    }
    let mut cursor = 0;
    while cursor < queue.len() {
        let v = queue[cursor].clone();
        cursor += 1;
        let t = h.comul(&v);
        let mut left: HashMap<usize, Vector> = HashMap::new();
        let mut right: HashMap<usize, Vector> = HashMap::new();
        for ((p, q), c) in &t {
            left.entry(*q).or_insert_with(|| vec![Scalar::zero(); n])[*p] += c;
            right.entry(*p).or_insert_with(|| vec![Scalar::zero(); n])[*q] += c;
        }
        let mut keys: Vec<_> = left.keys().copied().collect();
        keys.sort();
        for k in keys {
            let w = &left[&k];
            if basis.insert(w).is_some() {
                queue.push(w.clone());
            }
        }
        let mut keys: Vec<_> = right.keys().copied().collect();
        keys.sort();
        for k in keys {
            let w = &right[&k];
            if basis.insert(w).is_some() {
                queue.push(w.clone());
            }
        }
    }
    span_basis(&queue, n)
}

fn antipode_from_generators(h: &FinHopf) -> Result<Matrix, HopfError> {
    let mut seeds = h.generators.clone();
    seeds.push(h.unit.clone());
    let cb = subcoalgebra_generated(h, &seeds);
    let r = cb.len();
    let pivots: Vec<usize> = cb
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    // Δ(c_i) = Σ_j c_j ⊗ m_ij; A_{ji} = m_ij, solve X·A = B over H
    let mut a: Vec<Vec<Vector>> = vec![vec![h.zero(); r]; r];
    for (i, c) in cb.iter().enumerate() {
        let t = h.comul(c);
        for (j, &p) in pivots.iter().enumerate() {
            for ((x, y), v) in &t {
                if *x == p {
                    a[j][i][*y] += v;
                }
            }
        }
    }
    let mut b: Vec<Vector> = cb
        .iter()
        .map(|c| crate::linalg::vec_scale(&h.unit, &h.eps(c)))
        .collect();
    let sub = |x: &Vector, y: &Vector| -> Vector { crate::linalg::vec_sub(x, y) };
    for p in 0..r {
        let found = (p..r).find_map(|k| h.inverse_of(&a[p][k]).map(|inv| (k, inv)));
        let Some((k, inv)) = found else {
            return antipode_on_coalgebra_linear(h, &cb, &pivots);
        };
        for row in a.iter_mut() {
            row.swap(p, k);
        }
        b.swap(p, k);
        for row in a.iter_mut() {
            row[p] = h.mul(&row[p], &inv);
        }
        b[p] = h.mul(&b[p], &inv);
        for k in 0..r {
            if k == p || is_zero_vec(&a[p][k]) {
                continue;
            }
            let t = a[p][k].clone();
            for row in a.iter_mut() {
                let d = h.mul(&row[p], &t);
                row[k] = sub(&row[k], &d);
            }
            let d = h.mul(&b[p], &t);
            b[k] = sub(&b[k], &d);
        }
    }
    extend_antipode(h, &cb, b)
}

fn antipode_on_coalgebra_linear(
    h: &FinHopf,
    cb: &[Vector],
    pivots: &[usize],
) -> Result<Matrix, HopfError> {
    let n = h.dim;
    let r = cb.len();
    let mut rows: Vec<Vector> = Vec::new();
    for c in cb {
        let t = h.comul(c);
        let mut blocks: Vec<Vector> = vec![h.zero(); r];
        for (j, &p) in pivots.iter().enumerate() {
            for ((x, y), v) in &t {
                if *x == p {
                    blocks[j][*y] += v;
                }
            }
        }
        let rmats: Vec<Matrix> = blocks.iter().map(|m| h.right_mult_matrix(m)).collect();
        let e = h.eps(c);
        for m in 0..n {
            let mut row = vec![Scalar::zero(); r * n + 1];
            for (j, rm) in rmats.iter().enumerate() {
                for k in 0..n {
                    row[j * n + k] = rm.get(m, k).clone();
                }
            }
            row[r * n] = &e * &h.unit[m];
            rows.push(row);
        }
    }
    let (rr, piv) = rref_rows(rows, r * n + 1);
    if piv.last() == Some(&(r * n)) {
        return Err(HopfError::NoAntipode("linear system is inconsistent".into()));
    }
    let mut vals = vec![h.zero(); r];
    for (row, &p) in rr.iter().zip(&piv) {
        vals[p / n][p % n] = row[r * n].clone();
    }
    extend_antipode(h, cb, vals)
}

fn extend_antipode(h: &FinHopf, cb: &[Vector], vals: Vec<Vector>) -> Result<Matrix, HopfError> {
    let gens: Vec<(Vector, Vector)> = cb.iter().cloned().zip(vals).collect();
    let images = span_growth(h, &gens, h.unit.clone(), |su, sg| h.mul(sg, su))?;
    Ok(Matrix::from_cols(h.dim, &images))
}

/// Basis of a subspace in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(ambient: usize, vecs: &[Vector]) -> Self {
        Subspace {
            ambient,
            basis: span_basis(vecs, ambient),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        crate::linalg::span_rank(&rows, self.ambient) == self.dim()
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        let mut rows = self.basis.clone();
        rows.extend(o.basis.iter().cloned());
        crate::linalg::span_rank(&rows, self.ambient) == self.dim()
    }

    /// Columns are the basis vectors.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_cols(self.ambient, &self.basis)
    }

    /// Matrix `(dim − k) × dim` sending a vector to coordinates of its class
    /// modulo this subspace, using the non-pivot coordinates.
    pub fn quotient_map(&self) -> Matrix {
        let piv = self.pivots();
        let free: Vec<usize> = (0..self.ambient).filter(|j| !piv.contains(j)).collect();
        let mut q = Matrix::zeros(free.len(), self.ambient);
        for j in 0..self.ambient {
            let mut v = unit_vec(self.ambient, j);
            for (row, &p) in self.basis.iter().zip(&piv) {
                if !v[p].is_zero() {
                    let f = v[p].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        if !y.is_zero() {
                            *x -= &(&f * y);
                        }
                    }
                }
            }
            for (a, &fj) in free.iter().enumerate() {
                q.set(a, j, v[fj].clone());
            }
        }
        q
    }
}

/// Jacobson radical of the algebra, from the trace form `(x, y) ↦ tr(L_{xy})`.
pub fn algebra_radical(h: &FinHopf) -> Subspace {
    let n = h.dim;
    let t: Vec<Scalar> = par::map_range(n, |m| {
        let mut s = Scalar::zero();
        for k in 0..n {
            for (idx, c) in h.mult_basis(m, k) {
                if *idx == k {
                    s += c;
                }
            }
        }
        s
    });
    let gram: Vec<Vector> = par::map_range(n, |i| {
        (0..n)
            .map(|j| {
                let mut s = Scalar::zero();
                for (m, c) in h.mult_basis(i, j) {
                    if !t[*m].is_zero() {
                        s += &(c * &t[*m]);
                    }
                }
                s
            })
            .collect()
    });
    Subspace::new(n, &kernel_vectors(&gram, n))
}

/// Coradical: annihilator of the radical of the dual algebra.
pub fn coradical(h: &FinHopf) -> Subspace {
    let n = h.dim;
    // trace of left multiplication by e^m in the dual algebra
    let t: Vec<Scalar> = par::map_range(n, |m| {
        let mut s = Scalar::zero();
        for k in 0..n {
            for (a, b, c) in h.comult_basis(k) {
                if *a == m && *b == k {
                    s += c;
                }
            }
        }
        s
    });
    let mut gram = vec![vec![Scalar::zero(); n]; n];
    for m in 0..n {
        if t[m].is_zero() {
            continue;
        }
        for (i, j, c) in h.comult_basis(m) {
            gram[*i][*j] += &(c * &t[m]);
        }
    }
    let rad = kernel_vectors(&gram, n);
    if rad.is_empty() {
        return Subspace::whole(n);
    }
    Subspace::new(n, &kernel_vectors(&rad, n))
}

/// Subalgebra generated by a subspace (and the unit).
pub fn generated_subalgebra(h: &FinHopf, s: &Subspace) -> Subspace {
    let n = h.dim;
    let mut basis = IncrementalBasis::new(n);
    let mut elems = Vec::new();
    if basis.insert(&h.unit).is_some() {
        elems.push(h.unit.clone());
    }
    for v in &s.basis {
        if basis.insert(v).is_some() {
            elems.push(v.clone());
        }
    }
    let mut cursor = 0;
    while cursor < elems.len() {
        let u = elems[cursor].clone();
        cursor += 1;
        for g in &s.basis {
            for w in [h.mul(&u, g), h.mul(g, &u)] {
                if basis.insert(&w).is_some() {
                    elems.push(w);
                }
            }
        }
    }
    Subspace::new(n, &elems)
}

/// `X ∧ Y = Δ⁻¹(X ⊗ H + H ⊗ Y)`.
pub fn wedge(h: &FinHopf, x: &Subspace, y: &Subspace) -> Subspace {
    let n = h.dim;
    let qx = x.quotient_map();
    let qy = y.quotient_map();
    let (rx, ry) = (qx.rows(), qy.rows());
    if rx == 0 || ry == 0 {
        return Subspace::whole(n);
    }
    let cols: Vec<HashMap<usize, Scalar>> = par::map_range(n, |i| {
        let mut col: HashMap<usize, Scalar> = HashMap::new();
        for (p, q, c) in h.comult_basis(i) {
            for a in 0..rx {
                let u = qx.get(a, *p);
                if u.is_zero() {
                    continue;
                }
                let cu = c * u;
                for b in 0..ry {
                    let v = qy.get(b, *q);
                    if v.is_zero() {
                        continue;
                    }
                    *col.entry(a * ry + b).or_insert_with(Scalar::zero) += &(&cu * v);
                }
            }
        }
        col.retain(|_, v| !v.is_zero());
        col
    });
    let mut row_ids: Vec<usize> = cols.iter().flat_map(|c| c.keys().copied()).collect();
    row_ids.sort();
    row_ids.dedup();
    let rows: Vec<Vector> = row_ids
        .iter()
        .map(|r| {
            (0..n)
                .map(|i| cols[i].get(r).cloned().unwrap_or_else(Scalar::zero))
                .collect()
        })
        .collect();
    Subspace::new(n, &kernel_vectors(&rows, n))
}

/// `H_[0]` = subalgebra generated by the coradical, `H_[n] = H_[n−1] ∧ H_[0]`.
pub fn standard_filtration(h: &FinHopf) -> Result<Vec<Subspace>, HopfError> {
    let h0 = generated_subalgebra(h, &coradical(h));
    let mut terms = vec![h0.clone()];
    while terms.last().expect("nonempty").dim() < h.dim {
        let next = wedge(h, terms.last().expect("nonempty"), &h0);
        if next.dim() == terms.last().expect("nonempty").dim() || terms.len() > h.dim {
            return Err(HopfError::Filtration(format!(
                "stalled at dimension {}",
                next.dim()
            )));
        }
        terms.push(next);
    }
    Ok(terms)
}

/// Associated graded Hopf algebra of a filtration together with the layer dimensions.
pub fn graded_from_filtration(
    h: &FinHopf,
    filt: &[Subspace],
) -> Result<(FinHopf, Vec<usize>), HopfError> {
    let n = h.dim;
    if filt.last().map(Subspace::dim) != Some(n) {
        return Err(HopfError::Filtration("filtration does not exhaust".into()));
    }
    let mut adapted: Vec<Vector> = Vec::new();
    let mut degree: Vec<usize> = Vec::new();
    let mut layer_dims = Vec::new();
    let mut prev_piv: Vec<usize> = Vec::new();
    for (d, term) in filt.iter().enumerate() {
        let piv = term.pivots();
        let mut count = 0;
        for (v, p) in term.basis.iter().zip(&piv) {
            if !prev_piv.contains(p) {
                adapted.push(v.clone());
                degree.push(d);
                count += 1;
            }
        }
        if term.dim() != prev_piv.len() + count {
            return Err(HopfError::Filtration("terms are not nested".into()));
        }
        layer_dims.push(count);
        prev_piv = piv;
    }
    let change = Matrix::from_cols(n, &adapted);
    let inv = change
        .inverse()
        .map_err(|_| HopfError::Filtration("layer complements are not a basis".into()))?;
    let coords = |v: &Vector| inv.apply(v);
    let top = filt.len() - 1;

    let mult: Vec<Vec<Sparse>> = par::map_range(n, |i| {
        (0..n)
            .map(|j| {
                let target = degree[i] + degree[j];
                if target > top {
                    return Ok(Sparse::new());
                }
                let c = coords(&h.mul(&adapted[i], &adapted[j]));
                let mut out = Sparse::new();
                for (k, x) in c.into_iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    if degree[k] > target {
                        return Err(HopfError::Filtration(
                            "product leaves the filtration".into(),
                        ));
                    }
                    if degree[k] == target {
                        out.push((k, x));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>, _>>()
    })
    .into_iter()
    .collect::<Result<_, _>>()?;

    let comult: Vec<Vec<(usize, usize, Scalar)>> = par::map_range(n, |i| {
        let t = h.comul(&adapted[i]);
        // change basis on both factors: coordinates of e_p in adapted basis
        let mut acc: HashMap<(usize, usize), Scalar> = HashMap::new();
        for ((p, q), c) in &t {
            for a in 0..n {
                let u = inv.get(a, *p);
                if u.is_zero() {
                    continue;
                }
                let cu = c * u;
                for b in 0..n {
                    let v = inv.get(b, *q);
                    if v.is_zero() {
                        continue;
                    }
                    *acc.entry((a, b)).or_insert_with(Scalar::zero) += &(&cu * v);
                }
            }
        }
        let mut out = Vec::new();
        for ((a, b), c) in acc {
            if c.is_zero() {
                continue;
            }
            if degree[a] + degree[b] > degree[i] {
                return Err(HopfError::Filtration("coproduct leaves the filtration".into()));
            }
            if degree[a] + degree[b] == degree[i] {
                out.push((a, b, c));
            }
        }
        Ok(out)
    })
    .into_iter()
    .collect::<Result<_, _>>()?;

    let unit = coords(&h.unit);
    let counit: Vector = (0..n)
        .map(|i| {
            if degree[i] == 0 {
                h.eps(&adapted[i])
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let antipode = match &h.antipode {
        None => None,
        Some(s) => {
            let mut m = Matrix::zeros(n, n);
            for j in 0..n {
                let c = coords(&s.apply(&adapted[j]));
                for (k, x) in c.into_iter().enumerate() {
                    if degree[k] == degree[j] {
                        m.set(k, j, x);
                    } else if degree[k] > degree[j] && !x.is_zero() {
                        return Err(HopfError::Filtration("antipode leaves the filtration".into()));
                    }
                }
            }
            Some(m)
        }
    };
    let names = (0..n).map(|i| format!("gr{}_{}", degree[i], i)).collect();
    let g = FinHopf::new(names, mult, unit, comult, counit, antipode)?;
    Ok((g, layer_dims))
}

/// Skew-primitives `{x : Δ(x) = x⊗g1 + g2⊗x}`.
pub fn skew_primitives(h: &FinHopf, g1: &[Scalar], g2: &[Scalar]) -> Subspace {
    let n = h.dim;
    let cols: Vec<Tensor2> = par::map_range(n, |i| {
        let e = h.e(i);
        let mut t = h.comul(&e);
        for ((p, q), c) in h.pure_tensor(&e, g1) {
            tensor_add(&mut t, (p, q), -c);
        }
        for ((p, q), c) in h.pure_tensor(g2, &e) {
            tensor_add(&mut t, (p, q), -c);
        }
        t
    });
    let mut keys: Vec<(usize, usize)> = cols.iter().flat_map(|t| t.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vector> = keys
        .iter()
        .map(|k| {
            (0..n)
                .map(|i| cols[i].get(k).cloned().unwrap_or_else(Scalar::zero))
                .collect()
        })
        .collect();
    Subspace::new(n, &kernel_vectors(&rows, n))
}

/// Characteristic polynomial coefficients `[c0, …, c_{n−1}, 1]` (Faddeev–LeVerrier).
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        let prev = coeffs[n - k + 1].clone();
        mk = m.dot(&mk.add(&id.scale(&prev)).expect("square"));
        let tr = mk.trace();
        coeffs[n - k] = -(&tr * &Scalar::frac(1, k as i64));
    }
    coeffs
}

fn poly_eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let v = n.to_u64()?;
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut p: Vec<Rational> = p.to_vec();
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return roots;
    }
    let mut shift = 0;
    while p[shift].is_zero() {
        shift += 1;
    }
    if shift > 0 {
        roots.push(Rational::ZERO);
    }
    let p = &p[shift..];
    if p.len() <= 1 {
        return roots;
    }
    let lcm = p.iter().fold(BigInt::from(1), |acc, r| {
        let d = r.denom();
        num_integer::Integer::lcm(&acc, &d)
    });
    let ints: Vec<BigInt> = p.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().expect("nonempty")))
    else {
        return roots;
    };
    for a in &ps {
        for b in &qs {
            for sign in [1i64, -1] {
                let cand = Rational::from_big(a * sign, b.clone()).expect("nonzero divisor");
                let val = p
                    .iter()
                    .rev()
                    .fold(Rational::ZERO, |acc, c| acc.mul(&cand).add(c));
                if val.is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// Roots of the form `r·ζᵏ` (r rational) of a polynomial over Q(ζ₈).
pub fn monomial_roots(p: &[Scalar]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for k in 0..8 {
        let z = Scalar::zeta_pow(k);
        // q(μ) = p(ζᵏ μ); find the first nonzero coordinate polynomial
        let q: Vec<Scalar> = p
            .iter()
            .enumerate()
            .map(|(i, c)| c * &z.pow(i as u32))
            .collect();
        for coord in 0..4 {
            let comp: Vec<Rational> = q.iter().map(|c| c.c[coord].clone()).collect();
            if comp.iter().all(Rational::is_zero) {
                continue;
            }
            for r in rational_roots(&comp) {
                let cand = &Scalar::from_rational(r) * &z;
                if poly_eval(p, &cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
            break;
        }
    }
    out
}

/// Commutator ideal of the algebra with structure constants `m[i][j]` (dense).
fn commutator_ideal(m: &[Vec<Vector>], r: usize) -> Vec<Vector> {
    let mul = |u: &Vector, v: &Vector| -> Vector {
        let mut out = vec![Scalar::zero(); r];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in m[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    };
    let mut basis = IncrementalBasis::new(r);
    let mut elems = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let c = crate::linalg::vec_sub(&m[i][j], &m[j][i]);
            if basis.insert(&c).is_some() {
                elems.push(c);
            }
        }
    }
    let mut cursor = 0;
    while cursor < elems.len() {
        let u = elems[cursor].clone();
        cursor += 1;
        for k in 0..r {
            let e = unit_vec(r, k);
            for w in [mul(&u, &e), mul(&e, &u)] {
                if basis.insert(&w).is_some() {
                    elems.push(w);
                }
            }
        }
    }
    elems
}

/// Group-like elements, found inside the coradical: the span of group-likes is
/// the annihilator of the commutator ideal of the dual of the coradical, and
/// the group-likes themselves are the common eigenvectors of the right
/// coregular operators on that span.
pub fn group_likes(h: &FinHopf) -> Vec<Vector> {
    let h0 = coradical(h);
    let r = h0.dim();
    let piv = h0.pivots();
    let coeff = |t: &Tensor2, a: usize, b: usize| t.get(&(piv[a], piv[b])).cloned().unwrap_or_else(Scalar::zero);
    let deltas: Vec<Tensor2> = h0.basis.iter().map(|v| h.comul(v)).collect();
    // dual algebra of the coradical: h^i h^j = Σ_k Δ(h_k)[i, j] h^k
    let mut dm = vec![vec![vec![Scalar::zero(); r]; r]; r];
    for (k, t) in deltas.iter().enumerate() {
        for i in 0..r {
            for j in 0..r {
                dm[i][j][k] = coeff(t, i, j);
            }
        }
    }
    let ideal = commutator_ideal(&dm, r);
    let kg_coords: Vec<Vector> = if ideal.is_empty() {
        (0..r).map(|i| unit_vec(r, i)).collect()
    } else {
        kernel_vectors(&ideal, r)
    };
    let kg: Vec<Vector> = kg_coords
        .iter()
        .map(|c| {
            let mut v = h.zero();
            for (ci, b) in c.iter().zip(&h0.basis) {
                if !ci.is_zero() {
                    v = crate::linalg::vec_add(&v, &crate::linalg::vec_scale(b, ci));
                }
            }
            v
        })
        .collect();
    let kg = Subspace::new(h.dim, &kg);
    let m = kg.dim();
    if m == 0 {
        return Vec::new();
    }
    let kpiv = kg.pivots();
    let kdeltas: Vec<Tensor2> = kg.basis.iter().map(|v| h.comul(v)).collect();
    // M_i t = t_i t for group-like coordinates t
    let ops: Vec<Matrix> = (0..m)
        .map(|i| {
            let mut mi = Matrix::zeros(m, m);
            for (l, t) in kdeltas.iter().enumerate() {
                for k in 0..m {
                    let c = t.get(&(kpiv[i], kpiv[k])).cloned().unwrap_or_else(Scalar::zero);
                    mi.set(k, l, c);
                }
            }
            mi
        })
        .collect();
    let mut spaces: Vec<Vec<Vector>> = vec![(0..m).map(|i| unit_vec(m, i)).collect()];
    for op in &ops {
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let mut ib = IncrementalBasis::new(m);
            for v in &w {
                ib.insert(v);
            }
            let d = w.len();
            let mut restricted = Matrix::zeros(d, d);
            for (k, v) in w.iter().enumerate() {
                let img = op.apply(v);
                let c = ib.express(&img).expect("invariant subspace");
                for (l, x) in c.into_iter().enumerate() {
                    restricted.set(l, k, x);
                }
            }
            for lam in monomial_roots(&char_poly(&restricted)) {
                let shifted = restricted
                    .sub(&Matrix::identity(d).scale(&lam))
                    .expect("square");
                let ker = shifted.kernel_basis();
                let vecs: Vec<Vector> = ker
                    .col_vecs()
                    .into_iter()
                    .map(|c| {
                        let mut v = vec![Scalar::zero(); m];
                        for (ci, b) in c.iter().zip(&w) {
                            if !ci.is_zero() {
                                v = crate::linalg::vec_add(&v, &crate::linalg::vec_scale(b, ci));
                            }
                        }
                        v
                    })
                    .collect();
                if !vecs.is_empty() {
                    next.push(vecs);
                }
            }
        }
        spaces = next;
    }
    let mut out = Vec::new();
    for w in spaces {
        if w.len() != 1 {
            continue;
        }
        let mut g = h.zero();
        for (ci, b) in w[0].iter().zip(&kg.basis) {
            if !ci.is_zero() {
                g = crate::linalg::vec_add(&g, &crate::linalg::vec_scale(b, ci));
            }
        }
        let e = h.eps(&g);
        if e.is_zero() {
            continue;
        }
        let g = crate::linalg::vec_scale(&g, &e.inv().expect("nonzero"));
        if h.comul(&g) == h.pure_tensor(&g, &g) {
            out.push(g);
        }
    }
    out
}

/// Result of checking that generator images extend to a Hopf map.
#[derive(Clone, Debug, Serialize)]
pub struct MapCheck {
    pub algebra_map: bool,
    pub coalgebra_map: bool,
    pub counit: bool,
    pub rank: usize,
    pub detail: String,
}

impl MapCheck {
    pub fn is_hopf_map(&self) -> bool {
        self.algebra_map && self.coalgebra_map && self.counit
    }
}

/// Extends `images` (pairs of source generator, target element) to an algebra
/// map by span growth and checks it intertwines Δ and ε.
pub fn hopf_map_check(
    src: &FinHopf,
    dst: &FinHopf,
    images: &[(Vector, Vector)],
) -> Result<(MapCheck, Matrix), HopfError> {
    let map = match span_growth(src, images, dst.unit.clone(), |a, b| dst.mul(a, b)) {
        Ok(m) => m,
        Err(HopfError::NotWellDefined(d)) => {
            return Ok((
                MapCheck {
                    algebra_map: false,
                    coalgebra_map: false,
                    counit: false,
                    rank: 0,
                    detail: d,
                },
                Matrix::zeros(dst.dim, src.dim),
            ))
        }
        Err(e) => return Err(e),
    };
    let mat = Matrix::from_cols(dst.dim, &map);
    let co_bad = (0..src.dim).find(|&i| {
        let mut lhs = Tensor2::new();
        for (p, q, c) in src.comult_basis(i) {
            for ((a, b), v) in dst.pure_tensor(&map[*p], &map[*q]) {
                tensor_add(&mut lhs, (a, b), c * &v);
            }
        }
        lhs != dst.comul(&map[i])
    });
    let eps_ok = (0..src.dim).all(|i| dst.eps(&map[i]) == src.counit[i]);
    let rank = mat.rank();
    Ok((
        MapCheck {
            algebra_map: true,
            coalgebra_map: co_bad.is_none(),
            counit: eps_ok,
            rank,
            detail: co_bad.map_or(String::new(), |i| format!("Δ fails on {}", src.basis_names[i])),
        },
        mat,
    ))
}

// ---------------------------------------------------------------------------
// JSON format

#[derive(Serialize, Deserialize)]
struct HopfJson {
    dim: usize,
    basis_names: Vec<String>,
    mult: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
    comult: Vec<(usize, Vec<(usize, usize, Scalar)>)>,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Option<Matrix>,
}

impl Serialize for FinHopf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = self.dim;
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let e = self.mult_basis(i, j);
                if !e.is_empty() {
                    mult.push((i, j, e.clone()));
                }
            }
        }
        let comult = (0..n).map(|i| (i, self.comult[i].clone())).collect();
        HopfJson {
            dim: n,
            basis_names: self.basis_names.clone(),
            mult,
            comult,
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinHopf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = HopfJson::deserialize(d)?;
        let n = j.dim;
        if j.basis_names.len() != n {
            return Err(D::Error::custom("basis_names length differs from dim"));
        }
        let mut mult = vec![vec![Sparse::new(); n]; n];
        for (i, k, e) in j.mult {
            if i >= n || k >= n {
                return Err(D::Error::custom("mult index out of range"));
            }
            mult[i][k] = e;
        }
        let mut comult = vec![Vec::new(); n];
        for (i, t) in j.comult {
            if i >= n {
                return Err(D::Error::custom("comult index out of range"));
            }
            comult[i] = t;
        }
        FinHopf::new(j.basis_names, mult, j.unit, comult, j.counit, j.antipode)
            .map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Constructors

/// Names of the basis of K.
pub const K_NAMES: [&str; 8] = ["1", "a", "b", "c", "d", "a^2", "ab", "ac"];

fn k_index(name: &str) -> usize {
    K_NAMES.iter().position(|n| *n == name).expect("K basis name")
}

/// The 8-dimensional Hopf algebra K generated by a, b, c, d.
pub fn build_k() -> FinHopf {
    let x = xi();
    let one = Scalar::one;
    let t = |c: Scalar, n: &str| vec![(k_index(n), c)];
    let z = Sparse::new;
    let mx = -&x;
    // rows: left factor; columns: 1, a, b, c, d, a², ab, ac
    let table: Vec<Vec<Sparse>> = vec![
        K_NAMES.iter().map(|n| t(one(), n)).collect(),
        vec![
            t(one(), "a"),
            t(one(), "a^2"),
            t(one(), "ab"),
            t(one(), "ac"),
            t(one(), "1"),
            t(one(), "d"),
            t(one(), "c"),
            t(one(), "b"),
        ],
        vec![
            t(one(), "b"),
            t(mx.clone(), "ab"),
            z(),
            z(),
            t(x.clone(), "ac"),
            t(-one(), "c"),
            z(),
            z(),
        ],
        vec![
            t(one(), "c"),
            t(mx.clone(), "ac"),
            z(),
            z(),
            t(x.clone(), "ab"),
            t(-one(), "b"),
            z(),
            z(),
        ],
        vec![
            t(one(), "d"),
            t(one(), "1"),
            t(one(), "ac"),
            t(one(), "ab"),
            t(one(), "a^2"),
            t(one(), "a"),
            t(one(), "b"),
            t(one(), "c"),
        ],
        vec![
            t(one(), "a^2"),
            t(one(), "d"),
            t(one(), "c"),
            t(one(), "b"),
            t(one(), "a"),
            t(one(), "1"),
            t(one(), "ac"),
            t(one(), "ab"),
        ],
        vec![
            t(one(), "ab"),
            t(mx.clone(), "c"),
            z(),
            z(),
            t(x.clone(), "b"),
            t(-one(), "ac"),
            z(),
            z(),
        ],
        vec![
            t(one(), "ac"),
            t(mx, "b"),
            z(),
            z(),
            t(x.clone(), "c"),
            t(-one(), "ab"),
            z(),
            z(),
        ],
    ];
    let tt = |p: &str, q: &str| (k_index(p), k_index(q), one());
    let comult = vec![
        vec![tt("1", "1")],
        vec![tt("a", "a"), tt("b", "c")],
        vec![tt("a", "b"), tt("b", "d")],
        vec![tt("c", "a"), tt("d", "c")],
        vec![tt("c", "b"), tt("d", "d")],
        vec![tt("a^2", "a^2")],
        vec![tt("ab", "1"), tt("a^2", "ab")],
        vec![tt("ac", "a^2"), tt("1", "ac")],
    ];
    let counit: Vector = [1, 1, 0, 0, 1, 1, 0, 0].iter().map(|&v| Scalar::from_int(v)).collect();
    let mut s = Matrix::zeros(8, 8);
    let images = [
        ("1", "1", one()),
        ("a", "d", one()),
        ("b", "b", x.clone()),
        ("c", "c", -&x),
        ("d", "a", one()),
        ("a^2", "a^2", one()),
        ("ab", "ac", -one()),
        ("ac", "ab", one()),
    ];
    for (src, dst, c) in images {
        s.set(k_index(dst), k_index(src), c);
    }
    let names = K_NAMES.iter().map(|s| s.to_string()).collect();
    let h = FinHopf::new(names, table, unit_vec(8, 0), comult, counit, Some(s))
        .expect("K is well formed");
    let gens = ["a", "b", "c", "d"].iter().map(|n| unit_vec(8, k_index(n))).collect();
    h.with_generators(gens)
}

/// Names of the basis of 𝒜₄″: g^j then x·g^j.
pub const A4PP_NAMES: [&str; 8] = ["1", "g", "g^2", "g^3", "x", "xg", "xg^2", "xg^3"];

/// The Hopf algebra ⟨g, x | g⁴ = 1, x² = g² − 1, gx = −xg⟩ with g group-like
/// and Δ(x) = x⊗g + 1⊗x.
pub fn build_a4pp() -> FinHopf {
    let one = Scalar::one;
    let mult: Vec<Vec<Sparse>> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let (p, s) = (i / 4, i % 4);
                    let (q, t) = (j / 4, j % 4);
                    let sign = if q == 1 && s % 2 == 1 { -one() } else { one() };
                    let e = (s + t) % 4;
                    if p + q <= 1 {
                        vec![((p + q) * 4 + e, sign)]
                    } else {
                        vec![((e + 2) % 4, sign.clone()), (e, -sign)]
                    }
                })
                .collect()
        })
        .collect();
    let comult = (0..8)
        .map(|i| {
            let s = i % 4;
            if i < 4 {
                vec![(s, s, one())]
            } else {
                vec![(4 + s, (s + 1) % 4, one()), (s, 4 + s, one())]
            }
        })
        .collect();
    let counit = (0..8)
        .map(|i| if i < 4 { one() } else { Scalar::zero() })
        .collect();
    let mut s = Matrix::zeros(8, 8);
    for j in 0..4 {
        s.set((4 - j) % 4, j, one());
        // S(x g^j) = g^{-j} S(x) = -g^{-j} x g^3 = -(-1)^j x g^{3-j}
        s.set(4 + (7 - j) % 4, 4 + j, -sign_pow(j as i64));
    }
    let names = A4PP_NAMES.iter().map(|s| s.to_string()).collect();
    FinHopf::new(names, mult, unit_vec(8, 0), comult, counit, Some(s))
        .expect("A4'' is well formed")
        .with_generators(vec![unit_vec(8, 1), unit_vec(8, 4)])
}

/// Group algebra of the cyclic group of order n.
pub fn group_algebra_cyclic(n: usize) -> FinHopf {
    let one = Scalar::one;
    let mult = (0..n)
        .map(|i| (0..n).map(|j| vec![((i + j) % n, one())]).collect())
        .collect();
    let comult = (0..n).map(|i| vec![(i, i, one())]).collect();
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        s.set((n - i) % n, i, one());
    }
    let names = (0..n).map(|i| format!("g^{i}")).collect();
    FinHopf::new(names, mult, unit_vec(n, 0), comult, vec![one(); n], Some(s))
        .expect("group algebra")
}

/// Group-like α_j = 1* + ξ^{−j}a* + ξʲd* + (−1)ʲ(a²)* of K*.
pub fn alpha(kd: &FinHopf, j: i64) -> Vector {
    let mut v = kd.zero();
    v[k_index("1")] = Scalar::one();
    v[k_index("a")] = xi_pow(-j);
    v[k_index("d")] = xi_pow(j);
    v[k_index("a^2")] = sign_pow(j);
    v
}

/// φ(x) = √2ξ(b* + c* + (ab)* + (ac)*) in K*.
pub fn phi_x(kd: &FinHopf) -> Vector {
    let c = &sqrt2() * &xi();
    let mut v = kd.zero();
    for n in ["b", "c", "ab", "ac"] {
        v[k_index(n)] = c.clone();
    }
    v
}

/// φ(xgʲ) = √2ξ(ξʲb* + ξ^{−j}c* + (ab)* + (−1)ʲ(ac)*).
pub fn phi_xg(kd: &FinHopf, j: i64) -> Vector {
    let c = &sqrt2() * &xi();
    let mut v = kd.zero();
    v[k_index("b")] = &c * &xi_pow(j);
    v[k_index("c")] = &c * &xi_pow(-j);
    v[k_index("ab")] = c.clone();
    v[k_index("ac")] = &c * &sign_pow(j);
    v
}

/// Images of the generators g, x of 𝒜₄″ under φ.
pub fn phi_images(a4: &FinHopf, kd: &FinHopf) -> Vec<(Vector, Vector)> {
    vec![
        (a4.named("g"), alpha(kd, 1)),
        (a4.named("x"), phi_x(kd)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_products_and_coproducts() {
        let k = build_k();
        let x = xi();
        assert_eq!(k.mul(&k.named("b"), &k.named("a")), k.elem(&[(-&x, "ab")]));
        assert_eq!(k.mul(&k.named("a"), &k.named("d")), k.unit);
        let dc = k.comul(&k.named("c"));
        let expect = {
            let mut t = k.pure_tensor(&k.named("c"), &k.named("a"));
            for (key, v) in k.pure_tensor(&k.named("d"), &k.named("c")) {
                tensor_add(&mut t, key, v);
            }
            t
        };
        assert_eq!(dc, expect);
        assert!(verify_hopf(&k).passed(), "{:?}", verify_hopf(&k).failures());
    }

    #[test]
    fn a4pp_relations() {
        let a = build_a4pp();
        let (g, x) = (a.named("g"), a.named("x"));
        assert_eq!(a.mul(&x, &x), a.elem(&[(Scalar::one(), "g^2"), (-Scalar::one(), "1")]));
        assert_eq!(a.mul(&g, &x), a.elem(&[(-Scalar::one(), "xg")]));
        assert!(verify_hopf(&a).passed(), "{:?}", verify_hopf(&a).failures());
    }

    #[test]
    fn corrupted_table_fails_associativity() {
        let k = build_k();
        let mut mult: Vec<Vec<Sparse>> = (0..8)
            .map(|i| (0..8).map(|j| k.mult_basis(i, j).clone()).collect())
            .collect();
        mult[2][1] = vec![(k_index("ab"), Scalar::one())];
        let comult = (0..8).map(|i| k.comult_basis(i).to_vec()).collect();
        let bad = FinHopf::new(
            k.basis_names.clone(),
            mult,
            k.unit.clone(),
            comult,
            k.counit.clone(),
            k.antipode.clone(),
        )
        .unwrap();
        assert_eq!(verify_hopf(&bad).get("associativity"), Some(false));
    }

    #[test]
    fn dual_table_entries() {
        let kd = dual(&build_k());
        assert_eq!(kd.mul(&kd.named("b*"), &kd.named("c*")), kd.named("a*"));
        assert_eq!(kd.mul(&kd.named("1*"), &kd.named("(ac)*")), kd.named("(ac)*"));
        assert!(verify_hopf(&kd).passed());
        let kdd = dual(&kd);
        let k = build_k();
        assert_eq!(kdd.unit, k.unit);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(kdd.mult_basis(i, j), k.mult_basis(i, j));
            }
        }
    }

    #[test]
    fn antipodes() {
        let k = build_k();
        let mut bare = k.clone();
        bare.antipode = None;
        let s = compute_antipode(&bare).unwrap();
        assert_eq!(Some(&s), k.antipode.as_ref());
        let z4 = group_algebra_cyclic(4);
        let mut bare = z4.clone();
        bare.antipode = None;
        let s = compute_antipode(&bare).unwrap();
        assert_eq!(s.col(1), unit_vec(4, 3));
    }

    #[test]
    fn group_likes_of_small_algebras() {
        let k = build_k();
        let g = group_likes(&k);
        assert_eq!(g.len(), 2);
        assert!(g.contains(&k.unit) && g.contains(&k.named("a^2")));
        let kd = dual(&k);
        let g = group_likes(&kd);
        assert_eq!(g.len(), 4);
        for j in 0..4 {
            assert!(g.contains(&alpha(&kd, j)));
        }
        let a = build_a4pp();
        let g = group_likes(&a);
        assert_eq!(g.len(), 4);
        for n in ["1", "g", "g^2", "g^3"] {
            assert!(g.contains(&a.named(n)));
        }
    }

    #[test]
    fn skew_primitive_spaces() {
        let k = build_k();
        let p = skew_primitives(&k, &k.unit, &k.named("a^2"));
        let expect = Subspace::new(
            8,
            &[
                k.elem(&[(Scalar::one(), "1"), (-Scalar::one(), "a^2")]),
                k.named("ab"),
            ],
        );
        assert_eq!(p, expect);
        assert_eq!(skew_primitives(&k, &k.unit, &k.unit).dim(), 0);
        let a = build_a4pp();
        assert!(skew_primitives(&a, &a.named("g"), &a.unit).contains(&a.named("x")));
    }

    #[test]
    fn coradical_and_filtration_of_k() {
        let k = build_k();
        let c = coradical(&k);
        assert_eq!(c.dim(), 6);
        assert_eq!(generated_subalgebra(&k, &c).dim(), 8);
        assert_eq!(wedge(&k, &c, &c).dim(), 8);
        let f = standard_filtration(&k).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(coradical(&group_algebra_cyclic(4)).dim(), 4);
        let one = Subspace::new(8, std::slice::from_ref(&k.unit));
        assert_eq!(generated_subalgebra(&k, &one).dim(), 1);
    }

    #[test]
    fn phi_is_hopf_isomorphism() {
        let a = build_a4pp();
        let kd = dual(&build_k());
        let (chk, m) = hopf_map_check(&a, &kd, &phi_images(&a, &kd)).unwrap();
        assert!(chk.is_hopf_map(), "{}", chk.detail);
        assert_eq!(chk.rank, 8);
        for j in 0..4 {
            assert_eq!(m.col(4 + j), phi_xg(&kd, j as i64));
        }
    }

    #[test]
    fn identity_map_on_k() {
        let k = build_k();
        let imgs: Vec<_> = k.generators.iter().map(|g| (g.clone(), g.clone())).collect();
        let (chk, m) = hopf_map_check(&k, &k, &imgs).unwrap();
        assert!(chk.is_hopf_map());
        assert_eq!(m, Matrix::identity(8));
    }

    #[test]
    fn json_round_trip() {
        let k = build_k();
        let s = serde_json::to_string(&k).unwrap();
        let back: FinHopf = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn monomial_root_search() {
        // (x − ξ)(x + 1/2)(x − 3ζ)
        let r = [xi(), Scalar::frac(-1, 2), &Scalar::from_int(3) * &Scalar::zeta()];
        let mut p = vec![Scalar::one()];
        for root in &r {
            let mut q = vec![Scalar::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                q[i + 1] += c;
                q[i] -= &(c * root);
            }
            p = q;
        }
        let found = monomial_roots(&p);
        assert_eq!(found.len(), 3);
        for root in &r {
            assert!(found.contains(root));
        }
    }
}
