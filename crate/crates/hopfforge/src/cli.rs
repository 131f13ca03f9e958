//! Verification report and subcommand implementations behind the binary.

use crate::boson::{
    bosonize, build_lifting, build_nichols_hopf, check_inclusion_projection, compare_with_bosonization,
    fourth_roots, lifting_verification, no_deformation_check, relation_residuals, representation_module,
    u_lambda, w_lambda, Family,
};
use crate::cyclo::{sqrt2, xi, Rational, Scalar};
use crate::drinfeld::{verify_double, verify_presentation, KDouble};
use crate::hopf::{
    alpha, build_a4pp, build_k, dual, group_likes, hopf_map_check, phi_images, verify_hopf, AxiomReport,
    FinHopf,
};
use crate::linalg::{unit_vec, Matrix};
use crate::modrep::{
    composition_series, d_algebra, decompose_cg, ext_table, is_abs_simple, is_indecomposable, is_isomorphic,
    lambda, make_m_plus, radical_layers, restrict, separation_diagram, socle_module, tail_span, top,
    verify_module, verify_regular_decomposition, AModule, CgDecomposition, ModuleJson, Registry, SimpleLabel,
};
use crate::nichols::{
    ad_degree2, check_relation, degree2_relations, exterior_check, hilbert, lambda_prime, same_span,
    stated_degree2_relations, tensor_power, witness_sweep, BraidedSpace, Total,
};
use crate::par;
use crate::yd::{
    braiding, coaction_generic, from_double_module, registry_yd, round_trip, verify_yd, yang_baxter, YDModule,
    YdJson,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

pub type CliResult<T> = Result<T, Box<dyn std::error::Error + Send + Sync>>;

pub const SECTIONS: [&str; 13] = [
    "arithmetic",
    "k",
    "phi",
    "double",
    "simples",
    "covers",
    "ext",
    "cg",
    "yd",
    "nichols",
    "boson",
    "no-deformation",
    "lifting",
];

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub passed: bool,
    pub checks: AxiomReport,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub sections: Vec<Section>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!(
                "[{}] {} ({} checks, {} ms)\n",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                s.checks.checks.len(),
                s.elapsed_ms
            ));
            for c in &s.checks.checks {
                let detail = if c.detail.is_empty() { String::new() } else { format!("  [{}]", c.detail) };
                out.push_str(&format!("    {} {}{}\n", if c.pass { "ok  " } else { "FAIL" }, c.name, detail));
            }
        }
        out.push_str(&format!("overall: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        out
    }
}

/// Output of a subcommand.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

/// Runs the named sections (all when `only` is `None`) concurrently and
/// assembles the report in section order.
pub fn verify_all(only: Option<&str>, max_degree: usize) -> CliResult<VerificationReport> {
    let names: Vec<&str> = match only {
        Some(s) => {
            if !SECTIONS.contains(&s) {
                return Err(format!("unknown section {s}; expected one of {}", SECTIONS.join(", ")).into());
            }
            vec![s]
        }
        None => SECTIONS.to_vec(),
    };
    let sections = par::map_slice(&names, |name| {
        let start = Instant::now();
        let checks = match run_section(name, max_degree) {
            Ok(r) => r,
            Err(e) => {
                let mut r = AxiomReport::default();
                r.push("section ran", false, e.to_string());
                r
            }
        };
        Section {
            name: name.to_string(),
            passed: checks.passed(),
            checks,
            elapsed_ms: start.elapsed().as_millis(),
        }
    });
    let passed = sections.iter().all(|s| s.passed);
    Ok(VerificationReport { sections, passed })
}

fn run_section(name: &str, max_degree: usize) -> CliResult<AxiomReport> {
    match name {
        "arithmetic" => Ok(section_arithmetic()),
        "k" => Ok(section_k()),
        "phi" => section_phi(),
        "double" => section_double(),
        "simples" => Ok(section_simples()),
        "covers" => section_covers(),
        "ext" => section_ext(),
        "cg" => Ok(section_cg()),
        "yd" => section_yd(),
        "nichols" => section_nichols(max_degree),
        "boson" => section_boson(),
        "no-deformation" => section_no_deformation(),
        "lifting" => section_lifting(),
        _ => unreachable!("validated section name"),
    }
}

fn section_arithmetic() -> AxiomReport {
    let mut r = AxiomReport::default();
    let z = Scalar::zeta();
    r.push("ζ⁸ = 1", z.pow(8).is_one(), "");
    r.push("ζ⁴ = −1", z.pow(4) == -Scalar::one(), "");
    r.push("ξ² = −1", xi().pow(2) == -Scalar::one(), "");
    r.push("√2² = 2", sqrt2().pow(2) == Scalar::from_int(2), "");
    let s = Scalar::from_coeffs([
        Rational::new(3, 7).expect("denominator"),
        Rational::from_int(-2),
        Rational::ZERO,
        Rational::new(1, 5).expect("denominator"),
    ]);
    r.push("parse ∘ render = id", s.render().parse::<Scalar>().ok() == Some(s.clone()), s.render());
    r.push("s · s⁻¹ = 1", s.inv().map(|i| (&s * &i).is_one()).unwrap_or(false), "");
    r.push("1/0 rejected", "1/0,0/1,0/1,0/1".parse::<Scalar>().is_err(), "");
    let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let k = m.kernel_basis();
    r.push("rank + nullity = cols", m.rank() + k.cols() == 3, format!("rank {}", m.rank()));
    r.push("A · ker A = 0", m.dot(&k).is_zero(), "");
    r
}

fn section_k() -> AxiomReport {
    let k = build_k();
    let mut r = verify_hopf(&k);
    let w = |s: &str| -> Vec<Scalar> {
        s.chars()
            .map(|c| k.named(&c.to_string()))
            .fold(k.unit.clone(), |acc, g| k.mul(&acc, &g))
    };
    let x = xi();
    let sc = |c: &Scalar, v: Vec<Scalar>| -> Vec<Scalar> { v.iter().map(|e| e * c).collect() };
    let rels: Vec<(&str, Vec<Scalar>, Vec<Scalar>)> = vec![
        ("ab = ξba", w("ab"), sc(&x, w("ba"))),
        ("ac = ξca", w("ac"), sc(&x, w("ca"))),
        ("cb = 0", w("cb"), k.zero()),
        ("bc = 0", w("bc"), k.zero()),
        ("cd = ξdc", w("cd"), sc(&x, w("dc"))),
        ("bd = ξdb", w("bd"), sc(&x, w("db"))),
        ("ad = da", w("ad"), w("da")),
        ("ad = 1", w("ad"), k.unit.clone()),
        ("b² = 0", w("bb"), k.zero()),
        ("c² = 0", w("cc"), k.zero()),
        ("a²c = b", w("aac"), w("b")),
        ("a⁴ = 1", w("aaaa"), k.unit.clone()),
    ];
    for (name, l, rr) in rels {
        r.push(&format!("K: {name}"), l == rr, "");
    }
    let kd = dual(&k);
    let dr = verify_hopf(&kd);
    r.push("K* Hopf axioms", dr.passed(), dr.failures().join("; "));
    let g = group_likes(&kd);
    let all_alpha = g.len() == 4 && (0..4).all(|j| g.contains(&alpha(&kd, j)));
    r.push("G(K*) = {α₀, α₁, α₂, α₃}", all_alpha, format!("{} group-likes", g.len()));
    let gk = group_likes(&k);
    r.push("G(K) = {1, a²}", gk.len() == 2 && gk.contains(&k.named("a^2")), "");
    r
}

fn section_phi() -> CliResult<AxiomReport> {
    let a = build_a4pp();
    let kd = dual(&build_k());
    let mut r = verify_hopf(&a);
    let (chk, _) = hopf_map_check(&a, &kd, &phi_images(&a, &kd))?;
    r.push("φ : 𝒜₄″ → K* Hopf map", chk.is_hopf_map(), chk.detail.clone());
    r.push("φ bijective", chk.rank == 8, format!("rank {}", chk.rank));
    Ok(r)
}

fn section_double() -> CliResult<AxiomReport> {
    let kd = KDouble::build()?;
    let mut r = AxiomReport::default();
    r.push("dim D = 64", kd.d().dim == 64, format!("{}", kd.d().dim));
    let p = verify_presentation(&kd);
    for rel in &p.relations {
        r.push(&format!("D: {}", rel.relation), rel.holds, rel.residual.clone());
    }
    r.push("K^cop factor multiplicative", p.k_factor, "");
    r.push("𝒜₄″ factor anti-multiplicative", p.a4_factor, "");
    r.push("(f⋈1)(1⋈h) = f⋈h", p.factor_products, "");
    r.push("a, b, c, d, g, x span D", p.spans, "");
    let h = verify_double(&kd.double);
    r.push("D Hopf axioms", h.passed(), h.failures().join("; "));
    Ok(r)
}

fn section_simples() -> AxiomReport {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    r.push("16 simples", reg.simples.len() == 16, format!("{}", reg.simples.len()));
    for (l, m) in &reg.simples {
        r.push(&format!("{l} module, absolutely simple"), verify_module(m) && is_abs_simple(m), "");
    }
    let pairs: Vec<(usize, usize)> = (0..16).flat_map(|i| (0..16).map(move |j| (i, j))).collect();
    let ok = par::map_slice(&pairs, |&(i, j)| {
        is_isomorphic(&reg.simples[i].1, &reg.simples[j].1) == (i == j)
    });
    let good = ok.iter().filter(|b| **b).count();
    r.push("pairwise iso ⇔ equal labels", good == 256, format!("{good}/256"));
    let book: usize = reg.simples.iter().map(|(l, _)| l.dim() * reg.cover(*l).dim).sum();
    r.push("Σ dim S · dim P(S) = 64", book == 64, format!("{book}"));
    for (name, pass) in verify_regular_decomposition(&reg).checks {
        r.push(&name, pass, "");
    }
    r
}

fn section_covers() -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    for l in 0..4u8 {
        let c = |k: u8| SimpleLabel::Char((l + k) % 4);
        let p = reg.cover(c(0));
        r.push(&format!("dim P({}) = 4", c(0)), p.dim == 4, "");
        r.push(&format!("P({}) indecomposable", c(0)), is_indecomposable(p), "");
        let series = composition_series(&reg, p)?;
        let mut middle = series.get(1..3).map(|m| m.to_vec()).unwrap_or_default();
        middle.sort();
        let mut expect_mid = vec![c(1), c(3)];
        expect_mid.sort();
        let ordered = l != 0 || series == vec![c(0), c(3), c(1), c(0)];
        r.push(
            &format!("P({}) composition factors", c(0)),
            series.len() == 4 && series[0] == c(0) && series[3] == c(0) && middle == expect_mid && ordered,
            series.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "),
        );
        let simple = reg.simple(c(0));
        r.push(
            &format!("Soc ≅ Top ≅ {}", c(0)),
            is_isomorphic(&socle_module(p), simple) && is_isomorphic(&top(p), simple),
            "",
        );
        let layers = radical_layers(&reg, p)?;
        r.push(&format!("P({}) has Loewy length 3", c(0)), layers.len() == 3, "");
        let p3 = restrict(p, &tail_span(3));
        r.push(&format!("M⁺ ≅ P₃({})", c(0)), is_isomorphic(&p3, &make_m_plus(l as i64)), "");
    }
    Ok(r)
}

fn section_ext() -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    let table = ext_table(&reg)?;
    let (mut chars_ok, mut v_ok, mut v_count) = (0, 0, 0);
    for (s, t, n) in &table {
        match (s, t) {
            (SimpleLabel::Char(k), SimpleLabel::Char(l)) => {
                let expect = usize::from((k + 1) % 4 == *l || (l + 1) % 4 == *k);
                chars_ok += usize::from(*n == expect);
            }
            _ => {
                v_count += 1;
                v_ok += usize::from(*n == 0);
            }
        }
    }
    r.push("Ext¹(χᵏ, χˡ) = 1 iff k = ℓ ± 1", chars_ok == 16, format!("{chars_ok}/16"));
    r.push("Ext¹ involving V_{i,j} vanish", v_ok == v_count && v_count == 240, format!("{v_ok}/{v_count}"));
    let d = separation_diagram(&reg)?;
    r.push("two affine A₃ components", d.affine_a3_count() == 2, "");
    let isolated: Vec<String> = d
        .components()
        .into_iter()
        .filter(|c| c.len() == 1)
        .map(|c| d.vertices[c[0]].trim_end_matches('\'').to_string())
        .collect();
    let mut labels = isolated.clone();
    labels.sort();
    labels.dedup();
    r.push(
        "isolated vertices are the twelve V_{i,j}",
        isolated.iter().all(|v| v.starts_with("V_")) && labels.len() == 12,
        format!("{} vertices, {} labels", isolated.len(), labels.len()),
    );
    Ok(r)
}

/// `P(k_{χ^{i+k+3}})` when `2(i+k) + j + l ≡ 0 (mod 4)`, otherwise
/// `V_{i+k, j+l} ⊕ V_{i+k+3, j+l+2}`.
pub fn cg_rule(i: u8, j: u8, k: u8, l: u8) -> CgDecomposition {
    if (2 * (i + k) + j + l).is_multiple_of(4) {
        CgDecomposition::Projective((i + k + 3) % 4)
    } else {
        CgDecomposition::Sum(((i + k) % 4, (j + l) % 4), ((i + k + 3) % 4, (j + l + 2) % 4))
    }
}

fn cg_rows() -> Vec<((u8, u8), (u8, u8), Result<CgDecomposition, String>)> {
    let reg = Registry::shared();
    let pairs: Vec<((u8, u8), (u8, u8))> = lambda()
        .into_iter()
        .flat_map(|a| lambda().into_iter().map(move |b| (a, b)))
        .collect();
    par::map_slice(&pairs, |&((i, j), (k, l))| {
        ((i, j), (k, l), decompose_cg(&reg, i, j, k, l).map_err(|e| e.to_string()))
    })
}

fn section_cg() -> AxiomReport {
    let mut r = AxiomReport::default();
    let rows = cg_rows();
    let good = rows
        .iter()
        .filter(|((i, j), (k, l), d)| d.as_ref().ok() == Some(&cg_rule(*i, *j, *k, *l)))
        .count();
    r.push("144 tensor products decompose by the rule", good == 144, format!("{good}/144"));
    r
}

fn section_yd() -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    let objs = registry_yd(&reg)?;
    let mut mods: Vec<&AModule> = reg.simples.iter().map(|(_, m)| m).collect();
    mods.extend(reg.char_covers.iter());
    for ((name, y), m) in objs.iter().zip(mods) {
        let v = verify_yd(y);
        r.push(&format!("{name} YD axioms"), v.passed(), v.failures().join("; "));
        r.push(&format!("{name} Yang–Baxter"), yang_baxter(y), "");
        r.push(&format!("{name} recovers the D-action"), round_trip(m, y), "");
        r.push(&format!("{name} coaction routes agree"), coaction_generic(m)? == y.blocks(), "");
    }
    let sums = par::map_range(objs.len(), |p| {
        objs[p + 1..].iter().all(|(_, y2)| yang_baxter(&objs[p].1.direct_sum(y2)))
    });
    r.push("Yang–Baxter on pairwise sums", sums.iter().all(|b| *b), "");
    Ok(r)
}

const FINITE_2D: [(u8, u8); 4] = [(2, 1), (2, 3), (3, 1), (3, 3)];

fn yd_of(reg: &Registry, l: SimpleLabel) -> CliResult<YDModule> {
    let mut y = from_double_module(reg.simple(l))?;
    y.name = l.to_string();
    Ok(y)
}

fn section_nichols(max_degree: usize) -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    for j in [1u8, 3] {
        let l = SimpleLabel::Char(j);
        let rep = hilbert(&BraidedSpace::from_yd(&yd_of(&reg, l)?)?, max_degree);
        r.push(&format!("dim 𝔅({l}) = 2"), rep.total == Total::Finite(2), format!("{:?}", rep.graded_dims));
    }
    for (i, j) in FINITE_2D {
        let l = SimpleLabel::TwoDim(i, j);
        let bs = BraidedSpace::from_yd(&yd_of(&reg, l)?)?;
        let rep = hilbert(&bs, max_degree);
        r.push(
            &format!("𝔅({l}) has Hilbert series (1,2,2,2,1)"),
            rep.total == Total::Finite(8) && rep.graded_dims[..5] == [1, 2, 2, 2, 1],
            format!("{:?}", rep.graded_dims),
        );
        let stated = stated_degree2_relations(i, j).ok_or("no stated relations")?;
        r.push(
            &format!("𝔅({l}) degree-2 relations"),
            same_span(&degree2_relations(&bs).col_vecs(), &stated, 4),
            "",
        );
        r.push(
            &format!("𝔅({l}): y⁴ = 0"),
            check_relation(&bs, &tensor_power(&unit_vec(2, 1), 4))?,
            "",
        );
    }
    let sweep = witness_sweep(&reg)?;
    for e in &sweep {
        r.push(&format!("{}: fixed-vector witness", e.space), e.validates, "");
    }
    r.push(
        "witness sweep covers Λ′, k_ε, k_χ², P(k_χʲ) and the six finite cases",
        sweep.len() == lambda_prime().len() + 2 + 4 + 6,
        format!("{} entries", sweep.len()),
    );
    let cases = [(1u8, (3u8, 1u8), (0u8, 3u8)), (1, (3, 3), (0, 1)), (3, (2, 1), (1, 3)), (3, (2, 3), (1, 1))];
    for (ch, (i, j), (p, q)) in cases {
        let (got, _) = ad_degree2(
            &reg,
            &yd_of(&reg, SimpleLabel::Char(ch))?,
            &yd_of(&reg, SimpleLabel::TwoDim(i, j))?,
        )?;
        r.push(
            &format!("ad {}({}) ≅ {}", SimpleLabel::Char(ch), SimpleLabel::TwoDim(i, j), SimpleLabel::TwoDim(p, q)),
            got == SimpleLabel::TwoDim(p, q),
            got.to_string(),
        );
    }
    let c1 = yd_of(&reg, SimpleLabel::Char(1))?;
    let c3 = yd_of(&reg, SimpleLabel::Char(3))?;
    r.push("𝔅(k_χ ⊕ k_χ³) is exterior", exterior_check(&[c1, c3])?, "");
    Ok(r)
}

/// The six YD modules with finite Nichols algebra used for bosonization.
pub fn boson_targets() -> Vec<SimpleLabel> {
    vec![
        SimpleLabel::Char(1),
        SimpleLabel::Char(3),
        SimpleLabel::TwoDim(2, 1),
        SimpleLabel::TwoDim(2, 3),
        SimpleLabel::TwoDim(3, 1),
        SimpleLabel::TwoDim(3, 3),
    ]
}

fn section_boson() -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    let reports = par::map_slice(&boson_targets(), |l| -> CliResult<(SimpleLabel, usize, AxiomReport, AxiomReport)> {
        let b = build_nichols_hopf(&yd_of(&reg, *l)?, 6)?;
        let bz = bosonize(&b)?;
        Ok((*l, bz.hopf.dim, verify_hopf(&bz.hopf), check_inclusion_projection(&bz)?))
    });
    for rep in reports {
        let (l, dim, h, ip) = rep?;
        let expect = 8 * if l.dim() == 1 { 2 } else { 8 };
        r.push(&format!("dim 𝔅({l})#K = {expect}"), dim == expect, format!("{dim}"));
        r.push(&format!("𝔅({l})#K Hopf axioms"), h.passed(), h.failures().join("; "));
        r.push(&format!("𝔅({l})#K: ι, π Hopf, π∘ι = id"), ip.passed(), ip.failures().join("; "));
    }
    Ok(r)
}

fn section_no_deformation() -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    for l in &boson_targets()[..4] {
        let bz = bosonize(&build_nichols_hopf(&yd_of(&reg, *l)?, 6)?)?;
        let rep = no_deformation_check(&bz);
        for c in rep.checks.checks {
            r.push(&format!("{l}: {}", c.name), c.pass, c.detail);
        }
    }
    Ok(r)
}

fn section_lifting() -> CliResult<AxiomReport> {
    let reg = Registry::shared();
    let mut r = AxiomReport::default();
    let runs: Vec<(Family, i64)> = [Family::A31, Family::A33]
        .into_iter()
        .flat_map(|f| [0, 1, 2].into_iter().map(move |m| (f, m)))
        .collect();
    for (fam, mu) in runs {
        let rep = lifting_verification(fam, &Scalar::from_int(mu))?;
        for c in rep.checks.checks {
            r.push(&format!("{fam}({mu}): {}", c.name), c.pass, c.detail);
        }
    }
    for (fam, v) in [(Family::A31, (3, 1)), (Family::A33, (3, 3))] {
        let p = build_lifting(fam, &Scalar::zero())?;
        let bz = bosonize(&build_nichols_hopf(&yd_of(&reg, SimpleLabel::TwoDim(v.0, v.1))?, 6)?)?;
        let (iso, _) = compare_with_bosonization(&p, &bz)?;
        r.push(
            &format!("{fam}(0) ≅ 𝔅({})#K", SimpleLabel::TwoDim(v.0, v.1)),
            iso,
            "",
        );
    }
    for mu in [0, 1, 2] {
        let mu = Scalar::from_int(mu);
        for l in fourth_roots() {
            let bad: Vec<String> = [("W", w_lambda(&l, &mu).to_vec()), ("U", u_lambda(&l, &mu).to_vec())]
                .iter()
                .flat_map(|(n, m)| {
                    relation_residuals(m, &mu)
                        .into_iter()
                        .filter(|(_, ok)| !ok)
                        .map(move |(rel, _)| format!("{n}: {rel}"))
                })
                .collect();
            r.push(
                &format!("W_λ, U_λ relations (λ = {}, μ = {})", l.pretty(), mu.pretty()),
                bad.is_empty(),
                bad.join("; "),
            );
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// Subcommands

fn hopf_text(h: &FinHopf, title: &str) -> String {
    let mut s = format!("{title}: dim {}\nbasis: {}\n", h.dim, h.basis_names.join(", "));
    if h.dim <= 8 {
        s.push_str("multiplication:\n");
        for i in 0..h.dim {
            for j in 0..h.dim {
                let p = h.mul(&h.e(i), &h.e(j));
                s.push_str(&format!("  {} · {} = {}\n", h.basis_names[i], h.basis_names[j], h.show(&p)));
            }
        }
    }
    s.push_str("comultiplication:\n");
    for i in 0..h.dim.min(16) {
        s.push_str(&format!("  Δ({}) = {}\n", h.basis_names[i], h.show_tensor(&h.comul(&h.e(i)))));
    }
    if let Some(a) = &h.antipode {
        s.push_str("antipode:\n");
        for i in 0..h.dim.min(16) {
            s.push_str(&format!("  S({}) = {}\n", h.basis_names[i], h.show(&a.col(i))));
        }
    }
    s
}

pub fn cmd_build_k() -> CliResult<Output> {
    let k = build_k();
    let rep = verify_hopf(&k);
    let mut text = hopf_text(&k, "K");
    text.push_str(&format!("Hopf axioms: {}\n", if rep.passed() { "pass" } else { "FAIL" }));
    Ok(Output {
        json: serde_json::to_value(&k)?,
        text,
        passed: rep.passed(),
    })
}

pub fn cmd_double() -> CliResult<Output> {
    let kd = KDouble::build()?;
    let p = verify_presentation(&kd);
    let h = verify_double(&kd.double);
    let mut text = format!("D(K^cop): dim {}\n", kd.d().dim);
    for rel in &p.relations {
        text.push_str(&format!("  {} {}\n", if rel.holds { "ok  " } else { "FAIL" }, rel.relation));
    }
    text.push_str(&format!("Hopf axioms: {}\n", if h.passed() { "pass" } else { "FAIL" }));
    Ok(Output {
        json: json!({ "presentation": p, "hopf": kd.d() }),
        text,
        passed: p.passed() && h.passed(),
    })
}

pub fn cmd_simples() -> CliResult<Output> {
    let reg = Registry::shared();
    let mut text = String::new();
    let mut mods = Vec::new();
    let mut passed = true;
    for (l, m) in &reg.simples {
        let ok = verify_module(m) && is_abs_simple(m);
        passed &= ok;
        text.push_str(&format!("{l}: dim {}, projective cover dim {}{}\n", m.dim, reg.cover(*l).dim, if ok { "" } else { " FAIL" }));
        mods.push(json!({ "label": l, "module": m.to_json() }));
    }
    Ok(Output {
        json: Value::Array(mods),
        text,
        passed,
    })
}

pub fn cmd_ext_quiver() -> CliResult<Output> {
    let reg = Registry::shared();
    let table = ext_table(&reg)?;
    let d = separation_diagram(&reg)?;
    let mut text = String::from("nonzero Ext¹:\n");
    for (s, t, n) in table.iter().filter(|(_, _, n)| *n > 0) {
        text.push_str(&format!("  Ext¹({s}, {t}) = {n}\n"));
    }
    text.push_str(&d.to_dot());
    let passed = d.affine_a3_count() == 2;
    Ok(Output {
        json: json!({ "ext": table, "separation_diagram": d }),
        text,
        passed,
    })
}

pub fn cmd_cg_table() -> CliResult<Output> {
    let rows = cg_rows();
    let mut text = String::new();
    let mut js = Vec::new();
    let mut passed = true;
    for ((i, j), (k, l), d) in rows {
        let expect = cg_rule(i, j, k, l);
        let ok = d.as_ref().ok() == Some(&expect);
        passed &= ok;
        let shown = match &d {
            Ok(x) => x.to_string(),
            Err(e) => format!("error: {e}"),
        };
        text.push_str(&format!(
            "{} ⊗ {} ≅ {}{}\n",
            SimpleLabel::TwoDim(i, j),
            SimpleLabel::TwoDim(k, l),
            shown,
            if ok { "" } else { "  MISMATCH" }
        ));
        js.push(json!({ "left": [i, j], "right": [k, l], "decomposition": d.ok(), "matches_rule": ok }));
    }
    Ok(Output {
        json: Value::Array(js),
        text,
        passed,
    })
}

fn squash(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        match ch {
            'ε' => out.push_str("eps"),
            'χ' => out.push_str("chi"),
            c if c.is_ascii_alphanumeric() => out.push(c.to_ascii_lowercase()),
            _ => {}
        }
    }
    out
}

/// Matches a registry name against user input, ignoring punctuation, so `V21`
/// selects `V_{2,1}` and `chi3` selects `k_χ^3`.
pub fn module_matches(name: &str, query: &str) -> bool {
    let (n, q) = (squash(name), squash(query));
    n == q || n.strip_prefix('k') == Some(q.as_str()) || n.strip_prefix("pk") == Some(q.strip_prefix('p').unwrap_or("-"))
}

fn select_yd(module: Option<&str>) -> CliResult<Vec<(String, YDModule)>> {
    let all = registry_yd(&Registry::shared())?;
    match module {
        None => Ok(all),
        Some(m) => {
            let hit: Vec<_> = all.into_iter().filter(|(n, _)| module_matches(n, m)).collect();
            if hit.is_empty() {
                Err(format!("unknown module {m}").into())
            } else {
                Ok(hit)
            }
        }
    }
}

pub fn cmd_yd(module: Option<&str>) -> CliResult<Output> {
    let objs = select_yd(module)?;
    let mut text = String::new();
    let mut js = Vec::new();
    let mut passed = true;
    for (name, y) in &objs {
        let ok = verify_yd(y).passed() && yang_baxter(y);
        passed &= ok;
        text.push_str(&format!("{name}: dim {}, YD {}, braiding:\n", y.dim, if ok { "ok" } else { "FAIL" }));
        let c = braiding(y, y);
        for col in 0..c.cols() {
            let (r, s) = (col / y.dim, col % y.dim);
            let terms: Vec<String> = (0..c.rows())
                .filter(|row| !c.get(*row, col).is_zero())
                .map(|row| format!("({})·e{}⊗e{}", c.get(row, col).pretty(), row / y.dim + 1, row % y.dim + 1))
                .collect();
            text.push_str(&format!("  c(e{}⊗e{}) = {}\n", r + 1, s + 1, terms.join(" + ")));
        }
        js.push(serde_json::to_value(y.to_json())?);
    }
    Ok(Output {
        json: Value::Array(js),
        text,
        passed,
    })
}

pub fn cmd_nichols(module: Option<&str>, max_degree: usize) -> CliResult<Output> {
    let objs = select_yd(module)?;
    let reports = par::map_slice(&objs, |(name, y)| -> CliResult<(String, crate::nichols::NicholsReport)> {
        Ok((name.clone(), hilbert(&BraidedSpace::from_yd(y)?, max_degree)))
    });
    let mut text = String::new();
    let mut js = Vec::new();
    for rep in reports {
        let (name, rep) = rep?;
        text.push_str(&format!("𝔅({name}): graded dims {:?}, total {:?}\n", rep.graded_dims, rep.total));
        js.push(json!({ "space": name, "report": rep }));
    }
    Ok(Output {
        json: Value::Array(js),
        text,
        passed: true,
    })
}

pub fn cmd_boson(module: Option<&str>, dump: Option<&str>) -> CliResult<Output> {
    let reg = Registry::shared();
    let targets: Vec<SimpleLabel> = match module {
        None => boson_targets(),
        Some(m) => boson_targets().into_iter().filter(|l| module_matches(&l.to_string(), m)).collect(),
    };
    if targets.is_empty() {
        return Err(format!("no finite Nichols algebra registered for {}", module.unwrap_or("")).into());
    }
    let mut text = String::new();
    let mut js = Vec::new();
    let mut passed = true;
    for l in targets {
        let bz = bosonize(&build_nichols_hopf(&yd_of(&reg, l)?, 6)?)?;
        let h = verify_hopf(&bz.hopf);
        let ip = check_inclusion_projection(&bz)?;
        passed &= h.passed() && ip.passed();
        text.push_str(&format!(
            "𝔅({l})#K: dim {}, Hopf axioms {}, ι/π {}\n",
            bz.hopf.dim,
            if h.passed() { "pass" } else { "FAIL" },
            if ip.passed() { "pass" } else { "FAIL" }
        ));
        if let Some(path) = dump {
            std::fs::write(path, serde_json::to_string_pretty(&bz.hopf)?)?;
        }
        js.push(json!({ "module": l, "dim": bz.hopf.dim, "hopf_axioms": h, "inclusion_projection": ip }));
    }
    Ok(Output {
        json: Value::Array(js),
        text,
        passed,
    })
}

/// Accepts either the four-coefficient scalar encoding or a single rational.
pub fn parse_mu(s: &str) -> CliResult<Scalar> {
    if s.contains(',') {
        return Ok(s.parse::<Scalar>()?);
    }
    let r: Rational = if s.contains('/') { s.parse()? } else { format!("{s}/1").parse()? };
    Ok(Scalar::from_rational(r))
}

pub fn parse_family(s: &str) -> CliResult<Family> {
    match s.replace(' ', "").as_str() {
        "3,1" => Ok(Family::A31),
        "3,3" => Ok(Family::A33),
        other => Err(format!("unknown family {other}; expected 3,1 or 3,3").into()),
    }
}

pub fn cmd_lifting(family: Family, mu: &Scalar, dump: Option<&str>, certify: bool) -> CliResult<Output> {
    let rep = lifting_verification(family, mu)?;
    let mut checks = rep.checks.clone();
    if certify {
        let p = build_lifting(family, mu)?;
        for l in fourth_roots() {
            for (n, m) in [("W", w_lambda(&l, mu).to_vec()), ("U", u_lambda(&l, mu).to_vec())] {
                let module = representation_module(&p, n, &m)?;
                checks.push(&format!("{n}_λ module (λ = {})", l.pretty()), verify_module(&module), "");
            }
        }
        if mu.is_zero() {
            let v = match family {
                Family::A31 => SimpleLabel::TwoDim(3, 1),
                Family::A33 => SimpleLabel::TwoDim(3, 3),
            };
            let bz = bosonize(&build_nichols_hopf(&yd_of(&Registry::shared(), v)?, 6)?)?;
            let (iso, _) = compare_with_bosonization(&p, &bz)?;
            checks.push(&format!("≅ 𝔅({v})#K"), iso, "");
        }
        if let Some(path) = dump {
            std::fs::write(path, serde_json::to_string_pretty(&p.hopf)?)?;
        }
    } else if let Some(path) = dump {
        std::fs::write(path, serde_json::to_string_pretty(&build_lifting(family, mu)?.hopf)?)?;
    }
    let mut text = format!("{family}({}): dim 64\n", mu.pretty());
    for c in &checks.checks {
        let detail = if c.detail.is_empty() { String::new() } else { format!("  [{}]", c.detail) };
        text.push_str(&format!("  {} {}{}\n", if c.pass { "ok  " } else { "FAIL" }, c.name, detail));
    }
    Ok(Output {
        json: json!({ "report": rep, "checks": checks }),
        text,
        passed: checks.passed(),
    })
}

/// JSON kinds accepted by `load`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JsonKind {
    Hopf,
    Module,
    Yd,
    Matrix,
    Scalar,
}

impl std::str::FromStr for JsonKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hopf" => Ok(JsonKind::Hopf),
            "module" => Ok(JsonKind::Module),
            "yd" => Ok(JsonKind::Yd),
            "matrix" => Ok(JsonKind::Matrix),
            "scalar" => Ok(JsonKind::Scalar),
            _ => Err(format!("unknown kind {s}")),
        }
    }
}

/// Parses a JSON document of the given kind and re-serializes it.
pub fn load_json(kind: JsonKind, src: &str) -> CliResult<(String, Value)> {
    Ok(match kind {
        JsonKind::Hopf => {
            let h: FinHopf = serde_json::from_str(src)?;
            let ok = verify_hopf(&h).passed();
            (format!("Hopf algebra of dim {}, axioms {}", h.dim, if ok { "pass" } else { "FAIL" }), serde_json::to_value(&h)?)
        }
        JsonKind::Module => {
            let j: ModuleJson = serde_json::from_str(src)?;
            let m = AModule::from_json(&d_algebra(), j)?;
            (format!("D-module of dim {}", m.dim), serde_json::to_value(m.to_json())?)
        }
        JsonKind::Yd => {
            let j: YdJson = serde_json::from_str(src)?;
            let y = YDModule::from_json(j)?;
            (format!("YD module {} of dim {}", y.name, y.dim), serde_json::to_value(y.to_json())?)
        }
        JsonKind::Matrix => {
            let m: Matrix = serde_json::from_str(src)?;
            (format!("{}×{} matrix", m.rows(), m.cols()), serde_json::to_value(&m)?)
        }
        JsonKind::Scalar => {
            let s: Scalar = serde_json::from_str(src)?;
            (s.pretty(), serde_json::to_value(&s)?)
        }
    })
}
