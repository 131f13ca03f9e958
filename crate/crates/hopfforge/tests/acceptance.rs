//! One test per acceptance criterion. Each prints a single pass/fail line.

mod common;

use common::k_tables::{compare_k, compare_kd};
use common::properties::*;
use common::yd_tables::*;
use common::cg_formula;
use hopfforge::boson::*;
use hopfforge::cyclo::{sqrt2, xi, xi_pow, sign_pow, Scalar};
use hopfforge::drinfeld::KDouble;
use hopfforge::hopf::*;
use hopfforge::linalg::{unit_vec, vec_add, vec_scale, Matrix, Vector};
use hopfforge::modrep::*;
use hopfforge::nichols::*;
use hopfforge::yd::*;
use proptest::strategy::{Just, Strategy};
use proptest::test_runner::{Config, TestRunner};
use std::time::{Duration, Instant};

/// Runs a criterion, prints one line and fails the test on any failed item
/// or on exceeding the time budget.
fn criterion(n: u32, title: &str, budget_s: u64, body: impl FnOnce() -> Vec<(String, bool)>) {
    let start = Instant::now();
    let items = body();
    let elapsed = start.elapsed();
    let failed: Vec<&String> = items.iter().filter(|(_, ok)| !ok).map(|(s, _)| s).collect();
    let in_time = elapsed <= Duration::from_secs(budget_s);
    let pass = failed.is_empty() && in_time;
    println!(
        "criterion {n:>2} {title}: {} ({} checks, {:.2} s of {budget_s} s){}",
        if pass { "PASS" } else { "FAIL" },
        items.len(),
        elapsed.as_secs_f64(),
        if failed.is_empty() { String::new() } else { format!(" failed: {failed:?}") }
    );
    assert!(pass, "criterion {n} failed: {failed:?}, elapsed {elapsed:?}");
}

fn item(name: impl Into<String>, ok: bool) -> (String, bool) {
    (name.into(), ok)
}

#[test]
fn c01_k_integrity() {
    criterion(1, "K tables and Hopf axioms", 1, || {
        let k = build_k();
        let mut out: Vec<_> = compare_k(&k).into_iter().map(|m| item(m, false)).collect();
        out.push(item("table entries", true));
        out.push(item("verify_hopf(K)", verify_hopf(&k).passed()));
        out
    });
}

#[test]
fn c02_dual_and_phi() {
    criterion(2, "K*, G(K*) and φ", 1, || {
        let kd = dual(&build_k());
        let mut out: Vec<_> = compare_kd(&kd).into_iter().map(|m| item(m, false)).collect();
        // αⱼ = 1* + ξ⁻ʲa* + ξʲd* + (−1)ʲ(a²)*
        let alphas: Vec<Vector> = (0..4)
            .map(|j| {
                kd.elem(&[
                    (Scalar::one(), "1*"),
                    (xi_pow(-j), "a*"),
                    (xi_pow(j), "d*"),
                    (sign_pow(j), "(a^2)*"),
                ])
            })
            .collect();
        let g = group_likes(&kd);
        out.push(item("|G(K*)| = 4", g.len() == 4));
        out.push(item("G(K*) = {αⱼ}", alphas.iter().all(|a| g.contains(a))));
        let a4 = build_a4pp();
        let (chk, _) = hopf_map_check(&a4, &kd, &phi_images(&a4, &kd)).unwrap();
        out.push(item("φ Hopf map", chk.is_hopf_map()));
        out.push(item("φ bijective", chk.rank == 8));
        out
    });
}

#[test]
fn c03_double() {
    criterion(3, "D(K^cop) presentation", 5, || {
        let kd = KDouble::build().unwrap();
        let d = kd.d();
        let w = |s: &str| kd.word(s);
        let lin = |t: &[(Scalar, &str)]| {
            t.iter().fold(d.zero(), |acc, (c, s)| vec_add(&acc, &vec_scale(&w(s), c)))
        };
        let one = Scalar::one;
        let x = xi();
        let r = &sqrt2() * &x;
        let zero = d.zero();
        let rels: Vec<(&str, Vector, Vector)> = vec![
            ("ax + ξxa = √2ξ(b + gc)", lin(&[(one(), "ax"), (x.clone(), "xa")]), lin(&[(r.clone(), "b"), (r.clone(), "gc")])),
            ("bx − ξxb = √2ξ(a − gd)", lin(&[(one(), "bx"), (-&x, "xb")]), lin(&[(r.clone(), "a"), (-&r, "gd")])),
            ("ag = ga", w("ag"), w("ga")),
            ("bg = −gb", w("bg"), lin(&[(-one(), "gb")])),
            ("cg = −gc", w("cg"), lin(&[(-one(), "gc")])),
            ("dg = gd", w("dg"), w("gd")),
            ("cx + ξxc = √2ξ(d − ga)", lin(&[(one(), "cx"), (x.clone(), "xc")]), lin(&[(r.clone(), "d"), (-&r, "ga")])),
            ("dx − ξxd = √2ξ(c + gb)", lin(&[(one(), "dx"), (-&x, "xd")]), lin(&[(r.clone(), "c"), (r.clone(), "gb")])),
            ("ab = ξba", w("ab"), lin(&[(x.clone(), "ba")])),
            ("ac = ξca", w("ac"), lin(&[(x.clone(), "ca")])),
            ("bc = 0", w("bc"), zero.clone()),
            ("cb = 0", w("cb"), zero.clone()),
            ("cd = ξdc", w("cd"), lin(&[(x.clone(), "dc")])),
            ("bd = ξdb", w("bd"), lin(&[(x.clone(), "db")])),
            ("ad = 1", w("ad"), d.unit.clone()),
            ("da = 1", w("da"), d.unit.clone()),
            ("b² = 0", w("bb"), zero.clone()),
            ("c² = 0", w("cc"), zero.clone()),
            ("a²c = b", w("aac"), w("b")),
            ("a⁴ = 1", w("aaaa"), d.unit.clone()),
            ("g⁴ = 1", w("gggg"), d.unit.clone()),
            ("x² = g² − 1", w("xx"), lin(&[(one(), "gg"), (-one(), "")])),
            ("gx = −xg", w("gx"), lin(&[(-one(), "xg")])),
        ];
        let mut out = vec![item("dim D = 64", d.dim == 64)];
        for (name, l, r) in rels {
            out.push(item(name, l == r));
        }
        let gens: Vec<Vector> = ["a", "b", "c", "d", "g", "x"].iter().map(|g| kd.gen(g).clone()).collect();
        let span = generated_subalgebra(d, &Subspace::new(d.dim, &gens));
        out.push(item("generators span D", span.dim() == 64));
        out
    });
}

#[test]
fn c04_simples() {
    criterion(4, "simple D-modules", 30, || {
        let reg = Registry::shared();
        let mut out = vec![item("16 simples", reg.simples.len() == 16)];
        for (l, m) in &reg.simples {
            out.push(item(format!("{l} module"), verify_module(m)));
            out.push(item(format!("{l} absolutely simple"), is_abs_simple(m)));
        }
        for (a, ma) in &reg.simples {
            for (b, mb) in &reg.simples {
                out.push(item(format!("{a} ≅ {b} iff equal"), is_isomorphic(ma, mb) == (a == b)));
            }
        }
        let chars: usize = (0..4).map(|j| reg.cover(SimpleLabel::Char(j)).dim).sum();
        let twos: usize = lambda().iter().map(|&(i, j)| 2 * reg.cover(SimpleLabel::TwoDim(i, j)).dim).sum();
        out.push(item("4·4 + 12·2·2 = 64", chars == 16 && twos == 48 && chars + twos == 64));
        out
    });
}

#[test]
fn c05_covers() {
    criterion(5, "projective covers", 10, || {
        let reg = Registry::shared();
        let e = |j: u8| SimpleLabel::Char(j);
        let p = reg.cover(e(0));
        let mut out = vec![
            item("P indecomposable", is_indecomposable(p)),
            item("composition factors [ε, χ³, χ, ε]", composition_series(&reg, p).unwrap() == vec![e(0), e(3), e(1), e(0)]),
            item("Soc P ≅ k_ε", is_isomorphic(&socle_module(p), reg.simple(e(0)))),
            item("Top P ≅ k_ε", is_isomorphic(&top(p), reg.simple(e(0)))),
        ];
        for l in 0..4u8 {
            let pl = reg.cover(e(l));
            out.push(item(format!("dim P(χ^{l}) = 4"), pl.dim == 4));
            let p3 = restrict(pl, &tail_span(3));
            out.push(item(format!("M⁺_{l} ≅ P₃(χ^{l})"), is_isomorphic(&p3, &make_m_plus(l as i64))));
        }
        out
    });
}

#[test]
fn c06_ext_quiver() {
    criterion(6, "Ext¹ and separation diagram", 30, || {
        let reg = Registry::shared();
        let mut out = Vec::new();
        let mut v_count = 0;
        for (s, t, n) in ext_table(&reg).unwrap() {
            match (s, t) {
                (SimpleLabel::Char(k), SimpleLabel::Char(l)) => {
                    let expect = usize::from((k + 1) % 4 == l || (l + 1) % 4 == k);
                    out.push(item(format!("Ext¹({s}, {t}) = {expect}"), n == expect));
                }
                _ => {
                    v_count += 1;
                    out.push(item(format!("Ext¹({s}, {t}) = 0"), n == 0));
                }
            }
        }
        out.push(item("all pairs involving some V_{i,j}", v_count == 16 * 16 - 4 * 4));
        let d = separation_diagram(&reg).unwrap();
        out.push(item("two affine A₃ components", d.affine_a3_count() == 2));
        let isolated: Vec<String> = d
            .components()
            .into_iter()
            .filter(|c| c.len() == 1)
            .map(|c| d.vertices[c[0]].trim_end_matches('\'').to_string())
            .collect();
        let mut labels = isolated.clone();
        labels.sort();
        labels.dedup();
        out.push(item("isolated vertices are V-vertices", isolated.iter().all(|v| v.starts_with("V_"))));
        out.push(item("12 isolated V labels", labels.len() == 12));
        out.push(item("no other components", d.components().len() == 2 + isolated.len()));
        out
    });
}

#[test]
fn c07_clebsch_gordan() {
    criterion(7, "Clebsch–Gordan sweep", 60, || {
        let reg = Registry::shared();
        let mut out = Vec::new();
        for (i, j) in lambda() {
            for (k, l) in lambda() {
                let got = decompose_cg(&reg, i, j, k, l);
                out.push(item(
                    format!("V_{i},{j} ⊗ V_{k},{l}"),
                    got.ok() == Some(cg_formula(i, j, k, l)),
                ));
            }
        }
        out.push(item("144 pairs", out.len() == 144));
        out
    });
}

#[test]
fn c08_yd_regression() {
    criterion(8, "YD structures and braidings", 30, || {
        let reg = Registry::shared();
        let k = k_algebra();
        let mut out = Vec::new();
        for j in 0..4i64 {
            let y = from_double_module(&make_char_module(j)).unwrap();
            let a = |n: &str| y.action[k.index_of(n).unwrap()].get(0, 0).clone();
            out.push(item(
                format!("k_χ^{j} action"),
                a("a") == xi_pow(j) && a("b").is_zero() && a("c").is_zero() && a("d") == xi_pow(-j),
            ));
            let a2j = k.pow(&k.named("a^2"), j as usize);
            let coaction = Matrix::from_cols(8, &[a2j]);
            out.push(item(format!("δ on k_χ^{j}"), y.coaction == coaction));
            out.push(item(format!("c on k_χ^{j}"), braiding(&y, &y) == Matrix::diag(&[sign_pow(j)])));
        }
        for (i, j) in lambda() {
            let y = from_double_module(&make_vij(i as i64, j as i64).unwrap()).unwrap();
            out.push(item(format!("δ on V_{i},{j}"), y.coaction == vij_coaction_table(i as i64, j as i64)));
            out.push(item(format!("c on V_{i},{j}"), braiding(&y, &y) == vij_braiding_table(i as i64, j as i64)));
        }
        for j in 0..4 {
            let y = projcover_yd(j);
            out.push(item(format!("δ on P(χ^{j})"), y.coaction == p_coaction_table(j)));
            out.push(item(format!("c on P(χ^{j})"), braiding(&y, &y) == p_braiding_table(j)));
        }
        for (name, y) in registry_yd(&reg).unwrap() {
            out.push(item(format!("{name} YD"), verify_yd(&y).passed()));
            out.push(item(format!("{name} YBE"), yang_baxter(&y)));
        }
        out
    });
}

/// Independent count: monomials `xⁱyʲ` with `i ≤ 1`, `j ≤ 3`, graded by `i + j`.
fn monomial_profile() -> Vec<usize> {
    let mut dims = vec![0; 5];
    for i in 0..2 {
        for j in 0..4 {
            dims[i + j] += 1;
        }
    }
    dims
}

#[test]
fn c09_nichols_dimensions() {
    criterion(9, "Nichols algebra dimensions", 60, || {
        let reg = Registry::shared();
        let bs = |l: SimpleLabel| BraidedSpace::from_yd(&from_double_module(reg.simple(l)).unwrap()).unwrap();
        let mut out = Vec::new();
        for j in [1u8, 3] {
            let rep = hilbert(&bs(SimpleLabel::Char(j)), 6);
            out.push(item(format!("dim 𝔅(k_χ^{j}) = 2"), rep.total == Total::Finite(2)));
        }
        let profile = monomial_profile();
        for (i, j) in [(2u8, 1u8), (2, 3), (3, 1), (3, 3)] {
            let b = bs(SimpleLabel::TwoDim(i, j));
            let rep = hilbert(&b, 6);
            out.push(item(format!("dim 𝔅(V_{i},{j}) = 8"), rep.total == Total::Finite(8)));
            out.push(item(format!("𝔅(V_{i},{j}) profile"), rep.graded_dims[..5] == profile[..] && rep.graded_dims[5] == 0));
            let stated = stated_degree2_relations(i, j).unwrap();
            out.push(item(
                format!("𝔅(V_{i},{j}) degree-2 kernel"),
                same_span(&degree2_relations(&b).col_vecs(), &stated, 4),
            ));
            out.push(item(
                format!("S₄(y⊗⁴) = 0 in 𝔅(V_{i},{j})"),
                check_relation(&b, &tensor_power(&unit_vec(2, 1), 4)).unwrap(),
            ));
        }
        let sweep = witness_sweep(&reg).unwrap();
        for e in &sweep {
            out.push(item(format!("{} witness", e.space), e.validates));
        }
        for (i, j) in lambda_prime() {
            let name = SimpleLabel::TwoDim(i, j).to_string();
            out.push(item(format!("{name} in sweep"), sweep.iter().any(|e| e.space == name && e.witness.is_some())));
        }
        for name in ["k_ε", "k_χ^2", "P(k_ε)", "P(k_χ)", "P(k_χ^2)", "P(k_χ^3)"] {
            out.push(item(format!("{name} in sweep"), sweep.iter().any(|e| e.space == name && e.witness.is_some())));
        }
        let c = |j: u8| from_double_module(reg.simple(SimpleLabel::Char(j))).unwrap();
        out.push(item("k_χ ⊕ k_χ³ exterior", exterior_check(&[c(1), c(3)]).unwrap()));
        out
    });
}

#[test]
fn c10_ad_identification() {
    criterion(10, "ad identifications", 120, || {
        let reg = Registry::shared();
        let y = |l: SimpleLabel| from_double_module(reg.simple(l)).unwrap();
        let cases = [(1u8, (3u8, 1u8), (0u8, 3u8)), (1, (3, 3), (0, 1)), (3, (2, 1), (1, 3)), (3, (2, 3), (1, 1))];
        cases
            .iter()
            .map(|&(ch, (i, j), (p, q))| {
                let (label, _) = ad_degree2(&reg, &y(SimpleLabel::Char(ch)), &y(SimpleLabel::TwoDim(i, j))).unwrap();
                item(format!("ad χ^{ch}(V_{i},{j}) ≅ V_{p},{q}"), label == SimpleLabel::TwoDim(p, q))
            })
            .collect()
    });
}

#[test]
fn c11_bosonizations() {
    criterion(11, "bosonizations and no-deformation", 60, || {
        let reg = Registry::shared();
        let mut out = Vec::new();
        let x = xi();
        for (l, dim) in [
            (SimpleLabel::Char(1), 16),
            (SimpleLabel::Char(3), 16),
            (SimpleLabel::TwoDim(2, 1), 64),
            (SimpleLabel::TwoDim(2, 3), 64),
        ] {
            let b = build_nichols_hopf(&from_double_module(reg.simple(l)).unwrap(), 6).unwrap();
            let bz = bosonize(&b).unwrap();
            out.push(item(format!("dim 𝔅({l})#K = {dim}"), bz.hopf.dim == dim));
            out.push(item(format!("𝔅({l})#K Hopf"), verify_hopf(&bz.hopf).passed()));
            out.push(item(format!("𝔅({l})#K π∘ι"), check_inclusion_projection(&bz).unwrap().passed()));
            let rep = no_deformation_check(&bz);
            let k = k_algebra();
            let c = k.named("c");
            out.push(item(format!("{l}: P(K) = 0"), rep.primitive_dim == 0));
            out.push(item(format!("{l}: dim P_(1,a²)(K) = 2"), rep.skew_primitive_dim == 2));
            out.push(item(
                format!("{l}: [a, 1 − a²] = 0, [a, ab] = (1+ξ)c"),
                rep.commutator_a[0] == k.zero() && rep.commutator_a[1] == vec_scale(&c, &(&Scalar::one() + &x)),
            ));
            out.push(item(
                format!("{l}: [b, 1 − a²] = 2c, [b, ab] = 0"),
                rep.commutator_b[0] == vec_scale(&c, &Scalar::from_int(2)) && rep.commutator_b[1] == k.zero(),
            ));
            out.push(item(format!("{l}: report"), rep.passed()));
        }
        let k = k_algebra();
        let expect = Subspace::new(
            8,
            &[k.elem(&[(Scalar::one(), "1"), (-Scalar::one(), "a^2")]), k.named("ab")],
        );
        out.push(item("P_(1,a²)(K) = span{1 − a², ab}", skew_primitives(k, &k.unit, &k.named("a^2")) == expect));
        out
    });
}

#[test]
fn c12_liftings() {
    criterion(12, "liftings 𝔄₃,₁(μ), 𝔄₃,₃(μ)", 300, || {
        let reg = Registry::shared();
        let mut out = Vec::new();
        for fam in [Family::A31, Family::A33] {
            for mu in [0, 1, 2] {
                let m = Scalar::from_int(mu);
                let rep = lifting_verification(fam, &m).unwrap();
                for name in [
                    "confluence",
                    "Hopf axioms",
                    "dimension 64",
                    "Hopf coradical has dim 8",
                    "coradical ≅ K",
                    "gr Hopf axioms",
                ] {
                    out.push(item(format!("{fam}({mu}) {name}"), rep.checks.get(name) == Some(true)));
                }
                out.push(item(format!("{fam}({mu}) rank 64"), rep.independence_rank == 64));
                out.push(item(format!("{fam}({mu}) filtration"), rep.filtration_dims == [8, 24, 40, 56, 64]));
                out.push(item(format!("{fam}({mu}) gr dims"), rep.graded_dims == [8, 16, 16, 16, 8]));
            }
            let p = build_lifting(fam, &Scalar::zero()).unwrap();
            let v = if fam == Family::A31 { (3, 1) } else { (3, 3) };
            let y = from_double_module(reg.simple(SimpleLabel::TwoDim(v.0, v.1))).unwrap();
            let bz = bosonize(&build_nichols_hopf(&y, 6).unwrap()).unwrap();
            let (iso, m) = compare_with_bosonization(&p, &bz).unwrap();
            out.push(item(format!("{fam}(0) ≅ 𝔅(V_{},{})#K", v.0, v.1), iso));
            // structure constants transported along the generator correspondence
            let same = (0..64).all(|i| {
                (0..64).all(|j| {
                    let lhs = m.apply(&p.hopf.mul(&p.hopf.e(i), &p.hopf.e(j)));
                    lhs == bz.hopf.mul(&m.col(i), &m.col(j))
                })
            });
            out.push(item(format!("{fam}(0) products match"), same));
        }
        out
    });
}

#[test]
fn c13_property_suites() {
    criterion(13, "property suites", 120, || {
        let mut out = Vec::new();
        let mut runner = TestRunner::new(Config::with_cases(64));
        out.push(item(
            "field axioms",
            runner
                .run(&(scalar(), scalar(), scalar()), |(a, b, c)| field_axioms(&a, &b, &c))
                .is_ok(),
        ));
        out.push(item("rank–nullity", runner.run(&matrix(6), |m| rank_nullity(&m)).is_ok()));
        let with_vec = matrix(6).prop_flat_map(|m| {
            let c = m.cols();
            (Just(m), proptest::collection::vec(entry(), c))
        });
        out.push(item("solve", runner.run(&with_vec, |(m, x)| solve_correct(&m, &x)).is_ok()));
        let braidings = registry_braidings();
        let s3_ok = braidings
            .iter()
            .all(|(_, bs)| all_s3().iter().all(|p| reduced_word_independence(bs, p).is_ok()));
        out.push(item("braid lift on all of S₃", s3_ok));
        let s4_ok = runner
            .run(&(0..braidings.len(), s4_element()), |(i, p)| reduced_word_independence(&braidings[i].1, &p))
            .is_ok();
        out.push(item("braid lift on sampled S₄", s4_ok));
        for (name, bs) in braidings {
            out.push(item(format!("recursion ≡ brute force on {name}"), recursion_matches_brute(bs)));
        }
        out
    });
}

