use hopfforge::modrep::*;

fn cg_formula(i: u8, j: u8, k: u8, l: u8) -> CgDecomposition {
    if (2 * (i + k) + j + l).is_multiple_of(4) {
        CgDecomposition::Projective((i + k + 3) % 4)
    } else {
        CgDecomposition::Sum(((i + k) % 4, (j + l) % 4), ((i + k + 3) % 4, (j + l + 2) % 4))
    }
}

#[test]
fn clebsch_gordan_sweep() {
    let reg = Registry::shared();
    let pairs: Vec<_> = lambda()
        .into_iter()
        .flat_map(|a| lambda().into_iter().map(move |b| (a, b)))
        .collect();
    assert_eq!(pairs.len(), 144);
    for ((i, j), (k, l)) in pairs {
        let got = decompose_cg(&reg, i, j, k, l).unwrap();
        assert_eq!(got, cg_formula(i, j, k, l), "V_{i},{j} ⊗ V_{k},{l}");
    }
}

#[test]
fn simples_pairwise_non_isomorphic() {
    let reg = Registry::shared();
    for (a, ma) in &reg.simples {
        assert!(verify_module(ma));
        for (b, mb) in &reg.simples {
            assert_eq!(is_isomorphic(ma, mb), a == b, "{a} vs {b}");
        }
    }
}

#[test]
fn duals_of_two_dimensional_simples() {
    let reg = Registry::shared();
    for (i, j) in lambda() {
        let d = dual_module(reg.simple(SimpleLabel::TwoDim(i, j))).unwrap();
        assert!(verify_module(&d));
        let target = SimpleLabel::TwoDim(((5 - i as i64) % 4) as u8, ((6 - j as i64) % 4) as u8);
        assert!(is_isomorphic(&d, reg.simple(target)), "V_{i},{j}*");
    }
}

#[test]
fn character_tensor_rules() {
    let reg = Registry::shared();
    for l in 0..4u8 {
        let cl = reg.simple(SimpleLabel::Char(l));
        for k in 0..4u8 {
            let t = tensor_module(cl, reg.simple(SimpleLabel::Char(k))).unwrap();
            assert!(is_isomorphic(&t, reg.simple(SimpleLabel::Char((l + k) % 4))));
        }
        for (i, j) in lambda() {
            let t = tensor_module(reg.simple(SimpleLabel::TwoDim(i, j)), cl).unwrap();
            let target = SimpleLabel::TwoDim((i + l) % 4, (j + 2 * l) % 4);
            assert!(is_isomorphic(&t, reg.simple(target)));
        }
        let pt = tensor_module(&make_p(), cl).unwrap();
        assert!(is_isomorphic(&pt, &make_p_char(l as i64)));
    }
}

#[test]
fn ext_quiver_and_separation_diagram() {
    let reg = Registry::shared();
    for (s, t, n) in ext_table(&reg).unwrap() {
        let expect = match (s, t) {
            (SimpleLabel::Char(k), SimpleLabel::Char(l)) => {
                usize::from((k + 1) % 4 == l || (l + 1) % 4 == k)
            }
            _ => 0,
        };
        assert_eq!(n, expect, "Ext¹({s}, {t})");
    }
    let diag = separation_diagram(&reg).unwrap();
    assert_eq!(diag.vertices.len(), 32);
    assert_eq!(diag.arrows.len(), 8);
    assert_eq!(diag.affine_a3_count(), 2);
    assert_eq!(diag.isolated_count(), 24);
}

#[test]
fn projective_cover_layers() {
    let reg = Registry::shared();
    for l in 0..4u8 {
        let p = reg.cover(SimpleLabel::Char(l));
        let layers = radical_layers(&reg, p).unwrap();
        let c = |k: u8| SimpleLabel::Char((l + k) % 4);
        let mut mid = vec![(c(1), 1), (c(3), 1)];
        mid.sort();
        assert_eq!(layers, vec![vec![(c(0), 1)], mid, vec![(c(0), 1)]]);
        // the chain span{p_i..p_4}
        let expect = [c(0), c(3), c(1), c(0)];
        for i in 1..=4 {
            let upper = tail_span(i);
            assert!(is_submodule(p, &upper));
            let sub = restrict(p, &upper);
            let lower = if i < 4 {
                let v: Vec<_> = tail_span(i + 1)
                    .basis
                    .iter()
                    .map(|b| b[i - 1..].to_vec())
                    .collect();
                subspace(sub.dim, &v)
            } else {
                subspace(sub.dim, &[])
            };
            let factor = quotient(&sub, &lower);
            assert!(is_isomorphic(&factor, reg.simple(expect[i - 1])), "P_{i}/P_{} for ℓ={l}", i + 1);
        }
        let p3 = restrict(p, &tail_span(3));
        assert!(is_isomorphic(&p3, &make_m_plus(l as i64)));
    }
}

#[test]
fn two_and_three_dimensional_indecomposables() {
    let reg = Registry::shared();
    for l in 0..4i64 {
        let c = |k: i64| SimpleLabel::Char(((l + k).rem_euclid(4)) as u8);
        for (m, q) in [(make_m_plus(l), c(1)), (make_m_minus(l), c(-1))] {
            assert!(is_indecomposable(&m));
            assert!(is_isomorphic(&socle_module(&m), reg.simple(c(0))));
            assert!(is_isomorphic(&top(&m), reg.simple(q)));
            assert_eq!(composition_series(&reg, &m).unwrap(), vec![q, c(0)]);
        }
        let n = make_n(l);
        assert!(is_indecomposable(&n));
        let soc = socle_module(&n);
        let mut dec = decompose_semisimple(&reg, &soc).unwrap();
        dec.sort();
        let mut expect = vec![(c(0), 1), (c(2), 1)];
        expect.sort();
        assert_eq!(dec, expect);
        assert!(is_isomorphic(&quotient(&n, &socle(&n)), reg.simple(c(1))));
        let n1 = subspace(3, &[vec![1.into(), 0.into(), 0.into()]]);
        let n2 = subspace(3, &[vec![0.into(), 1.into(), 0.into()]]);
        assert!(is_isomorphic(&quotient(&n, &n1), &make_m_minus(l + 2)));
        assert!(is_isomorphic(&quotient(&n, &n2), &make_m_plus(l)));
        let series = composition_series(&reg, &n).unwrap();
        assert_eq!(series.len(), 3);
        assert_eq!(series[0], c(1));
    }
}

#[test]
fn regular_decomposition_bookkeeping() {
    let reg = Registry::shared();
    let rep = verify_regular_decomposition(&reg);
    assert!(rep.passed(), "{:?}", rep.checks);
    assert_eq!(d_algebra().radical().dim(), 12);
}

#[test]
fn module_json_round_trip() {
    let p = make_p();
    let s = serde_json::to_string(&p.to_json()).unwrap();
    let back = AModule::from_json(&d_algebra(), serde_json::from_str(&s).unwrap()).unwrap();
    assert_eq!(back.action, p.action);
}
