use hopfforge::boson::*;
use hopfforge::cyclo::Scalar;
use hopfforge::hopf::verify_hopf;
use hopfforge::modrep::*;
use hopfforge::yd::*;

fn yd_of(l: SimpleLabel) -> YDModule {
    from_double_module(Registry::shared().simple(l)).unwrap()
}

#[test]
fn bosonizations_are_hopf_algebras() {
    let cases = [
        (SimpleLabel::Char(1), 16),
        (SimpleLabel::Char(3), 16),
        (SimpleLabel::TwoDim(3, 1), 64),
        (SimpleLabel::TwoDim(3, 3), 64),
    ];
    for (l, dim) in cases {
        let b = build_nichols_hopf(&yd_of(l), 6).unwrap();
        let bz = bosonize(&b).unwrap();
        assert_eq!(bz.hopf.dim, dim, "{l:?}");
        let rep = verify_hopf(&bz.hopf);
        assert!(rep.passed(), "{l:?}: {:?}", rep.failures());
        let ip = check_inclusion_projection(&bz).unwrap();
        assert!(ip.passed(), "{l:?}: {:?}", ip.failures());
    }
}

#[test]
fn liftings_verify() {
    for fam in [Family::A31, Family::A33] {
        for mu in [0, 1, 2] {
            let rep = lifting_verification(fam, &Scalar::from_int(mu)).unwrap();
            for c in &rep.checks.checks {
                println!("{fam} μ={mu} {} {} {}", c.name, c.pass, c.detail);
            }
            assert!(rep.passed(), "{fam}({mu}): {:?}", rep.checks.failures());
        }
    }
}

#[test]
fn w_and_u_satisfy_relations() {
    for mu in [0, 1, 2, -3] {
        let mu = Scalar::from_int(mu);
        for l in fourth_roots() {
            for (name, mats) in [("W", w_lambda(&l, &mu).to_vec()), ("U", u_lambda(&l, &mu).to_vec())] {
                for (rel, ok) in relation_residuals(&mats, &mu) {
                    assert!(ok, "{name}_{} μ={}: {rel}", l.pretty(), mu.pretty());
                }
            }
        }
    }
}

#[test]
fn w_and_u_are_modules_over_the_lifting() {
    let mu = Scalar::from_int(1);
    for fam in [Family::A31, Family::A33] {
        let p = build_lifting(fam, &mu).unwrap();
        for l in fourth_roots() {
            let w = representation_module(&p, "W", &w_lambda(&l, &mu)).unwrap();
            assert!(verify_module(&w));
            let u = representation_module(&p, "U", &u_lambda(&l, &mu)).unwrap();
            assert!(verify_module(&u));
        }
    }
}

#[test]
fn undeformed_liftings_are_bosonizations() {
    for (fam, v) in [(Family::A31, (3, 1)), (Family::A33, (3, 3))] {
        let p = build_lifting(fam, &Scalar::zero()).unwrap();
        let b = build_nichols_hopf(&yd_of(SimpleLabel::TwoDim(v.0, v.1)), 6).unwrap();
        let bz = bosonize(&b).unwrap();
        let (iso, _) = compare_with_bosonization(&p, &bz).unwrap();
        assert!(iso, "{fam}(0) ≅ 𝔅(V_{},{})#K", v.0, v.1);
    }
}

#[test]
fn odd_characters_and_v2j_admit_no_deformation() {
    for l in [SimpleLabel::Char(1), SimpleLabel::Char(3), SimpleLabel::TwoDim(2, 1), SimpleLabel::TwoDim(2, 3)] {
        let b = build_nichols_hopf(&yd_of(l), 6).unwrap();
        let bz = bosonize(&b).unwrap();
        let rep = no_deformation_check(&bz);
        assert!(rep.passed(), "{l:?}: {:?}", rep.checks.failures());
        assert_eq!(rep.primitive_dim, 0);
        assert_eq!(rep.skew_primitive_dim, 2);
    }
}
