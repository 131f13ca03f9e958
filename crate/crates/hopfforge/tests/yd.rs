mod common;

use common::yd_tables::*;
use hopfforge::cyclo::Scalar;
use hopfforge::linalg::Matrix;
use hopfforge::modrep::*;
use hopfforge::yd::*;

fn one() -> Scalar {
    Scalar::one()
}

#[test]
fn two_dimensional_coactions_match_table() {
    for (i, j) in lambda() {
        let y = from_double_module(&make_vij(i as i64, j as i64).unwrap()).unwrap();
        assert_eq!(y.coaction, vij_coaction_table(i as i64, j as i64), "δ on V_{i},{j}");
    }
}

#[test]
fn two_dimensional_braidings_match_table() {
    for (i, j) in lambda() {
        let y = from_double_module(&make_vij(i as i64, j as i64).unwrap()).unwrap();
        assert_eq!(braiding(&y, &y), vij_braiding_table(i as i64, j as i64), "c on V_{i},{j}");
    }
}

#[test]
fn j_zero_case_lives_on_odd_i() {
    assert!(matches!(make_vij(2, 0), Err(ModError::NotInLambda(2, 0))));
    for i in [1, 3] {
        let y = from_double_module(&make_vij(i, 0).unwrap()).unwrap();
        let c = braiding(&y, &y);
        // c(e₂⊗e₁) = −e₁⊗e₂
        assert_eq!(c.get(1, 2), &-one());
    }
}

#[test]
fn projective_cover_coactions_and_braidings() {
    for j in 0..4 {
        let y = projcover_yd(j);
        assert_eq!(y.coaction, p_coaction_table(j), "δ on P(χ^{j})");
        let c = braiding(&y, &y);
        assert_eq!(c, p_braiding_table(j), "c on P(χ^{j})");
        if j % 2 == 1 {
            // c(p₃ ⊗ p₃) = p₃ ⊗ p₃
            assert_eq!(c.col(2 * 4 + 2), Matrix::identity(16).col(2 * 4 + 2));
        }
    }
}

#[test]
fn registry_is_yd_and_braided() {
    let reg = Registry::shared();
    let objs = registry_yd(&reg).unwrap();
    assert_eq!(objs.len(), 20);
    for (name, y) in &objs {
        assert!(verify_yd(y).passed(), "{name}");
        assert!(yang_baxter(y), "{name}");
    }
    for (p, (n1, y1)) in objs.iter().enumerate() {
        for (n2, y2) in &objs[p + 1..] {
            assert!(yang_baxter(&y1.direct_sum(y2)), "{n1} ⊕ {n2}");
        }
    }
}

#[test]
fn yd_data_recovers_double_action() {
    let reg = Registry::shared();
    for (_, m) in &reg.simples {
        assert!(round_trip(m, &from_double_module(m).unwrap()));
    }
    for m in &reg.char_covers {
        assert!(round_trip(m, &from_double_module(m).unwrap()));
    }
}
