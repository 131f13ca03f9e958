mod common;

use common::properties::*;
use hopfforge::cyclo::Scalar;
use hopfforge::linalg::Matrix;
use proptest::prelude::*;

fn matrix_and_vector() -> impl Strategy<Value = (Matrix, Vec<Scalar>)> {
    matrix(6).prop_flat_map(|m| {
        let c = m.cols();
        (Just(m), prop::collection::vec(entry(), c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn matrix_rank_nullity(m in matrix(6)) {
        rank_nullity(&m)?;
    }

    #[test]
    fn matrix_solve(pair in matrix_and_vector()) {
        solve_correct(&pair.0, &pair.1)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn braid_lift_is_independent_of_reduced_word_in_s4(
        idx in 0..20usize,
        perm in s4_element(),
    ) {
        let (_, bs) = &registry_braidings()[idx];
        reduced_word_independence(bs, &perm)?;
    }
}

#[test]
fn braid_lift_is_independent_of_reduced_word_in_s3() {
    for (name, bs) in registry_braidings() {
        for perm in all_s3() {
            reduced_word_independence(bs, &perm).unwrap_or_else(|e| panic!("{name} {perm:?}: {e}"));
        }
    }
}

#[test]
fn symmetrizer_recursion_equals_brute_force() {
    for (name, bs) in registry_braidings() {
        assert!(recursion_matches_brute(bs), "{name}");
    }
}
