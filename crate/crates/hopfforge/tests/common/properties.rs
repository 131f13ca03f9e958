//! Property checks shared by the property suite and the acceptance run.

use hopfforge::cyclo::{Rational, Scalar};
use hopfforge::linalg::Matrix;
use hopfforge::modrep::Registry;
use hopfforge::nichols::{all_reduced_words, braid_lift_word, permutations, symmetrizer, symmetrizer_brute, BraidedSpace};
use hopfforge::yd::registry_yd;
use proptest::prelude::*;
use std::sync::OnceLock;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop::array::uniform4((-9i64..=9, 1i64..=5)).prop_map(|c| {
        Scalar::from_coeffs(c.map(|(n, d)| Rational::new(n, d).expect("nonzero denominator")))
    })
}

/// Sparse-ish entries so that rank deficiency is common.
pub fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![3 => Just(Scalar::zero()), 2 => scalar(), 1 => (-2i64..=2).prop_map(Scalar::from_int)]
}

pub fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry(), r * c)
            .prop_map(move |data| Matrix::from_vec(r, c, data).expect("shape"))
    })
}

#[allow(clippy::eq_op)]
pub fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(&(a + b) + c), &(a + &(b + c)));
    prop_assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
    prop_assert_eq!(&(a + b), &(b + a));
    prop_assert_eq!(&(a * b), &(b * a));
    prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
    prop_assert_eq!(&(a - a), &Scalar::zero());
    if !a.is_zero() {
        prop_assert_eq!(&(a * &a.inv().expect("nonzero")), &Scalar::one());
    }
    prop_assert_eq!(&a.render().parse::<Scalar>().expect("round trip"), a);
    Ok(())
}

pub fn rank_nullity(m: &Matrix) -> Result<(), TestCaseError> {
    let k = m.kernel_basis();
    prop_assert_eq!(m.rank() + k.cols(), m.cols());
    prop_assert!(m.dot(&k).is_zero());
    prop_assert_eq!(m.transpose().rank(), m.rank());
    let (r, _) = m.rref();
    prop_assert_eq!(&r.rref().0, &r);
    Ok(())
}

pub fn solve_correct(m: &Matrix, x: &[Scalar]) -> Result<(), TestCaseError> {
    let b = m.apply(x);
    let y = m.solve(&b).expect("shape").expect("consistent system");
    prop_assert_eq!(m.apply(&y), b);
    Ok(())
}

/// Braidings of all registry objects.
pub fn registry_braidings() -> &'static [(String, BraidedSpace)] {
    static CELL: OnceLock<Vec<(String, BraidedSpace)>> = OnceLock::new();
    CELL.get_or_init(|| {
        registry_yd(&Registry::shared())
            .expect("registry")
            .into_iter()
            .map(|(n, y)| (n, BraidedSpace::from_yd(&y).expect("braided")))
            .collect()
    })
}

/// Every reduced word of `perm` lifts to the same operator.
pub fn reduced_word_independence(bs: &BraidedSpace, perm: &[usize]) -> Result<(), TestCaseError> {
    let words = all_reduced_words(perm);
    let first = braid_lift_word(bs, perm.len(), &words[0]);
    for w in &words[1..] {
        prop_assert_eq!(&braid_lift_word(bs, perm.len(), w), &first, "word {:?}", w);
    }
    Ok(())
}

pub fn all_s3() -> Vec<Vec<usize>> {
    permutations(3)
}

pub fn s4_element() -> impl Strategy<Value = Vec<usize>> {
    (0..24usize).prop_map(|i| permutations(4)[i].clone())
}

pub fn recursion_matches_brute(bs: &BraidedSpace) -> bool {
    symmetrizer(bs, 3) == symmetrizer_brute(bs, 3)
}
