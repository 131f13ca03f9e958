#![allow(dead_code)]

pub mod k_tables;
pub mod properties;
pub mod yd_tables;

use hopfforge::modrep::CgDecomposition;

/// `V_{i,j} ⊗ V_{k,l}`: projective `P(k_{χ^{i+k+3}})` when `2(i+k)+j+l ≡ 0`,
/// else `V_{i+k, j+l} ⊕ V_{i+k+3, j+l+2}`.
pub fn cg_formula(i: u8, j: u8, k: u8, l: u8) -> CgDecomposition {
    if (2 * (i + k) + j + l).is_multiple_of(4) {
        CgDecomposition::Projective((i + k + 3) % 4)
    } else {
        CgDecomposition::Sum(((i + k) % 4, (j + l) % 4), ((i + k + 3) % 4, (j + l + 2) % 4))
    }
}
