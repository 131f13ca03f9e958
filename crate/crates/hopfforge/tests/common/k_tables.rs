//! Hand-transcribed structure tables of K and K*.

use hopfforge::cyclo::{xi, Scalar};
use hopfforge::hopf::{FinHopf, Tensor2};
use hopfforge::linalg::Vector;

pub const K_ORDER: [&str; 8] = ["1", "a", "b", "c", "d", "a^2", "ab", "ac"];

/// Row `u`, column `v` holds `u·v`.
pub const K_TABLE: [[&str; 8]; 8] = [
    ["1", "a", "b", "c", "d", "a^2", "ab", "ac"],
    ["a", "a^2", "ab", "ac", "1", "d", "c", "b"],
    ["b", "-ξ ab", "0", "0", "ξ ac", "-c", "0", "0"],
    ["c", "-ξ ac", "0", "0", "ξ ab", "-b", "0", "0"],
    ["d", "1", "ac", "ab", "a^2", "a", "b", "c"],
    ["a^2", "d", "c", "b", "a", "1", "ac", "ab"],
    ["ab", "-ξ c", "0", "0", "ξ b", "-ac", "0", "0"],
    ["ac", "-ξ b", "0", "0", "ξ c", "-ab", "0", "0"],
];

pub const KD_ORDER: [&str; 8] = ["1*", "a*", "b*", "c*", "d*", "(a^2)*", "(ab)*", "(ac)*"];

pub const KD_TABLE: [[&str; 8]; 8] = [
    ["1*", "0", "0", "0", "0", "0", "0", "(ac)*"],
    ["0", "a*", "b*", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "a*", "b*", "0", "0", "0"],
    ["0", "c*", "d*", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "c*", "d*", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "(a^2)*", "(ab)*", "0"],
    ["(ab)*", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "(ac)*", "0", "0"],
];

/// Parses `[-][ξ ]name` or `0`.
pub fn entry(h: &FinHopf, s: &str) -> Vector {
    if s == "0" {
        return h.zero();
    }
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) => (-Scalar::one(), r),
        None => (Scalar::one(), s),
    };
    let (coef, name) = match rest.strip_prefix("ξ ") {
        Some(n) => (&sign * &xi(), n),
        None => (sign, rest),
    };
    h.elem(&[(coef, name)])
}

/// `Δ`, `ε`, `S` on the basis of K: `(name, Δ terms, ε, S terms)`.
pub fn k_coalgebra() -> Vec<(&'static str, Vec<(Scalar, &'static str, &'static str)>, i64, Vec<(Scalar, &'static str)>)> {
    let one = Scalar::one;
    let x = xi();
    vec![
        ("1", vec![(one(), "1", "1")], 1, vec![(one(), "1")]),
        ("a", vec![(one(), "a", "a"), (one(), "b", "c")], 1, vec![(one(), "d")]),
        ("b", vec![(one(), "a", "b"), (one(), "b", "d")], 0, vec![(x.clone(), "b")]),
        ("c", vec![(one(), "c", "a"), (one(), "d", "c")], 0, vec![(-&x, "c")]),
        ("d", vec![(one(), "c", "b"), (one(), "d", "d")], 1, vec![(one(), "a")]),
        ("a^2", vec![(one(), "a^2", "a^2")], 1, vec![(one(), "a^2")]),
        ("ab", vec![(one(), "ab", "1"), (one(), "a^2", "ab")], 0, vec![(-one(), "ac")]),
        ("ac", vec![(one(), "ac", "a^2"), (one(), "1", "ac")], 0, vec![(one(), "ab")]),
    ]
}

pub fn tensor_of(h: &FinHopf, terms: &[(Scalar, &str, &str)]) -> Tensor2 {
    let mut t = Tensor2::new();
    for (c, l, r) in terms {
        let (i, j) = (h.index_of(l).unwrap(), h.index_of(r).unwrap());
        let e = t.entry((i, j)).or_insert_with(Scalar::zero);
        *e += c;
    }
    t.retain(|_, v| !v.is_zero());
    t
}

/// Compares every table entry; returns the mismatches.
pub fn compare_k(k: &FinHopf) -> Vec<String> {
    let mut bad = Vec::new();
    for (r, row) in K_TABLE.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            let got = k.mul(&k.named(K_ORDER[r]), &k.named(K_ORDER[c]));
            if got != entry(k, s) {
                bad.push(format!("{}·{}", K_ORDER[r], K_ORDER[c]));
            }
        }
    }
    let s = k.antipode.as_ref().expect("antipode");
    for (name, delta, eps, anti) in k_coalgebra() {
        let mut got = k.comul(&k.named(name));
        got.retain(|_, v| !v.is_zero());
        if got != tensor_of(k, &delta) {
            bad.push(format!("Δ({name})"));
        }
        if k.eps(&k.named(name)) != Scalar::from_int(eps) {
            bad.push(format!("ε({name})"));
        }
        if s.apply(&k.named(name)) != k.elem(&anti) {
            bad.push(format!("S({name})"));
        }
    }
    bad
}

pub fn compare_kd(kd: &FinHopf) -> Vec<String> {
    let mut bad = Vec::new();
    for (r, row) in KD_TABLE.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            let got = kd.mul(&kd.named(KD_ORDER[r]), &kd.named(KD_ORDER[c]));
            if got != entry(kd, s) {
                bad.push(format!("{}·{}", KD_ORDER[r], KD_ORDER[c]));
            }
        }
    }
    bad
}
