use hopfforge::cyclo::{sign_pow, sqrt2, xi, xi_pow, Scalar};
use hopfforge::linalg::{Matrix, Vector};
use hopfforge::yd::k_algebra;

type Term = (Scalar, Vector, usize);

fn k_el(name: &str) -> Vector {
    k_algebra().named(name)
}

fn kmul(xs: &[&Vector]) -> Vector {
    let k = k_algebra();
    let slices: Vec<&[Scalar]> = xs.iter().map(|v| v.as_slice()).collect();
    k.mul_all(&slices)
}

/// Stacked coaction matrix from `δ(e_c) = Σ coef · h ⊗ e_t`.
fn coaction_from_table(dim: usize, rows: &[Vec<Term>]) -> Matrix {
    let mut m = Matrix::zeros(8 * dim, dim);
    for (c, terms) in rows.iter().enumerate() {
        for (coef, h, t) in terms {
            for (i, hi) in h.iter().enumerate() {
                if !hi.is_zero() {
                    m.add_to(i * dim + t, c, &(coef * hi));
                }
            }
        }
    }
    m
}

/// Braiding matrix from `c(e_r ⊗ e_s) = Σ coef · e_u ⊗ e_v`.
fn braiding_from_table(dim: usize, entries: &[((usize, usize), Vec<(Scalar, usize, usize)>)]) -> Matrix {
    let mut m = Matrix::zeros(dim * dim, dim * dim);
    for ((r, s), terms) in entries {
        for (coef, u, v) in terms {
            m.add_to(u * dim + v, r * dim + s, coef);
        }
    }
    m
}

fn one() -> Scalar {
    Scalar::one()
}

fn half() -> Scalar {
    Scalar::frac(1, 2)
}

pub fn vij_coaction_table(i: i64, j: i64) -> Matrix {
    let l1 = xi_pow(i);
    let l1c = xi_pow(3 * i);
    let x = xi();
    let two = Scalar::from_int(2);
    let rows: Vec<Vec<Term>> = match j {
        0 => vec![
            vec![(one(), k_el("1"), 0), (-&(&two * &l1), k_el("ac"), 1)],
            vec![(one(), k_el("a^2"), 1)],
        ],
        2 => vec![
            vec![(one(), k_el("a^2"), 0), (&two * &l1, k_el("ab"), 1)],
            vec![(one(), k_el("1"), 1)],
        ],
        1 => vec![
            vec![(one(), k_el("d"), 0), (&l1c - &(&x * &l1), k_el("c"), 1)],
            vec![(one(), k_el("a"), 1), (&half() * &(&l1 + &(&x * &l1c)), k_el("b"), 0)],
        ],
        3 => vec![
            vec![(one(), k_el("a"), 0), (&l1c + &(&x * &l1), k_el("b"), 1)],
            vec![(one(), k_el("d"), 1), (&half() * &(&l1 - &(&x * &l1c)), k_el("c"), 0)],
        ],
        _ => unreachable!(),
    };
    coaction_from_table(2, &rows)
}

pub fn vij_braiding_table(i: i64, j: i64) -> Matrix {
    let l1 = xi_pow(i);
    let l1c = xi_pow(3 * i);
    let x = xi();
    let two = Scalar::from_int(2);
    let entries = match j {
        0 => vec![
            ((0, 0), vec![(one(), 0, 0)]),
            ((0, 1), vec![(one(), 1, 0), (two.clone(), 0, 1)]),
            ((1, 0), vec![(-one(), 0, 1)]),
            ((1, 1), vec![(one(), 1, 1)]),
        ],
        2 => vec![
            ((0, 0), vec![(one(), 0, 0)]),
            ((0, 1), vec![(-one(), 1, 0), (two.clone(), 0, 1)]),
            ((1, 0), vec![(one(), 0, 1)]),
            ((1, 1), vec![(one(), 1, 1)]),
        ],
        1 => vec![
            ((0, 0), vec![(l1c.clone(), 0, 0)]),
            ((0, 1), vec![(&x * &l1c, 1, 0), (&l1c - &(&x * &l1), 0, 1)]),
            ((1, 0), vec![(l1.clone(), 0, 1)]),
            ((1, 1), vec![(-&(&x * &l1), 1, 1), (&half() * &(&l1c + &(&x * &l1)), 0, 0)]),
        ],
        3 => vec![
            ((0, 0), vec![(l1.clone(), 0, 0)]),
            ((0, 1), vec![(-&(&x * &l1), 1, 0), (&l1 + &(&x * &l1c), 0, 1)]),
            ((1, 0), vec![(l1c.clone(), 0, 1)]),
            ((1, 1), vec![(&x * &l1c, 1, 1), (&half() * &(&l1 - &(&x * &l1c)), 0, 0)]),
        ],
        _ => unreachable!(),
    };
    braiding_from_table(2, &entries)
}

pub fn p_coaction_table(j: i64) -> Matrix {
    let k = k_algebra();
    let a2j = k.pow(&k_el("a^2"), j as usize);
    let a2j1 = k.pow(&k_el("a^2"), j as usize + 1);
    let a2j_ac = kmul(&[&a2j, &k_el("ac")]);
    let a2j_ab = kmul(&[&a2j, &k_el("ab")]);
    let h = &(&xi() * &sqrt2()) * &half();
    let rows: Vec<Vec<Term>> = vec![
        vec![
            (one(), a2j.clone(), 0),
            (-h.clone(), a2j_ac.clone(), 1),
            (-&(&h * &sqrt2()), a2j_ac, 2),
        ],
        vec![(one(), a2j1.clone(), 1), (xi(), a2j_ab.clone(), 3)],
        vec![(one(), a2j1, 2), (-h, a2j_ab, 3)],
        vec![(one(), a2j, 3)],
    ];
    coaction_from_table(4, &rows)
}

pub fn p_braiding_table(j: i64) -> Matrix {
    let s = sign_pow(j);
    let ms = -s.clone();
    let h = &sqrt2() * &half();
    let r2 = sqrt2();
    // h · u ⊗ (p₂ + √2p₃)
    let tail = |c: Scalar, u: usize| vec![(c.clone(), u, 1), (&c * &r2, u, 2)];
    let mut p1p1 = vec![(s.clone(), 0, 0)];
    p1p1.extend(tail(-h.clone(), 2));
    let mut p1p2 = vec![(one(), 1, 0)];
    p1p2.extend(tail(&h * &s, 3));
    let entries = vec![
        ((0, 0), p1p1),
        ((0, 1), p1p2),
        ((0, 2), vec![(one(), 2, 0)]),
        ((0, 3), vec![(s.clone(), 3, 0)]),
        ((1, 0), vec![(one(), 0, 1), (ms.clone(), 2, 3)]),
        ((1, 1), vec![(ms.clone(), 1, 1), (-one(), 3, 3)]),
        ((1, 2), vec![(ms.clone(), 2, 1)]),
        ((1, 3), vec![(one(), 3, 1)]),
        ((2, 0), vec![(one(), 0, 2), (&h * &s, 2, 3)]),
        ((2, 1), vec![(ms.clone(), 1, 2), (h.clone(), 3, 3)]),
        ((2, 2), vec![(ms.clone(), 2, 2)]),
        ((2, 3), vec![(one(), 3, 2)]),
        ((3, 0), vec![(s.clone(), 0, 3)]),
        ((3, 1), vec![(one(), 1, 3)]),
        ((3, 2), vec![(one(), 2, 3)]),
        ((3, 3), vec![(s, 3, 3)]),
    ];
    braiding_from_table(4, &entries)
}
