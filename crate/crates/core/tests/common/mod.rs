#![allow(dead_code)]

use apolar_core::apolar::text::parse_polys;
use apolar_core::invsys::{local_hilbert_function, InverseSystem, OSequence};
use apolar_core::Poly;

pub fn seq(v: &[usize]) -> OSequence {
    OSequence::new(v.to_vec())
}

pub fn hf(texts: &[&str]) -> Vec<usize> {
    hf_of(&parse_polys(texts).unwrap())
}

pub fn hf_of(gens: &[Poly]) -> Vec<usize> {
    local_hilbert_function(&InverseSystem::new(gens.to_vec()).unwrap()).into_vec()
}

/// Reference generator sets, with the Hilbert function they are
/// stated to have.
pub const REFERENCE_SYSTEMS: &[(&[&str], [usize; 5])] = &[
    (&["x1^4+x3^2", "x2^4"], [1, 3, 2, 2, 2]),
    (&["x1^4+x1^2x2^2+x3^2", "x2^4+x1^2x2^2"], [1, 3, 3, 4, 2]),
    (&["x1^4+x1^2x2^2+x3^4", "x2^4+x1^2x2^2"], [1, 3, 4, 5, 2]),
    (&["x1^4+x1^2x2^2+x3^4", "x2^4+x1^2x2^2+x2^3x3"], [1, 3, 5, 6, 2]),
    (&["x1^3x2"], [1, 2, 2, 2, 1]),
    (&["x1^3x2+x2^3"], [1, 2, 2, 2, 1]),
    (&["x1^4+x2^4+x2^3x3"], [1, 3, 3, 3, 1]),
    (&["x1^4+x2^4+x2^3x3+x1^3x2"], [1, 3, 4, 3, 1]),
    (&["x1^4+x2^4+x2^3x3+x1^3x2+x1x2^2x3"], [1, 3, 5, 3, 1]),
    (&["x1^4+x2^4+x2^3x3+x1^3x2+x1x2^2x3+x3^3"], [1, 3, 5, 3, 1]),
];

pub const TABLE_1: [[usize; 5]; 25] = [
    [1, 3, 2, 2, 2],
    [1, 3, 3, 2, 2],
    [1, 3, 4, 2, 2],
    [1, 3, 5, 2, 2],
    [1, 3, 6, 2, 2],
    [1, 3, 5, 3, 2],
    [1, 3, 6, 3, 2],
    [1, 3, 3, 4, 2],
    [1, 3, 4, 3, 3],
    [1, 3, 5, 3, 3],
    [1, 3, 6, 3, 3],
    [1, 3, 3, 4, 3],
    [1, 3, 6, 4, 3],
    [1, 3, 3, 4, 4],
    [1, 3, 5, 4, 4],
    [1, 3, 6, 4, 4],
    [1, 3, 3, 4, 5],
    [1, 3, 4, 4, 5],
    [1, 3, 5, 4, 5],
    [1, 3, 6, 4, 5],
    [1, 3, 6, 5, 5],
    [1, 3, 5, 5, 6],
    [1, 3, 6, 5, 6],
    [1, 3, 6, 6, 7],
    [1, 3, 6, 7, 9],
];

pub const TABLE_2: [[usize; 5]; 6] = [
    [1, 3, 1, 1, 1],
    [1, 3, 2, 1, 1],
    [1, 3, 3, 1, 1],
    [1, 3, 2, 2, 1],
    [1, 3, 3, 2, 1],
    [1, 3, 4, 2, 1],
];

pub const EXAMPLE_LEX_GENERATORS: [&str; 17] = [
    "x1^2", "x1*x2^2", "x1*x2*x3", "x1*x2*x4", "x1*x3^2", "x1*x3*x4", "x1*x4^2", "x2^3",
    "x2^2*x3", "x2^2*x4", "x2*x3^2", "x2*x3*x4", "x2*x4^2", "x3^3", "x3^2*x4", "x3*x4^4", "x4^5",
];

/// `(i, [(j, β_{i,j})])` for the lex ideal of `(1,4,9,2,2)`.
pub const EXAMPLE_BETTI: [(usize, &[(usize, usize)]); 4] = [
    (1, &[(2, 1), (3, 14), (5, 2)]),
    (2, &[(4, 33), (6, 6)]),
    (3, &[(5, 26), (7, 6)]),
    (4, &[(6, 7), (8, 2)]),
];

/// Lex-segment oracle for Macaulay's bound: in enough variables, keep the
/// `h` lex-smallest monomials of degree `i` and count the degree-`(i+1)`
/// monomials all of whose degree-`i` divisors are kept.
pub fn brute_force_growth(h: usize, i: usize) -> usize {
    let mut r = 1;
    while count(r, i) < h {
        r += 1;
    }
    let mut deg_i = monomials(r, i);
    deg_i.sort();
    // ascending exponent-vector order is ascending lex order
    let kept: std::collections::HashSet<Vec<u8>> = deg_i.into_iter().take(h).collect();
    monomials(r, i + 1)
        .into_iter()
        .filter(|m| {
            (0..r).filter(|&v| m[v] > 0).all(|v| {
                let mut d = m.clone();
                d[v] -= 1;
                kept.contains(&d)
            })
        })
        .count()
}

fn count(r: usize, d: usize) -> usize {
    monomials(r, d).len()
}

fn monomials(r: usize, d: usize) -> Vec<Vec<u8>> {
    if r == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in monomials(r - 1, d - e) {
            rest.insert(0, e as u8);
            out.push(rest);
        }
    }
    out
}
