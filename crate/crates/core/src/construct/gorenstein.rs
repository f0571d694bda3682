use super::{finish, mono, sum, Recipe};
use crate::apolar::monomials_of_degree;
use crate::error::{Error, Result};
use crate::invsys::{OSequence, MAX_VARS};
use crate::oseq::{gorenstein_necessary, is_o_sequence};
use crate::Poly;

/// A single polynomial `f` of degree 4 with `HF(A_f) = (1,h1,h2,h3,1)`, for
/// O-sequences with `h2 >= h3` satisfying the Gorenstein necessary
/// conditions.
pub fn gorenstein_construct(h: &OSequence) -> Result<Recipe> {
    let v = h.values();
    if v.len() != 5 || v[0] != 1 || v[4] != 1 {
        return Err(Error::ShapeMismatch(format!("{h} is not of the form (1,h1,h2,h3,1)")));
    }
    if !is_o_sequence(h) {
        return Err(Error::NotOSequence(h.to_string()));
    }
    let verdict = gorenstein_necessary(h)?;
    if !verdict.admissible {
        return Err(Error::Precondition(format!("{h}: {}", verdict.reason)));
    }
    let (h1, h2, h3) = (v[1], v[2], v[3]);
    if h2 < h3 {
        return Err(Error::Precondition(format!("{h}: needs h2 >= h3")));
    }
    if h1 > MAX_VARS {
        return Err(Error::TooLarge {
            what: "number of variables",
            value: h1,
            max: MAX_VARS,
        });
    }
    let r = h1;
    let cubes = (h3 + 1..=h1).map(|i| mono(r, &[(i, 3)]));

    if h2 <= h1 {
        let f = sum(
            r,
            (1..=h3)
                .map(|i| mono(r, &[(i, 4)]))
                .chain((h3 + 1..=h2).map(|i| mono(r, &[(i, 3)])))
                .chain((h2 + 1..=h1).map(|i| mono(r, &[(i, 2)]))),
        );
        return finish(h, "gorenstein/h2<=h1".into(), vec![f]);
    }

    let n = h3;
    let g = quadrics(r, n);
    let excess = h2 - h1;
    let square_times = |i: usize| &mono(r, &[(i, 2)]) * &g[i - 1];
    let (path, f) = if excess <= n {
        let f = sum(
            r,
            (1..=n)
                .map(square_times)
                .chain((1..=excess).map(|i| &mono(r, &[(i, 2)]) * &g[n + i - 1]))
                .chain(cubes),
        );
        ("gorenstein/h2>h1/excess<=n", f)
    } else {
        let f = sum(
            r,
            (1..=n)
                .map(square_times)
                .chain((1..=n).map(|i| &mono(r, &[(i, 2)]) * &g[n + i - 1]))
                .chain((2 * n + 1..=excess + n).map(|i| &g[i - 1] * &g[i - 1]))
                .chain(cubes),
        );
        ("gorenstein/h2>h1/excess>n", f)
    };
    finish(h, path.into(), vec![f])
}

/// The quadrics `g_1, ..., g_{C(n+1,2)}` in `x1..xn`: the squares, then the
/// cyclically consecutive products `x1x2, ..., x_{n−1}x_n, x_n x_1`, then
/// the remaining monomials in graded-lex order.
fn quadrics(r: usize, n: usize) -> Vec<Poly> {
    let mut g: Vec<Poly> = (1..=n).map(|i| mono(r, &[(i, 2)])).collect();
    if n >= 2 {
        g.extend((1..n).map(|i| mono(r, &[(i, 1), (i + 1, 1)])));
        if n >= 3 {
            g.push(mono(r, &[(n, 1), (1, 1)]));
        }
    }
    let used: Vec<Poly> = g.clone();
    let rest = monomials_of_degree(n, 2)
        .into_iter()
        .map(|m| {
            let powers: Vec<(usize, u8)> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v + 1, e))
                .collect();
            mono(r, &powers)
        })
        .filter(|q| !used.contains(q));
    g.extend(rest);
    g
}
