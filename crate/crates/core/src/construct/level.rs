use super::{finish, lit, mono, Recipe};
use crate::error::{Error, Result};
use crate::invsys::{is_level, InverseSystem, OSequence};
use crate::oseq::is_o_sequence;
use crate::Poly;

const R: usize = 3;

/// Level generators `f_1, ..., f_{h4}` in three variables with Hilbert
/// function `h = (1,3,h2,h3,h4)`, for O-sequences with `h4 >= 2` and
/// `h3 <= 3*h4`. The recipe is also checked to be level of type `h4`.
pub fn level_construct_h1_3(h: &OSequence) -> Result<Recipe> {
    let v = h.values();
    if v.len() != 5 || v[0] != 1 || v[1] != 3 {
        return Err(Error::ShapeMismatch(format!("{h} is not of the form (1,3,h2,h3,h4)")));
    }
    if !is_o_sequence(h) {
        return Err(Error::NotOSequence(h.to_string()));
    }
    let (m, n, t) = (v[2], v[3], v[4]);
    if t < 2 {
        return Err(Error::Precondition(format!("{h}: needs h4 >= 2")));
    }
    if n > 3 * t {
        return Err(Error::Precondition(format!("{h}: h3 > 3*h4")));
    }
    let (gens, path) = generators(m, n, t)?;
    let recipe = finish(h, path, gens)?;
    let sys = InverseSystem::new(recipe.generators.clone())?;
    match is_level(&sys) {
        Some(tau) if tau == t => Ok(recipe),
        other => Err(Error::ConstructionFault {
            case_path: recipe.case_path,
            expected: format!("level of type {t}"),
            computed: other.map_or("not level".into(), |tau| format!("level of type {tau}")),
        }),
    }
}

fn bad_pair(m: usize, n: usize, t: usize) -> Error {
    Error::Precondition(format!("(1,3,{m},{n},{t}) is not reachable by any construction branch"))
}

/// The branch conditions used from the type-4 step on.
fn branch_a(m: usize, n: usize) -> bool {
    (m >= n && n <= 6) || (n >= 7 && m == 6)
}

fn branch_b(m: usize, n: usize) -> bool {
    (m < n && n <= 6) || (m, n) == (5, 7)
}

fn generators(m: usize, n: usize, t: usize) -> Result<(Vec<Poly>, String)> {
    match t {
        2 => type_two(m, n),
        3 => type_three(m, n),
        4 => type_four(m, n),
        5..=15 => type_five_plus(m, n, t),
        _ => Err(bad_pair(m, n, t)),
    }
}

fn type_two(m: usize, n: usize) -> Result<(Vec<Poly>, String)> {
    if m == 2 {
        if n != 2 {
            return Err(bad_pair(m, n, 2));
        }
        return Ok((
            vec![lit(R, "x1^4+x3^2"), lit(R, "x2^4")],
            "level/type2/m=2".into(),
        ));
    }
    if n > 6 {
        return Err(bad_pair(m, n, 2));
    }
    if m >= n {
        // g'_i and the variables x_{4−i} multiplying them (x_0 = x_3)
        let g_prime = [
            lit(R, "x3^3"),
            lit(R, "x2^2x3"),
            lit(R, "x1^2x2"),
            lit(R, "x1x3^2"),
        ];
        let multiplier = [3, 2, 1, 3];
        let g = |i: usize| -> Poly {
            if i + 2 <= n {
                &mono(R, &[(multiplier[i - 1], 1)]) * &g_prime[i - 1]
            } else if i + 2 <= m {
                g_prime[i - 1].clone()
            } else {
                Poly::zero(R)
            }
        };
        let f1 = &(&mono(R, &[(1, 4)]) + &g(1)) + &g(2);
        let f2 = &(&mono(R, &[(2, 4)]) + &g(3)) + &g(4);
        return Ok((vec![f1, f2], "level/type2/m>=n".into()));
    }
    let gens = match (m, n) {
        (3, 4) => vec![lit(R, "x1^4+x1^2x2^2+x3^2"), lit(R, "x2^4+x1^2x2^2")],
        (4, 5) => vec![lit(R, "x1^4+x1^2x2^2+x3^4"), lit(R, "x2^4+x1^2x2^2")],
        (5, 6) => vec![
            lit(R, "x1^4+x1^2x2^2+x3^4"),
            lit(R, "x2^4+x1^2x2^2+x2^3x3"),
        ],
        _ => return Err(bad_pair(m, n, 2)),
    };
    Ok((gens, format!("level/type2/m<n/({m},{n})")))
}

fn type_three(m: usize, n: usize) -> Result<(Vec<Poly>, String)> {
    if n <= 6 {
        let (mut gens, base) = type_two(m, n)?;
        let f3 = if m >= n { lit(R, "x3^4") } else { lit(R, "x1^2x2^2") };
        gens.push(f3);
        return Ok((gens, format!("level/type3/n<=6 <- {base}")));
    }
    if n > 9 {
        return Err(bad_pair(m, n, 3));
    }
    let (mut gens, base) = type_two(m, 6)?;
    let p = [lit(R, "x2^2x3^2"), lit(R, "x1^2x2^2"), lit(R, "x1^2x3^2")];
    let f3 = match m {
        6 => p[..n - 6].iter().fold(Poly::zero(R), |acc, q| &acc + q),
        5 => lit(R, "x2^2x3^2"),
        _ => return Err(bad_pair(m, n, 3)),
    };
    gens.push(f3);
    Ok((gens, format!("level/type3/7<=n<=9 <- {base}")))
}

fn type_four(m: usize, n: usize) -> Result<(Vec<Poly>, String)> {
    if n <= 9 {
        let (mut gens, base) = type_three(m, n)?;
        let f4 = if branch_a(m, n) {
            lit(R, "x2^3x3")
        } else if branch_b(m, n) {
            lit(R, "x1^3x2")
        } else {
            return Err(bad_pair(m, n, 4));
        };
        gens.push(f4);
        return Ok((gens, format!("level/type4/n<=9 <- {base}")));
    }
    if (m, n) != (6, 10) {
        return Err(bad_pair(m, n, 4));
    }
    let (mut gens, base) = type_three(6, 9)?;
    gens.push(lit(R, "x1^2x2x3"));
    Ok((gens, format!("level/type4/n=10 <- {base}")))
}

fn type_five_plus(m: usize, n: usize, t: usize) -> Result<(Vec<Poly>, String)> {
    if n >= t || t >= 11 {
        let (mut gens, base) = type_four(m, n)?;
        let (a, b) = (branch_a(m, n), branch_b(m, n));
        let pick = |when_a: &str, when_b: &str| -> Option<Poly> {
            if a {
                Some(lit(R, when_a))
            } else if b {
                Some(lit(R, when_b))
            } else {
                None
            }
        };
        let mut extra = vec![
            pick("x1^3x2", "x1x2^3"),
            pick("x1x3^3", "x3^4"),
            if n >= 7 && m == 6 {
                Some(lit(R, "x3^4"))
            } else if (m, n) == (5, 7) {
                Some(lit(R, "x2^3x3"))
            } else {
                None
            },
        ];
        if m == 6 {
            extra.extend(
                [
                    "x1^2x2^2", "x1^2x3^2", "x2x3^3", "x1x2^3", "x1^3x3", "x2^3x3", "x1x2^2x3",
                    "x1x2x3^2",
                ]
                .iter()
                .map(|s| Some(lit(R, s))),
            );
        }
        for f in extra.into_iter().take(t - 4) {
            gens.push(f.ok_or_else(|| bad_pair(m, n, t))?);
        }
        if gens.len() != t {
            return Err(bad_pair(m, n, t));
        }
        return Ok((gens, format!("level/type>=5/n>=h4 or h4>=11 <- {base}")));
    }
    if t > 10 {
        return Err(bad_pair(m, n, t));
    }
    let q1 = match m {
        3 => lit(R, "x3^2"),
        4..=6 => lit(R, "x3^3"),
        _ => return Err(bad_pair(m, n, t)),
    };
    let q2 = if m >= 5 { lit(R, "x2^2x3") } else { Poly::zero(R) };
    let q3 = if m == 6 { lit(R, "x1x3^2") } else { Poly::zero(R) };
    let mut gens = vec![
        &(&mono(R, &[(1, 4)]) + &q1) + &q2,
        &mono(R, &[(2, 4)]) + &q3,
        lit(R, "x1^3x2"),
        lit(R, "x1x2^3"),
        lit(R, "x1^2x2^2"),
        lit(R, "x3^4"),
        lit(R, "x2^3x3"),
        lit(R, "x2x3^3"),
    ];
    match n {
        7 => gens.push(lit(R, "x2^2x3^2")),
        8 | 9 => gens.push(lit(R, "x1x3^3")),
        _ => {}
    }
    match n {
        8 => gens.push(lit(R, "x2^2x3^2")),
        9 => gens.push(lit(R, "x1^3x3")),
        _ => {}
    }
    if gens.len() < t {
        return Err(bad_pair(m, n, t));
    }
    gens.truncate(t);
    Ok((gens, "level/type>=5/n<h4<=10".into()))
}
