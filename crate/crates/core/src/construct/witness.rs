use super::{hilbert_function_of, mono, sum};
use crate::apolar::binomial;
use crate::error::{Error, Result};
use crate::invsys::{OSequence, MAX_VARS};
use crate::Poly;

/// Number of variables used by [`stanley_witness`].
pub const STANLEY_NVARS: usize = 13;

fn check_nm(n: usize, m: usize) -> Result<()> {
    if !(2..=MAX_VARS).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} must lie in 2..={MAX_VARS}")));
    }
    let max_m = binomial(n + 1, 2) - 1;
    if m < n || m > max_m {
        return Err(Error::InvalidArgument(format!("m = {m} must lie in {n}..={max_m}")));
    }
    if n <= 3 && !matches!((n, m), (2, 2) | (3, 3) | (3, 4) | (3, 5)) {
        return Err(Error::InvalidArgument(format!("(n, m) = ({n}, {m}) has no witness")));
    }
    Ok(())
}

fn xx(n: usize, i: usize, j: usize) -> Poly {
    if i == j {
        mono(n, &[(i, 2)])
    } else {
        mono(n, &[(i, 1), (j, 1)])
    }
}

/// The quadrics `p_i` and quartics `g_i` for `n > 3`, aligned by index.
fn quartic_list(n: usize) -> Vec<Poly> {
    let mut g: Vec<Poly> = (1..n).map(|i| mono(n, &[(i, 4)])).collect();
    g.push(mono(n, &[(2, 3), (n, 1)]));
    for i in n + 1..2 * n {
        let (a, b) = (i - n, i + 1 - n);
        if i == n + 2 {
            g.push(mono(n, &[(2, 2), (3, 2)]));
        } else {
            // x_a^2 * x_a x_b
            g.push(mono(n, &[(a, 3), (b, 1)]));
        }
    }
    g.push(mono(n, &[(1, 1), (2, 2), (n, 1)]));
    for i in 1..n {
        for j in i + 2..n {
            let p = xx(n, i, j);
            g.push(&p * &p);
        }
    }
    for j in 3..=n.saturating_sub(2) {
        g.push(mono(n, &[(2, 1), (j, 2), (n, 1)]));
    }
    g
}

/// A polynomial `F` in `n` variables with `HF(A_F) = (1,n,m,n,1)` whose
/// associated graded ring is not canonically graded.
pub fn witness_f(n: usize, m: usize) -> Result<Poly> {
    check_nm(n, m)?;
    let f = if n <= 3 {
        let text = match (n, m) {
            (2, 2) => "x1^3x2",
            (3, 3) => "x1^4+x2^4+x2^3x3",
            (3, 4) => "x1^4+x2^4+x2^3x3+x1^3x2",
            _ => "x1^4+x2^4+x2^3x3+x1^3x2+x1x2^2x3",
        };
        super::lit(n, text)
    } else {
        sum(n, quartic_list(n).into_iter().take(m))
    };
    verify(n, m, &f)?;
    Ok(f)
}

/// `G = F + x_n^3`.
pub fn witness_g(n: usize, m: usize) -> Result<Poly> {
    let g = &witness_f(n, m)? + &mono(n, &[(n, 3)]);
    verify(n, m, &g)?;
    Ok(g)
}

fn verify(n: usize, m: usize, f: &Poly) -> Result<()> {
    let target = OSequence::new(vec![1, n, m, n, 1]);
    let computed = hilbert_function_of(std::slice::from_ref(f))?;
    if computed != target {
        return Err(Error::ConstructionFault {
            case_path: format!("witness/n={n}/m={m}"),
            expected: target.to_string(),
            computed: computed.to_string(),
        });
    }
    if n > 3 {
        let bad = f.terms().find(|(mono, _)| mono.exp(n - 1) >= 2 && mono.degree() == 4);
        if let Some((mono, _)) = bad {
            return Err(Error::ConstructionFault {
                case_path: format!("witness/n={n}/m={m}"),
                expected: format!("no quartic term divisible by x{n}^2"),
                computed: mono.to_string(),
            });
        }
    }
    Ok(())
}

/// The pair `(F, G)` in 13 variables with `HF = (1,13,12,13,1)`: `F` is a
/// sum of `x_i μ_i` over the ten cubic monomials `μ_i` in `x11, x12, x13`, and
/// `G = F + Σ x_i^3`.
pub fn stanley_witness() -> Result<(Poly, Poly)> {
    let n = STANLEY_NVARS;
    let cubics: Vec<Poly> = crate::apolar::monomials_of_degree(3, 3)
        .into_iter()
        .map(|mu| {
            let powers: Vec<(usize, u8)> = mu
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v + 11, e))
                .collect();
            mono(n, &powers)
        })
        .collect();
    let f = sum(
        n,
        cubics.iter().enumerate().map(|(i, mu)| &mono(n, &[(i + 1, 1)]) * mu),
    );
    let g = &f + &sum(n, (1..=10).map(|i| mono(n, &[(i, 3)])));
    let target = OSequence::new(vec![1, 13, 12, 13, 1]);
    for (name, p) in [("F", &f), ("G", &g)] {
        let computed = hilbert_function_of(std::slice::from_ref(p))?;
        if computed != target {
            return Err(Error::ConstructionFault {
                case_path: format!("stanley/{name}"),
                expected: target.to_string(),
                computed: computed.to_string(),
            });
        }
    }
    Ok((f, g))
}
