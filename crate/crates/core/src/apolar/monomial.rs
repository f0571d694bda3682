use std::cmp::Ordering;
use std::fmt;

/// A monomial `x1^e1 * ... * xr^er`, stored as its exponent vector.
///
/// Ordering is graded lexicographic with `x1 > x2 > ... > xr`: higher total
/// degree is greater, ties broken lexicographically on the exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Builds from `(0-based variable, exponent)` pairs.
    pub fn from_powers(nvars: usize, powers: &[(usize, u8)]) -> Self {
        let mut exps = vec![0; nvars];
        for &(v, e) in powers {
            exps[v] += e;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// Divides by `x_i` if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// Largest (0-based) index of a variable dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// The monomial in `n >= nvars` variables with the same exponents.
    pub fn extended(&self, n: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial { exps }
    }

    /// Coefficient of `x^b` in `x^a ∘ x^b` (falling factorial product), or
    /// zero when `a` does not divide `b`.
    pub fn contraction_factor(a: &Monomial, b: &Monomial) -> u64 {
        let mut f = 1u64;
        for (&ai, &bi) in a.exps.iter().zip(&b.exps) {
            if ai > bi {
                return 0;
            }
            for k in (bi - ai + 1)..=bi {
                f *= k as u64;
            }
        }
        f
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of degree `d` in `nvars` variables, in descending
/// lexicographic order (`x1^d` first).
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u8>, nvars: usize, left: usize, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left as u8);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e as u8);
            rec(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
    out
}

/// All monomials of degree at most `max_degree`, graded-lex descending.
pub fn monomials_up_to(nvars: usize, max_degree: usize) -> Vec<Monomial> {
    (0..=max_degree)
        .rev()
        .flat_map(|d| monomials_of_degree(nvars, d))
        .collect()
}

/// `dim_K R_d` for a polynomial ring in `nvars` variables.
pub fn count_of_degree(nvars: usize, d: usize) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    binomial(nvars + d - 1, d)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}
