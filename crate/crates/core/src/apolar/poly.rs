use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A sparse polynomial with exact coefficients. Zero coefficients are never
/// stored.
///
/// The same type serves as an element of the operator ring `R` (acting by
/// differentiation) and of the inverse-system ring `P`.
#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::from_monomial(Monomial::one(nvars), c)
    }

    pub fn from_monomial(m: Monomial, c: T) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// The monomial `x^exps` with coefficient one.
    pub fn monomial(exps: &[u8]) -> Self {
        Self::from_monomial(Monomial::new(exps.to_vec()), T::one())
    }

    /// The variable `x_{i+1}`.
    pub fn var(i: usize, nvars: usize) -> Self {
        Self::from_monomial(Monomial::var(i, nvars), T::one())
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VariableCountMismatch(nvars, m.nvars()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The degree-`s` form `f[s]` of a polynomial of degree exactly `s`.
    pub fn top_form(&self, s: usize) -> Result<Self> {
        if self.degree() != Some(s) {
            return Err(Error::DegreeMismatch {
                expected: s,
                found: self.degree(),
            });
        }
        Ok(self.homogeneous_part(s))
    }

    /// The same polynomial viewed in `n >= nvars` variables.
    pub fn with_nvars(&self, n: usize) -> Result<Self> {
        if n < self.nvars {
            if self.terms.keys().any(|m| m.exps()[n..].iter().any(|&e| e > 0)) {
                return Err(Error::VariableCountMismatch(n, self.nvars));
            }
            return Ok(Polynomial {
                nvars: n,
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| (Monomial::new(m.exps()[..n].to_vec()), c.clone()))
                    .collect(),
            });
        }
        Ok(Polynomial {
            nvars: n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(n), c.clone()))
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if let Some(q) = m.div_var(i) {
                p.add_term(q, c.clone() * T::from_u8(e).expect("small integer"));
            }
        }
        p
    }

    /// Applies the coefficient map `f` termwise, dropping terms that map to
    /// zero.
    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Polynomial<U> {
        let mut p = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    /// `self ∘ g`: `self` acting on `g` as the constant-coefficient
    /// differential operator `self(∂_1, ..., ∂_r)`.
    pub fn contract(&self, g: &Self) -> Result<Self> {
        contract(self, g)
    }

    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }
}

/// The contraction action `op ∘ g = op(∂)(g)`. Operator terms of degree
/// larger than those of `g` contribute nothing.
pub fn contract<T: Scalar>(op: &Polynomial<T>, g: &Polynomial<T>) -> Result<Polynomial<T>> {
    if op.nvars != g.nvars {
        return Err(Error::VariableCountMismatch(op.nvars, g.nvars));
    }
    let mut out = Polynomial::zero(g.nvars);
    for (a, c) in &op.terms {
        for (b, d) in &g.terms {
            if let Some(q) = a.quotient_of(b) {
                let factor = T::from_u64(Monomial::contraction_factor(a, b)).expect("small integer");
                out.add_term(q, c.clone() * d.clone() * factor);
            }
        }
    }
    Ok(out)
}

/// The pairing `<f, g> = (f ∘ g)(0)`.
pub fn pairing<T: Scalar>(f: &Polynomial<T>, g: &Polynomial<T>) -> Result<T> {
    let h = contract(f, g)?;
    Ok(h.coeff(&Monomial::one(g.nvars)))
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                p.add_term(a.mul(b), c.clone() * d.clone());
            }
        }
        p
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        self.scale(&-T::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Self) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> std::iter::Sum for Polynomial<T> {
    /// Panics on an empty iterator: the variable count would be unknown.
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

/// Canonical text form: terms in descending graded-lex order, e.g.
/// `x1^4 + x1^2*x2^2 - 1/2*x3^2`.
impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [r={}]", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn mono(exps: &[u8]) -> P {
        P::monomial(exps)
    }

    #[test]
    fn contraction_examples() {
        // ∂²x⁴ = 12x²
        let r = mono(&[2]).contract(&mono(&[4])).unwrap();
        assert_eq!(r, mono(&[2]).scale(&int(12)));
        let g = &mono(&[2, 2, 0]) + &mono(&[0, 0, 4]);
        assert_eq!(mono(&[1, 1, 0]).contract(&g).unwrap(), mono(&[1, 1, 0]).scale(&int(4)));
        let g = &mono(&[4, 0, 0]) + &mono(&[0, 0, 2]);
        assert_eq!(mono(&[0, 0, 2]).contract(&g).unwrap(), P::constant(3, int(2)));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&mono(&[4]), &mono(&[4])).unwrap(), int(24));
        assert_eq!(pairing(&mono(&[1, 0]), &mono(&[0, 1])).unwrap(), int(0));
        assert_eq!(pairing(&mono(&[1, 1]), &mono(&[1, 1])).unwrap(), int(1));
    }

    #[test]
    fn contraction_requires_matching_variable_counts() {
        assert_eq!(
            contract(&mono(&[1]), &mono(&[1, 0])).unwrap_err(),
            Error::VariableCountMismatch(1, 2)
        );
    }

    #[test]
    fn top_form_examples() {
        let f = &mono(&[4, 0]) + &mono(&[0, 3]);
        assert_eq!(f.top_form(4).unwrap(), mono(&[4, 0]));
        let h = &mono(&[2, 2]) + &mono(&[3, 1]);
        assert_eq!(h.top_form(4).unwrap(), h);
        let f = &(&mono(&[4, 0, 0]) + &mono(&[0, 4, 0])) + &mono(&[0, 0, 2]);
        assert_eq!(f.top_form(4).unwrap(), &mono(&[4, 0, 0]) + &mono(&[0, 4, 0]));
        assert!(matches!(f.top_form(3), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn derivative_matches_variable_contraction() {
        let f = &(&mono(&[3, 1]) + &mono(&[0, 4])) + &mono(&[1, 1]);
        for i in 0..2 {
            assert_eq!(f.derivative(i), P::var(i, 2).contract(&f).unwrap());
        }
    }

    #[test]
    fn display_is_canonical() {
        let f = &(&mono(&[0, 0, 2]) + &mono(&[4, 0, 0])) + &mono(&[2, 2, 0]);
        assert_eq!(f.to_string(), "x1^4 + x1^2*x2^2 + x3^2");
        let g = &mono(&[2, 2, 0]) - &mono(&[0, 0, 4]).scale(&(int(1) / int(2)));
        assert_eq!(g.to_string(), "x1^2*x2^2 - 1/2*x3^4");
        assert_eq!(P::zero(2).to_string(), "0");
        assert_eq!((-&P::constant(1, int(3))).to_string(), "-3");
    }
}
