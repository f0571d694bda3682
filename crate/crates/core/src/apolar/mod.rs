//! Monomials, polynomials and the contraction action `f ∘ g = f(∂)g`.

mod monomial;
mod poly;
pub mod text;

use std::collections::HashMap;
use std::sync::Arc;

pub use monomial::{binomial, count_of_degree, monomials_of_degree, monomials_up_to, Monomial};
pub use poly::{contract, pairing, Polynomial};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The monomials of degree at most `max_degree` in `nvars` variables, in
/// descending graded-lex order. Serves as the coordinate system for
/// subspaces of polynomials.
#[derive(Clone)]
pub struct MonomialFrame {
    nvars: usize,
    max_degree: usize,
    monomials: Arc<[Monomial]>,
    index: HashMap<Monomial, usize>,
}

impl MonomialFrame {
    pub fn new(nvars: usize, max_degree: usize) -> Self {
        Self::from_monomials(nvars, max_degree, monomials_up_to(nvars, max_degree))
    }

    /// Only the monomials of degree exactly `degree`.
    pub fn homogeneous(nvars: usize, degree: usize) -> Self {
        Self::from_monomials(nvars, degree, monomials_of_degree(nvars, degree))
    }

    fn from_monomials(nvars: usize, max_degree: usize, list: Vec<Monomial>) -> Self {
        let index = list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialFrame {
            nvars,
            max_degree,
            monomials: list.into(),
            index,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &Arc<[Monomial]> {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn degree_of(&self, col: usize) -> usize {
        self.monomials[col].degree()
    }

    pub fn vector<T: Scalar>(&self, p: &Polynomial<T>) -> Result<Vec<T>> {
        if p.nvars() != self.nvars {
            return Err(Error::VariableCountMismatch(self.nvars, p.nvars()));
        }
        let mut v = vec![T::zero(); self.len()];
        for (m, c) in p.terms() {
            let i = self.index_of(m).ok_or_else(|| {
                Error::InvalidArgument(format!("monomial {m} lies outside the frame"))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn polynomial<T: Scalar>(&self, v: &[T]) -> Polynomial<T> {
        let mut p = Polynomial::zero(self.nvars);
        for (m, c) in self.monomials.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_rational::BigRational;

    #[test]
    fn frame_order_is_graded_lex_descending() {
        let f = MonomialFrame::new(2, 2);
        let names: Vec<String> = f.monomials().iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x1^2", "x1*x2", "x2^2", "x1", "x2", "1"]);
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn vectorize_round_trip() {
        let f = MonomialFrame::new(3, 4);
        let p = text::parse_poly_in("x1^4 - 2x2x3 + 5", 3).unwrap();
        let v: Vec<BigRational> = f.vector(&p).unwrap();
        assert_eq!(f.polynomial(&v), p);
        assert_eq!(v[f.index_of(&Monomial::new(vec![0, 1, 1])).unwrap()], int(-2));
        let big = text::parse_poly_in("x1^5", 3).unwrap();
        assert!(f.vector(&big).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_of_degree(3, 2), 6);
        assert_eq!(count_of_degree(13, 4), 1820);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(MonomialFrame::new(13, 4).len(), 2380);
    }
}
