//! Inverse systems: derivative closures, Hilbert functions, annihilator
//! components and the level / Gorenstein / compressed predicates.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::apolar::{monomials_of_degree, Monomial, MonomialFrame, Polynomial};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::{Poly, QSubspace, Rational};

pub const MAX_VARS: usize = 13;
pub const MAX_SOCLE_DEGREE: usize = 6;

/// A finite sequence of nonnegative integers `(h_0, ..., h_s)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OSequence(Vec<usize>);

impl OSequence {
    pub fn new(values: Vec<usize>) -> Self {
        OSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h_i`, zero beyond the stored range.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The socle degree `s`, i.e. the last index.
    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// The embedding dimension `h_1`.
    pub fn embedding_dim(&self) -> usize {
        self.get(1)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl From<Vec<usize>> for OSequence {
    fn from(v: Vec<usize>) -> Self {
        OSequence(v)
    }
}

impl<const N: usize> From<[usize; N]> for OSequence {
    fn from(v: [usize; N]) -> Self {
        OSequence(v.to_vec())
    }
}

impl fmt::Display for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for OSequence {
    type Err = Error;

    /// Comma-separated integers; surrounding parentheses are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let base = s.len() - s.trim_start().len() + usize::from(inner.len() != trimmed.len());
        let mut values = Vec::new();
        let mut offset = base;
        for part in inner.split(',') {
            let v = part.trim().parse::<usize>().map_err(|_| Error::Parse {
                offset: offset + (part.len() - part.trim_start().len()),
                message: format!("expected a nonnegative integer, found '{}'", part.trim()),
            })?;
            values.push(v);
            offset += part.len() + 1;
        }
        Ok(OSequence(values))
    }
}

/// Socle type `(e_0, ..., e_s)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SocleType(Vec<usize>);

impl SocleType {
    pub fn new(values: Vec<usize>) -> Self {
        SocleType(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Dimension of the socle.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for SocleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&OSequence(self.0.clone()), f)
    }
}

impl fmt::Debug for SocleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({self})")
    }
}

/// The R-submodule of `P` generated by a list of polynomials, kept as a
/// subspace of the monomial frame of degree at most `s`.
#[derive(Clone)]
pub struct InverseSystem {
    generators: Vec<Poly>,
    nvars: usize,
    s: usize,
    frame: MonomialFrame,
    closure: QSubspace,
}

impl fmt::Debug for InverseSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InverseSystem")
            .field("generators", &self.generators)
            .field("s", &self.s)
            .field("dim", &self.dim())
            .finish()
    }
}

impl InverseSystem {
    /// Builds the derivative closure of `gens`.
    pub fn new(gens: Vec<Poly>) -> Result<Self> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let nvars = first.nvars();
        if nvars > MAX_VARS {
            return Err(Error::TooLarge {
                what: "number of variables",
                value: nvars,
                max: MAX_VARS,
            });
        }
        let mut s = 0;
        for (j, g) in gens.iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::VariableCountMismatch(nvars, g.nvars()));
            }
            s = s.max(g.degree().ok_or(Error::ZeroGenerator(j))?);
        }
        if s > MAX_SOCLE_DEGREE {
            return Err(Error::TooLarge {
                what: "socle degree",
                value: s,
                max: MAX_SOCLE_DEGREE,
            });
        }
        let frame = MonomialFrame::new(nvars, s);
        let mut closure = Subspace::zero(frame.monomials().clone());
        let mut queue: VecDeque<Poly> = gens.iter().cloned().collect();
        while let Some(p) = queue.pop_front() {
            if closure.insert(frame.vector(&p)?)? {
                for i in 0..nvars {
                    let d = p.derivative(i);
                    if !d.is_zero() {
                        queue.push_back(d);
                    }
                }
            }
        }
        Ok(InverseSystem {
            generators: gens,
            nvars,
            s,
            frame,
            closure,
        })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn socle_degree(&self) -> usize {
        self.s
    }

    pub fn frame(&self) -> &MonomialFrame {
        &self.frame
    }

    pub fn closure(&self) -> &QSubspace {
        &self.closure
    }

    /// `dim_K A`.
    pub fn dim(&self) -> usize {
        self.closure.dim()
    }

    /// `V ∩ P_{≤i}`, solved as a kernel problem on the closure basis. Empty
    /// for negative `i`.
    pub fn closure_up_to(&self, i: isize) -> QSubspace {
        if i < 0 {
            return Subspace::zero(self.frame.monomials().clone());
        }
        let i = i as usize;
        self.closure
            .intersect_coordinates(|j| self.frame.degree_of(j) <= i)
    }

    /// `m^k ∘ V`, the span of all `x^α ∘ v` with `|α| = k` and `v ∈ V`.
    pub fn contract_power_span(&self, k: usize) -> QSubspace {
        let mut current = self.closure.clone();
        for _ in 0..k {
            if current.dim() == 0 {
                break;
            }
            let mut next = Subspace::zero(self.frame.monomials().clone());
            for row in current.rows() {
                let p = self.frame.polynomial(row);
                for i in 0..self.nvars {
                    let d = p.derivative(i);
                    if !d.is_zero() {
                        next.insert(self.frame.vector(&d).expect("derivative stays in frame"))
                            .expect("frame length");
                    }
                }
            }
            current = next;
        }
        current
    }

    pub fn vector(&self, p: &Poly) -> Result<Vec<Rational>> {
        self.frame.vector(p)
    }
}

/// Builds the derivative closure of `gens`.
pub fn closure(gens: &[Poly]) -> Result<InverseSystem> {
    InverseSystem::new(gens.to_vec())
}

/// Local Hilbert function `h_i = dim(V ∩ P_{≤i}) − dim(V ∩ P_{≤i−1})`.
pub fn local_hilbert_function(sys: &InverseSystem) -> OSequence {
    let dims: Vec<usize> = (-1..=sys.s as isize)
        .map(|i| sys.closure_up_to(i).dim())
        .collect();
    OSequence(dims.windows(2).map(|w| w[1] - w[0]).collect())
}

/// Hilbert function of the graded algebra defined by homogeneous
/// generators: `h_i` is the rank of the span of all degree-`i` derivatives.
pub fn graded_hilbert_function(gens: &[Poly]) -> Result<OSequence> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let nvars = first.nvars();
    let mut degrees = Vec::with_capacity(gens.len());
    for (j, g) in gens.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(Error::VariableCountMismatch(nvars, g.nvars()));
        }
        let d = g.degree().ok_or(Error::ZeroGenerator(j))?;
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(j));
        }
        degrees.push(d);
    }
    let s = degrees.iter().copied().max().unwrap_or(0);
    let mut h = Vec::with_capacity(s + 1);
    for i in 0..=s {
        let frame = MonomialFrame::homogeneous(nvars, i);
        let mut span = Subspace::zero(frame.monomials().clone());
        for (g, &d) in gens.iter().zip(&degrees) {
            if d < i {
                continue;
            }
            for alpha in monomials_of_degree(nvars, d - i) {
                let op = Polynomial::from_monomial(alpha, Rational::from_integer(1.into()));
                let image = op.contract(g)?;
                if !image.is_zero() {
                    span.insert(frame.vector(&image)?)?;
                }
            }
        }
        h.push(span.dim());
    }
    Ok(OSequence(h))
}

/// `ann_R(F)_i`: the degree-`i` operators killing the form `F` of degree `s`,
/// i.e. the kernel of the catalecticant map `R_i → P_{s−i}`.
pub fn apolar_ann_component(form: &Poly, i: usize) -> Result<Subspace<Rational, Monomial>> {
    let s = form.degree().ok_or(Error::ZeroGenerator(0))?;
    if !form.is_homogeneous() {
        return Err(Error::NotHomogeneous(0));
    }
    if i > s + 1 {
        return Err(Error::InvalidArgument(format!(
            "annihilator degree {i} exceeds s + 1 = {}",
            s + 1
        )));
    }
    let nvars = form.nvars();
    let source = MonomialFrame::homogeneous(nvars, i);
    let labels: Arc<[Monomial]> = source.monomials().clone();
    if i == s + 1 {
        return Ok(Subspace::full(labels));
    }
    let target = MonomialFrame::homogeneous(nvars, s - i);
    let one = Rational::from_integer(1.into());
    // Column j is the image of the j-th source monomial.
    let columns: Vec<Vec<Rational>> = labels
        .iter()
        .map(|alpha| {
            let op = Polynomial::from_monomial(alpha.clone(), one.clone());
            target.vector(&op.contract(form)?)
        })
        .collect::<Result<_>>()?;
    let cat = Matrix::from_fn(target.len(), labels.len(), |r, c| columns[c][r].clone());
    Subspace::span(labels, cat.kernel().to_rows())
}

/// Returns the type `τ` when the system defines a level algebra, else
/// `None`.
///
/// Requires every generator to have degree exactly `s`, linearly independent
/// top forms, and a minimal generating set: no generator lies in the span of
/// the other generators together with `m ∘ V`.
pub fn is_level(sys: &InverseSystem) -> Option<usize> {
    let s = sys.s;
    let tops: Vec<Poly> = sys
        .generators
        .iter()
        .map(|g| g.top_form(s))
        .collect::<Result<_>>()
        .ok()?;
    let mut top_span = Subspace::zero(sys.frame.monomials().clone());
    for t in &tops {
        if !top_span.insert(sys.frame.vector(t).ok()?).ok()? {
            return None;
        }
    }
    let derived = sys.contract_power_span(1);
    for (j, g) in sys.generators.iter().enumerate() {
        let mut others = derived.clone();
        for (k, h) in sys.generators.iter().enumerate() {
            if k != j {
                others.insert(sys.frame.vector(h).ok()?).ok()?;
            }
        }
        if others.contains(&sys.frame.vector(g).ok()?).ok()? {
            return None;
        }
    }
    Some(sys.generators.len())
}

/// Socle type `e_i = dim[(0:m) ∩ m^i] − dim[(0:m) ∩ m^{i+1}]`, with `e_0 = 0`.
pub fn socle_type(sys: &InverseSystem) -> Result<SocleType> {
    let s = sys.s;
    let dims: Vec<usize> = (0..=s + 1)
        .map(|i| crate::qdecomp::ann_power_cap_power(sys, 1, i))
        .collect::<Result<_>>()?;
    let mut e: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).collect();
    if s > 0 {
        e[0] = 0;
    }
    Ok(SocleType(e))
}

/// Whether the Hilbert function attains the socle-type bound in every
/// degree `1..=s`.
pub fn is_compressed(sys: &InverseSystem) -> Result<bool> {
    let h = local_hilbert_function(sys);
    let e = socle_type(sys)?;
    let bound = crate::oseq::socle_bound(h.embedding_dim(), &e);
    Ok((1..=sys.s).all(|i| h.get(i) == bound.get(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolar::text::{parse_poly_in, parse_polys};

    fn sys(texts: &[&str]) -> InverseSystem {
        InverseSystem::new(parse_polys(texts).unwrap()).unwrap()
    }

    fn seq(v: &[usize]) -> OSequence {
        OSequence::new(v.to_vec())
    }

    #[test]
    fn closure_dimensions() {
        assert_eq!(sys(&["x1x2"]).dim(), 4);
        assert_eq!(sys(&["x1^4+x3^2", "x2^4"]).dim(), 10);
        assert_eq!(sys(&["x1^3"]).dim(), 4);
        assert_eq!(closure(&[]).unwrap_err(), Error::EmptyGenerators);
    }

    #[test]
    fn closure_is_stable_under_derivatives() {
        let s = sys(&["x1^4+x1^2x2x3+x3^3", "x2^3x3 - x1"]);
        for row in s.closure().rows() {
            let p = s.frame().polynomial(row);
            for i in 0..3 {
                assert!(s.closure().contains(&s.vector(&p.derivative(i)).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn local_hilbert_functions() {
        assert_eq!(local_hilbert_function(&sys(&["x1^4+x3^2", "x2^4"])), seq(&[1, 3, 2, 2, 2]));
        assert_eq!(local_hilbert_function(&sys(&["x1^4+x2^4+x3^2"])), seq(&[1, 3, 2, 2, 1]));
        assert_eq!(local_hilbert_function(&sys(&["x1x2"])), seq(&[1, 2, 1]));
    }

    #[test]
    fn graded_hilbert_functions() {
        assert_eq!(graded_hilbert_function(&parse_polys(&["x1^4"]).unwrap()).unwrap(), seq(&[1, 1, 1, 1, 1]));
        let f = parse_polys(&["x1^4+x2^4+x3^4+x1^3x2+x2^3x3+x3^3x1"]).unwrap();
        assert_eq!(graded_hilbert_function(&f).unwrap(), seq(&[1, 3, 6, 3, 1]));
        let g = parse_polys(&["x1^2x2^2"]).unwrap();
        assert_eq!(graded_hilbert_function(&g).unwrap(), seq(&[1, 2, 3, 2, 1]));
        let bad = parse_polys(&["x1^2+x2"]).unwrap();
        assert_eq!(graded_hilbert_function(&bad).unwrap_err(), Error::NotHomogeneous(0));
    }

    #[test]
    fn annihilator_components() {
        let f = parse_poly_in("x1x2", 2).unwrap();
        let ann = apolar_ann_component(&f, 2).unwrap();
        let expect: Vec<String> = ann
            .rows()
            .iter()
            .map(|r| MonomialFrame::homogeneous(2, 2).polynomial(r).to_string())
            .collect();
        assert_eq!(expect, ["x1^2", "x2^2"]);

        let f = parse_poly_in("x1^4", 3).unwrap();
        let ann = apolar_ann_component(&f, 1).unwrap();
        assert_eq!(ann.dim(), 2);
        let e1 = vec![crate::scalar::int(1), crate::scalar::int(0), crate::scalar::int(0)];
        assert!(!ann.contains(&e1).unwrap());

        let f = parse_poly_in("x1^4+x2^4", 2).unwrap();
        let ann = apolar_ann_component(&f, 2).unwrap();
        let frame = MonomialFrame::homogeneous(2, 2);
        assert_eq!(ann.dim(), 1);
        assert_eq!(frame.polynomial(&ann.rows()[0]).to_string(), "x1*x2");
        assert_eq!(apolar_ann_component(&f, 5).unwrap().dim(), 6);
    }

    #[test]
    fn level_predicate() {
        assert_eq!(is_level(&sys(&["x1^4+x3^2", "x2^4"])), Some(2));
        assert_eq!(is_level(&sys(&["x1^4", "x1^4+x2^3"])), None);
        assert_eq!(is_level(&sys(&["x1^4+x2^4+x3^2"])), Some(1));
        // dependent only modulo derivatives
        assert_eq!(is_level(&sys(&["x1^4+x2^4", "x1^4+x2^4+x1^3"])), None);
    }

    #[test]
    fn socle_types() {
        assert_eq!(socle_type(&sys(&["x1^4+x2^4+x3^2"])).unwrap().values(), [0, 0, 0, 0, 1]);
        let e = socle_type(&sys(&["x1^2", "x2^3"])).unwrap();
        assert_eq!(e.total(), 2);
        assert_eq!(e.get(3), 1);
        assert_eq!(socle_type(&sys(&["x1x2"])).unwrap().values(), [0, 0, 1]);
    }

    #[test]
    fn compressed_predicate() {
        assert!(is_compressed(&sys(&["x1^4+x2^4+x3^4+x1^3x2+x2^3x3+x3^3x1"])).unwrap());
        assert!(!is_compressed(&sys(&["x1^4+x2^4+x3^2"])).unwrap());
        assert!(is_compressed(&sys(&["x1x2"])).unwrap());
    }

    #[test]
    fn osequence_text() {
        let h: OSequence = "1,3,2,2,2".parse().unwrap();
        assert_eq!(h, seq(&[1, 3, 2, 2, 2]));
        assert_eq!(h.to_string(), "1,3,2,2,2");
        assert_eq!("(1, 4,9,2,2)".parse::<OSequence>().unwrap(), seq(&[1, 4, 9, 2, 2]));
        assert!(matches!("1,x,2".parse::<OSequence>(), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn size_limits() {
        let big = parse_polys(&["x1^7"]).unwrap();
        assert!(matches!(closure(&big), Err(Error::TooLarge { .. })));
    }
}
