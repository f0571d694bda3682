//! Parsing of the polynomial text grammar.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := coeff ('*'? mono)? | mono
//! coeff  := digits ('/' digits)?
//! mono   := factor ('*'? factor)*
//! factor := 'x' digits ('^' digits)?
//! ```
//!
//! Whitespace is ignored everywhere. Formatting lives in the `Display`
//! implementation of [`Polynomial`]; parsing its output gives back the same
//! polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Largest variable index accepted by the parser.
pub const MAX_VARS: usize = 13;

/// Parses a polynomial. The variable count is the largest index used (at
/// least 1); use [`parse_poly_in`] to fix it.
pub fn parse_poly(text: &str) -> Result<Polynomial<BigRational>> {
    let terms = Parser::new(text).parse()?;
    let nvars = terms
        .iter()
        .flat_map(|(powers, _)| powers.iter().map(|&(v, _)| v + 1))
        .max()
        .unwrap_or(1);
    build(nvars, terms)
}

/// Parses a polynomial in exactly `nvars` variables.
pub fn parse_poly_in(text: &str, nvars: usize) -> Result<Polynomial<BigRational>> {
    let terms = Parser::new(text).parse()?;
    if let Some(v) = terms.iter().flat_map(|(p, _)| p.iter().map(|&(v, _)| v)).max() {
        if v >= nvars {
            return Err(Error::Parse {
                offset: 0,
                message: format!("variable x{} exceeds the {nvars} declared variables", v + 1),
            });
        }
    }
    build(nvars, terms)
}

/// Parses several polynomials and lifts them to a common variable count.
pub fn parse_polys<S: AsRef<str>>(texts: &[S]) -> Result<Vec<Polynomial<BigRational>>> {
    let polys = texts
        .iter()
        .map(|t| parse_poly(t.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let n = polys.iter().map(Polynomial::nvars).max().unwrap_or(1);
    polys.iter().map(|p| p.with_nvars(n)).collect()
}

type RawTerm = (Vec<(usize, u8)>, BigRational);

fn build(nvars: usize, terms: Vec<RawTerm>) -> Result<Polynomial<BigRational>> {
    let mut p = Polynomial::zero(nvars);
    for (powers, c) in terms {
        let mut exps = vec![0u32; nvars];
        for (v, e) in powers {
            exps[v] += e as u32;
        }
        if exps.iter().any(|&e| e > u8::MAX as u32) {
            return Err(Error::Parse {
                offset: 0,
                message: "exponent too large".into(),
            });
        }
        p.add_term(Monomial::new(exps.into_iter().map(|e| e as u8).collect()), c);
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<(BigInt, usize)> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut value = BigInt::zero();
        let mut count = 0;
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(&b) if b.is_ascii_digit() => {
                    value = value * 10 + (b - b'0');
                    self.pos += 1;
                    count += 1;
                }
                _ => break,
            }
        }
        if count == 0 {
            return self.err(start, "expected a number");
        }
        Ok((value, start))
    }

    fn small(&mut self, what: &str, max: usize) -> Result<(usize, usize)> {
        let (v, at) = self.digits()?;
        match usize::try_from(v) {
            Ok(v) if v <= max => Ok((v, at)),
            _ => self.err(at, format!("{what} out of range (max {max})")),
        }
    }

    fn parse(mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return self.err(self.pos, "empty polynomial"),
            _ => false,
        };
        loop {
            let (powers, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((powers, c));
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(b) => {
                    return self.err(self.pos, format!("unexpected character '{}'", b as char))
                }
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = BigRational::one();
        let mut have_coeff = false;
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let (num, _) = self.digits()?;
                let mut den = BigInt::one();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let (d, at) = self.digits()?;
                    if d.is_zero() {
                        return self.err(at, "zero denominator");
                    }
                    den = d;
                }
                coeff = BigRational::new(num, den);
                have_coeff = true;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    if self.peek() != Some(b'x') {
                        return self.err(self.pos, "expected a variable after '*'");
                    }
                }
            }
            Some(b'x') => {}
            Some(b) => return self.err(self.pos, format!("unexpected character '{}'", b as char)),
            None => return self.err(self.pos, "expected a term"),
        }
        let mut powers = Vec::new();
        while self.peek() == Some(b'x') {
            powers.push(self.factor()?);
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if self.peek() != Some(b'x') {
                    return self.err(self.pos, "expected a variable after '*'");
                }
            }
        }
        if !have_coeff && powers.is_empty() {
            return self.err(self.pos, "expected a term");
        }
        Ok((powers, coeff))
    }

    fn factor(&mut self) -> Result<(usize, u8)> {
        let at = self.pos;
        self.pos += 1; // the 'x'
        let (index, idx_at) = match self.peek() {
            Some(b) if b.is_ascii_digit() => self.small("variable index", usize::MAX)?,
            _ => return self.err(at, "unknown variable: expected x1..x13"),
        };
        if index == 0 {
            return self.err(idx_at, "unknown variable x0: variables are x1..x13");
        }
        if index > MAX_VARS {
            return self.err(idx_at, format!("variable index {index} > {MAX_VARS}"));
        }
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            exp = self.small("exponent", u8::MAX as usize)?.0 as u8;
        }
        Ok((index - 1, exp))
    }
}
