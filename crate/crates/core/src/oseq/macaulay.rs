use std::fmt;

use crate::apolar::{binomial, count_of_degree};
use crate::error::{Error, Result};
use crate::invsys::{OSequence, SocleType};

/// The `i`-th Macaulay representation `h = C(a_i, i) + C(a_{i−1}, i−1) + ...`
/// with `a_i > a_{i−1} > ... >= a_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    pub h: usize,
    pub i: usize,
    /// The pairs `(a_k, k)` in decreasing `k`.
    pub binomials: Vec<(usize, usize)>,
}

impl MacaulayRep {
    /// `h^{<i>} = Σ C(a_k + 1, k + 1)`.
    pub fn growth(&self) -> usize {
        self.binomials
            .iter()
            .map(|&(a, k)| binomial(a + 1, k + 1))
            .sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.binomials.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .binomials
            .iter()
            .map(|(a, k)| format!("C({a},{k})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Greedy binomial expansion of `h` with respect to `i`.
pub fn macaulay_rep(h: usize, i: usize) -> Result<MacaulayRep> {
    if i < 1 {
        return Err(Error::InvalidArgument("Macaulay representation needs i >= 1".into()));
    }
    let mut rest = h;
    let mut binomials = Vec::new();
    let mut k = i;
    while rest > 0 && k >= 1 {
        let mut a = k;
        while binomial(a + 1, k) <= rest {
            a += 1;
        }
        rest -= binomial(a, k);
        binomials.push((a, k));
        k -= 1;
    }
    Ok(MacaulayRep { h, i, binomials })
}

/// Macaulay's bound `h^{<i>}` on the next value of an O-sequence.
pub fn macaulay_growth(h: usize, i: usize) -> Result<usize> {
    Ok(macaulay_rep(h, i)?.growth())
}

/// Macaulay's criterion: `h_0 = 1` and `h_{i+1} <= h_i^{<i>}` for `i >= 1`.
pub fn is_o_sequence(h: &OSequence) -> bool {
    let v = h.values();
    if v.first() != Some(&1) {
        return false;
    }
    (1..v.len().saturating_sub(1)).all(|i| v[i + 1] <= macaulay_growth(v[i], i).expect("i >= 1"))
}

/// The componentwise bound `min{dim R_i, Σ_j e_{i+j} dim R_j}` in `h1`
/// variables, for `i = 0..=s`.
pub fn socle_bound(h1: usize, e: &SocleType) -> OSequence {
    let s = e.socle_degree();
    OSequence::new(
        (0..=s)
            .map(|i| {
                let total: usize = (0..=s - i).map(|j| e.get(i + j) * count_of_degree(h1, j)).sum();
                total.min(count_of_degree(h1, i))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_examples() {
        assert_eq!(macaulay_growth(2, 2).unwrap(), 2);
        assert_eq!(macaulay_growth(3, 2).unwrap(), 4);
        assert_eq!(macaulay_growth(6, 2).unwrap(), 10);
        for i in 1..6 {
            assert_eq!(macaulay_growth(1, i).unwrap(), 1);
            assert_eq!(macaulay_growth(0, i).unwrap(), 0);
        }
        assert!(macaulay_growth(3, 0).is_err());
    }

    #[test]
    fn representation_is_greedy() {
        let r = macaulay_rep(11, 2).unwrap();
        assert_eq!(r.binomials, [(5, 2), (1, 1)]);
        assert_eq!(r.to_string(), "C(5,2) + C(1,1)");
        let r = macaulay_rep(9, 3).unwrap();
        assert_eq!(r.binomials, [(4, 3), (3, 2), (2, 1)]);
    }

    #[test]
    fn pure_binomials() {
        for i in 1..6 {
            for a in i..12 {
                assert_eq!(macaulay_growth(binomial(a, i), i).unwrap(), binomial(a + 1, i + 1));
            }
        }
    }

    #[test]
    fn o_sequences() {
        assert!(is_o_sequence(&[1, 3, 6, 10, 15].into()));
        assert!(!is_o_sequence(&[1, 3, 2, 4, 2].into()));
        assert!(is_o_sequence(&[1, 4, 9, 2, 2].into()));
        assert!(!is_o_sequence(&[2, 1].into()));
    }

    #[test]
    fn socle_bounds() {
        let b = socle_bound(3, &SocleType::new(vec![0, 0, 0, 0, 1]));
        assert_eq!(&b.values()[1..], [3, 6, 3, 1]);
        let b = socle_bound(3, &SocleType::new(vec![0, 0, 0, 0, 2]));
        assert_eq!((b.get(2), b.get(3)), (6, 6));
        let b = socle_bound(5, &SocleType::new(vec![0, 0, 0, 0, 3]));
        assert_eq!(b.get(3), 15);
    }
}
