use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::macaulay::is_o_sequence;
use crate::apolar::{binomial, monomials_of_degree, Monomial};
use crate::error::{Error, Result};
use crate::invsys::OSequence;

/// Minimal generators of the lex ideal `L ⊂ K[x1..xr]` with Hilbert function
/// `h` (with `h_d = 0` for `d > s`), ordered by degree and then lex
/// descending.
pub fn lex_ideal(h: &OSequence, r: usize) -> Result<Vec<Monomial>> {
    if !is_o_sequence(h) {
        return Err(Error::NotOSequence(h.to_string()));
    }
    if h.embedding_dim() > r {
        return Err(Error::InvalidArgument(format!(
            "h1 = {} exceeds the {r} variables",
            h.embedding_dim()
        )));
    }
    let s = h.socle_degree();
    let mut gens = Vec::new();
    let mut previous: HashSet<Monomial> = HashSet::new();
    for d in 0..=s + 1 {
        let all = monomials_of_degree(r, d);
        let size = all.len() - h.get(d);
        let stratum: HashSet<Monomial> = all[..size].iter().cloned().collect();
        let mut multiples = HashSet::new();
        for m in &previous {
            for v in 0..r {
                let up = m.mul_var(v);
                if !stratum.contains(&up) {
                    return Err(Error::NotOSequence(format!(
                        "{h}: lex segments are not nested in degree {d}"
                    )));
                }
                multiples.insert(up);
            }
        }
        gens.extend(all[..size].iter().filter(|m| !multiples.contains(*m)).cloned());
        previous = stratum;
    }
    Ok(gens)
}

/// Graded Betti numbers `β_{i,j}` of `P/L`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, count: usize) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    /// The nonzero `β_{i,j}` for fixed `i`, keyed by `j`.
    pub fn row(&self, i: usize) -> BTreeMap<usize, usize> {
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|(&(_, j), &c)| (j, c))
            .collect()
    }

    pub fn total(&self, i: usize) -> usize {
        self.row(i).values().sum()
    }

    /// The projective dimension.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Checks `Σ_i (−1)^i Σ_j β_{i,j} t^j = (1 − t)^r Σ_d h_d t^d`.
    pub fn matches_hilbert_series(&self, h: &OSequence, r: usize) -> bool {
        let mut rhs: Vec<i128> = h.values().iter().map(|&x| x as i128).collect();
        for _ in 0..r {
            let mut next = vec![0i128; rhs.len() + 1];
            for (d, &c) in rhs.iter().enumerate() {
                next[d] += c;
                next[d + 1] -= c;
            }
            rhs = next;
        }
        let mut lhs = vec![0i128; rhs.len()];
        for (&(i, j), &c) in &self.entries {
            if j >= lhs.len() {
                lhs.resize(j + 1, 0);
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            lhs[j] += sign * c as i128;
        }
        let n = lhs.len().max(rhs.len());
        lhs.resize(n, 0);
        rhs.resize(n, 0);
        lhs == rhs
    }
}

impl fmt::Display for BettiTable {
    /// One line per homological index, e.g. `1: 2:1 3:14 5:2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.length() {
            let row: Vec<String> = self.row(i).iter().map(|(j, c)| format!("{j}:{c}")).collect();
            writeln!(f, "{i}: {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Drops generators divisible by another generator and duplicates.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(l, other)| {
            l != k && other.divides(g) && (other != g || l < k)
        });
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

/// Betti numbers of `P/L` for a stable monomial ideal `L` by the
/// Eliahou–Kervaire formula
/// `β_{i+1, i+deg u} = Σ_u C(max(u) − 1, i)`.
pub fn ek_betti(gens: &[Monomial], r: usize) -> Result<BettiTable> {
    if let Some(g) = gens.iter().find(|g| g.nvars() != r) {
        return Err(Error::VariableCountMismatch(r, g.nvars()));
    }
    let gens = minimalize(gens);
    let in_ideal = |m: &Monomial| gens.iter().any(|g| g.divides(m));
    for u in &gens {
        let Some(top) = u.max_var() else {
            return Err(Error::InvalidArgument("the unit ideal has no resolution here".into()));
        };
        let base = u.div_var(top).expect("top variable divides u");
        for j in 0..top {
            let swapped = base.mul_var(j);
            if !in_ideal(&swapped) {
                return Err(Error::NotStable(format!("{u} is a generator but {swapped} is not in the ideal")));
            }
        }
    }
    let mut table = BettiTable::default();
    table.add(0, 0, 1);
    for u in &gens {
        let m = u.max_var().expect("checked above") + 1;
        for i in 0..m {
            table.add(i + 1, i + u.degree(), binomial(m - 1, i));
        }
    }
    Ok(table)
}

/// `Σ_j max(0, β_{i,j} − β_{i−1,j})`: a lower bound for `β_i` after any
/// sequence of consecutive cancellations, valid at the last index `i`.
pub fn min_last_betti_lower_bound(b: &BettiTable, i: usize) -> usize {
    if i == 0 {
        return b.total(0);
    }
    b.row(i)
        .iter()
        .map(|(&j, &c)| c.saturating_sub(b.get(i - 1, j)))
        .sum()
}

/// Number of monomials of degree `d` outside `L`, for cross-checks.
pub fn quotient_dim(gens: &[Monomial], r: usize, d: usize) -> usize {
    monomials_of_degree(r, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(gens: &[Monomial]) -> Vec<String> {
        gens.iter().map(Monomial::to_string).collect()
    }

    fn mono(exps: &[u8]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn small_lex_ideals() {
        assert_eq!(names(&lex_ideal(&[1, 1, 1].into(), 1).unwrap()), ["x1^3"]);
        assert_eq!(
            names(&lex_ideal(&[1, 2, 1].into(), 2).unwrap()),
            ["x1^2", "x1*x2", "x2^3"]
        );
        assert!(lex_ideal(&[1, 3, 2, 4].into(), 3).is_err());
        assert!(lex_ideal(&[1, 3].into(), 2).is_err());
    }

    #[test]
    fn lex_quotient_matches_h() {
        let h: OSequence = [1, 4, 9, 2, 2].into();
        let gens = lex_ideal(&h, 4).unwrap();
        for d in 0..7 {
            assert_eq!(quotient_dim(&gens, 4, d), h.get(d));
        }
    }

    #[test]
    fn betti_small() {
        let t = ek_betti(&[mono(&[2])], 1).unwrap();
        assert_eq!(t.row(1), BTreeMap::from([(2, 1)]));
        assert_eq!(t.length(), 1);
        let t = ek_betti(&[mono(&[1, 0]), mono(&[0, 2])], 2).unwrap();
        assert_eq!(t.row(1), BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(t.row(2), BTreeMap::from([(3, 1)]));
        assert!(matches!(ek_betti(&[mono(&[0, 2])], 2), Err(Error::NotStable(_))));
    }

    #[test]
    fn lower_bound() {
        let mut b = BettiTable::default();
        b.add(3, 6, 7);
        b.add(4, 6, 7);
        assert_eq!(min_last_betti_lower_bound(&b, 4), 0);
        b.add(4, 8, 2);
        assert_eq!(min_last_betti_lower_bound(&b, 4), 2);
    }
}
