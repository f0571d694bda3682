//! Macaulay growth, O-sequence classification, enumeration, lex ideals and
//! Eliahou–Kervaire Betti numbers.

mod classify;
mod lex;
mod macaulay;

pub use classify::{
    classify_gorenstein_h1_3_s4, classify_gorenstein_s4_unimodal, classify_level_h1_3_s4,
    gorenstein_necessary, Reason, Verdict,
};
pub use lex::{ek_betti, lex_ideal, min_last_betti_lower_bound, minimalize, quotient_dim, BettiTable};
pub use macaulay::{is_o_sequence, macaulay_growth, macaulay_rep, socle_bound, MacaulayRep};

pub use crate::invsys::{OSequence, SocleType};

use crate::error::{Error, Result};

/// Upper limit on the number of sequences [`enumerate`] will produce.
pub const MAX_ENUMERATION: usize = 1_000_000;

/// Constraints for [`enumerate`]: socle degree `s`, fixed `h1`, and optional
/// per-degree ranges.
#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub s: usize,
    pub h1: usize,
    lower: Vec<usize>,
    upper: Vec<Option<usize>>,
}

impl EnumerationSpec {
    pub fn new(s: usize, h1: usize) -> Self {
        EnumerationSpec {
            s,
            h1,
            lower: vec![0; s + 1],
            upper: vec![None; s + 1],
        }
    }

    /// Restricts `h_i` to `lo..=hi`.
    pub fn with_range(mut self, i: usize, lo: usize, hi: Option<usize>) -> Self {
        if i <= self.s {
            self.lower[i] = lo;
            self.upper[i] = hi;
        }
        self
    }

    fn admits(&self, i: usize, v: usize) -> bool {
        v >= self.lower[i] && self.upper[i].map_or(true, |hi| v <= hi)
    }
}

/// All O-sequences `(1, h1, ..., h_s)` with `h_s >= 1` satisfying the spec,
/// in ascending lexicographic order.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<OSequence>> {
    let mut out = Vec::new();
    if spec.s == 0 {
        if spec.admits(0, 1) {
            out.push(OSequence::new(vec![1]));
        }
        return Ok(out);
    }
    if !spec.admits(0, 1) || !spec.admits(1, spec.h1) || spec.h1 == 0 {
        return Ok(out);
    }
    let mut prefix = vec![1, spec.h1];
    extend(spec, &mut prefix, &mut out)?;
    Ok(out)
}

fn extend(spec: &EnumerationSpec, prefix: &mut Vec<usize>, out: &mut Vec<OSequence>) -> Result<()> {
    let i = prefix.len() - 1;
    if i == spec.s {
        if out.len() >= MAX_ENUMERATION {
            return Err(Error::TooLarge {
                what: "enumeration size",
                value: out.len() + 1,
                max: MAX_ENUMERATION,
            });
        }
        out.push(OSequence::new(prefix.clone()));
        return Ok(());
    }
    let cap = macaulay_growth(prefix[i], i)?;
    for v in 1..=cap {
        if spec.admits(i + 1, v) {
            prefix.push(v);
            extend(spec, prefix, out)?;
            prefix.pop();
        }
    }
    Ok(())
}

/// Parses a list of sequences, one per line, with `#` comments.
pub fn parse_sequence_list(text: &str) -> Result<Vec<OSequence>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let h = body
            .parse::<OSequence>()
            .map_err(|e| Error::Data(format!("line {}: {e}", n + 1)))?;
        out.push(h);
    }
    Ok(out)
}

fn table_key(h: &OSequence) -> (usize, usize, usize) {
    (h.get(4), h.get(3), h.get(2))
}

/// The sequences `(1,3,h2,h3,h4)` that are local level (`h4 >= 2`) but absent
/// from `graded`, and the non-symmetric local Gorenstein ones (`h4 = 1`).
/// Both lists are sorted by `(h4, h3, h2)`.
pub fn tables_report(graded: &[OSequence]) -> Result<(Vec<OSequence>, Vec<OSequence>)> {
    let all = enumerate(&EnumerationSpec::new(4, 3))?;
    let mut table1 = Vec::new();
    let mut table2 = Vec::new();
    for h in all {
        if h.get(4) >= 2 {
            if classify_level_h1_3_s4(&h)?.admissible && !graded.contains(&h) {
                table1.push(h);
            }
        } else if classify_gorenstein_h1_3_s4(&h)?.admissible && !h.is_symmetric() {
            table2.push(h);
        }
    }
    table1.sort_by_key(table_key);
    table2.sort_by_key(table_key);
    Ok((table1, table2))
}

/// The shipped list of graded level sequences.
pub fn shipped_graded_list() -> Result<Vec<OSequence>> {
    parse_sequence_list(crate::GRADED_LEVEL_DATA)
}
