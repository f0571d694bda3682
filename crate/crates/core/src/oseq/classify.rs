use std::fmt;

use super::macaulay::is_o_sequence;
use crate::apolar::binomial;
use crate::error::{Error, Result};
use crate::invsys::OSequence;

/// Why a sequence was or was not accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Every condition of the criterion holds; the text lists them.
    Satisfied(String),
    /// The named inequality fails.
    Failed(String),
    /// The criterion does not decide this sequence. `known_witness` names an
    /// explicit construction when one is available anyway.
    OutsideClassifiedRange { known_witness: Option<String> },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Satisfied(s) | Reason::Failed(s) => write!(f, "{s}"),
            Reason::OutsideClassifiedRange { known_witness: None } => {
                write!(f, "outside classified range")
            }
            Reason::OutsideClassifiedRange {
                known_witness: Some(w),
            } => write!(f, "outside classified range; admissible by the {w} construction"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub admissible: bool,
    pub reason: Reason,
    pub witness_hint: Option<String>,
}

impl Verdict {
    fn yes(reason: impl Into<String>, witness: &str) -> Self {
        Verdict {
            admissible: true,
            reason: Reason::Satisfied(reason.into()),
            witness_hint: Some(witness.to_string()),
        }
    }

    fn no(reason: impl Into<String>) -> Self {
        Verdict {
            admissible: false,
            reason: Reason::Failed(reason.into()),
            witness_hint: None,
        }
    }

    /// True when the criterion could not decide and no witness is known.
    pub fn is_undecided(&self) -> bool {
        matches!(self.reason, Reason::OutsideClassifiedRange { .. }) && !self.admissible
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match (&self.reason, self.admissible) {
            (Reason::OutsideClassifiedRange { .. }, false) => "unknown",
            (_, true) => "admissible",
            (_, false) => "not admissible",
        };
        write!(f, "{head}: {}", self.reason)
    }
}

fn require_o_sequence(h: &OSequence) -> Result<()> {
    if is_o_sequence(h) {
        Ok(())
    } else {
        Err(Error::NotOSequence(h.to_string()))
    }
}

/// The necessary conditions for Gorenstein sequences:
/// `h_{s−1} <= h_1` and `h_{s−2} <= C(h_{s−1}+1, 2) + (h_1 − h_{s−1})`.
pub fn gorenstein_necessary(h: &OSequence) -> Result<Verdict> {
    let s = h.socle_degree();
    if s < 2 || h.get(s) != 1 {
        return Err(Error::Precondition(format!(
            "{h}: need socle degree >= 2 and h_s = 1"
        )));
    }
    let (h1, a, b) = (h.get(1), h.get(s - 1), h.get(s - 2));
    if a > h1 {
        return Ok(Verdict::no(format!("h{} = {a} > h1 = {h1}", s - 1)));
    }
    let bound = binomial(a + 1, 2) + (h1 - a);
    if b > bound {
        return Ok(Verdict::no(format!(
            "h{} = {b} > C(h{}+1,2) + (h1 - h{}) = {bound}",
            s - 2,
            s - 1,
            s - 1
        )));
    }
    Ok(Verdict::yes(
        format!("h{} <= h1 and h{} <= {bound}", s - 1, s - 2),
        "gorenstein_construct",
    ))
}

fn check_shape(h: &OSequence, h1: Option<usize>) -> Result<()> {
    let v = h.values();
    let ok = v.len() == 5 && v[0] == 1 && h1.map_or(true, |x| v[1] == x);
    if ok {
        Ok(())
    } else {
        let want = h1.map_or("(1,h1,h2,h3,h4)".to_string(), |x| format!("(1,{x},h2,h3,h4)"));
        Err(Error::ShapeMismatch(format!("{h} is not of the form {want}")))
    }
}

/// Gorenstein sequences `(1,3,h2,h3,1)`: admissible iff `h3 <= 3` and
/// `h2 <= C(h3+1,2) + (3 − h3)`.
pub fn classify_gorenstein_h1_3_s4(h: &OSequence) -> Result<Verdict> {
    check_shape(h, Some(3))?;
    if h.get(4) != 1 {
        return Err(Error::ShapeMismatch(format!("{h}: expected h4 = 1")));
    }
    require_o_sequence(h)?;
    let (h2, h3) = (h.get(2), h.get(3));
    if h3 > 3 {
        return Ok(Verdict::no(format!("h3 = {h3} > 3")));
    }
    let bound = binomial(h3 + 1, 2) + (3 - h3);
    if h2 > bound {
        return Ok(Verdict::no(format!("h2 = {h2} > C(h3+1,2) + (3 - h3) = {bound}")));
    }
    Ok(Verdict::yes(
        format!("h3 <= 3 and h2 <= {bound}"),
        "gorenstein_construct",
    ))
}

/// Level sequences `(1,3,h2,h3,h4)` with `h4 >= 2`: admissible iff
/// `h3 <= 3*h4`.
pub fn classify_level_h1_3_s4(h: &OSequence) -> Result<Verdict> {
    check_shape(h, Some(3))?;
    if h.get(4) < 2 {
        return Err(Error::Precondition(format!("{h}: level classification needs h4 >= 2")));
    }
    require_o_sequence(h)?;
    if h.get(3) > 3 * h.get(4) {
        Ok(Verdict::no("h3 > 3*h4"))
    } else {
        Ok(Verdict::yes("h3 <= 3*h4", "level_construct_h1_3"))
    }
}

/// Gorenstein sequences `(1,h1,h2,h3,1)`.
///
/// The necessary conditions together with `h2 >= h3` suffice; for
/// `h1 <= 12` they are also necessary. For `h2 < h3` and `h1 >= 13` the
/// verdict is undecided, except for `(1,13,12,13,1)` which has an explicit
/// witness.
pub fn classify_gorenstein_s4_unimodal(h: &OSequence) -> Result<Verdict> {
    check_shape(h, None)?;
    if h.get(4) != 1 {
        return Err(Error::ShapeMismatch(format!("{h}: expected h4 = 1")));
    }
    require_o_sequence(h)?;
    let nec = gorenstein_necessary(h)?;
    if !nec.admissible {
        return Ok(nec);
    }
    let (h1, h2, h3) = (h.get(1), h.get(2), h.get(3));
    if h2 >= h3 {
        return Ok(Verdict::yes(
            format!("{} and h2 >= h3", nec.reason),
            "gorenstein_construct",
        ));
    }
    if h1 <= 12 {
        return Ok(Verdict::no("h2 < h3 with h1 <= 12"));
    }
    if h.values() == [1, 13, 12, 13, 1] {
        return Ok(Verdict {
            admissible: true,
            reason: Reason::OutsideClassifiedRange {
                known_witness: Some("stanley_witness".into()),
            },
            witness_hint: Some("stanley_witness".into()),
        });
    }
    Ok(Verdict {
        admissible: false,
        reason: Reason::OutsideClassifiedRange {
            known_witness: None,
        },
        witness_hint: None,
    })
}
