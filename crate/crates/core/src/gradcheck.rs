//! Certificates that a Gorenstein algebra of socle degree 4 is not
//! canonically graded.
//!
//! Suppose `A_G ≅ A_F` with `F` homogeneous and `x_n^2 ∘ F = 0`. The image
//! `w = ℓ_u + q` of `x_n` (with `ℓ_u = Σ u_i x_i` and `q` of order `>= 2`)
//! satisfies `w^2 ∘ G = 0`. Comparing coefficients constrains `u`:
//!
//! * in degree 2 only `ℓ_u^2 ∘ G[4]` contributes, since `ℓ_u q ∘ G[4]` has
//!   degree `<= 1` and `q^2 ∘ G` degree `<= 0`;
//! * in degree 1 the contributions are `ℓ_u^2 ∘ G[3]` and
//!   `2 ℓ_u q_2 ∘ G[4]`. The second vanishes once every surviving `u_a` has
//!   `(x_a x_t) ∘ G[4] = 0`, which is the `tail_ok` certificate.
//!
//! If all `u_i` are forced to vanish, `w` has no linear part and no
//! isomorphism exists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::apolar::{monomials_of_degree, Monomial, Polynomial};
use crate::construct::{stanley_witness, witness_f, witness_g, STANLEY_NVARS};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::Fp;
use crate::{Poly, Rational};

/// A quadratic form `u^T M u` in the unknowns `u_1, ..., u_n`, stored as the
/// symmetric matrix `M`.
#[derive(Clone, PartialEq, Eq)]
pub struct UQuadraticForm {
    coeffs: Vec<Vec<Rational>>,
}

impl UQuadraticForm {
    pub fn zero(n: usize) -> Self {
        UQuadraticForm {
            coeffs: vec![vec![Rational::zero(); n]; n],
        }
    }

    /// `Σ c u_i u_j` over the given terms; `(i, j)` and `(j, i)` are the
    /// same monomial.
    pub fn from_terms(n: usize, terms: &[(usize, usize, Rational)]) -> Self {
        let mut f = Self::zero(n);
        for (i, j, c) in terms {
            if i == j {
                f.coeffs[*i][*i] += c;
            } else {
                let half = c / Rational::from_integer(2.into());
                f.coeffs[*i][*j] += &half;
                f.coeffs[*j][*i] += &half;
            }
        }
        f
    }

    pub fn n_unknowns(&self) -> usize {
        self.coeffs.len()
    }

    /// The symmetric matrix entry `M[i][j]`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i][j]
    }

    /// Coefficient of the monomial `u_i u_j` (twice `M[i][j]` off the
    /// diagonal).
    pub fn monomial_coeff(&self, i: usize, j: usize) -> Rational {
        if i == j {
            self.coeffs[i][i].clone()
        } else {
            &self.coeffs[i][j] * Rational::from_integer(2.into())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    pub fn evaluate(&self, u: &[Rational]) -> Rational {
        let n = self.n_unknowns();
        let mut acc = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                if !self.coeffs[i][j].is_zero() {
                    acc += &self.coeffs[i][j] * &u[i] * &u[j];
                }
            }
        }
        acc
    }

    /// Sets the unknowns in `zeroed` to zero.
    pub fn restrict(&self, zeroed: &BTreeSet<usize>) -> Self {
        let mut f = self.clone();
        for &z in zeroed {
            for k in 0..f.n_unknowns() {
                f.coeffs[z][k] = Rational::zero();
                f.coeffs[k][z] = Rational::zero();
            }
        }
        f
    }

    /// Unknowns that occur with a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        let n = self.n_unknowns();
        (0..n)
            .filter(|&i| (0..n).any(|j| !self.coeffs[i][j].is_zero()))
            .collect()
    }

    /// Nonzero monomials `(i, j, coeff)` with `i <= j`.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.n_unknowns();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = self.monomial_coeff(i, j);
                if !c.is_zero() {
                    out.push((i, j, c));
                }
            }
        }
        out
    }

    fn pair_index(n: usize, i: usize, j: usize) -> usize {
        // position of (i, j), i <= j, in the row-major upper triangle
        i * n - i * (i + 1) / 2 + j
    }

    fn vector(&self) -> Vec<Rational> {
        let n = self.n_unknowns();
        let mut v = vec![Rational::zero(); n * (n + 1) / 2];
        for (i, j, c) in self.terms() {
            v[Self::pair_index(n, i, j)] = c;
        }
        v
    }
}

impl fmt::Display for UQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, j, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if i == j {
                write!(f, "u{}^2", i + 1)?;
            } else {
                write!(f, "u{}*u{}", i + 1, j + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UQuadraticForm({self})")
    }
}

fn require_quartic(g: &Poly) -> Result<()> {
    match g.degree() {
        Some(4) => Ok(()),
        found => Err(Error::DegreeMismatch { expected: 4, found }),
    }
}

fn quadric(n: usize, i: usize, j: usize) -> Poly {
    let mut exps = vec![0u8; n];
    exps[i] += 1;
    exps[j] += 1;
    Poly::monomial(&exps)
}

/// For each degree-2 monomial `μ`, the coefficient of `μ` in
/// `ℓ_u^2 ∘ G[4]` as a quadratic form in `u`.
pub fn degree2_constraints(g: &Poly) -> Result<BTreeMap<Monomial, UQuadraticForm>> {
    require_quartic(g)?;
    let n = g.nvars();
    let g4 = g.homogeneous_part(4);
    let mut out: BTreeMap<Monomial, UQuadraticForm> = monomials_of_degree(n, 2)
        .into_iter()
        .map(|m| (m, UQuadraticForm::zero(n)))
        .collect();
    for i in 0..n {
        for j in i..n {
            let d = quadric(n, i, j).contract(&g4)?;
            for (mu, c) in d.terms() {
                let form = out.get_mut(mu).expect("degree-2 monomial");
                form.coeffs[i][j] = c.clone();
                form.coeffs[j][i] = c.clone();
            }
        }
    }
    Ok(out)
}

/// The coefficient of `x_{t+1}` in `ℓ_u^2 ∘ G[3]` with the unknowns in
/// `zeroed` set to zero, and whether the order-2 tail of `w` provably does
/// not reach that coefficient.
pub fn degree1_constraint(
    g: &Poly,
    t: usize,
    zeroed: &BTreeSet<usize>,
) -> Result<(UQuadraticForm, bool)> {
    require_quartic(g)?;
    let n = g.nvars();
    if t >= n {
        return Err(Error::InvalidArgument(format!("variable x{} out of range", t + 1)));
    }
    let g3 = g.homogeneous_part(3);
    let g4 = g.homogeneous_part(4);
    let xt = Monomial::var(t, n);
    let mut form = UQuadraticForm::zero(n);
    for i in 0..n {
        for j in i..n {
            let c = quadric(n, i, j).contract(&g3)?.coeff(&xt);
            form.coeffs[i][j] = c.clone();
            form.coeffs[j][i] = c;
        }
    }
    let mut tail_ok = true;
    for a in (0..n).filter(|a| !zeroed.contains(a)) {
        if !quadric(n, a, t).contract(&g4)?.is_zero() {
            tail_ok = false;
            break;
        }
    }
    Ok((form.restrict(zeroed), tail_ok))
}

/// Which rule forced an unknown to vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A comparison reads `c u_j^2 = 0`.
    Single,
    /// Two comparisons `a u_j^2 + b u_j u_k`, `c u_k^2 + d u_j u_k` with
    /// `a, c != 0` and `ac != bd`.
    Pair,
    /// A linear combination of pending comparisons reads `c u_j^2 = 0`.
    Combination,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Single => "R1",
            Rule::Pair => "R2",
            Rule::Combination => "R3",
        })
    }
}

/// One unknown shown to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forced {
    /// 0-based index of `u`.
    pub unknown: usize,
    /// The comparison that completed the deduction.
    pub source: String,
    pub rule: Rule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Proven,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proven => "Proven",
            Status::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingOutcome {
    pub status: Status,
    pub forced_order: Vec<Forced>,
    pub transcript: Vec<String>,
}

/// A coefficient comparison in `w^2 ∘ G = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// Coefficient of a degree-2 monomial.
    Quadratic(Monomial),
    /// Coefficient of the variable `x_{t+1}`.
    Linear(usize),
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Quadratic(m) => write!(f, "{m}"),
            Comparison::Linear(t) => write!(f, "x{}", t + 1),
        }
    }
}

/// An entry of a comparison schedule, optionally naming the unknown it is
/// expected to kill.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScheduleEntry {
    pub comparison: Comparison,
    pub target: Option<usize>,
}

impl ScheduleEntry {
    pub fn quadratic(m: Monomial) -> Self {
        ScheduleEntry {
            comparison: Comparison::Quadratic(m),
            target: None,
        }
    }

    pub fn linear(t: usize) -> Self {
        ScheduleEntry {
            comparison: Comparison::Linear(t),
            target: Some(t),
        }
    }
}

/// Accumulates comparisons and saturates the forcing rules after each one.
pub struct ForcingEngine {
    n: usize,
    forced: BTreeSet<usize>,
    pending: Vec<(String, UQuadraticForm)>,
    order: Vec<Forced>,
    transcript: Vec<String>,
}

impl ForcingEngine {
    pub fn new(n: usize) -> Self {
        ForcingEngine {
            n,
            forced: BTreeSet::new(),
            pending: Vec::new(),
            order: Vec::new(),
            transcript: Vec::new(),
        }
    }

    pub fn forced(&self) -> &BTreeSet<usize> {
        &self.forced
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.transcript.push(line.into());
    }

    /// Adds the comparison `form = 0`.
    pub fn feed(&mut self, label: impl Into<String>, form: UQuadraticForm) -> Result<()> {
        if form.n_unknowns() != self.n {
            return Err(Error::MalformedSchedule(format!(
                "form in {} unknowns fed to an engine with {}",
                form.n_unknowns(),
                self.n
            )));
        }
        let label = label.into();
        self.transcript.push(format!("compare {label}: {form} = 0"));
        self.pending.push((label, form));
        self.saturate();
        Ok(())
    }

    /// Adds the degree-1 comparison at `x_{t+1}`, provided the tail
    /// certificate holds for the unknowns not yet forced.
    pub fn feed_linear(&mut self, g: &Poly, t: usize) -> Result<bool> {
        if t >= self.n || g.nvars() != self.n {
            return Err(Error::MalformedSchedule(format!("linear comparison at x{}", t + 1)));
        }
        let (form, tail_ok) = degree1_constraint(g, t, &self.forced)?;
        let label = format!("x{}", t + 1);
        if !tail_ok {
            self.transcript
                .push(format!("skip {label}: order-2 terms of w may reach this coefficient"));
            return Ok(false);
        }
        self.feed(label, form)?;
        Ok(true)
    }

    fn force(&mut self, j: usize, source: String, rule: Rule) {
        if self.forced.insert(j) {
            self.transcript.push(format!("  {rule} ({source}) forces u{} = 0", j + 1));
            self.order.push(Forced {
                unknown: j,
                source,
                rule,
            });
        }
    }

    fn saturate(&mut self) {
        loop {
            for (_, f) in &mut self.pending {
                *f = f.restrict(&self.forced);
            }
            self.pending.retain(|(_, f)| !f.is_zero());
            if let Some((j, src)) = self.single() {
                self.force(j, src, Rule::Single);
                continue;
            }
            if let Some((j, k, src)) = self.pair() {
                self.force(j, src.clone(), Rule::Pair);
                self.force(k, src, Rule::Pair);
                continue;
            }
            if let Some((j, src)) = self.combination() {
                self.force(j, src, Rule::Combination);
                continue;
            }
            break;
        }
    }

    fn single(&self) -> Option<(usize, String)> {
        self.pending.iter().find_map(|(label, f)| match f.terms().as_slice() {
            [(i, j, _)] if i == j => Some((*i, label.clone())),
            _ => None,
        })
    }

    fn pair(&self) -> Option<(usize, usize, String)> {
        let two = |f: &UQuadraticForm| -> Option<(usize, usize)> {
            let s: Vec<usize> = f.support().into_iter().collect();
            match s.as_slice() {
                [j, k] => Some((*j, *k)),
                _ => None,
            }
        };
        for (x, (lf, f)) in self.pending.iter().enumerate() {
            let Some((j, k)) = two(f) else { continue };
            for (lg, g) in &self.pending[x + 1..] {
                if g.support().iter().any(|v| *v != j && *v != k) {
                    continue;
                }
                for (p, q, first, second) in [(j, k, f, g), (k, j, f, g), (j, k, g, f), (k, j, g, f)] {
                    // first = a u_p^2 + b u_p u_q, second = c u_q^2 + d u_p u_q
                    if !first.get(q, q).is_zero() || !second.get(p, p).is_zero() {
                        continue;
                    }
                    let a = first.monomial_coeff(p, p);
                    let b = first.monomial_coeff(p, q);
                    let c = second.monomial_coeff(q, q);
                    let d = second.monomial_coeff(p, q);
                    if !a.is_zero() && !c.is_zero() && &a * &c != &b * &d {
                        return Some((p, q, format!("{lf} and {lg}")));
                    }
                }
            }
        }
        None
    }

    fn combination(&self) -> Option<(usize, String)> {
        if self.pending.len() < 2 {
            return None;
        }
        let n = self.n;
        let rows: Vec<Vec<Rational>> = self.pending.iter().map(|(_, f)| f.vector()).collect();
        let (rref, rank) = Matrix::from_rows(rows, n * (n + 1) / 2).ok()?.rref();
        for r in 0..rank {
            let row = rref.row(r);
            let mut nonzero = (0..row.len()).filter(|&c| !row[c].is_zero());
            let (Some(pc), None) = (nonzero.next(), nonzero.next()) else {
                continue;
            };
            if let Some(j) = (0..n).find(|&j| UQuadraticForm::pair_index(n, j, j) == pc) {
                let labels: Vec<&str> = self.pending.iter().map(|(l, _)| l.as_str()).collect();
                return Some((j, format!("combining {}", labels.join(", "))));
            }
        }
        None
    }

    pub fn outcome(mut self) -> ForcingOutcome {
        let status = if self.forced.len() == self.n {
            self.transcript
                .push("every linear coefficient of w vanishes, so w lies in m^2 and no isomorphism exists".into());
            Status::Proven
        } else {
            let open: Vec<String> = (0..self.n)
                .filter(|j| !self.forced.contains(j))
                .map(|j| format!("u{}", j + 1))
                .collect();
            self.transcript.push(format!("not forced: {}", open.join(", ")));
            Status::Unknown
        };
        ForcingOutcome {
            status,
            forced_order: self.order,
            transcript: self.transcript,
        }
    }
}

/// Runs `schedule` against the comparisons of `w^2 ∘ G = 0`.
pub fn forcing_engine(g: &Poly, schedule: &[ScheduleEntry]) -> Result<ForcingOutcome> {
    let n = g.nvars();
    let quad = degree2_constraints(g)?;
    let mut engine = ForcingEngine::new(n);
    for entry in schedule {
        if let Some(t) = entry.target {
            if t >= n {
                return Err(Error::MalformedSchedule(format!("target u{} out of range", t + 1)));
            }
        }
        match &entry.comparison {
            Comparison::Quadratic(m) => {
                let form = quad.get(m).ok_or_else(|| {
                    Error::MalformedSchedule(format!("{m} is not a degree-2 monomial in {n} variables"))
                })?;
                engine.feed(m.to_string(), form.clone())?;
            }
            Comparison::Linear(t) => {
                engine.feed_linear(g, *t)?;
            }
        }
        if let Some(t) = entry.target {
            if !engine.forced().contains(&t) {
                engine.note(format!("  expected u{} = 0 after {}, still open", t + 1, entry.comparison));
            }
        }
    }
    Ok(engine.outcome())
}

fn mono2(n: usize, i: usize, j: usize) -> Monomial {
    // 1-based indices
    Monomial::from_powers(n, &if i == j { vec![(i - 1, 2)] } else { vec![(i - 1, 1), (j - 1, 1)] })
}

/// The comparisons used for `G = witness_g(n, m)`, `m < C(n+1,2)`.
pub fn witness_schedule(n: usize, m: usize) -> Vec<ScheduleEntry> {
    let q = |i: usize, j: usize| ScheduleEntry::quadratic(mono2(n, i, j));
    let mut s: Vec<ScheduleEntry> = if n <= 3 {
        monomials_of_degree(n, 2).into_iter().map(ScheduleEntry::quadratic).collect()
    } else if m == n {
        let mut s = vec![q(1, 1), q(2, n)];
        s.extend((3..n).map(|j| q(j, j)));
        s
    } else if m <= n + 2 {
        let mut s = vec![q(1, 2), q(2, n)];
        s.extend((3..n).map(|j| q(j, j)));
        s
    } else if m < 2 * n {
        let mut s = vec![q(1, 2), q(2, n)];
        s.extend((3..=m - n).map(|j| q(j, j + 1)));
        s.extend((m - n + 1..n).map(|j| q(j, j)));
        s
    } else {
        let mut s = vec![q(1, 2), q(1, n)];
        s.extend((3..n).map(|j| q(j, j + 1)));
        s
    };
    if n <= 3 {
        s.extend((0..n).map(ScheduleEntry::linear));
    } else {
        s.push(ScheduleEntry::linear(n - 1));
    }
    s
}

/// The comparisons `x1 x11, x7 x12, x10 x13`, then `x1, ..., x10`.
pub fn stanley_schedule() -> Vec<ScheduleEntry> {
    let n = STANLEY_NVARS;
    let mut s: Vec<ScheduleEntry> = [(1, 11, 10), (7, 12, 11), (10, 13, 12)]
        .into_iter()
        .map(|(i, j, t)| ScheduleEntry {
            comparison: Comparison::Quadratic(mono2(n, i, j)),
            target: Some(t),
        })
        .collect();
    s.extend((0..10).map(ScheduleEntry::linear));
    s
}

/// Result of [`verify_not_canonically_graded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NcgVerdict {
    /// `m = C(n+1,2)`: every algebra with this Hilbert function is
    /// canonically graded, so there is nothing to certify.
    Compressed,
    Checked(ForcingOutcome),
}

impl NcgVerdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, NcgVerdict::Checked(o) if o.status == Status::Proven)
    }
}

/// Certifies that `A_G`, `G = witness_g(n, m)`, is not canonically graded.
pub fn verify_not_canonically_graded(n: usize, m: usize) -> Result<NcgVerdict> {
    if !(2..=crate::invsys::MAX_VARS).contains(&n) {
        return Err(Error::Precondition(format!("n = {n} must lie in 2..=13")));
    }
    let top = n * (n + 1) / 2;
    if m < n || m > top {
        return Err(Error::Precondition(format!("m = {m} must lie in {n}..={top}")));
    }
    if m == top {
        return Ok(NcgVerdict::Compressed);
    }
    let f = witness_f(n, m)?;
    let g = witness_g(n, m)?;
    let xn2 = Poly::monomial(&{
        let mut e = vec![0u8; n];
        e[n - 1] = 2;
        e
    });
    if !xn2.contract(&f)?.is_zero() {
        return Err(Error::ConstructionFault {
            case_path: format!("witness/n={n}/m={m}"),
            expected: format!("x{n}^2 annihilates F"),
            computed: "nonzero contraction".into(),
        });
    }
    let mut outcome = forcing_engine(&g, &witness_schedule(n, m))?;
    outcome.transcript.insert(
        0,
        format!("G = {g}; x{n}^2 kills F, so w = phi(x{n}) must satisfy w^2 o G = 0"),
    );
    if outcome.status == Status::Proven && n <= 4 && !optional_finite_field_crosscheck(&g, 13)? {
        return Err(Error::Inconsistent(format!(
            "({n},{m}): forcing proved u = 0 but F_13 has a nonzero solution"
        )));
    }
    Ok(NcgVerdict::Checked(outcome))
}

/// The same certificate for the 13-variable pair, with `x1` in the role of
/// the variable whose square kills `F`.
pub fn verify_stanley() -> Result<ForcingOutcome> {
    let (_, g) = stanley_witness()?;
    let mut outcome = forcing_engine(&g, &stanley_schedule())?;
    outcome
        .transcript
        .insert(0, "x1^2 kills F, so w = phi(x1) must satisfy w^2 o G = 0".into());
    Ok(outcome)
}

/// Largest `p^n` searched by [`optional_finite_field_crosscheck`].
pub const CROSSCHECK_LIMIT: u64 = 1 << 20;

/// Exhaustively checks over `F_p` that every `u` with `ℓ_u^2 ∘ G[4] = 0` has
/// `u_1 = ... = u_{n−1} = 0`.
pub fn optional_finite_field_crosscheck(g: &Poly, p: u64) -> Result<bool> {
    require_quartic(g)?;
    let n = g.nvars();
    if n > 4 {
        return Err(Error::TooLarge {
            what: "variable count for the finite-field search",
            value: n,
            max: 4,
        });
    }
    macro_rules! dispatch {
        ($($q:literal)*) => {
            match p {
                $($q => search::<$q>(g),)*
                _ => Err(Error::InvalidArgument(format!("unsupported prime {p}"))),
            }
        };
    }
    dispatch!(2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97)
}

fn search<const P: u64>(g: &Poly) -> Result<bool> {
    let n = g.nvars();
    let total = P.checked_pow(n as u32).filter(|&t| t <= CROSSCHECK_LIMIT).ok_or(Error::TooLarge {
        what: "finite-field search size",
        value: P.saturating_pow(n as u32) as usize,
        max: CROSSCHECK_LIMIT as usize,
    })?;
    let mut g4: Polynomial<Fp<P>> = Polynomial::zero(n);
    for (m, c) in g.homogeneous_part(4).terms() {
        let c = Fp::<P>::from_rational(c)
            .ok_or_else(|| Error::InvalidArgument(format!("{P} divides a denominator of G")))?;
        g4.add_term(m.clone(), c);
    }
    for code in 0..total {
        let mut u = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            u.push(rest % P);
            rest /= P;
        }
        if u[..n - 1].iter().all(|&x| x == 0) {
            continue;
        }
        let mut ell: Polynomial<Fp<P>> = Polynomial::zero(n);
        for (i, &x) in u.iter().enumerate() {
            ell.add_term(Monomial::var(i, n), Fp::new(x));
        }
        if (&ell * &ell).contract(&g4)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolar::text::{parse_poly, parse_poly_in};
    use crate::scalar::int;

    fn m(n: usize, s: &str) -> Monomial {
        parse_poly_in(s, n).unwrap().terms().next().unwrap().0.clone()
    }

    #[test]
    fn quartic_power_form() {
        let g = parse_poly("x1^4").unwrap();
        let forms = degree2_constraints(&g).unwrap();
        assert_eq!(forms[&m(1, "x1^2")].to_string(), "12*u1^2");
    }

    #[test]
    fn witness_form_contains_cube_term() {
        let g = witness_g(3, 3).unwrap();
        let forms = degree2_constraints(&g).unwrap();
        assert_eq!(forms[&m(3, "x2x3")].monomial_coeff(1, 1), int(6));
    }

    #[test]
    fn stanley_forms() {
        let (_, g) = stanley_witness().unwrap();
        let forms = degree2_constraints(&g).unwrap();
        assert_eq!(forms[&m(13, "x1x11")].to_string(), "6*u11^2");
        let zeroed: BTreeSet<usize> = [10, 11, 12].into();
        let (f, ok) = degree1_constraint(&g, 0, &zeroed).unwrap();
        assert_eq!(f.to_string(), "6*u1^2");
        assert!(ok);
    }

    #[test]
    fn final_linear_step() {
        let g = witness_g(3, 5).unwrap();
        let (f, ok) = degree1_constraint(&g, 2, &[0, 1].into()).unwrap();
        assert_eq!(f.to_string(), "6*u3^2");
        assert!(ok);
    }

    #[test]
    fn linear_form_without_cubic_part() {
        let g = parse_poly("x1^4+x1x2^3").unwrap();
        let (f, ok) = degree1_constraint(&g, 1, &BTreeSet::new()).unwrap();
        assert!(f.is_zero());
        assert!(!ok);
    }

    #[test]
    fn engine_trivial_cases() {
        let mut e = ForcingEngine::new(2);
        e.feed("x1^2", UQuadraticForm::from_terms(2, &[(0, 0, int(12))])).unwrap();
        e.feed("x2^2", UQuadraticForm::from_terms(2, &[(1, 1, int(12))])).unwrap();
        assert_eq!(e.outcome().status, Status::Proven);

        let mut e = ForcingEngine::new(2);
        e.feed("x1x2", UQuadraticForm::from_terms(2, &[(0, 1, int(1))])).unwrap();
        assert_eq!(e.outcome().status, Status::Unknown);
    }

    #[test]
    fn pair_rule_needs_nonzero_squares() {
        // u1 u2 = 0 and u2^2 + u1 u2 = 0 leave u1 free
        let mut e = ForcingEngine::new(2);
        e.feed("a", UQuadraticForm::from_terms(2, &[(0, 1, int(1))])).unwrap();
        e.feed("b", UQuadraticForm::from_terms(2, &[(1, 1, int(1)), (0, 1, int(1))])).unwrap();
        let o = e.outcome();
        assert_eq!(o.status, Status::Unknown);
        assert_eq!(o.forced_order.iter().map(|f| f.unknown).collect::<Vec<_>>(), [1]);

        let mut e = ForcingEngine::new(2);
        e.feed("a", UQuadraticForm::from_terms(2, &[(0, 0, int(1)), (0, 1, int(1))])).unwrap();
        e.feed("b", UQuadraticForm::from_terms(2, &[(1, 1, int(1)), (0, 1, int(2))])).unwrap();
        let o = e.outcome();
        assert_eq!(o.status, Status::Proven);
        assert!(o.forced_order.iter().all(|f| f.rule == Rule::Pair));

        // a c = b d: u1 = -u2 is a common zero
        let mut e = ForcingEngine::new(2);
        e.feed("a", UQuadraticForm::from_terms(2, &[(0, 0, int(1)), (0, 1, int(1))])).unwrap();
        e.feed("b", UQuadraticForm::from_terms(2, &[(1, 1, int(1)), (0, 1, int(1))])).unwrap();
        assert_eq!(e.outcome().status, Status::Unknown);
    }

    #[test]
    fn combination_rule() {
        // (u1^2 + u1 u2) - (u1 u2) = u1^2
        let mut e = ForcingEngine::new(2);
        e.feed("a", UQuadraticForm::from_terms(2, &[(0, 0, int(1)), (0, 1, int(1))])).unwrap();
        e.feed("b", UQuadraticForm::from_terms(2, &[(0, 1, int(3))])).unwrap();
        let o = e.outcome();
        assert_eq!(o.forced_order[0].rule, Rule::Combination);
        assert_eq!(o.forced_order[0].unknown, 0);
    }

    #[test]
    fn stanley_order() {
        let o = verify_stanley().unwrap();
        assert_eq!(o.status, Status::Proven);
        let order: Vec<usize> = o.forced_order.iter().map(|f| f.unknown + 1).collect();
        assert_eq!(order, [11, 12, 13, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn small_verdicts() {
        assert!(verify_not_canonically_graded(3, 5).unwrap().is_proven());
        assert!(verify_not_canonically_graded(4, 4).unwrap().is_proven());
        assert_eq!(verify_not_canonically_graded(3, 6).unwrap(), NcgVerdict::Compressed);
    }

    #[test]
    fn crosscheck_examples() {
        assert!(optional_finite_field_crosscheck(&witness_g(3, 5).unwrap(), 13).unwrap());
        assert!(optional_finite_field_crosscheck(&witness_g(2, 2).unwrap(), 13).unwrap());
        assert!(optional_finite_field_crosscheck(&parse_poly("x1^4+x2^4").unwrap(), 13).unwrap());
        // x1 x2^3: u1 free when u2 = 0
        assert!(!optional_finite_field_crosscheck(&parse_poly("x1x2^3+x1^3").unwrap(), 13).unwrap());
    }
}
