//! The `apolar` command line.
//!
//! [`run`] parses arguments, dispatches to the engines in `apolar_core` and
//! writes data to `out` and logs to `err`. It returns the process exit code:
//! 0 success, 1 negative verdict, 2 unknown, 3 usage or parse error, 4
//! internal assertion failure.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use apolar_core::apolar::text::{parse_poly, MAX_VARS};
use apolar_core::construct::{gorenstein_construct, level_construct_h1_3, stanley_witness, witness_f, witness_g};
use apolar_core::gradcheck::{verify_not_canonically_graded, verify_stanley, ForcingOutcome, NcgVerdict, Status};
use apolar_core::invsys::{graded_hilbert_function, local_hilbert_function, InverseSystem, OSequence};
use apolar_core::oseq::{
    classify_gorenstein_h1_3_s4, classify_gorenstein_s4_unimodal, classify_level_h1_3_s4, ek_betti, enumerate,
    lex_ideal, min_last_betti_lower_bound, parse_sequence_list, shipped_graded_list, tables_report,
    EnumerationSpec, Reason, Verdict,
};
use apolar_core::qdecomp::q_decomposition;
use apolar_core::{Error, Poly};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_FAULT: i32 = 4;

/// Environment variable overriding the graded level data file.
pub const GRADED_DATA_ENV: &str = "APOLAR_GRADED_DATA";

#[derive(Parser, Debug)]
#[command(name = "apolar", version, about = "Inverse systems, Hilbert functions and O-sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of the algebra defined by an inverse system.
    Hf {
        #[command(flatten)]
        polys: PolyArgs,
        /// Use the graded Hilbert function (generators must be forms).
        #[arg(long)]
        graded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a sequence is a level or Gorenstein O-sequence.
    Classify {
        /// A level sequence 1,3,h2,h3,h4 with h4 >= 2.
        #[arg(long, value_name = "H", conflicts_with = "gorenstein", required_unless_present = "gorenstein")]
        level: Option<String>,
        /// A Gorenstein sequence 1,h1,h2,h3,1.
        #[arg(long, value_name = "H")]
        gorenstein: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Generators realizing an admissible Hilbert function.
    Construct {
        /// 1,h1,h2,h3,1 or 1,3,h2,h3,h4.
        h: String,
        #[arg(long)]
        json: bool,
    },
    /// The local-only level and Gorenstein sequences with h1 = 3, s = 4.
    Tables {
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV output (the default).
        #[arg(long)]
        csv: bool,
    },
    /// Q-decomposition of the associated graded ring.
    Qdecomp {
        #[command(flatten)]
        polys: PolyArgs,
        #[arg(long)]
        json: bool,
    },
    /// The non-canonically-graded pair F, G.
    Witness {
        #[command(flatten)]
        which: WitnessArgs,
        #[arg(long)]
        json: bool,
    },
    /// Certify that the witness G is not canonically graded.
    VerifyNcg {
        #[command(flatten)]
        which: WitnessArgs,
        #[arg(long)]
        json: bool,
    },
    /// Lex ideal of a Hilbert function and its Betti table.
    Betti {
        #[arg(long, value_name = "H")]
        h: String,
        #[arg(long, value_name = "R")]
        vars: usize,
        #[arg(long)]
        json: bool,
    },
    /// List O-sequences.
    Enumerate {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        h1: usize,
        /// Restrict h_i to lo..=hi; `hi` may be omitted (`i:lo:`).
        #[arg(long = "range", value_name = "I:LO:HI")]
        ranges: Vec<String>,
        /// Keep only sequences admissible by the h1 = 3, s = 4 classification.
        #[arg(long)]
        admissible: bool,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// A polynomial such as "x1^4 + x1^2x2^2 - 1/2*x3^2"; repeatable.
    #[arg(short = 'f', long = "poly", value_name = "POLY", required = true)]
    polys: Vec<String>,
    /// Number of variables; defaults to the largest index used.
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long, required_unless_present = "stanley", requires = "m")]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// The 13-variable pair with Hilbert function 1,13,12,13,1.
    #[arg(long, conflicts_with_all = ["n", "m"])]
    stanley: bool,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ConstructionFault { .. } | Error::Inconsistent(_) => EXIT_FAULT,
            Error::NotOSequence(_) | Error::Precondition(_) => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // reader went away, as with `| head`
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_FAULT,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(cli.command, out, err)));
    match result {
        Ok(Ok(code)) => code,
        Ok(Err(f)) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
        Err(panic) => {
            let what = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            let _ = writeln!(err, "internal error: {what}");
            EXIT_FAULT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Hf { polys, graded, json } => cmd_hf(&polys, graded, json, out),
        Command::Classify { level, gorenstein, json } => cmd_classify(level, gorenstein, json, out),
        Command::Construct { h, json } => cmd_construct(&h, json, out),
        Command::Tables { json, .. } => cmd_tables(json, out),
        Command::Qdecomp { polys, json } => cmd_qdecomp(&polys, json, out),
        Command::Witness { which, json } => cmd_witness(&which, json, out),
        Command::VerifyNcg { which, json } => cmd_verify(&which, json, out, err),
        Command::Betti { h, vars, json } => cmd_betti(&h, vars, json, out),
        Command::Enumerate {
            s,
            h1,
            ranges,
            admissible,
            json,
            ..
        } => cmd_enumerate(s, h1, &ranges, admissible, json, out),
    }
}

fn parse_seq(text: &str) -> std::result::Result<OSequence, Failure> {
    text.parse::<OSequence>().map_err(Failure::from)
}

fn parse_generators(args: &PolyArgs) -> std::result::Result<Vec<Poly>, Failure> {
    let mut polys = Vec::with_capacity(args.polys.len());
    for (k, text) in args.polys.iter().enumerate() {
        let p = parse_poly(text).map_err(|e| usage(format!("polynomial {}: {e}", k + 1)))?;
        polys.push(p);
    }
    let widest = polys.iter().map(Poly::nvars).max().unwrap_or(0).max(1);
    let n = match args.vars {
        Some(v) if v < widest => return Err(usage(format!("--vars {v} is smaller than x{widest}"))),
        Some(v) if v > MAX_VARS => return Err(usage(format!("--vars {v} exceeds {MAX_VARS}"))),
        Some(v) => v,
        None => widest,
    };
    polys
        .iter()
        .map(|p| p.with_nvars(n).map_err(Failure::from))
        .collect()
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({ "mono": m.exps(), "coeff": c.to_string() }))
            .collect(),
    )
}

fn seq_json(h: &OSequence) -> Value {
    json!(h.values())
}

fn verdict_json(v: &Verdict) -> Value {
    let (kind, detail, known) = match &v.reason {
        Reason::Satisfied(s) => ("satisfied", Some(s.clone()), None),
        Reason::Failed(s) => ("failed", Some(s.clone()), None),
        Reason::OutsideClassifiedRange { known_witness } => {
            ("outside_classified_range", None, known_witness.clone())
        }
    };
    json!({
        "admissible": v.admissible,
        "reason": { "kind": kind, "detail": detail, "known_witness": known, "text": v.reason.to_string() },
        "witness_hint": v.witness_hint,
    })
}

fn emit_json(out: &mut dyn Write, v: &Value) -> std::result::Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))?;
    Ok(())
}

fn cmd_hf(args: &PolyArgs, graded: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let gens = parse_generators(args)?;
    let h = if graded {
        graded_hilbert_function(&gens)?
    } else {
        local_hilbert_function(&InverseSystem::new(gens)?)
    };
    if json {
        emit_json(out, &json!({ "hilbert_function": seq_json(&h), "graded": graded }))?;
    } else {
        writeln!(out, "{h}")?;
    }
    Ok(EXIT_OK)
}

fn verdict_code(v: &Verdict) -> i32 {
    if v.admissible {
        EXIT_OK
    } else if v.is_undecided() {
        EXIT_UNKNOWN
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_classify(level: Option<String>, gorenstein: Option<String>, json: bool, out: &mut dyn Write) -> Outcome {
    let result = match (level, gorenstein) {
        (Some(text), _) => classify_level_h1_3_s4(&parse_seq(&text)?),
        (None, Some(text)) => {
            let h = parse_seq(&text)?;
            if h.len() == 5 && h.get(1) == 3 {
                classify_gorenstein_h1_3_s4(&h)
            } else {
                classify_gorenstein_s4_unimodal(&h)
            }
        }
        (None, None) => return Err(usage("one of --level or --gorenstein is required")),
    };
    let verdict = match result {
        Ok(v) => v,
        Err(Error::NotOSequence(h)) => Verdict {
            admissible: false,
            reason: Reason::Failed(format!("{h} is not an O-sequence")),
            witness_hint: None,
        },
        Err(e) => return Err(e.into()),
    };
    if json {
        emit_json(out, &verdict_json(&verdict))?;
    } else {
        writeln!(out, "{verdict}")?;
    }
    Ok(verdict_code(&verdict))
}

fn cmd_construct(text: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let h = parse_seq(text)?;
    if h.len() != 5 {
        return Err(usage(format!("{h}: only socle degree 4 is supported")));
    }
    let recipe = if h.get(4) == 1 {
        gorenstein_construct(&h)?
    } else {
        level_construct_h1_3(&h)?
    };
    if json {
        emit_json(
            out,
            &json!({
                "target_h": seq_json(&recipe.target_h),
                "case_path": recipe.case_path,
                "generators": recipe.generators.iter().map(poly_json).collect::<Vec<_>>(),
            }),
        )?;
    } else {
        writeln!(out, "h = {}", recipe.target_h)?;
        writeln!(out, "case_path = {}", recipe.case_path)?;
        for (k, g) in recipe.generators.iter().enumerate() {
            writeln!(out, "f{} = {g}", k + 1)?;
        }
    }
    Ok(EXIT_OK)
}

fn graded_list() -> std::result::Result<Vec<OSequence>, Failure> {
    match std::env::var_os(GRADED_DATA_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("{}: {e}", path.to_string_lossy())))?;
            Ok(parse_sequence_list(&text)?)
        }
        None => Ok(shipped_graded_list()?),
    }
}

fn cmd_tables(json: bool, out: &mut dyn Write) -> Outcome {
    let (t1, t2) = tables_report(&graded_list()?)?;
    if json {
        let rows = |t: &[OSequence]| t.iter().map(seq_json).collect::<Vec<_>>();
        emit_json(out, &json!({ "table1": rows(&t1), "table2": rows(&t2) }))?;
    } else {
        writeln!(out, "table,h0,h1,h2,h3,h4")?;
        for (name, t) in [("1", &t1), ("2", &t2)] {
            for h in t {
                writeln!(out, "{name},{h}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_qdecomp(args: &PolyArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let sys = InverseSystem::new(parse_generators(args)?)?;
    let h = local_hilbert_function(&sys);
    let q = q_decomposition(&sys)?;
    if json {
        let rows: Vec<Value> = q
            .q_hf
            .iter()
            .enumerate()
            .map(|(a, row)| json!({ "a": a, "hf": seq_json(row), "symmetric": q.is_symmetric_row(a) }))
            .collect();
        emit_json(
            out,
            &json!({
                "hilbert_function": seq_json(&h),
                "socle_degree": q.s,
                "rows": rows,
                "symmetric": q.is_symmetric(),
            }),
        )?;
    } else {
        writeln!(out, "HF = {h}")?;
        for (a, row) in q.q_hf.iter().enumerate() {
            let tag = if q.is_symmetric_row(a) { "symmetric" } else { "not symmetric" };
            writeln!(out, "Q({a}) = {row}  {tag}")?;
        }
        writeln!(out, "all rows symmetric: {}", if q.is_symmetric() { "yes" } else { "no" })?;
    }
    Ok(EXIT_OK)
}

fn witness_pair(which: &WitnessArgs) -> std::result::Result<(Poly, Poly), Failure> {
    if which.stanley {
        return Ok(stanley_witness()?);
    }
    let (n, m) = (which.n.unwrap_or(0), which.m.unwrap_or(0));
    Ok((witness_f(n, m)?, witness_g(n, m)?))
}

fn cmd_witness(which: &WitnessArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let (f, g) = match witness_pair(which) {
        Err(f) if f.code == EXIT_NEGATIVE => return Err(usage(f.message)),
        other => other?,
    };
    if json {
        emit_json(out, &json!({ "F": poly_json(&f), "G": poly_json(&g) }))?;
    } else {
        writeln!(out, "F = {f}")?;
        writeln!(out, "G = {g}")?;
    }
    Ok(EXIT_OK)
}

fn outcome_json(o: &ForcingOutcome) -> Value {
    json!({
        "status": o.status.to_string(),
        "forced_order": o.forced_order.iter().map(|f| json!({
            "unknown": f.unknown + 1,
            "source": f.source,
            "rule": f.rule.to_string(),
        })).collect::<Vec<_>>(),
        "transcript": o.transcript,
    })
}

fn cmd_verify(which: &WitnessArgs, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let verdict = if which.stanley {
        NcgVerdict::Checked(verify_stanley()?)
    } else {
        verify_not_canonically_graded(which.n.unwrap_or(0), which.m.unwrap_or(0))
            .map_err(|e| match e {
                Error::Precondition(m) => usage(m),
                other => other.into(),
            })?
    };
    let outcome = match verdict {
        NcgVerdict::Compressed => {
            let text = "compressed: every algebra with this Hilbert function is canonically graded";
            if json {
                emit_json(out, &json!({ "status": "Compressed", "message": text }))?;
            } else {
                writeln!(out, "{text}")?;
            }
            return Ok(EXIT_NEGATIVE);
        }
        NcgVerdict::Checked(o) => o,
    };
    for line in &outcome.transcript {
        writeln!(err, "{line}")?;
    }
    if json {
        emit_json(out, &outcome_json(&outcome))?;
    } else {
        writeln!(out, "{}", outcome.status)?;
        let order: Vec<String> = outcome
            .forced_order
            .iter()
            .map(|f| format!("u{} ({}, {})", f.unknown + 1, f.rule, f.source))
            .collect();
        for line in order {
            writeln!(out, "{line}")?;
        }
    }
    Ok(match outcome.status {
        Status::Proven => EXIT_OK,
        Status::Unknown => EXIT_UNKNOWN,
    })
}

fn cmd_betti(text: &str, vars: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let h = parse_seq(text)?;
    let gens = lex_ideal(&h, vars).map_err(|e| match e {
        Error::NotOSequence(_) => usage(e.to_string()),
        other => other.into(),
    })?;
    let b = ek_betti(&gens, vars)?;
    if !b.matches_hilbert_series(&h, vars) {
        return Err(Error::Inconsistent("Betti table does not match the Hilbert series".into()).into());
    }
    let last = b.length();
    let bound = min_last_betti_lower_bound(&b, last);
    if json {
        let table: Vec<Value> = b
            .entries()
            .map(|((i, j), c)| json!({ "i": i, "j": j, "beta": c }))
            .collect();
        emit_json(
            out,
            &json!({
                "h": seq_json(&h),
                "vars": vars,
                "generators": gens.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "betti": table,
                "last_betti_lower_bound": bound,
            }),
        )?;
    } else {
        let names: Vec<String> = gens.iter().map(|m| m.to_string()).collect();
        writeln!(out, "L = ({})", names.join(", "))?;
        write!(out, "{b}")?;
        writeln!(out, "beta_{last} after cancellations >= {bound}")?;
    }
    Ok(EXIT_OK)
}

fn parse_range(text: &str) -> std::result::Result<(usize, usize, Option<usize>), Failure> {
    let bad = || usage(format!("range `{text}` is not of the form i:lo:hi"));
    let parts: Vec<&str> = text.split(':').collect();
    let [i, lo, hi] = parts.as_slice() else {
        return Err(bad());
    };
    let i = i.trim().parse().map_err(|_| bad())?;
    let lo = if lo.trim().is_empty() { 0 } else { lo.trim().parse().map_err(|_| bad())? };
    let hi = if hi.trim().is_empty() {
        None
    } else {
        Some(hi.trim().parse().map_err(|_| bad())?)
    };
    Ok((i, lo, hi))
}

fn admissible_h1_3_s4(h: &OSequence) -> std::result::Result<bool, Failure> {
    let v = if h.get(4) >= 2 {
        classify_level_h1_3_s4(h)?
    } else {
        classify_gorenstein_h1_3_s4(h)?
    };
    Ok(v.admissible)
}

fn cmd_enumerate(
    s: usize,
    h1: usize,
    ranges: &[String],
    admissible: bool,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let mut spec = EnumerationSpec::new(s, h1);
    for r in ranges {
        let (i, lo, hi) = parse_range(r)?;
        if i > s {
            return Err(usage(format!("range index {i} exceeds s = {s}")));
        }
        spec = spec.with_range(i, lo, hi);
    }
    if admissible && (s != 4 || h1 != 3) {
        return Err(usage("--admissible needs --s 4 --h1 3"));
    }
    let mut seqs = enumerate(&spec)?;
    if admissible {
        let mut kept = Vec::with_capacity(seqs.len());
        for h in seqs {
            if admissible_h1_3_s4(&h)? {
                kept.push(h);
            }
        }
        seqs = kept;
    }
    if json {
        emit_json(out, &json!({ "sequences": seqs.iter().map(seq_json).collect::<Vec<_>>() }))?;
    } else {
        for h in &seqs {
            writeln!(out, "{h}")?;
        }
    }
    Ok(EXIT_OK)
}
