//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::time::{Duration, Instant};

use apolar_core::apolar::{binomial, monomials_up_to};
use apolar_core::construct::{gorenstein_construct, level_construct_h1_3, stanley_witness, witness_g};
use apolar_core::gradcheck::{
    optional_finite_field_crosscheck, verify_not_canonically_graded, verify_stanley, NcgVerdict, Status,
};
use apolar_core::invsys::{is_level, local_hilbert_function, socle_type, InverseSystem};
use apolar_core::oseq::{
    classify_gorenstein_h1_3_s4, classify_level_h1_3_s4, ek_betti, enumerate, lex_ideal, macaulay_growth,
    min_last_betti_lower_bound, shipped_graded_list, socle_bound, tables_report, EnumerationSpec,
};
use apolar_core::qdecomp::{mpow_contract_dim, q0_check, q_decomposition};
use apolar_core::scalar::int;
use apolar_core::Poly;
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hilbert_goldens() -> Check {
    for (gens, h) in REFERENCE_SYSTEMS {
        let got = hf(gens);
        ensure(got == h.to_vec(), || format!("{gens:?}: got {got:?}, want {h:?}"))?;
    }
    let (f, g) = stanley_witness().map_err(|e| e.to_string())?;
    for p in [f, g] {
        let got = hf_of(&[p]);
        ensure(got == [1, 13, 12, 13, 1], || format!("13-variable pair: got {got:?}"))?;
    }
    Ok(format!("{} reference systems and the 13-variable pair", REFERENCE_SYSTEMS.len()))
}

fn closed_loop() -> Check {
    let all = enumerate(&EnumerationSpec::new(4, 3)).map_err(|e| e.to_string())?;
    let (mut level, mut gor) = (0, 0);
    for h in &all {
        let (admissible, recipe) = if h.get(4) >= 2 {
            let ok = classify_level_h1_3_s4(h).map_err(|e| e.to_string())?.admissible;
            (ok, ok.then(|| level_construct_h1_3(h)))
        } else {
            let ok = classify_gorenstein_h1_3_s4(h).map_err(|e| e.to_string())?.admissible;
            (ok, ok.then(|| gorenstein_construct(h)))
        };
        if !admissible {
            continue;
        }
        let r = recipe.unwrap().map_err(|e| format!("{h}: {e}"))?;
        let sys = InverseSystem::new(r.generators).map_err(|e| e.to_string())?;
        ensure(&local_hilbert_function(&sys) == h, || format!("{h}: HF mismatch"))?;
        ensure(is_level(&sys) == Some(h.get(4)), || format!("{h}: wrong type"))?;
        if h.get(4) >= 2 {
            level += 1;
        } else {
            gor += 1;
        }
    }
    Ok(format!("{level} level and {gor} Gorenstein sequences constructed, 0 faults"))
}

fn tables() -> Check {
    let graded = shipped_graded_list().map_err(|e| e.to_string())?;
    let (t1, t2) = tables_report(&graded).map_err(|e| e.to_string())?;
    let t1: Vec<Vec<usize>> = t1.into_iter().map(|h| h.into_vec()).collect();
    let t2: Vec<Vec<usize>> = t2.into_iter().map(|h| h.into_vec()).collect();
    ensure(t1 == TABLE_1.map(|r| r.to_vec()), || format!("table 1 differs: {t1:?}"))?;
    ensure(t2 == TABLE_2.map(|r| r.to_vec()), || format!("table 2 differs: {t2:?}"))?;
    Ok("25 + 6 entries, in order".into())
}

fn lex_certificate() -> Check {
    let gens = lex_ideal(&seq(&[1, 4, 9, 2, 2]), 4).map_err(|e| e.to_string())?;
    let mut names: Vec<String> = gens.iter().map(|m| m.to_string()).collect();
    names.sort();
    let mut want: Vec<String> = EXAMPLE_LEX_GENERATORS.iter().map(|s| s.to_string()).collect();
    want.sort();
    ensure(names == want, || format!("generators {names:?}"))?;
    let b = ek_betti(&gens, 4).map_err(|e| e.to_string())?;
    for (i, row) in EXAMPLE_BETTI {
        let got: Vec<(usize, usize)> = b.row(i).into_iter().collect();
        ensure(got == row.to_vec(), || format!("beta_{i} = {got:?}"))?;
    }
    let bound = min_last_betti_lower_bound(&b, 4);
    ensure(bound >= 3, || format!("lower bound {bound}"))?;
    Ok(format!("17 generators, Betti table exact, beta_4 >= {bound}"))
}

fn non_canonically_graded() -> Check {
    let mut proven = 0;
    for n in 2..=6 {
        let top = binomial(n + 1, 2);
        for m in n..top {
            match verify_not_canonically_graded(n, m).map_err(|e| e.to_string())? {
                NcgVerdict::Checked(o) if o.status == Status::Proven => proven += 1,
                other => return Err(format!("({n},{m}): {other:?}")),
            }
        }
        let v = verify_not_canonically_graded(n, top).map_err(|e| e.to_string())?;
        ensure(v == NcgVerdict::Compressed, || format!("({n},{top}) not refused"))?;
    }
    let o = verify_stanley().map_err(|e| e.to_string())?;
    ensure(o.status == Status::Proven, || "13-variable case not proven".into())?;
    Ok(format!("{proven} cases proven, 5 compressed refusals, 13-variable case proven"))
}

fn random_quartic(rng: &mut ChaCha8Rng) -> Poly {
    let monos = monomials_up_to(3, 4);
    loop {
        let p = Poly::from_terms(3, monos.iter().map(|m| (m.clone(), int(rng.gen_range(-3..=3))))).unwrap();
        if p.degree() == Some(4) {
            return p;
        }
    }
}

fn q_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases = 120;
    for _ in 0..cases {
        let f = random_quartic(&mut rng);
        let sys = InverseSystem::new(vec![f.clone()]).map_err(|e| e.to_string())?;
        let h = local_hilbert_function(&sys);
        let q = q_decomposition(&sys).map_err(|e| format!("{f}: {e}"))?;
        ensure(q.row_sums() == h, || format!("{f}: row sums"))?;
        ensure(q.is_symmetric(), || format!("{f}: asymmetric Q"))?;
        ensure(q0_check(&f).map_err(|e| e.to_string())?, || format!("{f}: Q(0)"))?;
        let bound = socle_bound(h.embedding_dim(), &socle_type(&sys).map_err(|e| e.to_string())?);
        ensure((0..=4).all(|i| h.get(i) <= bound.get(i)), || format!("{f}: socle bound"))?;
        for k in 0..=5 {
            mpow_contract_dim(&sys, k).map_err(|e| format!("{f}: {e}"))?;
        }
    }
    Ok(format!("{cases} random quartics, 0 violations"))
}

fn macaulay_oracle() -> Check {
    for i in 1..=4 {
        for h in 0..=20 {
            let a = macaulay_growth(h, i).map_err(|e| e.to_string())?;
            let b = brute_force_growth(h, i);
            ensure(a == b, || format!("h={h}, i={i}: {a} vs {b}"))?;
        }
    }
    Ok("h <= 20, i <= 4".into())
}

fn finite_field_agreement() -> Check {
    let mut checked = 0;
    for n in 2..=4 {
        for m in n..binomial(n + 1, 2) {
            if !verify_not_canonically_graded(n, m).map_err(|e| e.to_string())?.is_proven() {
                continue;
            }
            let g = witness_g(n, m).map_err(|e| e.to_string())?;
            let ok = optional_finite_field_crosscheck(&g, 13).map_err(|e| e.to_string())?;
            ensure(ok, || format!("({n},{m}): F_13 disagrees"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} proven cases confirmed over F_13"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 8] = [
        ("1 Hilbert-function goldens", hilbert_goldens, Some(Duration::from_secs(5))),
        ("2 closed-loop classification", closed_loop, Some(Duration::from_secs(120))),
        ("3 tables", tables, None),
        ("4 lex-ideal certificate", lex_certificate, Some(Duration::from_secs(5))),
        ("5 non-canonically-graded certificates", non_canonically_graded, Some(Duration::from_secs(60))),
        ("6 Q-decomposition properties", q_properties, None),
        ("7 Macaulay growth oracle", macaulay_oracle, None),
        ("8 forcing vs finite field", finite_field_agreement, None),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
