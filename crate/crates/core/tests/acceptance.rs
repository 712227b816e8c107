//! The acceptance criteria, run in order. Each prints one PASS or FAIL line;
//! the test fails at the end if any criterion failed.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use sperp::bench::{checksum, run_bench};
use sperp::expr::parse_expr;
use sperp::plethysm::{ClosedForm, Mode};
use sperp::symfunc::rational;
use sperp::verify::{check_type_partition, random_schur, run_verify, Suite};
use sperp::{partition, Basis, Context, Method, Partition, SymFunc};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn suite(ctx: &Context, suite: Suite, bound: u32) -> Result<usize, String> {
    let report = run_verify(ctx, suite, bound, 0);
    match report.failure {
        None => Ok(report.checks),
        Some(f) => Err(format!("{} suite: {f}", suite.name())),
    }
}

fn sum_of(parts: &[&[u32]]) -> SymFunc {
    let mut f = SymFunc::zero(Basis::Schur);
    for p in parts {
        f.add_term(Partition::new(p.to_vec()).unwrap(), rational(1));
    }
    f
}

fn square_of_row() -> Outcome {
    let ctx = Context::new();
    let (got, t) = timed(|| parse_expr(&ctx, "s[2][s[2]]", Method::Auto));
    let got = got.map_err(|e| e.to_string())?;
    ensure(got == sum_of(&[&[4], &[2, 2]]), || format!("got {got}"))?;
    ensure(t < Duration::from_millis(100), || format!("took {t:?}"))?;
    Ok(format!("s[4] + s[2,2] in {t:?}"))
}

fn hook_example() -> Outcome {
    let want = sum_of(&[
        &[2, 1, 1, 1, 1, 1, 1],
        &[2, 2, 1, 1, 1, 1],
        &[2, 2, 2, 1, 1],
        &[3, 2, 1, 1, 1],
        &[3, 2, 2, 1],
        &[3, 3, 1, 1],
        &[4, 3, 1],
    ]);
    let mut notes = Vec::new();
    for method in [Method::Auto, Method::SperpRecursive, Method::PowersumOracle] {
        let ctx = Context::new();
        let (got, t) = timed(|| ctx.plethysm_schur(&partition![3, 1], &partition![1, 1], method));
        let got = got.map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{method}: got {got}"))?;
        ensure(t < Duration::from_secs(1), || format!("{method}: took {t:?}"))?;
        notes.push(format!("{method} {t:?}"));
    }
    Ok(format!("7 terms; {}", notes.join(", ")))
}

fn final_remark() -> Outcome {
    let ctx = Context::new();
    let lambda = partition![3, 1, 1, 1, 1];
    let mu = partition![1, 1];
    let form = ClosedForm::detect(&lambda, &mu).ok_or("no closed form detected")?;
    ensure(matches!(form, ClosedForm::Hook { .. }), || format!("detected {form}"))?;
    let by_formula = form.evaluate(&ctx).map_err(|e| e.to_string())?;
    let by_oracle = ctx
        .plethysm_schur(&lambda, &mu, Method::PowersumOracle)
        .map_err(|e| e.to_string())?;
    for (parts, want) in [(partition![3, 3, 2, 2, 1, 1, 1, 1], 1), (partition![4, 4, 2, 2, 1, 1], 2)] {
        for (name, f) in [("formula", &by_formula), ("oracle", &by_oracle)] {
            let c = f.coefficient(&parts);
            ensure(c == rational(want), || format!("{name}: coefficient of s{parts} is {c}"))?;
        }
    }
    Ok("coefficients 1 and 2 by the oracle and the inclusion-exclusion formula".into())
}

fn oracle_equivalence() -> Outcome {
    let ctx = Context::new();
    let (checks, t) = timed(|| suite(&ctx, Suite::Oracle, 12));
    let checks = checks?;
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("{checks} checks up to |λ||μ| = 12 in {t:?}"))
}

fn degree_three() -> Outcome {
    let ctx = Context::new();
    let checks = suite(&ctx, Suite::Deg3, 5)?;
    let mut tableaux = 0;
    for k in 1..=6 {
        tableaux += check_type_partition(&ctx, k)?;
    }
    Ok(format!("{checks} checks for k ≤ 5; {tableaux} tableaux classified for k ≤ 6"))
}

fn rows_columns_hooks() -> Outcome {
    let ctx = Context::new();
    let a = suite(&ctx, Suite::Rowcol, 7)?;
    let b = suite(&ctx, Suite::Hooks, 7)?;
    Ok(format!("{a} row/column and {b} hook checks for h ≤ 7"))
}

fn perp_round_trip() -> Outcome {
    let ctx = Context::new();
    let mut rng = StdRng::seed_from_u64(7);
    let mut count = 0;
    for i in 0..100 {
        let d = 1 + i % 10;
        let f = random_schur(&mut rng, d, 6, 5);
        for mode in [Mode::Row, Mode::Column] {
            let seq = ctx.perp_sequence(&f, mode).map_err(|e| e.to_string())?;
            let back = ctx.expand_schur(&seq).map_err(|e| e.to_string())?;
            ensure(back == f, || format!("{mode} mode: {f} came back as {back}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} round trips"))
}

fn performance() -> Outcome {
    let small = "s[1,1,1,1][s[1,1,1,1,1,1]]";
    let report = run_bench(small, &[Method::SperpRecursive, Method::PowersumOracle], 3)
        .map_err(|e| e.to_string())?;
    ensure(report.consistent(), || "checksums differ".into())?;
    let (sperp, oracle) = (&report.rows[0], &report.rows[1]);
    ensure(sperp.millis < 1000.0, || format!("sperp took {:.1} ms", sperp.millis))?;
    let speedup = oracle.millis / sperp.millis;
    ensure(speedup >= 5.0, || format!("speedup only {speedup:.1}x"))?;

    let ctx = Context::new();
    let (big, t) = timed(|| ctx.plethysm_schur(&Partition::column(6), &Partition::column(6), Method::SperpRecursive));
    let big = big.map_err(|e| e.to_string())?;
    ensure(t < Duration::from_secs(60), || format!("s_1^6[s_1^6] took {t:?}"))?;
    Ok(format!(
        "{:.1} ms vs {:.1} ms ({speedup:.0}x); s_1^6[s_1^6] in {t:?}, {} terms, checksum {}",
        sperp.millis,
        oracle.millis,
        big.len(),
        checksum(&big)
    ))
}

fn identities() -> Outcome {
    let ctx = Context::new();
    let a = suite(&ctx, Suite::Identities, 4)?;
    let b = suite(&ctx, Suite::Lemmas, 8)?;
    Ok(format!("{a} multi-alphabet checks, {b} duality and recurrence checks"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("s2[s2] example", square_of_row),
        ("s31[s11] example", hook_example),
        ("hook coefficients", final_remark),
        ("oracle equivalence", oracle_equivalence),
        ("degree three tableaux", degree_three),
        ("row, column and hook formulas", rows_columns_hooks),
        ("perp round trip", perp_round_trip),
        ("performance", performance),
        ("plethystic identities", identities),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("PASS {} {name}: {note}", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
