//! Verification suites comparing every computation path against the
//! power-sum oracle, and checking the structural identities.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::plethysm::{ClosedForm, Inner, Method, Mode};
use crate::symfunc::{rational, Basis, SymFunc};
use crate::tableaux::{enumerate_weight_kkk, tab_sum, type_of, TypeLabel};
use crate::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Recursive engine, closed forms and skewing formulas against the oracle.
    Oracle,
    /// Tableau-type sums for `|λ| = 3`.
    Deg3,
    /// Row and column closed forms.
    Rowcol,
    /// Hook closed forms, the hook recurrence and the `w` symmetry.
    Hooks,
    /// The `s_3[s_k]↓2` recurrence, equal hook type sums, conjugation
    /// duality and the explicit hook coefficients.
    Lemmas,
    /// Schur expansion from random skewing sequences.
    Roundtrip,
    /// Plethysm over a sum of alphabets on random inputs.
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Oracle,
        Suite::Deg3,
        Suite::Rowcol,
        Suite::Hooks,
        Suite::Lemmas,
        Suite::Roundtrip,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Deg3 => "deg3",
            Suite::Rowcol => "rowcol",
            Suite::Hooks => "hooks",
            Suite::Lemmas => "lemmas",
            Suite::Roundtrip => "roundtrip",
            Suite::Identities => "identities",
        }
    }

    /// Bound used when none is given.
    pub fn default_bound(self) -> u32 {
        match self {
            Suite::Oracle => 12,
            Suite::Deg3 => 5,
            Suite::Rowcol | Suite::Hooks => 7,
            Suite::Lemmas => 8,
            Suite::Roundtrip => 10,
            Suite::Identities => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "suite",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub bound: u32,
    pub checks: usize,
    /// The first counterexample; checking stops there.
    pub failure: Option<String>,
    pub millis: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "{} (bound {}): pass, {} checks in {:.0} ms",
                self.suite, self.bound, self.checks, self.millis
            ),
            Some(msg) => write!(
                f,
                "{} (bound {}): FAIL after {} checks\n  {msg}",
                self.suite, self.bound, self.checks
            ),
        }
    }
}

/// Counts checks and stops at the first failure.
struct Checker {
    checks: usize,
}

type Outcome = std::result::Result<(), String>;

impl Checker {
    fn equal(&mut self, what: impl FnOnce() -> String, got: &SymFunc, want: &SymFunc) -> Outcome {
        self.checks += 1;
        if got == want {
            Ok(())
        } else {
            Err(format!("{}\n    got:      {got}\n    expected: {want}", what()))
        }
    }

    fn holds(&mut self, cond: bool, what: impl FnOnce() -> String) -> Outcome {
        self.checks += 1;
        if cond {
            Ok(())
        } else {
            Err(what())
        }
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn oracle(ctx: &Context, lambda: &Partition, mu: &Partition) -> SymFunc {
    ctx.plethysm_schur(lambda, mu, Method::PowersumOracle)
        .expect("the oracle applies to every pair")
}

/// Runs `suite` up to `bound`; `seed` drives the randomized suites.
pub fn run_verify(ctx: &Context, suite: Suite, bound: u32, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let mut c = Checker { checks: 0 };
    let outcome = match suite {
        Suite::Oracle => verify_oracle(ctx, &mut c, bound),
        Suite::Deg3 => verify_deg3(ctx, &mut c, bound),
        Suite::Rowcol => verify_rowcol(ctx, &mut c, bound),
        Suite::Hooks => verify_hooks(ctx, &mut c, bound),
        Suite::Lemmas => verify_lemmas(ctx, &mut c, bound),
        Suite::Roundtrip => verify_roundtrip(ctx, &mut c, bound, seed),
        Suite::Identities => verify_identities(ctx, &mut c, bound, seed),
    };
    VerifyReport {
        suite,
        bound,
        checks: c.checks,
        failure: outcome.err(),
        millis: start.elapsed().as_secs_f64() * 1000.0,
    }
}

fn verify_oracle(ctx: &Context, c: &mut Checker, bound: u32) -> Outcome {
    let bound = bound as usize;
    for w in 1..=bound {
        let inners = if w == 1 {
            vec![Partition::row(1)]
        } else {
            vec![Partition::row(w as u32), Partition::column(w as u32)]
        };
        for mu in &inners {
            for n in 1..=bound / w {
                for lambda in partitions(n) {
                    let want = oracle(ctx, &lambda, mu);
                    let got = lift(ctx.plethysm_schur(&lambda, mu, Method::SperpRecursive))?;
                    c.equal(|| format!("sperp s{lambda}[s{mu}]"), &got, &want)?;
                    if let Some(form) = ClosedForm::detect(&lambda, mu) {
                        let got = lift(form.evaluate(ctx))?;
                        c.equal(|| format!("closed form s{lambda}[s{mu}]"), &got, &want)?;
                    }
                }
            }
        }
    }
    // skewing formulas for general inner shapes
    for m in 1..=3usize {
        for n in 1..=3usize {
            if n * m > bound {
                continue;
            }
            for lambda in partitions(n) {
                for mu in partitions(m) {
                    let full = oracle(ctx, &lambda, &mu);
                    for r in 1..=n * m {
                        let want = lift(ctx.schur_perp(&Partition::row(r as u32), &full))?;
                        let got = lift(ctx.sperp_of_plethysm_row(&lambda, &mu, r))?;
                        c.equal(|| format!("s_{r}^⊥ s{lambda}[s{mu}]"), &got, &want)?;
                        let want = lift(ctx.schur_perp(&Partition::column(r as u32), &full))?;
                        let got = lift(ctx.sperp_of_plethysm_col(&lambda, &mu, r))?;
                        c.equal(|| format!("s_(1^{r})^⊥ s{lambda}[s{mu}]"), &got, &want)?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// The four type classes cover every tableau of weight `(k, k, k)` exactly
/// once, and the number of tableaux of each shape is the Kostka number.
pub fn check_type_partition(ctx: &Context, k: u32) -> std::result::Result<usize, String> {
    let all = enumerate_weight_kkk(k);
    let mut per_shape = std::collections::BTreeMap::<Partition, u64>::new();
    for s in &all {
        lift(type_of(s))?;
        *per_shape.entry(s.shape()).or_default() += 1;
    }
    let weight = Partition::new(vec![k, k, k]).expect("(k,k,k)");
    for lambda in partitions(3 * k as usize) {
        let want = ctx.kostka(&lambda, &weight);
        let got = per_shape.get(&lambda).copied().unwrap_or(0);
        if got != want {
            return Err(format!("shape {lambda}: {got} tableaux, Kostka number {want}"));
        }
    }
    let classes: usize = TypeLabel::ALL
        .iter()
        .map(|&t| all.iter().filter(|s| type_of(s).ok() == Some(t)).count())
        .sum();
    if classes != all.len() {
        return Err(format!("type classes hold {classes} of {} tableaux", all.len()));
    }
    Ok(all.len())
}

fn verify_deg3(ctx: &Context, c: &mut Checker, bound: u32) -> Outcome {
    for k in 1..=bound {
        let mu = Partition::row(k);
        for t in TypeLabel::ALL {
            let want = oracle(ctx, &t.shape(), &mu);
            c.equal(|| format!("Tab sum for {t}, k = {k}"), &tab_sum(t, k), &want)?;
        }
        for lambda in partitions(3) {
            for column in [false, true] {
                check_form(ctx, c, ClosedForm::Degree3 { lambda: lambda.clone(), k, column })?;
            }
        }
        c.checks += 1;
        check_type_partition(ctx, k).map_err(|e| format!("k = {k}: {e}"))?;
    }
    Ok(())
}

fn inners() -> [Inner; 2] {
    [Inner::Column2, Inner::Row2]
}

fn check_form(ctx: &Context, c: &mut Checker, form: ClosedForm) -> Outcome {
    let (lambda, mu) = lift(form.plethysm())?;
    let got = lift(form.evaluate(ctx))?;
    c.equal(|| format!("{form:?} for s{lambda}[s{mu}]"), &got, &oracle(ctx, &lambda, &mu))
}

fn verify_rowcol(ctx: &Context, c: &mut Checker, bound: u32) -> Outcome {
    for h in 1..=bound {
        for inner in inners() {
            check_form(ctx, c, ClosedForm::Row { h, inner })?;
            check_form(ctx, c, ClosedForm::Column { h, inner })?;
        }
    }
    Ok(())
}

fn verify_hooks(ctx: &Context, c: &mut Checker, bound: u32) -> Outcome {
    let c2 = Partition::column(2);
    for h in 2..=bound {
        for inner in inners() {
            check_form(ctx, c, ClosedForm::HookArm { h, inner })?;
            if h >= 3 {
                check_form(ctx, c, ClosedForm::HookLeg { h, inner })?;
                check_form(ctx, c, ClosedForm::HookTwo { h, inner })?;
            }
            for k in 0..h {
                check_form(ctx, c, ClosedForm::Hook { h, k, inner })?;
            }
        }
        // s_{h-r}[g] s_{1^r}[g] = s_{(h-r,1^r)}[g] + s_{(h-r+1,1^{r-1})}[g]
        for r in 1..h {
            let left = ctx.multiply(
                &oracle(ctx, &Partition::row(h - r), &c2),
                &oracle(ctx, &Partition::column(r), &c2),
            );
            let right = &oracle(ctx, &Partition::hook(h - r, r), &c2)
                + &oracle(ctx, &Partition::hook(h - r + 1, r - 1), &c2);
            c.equal(|| format!("hook recurrence h = {h}, r = {r}"), &left, &right)?;
        }
        // the w involution on even partitions and P_2h preserves coefficients
        for lambda in [Partition::row(h), Partition::hook(h - 1, 1)] {
            let f = oracle(ctx, &lambda, &c2);
            for gamma in partitions(2 * h as usize) {
                if !(gamma.is_even() || gamma.in_p2h().unwrap_or(false)) {
                    continue;
                }
                let w = gamma.w_involution();
                c.holds(f.coefficient(&gamma) == f.coefficient(&w), || {
                    format!("w symmetry in s{lambda}[s[1,1]]: {gamma} and {w}")
                })?;
            }
        }
    }
    Ok(())
}

fn verify_lemmas(ctx: &Context, c: &mut Checker, bound: u32) -> Outcome {
    // s_3[s_k]↓2 = s_66 ⊙ s_3[s_{k-4}]↓2 + Σ_{r=2}^{k} s_{(3k-r,r)} + s_{(3k)}
    let three = Partition::row(3);
    for k in 5..=bound {
        let full = lift(ctx.plethysm_schur(&three, &Partition::row(k), Method::SperpRecursive))?;
        let smaller = lift(ctx.plethysm_schur(&three, &Partition::row(k - 4), Method::SperpRecursive))?;
        let mut want = lift(lift(smaller.down(2))?.odot(&SymFunc::s(Partition::new(vec![6, 6]).unwrap())))?;
        for r in 2..=k {
            want.add_term(Partition::new(vec![3 * k - r, r]).unwrap(), rational(1));
        }
        want.add_term(Partition::row(3 * k), rational(1));
        c.equal(|| format!("s_3[s_k]↓2 recurrence at k = {k}"), &lift(full.down(2))?, &want)?;
    }
    // the two hook types give the same shapes
    for k in 1..=bound.min(6) {
        c.equal(
            || format!("[12/3] and [13/2] sums at k = {k}"),
            &tab_sum(TypeLabel::Hook12, k),
            &tab_sum(TypeLabel::Hook13, k),
        )?;
    }
    // s_λ[s_{μ'}] is the conjugate of s_λ[s_μ] when |μ| is even
    for n in 1..=3usize {
        for lambda in partitions(n) {
            let mut w = 2u32;
            while n as u32 * w <= 16 {
                let row = oracle(ctx, &lambda, &Partition::row(w));
                let col = oracle(ctx, &lambda, &Partition::column(w));
                c.equal(
                    || format!("conjugation duality for s{lambda}[s_{w}]"),
                    &col,
                    &row.map_partitions(Partition::conjugate),
                )?;
                w += 2;
            }
        }
    }
    // explicit coefficients in s_(3,1,1,1,1)[s_(1,1)], by the oracle and by
    // inclusion-exclusion
    let lambda = Partition::hook(3, 4);
    let by_oracle = oracle(ctx, &lambda, &Partition::column(2));
    let by_formula = lift(
        ClosedForm::Hook {
            h: 7,
            k: 4,
            inner: Inner::Column2,
        }
        .evaluate(ctx),
    )?;
    for f in [&by_oracle, &by_formula] {
        for (parts, want) in [(vec![3, 3, 2, 2, 1, 1, 1, 1], 1), (vec![4, 4, 2, 2, 1, 1], 2)] {
            let p = Partition::new(parts).unwrap();
            c.holds(f.coefficient(&p) == rational(want), || {
                format!("coefficient of s{p} in s{lambda}[s[1,1]] is {}, expected {want}", f.coefficient(&p))
            })?;
        }
    }
    Ok(())
}

/// A homogeneous Schur expansion of degree `d` with up to `max_terms`
/// terms and integer coefficients in `[-c, c]`.
pub fn random_schur(rng: &mut StdRng, d: usize, max_terms: usize, c: i64) -> SymFunc {
    let shapes = partitions(d);
    let mut f = SymFunc::zero(Basis::Schur);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let p = shapes[rng.gen_range(0..shapes.len())].clone();
        f.add_term(p, rational(rng.gen_range(-c..=c)));
    }
    f
}

fn verify_roundtrip(ctx: &Context, c: &mut Checker, bound: u32, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..100 {
        let d = rng.gen_range(1..=bound.max(1) as usize);
        let f = random_schur(&mut rng, d, 8, 5);
        for mode in [Mode::Row, Mode::Column] {
            let seq = lift(ctx.perp_sequence(&f, mode))?;
            let back = lift(ctx.expand_schur(&seq))?;
            c.equal(|| format!("{mode} round trip of {f}"), &back, &f)?;
        }
    }
    Ok(())
}

fn verify_identities(ctx: &Context, c: &mut Checker, bound: u32, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..20 {
        let d = rng.gen_range(1..=bound.max(1) as usize);
        let f = random_schur(&mut rng, d, 3, 3);
        let max_inner = (bound as usize / d).clamp(1, 2);
        let (d1, d2) = (rng.gen_range(1..=max_inner), rng.gen_range(1..=max_inner));
        let g1 = random_schur(&mut rng, d1, 2, 2);
        let g2 = random_schur(&mut rng, d2, 2, 2);
        let got = lift(ctx.plethysm_sum_alphabets(&f, &[g1.clone(), g2.clone()], Method::Auto))?;
        let want = ctx.plethysm_powersum(&f, &(&g1 + &g2), Basis::Schur);
        c.equal(|| format!("{f} over the alphabets {g1} and {g2}"), &got, &want)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_bounds_pass() {
        let ctx = Context::new();
        for s in Suite::ALL {
            let bound = match s {
                Suite::Lemmas => 5,
                Suite::Oracle => 6,
                _ => 3,
            };
            let report = run_verify(&ctx, s, bound, 7);
            assert!(report.passed(), "{report}");
            assert!(report.checks > 0, "{report}");
        }
    }
}
