//! Closed-form Schur expansions of `s_λ[s_2]` and `s_λ[s_{1^2}]` for rows,
//! columns and hooks, and of `s_λ[s_k]` for `|λ| = 3` through tableau types.
//!
//! Every family is stated for the inner argument `s_{1^2}`; the `s_2`
//! version conjugates every index, since `|μ| = 2` is even.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::symfunc::{rational, Basis, Rational, SymFunc};
use crate::tableaux::{tab_sum, TypeLabel};
use crate::Context;

/// Inner argument of the size-two families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inner {
    /// `s_2`
    Row2,
    /// `s_{1^2}`
    Column2,
}

impl Inner {
    pub fn from_partition(mu: &Partition) -> Option<Inner> {
        match mu.parts() {
            [2] => Some(Inner::Row2),
            [1, 1] => Some(Inner::Column2),
            _ => None,
        }
    }

    pub fn partition(self) -> Partition {
        match self {
            Inner::Row2 => Partition::row(2),
            Inner::Column2 => Partition::column(2),
        }
    }

    fn finish(self, f: SymFunc) -> SymFunc {
        match self {
            Inner::Column2 => f,
            Inner::Row2 => f.map_partitions(Partition::conjugate),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `s_h[g]`: even partitions of `2h`.
    Row { h: u32, inner: Inner },
    /// `s_{1^h}[g]`: threshold partitions of `2h`.
    Column { h: u32, inner: Inner },
    /// `s_{(h-1,1)}[g]` for `h ≥ 2`, through the set `P_2h` and corner counts.
    HookArm { h: u32, inner: Inner },
    /// `s_{(2,1^{h-2})}[g]` for `h ≥ 3`, through the set `T_2h`.
    HookLeg { h: u32, inner: Inner },
    /// `s_{(h-2,1,1)}[g]` for `h ≥ 3`.
    HookTwo { h: u32, inner: Inner },
    /// `s_{(h-k,1^k)}[g]` for `h > k ≥ 0` by inclusion-exclusion.
    Hook { h: u32, k: u32, inner: Inner },
    /// `s_λ[s_k]` with `|λ| = 3` from tableau types; `column` selects the
    /// inner argument `s_{1^k}`.
    Degree3 { lambda: Partition, k: u32, column: bool },
}

impl ClosedForm {
    /// The family that covers `s_λ[s_μ]`, if any. Among the size-two
    /// families, the most specific one is chosen.
    pub fn detect(lambda: &Partition, mu: &Partition) -> Option<ClosedForm> {
        if let Some(inner) = Inner::from_partition(mu) {
            if lambda.is_hook() {
                let h = lambda.size() as u32;
                let k = lambda.len() as u32 - 1;
                return Some(if lambda.is_row() {
                    ClosedForm::Row { h, inner }
                } else if lambda.is_column() {
                    ClosedForm::Column { h, inner }
                } else if k == 1 {
                    ClosedForm::HookArm { h, inner }
                } else if lambda.first_part() == 2 {
                    ClosedForm::HookLeg { h, inner }
                } else if k == 2 {
                    ClosedForm::HookTwo { h, inner }
                } else {
                    ClosedForm::Hook { h, k, inner }
                });
            }
        }
        if lambda.size() == 3 && !mu.is_empty() && (mu.is_row() || mu.is_column()) {
            return Some(ClosedForm::Degree3 {
                lambda: lambda.clone(),
                k: mu.size() as u32,
                column: !mu.is_row(),
            });
        }
        None
    }

    /// The outer and inner partitions `(λ, μ)` of the plethysm this form
    /// computes.
    pub fn plethysm(&self) -> Result<(Partition, Partition)> {
        self.validate()?;
        Ok(match self {
            ClosedForm::Row { h, inner } => (Partition::row(*h), inner.partition()),
            ClosedForm::Column { h, inner } => (Partition::column(*h), inner.partition()),
            ClosedForm::HookArm { h, inner } => (Partition::hook(h - 1, 1), inner.partition()),
            ClosedForm::HookLeg { h, inner } => (Partition::hook(2, h - 2), inner.partition()),
            ClosedForm::HookTwo { h, inner } => (Partition::hook(h - 2, 2), inner.partition()),
            ClosedForm::Hook { h, k, inner } => (Partition::hook(h - k, *k), inner.partition()),
            ClosedForm::Degree3 { lambda, k, column } => (
                lambda.clone(),
                if *column { Partition::column(*k) } else { Partition::row(*k) },
            ),
        })
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::OutOfRange(msg));
        match self {
            ClosedForm::Row { h, .. } | ClosedForm::Column { h, .. } if *h == 0 => {
                bad("rows and columns need h ≥ 1".into())
            }
            ClosedForm::HookArm { h, .. } if *h < 2 => bad(format!("(h-1,1) needs h ≥ 2, got h = {h}")),
            ClosedForm::HookLeg { h, .. } if *h < 3 => bad(format!("(2,1^(h-2)) needs h ≥ 3, got h = {h}")),
            ClosedForm::HookTwo { h, .. } if *h < 3 => bad(format!("(h-2,1,1) needs h ≥ 3, got h = {h}")),
            ClosedForm::Hook { h, k, .. } if k >= h => bad(format!("(h-k,1^k) needs h > k, got h = {h}, k = {k}")),
            ClosedForm::Degree3 { lambda, k, .. } if lambda.size() != 3 || *k == 0 => {
                bad(format!("degree-3 form needs |λ| = 3 and k ≥ 1, got λ = {lambda}, k = {k}"))
            }
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, ctx: &Context) -> Result<SymFunc> {
        self.validate()?;
        Ok(match self {
            ClosedForm::Row { h, inner } => inner.finish(even_sum(*h)),
            ClosedForm::Column { h, inner } => inner.finish(threshold_sum(*h)),
            ClosedForm::HookArm { h, inner } => inner.finish(hook_arm(*h)?),
            ClosedForm::HookLeg { h, inner } => inner.finish(hook_leg(*h)?),
            ClosedForm::HookTwo { h, inner } => inner.finish(hook_two(ctx, *h)?),
            ClosedForm::Hook { h, k, inner } => inner.finish(hook(ctx, *h, *k)),
            ClosedForm::Degree3 { lambda, k, column } => degree3(lambda, *k, *column),
        })
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.plethysm() {
            Ok((lambda, mu)) => write!(f, "s{lambda}[s{mu}]"),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}

fn sum_of(parts: impl IntoIterator<Item = (Partition, Rational)>) -> SymFunc {
    SymFunc::from_terms(Basis::Schur, parts)
}

/// `Σ s_λ` over even `λ ⊢ 2h`.
pub fn even_sum(h: u32) -> SymFunc {
    sum_of(
        partitions(2 * h as usize)
            .into_iter()
            .filter(Partition::is_even)
            .map(|p| (p, rational(1))),
    )
}

/// `Σ s_λ` over threshold `λ ⊢ 2h`.
pub fn threshold_sum(h: u32) -> SymFunc {
    sum_of(
        partitions(2 * h as usize)
            .into_iter()
            .filter(Partition::is_threshold)
            .map(|p| (p, rational(1))),
    )
}

fn hook_arm(h: u32) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for mu in partitions(2 * h as usize) {
        let c = if mu.is_even() {
            mu.corner_count() as i64 - 1
        } else if mu.in_p2h()? {
            1
        } else {
            0
        };
        out.add_term(mu, rational(c));
    }
    Ok(out)
}

fn hook_leg(h: u32) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for mu in partitions(2 * h as usize) {
        let c = if mu.is_threshold() {
            (mu.corner_count() as i64 - 1) / 2
        } else if mu.in_t2h()? {
            1
        } else {
            0
        };
        out.add_term(mu, rational(c));
    }
    Ok(out)
}

fn hook_two(ctx: &Context, h: u32) -> Result<SymFunc> {
    // Σ_{ν ⊢ 2(h-2) even} c^μ_{ν,(2,1,1)} for every μ
    let counts = ctx.multiply_schur(&even_sum(h - 2), &SymFunc::s(Partition::hook(2, 2)));
    let mut out = SymFunc::zero(Basis::Schur);
    for mu in partitions(2 * h as usize) {
        let c = if mu.is_even() {
            let b = BigInt::from(mu.corner_count() as i64 - 1);
            Rational::from_integer(&b * (&b - 1) / 2)
        } else if mu.in_p2h()? {
            counts.coefficient(&mu) - rational(1)
        } else {
            counts.coefficient(&mu)
        };
        out.add_term(mu, c);
    }
    Ok(out)
}

fn hook(ctx: &Context, h: u32, k: u32) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for i in 0..=k {
        let term = ctx.multiply_schur(&even_sum(h - k + i), &threshold_sum(k - i));
        if i % 2 == 0 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    out
}

fn degree3(lambda: &Partition, k: u32, column: bool) -> SymFunc {
    let label = |shape: &Partition| match shape.parts() {
        [3] => TypeLabel::Row,
        [2, 1] => TypeLabel::Hook12,
        _ => TypeLabel::Column,
    };
    if !column {
        return tab_sum(label(lambda), k);
    }
    // ω(f[g]) = f[ωg] when deg g is even and (ωf)[ωg] when it is odd
    let outer = if k % 2 == 0 { lambda.clone() } else { lambda.conjugate() };
    tab_sum(label(&outer), k).map_partitions(Partition::conjugate)
}
