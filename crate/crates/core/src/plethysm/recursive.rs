//! Skewing formulas for plethysms and the recursive engine built on them.
//!
//! Writing `s_μ[X + t] = Σ_i t^i (s_i^⊥ s_μ)[X]` and expanding `s_λ` over a
//! sum of alphabets gives, for the coefficient of `t^r`,
//!
//! ```text
//! s_r^⊥ s_λ[s_μ] = Σ  Π_i s_{ν(i)}[s_i^⊥ s_μ] · <s_λ, Π_i s_{ν(i)}>
//! ```
//!
//! over sequences `ν(0), ..., ν(r')` with `Σ |ν(i)| = |λ|`,
//! `Σ i |ν(i)| = r` and `r' = min(r, μ_1)`. The column version uses
//! `s_{1^i}^⊥ s_μ`, `r' = min(r, ℓ(μ))`, and conjugates `ν(i)` for odd `i`.
//!
//! When `μ` is a column only `i ∈ {0, 1}` contribute in row mode, and when
//! `μ` is a row only `i ∈ {0, 1}` contribute in column mode, so
//!
//! ```text
//! s_r^⊥     s_λ[s_{1^w}] = Σ_{|γ|=r} (s_γ^⊥ s_λ)[s_{1^w}] · s_γ[s_{1^{w-1}}]
//! s_{1^r}^⊥ s_λ[s_w]     = Σ_{|γ|=r} (s_{γ'}^⊥ s_λ)[s_w]   · s_γ[s_{w-1}]
//! ```
//!
//! which together with the Schur expansion from skewing data computes these
//! plethysms recursively.

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::plethysm::{Method, Mode, PerpSequence};
use crate::symfunc::{rational, Basis, SymFunc};
use crate::Context;

impl Context {
    /// `s_r^⊥ s_λ[s_μ]` from the general row formula.
    pub fn sperp_of_plethysm_row(&self, lambda: &Partition, mu: &Partition, r: usize) -> Result<SymFunc> {
        self.sperp_of_plethysm(lambda, mu, r, Mode::Row)
    }

    /// `s_{1^r}^⊥ s_λ[s_μ]` from the general column formula.
    pub fn sperp_of_plethysm_col(&self, lambda: &Partition, mu: &Partition, r: usize) -> Result<SymFunc> {
        self.sperp_of_plethysm(lambda, mu, r, Mode::Column)
    }

    fn sperp_of_plethysm(&self, lambda: &Partition, mu: &Partition, r: usize, mode: Mode) -> Result<SymFunc> {
        let bound = match mode {
            Mode::Row => mu.first_part() as usize,
            Mode::Column => mu.len(),
        };
        let r_max = r.min(bound);
        let base = SymFunc::s(mu.clone());
        // inner[i] = s_i^⊥ s_μ or s_{1^i}^⊥ s_μ
        let inner: Vec<SymFunc> = (0..=r_max)
            .map(|i| self.schur_perp(&mode.operator(i), &base))
            .collect::<Result<_>>()?;
        let mut out = SymFunc::zero(Basis::Schur);
        let mut sizes = vec![0usize; r_max + 1];
        let mut chosen: Vec<Partition> = Vec::with_capacity(r_max + 1);
        self.sum_over_sequences(
            lambda.size(),
            r,
            r_max,
            &mut sizes,
            &mut |ctx: &Context, sizes: &[usize]| {
                chosen.clear();
                ctx.sum_over_partition_choices(
                    sizes,
                    0,
                    &SymFunc::s(lambda.clone()),
                    &mut chosen,
                    &inner,
                    mode,
                    &mut out,
                )
            },
        )?;
        Ok(out)
    }

    /// Enumerates size vectors `(n_0, ..., n_{r'})` with `Σ n_i = total` and
    /// `Σ i n_i = weight`.
    fn sum_over_sequences(
        &self,
        total: usize,
        weight: usize,
        r_max: usize,
        sizes: &mut Vec<usize>,
        visit: &mut dyn FnMut(&Context, &[usize]) -> Result<()>,
    ) -> Result<()> {
        fn go(
            ctx: &Context,
            i: usize,
            total: usize,
            weight: usize,
            sizes: &mut Vec<usize>,
            visit: &mut dyn FnMut(&Context, &[usize]) -> Result<()>,
        ) -> Result<()> {
            if i == 0 {
                sizes[0] = total;
                return if weight == 0 { visit(ctx, sizes) } else { Ok(()) };
            }
            let max_n = total.min(weight / i);
            for n in 0..=max_n {
                sizes[i] = n;
                go(ctx, i - 1, total - n, weight - n * i, sizes, visit)?;
            }
            sizes[i] = 0;
            Ok(())
        }
        go(self, r_max, total, weight, sizes, visit)
    }

    /// For fixed sizes, sums `Π_i F_i(ν(i)) <s_λ, Π s_{ν(i)}>` where the inner
    /// product is evaluated by skewing `s_λ` successively by each `ν(i)`.
    #[allow(clippy::too_many_arguments)]
    fn sum_over_partition_choices(
        &self,
        sizes: &[usize],
        i: usize,
        remaining: &SymFunc,
        chosen: &mut Vec<Partition>,
        inner: &[SymFunc],
        mode: Mode,
        out: &mut SymFunc,
    ) -> Result<()> {
        if remaining.is_zero() {
            return Ok(());
        }
        if i == sizes.len() {
            let coeff = remaining.coefficient(&Partition::empty());
            if coeff == rational(0) {
                return Ok(());
            }
            let mut product = SymFunc::one(Basis::Schur);
            for (k, nu) in chosen.iter().enumerate() {
                if nu.is_empty() {
                    continue;
                }
                let shape = if mode == Mode::Column && k % 2 == 1 {
                    nu.conjugate()
                } else {
                    nu.clone()
                };
                let factor = self.schur_plethysm_into_sum(&shape, &inner[k], Method::Auto)?;
                product = self.multiply_schur(&product, &factor);
                if product.is_zero() {
                    return Ok(());
                }
            }
            *out += &product.scale(&coeff);
            return Ok(());
        }
        for nu in partitions(sizes[i]) {
            let next = self.schur_perp(&nu, remaining)?;
            chosen.push(nu);
            self.sum_over_partition_choices(sizes, i + 1, &next, chosen, inner, mode, out)?;
            chosen.pop();
        }
        Ok(())
    }

    /// `s_λ[s_μ]` for `μ` a row or a column, by building the skewing sequence
    /// from the specialized formulas and expanding it. Results are memoized
    /// on `(λ, μ)`, which the recursion revisits heavily.
    pub fn plethysm_sperp(&self, lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
        if !(mu.is_row() || mu.is_column() || mu.is_empty()) {
            return Err(Error::NotApplicable {
                method: Method::SperpRecursive.to_string(),
                case: format!("s{lambda}[s{mu}]"),
            });
        }
        Ok(self.sperp_rec(lambda, mu))
    }

    fn sperp_rec(&self, lambda: &Partition, mu: &Partition) -> SymFunc {
        if lambda.is_empty() {
            return SymFunc::one(Basis::Schur);
        }
        if mu.is_empty() {
            return if lambda.is_row() {
                SymFunc::one(Basis::Schur)
            } else {
                SymFunc::zero(Basis::Schur)
            };
        }
        if lambda.size() == 1 {
            return SymFunc::s(mu.clone());
        }
        if mu.size() == 1 {
            return SymFunc::s(lambda.clone());
        }
        let method = Method::SperpRecursive;
        if let Some(v) = self.plethysms.get(lambda, mu, method) {
            return v;
        }
        let w = mu.size() as u32;
        // Column inner argument: row-mode skewing; row inner: column mode.
        let (mode, smaller) = if mu.is_column() {
            (Mode::Row, Partition::column(w - 1))
        } else {
            (Mode::Column, Partition::row(w - 1))
        };
        let degree = lambda.size() * mu.size();
        let mut entries = Vec::with_capacity(degree);
        for r in 1..=degree {
            let mut entry = SymFunc::zero(Basis::Schur);
            if r <= lambda.size() {
                for gamma in partitions(r) {
                    // skew by γ in row mode, by γ' in column mode
                    let skew_by = match mode {
                        Mode::Row => gamma.clone(),
                        Mode::Column => gamma.conjugate(),
                    };
                    if !lambda.contains(&skew_by) {
                        continue;
                    }
                    let right = self.sperp_rec(&gamma, &smaller);
                    if right.is_zero() {
                        continue;
                    }
                    let mut left = SymFunc::zero(Basis::Schur);
                    for (kappa, c) in self.lr.skew(lambda, &skew_by).iter() {
                        left += &self.sperp_rec(kappa, mu).scale(&rational(*c as i64));
                    }
                    entry += &self.multiply_schur(&left, &right);
                }
            }
            entries.push(entry);
        }
        let seq = PerpSequence::new(mode, entries);
        let v = self
            .expand_schur_nonnegative(&seq)
            .expect("skewing formulas produce a consistent sequence");
        self.plethysms.insert(lambda, mu, method, &v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn s(p: Partition) -> SymFunc {
        SymFunc::s(p)
    }

    #[test]
    fn small_column_and_row_plethysms() {
        let ctx = Context::new();
        assert_eq!(
            ctx.plethysm_sperp(&partition![1, 1], &partition![1, 1]).unwrap(),
            s(partition![2, 1, 1])
        );
        assert_eq!(
            ctx.plethysm_sperp(&partition![1, 1, 1], &partition![1, 1]).unwrap(),
            &s(partition![3, 1, 1, 1]) + &s(partition![2, 2, 2])
        );
        assert_eq!(
            ctx.plethysm_sperp(&partition![2], &partition![1, 1]).unwrap(),
            &s(partition![2, 2]) + &s(partition![1, 1, 1, 1])
        );
        assert_eq!(
            ctx.plethysm_sperp(&partition![2], &partition![2]).unwrap(),
            &s(partition![4]) + &s(partition![2, 2])
        );
    }

    #[test]
    fn general_inner_shape_is_not_applicable() {
        let ctx = Context::new();
        assert!(matches!(
            ctx.plethysm_sperp(&partition![2], &partition![2, 1]),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn row_formula_examples() {
        let ctx = Context::new();
        assert_eq!(
            ctx.sperp_of_plethysm_row(&partition![2], &partition![2], 1).unwrap(),
            &s(partition![3]) + &s(partition![2, 1])
        );
        // s_1[s_μ] = s_μ
        let mu = partition![3, 1];
        for r in 1..=4 {
            assert_eq!(
                ctx.sperp_of_plethysm_row(&partition![1], &mu, r).unwrap(),
                ctx.schur_perp(&Partition::row(r as u32), &s(mu.clone())).unwrap()
            );
        }
        assert!(ctx
            .sperp_of_plethysm_row(&partition![2], &partition![2], 5)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn column_formula_examples() {
        let ctx = Context::new();
        assert_eq!(
            ctx.sperp_of_plethysm_col(&partition![2], &partition![2], 1).unwrap(),
            &s(partition![3]) + &s(partition![2, 1])
        );
        assert_eq!(
            ctx.sperp_of_plethysm_col(&partition![1, 1], &partition![1, 1], 1).unwrap(),
            &s(partition![2, 1]) + &s(partition![1, 1, 1])
        );
    }
}
