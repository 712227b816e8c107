//! Plethysm: the power-sum oracle, plethystic identities, Schur expansion
//! from skewing data, the recursive skewing engine and closed forms.

mod closed;
mod identities;
mod monomial;
mod oracle;
mod perp;
mod recursive;

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

pub use closed::{even_sum, threshold_sum, ClosedForm, Inner};
pub use identities::alphabet_multiple;
pub use monomial::Polynomial;
pub use perp::{Mode, PerpSequence};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    PowersumOracle,
    SperpRecursive,
    ClosedForm,
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::PowersumOracle => "powersum",
            Method::SperpRecursive => "sperp",
            Method::ClosedForm => "closed",
            Method::Auto => "auto",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Ok(match s {
            "powersum" | "oracle" | "powersum_oracle" => Method::PowersumOracle,
            "sperp" | "sperp_recursive" => Method::SperpRecursive,
            "closed" | "closed_form" => Method::ClosedForm,
            "auto" => Method::Auto,
            _ => {
                return Err(Error::Unknown {
                    what: "method",
                    name: s.to_string(),
                })
            }
        })
    }
}

/// Memo of `s_λ[s_μ]` Schur expansions, keyed by `(λ, μ, method)`.
#[derive(Default)]
pub(crate) struct PlethysmMemo {
    map: RwLock<FxHashMap<(Partition, Partition, Method), SymFunc>>,
}

impl PlethysmMemo {
    fn get(&self, lambda: &Partition, mu: &Partition, method: Method) -> Option<SymFunc> {
        self.map
            .read()
            .unwrap()
            .get(&(lambda.clone(), mu.clone(), method))
            .cloned()
    }

    fn insert(&self, lambda: &Partition, mu: &Partition, method: Method, value: &SymFunc) {
        self.map
            .write()
            .unwrap()
            .insert((lambda.clone(), mu.clone(), method), value.clone());
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }
}

/// `s_λ[c]` for a constant `c`: only rows (and the empty partition) survive
/// the specialization to a single variable, and then `h_n[c] = binom(c+n-1, n)`.
/// Only `c ∈ {0, 1}` arise here.
fn schur_of_constant(lambda: &Partition, c: &crate::symfunc::Rational) -> Option<SymFunc> {
    if lambda.is_empty() {
        return Some(SymFunc::one(Basis::Schur));
    }
    if c.is_zero() {
        return Some(SymFunc::zero(Basis::Schur));
    }
    if c.is_one() {
        return Some(if lambda.is_row() {
            SymFunc::one(Basis::Schur)
        } else {
            SymFunc::zero(Basis::Schur)
        });
    }
    None
}

impl Context {
    /// `s_λ[s_μ]` in the Schur basis by the chosen method.
    pub fn plethysm_schur(&self, lambda: &Partition, mu: &Partition, method: Method) -> Result<SymFunc> {
        if lambda.is_empty() {
            return Ok(SymFunc::one(Basis::Schur));
        }
        if lambda.size() == 1 {
            return Ok(SymFunc::s(mu.clone()));
        }
        if mu.is_empty() {
            return Ok(schur_of_constant(lambda, &One::one()).expect("unit constant"));
        }
        if mu.size() == 1 {
            return Ok(SymFunc::s(lambda.clone()));
        }
        match method {
            Method::PowersumOracle => {
                if let Some(v) = self.plethysms.get(lambda, mu, method) {
                    return Ok(v);
                }
                let v = self.plethysm_powersum(
                    &SymFunc::s(lambda.clone()),
                    &SymFunc::s(mu.clone()),
                    Basis::Schur,
                );
                self.plethysms.insert(lambda, mu, method, &v);
                Ok(v)
            }
            Method::SperpRecursive => self.plethysm_sperp(lambda, mu),
            Method::ClosedForm => ClosedForm::detect(lambda, mu)
                .ok_or_else(|| Error::NotApplicable {
                    method: method.to_string(),
                    case: format!("s{lambda}[s{mu}]"),
                })?
                .evaluate(self),
            Method::Auto => {
                if let Some(form) = ClosedForm::detect(lambda, mu) {
                    return form.evaluate(self);
                }
                match self.plethysm_sperp(lambda, mu) {
                    Err(Error::NotApplicable { .. }) => {
                        self.plethysm_schur(lambda, mu, Method::PowersumOracle)
                    }
                    other => other,
                }
            }
        }
    }

    /// `f[g]`, returned in the basis of `f`.
    ///
    /// The oracle method works for any rational `f` and `g`. The other
    /// methods expand `f` in Schur functions and `g` as a sum of Schur
    /// functions with nonnegative integer multiplicities, splitting the inner
    /// alphabet as a sum; other inner arguments go to the oracle under `auto`
    /// and are rejected otherwise.
    pub fn plethysm(&self, f: &SymFunc, g: &SymFunc, method: Method) -> Result<SymFunc> {
        if method == Method::PowersumOracle {
            return Ok(self.plethysm_powersum(f, g, f.basis()));
        }
        let fs = self.to_basis(f, Basis::Schur);
        let gs = self.to_basis(g, Basis::Schur);
        let splittable = gs.iter().all(|(_, c)| c.is_integer() && !c.is_negative());
        if !splittable {
            if method == Method::Auto {
                return Ok(self.plethysm_powersum(f, g, f.basis()));
            }
            return Err(Error::NotApplicable {
                method: method.to_string(),
                case: format!("inner argument {g}"),
            });
        }
        let mut out = SymFunc::zero(Basis::Schur);
        for (lambda, a) in fs.iter() {
            out += &self.schur_plethysm_into_sum(lambda, &gs, method)?.scale(a);
        }
        Ok(self.to_basis(&out, f.basis()))
    }

    /// `s_ν[G]` for `G` a Schur expansion with nonnegative integer
    /// coefficients, splitting `G = s_κ + (G - s_κ)` and using
    /// `s_ν[A + B] = Σ c^ν_{αβ} s_α[A] s_β[B]`.
    pub(crate) fn schur_plethysm_into_sum(
        &self,
        nu: &Partition,
        g: &SymFunc,
        method: Method,
    ) -> Result<SymFunc> {
        if nu.is_empty() {
            return Ok(SymFunc::one(Basis::Schur));
        }
        let mut terms = g.iter();
        let Some((kappa, c)) = terms.next() else {
            return Ok(SymFunc::zero(Basis::Schur));
        };
        if g.len() == 1 && c.is_one() {
            return self.plethysm_schur(nu, kappa, method);
        }
        if kappa.is_empty() && g.len() == 1 {
            if let Some(v) = schur_of_constant(nu, c) {
                return Ok(v);
            }
        }
        let head = SymFunc::s(kappa.clone());
        let tail = g - &head;
        let mut out = SymFunc::zero(Basis::Schur);
        for size in 0..=nu.size() {
            for alpha in crate::partition::partitions(size) {
                if !nu.contains(&alpha) {
                    continue;
                }
                let skew = self.lr.skew(nu, &alpha);
                if skew.is_empty() {
                    continue;
                }
                let left = self.schur_plethysm_into_sum(&alpha, &head, method)?;
                if left.is_zero() {
                    continue;
                }
                let mut right = SymFunc::zero(Basis::Schur);
                for (beta, m) in skew.iter() {
                    let b = self.schur_plethysm_into_sum(beta, &tail, method)?;
                    right += &b.scale(&crate::symfunc::rational(*m as i64));
                }
                out += &self.multiply_schur(&left, &right);
            }
        }
        Ok(out)
    }

    pub fn plethysm_cache_len(&self) -> usize {
        self.plethysms.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn method_names_round_trip() {
        for m in [Method::PowersumOracle, Method::SperpRecursive, Method::ClosedForm, Method::Auto] {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
    }

    #[test]
    fn trivial_plethysms() {
        let ctx = Context::new();
        let g = SymFunc::s(partition![3, 1]);
        for m in [Method::PowersumOracle, Method::SperpRecursive, Method::Auto] {
            assert_eq!(
                ctx.plethysm(&g, &SymFunc::s(partition![1]), m).unwrap(),
                g,
                "g[s1] = g by {m}"
            );
        }
    }

    #[test]
    fn sum_inner_argument_matches_oracle() {
        let ctx = Context::new();
        let g = &SymFunc::s(partition![2]) + &SymFunc::s(partition![1, 1]);
        let g = &g + &SymFunc::s(partition![2]);
        for lambda in [partition![2], partition![1, 1], partition![2, 1]] {
            let f = SymFunc::s(lambda);
            let want = ctx.plethysm(&f, &g, Method::PowersumOracle).unwrap();
            assert_eq!(ctx.plethysm(&f, &g, Method::Auto).unwrap(), want);
        }
    }

    #[test]
    fn constant_inner_argument() {
        let ctx = Context::new();
        let one = SymFunc::one(Basis::Schur);
        assert_eq!(
            ctx.plethysm(&SymFunc::s(partition![3]), &one, Method::Auto).unwrap(),
            one
        );
        assert!(ctx
            .plethysm(&SymFunc::s(partition![2, 1]), &one, Method::Auto)
            .unwrap()
            .is_zero());
        // h_2[2] = 3 agrees with the oracle
        let two = one.scale(&crate::symfunc::rational(2));
        assert_eq!(
            ctx.plethysm(&SymFunc::s(partition![2]), &two, Method::Auto).unwrap(),
            ctx.plethysm(&SymFunc::s(partition![2]), &two, Method::PowersumOracle).unwrap()
        );
    }
}
