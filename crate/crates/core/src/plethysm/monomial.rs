//! Monomial expansions in finitely many variables through
//! `f(x_1, ..., x_n) = Σ_r (s_r^⊥ f)(x_1, ..., x_{n-1}) x_n^r`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};
use crate::Context;

/// A polynomial in `nvars` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

/// Terms in descending lexicographic order of exponents:
/// `x1^2 + x1*x2 + x2^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(j, &p)| if p == 1 { format!("x{}", j + 1) } else { format!("x{}^{p}", j + 1) })
                .collect();
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&monomial.join("*"))?;
            } else {
                write!(f, "{abs}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Context {
    /// `f(x_1, ..., x_n)` by peeling off one variable at a time with `s_r^⊥`.
    pub fn monomial_expansion_sperp(&self, f: &SymFunc, n: usize) -> Result<Polynomial> {
        let fs = self.to_basis(f, Basis::Schur);
        let mut out = Polynomial::zero(n);
        let mut exps = vec![0u32; n];
        self.peel(&fs, n, &mut exps, &mut out)?;
        Ok(out)
    }

    fn peel(&self, f: &SymFunc, n: usize, exps: &mut Vec<u32>, out: &mut Polynomial) -> Result<()> {
        // s_λ vanishes in fewer than ℓ(λ) variables
        let f = f.filter(|p| p.len() <= n);
        if f.is_zero() {
            return Ok(());
        }
        if n == 0 {
            out.add_term(exps.clone(), f.coefficient(&Partition::empty()));
            return Ok(());
        }
        for r in 0..=f.max_degree() {
            let g = self.schur_perp(&Partition::row(r as u32), &f)?;
            exps[n - 1] = r as u32;
            self.peel(&g, n - 1, exps, out)?;
        }
        exps[n - 1] = 0;
        Ok(())
    }

    /// `f(x_1, ..., x_n)` from the monomial basis: each `m_λ` with
    /// `ℓ(λ) ≤ n` contributes every distinct rearrangement of `λ`.
    pub fn monomial_specialization(&self, f: &SymFunc, n: usize) -> Polynomial {
        let fm = self.to_basis(f, Basis::Monomial);
        let mut out = Polynomial::zero(n);
        for (lambda, c) in fm.iter() {
            if lambda.len() > n {
                continue;
            }
            let mut v: Vec<u32> = lambda.parts().to_vec();
            v.resize(n, 0);
            v.sort_unstable();
            loop {
                out.add_term(v.clone(), c.clone());
                if !next_permutation(&mut v) {
                    break;
                }
            }
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::rational;

    #[test]
    fn schur_in_two_variables() {
        let ctx = Context::new();
        let p = ctx.monomial_expansion_sperp(&SymFunc::s(partition![2]), 2).unwrap();
        assert_eq!(p.to_string(), "x1^2 + x1*x2 + x2^2");
        let p = ctx.monomial_expansion_sperp(&SymFunc::s(partition![2, 1]), 2).unwrap();
        assert_eq!(p.to_string(), "x1^2*x2 + x1*x2^2");
    }

    #[test]
    fn no_variables_leaves_the_constant_term() {
        let ctx = Context::new();
        let f = &SymFunc::s(partition![2]) + &SymFunc::constant(Basis::Schur, rational(3));
        let p = ctx.monomial_expansion_sperp(&f, 0).unwrap();
        assert_eq!(p.coefficient(&[]), rational(3));
        assert_eq!(p.len(), 1);
        assert!(ctx.monomial_expansion_sperp(&SymFunc::s(partition![2]), 0).unwrap().is_zero());
    }

    #[test]
    fn agrees_with_monomial_basis() {
        let ctx = Context::new();
        let f = &SymFunc::s(partition![3, 1]) - &SymFunc::basis_element(Basis::PowerSum, partition![2, 2]);
        for n in 0..=4 {
            assert_eq!(
                ctx.monomial_expansion_sperp(&f, n).unwrap(),
                ctx.monomial_specialization(&f, n)
            );
        }
    }
}
