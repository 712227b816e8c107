//! Exact linear combinations of basis elements of the ring of symmetric
//! functions over the rationals.

mod convert;
mod format;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub(crate) use convert::{powersum_terms_to_schur, Tables};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::Context;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Monomial,
    Homogeneous,
    Elementary,
    PowerSum,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Schur,
        Basis::Monomial,
        Basis::Homogeneous,
        Basis::Elementary,
        Basis::PowerSum,
    ];

    pub fn letter(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::Monomial => 'm',
            Basis::Homogeneous => 'h',
            Basis::Elementary => 'e',
            Basis::PowerSum => 'p',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        Some(match c {
            's' => Basis::Schur,
            'm' => Basis::Monomial,
            'h' => Basis::Homogeneous,
            'e' => Basis::Elementary,
            'p' => Basis::PowerSum,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::Monomial => "monomial",
            Basis::Homogeneous => "homogeneous",
            Basis::Elementary => "elementary",
            Basis::PowerSum => "powersum",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Basis> {
        let mut chars = s.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if let Some(b) = Basis::from_letter(c) {
                return Ok(b);
            }
        }
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "basis",
                name: s.to_string(),
            })
    }
}

/// A finite rational combination of basis elements, all in one basis.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `c`, stored as the empty-partition term.
    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::term(basis, Partition::empty(), c)
    }

    pub fn one(basis: Basis) -> Self {
        Self::constant(basis, Rational::one())
    }

    pub fn term(basis: Basis, partition: Partition, coeff: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(partition, coeff);
        f
    }

    /// A single basis element with coefficient one.
    pub fn basis_element(basis: Basis, partition: Partition) -> Self {
        Self::term(basis, partition, Rational::one())
    }

    pub fn s(partition: Partition) -> Self {
        Self::basis_element(Basis::Schur, partition)
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = Self::zero(basis);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    /// Builds from integer counts, as produced by the combinatorial kernels.
    pub fn from_counts<I, N>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, N)>,
        BigInt: From<N>,
    {
        Self::from_terms(
            basis,
            terms
                .into_iter()
                .map(|(p, n)| (p, Rational::from_integer(BigInt::from(n)))),
        )
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, partition: &Partition) -> Rational {
        self.terms.get(partition).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in key order (not display order).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted by degree descending, then descending lexicographic.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Rational> {
        self.terms
    }

    pub fn add_term(&mut self, partition: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(partition) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The common size of all indexing partitions, if there is one.
    ///
    /// The zero function has no degree.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn require_degree(&self) -> Result<usize> {
        if self.is_zero() {
            return Ok(0);
        }
        self.degree().ok_or(Error::NotHomogeneous)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> SymFunc {
        self.filter(|p| p.size() == d)
    }

    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels every index; colliding images are summed.
    pub fn map_partitions(&self, mut f: impl FnMut(&Partition) -> Partition) -> SymFunc {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(p, c)| (f(p), c.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x * c))
                .collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Keeps Schur terms indexed by partitions with at most `k` parts.
    pub fn down(&self, k: usize) -> Result<SymFunc> {
        self.require_basis(Basis::Schur)?;
        Ok(self.filter(|p| p.len() <= k))
    }

    /// Bilinear extension of `s_μ ⊙ s_λ = s_{μ+λ}`.
    pub fn odot(&self, other: &SymFunc) -> Result<SymFunc> {
        self.require_basis(Basis::Schur)?;
        other.require_basis(Basis::Schur)?;
        let mut out = SymFunc::zero(Basis::Schur);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.add(q), a * b);
            }
        }
        Ok(out)
    }

    pub(crate) fn require_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::WrongBasis {
                expected: basis,
                found: self.basis,
            })
        }
    }

    /// Converts using the shared global context.
    pub fn to_basis(&self, basis: Basis) -> SymFunc {
        Context::global().to_basis(self, basis)
    }

    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        Context::global().multiply(self, other)
    }

    pub fn omega(&self) -> SymFunc {
        Context::global().omega(self)
    }

    pub fn hall(&self, other: &SymFunc) -> Rational {
        Context::global().hall(self, other)
    }

    /// Sum in the basis of `self`, converting `other` if needed.
    fn combine(&self, other: &SymFunc, sign: bool) -> SymFunc {
        let converted;
        let rhs = if other.basis == self.basis {
            other
        } else {
            converted = other.to_basis(self.basis);
            &converted
        };
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), if sign { c.clone() } else { -c });
        }
        out
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.combine(rhs, true)
    }
}

impl Add for SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.combine(rhs, false)
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        if rhs.basis == self.basis {
            for (p, c) in &rhs.terms {
                self.add_term(p.clone(), c.clone());
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        if rhs.basis == self.basis {
            for (p, c) in &rhs.terms {
                self.add_term(p.clone(), -c);
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        -&self
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn addition_and_scaling() {
        let s2 = SymFunc::s(partition![2]);
        assert_eq!(&s2 + &s2, s2.scale(&rational(2)));
        assert!((&s2 - &s2).is_zero());
        let s11 = SymFunc::s(partition![1, 1]);
        assert_eq!(s11.scale(&rational(2)).scale(&ratio(1, 2)), s11);
    }

    #[test]
    fn degree_of_mixed_function_is_undefined() {
        let f = &SymFunc::s(partition![2]) + &SymFunc::s(partition![1]);
        assert_eq!(f.degree(), None);
        assert_eq!(f.max_degree(), 2);
        assert_eq!(SymFunc::zero(Basis::Schur).degree(), None);
        assert_eq!(SymFunc::s(partition![3, 1]).degree(), Some(4));
    }

    #[test]
    fn down_keeps_short_partitions() {
        let f = &SymFunc::s(partition![3, 1]) + &SymFunc::s(partition![2, 1, 1]);
        assert_eq!(f.down(2).unwrap(), SymFunc::s(partition![3, 1]));
        let g = &f + &SymFunc::constant(Basis::Schur, rational(5));
        assert_eq!(g.down(0).unwrap(), SymFunc::constant(Basis::Schur, rational(5)));
        let p = SymFunc::basis_element(Basis::PowerSum, partition![2]);
        assert!(matches!(p.down(1), Err(Error::WrongBasis { .. })));
    }

    #[test]
    fn odot_adds_partitions_componentwise() {
        let a = SymFunc::s(partition![2, 1]);
        let b = SymFunc::s(partition![1, 1]);
        assert_eq!(a.odot(&b).unwrap(), SymFunc::s(partition![3, 2]));
        let c = SymFunc::s(partition![6, 6]);
        assert_eq!(
            c.odot(&SymFunc::s(partition![3])).unwrap(),
            SymFunc::s(partition![9, 6])
        );
        let sum = &SymFunc::s(partition![1]) + &SymFunc::s(partition![2]);
        assert_eq!(
            sum.odot(&SymFunc::s(partition![1])).unwrap(),
            &SymFunc::s(partition![2]) + &SymFunc::s(partition![3])
        );
    }

    #[test]
    fn basis_parses_letters_and_names() {
        assert_eq!("s".parse::<Basis>().unwrap(), Basis::Schur);
        assert_eq!("powersum".parse::<Basis>().unwrap(), Basis::PowerSum);
        assert!("q".parse::<Basis>().is_err());
    }
}
