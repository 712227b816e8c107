//! Basis changes, products, the Hall inner product and `ω`.
//!
//! The Schur basis is the hub: `h`, `e` and `m` reach it through Kostka
//! numbers (both transitions are unitriangular in lexicographic order), and
//! `p` reaches it through the Murnaghan–Nakayama rule.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::{Basis, Rational, SymFunc};
use crate::lr::pieri_row;
use crate::partition::{partitions, Partition};
use crate::Context;

/// Kostka numbers `K_{λμ}` for every pair of partitions of one degree.
pub(crate) struct KostkaTable {
    /// Partitions in descending lexicographic order.
    parts: Vec<Partition>,
    index: FxHashMap<Partition, usize>,
    /// `k[λ][μ]`, the coefficient of `s_λ` in `h_μ`.
    k: Vec<Vec<u64>>,
}

impl KostkaTable {
    fn build(n: usize) -> Self {
        let parts = partitions(n);
        let index: FxHashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut k = vec![vec![0u64; parts.len()]; parts.len()];
        for (j, mu) in parts.iter().enumerate() {
            for (lambda, c) in complete_in_schur(mu) {
                k[index[&lambda]][j] = c;
            }
        }
        KostkaTable { parts, index, k }
    }
}

/// Schur expansion of `h_μ` by iterating the Pieri rule.
fn complete_in_schur(mu: &Partition) -> FxHashMap<Partition, u64> {
    let mut cur: FxHashMap<Partition, u64> = FxHashMap::default();
    cur.insert(Partition::empty(), 1);
    for &r in mu.parts() {
        let mut next = FxHashMap::default();
        for (lambda, c) in cur {
            for nu in pieri_row(&lambda, r) {
                *next.entry(nu).or_insert(0) += c;
            }
        }
        cur = next;
    }
    cur
}

/// Ways to add (`k > 0`) or remove (`k < 0`) a border strip of size `|k|`,
/// with the sign `(-1)^{height}`. Works on beta-numbers: moving one bead by
/// `k` positions, the sign counts the beads jumped over.
pub(crate) fn border_strips(lambda: &Partition, k: i64) -> Vec<(Partition, bool)> {
    let len = lambda.len() + k.unsigned_abs() as usize;
    let beta: Vec<i64> = (0..len)
        .map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64)
        .collect();
    let max = beta[0] + k.max(0);
    let mut occupied = vec![false; max as usize + 1];
    for &b in &beta {
        occupied[b as usize] = true;
    }
    let mut out = Vec::new();
    for i in 0..len {
        let target = beta[i] + k;
        if target < 0 || occupied[target as usize] {
            continue;
        }
        let (lo, hi) = if k > 0 { (beta[i], target) } else { (target, beta[i]) };
        let jumped = beta.iter().filter(|&&b| b > lo && b < hi).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (len - 1 - j) as i64) as u32)
            .collect();
        out.push((Partition::from_parts_unchecked(parts), jumped % 2 == 1));
    }
    out
}

/// Caches for the transition matrices.
#[derive(Default)]
pub(crate) struct Tables {
    kostka: RwLock<FxHashMap<usize, Arc<KostkaTable>>>,
    characters: RwLock<FxHashMap<(Partition, Partition), BigInt>>,
}

impl Tables {
    fn kostka(&self, n: usize) -> Arc<KostkaTable> {
        if let Some(t) = self.kostka.read().unwrap().get(&n) {
            return t.clone();
        }
        let t = Arc::new(KostkaTable::build(n));
        self.kostka.write().unwrap().insert(n, t.clone());
        t
    }

    /// `χ^λ(ρ)` by border-strip removal.
    fn character(&self, lambda: &Partition, rho: &[u32]) -> BigInt {
        let Some((&first, rest)) = rho.split_first() else {
            return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        let key = (lambda.clone(), Partition::from_parts_unchecked(rho.to_vec()));
        if let Some(c) = self.characters.read().unwrap().get(&key) {
            return c.clone();
        }
        let mut total = BigInt::zero();
        for (nu, negative) in border_strips(lambda, -(first as i64)) {
            let c = self.character(&nu, rest);
            if negative {
                total -= c;
            } else {
                total += c;
            }
        }
        self.characters.write().unwrap().insert(key, total.clone());
        total
    }
}

fn add_to(acc: &mut FxHashMap<Partition, Rational>, p: Partition, c: Rational) {
    *acc.entry(p).or_insert_with(Rational::zero) += c;
}

impl Context {
    /// Expresses `f` in `target`; exact, and the identity when the bases agree.
    pub fn to_basis(&self, f: &SymFunc, target: Basis) -> SymFunc {
        if f.basis() == target {
            return f.clone();
        }
        let s = self.to_schur(f);
        self.from_schur(&s, target)
    }

    fn to_schur(&self, f: &SymFunc) -> SymFunc {
        match f.basis() {
            Basis::Schur => f.clone(),
            Basis::PowerSum => self.powersum_to_schur(f),
            Basis::Homogeneous | Basis::Elementary => {
                let conj = f.basis() == Basis::Elementary;
                let mut acc = FxHashMap::default();
                for (mu, c) in f.iter() {
                    let table = self.tables.kostka(mu.size());
                    let j = table.index[mu];
                    for (i, lambda) in table.parts.iter().enumerate() {
                        let k = table.k[i][j];
                        if k != 0 {
                            let key = if conj { lambda.conjugate() } else { lambda.clone() };
                            add_to(&mut acc, key, c * Rational::from_integer(k.into()));
                        }
                    }
                }
                SymFunc::from_terms(Basis::Schur, acc)
            }
            Basis::Monomial => {
                // Peel off the lexicographically largest m_μ using
                // s_μ = m_μ + (smaller monomials).
                let mut out = SymFunc::zero(Basis::Schur);
                for d in degrees(f) {
                    let table = self.tables.kostka(d);
                    let mut rest: Vec<Rational> = table
                        .parts
                        .iter()
                        .map(|p| f.coefficient(p))
                        .collect();
                    for i in 0..table.parts.len() {
                        let a = rest[i].clone();
                        if a.is_zero() {
                            continue;
                        }
                        for (j, r) in rest.iter_mut().enumerate().skip(i) {
                            let k = table.k[i][j];
                            if k != 0 {
                                *r -= &a * Rational::from_integer(k.into());
                            }
                        }
                        out.add_term(table.parts[i].clone(), a);
                    }
                }
                out
            }
        }
    }

    fn from_schur(&self, s: &SymFunc, target: Basis) -> SymFunc {
        match target {
            Basis::Schur => s.clone(),
            Basis::PowerSum => {
                let mut acc = FxHashMap::default();
                for (lambda, c) in s.iter() {
                    for rho in partitions(lambda.size()) {
                        let chi = self.tables.character(lambda, rho.parts());
                        if chi.is_zero() {
                            continue;
                        }
                        let coeff = c * Rational::new(chi, rho.z());
                        add_to(&mut acc, rho, coeff);
                    }
                }
                SymFunc::from_terms(Basis::PowerSum, acc)
            }
            Basis::Monomial => {
                let mut acc = FxHashMap::default();
                for (lambda, c) in s.iter() {
                    let table = self.tables.kostka(lambda.size());
                    let i = table.index[lambda];
                    for (j, mu) in table.parts.iter().enumerate() {
                        let k = table.k[i][j];
                        if k != 0 {
                            add_to(&mut acc, mu.clone(), c * Rational::from_integer(k.into()));
                        }
                    }
                }
                SymFunc::from_terms(Basis::Monomial, acc)
            }
            Basis::Homogeneous | Basis::Elementary => {
                // h_μ = s_μ + (lexicographically larger Schur functions), so
                // peel from the smallest index upward. For e, solve for ω f.
                let conj = target == Basis::Elementary;
                let src = if conj { s.map_partitions(Partition::conjugate) } else { s.clone() };
                let mut out = SymFunc::zero(target);
                for d in degrees(&src) {
                    let table = self.tables.kostka(d);
                    let mut rest: Vec<Rational> =
                        table.parts.iter().map(|p| src.coefficient(p)).collect();
                    for j in (0..table.parts.len()).rev() {
                        let a = rest[j].clone();
                        if a.is_zero() {
                            continue;
                        }
                        for (i, r) in rest.iter_mut().enumerate().take(j + 1) {
                            let k = table.k[i][j];
                            if k != 0 {
                                *r -= &a * Rational::from_integer(k.into());
                            }
                        }
                        out.add_term(table.parts[j].clone(), a);
                    }
                }
                out
            }
        }
    }

    /// Murnaghan–Nakayama, organized as a trie over the power-sum indices so
    /// shared prefixes are expanded once.
    fn powersum_to_schur(&self, f: &SymFunc) -> SymFunc {
        let terms: Vec<(&[u32], Rational)> =
            f.iter().map(|(p, c)| (p.parts(), c.clone())).collect();
        SymFunc::from_terms(Basis::Schur, powersum_terms_to_schur(terms))
    }

    /// Product in the basis of `f`; `g` is converted first when needed.
    pub fn multiply(&self, f: &SymFunc, g: &SymFunc) -> SymFunc {
        let basis = f.basis();
        let g = self.to_basis(g, basis);
        match basis {
            Basis::Schur => self.multiply_schur(f, &g),
            Basis::Monomial => {
                let fs = self.to_schur(f);
                let gs = self.to_schur(&g);
                let prod = self.multiply_schur(&fs, &gs);
                self.from_schur(&prod, Basis::Monomial)
            }
            Basis::PowerSum | Basis::Homogeneous | Basis::Elementary => {
                let mut acc = FxHashMap::default();
                for (p, a) in f.iter() {
                    for (q, b) in g.iter() {
                        add_to(&mut acc, p.union(q), a * b);
                    }
                }
                SymFunc::from_terms(basis, acc)
            }
        }
    }

    /// The Hall inner product, computed in the Schur basis where it is the
    /// dot product of coefficient vectors.
    pub fn hall(&self, f: &SymFunc, g: &SymFunc) -> Rational {
        let fs = self.to_schur(f);
        let gs = self.to_schur(g);
        let (small, large) = if fs.len() <= gs.len() { (&fs, &gs) } else { (&gs, &fs) };
        small
            .iter()
            .map(|(p, c)| c * large.coefficient(p))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The involution `ω`, returned in the basis of `f`.
    pub fn omega(&self, f: &SymFunc) -> SymFunc {
        match f.basis() {
            Basis::Schur => f.map_partitions(Partition::conjugate),
            Basis::PowerSum => SymFunc::from_terms(
                Basis::PowerSum,
                f.iter().map(|(p, c)| {
                    let odd = (p.size() + p.len()) % 2 == 1;
                    (p.clone(), if odd { -c } else { c.clone() })
                }),
            ),
            Basis::Homogeneous | Basis::Elementary => {
                let swapped = if f.basis() == Basis::Homogeneous {
                    Basis::Elementary
                } else {
                    Basis::Homogeneous
                };
                let image = SymFunc::from_terms(swapped, f.iter().map(|(p, c)| (p.clone(), c.clone())));
                self.to_basis(&image, f.basis())
            }
            Basis::Monomial => {
                let s = self.to_schur(f).map_partitions(Partition::conjugate);
                self.from_schur(&s, Basis::Monomial)
            }
        }
    }

    /// Kostka number `K_{λμ}`: the number of SSYT of shape `λ` and weight `μ`.
    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> u64 {
        if lambda.size() != mu.size() {
            return 0;
        }
        let table = self.tables.kostka(lambda.size());
        table.k[table.index[lambda]][table.index[mu]]
    }
}

fn degrees(f: &SymFunc) -> Vec<usize> {
    let mut d: Vec<usize> = f.iter().map(|(p, _)| p.size()).collect();
    d.sort_unstable();
    d.dedup();
    d
}

pub(crate) fn powersum_terms_to_schur(terms: Vec<(&[u32], Rational)>) -> FxHashMap<Partition, Rational> {
    let mut acc: FxHashMap<Partition, Rational> = FxHashMap::default();
    let mut groups: FxHashMap<u32, Vec<(&[u32], Rational)>> = FxHashMap::default();
    for (parts, c) in terms {
        match parts.split_last() {
            None => add_to(&mut acc, Partition::empty(), c),
            Some((&k, rest)) => groups.entry(k).or_default().push((rest, c)),
        }
    }
    for (k, group) in groups {
        let inner = powersum_terms_to_schur(group);
        for (lambda, c) in inner {
            for (nu, negative) in border_strips(&lambda, k as i64) {
                add_to(&mut acc, nu, if negative { -&c } else { c.clone() });
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::{ratio, rational};

    fn s(p: Partition) -> SymFunc {
        SymFunc::s(p)
    }

    #[test]
    fn schur_to_monomial_small() {
        let ctx = Context::new();
        let m = ctx.to_basis(&s(partition![2]), Basis::Monomial);
        let expect = SymFunc::from_counts(
            Basis::Monomial,
            [(partition![2], 1u32), (partition![1, 1], 1)],
        );
        assert_eq!(m, expect);
        let back = ctx.to_basis(&SymFunc::basis_element(Basis::Monomial, partition![1]), Basis::Schur);
        assert_eq!(back, s(partition![1]));
    }

    #[test]
    fn schur_to_powersum_small() {
        let ctx = Context::new();
        let p = ctx.to_basis(&s(partition![1, 1]), Basis::PowerSum);
        let expect = SymFunc::from_terms(
            Basis::PowerSum,
            [(partition![1, 1], ratio(1, 2)), (partition![2], ratio(-1, 2))],
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn border_strip_signs() {
        // s_1 * p_2 = s_3 - s_111; [2,1]/[1] is not connected
        let strips = border_strips(&partition![1], 2);
        let mut got: Vec<_> = strips.into_iter().collect();
        got.sort();
        assert_eq!(got, vec![(partition![1, 1, 1], true), (partition![3], false)]);
    }

    #[test]
    fn characters_of_s3() {
        let t = Tables::default();
        assert_eq!(t.character(&partition![2, 1], &[1, 1, 1]), BigInt::from(2));
        assert_eq!(t.character(&partition![2, 1], &[3]), BigInt::from(-1));
        assert_eq!(t.character(&partition![1, 1, 1], &[2, 1]), BigInt::from(-1));
    }

    #[test]
    fn hall_inner_product_examples() {
        let ctx = Context::new();
        assert_eq!(ctx.hall(&s(partition![2, 1]), &s(partition![2, 1])), rational(1));
        assert_eq!(ctx.hall(&s(partition![2, 1]), &s(partition![3])), rational(0));
        let h2 = SymFunc::basis_element(Basis::Homogeneous, partition![2]);
        let m11 = SymFunc::basis_element(Basis::Monomial, partition![1, 1]);
        let m2 = SymFunc::basis_element(Basis::Monomial, partition![2]);
        assert_eq!(ctx.hall(&h2, &m11), rational(0));
        assert_eq!(ctx.hall(&h2, &m2), rational(1));
        // <p_λ, p_λ> = z_λ
        let p21 = SymFunc::basis_element(Basis::PowerSum, partition![2, 1, 1]);
        assert_eq!(ctx.hall(&p21, &p21), rational(4));
    }

    #[test]
    fn omega_examples() {
        let ctx = Context::new();
        assert_eq!(ctx.omega(&s(partition![3, 1])), s(partition![2, 1, 1]));
        assert_eq!(ctx.omega(&s(partition![2, 1])), s(partition![2, 1]));
        let p2 = SymFunc::basis_element(Basis::PowerSum, partition![2]);
        assert_eq!(ctx.omega(&p2), -&p2);
        let h2 = SymFunc::basis_element(Basis::Homogeneous, partition![2]);
        let e2 = SymFunc::basis_element(Basis::Elementary, partition![2]);
        assert_eq!(ctx.to_basis(&ctx.omega(&h2), Basis::Elementary), e2);
    }

    #[test]
    fn products_in_each_basis() {
        let ctx = Context::new();
        let p2 = SymFunc::basis_element(Basis::PowerSum, partition![2]);
        let p3 = SymFunc::basis_element(Basis::PowerSum, partition![3]);
        assert_eq!(
            ctx.multiply(&p2, &p3),
            SymFunc::basis_element(Basis::PowerSum, partition![3, 2])
        );
        assert_eq!(
            ctx.multiply(&s(partition![1]), &s(partition![1])),
            &s(partition![2]) + &s(partition![1, 1])
        );
        assert_eq!(
            ctx.multiply(&s(partition![2]), &s(partition![1, 1])),
            &s(partition![3, 1]) + &s(partition![2, 1, 1])
        );
        let m1 = SymFunc::basis_element(Basis::Monomial, partition![1]);
        // m1^2 = m2 + 2 m11
        let expect = SymFunc::from_counts(Basis::Monomial, [(partition![2], 1u32), (partition![1, 1], 2)]);
        assert_eq!(ctx.multiply(&m1, &m1), expect);
    }

    #[test]
    fn kostka_numbers() {
        let ctx = Context::new();
        assert_eq!(ctx.kostka(&partition![2, 1], &partition![1, 1, 1]), 2);
        assert_eq!(ctx.kostka(&partition![3, 2], &partition![2, 2, 1]), 2);
        assert_eq!(ctx.kostka(&partition![2, 2], &partition![3, 1]), 0);
    }
}
