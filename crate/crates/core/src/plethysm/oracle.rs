//! Plethysm straight from its definition in the power-sum basis:
//! `p_r[g]` multiplies every power-sum index of `g` by `r`, and
//! `f[g] = Σ c_μ Π p_{μ_i}[g]`.

use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::symfunc::{Basis, Rational, SymFunc};
use crate::Context;

type PExpansion = FxHashMap<Vec<u32>, Rational>;

fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn multiply(a: &PExpansion, b: &PExpansion) -> PExpansion {
    let mut out = PExpansion::default();
    for (p, x) in a {
        for (q, y) in b {
            *out.entry(merge(p, q)).or_insert_with(Rational::zero) += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl Context {
    /// The oracle: exact `f[g]` for any rational `f`, `g`, returned in `basis`.
    pub fn plethysm_powersum(&self, f: &SymFunc, g: &SymFunc, basis: Basis) -> SymFunc {
        let fp = self.to_basis(f, Basis::PowerSum);
        let gp = self.to_basis(g, Basis::PowerSum);

        // powers[(r, m)] = (p_r[g])^m
        let mut powers: FxHashMap<(u32, usize), PExpansion> = FxHashMap::default();
        let scaled = |r: u32| -> PExpansion {
            gp.iter()
                .map(|(p, c)| (p.parts().iter().map(|x| x * r).collect(), c.clone()))
                .collect()
        };
        let power = |r: u32, m: usize, powers: &mut FxHashMap<(u32, usize), PExpansion>| {
            powers.entry((r, 1)).or_insert_with(|| scaled(r));
            for k in 2..=m {
                if !powers.contains_key(&(r, k)) {
                    let v = multiply(&powers[&(r, k - 1)], &powers[&(r, 1)]);
                    powers.insert((r, k), v);
                }
            }
        };

        let mut total = PExpansion::default();
        for (mu, c) in fp.iter() {
            let mut acc: PExpansion = PExpansion::default();
            acc.insert(Vec::new(), c.clone());
            let parts = mu.parts();
            let mut i = 0;
            while i < parts.len() {
                let r = parts[i];
                let m = parts[i..].iter().take_while(|&&x| x == r).count();
                power(r, m, &mut powers);
                acc = multiply(&acc, &powers[&(r, m)]);
                i += m;
            }
            for (p, x) in acc {
                *total.entry(p).or_insert_with(Rational::zero) += x;
            }
        }
        total.retain(|_, c| !c.is_zero());

        if basis == Basis::PowerSum {
            return SymFunc::from_terms(
                Basis::PowerSum,
                total
                    .into_iter()
                    .map(|(p, c)| (crate::Partition::from_parts_unchecked(p), c)),
            );
        }
        let terms: Vec<(&[u32], Rational)> =
            total.iter().map(|(p, c)| (p.as_slice(), c.clone())).collect();
        let schur = SymFunc::from_terms(
            Basis::Schur,
            crate::symfunc::powersum_terms_to_schur(terms),
        );
        self.to_basis(&schur, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::rational;

    #[test]
    fn power_sum_into_power_sum() {
        let ctx = Context::new();
        let p2 = SymFunc::basis_element(Basis::PowerSum, partition![2]);
        let p3 = SymFunc::basis_element(Basis::PowerSum, partition![3]);
        assert_eq!(
            ctx.plethysm_powersum(&p2, &p3, Basis::PowerSum),
            SymFunc::basis_element(Basis::PowerSum, partition![6])
        );
    }

    #[test]
    fn tableaux_of_tableaux_example() {
        let ctx = Context::new();
        let s2 = SymFunc::s(partition![2]);
        assert_eq!(
            ctx.plethysm_powersum(&s2, &s2, Basis::Schur),
            &SymFunc::s(partition![4]) + &SymFunc::s(partition![2, 2])
        );
    }

    #[test]
    fn rational_multiple_of_the_alphabet() {
        // h_2[2X] = 2 p_1^2 + p_2 in the power-sum basis
        let ctx = Context::new();
        let s2 = SymFunc::s(partition![2]);
        let two_x = SymFunc::term(Basis::Schur, partition![1], rational(2));
        let got = ctx.plethysm_powersum(&s2, &two_x, Basis::PowerSum);
        let want = SymFunc::from_counts(
            Basis::PowerSum,
            [(partition![1, 1], 2u32), (partition![2], 1)],
        );
        assert_eq!(got, want);
    }
}
