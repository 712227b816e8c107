use crate::error::Result;
use crate::partition::{partitions, Partition};
use crate::plethysm::Method;
use crate::symfunc::{rational, Basis, SymFunc};
use crate::Context;

impl Context {
    /// `f[g_1 + ... + g_k]` as
    /// `Σ Π_i s_{ν(i)}[g_i] <f, Π_i s_{ν(i)}>` over sequences with
    /// `Σ |ν(i)| = deg f`. The result is in the basis of `f`.
    pub fn plethysm_sum_alphabets(&self, f: &SymFunc, gs: &[SymFunc], method: Method) -> Result<SymFunc> {
        let fs = self.to_basis(f, Basis::Schur);
        fs.require_degree()?;
        if gs.is_empty() {
            let constant = fs.coefficient(&Partition::empty());
            return Ok(self.to_basis(&SymFunc::constant(Basis::Schur, constant), f.basis()));
        }
        let mut out = SymFunc::zero(Basis::Schur);
        self.sum_alphabets(&fs, gs, method, &SymFunc::one(Basis::Schur), &mut out)?;
        Ok(self.to_basis(&out, f.basis()))
    }

    fn sum_alphabets(
        &self,
        remaining: &SymFunc,
        gs: &[SymFunc],
        method: Method,
        acc: &SymFunc,
        out: &mut SymFunc,
    ) -> Result<()> {
        if remaining.is_zero() || acc.is_zero() {
            return Ok(());
        }
        let (g, rest) = gs.split_first().expect("at least one alphabet");
        let degree = remaining.max_degree();
        let sizes: Vec<usize> = if rest.is_empty() { vec![degree] } else { (0..=degree).collect() };
        for size in sizes {
            for nu in partitions(size) {
                let next = self.schur_perp(&nu, remaining)?;
                if next.is_zero() {
                    continue;
                }
                let factor = self.plethysm(&SymFunc::s(nu), g, method)?;
                let product = self.multiply(acc, &self.to_basis(&factor, Basis::Schur));
                if rest.is_empty() {
                    *out += &product.scale(&next.coefficient(&Partition::empty()));
                } else {
                    self.sum_alphabets(&next, rest, method, &product, out)?;
                }
            }
        }
        Ok(())
    }

    /// `f[-X] = (-1)^{deg f} (ω f)[X]`; `f` must be homogeneous.
    pub fn negate_alphabet(&self, f: &SymFunc) -> Result<SymFunc> {
        let d = f.require_degree()?;
        let w = self.omega(f);
        Ok(if d % 2 == 0 { w } else { -&w })
    }

    /// `f[tX] = t^{deg f} f[X]` for a formal variable `t`: returns the power
    /// of `t` together with `f`. A rational constant is not a formal variable;
    /// `f[cX]` for `c ∈ ℚ` is a plethysm by `c·s_1`.
    pub fn scale_alphabet(&self, f: &SymFunc) -> Result<(usize, SymFunc)> {
        let d = f.require_degree()?;
        Ok((d, f.clone()))
    }
}

/// `s_1` scaled by an integer, as an inner argument.
pub fn alphabet_multiple(n: i64) -> SymFunc {
    SymFunc::term(Basis::Schur, Partition::row(1), rational(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::partition;

    #[test]
    fn two_copies_of_the_alphabet() {
        let ctx = Context::new();
        let s1 = SymFunc::s(partition![1]);
        let got = ctx
            .plethysm_sum_alphabets(&SymFunc::s(partition![2]), &[s1.clone(), s1], Method::Auto)
            .unwrap();
        let want = &SymFunc::s(partition![2]).scale(&rational(3)) + &SymFunc::s(partition![1, 1]);
        assert_eq!(got, want);
    }

    #[test]
    fn single_alphabet_and_linear_outer() {
        let ctx = Context::new();
        let f = SymFunc::s(partition![2, 1]);
        let g = SymFunc::s(partition![2]);
        assert_eq!(
            ctx.plethysm_sum_alphabets(&f, std::slice::from_ref(&g), Method::Auto).unwrap(),
            ctx.plethysm(&f, &g, Method::Auto).unwrap()
        );
        let h = SymFunc::s(partition![1, 1]);
        assert_eq!(
            ctx.plethysm_sum_alphabets(&SymFunc::s(partition![1]), &[g.clone(), h.clone()], Method::Auto)
                .unwrap(),
            &g + &h
        );
    }

    #[test]
    fn negated_alphabet_matches_oracle() {
        let ctx = Context::new();
        let minus_x = alphabet_multiple(-1);
        for f in [
            SymFunc::s(partition![2]),
            SymFunc::s(partition![2, 1]),
            &SymFunc::s(partition![3, 1]) + &SymFunc::s(partition![2, 1, 1]).scale(&rational(-2)),
        ] {
            assert_eq!(
                ctx.negate_alphabet(&f).unwrap(),
                ctx.plethysm_powersum(&f, &minus_x, Basis::Schur)
            );
        }
        assert_eq!(ctx.negate_alphabet(&SymFunc::s(partition![2])).unwrap(), SymFunc::s(partition![1, 1]));
        let mixed = &SymFunc::s(partition![2]) + &SymFunc::s(partition![1]);
        assert_eq!(ctx.negate_alphabet(&mixed), Err(Error::NotHomogeneous));
    }

    #[test]
    fn formal_scaling_is_degree_bookkeeping() {
        let ctx = Context::new();
        let p3 = SymFunc::basis_element(Basis::PowerSum, partition![3]);
        assert_eq!(ctx.scale_alphabet(&p3).unwrap(), (3, p3));
    }
}
