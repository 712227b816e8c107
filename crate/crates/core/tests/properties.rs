use proptest::prelude::*;

use sperp::partition::partitions;
use sperp::plethysm::Mode;
use sperp::symfunc::rational;
use sperp::{Basis, Context, Partition, SymFunc};

const BASES: [Basis; 5] = [Basis::Schur, Basis::Monomial, Basis::Homogeneous, Basis::Elementary, Basis::PowerSum];

fn partition_of_size(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn any_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..8, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Homogeneous of degree `d` in the given basis, integer coefficients.
fn homogeneous(basis: Basis, d: usize) -> impl Strategy<Value = SymFunc> {
    let all = partitions(d);
    proptest::collection::vec(-4i64..=4, all.len()).prop_map(move |cs| {
        let mut f = SymFunc::zero(basis);
        for (p, c) in all.iter().zip(cs) {
            f.add_term(p.clone(), rational(c));
        }
        f
    })
}

fn schur_of_degree_up_to(max: usize) -> impl Strategy<Value = SymFunc> {
    (1..=max).prop_flat_map(|d| homogeneous(Basis::Schur, d))
}

fn basis() -> impl Strategy<Value = Basis> {
    (0..BASES.len()).prop_map(|i| BASES[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conversions_round_trip(b1 in basis(), b2 in basis(), f in (1usize..=6).prop_flat_map(|d| homogeneous(Basis::Schur, d))) {
        let ctx = Context::global();
        let f = ctx.to_basis(&f, b1);
        let g = ctx.to_basis(&f, b2);
        prop_assert_eq!(ctx.to_basis(&g, b1), f);
    }

    #[test]
    fn omega_is_an_isometric_involution(f in schur_of_degree_up_to(6), g in schur_of_degree_up_to(6), b in basis()) {
        let ctx = Context::global();
        let fb = ctx.to_basis(&f, b);
        prop_assert_eq!(ctx.omega(&ctx.omega(&fb)), fb);
        prop_assert_eq!(ctx.hall(&ctx.omega(&f), &ctx.omega(&g)), ctx.hall(&f, &g));
    }

    #[test]
    fn product_is_commutative_and_associative(
        f in schur_of_degree_up_to(3), g in schur_of_degree_up_to(3), h in schur_of_degree_up_to(3),
    ) {
        let ctx = Context::global();
        prop_assert_eq!(ctx.multiply(&f, &g), ctx.multiply(&g, &f));
        prop_assert_eq!(
            ctx.multiply(&ctx.multiply(&f, &g), &h),
            ctx.multiply(&f, &ctx.multiply(&g, &h))
        );
    }

    #[test]
    fn skewing_is_adjoint_to_multiplication(
        f in schur_of_degree_up_to(3), g in schur_of_degree_up_to(3), h in schur_of_degree_up_to(6),
    ) {
        let ctx = Context::global();
        prop_assert_eq!(ctx.hall(&ctx.multiply(&f, &g), &h), ctx.hall(&g, &ctx.f_perp(&f, &h)));
    }

    #[test]
    fn lr_coefficients_are_symmetric(mu in partition_of_size(4), nu in partition_of_size(4), pick in any::<prop::sample::Index>()) {
        let ctx = Context::global();
        let n = mu.size() + nu.size();
        let all = partitions(n);
        let lambda = &all[pick.index(all.len())];
        let c = ctx.lr_coefficient(lambda, &mu, &nu);
        prop_assert_eq!(c, ctx.lr_coefficient(lambda, &nu, &mu));
        prop_assert_eq!(c, ctx.lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
    }

    #[test]
    fn perp_sequence_round_trip(f in schur_of_degree_up_to(8), column in any::<bool>()) {
        let ctx = Context::global();
        let mode = if column { Mode::Column } else { Mode::Row };
        let seq = ctx.perp_sequence(&f, mode).unwrap();
        prop_assert_eq!(ctx.expand_schur(&seq).unwrap(), f);
    }

    #[test]
    fn conjugation_is_an_involution(p in any_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn corners_match_distinct_parts(p in any_partition()) {
        let mut distinct = p.parts().to_vec();
        distinct.dedup();
        prop_assert_eq!(p.corner_count(), distinct.len());
    }

    #[test]
    fn w_involution_properties(h in 1usize..=7, pick in any::<prop::sample::Index>()) {
        let members: Vec<Partition> = partitions(2 * h)
            .into_iter()
            .filter(|p| p.is_even() || p.in_p2h().unwrap())
            .collect();
        let nu = &members[pick.index(members.len())];
        let w = nu.w_involution();
        prop_assert_eq!(&w.w_involution(), nu);
        prop_assert_eq!(w.is_even(), nu.is_even());
        if nu.is_even() {
            prop_assert_eq!(w.corner_count(), nu.corner_count());
        }
        prop_assert_eq!(w.in_p2h().unwrap(), nu.in_p2h().unwrap());
    }
}

#[test]
fn w_involution_changes_corners_off_even_partitions() {
    let nu = Partition::new(vec![3, 2, 1]).unwrap();
    let w = nu.w_involution();
    assert_eq!(w, Partition::new(vec![2, 1, 1, 1, 1]).unwrap());
    assert_eq!((nu.corner_count(), w.corner_count()), (3, 2));
}
