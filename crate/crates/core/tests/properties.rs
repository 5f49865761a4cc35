use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use lrq_core::partitions::{is_lattice, word_of_partition};
use lrq_core::symfunc::{macdonald_inner, multiply, schur_lower};
use lrq_core::{Basis, LaurentPoly, Partition, RationalPoly, SymFunc};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_size, 0..=max_size).prop_map(move |mut parts| {
        let mut total = 0;
        parts.retain(|&x| {
            total += x;
            total <= max_size
        });
        Partition::from_unsorted(parts)
    })
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = lrq_core::partitions::partitions_of(n, None);
    prop::sample::select(all)
}

/// A random degree-`n` element: a few Schur functions with small Laurent
/// coefficients.
fn homogeneous(n: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_of(n), laurent()), 1..4).prop_map(|terms| {
        SymFunc::from_integral_terms(Basis::S, terms)
    })
}

fn rational(c: &LaurentPoly) -> RationalPoly {
    c.to_rational()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn squaring_substitution_is_multiplicative(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).substitute_t_squared(), &a.substitute_t_squared() * &b.substitute_t_squared());
        prop_assert_eq!(a.substitute_t_squared().eval_at_one(), a.eval_at_one());
    }

    #[test]
    fn partition_text_round_trips(lambda in partition(12)) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        prop_assert!(is_lattice(&word_of_partition(&lambda).0));
    }

    #[test]
    fn macdonald_form_is_symmetric(k in 1usize..=3, f in homogeneous(4), g in homogeneous(4)) {
        prop_assert_eq!(macdonald_inner(&f, &g, k), macdonald_inner(&g, &f, k));
    }

    #[test]
    fn lowering_is_adjoint(
        k in 1usize..=3,
        nu in partition(3),
        f in homogeneous(4),
        extra in laurent(),
    ) {
        let g_degree = 4 - nu.size();
        let g = SymFunc::from_integral_terms(
            Basis::S,
            lrq_core::partitions::partitions_of(g_degree, None).into_iter().map(|l| (l, extra.clone())),
        );
        let lhs = macdonald_inner(&schur_lower(&nu, &f, k), &g, k);
        let rhs = macdonald_inner(&f, &multiply(&SymFunc::schur(nu.clone()), &g), k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_changes_are_linear(f in homogeneous(3), g in homogeneous(3), c in laurent()) {
        let c = rational(&c);
        for b in [Basis::P, Basis::H, Basis::E, Basis::M] {
            let lhs = f.add(&g.scale(&c)).to_basis(b);
            let rhs = f.to_basis(b).add(&g.to_basis(b).scale(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn scaling_by_zero_clears() {
    let f = SymFunc::schur(Partition::new(vec![2, 1]).unwrap());
    assert!(f.scale(&RationalPoly::constant(BigRational::from_integer(0.into()))).is_zero());
}
