mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;

use common::*;
use symfact::exact::{determinant, int, MultiPoly, Rational, UniPoly};
use symfact::ops;
use symfact::partitions::{dominance_leq, enumerate_partitions, Partition};
use symfact::sym_bases::{expand_in_basis, Basis};
use symfact::qops_schur as qs;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// A sparse polynomial in three variables of degree ≤ 3 per slot.
fn poly3() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), rational()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(xs(3), terms).unwrap())
}

fn nonzero_poly3() -> impl Strategy<Value = MultiPoly> {
    poly3().prop_filter("nonzero", |p| !p.is_zero())
}

fn point3() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 3)
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(rational(), n), n))
}

fn partition(max_weight: u32, n: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(max_weight, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// Random symmetric polynomial in `n` variables as a combination of orbit sums.
fn symmetric(n: usize, max_weight: u32) -> impl Strategy<Value = MultiPoly> {
    let all = enumerate_partitions(max_weight, n);
    let len = all.len();
    prop::collection::vec((0..len, rational()), 1..5).prop_map(move |picks| {
        picks.into_iter().fold(MultiPoly::zero(xs(n)), |acc, (i, c)| {
            &acc + &monomial_orbit(&all[i]).scale(&c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(xs(3)), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly3(), b in nonzero_poly3()) {
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly3(), b in poly3(), x in point3()) {
        let (va, vb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &va + &vb);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), va * vb);
    }

    #[test]
    fn leibniz_rule(a in poly3(), b in poly3(), slot in 0usize..3) {
        let lhs = (&a * &b).partial(slot);
        let rhs = &(&a.partial(slot) * &b) + &(&a * &b.partial(slot));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_matches_leibniz(m in square(4)) {
        prop_assert_eq!(determinant(&m).unwrap(), leibniz_det(&m));
    }

    #[test]
    fn determinant_row_swap_and_repeat(m in square(4)) {
        prop_assume!(m.len() >= 2);
        let mut swapped = m.clone();
        swapped.swap(0, 1);
        prop_assert_eq!(determinant(&swapped).unwrap(), -determinant(&m).unwrap());
        let mut repeated = m.clone();
        repeated[1] = repeated[0].clone();
        prop_assert!(determinant(&repeated).unwrap().is_zero());
    }

    #[test]
    fn univariate_product_evaluates(a in prop::collection::vec(rational(), 0..5),
                                    b in prop::collection::vec(rational(), 0..5),
                                    z in rational()) {
        let (pa, pb) = (UniPoly::from_coeffs(a), UniPoly::from_coeffs(b));
        prop_assert_eq!((&pa * &pb).eval(&z), pa.eval(&z) * pb.eval(&z));
        prop_assert_eq!((&pa * &pb).derivative(), &(&pa.derivative() * &pb) + &(&pa * &pb.derivative()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expansion_round_trips(f in (1usize..=3).prop_flat_map(|n| symmetric(n, 5))) {
        for basis in Basis::ALL {
            let exp = expand_in_basis(&f, basis).unwrap();
            prop_assert_eq!(exp.reconstruct().unwrap(), f.clone());
        }
    }

    #[test]
    fn dominance_is_prefix_sums(a in partition(6, 3), b in partition(6, 3)) {
        let lib = a.weight() == b.weight() && dominance_leq(&a, &b).unwrap();
        prop_assert_eq!(lib, dominated(&a, &b));
    }

    #[test]
    fn separation_is_linear(f in symmetric(3, 4), g in symmetric(3, 4), c in rational()) {
        let combo = &f + &g.scale(&c);
        for basis in Basis::ALL {
            let lhs = ops::separate(basis, &combo).unwrap();
            let rhs = &ops::separate(basis, &f).unwrap() + &ops::separate(basis, &g).unwrap().scale(&c);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverses_undo_separation(f in (1usize..=3).prop_flat_map(|n| symmetric(n, 4))) {
        for basis in [Basis::Monomial, Basis::Schur] {
            let g = ops::separate(basis, &f).unwrap();
            prop_assert_eq!(ops::invert(basis, &g).unwrap(), f.clone());
        }
    }

    #[test]
    fn q_at_a_point_restricts_q(lambda in partition(5, 3), z in rational()) {
        // Q_z s̄_λ at a fixed z equals q_λ(z) s̄_λ
        let bar = qs::s_bar(&lambda).unwrap();
        let at = qs::q_operator().apply_at(&bar, 3, &z).unwrap();
        let q = restrict_first(&bar).eval(&z);
        prop_assert_eq!(at, bar.scale(&q));
    }

    #[test]
    fn lifting_factorizes_q0(f in (2usize..=3).prop_flat_map(|n| symmetric(n, 4))) {
        prop_assert!(qs::lifting_consistency(&f).unwrap());
    }

    #[test]
    fn normalization_at_one(lambda in partition(6, 3)) {
        for basis in Basis::ALL {
            let bar = ops::basis_bar(basis, &lambda).unwrap();
            prop_assert_eq!(bar.eval(&vec![Rational::one(); 3]).unwrap(), int(1));
        }
    }
}
