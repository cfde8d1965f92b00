use std::collections::HashMap;

use goncarov::expr::parse_poly;
use goncarov::family::{family_goncarov, hand_parking_enumerator, type_sequence, DeckSpec};
use goncarov::goncarov::{goncarov_constant_ordered_partitions, goncarov_constant_recurrence, goncarov_sequence};
use goncarov::json::{poly_from_json, poly_to_json};
use goncarov::lattice::zeta_enumerator;
use goncarov::operator::{binomial_type_check, PolySequence};
use goncarov::parking::{count_parking, is_u_parking, weighted_pf_enumerator, ParkingVector};
use goncarov::{Grid, Monomial, MultiPoly, Rational, TruncatedSeries, VarId};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [VarId; 4] = [VarId::X, VarId::W(2), VarId::Z(0), VarId::Y(3)];

fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((coeff(), prop::array::uniform4(0u32..=2)), 0..5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, e)| (Monomial::from_pairs(VARS.iter().copied().zip(e)), c)))
    })
}

/// Series with vanishing constant term and coefficients in `Q[w2]`.
fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((coeff(), coeff()), order).prop_map(move |cs| {
        let w2 = MultiPoly::var(VarId::W(2));
        let coeffs = std::iter::once(MultiPoly::zero())
            .chain(cs.into_iter().map(|(a, b)| &MultiPoly::constant(a) + &w2.scale(&b)))
            .collect();
        TruncatedSeries::new(coeffs, order)
    })
}

fn nondecreasing(len: std::ops::RangeInclusive<usize>, max_step: u64) -> impl Strategy<Value = Vec<u64>> {
    (1u64..=2, prop::collection::vec(0..=max_step, len)).prop_map(|(start, steps)| {
        let mut v = start;
        steps
            .into_iter()
            .map(|s| {
                v += s;
                v
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), v in poly()) {
        let s: HashMap<VarId, MultiPoly> = [(VarId::X, v)].into_iter().collect();
        prop_assert_eq!((&a * &b).substitute(&s), &a.substitute(&s) * &b.substitute(&s));
        prop_assert_eq!((&a + &b).substitute(&s), &a.substitute(&s) + &b.substitute(&s));
    }

    #[test]
    fn leibniz(a in poly(), b in poly()) {
        let d = |p: &MultiPoly| p.derivative(VarId::X);
        prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
    }

    #[test]
    fn json_and_text_round_trips(a in poly()) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&a)).unwrap(), a.clone());
        prop_assert_eq!(parse_poly(&a.pretty()).unwrap(), a);
    }

    #[test]
    fn exp_turns_sums_into_products(a in series(5), b in series(5)) {
        let lhs = a.add(&b).exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversion_round_trip(lead in (1i64..=5, 1i64..=3), rest in series(6)) {
        let mut coeffs = rest.coeffs().to_vec();
        coeffs[1] = MultiPoly::constant(Rational::new(lead.0.into(), lead.1.into()));
        let f = TruncatedSeries::new(coeffs, 6);
        let g = f.reversion().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::t(6));
        prop_assert_eq!(g.compose(&f).unwrap(), TruncatedSeries::t(6));
    }

    #[test]
    fn parking_is_permutation_invariant(u in nondecreasing(1..=5, 2), seed in prop::collection::vec(1u64..=9, 5), rot in 0usize..5) {
        let u = ParkingVector::new(u).unwrap();
        let n = u.len();
        let seq: Vec<u64> = seed[..n].to_vec();
        let mut other = seq.clone();
        other.rotate_left(rot % n);
        other.reverse();
        prop_assert_eq!(is_u_parking(&seq, &u).unwrap(), is_u_parking(&other, &u).unwrap());
    }

    #[test]
    fn parking_counts_grow_with_bounds(u in nondecreasing(1..=4, 2), bump in 0usize..4) {
        let n = u.len();
        let mut bigger = u.clone();
        for v in bigger.iter_mut().skip(bump % n) {
            *v += 1;
        }
        let small = count_parking(n, &ParkingVector::new(u).unwrap()).unwrap();
        let large = count_parking(n, &ParkingVector::new(bigger).unwrap()).unwrap();
        prop_assert!(small <= large);
    }

    #[test]
    fn lattice_constant_is_weighted_parking_sum(z in nondecreasing(1..=4, 3)) {
        let n = z.len();
        let z = ParkingVector::new(z).unwrap();
        let a = PolySequence::try_from_fn(n, zeta_enumerator).unwrap();
        prop_assert_eq!(goncarov_constant_recurrence(&a, &z.to_grid(), n).unwrap(), weighted_pf_enumerator(n, &z).unwrap());
    }

    #[test]
    fn custom_families_match_hand_parking(d in prop::collection::vec(0i64..=3, 4), z in nondecreasing(4..=4, 2)) {
        let table = d.iter().enumerate().map(|(i, &v)| (i + 1, BigInt::from(v))).collect();
        let f = DeckSpec::from_table("random", table).unwrap();
        let p = type_sequence(&f, 4).unwrap();
        prop_assert!(binomial_type_check(&p, 4).unwrap().holds());
        let grid = Grid::from_ints(&z.iter().map(|&v| v as i64).collect::<Vec<_>>()).negate();
        let t = family_goncarov(&f, &grid, 4).unwrap();
        for n in 1..=4 {
            let pv = ParkingVector::new(z[..n].to_vec()).unwrap();
            let c = t[n].subs(VarId::X, &MultiPoly::zero());
            prop_assert_eq!(c, hand_parking_enumerator(&f, &pv).unwrap());
        }
    }

    #[test]
    fn ordered_partitions_on_numeric_grids(z in prop::collection::vec(-4i64..=4, 4)) {
        let grid = Grid::from_ints(&z);
        let p = PolySequence::try_from_fn(4, zeta_enumerator).unwrap();
        for n in 1..=4 {
            prop_assert_eq!(
                goncarov_constant_ordered_partitions(&p, &grid, n).unwrap(),
                goncarov_constant_recurrence(&p, &grid, n).unwrap()
            );
        }
    }

    #[test]
    fn numeric_shift_invariance(z in prop::collection::vec(-3i64..=3, 3), eta in -3i64..=3) {
        let p = PolySequence::try_from_fn(3, zeta_enumerator).unwrap();
        let grid = Grid::from_ints(&z);
        let e = MultiPoly::int(eta);
        let t = goncarov_sequence(&p, &grid, 3).unwrap();
        let s = goncarov_sequence(&p, &grid.shift(&e), 3).unwrap();
        let x_eta = &MultiPoly::x() + &e;
        for n in 0..=3 {
            prop_assert_eq!(s[n].subs(VarId::X, &x_eta), t[n].clone());
        }
    }
}
