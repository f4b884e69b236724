mod common;

use common::*;
use lqsdepth::ideal::minimize;
use lqsdepth::{IdealOutcome, Monomial, MonomialIdeal};
use proptest::prelude::*;

fn box_for(i: &MonomialIdeal, extra: &[&Monomial]) -> Vec<u32> {
    let mut b = i.exponent_caps();
    for e in extra {
        for (j, x) in e.exps().iter().enumerate() {
            b[j] = b[j].max(*x);
        }
    }
    b.iter().map(|x| x + 1).collect()
}

proptest! {
    #[test]
    fn minimize_is_idempotent_and_order_free(
        mut gens in prop::collection::vec(non_unit(3, 3), 1..7),
        seed in any::<u64>(),
    ) {
        let once = minimize(gens.clone());
        prop_assert_eq!(&minimize(once.clone()), &once);
        let k = (seed as usize) % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        prop_assert_eq!(&minimize(gens.clone()), &once);
        for g in &gens {
            prop_assert!(once.iter().any(|k| k.divides(g).unwrap()));
        }
        for (a, b) in once.iter().zip(once.iter().skip(1)) {
            prop_assert!(!a.divides(b).unwrap() && !b.divides(a).unwrap());
        }
    }

    #[test]
    fn membership_matches_naive(i in ideal(4, 5, 3)) {
        let bound = box_for(&i, &[]);
        for a in grid(&bound) {
            let naive = in_ideal(i.gens(), &a);
            prop_assert_eq!(i.contains(&Monomial::new(a)).unwrap(), naive);
        }
    }

    #[test]
    fn colon_matches_membership_definition(
        (i, u) in (1usize..=4).prop_flat_map(|n| (ideal_in(n, 4, 3), monomial(n, 3)))
    ) {
        let colon = i.colon(&u).unwrap();
        let bound = box_for(&i, &[&u]);
        for a in grid(&bound) {
            let au: Vec<u32> = a.iter().zip(u.exps()).map(|(x, y)| x + y).collect();
            let expected = in_ideal(i.gens(), &au);
            let got = match &colon {
                IdealOutcome::Unit => true,
                IdealOutcome::Proper(c) => c.contains(&Monomial::new(a.clone())).unwrap(),
            };
            prop_assert_eq!(got, expected, "a = {:?}", a);
        }
        if let IdealOutcome::Proper(c) = &colon {
            prop_assert!(c.contains_ideal(&i).unwrap());
        }
    }

    #[test]
    fn iterated_colon((i, u, v) in (1usize..=4).prop_flat_map(|n| {
        (ideal_in(n, 4, 3), monomial(n, 2), monomial(n, 2))
    })) {
        let uv = u.mul(&v).unwrap();
        let direct = i.colon(&uv).unwrap();
        let iterated = match i.colon(&u).unwrap() {
            IdealOutcome::Unit => IdealOutcome::Unit,
            IdealOutcome::Proper(c) => c.colon(&v).unwrap(),
        };
        prop_assert_eq!(direct, iterated);
    }

    #[test]
    fn adding_monomials((i, extra) in (1usize..=4).prop_flat_map(|n| {
        (ideal_in(n, 4, 3), prop::collection::vec(non_unit(n, 3), 1..3))
    })) {
        let sum = i.add_monomials(&extra).unwrap().proper().unwrap();
        let mut all = i.gens().to_vec();
        all.extend(extra.iter().cloned());
        let refs: Vec<&Monomial> = extra.iter().collect();
        for a in grid(&box_for(&i, &refs)) {
            prop_assert_eq!(sum.contains(&Monomial::new(a.clone())).unwrap(), in_ideal(&all, &a));
        }
    }

    #[test]
    fn adding_a_variable_then_restricting(i in ideal(4, 4, 2), j in 0usize..4) {
        let j = j % i.n();
        let with = i.add_variable(j).unwrap();
        prop_assert!(with.contains(&Monomial::var(i.n(), j)).unwrap());
        prop_assert!(with.contains_ideal(&i).unwrap());
        for g in with.gens() {
            prop_assert!(g == &Monomial::var(i.n(), j) || g.exp(j) == 0);
        }
    }
}

#[test]
fn unit_and_empty_are_rejected() {
    assert!(MonomialIdeal::new(2, vec![]).is_err());
    assert!(MonomialIdeal::new(2, vec![m(&[0, 0])]).is_err());
    assert!(
        MonomialIdeal::from_generators(2, vec![m(&[0, 0]), m(&[1, 0])])
            .unwrap()
            .is_unit()
    );
    let i = MonomialIdeal::new(2, vec![m(&[1, 0])]).unwrap();
    assert!(i.colon(&m(&[2, 1])).unwrap().is_unit());
    assert!(i.colon(&m(&[1, 0, 0])).is_err());
}
