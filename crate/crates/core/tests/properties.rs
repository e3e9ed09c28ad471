mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::*;
use semisym::diag::{rank_mod_p, smith_normal_form};
use semisym::{
    BuiltinKind, Character, CharacterSequence, ChiVector, Eisenstein, ExactMatrix, MultiIndex, Permutation, PermutationGroup, RingDescriptor,
    Scalar, SemiSymmetricAlgebra, Zmod,
};

fn permutation(d: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=d).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Permutation::from_one_line(&w).unwrap())
}

fn index(n: usize, d: usize) -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(1..=n, d).prop_map(MultiIndex::new)
}

fn kind() -> impl Strategy<Value = BuiltinKind> {
    prop_oneof![
        Just(BuiltinKind::Tensor),
        Just(BuiltinKind::Symmetric),
        Just(BuiltinKind::Exterior),
        Just(BuiltinKind::Truncated(2)),
    ]
}

fn zmod(m: u64) -> impl Strategy<Value = Zmod> {
    (0..m as i128).prop_map(move |v| Zmod::new(v, m))
}

fn eisenstein() -> impl Strategy<Value = Eisenstein> {
    (-20i64..=20, -20i64..=20).prop_map(|(a, b)| Eisenstein::new(a, b))
}

fn algebra(kind: BuiltinKind, n: usize) -> SemiSymmetricAlgebra<Q> {
    let seq = CharacterSequence::builtin(kind, RingDescriptor::Rational, 6).unwrap();
    SemiSymmetricAlgebra::new(Arc::new(seq), n).unwrap()
}

fn element(alg: &SemiSymmetricAlgebra<Q>, d: usize, coeffs: &[i64]) -> ChiVector<Q> {
    let power = alg.power(d).unwrap();
    let terms = power.basis().iter().zip(coeffs.iter().cycle()).map(|(j, &c)| (j.clone(), q(c)));
    power.element(terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_a_left_action((s, t, i) in (1usize..6).prop_flat_map(|d| (permutation(d), permutation(d), index(3, d)))) {
        prop_assert_eq!(i.act_by(&t).act_by(&s), i.act_by(&s.compose(&t).unwrap()));
        prop_assert_eq!(i.act_by(&s).act_by(&s.inverse()), i.clone());
        let word: Vec<usize> = s.one_line().iter().map(|x| x - 1).collect();
        let moved = i.act_by(&s);
        let expected = act(&word, i.entries());
        prop_assert_eq!(moved.entries(), expected.as_slice());
    }

    #[test]
    fn sign_is_multiplicative(s in permutation(5), t in permutation(5)) {
        prop_assert_eq!(s.compose(&t).unwrap().sign(), s.sign() * t.sign());
        prop_assert_eq!(s.sign(), sign(&s.one_line()));
        prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(s in permutation(6)) {
        let text = s.to_string();
        prop_assert_eq!(Permutation::parse(&text, 6).unwrap(), s);
    }

    #[test]
    fn residues_form_a_commutative_ring(a in zmod(15), b in zmod(15), c in zmod(15)) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() - a.clone(), Zmod::zero());
        if let Some(inv) = a.try_inverse() {
            prop_assert!((a * inv).is_one());
        }
    }

    #[test]
    fn eisenstein_integers_form_a_commutative_ring(a in eisenstein(), b in eisenstein(), c in eisenstein()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.clone() * a.conjugate(), Eisenstein::new(a.norm(), 0));
        prop_assert_eq!(a.is_unit(), a.norm().is_one());
    }

    #[test]
    fn multiplication_is_associative(
        kind in kind(),
        n in 1usize..4,
        (p, r, s) in (0usize..3, 0usize..3, 0usize..3),
        coeffs in prop::collection::vec(-3i64..=3, 1..6),
    ) {
        let alg = algebra(kind, n);
        let a = element(&alg, p, &coeffs);
        let b = element(&alg, r, &coeffs[1..]);
        let c = element(&alg, s, &coeffs.iter().rev().copied().collect::<Vec<_>>());
        let lhs = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
        let rhs = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(terms_of(&lhs), terms_of(&rhs));
        let one: ChiVector<Q> = alg.scalar(q(1));
        prop_assert_eq!(terms_of(&alg.multiply(&one, &a).unwrap()), terms_of(&a));
    }

    #[test]
    fn projection_is_semi_symmetric(kind in kind(), (d, i) in (1usize..5).prop_flat_map(|d| (Just(d), index(3, d))), pick in any::<prop::sample::Index>()) {
        let alg = algebra(kind, 3);
        let power = alg.power(d).unwrap();
        let chi = power.character();
        let s = pick.get(chi.group().elements()).clone();
        // e_{σi} ≡ χ⁻¹(σ)·e_i
        let moved = power.project_index(&i.act_by(&s)).unwrap();
        let base = power.project_index(&i).unwrap();
        let factor = chi.inverse().value(&s).unwrap().clone();
        match (moved, base) {
            (None, None) => {}
            (Some((m1, c1)), Some((m2, c2))) => {
                prop_assert_eq!(m1, m2);
                prop_assert_eq!(c1, factor * c2);
            }
            (a, b) => prop_assert!(false, "one side vanishes: {:?} vs {:?}", a, b),
        }
        prop_assert_eq!(power.project_index(&i).unwrap().map(|(m, c)| (m.into_entries(), c)), project_builtin(kind, i.entries()).map(|(m, c)| (m, q(c))));
    }

    #[test]
    fn inverting_a_character_twice_is_the_identity(values in prop::collection::vec(prop_oneof![Just(1i64), Just(4), Just(11), Just(14)], 2)) {
        let ring = RingDescriptor::Modular(15);
        let group = Arc::new(PermutationGroup::closure(4, vec![
            Permutation::parse("(1 2)(3 4)", 4).unwrap(),
            Permutation::parse("(1 3)(2 4)", 4).unwrap(),
        ]).unwrap());
        let gens: Vec<Zmod> = values.iter().map(|&v| Zmod::from_i64(v, &ring)).collect();
        let chi = Character::from_generators(group.clone(), &gens, ring).unwrap();
        prop_assert!(chi.inverse().inverse() == chi);
        for (k, s) in group.elements().iter().enumerate() {
            prop_assert!((chi.value_at(k).clone() * chi.inverse().value(s).unwrap().clone()).is_one());
            for t in group.elements() {
                let st = s.compose(t).unwrap();
                prop_assert_eq!(chi.value(&st).unwrap().clone(), chi.value(s).unwrap().clone() * chi.value(t).unwrap().clone());
            }
        }
    }

    #[test]
    fn restriction_agrees_with_values(d in 2usize..5) {
        let full = Arc::new(PermutationGroup::symmetric(d).unwrap());
        let gens = PermutationGroup::symmetric(d - 1).unwrap().elements().iter().map(|s| s.extend(d)).collect();
        let sub = Arc::new(PermutationGroup::closure(d, gens).unwrap());
        let sign = Character::<Q>::signature(full, RingDescriptor::Rational);
        let restricted = sign.restrict(&sub).unwrap();
        for s in sub.elements() {
            prop_assert_eq!(restricted.value(s).unwrap().clone(), q(s.sign()));
        }
    }

    #[test]
    fn smith_form_matches_ranks(rows in 1usize..7, cols in 1usize..7, data in prop::collection::vec(-6i64..=6, 36)) {
        let entries: Vec<Vec<i64>> = (0..rows).map(|r| data[r * cols..(r + 1) * cols].to_vec()).collect();
        let m = ExactMatrix::from_rows(entries.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap();
        let snf = smith_normal_form(&m);
        let factors = &snf.invariant_factors;
        prop_assert_eq!(snf.rank(), rank_rational(&entries));
        for w in factors.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        for p in [2u64, 3, 5, 7] {
            let over_p = factors.iter().filter(|f| !f.is_zero() && !(*f % p).is_zero()).count();
            prop_assert_eq!(rank_mod_p(&m, p).unwrap().rank, over_p);
            prop_assert_eq!(over_p, rank_mod(&entries, p as i64));
        }
    }

    #[test]
    fn decomposables_are_multilinear(kind in kind(), n in 1usize..4, d in 1usize..4, data in prop::collection::vec(-4i64..=4, 12), c in -3i64..=3, slot in 0usize..3) {
        let alg = algebra(kind, n);
        let xs: Vec<Vec<Q>> = (0..d).map(|t| (0..n).map(|l| q(data[t * n + l])).collect()).collect();
        let slot = slot % d;
        let mut scaled = xs.clone();
        scaled[slot] = scaled[slot].iter().map(|x| x * q(c)).collect();
        let a: ChiVector<Q> = alg.decomposable(&xs).unwrap();
        let b: ChiVector<Q> = alg.decomposable(&scaled).unwrap();
        prop_assert_eq!(terms_of(&b), terms_of(&a.scale(&q(c))));
    }
}
