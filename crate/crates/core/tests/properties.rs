//! Property suites: ordering axioms, ring axioms, leading-term
//! multiplicativity, S-polynomial antisymmetry, derivation commutativity,
//! division correctness, and flip symmetry.

use diffjets_core::groebner::{reduce, s_polynomial};
use diffjets_core::jets::{derive, jet_generators_expansion, Direction, TruncatedDiffRing};
use diffjets_core::tri::{flips, placing_triangulation, GridConfig};
use diffjets_core::{Coef, ExpVec, MonomialOrdering, Polynomial, VarSpace};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::cmp::Ordering;

fn random_expvec(rng: &mut StdRng, len: usize, max_exp: u16) -> ExpVec {
    ExpVec(std::iter::repeat_with(|| rng.gen_range(0..=max_exp)).take(len).collect())
}

#[test]
fn compare_is_a_total_order_on_ten_thousand_pairs() {
    let mut rng = StdRng::seed_from_u64(42);
    let chain = MonomialOrdering::degrevlex(VarSpace::chain(4));
    let grid_space = VarSpace::grid(1, 2);
    let weighted =
        MonomialOrdering::weighted_revlex(grid_space, vec![9, 5, 3, 2, 1, 7]).unwrap();
    for _ in 0..10_000 {
        for (ord, len) in [(&chain, 5usize), (&weighted, 6)] {
            let a = random_expvec(&mut rng, len, 4);
            let b = random_expvec(&mut rng, len, 4);
            let c = random_expvec(&mut rng, len, 4);
            // antisymmetry
            assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
            // totality: Equal only for identical vectors
            if ord.compare(&a, &b) == Ordering::Equal {
                assert_eq!(a, b);
            }
            // transitivity
            if ord.compare(&a, &b) != Ordering::Greater && ord.compare(&b, &c) != Ordering::Greater
            {
                assert_ne!(ord.compare(&a, &c), Ordering::Greater);
            }
            // multiplicativity
            if ord.compare(&a, &b) == Ordering::Less {
                assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), Ordering::Less);
            }
        }
    }
}

#[test]
fn derivative_raises_monomials_admissibility() {
    // replacing one occurrence of the smallest variable by its successor
    // yields a strictly larger monomial under degrevlex
    let mut rng = StdRng::seed_from_u64(7);
    let n = 5usize;
    let ord = MonomialOrdering::degrevlex(VarSpace::chain(n));
    for _ in 0..2_000 {
        let e = random_expvec(&mut rng, n + 1, 3);
        if e.is_one() {
            continue;
        }
        let m = e.support().next().unwrap();
        if m + 1 > n {
            continue;
        }
        let mut raised = e.clone();
        raised.0[m] -= 1;
        raised.0[m + 1] += 1;
        assert_eq!(ord.compare(&raised, &e), Ordering::Greater);
    }
}

fn arb_poly(vars: VarSpace, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let len = vars.size();
    prop::collection::vec(
        (prop::collection::vec(0u16..3, len), -4i64..=4),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            p.add_term(ExpVec(e.into_iter().collect()), Coef::from(BigInt::from(c)));
        }
        p
    })
}

fn arb_homogeneous(vars: VarSpace, degree: u32) -> impl Strategy<Value = Polynomial> {
    let len = vars.size();
    prop::collection::vec(
        (prop::collection::vec(0usize..len, degree as usize), 1i64..=5),
        1..=4,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(vars);
        for (positions, c) in terms {
            let mut e = ExpVec::zero(len);
            for v in positions {
                e.0[v] += 1;
            }
            p.add_term(e, Coef::from(BigInt::from(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(
        a in arb_poly(VarSpace::chain(3), 4),
        b in arb_poly(VarSpace::chain(3), 4),
        c in arb_poly(VarSpace::chain(3), 4),
    ) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let dist = a.mul(&b.add(&c).unwrap()).unwrap();
        let expand = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&dist, &expand);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn leading_terms_multiply(
        a in arb_homogeneous(VarSpace::chain(3), 3),
        b in arb_homogeneous(VarSpace::chain(3), 3),
    ) {
        // coefficients are positive, so no cancellation in the product
        let ord = MonomialOrdering::degrevlex(VarSpace::chain(3));
        let prod = a.mul(&b).unwrap();
        let lm = prod.leading_monomial(&ord).unwrap();
        let expect = a.leading_monomial(&ord).unwrap().mul(&b.leading_monomial(&ord).unwrap());
        prop_assert_eq!(lm, expect);
    }

    #[test]
    fn s_polynomials_antisymmetric(
        a in arb_homogeneous(VarSpace::chain(2), 2),
        b in arb_homogeneous(VarSpace::chain(2), 2),
    ) {
        let ord = MonomialOrdering::degrevlex(VarSpace::chain(2));
        let s1 = s_polynomial(&a, &b, &ord).unwrap();
        let s2 = s_polynomial(&b, &a, &ord).unwrap();
        prop_assert_eq!(s1, s2.neg());
    }

    #[test]
    fn grid_derivations_commute(q in arb_poly(VarSpace::grid(2, 2), 5)) {
        let ring = TruncatedDiffRing::grid(2, 2);
        let st = derive(&derive(&q, &ring, Direction::Ds).unwrap(), &ring, Direction::Dt).unwrap();
        let ts = derive(&derive(&q, &ring, Direction::Dt).unwrap(), &ring, Direction::Ds).unwrap();
        prop_assert_eq!(st, ts);
    }

    #[test]
    fn division_identity_and_irreducibility(f in arb_poly(VarSpace::chain(2), 5)) {
        let vars = VarSpace::chain(2);
        let ord = MonomialOrdering::degrevlex(vars);
        let gens = jet_generators_expansion(2, vars).generators;
        let result = reduce(&f, &gens, &ord).unwrap();
        let mut recomposed = result.remainder.clone();
        for (i, q) in &result.quotients {
            recomposed = recomposed.add(&q.mul(&gens[*i]).unwrap()).unwrap();
        }
        prop_assert_eq!(recomposed, f);
        for (e, _) in result.remainder.terms() {
            for g in &gens {
                prop_assert!(!g.leading_monomial(&ord).unwrap().divides(e));
            }
        }
    }

    #[test]
    fn random_flip_walks_stay_valid(steps in prop::collection::vec(0usize..8, 0..6)) {
        let mut t = placing_triangulation(GridConfig::new(2, 2)).unwrap();
        for s in steps {
            let neighbors = flips(&t);
            prop_assert!(!neighbors.is_empty());
            let next = neighbors[s % neighbors.len()].clone();
            // flip is an involution
            prop_assert!(flips(&next).contains(&t));
            prop_assert!(next.is_unimodular());
            t = next;
        }
        // revalidate through the strict constructor
        let rebuilt = diffjets_core::tri::Triangulation::new(t.config, t.triangles_usize());
        prop_assert!(rebuilt.is_ok());
    }
}
