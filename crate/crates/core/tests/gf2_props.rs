mod common;

use std::collections::BTreeMap;

use pathsum::{Poly, Var, VarRegistry};
use proptest::prelude::*;

const VARS: usize = 8;

fn registry() -> VarRegistry {
    // mixed kinds so that display covers every prefix
    VarRegistry::new([
        Var::path(1),
        Var::path(2),
        Var::path(3),
        Var::path(4),
        Var::input(1),
        Var::input(2),
        Var::output(1),
        Var::output(2),
    ])
    .unwrap()
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(prop::collection::vec(0..VARS, 0..4), 0..7).prop_map(|terms| {
        let r = registry();
        Poly::from_terms(terms.into_iter().map(|vars| {
            let vars: Vec<Var> = vars.into_iter().map(|i| r.vars()[i]).collect();
            r.monomial(&vars).unwrap()
        }))
    })
}

fn point() -> impl Strategy<Value = u8> {
    any::<u8>()
}

fn assignment(bits: u8) -> BTreeMap<Var, bool> {
    registry()
        .vars()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, (bits >> i) & 1 == 1))
        .collect()
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), s in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p + &p).is_zero());
        prop_assert_eq!(&p * &p, p.clone());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
        prop_assert!((&p * &Poly::zero()).is_zero());
    }

    #[test]
    fn canonical_form_is_order_independent(terms in prop::collection::vec(any::<u64>(), 0..12)) {
        let mask = !0u64 << (64 - VARS);
        let monos: Vec<_> = terms.iter().map(|t| pathsum::Monomial::from_bits(t & mask)).collect();
        let forward = Poly::from_terms(monos.clone());
        let backward = Poly::from_terms(monos.iter().rev().copied());
        let summed = monos.iter().fold(Poly::zero(), |acc, &m| &acc + &Poly::monomial(m));
        prop_assert_eq!(&forward, &backward);
        prop_assert_eq!(&forward, &summed);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), bits in point()) {
        let r = registry();
        let at = assignment(bits);
        let ev = |x: &Poly| x.evaluate(&at, &r).unwrap();
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) ^ ev(&q));
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) & ev(&q));
        let naive = common::eval_naive(&p, &r, &|v| at[&v]);
        prop_assert_eq!(ev(&p), naive);
    }

    #[test]
    fn substitution_composes_with_evaluation(
        p in poly(),
        replacement in prop::collection::vec(poly(), 4),
        bits in point(),
    ) {
        // bind the four parameter variables to polynomials in path variables
        let r = registry();
        let params = &r.vars()[4..];
        let paths_only = |q: &Poly| {
            let strip: BTreeMap<Var, Poly> = params.iter().map(|&v| (v, Poly::one())).collect();
            q.substitute(&strip, &r).unwrap()
        };
        let bindings: BTreeMap<Var, Poly> = params
            .iter()
            .zip(&replacement)
            .map(|(&v, q)| (v, paths_only(q)))
            .collect();
        let at = assignment(bits);
        let substituted = p.substitute(&bindings, &r).unwrap();
        let mut composed = at.clone();
        for (v, q) in &bindings {
            composed.insert(*v, q.evaluate(&at, &r).unwrap());
        }
        prop_assert_eq!(substituted.evaluate(&at, &r).unwrap(), p.evaluate(&composed, &r).unwrap());
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let r = registry();
        let text = r.display(&p).to_string();
        prop_assert_eq!(r.parse_poly(&text).unwrap(), p.clone());
        let xor_text = text.replace('+', "⊕");
        prop_assert_eq!(r.parse_poly(&xor_text).unwrap(), p);
    }
}
