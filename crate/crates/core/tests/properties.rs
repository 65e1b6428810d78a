use std::cmp::Ordering;
use std::sync::Arc;

use cmdefect::groebner::{ideal_combine, ideal_membership, krull_dimension_ideal, Ideal, IdealOp};
use cmdefect::invariants::{module_depth_graded, module_dimension};
use cmdefect::poly::{parse_polynomial, Monomial, MonomialOrder, PolyRing, Polynomial};
use cmdefect::resolution::{hilbert_series, projective_dimension, PresentedModule};
use cmdefect::{CoefficientField, ExtendedInt, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 3] = [MonomialOrder::LEX, MonomialOrder::GRLEX, MonomialOrder::GREVLEX];

fn ring3(field: CoefficientField, order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(vec!["x".into(), "y".into(), "z".into()], field, order).unwrap()
}

fn monomial(nvars: usize, max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, nvars).prop_map(|e| Monomial::from_exponents(&e))
}

fn terms(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Monomial, i64, i64)>> {
    prop::collection::vec((monomial(nvars, max_exp), -6i64..=6, 1i64..=3), 0..=max_terms)
}

fn build(ring: &Arc<PolyRing>, t: &[(Monomial, i64, i64)]) -> Polynomial {
    let terms = t
        .iter()
        .map(|(m, a, b)| (m.clone(), Scalar::new(BigInt::from(*a), BigInt::from(*b))))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn integral(ring: &Arc<PolyRing>, t: &[(Monomial, i64, i64)]) -> Polynomial {
    let terms = t.iter().map(|(m, a, _)| (m.clone(), Scalar::from_integer(BigInt::from(*a)))).collect();
    Polynomial::from_terms(ring, terms)
}

fn monomial_ideal(ring: &Arc<PolyRing>, mons: &[Monomial]) -> Ideal {
    let gens = mons.iter().filter(|m| !m.is_one()).map(|m| Polynomial::monomial(ring, m.clone())).collect();
    Ideal::new(ring, gens).unwrap()
}

fn is_canonical(f: &Polynomial) -> bool {
    let order = f.ring().order();
    f.terms().windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
        && f.terms().iter().all(|(_, c)| *c != Scalar::from_integer(BigInt::from(0)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in terms(3, 3, 5), b in terms(3, 3, 5), c in terms(3, 3, 5), o in 0usize..3) {
        let r = ring3(CoefficientField::RATIONALS, ORDERS[o]);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert!(is_canonical(&f) && is_canonical(&f.mul(&g)) && is_canonical(&f.sub(&g)));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&Polynomial::one(&r)), f.clone());
    }

    #[test]
    fn prime_field_axioms(a in terms(3, 2, 4), b in terms(3, 2, 4), p in prop::sample::select(vec![2u32, 3, 7, 101, 65521])) {
        let r = ring3(CoefficientField::prime(p).unwrap(), MonomialOrder::GREVLEX);
        let (f, g) = (integral(&r, &a), integral(&r, &b));
        prop_assert!(is_canonical(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.scale(&Scalar::from_integer(BigInt::from(p))).is_zero());
        prop_assert!(f.terms().iter().all(|(_, c)| c.is_integer() && *c.numer() >= BigInt::from(0) && *c.numer() < BigInt::from(p)));
    }

    #[test]
    fn order_axioms(a in monomial(4, 4), b in monomial(4, 4), c in monomial(4, 4), o in 0usize..3) {
        let ord = ORDERS[o];
        let ab = ord.cmp(&a, &b);
        prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
            prop_assert!(ord.cmp(&a, &c) != Ordering::Greater);
        }
        prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert!(ord.cmp(&Monomial::one(4), &a) != Ordering::Greater);
        if a.divides(&b) {
            prop_assert!(ab != Ordering::Greater);
        }
    }

    #[test]
    fn parse_print_roundtrip(a in terms(3, 4, 6), o in 0usize..3) {
        let r = ring3(CoefficientField::RATIONALS, ORDERS[o]);
        let f = integral(&r, &a);
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text, &r).unwrap(), f);
    }

    #[test]
    fn prime_field_roundtrip(a in terms(3, 3, 5)) {
        let r = ring3(CoefficientField::prime(31).unwrap(), MonomialOrder::GREVLEX);
        let f = integral(&r, &a);
        prop_assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reduced_basis_is_unique(gens in prop::collection::vec(terms(3, 2, 3), 1..=3), o in 0usize..3) {
        let r = ring3(CoefficientField::RATIONALS, ORDERS[o]);
        let polys: Vec<Polynomial> = gens.iter().map(|t| integral(&r, t)).filter(|f| !f.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let a = Ideal::new(&r, polys.clone()).unwrap();
        let gb = a.groebner_basis();
        prop_assert!(gb.passes_s_pair_test() && gb.is_reduced());
        for g in &polys {
            prop_assert!(gb.reduce(g).is_zero());
        }
        let mut shuffled: Vec<Polynomial> = polys.iter().rev().cloned().collect();
        let x = Polynomial::variable(&r, 0);
        shuffled.push(polys[0].mul(&x).add(&polys[polys.len() - 1]));
        let b = Ideal::new(&r, shuffled).unwrap();
        prop_assert_eq!(gb.elements(), b.groebner_basis().elements());
    }

    #[test]
    fn monomial_intersection_membership(
        i in prop::collection::vec(monomial(3, 3), 1..=3),
        j in prop::collection::vec(monomial(3, 3), 1..=3),
        probes in prop::collection::vec(monomial(3, 5), 1..=8),
    ) {
        let r = ring3(CoefficientField::RATIONALS, MonomialOrder::GREVLEX);
        let (a, b) = (monomial_ideal(&r, &i), monomial_ideal(&r, &j));
        let meet = ideal_combine(&a, &b, IdealOp::Intersection).unwrap();
        for m in probes {
            let f = Polynomial::monomial(&r, m);
            prop_assert_eq!(ideal_membership(&f, &meet), ideal_membership(&f, &a) && ideal_membership(&f, &b));
        }
    }

    #[test]
    fn binomial_intersection_membership(
        i in prop::collection::vec((monomial(3, 2), monomial(3, 2)), 1..=2),
        j in prop::collection::vec((monomial(3, 2), monomial(3, 2)), 1..=2),
        probes in prop::collection::vec(terms(3, 3, 3), 1..=4),
    ) {
        let r = ring3(CoefficientField::RATIONALS, MonomialOrder::GREVLEX);
        let binomials = |v: &[(Monomial, Monomial)]| -> Vec<Polynomial> {
            v.iter()
                .map(|(p, q)| Polynomial::monomial(&r, p.clone()).sub(&Polynomial::monomial(&r, q.clone())))
                .filter(|f| !f.is_zero())
                .collect()
        };
        let (gi, gj) = (binomials(&i), binomials(&j));
        prop_assume!(!gi.is_empty() && !gj.is_empty());
        let (a, b) = (Ideal::new(&r, gi.clone()).unwrap(), Ideal::new(&r, gj.clone()).unwrap());
        let meet = ideal_combine(&a, &b, IdealOp::Intersection).unwrap();
        for g in meet.generators() {
            prop_assert!(ideal_membership(g, &a) && ideal_membership(g, &b));
        }
        for (p, q) in gi.iter().zip(gj.iter()) {
            prop_assert!(ideal_membership(&p.mul(q), &meet));
        }
        for t in probes {
            let f = integral(&r, &t);
            let in_both = ideal_membership(&f, &a) && ideal_membership(&f, &b);
            prop_assert_eq!(ideal_membership(&f, &meet), in_both);
            let g = f.mul(&gi[0]).mul(&gj[0]);
            prop_assert!(ideal_membership(&g, &meet));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dimension_matches_pole_order(n in 1usize..=4, seeds in prop::collection::vec(prop::collection::vec(0u32..=3, 4), 1..=5)) {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let r = PolyRing::new(names, CoefficientField::RATIONALS, MonomialOrder::GREVLEX).unwrap();
        let mons: Vec<Monomial> = seeds.iter().map(|e| Monomial::from_exponents(&e[..n])).collect();
        let ideal = monomial_ideal(&r, &mons);
        prop_assume!(!ideal.is_zero());
        let m = PresentedModule::cyclic(&ideal).unwrap();
        let dim = krull_dimension_ideal(&ideal);
        prop_assert_eq!(hilbert_series(&m).pole_order(), dim);
        prop_assert_eq!(module_dimension(&m), dim);
        let res = m.resolution();
        prop_assert!(res.is_complex() && res.has_no_unit_entries());
        let pd = projective_dimension(&m);
        prop_assert!(pd <= ExtendedInt::Finite(n as i64));
        if let (ExtendedInt::Finite(pd), ExtendedInt::Finite(depth)) = (pd, module_depth_graded(&m)) {
            prop_assert_eq!(pd + depth, n as i64);
        }
    }
}
