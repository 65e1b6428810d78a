//! Ideals, reduced Gröbner bases, division and ideal arithmetic.

pub(crate) mod engine;

use std::sync::{Arc, OnceLock};

use num_traits::One;

use crate::error::{Error, Result};
use crate::extint::ExtendedInt;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use engine::{Ctx, ModuleOrder, Term, Vector};

/// An ideal given by generators, with a lazily computed reduced basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

/// A reduced Gröbner basis: monic elements sorted by descending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Power(u32),
    Intersection,
}

pub(crate) fn to_vector(f: &Polynomial) -> Vector {
    f.terms().iter().map(|(m, c)| Term { mon: m.clone(), comp: 0, coef: c.clone() }).collect()
}

pub(crate) fn from_vector(ring: &Arc<PolyRing>, v: &[Term]) -> Polynomial {
    Polynomial::from_sorted_terms(ring, v.iter().map(|t| (t.mon.clone(), t.coef.clone())).collect())
}

fn ring_ctx(ring: &PolyRing) -> Ctx {
    Ctx::new(ring.field(), ModuleOrder::Top(ring.order()))
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !PolyRing::same(ring, g.ring()) {
                return Err(Error::MixedRings);
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The monomial prime generated by the variables in `mask`.
    pub fn monomial_prime(ring: &Arc<PolyRing>, mask: u64) -> Self {
        let gens = (0..ring.nvars()).filter(|i| mask & (1 << i) != 0).map(|i| Polynomial::variable(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// All generators are single terms.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_term())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Ideal generated by linear forms (hence prime, possibly zero).
    pub fn is_linear(&self) -> bool {
        self.generators.iter().all(|g| g.terms().iter().all(|(m, _)| m.degree() == 1))
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger_reduced(self))
    }

    pub fn is_improper(&self) -> bool {
        self.groebner_basis().elements.iter().any(|g| g.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        ideal_membership(f, self)
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Minimal monomial generators (for monomial ideals), sorted.
    pub fn minimal_monomials(&self) -> Vec<Monomial> {
        debug_assert!(self.is_monomial());
        minimalize_monomials(self.generators.iter().filter_map(|g| g.leading_monomial().cloned()).collect(), self.ring.order())
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let ctx = ring_ctx(&self.ring);
        let basis: Vec<Vector> = self.elements.iter().map(to_vector).collect();
        from_vector(&self.ring, &ctx.reduce(&to_vector(f), &basis))
    }

    /// Every S-polynomial reduces to zero.
    pub fn passes_s_pair_test(&self) -> bool {
        let ctx = ring_ctx(&self.ring);
        let basis: Vec<Vector> = self.elements.iter().map(to_vector).collect();
        engine::is_groebner(&ctx, &basis)
    }

    /// Leading terms pairwise indivisible and no term divisible by another
    /// element's leading term.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_coefficient().is_some_and(|c| c.is_one())
                && self.elements.iter().enumerate().all(|(j, h)| {
                    i == j || {
                        let l = h.leading_monomial().unwrap();
                        g.terms().iter().all(|(m, _)| !l.divides(m))
                    }
                })
        })
    }
}

/// `f = sum q_i g_i + r`, using the first divisor whose leading term divides.
pub fn divide_with_remainder(f: &Polynomial, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = f.ring();
    for g in divisors {
        if !PolyRing::same(ring, g.ring()) {
            return Err(Error::MixedRings);
        }
        if g.is_zero() {
            return Err(Error::OutOfRange("division by the zero polynomial".into()));
        }
    }
    let ctx = ring_ctx(ring);
    let basis: Vec<Vector> = divisors.iter().map(to_vector).collect();
    let (quotients, rem) = ctx.divide(&to_vector(f), &basis);
    let quotients = quotients.into_iter().map(|q| Polynomial::from_terms(ring, q)).collect();
    Ok((quotients, from_vector(ring, &rem)))
}

/// Reduced Gröbner basis with respect to the ring's order.
pub fn buchberger_reduced(ideal: &Ideal) -> GroebnerBasis {
    let ring = &ideal.ring;
    let ctx = ring_ctx(ring);
    let gens: Vec<Vector> = ideal.generators.iter().map(to_vector).collect();
    let out = engine::buchberger(&ctx, &gens, &[0], true);
    let reduced = engine::interreduce(&ctx, &out.basis);
    let elements = reduced.iter().map(|v| from_vector(ring, v)).collect();
    GroebnerBasis { ring: ring.clone(), elements }
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> bool {
    ideal.groebner_basis().reduce(f).is_zero()
}

pub fn ideal_combine(a: &Ideal, b: &Ideal, op: IdealOp) -> Result<Ideal> {
    if !PolyRing::same(&a.ring, &b.ring) {
        return Err(Error::MixedRings);
    }
    let ring = &a.ring;
    match op {
        IdealOp::Sum => {
            let mut gens = a.generators.clone();
            gens.extend(b.generators.iter().cloned());
            Ideal::new(ring, gens)
        }
        IdealOp::Product => Ideal::new(ring, product_generators(ring, &a.generators, &b.generators)),
        IdealOp::Power(k) => {
            if k == 0 {
                return Err(Error::OutOfRange("ideal power needs k >= 1".into()));
            }
            let mut gens = a.generators.clone();
            for _ in 1..k {
                gens = product_generators(ring, &gens, &a.generators);
            }
            Ideal::new(ring, gens)
        }
        IdealOp::Intersection => Ok(intersect(a, b)),
    }
}

fn product_generators(ring: &Arc<PolyRing>, a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let all_terms = a.iter().chain(b).all(|g| g.is_term());
    let mut gens = Vec::new();
    for f in a {
        for g in b {
            gens.push(f.mul(g));
        }
    }
    if all_terms {
        let mons = gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
        return minimalize_monomials(mons, ring.order()).into_iter().map(|m| Polynomial::monomial(ring, m)).collect();
    }
    dedup_polys(gens)
}

fn dedup_polys(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gens.drain(..) {
        let g = g.monic();
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// Drops monomials divisible by others and sorts descending.
pub(crate) fn minimalize_monomials(mut mons: Vec<Monomial>, order: MonomialOrder) -> Vec<Monomial> {
    mons.sort_by_key(|m| m.degree());
    mons.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in mons {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| order.cmp(b, a));
    kept
}

fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    let ring = &a.ring;
    if a.is_zero() || b.is_zero() {
        return Ideal::zero(ring);
    }
    if a.is_monomial() && b.is_monomial() {
        let mut lcms = Vec::new();
        for f in &a.generators {
            for g in &b.generators {
                lcms.push(f.leading_monomial().unwrap().lcm(g.leading_monomial().unwrap()));
            }
        }
        let gens = minimalize_monomials(lcms, ring.order()).into_iter().map(|m| Polynomial::monomial(ring, m)).collect();
        return Ideal::new(ring, gens).unwrap();
    }
    // Eliminate t from t*a + (1-t)*b in k[t, x] under lex with t largest.
    let n = ring.nvars();
    let t = ring.fresh_name("t");
    let mut names = vec![t];
    names.extend(ring.variables().iter().cloned());
    let big = PolyRing::with_variables(names, ring.field(), MonomialOrder::LEX).unwrap();
    let lift: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
    let tv = Polynomial::variable(&big, 0);
    let one_minus_t = Polynomial::one(&big).sub(&tv);
    let mut gens = Vec::new();
    for f in &a.generators {
        gens.push(f.substitute(&big, &lift).mul(&tv));
    }
    for g in &b.generators {
        gens.push(g.substitute(&big, &lift).mul(&one_minus_t));
    }
    let elim = Ideal::new(&big, gens).unwrap();
    let down: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
    let kept = elim
        .groebner_basis()
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|g| g.substitute(ring, &down))
        .collect();
    let result = Ideal::new(ring, kept).unwrap();
    let reduced = result.groebner_basis().elements().to_vec();
    Ideal::new(ring, reduced).unwrap()
}

/// `dim R/I`: the size of a largest set of variables containing the support
/// of no leading monomial of a Gröbner basis; `-inf` for the unit ideal.
pub fn krull_dimension_ideal(ideal: &Ideal) -> ExtendedInt {
    if ideal.is_improper() {
        return ExtendedInt::NegInfinity;
    }
    let masks: Vec<u64> = ideal.groebner_basis().leading_monomials().iter().map(|m| m.support_mask()).collect();
    ExtendedInt::Finite(max_independent_set(&masks, ideal.ring.nvars()) as i64)
}

/// Largest `|U|` such that no mask is a subset of `U`.
pub(crate) fn max_independent_set(masks: &[u64], nvars: usize) -> usize {
    let full: u64 = if nvars == 64 { u64::MAX } else { (1u64 << nvars) - 1 };
    let mut best = 0;
    // Enumerate complements in order of increasing size via all subsets.
    for u in 0..=full {
        let size = u.count_ones() as usize;
        if size > best && masks.iter().all(|&s| s & !u != 0) {
            best = size;
        }
    }
    best
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
        PolyRing::new(names.iter().map(|s| s.to_string()).collect(), crate::field::CoefficientField::RATIONALS, order).unwrap()
    }

    fn polys(r: &Arc<PolyRing>, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
    }

    /// Oracle for division: re-expand and check the remainder condition.
    fn check_division(f: &Polynomial, divisors: &[Polynomial], q: &[Polynomial], r: &Polynomial) {
        let mut sum = r.clone();
        for (qi, gi) in q.iter().zip(divisors) {
            sum = sum.add(&qi.mul(gi));
        }
        assert_eq!(&sum, f);
        for (m, _) in r.terms() {
            for g in divisors {
                assert!(!g.leading_monomial().unwrap().divides(m));
            }
        }
    }

    #[test]
    fn division_examples() {
        let r = ring(&["x", "y"], MonomialOrder::LEX);
        let x = polys(&r, &["x"]);
        let (q, rem) = divide_with_remainder(&polys(&r, &["x^2"])[0], &x).unwrap();
        assert_eq!(q[0], polys(&r, &["x"])[0]);
        assert!(rem.is_zero());
        let (q, rem) = divide_with_remainder(&polys(&r, &["y"])[0], &x).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, polys(&r, &["y"])[0]);

        let f = polys(&r, &["x^2*y + x*y^2 + y^2"])[0].clone();
        let divisors = polys(&r, &["x*y - 1", "y^2 - 1"]);
        let (q, rem) = divide_with_remainder(&f, &divisors).unwrap();
        check_division(&f, &divisors, &q, &rem);
        assert_eq!(rem, polys(&r, &["x + y + 1"])[0]);
    }

    #[test]
    fn reduced_bases() {
        let r = ring(&["x", "y"], MonomialOrder::GREVLEX);
        let i = Ideal::new(&r, polys(&r, &["x^2*y", "x*y", "y^3"])).unwrap();
        assert_eq!(i.groebner_basis().elements(), polys(&r, &["y^3", "x*y"]).as_slice());
        let p = Ideal::new(&r, polys(&r, &["x^2 - y"])).unwrap();
        assert_eq!(p.groebner_basis().elements(), polys(&r, &["x^2 - y"]).as_slice());
    }

    #[test]
    fn twisted_cubic_lex_basis() {
        let r = ring(&["x", "y", "z"], MonomialOrder::LEX);
        let i = Ideal::new(&r, polys(&r, &["x^2 - y", "x^3 - z"])).unwrap();
        let gb = i.groebner_basis();
        let mut expected = polys(&r, &["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]);
        expected.sort_by(|a, b| r.order().cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        assert_eq!(gb.elements(), expected.as_slice());
        assert!(gb.passes_s_pair_test());
        assert!(gb.is_reduced());
        for g in i.generators() {
            assert!(gb.reduce(g).is_zero());
        }
        assert!(i.contains(&polys(&r, &["y^3 - z^2"])[0]));
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"], MonomialOrder::GREVLEX);
        let x = Ideal::new(&r, polys(&r, &["x"])).unwrap();
        assert!(x.contains(&polys(&r, &["x^2*y"])[0]));
        assert!(!x.contains(&polys(&r, &["y"])[0]));
        let unit = Ideal::new(&r, polys(&r, &["x", "x - 1"])).unwrap();
        assert!(unit.contains(&Polynomial::one(&r)));
        assert!(unit.is_improper());
    }

    #[test]
    fn combinations() {
        let r = ring(&["X", "Y", "Z"], MonomialOrder::GREVLEX);
        let m = Ideal::new(&r, polys(&r, &["X", "Y", "Z"])).unwrap();
        let z = Ideal::new(&r, polys(&r, &["Z"])).unwrap();
        let sq = ideal_combine(&m, &m, IdealOp::Power(2)).unwrap();
        assert_eq!(sq.generators().len(), 6);
        let cap = ideal_combine(&z, &sq, IdealOp::Intersection).unwrap();
        let mut got: Vec<String> = cap.generators().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["X*Z", "Y*Z", "Z^2"]);
        let sum = ideal_combine(&z, &Ideal::zero(&r), IdealOp::Sum).unwrap();
        assert_eq!(sum.generators(), z.generators());
        let xy = Ideal::new(&r, polys(&r, &["X", "Y"])).unwrap();
        let sq2 = ideal_combine(&xy, &xy, IdealOp::Power(2)).unwrap();
        let mut got: Vec<String> = sq2.generators().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["X*Y", "X^2", "Y^2"]);
    }

    #[test]
    fn elimination_intersection_agrees_with_membership() {
        let r = ring(&["x", "y"], MonomialOrder::GREVLEX);
        let a = Ideal::new(&r, polys(&r, &["x - y"])).unwrap();
        let b = Ideal::new(&r, polys(&r, &["x + y", "y^2"])).unwrap();
        let cap = ideal_combine(&a, &b, IdealOp::Intersection).unwrap();
        for g in cap.generators() {
            assert!(a.contains(g) && b.contains(g));
        }
        let prod = ideal_combine(&a, &b, IdealOp::Product).unwrap();
        assert!(cap.contains_ideal(&prod));
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y", "z"], MonomialOrder::GREVLEX);
        assert_eq!(krull_dimension_ideal(&Ideal::zero(&r)), ExtendedInt::Finite(3));
        let m = Ideal::new(&r, polys(&r, &["x", "y", "z"])).unwrap();
        assert_eq!(krull_dimension_ideal(&m), ExtendedInt::Finite(0));
        let i = Ideal::new(&r, polys(&r, &["x*y", "x*z"])).unwrap();
        assert_eq!(krull_dimension_ideal(&i), ExtendedInt::Finite(2));
        assert_eq!(krull_dimension_ideal(&Ideal::unit(&r)), ExtendedInt::NegInfinity);
    }
}
