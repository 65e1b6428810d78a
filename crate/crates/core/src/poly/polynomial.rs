use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};
use crate::field::{Scalar, CoefficientField};

/// Exact polynomial in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients. The empty term list is zero.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Scalar::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::from_terms(ring, vec![(ring.one_monomial(), c)])
    }

    pub fn variable(ring: &Arc<PolyRing>, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::variable(ring.nvars(), i), Scalar::one())] }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        Polynomial { ring: ring.clone(), terms: vec![(m, Scalar::one())] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// reducing coefficients into the ring's field.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        let field = ring.field();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = field.add(&field.zero(), &c);
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        let p = Polynomial { ring: ring.clone(), terms: out };
        debug_assert!(p.is_canonical());
        p
    }

    /// Takes terms already in canonical order; checked in debug builds.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Self {
        let p = Polynomial { ring: ring.clone(), terms };
        debug_assert!(p.is_canonical());
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Scalar::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Every term is a monomial times a scalar and there is at most one term.
    pub fn is_term(&self) -> bool {
        self.terms.len() <= 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    fn field(&self) -> CoefficientField {
        self.ring.field()
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
        })
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let adjust = |c: &Scalar| if negate_other { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), adjust(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), adjust(c))));
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    /// Panics on mixed rings; use [`Polynomial::arith`] for a checked variant.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert!(PolyRing::same(&self.ring, &other.ring), "mixed rings");
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert!(PolyRing::same(&self.ring, &other.ring), "mixed rings");
        self.merge(other, true)
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(PolyRing::same(&self.ring, &other.ring), "mixed rings");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        let mut acc = Polynomial::zero(&self.ring);
        // Multiply by the shorter operand term-wise; each partial product is sorted.
        let (short, long) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (m, c) in &short.terms {
            let part: Vec<_> = long.terms.iter().map(|(n, d)| (m.mul(n), field.mul(c, d))).collect();
            acc = acc.add(&Polynomial::from_sorted_terms(&self.ring, part));
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, d)| (m.clone(), field.mul(c, d)))
            .filter(|(_, e)| !e.is_zero())
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// Multiplication by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(n, d)| (m.mul(n), field.mul(c, d)))
            .filter(|(_, e)| !e.is_zero())
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc)),
        }
    }

    /// Variables occurring in some term, as a bitmask.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }

    /// Re-expresses the polynomial in `target` by sending variable `i` to
    /// `images[i]` (a variable index of `target`, or `None` for the value 1).
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Option<usize>]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    if let Some(j) = images[i] {
                        e[j] += x;
                    }
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    pub(crate) fn is_canonical(&self) -> bool {
        let order = self.ring.order();
        let n = self.ring.nvars();
        self.terms.iter().all(|(m, c)| !c.is_zero() && m.nvars() == n)
            && self.terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = format_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.variables()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.variables()[i], e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::rational(&["x", "y"]);
        let f = p(&r, "x+y").mul(&p(&r, "x-y"));
        assert_eq!(f, p(&r, "x^2 - y^2"));
        assert_eq!(f.to_string(), "x^2 - y^2");
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = PolyRing::new(
            vec!["x".into(), "y".into()],
            CoefficientField::prime(2).unwrap(),
            crate::poly::MonomialOrder::GREVLEX,
        )
        .unwrap();
        assert_eq!(p(&r, "x+y").pow(2), p(&r, "x^2+y^2"));
    }

    #[test]
    fn additive_inverse_and_mixed_rings() {
        let r = PolyRing::rational(&["x", "y"]);
        let f = p(&r, "3*x*y - 2*y + 7");
        let minus = Polynomial::zero(&r).sub(&f);
        assert!(f.add(&minus).is_zero());
        let s = PolyRing::rational(&["a"]);
        assert_eq!(f.arith(&Polynomial::one(&s), ArithOp::Mul), Err(Error::MixedRings));
    }

    #[test]
    fn substitution_sets_missing_variables_to_one() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let s = r.subring(0b101);
        let f = p(&r, "x*y + y^2*z");
        assert_eq!(f.substitute(&s, &[Some(0), None, Some(1)]), p(&s, "x + z"));
    }
}
