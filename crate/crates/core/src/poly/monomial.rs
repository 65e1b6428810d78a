use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Dense exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bitmask of the occurring variables (`nvars <= 64`).
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |acc, i| acc | (1 << i))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum OrderKind {
    Lex,
    GrLex,
    #[default]
    GRevLex,
}

/// How a monomial order is extended to free modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum ModuleExtension {
    #[default]
    TermOverPosition,
    PositionOverTerm,
    Schreyer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub module_extension: ModuleExtension,
}

impl MonomialOrder {
    pub const GREVLEX: MonomialOrder = MonomialOrder {
        kind: OrderKind::GRevLex,
        module_extension: ModuleExtension::TermOverPosition,
    };
    pub const LEX: MonomialOrder = MonomialOrder {
        kind: OrderKind::Lex,
        module_extension: ModuleExtension::TermOverPosition,
    };
    pub const GRLEX: MonomialOrder = MonomialOrder {
        kind: OrderKind::GrLex,
        module_extension: ModuleExtension::TermOverPosition,
    };

    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, module_extension: ModuleExtension::TermOverPosition }
    }

    /// Compares two monomials of equal length.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_exponents(self.kind, a.exponents(), b.exponents())
    }

    /// Compares `a * sa` with `b * sb` without allocating the products.
    #[inline]
    pub(crate) fn cmp_shifted(&self, a: &Monomial, sa: &Monomial, b: &Monomial, sb: &Monomial) -> Ordering {
        let x = a.exponents().iter().zip(sa.exponents()).map(|(p, q)| p + q);
        let y = b.exponents().iter().zip(sb.exponents()).map(|(p, q)| p + q);
        match self.kind {
            OrderKind::Lex => lex(x, y),
            OrderKind::GrLex => {
                let (da, db) = (a.degree() + sa.degree(), b.degree() + sb.degree());
                da.cmp(&db).then_with(|| lex(x, y))
            }
            OrderKind::GRevLex => {
                let (da, db) = (a.degree() + sa.degree(), b.degree() + sb.degree());
                da.cmp(&db).then_with(|| revlex(x.rev(), y.rev()))
            }
        }
    }
}

#[inline]
fn lex(x: impl Iterator<Item = u32>, y: impl Iterator<Item = u32>) -> Ordering {
    for (p, q) in x.zip(y) {
        match p.cmp(&q) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

// Scanning from the last variable: the smaller exponent wins.
#[inline]
fn revlex(x: impl Iterator<Item = u32>, y: impl Iterator<Item = u32>) -> Ordering {
    for (p, q) in x.zip(y) {
        match p.cmp(&q) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[inline]
fn cmp_exponents(kind: OrderKind, a: &[u32], b: &[u32]) -> Ordering {
    match kind {
        OrderKind::Lex => lex(a.iter().copied(), b.iter().copied()),
        OrderKind::GrLex => {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| lex(a.iter().copied(), b.iter().copied()))
        }
        OrderKind::GRevLex => {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db)
                .then_with(|| revlex(a.iter().rev().copied(), b.iter().rev().copied()))
        }
    }
}

/// Checked comparison of two monomials under `order`.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::MismatchedMonomials(a.nvars(), b.nvars()));
    }
    Ok(order.cmp(a, b))
}
