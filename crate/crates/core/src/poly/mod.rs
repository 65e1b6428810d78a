//! Exact multivariate polynomials over `Q` or `F_p`.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomial_compare, Monomial, ModuleExtension, MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use polynomial::{ArithOp, Polynomial};
pub use ring::PolyRing;

use std::sync::Arc;

use crate::error::Result;

/// `f op g` in canonical form; fails on mixed rings.
pub fn ring_arithmetic(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    f.arith(g, op)
}

/// Parses a comma-separated list of polynomials, skipping empty entries.
pub fn parse_polynomial_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    split_top_level(text)
        .into_iter()
        .filter(|(_, s)| !s.trim().is_empty())
        .map(|(offset, s)| {
            parse_polynomial(s, ring).map_err(|e| shift_offset(e, offset))
        })
        .collect()
}

fn shift_offset(e: crate::error::Error, by: usize) -> crate::error::Error {
    use crate::error::Error;
    match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        Error::UnknownVariable { name, offset } => Error::UnknownVariable { name, offset: offset + by },
        other => other,
    }
}

/// Splits on commas outside parentheses/brackets, returning byte offsets.
pub(crate) fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}
