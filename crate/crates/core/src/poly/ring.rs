use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::CoefficientField;

/// A standard-graded polynomial ring `k[x_1, ..., x_m]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    variables: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(variables: Vec<String>, field: CoefficientField, order: MonomialOrder) -> Result<Arc<Self>> {
        if variables.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        Self::with_variables(variables, field, order)
    }

    /// Like [`PolyRing::new`] but admits the zero-variable ring `k`, which
    /// shows up when localizing at the zero ideal.
    pub(crate) fn with_variables(
        variables: Vec<String>,
        field: CoefficientField,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let mut seen = HashSet::new();
        for v in &variables {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if variables.len() > 63 {
            return Err(Error::InvalidRing("at most 63 variables are supported".into()));
        }
        Ok(Arc::new(PolyRing { variables, field, order }))
    }

    /// `Q[names...]` with grevlex; convenience for tests and examples.
    pub fn rational(names: &[&str]) -> Arc<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), CoefficientField::RATIONALS, MonomialOrder::GREVLEX)
            .expect("valid variable names")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { variables: self.variables.clone(), field: self.field, order })
    }

    /// The subring on the variables selected by `mask` (bit `i` = variable `i`).
    pub(crate) fn subring(&self, mask: u64) -> Arc<Self> {
        let variables = self
            .variables
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect();
        Arc::new(PolyRing { variables, field: self.field, order: self.order })
    }

    /// Appends fresh variables, skipping names already in use.
    pub fn extend(&self, extra: &[&str]) -> Result<Arc<Self>> {
        let mut variables = self.variables.clone();
        for name in extra {
            variables.push(name.to_string());
        }
        Self::new(variables, self.field, self.order)
    }

    pub(crate) fn fresh_name(&self, stem: &str) -> String {
        if self.variable_index(stem).is_none() {
            return stem.to_string();
        }
        (0..).map(|i| format!("{stem}{i}")).find(|n| self.variable_index(n).is_none()).unwrap()
    }

    pub(crate) fn same(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.variables.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
