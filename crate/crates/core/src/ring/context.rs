use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::{MonomialOrder, RingError};

/// Shared handle to a ring context.
pub type Ring = Arc<RingContext>;

/// Default per-variable exponent guard.
pub const DEFAULT_EXPONENT_LIMIT: u16 = u16::MAX;

/// Ordered variable roster. The first `geometric_count` variables are the
/// coordinates of Euclidean space; the rest are formal parameters, which carry
/// weight zero in every degree computation.
#[derive(Debug)]
pub struct RingContext {
    names: Vec<String>,
    geometric: usize,
    order: MonomialOrder,
    exponent_limit: u16,
    index: FxHashMap<String, usize>,
}

impl RingContext {
    pub fn builder() -> RingBuilder {
        RingBuilder::default()
    }

    /// `x1..xn` under graded reverse lexicographic order, no parameters.
    pub fn euclidean(n: usize) -> Ring {
        Self::builder().geometric((1..=n).map(|i| format!("x{i}"))).build().expect("x1..xn are valid unique names")
    }

    pub fn variable_count(&self) -> usize {
        self.names.len()
    }

    pub fn geometric_count(&self) -> usize {
        self.geometric
    }

    pub fn parameter_count(&self) -> usize {
        self.names.len() - self.geometric
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, RingError> {
        self.index_of(name).ok_or_else(|| RingError::UnknownVariable(name.to_string()))
    }

    pub fn is_geometric(&self, var: usize) -> bool {
        var < self.geometric
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn exponent_limit(&self) -> u16 {
        self.exponent_limit
    }

    /// Same roster, split, order and guard.
    pub fn same_as(&self, other: &RingContext) -> bool {
        std::ptr::eq(self, other)
            || (self.geometric == other.geometric
                && self.order == other.order
                && self.exponent_limit == other.exponent_limit
                && self.names == other.names)
    }
}

#[derive(Debug, Default)]
pub struct RingBuilder {
    geometric: Vec<String>,
    parameters: Vec<String>,
    order: Option<MonomialOrder>,
    exponent_limit: Option<u16>,
}

impl RingBuilder {
    pub fn geometric<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.geometric.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn parameters<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.parameters.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn order(mut self, order: MonomialOrder) -> Self {
        self.order = Some(order);
        self
    }

    pub fn exponent_limit(mut self, limit: u16) -> Self {
        self.exponent_limit = Some(limit);
        self
    }

    pub fn build(self) -> Result<Ring, RingError> {
        let geometric = self.geometric.len();
        let names: Vec<String> = self.geometric.into_iter().chain(self.parameters).collect();
        let mut index = FxHashMap::default();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(RingError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(RingError::DuplicateVariable(name.clone()));
            }
        }
        let exponent_limit = self.exponent_limit.unwrap_or(DEFAULT_EXPONENT_LIMIT);
        if exponent_limit == 0 {
            return Err(RingError::InvalidExponentLimit);
        }
        Ok(Arc::new(RingContext {
            names,
            geometric,
            order: self.order.unwrap_or(MonomialOrder::Grevlex),
            exponent_limit,
            index,
        }))
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roster_split() {
        let ring = RingContext::builder()
            .geometric(["x1", "x2"])
            .parameters(["Ht", "k0"])
            .order(MonomialOrder::Lex)
            .build()
            .unwrap();
        assert_eq!(ring.variable_count(), 4);
        assert_eq!(ring.geometric_count() + ring.parameter_count(), 4);
        assert_eq!(ring.index_of("Ht"), Some(2));
        assert!(!ring.is_geometric(2));
        assert_eq!(ring.exponent_limit(), DEFAULT_EXPONENT_LIMIT);
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        let dup = RingContext::builder().geometric(["x1"]).parameters(["x1"]).build();
        assert!(matches!(dup, Err(RingError::DuplicateVariable(_))));
        let bad = RingContext::builder().geometric(["1x"]).build();
        assert!(matches!(bad, Err(RingError::InvalidName(_))));
    }
}
