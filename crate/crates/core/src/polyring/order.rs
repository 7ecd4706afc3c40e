use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::field::Field;

/// Variable names listed from least to greatest under plex.
///
/// Index `i` (0-based) is the variable of class `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VariableOrder {
    names: Arc<[String]>,
}

impl VariableOrder {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidOrder("no variables".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidOrder("empty variable name".into()));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidOrder(format!("duplicate variable {a}")));
            }
        }
        Ok(VariableOrder { names: names.into() })
    }

    /// `x1 < x2 < ... < xn`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        VariableOrder::new(&names).expect("generated names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A variable name not yet used by this order, built from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        let mut i = 0;
        while self.index_of(&candidate).is_some() {
            i += 1;
            candidate = format!("{base}{i}");
        }
        candidate
    }

    /// Same order with one extra greatest variable.
    pub fn with_greatest(&self, name: &str) -> Result<Self> {
        let mut names = self.names.to_vec();
        names.push(name.to_string());
        VariableOrder::new(&names)
    }

    /// Reorders the variables; `perm[j]` is the old index of the new `j`-th variable.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::InvalidOrder("permutation length differs".into()));
        }
        let names: Vec<&str> = perm.iter().map(|&i| self.name(i)).collect();
        VariableOrder::new(&names)
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" < "))
    }
}

/// A polynomial ring `k[x_1, ..., x_n]` under plex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing<F: Field> {
    order: VariableOrder,
    field: F::Context,
}

impl<F: Field> PolyRing<F> {
    pub fn new(order: VariableOrder, field: F::Context) -> Arc<Self> {
        Arc::new(PolyRing { order, field })
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn field(&self) -> &F::Context {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.order.len()
    }

    pub fn zero_coeff(&self) -> F {
        F::zero(&self.field)
    }

    pub fn one_coeff(&self) -> F {
        F::one(&self.field)
    }

    pub fn coeff(&self, value: i64) -> F {
        F::from_i64(&self.field, value)
    }

    /// Same field, different variables.
    pub fn with_order(&self, order: VariableOrder) -> Arc<Self> {
        PolyRing::new(order, self.field.clone())
    }
}

pub(crate) fn same_ring<F: Field>(a: &Arc<PolyRing<F>>, b: &Arc<PolyRing<F>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
