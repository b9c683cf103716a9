//! Variables and monomials.
//!
//! A [`VarRegistry`] owns an ordered list of distinct variable names; a
//! [`Monomial`] is a sparse exponent vector over one registry. All values are
//! immutable once built, so they can be shared freely across threads.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a variable inside its registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Ordered set of variable names. Position in the list is the [`VarId`].
#[derive(Debug, Default)]
pub struct VarRegistry {
    names: Vec<String>,
    by_name: HashMap<String, VarId>,
}

impl VarRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a registry from a name list, rejecting duplicates.
    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut reg = Self::new();
        for name in names {
            reg.add(name)?;
        }
        Ok(reg)
    }

    /// Appends a variable. Names must be unique within a registry.
    pub fn add(&mut self, name: impl Into<String>) -> Result<VarId> {
        let name = name.into();
        if self.by_name.contains_key(&name) {
            return Err(Error::DuplicateVariable(name));
        }
        let id = VarId(self.names.len() as u32);
        self.by_name.insert(name.clone(), id);
        self.names.push(name);
        Ok(id)
    }

    pub fn id_of(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.names[id.index()]
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

    pub fn ids(&self) -> impl Iterator<Item = VarId> {
        (0..self.names.len() as u32).map(VarId)
    }
}

/// Two registries are interchangeable when they list the same names in the
/// same order.
impl PartialEq for VarRegistry {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarRegistry {}

/// A monomial over a fixed registry: exponents sorted by variable id, never
/// storing zero.
///
/// Equality and hashing look at the exponent vector only; binary operations
/// check that both sides use the same registry and fail otherwise.
#[derive(Debug, Clone)]
pub struct Monomial {
    registry: Arc<VarRegistry>,
    exps: Vec<(VarId, u32)>,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Monomial {
    /// The monomial 1.
    pub fn one(registry: Arc<VarRegistry>) -> Self {
        Monomial {
            registry,
            exps: Vec::new(),
        }
    }

    /// Builds from (variable, exponent) pairs. Repeated variables multiply;
    /// zero exponents are dropped.
    pub fn from_exponents(
        registry: Arc<VarRegistry>,
        pairs: impl IntoIterator<Item = (VarId, u32)>,
    ) -> Result<Self> {
        let mut exps: Vec<(VarId, u32)> = Vec::new();
        for (v, e) in pairs {
            if v.index() >= registry.len() {
                return Err(Error::Invariant(format!(
                    "variable id {} outside registry of size {}",
                    v.0,
                    registry.len()
                )));
            }
            if e == 0 {
                continue;
            }
            exps.push((v, e));
        }
        exps.sort_by_key(|&(v, _)| v);
        exps.dedup_by(|later, first| {
            if later.0 == first.0 {
                first.1 += later.1;
                true
            } else {
                false
            }
        });
        Ok(Monomial { registry, exps })
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn same_registry(&self, other: &Monomial) -> bool {
        Arc::ptr_eq(&self.registry, &other.registry) || *self.registry == *other.registry
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Variables with nonzero exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    /// True when every exponent is at most 1.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e <= 1)
    }

    fn check_registry(&self, other: &Monomial) -> Result<()> {
        if self.same_registry(other) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    /// Variable-wise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_registry(other)?;
        Ok(self.merge(other, u32::max))
    }

    /// Variable-wise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_registry(other)?;
        Ok(self.merge(other, u32::min))
    }

    fn merge(&self, other: &Monomial, pick: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len().max(other.exps.len()));
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let (v, e) = match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) => {
                    if a < b {
                        i += 1;
                        (a, pick(ea, 0))
                    } else if b < a {
                        j += 1;
                        (b, pick(0, eb))
                    } else {
                        i += 1;
                        j += 1;
                        (a, pick(ea, eb))
                    }
                }
                (Some(&(a, ea)), None) => {
                    i += 1;
                    (a, pick(ea, 0))
                }
                (None, Some(&(b, eb))) => {
                    j += 1;
                    (b, pick(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                exps.push((v, e));
            }
        }
        Monomial {
            registry: Arc::clone(&self.registry),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> Result<bool> {
        Ok(self.gcd(other)?.is_one())
    }

    /// True when `self` divides `other` variable-wise.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_registry(other)?;
        let mut j = 0;
        for &(v, e) in &self.exps {
            loop {
                match other.exps.get(j) {
                    Some(&(w, _)) if w < v => j += 1,
                    Some(&(w, f)) if w == v => {
                        if f < e {
                            return Ok(false);
                        }
                        break;
                    }
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// Exponent-wise difference `self / divisor`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self)? {
            return Err(Error::NotDivisible {
                numerator: self.to_string(),
                denominator: divisor.to_string(),
            });
        }
        let exps = self
            .exps
            .iter()
            .map(|&(v, e)| (v, e - divisor.exponent(v)))
            .filter(|&(_, e)| e > 0)
            .collect();
        Ok(Monomial {
            registry: Arc::clone(&self.registry),
            exps,
        })
    }

    /// deg(self / divisor), defined only when divisor divides self.
    pub fn quotient_degree(&self, divisor: &Monomial) -> Result<u64> {
        if !divisor.divides(self)? {
            return Err(Error::NotDivisible {
                numerator: self.to_string(),
                denominator: divisor.to_string(),
            });
        }
        Ok(self.degree() - divisor.degree())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.registry.name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
