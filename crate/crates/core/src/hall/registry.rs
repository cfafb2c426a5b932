//! Registry of isomorphism-class representatives keyed by stable strings.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::PrimeField;
use crate::error::{HallError, Result};
use crate::limits::Limits;
use crate::quiver::Quiver;
use crate::rep::{invariants, is_isomorphic, Representation};

/// The category a Hall computation lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub quiver: Arc<Quiver>,
    pub field: PrimeField,
    /// Restrict to nilpotent representations.
    pub nilpotent: bool,
}

impl Context {
    pub fn new(quiver: Arc<Quiver>, field: PrimeField, nilpotent: bool) -> Self {
        Context {
            quiver,
            field,
            nilpotent,
        }
    }

    pub(crate) fn admit(&self, m: &Representation) -> Result<()> {
        if m.field() != self.field || **m.quiver() != *self.quiver {
            return Err(HallError::mismatch(format!(
                "module over {} / {} used in a context over {} / {}",
                m.quiver().name(),
                m.field(),
                self.quiver.name(),
                self.field
            )));
        }
        if self.nilpotent && !m.is_nilpotent() {
            return Err(HallError::invalid(format!(
                "module {} is not nilpotent",
                m.dim_label()
            )));
        }
        Ok(())
    }
}

/// At most one representative per isomorphism class.
///
/// Keys look like `d3.2-i1f0c9a7e-r0`: the dimension vector, a digest of the
/// cheap invariants, and the position within the bucket of modules sharing
/// those invariants. Keys depend only on the order of insertion within a
/// bucket, so a fixed computation produces the same keys on every run.
#[derive(Clone, Debug)]
pub struct IsoRegistry {
    context: Context,
    limits: Limits,
    entries: BTreeMap<String, Representation>,
    buckets: HashMap<String, Vec<String>>,
    by_bytes: HashMap<Vec<u8>, String>,
    log: Vec<String>,
}

impl IsoRegistry {
    pub fn new(context: Context, limits: Limits) -> Self {
        IsoRegistry {
            context,
            limits,
            entries: BTreeMap::new(),
            buckets: HashMap::new(),
            by_bytes: HashMap::new(),
            log: Vec::new(),
        }
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&Representation> {
        self.entries.get(key)
    }

    /// Keys in insertion order.
    pub fn log(&self) -> &[String] {
        &self.log
    }

    /// The key of the class of `m`, registering `m` as its representative if
    /// the class is new.
    pub fn insert(&mut self, m: &Representation) -> Result<String> {
        if let Some(k) = self.by_bytes.get(&m.bytes()) {
            return Ok(k.clone());
        }
        self.context.admit(m)?;
        let inv = invariants(m)?;
        let sig = inv.signature();
        if let Some(keys) = self.buckets.get(&sig) {
            for k in keys {
                if is_isomorphic(&self.entries[k], m, &self.limits)? {
                    self.by_bytes.insert(m.bytes(), k.clone());
                    return Ok(k.clone());
                }
            }
        }
        let bucket = self.buckets.entry(sig).or_default();
        let dims: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
        let key = format!("d{}-i{}-r{}", dims.join("."), inv.digest(), bucket.len());
        bucket.push(key.clone());
        self.entries.insert(key.clone(), m.clone());
        self.by_bytes.insert(m.bytes(), key.clone());
        self.log.push(key.clone());
        Ok(key)
    }

    /// The key of the class of `m` if it is registered.
    pub fn lookup(&self, m: &Representation) -> Result<Option<String>> {
        if let Some(k) = self.by_bytes.get(&m.bytes()) {
            return Ok(Some(k.clone()));
        }
        let sig = invariants(m)?.signature();
        if let Some(keys) = self.buckets.get(&sig) {
            for k in keys {
                if is_isomorphic(&self.entries[k], m, &self.limits)? {
                    return Ok(Some(k.clone()));
                }
            }
        }
        Ok(None)
    }
}
