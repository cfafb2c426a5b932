//! Hall numbers, Hall products and the Euler form.
//!
//! `[M] ⋄ [N] = Σ_X F^X_{M,N} [X]`, where `F^X_{M,N}` counts submodules
//! `U ⊆ X` with `U ≅ N` and `X/U ≅ M`. The twisted product multiplies by
//! `v^{⟨M,N⟩}`. Coefficients are Laurent polynomials in both cases.

mod registry;
mod subreps;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::LaurentPoly;
use crate::error::{HallError, Result};
use crate::rep::{enumerate_reps, hom_space, ExtSpace, RepJson, Representation};

pub use registry::{Context, IsoRegistry};
pub use subreps::{hall_number, subreps, subreps_with_dims};

/// A finite combination of isomorphism classes with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallElement {
    terms: BTreeMap<String, Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub module: Representation,
    pub coeff: LaurentPoly,
}

#[derive(Serialize)]
pub struct ContextJson {
    pub quiver: String,
    pub p: u32,
    pub nilpotent: bool,
}

#[derive(Serialize)]
pub struct TermJson {
    pub key: String,
    pub module: RepJson,
    pub coeff: LaurentPoly,
}

#[derive(Serialize)]
pub struct HallElementJson {
    pub context: ContextJson,
    pub terms: Vec<TermJson>,
}

impl HallElement {
    pub fn zero() -> Self {
        HallElement {
            terms: BTreeMap::new(),
        }
    }

    /// `[m]` with coefficient 1.
    pub fn basis(registry: &mut IsoRegistry, m: &Representation) -> Result<Self> {
        let key = registry.insert(m)?;
        let module = registry.get(&key).expect("just inserted").clone();
        let mut terms = BTreeMap::new();
        terms.insert(
            key,
            Term {
                module,
                coeff: LaurentPoly::one(),
            },
        );
        Ok(HallElement { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by key.
    pub fn terms(&self) -> impl Iterator<Item = (&String, &Term)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &str) -> LaurentPoly {
        self.terms
            .get(key)
            .map(|t| t.coeff.clone())
            .unwrap_or_default()
    }

    pub fn support(&self) -> Vec<String> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, key: String, module: &Representation, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(|| Term {
            module: module.clone(),
            coeff: LaurentPoly::zero(),
        });
        entry.coeff.add_assign(coeff);
        if entry.coeff.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &HallElement) -> HallElement {
        let mut out = self.clone();
        for (k, t) in &other.terms {
            out.add_term(k.clone(), &t.module, &t.coeff);
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &LaurentPoly) -> HallElement {
        let mut out = HallElement::zero();
        for (k, t) in &self.terms {
            out.add_term(k.clone(), &t.module, &t.coeff.mul(c));
        }
        out
    }

    /// Bilinear extension of the Hall product (twisted if asked).
    pub fn mul(
        &self,
        other: &HallElement,
        registry: &mut IsoRegistry,
        twisted: bool,
    ) -> Result<HallElement> {
        let mut out = HallElement::zero();
        for a in self.terms.values() {
            for b in other.terms.values() {
                let prod = if twisted {
                    twisted_product(&a.module, &b.module, registry)?
                } else {
                    hall_product(&a.module, &b.module, registry)?
                };
                out = out.add(&prod.scale(&a.coeff.mul(&b.coeff)));
            }
        }
        Ok(out)
    }

    pub fn to_json_value(&self, context: &Context) -> HallElementJson {
        HallElementJson {
            context: ContextJson {
                quiver: context.quiver.name().to_string(),
                p: context.field.p() as u32,
                nilpotent: context.nilpotent,
            },
            terms: self
                .terms
                .iter()
                .map(|(k, t)| TermJson {
                    key: k.clone(),
                    module: t.module.to_json_value(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// One line per term: `<coeff> [dim <dims>] <key>`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(k, t)| {
                let dims: Vec<String> = t.module.dims().iter().map(|d| d.to_string()).collect();
                format!("{} [dim {}] {}", t.coeff, dims.join(","), k)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Keys of every `X` with `F^X_{M,N} ≠ 0`, sorted. Each `X` is realized as
/// an extension of `M` by `N` from a cocycle class.
pub fn middle_terms(
    m: &Representation,
    n: &Representation,
    registry: &mut IsoRegistry,
) -> Result<Vec<String>> {
    registry.context().admit(m)?;
    registry.context().admit(n)?;
    let ext = ExtSpace::new(m, n)?;
    let limits = *registry.limits();
    let mut keys: Vec<String> = Vec::new();
    for x in ext.middle_terms(&limits)? {
        keys.push(registry.insert(&x)?);
    }
    keys.sort();
    keys.dedup();
    Ok(keys)
}

pub fn hall_product(
    m: &Representation,
    n: &Representation,
    registry: &mut IsoRegistry,
) -> Result<HallElement> {
    let limits = *registry.limits();
    let mut out = HallElement::zero();
    for key in middle_terms(m, n, registry)? {
        let x = registry.get(&key).expect("registered").clone();
        let h = hall_number(&x, m, n, &limits)?;
        if h == 0 {
            return Err(HallError::invalid(format!(
                "middle term {key} of {} by {} has zero Hall number",
                m.dim_label(),
                n.dim_label()
            )));
        }
        out.add_term(key, &x, &LaurentPoly::constant(h as i64));
    }
    Ok(out)
}

/// `⟨M,N⟩ = dim Hom(M,N) - dim Ext^1(M,N)`.
pub fn euler_form(m: &Representation, n: &Representation) -> Result<i64> {
    let hom = hom_space(m, n)?.dim() as i64;
    let ext = ExtSpace::new(m, n)?.dim() as i64;
    Ok(hom - ext)
}

pub fn twisted_product(
    m: &Representation,
    n: &Representation,
    registry: &mut IsoRegistry,
) -> Result<HallElement> {
    let e = euler_form(m, n)?;
    Ok(hall_product(m, n, registry)?.scale(&LaurentPoly::monomial(1, e as i32)))
}

/// The same product computed by brute force: every class with dimension
/// vector `dim M + dim N` is enumerated and its Hall number counted. Kept as
/// an independent check on the extension-based construction.
pub fn hall_product_by_enumeration(
    m: &Representation,
    n: &Representation,
    registry: &mut IsoRegistry,
) -> Result<HallElement> {
    let ctx = registry.context().clone();
    ctx.admit(m)?;
    ctx.admit(n)?;
    let limits = *registry.limits();
    let dims: Vec<usize> = m.dims().iter().zip(n.dims()).map(|(a, b)| a + b).collect();
    let mut out = HallElement::zero();
    for x in enumerate_reps(&ctx.quiver, &dims, ctx.field, ctx.nilpotent, &limits)? {
        let h = hall_number(&x, m, n, &limits)?;
        if h > 0 {
            let key = registry.insert(&x)?;
            let rep = registry.get(&key).expect("registered").clone();
            out.add_term(key, &rep, &LaurentPoly::constant(h as i64));
        }
    }
    Ok(out)
}
