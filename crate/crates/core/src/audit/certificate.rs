//! Replayable evidence that a product of `D_r` classes leaves `D_r`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, PrimeField};
use crate::error::{HallError, Result};
use crate::hall::{euler_form, hall_number, hall_product, twisted_product, Context, IsoRegistry};
use crate::limits::Limits;
use crate::quiver::{Quiver, QuiverJson};
use crate::rep::{RepJson, Representation};

use super::{s_value, Mode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateKeys {
    pub m: String,
    pub n: String,
    pub x: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandCounts {
    pub m: usize,
    pub n: usize,
    pub x: usize,
}

/// `X` is a middle term of `[M] ⋄ [N]` with `F^X_{M,N} = hall_number`, the
/// pair `(M, N)` is admitted by `mode` at level `r`, and `s(X) <= r`.
/// Modules are stored in full so a certificate replays on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub quiver: QuiverJson,
    pub p: u32,
    pub nilpotent: bool,
    pub r: usize,
    pub mode: Mode,
    pub m: RepJson,
    pub n: RepJson,
    pub x: RepJson,
    pub keys: CertificateKeys,
    pub s: SummandCounts,
    pub hall_number: u64,
    /// Where the certificate came from: `audit` or the name of a construction.
    pub origin: String,
}

impl Certificate {
    /// Checks the claim and records it. Fails if any part of it is false.
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        m: &Representation,
        n: &Representation,
        x: &Representation,
        r: usize,
        mode: Mode,
        nilpotent: bool,
        origin: &str,
        limits: &Limits,
    ) -> Result<Certificate> {
        if mode == Mode::Ideal {
            return Err(HallError::invalid(
                "a certificate is one-sided; use left-ideal or right-ideal",
            ));
        }
        let s = SummandCounts {
            m: s_value(m, limits)?,
            n: s_value(n, limits)?,
            x: s_value(x, limits)?,
        };
        let h = hall_number(x, m, n, limits)?;
        let mut reg = IsoRegistry::new(
            Context::new(m.quiver().clone(), m.field(), nilpotent),
            *limits,
        );
        let keys = CertificateKeys {
            m: reg.insert(m)?,
            n: reg.insert(n)?,
            x: reg.insert(x)?,
        };
        let cert = Certificate {
            quiver: m.quiver().to_json_value(),
            p: m.field().p() as u32,
            nilpotent,
            r,
            mode,
            m: m.to_json_value(),
            n: n.to_json_value(),
            x: x.to_json_value(),
            keys,
            s,
            hall_number: h,
            origin: origin.to_string(),
        };
        cert.check_claim()?;
        Ok(cert)
    }

    fn check_claim(&self) -> Result<()> {
        if self.hall_number == 0 {
            return Err(HallError::mismatch(format!(
                "{} is not a middle term of the product",
                self.keys.x
            )));
        }
        if !self.mode.admits(self.s.m, self.s.n, self.r) {
            return Err(HallError::mismatch(format!(
                "factors with s = {} and {} are not admitted by {} at r = {}",
                self.s.m, self.s.n, self.mode, self.r
            )));
        }
        if self.s.x > self.r {
            return Err(HallError::mismatch(format!(
                "middle term has s = {} > r = {}",
                self.s.x, self.r
            )));
        }
        Ok(())
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.p)
    }

    /// The quiver and the modules `(M, N, X)`.
    pub fn modules(&self) -> Result<(Arc<Quiver>, Representation, Representation, Representation)> {
        let q = Arc::new(Quiver::from_json_value(&self.quiver)?);
        let m = Representation::from_json_value(&q, &self.m)?;
        let n = Representation::from_json_value(&q, &self.n)?;
        let x = Representation::from_json_value(&q, &self.x)?;
        Ok((q, m, n, x))
    }

    /// Recomputes summand counts, the Hall number, and the coefficient of
    /// `[X]` in the full product `[M] ⋄ [N]`.
    pub fn replay(&self, limits: &Limits) -> Result<()> {
        let coeff = self.replay_product(limits, false)?;
        let expected = LaurentPoly::constant(self.hall_number as i64);
        if coeff != expected {
            return Err(HallError::mismatch(format!(
                "product coefficient {coeff}, certificate says {expected}"
            )));
        }
        Ok(())
    }

    /// As `replay`, with the twisted product: the coefficient of `[X]` must be
    /// `F^X_{M,N} v^{⟨M,N⟩}`.
    pub fn replay_twisted(&self, limits: &Limits) -> Result<()> {
        let (_, m, n, _) = self.modules()?;
        let e = euler_form(&m, &n)?;
        let coeff = self.replay_product(limits, true)?;
        let expected = LaurentPoly::monomial(self.hall_number as i64, e as i32);
        if coeff != expected {
            return Err(HallError::mismatch(format!(
                "twisted coefficient {coeff}, expected {expected}"
            )));
        }
        Ok(())
    }

    fn replay_product(&self, limits: &Limits, twisted: bool) -> Result<LaurentPoly> {
        let (q, m, n, x) = self.modules()?;
        let f = self.field()?;
        let s = SummandCounts {
            m: s_value(&m, limits)?,
            n: s_value(&n, limits)?,
            x: s_value(&x, limits)?,
        };
        if s != self.s {
            return Err(HallError::mismatch(format!(
                "summand counts {s:?}, certificate says {:?}",
                self.s
            )));
        }
        self.check_claim()?;
        let h = hall_number(&x, &m, &n, limits)?;
        if h != self.hall_number {
            return Err(HallError::mismatch(format!(
                "Hall number {h}, certificate says {}",
                self.hall_number
            )));
        }
        let mut reg = IsoRegistry::new(Context::new(q, f, self.nilpotent), *limits);
        let key = reg.insert(&x)?;
        let prod = if twisted {
            twisted_product(&m, &n, &mut reg)?
        } else {
            hall_product(&m, &n, &mut reg)?
        };
        Ok(prod.coeff(&key))
    }

    /// The dual certificate over the opposite quiver. Duality reverses short
    /// exact sequences, so `0 -> N -> X -> M -> 0` becomes
    /// `0 -> DM -> DX -> DN -> 0` and the factors swap, as do the ideal sides.
    pub fn opposite(&self, limits: &Limits) -> Result<Certificate> {
        let (q, m, n, x) = self.modules()?;
        let op = Arc::new(q.opposite());
        let dm = m.dual_onto(&op)?;
        let dn = n.dual_onto(&op)?;
        let dx = x.dual_onto(&op)?;
        let cert = Certificate::build(
            &dn,
            &dm,
            &dx,
            self.r,
            self.mode.mirrored(),
            self.nilpotent,
            &format!("{} (opposite)", self.origin),
            limits,
        )?;
        if cert.hall_number != self.hall_number {
            return Err(HallError::mismatch(format!(
                "opposite Hall number {} differs from {}",
                cert.hall_number, self.hall_number
            )));
        }
        Ok(cert)
    }

    pub fn to_text(&self) -> String {
        let dims = |j: &RepJson| {
            let order = &self.quiver.vertices;
            let parts: Vec<String> = order
                .iter()
                .map(|v| j.dims.get(v).copied().unwrap_or(0).to_string())
                .collect();
            format!("({})", parts.join(","))
        };
        format!(
            "certificate [{}] {} r={}: [M {} dim {} s={}] ⋄ [N {} dim {} s={}] contains {}·[X {} dim {} s={}]",
            self.origin,
            self.mode,
            self.r,
            self.keys.m,
            dims(&self.m),
            self.s.m,
            self.keys.n,
            dims(&self.n),
            self.s.n,
            self.hall_number,
            self.keys.x,
            dims(&self.x),
            self.s.x
        )
    }
}
