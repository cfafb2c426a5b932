//! Violations built from the radical and socle of a single module.
//!
//! If `M` is indecomposable with decomposable socle, then for any
//! indecomposable `N` the module `M ⊕ N^{r-1}` has `r` summands and sits in
//! `0 -> soc M ⊕ N^{r-1} -> M ⊕ N^{r-1} -> M / soc M -> 0`, whose submodule
//! has at least `r + 1` summands. Dually for decomposable tops. Combining
//! both gives a subring violation at every `r >= 2`.

use crate::error::{HallError, Result};
use crate::limits::Limits;
use crate::rep::{loewy_data, Representation};

use super::{s_value, Certificate, Mode};

fn require_indecomposable(m: &Representation, what: &str, limits: &Limits) -> Result<()> {
    if s_value(m, limits)? != 1 {
        return Err(HallError::invalid(format!(
            "{what} {} is not indecomposable",
            m.dim_label()
        )));
    }
    Ok(())
}

fn nilpotent_context(m: &Representation) -> bool {
    m.quiver().has_oriented_cycle()
}

/// Left-ideal violation from `soc(M) ⊕ N^{r-1} ⊂ M ⊕ N^{r-1}`.
pub fn socle_split_certificate(
    m: &Representation,
    n: &Representation,
    r: usize,
    limits: &Limits,
) -> Result<Certificate> {
    require_indecomposable(m, "M", limits)?;
    require_indecomposable(n, "N", limits)?;
    let d = loewy_data(m)?;
    let extra = n.power(r - 1);
    let sub = d.socle.module.oplus(&extra)?;
    let x = m.oplus(&extra)?;
    let origin = "socle split";
    Certificate::build(
        &d.socle_quotient,
        &sub,
        &x,
        r,
        Mode::LeftIdeal,
        nilpotent_context(m),
        origin,
        limits,
    )
}

/// Right-ideal violation from `rad M ⊂ M ⊕ N^{r-1}` with quotient `top M ⊕ N^{r-1}`.
pub fn top_split_certificate(
    m: &Representation,
    n: &Representation,
    r: usize,
    limits: &Limits,
) -> Result<Certificate> {
    require_indecomposable(m, "M", limits)?;
    require_indecomposable(n, "N", limits)?;
    let d = loewy_data(m)?;
    let extra = n.power(r - 1);
    let quot = d.top.oplus(&extra)?;
    let x = m.oplus(&extra)?;
    Certificate::build(
        &quot,
        &d.radical.module,
        &x,
        r,
        Mode::RightIdeal,
        nilpotent_context(m),
        "top split",
        limits,
    )
}

/// Subring violation from `soc M ⊕ (rad N)^{r-1} ⊂ M ⊕ N^{r-1}`, where `M`
/// has decomposable socle and `N` decomposable top.
pub fn subring_split_certificate(
    m: &Representation,
    n: &Representation,
    r: usize,
    limits: &Limits,
) -> Result<Certificate> {
    require_indecomposable(m, "M", limits)?;
    require_indecomposable(n, "N", limits)?;
    let dm = loewy_data(m)?;
    let dn = loewy_data(n)?;
    let sub = dm.socle.module.oplus(&dn.radical.module.power(r - 1))?;
    let quot = dm.socle_quotient.oplus(&dn.top.power(r - 1))?;
    let x = m.oplus(&n.power(r - 1))?;
    Certificate::build(
        &quot,
        &sub,
        &x,
        r,
        Mode::Subring,
        nilpotent_context(m),
        "socle and top split",
        limits,
    )
}

/// The direct sum of `copies` copies of the sequence behind `c`, claimed at
/// level `r = copies`. A level-1 violation with indecomposable `X` lifts to
/// every level this way.
pub fn repeated_certificate(
    c: &Certificate,
    copies: usize,
    limits: &Limits,
) -> Result<Certificate> {
    if copies == 0 {
        return Err(HallError::invalid("at least one copy is needed"));
    }
    let (_, m, n, x) = c.modules()?;
    let origin = format!("{} x{copies}", c.origin);
    Certificate::build(
        &m.power(copies),
        &n.power(copies),
        &x.power(copies),
        copies,
        c.mode,
        c.nilpotent,
        &origin,
        limits,
    )
}
