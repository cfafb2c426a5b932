//! Surveys of indecomposables for simple socle / simple top, and the
//! projective-injective criterion for "simple top or simple socle".

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::PrimeField;
use crate::error::{HallError, Result};
use crate::limits::Limits;
use crate::quiver::Quiver;
use crate::rep::{
    decompose, enumerate_indecomposables, is_uniserial, loewy_data, proj_inj, RepJson,
    Representation,
};

#[derive(Clone, Debug, Serialize)]
pub struct ConditionVerdict {
    /// True if no indecomposable within the bound violates the condition.
    pub holds: bool,
    /// The first violating module in enumeration order.
    pub witness: Option<RepJson>,
}

impl ConditionVerdict {
    fn new() -> Self {
        ConditionVerdict {
            holds: true,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, m: &Representation) {
        if !ok && self.holds {
            self.holds = false;
            self.witness = Some(m.to_json_value());
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub quiver: String,
    pub p: u32,
    pub max_total_dim: usize,
    pub nilpotent: bool,
    pub indecomposables: usize,
    pub simple_socle: ConditionVerdict,
    pub simple_top: ConditionVerdict,
    pub simple_top_or_socle: ConditionVerdict,
}

impl SurveyReport {
    pub fn to_text(&self) -> String {
        let v = |c: &ConditionVerdict| if c.holds { "holds" } else { "fails" };
        format!(
            "{} (p={}, bound {}, {} indecomposables): simple socle {}; simple top {}; simple top or socle {}",
            self.quiver,
            self.p,
            self.max_total_dim,
            self.indecomposables,
            v(&self.simple_socle),
            v(&self.simple_top),
            v(&self.simple_top_or_socle)
        )
    }
}

/// Evaluates the three conditions on every indecomposable of total
/// dimension at most `max_total_dim`.
pub fn survey_conditions(
    q: &Arc<Quiver>,
    field: PrimeField,
    max_total_dim: usize,
    nilpotent: bool,
    limits: &Limits,
) -> Result<SurveyReport> {
    if q.has_oriented_cycle() && !nilpotent {
        return Err(HallError::unsupported(format!(
            "socles and tops of all representations of {} (it has an oriented cycle); use the nilpotent category",
            q.name()
        )));
    }
    let ind = enumerate_indecomposables(q, max_total_dim, field, nilpotent, limits)?;
    let mut socle = ConditionVerdict::new();
    let mut top = ConditionVerdict::new();
    let mut either = ConditionVerdict::new();
    for m in &ind {
        let d = loewy_data(m)?;
        let simple_socle = d.socle.module.total_dim() == 1;
        let simple_top = d.top.total_dim() == 1;
        socle.record(simple_socle, m);
        top.record(simple_top, m);
        either.record(simple_socle || simple_top, m);
    }
    Ok(SurveyReport {
        quiver: q.name().to_string(),
        p: field.p() as u32,
        max_total_dim,
        nilpotent,
        indecomposables: ind.len(),
        simple_socle: socle,
        simple_top: top,
        simple_top_or_socle: either,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TachikawaReport {
    pub quiver: String,
    pub p: u32,
    /// Radicals of indecomposable projectives, and quotients of indecomposable
    /// injectives by their socles, are sums of at most two uniserial modules.
    pub radicals_ok: bool,
    /// Projectives with decomposable socle have uniserial injective envelopes
    /// of their socle summands, and dually.
    pub envelopes_ok: bool,
    pub passes: bool,
    /// Human-readable descriptions of every failure found.
    pub witnesses: Vec<String>,
}

impl TachikawaReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{}: radicals and socle quotients {}, envelopes {} => {}",
            self.quiver,
            if self.radicals_ok { "ok" } else { "fail" },
            if self.envelopes_ok { "ok" } else { "fail" },
            if self.passes { "PASS" } else { "FAIL" }
        );
        for w in &self.witnesses {
            s.push_str("\n  ");
            s.push_str(w);
        }
        s
    }
}

/// A sum of at most two uniserial modules.
fn at_most_two_uniserial(m: &Representation, limits: &Limits) -> Result<bool> {
    let d = decompose(m, limits)?;
    if d.s > 2 {
        return Ok(false);
    }
    for x in &d.summands {
        if !is_uniserial(&x.module)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the criterion on the indecomposable projectives and injectives of
/// an acyclic quiver.
pub fn tachikawa_check(
    q: &Arc<Quiver>,
    field: PrimeField,
    limits: &Limits,
) -> Result<TachikawaReport> {
    if q.has_oriented_cycle() {
        return Err(HallError::unsupported(format!(
            "{} has an oriented cycle",
            q.name()
        )));
    }
    let n = q.vertex_count();
    let pi: Vec<(Representation, Representation)> = (0..n)
        .map(|i| proj_inj(q, field, i))
        .collect::<Result<_>>()?;
    let name = |i: usize| q.vertices()[i].clone();
    let mut witnesses = Vec::new();
    let mut radicals_ok = true;
    let mut envelopes_ok = true;
    for (i, (p, inj)) in pi.iter().enumerate() {
        let dp = loewy_data(p)?;
        if !at_most_two_uniserial(&dp.radical.module, limits)? {
            radicals_ok = false;
            witnesses.push(format!(
                "rad P({}) = {} is not a sum of at most two uniserials",
                name(i),
                dp.radical.module.dim_label()
            ));
        }
        let di = loewy_data(inj)?;
        if !at_most_two_uniserial(&di.socle_quotient, limits)? {
            radicals_ok = false;
            witnesses.push(format!(
                "I({}) / soc = {} is not a sum of at most two uniserials",
                name(i),
                di.socle_quotient.dim_label()
            ));
        }
        let soc = dp.socle.module.dims();
        if soc.iter().sum::<usize>() > 1 {
            for (j, &d) in soc.iter().enumerate() {
                if d > 0 && !is_uniserial(&pi[j].1)? {
                    envelopes_ok = false;
                    witnesses.push(format!(
                        "P({}) has decomposable socle and I({}) is not uniserial",
                        name(i),
                        name(j)
                    ));
                }
            }
        }
        let top = di.top.dims();
        if top.iter().sum::<usize>() > 1 {
            for (j, &d) in top.iter().enumerate() {
                if d > 0 && !is_uniserial(&pi[j].0)? {
                    envelopes_ok = false;
                    witnesses.push(format!(
                        "I({}) has decomposable top and P({}) is not uniserial",
                        name(i),
                        name(j)
                    ));
                }
            }
        }
    }
    Ok(TachikawaReport {
        quiver: q.name().to_string(),
        p: field.p() as u32,
        radicals_ok,
        envelopes_ok,
        passes: radicals_ok && envelopes_ok,
        witnesses,
    })
}
