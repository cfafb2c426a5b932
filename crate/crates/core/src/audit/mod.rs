//! Bounded audits of whether `D_r`, the span of classes with at least
//! `r + 1` indecomposable summands, is closed under Hall multiplication.
//!
//! An audit enumerates every class of total dimension below the bound,
//! computes its number of summands `s`, and for each admissible pair
//! `(M, N)` inspects every middle term of `[M] ⋄ [N]`. A middle term with
//! `s(X) <= r` is a violation and becomes a replayable certificate.

mod certificate;
mod constructions;
mod survey;
mod witness;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::PrimeField;
use crate::error::{HallError, Result};
use crate::limits::Limits;
use crate::quiver::Quiver;
use crate::rep::{decompose, enumerate_reps_up_to, ExtSpace, Representation};

pub use certificate::{Certificate, CertificateKeys, SummandCounts};
pub use constructions::{certify_construction, Construction, ConstructionReport};
pub use survey::{
    survey_conditions, tachikawa_check, ConditionVerdict, SurveyReport, TachikawaReport,
};
pub use witness::{
    repeated_certificate, socle_split_certificate, subring_split_certificate, top_split_certificate,
};

/// Which closure property is audited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Both factors in `D_r`.
    Subring,
    /// `N ∈ D_r`, `M` arbitrary: `H ⋄ D_r ⊆ D_r`.
    LeftIdeal,
    /// `M ∈ D_r`, `N` arbitrary: `D_r ⋄ H ⊆ D_r`.
    RightIdeal,
    /// Left, then right.
    Ideal,
}

impl Mode {
    /// The one-sided checks making up this mode, in audit order.
    pub fn sides(self) -> Vec<Mode> {
        match self {
            Mode::Ideal => vec![Mode::LeftIdeal, Mode::RightIdeal],
            m => vec![m],
        }
    }

    /// The mode that corresponds to this one over the opposite quiver.
    pub fn mirrored(self) -> Mode {
        match self {
            Mode::LeftIdeal => Mode::RightIdeal,
            Mode::RightIdeal => Mode::LeftIdeal,
            m => m,
        }
    }

    /// Whether a pair with summand counts `s_m`, `s_n` is checked.
    pub fn admits(self, s_m: usize, s_n: usize, r: usize) -> bool {
        let member = |s: usize| s > r;
        match self {
            Mode::Subring => member(s_m) && member(s_n),
            Mode::LeftIdeal => member(s_n),
            Mode::RightIdeal => member(s_m),
            Mode::Ideal => member(s_m) || member(s_n),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Subring => "subring",
            Mode::LeftIdeal => "left-ideal",
            Mode::RightIdeal => "right-ideal",
            Mode::Ideal => "ideal",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = HallError;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "subring" => Ok(Mode::Subring),
            "left-ideal" => Ok(Mode::LeftIdeal),
            "right-ideal" => Ok(Mode::RightIdeal),
            "ideal" => Ok(Mode::Ideal),
            _ => Err(HallError::invalid(format!(
                "unknown mode {s:?}; expected subring, ideal, left-ideal or right-ideal"
            ))),
        }
    }
}

/// Number of indecomposable summands, with multiplicity.
pub fn s_value(m: &Representation, limits: &Limits) -> Result<usize> {
    Ok(decompose(m, limits)?.s)
}

/// `s(m) >= r + 1`.
pub fn in_d_r(m: &Representation, r: usize, limits: &Limits) -> Result<bool> {
    Ok(s_value(m, limits)? > r)
}

#[derive(Clone, Debug)]
pub struct AuditConfig {
    pub r: usize,
    pub field: PrimeField,
    /// Largest total dimension of `M ⊕ N` inspected.
    pub max_total_dim: usize,
    pub mode: Mode,
    pub nilpotent: bool,
    pub limits: Limits,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl AuditConfig {
    pub fn new(r: usize, mode: Mode, max_total_dim: usize) -> Self {
        AuditConfig {
            r,
            field: PrimeField::F2,
            max_total_dim,
            mode,
            nilpotent: false,
            limits: Limits::default(),
            threads: None,
        }
    }

    pub fn nilpotent(mut self, yes: bool) -> Self {
        self.nilpotent = yes;
        self
    }

    pub fn field(mut self, field: PrimeField) -> Self {
        self.field = field;
        self
    }

    pub fn limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// No violation among all pairs within the bound.
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub quiver: String,
    pub p: u32,
    pub r: usize,
    pub mode: Mode,
    pub max_total_dim: usize,
    pub nilpotent: bool,
    pub verdict: Verdict,
    /// Isomorphism classes of total dimension below the bound.
    pub classes: usize,
    /// Those classes lying in `D_r`.
    pub members: usize,
    /// Pairs admitted by the mode within the bound.
    pub candidate_pairs: usize,
    /// Pairs inspected before the verdict, in audit order.
    pub pairs_checked: usize,
    pub certificate: Option<Certificate>,
    /// Wall-clock time; left out of the JSON form so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_text(&self) -> String {
        let nil = if self.nilpotent { " nilpotent" } else { "" };
        let mut s = format!(
            "{}: {} r={} p={} bound={}{}: {} ({} classes, {} in D_r, {}/{} pairs, {:.2}s)",
            self.quiver,
            self.mode,
            self.r,
            self.p,
            self.max_total_dim,
            nil,
            self.verdict,
            self.classes,
            self.members,
            self.pairs_checked,
            self.candidate_pairs,
            self.elapsed.as_secs_f64()
        );
        if let Some(c) = &self.certificate {
            s.push('\n');
            s.push_str(&c.to_text());
        }
        s
    }
}

/// Summand counts of middle terms, shared between workers.
#[derive(Default)]
struct SCache {
    map: Mutex<HashMap<Vec<u8>, usize>>,
}

impl SCache {
    fn get(&self, x: &Representation, limits: &Limits) -> Result<usize> {
        let key = x.bytes();
        if let Some(&s) = self.map.lock().expect("cache lock").get(&key) {
            return Ok(s);
        }
        let s = s_value(x, limits)?;
        self.map.lock().expect("cache lock").insert(key, s);
        Ok(s)
    }
}

/// The first middle term of `[m] ⋄ [n]`, in cocycle order, with at most `r` summands.
fn first_violation(
    m: &Representation,
    n: &Representation,
    r: usize,
    cache: &SCache,
    limits: &Limits,
) -> Result<Option<Representation>> {
    for x in ExtSpace::new(m, n)?.middle_terms(limits)? {
        if cache.get(&x, limits)? <= r {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn audit(q: &Arc<Quiver>, cfg: &AuditConfig) -> Result<AuditReport> {
    match cfg.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| HallError::invalid(format!("thread pool: {e}")))?;
            pool.install(|| run_audit(q, cfg))
        }
        None => run_audit(q, cfg),
    }
}

fn run_audit(q: &Arc<Quiver>, cfg: &AuditConfig) -> Result<AuditReport> {
    let start = Instant::now();
    if cfg.r == 0 {
        return Err(HallError::invalid("the level r must be at least 1"));
    }
    let limits = &cfg.limits;
    let classes = if cfg.max_total_dim >= 2 {
        enumerate_reps_up_to(q, cfg.max_total_dim - 1, cfg.field, cfg.nilpotent, limits)?
    } else {
        Vec::new()
    };
    let s: Vec<usize> = classes
        .par_iter()
        .map(|m| s_value(m, limits))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = classes.iter().map(|m| m.total_dim()).collect();
    let cache = SCache::default();

    let mut report = AuditReport {
        quiver: q.name().to_string(),
        p: cfg.field.p() as u32,
        r: cfg.r,
        mode: cfg.mode,
        max_total_dim: cfg.max_total_dim,
        nilpotent: cfg.nilpotent,
        verdict: Verdict::Pass,
        classes: classes.len(),
        members: s.iter().filter(|&&x| x > cfg.r).count(),
        candidate_pairs: 0,
        pairs_checked: 0,
        certificate: None,
        elapsed: Duration::ZERO,
    };

    let mut sides = Vec::new();
    for side in cfg.mode.sides() {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                if dims[i] + dims[j] <= cfg.max_total_dim && side.admits(s[i], s[j], cfg.r) {
                    pairs.push((i, j));
                }
            }
        }
        pairs.sort_by_key(|&(i, j)| (dims[i] + dims[j], i, j));
        report.candidate_pairs += pairs.len();
        sides.push((side, pairs));
    }

    for (side, pairs) in sides {
        let mut offset = 0;
        while offset < pairs.len() {
            let total = dims[pairs[offset].0] + dims[pairs[offset].1];
            let end = offset
                + pairs[offset..]
                    .iter()
                    .take_while(|&&(i, j)| dims[i] + dims[j] == total)
                    .count();
            let found = pairs[offset..end]
                .par_iter()
                .enumerate()
                .find_map_first(|(k, &(i, j))| {
                    match first_violation(&classes[i], &classes[j], cfg.r, &cache, limits) {
                        Ok(None) => None,
                        Ok(Some(x)) => Some(Ok((k, i, j, x))),
                        Err(e) => Some(Err((k, e))),
                    }
                });
            match found {
                None => {
                    report.pairs_checked += end - offset;
                    offset = end;
                }
                Some(Err((k, e))) => {
                    report.pairs_checked += k;
                    return Err(with_progress(e, &report));
                }
                Some(Ok((k, i, j, x))) => {
                    report.pairs_checked += k + 1;
                    let cert = Certificate::build(
                        &classes[i],
                        &classes[j],
                        &x,
                        cfg.r,
                        side,
                        cfg.nilpotent,
                        "audit",
                        limits,
                    )?;
                    report.verdict = Verdict::Fail;
                    report.certificate = Some(cert);
                    report.elapsed = start.elapsed();
                    return Ok(report);
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn with_progress(e: HallError, report: &AuditReport) -> HallError {
    match e {
        HallError::Capacity { what, needed, cap } => HallError::Capacity {
            what: format!(
                "{what} (audit of {} {} r={} stopped after {} of {} pairs over {} classes)",
                report.quiver,
                report.mode,
                report.r,
                report.pairs_checked,
                report.candidate_pairs,
                report.classes
            ),
            needed,
            cap,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    fn q(text: &str) -> Arc<Quiver> {
        Arc::new(parse_quiver(text).unwrap())
    }

    #[test]
    fn mode_admission() {
        assert!(Mode::Subring.admits(2, 2, 1));
        assert!(!Mode::Subring.admits(1, 2, 1));
        assert!(Mode::LeftIdeal.admits(1, 2, 1));
        assert!(!Mode::LeftIdeal.admits(2, 1, 1));
        assert!(Mode::RightIdeal.admits(2, 1, 1));
        assert_eq!(Mode::LeftIdeal.mirrored(), Mode::RightIdeal);
        assert_eq!("left-ideal".parse::<Mode>().unwrap(), Mode::LeftIdeal);
        assert!("both".parse::<Mode>().is_err());
    }

    #[test]
    fn membership() {
        let l2 = q("quiver l2\nvertex 1 2\narrow a: 1 -> 2");
        let f = PrimeField::F2;
        let lim = Limits::default();
        let s1 = Representation::simple(l2.clone(), f, 0);
        assert!(!in_d_r(&s1, 1, &lim).unwrap());
        assert!(in_d_r(&s1.power(2), 1, &lim).unwrap());
        assert!(!in_d_r(&s1.power(2), 2, &lim).unwrap());
    }

    #[test]
    fn linear_quiver_passes() {
        let l3 = q("quiver L3\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3");
        let rep = audit(&l3, &AuditConfig::new(1, Mode::Ideal, 4)).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(rep.candidate_pairs > 0);
        assert_eq!(rep.pairs_checked, rep.candidate_pairs);
    }

    #[test]
    fn zigzag_fails_as_a_subring() {
        let z =
            q("quiver zigzag\nvertex 1 2 3 4\narrow a: 2 -> 1\narrow b: 2 -> 3\narrow c: 4 -> 3");
        let rep = audit(&z, &AuditConfig::new(1, Mode::Subring, 4)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        let c = rep.certificate.unwrap();
        assert_eq!(c.s.x, 1);
        assert_eq!(
            c.x.dims.values().copied().collect::<Vec<_>>(),
            vec![1, 1, 1, 1]
        );
        c.replay(&Limits::default()).unwrap();
    }

    #[test]
    fn audits_are_deterministic_across_thread_counts() {
        let k = q("quiver K\nvertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2");
        let one = audit(&k, &AuditConfig::new(1, Mode::Ideal, 4).threads(Some(1))).unwrap();
        let four = audit(&k, &AuditConfig::new(1, Mode::Ideal, 4).threads(Some(4))).unwrap();
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&four).unwrap()
        );
        assert_eq!(one.verdict, Verdict::Fail);
    }
}
