//! Explicit modules over `F_2` whose products leave `D_r`, rebuilt from
//! literal matrices and checked exactly.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{increment_digits, Matrix, PrimeField};
use crate::error::{HallError, Result};
use crate::limits::{saturating_pow, Limits};
use crate::quiver::{parse_quiver, Quiver};
use crate::rep::{end_algebra, loewy_data, proj_inj, Representation};

use super::{socle_split_certificate, Certificate, Mode};

const F2: PrimeField = PrimeField::F2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// `1 <- 2 -> 3`, `M = P(2)`, `N = S_2`, `r = 2`: the socle split.
    SocleSplit,
    /// `1 <- 2 -> 3 <- 4`: `(1,1,1,1)` is an extension of `S_2 ⊕ S_4` by `S_1 ⊕ S_3`.
    Zigzag,
    /// Three arms into a center: the `(1,2,1,1)` module built from the three
    /// lines of `F_2^2` is an extension of its top by its radical.
    FourSubspace,
    /// Kronecker `(3,2)`: an extension of `S_1^3` by `S_2^2`.
    Kronecker,
    /// A loop with an incoming arrow: a local module of dimension `(4,1)`.
    LoopWithTail,
    /// Two loops: a local module of dimension 4 that is an extension of `k^2` by `k^2`.
    DoubleLoop,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::SocleSplit,
        Construction::Zigzag,
        Construction::FourSubspace,
        Construction::Kronecker,
        Construction::LoopWithTail,
        Construction::DoubleLoop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::SocleSplit => "socle-split",
            Construction::Zigzag => "zigzag",
            Construction::FourSubspace => "four-subspace",
            Construction::Kronecker => "kronecker",
            Construction::LoopWithTail => "loop-with-tail",
            Construction::DoubleLoop => "double-loop",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = HallError;

    fn from_str(s: &str) -> Result<Construction> {
        Construction::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Construction::ALL.iter().map(|c| c.name()).collect();
                HallError::invalid(format!(
                    "unknown construction {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub construction: Construction,
    pub certificate: Certificate,
    /// `dim End(X)` of the violating middle term.
    pub end_dim: usize,
    /// Every endomorphism of `X` is nilpotent or invertible, checked over all of `End(X)`.
    pub local: bool,
    pub socle_dims: Vec<usize>,
    pub top_dims: Vec<usize>,
}

impl ConstructionReport {
    pub fn to_text(&self) -> String {
        format!(
            "{}\n{}\nEnd dim = {}, local: {}\nsocle {:?}, top {:?}",
            self.construction,
            self.certificate.to_text(),
            self.end_dim,
            if self.local { "yes" } else { "no" },
            self.socle_dims,
            self.top_dims
        )
    }
}

fn quiver(text: &str) -> Arc<Quiver> {
    Arc::new(parse_quiver(text).expect("built-in quiver parses"))
}

fn rep(q: &Arc<Quiver>, dims: &[usize], maps: Vec<Matrix>) -> Representation {
    Representation::from_literals(q, F2, dims, maps).expect("built-in module is well formed")
}

fn m<const C: usize>(rows: &[[i64; C]]) -> Matrix {
    Matrix::from_literal(rows, F2)
}

/// Exhaustive test that every endomorphism is nilpotent or invertible.
pub fn is_local(x: &Representation, limits: &Limits) -> Result<bool> {
    let end = end_algebra(x)?;
    limits.check(
        || format!("endomorphisms of {}", x.dim_label()),
        saturating_pow(x.field().order(), end.dim()),
    )?;
    let mut coeffs = vec![0u8; end.dim()];
    loop {
        let phi = end.element(&coeffs);
        if !end.is_nilpotent(&phi) && !end.is_invertible(&phi) {
            return Ok(false);
        }
        if !increment_digits(&mut coeffs, x.field().p()) {
            return Ok(true);
        }
    }
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(HallError::mismatch(what()))
    }
}

pub fn certify_construction(c: Construction, limits: &Limits) -> Result<ConstructionReport> {
    let (cert, nilpotent_context) = match c {
        Construction::SocleSplit => {
            let q = quiver("quiver A3source\nvertex 1 2 3\narrow a: 2 -> 1\narrow b: 2 -> 3");
            let (p2, _) = proj_inj(&q, F2, 1)?;
            let s2 = Representation::simple(q.clone(), F2, 1);
            let cert = socle_split_certificate(&p2, &s2, 2, limits)?;
            (cert, false)
        }
        Construction::Zigzag => {
            let q = quiver(
                "quiver zigzag\nvertex 1 2 3 4\narrow a: 2 -> 1\narrow b: 2 -> 3\narrow c: 4 -> 3",
            );
            let one = m(&[[1]]);
            let x = rep(&q, &[1, 1, 1, 1], vec![one.clone(), one.clone(), one]);
            let sub = Representation::semisimple(q.clone(), F2, vec![1, 0, 1, 0]);
            let quot = Representation::semisimple(q.clone(), F2, vec![0, 1, 0, 1]);
            (
                Certificate::build(&quot, &sub, &x, 1, Mode::Subring, false, c.name(), limits)?,
                false,
            )
        }
        Construction::FourSubspace => {
            let q = quiver(
                "quiver D4in\nvertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 3 -> 2\narrow c: 4 -> 2",
            );
            let x = rep(
                &q,
                &[1, 2, 1, 1],
                vec![m(&[[1], [0]]), m(&[[0], [1]]), m(&[[1], [1]])],
            );
            let d = loewy_data(&x)?;
            (
                Certificate::build(
                    &d.top,
                    &d.radical.module,
                    &x,
                    1,
                    Mode::Subring,
                    false,
                    c.name(),
                    limits,
                )?,
                false,
            )
        }
        Construction::Kronecker => {
            let q = quiver("quiver kronecker\nvertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2");
            let x = rep(
                &q,
                &[3, 2],
                vec![m(&[[1, 0, 0], [0, 1, 0]]), m(&[[0, 1, 0], [0, 0, 1]])],
            );
            let d = loewy_data(&x)?;
            (
                Certificate::build(
                    &d.top,
                    &d.socle.module,
                    &x,
                    1,
                    Mode::Subring,
                    false,
                    c.name(),
                    limits,
                )?,
                false,
            )
        }
        Construction::LoopWithTail => {
            let q = quiver("quiver Q6\nvertex 1 2\narrow l: 1 -> 1\narrow a: 2 -> 1");
            let quot = rep(&q, &[1, 1], vec![m(&[[0]]), m(&[[0]])]);
            let f = m(&[[0, 0, 0], [1, 0, 0], [0, 0, 0]]);
            let sub = rep(&q, &[3, 0], vec![f, Matrix::zeros(3, 0)]);
            let g1 = m(&[[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]);
            let g2 = m(&[[0], [1], [0], [1]]);
            let x = rep(&q, &[4, 1], vec![g1, g2]);
            (
                Certificate::build(&quot, &sub, &x, 1, Mode::Subring, true, c.name(), limits)?,
                true,
            )
        }
        Construction::DoubleLoop => {
            let q = quiver("quiver Q8\nvertex 1\narrow x: 1 -> 1\narrow y: 1 -> 1");
            let zero2 = rep(&q, &[2], vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2)]);
            let g1 = m(&[[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]]);
            let g2 = m(&[[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]);
            let x = rep(&q, &[4], vec![g1, g2]);
            (
                Certificate::build(&zero2, &zero2, &x, 1, Mode::Subring, true, c.name(), limits)?,
                true,
            )
        }
    };
    debug_assert_eq!(cert.nilpotent, nilpotent_context);
    let (_, _, _, x) = cert.modules()?;
    let d = loewy_data(&x)?;
    let report = ConstructionReport {
        construction: c,
        end_dim: end_algebra(&x)?.dim(),
        local: is_local(&x, limits)?,
        socle_dims: d.socle.module.dims().to_vec(),
        top_dims: d.top.dims().to_vec(),
        certificate: Certificate {
            origin: c.name().to_string(),
            ..cert
        },
    };
    check_expectations(&report)?;
    Ok(report)
}

fn dims_of(j: &crate::rep::RepJson, order: &[String]) -> Vec<usize> {
    order
        .iter()
        .map(|v| j.dims.get(v).copied().unwrap_or(0))
        .collect()
}

/// The facts each construction is known to exhibit; any difference is a regression.
fn check_expectations(r: &ConstructionReport) -> Result<()> {
    let c = &r.certificate;
    let order = &c.quiver.vertices;
    let (md, nd, xd) = (
        dims_of(&c.m, order),
        dims_of(&c.n, order),
        dims_of(&c.x, order),
    );
    let name = r.construction.name();
    let want = |cond: bool, what: &str| expect(cond, || format!("{name}: {what}"));
    match r.construction {
        Construction::SocleSplit => {
            want(
                c.mode == Mode::LeftIdeal && c.r == 2,
                "left-ideal violation at r = 2",
            )?;
            want(
                c.s.x == 2 && c.s.n == 3,
                "X = P(2) ⊕ S_2 with submodule S_1 ⊕ S_3 ⊕ S_2",
            )?;
            want(xd == [1, 2, 1], "X has dimension (1,2,1)")?;
        }
        Construction::Zigzag => {
            want(
                nd == [1, 0, 1, 0] && md == [0, 1, 0, 1],
                "submodule (1,0,1,0), quotient (0,1,0,1)",
            )?;
            want(c.s.x == 1 && r.end_dim == 1, "indecomposable middle term")?;
        }
        Construction::FourSubspace => {
            want(xd == [1, 2, 1, 1], "dimension vector (1,2,1,1)")?;
            want(c.s.x == 1 && r.local, "indecomposable middle term")?;
            want(
                c.s.n == 2 && c.s.m == 3,
                "radical S_2^2 and top S_1 ⊕ S_3 ⊕ S_4",
            )?;
        }
        Construction::Kronecker => {
            want(
                xd == [3, 2] && c.s.x == 1,
                "indecomposable of dimension (3,2)",
            )?;
            want(
                r.socle_dims == [0, 2] && nd == [0, 2] && c.s.n == 2,
                "socle S_2^2",
            )?;
            want(
                r.top_dims == [3, 0] && md == [3, 0] && c.s.m == 3,
                "top S_1^3",
            )?;
        }
        Construction::LoopWithTail => {
            want(
                xd == [4, 1] && nd == [3, 0] && md == [1, 1],
                "dimensions (4,1) = (3,0) + (1,1)",
            )?;
            want(
                r.end_dim == 4 && r.local && c.s.x == 1,
                "End dim 4 and local",
            )?;
            want(c.s.m == 2 && c.s.n == 2, "both factors decomposable")?;
        }
        Construction::DoubleLoop => {
            want(xd == [4] && nd == [2] && md == [2], "dimension 4 = 2 + 2")?;
            want(
                r.end_dim == 6 && r.local && c.s.x == 1,
                "End dim 6 and local",
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in Construction::ALL {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert!("lemma".parse::<Construction>().is_err());
    }

    #[test]
    fn every_construction_certifies() {
        for c in Construction::ALL {
            let r =
                certify_construction(c, &Limits::default()).unwrap_or_else(|e| panic!("{c}: {e}"));
            assert!(r.certificate.hall_number >= 1);
        }
    }
}
