//! Krull–Schmidt decomposition by Fitting splittings, certified
//! indecomposability, and isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{increment_digits, Matrix, Subspace};
use crate::error::Result;
use crate::limits::{saturating_pow, Limits};

use super::hom::{end_algebra, hom_space, EndAlgebra};
use super::{RepJson, Representation};

/// Number of random endomorphisms tried before falling back to a full scan.
const RANDOM_CANDIDATES: usize = 24;
/// Below this many elements the reduced endomorphism ring is scanned right away.
const EAGER_SCAN: u128 = 1 << 12;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    /// One representative per isomorphism class of indecomposable summands,
    /// in the order first found.
    pub summands: Vec<Summand>,
    /// Number of indecomposable summands counted with multiplicity.
    pub s: usize,
}

#[derive(Serialize)]
pub struct SummandJson {
    pub dims: Vec<usize>,
    pub multiplicity: usize,
    pub module: RepJson,
}

#[derive(Serialize)]
pub struct DecompositionJson {
    pub s: usize,
    pub summands: Vec<SummandJson>,
}

impl DecompositionReport {
    pub fn to_json_value(&self) -> DecompositionJson {
        DecompositionJson {
            s: self.s,
            summands: self
                .summands
                .iter()
                .map(|x| SummandJson {
                    dims: x.module.dims().to_vec(),
                    multiplicity: x.multiplicity,
                    module: x.module.to_json_value(),
                })
                .collect(),
        }
    }

    pub fn is_indecomposable(&self) -> bool {
        self.s == 1
    }
}

/// Fitting decomposition for `φ ∈ End(M)`: the pieces `ker φ^n` and
/// `im φ^n` with `n = dim M`, when both are nonzero.
pub fn fitting_split(
    m: &Representation,
    phi: &[Matrix],
) -> Option<(Representation, Representation)> {
    let (kers, ims) = fitting_subspaces(m, phi);
    if kers.iter().all(|k| k.is_zero()) || ims.iter().all(|i| i.is_zero()) {
        return None;
    }
    Some((m.restrict(&kers), m.restrict(&ims)))
}

fn fitting_subspaces(m: &Representation, phi: &[Matrix]) -> (Vec<Subspace>, Vec<Subspace>) {
    let f = m.field();
    let n = m.total_dim().max(1);
    let powers: Vec<Matrix> = phi.iter().map(|b| b.pow(n, f)).collect();
    let kers = powers.iter().map(|p| p.kernel_basis(f)).collect();
    let ims = powers.iter().map(|p| p.image(f)).collect();
    (kers, ims)
}

/// Looks for a nontrivial direct-sum splitting. `Ok(None)` certifies that
/// `m` is indecomposable.
fn split_once(
    m: &Representation,
    limits: &Limits,
) -> Result<Option<(Representation, Representation)>> {
    if m.total_dim() <= 1 {
        return Ok(None);
    }
    let end = end_algebra(m)?;
    if end.dim() == 1 {
        // End(M) = k, which is local
        return Ok(None);
    }
    let reduced = if m.is_nilpotent() {
        Some(TopReduction::new(m, &end))
    } else {
        None
    };
    if let Some(r) = &reduced {
        if saturating_pow(m.field().order(), r.lifts.len()) <= EAGER_SCAN {
            return r.scan(m, &end, limits);
        }
    }
    if let Some(split) = try_candidates(m, &end, limits) {
        return Ok(Some(split));
    }
    match &reduced {
        Some(r) => r.scan(m, &end, limits),
        None => full_scan(m, &end, limits),
    }
}

fn try_split(
    m: &Representation,
    end: &EndAlgebra,
    phi: &[Matrix],
) -> Option<(Representation, Representation)> {
    for lambda in m.field().elements() {
        let psi = end.shift(phi, lambda);
        if let Some(s) = fitting_split(m, &psi) {
            return Some(s);
        }
    }
    None
}

fn try_candidates(
    m: &Representation,
    end: &EndAlgebra,
    limits: &Limits,
) -> Option<(Representation, Representation)> {
    let d = end.dim();
    let mut coeffs = vec![0u8; d];
    for i in 0..d {
        coeffs[i] = 1;
        if let Some(s) = try_split(m, end, &end.element(&coeffs)) {
            return Some(s);
        }
        coeffs[i] = 0;
    }
    for i in 0..d {
        for j in i + 1..d {
            coeffs[i] = 1;
            coeffs[j] = 1;
            let found = try_split(m, end, &end.element(&coeffs));
            coeffs[i] = 0;
            coeffs[j] = 0;
            if found.is_some() {
                return found;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    for _ in 0..RANDOM_CANDIDATES {
        let c: Vec<u8> = (0..d).map(|_| rng.gen_range(0..m.field().p())).collect();
        if let Some(s) = try_split(m, end, &end.element(&c)) {
            return Some(s);
        }
    }
    None
}

/// Exhaustive search of `End(M)` for an element that is neither nilpotent
/// nor invertible.
fn full_scan(
    m: &Representation,
    end: &EndAlgebra,
    limits: &Limits,
) -> Result<Option<(Representation, Representation)>> {
    let size = saturating_pow(m.field().order(), end.dim());
    limits.check(
        || {
            format!(
                "endomorphism ring of dimension {} over {}",
                end.dim(),
                m.field()
            )
        },
        size,
    )?;
    let mut coeffs = vec![0u8; end.dim()];
    while increment_digits(&mut coeffs, m.field().p()) {
        let phi = end.element(&coeffs);
        if !end.is_nilpotent(&phi) && !end.is_invertible(&phi) {
            return Ok(Some(
                fitting_split(m, &phi).expect("a non-nilpotent non-unit splits"),
            ));
        }
    }
    Ok(None)
}

/// The image of `End(M)` in `End_k(top M)` for nilpotent `M`.
///
/// Endomorphisms with image inside `rad M` form a nilpotent ideal, so
/// `End(M)` is local exactly when this image is, and the scan only has to
/// cover `p^{dim}` elements of the image.
struct TopReduction {
    top_dims: Vec<usize>,
    /// Indices into the End basis whose images form a basis of the image ring.
    lifts: Vec<usize>,
    images: Vec<Vec<Matrix>>,
}

impl TopReduction {
    fn new(m: &Representation, end: &EndAlgebra) -> Self {
        let f = m.field();
        let q = m.quiver();
        let rad: Vec<Subspace> = (0..q.vertex_count())
            .map(|j| {
                let mut rows = Vec::new();
                for (k, a) in q.arrows().iter().enumerate() {
                    if a.tgt == j {
                        let t = m.maps()[k].transpose();
                        rows.extend(t.to_rows());
                    }
                }
                Subspace::from_vectors(&rows, m.dims()[j], f)
            })
            .collect();
        let comps: Vec<Vec<usize>> = rad.iter().map(|r| r.complement_columns()).collect();
        let top_dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let flat_len: usize = top_dims.iter().map(|d| d * d).sum();

        let mut span = Subspace::zero(flat_len);
        let mut lifts = Vec::new();
        let mut images = Vec::new();
        for (idx, phi) in end.basis.iter().enumerate() {
            let bar: Vec<Matrix> = phi
                .iter()
                .enumerate()
                .map(|(j, pj)| {
                    let c = &comps[j];
                    let mut out = Matrix::zeros(c.len(), c.len());
                    for (col, &cc) in c.iter().enumerate() {
                        let w = rad[j].reduce(&pj.column(cc), f);
                        for (row, &rr) in c.iter().enumerate() {
                            out.set(row, col, w[rr]);
                        }
                    }
                    out
                })
                .collect();
            let flat: Vec<u8> = bar.iter().flat_map(|b| b.data().iter().copied()).collect();
            if !span.contains(&flat, f) {
                span = span.sum(&Subspace::from_vectors(&[flat], flat_len, f), f);
                lifts.push(idx);
                images.push(bar);
            }
        }
        TopReduction {
            top_dims,
            lifts,
            images,
        }
    }

    fn scan(
        &self,
        m: &Representation,
        end: &EndAlgebra,
        limits: &Limits,
    ) -> Result<Option<(Representation, Representation)>> {
        let f = m.field();
        let size = saturating_pow(f.order(), self.lifts.len());
        limits.check(
            || {
                format!(
                    "endomorphism ring of the top, dimension {} over {}",
                    self.lifts.len(),
                    f
                )
            },
            size,
        )?;
        let mut coeffs = vec![0u8; self.lifts.len()];
        let shape: Vec<(usize, usize)> = self.top_dims.iter().map(|&d| (d, d)).collect();
        while increment_digits(&mut coeffs, f.p()) {
            let bar = super::hom::combine(&self.images, &coeffs, &shape, f);
            let nil = bar.iter().all(|b| b.is_nilpotent(f));
            let unit = bar.iter().all(|b| b.is_invertible(f));
            if !nil && !unit {
                let mut full = vec![0u8; end.dim()];
                for (&i, &c) in self.lifts.iter().zip(&coeffs) {
                    full[i] = c;
                }
                let phi = end.element(&full);
                return Ok(Some(
                    fitting_split(m, &phi).expect("a lift of a non-nilpotent non-unit splits"),
                ));
            }
        }
        Ok(None)
    }
}

/// Whether `m` is nonzero and indecomposable.
pub fn is_indecomposable(m: &Representation, limits: &Limits) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(split_once(m, limits)?.is_none())
}

fn collect_indecomposables(
    m: &Representation,
    limits: &Limits,
    out: &mut Vec<Representation>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    match split_once(m, limits)? {
        None => out.push(m.clone()),
        Some((a, b)) => {
            collect_indecomposables(&a, limits, out)?;
            collect_indecomposables(&b, limits, out)?;
        }
    }
    Ok(())
}

/// Full Krull–Schmidt decomposition with summands grouped by isomorphism class.
pub fn decompose(m: &Representation, limits: &Limits) -> Result<DecompositionReport> {
    let mut parts = Vec::new();
    collect_indecomposables(m, limits, &mut parts)?;
    let s = parts.len();
    let mut summands: Vec<Summand> = Vec::new();
    for p in parts {
        let mut found = false;
        for x in summands.iter_mut() {
            if iso_indecomposable(&x.module, &p)? {
                x.multiplicity += 1;
                found = true;
                break;
            }
        }
        if !found {
            summands.push(Summand {
                module: p,
                multiplicity: 1,
            });
        }
    }
    Ok(DecompositionReport { summands, s })
}

/// Isomorphism of two indecomposables. `End(A)` is local, so `A ≅ B` iff some
/// composite `g ∘ f` of basis elements `f ∈ Hom(A,B)`, `g ∈ Hom(B,A)` is a unit.
/// The composites span the ideal `Hom(B,A)∘Hom(A,B)`, which is proper iff `A ≇ B`.
pub(crate) fn iso_indecomposable(a: &Representation, b: &Representation) -> Result<bool> {
    if a.dims() != b.dims() {
        return Ok(false);
    }
    if a.maps() == b.maps() {
        return Ok(true);
    }
    let f = a.field();
    let ab = hom_space(a, b)?;
    if ab.dim() == 0 {
        return Ok(false);
    }
    let ba = hom_space(b, a)?;
    for fi in &ab.basis {
        for gj in &ba.basis {
            if gj.iter().zip(fi).all(|(g, h)| g.mul(h, f).is_invertible(f)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism test: dimension vectors, cheap invariants, then matching of
/// Krull–Schmidt summands.
pub fn is_isomorphic(m: &Representation, n: &Representation, limits: &Limits) -> Result<bool> {
    m.check_context(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.maps() == n.maps() {
        return Ok(true);
    }
    if super::invariants::rank_profile(m, 2) != super::invariants::rank_profile(n, 2) {
        return Ok(false);
    }
    let dm = decompose(m, limits)?;
    let dn = decompose(n, limits)?;
    if dm.s != dn.s || dm.summands.len() != dn.summands.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.summands.len()];
    for x in &dm.summands {
        let mut hit = false;
        for (k, y) in dn.summands.iter().enumerate() {
            if !used[k]
                && x.multiplicity == y.multiplicity
                && iso_indecomposable(&x.module, &y.module)?
            {
                used[k] = true;
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}
