//! Radical, socle, top and radical layers; indecomposable projectives and
//! injectives of acyclic quivers.
//!
//! The arrow-image and arrow-kernel formulas used here are valid for
//! nilpotent representations (in particular for every representation of an
//! acyclic quiver). Other representations are rejected.

use std::sync::Arc;

use crate::algebra::{Matrix, PrimeField, Subspace};
use crate::error::{HallError, Result};
use crate::quiver::Quiver;

use super::Representation;

/// A subrepresentation together with its subspace embedding.
#[derive(Clone, Debug)]
pub struct SubRep {
    pub module: Representation,
    pub subspaces: Vec<Subspace>,
}

#[derive(Clone, Debug)]
pub struct LoewyData {
    pub radical: SubRep,
    pub socle: SubRep,
    /// `M / rad M`.
    pub top: Representation,
    /// `M / soc M`.
    pub socle_quotient: Representation,
}

fn require_loewy(m: &Representation) -> Result<()> {
    if m.is_nilpotent() {
        Ok(())
    } else {
        Err(HallError::unsupported(format!(
            "radical and socle of a non-nilpotent representation of {} (it has an oriented cycle)",
            m.quiver().name()
        )))
    }
}

/// `Σ_{t(a)=j} M_a(U_{s(a)})` for each vertex `j`.
fn arrow_image(m: &Representation, u: &[Subspace]) -> Vec<Subspace> {
    let f = m.field();
    let q = m.quiver();
    (0..q.vertex_count())
        .map(|j| {
            let mut acc = Subspace::zero(m.dims()[j]);
            for (k, a) in q.arrows().iter().enumerate() {
                if a.tgt == j {
                    acc = acc.sum(&u[a.src].image_under(&m.maps()[k], f), f);
                }
            }
            acc
        })
        .collect()
}

fn socle_subspaces(m: &Representation) -> Vec<Subspace> {
    let f = m.field();
    let q = m.quiver();
    (0..q.vertex_count())
        .map(|i| {
            let mut acc = Subspace::full(m.dims()[i]);
            for (k, a) in q.arrows().iter().enumerate() {
                if a.src == i {
                    acc = acc.intersect(&m.maps()[k].kernel_basis(f), f);
                }
            }
            acc
        })
        .collect()
}

pub fn loewy_data(m: &Representation) -> Result<LoewyData> {
    require_loewy(m)?;
    let full: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::full(d)).collect();
    let rad = arrow_image(m, &full);
    let soc = socle_subspaces(m);
    Ok(LoewyData {
        radical: SubRep {
            module: m.restrict(&rad),
            subspaces: rad.clone(),
        },
        socle: SubRep {
            module: m.restrict(&soc),
            subspaces: soc.clone(),
        },
        top: m.quotient(&rad),
        socle_quotient: m.quotient(&soc),
    })
}

/// Dimension vectors of the layers `rad^k M / rad^{k+1} M`, top first.
pub fn loewy_layers(m: &Representation) -> Result<Vec<Vec<usize>>> {
    require_loewy(m)?;
    let mut cur: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::full(d)).collect();
    let mut layers = Vec::new();
    while cur.iter().any(|s| !s.is_zero()) {
        let next = arrow_image(m, &cur);
        layers.push(
            cur.iter()
                .zip(&next)
                .map(|(a, b)| a.dim() - b.dim())
                .collect(),
        );
        cur = next;
    }
    Ok(layers)
}

/// Every radical layer has total dimension at most one.
pub fn is_uniserial(m: &Representation) -> Result<bool> {
    Ok(loewy_layers(m)?
        .iter()
        .all(|l| l.iter().sum::<usize>() <= 1))
}

/// The projective cover `P(i)` and injective envelope `I(i)` of `S_i` on an
/// acyclic quiver.
pub fn proj_inj(
    q: &Arc<Quiver>,
    field: PrimeField,
    vertex: usize,
) -> Result<(Representation, Representation)> {
    if q.has_oriented_cycle() {
        return Err(HallError::unsupported(format!(
            "{} has an oriented cycle, so its path algebra is infinite dimensional",
            q.name()
        )));
    }
    if vertex >= q.vertex_count() {
        return Err(HallError::invalid(format!(
            "vertex index {vertex} out of range"
        )));
    }
    let nv = q.vertex_count();

    // P(i): paths from i, graded by their end; arrow a sends p to p followed by a
    let from = q.paths_from(vertex)?;
    let mut at: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); nv];
    for (end, path) in &from {
        at[*end].push(path);
    }
    let dims: Vec<usize> = at.iter().map(|v| v.len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut mat = Matrix::zeros(dims[a.tgt], dims[a.src]);
            for (c, p) in at[a.src].iter().enumerate() {
                let mut ext = (*p).clone();
                ext.push(k);
                let r = at[a.tgt]
                    .iter()
                    .position(|x| **x == ext)
                    .expect("extended path is listed");
                mat.set(r, c, 1);
            }
            mat
        })
        .collect();
    let p = Representation::new(q.clone(), field, dims, maps)?;

    // I(i): paths to i, graded by their start; arrow a sends a path q from
    // s(a) to i to the path p from t(a) to i with q = a followed by p, or to 0
    let to = q.paths_to(vertex)?;
    let mut at: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); nv];
    for (start, path) in &to {
        at[*start].push(path);
    }
    let dims: Vec<usize> = at.iter().map(|v| v.len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut mat = Matrix::zeros(dims[a.tgt], dims[a.src]);
            for (c, path) in at[a.src].iter().enumerate() {
                if path.first() == Some(&k) {
                    let rest = &path[1..];
                    let r = at[a.tgt]
                        .iter()
                        .position(|x| x.as_slice() == rest)
                        .expect("tail path is listed");
                    mat.set(r, c, 1);
                }
            }
            mat
        })
        .collect();
    let i = Representation::new(q.clone(), field, dims, maps)?;
    Ok((p, i))
}
