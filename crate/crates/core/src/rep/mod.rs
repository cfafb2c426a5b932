//! Representations of quivers over prime fields.
//!
//! A representation stores one dimension per vertex and one matrix per arrow.
//! The matrix of an arrow `a` has shape `dims[t(a)] x dims[s(a)]` and acts on
//! column vectors.

mod decompose;
mod enumerate;
mod ext;
mod hom;
mod invariants;
mod loewy;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, PrimeField, Subspace};
use crate::error::{HallError, Result};
use crate::quiver::Quiver;

pub use decompose::{
    decompose, fitting_split, is_indecomposable, is_isomorphic, DecompositionReport, Summand,
};
pub use enumerate::{
    dimension_vectors, enumerate_indecomposables, enumerate_reps, enumerate_reps_up_to,
};
pub use ext::{euler_char, ext_dim, ExtSpace};
pub use hom::{end_algebra, hom_space, EndAlgebra, HomSpace};
pub use invariants::{invariants, Invariants};
pub use loewy::{is_uniserial, loewy_data, loewy_layers, proj_inj, LoewyData, SubRep};

#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Rep[{} over {}; dims {:?}",
            self.quiver.name(),
            self.field,
            self.dims
        )?;
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            write!(f, "; {}={:?}", a.label, m.to_rows())?;
        }
        write!(f, "]")
    }
}

/// Wire form: `{"quiver", "p", "dims": {vertex: dim}, "maps": {label: rows}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub quiver: String,
    pub p: u32,
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<u8>>>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: PrimeField,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(HallError::invalid(format!(
                "{} dimensions given for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrow_count() {
            return Err(HallError::invalid(format!(
                "{} maps given for {} arrows",
                maps.len(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.tgt] || m.cols() != dims[a.src] {
                return Err(HallError::invalid(format!(
                    "map {} has shape {}x{}, expected {}x{}",
                    a.label,
                    m.rows(),
                    m.cols(),
                    dims[a.tgt],
                    dims[a.src]
                )));
            }
            if m.data().iter().any(|&x| x >= field.p()) {
                return Err(HallError::invalid(format!(
                    "map {} has entries outside [0, {})",
                    a.label,
                    field.p()
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    /// Builds a representation from literal matrices listed in arrow order.
    pub fn from_literals(
        quiver: &Arc<Quiver>,
        field: PrimeField,
        dims: &[usize],
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        Representation::new(quiver.clone(), field, dims.to_vec(), maps)
    }

    /// The representation with the given dimensions and all maps zero.
    pub fn semisimple(quiver: Arc<Quiver>, field: PrimeField, dims: Vec<usize>) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let n = quiver.vertex_count();
        Representation::semisimple(quiver, field, vec![0; n])
    }

    /// The simple representation `S_v` with `k` at vertex `v`. On a vertex
    /// with a loop this is the nilpotent simple (loop acts as zero).
    pub fn simple(quiver: Arc<Quiver>, field: PrimeField, vertex: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[vertex] = 1;
        Representation::semisimple(quiver, field, dims)
    }

    #[inline]
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[inline]
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, label: &str) -> Option<&Matrix> {
        self.quiver.arrow_index(label).map(|i| &self.maps[i])
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Offsets of the vertex blocks inside the total space `⊕_i M_i`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// Compact byte encoding of the maps; equal bytes and equal dims mean
    /// equal representations over the same quiver.
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(
            self.dims.len() + self.maps.iter().map(|m| m.data().len()).sum::<usize>(),
        );
        out.extend(self.dims.iter().map(|&d| d as u8));
        for m in &self.maps {
            out.extend_from_slice(m.data());
        }
        out
    }

    pub fn same_context(&self, other: &Representation) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver)
    }

    pub(crate) fn check_context(&self, other: &Representation) -> Result<()> {
        if self.field != other.field {
            return Err(HallError::mismatch(format!(
                "fields differ: {} vs {}",
                self.field, other.field
            )));
        }
        if !(Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver) {
            return Err(HallError::mismatch(format!(
                "quivers differ: {} vs {}",
                self.quiver.name(),
                other.quiver.name()
            )));
        }
        Ok(())
    }

    /// Blockwise direct sum. The empty sum needs a context, so it is not
    /// accepted here; see [`direct_sum`].
    pub fn oplus(&self, other: &Representation) -> Result<Representation> {
        self.check_context(other)?;
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| Matrix::block_diag(&[a, b]))
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims,
            maps,
        })
    }

    /// `self^{⊕ n}`.
    pub fn power(&self, n: usize) -> Representation {
        let mut out = Representation::zero(self.quiver.clone(), self.field);
        for _ in 0..n {
            out = out.oplus(self).expect("same context");
        }
        out
    }

    /// The total arrow operator on `⊕_i M_i`: block `(t(a), s(a))` is the sum
    /// of the arrow matrices from `s(a)` to `t(a)`.
    pub fn total_operator(&self) -> Matrix {
        let n = self.total_dim();
        let off = self.offsets();
        let mut t = Matrix::zeros(n, n);
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let (r, c) = (off[a.tgt] + i, off[a.src] + j);
                    t.set(r, c, self.field.add(t.get(r, c), m.get(i, j)));
                }
            }
        }
        t
    }

    /// Every sufficiently long path acts as zero. Always true on acyclic quivers.
    pub fn is_nilpotent(&self) -> bool {
        if self.quiver.is_acyclic() {
            return true;
        }
        // Iterate the image of all arrows rather than powering the summed
        // operator: parallel arrows can cancel in the sum.
        let n = self.total_dim();
        let off = self.offsets();
        let mut image = Subspace::full(n);
        for _ in 0..n {
            let mut rows: Vec<Vec<u8>> = Vec::new();
            for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
                for k in 0..image.dim() {
                    let v = image.basis().row(k);
                    let src = &v[off[a.src]..off[a.src] + self.dims[a.src]];
                    let w = m.apply(src, self.field);
                    let mut full = vec![0u8; n];
                    full[off[a.tgt]..off[a.tgt] + self.dims[a.tgt]].copy_from_slice(&w);
                    rows.push(full);
                }
            }
            image = Subspace::from_vectors(&rows, n, self.field);
            if image.is_zero() {
                return true;
            }
        }
        image.is_zero()
    }

    /// Subrepresentation on a tuple of arrow-closed subspaces, in the RREF
    /// bases of the subspaces.
    pub fn restrict(&self, sub: &[Subspace]) -> Representation {
        let f = self.field;
        let dims: Vec<usize> = sub.iter().map(|s| s.dim()).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let (us, ut) = (&sub[a.src], &sub[a.tgt]);
                let mut out = Matrix::zeros(ut.dim(), us.dim());
                for j in 0..us.dim() {
                    let w = m.apply(us.basis().row(j), f);
                    let coords = ut
                        .coordinates(&w, f)
                        .expect("subspaces are closed under the arrows");
                    for (i, c) in coords.into_iter().enumerate() {
                        out.set(i, j, c);
                    }
                }
                out
            })
            .collect();
        Representation {
            quiver: self.quiver.clone(),
            field: f,
            dims,
            maps,
        }
    }

    /// Quotient by a tuple of arrow-closed subspaces, in the basis of standard
    /// vectors at the non-pivot columns.
    pub fn quotient(&self, sub: &[Subspace]) -> Representation {
        let f = self.field;
        let comps: Vec<Vec<usize>> = sub.iter().map(|s| s.complement_columns()).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let (cs, ct) = (&comps[a.src], &comps[a.tgt]);
                let mut out = Matrix::zeros(ct.len(), cs.len());
                for (j, &c) in cs.iter().enumerate() {
                    let w = sub[a.tgt].reduce(&m.column(c), f);
                    for (i, &r) in ct.iter().enumerate() {
                        out.set(i, j, w[r]);
                    }
                }
                out
            })
            .collect();
        Representation {
            quiver: self.quiver.clone(),
            field: f,
            dims,
            maps,
        }
    }

    /// Whether a tuple of subspaces is closed under every arrow.
    pub fn is_closed(&self, sub: &[Subspace]) -> bool {
        self.quiver.arrows().iter().zip(&self.maps).all(|(a, m)| {
            (0..sub[a.src].dim()).all(|j| {
                sub[a.tgt].contains(&m.apply(sub[a.src].basis().row(j), self.field), self.field)
            })
        })
    }

    /// Transport to the opposite quiver by transposing every map (the
    /// vector-space dual in the dual bases).
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: Arc::new(self.quiver.opposite()),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Like [`Representation::dual`], onto a given opposite quiver so that the
    /// results share one `Arc`.
    pub fn dual_onto(&self, opposite: &Arc<Quiver>) -> Result<Representation> {
        if **opposite != self.quiver.opposite() {
            return Err(HallError::mismatch(format!(
                "{} is not the opposite of {}",
                opposite.name(),
                self.quiver.name()
            )));
        }
        Ok(Representation {
            quiver: opposite.clone(),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        })
    }

    /// Regards a representation of a subquiver as one of `big`, with zero
    /// spaces and maps elsewhere. Vertices match by id and arrows by label.
    pub fn extend_by_zero(&self, big: &Arc<Quiver>) -> Result<Representation> {
        let mut dims = vec![0; big.vertex_count()];
        for (i, id) in self.quiver.vertices().iter().enumerate() {
            let j = big.vertex_index(id).ok_or_else(|| {
                HallError::mismatch(format!("vertex {id} is not in {}", big.name()))
            })?;
            dims[j] = self.dims[i];
        }
        let mut maps: Vec<Matrix> = big
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            let j = big.arrow_index(&a.label).ok_or_else(|| {
                HallError::mismatch(format!("arrow {} is not in {}", a.label, big.name()))
            })?;
            let b = &big.arrows()[j];
            if big.vertices()[b.src] != self.quiver.vertices()[a.src]
                || big.vertices()[b.tgt] != self.quiver.vertices()[a.tgt]
            {
                return Err(HallError::mismatch(format!(
                    "arrow {} has different endpoints in {}",
                    a.label,
                    big.name()
                )));
            }
            maps[j] = m.clone();
        }
        Ok(Representation {
            quiver: big.clone(),
            field: self.field,
            dims,
            maps,
        })
    }

    /// Applies `g_{t(a)} M_a g_{s(a)}^{-1}` for a tuple of invertible matrices.
    pub fn conjugate(&self, g: &[Matrix]) -> Result<Representation> {
        let f = self.field;
        let inv: Vec<Matrix> = g
            .iter()
            .map(|m| {
                m.inverse(f)
                    .ok_or_else(|| HallError::invalid("base change is not invertible"))
            })
            .collect::<Result<_>>()?;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| g[a.tgt].mul(m, f).mul(&inv[a.src], f))
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: f,
            dims: self.dims.clone(),
            maps,
        })
    }

    pub fn to_json_value(&self) -> RepJson {
        RepJson {
            quiver: self.quiver.name().to_string(),
            p: self.field.p() as u32,
            dims: self
                .quiver
                .vertices()
                .iter()
                .cloned()
                .zip(self.dims.iter().copied())
                .collect(),
            maps: self
                .quiver
                .arrows()
                .iter()
                .map(|a| a.label.clone())
                .zip(self.maps.iter().map(|m| m.to_rows()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("representation JSON serializes")
    }

    pub fn from_json_value(quiver: &Arc<Quiver>, j: &RepJson) -> Result<Representation> {
        if j.quiver != quiver.name() {
            return Err(HallError::mismatch(format!(
                "module is over {}, not {}",
                j.quiver,
                quiver.name()
            )));
        }
        let field = PrimeField::new(j.p)?;
        for v in j.dims.keys() {
            if quiver.vertex_index(v).is_none() {
                return Err(HallError::invalid(format!("unknown vertex {v} in dims")));
            }
        }
        for l in j.maps.keys() {
            if quiver.arrow_index(l).is_none() {
                return Err(HallError::invalid(format!("unknown arrow {l} in maps")));
            }
        }
        let dims: Vec<usize> = quiver
            .vertices()
            .iter()
            .map(|v| j.dims.get(v).copied().unwrap_or(0))
            .collect();
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.tgt], dims[a.src]);
                match j.maps.get(&a.label) {
                    None if r * c == 0 => Ok(Matrix::zeros(r, c)),
                    None => Err(HallError::invalid(format!(
                        "missing map for arrow {}",
                        a.label
                    ))),
                    Some(rows) => {
                        if rows.len() != r {
                            return Err(HallError::invalid(format!(
                                "map {} has {} rows, expected {r}",
                                a.label,
                                rows.len()
                            )));
                        }
                        Matrix::from_rows(rows, c, field)
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(quiver.clone(), field, dims, maps)
    }

    pub fn from_json(quiver: &Arc<Quiver>, s: &str) -> Result<Representation> {
        let j: RepJson = serde_json::from_str(s)?;
        Representation::from_json_value(quiver, &j)
    }

    /// Short human label such as `(2,1)` for the dimension vector.
    pub fn dim_label(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Direct sum of a list; the empty list gives the zero representation of the context.
pub fn direct_sum(
    quiver: &Arc<Quiver>,
    field: PrimeField,
    ms: &[Representation],
) -> Result<Representation> {
    let mut out = Representation::zero(quiver.clone(), field);
    for m in ms {
        out = out.oplus(m)?;
    }
    Ok(out)
}
