//! `Ext^1(M, N)` as cocycles modulo coboundaries, and the extensions it
//! parameterizes.
//!
//! A cocycle is a tuple `φ_a ∈ Hom_k(M_{s(a)}, N_{t(a)})`; coboundaries are
//! `δ(f)_a = f_{t(a)} M_a - N_a f_{s(a)}`. The extension attached to `φ` has
//! maps `[[N_a, φ_a], [0, M_a]]`, so `N` is its submodule and `M` its quotient.

use crate::algebra::{increment_digits, Matrix, Subspace};
use crate::error::Result;
use crate::limits::{saturating_pow, Limits};
use crate::quiver::Quiver;

use super::Representation;

#[derive(Clone, Debug)]
pub struct ExtSpace {
    m: Representation,
    n: Representation,
    /// Offset of each arrow's block inside the cocycle coordinates.
    offsets: Vec<usize>,
    dim_z: usize,
    dim_b: usize,
    /// Cocycle coordinates whose unit vectors span a complement of the coboundaries.
    complement: Vec<usize>,
}

impl ExtSpace {
    /// Extensions `0 -> n -> X -> m -> 0`.
    pub fn new(m: &Representation, n: &Representation) -> Result<ExtSpace> {
        m.check_context(n)?;
        let f = m.field();
        let q = m.quiver();
        let mut offsets = Vec::with_capacity(q.arrow_count());
        let mut dim_z = 0;
        for a in q.arrows() {
            offsets.push(dim_z);
            dim_z += n.dims()[a.tgt] * m.dims()[a.src];
        }

        let mut rows: Vec<Vec<u8>> = Vec::new();
        for i in 0..q.vertex_count() {
            for r in 0..n.dims()[i] {
                for c in 0..m.dims()[i] {
                    // δ of the elementary map E_{rc} at vertex i
                    let mut v = vec![0u8; dim_z];
                    for (k, a) in q.arrows().iter().enumerate() {
                        let cols = m.dims()[a.src];
                        let at = |rr: usize, cc: usize| offsets[k] + rr * cols + cc;
                        if a.tgt == i {
                            // (E_{rc} M_a)[r][j] = M_a[c][j]
                            for j in 0..cols {
                                let x = m.maps()[k].get(c, j);
                                if x != 0 {
                                    v[at(r, j)] = f.add(v[at(r, j)], x);
                                }
                            }
                        }
                        if a.src == i {
                            // (N_a E_{rc})[j][c] = N_a[j][r]
                            for j in 0..n.dims()[a.tgt] {
                                let x = n.maps()[k].get(j, r);
                                if x != 0 {
                                    v[at(j, c)] = f.sub(v[at(j, c)], x);
                                }
                            }
                        }
                    }
                    rows.push(v);
                }
            }
        }
        let b = Subspace::from_vectors(&rows, dim_z, f);
        Ok(ExtSpace {
            m: m.clone(),
            n: n.clone(),
            offsets,
            dim_z,
            dim_b: b.dim(),
            complement: b.complement_columns(),
        })
    }

    /// `dim Ext^1(M, N)`.
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn cocycle_dim(&self) -> usize {
        self.dim_z
    }

    pub fn coboundary_dim(&self) -> usize {
        self.dim_b
    }

    /// Number of extension classes, `p^{dim Ext}`.
    pub fn class_count(&self) -> u128 {
        saturating_pow(self.m.field().order(), self.dim())
    }

    /// The cocycle with the given coordinates on the complement of the coboundaries.
    pub fn cocycle(&self, coeffs: &[u8]) -> Vec<Matrix> {
        let q = self.m.quiver();
        let mut flat = vec![0u8; self.dim_z];
        for (&pos, &c) in self.complement.iter().zip(coeffs) {
            flat[pos] = c;
        }
        q.arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (r, c) = (self.n.dims()[a.tgt], self.m.dims()[a.src]);
                Matrix::from_data(
                    r,
                    c,
                    flat[self.offsets[k]..self.offsets[k] + r * c].to_vec(),
                )
            })
            .collect()
    }

    /// The middle term `X_φ`.
    pub fn extension(&self, phi: &[Matrix]) -> Representation {
        let (m, n) = (&self.m, &self.n);
        let q = m.quiver();
        let dims: Vec<usize> = n.dims().iter().zip(m.dims()).map(|(a, b)| a + b).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut x = Matrix::zeros(dims[a.tgt], dims[a.src]);
                x.set_block(0, 0, &n.maps()[k]);
                x.set_block(0, n.dims()[a.src], &phi[k]);
                x.set_block(n.dims()[a.tgt], n.dims()[a.src], &m.maps()[k]);
                x
            })
            .collect();
        Representation::new(q.clone(), m.field(), dims, maps).expect("block shapes are consistent")
    }

    /// One middle term per element of `Ext^1(M, N)`, in the lexicographic order
    /// of the complement coordinates. Distinct classes can give isomorphic
    /// middle terms; callers deduplicate.
    pub fn middle_terms(&self, limits: &Limits) -> Result<Vec<Representation>> {
        limits.check(
            || {
                format!(
                    "extension classes of {} by {}",
                    self.m.dim_label(),
                    self.n.dim_label()
                )
            },
            self.class_count(),
        )?;
        let p = self.m.field().p();
        let mut coeffs = vec![0u8; self.dim()];
        let mut out = Vec::with_capacity(self.class_count() as usize);
        loop {
            out.push(self.extension(&self.cocycle(&coeffs)));
            if !increment_digits(&mut coeffs, p) {
                break;
            }
        }
        Ok(out)
    }
}

pub fn ext_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(ExtSpace::new(m, n)?.dim())
}

/// The Euler form on dimension vectors: `Σ_i d_i e_i - Σ_a d_{s(a)} e_{t(a)}`.
pub fn euler_char(q: &Quiver, d: &[usize], e: &[usize]) -> i64 {
    let verts: i64 = d.iter().zip(e).map(|(&x, &y)| (x * y) as i64).sum();
    let arrows: i64 = q
        .arrows()
        .iter()
        .map(|a| (d[a.src] * e[a.tgt]) as i64)
        .sum();
    verts - arrows
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::PrimeField;

    const F2: PrimeField = PrimeField::F2;

    #[test]
    fn kronecker_simples() {
        let q =
            Arc::new(Quiver::new("k", &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap());
        let s1 = Representation::simple(q.clone(), F2, 0);
        let s2 = Representation::simple(q.clone(), F2, 1);
        assert_eq!(ext_dim(&s1, &s2).unwrap(), 2);
        assert_eq!(ext_dim(&s2, &s1).unwrap(), 0);
        assert_eq!(euler_char(&q, &[1, 0], &[0, 1]), -2);
    }

    #[test]
    fn loop_simple_self_extensions() {
        let q = Arc::new(Quiver::new("loop", &["1"], &[("x", "1", "1")]).unwrap());
        let s = Representation::simple(q, F2, 0);
        let ext = ExtSpace::new(&s, &s).unwrap();
        assert_eq!(ext.dim(), 1);
        let terms = ext.middle_terms(&Limits::default()).unwrap();
        assert_eq!(terms.len(), 2);
        assert!(terms[0].maps()[0].is_zero());
        assert_eq!(
            terms[1].maps()[0],
            Matrix::from_literal(&[[0, 1], [0, 0]], F2)
        );
    }

    #[test]
    fn the_submodule_sits_in_the_first_coordinates() {
        let q = Arc::new(Quiver::new("L2", &["1", "2"], &[("a", "1", "2")]).unwrap());
        let s1 = Representation::simple(q.clone(), F2, 0);
        let s2 = Representation::simple(q, F2, 1);
        let ext = ExtSpace::new(&s1, &s2).unwrap();
        assert_eq!(ext.dim(), 1);
        let x = ext.extension(&ext.cocycle(&[1]));
        assert_eq!(x.dims(), &[1, 1]);
        assert_eq!(x.maps()[0], Matrix::identity(1));
    }
}
