use crate::algebra::{Matrix, PrimeField};
use crate::error::Result;

use super::Representation;

/// A basis of `Hom(M, N)`: tuples `(φ_i)` of `dims_N(i) x dims_M(i)` matrices
/// with `φ_{t(a)} M_a = N_a φ_{s(a)}` for every arrow.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Vec<Matrix>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_k basis_k`.
    pub fn combine(
        &self,
        coeffs: &[u8],
        shape: &[(usize, usize)],
        field: PrimeField,
    ) -> Vec<Matrix> {
        combine(&self.basis, coeffs, shape, field)
    }
}

pub(crate) fn combine(
    basis: &[Vec<Matrix>],
    coeffs: &[u8],
    shape: &[(usize, usize)],
    field: PrimeField,
) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = shape.iter().map(|&(r, c)| Matrix::zeros(r, c)).collect();
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, m) in out.iter_mut().zip(b) {
            o.add_scaled(c, m, field);
        }
    }
    out
}

/// Solves the intertwiner system. Unknowns are the entries of each `φ_i`,
/// vertex by vertex in row-major order.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace> {
    m.check_context(n)?;
    let f = m.field();
    let q = m.quiver();
    let nv = q.vertex_count();
    let mut offset = vec![0usize; nv + 1];
    for i in 0..nv {
        offset[i + 1] = offset[i] + n.dims()[i] * m.dims()[i];
    }
    let unknowns = offset[nv];
    let var = |i: usize, r: usize, c: usize| offset[i] + r * m.dims()[i] + c;

    let eq_count: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims()[a.tgt] * m.dims()[a.src])
        .sum();
    let mut sys = Matrix::zeros(eq_count, unknowns);
    let mut row = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.src, a.tgt);
        let (ma, na) = (&m.maps()[k], &n.maps()[k]);
        for r in 0..n.dims()[t] {
            for c in 0..m.dims()[s] {
                // (φ_t M_a)[r][c] = Σ_j φ_t[r][j] M_a[j][c]
                for j in 0..m.dims()[t] {
                    let x = ma.get(j, c);
                    if x != 0 {
                        let v = var(t, r, j);
                        sys.set(row, v, f.add(sys.get(row, v), x));
                    }
                }
                // -(N_a φ_s)[r][c] = -Σ_j N_a[r][j] φ_s[j][c]
                for j in 0..n.dims()[s] {
                    let x = na.get(r, j);
                    if x != 0 {
                        let v = var(s, j, c);
                        sys.set(row, v, f.sub(sys.get(row, v), x));
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = sys.kernel_basis(f);
    let basis = (0..kernel.dim())
        .map(|k| {
            let v = kernel.basis().row(k);
            (0..nv)
                .map(|i| {
                    Matrix::from_data(
                        n.dims()[i],
                        m.dims()[i],
                        v[offset[i]..offset[i + 1]].to_vec(),
                    )
                })
                .collect()
        })
        .collect();
    let hom = HomSpace { basis };
    debug_assert!(hom.basis.iter().all(|phi| is_morphism(m, n, phi)));
    Ok(hom)
}

/// Checks the intertwiner equations for one tuple.
pub fn is_morphism(m: &Representation, n: &Representation, phi: &[Matrix]) -> bool {
    let f = m.field();
    m.quiver()
        .arrows()
        .iter()
        .enumerate()
        .all(|(k, a)| phi[a.tgt].mul(&m.maps()[k], f) == n.maps()[k].mul(&phi[a.src], f))
}

/// `End(M)` with helpers for composing and classifying its elements.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub field: PrimeField,
    pub dims: Vec<usize>,
    pub basis: Vec<Vec<Matrix>>,
}

pub fn end_algebra(m: &Representation) -> Result<EndAlgebra> {
    let hom = hom_space(m, m)?;
    Ok(EndAlgebra {
        field: m.field(),
        dims: m.dims().to_vec(),
        basis: hom.basis,
    })
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn shape(&self) -> Vec<(usize, usize)> {
        self.dims.iter().map(|&d| (d, d)).collect()
    }

    pub fn element(&self, coeffs: &[u8]) -> Vec<Matrix> {
        combine(&self.basis, coeffs, &self.shape(), self.field)
    }

    pub fn identity(&self) -> Vec<Matrix> {
        self.dims.iter().map(|&d| Matrix::identity(d)).collect()
    }

    pub fn is_nilpotent(&self, phi: &[Matrix]) -> bool {
        phi.iter().all(|b| b.is_nilpotent(self.field))
    }

    pub fn is_invertible(&self, phi: &[Matrix]) -> bool {
        phi.iter().all(|b| b.is_invertible(self.field))
    }

    /// `φ - λ·id`.
    pub fn shift(&self, phi: &[Matrix], lambda: u8) -> Vec<Matrix> {
        let f = self.field;
        phi.iter()
            .map(|b| b.sub(&Matrix::scalar(b.rows(), lambda), f))
            .collect()
    }

    pub fn compose(&self, a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
        a.iter().zip(b).map(|(x, y)| x.mul(y, self.field)).collect()
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::Quiver;

    const F2: PrimeField = PrimeField::F2;

    #[test]
    fn distinct_simples_have_no_maps() {
        let q = Arc::new(Quiver::new("L2", &["1", "2"], &[("a", "1", "2")]).unwrap());
        let s1 = Representation::simple(q.clone(), F2, 0);
        let s2 = Representation::simple(q, F2, 1);
        assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&s1, &s1).unwrap().dim(), 1);
    }

    #[test]
    fn endomorphisms_of_the_loop_arrow_module() {
        let q =
            Arc::new(Quiver::new("Q6", &["1", "2"], &[("l", "1", "1"), ("a", "2", "1")]).unwrap());
        let g1 = Matrix::from_literal(
            &[[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]],
            F2,
        );
        let g2 = Matrix::from_literal(&[[0], [1], [0], [1]], F2);
        let m = Representation::from_literals(&q, F2, &[4, 1], vec![g1, g2]).unwrap();
        let end = end_algebra(&m).unwrap();
        assert_eq!(end.dim(), 4);
        for b in &end.basis {
            assert!(is_morphism(&m, &m, b));
        }
    }

    #[test]
    fn hom_from_projective_over_l2() {
        // P(1) = (k -> k) maps onto S_1 and receives S_2
        let q = Arc::new(Quiver::new("L2", &["1", "2"], &[("a", "1", "2")]).unwrap());
        let p1 = Representation::from_literals(&q, F2, &[1, 1], vec![Matrix::identity(1)]).unwrap();
        let s1 = Representation::simple(q.clone(), F2, 0);
        let s2 = Representation::simple(q, F2, 1);
        assert_eq!(hom_space(&p1, &s1).unwrap().dim(), 1);
        assert_eq!(hom_space(&s1, &p1).unwrap().dim(), 0);
        assert_eq!(hom_space(&s2, &p1).unwrap().dim(), 1);
    }
}
