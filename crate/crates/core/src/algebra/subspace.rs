use super::field::PrimeField;
use super::matrix::Matrix;
use crate::error::Result;
use crate::limits::Limits;

/// A subspace of `F_p^n`, stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so structural equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    /// Span of the rows of `rows`.
    pub fn from_spanning(rows: Matrix, field: PrimeField) -> Self {
        let n = rows.cols();
        let (r, pivots) = rows.rref(field);
        let rank = pivots.len();
        let basis = r.block(0, 0, rank, n);
        Subspace {
            ambient: n,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(vectors: &[Vec<u8>], n: usize, field: PrimeField) -> Self {
        let data: Vec<u8> = vectors.iter().flat_map(|v| v.iter().copied()).collect();
        Subspace::from_spanning(Matrix::from_data(vectors.len(), n, data), field)
    }

    /// Wraps a matrix that is already in RREF with nonzero rows.
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Self {
        Subspace {
            ambient: basis.cols(),
            basis,
            pivots,
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }

    /// Columns without a pivot; the standard basis vectors at these positions
    /// span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its projection onto this subspace along the complement columns.
    pub fn reduce(&self, v: &[u8], field: PrimeField) -> Vec<u8> {
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = field.neg(c);
            for (o, &b) in out.iter_mut().zip(self.basis.row(i)) {
                if b != 0 {
                    *o = field.add(*o, field.mul(neg, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8], field: PrimeField) -> bool {
        self.reduce(v, field).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u8], field: PrimeField) -> Option<Vec<u8>> {
        if self.contains(v, field) {
            Some(self.pivots.iter().map(|&pc| v[pc]).collect())
        } else {
            None
        }
    }

    pub fn contains_subspace(&self, other: &Subspace, field: PrimeField) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i), field))
    }

    pub fn sum(&self, other: &Subspace, field: PrimeField) -> Subspace {
        Subspace::from_spanning(self.basis.vstack(&other.basis), field)
    }

    pub fn intersect(&self, other: &Subspace, field: PrimeField) -> Subspace {
        // x in both iff x = a*B1 = b*B2; solve [B1; -B2]^T [a; b] = 0.
        let (d1, d2, n) = (self.dim(), other.dim(), self.ambient);
        if d1 == 0 || d2 == 0 {
            return Subspace::zero(n);
        }
        let mut sys = Matrix::zeros(n, d1 + d2);
        for i in 0..d1 {
            for c in 0..n {
                sys.set(c, i, self.basis.get(i, c));
            }
        }
        for j in 0..d2 {
            for c in 0..n {
                sys.set(c, d1 + j, field.neg(other.basis.get(j, c)));
            }
        }
        let ker = sys.kernel_basis(field);
        let coeffs = ker.basis().block(0, 0, ker.dim(), d1);
        Subspace::from_spanning(coeffs.mul(&self.basis, field), field)
    }

    /// Image of the subspace under the linear map `m` (acting on column vectors).
    pub fn image_under(&self, m: &Matrix, field: PrimeField) -> Subspace {
        // rows of (m * B^T)^T = B * m^T
        Subspace::from_spanning(self.basis.mul(&m.transpose(), field), field)
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // q-Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k)
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for j in 1..m {
            let qj = crate::limits::saturating_pow(q, j);
            next[j] = row[j - 1].saturating_add(qj.saturating_mul(row[j]));
        }
        row = next;
    }
    row[k]
}

/// All `k`-dimensional subspaces of `F_p^n` in lexicographic order of their
/// RREF bases.
pub fn enumerate_subspaces(
    n: usize,
    k: usize,
    field: PrimeField,
    limits: &Limits,
) -> Result<Vec<Subspace>> {
    if k > n {
        return Ok(Vec::new());
    }
    let count = gaussian_binomial(n, k, field.order());
    limits.check(
        || format!("subspaces of dimension {k} in F_{}^{n}", field.p()),
        count,
    )?;
    let mut out = Vec::with_capacity(count as usize);
    let mut pivots = Vec::with_capacity(k);
    enumerate_pivot_sets(n, k, 0, &mut pivots, &mut |pivots| {
        // free positions: (row i, column c) with c > pivot_i and c not a pivot
        let mut is_pivot = vec![false; n];
        for &c in pivots {
            is_pivot[c] = true;
        }
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| {
                (pc + 1..n)
                    .filter(|&c| !is_pivot[c])
                    .map(move |c| (i, c))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut digits = vec![0u8; free.len()];
        loop {
            let mut basis = Matrix::zeros(k, n);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(i, pc, 1);
            }
            for (&(i, c), &d) in free.iter().zip(&digits) {
                basis.set(i, c, d);
            }
            out.push(Subspace::from_rref_unchecked(basis, pivots.to_vec()));
            if !increment_digits(&mut digits, field.p()) {
                break;
            }
        }
    });
    out.sort();
    Ok(out)
}

/// Every subspace of `F_p^n`, smallest dimension first.
pub fn enumerate_all_subspaces(
    n: usize,
    field: PrimeField,
    limits: &Limits,
) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_subspaces(n, k, field, limits)?);
    }
    Ok(out)
}

fn enumerate_pivot_sets(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for c in start..n {
        if n - c < k - acc.len() {
            break;
        }
        acc.push(c);
        enumerate_pivot_sets(n, k, c + 1, acc, f);
        acc.pop();
    }
}

/// Odometer increment in base `p`, least significant digit last. Returns
/// false after wrapping around to all zeros.
pub(crate) fn increment_digits(digits: &mut [u8], p: u8) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: PrimeField = PrimeField::F2;

    #[test]
    fn small_subspace_counts() {
        let lim = Limits::default();
        assert_eq!(enumerate_subspaces(2, 1, F2, &lim).unwrap().len(), 3);
        assert_eq!(enumerate_subspaces(3, 1, F2, &lim).unwrap().len(), 7);
        let zero = enumerate_subspaces(3, 0, PrimeField::new(5).unwrap(), &lim).unwrap();
        assert_eq!(zero, vec![Subspace::zero(3)]);
    }

    #[test]
    fn lines_in_the_plane_match_projective_points() {
        // nonzero vectors of F_2^2 up to scalar: (0,1), (1,0), (1,1)
        let lines = enumerate_subspaces(2, 1, F2, &Limits::default()).unwrap();
        let mut expected: Vec<Subspace> = [[0u8, 1], [1, 0], [1, 1]]
            .iter()
            .map(|v| Subspace::from_vectors(&[v.to_vec()], 2, F2))
            .collect();
        expected.sort();
        assert_eq!(lines, expected);
    }

    #[test]
    fn capacity_is_a_hard_error() {
        let err = enumerate_subspaces(8, 4, F2, &Limits::with_cap(100)).unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_vectors(&[vec![1, 0, 0], vec![0, 1, 0]], 3, F2);
        let b = Subspace::from_vectors(&[vec![0, 1, 0], vec![0, 0, 1]], 3, F2);
        let i = a.intersect(&b, F2);
        assert_eq!(i, Subspace::from_vectors(&[vec![0, 1, 0]], 3, F2));
        assert!(a.sum(&b, F2).is_full());
        assert_eq!(a.coordinates(&[1, 1, 0], F2), Some(vec![1, 1]));
        assert_eq!(a.coordinates(&[0, 0, 1], F2), None);
    }
}
