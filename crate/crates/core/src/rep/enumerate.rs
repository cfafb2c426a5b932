//! Isomorphism classes of representations with a fixed dimension vector.
//!
//! Every tuple of arrow matrices is visited in lexicographic order of its
//! entries. The first tuple not yet seen starts a new class; its orbit under
//! `Π_i GL(d_i)` is then marked by a graph search over group generators, so
//! each class is represented by the lexicographically least tuple in it.

use std::sync::Arc;

use crate::algebra::{Matrix, PrimeField};
use crate::error::Result;
use crate::limits::{saturating_pow, Limits};
use crate::quiver::Quiver;

use super::decompose::is_indecomposable;
use super::Representation;

struct Generator {
    vertex: usize,
    g: Matrix,
    g_inv: Matrix,
}

fn generators(dims: &[usize], field: PrimeField) -> Vec<Generator> {
    let mut out = Vec::new();
    for (v, &d) in dims.iter().enumerate() {
        for j in 0..d {
            for k in 0..d {
                if j != k {
                    let mut g = Matrix::identity(d);
                    g.set(j, k, 1);
                    let mut g_inv = Matrix::identity(d);
                    g_inv.set(j, k, field.neg(1));
                    out.push(Generator {
                        vertex: v,
                        g,
                        g_inv,
                    });
                }
            }
        }
        if d > 0 && field.p() > 2 {
            let w = field.primitive_root();
            let mut g = Matrix::identity(d);
            g.set(0, 0, w);
            let mut g_inv = Matrix::identity(d);
            g_inv.set(0, 0, field.inv(w).expect("primitive root is a unit"));
            out.push(Generator {
                vertex: v,
                g,
                g_inv,
            });
        }
    }
    out
}

struct Codec {
    shapes: Vec<(usize, usize)>,
    p: u64,
    len: usize,
}

impl Codec {
    fn decode(&self, mut idx: u64) -> Vec<Matrix> {
        let mut digits = vec![0u8; self.len];
        for d in digits.iter_mut().rev() {
            *d = (idx % self.p) as u8;
            idx /= self.p;
        }
        let mut out = Vec::with_capacity(self.shapes.len());
        let mut pos = 0;
        for &(r, c) in &self.shapes {
            out.push(Matrix::from_data(r, c, digits[pos..pos + r * c].to_vec()));
            pos += r * c;
        }
        out
    }

    fn encode(&self, maps: &[Matrix]) -> u64 {
        let mut idx = 0u64;
        for m in maps {
            for &x in m.data() {
                idx = idx * self.p + x as u64;
            }
        }
        idx
    }
}

/// One representative per isomorphism class with dimension vector `dims`,
/// restricted to nilpotent representations when asked.
pub fn enumerate_reps(
    q: &Arc<Quiver>,
    dims: &[usize],
    field: PrimeField,
    nilpotent_only: bool,
    limits: &Limits,
) -> Result<Vec<Representation>> {
    let shapes: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| (dims[a.tgt], dims[a.src]))
        .collect();
    let len: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let total = saturating_pow(field.order(), len);
    limits.check(
        || format!("matrix tuples for dimension vector {dims:?} over {field}"),
        total,
    )?;
    let total = total as u64;
    let codec = Codec {
        shapes,
        p: field.order(),
        len,
    };
    let gens = generators(dims, field);
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mark = |seen: &mut Vec<u64>, i: u64| -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = seen[w] & (1 << b) == 0;
        seen[w] |= 1 << b;
        fresh
    };

    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..total {
        if !mark(&mut seen, start) {
            continue;
        }
        let rep = Representation::new(q.clone(), field, dims.to_vec(), codec.decode(start))?;
        stack.push(start);
        while let Some(cur) = stack.pop() {
            let maps = codec.decode(cur);
            for g in &gens {
                let moved: Vec<Matrix> = q
                    .arrows()
                    .iter()
                    .zip(&maps)
                    .map(|(a, m)| {
                        let mut x = m.clone();
                        if a.tgt == g.vertex {
                            x = g.g.mul(&x, field);
                        }
                        if a.src == g.vertex {
                            x = x.mul(&g.g_inv, field);
                        }
                        x
                    })
                    .collect();
                let idx = codec.encode(&moved);
                if mark(&mut seen, idx) {
                    stack.push(idx);
                }
            }
        }
        if !nilpotent_only || rep.is_nilpotent() {
            out.push(rep);
        }
    }
    Ok(out)
}

/// All weak compositions of `n` into `parts` parts, in lexicographic order.
pub fn dimension_vectors(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            acc.push(n);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for k in 0..=n {
            acc.push(k);
            go(n - k, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// Classes of every dimension vector with total dimension `1..=max_total_dim`,
/// ordered by total dimension, then dimension vector, then representative.
pub fn enumerate_reps_up_to(
    q: &Arc<Quiver>,
    max_total_dim: usize,
    field: PrimeField,
    nilpotent_only: bool,
    limits: &Limits,
) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    for n in 1..=max_total_dim {
        for d in dimension_vectors(n, q.vertex_count()) {
            out.extend(enumerate_reps(q, &d, field, nilpotent_only, limits)?);
        }
    }
    Ok(out)
}

pub fn enumerate_indecomposables(
    q: &Arc<Quiver>,
    max_total_dim: usize,
    field: PrimeField,
    nilpotent_only: bool,
    limits: &Limits,
) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    for m in enumerate_reps_up_to(q, max_total_dim, field, nilpotent_only, limits)? {
        if is_indecomposable(&m, limits)? {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    const F2: PrimeField = PrimeField::F2;

    fn q(text: &str) -> Arc<Quiver> {
        Arc::new(parse_quiver(text).unwrap())
    }

    #[test]
    fn vector_spaces_have_one_class() {
        let pt = q("quiver t\nvertex 1");
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(
                enumerate_reps(&pt, &[2], f, false, &Limits::default())
                    .unwrap()
                    .len(),
                1
            );
        }
    }

    #[test]
    fn nilpotent_loop_classes_are_partitions() {
        let lp = q("quiver loop\nvertex 1\narrow x: 1 -> 1");
        let lim = Limits::default();
        assert_eq!(enumerate_reps(&lp, &[2], F2, true, &lim).unwrap().len(), 2);
        assert_eq!(enumerate_reps(&lp, &[3], F2, true, &lim).unwrap().len(), 3);
        assert_eq!(enumerate_reps(&lp, &[4], F2, true, &lim).unwrap().len(), 5);
        // all 2x2 matrices over F_2 up to conjugacy: q^2 + q = 6 classes
        assert_eq!(enumerate_reps(&lp, &[2], F2, false, &lim).unwrap().len(), 6);
    }

    #[test]
    fn kronecker_one_one() {
        let k = q("quiver k\nvertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2");
        let reps = enumerate_reps(&k, &[1, 1], F2, false, &Limits::default()).unwrap();
        assert_eq!(reps.len(), 4);
        let tuples: Vec<(u8, u8)> = reps
            .iter()
            .map(|r| (r.maps()[0].get(0, 0), r.maps()[1].get(0, 0)))
            .collect();
        assert_eq!(tuples, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        // over F_3 the lines through the origin of F_3^2 give 4 classes plus zero
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(
            enumerate_reps(&k, &[1, 1], f3, false, &Limits::default())
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn indecomposables_of_l2() {
        let l2 = q("quiver l2\nvertex 1 2\narrow a: 1 -> 2");
        let ind = enumerate_indecomposables(&l2, 2, F2, false, &Limits::default()).unwrap();
        let dims: Vec<Vec<usize>> = ind.iter().map(|m| m.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn nilpotent_loop_indecomposables_are_jordan_blocks() {
        let lp = q("quiver loop\nvertex 1\narrow x: 1 -> 1");
        let ind = enumerate_indecomposables(&lp, 3, F2, true, &Limits::default()).unwrap();
        assert_eq!(
            ind.iter().map(|m| m.total_dim()).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn over_cap_is_an_error() {
        let lp = q("quiver loop\nvertex 1\narrow x: 1 -> 1");
        let err = enumerate_reps(&lp, &[5], F2, false, &Limits::default()).unwrap_err();
        assert!(err.is_capacity());
    }
}
