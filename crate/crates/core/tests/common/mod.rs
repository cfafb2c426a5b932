//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles avoid the library's search code: subspaces come from closing
//! subsets of vectors, isomorphisms from scanning every invertible tuple.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use hall_core::algebra::{Matrix, PrimeField};
use hall_core::rep::Representation;
use hall_core::{parse_quiver, Quiver};

pub const F2: PrimeField = PrimeField::F2;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.quiver"))
}

pub fn fixture(name: &str) -> Arc<Quiver> {
    let text =
        std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    Arc::new(parse_quiver(&text).unwrap())
}

pub fn quiver(text: &str) -> Arc<Quiver> {
    Arc::new(parse_quiver(text).unwrap())
}

/// `(n choose k)_q` by the q-Pascal rule `C(n,k) = C(n-1,k-1) + q^k C(n-1,k)`.
pub fn q_binomial(n: u32, k: u32, q: u64) -> u64 {
    if k == 0 || k == n {
        return 1;
    }
    if k > n {
        return 0;
    }
    q_binomial(n - 1, k - 1, q) + q.pow(k) * q_binomial(n - 1, k, q)
}

fn all_vectors(n: usize, p: u8) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every subspace of `F_p^n` as its sorted set of vectors, found by keeping
/// the subsets closed under addition and scaling. Only for `p^n <= 16`.
pub fn brute_subspaces(n: usize, f: PrimeField) -> Vec<Vec<Vec<u8>>> {
    let vecs = all_vectors(n, f.p());
    assert!(
        vecs.len() <= 16,
        "brute force subspaces only for tiny spaces"
    );
    let idx = |v: &[u8]| {
        v.iter()
            .fold(0usize, |acc, &x| acc * f.p() as usize + x as usize)
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << vecs.len()) {
        if mask & 1 == 0 {
            continue;
        }
        let inside = |v: &[u8]| mask & (1 << idx(v)) != 0;
        let members: Vec<&Vec<u8>> = vecs.iter().filter(|v| inside(v)).collect();
        let closed = members.iter().all(|a| {
            members.iter().all(|b| {
                inside(
                    &a.iter()
                        .zip(b.iter())
                        .map(|(x, y)| f.add(*x, *y))
                        .collect::<Vec<_>>(),
                )
            }) && f
                .elements()
                .all(|c| inside(&a.iter().map(|x| f.mul(c, *x)).collect::<Vec<_>>()))
        });
        if closed {
            out.push(members.into_iter().cloned().collect());
        }
    }
    out
}

pub fn all_matrices(rows: usize, cols: usize, f: PrimeField) -> Vec<Matrix> {
    all_vectors(rows * cols, f.p())
        .into_iter()
        .map(|d| Matrix::from_data(rows, cols, d))
        .collect()
}

/// Isomorphism by scanning every tuple of invertible matrices.
pub fn brute_iso(a: &Representation, b: &Representation) -> bool {
    if a.dims() != b.dims() {
        return false;
    }
    let f = a.field();
    let groups: Vec<Vec<Matrix>> = a
        .dims()
        .iter()
        .map(|&d| {
            all_matrices(d, d, f)
                .into_iter()
                .filter(|g| g.is_invertible(f))
                .collect()
        })
        .collect();
    let q = a.quiver();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let ok = q.arrows().iter().enumerate().all(|(k, arr)| {
            let g_t = &groups[arr.tgt][choice[arr.tgt]];
            let g_s = &groups[arr.src][choice[arr.src]];
            g_t.mul(&a.maps()[k], f) == b.maps()[k].mul(g_s, f)
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return false;
            }
            choice[i] += 1;
            if choice[i] < groups[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `F^X_{M,N}` from brute-force subspaces and brute-force isomorphism tests.
pub fn brute_hall_number(x: &Representation, m: &Representation, n: &Representation) -> u64 {
    let f = x.field();
    let per_vertex: Vec<Vec<Vec<Vec<u8>>>> = x
        .dims()
        .iter()
        .zip(n.dims())
        .map(|(&d, &k)| {
            brute_subspaces(d, f)
                .into_iter()
                .filter(|s| s.len() as u64 == f.order().pow(k as u32))
                .collect()
        })
        .collect();
    let q = x.quiver();
    let mut count = 0;
    let mut choice = vec![0usize; per_vertex.len()];
    if per_vertex.iter().any(|v| v.is_empty()) {
        return 0;
    }
    loop {
        let closed = q.arrows().iter().enumerate().all(|(k, arr)| {
            per_vertex[arr.src][choice[arr.src]]
                .iter()
                .all(|v| per_vertex[arr.tgt][choice[arr.tgt]].contains(&x.maps()[k].apply(v, f)))
        });
        if closed {
            let subs: Vec<hall_core::Subspace> = per_vertex
                .iter()
                .zip(&choice)
                .zip(x.dims())
                .map(|((opts, &c), &d)| hall_core::Subspace::from_vectors(&opts[c], d, f))
                .collect();
            if brute_iso(&x.restrict(&subs), n) && brute_iso(&x.quotient(&subs), m) {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return count;
            }
            choice[i] += 1;
            if choice[i] < per_vertex[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Predicted verdicts of the fixture battery: (fixture, ideal for all r,
/// subring at r = 1, subring for all r).
pub const EXPECTED: &[(&str, bool, bool, bool)] = &[
    ("L1", true, true, true),
    ("L2", true, true, true),
    ("L3", true, true, true),
    ("L4", true, true, true),
    ("L5", true, true, true),
    ("delta0", true, true, true),
    ("delta1", true, true, true),
    ("delta2", true, true, true),
    ("delta3", true, true, true),
    ("v42", false, true, true),
    ("v53", false, true, true),
    ("lambda42", false, true, true),
    ("kronecker", false, false, false),
    ("d4_in0", false, false, false),
    ("d4_in1", false, false, false),
    ("d4_in2", false, false, false),
    ("d4_in3", false, false, false),
    ("zigzag", false, false, false),
    ("q4", false, false, false),
    ("q5", false, false, false),
    ("q6", false, false, false),
    ("q7", false, false, false),
    ("q8", false, false, false),
    ("l3_delta0", true, true, true),
    ("v53_lambda42", false, true, false),
];
