mod common;

use std::sync::Arc;

use common::*;
use hall_core::hall::euler_form;
use hall_core::rep::{
    decompose, enumerate_indecomposables, enumerate_reps, euler_char, ext_dim, hom_space,
    is_isomorphic, loewy_data, Representation,
};
use hall_core::{Limits, Matrix, PrimeField, Quiver};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_invertible(n: usize, f: PrimeField, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..f.p())).collect();
        let m = Matrix::from_data(n, n, data);
        if m.is_invertible(f) {
            return m;
        }
    }
}

fn random_conjugate(m: &Representation, rng: &mut ChaCha8Rng) -> Representation {
    let g: Vec<Matrix> = m
        .dims()
        .iter()
        .map(|&d| random_invertible(d, m.field(), rng))
        .collect();
    m.conjugate(&g).unwrap()
}

fn random_rep(
    q: &Arc<Quiver>,
    dims: &[usize],
    f: PrimeField,
    rng: &mut ChaCha8Rng,
) -> Representation {
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.tgt], dims[a.src]);
            Matrix::from_data(r, c, (0..r * c).map(|_| rng.gen_range(0..f.p())).collect())
        })
        .collect();
    Representation::new(q.clone(), f, dims.to_vec(), maps).unwrap()
}

/// Isomorphism classes of all tuples with the given dimension vector,
/// counted by partitioning under brute-force isomorphism.
fn brute_class_count(q: &Arc<Quiver>, dims: &[usize], f: PrimeField, nilpotent: bool) -> usize {
    let shapes: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| (dims[a.tgt], dims[a.src]))
        .collect();
    let len: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let total = (f.p() as usize).pow(len as u32);
    let mut reps: Vec<Representation> = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut maps = Vec::new();
        for &(r, cols) in &shapes {
            let data = (0..r * cols)
                .map(|_| {
                    let x = (c % f.p() as usize) as u8;
                    c /= f.p() as usize;
                    x
                })
                .collect();
            maps.push(Matrix::from_data(r, cols, data));
        }
        let m = Representation::new(q.clone(), f, dims.to_vec(), maps).unwrap();
        if nilpotent && !m.is_nilpotent() {
            continue;
        }
        if !reps.iter().any(|r| brute_iso(r, &m)) {
            reps.push(m);
        }
    }
    reps.len()
}

#[test]
fn class_counts_match_brute_force() {
    let lim = Limits::default();
    let cases: &[(&str, &[usize], bool)] = &[
        ("kronecker", &[1, 1], false),
        ("kronecker", &[1, 2], false),
        ("kronecker", &[2, 1], false),
        ("L3", &[1, 1, 1], false),
        ("L3", &[1, 2, 1], false),
        ("delta0", &[2], false),
        ("delta0", &[3], true),
        ("delta1", &[1, 1], false),
        ("delta1", &[1, 1], true),
        ("q8", &[2], true),
    ];
    for &(name, dims, nil) in cases {
        let q = fixture(name);
        let ours = enumerate_reps(&q, dims, F2, nil, &lim).unwrap();
        assert_eq!(
            ours.len(),
            brute_class_count(&q, dims, F2, nil),
            "{name} {dims:?} nilpotent={nil}"
        );
        for (i, a) in ours.iter().enumerate() {
            for b in &ours[i + 1..] {
                assert!(!brute_iso(a, b));
            }
        }
    }
    // similarity classes of 2x2 matrices over F_q number q^2 + q
    let f3 = PrimeField::new(3).unwrap();
    assert_eq!(
        enumerate_reps(&fixture("delta0"), &[2], f3, false, &lim)
            .unwrap()
            .len(),
        12
    );
}

#[test]
fn indecomposable_counts_on_dynkin_and_loop_quivers() {
    let lim = Limits::default();
    // positive roots: A_n has n(n+1)/2, D_4 has 12 with highest root of total dimension 5
    for (name, bound, want) in [
        ("L3", 3, 6),
        ("L4", 4, 10),
        ("v42", 4, 10),
        ("d4_in3", 5, 12),
        ("d4_in1", 5, 12),
    ] {
        let q = fixture(name);
        assert_eq!(
            enumerate_indecomposables(&q, bound, F2, false, &lim)
                .unwrap()
                .len(),
            want,
            "{name}"
        );
    }
    // Jordan blocks
    let lp = fixture("delta0");
    let ind = enumerate_indecomposables(&lp, 4, F2, true, &lim).unwrap();
    assert_eq!(
        ind.iter().map(|m| m.total_dim()).collect::<Vec<_>>(),
        vec![1, 2, 3, 4]
    );
    // Kronecker over F_2 through total dimension 3: two simples, the three points of P^1, (1,2) and (2,1)
    let k = fixture("kronecker");
    assert_eq!(
        enumerate_indecomposables(&k, 3, F2, false, &lim)
            .unwrap()
            .len(),
        7
    );
}

#[test]
fn decomposition_recovers_random_sums() {
    let lim = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (name, nil) in [
        ("kronecker", false),
        ("d4_in2", false),
        ("delta1", true),
        ("q6", true),
        ("zigzag", false),
    ] {
        let q = fixture(name);
        let ind = enumerate_indecomposables(&q, 3, F2, nil, &lim).unwrap();
        for _ in 0..12 {
            let k = rng.gen_range(1..=3);
            let parts: Vec<&Representation> =
                (0..k).map(|_| &ind[rng.gen_range(0..ind.len())]).collect();
            let mut sum = parts[0].clone();
            for p in &parts[1..] {
                sum = sum.oplus(p).unwrap();
            }
            let scrambled = random_conjugate(&sum, &mut rng);
            let rep = decompose(&scrambled, &lim).unwrap();
            assert_eq!(rep.s, k, "{name}: {parts:?}");
            let mut rebuilt = rep.summands[0].module.power(rep.summands[0].multiplicity);
            for s in &rep.summands[1..] {
                rebuilt = rebuilt.oplus(&s.module.power(s.multiplicity)).unwrap();
            }
            assert!(is_isomorphic(&rebuilt, &sum, &lim).unwrap());
            for p in &parts {
                assert!(rep
                    .summands
                    .iter()
                    .any(|s| is_isomorphic(&s.module, p, &lim).unwrap()));
            }
        }
    }
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let lim = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, dims) in [
        ("kronecker", vec![2, 2]),
        ("L3", vec![1, 2, 1]),
        ("delta1", vec![1, 2]),
    ] {
        let q = fixture(name);
        for _ in 0..40 {
            let a = random_rep(&q, &dims, F2, &mut rng);
            let b = if rng.gen_bool(0.5) {
                random_conjugate(&a, &mut rng)
            } else {
                random_rep(&q, &dims, F2, &mut rng)
            };
            assert_eq!(
                is_isomorphic(&a, &b, &lim).unwrap(),
                brute_iso(&a, &b),
                "{a:?} {b:?}"
            );
        }
    }
}

#[test]
fn socle_of_the_dual_is_the_dual_of_the_top() {
    let lim = Limits::default();
    for (name, nil) in [
        ("L3", false),
        ("v42", false),
        ("d4_in3", false),
        ("q6", true),
        ("delta2", true),
    ] {
        let q = fixture(name);
        for m in enumerate_indecomposables(&q, 4, F2, nil, &lim).unwrap() {
            let d = m.dual();
            let lm = loewy_data(&m).unwrap();
            let ld = loewy_data(&d).unwrap();
            assert_eq!(lm.top.dims(), ld.socle.module.dims(), "{name}: {m:?}");
            assert_eq!(lm.socle.module.dims(), ld.top.dims());
            assert_eq!(
                lm.radical.module.total_dim() + lm.top.total_dim(),
                m.total_dim(),
                "radical and top fill the module"
            );
            assert!(m.is_closed(&lm.socle.subspaces) && m.is_closed(&lm.radical.subspaces));
        }
    }
}

fn euler_case() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, u64)> {
    (0usize..4).prop_flat_map(|qi| {
        let nv = [2, 3, 4, 4][qi];
        (
            Just(qi),
            proptest::collection::vec(0usize..3, nv),
            proptest::collection::vec(0usize..3, nv),
            any::<u64>(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_form_is_hom_minus_ext_and_depends_only_on_dimensions((qi, d, e, seed) in euler_case()) {
        let q = fixture(["kronecker", "L3", "d4_in3", "zigzag"][qi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rep(&q, &d, F2, &mut rng);
        let n = random_rep(&q, &e, F2, &mut rng);
        let hom = hom_space(&m, &n).unwrap().dim() as i64;
        let ext = ext_dim(&m, &n).unwrap() as i64;
        prop_assert_eq!(euler_form(&m, &n).unwrap(), hom - ext);
        prop_assert_eq!(hom - ext, euler_char(&q, &d, &e));
    }

    #[test]
    fn conjugation_preserves_decomposition(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = fixture("d4_in0");
        let dims: Vec<usize> = (0..4).map(|_| rng.gen_range(0..3)).collect();
        let m = random_rep(&q, &dims, F2, &mut rng);
        let c = random_conjugate(&m, &mut rng);
        let lim = Limits::default();
        prop_assert!(is_isomorphic(&m, &c, &lim).unwrap());
        prop_assert_eq!(decompose(&m, &lim).unwrap().s, decompose(&c, &lim).unwrap().s);
    }
}
