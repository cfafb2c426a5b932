//! Arrow-closed subspace tuples of a representation.

use crate::algebra::{enumerate_subspaces, gaussian_binomial, Subspace};
use crate::error::Result;
use crate::limits::Limits;
use crate::rep::{is_isomorphic, Representation};

/// All subrepresentations of `x` with dimension vector `dims`, found by
/// backtracking over the vertices and pruning as soon as an arrow between
/// chosen vertices fails to preserve the choice.
pub fn subreps_with_dims(
    x: &Representation,
    dims: &[usize],
    limits: &Limits,
) -> Result<Vec<Vec<Subspace>>> {
    let f = x.field();
    if dims.iter().zip(x.dims()).any(|(d, n)| d > n) {
        return Ok(Vec::new());
    }
    let mut candidates: u128 = 1;
    for (&n, &k) in x.dims().iter().zip(dims) {
        candidates = candidates.saturating_mul(gaussian_binomial(n, k, f.order()));
    }
    limits.check(
        || format!("subspace tuples of dimension {dims:?} in {}", x.dim_label()),
        candidates,
    )?;
    let choices: Vec<Vec<Subspace>> = x
        .dims()
        .iter()
        .zip(dims)
        .map(|(&n, &k)| enumerate_subspaces(n, k, f, limits))
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    let mut chosen: Vec<Subspace> = Vec::with_capacity(dims.len());
    fn go(
        x: &Representation,
        choices: &[Vec<Subspace>],
        chosen: &mut Vec<Subspace>,
        out: &mut Vec<Vec<Subspace>>,
    ) {
        let i = chosen.len();
        if i == choices.len() {
            out.push(chosen.clone());
            return;
        }
        let f = x.field();
        for u in &choices[i] {
            chosen.push(u.clone());
            let ok = x.quiver().arrows().iter().enumerate().all(|(k, a)| {
                if a.src.max(a.tgt) != i {
                    return true;
                }
                let (us, ut) = (&chosen[a.src], &chosen[a.tgt]);
                (0..us.dim()).all(|j| ut.contains(&x.maps()[k].apply(us.basis().row(j), f), f))
            });
            if ok {
                go(x, choices, chosen, out);
            }
            chosen.pop();
        }
    }
    go(x, &choices, &mut chosen, &mut out);
    Ok(out)
}

/// Every subrepresentation of `x`.
pub fn subreps(x: &Representation, limits: &Limits) -> Result<Vec<Vec<Subspace>>> {
    let mut out = Vec::new();
    let mut dims = vec![0usize; x.dims().len()];
    loop {
        out.extend(subreps_with_dims(x, &dims, limits)?);
        // odometer over 0..=x.dims()[i]
        let mut i = dims.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if dims[i] < x.dims()[i] {
                dims[i] += 1;
                break;
            }
            dims[i] = 0;
        }
    }
}

/// `F^X_{M,N}`: the number of subrepresentations `U ⊆ X` with `U ≅ N` and `X/U ≅ M`.
pub fn hall_number(
    x: &Representation,
    m: &Representation,
    n: &Representation,
    limits: &Limits,
) -> Result<u64> {
    x.check_context(m)?;
    x.check_context(n)?;
    let expected: Vec<usize> = m.dims().iter().zip(n.dims()).map(|(a, b)| a + b).collect();
    if x.dims() != expected.as_slice() {
        return Ok(0);
    }
    let mut count = 0;
    for u in subreps_with_dims(x, n.dims(), limits)? {
        if is_isomorphic(&x.restrict(&u), n, limits)? && is_isomorphic(&x.quotient(&u), m, limits)?
        {
            count += 1;
        }
    }
    Ok(count)
}
