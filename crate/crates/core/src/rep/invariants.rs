//! Isomorphism invariants used to bucket modules before pairwise tests.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::Matrix;
use crate::error::Result;

use super::hom::hom_space;
use super::Representation;

/// Maximal length of the path words whose ranks enter the invariants.
pub const WORD_LENGTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Invariants {
    pub dims: Vec<usize>,
    pub end_dim: usize,
    pub nilpotent: bool,
    /// Ranks of the matrices of all paths of length `1..=3`, in the order of
    /// `Quiver::paths_up_to`.
    pub word_ranks: Vec<usize>,
}

impl Invariants {
    /// A stable string form, used as the bucket key of the registry.
    pub fn signature(&self) -> String {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(".")
        };
        format!(
            "d{}|e{}|n{}|w{}",
            join(&self.dims),
            self.end_dim,
            self.nilpotent as u8,
            join(&self.word_ranks)
        )
    }

    /// First 8 hex digits of the SHA-256 of the signature.
    pub fn digest(&self) -> String {
        let h = Sha256::digest(self.signature().as_bytes());
        h.iter().take(4).map(|b| format!("{b:02x}")).collect()
    }
}

pub fn invariants(m: &Representation) -> Result<Invariants> {
    Ok(Invariants {
        dims: m.dims().to_vec(),
        end_dim: hom_space(m, m)?.dim(),
        nilpotent: m.is_nilpotent(),
        word_ranks: rank_profile(m, WORD_LENGTH),
    })
}

/// Ranks of the path words of length at most `max_len`.
pub(crate) fn rank_profile(m: &Representation, max_len: usize) -> Vec<usize> {
    let f = m.field();
    m.quiver()
        .paths_up_to(max_len)
        .iter()
        .map(|path| {
            let mut acc: Option<Matrix> = None;
            for &a in path {
                let ma = &m.maps()[a];
                acc = Some(match acc {
                    None => ma.clone(),
                    Some(prev) => ma.mul(&prev, f),
                });
            }
            acc.expect("paths are nonempty").rank(f)
        })
        .collect()
}
