use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HallError, Result};

/// Largest characteristic accepted by [`PrimeField::new`].
pub const DEFAULT_PRIME_BOUND: u32 = 7;

/// The prime field F_p. Elements are `u8` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub const F2: PrimeField = PrimeField { p: 2 };
    pub const F3: PrimeField = PrimeField { p: 3 };

    pub fn new(p: u32) -> Result<Self> {
        Self::with_bound(p, DEFAULT_PRIME_BOUND)
    }

    /// Accepts any prime `p <= bound`; the bound itself may not exceed 251 so
    /// that elements fit in a byte.
    pub fn with_bound(p: u32, bound: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(HallError::invalid(format!("{p} is not prime")));
        }
        if p > bound || p > 251 {
            return Err(HallError::invalid(format!(
                "prime {p} exceeds the supported bound {bound}"
            )));
        }
        Ok(PrimeField { p: p as u8 })
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn order(self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u8) -> Option<u8> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        // a^(p-2) by Fermat
        let mut result = 1u8;
        let mut base = a % self.p;
        let mut e = self.p as u32 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Some(result)
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.p
    }

    /// A generator of the cyclic group F_p^×.
    pub fn primitive_root(self) -> u8 {
        if self.p == 2 {
            return 1;
        }
        let order = self.p as u32 - 1;
        (2..self.p)
            .find(|&g| {
                let mut x = 1u8;
                for k in 1..=order {
                    x = self.mul(x, g);
                    if x == 1 {
                        return k == order;
                    }
                }
                false
            })
            .expect("every prime field has a primitive root")
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = HallError;

    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p as u32
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
