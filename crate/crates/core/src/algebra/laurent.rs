use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// Element of `Z[v, v^-1]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "BTreeMap<i32, i64>", into = "BTreeMap<i32, i64>")]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `coeff * v^exp`
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// The single `(coeff, exp)` pair if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, &c)| (c, e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (e, c) in other.terms() {
            self.add_term(e, c);
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i32) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect(),
        }
    }
}

impl From<BTreeMap<i32, i64>> for LaurentPoly {
    fn from(map: BTreeMap<i32, i64>) -> Self {
        LaurentPoly::from_terms(map)
    }
}

impl From<LaurentPoly> for BTreeMap<i32, i64> {
    fn from(p: LaurentPoly) -> Self {
        p.terms
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

/// Renders terms from the highest exponent down, e.g. `3v^1 + 2 - v^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "v^{e}")?;
            } else {
                write!(f, "{mag}v^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_inverse_monomials() {
        let x = LaurentPoly::from_terms([(3, 2), (-1, 5)]);
        assert_eq!(&LaurentPoly::one() * &x, x);
        assert_eq!(
            &LaurentPoly::monomial(1, 1) * &LaurentPoly::monomial(1, -1),
            LaurentPoly::one()
        );
    }

    #[test]
    fn distributes() {
        let a = LaurentPoly::from_terms([(1, 2), (0, 1)]);
        let b = LaurentPoly::monomial(1, -1);
        assert_eq!(&a * &b, LaurentPoly::from_terms([(0, 2), (-1, 1)]));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = LaurentPoly::monomial(3, 2);
        a.add_term(2, -3);
        assert!(a.is_zero());
        assert_eq!(LaurentPoly::monomial(0, 4), LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::constant(3).to_string(), "3");
        assert_eq!(LaurentPoly::monomial(3, 1).to_string(), "3v^1");
        assert_eq!(
            LaurentPoly::from_terms([(0, 2), (-1, 1)]).to_string(),
            "2 + v^-1"
        );
        assert_eq!(
            LaurentPoly::from_terms([(2, -1), (0, -4)]).to_string(),
            "-v^2 - 4"
        );
    }

    #[test]
    fn json_keys_are_exponents() {
        let a = LaurentPoly::from_terms([(1, 3), (-2, 1)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"-2":1,"1":3}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
