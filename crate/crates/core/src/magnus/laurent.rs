use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial in `t`, stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    /// `coefficient * t^exponent`.
    pub fn monomial(coefficient: impl Into<BigInt>, exponent: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coefficient.into());
        p
    }

    pub fn t_pow(exponent: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, exponent)
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == LaurentPoly::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` when the polynomial is the single term `c t^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next()?;
            Some((c, *e))
        } else {
            None
        }
    }

    /// Units of `Z[t, t^-1]` are exactly `+-t^e`; returns `(sign, e)`.
    pub fn as_unit(&self) -> Option<(i32, i64)> {
        let (c, e) = self.as_monomial()?;
        if c.abs().is_one() {
            Some((if c.is_positive() { 1 } else { -1 }, e))
        } else {
            None
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// `self / divisor` when the division is exact in `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let low_b = divisor.min_degree()?;
        let Some(low_a) = self.min_degree() else {
            return Some(LaurentPoly::zero());
        };
        // Both shifted to polynomials with nonzero constant term. The divisor
        // is then prime to t, so exact Laurent division is exact polynomial
        // division.
        let b = divisor.shift(-low_b);
        let mut rem = self.shift(-low_a);
        let deg_b = b.max_degree()?;
        let lead_b = &b.terms[&deg_b];
        let mut quotient = LaurentPoly::zero();
        while let Some(deg_r) = rem.max_degree() {
            if deg_r < deg_b {
                return None;
            }
            let lead_r = &rem.terms[&deg_r];
            let (q, r) = lead_r.div_rem(lead_b);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(q, deg_r - deg_b);
            rem = &rem - &(&term * &b);
            quotient = &quotient + &term;
        }
        Some(quotient.shift(low_a - low_b))
    }

    /// Value at `t = 1`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending powers, e.g. `1-t^2`, `-t^-1+3t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if *e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn addition_cancels_to_one() {
        let one_minus_t = p(&[(0, 1), (1, -1)]);
        assert_eq!(&one_minus_t + &LaurentPoly::t_pow(1), LaurentPoly::one());
        assert!((&one_minus_t - &one_minus_t).is_zero());
    }

    #[test]
    fn multiplication_with_negative_exponents() {
        let a = p(&[(-1, 1), (1, 1)]);
        let b = p(&[(-1, 1), (1, -1)]);
        assert_eq!(&a * &b, p(&[(-2, 1), (2, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(-1, 2), (0, 1), (3, -4)]);
        let b = p(&[(-5, 1), (-3, -1), (2, 7)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(p(&[(0, 1), (1, 1)]).div_exact(&p(&[(0, 2)])), None);
        assert_eq!(p(&[(0, 1)]).div_exact(&p(&[(0, 1), (1, 1)])), None);
        assert_eq!(LaurentPoly::zero().div_exact(&a), Some(LaurentPoly::zero()));
        assert_eq!(a.div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn units() {
        assert_eq!(p(&[(3, -1)]).as_unit(), Some((-1, 3)));
        assert_eq!(p(&[(3, 2)]).as_unit(), None);
        assert_eq!(p(&[(0, 1), (1, 1)]).as_unit(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(0, 1), (2, -1)]).to_string(), "1-t^2");
        assert_eq!(p(&[(-1, -1), (1, 3)]).to_string(), "-t^-1+3t");
        assert_eq!(p(&[(0, -1)]).to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(2, 1)]).to_string(), "t^2");
    }
}
