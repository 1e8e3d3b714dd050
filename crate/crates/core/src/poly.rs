//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients. Index `i` of the coefficient vector holds the coefficient
//! of `x^i`; the vector never ends in a zero.
//!
//! Coefficients may be negative: recurrences subtract intermediate terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DomPoly {
    coeffs: Vec<BigInt>,
}

impl DomPoly {
    pub fn zero() -> Self {
        DomPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DomPoly { coeffs }
    }

    /// Convenience constructor from machine integers, ascending powers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficients, normalized (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest non-zero coefficient; for a domination
    /// polynomial this is the domination number.
    pub fn lowest_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `a * x^k`.
    pub fn scale_by_monomial(&self, a: impl Into<BigInt>, k: usize) -> DomPoly {
        let a = a.into();
        if a.is_zero() || self.is_zero() {
            return DomPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|c| c * &a));
        DomPoly { coeffs }
    }

    pub fn shift(&self, k: usize) -> DomPoly {
        self.scale_by_monomial(1, k)
    }

    /// Horner evaluation at an integer point.
    pub fn eval_at(&self, t: impl Into<BigInt>) -> BigInt {
        let t = t.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    /// Quotient of `self / (x - 1)` by synthetic division. Fails, carrying
    /// the remainder `self(1)`, unless the division is exact.
    pub fn divide_exact_by_x_minus_1(&self) -> Result<DomPoly> {
        let Some(d) = self.degree() else {
            return Ok(DomPoly::zero());
        };
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (1..=d).rev() {
            carry += &self.coeffs[i];
            quotient[i - 1] = carry.clone();
        }
        let remainder = carry + &self.coeffs[0];
        if !remainder.is_zero() {
            return Err(Error::InexactDivision {
                remainder: DomPoly::monomial(remainder, 0),
            });
        }
        Ok(DomPoly::from_coeffs(quotient))
    }

    /// Exact polynomial long division over the integers.
    pub fn div_exact(&self, divisor: &DomPoly) -> Result<DomPoly> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Config("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quotient = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            if !c.is_zero() {
                if !(&c % lead).is_zero() {
                    return Err(Error::InexactDivision {
                        remainder: DomPoly::from_coeffs(rem),
                    });
                }
                let q = &c / lead;
                let shift = top - dd;
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &q * dc;
                }
                quotient[shift] = q;
            }
            rem.pop();
        }
        let rem = DomPoly::from_coeffs(rem);
        if !rem.is_zero() {
            return Err(Error::InexactDivision { remainder: rem });
        }
        Ok(DomPoly::from_coeffs(quotient))
    }

    /// First index where the two coefficient vectors differ.
    pub fn first_mismatch(&self, other: &DomPoly) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coefficient(i) != other.coefficient(i))
    }

    /// JSON array of decimal strings, ascending powers.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("string arrays always serialize")
    }

    pub fn from_json(text: &str) -> Result<DomPoly> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

impl Add<&DomPoly> for &DomPoly {
    type Output = DomPoly;

    fn add(self, rhs: &DomPoly) -> DomPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        DomPoly::from_coeffs(coeffs)
    }
}

impl Sub<&DomPoly> for &DomPoly {
    type Output = DomPoly;

    fn sub(self, rhs: &DomPoly) -> DomPoly {
        self + &(-rhs)
    }
}

impl Neg for &DomPoly {
    type Output = DomPoly;

    fn neg(self) -> DomPoly {
        DomPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&DomPoly> for &DomPoly {
    type Output = DomPoly;

    fn mul(self, rhs: &DomPoly) -> DomPoly {
        if self.is_zero() || rhs.is_zero() {
            return DomPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DomPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<DomPoly> for DomPoly {
            type Output = DomPoly;
            fn $f(self, rhs: DomPoly) -> DomPoly { (&self).$f(&rhs) }
        }
        impl $tr<&DomPoly> for DomPoly {
            type Output = DomPoly;
            fn $f(self, rhs: &DomPoly) -> DomPoly { (&self).$f(rhs) }
        }
        impl $tr<DomPoly> for &DomPoly {
            type Output = DomPoly;
            fn $f(self, rhs: DomPoly) -> DomPoly { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for DomPoly {
    /// Descending powers with explicit `^`, e.g. `x^5+5x^4+10x^3+8x^2+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DomPoly({self})")
    }
}

impl FromStr for DomPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<DomPoly> {
        let err = |message: String| Error::Parse { line: 1, message };
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut acc = DomPoly::zero();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if rest.len() == text.len() => (false, rest),
                _ => return Err(err(format!("expected sign at `{rest}`"))),
            };
            let end = body[1.min(body.len())..]
                .find(['+', '-'])
                .map_or(body.len(), |i| i + 1);
            let term = &body[..end];
            rest = &body[end..];

            let (digits, power) = match term.find('x') {
                None => (term, 0),
                Some(i) => {
                    let power = match &term[i + 1..] {
                        "" => 1,
                        p => p
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| err(format!("bad exponent in `{term}`")))?,
                    };
                    (&term[..i], power)
                }
            };
            let mut c = if digits.is_empty() {
                if power == 0 {
                    return Err(err("empty term".into()));
                }
                BigInt::one()
            } else {
                digits
                    .parse::<BigInt>()
                    .ok()
                    .filter(|c| !c.is_negative())
                    .ok_or_else(|| err(format!("bad coefficient in `{term}`")))?
            };
            if negative {
                c = -c;
            }
            acc = &acc + &DomPoly::monomial(c, power);
        }
        Ok(acc)
    }
}

impl Serialize for DomPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for DomPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(DomPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> DomPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x^2+2x") * &p("x"), p("x^3+2x^2"));
        assert_eq!(&p("x^3+3x^2+3x") + &DomPoly::zero(), p("x^3+3x^2+3x"));
        assert_eq!(&p("x^2+x") - &p("x^2+x"), DomPoly::zero());
        assert_eq!(p("x^2+1").scale_by_monomial(-3, 2), p("-3x^4-3x^2"));
    }

    #[test]
    fn exact_division_by_x_minus_1() {
        assert_eq!(p("x^2-1").divide_exact_by_x_minus_1().unwrap(), p("x+1"));
        assert_eq!(p("x^3-x^2").divide_exact_by_x_minus_1().unwrap(), p("x^2"));
        assert_eq!(DomPoly::zero().divide_exact_by_x_minus_1().unwrap(), DomPoly::zero());
        assert_eq!(
            p("x^2+1").divide_exact_by_x_minus_1(),
            Err(Error::InexactDivision { remainder: p("2") })
        );
    }

    #[test]
    fn general_exact_division() {
        let q = p("x^3-2x+7");
        let d = p("-x^3-x^2-2x+1");
        assert_eq!((&q * &d).div_exact(&d).unwrap(), q);
        assert!(p("x^2+1").div_exact(&p("2x")).is_err());
        assert!(p("x^2+1").div_exact(&p("x+1")).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x^3+3x^2+3x").eval_at(1), BigInt::from(7));
        assert_eq!(DomPoly::zero().eval_at(12), BigInt::zero());
        assert_eq!(p("x^5+5x^4+10x^3+8x^2+x").eval_at(1), BigInt::from(25));
        assert_eq!(p("x^2-x").eval_at(-2), BigInt::from(6));
    }

    #[test]
    fn rendering() {
        assert_eq!(p("x^5+5x^4+10x^3+8x^2+x").to_string(), "x^5+5x^4+10x^3+8x^2+x");
        assert_eq!(DomPoly::zero().to_string(), "0");
        assert_eq!(DomPoly::one().to_string(), "1");
        assert_eq!(DomPoly::from_i64s(&[-1, 0, -1]).to_string(), "-x^2-1");
        assert_eq!(p("3 + x^2 - 2x").to_string(), "x^2-2x+3");
        assert_eq!(p("x^4+4x^3+6x^2").to_json(), r#"["0","0","6","4","1"]"#);
        for bad in ["", "x^", "2y", "x^2++x", "--1"] {
            assert!(bad.parse::<DomPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn structural_queries() {
        let d = p("x^7+7x^6+21x^5+29x^4+15x^3");
        assert_eq!(d.degree(), Some(7));
        assert_eq!(d.lowest_index(), Some(3));
        assert_eq!(d.coefficient(4), BigInt::from(29));
        assert_eq!(d.coefficient(40), BigInt::zero());
        assert_eq!(DomPoly::zero().degree(), None);
        assert_eq!(d.first_mismatch(&p("x^7+7x^6+21x^5+28x^4+15x^3")), Some(4));
        assert_eq!(d.first_mismatch(&d), None);
    }

    fn arb_poly() -> impl Strategy<Value = DomPoly> {
        proptest::collection::vec(-50i64..50, 0..8).prop_map(|c| DomPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a);
        }

        #[test]
        fn divide_inverts_multiplication_by_x_minus_1(a in arb_poly()) {
            let xm1 = DomPoly::from_i64s(&[-1, 1]);
            prop_assert_eq!((&a * &xm1).divide_exact_by_x_minus_1().unwrap(), a);
        }

        #[test]
        fn text_and_json_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<DomPoly>().unwrap(), a.clone());
            prop_assert_eq!(DomPoly::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
