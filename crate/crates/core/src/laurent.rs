//! Exact single-variable Laurent polynomials over arbitrary-precision integers.
//!
//! The same type carries brackets (variable `A`), Jones polynomials (variable
//! `q = t^{1/4}`) and Conway polynomials (variable `z`, nonnegative exponents).
//! Terms are kept in canonical form: no stored coefficient is ever zero, so
//! structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("negative power of a monomial with coefficient {0} is not a Laurent polynomial")]
    NonUnitPower(i64),
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial<C: Into<BigInt>>(exp: i64, coeff: C) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// δ = −A² − A⁻², the value of a crossingless circle.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `(c·x^e)^k`. Negative `k` requires `c = ±1`.
    pub fn monomial_pow(base_exp: i64, coeff: i64, k: i64) -> Result<Self, LaurentError> {
        if k < 0 && coeff.abs() != 1 {
            return Err(LaurentError::NonUnitPower(coeff));
        }
        if coeff == 0 {
            return Ok(if k == 0 { Self::one() } else { Self::zero() });
        }
        let c = if k >= 0 {
            num_traits::pow(BigInt::from(coeff), k as usize)
        } else if coeff == -1 && k % 2 != 0 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        Ok(Self::monomial(base_exp * k, c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x ↦ x⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `x ↦ x^k` for a nonzero integer `k`.
    pub fn scale_exponents(&self, k: i64) -> Self {
        assert!(k != 0, "exponent scale must be nonzero");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * &c)).collect(),
        }
    }

    pub fn max_exponent(&self) -> Result<i64, LaurentError> {
        self.terms.keys().next_back().copied().ok_or(LaurentError::ZeroPolynomial)
    }

    pub fn min_exponent(&self) -> Result<i64, LaurentError> {
        self.terms.keys().next().copied().ok_or(LaurentError::ZeroPolynomial)
    }

    pub fn span(&self) -> Result<i64, LaurentError> {
        Ok(self.max_exponent()? - self.min_exponent()?)
    }

    pub fn leading_term(&self) -> Result<(i64, BigInt), LaurentError> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (*e, c.clone()))
            .ok_or(LaurentError::ZeroPolynomial)
    }

    pub fn trailing_term(&self) -> Result<(i64, BigInt), LaurentError> {
        self.terms
            .iter()
            .next()
            .map(|(e, c)| (*e, c.clone()))
            .ok_or(LaurentError::ZeroPolynomial)
    }

    /// Exact division in `Z[x, x⁻¹]`. Returns `None` when `divisor` does not
    /// divide `self` with an integral quotient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (d_top, d_lead) = divisor.leading_term().ok()?;
        let d_low = divisor.min_exponent().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Every step removes the top term of the remainder, so the remainder's
        // top exponent strictly decreases; stop once it can no longer absorb
        // the divisor's full span.
        while !rem.is_zero() {
            let (r_top, r_lead) = rem.leading_term().ok()?;
            if r_top - (d_top - d_low) < rem.min_exponent().ok()? {
                return None;
            }
            if !(&r_lead % &d_lead).is_zero() {
                return None;
            }
            let q = Self::monomial(r_top - d_top, &r_lead / &d_lead);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Some(quot)
    }

    /// Renders with descending exponents, e.g. `A^8 + 2 + A^-8`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }

    /// JSON-ready term list: `[exponent, "coefficient"]` pairs, descending.
    pub fn to_json_terms(&self) -> Vec<(i64, String)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c.to_string())).collect()
    }

    pub fn from_json_terms(terms: &[(i64, String)]) -> Result<Self, num_bigint::ParseBigIntError> {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(*e, c.parse::<BigInt>()?);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<(i64, String)>::deserialize(d)?;
        Self::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("A"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
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

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
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

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
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

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_cancels_and_keeps_identity() {
        let a = p(&[(2, 1), (0, 1)]);
        let b = p(&[(2, -1), (-2, 1)]);
        assert_eq!(&a + &b, p(&[(0, 1), (-2, 1)]));
        let h = p(&[(8, 1), (0, 2), (-8, 1)]);
        assert_eq!(&h + &LaurentPoly::zero(), h);
        assert!(p(&[(3, 0)]).is_zero());
    }

    #[test]
    fn mul_examples() {
        let a = p(&[(1, 1), (-1, 1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
        assert_eq!(&a * &LaurentPoly::one(), a);
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, p(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn monomial_powers() {
        assert_eq!(LaurentPoly::monomial_pow(3, -1, 2).unwrap(), p(&[(6, 1)]));
        assert_eq!(LaurentPoly::monomial_pow(3, -1, -1).unwrap(), p(&[(-3, -1)]));
        assert_eq!(LaurentPoly::monomial_pow(3, -1, 0).unwrap(), LaurentPoly::one());
        assert_eq!(LaurentPoly::monomial_pow(3, -1, -2).unwrap(), p(&[(-6, 1)]));
        assert_eq!(
            LaurentPoly::monomial_pow(1, 2, -1),
            Err(LaurentError::NonUnitPower(2))
        );
        assert_eq!(LaurentPoly::monomial_pow(1, 2, 3).unwrap(), p(&[(3, 8)]));
    }

    #[test]
    fn invert_variable_examples() {
        let h = p(&[(8, 1), (0, 2), (-8, 1)]);
        assert_eq!(h.invert_variable(), h);
        assert_eq!(p(&[(3, -1)]).invert_variable(), p(&[(-3, -1)]));
        let c10 = p(&[(11, -1), (3, -2), (-5, -1)]);
        assert_eq!(c10.invert_variable(), p(&[(-11, -1), (-3, -2), (5, -1)]));
    }

    #[test]
    fn span_and_extreme_terms() {
        assert_eq!(p(&[(8, 1), (0, 2), (-8, 1)]).span().unwrap(), 16);
        assert_eq!(LaurentPoly::constant(5).span().unwrap(), 0);
        assert_eq!(LaurentPoly::delta().span().unwrap(), 4);
        assert_eq!(LaurentPoly::zero().span(), Err(LaurentError::ZeroPolynomial));

        let f = p(&[(40, 1), (-52, -1)]);
        assert_eq!(f.leading_term().unwrap(), (40, BigInt::from(1)));
        assert_eq!(f.trailing_term().unwrap(), (-52, BigInt::from(-1)));
        let c = LaurentPoly::constant(3);
        assert_eq!(c.leading_term().unwrap(), (0, BigInt::from(3)));
        assert_eq!(c.trailing_term().unwrap(), (0, BigInt::from(3)));
        let m = p(&[(-1, -2)]);
        assert_eq!(m.leading_term().unwrap(), (-1, BigInt::from(-2)));
        assert_eq!(m.trailing_term().unwrap(), (-1, BigInt::from(-2)));
        assert!(LaurentPoly::zero().leading_term().is_err());
        assert!(LaurentPoly::zero().trailing_term().is_err());
    }

    #[test]
    fn exact_division() {
        let d = LaurentPoly::delta();
        let x = p(&[(7, 3), (1, -2), (-4, 5)]);
        assert_eq!((&x * &d).div_exact(&d), Some(x.clone()));
        let d2m1 = &(&d * &d) - &LaurentPoly::one();
        assert_eq!((&x * &d2m1).div_exact(&d2m1), Some(x.clone()));
        assert_eq!(x.div_exact(&d), None);
        assert_eq!(LaurentPoly::zero().div_exact(&d), Some(LaurentPoly::zero()));
        assert_eq!(p(&[(0, 3)]).div_exact(&p(&[(0, 2)])), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(8, 1), (0, 2), (-8, 1)]).render("A"), "A^8 + 2 + A^-8");
        assert_eq!(p(&[(2, -1), (-2, -1)]).render("A"), "-A^2 - A^-2");
        assert_eq!(p(&[(1, 2), (3, 1)]).render("z"), "z^3 + 2z");
        assert_eq!(LaurentPoly::zero().render("z"), "0");
        let h = p(&[(8, 1), (0, 2), (-8, 1)]);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"[[8,"1"],[0,"2"],[-8,"1"]]"#);
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let x = p(&[(1, 1), (0, 1)]);
        let big = x.pow(200);
        let mid = big.coeff(100);
        assert!(mid > BigInt::from(u128::MAX));
        assert_eq!(big.span().unwrap(), 200);
    }
}
