//! The link and tangle families: `C(T)` with its meridian, `TU(n, m)` and
//! `U(n, m)`, and the Conway-trivial tangle `T₀` built from `T_A`, `T_B`,
//! `T_C`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bracket::kauffman_bracket;
use crate::conway::ConwayPoly;
use crate::diagram::{parse_pd, LinkDiagram};
use crate::expr::{parse_tangle, ExprError, TExpr};
use crate::laurent::LaurentPoly;
use crate::tangle::{BracketVector, ConwayVector, OrientationClass, Tangle, TangleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Orientation of `C(T)`: none, or one of the two meridian directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CSelector {
    Unoriented,
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: String,
    pub n: i64,
    pub m: i64,
    pub orientation: CSelector,
}

/// Two horizontal strands with a meridian loop around them: over both on
/// the left, under both on the right.
pub fn meridian_belt() -> Tangle {
    // top strand t0 t1 t2, bottom b0 b1 b2, loop m0..m3
    let (t0, t1, t2, b0, b1, b2, m0, m1, m2, m3) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
    let crossings = vec![
        [t0, m0, t1, m3],
        [b0, m1, b1, m0],
        [m1, b2, m2, b1],
        [m2, t2, m3, t1],
    ];
    Tangle::from_pd(crossings, [t0, t2, b0, b2], 0).expect("valid belt")
}

/// `C(T)`: the numerator closure of `T` with a meridian around its two left
/// strands.
pub fn c_of(t: &Tangle, sel: CSelector) -> Result<LinkDiagram, TangleError> {
    let seed = match sel {
        CSelector::Unoriented => return meridian_belt().sum(&t.forget_orientation())?.numerator(),
        CSelector::Plus => (0, 3),
        CSelector::Minus => (0, 1),
    };
    let t = if t.is_oriented() { t.clone() } else { t.orient(OrientationClass::LeftRight)? };
    if t.orientation_class() != OrientationClass::LeftRight {
        return Err(TangleError::WrongClass { expected: "left_right", found: t.orientation_class() });
    }
    let belt = meridian_belt().orient_with(OrientationClass::LeftRight, &[seed])?;
    belt.sum(&t)?.numerator()
}

/// `⟨C(T)⟩ = (−A⁶−A⁻⁶)⟨Tᴺ⟩ + (−A⁴−A⁻⁴+2)⟨Tᴰ⟩`.
pub fn bracket_c_formula(t: &Tangle) -> Result<LaurentPoly, TangleError> {
    let t = t.forget_orientation();
    let n = kauffman_bracket(&t.numerator()?);
    let d = kauffman_bracket(&t.denominator()?);
    Ok(closure_formula(&n, &d))
}

fn closure_formula(n: &LaurentPoly, d: &LaurentPoly) -> LaurentPoly {
    let a = LaurentPoly::from_terms([(6, -1), (-6, -1)]);
    let b = LaurentPoly::from_terms([(4, -1), (-4, -1), (0, 2)]);
    &(&a * n) + &(&b * d)
}

/// `⟨C(T)⟩` from `br(T)`, via `⟨C(0)⟩ = A⁸+2+A⁻⁸` and `⟨C(∞)⟩ = δ`.
pub fn bracket_c_from_vector(br: &BracketVector) -> LaurentPoly {
    let c0 = LaurentPoly::from_terms([(8, 1), (0, 2), (-8, 1)]);
    &(&br.f * &c0) + &(&br.g * &LaurentPoly::delta())
}

pub fn hopf() -> LinkDiagram {
    parse_pd("PD oriented 0\nX 1 3 2 4\nX 3 1 4 2\n").expect("valid")
}

/// `H = C(0)`, oriented as `C₊(0)`.
pub fn h() -> LinkDiagram {
    c_of(&Tangle::zero(), CSelector::Plus).expect("0 is left-right")
}

/// A vertical column of `|j|` crossings (`∞` when `j = 0`).
pub fn v_column(j: i64) -> TExpr {
    let unit = TExpr::Int(j.signum());
    (0..j.unsigned_abs()).fold(TExpr::Inf, |acc, _| TExpr::star(acc, unit.clone()))
}

pub fn tu_expr(n: i64, m: i64) -> TExpr {
    let left = TExpr::star(v_column(n), TExpr::Int(2));
    let right = if m <= 0 {
        TExpr::star(v_column(m), TExpr::Int(-2))
    } else {
        TExpr::star(v_column(m - 1), TExpr::Int(2))
    };
    TExpr::sum(left, right)
}

/// Two clasped strands with an `n`-twist and an `m`-twist region.
pub fn tu(n: i64, m: i64) -> Tangle {
    tu_expr(n, m).build()
}

pub fn u(n: i64, m: i64) -> LinkDiagram {
    c_of(&tu(n, m), CSelector::Unoriented).expect("unoriented")
}

/// Product form of `⟨TU(n,m)ᴰ⟩` for `n ≥ 0` and either `−n ≤ m ≤ 0` or
/// `m > 0`.
pub fn closed_form_tu_d(n: i64, m: i64) -> Result<LaurentPoly, FamilyError> {
    if n < 0 || m < -n {
        return Err(FamilyError::OutOfRange(format!("closed form needs n >= 0 and m >= -n, got ({n}, {m})")));
    }
    let x = LaurentPoly::from_terms([(4, 1), (-4, 1)]);
    let alt = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let mut left = LaurentPoly::monomial(-n - 6, 1);
    for k in 1..=n {
        left += &(&x * &LaurentPoly::monomial(4 * k - n - 2, alt(k)));
    }
    let right = if m <= 0 {
        let m = -m;
        let mut r = LaurentPoly::monomial(m + 6, 1);
        for k in 1..=m {
            r += &(&x * &LaurentPoly::monomial(-4 * k + m + 2, alt(k)));
        }
        r
    } else {
        let mut r = LaurentPoly::monomial(-m - 5, 1);
        for k in 1..m {
            r += &(&x * &LaurentPoly::monomial(4 * k - m - 1, alt(k)));
        }
        r
    };
    Ok(left * right)
}

/// The tangle 6 with the pretzel knot P(-3, 5, 7), whose Conway polynomial
/// is 1, tied into one strand.
pub const TC_EXPR: &str = "6 + (rot(-3) + rot(5) + rot(7)) * 0";

pub fn t_a_expr() -> TExpr {
    TExpr::rho(TExpr::Int(2))
}

pub fn t_b_expr() -> TExpr {
    TExpr::Int(-6)
}

pub fn t_c_expr() -> TExpr {
    parse_tangle(TC_EXPR).expect("valid")
}

pub fn t_plus_expr() -> TExpr {
    TExpr::rot(TExpr::sum(TExpr::sum(t_a_expr(), t_b_expr()), t_c_expr()))
}

pub fn t_minus_expr() -> TExpr {
    TExpr::rot(TExpr::sum(TExpr::sum(TExpr::neg(t_a_expr()), t_b_expr()), t_c_expr()))
}

/// `T₀ + ⋯ + T₀`, `n` summands.
pub fn t_zero_expr(n: usize) -> TExpr {
    let t0 = TExpr::sum(t_plus_expr(), t_minus_expr());
    (1..n).fold(t0.clone(), |acc, _| TExpr::sum(acc, t0.clone()))
}

pub fn one_star_t0_expr(n: usize) -> TExpr {
    TExpr::star(TExpr::Int(1), t_zero_expr(n))
}

fn diagonal(e: TExpr) -> Tangle {
    e.build_oriented(OrientationClass::DiagonalA).expect("diagonally orientable")
}

pub fn t_a() -> Tangle {
    diagonal(t_a_expr())
}

pub fn t_b() -> Tangle {
    diagonal(t_b_expr())
}

pub fn t_c() -> Tangle {
    diagonal(t_c_expr())
}

pub fn t_plus() -> Tangle {
    diagonal(t_plus_expr())
}

pub fn t_minus() -> Tangle {
    diagonal(t_minus_expr())
}

fn check_n(n: usize) -> Result<(), FamilyError> {
    if n < 1 {
        return Err(FamilyError::OutOfRange("n must be at least 1".into()));
    }
    Ok(())
}

pub fn t_zero(n: usize) -> Result<Tangle, FamilyError> {
    check_n(n)?;
    Ok(t_zero_expr(n).build_oriented(OrientationClass::DiagonalB)?)
}

pub fn one_star_t0(n: usize) -> Result<Tangle, FamilyError> {
    check_n(n)?;
    Ok(one_star_t0_expr(n).build_oriented(OrientationClass::LeftRight)?)
}

pub fn js_link(n: usize) -> Result<LinkDiagram, FamilyError> {
    Ok(c_of(&one_star_t0(n)?, CSelector::Unoriented)?)
}

pub fn js_link_oriented(n: usize, sel: CSelector) -> Result<LinkDiagram, FamilyError> {
    Ok(c_of(&one_star_t0(n)?, sel)?)
}

/// `br(T₀(n))` by repeated tangle addition.
pub fn t_zero_bracket_vector(n: usize) -> Result<BracketVector, FamilyError> {
    check_n(n)?;
    let t0 = TExpr::sum(t_plus_expr(), t_minus_expr()).bracket_vector();
    Ok((1..n).fold(t0.clone(), |acc, _| acc.sum(&t0)))
}

/// `⟨C(1∗T₀(n))⟩` by bracket-vector algebra.
pub fn js_link_bracket(n: usize) -> Result<LaurentPoly, FamilyError> {
    let one = TExpr::Int(1).bracket_vector();
    Ok(bracket_c_from_vector(&one.star(&t_zero_bracket_vector(n)?)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remark54 {
    pub u0_numerator: ConwayPoly,
    pub u0_denominator: ConwayPoly,
    pub con_ta_star: (ConwayVector, ConwayVector),
    pub con_neg_ta_star: (ConwayVector, ConwayVector),
    pub con_t0_prime: ConwayVector,
}

impl Remark54 {
    pub fn holds(&self) -> bool {
        self.u0_numerator == ConwayPoly::one()
            && self.u0_denominator == ConwayPoly::zero()
            && self.con_ta_star.0 == self.con_ta_star.1
            && self.con_neg_ta_star.0 == self.con_neg_ta_star.1
            && self.con_t0_prime == ConwayVector::zero_tangle()
    }
}

/// `T_A′` is `T_A` turned a quarter, so that `T₀′ = (T_A′∗U₀) + (−T_A′∗U₀)`
/// is `T₀` drawn with a left-right orientation.
pub fn remark_5_4() -> Result<Remark54, FamilyError> {
    let ta_prime = TExpr::rot(t_a_expr());
    let u0 = TExpr::rot(TExpr::sum(t_b_expr(), t_c_expr()));
    let f_u0 = diagonal(u0.clone()).fraction()?;
    let con = |e: &TExpr| -> Result<ConwayVector, FamilyError> {
        Ok(e.build_oriented(OrientationClass::LeftRight)?.conway_vector()?)
    };
    let a = TExpr::star(ta_prime.clone(), u0.clone());
    let b = TExpr::star(TExpr::neg(ta_prime.clone()), u0);
    let t0_prime = TExpr::sum(a.clone(), b.clone());
    Ok(Remark54 {
        u0_numerator: f_u0.num.clone(),
        u0_denominator: f_u0.den.clone(),
        con_ta_star: (con(&a)?, con(&ta_prime)?),
        con_neg_ta_star: (con(&b)?, con(&TExpr::neg(ta_prime))?),
        con_t0_prime: con(&t0_prime)?,
    })
}

pub fn remark_5_4_check() -> bool {
    remark_5_4().map(|r| r.holds()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::conway;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn belt_closures() {
        let c0 = c_of(&Tangle::zero(), CSelector::Unoriented).unwrap();
        assert_eq!(c0.num_crossings(), 4);
        assert_eq!(c0.components(), 3);
        assert_eq!(kauffman_bracket(&c0), p(&[(8, 1), (0, 2), (-8, 1)]));
        let cinf = c_of(&Tangle::infinity(), CSelector::Unoriented).unwrap();
        assert_eq!(kauffman_bracket(&cinf), p(&[(2, -1), (-2, -1)]));
    }

    #[test]
    fn meridian_directions() {
        let z2 = ConwayPoly::from_terms(&[(2, 1)]);
        assert_eq!(conway(&c_of(&Tangle::zero(), CSelector::Plus).unwrap()).unwrap(), z2);
        assert_eq!(conway(&c_of(&Tangle::zero(), CSelector::Minus).unwrap()).unwrap(), z2);
        let one = Tangle::one();
        assert_eq!(
            conway(&c_of(&one, CSelector::Plus).unwrap()).unwrap(),
            ConwayPoly::from_terms(&[(1, 2), (3, 1)])
        );
        assert_eq!(conway(&c_of(&one, CSelector::Minus).unwrap()).unwrap(), ConwayPoly::from_terms(&[(1, -2)]));
    }

    #[test]
    fn c_of_one_star() {
        let t = Tangle::one().star(&Tangle::zero()).unwrap();
        assert_eq!(kauffman_bracket(&c_of(&t, CSelector::Unoriented).unwrap()), p(&[(11, -1), (3, -2), (-5, -1)]));
        let t = Tangle::one().star(&Tangle::infinity()).unwrap();
        assert_eq!(kauffman_bracket(&c_of(&t, CSelector::Unoriented).unwrap()), p(&[(9, 1), (1, 1), (-3, -1), (-7, 1)]));
    }

    #[test]
    fn fractions_of_the_pieces() {
        let f = |num: &[(i64, i64)], den: &[(i64, i64)]| {
            crate::tangle::TangleFraction::new(ConwayPoly::from_terms(num), ConwayPoly::from_terms(den))
        };
        assert_eq!(t_a().fraction().unwrap(), f(&[(0, 1)], &[(1, 1)]));
        assert_eq!(diagonal(TExpr::neg(t_a_expr())).fraction().unwrap(), f(&[(0, 1)], &[(1, -1)]));
        assert_eq!(t_b().fraction().unwrap(), f(&[(1, 3)], &[(0, 1)]));
        assert_eq!(t_c().fraction().unwrap(), f(&[(1, -3)], &[(0, 1)]));
    }

    #[test]
    fn tu_denominators_match_closed_form() {
        for (n, m) in [(1, -1), (2, 0), (1, 2), (3, -1), (0, 3), (2, -2)] {
            let d = kauffman_bracket(&tu(n, m).denominator().unwrap());
            assert_eq!(d, closed_form_tu_d(n, m).unwrap(), "({n},{m})");
        }
        assert!(closed_form_tu_d(1, -3).is_err());
    }

    // regression value, default orientation
    #[test]
    fn u_1_0_jones_is_nontrivial() {
        let v = crate::bracket::jones(&u(1, 0).oriented()).unwrap();
        assert_eq!(v.render_t(), "t^-2 - t^-3 + 2t^-4 - 2t^-5 + 3t^-6 - t^-7 + 2t^-8");
    }
}
