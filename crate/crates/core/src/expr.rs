//! Tangle expressions: `2 * (-1 + rho(3))`, `C+(1 * T0)`.
//!
//! Atoms are integers, `inf`, and the named tangles `TA`, `TB`, `TC`, `T0`.
//! Unary `neg()`, `rho()`, `rot()` bind tightest, then `*`, then `+`. A whole
//! expression may be wrapped in a closure `N()`, `D()`, `C()`, `C+()`, `C-()`.
//!
//! Invariants are evaluated compositionally where the tangle algebra allows
//! and by direct diagram computation elsewhere.

use std::fmt;

use thiserror::Error;

use crate::families::{self, CSelector};
use crate::tangle::{BracketVector, ConwayVector, OrientationClass, Tangle, TangleError, TangleFraction, NE, NW, SE, SW};
use crate::conway::ConwayPoly;
use crate::{LaurentPoly, LinkDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error("expected a tangle expression, found a closure")]
    NotATangle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TExpr {
    Int(i64),
    Inf,
    Neg(Box<TExpr>),
    Rho(Box<TExpr>),
    Rot(Box<TExpr>),
    Sum(Box<TExpr>, Box<TExpr>),
    Star(Box<TExpr>, Box<TExpr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    N,
    D,
    C(CSelector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Tangle(TExpr),
    Closed(Closure, TExpr),
}

impl TExpr {
    pub fn sum(a: TExpr, b: TExpr) -> TExpr {
        TExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn star(a: TExpr, b: TExpr) -> TExpr {
        TExpr::Star(Box::new(a), Box::new(b))
    }

    pub fn neg(a: TExpr) -> TExpr {
        TExpr::Neg(Box::new(a))
    }

    pub fn rho(a: TExpr) -> TExpr {
        TExpr::Rho(Box::new(a))
    }

    pub fn rot(a: TExpr) -> TExpr {
        TExpr::Rot(Box::new(a))
    }

    /// Unoriented tangle diagram.
    pub fn build(&self) -> Tangle {
        match self {
            TExpr::Int(k) => Tangle::integer(*k),
            TExpr::Inf => Tangle::infinity(),
            TExpr::Neg(a) => a.build().negate(),
            TExpr::Rho(a) => a.build().rho(),
            TExpr::Rot(a) => a.build().rotate90(),
            TExpr::Sum(a, b) => a.build().sum(&b.build()).expect("unoriented"),
            TExpr::Star(a, b) => a.build().star(&b.build()).expect("unoriented"),
        }
    }

    /// Oriented tangle diagram: where both pieces of a sum or star carry a
    /// matching orientation, each piece is oriented on its own and the
    /// orientations are glued, which fixes the direction of any loop formed
    /// by the gluing.
    pub fn build_oriented(&self, class: OrientationClass) -> Result<Tangle, ExprError> {
        use OrientationClass::*;
        Ok(match class {
            Unoriented => self.build(),
            DiagonalA => self.build_diagonal()?,
            DiagonalB => self.build_diagonal()?.reverse(),
            LeftRight => self.build_left_right()?,
            RightLeft => self.build_left_right()?.reverse(),
            TopBottom | BottomTop => self.build().orient(class)?,
        })
    }

    fn build_diagonal(&self) -> Result<Tangle, ExprError> {
        let diag = |e: &TExpr| e.diagonal_orientable();
        Ok(match self {
            TExpr::Sum(a, b) if diag(a) && diag(b) => a.build_diagonal()?.sum(&b.build_diagonal()?)?,
            TExpr::Star(a, b) if diag(a) && diag(b) => a.build_diagonal()?.star(&b.build_diagonal()?)?,
            TExpr::Rot(a) if diag(a) => a.build_diagonal()?.rotate90().reverse(),
            TExpr::Rho(a) if diag(a) => a.build_diagonal()?.rho(),
            TExpr::Neg(a) if diag(a) => a.build_diagonal()?.negate(),
            _ => self.build().orient(OrientationClass::DiagonalA)?,
        })
    }

    fn build_left_right(&self) -> Result<Tangle, ExprError> {
        let (lr, diag) = (|e: &TExpr| e.left_right_orientable(), |e: &TExpr| e.diagonal_orientable());
        Ok(match self {
            TExpr::Sum(a, b) if lr(a) && lr(b) => a.build_left_right()?.sum(&b.build_left_right()?)?,
            TExpr::Star(a, w) if lr(a) && diag(w) => a.build_left_right()?.star(&w.build_diagonal()?.reverse())?,
            TExpr::Star(w, a) if diag(w) && lr(a) => w.build_diagonal()?.star(&a.build_left_right()?)?,
            TExpr::Neg(a) if lr(a) => a.build_left_right()?.negate(),
            _ => self.build().orient(OrientationClass::LeftRight)?,
        })
    }

    pub fn num_crossings(&self) -> usize {
        match self {
            TExpr::Int(k) => k.unsigned_abs() as usize,
            TExpr::Inf => 0,
            TExpr::Neg(a) | TExpr::Rho(a) | TExpr::Rot(a) => a.num_crossings(),
            TExpr::Sum(a, b) | TExpr::Star(a, b) => a.num_crossings() + b.num_crossings(),
        }
    }

    /// Which end each end is joined to, without building the diagram.
    pub fn end_pairing(&self) -> [usize; 4] {
        let swap = |p: [usize; 4], perm: [usize; 4]| {
            // new end i is old end perm[i]
            let inv = {
                let mut inv = [0; 4];
                for (i, &o) in perm.iter().enumerate() {
                    inv[o] = i;
                }
                inv
            };
            let mut out = [0; 4];
            for i in 0..4 {
                out[i] = inv[p[perm[i]]];
            }
            out
        };
        let zero = [NE, NW, SE, SW];
        let inf = [SW, SE, NW, NE];
        let diag = [SE, SW, NE, NW];
        match self {
            TExpr::Int(k) => {
                if k % 2 == 0 {
                    zero
                } else {
                    diag
                }
            }
            TExpr::Inf => inf,
            TExpr::Neg(a) => a.end_pairing(),
            TExpr::Rho(a) => swap(a.end_pairing(), [NW, SW, NE, SE]),
            TExpr::Rot(a) => swap(a.end_pairing(), [SW, NW, SE, NE]),
            TExpr::Sum(a, b) => {
                let (pa, pb) = (a.end_pairing(), b.end_pairing());
                classify(pa, pb, true)
            }
            TExpr::Star(a, b) => {
                let (pa, pb) = (a.end_pairing(), b.end_pairing());
                classify(pa, pb, false)
            }
        }
    }

    pub fn left_right_orientable(&self) -> bool {
        self.end_pairing()[NW] != SW
    }

    pub fn diagonal_orientable(&self) -> bool {
        self.end_pairing()[NW] != SE
    }

    /// br(T), compositionally.
    pub fn bracket_vector(&self) -> BracketVector {
        match self {
            TExpr::Int(k) => {
                let unit = if *k > 0 { one_br() } else { one_br().mirror() };
                (0..k.unsigned_abs()).fold(BracketVector::zero_tangle(), |acc, _| acc.sum(&unit))
            }
            TExpr::Inf => BracketVector::infinity_tangle(),
            TExpr::Neg(a) => a.bracket_vector().mirror(),
            TExpr::Rho(a) => a.bracket_vector().swap().mirror(),
            TExpr::Rot(a) => a.bracket_vector().swap(),
            TExpr::Sum(a, b) => a.bracket_vector().sum(&b.bracket_vector()),
            TExpr::Star(a, b) => a.bracket_vector().star(&b.bracket_vector()),
        }
    }

    /// F(T) for a diagonally orientable tangle, through sums and rotations
    /// where possible.
    pub fn fraction(&self) -> Result<TangleFraction, ExprError> {
        if !self.diagonal_orientable() {
            return Err(TangleError::NotOrientable(OrientationClass::DiagonalA).into());
        }
        match self {
            TExpr::Sum(a, b) if a.diagonal_orientable() && b.diagonal_orientable() => {
                Ok(a.fraction()?.sum(&b.fraction()?))
            }
            TExpr::Star(a, b) if a.diagonal_orientable() && b.diagonal_orientable() => {
                let (x, y) = (a.fraction()?, b.fraction()?);
                Ok(TangleFraction::new(&x.num * &y.num, &(&x.num * &y.den) + &(&x.den * &y.num)))
            }
            TExpr::Rot(a) => {
                let f = a.fraction()?;
                Ok(TangleFraction::new(f.den, f.num))
            }
            TExpr::Rho(a) | TExpr::Neg(a) if a.diagonal_orientable() => {
                let f = a.fraction()?;
                let (num, den) = (mirror_z(&f.num), mirror_z(&f.den));
                Ok(match self {
                    TExpr::Rho(_) => TangleFraction::new(den, num),
                    _ => TangleFraction::new(num, den),
                })
            }
            _ => Ok(self.build_diagonal()?.fraction()?),
        }
    }

    /// con(T) for a left-right orientable tangle.
    pub fn conway_vector(&self) -> Result<ConwayVector, ExprError> {
        if !self.left_right_orientable() {
            return Err(TangleError::NotOrientable(OrientationClass::LeftRight).into());
        }
        match self {
            TExpr::Sum(a, b) if a.left_right_orientable() && b.left_right_orientable() => {
                Ok(a.conway_vector()?.sum(&b.conway_vector()?))
            }
            TExpr::Star(a, w) if a.left_right_orientable() && w.diagonal_orientable() => {
                Ok(a.conway_vector()?.star(&w.fraction()?))
            }
            _ => Ok(self.build_left_right()?.conway_vector()?),
        }
    }
}

/// `∇` of the mirror image: `z ↦ −z`.
fn mirror_z(p: &ConwayPoly) -> ConwayPoly {
    let poly = LaurentPoly::from_terms(p.poly.terms().map(|(e, c)| (e, if e % 2 == 0 { c.clone() } else { -c })));
    ConwayPoly { poly }
}

fn one_br() -> BracketVector {
    BracketVector { f: LaurentPoly::monomial(1, 1), g: LaurentPoly::monomial(-1, 1) }
}

/// End pairing of a sum (`horizontal`) or star from the pieces' pairings.
fn classify(pa: [usize; 4], pb: [usize; 4], horizontal: bool) -> [usize; 4] {
    // glue points: for a sum, a.NE~b.NW and a.SE~b.SW; for a star,
    // a.SW~b.NW and a.SE~b.NE. Walk from each outer end.
    let (ga, gb): ([usize; 2], [usize; 2]) = if horizontal { ([NE, SE], [NW, SW]) } else { ([SW, SE], [NW, NE]) };
    let outer: [(bool, usize); 4] = if horizontal {
        [(false, NW), (true, NE), (false, SW), (true, SE)]
    } else {
        [(false, NW), (false, NE), (true, SW), (true, SE)]
    };
    let mut out = [0; 4];
    for (i, &(in_b, end)) in outer.iter().enumerate() {
        let (mut side_b, mut e) = (in_b, end);
        loop {
            let p = if side_b { pb[e] } else { pa[e] };
            let glue = if side_b { gb } else { ga };
            if let Some(k) = glue.iter().position(|&g| g == p) {
                side_b = !side_b;
                e = if side_b { gb[k] } else { ga[k] };
            } else {
                out[i] = outer.iter().position(|&(b, x)| b == side_b && x == p).unwrap();
                break;
            }
        }
    }
    out
}

impl fmt::Display for TExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TExpr::Int(k) => write!(f, "{k}"),
            TExpr::Inf => write!(f, "inf"),
            TExpr::Neg(a) => write!(f, "neg({a})"),
            TExpr::Rho(a) => write!(f, "rho({a})"),
            TExpr::Rot(a) => write!(f, "rot({a})"),
            TExpr::Sum(a, b) => write!(f, "{a} + {b}"),
            TExpr::Star(a, b) => {
                let wrap = |e: &TExpr| match e {
                    TExpr::Sum(..) => format!("({e})"),
                    _ => e.to_string(),
                };
                write!(f, "{} * {}", wrap(a), wrap(b))
            }
        }
    }
}

impl Expr {
    pub fn tangle(&self) -> Result<&TExpr, ExprError> {
        match self {
            Expr::Tangle(t) => Ok(t),
            Expr::Closed(..) => Err(ExprError::NotATangle),
        }
    }

    /// The closed diagram of a closure expression; a bare tangle is closed by
    /// its numerator.
    pub fn link(&self) -> Result<LinkDiagram, ExprError> {
        let (c, t) = match self {
            Expr::Tangle(t) => (Closure::N, t),
            Expr::Closed(c, t) => (*c, t),
        };
        Ok(match c {
            Closure::N => t.build().numerator()?,
            Closure::D => t.build().denominator()?,
            Closure::C(CSelector::Unoriented) => families::c_of(&t.build(), CSelector::Unoriented)?,
            Closure::C(sel) => families::c_of(&t.build_oriented(OrientationClass::LeftRight)?, sel)?,
        })
    }
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let src: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: &src, pos: 0 };
    let e = p.top()?;
    if p.pos != src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

pub fn parse_tangle(text: &str) -> Result<TExpr, ExprError> {
    match parse(text)? {
        Expr::Tangle(t) => Ok(t),
        Expr::Closed(..) => Err(ExprError::NotATangle),
    }
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn starts_with(&self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        self.s[self.pos..].starts_with(&w)
    }

    fn top(&mut self) -> Result<Expr, ExprError> {
        for (word, c) in [
            ("C+(", Closure::C(CSelector::Plus)),
            ("C-(", Closure::C(CSelector::Minus)),
            ("C(", Closure::C(CSelector::Unoriented)),
            ("N(", Closure::N),
            ("D(", Closure::D),
        ] {
            if self.starts_with(word) {
                self.pos += word.len();
                let t = self.sum()?;
                self.expect(')')?;
                return Ok(Expr::Closed(c, t));
            }
        }
        Ok(Expr::Tangle(self.sum()?))
    }

    fn sum(&mut self) -> Result<TExpr, ExprError> {
        let mut e = self.product()?;
        while self.eat('+') {
            e = TExpr::sum(e, self.product()?);
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<TExpr, ExprError> {
        let mut e = self.unary()?;
        while self.eat('*') {
            e = TExpr::star(e, self.unary()?);
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<TExpr, ExprError> {
        if self.eat('(') {
            let e = self.sum()?;
            self.expect(')')?;
            return Ok(e);
        }
        if self.eat('-') {
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Ok(TExpr::Int(-self.number()?));
            }
            return Ok(TExpr::neg(self.unary()?));
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(TExpr::Int(self.number()?));
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let word: String = self.s[start..self.pos].iter().collect();
        match word.as_str() {
            "inf" => Ok(TExpr::Inf),
            "TA" => Ok(families::t_a_expr()),
            "TB" => Ok(families::t_b_expr()),
            "TC" => Ok(families::t_c_expr()),
            "T0" => Ok(families::t_zero_expr(1)),
            "neg" | "rho" | "rot" => {
                self.expect('(')?;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(match word.as_str() {
                    "neg" => TExpr::neg(e),
                    "rho" => TExpr::rho(e),
                    _ => TExpr::rot(e),
                })
            }
            "" => Err(self.err("expected a tangle")),
            _ => {
                self.pos = start;
                Err(self.err(&format!("unknown name `{word}`")))
            }
        }
    }

    fn number(&mut self) -> Result<i64, ExprError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.s[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_tangle("1 + 2 * 3").unwrap();
        assert_eq!(e, TExpr::sum(TExpr::Int(1), TExpr::star(TExpr::Int(2), TExpr::Int(3))));
        let e = parse_tangle("-1 * -1").unwrap();
        assert_eq!(e, TExpr::star(TExpr::Int(-1), TExpr::Int(-1)));
        assert_eq!(parse_tangle(" rot( inf ) ").unwrap(), TExpr::rot(TExpr::Inf));
    }

    #[test]
    fn closures() {
        assert_eq!(parse("N(2)").unwrap(), Expr::Closed(Closure::N, TExpr::Int(2)));
        assert_eq!(parse("C+(1*0)").unwrap(), Expr::Closed(Closure::C(CSelector::Plus), TExpr::star(TExpr::Int(1), TExpr::Int(0))));
        assert!(parse("N(2").is_err());
        assert!(parse("foo").is_err());
        assert!(parse("1 +").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["2 * (-1 + rho(3))", "rot(neg(2) + inf) * 1", "1 + 2 + 3 * 4"] {
            let e = parse_tangle(s).unwrap();
            assert_eq!(parse_tangle(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn pairing_matches_diagram() {
        for s in ["2 * (-1 + rho(3))", "rot(3) + 1", "1 * 1", "inf + inf", "rho(1) * 2 + rot(inf)", "3 * inf"] {
            let e = parse_tangle(s).unwrap();
            assert_eq!(e.end_pairing(), e.build().end_pairing(), "{s}");
        }
    }

    #[test]
    fn algebraic_bracket_vector_matches_direct() {
        for s in ["2 * (-1 + rho(3))", "rot(3) + neg(1 * 2)", "TA + TB"] {
            let e = parse_tangle(s).unwrap();
            assert_eq!(e.bracket_vector(), e.build().bracket_vector().unwrap(), "{s}");
        }
    }
}
