//! Four-ended tangles and their invariants.
//!
//! Ends are kept in the order NW, NE, SW, SE. `T + U` puts `U` to the right
//! of `T`, `T * U` puts `U` below `T`. The numerator closure joins NW to NE
//! and SW to SE; the denominator joins NW to SW and NE to SE.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bracket::{max_cache_from_env, skein_partition};
use crate::conway::{conway, ConwayPoly};
use crate::diagram::{DiagramError, LinkDiagram};
use crate::laurent::LaurentPoly;
use crate::planar::{Planar, PlanarFault, REFLECT, SWAP_LAYERS};

pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationClass {
    Unoriented,
    /// NW and SW in, NE and SE out.
    LeftRight,
    /// NE and SE in.
    RightLeft,
    /// NW and NE in.
    TopBottom,
    /// SW and SE in.
    BottomTop,
    /// NW and SE in.
    DiagonalA,
    /// NE and SW in.
    DiagonalB,
}

impl OrientationClass {
    pub fn ends_in(self) -> Option<[bool; 4]> {
        use OrientationClass::*;
        Some(match self {
            Unoriented => return None,
            LeftRight => [true, false, true, false],
            RightLeft => [false, true, false, true],
            TopBottom => [true, true, false, false],
            BottomTop => [false, false, true, true],
            DiagonalA => [true, false, false, true],
            DiagonalB => [false, true, true, false],
        })
    }

    pub fn from_ends_in(e: Option<&[bool]>) -> Self {
        use OrientationClass::*;
        let Some(e) = e else { return Unoriented };
        for c in [LeftRight, RightLeft, TopBottom, BottomTop, DiagonalA, DiagonalB] {
            if c.ends_in().unwrap().as_slice() == e {
                return c;
            }
        }
        Unoriented
    }

    pub fn is_diagonal(self) -> bool {
        matches!(self, OrientationClass::DiagonalA | OrientationClass::DiagonalB)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("orientations disagree where the tangles are glued")]
    OrientationMismatch,
    #[error("the tangle cannot carry a {0:?} orientation")]
    NotOrientable(OrientationClass),
    #[error("expected a {expected:?} tangle, found {found:?}")]
    WrongClass { expected: &'static str, found: OrientationClass },
    #[error("this closure of a {0:?} tangle is not coherently oriented")]
    IncoherentClosure(OrientationClass),
    #[error("ends are joined diagonally; not a planar tangle")]
    NonPlanar,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tangle {
    pub(crate) code: Planar,
}

impl fmt::Debug for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tangle")
            .field("crossings", &self.code.crossings)
            .field("signs", &self.code.signs)
            .field("ends", &self.code.ends)
            .field("class", &self.orientation_class())
            .field("loops", &self.code.loops)
            .finish()
    }
}

impl Tangle {
    /// Raw unoriented tangle; `ends` lists the arcs at NW, NE, SW, SE.
    pub fn from_pd(crossings: Vec<[usize; 4]>, ends: [usize; 4], loops: usize) -> Result<Self, TangleError> {
        let code = Planar { crossings, signs: None, ends: ends.to_vec(), ends_in: None, loops };
        code.validate().map_err(|f| {
            TangleError::Diagram(match f {
                PlanarFault::ArcCount { arc, count } => DiagramError::ArcCount { arc, count },
                PlanarFault::Orientation { arc } => DiagramError::InconsistentOrientation { arc },
            })
        })?;
        let mut t = Self { code };
        t.code.compact();
        Ok(t)
    }

    pub fn zero() -> Self {
        Self { code: Planar { crossings: vec![], signs: None, ends: vec![0, 0, 1, 1], ends_in: None, loops: 0 } }
    }

    pub fn infinity() -> Self {
        Self { code: Planar { crossings: vec![], signs: None, ends: vec![0, 1, 0, 1], ends_in: None, loops: 0 } }
    }

    /// One crossing; the NW–SE strand passes over.
    pub fn one() -> Self {
        // counterclockwise from the SW end: SW, SE, NE, NW
        Self { code: Planar { crossings: vec![[2, 3, 1, 0]], signs: None, ends: vec![0, 1, 2, 3], ends_in: None, loops: 0 } }
    }

    /// `k` horizontal half twists; negative `k` twists the other way.
    pub fn integer(k: i64) -> Self {
        let unit = if k > 0 { Self::one() } else { Self::one().negate() };
        let mut t = Self::zero();
        for _ in 0..k.unsigned_abs() {
            t = t.sum(&unit).expect("unoriented");
        }
        t
    }

    pub fn num_crossings(&self) -> usize {
        self.code.crossings.len()
    }

    pub fn internal_loops(&self) -> usize {
        self.code.loops
    }

    /// Crossings and the arcs at NW, NE, SW, SE, as accepted by `from_pd`.
    pub fn pd(&self) -> (Vec<[usize; 4]>, [usize; 4]) {
        let e = &self.code.ends;
        (self.code.crossings.clone(), [e[0], e[1], e[2], e[3]])
    }

    /// The two strands plus any closed components.
    pub fn num_components(&self) -> usize {
        self.code.num_components()
    }

    pub fn orientation_class(&self) -> OrientationClass {
        OrientationClass::from_ends_in(self.code.ends_in.as_deref())
    }

    pub fn is_oriented(&self) -> bool {
        self.code.is_oriented()
    }

    /// Which end each end is joined to.
    pub fn end_pairing(&self) -> [usize; 4] {
        let p = self.code.end_pairing();
        [p[0], p[1], p[2], p[3]]
    }

    pub fn forget_orientation(&self) -> Self {
        let mut code = self.code.clone();
        code.drop_orientation();
        Self { code }
    }

    /// Orients the strands to match `class`. Internal loops get the default
    /// direction unless `seeds` names an incoming (crossing, slot).
    pub fn orient(&self, class: OrientationClass) -> Result<Self, TangleError> {
        self.orient_with(class, &[])
    }

    pub fn orient_with(&self, class: OrientationClass, seeds: &[(usize, usize)]) -> Result<Self, TangleError> {
        let Some(e) = class.ends_in() else { return Ok(self.forget_orientation()) };
        let code = self.forget_orientation().code.orient(&e, seeds).ok_or(TangleError::NotOrientable(class))?;
        Ok(Self { code })
    }

    /// Glues `other` on, joining the listed (self end, other end) pairs; the
    /// result's ends are `order`, indices into self's ends then other's.
    fn glue(&self, other: &Self, pairs: [(usize, usize); 2], order: [usize; 4]) -> Result<Self, TangleError> {
        let both = self.is_oriented() && other.is_oriented();
        let mut code = self.code.clone();
        let mut b = other.code.clone();
        if !both {
            code.drop_orientation();
            b.drop_orientation();
        }
        code.append(&b);
        let pairs8: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (i, j + 4)).collect();
        if both {
            let e = code.ends_in.as_ref().unwrap();
            if pairs8.iter().any(|&(i, j)| e[i] == e[j]) {
                return Err(TangleError::OrientationMismatch);
            }
        }
        code.join_ends(&pairs8);
        // join_ends keeps the surviving ends in index order
        let mut kept: Vec<usize> = (0..8).filter(|i| !pairs8.iter().any(|&(a, b)| a == *i || b == *i)).collect();
        kept.sort_unstable();
        let pos = |i: usize| kept.iter().position(|&k| k == i).unwrap();
        let ends = order.map(|i| code.ends[pos(i)]).to_vec();
        let ends_in = code.ends_in.as_ref().map(|e| order.iter().map(|&i| e[pos(i)]).collect());
        code.ends = ends;
        code.ends_in = ends_in;
        code.compact();
        Ok(Self { code })
    }

    pub fn sum(&self, other: &Self) -> Result<Self, TangleError> {
        self.glue(other, [(NE, NW), (SE, SW)], [NW, 4 + NE, SW, 4 + SE])
    }

    /// `self` above `other`.
    pub fn star(&self, other: &Self) -> Result<Self, TangleError> {
        self.glue(other, [(SW, NW), (SE, NE)], [NW, NE, 4 + SW, 4 + SE])
    }

    /// Switches every crossing.
    pub fn negate(&self) -> Self {
        let mut code = self.code.clone();
        code.permute_slots(SWAP_LAYERS);
        Self { code }
    }

    /// Reverses the direction of every strand and loop.
    pub fn reverse(&self) -> Self {
        let mut code = self.code.clone();
        code.reverse_all();
        Self { code }
    }

    /// Quarter turn clockwise.
    pub fn rotate90(&self) -> Self {
        let mut code = self.code.clone();
        let perm = [SW, NW, SE, NE];
        code.ends = perm.iter().map(|&i| self.code.ends[i]).collect();
        code.ends_in = self.code.ends_in.as_ref().map(|e| perm.iter().map(|&i| e[i]).collect());
        Self { code }
    }

    /// Mirror in the plane across the NW–SE axis: NE and SW trade places.
    pub fn rho(&self) -> Self {
        let mut code = self.code.clone();
        code.permute_slots(REFLECT);
        let perm = [NW, SW, NE, SE];
        code.ends = perm.iter().map(|&i| self.code.ends[i]).collect();
        code.ends_in = self.code.ends_in.as_ref().map(|e| perm.iter().map(|&i| e[i]).collect());
        Self { code }
    }

    /// Mirror across the vertical axis (NW and NE trade places).
    pub fn reflect_vertical_axis(&self) -> Self {
        let mut code = self.code.clone();
        code.permute_slots(REFLECT);
        let perm = [NE, NW, SE, SW];
        code.ends = perm.iter().map(|&i| self.code.ends[i]).collect();
        code.ends_in = self.code.ends_in.as_ref().map(|e| perm.iter().map(|&i| e[i]).collect());
        Self { code }
    }

    fn close(&self, pairs: [(usize, usize); 2]) -> Result<LinkDiagram, TangleError> {
        let mut code = self.code.clone();
        if let Some(e) = &code.ends_in {
            if pairs.iter().any(|&(i, j)| e[i] == e[j]) {
                return Err(TangleError::IncoherentClosure(self.orientation_class()));
            }
        }
        code.join_ends(&pairs);
        Ok(LinkDiagram::from_code(code))
    }

    /// Numerator closure; oriented when the tangle is.
    pub fn numerator(&self) -> Result<LinkDiagram, TangleError> {
        self.close([(NW, NE), (SW, SE)])
    }

    pub fn denominator(&self) -> Result<LinkDiagram, TangleError> {
        self.close([(NW, SW), (NE, SE)])
    }

    pub fn bracket_vector(&self) -> Result<BracketVector, TangleError> {
        let mut v = skein_partition(&self.code, max_cache_from_env());
        if !v[2].is_zero() {
            return Err(TangleError::NonPlanar);
        }
        v.truncate(2);
        let g = v.pop().unwrap();
        let f = v.pop().unwrap();
        Ok(BracketVector { f, g })
    }

    /// Solves the closure system for (f, g) by exact division by `δ² − 1`.
    pub fn bracket_vector_solved(&self) -> Option<BracketVector> {
        use crate::bracket::kauffman_bracket;
        let t = self.forget_orientation();
        let n = kauffman_bracket(&t.numerator().ok()?);
        let d = kauffman_bracket(&t.denominator().ok()?);
        let delta = LaurentPoly::delta();
        let det = &(&delta * &delta) - &LaurentPoly::one();
        let f = (&(&delta * &n) - &d).div_exact(&det)?;
        let g = (&(&delta * &d) - &n).div_exact(&det)?;
        Some(BracketVector { f, g })
    }

    pub fn conway_vector(&self) -> Result<ConwayVector, TangleError> {
        let class = self.orientation_class();
        if class != OrientationClass::LeftRight {
            return Err(TangleError::WrongClass { expected: "left_right", found: class });
        }
        let minus_one = Tangle::integer(-1).orient(OrientationClass::LeftRight)?;
        let p = conway(&self.sum(&minus_one)?.numerator()?)?;
        let q = conway(&self.numerator()?)?;
        Ok(ConwayVector { p, q })
    }

    pub fn fraction(&self) -> Result<TangleFraction, TangleError> {
        let class = self.orientation_class();
        if !class.is_diagonal() {
            return Err(TangleError::WrongClass { expected: "diagonal", found: class });
        }
        Ok(TangleFraction { num: conway(&self.numerator()?)?, den: conway(&self.denominator()?)? })
    }
}

/// Coefficients of the 0 and ∞ tangles in the bracket expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BracketVector {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
}

impl BracketVector {
    pub fn zero_tangle() -> Self {
        Self { f: LaurentPoly::one(), g: LaurentPoly::zero() }
    }

    pub fn infinity_tangle() -> Self {
        Self { f: LaurentPoly::zero(), g: LaurentPoly::one() }
    }

    /// br(self + other).
    pub fn sum(&self, other: &Self) -> Self {
        let delta = LaurentPoly::delta();
        Self {
            f: &self.f * &other.f,
            g: &(&(&self.f * &other.g) + &(&self.g * &other.f)) + &(&(&delta * &self.g) * &other.g),
        }
    }

    /// br(self * other).
    pub fn star(&self, other: &Self) -> Self {
        let delta = LaurentPoly::delta();
        Self {
            f: &(&(&(&delta * &self.f) * &other.f) + &(&self.f * &other.g)) + &(&self.g * &other.f),
            g: &self.g * &other.g,
        }
    }

    /// Quarter turn and ρ both exchange the coefficients.
    pub fn swap(&self) -> Self {
        Self { f: self.g.clone(), g: self.f.clone() }
    }

    pub fn mirror(&self) -> Self {
        Self { f: self.f.invert_variable(), g: self.g.invert_variable() }
    }

    pub fn numerator_bracket(&self) -> LaurentPoly {
        &(&LaurentPoly::delta() * &self.f) + &self.g
    }

    pub fn denominator_bracket(&self) -> LaurentPoly {
        &self.f + &(&LaurentPoly::delta() * &self.g)
    }
}

impl fmt::Display for BracketVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f, self.g)
    }
}

/// `(p, q)` with `∇(L^T) = p∇(L⁰) + q∇(L¹)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConwayVector {
    pub p: ConwayPoly,
    pub q: ConwayPoly,
}

impl ConwayVector {
    pub fn zero_tangle() -> Self {
        Self { p: ConwayPoly::one(), q: ConwayPoly::zero() }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self {
            p: &(&self.p * &other.p) + &(&self.q * &other.q),
            q: &(&(&self.p * &other.q) + &(&self.q * &other.p)) + &(&(&ConwayPoly::z() * &self.q) * &other.q),
        }
    }

    /// con(T * W) from con(T) and F(W).
    pub fn star(&self, w: &TangleFraction) -> Self {
        Self { p: &(&w.num * &self.p) + &(&w.den * &self.q), q: &w.num * &self.q }
    }
}

impl fmt::Display for ConwayVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Unreduced pair `∇(Tᴺ) / ∇(Tᴰ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleFraction {
    pub num: ConwayPoly,
    pub den: ConwayPoly,
}

impl TangleFraction {
    pub fn new(num: ConwayPoly, den: ConwayPoly) -> Self {
        Self { num, den }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self { num: &(&self.num * &other.den) + &(&self.den * &other.num), den: &self.den * &other.den }
    }
}

impl fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &ConwayPoly| {
            if p.poly.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

pub fn bracket_vector_sum(t: &BracketVector, u: &BracketVector) -> BracketVector {
    t.sum(u)
}

pub fn conway_vector_sum(t: &ConwayVector, u: &ConwayVector) -> ConwayVector {
    t.sum(u)
}

pub fn conway_vector_star(t: &ConwayVector, w: &TangleFraction) -> ConwayVector {
    t.star(w)
}

pub fn fraction_sum(t: &TangleFraction, u: &TangleFraction) -> TangleFraction {
    t.sum(u)
}

/// `∇(L^T)` for a diagonally oriented `T` from the two replacements.
pub fn lemma_4_6_expand(ft: &TangleFraction, nabla_l0: &ConwayPoly, nabla_linf: &ConwayPoly) -> ConwayPoly {
    &(&ft.den * nabla_l0) + &(&ft.num * nabla_linf)
}

/// `p∇(L(0)) + q∇(L(1))`.
pub fn phi_l(con: &ConwayVector, nabla_l0: &ConwayPoly, nabla_l1: &ConwayPoly) -> ConwayPoly {
    &(&con.p * nabla_l0) + &(&con.q * nabla_l1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::kauffman_bracket;
    use OrientationClass::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn basis_tangles() {
        assert_eq!(Tangle::zero().bracket_vector().unwrap(), BracketVector::zero_tangle());
        assert_eq!(Tangle::infinity().bracket_vector().unwrap(), BracketVector::infinity_tangle());
        assert_eq!(Tangle::one().bracket_vector().unwrap(), BracketVector { f: p(&[(1, 1)]), g: p(&[(-1, 1)]) });
        assert_eq!(Tangle::zero().numerator().unwrap().components(), 2);
        assert_eq!(Tangle::zero().denominator().unwrap().components(), 1);
    }

    #[test]
    fn orientability_of_basis() {
        assert!(Tangle::zero().orient(LeftRight).is_ok());
        assert!(Tangle::infinity().orient(LeftRight).is_err());
        assert!(Tangle::infinity().orient(DiagonalA).is_ok());
        assert!(Tangle::zero().orient(DiagonalB).is_ok());
        let one = Tangle::one().orient(LeftRight).unwrap();
        assert_eq!(one.code.signs, Some(vec![crate::planar::Sign::Positive]));
    }

    #[test]
    fn two_closes_to_hopf() {
        let two = Tangle::integer(2);
        assert_eq!(two.num_crossings(), 2);
        assert_eq!(kauffman_bracket(&two.numerator().unwrap()), p(&[(4, -1), (-4, -1)]));
    }

    #[test]
    fn rotation_swaps_closures_and_classes() {
        let t = Tangle::integer(3).sum(&Tangle::one().rho()).unwrap();
        let r = t.rotate90();
        assert_eq!(r.bracket_vector().unwrap(), t.bracket_vector().unwrap().swap());
        let lr = Tangle::one().orient(LeftRight).unwrap();
        assert_eq!(lr.rotate90().orientation_class(), TopBottom);
        let d = Tangle::zero().orient(DiagonalA).unwrap();
        assert_eq!(d.rotate90().orientation_class(), DiagonalB);
    }

    #[test]
    fn rho_swaps_and_mirrors_bracket_vector() {
        let t = Tangle::integer(2).star(&Tangle::integer(-1)).unwrap();
        assert_eq!(t.rho().bracket_vector().unwrap(), t.bracket_vector().unwrap().swap().mirror());
        let two = Tangle::integer(2).rho().bracket_vector().unwrap();
        assert_eq!(two, Tangle::one().star(&Tangle::one()).unwrap().bracket_vector().unwrap());
    }

    #[test]
    fn star_with_infinity_is_identity() {
        let t = Tangle::integer(3);
        assert_eq!(t.star(&Tangle::infinity()).unwrap().bracket_vector(), t.bracket_vector());
        let t0 = t.star(&Tangle::zero()).unwrap();
        let n = t0.numerator().unwrap();
        assert_eq!(n.components(), t.numerator().unwrap().components() + 1);
        assert_eq!(kauffman_bracket(&n), kauffman_bracket(&t.numerator().unwrap()) * LaurentPoly::delta());
    }

    #[test]
    fn oriented_gluing_checks_ends() {
        let a = Tangle::one().orient(LeftRight).unwrap();
        let b = Tangle::one().orient(RightLeft).unwrap();
        assert_eq!(a.sum(&b), Err(TangleError::OrientationMismatch));
        let s = a.sum(&a).unwrap();
        assert_eq!(s.orientation_class(), LeftRight);
        assert!(matches!(s.denominator(), Err(TangleError::IncoherentClosure(LeftRight))));
    }

    #[test]
    fn conway_vectors_of_integers() {
        let zero = Tangle::zero().orient(LeftRight).unwrap();
        assert_eq!(zero.conway_vector().unwrap(), ConwayVector::zero_tangle());
        let one = Tangle::one().orient(LeftRight).unwrap();
        assert_eq!(one.conway_vector().unwrap(), ConwayVector { p: ConwayPoly::zero(), q: ConwayPoly::one() });
        let two = Tangle::integer(2).orient(LeftRight).unwrap();
        assert_eq!(two.conway_vector().unwrap(), ConwayVector { p: ConwayPoly::one(), q: ConwayPoly::z() });
    }

    #[test]
    fn solve_path_matches() {
        let t = Tangle::integer(3).star(&Tangle::integer(2)).unwrap().sum(&Tangle::one().rho()).unwrap();
        assert_eq!(t.bracket_vector_solved().unwrap(), t.bracket_vector().unwrap());
    }
}
