//! Conway polynomial by a resolving tree toward descending diagrams.
//!
//! Components are walked in order from their basepoints. The first crossing
//! met first on its under-strand is switched, using
//! `∇(L₊) = ∇(L₋) + z∇(L₀)`; the smoothing has one crossing fewer. A
//! descending diagram is an unlink, so it evaluates to 1 for a knot and 0
//! otherwise. Split diagrams are 0 at once; Reidemeister I kinks are removed.
//!
//! [`conway`] first tries a determinant: the Alexander polynomial from the
//! Wirtinger matrix, put in symmetric form, read in `z = t^½ − t^-½`. The
//! overall sign comes from the `z^(μ−1)` coefficient, which is a cofactor
//! of the linking-number Laplacian. When that cofactor vanishes the tree
//! is used instead.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{CrossingSite, DiagramError, LinkDiagram};
use crate::laurent::LaurentPoly;
use crate::planar::{Planar, Sign, UnionFind};

mod alexander;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConwayPoly {
    pub poly: LaurentPoly,
}

impl ConwayPoly {
    pub fn zero() -> Self {
        Self { poly: LaurentPoly::zero() }
    }

    pub fn one() -> Self {
        Self { poly: LaurentPoly::one() }
    }

    pub fn z() -> Self {
        Self { poly: LaurentPoly::monomial(1, 1) }
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        Self { poly: LaurentPoly::from_terms(terms.iter().copied()) }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn render(&self) -> String {
        self.poly.render("z")
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConwayPoly({})", self.render())
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&ConwayPoly> for &ConwayPoly {
            type Output = ConwayPoly;
            fn $m(self, rhs: &ConwayPoly) -> ConwayPoly {
                ConwayPoly { poly: std::ops::$tr::$m(&self.poly, &rhs.poly) }
            }
        }
        impl std::ops::$tr for ConwayPoly {
            type Output = ConwayPoly;
            fn $m(self, rhs: ConwayPoly) -> ConwayPoly {
                ConwayPoly { poly: std::ops::$tr::$m(&self.poly, &rhs.poly) }
            }
        }
    };
}
forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);

impl std::ops::Neg for ConwayPoly {
    type Output = ConwayPoly;
    fn neg(self) -> ConwayPoly {
        ConwayPoly { poly: -self.poly }
    }
}

pub fn conway(d: &LinkDiagram) -> Result<ConwayPoly, DiagramError> {
    if !d.is_oriented() {
        return Err(DiagramError::Unoriented);
    }
    if let Some(poly) = by_determinant(&d.code, 8) {
        return Ok(ConwayPoly { poly });
    }
    let mut ev = Evaluator::default();
    Ok(ConwayPoly { poly: ev.eval(&d.code, None) })
}

/// Determinant evaluation, taking skein steps at unlinked crossings while
/// the sign is undetermined, at most `depth` deep.
fn by_determinant(code: &Planar, depth: usize) -> Option<LaurentPoly> {
    let code = simplify(code);
    if code.crossings.is_empty() {
        return Some(if code.loops == 1 { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    if code.loops > 0 || is_split(&code) {
        return Some(LaurentPoly::zero());
    }
    if let Some(v) = alexander::conway(&code) {
        return Some(v);
    }
    if depth == 0 {
        return None;
    }
    let site = alexander::unlinked_crossing(&code)?;
    let sign = code.signs.as_ref()?[site];
    let pairs = match sign {
        Sign::Positive => [(0, 1), (3, 2)],
        Sign::Negative => [(0, 3), (1, 2)],
    };
    let vs = by_determinant(&switch(&code, site), depth - 1)?;
    let vz = by_determinant(&code.smooth(site, pairs, true), depth - 1)?.shift(1);
    Some(match sign {
        Sign::Positive => vs + vz,
        Sign::Negative => vs - vz,
    })
}

/// The resolving tree alone, without the determinant shortcut.
pub fn conway_skein(d: &LinkDiagram) -> Result<ConwayPoly, DiagramError> {
    if !d.is_oriented() {
        return Err(DiagramError::Unoriented);
    }
    let mut ev = Evaluator::default();
    Ok(ConwayPoly { poly: ev.eval(&d.code, None) })
}

/// Like [`conway`] but walks components from the given basepoint arcs, in
/// that order, at the top level of the tree. Every component must be named.
pub fn conway_with_basepoints(d: &LinkDiagram, basepoints: &[usize]) -> Result<ConwayPoly, DiagramError> {
    if !d.is_oriented() {
        return Err(DiagramError::Unoriented);
    }
    let occ = d.code.occurrences();
    for &b in basepoints {
        if !occ.contains_key(&b) {
            return Err(DiagramError::ArcNotFound(b));
        }
    }
    let mut ev = Evaluator::default();
    Ok(ConwayPoly { poly: ev.eval(&d.code, Some(basepoints)) })
}

/// Checks `∇(L₊) − ∇(L₋) = z∇(L₀)` at one crossing.
pub fn conway_skein_check(d: &LinkDiagram, site: CrossingSite) -> Result<bool, DiagramError> {
    let (p, m, z) = d.oriented_skein_children(site)?;
    Ok(conway(&p)? - conway(&m)? == ConwayPoly::z() * conway(&z)?)
}

#[derive(Default)]
struct Evaluator {
    memo: HashMap<Planar, LaurentPoly>,
}

impl Evaluator {
    fn eval(&mut self, code: &Planar, basepoints: Option<&[usize]>) -> LaurentPoly {
        let code = if basepoints.is_none() { simplify(code) } else { code.clone() };
        if basepoints.is_none() {
            if let Some(v) = self.memo.get(&code) {
                return v.clone();
            }
        }
        let v = self.eval_inner(&code, basepoints);
        if basepoints.is_none() {
            self.memo.insert(code, v.clone());
        }
        v
    }

    fn eval_inner(&mut self, code: &Planar, basepoints: Option<&[usize]>) -> LaurentPoly {
        if code.crossings.is_empty() {
            return if code.loops == 1 { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        if code.loops > 0 || is_split(code) {
            return LaurentPoly::zero();
        }
        let Some(site) = first_violation(code, basepoints) else {
            // descending: an unlink
            return if code.num_components() == 1 { LaurentPoly::one() } else { LaurentPoly::zero() };
        };
        let sign = code.signs.as_ref().unwrap()[site];
        let switched = switch(code, site);
        let pairs = match sign {
            Sign::Positive => [(0, 1), (3, 2)],
            Sign::Negative => [(0, 3), (1, 2)],
        };
        let zero = code.smooth(site, pairs, true);
        let vs = self.eval(&switched, basepoints);
        let vz = self.eval(&zero, None).shift(1);
        match sign {
            Sign::Positive => vs + vz,
            Sign::Negative => vs - vz,
        }
    }
}

fn switch(code: &Planar, site: usize) -> Planar {
    let mut out = code.clone();
    let [a, b, c, d] = out.crossings[site];
    let s = &mut out.signs.as_mut().unwrap()[site];
    out.crossings[site] = match *s {
        Sign::Positive => [d, a, b, c],
        Sign::Negative => [b, c, d, a],
    };
    *s = s.flip();
    out
}

/// Removes Reidemeister I kinks until none remain.
fn simplify(code: &Planar) -> Planar {
    let mut cur = code.clone();
    'outer: loop {
        for (c, x) in cur.crossings.iter().enumerate() {
            for s in 0..4 {
                if x[s] == x[(s + 1) % 4] {
                    let t = (s + 2) % 4;
                    // the loop arc pairs off; the other two slots join
                    let pairs = [(s, (s + 1) % 4), (t, (t + 1) % 4)];
                    let mut next = cur.smooth(c, pairs, true);
                    next.loops -= 1;
                    cur = next;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// True when the crossings fall into more than one connected piece.
fn is_split(code: &Planar) -> bool {
    let size = code.max_label().map_or(0, |m| m + 1);
    let mut uf = UnionFind::new(size);
    for x in &code.crossings {
        uf.union(x[0], x[1]);
        uf.union(x[0], x[2]);
        uf.union(x[0], x[3]);
    }
    let r = uf.find(code.crossings[0][0]);
    code.crossings.iter().flatten().any(|&a| uf.find(a) != r)
}

/// First crossing reached on its under-strand before its over-strand.
fn first_violation(code: &Planar, basepoints: Option<&[usize]>) -> Option<usize> {
    let cycles = match basepoints {
        None => code.cycles(),
        Some(bp) => ordered_cycles(code, bp),
    };
    let mut seen = vec![false; code.crossings.len()];
    for cyc in &cycles {
        for &(c, s) in cyc {
            if !seen[c] {
                seen[c] = true;
                if s == 0 {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Cycles reordered to follow `basepoints`: each cycle starts at the head of
/// its basepoint arc, cycles in the order named.
fn ordered_cycles(code: &Planar, basepoints: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let cycles = code.cycles();
    let mut out = Vec::new();
    for &b in basepoints {
        for cyc in &cycles {
            if let Some(pos) = cyc.iter().position(|&(c, s)| code.crossings[c][s] == b) {
                let mut r = cyc[pos..].to_vec();
                r.extend_from_slice(&cyc[..pos]);
                out.push(r);
            }
        }
    }
    for cyc in &cycles {
        let covered = basepoints.iter().any(|&b| cyc.iter().any(|&(c, s)| code.crossings[c][s] == b));
        if !covered {
            out.push(cyc.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn hopf() -> LinkDiagram {
        parse_pd("PD oriented 0\nX 1 3 2 4\nX 3 1 4 2\n").unwrap()
    }

    fn trefoil() -> LinkDiagram {
        parse_pd("PD oriented 0\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n").unwrap()
    }

    #[test]
    fn basic_values() {
        assert_eq!(conway(&LinkDiagram::unknot().oriented()).unwrap(), ConwayPoly::one());
        assert_eq!(conway(&LinkDiagram::unlink(2).oriented()).unwrap(), ConwayPoly::zero());
        assert_eq!(conway(&hopf()).unwrap(), ConwayPoly::z());
        assert_eq!(conway(&hopf().mirror()).unwrap(), -ConwayPoly::z());
        assert_eq!(conway(&trefoil()).unwrap(), ConwayPoly::from_terms(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn unoriented_rejected() {
        assert_eq!(conway(&hopf().forget_orientation()), Err(DiagramError::Unoriented));
    }

    #[test]
    fn skein_identity_on_small_diagrams() {
        for d in [hopf(), trefoil(), hopf().connected_sum(&trefoil(), 1, 1).unwrap()] {
            for c in 0..d.num_crossings() {
                assert!(conway_skein_check(&d, CrossingSite(c)).unwrap());
            }
        }
    }

    #[test]
    fn basepoints_do_not_matter() {
        let d = hopf().connected_sum(&trefoil(), 2, 3).unwrap();
        let base = conway(&d).unwrap();
        let cycles = d.code.cycles();
        for shift in 0..3 {
            let mut bp: Vec<usize> = cycles
                .iter()
                .map(|cyc| {
                    let (c, s) = cyc[shift % cyc.len()];
                    d.code.crossings[c][s]
                })
                .collect();
            assert_eq!(conway_with_basepoints(&d, &bp).unwrap(), base);
            bp.reverse();
            assert_eq!(conway_with_basepoints(&d, &bp).unwrap(), base);
        }
    }

    #[test]
    fn determinant_agrees_with_tree() {
        let mut corpus = crate::corpus::Corpus::new(11);
        let mut by_components = [0usize; 4];
        for _ in 0..150 {
            let d = corpus.diagram(11);
            by_components[d.components().min(3)] += 1;

            assert_eq!(conway(&d).unwrap(), conway_skein(&d).unwrap(), "{}", crate::diagram::render_pd(&d));
        }
        for _ in 0..40 {
            let t = corpus.left_right_texpr(7).build_oriented(crate::tangle::OrientationClass::LeftRight).unwrap();
            for sel in [crate::families::CSelector::Plus, crate::families::CSelector::Minus] {
                let d = crate::families::c_of(&t, sel).unwrap();
                by_components[d.components().min(3)] += 1;
                assert_eq!(conway(&d).unwrap(), conway_skein(&d).unwrap(), "{}", crate::diagram::render_pd(&d));
            }
        }
        assert!(by_components[2] > 0 && by_components[3] > 0, "{by_components:?}");
        // linking number zero: the sign needs a skein step
        let whitehead = crate::expr::parse("N(rot(2) + rot(1) + rot(2))").unwrap().link().unwrap().oriented();
        assert!(alexander::conway(&simplify(&whitehead.code)).is_none());
        assert_eq!(conway(&whitehead).unwrap(), ConwayPoly::from_terms(&[(3, -1)]));
        assert_eq!(conway_skein(&whitehead).unwrap(), ConwayPoly::from_terms(&[(3, -1)]));
    }
}
