//! Kauffman bracket, writhe-normalized Kauffman polynomial and Jones.
//!
//! The workhorse expands the skein relation crossing by crossing along a
//! fixed elimination order and memoizes every intermediate state under a
//! first-appearance relabeling. A plain state sum serves as the oracle.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::laurent::LaurentPoly;
use crate::planar::{Planar, UnionFind};

pub const DEFAULT_STATESUM_LIMIT: usize = 24;
pub const DEFAULT_MAX_CACHE: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("{crossings} crossings exceed the limit of {limit}")]
    LimitExceeded { crossings: usize, limit: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("k = 0 has no twist closure; its numerator is the two-component unlink")]
    ZeroTwist,
}

/// Memo bound from `SKEIN_MAX_CACHE`, if set.
pub fn max_cache_from_env() -> usize {
    std::env::var("SKEIN_MAX_CACHE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_CACHE)
}

/// Order in which the skein engine resolves crossings: greedily the one
/// sharing the most arcs with what is already resolved (open ends count as
/// resolved), lowest index on ties.
pub(crate) fn elimination_order(code: &Planar) -> Vec<usize> {
    let n = code.crossings.len();
    let size = code.max_label().map_or(0, |m| m + 1);
    let mut touched = vec![false; size];
    for &e in &code.ends {
        touched[e] = true;
    }
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_score = -1i64;
        for c in 0..n {
            if done[c] {
                continue;
            }
            let score = code.crossings[c].iter().filter(|&&a| touched[a]).count() as i64;
            if score > best_score {
                best = c;
                best_score = score;
            }
        }
        done[best] = true;
        order.push(best);
        for &a in &code.crossings[best] {
            touched[a] = true;
        }
    }
    order
}

/// Skein-expansion state: arcs of the unresolved crossings (in elimination
/// order) followed by the open ends.
struct Engine {
    nends: usize,
    max_cache: usize,
    memo: HashMap<Vec<u32>, Rc<Vec<LaurentPoly>>>,
    delta_pows: Vec<LaurentPoly>,
}

impl Engine {
    fn delta_pow(&mut self, k: usize) -> LaurentPoly {
        while self.delta_pows.len() <= k {
            let next = self.delta_pows.last().unwrap() * &LaurentPoly::delta();
            self.delta_pows.push(next);
        }
        self.delta_pows[k].clone()
    }

    /// `labels` holds the remaining crossings' slots then the ends, all
    /// relabeled by first appearance.
    fn eval(&mut self, labels: &[u32]) -> Rc<Vec<LaurentPoly>> {
        if let Some(v) = self.memo.get(labels) {
            return v.clone();
        }
        let rest = labels.len() - self.nends;
        let out = if rest == 0 {
            Rc::new(self.base(labels))
        } else {
            let cur = [labels[0], labels[1], labels[2], labels[3]];
            let tail = &labels[4..];
            // A-smoothing joins slots (0,1),(2,3); B joins (0,3),(1,2)
            let (la, ka) = resolve(tail, cur, [(0, 1), (2, 3)]);
            let (lb, kb) = resolve(tail, cur, [(0, 3), (1, 2)]);
            let va = self.eval(&la);
            let vb = self.eval(&lb);
            let (da, db) = (self.delta_pow(ka), self.delta_pow(kb));
            let res: Vec<LaurentPoly> = va
                .iter()
                .zip(vb.iter())
                .map(|(x, y)| (x * &da).shift(1) + (y * &db).shift(-1))
                .collect();
            Rc::new(res)
        };
        if self.memo.len() < self.max_cache {
            self.memo.insert(labels.to_vec(), out.clone());
        }
        out
    }

    fn base(&self, ends: &[u32]) -> Vec<LaurentPoly> {
        match ends.len() {
            0 => vec![LaurentPoly::one()],
            4 => {
                let mut v = vec![LaurentPoly::zero(); 3];
                let slot = if ends[0] == ends[1] {
                    0
                } else if ends[0] == ends[2] {
                    1
                } else {
                    2
                };
                v[slot] = LaurentPoly::one();
                v
            }
            _ => unreachable!("tangles have four ends"),
        }
    }
}

/// Applies one smoothing to the head crossing; returns the relabeled
/// remainder and the number of loops closed off.
fn resolve(tail: &[u32], cur: [u32; 4], pairs: [(usize, usize); 2]) -> (Vec<u32>, usize) {
    let mut rest = tail.to_vec();
    let mut cur = cur;
    let mut loops = 0;
    for (s, t) in pairs {
        let (x, y) = (cur[s], cur[t]);
        if x == y {
            loops += 1;
            continue;
        }
        for v in rest.iter_mut().chain(cur.iter_mut()) {
            if *v == y {
                *v = x;
            }
        }
    }
    (relabel(&rest), loops)
}

fn relabel(v: &[u32]) -> Vec<u32> {
    let mut map: HashMap<u32, u32> = HashMap::with_capacity(v.len());
    v.iter()
        .map(|&a| {
            let n = map.len() as u32;
            *map.entry(a).or_insert(n)
        })
        .collect()
}

/// Sum over smoothing states of `A^(a-b) δ^loops`, split by how the open
/// ends are joined (closed: one entry; tangles: 0-pairing, ∞-pairing,
/// diagonal pairing).
pub(crate) fn skein_partition(code: &Planar, max_cache: usize) -> Vec<LaurentPoly> {
    let order = elimination_order(code);
    let mut flat: Vec<u32> = order.iter().flat_map(|&c| code.crossings[c]).map(|a| a as u32).collect();
    flat.extend(code.ends.iter().map(|&a| a as u32));
    let mut engine = Engine {
        nends: code.ends.len(),
        max_cache,
        memo: HashMap::new(),
        delta_pows: vec![LaurentPoly::one()],
    };
    let v = engine.eval(&relabel(&flat));
    let loops = engine.delta_pow(code.loops);
    v.iter().map(|p| p * &loops).collect()
}

/// Kauffman bracket with ⟨◯⟩ = 1. The empty diagram is given bracket 1.
pub fn kauffman_bracket(d: &LinkDiagram) -> LaurentPoly {
    kauffman_bracket_with_cache(d, max_cache_from_env())
}

pub fn kauffman_bracket_with_cache(d: &LinkDiagram, max_cache: usize) -> LaurentPoly {
    if d.num_crossings() == 0 && d.free_loops() == 0 {
        return LaurentPoly::one();
    }
    let z = skein_partition(&d.code, max_cache).swap_remove(0);
    z.div_exact(&LaurentPoly::delta()).expect("every state has a loop")
}

pub fn kauffman_bracket_statesum(d: &LinkDiagram) -> Result<LaurentPoly, BracketError> {
    kauffman_bracket_statesum_limit(d, DEFAULT_STATESUM_LIMIT)
}

/// State sum over all `2^n` smoothings, loops counted with union-find.
pub fn kauffman_bracket_statesum_limit(d: &LinkDiagram, limit: usize) -> Result<LaurentPoly, BracketError> {
    use rayon::prelude::*;

    let n = d.num_crossings();
    if n > limit {
        return Err(BracketError::LimitExceeded { crossings: n, limit });
    }
    if n == 0 {
        return Ok(if d.free_loops() == 0 {
            LaurentPoly::one()
        } else {
            LaurentPoly::delta().pow(d.free_loops() as u32 - 1)
        });
    }
    let xs = d.crossings();
    let size = d.code.max_label().unwrap() + 1;
    let free = d.free_loops();
    // counts[b][loops]: states with b B-smoothings and that many loops
    let tally = |lo: u64, hi: u64| {
        let mut counts = vec![vec![0u64; n + free + 2]; n + 1];
        for state in lo..hi {
            let mut uf = UnionFind::new(size);
            let mut loops = 0;
            for (i, x) in xs.iter().enumerate() {
                let pairs = if state >> i & 1 == 0 { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
                for (s, t) in pairs {
                    if !uf.union(x[s], x[t]) {
                        loops += 1;
                    }
                }
            }
            counts[state.count_ones() as usize][loops + free] += 1;
        }
        counts
    };
    let total = 1u64 << n;
    let chunk = (total / 64).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let parts: Vec<Vec<Vec<u64>>> = starts.par_iter().map(|&lo| tally(lo, (lo + chunk).min(total))).collect();
    let mut sum = LaurentPoly::zero();
    let delta = LaurentPoly::delta();
    for b in 0..=n {
        for l in 1..n + free + 2 {
            let c: u64 = parts.iter().map(|p| p[b][l]).sum();
            if c == 0 {
                continue;
            }
            let a = n as i64 - 2 * b as i64;
            sum += &(LaurentPoly::monomial(a, c) * delta.pow(l as u32 - 1));
        }
    }
    Ok(sum)
}

/// `(-A^3)^(-w) ⟨L⟩`.
pub fn kauffman_polynomial(d: &LinkDiagram) -> Result<LaurentPoly, BracketError> {
    let w = d.writhe()?;
    let factor = LaurentPoly::monomial(-3 * w, if w % 2 == 0 { 1 } else { -1 });
    Ok(factor * kauffman_bracket(d))
}

/// Jones polynomial stored in `q = t^(1/4)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesPoly {
    pub poly: LaurentPoly,
}

impl JonesPoly {
    /// Renders in `t`, exponents as exact fractions: `-t^(5/2) - t^(1/2)`.
    pub fn render_t(&self) -> String {
        if self.poly.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.poly.terms().rev().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude().clone();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let one = mag == 1u32.into();
            let pow = t_power(e);
            match (one, pow.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&pow),
                (false, true) => out.push_str(&mag.to_string()),
                (false, false) => out.push_str(&format!("{mag}{pow}")),
            }
        }
        out
    }

    pub fn span_q(&self) -> Option<i64> {
        self.poly.span().ok()
    }
}

fn t_power(e: i64) -> String {
    if e == 0 {
        return String::new();
    }
    if e == 4 {
        return "t".to_string();
    }
    let g = gcd(e.unsigned_abs(), 4) as i64;
    let (num, den) = (e / g, 4 / g);
    if den == 1 {
        format!("t^{num}")
    } else {
        format!("t^({num}/{den})")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_t())
    }
}

impl fmt::Debug for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JonesPoly({})", self.poly.render("q"))
    }
}

pub fn jones(d: &LinkDiagram) -> Result<JonesPoly, BracketError> {
    Ok(JonesPoly { poly: kauffman_polynomial(d)?.invert_variable() })
}

/// Bracket of the numerator closure of the integer tangle `k`.
pub fn closed_form_torus_closure(k: i64) -> Result<LaurentPoly, BracketError> {
    if k == 0 {
        return Err(BracketError::ZeroTwist);
    }
    if k < 0 {
        return Ok(closed_form_torus_closure(-k)?.invert_variable());
    }
    let mut p = LaurentPoly::monomial(k - 2, -1);
    for j in 0..=k {
        let c = if j % 2 == 0 { -1 } else { 1 };
        p += &LaurentPoly::monomial(-4 * j + k + 2, c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn hopf() -> LinkDiagram {
        parse_pd("PD oriented 0\nX 1 3 2 4\nX 3 1 4 2\n").unwrap()
    }

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknot_and_kink() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unknot()), LaurentPoly::one());
        let k = parse_pd("PD oriented 0\nX 1 1 2 2\n").unwrap();
        assert_eq!(kauffman_bracket(&k), p(&[(3, -1)]));
        assert_eq!(kauffman_bracket_statesum(&k).unwrap(), p(&[(3, -1)]));
        assert_eq!(kauffman_polynomial(&k).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn hopf_values() {
        let h = hopf();
        assert_eq!(kauffman_bracket(&h), p(&[(4, -1), (-4, -1)]));
        assert_eq!(kauffman_bracket_statesum(&h).unwrap(), p(&[(4, -1), (-4, -1)]));
        let v = jones(&h).unwrap();
        assert_eq!(v.poly, p(&[(10, -1), (2, -1)]));
        assert_eq!(v.render_t(), "-t^(5/2) - t^(1/2)");
    }

    #[test]
    fn free_loops_multiply_by_delta() {
        let d = hopf().disjoint_union(&LinkDiagram::unknot());
        assert_eq!(kauffman_bracket(&d), kauffman_bracket(&hopf()) * LaurentPoly::delta());
        assert_eq!(kauffman_bracket_statesum(&d).unwrap(), kauffman_bracket(&d));
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(3)), LaurentPoly::delta().pow(2));
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(closed_form_torus_closure(1).unwrap(), p(&[(3, -1)]));
        assert_eq!(closed_form_torus_closure(2).unwrap(), p(&[(4, -1), (-4, -1)]));
        assert_eq!(closed_form_torus_closure(-1).unwrap(), p(&[(-3, -1)]));
        assert!(closed_form_torus_closure(0).is_err());
    }

    #[test]
    fn statesum_limit() {
        let e = kauffman_bracket_statesum_limit(&hopf(), 1).unwrap_err();
        assert_eq!(e, BracketError::LimitExceeded { crossings: 2, limit: 1 });
    }

    #[test]
    fn tiny_cache_gives_same_answer() {
        let h = hopf().connected_sum(&hopf(), 1, 2).unwrap();
        assert_eq!(kauffman_bracket_with_cache(&h, 0), kauffman_bracket(&h));
    }

    #[test]
    fn t_rendering() {
        assert_eq!(t_power(4), "t");
        assert_eq!(t_power(12), "t^3");
        assert_eq!(t_power(-1), "t^(-1/4)");
        assert_eq!(t_power(6), "t^(3/2)");
    }
}
