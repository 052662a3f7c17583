//! Link diagrams as planar-diagram codes.
//!
//! Text format:
//!
//! ```text
//! PD oriented 0
//! X 1 3 2 4
//! X 3 1 4 2
//! ```
//!
//! Each `X a b c d` lists arcs counterclockwise from the incoming under-arc.
//! Oriented diagrams number the arcs of each component consecutively in the
//! direction of travel. `Xp`/`Xm` force a crossing sign where the numbering
//! cannot tell (an over-only component with two arcs).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::planar::Sign;
use crate::planar::{incoming_slots, Planar, PlanarFault, UnionFind, SWAP_LAYERS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("arc {arc} occurs {count} times, expected 2")]
    ArcCount { arc: usize, count: usize },
    #[error("orientation is inconsistent at arc {arc}")]
    InconsistentOrientation { arc: usize },
    #[error("operation needs an oriented diagram")]
    Unoriented,
    #[error("crossing {site} out of range ({len} crossings)")]
    SiteOutOfRange { site: usize, len: usize },
    #[error("arc {0} not found")]
    ArcNotFound(usize),
    #[error("json: {0}")]
    Json(String),
}

impl From<PlanarFault> for DiagramError {
    fn from(f: PlanarFault) -> Self {
        match f {
            PlanarFault::ArcCount { arc, count } => DiagramError::ArcCount { arc, count },
            PlanarFault::Orientation { arc } => DiagramError::InconsistentOrientation { arc },
        }
    }
}

/// Index of a crossing within a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingSite(pub usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    pub(crate) code: Planar,
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_pd(self))
    }
}

impl LinkDiagram {
    pub fn empty() -> Self {
        Self { code: Planar::empty() }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(n: usize) -> Self {
        let mut code = Planar::empty();
        code.loops = n;
        Self { code }
    }

    /// Unoriented diagram from raw crossings.
    pub fn new(crossings: Vec<[usize; 4]>, free_loops: usize) -> Result<Self, DiagramError> {
        let code = Planar { crossings, signs: None, ends: vec![], ends_in: None, loops: free_loops };
        code.validate()?;
        Ok(Self { code })
    }

    /// Oriented diagram from normalized crossings and their signs.
    pub fn new_oriented(
        crossings: Vec<[usize; 4]>,
        signs: Vec<Sign>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        assert_eq!(crossings.len(), signs.len());
        let code = Planar { crossings, signs: Some(signs), ends: vec![], ends_in: Some(vec![]), loops: free_loops };
        code.validate()?;
        Ok(Self { code })
    }

    pub(crate) fn from_code(mut code: Planar) -> Self {
        debug_assert!(code.ends.is_empty());
        if code.signs.is_some() {
            code.ends_in = Some(vec![]);
        }
        debug_assert_eq!(code.validate(), Ok(()));
        Self { code }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.code.crossings
    }

    pub fn signs(&self) -> Option<&[Sign]> {
        self.code.signs.as_deref()
    }

    pub fn num_crossings(&self) -> usize {
        self.code.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.code.loops
    }

    pub fn is_oriented(&self) -> bool {
        self.code.is_oriented()
    }

    pub fn components(&self) -> usize {
        self.code.num_components()
    }

    /// Arcs met along each component that passes through a crossing.
    pub fn component_arcs(&self) -> Vec<Vec<usize>> {
        self.code
            .cycles()
            .iter()
            .map(|cyc| cyc.iter().map(|&(c, s)| self.code.crossings[c][s]).collect())
            .collect()
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        let s = self.signs().ok_or(DiagramError::Unoriented)?;
        Ok(s.iter().map(|x| x.value()).sum())
    }

    pub fn forget_orientation(&self) -> Self {
        let mut code = self.code.clone();
        code.drop_orientation();
        Self { code }
    }

    /// Orients every component, keeping the existing orientation if any.
    /// Each component otherwise runs so that the first slot met in crossing
    /// order (under-slots first) is incoming.
    pub fn oriented(&self) -> Self {
        if self.is_oriented() {
            return self.clone();
        }
        Self::from_code(self.code.orient(&[], &[]).expect("closed diagram always orients"))
    }

    /// Orients with the given (crossing, slot) occurrences taken as incoming,
    /// one per component at most.
    pub fn oriented_with(&self, seeds: &[(usize, usize)]) -> Option<Self> {
        let base = self.forget_orientation();
        base.code.orient(&[], seeds).map(Self::from_code)
    }

    /// Reverses the orientation of the component containing `arc`.
    pub fn reverse_component(&self, arc: usize) -> Result<Self, DiagramError> {
        if !self.is_oriented() {
            return Err(DiagramError::Unoriented);
        }
        let occ = self.code.occurrences();
        if !occ.contains_key(&arc) {
            return Err(DiagramError::ArcNotFound(arc));
        }
        let comp = self.component_of(arc);
        let mut seeds = Vec::new();
        for cyc in self.code.cycles() {
            let (c, s) = cyc[0];
            let here = self.code.crossings[c][s];
            if comp.contains(&here) {
                // enter at the opposite slot instead
                seeds.push((c, (s + 2) % 4));
            } else {
                seeds.push((c, s));
            }
        }
        Ok(self.oriented_with(&seeds).expect("reversal is consistent"))
    }

    fn component_of(&self, arc: usize) -> Vec<usize> {
        let n = self.code.max_label().map_or(0, |m| m + 1);
        let mut uf = UnionFind::new(n);
        for x in &self.code.crossings {
            uf.union(x[0], x[2]);
            uf.union(x[1], x[3]);
        }
        let r = uf.find(arc);
        (0..n).filter(|&a| uf.find(a) == r).collect()
    }

    pub fn mirror(&self) -> Self {
        let mut code = self.code.clone();
        code.permute_slots(SWAP_LAYERS);
        Self { code }
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut code = self.code.clone();
        if self.code.crossings.is_empty() && self.code.signs.is_none() && other.is_oriented() {
            code.signs = Some(vec![]);
            code.ends_in = Some(vec![]);
        }
        let mut b = other.code.clone();
        if other.code.crossings.is_empty() && other.code.signs.is_none() && self.is_oriented() {
            b.signs = Some(vec![]);
            b.ends_in = Some(vec![]);
        }
        code.append(&b);
        code.compact();
        Self::from_code(code)
    }

    /// Band sum along `arc_a` of `self` and `arc_b` of `other`. For oriented
    /// diagrams the band joins the arcs coherently.
    pub fn connected_sum(&self, other: &Self, arc_a: usize, arc_b: usize) -> Result<Self, DiagramError> {
        let occ_a = self.code.occurrences();
        let occ_b = other.code.occurrences();
        if !occ_a.contains_key(&arc_a) {
            return Err(DiagramError::ArcNotFound(arc_a));
        }
        if !occ_b.contains_key(&arc_b) {
            return Err(DiagramError::ArcNotFound(arc_b));
        }
        let mut code = self.code.clone();
        let off = code.append(&other.code);
        let y = arc_b + off;
        // occurrence of each arc to be reattached: its head when oriented
        let pick = |occ: &BTreeMap<usize, Vec<crate::planar::Occ>>, arc: usize, signs: Option<&Vec<Sign>>| {
            let list = &occ[&arc];
            match signs {
                Some(s) => {
                    let is_head = |o: crate::planar::Occ| match o {
                        crate::planar::Occ::Slot(c, k) => incoming_slots(s[c])[k],
                        crate::planar::Occ::End(_) => false,
                    };
                    if is_head(list[0]) {
                        list[0]
                    } else {
                        list[1]
                    }
                }
                None => list[1],
            }
        };
        let oa = pick(&occ_a, arc_a, self.code.signs.as_ref());
        let ob = pick(&occ_b, arc_b, other.code.signs.as_ref());
        let n_a = self.code.crossings.len();
        if let (crate::planar::Occ::Slot(ca, sa), crate::planar::Occ::Slot(cb, sb)) = (oa, ob) {
            code.crossings[ca][sa] = y;
            code.crossings[n_a + cb][sb] = arc_a;
        }
        code.compact();
        let d = Self { code };
        d.code.validate()?;
        Ok(d)
    }

    fn check_site(&self, site: CrossingSite) -> Result<(), DiagramError> {
        if site.0 >= self.num_crossings() {
            return Err(DiagramError::SiteOutOfRange { site: site.0, len: self.num_crossings() });
        }
        Ok(())
    }

    /// The A-smoothing and the B-smoothing at `site`, orientation dropped.
    pub fn skein_children(&self, site: CrossingSite) -> Result<(Self, Self), DiagramError> {
        self.check_site(site)?;
        let a = self.code.smooth(site.0, [(0, 1), (2, 3)], false);
        let b = self.code.smooth(site.0, [(0, 3), (1, 2)], false);
        Ok((Self::from_code(a), Self::from_code(b)))
    }

    /// (L₊, L₋, L₀) at `site`: the diagram and its switch, ordered by sign,
    /// and the oriented smoothing.
    pub fn oriented_skein_children(&self, site: CrossingSite) -> Result<(Self, Self, Self), DiagramError> {
        self.check_site(site)?;
        let signs = self.signs().ok_or(DiagramError::Unoriented)?;
        let sign = signs[site.0];
        let switched = self.switch_crossing(site)?;
        let pairs = match sign {
            Sign::Positive => [(0, 1), (3, 2)],
            Sign::Negative => [(0, 3), (1, 2)],
        };
        let zero = Self::from_code(self.code.smooth(site.0, pairs, true));
        Ok(match sign {
            Sign::Positive => (self.clone(), switched, zero),
            Sign::Negative => (switched, self.clone(), zero),
        })
    }

    /// Exchanges over and under at one crossing.
    pub fn switch_crossing(&self, site: CrossingSite) -> Result<Self, DiagramError> {
        self.check_site(site)?;
        let mut code = self.code.clone();
        let [a, b, c, d] = code.crossings[site.0];
        match code.signs.as_mut() {
            None => code.crossings[site.0] = [b, c, d, a],
            Some(s) => {
                let (arcs, sign) = match s[site.0] {
                    Sign::Positive => ([d, a, b, c], Sign::Negative),
                    Sign::Negative => ([b, c, d, a], Sign::Positive),
                };
                code.crossings[site.0] = arcs;
                s[site.0] = sign;
            }
        }
        Ok(Self { code })
    }

    /// Inserts a Reidemeister I kink into `arc`. On an oriented diagram the
    /// crossing has the requested sign; unoriented diagrams get the kink that
    /// would be `sign` under either orientation of the arc.
    pub fn add_kink(&self, arc: usize, sign: Sign) -> Result<Self, DiagramError> {
        let d = if self.is_oriented() { self.clone() } else { self.oriented() };
        let occ = d.code.occurrences();
        let list = occ.get(&arc).ok_or(DiagramError::ArcNotFound(arc))?;
        let signs = d.code.signs.as_ref().unwrap();
        let head = list
            .iter()
            .copied()
            .find(|&o| match o {
                crate::planar::Occ::Slot(c, s) => incoming_slots(signs[c])[s],
                crate::planar::Occ::End(_) => false,
            })
            .unwrap();
        let crate::planar::Occ::Slot(hc, hs) = head else { unreachable!() };
        let mut code = d.code.clone();
        let fresh = code.max_label().unwrap() + 1;
        let (q, out) = (fresh, fresh + 1);
        code.crossings[hc][hs] = out;
        // the strand enters under, loops through q, leaves over into `out`
        let (x, sgn) = match sign {
            Sign::Positive => ([arc, out, q, q], Sign::Positive),
            Sign::Negative => ([arc, q, q, out], Sign::Negative),
        };
        code.crossings.push(x);
        code.signs.as_mut().unwrap().push(sgn);
        code.compact();
        let mut res = Self::from_code(code);
        if !self.is_oriented() {
            res = res.forget_orientation();
        }
        Ok(res)
    }

    /// Relabels arcs consecutively along components, starting from 1.
    pub fn canonical(&self) -> Self {
        let mut map: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 1;
        for cyc in self.code.cycles() {
            for &(c, s) in &cyc {
                let a = self.code.crossings[c][s];
                map.entry(a).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            }
        }
        let mut code = self.code.clone();
        for x in code.crossings.iter_mut() {
            for a in x.iter_mut() {
                *a = map[a];
            }
        }
        Self { code }
    }

    pub fn to_dto(&self) -> DiagramDto {
        let c = self.canonical();
        DiagramDto {
            oriented: c.is_oriented(),
            free_loops: c.free_loops(),
            crossings: c.code.crossings.clone(),
            signs: c.code.signs.as_ref().map(|s| {
                s.iter()
                    .map(|x| match x {
                        Sign::Positive => '+',
                        Sign::Negative => '-',
                    })
                    .collect()
            }),
        }
    }

    pub fn from_dto(dto: &DiagramDto) -> Result<Self, DiagramError> {
        if !dto.oriented {
            return Self::new(dto.crossings.clone(), dto.free_loops);
        }
        let signs = match &dto.signs {
            Some(s) => {
                if s.chars().count() != dto.crossings.len() {
                    return Err(DiagramError::Json("sign string length".into()));
                }
                s.chars()
                    .map(|ch| match ch {
                        '+' => Ok(Sign::Positive),
                        '-' => Ok(Sign::Negative),
                        _ => Err(DiagramError::Json(format!("bad sign {ch:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
            None => return infer_orientation(dto.crossings.clone(), vec![None; dto.crossings.len()], dto.free_loops),
        };
        Self::new_oriented(dto.crossings.clone(), signs, dto.free_loops)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_dto()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let dto: DiagramDto = serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        Self::from_dto(&dto)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDto {
    pub oriented: bool,
    pub free_loops: usize,
    pub crossings: Vec<[usize; 4]>,
    /// One `+` or `-` per crossing; absent means infer from numbering.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<String>,
}

/// Orients a crossing list read with the incoming-under-first convention.
fn infer_orientation(
    crossings: Vec<[usize; 4]>,
    explicit: Vec<Option<Sign>>,
    free_loops: usize,
) -> Result<LinkDiagram, DiagramError> {
    let code = Planar { crossings, signs: None, ends: vec![], ends_in: None, loops: free_loops };
    code.validate()?;
    let n = code.crossings.len();
    // contiguous label range of each component
    let size = code.max_label().map_or(0, |m| m + 1);
    let mut uf = UnionFind::new(size);
    for x in &code.crossings {
        uf.union(x[0], x[2]);
        uf.union(x[1], x[3]);
    }
    let mut range: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for x in &code.crossings {
        for &a in x {
            let r = range.entry(uf.find(a)).or_insert((a, a));
            r.0 = r.0.min(a);
            r.1 = r.1.max(a);
        }
    }
    let mut succ = |a: usize| {
        let (lo, hi) = range[&uf.find(a)];
        if a == hi {
            lo
        } else {
            a + 1
        }
    };
    let mut seeds: Vec<(usize, usize)> = (0..n).map(|c| (c, 0)).collect();
    for (c, e) in explicit.iter().enumerate() {
        if let Some(s) = e {
            seeds.push((c, if *s == Sign::Positive { 3 } else { 1 }));
        }
    }
    for (c, x) in code.crossings.iter().enumerate() {
        if succ(x[3]) == x[1] {
            seeds.push((c, 3));
        } else if succ(x[1]) == x[3] {
            seeds.push((c, 1));
        }
    }
    let fault = |c: usize| DiagramError::InconsistentOrientation { arc: code.crossings[c][0] };
    let oriented = code.orient(&[], &seeds).ok_or_else(|| fault(0))?;
    for c in 0..n {
        if oriented.crossings[c] != code.crossings[c] {
            return Err(fault(c));
        }
        if let Some(s) = explicit[c] {
            if oriented.signs.as_ref().unwrap()[c] != s {
                return Err(DiagramError::InconsistentOrientation { arc: code.crossings[c][1] });
            }
        }
    }
    let d = LinkDiagram::from_code(oriented);
    Ok(d)
}

pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(DiagramError::Malformed { line: 0, msg: "empty input".into() })?;
    let bad = |line: usize, msg: &str| DiagramError::Malformed { line, msg: msg.to_string() };
    let head: Vec<&str> = header.split_whitespace().collect();
    let (oriented, free_loops) = match head.as_slice() {
        ["U", n] => (false, n.parse::<usize>().map_err(|_| bad(hline, "bad loop count"))?),
        ["PD", kind, n] => {
            let o = match *kind {
                "oriented" => true,
                "unoriented" => false,
                _ => return Err(bad(hline, "expected oriented or unoriented")),
            };
            (o, n.parse::<usize>().map_err(|_| bad(hline, "bad loop count"))?)
        }
        _ => return Err(bad(hline, "expected header `PD <oriented|unoriented> <loops>`")),
    };
    let mut crossings = Vec::new();
    let mut explicit = Vec::new();
    for (ln, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        let sign = match tok[0] {
            "X" => None,
            "Xp" => Some(Sign::Positive),
            "Xm" => Some(Sign::Negative),
            _ => return Err(bad(ln, "expected X, Xp or Xm")),
        };
        if tok.len() != 5 {
            return Err(bad(ln, "a crossing needs four arcs"));
        }
        let mut x = [0usize; 4];
        for (k, t) in tok[1..].iter().enumerate() {
            x[k] = t.parse().map_err(|_| bad(ln, "arc ids are nonnegative integers"))?;
        }
        crossings.push(x);
        explicit.push(sign);
    }
    if head[0] == "U" && !crossings.is_empty() {
        return Err(bad(hline, "`U` input has no crossings"));
    }
    if oriented {
        infer_orientation(crossings, explicit, free_loops)
    } else {
        if explicit.iter().any(Option::is_some) {
            return Err(bad(hline, "signed crossings need an oriented header"));
        }
        LinkDiagram::new(crossings, free_loops)
    }
}

/// Canonical text form. Round-trips through `parse_pd`.
pub fn render_pd(d: &LinkDiagram) -> String {
    let c = d.canonical();
    let mut out = format!(
        "PD {} {}\n",
        if c.is_oriented() { "oriented" } else { "unoriented" },
        c.free_loops()
    );
    let needs_sign = c.signs().map(|s| ambiguous_crossings(&c, s));
    for (i, x) in c.crossings().iter().enumerate() {
        let tag = match (&needs_sign, c.signs()) {
            (Some(flags), Some(s)) if flags[i] => match s[i] {
                Sign::Positive => "Xp",
                Sign::Negative => "Xm",
            },
            _ => "X",
        };
        out.push_str(&format!("{tag} {} {} {} {}\n", x[0], x[1], x[2], x[3]));
    }
    out
}

/// Crossings whose over-strand lies on a two-arc component with no
/// under-crossings: consecutive numbering reads both directions there.
fn ambiguous_crossings(d: &LinkDiagram, _signs: &[Sign]) -> Vec<bool> {
    let code = &d.code;
    let size = code.max_label().map_or(0, |m| m + 1);
    let mut uf = UnionFind::new(size);
    for x in &code.crossings {
        uf.union(x[0], x[2]);
        uf.union(x[1], x[3]);
    }
    let mut has_under = vec![false; size];
    let mut arcs: BTreeMap<usize, std::collections::BTreeSet<usize>> = BTreeMap::new();
    for x in &code.crossings {
        has_under[uf.find(x[0])] = true;
        for &a in x {
            arcs.entry(uf.find(a)).or_default().insert(a);
        }
    }
    code.crossings
        .iter()
        .map(|x| {
            let r = uf.find(x[1]);
            !has_under[r] && arcs[&r].len() <= 2
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hopf_text() -> &'static str {
        "PD oriented 0\nX 1 3 2 4\nX 3 1 4 2\n"
    }

    #[test]
    fn parse_unknot_shorthand() {
        let d = parse_pd("U 1").unwrap();
        assert_eq!(d.num_crossings(), 0);
        assert_eq!(d.components(), 1);
    }

    #[test]
    fn hopf_parses_with_two_components() {
        let d = parse_pd(hopf_text()).unwrap();
        assert_eq!(d.num_crossings(), 2);
        assert_eq!(d.components(), 2);
        assert_eq!(d.writhe().unwrap(), 2);
    }

    #[test]
    fn rejects_bad_arc_counts() {
        let e = parse_pd("PD unoriented 0\nX 1 2 3 4\n").unwrap_err();
        assert!(matches!(e, DiagramError::ArcCount { .. }));
    }

    #[test]
    fn rejects_inconsistent_orientation() {
        // slot 0 of the second crossing would have to be outgoing
        let e = parse_pd("PD oriented 0\nX 1 4 2 3\nX 1 3 2 4\n").unwrap_err();
        assert!(matches!(e, DiagramError::InconsistentOrientation { .. }));
    }

    #[test]
    fn kink_writhe_and_children() {
        let d = parse_pd("PD oriented 0\nX 1 1 2 2\n").unwrap();
        assert_eq!(d.writhe().unwrap(), 1);
        let (_, _, zero) = d.oriented_skein_children(CrossingSite(0)).unwrap();
        assert_eq!(zero.num_crossings(), 0);
        assert_eq!(zero.components(), 2);
    }

    #[test]
    fn hopf_smoothings() {
        let d = parse_pd(hopf_text()).unwrap();
        let (a, b) = d.skein_children(CrossingSite(0)).unwrap();
        // a smoothing between two components always merges them
        assert_eq!([a.components(), b.components()], [1, 1]);
        assert_eq!(a.num_crossings(), 1);
        assert_eq!(b.num_crossings(), 1);
    }

    #[test]
    fn mirror_negates_writhe_and_is_involutive() {
        let d = parse_pd(hopf_text()).unwrap();
        let m = d.mirror();
        assert_eq!(m.writhe().unwrap(), -2);
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn render_round_trip() {
        let d = parse_pd(hopf_text()).unwrap();
        let back = parse_pd(&render_pd(&d)).unwrap();
        assert_eq!(back, d.canonical());
        let j = LinkDiagram::from_json(&d.to_json()).unwrap();
        assert_eq!(j, d.canonical());
    }

    #[test]
    fn union_and_sum_component_counts() {
        let h = parse_pd(hopf_text()).unwrap();
        assert_eq!(h.disjoint_union(&LinkDiagram::unknot()).components(), 3);
        assert_eq!(h.disjoint_union(&LinkDiagram::empty()), h.canonical().disjoint_union(&LinkDiagram::empty()));
        let s = h.connected_sum(&h, 1, 1).unwrap();
        assert_eq!(s.components(), 3);
        assert_eq!(s.num_crossings(), 4);
        assert!(matches!(h.connected_sum(&h, 9, 1), Err(DiagramError::ArcNotFound(9))));
    }

    #[test]
    fn kinks_carry_their_sign() {
        let h = parse_pd(hopf_text()).unwrap();
        let k = h.add_kink(1, Sign::Negative).unwrap();
        assert_eq!(k.writhe().unwrap(), 1);
        assert_eq!(k.components(), 2);
        let k2 = h.add_kink(2, Sign::Positive).unwrap();
        assert_eq!(k2.writhe().unwrap(), 3);
    }

    #[test]
    fn reversing_a_component_flips_linking_signs() {
        let h = parse_pd(hopf_text()).unwrap();
        let r = h.reverse_component(1).unwrap();
        assert_eq!(r.writhe().unwrap(), -2);
    }
}
