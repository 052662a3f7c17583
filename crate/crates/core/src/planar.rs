//! Combinatorial planar-diagram code shared by closed diagrams and tangles.
//!
//! A crossing lists four arc labels counterclockwise; slots 0 and 2 carry the
//! under-strand, slots 1 and 3 the over-strand. When the code is oriented,
//! slot 0 is always the incoming under-arc and the crossing sign records the
//! over-strand direction (positive: enters at slot 3, leaves at slot 1).
//! Open ends (the four corners of a tangle) are arc labels with one end on
//! the boundary.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Where an arc label occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Occ {
    Slot(usize, usize),
    End(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Planar {
    pub crossings: Vec<[usize; 4]>,
    pub signs: Option<Vec<Sign>>,
    pub ends: Vec<usize>,
    /// For each open end: does the strand enter the diagram there.
    pub ends_in: Option<Vec<bool>>,
    pub loops: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum PlanarFault {
    ArcCount { arc: usize, count: usize },
    Orientation { arc: usize },
}

/// Slots through which the strands enter a crossing, from its sign.
pub(crate) fn incoming_slots(sign: Sign) -> [bool; 4] {
    match sign {
        Sign::Positive => [true, false, false, true],
        Sign::Negative => [true, true, false, false],
    }
}

/// Normalizes a crossing given which of its slots are incoming.
pub(crate) fn normalize(arcs: [usize; 4], inc: [bool; 4]) -> ([usize; 4], Sign) {
    debug_assert!(inc[0] != inc[2] && inc[1] != inc[3]);
    let (arcs, inc) = if inc[2] { (rotate2(arcs), rotate2(inc)) } else { (arcs, inc) };
    let sign = if inc[3] { Sign::Positive } else { Sign::Negative };
    (arcs, sign)
}

fn rotate2<T: Copy>(x: [T; 4]) -> [T; 4] {
    [x[2], x[3], x[0], x[1]]
}

/// Applies a slot permutation: new slot `i` takes old slot `perm[i]`.
pub(crate) fn permute<T: Copy>(x: [T; 4], perm: [usize; 4]) -> [T; 4] {
    [x[perm[0]], x[perm[1]], x[perm[2]], x[perm[3]]]
}

/// Over/under exchange: new under-strand is the old over-strand.
pub(crate) const SWAP_LAYERS: [usize; 4] = [1, 2, 3, 0];
/// Planar reflection reversing the cyclic order, fixing slots 0 and 2.
pub(crate) const REFLECT: [usize; 4] = [0, 3, 2, 1];

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl Planar {
    pub fn empty() -> Self {
        Self { crossings: Vec::new(), signs: None, ends: Vec::new(), ends_in: None, loops: 0 }
    }

    pub fn is_oriented(&self) -> bool {
        self.signs.is_some()
    }

    pub fn max_label(&self) -> Option<usize> {
        self.crossings.iter().flatten().chain(self.ends.iter()).copied().max()
    }

    pub fn occurrences(&self) -> BTreeMap<usize, Vec<Occ>> {
        let mut occ: BTreeMap<usize, Vec<Occ>> = BTreeMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.iter().enumerate() {
                occ.entry(a).or_default().push(Occ::Slot(c, s));
            }
        }
        for (i, &a) in self.ends.iter().enumerate() {
            occ.entry(a).or_default().push(Occ::End(i));
        }
        occ
    }

    /// Is this occurrence where the arc arrives (its head)?
    fn is_head(&self, o: Occ) -> bool {
        match o {
            Occ::Slot(c, s) => incoming_slots(self.signs.as_ref().expect("oriented")[c])[s],
            Occ::End(i) => !self.ends_in.as_ref().expect("oriented")[i],
        }
    }

    pub fn validate(&self) -> Result<(), PlanarFault> {
        let occ = self.occurrences();
        for (&arc, list) in &occ {
            if list.len() != 2 {
                return Err(PlanarFault::ArcCount { arc, count: list.len() });
            }
        }
        if self.is_oriented() {
            for (&arc, list) in &occ {
                if self.is_head(list[0]) == self.is_head(list[1]) {
                    return Err(PlanarFault::Orientation { arc });
                }
            }
        }
        Ok(())
    }

    /// The occurrence of `arc` other than `here`.
    pub fn other(occ: &BTreeMap<usize, Vec<Occ>>, arc: usize, here: Occ) -> Occ {
        let list = &occ[&arc];
        if list[0] == here {
            list[1]
        } else {
            list[0]
        }
    }

    pub fn num_components(&self) -> usize {
        let n = self.max_label().map_or(0, |m| m + 1);
        let mut uf = UnionFind::new(n);
        for x in &self.crossings {
            uf.union(x[0], x[2]);
            uf.union(x[1], x[3]);
        }
        let mut roots: Vec<usize> = self
            .crossings
            .iter()
            .flatten()
            .chain(self.ends.iter())
            .map(|&a| uf.find(a))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        // Open strands share an arc with two ends; for tangles they are
        // counted as components too.
        roots.len() + self.loops
    }

    /// Relabels arcs into `0..n` by first appearance (ends first, then
    /// crossing slots in order).
    pub fn compact(&mut self) {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let mut next = 0;
        let mut get = |a: usize, map: &mut HashMap<usize, usize>| {
            *map.entry(a).or_insert_with(|| {
                next += 1;
                next - 1
            })
        };
        for e in self.ends.iter_mut() {
            *e = get(*e, &mut map);
        }
        for x in self.crossings.iter_mut() {
            for a in x.iter_mut() {
                *a = get(*a, &mut map);
            }
        }
    }

    /// Joins open ends pairwise and removes them. Any arc left without
    /// occurrences becomes a closed loop. Orientation survives only if every
    /// pair joins an incoming end to an outgoing one.
    pub fn join_ends(&mut self, pairs: &[(usize, usize)]) -> bool {
        let mut coherent = true;
        if let Some(ei) = &self.ends_in {
            coherent = pairs.iter().all(|&(i, j)| ei[i] != ei[j]);
        }
        let n = self.max_label().map_or(0, |m| m + 1);
        let mut uf = UnionFind::new(n);
        let mut loops = 0;
        for &(i, j) in pairs {
            if !uf.union(self.ends[i], self.ends[j]) {
                loops += 1;
            }
        }
        for x in self.crossings.iter_mut() {
            for a in x.iter_mut() {
                *a = uf.find(*a);
            }
        }
        let mut drop: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
        drop.sort_unstable();
        let keep: Vec<usize> = (0..self.ends.len()).filter(|i| drop.binary_search(i).is_err()).collect();
        self.ends = keep.iter().map(|&i| uf.find(self.ends[i])).collect();
        if let Some(ei) = &self.ends_in {
            let new: Vec<bool> = keep.iter().map(|&i| ei[i]).collect();
            self.ends_in = Some(new);
        }
        self.loops += loops;
        if !coherent {
            self.drop_orientation();
        }
        self.compact();
        coherent
    }

    pub fn drop_orientation(&mut self) {
        self.signs = None;
        self.ends_in = None;
    }

    /// Places `other` beside `self` with fresh labels. Returns the label offset
    /// applied to `other`.
    pub fn append(&mut self, other: &Planar) -> usize {
        let off = self.max_label().map_or(0, |m| m + 1);
        let both_oriented = self.is_oriented() && other.is_oriented();
        self.crossings.extend(other.crossings.iter().map(|x| x.map(|a| a + off)));
        self.ends.extend(other.ends.iter().map(|a| a + off));
        self.loops += other.loops;
        if both_oriented {
            self.signs.as_mut().unwrap().extend(other.signs.as_ref().unwrap().iter().copied());
            self.ends_in.as_mut().unwrap().extend(other.ends_in.as_ref().unwrap().iter().copied());
        } else {
            self.drop_orientation();
        }
        off
    }

    /// Applies a slot permutation to every crossing, keeping orientation.
    pub fn permute_slots(&mut self, perm: [usize; 4]) {
        match self.signs.take() {
            None => {
                for x in self.crossings.iter_mut() {
                    let p = permute(*x, perm);
                    // keep an under-strand in slot 0 for unoriented codes
                    *x = p;
                }
            }
            Some(signs) => {
                let mut new_signs = Vec::with_capacity(signs.len());
                for (x, s) in self.crossings.iter_mut().zip(signs) {
                    let (arcs, sign) = normalize(permute(*x, perm), permute(incoming_slots(s), perm));
                    *x = arcs;
                    new_signs.push(sign);
                }
                self.signs = Some(new_signs);
            }
        }
    }

    /// Reverses every strand and loop.
    pub fn reverse_all(&mut self) {
        if let Some(signs) = self.signs.as_mut() {
            for (x, s) in self.crossings.iter_mut().zip(signs.iter_mut()) {
                let inc = incoming_slots(*s).map(|b| !b);
                let (arcs, sign) = normalize(*x, inc);
                *x = arcs;
                *s = sign;
            }
        }
        if let Some(e) = self.ends_in.as_mut() {
            for b in e.iter_mut() {
                *b = !*b;
            }
        }
    }

    /// Orients every strand. Strands through open ends take their direction
    /// from `ends_in`; closed components are oriented so that the first
    /// unvisited slot (lowest crossing, lowest slot among under-slots first)
    /// is incoming, unless `seed` supplies an incoming occurrence.
    pub fn orient(&self, ends_in: &[bool], seeds: &[(usize, usize)]) -> Option<Planar> {
        assert_eq!(ends_in.len(), self.ends.len());
        let occ = self.occurrences();
        let n = self.crossings.len();
        let mut inc = vec![[false; 4]; n];
        let mut seen = vec![[false; 4]; n];
        // walk from a head occurrence, marking the path
        let walk = |start: Occ, inc: &mut Vec<[bool; 4]>, seen: &mut Vec<[bool; 4]>| -> Option<()> {
            let mut cur = start;
            loop {
                match cur {
                    Occ::End(j) => {
                        return if ends_in[j] { None } else { Some(()) };
                    }
                    Occ::Slot(c, s) => {
                        if seen[c][s] {
                            return Some(());
                        }
                        seen[c][s] = true;
                        inc[c][s] = true;
                        let t = (s + 2) % 4;
                        if seen[c][t] {
                            return None;
                        }
                        seen[c][t] = true;
                        let arc = self.crossings[c][t];
                        cur = Self::other(&occ, arc, Occ::Slot(c, t));
                    }
                }
            }
        };
        for (i, &is_in) in ends_in.iter().enumerate() {
            if !is_in {
                continue;
            }
            let first = Self::other(&occ, self.ends[i], Occ::End(i));
            walk(first, &mut inc, &mut seen)?;
        }
        for &(c, s) in seeds {
            if !seen[c][s] {
                walk(Occ::Slot(c, s), &mut inc, &mut seen)?;
            }
        }
        for c in 0..n {
            for s in [0, 2, 1, 3] {
                if !seen[c][s] {
                    walk(Occ::Slot(c, s), &mut inc, &mut seen)?;
                }
            }
        }
        // Strands with no crossings between two ends: must join an incoming end
        // to an outgoing one.
        for (i, &a) in self.ends.iter().enumerate() {
            if let Occ::End(j) = Self::other(&occ, a, Occ::End(i)) {
                if ends_in[i] == ends_in[j] {
                    return None;
                }
            }
        }
        let mut crossings = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for (x, b) in self.crossings.iter().zip(inc) {
            let (arcs, sign) = normalize(*x, b);
            crossings.push(arcs);
            signs.push(sign);
        }
        Some(Planar {
            crossings,
            signs: Some(signs),
            ends: self.ends.clone(),
            ends_in: Some(ends_in.to_vec()),
            loops: self.loops,
        })
    }

    /// Removes crossing `c`, joining its slots in the two given pairs.
    /// Arcs closed up by the join become free loops. Labels are compacted.
    pub fn smooth(&self, c: usize, pairs: [(usize, usize); 2], keep_orientation: bool) -> Planar {
        let x = self.crossings[c];
        let n = self.max_label().map_or(0, |m| m + 1);
        let mut uf = UnionFind::new(n);
        let mut loops = self.loops;
        for (s, t) in pairs {
            if !uf.union(x[s], x[t]) {
                loops += 1;
            }
        }
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c)
            .map(|(_, y)| y.map(|a| uf.find(a)))
            .collect();
        let signs = if keep_orientation {
            self.signs.as_ref().map(|s| {
                s.iter().enumerate().filter(|&(i, _)| i != c).map(|(_, &v)| v).collect()
            })
        } else {
            None
        };
        let mut out = Planar {
            crossings,
            ends_in: if signs.is_some() { self.ends_in.clone() } else { None },
            signs,
            ends: self.ends.iter().map(|&a| uf.find(a)).collect(),
            loops,
        };
        out.compact();
        out
    }

    /// Which end each end is joined to by a strand, ignoring crossings.
    pub fn end_pairing(&self) -> Vec<usize> {
        let occ = self.occurrences();
        let mut pair = vec![usize::MAX; self.ends.len()];
        for i in 0..self.ends.len() {
            let mut cur = Self::other(&occ, self.ends[i], Occ::End(i));
            loop {
                match cur {
                    Occ::End(j) => {
                        pair[i] = j;
                        break;
                    }
                    Occ::Slot(c, s) => {
                        let t = (s + 2) % 4;
                        let arc = self.crossings[c][t];
                        cur = Self::other(&occ, arc, Occ::Slot(c, t));
                    }
                }
            }
        }
        pair
    }

    /// Strand cycles of a closed code: for each component, the sequence of
    /// (crossing, slot) pairs at which it enters crossings, in the order
    /// traversed. Components are ordered by their lowest arc label; each
    /// starts at the head of its lowest arc.
    /// Without orientation each cycle starts at the first occurrence of its
    /// lowest arc.
    pub fn cycles(&self) -> Vec<Vec<(usize, usize)>> {
        assert!(self.ends.is_empty());
        let occ = self.occurrences();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut cycles = Vec::new();
        for list in occ.values() {
            let head = if !self.is_oriented() || self.is_head(list[0]) { list[0] } else { list[1] };
            let Occ::Slot(c0, s0) = head else { unreachable!() };
            if seen[c0][s0] {
                continue;
            }
            let mut cyc = Vec::new();
            let (mut c, mut s) = (c0, s0);
            while !seen[c][s] {
                seen[c][s] = true;
                cyc.push((c, s));
                let t = (s + 2) % 4;
                let next = self.crossings[c][t];
                match Self::other(&occ, next, Occ::Slot(c, t)) {
                    Occ::Slot(c2, s2) => {
                        c = c2;
                        s = s2;
                    }
                    Occ::End(_) => unreachable!(),
                }
            }
            cycles.push(cyc);
        }
        cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kink() -> Planar {
        Planar { crossings: vec![[1, 1, 2, 2]], signs: None, ends: vec![], ends_in: None, loops: 0 }
    }

    #[test]
    fn orienting_a_kink_gives_positive_sign() {
        let k = kink().orient(&[], &[]).unwrap();
        k.validate().unwrap();
        assert_eq!(k.signs, Some(vec![Sign::Positive]));
    }

    #[test]
    fn normalize_rotates_incoming_under_to_slot_zero() {
        let (arcs, sign) = normalize([1, 2, 3, 4], [false, true, true, false]);
        assert_eq!(arcs, [3, 4, 1, 2]);
        assert_eq!(sign, Sign::Positive);
    }

    #[test]
    fn joining_both_ends_of_a_bare_strand_makes_a_loop() {
        let mut p = Planar { crossings: vec![], signs: None, ends: vec![0, 0], ends_in: None, loops: 0 };
        p.join_ends(&[(0, 1)]);
        assert_eq!(p.loops, 1);
        assert!(p.ends.is_empty());
    }

    #[test]
    fn union_find_joins() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(3, 4));
        assert!(uf.union(4, 1));
        assert!(!uf.union(1, 3));
        assert_eq!(uf.find(4), 1);
    }
}
