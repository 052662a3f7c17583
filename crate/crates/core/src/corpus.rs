//! Seeded random tangles and link diagrams for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::LinkDiagram;
use crate::expr::TExpr;
use crate::planar::Sign;

pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// An algebraic tangle expression with between 1 and `max_crossings`
    /// crossings and no closed components.
    pub fn texpr(&mut self, max_crossings: usize) -> TExpr {
        loop {
            let n = self.rng.gen_range(1..=max_crossings.max(1));
            let e = self.texpr_exact(n);
            if e.build().num_components() == 2 {
                return e;
            }
        }
    }

    fn texpr_exact(&mut self, n: usize) -> TExpr {
        if n <= 1 || self.rng.gen_bool(0.15) {
            let k = n as i64;
            return if self.rng.gen_bool(0.5) { TExpr::Int(k) } else { TExpr::Int(-k) };
        }
        let left = self.rng.gen_range(1..n);
        let a = self.texpr_exact(left);
        let b = self.texpr_exact(n - left);
        let e = if self.rng.gen_bool(0.5) { TExpr::sum(a, b) } else { TExpr::star(a, b) };
        match self.rng.gen_range(0..10) {
            0 => TExpr::rot(e),
            1 => TExpr::neg(e),
            2 => TExpr::rho(e),
            _ => e,
        }
    }

    pub fn left_right_texpr(&mut self, max_crossings: usize) -> TExpr {
        loop {
            let e = self.texpr(max_crossings);
            if e.left_right_orientable() {
                return e;
            }
        }
    }

    pub fn diagonal_texpr(&mut self, max_crossings: usize) -> TExpr {
        loop {
            let e = self.texpr(max_crossings);
            if e.diagonal_orientable() {
                return e;
            }
        }
    }

    /// An oriented diagram: a closure of a random tangle, sometimes with a
    /// few kinks added.
    pub fn diagram(&mut self, max_crossings: usize) -> LinkDiagram {
        let kinks = if max_crossings > 2 { self.rng.gen_range(0..=2) } else { 0 };
        let t = self.texpr(max_crossings - kinks).build();
        let d = if self.rng.gen_bool(0.5) { t.numerator() } else { t.denominator() };
        let mut d = d.expect("unoriented closures always exist").oriented();
        for _ in 0..kinks {
            d = self.add_kink(&d);
        }
        d
    }

    pub fn add_kink(&mut self, d: &LinkDiagram) -> LinkDiagram {
        let arcs: Vec<usize> = d.crossings().iter().flatten().copied().collect();
        if arcs.is_empty() {
            return d.clone();
        }
        let arc = arcs[self.rng.gen_range(0..arcs.len())];
        let sign = if self.rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
        d.add_kink(arc, sign).expect("arc exists")
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_respect_bounds() {
        let mut c = Corpus::new(7);
        for _ in 0..50 {
            let e = c.texpr(8);
            assert!((1..=8).contains(&e.num_crossings()));
            assert_eq!(e.build().num_crossings(), e.num_crossings());
            assert_eq!(e.build().num_components(), 2);
            let d = c.diagram(12);
            assert!(d.num_crossings() <= 12);
            assert!(d.is_oriented());
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let (mut a, mut b) = (Corpus::new(3), Corpus::new(3));
        for _ in 0..10 {
            assert_eq!(a.texpr(6), b.texpr(6));
        }
    }
}
