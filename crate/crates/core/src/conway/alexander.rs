//! Conway polynomial from the Wirtinger Alexander matrix.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::laurent::LaurentPoly;
use crate::planar::{Planar, Sign, UnionFind};

/// `∇` of a connected, kink-free, loop-free diagram, or `None` when the sign
/// cannot be pinned down.
pub(super) fn conway(code: &Planar) -> Option<LaurentPoly> {
    let n = code.crossings.len();
    let signs = code.signs.as_ref()?;
    let size = code.max_label()? + 1;

    let mut over = UnionFind::new(size);
    for x in &code.crossings {
        over.union(x[1], x[3]);
    }
    let arcs = index_roots(code, &mut over);
    let link = Linking::new(code);
    let mu = link.lk.len();
    if arcs.len() != n {
        // some component never passes under: it lifts off
        return if mu > 1 { Some(LaurentPoly::zero()) } else { None };
    }

    let t = LaurentPoly::monomial(1, 1);
    let one = LaurentPoly::one();
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for (row, (x, s)) in m.iter_mut().zip(code.crossings.iter().zip(signs)) {
        let (i, j, k) = (arcs[&over.find(x[0])], arcs[&over.find(x[2])], arcs[&over.find(x[1])]);
        let (ci, cj) = match s {
            Sign::Positive => (t.clone(), -one.clone()),
            Sign::Negative => (one.clone(), -t.clone()),
        };
        row[i] = &row[i] + &ci;
        row[j] = &row[j] + &cj;
        row[k] = &row[k] - &(&ci + &cj);
    }
    m.pop();
    for row in &mut m {
        row.pop();
    }
    let det = determinant(m);
    if det.is_zero() {
        return Some(det);
    }

    // symmetric form in q = t^½
    let q = det.scale_exponents(2);
    let (lo, hi) = (q.min_exponent().ok()?, q.max_exponent().ok()?);
    let mut rest = q.shift(-(lo + hi) / 2);
    let mut nabla = LaurentPoly::zero();
    let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    while !rest.is_zero() {
        let (top, c) = rest.leading_term().ok()?;
        if top < 0 {
            return None;
        }
        nabla = &nabla + &LaurentPoly::monomial(top, c.clone());
        rest = &rest - &z.pow(top as u32).scale(c);
    }

    let lk = &link.lk;
    let lap: Vec<Vec<LaurentPoly>> = (0..mu - 1)
        .map(|i| {
            (0..mu - 1)
                .map(|j| LaurentPoly::constant(if i == j { lk[i].iter().sum::<i64>() } else { -lk[i][j] }))
                .collect()
        })
        .collect();
    let cofactor = determinant(lap).coeff(0);
    let lowest = nabla.coeff(mu as i64 - 1);
    if cofactor == BigInt::from(0) {
        None
    } else if lowest == cofactor {
        Some(nabla)
    } else if lowest == -cofactor {
        Some(-nabla)
    } else {
        None
    }
}

/// A crossing between two components whose linking number is zero.
pub(super) fn unlinked_crossing(code: &Planar) -> Option<usize> {
    let link = Linking::new(code);
    code.crossings.iter().position(|x| {
        let (a, b) = (link.of(x[0]), link.of(x[1]));
        a != b && link.lk[a][b] == 0
    })
}

struct Linking {
    /// component of each arc label
    comp: Vec<usize>,
    lk: Vec<Vec<i64>>,
}

impl Linking {
    fn new(code: &Planar) -> Self {
        let size = code.max_label().map_or(0, |m| m + 1);
        let mut strand = UnionFind::new(size);
        for x in &code.crossings {
            strand.union(x[0], x[2]);
            strand.union(x[1], x[3]);
        }
        let comps = index_roots(code, &mut strand);
        let comp = (0..size).map(|a| comps.get(&strand.find(a)).copied().unwrap_or(usize::MAX)).collect();
        let mut link = Linking { comp, lk: Vec::new() };
        let signs = code.signs.as_ref().expect("oriented");
        let mut twice = vec![vec![0i64; comps.len()]; comps.len()];
        for (x, s) in code.crossings.iter().zip(signs) {
            let (a, b) = (link.of(x[0]), link.of(x[1]));
            if a != b {
                twice[a][b] += s.value();
                twice[b][a] += s.value();
            }
        }
        link.lk = twice.into_iter().map(|row| row.into_iter().map(|v| v / 2).collect()).collect();
        link
    }

    fn of(&self, arc: usize) -> usize {
        self.comp[arc]
    }
}

fn index_roots(code: &Planar, uf: &mut UnionFind) -> HashMap<usize, usize> {
    let mut idx = HashMap::new();
    for &a in code.crossings.iter().flatten() {
        let r = uf.find(a);
        let next = idx.len();
        idx.entry(r).or_insert(next);
    }
    idx
}

/// Fraction-free (Bareiss) elimination over `Z[t, t⁻¹]`.
fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LaurentPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
