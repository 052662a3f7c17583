//! The verification program: named checks grouped into criteria and suites,
//! each comparing a rendered expected value with a computed one.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::{
    closed_form_torus_closure, jones, kauffman_bracket, kauffman_bracket_statesum_limit, DEFAULT_STATESUM_LIMIT,
};
use crate::conway::{conway, conway_skein_check, ConwayPoly};
use crate::corpus::Corpus;
use crate::diagram::{CrossingSite, LinkDiagram};
use crate::expr::TExpr;
use crate::families::{self, CSelector};
use crate::laurent::LaurentPoly;
use crate::planar::Sign;
use crate::tangle::{phi_l, ConwayVector, OrientationClass, Tangle, TangleFraction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed };
        Self { checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("{tag} {} ({} ms)\n", c.name, c.ms));
            if !c.pass {
                out.push_str(&format!("     expected: {}\n     actual:   {}\n", c.expected, c.actual));
            }
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    BracketBasics,
    Thm38,
    Sec5,
    Props,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["bracket-basics", "thm-3-8", "sec-5", "props", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BracketBasics => "bracket-basics",
            Suite::Thm38 => "thm-3-8",
            Suite::Sec5 => "sec-5",
            Suite::Props => "props",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "bracket-basics" => Suite::BracketBasics,
            "thm-3-8" => Suite::Thm38,
            "sec-5" => Suite::Sec5,
            "props" => Suite::Props,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite `{s}`; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Also evaluate the two-copy links directly from their diagrams.
    pub deep: bool,
    /// Crossing cap for the state-sum oracle and direct evaluation.
    pub max_crossings: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self { deep: false, max_crossings: DEFAULT_STATESUM_LIMIT, seed: 2024 }
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub suite: Suite,
    run: fn(&Options) -> Vec<CheckResult>,
}

impl Criterion {
    pub fn run(&self, opts: &Options) -> Vec<CheckResult> {
        (self.run)(opts)
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "bracket base values of C(T)", suite: Suite::BracketBasics, run: bracket_base_values },
        Criterion { id: 2, title: "Jones values of Hopf and H", suite: Suite::BracketBasics, run: jones_values },
        Criterion { id: 3, title: "kink factors, twist closures, connected sums", suite: Suite::BracketBasics, run: kinks_and_closed_forms },
        Criterion { id: 4, title: "closure formula for the bracket of C(T)", suite: Suite::Thm38, run: c_of_formula },
        Criterion { id: 5, title: "U(n,m) bracket spans and TU(n,m) products", suite: Suite::Thm38, run: u_spans },
        Criterion { id: 6, title: "Conway values and skein identity", suite: Suite::Sec5, run: conway_values },
        Criterion { id: 7, title: "tangle calculus and fraction values", suite: Suite::Props, run: tangle_calculus },
        Criterion { id: 8, title: "Conway-trivial tangle 1*T0(n) and its links", suite: Suite::Sec5, run: js_links },
        Criterion { id: 9, title: "reversed-strand Conway vector of T0", suite: Suite::Sec5, run: reversed_strand_checks },
        Criterion { id: 10, title: "bracket oracle equivalence", suite: Suite::Props, run: oracles },
    ]
}

pub fn run_suite(suite: Suite, opts: &Options) -> RunReport {
    let selected: Vec<Criterion> = criteria().into_iter().filter(|c| suite == Suite::All || c.suite == suite).collect();
    let checks: Vec<Vec<CheckResult>> = selected.par_iter().map(|c| c.run(opts)).collect();
    RunReport::new(checks.into_iter().flatten().collect())
}

fn check<E: fmt::Display, F: FnOnce() -> Result<String, String>>(name: impl Into<String>, expected: E, f: F) -> CheckResult {
    let start = Instant::now();
    let expected = expected.to_string();
    let actual = f().unwrap_or_else(|e| format!("error: {e}"));
    CheckResult { name: name.into(), pass: actual == expected, expected, actual, ms: start.elapsed().as_millis() as u64 }
}

/// Collapses many comparisons into one result: the first mismatch, or a count.
fn batch<I>(name: impl Into<String>, cases: I) -> CheckResult
where
    I: IntoIterator<Item = (String, Result<(String, String), String>)>,
{
    let start = Instant::now();
    let mut count = 0;
    let mut failure = None;
    for (label, r) in cases {
        count += 1;
        match r {
            Ok((e, a)) if e == a => {}
            Ok((e, a)) => {
                failure = Some((format!("{label}: {e}"), format!("{label}: {a}")));
                break;
            }
            Err(msg) => {
                failure = Some((label.clone(), format!("{label}: error: {msg}")));
                break;
            }
        }
    }
    let ms = start.elapsed().as_millis() as u64;
    match failure {
        None => {
            let s = format!("{count} cases agree");
            CheckResult { name: name.into(), expected: s.clone(), actual: s, pass: true, ms }
        }
        Some((expected, actual)) => CheckResult { name: name.into(), expected, actual, pass: false, ms },
    }
}

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn cz(terms: &[(i64, i64)]) -> ConwayPoly {
    ConwayPoly::from_terms(terms)
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn bracket_of_c(t: &Tangle) -> Result<String, String> {
    Ok(kauffman_bracket(&families::c_of(t, CSelector::Unoriented).map_err(err)?).to_string())
}

fn span(p: &LaurentPoly) -> String {
    p.span().map(|s| s.to_string()).unwrap_or_else(|_| "undefined".into())
}

fn bracket_base_values(_: &Options) -> Vec<CheckResult> {
    let one_star = |u: Tangle| Tangle::one().star(&u).expect("unoriented");
    vec![
        check("<C(0)>", lp(&[(8, 1), (0, 2), (-8, 1)]), || bracket_of_c(&Tangle::zero())),
        check("<C(inf)>", lp(&[(2, -1), (-2, -1)]), || bracket_of_c(&Tangle::infinity())),
        check("<C(1*0)>", lp(&[(11, -1), (3, -2), (-5, -1)]), || bracket_of_c(&one_star(Tangle::zero()))),
        check("<C(1*inf)>", lp(&[(9, 1), (1, 1), (-3, -1), (-7, 1)]), || bracket_of_c(&one_star(Tangle::infinity()))),
    ]
}

fn jones_values(_: &Options) -> Vec<CheckResult> {
    vec![
        check("V(Hopf)", "-t^(5/2) - t^(1/2)", || Ok(jones(&families::hopf()).map_err(err)?.render_t())),
        check("V(H)", "t^5 + 2t^3 + t", || Ok(jones(&families::h()).map_err(err)?.render_t())),
        check("span <H>", 16, || Ok(span(&kauffman_bracket(&families::h())))),
    ]
}

fn kinks_and_closed_forms(opts: &Options) -> Vec<CheckResult> {
    let mut corpus = Corpus::new(opts.seed ^ 3);
    let diagrams: Vec<LinkDiagram> = (0..50).map(|_| corpus.diagram(9)).collect();
    let kink_cases = diagrams.iter().enumerate().flat_map(|(i, d)| {
        let base = kauffman_bracket(d);
        let arc = d.crossings()[0][0];
        [(Sign::Positive, lp(&[(3, -1)])), (Sign::Negative, lp(&[(-3, -1)]))].into_iter().map(move |(s, factor)| {
            let r = d.add_kink(arc, s).map_err(err).map(|k| ((&factor * &base).to_string(), kauffman_bracket(&k).to_string()));
            (format!("diagram {i} {s:?}"), r)
        })
    });
    let mut out = vec![batch("kink factors on 50 diagrams", kink_cases.collect::<Vec<_>>())];
    let closed = (1..=8i64).flat_map(|k| [k, -k]).map(|k| {
        let r = closed_form_torus_closure(k).map_err(err).and_then(|cf| {
            let direct = kauffman_bracket(&Tangle::integer(k).numerator().map_err(err)?);
            Ok((cf.to_string(), direct.to_string()))
        });
        (format!("k = {k}"), r)
    });
    out.push(batch("twist closures k = ±1..8", closed.collect::<Vec<_>>()));
    let sums = (0..20).map(|i| {
        let (a, b) = (corpus.diagram(7), corpus.diagram(7));
        let (arc_a, arc_b) = (a.crossings()[0][1], b.crossings()[0][2]);
        let r = a.connected_sum(&b, arc_a, arc_b).map_err(err).map(|s| {
            ((&kauffman_bracket(&a) * &kauffman_bracket(&b)).to_string(), kauffman_bracket(&s).to_string())
        });
        (format!("pair {i}"), r)
    });
    out.push(batch("connected sums of 20 pairs", sums.collect::<Vec<_>>()));
    out
}

fn c_of_formula(opts: &Options) -> Vec<CheckResult> {
    let mut corpus = Corpus::new(opts.seed ^ 4);
    let cases = (0..100).map(|i| {
        let e = corpus.texpr(8);
        let t = e.build();
        let r = families::bracket_c_formula(&t).map_err(err).and_then(|f| Ok((f.to_string(), bracket_of_c(&t)?)));
        (format!("#{i} {e}"), r)
    });
    vec![
        check("formula at 0", lp(&[(8, 1), (0, 2), (-8, 1)]), || {
            families::bracket_c_formula(&Tangle::zero()).map(|p| p.to_string()).map_err(err)
        }),
        check("formula at inf", lp(&[(2, -1), (-2, -1)]), || {
            families::bracket_c_formula(&Tangle::infinity()).map(|p| p.to_string()).map_err(err)
        }),
        batch("formula vs diagram on 100 tangles", cases.collect::<Vec<_>>()),
    ]
}

fn u_span(n: i64, m: i64) -> Result<String, String> {
    Ok(span(&kauffman_bracket(&families::u(n, m))))
}

fn u_spans(_: &Options) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(check(format!("span <U({n},{})>", -n), 8 * n + 24, || u_span(n, -n)));
    }
    for n in 2..=5 {
        out.push(check(format!("span <U({n},0)>"), 4 * n + 20, || u_span(n, 0)));
    }
    for m in 1..=3 {
        out.push(check(format!("span <U({},{})>", m + 1, -m), 8 * m + 28, || u_span(m + 1, -m)));
    }
    for (n, m) in [(3, 1), (4, 2)] {
        out.push(check(format!("span <U({n},{})>", -m), 4 * n + 4 * m + 16, || u_span(n, -m)));
    }
    for m in 2..=4 {
        out.push(check(format!("span <U(0,{m})>"), 4 * m + 27, || u_span(0, m)));
    }
    for (n, m) in [(1, 2), (1, 3), (2, 3)] {
        out.push(check(format!("span <U({n},{m})>"), 4 * (n + m) + 27, || u_span(n, m)));
    }
    for (n, m) in [(1, -1), (2, 0), (1, 2), (3, -1), (0, 3), (2, -2)] {
        let direct = kauffman_bracket(&families::tu(n, m).denominator().expect("unoriented"));
        out.push(check(format!("<TU({n},{m})^D> product form"), direct, || {
            families::closed_form_tu_d(n, m).map(|p| p.to_string()).map_err(err)
        }));
    }
    out
}

fn conway_of(d: Result<LinkDiagram, String>) -> Result<String, String> {
    Ok(conway(&d?).map_err(err)?.to_string())
}

fn conway_values(opts: &Options) -> Vec<CheckResult> {
    let c = |t: Tangle, sel| families::c_of(&t, sel).map_err(err);
    let mut out = vec![
        check("unknot", cz(&[(0, 1)]), || conway_of(Ok(LinkDiagram::unknot().oriented()))),
        check("2-component unlink", cz(&[]), || conway_of(Ok(LinkDiagram::unlink(2).oriented()))),
        check("split Hopf and trefoil", cz(&[]), || {
            let t = crate::diagram::parse_pd("PD oriented 0\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n").map_err(err)?;
            conway_of(Ok(families::hopf().disjoint_union(&t)))
        }),
        check("C+(0)", cz(&[(2, 1)]), || conway_of(c(Tangle::zero(), CSelector::Plus))),
        check("C-(0)", cz(&[(2, 1)]), || conway_of(c(Tangle::zero(), CSelector::Minus))),
        check("C+(1)", cz(&[(1, 2), (3, 1)]), || conway_of(c(Tangle::one(), CSelector::Plus))),
        check("C-(1)", cz(&[(1, -2)]), || conway_of(c(Tangle::one(), CSelector::Minus))),
    ];
    let mut corpus = Corpus::new(opts.seed ^ 6);
    let cases: Vec<_> = (0..30)
        .flat_map(|i| {
            let d = corpus.diagram(9);
            (0..d.num_crossings())
                .map(|s| {
                    let r = conway_skein_check(&d, CrossingSite(s)).map_err(err).map(|ok| ("holds".to_string(), (if ok { "holds" } else { "fails" }).to_string()));
                    (format!("diagram {i} crossing {s}"), r)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.push(batch("skein identity on 30 diagrams", cases));
    out
}

fn tangle_calculus(opts: &Options) -> Vec<CheckResult> {
    use OrientationClass::{DiagonalA, LeftRight};
    let mut corpus = Corpus::new(opts.seed ^ 7);
    let br_cases: Vec<_> = (0..200)
        .map(|i| {
            let (a, b) = (corpus.texpr(6), corpus.texpr(6));
            let r = (|| {
                let direct = a.build().sum(&b.build()).map_err(err)?.bracket_vector().map_err(err)?;
                let alg = a.build().bracket_vector().map_err(err)?.sum(&b.build().bracket_vector().map_err(err)?);
                Ok((alg.to_string(), direct.to_string()))
            })();
            (format!("#{i} ({a}) + ({b})"), r)
        })
        .collect();
    let frac_cases: Vec<_> = (0..100)
        .map(|i| {
            let (a, b) = (corpus.diagonal_texpr(6), corpus.diagonal_texpr(6));
            let r = (|| {
                let (ta, tb) = (a.build_oriented(DiagonalA).map_err(err)?, b.build_oriented(DiagonalA).map_err(err)?);
                let direct = ta.sum(&tb).map_err(err)?.fraction().map_err(err)?;
                let alg = ta.fraction().map_err(err)?.sum(&tb.fraction().map_err(err)?);
                Ok((alg.to_string(), direct.to_string()))
            })();
            (format!("#{i} ({a}) + ({b})"), r)
        })
        .collect();
    let expansion_cases: Vec<_> = (0..100)
        .map(|i| {
            let a = corpus.left_right_texpr(6);
            let r = (|| {
                let t = a.build_oriented(LeftRight).map_err(err)?;
                let con = t.conway_vector().map_err(err)?;
                let mut expected = Vec::new();
                let mut actual = Vec::new();
                for sel in [CSelector::Plus, CSelector::Minus] {
                    let at = |u: &Tangle| -> Result<ConwayPoly, String> {
                        conway(&families::c_of(u, sel).map_err(err)?).map_err(err)
                    };
                    let one = Tangle::one().orient(LeftRight).map_err(err)?;
                    expected.push(phi_l(&con, &at(&Tangle::zero())?, &at(&one)?).to_string());
                    actual.push(at(&t)?.to_string());
                }
                Ok((expected.join(", "), actual.join(", ")))
            })();
            (format!("#{i} {a}"), r)
        })
        .collect();
    let sum_cases: Vec<_> = (0..100)
        .map(|i| {
            let (a, b) = (corpus.left_right_texpr(5), corpus.left_right_texpr(5));
            let r = (|| {
                let (ta, tb) = (a.build_oriented(LeftRight).map_err(err)?, b.build_oriented(LeftRight).map_err(err)?);
                let direct = ta.sum(&tb).map_err(err)?.conway_vector().map_err(err)?;
                let alg = ta.conway_vector().map_err(err)?.sum(&tb.conway_vector().map_err(err)?);
                Ok((alg.to_string(), direct.to_string()))
            })();
            (format!("#{i} ({a}) + ({b})"), r)
        })
        .collect();
    let star_cases: Vec<_> = (0..100)
        .map(|i| {
            let (a, w) = (corpus.left_right_texpr(5), corpus.diagonal_texpr(5));
            let r = (|| {
                let ta = a.build_oriented(LeftRight).map_err(err)?;
                let tw = w.build_oriented(OrientationClass::DiagonalB).map_err(err)?;
                let direct = ta.star(&tw).map_err(err)?.conway_vector().map_err(err)?;
                let alg = ta.conway_vector().map_err(err)?.star(&tw.fraction().map_err(err)?);
                Ok((alg.to_string(), direct.to_string()))
            })();
            (format!("#{i} ({a}) * ({w})"), r)
        })
        .collect();
    let frac = |t: Result<Tangle, String>| -> Result<String, String> { Ok(t?.fraction().map_err(err)?.to_string()) };
    let tf = |n: &[(i64, i64)], d: &[(i64, i64)]| TangleFraction::new(cz(n), cz(d));
    let mut out = vec![
        batch("bracket vector of sums, 200 pairs", br_cases),
        batch("fraction of sums, 100 pairs", frac_cases),
        batch("Conway vector expansion in C+ and C-, 100 tangles", expansion_cases),
        batch("Conway vector of sums, 100 pairs", sum_cases),
        batch("Conway vector of stars, 100 pairs", star_cases),
        check("F(T_A)", tf(&[(0, 1)], &[(1, 1)]), || frac(Ok(families::t_a()))),
        check("F(-T_A)", tf(&[(0, 1)], &[(1, -1)]), || frac(Ok(families::t_a().negate()))),
        check("F(T_B)", tf(&[(1, 3)], &[(0, 1)]), || frac(Ok(families::t_b()))),
        check("F(T_C)", tf(&[(1, -3)], &[(0, 1)]), || frac(Ok(families::t_c()))),
    ];
    for n in 1..=4 {
        out.push(check(format!("F(T0({n}))"), tf(&[], &[(0, 1)]), || {
            families::t_zero_expr(n).fraction().map(|f| f.to_string()).map_err(err)
        }));
    }
    out
}

fn js_links(opts: &Options) -> Vec<CheckResult> {
    let unit = ConwayVector::zero_tangle();
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(check(format!("con(1*T0({n})) by algebra"), &unit, || {
            families::one_star_t0_expr(n).conway_vector().map(|c| c.to_string()).map_err(err)
        }));
    }
    let direct = if opts.deep { 2 } else { 1 };
    for n in 1..=direct {
        out.push(check(format!("con(1*T0({n})) from diagrams"), &unit, || {
            Ok(families::one_star_t0(n).map_err(err)?.conway_vector().map_err(err)?.to_string())
        }));
        for sel in [CSelector::Plus, CSelector::Minus] {
            out.push(check(format!("conway of {sel:?} orientation of C(1*T0({n}))"), cz(&[(2, 1)]), || {
                conway_of(families::js_link_oriented(n, sel).map_err(err))
            }));
        }
        let alg = families::js_link_bracket(n).map(|p| p.to_string()).unwrap_or_default();
        out.push(check(format!("<C(1*T0({n}))> from the diagram"), alg, || {
            let d = families::js_link(n).map_err(err)?;
            Ok(kauffman_bracket(&d).to_string())
        }));
    }
    for n in 1..=3usize {
        out.push(check(format!("span <C(1*T0({n}))> by algebra"), 100 * n + 16, || {
            Ok(span(&families::js_link_bracket(n).map_err(err)?))
        }));
    }
    for n in 1..=4i64 {
        let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
        let expected = format!(
            "f: {} .. {}; g: {} .. {}",
            lp(&[(40 * n, 1)]),
            lp(&[(-52 * n, sign(n))]),
            lp(&[(40 * n - 6, -n)]),
            lp(&[(-60 * n + 2, sign(n + 1))])
        );
        out.push(check(format!("extreme terms of br(T0({n}))"), expected, || {
            let br = families::t_zero_bracket_vector(n as usize).map_err(err)?;
            Ok(extremes(&br.f, &br.g))
        }));
    }
    out.push(check("extreme terms of br(T0) from the diagram",
        format!("f: {} .. {}; g: {} .. {}", lp(&[(40, 1)]), lp(&[(-52, -1)]), lp(&[(34, -1)]), lp(&[(-58, 1)])),
        || {
            let br = families::t_zero(1).map_err(err)?.bracket_vector().map_err(err)?;
            Ok(extremes(&br.f, &br.g))
        },
    ));
    out
}

fn extremes(f: &LaurentPoly, g: &LaurentPoly) -> String {
    let term = |p: &LaurentPoly, lead: bool| {
        let t = if lead { p.leading_term() } else { p.trailing_term() };
        t.map(|(e, c)| LaurentPoly::monomial(e, c).to_string()).unwrap_or_else(|_| "none".into())
    };
    format!("f: {} .. {}; g: {} .. {}", term(f, true), term(f, false), term(g, true), term(g, false))
}

fn reversed_strand_checks(_: &Options) -> Vec<CheckResult> {
    let r = families::remark_5_4();
    let field = |get: fn(&families::Remark54) -> String| match &r {
        Ok(r) => Ok(get(r)),
        Err(e) => Err(e.to_string()),
    };
    vec![
        check("conway of U0^N", cz(&[(0, 1)]), || field(|r| r.u0_numerator.to_string())),
        check("conway of U0^D", cz(&[]), || field(|r| r.u0_denominator.to_string())),
        check("con(T_A' * U0) = con(T_A')", "equal", || {
            field(|r| if r.con_ta_star.0 == r.con_ta_star.1 { "equal".into() } else { format!("{} vs {}", r.con_ta_star.0, r.con_ta_star.1) })
        }),
        check("con(-T_A' * U0) = con(-T_A')", "equal", || {
            field(|r| if r.con_neg_ta_star.0 == r.con_neg_ta_star.1 { "equal".into() } else { format!("{} vs {}", r.con_neg_ta_star.0, r.con_neg_ta_star.1) })
        }),
        check("con(T0')", ConwayVector::zero_tangle(), || field(|r| r.con_t0_prime.to_string())),
        check("reversed-strand conditions hold together", true, || Ok(families::remark_5_4_check().to_string())),
    ]
}

fn oracles(opts: &Options) -> Vec<CheckResult> {
    let mut corpus = Corpus::new(opts.seed ^ 10);
    let limit = opts.max_crossings.min(16);
    let diagrams: Vec<LinkDiagram> = (0..60).map(|_| corpus.diagram(limit)).collect();
    let cases: Vec<_> = diagrams
        .par_iter()
        .enumerate()
        .map(|(i, d)| {
            let r = kauffman_bracket_statesum_limit(d, opts.max_crossings)
                .map_err(err)
                .map(|s| (s.to_string(), kauffman_bracket(d).to_string()));
            (format!("diagram {i} ({} crossings)", d.num_crossings()), r)
        })
        .collect();
    let tangles: Vec<TExpr> = (0..100).map(|_| corpus.texpr(8)).collect();
    let solve: Vec<_> = tangles
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let t = e.build();
            let r = t.bracket_vector().map_err(err).and_then(|br| {
                let solved = t.bracket_vector_solved().ok_or("closure system has no exact solution")?;
                Ok((br.to_string(), solved.to_string()))
            });
            (format!("#{i} {e}"), r)
        })
        .collect();
    vec![batch("memoized skein vs state sum, 60 diagrams", cases), batch("bracket vector skein vs closure solve, 100 tangles", solve)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let r = RunReport::new(vec![
            check("a", 1, || Ok("1".into())),
            check("b", 2, || Ok("3".into())),
        ]);
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1 });
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn criteria_are_numbered_in_order() {
        let ids: Vec<u8> = criteria().iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=10).collect::<Vec<_>>());
    }
}
