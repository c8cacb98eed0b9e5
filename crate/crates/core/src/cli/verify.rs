//! Self-checks behind `kunzlab verify`.

use clap::ValueEnum;
use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::engine::{self, Engine, TailHeavySpec};
use crate::error::Result;
use crate::exact::{directed_decimal, int, ratio, rational_to_f64};
use crate::graphs::{self, LabeledGraph};
use crate::kunz::CountQuery;
use crate::refdata::ReferenceData;
use crate::stats::{self, LimitConstant, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Closed,
    Med,
    Graphs,
    Bounds,
    Family,
    Stats,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// First mismatch message, or a summary of how many cases agreed.
fn tally(name: &str, cases: usize, failures: Vec<String>) -> Check {
    match failures.first() {
        None => Check::new(name, true, format!("{cases} cases")),
        Some(f) => Check::new(
            name,
            false,
            format!("{} of {cases} failed, first: {f}", failures.len()),
        ),
    }
}

pub fn run_suite(suite: Suite, engine: &Engine, data: &ReferenceData) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Tables => tables(engine, data)?,
        Suite::Closed => closed(engine)?,
        Suite::Med => med()?,
        Suite::Graphs => graph_suite(),
        Suite::Bounds => bound_suite(engine, data)?,
        Suite::Family => family(),
        Suite::Stats => stat_suite(engine, data)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Tables,
                Suite::Closed,
                Suite::Med,
                Suite::Graphs,
                Suite::Bounds,
                Suite::Family,
                Suite::Stats,
            ] {
                all.extend(run_suite(s, engine, data)?);
            }
            all
        }
    })
}

fn tables(engine: &Engine, data: &ReferenceData) -> Result<Vec<Check>> {
    let fails: Vec<String> = (1..=24usize)
        .into_par_iter()
        .filter_map(|ell| {
            let c = engine::count_stressed3(ell);
            (Some(&c) != data.stressed3(ell)).then(|| format!("ell = {ell}: computed {c}"))
        })
        .collect();
    let t1 = tally("table1 stressed depth-3 counts, ell <= 24", 24, fails);
    // f = m − 1 holds only the depth-1 semigroup {0, m, m + 1, ...}; the
    // shipped table lists those cells as 0, so they are reported apart
    let (mut main, mut edge) = (Vec::new(), Vec::new());
    let (mut n_main, mut n_edge) = (0, 0);
    for (f, m, expect) in data.fm_rows() {
        let c = engine.count(&CountQuery::new().frobenius(f).multiplicity(m))?;
        let edge_cell = f + 1 == m as u64;
        if edge_cell {
            n_edge += 1;
        } else {
            n_main += 1;
        }
        if &c != expect {
            let msg = format!("f = {f}, m = {m}: computed {c}, table {expect}");
            if edge_cell {
                edge.push(msg)
            } else {
                main.push(msg)
            }
        }
    }
    Ok(vec![
        t1,
        tally("table2 (f, m) counts with m <= f", n_main, main),
        tally("table2 (f, m) counts at f = m - 1", n_edge, edge),
    ])
}

fn closed(engine: &Engine) -> Result<Vec<Check>> {
    let mut fails = Vec::new();
    let mut n = 0;
    for f in 1..=30u64 {
        for ell in 1..=f as usize {
            for (q, closed) in [
                (2, engine::closed_k2(f, ell as u64)),
                (3, engine::closed_k3(f, ell as u64)),
            ] {
                n += 1;
                let c = engine.count(&CountQuery::new().frobenius(f).length(ell).depth(q))?;
                if c != closed {
                    fails.push(format!(
                        "f = {f}, ell = {ell}, q = {q}: closed {closed}, enumerated {c}"
                    ));
                }
            }
        }
    }
    Ok(vec![tally(
        "closed forms for depth 2 and 3, f <= 30",
        n,
        fails,
    )])
}

fn med() -> Result<Vec<Check>> {
    let mut lift = Vec::new();
    let mut sum = Vec::new();
    for f in 1..=25u64 {
        let direct = engine::med_count_direct(f, None)?;
        let lifted = engine::med_count_via_lift(f, None)?;
        if direct != lifted {
            lift.push(format!("f = {f}: direct {direct}, lifted {lifted}"));
        }
        let m2 = engine::med_count_direct(f, Some(2))?;
        let s = engine::med2_via_frobenius_sum(f)?;
        if m2 != s {
            sum.push(format!("f = {f}: direct {m2}, sum {s}"));
        }
    }
    let mut rep = Vec::new();
    for n in 1..=12u64 {
        let a = engine::med_count_direct(2 * n - 1, Some(2))?;
        let b = engine::med_count_direct(2 * n, Some(2))?;
        if a != b {
            rep.push(format!("n = {n}: {a} vs {b}"));
        }
    }
    Ok(vec![
        tally("MED count by lift, f <= 25", 25, lift),
        tally("depth-2 MED as a Frobenius sum, f <= 25", 25, sum),
        tally("depth-2 MED repeats in pairs, n <= 12", 12, rep),
    ])
}

/// Every loop-free graph on `n` vertices, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        LabeledGraph::from_edges(n, &edges).expect("valid edges")
    })
}

/// Regularity, vertex bound and hom monotonicity for one input.
pub fn regularize_ok(g: &LabeledGraph, d: usize, qs: &[u32]) -> std::result::Result<(), String> {
    let r = graphs::regularize(g, d).map_err(|e| e.to_string())?;
    if !r.graph.is_regular(d) {
        return Err(format!("not {d}-regular:\n{g}"));
    }
    if !r.within_vertex_bound(d, g.vertex_count()) {
        return Err(format!(
            "{} vertices exceed the bound for d = {d}:\n{g}",
            r.graph.vertex_count()
        ));
    }
    for &q in qs {
        let h = graphs::h_q(q);
        if graphs::hom_count_dp(g, &h) > graphs::hom_count_dp(&r.graph, &h) {
            return Err(format!("hom into H_{q} decreased for d = {d}:\n{g}"));
        }
    }
    Ok(())
}

fn graph_suite() -> Vec<Check> {
    let mut fails = Vec::new();
    let mut n = 0;
    for d in 1..=3u32 {
        for q in 1..=5u32 {
            n += 1;
            let k = graphs::complete_bipartite(d as usize, d as usize);
            let oracle = graphs::hom_count(&k, &graphs::h_q(q)).expect("small graph");
            let closed = graphs::hom_kdd(d, q);
            if oracle != closed {
                fails.push(format!(
                    "d = {d}, q = {q}: closed {closed}, oracle {oracle}"
                ));
            }
        }
    }
    let kdd = tally("hom(K_dd, H_q) closed form, d <= 3, q <= 5", n, fails);

    let mut fails = Vec::new();
    for d in 1..=8 {
        for q in 1..=10 {
            if !graphs::hom_kdd_within_bound(d, q) {
                fails.push(format!("d = {d}, q = {q}"));
            }
        }
    }
    let dom = tally("hom(K_dd, H_q) <= 2q c_q^(2d), d <= 8, q <= 10", 80, fails);

    let inputs: Vec<(LabeledGraph, usize)> = (1..=5)
        .flat_map(all_graphs)
        .flat_map(|g| {
            let lo = g.max_degree().max(1);
            (lo..=4).map(move |d| (g.clone(), d))
        })
        .collect();
    let fails: Vec<String> = inputs
        .par_iter()
        .filter_map(|(g, d)| regularize_ok(g, *d, &[2, 3, 4]).err())
        .collect();
    let reg = tally(
        "regularize on every graph with |V| <= 5, d <= 4",
        inputs.len(),
        fails,
    );

    let cases: Vec<(LabeledGraph, usize)> = (1..=3)
        .flat_map(|d| {
            (2..=8).flat_map(move |v| {
                graphs::rooted_regular_graphs(v, d)
                    .into_iter()
                    .map(move |g| (g, d))
            })
        })
        .collect();
    let fails: Vec<String> = cases
        .par_iter()
        .flat_map_iter(|(g, d)| {
            (1..=5u32)
                .filter(|&q| !graphs::zhao_holds(g, &graphs::h_q(q), *d))
                .map(move |q| format!("d = {d}, q = {q}:\n{g}"))
        })
        .collect();
    let zhao = tally(
        "Zhao inequality, |V| <= 8, d <= 3, q <= 5",
        cases.len() * 5,
        fails,
    );
    vec![kdd, dom, reg, zhao]
}

fn bound_suite(engine: &Engine, data: &ReferenceData) -> Result<Vec<Check>> {
    let mut fails = Vec::new();
    for (ell, c) in data.stressed3_rows() {
        let b = bounds::stressed3_upper_bounds(ell as u64)?;
        let cr = c.to_rational();
        if BigRational::from_integer(b.naive.clone().into()) < cr || b.backelin < cr {
            fails.push(format!("ell = {ell}"));
        }
    }
    let st = tally(
        "naive and Backelin bounds over table1",
        data.stressed3_rows().count(),
        fails,
    );

    let mut fails = Vec::new();
    for ell in 1..=10u64 {
        for q in 1..=4 {
            let c = engine.count(&CountQuery::new().length(ell as usize).depth_max(q))?;
            if c.value() > &bounds::words_of_length_bound(ell, q) {
                fails.push(format!("ell = {ell}, q = {q}"));
            }
        }
    }
    let words = tally(
        "q^ell over words of length ell, ell <= 10, q <= 4",
        40,
        fails,
    );

    let mut fails = Vec::new();
    let mut n = 0;
    for f in 1..=25u64 {
        for q in 2..=(f as u32).div_ceil(2).max(2) {
            n += 1;
            let c = engine.count(&CountQuery::new().frobenius(f).depth(q))?;
            if !bounds::frobenius_depth_bound(f, q)?.bounds_above(c.value()) {
                fails.push(format!("f = {f}, q = {q}"));
            }
        }
    }
    let frob = tally("f q^(f/(q-1)) over depth-q counts, f <= 25", n, fails);

    let grid: Vec<(u64, u64, u32)> = (1..=14u64)
        .flat_map(|ell| (1..=ell).flat_map(move |t| (2..=4u32).map(move |q| (ell, t, q))))
        .collect();
    let fails: Vec<String> = grid
        .par_iter()
        .filter_map(|&(ell, t, q)| {
            let spec = TailHeavySpec::new(ell as usize, t as usize, q).ok()?;
            let c = engine::tail_heavy_count(&spec).ok()?;
            let b = bounds::tail_heavy_bound(ell, t, q).ok()?;
            (!b.dominates(c.value())).then(|| format!("ell = {ell}, t = {t}, q = {q}: {c}"))
        })
        .collect();
    let tail = tally("tail-heavy bound, ell <= 14, q <= 4", grid.len(), fails);

    let r = bounds::check_c_monotone(
        2000,
        &[Ratio::new(0, 1), Ratio::new(1, 2), Ratio::new(1, 1)],
    )?;
    let mono = Check::new(
        "c_q^(1/(q+r)) decreasing, q <= 2000",
        r.ok(),
        r.first_violation.clone().unwrap_or_else(|| {
            format!(
                "{} sequence and {} interpolation checks",
                r.sequence_checks, r.interpolation_checks
            )
        }),
    );
    Ok(vec![st, words, frob, tail, mono])
}

fn family() -> Vec<Check> {
    let grid: Vec<(u32, usize, usize)> = (3..=6u32)
        .flat_map(|q| (1..=12usize).flat_map(move |ell| (1..=ell).map(move |j| (q, ell, j))))
        .collect();
    let fails: Vec<String> = grid
        .par_iter()
        .filter_map(|&(q, ell, j)| {
            let fam = engine::lower_bound_family(q, ell, j).ok()?;
            let f = fam.frobenius() as i64;
            let mut n = 0u64;
            for w in fam.words() {
                n += 1;
                if !w.is_kunz() || w.depth() != q || w.frobenius() != f {
                    return Some(format!("q = {q}, ell = {ell}, j = {j}: word {w}"));
                }
            }
            (fam.formula_count() != n).then(|| {
                format!(
                    "q = {q}, ell = {ell}, j = {j}: {n} words, formula {}",
                    fam.formula_count()
                )
            })
        })
        .collect();
    vec![tally(
        "lower-bound family, q <= 6, ell <= 12",
        grid.len(),
        fails,
    )]
}

fn stat_suite(engine: &Engine, data: &ReferenceData) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let c0 = stats::backelin_bracket(Parity::Even, 56, data)?;
    let c1 = stats::backelin_bracket(Parity::Odd, 56, data)?;
    let digits = [
        directed_decimal(&c0.lower, 4, false),
        directed_decimal(&c0.upper, 4, true),
        directed_decimal(&c1.lower, 4, false),
        directed_decimal(&c1.upper, 4, true),
    ];
    out.push(Check::new(
        "C_0 and C_1/sqrt2 brackets",
        digits == ["1.2606", "1.3919", "1.2755", "1.4068"],
        digits.join(" "),
    ));

    // (a) stressed growth toward √6
    let roots: Vec<f64> = (20..=28)
        .map(|ell| {
            data.stressed3(ell)
                .map_or(0.0, |c| c.to_f64().powf(1.0 / ell as f64))
        })
        .collect();
    let near = roots.iter().all(|r| (r - 6f64.sqrt()).abs() <= 0.15);
    let rising = roots.windows(3).all(|w| w[0] < w[2]);
    out.push(Check::new(
        "stressed count^(1/ell) near sqrt6 and rising by parity, 20 <= ell <= 28",
        near && rising,
        format!("{:.4} .. {:.4}", roots[0], roots[roots.len() - 1]),
    ));

    // (b) depth ≥ 4 mass
    let mut masses = Vec::new();
    for f in 20..=40u64 {
        let all = engine.count(&CountQuery::new().frobenius(f))?;
        let low = engine.count(&CountQuery::new().frobenius(f).depth_max(3))?;
        let m = (all.to_rational() - low.to_rational()) / all.to_rational();
        masses.push(rational_to_f64(&m));
    }
    let small = masses.iter().all(|&m| m < 0.15);
    let shrinking = masses.windows(3).all(|w| w[2] < w[0]);
    out.push(Check::new(
        "depth >= 4 mass below 0.15 and shrinking by parity, 20 <= f <= 40",
        small && shrinking,
        format!("{:.4} at f = 20, {:.4} at f = 40", masses[0], masses[20]),
    ));

    // (c) skewness and (d) limiting means
    let g20 = stats::genus_stats(engine, 20)?;
    let g30 = stats::genus_stats(engine, 30)?;
    let g40 = stats::genus_stats(engine, 40)?;
    let sk = [g20.skewness(), g30.skewness(), g40.skewness()];
    out.push(Check::new(
        "genus skewness shrinking over f = 20, 30, 40",
        sk[0].abs() > sk[1].abs() && sk[1].abs() > sk[2].abs(),
        format!("{:.4} {:.4} {:.4}", sk[0], sk[1], sk[2]),
    ));
    let mu0 = stats::mu_gamma_partial(LimitConstant::Mu0, 8, &c0, data)?;
    let m40 = stats::empirical_mean(engine, LimitConstant::Mu0, 40)?;
    out.push(Check::new(
        "m - f/2 at f = 40 inside the mu_0 enclosure (+-0.05)",
        stats::within_tolerance(&mu0, &m40, &ratio(1, 20)),
        format!("{:.4} vs {mu0}", rational_to_f64(&m40)),
    ));
    let ga0 = stats::mu_gamma_partial(LimitConstant::Gamma0, 8, &c0, data)?;
    out.push(Check::new(
        "g - 3f/4 at f = 40 inside the gamma_0 enclosure (+-0.2)",
        stats::within_tolerance(&ga0, &g40.mean_deviation, &ratio(1, 5)),
        format!("{:.4} vs {ga0}", rational_to_f64(&g40.mean_deviation)),
    ));

    let mut fails = Vec::new();
    for f in (4..=40u64).step_by(2) {
        let d = stats::mult_distribution(engine, f)?;
        for k in (1 - f as i64 / 2)..0 {
            let expect = BigUint::from(1u32) << (f as i64 / 2 + k - 1) as u64;
            if d.count(2 * k).value() != &expect {
                fails.push(format!("f = {f}, k = {k}"));
            }
        }
    }
    out.push(tally("depth-2 masses 2^(f/2+k-1), even f <= 40", 19, fails));

    let mut fails = Vec::new();
    for j in 1..=18usize {
        if stats::stressed3_avg_genus(j)? > int(3 * j as i64) {
            fails.push(format!("j = {j}"));
        }
    }
    out.push(tally(
        "average stressed genus G_j <= 3j, j <= 18",
        18,
        fails,
    ));
    Ok(out)
}
