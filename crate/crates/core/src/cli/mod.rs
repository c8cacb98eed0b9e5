//! Command-line front end.

mod figures;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::bounds;
use crate::engine::{self, Engine};
use crate::error::{Error, Result};
use crate::exact::{directed_decimal, ExactCount};
use crate::graphs::{self, LabeledGraph};
use crate::kunz::CountQuery;
use crate::refdata::ReferenceData;
use crate::stats::{self, LimitConstant, Parity};

pub use figures::{emit_figure, Figure, FigureParams};

#[derive(Parser, Debug)]
#[command(
    name = "kunzlab",
    version,
    about = "Numerical semigroups by Frobenius number"
)]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory holding table1.csv and table2.csv.
    #[arg(long, global = true)]
    pub ref_data: Option<PathBuf>,
    /// Print elapsed time and worker count to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Default)]
pub struct QueryArgs {
    /// Frobenius number.
    #[arg(long)]
    pub f: Option<u64>,
    /// Multiplicity.
    #[arg(long)]
    pub m: Option<usize>,
    /// Word length, m − 1.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Exact depth.
    #[arg(long)]
    pub depth: Option<u32>,
    #[arg(long)]
    pub depth_max: Option<u32>,
    /// Only words whose depth is attained at the last position.
    #[arg(long)]
    pub stressed: bool,
    /// Maximal embedding dimension only.
    #[arg(long)]
    pub med: bool,
    /// Require this integer to lie in the semigroup.
    #[arg(long, value_name = "N")]
    pub contains: Option<u64>,
}

impl QueryArgs {
    pub fn to_query(&self) -> Result<CountQuery> {
        let mut q = CountQuery::new();
        if let Some(f) = self.f {
            q = q.frobenius(f);
        }
        match (self.m, self.ell) {
            (Some(m), Some(ell)) if m != ell + 1 => {
                return Err(Error::InvalidQuery(format!(
                    "--m {m} conflicts with --ell {ell}"
                )))
            }
            (Some(0), _) => return Err(Error::InvalidQuery("--m must be >= 1".into())),
            (Some(m), _) => q = q.multiplicity(m),
            (None, Some(ell)) => q = q.length(ell),
            (None, None) => {}
        }
        if let Some(d) = self.depth {
            q = q.depth(d);
        }
        if let Some(d) = self.depth_max {
            q = q.depth_max(d);
        }
        if self.stressed {
            q = q.stressed();
        }
        if self.med {
            q = q.med();
        }
        if let Some(n) = self.contains {
            q = q.contains(n);
        }
        q.validate()?;
        Ok(q)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count the semigroups matching a query.
    Count(QueryArgs),
    /// List matching Kunz words in lexicographic order.
    Enumerate {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Reference tables, optionally recomputed.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        /// Largest length for `stressed3`.
        #[arg(long, default_value_t = 24)]
        ell_max: usize,
        /// Restrict `fm` to one multiplicity.
        #[arg(long)]
        m: Option<usize>,
        /// Recompute every row instead of reading reference data.
        #[arg(long)]
        compute: bool,
    },
    /// Exact brackets for the limiting constants.
    Constants {
        #[arg(long, value_enum)]
        which: ConstantKind,
        #[arg(long, default_value_t = 56)]
        j_cut: usize,
        #[arg(long, default_value_t = 8)]
        k_cut: usize,
        #[arg(long, default_value_t = 4)]
        places: u32,
    },
    /// Exact distributions at a fixed Frobenius number.
    Dist {
        #[arg(value_enum)]
        which: DistKind,
        #[arg(long)]
        f: u64,
    },
    /// Homomorphism counts into the threshold graphs `H_q`.
    Hom {
        #[arg(long)]
        q: u32,
        /// Count for `K_{d,d}`.
        #[arg(long)]
        d: Option<u32>,
        /// Edge-list file for the source graph.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Regularize the source graph to this degree first.
        #[arg(long, value_name = "D")]
        regularize: Option<usize>,
    },
    /// Explicit upper bounds against exact counts.
    Bounds {
        #[arg(value_enum)]
        which: BoundKind,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        f: Option<u64>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long, default_value_t = 100)]
        q_max: u32,
    },
    /// CSV data for the figures.
    Plot {
        #[arg(value_enum)]
        which: Figure,
        #[arg(long, default_value_t = 0.0)]
        x_min: f64,
        #[arg(long, default_value_t = 6.0)]
        x_max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// Multiplicities for `fm-scatter`.
        #[arg(long, value_delimiter = ',')]
        m: Vec<usize>,
    },
    /// Run self-checks; exits 1 on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Stressed3,
    Fm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstantKind {
    C0,
    C1,
    Mu0,
    Mu1,
    Gamma0,
    Gamma1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DistKind {
    Mult,
    Genus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// Naive and Backelin bounds on stressed depth-3 words.
    Stressed3,
    /// `q^ℓ` against words of length `ℓ` and depth at most `q`.
    Words,
    /// `f q^{f/(q−1)}` against depth-`q` semigroups with Frobenius `f`.
    Frobenius,
    /// Tail-heavy bound against the exact tail-heavy count.
    Tail,
    /// Monotonicity of `c_q^{1/(q+r)}`.
    Monotone,
}

/// Result of one command.
enum Output {
    Json(Value),
    Csv(Vec<String>, Vec<Vec<String>>),
}

struct Ctx {
    engine: Engine,
    format: Format,
    ref_dir: Option<PathBuf>,
}

impl Ctx {
    fn data(&self) -> Result<ReferenceData> {
        ReferenceData::resolve(self.ref_dir.as_deref())
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 on success, 1 on a failed verification, 2 on a
/// usage or input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let engine = match cli.threads {
        Some(0) => {
            let _ = writeln!(err, "error: --threads must be >= 1");
            return 2;
        }
        Some(n) => Engine::with_threads(n),
        None => Engine::new(),
    };
    let ctx = Ctx {
        engine,
        format: cli.format,
        ref_dir: cli.ref_data.clone(),
    };
    let start = Instant::now();
    let result = dispatch(&ctx, &cli.command);
    if cli.timing {
        let _ = writeln!(
            err,
            "elapsed_ms={} threads={}",
            start.elapsed().as_millis(),
            ctx.engine.threads()
        );
    }
    match result {
        Ok((output, ok)) => {
            if let Err(e) = write_output(out, output) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn write_output(out: &mut dyn Write, output: Output) -> std::io::Result<()> {
    match output {
        Output::Json(v) => {
            let text = serde_json::to_string_pretty(&v).expect("values serialize");
            writeln!(out, "{text}")
        }
        Output::Csv(header, rows) => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for r in rows {
                w.write_record(&r)?;
            }
            w.flush()
        }
    }
}

fn count_json(c: &ExactCount) -> Value {
    serde_json::to_value(c).expect("counts serialize")
}

fn query_json(q: &CountQuery) -> Value {
    serde_json::to_value(q).expect("queries serialize")
}

fn rational_json(prefix: &str, r: &BigRational, obj: &mut serde_json::Map<String, Value>) {
    obj.insert(format!("{prefix}_num"), json!(r.numer().to_string()));
    obj.insert(format!("{prefix}_den"), json!(r.denom().to_string()));
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("missing required flag {flag}")))
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Result<(Output, bool)> {
    let out = match cmd {
        Command::Count(a) => {
            let q = a.to_query()?;
            let c = ctx.engine.count(&q)?;
            match ctx.format {
                Format::Json => {
                    Output::Json(json!({ "query": query_json(&q), "count": count_json(&c) }))
                }
                Format::Csv => Output::Csv(vec!["count".into()], vec![vec![c.to_string()]]),
            }
        }
        Command::Enumerate { query, limit } => {
            let q = query.to_query()?;
            let words = ctx.engine.enumerate(&q)?;
            let words: Vec<String> = match limit {
                Some(n) => words.take(*n).map(|w| w.to_string()).collect(),
                None => words.map(|w| w.to_string()).collect(),
            };
            match ctx.format {
                Format::Json => Output::Json(json!({ "query": query_json(&q), "words": words })),
                Format::Csv => Output::Csv(
                    vec!["word".into()],
                    words.into_iter().map(|w| vec![w]).collect(),
                ),
            }
        }
        Command::Table {
            which,
            ell_max,
            m,
            compute,
        } => table(ctx, *which, *ell_max, *m, *compute)?,
        Command::Constants {
            which,
            j_cut,
            k_cut,
            places,
        } => constants(ctx, *which, *j_cut, *k_cut, *places)?,
        Command::Dist { which, f } => dist(ctx, *which, *f)?,
        Command::Hom {
            q,
            d,
            graph,
            regularize,
        } => hom(*q, *d, graph.as_deref(), *regularize)?,
        Command::Bounds {
            which,
            ell,
            f,
            q,
            t,
            q_max,
        } => bounds_cmd(ctx, *which, *ell, *f, *q, *t, *q_max)?,
        Command::Plot {
            which,
            x_min,
            x_max,
            step,
            m,
        } => {
            let params = FigureParams {
                x_min: *x_min,
                x_max: *x_max,
                step: *step,
                ms: if m.is_empty() {
                    vec![8, 10, 12, 15]
                } else {
                    m.clone()
                },
            };
            let (header, rows) = emit_figure(*which, &params, &ctx.data()?)?;
            Output::Csv(header.into_iter().map(String::from).collect(), rows)
        }
        Command::Verify { suite } => {
            let report = verify::run_suite(*suite, &ctx.engine, &ctx.data()?)?;
            let ok = report.iter().all(|c| c.pass);
            let out = match ctx.format {
                Format::Json => Output::Json(json!({ "pass": ok, "checks": report })),
                Format::Csv => Output::Csv(
                    vec!["check".into(), "pass".into(), "detail".into()],
                    report
                        .iter()
                        .map(|c| vec![c.name.clone(), c.pass.to_string(), c.detail.clone()])
                        .collect(),
                ),
            };
            return Ok((out, ok));
        }
    };
    Ok((out, true))
}

fn table(
    ctx: &Ctx,
    which: TableKind,
    ell_max: usize,
    m: Option<usize>,
    compute: bool,
) -> Result<Output> {
    let data = ctx.data()?;
    let rows: Vec<Vec<String>> = match which {
        TableKind::Stressed3 => {
            let top = if compute {
                ell_max
            } else {
                ell_max.min(data.max_stressed3_len())
            };
            if compute && top > 40 {
                return Err(Error::OutOfRange(format!(
                    "--ell-max {top} is too large to compute"
                )));
            }
            (1..=top)
                .map(|ell| {
                    let c = if compute {
                        engine::count_stressed3(ell)
                    } else {
                        data.stressed3(ell)
                            .cloned()
                            .unwrap_or_else(ExactCount::zero)
                    };
                    vec![ell.to_string(), c.to_string()]
                })
                .collect()
        }
        TableKind::Fm => {
            let mut rows = Vec::new();
            for (f, mm, c) in data.fm_rows() {
                if m.is_some_and(|m| m != mm) {
                    continue;
                }
                let c = if compute {
                    ctx.engine
                        .count(&CountQuery::new().frobenius(f).multiplicity(mm))?
                } else {
                    c.clone()
                };
                rows.push(vec![f.to_string(), mm.to_string(), c.to_string()]);
            }
            rows
        }
    };
    let header: Vec<String> = match which {
        TableKind::Stressed3 => vec!["ell".into(), "count".into()],
        TableKind::Fm => vec!["f".into(), "m".into(), "count".into()],
    };
    Ok(match ctx.format {
        Format::Csv => Output::Csv(header, rows),
        Format::Json => Output::Json(Value::Array(
            rows.into_iter()
                .map(|r| {
                    Value::Object(
                        header
                            .iter()
                            .cloned()
                            .zip(r.into_iter().map(Value::String))
                            .collect(),
                    )
                })
                .collect(),
        )),
    })
}

fn constants(
    ctx: &Ctx,
    which: ConstantKind,
    j_cut: usize,
    k_cut: usize,
    places: u32,
) -> Result<Output> {
    let data = ctx.data()?;
    let (name, iv) = match which {
        ConstantKind::C0 => (
            "c0",
            stats::backelin_bracket(Parity::Even, j_cut, &data)?.interval(),
        ),
        ConstantKind::C1 => (
            "c1/sqrt2",
            stats::backelin_bracket(Parity::Odd, j_cut, &data)?.interval(),
        ),
        _ => {
            let kind = match which {
                ConstantKind::Mu0 => LimitConstant::Mu0,
                ConstantKind::Mu1 => LimitConstant::Mu1,
                ConstantKind::Gamma0 => LimitConstant::Gamma0,
                _ => LimitConstant::Gamma1,
            };
            let b = stats::backelin_bracket(kind.parity(), j_cut, &data)?;
            let name = match kind {
                LimitConstant::Mu0 => "mu0",
                LimitConstant::Mu1 => "mu1",
                LimitConstant::Gamma0 => "gamma0",
                LimitConstant::Gamma1 => "gamma1",
            };
            (name, stats::mu_gamma_partial(kind, k_cut, &b, &data)?)
        }
    };
    let lower = directed_decimal(&iv.lo, places, false);
    let upper = directed_decimal(&iv.hi, places, true);
    Ok(match ctx.format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("quantity".into(), json!(name));
            rational_json("lower", &iv.lo, &mut obj);
            rational_json("upper", &iv.hi, &mut obj);
            obj.insert("decimal_lower".into(), json!(lower));
            obj.insert("decimal_upper".into(), json!(upper));
            Output::Json(Value::Object(obj))
        }
        Format::Csv => Output::Csv(
            [
                "quantity",
                "lower_num",
                "lower_den",
                "upper_num",
                "upper_den",
                "decimal_lower",
                "decimal_upper",
            ]
            .map(String::from)
            .to_vec(),
            vec![vec![
                name.to_string(),
                iv.lo.numer().to_string(),
                iv.lo.denom().to_string(),
                iv.hi.numer().to_string(),
                iv.hi.denom().to_string(),
                lower,
                upper,
            ]],
        ),
    })
}

fn dist(ctx: &Ctx, which: DistKind, f: u64) -> Result<Output> {
    if f < 3 {
        return Err(Error::InvalidParameter(format!(
            "--f must be >= 3, got {f}"
        )));
    }
    let d = match which {
        DistKind::Mult => stats::mult_distribution(&ctx.engine, f)?,
        DistKind::Genus => stats::genus_stats(&ctx.engine, f)?.distribution,
    };
    let rows: Vec<Vec<String>> = d
        .probabilities()
        .map(|(k, p)| {
            vec![
                k.to_string(),
                d.count(k).to_string(),
                p.numer().to_string(),
                p.denom().to_string(),
            ]
        })
        .collect();
    let header = ["key", "count", "probability_num", "probability_den"]
        .map(String::from)
        .to_vec();
    Ok(match ctx.format {
        Format::Csv => Output::Csv(header, rows),
        Format::Json => Output::Json(json!({
            "f": f,
            "total": count_json(d.total()),
            "rows": rows.into_iter().map(|r| json!({
                "key": r[0].parse::<i64>().expect("integer key"),
                "count": r[1],
                "probability_num": r[2],
                "probability_den": r[3],
            })).collect::<Vec<_>>(),
        })),
    })
}

fn hom(
    q: u32,
    d: Option<u32>,
    graph: Option<&std::path::Path>,
    reg: Option<usize>,
) -> Result<Output> {
    let h = graphs::h_q(q);
    match (d, graph) {
        (Some(d), None) => {
            let count = graphs::hom_kdd(d, q);
            let src = graphs::complete_bipartite(d as usize, d as usize);
            Ok(Output::Json(json!({
                "d": d,
                "q": q,
                "count": count_json(&count),
                "dynamic_count": count_json(&graphs::hom_count_dp(&src, &h)),
                "within_bound": graphs::hom_kdd_within_bound(d, q),
            })))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            let g: LabeledGraph = text.parse()?;
            let before = graphs::hom_count_dp(&g, &h);
            let mut obj =
                json!({ "q": q, "vertices": g.vertex_count(), "count": count_json(&before) });
            if let Some(dd) = reg {
                let r = graphs::regularize(&g, dd)?;
                let after = graphs::hom_count_dp(&r.graph, &h);
                obj["regularized"] = json!({
                    "d": dd,
                    "vertices": r.graph.vertex_count(),
                    "count": count_json(&after),
                    "regular": r.graph.is_regular(dd),
                    "within_vertex_bound": r.within_vertex_bound(dd, g.vertex_count()),
                    "edges": r.graph.to_edge_list(),
                });
            }
            Ok(Output::Json(obj))
        }
        _ => Err(Error::InvalidParameter(
            "hom needs exactly one of --d or --graph".into(),
        )),
    }
}

#[allow(clippy::too_many_arguments)]
fn bounds_cmd(
    ctx: &Ctx,
    which: BoundKind,
    ell: Option<u64>,
    f: Option<u64>,
    q: Option<u32>,
    t: Option<u64>,
    q_max: u32,
) -> Result<Output> {
    let v = match which {
        BoundKind::Stressed3 => {
            let ell = need(ell, "--ell")?;
            let b = bounds::stressed3_upper_bounds(ell)?;
            let data = ctx.data()?;
            let exact = match data.stressed3(ell as usize) {
                Some(c) => c.clone(),
                None if ell <= 30 => engine::count_stressed3(ell as usize),
                None => return Err(Error::OutOfRange(format!("no count for ell = {ell}"))),
            };
            let er = exact.to_rational();
            json!({
                "ell": ell,
                "count": count_json(&exact),
                "naive": b.naive.to_string(),
                "backelin_num": b.backelin.numer().to_string(),
                "backelin_den": b.backelin.denom().to_string(),
                "naive_dominates": BigRational::from_integer(b.naive.clone().into()) >= er,
                "backelin_dominates": b.backelin >= er,
            })
        }
        BoundKind::Words => {
            let (ell, q) = (need(ell, "--ell")?, need(q, "--q")?);
            let c = ctx
                .engine
                .count(&CountQuery::new().length(ell as usize).depth_max(q))?;
            let b = bounds::words_of_length_bound(ell, q);
            json!({ "ell": ell, "q": q, "count": count_json(&c), "bound": b.to_string(), "dominates": &b >= c.value() })
        }
        BoundKind::Frobenius => {
            let (f, q) = (need(f, "--f")?, need(q, "--q")?);
            let c = ctx.engine.count(&CountQuery::new().frobenius(f).depth(q))?;
            let b = bounds::frobenius_depth_bound(f, q)?;
            json!({ "f": f, "q": q, "count": count_json(&c), "bound": b.to_f64(), "dominates": b.bounds_above(c.value()) })
        }
        BoundKind::Tail => {
            let (ell, t, q) = (need(ell, "--ell")?, need(t, "--t")?, need(q, "--q")?);
            let spec = engine::TailHeavySpec::new(ell as usize, t as usize, q)?;
            let c = engine::tail_heavy_count(&spec)?;
            let b = bounds::tail_heavy_bound(ell, t, q)?;
            json!({
                "ell": ell, "t": t, "q": q, "n_min": spec.n_min,
                "count": count_json(&c),
                "bound_lower": b.lower.to_f64(),
                "bound_upper": b.upper.to_f64(),
                "dominates": b.dominates(c.value()),
            })
        }
        BoundKind::Monotone => {
            let grid = [(0, 1), (1, 2), (1, 1)].map(|(a, b)| num_rational::Ratio::new(a, b));
            let r = bounds::check_c_monotone(q_max, &grid)?;
            json!({ "q_max": q_max, "report": r, "ok": r.ok() })
        }
    };
    Ok(Output::Json(v))
}
