use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qalt::braid3::{baldwin_is_qa, birman_jones, crossing_upper_bound, det_formula, B3NormalForm};
use qalt::catalog::{load_catalog, render_json, render_table, verify_table, VerifyOptions};
use qalt::diagram::PdDiagram;
use qalt::jones::{
    determinant_bounded, jones_polynomial_bounded, obstruction_check_with, verdict_for, OrientedDiagram,
    JONES_MAX_CROSSINGS,
};
use qalt::kanenobu::{kanenobu_degree, kanenobu_q, qa_candidate_scan, KANENOBU_DET};
use qalt::montesinos::{
    montesinos_crossing_number, montesinos_det, pretzel_family_report, standard_form_check, MontesinosPresentation,
    PretzelFamily,
};
use qalt::qpoly::{QEngine, Q_MAX_CROSSINGS};

/// Exact link invariants and the `deg Q < det` obstruction.
#[derive(Parser)]
#[command(name = "qalt", version)]
struct Cli {
    /// Largest diagram (after simplification) the Q recursion will accept.
    #[arg(long, global = true, default_value_t = Q_MAX_CROSSINGS)]
    max_crossings: usize,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Q-polynomial of a PD code.
    Q(PdArg),
    /// Jones polynomial, in the canonical orientation.
    Jones(PdArg),
    /// Determinant.
    Det(PdArg),
    /// deg Q, det and the resulting verdict.
    Check(PdArg),
    /// Recompute a catalog of fixtures and compare with its expectations.
    Table {
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Kanenobu knots K(p, q).
    #[command(allow_negative_numbers = true)]
    Kanenobu {
        /// List every (p, q) with deg Q < 25.
        #[arg(long, conflicts_with_all = ["p", "q"])]
        scan: bool,
        #[arg(short, required_unless_present = "scan")]
        p: Option<i64>,
        #[arg(short, required_unless_present = "scan")]
        q: Option<i64>,
    },
    /// Closed 3-braid normal forms.
    #[command(allow_negative_numbers = true)]
    Braid3 {
        #[arg(long)]
        family: u8,
        #[arg(long)]
        n: i64,
        /// Family 1 exponents, e.g. "2,1;3,1".
        #[arg(long)]
        pairs: Option<String>,
        /// Family 2 and 3 exponent.
        #[arg(long)]
        m: Option<i64>,
        /// Also build the closure and run the diagram pipeline on it.
        #[arg(long)]
        pipeline: bool,
    },
    /// Montesinos link formulas.
    #[command(allow_negative_numbers = true)]
    Montesinos {
        #[arg(long)]
        e: i64,
        /// Comma-separated α/β.
        #[arg(long)]
        tangles: String,
        #[arg(long = "final")]
        final_tangle: String,
    },
    /// Pretzel families A, B, C.
    Pretzel {
        #[arg(long)]
        family: PretzelFamily,
        #[arg(long)]
        r: i64,
        /// Also build the pretzel diagram and run the pipeline on it.
        #[arg(long)]
        pipeline: bool,
    },
}

#[derive(clap::Args)]
struct PdArg {
    /// PD code, or a file containing one.
    #[arg(long)]
    pd: String,
}

impl PdArg {
    fn load(&self) -> anyhow::Result<PdDiagram> {
        let p = Path::new(&self.pd);
        let text = if p.is_file() {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        } else {
            self.pd.clone()
        };
        Ok(text.trim().parse::<PdDiagram>()?)
    }
}

struct Ctx {
    json: bool,
    max_crossings: usize,
}

impl Ctx {
    fn engine(&self) -> QEngine {
        QEngine::new().with_max_crossings(self.max_crossings)
    }

    fn jones_max(&self) -> usize {
        JONES_MAX_CROSSINGS.max(self.max_crossings)
    }

    /// Prints `value` as JSON, or as `key: value` lines.
    fn emit(&self, value: Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            return;
        }
        match value {
            Value::Object(map) => {
                for (k, v) in map {
                    match v {
                        Value::String(s) => println!("{k}: {s}"),
                        v => println!("{k}: {v}"),
                    }
                }
            }
            v => println!("{v}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { json: cli.json, max_crossings: cli.max_crossings };
    match run(&ctx, &cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let resource = e.downcast_ref::<qalt::Error>().is_some_and(|e| e.is_resource());
            ExitCode::from(if resource { 3 } else { 2 })
        }
    }
}

fn run(ctx: &Ctx, cmd: &Cmd) -> anyhow::Result<u8> {
    match cmd {
        Cmd::Q(pd) => {
            let d = pd.load()?;
            let r = ctx.engine().q_result(&d)?;
            ctx.emit(json!({
                "q": r.q.to_string(),
                "degree": r.q.degree(),
                "low_degree": r.q.low_degree()?,
                "components": r.diagram_components,
            }));
        }
        Cmd::Jones(pd) => {
            let d = pd.load()?;
            let v = jones_polynomial_bounded(&OrientedDiagram::canonical(&d), ctx.jones_max())?;
            let b = v.breadth_t()?;
            ctx.emit(json!({ "jones": v.render_t(), "breadth": b.to_string() }));
        }
        Cmd::Det(pd) => {
            let d = pd.load()?;
            ctx.emit(json!({ "det": determinant_bounded(&d, ctx.jones_max())?.to_string() }));
        }
        Cmd::Check(pd) => {
            let d = pd.load()?;
            let (verdict, ev) = obstruction_check_with(&d, &ctx.engine(), ctx.jones_max())?;
            ctx.emit(json!({
                "verdict": verdict.to_string(),
                "deg_q": ev.deg_q,
                "det": ev.det,
                "breadth": ev.breadth.to_string(),
            }));
        }
        Cmd::Table { catalog } => {
            let entries = load_catalog(catalog)?;
            let opts = VerifyOptions { max_crossings: ctx.max_crossings, jones_max_crossings: ctx.jones_max() };
            let rows = verify_table(&entries, opts);
            if ctx.json {
                println!("{}", render_json(&rows));
            } else {
                print!("{}", render_table(&rows));
            }
            let mismatched = rows.iter().filter(|r| !r.mismatches.is_empty()).count();
            let failed = rows.iter().filter(|r| r.error.is_some()).count();
            if !ctx.json {
                println!("{} rows, {} mismatched, {} not computed", rows.len(), mismatched, failed);
            }
            if mismatched > 0 {
                return Ok(1);
            }
            if rows.iter().any(|r| r.resource_bound) {
                return Ok(3);
            }
            if failed > 0 {
                return Ok(2);
            }
        }
        Cmd::Kanenobu { scan: true, .. } => {
            let scan = qa_candidate_scan();
            if ctx.json {
                println!("{}", serde_json::to_string(&scan)?);
            } else {
                for k in &scan {
                    println!("{} {}", k.p, k.q);
                }
            }
        }
        Cmd::Kanenobu { p, q, .. } => {
            let (p, q) = (p.expect("required"), q.expect("required"));
            let poly = kanenobu_q(p, q);
            let deg = poly.degree();
            ctx.emit(json!({
                "q": poly.to_string(),
                "degree": deg,
                "degree_formula": kanenobu_degree(p, q),
                "det": KANENOBU_DET,
                "verdict": verdict_for(deg, KANENOBU_DET).to_string(),
            }));
        }
        Cmd::Braid3 { family, n, pairs, m, pipeline } => {
            let nf = normal_form(*family, *n, pairs.as_deref(), *m)?;
            nf.validate()?;
            let word = nf.to_word()?;
            let birman = birman_jones(&word)?.eval_at_s_equals_i().axis_abs()?;
            let mut out = json!({
                "word": word.to_string(),
                "det_formula": det_formula(&nf)?.to_string(),
                "det_birman": birman.to_string(),
                "baldwin_qa": baldwin_is_qa(&nf)?,
            });
            if let Ok(c) = crossing_upper_bound(&nf) {
                out["crossing_upper_bound"] = json!(c);
            }
            if *pipeline {
                let d = PdDiagram::close_braid(&word)?;
                let (verdict, ev) = obstruction_check_with(&d, &ctx.engine(), ctx.jones_max().max(d.crossing_count()))?;
                out["pipeline"] = json!({ "det": ev.det, "deg_q": ev.deg_q, "verdict": verdict.to_string() });
            }
            ctx.emit(out);
        }
        Cmd::Montesinos { e, tangles, final_tangle } => {
            let ts = tangles.split(',').map(parse_fraction).collect::<anyhow::Result<Vec<_>>>()?;
            let m = MontesinosPresentation::new(*e, ts, parse_fraction(final_tangle)?)?;
            let c = montesinos_crossing_number(&m)?;
            let mut out = json!({
                "crossing_number": c,
                "predicted_deg_q": c - 2,
                "standard_form": standard_form_check(&m),
            });
            if let Ok(det) = montesinos_det(&m) {
                out["det"] = json!(det);
                out["verdict"] = json!(verdict_for(c - 2, det).to_string());
            }
            ctx.emit(out);
        }
        Cmd::Pretzel { family, r, pipeline } => {
            let rep = pretzel_family_report(*family, *r)?;
            let mut out = serde_json::to_value(&rep)?;
            if *pipeline {
                let d = PdDiagram::pretzel(&rep.entries)?;
                let (verdict, ev) = obstruction_check_with(&d, &ctx.engine(), ctx.jones_max())?;
                out["pipeline"] = json!({ "det": ev.det, "deg_q": ev.deg_q, "verdict": verdict.to_string() });
            }
            ctx.emit(out);
        }
    }
    Ok(0)
}

fn normal_form(family: u8, n: i64, pairs: Option<&str>, m: Option<i64>) -> anyhow::Result<B3NormalForm> {
    let need_m = || m.ok_or_else(|| anyhow!(qalt::Error::InvalidArgument(format!("family {family} needs --m"))));
    Ok(match family {
        1 => {
            let text = pairs.ok_or_else(|| anyhow!(qalt::Error::InvalidArgument("family 1 needs --pairs".into())))?;
            let pairs = text
                .split(';')
                .map(|pq| {
                    let (p, q) = pq.split_once(',').ok_or_else(|| bad_input(format!("pair {pq:?} is not p,q")))?;
                    Ok((p.trim().parse()?, q.trim().parse()?))
                })
                .collect::<anyhow::Result<Vec<(u32, u32)>>>()?;
            B3NormalForm::Family1 { n, pairs }
        }
        2 => B3NormalForm::Family2 { n, m: need_m()? },
        3 => B3NormalForm::Family3 { n, m: need_m()? },
        f => return Err(bad_input(format!("unknown family {f}"))),
    })
}

fn parse_fraction(s: &str) -> anyhow::Result<(i64, i64)> {
    let (a, b) = s.trim().split_once('/').ok_or_else(|| bad_input(format!("{s:?} is not α/β")))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn bad_input(msg: String) -> anyhow::Error {
    anyhow!(qalt::Error::InvalidArgument(msg))
}
