//! Batch command-line front end.
//!
//! Every subcommand produces one value that is rendered either as text or,
//! with `--json`, as a JSON document carrying the same data. Exit codes:
//! 0 success, 2 input or usage error, 3 failed check.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::acceptance;
use crate::block::BlockKey;
use crate::homotopy::{self, HoObject};
use crate::interval::BlockObject;
use crate::par::Mode;
use crate::partitions::{self, Partition};
use crate::series::{self, KacFlagInput, KSeries};
use crate::weights::Weight;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "glsuper", version, about = "GL(m|n) block, homotopy and partition calculator")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight data: degree, bidegree, atypicality, label sets.
    #[command(subcommand)]
    Weight(WeightCmd),
    /// Coordinates inside an atypical GL(m|1) block.
    #[command(subcommand)]
    Block(BlockCmd),
    /// Operations on block objects such as "R[0,3] + P(0)".
    #[command(subcommand)]
    Object(ObjectCmd),
    /// Hom spaces in the homotopy category.
    #[command(subcommand)]
    Hom(HomCmd),
    /// Grothendieck-ring power series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Partition identities.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Self-checks.
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Debug, Subcommand)]
pub enum WeightCmd {
    Info {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Tensor with Ber^k.
    Twist {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(short, long, allow_hyphen_values = true)]
        k: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum BlockCmd {
    /// Block key of a representative weight (which becomes L(0)).
    Key {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Positions and weights of L(i+k) for k in -radius..=radius.
    Neighbors {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        index: i64,
        #[arg(long, default_value_t = 1)]
        radius: i64,
    },
    /// Degrees of L(i) over an index range.
    Deg {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        range: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct BlockArgs {
    /// Representative weight of L(0) (an atypical GL(m|1) weight).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["core", "base"])]
    pub weight: Option<String>,
    /// Core labels, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub core: Option<String>,
    /// Atypical position of L(0).
    #[arg(long, allow_hyphen_values = true)]
    pub base: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum ObjectCmd {
    /// Image in the homotopy category.
    Reduce(ObjectArgs),
    /// Twisted dual.
    Dual(ObjectArgs),
    /// Kac and anti-Kac flags of each summand.
    Flags(ObjectArgs),
    /// Membership in T+, T- and Proj.
    Classify(ObjectArgs),
    /// Composition factors.
    Factors(ObjectArgs),
    /// Image in the semisimple quotient.
    Semisimple(ObjectArgs),
    /// Image after inverting isogenies.
    Isogeny(ObjectArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ObjectArgs {
    /// Object expression, or "-" to read it from stdin.
    #[arg(allow_hyphen_values = true)]
    pub object: String,
    #[command(flatten)]
    pub block: BlockArgs,
}

#[derive(Debug, Subcommand)]
pub enum HomCmd {
    /// dim [X, Y] for homotopy objects such as "S(2) + S(0)".
    Dim {
        #[arg(allow_hyphen_values = true)]
        source: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
        /// Compare against Y[shift].
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[command(flatten)]
        block: BlockArgs,
    },
    /// Table of dim [S(i), S(j)].
    Table {
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        range: String,
        #[command(flatten)]
        block: BlockArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub block: BlockArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub u: i64,
    #[arg(short = 'N', long = "depth", default_value_t = 3)]
    pub depth: usize,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    MinimalModel(SeriesArgs),
    EulerCheck(SeriesArgs),
    /// Degree filtration of a flag such as "V(1)@1, V(0)@0".
    Filtration {
        #[arg(allow_hyphen_values = true)]
        flag: String,
        #[command(flatten)]
        block: BlockArgs,
    },
    /// Expand a Kac series (JSON) into simples.
    Expand {
        #[arg(allow_hyphen_values = true)]
        series: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SizeArg {
    #[arg(short, long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCmd {
    Box(SizeArg),
    Selfconj(SizeArg),
    Cauchy(SizeArg),
    Vvstar(SizeArg),
    /// Littlewood-Richardson coefficient, or the whole product without --nu.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Dimension of the GL(n) irreducible.
    Dim {
        #[arg(long)]
        alpha: String,
        #[arg(short, long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Run the acceptance suite.
    All {
        /// Run criteria one after another.
        #[arg(long)]
        sequential: bool,
    },
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

impl Rendered {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Rendered {
            text: text.into(),
            json,
            code: EXIT_OK,
        }
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let msg = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: msg }
            } else {
                Outcome { code, stdout: msg, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, stdin) {
        Ok(r) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&r.json).expect("json values serialize")
            } else {
                r.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: r.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Usage(format!("bad range {s:?}, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.trim_start_matches('=');
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn block_key(args: &BlockArgs) -> Result<BlockKey, Error> {
    if let Some(w) = &args.weight {
        return Ok(BlockKey::of_weight(&w.parse::<Weight>()?)?);
    }
    let core: Vec<i64> = match &args.core {
        Some(c) => c
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Usage(format!("bad core entry {t:?}"))))
            .collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    Ok(BlockKey::new(core, args.base.unwrap_or(0))?)
}

fn read_payload(s: &str, stdin: &mut dyn Read) -> Result<String, Error> {
    if s == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Error::Usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        Ok(s.to_string())
    }
}

fn weight_json(w: &Weight) -> Value {
    let b = w.bidegree();
    let sets = w.label_sets();
    json!({
        "weight": w,
        "d": b.d,
        "dprime": b.dprime,
        "deg": b.deg,
        "atypicality": w.atypicality(),
        "vee": sets.vee,
        "wedge": sets.wedge,
    })
}

fn fmt_set(s: &std::collections::BTreeSet<i64>) -> String {
    let v: Vec<String> = s.iter().map(i64::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn key_json(key: &BlockKey) -> Value {
    json!({"m": key.m(), "core": key.core(), "base": key.base()})
}

fn key_text(key: &BlockKey) -> String {
    format!("m={} core={} base={}", key.m(), fmt_set(key.core()), key.base())
}

fn series_text(s: &KSeries) -> String {
    let mut out = String::new();
    for (d, l, c) in s.iter() {
        let mark = match s.truncation() {
            Some(t) if d < t => "  (below truncation)",
            _ => "",
        };
        out.push_str(&format!("q^{d:<6} {c:>4} {l}{mark}\n"));
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<Rendered, Error> {
    match cmd {
        Command::Weight(c) => weight_cmd(c),
        Command::Block(c) => block_cmd(c),
        Command::Object(c) => object_cmd(c, stdin),
        Command::Hom(c) => hom_cmd(c, stdin),
        Command::Series(c) => series_cmd(c),
        Command::Partitions(c) => partitions_cmd(c),
        Command::Check(CheckCmd::All { sequential }) => {
            let mode = if *sequential { Mode::Sequential } else { Mode::Parallel };
            let results = acceptance::run_all(mode);
            let passed = results.iter().all(|r| r.passed);
            let text: Vec<String> = results.iter().map(|r| r.line()).collect();
            Ok(Rendered {
                text: text.join("\n"),
                json: json!({"passed": passed, "criteria": results}),
                code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            })
        }
    }
}

fn weight_cmd(c: &WeightCmd) -> Result<Rendered, Error> {
    match c {
        WeightCmd::Info { weight } => {
            let w: Weight = weight.parse()?;
            let b = w.bidegree();
            let sets = w.label_sets();
            let text = format!(
                "weight       {w}\nbidegree     ({}, {})\ndeg          {}\natypicality  {}\nvee          {}\nwedge        {}",
                b.d,
                b.dprime,
                b.deg,
                w.atypicality(),
                fmt_set(&sets.vee),
                fmt_set(&sets.wedge)
            );
            Ok(Rendered::ok(text, weight_json(&w)))
        }
        WeightCmd::Twist { weight, k } => {
            let w: Weight = weight.parse()?;
            let t = w.ber_twist(*k);
            Ok(Rendered::ok(t.to_string(), weight_json(&t)))
        }
    }
}

fn block_cmd(c: &BlockCmd) -> Result<Rendered, Error> {
    match c {
        BlockCmd::Key { weight } => {
            let key = BlockKey::of_weight(&weight.parse()?)?;
            Ok(Rendered::ok(key_text(&key), key_json(&key)))
        }
        BlockCmd::Neighbors { weight, index, radius } => {
            let key = BlockKey::of_weight(&weight.parse()?)?;
            let rows: Vec<Value> = (-radius..=*radius)
                .map(|k| {
                    let i = index + k;
                    json!({"index": i, "position": key.step(*index, k), "weight": key.weight_at(i), "deg": key.block_deg(i)})
                })
                .collect();
            let text: Vec<String> = (-radius..=*radius)
                .map(|k| {
                    let i = index + k;
                    format!(
                        "L({i:>3})  pos {:>4}  deg {:>4}  {}",
                        key.step(*index, k),
                        key.block_deg(i),
                        key.weight_at(i)
                    )
                })
                .collect();
            Ok(Rendered::ok(text.join("\n"), json!({"key": key_json(&key), "neighbors": rows})))
        }
        BlockCmd::Deg { weight, range } => {
            let key = BlockKey::of_weight(&weight.parse()?)?;
            let (a, b) = parse_range(range)?;
            let rows: Vec<Value> = (a..=b)
                .map(|i| json!({"index": i, "deg": key.block_deg(i), "weight": key.weight_at(i)}))
                .collect();
            let text: Vec<String> = (a..=b)
                .map(|i| format!("L({i:>3})  deg {:>4}  {}", key.block_deg(i), key.weight_at(i)))
                .collect();
            Ok(Rendered::ok(text.join("\n"), json!({"key": key_json(&key), "degrees": rows})))
        }
    }
}

fn object_cmd(c: &ObjectCmd, stdin: &mut dyn Read) -> Result<Rendered, Error> {
    let args = match c {
        ObjectCmd::Reduce(a)
        | ObjectCmd::Dual(a)
        | ObjectCmd::Flags(a)
        | ObjectCmd::Classify(a)
        | ObjectCmd::Factors(a)
        | ObjectCmd::Semisimple(a)
        | ObjectCmd::Isogeny(a) => a,
    };
    let key = block_key(&args.block)?;
    let obj = BlockObject::parse(key, &read_payload(&args.object, stdin)?)?;
    Ok(match c {
        ObjectCmd::Reduce(_) => {
            let h = homotopy::ho_reduce(&obj);
            Rendered::ok(h.to_string(), h.to_json())
        }
        ObjectCmd::Dual(_) => {
            let d = obj.twisted_dual();
            Rendered::ok(d.to_string(), d.to_json())
        }
        ObjectCmd::Flags(_) => {
            let mut text = Vec::new();
            let mut rows = Vec::new();
            for x in obj.iter() {
                match x.flags() {
                    Ok(f) => {
                        let show = |v: &Option<Vec<crate::KacLabel>>| match v {
                            Some(v) => v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ⊂ "),
                            None => "-".into(),
                        };
                        text.push(format!("{x}: kac [{}]  anti-kac [{}]", show(&f.kac), show(&f.anti_kac)));
                        rows.push(json!({"summand": x, "kac": f.kac, "anti_kac": f.anti_kac}));
                    }
                    Err(e) => {
                        text.push(format!("{x}: no flag"));
                        rows.push(json!({"summand": x, "error": e.to_string()}));
                    }
                }
            }
            Rendered::ok(text.join("\n"), Value::Array(rows))
        }
        ObjectCmd::Classify(_) => {
            let agg = obj.classify();
            let per = obj.classify_summands();
            let mut text = vec![format!(
                "aggregate: T+ {} T- {} projective {}",
                agg.in_tplus, agg.in_tminus, agg.projective
            )];
            for (x, c) in &per {
                text.push(format!(
                    "{x}: T+ {} T- {} projective {}",
                    c.in_tplus, c.in_tminus, c.projective
                ));
            }
            let rows: Vec<Value> = per
                .iter()
                .map(|(x, c)| json!({"summand": x, "class": c}))
                .collect();
            Rendered::ok(text.join("\n"), json!({"aggregate": agg, "summands": rows}))
        }
        ObjectCmd::Factors(_) => {
            let f = obj.composition_factors();
            let text: Vec<String> = f
                .iter()
                .map(|(i, k)| if *k == 1 { format!("L({i})") } else { format!("{k}*L({i})") })
                .collect();
            let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
            let js: Vec<Value> = f.iter().map(|(i, k)| json!({"index": i, "mult": k})).collect();
            Rendered::ok(text, Value::Array(js))
        }
        ObjectCmd::Semisimple(_) => {
            let img = homotopy::ss_image(&homotopy::ho_reduce(&obj));
            let text: Vec<String> = img
                .iter()
                .map(|(w, k)| if *k == 1 { format!("({w})") } else { format!("{k}*({w})") })
                .collect();
            let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
            let js: Vec<Value> = img.iter().map(|(w, k)| json!({"weight": w, "mult": k})).collect();
            Rendered::ok(text, Value::Array(js))
        }
        ObjectCmd::Isogeny(_) => {
            let p = homotopy::isogeny_image(&homotopy::ho_reduce(&obj));
            Rendered::ok(format!("ev {} odd {}", p.ev, p.odd), json!(p))
        }
    })
}

fn hom_cmd(c: &HomCmd, stdin: &mut dyn Read) -> Result<Rendered, Error> {
    match c {
        HomCmd::Dim { source, target, shift, block } => {
            let key = block_key(block)?;
            let x = HoObject::parse(key.clone(), &read_payload(source, stdin)?)?;
            let y = HoObject::parse(key, &read_payload(target, stdin)?)?;
            let y = homotopy::shift(&y, *shift)?;
            let d = homotopy::hom_dim(&x, &y)?;
            Ok(Rendered::ok(d.to_string(), json!({"source": x.to_json(), "target": y.to_json(), "dim": d})))
        }
        HomCmd::Table { range, block } => {
            let key = block_key(block)?;
            let (a, b) = parse_range(range)?;
            let mut rows = Vec::new();
            let mut text = vec![format!(
                "{:>6} {}",
                "i\\j",
                (a..=b).map(|j| format!("{j:>3}")).collect::<String>()
            )];
            for i in a..=b {
                let mut row = Vec::new();
                for j in a..=b {
                    let d = homotopy::hom_dim(
                        &HoObject::simples(key.clone(), [i]),
                        &HoObject::simples(key.clone(), [j]),
                    )?;
                    row.push(d);
                }
                text.push(format!("{i:>6} {}", row.iter().map(|d| format!("{d:>3}")).collect::<String>()));
                rows.push(json!({"i": i, "dims": row}));
            }
            Ok(Rendered::ok(text.join("\n"), json!({"range": [a, b], "rows": rows})))
        }
    }
}

fn series_cmd(c: &SeriesCmd) -> Result<Rendered, Error> {
    match c {
        SeriesCmd::MinimalModel(a) => {
            let key = block_key(&a.block)?;
            let mm = series::minimal_model_series(&key, a.u, a.depth)?;
            let text = format!(
                "omega:\n{}kernel:\n{}",
                series_text(&mm.omega),
                series_text(&mm.kernel)
            );
            Ok(Rendered::ok(text, json!({"omega": mm.omega, "kernel": mm.kernel})))
        }
        SeriesCmd::EulerCheck(a) => {
            let key = block_key(&a.block)?;
            let e = series::euler_check(&key, a.u, a.depth)?;
            let head = e.head();
            let expected = vec![(key.block_deg(a.u), series::Label::Simple(a.u), 1)];
            let holds = head.iter().collect::<Vec<_>>() == expected;
            let text = format!(
                "{}identity holds above q^{}: {holds}",
                series_text(&e),
                e.truncation().unwrap_or_default()
            );
            Ok(Rendered {
                text,
                json: json!({"series": e, "head": head, "tail": e.tail(), "holds": holds}),
                code: if holds { EXIT_OK } else { EXIT_CHECK_FAILED },
            })
        }
        SeriesCmd::Filtration { flag, block } => {
            let key = block_key(block)?;
            let input = KacFlagInput::parse(flag, Some(&key))?;
            let steps = series::degree_filtration(&input)?;
            let text: Vec<String> = steps
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    let labels: Vec<String> = s.labels.iter().map(|l| l.to_string()).collect();
                    format!("F{k}: deg {:>4}  {}", s.degree, labels.join(" ⊕ "))
                })
                .collect();
            Ok(Rendered::ok(text.join("\n"), json!(steps)))
        }
        SeriesCmd::Expand { series: s } => {
            let parsed: KSeries = serde_json::from_str(s)
                .map_err(|e| Error::Usage(format!("series JSON: {e}")))?;
            let e = series::expand_to_simples(&parsed)?;
            Ok(Rendered::ok(series_text(&e), json!(e)))
        }
    }
}

fn partitions_cmd(c: &PartitionsCmd) -> Result<Rendered, Error> {
    let check_n = |n: usize| {
        if n == 0 {
            Err(Error::Usage("n must be at least 1".into()))
        } else {
            Ok(n)
        }
    };
    match c {
        PartitionsCmd::Box(SizeArg { n }) => {
            let n = check_n(*n)?;
            let parts = partitions::box_partitions(n);
            let text: Vec<String> = parts.iter().map(Partition::to_string).collect();
            Ok(Rendered::ok(
                format!("{}\ncount {}", text.join("\n"), parts.len()),
                json!({"n": n, "count": parts.len(), "partitions": parts}),
            ))
        }
        PartitionsCmd::Selfconj(SizeArg { n }) => {
            let n = check_n(*n)?;
            let parts = partitions::self_conjugate_partitions(n);
            Ok(Rendered::ok(
                parts.len().to_string(),
                json!({"n": n, "count": parts.len(), "partitions": parts}),
            ))
        }
        PartitionsCmd::Cauchy(SizeArg { n }) => {
            let n = check_n(*n)?;
            let r = partitions::cauchy_check(n);
            let holds = r.holds();
            let mut text = vec![format!("{:<16} {:<16} {:>12}", "partition", "transpose", "dim")];
            for (a, t) in &r.pairs {
                let d = partitions::gl_dim(a, n)? * partitions::gl_dim(t, n)?;
                text.push(format!("{:<16} {:<16} {:>12}", a.to_string(), t.to_string(), d));
            }
            text.push(format!("total {} = 2^{}: {holds}", r.total, n * n));
            Ok(Rendered {
                text: text.join("\n"),
                json: json!({"n": n, "pairs": r.pairs, "total": r.total.to_string(), "holds": holds}),
                code: if holds { EXIT_OK } else { EXIT_CHECK_FAILED },
            })
        }
        PartitionsCmd::Vvstar(SizeArg { n }) => {
            let n = check_n(*n)?;
            let f = partitions::vv_star_flag(n);
            let mut text = vec![format!(
                "{:<16} {:<16} {:<6} {:>10} {:>7}",
                "partition", "transpose", "self", "dim", "degree"
            )];
            for e in &f.entries {
                text.push(format!(
                    "{:<16} {:<16} {:<6} {:>10} {:>7}",
                    e.alpha.to_string(),
                    e.transpose.to_string(),
                    e.is_max_atypical,
                    e.dim,
                    e.degree
                ));
            }
            text.push(format!(
                "maximal atypical {} of {}, min maximal degree {}",
                f.max_atypical_count(),
                f.entries.len(),
                f.min_max_atypical_degree().unwrap_or_default()
            ));
            let entries: Vec<Value> = f
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "partition": e.alpha,
                        "transpose": e.transpose,
                        "self_conjugate": e.is_max_atypical,
                        "dim": e.dim.to_string(),
                        "degree": e.degree,
                    })
                })
                .collect();
            Ok(Rendered::ok(
                text.join("\n"),
                json!({
                    "n": n,
                    "entries": entries,
                    "max_atypical": f.max_atypical_count(),
                    "min_max_atypical_degree": f.min_max_atypical_degree(),
                }),
            ))
        }
        PartitionsCmd::Lr { lambda, mu, nu } => {
            let l: Partition = lambda.parse()?;
            let m: Partition = mu.parse()?;
            match nu {
                Some(nu) => {
                    let v: Partition = nu.parse()?;
                    let c = partitions::lr_mult(&l, &m, &v);
                    Ok(Rendered::ok(c.to_string(), json!({"lambda": l, "mu": m, "nu": v, "coeff": c})))
                }
                None => {
                    let prod = partitions::lr_product(&l, &m);
                    let text: Vec<String> = prod
                        .iter()
                        .map(|(v, c)| if *c == 1 { format!("s{v}") } else { format!("{c}*s{v}") })
                        .collect();
                    let js: Vec<Value> = prod.iter().map(|(v, c)| json!({"nu": v, "coeff": c})).collect();
                    Ok(Rendered::ok(text.join(" + "), json!({"lambda": l, "mu": m, "terms": js})))
                }
            }
        }
        PartitionsCmd::Dim { alpha, n } => {
            let a: Partition = alpha.parse()?;
            let d = partitions::gl_dim(&a, *n)?;
            Ok(Rendered::ok(d.to_string(), json!({"alpha": a, "n": n, "dim": d.to_string()})))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut argv = vec!["glsuper"];
        argv.extend_from_slice(args);
        let out = run(argv, &mut std::io::empty());
        assert_eq!(out.code, 0, "stderr: {}", out.stderr);
        out.stdout.trim().to_string()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(run_ok(&["hom", "dim", "S(2)", "S(0)"]), "1");
        assert_eq!(run_ok(&["partitions", "selfconj", "-n", "3"]), "8");
        assert_eq!(run_ok(&["object", "reduce", "B[0,1]+P(4)"]), "0");
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("-3..3").unwrap(), (-3, 3));
        assert_eq!(parse_range("0..=2").unwrap(), (0, 2));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn input_errors_exit_2() {
        let out = run(["glsuper", "weight", "info", "0,1|0"], &mut std::io::empty());
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("not dominant"));
        let out = run(["glsuper", "frobnicate"], &mut std::io::empty());
        assert_eq!(out.code, EXIT_INPUT);
    }
}
