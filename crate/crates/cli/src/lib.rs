//! Batch front end: every subcommand prints deterministic JSON (or DOT for
//! diagrams, or a plain table where one makes sense) and returns an exit code.
//! 0 means success, 1 a failed verification, 2 a usage or input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fused_hecke::bratteli::{build_chain, centralizer_diagram, to_dot, BratteliDiagram};
use fused_hecke::conjectures::{check_conjectures, sweep, Budget, ConjReport};
use fused_hecke::fused::{dimension, multiply_classical, FusedAlgebra, FusedElem};
use fused_hecke::golden;
use fused_hecke::permcomb::{Blocks, FusedPerm};
use fused_hecke::qcoeff::{default_points, parse_rational, RatFunc};
use fused_hecke::seminormal::fused_irrep;
use fused_hecke::shapes::{kostka, s_set, Partition};
use fused_hecke::sworacle::{centralizer_rank, schur_weyl_dim};
use num_rational::BigRational;
use serde_json::{json, Value};
use std::io::Write;

/// Environment variable fixing the size of the worker pool.
pub const THREADS_ENV: &str = "FUSED_HECKE_THREADS";

#[derive(Parser, Debug)]
#[command(name = "fused-hecke", version, about = "Computations in fused Hecke algebras H_{k,n}(q)")]
struct Cli {
    /// Output format; DOT is only available for diagrams.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Args, Debug, Clone)]
struct KArgs {
    /// Composition: `2,2,1` or `const:2`. Short lists repeat their last entry.
    #[arg(long)]
    k: String,
    /// Number of entries of k to use (defaults to the listed length).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of H_{k,n}(q).
    Dim(KArgs),
    /// The standard basis: fused permutation matrices with representative words.
    Basis(KArgs),
    /// Product of two basis elements; matrices are written `1,1/1,1`.
    Mul {
        #[command(flatten)]
        k: KArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Multiply at q = 1 with the combinatorial rule.
        #[arg(long)]
        classical: bool,
        /// Evaluate the q-product at this rational point.
        #[arg(long)]
        at: Option<String>,
    },
    /// Kostka number K_{λ,μ}.
    Kostka {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        weight: String,
    },
    /// The index set S_{k,n} of irreducible representations.
    Sset(KArgs),
    /// Bratteli diagram of the chain H_{k,0} ⊂ H_{k,1} ⊂ ⋯.
    Bratteli {
        #[arg(long)]
        k: String,
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Bratteli diagram of the centralisers for gl_N.
    CentralizerDiagram {
        #[arg(long)]
        k: String,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Matrices of the basis elements on W_{k,λ}.
    Irrep {
        #[command(flatten)]
        k: KArgs,
        #[arg(long)]
        shape: String,
        /// Evaluate the matrices at this rational point.
        #[arg(long)]
        at: Option<String>,
    },
    /// Rank of the image of H_{k,n} on (ℚ^N)^{⊗Σk}, compared with Σ K².
    SwRank {
        #[command(flatten)]
        k: KArgs,
        #[arg(long = "N")]
        big_n: usize,
        /// Comma-separated rational points.
        #[arg(long)]
        points: Option<String>,
    },
    /// Checks that AS_{k,N+1}(q) is central and generates the ideal I^N.
    CheckConjectures {
        /// Composition; omit together with --sweep to run every case.
        #[arg(long)]
        k: Option<String>,
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Run all (k, N) with k_1 + ⋯ + k_{N+1} at most this.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 7)]
        max_total: usize,
        #[arg(long, default_value_t = 6)]
        symbolic_max_total: usize,
        #[arg(long, default_value_t = 130)]
        direct_max_dim: usize,
        #[arg(long, default_value_t = 40)]
        grid_max_dim: usize,
        #[arg(long, default_value_t = 5)]
        symbolic_rank_max_total: usize,
        /// Comma-separated rational points used above the symbolic limit.
        #[arg(long)]
        points: Option<String>,
    },
    /// Runs the golden fixture suite.
    Golden {
        /// Run only the named fixture.
        #[arg(long)]
        only: Option<String>,
        /// List fixture names and exit.
        #[arg(long)]
        list: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<fused_hecke::Error> for Failure {
    fn from(e: fused_hecke::Error) -> Self {
        usage(e.to_string())
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("not a number: {x:?}")))).collect()
}

/// Resolves the composition and the length actually used. The second value
/// reports whether entries had to be repeated.
fn composition(spec: &str, n: Option<usize>) -> std::result::Result<(Vec<usize>, bool), Failure> {
    let (base, fixed) = match spec.strip_prefix("const:") {
        Some(c) => (parse_list(c)?, true),
        None => (parse_list(spec)?, false),
    };
    if base.is_empty() {
        return Err(usage("k must have at least one entry"));
    }
    if fixed && base.len() != 1 {
        return Err(usage("const: takes a single value"));
    }
    if fixed && n.is_none() {
        return Err(usage("const: needs --n (or --n-max)"));
    }
    let len = n.unwrap_or(base.len());
    let last = *base.last().unwrap();
    let extended = len > base.len() && !fixed;
    let mut k = base;
    k.resize(len.max(k.len()), last);
    k.truncate(len);
    Ok((k, extended))
}

fn resolve(a: &KArgs, err: &mut dyn Write) -> std::result::Result<Vec<usize>, Failure> {
    let (k, extended) = composition(&a.k, a.n)?;
    if extended {
        let _ = writeln!(err, "warning: k extended to {k:?} by repeating its last entry");
    }
    Ok(k)
}

fn resolve_to(spec: &str, n: usize, err: &mut dyn Write) -> std::result::Result<Vec<usize>, Failure> {
    resolve(&KArgs { k: spec.to_string(), n: Some(n) }, err)
}

fn partition(s: &str) -> std::result::Result<Partition, Failure> {
    Ok(Partition::new(parse_list(s)?)?)
}

fn fused_perm(s: &str, blocks: &Blocks) -> std::result::Result<FusedPerm, Failure> {
    let rows = s
        .split('/')
        .map(|r| parse_list(r).map(|v| v.into_iter().map(|x| x as u32).collect()))
        .collect::<std::result::Result<Vec<Vec<u32>>, _>>()?;
    let m = FusedPerm::new(rows);
    m.validate(blocks)?;
    Ok(m)
}

fn rational(s: &str) -> std::result::Result<BigRational, Failure> {
    parse_rational(s).ok_or_else(|| usage(format!("not a rational number: {s:?}")))
}

fn points(s: &Option<String>) -> std::result::Result<Vec<BigRational>, Failure> {
    match s {
        None => Ok(default_points()),
        Some(s) => s.split(',').map(rational).collect(),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serialisable")
}

fn element_json<C: fused_hecke::qcoeff::Coeff + std::fmt::Display>(e: &FusedElem<C>) -> Value {
    Value::Array(e.terms().iter().map(|(m, c)| json!({"matrix": m.mat(), "coeff": c.to_string()})).collect())
}

fn diagram_output(d: &BratteliDiagram, format: Format) -> String {
    match format {
        Format::Dot => to_dot(d),
        Format::Table => {
            let mut s = String::new();
            for (l, level) in d.levels.iter().enumerate() {
                let cells: Vec<String> = level.iter().map(|v| format!("{} ({})", v.partition, v.dim)).collect();
                s.push_str(&format!("{l}: {}\n", cells.join("  ")));
            }
            s
        }
        Format::Json => pretty(&to_value(d)),
    }
}

fn conj_table(reports: &[ConjReport]) -> String {
    let mut s = String::from("k\tN\tdim\tcentrality\tideal\tgeneration\tq_mode\n");
    for r in reports {
        s.push_str(&format!(
            "{:?}\t{}\t{}\t{:?}\t{}/{}\t{:?}\t{:?}\n",
            r.k, r.big_n, r.algebra_dim, r.centrality, r.ideal_dim_computed, r.ideal_dim_expected, r.ideal_generation, r.q_mode
        ));
    }
    s
}

fn dispatch(cli: Cli, err: &mut dyn Write) -> Outcome {
    let format = cli.format;
    let diagram = matches!(cli.command, Command::Bratteli { .. } | Command::CentralizerDiagram { .. });
    if format == Format::Dot && !diagram {
        return Err(usage("DOT output is only available for bratteli and centralizer-diagram"));
    }
    match cli.command {
        Command::Dim(a) => {
            let k = resolve(&a, err)?;
            let d = dimension(&Blocks::new(k));
            Ok((d.to_string(), true))
        }
        Command::Basis(a) => {
            let k = resolve(&a, err)?;
            let alg = FusedAlgebra::<RatFunc>::symbolic(&Blocks::new(k));
            let items: Vec<Value> = (0..alg.dim()).map(|i| json!({"matrix": alg.basis()[i].mat(), "word": alg.word(i)})).collect();
            Ok((pretty(&Value::Array(items)), true))
        }
        Command::Mul { k, left, right, classical, at } => {
            let k = resolve(&k, err)?;
            let blocks = Blocks::new(k);
            let (l, r) = (fused_perm(&left, &blocks)?, fused_perm(&right, &blocks)?);
            let out = if classical {
                let a = FusedElem::<BigRational>::basis(&blocks, l)?;
                let b = FusedElem::<BigRational>::basis(&blocks, r)?;
                element_json(&multiply_classical(&a, &b)?)
            } else {
                let a = FusedElem::<RatFunc>::basis(&blocks, l)?;
                let b = FusedElem::<RatFunc>::basis(&blocks, r)?;
                let prod = fused_hecke::fused::multiply_q(&a, &b)?;
                match at {
                    Some(q0) => element_json(&prod.evaluate(&rational(&q0)?)?),
                    None => element_json(&prod),
                }
            };
            Ok((pretty(&out), true))
        }
        Command::Kostka { shape, weight } => {
            let c = kostka(&partition(&shape)?, &parse_list(&weight)?)?;
            Ok((c.to_string(), true))
        }
        Command::Sset(a) => {
            let k = resolve(&a, err)?;
            let set = s_set(&k, k.len())?;
            if format == Format::Table {
                let lines: Vec<String> = set.iter().map(|p| format!("{p}\t{}", kostka(p, &k).unwrap_or(0))).collect();
                return Ok((lines.join("\n"), true));
            }
            let items: Vec<Value> = set.iter().map(|p| json!({"partition": p, "dim": kostka(p, &k).unwrap_or(0)})).collect();
            Ok((pretty(&Value::Array(items)), true))
        }
        Command::Bratteli { k, n_max } => {
            let k = resolve_to(&k, n_max, err)?;
            Ok((diagram_output(&build_chain(&k, n_max)?, format), true))
        }
        Command::CentralizerDiagram { k, big_n, n_max } => {
            let k = resolve_to(&k, n_max, err)?;
            Ok((diagram_output(&centralizer_diagram(&k, big_n, n_max)?, format), true))
        }
        Command::Irrep { k, shape, at } => {
            let k = resolve(&k, err)?;
            let lambda = partition(&shape)?;
            let irr = fused_irrep(&lambda, &k, k.len())?;
            let q0 = at.as_deref().map(rational).transpose()?;
            let mut mats = Vec::new();
            for w in irr.basis() {
                let m = irr.matrix(w).expect("basis label");
                let cells = match &q0 {
                    Some(q0) => to_value(&m.try_map(|c| c.evaluate(q0))?),
                    None => to_value(m),
                };
                mats.push(json!({"matrix": w.mat(), "image": cells}));
            }
            let labels: Vec<String> = irr.labels().iter().map(|t| t.to_string()).collect();
            let v = json!({"lambda": lambda, "k": k, "dim": irr.dim(), "labels": labels, "matrices": mats});
            Ok((pretty(&v), true))
        }
        Command::SwRank { k, big_n, points: pts } => {
            let k = resolve(&k, err)?;
            let expected = schur_weyl_dim(&k, k.len(), big_n)?;
            let mut ok = true;
            let mut rows = Vec::new();
            for q0 in points(&pts)? {
                let r = centralizer_rank(&k, k.len(), big_n, &q0)?;
                ok &= r.dim as u64 == expected;
                rows.push(json!({"q0": q0.to_string(), "rank": r}));
            }
            let v = json!({"k": k, "N": big_n, "expected": expected, "points": rows, "agrees": ok});
            Ok((pretty(&v), ok))
        }
        Command::CheckConjectures {
            k,
            big_n,
            sweep: sweep_total,
            max_total,
            symbolic_max_total,
            direct_max_dim,
            grid_max_dim,
            symbolic_rank_max_total,
            points: pts,
        } => {
            let budget = Budget {
                max_total: sweep_total.unwrap_or(max_total).max(max_total),
                symbolic_max_total,
                direct_max_dim,
                grid_max_dim,
                symbolic_rank_max_total,
                points: match pts {
                    Some(_) => points(&pts)?,
                    None => Budget::default().points,
                },
            };
            let reports = match (sweep_total, k, big_n) {
                (Some(total), None, None) => sweep(&Budget { max_total: total, ..budget })?,
                (None, Some(k), Some(n)) => {
                    let k = resolve_to(&k, n + 1, err)?;
                    vec![check_conjectures(&k, n, &budget)?]
                }
                _ => return Err(usage("give either --k and --N, or --sweep")),
            };
            let ok = reports.iter().all(|r| r.passed());
            let text = match format {
                Format::Table => conj_table(&reports),
                _ if reports.len() == 1 => pretty(&to_value(&reports[0])),
                _ => pretty(&to_value(&reports)),
            };
            Ok((text, ok))
        }
        Command::Golden { only, list } => {
            if list {
                return Ok((golden::names().join("\n"), true));
            }
            let results = match only {
                Some(name) => vec![golden::run(&name).ok_or_else(|| usage(format!("no fixture named {name:?}")))?],
                None => golden::run_all(),
            };
            let ok = results.iter().all(|r| r.passed);
            let text = if format == Format::Table {
                results
                    .iter()
                    .map(|r| format!("{} {}{}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default()))
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                pretty(&to_value(&results))
            };
            Ok((text, ok))
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
        // The global pool can only be built once; later calls are harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    configure_threads();
    match dispatch(cli, err) {
        Ok((text, ok)) => {
            let _ = writeln!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
