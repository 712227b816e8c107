use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context as _};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sperp::bench::{digest, run_bench};
use sperp::expr::Expr;
use sperp::output::ComputationResult;
use sperp::plethysm::{Mode, PerpSequence};
use sperp::tableaux::{enumerate_weight_kkk, type_counts, type_of, TypeLabel};
use sperp::verify::{run_verify, Suite};
use sperp::{Basis, Context, Method, SymFunc};

const CACHE_VERSION: &str = "sperp-cache-v1";

#[derive(Parser)]
#[command(name = "sperp", version, about = "Exact symmetric functions and Schur plethysm")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as `s[2][s[1,1]] + 2*h[3]`.
    Expand {
        expr: Option<String>,
        /// Rebuild a Schur expansion from skewing data `A[1]; A[2]; ...`.
        #[arg(long, conflicts_with = "expr")]
        perp_sequence: Option<String>,
        #[arg(long, default_value = "row")]
        mode: String,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, default_value = "s")]
        basis: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute `outer[inner]`.
    Plethysm {
        outer: String,
        inner: String,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, default_value = "s")]
        basis: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Skew `f` by `--by`, or list `s_r^⊥ f` (or `s_{1^r}^⊥ f`) for every r.
    Perp {
        expr: String,
        #[arg(long)]
        by: Option<String>,
        #[arg(long, default_value = "row")]
        mode: String,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Monomial expansion in finitely many variables.
    Monomials {
        expr: String,
        #[arg(long)]
        vars: usize,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Type classes of the tableaux with k ones, k twos and k threes.
    Tableaux {
        #[arg(long)]
        k: u32,
        /// List the tableaux of this type, e.g. `[12/3]`.
        #[arg(long = "type")]
        type_label: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite: oracle, deg3, rowcol, hooks, lemmas,
    /// roundtrip or identities.
    Verify {
        suite: String,
        #[arg(long, visible_aliases = ["max-product", "max-h", "max-k", "max-degree"])]
        bound: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Time methods on plethysm cases and compare their results.
    Bench {
        #[arg(required = true)]
        cases: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "sperp,powersum")]
        methods: Vec<String>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failures mapped to exit status 2; verification failures return 1
/// directly.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    let ctx = Context::new();
    match command {
        Command::Expand {
            expr,
            perp_sequence,
            mode,
            method,
            basis,
            format,
        } => {
            let method: Method = method.parse()?;
            let basis: Basis = basis.parse()?;
            let start = Instant::now();
            let (input, value) = match (expr, perp_sequence) {
                (Some(e), None) => {
                    let v = evaluate_cached(&ctx, &e, method, basis)?;
                    (e, v)
                }
                (None, Some(seq)) => {
                    let mode: Mode = mode.parse()?;
                    let entries = seq
                        .split(';')
                        .map(|t| Ok(Expr::parse(t)?.evaluate(&ctx, method)?))
                        .collect::<anyhow::Result<Vec<SymFunc>>>()?;
                    let f = ctx.expand_schur(&PerpSequence::new(mode, entries))?;
                    (seq, ctx.to_basis(&f, basis))
                }
                _ => bail!("give an expression or --perp-sequence"),
            };
            print_result(&input, method, &value, elapsed(start), format)?;
        }
        Command::Plethysm {
            outer,
            inner,
            method,
            basis,
            format,
        } => {
            let method: Method = method.parse()?;
            let basis: Basis = basis.parse()?;
            let input = format!("({outer})[{inner}]");
            let start = Instant::now();
            let value = evaluate_cached(&ctx, &input, method, basis)?;
            print_result(&input, method, &value, elapsed(start), format)?;
        }
        Command::Perp {
            expr,
            by,
            mode,
            method,
            format,
        } => {
            let method: Method = method.parse()?;
            let f = Expr::parse(&expr)?.evaluate(&ctx, method)?;
            match by {
                Some(by) => {
                    let g = Expr::parse(&by)?.evaluate(&ctx, method)?;
                    let start = Instant::now();
                    let v = ctx.f_perp(&g, &f);
                    print_result(&format!("({by})^perp ({expr})"), method, &v, elapsed(start), format)?;
                }
                None => {
                    let mode: Mode = mode.parse()?;
                    let seq = ctx.perp_sequence(&f, mode)?;
                    print_sequence(&seq, format)?;
                }
            }
        }
        Command::Monomials {
            expr,
            vars,
            method,
            format,
        } => {
            let f = Expr::parse(&expr)?.evaluate(&ctx, method.parse()?)?;
            let poly = ctx.monomial_expansion_sperp(&f, vars)?;
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => {
                    let terms: Vec<_> = poly
                        .iter()
                        .rev()
                        .map(|(e, c)| json!({"exponents": e, "coeff": format!("{}/{}", c.numer(), c.denom())}))
                        .collect();
                    println!("{}", json!({"input": expr, "vars": vars, "terms": terms}));
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(std::io::stdout());
                    w.write_record(["exponents", "coeff"])?;
                    for (e, c) in poly.iter().rev() {
                        let e: Vec<String> = e.iter().map(u32::to_string).collect();
                        w.write_record([e.join(" "), c.to_string()])?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Tableaux { k, type_label, format } => {
            if k == 0 {
                bail!("k must be at least 1");
            }
            match type_label {
                Some(label) => print_tableaux(k, label.parse()?, format)?,
                None => print_type_counts(k, format)?,
            }
        }
        Command::Verify {
            suite,
            bound,
            seed,
            format,
        } => {
            let suite: Suite = suite.parse()?;
            let report = run_verify(&ctx, suite, bound.unwrap_or(suite.default_bound()), seed);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                _ => println!("{report}"),
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            cases,
            methods,
            reps,
            format,
        } => {
            let methods = methods
                .iter()
                .map(|m| m.parse::<Method>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut rows = Vec::new();
            for case in &cases {
                rows.extend(run_bench(case, &methods, reps)?.rows);
            }
            let report = sperp::bench::BenchReport { rows };
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Csv => print!("{}", report.to_csv()),
            }
            if !report.consistent() {
                eprintln!("methods disagree: checksums differ");
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn elapsed(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn cache_path(input: &str, method: Method, basis: Basis) -> Option<PathBuf> {
    let dir = std::env::var_os("SPERP_CACHE_DIR")?;
    let canonical: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let key = digest(&format!("{CACHE_VERSION}\n{canonical}\n{method}\n{}", basis.letter()));
    Some(PathBuf::from(dir).join(format!("{key}.json")))
}

/// Evaluates `input` in `basis`, reading and writing the on-disk cache when
/// `SPERP_CACHE_DIR` is set. Unreadable cache entries are recomputed.
fn evaluate_cached(ctx: &Context, input: &str, method: Method, basis: Basis) -> anyhow::Result<SymFunc> {
    let path = cache_path(input, method, basis);
    if let Some(path) = &path {
        let hit = std::fs::read_to_string(path)
            .ok()
            .and_then(|text| serde_json::from_str::<ComputationResult>(&text).ok())
            .and_then(|r| r.to_symfunc().ok());
        if let Some(v) = hit {
            return Ok(v);
        }
    }
    let value = ctx.to_basis(&Expr::parse(input)?.evaluate(ctx, method)?, basis);
    if let Some(path) = path {
        let record = ComputationResult::new(input, method.name(), &value, 0.0);
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        std::fs::write(&path, serde_json::to_string(&record)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(value)
}

fn print_result(input: &str, method: Method, value: &SymFunc, millis: f64, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let record = ComputationResult::new(input, method.name(), value, millis);
            println!("{}", serde_json::to_string(&record)?);
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["partition", "coeff"])?;
            for (p, c) in value.sorted_terms() {
                w.write_record([p.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn print_sequence(seq: &PerpSequence, format: Format) -> anyhow::Result<()> {
    let op = |r: usize| format!("s{}", seq.mode.operator(r));
    match format {
        Format::Text => {
            for (i, entry) in seq.entries.iter().enumerate() {
                println!("{}^perp: {entry}", op(i + 1));
            }
        }
        Format::Json => {
            let entries: Vec<_> = seq
                .entries
                .iter()
                .enumerate()
                .map(|(i, e)| json!({"r": i + 1, "value": e.to_string()}))
                .collect();
            println!("{}", json!({"mode": seq.mode.to_string(), "entries": entries}));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["r", "value"])?;
            for (i, e) in seq.entries.iter().enumerate() {
                w.write_record([(i + 1).to_string(), e.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn print_type_counts(k: u32, format: Format) -> anyhow::Result<()> {
    let counts = type_counts(k);
    let mut shapes: Vec<_> = counts.keys().cloned().collect();
    shapes.sort_by(|a, b| a.display_cmp(b));
    let labels: Vec<String> = TypeLabel::ALL.iter().map(ToString::to_string).collect();
    match format {
        Format::Text => {
            println!("{:16} {}", "shape", labels.iter().map(|l| format!("{l:>8}")).collect::<String>());
            for shape in &shapes {
                let row: String = counts[shape].iter().map(|n| format!("{n:>8}")).collect();
                println!("{:16} {row}", shape.to_string());
            }
        }
        Format::Json => {
            let rows: Vec<_> = shapes
                .iter()
                .map(|s| {
                    let c = counts[s];
                    let by_type: serde_json::Map<_, _> =
                        labels.iter().cloned().zip(c.iter().map(|&n| json!(n))).collect();
                    json!({"shape": s, "counts": by_type})
                })
                .collect();
            println!("{}", json!({"k": k, "shapes": rows}));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let mut header = vec!["shape".to_string()];
            header.extend(labels.iter().cloned());
            w.write_record(&header)?;
            for s in &shapes {
                let mut rec = vec![s.to_string()];
                rec.extend(counts[s].iter().map(ToString::to_string));
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn print_tableaux(k: u32, label: TypeLabel, format: Format) -> anyhow::Result<()> {
    let members: Vec<_> = enumerate_weight_kkk(k)
        .into_iter()
        .filter(|s| type_of(s).map(|t| t == label).unwrap_or(false))
        .collect();
    match format {
        Format::Text => {
            for s in &members {
                println!("{:16} {s}", s.shape().to_string());
            }
        }
        Format::Json => {
            let rows: Vec<_> = members
                .iter()
                .map(|s| json!({"shape": s.shape(), "rows": s.rows()}))
                .collect();
            println!("{}", json!({"k": k, "type": label.to_string(), "tableaux": rows}));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["shape", "tableau"])?;
            for s in &members {
                w.write_record([s.shape().to_string(), s.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
