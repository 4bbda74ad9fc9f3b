use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pvs_core::lie::{self, Classification};
use pvs_core::pvs::{composite_matrix, cubic_form, delta, pfaffians, phi1_bar, quadratic_form, ternary_form};
use pvs_core::rat::{self, Rat};
use pvs_core::sample::DEFAULT_SEED;
use pvs_core::search::{self, RealTransform, SearchParams};
use pvs_core::tensor::multi_indices;
use pvs_core::verify::{self, Golden, Status, VerifyOptions};
use pvs_core::wpoint::{q_form, s_generators, w_literal};
use pvs_core::LiePair;

#[derive(Parser)]
#[command(name = "pvs", version, about = "Exact computations on the space of alternating 5x5 matrices with entries in a 3-dimensional space")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Worker threads.
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    /// The distinguished point.
    W,
    /// The 3-dimensional submodule of the alternating square.
    S,
    /// The cubic form at w.
    F,
    /// The invariant quadratic form on binary quartics.
    Q,
    /// The quadratic form Phi2 at w.
    Phi2w,
    /// The matrix phi3 at w.
    Phi3w,
    /// The five Pfaffians at w.
    Pfaffians,
    /// The matrix phi1_bar at w.
    Phi1barw,
    /// The ternary quadratic form Phi1 at w.
    Phi1w,
    /// The discriminant of Phi1 at w.
    Delta,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProbeTarget {
    /// The transported plane S, in Pluecker coordinates.
    S,
    /// The transported quadratic form Q.
    Q,
}

#[derive(Subcommand)]
enum Command {
    /// Run the exact checks; exits 1 on any mismatch.
    Verify {
        /// Glob over check names, e.g. "pfaffians*".
        #[arg(long)]
        filter: Option<String>,
        /// Golden-value file replacing the bundled one.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Random points per randomized check.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Print check names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print an object in its canonical serialization.
    Show {
        #[arg(value_enum, ignore_case = true)]
        object: Object,
    },
    /// Close a set of Lie algebra elements under brackets and name the result.
    Classify {
        /// JSON list of {"x": 5x5, "y": 3x3} matrices with rational entries.
        #[arg(long)]
        basis: PathBuf,
    },
    /// Histogram the values of the cubic form at primitive integer points.
    Search {
        /// Preset name (identity, golden) or JSON file {"g1": 5x5}.
        #[arg(long, default_value = "golden")]
        g: String,
        /// Box radius in the max norm.
        #[arg(long = "box", default_value_t = 10)]
        box_radius: i64,
        /// Histogram range [-R, R).
        #[arg(long, default_value_t = 10.0)]
        range: f64,
        /// Bin width.
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        /// Write the JSON report here as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Heuristic rationality test of a transported plane or form.
    Probe {
        #[arg(long, default_value = "golden")]
        g: String,
        #[arg(long, value_enum, default_value_t = ProbeTarget::S)]
        target: ProbeTarget,
        #[arg(long, default_value_t = search::DEFAULT_DENOMINATOR_BOUND)]
        bound: i64,
    },
    /// Build h and a with F at the moved point taking the value r at a.
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
}

/// Outcome of a command other than a usage error.
enum Done {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Done::Ok) => ExitCode::SUCCESS,
        Ok(Done::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn load_transform(spec: &str) -> Result<RealTransform> {
    if search::PRESETS.contains(&spec) {
        return Ok(RealTransform::preset(spec)?);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading transform {spec}"))?;
    Ok(RealTransform::from_json(&text, spec)?)
}

fn run(cli: &Cli) -> Result<Done> {
    match &cli.command {
        Command::Verify {
            filter,
            golden,
            samples,
            list,
        } => {
            let golden = match golden {
                Some(p) => {
                    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    Golden::from_json(&text)?
                }
                None => Golden::builtin(),
            };
            if *list {
                for name in verify::check_names(&golden) {
                    println!("{name}");
                }
                return Ok(Done::Ok);
            }
            let opts = VerifyOptions {
                seed: cli.seed,
                filter: filter.clone(),
                samples: *samples,
                workers: cli.workers,
            };
            let report = verify::run(golden, &opts)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&report)?)?,
                Format::Text => {
                    for c in &report.checks {
                        let tag = if c.status == Status::Pass { "ok  " } else { "FAIL" };
                        println!("{tag} {:<32} {:>9.2} ms", c.name, c.millis);
                        if let Some(m) = &c.mismatch {
                            println!("     {}", m.what);
                            println!("     - expected: {}", m.expected);
                            println!("     + actual:   {}", m.actual);
                        }
                    }
                    let failed = report.failures().count();
                    println!(
                        "{} checks, {} passed, {} failed ({:.0} ms, seed {})",
                        report.checks.len(),
                        report.checks.len() - failed,
                        failed,
                        report.millis,
                        report.seed
                    );
                }
            }
            Ok(if report.passed { Done::Ok } else { Done::Failed })
        }
        Command::Show { object } => {
            show(*object, cli.format)?;
            Ok(Done::Ok)
        }
        Command::Classify { basis } => {
            let text = fs::read_to_string(basis).with_context(|| format!("reading {}", basis.display()))?;
            let gens: Vec<LiePair> = serde_json::from_str(&text).context("parsing the basis")?;
            if gens.is_empty() {
                bail!("the basis is empty");
            }
            let c: Classification = lie::classify(&gens);
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&c)?)?,
                Format::Text => {
                    println!("input dimension:   {}", c.input_dim);
                    println!("closure dimension: {}", c.closure_dim);
                    println!("contains sl(2):    {}", c.contains_h);
                    println!("matches:           {}", c.matches.unwrap_or("none of the listed subalgebras"));
                }
            }
            Ok(Done::Ok)
        }
        Command::Search {
            g,
            box_radius,
            range,
            eps,
            out,
        } => {
            let transform = load_transform(g)?;
            let params = SearchParams::new(*box_radius, *range, *eps);
            let report = search::search(&transform, &params, cli.workers)?;
            let value = serde_json::to_value(&report)?;
            if let Some(path) = out {
                fs::write(path, serde_json::to_string_pretty(&value)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            match cli.format {
                Format::Json => print_json(&value)?,
                Format::Text => {
                    println!("transform:        {:?}", report.params.transform);
                    println!("primitive points: {}", report.point_count);
                    println!("coverage:         {:.4}", report.coverage);
                    match report.min_abs_nonzero {
                        Some(m) => println!("min nonzero |F|:  {m:e}"),
                        None => println!("min nonzero |F|:  none"),
                    }
                    for b in &report.histogram {
                        let witness = b
                            .witness
                            .as_ref()
                            .map(|w| format!("{:?} -> {}", w.a, w.value))
                            .unwrap_or_default();
                        println!("[{:>8.3}, {:>8.3})  {:>10}  {witness}", b.lo, b.hi, b.count);
                    }
                }
            }
            Ok(Done::Ok)
        }
        Command::Probe { g, target, bound } => {
            let transform = load_transform(g)?;
            let coords = match target {
                ProbeTarget::S => transform.transported_s(),
                ProbeTarget::Q => transform.transported_q(),
            };
            let report = search::rationality_probe(&coords, *bound)?;
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&report)?)?,
                Format::Text => {
                    println!("verdict (heuristic): {}", report.verdict);
                    println!("denominator bound:   {}", report.denominator_bound);
                    for e in report.evidence.iter().filter(|e| e.normalized != 0.0) {
                        let mark = if e.rational { "rational" } else { "no small convergent" };
                        println!(
                            "  [{:>3}] {:>22.15e}  {}/{}  err {:.1e}  {mark}",
                            e.index, e.normalized, e.p, e.q, e.error
                        );
                    }
                }
            }
            Ok(Done::Ok)
        }
        Command::Construct { r, lambda } => {
            let r: Rat = rat::parse(r)?;
            let lambda: Rat = rat::parse(lambda)?;
            let c = search::construct_exact_value(&r, &lambda)?;
            let value = json!({
                "r": r.to_string(),
                "lambda": lambda.to_string(),
                "exact": c.t.is_some(),
                "t": c.t.as_ref().map(|t| t.to_string()).unwrap_or_else(|| c.t_f64.to_string()),
                "a": c.a,
                "value": c.value.as_ref().map(|v| v.to_string()).unwrap_or_else(|| c.value_f64.to_string()),
                "holds": c.holds,
            });
            match cli.format {
                Format::Json => print_json(&value)?,
                Format::Text => {
                    let kind = if c.t.is_some() { "exact" } else { "floating point" };
                    println!("t = {} ({kind})", value["t"].as_str().unwrap_or_default());
                    println!("h = diag(1/t, 1, t, 1, 1) x I3, a = {:?}", c.a);
                    println!("F at a = {}  (target {r})", value["value"].as_str().unwrap_or_default());
                }
            }
            Ok(if c.holds { Done::Ok } else { Done::Failed })
        }
    }
}

fn show(object: Object, format: Format) -> Result<()> {
    let w = w_literal();
    let (name, text, extra): (&str, String, Value) = match object {
        Object::W => ("w", w.to_tensor_text(), serde_json::to_value(&w)?),
        Object::S => {
            let gens: Vec<String> = s_generators().iter().map(|t| t.to_text()).collect();
            (
                "S",
                format!("span({})", gens.join(", ")),
                json!(gens),
            )
        }
        Object::F => {
            let f = cubic_form(&w);
            let dense: Vec<Value> = multi_indices(5, 3)
                .into_iter()
                .map(|idx| json!({"exponents": idx, "value": f.coeff(&idx).to_string()}))
                .collect();
            ("F", f.to_text("a"), json!(dense))
        }
        Object::Q => ("Q", q_form().to_text("a"), Value::Null),
        Object::Phi2w => ("Phi2(w)", quadratic_form(&w).to_text("a"), Value::Null),
        Object::Phi3w => {
            let m = composite_matrix(&w);
            ("phi3(w)", m.to_text(), serde_json::to_value(&m)?)
        }
        Object::Pfaffians => {
            let p: Vec<String> = pfaffians(&w).iter().map(|f| f.to_text("l")).collect();
            ("Pfaffians(w)", p.join("\n"), json!(p))
        }
        Object::Phi1barw => {
            let m = phi1_bar(&w);
            ("phi1_bar(w)", m.to_text(), serde_json::to_value(&m)?)
        }
        Object::Phi1w => {
            let q = ternary_form(&w);
            ("Phi1(w)", q.to_text(), serde_json::to_value(&q)?)
        }
        Object::Delta => ("Delta(w)", delta(&w).to_string(), Value::Null),
    };
    match format {
        Format::Text => println!("{text}"),
        Format::Json => print_json(&json!({"object": name, "text": text, "value": extra}))?,
    }
    Ok(())
}
