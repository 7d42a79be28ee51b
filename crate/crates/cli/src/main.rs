//! `coxforge`: command-line front end.
//!
//! Exit codes: 0 on success, 2 on input or validation errors, 1 when an
//! internal invariant check fails.

mod json;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coxforge::blowup::{
    blow_up_weighted_bundle, blow_up_wps, blowup_map_description, bundle_spec_from_presentation, discrepancy,
    format_substitutions, solve_exceptional_weight, BlowupSpec, DEFAULT_SEARCH_BOUND,
};
use coxforge::coxpres::{is_well_formed, presentations_equivalent, well_form_matrix, wps_well_form};
use coxforge::format::{
    format_ideal, parse_discrepancy_input, parse_fan, parse_matrix, parse_presentation, write_fan, write_matrix,
    write_presentation,
};
use coxforge::galefan::{fan_from_presentation, gale_dual, irrelevant_ideal_from_fan, star_subdivision, weights_from_rays};
use coxforge::intlattice::{minor_gcd, standardize};
use coxforge::singular::weighted_bundle_charts;
use coxforge::vgit::{
    chambers_rank2, default_degree_bound, format_monomial, graded_ring_generators, model_at_chamber, two_ray_game,
};
use coxforge::{CoxError, CoxPresentation, Fan, IntMatrix, Ray2, WeightedBundleSpec, WellFormingCertificate, WellFormingStep};
use num_bigint::BigInt;
use serde_json::{json, Value};

const DEGREE_BOUND_VAR: &str = "COXFORGE_DEGREE_BOUND";

#[derive(Parser)]
#[command(name = "coxforge", version, about = "Exact toolkit for Cox presentations of toric varieties and stacks")]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Write a weight matrix as transform * standard matrix
    Standardize { file: PathBuf },
    /// Standardize and well-form a weight matrix, with a certificate
    Wellform { file: PathBuf },
    /// Well-form weighted projective space weights
    Wps {
        #[arg(required = true)]
        weights: Vec<u64>,
    },
    /// Rays of the Gale dual of a standard weight matrix
    Gale { file: PathBuf },
    /// Cox presentation of a fan
    Fan2cox { file: PathBuf },
    /// Fan of a well-formed presentation
    Cox2fan {
        file: PathBuf,
        /// Also write the fan as a Graphviz graph to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Star subdivision of a fan at a lattice vector
    Subdivide {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. 2,1,2,1,0
        #[arg(long, allow_hyphen_values = true)]
        ray: String,
    },
    /// Cyclic quotient types of the charts of a weighted bundle
    Charts(ChartsArgs),
    /// Chambers and chamber models of a rank-2 presentation
    Chambers { file: PathBuf },
    /// The 2-ray game of a rank-2 presentation
    Game {
        file: PathBuf,
        /// Also write the game as a Graphviz graph to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Degree bound for target generators (default: per end)
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Monomial generators of the ring graded along a character
    Gens {
        file: PathBuf,
        /// Character, e.g. 0,1
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Weighted blow-up of a bundle over P^1, or of a weighted projective space
    Blowup(BlowupArgs),
    /// Discrepancy of a weighted blow-up, or the exceptional weight hitting a target
    Discrepancy { file: PathBuf },
    /// Whether two presentations agree up to renaming variables
    Equiv { first: PathBuf, second: PathBuf },
}

#[derive(Args)]
struct ChartsArgs {
    /// Presentation of a bundle over P^1 in the layout [[1,1,-omega],[0,0,1,a]]
    file: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated twists omega_0..omega_m
    #[arg(long)]
    omega: Option<String>,
    /// Comma-separated fibre weights a_1..a_m
    #[arg(long)]
    a: Option<String>,
}

#[derive(Args)]
struct BlowupArgs {
    /// Bundle presentation over P^1
    file: Option<PathBuf>,
    /// Centre as `r,k`: x_r != 0 and y_k != 0
    #[arg(long)]
    center: Option<String>,
    /// Comma-separated weights b_0..b_m on the fibre coordinates
    #[arg(long)]
    b: Option<String>,
    #[arg(long, default_value = "xi")]
    new_var: String,
    /// Weighted projective space weights a_0..a_n (switches to the rank-2 construction)
    #[arg(long)]
    wps: Option<String>,
    /// Last coordinate kept by the centre
    #[arg(long)]
    k: Option<usize>,
    /// Exceptional weight
    #[arg(long)]
    alpha: Option<i64>,
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl From<CoxError> for Failure {
    fn from(e: CoxError) -> Self {
        match e {
            CoxError::Invariant(_) => Failure::Invariant(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: coxforge::Result<T>) -> Outcome<T> {
    r.map_err(|e| match e {
        CoxError::Invariant(_) => Failure::Invariant(e.to_string()),
        other => input(format!("{}: {other}", path.display())),
    })
}

fn load_presentation(path: &Path) -> Outcome<CoxPresentation> {
    with_path(path, parse_presentation(&read(path)?))
}

fn is_presentation_text(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("rank"))
}

/// A weight matrix from a matrix file or from the weights of a presentation file.
fn load_weights(path: &Path) -> Outcome<(IntMatrix, Option<CoxPresentation>)> {
    let text = read(path)?;
    if is_presentation_text(&text) {
        let p = with_path(path, parse_presentation(&text))?;
        Ok((p.weights().clone(), Some(p)))
    } else {
        Ok((with_path(path, parse_matrix(&text))?, None))
    }
}

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> Outcome<Vec<T>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| input(format!("{what}: bad entry `{t}`"))))
        .collect()
}

fn parse_ray(s: &str) -> Outcome<Ray2> {
    let v: Vec<BigInt> = parse_list("character", s)?;
    match &v[..] {
        [x, y] => Ok(Ray2(x.clone(), y.clone())),
        _ => Err(input("character needs two coordinates")),
    }
}

fn env_degree_bound() -> Outcome<Option<u32>> {
    match std::env::var(DEGREE_BOUND_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| input(format!("{DEGREE_BOUND_VAR} must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn write_file(path: &Path, text: &str) -> Outcome<()> {
    std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn describe_certificate(c: &WellFormingCertificate) -> String {
    if c.is_empty() {
        return "certificate: empty\n".into();
    }
    let mut s = format!("certificate: {} steps\n", c.len());
    for (i, step) in c.steps.iter().enumerate() {
        let line = match step {
            WellFormingStep::RowTransform(u) => {
                let rows: Vec<String> = u
                    .matrix()
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("row transform [{}]", rows.join("; "))
            }
            WellFormingStep::ColumnScale { column, factor, row } => {
                format!("scale column {column} by {factor} (row {row} divisible off the column)")
            }
            WellFormingStep::RowDivide { row, factor } => format!("divide row {row} by {factor}"),
            WellFormingStep::RowRescaleRational(f) => {
                format!("rescale rows by {}", f.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            }
        };
        let _ = writeln!(s, "  {}. {line}", i + 1);
    }
    s
}

fn fan_dot(f: &Fan, vars: &[String]) -> String {
    let mut s = String::from("graph fan {\n");
    for (i, r) in f.rays().iter().enumerate() {
        let coords: Vec<String> = r.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "  r{i} [label=\"{} ({})\"];", vars[i], coords.join(","));
    }
    for (j, c) in f.max_cones().iter().enumerate() {
        let _ = writeln!(s, "  c{j} [shape=box, label=\"cone {}\"];", j + 1);
        for i in c {
            let _ = writeln!(s, "  c{j} -- r{i};");
        }
    }
    s.push_str("}\n");
    s
}

struct Output {
    text: String,
    json: Value,
}

fn run(cli: Cli) -> Outcome<Output> {
    match cli.verb {
        Verb::Standardize { file } => {
            let (m, _) = load_weights(&file)?;
            let (g, n) = with_path(&file, standardize(&m))?;
            let d = with_path(&file, minor_gcd(&m, m.rows()))?;
            Ok(Output {
                text: format!("d = {d}\ntransform\n{}standard\n{}", write_matrix(&g), write_matrix(&n)),
                json: json!({"d": json::int(&d), "transform": json::matrix(&g), "standard": json::matrix(&n)}),
            })
        }
        Verb::Wellform { file } => {
            let (m, p) = load_weights(&file)?;
            if matches!(is_well_formed(&m), Ok(true)) {
                return Ok(Output {
                    text: format!("already well-formed\n{}", write_matrix(&m)),
                    json: json!({"already_well_formed": true, "weights": json::matrix(&m)}),
                });
            }
            let (h, cert) = with_path(&file, well_form_matrix(&m))?;
            let mut text = format!("well-formed weights\n{}", write_matrix(&h));
            text.push_str(&describe_certificate(&cert));
            let mut j = json!({
                "already_well_formed": false,
                "weights": json::matrix(&h),
                "certificate": json::certificate(&cert),
            });
            if let Some(p) = p {
                let q = with_path(
                    &file,
                    CoxPresentation::new(p.variables().to_vec(), h, p.irrelevant().clone(), false),
                )?;
                text.push_str("presentation\n");
                text.push_str(&write_presentation(&q));
                j["presentation"] = json::presentation(&q);
            }
            Ok(Output { text, json: j })
        }
        Verb::Wps { weights } => {
            let w = wps_well_form(&weights)?;
            let s: Vec<String> = w.iter().map(ToString::to_string).collect();
            Ok(Output {
                text: format!("P({})\n", s.join(",")),
                json: json!({"weights": w}),
            })
        }
        Verb::Gale { file } => {
            let (m, _) = load_weights(&file)?;
            let rays = with_path(&file, gale_dual(&m))?;
            let mut text = String::new();
            for r in &rays {
                let _ = writeln!(text, "{}", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
            }
            Ok(Output {
                text,
                json: json!({"rays": rays.iter().map(|r| json::ints(r)).collect::<Vec<_>>()}),
            })
        }
        Verb::Fan2cox { file } => {
            let fan = with_path(&file, parse_fan(&read(&file)?))?;
            let w = weights_from_rays(fan.rays())?;
            let ideal = irrelevant_ideal_from_fan(&fan);
            let p = CoxPresentation::unnamed(w.clone(), ideal.components().to_vec(), false)
                .or_else(|_| CoxPresentation::unnamed(w, ideal.components().to_vec(), true))?;
            Ok(Output {
                text: write_presentation(&p),
                json: json::presentation(&p),
            })
        }
        Verb::Cox2fan { file, dot } => {
            let p = load_presentation(&file)?;
            let fan = with_path(&file, fan_from_presentation(&p))?;
            if let Some(d) = dot {
                write_file(&d, &fan_dot(&fan, p.variables()))?;
            }
            Ok(Output {
                text: write_fan(&fan),
                json: json::fan(&fan),
            })
        }
        Verb::Subdivide { file, ray } => {
            let fan = with_path(&file, parse_fan(&read(&file)?))?;
            let w: Vec<BigInt> = parse_list("ray", &ray)?;
            let sub = star_subdivision(&fan, &w)?;
            Ok(Output {
                text: write_fan(&sub),
                json: json::fan(&sub),
            })
        }
        Verb::Charts(args) => {
            let spec = match (&args.file, args.n, args.m) {
                (Some(f), None, None) => with_path(f, bundle_spec_from_presentation(&load_presentation(f)?))?,
                (None, Some(n), Some(m)) => {
                    let omega = parse_list("omega", args.omega.as_deref().ok_or_else(|| input("--omega is required"))?)?;
                    let a = match args.a.as_deref() {
                        Some(s) if !s.is_empty() => parse_list("a", s)?,
                        _ => Vec::new(),
                    };
                    WeightedBundleSpec::new(n, m, omega, a)?
                }
                _ => return Err(input("give either a presentation file or --n, --m, --omega and --a")),
            };
            let charts = weighted_bundle_charts(&spec)?;
            let text = charts.iter().map(|c| format!("{c}\n")).collect();
            Ok(Output {
                text,
                json: json!({"charts": charts.iter().map(json::chart).collect::<Vec<_>>()}),
            })
        }
        Verb::Chambers { file } => {
            let p = load_presentation(&file)?;
            let (walls, chambers) = with_path(&file, chambers_rank2(&p))?;
            let mut text = format!(
                "walls {}\n",
                walls.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            );
            let mut js = Vec::new();
            for c in &chambers {
                let model = model_at_chamber(&p, c)?;
                let _ = writeln!(
                    text,
                    "chamber {} {}..{}: {}",
                    c.index,
                    c.start,
                    c.end,
                    format_ideal(model.irrelevant(), model.variables())
                );
                js.push(json::chamber(c, &model));
            }
            Ok(Output {
                text,
                json: json!({
                    "walls": walls.iter().map(json::ray).collect::<Vec<_>>(),
                    "chambers": js,
                }),
            })
        }
        Verb::Game { file, dot, bound } => {
            let p = load_presentation(&file)?;
            let bound = match bound {
                Some(b) => Some(b),
                None => env_degree_bound()?,
            };
            let game = with_path(&file, two_ray_game(&p, bound))?;
            let vars = p.variables();
            if let Some(d) = dot {
                write_file(&d, &game.to_dot(vars))?;
            }
            Ok(Output {
                text: game.render(vars),
                json: json!({
                    "walls": game.walls.iter().map(json::ray).collect::<Vec<_>>(),
                    "clockwise": game.clockwise,
                    "models": game.chambers.iter().zip(&game.models).map(|(c, m)| json::chamber(c, m)).collect::<Vec<_>>(),
                    "crossings": game.crossings.iter().map(|c| json::crossing(c, vars)).collect::<Vec<_>>(),
                    "ends": [json::end(&game.ends.0, vars), json::end(&game.ends.1, vars)],
                }),
            })
        }
        Verb::Gens { file, chi, bound } => {
            let p = load_presentation(&file)?;
            let chi = parse_ray(&chi)?;
            let bound = match bound {
                Some(b) => b,
                None => match env_degree_bound()? {
                    Some(b) => b,
                    // characters off the column directions fall back to degree 2
                    None => default_degree_bound(&p, &chi).unwrap_or(2),
                },
            };
            let gens = with_path(&file, graded_ring_generators(&p, &chi, bound))?;
            let vars = p.variables();
            let text = gens.iter().map(|m| format!("{}\n", format_monomial(m, vars))).collect();
            Ok(Output {
                text,
                json: json!({"character": json::ray(&chi), "bound": bound, "generators": json::monomials(&gens, vars)}),
            })
        }
        Verb::Blowup(args) => blowup(args),
        Verb::Discrepancy { file } => {
            let d = with_path(&file, parse_discrepancy_input(&read(&file)?))?;
            match (d.unknown, &d.target) {
                (Some(i), Some(target)) => {
                    let bound = d.bound.unwrap_or(DEFAULT_SEARCH_BOUND);
                    let b = solve_exceptional_weight(&d.spec, i, &d.ci, target, bound)?;
                    Ok(Output {
                        text: format!("b_{i} = {b}\ndiscrepancy {target}\n"),
                        json: json!({"unknown": i, "value": b, "discrepancy": target.to_string()}),
                    })
                }
                _ => {
                    let a = discrepancy(&d.spec, &d.ci)?;
                    Ok(Output {
                        text: format!("discrepancy {a}\n"),
                        json: json!({"discrepancy": a.to_string()}),
                    })
                }
            }
        }
        Verb::Equiv { first, second } => {
            let p = load_presentation(&first)?;
            let q = load_presentation(&second)?;
            let same = presentations_equivalent(&p, &q);
            Ok(Output {
                text: if same { "equivalent\n".into() } else { "not equivalent\n".into() },
                json: json!({"equivalent": same}),
            })
        }
    }
}

fn blowup(args: BlowupArgs) -> Outcome<Output> {
    let p = if let Some(wps) = &args.wps {
        let a: Vec<i64> = parse_list("wps", wps)?;
        let k = args.k.ok_or_else(|| input("--k is required with --wps"))?;
        let alpha = args.alpha.ok_or_else(|| input("--alpha is required with --wps"))?;
        let b: Vec<i64> = parse_list("b", args.b.as_deref().ok_or_else(|| input("--b is required"))?)?;
        let mut p = blow_up_wps(&a, k, alpha, &b)?;
        if args.new_var != "y" {
            // rename the exceptional coordinate, which comes first
            let mut vars = p.variables().to_vec();
            if vars.contains(&args.new_var) {
                return Err(input(format!("variable {} already exists", args.new_var)));
            }
            vars[0] = args.new_var.clone();
            p = CoxPresentation::new(vars, p.weights().clone(), p.irrelevant().clone(), p.is_stacky())?;
        }
        p
    } else {
        let file = args.file.as_ref().ok_or_else(|| input("give a bundle presentation or --wps"))?;
        let base = load_presentation(file)?;
        let bundle = with_path(file, bundle_spec_from_presentation(&base))?;
        let center: Vec<usize> = parse_list("center", args.center.as_deref().ok_or_else(|| input("--center is required"))?)?;
        let [r, k] = center[..] else {
            return Err(input("--center takes r,k"));
        };
        let b: Vec<i64> = parse_list("b", args.b.as_deref().ok_or_else(|| input("--b is required"))?)?;
        let spec = BlowupSpec::new((r, k), k, bundle.fiber_weights()?, b, &args.new_var)?;
        blow_up_weighted_bundle(&base, &spec)?
    };
    let subs = blowup_map_description(&p, &args.new_var)?;
    let mut text = write_presentation(&p);
    text.push_str("map\n");
    text.push_str(&format_substitutions(&subs, &args.new_var));
    text.push('\n');
    let mut j = json::presentation(&p);
    j["map"] = json!(subs
        .iter()
        .map(|s| json!({"variable": s.variable, "exponent": s.exponent.to_string()}))
        .collect::<Vec<_>>());
    Ok(Output { text, json: j })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let as_json = cli.json;
    match run(cli) {
        Ok(out) => {
            let text = if as_json {
                format!("{}\n", serde_json::to_string(&out.json).expect("serializable"))
            } else {
                out.text
            };
            // a closed pipe downstream is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
