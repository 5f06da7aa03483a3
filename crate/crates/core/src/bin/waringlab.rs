use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use waringlab::curves::{construct_qsa, curve_zoo, random_parameters, rnc_point_to_form, ParamCurve};
use waringlab::rankengine::{non_uniqueness_set, rank_profile};
use waringlab::report::{self, Report};
use waringlab::rng::{seeded, DEFAULT_HEIGHT};
use waringlab::suites::{init_threads, run_suite, SuiteConfig};
use waringlab::veronese::{a43_construct, a43_verify, detect_configuration, h_values, PointSet};
use waringlab::{BinaryForm, Error};

#[derive(Parser)]
#[command(name = "waringlab", version, about = "Exact rank and decomposition checks for rational normal curves and Veronese varieties")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample or instance count (command specific).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Bound H on random integer coefficients.
    #[arg(long = "max-coeff", global = true, default_value_t = DEFAULT_HEIGHT)]
    max_coeff: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Border, cactus and Waring rank of a binary form given as `d:c0,...,cd`.
    RankProfile { form: String },
    /// Intersection of the spans of sampled irredundant decompositions.
    Wq {
        form: String,
        /// Decomposition size; defaults to the rank.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Runs a named check suite: a3, a2, q1, q2, q3, a45, a43, i1.
    Verify { suite: String },
    /// Builds and checks a point spanned by a binary form on a line and general points.
    A43 {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        d: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
    },
    /// h^0, h^1 of I_S(d) for a point set file and the configuration forcing h^1 > 0.
    H1 {
        file: PathBuf,
        #[arg(long)]
        d: usize,
        /// Expected ambient dimension; checked against the file.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Intersects the spans of two random parameter sets on a curve.
    Qsa {
        /// `rnc`, `gap`, `random`, or a curve definition file.
        #[arg(long, default_value = "rnc")]
        curve: String,
        /// Ambient dimension for the named curves.
        #[arg(long, default_value_t = 4)]
        r: usize,
    },
}

fn rank_profile_cmd(form: &str) -> Result<(Value, Value, bool), Error> {
    let f = BinaryForm::parse(form)?;
    let p = rank_profile(&f)?;
    Ok((json!({ "form": form }), report::rank_profile(&p), true))
}

fn wq_cmd(form: &str, t: Option<usize>, common: &Common) -> Result<(Value, Value, bool), Error> {
    let f = BinaryForm::parse(form)?;
    let w = non_uniqueness_set(&f, t, common.samples, common.seed)?;
    let mut out = report::wq(&w);
    if w.family_exhausted {
        out["reason"] = json!("no irredundant decomposition of this size was found");
    } else if !w.certified_point {
        out["reason"] = json!("intersection of sampled spans is larger than the point");
    }
    Ok((json!({ "form": form, "t": t, "samples": common.samples }), out, w.certified_point))
}

fn verify_cmd(suite: &str, common: &Common) -> Result<(Value, Value, bool), Error> {
    let cfg = SuiteConfig { seed: common.seed, samples: common.samples, height: common.max_coeff };
    let r = run_suite(suite, &cfg)?;
    for c in r.failures() {
        eprintln!("FAIL {}: {}", c.label, c.detail);
    }
    eprintln!("{}: {}/{} cases passed", r.name, r.passed, r.total);
    Ok((json!({ "suite": suite, "samples": common.samples, "max_coeff": common.max_coeff }), r.to_json(), r.pass))
}

fn a43_cmd(n: usize, d: usize, b: usize, k: usize, common: &Common) -> Result<(Value, Value, bool), Error> {
    let samples = common.samples.unwrap_or(12);
    let inst = a43_construct(n, d, b, k, common.seed)?;
    let r = a43_verify(&inst, samples, common.seed.wrapping_add(1))?;
    let out = json!({ "instance": report::a43_instance(&inst), "verification": report::a43_report(&r) });
    Ok((json!({ "n": n, "d": d, "b": b, "k": k, "samples": samples }), out, r.pass))
}

fn h1_cmd(file: &PathBuf, d: usize, n: Option<usize>) -> Result<(Value, Value, bool), Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    let s = PointSet::parse(&text)?;
    if let Some(n) = n {
        if n != s.n() {
            return Err(Error::AmbientMismatch { expected: n + 1, found: s.n() + 1 });
        }
    }
    let inputs = json!({ "file": file.display().to_string(), "n": s.n(), "d": d, "size": s.len() });
    if d < 6 || s.len() > 4 * d - 5 {
        let r = h_values(&s, d)?;
        let mut out = report::h1(&r);
        out["witness_search"] = json!("skipped: needs d >= 6 and |S| <= 4d - 5");
        return Ok((inputs, out, true));
    }
    let r = detect_configuration(&s, d)?;
    let pass = r.witness.is_some() == (r.h1 > 0);
    Ok((inputs, report::h1(&r), pass))
}

fn qsa_cmd(curve: &str, r: usize, common: &Common) -> Result<(Value, Value, bool), Error> {
    let mut rng = seeded(common.seed);
    let c = match curve {
        "rnc" | "gap" | "random" => {
            let zoo = curve_zoo(&mut rng, r, common.max_coeff)?;
            zoo.into_iter().find(|(name, _)| *name == curve).expect("named curve").1
        }
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            ParamCurve::parse(&text)?
        }
    };
    let (s, a) = random_parameters(&mut rng, c.r(), common.max_coeff.saturating_mul(common.max_coeff));
    let res = construct_qsa(&c, &s, &a)?;
    let mut out = report::qsa(&res);
    let mut pass = res.s_irredundant && res.a_irredundant;
    if c.is_rational_normal() {
        let rank = rank_profile(&rnc_point_to_form(&res.q)?)?.rank;
        out["rank"] = json!(rank);
        pass &= rank == c.r() / 2 + 1;
    } else {
        out["rank"] = Value::Null;
        out["note"] = json!("rank is not certified for curves other than the rational normal curve");
    }
    let inputs = json!({
        "curve": curve,
        "r": c.r(),
        "degree": c.degree(),
        "s_params": report::vector(&s),
        "a_params": report::vector(&a),
    });
    Ok((inputs, out, pass))
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    let common = &cli.common;
    let start = Instant::now();
    let (name, key, result) = match &cli.command {
        Command::RankProfile { form } => ("rank-profile", "rank-profile", rank_profile_cmd(form)),
        Command::Wq { form, t } => ("wq", "wq", wq_cmd(form, *t, common)),
        Command::Verify { suite } => ("verify", suite.as_str(), verify_cmd(suite, common)),
        Command::A43 { n, d, b, k } => ("a43", "a43", a43_cmd(*n, *d, *b, *k, common)),
        Command::H1 { file, d, n } => ("h1", "h1", h1_cmd(file, *d, *n)),
        Command::Qsa { curve, r } => ("qsa", "qsa", qsa_cmd(curve, *r, common)),
    };
    let (inputs, outputs, pass) = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = Report::new(name, key, common.seed, inputs, outputs, pass, start.elapsed().as_millis() as u64);
    let text = report.to_json();
    // a closed pipe (e.g. `| head`) is not an error
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(path) = &common.json {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
