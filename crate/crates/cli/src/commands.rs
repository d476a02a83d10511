use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};

use qframes::geom::{
    bound_probabilities, bound_rotation_elements, e_tensor, e_tensor_pre, identity_combinations, max_abs_e,
    sample_rotation, sweep, BoundReport, RotationMatrix,
};
use qframes::ncalg::{expand_terms_eps, CopyId};
use qframes::spinops::{classical_eval, Assignment};
use qframes::System;

use crate::config::{parse_axis, parse_direction, parse_matrix, Format, RunConfig};
use crate::eval::{eval, Value as ExprValue};
use crate::parse::parse_for;
use crate::suites::{copy_summary, run_suite, CheckRecord, Suite};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, clap::Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize { expr: String },
    /// Normal form of `[a, b]`.
    Commutator { a: String, b: String },
    /// Normal form with every coefficient expanded in eps = 1 - q up to --order.
    Expand { expr: String },
    /// Run a verification suite.
    Verify { suite: Suite },
    /// Evaluate an uncertainty bound (numeric only with --q).
    #[command(subcommand)]
    Bound(BoundCommand),
    /// E-tensor of a rotation: --matrix, or sample 0 of --seed.
    Etensor {
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Per-sample max |E| and bound over random rotations (needs --q).
    Sweep,
    /// Evaluate with commuting numbers substituted for generators.
    ClassicalEval {
        expr: String,
        /// `s1=θ,ω` or `g1=θ,ω` set a spin or Stern-Gerlach copy from angles;
        /// `x1=re[,im]` sets one generator.
        #[arg(long = "set", allow_hyphen_values = true)]
        set: Vec<String>,
    },
    /// Print the rewrite rules, one per line.
    DumpRules,
}

#[derive(Clone, Debug, PartialEq, clap::Subcommand)]
pub enum BoundCommand {
    /// Probability bound for apparatuses with spin n and device m directions.
    Probabilities {
        #[arg(allow_hyphen_values = true)]
        n_i: String,
        #[arg(allow_hyphen_values = true)]
        m_i: String,
        #[arg(allow_hyphen_values = true)]
        n_j: String,
        #[arg(allow_hyphen_values = true)]
        m_j: String,
    },
    /// Bound on the product of spreads of R_ij and R_kl.
    Rotation {
        i: String,
        j: String,
        k: String,
        l: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
}

/// Result of one command, ready for any output format.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub csv: Option<String>,
    pub pass: bool,
}

impl Outcome {
    fn new(command: &str, body: Value, text: String, pass: bool) -> Self {
        let mut report = Map::new();
        report.insert("schema".into(), json!(1));
        report.insert("command".into(), json!(command));
        report.insert("pass".into(), json!(pass));
        if let Value::Object(m) = body {
            report.extend(m);
        }
        Self { report: Value::Object(report), text, csv: None, pass }
    }

    /// Output in the requested format; CSV only where a table exists.
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&self.report).expect("json value"))),
            Format::Text => Ok(self.text.clone()),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| CliError::Usage("csv output is available for bound, etensor and sweep".into())),
        }
    }
}

fn to_json<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

pub fn run(cfg: &RunConfig, cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Normalize { expr } => normalize(cfg, "normalize", expr, None),
        Command::Commutator { a, b } => normalize(cfg, "commutator", &format!("[{a}, {b}]"), Some((a, b))),
        Command::Expand { expr } => expand(cfg, expr),
        Command::Verify { suite } => verify(cfg, *suite),
        Command::Bound(b) => bound(cfg, b),
        Command::Etensor { matrix } => etensor(cfg, matrix.as_deref()),
        Command::Sweep => run_sweep(cfg),
        Command::ClassicalEval { expr, set } => classical(cfg, expr, set),
        Command::DumpRules => dump_rules(cfg),
    }
}

fn config_json(cfg: &RunConfig) -> Value {
    json!({"n_spin": cfg.n_spin, "n_sg": cfg.n_sg, "rotation": cfg.with_rotation})
}

fn evaluate(cfg: &RunConfig, sys: &System, src: &str) -> Result<ExprValue, CliError> {
    eval(&parse_for(src, cfg.shape())?, sys)?.normalize(sys)
}

fn normalize(cfg: &RunConfig, command: &str, src: &str, pair: Option<(&String, &String)>) -> Result<Outcome, CliError> {
    // Parse each side on its own so that error columns refer to what the
    // user typed.
    if let Some((a, b)) = pair {
        parse_for(a, cfg.shape())?;
        parse_for(b, cfg.shape())?;
    }
    let sys = cfg.system()?;
    let v = evaluate(cfg, &sys, src)?;
    let rendered = v.render(&sys);
    let terms = match &v {
        ExprValue::Scalar(p) => p.len(),
        ExprValue::Matrix(m) => m.entries.iter().flatten().map(|p| p.len()).sum(),
    };
    Ok(Outcome::new(
        command,
        json!({"input": src, "system": config_json(cfg), "result": rendered, "terms": terms}),
        format!("{rendered}\n"),
        true,
    ))
}

fn expand(cfg: &RunConfig, src: &str) -> Result<Outcome, CliError> {
    let sys = cfg.system()?;
    let ExprValue::Scalar(p) = evaluate(cfg, &sys, src)? else {
        return Err(CliError::Usage("expand needs a scalar expression".into()));
    };
    let series = expand_terms_eps(&p, cfg.eps_order);
    let mut text = String::new();
    let mut rows = Vec::new();
    for (w, s) in &series {
        let word = w.render(&sys);
        let rendered = if s.is_zero() { "0".to_string() } else { s.to_string() };
        text.push_str(&format!("{word}: {rendered}\n"));
        rows.push(json!({"word": word, "series": rendered, "first_nonzero": s.first_nonzero()}));
    }
    if series.is_empty() {
        text.push_str("0\n");
    }
    Ok(Outcome::new(
        "expand",
        json!({"input": src, "system": config_json(cfg), "order": cfg.eps_order, "terms": rows}),
        text,
        true,
    ))
}

fn verify(cfg: &RunConfig, suite: Suite) -> Result<Outcome, CliError> {
    let records = run_suite(suite, cfg)?;
    let pass = records.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &records {
        text.push_str(&format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.check));
        if let Some(res) = r.residual.as_ref().filter(|_| !r.pass) {
            text.push_str(&format!("  residual: {res}\n"));
        }
        if let Some(k) = r.first_nonzero_eps_order {
            text.push_str(&format!("  first nonzero eps order: {k}\n"));
        }
    }
    let failures: Vec<&CheckRecord> = records.iter().filter(|r| !r.pass).collect();
    Ok(Outcome::new(
        "verify",
        json!({"suite": suite, "config": config_json(cfg), "checks": records, "failures": failures}),
        text,
        pass,
    ))
}

fn bound_outcome(cfg: &RunConfig, kind: &str, r: BoundReport) -> Outcome {
    let mut body = to_json(&r);
    let symbolic = match &r.indices {
        Some(_) => format!("{} * (1 - q)", r.vector_part),
        None => format!("{} * (1 - q)/4", r.vector_part),
    };
    let text = match &cfg.q {
        Some(_) => format!("bound {} (prefactor {}, vector part {})\n", r.bound, r.prefactor, r.vector_part),
        None => format!("bound {symbolic}\n"),
    };
    if let Value::Object(m) = &mut body {
        m.insert("kind".into(), json!(kind));
        m.insert("symbolic".into(), json!(symbolic));
        if cfg.q.is_none() {
            // Keep q symbolic: numeric fields computed at q = 1 are dropped.
            m.insert("q".into(), json!("q"));
            m.insert("prefactor".into(), json!(if r.indices.is_some() { "1 - q" } else { "(1 - q)/4" }));
            m.insert("bound".into(), Value::Null);
        }
    }
    let mut out = Outcome::new("bound", body, text, true);
    let q = cfg.q.as_ref().map(|q| q.to_string()).unwrap_or_else(|| "q".into());
    let bound = if cfg.q.is_some() { r.bound.to_string() } else { String::new() };
    out.csv = Some(format!("kind,q,prefactor,vector_part,bound\n{kind},{q},{},{},{bound}\n", r.prefactor, r.vector_part));
    out
}

fn bound(cfg: &RunConfig, b: &BoundCommand) -> Result<Outcome, CliError> {
    let q = cfg.q_or_one();
    match b {
        BoundCommand::Probabilities { n_i, m_i, n_j, m_j } => {
            let d = |s: &str| parse_direction(s);
            let r = bound_probabilities(d(n_i)?, d(m_i)?, d(n_j)?, d(m_j)?, &q)?;
            let mut out = bound_outcome(cfg, "probabilities", r);
            if let Value::Object(m) = &mut out.report {
                m.insert("indices".into(), Value::Null);
            }
            Ok(out)
        }
        BoundCommand::Rotation { i, j, k, l, matrix } => {
            let r = match matrix {
                Some(m) => parse_matrix(m)?,
                None => RotationMatrix::identity(),
            };
            let rep = bound_rotation_elements(&r, parse_axis(i)?, parse_axis(j)?, parse_axis(k)?, parse_axis(l)?, &q)?;
            Ok(bound_outcome(cfg, "rotation", rep))
        }
    }
}

fn etensor(cfg: &RunConfig, matrix: Option<&str>) -> Result<Outcome, CliError> {
    let (r, source) = match matrix {
        Some(m) => (parse_matrix(m)?, json!("matrix")),
        None => (sample_rotation(cfg.seed, 0), json!({"seed": cfg.seed, "sample": 0})),
    };
    let e = e_tensor(&r);
    let pre = e_tensor_pre(&r);
    let (max, arg) = max_abs_e(&e);
    let mut two_forms = 0.0f64;
    let mut entries = Vec::new();
    let mut csv = String::from("i,j,k,l,E\n");
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    two_forms = two_forms.max((e[i][j][k][l] - pre[i][j][k][l]).abs());
                    entries.push(json!([i, j, k, l, e[i][j][k][l]]));
                    csv.push_str(&format!("{i},{j},{k},{l},{}\n", e[i][j][k][l]));
                }
            }
        }
    }
    let identities: Vec<Value> = identity_combinations(&r, &e).iter().map(|(a, b)| json!({"lhs": a, "rhs": b})).collect();
    let text = format!(
        "max |E| = {max} at ({}, {}, {}, {})\ntwo-form difference {two_forms:e}\n",
        arg[0], arg[1], arg[2], arg[3]
    );
    let mut out = Outcome::new(
        "etensor",
        json!({
            "rotation": r.rows(),
            "source": source,
            "max_abs_e": max,
            "argmax": arg,
            "two_form_difference": two_forms,
            "identities": identities,
            "entries": entries,
        }),
        text,
        true,
    );
    out.csv = Some(csv);
    Ok(out)
}

fn run_sweep(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let q = cfg.q.clone().ok_or_else(|| CliError::Usage("sweep needs a numeric --q".into()))?;
    let rows = sweep(cfg.samples, cfg.seed, &q)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let csv_text = String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?).expect("utf8 csv");
    let min = rows.iter().map(|r| r.max_e).fold(f64::INFINITY, f64::min);
    let mut out = Outcome::new(
        "sweep",
        json!({"samples": cfg.samples, "seed": cfg.seed, "q": q.to_string(), "min_max_e": min, "rows": rows}),
        csv_text.clone(),
        true,
    );
    out.csv = Some(csv_text);
    Ok(out)
}

fn copy_for(sys: &System, kind: char, index: usize) -> Result<CopyId, CliError> {
    let r = match kind {
        's' => sys.spin_copy(index),
        'g' => sys.sg_copy(index),
        _ => return Err(CliError::Usage(format!("unknown copy kind {kind:?}; expected s or g"))),
    };
    Ok(r?)
}

fn assignment(sys: &System, set: &[String]) -> Result<Assignment, CliError> {
    let mut a = Assignment::new();
    for item in set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--set {item:?}: expected name=value")))?;
        let nums: Vec<f64> = value
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("--set {item:?}: bad number {t:?}"))))
            .collect::<Result<_, _>>()?;
        let mut chars = name.chars();
        let head = chars.next().unwrap_or(' ');
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| CliError::Usage(format!("--set {item:?}: bad index")))?;
        match (head, nums.as_slice()) {
            ('s' | 'g', [theta, omega]) => {
                let copy = copy_for(sys, head, index)?;
                a.set_copy(copy, Complex64::new((theta / 2.0).cos(), 0.0), Complex64::from_polar((theta / 2.0).sin(), *omega));
            }
            ('x' | 'y' | 'a' | 'c' | 'r', [re, rest @ ..]) if rest.len() <= 1 => {
                let g = sys
                    .generator(head, index, false)
                    .ok_or_else(|| CliError::Usage(format!("--set {item:?}: no such generator")))?;
                a.set(g.copy, g.letter, Complex64::new(*re, rest.first().copied().unwrap_or(0.0)));
            }
            _ => return Err(CliError::Usage(format!("--set {item:?}: expected s1=θ,ω, g1=θ,ω or x1=re[,im]"))),
        }
    }
    Ok(a)
}

fn classical(cfg: &RunConfig, src: &str, set: &[String]) -> Result<Outcome, CliError> {
    let sys = cfg.system()?;
    let ExprValue::Scalar(p) = evaluate(cfg, &sys, src)? else {
        return Err(CliError::Usage("classical-eval needs a scalar expression".into()));
    };
    let q = cfg.q_or_one();
    let v = classical_eval(&p, &assignment(&sys, set)?, &q, &sys)?;
    Ok(Outcome::new(
        "classical-eval",
        json!({"input": src, "q": q.to_string(), "q_float": q.to_f64(), "re": v.re, "im": v.im}),
        format!("{} {}\n", v.re, v.im),
        true,
    ))
}

fn dump_rules(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sys = cfg.system()?;
    let text = sys.dump_rules();
    let rules: Vec<&str> = text.lines().collect();
    Ok(Outcome::new(
        "dump-rules",
        json!({"system": config_json(cfg), "copies": copy_summary(&sys), "rules": rules}),
        text.clone(),
        true,
    ))
}
