use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use qframes::coeff::LaurentPoly;
use qframes::geom::{
    e_tensor, e_tensor_pre, identity_combinations, no_sharp_rotation_check, row_equality_derivation,
    sample_rotation,
};
use qframes::ncalg::{Generator, Mode, NcPoly, RuleKind, Word};
use qframes::spinops::{
    classical_eval, commutator, prob_op, verify_all_orders, verify_covariance, verify_first_order,
    verify_properties, Assignment, Outcome, ALL_ORDERS_COMMUTATOR,
};
use qframes::suq2::{check_confluence, make_system, self_braid_rules, CopyKind};
use qframes::{GaussRational, Poly, System};

use crate::config::RunConfig;
use crate::eval::{eval, Value as ExprValue};
use crate::parse::parse_for;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Braiding,
    Properties,
    Covariance,
    #[value(name = "appendix-a2")]
    #[serde(rename = "appendix-a2")]
    AppendixA2,
    FirstOrder,
    A3,
    ClassicalLimit,
    Confluence,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Braiding,
        Suite::Properties,
        Suite::Covariance,
        Suite::AppendixA2,
        Suite::FirstOrder,
        Suite::A3,
        Suite::ClassicalLimit,
        Suite::Confluence,
    ];
}

/// One assertion. Failing records double as the machine-readable failure
/// output.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub pass: bool,
    pub inputs: Value,
    #[serde(rename = "residual-rendering")]
    pub residual: Option<String>,
    #[serde(rename = "first-nonzero-eps-order")]
    pub first_nonzero_eps_order: Option<usize>,
    pub details: Value,
}

impl CheckRecord {
    fn new(check: impl Into<String>, pass: bool, inputs: Value, details: Value) -> Self {
        Self { check: check.into(), pass, inputs, residual: None, first_nonzero_eps_order: None, details }
    }

    fn residual(mut self, r: Option<String>) -> Self {
        self.residual = r;
        self
    }
}

fn details<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    match suite {
        Suite::Braiding => braiding(cfg),
        Suite::Properties => properties(cfg),
        Suite::Covariance => covariance(cfg),
        Suite::AppendixA2 => all_orders(cfg),
        Suite::FirstOrder => first_order(cfg),
        Suite::A3 => a3(cfg),
        Suite::ClassicalLimit => classical_limit(cfg),
        Suite::Confluence => confluence(cfg),
    }
}

fn need_pairs(cfg: &RunConfig) -> Result<usize, CliError> {
    match cfg.apparatuses() {
        n if n >= 2 => Ok(n),
        n => Err(CliError::Usage(format!("this suite needs two apparatuses, the system has {n}"))),
    }
}

/// The eight spin/Stern-Gerlach cross relations as they are usually
/// written, each as `lhs - rhs`.
pub const CROSS_RELATIONS: [&str; 8] = [
    "x1 * a1 - a1 * x1",
    "q * x1 * c1 - c1 * x1 - (q - q^-1) * a1 * y1",
    "a1 * y1 - q * y1 * a1",
    "y1 * c1 - c1 * y1",
    "x1 * c1* - q * c1* * x1",
    "x1 * a1* - a1* * x1 - (1 - q^2) * c1* * y1",
    "y1 * c1* - c1* * y1",
    "y1 * a1* - q * a1* * y1",
];

fn normalized_expr(src: &str, cfg: &RunConfig, sys: &System) -> Result<Poly, CliError> {
    match eval(&parse_for(src, cfg.shape())?, sys)?.normalize(sys)? {
        ExprValue::Scalar(p) => Ok(p),
        ExprValue::Matrix(_) => Err(CliError::Usage(format!("{src:?} is a matrix"))),
    }
}

fn braiding(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    if cfg.n_spin == 0 || cfg.n_sg == 0 {
        return Err(CliError::Usage("braiding needs at least one spin and one Stern-Gerlach copy".into()));
    }
    let sys = cfg.system()?;
    let mut out = Vec::new();

    let mut bad = Vec::new();
    for src in CROSS_RELATIONS {
        let r = normalized_expr(src, cfg, &sys)?;
        if !r.is_empty() {
            bad.push(format!("{src}: {}", sys.render(&r)));
        }
    }
    out.push(
        CheckRecord::new(
            "cross-relations",
            bad.is_empty(),
            json!({"copies": ["S1", "SG1"], "relations": CROSS_RELATIONS}),
            json!({"failing": bad.len()}),
        )
        .residual((!bad.is_empty()).then(|| bad.join("; "))),
    );

    let mut mismatched = Vec::new();
    for info in sys.copies() {
        let derived = self_braid_rules(&sys, info.id)?;
        let registered: BTreeMap<Word, Poly> = sys
            .rules()
            .iter()
            .filter(|r| r.kind == RuleKind::Order && r.lhs.0.copy == info.id && r.lhs.1.copy == info.id)
            .map(|r| (r.lhs_word(), r.rhs.clone()))
            .collect();
        if derived != registered {
            let show = |m: &BTreeMap<Word, Poly>| {
                m.iter().map(|(w, p)| format!("{} -> {}", w.render(&sys), sys.render(p))).collect::<Vec<_>>().join(", ")
            };
            mismatched.push(format!("copy {}: derived {{{}}} registered {{{}}}", info.id, show(&derived), show(&registered)));
        }
    }
    out.push(
        CheckRecord::new(
            "self-braiding",
            mismatched.is_empty(),
            json!({"copies": sys.copies().len()}),
            json!({"mismatched_copies": mismatched.len()}),
        )
        .residual((!mismatched.is_empty()).then(|| mismatched.join("; "))),
    );

    let mut outside = Vec::new();
    for rule in sys.rules() {
        let d = sys.normalize(&(&NcPoly::word(rule.lhs_word()) - &rule.rhs))?;
        if !d.is_empty() {
            outside.push(rule.render(&sys));
        }
    }
    out.push(
        CheckRecord::new(
            "rules-in-ideal",
            outside.is_empty(),
            json!({"rules": sys.rules().len()}),
            json!({"failing": outside.len()}),
        )
        .residual((!outside.is_empty()).then(|| outside.join("; "))),
    );

    let mut unitarity = Vec::new();
    for info in sys.copies() {
        let x = NcPoly::<GaussRational>::gen(Generator::alpha(info.id));
        let y = NcPoly::gen(Generator::gamma(info.id));
        let one = NcPoly::one();
        let a = &(&(&y.star() * &y) + &(&x.star() * &x)) - &one;
        let b = &(&(&x * &x.star()) + &(&y.star() * &y).scale(&LaurentPoly::q_pow(2))) - &one;
        for e in [a, b] {
            let r = sys.normalize(&e)?;
            if !r.is_empty() {
                unitarity.push(format!("{} -> {}", sys.render(&e), sys.render(&r)));
            }
        }
    }
    out.push(
        CheckRecord::new("unitarity", unitarity.is_empty(), json!({"copies": sys.copies().len()}), json!({}))
            .residual((!unitarity.is_empty()).then(|| unitarity.join("; "))),
    );
    Ok(out)
}

fn properties(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    let sys = cfg.system()?;
    (1..=cfg.apparatuses())
        .map(|i| {
            let r = verify_properties(i, &sys)?;
            Ok(CheckRecord::new(
                format!("properties[{i}]"),
                r.pass(),
                json!({"apparatus": i, "n_spin": cfg.n_spin, "n_sg": cfg.n_sg}),
                details(&r),
            ))
        })
        .collect()
}

fn covariance(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    let sys: System = make_system(cfg.n_spin, cfg.n_sg, true)?;
    (1..=cfg.apparatuses())
        .map(|i| {
            let r = verify_covariance(i, &sys)?;
            Ok(CheckRecord::new(
                format!("covariance[{i}]"),
                r.pass(),
                json!({"apparatus": i, "n_spin": cfg.n_spin, "n_sg": cfg.n_sg, "rotation": true}),
                details(&r),
            ))
        })
        .collect()
}

fn all_orders(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    need_pairs(cfg)?;
    let sys = cfg.system()?;
    let r = verify_all_orders(1, 2, ALL_ORDERS_COMMUTATOR, &sys, cfg.eps_order)?;
    let mut rec = CheckRecord::new(
        "all-orders[1,2]",
        r.pass(),
        json!({"i": 1, "j": 2, "transcribed_terms": r.transcribed_terms}),
        json!({"residual_terms": r.residual_terms, "horizon": r.horizon}),
    )
    .residual((!r.pass()).then(|| r.residual.clone()));
    rec.first_nonzero_eps_order = r.first_nonzero_order;
    Ok(vec![rec])
}

fn first_order(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    let n = need_pairs(cfg)?;
    let sys = cfg.system()?;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let r = verify_first_order(i, j, &sys, cfg.eps_order.max(1))?;
            let mut rec = CheckRecord::new(format!("first-order[{i},{j}]"), r.pass(), json!({"i": i, "j": j}), details(&r));
            rec.first_nonzero_eps_order = r.first_nonzero_order;
            out.push(rec);
        }
    }
    Ok(out)
}

/// Rotations used by the identity checks.
pub const IDENTITY_ROTATIONS: u64 = 100;

fn a3(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    let mut worst_identity = 0.0f64;
    let mut worst_forms = 0.0f64;
    for k in 0..IDENTITY_ROTATIONS {
        let r = sample_rotation(cfg.seed, k);
        let e = e_tensor(&r);
        for (lhs, rhs) in identity_combinations(&r, &e) {
            worst_identity = worst_identity.max((lhs - rhs).abs());
        }
        let pre = e_tensor_pre(&r);
        for (a, b) in e.iter().flatten().flatten().flatten().zip(pre.iter().flatten().flatten().flatten()) {
            worst_forms = worst_forms.max((a - b).abs());
        }
    }
    let inputs = json!({"rotations": IDENTITY_ROTATIONS, "seed": cfg.seed});
    let symbolic = row_equality_derivation();
    let no_sharp = no_sharp_rotation_check(cfg.samples, cfg.seed)?;
    Ok(vec![
        CheckRecord::new(
            "e-identities",
            worst_identity <= 1e-10,
            inputs.clone(),
            json!({"max_error": worst_identity, "tolerance": 1e-10}),
        ),
        CheckRecord::new("e-two-forms", worst_forms <= 1e-10, inputs, json!({"max_error": worst_forms, "tolerance": 1e-10})),
        CheckRecord::new("row-equality", symbolic.pass(), json!({}), details(&symbolic)),
        CheckRecord::new(
            "no-sharp-rotation",
            no_sharp.pass(),
            json!({"samples": cfg.samples, "seed": cfg.seed}),
            details(&no_sharp),
        ),
    ])
}

/// Points on the θ grid of the classical probability check.
pub const THETA_GRID: usize = 100;

fn classical_limit(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    let sys = cfg.system()?;
    let n = cfg.apparatuses();
    let one = GaussRational::one();
    let mut nonzero = Vec::new();
    let mut pairs = 0;
    for i in 1..=n {
        for j in 1..=n {
            let c = commutator(&prob_op(i, Outcome::Up, &sys)?, &prob_op(j, Outcome::Up, &sys)?, &sys)?;
            pairs += 1;
            for (w, coeff) in c.terms() {
                if !coeff.eval(&one).map_err(qframes::spinops::SpinError::from)?.is_zero() {
                    nonzero.push(format!("[P{i}, P{j}] {}: {coeff}", w.render(&sys)));
                }
            }
        }
    }
    let mut out = vec![CheckRecord::new(
        "commutators-at-q=1",
        nonzero.is_empty(),
        json!({"apparatuses": n}),
        json!({"pairs": pairs, "nonzero_coefficients": nonzero.len()}),
    )
    .residual((!nonzero.is_empty()).then(|| nonzero.join("; ")))];

    if n >= 1 {
        let p = prob_op(1, Outcome::Up, &sys)?.value;
        let (s, g) = (sys.spin_copy(1)?, sys.sg_copy(1)?);
        let mut worst = 0.0f64;
        for k in 0..THETA_GRID {
            let theta = std::f64::consts::PI * k as f64 / (THETA_GRID - 1) as f64;
            let omega = 0.37 * k as f64;
            let mut a = Assignment::new();
            a.set_copy(s, Complex64::new((theta / 2.0).cos(), 0.0), Complex64::from_polar((theta / 2.0).sin(), omega));
            a.set_copy(g, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
            let v = classical_eval(&p, &a, &BigRational::one(), &sys)?;
            worst = worst.max((v - Complex64::new((1.0 + theta.cos()) / 2.0, 0.0)).norm());
        }
        out.push(CheckRecord::new(
            "probability-theta-grid",
            worst <= 1e-12,
            json!({"points": THETA_GRID, "apparatus": 1}),
            json!({"max_error": worst, "tolerance": 1e-12}),
        ));
    }
    Ok(out)
}

/// Longest random word in the confluence check.
pub const CONFLUENCE_MAX_LEN: usize = 8;

fn confluence(cfg: &RunConfig) -> Result<Vec<CheckRecord>, CliError> {
    let sys = cfg.system()?;
    let r = check_confluence(&sys, cfg.samples as usize, CONFLUENCE_MAX_LEN, cfg.seed, Mode::TwoPhase)?;
    Ok(vec![CheckRecord::new(
        "confluence",
        r.pass(),
        json!({"words": cfg.samples, "max_len": CONFLUENCE_MAX_LEN, "seed": cfg.seed, "n_spin": cfg.n_spin, "n_sg": cfg.n_sg, "rotation": cfg.with_rotation}),
        details(&r),
    )
    .residual(r.first_mismatch.clone())])
}

/// Copy kinds present, for reports.
pub fn copy_summary(sys: &System) -> Value {
    let count = |k: CopyKind| sys.copies().iter().filter(|c| c.kind == k).count();
    json!({"spin": count(CopyKind::Spin), "sg": count(CopyKind::SternGerlach), "rotation": count(CopyKind::Rotation)})
}
