use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use mincodes::analysis::{ab_condition, ab_from_extrema, has_full_value_property, is_minimal_code};
use mincodes::constructions::{self as cons, predicted_dprime_weights, predicted_first_params, FunctionCodeSpec};
use mincodes::sss::{self, AccessMethod, SssScheme};
use mincodes::sweep::{run_sweep, SweepConfig};
use mincodes::{Budget, FieldElement, LinearCode, MatrixGF};

use crate::args::{
    AnalyzeArgs, Cli, Command, ConstructArgs, DistributionArgs, FamilyName, LiftArgs, Method, SchemeArgs, SssCommand,
    SweepArgs, TensorArgs,
};

pub struct Report {
    pub json: Value,
    pub text: String,
    /// False when a checked property did not hold.
    pub verified: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        let invocation: Vec<String> = std::env::args().skip(1).collect();
        Report {
            json: json!({ "command": command, "invocation": invocation, "warnings": [] }),
            text: String::new(),
            verified: true,
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.json[key] = value;
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn warn(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        self.json["warnings"].as_array_mut().unwrap().push(Value::String(msg));
    }

    pub fn add_timing(&mut self, d: Duration) {
        let ms = d.as_secs_f64() * 1e3;
        self.json["elapsed_ms"] = json!(ms);
        self.line(format!("elapsed: {ms:.1} ms"));
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", serde_json::to_string_pretty(&self.json).unwrap());
        } else {
            for w in self.json["warnings"].as_array().into_iter().flatten() {
                eprintln!("warning: {}", w.as_str().unwrap_or_default());
            }
            print!("{}", self.text);
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let budget = Budget(cli.budget);
    match &cli.command {
        Command::Construct(a) => construct(a, budget),
        Command::Analyze(a) => analyze(a, budget),
        Command::Distribution(a) => distribution(a, budget),
        Command::Lift(a) => lift(a, budget),
        Command::Tensor(a) => tensor(a),
        Command::Sss(c) => sss_command(c, budget),
        Command::Sweep(a) => sweep(a, budget),
    }
}

fn load_code(path: &Path) -> Result<LinearCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let m = MatrixGF::from_text(&text).with_context(|| format!("parsing {}", path.display()))?;
    LinearCode::from_generator(m).with_context(|| format!("loading {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str, report: &mut Report) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
            report.set("out", json!(p.display().to_string()));
        }
        None => report.set("matrix", json!(text)),
    }
    Ok(())
}

fn encs(xs: &[FieldElement]) -> Vec<u32> {
    xs.iter().map(|x| x.enc()).collect()
}

fn code_json(code: &LinearCode, d: Option<usize>) -> Value {
    json!({ "q": code.q(), "n": code.n(), "k": code.k(), "d": d })
}

fn descriptor(code: &LinearCode, d: Option<usize>) -> String {
    match d {
        Some(d) => format!("[{},{},{}]_{}", code.n(), code.k(), d, code.q()),
        None => format!("[{},{}]_{}", code.n(), code.k(), code.q()),
    }
}

fn need<T: Copy>(v: Option<T>, name: &str, family: &str) -> Result<T> {
    v.with_context(|| format!("--{name} is required for --family {family}"))
}

fn construct(a: &ConstructArgs, budget: Budget) -> Result<Report> {
    let mut r = Report::new("construct");
    let q = a.q;
    let code = match a.family {
        FamilyName::First => {
            let t = need(a.t, "t", "first")?;
            let code = cons::first(t, q)?;
            let p = predicted_first_params(t, q);
            let ab = ab_from_extrema(q, p.w_min as usize, p.w_max as usize);
            if ab.ratio > ab.threshold {
                r.warn(format!(
                    "w_min/w_max = {} exceeds (q-1)/q = {} for this (t,q)",
                    ab.ratio, ab.threshold
                ));
            }
            r.warn("the number of words of weight w_s is C(t,s)(q-1)^s, not (q-1)^s");
            r.set("params", json!({ "family": "first", "t": t, "q": q }));
            code
        }
        FamilyName::Second => {
            let (t, k) = (need(a.t, "t", "second")?, need(a.k, "k", "second")?);
            if (q as usize) + 2 < t {
                r.warn(format!("q = {q} < t - 2: outside the stated hypothesis q >= t - 2"));
            }
            r.set("params", json!({ "family": "second", "t": t, "k": k, "q": q }));
            cons::second(t, k, q)?
        }
        FamilyName::Weights => {
            let (t, s) = (need(a.t, "t", "weights")?, need(a.s, "s", "weights")?);
            let code = cons::weight_s(s, t, q)?;
            if s * s <= 3 * t {
                let pred = predicted_dprime_weights(t, s, q);
                let min = pred.iter().skip(1).map(|x| x.1).min().unwrap_or(0);
                if pred[s].1 != min {
                    r.warn(format!(
                        "minimum nonzero weight {min} is not attained at r = s (weight there is {})",
                        pred[s].1
                    ));
                }
            }
            r.set("params", json!({ "family": "weights", "t": t, "s": s, "q": q }));
            code
        }
        FamilyName::Extended => {
            let t = need(a.t, "t", "extended")?;
            if q == 2 {
                r.warn("q = 2 appends no columns; the code equals the first construction");
            } else {
                r.warn("words using the first row have weight w_s + (q-2), not w_s + (q-1)");
            }
            r.set("params", json!({ "family": "extended", "t": t, "q": q }));
            cons::extended(t, q)?
        }
        FamilyName::Cf => {
            let (n, k) = (need(a.n, "n", "cf")?, need(a.k, "k", "cf")?);
            let spec = FunctionCodeSpec {
                n,
                k,
                alphas: a.alphas.clone(),
            };
            let code = cons::cf_code(&spec, q, budget)?;
            let mut seen: Vec<u32> = a.alphas.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() + 1 < q as usize {
                r.warn("alphas do not cover every nonzero field value");
            }
            r.set(
                "params",
                json!({ "family": "cf", "n": n, "k": k, "q": q, "alphas": a.alphas }),
            );
            code
        }
        FamilyName::Cg => {
            let (rr, k) = (need(a.r, "r", "cg")?, need(a.k, "k", "cg")?);
            r.set("params", json!({ "family": "cg", "r": rr, "k": k, "q": q }));
            cons::cg_code(rr, k, q, budget)?
        }
    };
    r.set("code", code_json(&code, None));
    write_or_print(a.out.as_deref(), &code.generator().to_text(), &mut r)?;
    let target = a.out.as_ref().map(|p| p.display().to_string());
    match target {
        Some(p) => r.line(format!("{} written to {p}", descriptor(&code, None))),
        None => r.text.insert_str(0, &code.generator().to_text()),
    }
    Ok(r)
}

fn analyze(a: &AnalyzeArgs, budget: Budget) -> Result<Report> {
    let mut r = Report::new("analyze");
    let code = load_code(&a.input)?;
    for z in code.zero_columns() {
        r.warn(format!("column {} is zero", z + 1));
    }
    let wd = code.weight_distribution(budget)?;
    let (w_min, w_max) = wd.nonzero_extrema().unwrap_or((0, 0));
    let m = is_minimal_code(&code, budget)?;
    let ab = ab_condition(&code, budget)?;
    let fv = has_full_value_property(&code, budget)?;

    r.set("code", code_json(&code, Some(w_min)));
    r.set("is_minimal", json!(m.is_minimal));
    r.set(
        "minimality_witness",
        match &m.witness {
            Some(w) => json!({ "covered": encs(&w.covered.coeffs), "covering": encs(&w.covering.coeffs) }),
            None => Value::Null,
        },
    );
    r.set("w_min", json!(w_min));
    r.set("w_max", json!(w_max));
    r.set(
        "ab",
        json!({ "ratio": ab.ratio.to_string(), "threshold": ab.threshold.to_string(), "sufficient": ab.sufficient }),
    );
    r.set("full_value", json!(fv.holds));
    r.set(
        "full_value_witness",
        match &fv.witness {
            Some(w) => json!({ "coeffs": encs(&w.codeword.coeffs), "values": encs(&w.values) }),
            None => Value::Null,
        },
    );
    r.set("distribution", serde_json::to_value(&wd.counts)?);

    let yes = |b: bool| if b { "yes" } else { "no" };
    r.line(format!("code        {}", descriptor(&code, Some(w_min))));
    let mut line = format!("minimal     {}", yes(m.is_minimal));
    if let Some(w) = &m.witness {
        write!(
            line,
            " (u={:?} covered by u'={:?})",
            encs(&w.covered.coeffs),
            encs(&w.covering.coeffs)
        )?;
    }
    r.line(line);
    r.line(format!(
        "ab          w_min={} w_max={} ratio {}, threshold {}, sufficient {}",
        w_min,
        w_max,
        ab.ratio,
        ab.threshold,
        yes(ab.sufficient)
    ));
    let mut line = format!("full-value  {}", yes(fv.holds));
    if let Some(w) = &fv.witness {
        write!(
            line,
            " (u={:?} takes only {:?})",
            encs(&w.codeword.coeffs),
            encs(&w.values)
        )?;
    }
    r.line(line);
    r.line("weight,count");
    r.text.push_str(wd.to_csv().trim_start_matches("weight,count\n"));

    if a.expect_minimal && !m.is_minimal {
        r.verified = false;
        r.line("check failed: code is not minimal");
    }
    if a.expect_full_value && !fv.holds {
        r.verified = false;
        r.line("check failed: full-value property does not hold");
    }
    r.set("verified", json!(r.verified));
    Ok(r)
}

fn distribution(a: &DistributionArgs, budget: Budget) -> Result<Report> {
    let mut r = Report::new("distribution");
    let code = load_code(&a.input)?;
    let wd = code.weight_distribution(budget)?;
    let csv = wd.to_csv();
    if let Some(p) = &a.csv {
        fs::write(p, &csv).with_context(|| format!("writing {}", p.display()))?;
    }
    r.set("code", code_json(&code, wd.nonzero_extrema().map(|x| x.0)));
    r.set("distribution", serde_json::to_value(&wd.counts)?);
    r.text = csv;
    Ok(r)
}

fn lift(a: &LiftArgs, budget: Budget) -> Result<Report> {
    let mut r = Report::new("lift");
    let base = load_code(&a.input)?;
    let code = if a.unchecked {
        r.warn("input hypotheses were not checked; the output may not be minimal");
        cons::lift_unchecked(&base, a.s)?
    } else {
        cons::lift(&base, a.s, budget)?
    };
    r.set("params", json!({ "s": a.s, "checked": !a.unchecked }));
    r.set("code", code_json(&code, None));
    let text = code.generator().to_text();
    write_or_print(a.out.as_deref(), &text, &mut r)?;
    match &a.out {
        Some(p) => r.line(format!("{} written to {}", descriptor(&code, None), p.display())),
        None => r.text.insert_str(0, &text),
    }
    Ok(r)
}

fn tensor(a: &TensorArgs) -> Result<Report> {
    let mut r = Report::new("tensor");
    let (c1, c2) = (load_code(&a.in1)?, load_code(&a.in2)?);
    let code = cons::tensor_product(&c1, &c2)?;
    r.set("code", code_json(&code, None));
    let text = code.generator().to_text();
    write_or_print(a.out.as_deref(), &text, &mut r)?;
    match &a.out {
        Some(p) => r.line(format!("{} written to {}", descriptor(&code, None), p.display())),
        None => r.text.insert_str(0, &text),
    }
    Ok(r)
}

fn load_scheme(a: &SchemeArgs) -> Result<SssScheme> {
    let code = load_code(&a.input)?;
    Ok(SssScheme::with_secret_column(code, a.secret_column)?)
}

fn sss_command(c: &SssCommand, budget: Budget) -> Result<Report> {
    match c {
        SssCommand::Deal { scheme, secret, seed } => {
            let mut r = Report::new("sss deal");
            let s = load_scheme(scheme)?;
            let secret = s.code().field().element(*secret)?;
            let sv = sss::deal(&s, secret, *seed)?;
            r.set("secret_column", json!(s.secret_column()));
            r.set("secret", json!(secret.enc()));
            r.set("seed", json!(seed));
            r.set("participants", json!(sv.participants));
            r.set("shares", json!(encs(&sv.shares)));
            r.line(format!(
                "secret {} on column {}, seed {seed}",
                secret.enc(),
                s.secret_column()
            ));
            r.line("participant,share");
            for (p, v) in sv.participants.iter().zip(&sv.shares) {
                r.line(format!("{p},{}", v.enc()));
            }
            Ok(r)
        }
        SssCommand::Reconstruct { scheme, subset, shares } => {
            let mut r = Report::new("sss reconstruct");
            let s = load_scheme(scheme)?;
            if subset.len() != shares.len() {
                bail!(
                    "--subset has {} labels but --shares has {} values",
                    subset.len(),
                    shares.len()
                );
            }
            let field = s.code().field();
            let shares = shares
                .iter()
                .map(|&v| field.element(v))
                .collect::<Result<Vec<_>, _>>()?;
            let secret = sss::reconstruct(&s, subset, &shares)?;
            r.set("subset", json!(subset));
            r.set("secret", json!(secret.enc()));
            r.line(format!("secret {}", secret.enc()));
            Ok(r)
        }
        SssCommand::Access { scheme, method } => {
            let mut r = Report::new("sss access");
            let s = load_scheme(scheme)?;
            let m = match method {
                Method::Dual => AccessMethod::Dual,
                Method::Search => AccessMethod::Search,
            };
            let sets = sss::minimal_authorized_sets(&s, m, budget)?;
            let lists: Vec<&Vec<usize>> = sets.iter().map(|x| &x.indices).collect();
            r.set("method", serde_json::to_value(m)?);
            r.set("secret_column", json!(s.secret_column()));
            r.set("minimal_authorized_sets", json!(lists));
            r.line(format!("{} minimal authorized sets", sets.len()));
            for set in lists {
                let labels: Vec<String> = set.iter().map(|i| i.to_string()).collect();
                r.line(labels.join(","));
            }
            Ok(r)
        }
    }
}

fn sweep(a: &SweepArgs, budget: Budget) -> Result<Report> {
    let mut r = Report::new("sweep");
    let cfg = match &a.config {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            SweepConfig::parse(&text).with_context(|| format!("parsing {}", p.display()))?
        }
        None => SweepConfig::default_config(),
    };
    let report = run_sweep(&cfg, budget, a.strict);
    if let Some(p) = &a.csv {
        fs::write(p, report.distributions_csv()).with_context(|| format!("writing {}", p.display()))?;
    }
    r.verified = !report.failed();
    r.set("report", serde_json::to_value(&report)?);
    r.text = report.table();
    Ok(r)
}
