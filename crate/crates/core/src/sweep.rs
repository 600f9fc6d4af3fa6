//! Batch verification driven by a versioned TOML file.
//!
//! ```toml
//! version = 1
//!
//! [[instance]]
//! family = "first"
//! t = 3
//! q = 3
//!
//! [[instance]]
//! family = "lift"
//! s = 1
//! base = { family = "matrix", q = 2, rows = [[1, 0]] }
//!
//! [[discrepancy]]
//! instance = "first(t=3,q=3)"
//! check = "ab_below_threshold"
//! ```
//!
//! Every instance is built, enumerated and run through the checks for its
//! family. A failing check listed under `[[discrepancy]]` is reported as
//! `paper_discrepancy` instead of `fail`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::analysis::{ab_condition, has_full_value_property, is_minimal_code};
use crate::code::{Budget, LinearCode, WeightDistribution};
use crate::constructions::{
    self as cons, binom, extended_weight, predicted_dprime_weights, predicted_first_params, predicted_second_bound,
    predicted_ws, FunctionCodeSpec,
};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::MatrixGF;
use crate::sss::{self, AccessMethod, SssScheme};

pub const CONFIG_VERSION: u32 = 1;

/// The sweep file shipped with the crate; it mirrors the acceptance table.
pub const DEFAULT_CONFIG: &str = include_str!("../data/sweep.toml");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum Family {
    First {
        t: usize,
        q: u32,
    },
    Second {
        t: usize,
        k: usize,
        q: u32,
    },
    Weights {
        t: usize,
        s: usize,
        q: u32,
    },
    Extended {
        t: usize,
        q: u32,
    },
    Cf {
        n: usize,
        k: usize,
        q: u32,
        alphas: Vec<u32>,
    },
    Cg {
        r: usize,
        k: usize,
        q: u32,
    },
    Random {
        q: u32,
        k: usize,
        n: usize,
        seed: u64,
    },
    Matrix {
        q: u32,
        rows: Vec<Vec<u32>>,
    },
    Lift {
        base: Box<Family>,
        s: usize,
    },
    Tensor {
        left: Box<Family>,
        right: Box<Family>,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::First { t, q } => write!(f, "first(t={t},q={q})"),
            Family::Second { t, k, q } => write!(f, "second(t={t},k={k},q={q})"),
            Family::Weights { t, s, q } => write!(f, "weights(t={t},s={s},q={q})"),
            Family::Extended { t, q } => write!(f, "extended(t={t},q={q})"),
            Family::Cf { n, k, q, alphas } => {
                let a: Vec<String> = alphas.iter().map(|a| a.to_string()).collect();
                write!(f, "cf(n={n},k={k},q={q},alphas={})", a.join(":"))
            }
            Family::Cg { r, k, q } => write!(f, "cg(r={r},k={k},q={q})"),
            Family::Random { q, k, n, seed } => write!(f, "random(q={q},k={k},n={n},seed={seed})"),
            Family::Matrix { q, rows } => {
                let r: Vec<String> = rows
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
                    .collect();
                write!(f, "matrix(q={q},rows={})", r.join("/"))
            }
            Family::Lift { base, s } => write!(f, "lift({base},s={s})"),
            Family::Tensor { left, right } => write!(f, "tensor({left},{right})"),
        }
    }
}

impl Family {
    pub fn build(&self, budget: Budget) -> Result<LinearCode> {
        match self {
            Family::First { t, q } => cons::first(*t, *q),
            Family::Second { t, k, q } => cons::second(*t, *k, *q),
            Family::Weights { t, s, q } => cons::weight_s(*s, *t, *q),
            Family::Extended { t, q } => cons::extended(*t, *q),
            Family::Cf { n, k, q, alphas } => cons::cf_code(
                &FunctionCodeSpec {
                    n: *n,
                    k: *k,
                    alphas: alphas.clone(),
                },
                *q,
                budget,
            ),
            Family::Cg { r, k, q } => cons::cg_code(*r, *k, *q, budget),
            Family::Random { q, k, n, seed } => cons::random_code(*q, *k, *n, *seed),
            Family::Matrix { q, rows } => {
                let field = FieldSpec::new(*q)?;
                LinearCode::from_generator(MatrixGF::from_rows(&field, rows)?)
            }
            // built without the precondition check so that the checks below
            // can report what fails
            Family::Lift { base, s } => cons::lift_unchecked(&base.build(budget)?, *s),
            Family::Tensor { left, right } => cons::tensor_product(&left.build(budget)?, &right.build(budget)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SssSettings {
    #[serde(default = "default_seeds")]
    pub seeds: u64,
    #[serde(default)]
    pub perfectness: bool,
}

fn default_seeds() -> u64 {
    10
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sss: Option<SssSettings>,
}

impl Instance {
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.family.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnownDiscrepancy {
    pub instance: String,
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub version: u32,
    #[serde(default, rename = "instance")]
    pub instances: Vec<Instance>,
    #[serde(default, rename = "discrepancy")]
    pub discrepancies: Vec<KnownDiscrepancy>,
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: SweepConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if cfg.version != CONFIG_VERSION {
            return Err(Error::Config(format!(
                "unsupported version {} (expected {CONFIG_VERSION})",
                cfg.version
            )));
        }
        Ok(cfg)
    }

    pub fn default_config() -> Self {
        Self::parse(DEFAULT_CONFIG).expect("bundled sweep config parses")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PaperDiscrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PaperDiscrepancy => "paper_discrepancy",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub instance: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub q: Option<u32>,
    pub checks: Vec<CheckResult>,
    pub distribution: Option<WeightDistribution>,
}

impl InstanceReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub version: u32,
    pub instances: Vec<InstanceReport>,
    /// Set when `--strict` stopped the sweep at the first failure.
    pub stopped_early: bool,
}

impl SweepReport {
    pub fn failed(&self) -> bool {
        self.instances.iter().any(InstanceReport::failed)
    }

    pub fn count(&self, status: Status) -> usize {
        self.instances
            .iter()
            .flat_map(|i| &i.checks)
            .filter(|c| c.status == status)
            .count()
    }

    /// One line per check: `instance check status detail`.
    pub fn table(&self) -> String {
        let w_inst = self
            .instances
            .iter()
            .map(|i| i.instance.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let w_check = self
            .instances
            .iter()
            .flat_map(|i| &i.checks)
            .map(|c| c.check.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = format!(
            "{:w_inst$}  {:w_check$}  {:17}  detail\n",
            "instance", "check", "status"
        );
        for inst in &self.instances {
            for c in &inst.checks {
                out += &format!(
                    "{:w_inst$}  {:w_check$}  {:17}  {}\n",
                    inst.instance,
                    c.check,
                    c.status.to_string(),
                    c.detail
                );
            }
        }
        out += &format!(
            "{} instances: {} pass, {} fail, {} paper_discrepancy{}\n",
            self.instances.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::PaperDiscrepancy),
            if self.stopped_early { " (stopped early)" } else { "" }
        );
        out
    }

    /// `instance,weight,count` rows for every enumerated instance.
    pub fn distributions_csv(&self) -> String {
        let mut out = String::from("instance,weight,count\n");
        for inst in &self.instances {
            if let Some(wd) = &inst.distribution {
                for (w, c) in &wd.counts {
                    out += &format!("\"{}\",{w},{c}\n", inst.instance);
                }
            }
        }
        out
    }
}

struct Checks<'a> {
    instance: &'a str,
    known: &'a [KnownDiscrepancy],
    out: Vec<CheckResult>,
}

impl Checks<'_> {
    fn push(&mut self, check: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok {
            Status::Pass
        } else if self
            .known
            .iter()
            .any(|k| k.instance == self.instance && k.check == check)
        {
            Status::PaperDiscrepancy
        } else {
            Status::Fail
        };
        self.out.push(CheckResult {
            check: check.to_string(),
            status,
            detail: detail.into(),
        });
    }

    fn error(&mut self, check: &str, e: &Error) {
        self.push(check, false, e.to_string());
    }
}

fn pow_i128(b: i128, e: usize) -> i128 {
    (0..e).fold(1, |a, _| a * b)
}

fn nonzero_coeffs(c: &crate::code::Codeword) -> usize {
    c.coeffs.iter().filter(|x| !x.is_zero()).count()
}

/// Count words whose weight disagrees with `expected(coefficient weight, word)`.
fn mismatches(code: &LinearCode, budget: Budget, expected: impl Fn(&crate::code::Codeword) -> i128) -> Result<u64> {
    let mut bad = 0;
    for w in code.codewords(budget)? {
        if w.weight() as i128 != expected(&w) {
            bad += 1;
        }
    }
    Ok(bad)
}

fn family_checks(
    fam: &Family,
    code: &LinearCode,
    wd: &WeightDistribution,
    budget: Budget,
    ck: &mut Checks,
) -> Result<()> {
    let (w_min, _) = wd.nonzero_extrema().unwrap_or((0, 0));
    match fam {
        Family::First { t, q } => {
            let (t, q) = (*t, *q);
            let p = predicted_first_params(t, q);
            let got = (code.n() as i128, code.k() as i128, w_min as i128);
            ck.push(
                "params",
                got == (p.n, p.k, p.d),
                format!("[n,k,d]={got:?}, predicted ({},{},{})", p.n, p.k, p.d),
            );
            let bad = mismatches(code, budget, |w| predicted_ws(nonzero_coeffs(w), t, q))?;
            ck.push("stratified_weights", bad == 0, format!("{bad} words off w_s"));
            ck.push(
                "step_identity",
                p.steps.iter().all(|s| s.holds),
                format!("{} steps", p.steps.len()),
            );
            let ab = ab_condition(code, budget)?;
            let (ti, qi) = (t as i128, q as i128);
            let num = 1 + (ti - 1) * (qi - 1);
            let den = ti - 1 + binom(t as i64 - 1, 2) * (qi - 2) + (ti - 1) * (qi - 1);
            let want = Ratio::new(num as u64, den as u64);
            ck.push("ab_ratio", ab.ratio == want, format!("{} vs {}", ab.ratio, want));
            ck.push(
                "ab_below_threshold",
                ab.ratio < ab.threshold,
                format!("{} < {}", ab.ratio, ab.threshold),
            );
            let mut by_s: BTreeMap<usize, u64> = BTreeMap::new();
            for w in code.codewords(budget)? {
                let s = nonzero_coeffs(&w);
                if w.weight() as i128 == predicted_ws(s, t, q) {
                    *by_s.entry(s).or_default() += 1;
                }
            }
            let bad: Vec<usize> = (1..=t)
                .filter(|&s| *by_s.get(&s).unwrap_or(&0) as i128 != binom(t as i64, s as i64) * pow_i128(qi - 1, s))
                .collect();
            ck.push(
                "weight_counts",
                bad.is_empty(),
                format!("C(t,s)(q-1)^s per stratum, mismatched s: {bad:?}"),
            );
        }
        Family::Second { t, k, q } => {
            let p = predicted_second_bound(*t, *k, *q);
            ck.push("length", code.n() as i128 == p.n, format!("{} vs {}", code.n(), p.n));
            ck.push(
                "dimension",
                code.k() as i128 == p.dim,
                format!("{} vs {}", code.k(), p.dim),
            );
            ck.push(
                "distance_bound",
                w_min as i128 <= p.d_upper,
                format!("d={w_min} <= {}", p.d_upper),
            );
            let row1 = code.generator().row(0).iter().filter(|x| !x.is_zero()).count() as i128;
            ck.push(
                "first_row_weight",
                row1 == p.d_upper,
                format!("{row1} vs {}", p.d_upper),
            );
        }
        Family::Weights { t, s, q } => {
            let (t, s, q) = (*t, *s, *q);
            let pred: BTreeMap<usize, i128> = predicted_dprime_weights(t, s, q).into_iter().collect();
            let bad = mismatches(code, budget, |w| pred[&nonzero_coeffs(w)])?;
            ck.push(
                "dprime_weights",
                bad == 0,
                format!("{bad} words off the r=0..{t} formula"),
            );
            let mut pooled: BTreeMap<usize, u64> = BTreeMap::new();
            for (&r, &w) in &pred {
                *pooled.entry(w as usize).or_default() +=
                    (binom(t as i64, r as i64) * pow_i128(q as i128 - 1, r)) as u64;
            }
            ck.push(
                "dprime_counts",
                pooled == wd.counts,
                "count per weight vs sum of C(t,r)(q-1)^r",
            );
            if s * s <= 3 * t {
                let at_s = pred[&s];
                let min = pred.iter().filter(|(&r, _)| r >= 1).map(|(_, &w)| w).min().unwrap_or(0);
                let argmin: Vec<usize> = pred
                    .iter()
                    .filter(|(&r, &w)| r >= 1 && w == min)
                    .map(|(&r, _)| r)
                    .collect();
                ck.push(
                    "min_at_r_eq_s",
                    at_s == min && w_min as i128 == min,
                    format!("min {min} at r in {argmin:?}, weight at r=s is {at_s}"),
                );
            }
        }
        Family::Extended { t, q } => {
            let (t, q) = (*t, *q);
            let len = binom(t as i64, 2) * (q as i128 - 1) + t as i128 + q as i128 - 2;
            ck.push("length", code.n() as i128 == len, format!("{} vs {len}", code.n()));
            let bad = mismatches(code, budget, |w| {
                extended_weight(nonzero_coeffs(w), t, q, !w.coeffs[0].is_zero())
            })?;
            ck.push("extended_weights", bad == 0, format!("{bad} words off w_s / w_s+(q-2)"));
            let bad = mismatches(code, budget, |w| {
                predicted_ws(nonzero_coeffs(w), t, q) + if w.coeffs[0].is_zero() { 0 } else { q as i128 - 1 }
            })?;
            ck.push(
                "extended_weights_stated",
                bad == 0,
                format!("{bad} words off w_s / w_s+(q-1)"),
            );
        }
        Family::Lift { base, s } => {
            let b = base.build(budget)?;
            let want = ((s + 1) * b.n(), s + b.k());
            ck.push(
                "params",
                (code.n(), code.k()) == want,
                format!("[{},{}] vs {want:?}", code.n(), code.k()),
            );
        }
        Family::Tensor { left, right } => {
            let (a, b) = (left.build(budget)?, right.build(budget)?);
            let (da, db) = (a.min_distance(budget)?, b.min_distance(budget)?);
            let want = (a.n() * b.n(), a.k() * b.k(), da * db);
            let got = (code.n(), code.k(), w_min);
            ck.push("params", got == want, format!("[n,k,d]={got:?} vs {want:?}"));
        }
        Family::Cf { .. } | Family::Cg { .. } | Family::Random { .. } | Family::Matrix { .. } => {}
    }
    if matches!(
        fam,
        Family::Extended { .. } | Family::Lift { .. } | Family::Cf { .. } | Family::Cg { .. }
    ) {
        let fv = has_full_value_property(code, budget)?;
        let detail = match &fv.witness {
            Some(w) => format!("u={:?} takes only {:?}", w.codeword.coeffs, w.values),
            None => "every nonzero word takes all q values".into(),
        };
        ck.push("full_value", fv.holds, detail);
    }
    Ok(())
}

fn sss_checks(code: &LinearCode, settings: &SssSettings, budget: Budget, ck: &mut Checks) -> Result<()> {
    let scheme = SssScheme::new(code.clone())?;
    let all = scheme.participants();
    let mut bad = 0;
    for secret in code.field().elements() {
        for seed in 0..settings.seeds {
            let sv = sss::deal(&scheme, secret, seed)?;
            if sss::reconstruct(&scheme, &all, &sv.shares)? != secret {
                bad += 1;
            }
        }
    }
    ck.push(
        "sss_round_trip",
        bad == 0,
        format!("{bad} failures over {} seeds", settings.seeds),
    );
    let search = sss::minimal_authorized_sets(&scheme, AccessMethod::Search, budget)?;
    match sss::minimal_authorized_sets(&scheme, AccessMethod::Dual, budget) {
        Ok(dual) => ck.push(
            "sss_access_agree",
            dual == search,
            format!("{} minimal sets", search.len()),
        ),
        Err(Error::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    if settings.perfectness {
        let mut bad = 0;
        let mut total = 0;
        for mask in 0u64..1 << all.len() {
            let subset: Vec<usize> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            total += 1;
            if !sss::perfectness_check(&scheme, &subset, budget)?.holds {
                bad += 1;
            }
        }
        ck.push("sss_perfectness", bad == 0, format!("{bad} of {total} subsets"));
    }
    Ok(())
}

fn minimality_checks(fam: &Family, code: &LinearCode, budget: Budget, ck: &mut Checks) -> Result<()> {
    let m = is_minimal_code(code, budget)?;
    let detail = match &m.witness {
        Some(w) => format!("u={:?} inside u'={:?}", w.covered.coeffs, w.covering.coeffs),
        None => format!("{} pairs checked", m.checked_pairs),
    };
    // random and explicit matrices carry no minimality claim
    if !matches!(fam, Family::Random { .. } | Family::Matrix { .. }) {
        ck.push("minimal", m.is_minimal, detail);
    }
    let ab = ab_condition(code, budget)?;
    ck.push(
        "ab_consistency",
        !ab.sufficient || m.is_minimal,
        format!("ratio {}, sufficient {}", ab.ratio, ab.sufficient),
    );
    Ok(())
}

fn run_instance(inst: &Instance, known: &[KnownDiscrepancy], budget: Budget) -> InstanceReport {
    let label = inst.label();
    let mut ck = Checks {
        instance: &label,
        known,
        out: Vec::new(),
    };
    let mut report = InstanceReport {
        instance: label.clone(),
        n: None,
        k: None,
        d: None,
        q: None,
        checks: Vec::new(),
        distribution: None,
    };
    let code = match inst.family.build(budget) {
        Ok(c) => c,
        Err(e) => {
            ck.error("construct", &e);
            report.checks = ck.out;
            return report;
        }
    };
    report.n = Some(code.n());
    report.k = Some(code.k());
    report.q = Some(code.q());
    let wd = match code.weight_distribution(budget) {
        Ok(wd) => wd,
        Err(e) => {
            ck.error("enumerate", &e);
            report.checks = ck.out;
            return report;
        }
    };
    report.d = wd.nonzero_extrema().map(|x| x.0);

    if let Err(e) = family_checks(&inst.family, &code, &wd, budget, &mut ck) {
        ck.error("family", &e);
    }
    if let Err(e) = minimality_checks(&inst.family, &code, budget, &mut ck) {
        ck.error("minimal", &e);
    }
    if let Some(settings) = &inst.sss {
        if let Err(e) = sss_checks(&code, settings, budget, &mut ck) {
            ck.error("sss", &e);
        }
    }
    report.checks = ck.out;
    report.distribution = Some(wd);
    report
}

/// Runs every instance in order. With `strict`, stops after the first
/// instance that has a failing check.
pub fn run_sweep(cfg: &SweepConfig, budget: Budget, strict: bool) -> SweepReport {
    let mut report = SweepReport {
        version: cfg.version,
        instances: Vec::new(),
        stopped_early: false,
    };
    for (i, inst) in cfg.instances.iter().enumerate() {
        let r = run_instance(inst, &cfg.discrepancies, budget);
        let failed = r.failed();
        report.instances.push(r);
        if strict && failed {
            report.stopped_early = i + 1 < cfg.instances.len();
            break;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_empty_report() {
        let cfg = SweepConfig::parse("version = 1\n").unwrap();
        let r = run_sweep(&cfg, Budget::DEFAULT, true);
        assert!(r.instances.is_empty());
        assert!(!r.failed());
        assert_eq!(r.distributions_csv(), "instance,weight,count\n");
    }

    #[test]
    fn rejects_bad_version_and_unknown_family() {
        assert!(matches!(SweepConfig::parse("version = 2\n"), Err(Error::Config(_))));
        let bad = "version = 1\n[[instance]]\nfamily = \"fourth\"\nt = 3\n";
        assert!(matches!(SweepConfig::parse(bad), Err(Error::Config(_))));
    }

    #[test]
    fn counter_instance_is_flagged() {
        let text = r#"
version = 1
[[instance]]
family = "first"
t = 3
q = 3
[[discrepancy]]
instance = "first(t=3,q=3)"
check = "ab_below_threshold"
"#;
        let r = run_sweep(&SweepConfig::parse(text).unwrap(), Budget::DEFAULT, false);
        let inst = &r.instances[0];
        let ab = inst.checks.iter().find(|c| c.check == "ab_below_threshold").unwrap();
        assert_eq!(ab.status, Status::PaperDiscrepancy);
        assert!(!r.failed());
        assert_eq!((inst.n, inst.k, inst.d), (Some(9), Some(3), Some(5)));
    }

    #[test]
    fn budget_exceeded_is_a_per_instance_failure() {
        let text = "version = 1\n[[instance]]\nfamily = \"first\"\nt = 3\nq = 3\n[[instance]]\nfamily = \"matrix\"\nq = 2\nrows = [[1, 0]]\n";
        let cfg = SweepConfig::parse(text).unwrap();
        let r = run_sweep(&cfg, Budget(10), false);
        assert_eq!(r.instances.len(), 2);
        assert_eq!(r.instances[0].checks[0].check, "enumerate");
        assert!(r.instances[0].failed());
        assert!(!r.instances[1].failed());
        let strict = run_sweep(&cfg, Budget(10), true);
        assert_eq!(strict.instances.len(), 1);
        assert!(strict.stopped_early);
    }

    #[test]
    fn nested_families_parse() {
        let text = r#"
version = 1
[[instance]]
family = "tensor"
left = { family = "first", t = 2, q = 2 }
right = { family = "first", t = 2, q = 2 }
[[instance]]
family = "lift"
s = 1
base = { family = "matrix", q = 2, rows = [[1, 0]] }
"#;
        let cfg = SweepConfig::parse(text).unwrap();
        assert_eq!(cfg.instances[0].label(), "tensor(first(t=2,q=2),first(t=2,q=2))");
        let r = run_sweep(&cfg, Budget::DEFAULT, false);
        assert!(!r.failed(), "{}", r.table());
    }

    #[test]
    fn default_config_parses() {
        let cfg = SweepConfig::default_config();
        assert!(cfg.instances.len() > 30);
    }
}
