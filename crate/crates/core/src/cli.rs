//! Command-line front end: classification, sweeps over L, and the
//! verification batches. Exit codes: 0 all good, 1 some check failed,
//! 2 the input could not be parsed or lies outside the supported range.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bmcheck::{check_a_identity, check_b_identity, check_unit_case, unit_case_samples};
use crate::classifier::{classify_full, Classification, ClassifierInput, ReductionResult};
use crate::combinatorics::bracket_pair;
use crate::error::{Error, Result};
use crate::exactnum::{is_prime, Fp2Elt, HalfInt, QuadElt};
use crate::hecke::hecke_check;
use crate::identities::{verify_appendix, verify_identity, wz_certificate_check, AppendixId, IdentityId, IdentityName};

pub const JOBS_ENV: &str = "MODP_REDUCTION_JOBS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "modp-reduction", version, about = "Mod-p reductions of semi-stable V_{k,L} and their verification suites")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = JOBS_ENV)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Classify one (p, k, L).
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u64,
        /// L as RAT, RAT*sqrt(p) or RAT(+|-)RAT*sqrt(p).
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
    },
    /// Classify every k in a range against a list of L values.
    Sweep {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k_min: Option<u64>,
        #[arg(long)]
        k_max: Option<u64>,
        /// Repeatable; defaults to H₋ + H₊ + (√p)^j for j in [−2r, 4] and H₋ + H₊ itself.
        #[arg(long = "L", allow_hyphen_values = true)]
        l: Vec<String>,
    },
    /// The binomial-harmonic identity catalog and the WZ certificate.
    VerifyIdentities {
        /// Largest n or r.
        #[arg(long, default_value_t = 100)]
        max: u64,
        /// Restrict to these identities (repeatable); WZ names the certificate.
        #[arg(long)]
        id: Vec<String>,
        #[arg(long, default_value_t = 40)]
        wz_max: u64,
    },
    /// The five matrix systems against their closed forms.
    VerifyAppendices {
        #[arg(long, default_value_t = 100)]
        r_max: u64,
        /// Restrict to these systems (repeatable).
        #[arg(long)]
        appendix: Vec<String>,
    },
    /// Hecke algebra relations on random finitely supported vectors.
    HeckeCheck {
        #[arg(long = "p", default_values_t = [5u64, 7])]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 100)]
        vectors: usize,
    },
    /// Comparison of the constants with the Breuil–Mézard formulas.
    BmCheck {
        #[arg(long = "p", default_values_t = [5u64, 7, 11, 13])]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub pass: bool,
    pub id: String,
    pub param: String,
    pub detail: String,
}

impl CheckLine {
    fn from_result(id: impl Into<String>, param: impl Into<String>, r: Result<bool>) -> Self {
        let (pass, detail) = match r {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "check returned false".into()),
            Err(e) => (false, e.to_string()),
        };
        CheckLine { pass, id: id.into(), param: param.into(), detail }
    }
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock()),
        Err(e) => {
            let _ = e.print();
            e.exit_code()
        }
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs.filter(|&j| j > 0) {
        builder = builder.num_threads(jobs);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = pool.install(|| dispatch(config, &mut buf));
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: write failed: {e}");
        return 2;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) | Error::InvalidInput(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::InvalidInput(format!("write failed: {e}"));
    match &config.command {
        Command::Classify { p, k, l } => {
            let l = QuadElt::parse(l, *p)?;
            let c = classify_full(&ClassifierInput::new(*p, *k, l.clone())?)?;
            let record = ClassRecord { l, c };
            match config.format {
                Format::Json => writeln!(out, "{}", record.json()).map_err(io)?,
                Format::Csv => {
                    writeln!(out, "{}", CSV_HEADER).map_err(io)?;
                    writeln!(out, "{}", record.csv()).map_err(io)?;
                }
                Format::Text => writeln!(out, "{}", record.text()).map_err(io)?,
            }
            Ok(0)
        }
        Command::Sweep { p, k_min, k_max, l } => {
            let p = *p;
            check_prime(p)?;
            let (lo, hi) = (k_min.unwrap_or(3), k_max.unwrap_or(p + 1));
            if lo < 3 || hi > p + 1 || lo > hi {
                return Err(Error::InvalidInput(format!("k range [{lo}, {hi}] must lie in [3, {}]", p + 1)));
            }
            let explicit: Vec<QuadElt> = l.iter().map(|s| QuadElt::parse(s, p)).collect::<Result<_>>()?;
            let jobs: Vec<(u64, QuadElt)> = (lo..=hi)
                .flat_map(|k| {
                    let grid = if explicit.is_empty() { default_grid(p, k) } else { explicit.clone() };
                    grid.into_iter().map(move |l| (k, l))
                })
                .collect();
            let records: Vec<ClassRecord> = jobs
                .into_par_iter()
                .map(|(k, l)| classify_full(&ClassifierInput::new(p, k, l.clone())?).map(|c| ClassRecord { l, c }))
                .collect::<Result<_>>()?;
            match config.format {
                Format::Json => {
                    let all: Vec<Value> = records.iter().map(ClassRecord::json).collect();
                    writeln!(out, "{}", Value::Array(all)).map_err(io)?;
                }
                Format::Csv => {
                    writeln!(out, "{}", CSV_HEADER).map_err(io)?;
                    for r in &records {
                        writeln!(out, "{}", r.csv()).map_err(io)?;
                    }
                }
                Format::Text => {
                    for r in &records {
                        writeln!(out, "{}", r.text()).map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyIdentities { max, id, wz_max } => {
            let lines = identity_checks(*max, id, *wz_max)?;
            report(config.format, &lines, out).map_err(io)
        }
        Command::VerifyAppendices { r_max, appendix } => {
            let lines = appendix_checks(*r_max, appendix)?;
            report(config.format, &lines, out).map_err(io)
        }
        Command::HeckeCheck { primes, vectors } => {
            let lines = hecke_lines(primes, *vectors, config.seed)?;
            report(config.format, &lines, out).map_err(io)
        }
        Command::BmCheck { primes, samples } => {
            let lines = bm_lines(primes, *samples, config.seed)?;
            report(config.format, &lines, out).map_err(io)
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("p = {p} must be a prime >= 5")));
    }
    Ok(())
}

/// H₋ + H₊ + (√p)^j for j ∈ [−2r, 4], then H₋ + H₊ itself (ν = ∞). The
/// exponents reach every interval and boundary of the case table.
pub fn default_grid(p: u64, k: u64) -> Vec<QuadElt> {
    let r = k as i64 - 2;
    let centre = QuadElt::rational(p, bracket_pair(r as u64).sum());
    let mut grid: Vec<QuadElt> = (-2 * r..=4).map(|j| &centre + &QuadElt::sqrt_p_pow(p, j)).collect();
    grid.push(centre);
    grid
}

pub fn identity_checks(max: u64, filter: &[String], wz_max: u64) -> Result<Vec<CheckLine>> {
    let want_wz = filter.is_empty() || filter.iter().any(|f| f.eq_ignore_ascii_case("WZ"));
    let names: Vec<IdentityName> = if filter.is_empty() {
        IdentityName::ALL.to_vec()
    } else {
        filter.iter().filter(|f| !f.eq_ignore_ascii_case("WZ")).map(|f| f.parse()).collect::<Result<_>>()?
    };
    let jobs: Vec<IdentityId> =
        names.iter().flat_map(|&name| name.batch_params(max).into_iter().map(move |n| IdentityId::new(name, n))).collect();
    let mut lines: Vec<CheckLine> = jobs
        .into_par_iter()
        .map(|id| {
            CheckLine::from_result(id.name.name(), format!("{}={}", id.name.param_label(), id.param), verify_identity(id))
        })
        .collect();
    if want_wz {
        let xs: Vec<i64> = (0..=5).collect();
        lines.push(CheckLine::from_result("WZ", format!("n<={wz_max}"), wz_certificate_check(wz_max, &xs)));
    }
    Ok(lines)
}

pub fn appendix_checks(r_max: u64, filter: &[String]) -> Result<Vec<CheckLine>> {
    let ids: Vec<AppendixId> =
        if filter.is_empty() { AppendixId::ALL.to_vec() } else { filter.iter().map(|f| f.parse()).collect::<Result<_>>()? };
    let jobs: Vec<(AppendixId, u64)> = ids.iter().flat_map(|&id| id.range(r_max).map(move |r| (id, r))).collect();
    Ok(jobs
        .into_par_iter()
        .map(|(id, r)| CheckLine::from_result(id.name(), format!("r={r}"), verify_appendix(id, r)))
        .collect())
}

pub fn hecke_lines(primes: &[u64], vectors: usize, seed: u64) -> Result<Vec<CheckLine>> {
    for &p in primes {
        check_prime(p)?;
    }
    let per_prime: Vec<Vec<CheckLine>> = primes
        .par_iter()
        .map(|&p| {
            hecke_check(p, vectors, seed)
                .into_iter()
                .map(|o| CheckLine {
                    pass: o.passed(),
                    id: "HECKE".into(),
                    param: format!("p={p}"),
                    detail: format!(
                        "[{}] {} {}/{}{}",
                        o.weight,
                        o.relation,
                        o.checked - o.failures,
                        o.checked,
                        o.first_failure.as_deref().map(|f| format!(" ({})", f.replace('\n', " | "))).unwrap_or_default()
                    ),
                })
                .collect()
        })
        .collect();
    Ok(per_prime.into_iter().flatten().collect())
}

pub fn bm_lines(primes: &[u64], samples: usize, seed: u64) -> Result<Vec<CheckLine>> {
    for &p in primes {
        check_prime(p)?;
    }
    let jobs: Vec<(u64, u64)> = primes.iter().flat_map(|&p| (4..p).step_by(2).map(move |k| (p, k))).collect();
    let per_job: Vec<Vec<CheckLine>> = jobs
        .into_par_iter()
        .map(|(p, k)| {
            let r = k - 2;
            let mut lines: Vec<CheckLine> = (1..=r / 2)
                .map(|i| CheckLine::from_result("BM_B", format!("p={p} k={k} i={i}"), check_b_identity(p, k, i)))
                .collect();
            lines.push(CheckLine::from_result("BM_A", format!("p={p} k={k}"), check_a_identity(p, k)));
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p << 40) ^ (k << 20));
            let ls = unit_case_samples(p, k, samples, &mut rng);
            let mut line = CheckLine::from_result("BM_UNIT", format!("p={p} k={k}"), check_unit_case(p, k, &ls));
            if line.pass {
                line.detail = format!("{samples} samples");
            }
            lines.push(line);
            lines
        })
        .collect();
    Ok(per_job.into_iter().flatten().collect())
}

/// Writes the lines and a summary; returns 0 iff every line passed.
pub fn report(format: Format, lines: &[CheckLine], out: &mut dyn Write) -> std::io::Result<i32> {
    let failed = lines.iter().filter(|l| !l.pass).count();
    let passed = lines.len() - failed;
    match format {
        Format::Json => {
            for l in lines {
                let v = json!({"status": status(l.pass), "id": l.id, "param": l.param, "detail": l.detail});
                writeln!(out, "{v}")?;
            }
            writeln!(out, "{}", json!({"summary": {"total": lines.len(), "passed": passed, "failed": failed}}))?;
        }
        Format::Csv => {
            writeln!(out, "status,id,param,detail")?;
            for l in lines {
                writeln!(out, "{},{},{},{}", status(l.pass), l.id, l.param, csv_field(&l.detail))?;
            }
        }
        Format::Text => {
            for l in lines {
                if l.detail.is_empty() {
                    writeln!(out, "{} {} {}", status(l.pass), l.id, l.param)?;
                } else {
                    writeln!(out, "{} {} {} {}", status(l.pass), l.id, l.param, l.detail)?;
                }
            }
            writeln!(out, "SUMMARY total={} passed={passed} failed={failed}", lines.len())?;
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const CSV_HEADER: &str = "p,k,r,L,nu,case,i,type,omega2_exponent,lambda,lambda_inv,trace,omega_exponents";

struct ClassRecord {
    l: QuadElt,
    c: Classification,
}

fn nu_json(nu: HalfInt) -> Value {
    match nu.as_fraction() {
        Some((num, den)) => json!({"num": num, "den": den}),
        None => json!({"infinite": true}),
    }
}

fn fp2_json(x: &Fp2Elt) -> Value {
    json!({
        "field": if x.in_base_field() { "F_p" } else { "F_p2" },
        "coords": [x.c0.value, x.c1.value],
        "nonresidue": x.d.value,
    })
}

pub fn result_json(r: &ReductionResult) -> Value {
    match r {
        ReductionResult::Irreducible { c, .. } => json!({"type": "irreducible", "omega2_exponent": c}),
        ReductionResult::ReducibleSplit { lambda, lambda_inv, e1, e2 } => json!({
            "type": "reducible",
            "lambda": fp2_json(lambda),
            "lambda_inv": fp2_json(lambda_inv),
            "omega_exponents": [e1, e2],
        }),
        ReductionResult::SelfDual { trace_c, lambda, lambda_inv, e } => json!({
            "type": "reducible_self_dual",
            "trace": trace_c.value,
            "lambda": fp2_json(lambda),
            "lambda_inv": fp2_json(lambda_inv),
            "omega_exponents": [e, e],
        }),
    }
}

impl ClassRecord {
    fn json(&self) -> Value {
        let c = &self.c;
        json!({
            "p": c.p,
            "k": c.k,
            "r": c.r,
            "L": self.l.to_string(),
            "nu": nu_json(c.nu),
            "case": c.case.kind.name(),
            "i": c.case.i,
            "result": result_json(&c.result),
        })
    }

    fn csv(&self) -> String {
        let c = &self.c;
        let (kind, omega2, lambda, lambda_inv, trace, exps) = match &c.result {
            ReductionResult::Irreducible { c, .. } => ("irreducible", c.to_string(), String::new(), String::new(), String::new(), String::new()),
            ReductionResult::ReducibleSplit { lambda, lambda_inv, e1, e2 } => {
                ("reducible", String::new(), lambda.to_string(), lambda_inv.to_string(), String::new(), format!("{e1};{e2}"))
            }
            ReductionResult::SelfDual { trace_c, lambda, lambda_inv, e } => (
                "reducible_self_dual",
                String::new(),
                lambda.to_string(),
                lambda_inv.to_string(),
                trace_c.to_string(),
                format!("{e};{e}"),
            ),
        };
        [
            c.p.to_string(),
            c.k.to_string(),
            c.r.to_string(),
            self.l.to_string(),
            c.nu.to_string(),
            c.case.kind.name().to_string(),
            c.case.i.to_string(),
            kind.to_string(),
            omega2,
            lambda,
            lambda_inv,
            trace,
            exps,
        ]
        .iter()
        .map(|s| csv_field(s))
        .collect::<Vec<_>>()
        .join(",")
    }

    fn text(&self) -> String {
        let c = &self.c;
        format!(
            "p={} k={} L={} nu={} case={} i={} result={}",
            c.p,
            c.k,
            self.l,
            c.nu,
            c.case.kind.name(),
            c.case.i,
            c.result
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let config = match RunConfig::try_parse_from(std::iter::once("modp-reduction").chain(args.iter().copied())) {
            Ok(c) => c,
            Err(e) => return (e.exit_code(), String::new()),
        };
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&config, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn classify_json() {
        let (code, out) = run_args(&["classify", "--p", "7", "--k", "5", "--L", "0"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["case"], "interval");
        assert_eq!(v["i"], 2);
        assert_eq!(v["result"]["type"], "irreducible");
        assert_eq!(v["result"]["omega2_exponent"], 10);
        assert_eq!(v["nu"], json!({"num": 0, "den": 1}));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["classify", "--p", "7", "--k", "5", "--L", "x+"]).0, 2);
        assert_eq!(run_args(&["classify", "--p", "9", "--k", "5", "--L", "0"]).0, 2);
        assert_eq!(run_args(&["classify", "--p", "7"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["verify-appendices", "--r-max", "9", "--format", "text"]).0, 0);
    }

    #[test]
    fn failing_report_exits_one() {
        let lines = vec![CheckLine { pass: false, id: "X".into(), param: "n=1".into(), detail: "boom".into() }];
        let mut out = Vec::new();
        assert_eq!(report(Format::Text, &lines, &mut out).unwrap(), 1);
        let s = String::from_utf8(out).unwrap();
        assert!(s.starts_with("FAIL X n=1 boom\n"));
        assert!(s.ends_with("SUMMARY total=1 passed=0 failed=1\n"));
    }
}
