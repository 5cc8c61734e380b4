//! Command-line surface: job specification, report assembly, output formats
//! (plain, LaTeX, JSON) and the argument-parsing driver.
//!
//! ```
//! use qozeta::cli::run;
//! let mut out = Vec::new();
//! let mut err = Vec::new();
//! let code = run(["qozeta", "ztop", "--vars", "x,z", "z^2-x^3"], &mut out, &mut err);
//! assert_eq!(code, 0);
//! assert_eq!(String::from_utf8(out).unwrap().trim(), "(4*s+5)/((s+1)*(6*s+5))");
//! ```

mod report;

pub use report::{InputEcho, PoleJson, RatFuncJson, Report, VerdictJson, ZmotJson};

use crate::error::{Error, Result};
use crate::monodromy::{check_conjecture, zeta_monodromy_qo};
use crate::mpoly::{parse, FormExponents, MPoly, QOPair};
use crate::zeta::{
    candidate_poles, chi_specialize, newton_tree, strong_candidate_poles, zmot_curve, zmot_nondeg_qo, ztop_nondeg_report,
    ztop_qo, MotivicExpr, NondegOptions, DEFAULT_MAX_DIM, DEFAULT_MAX_SHIFTS,
};
use clap::{Parser, ValueEnum};
use std::io::Write;

/// The computation requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Topological zeta function by the Newton-map recursion.
    Ztop,
    /// Topological zeta function by the non-degenerate fan formula.
    Nondeg,
    /// Motivic zeta function (curve recursion or non-degenerate formula).
    Zmot,
    /// Monodromy zeta function at the origin.
    Monodromy,
    /// Candidate and strong candidate poles with provenance.
    Poles,
    /// Monodromy-conjecture verdict for every strong candidate pole.
    Check,
    /// Decorated Newton tree.
    Tree,
    /// Runs both topological paths and checks that they agree.
    Validate,
}

/// Output format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    #[default]
    Plain,
    /// LaTeX (presentation only).
    Latex,
    /// Deterministic JSON with exact rational strings.
    Json,
}

/// A fully specified job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    /// Polynomial text.
    pub poly: String,
    /// Variable names; the last one is `z`.
    pub vars: Vec<String>,
    /// Form exponents `ν` (one per x-variable).
    pub nu: Vec<u32>,
    /// Computation.
    pub command: Command,
    /// Output format.
    pub format: Format,
    /// Bound on coordinate shifts per normalization.
    pub max_shifts: usize,
    /// Accept faces whose non-degeneracy cannot be checked exactly.
    pub assume_nondegenerate: bool,
    /// Largest number of variables for the general fan.
    pub max_dim: usize,
}

impl JobSpec {
    /// A job with default options and `ν = (1, …, 1)`.
    pub fn new(command: Command, poly: &str, vars: &[&str]) -> Self {
        JobSpec {
            poly: poly.to_string(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            nu: vec![1; vars.len().saturating_sub(1)],
            command,
            format: Format::Plain,
            max_shifts: DEFAULT_MAX_SHIFTS,
            assume_nondegenerate: false,
            max_dim: DEFAULT_MAX_DIM,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.vars.len() < 2 {
            return Err(Error::InvalidInput("at least two variables are needed (x-variables, then z)".into()));
        }
        if self.nu.len() + 1 != self.vars.len() {
            return Err(Error::InvalidInput(format!(
                "{} form exponents given for {} x-variables",
                self.nu.len(),
                self.vars.len() - 1
            )));
        }
        FormExponents::new(self.nu.clone())?;
        Ok(())
    }

    fn polynomial(&self) -> Result<MPoly> {
        parse(&self.poly, &self.vars)
    }

    fn pair(&self) -> Result<QOPair> {
        QOPair::from_poly(&self.polynomial()?, FormExponents::new(self.nu.clone())?)
    }

    fn nondeg_options(&self) -> NondegOptions {
        NondegOptions { assume_nondegenerate: self.assume_nondegenerate, max_dim: self.max_dim }
    }
}

/// Motivic zeta function with the method used: the curve recursion when every edge
/// cone has multiplicity 1, otherwise the non-degenerate formula.
pub fn zmot_auto(p: &QOPair, max_shifts: usize) -> Result<(MotivicExpr, &'static str)> {
    match zmot_curve(p, max_shifts) {
        Ok(z) => Ok((z, "curve-recursion")),
        Err(Error::UnsupportedDegenerateMotivic(why)) => match zmot_nondeg_qo(p, max_shifts) {
            Ok(z) => Ok((z, "nondegenerate")),
            Err(Error::Degenerate(d)) => Err(Error::UnsupportedDegenerateMotivic(format!("{why}; and {d}"))),
            Err(e) => Err(e),
        },
        Err(e) => Err(e),
    }
}

/// Runs a job and assembles its report (plain and LaTeX renderings included).
pub fn execute(job: &JobSpec) -> Result<Report> {
    job.validate()?;
    let mut r = Report::new(InputEcho { poly: job.poly.clone(), vars: job.vars.clone(), nu: job.nu.clone() });
    match job.command {
        Command::Ztop => {
            let p = job.pair()?;
            let z = ztop_qo(&p, job.max_shifts)?;
            let scp = strong_candidate_poles(&p, job.max_shifts)?;
            r.set_ztop(&z);
            r.scp = Some(report::pole_rows(&scp));
            r.plain = z.to_string();
            r.latex = z.to_latex();
        }
        Command::Nondeg => {
            let h = job.polynomial()?;
            let res = ztop_nondeg_report(&h, &job.nu, &job.nondeg_options())?;
            r.set_ztop(&res.zeta);
            r.warnings = res.warnings;
            r.plain = res.zeta.to_string();
            r.latex = res.zeta.to_latex();
        }
        Command::Zmot => {
            let p = job.pair()?;
            let (z, method) = zmot_auto(&p, job.max_shifts)?;
            let chi = chi_specialize(&z)?;
            r.zmot = Some(ZmotJson::new(&z, method, &chi));
            r.plain = z.to_string();
            r.latex = z.to_latex();
        }
        Command::Monodromy => {
            let z = zeta_monodromy_qo(&job.pair()?, job.max_shifts)?;
            r.plain = z.to_string();
            r.latex = z.to_latex();
            r.monodromy = Some(z);
        }
        Command::Poles => {
            let p = job.pair()?;
            let cp = candidate_poles(&p, job.max_shifts)?;
            let scp = strong_candidate_poles(&p, job.max_shifts)?;
            r.plain = format!("CP\n{cp}SCP\n{scp}").trim_end().to_string();
            r.latex = format!("CP = {}\\quad SCP = {}", report::latex_poles(&cp), report::latex_poles(&scp));
            r.cp = Some(report::pole_rows(&cp));
            r.scp = Some(report::pole_rows(&scp));
        }
        Command::Check => {
            let p = job.pair()?;
            let verdicts = check_conjecture(&p, job.max_shifts)?;
            match zeta_monodromy_qo(&p, job.max_shifts) {
                Ok(z) => r.monodromy = Some(z),
                Err(Error::UnsupportedMonodromy(why)) => r.warnings.push(format!("monodromy at the origin not computed: {why}")),
                Err(e) => return Err(e),
            }
            r.plain = verdicts
                .iter()
                .map(|v| format!("({},{})  s = {}  {}  {}", v.n, v.nu, report::s0(v.n, v.nu), v.status, v.witness))
                .collect::<Vec<_>>()
                .join("\n");
            r.latex = r.plain.clone();
            r.verdicts = Some(verdicts.iter().map(VerdictJson::from).collect());
        }
        Command::Tree => {
            let t = newton_tree(&job.pair()?, job.max_shifts)?;
            r.plain = t.to_string().trim_end().to_string();
            r.latex = r.plain.clone();
            r.tree = Some(t);
        }
        Command::Validate => {
            let p = job.pair()?;
            let a = ztop_qo(&p, job.max_shifts)?;
            let b = ztop_nondeg_report(&p.full(), &job.nu, &job.nondeg_options())?;
            r.warnings = b.warnings.clone();
            if a != b.zeta {
                return Err(Error::Internal(format!("recursion gives {a} but the non-degenerate formula gives {}", b.zeta)));
            }
            r.set_ztop(&a);
            r.validate = Some("OK".into());
            r.plain = "OK: recursion == nondegenerate formula".into();
            r.latex = r.plain.clone();
        }
    }
    Ok(r)
}

/// Serializes a report as deterministic JSON.
pub fn emit_json(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

#[derive(Parser, Debug)]
#[command(name = "qozeta", version, about = "Exact zeta functions and monodromy of quasi-ordinary polynomials")]
struct Cli {
    /// Computation to run.
    #[arg(value_enum)]
    command: Command,
    /// Polynomial, e.g. "z^2-x^3" (or use --file).
    poly: Option<String>,
    /// Comma-separated variable names; the last one is z.
    #[arg(long, default_value = "x,z")]
    vars: String,
    /// Comma-separated form exponents nu (default all 1).
    #[arg(long)]
    form: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Maximum coordinate shifts per normalization.
    #[arg(long, default_value_t = DEFAULT_MAX_SHIFTS)]
    max_shifts: usize,
    /// Accept higher-dimensional faces whose non-degeneracy cannot be verified exactly.
    #[arg(long)]
    assume_nondegenerate: bool,
    /// Maximum number of variables for the general non-degenerate formula.
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
    /// Read the polynomial from a file.
    #[arg(long)]
    file: Option<std::path::PathBuf>,
}

fn job_from_cli(cli: Cli) -> Result<JobSpec> {
    let poly = match (&cli.poly, &cli.file) {
        (Some(_), Some(_)) => return Err(Error::InvalidInput("give the polynomial either inline or with --file, not both".into())),
        (Some(p), None) => p.clone(),
        (None, Some(f)) => std::fs::read_to_string(f)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", f.display())))?
            .trim()
            .to_string(),
        (None, None) => return Err(Error::InvalidInput("no polynomial given".into())),
    };
    let vars: Vec<String> = cli.vars.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
    let nu = match &cli.form {
        None => vec![1; vars.len().saturating_sub(1)],
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::InvalidInput(format!("bad form exponent `{t}`"))))
            .collect::<Result<Vec<u32>>>()?,
    };
    Ok(JobSpec {
        poly,
        vars,
        nu,
        command: cli.command,
        format: cli.format,
        max_shifts: cli.max_shifts,
        assume_nondegenerate: cli.assume_nondegenerate,
        max_dim: cli.max_dim,
    })
}

/// Parses `argv` (including the program name), runs the job and writes the result.
///
/// Returns the exit code: 0 on success, 1 on input errors, 2 on internal errors.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let outcome = job_from_cli(cli).and_then(|job| execute(&job).map(|r| (job.format, r)));
    match outcome {
        Ok((format, report)) => {
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let text = match format {
                Format::Plain => report.plain.clone(),
                Format::Latex => report.latex.clone(),
                Format::Json => emit_json(&report),
            };
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                1
            } else {
                2
            }
        }
    }
}
