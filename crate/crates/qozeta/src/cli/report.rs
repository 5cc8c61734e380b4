//! The serializable report of one job.

use crate::error::{Error, Result};
use crate::exactalg::{rat, rat_from_str, rat_to_string};
use crate::monodromy::{CycloProduct, PoleVerdict, VerdictStatus};
use crate::zeta::{MotivicExpr, PoleSet, RatFuncS, TreeNode};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Echo of the job input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    /// Polynomial text.
    pub poly: String,
    /// Variables (last is `z`).
    pub vars: Vec<String>,
    /// Form exponents.
    pub nu: Vec<u32>,
}

/// A rational function of `s`: numerator coefficients (lowest degree first, exact
/// `"p/q"` strings) and denominator factors `[N, ν, multiplicity]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    /// Numerator coefficients.
    pub num: Vec<String>,
    /// Denominator factors.
    pub den: Vec<[i64; 3]>,
}

impl RatFuncJson {
    /// Exact encoding of `f`.
    pub fn new(f: &RatFuncS) -> Self {
        RatFuncJson {
            num: f.numerator().iter().map(rat_to_string).collect(),
            den: f.poles().iter().map(|&(n, nu, m)| [n, nu, m as i64]).collect(),
        }
    }

    /// Decodes back to a rational function.
    pub fn to_ratfunc(&self) -> Result<RatFuncS> {
        let num = self.num.iter().map(|s| rat_from_str(s).ok_or_else(|| Error::InvalidInput(format!("bad rational `{s}`")))).collect::<Result<Vec<_>>>()?;
        let mut den = vec![];
        for f in &self.den {
            let m = u32::try_from(f[2]).map_err(|_| Error::InvalidInput(format!("bad multiplicity {}", f[2])))?;
            if f[0] == 0 && f[1] == 0 {
                return Err(Error::InvalidInput("zero denominator factor".into()));
            }
            den.push(((f[0], f[1]), m));
        }
        Ok(RatFuncS::from_parts(num, &den))
    }
}

/// One pole of a topological zeta function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleJson {
    /// `N`.
    #[serde(rename = "N")]
    pub n: i64,
    /// `ν`.
    pub nu: i64,
    /// The pole `−ν/N` as an exact string.
    pub s0: String,
    /// Order.
    pub order: u32,
}

/// A motivic zeta function as a single fraction: numerator terms `[a, b, c]` meaning
/// `c·L^a·T^b` and denominator factors `[a, b, m]` meaning `(1 − L^{−a}T^b)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZmotJson {
    /// Method used (`curve-recursion` or `nondegenerate`).
    pub method: String,
    /// Plain rendering.
    pub expr: String,
    /// Numerator terms.
    pub num: Vec<(i64, i64, String)>,
    /// Denominator factors.
    pub den: Vec<(i64, i64, u32)>,
    /// Its topological specialization.
    pub chi: RatFuncJson,
}

impl ZmotJson {
    /// Exact encoding of `z` (after simplification).
    pub fn new(z: &MotivicExpr, method: &str, chi: &RatFuncS) -> Self {
        let z = z.simplify();
        ZmotJson {
            method: method.to_string(),
            expr: z.to_string(),
            num: z.numerator().iter().map(|(&(l, t), c)| (l, t, c.to_string())).collect(),
            den: z.denominator().iter().map(|(&(a, b), &m)| (a, b, m)).collect(),
            chi: RatFuncJson::new(chi),
        }
    }

    /// Decodes the motivic expression.
    pub fn to_motivic(&self) -> Result<MotivicExpr> {
        let mut num = BTreeMap::new();
        for (l, t, c) in &self.num {
            let c: BigInt = c.parse().map_err(|_| Error::InvalidInput(format!("bad integer `{c}`")))?;
            num.insert((*l, *t), c);
        }
        let den = self.den.iter().map(|&(a, b, m)| ((a, b), m)).collect();
        Ok(MotivicExpr::from_parts(num, den))
    }
}

/// A conjecture verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    /// `N`.
    #[serde(rename = "N")]
    pub n: i64,
    /// `ν`.
    pub nu: i64,
    /// Status name.
    pub status: String,
    /// Witness.
    pub witness: String,
}

impl From<&PoleVerdict> for VerdictJson {
    fn from(v: &PoleVerdict) -> Self {
        VerdictJson { n: v.n, nu: v.nu, status: v.status.to_string(), witness: v.witness.clone() }
    }
}

impl VerdictJson {
    /// True for the two verified statuses.
    pub fn is_verified(&self) -> bool {
        self.status == VerdictStatus::VerifiedAtOrigin.to_string() || self.status == VerdictStatus::VerifiedOnCoordinateStratum.to_string()
    }
}

/// Results of one job; absent sections are omitted from the JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Input echo.
    pub input: InputEcho,
    /// Topological zeta function.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ztop: Option<RatFuncJson>,
    /// Its poles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poles: Option<Vec<PoleJson>>,
    /// Motivic zeta function.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zmot: Option<ZmotJson>,
    /// Candidate poles `[N, ν, provenance]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cp: Option<Vec<(i64, i64, String)>>,
    /// Strong candidate poles `[N, ν, provenance]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scp: Option<Vec<(i64, i64, String)>>,
    /// Monodromy zeta function as `[a, e]` pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monodromy: Option<CycloProduct>,
    /// Conjecture verdicts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictJson>>,
    /// Newton tree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<TreeNode>,
    /// Outcome of the two-path validation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validate: Option<String>,
    /// Advisory warnings.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    /// Plain-text rendering.
    #[serde(skip)]
    pub plain: String,
    /// LaTeX rendering.
    #[serde(skip)]
    pub latex: String,
}

impl Report {
    /// A report with only the input echo.
    pub fn new(input: InputEcho) -> Self {
        Report {
            input,
            ztop: None,
            poles: None,
            zmot: None,
            cp: None,
            scp: None,
            monodromy: None,
            verdicts: None,
            tree: None,
            validate: None,
            warnings: vec![],
            plain: String::new(),
            latex: String::new(),
        }
    }

    /// Fills the `ztop` and `poles` sections.
    pub fn set_ztop(&mut self, z: &RatFuncS) {
        self.ztop = Some(RatFuncJson::new(z));
        self.poles = Some(z.poles().iter().map(|&(n, nu, order)| PoleJson { n, nu, s0: s0(n, nu), order }).collect());
    }
}

/// `−ν/N` as an exact string.
pub(crate) fn s0(n: i64, nu: i64) -> String {
    rat_to_string(&-rat(nu, n))
}

pub(crate) fn pole_rows(p: &PoleSet) -> Vec<(i64, i64, String)> {
    p.entries().map(|(&(n, nu), tags)| (n, nu, tags.join("; "))).collect()
}

pub(crate) fn latex_poles(p: &PoleSet) -> String {
    let items: Vec<String> = p
        .reduced_poles()
        .iter()
        .map(|&(n, nu)| if n == 1 { format!("-{nu}") } else { format!("-\\frac{{{nu}}}{{{n}}}") })
        .collect();
    format!("\\{{{}\\}}", items.join(", "))
}
