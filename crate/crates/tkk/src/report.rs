//! Report objects. Machine output is one JSON object per run; field order is
//! the declaration order below and never depends on hashing.

use std::fmt::Write as _;

use serde::Serialize;

use tkk_core::algebra::{IdentityReport, Witness};
use tkk_core::linalg::{BasedSpace, SparseVec};
use tkk_core::uce::{Check, GrowthRow, IsoReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub passed: bool,
    pub result: Body,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Body {
    Check(CheckReport),
    Build(BuildReport),
    H2(H2Report),
    Hc1(Hc1Report),
    Verify(VerifyReport),
    Steinberg(SteinbergReport),
    Growth(GrowthReport),
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessDto {
    pub inputs: Vec<String>,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDto {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

/// `3/2*[4] - [7]`: coefficients on raw basis indices, for witnesses whose
/// inputs live in more than one space.
pub fn format_indexed(v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let neg = c.signum() < 0;
        let mag = if neg { -c } else { c.clone() };
        s.push_str(match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if !mag.is_one() {
            let _ = write!(s, "{mag}*");
        }
        let _ = write!(s, "[{i}]");
    }
    s
}

fn witness_dto(w: &Witness, space: Option<&BasedSpace>) -> WitnessDto {
    let f = |v: &SparseVec| match space {
        Some(sp) => sp.format_vector(v),
        None => format_indexed(v),
    };
    WitnessDto {
        inputs: w.inputs.iter().map(f).collect(),
        left: f(&w.left),
        right: f(&w.right),
    }
}

impl CheckDto {
    pub fn from_identity(r: &IdentityReport, space: Option<&BasedSpace>) -> Self {
        CheckDto {
            name: r.identity.clone(),
            holds: r.holds,
            witness: r.witness.as_ref().map(|w| witness_dto(w, space)),
        }
    }

    pub fn from_check(c: &Check) -> Self {
        CheckDto {
            name: c.name.clone(),
            holds: c.holds,
            witness: c.witness.as_ref().map(|w| witness_dto(w, None)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub object: String,
    pub kind: String,
    pub dim: usize,
    /// Set when the input was rejected while loading.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected: Option<String>,
    pub checks: Vec<CheckDto>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildReport {
    pub target: String,
    pub name: String,
    pub kind: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_dim_over_standard: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h2_dim: Option<usize>,
    pub checks: Vec<CheckDto>,
}

#[derive(Clone, Debug, Serialize)]
pub struct H2Report {
    pub algebra: String,
    pub dim: usize,
    pub dim_uce: usize,
    pub h2_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Hc1Report {
    pub algebra: String,
    pub dim: usize,
    pub hc1_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoDto {
    pub theorem: String,
    pub base: String,
    pub dim_uce: usize,
    pub dim_tkk: usize,
    pub h2_dim: usize,
    pub hc1_dim: usize,
    pub kernel_dim_over_standard: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub placement: Option<String>,
    pub iso: bool,
    pub checks: Vec<CheckDto>,
    pub notes: Vec<CheckDto>,
}

impl From<&IsoReport> for IsoDto {
    fn from(r: &IsoReport) -> Self {
        IsoDto {
            theorem: r.theorem.as_str().into(),
            base: r.base.clone(),
            dim_uce: r.dim_uce,
            dim_tkk: r.dim_tkk,
            h2_dim: r.h2_dim,
            hc1_dim: r.hc1_dim,
            kernel_dim_over_standard: r.kernel_over_standard,
            placement: r.placement.clone(),
            iso: r.iso,
            checks: r.checks.iter().map(CheckDto::from_check).collect(),
            notes: r.notes.iter().map(CheckDto::from_check).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub results: Vec<IsoDto>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SteinbergReport {
    pub base: String,
    pub n: usize,
    pub dim_uce: usize,
    pub h2_dim: usize,
    pub relations: CheckDto,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthRowDto {
    pub d: usize,
    pub dim_a: usize,
    pub dim_sl2: usize,
    pub h2: usize,
}

impl From<&GrowthRow> for GrowthRowDto {
    fn from(r: &GrowthRow) -> Self {
        GrowthRowDto {
            d: r.degree,
            dim_a: r.dim_algebra,
            dim_sl2: r.dim_sl2,
            h2: r.h2_dim,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub d_max: usize,
    pub dim_sl2_nondecreasing: bool,
    pub rows: Vec<GrowthRowDto>,
}

fn check_lines(s: &mut String, label: &str, checks: &[CheckDto]) {
    for c in checks {
        let _ = writeln!(s, "  {label} {:<28} {}", c.name, if c.holds { "ok" } else { "FAILED" });
        if let Some(w) = &c.witness {
            let _ = writeln!(s, "    inputs: {}", w.inputs.join(", "));
            let _ = writeln!(s, "    left:   {}", w.left);
            let _ = writeln!(s, "    right:  {}", w.right);
        }
    }
}

impl Report {
    pub fn new(command: &str, passed: bool, result: Body) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            passed,
            result,
        }
    }

    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        match &self.result {
            Body::Check(r) => {
                let _ = writeln!(s, "{} ({}, dim {})", r.object, r.kind, r.dim);
                if let Some(why) = &r.rejected {
                    let _ = writeln!(s, "  rejected: {why}");
                }
                check_lines(&mut s, "check", &r.checks);
            }
            Body::Build(r) => {
                let _ = writeln!(s, "{} {} ({}, dim {})", r.target, r.name, r.kind, r.dim);
                if let Some([m, z, p]) = r.dims {
                    let _ = writeln!(s, "  graded dims: {m} + {z} + {p}");
                }
                if let Some(d) = r.standard_dim {
                    let _ = writeln!(s, "  standard dim: {d}");
                }
                if let Some(k) = r.kernel_dim_over_standard {
                    let _ = writeln!(s, "  kernel over standard: {k}");
                }
                if let Some(h) = r.h2_dim {
                    let _ = writeln!(s, "  h2: {h}");
                }
                check_lines(&mut s, "check", &r.checks);
            }
            Body::H2(r) => {
                let _ = writeln!(s, "{}: dim {}, uce dim {}, h2 {}", r.algebra, r.dim, r.dim_uce, r.h2_dim);
            }
            Body::Hc1(r) => {
                let _ = writeln!(s, "{}", r.hc1_dim);
            }
            Body::Verify(r) => {
                for x in &r.results {
                    let _ = writeln!(
                        s,
                        "{} {}: iso {} (uce {}, tkk {}, h2 {}, hc1 {}, kernel over standard {})",
                        x.theorem, x.base, x.iso, x.dim_uce, x.dim_tkk, x.h2_dim, x.hc1_dim, x.kernel_dim_over_standard
                    );
                    if let Some(p) = &x.placement {
                        let _ = writeln!(s, "  placement: {p}");
                    }
                    check_lines(&mut s, "check", &x.checks);
                    check_lines(&mut s, "note ", &x.notes);
                }
            }
            Body::Steinberg(r) => {
                let _ = writeln!(s, "steinberg sl{}({}): uce dim {}, h2 {}", r.n, r.base, r.dim_uce, r.h2_dim);
                check_lines(&mut s, "check", std::slice::from_ref(&r.relations));
            }
            Body::Growth(r) => {
                let _ = writeln!(s, "{:>2} {:>6} {:>8} {:>4}", "d", "dim A", "dim sl2", "h2");
                for row in &r.rows {
                    let _ = writeln!(s, "{:>2} {:>6} {:>8} {:>4}", row.d, row.dim_a, row.dim_sl2, row.h2);
                }
            }
        }
        if !matches!(self.result, Body::Hc1(_)) {
            let _ = writeln!(s, "{}", if self.passed { "PASSED" } else { "FAILED" });
        }
        s
    }
}
