//! Command dispatch.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use log::info;
use serde::Serialize;

use tkk_core::algebra::{check_identity, matrix_algebra, plus_algebra, sl_n, Algebra, Identity, Kind};
use tkk_core::homology::hc1_dim;
use tkk_core::jordan::{
    check_five_linear, check_graded, check_jts_axioms, standard_tkk, triple_from_associative, triple_from_jordan,
    universal_tkk_with, GradedLie, TkkOptions, TripleSystem,
};
use tkk_core::uce::{
    build_uce_with, check_extension, growth_report, steinberg_check, verify_thm32, verify_thm41, Theorem, UceOptions,
    VerifyOptions,
};
use tkk_core::Error;

use crate::report::{
    Body, BuildReport, CheckDto, CheckReport, GrowthReport, GrowthRowDto, H2Report, Hc1Report, IsoDto, Report,
    SteinbergReport, VerifyReport,
};
use crate::spec::{self, resolve_base, Object, Product, Term};

pub const THM32_BASES: [&str; 6] = ["scalar", "dual", "double", "grassmann2", "mat2", "free2d2"];
pub const THM41_BASES: [&str; 4] = ["scalar", "double", "dual", "grassmann2"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Sl,
    Plus,
    Matrix,
    Tkk,
    Uce,
}

impl Target {
    fn as_str(self) -> &'static str {
        match self {
            Target::Sl => "sl",
            Target::Plus => "plus",
            Target::Matrix => "matrix",
            Target::Tkk => "tkk",
            Target::Uce => "uce",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Build(Target),
    H2,
    Hc1,
    Verify(Theorem),
    Steinberg,
    Growth,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Build(_) => "build",
            Command::H2 => "h2",
            Command::Hc1 => "hc1",
            Command::Verify(_) => "verify",
            Command::Steinberg => "steinberg",
            Command::Growth => "growth",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub command: Command,
    pub base: Option<String>,
    pub n: Option<usize>,
    /// Export target for `build`.
    pub out: Option<PathBuf>,
    pub fast: bool,
    pub max_dim: usize,
    pub kind: Option<Kind>,
    pub d_max: usize,
}

impl Config {
    pub fn new(command: Command) -> Self {
        Config {
            command,
            base: None,
            n: None,
            out: None,
            fast: false,
            max_dim: tkk_core::uce::DEFAULT_MAX_WEDGE_DIM,
            kind: None,
            d_max: 3,
        }
    }

    fn uce(&self) -> UceOptions {
        UceOptions {
            max_wedge_dim: self.max_dim,
        }
    }

    fn base(&self) -> Result<&str> {
        self.base.as_deref().context("--base is required for this command")
    }
}

fn timed<T>(what: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let start = Instant::now();
    let r = f();
    info!("{what}: {:.3}s", start.elapsed().as_secs_f64());
    r
}

fn algebra(obj: Object, what: &str) -> Result<Algebra> {
    match obj {
        Object::Algebra(a) => Ok(a),
        Object::Triple(t) => bail!("{what} needs an algebra, got triple system {}", t.name()),
    }
}

fn associative(cfg: &Config, what: &str) -> Result<Algebra> {
    let a = algebra(resolve_base(cfg.base()?, None)?, what)?;
    a.require_kind(Kind::Associative)?;
    Ok(a)
}

pub fn run(cfg: &Config) -> Result<Report> {
    if cfg.max_dim == 0 {
        bail!("--max-dim must be positive");
    }
    let (passed, body) = match &cfg.command {
        Command::Check => check(cfg)?,
        Command::Build(t) => build(cfg, *t)?,
        Command::H2 => h2(cfg)?,
        Command::Hc1 => {
            let a = associative(cfg, "hc1")?;
            let h = timed("hc1", || Ok(hc1_dim(&a)?))?;
            (
                true,
                Body::Hc1(Hc1Report {
                    algebra: a.name().into(),
                    dim: a.dim(),
                    hc1_dim: h,
                }),
            )
        }
        Command::Verify(t) => verify(cfg, *t)?,
        Command::Steinberg => steinberg(cfg)?,
        Command::Growth => {
            let rows = timed("growth", || Ok(growth_report(cfg.d_max, &cfg.uce())?))?;
            let nondecreasing = rows.windows(2).all(|w| w[0].dim_sl2 <= w[1].dim_sl2);
            (
                nondecreasing,
                Body::Growth(GrowthReport {
                    d_max: cfg.d_max,
                    dim_sl2_nondecreasing: nondecreasing,
                    rows: rows.iter().map(GrowthRowDto::from).collect(),
                }),
            )
        }
    };
    Ok(Report::new(cfg.command.name(), passed, body))
}

fn identities(kind: Kind) -> &'static [Identity] {
    match kind {
        Kind::Associative => &[Identity::Associativity],
        Kind::Lie => &[Identity::Anticommutativity, Identity::Jacobi],
        Kind::Jordan => &[Identity::Commutativity, Identity::Jordan],
        Kind::Untagged => &[],
    }
}

fn algebra_checks(a: &Algebra) -> Vec<CheckDto> {
    identities(a.kind())
        .iter()
        .map(|&i| CheckDto::from_identity(&check_identity(a, i), Some(a.space())))
        .collect()
}

fn triple_checks(t: &TripleSystem) -> Vec<CheckDto> {
    [check_jts_axioms(t), check_five_linear(t)]
        .iter()
        .map(|r| CheckDto::from_identity(r, Some(t.space())))
        .collect()
}

fn check(cfg: &Config) -> Result<(bool, Body)> {
    let base = cfg.base()?;
    let report = match resolve_base(base, cfg.kind) {
        Ok(Object::Algebra(a)) => CheckReport {
            object: a.name().into(),
            kind: a.kind().to_string(),
            dim: a.dim(),
            rejected: None,
            checks: algebra_checks(&a),
        },
        Ok(Object::Triple(t)) => CheckReport {
            object: t.name().into(),
            kind: "triple".into(),
            dim: t.dim(),
            rejected: None,
            checks: triple_checks(&t),
        },
        Err(e) => {
            let Some(Error::Validation { what, report }) = e.downcast_ref::<Error>() else {
                return Err(e);
            };
            // Reload without checks for the name and dimension.
            let raw = algebra(resolve_base(base, Some(Kind::Untagged))?, "check")?;
            CheckReport {
                object: raw.name().into(),
                kind: cfg
                    .kind
                    .map_or_else(|| what.split(' ').next().unwrap_or_default().to_string(), |k| k.to_string()),
                dim: raw.dim(),
                rejected: Some(format!("{what} failed validation")),
                checks: vec![CheckDto::from_identity(report, Some(raw.space()))],
            }
        }
    };
    let passed = report.rejected.is_none() && report.checks.iter().all(|c| c.holds);
    Ok((passed, Body::Check(report)))
}

/// `{dims, bracket, kernel_dim_over_standard}` export of a graded Lie algebra.
#[derive(Serialize)]
struct GradedExport<'a> {
    name: &'a str,
    dims: [usize; 3],
    basis: &'a [String],
    bracket: Vec<Product>,
    kernel_dim_over_standard: usize,
}

fn bracket_entries(a: &Algebra) -> Vec<Product> {
    a.table()
        .nonzero()
        .filter(|(i, j, _)| i < j)
        .map(|(i, j, v)| Product {
            i,
            j,
            terms: v.iter().map(|(k, c)| Term { k, c: c.to_string() }).collect(),
        })
        .collect()
}

fn write_json<T: Serialize>(cfg: &Config, value: &T) -> Result<()> {
    if let Some(path) = &cfg.out {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn triple_of(obj: Object) -> Result<TripleSystem> {
    match obj {
        Object::Triple(t) => Ok(t),
        Object::Algebra(a) => match a.kind() {
            Kind::Associative => Ok(triple_from_associative(&a)?),
            Kind::Jordan => Ok(triple_from_jordan(&a)?),
            k => bail!("no triple product on a {k} algebra"),
        },
    }
}

fn build(cfg: &Config, target: Target) -> Result<(bool, Body)> {
    let obj = resolve_base(cfg.base()?, None)?;
    let mut report = BuildReport {
        target: target.as_str().into(),
        name: String::new(),
        kind: String::new(),
        dim: 0,
        dims: None,
        standard_dim: None,
        kernel_dim_over_standard: None,
        h2_dim: None,
        checks: Vec::new(),
    };
    let built = match target {
        Target::Sl => {
            let a = algebra(obj, "sl")?;
            Some(sl_n(&a, cfg.n.unwrap_or(2))?.algebra().clone())
        }
        Target::Plus => Some(plus_algebra(&algebra(obj, "plus")?)?),
        Target::Matrix => Some(matrix_algebra(&algebra(obj, "matrix")?, cfg.n.unwrap_or(2))?),
        Target::Tkk => {
            let t = triple_of(obj)?;
            let u = timed("universal tkk", || Ok(universal_tkk_with(&t, &TkkOptions { fast: cfg.fast })?))?;
            let s = timed("standard tkk", || Ok(standard_tkk(&t)?))?;
            let kernel = u.dims()[1] - s.dims()[1];
            report.dims = Some(u.dims());
            report.standard_dim = Some(s.dim());
            report.kernel_dim_over_standard = Some(kernel);
            report.checks = graded_checks(&u);
            write_json(
                cfg,
                &GradedExport {
                    name: u.algebra().name(),
                    dims: u.dims(),
                    basis: u.algebra().space().labels(),
                    bracket: bracket_entries(u.algebra()),
                    kernel_dim_over_standard: kernel,
                },
            )?;
            fill(&mut report, u.algebra());
            None
        }
        Target::Uce => {
            let a = algebra(obj, "uce")?;
            let g = if a.kind() == Kind::Lie {
                a
            } else {
                sl_n(&a, cfg.n.unwrap_or(2))?.algebra().clone()
            };
            let e = timed("uce", || Ok(build_uce_with(&g, &cfg.uce())?))?;
            report.h2_dim = Some(e.h2_dim());
            report.checks.push(CheckDto::from_identity(&check_extension(&e)?, None));
            Some(e.total().clone())
        }
    };
    if let Some(a) = built {
        report.checks.extend(algebra_checks(&a));
        write_json(cfg, &spec::export_algebra(&a))?;
        fill(&mut report, &a);
    }
    let passed = report.checks.iter().all(|c| c.holds);
    Ok((passed, Body::Build(report)))
}

fn fill(r: &mut BuildReport, a: &Algebra) {
    r.name = a.name().into();
    r.kind = a.kind().to_string();
    r.dim = a.dim();
}

fn graded_checks(g: &GradedLie) -> Vec<CheckDto> {
    vec![
        CheckDto::from_identity(&check_identity(g.algebra(), Identity::Jacobi), None),
        CheckDto::from_identity(&check_graded(g), None),
    ]
}

fn h2(cfg: &Config) -> Result<(bool, Body)> {
    let a = algebra(resolve_base(cfg.base()?, None)?, "h2")?;
    let g = match a.kind() {
        Kind::Lie => a,
        Kind::Associative => sl_n(&a, cfg.n.unwrap_or(2))?.algebra().clone(),
        k => bail!("h2 needs a Lie or associative base, got {k}"),
    };
    let e = timed("uce", || Ok(build_uce_with(&g, &cfg.uce())?))?;
    Ok((
        true,
        Body::H2(H2Report {
            algebra: g.name().into(),
            dim: g.dim(),
            dim_uce: e.total().dim(),
            h2_dim: e.h2_dim(),
        }),
    ))
}

fn verify(cfg: &Config, theorem: Theorem) -> Result<(bool, Body)> {
    let opts = VerifyOptions {
        tkk: TkkOptions { fast: cfg.fast },
        uce: cfg.uce(),
    };
    let bases: Vec<String> = match &cfg.base {
        Some(b) => vec![b.clone()],
        None => match theorem {
            Theorem::Thm32 => THM32_BASES.iter().map(|s| s.to_string()).collect(),
            Theorem::Thm41 => THM41_BASES.iter().map(|s| s.to_string()).collect(),
        },
    };
    let mut results = Vec::with_capacity(bases.len());
    for b in &bases {
        let a = algebra(resolve_base(b, None)?, "verify")?;
        let r = timed(&format!("verify {theorem} {b}"), || {
            Ok(match theorem {
                Theorem::Thm32 => verify_thm32(&a, &opts)?,
                Theorem::Thm41 => verify_thm41(&a, &opts)?,
            })
        })?;
        info!("{theorem} {b}: uce {} tkk {} iso {}", r.dim_uce, r.dim_tkk, r.iso);
        results.push(IsoDto::from(&r));
    }
    let passed = results.iter().all(|r| r.iso && r.checks.iter().all(|c| c.holds));
    Ok((
        passed,
        Body::Verify(VerifyReport {
            theorem: theorem.as_str().into(),
            results,
        }),
    ))
}

fn steinberg(cfg: &Config) -> Result<(bool, Body)> {
    let a = associative(cfg, "steinberg")?;
    let n = cfg.n.unwrap_or(4);
    let sl = sl_n(&a, n)?;
    let e = timed("uce", || Ok(build_uce_with(sl.algebra(), &cfg.uce())?))?;
    let r = timed("steinberg", || Ok(steinberg_check(&e, &sl)?))?;
    Ok((
        r.holds,
        Body::Steinberg(SteinbergReport {
            base: a.name().into(),
            n,
            dim_uce: e.total().dim(),
            h2_dim: e.h2_dim(),
            relations: CheckDto::from_identity(&r, None),
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command, base: &str) -> Config {
        let mut c = Config::new(command);
        c.base = Some(base.into());
        c
    }

    #[test]
    fn verify_scalar_thm32() {
        let r = run(&cfg(Command::Verify(Theorem::Thm32), "scalar")).unwrap();
        assert!(r.passed);
        let Body::Verify(v) = &r.result else { panic!() };
        assert_eq!((v.results[0].dim_uce, v.results[0].dim_tkk), (3, 3));
    }

    #[test]
    fn mat2_tagged_jordan_fails_with_witness() {
        let mut c = cfg(Command::Check, "mat2");
        c.kind = Some(Kind::Jordan);
        let r = run(&c).unwrap();
        assert!(!r.passed);
        let Body::Check(ch) = &r.result else { panic!() };
        assert!(ch.checks[0].witness.is_some());
    }

    #[test]
    fn build_tkk_of_mat2() {
        let r = run(&cfg(Command::Build(Target::Tkk), "mat2")).unwrap();
        assert!(r.passed);
        let Body::Build(b) = &r.result else { panic!() };
        assert_eq!(b.standard_dim, Some(15));
    }

    #[test]
    fn growth_guard_is_an_error() {
        let mut c = Config::new(Command::Growth);
        c.max_dim = 50;
        assert!(run(&c).is_err());
        c.max_dim = 0;
        assert!(run(&c).is_err());
    }

    #[test]
    fn steinberg_needs_n_at_least_three() {
        let mut c = cfg(Command::Steinberg, "scalar");
        c.n = Some(2);
        assert!(run(&c).is_err());
    }
}
