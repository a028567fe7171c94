//! JSON spec files for algebras and triple systems.
//!
//! Scalars are strings (`"3"`, `"-1/2"`). An algebra is either a concrete
//! table or a `{"construct": ...}` builder that expands to one.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::Value;

use tkk_core::algebra::{
    direct_sum, grassmann, make_algebra, matrix_algebra, plus_algebra, scalar_field, sl_n, truncated_free, Algebra,
    Kind, Polynomial, StructureTable,
};
use tkk_core::corpus;
use tkk_core::jordan::TripleSystem;
use tkk_core::linalg::{BasedSpace, SparseVec};
use tkk_core::{Error, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Product {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub name: String,
    pub kind: String,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub products: Vec<Product>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordTerm {
    pub c: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "construct", rename_all = "snake_case", deny_unknown_fields)]
pub enum Construct {
    Scalar {},
    Builtin {
        name: String,
    },
    Matrix {
        n: usize,
        base: Box<AlgebraSpec>,
    },
    Sl {
        n: usize,
        base: Box<AlgebraSpec>,
    },
    Plus {
        base: Box<AlgebraSpec>,
    },
    TruncatedFree {
        generators: Vec<String>,
        degree: usize,
        #[serde(default)]
        relations: Vec<Vec<WordTerm>>,
    },
    Grassmann {
        m: usize,
    },
    DirectSum {
        left: Box<AlgebraSpec>,
        right: Box<AlgebraSpec>,
    },
}

#[derive(Clone, Debug)]
pub enum AlgebraSpec {
    Table(TableSpec),
    Construct(Construct),
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        if v.get("construct").is_some() {
            Construct::deserialize(v).map(AlgebraSpec::Construct).map_err(D::Error::custom)
        } else {
            TableSpec::deserialize(v).map(AlgebraSpec::Table).map_err(D::Error::custom)
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleTerm {
    pub t: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleEntry {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub terms: Vec<TripleTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleSpec {
    pub name: String,
    pub basis: Vec<String>,
    pub gamma: Vec<TripleEntry>,
}

/// What a spec file or `--base` argument resolves to.
#[derive(Clone, Debug)]
pub enum Object {
    Algebra(Algebra),
    Triple(TripleSystem),
}

fn scalar(s: &str, field: &str) -> Result<Scalar> {
    s.parse::<Scalar>().map_err(|e| anyhow!("{field}: {e}"))
}

fn index(i: usize, dim: usize, field: &str) -> Result<usize> {
    if i >= dim {
        bail!("{field}: index {i} out of range for dimension {dim}");
    }
    Ok(i)
}

fn table_algebra(t: &TableSpec, kind_override: Option<Kind>) -> Result<Algebra> {
    let space = BasedSpace::new(t.basis.clone()).context("basis")?;
    let dim = space.dim();
    let kind = match kind_override {
        Some(k) => k,
        None => t.kind.parse().map_err(|e: Error| anyhow!("kind: {e}"))?,
    };
    let mut table = StructureTable::new(dim);
    for (p, prod) in t.products.iter().enumerate() {
        let i = index(prod.i, dim, &format!("products[{p}].i"))?;
        let j = index(prod.j, dim, &format!("products[{p}].j"))?;
        if !table.get(i, j).is_zero() {
            bail!("products[{p}]: duplicate entry for ({i}, {j})");
        }
        let mut v = SparseVec::new();
        for (q, term) in prod.terms.iter().enumerate() {
            let k = index(term.k, dim, &format!("products[{p}].terms[{q}].k"))?;
            let c = scalar(&term.c, &format!("products[{p}].terms[{q}].c"))?;
            v.add_scaled(&c, &SparseVec::unit(k));
        }
        table.set(i, j, v);
    }
    let unit = match &t.unit {
        None => None,
        Some(cs) => {
            if cs.len() != dim {
                bail!("unit: expected {dim} coefficients, found {}", cs.len());
            }
            let values = cs
                .iter()
                .enumerate()
                .map(|(k, c)| scalar(c, &format!("unit[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            Some(SparseVec::from_dense(&values))
        }
    };
    Ok(make_algebra(&t.name, space, table, kind, unit)?)
}

fn polynomial(terms: &[WordTerm], gens: &[String], r: usize) -> Result<Polynomial> {
    let mut out = Vec::with_capacity(terms.len());
    for (q, term) in terms.iter().enumerate() {
        let c = scalar(&term.c, &format!("relations[{r}][{q}].c"))?;
        let word = term
            .word
            .iter()
            .map(|g| {
                gens.iter()
                    .position(|x| x == g)
                    .ok_or_else(|| anyhow!("relations[{r}][{q}].word: unknown generator {g:?}"))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push((c, word));
    }
    Ok(Polynomial { terms: out })
}

/// Expands a spec to a validated algebra. `kind_override` replaces the
/// declared kind (builders are re-validated under it).
pub fn build_algebra(spec: &AlgebraSpec, kind_override: Option<Kind>) -> Result<Algebra> {
    let a = match spec {
        AlgebraSpec::Table(t) => return table_algebra(t, kind_override),
        AlgebraSpec::Construct(c) => match c {
            Construct::Scalar {} => scalar_field(),
            Construct::Builtin { name } => corpus::builtin(name)?,
            Construct::Matrix { n, base } => matrix_algebra(&build_algebra(base, None)?, *n)?,
            Construct::Sl { n, base } => sl_n(&build_algebra(base, None)?, *n)?.algebra().clone(),
            Construct::Plus { base } => plus_algebra(&build_algebra(base, None)?)?,
            Construct::TruncatedFree {
                generators,
                degree,
                relations,
            } => {
                let rels = relations
                    .iter()
                    .enumerate()
                    .map(|(r, p)| polynomial(p, generators, r))
                    .collect::<Result<Vec<_>>>()?;
                let names: Vec<&str> = generators.iter().map(String::as_str).collect();
                truncated_free(&names, *degree, &rels)?
            }
            Construct::Grassmann { m } => grassmann(*m)?,
            Construct::DirectSum { left, right } => {
                direct_sum(&build_algebra(left, None)?, &build_algebra(right, None)?)?
            }
        },
    };
    match kind_override {
        Some(k) if k != a.kind() => retag(&a, k),
        _ => Ok(a),
    }
}

/// The same table validated under another kind.
pub fn retag(a: &Algebra, kind: Kind) -> Result<Algebra> {
    Ok(make_algebra(
        a.name(),
        a.space().clone(),
        a.table().clone(),
        kind,
        a.unit().cloned(),
    )?)
}

pub fn build_triple(spec: &TripleSpec) -> Result<TripleSystem> {
    let space = BasedSpace::new(spec.basis.clone()).context("basis")?;
    let n = space.dim();
    let mut entries = Vec::with_capacity(spec.gamma.len());
    for (p, e) in spec.gamma.iter().enumerate() {
        let u = index(e.u, n, &format!("gamma[{p}].u"))?;
        let v = index(e.v, n, &format!("gamma[{p}].v"))?;
        let w = index(e.w, n, &format!("gamma[{p}].w"))?;
        let mut val = SparseVec::new();
        for (q, term) in e.terms.iter().enumerate() {
            let t = index(term.t, n, &format!("gamma[{p}].terms[{q}].t"))?;
            let c = scalar(&term.c, &format!("gamma[{p}].terms[{q}].c"))?;
            val.add_scaled(&c, &SparseVec::unit(t));
        }
        entries.push((u, v, w, val));
    }
    Ok(TripleSystem::from_entries(&spec.name, space, entries)?)
}

/// Parses spec text; a top-level `gamma` field marks a triple system.
pub fn parse_str(text: &str, kind_override: Option<Kind>) -> Result<Object> {
    let v: Value = serde_json::from_str(text).context("malformed spec")?;
    if v.get("gamma").is_some() {
        let spec: TripleSpec = serde_json::from_value(v).context("triple spec")?;
        return Ok(Object::Triple(build_triple(&spec)?));
    }
    let spec: AlgebraSpec = serde_json::from_value(v).context("algebra spec")?;
    Ok(Object::Algebra(build_algebra(&spec, kind_override)?))
}

pub fn parse_spec(path: &Path, kind_override: Option<Kind>) -> Result<Object> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_str(&text, kind_override).with_context(|| format!("in {}", path.display()))
}

/// A built-in name, or else a path to a spec file.
pub fn resolve_base(base: &str, kind_override: Option<Kind>) -> Result<Object> {
    if corpus::BUILTIN_NAMES.contains(&base) {
        let a = corpus::builtin(base)?;
        return Ok(Object::Algebra(match kind_override {
            Some(k) if k != a.kind() => retag(&a, k)?,
            _ => a,
        }));
    }
    let path = Path::new(base);
    if !path.exists() {
        bail!(
            "{base:?} is neither a built-in base ({}) nor an existing file",
            corpus::BUILTIN_NAMES.join(", ")
        );
    }
    parse_spec(path, kind_override)
}

pub fn export_algebra(a: &Algebra) -> TableSpec {
    let products = a
        .table()
        .nonzero()
        .map(|(i, j, v)| Product {
            i,
            j,
            terms: v.iter().map(|(k, c)| Term { k, c: c.to_string() }).collect(),
        })
        .collect();
    TableSpec {
        name: a.name().to_string(),
        kind: a.kind().to_string(),
        basis: a.space().labels().to_vec(),
        unit: a.unit().map(|u| u.to_dense(a.dim()).iter().map(|c| c.to_string()).collect()),
        products,
    }
}

pub fn export_triple(t: &TripleSystem) -> TripleSpec {
    TripleSpec {
        name: t.name().to_string(),
        basis: t.space().labels().to_vec(),
        gamma: t
            .nonzero()
            .map(|(u, v, w, val)| TripleEntry {
                u,
                v,
                w,
                terms: val.iter().map(|(t, c)| TripleTerm { t, c: c.to_string() }).collect(),
            })
            .collect(),
    }
}
