//! The shipped embedding and diagram catalog.
//!
//! The data lives in `data/catalog.toml` (embedded at build time). The CLI
//! can point at another file through [`CATALOG_ENV`].

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Deserialize;

use crate::diagram::{DiagramDocument, GroupDiagram, OrbitBetti, DIAGRAM_SCHEMA};
use crate::error::{Error, Result};
use crate::lie::{Containments, GroupType, NamedEmbedding, RankDeclaration};
use crate::template::{self, Params};

pub const CATALOG_SCHEMA: u32 = 1;
pub const CATALOG_ENV: &str = "COHOM_CATALOG";

const SHIPPED: &str = include_str!("../data/catalog.toml");

/// A catalog record, possibly parameterized.
#[derive(Debug, Clone)]
struct Template {
    id: String,
    params: Vec<String>,
    min: Params,
    samples: Vec<Params>,
    body: toml::Table,
}

/// Public summary of an embedding record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingFamily {
    pub id: String,
    pub params: Vec<String>,
    pub min: Params,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    embeddings: Vec<Template>,
    diagrams: Vec<Template>,
    containments: Containments,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    schema_version: u32,
    #[serde(default)]
    embedding: Vec<toml::Table>,
    #[serde(default)]
    containment: Vec<ContainmentRecord>,
    #[serde(default)]
    diagram: Vec<toml::Table>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ContainmentRecord {
    outer: String,
    inner: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EmbeddingRecord {
    ambient: String,
    subgroup: String,
    #[serde(default)]
    ranks: Option<RanksSpec>,
    #[serde(default)]
    overrides: BTreeMap<String, u32>,
    #[serde(default)]
    tags: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RanksSpec {
    Keyword(String),
    Table(BTreeMap<String, u32>),
}

fn degree_map(table: &BTreeMap<String, u32>, id: &str) -> Result<BTreeMap<u32, u32>> {
    table
        .iter()
        .map(|(k, &v)| {
            k.parse::<u32>()
                .map(|k| (k, v))
                .map_err(|_| Error::Catalog(format!("`{id}`: degree key `{k}` is not an integer")))
        })
        .collect()
}

fn take_string_list(body: &mut toml::Table, key: &str, id: &str) -> Result<Vec<String>> {
    match body.remove(key) {
        None => Ok(Vec::new()),
        Some(v) => v
            .try_into::<Vec<String>>()
            .map_err(|e| Error::Catalog(format!("`{id}`: bad `{key}`: {e}"))),
    }
}

fn take_params(body: &mut toml::Table, key: &str, id: &str) -> Result<Params> {
    match body.remove(key) {
        None => Ok(Params::new()),
        Some(v) => v
            .try_into::<Params>()
            .map_err(|e| Error::Catalog(format!("`{id}`: bad `{key}`: {e}"))),
    }
}

impl Template {
    fn parse(mut body: toml::Table, id_key: &str) -> Result<Template> {
        let id = match body.remove(id_key) {
            Some(toml::Value::String(s)) => s,
            _ => {
                return Err(Error::Catalog(format!(
                    "record without a string `{id_key}`"
                )))
            }
        };
        let params = take_string_list(&mut body, "params", &id)?;
        let min = take_params(&mut body, "min", &id)?;
        let samples = match body.remove("samples") {
            None => Vec::new(),
            Some(v) => v
                .try_into::<Vec<Params>>()
                .map_err(|e| Error::Catalog(format!("`{id}`: bad `samples`: {e}")))?,
        };
        for key in min.keys() {
            if !params.contains(key) {
                return Err(Error::Catalog(format!(
                    "`{id}`: `min` names unknown parameter `{key}`"
                )));
            }
        }
        Ok(Template {
            id,
            params,
            min,
            samples,
            body,
        })
    }

    fn instance_id(&self, params: &Params) -> String {
        template::instance_id(&self.id, &self.params, params)
    }

    fn check_params(&self, params: &Params) -> Result<()> {
        let given: BTreeSet<&String> = params.keys().collect();
        let expected: BTreeSet<&String> = self.params.iter().collect();
        if given != expected {
            return Err(Error::Catalog(format!(
                "`{}` takes parameters [{}]",
                self.id,
                self.params.join(", ")
            )));
        }
        for (k, &lo) in &self.min {
            if params[k] < lo {
                return Err(Error::Catalog(format!(
                    "`{}` needs {k} >= {lo}, got {}",
                    self.id, params[k]
                )));
            }
        }
        Ok(())
    }

    fn instantiate(&self, params: &Params) -> Result<toml::Table> {
        self.check_params(params)?;
        let mut out = toml::Table::new();
        for (k, v) in &self.body {
            out.insert(template::substitute(k, params)?, fill(v, params)?);
        }
        Ok(out)
    }
}

/// Fill `{expr}` holes. A string that is a single hole becomes an integer.
fn fill(v: &toml::Value, params: &Params) -> Result<toml::Value> {
    Ok(match v {
        toml::Value::String(s) => {
            let inner = s.strip_prefix('{').and_then(|r| r.strip_suffix('}'));
            match inner {
                Some(expr) if !expr.contains(['{', '}']) && s != "{e}" => {
                    toml::Value::Integer(template::eval(expr, params)?)
                }
                _ => toml::Value::String(template::substitute(s, params)?),
            }
        }
        toml::Value::Array(items) => toml::Value::Array(
            items
                .iter()
                .map(|i| fill(i, params))
                .collect::<Result<_>>()?,
        ),
        toml::Value::Table(t) => {
            let mut out = toml::Table::new();
            for (k, v) in t {
                out.insert(template::substitute(k, params)?, fill(v, params)?);
            }
            toml::Value::Table(out)
        }
        other => other.clone(),
    })
}

fn find<'a>(list: &'a [Template], family: &str, what: &str) -> Result<&'a Template> {
    list.iter()
        .find(|t| t.id == family)
        .ok_or_else(|| Error::Catalog(format!("unknown {what} `{family}`")))
}

impl Catalog {
    pub fn from_toml_str(src: &str) -> Result<Catalog> {
        let file: CatalogFile =
            toml::from_str(src).map_err(|e| Error::Catalog(format!("parse error: {e}")))?;
        if file.schema_version != CATALOG_SCHEMA {
            return Err(Error::Catalog(format!(
                "schema_version {} is not supported (expected {CATALOG_SCHEMA})",
                file.schema_version
            )));
        }
        let embeddings = file
            .embedding
            .into_iter()
            .map(|b| Template::parse(b, "id"))
            .collect::<Result<Vec<_>>>()?;
        let diagrams = file
            .diagram
            .into_iter()
            .map(|b| Template::parse(b, "name"))
            .collect::<Result<Vec<_>>>()?;
        for list in [&embeddings, &diagrams] {
            let mut seen = BTreeSet::new();
            for t in list.iter() {
                if !seen.insert(&t.id) {
                    return Err(Error::Catalog(format!("duplicate record `{}`", t.id)));
                }
            }
        }
        let mut containments = Containments::new();
        for c in file.containment {
            containments.declare(c.outer, c.inner);
        }
        let catalog = Catalog {
            embeddings,
            diagrams,
            containments,
        };
        catalog.check()?;
        Ok(catalog)
    }

    /// Build every concrete record and every diagram sample once.
    fn check(&self) -> Result<()> {
        for t in self.embeddings.iter().filter(|t| t.params.is_empty()) {
            self.embedding(&t.id)?;
        }
        for (outer, inner) in self.containments.iter() {
            let (o, i) = (self.embedding(outer)?, self.embedding(inner)?);
            if o.ambient != i.ambient || i.subgroup.dimension() > o.subgroup.dimension() {
                return Err(Error::Catalog(format!(
                    "containment `{inner}` in `{outer}` is impossible"
                )));
            }
        }
        for doc in self.diagrams()? {
            self.resolve(&doc)?;
        }
        Ok(())
    }

    /// The catalog compiled into the library.
    pub fn shipped() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| Catalog::from_toml_str(SHIPPED).expect("shipped catalog is valid"))
    }

    /// The file named by [`CATALOG_ENV`] if set, else the shipped catalog.
    pub fn from_env() -> Result<Catalog> {
        match std::env::var_os(CATALOG_ENV) {
            Some(path) => {
                let src = std::fs::read_to_string(&path).map_err(|e| {
                    Error::Catalog(format!("cannot read {}: {e}", path.to_string_lossy()))
                })?;
                Catalog::from_toml_str(&src)
            }
            None => Ok(Catalog::shipped().clone()),
        }
    }

    pub fn embedding_families(&self) -> Vec<EmbeddingFamily> {
        self.embeddings
            .iter()
            .map(|t| EmbeddingFamily {
                id: t.id.clone(),
                params: t.params.clone(),
                min: t.min.clone(),
            })
            .collect()
    }

    /// Resolve an embedding id such as `g2-in-spin7` or `su-block[m=4]`.
    pub fn embedding(&self, id: &str) -> Result<NamedEmbedding> {
        let (family, params) = template::parse_instance_id(id)?;
        let t = find(&self.embeddings, &family, "embedding")?;
        let canonical = t.instance_id(&params);
        let body = t.instantiate(&params)?;
        let rec: EmbeddingRecord = toml::Value::Table(body)
            .try_into()
            .map_err(|e| Error::Catalog(format!("`{canonical}`: {e}")))?;
        let ambient: GroupType = rec.ambient.parse()?;
        let subgroup: GroupType = rec.subgroup.parse()?;
        let mut ranks = match rec.ranks {
            None => RankDeclaration::Undeclared,
            Some(RanksSpec::Keyword(k)) => match k.as_str() {
                "injective" => RankDeclaration::Injective,
                "min" => RankDeclaration::Generic,
                "undeclared" => RankDeclaration::Undeclared,
                other => {
                    return Err(Error::Catalog(format!(
                        "`{canonical}`: unknown ranks `{other}`"
                    )))
                }
            },
            Some(RanksSpec::Table(t)) => RankDeclaration::Explicit(degree_map(&t, &canonical)?),
        };
        if !rec.overrides.is_empty() {
            let base =
                NamedEmbedding::new(&canonical, ambient.clone(), subgroup.clone(), ranks, [])?;
            let mut map = base.homotopy_map_ranks.ok_or_else(|| {
                Error::Catalog(format!("`{canonical}`: overrides need declared ranks"))
            })?;
            map.extend(degree_map(&rec.overrides, &canonical)?);
            ranks = RankDeclaration::Explicit(map);
        }
        let emb = NamedEmbedding::new(canonical, ambient, subgroup, ranks, rec.tags)?;
        if let Some(kernel) = emb.kernel() {
            if emb.ambient.quotient_by(&kernel).is_none()
                || emb.subgroup.quotient_by(&kernel).is_none()
            {
                return Err(Error::embedding(
                    &emb.id,
                    format!("kernel {kernel} is not a factor"),
                ));
            }
        }
        Ok(emb)
    }

    /// Concrete records plus single-parameter families instantiated while
    /// the ambient rank stays at most `max_rank`. Families with several
    /// parameters are skipped.
    pub fn enumerate_embeddings(&self, max_rank: u32) -> Result<Vec<NamedEmbedding>> {
        let mut out = Vec::new();
        for t in &self.embeddings {
            match t.params.as_slice() {
                [] => {
                    let e = self.embedding(&t.id)?;
                    if e.ambient.rank() <= max_rank {
                        out.push(e);
                    }
                }
                [p] => {
                    let start = t.min.get(p).copied().unwrap_or(1);
                    // Families whose rank does not grow with the parameter
                    // stop at the cap.
                    let cap = start + 2 * i64::from(max_rank) + 4;
                    for v in start..=cap {
                        let params: Params = [(p.clone(), v)].into();
                        let e = self.embedding(&t.instance_id(&params))?;
                        if e.ambient.rank() > max_rank {
                            break;
                        }
                        if !out.iter().any(|o: &NamedEmbedding| o.id == e.id) {
                            out.push(e);
                        }
                    }
                }
                _ => {}
            }
        }
        Ok(out)
    }

    /// Every embedding the catalog makes concrete: [`Self::enumerate_embeddings`]
    /// plus everything referenced by a diagram sample.
    pub fn shipped_embeddings(&self, max_rank: u32) -> Result<Vec<NamedEmbedding>> {
        let mut out = self.enumerate_embeddings(max_rank)?;
        let mut seen: BTreeSet<String> = out.iter().map(|e| e.id.clone()).collect();
        for doc in self.diagrams()? {
            for id in [
                &doc.h,
                &doc.k_minus,
                &doc.k_plus,
                &doc.fiber_minus,
                &doc.fiber_plus,
            ] {
                let e = self.embedding(id)?;
                if seen.insert(e.id.clone()) {
                    out.push(e);
                }
            }
        }
        Ok(out)
    }

    pub fn containments(&self) -> &Containments {
        &self.containments
    }

    /// Concrete proper subgroups of `g`, the candidates for a primitivity
    /// witness.
    pub fn lattice_for(&self, g: &GroupType) -> Result<Vec<NamedEmbedding>> {
        let mut out = Vec::new();
        for t in self.embeddings.iter().filter(|t| t.params.is_empty()) {
            let e = self.embedding(&t.id)?;
            if &e.ambient == g && e.subgroup.dimension() < g.dimension() {
                out.push(e);
            }
        }
        Ok(out)
    }

    /// A diagram by name; families take an instance id like `brieskorn[m=5,d=3]`.
    pub fn diagram(&self, name: &str) -> Result<DiagramDocument> {
        let (family, params) = template::parse_instance_id(name)?;
        let t = find(&self.diagrams, &family, "diagram")?;
        self.diagram_instance(t, &params)
    }

    fn diagram_instance(&self, t: &Template, params: &Params) -> Result<DiagramDocument> {
        let name = t.instance_id(params);
        let mut body = t.instantiate(params)?;
        body.insert("name".into(), toml::Value::String(name.clone()));
        toml::Value::Table(body)
            .try_into()
            .map_err(|e| Error::Catalog(format!("diagram `{name}`: {e}")))
    }

    /// Concrete diagrams and all family samples, in file order.
    pub fn diagrams(&self) -> Result<Vec<DiagramDocument>> {
        let mut out = Vec::new();
        for t in &self.diagrams {
            if t.params.is_empty() {
                out.push(self.diagram_instance(t, &Params::new())?);
            } else {
                for s in &t.samples {
                    out.push(self.diagram_instance(t, s)?);
                }
            }
        }
        Ok(out)
    }

    /// Look up the embeddings of a document.
    pub fn resolve(&self, doc: &DiagramDocument) -> Result<GroupDiagram> {
        if doc.schema != DIAGRAM_SCHEMA {
            return Err(Error::Unsupported(format!(
                "diagram schema {} (expected {DIAGRAM_SCHEMA})",
                doc.schema
            )));
        }
        Ok(GroupDiagram {
            name: doc.name.clone(),
            group: doc.group.parse()?,
            h: self.embedding(&doc.h)?,
            k_minus: self.embedding(&doc.k_minus)?,
            k_plus: self.embedding(&doc.k_plus)?,
            fiber_minus: self.embedding(&doc.fiber_minus)?,
            fiber_plus: self.embedding(&doc.fiber_plus)?,
            components: doc.components,
            nonorientable: doc.nonorientable,
            h_projections_proper: doc.h_projections_proper,
            betti: doc.betti.as_ref().map(|b| OrbitBetti {
                h: b.h.polynomial(),
                k_minus: b.k_minus.polynomial(),
                k_plus: b.k_plus.polynomial(),
            }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_catalog_loads() {
        let c = Catalog::shipped();
        let e = c.embedding("su-block[m=4]").unwrap();
        assert_eq!(e.ambient.to_string(), "SU(4)");
        assert_eq!(e.subgroup.to_string(), "SU(3)");
        assert!(c.embedding("su-block[m=1]").is_err());
        assert!(c.embedding("su-block").is_err());
        assert!(c.embedding("nope").is_err());
        let d = c.diagram("brieskorn[m=5,d=3]").unwrap();
        assert_eq!(d.components.h, 2);
        assert!(d.nonorientable.k_plus);
        assert_eq!(d.fiber_plus, "so-block[m=4]");
    }

    #[test]
    fn overrides_replace_generic_ranks() {
        let e = Catalog::shipped().embedding("brieskorn-h[m=4]").unwrap();
        assert_eq!(e.declared_rank(1), Some(0));
    }

    #[test]
    fn schema_and_parameter_errors() {
        assert!(Catalog::from_toml_str("schema_version = 2").is_err());
        let src = r#"
            schema_version = 1
            [[embedding]]
            id = "x"
            params = ["m"]
            min = { n = 1 }
            ambient = "SU({m})"
            subgroup = "{e}"
        "#;
        assert!(Catalog::from_toml_str(src).is_err());
        let src = r#"
            schema_version = 1
            [[embedding]]
            id = "x"
            ambient = "SU(2)"
            subgroup = "SU(3)"
        "#;
        assert!(Catalog::from_toml_str(src).is_err());
    }
}
