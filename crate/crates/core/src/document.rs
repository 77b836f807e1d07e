//! JSON documents for data, cones and spherical systems.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "kind": "datum",
//!   "root_system": { "components": ["A3", "C2"], "torus_rank": 1 },
//!   "m_basis": [ { "fw": [1, 0, 0, 1, 0], "torus": [1] } ],
//!   "sigma": [ { "coeffs": [1, 0, 0, 0, 0], "m": [1, -1, 0, -1, 1, 0] } ],
//!   "s_p": [],
//!   "d_a": [ { "label": "D1", "rho": [1, 0, 0, 0, 0, 0] } ],
//!   "colored_cone": { "valuation_generators": [[0, 0, 0, 0, 0, 1]], "f": ["D1"] }
//! }
//! ```
//!
//! Simple roots are written `"component.position"`, both 1-based. Lattice
//! coordinates are JSON integers, or decimal strings when they do not fit
//! in 64 bits. A `"system"` document has `sigma` entries without `m` and
//! colors with `pairings` against `sigma` instead of `rho`.

use std::collections::BTreeSet;

use num::{BigInt, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::datum::{ColorA, ColoredCone, HomogeneousSphericalDatum, SigmaRoot, SphericalSystem};
use crate::error::Error;
use crate::lattice::IntVector;
use crate::roots::{normalize_components, Component, RootCoeffVector, RootSystem, SimpleRootId, Weight};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Datum { datum: HomogeneousSphericalDatum, cone: Option<ColoredCone> },
    System { system: SphericalSystem, marked: Option<BTreeSet<usize>>, entry: Option<EntryRef> },
}

/// Catalog provenance of a system document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRef {
    pub id: usize,
    pub params: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Small(i64),
    Big(String),
}

impl Coord {
    fn from_int(x: &BigInt) -> Coord {
        match x.to_i64() {
            Some(v) => Coord::Small(v),
            None => Coord::Big(x.to_string()),
        }
    }

    fn to_int(&self) -> Result<BigInt, Error> {
        match self {
            Coord::Small(v) => Ok(BigInt::from(*v)),
            Coord::Big(s) => s.parse().map_err(|_| Error::Document(format!("bad integer {s:?}"))),
        }
    }
}

fn vec_out(v: &IntVector) -> Vec<Coord> {
    v.0.iter().map(Coord::from_int).collect()
}

fn vec_in(v: &[Coord]) -> Result<IntVector, Error> {
    Ok(IntVector(v.iter().map(Coord::to_int).collect::<Result<_, _>>()?))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootSystemDoc {
    components: Vec<String>,
    #[serde(default)]
    torus_rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaDoc {
    coeffs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<Vec<Coord>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColorDoc {
    label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rho: Option<Vec<Coord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairings: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeDoc {
    #[serde(default)]
    valuation_generators: Vec<Vec<Coord>>,
    #[serde(default)]
    f: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Datum,
    System,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    schema: u32,
    kind: Kind,
    root_system: RootSystemDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    levi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m_basis: Option<Vec<Weight>>,
    sigma: Vec<SigmaDoc>,
    #[serde(default)]
    s_p: Vec<String>,
    #[serde(default)]
    d_a: Vec<ColorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colored_cone: Option<ConeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    marked: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    entry: Option<EntryRef>,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn root_system_in(r: &RootSystemDoc) -> Result<RootSystem, Error> {
    let raw = r.components.iter().map(|c| c.parse()).collect::<Result<Vec<Component>, _>>()?;
    let (norm, _) = normalize_components(&raw)?;
    if norm != raw {
        let names: Vec<String> = norm.iter().map(|c| c.to_string()).collect();
        return Err(doc_err(format!(
            "components {:?} are not in normal form; write them as {:?}",
            r.components, names
        )));
    }
    Ok(RootSystem { components: norm, torus_rank: r.torus_rank })
}

fn ids_in(rs: &RootSystem, v: &[String]) -> Result<BTreeSet<SimpleRootId>, Error> {
    v.iter()
        .map(|s| {
            let id: SimpleRootId = s.parse()?;
            rs.index(id)?;
            Ok(id)
        })
        .collect()
}

fn ids_out(v: &BTreeSet<SimpleRootId>) -> Vec<String> {
    v.iter().map(|id| id.to_string()).collect()
}

fn coeffs_in(rs: &RootSystem, c: &[i64]) -> Result<RootCoeffVector, Error> {
    if c.len() != rs.rank() {
        return Err(doc_err(format!("root coefficients {c:?} have length {}, expected {}", c.len(), rs.rank())));
    }
    Ok(RootCoeffVector(c.to_vec()))
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, Error> {
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| doc_err(format!("line {} column {}: {e}", e.line(), e.column())))?;
        if raw.schema != SCHEMA_VERSION {
            return Err(doc_err(format!("unsupported schema version {}", raw.schema)));
        }
        let rs = root_system_in(&raw.root_system)?;
        let s_p = ids_in(&rs, &raw.s_p)?;
        match raw.kind {
            Kind::Datum => {
                let m_basis = raw.m_basis.ok_or_else(|| doc_err("a datum needs m_basis"))?;
                for (i, w) in m_basis.iter().enumerate() {
                    if w.fw.len() != rs.rank() || w.torus.len() != rs.torus_rank {
                        return Err(doc_err(format!("m_basis[{i}] has the wrong length")));
                    }
                }
                let sigma = raw
                    .sigma
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        let m = g.m.as_ref().ok_or_else(|| doc_err(format!("sigma[{i}] needs m")))?;
                        Ok(SigmaRoot { coeffs: coeffs_in(&rs, &g.coeffs)?, m_coords: vec_in(m)? })
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                let d_a = raw
                    .d_a
                    .iter()
                    .map(|d| {
                        let rho = d.rho.as_ref().ok_or_else(|| doc_err(format!("color {} needs rho", d.label)))?;
                        Ok(ColorA { label: d.label.clone(), rho: vec_in(rho)? })
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                let levi = raw.levi.as_ref().map(|l| ids_in(&rs, l)).transpose()?;
                let cone = raw
                    .colored_cone
                    .map(|c| {
                        Ok::<_, Error>(ColoredCone {
                            valuation_generators: c
                                .valuation_generators
                                .iter()
                                .map(|v| vec_in(v))
                                .collect::<Result<_, _>>()?,
                            f_labels: c.f,
                        })
                    })
                    .transpose()?;
                let datum = HomogeneousSphericalDatum { root_system: rs, levi, m_basis, sigma, s_p, d_a };
                Ok(Document::Datum { datum, cone })
            }
            Kind::System => {
                if raw.m_basis.is_some() || raw.levi.is_some() || raw.colored_cone.is_some() {
                    return Err(doc_err("a system document has no m_basis, levi or colored_cone"));
                }
                let sigma = raw.sigma.iter().map(|g| coeffs_in(&rs, &g.coeffs)).collect::<Result<Vec<_>, _>>()?;
                let d_a = raw
                    .d_a
                    .iter()
                    .map(|d| {
                        let p =
                            d.pairings.clone().ok_or_else(|| doc_err(format!("color {} needs pairings", d.label)))?;
                        if p.len() != sigma.len() {
                            return Err(doc_err(format!(
                                "color {} has {} pairings for {} roots",
                                d.label,
                                p.len(),
                                sigma.len()
                            )));
                        }
                        Ok((d.label.clone(), p))
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                let marked = raw.marked.map(|m| m.into_iter().collect::<BTreeSet<usize>>());
                if let Some(m) = &marked {
                    if m.iter().any(|&i| i >= sigma.len()) {
                        return Err(doc_err("marked index out of range"));
                    }
                }
                Ok(Document::System {
                    system: SphericalSystem { root_system: rs, sigma, s_p, d_a },
                    marked,
                    entry: raw.entry,
                })
            }
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            Document::Datum { datum, cone } => Raw {
                schema: SCHEMA_VERSION,
                kind: Kind::Datum,
                root_system: rs_out(&datum.root_system),
                levi: datum.levi.as_ref().map(ids_out),
                m_basis: Some(datum.m_basis.clone()),
                sigma: datum
                    .sigma
                    .iter()
                    .map(|g| SigmaDoc { coeffs: g.coeffs.0.clone(), m: Some(vec_out(&g.m_coords)) })
                    .collect(),
                s_p: ids_out(&datum.s_p),
                d_a: datum
                    .d_a
                    .iter()
                    .map(|d| ColorDoc { label: d.label.clone(), rho: Some(vec_out(&d.rho)), pairings: None })
                    .collect(),
                colored_cone: cone.as_ref().map(|c| ConeDoc {
                    valuation_generators: c.valuation_generators.iter().map(vec_out).collect(),
                    f: c.f_labels.clone(),
                }),
                marked: None,
                entry: None,
            },
            Document::System { system, marked, entry } => Raw {
                schema: SCHEMA_VERSION,
                kind: Kind::System,
                root_system: rs_out(&system.root_system),
                levi: None,
                m_basis: None,
                sigma: system.sigma.iter().map(|g| SigmaDoc { coeffs: g.0.clone(), m: None }).collect(),
                s_p: ids_out(&system.s_p),
                d_a: system
                    .d_a
                    .iter()
                    .map(|(l, p)| ColorDoc { label: l.clone(), rho: None, pairings: Some(p.clone()) })
                    .collect(),
                colored_cone: None,
                marked: marked.as_ref().map(|m| m.iter().copied().collect()),
                entry: entry.clone(),
            },
        };
        let value = serde_json::to_value(&raw).expect("documents serialize");
        let mut s = String::new();
        write_value(&mut s, &value, 0);
        s.push('\n');
        s
    }

    /// The datum of either kind of document (a system is read with `M = span Sigma`).
    pub fn datum(&self) -> HomogeneousSphericalDatum {
        match self {
            Document::Datum { datum, .. } => datum.clone(),
            Document::System { system, .. } => system.to_datum(),
        }
    }

    pub fn cone(&self) -> Option<&ColoredCone> {
        match self {
            Document::Datum { cone, .. } => cone.as_ref(),
            Document::System { .. } => None,
        }
    }
}

fn rs_out(rs: &RootSystem) -> RootSystemDoc {
    RootSystemDoc { components: rs.components.iter().map(|c| c.to_string()).collect(), torus_rank: rs.torus_rank }
}

/// Pretty JSON with arrays of scalars kept on one line.
fn write_value(out: &mut String, v: &serde_json::Value, indent: usize) {
    use serde_json::Value;
    let pad = |out: &mut String, k: usize| out.push_str(&"  ".repeat(k));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        x => out.push_str(&x.to_string()),
    }
}
