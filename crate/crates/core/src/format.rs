//! JSON algebra files.
//!
//! Lines whose first non-blank character is `#` are ignored on load, so
//! emitted files can carry comments.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::HomSuperAlgebra;
use crate::axioms::{check_super_skew, Identity};
use crate::bracket::NaryBracket;
use crate::catalog::{Fixture, NamedCochain, NamedOperator, OperatorKind};
use crate::cochains::SuperCochain;
use crate::error::{Error, Result};
use crate::map::GradedLinearMap;
use crate::report::CheckOptions;
use crate::scalar::Scalar;
use crate::space::{Element, Parity, SuperSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<BasisEntry>,
    pub arity: usize,
    pub twists: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub multiplicative: bool,
    pub bracket: Vec<BracketEntry>,
    pub skew_complete: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cochains: Vec<CochainEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub operators: Vec<OperatorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub label: String,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub args: Vec<String>,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub values: Vec<CochainValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainValue {
    pub args: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    pub parity: u8,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(&strip_comments(text))?)
    }

    /// Canonical text: nested structure indented, flat arrays and objects
    /// kept on one line.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("algebra file serializes");
        let mut out = String::new();
        write_value(&mut out, &v, 0);
        out.push('\n');
        out
    }

    pub fn from_fixture(f: &Fixture) -> Self {
        let mut file = Self::from_algebra(&f.algebra);
        let space = f.algebra.space();
        file.cochains = f
            .cochains
            .iter()
            .map(|c| cochain_entry(space, Some(c.name.clone()), &c.cochain))
            .collect();
        file.operators = f.operators.iter().map(operator_entry).collect();
        file
    }

    /// Canonical form: super-skew brackets are listed by their entries on
    /// nondecreasing tuples with `skew_complete` set.
    pub fn from_algebra(alg: &HomSuperAlgebra) -> Self {
        let space = alg.space();
        let skew = check_super_skew(alg, &CheckOptions::with_cap(1)).passed;
        let bracket = alg
            .bracket()
            .entries()
            .filter(|(t, _)| !skew || t.windows(2).all(|w| w[0] <= w[1]))
            .map(|(t, v)| BracketEntry {
                args: space.labels_of(&t),
                value: element_map(space, v),
            })
            .collect();
        let uniform = alg.multiplicative_flag();
        let twists = if uniform {
            vec![matrix_strings(&alg.twists()[0])]
        } else {
            alg.twists().iter().map(matrix_strings).collect()
        };
        AlgebraFile {
            name: alg.name().to_string(),
            basis: space
                .basis()
                .iter()
                .map(|b| BasisEntry {
                    label: b.label.clone(),
                    parity: b.parity.bit(),
                })
                .collect(),
            arity: alg.arity(),
            twists,
            multiplicative: uniform && alg.arity() > 2,
            bracket,
            skew_complete: skew,
            cochains: Vec::new(),
            operators: Vec::new(),
        }
    }

    pub fn space(&self) -> Result<SuperSpace> {
        let basis = self
            .basis
            .iter()
            .map(|b| {
                Parity::from_bit(b.parity)
                    .map(|p| (b.label.clone(), p))
                    .ok_or_else(|| Error::Parse(format!("parity of {:?} must be 0 or 1", b.label)))
            })
            .collect::<Result<Vec<_>>>()?;
        SuperSpace::new(basis)
    }

    pub fn to_algebra(&self) -> Result<HomSuperAlgebra> {
        let space = self.space()?;
        if self.arity < 2 {
            return Err(Error::Parse(format!("arity must be at least 2, got {}", self.arity)));
        }
        let entries = self
            .bracket
            .iter()
            .map(|e| {
                let t = indices(&space, &e.args)?;
                if t.len() != self.arity {
                    return Err(Error::ArityMismatch {
                        expected: self.arity,
                        found: t.len(),
                    });
                }
                Ok((t, parse_element(&space, &e.value)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let bracket = if self.skew_complete {
            NaryBracket::skew_from_generators(&space, self.arity, entries)?
        } else {
            if let Some(dup) = duplicate_tuple(&entries) {
                return Err(Error::Parse(format!(
                    "bracket entry {:?} listed twice",
                    space.labels_of(dup)
                )));
            }
            NaryBracket::from_entries(&space, self.arity, entries)?
        };
        let maps = self
            .twists
            .iter()
            .map(|m| parse_matrix(&space, Parity::Even, m))
            .collect::<Result<Vec<_>>>()?;
        let twists = match maps.len() {
            1 if self.multiplicative || self.arity == 2 => vec![maps[0].clone(); self.arity - 1],
            n if n == self.arity - 1 => maps,
            n => {
                return Err(Error::Parse(format!(
                    "expected 1 twist with \"multiplicative\": true or {} twists, got {n}",
                    self.arity - 1
                )))
            }
        };
        HomSuperAlgebra::new(self.name.clone(), space, bracket, twists)
    }

    pub fn to_fixture(&self) -> Result<Fixture> {
        let algebra = self.to_algebra()?;
        let space = algebra.space().clone();
        let cochains = self
            .cochains
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let gens = c
                    .values
                    .iter()
                    .map(|v| Ok((indices(&space, &v.args)?, v.value.parse::<Scalar>()?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(NamedCochain {
                    name: c.name.clone().unwrap_or_else(|| default_name("phi", i)),
                    cochain: SuperCochain::from_generators(&space, c.degree, gens)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let operators = self
            .operators
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let parity = Parity::from_bit(o.parity)
                    .ok_or_else(|| Error::Parse(format!("operator parity must be 0 or 1, got {}", o.parity)))?;
                let kind = match o.kind.as_str() {
                    "derivation" => OperatorKind::Derivation {
                        power: o.power.unwrap_or(0),
                    },
                    "rota_baxter" => OperatorKind::RotaBaxter {
                        weight: o.weight.as_deref().unwrap_or("0").parse()?,
                    },
                    "map" => OperatorKind::Map,
                    other => return Err(Error::Parse(format!("unknown operator kind {other:?}"))),
                };
                Ok(NamedOperator {
                    name: o.name.clone().unwrap_or_else(|| default_name("op", i)),
                    kind,
                    map: parse_matrix(&space, parity, &o.matrix)?,
                    target: o.target.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let profile = Identity::applicable(&algebra);
        Ok(Fixture {
            algebra,
            cochains,
            operators,
            profile,
            notes: Vec::new(),
        })
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(o) => o.values().all(|x| !x.is_array() && !x.is_object()),
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    if is_flat(v) {
        out.push_str(&flat(v));
        return;
    }
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(o) => {
            out.push_str("{\n");
            for (i, (k, x)) in o.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(flat).collect::<Vec<_>>().join(", ")),
        Value::Object(o) => {
            let parts: Vec<String> = o
                .iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), flat(x)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn default_name(prefix: &str, i: usize) -> String {
    if i == 0 {
        prefix.to_string()
    } else {
        format!("{prefix}{i}")
    }
}

fn duplicate_tuple(entries: &[(Vec<usize>, Element)]) -> Option<&Vec<usize>> {
    let mut seen = std::collections::BTreeSet::new();
    entries.iter().map(|(t, _)| t).find(|t| !seen.insert(*t))
}

fn indices(space: &SuperSpace, labels: &[String]) -> Result<Vec<usize>> {
    labels.iter().map(|l| space.index_of(l)).collect()
}

fn parse_element(space: &SuperSpace, value: &BTreeMap<String, String>) -> Result<Element> {
    let terms = value
        .iter()
        .map(|(l, c)| Ok((space.index_of(l)?, c.parse::<Scalar>()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Element::from_terms(terms))
}

fn parse_matrix(space: &SuperSpace, parity: Parity, m: &[Vec<String>]) -> Result<GradedLinearMap> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|s| s.parse::<Scalar>()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    GradedLinearMap::from_matrix(space, parity, &rows)
}

fn element_map(space: &SuperSpace, v: &Element) -> BTreeMap<String, String> {
    v.terms()
        .map(|(i, c)| (space.label(i).to_string(), c.to_string()))
        .collect()
}

fn matrix_strings(m: &GradedLinearMap) -> Vec<Vec<String>> {
    m.matrix()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn cochain_entry(space: &SuperSpace, name: Option<String>, c: &SuperCochain) -> CochainEntry {
    CochainEntry {
        name,
        degree: c.degree(),
        values: c
            .generators()
            .into_iter()
            .map(|(t, v)| CochainValue {
                args: space.labels_of(&t),
                value: v.to_string(),
            })
            .collect(),
    }
}

fn operator_entry(o: &NamedOperator) -> OperatorEntry {
    let (kind, power, weight) = match &o.kind {
        OperatorKind::Derivation { power } => ("derivation", Some(*power), None),
        OperatorKind::RotaBaxter { weight } => ("rota_baxter", None, Some(weight.to_string())),
        OperatorKind::Map => ("map", None, None),
    };
    OperatorEntry {
        name: Some(o.name.clone()),
        kind: kind.to_string(),
        power,
        weight,
        parity: o.map.parity().bit(),
        matrix: matrix_strings(&o.map),
        target: o.target.clone(),
    }
}

pub fn parse_algebra(text: &str) -> Result<HomSuperAlgebra> {
    AlgebraFile::parse(text)?.to_algebra()
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    AlgebraFile::parse(text)?.to_fixture()
}

pub fn emit_algebra(alg: &HomSuperAlgebra) -> String {
    AlgebraFile::from_algebra(alg).to_json()
}

pub fn emit_fixture(f: &Fixture) -> String {
    AlgebraFile::from_fixture(f).to_json()
}
