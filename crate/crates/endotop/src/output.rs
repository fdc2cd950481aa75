//! Document builders and renderers for the CLI: basis grade tables,
//! property/map/equality reports and sweep reports, each emitted as JSON
//! or as flattened TSV with identical numeric content (grades stay exact
//! rational strings in both).

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::instance::InstanceFile;
use crate::maps::map_report;
use crate::properties::{property_report, topologies_equal};
use crate::spaces::{tau3_basis, ChainFamily, Space};
use crate::sweep::{sweep, SweepParams, SweepReport};

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// Which space a subcommand addresses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceChoice {
    Tau1,
    Tau1Complement,
    Tau2,
    Tau3,
}

impl SpaceChoice {
    pub fn name(self) -> &'static str {
        match self {
            SpaceChoice::Tau1 => "tau1",
            SpaceChoice::Tau1Complement => "tau1c",
            SpaceChoice::Tau2 => "tau2",
            SpaceChoice::Tau3 => "tau3",
        }
    }
}

/// Builds the space named by `choice` from a validated instance file.
///
/// `tau1c` goes through the periodic-point check and therefore fails on
/// every finite instance; the error text explains the hypothesis.
pub fn build_space(file: &InstanceFile, choice: SpaceChoice, window: Option<u32>) -> Result<Space> {
    let f = file.endofunction()?;
    let w = match window {
        Some(0) => return Err(Error::ZeroWindow),
        Some(w) => w,
        None => file.effective_window()?,
    };
    match choice {
        SpaceChoice::Tau1 => Ok(Space::tau1(&f, w)),
        SpaceChoice::Tau2 => Ok(Space::tau2(&f, w)),
        SpaceChoice::Tau1Complement => {
            let family = ChainFamily::tau1_complement(&f)?;
            Ok(Space::Chain { family, window: w })
        }
        SpaceChoice::Tau3 => {
            let params = file.tau3.ok_or_else(|| {
                Error::InstanceFile(
                    "the orbit space needs a \"tau3\": {\"x0\": ..., \"k\": ...} section"
                        .to_string(),
                )
            })?;
            Space::tau3(&f, params.x0, params.k)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisRow {
    pub name: String,
    pub grades: Vec<Grade>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisDocument {
    pub space: String,
    pub carrier: Vec<String>,
    pub rows: Vec<BasisRow>,
}

/// The basis grade table: one row per basis set.
pub fn basis_document(
    file: &InstanceFile,
    choice: SpaceChoice,
    window: Option<u32>,
) -> Result<BasisDocument> {
    let f = file.endofunction()?;
    let carrier_labels: Vec<String> = f.carrier().elements().map(|x| f.carrier().label(x)).collect();
    let w = match window {
        Some(0) => return Err(Error::ZeroWindow),
        Some(w) => w,
        None => file.effective_window()?,
    };
    let rows = match choice {
        SpaceChoice::Tau1 | SpaceChoice::Tau2 | SpaceChoice::Tau1Complement => {
            let family = match choice {
                SpaceChoice::Tau1 => ChainFamily::tau1(&f),
                SpaceChoice::Tau2 => ChainFamily::tau2(&f),
                SpaceChoice::Tau1Complement => ChainFamily::tau1_complement(&f)?,
                SpaceChoice::Tau3 => unreachable!(),
            };
            (1..=w)
                .map(|n| BasisRow {
                    name: family.member_name(n),
                    grades: family.member(n).grades().to_vec(),
                })
                .collect()
        }
        SpaceChoice::Tau3 => {
            let params = file.tau3.ok_or_else(|| {
                Error::InstanceFile(
                    "the orbit space needs a \"tau3\": {\"x0\": ..., \"k\": ...} section"
                        .to_string(),
                )
            })?;
            let orbit = f.orbit(params.x0, params.k)?;
            let basis = tau3_basis(&orbit);
            let mut rows = vec![BasisRow {
                name: "C".to_string(),
                grades: basis.off_orbit.grades().to_vec(),
            }];
            for (n, cn) in basis.around.iter().enumerate() {
                rows.push(BasisRow {
                    name: format!("C{n}"),
                    grades: cn.grades().to_vec(),
                });
            }
            rows
        }
    };
    Ok(BasisDocument {
        space: choice.name().to_string(),
        carrier: carrier_labels,
        rows,
    })
}

/// PropertyReport for the chosen space, as a JSON value.
pub fn check_document(
    file: &InstanceFile,
    choice: SpaceChoice,
    window: Option<u32>,
) -> Result<Value> {
    let space = build_space(file, choice, window)?;
    let report = property_report(&space)?;
    let mut value = serde_json::to_value(&report)?;
    if let Value::Object(map) = &mut value {
        map.insert("space".to_string(), Value::String(choice.name().to_string()));
    }
    Ok(value)
}

/// MapReport for the chosen space, as a JSON value.
pub fn map_document(
    file: &InstanceFile,
    choice: SpaceChoice,
    window: Option<u32>,
) -> Result<Value> {
    let f = file.endofunction()?;
    let space = build_space(file, choice, window)?;
    let report = map_report(&f, &space)?;
    let mut value = serde_json::to_value(&report)?;
    if let Value::Object(map) = &mut value {
        map.insert("space".to_string(), Value::String(choice.name().to_string()));
    }
    Ok(value)
}

/// Equality verdict between two spaces, as a JSON value.
pub fn equal_document(
    file: &InstanceFile,
    left: SpaceChoice,
    right: SpaceChoice,
    window: Option<u32>,
) -> Result<Value> {
    let a = build_space(file, left, window)?;
    let b = build_space(file, right, window)?;
    let verdict = topologies_equal(&a, &b)?;
    let mut value = serde_json::to_value(&verdict)?;
    if let Value::Object(map) = &mut value {
        map.insert("left".to_string(), Value::String(left.name().to_string()));
        map.insert("right".to_string(), Value::String(right.name().to_string()));
    }
    Ok(value)
}

/// Runs the sweep with the given parameters.
pub fn verify_document(max_size: usize, k_values: Vec<u32>, window: Option<u32>) -> Result<SweepReport> {
    let window = window.unwrap_or(max_size as u32 + 2);
    let params = SweepParams::new(max_size, k_values, window);
    sweep(&params)
}

/// Flattens a JSON value into `path<TAB>value` lines. Exact rational
/// strings pass through unchanged, so TSV and JSON carry identical
/// numeric content.
pub fn json_to_tsv(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (key, inner) in map {
                    let path = if prefix.is_empty() {
                        key.clone()
                    } else {
                        format!("{prefix}.{key}")
                    };
                    walk(&path, inner, out);
                }
            }
            Value::Array(items) => {
                for (i, inner) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), inner, out);
                }
            }
            Value::String(s) => {
                out.push_str(prefix);
                out.push('\t');
                out.push_str(s);
                out.push('\n');
            }
            other => {
                out.push_str(prefix);
                out.push('\t');
                out.push_str(&other.to_string());
                out.push('\n');
            }
        }
    }
    let mut out = String::new();
    walk("", value, &mut out);
    out
}

/// Renders the basis table: JSON verbatim, or a TSV table with one row
/// per basis set.
pub fn render_basis(doc: &BasisDocument, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(doc)?)),
        Format::Tsv => {
            let mut out = String::from("name");
            for label in &doc.carrier {
                out.push('\t');
                out.push_str(label);
            }
            out.push('\n');
            for row in &doc.rows {
                out.push_str(&row.name);
                for g in &row.grades {
                    out.push('\t');
                    out.push_str(&g.to_string());
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Renders any JSON document in the requested format.
pub fn render_value(value: &Value, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(value)?)),
        Format::Tsv => Ok(json_to_tsv(value)),
    }
}
