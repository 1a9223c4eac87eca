//! DOT and JSON emission for quivers, plus covering-report formatting.
//!
//! Output is a pure function of the quiver and the options: vertices in
//! vertex order, arrows sorted by `(from, to)`, no floats, UTF-8 labels
//! written as-is.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covering::CoveringReport;
use crate::diagrams::{apply_labels, DiagramError, LabelScheme};
use crate::mckay::{Ambient, Quiver, QuiverMeta, Vertex, VertexPayload};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum EmitError {
    #[error(transparent)]
    Labels(#[from] DiagramError),
    #[error("quiver json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("quiver json: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Labels {
    /// Whatever the quiver already carries.
    #[default]
    Auto,
    Exponents,
    Scheme(LabelScheme),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MultiplicityStyle {
    #[default]
    ParallelEdges,
    EdgeLabel,
}

#[derive(Debug, Clone, Default)]
pub struct EmitOptions {
    pub format: Format,
    pub labels: Labels,
    pub multiplicity_style: MultiplicityStyle,
}

fn labeled(q: &Quiver, labels: Labels) -> Result<Vec<String>, EmitError> {
    let scheme = match labels {
        Labels::Auto => return Ok(q.vertices().iter().map(|v| v.label.clone()).collect()),
        Labels::Exponents => {
            if q.meta().group_orders.is_none() {
                return Ok(q.vertices().iter().map(|v| v.payload.to_string()).collect());
            }
            LabelScheme::Exponents
        }
        Labels::Scheme(s) => s,
    };
    let mut copy = q.clone();
    apply_labels(&mut copy, scheme)?;
    Ok(copy.vertices().iter().map(|v| v.label.clone()).collect())
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn emit(q: &Quiver, opts: &EmitOptions) -> Result<String, EmitError> {
    match opts.format {
        Format::Dot => emit_dot(q, opts),
        Format::Json => emit_json(q, opts),
    }
}

pub fn emit_dot(q: &Quiver, opts: &EmitOptions) -> Result<String, EmitError> {
    let labels = labeled(q, opts.labels)?;
    let meta = q.meta();
    let mut out = String::new();
    out.push_str("digraph mckay {\n");
    let _ = writeln!(out, "  // format_version: {FORMAT_VERSION}");
    let _ = writeln!(
        out,
        "  // group: {}; rep: {}; ambient: {}; construction: {}",
        meta.group, meta.rep, meta.ambient, meta.construction
    );
    for (v, label) in q.vertices().iter().zip(&labels) {
        let _ = writeln!(out, "  v{} [label=\"{}\"];", v.id, dot_escape(label));
    }
    for (i, j, m) in q.arrows() {
        match opts.multiplicity_style {
            MultiplicityStyle::ParallelEdges => {
                for _ in 0..m {
                    let _ = writeln!(out, "  v{i} -> v{j};");
                }
            }
            MultiplicityStyle::EdgeLabel => {
                let _ = writeln!(out, "  v{i} -> v{j} [label=\"{m}\"];");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonMeta {
    group: String,
    rep: String,
    ambient: Ambient,
    construction: String,
    rep_dim: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group_orders: Option<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonVertex {
    id: String,
    label: String,
    #[serde(flatten)]
    payload: VertexPayload,
    dim: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonArrow {
    from: usize,
    to: usize,
    mult: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonQuiver {
    format_version: u32,
    meta: JsonMeta,
    vertices: Vec<JsonVertex>,
    arrows: Vec<JsonArrow>,
}

/// JSON document with `meta`, `vertices` and `arrows`. Multiplicities are
/// folded into one record per `(from, to)` pair regardless of style.
pub fn emit_json(q: &Quiver, opts: &EmitOptions) -> Result<String, EmitError> {
    let labels = labeled(q, opts.labels)?;
    let meta = q.meta();
    let doc = JsonQuiver {
        format_version: FORMAT_VERSION,
        meta: JsonMeta {
            group: meta.group.clone(),
            rep: meta.rep.clone(),
            ambient: meta.ambient,
            construction: meta.construction.clone(),
            rep_dim: meta.rep_dim,
            group_orders: meta.group_orders.clone(),
        },
        vertices: q
            .vertices()
            .iter()
            .zip(labels)
            .map(|(v, label)| JsonVertex { id: format!("v{}", v.id), label, payload: v.payload.clone(), dim: v.dim })
            .collect(),
        arrows: q.arrows().into_iter().map(|(from, to, mult)| JsonArrow { from, to, mult }).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

/// Parses a document written by [`emit_json`] back into a quiver.
pub fn parse_json(text: &str) -> Result<Quiver, EmitError> {
    let doc: JsonQuiver = serde_json::from_str(text)?;
    if doc.format_version != FORMAT_VERSION {
        return Err(EmitError::Malformed(format!("unsupported format_version {}", doc.format_version)));
    }
    let n = doc.vertices.len();
    let vertices = doc
        .vertices
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let id = v.id.strip_prefix('v').and_then(|s| s.parse::<usize>().ok());
            match id {
                Some(id) if id == k => Ok(Vertex { id, label: v.label, payload: v.payload, dim: v.dim }),
                _ => Err(EmitError::Malformed(format!("vertex {k} has id '{}'", v.id))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut mult = vec![vec![0u64; n]; n];
    for a in doc.arrows {
        if a.from >= n || a.to >= n {
            return Err(EmitError::Malformed(format!("arrow {} -> {} out of range", a.from, a.to)));
        }
        mult[a.from][a.to] += a.mult;
    }
    let meta = QuiverMeta {
        group: doc.meta.group,
        rep: doc.meta.rep,
        ambient: doc.meta.ambient,
        construction: doc.meta.construction,
        rep_dim: doc.meta.rep_dim,
        group_orders: doc.meta.group_orders,
    };
    Quiver::new(vertices, mult, meta).map_err(|e| EmitError::Malformed(e.to_string()))
}

pub fn report_text(r: &CoveringReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "covering report (format_version {FORMAT_VERSION})");
    let _ = writeln!(out, "group: {}", r.group);
    let _ = writeln!(out, "rep: {}", r.rep);
    let _ = writeln!(out, "subgroup order |N|: {}", r.subgroup_order);
    let _ = writeln!(out, "deck group order |G/N|: {}", r.deck_order);
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{status}] {}: {}", c.name, c.detail);
    }
    for a in &r.assumptions {
        let _ = writeln!(out, "assumption: {a}");
    }
    let _ = writeln!(out, "result: {}", if r.passed { "regular covering" } else { "NOT a regular covering" });
    out
}

pub fn report_json(r: &CoveringReport) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        format_version: u32,
        #[serde(flatten)]
        report: &'a CoveringReport,
    }
    let mut s = serde_json::to_string_pretty(&Doc { format_version: FORMAT_VERSION, report: r })
        .expect("report serializes");
    s.push('\n');
    s
}
