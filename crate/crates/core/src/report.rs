//! Report assembly and emission: orbit tables as JSON, enhanced Hasse
//! diagrams as DOT or ASCII, and mixed Hodge diagram grids.

use crate::cyclo::Cyclo8;
use crate::error::Result;
use crate::hodge::{cuspidality, polarizability, witness_root_support, Polarizability};
use crate::orbits::{EdgeKind, OrbitSet, Session};
use crate::realform::RootClass;
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone)]
pub struct CartanInfo {
    pub index: usize,
    pub real_rank: usize,
    pub cayley_path: Vec<String>,
    pub n_real: usize,
    pub n_compact: usize,
    pub n_noncompact: usize,
    pub n_complex: usize,
}

#[derive(Serialize, Clone)]
pub struct RealWeylInfo {
    pub frame: usize,
    pub order: usize,
    pub complete: bool,
    pub generators: Vec<String>,
}

#[derive(Serialize, Clone)]
pub struct ClassificationInfo {
    pub polarizable: Option<bool>,
    pub polarizability_via: Option<String>,
    pub witness: Option<Vec<String>>,
    pub witness_root_support: Option<Vec<String>>,
    pub cuspidal: bool,
}

#[derive(Serialize, Clone)]
pub struct OrbitInfo {
    pub label: String,
    pub frame: usize,
    pub coset_rep_word: String,
    pub codim: usize,
    pub dim_real: usize,
    pub open: bool,
    pub closed: bool,
    pub hodge_tate: bool,
    pub boundary_stratum: bool,
    pub hpq: Vec<(i64, i64, usize)>,
    pub merged_classes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationInfo>,
}

#[derive(Serialize, Clone)]
pub struct EdgeInfo {
    pub src: String,
    pub dst: String,
    pub kind: EdgeKind,
}

#[derive(Serialize, Clone)]
pub struct Report {
    pub schema_version: u32,
    pub group_type: String,
    pub grading: Vec<u8>,
    pub dim_compact_dual: usize,
    pub complete_flag: bool,
    pub cartans: Vec<CartanInfo>,
    pub cartan_edges: Vec<(usize, usize, String)>,
    pub real_weyl: Vec<RealWeylInfo>,
    pub orbits: Vec<OrbitInfo>,
    pub edges: Vec<EdgeInfo>,
}

fn root_label(session: &Session, a: usize) -> String {
    let coords: Vec<String> =
        session.la.rs.roots[a].iter().map(|c| c.to_string()).collect();
    format!("[{}]", coords.join(","))
}

pub fn build_report(
    session: &Session,
    set: &OrbitSet,
    classify: bool,
    search_height: i64,
) -> Result<Report> {
    let mut cartans = Vec::new();
    for f in &session.graph.frames {
        let mut counts = [0usize; 4];
        for c in &f.class {
            match c {
                RootClass::Real => counts[0] += 1,
                RootClass::CompactImaginary => counts[1] += 1,
                RootClass::NoncompactImaginary => counts[2] += 1,
                RootClass::Complex(_) => counts[3] += 1,
            }
        }
        cartans.push(CartanInfo {
            index: f.id,
            real_rank: f.real_rank,
            cayley_path: f.path.iter().map(|&a| root_label(session, a)).collect(),
            n_real: counts[0],
            n_compact: counts[1],
            n_noncompact: counts[2],
            n_complex: counts[3],
        });
    }
    let cartan_edges = session
        .graph
        .edges
        .iter()
        .map(|&(s, d, a)| (s, d, root_label(session, a)))
        .collect();
    let real_weyl = session
        .real_weyl
        .iter()
        .map(|rw| RealWeylInfo {
            frame: rw.frame,
            order: rw.elements.len(),
            complete: rw.complete,
            generators: rw.generators.iter().map(|&g| session.weyl.word_label(g)).collect(),
        })
        .collect();

    let d = session.dim_compact_dual();
    let mut orbits = Vec::new();
    for (ri, rec) in set.records.iter().enumerate() {
        let classification = if classify {
            let pol = if rec.flags.boundary_stratum || rec.flags.closed {
                polarizability(session, set, ri, search_height)?
            } else if ri == set.base {
                Polarizability::Polarizable { witness: None, via: "the domain itself".into() }
            } else {
                // Orbits outside the closure of the domain are not
                // boundary strata; the question does not arise.
                Polarizability::NotPolarizable { reason: "not a boundary stratum".into() }
            };
            let cusp = cuspidality(session, set, ri)?;
            let (witness, via, support) = match &pol {
                Polarizability::Polarizable { witness, via } => {
                    let w_str = witness
                        .as_ref()
                        .map(|w| w.iter().map(|x| format!("{x}")).collect::<Vec<_>>());
                    let supp = witness.as_ref().map(|w| {
                        witness_root_support(session, rec.frame, w)
                            .into_iter()
                            .map(|a| root_label(session, a))
                            .collect::<Vec<_>>()
                    });
                    (w_str, Some(via.clone()), supp)
                }
                Polarizability::NotPolarizable { reason } => (None, Some(reason.clone()), None),
                Polarizability::Undetermined => (None, Some("undetermined".into()), None),
            };
            Some(ClassificationInfo {
                polarizable: pol.is_polarizable(),
                polarizability_via: via,
                witness,
                witness_root_support: support,
                cuspidal: cusp,
            })
        } else {
            None
        };
        orbits.push(OrbitInfo {
            label: rec.label.clone(),
            frame: rec.frame,
            coset_rep_word: session.weyl.word_label(rec.rep_w),
            codim: rec.codim,
            dim_real: 2 * d - rec.codim,
            open: rec.flags.open,
            closed: rec.flags.closed,
            hodge_tate: rec.flags.hodge_tate,
            boundary_stratum: rec.flags.boundary_stratum,
            hpq: rec.hpq_list(),
            merged_classes: rec
                .merged_classes
                .iter()
                .map(|&(f, w)| format!("({f},{})", session.weyl.word_label(w)))
                .collect(),
            classification,
        });
    }
    let edges = set
        .edges
        .iter()
        .map(|e| EdgeInfo {
            src: set.records[e.src].label.clone(),
            dst: set.records[e.dst].label.clone(),
            kind: e.kind,
        })
        .collect();
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        group_type: session.la.rs.name.clone(),
        grading: session.grading.values.clone(),
        dim_compact_dual: d,
        complete_flag: session.grading.is_complete_flag(),
        cartans,
        cartan_edges,
        real_weyl,
        orbits,
        edges,
    })
}

/// Vertex style in the enhanced Hasse diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexStyle {
    /// In the nilpotent closure: the domain itself or a polarizable
    /// boundary stratum.
    Solid,
    /// In the closure but not the nilpotent closure.
    Crossed,
    /// Not in the closure of the domain.
    Open,
    /// Boundary stratum with undetermined polarizability.
    Unknown,
}

pub fn vertex_style(o: &OrbitInfo, is_base: bool) -> VertexStyle {
    if is_base {
        return VertexStyle::Solid;
    }
    if !o.boundary_stratum {
        return VertexStyle::Open;
    }
    match o.classification.as_ref().and_then(|c| c.polarizable) {
        Some(true) => VertexStyle::Solid,
        Some(false) => VertexStyle::Crossed,
        None => VertexStyle::Unknown,
    }
}

/// DOT rendering of the enhanced Hasse diagram. Dotted edges from the
/// configuration are rendered as annotations.
pub fn emit_dot(report: &Report, dotted: &[(String, String)]) -> String {
    let base_label = report
        .orbits
        .iter()
        .find(|o| o.frame == 0 && o.coset_rep_word == "e")
        .map(|o| o.label.clone())
        .unwrap_or_default();
    let mut out = String::new();
    out.push_str("digraph enhanced_hasse {\n");
    out.push_str("  rankdir=TB;\n  node [fontname=\"monospace\"];\n");
    // Rank layers by codimension.
    let mut layers: BTreeMap<usize, Vec<&OrbitInfo>> = BTreeMap::new();
    for o in &report.orbits {
        layers.entry(o.codim).or_default().push(o);
    }
    for (codim, members) in &layers {
        out.push_str(&format!("  {{ rank=same; /* codim {codim} */"));
        for o in members {
            out.push_str(&format!(" \"{}\";", o.label));
        }
        out.push_str(" }\n");
    }
    for o in &report.orbits {
        let style = vertex_style(o, o.label == base_label);
        let attrs = match style {
            VertexStyle::Solid => "shape=circle, style=filled, fillcolor=black, fontcolor=white",
            VertexStyle::Crossed => "shape=circle, label=\"x\", xlabel=\"\"",
            VertexStyle::Open => "shape=circle, style=solid",
            VertexStyle::Unknown => "shape=circle, label=\"?\", xlabel=\"\"",
        };
        let extra = match style {
            VertexStyle::Crossed | VertexStyle::Unknown => {
                format!(", xlabel=\"{} (codim {})\"", o.label, o.codim)
            }
            _ => format!(", xlabel=\"codim {}\"", o.codim),
        };
        out.push_str(&format!("  \"{}\" [{}{}];\n", o.label, attrs, extra));
    }
    for e in &report.edges {
        let attrs = match e.kind {
            EdgeKind::Cayley => "style=solid",
            EdgeKind::Cross => "style=solid, dir=none",
            EdgeKind::WolfClosed => "style=solid, color=gray, dir=none, constraint=false",
        };
        out.push_str(&format!("  \"{}\" -> \"{}\" [{}];\n", e.src, e.dst, attrs));
    }
    for (a, b) in dotted {
        out.push_str(&format!("  \"{a}\" -> \"{b}\" [style=dotted, dir=none];\n"));
    }
    out.push_str("}\n");
    out
}

/// Plain-text rendering: one layer per codimension plus an edge listing.
pub fn emit_ascii(report: &Report, dotted: &[(String, String)]) -> String {
    let base_label = report
        .orbits
        .iter()
        .find(|o| o.frame == 0 && o.coset_rep_word == "e")
        .map(|o| o.label.clone())
        .unwrap_or_default();
    let mut out = String::new();
    out.push_str(&format!(
        "enhanced Hasse diagram: {} grading {:?}\n",
        report.group_type, report.grading
    ));
    out.push_str("legend: @ = in ncl(D), x = cl(D) \\ ncl(D), o = outside cl(D), ? = undetermined\n");
    let mut layers: BTreeMap<usize, Vec<&OrbitInfo>> = BTreeMap::new();
    for o in &report.orbits {
        layers.entry(o.codim).or_default().push(o);
    }
    for (codim, members) in &layers {
        out.push_str(&format!("codim {codim}: "));
        let cells: Vec<String> = members
            .iter()
            .map(|o| {
                let glyph = match vertex_style(o, o.label == base_label) {
                    VertexStyle::Solid => '@',
                    VertexStyle::Crossed => 'x',
                    VertexStyle::Open => 'o',
                    VertexStyle::Unknown => '?',
                };
                format!("{glyph} {}", o.label)
            })
            .collect();
        out.push_str(&cells.join("   "));
        out.push('\n');
    }
    out.push_str("edges:\n");
    for e in &report.edges {
        let arrow = match e.kind {
            EdgeKind::Cayley => "->",
            EdgeKind::Cross => "--",
            EdgeKind::WolfClosed => "~~",
        };
        out.push_str(&format!("  {} {} {} [{:?}]\n", e.src, arrow, e.dst, e.kind));
    }
    for (a, b) in dotted {
        out.push_str(&format!("  {a} .. {b} [Dotted annotation]\n"));
    }
    out
}

/// ASCII grid of h^{p,q} at integer lattice positions, origin marked.
pub fn emit_mhd(label: &str, hpq: &[(i64, i64, usize)]) -> String {
    let mut out = String::new();
    out.push_str(&format!("mixed Hodge diagram for {label}\n"));
    if hpq.is_empty() {
        return out;
    }
    let pmin = hpq.iter().map(|&(p, _, _)| p).min().unwrap();
    let pmax = hpq.iter().map(|&(p, _, _)| p).max().unwrap();
    let qmin = hpq.iter().map(|&(_, q, _)| q).min().unwrap();
    let qmax = hpq.iter().map(|&(_, q, _)| q).max().unwrap();
    let table: BTreeMap<(i64, i64), usize> =
        hpq.iter().map(|&(p, q, d)| ((p, q), d)).collect();
    out.push_str("  q\\p ");
    for p in pmin..=pmax {
        out.push_str(&format!("{p:>4}"));
    }
    out.push('\n');
    for q in (qmin..=qmax).rev() {
        out.push_str(&format!("{q:>5} "));
        for p in pmin..=pmax {
            let cell = match table.get(&(p, q)) {
                Some(&d) if (p, q) == (0, 0) => format!("({d})"),
                Some(&d) => format!("{d}"),
                None if (p, q) == (0, 0) => "(.)".to_string(),
                None => ".".to_string(),
            };
            out.push_str(&format!("{cell:>4}"));
        }
        out.push('\n');
    }
    out
}

/// Count vertices and edges in a DOT emission (used by round-trip tests).
pub fn parse_dot_counts(dot: &str) -> (usize, usize) {
    let mut vertices = 0;
    let mut edges = 0;
    for line in dot.lines() {
        let t = line.trim();
        if t.starts_with('"') && t.contains('[') && !t.contains("->") {
            vertices += 1;
        }
        if t.contains("->") && !t.contains("dotted") {
            edges += 1;
        }
    }
    (vertices, edges)
}

/// Textual rendering of an element for debug output.
pub fn render_element(v: &[Cyclo8]) -> String {
    let coords: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", coords.join(", "))
}
