//! Reducible configurations: detection, deletion, extension and the
//! recursive colorer built on top of them.
//!
//! A configuration names a small vertex set `S` (or a single edge) whose
//! deletion leaves a graph with a valid `(L, 1)*`-coloring that can always
//! be extended back. [`find_all`] lists every instance, [`reduce`] deletes
//! it, and [`extend`] carries the coloring back, recoloring only `S` and the
//! configuration's scratch vertices.

mod detect;
mod extend;
pub mod oracle;
mod templates;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coloring::{self, Color, ListAssignment};
use crate::plane_graph::{PlaneGraph, Vertex};
use crate::structure;

pub use detect::build as build_configuration;
pub use templates::{templates_for, Template};

/// Configuration kinds in detection priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// A vertex of degree at most 2.
    A1,
    /// Two adjacent 3-vertices.
    A2,
    /// A `(3,4,4)`-face.
    A3,
    /// A 5-vertex with four satellites and an S-vertex pivot on a 3-face.
    Q,
    /// A 4-vertex with three 3-neighbors.
    B1,
    /// A `(4-,4-,4-)`-face.
    B2,
    /// A `(5+,4,4)`-face whose 4-vertices are both light.
    B3,
    /// A 5-vertex on a `(5,*,4)`-face with two 3-neighbors off the face.
    B4,
    /// A 6-vertex with two `(6,4-,4-)`-faces and one `(6,*,4)`-face.
    B5,
    /// A `(3,4,3,4)`-face.
    F1,
    /// A `(3,4,4,4)`-face whose vertex opposite the 3-vertex is soft.
    F2,
    /// Two adjacent soft 4-vertices sharing their 4-face.
    Soft,
    /// A 5-vertex with two `(5,4-,4-)`-faces and a 3-vertex between them.
    C1,
    /// A 5-vertex with a `(5,*,4)`-face, a `(5,*,4+)`-face and a 3-neighbor.
    C2,
    /// A 5-vertex with two `(5,*,4)`-faces.
    C3,
    /// A 3-face incident with two bad 5-vertices.
    Key,
}

impl Kind {
    pub const ALL: [Kind; 16] = [
        Kind::A1,
        Kind::A2,
        Kind::A3,
        Kind::Q,
        Kind::B1,
        Kind::B2,
        Kind::B3,
        Kind::B4,
        Kind::B5,
        Kind::F1,
        Kind::F2,
        Kind::Soft,
        Kind::C1,
        Kind::C2,
        Kind::C3,
        Kind::Key,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::A1 => "A1",
            Kind::A2 => "A2",
            Kind::A3 => "A3",
            Kind::Q => "Q",
            Kind::B1 => "B1",
            Kind::B2 => "B2",
            Kind::B3 => "B3",
            Kind::B4 => "B4",
            Kind::B5 => "B5",
            Kind::F1 => "F1",
            Kind::F2 => "F2",
            Kind::Soft => "SOFT",
            Kind::C1 => "C1",
            Kind::C2 => "C2",
            Kind::C3 => "C3",
            Kind::Key => "KEY",
        }
    }

    /// Role names, in the order of [`Configuration::roles`].
    pub fn role_names(self) -> &'static [&'static str] {
        match self {
            Kind::A1 => &["v"],
            Kind::A2 => &["u", "v"],
            Kind::A3 => &["a", "b", "c"],
            Kind::Q => &["v", "p", "q", "s3", "s4", "o"],
            Kind::B1 => &["v", "v1", "v2", "v3"],
            Kind::B2 => &["v1", "v2", "v3"],
            Kind::B3 => &["v1", "v2", "v3", "x2", "y2", "x3", "y3"],
            Kind::B4 | Kind::C2 | Kind::C3 => &["v", "v1", "v2", "v3", "v4", "v5"],
            Kind::B5 => &["v", "v1", "v2", "v3", "v4", "v5", "v6"],
            Kind::F1 => &["u", "v", "x", "y"],
            Kind::F2 => &["u", "v", "x", "y", "x1", "x2"],
            Kind::Soft => &["u", "v", "x", "y", "u1", "u2", "v1", "v2"],
            Kind::C1 => &["v", "v1", "v2", "v3", "v4", "v5"],
            Kind::Key => &["u", "v", "w", "v1", "v2", "v3", "w1", "w2", "w3"],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown configuration kind '{s}'"))
    }
}

/// What a configuration deletes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Target {
    Vertices(Vec<Vertex>),
    Edge(Vertex, Vertex),
}

/// One detected configuration instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Configuration {
    pub kind: Kind,
    /// Witness vertices in the order of [`Kind::role_names`].
    pub roles: Vec<Vertex>,
    pub target: Target,
    /// Vertices outside the target that the extension may recolor.
    pub scratch: Vec<Vertex>,
}

impl Configuration {
    /// Vertices whose colors the extension may set or change.
    pub fn recolorable(&self, g: &PlaneGraph) -> Vec<bool> {
        let mut out = vec![false; g.vertex_count()];
        match &self.target {
            Target::Vertices(s) => s.iter().for_each(|&v| out[v] = true),
            Target::Edge(a, b) => {
                out[*a] = true;
                out[*b] = true;
                // B2 may also recolor the third vertex of its face.
                if self.kind == Kind::B2 {
                    out[self.roles[2]] = true;
                }
            }
        }
        self.scratch.iter().for_each(|&v| out[v] = true);
        out
    }

    pub fn deleted_vertices(&self) -> &[Vertex] {
        match &self.target {
            Target::Vertices(s) => s,
            Target::Edge(..) => &[],
        }
    }

    pub fn render(&self, g: &PlaneGraph) -> String {
        let roles: Vec<String> = self
            .kind
            .role_names()
            .iter()
            .zip(&self.roles)
            .map(|(name, &v)| format!("{name}={}", g.label(v)))
            .collect();
        let target = match &self.target {
            Target::Vertices(s) => {
                let l: Vec<String> = s.iter().map(|&v| g.label(v).to_string()).collect();
                format!("delete {{{}}}", l.join(","))
            }
            Target::Edge(a, b) => format!("delete edge {}-{}", g.label(*a), g.label(*b)),
        };
        let mut line = format!("{} [{}] {}", self.kind, roles.join(" "), target);
        if !self.scratch.is_empty() {
            let l: Vec<String> = self
                .scratch
                .iter()
                .map(|&v| g.label(v).to_string())
                .collect();
            line.push_str(&format!(" scratch {{{}}}", l.join(",")));
        }
        line
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReducibilityError {
    #[error("witness for {0} no longer verifies")]
    WitnessStale(Kind),
    #[error("{kind}: extension precondition violated: {detail}")]
    PreconditionViolation { kind: Kind, detail: String },
    #[error("{kind}: extension failed: {detail}")]
    ExtensionFailed { kind: Kind, detail: String },
    #[error("graph is not in the class: {0} adjacent cycle pairs")]
    NotInClass(usize),
    #[error("list of vertex {vertex} has {size} colors, need at least 3")]
    ListTooSmall { vertex: Vertex, size: usize },
    #[error("no (L,1)*-coloring found for a class member on {0} vertices")]
    Infeasible(usize),
}

/// Every configuration instance, ordered by kind priority then witness.
pub fn find_all(g: &PlaneGraph) -> Vec<Configuration> {
    Kind::ALL.iter().flat_map(|&k| find_kind(g, k)).collect()
}

/// Instances of one kind, sorted by witness.
pub fn find_kind(g: &PlaneGraph, kind: Kind) -> Vec<Configuration> {
    let found: BTreeSet<Configuration> = detect::candidates(g, kind)
        .into_iter()
        .filter_map(|roles| detect::build(g, kind, &roles))
        .collect();
    found.into_iter().collect()
}

/// The first instance in priority order.
pub fn find_first(g: &PlaneGraph) -> Option<Configuration> {
    Kind::ALL
        .iter()
        .find_map(|&k| find_kind(g, k).into_iter().next())
}

/// Re-checks the hypothesis of `cfg` against `g`.
pub fn verify_witness(g: &PlaneGraph, cfg: &Configuration) -> bool {
    cfg.roles.iter().all(|&v| v < g.vertex_count())
        && detect::build(g, cfg.kind, &cfg.roles).as_ref() == Some(cfg)
}

/// Deletes the configuration. Each component of what remains comes back
/// with its map into `g`; the result is empty when nothing remains.
pub fn reduce(
    g: &PlaneGraph,
    cfg: &Configuration,
) -> Result<Vec<(PlaneGraph, Vec<Vertex>)>, ReducibilityError> {
    if !verify_witness(g, cfg) {
        return Err(ReducibilityError::WitnessStale(cfg.kind));
    }
    let mut removed = vec![false; g.vertex_count()];
    cfg.deleted_vertices()
        .iter()
        .for_each(|&v| removed[v] = true);
    let edge = match cfg.target {
        Target::Edge(a, b) => Some((a, b)),
        Target::Vertices(_) => None,
    };
    if removed.iter().all(|&r| r) {
        return Ok(Vec::new());
    }
    Ok(g.subgraph_components(&removed, edge))
}

/// Whether `colors` is a valid `(L, 1)*`-coloring of the reduced graph.
/// Deleted vertices must be uncolored; every other vertex colored.
pub fn reduced_coloring_valid(
    g: &PlaneGraph,
    cfg: &Configuration,
    colors: &[Option<Color>],
    lists: &ListAssignment,
) -> bool {
    let deleted = cfg.deleted_vertices();
    let skip = match cfg.target {
        Target::Edge(a, b) => Some((a, b)),
        Target::Vertices(_) => None,
    };
    g.vertices().all(|v| {
        if deleted.contains(&v) {
            return colors[v].is_none();
        }
        let Some(c) = colors[v] else { return false };
        if !lists.contains(v, c) {
            return false;
        }
        let same = g
            .rotation(v)
            .iter()
            .filter(|&&u| colors[u] == Some(c))
            .filter(|&&u| skip != Some((v, u)) && skip != Some((u, v)))
            .count();
        same <= 1
    })
}

/// Extends a coloring of the reduced graph to `g`.
///
/// `reduced` is indexed by vertices of `g`; deleted vertices are ignored.
/// Only the deleted vertices, the endpoints' face for an edge target and
/// the scratch vertices may change. The result is checked before it is
/// returned.
pub fn extend(
    g: &PlaneGraph,
    cfg: &Configuration,
    reduced: &[Option<Color>],
    lists: &ListAssignment,
) -> Result<Vec<Color>, ReducibilityError> {
    if !verify_witness(g, cfg) {
        return Err(ReducibilityError::WitnessStale(cfg.kind));
    }
    let mut colors = reduced.to_vec();
    cfg.deleted_vertices()
        .iter()
        .for_each(|&v| colors[v] = None);
    if !reduced_coloring_valid(g, cfg, &colors, lists) {
        return Err(ReducibilityError::PreconditionViolation {
            kind: cfg.kind,
            detail: "coloring of the reduced graph is not a valid (L,1)*-coloring".into(),
        });
    }
    let before = colors.clone();
    extend::run(g, cfg, &mut colors, lists).map_err(|e| e.into_error(cfg.kind))?;
    let fail = |detail: String| ReducibilityError::ExtensionFailed {
        kind: cfg.kind,
        detail,
    };
    let recolorable = cfg.recolorable(g);
    if let Some(v) = g
        .vertices()
        .find(|&v| !recolorable[v] && colors[v] != before[v])
    {
        return Err(fail(format!(
            "vertex {} outside the recolor set changed",
            g.label(v)
        )));
    }
    let report = coloring::check(g, Some(lists), &colors, 1)
        .map_err(|e| fail(format!("incomplete coloring: {e}")))?;
    if !report.is_valid() {
        return Err(fail(format!("invalid result: {:?}", report.violations)));
    }
    Ok(colors
        .into_iter()
        .map(|c| c.expect("checked total"))
        .collect())
}

/// Graphs at or below this size are colored by exhaustive search.
pub const BASE_THRESHOLD: usize = 6;

/// Something the recursive colorer could not justify by a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anomaly {
    /// Always `PROOF_GAP`: a class member without any configuration.
    pub tag: &'static str,
    pub vertices: usize,
    /// The offending graph in rotation format.
    pub graph: String,
}

#[derive(Debug, Clone)]
pub struct RecursiveColoring {
    pub coloring: Vec<Color>,
    pub anomalies: Vec<Anomaly>,
    /// Configurations applied, in order.
    pub steps: Vec<Kind>,
}

/// Colors a class member by peeling configurations until the base case.
///
/// Lists are cut to their three smallest colors first. Each reduced graph
/// is checked to remain in the class.
pub fn recursive_color(
    g: &PlaneGraph,
    lists: &ListAssignment,
) -> Result<RecursiveColoring, ReducibilityError> {
    let report = structure::in_class(g);
    if !report.in_class {
        return Err(ReducibilityError::NotInClass(report.violations.len()));
    }
    if let Some(v) = g.vertices().find(|&v| lists.get(v).len() < 3) {
        return Err(ReducibilityError::ListTooSmall {
            vertex: v,
            size: lists.get(v).len(),
        });
    }
    let lists = lists.truncated(3);
    let mut out = RecursiveColoring {
        coloring: Vec::new(),
        anomalies: Vec::new(),
        steps: Vec::new(),
    };
    out.coloring = color_rec(g, &lists, &mut out)?;
    Ok(out)
}

fn color_rec(
    g: &PlaneGraph,
    lists: &ListAssignment,
    out: &mut RecursiveColoring,
) -> Result<Vec<Color>, ReducibilityError> {
    let n = g.vertex_count();
    if n <= BASE_THRESHOLD {
        return coloring::solve(g, lists, 1).ok_or(ReducibilityError::Infeasible(n));
    }
    let Some(cfg) = find_first(g) else {
        log::warn!("PROOF_GAP: class member on {n} vertices has no configuration");
        out.anomalies.push(Anomaly {
            tag: "PROOF_GAP",
            vertices: n,
            graph: g.to_string(),
        });
        return coloring::solve(g, lists, 1).ok_or(ReducibilityError::Infeasible(n));
    };
    out.steps.push(cfg.kind);
    let mut reduced: Vec<Option<Color>> = vec![None; n];
    for (h, map) in reduce(g, &cfg)? {
        assert!(
            structure::is_in_class(&h),
            "reduction by {} left the class",
            cfg.kind
        );
        let sub = color_rec(&h, &lists.restrict(&map), out)?;
        for (i, &v) in map.iter().enumerate() {
            reduced[v] = Some(sub[i]);
        }
    }
    extend(g, &cfg, &reduced, lists)
}

#[cfg(test)]
mod tests;
