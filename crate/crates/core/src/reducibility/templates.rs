//! Minimal local instances of every configuration.
//!
//! A template is a concrete plane graph: the configuration itself, the
//! outside neighbors of its vertices as pendant stubs, and explicit
//! 3-vertices wherever the extension recolors outside vertices. What varies
//! from case to case is captured by slots: induced lists of deleted
//! vertices, full lists where the extension reads them, colors of outside
//! vertices the extension compares against, and the state of each
//! recolorable outside vertex.
//!
//! Every stub that is not otherwise constrained gets a twin leaf of its own
//! color, so that a stub already has one same-colored neighbor and any
//! extension that hands its color to a neighbor is caught by the checker.

use crate::plane_graph::{PlaneGraph, Vertex};

use super::{build_configuration, Configuration, Kind};

/// How a core vertex takes part in a case.
#[derive(Debug, Clone)]
pub(crate) enum Info {
    /// Deleted vertex with an induced list of at least `min` colors; its
    /// `fillers` generated stubs get degree `filler_degree`.
    Induced {
        min: usize,
        fillers: usize,
        filler_degree: usize,
    },
    /// Deleted vertex whose full 3-list is a slot.
    Full,
    /// Kept vertex of an edge-deletion face: full list and own color.
    Colored,
    /// Outside vertex whose color is a slot drawn from the lists of
    /// `within` (or an unrelated color); padded to `degree`.
    Explicit { within: Vec<usize>, degree: usize },
    /// Outside vertex with an unrelated color.
    Filler { degree: usize },
    /// Recolorable outside 3-vertex hanging off `anchor`; its new color is
    /// drawn from the lists of `relevant`.
    Scratch { anchor: usize, relevant: Vec<usize> },
}

pub(crate) struct Spec {
    pub name: String,
    pub kind: Kind,
    pub core: Vec<((f64, f64), Info)>,
    pub edges: Vec<(usize, usize)>,
    pub roles: Vec<usize>,
}

/// Per-vertex realization role in the built graph.
#[derive(Debug, Clone)]
pub(crate) enum Node {
    Induced,
    Full,
    Colored,
    Explicit,
    Filler,
    Scratch { stubs: [Vertex; 2] },
    Twin { of: Vertex },
    Leaf,
}

#[derive(Debug, Clone)]
pub(crate) enum Dom {
    /// Colors of the lists of these vertices, or an unrelated color.
    Within(Vec<Vertex>),
    /// A color of this vertex's own list.
    Own(Vertex),
}

#[derive(Debug, Clone)]
pub(crate) enum Slot {
    /// Induced list of exactly `size` colors (`size` is the minimum).
    Induced {
        v: Vertex,
        size: usize,
    },
    /// Full list of 3 colors.
    Full {
        v: Vertex,
    },
    Color {
        v: Vertex,
        dom: Dom,
    },
    Scratch {
        x: Vertex,
        anchor: Vertex,
        relevant: Vec<Vertex>,
    },
}

impl Slot {
    pub(crate) fn is_list(&self) -> bool {
        matches!(self, Slot::Induced { .. } | Slot::Full { .. })
    }
}

/// A built template.
pub struct Template {
    pub name: String,
    pub kind: Kind,
    pub graph: PlaneGraph,
    pub config: Configuration,
    pub(crate) nodes: Vec<Node>,
    pub(crate) slots: Vec<Slot>,
    /// Lets deleted vertices keep lists shorter than 3.
    pub(crate) short_lists: bool,
}

impl Spec {
    pub(crate) fn build(self) -> Template {
        let mut pos: Vec<(f64, f64)> = self.core.iter().map(|(p, _)| *p).collect();
        let mut nodes: Vec<Node> = Vec::new();
        let mut edges = self.edges.clone();
        let k = self.core.len();
        let centroid = (
            pos.iter().map(|p| p.0).sum::<f64>() / k as f64,
            pos.iter().map(|p| p.1).sum::<f64>() / k as f64,
        );
        // (vertex, children to add, child node kind, child degree)
        let mut pending: Vec<(usize, usize, Node, usize)> = Vec::new();
        let mut slots = Vec::new();
        let mut color_slots = Vec::new();
        let mut scratch_slots = Vec::new();
        for (i, (_, info)) in self.core.iter().enumerate() {
            let node = match info {
                Info::Induced {
                    min,
                    fillers,
                    filler_degree,
                } => {
                    slots.push(Slot::Induced { v: i, size: *min });
                    pending.push((i, *fillers, Node::Filler, *filler_degree));
                    Node::Induced
                }
                Info::Full => {
                    slots.push(Slot::Full { v: i });
                    Node::Full
                }
                Info::Colored => {
                    slots.push(Slot::Full { v: i });
                    color_slots.push(Slot::Color {
                        v: i,
                        dom: Dom::Own(i),
                    });
                    Node::Colored
                }
                Info::Explicit { within, degree } => {
                    color_slots.push(Slot::Color {
                        v: i,
                        dom: Dom::Within(within.clone()),
                    });
                    pending.push((i, 1, Node::Twin { of: i }, 1));
                    let core_deg = self
                        .edges
                        .iter()
                        .filter(|&&(a, b)| a == i || b == i)
                        .count();
                    pending.push((i, degree.saturating_sub(core_deg + 1), Node::Leaf, 1));
                    Node::Explicit
                }
                Info::Filler { degree } => {
                    pending.push((i, 1, Node::Twin { of: i }, 1));
                    let core_deg = self
                        .edges
                        .iter()
                        .filter(|&&(a, b)| a == i || b == i)
                        .count();
                    pending.push((i, degree.saturating_sub(core_deg + 1), Node::Leaf, 1));
                    Node::Filler
                }
                Info::Scratch { anchor, relevant } => {
                    scratch_slots.push(Slot::Scratch {
                        x: i,
                        anchor: *anchor,
                        relevant: relevant.clone(),
                    });
                    pending.push((i, 2, Node::Filler, 2));
                    Node::Scratch { stubs: [0, 0] }
                }
            };
            nodes.push(node);
        }
        // Generated pendants, breadth first, placed away from their parent.
        let mut parent_of: Vec<Option<usize>> = vec![None; k];
        let mut head = 0;
        while head < pending.len() {
            let (p, count, kind, degree) = pending[head].clone();
            head += 1;
            let from = parent_of[p].map(|q| pos[q]).unwrap_or(centroid);
            let mut dir = (pos[p].0 - from.0, pos[p].1 - from.1);
            let len = (dir.0 * dir.0 + dir.1 * dir.1).sqrt();
            dir = if len < 1e-9 {
                (1.0, 0.0)
            } else {
                (dir.0 / len, dir.1 / len)
            };
            let depth = {
                let mut d = 0;
                let mut q = p;
                while let Some(r) = parent_of[q] {
                    d += 1;
                    q = r;
                }
                d
            };
            let reach = 0.3 / (3f64).powi(depth);
            let existing = edges
                .iter()
                .filter(|&&(a, b)| (a == p || b == p) && (a >= k || b >= k))
                .count();
            for j in 0..count {
                let slot = (existing + j) as f64;
                let angle = (slot - 1.0) * 0.45;
                let (s, c) = angle.sin_cos();
                let d = (dir.0 * c - dir.1 * s, dir.0 * s + dir.1 * c);
                let id = pos.len();
                pos.push((pos[p].0 + reach * d.0, pos[p].1 + reach * d.1));
                parent_of.push(Some(p));
                edges.push((p, id));
                nodes.push(kind.clone());
                if let Node::Scratch { stubs } = &mut nodes[p] {
                    stubs[j] = id;
                }
                if matches!(kind, Node::Filler) {
                    pending.push((id, 1, Node::Twin { of: id }, 1));
                    pending.push((id, degree.saturating_sub(2), Node::Leaf, 1));
                }
            }
        }
        let n = pos.len();
        let mut rotation: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            rotation[a].push(b);
            rotation[b].push(a);
        }
        for (v, row) in rotation.iter_mut().enumerate() {
            let angle = |u: &Vertex| (pos[*u].1 - pos[v].1).atan2(pos[*u].0 - pos[v].0);
            // Clockwise: decreasing angle.
            row.sort_by(|a, b| angle(b).partial_cmp(&angle(a)).expect("finite"));
        }
        let labels = (1..=n as u32).collect();
        let graph = PlaneGraph::from_parts(labels, rotation)
            .unwrap_or_else(|e| panic!("template {}: {e}", self.name));
        let config = build_configuration(&graph, self.kind, &self.roles)
            .unwrap_or_else(|| panic!("template {} does not satisfy its hypothesis", self.name));
        slots.extend(color_slots);
        slots.extend(scratch_slots);
        Template {
            name: self.name,
            kind: self.kind,
            graph,
            config,
            nodes,
            slots,
            short_lists: false,
        }
    }
}

fn ind(min: usize, fillers: usize) -> Info {
    Info::Induced {
        min,
        fillers,
        filler_degree: 2,
    }
}

fn on_circle(k: usize, of: usize, radius: f64, center: (f64, f64), start_deg: f64) -> (f64, f64) {
    // Clockwise from `start_deg`.
    let a = (start_deg - 360.0 * k as f64 / of as f64).to_radians();
    (center.0 + radius * a.cos(), center.1 + radius * a.sin())
}

fn out_from(p: (f64, f64), from: (f64, f64), reach: f64, turn_deg: f64) -> (f64, f64) {
    let d = (p.0 - from.0, p.1 - from.1);
    let len = (d.0 * d.0 + d.1 * d.1).sqrt();
    let (s, c) = turn_deg.to_radians().sin_cos();
    let u = (d.0 / len, d.1 / len);
    let r = (u.0 * c - u.1 * s, u.0 * s + u.1 * c);
    (p.0 + reach * r.0, p.1 + reach * r.1)
}

/// How a pivot of a 3-face is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PivotShape {
    Three,
    Light,
}

impl PivotShape {
    fn tag(self) -> &'static str {
        match self {
            PivotShape::Three => "3",
            PivotShape::Light => "light",
        }
    }
}

/// Adds a pivot at core index `p` hanging off `center` with partner `q`.
/// For a light pivot its two outside 3-neighbors are appended to `core`.
fn add_pivot(
    core: &mut Vec<((f64, f64), Info)>,
    edges: &mut Vec<(usize, usize)>,
    p: usize,
    q: usize,
    center_pos: (f64, f64),
    shape: PivotShape,
) {
    match shape {
        PivotShape::Three => core[p].1 = ind(2, 1),
        PivotShape::Light => {
            core[p].1 = Info::Full;
            let pp = core[p].0;
            for turn in [35.0, -35.0] {
                let id = core.len();
                core.push((
                    out_from(pp, center_pos, 0.6, turn),
                    Info::Scratch {
                        anchor: p,
                        relevant: vec![p, q],
                    },
                ));
                edges.push((p, id));
            }
        }
    }
}

/// Q, B4 and C3: center `0`, neighbors `1..=5` clockwise as `p q s3 s4 o`.
fn star5(kind: Kind, shape: PivotShape, s3s4: bool, s3_light: bool) -> Spec {
    let c = (0.0, 0.0);
    let mut core: Vec<((f64, f64), Info)> = vec![(c, ind(2, 0))];
    for k in 0..5 {
        core.push((on_circle(k, 5, 1.0, c, 90.0), ind(1, 2)));
    }
    core[5].1 = Info::Filler { degree: 2 };
    let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
    edges.push((1, 2));
    if s3s4 {
        edges.push((3, 4));
    }
    match kind {
        Kind::B4 if s3s4 => {
            core[3].1 = ind(2, 1);
            core[4].1 = ind(2, 1);
        }
        Kind::B4 => {
            core[3].1 = ind(1, 2);
            core[4].1 = ind(1, 2);
        }
        Kind::C3 if !s3_light => core[3].1 = ind(2, 1),
        Kind::C3 => {
            core[3].1 = Info::Induced {
                min: 1,
                fillers: 2,
                filler_degree: 3,
            }
        }
        _ => {}
    }
    add_pivot(&mut core, &mut edges, 1, 2, c, shape);
    let mut name = format!("{}-pivot{}", kind.name(), shape.tag());
    if kind == Kind::C3 {
        name.push_str(if s3_light { "-s3light" } else { "-s33" });
    } else if s3s4 {
        name.push_str("-s3s4");
    }
    Spec {
        name,
        kind,
        core,
        edges,
        roles: vec![0, 1, 2, 3, 4, 5],
    }
}

fn b1(edge: bool) -> Spec {
    let c = (0.0, 0.0);
    let mut core: Vec<((f64, f64), Info)> = vec![(c, ind(2, 0))];
    for k in 0..4 {
        core.push((on_circle(k, 4, 1.0, c, 90.0), ind(1, 2)));
    }
    core[4].1 = Info::Filler { degree: 2 };
    let mut edges: Vec<(usize, usize)> = (1..=4).map(|i| (0, i)).collect();
    if edge {
        edges.push((1, 2));
        core[1].1 = ind(2, 1);
        core[2].1 = ind(2, 1);
    }
    Spec {
        name: format!("B1{}", if edge { "-v1v2" } else { "" }),
        kind: Kind::B1,
        core,
        edges,
        roles: vec![0, 1, 2, 3],
    }
}

fn b2() -> Spec {
    let tri = [(0.0, 1.0), (0.87, -0.5), (-0.87, -0.5)];
    let mut core: Vec<((f64, f64), Info)> = tri.iter().map(|&p| (p, Info::Colored)).collect();
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for i in 0..3 {
        for turn in [30.0, -30.0] {
            let id = core.len();
            core.push((
                out_from(tri[i], (0.0, 0.0), 0.6, turn),
                Info::Explicit {
                    within: vec![i],
                    degree: 2,
                },
            ));
            edges.push((i, id));
        }
    }
    Spec {
        name: "B2".into(),
        kind: Kind::B2,
        core,
        edges,
        roles: vec![0, 1, 2],
    }
}

fn b3() -> Spec {
    let tri = [(0.0, 1.0), (0.87, -0.5), (-0.87, -0.5)];
    let mut core: Vec<((f64, f64), Info)> = vec![
        (
            tri[0],
            Info::Explicit {
                within: vec![1, 2],
                degree: 5,
            },
        ),
        (tri[1], Info::Colored),
        (tri[2], Info::Colored),
    ];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for i in 1..3 {
        for turn in [30.0, -30.0] {
            let id = core.len();
            core.push((
                out_from(tri[i], (0.0, 0.0), 0.6, turn),
                Info::Scratch {
                    anchor: i,
                    relevant: vec![i],
                },
            ));
            edges.push((i, id));
        }
    }
    Spec {
        name: "B3".into(),
        kind: Kind::B3,
        core,
        edges,
        roles: vec![0, 1, 2, 3, 4, 5, 6],
    }
}

fn b5(shape: PivotShape) -> Spec {
    let c = (0.0, 0.0);
    let mut core: Vec<((f64, f64), Info)> = vec![(c, ind(3, 0))];
    for k in 0..6 {
        core.push((on_circle(k, 6, 1.0, c, 90.0), ind(1, 2)));
    }
    let mut edges: Vec<(usize, usize)> = (1..=6).map(|i| (0, i)).collect();
    edges.extend([(1, 2), (3, 4), (5, 6)]);
    add_pivot(&mut core, &mut edges, 5, 6, c, shape);
    Spec {
        name: format!("B5-pivot{}", shape.tag()),
        kind: Kind::B5,
        core,
        edges,
        roles: (0..7).collect(),
    }
}

fn c1() -> Spec {
    let c = (0.0, 0.0);
    let mut core: Vec<((f64, f64), Info)> = vec![(c, ind(3, 0))];
    for k in 0..5 {
        core.push((on_circle(k, 5, 1.0, c, 90.0), ind(1, 2)));
    }
    let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
    edges.extend([(1, 2), (3, 4)]);
    Spec {
        name: "C1".into(),
        kind: Kind::C1,
        core,
        edges,
        roles: (0..6).collect(),
    }
}

fn c2(p1: PivotShape, v3: PivotShape) -> Spec {
    let c = (0.0, 0.0);
    let mut core: Vec<((f64, f64), Info)> = vec![(c, ind(2, 0))];
    for k in 0..5 {
        core.push((on_circle(k, 5, 1.0, c, 90.0), ind(1, 2)));
    }
    let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
    edges.extend([(1, 2), (3, 4)]);
    match v3 {
        PivotShape::Three => {
            core[3].1 = ind(1, 1);
            core[4].1 = Info::Filler { degree: 4 };
        }
        PivotShape::Light => {
            core[3].1 = Info::Full;
            core[4].1 = Info::Explicit {
                within: vec![3],
                degree: 4,
            };
            let pp = core[3].0;
            for turn in [35.0, -35.0] {
                let id = core.len();
                core.push((
                    out_from(pp, c, 0.6, turn),
                    Info::Scratch {
                        anchor: 3,
                        relevant: vec![3, 0],
                    },
                ));
                edges.push((3, id));
            }
        }
    }
    add_pivot(&mut core, &mut edges, 1, 2, c, p1);
    Spec {
        name: format!("C2-pivot{}-v3{}", p1.tag(), v3.tag()),
        kind: Kind::C2,
        core,
        edges,
        roles: (0..6).collect(),
    }
}

fn f1() -> Spec {
    let sq = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    let core = vec![
        (sq[0], ind(2, 1)),
        (sq[1], ind(1, 2)),
        (sq[2], ind(2, 1)),
        (sq[3], ind(1, 2)),
    ];
    Spec {
        name: "F1".into(),
        kind: Kind::F1,
        core,
        edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        roles: vec![0, 1, 2, 3],
    }
}

fn f2(edge: bool) -> Spec {
    let sq = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    let mid = (0.5, 0.5);
    let sat = if edge { ind(2, 1) } else { ind(1, 2) };
    let core = vec![
        (sq[0], ind(2, 1)),
        (sq[1], ind(1, 2)),
        (sq[2], ind(3, 0)),
        (sq[3], ind(1, 2)),
        (out_from(sq[2], mid, 0.8, 25.0), sat.clone()),
        (out_from(sq[2], mid, 0.8, -25.0), sat),
    ];
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (2, 5)];
    if edge {
        edges.push((4, 5));
    }
    Spec {
        name: format!("F2{}", if edge { "-x1x2" } else { "" }),
        kind: Kind::F2,
        core,
        edges,
        roles: (0..6).collect(),
    }
}

fn soft(u_edge: bool, v_edge: bool) -> Spec {
    // Face [u x y v]: u = 0, v = 1, x = 2, y = 3.
    let (u, v, x, y) = ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0));
    let mid = (0.5, 0.5);
    let sat = |e: bool| if e { ind(2, 1) } else { ind(1, 2) };
    let core = vec![
        (u, ind(2, 0)),
        (v, ind(2, 0)),
        (x, Info::Filler { degree: 3 }),
        (y, Info::Filler { degree: 3 }),
        (out_from(u, mid, 0.8, 25.0), sat(u_edge)),
        (out_from(u, mid, 0.8, -25.0), sat(u_edge)),
        (out_from(v, mid, 0.8, 25.0), sat(v_edge)),
        (out_from(v, mid, 0.8, -25.0), sat(v_edge)),
    ];
    let mut edges = vec![
        (0, 2),
        (2, 3),
        (3, 1),
        (1, 0),
        (0, 4),
        (0, 5),
        (1, 6),
        (1, 7),
    ];
    if u_edge {
        edges.push((4, 5));
    }
    if v_edge {
        edges.push((6, 7));
    }
    let mut roles = vec![0, 1, 2, 3];
    roles.extend(sorted_pair(&core, 4, 5));
    roles.extend(sorted_pair(&core, 6, 7));
    Spec {
        name: format!(
            "SOFT{}{}",
            if u_edge { "-u1u2" } else { "" },
            if v_edge { "-v1v2" } else { "" }
        ),
        kind: Kind::Soft,
        core,
        edges,
        roles,
    }
}

fn sorted_pair(_core: &[((f64, f64), Info)], a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}

fn key(pv: PivotShape, pw: PivotShape) -> Spec {
    let (u, v, w) = ((0.0, 1.2), (-1.0, 0.0), (1.0, 0.0));
    let at = |p: (f64, f64), deg: f64| {
        let (s, c) = deg.to_radians().sin_cos();
        (p.0 + 0.9 * c, p.1 + 0.9 * s)
    };
    let mut core: Vec<((f64, f64), Info)> = vec![
        (u, Info::Filler { degree: 3 }),
        (v, ind(2, 0)),
        (w, ind(2, 0)),
        (at(v, 140.0), ind(1, 2)),
        (at(v, 200.0), ind(1, 2)),
        (at(v, 280.0), ind(1, 2)),
        (at(w, 40.0), ind(1, 2)),
        (at(w, -20.0), ind(1, 2)),
        (at(w, 260.0), ind(1, 2)),
    ];
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (6, 7)];
    edges.extend([3, 4, 5].map(|i| (1, i)));
    edges.extend([6, 7, 8].map(|i| (2, i)));
    add_pivot(&mut core, &mut edges, 3, 4, v, pv);
    add_pivot(&mut core, &mut edges, 6, 7, w, pw);
    Spec {
        name: format!("KEY-pivots{}-{}", pv.tag(), pw.tag()),
        kind: Kind::Key,
        core,
        edges,
        roles: (0..9).collect(),
    }
}

fn simple(kind: Kind) -> Spec {
    match kind {
        Kind::A1 => Spec {
            name: "A1".into(),
            kind,
            core: vec![((0.0, 0.0), ind(1, 2))],
            edges: vec![],
            roles: vec![0],
        },
        Kind::A2 => Spec {
            name: "A2".into(),
            kind,
            core: vec![((0.0, 0.0), ind(1, 2)), ((1.0, 0.0), ind(1, 2))],
            edges: vec![(0, 1)],
            roles: vec![0, 1],
        },
        Kind::A3 => Spec {
            name: "A3".into(),
            kind,
            core: vec![
                ((0.0, 1.0), ind(2, 1)),
                ((0.87, -0.5), ind(1, 2)),
                ((-0.87, -0.5), ind(1, 2)),
            ],
            edges: vec![(0, 1), (1, 2), (0, 2)],
            roles: vec![0, 1, 2],
        },
        _ => unreachable!("only the A kinds are simple"),
    }
}

/// Every template of `kind`, smallest first.
pub fn templates_for(kind: Kind) -> Vec<Template> {
    use PivotShape::{Light, Three};
    let specs: Vec<Spec> = match kind {
        Kind::A1 | Kind::A2 | Kind::A3 => vec![simple(kind)],
        Kind::Q | Kind::B4 => [Three, Light]
            .into_iter()
            .flat_map(|s| [false, true].map(|e| star5(kind, s, e, false)))
            .collect(),
        Kind::C3 => [Three, Light]
            .into_iter()
            .flat_map(|s| [false, true].map(|l| star5(kind, s, true, l)))
            .collect(),
        Kind::B1 => vec![b1(false), b1(true)],
        Kind::B2 => vec![b2()],
        Kind::B3 => vec![b3()],
        Kind::B5 => vec![b5(Three), b5(Light)],
        Kind::F1 => vec![f1()],
        Kind::F2 => vec![f2(false), f2(true)],
        Kind::Soft => vec![soft(false, false), soft(true, false), soft(true, true)],
        Kind::C1 => vec![c1()],
        Kind::C2 => vec![
            c2(Three, Three),
            c2(Light, Three),
            c2(Three, Light),
            c2(Light, Light),
        ],
        Kind::Key => vec![key(Three, Three), key(Light, Three), key(Light, Light)],
    };
    specs.into_iter().map(Spec::build).collect()
}

/// A triangle of 3-vertices whose induced lists are one color short of the
/// hypothesis; some cases have no extension.
#[cfg(test)]
pub(crate) fn weakened_a3() -> Template {
    let mut spec = simple(Kind::A3);
    spec.name = "A3-weakened".into();
    spec.core[0].1 = ind(1, 1);
    let mut t = spec.build();
    t.short_lists = true;
    t
}
