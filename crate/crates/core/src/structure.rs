//! Structural predicates: short cycles, class membership, face patterns
//! and the vertex taxonomy (light, soft, weak, bad, free, pendant).
//!
//! Neighbor and face indices follow [`PlaneGraph::incident_faces`]: `v_i`
//! is the `i`-th rotation neighbor and `f_i` the face between `v v_i` and
//! `v v_{i+1}`. All indices are taken modulo `d(v)`.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write};
use std::str::FromStr;

use thiserror::Error;

use crate::plane_graph::{FaceId, PlaneGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("only cycles of length 3 and 4 are enumerated, not {0}")]
    UnsupportedLength(usize),
    #[error("graph has no cycle")]
    Acyclic,
    #[error("pattern has {pattern} entries but the face has degree {face}")]
    PatternLengthMismatch { pattern: usize, face: usize },
    #[error("bad pattern entry `{0}`")]
    BadPatternEntry(String),
}

/// All `k`-cycles for `k` in {3, 4}, each once, as the lexicographically
/// least rotation/reflection of its vertex sequence.
pub fn cycles_of_length(g: &PlaneGraph, k: usize) -> Result<Vec<Vec<Vertex>>, StructureError> {
    let mut out = Vec::new();
    match k {
        3 => {
            for a in g.vertices() {
                for &b in g.rotation(a).iter().filter(|&&b| b > a) {
                    for &c in g.rotation(b).iter().filter(|&&c| c > b) {
                        if g.is_adjacent(a, c) {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        4 => {
            // a is the least vertex and b < d fixes the reflection
            for a in g.vertices() {
                for &b in g.rotation(a).iter().filter(|&&b| b > a) {
                    for &d in g.rotation(a).iter().filter(|&&d| d > b) {
                        for &c in g.rotation(b).iter().filter(|&&c| c > a && c != d) {
                            if g.is_adjacent(c, d) {
                                out.push(vec![a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        other => return Err(StructureError::UnsupportedLength(other)),
    }
    out.sort();
    Ok(out)
}

fn cycle_edges(cycle: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    (0..cycle.len())
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// A 4-cycle sharing an edge with another 3- or 4-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacentCycles {
    pub four_cycle: Vec<Vertex>,
    pub other: Vec<Vertex>,
    pub shared_edge: (Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub in_class: bool,
    pub violations: Vec<AdjacentCycles>,
}

impl ClassReport {
    pub fn render(&self, g: &PlaneGraph) -> String {
        let mut out = format!("in class: {}\n", if self.in_class { "yes" } else { "no" });
        for v in &self.violations {
            let _ = writeln!(
                out,
                "adjacent: [{}] [{}] edge {}-{}",
                labels(g, &v.four_cycle),
                labels(g, &v.other),
                g.label(v.shared_edge.0),
                g.label(v.shared_edge.1)
            );
        }
        out
    }
}

fn labels(g: &PlaneGraph, vs: &[Vertex]) -> String {
    vs.iter()
        .map(|&v| g.label(v).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn class_violations(g: &PlaneGraph, stop_at_first: bool) -> Vec<AdjacentCycles> {
    let threes = cycles_of_length(g, 3).expect("supported");
    let fours = cycles_of_length(g, 4).expect("supported");
    // cycles through each edge; 4-cycles are numbered after the 3-cycles
    let mut by_edge: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    let all: Vec<&Vec<Vertex>> = threes.iter().chain(fours.iter()).collect();
    for (i, c) in all.iter().enumerate() {
        for e in cycle_edges(c) {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut out = Vec::new();
    for (j, four) in fours.iter().enumerate() {
        let me = threes.len() + j;
        let mut reported = Vec::new();
        for e in cycle_edges(four) {
            for &other in &by_edge[&e] {
                // a pair of 4-cycles is reported once, from the earlier one
                if other == me || (other >= threes.len() && other < me) || reported.contains(&other)
                {
                    continue;
                }
                reported.push(other);
                out.push(AdjacentCycles {
                    four_cycle: four.clone(),
                    other: all[other].clone(),
                    shared_edge: e,
                });
                if stop_at_first {
                    return out;
                }
            }
        }
    }
    out
}

/// Lists every 4-cycle that shares an edge with a different 3- or 4-cycle.
pub fn in_class(g: &PlaneGraph) -> ClassReport {
    let violations = class_violations(g, false);
    ClassReport {
        in_class: violations.is_empty(),
        violations,
    }
}

/// Membership test that stops at the first violation.
pub fn is_in_class(g: &PlaneGraph) -> bool {
    class_violations(g, true).is_empty()
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
pub fn girth(g: &PlaneGraph) -> Result<usize, StructureError> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for root in g.vertices() {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.rotation(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(StructureError::Acyclic)
    } else {
        Ok(best)
    }
}

/// `t(v)`: number of incident 3-faces, counted over corners.
pub fn t(g: &PlaneGraph, v: Vertex) -> usize {
    g.incident_faces(v)
        .into_iter()
        .filter(|&f| g.face_degree(f) == 3)
        .count()
}

/// `m_4(v)`: number of incident 4-faces, counted over corners.
pub fn m4(g: &PlaneGraph, v: Vertex) -> usize {
    g.incident_faces(v)
        .into_iter()
        .filter(|&f| g.face_degree(f) == 4)
        .count()
}

/// `n_3(v)`: number of adjacent 3-vertices.
pub fn n3(g: &PlaneGraph, v: Vertex) -> usize {
    g.rotation(v).iter().filter(|&&u| g.degree(u) == 3).count()
}

/// Whether the edge `uv` lies on a 3-face.
pub fn edge_on_triangle(g: &PlaneGraph, u: Vertex, v: Vertex) -> bool {
    let (a, b) = g.edge_faces(u, v);
    g.face_degree(a) == 3 || g.face_degree(b) == 3
}

/// `v` is a free 3-vertex of its neighbor `u`: `d(v) = 3`, `uv` on no
/// 3-face, `t(v) = 0`.
pub fn is_free_of(g: &PlaneGraph, u: Vertex, v: Vertex) -> bool {
    g.degree(v) == 3 && !edge_on_triangle(g, u, v) && t(g, v) == 0
}

/// `v` is a pendant 3-vertex of its neighbor `u`: `d(v) = 3`, `uv` on no
/// 3-face, `t(v) = 1`.
pub fn is_pendant_of(g: &PlaneGraph, u: Vertex, v: Vertex) -> bool {
    g.degree(v) == 3 && !edge_on_triangle(g, u, v) && t(g, v) == 1
}

/// `ν_3(u)`.
pub fn nu3(g: &PlaneGraph, u: Vertex) -> usize {
    g.rotation(u)
        .iter()
        .filter(|&&v| is_free_of(g, u, v))
        .count()
}

/// `p_3(u)`.
pub fn p3(g: &PlaneGraph, u: Vertex) -> usize {
    g.rotation(u)
        .iter()
        .filter(|&&v| is_pendant_of(g, u, v))
        .count()
}

/// For a 4-vertex, whether `f_i` has degree `face_deg` and the two
/// neighbors `v_{i+2}`, `v_{i+3}` are 3-vertices off its boundary.
fn four_vertex_witness(g: &PlaneGraph, v: Vertex, i: usize, face_deg: usize) -> bool {
    let f = g.corner_face(v, i);
    if g.degree(v) != 4 || g.face_degree(f) != face_deg {
        return false;
    }
    let face = g.face(f);
    [g.nbr(v, i + 2), g.nbr(v, i + 3)]
        .into_iter()
        .all(|x| g.degree(x) == 3 && !face.contains_vertex(x))
}

/// Corners `i` making `v` light: `f_i` is a 3-face and `v_{i+2}`, `v_{i+3}`
/// are 3-vertices.
pub fn light_corners(g: &PlaneGraph, v: Vertex) -> Vec<usize> {
    if g.degree(v) != 4 {
        return Vec::new();
    }
    (0..4)
        .filter(|&i| four_vertex_witness(g, v, i, 3))
        .collect()
}

/// Corners `i` making `v` soft: `f_i` is a 4-face and `v_{i+2}`, `v_{i+3}`
/// are 3-vertices off its boundary.
pub fn soft_corners(g: &PlaneGraph, v: Vertex) -> Vec<usize> {
    if g.degree(v) != 4 {
        return Vec::new();
    }
    (0..4)
        .filter(|&i| four_vertex_witness(g, v, i, 4))
        .collect()
}

/// Soft corners whose opposite face `f_{i+2}` has degree at least 5.
pub fn weak_corners(g: &PlaneGraph, v: Vertex) -> Vec<usize> {
    soft_corners(g, v)
        .into_iter()
        .filter(|&i| g.face_degree(g.corner_face(v, i + 2)) >= 5)
        .collect()
}

pub fn is_light4(g: &PlaneGraph, v: Vertex) -> bool {
    !light_corners(g, v).is_empty()
}

pub fn is_soft4(g: &PlaneGraph, v: Vertex) -> bool {
    !soft_corners(g, v).is_empty()
}

pub fn is_weak4(g: &PlaneGraph, v: Vertex) -> bool {
    !weak_corners(g, v).is_empty()
}

/// A 3-vertex or a light 4-vertex.
pub fn is_s_vertex(g: &PlaneGraph, v: Vertex) -> bool {
    g.degree(v) == 3 || is_light4(g, v)
}

/// Whether the 3-face `f_i` at the 5-vertex `v` is a `(5,*,4)`-face with
/// `v` in the first position.
fn star_four_at(g: &PlaneGraph, v: Vertex, i: usize) -> bool {
    let (a, b) = (g.nbr(v, i), g.nbr(v, i + 1));
    (is_s_vertex(g, a) && g.degree(b) == 4) || (is_s_vertex(g, b) && g.degree(a) == 4)
}

/// Why a 5-vertex is bad.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bad5Witness {
    /// Corner of the `(5,*,4)` 3-face.
    pub star_corner: usize,
    /// Corner of the other 3-face, `star_corner ± 2`.
    pub other_corner: usize,
    /// The neighbor on neither 3-face; a 3-vertex.
    pub lone: Vertex,
}

/// Every way the 5-vertex `v` is bad: 3-faces at corners `i` and `i + 2`,
/// `v_{i+4}` a 3-vertex, and one of the two 3-faces a `(5,*,4)`-face.
pub fn bad5_witnesses(g: &PlaneGraph, v: Vertex) -> Vec<Bad5Witness> {
    let mut out = Vec::new();
    if g.degree(v) != 5 {
        return out;
    }
    let tri = |i: usize| g.face_degree(g.corner_face(v, i)) == 3;
    for i in 0..5 {
        let j = (i + 2) % 5;
        let lone = g.nbr(v, i + 4);
        if !tri(i) || !tri(j) || g.degree(lone) != 3 {
            continue;
        }
        for (star, other) in [(i, j), (j, i)] {
            if star_four_at(g, v, star) {
                out.push(Bad5Witness {
                    star_corner: star,
                    other_corner: other,
                    lone,
                });
            }
        }
    }
    out
}

pub fn is_bad5(g: &PlaneGraph, v: Vertex) -> bool {
    !bad5_witnesses(g, v).is_empty()
}

/// One entry of a face pattern such as `(5+,*,4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSpec {
    Exact(usize),
    AtLeast(usize),
    AtMost(usize),
    /// An S-vertex.
    Star,
}

impl FromStr for DegreeSpec {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StructureError::BadPatternEntry(s.to_string());
        let s = s.trim();
        if s == "*" {
            return Ok(DegreeSpec::Star);
        }
        if let Some(k) = s.strip_suffix('+') {
            return k.parse().map(DegreeSpec::AtLeast).map_err(|_| bad());
        }
        if let Some(k) = s.strip_suffix('-').or_else(|| s.strip_suffix('−')) {
            return k.parse().map(DegreeSpec::AtMost).map_err(|_| bad());
        }
        s.parse().map(DegreeSpec::Exact).map_err(|_| bad())
    }
}

impl DegreeSpec {
    pub fn matches(self, g: &PlaneGraph, v: Vertex) -> bool {
        let d = g.degree(v);
        match self {
            DegreeSpec::Exact(k) => d == k,
            DegreeSpec::AtLeast(k) => d >= k,
            DegreeSpec::AtMost(k) => d <= k,
            DegreeSpec::Star => is_s_vertex(g, v),
        }
    }
}

/// Parses `"(5+,*,4)"` or `"5+ * 4"`.
pub fn parse_pattern(text: &str) -> Result<Vec<DegreeSpec>, StructureError> {
    text.trim_matches(|c| c == '(' || c == ')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

/// All orderings of the boundary of `f` (rotations and reflections of the
/// boundary walk) that match `pattern` entrywise.
pub fn pattern_matches(
    g: &PlaneGraph,
    f: FaceId,
    pattern: &[DegreeSpec],
) -> Result<Vec<Vec<Vertex>>, StructureError> {
    let walk = g.face(f).vertices();
    if walk.len() != pattern.len() {
        return Err(StructureError::PatternLengthMismatch {
            pattern: pattern.len(),
            face: walk.len(),
        });
    }
    let m = walk.len();
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for start in 0..m {
        for dir in [1, m - 1] {
            let order: Vec<Vertex> = (0..m).map(|k| walk[(start + dir * k) % m]).collect();
            if !out.contains(&order) && pattern.iter().zip(&order).all(|(p, &v)| p.matches(g, v)) {
                out.push(order);
            }
        }
    }
    Ok(out)
}

/// Whether some rotation or reflection of `f` matches `pattern`.
pub fn face_pattern(
    g: &PlaneGraph,
    f: FaceId,
    pattern: &[DegreeSpec],
) -> Result<bool, StructureError> {
    Ok(!pattern_matches(g, f, pattern)?.is_empty())
}

/// Everything [`classify`] records about one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexInfo {
    pub degree: usize,
    pub t: usize,
    pub m4: usize,
    pub n3: usize,
    pub nu3: usize,
    pub p3: usize,
    /// First witnessing corner, if any.
    pub light4: Option<usize>,
    pub soft4: Option<usize>,
    pub weak4: Option<usize>,
    pub s_vertex: bool,
    pub bad5: Option<Bad5Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub vertices: Vec<VertexInfo>,
    /// Degrees of the boundary vertices of each face, in walk order.
    pub face_degrees: Vec<Vec<usize>>,
}

pub fn classify(g: &PlaneGraph) -> StructureReport {
    let vertices = g
        .vertices()
        .map(|v| VertexInfo {
            degree: g.degree(v),
            t: t(g, v),
            m4: m4(g, v),
            n3: n3(g, v),
            nu3: nu3(g, v),
            p3: p3(g, v),
            light4: light_corners(g, v).first().copied(),
            soft4: soft_corners(g, v).first().copied(),
            weak4: weak_corners(g, v).first().copied(),
            s_vertex: is_s_vertex(g, v),
            bad5: bad5_witnesses(g, v).first().copied(),
        })
        .collect();
    let face_degrees = g
        .faces()
        .iter()
        .map(|f| f.vertices().into_iter().map(|v| g.degree(v)).collect())
        .collect();
    StructureReport {
        vertices,
        face_degrees,
    }
}

impl StructureReport {
    /// Stable text form: one line per vertex, then one per face.
    pub fn render(&self, g: &PlaneGraph) -> String {
        let mut out = String::new();
        for (v, info) in self.vertices.iter().enumerate() {
            let mut flags = Vec::new();
            if let Some(i) = info.light4 {
                flags.push(format!("light4@{}", g.label(g.nbr(v, i))));
            }
            if let Some(i) = info.soft4 {
                flags.push(format!("soft4@{}", g.label(g.nbr(v, i))));
            }
            if let Some(i) = info.weak4 {
                flags.push(format!("weak4@{}", g.label(g.nbr(v, i))));
            }
            if info.s_vertex {
                flags.push("S".to_string());
            }
            if let Some(w) = info.bad5 {
                flags.push(format!("bad5@{}", g.label(g.nbr(v, w.star_corner))));
            }
            let _ = writeln!(
                out,
                "v{} d={} t={} m4={} n3={} nu3={} p3={} flags=[{}]",
                g.label(v),
                info.degree,
                info.t,
                info.m4,
                info.n3,
                info.nu3,
                info.p3,
                flags.join(",")
            );
        }
        for (f, degs) in self.face_degrees.iter().enumerate() {
            let walk = g.face(f).vertices();
            let _ = writeln!(
                out,
                "f{} [{}] ({})",
                f,
                labels(g, &walk),
                degs.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
        }
        out
    }
}

impl fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeSpec::Exact(k) => write!(f, "{k}"),
            DegreeSpec::AtLeast(k) => write!(f, "{k}+"),
            DegreeSpec::AtMost(k) => write!(f, "{k}-"),
            DegreeSpec::Star => write!(f, "*"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;
    use crate::generators;

    fn fixture(name: &str) -> PlaneGraph {
        let path = format!("{}/corpus/{name}.rot", env!("CARGO_MANIFEST_DIR"));
        crate::format::read_graph(std::path::Path::new(&path)).unwrap()
    }

    fn brute_cycle_count(g: &PlaneGraph, k: usize) -> usize {
        // ordered k-tuples of distinct vertices forming a closed walk, over 2k
        let n = g.vertex_count();
        let mut count = 0;
        let mut tuple = vec![0; k];
        fn rec(
            g: &PlaneGraph,
            k: usize,
            n: usize,
            tuple: &mut Vec<usize>,
            i: usize,
            count: &mut usize,
        ) {
            if i == k {
                if g.is_adjacent(tuple[k - 1], tuple[0]) {
                    *count += 1;
                }
                return;
            }
            for v in 0..n {
                if tuple[..i].contains(&v) || (i > 0 && !g.is_adjacent(tuple[i - 1], v)) {
                    continue;
                }
                tuple[i] = v;
                rec(g, k, n, tuple, i + 1, count);
            }
        }
        rec(g, k, n, &mut tuple, 0, &mut count);
        count / (2 * k)
    }

    #[test]
    fn cycle_inventory_matches_brute_force() {
        let k4 = generators::wheel(3);
        assert_eq!(cycles_of_length(&k4, 3).unwrap().len(), 4);
        assert_eq!(cycles_of_length(&k4, 4).unwrap().len(), 3);
        let c5 = generators::cycle(5);
        assert!(cycles_of_length(&c5, 3).unwrap().is_empty());
        assert!(cycles_of_length(&c5, 4).unwrap().is_empty());
        let cube = generators::prism(4);
        assert_eq!(cycles_of_length(&cube, 3).unwrap().len(), 0);
        assert_eq!(cycles_of_length(&cube, 4).unwrap().len(), 6);
        for g in [
            generators::wheel(5),
            generators::prism(5),
            fixture("icosahedron"),
            fixture("bad5_local"),
        ] {
            for k in [3, 4] {
                assert_eq!(
                    cycles_of_length(&g, k).unwrap().len(),
                    brute_cycle_count(&g, k)
                );
            }
        }
        assert_eq!(
            cycles_of_length(&c5, 5),
            Err(StructureError::UnsupportedLength(5))
        );
    }

    #[test]
    fn class_membership_examples() {
        assert!(!in_class(&generators::wheel(3)).in_class);
        assert!(in_class(&fixture("dodecahedron")).in_class);
        let cube = in_class(&generators::prism(4));
        assert!(!cube.in_class);
        // 12 edges, each on two faces, no other 4-cycles
        assert_eq!(cube.violations.len(), 12);
        // two triangles sharing an edge make a 4-cycle adjacent to a 3-cycle
        let diamond = parse_graph("1: 2 3 4\n2: 1 4\n3: 4 1\n4: 1 3 2\n").unwrap();
        assert!(!is_in_class(&diamond));
        assert!(is_in_class(&fixture("truncated_octahedron")));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&generators::cycle(5)), Ok(5));
        assert_eq!(girth(&generators::wheel(3)), Ok(3));
        assert_eq!(girth(&generators::prism(4)), Ok(4));
        assert_eq!(girth(&fixture("dodecahedron")), Ok(5));
        assert_eq!(girth(&generators::path(4)), Err(StructureError::Acyclic));
    }

    #[test]
    fn local_pattern_fixtures() {
        let g = fixture("light4_local");
        assert!(is_light4(&g, g.vertex_of(1).unwrap()));
        assert!(is_s_vertex(&g, g.vertex_of(1).unwrap()));
        let g = fixture("soft4_local");
        let w = g.vertex_of(1).unwrap();
        assert!(is_soft4(&g, w) && !is_light4(&g, w));
        // the face opposite the 4-face is another 4-face
        assert!(!is_weak4(&g, w));
        let g = fixture("weak4_local");
        assert!(is_weak4(&g, g.vertex_of(1).unwrap()));
        let g = fixture("bad5_local");
        assert!(is_bad5(&g, g.vertex_of(1).unwrap()));
    }

    #[test]
    fn regular_solids() {
        let r = classify(&fixture("dodecahedron"));
        assert!(r
            .vertices
            .iter()
            .all(|i| i.degree == 3 && i.t == 0 && i.nu3 == 3 && i.p3 == 0));
        assert!(r
            .vertices
            .iter()
            .all(|i| i.light4.is_none() && i.soft4.is_none() && i.bad5.is_none()));
        let r = classify(&fixture("octahedron"));
        assert!(r
            .vertices
            .iter()
            .all(|i| i.degree == 4 && i.t == 4 && i.n3 == 0 && !i.s_vertex));
    }

    #[test]
    fn face_patterns() {
        // triangle 1 2 3 with degrees 3, 4, 5 inside a larger graph
        let g = parse_graph("1: 2 3 6\n2: 3 1 4 6\n3: 1 2 4 5 6\n4: 5 3 2\n5: 6 3 4\n6: 1 5 3 2\n");
        assert!(
            g.is_err(),
            "hand rotation above is deliberately inconsistent"
        );
        let g = fixture("bad5_local");
        let u = g.vertex_of(1).unwrap();
        let f = g.corner_face(u, bad5_witnesses(&g, u)[0].star_corner);
        let star = parse_pattern("(5,*,4)").unwrap();
        assert!(face_pattern(&g, f, &star).unwrap());
        assert!(face_pattern(&g, f, &parse_pattern("(5+,3,4-)").unwrap()).unwrap());
        assert!(!face_pattern(&g, f, &parse_pattern("(5,4,4)").unwrap()).unwrap());
        assert_eq!(
            face_pattern(&g, f, &parse_pattern("(5,4)").unwrap()),
            Err(StructureError::PatternLengthMismatch {
                pattern: 2,
                face: 3
            })
        );
        // (4,4,6) with neither 4-vertex light does not match (6,*,4)
        let oct = fixture("octahedron");
        assert!(!face_pattern(&oct, 0, &parse_pattern("(4,*,4)").unwrap()).unwrap());
    }

    #[test]
    fn class_members_respect_face_bounds() {
        for name in ["truncated_cube", "truncated_octahedron", "dodecahedron"] {
            let g = fixture(name);
            for v in g.vertices() {
                assert!(t(&g, v) + m4(&g, v) <= g.degree(v) / 2, "{name}");
            }
        }
    }
}
