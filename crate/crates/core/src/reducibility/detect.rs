//! Hypothesis checks and candidate enumeration for every kind.
//!
//! [`build`] is the single source of truth for a kind's hypothesis: detection
//! filters candidates through it and witness verification re-runs it.
//! Besides the degree and face conditions that name a configuration, the
//! checks include the local side conditions the extension relies on (which
//! vertices of `S` may be adjacent, and that recolored outside vertices
//! touch nothing else in the configuration). In a class member these side
//! conditions follow from the absence of adjacent short cycles.

use crate::plane_graph::{PlaneGraph, Vertex};

use super::{Configuration, Kind, Target};

/// Whether `a b c` bound a 3-face.
pub(crate) fn tri_face(g: &PlaneGraph, a: Vertex, b: Vertex, c: Vertex) -> bool {
    if !g.is_adjacent(a, b) {
        return false;
    }
    let (f1, f2) = g.edge_faces(a, b);
    [f1, f2].into_iter().any(|f| {
        let face = g.face(f);
        face.degree() == 3 && face.contains_vertex(c)
    })
}

/// Whether `cycle` (four distinct vertices in cyclic order) bounds a 4-face.
fn quad_face(g: &PlaneGraph, cycle: [Vertex; 4]) -> bool {
    if !distinct(&cycle) || (0..4).any(|i| !g.is_adjacent(cycle[i], cycle[(i + 1) % 4])) {
        return false;
    }
    let (f1, f2) = g.edge_faces(cycle[0], cycle[1]);
    [f1, f2].into_iter().any(|f| {
        let face = g.face(f);
        face.degree() == 4 && cycle.iter().all(|&v| face.contains_vertex(v))
    })
}

fn distinct(vs: &[Vertex]) -> bool {
    vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
}

/// Every edge inside `set` is one of `allowed`.
fn only_edges(g: &PlaneGraph, set: &[Vertex], allowed: &[(Vertex, Vertex)]) -> bool {
    set.iter().enumerate().all(|(i, &a)| {
        set[i + 1..].iter().all(|&b| {
            !g.is_adjacent(a, b)
                || allowed
                    .iter()
                    .any(|&(x, y)| (x == a && y == b) || (x == b && y == a))
        })
    })
}

fn outside_count(g: &PlaneGraph, v: Vertex, set: &[Vertex]) -> usize {
    g.rotation(v).iter().filter(|u| !set.contains(u)).count()
}

fn others(g: &PlaneGraph, v: Vertex, skip: &[Vertex]) -> Vec<Vertex> {
    g.rotation(v)
        .iter()
        .copied()
        .filter(|u| !skip.contains(u))
        .collect()
}

/// `p` as an S-vertex on the 3-face `[center p partner]`: a 3-vertex, or a
/// 4-vertex whose other two neighbors are 3-vertices. Returns those two
/// neighbors for the 4-vertex case.
pub(crate) fn s_vertex_on(
    g: &PlaneGraph,
    p: Vertex,
    center: Vertex,
    partner: Vertex,
) -> Option<Option<(Vertex, Vertex)>> {
    if !tri_face(g, center, p, partner) {
        return None;
    }
    match g.degree(p) {
        3 => Some(None),
        4 => {
            let o = others(g, p, &[center, partner]);
            (o.len() == 2 && o.iter().all(|&x| g.degree(x) == 3)).then_some(Some((o[0], o[1])))
        }
        _ => None,
    }
}

/// Recolorable outside 3-vertices: each touches the configuration only at
/// its anchor, and they are pairwise non-adjacent and distinct.
fn scratch_ok(g: &PlaneGraph, scratch: &[(Vertex, Vertex)], config: &[Vertex]) -> bool {
    let xs: Vec<Vertex> = scratch.iter().map(|&(x, _)| x).collect();
    distinct(&xs)
        && scratch.iter().all(|&(x, anchor)| {
            g.degree(x) == 3
                && !config.contains(&x)
                && g.is_adjacent(x, anchor)
                && g.rotation(x)
                    .iter()
                    .all(|&u| u == anchor || (!config.contains(&u) && !xs.contains(&u)))
        })
}

fn sorted(mut v: Vec<Vertex>) -> Vec<Vertex> {
    v.sort_unstable();
    v
}

fn config(kind: Kind, roles: &[Vertex], target: Target, scratch: Vec<Vertex>) -> Configuration {
    Configuration {
        kind,
        roles: roles.to_vec(),
        target,
        scratch,
    }
}

/// Checks the hypothesis of `kind` for the role vector `r` and returns the
/// configuration with its target and scratch set.
pub fn build(g: &PlaneGraph, kind: Kind, r: &[Vertex]) -> Option<Configuration> {
    if r.len() != kind.role_names().len() || r.iter().any(|&v| v >= g.vertex_count()) {
        return None;
    }
    let deg = |v: Vertex| g.degree(v);
    let vs = |s: &[Vertex]| Target::Vertices(sorted(s.to_vec()));
    match kind {
        Kind::A1 => (deg(r[0]) <= 2).then(|| config(kind, r, vs(r), vec![])),
        Kind::A2 => {
            let ok = r[0] < r[1] && g.is_adjacent(r[0], r[1]) && deg(r[0]) == 3 && deg(r[1]) == 3;
            ok.then(|| config(kind, r, vs(r), vec![]))
        }
        Kind::A3 => {
            let (a, b, c) = (r[0], r[1], r[2]);
            let ok = b < c && tri_face(g, a, b, c) && deg(a) == 3 && deg(b) == 4 && deg(c) == 4;
            ok.then(|| config(kind, r, vs(r), vec![]))
        }
        Kind::Q | Kind::B4 | Kind::C3 => star5(g, kind, r),
        Kind::B1 => {
            let (v, sats) = (r[0], &r[1..]);
            let set = r;
            let inner = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| g.is_adjacent(sats[i], sats[j]))
                .count();
            let ok = deg(v) == 4
                && sats.windows(2).all(|w| w[0] < w[1])
                && sats.iter().all(|&s| g.is_adjacent(v, s) && deg(s) == 3)
                && inner <= 1
                && distinct(set);
            ok.then(|| config(kind, r, vs(r), vec![]))
        }
        Kind::B2 => {
            let ok = r[0] < r[1]
                && r[1] < r[2]
                && tri_face(g, r[0], r[1], r[2])
                && r.iter().all(|&v| deg(v) <= 4);
            ok.then(|| config(kind, r, Target::Edge(r[0], r[1]), vec![]))
        }
        Kind::B3 => {
            let (v1, v2, v3) = (r[0], r[1], r[2]);
            let (x2, y2, x3, y3) = (r[3], r[4], r[5], r[6]);
            let core = [v1, v2, v3];
            let ok = v2 < v3
                && x2 < y2
                && x3 < y3
                && distinct(r)
                && tri_face(g, v1, v2, v3)
                && deg(v1) >= 5
                && deg(v2) == 4
                && deg(v3) == 4
                && sorted(others(g, v2, &[v1, v3])) == [x2, y2]
                && sorted(others(g, v3, &[v1, v2])) == [x3, y3]
                && scratch_ok(g, &[(x2, v2), (y2, v2), (x3, v3), (y3, v3)], &core);
            ok.then(|| config(kind, r, Target::Edge(v2, v3), vec![x2, y2, x3, y3]))
        }
        Kind::B5 => {
            let (v, s) = (r[0], &r[1..]);
            if deg(v) != 6 || !distinct(r) || sorted(g.rotation(v).to_vec()) != sorted(s.to_vec()) {
                return None;
            }
            let canonical = s[0] < s[1] && s[2] < s[3] && s[0] < s[2];
            let light = [(s[0], s[1]), (s[2], s[3])]
                .iter()
                .all(|&(a, b)| tri_face(g, v, a, b) && deg(a) <= 4 && deg(b) <= 4);
            let pivot = s_vertex_on(g, s[4], v, s[5]);
            let inner = only_edges(g, s, &[(s[0], s[1]), (s[2], s[3]), (s[4], s[5])]);
            if !(canonical && light && deg(s[5]) == 4 && inner) {
                return None;
            }
            let scratch = pivot_scratch(g, pivot?, s[4], r)?;
            Some(config(kind, r, vs(r), scratch))
        }
        Kind::F1 => {
            let (u, v, x, y) = (r[0], r[1], r[2], r[3]);
            let ok = u < x
                && v < y
                && quad_face(g, [u, v, x, y])
                && deg(u) == 3
                && deg(x) == 3
                && deg(v) == 4
                && deg(y) == 4
                && !g.is_adjacent(u, x)
                && !g.is_adjacent(v, y);
            ok.then(|| config(kind, r, vs(r), vec![]))
        }
        Kind::F2 => {
            let (u, v, x, y, x1, x2) = (r[0], r[1], r[2], r[3], r[4], r[5]);
            let ok = v < y
                && x1 < x2
                && distinct(r)
                && quad_face(g, [u, v, x, y])
                && deg(u) == 3
                && deg(v) == 4
                && deg(x) == 4
                && deg(y) == 4
                && sorted(others(g, x, &[v, y])) == [x1, x2]
                && deg(x1) == 3
                && deg(x2) == 3
                && only_edges(
                    g,
                    r,
                    &[(u, v), (v, x), (x, y), (y, u), (x, x1), (x, x2), (x1, x2)],
                );
            ok.then(|| config(kind, r, vs(r), vec![]))
        }
        Kind::Soft => {
            let (u, v, x, y) = (r[0], r[1], r[2], r[3]);
            let (u1, u2, v1, v2) = (r[4], r[5], r[6], r[7]);
            let s = [u, v, u1, u2, v1, v2];
            let ok = u < v
                && u1 < u2
                && v1 < v2
                && distinct(r)
                && quad_face(g, [u, x, y, v])
                && deg(u) == 4
                && deg(v) == 4
                && sorted(others(g, u, &[x, v])) == [u1, u2]
                && sorted(others(g, v, &[y, u])) == [v1, v2]
                && [u1, u2, v1, v2].iter().all(|&w| deg(w) == 3)
                && !g.is_adjacent(u, y)
                && !g.is_adjacent(v, x)
                && only_edges(
                    g,
                    &s,
                    &[
                        (u, v),
                        (u, u1),
                        (u, u2),
                        (v, v1),
                        (v, v2),
                        (u1, u2),
                        (v1, v2),
                    ],
                );
            ok.then(|| config(kind, r, vs(&s), vec![]))
        }
        Kind::C1 => {
            let (v, s) = (r[0], &r[1..]);
            let ok = deg(v) == 5
                && distinct(r)
                && sorted(g.rotation(v).to_vec()) == sorted(s.to_vec())
                && s[0] < s[1]
                && s[2] < s[3]
                && s[0] < s[2]
                && tri_face(g, v, s[0], s[1])
                && tri_face(g, v, s[2], s[3])
                && s[..4].iter().all(|&w| deg(w) <= 4)
                && deg(s[4]) == 3
                && only_edges(g, s, &[(s[0], s[1]), (s[2], s[3])]);
            ok.then(|| config(kind, r, vs(r), vec![]))
        }
        Kind::C2 => {
            let (v, v1, v2, v3, v4, v5) = (r[0], r[1], r[2], r[3], r[4], r[5]);
            let set = [v, v1, v2, v3, v5];
            if deg(v) != 5
                || !distinct(r)
                || sorted(g.rotation(v).to_vec()) != sorted(r[1..].to_vec())
                || deg(v2) != 4
                || deg(v4) < 4
                || deg(v5) != 3
                || !only_edges(g, &set[1..], &[(v1, v2)])
            {
                return None;
            }
            let p1 = s_vertex_on(g, v1, v, v2)?;
            let p3 = s_vertex_on(g, v3, v, v4)?;
            let mut pairs = Vec::new();
            if let Some((x, y)) = p1 {
                pairs.extend([(x, v1), (y, v1)]);
            }
            if let Some((x, y)) = p3 {
                pairs.extend([(x, v3), (y, v3)]);
            }
            if !scratch_ok(g, &pairs, r) {
                return None;
            }
            let scratch = pairs.iter().map(|&(x, _)| x).collect();
            Some(config(kind, r, vs(&set), scratch))
        }
        Kind::Key => {
            let (u, v, w) = (r[0], r[1], r[2]);
            let (vn, wn) = (&r[3..6], &r[6..9]);
            let s = [v, w, vn[0], vn[1], vn[2], wn[0], wn[1], wn[2]];
            if v >= w
                || !distinct(r)
                || !tri_face(g, u, v, w)
                || deg(v) != 5
                || deg(w) != 5
                || sorted(g.rotation(v).to_vec()) != sorted(vec![u, w, vn[0], vn[1], vn[2]])
                || sorted(g.rotation(w).to_vec()) != sorted(vec![u, v, wn[0], wn[1], wn[2]])
                || deg(vn[1]) != 4
                || deg(wn[1]) != 4
                || deg(vn[2]) != 3
                || deg(wn[2]) != 3
            {
                return None;
            }
            let mut allowed = vec![(v, w), (vn[0], vn[1]), (wn[0], wn[1])];
            allowed.extend(vn.iter().map(|&a| (v, a)));
            allowed.extend(wn.iter().map(|&a| (w, a)));
            if !only_edges(g, &s, &allowed) {
                return None;
            }
            let pv = s_vertex_on(g, vn[0], v, vn[1])?;
            let pw = s_vertex_on(g, wn[0], w, wn[1])?;
            let mut pairs = Vec::new();
            for (p, anchor) in [(pv, vn[0]), (pw, wn[0])] {
                if let Some((x, y)) = p {
                    pairs.extend([(x, anchor), (y, anchor)]);
                }
            }
            if !scratch_ok(g, &pairs, r) {
                return None;
            }
            let scratch = pairs.iter().map(|&(x, _)| x).collect();
            Some(config(kind, r, vs(&s), scratch))
        }
    }
}

fn pivot_scratch(
    g: &PlaneGraph,
    pivot: Option<(Vertex, Vertex)>,
    anchor: Vertex,
    config: &[Vertex],
) -> Option<Vec<Vertex>> {
    match pivot {
        None => Some(Vec::new()),
        Some((x, y)) => scratch_ok(g, &[(x, anchor), (y, anchor)], config).then(|| vec![x, y]),
    }
}

/// Shared check for the 5-vertex kinds whose extension is the pivot argument
/// on a center with four satellites: Q, B4 and C3. Roles are
/// `[v, p, q, s3, s4, o]` with `[v p q]` a 3-face, `p` the pivot and `o` the
/// neighbor of `v` left outside.
fn star5(g: &PlaneGraph, kind: Kind, r: &[Vertex]) -> Option<Configuration> {
    let (v, p, q, s3, s4, _o) = (r[0], r[1], r[2], r[3], r[4], r[5]);
    let deg = |x: Vertex| g.degree(x);
    let set = [v, p, q, s3, s4];
    if deg(v) != 5 || !distinct(r) || sorted(g.rotation(v).to_vec()) != sorted(r[1..].to_vec()) {
        return None;
    }
    let pivot = s_vertex_on(g, p, v, q)?;
    let sats = &set[1..];
    let kind_ok = match kind {
        // Satellites keep at most two neighbors outside; edges among them
        // form a matching that contains the pivot pair.
        Kind::Q => {
            s3 < s4
                && [q, s3, s4].iter().all(|&s| outside_count(g, s, &set) <= 2)
                && only_edges(g, sats, &[(p, q), (s3, s4)])
        }
        Kind::B4 => {
            s3 < s4
                && deg(q) == 4
                && deg(s3) == 3
                && deg(s4) == 3
                && only_edges(g, sats, &[(p, q), (s3, s4)])
        }
        Kind::C3 => {
            deg(q) == 4
                && deg(s4) == 4
                && s_vertex_on(g, s3, v, s4).is_some()
                && only_edges(g, sats, &[(p, q), (s3, s4)])
        }
        _ => unreachable!("star5 handles Q, B4 and C3"),
    };
    if !kind_ok {
        return None;
    }
    let scratch = pivot_scratch(g, pivot, p, r)?;
    Some(config(
        kind,
        r,
        Target::Vertices(sorted(set.to_vec())),
        scratch,
    ))
}

/// Role vectors worth checking; [`build`] does the filtering.
pub fn candidates(g: &PlaneGraph, kind: Kind) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let deg = |x: Vertex| g.degree(x);
    match kind {
        Kind::A1 => out.extend(g.vertices().filter(|&v| deg(v) <= 2).map(|v| vec![v])),
        Kind::A2 => {
            for (a, b) in g.edges() {
                out.push(vec![a, b]);
            }
        }
        Kind::A3 | Kind::B2 | Kind::B3 => {
            for face in g.faces().iter().filter(|f| f.degree() == 3) {
                let f = face.vertices();
                if !distinct(&f) {
                    continue;
                }
                match kind {
                    Kind::A3 => {
                        for i in 0..3 {
                            let (a, b, c) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
                            out.push(vec![a, b.min(c), b.max(c)]);
                        }
                    }
                    Kind::B2 => out.push(sorted(f)),
                    _ => {
                        for i in 0..3 {
                            let (a, b, c) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
                            let (b, c) = (b.min(c), b.max(c));
                            let ob = sorted(others(g, b, &[a, c]));
                            let oc = sorted(others(g, c, &[a, b]));
                            if ob.len() == 2 && oc.len() == 2 {
                                out.push(vec![a, b, c, ob[0], ob[1], oc[0], oc[1]]);
                            }
                        }
                    }
                }
            }
        }
        Kind::Q | Kind::B4 | Kind::C3 | Kind::C2 => {
            for v in g.vertices().filter(|&v| deg(v) == 5) {
                let n = g.rotation(v);
                for i in 0..5 {
                    // [v p q] is the 3-face at corner i, in either orientation.
                    for (p, q) in [(n[i], n[(i + 1) % 5]), (n[(i + 1) % 5], n[i])] {
                        let rest: Vec<Vertex> = (2..5).map(|k| n[(i + k) % 5]).collect();
                        match kind {
                            Kind::Q | Kind::B4 => {
                                for oi in 0..3 {
                                    let mut s: Vec<Vertex> = rest.clone();
                                    let o = s.remove(oi);
                                    out.push(vec![v, p, q, s[0].min(s[1]), s[0].max(s[1]), o]);
                                }
                            }
                            _ => {
                                // The second 3-face is two corners away on either side.
                                for (a, b, lone) in
                                    [(rest[0], rest[1], rest[2]), (rest[1], rest[2], rest[0])]
                                {
                                    for (s3, s4) in [(a, b), (b, a)] {
                                        out.push(vec![v, p, q, s3, s4, lone]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Kind::B1 => {
            for v in g.vertices().filter(|&v| deg(v) == 4) {
                let threes: Vec<Vertex> = sorted(
                    g.rotation(v)
                        .iter()
                        .copied()
                        .filter(|&u| deg(u) == 3)
                        .collect(),
                );
                for skip in 0..threes.len() {
                    let mut s = threes.clone();
                    if s.len() == 4 {
                        s.remove(skip);
                    } else if skip > 0 {
                        break;
                    }
                    if s.len() == 3 {
                        out.push(vec![v, s[0], s[1], s[2]]);
                    }
                }
            }
        }
        Kind::B5 => {
            for v in g.vertices().filter(|&v| deg(v) == 6) {
                let n = g.rotation(v);
                for start in 0..2 {
                    let pairs: Vec<(Vertex, Vertex)> = (0..3)
                        .map(|k| (n[start + 2 * k], n[(start + 2 * k + 1) % 6]))
                        .collect();
                    for star in 0..3 {
                        let light: Vec<(Vertex, Vertex)> = (0..3)
                            .filter(|&k| k != star)
                            .map(|k| (pairs[k].0.min(pairs[k].1), pairs[k].0.max(pairs[k].1)))
                            .collect();
                        let (l1, l2) = (light[0].min(light[1]), light[0].max(light[1]));
                        let (a, b) = pairs[star];
                        for (p, q) in [(a, b), (b, a)] {
                            out.push(vec![v, l1.0, l1.1, l2.0, l2.1, p, q]);
                        }
                    }
                }
            }
        }
        Kind::F1 | Kind::F2 | Kind::Soft => {
            for face in g.faces().iter().filter(|f| f.degree() == 4) {
                let f = face.vertices();
                if !distinct(&f) {
                    continue;
                }
                for i in 0..4 {
                    for dir in [1usize, 3] {
                        let c: Vec<Vertex> = (0..4).map(|k| f[(i + dir * k) % 4]).collect();
                        match kind {
                            Kind::F1 => out.push(vec![c[0], c[1], c[2], c[3]]),
                            Kind::F2 => {
                                let o = sorted(others(g, c[2], &[c[1], c[3]]));
                                if o.len() == 2 {
                                    out.push(vec![c[0], c[1], c[2], c[3], o[0], o[1]]);
                                }
                            }
                            _ => {
                                // Face [u x y v] with u = c[0], x = c[1], y = c[2], v = c[3].
                                let (u, x, y, v) = (c[0], c[1], c[2], c[3]);
                                let ou = sorted(others(g, u, &[x, v]));
                                let ov = sorted(others(g, v, &[y, u]));
                                if ou.len() == 2 && ov.len() == 2 {
                                    out.push(vec![u, v, x, y, ou[0], ou[1], ov[0], ov[1]]);
                                }
                            }
                        }
                    }
                }
            }
        }
        Kind::C1 => {
            for v in g.vertices().filter(|&v| deg(v) == 5) {
                let n = g.rotation(v);
                for i in 0..5 {
                    let a = (n[i].min(n[(i + 1) % 5]), n[i].max(n[(i + 1) % 5]));
                    let b = (
                        n[(i + 2) % 5].min(n[(i + 3) % 5]),
                        n[(i + 2) % 5].max(n[(i + 3) % 5]),
                    );
                    let (a, b) = (a.min(b), a.max(b));
                    out.push(vec![v, a.0, a.1, b.0, b.1, n[(i + 4) % 5]]);
                }
            }
        }
        Kind::Key => {
            for face in g.faces().iter().filter(|f| f.degree() == 3) {
                let f = face.vertices();
                if !distinct(&f) {
                    continue;
                }
                for i in 0..3 {
                    let u = f[i];
                    let (v, w) = (
                        f[(i + 1) % 3].min(f[(i + 2) % 3]),
                        f[(i + 1) % 3].max(f[(i + 2) % 3]),
                    );
                    if deg(v) != 5 || deg(w) != 5 {
                        continue;
                    }
                    for vn in key_sides(g, v, u, w) {
                        for wn in key_sides(g, w, u, v) {
                            let mut r = vec![u, v, w];
                            r.extend(vn);
                            r.extend(wn);
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
    out
}

/// For a 5-vertex `v` on the 3-face `[v a b]`: the remaining three neighbors
/// as `[pivot, partner, lone]`, for both orientations of the far 3-face.
fn key_sides(g: &PlaneGraph, v: Vertex, a: Vertex, b: Vertex) -> Vec<[Vertex; 3]> {
    let rest = others(g, v, &[a, b]);
    let mut out = Vec::new();
    for lone in 0..rest.len() {
        let pair: Vec<Vertex> = (0..rest.len())
            .filter(|&k| k != lone)
            .map(|k| rest[k])
            .collect();
        if pair.len() == 2 {
            out.push([pair[0], pair[1], rest[lone]]);
            out.push([pair[1], pair[0], rest[lone]]);
        }
    }
    out
}
