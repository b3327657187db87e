//! Constructive extensions, one per kind.
//!
//! Each routine receives the coloring of the reduced graph with the deleted
//! vertices uncolored (or, for an edge target, every vertex colored) and
//! fills in the rest. Choices are deterministic: "first" means the least
//! color. Validity is checked by the caller.

use crate::coloring::{Color, ListAssignment};
use crate::plane_graph::{PlaneGraph, Vertex};

use super::{Configuration, Kind, ReducibilityError};

pub(crate) enum Fail {
    Pre(String),
    Ext(String),
}

impl Fail {
    pub(crate) fn into_error(self, kind: Kind) -> ReducibilityError {
        match self {
            Fail::Pre(detail) => ReducibilityError::PreconditionViolation { kind, detail },
            Fail::Ext(detail) => ReducibilityError::ExtensionFailed { kind, detail },
        }
    }
}

type Step = Result<(), Fail>;

struct Ctx<'a> {
    g: &'a PlaneGraph,
    lists: &'a ListAssignment,
    col: &'a mut Vec<Option<Color>>,
}

impl Ctx<'_> {
    fn label(&self, v: Vertex) -> u32 {
        self.g.label(v)
    }

    /// `L(v)` minus the colors of colored neighbors outside `set`.
    fn induced(&self, v: Vertex, set: &[Vertex]) -> Vec<Color> {
        self.lists
            .get(v)
            .iter()
            .copied()
            .filter(|&c| {
                !self
                    .g
                    .rotation(v)
                    .iter()
                    .any(|u| !set.contains(u) && self.col[*u] == Some(c))
            })
            .collect()
    }

    /// Gives each vertex of `vs` the first color of its induced list.
    fn color_first(&mut self, vs: &[Vertex], set: &[Vertex]) -> Step {
        for &s in vs {
            let list = self.induced(s, set);
            let Some(&c) = list.first() else {
                return Err(Fail::Pre(format!(
                    "empty induced list at {}",
                    self.label(s)
                )));
            };
            self.col[s] = Some(c);
        }
        Ok(())
    }

    fn count_on(&self, c: Color, vs: &[Vertex]) -> usize {
        vs.iter().filter(|&&s| self.col[s] == Some(c)).count()
    }

    /// Recolors `x` so that no colored neighbor shares its color, keeping
    /// the current color when it already qualifies.
    fn recolor_apart(&mut self, x: Vertex) -> Step {
        let taken = |c: Color| self.g.rotation(x).iter().any(|&u| self.col[u] == Some(c));
        if let Some(c) = self.col[x] {
            if !taken(c) {
                return Ok(());
            }
        }
        let Some(&c) = self.lists.get(x).iter().find(|&&c| !taken(c)) else {
            return Err(Fail::Ext(format!(
                "no free color to recolor {}",
                self.label(x)
            )));
        };
        self.col[x] = Some(c);
        Ok(())
    }

    fn first_outside(&self, v: Vertex, avoid: &[Color]) -> Option<Color> {
        self.lists
            .get(v)
            .iter()
            .copied()
            .find(|c| !avoid.contains(c))
    }
}

pub(crate) fn run(
    g: &PlaneGraph,
    cfg: &Configuration,
    col: &mut Vec<Option<Color>>,
    lists: &ListAssignment,
) -> Step {
    let mut cx = Ctx { g, lists, col };
    let r = cfg.roles.as_slice();
    match cfg.kind {
        Kind::A1 => cx.color_first(&[r[0]], &[r[0]]),
        Kind::A2 => {
            let (iu, iv) = (cx.induced(r[0], r), cx.induced(r[1], r));
            match iu.iter().find(|c| iv.contains(c)) {
                Some(&c) => {
                    cx.col[r[0]] = Some(c);
                    cx.col[r[1]] = Some(c);
                    Ok(())
                }
                None => cx.color_first(r, r),
            }
        }
        Kind::A3 => {
            let (a, b, c) = (r[0], r[1], r[2]);
            cx.color_first(&[b, c], r)?;
            let clash = if cx.col[b] == cx.col[c] {
                cx.col[b]
            } else {
                None
            };
            let ia = cx.induced(a, r);
            let Some(&ca) = ia.iter().find(|&&x| Some(x) != clash) else {
                return Err(Fail::Pre("induced list of the 3-vertex too small".into()));
            };
            cx.col[a] = Some(ca);
            Ok(())
        }
        Kind::Q | Kind::B4 | Kind::C3 => star(&mut cx, r[0], &r[1..5], Some((r[1], r[2]))),
        Kind::B1 => star(&mut cx, r[0], &r[1..4], None),
        Kind::C1 => star(&mut cx, r[0], &r[1..6], None),
        Kind::B5 => star(&mut cx, r[0], &r[1..7], Some((r[5], r[6]))),
        Kind::B2 => face444(&mut cx, r),
        Kind::B3 => light_light(&mut cx, r),
        Kind::F1 => {
            let (u, v, x, y) = (r[0], r[1], r[2], r[3]);
            cx.color_first(&[v, y], r)?;
            let (a, b) = (cx.col[v].unwrap(), cx.col[y].unwrap());
            for (s, avoid) in [(u, a), (x, b)] {
                let Some(&c) = cx.induced(s, r).iter().find(|&&c| c != avoid) else {
                    return Err(Fail::Pre(format!(
                        "induced list at {} too small",
                        cx.label(s)
                    )));
                };
                cx.col[s] = Some(c);
            }
            Ok(())
        }
        Kind::F2 => soft_opposite(&mut cx, r),
        Kind::Soft => adjacent_soft(&mut cx, r),
        Kind::C2 => c2(&mut cx, r),
        Kind::Key => key(&mut cx, r),
    }
}

/// The center-and-satellites argument. Satellites take the first color of
/// their induced lists; the center then takes a color of its induced list
/// used at most once among them. When every such color is used exactly
/// twice, the pivot `p` on the 3-face `[center p q]` gives up its color to
/// the center.
fn star(cx: &mut Ctx, center: Vertex, sats: &[Vertex], pivot: Option<(Vertex, Vertex)>) -> Step {
    let mut set = vec![center];
    set.extend_from_slice(sats);
    for &s in sats {
        cx.col[s] = None;
    }
    cx.col[center] = None;
    let ic = cx.induced(center, &set);
    if 2 * ic.len() < sats.len() {
        return Err(Fail::Pre(format!(
            "center {} has {} free colors for {} satellites",
            cx.label(center),
            ic.len(),
            sats.len()
        )));
    }
    let pivot_list = pivot.map(|(p, _)| cx.induced(p, &set));
    if let (Some((p, _)), Some(list)) = (pivot, &pivot_list) {
        if cx.g.degree(p) == 3 && list.len() < 2 {
            return Err(Fail::Pre(format!(
                "3-vertex pivot {} has fewer than 2 colors",
                cx.label(p)
            )));
        }
    }
    cx.color_first(sats, &set)?;
    if let Some(&c) = ic.iter().find(|&&c| cx.count_on(c, sats) <= 1) {
        cx.col[center] = Some(c);
        return Ok(());
    }
    let Some((p, q)) = pivot else {
        return Err(Fail::Ext(
            "every center color is used twice and there is no pivot".into(),
        ));
    };
    let c = cx.col[p].expect("satellites colored");
    if !ic.contains(&c) {
        return Err(Fail::Ext("pivot color is not free at the center".into()));
    }
    pivot_step(cx, center, p, q, c, pivot_list.as_deref().unwrap_or(&[]))
}

/// Gives `c`, the pivot's color, to the center and repairs the pivot.
///
/// A 3-vertex pivot moves to another color of its induced list. A light
/// pivot is uncolored, its two outside 3-neighbors are recolored apart from
/// their neighbors, and it then avoids `c` together with one more color:
/// that of its first outside neighbor if the partner's color differs from
/// both outside neighbors, otherwise the partner's color.
fn pivot_step(
    cx: &mut Ctx,
    center: Vertex,
    p: Vertex,
    q: Vertex,
    c: Color,
    p_list: &[Color],
) -> Step {
    cx.col[center] = Some(c);
    if cx.g.degree(p) == 3 {
        let Some(&e) = p_list.iter().find(|&&e| e != c) else {
            return Err(Fail::Ext("3-vertex pivot has no second color".into()));
        };
        cx.col[p] = Some(e);
        return Ok(());
    }
    let xy: Vec<Vertex> =
        cx.g.rotation(p)
            .iter()
            .copied()
            .filter(|&u| u != center && u != q)
            .collect();
    let (x, y) = (xy[0], xy[1]);
    cx.col[p] = None;
    cx.recolor_apart(x)?;
    cx.recolor_apart(y)?;
    let (cx_, cy, cq) = (cx.col[x], cx.col[y], cx.col[q]);
    let second = if cq != cx_ && cq != cy { cx_ } else { cq };
    let avoid: Vec<Color> = [Some(c), second].into_iter().flatten().collect();
    let Some(e) = cx.first_outside(p, &avoid) else {
        return Err(Fail::Ext("light pivot has no color left".into()));
    };
    cx.col[p] = Some(e);
    Ok(())
}

fn outside_colors(cx: &Ctx, v: Vertex, face: &[Vertex]) -> Vec<Color> {
    cx.g.rotation(v)
        .iter()
        .filter(|u| !face.contains(u))
        .filter_map(|&u| cx.col[u])
        .collect()
}

fn locally_valid(cx: &Ctx, vs: &[Vertex]) -> bool {
    vs.iter().all(|&v| {
        let same = |w: Vertex| {
            let c = cx.col[w];
            cx.g.rotation(w).iter().filter(|&&u| cx.col[u] == c).count()
        };
        same(v) <= 1 && cx.g.rotation(v).iter().all(|&u| same(u) <= 1)
    })
}

/// B2: the edge `v1 v2` of a `(4-,4-,4-)`-face was deleted.
fn face444(cx: &mut Ctx, r: &[Vertex]) -> Step {
    let face = [r[0], r[1], r[2]];
    if locally_valid(cx, &face) {
        return Ok(());
    }
    let c = cx.col[r[0]];
    if c != cx.col[r[1]] {
        return Err(Fail::Ext(
            "endpoints differ yet the coloring is invalid".into(),
        ));
    }
    let c = c.expect("colored");
    let Some(&w) = face[..2]
        .iter()
        .find(|&&v| outside_colors(cx, v, &face).contains(&c))
    else {
        return Err(Fail::Ext(
            "no endpoint has an outside neighbor of its color".into(),
        ));
    };
    let mut fresh = [0; 3];
    for (i, &v) in face.iter().enumerate() {
        let avoid = outside_colors(cx, v, &face);
        let Some(e) = cx.first_outside(v, &avoid) else {
            return Err(Fail::Pre(format!(
                "no color at {} apart from its outside neighbors",
                cx.label(v)
            )));
        };
        fresh[i] = e;
    }
    for (i, &v) in face.iter().enumerate() {
        cx.col[v] = Some(fresh[i]);
    }
    if fresh[0] == fresh[1] && fresh[1] == fresh[2] {
        cx.col[w] = Some(c);
    }
    Ok(())
}

/// B3: the edge `v2 v3` between the two light 4-vertices was deleted.
fn light_light(cx: &mut Ctx, r: &[Vertex]) -> Step {
    let (v1, v2, v3) = (r[0], r[1], r[2]);
    if locally_valid(cx, &[v1, v2, v3]) {
        return Ok(());
    }
    let c = cx.col[v2];
    if c != cx.col[v3] {
        return Err(Fail::Ext(
            "endpoints differ yet the coloring is invalid".into(),
        ));
    }
    let b = cx.col[v1].expect("colored");
    let c = c.expect("colored");
    let sides = [(v2, r[3], r[4]), (v3, r[5], r[6])];
    let found = sides.iter().find_map(|&(w, x, y)| {
        if cx.col[x] == Some(c) {
            Some((w, y))
        } else if cx.col[y] == Some(c) {
            Some((w, x))
        } else {
            None
        }
    });
    let Some((w, other)) = found else {
        return Err(Fail::Ext(
            "no endpoint has an outside neighbor of its color".into(),
        ));
    };
    cx.col[w] = None;
    cx.recolor_apart(other)?;
    let a = cx.col[other].expect("recolored");
    let e = cx.first_outside(w, &[c, b, a]).unwrap_or(a);
    cx.col[w] = Some(e);
    Ok(())
}

/// F2: face `[u v x y]` with `x` soft, `x1`, `x2` its 3-neighbors.
fn soft_opposite(cx: &mut Ctx, r: &[Vertex]) -> Step {
    let (u, v, x, y, x1, x2) = (r[0], r[1], r[2], r[3], r[4], r[5]);
    cx.color_first(&[v, y, x1, x2], r)?;
    let cv = cx.col[v].unwrap();
    let Some(&cu) = cx.induced(u, r).iter().find(|&&c| c != cv) else {
        return Err(Fail::Pre("induced list of u too small".into()));
    };
    cx.col[u] = Some(cu);
    let cy = cx.col[y].unwrap();
    let first = if cx.col[x1] == Some(cv) || cx.col[x2] == Some(cv) {
        cv
    } else {
        cx.col[x1].unwrap()
    };
    let Some(&e) = cx.induced(x, r).iter().find(|&&c| c != first && c != cy) else {
        return Err(Fail::Pre("list of x too small".into()));
    };
    cx.col[x] = Some(e);
    Ok(())
}

/// SOFT: adjacent soft 4-vertices `u`, `v` on the 4-face `[u x y v]`.
fn adjacent_soft(cx: &mut Ctx, r: &[Vertex]) -> Step {
    let (u, v) = (r[0], r[1]);
    let s = [u, v, r[4], r[5], r[6], r[7]];
    cx.color_first(&s[2..], &s)?;
    let (iu, iv) = (cx.induced(u, &s), cx.induced(v, &s));
    if iu.len() < 2 || iv.len() < 2 {
        return Err(Fail::Pre(
            "soft vertex with fewer than 2 free colors".into(),
        ));
    }
    let nu = [cx.col[r[4]].unwrap(), cx.col[r[5]].unwrap()];
    let nv = [cx.col[r[6]].unwrap(), cx.col[r[7]].unwrap()];
    // One side takes a color apart from its 3-neighbors; the other side
    // takes a color used at most once around it.
    let mut attempt =
        |a: Vertex, ia: &[Color], na: [Color; 2], b: Vertex, ib: &[Color], bn: [Vertex; 2]| {
            let Some(&ca) = ia.iter().find(|c| !na.contains(c)) else {
                return false;
            };
            cx.col[a] = Some(ca);
            let around = [a, bn[0], bn[1]];
            let Some(&cb) = ib.iter().find(|&&c| cx.count_on(c, &around) <= 1) else {
                return false;
            };
            cx.col[b] = Some(cb);
            true
        };
    if attempt(u, &iu, nu, v, &iv, [r[6], r[7]]) || attempt(v, &iv, nv, u, &iu, [r[4], r[5]]) {
        return Ok(());
    }
    // Both induced lists are exactly the colors of the 3-neighbors.
    let c = nu[0];
    cx.col[u] = Some(c);
    let Some(&e) = iv.iter().find(|&&e| e != c) else {
        return Err(Fail::Ext("no color left for v".into()));
    };
    cx.col[v] = Some(e);
    Ok(())
}

/// C2: `v3` is a 3-vertex (pivot argument directly) or a light 4-vertex.
fn c2(cx: &mut Ctx, r: &[Vertex]) -> Step {
    let (v, v1, v2, v3, v4, v5) = (r[0], r[1], r[2], r[3], r[4], r[5]);
    let set = [v, v1, v2, v3, v5];
    let sats = [v1, v2, v3, v5];
    if cx.g.degree(v3) == 3 {
        return star(cx, v, &sats, Some((v1, v2)));
    }
    let xy: Vec<Vertex> =
        cx.g.rotation(v3)
            .iter()
            .copied()
            .filter(|&u| u != v && u != v4)
            .collect();
    cx.recolor_apart(xy[0])?;
    cx.recolor_apart(xy[1])?;
    if !cx.induced(v3, &set).is_empty() {
        return star(cx, v, &sats, Some((v1, v2)));
    }
    // L(v3) is exactly the colors of v4, x3 and y3.
    cx.color_first(&[v1, v2, v5], &set)?;
    let c4 = cx.col[v4];
    let Some(&a) = cx
        .lists
        .get(v)
        .iter()
        .find(|&&a| Some(a) != c4 && cx.count_on(a, &[v1, v2, v5]) <= 1)
    else {
        return Err(Fail::Ext("no color for the center".into()));
    };
    cx.col[v] = Some(a);
    let Some(e) = xy
        .iter()
        .filter_map(|&x| cx.col[x])
        .find(|&e| e != a && cx.lists.contains(v3, e))
    else {
        return Err(Fail::Ext("no color for v3".into()));
    };
    cx.col[v3] = Some(e);
    Ok(())
}

/// KEY: 3-face `[u v w]` with `v`, `w` bad 5-vertices. Roles
/// `[u, v, w, v1, v2, v3, w1, w2, w3]`.
fn key(cx: &mut Ctx, r: &[Vertex]) -> Step {
    let (u, v, w) = (r[0], r[1], r[2]);
    let (v1, v2, v3) = (r[3], r[4], r[5]);
    let (w1, w2, w3) = (r[6], r[7], r[8]);
    let s = [v, w, v1, v2, v3, w1, w2, w3];
    let restart_at_w = |cx: &mut Ctx| star(cx, w, &[v, w1, w2, w3], Some((w1, w2)));

    cx.color_first(&[w1, w2, w3], &s)?;
    let around_w = [cx.col[u], cx.col[w1], cx.col[w2], cx.col[w3]];
    if cx
        .lists
        .get(w)
        .iter()
        .any(|&c| !around_w.contains(&Some(c)))
    {
        return star(cx, v, &[v1, v2, v3, w], Some((v1, v2)));
    }
    let cu = cx.col[u];
    let Some(&a) = cx
        .lists
        .get(w)
        .iter()
        .find(|&&a| Some(a) != cu && cx.count_on(a, &[w1, w2, w3]) == 1)
    else {
        return Err(Fail::Ext("no color for w used once on its 3-side".into()));
    };
    cx.col[w] = Some(a);
    let p_list = cx.induced(v1, &s);
    cx.color_first(&[v1, v2, v3], &s)?;
    let star_set = [v1, v2, v3, w];
    if let Some(&b) = cx
        .lists
        .get(v)
        .iter()
        .find(|&&b| Some(b) != cu && cx.count_on(b, &star_set) <= 1)
    {
        cx.col[v] = Some(b);
        if b != a {
            return Ok(());
        }
        return restart_at_w(cx);
    }
    let c = cx.col[v1].expect("colored");
    if cx.g.degree(v1) == 3 && p_list.len() < 2 {
        return Err(Fail::Pre("3-vertex pivot has fewer than 2 colors".into()));
    }
    pivot_step(cx, v, v1, v2, c, &p_list)?;
    if c != a {
        return Ok(());
    }
    restart_at_w(cx)
}
