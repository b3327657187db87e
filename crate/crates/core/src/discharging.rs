//! Exact charge redistribution on plane graphs of the class.
//!
//! Every vertex starts with `3d(v) - 10` and every face with `2d(f) - 10`;
//! by Euler's formula the total is `-20`. The rules below move charge from
//! vertices to incident faces and to nearby 3-vertices. All arithmetic is
//! over the rationals.

use std::fmt::{self, Write};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::plane_graph::{FaceId, PlaneGraph, Vertex};
use crate::structure::{self, DegreeSpec};

pub type Charge = Rational64;

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("graph is not in the class: {0} adjacent cycle pair(s)")]
    NotInClass(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(Vertex),
    Face(FaceId),
}

impl Element {
    pub fn render(self, g: &PlaneGraph) -> String {
        match self {
            Element::Vertex(v) => format!("v{}", g.label(v)),
            Element::Face(f) => format!("f{f}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1_1,
    R1_2,
    R1_3a,
    R1_3b,
    R1_4a,
    R1_4b,
    R1_5a,
    R1_5b,
    R2_1,
    R2_2,
    R3_1_1,
    R3_1_2,
    R3_2_1,
    R3_2_2,
    R3_3,
    R4Pendant,
    R4Free,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::R1_1 => "R1.1",
            Rule::R1_2 => "R1.2",
            Rule::R1_3a => "R1.3a",
            Rule::R1_3b => "R1.3b",
            Rule::R1_4a => "R1.4a",
            Rule::R1_4b => "R1.4b",
            Rule::R1_5a => "R1.5a",
            Rule::R1_5b => "R1.5b",
            Rule::R2_1 => "R2.1",
            Rule::R2_2 => "R2.2",
            Rule::R3_1_1 => "R3.1.1",
            Rule::R3_1_2 => "R3.1.2",
            Rule::R3_2_1 => "R3.2.1",
            Rule::R3_2_2 => "R3.2.2",
            Rule::R3_3 => "R3.3",
            Rule::R4Pendant => "R4.pendant",
            Rule::R4Free => "R4.free",
        }
    }

    pub fn is_face_rule(self) -> bool {
        !matches!(self, Rule::R4Pendant | Rule::R4Free)
    }

    pub fn is_triangle_rule(self) -> bool {
        matches!(
            self,
            Rule::R1_1
                | Rule::R1_2
                | Rule::R1_3a
                | Rule::R1_3b
                | Rule::R1_4a
                | Rule::R1_4b
                | Rule::R1_5a
                | Rule::R1_5b
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub source: Vertex,
    pub sink: Element,
    pub amount: Charge,
}

/// Charges on every vertex and face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeState {
    pub vertex: Vec<Charge>,
    pub face: Vec<Charge>,
}

impl ChargeState {
    pub fn total(&self) -> Charge {
        self.vertex.iter().chain(self.face.iter()).copied().sum()
    }

    pub fn get(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex[v],
            Element::Face(f) => self.face[f],
        }
    }

    fn get_mut(&mut self, e: Element) -> &mut Charge {
        match e {
            Element::Vertex(v) => &mut self.vertex[v],
            Element::Face(f) => &mut self.face[f],
        }
    }

    fn apply(&mut self, t: &Transfer) {
        *self.get_mut(Element::Vertex(t.source)) -= t.amount;
        *self.get_mut(t.sink) += t.amount;
    }

    /// Elements with negative charge, vertices first.
    pub fn negatives(&self) -> Vec<(Element, Charge)> {
        let vs = self
            .vertex
            .iter()
            .enumerate()
            .map(|(v, &c)| (Element::Vertex(v), c));
        let fs = self
            .face
            .iter()
            .enumerate()
            .map(|(f, &c)| (Element::Face(f), c));
        vs.chain(fs).filter(|(_, c)| c.is_negative()).collect()
    }
}

/// `ω(v) = 3d(v) - 10`, `ω(f) = 2d(f) - 10`.
pub fn initial_charge(g: &PlaneGraph) -> ChargeState {
    let state = ChargeState {
        vertex: g
            .vertices()
            .map(|v| Charge::from(3 * g.degree(v) as i64 - 10))
            .collect(),
        face: g
            .faces()
            .iter()
            .map(|f| Charge::from(2 * f.degree() as i64 - 10))
            .collect(),
    };
    assert_eq!(state.total(), Charge::from(-20), "Euler identity");
    state
}

/// A 3-face that no R1 sub-case covers, or a 4-face corner R3 leaves open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uncovered {
    pub face: FaceId,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discharge {
    pub initial: ChargeState,
    pub final_charge: ChargeState,
    pub ledger: Vec<Transfer>,
    pub uncovered: Vec<Uncovered>,
    pub warnings: Vec<String>,
}

struct Flags {
    light: Vec<bool>,
    soft: Vec<bool>,
    weak: Vec<bool>,
    bad: Vec<bool>,
}

impl Flags {
    fn of(g: &PlaneGraph) -> Self {
        Flags {
            light: g.vertices().map(|v| structure::is_light4(g, v)).collect(),
            soft: g.vertices().map(|v| structure::is_soft4(g, v)).collect(),
            weak: g.vertices().map(|v| structure::is_weak4(g, v)).collect(),
            bad: g.vertices().map(|v| structure::is_bad5(g, v)).collect(),
        }
    }
}

/// Applies R1 to R4 once each wherever they match.
pub fn apply_rules(g: &PlaneGraph) -> Result<Discharge, DischargeError> {
    let class = structure::in_class(g);
    if !class.in_class {
        return Err(DischargeError::NotInClass(class.violations.len()));
    }
    let flags = Flags::of(g);
    let mut ledger = Vec::new();
    let mut uncovered = Vec::new();
    let mut warnings = Vec::new();

    for face in g.faces() {
        if face.degree() == 3 {
            triangle_rules(
                g,
                &flags,
                face.id,
                &mut ledger,
                &mut uncovered,
                &mut warnings,
            );
        }
    }
    for v in g.vertices() {
        let d = g.degree(v);
        for i in 0..d {
            let f = g.corner_face(v, i);
            if g.face_degree(f) != 4 {
                continue;
            }
            let (a, b) = (g.nbr(v, i), g.nbr(v, i + 1));
            let (da, db) = (g.degree(a), g.degree(b));
            let rule = if d >= 5 {
                Some(if da >= 4 && db >= 4 {
                    Rule::R2_1
                } else {
                    Rule::R2_2
                })
            } else if d == 4 && !flags.weak[v] {
                if da == 3 && db == 3 {
                    let opposite = g.corner_face(v, i + 2);
                    Some(if g.face_degree(opposite) == 3 {
                        Rule::R3_1_1
                    } else {
                        Rule::R3_1_2
                    })
                } else if da >= 4 && db >= 4 {
                    Some(if flags.soft[a] || flags.soft[b] {
                        Rule::R3_2_1
                    } else {
                        Rule::R3_2_2
                    })
                } else if (da == 3 && db >= 4) || (db == 3 && da >= 4) {
                    Some(Rule::R3_3)
                } else {
                    uncovered.push(Uncovered {
                        face: f,
                        reason: format!(
                            "4-vertex v{} has a neighbor of degree < 3 on the 4-face",
                            g.label(v)
                        ),
                    });
                    None
                }
            } else {
                None
            };
            if let Some(rule) = rule {
                ledger.push(Transfer {
                    rule,
                    source: v,
                    sink: Element::Face(f),
                    amount: schedule_amount(rule, 0),
                });
            }
        }
    }
    for u in g.vertices().filter(|&u| g.degree(u) >= 4) {
        for &v in g.rotation(u) {
            let rule = if structure::is_pendant_of(g, u, v) {
                Rule::R4Pendant
            } else if structure::is_free_of(g, u, v) {
                Rule::R4Free
            } else {
                continue;
            };
            ledger.push(Transfer {
                rule,
                source: u,
                sink: Element::Vertex(v),
                amount: schedule_amount(rule, 0),
            });
        }
    }

    let initial = initial_charge(g);
    let mut final_charge = initial.clone();
    for t in &ledger {
        final_charge.apply(t);
    }
    Ok(Discharge {
        initial,
        final_charge,
        ledger,
        uncovered,
        warnings,
    })
}

/// The fixed amount each rule moves. For the R1 rules `role` is the
/// position in the rule's triple; other rules ignore it.
pub fn schedule_amount(rule: Rule, role: usize) -> Charge {
    let triple = |a: Charge, b: Charge, c: Charge| [a, b, c][role];
    let n = |k: i64| Charge::from(k);
    match rule {
        Rule::R1_1 | Rule::R1_3a => triple(n(0), n(1), n(3)),
        Rule::R1_2 | Rule::R1_4b => triple(n(0), n(2), n(2)),
        Rule::R1_3b | Rule::R1_4a => triple(n(1), n(1), n(2)),
        Rule::R1_5a => triple(n(1), q(3, 2), q(3, 2)),
        Rule::R1_5b => q(4, 3),
        Rule::R2_1 | Rule::R3_2_1 | Rule::R4Pendant => n(1),
        Rule::R2_2 | Rule::R3_1_1 => q(4, 3),
        Rule::R3_1_2 | Rule::R3_2_2 | Rule::R3_3 => q(2, 3),
        Rule::R4Free => q(1, 3),
    }
}

fn triangle_rules(
    g: &PlaneGraph,
    flags: &Flags,
    f: FaceId,
    ledger: &mut Vec<Transfer>,
    uncovered: &mut Vec<Uncovered>,
    warnings: &mut Vec<String>,
) {
    let mut vs = g.face(f).vertices();
    vs.sort_by_key(|&v| (g.degree(v), g.label(v)));
    let d: Vec<usize> = vs.iter().map(|&v| g.degree(v)).collect();
    let label = |v: Vertex| g.label(v);
    // roles follow the rule's triple; the distinguished vertex goes first
    // (R1.3a, R1.5a) or second (R1.4a)
    let mut pick = |cands: Vec<Vertex>, what: &str| -> Option<Vertex> {
        if cands.len() > 1 {
            warnings.push(format!(
                "f{f}: {} {what} vertices, using v{}",
                cands.len(),
                label(cands[0])
            ));
        }
        cands.first().copied()
    };
    let (rule, roles): (Rule, [Vertex; 3]) = match (d[0], d[1], d[2]) {
        (3, 4, x) if x >= 5 => (Rule::R1_1, [vs[0], vs[1], vs[2]]),
        (3, y, _) if y >= 5 => (Rule::R1_2, [vs[0], vs[1], vs[2]]),
        (4, 4, x) if x >= 5 => {
            let lights: Vec<Vertex> = vs[..2]
                .iter()
                .copied()
                .filter(|&v| flags.light[v])
                .collect();
            match pick(lights, "light") {
                Some(l) => {
                    let other = if l == vs[0] { vs[1] } else { vs[0] };
                    (Rule::R1_3a, [l, other, vs[2]])
                }
                None => (Rule::R1_3b, [vs[0], vs[1], vs[2]]),
            }
        }
        (4, y, _) if y >= 5 => {
            let bads: Vec<Vertex> = vs[1..].iter().copied().filter(|&v| flags.bad[v]).collect();
            match pick(bads, "bad") {
                Some(b) => {
                    let other = if b == vs[1] { vs[2] } else { vs[1] };
                    (Rule::R1_4a, [vs[0], b, other])
                }
                None => (Rule::R1_4b, [vs[0], vs[1], vs[2]]),
            }
        }
        (x, _, _) if x >= 5 => {
            let bads: Vec<Vertex> = vs.iter().copied().filter(|&v| flags.bad[v]).collect();
            match pick(bads, "bad") {
                Some(b) => {
                    let rest: Vec<Vertex> = vs.iter().copied().filter(|&v| v != b).collect();
                    (Rule::R1_5a, [b, rest[0], rest[1]])
                }
                None => (Rule::R1_5b, [vs[0], vs[1], vs[2]]),
            }
        }
        _ => {
            let reason = format!("no R1 case for degrees ({},{},{})", d[0], d[1], d[2]);
            warnings.push(format!("f{f}: {reason}"));
            uncovered.push(Uncovered { face: f, reason });
            return;
        }
    };
    for (role, &v) in roles.iter().enumerate() {
        let amount = schedule_amount(rule, role);
        if !amount.is_zero() {
            ledger.push(Transfer {
                rule,
                source: v,
                sink: Element::Face(f),
                amount,
            });
        }
    }
}

/// Re-derives one ledger entry from the definitions alone: the sink must
/// match the rule's pattern with the source in a role whose scheduled
/// amount equals the recorded one.
pub fn entry_consistent(g: &PlaneGraph, t: &Transfer) -> bool {
    let v = t.source;
    let d = g.degree(v);
    match (t.rule, t.sink) {
        (rule, Element::Face(f)) if rule.is_triangle_rule() => {
            if g.face_degree(f) != 3 || !g.face(f).contains_vertex(v) {
                return false;
            }
            let pattern: &[DegreeSpec] = match rule {
                Rule::R1_1 => &[
                    DegreeSpec::Exact(3),
                    DegreeSpec::Exact(4),
                    DegreeSpec::AtLeast(5),
                ],
                Rule::R1_2 => &[
                    DegreeSpec::Exact(3),
                    DegreeSpec::AtLeast(5),
                    DegreeSpec::AtLeast(5),
                ],
                Rule::R1_3a | Rule::R1_3b => &[
                    DegreeSpec::Exact(4),
                    DegreeSpec::Exact(4),
                    DegreeSpec::AtLeast(5),
                ],
                Rule::R1_4a | Rule::R1_4b => &[
                    DegreeSpec::Exact(4),
                    DegreeSpec::AtLeast(5),
                    DegreeSpec::AtLeast(5),
                ],
                _ => &[
                    DegreeSpec::AtLeast(5),
                    DegreeSpec::AtLeast(5),
                    DegreeSpec::AtLeast(5),
                ],
            };
            let orders = structure::pattern_matches(g, f, pattern).unwrap_or_default();
            let light = |x: Vertex| structure::is_light4(g, x);
            let bad = |x: Vertex| structure::is_bad5(g, x);
            orders.iter().any(|o| {
                let side_ok = match rule {
                    Rule::R1_3a => light(o[0]),
                    Rule::R1_3b => !light(o[0]) && !light(o[1]),
                    Rule::R1_4a => bad(o[1]),
                    Rule::R1_4b => !bad(o[1]) && !bad(o[2]),
                    Rule::R1_5a => bad(o[0]),
                    Rule::R1_5b => o.iter().all(|&x| !bad(x)),
                    _ => true,
                };
                side_ok && (0..3).any(|r| o[r] == v && schedule_amount(rule, r) == t.amount)
            })
        }
        (rule, Element::Face(f)) if rule.is_face_rule() => {
            if g.face_degree(f) != 4 {
                return false;
            }
            // every corner of v on f is a candidate
            (0..d).filter(|&i| g.corner_face(v, i) == f).any(|i| {
                let (a, b) = (g.nbr(v, i), g.nbr(v, i + 1));
                let (lo, hi) = (g.degree(a).min(g.degree(b)), g.degree(a).max(g.degree(b)));
                let holds = match rule {
                    Rule::R2_1 => d >= 5 && lo >= 4,
                    Rule::R2_2 => d >= 5 && lo < 4,
                    _ if d != 4 || structure::is_weak4(g, v) => false,
                    Rule::R3_1_1 => {
                        hi == 3 && lo == 3 && g.face_degree(g.corner_face(v, i + 2)) == 3
                    }
                    Rule::R3_1_2 => {
                        hi == 3 && lo == 3 && g.face_degree(g.corner_face(v, i + 2)) != 3
                    }
                    Rule::R3_2_1 => {
                        lo >= 4 && (structure::is_soft4(g, a) || structure::is_soft4(g, b))
                    }
                    Rule::R3_2_2 => {
                        lo >= 4 && !structure::is_soft4(g, a) && !structure::is_soft4(g, b)
                    }
                    Rule::R3_3 => lo == 3 && hi >= 4,
                    _ => false,
                };
                holds && schedule_amount(rule, 0) == t.amount
            })
        }
        (Rule::R4Pendant, Element::Vertex(x)) => {
            d >= 4
                && g.is_adjacent(v, x)
                && structure::is_pendant_of(g, v, x)
                && t.amount == q(1, 1)
        }
        (Rule::R4Free, Element::Vertex(x)) => {
            d >= 4 && g.is_adjacent(v, x) && structure::is_free_of(g, v, x) && t.amount == q(1, 3)
        }
        _ => false,
    }
}

/// Allowed amounts from a 5+-vertex to a 3-face.
pub fn allowed_big_amounts() -> [Charge; 5] {
    [q(3, 1), q(2, 1), q(3, 2), q(4, 3), q(1, 1)]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Reducible configurations are present, as the theorem predicts.
    Consistent,
    /// A class member with no reducible configuration.
    ProofGap(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub conserved: bool,
    /// Ledger indices with the violated bound.
    pub bound_violations: Vec<(usize, String)>,
    /// Ledger indices that fail the independent replay.
    pub replay_failures: Vec<usize>,
    /// 3-faces whose R1 total is not 4, with the total.
    pub triangle_totals_off: Vec<(FaceId, Charge)>,
    pub uncovered: Vec<Uncovered>,
    pub negatives: Vec<(Element, Charge)>,
    pub configurations: usize,
    pub verdict: Verdict,
}

impl AuditReport {
    /// Conservation, bounds, replay and verdict all pass.
    pub fn passes(&self) -> bool {
        self.conserved
            && self.bound_violations.is_empty()
            && self.replay_failures.is_empty()
            && self.triangle_totals_off.is_empty()
            && self.verdict == Verdict::Consistent
    }
}

/// Checks a finished discharge. `configurations` is the number of
/// reducible configurations found in `g`.
pub fn audit_discharge(g: &PlaneGraph, run: &Discharge, configurations: usize) -> AuditReport {
    let minus20 = Charge::from(-20);
    let mut state = run.initial.clone();
    let mut conserved = state.total() == minus20;
    for t in &run.ledger {
        state.apply(t);
        conserved &= state.total() == minus20;
    }
    conserved &= state == run.final_charge;

    let mut bound_violations = Vec::new();
    let mut triangle_totals = vec![Charge::zero(); g.face_count()];
    let mut seen = std::collections::HashSet::new();
    for (i, t) in run.ledger.iter().enumerate() {
        if !t.amount.is_positive() {
            bound_violations.push((i, "non-positive amount".to_string()));
        }
        if !seen.insert((t.source, t.sink, t.rule)) {
            bound_violations.push((i, "duplicate (source, sink, rule)".to_string()));
        }
        let Element::Face(f) = t.sink else { continue };
        if g.face_degree(f) != 3 {
            continue;
        }
        if t.rule.is_triangle_rule() {
            triangle_totals[f] += t.amount;
        }
        let d = g.degree(t.source);
        if d == 4 && t.amount > q(1, 1) {
            bound_violations.push((i, "4-vertex sends more than 1 to a 3-face".to_string()));
        }
        if d >= 5 {
            if !allowed_big_amounts().contains(&t.amount) {
                bound_violations.push((i, format!("5+-vertex sends {} to a 3-face", t.amount)));
            }
            let star = [
                DegreeSpec::AtLeast(5),
                DegreeSpec::Star,
                DegreeSpec::Exact(4),
            ];
            if t.amount == q(3, 1) && !structure::face_pattern(g, f, &star).unwrap_or(false) {
                bound_violations.push((i, "3 sent to a face that is not (5+,*,4)".to_string()));
            }
        }
    }
    let uncovered_faces: Vec<FaceId> = run.uncovered.iter().map(|u| u.face).collect();
    let triangle_totals_off = g
        .faces()
        .iter()
        .filter(|f| f.degree() == 3 && !uncovered_faces.contains(&f.id))
        .filter(|f| triangle_totals[f.id] != q(4, 1))
        .map(|f| (f.id, triangle_totals[f.id]))
        .collect();
    let replay_failures = run
        .ledger
        .iter()
        .enumerate()
        .filter(|(_, t)| !entry_consistent(g, t))
        .map(|(i, _)| i)
        .collect();
    let negatives = run.final_charge.negatives();
    let verdict = if configurations > 0 {
        Verdict::Consistent
    } else if negatives.is_empty() {
        Verdict::ProofGap("all final charges are nonnegative yet the total is -20".to_string())
    } else {
        Verdict::ProofGap("no reducible configuration in a class member".to_string())
    };
    AuditReport {
        conserved,
        bound_violations,
        replay_failures,
        triangle_totals_off,
        uncovered: run.uncovered.clone(),
        negatives,
        configurations,
        verdict,
    }
}

/// Runs the rules and audits them against [`crate::reducibility::find_all`].
pub fn audit(g: &PlaneGraph) -> Result<(Discharge, AuditReport), DischargeError> {
    let run = apply_rules(g)?;
    let configs = crate::reducibility::find_all(g).len();
    let report = audit_discharge(g, &run, configs);
    Ok((run, report))
}

fn ratio(c: Charge) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Ledger lines `R<id> <src> -> <dst> : p/q`, final charges, and the audit.
pub fn render(g: &PlaneGraph, run: &Discharge, report: &AuditReport) -> String {
    let mut out = String::new();
    for t in &run.ledger {
        let _ = writeln!(
            out,
            "{} v{} -> {} : {}",
            t.rule,
            g.label(t.source),
            t.sink.render(g),
            ratio(t.amount)
        );
    }
    for v in g.vertices() {
        let _ = writeln!(
            out,
            "final v{} = {}",
            g.label(v),
            ratio(run.final_charge.vertex[v])
        );
    }
    for f in 0..g.face_count() {
        let _ = writeln!(out, "final f{f} = {}", ratio(run.final_charge.face[f]));
    }
    for w in &run.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(out, "total = {}", ratio(run.final_charge.total()));
    let _ = writeln!(out, "conserved: {}", report.conserved);
    let _ = writeln!(out, "bound violations: {}", report.bound_violations.len());
    let _ = writeln!(out, "replay failures: {}", report.replay_failures.len());
    let _ = writeln!(out, "negative elements: {}", report.negatives.len());
    let _ = writeln!(out, "configurations: {}", report.configurations);
    match &report.verdict {
        Verdict::Consistent => out.push_str("verdict: consistent\n"),
        Verdict::ProofGap(why) => {
            let _ = writeln!(out, "verdict: PROOF_GAP ({why})");
        }
    }
    out
}
