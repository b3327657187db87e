//! Independent check of the extension procedures on their templates.
//!
//! For every template, every list system up to color renaming and every
//! choice of the relevant outside colors is realized as a concrete list
//! assignment and reduced-graph coloring. Two routes are then compared:
//! an exhaustive search for any extension, and the constructive
//! [`extend`](super::extend) whose output is rechecked here. Templates with
//! more cases than the budget are checked on seeded random samples instead.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coloring::{self, for_each_canonical_system, Color, ListAssignment};
use crate::plane_graph::Vertex;

use super::templates::{templates_for, Dom, Node, Slot, Template};
use super::{extend, reduced_coloring_valid, Kind, ReducibilityError};

/// Value of a recolorable outside vertex: its color (`None` for a color
/// unrelated to everything), whether it already has a same-colored
/// neighbor, and the one other color it could move to, if any.
type ScratchValue = (Option<Color>, bool, Option<Option<Color>>);

#[derive(Debug, Clone)]
enum Value {
    Color(Option<Color>),
    Scratch(ScratchValue),
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    /// Templates with more cases than this are sampled.
    pub case_budget: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            case_budget: 20_000_000,
            samples: 200_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub template: String,
    pub kind: Kind,
    /// Cases examined, including filtered ones.
    pub cases: u64,
    /// Cases whose reduced coloring was not valid, so nothing is claimed.
    pub filtered: u64,
    /// Cases where the procedure reported a violated precondition.
    pub precondition: u64,
    /// Cases with no extension at all, or where the procedure failed.
    pub counterexamples: u64,
    pub sampled: bool,
    pub elapsed: Duration,
    pub first_failure: Option<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0 && self.precondition == 0
    }

    pub fn line(&self) -> String {
        format!(
            "{:<22} {:<4} {} cases={} filtered={} precondition={} counterexamples={} {:.2}s",
            self.template,
            self.kind.name(),
            if self.sampled {
                "sampled   "
            } else {
                "exhaustive"
            },
            self.cases,
            self.filtered,
            self.precondition,
            self.counterexamples,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Default, Clone)]
struct Tally {
    cases: u64,
    filtered: u64,
    precondition: u64,
    counterexamples: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.filtered += other.filtered;
        self.precondition += other.precondition;
        self.counterexamples += other.counterexamples;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }
}

fn list_sizes(t: &Template) -> Vec<usize> {
    t.slots
        .iter()
        .filter_map(|s| match s {
            Slot::Induced { size, .. } => Some(*size),
            Slot::Full { .. } => Some(3),
            _ => None,
        })
        .collect()
}

/// The list slot value of every vertex that has one.
fn lists_by_vertex(t: &Template, lists: &[Vec<Color>]) -> Vec<Option<Vec<Color>>> {
    let mut out = vec![None; t.graph.vertex_count()];
    for (slot, list) in t.slots.iter().filter(|s| s.is_list()).zip(lists) {
        let v = match slot {
            Slot::Induced { v, .. } | Slot::Full { v } => *v,
            _ => unreachable!(),
        };
        out[v] = Some(list.clone());
    }
    out
}

fn union_of(by_vertex: &[Option<Vec<Color>>], vs: &[Vertex]) -> Vec<Color> {
    let set: BTreeSet<Color> = vs
        .iter()
        .filter_map(|&v| by_vertex[v].as_ref())
        .flatten()
        .copied()
        .collect();
    set.into_iter().collect()
}

/// Every value each non-list slot can take, given the lists.
fn domains(t: &Template, lists: &[Vec<Color>]) -> Vec<Vec<Value>> {
    let by_vertex = lists_by_vertex(t, lists);
    t.slots
        .iter()
        .filter(|s| !s.is_list())
        .map(|slot| match slot {
            Slot::Color {
                dom: Dom::Own(v), ..
            } => by_vertex[*v]
                .as_ref()
                .expect("own list")
                .iter()
                .map(|&c| Value::Color(Some(c)))
                .collect(),
            Slot::Color {
                dom: Dom::Within(vs),
                ..
            } => union_of(&by_vertex, vs)
                .into_iter()
                .map(Some)
                .chain([None])
                .map(Value::Color)
                .collect(),
            Slot::Scratch {
                anchor, relevant, ..
            } => {
                let own: Vec<Option<Color>> = union_of(&by_vertex, &[*anchor])
                    .into_iter()
                    .map(Some)
                    .chain([None])
                    .collect();
                let alts: Vec<Option<Color>> = union_of(&by_vertex, relevant)
                    .into_iter()
                    .map(Some)
                    .chain([None])
                    .collect();
                let mut out = Vec::new();
                for &pi in &own {
                    out.push(Value::Scratch((pi, false, None)));
                    for &a in alts.iter().filter(|&&a| a.is_none() || a != pi) {
                        out.push(Value::Scratch((pi, false, Some(a))));
                        out.push(Value::Scratch((pi, true, Some(a))));
                    }
                }
                out
            }
            _ => unreachable!(),
        })
        .collect()
}

/// Builds the list assignment and the reduced coloring of one case, or
/// `None` when the values contradict each other.
fn realize(
    t: &Template,
    lists: &[Vec<Color>],
    values: &[Value],
) -> Option<(ListAssignment, Vec<Option<Color>>)> {
    let n = t.graph.vertex_count();
    let g = &t.graph;
    let mut fresh: Color = 1000;
    let mut next = || {
        fresh += 1;
        fresh
    };
    let by_vertex = lists_by_vertex(t, lists);
    let mut col: Vec<Option<Color>> = vec![None; n];
    let mut list: Vec<Vec<Color>> = vec![Vec::new(); n];
    let deleted = t.config.deleted_vertices();
    for v in 0..n {
        if matches!(t.nodes[v], Node::Full | Node::Colored) {
            list[v] = by_vertex[v].clone().expect("full list");
        }
    }
    let others = t.slots.iter().filter(|s| !s.is_list());
    for (slot, value) in others.zip(values) {
        match (slot, value) {
            (Slot::Color { v, .. }, Value::Color(c)) => col[*v] = Some(c.unwrap_or_else(&mut next)),
            (Slot::Scratch { x, .. }, Value::Scratch((pi, sat, alt))) => {
                let Node::Scratch { stubs } = t.nodes[*x] else {
                    unreachable!()
                };
                let pi = pi.unwrap_or_else(&mut next);
                let f = next();
                col[*x] = Some(pi);
                match alt {
                    Some(a) => {
                        let a = a.unwrap_or_else(&mut next);
                        list[*x] = vec![pi, a, f];
                        col[stubs[0]] = Some(if *sat { pi } else { next() });
                        col[stubs[1]] = Some(f);
                    }
                    None => {
                        let f2 = next();
                        list[*x] = vec![pi, f, f2];
                        col[stubs[0]] = Some(f);
                        col[stubs[1]] = Some(f2);
                    }
                }
            }
            _ => unreachable!(),
        }
    }
    for v in 0..n {
        let Node::Induced = t.nodes[v] else { continue };
        let induced = by_vertex[v].clone().expect("induced list");
        let mut l = induced.clone();
        for &z in g.rotation(v) {
            if deleted.contains(&z) {
                continue;
            }
            let c = match col[z] {
                Some(c) => c,
                None => {
                    let c = next();
                    col[z] = Some(c);
                    c
                }
            };
            if induced.contains(&c) {
                return None;
            }
            if !l.contains(&c) {
                l.push(c);
            }
        }
        if l.len() < 3 && !t.short_lists {
            return None;
        }
        list[v] = l;
    }
    for v in 0..n {
        if col[v].is_none() && !deleted.contains(&v) && !matches!(t.nodes[v], Node::Twin { .. }) {
            col[v] = Some(next());
        }
    }
    for v in 0..n {
        if let Node::Twin { of } = t.nodes[v] {
            let c = col[of].expect("parent colored");
            let same = g
                .rotation(of)
                .iter()
                .filter(|&&u| u != v && col[u] == Some(c))
                .count();
            col[v] = Some(if same == 0 { c } else { next() });
        }
    }
    for v in 0..n {
        if list[v].is_empty() {
            let c = col[v].expect("outside vertex colored");
            list[v] = vec![c, next(), next()];
        }
    }
    Some((ListAssignment::new(list), col))
}

fn run_case(t: &Template, lists: &[Vec<Color>], values: &[Value], tally: &mut Tally) {
    tally.cases += 1;
    let Some((la, pi)) = realize(t, lists, values) else {
        tally.filtered += 1;
        return;
    };
    let g = &t.graph;
    if !reduced_coloring_valid(g, &t.config, &pi, &la) {
        tally.filtered += 1;
        return;
    }
    let mut fail = |what: &str| {
        tally.counterexamples += 1;
        if tally.first_failure.is_none() {
            tally.first_failure = Some(format!("{what}; lists {:?} values {values:?}", la.lists()));
        }
    };
    let free = t.config.recolorable(g);
    if coloring::solve_extending(g, &la, 1, &pi, &free).is_none() {
        fail("no extension exists");
        return;
    }
    match extend(g, &t.config, &pi, &la) {
        Ok(colors) => {
            if !coloring::check_total(g, Some(&la), &colors, 1).is_valid() {
                fail("extension returned an invalid coloring");
            }
        }
        Err(ReducibilityError::PreconditionViolation { detail, .. }) => {
            tally.precondition += 1;
            if tally.first_failure.is_none() {
                tally.first_failure =
                    Some(format!("precondition: {detail}; lists {:?}", la.lists()));
            }
        }
        Err(e) => fail(&e.to_string()),
    }
}

fn for_each_value(domains: &[Vec<Value>], cur: &mut Vec<Value>, f: &mut dyn FnMut(&[Value])) {
    match domains.split_first() {
        None => f(cur),
        Some((first, rest)) => {
            for v in first {
                cur.push(v.clone());
                for_each_value(rest, cur, f);
                cur.pop();
            }
        }
    }
}

/// Number of cases the exhaustive check of `t` would examine.
pub fn case_count(t: &Template) -> u64 {
    let mut total = 0u64;
    for_each_canonical_system(&list_sizes(t), |lists| {
        let per: u64 = domains(t, lists).iter().map(|d| d.len() as u64).product();
        total += per;
        true
    });
    total
}

fn exhaustive(t: &Template) -> Tally {
    let sizes = list_sizes(t);
    let mut total = Tally::default();
    let mut batch: Vec<Vec<Vec<Color>>> = Vec::new();
    let flush = |batch: &mut Vec<Vec<Vec<Color>>>, total: &mut Tally| {
        let part = batch
            .par_iter()
            .map(|lists| {
                let mut tally = Tally::default();
                let doms = domains(t, lists);
                for_each_value(&doms, &mut Vec::new(), &mut |vals| {
                    run_case(t, lists, vals, &mut tally)
                });
                tally
            })
            .reduce(Tally::default, Tally::merge);
        *total = std::mem::take(total).merge(part);
        batch.clear();
    };
    for_each_canonical_system(&sizes, |lists| {
        batch.push(lists.to_vec());
        if batch.len() >= 256 {
            flush(&mut batch, &mut total);
        }
        true
    });
    flush(&mut batch, &mut total);
    total
}

/// Random lists over a small palette so that colors collide often. Induced
/// lists may exceed their minimum size.
fn sampled(t: &Template, samples: u64, seed: u64) -> Tally {
    const PALETTE: u32 = 7;
    let slots: Vec<&Slot> = t.slots.iter().filter(|s| s.is_list()).collect();
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i.wrapping_mul(0x9e37_79b9_7f4a_7c15)));
            let palette: Vec<Color> = (1..=PALETTE).collect();
            let lists: Vec<Vec<Color>> = slots
                .iter()
                .map(|s| {
                    let k = match s {
                        Slot::Induced { size, .. } => rng.gen_range(*size..=3),
                        _ => 3,
                    };
                    let mut l: Vec<Color> = palette.choose_multiple(&mut rng, k).copied().collect();
                    l.sort_unstable();
                    l
                })
                .collect();
            let values: Vec<Value> = domains(t, &lists)
                .iter()
                .map(|d| d.choose(&mut rng).expect("nonempty domain").clone())
                .collect();
            let mut tally = Tally::default();
            run_case(t, &lists, &values, &mut tally);
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

fn name_seed(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    })
}

pub fn verify_template(t: &Template, opts: &OracleOptions) -> OracleReport {
    let start = Instant::now();
    let sampled_mode = case_count(t) > opts.case_budget;
    let tally = if sampled_mode {
        sampled(t, opts.samples, opts.seed ^ name_seed(&t.name))
    } else {
        exhaustive(t)
    };
    OracleReport {
        template: t.name.clone(),
        kind: t.kind,
        cases: tally.cases,
        filtered: tally.filtered,
        precondition: tally.precondition,
        counterexamples: tally.counterexamples,
        sampled: sampled_mode,
        elapsed: start.elapsed(),
        first_failure: tally.first_failure,
    }
}

pub fn verify_kind(kind: Kind, opts: &OracleOptions) -> Vec<OracleReport> {
    templates_for(kind)
        .iter()
        .map(|t| verify_template(t, opts))
        .collect()
}

pub fn verify_all(opts: &OracleOptions) -> Vec<OracleReport> {
    Kind::ALL
        .iter()
        .flat_map(|&k| verify_kind(k, opts))
        .collect()
}
