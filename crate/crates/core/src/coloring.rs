//! Defective list coloring.
//!
//! An `(L, d)*`-coloring picks `π(v) ∈ L(v)` for every vertex so that no
//! vertex has more than `d` neighbors of its own color.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::plane_graph::{PlaneGraph, Vertex};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring leaves vertex {0} uncolored")]
    PartialColoring(Vertex),
    #[error("enumeration needs {needed} list assignments, budget is {budget}")]
    TooLarge { needed: u128, budget: u128 },
    #[error("k must be at least 1")]
    ZeroListSize,
}

/// Per-vertex color lists, indexed by internal vertex. Lists are kept
/// sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<Color>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// `{1, ..., k}` at each of `n` vertices.
    pub fn uniform(n: usize, k: u32) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    /// Independent uniformly random `k`-subsets of `{1, ..., universe}`.
    pub fn random<R: Rng + ?Sized>(n: usize, k: usize, universe: u32, rng: &mut R) -> Self {
        let pool: Vec<Color> = (1..=universe).collect();
        let lists = (0..n)
            .map(|_| pool.choose_multiple(rng, k).copied().collect())
            .collect();
        ListAssignment::new(lists)
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn contains(&self, v: Vertex, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Keeps the first `k` colors of every list.
    pub fn truncated(&self, k: usize) -> Self {
        ListAssignment {
            lists: self
                .lists
                .iter()
                .map(|l| l[..l.len().min(k)].to_vec())
                .collect(),
        }
    }

    /// Restriction to the vertices in `map` (new index `i` is old `map[i]`).
    pub fn restrict(&self, map: &[Vertex]) -> Self {
        ListAssignment {
            lists: map.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    /// Applies a color renaming to every list.
    pub fn renamed(&self, rename: impl Fn(Color) -> Color) -> Self {
        ListAssignment::new(
            self.lists
                .iter()
                .map(|l| l.iter().map(|&c| rename(c)).collect())
                .collect(),
        )
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `π(v)` is not in `L(v)`.
    NotInList { vertex: Vertex, color: Color },
    /// `v` has `same` neighbors of its own color, more than allowed.
    Defect { vertex: Vertex, same: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Number of neighbors of `v` colored like `v`.
pub fn same_colored_neighbors(g: &PlaneGraph, colors: &[Option<Color>], v: Vertex) -> usize {
    match colors[v] {
        None => 0,
        Some(c) => g
            .rotation(v)
            .iter()
            .filter(|&&u| colors[u] == Some(c))
            .count(),
    }
}

/// Checks a total coloring against optional lists and defect `d`.
pub fn check(
    g: &PlaneGraph,
    lists: Option<&ListAssignment>,
    colors: &[Option<Color>],
    d: usize,
) -> Result<CheckReport, ColoringError> {
    if let Some(v) = g.vertices().find(|&v| colors[v].is_none()) {
        return Err(ColoringError::PartialColoring(v));
    }
    Ok(check_partial(g, lists, colors, d))
}

/// Like [`check`], but uncolored vertices are skipped.
pub fn check_partial(
    g: &PlaneGraph,
    lists: Option<&ListAssignment>,
    colors: &[Option<Color>],
    d: usize,
) -> CheckReport {
    let mut violations = Vec::new();
    for v in g.vertices() {
        let Some(c) = colors[v] else { continue };
        if let Some(l) = lists {
            if !l.contains(v, c) {
                violations.push(Violation::NotInList {
                    vertex: v,
                    color: c,
                });
            }
        }
        let same = same_colored_neighbors(g, colors, v);
        if same > d {
            violations.push(Violation::Defect { vertex: v, same });
        }
    }
    CheckReport { violations }
}

pub fn check_total(
    g: &PlaneGraph,
    lists: Option<&ListAssignment>,
    colors: &[Color],
    d: usize,
) -> CheckReport {
    let wrapped: Vec<Option<Color>> = colors.iter().copied().map(Some).collect();
    check_partial(g, lists, &wrapped, d)
}

/// Finds an `(L, d)*`-coloring or proves none exists.
///
/// Vertices are tried by decreasing degree then index, colors in
/// increasing order, so the answer is deterministic.
pub fn solve(g: &PlaneGraph, lists: &ListAssignment, d: usize) -> Option<Vec<Color>> {
    let n = g.vertex_count();
    solve_extending(g, lists, d, &vec![None; n], &vec![true; n])
}

/// Searches colorings of the vertices flagged `free`, keeping every other
/// vertex at its color in `fixed`. Free vertices draw from their lists;
/// fixed ones are not checked against lists.
pub fn solve_extending(
    g: &PlaneGraph,
    lists: &ListAssignment,
    d: usize,
    fixed: &[Option<Color>],
    free: &[bool],
) -> Option<Vec<Color>> {
    let n = g.vertex_count();
    let mut colors: Vec<Option<Color>> = (0..n)
        .map(|v| if free[v] { None } else { fixed[v] })
        .collect();
    if (0..n).any(|v| !free[v] && colors[v].is_none()) {
        return None;
    }
    let mut same: Vec<usize> = (0..n)
        .map(|v| same_colored_neighbors(g, &colors, v))
        .collect();
    if same.iter().any(|&s| s > d) {
        return None;
    }
    let mut order: Vec<Vertex> = (0..n).filter(|&v| free[v]).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    fn search(
        g: &PlaneGraph,
        lists: &ListAssignment,
        d: usize,
        order: &[Vertex],
        colors: &mut Vec<Option<Color>>,
        same: &mut Vec<usize>,
    ) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return true;
        };
        for &c in lists.get(v) {
            let hits: Vec<Vertex> = g
                .rotation(v)
                .iter()
                .copied()
                .filter(|&u| colors[u] == Some(c))
                .collect();
            if hits.len() > d || hits.iter().any(|&u| same[u] + 1 > d) {
                continue;
            }
            colors[v] = Some(c);
            same[v] = hits.len();
            for &u in &hits {
                same[u] += 1;
            }
            if search(g, lists, d, rest, colors, same) {
                return true;
            }
            for &u in &hits {
                same[u] -= 1;
            }
            same[v] = 0;
            colors[v] = None;
        }
        false
    }

    if search(g, lists, d, &order, &mut colors, &mut same) {
        Some(
            colors
                .into_iter()
                .map(|c| c.expect("all colored"))
                .collect(),
        )
    } else {
        None
    }
}

/// `L_π(v) = L(v) \ {π(u) : u ∈ N(v) \ S}` for every `v ∈ S`.
///
/// Empty results are kept; callers reason about list sizes.
pub fn induced_assignment(
    g: &PlaneGraph,
    set: &[Vertex],
    colors: &[Option<Color>],
    lists: &ListAssignment,
) -> BTreeMap<Vertex, Vec<Color>> {
    let mut in_set = vec![false; g.vertex_count()];
    for &v in set {
        in_set[v] = true;
    }
    set.iter()
        .map(|&v| {
            let blocked: Vec<Color> = g
                .rotation(v)
                .iter()
                .filter(|&&u| !in_set[u])
                .filter_map(|&u| colors[u])
                .collect();
            let remaining = lists
                .get(v)
                .iter()
                .copied()
                .filter(|c| !blocked.contains(c))
                .collect();
            (v, remaining)
        })
        .collect()
}

/// Result of an exhaustive choosability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choosability {
    pub choosable: bool,
    /// First list assignment (in enumeration order) with no coloring.
    pub witness: Option<ListAssignment>,
    pub assignments_checked: u64,
}

/// Number of canonical list systems [`is_choosable`] visits.
pub fn canonical_system_count(sizes: &[usize]) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    fn go(sizes: &[usize], used: usize, memo: &mut BTreeMap<(usize, usize), u128>) -> u128 {
        let Some((&k, rest)) = sizes.split_first() else {
            return 1;
        };
        if let Some(&m) = memo.get(&(rest.len(), used)) {
            return m;
        }
        let total = (0..=k.min(used))
            .map(|old| binom(used, old) * go(rest, used + k - old, memo))
            .sum();
        memo.insert((rest.len(), used), total);
        total
    }
    // memo keys assume equal sizes; recompute per distinct suffix otherwise
    if sizes.windows(2).all(|w| w[0] == w[1]) {
        go(sizes, 0, &mut BTreeMap::new())
    } else {
        fn plain(sizes: &[usize], used: usize) -> u128 {
            let Some((&k, rest)) = sizes.split_first() else {
                return 1;
            };
            (0..=k.min(used))
                .map(|old| binom(used, old) * plain(rest, used + k - old))
                .sum()
        }
        plain(sizes, 0)
    }
}

/// Visits every list system with the given list sizes up to renaming of
/// colors: each list takes some already-used colors plus the smallest
/// unused ones. Stops early when `visit` returns `false`.
pub fn for_each_canonical_system(sizes: &[usize], mut visit: impl FnMut(&[Vec<Color>]) -> bool) {
    fn subsets(used: u32, k: usize, start: u32, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..=used {
            cur.push(c);
            subsets(used, k, c + 1, cur, out);
            cur.pop();
        }
    }
    fn go(
        sizes: &[usize],
        used: u32,
        acc: &mut Vec<Vec<Color>>,
        visit: &mut dyn FnMut(&[Vec<Color>]) -> bool,
    ) -> bool {
        let i = acc.len();
        if i == sizes.len() {
            return visit(acc);
        }
        let k = sizes[i];
        for old in 0..=k.min(used as usize) {
            let mut picks = Vec::new();
            subsets(used, old, 1, &mut Vec::new(), &mut picks);
            let fresh = (k - old) as u32;
            for mut list in picks {
                list.extend(used + 1..=used + fresh);
                acc.push(list);
                let keep_going = go(sizes, used + fresh, acc, visit);
                acc.pop();
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
    go(sizes, 0, &mut Vec::new(), &mut visit);
}

pub const DEFAULT_CHOOSABILITY_BUDGET: u128 = 20_000_000;

/// Decides `(k, d)*`-choosability by trying every list assignment with
/// lists of size exactly `k` over `{1, ..., k·|V|}`, up to renaming.
pub fn is_choosable(
    g: &PlaneGraph,
    k: usize,
    d: usize,
    budget: u128,
) -> Result<Choosability, ColoringError> {
    if k == 0 {
        return Err(ColoringError::ZeroListSize);
    }
    let sizes = vec![k; g.vertex_count()];
    let needed = canonical_system_count(&sizes);
    if needed > budget {
        return Err(ColoringError::TooLarge { needed, budget });
    }
    let mut checked = 0u64;
    let mut witness = None;
    for_each_canonical_system(&sizes, |lists| {
        checked += 1;
        let l = ListAssignment::new(lists.to_vec());
        if solve(g, &l, d).is_none() {
            witness = Some(l);
            return false;
        }
        true
    });
    Ok(Choosability {
        choosable: witness.is_none(),
        witness,
        assignments_checked: checked,
    })
}

/// Reference implementations used to cross-check the solver.
pub mod oracle {
    use super::*;

    /// Tries every element of the product of the lists.
    pub fn brute_force_feasible(g: &PlaneGraph, lists: &ListAssignment, d: usize) -> bool {
        let n = g.vertex_count();
        let mut idx = vec![0usize; n];
        if (0..n).any(|v| lists.get(v).is_empty()) {
            return false;
        }
        loop {
            let colors: Vec<Color> = (0..n).map(|v| lists.get(v)[idx[v]]).collect();
            let ok = g.vertices().all(|v| {
                g.rotation(v)
                    .iter()
                    .filter(|&&u| colors[u] == colors[v])
                    .count()
                    <= d
            });
            if ok {
                return true;
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    return false;
                }
                idx[pos] += 1;
                if idx[pos] < lists.get(pos).len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn some(cs: &[Color]) -> Vec<Option<Color>> {
        cs.iter().copied().map(Some).collect()
    }

    #[test]
    fn path_with_one_color_violates_at_middle() {
        let p3 = generators::path(3);
        let report = check(&p3, None, &some(&[1, 1, 1]), 1).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::Defect { vertex: 1, same: 2 }]
        );
    }

    #[test]
    fn k4_with_one_repeated_color_is_1_defective() {
        let k4 = generators::wheel(3);
        assert!(check(&k4, None, &some(&[1, 1, 2, 3]), 1)
            .unwrap()
            .is_valid());
        assert!(!check(&k4, None, &some(&[1, 1, 2, 3]), 0)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn proper_coloring_passes_with_zero_defect() {
        let c4 = generators::cycle(4);
        assert!(check(&c4, None, &some(&[1, 2, 1, 2]), 0)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn partial_coloring_is_rejected() {
        let c4 = generators::cycle(4);
        assert_eq!(
            check(&c4, None, &[Some(1), None, Some(1), Some(2)], 1),
            Err(ColoringError::PartialColoring(1))
        );
    }

    #[test]
    fn list_membership_is_checked() {
        let k2 = generators::path(2);
        let l = ListAssignment::new(vec![vec![1], vec![2]]);
        let r = check(&k2, Some(&l), &some(&[1, 1]), 1).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation::NotInList {
                vertex: 1,
                color: 1
            }]
        );
    }

    #[test]
    fn solver_examples() {
        let c4 = generators::cycle(4);
        assert_eq!(solve(&c4, &ListAssignment::uniform(4, 1), 1), None);
        let k4 = generators::wheel(3);
        let col = solve(&k4, &ListAssignment::uniform(4, 3), 1).unwrap();
        assert!(check_total(&k4, Some(&ListAssignment::uniform(4, 3)), &col, 1).is_valid());
        let single = crate::format::parse_graph("1:\n").unwrap();
        assert_eq!(
            solve(&single, &ListAssignment::new(vec![vec![7]]), 0),
            Some(vec![7])
        );
    }

    #[test]
    fn solve_extending_respects_fixed_colors() {
        let p3 = generators::path(3);
        let l = ListAssignment::uniform(3, 2);
        let fixed = vec![Some(1), None, Some(1)];
        let got = solve_extending(&p3, &l, 0, &fixed, &[false, true, false]).unwrap();
        assert_eq!(got, vec![1, 2, 1]);
        assert_eq!(
            solve_extending(
                &p3,
                &ListAssignment::uniform(3, 1),
                0,
                &fixed,
                &[false, true, false]
            ),
            None
        );
    }

    #[test]
    fn choosability_examples() {
        let k2 = generators::path(2);
        let r = is_choosable(&k2, 1, 1, DEFAULT_CHOOSABILITY_BUDGET).unwrap();
        assert!(r.choosable);
        let r = is_choosable(&k2, 1, 0, DEFAULT_CHOOSABILITY_BUDGET).unwrap();
        assert!(!r.choosable);
        assert_eq!(r.witness, Some(ListAssignment::new(vec![vec![1], vec![1]])));
        assert!(matches!(
            is_choosable(&generators::prism(6), 3, 1, 1000),
            Err(ColoringError::TooLarge { .. })
        ));
        assert_eq!(
            is_choosable(&k2, 0, 1, 10),
            Err(ColoringError::ZeroListSize)
        );
    }

    #[test]
    fn canonical_enumeration_matches_count() {
        for sizes in [vec![2, 2, 2], vec![3, 1, 2], vec![1, 1, 1, 1]] {
            let mut seen = 0u128;
            for_each_canonical_system(&sizes, |_| {
                seen += 1;
                true
            });
            assert_eq!(seen, canonical_system_count(&sizes));
        }
        // set partitions of four singletons: Bell(4)
        assert_eq!(canonical_system_count(&[1, 1, 1, 1]), 15);
    }

    #[test]
    fn induced_assignment_examples() {
        // v = 1 with outside neighbors 2, 3, 4 on a star
        let star = crate::format::parse_graph("1: 2 3 4\n2: 1\n3: 1\n4: 1\n").unwrap();
        let l = ListAssignment::uniform(4, 3);
        let colors = vec![None, Some(1), Some(2), Some(3)];
        assert_eq!(
            induced_assignment(&star, &[0], &colors, &l)[&0],
            Vec::<Color>::new()
        );
        let colors = vec![None, Some(1), None, None];
        assert_eq!(
            induced_assignment(&star, &[0, 2, 3], &colors, &l)[&0],
            vec![2, 3]
        );
        assert_eq!(
            induced_assignment(&star, &[0, 1, 2, 3], &colors, &l)[&0],
            vec![1, 2, 3]
        );
    }
}
