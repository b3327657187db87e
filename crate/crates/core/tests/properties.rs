use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dchoose::coloring::{self, oracle::brute_force_feasible, ListAssignment};
use dchoose::corpus;
use dchoose::discharging;
use dchoose::generators::{cycle, path, prism, wheel};
use dchoose::reducibility;
use dchoose::structure;

fn members() -> Vec<dchoose::plane_graph::PlaneGraph> {
    corpus::class_members(&corpus::default_dir())
        .unwrap()
        .into_iter()
        .map(|c| c.graph)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursive_coloring_is_valid(idx in 0usize..20, seed in any::<u64>()) {
        let ms = members();
        let g = &ms[idx % ms.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = ListAssignment::random(g.vertex_count(), 3, 6, &mut rng);
        let run = reducibility::recursive_color(g, &lists).unwrap();
        prop_assert!(run.anomalies.is_empty());
        prop_assert!(coloring::check_total(g, Some(&lists), &run.coloring, 1).is_valid());
    }

    #[test]
    fn solve_agrees_with_brute_force(n in 3u32..8, kind in 0u8..4, seed in any::<u64>(), d in 0usize..2) {
        let g = match kind {
            0 => cycle(n),
            1 => path(n),
            2 => wheel(n.max(3)),
            _ => prism(n.clamp(3, 4)),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = ListAssignment::random(g.vertex_count(), 2, 4, &mut rng);
        let found = coloring::solve(&g, &lists, d);
        prop_assert_eq!(found.is_some(), brute_force_feasible(&g, &lists, d));
        if let Some(c) = found {
            prop_assert!(coloring::check_total(&g, Some(&lists), &c, d).is_valid());
        }
    }

    #[test]
    fn charge_is_conserved(n in 3u32..40) {
        for g in [cycle(n), wheel(n), prism(n)] {
            prop_assert_eq!(discharging::initial_charge(&g).total(), (-20).into());
            if structure::is_in_class(&g) {
                let run = discharging::apply_rules(&g).unwrap();
                prop_assert_eq!(run.final_charge.total(), (-20).into());
            }
        }
    }

    #[test]
    fn every_found_configuration_extends(idx in 0usize..20, pick in any::<usize>(), seed in any::<u64>()) {
        let ms = members();
        let g = &ms[idx % ms.len()];
        let all = reducibility::find_all(g);
        prop_assume!(!all.is_empty());
        let cfg = &all[pick % all.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = ListAssignment::random(g.vertex_count(), 3, 6, &mut rng);
        let mut reduced = vec![None; g.vertex_count()];
        for (h, map) in reducibility::reduce(g, cfg).unwrap() {
            let sub = coloring::solve(&h, &lists.restrict(&map), 1).unwrap();
            for (i, &v) in map.iter().enumerate() {
                reduced[v] = Some(sub[i]);
            }
        }
        let colors = reducibility::extend(g, cfg, &reduced, &lists).unwrap();
        prop_assert!(coloring::check_total(g, Some(&lists), &colors, 1).is_valid());
    }
}
