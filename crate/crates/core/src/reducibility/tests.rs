use super::*;
use crate::coloring::{check_total, solve};
use crate::format::parse_graph;
use crate::generators::{cycle, path, prism};
use crate::plane_graph::PlaneGraph;

fn corpus(name: &str) -> PlaneGraph {
    let path = format!("{}/corpus/{name}.rot", env!("CARGO_MANIFEST_DIR"));
    crate::format::read_graph(std::path::Path::new(&path)).expect("corpus graph")
}

#[test]
fn low_degree_vertex_takes_the_missing_color() {
    let g = path(3);
    let cfg = find_kind(&g, Kind::A1)
        .into_iter()
        .find(|c| c.roles == vec![1])
        .expect("middle vertex is an A1");
    let lists = ListAssignment::new(vec![vec![1, 2, 3], vec![1, 2, 3], vec![1, 2, 3]]);
    let reduced = vec![Some(1), None, Some(2)];
    let colors = extend(&g, &cfg, &reduced, &lists).unwrap();
    assert_eq!(colors, vec![1, 3, 2]);
}

#[test]
fn reduce_then_extend_colors_the_dodecahedron() {
    let g = corpus("dodecahedron");
    let cfg = find_kind(&g, Kind::A2).into_iter().next().expect("A2");
    let lists = ListAssignment::new(vec![vec![1, 2, 3]; g.vertex_count()]);
    let mut reduced = vec![None; g.vertex_count()];
    for (h, map) in reduce(&g, &cfg).unwrap() {
        let sub = solve(&h, &lists.restrict(&map), 1).expect("reduced graph colorable");
        for (i, &v) in map.iter().enumerate() {
            reduced[v] = Some(sub[i]);
        }
    }
    let colors = extend(&g, &cfg, &reduced, &lists).unwrap();
    assert!(check_total(&g, Some(&lists), &colors, 1).is_valid());
}

#[test]
fn known_graphs_contain_expected_configurations() {
    assert!(!find_kind(&corpus("dodecahedron"), Kind::A2).is_empty());
    assert!(!find_kind(&corpus("octahedron"), Kind::B2).is_empty());
    assert!(!find_kind(&cycle(5), Kind::A1).is_empty());
}

#[test]
fn every_found_configuration_verifies_and_reduces() {
    for name in [
        "dodecahedron",
        "octahedron",
        "cube",
        "truncated_tetrahedron",
        "k4_subdivided",
    ] {
        let g = corpus(name);
        for cfg in find_all(&g) {
            assert!(verify_witness(&g, &cfg), "{name}: {}", cfg.render(&g));
            let parts = reduce(&g, &cfg).unwrap();
            let kept: usize = parts.iter().map(|(_, m)| m.len()).sum();
            assert_eq!(kept, g.vertex_count() - cfg.deleted_vertices().len());
        }
    }
}

#[test]
fn stale_witness_is_rejected() {
    let g = cycle(5);
    let mut cfg = find_kind(&g, Kind::A1).remove(0);
    cfg.roles = vec![(cfg.roles[0] + 1) % 5];
    let lists = ListAssignment::new(vec![vec![1, 2, 3]; 5]);
    let reduced = vec![Some(1); 5];
    assert_eq!(
        extend(&g, &cfg, &reduced, &lists),
        Err(ReducibilityError::WitnessStale(Kind::A1))
    );
}

#[test]
fn invalid_reduced_coloring_is_a_precondition_violation() {
    let g = path(4);
    let cfg = find_kind(&g, Kind::A1)
        .into_iter()
        .find(|c| c.roles == vec![1])
        .unwrap();
    let lists = ListAssignment::new(vec![vec![1, 2, 3]; 4]);
    // Vertex 0 uses a color outside its list.
    let reduced = vec![Some(9), None, Some(1), Some(2)];
    assert!(matches!(
        extend(&g, &cfg, &reduced, &lists),
        Err(ReducibilityError::PreconditionViolation { .. })
    ));
}

#[test]
fn recursive_coloring_of_small_members() {
    for g in [
        corpus("dodecahedron"),
        corpus("c3"),
        corpus("cube"),
        prism(7),
    ] {
        if !structure::is_in_class(&g) {
            continue;
        }
        let lists = ListAssignment::new(vec![vec![4, 5, 6]; g.vertex_count()]);
        let run = recursive_color(&g, &lists).unwrap();
        assert!(run.anomalies.is_empty());
        assert!(check_total(&g, Some(&lists), &run.coloring, 1).is_valid());
    }
}

#[test]
fn recursive_coloring_rejects_short_lists_and_non_members() {
    let g = cycle(5);
    let mut lists = vec![vec![1, 2, 3]; 5];
    lists[2] = vec![1, 2];
    assert_eq!(
        recursive_color(&g, &ListAssignment::new(lists)).unwrap_err(),
        ReducibilityError::ListTooSmall { vertex: 2, size: 2 }
    );
    let k4 = corpus("k4");
    let lists = ListAssignment::new(vec![vec![1, 2, 3]; 4]);
    assert!(matches!(
        recursive_color(&k4, &lists),
        Err(ReducibilityError::NotInClass(_))
    ));
}

#[test]
fn every_template_matches_its_detector() {
    for &k in Kind::ALL.iter() {
        let ts = templates_for(k);
        assert!(!ts.is_empty());
        for t in ts {
            assert_eq!(t.config.kind, k);
            assert!(verify_witness(&t.graph, &t.config), "{}", t.name);
            assert!(find_kind(&t.graph, k).contains(&t.config), "{}", t.name);
        }
    }
}

#[test]
fn small_templates_pass_the_oracle() {
    let opts = oracle::OracleOptions {
        case_budget: 50_000,
        samples: 2_000,
        seed: 7,
    };
    for &k in &[
        Kind::A1,
        Kind::A2,
        Kind::A3,
        Kind::B1,
        Kind::F1,
        Kind::C1,
        Kind::Soft,
    ] {
        for r in oracle::verify_kind(k, &opts) {
            assert!(r.passed(), "{}: {:?}", r.line(), r.first_failure);
            assert!(r.cases > 0);
        }
    }
}

#[test]
fn oracle_detects_a_weakened_hypothesis() {
    let t = templates::weakened_a3();
    let r = oracle::verify_template(&t, &oracle::OracleOptions::default());
    assert!(!r.sampled);
    assert!(r.counterexamples + r.precondition > 0, "{}", r.line());
}

#[test]
fn parsed_triangle_is_colored_directly() {
    let g = parse_graph("1: 2 3\n2: 3 1\n3: 1 2\n").unwrap();
    let lists = ListAssignment::new(vec![vec![1, 1, 1]; 3]);
    assert!(solve(&g, &lists, 1).is_none());
}
