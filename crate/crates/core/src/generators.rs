//! Small families of plane graphs with explicit embeddings.

use crate::plane_graph::{Label, PlaneGraph, RotationTable};

fn build(table: RotationTable) -> PlaneGraph {
    PlaneGraph::build_from_rotation(&table).expect("generator produces a plane graph")
}

fn next(i: Label, n: Label) -> Label {
    i % n + 1
}

fn prev(i: Label, n: Label) -> Label {
    (i + n - 2) % n + 1
}

/// The cycle `C_n` on labels `1..=n`. Requires `n >= 3`.
pub fn cycle(n: u32) -> PlaneGraph {
    assert!(n >= 3, "cycle needs at least three vertices");
    build((1..=n).map(|i| (i, vec![next(i, n), prev(i, n)])).collect())
}

/// The path `P_n` on labels `1..=n`.
pub fn path(n: u32) -> PlaneGraph {
    assert!(n >= 1);
    build(
        (1..=n)
            .map(|i| {
                let mut row = Vec::new();
                if i > 1 {
                    row.push(i - 1);
                }
                if i < n {
                    row.push(i + 1);
                }
                (i, row)
            })
            .collect(),
    )
}

/// The wheel with rim `1..=n` and hub `n + 1`. `wheel(3)` is `K_4`.
pub fn wheel(n: u32) -> PlaneGraph {
    assert!(n >= 3);
    let hub = n + 1;
    let mut table: RotationTable = (1..=n)
        .map(|i| (i, vec![next(i, n), prev(i, n), hub]))
        .collect();
    table.insert(hub, (1..=n).rev().collect());
    build(table)
}

/// The prism `C_n x K_2`: outer cycle `1..=n`, inner cycle `n+1..=2n`,
/// spokes `i -- n + i`. `prism(4)` is the cube.
pub fn prism(n: u32) -> PlaneGraph {
    assert!(n >= 3);
    let mut table = RotationTable::new();
    for i in 1..=n {
        table.insert(i, vec![next(i, n), prev(i, n), n + i]);
        table.insert(n + i, vec![n + next(i, n), i, n + prev(i, n)]);
    }
    build(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let w = wheel(6);
        assert_eq!(
            (w.vertex_count(), w.edge_count(), w.face_count()),
            (7, 12, 7)
        );
        let p = prism(5);
        assert_eq!(
            (p.vertex_count(), p.edge_count(), p.face_count()),
            (10, 15, 7)
        );
        let mut degs: Vec<_> = p.faces().iter().map(|f| f.degree()).collect();
        degs.sort();
        assert_eq!(degs, vec![4, 4, 4, 4, 4, 5, 5]);
        let pa = path(4);
        assert_eq!((pa.face_count(), pa.face_degree(0)), (1, 6));
    }
}
