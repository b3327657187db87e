//! Defective list coloring of plane graphs.
//!
//! The crate covers plane graphs given by rotation systems, the structural
//! quantities used to locate reducible configurations, exact coloring and
//! choosability solvers, constructive reductions with verified extension
//! procedures, and an exact audit of a charge-redistribution argument.

pub mod coloring;
pub mod corpus;
pub mod discharging;
pub mod format;
pub mod generators;
pub mod plane_graph;
pub mod reducibility;
pub mod structure;

/// Guide chapters, compiled as doc-tests so the book stays in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    struct Overview;
    #[doc = include_str!("../../../book/src/plane_graphs.md")]
    struct PlaneGraphs;
    #[doc = include_str!("../../../book/src/structure.md")]
    struct Structure;
    #[doc = include_str!("../../../book/src/coloring.md")]
    struct Coloring;
    #[doc = include_str!("../../../book/src/reducibility.md")]
    struct Reducibility;
    #[doc = include_str!("../../../book/src/discharging.md")]
    struct Discharging;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
