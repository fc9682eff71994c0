//! Constructive analysis on `D^n`: dominated extension of functionals,
//! separation of disjoint convex sets, hyperplanes through gauges, and
//! bounds for linear operators.

mod extension;
mod hyperplane;
mod operators;
mod separation;

pub use extension::{extend_dominated, is_dominated};
pub use hyperplane::{
    gauge_sandwich_holds, hyperplane_gauge_bound, hyperplane_normalize, integer_grid, sample_grid,
    variety_extend_hyperplane, DHyperplane, GAUGE_GRID_POINTS,
};
pub use operators::{
    inverse_map, map_from_graph, omt_delta, omt_preimage, ubp_bound, InverseMap, MapFamily,
    OpenMapBound, UbpBound, SIGMA_TOL, UNBOUNDED_DELTA,
};
pub use separation::{
    lp_separation_oracle, oracle_agrees, separate_bicomplex, separate_hyperbolic,
    BicomplexSeparation, ComponentSeparator, SeparationCertificate, SeparationTrace, Side,
    VertexCheck,
};
