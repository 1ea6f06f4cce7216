//! Symbolic counting: toric Kac polynomials, the g-loop recurrences, plethystic
//! M <-> A conversion, rank-one fibers, alpha -> infinity limits and Poincare series.

mod closed;
mod gloop;
mod limits;
mod toric;
mod zeta;

pub use limits::{
    expand_at_infinity, limit_a, limit_b, order_complex_hilbert, rank1_fiber_count, HILBERT_MAX_ARROWS,
    LIMIT_MAX_ARROWS,
};
pub use toric::{toric_kac_trees, toric_kac_chains};
pub use gloop::{
    a_to_m, gloop_kac_from_recurrence, gloop_rank2_recurrence, gloop_rank2_recurrence_with, gloop_rank2_states,
    gloop_rank3_recurrence, gloop_rank3_recurrence_with, m_to_a, Reading,
};
pub use closed::{
    cyclic3_limits, gloop_a2, gloop_a3, gloop_a3_with, gloop_fiber, gloop_fiber_limit, gloop_rank3_table, gloop_rank3_table_keys,
    gloop_z, kronecker_a, kronecker_fiber_limit, kronecker_z, CYCLIC3_LIMIT_A, CYCLIC3_LIMIT_B, GLOOP_A2, GLOOP_A3, GLOOP_A3_LITERAL,
    GLOOP_FIBER, GLOOP_Z, KRONECKER_FIBER_LIMIT, KRONECKER_Z,
};
pub use zeta::{
    gl_order, gloop_fiber_from_zeta, gloop_kac_from_zeta, kac_from_fibers, kronecker_fiber_from_zeta,
    kronecker_kac_from_zeta, poincare_from_zeta, poincare_from_zeta_at,
};
