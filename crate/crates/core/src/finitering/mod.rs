//! Finite fields, the local rings O_alpha = F_q[t]/(t^alpha), matrices over them,
//! Smith normal form and the groups GL_r(O_alpha).

mod field;
pub mod fqlinalg;
mod gl;
mod local;
mod matrix;

pub use field::Fq;
pub use fqlinalg::FqMatrix;
pub use gl::{gl_enumerate, gl_order, gl_order_rank};
pub use local::{OElem, ORing, MAX_ALPHA};
pub use matrix::{kernel_size, smith_invariants, smith_normal_form, solve_linear, LinearSolution, OMatrix, SmithInvariants};
