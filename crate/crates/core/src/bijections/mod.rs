//! Hurwitz moves and the bijections built from them: the order-changing maps
//! `Λ_j` and `Λ^≺` on monotone factorisations, the conjugation maps `Δ` and
//! `Θ`, and `Γ` from transitive star factorisations to monotone double
//! Hurwitz factorisations. Every map can report the moves it made.

mod centrality;
mod gamma;
mod lambda;
mod moves;

pub use centrality::{centrality_witness, delta, delta_traced, find_conjugator, theta, theta_traced};
pub use gamma::{gamma, gamma_inverse, gamma_inverse_traced, gamma_traced, reroot, reroot_traced};
pub use lambda::{
    lambda_j, lambda_j_inverse, lambda_j_inverse_traced, lambda_j_traced, lambda_order, lambda_order_inverse,
    lambda_order_traced,
};
pub use moves::{lhm, rhm, HurwitzMoveTrace, MoveKind, TraceStep};
