//! q-shifted factorials and basic hypergeometric series.
//!
//! `r phi s` follows the convention in which every term carries the factor
//! `[(-1)^j q^{binom(j,2)}]^{1+s-r}`:
//!
//! ```text
//! sum_j (a_1;q)_j..(a_r;q)_j / ((q;q)_j (b_1;q)_j..(b_s;q)_j) [(-1)^j q^{binom(j,2)}]^{1+s-r} x^j
//! ```

mod phi;
mod pochhammer;

pub use phi::{
    phi_eval, phi_formal, phi_partial_sum, phi_terminating, phi_terminating_scaled, PhiOpts,
    PhiSpec, PhiSum, ScaledPair,
};
pub use pochhammer::{q_pochhammer, q_pochhammer_inf, q_pochhammer_ratio_inf, q_pochhammer_recip};
