//! Transfer rules and the per-family approximation terms.

pub mod basic;
pub mod colored3;
pub mod concave;
pub mod estimate;
pub mod nsp;
pub mod plane;
pub mod prings;
pub mod transfer;

pub use basic::basic_phi;
pub use colored3::{colored3_phi, colored3_phi_variant, Colored3Variant};
pub use concave::{concave_a, concave_growth_constant, concave_q};
pub use estimate::{
    default_digits, estimate, petersson_check, petersson_residual_exact, EstimateConfig,
    PhiBreakdown,
};
pub use nsp::{nsp_phi1, nsp_phi1_flipped_exponent, nsp_phi2, nsp_phi_k, nsp_phi_k_parts, nsp_xi};
pub use plane::{plane_phi1, plane_phi2, PlaneSecondVariant};
pub use prings::{prings_b_constant, prings_closed_form, prings_phi};
pub use transfer::{transfer_double, transfer_gamma_sum, transfer_single};
