pub mod bernoulli;
pub mod bessel;
pub mod gamma;
pub mod real;
pub mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_poly, binomial, factorial};
pub use bessel::{bessel_i, bessel_i_asymptotic};
pub use gamma::{gamma_q, gamma_real, rgamma_q};
pub use real::{
    agreement_digits, bits_for, cos_pi_ratio, ratio, ratio_int, reduce_mod2, sin_pi_ratio,
    Complex, Real,
};
pub use zeta::{zeta_prime_minus1, zeta_q, zeta_via_functional_equation};
