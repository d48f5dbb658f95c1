//! Approximation terms for partitions where part j comes in
//! floor((j+1)/2) colors (the strict-plane-partition diagonal product).

use crate::asym::transfer::transfer_double;
use crate::hp::bessel::bessel_i;
use crate::hp::real::{ratio, ratio_int, Real};
use crate::hp::zeta::{zeta_prime_minus1, zeta_q};
use crate::qseries::{plane_correction_coeffs_exact, PlaneVariant};
use num_rational::BigRational;
use num_traits::Zero;

/// Principal-channel constants a = zeta(3)/2, b = pi^2/24,
/// c = 2^(-1/4) exp(zeta'(-1)/2); xi = n + 1/48.
fn xi_of(n: u64) -> BigRational {
    ratio_int(n as i64) + ratio(1, 48)
}

/// Which alternating-channel correction ladder to use: the residue
/// computation gives +13/5760 for the first entry; the reference table
/// carries it with the opposite sign. `Reference` reproduces the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneSecondVariant {
    Resolved,
    Reference,
}

/// Phi_1: c sum_m c_2m (b/xi)^(25/48+m) sum_j (1/j!)(a xi/b)^j
/// I_(2j-25/24-2m)(2 sqrt(b xi)). The inner sum is extended until terms
/// stop contributing, capped at j_cap.
pub fn plane_phi1(n: u64, m_terms: u32, j_cap: u32, digits: u32) -> Real {
    assert!(m_terms >= 1);
    let d = digits + 12;
    let xi = Real::from_ratio(&xi_of(n), d);
    let a = zeta_q(&ratio_int(3), d).div_i64(2);
    let pi = Real::pi(d);
    let b = (&pi * &pi).div_i64(24);
    let c = two_pow_quarter_recip(d).mul(&zeta_prime_minus1(d).div_i64(2).exp());
    let cm = plane_correction_coeffs_exact(m_terms - 1, PlaneVariant::Principal);
    let z = (&b * &xi).sqrt().mul_i64(2);
    let ab_ratio = &(&a * &xi) / &b;
    let b_over_xi = &b / &xi;
    let floor_gap = (d as f64 * 3.33) as i64 + 25;
    let mut tot = Real::zero(d);
    for m in 0..m_terms as usize {
        let coef = &cm[2 * m];
        if coef.is_zero() {
            continue;
        }
        let pw = b_over_xi.pow_ratio(&(ratio(25, 48) + ratio_int(m as i64)), d);
        let mut fac = Real::from_i64(1, d); // (a xi / b)^j / j!
        let mut inner = Real::zero(d);
        let mut max_exp = i64::MIN;
        let mut streak = 0u32;
        for j in 0..=j_cap {
            if j > 0 {
                fac = (&fac * &ab_ratio).div_i64(j as i64);
            }
            let nu = ratio_int(2 * j as i64) - ratio(25, 24) - ratio_int(2 * m as i64);
            let term = &fac * &bessel_i(&nu, &z, d);
            inner = &inner + &term;
            let te = term.exponent2();
            if te > max_exp {
                max_exp = te;
                streak = 0;
            } else {
                streak += 1;
            }
            if streak > 3 && te < max_exp - floor_gap {
                break;
            }
        }
        tot = &tot + &(&(&Real::from_ratio(coef, d) * &pw) * &inner);
    }
    (&c * &tot).with_digits(digits)
}

/// Phi_2: (-1)^n 2^(1/24) exp(zeta'(-1)) sum_m c_2m * double-transfer of
/// t^(1/12+2m) exp(a2/t^2 + b2/t) at a2 = zeta(3)/16, b2 = -pi^2/48.
/// b2 < 0 forces the Gamma-sum route.
pub fn plane_phi2(
    n: u64,
    m_terms: u32,
    j_cap: u32,
    variant: PlaneSecondVariant,
    digits: u32,
) -> Real {
    assert!(m_terms >= 1);
    let d = digits + 12;
    let xi = Real::from_ratio(&xi_of(n), d);
    let a2 = zeta_q(&ratio_int(3), d).div_i64(16);
    let pi = Real::pi(d);
    let b2 = (&pi * &pi).div_i64(48).neg();
    let pref = Real::from_i64(2, d)
        .pow_ratio(&ratio(1, 24), d)
        .mul(&zeta_prime_minus1(d).exp());
    let cm = alternating_coeffs(m_terms - 1, variant);
    let mut tot = Real::zero(d);
    for m in 0..m_terms as usize {
        let coef = &cm[2 * m];
        if coef.is_zero() {
            continue;
        }
        let w = ratio(1, 12) + ratio_int(2 * m as i64);
        let core = transfer_double(
            &w,
            &ratio_int(2),
            &a2,
            &ratio_int(1),
            &b2,
            &xi,
            j_cap,
            j_cap,
            d,
        );
        tot = &tot + &(&Real::from_ratio(coef, d) * &core);
    }
    let mut v = &pref * &tot;
    if n % 2 == 1 {
        v = v.neg();
    }
    v.with_digits(digits)
}

fn alternating_coeffs(k_max: u32, variant: PlaneSecondVariant) -> Vec<BigRational> {
    match variant {
        PlaneSecondVariant::Resolved => {
            plane_correction_coeffs_exact(k_max, PlaneVariant::Alternating)
        }
        PlaneSecondVariant::Reference => {
            let mut s = crate::qseries::plane_correction_exponent(PlaneVariant::Alternating, k_max);
            if s.len() > 2 {
                let flipped = -s[2].clone();
                s[2] = flipped;
            }
            let ps = crate::qseries::PowerSeries::new(crate::qseries::Grading::One, s, 0);
            ps.exp().coeffs
        }
    }
}

fn two_pow_quarter_recip(d: u32) -> Real {
    Real::from_i64(2, d).pow_ratio(&ratio(-1, 4), d)
}
