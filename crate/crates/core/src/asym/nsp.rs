//! Bessel-sum approximations for partitions with all parts >= r.

use crate::asym::transfer::transfer_single;
use crate::dedekind::{coprime_residues, dedekind_sum};
use crate::hp::bernoulli::factorial;
use crate::hp::bessel::bessel_i;
use crate::hp::real::{ratio, ratio_int, Complex, Real};
use crate::qseries::{expand_finite_product, nsp_phi1_coeffs_exact, nsp_phi2_coeffs_exact};
use num_rational::BigRational;
use num_traits::Zero;

/// B_2(r) = r^2 - r + 1/6.
pub fn b2_poly(r: u32) -> BigRational {
    ratio_int(r as i64 * r as i64 - r as i64) + ratio(1, 6)
}

/// Shifted argument by modulus of the route that handles it: the closed
/// routes (k = 1, 2) fold the finite product's linear exponent into the
/// shift, n - B_2(r)/4; the numeric route keeps that exponent inside the
/// product's Taylor coefficients and shifts by the eta term alone,
/// n - 1/24, whatever the modulus.
pub fn nsp_xi(r: u32, n: u64, k: u32) -> BigRational {
    if k <= 2 {
        ratio_int(n as i64) - b2_poly(r) / ratio_int(4)
    } else {
        ratio_int(n as i64) - ratio(1, 24)
    }
}

fn zeta2(d: u32) -> Real {
    let pi = Real::pi(d);
    (&pi * &pi).div_i64(6)
}

/// Principal term: ((r-1)!/sqrt(2 pi)) sum_m c_2m (z2/xi)^(r/2+1/4+m)
/// I_(-(r+1/2+2m))(2 sqrt(z2 xi)), the m sum truncated at j_terms.
pub fn nsp_phi1(r: u32, n: u64, j_terms: u32, digits: u32) -> Real {
    nsp_phi1_impl(r, n, j_terms, digits, false)
}

/// Same sum with the power exponent's r/2 sign flipped. Kept only so
/// the regression test can show this variant is inconsistent with the
/// count oracle; the transfer rule fixes the + sign.
pub fn nsp_phi1_flipped_exponent(r: u32, n: u64, j_terms: u32, digits: u32) -> Real {
    nsp_phi1_impl(r, n, j_terms, digits, true)
}

fn nsp_phi1_impl(r: u32, n: u64, j_terms: u32, digits: u32, flip: bool) -> Real {
    assert!(r >= 2);
    let d = digits + 10;
    let xi_q = nsp_xi(r, n, 1);
    assert!(num_traits::Signed::is_positive(&xi_q), "need xi > 0");
    let xi = Real::from_ratio(&xi_q, d);
    let z2 = zeta2(d);
    let c = nsp_phi1_coeffs_exact(r, j_terms);
    let pref = &Real::from_bigint(&factorial(r as u64 - 1), d)
        / &Real::pi(d).mul_i64(2).sqrt();
    let mut tot = Real::zero(d);
    for m in 0..=j_terms as usize {
        let cm = &c[2 * m];
        if cm.is_zero() {
            continue;
        }
        let term = if !flip {
            // t^a exp(z2/t) with a = r - 1/2 + 2m
            let a = ratio_int(r as i64) - ratio(1, 2) + ratio_int(2 * m as i64);
            transfer_single(&a, &z2, &xi, d)
        } else {
            // exponent (-r/2 + 1/4 + m) as printed; same Bessel order
            let expo = ratio(-(r as i64), 2) + ratio(1, 4) + ratio_int(m as i64);
            let pw = (&z2 / &xi).pow_ratio(&expo, d);
            let z = (&z2 * &xi).sqrt().mul_i64(2);
            let nu = ratio_int(-(r as i64)) - ratio(1, 2) - ratio_int(2 * m as i64);
            &pw * &bessel_i(&nu, &z, d)
        };
        tot = &tot + &(&Real::from_ratio(cm, d) * &term);
    }
    (&pref * &tot).with_digits(digits)
}

/// Alternating-point term for even r: (-1)^n (2^(r-1) (r/2-1)!/sqrt(pi))
/// sum_m d_2m (z2/(4 xi))^(r/4+1/4+m) I_(-(r/2+1/2+2m))(sqrt(z2 xi)).
pub fn nsp_phi2(r: u32, n: u64, j_terms: u32, digits: u32) -> Real {
    assert!(r >= 2 && r % 2 == 0, "alternating route requires even r");
    let d = digits + 10;
    let xi = Real::from_ratio(&nsp_xi(r, n, 2), d);
    let c_quarter = zeta2(d).div_i64(4);
    let dd = nsp_phi2_coeffs_exact(r, j_terms);
    let two_pow = Real::from_i64(2, d).powi(r as i64 - 1);
    let pref = &(&two_pow * &Real::from_bigint(&factorial(r as u64 / 2 - 1), d))
        / &Real::pi(d).sqrt();
    let mut tot = Real::zero(d);
    for m in 0..=j_terms as usize {
        let dm = &dd[2 * m];
        if dm.is_zero() {
            continue;
        }
        // t^a exp(z2/(4t)) with a = r/2 - 1/2 + 2m
        let a = ratio(r as i64, 2) - ratio(1, 2) + ratio_int(2 * m as i64);
        let term = transfer_single(&a, &c_quarter, &xi, d);
        tot = &tot + &(&Real::from_ratio(dm, d) * &term);
    }
    let mut v = &pref * &tot;
    if n % 2 == 1 {
        v = v.neg();
    }
    v.with_digits(digits)
}

/// Per-residue contributions (h, value) to the numeric-route term at
/// modulus k >= 2. Residues h < k/2 carry weight 2 (conjugate pairing),
/// h = k/2 weight 1. Values already include the weight.
pub fn nsp_phi_k_parts(r: u32, n: u64, k: u32, j_terms: u32, digits: u32) -> Vec<(u32, Real)> {
    assert!(k >= 2);
    let d = digits + 10;
    // eta shift only; c_j below absorb the product's own linear term
    let xi = Real::from_ratio(&(ratio_int(n as i64) - ratio(1, 24)), d);
    let z2 = zeta2(d);
    // (z2/(k^2 xi))^(3/4 + j/2) I_(-3/2-j)(2 sqrt(z2 xi)/k), j-indexed
    let z = (&z2 * &xi).sqrt().mul_i64(2).div_i64(k as i64);
    let base = &z2 / &xi.mul_i64((k * k) as i64);
    let mut parts = Vec::new();
    for h in coprime_residues(k) {
        if 2 * h > k {
            break;
        }
        let weight = if 2 * h == k { 1 } else { 2 };
        let ser = expand_finite_product(r - 1, h, k, j_terms, d);
        // exp(pi i s(h,k) - 2 pi i n h / k) with the exponent exact
        let phase_q = dedekind_sum(h as i64, k as i64)
            - ratio(2 * ((n % k as u64) * h as u64) as i64, k as i64);
        let phase = Complex::unit_pi_ratio(&phase_q, d);
        let mut sum = Real::zero(d);
        for j in 0..=j_terms as usize {
            let cj = ser.get(j);
            if cj.is_zero() {
                continue;
            }
            let re = cj.mul(&phase).re;
            let expo = ratio(3, 4) + ratio(j as i64, 2);
            let pw = base.pow_ratio(&expo, d);
            let nu = ratio(-3, 2) - ratio_int(j as i64);
            sum = &sum + &(&(&re * &pw) * &bessel_i(&nu, &z, d));
        }
        let pref = (&Real::from_i64(k as i64, d) / &Real::pi(d).mul_i64(2))
            .sqrt()
            .mul_i64(weight);
        parts.push((h, (&pref * &sum).with_digits(digits)));
    }
    parts
}

/// Numeric-route term at modulus k >= 2, summed over residues.
pub fn nsp_phi_k(r: u32, n: u64, k: u32, j_terms: u32, digits: u32) -> Real {
    let mut tot = Real::zero(digits);
    for (_, v) in nsp_phi_k_parts(r, n, k, j_terms, digits) {
        tot = &tot + &v;
    }
    tot
}
