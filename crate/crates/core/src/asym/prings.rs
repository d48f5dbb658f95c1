//! Approximation terms for partitions where part m comes in as many
//! colors as m has square divisors.

use crate::hp::bessel::bessel_i;
use crate::hp::real::{ratio, Real};
use crate::hp::zeta::zeta_q;

fn zeta2_sq(d: u32) -> Real {
    let pi = Real::pi(d);
    let z2 = (&pi * &pi).div_i64(6);
    &z2 * &z2
}

fn zeta_half_threehalf(d: u32) -> Real {
    &zeta_q(&ratio(1, 2), d) * &zeta_q(&ratio(3, 2), d)
}

/// Channel constants (a, b): principal a = zeta(2)^2,
/// b = (sqrt(pi)/2) zeta(1/2) zeta(3/2); alternating a2 = 7 zeta(2)^2/16,
/// b2 = (sqrt(pi)/8)(3 sqrt(2) - 1) zeta(1/2) zeta(3/2).
pub fn prings_channel(which: u32, digits: u32) -> (Real, Real) {
    let d = digits;
    match which {
        1 => (zeta2_sq(d), {
            let b = &Real::pi(d).sqrt().div_i64(2) * &zeta_half_threehalf(d);
            b
        }),
        2 => {
            let a = zeta2_sq(d).mul_i64(7).div_i64(16);
            let factor = Real::from_i64(2, d).sqrt().mul_i64(3).sub(&Real::from_i64(1, d));
            let b = &(&Real::pi(d).sqrt().div_i64(8) * &factor) * &zeta_half_threehalf(d);
            (a, b)
        }
        _ => panic!("only channels 1 and 2 exist"),
    }
}

/// (2 pi)^(3/4) (a/n)^(3/8) sum_k (1/k!) (b (n/a)^(1/4))^k
/// I_(k/2-3/4)(2 sqrt(a n)), with the alternating channel carrying
/// (-1)^n. The 1/k! is symmetric with the principal display.
pub fn prings_phi(n: u64, which: u32, k_terms: u32, digits: u32) -> Real {
    let d = digits + 10;
    let (a, b) = prings_channel(which, d);
    let nn = Real::from_u64(n, d);
    let z = (&a * &nn).sqrt().mul_i64(2);
    let big_b = &b * &(&nn / &a).pow_ratio(&ratio(1, 4), d);
    let pref = &Real::pi(d).mul_i64(2).pow_ratio(&ratio(3, 4), d)
        * &(&a / &nn).pow_ratio(&ratio(3, 8), d);
    let floor_gap = (d as f64 * 3.33) as i64 + 25;
    let mut fac = Real::from_i64(1, d); // B^k / k!
    let mut tot = Real::zero(d);
    let mut max_exp = i64::MIN;
    let mut streak = 0u32;
    for k in 0..=k_terms {
        if k > 0 {
            fac = (&fac * &big_b).div_i64(k as i64);
        }
        let nu = ratio(k as i64, 2) - ratio(3, 4);
        let term = &fac * &bessel_i(&nu, &z, d);
        tot = &tot + &term;
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
    let mut v = &pref * &tot;
    if which == 2 && n % 2 == 1 {
        v = v.neg();
    }
    v.with_digits(digits)
}

/// Closed-form growth law (2 pi sqrt(a))^(1/4) / (sqrt(2) n^(5/8)) *
/// exp(2 sqrt(a n) + b (n/a)^(1/4) - b^2/(16 a)).
pub fn prings_closed_form(n: u64, digits: u32) -> Real {
    let d = digits + 10;
    let (a, b) = prings_channel(1, d);
    let nn = Real::from_u64(n, d);
    let pref = &(&Real::pi(d).mul_i64(2) * &a.sqrt()).pow_ratio(&ratio(1, 4), d)
        / &(&Real::from_i64(2, d).sqrt() * &nn.pow_ratio(&ratio(5, 8), d));
    let expo = (&a * &nn).sqrt().mul_i64(2)
        .add(&(&b * &(&nn / &a).pow_ratio(&ratio(1, 4), d)))
        .sub(&(&(&b * &b) / &a.mul_i64(16)));
    (&pref * &expo.exp()).with_digits(digits)
}

/// The two channel B-constants as plain values, for regression pinning.
pub fn prings_b_constant(which: u32, digits: u32) -> Real {
    prings_channel(which, digits + 6).1.with_digits(digits)
}
