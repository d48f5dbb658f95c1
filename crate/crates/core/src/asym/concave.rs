//! Approximation terms for partitions into triangular parts.

use crate::hp::gamma::rgamma_q;
use crate::hp::real::{is_nonpositive_int, ratio, Real};
use crate::hp::zeta::zeta_q;
use crate::qseries::concave_correction_coeffs;

/// a = (sqrt(2 pi)/2) zeta(3/2), the single exponential constant.
pub fn concave_a(digits: u32) -> Real {
    let d = digits + 6;
    (&Real::pi(d).mul_i64(2).sqrt().div_i64(2) * &zeta_q(&ratio(3, 2), d)).with_digits(digits)
}

/// q_k = (c_k/(4 pi)) sum_j a^j n^(j/2-2-k/2) / (j! Gamma(j/2-1-k/2)).
/// The Gamma argument walks a half-integer lattice and lands on
/// nonpositive integers for j = k mod 2, j <= k+2; those terms vanish
/// through 1/Gamma = 0.
pub fn concave_q(n: u64, k: u32, j_cap: u32, digits: u32) -> Real {
    let d = digits + 10;
    let a = concave_a(d);
    let nn = Real::from_u64(n, d);
    let sqrt_n = nn.sqrt();
    let c = concave_correction_coeffs(k, d + 6);
    let ck = c.get(k as usize).with_digits(d);
    if ck.is_zero() {
        return Real::zero(digits);
    }
    let floor_gap = (d as f64 * 3.33) as i64 + 25;
    // n^(j/2 - 2 - k/2) incremental in sqrt n
    let mut pw = nn.powi(-2).mul(&sqrt_n.powi(-(k as i64)));
    let mut fac = Real::from_i64(1, d); // a^j / j!
    let mut g = ratio(-(2 + k as i64), 2); // j/2 - 1 - k/2 at j=0
    let mut rg = rgamma_at(&g, d);
    let mut tot = Real::zero(d);
    let mut max_exp = i64::MIN;
    let mut streak = 0u32;
    for j in 0..=j_cap {
        if j > 0 {
            fac = (&fac * &a).div_i64(j as i64);
            pw = &pw * &sqrt_n;
            // half step: 1/Gamma(g + 1/2) has no division recurrence,
            // recompute on the exact lattice
            g += ratio(1, 2);
            rg = rgamma_at(&g, d);
        }
        if rg.is_zero() {
            continue;
        }
        let term = &(&fac * &pw) * &rg;
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
    (&(&ck / &Real::pi(d).mul_i64(4)) * &tot).with_digits(digits)
}

fn rgamma_at(g: &num_rational::BigRational, d: u32) -> Real {
    if is_nonpositive_int(g) {
        Real::zero(d)
    } else {
        rgamma_q(g, d)
    }
}

/// Growth constant A = (3/2) pi^(1/3) zeta(3/2)^(2/3) in
/// log a_n ~ A n^(1/3).
pub fn concave_growth_constant(digits: u32) -> Real {
    let d = digits + 6;
    let z = zeta_q(&ratio(3, 2), d);
    (&Real::pi(d).pow_ratio(&ratio(1, 3), d) * &z.pow_ratio(&ratio(2, 3), d))
        .mul_i64(3)
        .div_i64(2)
        .with_digits(digits)
}
